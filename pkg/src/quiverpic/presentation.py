"""Finite presentations of the picture group and of the unipotent group of
an A_n orientation, with restriction maps and a plain-text export."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .quiver import (
    MINUS,
    PLUS,
    Root,
    SignVector,
    all_positive_roots,
    ext_orthogonal,
    hom_orthogonal,
    root_form,
)

Letter = tuple[Root, int]  # generator and exponent +-1


@dataclass(frozen=True)
class GroupWord:
    """Word in the free group on the root generators."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for _, e in self.letters:
            if e not in (1, -1):
                raise ValueError("letter exponents must be +-1")

    def reduced(self) -> "GroupWord":
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return GroupWord(tuple(stack))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((r, -e) for r, e in reversed(self.letters)))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            f"x_{r.i}_{r.j}" + ("" if e == 1 else "^-1") for r, e in self.letters
        )


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    """[x, y] = y^-1 x y x^-1."""
    return y.inverse() * x * y * x.inverse()


def _gen(r: Root) -> GroupWord:
    return GroupWord(((r, 1),))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Root, ...]
    relators: tuple[GroupWord, ...]

    def __post_init__(self) -> None:
        gens = set(self.generators)
        for rel in self.relators:
            for r, _ in rel.letters:
                if r not in gens:
                    raise ValueError(f"relator letter {r} is not a generator")


def g0_presentation(eps: SignVector) -> Presentation:
    """Picture group presentation.

    One commuting relator per unordered hom- and ext-orthogonal pair, and
    for every i < j < k one relator [x_ij, x_jk] = x_ik when the sign at j
    is '+', or [x_jk, x_ij] = x_ik when it is '-'.
    """
    n = eps.n
    gens = tuple(all_positive_roots(n))
    relators: list[GroupWord] = []
    for a in gens:
        for b in gens:
            if b <= a:
                continue
            if hom_orthogonal(eps, a, b) and ext_orthogonal(eps, a, b):
                relators.append(commutator(_gen(a), _gen(b)))
    for i in range(n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                left, right, whole = Root(i, j), Root(j, k), Root(i, k)
                if eps.sign(j) == PLUS:
                    rel = commutator(_gen(left), _gen(right)) * _gen(whole).inverse()
                else:
                    rel = commutator(_gen(right), _gen(left)) * _gen(whole).inverse()
                relators.append(rel)
    return Presentation(generators=gens, relators=tuple(relators))


def u_presentation(eps: SignVector) -> Presentation:
    """Unipotent group presentation: for every unordered pair of roots,
    either a plain commutator (when the sum is not a root) or
    [X(a), X(b)] = X(a+b)^s with s = +1 if <a,b> = 0 and -1 otherwise."""
    n = eps.n
    gens = tuple(all_positive_roots(n))
    relators: list[GroupWord] = []
    for a in gens:
        for b in gens:
            if b <= a:
                continue
            if a.j == b.i:  # concatenation: a + b is the root (a.i, b.j]
                s = 1 if root_form(eps, a, b) == 0 else -1
                whole = GroupWord(((Root(a.i, b.j), -s),))
                relators.append(commutator(_gen(a), _gen(b)) * whole)
            else:
                relators.append(commutator(_gen(a), _gen(b)))
    return Presentation(generators=gens, relators=tuple(relators))


def restrict_word(word: GroupWord, vertices: Iterable[int]) -> GroupWord:
    """Delete letters whose support is not contained in the vertex set,
    then freely reduce.  Left inverse of the inclusion of the subquiver."""
    keep = set(vertices)
    kept = tuple(
        (r, e) for r, e in word.letters if set(r.support) <= keep
    )
    return GroupWord(kept).reduced()


def abelianization_matrix(p: Presentation) -> dict[tuple[int, int], int]:
    """Exponent-sum matrix: rows are relators, columns are generators."""
    col = {g: t for t, g in enumerate(p.generators)}
    out: dict[tuple[int, int], int] = {}
    for row, rel in enumerate(p.relators):
        for r, e in rel.letters:
            key = (row, col[r])
            out[key] = out.get(key, 0) + e
    return {k: v for k, v in out.items() if v}


def h1_data(p: Presentation) -> tuple[int, tuple[int, ...]]:
    """Rank and torsion of the abelianization, via Smith normal form."""
    from .homology import smith_normal_form

    snf = smith_normal_form(abelianization_matrix(p))
    rank = len(p.generators) - snf.rank
    torsion = tuple(d for d in snf.diagonal if d > 1)
    return rank, torsion


def export_gap(
    p: Presentation, *, n: int | None = None, eps: SignVector | None = None
) -> str:
    """Stable plain-text form digestible by computational group theory
    tools: a header comment, one gens: line, one rel: line per relator."""
    if n is None:
        n = max(g.j for g in p.generators) if p.generators else 1
    lines = ["# finitely presented group on interval-root generators"]
    lines.append(f"# n: {n}")
    if eps is not None:
        lines.append(f"# eps: {eps}")
    lines.append("gens: " + ", ".join(f"x_{g.i}_{g.j}" for g in p.generators))
    for rel in p.relators:
        lines.append("rel: " + str(rel))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Inverse of export_gap, ignoring comment lines."""
    gens: list[Root] = []
    relators: list[GroupWord] = []

    def parse_root(token: str) -> Root:
        parts = token.split("_")
        if len(parts) != 3 or parts[0] != "x":
            raise ValueError(f"bad generator token {token!r}")
        return Root(int(parts[1]), int(parts[2]))

    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            body = line[len("gens:"):].strip()
            if body:
                gens = [parse_root(tok.strip()) for tok in body.split(",")]
        elif line.startswith("rel:"):
            body = line[len("rel:"):].strip()
            letters: list[Letter] = []
            if body and body != "1":
                for tok in body.split():
                    if tok.endswith("^-1"):
                        letters.append((parse_root(tok[:-3]), -1))
                    else:
                        letters.append((parse_root(tok), 1))
            relators.append(GroupWord(tuple(letters)))
        else:
            raise ValueError(f"unrecognized line {line!r}")
    return Presentation(generators=tuple(gens), relators=tuple(relators))

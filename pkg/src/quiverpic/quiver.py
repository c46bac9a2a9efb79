"""Sign vectors, interval roots and the Euler-Ringel form for A_n line quivers.

Vertices are 1..n.  The arrow between k and k+1 points left (toward k) when
the k-th sign is '+' and right (toward k+1) when it is '-'.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Union

PLUS = "+"
MINUS = "-"

# 'L' means the arrow points left, which is the '+' sign.
_SIGN_ALIASES = {
    "+": PLUS,
    "-": MINUS,
    "−": MINUS,  # unicode minus
    "L": PLUS,
    "l": PLUS,
    "R": MINUS,
    "r": MINUS,
}


class ConsistencyError(RuntimeError):
    """A structural guarantee of the theory failed: a bug, not bad input."""


@dataclass(frozen=True, order=True)
class Root:
    """Positive root with half-open support (i, j], i.e. unit coordinates at
    vertices i+1 .. j.  The extended support is the closed interval [i, j]."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not (0 <= self.i < self.j):
            raise ValueError(
                f"root endpoints must satisfy 0 <= i < j, got ({self.i}, {self.j})"
            )

    @property
    def support(self) -> range:
        return range(self.i + 1, self.j + 1)

    def coords(self, n: int) -> tuple[int, ...]:
        if self.j > n:
            raise ValueError(f"{self} does not fit in a quiver with n={n}")
        return tuple(1 if self.i < t <= self.j else 0 for t in range(1, n + 1))

    def __str__(self) -> str:
        return f"b_{self.i}_{self.j}"


@dataclass(frozen=True, order=True)
class NegativeProjective:
    """Shifted projective at vertex i; stands for the vector -dim P_i."""

    i: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError("vertex index must be >= 1")

    def __str__(self) -> str:
        return f"-p_{self.i}"


AlmostPositiveRoot = Union[Root, NegativeProjective]

DimVector = Sequence[int]


@dataclass(frozen=True, order=True)
class SignVector:
    """Orientation of the A_n line quiver as a tuple of n-1 signs."""

    signs: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        bad = [s for s in self.signs if s not in (PLUS, MINUS)]
        if bad:
            raise ValueError(f"signs must be '+' or '-', got {bad!r}")

    @property
    def n(self) -> int:
        return len(self.signs) + 1

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SignVector":
        text = text.strip()
        signs = []
        for c in text:
            if c in (" ", ",", "(", ")"):
                continue
            if c not in _SIGN_ALIASES:
                raise ValueError(f"unrecognized sign character {c!r} in {text!r}")
            signs.append(_SIGN_ALIASES[c])
        sv = cls(tuple(signs))
        if n is not None and sv.n != n:
            raise ValueError(f"sign string {text!r} has n={sv.n}, expected n={n}")
        return sv

    @classmethod
    def straight(cls, n: int) -> "SignVector":
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls((PLUS,) * (n - 1))

    @classmethod
    def all_orientations(cls, n: int) -> Iterator["SignVector"]:
        if n < 1:
            raise ValueError("n must be >= 1")
        for signs in product((PLUS, MINUS), repeat=n - 1):
            yield cls(signs)

    def sign(self, k: int) -> str:
        """Sign of the arrow between vertices k and k+1, 1 <= k <= n-1."""
        return self.signs[k - 1]

    def __str__(self) -> str:
        return "".join(self.signs)


def all_positive_roots(n: int) -> list[Root]:
    """The n(n+1)/2 positive roots in canonical (lexicographic) order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [Root(i, j) for i in range(n) for j in range(i + 1, n + 1)]


def euler_form(eps: SignVector, v: DimVector, w: DimVector) -> int:
    """Euler-Ringel bilinear form <v, w> for the orientation eps.

    <v,w> = sum_t v_t w_t - sum_{eps_k=+} v_{k+1} w_k - sum_{eps_k=-} v_k w_{k+1}.
    """
    n = eps.n
    if len(v) != n or len(w) != n:
        raise ValueError(f"dimension vectors must have length n={n}")
    total = sum(a * b for a, b in zip(v, w))
    for k in range(1, n):
        if eps.signs[k - 1] == PLUS:
            total -= v[k] * w[k - 1]
        else:
            total -= v[k - 1] * w[k]
    return total


@lru_cache(maxsize=None)
def _root_form(eps: SignVector) -> dict[tuple[Root, Root], int]:
    """Cached table of <a, b> over all ordered pairs of positive roots."""
    n = eps.n
    roots = all_positive_roots(n)
    coords = {r: r.coords(n) for r in roots}
    return {
        (a, b): euler_form(eps, coords[a], coords[b]) for a in roots for b in roots
    }


def root_form(eps: SignVector, a: Root, b: Root) -> int:
    return _root_form(eps)[(a, b)]


def hom_dim(eps: SignVector, a: Root, b: Root) -> int:
    """dim Hom(M_a, M_b); equals max(<a,b>, 0) in finite type."""
    return max(root_form(eps, a, b), 0)


def ext_dim(eps: SignVector, a: Root, b: Root) -> int:
    """dim Ext(M_a, M_b); equals max(-<a,b>, 0) in finite type."""
    return max(-root_form(eps, a, b), 0)


def noncrossing(eps: SignVector, a: Root, b: Root) -> bool:
    """Noncrossing test for roots with four distinct endpoints.

    Raises ValueError when the roots share an endpoint; those pairs are
    classified directly by hom/ext orthogonality instead.
    """
    i, j, k, l = a.i, a.j, b.i, b.j
    if {i, j} & {k, l}:
        raise ValueError(f"{a} and {b} share an endpoint; noncrossing is undefined")
    s = eps.sign
    if k < i < j < l and s(i) == s(j):
        return True
    if i < k < l < j and s(k) == s(l):
        return True
    if i < k < j < l and s(k) != s(j):
        return True
    if k < i < l < j and s(i) != s(l):
        return True
    if j < k or l < i:
        return True
    return False


def hom_orthogonal(eps: SignVector, a: Root, b: Root) -> bool:
    """True when Hom vanishes in both directions.  A root is never
    hom-orthogonal to itself."""
    if a == b:
        return False
    tab = _root_form(eps)
    return tab[(a, b)] <= 0 and tab[(b, a)] <= 0


def ext_orthogonal(eps: SignVector, a: Root, b: Root) -> bool:
    """True when Ext vanishes in both directions; false on the diagonal."""
    if a == b:
        return False
    tab = _root_form(eps)
    return tab[(a, b)] >= 0 and tab[(b, a)] >= 0


def is_hom_orthogonal_set(eps: SignVector, roots: Sequence[Root]) -> bool:
    rs = list(roots)
    for x in range(len(rs)):
        for y in range(x + 1, len(rs)):
            if not hom_orthogonal(eps, rs[x], rs[y]):
                return False
    return True


@lru_cache(maxsize=None)
def projective_root(eps: SignVector, i: int) -> Root:
    """dim P_i as an interval root: the set of vertices reachable from i.

    Walking left from i needs '+' arrows, walking right needs '-' arrows.
    Characterized by euler_form(dim P_i, e_j) = delta_ij.
    """
    n = eps.n
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} out of range 1..{n}")
    a = i
    while a > 1 and eps.sign(a - 1) == PLUS:
        a -= 1
    b = i
    while b < n and eps.sign(b) == MINUS:
        b += 1
    return Root(a - 1, b)


def projective_dim_vector(eps: SignVector, i: int) -> tuple[int, ...]:
    return projective_root(eps, i).coords(eps.n)


def vertex_vector(eps: SignVector, v: AlmostPositiveRoot) -> tuple[int, ...]:
    """Integer vector of an almost positive root (negated dim P_i for the
    shifted projectives)."""
    if isinstance(v, Root):
        return v.coords(eps.n)
    return tuple(-c for c in projective_dim_vector(eps, v.i))


def underlying_vector(eps: SignVector, v: AlmostPositiveRoot) -> tuple[int, ...]:
    """|v|: the dimension vector of the underlying module."""
    if isinstance(v, Root):
        return v.coords(eps.n)
    return projective_dim_vector(eps, v.i)


def cluster_compatible(
    eps: SignVector, u: AlmostPositiveRoot, v: AlmostPositiveRoot
) -> bool:
    """Compatibility of almost positive roots.

    Two positives are compatible when ext-orthogonal; a positive root is
    compatible with -dim P_i exactly when its coordinate at vertex i is 0;
    shifted projectives are mutually compatible.
    """
    u_pos = isinstance(u, Root)
    v_pos = isinstance(v, Root)
    if u_pos and v_pos:
        return ext_orthogonal(eps, u, v)
    if u_pos and not v_pos:
        return v.i not in u.support
    if v_pos and not u_pos:
        return u.i not in v.support
    return True

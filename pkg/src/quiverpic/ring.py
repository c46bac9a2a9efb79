"""The integer cohomology ring: free on products of dual blocks with
pairwise disjoint extended supports, with Koszul signs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .weights import Block, Weight, blocks, degree, enumerate_blocks, is_basic


@dataclass(frozen=True, order=True)
class DualBlock:
    """Dual basis class of a basic one-block weight on support (p, q]."""

    p: int
    q: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if (self.q - self.p) % 2 == 0:
            raise ValueError("dual block support length must be odd")
        if len(self.coords) != self.q - self.p:
            raise ValueError("dual block coords must cover (p, q]")
        path = (0,) + self.coords + (0,)
        if any(abs(b - a) != 1 for a, b in zip(path, path[1:])) or min(self.coords) < 1:
            raise ValueError(f"{self.coords} is not a basic one-block profile")

    @property
    def degree(self) -> int:
        return (self.q - self.p + 1) // 2

    def block(self) -> Block:
        return Block(self.p, self.q, self.coords)

    def __str__(self) -> str:
        return f"d({self.p},{self.q};{''.join(map(str, self.coords))})"


@dataclass(frozen=True, order=True)
class BasisElement:
    """Product of dual blocks with pairwise disjoint extended supports,
    sorted by left endpoint.  The empty product is the unit."""

    factors: tuple[DualBlock, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.factors, self.factors[1:]):
            if not a.q < b.p:
                raise ValueError(
                    f"factors must have disjoint extended supports in order: {self.factors}"
                )

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def weight(self, n: int) -> Weight:
        w = [0] * n
        for f in self.factors:
            for t, c in enumerate(f.coords):
                w[f.p + t] = c
        return tuple(w)

    def __str__(self) -> str:
        return "1" if not self.factors else "*".join(str(f) for f in self.factors)


UNIT = BasisElement(())


@lru_cache(maxsize=None)
def dual_block_basis(n: int, k: int) -> tuple[BasisElement, ...]:
    """Additive basis of the degree-k cohomology for A_n, in canonical
    order.  Its size is ballot(n - k + 1, k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    out: list[BasisElement] = []

    def extend(start: int, remaining: int, factors: list[DualBlock]) -> None:
        if remaining == 0:
            out.append(BasisElement(tuple(factors)))
            return
        for p in range(start, n):
            for d in range(1, remaining + 1):
                q = p + 2 * d - 1
                if q > n:
                    break
                for blk in enumerate_blocks(p, q):
                    factors.append(DualBlock(p, q, blk.coords))
                    extend(q + 1, remaining - d, factors)
                    factors.pop()

    extend(0, k, [])
    return tuple(sorted(out))


def ring_rank(n: int, k: int) -> int:
    return len(dual_block_basis(n, k))


@dataclass
class RingElement:
    """Integer combination of basis elements; zero terms are dropped."""

    terms: dict[BasisElement, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {b: v for b, v in self.terms.items() if v != 0}

    @classmethod
    def of(cls, basis: BasisElement, coeff: int = 1) -> "RingElement":
        return cls({basis: coeff})

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for b, v in other.terms.items():
            out[b] = out.get(b, 0) + v
        return RingElement(out)

    def __neg__(self) -> "RingElement":
        return RingElement({b: -v for b, v in self.terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scaled(self, a: int) -> "RingElement":
        return RingElement({b: a * v for b, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingElement) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms


def _cup_basis(x: BasisElement, y: BasisElement) -> tuple[int, BasisElement] | None:
    """Product of two basis elements: None when extended supports meet,
    otherwise the merged element with its Koszul sign."""
    for f in x.factors:
        for g in y.factors:
            if not (f.q < g.p or g.q < f.p):
                return None
    sign = 1
    for f in x.factors:
        for g in y.factors:
            if g.p < f.p:
                # g moves left past f
                if (f.degree * g.degree) % 2:
                    sign = -sign
    merged = tuple(sorted(x.factors + y.factors, key=lambda d: d.p))
    return sign, BasisElement(merged)


def cup(x: "RingElement | BasisElement", y: "RingElement | BasisElement") -> RingElement:
    """Cup product, extended bilinearly."""
    if isinstance(x, BasisElement):
        x = RingElement.of(x)
    if isinstance(y, BasisElement):
        y = RingElement.of(y)
    out: dict[BasisElement, int] = {}
    for bx, vx in x.terms.items():
        for by, vy in y.terms.items():
            hit = _cup_basis(bx, by)
            if hit is None:
                continue
            sign, merged = hit
            out[merged] = out.get(merged, 0) + sign * vx * vy
    return RingElement(out)


def pair_with_homology(b: BasisElement, w: Sequence[int]) -> int:
    """Evaluation of a basis element on the homology class of a basic
    weight: +-1 when the block decomposition of w matches the factors,
    with the Kunneth sign, else 0."""
    w = tuple(w)
    if not is_basic(w):
        raise ValueError(f"weight {w} is not basic")
    if degree(w) != b.degree:
        raise ValueError(
            f"degree mismatch: element has degree {b.degree}, weight has {degree(w)}"
        )
    wblocks = blocks(w)
    if len(wblocks) != len(b.factors):
        return 0
    for blk, f in zip(wblocks, b.factors):
        if (blk.p, blk.q, blk.coords) != (f.p, f.q, f.coords):
            return 0
    degs = [f.degree for f in b.factors]
    s = sum(degs[i] * degs[j] for i in range(len(degs)) for j in range(i + 1, len(degs)))
    return -1 if s % 2 else 1


def pairing_matrix(n: int, k: int) -> list[list[int]]:
    """Rows: dual-block basis elements; columns: basic weights of degree k."""
    from .weights import enumerate_basic_weights

    basis = dual_block_basis(n, k)
    ws = enumerate_basic_weights(n, k)
    return [[pair_with_homology(b, w) for w in ws] for b in basis]


def structure_constants(n: int) -> list[dict]:
    """All nonzero products of pairs of basis elements, as index triples."""
    max_k = (n + 1) // 2
    bases = {k: dual_block_basis(n, k) for k in range(max_k + 1)}
    index = {b: (k, t) for k, bs in bases.items() for t, b in enumerate(bs)}
    out = []
    for ka in range(1, max_k + 1):
        for kb in range(1, max_k + 1):
            if ka + kb > max_k:
                continue
            for ta, a in enumerate(bases[ka]):
                for tb, b in enumerate(bases[kb]):
                    hit = _cup_basis(a, b)
                    if hit is None:
                        continue
                    sign, merged = hit
                    km, tm = index[merged]
                    out.append(
                        {
                            "left": [ka, ta],
                            "right": [kb, tb],
                            "product": [km, tm],
                            "sign": sign,
                        }
                    )
    return out


def ring_to_json(n: int) -> dict:
    max_k = (n + 1) // 2
    return {
        "n": n,
        "ranks": [ring_rank(n, k) for k in range(max_k + 1)],
        "basis": {
            str(k): [
                [[f.p, f.q, list(f.coords)] for f in b.factors]
                for b in dual_block_basis(n, k)
            ]
            for k in range(max_k + 1)
        },
        "products": structure_constants(n),
    }

"""Admissible weights, their block structure, generic decompositions and
the cut-set parametrization of hom-orthogonal sets of a fixed weight."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .quiver import (
    MINUS,
    PLUS,
    ConsistencyError,
    Root,
    SignVector,
    hom_orthogonal,
)

Weight = tuple[int, ...]


def parse_weight(text: str) -> Weight:
    parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p.strip()]
    w = tuple(int(p) for p in parts)
    if any(c < 0 for c in w):
        raise ValueError(f"weight coordinates must be nonnegative, got {w}")
    return w


def _padded(w: Sequence[int]) -> list[int]:
    return [0, *w, 0]


def is_admissible(w: Sequence[int]) -> bool:
    """Adjacent coordinates differ by at most 1, with w_0 = w_{n+1} = 0."""
    if any(c < 0 for c in w):
        raise ValueError(f"weight coordinates must be nonnegative, got {tuple(w)}")
    p = _padded(w)
    return all(abs(p[t + 1] - p[t]) <= 1 for t in range(len(p) - 1))


def degree(w: Sequence[int]) -> int:
    """Number of ascents w_{t+1} = w_t + 1, counting the entry step from 0."""
    p = _padded(w)
    return sum(1 for t in range(len(p) - 1) if p[t + 1] == p[t] + 1)


def resolution_set(w: Sequence[int]) -> tuple[int, ...]:
    """R(w): interior indices k with w_k = w_{k+1} > 0."""
    return tuple(
        k for k in range(1, len(w)) if w[k - 1] == w[k] and w[k] > 0
    )


def is_basic(w: Sequence[int]) -> bool:
    return is_admissible(w) and not resolution_set(w)


@dataclass(frozen=True, order=True)
class Block:
    """Maximal run of positive coordinates of a weight, on support (p, q]."""

    p: int
    q: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.q - self.p:
            raise ValueError("block coords must cover (p, q]")
        if any(c <= 0 for c in self.coords):
            raise ValueError("block coordinates must be positive")

    @property
    def degree(self) -> int:
        prev = 0
        d = 0
        for c in self.coords:
            if c == prev + 1:
                d += 1
            prev = c
        return d


def blocks(w: Sequence[int]) -> list[Block]:
    out = []
    t = 0
    n = len(w)
    while t < n:
        if w[t] == 0:
            t += 1
            continue
        start = t
        while t < n and w[t] > 0:
            t += 1
        out.append(Block(start, t, tuple(w[start:t])))
    return out


def enumerate_blocks(p: int, q: int) -> list[Block]:
    """All basic one-block weights with support exactly (p, q].

    The length q - p must be odd, say 2j+1; the blocks correspond to Dyck
    paths of length 2j via f(t) = w_{t+1} - 1 and are returned in
    lexicographic order of their coordinates.  There are catalan(j) of them.
    """
    length = q - p
    if length < 1 or length % 2 == 0:
        raise ValueError(f"block length must be odd and positive, got {length}")
    out: list[Block] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == length:
            if prefix[-1] == 1:
                out.append(Block(p, q, tuple(prefix)))
            return
        rest = length - len(prefix)
        for step in (-1, 1):  # smaller continuation first: lexicographic order
            c = prefix[-1] + step
            if c >= 1 and c - 1 <= rest - 1:
                extend(prefix + [c])

    extend([1])
    return out


@lru_cache(maxsize=None)
def ballot(j: int, k: int) -> int:
    """Ballot number: vote sequences with j yeses, k nos, never behind."""
    if k < 0 or j < k:
        return 0
    if j == 0:
        return 1 if k == 0 else 0
    return ballot(j - 1, k) + ballot(j, k - 1)


def catalan(j: int) -> int:
    if j < 0:
        raise ValueError("catalan is defined for j >= 0")
    return comb(2 * j, j) // (j + 1)


def enumerate_basic_weights(n: int, k: int) -> list[Weight]:
    """All basic weights in N^n with exactly k ascents, in lexicographic
    order.  Their number is ballot(n - k + 1, k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    out: list[Weight] = []

    def extend(prefix: list[int], asc: int) -> None:
        t = len(prefix)
        if t == n:
            if prefix and prefix[-1] > 1:
                return
            if asc == k:
                out.append(tuple(prefix))
            return
        prev = prefix[-1] if prefix else 0
        # smaller continuation first: lexicographic output order
        extend(prefix + [max(prev - 1, 0)], asc)
        # the value must be able to come back down to <= 1 by position n
        if asc + 1 <= k and prev + 1 <= n - t:
            extend(prefix + [prev + 1], asc + 1)

    extend([], 0)
    return out


def enumerate_admissible_weights(n: int) -> list[Weight]:
    """All admissible weights in N^n, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Weight] = []

    def extend(prefix: list[int]) -> None:
        t = len(prefix)
        prev = prefix[-1] if prefix else 0
        if t == n:
            if prev <= 1:
                out.append(tuple(prefix))
            return
        for c in range(max(prev - 1, 0), prev + 2):
            if c <= n - t:  # must be able to fall back to <= 1 by the end
                extend(prefix + [c])

    extend([])
    return out


def _interval_bounds(eps: SignVector, w: Sequence[int]) -> list[tuple[int, int]]:
    """Half-open integer intervals (a_t, b_t] over each vertex, following
    the orientation: '+' keeps the lower bound, '-' keeps the upper."""
    n = eps.n
    bounds = [(0, w[0])]
    for t in range(1, n):
        a, b = bounds[-1]
        if eps.sign(t) == PLUS:
            bounds.append((a, a + w[t]))
        else:
            bounds.append((b - w[t], b))
    return bounds


def generic_decomposition(eps: SignVector, w: Sequence[int]) -> Counter:
    """Multiset of roots in the canonical ext-orthogonal decomposition of w.

    The multiplicity of the root (i, j] counts integer heights c lying in
    every column interval strictly inside (i, j] but in neither boundary
    column.
    """
    n = eps.n
    if len(w) != n:
        raise ValueError(f"weight must have length n={n}")
    if any(c < 0 for c in w):
        raise ValueError("weight coordinates must be nonnegative")
    bounds = _interval_bounds(eps, w)

    def in_col(t: int, c: int) -> bool:
        # sentinel columns 0 and n+1 are empty
        if t < 1 or t > n:
            return False
        a, b = bounds[t - 1]
        return a < c <= b

    out: Counter = Counter()
    for i in range(n):
        for j in range(i + 1, n + 1):
            lo = max(bounds[t - 1][0] for t in range(i + 1, j + 1))
            hi = min(bounds[t - 1][1] for t in range(i + 1, j + 1))
            mult = sum(
                1
                for c in range(lo + 1, hi + 1)
                if not in_col(i, c) and not in_col(j + 1, c)
            )
            if mult:
                out[Root(i, j)] = mult
    total = [0] * n
    for r, m in out.items():
        for t in r.support:
            total[t - 1] += m
    if tuple(total) != tuple(w):
        raise ConsistencyError(
            f"generic decomposition of {tuple(w)} sums to {tuple(total)}"
        )
    return out


def cut_set_cell(eps: SignVector, w: Sequence[int], cuts: Iterable[int]) -> tuple[Root, ...]:
    """The unique hom-orthogonal set of weight w whose cut set is the given
    subset of R(w).

    Built by inserting a duplicate vertex after each cut (repeating the
    sign), lowering the inserted coordinate by 1, taking the generic
    decomposition in the enlarged quiver and deleting the inserted
    coordinates again.
    """
    n = eps.n
    if len(w) != n:
        raise ValueError(f"weight must have length n={n}")
    if not is_admissible(w):
        raise ValueError(f"weight {tuple(w)} is not admissible")
    R = set(resolution_set(w))
    cuts = sorted(set(cuts))
    if not set(cuts) <= R:
        raise ValueError(f"cut set {cuts} not contained in R(w)={sorted(R)}")

    big_w: list[int] = []
    inserted: list[int] = []  # 1-based positions in the enlarged quiver
    big_signs: list[str] = []
    for t in range(1, n + 1):
        big_w.append(w[t - 1])
        if t < n:
            big_signs.append(eps.sign(t))
        if t in cuts:
            inserted.append(len(big_w) + 1)
            big_w.append(w[t - 1] - 1)
            big_signs.append(eps.sign(t))
    big_eps = SignVector(tuple(big_signs))

    decomp = generic_decomposition(big_eps, tuple(big_w))
    if any(m != 1 for m in decomp.values()):
        raise ConsistencyError(f"cut construction for {tuple(w)}, {cuts} not multiplicity-free")

    drop = set(inserted)
    kept_before = [0] * (len(big_w) + 1)  # kept vertices with index <= t
    count = 0
    for t in range(1, len(big_w) + 1):
        if t not in drop:
            count += 1
        kept_before[t] = count

    result = []
    for r in decomp:
        i2 = kept_before[r.i] if r.i >= 1 else 0
        j2 = kept_before[r.j]
        if i2 == j2:
            raise ConsistencyError(f"root {r} collapses when removing cut vertices")
        result.append(Root(i2, j2))
    result.sort()

    total = [0] * n
    for r in result:
        for t in r.support:
            total[t - 1] += 1
    if tuple(total) != tuple(w):
        raise ConsistencyError(f"cut-set cell for {tuple(w)}, {cuts} has wrong weight")
    return tuple(result)


def cut_set_of(w: Sequence[int], roots: Sequence[Root]) -> tuple[int, ...]:
    """Elements of R(w) occurring as an endpoint subscript in the set."""
    used = {r.i for r in roots} | {r.j for r in roots}
    return tuple(k for k in resolution_set(w) if k in used)


def enumerate_hom_orth_sets_of_weight(
    eps: SignVector, w: Sequence[int]
) -> list[tuple[Root, ...]]:
    """All pairwise hom-orthogonal sets of positive roots of weight exactly
    w, by direct backtracking over the canonical root order."""
    n = eps.n
    if len(w) != n:
        raise ValueError(f"weight must have length n={n}")
    roots = [
        Root(i, j)
        for i in range(n)
        for j in range(i + 1, n + 1)
        if all(w[t - 1] >= 1 for t in Root(i, j).support)
    ]
    out: list[tuple[Root, ...]] = []
    target = tuple(w)

    def extend(idx: int, chosen: list[Root], remaining: list[int]) -> None:
        if all(c == 0 for c in remaining):
            # nothing further can be added without exceeding the weight
            out.append(tuple(chosen))
            return
        if idx == len(roots):
            return
        # feasibility: the earliest nonzero coordinate must still be coverable
        first = next((t for t, c in enumerate(remaining) if c > 0), None)
        for pos in range(idx, len(roots)):
            r = roots[pos]
            if first is not None and r.i > first:
                break
            if any(remaining[t - 1] < 1 for t in r.support):
                continue
            if all(hom_orthogonal(eps, r, c) for c in chosen):
                nxt = remaining[:]
                for t in r.support:
                    nxt[t - 1] -= 1
                extend(pos + 1, chosen + [r], nxt)

    extend(0, [], list(target))
    return sorted(out)

"""Integer homology of graded complexes via Smith normal form, plus the
closed-form betti numbers coming from basic-weight counting."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence, Union

from .chains import GradedComplex
from .quiver import SignVector
from .weights import ballot, enumerate_basic_weights

MatrixLike = Union[Mapping[tuple[int, int], int], Sequence[Sequence[int]]]


@dataclass(frozen=True)
class SnfResult:
    """Nonzero elementary divisors d_1 | d_2 | ... and the rank."""

    diagonal: tuple[int, ...]
    rank: int


def _to_rows(matrix: MatrixLike, shape: tuple[int, int] | None):
    if isinstance(matrix, Mapping):
        rows: dict[int, dict[int, int]] = {}
        for (r, c), v in matrix.items():
            if v:
                rows.setdefault(r, {})[c] = v
        return rows
    rows = {}
    for r, row in enumerate(matrix):
        d = {c: v for c, v in enumerate(row) if v}
        if d:
            rows[r] = d
    return rows


def smith_normal_form(matrix: MatrixLike, shape: tuple[int, int] | None = None) -> SnfResult:
    """Smith normal form over the integers.

    Sparse elimination with pivots chosen by minimal absolute value and
    then minimal fill; the collected diagonal is made into a divisibility
    chain by gcd/lcm exchanges at the end.
    """
    rows = _to_rows(matrix, shape)
    col_index: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            col_index.setdefault(c, set()).add(r)

    def set_entry(r: int, c: int, v: int) -> None:
        row = rows.setdefault(r, {})
        if v:
            row[c] = v
            col_index.setdefault(c, set()).add(r)
        else:
            if c in row:
                del row[c]
                col_index[c].discard(r)
                if not col_index[c]:
                    del col_index[c]
            if not row:
                rows.pop(r, None)

    def add_row(dst: int, src: int, mult: int) -> None:
        # row_dst += mult * row_src
        for c, v in list(rows.get(src, {}).items()):
            set_entry(dst, c, rows.get(dst, {}).get(c, 0) + mult * v)

    def add_col(dst: int, src: int, mult: int) -> None:
        for r in list(col_index.get(src, set())):
            v = rows[r][src]
            set_entry(r, dst, rows.get(r, {}).get(dst, 0) + mult * v)

    diagonal: list[int] = []
    while rows:
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                score = (abs(v), (len(row) - 1) * (len(col_index[c]) - 1), r, c)
                if best is None or score < best[0]:
                    best = (score, r, c)
        _, pr, pc = best
        while True:
            piv = rows[pr][pc]
            others_col = [r for r in col_index[pc] if r != pr]
            for r in others_col:
                q = rows[r][pc] // piv
                if q:
                    add_row(r, pr, -q)
            leftover = [r for r in col_index.get(pc, set()) if r != pr]
            if leftover:
                # a remainder smaller than the pivot appeared; use it instead
                pr = min(leftover, key=lambda r: abs(rows[r][pc]))
                continue
            piv = rows[pr][pc]
            others_row = [c for c in rows[pr] if c != pc]
            for c in others_row:
                q = rows[pr][c] // piv
                if q:
                    add_col(c, pc, -q)
            leftover_c = [c for c in rows.get(pr, {}) if c != pc]
            if leftover_c:
                pc = min(leftover_c, key=lambda c: abs(rows[pr][c]))
                continue
            break
        diagonal.append(abs(rows[pr][pc]))
        set_entry(pr, pc, 0)

    # enforce the divisibility chain on the collected diagonal
    changed = True
    while changed:
        changed = False
        diagonal.sort()
        for a in range(len(diagonal)):
            for b in range(a + 1, len(diagonal)):
                if diagonal[b] % diagonal[a]:
                    g = gcd(diagonal[a], diagonal[b])
                    diagonal[a], diagonal[b] = g, diagonal[a] * diagonal[b] // g
                    changed = True
    return SnfResult(diagonal=tuple(diagonal), rank=len(diagonal))


def matrix_rank(matrix: MatrixLike) -> int:
    return smith_normal_form(matrix).rank


class InvalidComplexError(ValueError):
    """The boundary maps do not square to zero."""


def _compose_is_zero(
    outer: Mapping[tuple[int, int], int], inner: Mapping[tuple[int, int], int]
) -> bool:
    """Check outer . inner == 0 for sparse matrices."""
    outer_by_col: dict[int, list[tuple[int, int]]] = {}
    for (r, c), v in outer.items():
        outer_by_col.setdefault(c, []).append((r, v))
    acc: dict[tuple[int, int], int] = {}
    for (mid, col), v in inner.items():
        for r, u in outer_by_col.get(mid, ()):
            key = (r, col)
            acc[key] = acc.get(key, 0) + u * v
    return all(v == 0 for v in acc.values())


def boundary_square_is_zero(gc: GradedComplex) -> bool:
    """True when every composite of consecutive boundary maps vanishes."""
    return all(
        _compose_is_zero(gc.matrices[k], gc.matrices[k + 1])
        for k in sorted(gc.matrices)
        if k + 1 in gc.matrices
    )


@dataclass(frozen=True)
class HomologySummary:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def top_degree(self) -> int:
        return len(self.betti) - 1


def homology_of(gc: GradedComplex, max_degree: int | None = None) -> HomologySummary:
    """Integer homology from Smith normal forms of the boundary matrices."""
    if max_degree is None:
        max_degree = max(gc.cells, default=0)
    for k in sorted(gc.matrices):
        if k + 1 in gc.matrices:
            if not _compose_is_zero(gc.matrices[k], gc.matrices[k + 1]):
                raise InvalidComplexError(f"boundary composite nonzero at degree {k + 1}")
    snf = {k: smith_normal_form(m) for k, m in gc.matrices.items()}
    betti = []
    torsion = []
    for k in range(max_degree + 1):
        dim = gc.cell_count(k)
        r_k = snf[k].rank if k in snf else 0
        r_next = snf[k + 1].rank if k + 1 in snf else 0
        betti.append(dim - r_k - r_next)
        if k + 1 in snf:
            torsion.append(tuple(d for d in snf[k + 1].diagonal if d > 1))
        else:
            torsion.append(())
    return HomologySummary(betti=tuple(betti), torsion=tuple(torsion))


def betti_fast(eps: SignVector, k: int) -> int:
    """Rank of H_k by counting basic weights of degree k; orientation-free."""
    return len(enumerate_basic_weights(eps.n, k))


def betti_fast_table(n: int) -> list[int]:
    """Betti numbers b_0..b_n for an A_n quiver via basic-weight counts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [len(enumerate_basic_weights(n, k)) for k in range(n + 1)]


def euler_characteristic(eps: SignVector) -> int:
    """Alternating sum of cell counts."""
    from .chains import all_cells

    return sum((-1) ** k * len(cs) for k, cs in all_cells(eps).items())

"""The cellular chain complex whose k-cells are the k-element
hom-orthogonal sets of positive roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .quiver import (
    ConsistencyError,
    Root,
    SignVector,
    _root_form,
    all_positive_roots,
    hom_orthogonal,
)
from .weights import Weight
from .wide import concat_minimal, generation_chains, is_hom_orthogonal_set, phi_plus


@dataclass(frozen=True, order=True)
class Cell:
    """A pairwise hom-orthogonal set of roots, stored in canonical order."""

    roots: tuple[Root, ...]

    def __post_init__(self) -> None:
        if list(self.roots) != sorted(set(self.roots)):
            raise ValueError("cell roots must be strictly increasing")

    @classmethod
    def of(cls, roots: Iterable[Root]) -> "Cell":
        return cls(tuple(sorted(roots)))

    @property
    def dimension(self) -> int:
        return len(self.roots)

    def weight(self, n: int) -> Weight:
        w = [0] * n
        for r in self.roots:
            for t in r.support:
                w[t - 1] += 1
        return tuple(w)

    def __str__(self) -> str:
        return "{" + ",".join(str(r) for r in self.roots) + "}"


def cell_sort_key(n: int):
    """Canonical cell order: weight lexicographic, then root list."""

    def key(cell: Cell):
        return (cell.weight(n), cell.roots)

    return key


@dataclass
class Chain:
    """Integer combination of equal-dimension cells; zero terms are dropped."""

    terms: dict[Cell, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {c: v for c, v in self.terms.items() if v != 0}
        dims = {c.dimension for c in self.terms}
        if len(dims) > 1:
            raise ValueError(f"mixed cell dimensions {dims} in one chain")

    def add(self, cell: Cell, coeff: int) -> None:
        v = self.terms.get(cell, 0) + coeff
        if v:
            self.terms[cell] = v
        else:
            self.terms.pop(cell, None)

    def __add__(self, other: "Chain") -> "Chain":
        out = dict(self.terms)
        result = Chain(out)
        for c, v in other.terms.items():
            result.add(c, v)
        return result

    def scaled(self, a: int) -> "Chain":
        return Chain({c: a * v for c, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms


def _det_sign(mat: list[list[int]]) -> int:
    """Sign of the determinant of a small integer matrix, via fraction-free
    (Bareiss) elimination."""
    m = [row[:] for row in mat]
    k = len(m)
    sign = 1
    prev = 1
    for col in range(k):
        pivot_row = next((r for r in range(col, k) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    det = m[k - 1][k - 1]
    if det == 0:
        return 0
    return sign if det > 0 else -sign


def boundary(eps: SignVector, cell: Cell) -> Chain:
    """Boundary of a cell: one term per non-relatively-projective generated
    root gamma, namely the perpendicular simples of gamma with sign given by
    the change of basis from the cell to (simples..., gamma)."""
    k = cell.dimension
    out = Chain({})
    if k == 0:
        return out
    tab = _root_form(eps)
    chains = generation_chains(eps, cell.roots)
    pp = sorted(chains)
    members = list(cell.roots)
    index = {r: t for t, r in enumerate(members)}
    for gamma in pp:
        if all(tab[(gamma, d)] >= 0 for d in pp):
            continue  # relatively projective: contributes nothing
        perp = [d for d in pp if tab[(gamma, d)] == 0]
        simples = sorted(concat_minimal(perp))
        if len(simples) != k - 1:
            raise ConsistencyError(
                f"perpendicular of {gamma} in {cell} has {len(simples)} simples"
            )
        if set(phi_plus(eps, tuple(simples))) != set(perp):
            raise ConsistencyError(
                f"perpendicular simples of {gamma} in {cell} do not generate"
            )
        cols = simples + [gamma]
        mat = [[0] * k for _ in range(k)]
        for c, root in enumerate(cols):
            for member in chains[root]:
                mat[index[member]][c] = 1
        sign = _det_sign(mat)
        if sign == 0:
            raise ConsistencyError(f"degenerate change of basis at {gamma} in {cell}")
        target = Cell(tuple(simples))
        if target in out.terms:
            raise ConsistencyError(f"duplicate boundary target {target} for {cell}")
        out.add(target, sign)
    return out


@dataclass
class GradedComplex:
    """Cells by dimension with sparse boundary matrices.

    boundary[k] maps (row, col) -> coefficient, rows indexing cells[k-1]
    and columns indexing cells[k].
    """

    n: int
    eps: SignVector
    cells: dict[int, tuple[Cell, ...]]
    matrices: dict[int, dict[tuple[int, int], int]]

    def dims(self) -> list[int]:
        return sorted(self.cells)

    def cell_count(self, k: int) -> int:
        return len(self.cells.get(k, ()))


def enumerate_cells(eps: SignVector, k: int) -> list[Cell]:
    """All k-element hom-orthogonal sets in canonical order."""
    return list(all_cells(eps).get(k, ()))


@lru_cache(maxsize=None)
def all_cells(eps: SignVector) -> dict[int, tuple[Cell, ...]]:
    """Every hom-orthogonal set of positive roots, grouped by size."""
    n = eps.n
    roots = all_positive_roots(n)
    m = len(roots)
    compat = [[False] * m for _ in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            ok = hom_orthogonal(eps, roots[x], roots[y])
            compat[x][y] = compat[y][x] = ok
    found: dict[int, list[Cell]] = {0: [Cell(())]}

    def extend(start: int, chosen: list[int]) -> None:
        for pos in range(start, m):
            if all(compat[pos][c] for c in chosen):
                chosen.append(pos)
                found.setdefault(len(chosen), []).append(
                    Cell(tuple(roots[t] for t in chosen))
                )
                extend(pos + 1, chosen)
                chosen.pop()

    extend(0, [])
    key = cell_sort_key(n)
    return {k: tuple(sorted(cs, key=key)) for k, cs in sorted(found.items())}


def build_complex(eps: SignVector) -> GradedComplex:
    cells = all_cells(eps)
    n = eps.n
    matrices: dict[int, dict[tuple[int, int], int]] = {}
    for k in range(1, max(cells) + 1):
        rows = {c: t for t, c in enumerate(cells.get(k - 1, ()))}
        mat: dict[tuple[int, int], int] = {}
        for col, cell in enumerate(cells.get(k, ())):
            for target, coeff in boundary(eps, cell).terms.items():
                mat[(rows[target], col)] = coeff
        matrices[k] = mat
    return GradedComplex(n=n, eps=eps, cells=dict(cells), matrices=matrices)


def weight_filtration_check(eps: SignVector) -> bool:
    """Every boundary term has weight equal to or coordinatewise greater
    than the weight of its cell."""
    n = eps.n
    for k, cs in all_cells(eps).items():
        if k == 0:
            continue
        for cell in cs:
            w = cell.weight(n)
            for target in boundary(eps, cell).terms:
                tw = target.weight(n)
                if tw != w and not all(a >= b for a, b in zip(tw, w)):
                    return False
    return True


def subquotient_complex(eps: SignVector, w: Sequence[int]) -> GradedComplex:
    """Cells of weight exactly w with the weight-preserving part of the
    boundary; empty for inadmissible weights."""
    from .weights import enumerate_hom_orth_sets_of_weight, is_admissible

    n = eps.n
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"weight must have length n={n}")
    if not is_admissible(w):
        return GradedComplex(n=n, eps=eps, cells={}, matrices={})
    sets = enumerate_hom_orth_sets_of_weight(eps, w)
    key = cell_sort_key(n)
    cells: dict[int, list[Cell]] = {}
    for s in sets:
        cells.setdefault(len(s), []).append(Cell(s))
    graded = {k: tuple(sorted(cs, key=key)) for k, cs in cells.items()}
    matrices: dict[int, dict[tuple[int, int], int]] = {}
    for k, cs in graded.items():
        if k == 0:
            continue
        rows = {c: t for t, c in enumerate(graded.get(k - 1, ()))}
        mat: dict[tuple[int, int], int] = {}
        for col, cell in enumerate(cs):
            for target, coeff in boundary(eps, cell).terms.items():
                if target.weight(n) == w:
                    if target not in rows:
                        raise ConsistencyError(
                            f"weight-{w} boundary target {target} missing"
                        )
                    mat[(rows[target], col)] = coeff
        matrices[k] = mat
    return GradedComplex(n=n, eps=eps, cells=graded, matrices=matrices)


def complex_to_json(gc: GradedComplex) -> dict:
    """JSON-ready export: per-degree cell bases and sparse boundary triples."""
    degrees = []
    for k in gc.dims():
        entry: dict = {
            "degree": k,
            "cells": [
                [[r.i, r.j] for r in cell.roots] for cell in gc.cells[k]
            ],
        }
        if k >= 1:
            entry["boundary"] = [
                [r, c, v] for (r, c), v in sorted(gc.matrices.get(k, {}).items())
            ]
        degrees.append(entry)
    return {"n": gc.n, "eps": str(gc.eps), "degrees": degrees}

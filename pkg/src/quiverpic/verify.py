"""Cross-module consistency suite.

Each check recomputes a quantity along two independent routes and
compares.  Checks are gated by n so the suite stays desk-scale; a
skipped check reports as passed with a note.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable

from .chains import all_cells, build_complex, subquotient_complex
from .geometry import (
    build_cluster_complex,
    count_top_simplices,
    in_domain,
    link_of,
    local_link_f_vector,
    realize_exact,
    walls,
)
from .homology import (
    betti_fast,
    boundary_square_is_zero,
    homology_of,
)
from .presentation import (
    GroupWord,
    export_gap,
    g0_presentation,
    h1_data,
    parse_presentation,
    restrict_word,
    u_presentation,
)
from .quiver import (
    SignVector,
    all_positive_roots,
    ext_orthogonal,
    hom_orthogonal,
)
from .ring import pairing_matrix, ring_rank
from .weights import (
    ballot,
    catalan,
    cut_set_cell,
    cut_set_of,
    enumerate_admissible_weights,
    enumerate_hom_orth_sets_of_weight,
    is_basic,
    resolution_set,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _ballot_row(n: int) -> list[int]:
    return [ballot(n - k + 1, k) for k in range(n + 1)]


def _check_cells(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    cells = all_cells(eps)
    total = sum(len(cs) for cs in cells.values())
    want = catalan(n + 1)
    if total != want:
        return False, f"{total} cells, expected {want}"
    if sorted(cells) != list(range(n + 1)):
        return False, f"cell dimensions {sorted(cells)}"
    return True, f"{total} cells"


def _check_boundary(eps: SignVector, gc) -> tuple[bool, str]:
    bad = sum(
        1 for mat in gc.matrices.values() for v in mat.values() if v not in (1, -1)
    )
    if bad:
        return False, f"{bad} non-unit coefficients"
    if not boundary_square_is_zero(gc):
        return False, "d.d != 0"
    return True, "d.d = 0, unit coefficients"


def _check_homology(eps: SignVector, summary) -> tuple[bool, str]:
    n = eps.n
    want = tuple(_ballot_row(n))
    if summary.betti != want:
        return False, f"betti {summary.betti} != {want}"
    if any(summary.torsion[k] for k in range(len(summary.torsion))):
        return False, f"torsion {summary.torsion}"
    return True, f"betti {list(summary.betti)}"


def _check_graded(eps: SignVector, summary) -> tuple[bool, str]:
    n = eps.n
    total = [0] * (n + 1)
    for w in enumerate_admissible_weights(n):
        sub = subquotient_complex(eps, w)
        if not sub.cells:
            continue
        hs = homology_of(sub)
        for k, b in enumerate(hs.betti):
            total[k] += b
        if any(hs.torsion[k] for k in range(len(hs.torsion))):
            return False, f"torsion in graded piece {w}"
    if tuple(total) != summary.betti:
        return False, f"graded betti {total} != {list(summary.betti)}"
    return True, "graded betti match"


def _check_acyclicity(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    tested = 0
    for w in enumerate_admissible_weights(n):
        if is_basic(w):
            continue
        hs = homology_of(subquotient_complex(eps, w))
        if any(hs.betti) or any(hs.torsion[k] for k in range(len(hs.torsion))):
            return False, f"weight {w} not acyclic: betti {list(hs.betti)}"
        tested += 1
    return True, f"{tested} nonbasic weights acyclic"


def _check_cutsets(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    weights = 0
    for w in enumerate_admissible_weights(n):
        r = resolution_set(w)
        sets = enumerate_hom_orth_sets_of_weight(eps, w)
        if len(sets) != 2 ** len(r):
            return False, f"weight {w}: {len(sets)} sets, expected 2^{len(r)}"
        built = set()
        for size in range(len(r) + 1):
            for cuts in combinations(r, size):
                roots = cut_set_cell(eps, w, cuts)
                if cut_set_of(w, roots) != cuts:
                    return False, f"weight {w}, cuts {cuts}: round trip failed"
                built.add(frozenset(roots))
        if built != {frozenset(s) for s in sets}:
            return False, f"weight {w}: cut-set cells miss some sets"
        weights += 1
    return True, f"{weights} weights, bijection holds"


def _check_clusters(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    count = count_top_simplices(eps)
    want = catalan(n + 1)
    if count != want:
        return False, f"{count} top simplices, expected {want}"
    return True, f"{count} top simplices"


def _check_links(eps: SignVector) -> tuple[bool, str]:
    cc = build_cluster_complex(eps)
    bases: list[tuple] = [()]
    for d in sorted(cc.simplices):
        bases.extend(cc.simplex_roots(s) for s in cc.simplices[d])
    for rho in bases:
        got = link_of(eps, rho).f_vector()
        want = local_link_f_vector(eps, rho)
        if got != want:
            return False, f"link of {rho}: f-vector {got} != {want}"
    return True, f"{len(bases)} links match local quivers"


def _check_sphere(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    cc = build_cluster_complex(eps)
    tops = cc.simplices.get(n - 1, ())
    faces: dict[tuple[int, ...], int] = {}
    for top in tops:
        for face in combinations(top, n - 1):
            faces[face] = faces.get(face, 0) + 1
    expected = len(cc.simplices.get(n - 2, ())) if n >= 2 else 1
    if len(faces) != expected:
        return False, f"{len(faces)} codim-1 faces, expected {expected}"
    off = {f: c for f, c in faces.items() if c != 2}
    if off:
        return False, f"faces not on two chambers: {sorted(off.items())[:3]}"
    return True, "every codim-1 face on two chambers"


def _check_walls(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    cc = build_cluster_complex(eps)
    ws = walls(eps)
    pieces = sum(len(w.pieces) for w in ws)
    expected = len(cc.simplices.get(n - 2, ())) if n >= 2 else 1
    if pieces != expected:
        return False, f"{pieces} wall pieces, expected {expected}"
    for wall in ws:
        for piece in wall.pieces:
            for v in piece:
                if not in_domain(eps, realize_exact(eps, v), wall.label):
                    return False, f"{v} outside D({wall.label})"
    return True, f"{len(ws)} labels, {pieces} pieces inside their domains"


def _check_presentation(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    roots = all_positive_roots(n)
    g0 = g0_presentation(eps)
    orth = sum(
        1
        for s, a in enumerate(roots)
        for b in roots[s + 1:]
        if hom_orthogonal(eps, a, b) and ext_orthogonal(eps, a, b)
    )
    want = orth + comb(n + 1, 3)
    if len(g0.relators) != want:
        return False, f"{len(g0.relators)} relators, expected {want}"
    rank, torsion = h1_data(g0)
    if rank != n or torsion:
        return False, f"H1 rank {rank}, torsion {torsion}"
    if parse_presentation(export_gap(g0, n=n, eps=eps)) != g0:
        return False, "export round trip failed"
    u = u_presentation(eps)
    if len(u.relators) != comb(len(roots), 2):
        return False, f"{len(u.relators)} unipotent relators"
    if all(s == "+" for s in eps.signs) and not set(g0.relators) <= set(u.relators):
        return False, "straight-orientation relators not contained in unipotent set"
    return True, f"{len(g0.relators)} relators, H1 rank {rank}"


def _check_restriction(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    roots = all_positive_roots(n)
    seed = 97 * n + sum(ord(c) for c in str(eps))
    rng = random.Random(seed)
    for _ in range(200):
        size = rng.randint(1, n)
        j = set(rng.sample(range(1, n + 1), size))
        sub = [r for r in roots if set(r.support) <= j]
        letters = tuple(
            (rng.choice(sub), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))
        ) if sub else ()
        word = GroupWord(letters)
        if restrict_word(word, j) != word.reduced():
            return False, f"round trip failed on {word} with J={sorted(j)}"
    return True, "restriction retracts 200 random words"


def _check_ring(eps: SignVector) -> tuple[bool, str]:
    n = eps.n
    for k in range(n + 1):
        if ring_rank(n, k) != betti_fast(eps, k):
            return False, f"ring rank != betti at degree {k}"
        mat = pairing_matrix(n, k)
        size = len(mat)
        if any(len(row) != size for row in mat):
            return False, f"pairing matrix not square at degree {k}"
        for row in mat:
            if sum(1 for v in row if v) != 1 or any(abs(v) > 1 for v in row):
                return False, f"pairing row not signed unit at degree {k}"
        for c in range(size):
            if sum(1 for row in mat if row[c]) != 1:
                return False, f"pairing column not signed unit at degree {k}"
    return True, "ring ranks match, pairings unimodular"


def verify_orientation(
    eps: SignVector, snf_limit: int = 6, enum_limit: int = 9
) -> list[CheckResult]:
    """Run every check that fits the given bounds for one orientation."""
    n = eps.n
    shared: dict[str, object] = {}

    def graded_complex():
        if "gc" not in shared:
            shared["gc"] = build_complex(eps)
        return shared["gc"]

    def summary():
        if "hs" not in shared:
            shared["hs"] = homology_of(graded_complex())
        return shared["hs"]

    plan: list[tuple[str, int, Callable[[], tuple[bool, str]]]] = [
        ("cells", enum_limit, lambda: _check_cells(eps)),
        ("boundary", enum_limit, lambda: _check_boundary(eps, graded_complex())),
        ("homology", snf_limit, lambda: _check_homology(eps, summary())),
        ("graded", min(snf_limit, 5), lambda: _check_graded(eps, summary())),
        ("acyclicity", snf_limit, lambda: _check_acyclicity(eps)),
        ("cutsets", enum_limit, lambda: _check_cutsets(eps)),
        ("clusters", enum_limit, lambda: _check_clusters(eps)),
        ("links", 4, lambda: _check_links(eps)),
        ("sphere", min(enum_limit, 6), lambda: _check_sphere(eps)),
        ("walls", 5, lambda: _check_walls(eps)),
        ("presentation", snf_limit, lambda: _check_presentation(eps)),
        ("ring", min(enum_limit, 8), lambda: _check_ring(eps)),
        ("restriction", enum_limit, lambda: _check_restriction(eps)),
    ]
    results = []
    for name, bound, fn in plan:
        if n > bound:
            results.append(CheckResult(name, True, f"skipped (n={n} > {bound})"))
            continue
        try:
            passed, detail = fn()
        except Exception as exc:  # a raised inconsistency is a failure
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail))
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)

import itertools
import math
import random

import pytest

from quiverpic.chains import GradedComplex, build_complex, subquotient_complex
from quiverpic.homology import (
    InvalidComplexError,
    betti_fast,
    betti_fast_table,
    boundary_square_is_zero,
    euler_characteristic,
    homology_of,
    matrix_rank,
    smith_normal_form,
)
from quiverpic.quiver import SignVector
from quiverpic.weights import (
    ballot,
    enumerate_admissible_weights,
    is_basic,
)

# frozen reference row by row; index = n, entries = ranks of H^0..H^5
RANK_TABLE = [
    [1, 0],
    [1, 1],
    [1, 2],
    [1, 3, 2],
    [1, 4, 5],
    [1, 5, 9, 5],
    [1, 6, 14, 14],
    [1, 7, 20, 28, 14],
    [1, 8, 27, 48, 42],
    [1, 9, 35, 75, 90, 42],
]


def minor_gcd(rows, k):
    """gcd of all k x k minors, the k-th determinantal divisor."""
    if k == 0:
        return 1
    nr, nc = len(rows), len(rows[0])

    def det(sub):
        size = len(sub)
        if size == 1:
            return sub[0][0]
        total = 0
        for c in range(size):
            minor = [row[:c] + row[c + 1:] for row in sub[1:]]
            total += (-1) ** c * sub[0][c] * det(minor)
        return total

    g = 0
    for rsel in itertools.combinations(range(nr), k):
        for csel in itertools.combinations(range(nc), k):
            sub = [[rows[r][c] for c in csel] for r in rsel]
            g = math.gcd(g, det(sub))
    return g


def sparse_of(rows):
    return {
        (r, c): v
        for r, row in enumerate(rows)
        for c, v in enumerate(row)
        if v
    }


def test_snf_against_determinant_divisors():
    rng = random.Random(411)
    for _ in range(120):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        rows = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
        res = smith_normal_form(sparse_of(rows), shape=(nr, nc))
        divisors = [minor_gcd(rows, k) for k in range(min(nr, nc) + 1)]
        rank = max((k for k, d in enumerate(divisors) if d != 0), default=0)
        assert res.rank == rank
        diag = list(res.diagonal)
        assert len(diag) == rank
        for k in range(1, rank + 1):
            assert divisors[k] == abs(math.prod(diag[:k]))
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0


def test_snf_handles_empty_and_zero():
    res = smith_normal_form({}, shape=(3, 2))
    assert res.rank == 0 and res.diagonal == ()
    assert matrix_rank({(0, 0): 5}) == 1


def test_snf_torsion_example():
    # determinantal divisors 2 and 8 force the diagonal (2, 4)
    res = smith_normal_form({(0, 0): 2, (1, 1): 4})
    assert res.diagonal == (2, 4)
    res2 = smith_normal_form({(0, 0): 2, (0, 1): 4, (1, 0): 4, (1, 1): 2})
    assert res2.diagonal == (2, 6)


def test_full_homology_matches_rank_table():
    for n in range(1, 5):
        want = RANK_TABLE[n] + [0] * (n + 1 - len(RANK_TABLE[n]))
        for eps in SignVector.all_orientations(n):
            summary = homology_of(build_complex(eps))
            assert list(summary.betti) == want
            assert all(t == () for t in summary.torsion)


def test_betti_fast_agrees_with_table():
    for n, row in enumerate(RANK_TABLE):
        table = betti_fast_table(n)
        trimmed = list(table)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        padded = row[:]
        while padded and padded[-1] == 0:
            padded.pop()
        assert trimmed == padded


def test_betti_fast_is_ballot():
    for n in range(1, 10):
        eps = SignVector.straight(n)
        for k in range(0, n + 2):
            assert betti_fast(eps, k) == ballot(n - k + 1, k)


def test_top_degree_and_vanishing_range():
    eps = SignVector.parse("+-+-")
    summary = homology_of(build_complex(eps))
    assert summary.top_degree == 5
    last = max(k for k, b in enumerate(summary.betti) if b)
    assert last == (5 + 1) // 2  # homology dies above floor((n+1)/2)


def test_graded_pieces_sum_to_full():
    for n in range(1, 5):
        for eps in SignVector.all_orientations(n):
            full = homology_of(build_complex(eps))
            total = [0] * (n + 1)
            for w in enumerate_admissible_weights(n):
                part = homology_of(subquotient_complex(eps, w))
                for k, b in enumerate(part.betti):
                    total[k] += b
                assert all(t == () for t in part.torsion)
            assert total == list(full.betti)


def test_nonbasic_weights_are_acyclic():
    for n in range(1, 5):
        for eps in SignVector.all_orientations(n):
            for w in enumerate_admissible_weights(n):
                if is_basic(w):
                    continue
                part = homology_of(subquotient_complex(eps, w))
                assert all(b == 0 for b in part.betti), (str(eps), w)


def test_euler_characteristic_consistency():
    for n in range(1, 6):
        eps = SignVector.straight(n)
        gc = build_complex(eps)
        by_cells = sum((-1) ** k * gc.cell_count(k) for k in gc.dims())
        assert euler_characteristic(eps) == by_cells
        betti = homology_of(gc).betti
        assert by_cells == sum((-1) ** k * b for k, b in enumerate(betti))


def test_broken_complex_is_rejected():
    good = build_complex(SignVector.straight(2))
    bad_mats = dict(good.matrices)
    bad_mats[2] = {(r, c): 1 for (r, c) in bad_mats[2]}
    bad_mats[1] = {(r, c): 1 for r in range(good.cell_count(0))
                   for c in range(good.cell_count(1))}
    bad = GradedComplex(n=good.n, eps=good.eps, cells=good.cells,
                        matrices=bad_mats)
    if boundary_square_is_zero(bad):
        pytest.skip("perturbation accidentally stayed a complex")
    with pytest.raises(InvalidComplexError):
        homology_of(bad)

import itertools
import pytest

from quiverpic.quiver import (
    ConsistencyError,
    NegativeProjective,
    Root,
    SignVector,
    all_positive_roots,
    cluster_compatible,
    euler_form,
    ext_dim,
    ext_orthogonal,
    hom_dim,
    hom_orthogonal,
    is_hom_orthogonal_set,
    noncrossing,
    projective_dim_vector,
    projective_root,
    root_form,
)


def form_oracle(eps, v, w):
    """Matrix-based form: v^T E w with E assembled entry by entry."""
    n = eps.n
    e = [[0] * n for _ in range(n)]
    for t in range(n):
        e[t][t] = 1
    for k in range(1, n):
        if eps.sign(k) == "+":
            e[k][k - 1] -= 1  # arrow (k+1) -> k
        else:
            e[k - 1][k] -= 1  # arrow k -> (k+1)
    return sum(v[r] * e[r][c] * w[c] for r in range(n) for c in range(n))


def test_parse_and_str():
    eps = SignVector.parse("+-+")
    assert str(eps) == "+-+"
    assert eps.n == 4
    assert SignVector.parse("LRL") == eps
    assert SignVector.parse("", n=1).n == 1
    assert str(SignVector.straight(4)) == "+++"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        SignVector.parse("+x")
    with pytest.raises(ValueError):
        SignVector.parse("++", n=5)


def test_all_orientations_count():
    for n in range(1, 6):
        seen = list(SignVector.all_orientations(n))
        assert len(seen) == 2 ** (n - 1)
        assert len(set(seen)) == len(seen)


def test_root_basics():
    r = Root(1, 4)
    assert list(r.support) == [2, 3, 4]
    assert r.coords(5) == (0, 1, 1, 1, 0)
    assert str(r) == "b_1_4"
    with pytest.raises(ValueError):
        Root(3, 3)


def test_all_positive_roots():
    for n in range(1, 7):
        roots = all_positive_roots(n)
        assert len(roots) == n * (n + 1) // 2
        assert roots == sorted(roots)
        assert len(set(roots)) == len(roots)


def test_euler_form_matches_matrix_oracle():
    vectors = list(itertools.product(range(-2, 3), repeat=3))[::7]
    for eps in SignVector.all_orientations(3):
        for v in vectors:
            for w in vectors:
                assert euler_form(eps, v, w) == form_oracle(eps, v, w)


def test_form_bilinear():
    eps = SignVector.parse("+-+-")
    a = (1, 2, 0, 1, 3)
    b = (0, 1, 1, 2, 0)
    c = (2, 0, 1, 0, 1)
    ab = tuple(x + y for x, y in zip(a, b))
    assert euler_form(eps, ab, c) == euler_form(eps, a, c) + euler_form(eps, b, c)
    assert euler_form(eps, c, ab) == euler_form(eps, c, a) + euler_form(eps, c, b)


def test_hom_minus_ext_is_form():
    for n in range(1, 6):
        roots = all_positive_roots(n)
        for eps in SignVector.all_orientations(n):
            for a in roots:
                for b in roots:
                    f = root_form(eps, a, b)
                    assert hom_dim(eps, a, b) - ext_dim(eps, a, b) == f
                    assert hom_dim(eps, a, b) >= 0
                    assert ext_dim(eps, a, b) >= 0


def test_noncrossing_is_mutual_ext_vanishing():
    """The five-case criterion must agree with the form computation."""
    for n in range(1, 7):
        roots = all_positive_roots(n)
        for eps in SignVector.all_orientations(n):
            for a, b in itertools.combinations(roots, 2):
                direct = ext_dim(eps, a, b) == 0 and ext_dim(eps, b, a) == 0
                if {a.i, a.j} & {b.i, b.j}:
                    with pytest.raises(ValueError):
                        noncrossing(eps, a, b)
                else:
                    assert noncrossing(eps, a, b) == direct
                    assert noncrossing(eps, b, a) == direct


def test_orthogonality_false_on_diagonal():
    eps = SignVector.parse("+-")
    for r in all_positive_roots(3):
        assert not hom_orthogonal(eps, r, r)
        assert not ext_orthogonal(eps, r, r)


def test_orthogonality_predicates():
    eps = SignVector.straight(3)
    a, b = Root(0, 1), Root(2, 3)
    assert hom_orthogonal(eps, a, b)
    assert ext_orthogonal(eps, a, b)
    # adjacent intervals extend one another in one direction
    assert not ext_orthogonal(eps, Root(0, 1), Root(1, 2))
    assert is_hom_orthogonal_set(eps, [a, b])
    assert not is_hom_orthogonal_set(eps, [Root(0, 2), Root(1, 2)])


def test_projectives_are_dual_to_simples():
    for n in range(1, 7):
        for eps in SignVector.all_orientations(n):
            for i in range(1, n + 1):
                pi = projective_dim_vector(eps, i)
                for j in range(1, n + 1):
                    ej = Root(j - 1, j).coords(n)
                    want = 1 if i == j else 0
                    assert euler_form(eps, pi, ej) == want


def test_projective_straight_orientation():
    # all arrows point left, so P_i is supported on (0, i]
    eps = SignVector.straight(4)
    for i in range(1, 5):
        assert projective_root(eps, i) == Root(0, i)


def test_cluster_compatible_negatives():
    eps = SignVector.parse("+-")
    p1 = NegativeProjective(1)
    p2 = NegativeProjective(2)
    assert cluster_compatible(eps, p1, p2)
    # a positive root is compatible with -p_i iff i avoids its support
    for r in all_positive_roots(3):
        for i in range(1, 4):
            want = i not in r.support
            assert cluster_compatible(eps, r, NegativeProjective(i)) == want
            assert cluster_compatible(eps, NegativeProjective(i), r) == want


def test_consistency_error_is_runtime_error():
    assert issubclass(ConsistencyError, RuntimeError)

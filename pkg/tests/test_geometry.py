import itertools
import math

import pytest

from quiverpic.geometry import (
    almost_positive_roots,
    build_cluster_complex,
    count_top_simplices,
    in_domain,
    link_of,
    local_link_f_vector,
    picture_stats,
    realize,
    realize_exact,
    render_picture_svg,
    submodule_subroots,
    underlying_root,
    wall_label,
    walls,
)
from quiverpic.quiver import (
    NegativeProjective,
    Root,
    SignVector,
    all_positive_roots,
    cluster_compatible,
    projective_dim_vector,
    projective_root,
)
from quiverpic.weights import catalan


def test_vertex_roster():
    eps = SignVector.parse("+-")
    verts = almost_positive_roots(eps)
    assert len(verts) == 9
    assert verts[:6] == tuple(all_positive_roots(3))
    assert verts[6:] == (
        NegativeProjective(1), NegativeProjective(2), NegativeProjective(3),
    )


def test_pentagon():
    cc = build_cluster_complex(SignVector.parse("+"))
    assert cc.f_vector() == (5, 5)
    assert cc.dimension == 1
    # a pentagon: every vertex lies on exactly two edges
    degree = {v: 0 for v in range(5)}
    for a, b in cc.simplices[1]:
        degree[a] += 1
        degree[b] += 1
    assert set(degree.values()) == {2}


def test_a3_complex():
    cc = build_cluster_complex(SignVector.parse("++"))
    assert cc.f_vector() == (9, 21, 14)
    assert len(cc.top_simplices()) == 14


def test_top_counts_are_catalan():
    for n in range(1, 7):
        for eps in SignVector.all_orientations(n):
            assert count_top_simplices(eps) == catalan(n + 1)


def test_simplices_are_compatible_sets():
    eps = SignVector.parse("-+")
    cc = build_cluster_complex(eps)
    for k, group in cc.simplices.items():
        for simplex in group:
            roots = cc.simplex_roots(simplex)
            assert len(roots) == k + 1
            for a, b in itertools.combinations(roots, 2):
                assert cluster_compatible(eps, a, b)


def test_every_codim_one_face_bounds_two_chambers():
    for n in range(2, 5):
        for eps in SignVector.all_orientations(n):
            cc = build_cluster_complex(eps)
            count = {}
            for top in cc.simplices[n - 1]:
                for face in itertools.combinations(top, n - 1):
                    count[face] = count.get(face, 0) + 1
            assert set(count.values()) == {2}
            assert set(count) == set(cc.simplices[n - 2])


def test_wall_labels_cover_positive_roots():
    for n in range(2, 6):
        for eps in SignVector.all_orientations(n):
            ws = walls(eps)
            assert sorted(w.label for w in ws) == all_positive_roots(n)


def test_wall_label_hand_cases():
    eps = SignVector.straight(2)
    assert wall_label(eps, (Root(0, 1),)) == Root(1, 2)
    eps3 = SignVector.straight(3)
    assert wall_label(eps3, (Root(0, 1), Root(2, 3))) == Root(1, 3)


def test_wall_pieces_lie_in_their_domain():
    for text in ("++", "+-", "-+", "--", "+++", "+-+"):
        eps = SignVector.parse(text)
        for wall in walls(eps):
            for piece in wall.pieces:
                for v in piece:
                    x = realize_exact(eps, v)
                    assert in_domain(eps, x, wall.label)


def test_realization_vectors():
    eps = SignVector.parse("+-")
    assert realize_exact(eps, Root(0, 2)) == (1, 1, 0)
    p2 = projective_dim_vector(eps, 2)
    assert realize_exact(eps, NegativeProjective(2)) == tuple(-c for c in p2)
    for v in almost_positive_roots(eps):
        coords = realize(eps, v)
        assert math.isclose(sum(c * c for c in coords), 1.0, rel_tol=1e-12)


def test_underlying_root():
    eps = SignVector.parse("+-")
    assert underlying_root(eps, Root(1, 3)) == Root(1, 3)
    assert underlying_root(eps, NegativeProjective(1)) == projective_root(eps, 1)


def test_submodule_subroots_orientation():
    # straight quiver: arrows point left, submodules are left-closed
    eps = SignVector.straight(3)
    subs = submodule_subroots(eps, Root(0, 3))
    assert set(subs) == {Root(0, 1), Root(0, 2), Root(0, 3)}
    flipped = SignVector.parse("--")
    subs2 = submodule_subroots(flipped, Root(0, 3))
    assert set(subs2) == {Root(2, 3), Root(1, 3), Root(0, 3)}


def test_in_domain_requires_the_hyperplane():
    eps = SignVector.straight(2)
    # <x, e2> = x2 - 0 must vanish on D(e2) and the submodule ineq holds
    assert in_domain(eps, (1, 0), Root(1, 2))
    assert not in_domain(eps, (1, 1), Root(1, 2))


def test_links_match_local_quiver_prediction():
    for n in range(1, 4):
        for eps in SignVector.all_orientations(n):
            cc = build_cluster_complex(eps)
            rhos = [()]
            for d in sorted(cc.simplices):
                rhos.extend(cc.simplex_roots(s) for s in cc.simplices[d])
            for rho in rhos:
                assert link_of(eps, rho).f_vector() == local_link_f_vector(eps, rho)


def test_picture_stats():
    assert picture_stats(SignVector.parse("+")) == {
        "n": 2, "eps": "+", "vertices": 5, "wall_labels": 3, "regions": 5,
    }
    for text in ("++", "+-", "-+", "--"):
        stats = picture_stats(SignVector.parse(text))
        assert stats["vertices"] == 9
        assert stats["wall_labels"] == 6
        assert stats["regions"] == 14


def test_svg_renders_deterministically():
    for text in ("+", "++", "--"):
        eps = SignVector.parse(text)
        first = render_picture_svg(eps)
        second = render_picture_svg(eps)
        assert first == second
        assert first.startswith("<?xml") or first.startswith("<svg")


def test_svg_content_counts():
    svg2 = render_picture_svg(SignVector.parse("+"))
    assert svg2.count('class="vertex"') == 5
    assert svg2.count('class="wall"') == 3
    svg3 = render_picture_svg(SignVector.parse("-+"))
    assert svg3.count('class="vertex"') == 9
    assert svg3.count('class="wall"') == 6
    assert "-0.0000" not in svg3


def test_svg_rejects_other_ranks():
    with pytest.raises(ValueError):
        render_picture_svg(SignVector.parse("", n=1))
    with pytest.raises(ValueError):
        render_picture_svg(SignVector.straight(4))

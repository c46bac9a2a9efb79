"""Cluster complex on almost positive roots, wall labels, sphere
realization, and the SVG picture for small rank.

All combinatorics is exact; floating point enters only in realize() and
in the renderer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .quiver import (
    AlmostPositiveRoot,
    ConsistencyError,
    NegativeProjective,
    Root,
    SignVector,
    all_positive_roots,
    cluster_compatible,
    ext_dim,
    hom_dim,
    projective_root,
)
from .wide import concat_minimal, local_quiver


def almost_positive_roots(eps: SignVector) -> tuple[AlmostPositiveRoot, ...]:
    """Positive roots in canonical order, then -p_1 .. -p_n."""
    n = eps.n
    out: list[AlmostPositiveRoot] = list(all_positive_roots(n))
    out.extend(NegativeProjective(i) for i in range(1, n + 1))
    return tuple(out)


def underlying_root(eps: SignVector, v: AlmostPositiveRoot) -> Root:
    if isinstance(v, NegativeProjective):
        return projective_root(eps, v.i)
    return v


@dataclass(frozen=True)
class ClusterComplex:
    """Flag complex of pairwise compatible almost positive roots.

    simplices[d] lists the d-simplices as sorted tuples of vertex
    indices, in lexicographic order.
    """

    vertices: tuple[AlmostPositiveRoot, ...]
    simplices: dict[int, tuple[tuple[int, ...], ...]] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return max(self.simplices, default=-1)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(
            len(self.simplices.get(d, ())) for d in range(self.dimension + 1)
        )

    def simplex_roots(self, simplex: Sequence[int]) -> tuple[AlmostPositiveRoot, ...]:
        return tuple(self.vertices[t] for t in simplex)

    def top_simplices(self) -> tuple[tuple[int, ...], ...]:
        return self.simplices.get(self.dimension, ())


def _compatibility_masks(
    eps: SignVector, verts: Sequence[AlmostPositiveRoot]
) -> list[int]:
    masks = [0] * len(verts)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if cluster_compatible(eps, verts[a], verts[b]):
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


def _cliques_by_size(masks: Sequence[int]) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    prefix: list[int] = []

    def extend(allowed: int, start: int) -> None:
        if prefix:
            out.setdefault(len(prefix) - 1, []).append(tuple(prefix))
        m = allowed >> start << start
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            prefix.append(v)
            extend(allowed & masks[v], v + 1)
            prefix.pop()

    extend((1 << len(masks)) - 1, 0)
    return out


def build_cluster_complex(eps: SignVector) -> ClusterComplex:
    verts = almost_positive_roots(eps)
    masks = _compatibility_masks(eps, verts)
    cliques = _cliques_by_size(masks)
    simplices = {d: tuple(cliques.get(d, ())) for d in sorted(cliques)}
    cc = ClusterComplex(vertices=verts, simplices=simplices)
    if cc.dimension != eps.n - 1:
        raise ConsistencyError(f"complex dimension {cc.dimension} != {eps.n - 1}")
    return cc


def count_top_simplices(eps: SignVector) -> int:
    """Number of maximal compatible sets, by pivoted clique search."""
    verts = almost_positive_roots(eps)
    masks = _compatibility_masks(eps, verts)
    count = 0

    def bron_kerbosch(p: int, x: int) -> None:
        nonlocal count
        if not p and not x:
            count += 1
            return
        both = p | x
        pivot, best = -1, -1
        m = both
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            deg = bin(p & masks[u]).count("1")
            if deg > best:
                pivot, best = u, deg
        cand = p & ~masks[pivot]
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand &= cand - 1
            bron_kerbosch(p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    bron_kerbosch((1 << len(verts)) - 1, 0)
    return count


def _is_perpendicular(eps: SignVector, source: Root, gamma: Root) -> bool:
    return hom_dim(eps, source, gamma) == 0 and ext_dim(eps, source, gamma) == 0


def wall_label(eps: SignVector, rho: Iterable[AlmostPositiveRoot]) -> Root:
    """The unique positive root whose hyperplane carries the codim-1
    simplex rho: every vertex module maps and extends trivially to it."""
    members = tuple(rho)
    if len(members) != eps.n - 1:
        raise ValueError(f"wall simplex needs {eps.n - 1} vertices")
    for s, a in enumerate(members):
        for b in members[s + 1:]:
            if not cluster_compatible(eps, a, b):
                raise ValueError("wall simplex vertices must be compatible")
    sources = [underlying_root(eps, v) for v in members]
    found = [
        gamma
        for gamma in all_positive_roots(eps.n)
        if all(_is_perpendicular(eps, src, gamma) for src in sources)
    ]
    if len(found) != 1:
        raise ConsistencyError(
            f"expected one wall label for {members}, found {found}"
        )
    return found[0]


@dataclass(frozen=True)
class Wall:
    label: Root
    pieces: tuple[tuple[AlmostPositiveRoot, ...], ...]


def walls(eps: SignVector) -> tuple[Wall, ...]:
    """All codim-1 simplices of the complex, grouped by label."""
    cc = build_cluster_complex(eps)
    grouped: dict[Root, list[tuple[AlmostPositiveRoot, ...]]] = {}
    pieces = cc.simplices.get(eps.n - 2, ((),) if eps.n == 1 else ())
    for simplex in pieces:
        members = cc.simplex_roots(simplex)
        grouped.setdefault(wall_label(eps, members), []).append(members)
    return tuple(
        Wall(label=label, pieces=tuple(grouped[label]))
        for label in sorted(grouped)
    )


def realize_exact(eps: SignVector, v: AlmostPositiveRoot) -> tuple[int, ...]:
    """Unnormalized integer coordinates of a vertex: the dimension
    vector, negated for negative projectives."""
    n = eps.n
    if isinstance(v, NegativeProjective):
        coords = projective_root(eps, v.i).coords(n)
        return tuple(-c for c in coords)
    return v.coords(n)


def realize(eps: SignVector, v: AlmostPositiveRoot) -> tuple[float, ...]:
    coords = realize_exact(eps, v)
    norm = math.sqrt(sum(c * c for c in coords))
    return tuple(c / norm for c in coords)


def submodule_subroots(eps: SignVector, beta: Root) -> tuple[Root, ...]:
    """Subintervals of beta closed under the arrows of the quiver, i.e.
    dimension vectors of submodules of the interval module."""
    out = []
    for k in range(beta.i, beta.j):
        if k != beta.i and eps.sign(k) != "-":
            continue
        for l in range(k + 1, beta.j + 1):
            if l == beta.j or eps.sign(l) == "+":
                out.append(Root(k, l))
    return tuple(out)


def in_domain(eps: SignVector, x: Sequence[int], beta: Root) -> bool:
    """Membership of an exact vector in D(beta): on the hyperplane of
    beta and weakly unstable against every submodule subroot."""
    n = eps.n
    if len(x) != n:
        raise ValueError(f"vector length {len(x)} != {n}")

    def form(w: Root) -> int:
        wc = w.coords(n)
        total = sum(x[t] * wc[t] for t in range(n))
        for k in range(1, n):
            if eps.sign(k) == "+":
                total -= x[k] * wc[k - 1]
            else:
                total -= x[k - 1] * wc[k]
        return total

    if form(beta) != 0:
        return False
    return all(form(sub) <= 0 for sub in submodule_subroots(eps, beta))


def link_of(eps: SignVector, rho: Iterable[AlmostPositiveRoot]) -> ClusterComplex:
    """Link of a simplex: the induced flag complex on the compatible
    vertices outside it."""
    members = tuple(rho)
    for s, a in enumerate(members):
        for b in members[s + 1:]:
            if not cluster_compatible(eps, a, b):
                raise ValueError("link base must be a simplex")
    verts = tuple(
        v
        for v in almost_positive_roots(eps)
        if v not in members
        and all(cluster_compatible(eps, v, m) for m in members)
    )
    masks = _compatibility_masks(eps, verts)
    cliques = _cliques_by_size(masks)
    simplices = {d: tuple(cliques.get(d, ())) for d in sorted(cliques)}
    return ClusterComplex(vertices=verts, simplices=simplices)


def perpendicular_simples(
    eps: SignVector, rho: Iterable[AlmostPositiveRoot]
) -> tuple[Root, ...]:
    """Simple objects of the perpendicular category of a simplex."""
    members = tuple(rho)
    sources = [underlying_root(eps, v) for v in members]
    perp = [
        gamma
        for gamma in all_positive_roots(eps.n)
        if all(_is_perpendicular(eps, src, gamma) for src in sources)
    ]
    simples = concat_minimal(perp)
    if len(simples) != eps.n - len(members):
        raise ConsistencyError(
            f"perpendicular of {members} has {len(simples)} simples, "
            f"expected {eps.n - len(members)}"
        )
    return simples


def local_link_f_vector(
    eps: SignVector, rho: Iterable[AlmostPositiveRoot]
) -> tuple[int, ...]:
    """f-vector predicted for link_of(rho): the join of the cluster
    complexes of the connected components of the local quiver on the
    perpendicular simples."""
    simples = perpendicular_simples(eps, rho)
    poly = [1]
    if simples:
        quiver = local_quiver(eps, simples)
        for roots, sub_eps in quiver.components:
            sub = build_cluster_complex(sub_eps)
            q = [1] + [len(sub.simplices.get(d, ())) for d in range(len(roots))]
            poly = [
                sum(poly[a] * q[s - a] for a in range(len(poly)) if 0 <= s - a < len(q))
                for s in range(len(poly) + len(q) - 1)
            ]
    return tuple(poly[1:])


# renderer constants, fixed for byte determinism
_PALETTE = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
)
_CANVAS = 600.0
_MARGIN = 40.0
_ARC_SAMPLES = 33  # 32 segments


def _fmt(value: float) -> str:
    r = round(value, 4)
    if r == 0:
        r = 0.0
    return format(r, ".4f")


def _dot(a: Sequence[float], b: Sequence[float]) -> float:
    return sum(x * y for x, y in zip(a, b))


def _cross(a: Sequence[float], b: Sequence[float]) -> tuple[float, float, float]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _normalize(a: Sequence[float]) -> tuple[float, ...]:
    norm = math.sqrt(_dot(a, a))
    return tuple(x / norm for x in a)


def _slerp(a: Sequence[float], b: Sequence[float], count: int) -> list[tuple[float, ...]]:
    omega = math.acos(max(-1.0, min(1.0, _dot(a, b))))
    if omega < 1e-12:
        return [tuple(a)] * count
    out = []
    for s in range(count):
        t = s / (count - 1)
        ca = math.sin((1.0 - t) * omega) / math.sin(omega)
        cb = math.sin(t * omega) / math.sin(omega)
        out.append(tuple(ca * x + cb * y for x, y in zip(a, b)))
    return out


def _svg_header(width: float, height: float) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]


def _render_circle(eps: SignVector) -> str:
    verts = almost_positive_roots(eps)
    center = _CANVAS / 2.0
    radius = center - _MARGIN * 2
    labeled: dict[Root, list[tuple[float, float]]] = {}
    for v in verts:
        x, y = realize(eps, v)
        labeled.setdefault(wall_label(eps, [v]), []).append((x, y))
    lines = _svg_header(_CANVAS, _CANVAS)
    lines.append(
        f'<circle cx="{_fmt(center)}" cy="{_fmt(center)}" r="{_fmt(radius)}" '
        'fill="none" stroke="#cccccc" stroke-width="1"/>'
    )
    for t, label in enumerate(sorted(labeled)):
        color = _PALETTE[t % len(_PALETTE)]
        lines.append(f'<g class="wall" data-label="{label}">')
        for x, y in labeled[label]:
            px = center + radius * x
            py = center - radius * y
            lines.append(
                f'<circle class="vertex" cx="{_fmt(px)}" cy="{_fmt(py)}" '
                f'r="4" fill="{color}"/>'
            )
            lx = center + (radius + 18.0) * x
            ly = center - (radius + 18.0) * y
            lines.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" fill="{color}" '
                'font-family="monospace" font-size="12" '
                f'text-anchor="middle">{label}</text>'
            )
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_sphere(eps: SignVector) -> str:
    cc = build_cluster_complex(eps)
    verts = cc.vertices
    points = [realize(eps, v) for v in verts]
    by_label: dict[Root, list[tuple[int, int]]] = {}
    for a, b in cc.simplices[1]:
        label = wall_label(eps, (verts[a], verts[b]))
        by_label.setdefault(label, []).append((a, b))

    arcs: dict[tuple[int, int], list[tuple[float, ...]]] = {}
    for pairs in by_label.values():
        for a, b in pairs:
            arcs[(a, b)] = _slerp(points[a], points[b], _ARC_SAMPLES)

    negatives = [
        points[t] for t, v in enumerate(verts) if isinstance(v, NegativeProjective)
    ]
    pole = _normalize([-sum(p[c] for p in negatives) for c in range(3)])
    nudge = 1e-3 / math.sqrt(3.0)
    for _ in range(16):
        worst = max(
            _dot(s, pole) for samples in arcs.values() for s in samples
        )
        if worst < 1.0 - 1e-6:
            break
        pole = _normalize([p + nudge for p in pole])
    axis = (0.0, 0.0, 1.0) if abs(pole[2]) < 0.9 else (0.0, 1.0, 0.0)
    u = _normalize(_cross(axis, pole))
    w = _cross(pole, u)

    def project(x: Sequence[float]) -> tuple[float, float]:
        t = 1.0 / (1.0 - _dot(x, pole))
        return (_dot(x, u) * t, _dot(x, w) * t)

    flat_arcs = {key: [project(s) for s in samples] for key, samples in arcs.items()}
    flat_pts = [project(p) for p in points]
    every = [q for poly in flat_arcs.values() for q in poly] + flat_pts
    xs = [q[0] for q in every]
    ys = [q[1] for q in every]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = (_CANVAS - 2 * _MARGIN) / span
    x0 = (min(xs) + max(xs)) / 2.0
    y0 = (min(ys) + max(ys)) / 2.0

    def to_canvas(q: tuple[float, float]) -> tuple[float, float]:
        return (
            _CANVAS / 2.0 + (q[0] - x0) * scale,
            _CANVAS / 2.0 - (q[1] - y0) * scale,
        )

    lines = _svg_header(_CANVAS, _CANVAS)
    lines.append('<g class="walls" fill="none" stroke-width="1.5">')
    for t, label in enumerate(sorted(by_label)):
        color = _PALETTE[t % len(_PALETTE)]
        lines.append(f'<g class="wall" data-label="{label}" stroke="{color}">')
        for key in by_label[label]:
            pts = " ".join(
                f"{_fmt(cx)},{_fmt(cy)}"
                for cx, cy in (to_canvas(q) for q in flat_arcs[key])
            )
            lines.append(f'<polyline points="{pts}"/>')
        mid = to_canvas(flat_arcs[by_label[label][0]][_ARC_SAMPLES // 2])
        lines.append(
            f'<text x="{_fmt(mid[0])}" y="{_fmt(mid[1] - 4.0)}" fill="{color}" '
            'stroke="none" font-family="monospace" font-size="12" '
            f'text-anchor="middle">{label}</text>'
        )
        lines.append("</g>")
    lines.append("</g>")
    lines.append('<g class="vertices" fill="black">')
    for q in flat_pts:
        cx, cy = to_canvas(q)
        lines.append(
            f'<circle class="vertex" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3"/>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_picture_svg(eps: SignVector) -> str:
    """SVG of the semi-invariant picture.  Supported for n = 2 and 3."""
    if eps.n == 2:
        return _render_circle(eps)
    if eps.n == 3:
        return _render_sphere(eps)
    raise ValueError(f"picture rendering supports n in (2, 3), got {eps.n}")


def picture_stats(eps: SignVector) -> dict:
    """Vertex, wall-label and region counts of the picture."""
    n = eps.n
    if n not in (2, 3):
        raise ValueError(f"picture stats support n in (2, 3), got {n}")
    cc = build_cluster_complex(eps)
    f = cc.f_vector()
    labels = {
        wall_label(eps, cc.simplex_roots(s)) for s in cc.simplices[n - 2]
    }
    if n == 2:
        regions = f[1]
    else:
        regions = f[1] - f[0] + 2  # Euler count for the projected graph
        if regions != f[2]:
            raise ConsistencyError(
                f"Euler region count {regions} != chamber count {f[2]}"
            )
    return {
        "n": n,
        "eps": str(eps),
        "vertices": f[0],
        "wall_labels": len(labels),
        "regions": regions,
    }

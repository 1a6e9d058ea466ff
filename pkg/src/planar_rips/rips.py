"""Unit disk graphs and planar-Rips complexes of rational point clouds."""
from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .complex import ComplexError, FlagComplex, Graph, is_closed, is_pure
from .geom import (Crossing, GeometryError, Location, Point2, cross, in_triangle,
                   segments_intersect, squared_distance, to_rational)

# integer coordinates below this bound keep every cross product inside int64
_INT64_COORD_BOUND = 1 << 28


class ThresholdMode(enum.Enum):
    STRICT = "strict"    # edge iff distance < r
    AT_MOST = "atmost"   # edge iff distance <= r


@dataclass(frozen=True)
class PointCloud:
    points: tuple
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point2) else Point2.of(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "scale", to_rational(self.scale))
        if self.scale <= 0:
            raise GeometryError("scale r must be positive")
        if len(set(pts)) != len(pts):
            seen: dict = {}
            for i, p in enumerate(pts):
                if p in seen:
                    raise GeometryError(f"duplicate points {seen[p]} and {i} at {p}")
                seen[p] = i

    @classmethod
    def of(cls, points: Iterable, scale=1) -> "PointCloud":
        return cls(tuple(points), to_rational(scale))

    def __len__(self) -> int:
        return len(self.points)

    def integer_coords(self) -> tuple[list[tuple[int, int]], int, int]:
        """Integer points, the common denominator D, and (r * D) ** 2."""
        den = self.scale.denominator
        for p in self.points:
            den = math.lcm(den, p.x.denominator, p.y.denominator)
        ints = [(int(p.x * den), int(p.y * den)) for p in self.points]
        return ints, den, int(self.scale * den) ** 2

    def translated(self, dx, dy) -> "PointCloud":
        dx, dy = to_rational(dx), to_rational(dy)
        return PointCloud(tuple(Point2(p.x + dx, p.y + dy) for p in self.points), self.scale)


def _fits_int64(ints: Sequence[tuple[int, int]]) -> bool:
    return all(abs(x) < _INT64_COORD_BOUND and abs(y) < _INT64_COORD_BOUND for x, y in ints)


def build_udg(cloud: PointCloud, mode: ThresholdMode = ThresholdMode.STRICT) -> Graph:
    ints, _, r2 = cloud.integer_coords()
    n = len(ints)
    strict = mode is ThresholdMode.STRICT
    if n and _fits_int64(ints) and r2 < (1 << 60):
        arr = np.array(ints, dtype=np.int64)
        diff = arr[:, None, :] - arr[None, :, :]
        d2 = (diff * diff).sum(axis=2)
        adj = d2 < r2 if strict else d2 <= r2
        iu, ju = np.nonzero(np.triu(adj, k=1))
        edges = list(zip(iu.tolist(), ju.tolist()))
    else:
        edges = []
        for i, j in itertools.combinations(range(n), 2):
            d2 = squared_distance(ints[i], ints[j])
            if (d2 < r2) if strict else (d2 <= r2):
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def build_rips(cloud: PointCloud, mode: ThresholdMode = ThresholdMode.STRICT) -> FlagComplex:
    return FlagComplex(build_udg(cloud, mode))


def gen_cross_polytope_points(n: int) -> PointCloud:
    """Points on a regular (2n+2)-gon whose Rips complex is the n-dim cross-polytope sphere."""
    if n < 2:
        raise GeometryError("cross-polytope generator needs n >= 2")
    m = n + 1
    k = 2 * m
    upper = 1 / math.sin((m - 1) * math.pi / (2 * m))
    # 2R = 11/10 is comfortably inside the window for the hexagon and octagon
    two_r = Fraction(11, 10) if Fraction(11, 10) < upper - 1e-9 else \
        Fraction((1 + upper) / 2).limit_denominator(10 ** 6)
    radius = two_r / 2
    for digits in (4, 6, 9, 12, 16, 24):
        den = 10 ** digits
        half = []
        for i in range(m):
            t = 2 * math.pi * i / k
            half.append(Point2(Fraction(round(float(radius) * math.cos(t) * den), den),
                               Fraction(round(float(radius) * math.sin(t) * den), den)))
        pts = half + [Point2(-p.x, -p.y) for p in half]
        cloud = PointCloud(tuple(pts))
        if _is_cross_polytope_udg(build_udg(cloud), m):
            return cloud
    raise GeometryError(f"could not rationalize the {k}-gon for n={n}")


def _is_cross_polytope_udg(g: Graph, m: int) -> bool:
    # vertex i is non-adjacent exactly to its antipode i + m
    return all(set(range(2 * m)) - g.adj[i] == {i, (i + m) % (2 * m)} for i in range(2 * m))


def _crossing_pairs(ints: list[tuple[int, int]], edges: list[tuple[int, int]]) -> list:
    pairs = []
    if not edges:
        return pairs
    if _fits_int64(ints):
        pts = np.array(ints, dtype=np.int64)
        e = np.array(edges, dtype=np.int64)
        p, q = pts[e[:, 0]], pts[e[:, 1]]
        dx = q[:, 0] - p[:, 0]
        dy = q[:, 1] - p[:, 1]
        for i in range(len(edges) - 1):
            js = np.arange(i + 1, len(edges))
            a, b = edges[i]
            share = (e[js, 0] == a) | (e[js, 0] == b) | (e[js, 1] == a) | (e[js, 1] == b)
            js = js[~share]
            if not len(js):
                continue
            # sides of the other edge's endpoints relative to edge i, and vice versa
            s1 = np.sign(dx[i] * (p[js, 1] - p[i, 1]) - dy[i] * (p[js, 0] - p[i, 0]))
            s2 = np.sign(dx[i] * (q[js, 1] - p[i, 1]) - dy[i] * (q[js, 0] - p[i, 0]))
            s3 = np.sign(dx[js] * (p[i, 1] - p[js, 1]) - dy[js] * (p[i, 0] - p[js, 0]))
            s4 = np.sign(dx[js] * (q[i, 1] - p[js, 1]) - dy[js] * (q[i, 0] - p[js, 0]))
            proper = (s1 * s2 < 0) & (s3 * s4 < 0)
            collinear = (s1 == 0) & (s2 == 0) & (s3 == 0) & (s4 == 0)
            for j in js[proper].tolist():
                pairs.append((edges[i], edges[j]))
            for j in js[collinear].tolist():
                c, d = edges[j]
                if segments_intersect((ints[a], ints[b]), (ints[c], ints[d])) is Crossing.INTERIOR_CROSS:
                    pairs.append((edges[i], edges[j]))
    else:
        for (a, b), (c, d) in itertools.combinations(edges, 2):
            if len({a, b, c, d}) < 4:
                continue
            if segments_intersect((ints[a], ints[b]), (ints[c], ints[d])) is Crossing.INTERIOR_CROSS:
                pairs.append(((a, b), (c, d)))
    return sorted(pairs)


def intersecting_edge_pairs(cloud: PointCloud, complex_: FlagComplex) -> list:
    """Vertex-disjoint edge pairs whose open segments share a point, sorted."""
    _check_sizes(cloud, complex_)
    ints, _, _ = cloud.integer_coords()
    return _crossing_pairs(ints, complex_.graph.edges())


def _check_sizes(cloud: PointCloud, complex_: FlagComplex) -> None:
    if len(cloud) != complex_.n_vertices:
        raise ComplexError(
            f"cloud has {len(cloud)} points but the complex has {complex_.n_vertices} vertices")


class ConfigurationError(ComplexError):
    """A crossing pair that does not induce the expected four-vertex pattern."""


@dataclass(frozen=True)
class Gamma2Config:
    """Facets {a,b,c} and {a,b,d} with base {a,b}; c and d non-adjacent.

    The crossing edges are a-d and b-c.
    """
    a: int
    b: int
    c: int
    d: int

    @property
    def base(self) -> tuple[int, int]:
        return (self.a, self.b)


def gamma2_from_crossing(g: Graph, e1: tuple, e2: tuple) -> Gamma2Config:
    (p, q), (s, t) = e1, e2
    missing = [(x, y) for x in (p, q) for y in (s, t) if not g.has_edge(x, y)]
    if len(missing) != 1:
        raise ConfigurationError(
            f"crossing edges {e1} and {e2} have {len(missing)} non-adjacent cross pairs, expected 1")
    d, c = missing[0]
    a = q if d == p else p
    b = t if c == s else s
    return Gamma2Config(a, b, c, d)


def is_obtuse(cfg: Gamma2Config, pts: Sequence) -> bool:
    """Angles CAB and ABD sum to more than a straight angle."""
    a, b, c, d = (pts[v] for v in (cfg.a, cfg.b, cfg.c, cfg.d))
    o = cross(a, b, c)
    ca = (c[0] - a[0], c[1] - a[1])
    db = (d[0] - b[0], d[1] - b[1])
    t = ca[0] * db[1] - ca[1] * db[0]
    return (t < 0 < o) or (o < 0 < t)


def _require_pure_closed_2(complex_: FlagComplex) -> None:
    pure, dim = is_pure(complex_)
    if not pure or dim != 2:
        sizes = {len(f) for f in complex_.facets}
        bad = next(f for f in complex_.facets if len(f) != 3) if sizes != {3} else None
        raise ComplexError(f"complex is not pure 2-dimensional (facet {bad})")
    if not is_closed(complex_):
        from .complex import ridge_degrees
        bad = next(r for r, k in sorted(ridge_degrees(complex_).items()) if k < 2)
        raise ComplexError(f"complex is not closed: edge {bad} lies in a single triangle")


def gamma2_configurations(cloud: PointCloud, complex_: FlagComplex,
                          check_obtuse: bool = True) -> list[Gamma2Config]:
    _check_sizes(cloud, complex_)
    _require_pure_closed_2(complex_)
    pts = cloud.points
    out = []
    for e1, e2 in intersecting_edge_pairs(cloud, complex_):
        cfg = gamma2_from_crossing(complex_.graph, e1, e2)
        if check_obtuse:
            assert is_obtuse(cfg, pts), f"configuration {cfg} is not obtuse"
        out.append(cfg)
    return out


# -- shadow boundary ----------------------------------------------------------

def _angle_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else 1 if c < 0 else 0


def _in_sector(t, s, e) -> bool:
    if s[0] * e[1] - s[1] * e[0] == 0:  # half-plane sector
        return s[0] * t[1] - s[1] * t[0] >= 0
    return s[0] * t[1] - s[1] * t[0] >= 0 and t[0] * e[1] - t[1] * e[0] >= 0


def _interior_to_union(x, triangles) -> bool:
    """Whether x is an interior point of the union of the closed triangles.

    Triangles touching x on their boundary contribute closed angular sectors
    at x; x is interior iff some triangle contains it strictly or the sectors
    cover every direction.
    """
    sectors = []
    for a, b, c in triangles:
        o = cross(a, b, c)
        if o == 0:
            continue
        if o < 0:
            b, c = c, b
        loc = in_triangle(x, a, b, c)
        if loc is Location.INSIDE:
            return True
        if loc is Location.OUTSIDE:
            continue
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            if tuple(x) == tuple(u):
                sectors.append(((v[0] - x[0], v[1] - x[1]), (w[0] - x[0], w[1] - x[1])))
                break
            if cross(u, v, x) == 0:
                # x inside the ccw edge u->v: interior lies to its left
                sectors.append(((v[0] - x[0], v[1] - x[1]), (u[0] - x[0], u[1] - x[1])))
                break
    if not sectors:
        return False
    dirs = sorted({d for s in sectors for d in s}, key=functools.cmp_to_key(_angle_cmp))
    uniq = []
    for d in dirs:
        if uniq and _angle_cmp(uniq[-1], d) == 0:
            continue
        uniq.append(d)
    probes = []
    if len(uniq) == 1:
        probes.append((-uniq[0][0], -uniq[0][1]))
    else:
        for i, d1 in enumerate(uniq):
            d2 = uniq[(i + 1) % len(uniq)]
            c = d1[0] * d2[1] - d1[1] * d2[0]
            if c > 0:
                probes.append((d1[0] + d2[0], d1[1] + d2[1]))
            elif c == 0:
                probes.append((-d1[1], d1[0]))
            else:
                probes.append((-(d1[0] + d2[0]), -(d1[1] + d2[1])))
    return all(any(_in_sector(t, s, e) for s, e in sectors) for t in probes)


def _bbox_overlaps(p, q, tri) -> bool:
    return not (max(p[0], q[0]) < min(t[0] for t in tri) or min(p[0], q[0]) > max(t[0] for t in tri)
                or max(p[1], q[1]) < min(t[1] for t in tri) or min(p[1], q[1]) > max(t[1] for t in tri))


def _edge_parameters(p, q, ints, edges) -> list[Fraction]:
    """Parameters in (0, 1) where segment p-q meets a vertex or another edge."""
    ts = set()
    dx, dy = q[0] - p[0], q[1] - p[1]
    den2 = dx * dx + dy * dy

    def along(x):
        return Fraction((x[0] - p[0]) * dx + (x[1] - p[1]) * dy, den2)

    for x in ints:
        if cross(p, q, x) == 0:
            t = along(x)
            if 0 < t < 1:
                ts.add(t)
    for u, v in edges:
        a, b = ints[u], ints[v]
        denom = dx * (b[1] - a[1]) - dy * (b[0] - a[0])
        if denom == 0:
            continue
        t = Fraction((a[0] - p[0]) * (b[1] - a[1]) - (a[1] - p[1]) * (b[0] - a[0]), denom)
        s = Fraction((a[0] - p[0]) * dy - (a[1] - p[1]) * dx, denom)
        if 0 < t < 1 and 0 <= s <= 1:
            ts.add(t)
    return sorted(ts)


def boundary_edges(cloud: PointCloud, complex_: FlagComplex) -> list[tuple[int, int]]:
    """Edges whose open segment meets the boundary of the shadow.

    Exact: each edge is cut at every vertex and edge crossing on it; the
    breakpoints and the midpoints between them are tested for being
    interior to the union of all triangles.
    """
    _check_sizes(cloud, complex_)
    ints, _, _ = cloud.integer_coords()
    from .homology import faces
    tris = [tuple(ints[v] for v in f) for f in faces(complex_, 2)] if complex_.dimension >= 2 else []
    edges = complex_.graph.edges()
    out = []
    for u, v in edges:
        p, q = ints[u], ints[v]
        near = [t for t in tris if _bbox_overlaps(p, q, t)]
        ts = [Fraction(0)] + _edge_parameters(p, q, ints, edges) + [Fraction(1)]
        samples = ts[1:-1] + [(ts[i] + ts[i + 1]) / 2 for i in range(len(ts) - 1)]
        for t in samples:
            x = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
            if not _interior_to_union(x, near):
                out.append((u, v))
                break
    return out


# -- octahedron census --------------------------------------------------------

def count_octahedra(complex_: FlagComplex) -> tuple[int, list[tuple]]:
    """Induced K_{2,2,2} subgraphs, as sorted 6-vertex tuples.

    An induced octahedron is a vertex v, an induced 4-cycle in its link, and
    an antipode adjacent to the 4-cycle but not to v.
    """
    g = complex_.graph
    adj = g.adj
    found = set()
    for v in range(g.n):
        if len(adj[v]) < 4:
            continue
        nb = sorted(w for w in adj[v] if len(adj[w]) >= 4)
        non_adj = [(x, y) for x, y in itertools.combinations(nb, 2) if y not in adj[x]]
        for (a, b), (c, d) in itertools.combinations(non_adj, 2):
            if len({a, b, c, d}) < 4:
                continue
            if not (c in adj[a] and d in adj[a] and c in adj[b] and d in adj[b]):
                continue
            for w in adj[a] & adj[b] & adj[c] & adj[d]:
                if w != v and w not in adj[v]:
                    found.add(tuple(sorted((v, w, a, b, c, d))))
    octs = sorted(found)
    return len(octs), octs


def is_induced_octahedron(g: Graph, six: Sequence[int]) -> bool:
    """Complement of the induced subgraph is a perfect matching."""
    if len(set(six)) != 6:
        return False
    h = g.induced(six).complement()
    return all(h.degree(i) == 1 for i in range(6))

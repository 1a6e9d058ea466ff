"""Explicit rational point clouds with known planar-Rips structure."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .complex import Graph
from .geom import Point2
from .rips import PointCloud, ThresholdMode, build_udg, gen_cross_polytope_points


def octahedron_chain_graph(k: int, cyclic: bool = False, shared: int = 3) -> Graph:
    """k copies of K_{2,2,2}; copy i+1 meets copy i in one vertex.

    In each copy local vertex j is antipodal to j + 3.  Copy i+1 takes copy
    i's local vertex ``shared`` as its own local vertex 0.
    """
    ids: list[list[int]] = []
    nxt = 0
    for i in range(k):
        loc: list = [None] * 6
        if i > 0:
            loc[0] = ids[i - 1][shared]
        if cyclic and i == k - 1:
            loc[shared] = ids[0][0]
        for j in range(6):
            if loc[j] is None:
                loc[j] = nxt
                nxt += 1
        ids.append(loc)
    edges = set()
    for loc in ids:
        for a, b in itertools.combinations(range(6), 2):
            if b - a != 3:
                edges.add(tuple(sorted((loc[a], loc[b]))))
    return Graph.from_edges(nxt, sorted(edges))


def _cloud(coords) -> PointCloud:
    return PointCloud(tuple(Point2(Fraction(x), Fraction(y)) for x, y in coords))


# found by the realizer (seed 1, margin 1/100) and certified exactly
_CHAIN_2 = [
    ("8743/15625", "701441/1000000"), ("89393/250000", "199719/250000"),
    ("70221/250000", "1029977/1000000"), ("667789/1000000", "858029/500000"),
    ("602863/500000", "272621/200000"), ("1301137/1000000", "1064437/1000000"),
    ("126837/125000", "596483/250000"), ("482903/500000", "2617693/1000000"),
    ("15679/200000", "2569017/1000000"), ("0", "2438353/1000000"),
    ("24151/250000", "520467/250000"),
]
_CHAIN_3 = [
    ("0", "562699/250000"), ("14259/500000", "539637/250000"),
    ("8878/15625", "596923/200000"), ("101317/100000", "2200491/1000000"),
    ("422739/500000", "1377987/500000"), ("69283/500000", "2067343/1000000"),
    ("1810677/1000000", "610767/250000"), ("987367/500000", "452159/200000"),
    ("1994069/1000000", "46309/31250"), ("48561/40000", "1627489/1000000"),
    ("68887/62500", "1751989/1000000"), ("1007951/500000", "1006299/1000000"),
    ("2713117/1000000", "1565037/1000000"), ("595199/200000", "1225119/1000000"),
    ("2970393/1000000", "270117/200000"), ("2281013/1000000", "646781/1000000"),
]


def octahedron_cloud() -> PointCloud:
    return gen_cross_polytope_points(2)


def chain_cloud(k: int) -> PointCloud:
    """Cloud whose unit disk graph is octahedron_chain_graph(k)."""
    if k == 1:
        return octahedron_cloud()
    if k == 2:
        return _cloud(_CHAIN_2)
    if k == 3:
        return _cloud(_CHAIN_3)
    raise ValueError("chain clouds are provided for k = 1, 2, 3")


def two_hexagons_sharing_point() -> PointCloud:
    return chain_cloud(2)


def jitter(cloud: PointCloud, rng, size: int = 10 ** 4, mode=ThresholdMode.STRICT) -> PointCloud:
    """Random perturbation at resolution 1/size that keeps the unit disk graph."""
    g = build_udg(cloud, mode)
    for _ in range(20):
        moved = []
        for p in cloud.points:
            dx, dy = (int(v) for v in rng.integers(-3, 4, size=2))
            moved.append(Point2(p.x + Fraction(dx, size), p.y + Fraction(dy, size)))
        if len(set(moved)) != len(moved):
            continue
        out = PointCloud(tuple(moved), cloud.scale)
        if build_udg(out, mode) == g:
            return out
    return cloud

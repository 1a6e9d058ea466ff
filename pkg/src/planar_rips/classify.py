"""Structural verdicts on planar-Rips complexes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .complex import (ComplexError, FlagComplex, Graph, NotPureError, is_closed,
                      is_normal_pseudomanifold, is_pseudomanifold, is_pure,
                      is_weak_pseudomanifold, ridge_degrees, strongly_connected_components)
from .homology import Field, betti_numbers
from .rips import (ConfigurationError, PointCloud, ThresholdMode, boundary_edges, build_rips,
                   count_octahedra, gamma2_from_crossing, intersecting_edge_pairs)


def is_cross_polytope_graph(g: Graph) -> bool:
    """Complement is a perfect matching, i.e. g is K_{m x 2}."""
    return g.n >= 2 and g.n % 2 == 0 and all(g.degree(v) == g.n - 2 for v in range(g.n))


def detect_cross_polytope(k: FlagComplex | Graph) -> Optional[int]:
    """Dimension n when the 1-skeleton is K_{(n+1) x 2}, else None."""
    g = k.graph if isinstance(k, FlagComplex) else k
    if not is_cross_polytope_graph(g):
        return None
    return g.n // 2 - 1


@dataclass
class ChainDecomposition:
    n: int
    components: list            # sorted vertex tuples, ordered by smallest facet
    intersections: list         # (i, j, shared vertices) for i < j

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [list(c) for c in self.components],
            "intersections": [{"pair": [i, j], "shared": list(s)} for i, j, s in self.intersections],
        }


@dataclass
class ChainFailure:
    reason: str

    def __bool__(self) -> bool:
        return False


def decompose_iterated_chain(k: FlagComplex) -> ChainDecomposition | ChainFailure:
    pure, n = is_pure(k)
    if not pure:
        raise NotPureError("iterated-chain decomposition needs a pure complex")
    if n < 2:
        raise ComplexError(f"iterated-chain decomposition needs dimension >= 2, got {n}")
    g = k.graph
    comps = []
    for facets in strongly_connected_components(k):
        verts = tuple(sorted({v for f in facets for v in f}))
        sub = g.induced(verts)
        if detect_cross_polytope(sub) != n:
            return ChainFailure(f"component on {list(verts)} does not induce a cross-polytope of dimension {n}")
        if len(facets) != 2 ** (n + 1):
            return ChainFailure(f"component on {list(verts)} has {len(facets)} facets, expected {2 ** (n + 1)}")
        comps.append(verts)
    inters = []
    for i, j in itertools.combinations(range(len(comps)), 2):
        shared = tuple(sorted(set(comps[i]) & set(comps[j])))
        if not shared:
            continue
        ok = len(shared) == 1 or (n > 2 and len(shared) == 2 and g.has_edge(*shared))
        if not ok:
            return ChainFailure(f"components {i} and {j} share {list(shared)}")
        inters.append((i, j, shared))
    meets = {(i, j) for i, j, _ in inters}
    for a, b, c in itertools.combinations(range(len(comps)), 3):
        if (a, b) in meets and (a, c) in meets and (b, c) in meets:
            return ChainFailure(f"components {a}, {b}, {c} pairwise intersect")
    return ChainDecomposition(n, comps, inters)


@dataclass(frozen=True)
class WedgeSummary:
    m: int
    p: int
    n: int
    pieces: int = 1  # connected components of the intersection graph

    def as_dict(self) -> dict:
        return {"m": self.m, "p": self.p, "n": self.n, "pieces": self.pieces}


def wedge_summary(d: ChainDecomposition) -> WedgeSummary:
    m = len(d.components)
    g = Graph.from_edges(m, [(i, j) for i, j, _ in d.intersections])
    c = len(g.components())
    return WedgeSummary(m, len(d.intersections) - m + c, d.n, c)


# -- verifiers ----------------------------------------------------------------

CONSISTENT = "consistent"
VACUOUS = "vacuous"
COUNTEREXAMPLE = "counterexample"


@dataclass
class Verdict:
    theorem: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != COUNTEREXAMPLE

    def as_dict(self) -> dict:
        return {"theorem": self.theorem, "status": self.status, "details": self.details}


def _pure_dim(k: FlagComplex) -> Optional[int]:
    if not k.facets:
        return None
    pure, dim = is_pure(k)
    return dim if pure else None


def verify_theorem_A(cloud: PointCloud, mode: ThresholdMode = ThresholdMode.STRICT,
                     complex_: FlagComplex | None = None) -> Verdict:
    """Pseudomanifolds of dimension >= 2 are cross-polytope spheres."""
    k = complex_ or build_rips(cloud, mode)
    dim = _pure_dim(k)
    if dim is None or dim < 2 or not is_pseudomanifold(k):
        return Verdict("A", VACUOUS, {"reason": "not a pseudomanifold of dimension >= 2"})
    found = detect_cross_polytope(k)
    details = {"dimension": dim, "cross_polytope": found}
    return Verdict("A", CONSISTENT if found == dim else COUNTEREXAMPLE, details)


def verify_theorem_B(cloud: PointCloud, mode: ThresholdMode = ThresholdMode.STRICT,
                     complex_: FlagComplex | None = None) -> Verdict:
    """Weak pseudomanifolds are iterated chains with Betti numbers (pieces, p, ..., m)."""
    k = complex_ or build_rips(cloud, mode)
    dim = _pure_dim(k)
    if dim is None or dim < 2 or not is_weak_pseudomanifold(k):
        return Verdict("B", VACUOUS, {"reason": "not a weak pseudomanifold of dimension >= 2"})
    d = decompose_iterated_chain(k)
    if not d:
        return Verdict("B", COUNTEREXAMPLE, {"dimension": dim, "reason": d.reason})
    w = wedge_summary(d)
    b = betti_numbers(k, Field.GF2)
    details = {"dimension": dim, "wedge": w.as_dict(), "betti_gf2": list(b.b)}
    ok = b[dim] == w.m and b[1] == w.p and b[0] == w.pieces
    return Verdict("B", CONSISTENT if ok else COUNTEREXAMPLE, details)


def theorem_C_violations(cloud: PointCloud, k: FlagComplex) -> tuple[list[str], dict]:
    g = k.graph
    census, octs = count_octahedra(k)
    b2 = betti_numbers(k, Field.GF2)[2]
    pairs = intersecting_edge_pairs(cloud, k)
    details = {"census": census, "betti2": b2, "crossing_pairs": len(pairs)}
    bad = []
    if census < 1:
        bad.append("no induced octahedron")
    if census != b2:
        bad.append(f"census {census} != b2 {b2}")
    if 6 * census != len(pairs):
        bad.append(f"census {census} != crossing pairs {len(pairs)} / 6")
    octsets = [set(o) for o in octs]
    for e1, e2 in pairs:
        try:
            gamma2_from_crossing(g, e1, e2)
        except ConfigurationError as exc:
            bad.append(str(exc))
        hits = sum(1 for o in octsets if set(e1) | set(e2) <= o)
        if hits != 1:
            bad.append(f"crossing pair {e1}, {e2} lies in {hits} census octahedra")
    deg = ridge_degrees(k)
    for e in g.edges():
        copies = sum(1 for o in octsets if set(e) <= o)
        if copies > 2:
            bad.append(f"edge {e} lies in {copies} octahedra")
        if deg.get(e, 0) >= 3 and copies == 0:
            bad.append(f"edge {e} of facet-degree {deg[e]} lies in no octahedron")
    return bad, details


def verify_theorem_C(cloud: PointCloud, mode: ThresholdMode = ThresholdMode.STRICT,
                     complex_: FlagComplex | None = None) -> Verdict:
    """Closed pure 2-complexes contain exactly b2 induced octahedra."""
    k = complex_ or build_rips(cloud, mode)
    if _pure_dim(k) != 2 or not is_closed(k):
        return Verdict("C", VACUOUS, {"reason": "not a closed pure 2-complex"})
    bad, details = theorem_C_violations(cloud, k)
    if bad:
        details["violations"] = bad
    return Verdict("C", COUNTEREXAMPLE if bad else CONSISTENT, details)


# -- report -------------------------------------------------------------------

def classification_report(k: FlagComplex, cloud: PointCloud | None = None,
                          mode: ThresholdMode = ThresholdMode.STRICT) -> dict:
    g = k.graph
    rep: dict = {
        "mode": mode.value,
        "vertices": g.n,
        "edges": g.num_edges,
        "facets": len(k.facets),
        "dimension": k.dimension,
    }
    dim = _pure_dim(k)
    rep["pure"] = dim is not None
    flags = {"closed": False, "weak_pseudomanifold": False, "pseudomanifold": False,
             "normal_pseudomanifold": False}
    if dim is not None and dim >= 1:
        flags["closed"] = is_closed(k)
        flags["weak_pseudomanifold"] = is_weak_pseudomanifold(k)
        flags["pseudomanifold"] = is_pseudomanifold(k)
        if dim >= 2:
            flags["normal_pseudomanifold"] = is_normal_pseudomanifold(k)
    rep.update(flags)
    rep["cross_polytope"] = detect_cross_polytope(k)
    if dim is not None and dim >= 2:
        d = decompose_iterated_chain(k)
        rep["chain"] = d.as_dict() if d else {"failure": d.reason}
        rep["wedge"] = wedge_summary(d).as_dict() if d else None
        rep["p_reading"] = "cycle rank of the component intersection graph"
    else:
        rep["chain"] = None
        rep["wedge"] = None
    census, octs = count_octahedra(k)
    rep["census"] = census
    rep["octahedra"] = [list(o) for o in octs]
    rep["betti"] = {f.value: list(betti_numbers(k, f).b) for f in (Field.GF2, Field.Q)}
    if cloud is not None:
        rep["crossing_pairs"] = len(intersecting_edge_pairs(cloud, k))
        rep["boundary_edges"] = [list(e) for e in boundary_edges(cloud, k)]
        rep["verdicts"] = {v.theorem: v.as_dict() for v in (
            verify_theorem_A(cloud, mode, k), verify_theorem_B(cloud, mode, k),
            verify_theorem_C(cloud, mode, k))}
    return rep

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import k222, two_octahedra_at_vertex
from planar_rips.campaigns import random_cloud
from planar_rips.classify import (COUNTEREXAMPLE, CONSISTENT, VACUOUS, classification_report,
                                  decompose_iterated_chain, detect_cross_polytope, verify_theorem_A,
                                  verify_theorem_B, verify_theorem_C, wedge_summary)
from planar_rips.complex import ComplexError, FlagComplex, Graph, NotPureError
from planar_rips.constructions import chain_cloud, octahedron_chain_graph, two_hexagons_sharing_point
from planar_rips.rips import PointCloud, build_rips, gen_cross_polytope_points


def multipartite(parts: int) -> nx.Graph:
    return nx.complete_multipartite_graph(*([2] * parts))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def oracle_detect(g: Graph):
    if g.n < 2 or g.n % 2:
        return None
    return g.n // 2 - 1 if nx.is_isomorphic(to_nx(g), multipartite(g.n // 2)) else None


def test_detect_examples():
    assert detect_cross_polytope(FlagComplex(k222())) == 2
    assert detect_cross_polytope(FlagComplex(Graph.complete(4))) is None
    k42 = Graph.from_edges(8, [(u, v) for u, v in itertools.combinations(range(8), 2) if u // 2 != v // 2])
    assert detect_cross_polytope(k42) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_detect_exhaustive_small(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if g.num_edges != n * (n - 2) // 2 and mask % 97:
            continue  # wrong edge count; the oracle still sees every 97th such graph
        assert detect_cross_polytope(g) == oracle_detect(g)


@settings(max_examples=300, deadline=None)
@given(st.integers(7, 8), st.data())
def test_detect_matches_isomorphism_oracle(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    if data.draw(st.booleans()):
        # near-miss: a relabelled K_{m x 2} with a few flipped pairs
        perm = data.draw(st.permutations(range(n)))
        base = {tuple(sorted((perm[u], perm[v]))) for u, v in pairs if u // 2 != v // 2}
        flips = data.draw(st.sets(st.sampled_from(pairs), max_size=2))
        edges = base ^ flips
    else:
        mask = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges = {p for p, m in zip(pairs, mask) if m}
    g = Graph.from_edges(n, edges)
    assert detect_cross_polytope(g) == oracle_detect(g)


def test_decompose_examples():
    d = decompose_iterated_chain(FlagComplex(k222()))
    assert d and len(d.components) == 1 and d.intersections == []
    d = decompose_iterated_chain(FlagComplex(two_octahedra_at_vertex()))
    assert d and len(d.components) == 2 and d.intersections == [(0, 1, (0,))]


def test_decompose_edge_sharing_fails_in_dimension_two():
    edges = [(u, v) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2]
    ids = [0, 6, 2, 7, 8, 9]  # second copy shares edge {0, 2}
    edges += [(ids[u], ids[v]) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2]
    res = decompose_iterated_chain(FlagComplex(Graph.from_edges(10, edges)))
    assert not res and res.reason


def test_decompose_edge_sharing_allowed_in_dimension_three():
    def k42(ids):
        return [(ids[u], ids[v]) for u, v in itertools.combinations(range(8), 2) if u // 2 != v // 2]
    edges = k42(list(range(8))) + k42([0, 8, 2, 9, 10, 11, 12, 13])
    d = decompose_iterated_chain(FlagComplex(Graph.from_edges(14, edges)))
    assert d and d.n == 3 and d.intersections == [(0, 1, (0, 2))]
    assert wedge_summary(d).as_dict() == {"m": 2, "p": 0, "n": 3, "pieces": 1}


def test_decompose_triple_intersection_fails():
    # three octahedra glued pairwise at distinct vertices
    g = octahedron_chain_graph(3, cyclic=True)
    res = decompose_iterated_chain(FlagComplex(g))
    assert not res and "pairwise" in res.reason


def test_decompose_errors():
    with pytest.raises(NotPureError):
        decompose_iterated_chain(FlagComplex(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])))
    with pytest.raises(ComplexError):
        decompose_iterated_chain(FlagComplex(Graph.from_edges(4, [(i, (i + 1) % 4) for i in range(4)])))


def test_wedge_examples():
    assert (wedge_summary(decompose_iterated_chain(FlagComplex(k222()))).m,
            wedge_summary(decompose_iterated_chain(FlagComplex(k222()))).p) == (1, 0)
    w = wedge_summary(decompose_iterated_chain(FlagComplex(octahedron_chain_graph(3))))
    assert (w.m, w.p) == (3, 0)
    for shared in (1, 2, 3):
        w = wedge_summary(decompose_iterated_chain(FlagComplex(octahedron_chain_graph(4, cyclic=True,
                                                                                      shared=shared))))
        assert (w.m, w.p) == (4, 1)


@st.composite
def chain_patterns(draw):
    m = draw(st.integers(1, 7))
    edges = set()
    for i in range(1, m):
        if draw(st.integers(0, 5)):  # occasionally leave a separate piece
            edges.add((draw(st.integers(0, i - 1)), i))
    extra = draw(st.lists(st.tuples(st.integers(0, m - 1), st.integers(0, m - 1)), max_size=3))
    for a, b in extra:
        if a == b:
            continue
        a, b = min(a, b), max(a, b)
        nbrs = lambda x: {u for e in edges for u in e if x in e} - {x}  # noqa: E731
        if not nbrs(a) & nbrs(b):  # keep the pattern triangle-free
            edges.add((a, b))
    deg = {i: sum(i in e for e in edges) for i in range(m)}
    if any(d > 6 for d in deg.values()):
        edges = {e for e in edges if e[0] < e[1] and deg[e[0]] <= 6 and deg[e[1]] <= 6}
    return m, sorted(edges)


def glue(m: int, pattern: list[tuple[int, int]]) -> Graph:
    ids = [[None] * 6 for _ in range(m)]
    slot = [0] * m
    nxt = 0
    for a, b in pattern:
        ids[a][slot[a]] = ids[b][slot[b]] = nxt
        slot[a] += 1
        slot[b] += 1
        nxt += 1
    for copy in ids:
        for j in range(6):
            if copy[j] is None:
                copy[j] = nxt
                nxt += 1
    # slots 0..5 fill with local order 0,1,2,... : antipodes are j and j+3
    edges = [(c[u], c[v]) for c in ids for u, v in itertools.combinations(range(6), 2) if v - u != 3]
    return Graph.from_edges(nxt, edges)


@settings(max_examples=80, deadline=None)
@given(chain_patterns())
def test_chain_round_trip(pattern):
    m, edges = pattern
    g = glue(m, edges)
    d = decompose_iterated_chain(FlagComplex(g))
    assert d and len(d.components) == m
    found = nx.Graph()
    found.add_nodes_from(range(m))
    found.add_edges_from((i, j) for i, j, _ in d.intersections)
    expected = nx.Graph()
    expected.add_nodes_from(range(m))
    expected.add_edges_from(edges)
    assert nx.is_isomorphic(found, expected)
    w = wedge_summary(d)
    assert w.p == len(edges) - m + nx.number_connected_components(expected)


def test_theorem_A_examples():
    for n in (2, 3):
        v = verify_theorem_A(gen_cross_polytope_points(n))
        assert v.status == CONSISTENT and v.details["cross_polytope"] == n
    assert verify_theorem_A(PointCloud.of([(0, 0), (5, 5), (0, 3)])).status == VACUOUS


def test_theorem_B_examples():
    v = verify_theorem_B(two_hexagons_sharing_point())
    assert v.status == CONSISTENT
    assert v.details["wedge"]["m"] == 2 and v.details["wedge"]["p"] == 0 and v.details["betti_gf2"][2] == 2
    v = verify_theorem_B(gen_cross_polytope_points(2))
    assert v.status == CONSISTENT and (v.details["wedge"]["m"], v.details["wedge"]["p"]) == (1, 0)
    nonpure = PointCloud.of([(0, 0), ("1/2", 0), (0, "1/2"), (2, 0), (2, "1/2")])
    assert verify_theorem_B(nonpure).status == VACUOUS


def test_theorem_B_on_cyclic_complex():
    # combinatorial ring of four octahedra, no coordinates
    k = FlagComplex(octahedron_chain_graph(4, cyclic=True))
    v = verify_theorem_B(None, complex_=k)
    assert v.status == CONSISTENT and v.details["wedge"]["p"] == 1 and v.details["betti_gf2"][1] == 1


def test_theorem_C_examples():
    v = verify_theorem_C(gen_cross_polytope_points(2))
    assert v.status == CONSISTENT and v.details["census"] == 1 and v.details["betti2"] == 1
    v = verify_theorem_C(chain_cloud(2))
    assert v.status == CONSISTENT and v.details["census"] == 2 and v.details["betti2"] == 2
    open_ = PointCloud.of([(0, 0), ("1/2", 0), (0, "1/2")])
    assert verify_theorem_C(open_).status == VACUOUS


def test_verifiers_never_counterexample_on_random_clouds():
    rng = np.random.default_rng(5)
    for _ in range(60):
        c = random_cloud(rng)
        for verify in (verify_theorem_A, verify_theorem_B, verify_theorem_C):
            assert verify(c).status != COUNTEREXAMPLE


def check_flags(rep: dict) -> None:
    if rep["normal_pseudomanifold"]:
        assert rep["pseudomanifold"]
    if rep["pseudomanifold"]:
        assert rep["weak_pseudomanifold"]
    if rep["weak_pseudomanifold"]:
        assert rep["closed"] and rep["pure"]
    if rep["cross_polytope"] is not None:
        assert rep["normal_pseudomanifold"] or rep["dimension"] < 2
        assert rep["pseudomanifold"]


def test_report_examples():
    hexagon = gen_cross_polytope_points(2)
    rep = classification_report(build_rips(hexagon), hexagon)
    assert rep["cross_polytope"] == 2 and rep["census"] == 1 and rep["crossing_pairs"] == 6
    assert rep["betti"] == {"gf2": [1, 0, 1], "q": [1, 0, 1]}
    assert rep["mode"] == "strict"
    assert all(v["status"] == CONSISTENT for v in rep["verdicts"].values())
    check_flags(rep)
    rep = classification_report(FlagComplex(two_octahedra_at_vertex()))
    assert rep["wedge"] == {"m": 2, "p": 0, "n": 2, "pieces": 1} and "verdicts" not in rep
    check_flags(rep)


def test_report_flags_random():
    rng = np.random.default_rng(9)
    for _ in range(40):
        c = random_cloud(rng, 4, 18)
        check_flags(classification_report(build_rips(c), c))
    for n in (2, 3, 4):
        c = gen_cross_polytope_points(n)
        check_flags(classification_report(build_rips(c), c))

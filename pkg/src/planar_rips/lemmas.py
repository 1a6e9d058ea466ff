"""Executable geometric invariants of unit disk graphs and their Rips complexes.

Each check returns a list of human-readable violations; empty means the
invariant held on the given input.
"""
from __future__ import annotations

import itertools

from .complex import FlagComplex, Graph, is_closed, is_pure, is_weak_pseudomanifold, link, \
    strongly_connected_components, faces_up_to
from .geom import convex_hull, convex_sets_intersect, cross, in_convex_hull
from .obstructions import contains_induced_k16
from .rips import PointCloud, intersecting_edge_pairs


def check_cone(cloud: PointCloud, k: FlagComplex) -> list[str]:
    """Crossing edges AB, CD with A, C non-adjacent force B ~ D."""
    g = k.graph
    bad = []
    for (p, q), (s, t) in intersecting_edge_pairs(cloud, k):
        for (a, c), (b, d) in (((p, s), (q, t)), ((p, t), (q, s))):
            if not g.has_edge(a, c) and not g.has_edge(b, d):
                bad.append(f"crossing edges {(p, q)} and {(s, t)}: {a}!~{c} and {b}!~{d}")
                break
    return bad


def check_no_k16(g: Graph) -> list[str]:
    hit = contains_induced_k16(g)
    return [] if hit is None else [f"induced K_(1,6) at {list(hit)}"]


def check_hull_in_link(cloud: PointCloud, g: Graph) -> list[str]:
    """A vertex inside the hull of some link subset A is in the link and adjacent to A."""
    pts = cloud.points
    bad = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if len(nb) < 2:
            continue
        hull = convex_hull([pts[u] for u in nb])
        for w in range(g.n):
            if w == v or not in_convex_hull(pts[w], hull):
                continue
            if w not in g.adj[v]:
                bad.append(f"vertex {w} lies in the hull of the link of {v} but is not adjacent to it")
                continue
            far = [pts[u] for u in nb if u != w and u not in g.adj[w]]
            if far and in_convex_hull(pts[w], convex_hull(far)):
                bad.append(f"vertex {w} lies in the hull of link vertices of {v} none adjacent to it")
    return bad


def check_link_components(cloud: PointCloud, g: Graph) -> list[str]:
    """Hulls of distinct connected components of a vertex link are disjoint."""
    pts = cloud.points
    bad = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        sub = g.induced(nb)
        comps = [[nb[i] for i in c] for c in sub.components()]
        if len(comps) < 2:
            continue
        hulls = [convex_hull([pts[u] for u in c]) for c in comps]
        for i, j in itertools.combinations(range(len(comps)), 2):
            if convex_sets_intersect(hulls[i], hulls[j]):
                bad.append(f"link of {v}: components {comps[i]} and {comps[j]} have meeting hulls")
    return bad


def check_nondegenerate_facets(cloud: PointCloud, k: FlagComplex) -> list[str]:
    """In closed pure 2-complexes no triangle is flat."""
    if not k.facets:
        return []
    pure, dim = is_pure(k)
    if not pure or dim != 2 or not is_closed(k):
        return []
    pts = cloud.points
    return [f"facet {f} is degenerate" for f in k.facets
            if cross(pts[f[0]], pts[f[1]], pts[f[2]]) == 0]


def check_link_scc(k: FlagComplex) -> list[str]:
    """Weak pseudomanifolds: codim >= 2 links have at most two strongly connected
    components, and links of (n-2)-faces have at most 11 vertices."""
    if not k.facets:
        return []
    pure, n = is_pure(k)
    if not pure or n < 2 or not is_weak_pseudomanifold(k):
        return []
    bad = []
    for face in faces_up_to(k, n - 1):
        lk, _ = link(k, face)
        if not lk.facets or not is_pure(lk)[0]:
            bad.append(f"link of {face} is not pure")
            continue
        sccs = strongly_connected_components(lk)
        if len(sccs) > 2:
            bad.append(f"link of {face} has {len(sccs)} strongly connected components")
        if len(face) == n - 1 and lk.n_vertices > 11:
            bad.append(f"link of {face} has {lk.n_vertices} vertices")
    return bad


def lemma_violations(cloud: PointCloud, k: FlagComplex) -> dict[str, list[str]]:
    g = k.graph
    return {
        "cone": check_cone(cloud, k),
        "no_k16": check_no_k16(g),
        "hull_in_link": check_hull_in_link(cloud, g),
        "link_components": check_link_components(cloud, g),
        "nondegenerate_facets": check_nondegenerate_facets(cloud, k),
        "link_scc": check_link_scc(k),
    }

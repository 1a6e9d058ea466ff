"""Flag simplicial complexes stored as a graph plus its maximal cliques."""
from __future__ import annotations

import itertools
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Simplex = tuple  # sorted tuple of vertex ids


class ComplexError(ValueError):
    pass


class NotPureError(ComplexError):
    pass


def simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(set(vertices)))
    return s


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple  # tuple of frozensets
    labels: tuple | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        nbrs: list[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ComplexError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ComplexError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ComplexError("labels length does not match n")
        return cls(n, tuple(frozenset(s) for s in nbrs), labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n,
            [(u, v) for u, v in itertools.combinations(range(self.n), 2) if v not in self.adj[u]],
            self.labels,
        )

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is the i-th smallest input id."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ComplexError(f"unknown vertex id {v}")
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[w]) for u in vs for w in self.adj[u] if w in index and u < w]
        labels = tuple(self.label(v) for v in vs)
        return Graph.from_edges(len(vs), edges, labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_clique(self, vertices: Sequence[int]) -> bool:
        return all(v in self.adj[u] for u, v in itertools.combinations(vertices, 2))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


def maximal_cliques(g: Graph) -> list[Simplex]:
    """Bron-Kerbosch with Tomita pivoting; output sorted lexicographically."""
    out: list[Simplex] = []
    adj = g.adj

    def expand(r: list, p: set, x: set) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    if g.n == 0:
        return []
    out.sort()
    return out


class FlagComplex:
    """Clique complex of ``graph``; facets are computed once, on first use."""

    def __init__(self, graph: Graph, facets: Sequence[Simplex] | None = None):
        self.graph = graph
        self._facets = [tuple(f) for f in facets] if facets is not None else None
        self._lock = threading.Lock()

    @property
    def facets(self) -> list[Simplex]:
        if self._facets is None:
            with self._lock:
                if self._facets is None:
                    self._facets = maximal_cliques(self.graph)
        return self._facets

    @property
    def n_vertices(self) -> int:
        return self.graph.n

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_face(self, s: Sequence[int]) -> bool:
        return all(0 <= v < self.graph.n for v in s) and self.graph.is_clique(list(s))

    def __repr__(self) -> str:
        return f"FlagComplex(n={self.graph.n}, facets={len(self.facets)}, dim={self.dimension})"


def clique_complex(g: Graph) -> FlagComplex:
    return FlagComplex(g)


def skeleton_1(k: FlagComplex) -> Graph:
    return k.graph


def induced_subcomplex(k: FlagComplex, vertices: Iterable[int]) -> FlagComplex:
    """Flag complex on ``vertices``; ids are renumbered in increasing order."""
    return FlagComplex(k.graph.induced(vertices))


def link(k: FlagComplex, s: Sequence[int]) -> tuple[FlagComplex, list[int]]:
    """Link of face ``s`` with the list mapping new vertex ids to old ones."""
    s = simplex(s)
    if not s or not k.is_face(s):
        raise ComplexError(f"{s} is not a face of the complex")
    common = set(k.graph.adj[s[0]])
    for v in s[1:]:
        common &= k.graph.adj[v]
    verts = sorted(common)
    return FlagComplex(k.graph.induced(verts)), verts


def is_pure(k: FlagComplex) -> tuple[bool, int]:
    facets = k.facets
    if not facets:
        raise ComplexError("empty complex has no purity")
    sizes = {len(f) for f in facets}
    return len(sizes) == 1, max(sizes) - 1


def _pure_dimension(k: FlagComplex, minimum: int = 1) -> int:
    pure, dim = is_pure(k)
    if not pure:
        raise NotPureError("complex is not pure")
    if dim < minimum:
        raise ComplexError(f"predicate needs dimension >= {minimum}, got {dim}")
    return dim


def ridge_degrees(k: FlagComplex) -> dict[Simplex, int]:
    """Number of facets containing each codimension-one face of a pure complex."""
    deg: dict[Simplex, int] = defaultdict(int)
    for f in k.facets:
        for r in itertools.combinations(f, len(f) - 1):
            deg[r] += 1
    return dict(deg)


def is_closed(k: FlagComplex) -> bool:
    _pure_dimension(k)
    return all(d >= 2 for d in ridge_degrees(k).values())


def strongly_connected_components(k: FlagComplex) -> list[list[Simplex]]:
    _pure_dimension(k, minimum=0)
    facets = k.facets
    parent = list(range(len(facets)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[Simplex, int] = {}
    for i, f in enumerate(facets):
        for r in itertools.combinations(f, len(f) - 1):
            if not r:
                continue
            j = owner.setdefault(r, i)
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[Simplex]] = defaultdict(list)
    for i, f in enumerate(facets):
        groups[find(i)].append(f)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def is_strongly_connected(k: FlagComplex) -> bool:
    return len(strongly_connected_components(k)) == 1


def is_weak_pseudomanifold(k: FlagComplex) -> bool:
    _pure_dimension(k)
    return all(d == 2 for d in ridge_degrees(k).values())


def is_pseudomanifold(k: FlagComplex) -> bool:
    return is_weak_pseudomanifold(k) and is_strongly_connected(k)


def faces_up_to(k: FlagComplex, max_size: int) -> list[Simplex]:
    """All nonempty faces with at most ``max_size`` vertices, lexicographic."""
    g = k.graph
    out: list[Simplex] = []

    def grow(current: tuple, candidates: list) -> None:
        out.append(current)
        if len(current) == max_size:
            return
        for i, v in enumerate(candidates):
            grow(current + (v,), [w for w in candidates[i + 1:] if w in g.adj[v]])

    for v in range(g.n):
        if max_size >= 1:
            grow((v,), sorted(w for w in g.adj[v] if w > v))
    out.sort()
    return out


def is_normal_pseudomanifold(k: FlagComplex) -> bool:
    dim = _pure_dimension(k, minimum=2)
    if not is_pseudomanifold(k):
        return False
    for face in faces_up_to(k, dim - 1):
        lk, _ = link(k, face)
        if not lk.graph.is_connected():
            return False
    return True


def graph_is_pure(g: Graph) -> bool:
    """Graph-level purity: every maximal clique has the same size."""
    sizes = {len(c) for c in maximal_cliques(g)}
    return len(sizes) <= 1

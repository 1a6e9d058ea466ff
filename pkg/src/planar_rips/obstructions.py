"""Forbidden induced subgraphs for unit disk graphs and a search for them."""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Optional

from .complex import ComplexError, FlagComplex, Graph


class Status(enum.Enum):
    PROVEN_MINIMAL = "ProvenMinimal"
    FORBIDDEN = "ForbiddenNotNecessarilyMinimal"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    graph: Graph
    provenance: str
    status: Status

    def as_dict(self) -> dict:
        return {"id": self.id, "n": self.graph.n, "edges": [list(e) for e in self.graph.edges()],
                "provenance": self.provenance, "status": self.status.value}

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogEntry":
        try:
            g = Graph.from_edges(int(d["n"]), [tuple(e) for e in d["edges"]])
            return cls(str(d["id"]), g, str(d.get("provenance", "user supplied")), Status(d["status"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError(f"bad catalog entry: {exc}") from exc


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_complement_k2_plus_odd_cycle(k: int) -> Graph:
    """Complement of the disjoint union of K_2 and C_{2k+1}.

    Vertices 0, 1 come from K_2; 2.. run around the cycle.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 2 * k + 1
    edges = [(0, 1)] + [(2 + i, 2 + (i + 1) % m) for i in range(m)]
    return Graph.from_edges(m + 2, edges).complement()


def gen_complement_even_cycle(k: int) -> Graph:
    if k < 4:
        raise ValueError("k must be >= 4")
    return cycle(2 * k).complement()


def gen_cstar(k: int) -> Graph:
    """C_{2k} with each of its two colour classes completed to a clique."""
    if k < 4:
        raise ValueError("k must be >= 4")
    n = 2 * k
    edges = {(i, (i + 1) % n) for i in range(n)}
    for parity in (0, 1):
        edges |= set(itertools.combinations(range(parity, n, 2), 2))
    return Graph.from_edges(n, sorted(tuple(sorted(e)) for e in edges))


RP2_LABELS = "ABCDEFGHIJK"
# 11-vertex triangulation of the projective plane; outer 10-gon C H I J K C H I J K
# with antipodal identification
RP2_EDGES = (
    "AB BC EI GJ DJ GI BH GH HI CH CK JK FK IJ DK EH CE CD AF AG AE DE BF DG AD EF BG BK FJ FI"
).split()
RP2_7_EDGES = "AB AD AE AF AG BC BF BG CD CE DE DG EF".split()


def _labelled(labels: str, names: list[str]) -> Graph:
    idx = {c: i for i, c in enumerate(labels)}
    return Graph.from_edges(len(labels), [(idx[a], idx[b]) for a, b in names], labels=list(labels))


def rp2_graph() -> Graph:
    return _labelled(RP2_LABELS, RP2_EDGES)


def rp2_complex() -> FlagComplex:
    return FlagComplex(rp2_graph())


def rp2_7_graph() -> Graph:
    return _labelled("ABCDEFG", RP2_7_EDGES)


def catalog() -> list[CatalogEntry]:
    P, F = Status.PROVEN_MINIMAL, Status.FORBIDDEN
    return [
        CatalogEntry("k16", star(6), "star K_{1,6}: six independent neighbours of one vertex", F),
        CatalogEntry("comp-k2-c3", gen_complement_k2_plus_odd_cycle(1), "complement of K2 + C3 (k=1)", P),
        CatalogEntry("comp-k2-c5", gen_complement_k2_plus_odd_cycle(2), "complement of K2 + C5 (k=2)", P),
        CatalogEntry("comp-c8", gen_complement_even_cycle(4), "complement of C8 (k=4)", P),
        CatalogEntry("comp-c10", gen_complement_even_cycle(5), "complement of C10 (k=5)", P),
        CatalogEntry("cstar-8", gen_cstar(4), "C8 plus cliques on both colour classes (k=4)", P),
        CatalogEntry("rp2-7", rp2_7_graph(),
                     "1-skeleton of the 7-vertex subcomplex ABCDEFG of the 11-vertex RP^2 triangulation", P),
    ]


def load_catalog(path: str) -> list[CatalogEntry]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ComplexError("catalog file must hold a JSON list")
    return [CatalogEntry.from_dict(d) for d in data]


def find_induced(pattern: Graph, host: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically first injective map pattern -> host preserving adjacency and non-adjacency."""
    k = pattern.n
    if k > host.n:
        return None
    pdeg = [pattern.degree(v) for v in range(k)]
    hdeg = [host.degree(v) for v in range(host.n)]
    assign: list[int] = []
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == k:
            return True
        for h in range(host.n):
            if h in used or hdeg[h] < pdeg[i]:
                continue
            if any(pattern.has_edge(i, j) != host.has_edge(h, assign[j]) for j in range(i)):
                continue
            assign.append(h)
            used.add(h)
            if extend(i + 1):
                return True
            assign.pop()
            used.discard(h)
        return False

    return tuple(assign) if extend(0) else None


@dataclass(frozen=True)
class Finding:
    entry_id: str
    embedding: tuple

    def as_dict(self, host: Graph | None = None) -> dict:
        out = {"id": self.entry_id, "embedding": list(self.embedding)}
        if host is not None and host.labels:
            out["labels"] = [host.label(v) for v in self.embedding]
        return out


def find_obstruction(g: Graph, entries: list[CatalogEntry] | None = None) -> Optional[Finding]:
    for entry in entries if entries is not None else catalog():
        emb = find_induced(entry.graph, g)
        if emb is not None:
            return Finding(entry.id, emb)
    return None


def contains_induced_k16(g: Graph) -> Optional[tuple[int, ...]]:
    """Centre followed by six pairwise non-adjacent neighbours, if any."""
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if len(nb) < 6:
            continue
        found = _independent_set(g, nb, 6)
        if found is not None:
            return (v,) + found
    return None


def _independent_set(g: Graph, cand: list[int], size: int) -> Optional[tuple[int, ...]]:
    def grow(chosen: tuple, rest: list) -> Optional[tuple]:
        if len(chosen) == size:
            return chosen
        for i, w in enumerate(rest):
            if len(rest) - i < size - len(chosen):
                break
            r = grow(chosen + (w,), [x for x in rest[i + 1:] if x not in g.adj[w]])
            if r is not None:
                return r
        return None

    return grow((), cand)

"""Simplicial homology of flag complexes over GF(2) and the rationals."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .complex import ComplexError, FlagComplex, is_pure


class Field(enum.Enum):
    GF2 = "gf2"
    Q = "q"


class CapacityError(RuntimeError):
    """Raised when an exhaustive search would exceed its documented bound."""


MINIMAL_CYCLE_MAX_FACETS = 24


def faces(k: FlagComplex, d: int) -> list[tuple]:
    """All d-dimensional faces (cliques of size d + 1), lexicographic."""
    if d < 0:
        raise ComplexError("face dimension must be >= 0")
    g = k.graph
    size = d + 1
    out: list[tuple] = []

    def grow(current: tuple, candidates: list) -> None:
        if len(current) == size:
            out.append(current)
            return
        need = size - len(current)
        for i, v in enumerate(candidates):
            if len(candidates) - i < need:
                break
            grow(current + (v,), [w for w in candidates[i + 1:] if w in g.adj[v]])

    for v in range(g.n):
        grow((v,), sorted(w for w in g.adj[v] if w > v))
    return out


@dataclass
class ChainComplexMatrices:
    """Boundary maps as sparse columns: ``boundary[d][j]`` maps row -> coefficient.

    ``boundary[d]`` sends d-faces to (d-1)-faces; ``boundary[0]`` is empty.
    """
    field: Field
    faces: list  # faces[d] = ordered list of d-faces
    boundary: list

    def composed_is_zero(self) -> bool:
        for d in range(2, len(self.faces)):
            for col in self.boundary[d]:
                acc: dict = {}
                for row, c in col.items():
                    for row2, c2 in self.boundary[d - 1][row].items():
                        acc[row2] = acc.get(row2, 0) + c * c2
                for v in acc.values():
                    if (v % 2 if self.field is Field.GF2 else v) != 0:
                        return False
        return True


def chain_complex(k: FlagComplex, field: Field = Field.GF2) -> ChainComplexMatrices:
    by_dim = []
    d = 0
    while True:
        fs = faces(k, d)
        if not fs:
            break
        by_dim.append(fs)
        d += 1
    boundary: list = [[{} for _ in by_dim[0]]] if by_dim else []
    for d in range(1, len(by_dim)):
        index = {f: i for i, f in enumerate(by_dim[d - 1])}
        cols = []
        for f in by_dim[d]:
            col = {}
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                col[index[sub]] = 1 if field is Field.GF2 else (-1) ** i
            cols.append(col)
        boundary.append(cols)
    return ChainComplexMatrices(field, by_dim, boundary)


def _rank_gf2(columns: list[dict]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        v = 0
        for row in col:
            v |= 1 << row
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def _rank_q(columns: list[dict]) -> int:
    # fraction-free elimination on integer column vectors
    pivots: dict[int, dict] = {}
    rank = 0
    for col in columns:
        v = {r: c for r, c in col.items() if c}
        while v:
            top = max(v)
            if top not in pivots:
                g = 0
                for c in v.values():
                    g = gcd(g, c)
                pivots[top] = {r: c // g for r, c in v.items()}
                rank += 1
                break
            p = pivots[top]
            a, b = p[top], v[top]
            new = {}
            for r in set(v) | set(p):
                c = a * v.get(r, 0) - b * p.get(r, 0)
                if c:
                    new[r] = c
            g = 0
            for c in new.values():
                g = gcd(g, c)
            v = {r: c // g for r, c in new.items()} if g > 1 else new
    return rank


def boundary_rank(cols: list[dict], field: Field) -> int:
    return _rank_gf2(cols) if field is Field.GF2 else _rank_q(cols)


@dataclass(frozen=True)
class BettiVector:
    b: tuple
    field: Field

    def __getitem__(self, d: int) -> int:
        return self.b[d] if 0 <= d < len(self.b) else 0

    def euler(self) -> int:
        return sum((-1) ** d * x for d, x in enumerate(self.b))

    def as_dict(self) -> dict:
        return {"field": self.field.value, "betti": list(self.b)}


def betti_numbers(k: FlagComplex, field: Field = Field.GF2) -> BettiVector:
    cc = chain_complex(k, field)
    dims = [len(f) for f in cc.faces]
    ranks = [0] + [boundary_rank(cc.boundary[d], field) for d in range(1, len(dims))] + [0]
    return BettiVector(tuple(dims[d] - ranks[d] - ranks[d + 1] for d in range(len(dims))), field)


def face_counts(k: FlagComplex) -> list[int]:
    counts = []
    d = 0
    while True:
        c = len(faces(k, d))
        if not c:
            return counts
        counts.append(c)
        d += 1


def euler_characteristic(k: FlagComplex) -> int:
    return sum((-1) ** d * c for d, c in enumerate(face_counts(k)))


def is_minimal_n_cycle(k: FlagComplex, n: int) -> bool:
    """Whether the pure n-complex ``k`` is a minimal n-cycle over GF(2).

    Searches facet subsets for a nonempty proper subset whose ridges all
    have even multiplicity (a GF(2) n-cycle supported on fewer facets);
    partial assignments are pruned as soon as some ridge has all of its
    facets decided with odd parity.
    """
    pure, dim = is_pure(k)
    if not pure or dim != n:
        raise ComplexError(f"complex is not pure of dimension {n}")
    facets = k.facets
    if len(facets) > MINIMAL_CYCLE_MAX_FACETS:
        raise CapacityError(
            f"{len(facets)} facets exceeds the exhaustive bound {MINIMAL_CYCLE_MAX_FACETS}")
    if betti_numbers(k, Field.GF2)[n] < 1:
        return False
    if n == 0:
        return len(facets) == 1
    ridges_of = [list(itertools.combinations(f, n)) for f in facets]
    # last facet index touching each ridge: its parity is final after that step
    last: dict = {}
    for i, rs in enumerate(ridges_of):
        for r in rs:
            last[r] = i
    closing = [[] for _ in facets]
    for r, i in last.items():
        closing[i].append(r)
    parity: dict = {r: 0 for r in last}
    m = len(facets)

    def flip(i: int) -> None:
        for r in ridges_of[i]:
            parity[r] ^= 1

    def search(i: int, chosen: int) -> bool:
        if i == m:
            return 0 < chosen < m
        for take in (1, 0):
            if take:
                flip(i)
            found = all(parity[r] == 0 for r in closing[i]) and search(i + 1, chosen + take)
            if take:
                flip(i)
            if found:
                return True
        return False

    return not search(0, 0)


__all__ = [
    "BettiVector", "CapacityError", "ChainComplexMatrices", "Field", "betti_numbers",
    "chain_complex", "euler_characteristic", "face_counts", "faces", "is_minimal_n_cycle",
]

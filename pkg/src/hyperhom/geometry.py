"""Standard-simplex realization of hypergraphs in Q^N.

Vertex ``v_i`` goes to the unit vector ``e_i``.  An open cell is represented
finitely by its vertex points and its barycenter; everything checkable about
disjointness of cells is checked on those.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .hypergraph import Hyperedge, Hypergraph, VertexSet, complement

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Embedding:
    vertex_set: VertexSet
    vertex_points: tuple[Point, ...]

    def point(self, i: int) -> Point:
        return self.vertex_points[i]

    @property
    def ambient_dimension(self) -> int:
        return len(self.vertex_set)


@dataclass(frozen=True)
class CellDescriptor:
    hyperedge: Hyperedge
    vertex_points: tuple[Point, ...]
    barycenter: Point

    @property
    def support(self) -> frozenset[int]:
        """Coordinates carrying non-zero barycentric weight."""
        return frozenset(i for i, x in enumerate(self.barycenter) if x != 0)


def embed(V: VertexSet) -> Embedding:
    N = len(V)
    if N < 1:
        raise ValueError("cannot embed an empty vertex set")
    one, zero = Fraction(1), Fraction(0)
    points = tuple(tuple(one if j == i else zero for j in range(N)) for i in range(N))
    return Embedding(V, points)


def cell(sigma: Hyperedge, emb: Embedding) -> CellDescriptor:
    pts = tuple(emb.point(i) for i in sigma)
    w = Fraction(1, len(sigma))
    bary = tuple(sum((p[j] for p in pts), Fraction(0)) * w for j in range(emb.ambient_dimension))
    return CellDescriptor(sigma, pts, bary)


def realization_cells(h: Hypergraph, emb: Embedding) -> list[CellDescriptor]:
    return [cell(e, emb) for e in h.sorted_edges()]


@dataclass(frozen=True)
class DisjointnessReport:
    passed: bool
    cells: int
    pairs_checked: int
    violation: tuple[Hyperedge, Hyperedge] | None = None


def check_disjointness(h: Hypergraph, emb: Embedding) -> DisjointnessReport:
    """Witness that open cells of distinct hyperedges never meet.

    Two open simplices of the standard embedding intersect only if their
    supports coincide, so distinct supports (hence distinct barycenters)
    for every pair is the finite certificate.
    """
    cells = realization_cells(h, emb)
    pairs = 0
    for a, b in combinations(cells, 2):
        pairs += 1
        if a.support == b.support or a.barycenter == b.barycenter:
            return DisjointnessReport(False, len(cells), pairs, (a.hyperedge, b.hyperedge))
    return DisjointnessReport(True, len(cells), pairs)


@dataclass(frozen=True)
class ComplementReport:
    passed: bool
    remaining: tuple[Hyperedge, ...]
    expected: tuple[Hyperedge, ...]


def check_complement_cells(h2: Hypergraph, h1: Hypergraph, emb: Embedding) -> ComplementReport:
    """Compare the cells of ``h2 \\ h1`` with the set difference of cell lists."""
    diff = complement(h2, h1)
    got = {c.hyperedge: c.barycenter for c in realization_cells(diff, emb)}
    removed = {c.hyperedge for c in realization_cells(h1, emb)}
    want = {c.hyperedge: c.barycenter for c in realization_cells(h2, emb) if c.hyperedge not in removed}
    order = Hyperedge.sort_key
    return ComplementReport(
        got == want,
        tuple(sorted(got, key=order)),
        tuple(sorted(want, key=order)),
    )


def format_coordinate(x: Fraction, decimal_precision: int | None = None) -> str:
    if decimal_precision is None:
        return str(x)
    return f"{float(x):.{decimal_precision}g}"


def realization_document(
    h: Hypergraph, emb: Embedding | None = None, decimal_precision: int | None = None
) -> dict:
    """JSON-ready coordinates of every vertex and cell of ``h``."""
    emb = emb or embed(h.vertex_set)
    V = h.vertex_set

    def fmt(p: Point) -> list[str]:
        return [format_coordinate(x, decimal_precision) for x in p]

    return {
        "vertices": [{"label": V.label(i), "point": fmt(emb.point(i))} for i in range(len(V))],
        "cells": [
            {
                "vertices": h.edge_labels(c.hyperedge),
                "dimension": c.hyperedge.dimension,
                "barycenter": fmt(c.barycenter),
            }
            for c in realization_cells(h, emb)
        ],
    }

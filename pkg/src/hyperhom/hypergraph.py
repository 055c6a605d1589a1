"""Vertex sets, hyperedges and hypergraphs on a finite totally ordered set.

A hyperedge is stored as a strictly increasing tuple of vertex indices, so
the total order on the vertex set is simply the declaration order of the
labels.  Hypergraphs are immutable; every operation returns a new one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionOutOfRangeError,
    DuplicateVertexError,
    TooManyVerticesError,
    UnknownVertexError,
    VertexSetMismatchError,
)

# Guardrail for anything that enumerates the complete hypergraph (2^N - 1 edges).
MAX_VERTICES = 24


@dataclass(frozen=True)
class VertexSet:
    """Ordered collection of distinct vertex labels.

    The position of a label in ``labels`` is its rank in the total order.
    """

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateVertexError(f"vertex label {label!r} declared twice")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of_size(cls, n: int, prefix: str = "v") -> VertexSet:
        """``VertexSet.of_size(3)`` gives ``v0 < v1 < v2``."""
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def check_size(self, max_vertices: int | None = MAX_VERTICES) -> None:
        if max_vertices is not None and len(self) > max_vertices:
            raise TooManyVerticesError(
                f"{len(self)} vertices exceeds the configured cap of {max_vertices}"
            )


class Hyperedge(tuple):
    """Non-empty, strictly increasing tuple of vertex indices."""

    def __new__(cls, vertices: Iterable[int]) -> Hyperedge:
        self = super().__new__(cls, (int(v) for v in vertices))
        if not self:
            raise ValueError("a hyperedge needs at least one vertex")
        for a, b in zip(self, self[1:]):
            if a >= b:
                raise ValueError(f"hyperedge indices must be strictly increasing: {tuple(self)}")
        return self

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return f"Hyperedge{tuple(self)}"


def make_hyperedge(labels: Sequence[str], V: VertexSet) -> Hyperedge:
    """Build a hyperedge from labels given in any order.

    Raises :class:`UnknownVertexError` for labels outside ``V`` and
    :class:`DuplicateVertexError` for repeats.
    """
    idx = [V.index(lab) for lab in labels]
    if len(set(idx)) != len(idx):
        raise DuplicateVertexError(f"repeated vertex in hyperedge {list(labels)}")
    return Hyperedge(sorted(idx))


@dataclass(frozen=True)
class Hypergraph:
    vertex_set: VertexSet
    edges: frozenset[Hyperedge] = frozenset()

    def __post_init__(self) -> None:
        n = len(self.vertex_set)
        edges = frozenset(e if isinstance(e, Hyperedge) else Hyperedge(e) for e in self.edges)
        for e in edges:
            if e[-1] >= n or e[0] < 0:
                raise UnknownVertexError(f"hyperedge {tuple(e)} has an index outside 0..{n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_labels(cls, V: VertexSet, edges: Iterable[Sequence[str]]) -> Hypergraph:
        return cls(V, frozenset(make_hyperedge(e, V) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[Hyperedge]:
        return iter(self.sorted_edges())

    def sorted_edges(self) -> list[Hyperedge]:
        """Edges ordered by dimension, then lexicographically."""
        return sorted(self.edges, key=Hyperedge.sort_key)

    def of_dimension(self, n: int) -> list[Hyperedge]:
        return sorted(e for e in self.edges if len(e) == n + 1)

    def counts_by_dimension(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for e in self.edges:
            counts[e.dimension] = counts.get(e.dimension, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def top_dimension(self) -> int:
        return max((e.dimension for e in self.edges), default=-1)

    def edge_labels(self, e: Hyperedge) -> list[str]:
        return [self.vertex_set.label(i) for i in e]

    def format_edge(self, e: Hyperedge) -> str:
        return "".join(self.edge_labels(e))

    def __str__(self) -> str:
        return "{" + ", ".join(self.format_edge(e) for e in self.sorted_edges()) + "}"

    def union(self, other: Hypergraph) -> Hypergraph:
        _same_vertex_set(self, other)
        return Hypergraph(self.vertex_set, self.edges | other.edges)


def _same_vertex_set(h1: Hypergraph, h2: Hypergraph) -> None:
    if h1.vertex_set != h2.vertex_set:
        raise VertexSetMismatchError("hypergraphs live on different vertex sets")


def complete_uniform(V: VertexSet, n: int) -> Hypergraph:
    """All ``C(#V, n+1)`` hyperedges of dimension ``n``."""
    if not 0 <= n <= len(V) - 1:
        raise DimensionOutOfRangeError(f"dimension {n} outside 0..{len(V) - 1}")
    return Hypergraph(V, frozenset(Hyperedge(c) for c in combinations(range(len(V)), n + 1)))


def complete(V: VertexSet, max_vertices: int | None = MAX_VERTICES) -> Hypergraph:
    """The complete hypergraph: every non-empty subset of ``V``."""
    V.check_size(max_vertices)
    N = len(V)
    edges = frozenset(
        Hyperedge(c) for size in range(1, N + 1) for c in combinations(range(N), size)
    )
    return Hypergraph(V, edges)


def complement(h2: Hypergraph, h1: Hypergraph) -> Hypergraph:
    """Hyperedges of ``h2`` that are not in ``h1``."""
    _same_vertex_set(h1, h2)
    return Hypergraph(h2.vertex_set, h2.edges - h1.edges)


def _codim_one_faces(e: Hyperedge) -> Iterator[Hyperedge]:
    if len(e) == 1:
        return
    for i in range(len(e)):
        yield Hyperedge(e[:i] + e[i + 1:])


def _codim_one_cofaces(e: Hyperedge, n_vertices: int) -> Iterator[Hyperedge]:
    members = set(e)
    for v in range(n_vertices):
        if v not in members:
            yield Hyperedge(sorted((*e, v)))


def is_simplicial(h: Hypergraph) -> bool:
    """True iff every non-empty subset of every hyperedge is present.

    Closure under all faces follows from closure under codimension-one faces.
    """
    return all(f in h.edges for e in h.edges for f in _codim_one_faces(e))


def is_cosimplicial(h: Hypergraph) -> bool:
    """True iff every superset (within the complete hypergraph) of every hyperedge is present."""
    n = len(h.vertex_set)
    return all(c in h.edges for e in h.edges for c in _codim_one_cofaces(e, n))


def simplicial_closure(h: Hypergraph) -> Hypergraph:
    out: set[Hyperedge] = set()
    stack = list(h.edges)
    while stack:
        e = stack.pop()
        if e in out:
            continue
        out.add(e)
        stack.extend(_codim_one_faces(e))
    return Hypergraph(h.vertex_set, frozenset(out))


def cosimplicial_closure(h: Hypergraph) -> Hypergraph:
    n = len(h.vertex_set)
    out: set[Hyperedge] = set()
    stack = list(h.edges)
    while stack:
        e = stack.pop()
        if e in out:
            continue
        out.add(e)
        stack.extend(_codim_one_cofaces(e, n))
    return Hypergraph(h.vertex_set, frozenset(out))

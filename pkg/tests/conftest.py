from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import hypothesis.strategies as st
import pytest

from hyperhom.calculus import CodiffForm, DiffForm
from hyperhom.hypergraph import Hyperedge, Hypergraph, VertexSet, simplicial_closure
from hyperhom.paths import PathVector

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f" [{detail}]" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def hg(n: int, *edges) -> Hypergraph:
    """Hypergraph on ``v0..v{n-1}`` from index tuples."""
    return Hypergraph(VertexSet.of_size(n), frozenset(Hyperedge(e) for e in edges))


def triangle_boundary() -> Hypergraph:
    return hg(3, (0,), (1,), (2,), (0, 1), (0, 2), (1, 2))


def cotriangle() -> Hypergraph:
    return hg(3, (0, 1), (0, 2), (0, 1, 2))


def weighted(cls, f):
    return cls.weighted({i: c for i, c in enumerate(f)})


# --- strategies ----------------------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-3, max_value=3).map(Fraction)


@st.composite
def vertex_counts(draw, lo=1, hi=4):
    return draw(st.integers(lo, hi))


@st.composite
def path_vectors(draw, n_vertices: int, grade: int, max_terms: int = 4):
    paths = st.tuples(*[st.integers(0, n_vertices - 1)] * (grade + 1))
    pairs = draw(st.lists(st.tuples(paths, small_ints), min_size=0, max_size=max_terms))
    return PathVector.from_pairs(pairs)


@st.composite
def forms(draw, cls, n_vertices: int, grade: int, max_terms: int = 4):
    keys = st.tuples(*[st.integers(0, n_vertices - 1)] * grade)
    table = draw(st.dictionaries(keys, small_ints, max_size=max_terms))
    return cls(grade, table)


@st.composite
def simplicial_complexes(draw, max_vertices: int = 6):
    n = draw(st.integers(1, max_vertices))
    all_edges = [c for k in range(1, n + 1) for c in combinations(range(n), k)]
    gens = draw(st.lists(st.sampled_from(all_edges), max_size=4))
    return simplicial_closure(hg(n, *gens))


def odd_diff_forms(n_vertices: int):
    return st.sampled_from([1, 3]).flatmap(lambda k: forms(DiffForm, n_vertices, k))


def odd_codiff_forms(n_vertices: int):
    return st.sampled_from([1, 3]).flatmap(lambda k: forms(CodiffForm, n_vertices, k))

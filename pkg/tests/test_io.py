import json
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import FIXTURES, path_vectors, simplicial_complexes
from hyperhom import io
from hyperhom.calculus import CodiffForm, DiffForm
from hyperhom.errors import KindMismatchError, ParseError
from hyperhom.hypergraph import VertexSet
from hyperhom.paths import PathVector

V3 = VertexSet.of_size(3)


def test_rationals_round_trip():
    assert io.format_rational(Fraction(-2, 6)) == "-1/3"
    assert io.format_rational(0) == "0"
    assert io.parse_rational("3/6") == Fraction(1, 2)
    assert io.parse_rational(2) == 2
    for bad in ("x", True, None, "1/0"):
        with pytest.raises(ParseError):
            io.parse_rational(bad)


def test_load_fixture_complex():
    h, kind = io.load_complex(FIXTURES / "triangle_K.json")
    assert kind == "simplicial" and len(h) == 6
    io.check_kind(h, kind)
    with pytest.raises(KindMismatchError):
        io.check_kind(h, "cosimplicial")


def test_malformed_documents():
    with pytest.raises(ParseError):
        io.ComplexDocument.from_dict({"vertices": "v0", "edges": []})
    with pytest.raises(ParseError):
        io.ComplexDocument.from_dict({"vertices": ["a"], "edges": [["b"]]}).to_hypergraph()
    with pytest.raises(ParseError):
        io.operator_from_dict({"variance": "diff", "terms": [{"vertices": ["v0", "v0"]}]}, V3)
    with pytest.raises(ParseError):
        io.operator_from_dict({"variance": "sideways", "terms": []}, V3)
    with pytest.raises(ParseError):
        io.operator_from_dict({"variance": "diff", "terms": []}, V3)


def test_operator_terms_are_sign_normalized():
    doc = {"variance": "diff", "terms": [{"vertices": ["v1", "v0"], "coeff": "2"}]}
    assert io.operator_from_dict(doc, V3) == DiffForm(2, {(0, 1): -2})


def test_inconsistent_t_warns_and_uses_grade():
    doc = io.load_json(FIXTURES / "triangle_alpha_declared_t1.json")
    with pytest.warns(UserWarning, match="inconsistent"):
        form = io.operator_from_dict(doc, V3)
    assert form.grade == 1


def test_operator_round_trip():
    w = CodiffForm(2, {(0, 2): Fraction(-1, 2), (1, 2): 3})
    assert io.operator_from_dict(io.operator_to_dict(w, V3), V3) == w


def test_path_literals():
    xi = io.parse_path_literal("2 * v0 v1 + -1/2 * v1 v2", V3)
    assert xi == PathVector({(0, 1): 2, (1, 2): Fraction(-1, 2)})
    assert io.parse_path_literal("v2", V3) == PathVector.elementary(2)
    assert io.parse_path_literal("- v2", V3) == PathVector.elementary(2, coeff=-1)
    js = '[{"path": ["v1", "v0"], "coeff": "3"}]'
    assert io.parse_path_literal(js, V3) == PathVector.elementary(1, 0, coeff=3)
    for bad in ("", "v9", "v0 + v0 v1", "x * v0"):
        with pytest.raises(ParseError):
            io.parse_path_literal(bad, V3)


def test_format_path_vector():
    xi = PathVector({(1,): 1, (0,): Fraction(-1, 2)})
    assert io.format_path_vector(xi, V3) == "-1/2 · v0 + 1 · v1"
    assert io.format_path_vector(PathVector(), V3) == "0"


@given(path_vectors(3, 2))
def test_path_vectors_round_trip(xi):
    assert io.path_vector_from_terms(io.path_vector_to_terms(xi, V3), V3) == xi
    if xi:
        assert io.parse_path_literal(
            " + ".join(f"{c} * " + " ".join(f"v{i}" for i in p) for p, c in xi.items()), V3
        ) == xi


@given(simplicial_complexes(), st.sampled_from([None, "simplicial", "hypergraph"]))
def test_complexes_round_trip(K, kind):
    doc = io.complex_to_dict(K, kind)
    back = io.ComplexDocument.from_dict(json.loads(io.dumps(doc)))
    assert back.to_hypergraph() == K
    assert back.declared_kind == kind

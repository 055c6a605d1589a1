"""JSON documents: complexes, operators, path vectors and reports.

Rationals are serialized as canonical strings (``"-1/3"``, ``"2"``, ``"0"``).
"""
from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .calculus import CODIFF, DIFF, CodiffForm, DiffForm, Form
from .errors import HyperhomError, KindMismatchError, ParseError
from .hypergraph import MAX_VERTICES, Hypergraph, VertexSet, is_cosimplicial, is_simplicial
from .paths import PathVector, cyclic_part, project_sorted

KINDS = ("simplicial", "cosimplicial", "hypergraph")


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational: {x!r}")
    try:
        if isinstance(x, float):
            return Fraction(repr(x))
        if isinstance(x, (int, str)):
            return Fraction(x.strip() if isinstance(x, str) else x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {x!r}") from exc
    raise ParseError(f"not a rational: {x!r}")


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def dumps(doc: Any) -> str:
    """Deterministic JSON text (stable key order, UTF-8, trailing newline)."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# --- complexes -----------------------------------------------------------------

@dataclass(frozen=True)
class ComplexDocument:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]
    declared_kind: str | None = None

    @classmethod
    def from_dict(cls, doc: Any) -> ComplexDocument:
        if not isinstance(doc, dict):
            raise ParseError("complex document must be a JSON object")
        verts, edges = doc.get("vertices"), doc.get("edges")
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise ParseError("'vertices' must be a list of strings")
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and all(isinstance(v, str) for v in e) for e in edges
        ):
            raise ParseError("'edges' must be a list of label lists")
        kind = doc.get("declared_kind")
        if kind is not None and kind not in KINDS:
            raise ParseError(f"declared_kind must be one of {KINDS}")
        return cls(tuple(verts), tuple(tuple(e) for e in edges), kind)

    def to_hypergraph(self, max_vertices: int | None = MAX_VERTICES) -> Hypergraph:
        try:
            V = VertexSet(self.vertices)
            V.check_size(max_vertices)
            return Hypergraph.from_labels(V, self.edges)
        except HyperhomError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from exc


def load_complex(path: str | Path, max_vertices: int | None = MAX_VERTICES) -> tuple[Hypergraph, str | None]:
    doc = ComplexDocument.from_dict(load_json(path))
    return doc.to_hypergraph(max_vertices), doc.declared_kind


def kind_flags(h: Hypergraph) -> dict[str, bool]:
    return {"simplicial": is_simplicial(h), "cosimplicial": is_cosimplicial(h)}


def check_kind(h: Hypergraph, declared: str | None) -> None:
    if declared in (None, "hypergraph"):
        return
    if not kind_flags(h)[declared]:
        raise KindMismatchError(f"complex declared {declared!r} but is not")


def complex_to_dict(h: Hypergraph, declared_kind: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "vertices": list(h.vertex_set.labels),
        "edges": [h.edge_labels(e) for e in h.sorted_edges()],
    }
    if declared_kind is not None:
        doc["declared_kind"] = declared_kind
    return doc


# --- operators -----------------------------------------------------------------

def _form_class(variance: str) -> type[Form]:
    if variance == DIFF:
        return DiffForm
    if variance == CODIFF:
        return CodiffForm
    raise ParseError(f"variance must be 'diff' or 'codiff', got {variance!r}")


def operator_from_dict(doc: Any, V: VertexSet) -> Form:
    """Build a form from the operator schema.

    Either ``terms`` (explicit monomials) or ``weighted`` (``{"f": {label:
    rational}}``, shorthand for the grade-one form ``sum f(v) x_v``) must be
    present.  An optional ``t`` inconsistent with the grade is ignored with a
    warning: the grade is authoritative.
    """
    if not isinstance(doc, dict):
        raise ParseError("operator document must be a JSON object")
    cls = _form_class(doc.get("variance"))
    has_terms, has_weighted = "terms" in doc, "weighted" in doc
    if has_terms == has_weighted:
        raise ParseError("operator needs exactly one of 'terms' or 'weighted'")
    grade = doc.get("grade")
    if grade is not None and (not isinstance(grade, int) or isinstance(grade, bool) or grade < 0):
        raise ParseError("'grade' must be a non-negative integer")

    try:
        if has_weighted:
            f = doc["weighted"].get("f") if isinstance(doc["weighted"], dict) else None
            if not isinstance(f, dict):
                raise ParseError("'weighted' must be {\"f\": {label: rational}}")
            if grade not in (None, 1):
                raise ParseError("weighted operators have grade 1")
            form = cls.weighted({V.index(lab): parse_rational(c) for lab, c in f.items()})
        else:
            terms = doc["terms"]
            if not isinstance(terms, list):
                raise ParseError("'terms' must be a list")
            table: dict[tuple[int, ...], Fraction] = {}
            k = grade
            for term in terms:
                if not isinstance(term, dict) or not isinstance(term.get("vertices"), list):
                    raise ParseError("each term needs a 'vertices' list and a 'coeff'")
                idx = tuple(V.index(lab) for lab in term["vertices"])
                if len(set(idx)) != len(idx):
                    raise ParseError(f"repeated vertex in operator term {term['vertices']}")
                if k is None:
                    k = len(idx)
                elif len(idx) != k:
                    raise ParseError(f"term {term['vertices']} does not have grade {k}")
                table[idx] = table.get(idx, Fraction(0)) + parse_rational(term.get("coeff", 1))
            if k is None:
                raise ParseError("empty operator needs an explicit 'grade'")
            # unsorted keys are sign-normalized by Form
            form = cls(k, table)
    except HyperhomError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc

    t = doc.get("t")
    if t is not None and form.grade % 2 == 1 and t != (form.grade - 1) // 2:
        warnings.warn(
            f"declared t={t} is inconsistent with operator grade {form.grade}; "
            f"using t={(form.grade - 1) // 2}",
            stacklevel=2,
        )
    return form


def load_operator(path: str | Path, V: VertexSet) -> Form:
    return operator_from_dict(load_json(path), V)


def operator_to_dict(form: Form, V: VertexSet) -> dict:
    return {
        "variance": form.variance,
        "grade": form.grade,
        "terms": [
            {"vertices": [V.label(i) for i in key], "coeff": format_rational(c)}
            for key, c in form.items()
        ],
    }


# --- path vectors --------------------------------------------------------------

_TERM = re.compile(r"^\s*(?:([+-]?\s*[0-9]+(?:/[0-9]+)?)\s*\*\s*)?(-)?\s*(.+?)\s*$")


def parse_path_literal(text: str, V: VertexSet) -> PathVector:
    """Parse ``"v0 v1"``, ``"2 * v0 v1 + -1/2 * v1 v2"`` or a JSON term list.

    In the plain form, terms are separated by ``+``; a term is an optional
    ``coeff *`` prefix followed by whitespace-separated labels.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            return path_vector_from_terms(json.loads(text), V)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad path vector JSON: {exc}") from exc
    if not text:
        raise ParseError("empty path vector literal")
    pairs = []
    for chunk in text.split("+"):
        m = _TERM.match(chunk)
        if not m or not m.group(3):
            raise ParseError(f"cannot parse term {chunk!r}")
        coeff = parse_rational(m.group(1).replace(" ", "")) if m.group(1) else Fraction(1)
        if m.group(2):
            coeff = -coeff
        try:
            path = tuple(V.index(lab) for lab in m.group(3).split())
        except HyperhomError as exc:
            raise ParseError(str(exc)) from exc
        pairs.append((path, coeff))
    try:
        return PathVector.from_pairs(pairs)
    except HyperhomError as exc:
        raise ParseError(str(exc)) from exc


def path_vector_from_terms(terms: Any, V: VertexSet) -> PathVector:
    if not isinstance(terms, list):
        raise ParseError("path vector must be a list of {path, coeff}")
    pairs = []
    try:
        for t in terms:
            pairs.append((tuple(V.index(lab) for lab in t["path"]), parse_rational(t.get("coeff", 1))))
        return PathVector.from_pairs(pairs)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad path term: {exc}") from exc
    except HyperhomError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def path_vector_to_terms(xi: PathVector, V: VertexSet) -> list[dict]:
    return [{"path": [V.label(i) for i in p], "coeff": format_rational(c)} for p, c in xi.items()]


def format_path_vector(xi: PathVector, V: VertexSet) -> str:
    """Human-readable form, e.g. ``"1 · v1 - 1/2 · v0 v2"``; ``"0"`` for ZERO."""
    out = []
    for p, c in xi.items():
        body = " ".join(V.label(i) for i in p)
        if not out:
            out.append(f"{format_rational(c)} · {body}")
        elif c < 0:
            out.append(f"- {format_rational(-c)} · {body}")
        else:
            out.append(f"+ {format_rational(c)} · {body}")
    return " ".join(out) if out else "0"


def decomposition_document(xi: PathVector, V: VertexSet) -> dict:
    parts = {
        "result": xi,
        "sorted_part": project_sorted(xi),
        "cyclic_part": cyclic_part(xi),
    }
    return {
        name: {"terms": path_vector_to_terms(v, V), "text": format_path_vector(v, V)}
        for name, v in parts.items()
    }


def matrix_to_strings(rows: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in rows]

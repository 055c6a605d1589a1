"""Command-line interface.

Usage::

    hyperhom validate COMPLEX
    hyperhom betti COMPLEX OPERATOR [--degrees 0..3 | --m M --n-range 0..2] [--side homology]
    hyperhom induced COMPLEX OPERATOR MAP_OPERATOR --m M --n N
    hyperhom apply OPERATOR "v0 v1" [--vertices v0,v1,v2 | --complex COMPLEX]
    hyperhom complement COMPLEX [--from OTHER]
    hyperhom closure COMPLEX (--simplicial | --cosimplicial)
    hyperhom realize COMPLEX [--decimal]

Exit codes: 0 success, 1 parse error, 2 declared kind mismatch,
3 closure violation, 4 grade parity violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any

from . import io
from .calculus import DIFF, apply_form
from .errors import (
    GradeParityError,
    HyperhomError,
    KindMismatchError,
    NotAChainMapError,
    NotCosimplicialError,
    NotSimplicialError,
    ParseError,
)
from .geometry import check_disjointness, embed, realization_document
from .homology import (
    HomologyResult,
    betti_at_degree,
    cobetti_at_degree,
    degree_decompose,
    induced_comap,
    induced_map,
    t_from_grade,
)
from .hypergraph import (
    MAX_VERTICES,
    Hypergraph,
    VertexSet,
    complement,
    complete,
    cosimplicial_closure,
    simplicial_closure,
)

EXIT_OK, EXIT_PARSE, EXIT_KIND, EXIT_CLOSURE, EXIT_PARITY = 0, 1, 2, 3, 4

HOMOLOGY, COHOMOLOGY = "homology", "cohomology"


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means "kind mismatch" here
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if not m:
        raise ParseError(f"expected a range like '0..3', got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise ParseError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _load(args, path) -> Hypergraph:
    h, declared = io.load_complex(path, args.max_vertices)
    io.check_kind(h, declared)
    return h


def _side_for(form, side: str | None) -> str:
    natural = HOMOLOGY if form.variance == DIFF else COHOMOLOGY
    if side is not None and side != natural:
        raise ParseError(f"a {form.variance} operator computes {natural}, not {side}")
    return natural


def _degree_entry(res: HomologyResult, step: int, label: tuple[int, int] | None = None) -> dict:
    if label is None:
        lam, q = degree_decompose(res.degree, (step - 1) // 2)
        label = (q, lam)
    return {
        "d": res.degree,
        "dim_chain": res.dim_chain,
        "kernel": res.kernel,
        "boundary_rank": res.boundary_rank,
        "betti": res.dimension,
        "definition_index": {"m": label[0], "n": label[1]},
    }


def cmd_validate(args) -> tuple[dict, int]:
    h, declared = io.load_complex(args.complex, args.max_vertices)
    flags = io.kind_flags(h)
    ok = declared in (None, "hypergraph") or flags[declared]
    report = {
        "vertices": len(h.vertex_set),
        "edges": len(h),
        "counts_by_dimension": {str(d): c for d, c in h.counts_by_dimension().items()},
        "simplicial": flags["simplicial"],
        "cosimplicial": flags["cosimplicial"],
        "declared_kind": declared,
        "kind_ok": ok,
    }
    return report, EXIT_OK if ok else EXIT_KIND


def cmd_betti(args) -> tuple[dict, int]:
    h = _load(args, args.complex)
    form = io.load_operator(args.operator, h.vertex_set)
    side = _side_for(form, args.side)
    k = form.grade
    t = t_from_grade(k)
    if args.degrees is not None and (args.m is not None or args.n_range is not None):
        raise ParseError("use either --degrees or --m/--n-range")
    if args.m is not None or args.n_range is not None:
        m = args.m if args.m is not None else 0
        ns = _range(args.n_range) if args.n_range is not None else range(0, 1)
        targets = [(m + n * k, (m, n)) for n in ns]
    else:
        ds = _range(args.degrees) if args.degrees is not None else range(0, len(h.vertex_set))
        targets = [(d, None) for d in ds]
    compute = betti_at_degree if side == HOMOLOGY else cobetti_at_degree
    degrees = [_degree_entry(compute(h, form, d), k, label) for d, label in targets]
    return {
        "side": side,
        "operator_grade": k,
        "t": t,
        "degrees": degrees,
        "induced_maps": [],
    }, EXIT_OK


def cmd_induced(args) -> tuple[dict, int]:
    h = _load(args, args.complex)
    V = h.vertex_set
    form = io.load_operator(args.operator, V)
    fmap = io.load_operator(args.map_operator, V)
    if fmap.grade % 2:
        raise GradeParityError(f"map operator must have even grade, got {fmap.grade}")
    t_from_grade(form.grade)
    if form.variance != fmap.variance:
        raise ParseError("operator and map operator must share a variance")
    side = _side_for(form, None)
    if side == HOMOLOGY:
        im = induced_map(h, form, fmap, args.m, args.n)
    else:
        im = induced_comap(h, form, fmap, args.m, args.n)
    k = form.grade
    return {
        "side": side,
        "operator_grade": k,
        "map_grade": fmap.grade,
        "degrees": [
            _degree_entry(im.source, k, (args.m, args.n)),
            _degree_entry(im.target, k, (args.m - fmap.grade if side == HOMOLOGY else args.m + fmap.grade, args.n)),
        ],
        "induced_maps": [
            {
                "m": args.m,
                "n": args.n,
                "s": im.s,
                "source_degree": im.source.degree,
                "target_degree": im.target.degree,
                "source_basis": [io.path_vector_to_terms(r, V) for r in im.source.representatives],
                "target_basis": [io.path_vector_to_terms(r, V) for r in im.target.representatives],
                "matrix": io.matrix_to_strings(im.matrix),
                "rank": im.rank,
            }
        ],
    }, EXIT_OK


def _natural_key(label: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", label)]


def _apply_vertex_set(args, op_doc: Any) -> VertexSet:
    if args.complex is not None:
        return _load(args, args.complex).vertex_set
    if args.vertices is not None:
        return VertexSet(tuple(v.strip() for v in args.vertices.split(",") if v.strip()))
    if isinstance(op_doc, dict) and isinstance(op_doc.get("vertices"), list):
        return VertexSet(tuple(op_doc["vertices"]))
    # fall back to every label mentioned, in natural order (v2 < v10)
    labels: set[str] = set()
    if isinstance(op_doc, dict):
        for term in op_doc.get("terms") or []:
            labels.update(term.get("vertices", []) if isinstance(term, dict) else [])
        weighted = op_doc.get("weighted")
        if isinstance(weighted, dict) and isinstance(weighted.get("f"), dict):
            labels.update(weighted["f"])
    text = args.path.strip()
    if text.startswith("["):
        try:
            for term in json.loads(text):
                labels.update(term.get("path", []))
        except (ValueError, AttributeError) as exc:
            raise ParseError(f"bad path vector JSON: {exc}") from exc
    else:
        for chunk in text.split("+"):
            body = chunk.split("*")[-1]
            labels.update(tok for tok in body.split() if tok != "-")
    return VertexSet(tuple(sorted(labels, key=_natural_key)))


def cmd_apply(args) -> tuple[dict, int]:
    op_doc = io.load_json(args.operator)
    V = _apply_vertex_set(args, op_doc)
    form = io.operator_from_dict(op_doc, V)
    xi = io.parse_path_literal(args.path, V)
    out = apply_form(form, xi)
    return {
        "vertices": list(V.labels),
        "operator": io.operator_to_dict(form, V),
        "input": {"terms": io.path_vector_to_terms(xi, V), "text": io.format_path_vector(xi, V)},
        **io.decomposition_document(out, V),
    }, EXIT_OK


def cmd_complement(args) -> tuple[dict, int]:
    h1 = _load(args, args.complex)
    h2 = _load(args, args.from_) if args.from_ else complete(h1.vertex_set, args.max_vertices)
    return io.complex_to_dict(complement(h2, h1)), EXIT_OK


def cmd_closure(args) -> tuple[dict, int]:
    h = _load(args, args.complex)
    if args.cosimplicial:
        h.vertex_set.check_size(args.max_vertices)
        return io.complex_to_dict(cosimplicial_closure(h), "cosimplicial"), EXIT_OK
    return io.complex_to_dict(simplicial_closure(h), "simplicial"), EXIT_OK


def cmd_realize(args) -> tuple[dict, int]:
    h = _load(args, args.complex)
    emb = embed(h.vertex_set)
    doc = realization_document(h, emb, args.decimal_precision if args.decimal else None)
    report = check_disjointness(h, emb)
    doc["disjointness"] = {
        "passed": report.passed,
        "cells": report.cells,
        "pairs_checked": report.pairs_checked,
    }
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="hyperhom", description=__doc__.split("\n\n")[0])
    p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
    p.add_argument("--decimal-precision", type=int, default=12,
                   help="significant digits when decimals are requested (default 12)")
    p.add_argument("--max-vertices", type=int, default=MAX_VERTICES,
                   help=f"refuse vertex sets larger than this (default {MAX_VERTICES})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    s = sub.add_parser("validate", help="edge counts and closure properties")
    s.add_argument("complex")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("betti", help="Betti table of a (co)chain complex")
    s.add_argument("complex")
    s.add_argument("operator")
    s.add_argument("--degrees", help="absolute degree range, e.g. 0..3")
    s.add_argument("--m", type=int)
    s.add_argument("--n-range", help="definition index range, e.g. 0..2 (with --m)")
    s.add_argument("--side", choices=(HOMOLOGY, COHOMOLOGY))
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("induced", help="map induced by an even-grade operator")
    s.add_argument("complex")
    s.add_argument("operator")
    s.add_argument("map_operator")
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--n", type=int, default=0)
    s.set_defaults(func=cmd_induced)

    s = sub.add_parser("apply", help="apply an operator to a path vector")
    s.add_argument("operator")
    s.add_argument("path", help="e.g. 'v0 v1' or '2 * v0 v1 + -1 * v1 v2'")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--vertices", help="comma-separated labels fixing the vertex order")
    g.add_argument("--complex", help="take the vertex order from a complex file")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("complement", help="complement in the complete hypergraph (or --from)")
    s.add_argument("complex")
    s.add_argument("--from", dest="from_", help="complement inside this hypergraph instead")
    s.set_defaults(func=cmd_complement)

    s = sub.add_parser("closure", help="simplicial or co-simplicial closure")
    s.add_argument("complex")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--simplicial", action="store_true")
    g.add_argument("--cosimplicial", action="store_true")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("realize", help="coordinates of the standard realization")
    s.add_argument("complex")
    s.add_argument("--decimal", action="store_true", help="emit decimals instead of rationals")
    s.set_defaults(func=cmd_realize)
    return p


def _exit_code(exc: HyperhomError) -> int:
    if isinstance(exc, KindMismatchError):
        return EXIT_KIND
    if isinstance(exc, (NotSimplicialError, NotCosimplicialError, NotAChainMapError)):
        return EXIT_CLOSURE
    if isinstance(exc, GradeParityError):
        return EXIT_PARITY
    return EXIT_PARSE


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, code = args.func(args)
    except HyperhomError as exc:
        print(f"hyperhom: error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    text = io.dumps(doc)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())

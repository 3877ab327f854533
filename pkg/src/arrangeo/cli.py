"""Command-line front end.

Exit status: 0 on success, 1 when ``--assert`` is given and the verdict is
negative, 2 when the input cannot be read.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .arrangement import WeightedDigraph, build_arrangement, catalan, cone, shi
from .charpoly import (
    charpoly_deletion_restriction,
    charpoly_finite_field,
    charpoly_mobius,
    valid_primes,
)
from .contraction import WallChoice, contract, fresh_label
from .digraph import Digraph
from .freeness import formula_charpoly, is_free, ziegler_multiplicity
from .hereditary import contraction_closure, is_hereditarily_free
from .polynomial import IntPolynomial, factored_form, terao_check
from .tables import dichotomy_markdown, tables_markdown


class InputError(Exception):
    """Bad user input; reported with the offending field."""


def parse_weighted_digraph(data) -> WeightedDigraph:
    if not isinstance(data, dict):
        raise InputError("top level: expected an object with vertices, edges, weights")
    verts = data.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise InputError("vertices: expected a non-empty list of integers")
    for k, v in enumerate(verts):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"vertices[{k}]: {v!r} is not an integer")
    if len(set(verts)) != len(verts):
        raise InputError("vertices: labels must be distinct")
    vset = set(verts)
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("edges: expected a list of [from, to] pairs")
    clean = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2):
            raise InputError(f"edges[{k}]: expected [from, to]")
        for end in e:
            if end not in vset:
                raise InputError(f"edges[{k}]: endpoint {end!r} is not a declared vertex")
        if e[0] == e[1]:
            raise InputError(f"edges[{k}]: loops are not allowed")
        clean.append(tuple(e))
    raw = data.get("weights", {str(v): 0 for v in verts})
    if isinstance(raw, list):
        if len(raw) != len(verts):
            raise InputError(f"weights: expected {len(verts)} entries, got {len(raw)}")
        raw = {str(v): n for v, n in zip(verts, raw)}
    if not isinstance(raw, dict):
        raise InputError("weights: expected an object mapping vertex to weight")
    weights = {}
    for key, n in raw.items():
        try:
            v = int(key)
        except ValueError:
            raise InputError(f"weights.{key}: key is not a vertex label") from None
        if v not in vset:
            raise InputError(f"weights.{key}: not a declared vertex")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InputError(f"weights.{key}: {n!r} is not a nonnegative integer")
        weights[v] = n
    missing = vset - set(weights)
    if missing:
        raise InputError(f"weights: missing entries for {sorted(missing)}")
    return WeightedDigraph(Digraph(verts, clean), weights)


def load_input(args) -> WeightedDigraph:
    sources = [s for s in (args.input, args.shi, args.catalan) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of: an input file, --shi L M, --catalan L M")
    try:
        if args.shi is not None:
            return shi(*args.shi)
        if args.catalan is not None:
            return catalan(*args.catalan)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{args.input}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_weighted_digraph(data)


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _poly_payload(p: IntPolynomial) -> dict:
    exps = terao_check(p)
    return {"coefficients": list(p.coeffs), "text": str(p),
            "factored": factored_form(exps) if exps is not None else None}


def cmd_analyze(args) -> int:
    wg = load_input(args)
    rep = is_free(wg)
    exps = list(rep.exponents) if rep.exponents is not None else None
    if exps is not None and args.essential:
        exps.remove(0)
    zieg = ziegler_multiplicity(wg)
    lines = [f"pair: {wg.to_json()}",
             f"cone hyperplanes: {len(cone(build_arrangement(wg)))}",
             f"free: {'yes' if rep.free else 'no'}"]
    if rep.free:
        lines.append(f"witness order: {' < '.join(map(str, rep.witness_order))}")
        lines.append("exponents: {" + ", ".join(map(str, exps)) + "}")
    elif rep.forbidden_witness:
        name, triple = rep.forbidden_witness
        lines.append(f"forbidden induced subgraph: {name} on {list(triple)}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    lines.append("ziegler multiplicities: " + ", ".join(
        f"{{{a},{b}}}:{m}" for (a, b), m in sorted((tuple(sorted(p)), m) for p, m in zieg.items())))
    payload = rep.to_dict()
    payload["exponents"] = exps
    payload["ziegler"] = {f"{a},{b}": m for (a, b), m in sorted((tuple(sorted(p)), m) for p, m in zieg.items())}
    if args.charpoly:
        A = cone(build_arrangement(wg))
        mob = charpoly_mobius(A)
        dr = charpoly_deletion_restriction(A)
        lines.append(f"charpoly (cone): {mob}")
        lines.append(f"deletion-restriction agrees: {'yes' if mob == dr else 'NO'}")
        payload["charpoly"] = _poly_payload(mob)
        payload["charpoly_methods_agree"] = mob == dr
    _emit(args, lines, payload)
    return 1 if args.assert_ and not rep.free else 0


def cmd_charpoly(args) -> int:
    wg = load_input(args)
    A = build_arrangement(wg)
    if not args.affine:
        A = cone(A)
    if args.method == "ff":
        q = args.prime or valid_primes(A, 1)[0]
        try:
            count = charpoly_finite_field(A, q, jobs=args.jobs)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        _emit(args, [f"points off the arrangement over F_{q}: {count}"], {"prime": q, "count": count})
        return 0
    if args.method == "mobius":
        p = charpoly_mobius(A)
    elif args.method == "delrest":
        p = charpoly_deletion_restriction(A)
    else:
        rep = is_free(wg)
        if not rep.free:
            raise InputError("the product formula needs an admissible order; this digraph has none")
        p = formula_charpoly(wg, rep.witness_order)
        if not args.affine:
            p = p * IntPolynomial([-1, 1])
    payload = _poly_payload(p)
    lines = [f"chi(t) = {p}", f"coefficients: {list(p.coeffs)}"]
    if payload["factored"]:
        lines.append(f"factored: {payload['factored']}")
    else:
        lines.append("does not split into nonnegative integer roots")
    _emit(args, lines, payload)
    return 1 if args.assert_ and payload["factored"] is None else 0


def cmd_contract(args) -> int:
    wg = load_input(args)
    s, t, w = args.wall
    h = WallChoice(s, t, w)
    u = fresh_label(wg)
    try:
        out = contract(wg, h, u)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    mapping = {str(v): (u if v in (s, t) else v) for v in wg.vertices}
    _emit(args, [f"wall: {h}", f"relabeling: " + ", ".join(f"{k}->{v}" for k, v in mapping.items()),
                 out.to_json()],
          {"wall": h.to_list(), "relabeling": mapping, "contracted": out.to_dict()})
    return 0


def cmd_closure(args) -> int:
    wg = load_input(args)
    nodes = contraction_closure(wg, args.max_depth)
    lines = [f"closure nodes: {len(nodes)}"]
    for nd in nodes:
        chain = "; ".join(str(h) for h in nd.provenance) or "(root)"
        lines.append(f"{chain}: {nd.canonical.to_json()}")
    _emit(args, lines, {"count": len(nodes), "nodes": [
        {"provenance": [h.to_list() for h in nd.provenance], "canonical": nd.canonical.to_dict()}
        for nd in nodes]})
    return 0


def cmd_hereditary(args) -> int:
    wg = load_input(args)
    rep = is_hereditarily_free(wg, max_weight=args.max_weight, max_depth=args.max_depth)
    lines = [f"hereditarily free: {'yes' if rep.hereditarily_free else 'no'}",
             f"canonical nodes visited: {rep.nodes_visited}"]
    if rep.bounded:
        lines.append("bounded search: guards cut the closure, a 'yes' is only valid within them")
    if not rep.hereditarily_free:
        lines.append("witness chain: " + "; ".join(str(h) for h in rep.counterexample_chain))
        lines.append(f"failing pair: {rep.failing_node.to_json()}")
    _emit(args, lines, rep.to_dict())
    return 1 if args.assert_ and not rep.hereditarily_free else 0


def cmd_reproduce(args) -> int:
    parts = []
    both = not (args.tables or args.dichotomy)
    if args.tables or both:
        parts.append(tables_markdown())
    if args.dichotomy or both:
        parts.append(dichotomy_markdown())
    print("\n".join(parts), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrangeo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("input", nargs="?", help="weighted-digraph JSON file, or - for stdin")
        p.add_argument("--shi", nargs=2, type=int, metavar=("L", "M"))
        p.add_argument("--catalan", nargs=2, type=int, metavar=("L", "M"))
        p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--assert", dest="assert_", action="store_true",
                       help="exit 1 on a negative verdict")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("analyze", help="freeness, exponents, Ziegler multiplicities")
    common(p)
    p.add_argument("--essential", action="store_true", help="drop the 0 of the trivial factor")
    p.add_argument("--charpoly", action="store_true", help="also compute and cross-check chi")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the cone (or --affine)")
    common(p)
    p.add_argument("--method", choices=("mobius", "delrest", "ff", "formula"), default="mobius")
    p.add_argument("--prime", type=int)
    p.add_argument("--affine", action="store_true", help="use A(n, G) instead of its cone")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("contract", help="contract along one wall")
    common(p)
    p.add_argument("--wall", nargs=3, type=int, metavar=("S", "T", "W"), required=True)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("closure", help="all pairs reachable by contractions")
    common(p)
    p.add_argument("--max-depth", type=int)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("hereditary", help="hereditary freeness of the cone")
    common(p)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--max-depth", type=int)
    p.set_defaults(func=cmd_hereditary)

    p = sub.add_parser("reproduce", help="markdown report of the three-vertex tables and the dichotomy")
    p.add_argument("--tables", action="store_true")
    p.add_argument("--dichotomy", action="store_true")
    p.add_argument("--format", choices=("markdown",), default="markdown")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

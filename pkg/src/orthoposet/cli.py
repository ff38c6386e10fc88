"""Command-line entry point.

Subcommands: ``check`` (structural properties), ``verify`` (law suites),
``ops`` (operator tables as TSV or JSON), ``gen`` (named fixture models),
``search`` (enumerate models matching a property expression) and ``dot``
(Hasse diagram export).  Exit codes: 0 when everything requested holds
(for search: at least one model found), 1 when some check or law fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks as checks_mod
from .checks import CHECKS, MODE_ANTICHAINS, check_strong_skew_omp
from .core import OposetError, OrthoPoset
from .io import export_dot, parse_poset, serialize_poset
from .laws import SUITES, run_suites
from .models import FACTORIES, enumerate_orthoposets
from .operators import OP_ARITY, operator_table
from .reports import (
    format_witness,
    render_json,
    report_document,
)

PROPERTY_ALIASES = {
    "lattice": checks_mod.LATTICE,
    "orthomodular": checks_mod.ORTHOMODULAR,
    "somp": checks_mod.SKEW_OMP,
    "strong-somp": checks_mod.STRONG_SKEW_OMP,
    "boolean": checks_mod.BOOLEAN,
    "adjoint": checks_mod.ADJOINT_CONDITIONS,
    "benzene-free": checks_mod.BENZENE_FREE,
}


def _run_check(o: OrthoPoset, token: str, mode: str, identity, all_witnesses: bool):
    prop = PROPERTY_ALIASES[token]
    fn = CHECKS[prop]
    if prop == checks_mod.STRONG_SKEW_OMP:
        return fn(o, mode, all_witnesses=all_witnesses)
    if prop == checks_mod.BOOLEAN:
        return fn(o, identity, all_witnesses=all_witnesses)
    return fn(o, all_witnesses=all_witnesses)


def _load(path: str) -> OrthoPoset:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_poset(text)


def _emit(out: list[str], text: str):
    out.append(text)


class RequireExpr:
    """Tiny boolean expression over property tokens: ``&``, ``|``, ``!``, parens."""

    def __init__(self, text: str):
        self.tokens = self._lex(text)
        self.pos = 0
        self.ast = self._expr()
        if self.pos != len(self.tokens):
            raise OposetError(f"trailing input in property expression: {self.tokens[self.pos:]}")

    @staticmethod
    def _lex(text: str) -> list[str]:
        out = []
        i = 0
        while i < len(text):
            c = text[i]
            if c.isspace():
                i += 1
            elif c in "&|!()":
                out.append(c)
                i += 1
            else:
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "-"):
                    j += 1
                if j == i:
                    raise OposetError(f"bad character {c!r} in property expression")
                out.append(text[i:j])
                i = j
        return out

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _expr(self):
        node = self._term()
        while self._peek() == "|":
            self.pos += 1
            node = ("or", node, self._term())
        return node

    def _term(self):
        node = self._factor()
        while self._peek() == "&":
            self.pos += 1
            node = ("and", node, self._factor())
        return node

    def _factor(self):
        tok = self._peek()
        if tok == "!":
            self.pos += 1
            return ("not", self._factor())
        if tok == "(":
            self.pos += 1
            node = self._expr()
            if self._peek() != ")":
                raise OposetError("unbalanced parenthesis in property expression")
            self.pos += 1
            return node
        if tok is None or tok in ")&|":
            raise OposetError("malformed property expression")
        if tok not in PROPERTY_ALIASES:
            raise OposetError(f"unknown property {tok!r} (known: {', '.join(sorted(PROPERTY_ALIASES))})")
        self.pos += 1
        return ("prop", tok)

    def evaluate(self, o: OrthoPoset) -> bool:
        memo: dict[str, bool] = {}

        def prop(token: str) -> bool:
            if token not in memo:
                memo[token] = checks_mod.property_holds(o, PROPERTY_ALIASES[token])
            return memo[token]

        def walk(node) -> bool:
            kind = node[0]
            if kind == "prop":
                return prop(node[1])
            if kind == "not":
                return not walk(node[1])
            if kind == "and":
                return walk(node[1]) and walk(node[2])
            return walk(node[1]) or walk(node[2])

        return walk(self.ast)


def cmd_check(args, out) -> int:
    o = _load(args.file)
    tokens = args.property or list(PROPERTY_ALIASES)
    reports = [_run_check(o, t, args.mode, args.identity, args.all_witnesses) for t in tokens]
    if args.json:
        _emit(out, render_json(report_document(o.name, checks=reports)))
    else:
        for r in reports:
            status = "holds" if r.holds else "FAILS"
            extra = f" [{r.mode}]" if r.mode else ""
            _emit(out, f"{r.property_id}: {status}{extra} ({r.elapsed:.3f}s)\n")
            for w in r.witnesses:
                _emit(out, f"  witness: {format_witness(w)}\n")
    return 0 if all(r.holds for r in reports) else 1


def cmd_verify(args, out) -> int:
    o = _load(args.file)
    names = args.suite or None
    reports = run_suites(o, names, informational=args.informational,
                         all_witnesses=args.all_witnesses)
    if args.json:
        _emit(out, render_json(report_document(o.name, laws=reports)))
    else:
        for r in reports:
            status = "holds" if r.holds else "FAILS"
            gate = "" if r.applicable else " (hypothesis not met)"
            reading = f" [{r.reading}]" if r.reading else ""
            _emit(out, f"{r.law_id}: {status}{gate}{reading}\n")
            for w in r.witnesses:
                _emit(out, f"  witness: {format_witness(w)}\n")
    return 0 if all(r.holds for r in reports) else 1


def cmd_ops(args, out) -> int:
    o = _load(args.file)
    table = operator_table(o, args.op)
    if args.json:
        entries = [
            {"args": [o.names[i] for i in key], "result": list(o.labels(mask))}
            for key, mask in sorted(table.entries.items())
        ]
        doc = {"poset": o.name, "op": table.op_id, "arity": table.arity, "entries": entries}
        _emit(out, render_json(doc))
    else:
        for key, mask in sorted(table.entries.items()):
            cells = [o.names[i] for i in key]
            cells.append("{" + ",".join(o.labels(mask)) + "}")
            _emit(out, "\t".join(cells) + "\n")
    return 0


def cmd_gen(args, out) -> int:
    if args.model == "crown":
        o = FACTORIES["crown"](args.n)
    elif args.model == "powerset":
        o = FACTORIES["powerset"](args.k)
    else:
        o = FACTORIES[args.model]()
    _emit(out, serialize_poset(o))
    return 0


def cmd_search(args, out) -> int:
    predicate = RequireExpr(args.require).evaluate if args.require else None
    stream = enumerate_orthoposets(args.max_size, dedup=not args.no_dedup, filter=predicate)
    found = []
    for model in stream:
        found.append(model)
        if args.limit and len(found) >= args.limit:
            break
    if args.json:
        doc = {
            "max_size": args.max_size,
            "require": args.require or "",
            "found": len(found),
            "models": [serialize_poset(m) for m in found],
        }
        _emit(out, render_json(doc))
    elif found:
        _emit(out, "\n".join(serialize_poset(m) for m in found))
    else:
        _emit(out, "none found\n")
    return 0 if found else 1


def cmd_dot(args, out) -> int:
    _emit(out, export_dot(_load(args.file)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oposet",
                                     description="finite orthoposet toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--all-witnesses", action="store_true",
                       help="report every witness instead of the first")

    p_check = sub.add_parser("check", help="run structural property checks")
    p_check.add_argument("file", help="poset document ('-' for stdin)")
    p_check.add_argument("--property", action="append", choices=sorted(PROPERTY_ALIASES),
                         help="property to check (repeatable; default: all)")
    p_check.add_argument("--mode", choices=["subsets", "antichains"], default=MODE_ANTICHAINS,
                         help="quantification for strong-somp")
    p_check.add_argument("--identity", default="all", choices=["1", "2", "3", "4", "all"],
                         help="which distributive identity for boolean")
    add_common(p_check)
    p_check.set_defaults(fn=cmd_check)

    p_verify = sub.add_parser("verify", help="run law suites")
    p_verify.add_argument("file")
    p_verify.add_argument("--suite", action="append", choices=sorted(SUITES),
                          help="suite to run (repeatable; default: all that fit)")
    p_verify.add_argument("--informational", action="store_true",
                          help="evaluate gated laws even when their hypothesis fails")
    add_common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_ops = sub.add_parser("ops", help="print one operator table")
    p_ops.add_argument("file")
    p_ops.add_argument("--op", required=True, choices=sorted(OP_ARITY))
    p_ops.add_argument("--json", action="store_true")
    p_ops.set_defaults(fn=cmd_ops)

    p_gen = sub.add_parser("gen", help="emit a named fixture model")
    p_gen.add_argument("model", choices=sorted(FACTORIES))
    p_gen.add_argument("--n", type=int, default=4, help="crown width")
    p_gen.add_argument("--k", type=int, default=3, help="power set exponent")
    p_gen.set_defaults(fn=cmd_gen)

    p_search = sub.add_parser("search", help="enumerate orthoposets matching an expression")
    p_search.add_argument("--max-size", type=int, required=True)
    p_search.add_argument("--require", help="boolean property expression, e.g. 'strong-somp & !orthomodular'")
    p_search.add_argument("--limit", type=int, default=0, help="stop after this many matches")
    p_search.add_argument("--no-dedup", action="store_true", help="keep isomorphic duplicates")
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(fn=cmd_search)

    p_dot = sub.add_parser("dot", help="export a Hasse diagram in DOT syntax")
    p_dot.add_argument("file")
    p_dot.set_defaults(fn=cmd_dot)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    out: list[str] = []
    try:
        code = args.fn(args, out)
    except OposetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write("".join(out))
    return code


def main() -> None:
    sys.exit(run_cli())

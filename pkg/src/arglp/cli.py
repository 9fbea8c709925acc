"""Command-line entry point: ``arglp <command> ...``.

Exit codes: 0 ok, 1 usage, 2 parse, 3 validation, 4 resource limit,
5 internal invariant breach (and ``diff`` mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .direct import SEMANTICS
from .dot import export_dot
from .errors import ArgLPError
from .flatten import flatten_afd, flatten_afn, strip_mediated
from .framework import Kind, universe
from .generate import GenSpec, random_framework
from .harness import ENGINES, diff, solve
from .program import compile_framework, normalize
from .textio import emit_extension, emit_framework, emit_program, parse_framework

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path):
    return parse_framework(_read(path))


def _write(text, out=None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _braces(names):
    return "{" + ",".join(names) + "}"


def _text_line(m, u):
    ins = [a for a in u if a in m.pos]
    outs = [a for a in u if a in m.neg]
    und = [a for a in u if a not in m.pos and a not in m.neg]
    return f"in={_braces(ins)} out={_braces(outs)} undec={_braces(und)}"


# -- commands ---------------------------------------------------------------

def cmd_validate(args):
    f = _load(args.file)
    print(f"ok: {f.kind.value}, {len(f.args)} arguments, {len(f.attacks)} attacks, "
          f"{len(f.supports)} supports")
    return EXIT_OK


def cmd_compile(args):
    p = compile_framework(_load(args.file))
    if args.target == "normal":
        p = normalize(p)
    _write(emit_program(p), args.output)
    return EXIT_OK


def cmd_flatten(args):
    f = _load(args.file)
    if f.kind not in (Kind.AFN, Kind.AFD):
        raise UsageError(f"flatten expects an afn or afd framework, got {f.kind.value}")
    if args.interpretation == "n":
        f = f.with_kind(Kind.AFN)
        g = strip_mediated(f) if args.strip_mediated else flatten_afn(f)
    else:
        if args.strip_mediated:
            raise UsageError("--strip-mediated applies to the necessary interpretation only")
        g = flatten_afd(f.with_kind(Kind.AFD))
    _write(emit_framework(g), args.output)
    return EXIT_OK


def _print_models(models, f, as_json):
    u = universe(f)
    for m in models:
        print(emit_extension(m, u) if as_json else _text_line(m, u))


def cmd_solve(args):
    f = _load(args.file)
    models = solve(f, args.semantics, args.engine, force=args.force, backend=args.backend)
    _print_models(models, f, args.json)
    return EXIT_OK


def cmd_oracle(args):
    args.engine = "direct"
    return cmd_solve(args)


def cmd_diff(args):
    f = _load(args.file)
    report = diff(f, args.semantics, force=args.force, backend=args.backend,
                  minimize=not args.no_shrink)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_gen(args):
    try:
        spec = GenSpec(Kind.parse(args.kind), args.args, args.atts, args.sups,
                       args.recursion_rate, args.seed)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            f = random_framework(spec)
    except ValueError as e:
        raise UsageError(str(e)) from None
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _write(emit_framework(f), args.output)
    return EXIT_OK


def cmd_export_dot(args):
    _write(export_dot(_load(args.file)), args.output)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser():
    p = _Parser(prog="arglp", description="Argumentation frameworks as logic programs.")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None,
                   help="kernel backend (default: numba unless ARGLP_NUMBA=0)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="parse and validate a framework file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("compile", help="print the propositional or normal program")
    s.add_argument("file")
    s.add_argument("--target", choices=("prop", "normal"), default="prop")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("flatten", help="flatten a bipolar framework into an AF")
    s.add_argument("file")
    s.add_argument("--interpretation", choices=("n", "d"), required=True)
    s.add_argument("--strip-mediated", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_flatten)

    for name, func, engines in (("solve", cmd_solve, True), ("oracle", cmd_oracle, False),
                                ("diff", cmd_diff, False)):
        s = sub.add_parser(name)
        s.add_argument("file")
        s.add_argument("--semantics", choices=SEMANTICS, required=True)
        if engines:
            s.add_argument("--engine", choices=ENGINES, default="lp")
        if name != "diff":
            s.add_argument("--json", action="store_true", help="one JSON object per line")
        else:
            s.add_argument("--no-shrink", action="store_true",
                           help="report the input itself instead of a reduced counterexample")
        s.add_argument("--force", action="store_true", help="ignore the enumeration limits")
        s.set_defaults(func=func)

    s = sub.add_parser("gen", help="print a seeded random framework")
    s.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    s.add_argument("--args", type=int, required=True)
    s.add_argument("--atts", type=int, default=0)
    s.add_argument("--sups", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--recursion-rate", type=float, default=0.0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export-dot", help="print Graphviz DOT text")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_dot)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except ArgLPError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

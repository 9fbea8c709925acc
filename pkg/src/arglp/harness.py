"""Solving through either engine, and the lp-vs-direct differential runner."""

from __future__ import annotations

import json

from .direct import SELECTOR_OF, SEMANTICS, completion, complete_extensions, ext_key, select_extensions
from .framework import Framework, universe, validate
from .program import compile_framework
from .psm import enumerate_psms, enumerate_psms_normalized, select
from .textio import emit_extension, emit_framework

ENGINES = ("lp", "lp-normalized", "direct")


def sort_completions(models, f: Framework) -> list:
    key = ext_key(universe(f))
    return sorted(set(models), key=lambda m: (key(m.pos), key(m.neg)))


def solve(f: Framework, semantics: str, engine: str = "lp", force=False, backend=None) -> list:
    """Completions of the ``semantics`` extensions of ``f``, computed by ``engine``."""
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    if engine == "direct":
        cos = complete_extensions(f, force=force, backend=backend)
        return sort_completions([completion(E, f) for E in select_extensions(cos, f, semantics)], f)
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    p = compile_framework(f)
    if engine == "lp":
        models = enumerate_psms(p, force=force, backend=backend)
    else:
        models = enumerate_psms_normalized(p, force=force, backend=backend)
    which = SELECTOR_OF[semantics]
    if which is not None:
        models = select(models, which, p.atoms)
    return sort_completions(models, f)


def _model_json(m, u):
    return json.loads(emit_extension(m, u))


def _mismatch(f, semantics, force, backend):
    lp = set(solve(f, semantics, "lp", force, backend))
    dr = set(solve(f, semantics, "direct", force, backend))
    return lp, dr


def _without(f: Framework, name) -> Framework:
    """Remove ``name`` and, transitively, every interaction touching a removed element."""
    gone = {name}
    while True:
        more = {i for i, (s, t) in list(f.attacks.items()) + list(f.supports.items())
                if i not in gone and (s in gone or t in gone)}
        if not more:
            break
        gone |= more
    return Framework(f.kind, f.args - gone,
                     {i: st for i, st in f.attacks.items() if i not in gone},
                     {i: st for i, st in f.supports.items() if i not in gone})


def shrink(f: Framework, still_failing) -> Framework:
    """Greedy 1-minimal reduction: drop single elements while ``still_failing`` holds."""
    changed = True
    while changed:
        changed = False
        for name in sorted(f.attacks) + sorted(f.supports) + sorted(f.args):
            if name not in f.args and name not in f.attacks and name not in f.supports:
                continue
            g = _without(f, name)
            if not validate(g) and still_failing(g):
                f, changed = g, True
    return f


def diff(f: Framework, semantics: str, force=False, backend=None, minimize=True) -> dict:
    """Compare both engines; the report is JSON-ready (schema in docs/diff-report.md)."""
    u = universe(f)
    lp, dr = _mismatch(f, semantics, force, backend)
    lp_only = sort_completions(lp - dr, f)
    direct_only = sort_completions(dr - lp, f)
    report = {
        "semantics": semantics,
        "kind": f.kind.value,
        "match": lp == dr,
        "lp_count": len(lp),
        "direct_count": len(dr),
        "lp_only": [_model_json(m, u) for m in lp_only],
        "direct_only": [_model_json(m, u) for m in direct_only],
        "first_difference": None,
        "counterexample": None,
    }
    if lp != dr:
        first = sort_completions(lp_only + direct_only, f)[0]
        report["first_difference"] = {"side": "lp" if first in lp else "direct",
                                      **_model_json(first, u)}
        small = f
        if minimize:
            def failing(g):
                a, b = _mismatch(g, semantics, force, backend)
                return a != b
            small = shrink(f, failing)
        report["counterexample"] = emit_framework(small)
    return report

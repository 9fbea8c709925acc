"""Direct extension semantics: defeated/acceptable sets and brute-force enumeration.

This is the oracle side of the differential tests.  It never looks at the
compiled programs: complete extensions are the conflict-free fixpoints of
the acceptable-set operator of each framework kind.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .config import limit_elements
from .errors import NonUniqueGrounded, NonUniqueIdeal, ResourceLimit
from .flatten import flatten
from .framework import Framework, Kind, check, universe
from .psm import Interpretation

SEMANTICS = ("complete", "preferred", "stable", "semi-stable", "grounded", "ideal")

# extension semantics and the PSM selector that characterizes it
SELECTOR_OF = {"complete": None, "preferred": "MS", "stable": "ST", "semi-stable": "LM",
               "grounded": "WF", "ideal": "MD"}


def _fix(step, start):
    cur = frozenset(start)
    while True:
        nxt = frozenset(step(cur))
        if nxt == cur:
            return cur
        cur = nxt


# ---------------------------------------------------------------------------
# helper relations

def _support_plus(f: Framework, S):
    """Transitive closure of the pairs of the supports in S."""
    pairs = {f.supports[b] for b in f.supports if b in S}
    return _fix(lambda R: R | {(a, d) for a, b in R for c, d in R if b == c}, pairs)


def _afra_defeats(f: Framework, alpha, X):
    """alpha attacks X directly, or attacks the source of attack X."""
    t = f.attacks[alpha][1]
    return t == X or (X in f.attacks and f.attacks[X][0] == t)


def _rafn_attacks(f: Framework, b, X, S, plus):
    direct = {f.attacks[a][1] for a in f.attacks if a in S and f.attacks[a][0] == b}
    return X in direct or any((c, X) in plus for c in direct if c in f.args)


def _asaf_defeats(f: Framework, alpha, X, plus):
    if _afra_defeats(f, alpha, X):
        return True
    b = f.attacks[alpha][1]
    if b not in f.args:
        return False
    return (b, X) in plus or (X in f.attacks and (b, f.attacks[X][0]) in plus)


# ---------------------------------------------------------------------------
# defeated / acceptable sets as originally defined per kind

def def_set(f: Framework, S) -> frozenset:
    """Elements defeated w.r.t. S under the kind's own definition."""
    S = frozenset(S)
    k = f.kind
    if k is Kind.AF:
        return frozenset(t for s, t in f.attack_pairs if s in S)
    if k in (Kind.AFN, Kind.AFD):
        return def_set(flatten(f), S)
    if k is Kind.RAF:
        return frozenset(t for a, (s, t) in f.attacks.items() if a in S and s in S)
    if k is Kind.AFRA:
        return frozenset(X for X in universe(f)
                         if any(_afra_defeats(f, a, X) for a in f.attacks if a in S))
    if k is Kind.RAFN:
        plus = _support_plus(f, S)
        return frozenset(X for X in universe(f)
                         if any(_rafn_attacks(f, b, X, S, plus) for b in f.args if b in S))
    if k is Kind.ASAF:
        plus = _support_plus(f, S)
        return frozenset(X for X in universe(f)
                         if any(_asaf_defeats(f, a, X, plus) for a in f.attacks if a in S))
    return new_def_acc(f, S)[0]


def acc_set(f: Framework, S) -> frozenset:
    """Elements acceptable w.r.t. S under the kind's own definition."""
    S = frozenset(S)
    k = f.kind
    if k in (Kind.AFN, Kind.AFD):
        return acc_set(flatten(f), S)
    if k in (Kind.RAFD, Kind.AFRAD):
        return new_def_acc(f, S)[1]
    D = def_set(f, S)
    u = universe(f)
    if k is Kind.AF:
        return frozenset(a for a in u if all(s in D for s, t in f.attack_pairs if t == a))
    if k is Kind.RAF:
        return frozenset(X for X in u if all(a in D or s in D
                                             for a, (s, t) in f.attacks.items() if t == X))
    if k is Kind.AFRA:
        return frozenset(X for X in u if all(a in D for a in f.attacks if _afra_defeats(f, a, X)))
    # attack and support paths are followed through every element S does not
    # defeat, not only through the members of S
    live = frozenset(u) - D
    plus = _support_plus(f, live)
    if k is Kind.RAFN:
        return frozenset(X for X in u if all(b in D for b in f.args
                                             if _rafn_attacks(f, b, X, live, plus)))
    return frozenset(X for X in u if all(a in D for a in f.attacks
                                         if a in live and _asaf_defeats(f, a, X, plus)))


# ---------------------------------------------------------------------------
# recursive DEF / ACC

def _new_def_step(f: Framework, S):
    k = f.kind
    att = f.attacks.items()
    sup = [(b, st) for b, st in f.supports.items() if b in S]
    if k is Kind.AF:
        return lambda D: {t for s, t in f.attack_pairs if s in S}
    if k is Kind.AFN:
        return lambda D: ({t for s, t in f.attack_pairs if s in S}
                          | {t for s, t in f.support_pairs if s in D})
    if k is Kind.AFD:
        return lambda D: ({t for s, t in f.attack_pairs if s in S}
                          | {s for s, t in f.support_pairs if t in D})
    if k in (Kind.RAF, Kind.RAFN):
        return lambda D: ({t for a, (s, t) in att if a in S and s in S}
                          | {t for b, (s, t) in sup if s in D})
    if k is Kind.RAFD:
        return lambda D: ({t for a, (s, t) in att if a in S and s in S}
                          | {s for b, (s, t) in sup if t in D})
    if k in (Kind.AFRA, Kind.ASAF):
        return lambda D: ({a for a, (s, t) in att if s in D} | {t for a, (s, t) in att if a in S}
                          | {t for b, (s, t) in sup if s in D})
    # AFRAD
    return lambda D: ({a for a, (s, t) in att if s in D} | {t for a, (s, t) in att if a in S}
                      | {s for b, (s, t) in sup if t in D})


def _new_acc_step(f: Framework, D):
    k = f.kind
    u = universe(f)
    att = list(f.attacks.items())
    sup = list(f.supports.items())

    def step(A):
        out = set()
        for X in u:
            if k in (Kind.AF, Kind.AFN, Kind.AFD):
                ok = all(s in D for s, t in f.attack_pairs if t == X)
            elif k in (Kind.RAF, Kind.RAFN, Kind.RAFD):
                ok = all(a in D or s in D for a, (s, t) in att if t == X)
            else:
                ok = ((X not in f.attacks or f.attacks[X][0] in A)
                      and all(a in D for a, (s, t) in att if t == X))
            if not ok:
                continue
            if k is Kind.AFN:
                ok = all(s in A for s, t in f.support_pairs if t == X)
            elif k is Kind.AFD:
                ok = all(t in A for s, t in f.support_pairs if s == X)
            elif k.deductive:
                ok = all(b in D or t in A for b, (s, t) in sup if s == X)
            else:
                ok = all(b in D or s in A for b, (s, t) in sup if t == X)
            if ok:
                out.add(X)
        return out
    return step


def new_def_acc(f: Framework, S, fixpoint=None):
    """The recursively defined (DEF, ACC) pair for S.

    DEF is a fixpoint of its defining equation, the least one except for
    AFRAD (see :data:`DEF_FIXPOINT`); ACC is then the least fixpoint with DEF
    held fixed.
    """
    S = frozenset(S)
    fixpoint = fixpoint or DEF_FIXPOINT.get(f.kind, "least")
    step = _new_def_step(f, S)
    if fixpoint == "least":
        D = _fix(step, ())
    elif fixpoint == "greatest":
        D = _fix(step, universe(f))
    else:
        raise ValueError(f"fixpoint must be 'least' or 'greatest', got {fixpoint!r}")
    A = _fix(_new_acc_step(f, D), ())
    return D, A


DEF_FIXPOINT = {Kind.AFRAD: "greatest"}


def recursive_complete_extensions(f: Framework, limit=None, force=False) -> list:
    """Sets S with S ∩ DEF(S) = ∅ and ACC(S) = S, by brute force.

    For AFN and AFD this differs from :func:`complete_extensions`, which
    goes through the flattened AF; for every other kind the two agree.
    """
    check(f)
    u = universe(f)
    limit = limit_elements() if limit is None else limit
    if len(u) > limit and not force:
        raise ResourceLimit(f"{len(u)} elements exceed the enumeration limit of {limit}")
    out = []
    for r in range(len(u) + 1):
        for S in itertools.combinations(u, r):
            D, A = new_def_acc(f, S)
            if not (D & set(S)) and A == set(S):
                out.append(frozenset(S))
    return canonical_extensions(out, u)


# ---------------------------------------------------------------------------
# enumeration

_CODE = {Kind.AF: _kernels.K_AF, Kind.AFN: _kernels.K_AF, Kind.AFD: _kernels.K_AF,
         Kind.RAF: _kernels.K_RAF, Kind.AFRA: _kernels.K_AFRA, Kind.RAFN: _kernels.K_RAFN,
         Kind.ASAF: _kernels.K_ASAF, Kind.RAFD: _kernels.K_RAFD, Kind.AFRAD: _kernels.K_AFRAD}


def encode(f: Framework):
    """Integer arrays describing ``f`` for the subset-scan kernel."""
    g = flatten(f) if f.kind in (Kind.AFN, Kind.AFD) else f
    u = universe(f)
    idx = {x: i for i, x in enumerate(u)}
    arr = lambda xs: np.asarray(list(xs), dtype=np.int64)
    att = sorted(g.attacks)
    sup = sorted(g.supports) if f.kind.recursive else []
    a_id = arr(idx.get(a, 0) for a in att)
    a_src = arr(idx[g.attacks[a][0]] for a in att)
    a_tgt = arr(idx[g.attacks[a][1]] for a in att)
    s_id = arr(idx[b] for b in sup)
    s_src = arr(idx[g.supports[b][0]] for b in sup)
    s_tgt = arr(idx[g.supports[b][1]] for b in sup)
    args = arr(idx[a] for a in sorted(f.args))
    amask = np.zeros(len(att), dtype=np.int64)
    for k, a in enumerate(att if f.kind.recursive else ()):
        t = g.attacks[a][1]
        m = 1 << idx[t]
        for j, b in enumerate(att):
            if g.attacks[b][0] == t:
                m |= 1 << idx[b]
        amask[k] = m
    return _CODE[f.kind], u, (a_id, a_src, a_tgt, s_id, s_src, s_tgt, args, amask)


def ext_key(u):
    idx = {x: i for i, x in enumerate(u)}
    return lambda E: tuple(sorted(idx[x] for x in E))


def canonical_extensions(exts, u) -> list:
    return sorted(set(frozenset(e) for e in exts), key=ext_key(u))


def is_complete(f: Framework, S) -> bool:
    S = frozenset(S)
    return not (S & def_set(f, S)) and acc_set(f, S) == S


def complete_extensions(f: Framework, limit=None, force=False, backend=None, engine="kernel") -> list:
    """All complete extensions of ``f`` in canonical order.

    ``engine="sets"`` scans with the readable set-based definitions instead of
    the bitmask kernel (slow; used to cross-check the kernel).
    """
    check(f)
    u = universe(f)
    limit = limit_elements() if limit is None else limit
    if len(u) > limit and not force:
        raise ResourceLimit(f"{len(u)} elements exceed the enumeration limit of {limit} "
                            f"(use --force or ARGLP_LIMIT_ELEMENTS)")
    if engine == "sets":
        out = []
        for r in range(len(u) + 1):
            for S in itertools.combinations(u, r):
                if is_complete(f, S):
                    out.append(frozenset(S))
        return canonical_extensions(out, u)
    if len(u) > 62:
        raise ResourceLimit("more than 62 elements cannot be enumerated")
    code, u, arrays = encode(f)
    K = _kernels.backend(backend)
    masks = K.subset_scan(code, len(u), *arrays)
    exts = [frozenset(x for i, x in enumerate(u) if (int(m) >> i) & 1) for m in masks]
    return canonical_extensions(exts, u)


def defacc_masks(f: Framework, S, backend=None):
    """Kernel (def, acc) for one subset, as element sets (used for cross-checks)."""
    code, u, arrays = encode(f)
    idx = {x: i for i, x in enumerate(u)}
    m = 0
    for x in S:
        m |= 1 << idx[x]
    K = _kernels.backend(backend)
    D, A = K.defacc(code, np.int64(m), np.int64((1 << len(u)) - 1), *arrays)
    D, A = int(D), int(A)
    return (frozenset(x for x, i in idx.items() if (D >> i) & 1),
            frozenset(x for x, i in idx.items() if (A >> i) & 1))


# ---------------------------------------------------------------------------
# selectors

def _maximal(sets):
    return [s for s in sets if not any(s < o for o in sets)]


def select_extensions(cos, f: Framework, which: str) -> list:
    """Pick the extensions of semantics ``which`` from the full complete set ``cos``."""
    u = universe(f)
    cos = canonical_extensions(cos, u)
    if which == "complete":
        return cos
    if which == "preferred":
        return canonical_extensions(_maximal(cos), u)
    if which == "stable":
        full = frozenset(u)
        return canonical_extensions([S for S in _maximal(cos) if S | def_set(f, S) == full], u)
    if which == "semi-stable":
        rng = {S: S | def_set(f, S) for S in cos}
        return canonical_extensions([S for S in cos if not any(rng[S] < rng[o] for o in cos)], u)
    if which == "grounded":
        low = [S for S in cos if not any(o < S for o in cos)]
        if len(low) != 1:
            raise NonUniqueGrounded(f"{len(low)} minimal complete extensions")
        return low
    if which == "ideal":
        pr = _maximal(cos)
        cand = _maximal([S for S in cos if all(S <= P for P in pr)])
        if len(cand) != 1:
            raise NonUniqueIdeal(f"{len(cand)} maximal candidates for the ideal extension")
        return cand
    raise ValueError(f"unknown semantics {which!r}; expected one of {', '.join(SEMANTICS)}")


def completion(E, f: Framework) -> Interpretation:
    """The extension together with the negation of everything it defeats."""
    E = frozenset(E)
    return Interpretation(E, def_set(f, E) - E)


def solve_direct(f: Framework, which: str, **kw) -> list:
    return select_extensions(complete_extensions(f, **kw), f, which)

"""Partial stable models of propositional and normal programs, plus selectors.

A partial interpretation ``M`` is a partial stable model when the least
three-valued model of the program obtained by fixing every negated atom to
its value in ``M`` is ``M`` itself.  Enumeration is exhaustive over the atoms
left undefined by the Kripke-Kleene model (every PSM extends it), with the
candidate scan running in :mod:`arglp._kernels`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import limit_atoms
from .errors import NonConvergence, NonUniqueMaxDeterministic, NonUniqueMinimum, ResourceLimit, UnknownAtom
from .program import And, Lit, NormalProgram, Or, PropProgram, TrueConst, clauses_of, normalize


class TruthValue(enum.IntEnum):
    F = 0
    U = 1
    T = 2

    def __invert__(self):
        return TruthValue(2 - int(self))

    @classmethod
    def of(cls, b: bool):
        return cls.T if b else cls.F


@dataclass(frozen=True)
class Interpretation:
    """Consistent partial interpretation: atoms not in ``pos`` or ``neg`` are undefined."""

    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))
        clash = self.pos & self.neg
        if clash:
            raise ValueError(f"inconsistent interpretation, both true and false: {sorted(clash)}")

    @classmethod
    def from_literals(cls, lits):
        """Build from strings such as ``"a"`` and ``"~b"`` (``"-b"`` also accepted)."""
        pos, neg = set(), set()
        for l in lits:
            if l[:1] in ("~", "-", "¬"):
                neg.add(l[1:])
            else:
                pos.add(l)
        return cls(frozenset(pos), frozenset(neg))

    def value(self, atom) -> TruthValue:
        if atom in self.pos:
            return TruthValue.T
        if atom in self.neg:
            return TruthValue.F
        return TruthValue.U

    @property
    def literals(self) -> frozenset:
        return frozenset((a, True) for a in self.pos) | frozenset((a, False) for a in self.neg)

    def undefined(self, atoms) -> frozenset:
        return frozenset(a for a in atoms if a not in self.pos and a not in self.neg)

    def is_total(self, atoms) -> bool:
        return not self.undefined(atoms)

    def __le__(self, other):
        return self.pos <= other.pos and self.neg <= other.neg

    def __lt__(self, other):
        return self <= other and self != other

    def __str__(self):
        lits = sorted(self.pos) + ["~" + a for a in sorted(self.neg)]
        return "{" + ", ".join(lits) + "}"


def canonical_key(m: Interpretation, atoms):
    """Ternary-counter rank of ``m`` over ``atoms`` (first atom is the lowest digit)."""
    return tuple(int(m.value(a)) for a in reversed(tuple(atoms)))


def canonical(models, atoms) -> list:
    return sorted(set(models), key=lambda m: canonical_key(m, atoms))


# ---------------------------------------------------------------------------
# evaluation

def _eval(b, val_pos, val_neg):
    if isinstance(b, TrueConst):
        return TruthValue.T
    if isinstance(b, Lit):
        return val_pos(b.atom) if b.positive else ~val_neg(b.atom)
    if isinstance(b, And):
        return min(_eval(x, val_pos, val_neg) for x in b.items)
    if isinstance(b, Or):
        return max(_eval(x, val_pos, val_neg) for x in b.items)
    if isinstance(b, tuple):  # normal rule body
        return min((_eval(x, val_pos, val_neg) for x in b), default=TruthValue.T)
    raise TypeError(f"not a body formula: {b!r}")


def _atoms_of(b):
    if isinstance(b, Lit):
        yield b.atom
    elif isinstance(b, (And, Or)):
        for x in b.items:
            yield from _atoms_of(x)
    elif isinstance(b, tuple):
        for x in b:
            yield from _atoms_of(x)


def eval_body(b, m: Interpretation, universe=None) -> TruthValue:
    """Kleene value of body ``b`` under ``m``.

    With ``universe`` given, atoms outside it raise :class:`UnknownAtom`.
    """
    if universe is not None:
        known = set(universe)
        for a in _atoms_of(b):
            if a not in known:
                raise UnknownAtom(f"atom {a!r} is not in the universe")
    return _eval(b, m.value, m.value)


# ---------------------------------------------------------------------------
# founded partial models (normal programs)

def _rules_of(p):
    if isinstance(p, NormalProgram):
        return list(p.rules)
    out = []
    for head in p.atoms:
        cl = clauses_of(p.rules[head])
        if cl is None or any(len(c) > 1 for c in cl):
            raise ValueError("rule bodies must be literal conjunctions; normalize the program first")
        out.append((head, tuple(c[0] for c in cl)))
    return out


def reduct(n, m: Interpretation) -> list:
    """Positive instantiation of normal program ``n`` w.r.t. ``m``: ``[(head, positive_atoms)]``."""
    out = []
    for head, body in _rules_of(n):
        if any(not l.positive and l.atom in m.pos for l in body):
            continue
        if any(m.value(l.atom) is TruthValue.U for l in body):
            continue
        out.append((head, tuple(l.atom for l in body if l.positive)))
    return out


def least_model(q) -> frozenset:
    """Least model of a positive program given as ``[(head, body_atoms)]``."""
    true = set()
    changed = True
    while changed:
        changed = False
        for head, body in q:
            if head not in true and all(a in true for a in body):
                true.add(head)
                changed = True
    return frozenset(true)


def is_partial_model(n, m: Interpretation) -> bool:
    """Every false atom has all of its rules falsified by some body literal."""
    rules = _rules_of(n)
    for a in m.neg:
        for head, body in rules:
            if head == a and not any(_eval(l, m.value, m.value) is TruthValue.F for l in body):
                return False
    return True


def is_founded(n, m: Interpretation) -> bool:
    return least_model(reduct(n, m)) == m.pos


# ---------------------------------------------------------------------------
# three-valued stability

def _atoms(p):
    return tuple(p.atoms)


def _bodies(p):
    """Map atom -> list of rule bodies (a PropProgram has exactly one)."""
    if isinstance(p, NormalProgram):
        out = {a: [] for a in p.atoms}
        for head, body in p.rules:
            out.setdefault(head, []).append(body)
        return out
    return {a: [p.rules[a]] for a in p.atoms}


def least_three_valued(p, m: Interpretation) -> Interpretation:
    """Least three-valued model of ``p`` with negated atoms fixed to their value in ``m``."""
    atoms = _atoms(p)
    bodies = _bodies(p)
    cur = {a: TruthValue.F for a in atoms}
    for _ in range(2 * len(atoms) + 2):
        nxt = {a: max((_eval(b, cur.__getitem__, m.value) for b in bodies[a]), default=TruthValue.F)
               for a in atoms}
        if nxt == cur:
            return Interpretation(frozenset(a for a in atoms if cur[a] is TruthValue.T),
                                  frozenset(a for a in atoms if cur[a] is TruthValue.F))
        cur = nxt
    raise NonConvergence("Kleene iteration did not converge")


def is_psm(p, m: Interpretation) -> bool:
    """Three-valued stable condition for a propositional or normal program."""
    atoms = set(_atoms(p))
    if not (m.pos | m.neg) <= atoms:
        raise UnknownAtom(f"interpretation mentions atoms outside the program: "
                          f"{sorted((m.pos | m.neg) - atoms)}")
    return least_three_valued(p, m) == m


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class _Encoded:
    atoms: tuple
    index: dict
    cp: np.ndarray
    lp: np.ndarray
    la: np.ndarray
    ln: np.ndarray
    derived: tuple


def _encode(p):
    """CSR clause encoding, or None when some atom has several rules."""
    atoms = _atoms(p)
    if len(atoms) > 62:
        return None
    index = {a: i for i, a in enumerate(atoms)}
    clauses = []
    if isinstance(p, NormalProgram):
        bodies = _bodies(p)
        for a in atoms:
            if len(bodies[a]) > 1:
                return None
            if not bodies[a]:
                clauses.append([()])  # no rule: an empty clause is false
            else:
                clauses.append([(l,) for l in bodies[a][0]])
        derived = tuple(a for a in atoms if a in p.fresh)
    else:
        for a in atoms:
            cl = clauses_of(p.rules[a])
            if cl is None:
                return None
            clauses.append(cl)
        derived = ()
    cp, lp, la, ln = [0], [0], [], []
    for cl in clauses:
        for c in cl:
            for l in c:
                la.append(index[l.atom])
                ln.append(0 if l.positive else 1)
            lp.append(len(la))
        cp.append(len(lp) - 1)
    arr = lambda xs: np.asarray(xs, dtype=np.int64)
    return _Encoded(atoms, index, arr(cp), arr(lp), arr(la), arr(ln), derived)


def kripke_kleene(p) -> Interpretation:
    """Least fixpoint of the three-valued immediate consequence operator (from all-undefined)."""
    atoms = _atoms(p)
    bodies = _bodies(p)
    cur = Interpretation()
    for _ in range(len(atoms) + 2):
        vals = {a: max((_eval(b, cur.value, cur.value) for b in bodies[a]), default=TruthValue.F)
                for a in atoms}
        nxt = Interpretation(frozenset(a for a in atoms if vals[a] is TruthValue.T),
                             frozenset(a for a in atoms if vals[a] is TruthValue.F))
        if nxt == cur:
            return cur
        cur = nxt
    raise NonConvergence("Kripke-Kleene iteration did not converge")


def _mask(atoms, index):
    out = 0
    for a in atoms:
        out |= 1 << index[a]
    return out


def enumerate_psms(p, limit=None, force=False, backend=None) -> list:
    """All partial stable models of ``p`` in canonical order.

    ``p`` is a :class:`PropProgram` or :class:`NormalProgram`; fresh atoms of a
    normalized program are not enumerated but derived from their single rule.
    """
    atoms = _atoms(p)
    fresh = set(p.fresh) if isinstance(p, NormalProgram) else set()
    limit = limit_atoms() if limit is None else limit
    n_free = len([a for a in atoms if a not in fresh])
    if n_free > limit and not force:
        raise ResourceLimit(f"{n_free} atoms exceed the enumeration limit of {limit} "
                            f"(use --force or ARGLP_LIMIT_ATOMS)")
    kk = kripke_kleene(p)
    enc = _encode(p)
    if enc is None:
        return _enumerate_python(p, kk, fresh)
    free = [enc.index[a] for a in atoms if a not in fresh and kk.value(a) is TruthValue.U]
    fixP = _mask([a for a in kk.pos if a not in fresh], enc.index)
    fixN = _mask([a for a in kk.neg if a not in fresh], enc.index)
    derived = [enc.index[a] for a in enc.derived]
    K = _kernels.backend(backend)
    P, N = K.psm_scan(len(atoms), enc.cp, enc.lp, enc.la, enc.ln, np.int64(fixP), np.int64(fixN),
                      np.asarray(free, dtype=np.int64), np.asarray(derived, dtype=np.int64))
    models = []
    for pm, nm in zip(P.tolist(), N.tolist()):
        models.append(Interpretation(frozenset(a for a, i in enc.index.items() if (pm >> i) & 1),
                                     frozenset(a for a, i in enc.index.items() if (nm >> i) & 1)))
    return canonical(models, atoms)


def _enumerate_python(p, kk, fresh):
    atoms = _atoms(p)
    bodies = _bodies(p)
    free = [a for a in atoms if a not in fresh and kk.value(a) is TruthValue.U]
    out = []
    for vals in itertools.product((TruthValue.F, TruthValue.U, TruthValue.T), repeat=len(free)):
        pos = {a for a in kk.pos if a not in fresh} | {a for a, v in zip(free, vals) if v is TruthValue.T}
        neg = {a for a in kk.neg if a not in fresh} | {a for a, v in zip(free, vals) if v is TruthValue.F}
        base = Interpretation(frozenset(pos), frozenset(neg))
        for f in fresh:
            v = max((_eval(b, base.value, base.value) for b in bodies[f]), default=TruthValue.F)
            if v is TruthValue.T:
                pos.add(f)
            elif v is TruthValue.F:
                neg.add(f)
        m = Interpretation(frozenset(pos), frozenset(neg))
        if is_psm(p, m):
            out.append(m)
    return canonical(out, atoms)


def enumerate_psms_normalized(p: PropProgram, **kw) -> list:
    """PSMs of ``normalize(p)`` projected back onto the atoms of ``p``."""
    n = normalize(p)
    out = []
    for m in enumerate_psms(n, **kw):
        out.append(Interpretation(m.pos - set(n.fresh), m.neg - set(n.fresh)))
    return canonical(out, p.atoms)


# ---------------------------------------------------------------------------
# selectors

SELECTORS = ("WF", "MS", "ST", "LM", "MD")


def _maximal(models):
    return [m for m in models if not any(m < o for o in models)]


def _minimal(models):
    return [m for m in models if not any(o < m for o in models)]


def select(models, which: str, atoms) -> list:
    """Apply a PSM selector (WF, MS, ST, LM or MD) to the full PSM set of one program."""
    models = list(dict.fromkeys(models))
    which = which.upper()
    if which == "WF":
        low = _minimal(models)
        if len(low) != 1:
            raise NonUniqueMinimum(f"{len(low)} minimal partial stable models")
        return low
    ms = _maximal(models)
    if which == "MS":
        return canonical(ms, atoms)
    if which == "ST":
        return canonical([m for m in ms if m.is_total(atoms)], atoms)
    if which == "LM":
        und = {m: m.undefined(atoms) for m in ms}
        return canonical([m for m in ms if not any(und[o] < und[m] for o in ms)], atoms)
    if which == "MD":
        below = [m for m in models if all(m <= o for o in ms)]
        top = _maximal(below)
        if len(top) != 1:
            raise NonUniqueMaxDeterministic(f"{len(top)} maximal deterministic candidates")
        return top
    raise ValueError(f"unknown selector {which!r}; expected one of {', '.join(SELECTORS)}")


# ---------------------------------------------------------------------------
# well-founded model by alternating fixpoint

def _gamma(atoms, bodies, assumed):
    """Least two-valued model with every ``~a`` read as ``a not in assumed``."""
    T, F = TruthValue.T, TruthValue.F
    neg_val = lambda a: T if a in assumed else F
    true = set()
    changed = True
    while changed:
        changed = False
        pos_val = lambda a: T if a in true else F
        for a in atoms:
            if a not in true and any(_eval(b, pos_val, neg_val) is T for b in bodies[a]):
                true.add(a)
                changed = True
    return frozenset(true)


def well_founded(p) -> Interpretation:
    """Well-founded model via the alternating fixpoint of the Gelfond-Lifschitz operator.

    Works on formula bodies directly: positive subformulas are monotone, so
    the operator's least model is still reached by plain iteration.
    """
    atoms = _atoms(p)
    bodies = _bodies(p)
    true = frozenset()
    for _ in range(len(atoms) + 2):
        possible = _gamma(atoms, bodies, true)
        nxt = _gamma(atoms, bodies, possible)
        if nxt == true:
            return Interpretation(true, frozenset(a for a in atoms if a not in possible))
        true = nxt
    raise NonConvergence("alternating fixpoint did not converge")


# ---------------------------------------------------------------------------
# diagnostic: the maximal-founded reading

def founded_models(n, limit=None, force=False) -> list:
    """Every founded partial model of a normal program (exhaustive, diagnostic only)."""
    atoms = _atoms(n)
    limit = limit_atoms() if limit is None else limit
    if len(atoms) > limit and not force:
        raise ResourceLimit(f"{len(atoms)} atoms exceed the enumeration limit of {limit}")
    out = []
    for vals in itertools.product((TruthValue.F, TruthValue.U, TruthValue.T), repeat=len(atoms)):
        m = Interpretation(frozenset(a for a, v in zip(atoms, vals) if v is TruthValue.T),
                           frozenset(a for a, v in zip(atoms, vals) if v is TruthValue.F))
        if is_partial_model(n, m) and is_founded(n, m):
            out.append(m)
    return canonical(out, atoms)


def maximal_founded_models(n, **kw) -> list:
    """Founded models not strictly contained in another founded model."""
    return canonical(_maximal(founded_models(n, **kw)), _atoms(n))

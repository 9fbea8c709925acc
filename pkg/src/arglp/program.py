"""Compilation of frameworks into propositional programs, and normalization.

A propositional program has exactly one rule ``atom <- body`` per atom, the
body being a formula over literals.  The bodies produced by :func:`compile`
are conjunctions of clauses, each clause a literal or a disjunction of
literals; :func:`normalize` turns them into normal rules by introducing one
fresh ``__f<k>`` atom per disjunction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ReservedAtomClash
from .framework import Framework, Kind, check, universe

FRESH_PREFIX = "__f"


@dataclass(frozen=True)
class TrueConst:
    def __repr__(self):
        return "TRUE"


TRUE = TrueConst()


@dataclass(frozen=True)
class Lit:
    atom: str
    positive: bool = True

    def complement(self) -> "Lit":
        return Lit(self.atom, not self.positive)

    def __repr__(self):
        return self.atom if self.positive else "~" + self.atom


@dataclass(frozen=True)
class And:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise ValueError("And needs at least one child")


@dataclass(frozen=True)
class Or:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise ValueError("Or needs at least one child")


def neg(atom):
    return Lit(atom, False)


def pos(atom):
    return Lit(atom, True)


def body_atoms(b):
    if isinstance(b, Lit):
        return {b.atom}
    if isinstance(b, (And, Or)):
        out = set()
        for x in b.items:
            out |= body_atoms(x)
        return out
    return set()


def clauses_of(b):
    """The clause list of a conjunction-of-clauses body, or None for other shapes.

    Each clause is returned as a tuple of literals; ``TRUE`` has no clauses.
    """
    if isinstance(b, TrueConst):
        return []
    items = b.items if isinstance(b, And) else (b,)
    out = []
    for c in items:
        if isinstance(c, Lit):
            out.append((c,))
        elif isinstance(c, Or) and all(isinstance(x, Lit) for x in c.items):
            out.append(tuple(c.items))
        else:
            return None
    return out


def conj(clauses):
    """Build a body from clauses (literals or literal tuples); duplicates dropped."""
    seen = []
    for c in clauses:
        if isinstance(c, tuple):
            c = c[0] if len(c) == 1 else Or(c)
        if c not in seen:
            seen.append(c)
    if not seen:
        return TRUE
    return And(seen)


@dataclass(frozen=True)
class PropProgram:
    atoms: tuple
    rules: dict = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if set(self.rules) != set(self.atoms) or len(set(self.atoms)) != len(self.atoms):
            raise ValueError("a propositional program has exactly one rule per atom")


@dataclass(frozen=True)
class NormalProgram:
    """Rules ``head :- l1, ..., ln`` with literal bodies.

    ``fresh`` maps each introduced atom to the disjunction it stands for.
    """

    atoms: tuple
    rules: tuple
    fresh: dict = field(default_factory=dict, hash=False)

    @property
    def original_atoms(self):
        return tuple(a for a in self.atoms if a not in self.fresh)

    def as_prop(self) -> PropProgram:
        """View as a propositional program (one conjunctive rule per atom)."""
        bodies = {}
        for head, body in self.rules:
            if head in bodies:
                raise ValueError(f"atom {head!r} has more than one rule")
            bodies[head] = conj(body)
        for a in self.atoms:
            bodies.setdefault(a, None)
        missing = [a for a, b in bodies.items() if b is None]
        if missing:
            raise ValueError(f"atoms without a rule: {missing}")
        return PropProgram(self.atoms, bodies)


def program_from_rules(rules) -> PropProgram:
    """Convenience constructor: ``{"a": [neg("b")], "c": [(neg("a"), pos("d"))]}``."""
    return PropProgram(tuple(rules), {a: conj(cl) for a, cl in rules.items()})


# ---------------------------------------------------------------------------
# framework -> program

def _incoming(f, group):
    out = {}
    for name in sorted(group):
        out.setdefault(group[name][1], []).append(name)
    return out


def _outgoing(f, group):
    out = {}
    for name in sorted(group):
        out.setdefault(group[name][0], []).append(name)
    return out


def _compile_baf(f: Framework) -> PropProgram:
    atoms = universe(f)
    rules = {}
    for a in atoms:
        clauses = [neg(b) for b in sorted({s for s, t in f.attacks.values() if t == a})]
        if f.kind is Kind.AFN:
            clauses += [pos(c) for c in sorted({s for s, t in f.supports.values() if t == a})]
        elif f.kind is Kind.AFD:
            clauses += [pos(c) for c in sorted({t for s, t in f.supports.values() if s == a})]
        rules[a] = conj(clauses)
    return PropProgram(atoms, rules)


def _compile_recursive(f: Framework) -> PropProgram:
    atoms = universe(f)
    att_in = _incoming(f, f.attacks)
    sup_in = _incoming(f, f.supports)
    sup_out = _outgoing(f, f.supports)
    afra = f.kind.afra_style
    rules = {}
    for x in atoms:
        clauses = []
        if afra and x in f.attacks:
            clauses.append(pos(f.attacks[x][0]))
        for alpha in att_in.get(x, ()):
            if afra:
                clauses.append(neg(alpha))
            else:
                clauses.append((neg(alpha), neg(f.attacks[alpha][0])))
        if f.kind.deductive:
            for beta in sup_out.get(x, ()):
                clauses.append((neg(beta), pos(f.supports[beta][1])))
        else:
            for beta in sup_in.get(x, ()):
                clauses.append((neg(beta), pos(f.supports[beta][0])))
        rules[x] = conj(clauses)
    return PropProgram(atoms, rules)


def compile_framework(f: Framework) -> PropProgram:
    """The propositional program whose PSMs are the completed complete extensions."""
    check(f)
    if f.kind.recursive:
        return _compile_recursive(f)
    return _compile_baf(f)


# the public name mirrors the CLI subcommand
compile = compile_framework  # noqa: A001


# ---------------------------------------------------------------------------
# normalization

def normalize(p: PropProgram) -> NormalProgram:
    """Replace every disjunctive clause by a negated fresh atom.

    ``a <- (b | c) & (d | e)`` becomes ``a <- ~__f1 & ~__f2``,
    ``__f1 <- ~b & ~c`` and ``__f2 <- ~d & ~e``.
    """
    for a in p.atoms:
        if a.startswith(FRESH_PREFIX):
            raise ReservedAtomClash(f"atom {a!r} uses the reserved prefix {FRESH_PREFIX!r}")
    rules, fresh_rules, fresh = [], [], {}
    for head in p.atoms:
        clauses = clauses_of(p.rules[head])
        if clauses is None:
            raise ValueError(f"rule for {head!r} is not a conjunction of clauses")
        body = []
        for clause in clauses:
            if len(clause) == 1:
                body.append(clause[0])
                continue
            f = f"{FRESH_PREFIX}{len(fresh) + 1}"
            fresh[f] = Or(clause)
            fresh_rules.append((f, tuple(l.complement() for l in clause)))
            body.append(neg(f))
        rules.append((head, tuple(dict.fromkeys(body))))
    atoms = tuple(p.atoms) + tuple(fresh)
    return NormalProgram(atoms, tuple(rules + fresh_rules), fresh)


def project_model(m, n: NormalProgram):
    """Drop the fresh atoms of ``n`` from interpretation ``m``."""
    from .psm import Interpretation
    return Interpretation(frozenset(a for a in m.pos if a not in n.fresh),
                          frozenset(a for a in m.neg if a not in n.fresh))

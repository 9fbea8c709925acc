"""Unified data model for the nine argumentation framework kinds."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ValidationError

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED_PREFIX = "__"


class Kind(enum.Enum):
    AF = "af"
    AFN = "afn"
    AFD = "afd"
    RAF = "raf"
    AFRA = "afra"
    RAFN = "rafn"
    ASAF = "asaf"
    RAFD = "rafd"
    AFRAD = "afrad"

    @classmethod
    def parse(cls, tag: str) -> "Kind":
        try:
            return cls(tag.lower())
        except ValueError:
            raise ValueError(f"unknown framework kind {tag!r}") from None

    @property
    def recursive(self) -> bool:
        """Interaction names are elements of extensions (and atoms of programs)."""
        return self not in (Kind.AF, Kind.AFN, Kind.AFD)

    @property
    def has_supports(self) -> bool:
        return self not in (Kind.AF, Kind.RAF, Kind.AFRA)

    @property
    def deductive(self) -> bool:
        return self in (Kind.AFD, Kind.RAFD, Kind.AFRAD)

    @property
    def afra_style(self) -> bool:
        """Attacks fall with their source (AFRA family) rather than only when attacked."""
        return self in (Kind.AFRA, Kind.ASAF, Kind.AFRAD)


class ElementClass(enum.IntEnum):
    ARGUMENT = 0
    ATTACK = 1
    SUPPORT = 2


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    elements: tuple = ()

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True, eq=True)
class Framework:
    """Arguments plus named attacks and supports.

    ``attacks`` and ``supports`` map an interaction id to its
    ``(source, target)`` pair.  For AF, AFN and AFD the ids are bookkeeping
    only; extensions and programs range over the arguments.
    """

    kind: Kind
    args: frozenset = frozenset()
    attacks: Mapping[str, tuple] = field(default_factory=dict)
    supports: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "args", frozenset(self.args))
        object.__setattr__(self, "attacks", {k: tuple(v) for k, v in self.attacks.items()})
        object.__setattr__(self, "supports", {k: tuple(v) for k, v in self.supports.items()})

    def __hash__(self):
        return hash((self.kind, self.args, tuple(sorted(self.attacks.items())),
                     tuple(sorted(self.supports.items()))))

    # -- lookups -----------------------------------------------------------
    def source(self, name):
        if name in self.attacks:
            return self.attacks[name][0]
        if name in self.supports:
            return self.supports[name][0]
        return None

    def target(self, name):
        if name in self.attacks:
            return self.attacks[name][1]
        if name in self.supports:
            return self.supports[name][1]
        return None

    def element_class(self, name):
        if name in self.args:
            return ElementClass.ARGUMENT
        if name in self.attacks:
            return ElementClass.ATTACK
        if name in self.supports:
            return ElementClass.SUPPORT
        return None

    @property
    def attack_pairs(self):
        return {pair for pair in self.attacks.values()}

    @property
    def support_pairs(self):
        return {pair for pair in self.supports.values()}

    def with_kind(self, kind: Kind) -> "Framework":
        return Framework(kind, self.args, self.attacks, self.supports)


def _sort_key(f: Framework):
    def key(name):
        return (int(f.element_class(name)), name)
    return key


def universe(f: Framework) -> list:
    """Canonical element order: arguments, then attacks, then supports, each by name.

    Interaction names only belong to the universe of the recursive kinds;
    the extensions of AF, AFN and AFD are sets of arguments.
    """
    elems = list(f.args)
    if f.kind.recursive:
        elems += list(f.attacks) + list(f.supports)
    return sorted(elems, key=_sort_key(f))


def all_elements(f: Framework) -> list:
    """Every declared id (including interaction ids of AF-like kinds) in canonical order."""
    return sorted(list(f.args) + list(f.attacks) + list(f.supports), key=_sort_key(f))


def _find_cycle(edges):
    """Return one cycle of a directed graph as a node list, or None."""
    succ = {}
    for a, b in edges:
        succ.setdefault(a, []).append(b)
    for v in succ:
        succ[v].sort()
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {}
    for root in sorted(succ):
        if colour.get(root, WHITE) != WHITE:
            continue
        stack = [(root, iter(succ.get(root, ())))]
        path = [root]
        colour[root] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
                path.pop()
                continue
            c = colour.get(nxt, WHITE)
            if c == GREY:
                return path[path.index(nxt):]
            if c == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return None


def validate(f: Framework) -> list:
    """Return every structural violation of ``f`` (empty list means valid)."""
    out = []
    names = {}
    for cls, group in ((ElementClass.ARGUMENT, f.args), (ElementClass.ATTACK, f.attacks),
                       (ElementClass.SUPPORT, f.supports)):
        for name in sorted(group):
            if not isinstance(name, str) or not NAME_RE.match(name):
                out.append(Violation("InvalidName", f"{name!r} is not a valid identifier", (name,)))
            elif name.startswith(RESERVED_PREFIX):
                out.append(Violation("InvalidName", f"{name!r} uses the reserved prefix '__'", (name,)))
            if name in names:
                out.append(Violation(
                    "NameClash",
                    f"{name!r} is declared as both {names[name].name.lower()} and {cls.name.lower()}",
                    (name,)))
            else:
                names[name] = cls

    if not f.kind.has_supports and f.supports:
        out.append(Violation("KindTargetViolation",
                             f"{f.kind.name} does not allow supports",
                             tuple(sorted(f.supports))))

    attack_domain = set(f.args)
    support_domain = set(f.args)
    if f.kind.recursive:
        attack_domain |= set(f.attacks)
        if f.kind.has_supports:
            attack_domain |= set(f.supports)
            support_domain |= set(f.attacks) | set(f.supports)

    for group, domain, label in ((f.attacks, attack_domain, "attack"),
                                 (f.supports, support_domain, "support")):
        for name in sorted(group):
            src, tgt = group[name]
            if src not in names:
                out.append(Violation("SourceNotArgument",
                                     f"{label} {name!r}: source {src!r} is not a declared argument",
                                     (name, src)))
            elif src not in f.args:
                out.append(Violation("SourceNotArgument",
                                     f"{label} {name!r}: source {src!r} is not an argument", (name, src)))
            if tgt not in names:
                out.append(Violation("UnknownTarget",
                                     f"{label} {name!r}: target {tgt!r} is not declared", (name, tgt)))
            elif tgt not in domain:
                out.append(Violation(
                    "KindTargetViolation",
                    f"{label} {name!r}: {f.kind.name} does not allow targeting "
                    f"{names[tgt].name.lower()} {tgt!r}", (name, tgt)))

    # acyclicity of the support pairs, plus name-level chains of supports on supports
    edges = [(s, t) for s, t in f.supports.values()]
    edges += [(b, t) for b, (_, t) in f.supports.items() if t in f.supports]
    cycle = _find_cycle(edges)
    if cycle is not None:
        out.append(Violation("SupportCycle", "supports form a cycle: " + " => ".join(cycle + cycle[:1]),
                             tuple(cycle)))
    return out


def check(f: Framework) -> Framework:
    """Raise :class:`ValidationError` unless ``f`` is valid; return it otherwise."""
    violations = validate(f)
    if violations:
        raise ValidationError(violations)
    return f

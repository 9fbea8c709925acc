"""Reduction of bipolar frameworks (AFN, AFD) to plain AFs."""

from __future__ import annotations

from .errors import CycleDetected
from .framework import Framework, Kind, check

SUPPORTED_PREFIX = "supx_"
MEDIATED_PREFIX = "medx_"


def support_closure(pairs) -> set:
    """Transitive closure of a support pair relation; raises CycleDetected on a cycle."""
    closure = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    if a == d:
                        raise CycleDetected(f"support cycle through {a!r}")
                    closure.add((a, d))
                    changed = True
    for a, b in closure:
        if a == b:
            raise CycleDetected(f"support cycle through {a!r}")
    return closure


def _extra_attacks(f: Framework, deductive: bool):
    """Return (supported, mediated) complex attack pairs, mediated excluding supported ones."""
    plus = support_closure(f.support_pairs)
    omega = f.attack_pairs
    if deductive:
        supported = {(a, b) for a, c in plus for c2, b in omega if c == c2}
        mediated = {(a, b) for a, c in omega for b, c2 in plus if c == c2}
    else:
        supported = {(a, b) for a, c in omega for c2, b in plus if c == c2}
        mediated = {(a, b) for c, a in plus for c2, b in omega if c == c2}
    supported -= omega
    mediated -= omega | supported
    return supported, mediated


def _fresh_names(prefix, count, taken):
    out, k = [], 0
    while len(out) < count:
        k += 1
        name = f"{prefix}{k}"
        if name not in taken:
            out.append(name)
    return out


def _flatten(f: Framework, kind: Kind, keep_mediated=True) -> Framework:
    if f.kind is not kind:
        raise ValueError(f"expected a {kind.name} framework, got {f.kind.name}")
    check(f)
    supported, mediated = _extra_attacks(f, kind is Kind.AFD)
    taken = set(f.args) | set(f.attacks) | set(f.supports)
    attacks = dict(f.attacks)
    groups = [(SUPPORTED_PREFIX, supported)]
    if keep_mediated:
        groups.append((MEDIATED_PREFIX, mediated))
    for prefix, pairs in groups:
        names = _fresh_names(prefix, len(pairs), taken)
        taken |= set(names)
        attacks.update(zip(names, sorted(pairs)))
    return Framework(Kind.AF, f.args, attacks, {})


def flatten_afn(f: Framework) -> Framework:
    """The AF over the same arguments with supported and mediated attacks added."""
    return _flatten(f, Kind.AFN)


def flatten_afd(f: Framework) -> Framework:
    """The AF over the same arguments with complex (deductive) attacks added."""
    return _flatten(f, Kind.AFD)


def flatten(f: Framework) -> Framework:
    if f.kind is Kind.AFN:
        return flatten_afn(f)
    if f.kind is Kind.AFD:
        return flatten_afd(f)
    raise ValueError(f"only AFN and AFD frameworks can be flattened, got {f.kind.name}")


def strip_mediated(f: Framework) -> Framework:
    """``flatten_afn(f)`` without the attacks that only the mediated rule produces."""
    return _flatten(f, Kind.AFN, keep_mediated=False)


def mediated_pairs(f: Framework) -> set:
    """Mediated attack pairs of an AFN that are neither original nor supported."""
    return _extra_attacks(f, f.kind is Kind.AFD)[1]

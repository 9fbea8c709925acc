"""Seeded random frameworks for the differential tests and the ``gen`` command."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .framework import Framework, Kind


@dataclass(frozen=True)
class GenSpec:
    kind: Kind
    n_args: int
    n_atts: int = 0
    n_sups: int = 0
    recursion_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if min(self.n_args, self.n_atts, self.n_sups) < 0:
            raise ValueError("element counts must be non-negative")
        if not 0.0 <= self.recursion_rate <= 1.0:
            raise ValueError("recursion_rate must lie in [0, 1]")


def random_framework(spec: GenSpec) -> Framework:
    """Deterministic in ``spec``; valid by construction.

    Supports between arguments follow a random permutation of the arguments,
    and a support may target another support only if that one comes later,
    so the support relation stays acyclic.
    """
    kind = Kind.parse(spec.kind) if isinstance(spec.kind, str) else spec.kind
    rng = np.random.default_rng(spec.seed)
    n_sups = spec.n_sups
    if n_sups and not kind.has_supports:
        warnings.warn(f"{kind.name} has no supports; ignoring n_sups={n_sups}", stacklevel=2)
        n_sups = 0
    if (spec.n_atts or n_sups) and spec.n_args == 0:
        raise ValueError("interactions need at least one argument as source")
    if n_sups and spec.n_args < 2 and not kind.recursive:
        raise ValueError("supports between arguments need at least two arguments")

    args = [f"a{i + 1}" for i in range(spec.n_args)]
    atts = [f"att{i + 1}" for i in range(spec.n_atts)]
    sups = [f"sup{i + 1}" for i in range(n_sups)]
    order = list(rng.permutation(spec.n_args))
    rate = spec.recursion_rate if kind.recursive else 0.0

    attacks = {}
    for name in atts:
        src = args[rng.integers(spec.n_args)]
        pool = atts + (sups if kind.has_supports else [])
        if pool and rng.random() < rate:
            tgt = pool[rng.integers(len(pool))]
        else:
            tgt = args[rng.integers(spec.n_args)]
        attacks[name] = (src, tgt)

    supports = {}
    for j, name in enumerate(sups):
        pool = atts + sups[j + 1:]
        if spec.n_args < 2 or (pool and rng.random() < rate):
            if not pool:
                raise ValueError("cannot place a support: need two arguments or a later target")
            src = args[rng.integers(spec.n_args)]
            tgt = pool[rng.integers(len(pool))]
        else:
            i, k = sorted(rng.choice(spec.n_args, size=2, replace=False))
            src, tgt = args[order[i]], args[order[k]]
        supports[name] = (src, tgt)

    return Framework(kind, frozenset(args), attacks, supports)


def corpus_spec(kind, index: int, base_seed: int = 20240601) -> GenSpec:
    """Spec of the ``index``-th instance of the seeded test corpus for ``kind``.

    Sizes stay within six arguments, six attacks and four supports.
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    seed = (base_seed * 1_000_003 + list(Kind).index(kind) * 100_003 + index) % (2 ** 63)
    rng = np.random.default_rng(seed)
    n_args = int(rng.integers(1, 7))
    n_atts = int(rng.integers(0, 7))
    n_sups = int(rng.integers(0, 5)) if kind.has_supports else 0
    if n_args < 2 and (not kind.recursive or n_atts == 0):
        n_sups = 0  # nothing a support could legally target
    rate = float(rng.choice([0.0, 0.25, 0.5])) if kind.recursive else 0.0
    return GenSpec(kind, n_args, n_atts, n_sups, rate, seed)


def corpus(kind, size: int = 200, base_seed: int = 20240601):
    """The first ``size`` corpus frameworks for ``kind``."""
    return [random_framework(corpus_spec(kind, i, base_seed)) for i in range(size)]

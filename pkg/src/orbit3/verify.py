"""Exhaustive verification suites.

Each suite replays one of the computer-checked steps of the classification
on its full stated range and returns a report dict {claim, range,
violations}; an empty violation list certifies the claim on that range.  Two
suites (the full-cycle criterion and the digit-block inequalities) are
vectorized with numpy to keep the exhaustive ranges fast; everything else is
plain integer arithmetic.
"""

from __future__ import annotations

import random

from . import numtheory as nt
from .field import get_field
from .gammal1 import (
    GammaL1,
    StandardParams,
    all_standard_params,
    contains,
    contains_elementwise,
    is_normal_elementwise,
    is_normal_in,
    is_transitive,
    knuth_full_cycle,
    largest_abelian_normal,
    standard_form,
    subgroup_elements,
)
from .squaring import Squaring, biadditivity_criterion, form_is_nontrivial, is_biadditive

__all__ = [
    "knuth_suite",
    "standard_form_suite",
    "cyclic_transitive_suite",
    "abelian_normal_suite",
    "biadditivity_suite",
    "lemma_suites",
    "numtheory_suite",
]


def knuth_suite(max_modulus: int = 128) -> dict:
    """Full-cycle criterion vs direct vectorized simulation, all a, b mod M."""
    import numpy as np

    violations = []
    for M in range(1, max_modulus + 1):
        a = np.repeat(np.arange(M, dtype=np.int64), M)
        b = np.tile(np.arange(M, dtype=np.int64), M)
        x = np.zeros(M * M, dtype=np.int64)
        early = np.zeros(M * M, dtype=bool)
        for step in range(1, M + 1):
            x = (a * x + b) % M
            if step < M:
                early |= x == 0
        simulated = (x == 0) & ~early
        for idx in range(M * M):
            crit = knuth_full_cycle(int(a[idx]), int(b[idx]), M, sim_limit=0)
            if crit != bool(simulated[idx]):
                violations.append({"a": int(a[idx]), "b": int(b[idx]), "M": M})
                if len(violations) > 10:
                    return nt.make_report("full-cycle criterion equals simulation", f"M <= {max_modulus}", violations)
    return nt.make_report(
        "full-cycle criterion equals simulation, all residues",
        f"M <= {max_modulus}",
        violations,
    )


def _ambients(limit):
    out = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19):
        m = 2 if p > 2 else 1
        while p**m <= limit:
            out.append((p, m))
            m += 1
    return out


def standard_form_suite(max_size: int = 512) -> dict:
    """Round trip of the standard form and the containment/normality
    criteria against element-wise checks, for every subgroup pair of every
    ambient group with p^m <= max_size."""
    violations = []
    for p, m in _ambients(max_size):
        gamma = GammaL1(get_field(p, m))
        params = all_standard_params(p, m)
        sets = {pr: frozenset(subgroup_elements(pr)) for pr in params}
        for pr in params:
            if standard_form(gamma, pr.generators()) != pr:
                violations.append({"p": p, "m": m, "params": pr.to_dict(), "law": "round trip"})
        for sub in params:
            sub_set = sets[sub]
            for sup in params:
                if len(sub_set) > len(sets[sup]):
                    crit = contains(sub, sup)
                    if crit:
                        violations.append({"p": p, "m": m, "law": "containment order"})
                    continue
                crit = contains(sub, sup)
                if crit != (sub_set <= sets[sup]):
                    violations.append(
                        {"p": p, "m": m, "sub": sub.to_dict(), "sup": sup.to_dict(), "law": "containment"}
                    )
                    continue
                if crit and is_normal_in(sub, sup) != is_normal_elementwise(sub, sup):
                    violations.append(
                        {"p": p, "m": m, "sub": sub.to_dict(), "sup": sup.to_dict(), "law": "normality"}
                    )
        if len(violations) > 10:
            break
    return nt.make_report(
        "standard form round trips; containment and normality criteria match element-wise checks",
        f"all subgroup pairs, p^m <= {max_size}",
        violations,
    )


def cyclic_transitive_suite(max_size: int = 1024) -> dict:
    """The scalar group is the only cyclic transitive subgroup; the standard
    form also round trips on this larger range."""
    violations = []
    for p, m in _ambients(max_size):
        gamma = GammaL1(get_field(p, m))
        for pr in all_standard_params(p, m):
            if standard_form(gamma, pr.generators()) != pr:
                violations.append({"p": p, "m": m, "params": pr.to_dict(), "law": "round trip"})
            if not is_transitive(pr, check=False):
                continue
            size = pr.order
            cyclic = any(gamma.order_of(g) == size for g in subgroup_elements(pr))
            if cyclic and (pr.d, pr.e, pr.s) != (1, 0, m):
                violations.append({"p": p, "m": m, "params": pr.to_dict()})
    return nt.make_report(
        "the only cyclic transitive subgroup is the scalar group; standard form round trips",
        f"p^m <= {max_size}",
        violations,
    )


def abelian_normal_suite(max_m: int = 10) -> dict:
    """Largest abelian normal subgroup of every transitive subgroup is the
    scalar intersection for p = 2, and the ambient GF(9) counterexample is
    found."""
    violations = []
    for m in range(1, max_m + 1):
        for pr in all_standard_params(2, m):
            if not is_transitive(pr, check=False):
                continue
            largest = largest_abelian_normal(pr)
            if (largest.d, largest.e, largest.s) != (pr.d, 0, m):
                violations.append({"m": m, "params": pr.to_dict(), "largest": largest.to_dict()})
    counterexample = largest_abelian_normal(StandardParams(3, 2, 2, 1, 1))
    scalars = StandardParams(3, 2, 2, 0, 2)
    if contains(counterexample, scalars):
        violations.append({"law": "GF(9) counterexample not found"})
    return nt.make_report(
        "largest abelian normal subgroup = scalar intersection (p=2); GF(9) fails it",
        f"p = 2, m <= {max_m}, plus (p,m) = (3,2)",
        violations,
    )


def _random_tables(field, rng, count):
    """A mix of arbitrary, biadditive-by-construction and cocycle-built
    tables over the field, for criterion cross-checks."""
    q, m = field.order, field.m
    legal = [i for i in range(1, q) if nt.digit_sum(i) <= 2]
    for _ in range(count):
        kind = rng.randrange(3)
        if kind == 0:
            yield [0] + [rng.randrange(q) for _ in range(q - 1)]
        elif kind == 1:
            coeffs = [0] * q
            for i in rng.sample(legal, k=min(len(legal), rng.randrange(1, 4))):
                coeffs[i] = rng.randrange(q)
            yield [field.evaluate(coeffs, x) for x in range(q)]
        else:
            sigma = [rng.randrange(q) for _ in range(m)]
            pi = {(i, j): rng.randrange(q) for j in range(m) for i in range(j)}
            table = []
            for u in range(q):
                acc = 0
                for i in range(m):
                    if (u >> i) & 1:
                        acc ^= sigma[i]
                        for j in range(i + 1, m):
                            if (u >> j) & 1:
                                acc ^= pi[(i, j)]
                table.append(acc)
            yield table


def biadditivity_suite(max_m: int = 5, samples: int = 1000, seed: int = 20260810) -> dict:
    """Polynomial criterion vs the direct biadditivity test on random
    tables, and on the named degree-6 construction."""
    rng = random.Random(seed)
    violations = []
    per_m = max(1, samples // (max_m - 1)) if max_m >= 2 else samples
    for m in range(2, max_m + 1):
        field = get_field(2, m)
        for table in _random_tables(field, rng, per_m):
            sq = Squaring(m, m, tuple(table))
            crit = biadditivity_criterion(field.interpolate(table))
            direct = is_biadditive(sq)
            if crit.biadditive != direct:
                violations.append({"m": m, "table": table, "law": "biadditive"})
            elif direct and crit.nontrivial != form_is_nontrivial(sq):
                violations.append({"m": m, "table": table, "law": "nontrivial"})
            if len(violations) > 5:
                return nt.make_report("biadditivity criterion", f"m <= {max_m}", violations)
    from .squaring import sigma_omega, singer_squaring, squaring_polynomial

    so = sigma_omega()
    crit = biadditivity_criterion(squaring_polynomial(so))
    if not (crit.biadditive and crit.nontrivial and crit.exponents == (3, 24)):
        violations.append({"law": "degree-6 nonstandard construction"})
    x9 = singer_squaring(6, 3, "b").squaring
    crit = biadditivity_criterion(squaring_polynomial(x9))
    if not (crit.biadditive and crit.nontrivial and crit.exponents == (9,)):
        violations.append({"law": "degree-6 standard construction"})
    return nt.make_report(
        "polynomial biadditivity criterion matches the direct test",
        f"2 <= m <= {max_m}, {samples} seeded samples, plus the degree-6 constructions",
        violations,
    )


_LEVELS = {
    "exhaustive": dict(
        knuth=128,
        subgroup_size=512,
        cyclic_size=1024,
        abelian_m=10,
        biadd_m=5,
        biadd_samples=1000,
        block_k=1 << 20,
        block_t=24,
        gcd_m=16,
        singer_m=20,
    ),
    "fast": dict(
        knuth=32,
        subgroup_size=64,
        cyclic_size=128,
        abelian_m=7,
        biadd_m=4,
        biadd_samples=200,
        block_k=1 << 14,
        block_t=16,
        gcd_m=10,
        singer_m=12,
    ),
}


def lemma_suites(level: str = "exhaustive") -> list[dict]:
    """All lemma verification reports at the requested level."""
    if level not in _LEVELS:
        raise ValueError(f"level must be one of {sorted(_LEVELS)}")
    cfg = _LEVELS[level]
    return [
        knuth_suite(cfg["knuth"]),
        standard_form_suite(cfg["subgroup_size"]),
        cyclic_transitive_suite(cfg["cyclic_size"]),
        abelian_normal_suite(cfg["abelian_m"]),
        biadditivity_suite(cfg["biadd_m"], cfg["biadd_samples"]),
        nt.block_lemma_checks(cfg["block_k"], cfg["block_t"]),
        nt.gcd_bound_check(cfg["gcd_m"]),
        nt.singer_parameter_equivalence(cfg["singer_m"]),
    ]


def numtheory_suite(max_m: int = 37) -> dict:
    return nt.verify_unexpected(max_m)

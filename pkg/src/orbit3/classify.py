"""End-to-end classification pipelines.

enumerate_singer lists every scalar-group predatum for a degree, label_singer
merges them into named classes with recorded equivalence witnesses,
nonstandard_search runs the transitive-subgroup pipeline, and theorem_list
assembles the full catalogue of groups with exactly three automorphism
orbits up to a given order, certifying the orbit count of every entry and the
pairwise distinctness of the classes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .field import get_embedding, get_field
from .gammal1 import (
    HomTarget,
    StandardParams,
    enumerate_hom_targets,
    enumerate_transitive_subgroups,
)
from .group import (
    GroupSpec,
    brute_force_orbits,
    from_squaring,
    invariant_profile,
    orbit_count,
)
from .numtheory import digit_sum, nu_p
from .squaring import (
    Predatum,
    Squaring,
    biadditivity_criterion,
    coset_monomial_squaring,
    coset_polynomial,
    gammal1_equivalent,
    gl_equivalent,
    predatum_violations,
    project_to_subfield,
    sigma1_solutions,
    sigma_omega,
    singer_exponent_legal,
    singer_squaring,
)

log = logging.getLogger(__name__)

__all__ = [
    "ClassEntry",
    "enumerate_singer",
    "label_singer_classes",
    "nonstandard_search",
    "identify_exceptional",
    "theorem_list",
    "homocyclic_spec",
]


@dataclass(frozen=True)
class ClassEntry:
    """One isomorphism class: a label, its order, a witness predatum (None
    for the abelian family), the group model, provenance and the recorded
    certificates (merge witnesses, orbit counts, distinctness evidence)."""

    label: str
    order: int
    witness: Predatum | None
    group: GroupSpec
    provenance: str
    certificates: tuple[str, ...] = dc_field(default_factory=tuple)

    def to_dict(self):
        return {
            "label": self.label,
            "order": self.order,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "group": self.group.to_dict(),
            "provenance": self.provenance,
            "certificates": list(self.certificates),
        }


def homocyclic_spec(n: int) -> GroupSpec:
    """The abelian model with every coset generator squaring to its own
    central basis vector: the direct power of the cyclic group of order 4."""
    f = get_field(2, n)
    sq = Squaring(n, n, tuple(f.pow(x, 2) for x in f.elements()))
    return from_squaring(sq)


# ---------------------------------------------------------------------------
# scalar-group pipeline


def enumerate_singer(m: int, max_order: int | None = None) -> list[Predatum]:
    """Every scalar-group predatum of degree m, both variants, over all
    legal twist exponents and scalars; max_order skips variants whose group
    would be larger."""
    out = []
    if max_order is None or (1 << (2 * m)) <= max_order:
        for k in range(1, m):
            if nu_p(k, 2) < nu_p(m, 2):
                continue
            l = 0
            while singer_exponent_legal(m, m, l, k):
                for scalar in range(1, 1 << m):
                    out.append(singer_squaring(m, m, "a", l, k, scalar))
                l += 1
    if m % 2 == 0 and (max_order is None or (1 << (m + m // 2)) <= max_order):
        n = m // 2
        l = 0
        while singer_exponent_legal(m, n, l, None):
            for scalar in range(1, 1 << n):
                out.append(singer_squaring(m, n, "b", l, scalar=scalar))
            l += 1
    return out


def _singer_exponent_parts(pred: Predatum):
    """(l, k) with twist exponent 2^l(2^k+1), recovered from the target."""
    m, n = pred.squaring.m, pred.squaring.n
    q1, r1 = (1 << m) - 1, (1 << n) - 1
    e = pred.target.u * (q1 // r1) % q1 if n < m else pred.target.u
    l = nu_p(e, 2) if e else 0
    odd = e >> l
    k = (odd - 1).bit_length() - 1
    if odd != 1 + (1 << k):
        raise ValueError("not a two-digit twist exponent")
    return l, k


def label_singer_classes(predata) -> list[ClassEntry]:
    """Group scalar-group predata into isomorphism classes.

    Full-degree predata with Frobenius powers k and m-k merge (the inverse
    automorphism gives the same group), as do all scalar and digit-shift
    variants; half-degree predata all merge per degree.  Every merge records
    an explicit semilinear equivalence witness against the canonical
    representative; members that fail to produce one raise."""
    canon: dict[tuple, Predatum] = {}
    members: dict[tuple, list[Predatum]] = {}
    for pred in predata:
        m, n = pred.squaring.m, pred.squaring.n
        if n == m:
            _, k = _singer_exponent_parts(pred)
            key = ("A", m, min(k, m - k))
        else:
            key = ("Q8", 2, None) if m == 2 else ("B", n, None)
        members.setdefault(key, []).append(pred)
        if key not in canon:
            kind, _, kc = key
            if kind == "A":
                canon[key] = singer_squaring(m, m, "a", 0, kc, 1)
            else:
                canon[key] = singer_squaring(m, n, "b", 0, scalar=1)
    entries = []
    for key in sorted(members, key=lambda t: (t[1], str(t))):
        kind, deg, kc = key
        rep = canon[key]
        witnesses = 0
        for pred in members[key]:
            if pred.squaring == rep.squaring:
                witnesses += 1
                continue
            if gammal1_equivalent(rep.squaring, pred.squaring) is None:
                raise AssertionError(f"no equivalence witness inside class {key}")
            witnesses += 1
        if kind == "A":
            label = f"A({deg},{kc})"
        elif kind == "Q8":
            label = "Q8"
        else:
            label = f"B({deg},1)"
        group = from_squaring(rep.squaring)
        entries.append(
            ClassEntry(
                label=label,
                order=group.order,
                witness=rep,
                group=group,
                provenance="scalar-group enumeration",
                certificates=(
                    f"merged {witnesses} parameter variants with recorded equivalence witnesses",
                ),
            )
        )
    return sorted(entries, key=lambda e: (e.order, e.label))


# ---------------------------------------------------------------------------
# nonstandard pipeline


def _divisors(m):
    return [n for n in range(1, m + 1) if m % n == 0]


def nonstandard_search(m: int) -> list[Predatum]:
    """Predata whose domain subgroup does not contain the scalars, one
    representative per semilinear equivalence class.

    Pipeline: transitive subgroups -> homomorphism targets (pruned by the
    two-binary-digit degree filter) -> admissible sigma(1) values ->
    coset-monomial tables -> biadditivity criterion on the coset polynomial
    -> subfield image and surjectivity -> full predatum validation ->
    deduplication by semilinear equivalence.  Purely monomial candidates
    duplicate scalar-group classes and are dropped with a log note."""
    q1 = (1 << m) - 1
    found: list[Predatum] = []
    for a in enumerate_transitive_subgroups(m):
        step = q1 // a.d
        for n in _divisors(m):
            if n < 2:
                continue

            def degree_filter(epsilon):
                exps = [epsilon % step + x * step for x in range(a.d)]
                good = [E for E in exps if E and digit_sum(E) <= 2]
                if not any(digit_sum(E) == 2 for E in good):
                    return False
                if len(good) == 1:
                    log.info(
                        "degree %s: monomial-only branch at epsilon=%s duplicates a scalar-group class",
                        m,
                        epsilon,
                    )
                    return False
                return True

            for target in enumerate_hom_targets(a, n, epsilon_filter=degree_filter):
                for sigma1 in sigma1_solutions(a, target):
                    full = coset_monomial_squaring(a, target, sigma1)
                    crit = biadditivity_criterion(coset_polynomial(full, a, target))
                    if not (crit.biadditive and crit.nontrivial):
                        continue
                    if len(crit.exponents) == 1:
                        log.info("monomial candidate at sigma1=%s dropped", sigma1)
                        continue
                    sq = project_to_subfield(full, n)
                    if sq is None or len(set(sq.table)) != 1 << n:
                        continue
                    pred = Predatum(sq, a, target)
                    if predatum_violations(pred):
                        continue
                    found.append(pred)
    classes: list[Predatum] = []
    for pred in found:
        for rep in classes:
            if (rep.squaring.m, rep.squaring.n) == (pred.squaring.m, pred.squaring.n):
                if gammal1_equivalent(rep.squaring, pred.squaring) is not None:
                    break
        else:
            classes.append(pred)
    return classes


# ---------------------------------------------------------------------------
# the exceptional class


_HIGMAN_WITNESSES = (
    # (zeta exponent, admissible epsilon exponent, coefficient exponent c in
    #  the pipeline squaring x -> c x^3 + c^8 x^24)
    (13, 9, 1),
    (44, 18, 1),
    (25, 36, 2),
)


def _pipeline_squaring(c_exp: int) -> Squaring:
    big = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    c = big.exp(c_exp)
    c8 = big.pow(c, 8)
    table = tuple(
        emb.project(big.add(big.mul(c, big.pow(x, 3)), big.mul(c8, big.pow(x, 24))))
        for x in big.elements()
    )
    return Squaring(6, 3, table)


def _higman_identity_holds(sq: Squaring, zeta_exp: int, eps_exp: int) -> bool:
    """Whether the squaring, transported to coordinate pairs over the cubic
    subfield via kappa1 + kappa2*zeta, is a subfield-scalar multiple of
    kappa1^3 + eps kappa1^2 kappa2 + kappa2^3 (allowing a component swap)."""
    big = get_field(2, 6)
    sub = get_field(2, 3)
    emb = get_embedding(2, 3, 6)
    zeta = big.exp(zeta_exp)
    eps = emb.project(big.exp(eps_exp))
    pairs = [(k1, k2) for k1 in sub.elements() for k2 in sub.elements()]
    for swap in (False, True):
        lhs = {}
        for k1, k2 in pairs:
            a, b = (k2, k1) if swap else (k1, k2)
            x = big.add(emb.embed(a), big.mul(emb.embed(b), zeta))
            lhs[(k1, k2)] = sq.table[x]
        for s_exp in range(7):
            s = sub.exp(s_exp)
            if all(
                lhs[(k1, k2)]
                == sub.mul(
                    s,
                    sub.add(
                        sub.pow(k1, 3),
                        sub.add(sub.mul(eps, sub.mul(sub.mul(k1, k1), k2)), sub.pow(k2, 3)),
                    ),
                )
                for k1, k2 in pairs
            ):
                return True
    return False


def identify_exceptional(pred: Predatum, gl_budget: int | None = None) -> ClassEntry:
    """Match a degree-6 nonstandard predatum against the three Higman
    coordinate presentations of the exceptional order-512 group and certify
    its non-equivalence to the standard x^9 class.

    Raises when the coordinate identities fail, which indicates a generator
    class incompatible with the pinned modulus."""
    if (pred.squaring.m, pred.squaring.n) != (6, 3):
        raise ValueError("the exceptional group lives at degrees (6, 3)")
    certs = []
    link = gammal1_equivalent(pred.squaring, sigma_omega())
    if link is None:
        raise AssertionError("predatum is not equivalent to the canonical nonstandard squaring")
    certs.append(f"semilinear witness onto the canonical squaring: {link}")
    big = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    # admissible epsilon values: complement of {r^-1 + r^2} in the subfield
    reachable = {
        emb.sub.add(emb.sub.inv(r), emb.sub.mul(r, r)) for r in emb.sub.units()
    }
    admissible = sorted(set(emb.sub.elements()) - reachable)
    expected = sorted(emb.project(big.exp(9 * 2**i)) for i in range(3))
    if admissible != expected:
        raise AssertionError("admissible parameter set differs from the generator cube powers")
    certs.append(f"admissible parameters = generator^(9*2^i): {admissible}")
    for zeta_exp, eps_exp, c_exp in _HIGMAN_WITNESSES:
        if not _higman_identity_holds(_pipeline_squaring(c_exp), zeta_exp, eps_exp):
            raise AssertionError(
                f"coordinate identity failed for zeta exponent {zeta_exp} "
                "(generator class mismatch with the pinned modulus)"
            )
        certs.append(f"coordinate witness: zeta=w^{zeta_exp} realizes eps=w^{eps_exp}")
    standard = singer_squaring(6, 3, "b").squaring
    if gammal1_equivalent(pred.squaring, standard) is not None:
        raise AssertionError("nonstandard squaring collapsed onto the standard class")
    if gl_equivalent(pred.squaring, standard, budget=gl_budget) is not None:
        raise AssertionError("nonstandard squaring collapsed onto the standard class")
    certs.append("not equivalent to the standard x^9 squaring (exhausted matrix scan)")
    group = from_squaring(pred.squaring)
    return ClassEntry(
        label="B(3,theta,eps)",
        order=512,
        witness=pred,
        group=group,
        provenance="nonstandard search",
        certificates=tuple(certs),
    )


# ---------------------------------------------------------------------------
# the full catalogue


def _distinctness_certificate(e1: ClassEntry, e2: ClassEntry) -> str:
    p1, p2 = invariant_profile(e1.group), invariant_profile(e2.group)
    if p1 != p2:
        return f"{e1.label} vs {e2.label}: differing invariant profiles"
    s1, s2 = e1.witness, e2.witness
    if (
        s1 is not None
        and s2 is not None
        and (s1.squaring.m, s1.squaring.n) == (s2.squaring.m, s2.squaring.n)
    ):
        if gl_equivalent(s1.squaring, s2.squaring) is None:
            return f"{e1.label} vs {e2.label}: certified non-equivalent by exhausted matrix scan"
        raise AssertionError(f"classes {e1.label} and {e2.label} are equivalent")
    return f"{e1.label} vs {e2.label}: undecided"


def theorem_list(max_order: int) -> list[ClassEntry]:
    """All classes with exactly three automorphism orbits up to max_order:
    the homocyclic family, the scalar-group classes and the nonstandard
    search output, each certified with orbit count 3 and pairwise
    distinctness evidence at equal orders."""
    entries: list[ClassEntry] = []
    n = 1
    while (1 << (2 * n)) <= max_order:
        spec = homocyclic_spec(n)
        count = brute_force_orbits(spec, max_size=max(512, max_order))
        if count != 3:
            raise AssertionError(f"homocyclic rank {n} has {count} orbits")
        entries.append(
            ClassEntry(
                label=f"homocyclic({n})",
                order=spec.order,
                witness=None,
                group=spec,
                provenance="abelian family",
                certificates=("brute-force orbit count = 3",),
            )
        )
        n += 1
    predata = []
    m = 2
    while (1 << (m + max(1, m // 2))) <= max_order:
        predata.extend(
            p
            for p in enumerate_singer(m, max_order=max_order)
            if (1 << (p.squaring.m + p.squaring.n)) <= max_order
        )
        m += 1
    for entry in label_singer_classes(predata):
        count = orbit_count(entry.group)
        if count != 3:
            raise AssertionError(f"{entry.label} has {count} orbits")
        entries.append(
            ClassEntry(
                label=entry.label,
                order=entry.order,
                witness=entry.witness,
                group=entry.group,
                provenance=entry.provenance,
                certificates=entry.certificates + ("pair-group orbit count = 3",),
            )
        )
    m = 2
    while (1 << (m + 2)) <= max_order:
        for pred in nonstandard_search(m):
            if (1 << (pred.squaring.m + pred.squaring.n)) > max_order:
                continue
            entry = identify_exceptional(pred)
            count = orbit_count(entry.group)
            if count != 3:
                raise AssertionError(f"{entry.label} has {count} orbits")
            entries.append(
                ClassEntry(
                    label=entry.label,
                    order=entry.order,
                    witness=entry.witness,
                    group=entry.group,
                    provenance=entry.provenance,
                    certificates=entry.certificates + ("pair-group orbit count = 3",),
                )
            )
        m += 1
    entries.sort(key=lambda e: (e.order, e.label))
    out = []
    for i, entry in enumerate(entries):
        certs = list(entry.certificates)
        for other in entries:
            if other is not entry and other.order == entry.order:
                certs.append(_distinctness_certificate(entry, other))
        out.append(
            ClassEntry(
                label=entry.label,
                order=entry.order,
                witness=entry.witness,
                group=entry.group,
                provenance=entry.provenance,
                certificates=tuple(certs),
            )
        )
    return out

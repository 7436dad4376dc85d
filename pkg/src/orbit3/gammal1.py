"""The one-dimensional semilinear group over GF(p^m) and its subgroups.

An element is a pair (s, e) acting on the field by x -> x^(p^s) * omega^e
(and 0 -> 0); composition applies the left factor first, so
(s1,e1)*(s2,e2) = (s1+s2 mod m, e1*p^s2 + e2 mod p^m-1).  Subgroups are
handled in standard form <alpha^s omega-hat^e, omega-hat^d> with the unique
parameter triple (d, e, s); transitivity, containment, normality, quotients
and homomorphism targets are all decided by integer criteria, each of which
has an element-wise counterpart used for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import Field, get_embedding, get_field
from .numtheory import prime_divisors

__all__ = [
    "GammaL1",
    "StandardParams",
    "HomTarget",
    "QuotientData",
    "standard_form",
    "knuth_full_cycle",
    "is_transitive",
    "orbit_count_params",
    "orbit_count_elementwise",
    "contains",
    "contains_elementwise",
    "is_normal_in",
    "is_normal_elementwise",
    "quotient_data",
    "largest_abelian_normal",
    "all_standard_params",
    "enumerate_transitive_subgroups",
    "enumerate_hom_targets",
    "hom_target_images",
    "validate_hom_target",
    "subgroup_elements",
    "is_abelian_params",
]


class GammaL1:
    """Ambient semilinear group of GF(p^m); elements are (s, e) int pairs."""

    def __init__(self, field: Field):
        self.field = field
        self.p = field.p
        self.m = field.m
        self.q1 = field.order - 1

    def __len__(self):
        return self.m * self.q1 if self.q1 else self.m

    def identity(self):
        return (0, 0)

    def canon(self, g):
        s, e = g
        return (s % self.m, e % self.q1 if self.q1 else 0)

    def compose(self, a, b):
        """Apply a first, then b."""
        s1, e1 = a
        s2, e2 = b
        return ((s1 + s2) % self.m, (e1 * self.p**s2 + e2) % self.q1 if self.q1 else 0)

    def inverse(self, a):
        s, e = a
        s_inv = (-s) % self.m
        return (s_inv, (-e * self.p**s_inv) % self.q1 if self.q1 else 0)

    def power(self, a, k):
        if k < 0:
            return self.power(self.inverse(a), -k)
        r = self.identity()
        b = a
        while k:
            if k & 1:
                r = self.compose(r, b)
            b = self.compose(b, b)
            k >>= 1
        return r

    def conjugate(self, a, h):
        return self.compose(self.compose(self.inverse(h), a), h)

    def apply(self, g, x: int) -> int:
        if x == 0:
            return 0
        s, e = g
        f = self.field
        return f.exp(f.log(x) * self.p ** (s % self.m) + e)

    def order_of(self, a):
        k = 1
        b = self.canon(a)
        while b != (0, 0):
            b = self.compose(b, a)
            k += 1
        return k

    def elements(self):
        return [(s, e) for s in range(self.m) for e in range(max(self.q1, 1))]

    def mulclose(self, generators):
        gens = [self.canon(g) for g in generators]
        seen = set(gens) | {(0, 0)}
        frontier = list(seen)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    c = self.compose(a, g)
                    if c not in seen:
                        seen.add(c)
                        new.append(c)
            frontier = new
        return seen

    def orbits(self, generators):
        """Orbit partition of the nonzero field elements under the subgroup
        generated by the given elements."""
        f = self.field
        gens = list(generators)
        remaining = set(f.units())
        orbits = []
        while remaining:
            x = min(remaining)
            orb = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in gens:
                    z = self.apply(g, y)
                    if z not in orb:
                        orb.add(z)
                        frontier.append(z)
            orbits.append(orb)
            remaining -= orb
        return orbits


@dataclass(frozen=True, order=True)
class StandardParams:
    """Standard parameters (d, e, s) of a subgroup of the semilinear group,
    with ambient (p, m): the subgroup <alpha^s omega^e, omega^d>."""

    p: int
    m: int
    d: int
    e: int
    s: int

    def __post_init__(self):
        q1 = self.p**self.m - 1
        ok = (
            self.d >= 1
            and (q1 % self.d == 0 if q1 else self.d == 1)
            and self.s >= 1
            and self.m % self.s == 0
            and 0 <= self.e < self.d
        )
        if ok and q1:
            ok = (self.e * (q1 // (self.p**self.s - 1))) % self.d == 0
        if not ok:
            raise ValueError(f"invalid standard parameters {self}")

    @property
    def order(self) -> int:
        q1 = self.p**self.m - 1
        return max(q1, 1) // self.d * (self.m // self.s)

    def generators(self):
        return [(self.s % self.m, self.e), (0, self.d % max(self.p**self.m - 1, 1))]

    def to_dict(self):
        return {"p": self.p, "m": self.m, "d": self.d, "e": self.e, "s": self.s}

    @classmethod
    def from_dict(cls, data):
        return cls(data["p"], data["m"], data["d"], data["e"], data["s"])


def subgroup_elements(params: StandardParams) -> set:
    """All (s, e) pairs of the subgroup, by the parametrization
    (js mod m, e*(p^(js)-1)/(p^s-1) + r*d)."""
    p, m, d, e, s = params.p, params.m, params.d, params.e, params.s
    q1 = p**m - 1
    if q1 == 0:
        return {(0, 0)}
    out = set()
    for j in range(m // s):
        scal = e * (p ** (j * s) - 1) // (p**s - 1)
        for r in range(q1 // d):
            out.add(((j * s) % m, (scal + r * d) % q1))
    return out


def standard_form(gamma: GammaL1, generators) -> StandardParams:
    """Standard parameters of the subgroup generated by the given elements,
    computed by explicit enumeration and verified by regeneration."""
    if not generators:
        raise ValueError("need at least one generator")
    group = gamma.mulclose(generators)
    q1 = max(gamma.q1, 1)
    scalars = sorted(e for s, e in group if s == 0)
    d = q1
    for e in scalars:
        if e:
            d = math.gcd(d, e)
    frob_exps = sorted({s for s, _ in group if s != 0})
    s = frob_exps[0] if frob_exps else gamma.m
    e_candidates = sorted(e % d for fs, e in group if fs == s % gamma.m) if d > 1 else [0]
    e = e_candidates[0]
    if any(c != e for c in e_candidates):
        raise AssertionError("scalar exponents at the minimal Frobenius step do not agree mod d")
    params = StandardParams(gamma.p, gamma.m, d, e, s)
    if subgroup_elements(params) != {gamma.canon(g) for g in group}:
        raise AssertionError("standard form does not regenerate the subgroup")
    return params


# ---------------------------------------------------------------------------
# transitivity


def _simulate_full_cycle(a, b, M):
    x = (a * 0 + b) % M
    steps = 1
    while x != 0:
        x = (a * x + b) % M
        steps += 1
        if steps > M:
            return False
    return steps == M


def knuth_full_cycle(a: int, b: int, M: int, sim_limit: int = 4096) -> bool:
    """Whether x -> a*x + b on Z/MZ is a single M-cycle: b coprime to M,
    a = 1 mod every prime dividing M, and a = 1 mod 4 if 4 | M.  Below
    sim_limit the criterion is cross-checked by direct cycle simulation."""
    if M < 1:
        raise ValueError("M >= 1 required")
    if M == 1:
        return True
    crit = (
        math.gcd(b, M) == 1
        and all((a - 1) % ell == 0 for ell in prime_divisors(M))
        and (M % 4 != 0 or (a - 1) % 4 == 0)
    )
    if M <= sim_limit:
        sim = _simulate_full_cycle(a % M, b % M, M)
        if sim != crit:
            raise AssertionError(f"full-cycle criterion disagrees with simulation at {(a, b, M)}")
    return crit


def orbit_count_params(params: StandardParams, check: bool = True) -> int:
    """Number of orbits on the nonzero field elements: the cycle count of
    x -> p^s x + e on Z/dZ; cross-checked by direct orbit enumeration for
    p^m <= 2^12."""
    p, d, e, s = params.p, params.d, params.e, params.s
    a = p**s % d if d > 1 else 0
    seen = [False] * d
    cycles = 0
    for start in range(d):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = (a * x + e) % d
    if check and p**params.m <= 4096:
        direct = orbit_count_elementwise(params)
        if direct != cycles:
            raise AssertionError(f"orbit count mismatch for {params}: {cycles} vs {direct}")
    return cycles


def orbit_count_elementwise(params: StandardParams) -> int:
    gamma = GammaL1(get_field(params.p, params.m))
    return len(gamma.orbits(params.generators()))


def is_transitive(params: StandardParams, check: bool = True) -> bool:
    """Transitivity on the nonzero field elements; scalar-containing
    subgroups (d = 1) are transitive, otherwise the full-cycle criterion."""
    if params.d == 1:
        result = True
    else:
        result = params.e > 0 and knuth_full_cycle(params.p**params.s, params.e, params.d)
    if check and params.p**params.m <= 4096:
        if result != (orbit_count_elementwise(params) == 1):
            raise AssertionError(f"transitivity criterion disagrees with orbits for {params}")
    return result


# ---------------------------------------------------------------------------
# containment / normality / quotients


def _same_ambient(a: StandardParams, b: StandardParams):
    if (a.p, a.m) != (b.p, b.m):
        raise ValueError("parameters live in different ambient groups")


def contains(sub: StandardParams, sup: StandardParams) -> bool:
    """Whether sub <= sup, by divisibility of standard parameters."""
    _same_ambient(sub, sup)
    p = sup.p
    d, e, s = sup.d, sup.e, sup.s
    d1, e1, s1 = sub.d, sub.e, sub.s
    return (
        d1 % d == 0
        and s1 % s == 0
        and (e * (p**s1 - 1) // (p**s - 1) - e1) % d == 0
    )


def contains_elementwise(sub: StandardParams, sup: StandardParams) -> bool:
    _same_ambient(sub, sup)
    sup_set = subgroup_elements(sup)
    gamma = GammaL1(get_field(sub.p, sub.m))
    return all(gamma.canon(g) in sup_set for g in sub.generators())


def is_normal_in(sub: StandardParams, sup: StandardParams) -> bool:
    """Whether sub is normal in sup; requires containment."""
    if not contains(sub, sup):
        raise ValueError("is_normal_in requires sub <= sup")
    p = sup.p
    d, e, s = sup.d, sup.e, sup.s
    d1, e1, s1 = sub.d, sub.e, sub.s
    return (d * (p**s1 - 1)) % d1 == 0 and (e1 * (p**s - 1) - e * (p**s1 - 1)) % d1 == 0


def is_normal_elementwise(sub: StandardParams, sup: StandardParams) -> bool:
    gamma = GammaL1(get_field(sub.p, sub.m))
    sub_set = subgroup_elements(sub)
    return all(
        gamma.conjugate(g, h) in sub_set
        for g in sub.generators()
        for h in sup.generators()
    )


@dataclass(frozen=True)
class QuotientData:
    """Quotient sup/sub presented as <x, y | x^xo = y^-a, y^yo = 1, y^x = y^c>."""

    order: int
    a: int
    x_order: int
    y_order: int
    conj_exp: int
    k: int


def quotient_data(sub: StandardParams, sup: StandardParams) -> QuotientData:
    if not is_normal_in(sub, sup):
        raise ValueError("quotient_data requires sub normal in sup")
    p = sup.p
    d, e, s = sup.d, sup.e, sup.s
    d1, e1, s1 = sub.d, sub.e, sub.s
    num = e1 - e * (p**s1 - 1) // (p**s - 1)
    if num % d:
        raise AssertionError("relator exponent is not integral")
    a = num // d
    y_order = d1 // d
    x_order = s1 // s
    return QuotientData(
        order=y_order * x_order,
        a=a,
        x_order=x_order,
        y_order=y_order,
        conj_exp=p**s,
        k=math.gcd(a, y_order) if y_order else 0,
    )


# ---------------------------------------------------------------------------
# enumeration


def all_standard_params(p: int, m: int) -> list[StandardParams]:
    """Every subgroup of the ambient group, as standard parameters."""
    q1 = p**m - 1
    out = []
    for s in range(1, m + 1):
        if m % s:
            continue
        quo = q1 // (p**s - 1) if q1 else 0
        for d in range(1, q1 + 1):
            if q1 % d:
                continue
            for e in range(d):
                if (e * quo) % d == 0:
                    out.append(StandardParams(p, m, d, e, s))
        if q1 == 0:
            out.append(StandardParams(p, m, 1, 0, s))
    return sorted(out)


def is_abelian_params(params: StandardParams) -> bool:
    # <alpha^s omega^e, omega^d> is abelian iff conjugation by the twist
    # fixes omega^d, i.e. p^m - 1 | d (p^s - 1)
    q1 = params.p**params.m - 1
    return (params.d * (params.p**params.s - 1)) % max(q1, 1) == 0


def largest_abelian_normal(params: StandardParams) -> StandardParams:
    """The largest abelian normal subgroup of a transitive subgroup.

    Returns the scalar intersection (d, 0, m) whenever it contains every
    abelian normal subgroup (always, except ambient GF(9)); otherwise a
    canonical maximal counterexample outside the scalars.
    """
    if not is_transitive(params, check=False):
        raise ValueError("largest_abelian_normal expects a transitive subgroup")
    scalars = StandardParams(params.p, params.m, params.d, 0, params.m)
    candidates = [
        c
        for c in all_standard_params(params.p, params.m)
        if is_abelian_params(c) and contains(c, params) and is_normal_in(c, params)
    ]
    outside = [c for c in candidates if not contains(c, scalars)]
    if not outside:
        return scalars
    maximal = [c for c in outside if not any(c != b and contains(c, b) for b in candidates)]
    return max(maximal, key=lambda c: (c.order, c))


def enumerate_transitive_subgroups(m: int) -> list[StandardParams]:
    """All transitive subgroups of the binary ambient group that do not
    contain the scalars (d >= 2), in standard form."""
    q1 = 2**m - 1
    out = []
    for d in range(2, m + 1):
        if q1 % d or m % d:
            continue
        for s in range(2, m + 1):
            if m % s or m % (d * s):
                continue
            ps1 = 2**s - 1
            if (q1 // ps1) % d:
                continue
            if any(ps1 % ell for ell in prime_divisors(d)):
                continue
            if d % 4 == 0 and ps1 % 4 != 0:
                continue
            for e in range(1, d):
                if math.gcd(d, e) == 1:
                    out.append(StandardParams(2, m, d, e, s))
    return sorted(out)


# ---------------------------------------------------------------------------
# homomorphism targets


@dataclass(frozen=True)
class HomTarget:
    """A surjection onto a transitive subgroup of the degree-n semilinear
    group, recorded by the generator images: the scalar generator maps to
    Omega-hat^d_prime with Omega = omega^(u(2^m-1)/(2^n-1)), the twist
    generator to beta^s Omega-hat^e_pp; epsilon_exp satisfies
    Omega^d_prime = (omega^d)^epsilon_exp."""

    n: int
    u: int
    d_prime: int
    e_pp: int
    epsilon_exp: int
    aliases: tuple = ()

    def to_dict(self):
        return {
            "n": self.n,
            "u": self.u,
            "d_prime": self.d_prime,
            "e_pp": self.e_pp,
            "epsilon_exp": self.epsilon_exp,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], data["u"], data["d_prime"], data["e_pp"], data["epsilon_exp"])


def hom_target_images(a: StandardParams, target: HomTarget):
    """Images of the two standard generators as elements of the degree-n
    semilinear group (exponents taken in the subfield's own generator)."""
    m, n = a.m, target.n
    q1 = 2**m - 1
    r1 = 2**n - 1
    field_n = get_field(2, n)
    emb = get_embedding(2, n, m)
    field_m = emb.sup
    omega_big = field_m.exp(target.u * (q1 // r1))
    omega_log = field_n.log(emb.project(omega_big)) if r1 else 0
    gamma_n = GammaL1(field_n)
    img_scalar = gamma_n.canon((0, target.d_prime * omega_log))
    img_twist = gamma_n.canon((a.s, target.e_pp * omega_log))
    return img_twist, img_scalar


def validate_hom_target(a: StandardParams, target: HomTarget) -> bool:
    """Check the generator relations and image transitivity explicitly."""
    p, m, n = a.p, a.m, target.n
    q1 = p**m - 1
    gamma_n = GammaL1(get_field(2, n))
    img_twist, img_scalar = hom_target_images(a, target)
    t = q1 // (a.d * (p**a.s - 1))
    lhs = gamma_n.power(img_twist, m // a.s)
    rhs = gamma_n.power(img_scalar, a.e * t)
    if lhs != rhs:
        return False
    if gamma_n.power(img_scalar, q1 // a.d) != (0, 0):
        return False
    if gamma_n.conjugate(img_scalar, img_twist) != gamma_n.power(img_scalar, p**a.s):
        return False
    return len(gamma_n.orbits([img_twist, img_scalar])) == 1


def enumerate_hom_targets(a: StandardParams, n: int, epsilon_filter=None) -> list[HomTarget]:
    """All homomorphism targets of degree n for a transitive subgroup,
    deduplicated by the induced generator images (parameter preimages are
    recorded as aliases).  epsilon_filter, when given, prunes whole (u, d')
    branches by the induced monomial degree before the inner loop runs."""
    if a.p != 2:
        raise ValueError("hom targets are implemented for p = 2")
    if a.m % n or n < 2:
        raise ValueError("need n | m and n >= 2")
    if not is_transitive(a, check=False):
        raise ValueError("domain subgroup must be transitive")
    m = a.m
    q1 = 2**m - 1
    r1 = 2**n - 1
    ps1 = 2**a.s - 1
    by_images: dict[tuple, list] = {}
    for d_prime in range(1, math.gcd(n, r1) + 1):
        if math.gcd(n, r1) % d_prime:
            continue
        if (q1 // a.d) % (r1 // d_prime):
            continue
        if ((2 ** math.lcm(n, a.s) - 1) // ps1) % d_prime:
            continue
        if any(ps1 % ell for ell in prime_divisors(d_prime)):
            continue
        t = q1 // (a.d * ps1)
        rhs = a.e * d_prime * t % r1
        coeff = (q1 // ps1) % r1
        for u in range(1, r1 + 1):
            if math.gcd(u, r1) != 1:
                continue
            num = u * d_prime * (q1 // r1)
            if num % a.d:
                continue
            epsilon = num // a.d % (q1 // a.d)
            if epsilon_filter is not None and not epsilon_filter(epsilon):
                continue
            for e_pp in range(r1):
                if math.gcd(e_pp, d_prime) != 1:
                    continue
                if (e_pp * coeff - rhs) % r1:
                    continue
                cand = HomTarget(n, u, d_prime, e_pp, epsilon)
                if not validate_hom_target(a, cand):
                    continue
                by_images.setdefault(hom_target_images(a, cand), []).append(cand)
    out = []
    for cands in by_images.values():
        first = min(cands, key=lambda c: (c.u, c.d_prime, c.e_pp))
        aliases = tuple((c.u, c.d_prime, c.e_pp) for c in cands if c is not first)
        out.append(
            HomTarget(first.n, first.u, first.d_prime, first.e_pp, first.epsilon_exp, aliases)
        )
    return sorted(out, key=lambda t: (t.d_prime, t.u, t.e_pp))

"""Squarings GF(2)^m -> GF(2)^n and their constructions.

A squaring is stored as an explicit table of 2^m values, each an n-bit int;
the domain doubles as the field GF(2^m) through the pinned encodings, and
the codomain as GF(2^n).  The induced form [x,y] = s(x+y)+s(x)+s(y), the
polynomial biadditivity criterion, the scalar-group and coset-monomial
constructions, equivariance validation and the two equivalence searches all
live here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .field import get_embedding, get_field
from .gammal1 import (
    GammaL1,
    HomTarget,
    StandardParams,
    hom_target_images,
    is_transitive,
    validate_hom_target,
)
from .gf2 import PartialLinearMap, mat_inverse, vecmat
from .numtheory import digit_sum, nu_p

__all__ = [
    "Squaring",
    "Predatum",
    "CriterionResult",
    "SearchBudgetExceeded",
    "induced_form",
    "induced_form_table",
    "is_biadditive",
    "form_is_nontrivial",
    "form_is_surjective",
    "biadditivity_criterion",
    "squaring_polynomial",
    "singer_squaring",
    "singer_exponent_legal",
    "sigma_omega",
    "sigma_omega_predatum",
    "coset_monomial_squaring",
    "sigma1_solutions",
    "project_to_subfield",
    "validate_predatum",
    "predatum_violations",
    "gammal1_equivalent",
    "apply_semilinear_pair",
    "transform_gl",
    "gl_equivalent",
]


class SearchBudgetExceeded(RuntimeError):
    """An equivalence scan hit its node budget before exhausting the space."""


@dataclass(frozen=True)
class Squaring:
    m: int
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.m:
            raise ValueError("table must have 2^m entries")
        if any(not 0 <= v < 1 << self.n for v in self.table):
            raise ValueError("table entries must be n-bit")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def to_dict(self):
        return {"m": self.m, "n": self.n, "table": list(self.table)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["m"], data["n"], tuple(data["table"]))


@dataclass(frozen=True)
class Predatum:
    """A squaring over field structures with its equivariance witness: the
    domain subgroup in standard form plus the generator images."""

    squaring: Squaring
    a_params: StandardParams
    target: HomTarget

    def to_dict(self):
        d = self.squaring.to_dict()
        d["a_params"] = self.a_params.to_dict()
        d["target"] = self.target.to_dict()
        return d

    @classmethod
    def from_dict(cls, data):
        return cls(
            Squaring(data["m"], data["n"], tuple(data["table"])),
            StandardParams.from_dict(data["a_params"]),
            HomTarget.from_dict(data["target"]),
        )


# ---------------------------------------------------------------------------
# induced form


def induced_form(sq: Squaring):
    """The form (x, y) -> s(x+y) + s(x) + s(y), as a callable."""
    t = sq.table
    return lambda x, y: t[x ^ y] ^ t[x] ^ t[y]


def induced_form_table(sq: Squaring):
    t = sq.table
    size = 1 << sq.m
    return [[t[x ^ y] ^ t[x] ^ t[y] for y in range(size)] for x in range(size)]


def is_biadditive(sq: Squaring) -> bool:
    """Whether the induced form is biadditive: every column must be the
    linear map determined by its values on the unit vectors (symmetry of the
    form covers the other slot)."""
    t = sq.table
    m = sq.m
    size = 1 << m
    for z in range(size):
        tz = t[z]
        units = [t[(1 << i) ^ z] ^ t[1 << i] ^ tz for i in range(m)]
        for x in range(size):
            if t[x ^ z] ^ t[x] ^ tz != vecmat(x, units):
                return False
    return True


def form_is_nontrivial(sq: Squaring) -> bool:
    t = sq.table
    return any(
        t[(1 << i) ^ (1 << j)] ^ t[1 << i] ^ t[1 << j]
        for i in range(sq.m)
        for j in range(i)
    ) or any(t[x ^ 1] ^ t[x] ^ t[1] for x in range(1 << sq.m))


def form_is_surjective(sq: Squaring) -> bool:
    t = sq.table
    size = 1 << sq.m
    basis = []
    for x in range(size):
        for y in range(size):
            v = t[x ^ y] ^ t[x] ^ t[y]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                if len(basis) == sq.n:
                    return True
    return sq.n == len(basis)


@dataclass(frozen=True)
class CriterionResult:
    biadditive: bool
    nontrivial: bool
    exponents: tuple[int, ...]

    def __bool__(self):
        return self.biadditive


def biadditivity_criterion(coeffs) -> CriterionResult:
    """Polynomial test: a function induces a biadditive form iff it has zero
    constant term and every monomial exponent has at most two binary digits;
    the form is nontrivial iff some exponent has exactly two."""
    exponents = tuple(i for i, c in enumerate(coeffs) if c)
    biadditive = coeffs[0] == 0 and all(digit_sum(i) <= 2 for i in exponents)
    nontrivial = biadditive and any(digit_sum(i) == 2 for i in exponents)
    return CriterionResult(biadditive, nontrivial, exponents)


def squaring_polynomial(sq: Squaring):
    """Coefficients over GF(2^m) of the squaring viewed inside the big field
    along the pinned subfield embedding (requires n | m)."""
    emb = get_embedding(2, sq.n, sq.m)
    values = [emb.embed(v) for v in sq.table]
    return emb.sup.interpolate(values)


# ---------------------------------------------------------------------------
# constructions


def singer_exponent_legal(m: int, n: int, l: int, k: int | None) -> bool:
    """Parameter test for the scalar-group constructions: degree-m squarings
    need e = 2^l(2^k+1) with nu_2(k) >= nu_2(m); half-degree ones fix
    k = m/2.  In both cases e must stay below 2^m."""
    if n == m:
        if k is None or k < 1 or nu_p(k, 2) < nu_p(m, 2):
            return False
        return (1 << l) * ((1 << k) + 1) <= (1 << m) - 1
    if m % 2 == 0 and n == m // 2:
        return (1 << l) * ((1 << (m // 2)) + 1) <= (1 << m) - 1
    return False


def singer_squaring(m: int, n: int, variant: str, l: int = 0, k: int | None = None,
                    scalar: int = 1) -> Predatum:
    """Monomial squaring s * x^e over the full scalar group.

    Variant "a" takes n = m and e = 2^l(2^k+1); variant "b" takes n = m/2
    and e = 2^l(2^(m/2)+1).  scalar is a nonzero element of GF(2^n)."""
    if variant == "a":
        if n != m:
            raise ValueError("variant a needs n = m")
    elif variant == "b":
        if m % 2 or n != m // 2:
            raise ValueError("variant b needs n = m/2")
        k = m // 2
    else:
        raise ValueError("variant must be 'a' or 'b'")
    if not singer_exponent_legal(m, n, l, k):
        raise ValueError(f"illegal exponent parameters (m={m}, n={n}, l={l}, k={k})")
    if not 1 <= scalar < 1 << n:
        raise ValueError("scalar must be a nonzero element of the target field")
    e = (1 << l) * ((1 << k) + 1)
    big = get_field(2, m)
    emb = get_embedding(2, n, m)
    s_big = emb.embed(scalar)
    table = []
    for x in big.elements():
        v = big.mul(s_big, big.pow(x, e))
        if not emb.in_image(v):
            raise AssertionError("monomial value escaped the target subfield")
        table.append(emb.project(v))
    sq = Squaring(m, n, tuple(table))
    q1, r1 = (1 << m) - 1, (1 << n) - 1
    # the scalar generator maps to Omega-hat with Omega = omega^e, i.e.
    # u = e for the full-degree variant and u = 2^l for the half-degree one
    u = e if variant == "a" else ((1 << l) % r1 if r1 > 1 else 1)
    a_params = StandardParams(2, m, 1, 0, m)
    target = HomTarget(n=n, u=u, d_prime=1, e_pp=0, epsilon_exp=u * (q1 // r1) % q1)
    pred = Predatum(sq, a_params, target)
    problems = predatum_violations(pred)
    if problems:
        raise AssertionError(f"scalar-group construction failed validation: {problems}")
    return pred


def sigma_omega() -> Squaring:
    """The degree-6 to degree-3 squaring x -> w x^3 + w^8 x^24 (w the pinned
    generator); its values land in the embedded GF(8)."""
    big = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    w = big.omega
    w8 = big.pow(w, 8)
    table = []
    for x in big.elements():
        v = big.add(big.mul(w, big.pow(x, 3)), big.mul(w8, big.pow(x, 24)))
        if not emb.in_image(v):
            raise AssertionError("value escaped the subfield")
        table.append(emb.project(v))
    if table[1] == 0:
        raise AssertionError("the coefficient choice must not vanish at 1")
    return Squaring(6, 3, tuple(table))


def sigma_omega_predatum() -> Predatum:
    """sigma_omega together with its equivariance witness: domain subgroup
    (d,e,s) = (3,1,2), twist mapping to the squared target Frobenius, scalar
    generator to the degree-3 generator cube-power."""
    return Predatum(
        sigma_omega(),
        StandardParams(2, 6, 3, 1, 2),
        HomTarget(n=3, u=1, d_prime=1, e_pp=0, epsilon_exp=3),
    )


def _zeta_exponent(a: StandardParams, target: HomTarget) -> int:
    """Discrete log (base omega) of zeta = Omega^e_pp * omega^(-e*epsilon)."""
    q1 = (1 << a.m) - 1
    r1 = (1 << target.n) - 1
    return (target.u * (q1 // r1) * target.e_pp - a.e * target.epsilon_exp) % q1


def sigma1_solutions(a: StandardParams, target: HomTarget) -> list[int]:
    """All nonzero values of sigma(1) compatible with the coset-monomial
    shape, by exhaustive scan: sigma(1)^(2^(ds)) = zeta^(-(2^(ds)-1)/(2^s-1))
    * sigma(1)."""
    big = get_field(2, a.m)
    zlog = _zeta_exponent(a, target)
    e_pow = 1 << (a.d * a.s)
    coeff = big.exp(-zlog * ((e_pow - 1) // ((1 << a.s) - 1)))
    return sorted(x for x in big.units() if big.pow(x, e_pow) == big.mul(coeff, x))


def coset_monomial_squaring(a: StandardParams, target: HomTarget, sigma1: int) -> Squaring:
    """The unique equivariant extension of sigma(1) = sigma1: a full-field
    table, monomial of degree epsilon on each scalar-intersection coset with
    geometrically twisted coefficients.  Values are not guaranteed to lie in
    the degree-n subfield; filter with project_to_subfield afterwards."""
    if sigma1 == 0:
        raise ValueError("sigma(1) must be nonzero (squarings are surjective)")
    if sigma1 not in sigma1_solutions(a, target):
        raise ValueError("sigma(1) violates the coset-wrap constraint")
    big = get_field(2, a.m)
    q1 = (1 << a.m) - 1
    d, e, s = a.d, a.e, a.s
    eps = target.epsilon_exp
    zlog = _zeta_exponent(a, target)
    s1log = big.log(sigma1)
    table = [0] * (1 << a.m)
    for x in range(d):
        geo = ((1 << (x * s)) - 1) // ((1 << s) - 1)
        coeff_log = zlog * geo + s1log * (1 << (x * s))
        base = e * geo
        for r in range(q1 // d):
            chi_log = base + r * d
            table[big.exp(chi_log)] = big.exp(coeff_log + chi_log * eps)
    sq = Squaring(a.m, a.m, tuple(table))
    _check_equivariance_big(sq, a, target)
    return sq


def _check_equivariance_big(sq: Squaring, a: StandardParams, target: HomTarget):
    """Equivariance of a full-field table under the two standard generators,
    with the image maps read inside the big field."""
    big = get_field(2, a.m)
    q1 = (1 << a.m) - 1
    r1 = (1 << target.n) - 1
    gamma = GammaL1(big)
    omega_big_log = target.u * (q1 // r1)
    twist = (a.s % a.m, a.e)
    twist_img = (a.s % a.m, omega_big_log * target.e_pp % q1)
    scal = (0, a.d)
    scal_img = (0, omega_big_log * target.d_prime % q1)
    for g, img in ((twist, twist_img), (scal, scal_img)):
        for x in big.elements():
            if sq.table[gamma.apply(g, x)] != gamma.apply(img, sq.table[x]):
                raise AssertionError("coset-monomial table is not equivariant")


def coset_polynomial(sq: Squaring, a: StandardParams, target: HomTarget):
    """Coefficient vector of a coset-monomial full-field table.

    Such a table can only carry monomials of degree epsilon + x(2^m-1)/d, so
    just those d coefficients are computed (by character sums) and the
    sparse polynomial is then verified against the table at every point."""
    if sq.n != sq.m or sq.m != a.m:
        raise ValueError("expects a full-field table over the domain field")
    big = get_field(2, a.m)
    q1 = (1 << a.m) - 1
    coeffs = [0] * (1 << a.m)
    logs = [(big.log(x), sq.table[x]) for x in big.units() if sq.table[x]]
    for x in range(a.d):
        i = target.epsilon_exp % (q1 // a.d) + x * (q1 // a.d)
        if i == 0:
            continue
        acc = 0
        for t, fx in logs:
            acc = big.add(acc, big.mul(fx, big.exp(-i * t)))
        coeffs[i] = acc
    for x in big.elements():
        if big.evaluate(coeffs, x) != sq.table[x]:
            raise AssertionError("table is not coset-monomial of the expected degree")
    return coeffs


def project_to_subfield(sq: Squaring, n: int) -> Squaring | None:
    """Reinterpret a full-field table as a degree-n squaring when its image
    lies in the embedded subfield; None otherwise."""
    if sq.n != sq.m or sq.m % n:
        raise ValueError("expects a full-field table and n | m")
    emb = get_embedding(2, n, sq.m)
    if not all(emb.in_image(v) for v in sq.table):
        return None
    return Squaring(sq.m, n, tuple(emb.project(v) for v in sq.table))


# ---------------------------------------------------------------------------
# validation


def predatum_violations(pred: Predatum) -> list[str]:
    """All failed predatum invariants (empty list = valid)."""
    sq, a, target = pred.squaring, pred.a_params, pred.target
    out = []
    if sq.m != a.m or sq.n != target.n:
        return [f"dimension mismatch: squaring {(sq.m, sq.n)} vs ({a.m}, {target.n})"]
    if sq.table[0] != 0:
        out.append("sigma(0) != 0")
    if not is_transitive(a, check=False):
        out.append("domain subgroup is not transitive")
    if not validate_hom_target(a, target):
        out.append("generator images do not define a surjection onto a transitive subgroup")
    big = get_field(2, a.m)
    q1, r1 = (1 << a.m) - 1, (1 << target.n) - 1
    omega_big = big.exp(target.u * (q1 // r1))
    if big.pow(omega_big, target.d_prime) != big.pow(big.exp(a.d), target.epsilon_exp):
        out.append("stored monomial degree disagrees with the scalar image")
    if len(set(sq.table)) != 1 << sq.n:
        out.append("sigma is not surjective")
    if not is_biadditive(sq):
        out.append("induced form is not biadditive")
    elif not form_is_nontrivial(sq):
        out.append("induced form is trivial")
    gamma_m = GammaL1(get_field(2, a.m))
    gamma_n = GammaL1(get_field(2, target.n))
    try:
        twist_img, scal_img = hom_target_images(a, target)
    except (ValueError, ZeroDivisionError):
        return out + ["generator images are not defined"]
    for g, img, name in (
        ((a.s % a.m, a.e), twist_img, "twist"),
        ((0, a.d), scal_img, "scalar"),
    ):
        bad = sum(
            sq.table[gamma_m.apply(g, x)] != gamma_n.apply(img, sq.table[x])
            for x in range(1 << a.m)
        )
        if bad:
            out.append(f"equivariance fails for the {name} generator at {bad} points")
    return out


def validate_predatum(pred: Predatum) -> bool:
    return not predatum_violations(pred)


# ---------------------------------------------------------------------------
# equivalence searches


def apply_semilinear_pair(sq: Squaring, gamma1, gamma2) -> Squaring:
    """The squaring x -> gamma2(sigma(gamma1(x))), gamma1 acting on the
    domain field, gamma2 on the target field."""
    gm = GammaL1(get_field(2, sq.m))
    gn = GammaL1(get_field(2, sq.n))
    table = tuple(gn.apply(gamma2, sq.table[gm.apply(gamma1, x)]) for x in range(1 << sq.m))
    return Squaring(sq.m, sq.n, table)


def gammal1_equivalent(s1: Squaring, s2: Squaring):
    """Search for semilinear maps with gamma2 o s1 o gamma1 = s2; returns the
    lexicographically first witness pair or None."""
    if (s1.m, s1.n) != (s2.m, s2.n):
        raise ValueError("squarings must share dimensions")
    if sorted(Counter(s1.table).values()) != sorted(Counter(s2.table).values()):
        return None
    gm = GammaL1(get_field(2, s1.m))
    gn = GammaL1(get_field(2, s1.n))
    order = sorted(range(1 << s1.m), key=lambda x: (x != 1, x))
    for gamma1 in sorted(gm.elements()):
        pre = [s1.table[gm.apply(gamma1, x)] for x in range(1 << s1.m)]
        for gamma2 in sorted(gn.elements()):
            if all(gn.apply(gamma2, pre[x]) == s2.table[x] for x in order):
                return gamma1, gamma2
    return None


def transform_gl(sq: Squaring, t_rows, u_rows) -> Squaring:
    """The equivalent squaring x -> sigma(x T) U^-1."""
    u_inv = mat_inverse(u_rows)
    table = tuple(vecmat(sq.table[vecmat(x, t_rows)], u_inv) for x in range(1 << sq.m))
    return Squaring(sq.m, sq.n, table)


def gl_equivalent(s1: Squaring, s2: Squaring, budget: int | None = None):
    """Search for invertible matrices with s2(x) = s1(x T) U^-1.

    Scans the domain matrices T row by row in lexicographic order; each new
    row adds the constraints s2(x) U = s1(x T) for the fresh slice of the
    span, which pin U down as an injective partial linear map and prune the
    subtree on contradiction.  Complete candidates re-derive U from the
    first-found preimage basis and verify every point.  budget caps the
    number of visited nodes; exceeding it raises SearchBudgetExceeded
    (distinct from a certified "not equivalent" None)."""
    if (s1.m, s1.n) != (s2.m, s2.n):
        raise ValueError("squarings must share dimensions")
    if s1.m > 6:
        raise ValueError("matrix equivalence scans are supported up to m = 6")
    m, n = s1.m, s1.n
    t1, t2 = s1.table, s2.table
    if sorted(Counter(t1).values()) != sorted(Counter(t2).values()):
        return None
    size = 1 << m
    plm = PartialLinearMap()
    if not plm.add(t2[0], t1[0]):
        return None
    images = [0] * size
    rows: list[int] = []
    row_basis: list[int] = []
    nodes = 0

    def independent(w):
        for b in row_basis:
            w = min(w, w ^ b)
        return w

    def dfs(k):
        nonlocal nodes
        if k == m:
            return _verify_gl_witness(s1, s2, tuple(rows))
        for w in range(1, size):
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(f"gl_equivalent exceeded {budget} nodes")
            red = independent(w)
            if not red:
                continue
            mark = plm.mark()
            ok = True
            for y in range(1 << k):
                x = y | (1 << k)
                images[x] = images[y] ^ w
                if not plm.add(t2[x], t1[images[x]]):
                    ok = False
                    break
            if ok:
                rows.append(w)
                row_basis.append(red)
                found = dfs(k + 1)
                if found is not None:
                    return found
                rows.pop()
                row_basis.pop()
            plm.rewind(mark)
        return None

    return dfs(0)


def _verify_gl_witness(s1, s2, t_rows):
    """Recover U on the first-found preimage basis of s1's image and check
    the full relation; None if the candidate T fails."""
    m, n = s1.m, s1.n
    solver = PartialLinearMap()
    for x in range(1 << m):
        if not solver.add(s2.table[x], s1.table[vecmat(x, t_rows)]):
            return None
    try:
        u_rows = solver.completion(n)
    except ValueError:
        return None
    u_inv = mat_inverse(u_rows)
    for x in range(1 << m):
        if s2.table[x] != vecmat(s1.table[vecmat(x, t_rows)], u_inv):
            return None
    return t_rows, u_rows

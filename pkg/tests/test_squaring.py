import random

import pytest

from orbit3 import squaring as sqm
from orbit3.field import get_embedding, get_field
from orbit3.gammal1 import GammaL1, HomTarget, StandardParams, hom_target_images
from orbit3.gf2 import is_invertible, mat_identity


def cube_on_f8():
    f = get_field(2, 3)
    return sqm.Squaring(3, 3, tuple(f.pow(x, 3) for x in f.elements()))


def test_induced_form_examples():
    sq = cube_on_f8()
    f = get_field(2, 3)
    form = sqm.induced_form_table(sq)
    assert form[0][0] == 0
    for x in f.elements():
        assert form[x][x] == 0
        for y in f.elements():
            assert form[x][y] == f.mul(f.mul(x, y), f.add(x, y))


def test_is_biadditive():
    assert sqm.is_biadditive(sqm.Squaring(3, 3, (0,) * 8))  # trivial form
    assert not sqm.form_is_nontrivial(sqm.Squaring(3, 3, (0,) * 8))
    assert not sqm.form_is_surjective(sqm.Squaring(3, 3, (0,) * 8))
    assert sqm.is_biadditive(cube_on_f8())
    assert sqm.form_is_surjective(cube_on_f8())
    assert sqm.form_is_surjective(sqm.sigma_omega())
    f = get_field(2, 3)
    x7 = sqm.Squaring(3, 3, tuple(f.pow(x, 7) for x in f.elements()))
    assert not sqm.is_biadditive(x7)


def test_biadditivity_criterion():
    e3 = [0] * 8
    e3[3] = 1
    crit = sqm.biadditivity_criterion(e3)
    assert crit.biadditive and crit.nontrivial and crit.exponents == (3,)
    e7 = [0] * 8
    e7[7] = 1
    assert not sqm.biadditivity_criterion(e7).biadditive
    f6 = get_field(2, 6)
    coeffs = [0] * 64
    coeffs[3] = f6.omega
    coeffs[24] = f6.pow(f6.omega, 8)
    crit = sqm.biadditivity_criterion(coeffs)
    assert crit.biadditive and crit.nontrivial and crit.exponents == (3, 24)


def test_sigma_omega_values():
    so = sqm.sigma_omega()
    f6 = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    assert so.table[0] == 0
    assert emb.embed(so.table[1]) == f6.add(f6.omega, f6.pow(f6.omega, 8))
    assert so.table[1] != 0
    # every value is a subfield element by construction; spot check directly
    for x in f6.elements():
        v = f6.add(f6.mul(f6.omega, f6.pow(x, 3)), f6.mul(f6.pow(f6.omega, 8), f6.pow(x, 24)))
        assert f6.pow(v, 8) == v
        assert emb.embed(so.table[x]) == v


def test_sigma_omega_polynomial_support():
    so = sqm.sigma_omega()
    f6 = get_field(2, 6)
    coeffs = sqm.squaring_polynomial(so)
    assert {i for i, c in enumerate(coeffs) if c} == {3, 24}
    assert coeffs[3] == f6.omega and coeffs[24] == f6.pow(f6.omega, 8)


def test_sigma_omega_predatum_valid():
    pred = sqm.sigma_omega_predatum()
    assert sqm.predatum_violations(pred) == []
    assert sqm.validate_predatum(pred)


def test_perturbed_targets_fail_validation():
    pred = sqm.sigma_omega_predatum()
    bad_epp = sqm.Predatum(
        pred.squaring, pred.a_params, HomTarget(n=3, u=1, d_prime=1, e_pp=1, epsilon_exp=3)
    )
    assert any("equivariance" in v for v in sqm.predatum_violations(bad_epp))
    bad_eps = sqm.Predatum(
        pred.squaring, pred.a_params, HomTarget(n=3, u=1, d_prime=1, e_pp=0, epsilon_exp=6)
    )
    assert sqm.predatum_violations(bad_eps)


def test_equivariance_of_form():
    # [x^g, y^g] = [x, y]^(phi g) for both generators of a valid predatum
    for pred in (sqm.sigma_omega_predatum(), sqm.singer_squaring(3, 3, "a", 0, 1)):
        sq, a, target = pred.squaring, pred.a_params, pred.target
        gamma_m = GammaL1(get_field(2, a.m))
        gamma_n = GammaL1(get_field(2, target.n))
        twist_img, scal_img = hom_target_images(a, target)
        form = sqm.induced_form_table(sq)
        for g, img in (((a.s % a.m, a.e), twist_img), ((0, a.d), scal_img)):
            for x in range(1 << a.m):
                for y in range(1 << a.m):
                    lhs = form[gamma_m.apply(g, x)][gamma_m.apply(g, y)]
                    assert lhs == gamma_n.apply(img, form[x][y])


def test_singer_variants():
    f3 = get_field(2, 3)
    pa = sqm.singer_squaring(3, 3, "a", l=0, k=1)
    assert pa.squaring.table == tuple(f3.pow(x, 3) for x in f3.elements())
    assert pa.a_params == StandardParams(2, 3, 1, 0, 3)
    pq8 = sqm.singer_squaring(2, 1, "b")
    assert pq8.squaring.table == (0, 1, 1, 1)
    f6 = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    pb = sqm.singer_squaring(6, 3, "b")
    assert pb.squaring.table == tuple(emb.project(f6.pow(x, 9)) for x in f6.elements())
    # scalar and shift variants validate too
    assert sqm.validate_predatum(sqm.singer_squaring(6, 3, "b", l=1, scalar=5))
    assert sqm.validate_predatum(sqm.singer_squaring(4, 2, "b", l=1, scalar=3))


def test_singer_parameter_errors():
    with pytest.raises(ValueError):
        sqm.singer_squaring(4, 4, "a", l=0, k=1)  # nu_2(1) < nu_2(4)
    with pytest.raises(ValueError):
        sqm.singer_squaring(3, 3, "a", l=5, k=1)  # exponent exceeds 2^m - 1
    with pytest.raises(ValueError):
        sqm.singer_squaring(3, 3, "a", l=0, k=1, scalar=0)
    with pytest.raises(ValueError):
        sqm.singer_squaring(5, 2, "b")


def test_singer_legality_matches_closed_form():
    from orbit3.numtheory import _two_digit_parameter_closed

    for m in range(2, 21):
        for k in range(1, m):
            assert sqm.singer_exponent_legal(m, m, 0, k) == _two_digit_parameter_closed(
                m, m, 1 + (1 << k)
            )


def test_sigma1_solutions():
    # scalar-group target with trivial coefficient: constraint degenerates,
    # every nonzero value qualifies
    pa = sqm.singer_squaring(3, 3, "a", 0, 1)
    sols = sqm.sigma1_solutions(pa.a_params, pa.target)
    assert sorted(sols) == list(range(1, 8))
    A = StandardParams(2, 6, 3, 1, 2)
    T = HomTarget(n=3, u=1, d_prime=1, e_pp=0, epsilon_exp=3)
    sols = sqm.sigma1_solutions(A, T)
    assert sols
    # perturbing the coefficient exponent breaks the wrap condition
    T2 = HomTarget(n=3, u=1, d_prime=1, e_pp=0, epsilon_exp=4)
    assert len(sqm.sigma1_solutions(A, T2)) < len(sols)


def test_coset_monomial_construction():
    A = StandardParams(2, 6, 3, 1, 2)
    T = HomTarget(n=3, u=1, d_prime=1, e_pp=0, epsilon_exp=3)
    sols = sqm.sigma1_solutions(A, T)
    full = sqm.coset_monomial_squaring(A, T, sols[0])
    assert full.table[0] == 0 and full.table[1] == sols[0]
    # scalar-generator equivariance, read inside the big field
    f6 = get_field(2, 6)
    omega_big = f6.exp(9)  # Omega for u = 1
    for x in f6.elements():
        lhs = full.table[f6.mul(x, f6.exp(3))]
        assert lhs == f6.mul(full.table[x], omega_big)
    with pytest.raises(ValueError):
        sqm.coset_monomial_squaring(A, T, 0)
    coeffs = sqm.coset_polynomial(full, A, T)
    assert all(i in (3, 24, 45) for i, c in enumerate(coeffs) if c)


def test_coset_monomial_matches_singer_on_scalar_group():
    pred = sqm.singer_squaring(6, 3, "b", l=0, scalar=3)
    emb = get_embedding(2, 3, 6)
    rebuilt = sqm.coset_monomial_squaring(pred.a_params, pred.target, emb.embed(3))
    assert sqm.project_to_subfield(rebuilt, 3).table == pred.squaring.table


def test_gammal1_equivalence():
    so = sqm.sigma_omega()
    wit = sqm.gammal1_equivalent(so, so)
    assert wit == ((0, 0), (0, 0))
    # the squared-coefficient variant: explicit witness known
    f6 = get_field(2, 6)
    emb = get_embedding(2, 3, 6)
    w2 = f6.pow(f6.omega, 2)
    table = tuple(
        emb.project(f6.add(f6.mul(w2, f6.pow(x, 3)), f6.mul(f6.pow(w2, 8), f6.pow(x, 24))))
        for x in f6.elements()
    )
    so2 = sqm.Squaring(6, 3, table)
    wit = sqm.gammal1_equivalent(so, so2)
    assert wit is not None
    assert sqm.apply_semilinear_pair(so, *wit).table == so2.table
    # the known closed-form witness: target Frobenius after inverse domain Frobenius
    assert sqm.apply_semilinear_pair(so, (5, 0), (1, 0)).table == so2.table
    # not equivalent to the standard squaring
    x9 = sqm.singer_squaring(6, 3, "b").squaring
    assert sqm.gammal1_equivalent(so, x9) is None


def test_gl_equivalence():
    so = sqm.sigma_omega()
    t, u = sqm.gl_equivalent(so, so)
    assert t == mat_identity(6) and u == mat_identity(3)
    # planted witnesses are recovered
    rng = random.Random(17)
    sq = cube_on_f8()
    for _ in range(5):
        while True:
            t_rows = tuple(rng.randrange(1, 8) for _ in range(3))
            if is_invertible(t_rows):
                break
        while True:
            u_rows = tuple(rng.randrange(1, 8) for _ in range(3))
            if is_invertible(u_rows):
                break
        planted = sqm.transform_gl(sq, t_rows, u_rows)
        wit = sqm.gl_equivalent(sq, planted)
        assert wit is not None
        assert sqm.transform_gl(sq, *wit).table == planted.table
    x9 = sqm.singer_squaring(6, 3, "b").squaring
    assert sqm.gl_equivalent(so, x9) is None


def test_gl_budget():
    so = sqm.sigma_omega()
    x9 = sqm.singer_squaring(6, 3, "b").squaring
    with pytest.raises(sqm.SearchBudgetExceeded):
        sqm.gl_equivalent(so, x9, budget=3)


def test_equivalent_squarings_isomorphic_groups():
    # equal invariant fingerprints across random equivalent pairs
    from orbit3.group import from_squaring, invariant_profile

    rng = random.Random(23)
    sq = cube_on_f8()
    base = invariant_profile(from_squaring(sq))
    for _ in range(3):
        while True:
            t_rows = tuple(rng.randrange(1, 8) for _ in range(3))
            if is_invertible(t_rows):
                break
        moved = sqm.transform_gl(sq, t_rows, mat_identity(3))
        assert invariant_profile(from_squaring(moved)) == base


def test_serialization_round_trip():
    pred = sqm.sigma_omega_predatum()
    data = pred.to_dict()
    assert sqm.Predatum.from_dict(data) == pred
    sq = pred.squaring
    assert sqm.Squaring.from_dict(sq.to_dict()) == sq

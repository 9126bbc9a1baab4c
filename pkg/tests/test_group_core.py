"""Group laws: worked examples against independent oracles, axiom runs,
chart transport, serialization, and input validation."""

import numpy as np
import pytest

from ordgroups import (
    Additive,
    Ec,
    GCd,
    InputError,
    KCd,
    Product,
    SampleConfig,
    SemidirectRR,
    SUT3,
    Tk,
    check_group_axioms,
    commutator,
    conjugate,
    extension_from_cocycle,
    heis_cocycle,
    heis_module,
    heis_to_sut3,
    heisenberg,
    invert,
    law_from_descriptor,
    multiply,
    one_param_through,
    sut3_to_heis,
)

RNG = np.random.default_rng(7)


# --- independent oracles ---------------------------------------------------


def sut3_matrix(x, y, z):
    return np.array([[1.0, x, z], [0.0, 1.0, y], [0.0, 0.0, 1.0]])


def sut3_from_matrix(m):
    return np.array([m[0, 1], m[1, 2], m[0, 2]])


def sd_matrix(c, x, y):
    # (x, y) acts on the line as t -> e^{c y} t + x
    return np.array([[np.exp(c * y), x], [0.0, 1.0]])


def sd_from_matrix(c, m):
    return np.array([m[0, 1], np.log(m[0, 0]) / c])


def test_sut3_law_matches_matrix_multiplication():
    law = SUT3()
    for _ in range(200):
        a = RNG.uniform(-3, 3, 3)
        b = RNG.uniform(-3, 3, 3)
        expected = sut3_from_matrix(sut3_matrix(*a) @ sut3_matrix(*b))
        assert np.allclose(multiply(law, a, b), expected, atol=1e-12)


def test_semidirect_law_matches_matrix_representation():
    for c in (1.0, -2.0):
        law = SemidirectRR(c)
        for _ in range(200):
            a = RNG.uniform(-3, 3, 2)
            b = RNG.uniform(-3, 3, 2)
            expected = sd_from_matrix(c, sd_matrix(c, *a) @ sd_matrix(c, *b))
            assert np.allclose(multiply(law, a, b), expected, atol=1e-12)


# --- multiply --------------------------------------------------------------


def test_multiply_ec_half_worked_example():
    # oracle: SUT3 matrices composed with the chart change z -> z - xy/2
    a_s, b_s = heis_to_sut3([1, 2, 3]), heis_to_sut3([4, 5, 6])
    expected = sut3_to_heis(sut3_from_matrix(sut3_matrix(*a_s) @ sut3_matrix(*b_s)))
    got = multiply(heisenberg(), [1, 2, 3], [4, 5, 6])
    assert np.allclose(got, expected, atol=1e-12)
    assert np.allclose(got, [5.0, 7.0, 7.5], atol=1e-12)


def test_multiply_identity_is_all_zeros():
    assert np.array_equal(multiply(Additive(3), [1, 2, 3], [0, 0, 0]), [1, 2, 3])


def test_multiply_semidirect_worked_example():
    got = multiply(SemidirectRR(1.0), [0, 1], [1, 0])
    assert np.allclose(got, [np.e, 1.0], atol=1e-12)


def test_multiply_rejects_dimension_mismatch_and_nonfinite():
    with pytest.raises(InputError):
        multiply(Additive(2), [1, 2, 3], [0, 0])
    with pytest.raises(InputError):
        multiply(Additive(2), [np.inf, 0], [0, 0])
    with pytest.raises(InputError):
        multiply(Additive(2), [np.nan, 0], [0, 0])


# --- invert ----------------------------------------------------------------


def test_invert_semidirect_examples():
    assert np.allclose(invert(SemidirectRR(1.0), [1, 0]), [-1, 0])
    assert np.allclose(invert(SemidirectRR(1.0), [np.e, 1]), [-1, -1], atol=1e-12)


def test_invert_ec_is_negation_for_every_parameter():
    for c in (0.0, 0.5, -3.0):
        a = RNG.uniform(-3, 3, 3)
        assert np.array_equal(invert(Ec(c), a), -a)


@pytest.mark.parametrize(
    "law",
    [
        Additive(2),
        SemidirectRR(-2.0),
        Ec(3.0),
        SUT3(),
        GCd(2.0, -1.0),
        KCd(-1.0, 2.0),
        Tk(-2.0),
        Product(SemidirectRR(1.0), Additive(1)),
    ],
)
def test_closed_form_inverses_cancel(law):
    e = law.identity()
    for _ in range(100):
        a = RNG.uniform(-3, 3, law.dim)
        assert np.allclose(multiply(law, a, invert(law, a)), e, atol=1e-10)
        assert np.allclose(multiply(law, invert(law, a), a), e, atol=1e-10)


# --- conjugate / commutator ------------------------------------------------


def test_conjugate_kcd_closed_form_worked_example():
    got = conjugate(KCd(2.0, 3.0), [1, 0, 0], [0, 1, 1])
    assert np.allclose(got, [0.0, np.exp(2), np.exp(3)], atol=1e-12)


def test_conjugate_kcd_closed_form_on_samples():
    c, d = -1.5, 0.75
    law = KCd(c, d)
    for _ in range(300):
        g = RNG.uniform(-3, 3, 3)
        h = np.array([0.0, *RNG.uniform(-3, 3, 2)])
        expected = [0.0, np.exp(c * g[0]) * h[1], np.exp(d * g[0]) * h[2]]
        assert np.allclose(conjugate(law, g, h), expected, atol=1e-9)


def test_conjugate_abelian_fixes_everything():
    g, h = RNG.uniform(-3, 3, 2), RNG.uniform(-3, 3, 2)
    assert np.allclose(conjugate(Additive(2), g, h), h)


def test_conjugate_semidirect_matches_matrix_oracle():
    g, h = np.array([0.0, 1.0]), np.array([1.0, 0.0])
    m = sd_matrix(1, *g) @ sd_matrix(1, *h) @ np.linalg.inv(sd_matrix(1, *g))
    assert np.allclose(conjugate(SemidirectRR(1.0), g, h), sd_from_matrix(1, m))
    assert np.allclose(conjugate(SemidirectRR(1.0), g, h), [np.e, 0.0])


def test_commutator_central_extension_sign():
    g, h = [1, 0, 0], [0, 1, 0]
    assert np.allclose(commutator(Ec(1.0), g, h), [0, 0, 2])
    assert np.allclose(commutator(Ec(-1.0), g, h), [0, 0, -2])
    assert np.allclose(commutator(Additive(3), RNG.uniform(-3, 3, 3), RNG.uniform(-3, 3, 3)), 0)


def test_commutator_identity_in_central_family_is_exact():
    # (a, b, *) against (0, k, *) lands on the center with value 2cak
    for c in (0.5, -2.0):
        law = Ec(c)
        for _ in range(200):
            a, k = RNG.uniform(0.1, 3, 2)
            g = np.array([a, RNG.uniform(-3, 3), RNG.uniform(-3, 3)])
            h = np.array([0.0, k, RNG.uniform(-3, 3)])
            got = commutator(law, g, h)
            assert np.allclose(got, [0, 0, 2 * c * a * k], atol=1e-12)


def test_center_of_central_extension_commutes_exactly():
    law = Ec(2.0)
    for _ in range(100):
        z = np.array([0.0, 0.0, RNG.uniform(-3, 3)])
        g = RNG.uniform(-3, 3, 3)
        assert np.array_equal(multiply(law, z, g), multiply(law, g, z))


# --- axiom checker ----------------------------------------------------------


def test_axiom_checker_passes_nonsplit_family():
    rep = check_group_axioms(Tk(1.0), SampleConfig(seed=3, count=1000, box=3.0))
    assert rep.passed
    assert rep.associativity <= 1e-9


def test_axiom_checker_additive_is_exact():
    rep = check_group_axioms(Additive(3), SampleConfig(seed=3, count=500))
    assert rep.passed
    # identity and inverse are exact; float addition itself reassociates
    # within one ulp, so associativity is only machine-exact
    assert rep.associativity <= 1e-15
    assert rep.identity == 0.0
    assert rep.inverse == 0.0


def test_axiom_checker_on_cocycle_built_law():
    law = extension_from_cocycle(heis_module(), heis_cocycle(0.5))
    rep = check_group_axioms(law, SampleConfig(seed=4, count=500))
    assert rep.passed


def test_axiom_checker_reports_overflow_instead_of_raising():
    rep = check_group_axioms(GCd(2.0, 2.0), SampleConfig(seed=5, count=200, box=500.0))
    assert rep.overflow
    assert not rep.passed


def test_axiom_checker_flags_a_broken_law():
    class Broken(Additive):
        def mul(self, a, b):
            return a + b + 0.5

    rep = check_group_axioms(Broken(2), SampleConfig(seed=6, count=100))
    assert not rep.passed


# --- chart transport ---------------------------------------------------------


def test_chart_change_worked_examples():
    assert np.allclose(sut3_to_heis([2, 3, 4]), [2, 3, 1])
    z = RNG.uniform(-3, 3)
    assert np.allclose(sut3_to_heis([0, 0, z]), [0, 0, z])


def test_chart_change_round_trip_and_homomorphism():
    sut, heis = SUT3(), heisenberg()
    a = RNG.uniform(-3, 3, (1000, 3))
    b = RNG.uniform(-3, 3, (1000, 3))
    assert np.allclose(heis_to_sut3(sut3_to_heis(a)), a, atol=1e-12)
    lhs = sut3_to_heis(sut.mul(a, b))
    rhs = heis.mul(sut3_to_heis(a), sut3_to_heis(b))
    assert np.allclose(lhs, rhs, atol=1e-9)


def test_chart_change_needs_three_coordinates():
    with pytest.raises(InputError):
        sut3_to_heis([1.0, 2.0])


# --- one-parameter subgroups -------------------------------------------------


def test_one_param_subgroup_through_element():
    law = KCd(1.0, 2.0)
    g = np.array([1.2, -0.7, 2.1])
    assert np.allclose(one_param_through(law, g, np.array(1.0)), g, atol=1e-12)
    assert np.allclose(one_param_through(law, g, np.array(0.0)), [0, 0, 0])


def test_one_param_subgroup_zero_acting_branch():
    law = KCd(1.0, 2.0)
    g = np.array([0.0, 1.5, -2.0])
    w = np.array(0.25)
    assert np.allclose(one_param_through(law, g, w), [0.0, 0.375, -0.5])


def test_one_param_subgroup_needs_k_chart():
    with pytest.raises(InputError):
        one_param_through(Ec(1.0), [1, 2, 3], np.array(0.5))  # type: ignore[arg-type]


# --- serialization -----------------------------------------------------------


@pytest.mark.parametrize(
    "law",
    [
        Additive(3),
        SemidirectRR(-2.0),
        Ec(0.5),
        SUT3(),
        GCd(1.0, -2.0),
        KCd(0.0, 2.0),
        Tk(-1.0),
        Product(SemidirectRR(1.0), Additive(1)),
    ],
)
def test_law_descriptor_round_trip(law):
    desc = law.descriptor()
    rebuilt = law_from_descriptor(desc)
    assert rebuilt.descriptor() == desc
    a = RNG.uniform(-2, 2, law.dim)
    b = RNG.uniform(-2, 2, law.dim)
    assert np.array_equal(law.mul(a, b), rebuilt.mul(a, b))


def test_from_cocycle_descriptor_round_trip():
    desc = {"family": "from_cocycle", "params": {"cocycle": "heis", "c": 0.5}}
    law = law_from_descriptor(desc)
    out = law.descriptor()
    assert out["family"] == "from_cocycle"
    assert out["params"]["cocycle"] == "heis"
    assert out["params"]["c"] == pytest.approx(0.5)


def test_unknown_family_rejected():
    with pytest.raises(InputError):
        law_from_descriptor({"family": "octonion"})

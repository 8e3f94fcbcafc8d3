import math

import numpy as np
import pytest

import misc
import radii
from radii import RealPolynomial


def test_quintic_at_zero():

    q = radii.quintic_coeffs(0.0)

    assert q.coefficients == (-1.0, -3.0, -8.0, 4.0, 9.0, -1.0)
    assert np.array_equal(np.array(q.coefficients), np.polymul([-1.0, 0.0, 1.0], [1.0, 3.0, 9.0, -1.0]))


def test_quintic_degenerates_at_one_half():

    q = radii.quintic_coeffs(0.5)

    assert q.coefficients[:3] == (0.0, 0.0, 0.0)
    assert q.coefficients[3:] == (3.0, 6.0, -1.0)
    assert q.degree == 2


def test_quintic_range():

    with pytest.raises(misc.ParameterError):
        radii.quintic_coeffs(1.0)


@pytest.mark.parametrize("alpha", [0.0, 0.1, 0.25, 0.5, 0.8, 0.99])
def test_quintic_is_log_derivative_numerator(alpha):

    q = np.array(radii.quintic_coeffs(alpha).coefficients)
    n = np.array(radii.lambda_log_derivative_numerator(alpha).coefficients)

    assert np.allclose(q, -n, atol=1e-12)


def test_log_derivative_numerator_at_zero():

    n = radii.lambda_log_derivative_numerator(0.0)
    r = np.linspace(0.05, 0.95, 7)

    assert np.allclose(n(r), -(1 - r**2) * (r**3 + 3 * r**2 + 9 * r - 1))


def test_smallest_positive_root():

    assert radii.smallest_positive_root([1.0, 3.0, 9.0, -1.0]) == pytest.approx(0.10715, abs=1e-5)
    assert radii.smallest_positive_root([1.0, -0.5]) == pytest.approx(0.5, abs=1e-10)
    assert radii.smallest_positive_root([3.0, 6.0, -1.0]) == pytest.approx((-3 + 2 * math.sqrt(3)) / 3, abs=1e-10)


def test_smallest_root_among_several():

    # (r - 0.2)(r - 0.5)(r - 0.7)
    p = np.poly([0.7, 0.5, 0.2])

    assert radii.smallest_positive_root(RealPolynomial(tuple(p))) == pytest.approx(0.2, abs=1e-10)


def test_root_at_endpoint_is_skipped():

    assert radii.smallest_positive_root(radii.quintic_coeffs(0.0)) == pytest.approx(0.10715, abs=1e-5)


def test_no_root():

    with pytest.raises(misc.NoRootError):
        radii.smallest_positive_root([1.0, 0.0, 1.0])

    with pytest.raises(misc.NoRootError):
        radii.smallest_positive_root([2.0])


def test_sturm_counts():

    chain = radii.sturm_chain(np.poly([0.2, 0.5, 0.7, 1.5]))

    assert radii.count_roots(chain, 0.0, 1.0) == 3
    assert radii.count_roots(chain, 0.0, 0.3) == 1
    assert radii.count_roots(chain, 1.0, 2.0) == 1


def test_close_to_starlike_radius():

    assert radii.closed_form_radius("close_to_starlike", 0.5).closed_form == 1.0 / 3.0
    assert radii.closed_form_radius("close_to_starlike", 0.0).closed_form == pytest.approx(2 - math.sqrt(3), abs=1e-12)

    for d in (-1e-6, 1e-6):
        assert radii.closed_form_radius("close_to_starlike", 0.5 + d).closed_form == pytest.approx(1 / 3, abs=1e-4)


def test_order_alpha_radius():

    assert radii.closed_form_radius("order_alpha", 0.5).closed_form == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_q_product_limits(alpha):

    cst = radii.closed_form_radius("close_to_starlike", alpha).closed_form

    assert radii.closed_form_radius("q_product", alpha, 0.0).closed_form == 1.0
    assert radii.closed_form_radius("q_product_order0", alpha, 0.0).closed_form == 1.0
    assert radii.closed_form_radius("q_product", alpha, 1.0).closed_form == pytest.approx(cst, abs=1e-10)
    assert radii.closed_form_radius("q_product_order0", alpha, 1.0).closed_form == pytest.approx(cst, abs=1e-10)


def test_q_product_special_values():

    assert radii.closed_form_radius("q_product", 0.5, 0.25).closed_form == 1.0 / 1.5

    lam = 0.8
    assert radii.closed_form_radius("q_product_order0", 1.0 / (2 * lam), lam).closed_form == 1.0 / (2 * lam + 1)

    for lam in (0.1, 0.5, 0.9):
        a = radii.closed_form_radius("q_product", 0.0, lam).closed_form
        b = radii.closed_form_radius("q_product_order0", 0.0, lam).closed_form
        assert a == pytest.approx(1 + lam - math.sqrt(lam**2 + 2 * lam), abs=1e-10)
        assert a == pytest.approx(b, abs=1e-10)


@pytest.mark.parametrize("kind", radii.RADIUS_KINDS)
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 0.9])
def test_back_substitution(kind, alpha):

    lam = 0.35 if kind.startswith("q_") else None
    rep = radii.closed_form_radius(kind, alpha, lam)

    assert 0.0 < rep.closed_form <= 1.0
    assert abs(radii.defining_polynomial(kind, alpha, lam)(rep.closed_form)) < 1e-9


def test_q_product_decreases_in_lambda():

    for alpha in (0.0, 0.4, 0.8):
        rho = [radii.closed_form_radius("q_product", alpha, lam).closed_form for lam in np.linspace(0, 1, 21)]
        assert all(b < a for a, b in zip(rho[:-1], rho[1:]))


def test_parameter_errors():

    with pytest.raises(misc.ParameterError):
        radii.closed_form_radius("q_product", 0.2)

    with pytest.raises(misc.ParameterError):
        radii.closed_form_radius("q_product", 0.2, 1.5)

    with pytest.raises(misc.ParameterError):
        radii.closed_form_radius("close_to_starlike", -0.1)

    with pytest.raises(misc.ParameterError):
        radii.closed_form_radius("spiral", 0.2)


def test_argmax_lambda():

    r_star, lam_star = radii.argmax_lambda(0.0)

    assert r_star == pytest.approx(radii.smallest_positive_root([1.0, 3.0, 9.0, -1.0]), abs=1e-4)
    assert lam_star > 0.0


def test_argmax_matches_quintic_at_quarter():

    r_star, _ = radii.argmax_lambda(0.25)

    assert r_star == pytest.approx(radii.smallest_positive_root(radii.quintic_coeffs(0.25)), abs=1e-4)


def test_radius_report_check():

    rep = radii.radius_report("close_to_starlike", 0.0, check=True)

    assert rep.closed_form == pytest.approx(0.267949, abs=1e-6)
    assert rep.abs_gap < 1e-4
    assert set(rep.to_dict()) == {"kind", "alpha", "lambda_weight", "closed_form", "numeric_check", "abs_gap"}


@pytest.mark.parametrize("alpha", [0.25, 0.75])
def test_radius_report_cst_numeric(alpha):

    assert radii.radius_report("close_to_starlike", alpha, check=True).abs_gap < 1e-4


def test_radius_report_q_product_numeric():

    assert radii.radius_report("q_product", 0.25, 0.5, check=True).abs_gap < 1e-4
    assert radii.radius_report("q_product_order0", 0.25, 0.5, check=True).abs_gap < 1e-4
    assert radii.radius_report("order_alpha", 0.5, check=True).abs_gap < 1e-4


def test_omega_kind():

    rep = radii.radius_report("omega", 0.0, check=True)

    assert rep.closed_form == pytest.approx(0.10715, abs=1e-5)
    assert rep.abs_gap < 1e-4

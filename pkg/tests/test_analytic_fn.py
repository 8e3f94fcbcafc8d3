import cmath
import math

import pytest
import torch

import misc
import analytic_fn
from analytic_fn import Identity, KoebeAlpha, HalfPlaneP, OneMinusZ, Series, Dilatation


def test_koebe_alpha_zero_value():

    v, d = analytic_fn.eval_with_derivative(KoebeAlpha(0.0), 0.5)

    assert v.item() == pytest.approx(2.0)
    assert d.item() == pytest.approx(12.0)


def test_koebe_alpha_half_at_minus_one_half():

    v, _ = KoebeAlpha(0.5)(-0.5)

    assert v.item() == pytest.approx(-1.0 / 3.0)


def test_half_plane_p_at_origin():

    v, d = HalfPlaneP()(0.0)

    assert v.item() == pytest.approx(1.0)
    assert d.item() == pytest.approx(2.0)


def test_guard_band_rejects_boundary_points():

    with pytest.raises(misc.GuardBandError):
        KoebeAlpha(0.0)(0.9995)


@pytest.mark.parametrize("fn", [KoebeAlpha(0.3), HalfPlaneP(), OneMinusZ(), Series([1.0, 0.5, 0.25])])
def test_derivative_matches_difference_quotient(fn, disk_points):

    h       = 1e-6
    _, d    = fn(disk_points)
    fd      = (fn.forward(disk_points + h)[0] - fn.forward(disk_points - h)[0]) / (2.0 * h)

    assert torch.allclose(d, fd, rtol=1e-6, atol=1e-6)


def test_rotated_keeps_normalization():

    f = KoebeAlpha(0.25).rotated(0.7)
    z = torch.tensor([0.3 + 0.1j], dtype=misc.CDTYPE)

    assert f.phi_like
    v, _ = f(z)
    w, _ = KoebeAlpha(0.25)(z * cmath.exp(-0.7j))
    assert torch.allclose(v, cmath.exp(0.7j) * w)


def test_product_and_quotient_derivatives():

    f = KoebeAlpha(0.0) * HalfPlaneP()
    g = KoebeAlpha(0.0) / OneMinusZ()
    z = torch.tensor([0.2 - 0.3j], dtype=misc.CDTYPE)

    vf, df = f(z)
    vg, dg = g(z)
    h      = 1e-6

    assert torch.allclose(df, (f.forward(z + h)[0] - f.forward(z - h)[0]) / (2 * h), atol=1e-6)
    assert torch.allclose(dg, (g.forward(z + h)[0] - g.forward(z - h)[0]) / (2 * h), atol=1e-6)
    assert torch.allclose(vg, vf / HalfPlaneP().forward(z)[0] / OneMinusZ().forward(z)[0])


def test_radial_integral_of_polynomial():

    z = torch.tensor([0.5, 0.3j, 0.0], dtype=misc.CDTYPE)
    I = analytic_fn.radial_integral(lambda s: 3.0 * s**2, z)

    assert torch.allclose(I, z**3, atol=1e-14)


def test_radial_integral_examples():

    assert analytic_fn.radial_integral(lambda s: 1.0 / (1.0 - s), 0.5).item() == pytest.approx(math.log(2.0), abs=1e-12)
    assert analytic_fn.radial_integral(torch.ones_like, 0.7j).item() == pytest.approx(0.7j, abs=1e-14)


def test_radial_integral_is_additive(disk_points):

    f = lambda s: 1.0 / (1.0 - s)
    g = lambda s: s**2 + 3j

    lhs = analytic_fn.radial_integral(lambda s: f(s) - 2.0 * g(s), disk_points)
    rhs = analytic_fn.radial_integral(f, disk_points) - 2.0 * analytic_fn.radial_integral(g, disk_points)

    assert torch.allclose(lhs, rhs, atol=1e-9)


@pytest.mark.parametrize("t", [0.3, -0.7, 0.5j])
def test_radial_integral_of_constant_scales(t, disk_points):

    c = lambda s: torch.full_like(s, 0.5 - 0.25j)

    assert torch.allclose(analytic_fn.radial_integral(c, t * disk_points), t * analytic_fn.radial_integral(c, disk_points),
                          atol=1e-12)


def test_radial_integral_panel_limit():

    with pytest.raises(misc.QuadratureError):
        analytic_fn.radial_integral(lambda s: 1.0 / (1.0 - s), torch.tensor([0.999], dtype=misc.CDTYPE),
                                    tol=1e-15, max_panels=4)


def test_log_quotient_of_identity_is_zero(disk_points):

    assert analytic_fn.log_quotient_over_z(Identity(), disk_points).abs().max() < 1e-14


def test_log_quotient_of_koebe(disk_points):

    exact = -2.0 * torch.log(1.0 - disk_points)

    assert torch.allclose(analytic_fn.log_quotient_over_z(KoebeAlpha(0.0), disk_points), exact, atol=1e-9)


@pytest.mark.parametrize("entry", analytic_fn.catalog("phi"), ids=lambda e: e.name)
def test_exp_log_quotient_recovers_phi(entry, disk_points):

    phi = entry.build(0.25)
    v   = phi.forward(disk_points)[0]

    assert float(((torch.exp(analytic_fn.log_quotient_over_z(phi, disk_points)) * disk_points - v).abs() / v.abs()).max()) < 1e-8


def test_log_quotient_needs_normalized_phi():

    with pytest.raises(misc.ParameterError):
        analytic_fn.log_quotient_over_z(HalfPlaneP(), 0.5)


def test_beta_from_a0():

    assert analytic_fn.beta_from_a0(0.0) == 0.0
    assert analytic_fn.beta_from_a0(0.5) == pytest.approx(0.5 * 1.5 / 0.75)

    with pytest.raises(misc.DilatationError):
        analytic_fn.beta_from_a0(1.0)


@pytest.mark.parametrize("name", ["a=0", "a=z", "a=z/2", "a=z^2"])
def test_catalog_dilatations_validate(name):

    report = analytic_fn.validate_dilatation(analytic_fn.lookup(name, "a"))

    assert report.passed
    assert report.max_modulus < 1.0


def test_dilatation_with_nonzero_origin_is_flagged():

    a = analytic_fn.lookup("(1+z)/4", "a")

    assert not a.vanishes_at_origin()
    assert a.a0 == pytest.approx(0.25)


def test_dilatation_reaching_one_fails_validation():

    report = analytic_fn.validate_dilatation(Dilatation(Series([0.0, 2.0], name="2z")))

    assert not report.passed
    assert report.max_modulus > 1.0


def test_dilatation_matches():

    a = analytic_fn.lookup("a=z/2", "a")

    assert a.matches(a)
    assert a.matches(analytic_fn.lookup("a=z/2", "a"))
    assert not a.matches(analytic_fn.lookup("a=z", "a"))


def test_catalog_lists_families():

    names = [e.name for e in analytic_fn.catalog()]

    for expected in ("koebe_alpha", "half_plane_p", "one_minus_z", "a=z"):
        assert expected in names

    assert all(e.family == "p" for e in analytic_fn.catalog("p"))


def test_lookup_unknown_name():

    with pytest.raises(misc.ParameterError):
        analytic_fn.lookup("nope", "phi")


def test_sample_grid_shape():

    z = analytic_fn.sample_grid(8, 16)

    assert z.shape == (8, 16)
    assert float(z.abs().max()) == pytest.approx(1.0 - misc.GUARD)
    assert math.isclose(float(z.abs().min()), (1.0 - misc.GUARD) / 8)

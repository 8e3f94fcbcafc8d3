'''
BSD 3-Clause License

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the conditions of the BSD 3-Clause
License are met. See README.md.
'''
'''
logharm

A toolkit for constructing starlike logharmonic mappings of order alpha from
analytic data and checking their geometric properties numerically.

The verification suite. Every check measures a gap, compares it with a tolerance
and reports both. run_suite() runs all checks or the ones matching a filter.
'''

import json
import math
import logging

import numpy as np
import torch

import misc
import analytic_fn
import logharmonic_core as core
import geometry
import radii

logger = logging.getLogger(__name__)

ALPHAS          = (0.0, 0.25, 0.5, 0.75)
VALID_DILS      = ("a=0", "a=z", "a=z/2", "a=z^2")

# *******************************************************************************************************************
class CheckResult(object):

    def __init__(self, name, tags, measured, tolerance, passed, detail=""):

        self.name       = name
        self.tags       = tuple(tags)
        self.measured   = float(measured)
        self.tolerance  = float(tolerance)
        self.passed     = bool(passed)
        self.detail     = detail

    def to_dict(self):

        return {"name": self.name, "tags": list(self.tags), "measured": misc.to_json_number(self.measured),
                "tolerance": misc.to_json_number(self.tolerance), "passed": self.passed, "detail": self.detail}

class SuiteReport(object):

    def __init__(self, seed, tol_scale):

        assert tol_scale >= 0.0, "tol_scale should be non-negative"

        self.seed       = seed
        self.tol_scale  = tol_scale
        self.results    = []

    @property
    def passed(self):

        return len(self.results) > 0 and all(r.passed for r in self.results)

    def to_dict(self):

        return {"seed": self.seed, "tol_scale": misc.to_json_number(self.tol_scale), "passed": self.passed,
                "results": [r.to_dict() for r in self.results]}

# *******************************************************************************************************************
_CHECKS = []

def check(name, *tags):
    r'''
        Register a check. The function takes the seed and returns (measured gap, tolerance, detail).
    '''
    def wrap(fn):
        _CHECKS.append((name, tuple(tags), fn))
        return fn

    return wrap

def checks():

    return [(name, tags) for name, tags, _ in _CHECKS]

# *******************************************************************************************************************
def catalog_maps(alpha):
    r'''
        (name, map, order) for every catalog construction at this alpha. order is the alpha of
        ST_Lh(alpha) membership, or None for close-to-starlike and P_Lh maps.
    '''
    out = []

    for a_name in VALID_DILS:
        a = analytic_fn.lookup(a_name, "a")
        for e in analytic_fn.catalog("phi"):
            phi     = e.build(alpha)
            order   = alpha if e.uses_alpha else 0.0
            out.append(("{}|{}".format(e.name, a_name), core.from_representation(phi, a), order))

    a = core.identity_dilatation()
    f = core.from_representation(analytic_fn.KoebeAlpha(alpha), a)

    for e in analytic_fn.catalog("p"):
        out.append(("koebe_alpha*{}|a=z".format(e.name), core.close_to_starlike(f, e.build()), None))

    out.append(("R[half_plane_p]|a=z", core.p_map(analytic_fn.HalfPlaneP(), a), None))
    out.append(("Q[0.5]|a=0", core.q_extremal(alpha, 0.5), None))

    return out

def _rel(x, y):

    return float(((x - y).abs() / y.abs()).max())

# *******************************************************************************************************************
# analytic_fn
# *******************************************************************************************************************
@check("dilatation_catalog", "analytic_fn", "dilatation")
def _dilatation_catalog(seed):

    bad = 0

    for name in VALID_DILS:
        if not analytic_fn.validate_dilatation(analytic_fn.lookup(name, "a")).passed:
            bad += 1

    try:
        core.from_representation(analytic_fn.Identity(), analytic_fn.lookup("a=(1+z)/4", "a"))
        bad += 1
    except misc.DilatationError:
        pass

    return float(bad), 0.0, "catalog dilatations valid, a(0) != 0 rejected"

@check("derivative_sweep", "analytic_fn", "derivative")
def _derivative_sweep(seed):

    z   = misc.disk_points(100, r_max=0.9, seed=seed)
    h   = 1e-5
    gap = 0.0

    for e in analytic_fn.catalog():
        fn      = e.build(0.25)
        fn      = fn.inner if e.family == "a" else fn
        _, d    = fn(z)
        fd      = (fn.forward(z + h)[0] - fn.forward(z - h)[0]) / (2.0 * h)
        gap     = max(gap, float(((fd - d).abs() / d.abs().clamp(min=1.0)).max()))

    return gap, 1e-6, "central difference vs exact derivative, every catalog function"

@check("log_quotient_exp", "analytic_fn", "log_quotient")
def _log_quotient_exp(seed):

    z   = misc.disk_points(100, r_max=0.9, r_min=0.01, seed=seed)
    gap = 0.0

    for alpha in ALPHAS:
        for e in analytic_fn.catalog("phi"):
            phi = e.build(alpha)
            gap = max(gap, _rel(torch.exp(analytic_fn.log_quotient_over_z(phi, z)) * z, phi.forward(z)[0]))

    return gap, 1e-8, "exp(log(phi/z)) z vs phi(z)"

@check("radial_integral_linearity", "analytic_fn", "quadrature")
def _radial_linearity(seed):

    z   = misc.disk_points(100, r_max=0.9, seed=seed)
    f   = lambda s: 1.0 / (1.0 - s)
    g   = lambda s: s**2 + 3j

    both    = analytic_fn.radial_integral(lambda s: f(s) - 2.0 * g(s), z)
    gap     = float((both - analytic_fn.radial_integral(f, z) + 2.0 * analytic_fn.radial_integral(g, z)).abs().max())

    c       = lambda s: torch.full_like(s, 0.5 - 0.25j)
    for t in (0.3, -0.7, 0.5j):
        gap = max(gap, float((analytic_fn.radial_integral(c, t * z) - t * analytic_fn.radial_integral(c, z)).abs().max()))

    gap = max(gap, abs(analytic_fn.radial_integral(f, 0.5).item() - math.log(2.0)))
    gap = max(gap, abs(analytic_fn.radial_integral(torch.ones_like, 0.7j).item() - 0.7j))

    return gap, 1e-9, "additive in the integrand, homogeneous for a constant integrand"

# *******************************************************************************************************************
# logharmonic_core
# *******************************************************************************************************************
@check("representation_closed_form", "logharmonic_core", "representation")
def _representation(seed):

    z   = misc.disk_points(100, r_max=0.9, seed=seed)
    gap = 0.0

    for alpha in ALPHAS:
        f   = core.distortion_extremal(alpha)
        gap = max(gap, _rel(core.eval_map(f, z), core.distortion_extremal_closed_form(z, alpha)))

    return gap, 1e-8, "relative gap to the closed-form extremal, 100 points x 4 alphas"

@check("pde_residual", "logharmonic_core", "pde")
def _pde(seed):

    z       = misc.disk_points(50, r_max=0.8, r_min=0.05, seed=seed)
    worst   = 0.0
    jac_min = math.inf

    for alpha in (0.0, 0.5):
        for name, f, _ in catalog_maps(alpha):
            worst   = max(worst, float(core.pde_residual(f, z, h=1e-5).max()))
            jac_min = min(jac_min, float(core.jacobian(f, z).min()))

    if jac_min <= 0.0:
        return math.inf, 1e-5, "Jacobian not positive (min {:.3g})".format(jac_min)

    return worst, 1e-5, "max residual with step 1e-5, min Jacobian {:.3g}".format(jac_min)

@check("density_identity", "logharmonic_core", "sigma")
def _density_identity(seed):

    z   = misc.disk_points(100, r_max=0.8, r_min=0.05, seed=seed)
    gap = 0.0

    for alpha in (0.0, 0.5):
        for name, f, _ in catalog_maps(alpha):
            fz, fzb = core.wirtinger_fd(f, z, h=1e-5)
            s_fd    = ((z * fz - torch.conj_physical(z) * fzb) / f(z)).real
            gap     = max(gap, float((s_fd - geometry.sigma(f, z)).abs().max()))

    return gap, 1e-5, "finite-difference density vs exact density"

@check("star_phase", "logharmonic_core", "sigma")
def _star_phase(seed):

    z   = misc.disk_points(100, r_max=0.9, r_min=0.05, seed=seed)
    gap = 0.0

    for name, f, _ in catalog_maps(0.25):
        v   = f(z)
        gap = max(gap, float((v / v.abs() - core.star_phase(f, z)).abs().max()))

    return gap, 1e-9, "f/|f| vs the analytic phase"

# *******************************************************************************************************************
# geometry
# *******************************************************************************************************************
@check("sigma_additivity", "geometry", "sigma")
def _additivity(seed):

    a   = analytic_fn.lookup("a=z/2", "a")
    f1  = core.from_representation(analytic_fn.KoebeAlpha(0.3), a)
    f2  = core.k_kernel(a)
    f3  = core.close_to_starlike(core.from_representation(analytic_fn.Identity(), a), analytic_fn.HalfPlaneP())
    Q   = core.weighted_product([(f1, 0.6), (f2, -0.2), (f3, 0.6)])
    z   = misc.disk_points(100, r_max=0.9, r_min=0.01, seed=seed)

    s   = 0.6 * geometry.sigma(f1, z) - 0.2 * geometry.sigma(f2, z) + 0.6 * geometry.sigma(f3, z)

    return float((geometry.sigma(Q, z) - s).abs().max()), 1e-10, "sigma of a product vs weighted sum"

@check("order_shift", "geometry", "order")
def _order_shift(seed):

    a       = core.identity_dilatation()
    worst   = 0.0

    for alpha in (0.25, 0.5, 0.75):
        f   = core.from_representation(analytic_fn.KoebeAlpha(0.0), a)
        up  = core.raise_order(f, alpha)
        fa  = core.from_representation(analytic_fn.KoebeAlpha(alpha), a)
        dn  = core.lower_order(fa, alpha)
        for r in (0.3, 0.6, 0.9):
            worst = max(worst, alpha - geometry.min_sigma_on_circle(up, r, n=128)[0])
            worst = max(worst, 0.0 - geometry.min_sigma_on_circle(dn, r, n=128)[0])

    return max(worst, 0.0), 1e-12, "raise_order lands above alpha, lower_order above 0"

@check("cst_bound", "geometry", "close_to_starlike")
def _cst_bound(seed):

    gap = 0.0

    for alpha in ALPHAS:
        F = core.cst_extremal(alpha)
        for r in (0.1, 0.2, 0.3):
            m, _ = geometry.min_sigma_on_circle(F, r)
            gap = max(gap, abs(m - geometry.cst_lower_bound(r, alpha)))

    return gap, 1e-6, "extremal attains the close-to-starlike estimate"

@check("rotation", "geometry", "order")
def _rotation(seed):

    rng     = np.random.default_rng(seed)
    f       = core.close_to_starlike(core.from_representation(analytic_fn.KoebeAlpha(0.25), analytic_fn.lookup("a=z^2", "a")),
                                     analytic_fn.OneMinusZ())
    base    = geometry.starlike_order(f, 0.4)
    gap     = 0.0

    for theta in rng.uniform(-math.pi, math.pi, size=10):
        gap = max(gap, abs(geometry.starlike_order(core.rotate(f, theta), 0.4) - base))

    return gap, 1e-8, "starlike_order under 10 rotations"

@check("distortion", "geometry", "distortion")
def _distortion(seed):

    worst = 0.0

    for alpha in ALPHAS:
        for name, f, order in catalog_maps(alpha):
            if order is None:
                continue
            for r in np.arange(1, 10) / 10.0:
                lo, hi  = geometry.distortion_bounds(float(r), order)
                _, z    = misc.circle_points(float(r), 64)
                m       = f(z).abs()
                worst   = max(worst, (lo - float(m.min())) / lo, (float(m.max()) - hi) / hi)

    sharp = 0.0
    for alpha in (0.0, 0.5):
        f = core.distortion_extremal(alpha)
        for r in (0.3, 0.6):
            lo, hi  = geometry.distortion_bounds(r, alpha)
            sharp   = max(sharp, abs(abs(f(-r).item()) - lo) / lo, abs(abs(f(r).item()) - hi) / hi)

    return max(worst, 0.0, sharp), 1e-8, "relative bound violation, sharpness gap {:.3g}".format(sharp)

@check("lambda_conservative", "geometry", "omega")
def _lambda_lower_bound(seed):

    worst = -math.inf

    for alpha in (0.0, 0.5):
        r0 = radii.smallest_positive_root(radii.quintic_coeffs(alpha))
        for name, f, order in catalog_maps(alpha):
            if order != alpha:
                continue
            for r in (0.5 * r0, r0):
                p, _    = geometry.psi_min_on_circle(f, r, n=128)
                worst   = max(worst, geometry.lambda_alpha(r, alpha) - p)

    return max(worst, 0.0), 1e-8, "lambda_alpha(r) - min Psi on |z| = r"

@check("starlike_wrt_point", "geometry", "omega")
def _wrt_point(seed):

    r0      = radii.smallest_positive_root(radii.quintic_coeffs(0.0))
    rho     = 0.99 * geometry.lambda_alpha(r0, 0.0)
    f       = core.distortion_extremal(0.0)
    fails   = 0

    for t in misc.circle_angles(64).tolist():
        if not geometry.starlike_wrt_point(f, r0, rho * complex(math.cos(t), math.sin(t)), n=256):
            fails += 1

    if geometry.starlike_wrt_point(core.close_to_starlike(core.from_representation(analytic_fn.Identity(), core.zero_dilatation()),
                                                           analytic_fn.OneMinusZ()), 0.9, 0.0):
        fails += 1

    return float(fails), 0.0, "64 centers inside Omega_r, plus z(1-z) at r=0.9"

@check("z_one_minus_z", "geometry", "close_to_starlike")
def _z1mz(seed):

    f = core.close_to_starlike(core.from_representation(analytic_fn.Identity(), core.zero_dilatation()), analytic_fn.OneMinusZ())
    c = geometry.image_curve(f, 0.7, 720)

    if abs(c.winding_number() - 1.0) > 1e-6 or c.max_backturn() <= 0.0:
        return math.inf, 1e-5, "image of |z|=0.7 should wind once and turn back"

    return abs(geometry.numeric_radius(f) - 0.5), 1e-5, "numeric radius of z(1-z) vs 1/2"

@check("cst_radius", "geometry", "radii", "close_to_starlike")
def _cst_radius(seed):

    gap = 0.0

    for alpha in ALPHAS:
        gap = max(gap, radii.radius_report("close_to_starlike", alpha, check=True).abs_gap)

    return gap, 1e-4, "numeric radius of the extremal vs closed form"

@check("q_radius", "geometry", "radii", "q_product")
def _q_radius(seed):

    gap = 0.0

    for kind in ("q_product", "q_product_order0", "order_alpha"):
        for alpha, lam in ((0.0, 0.5), (0.25, 0.25), (0.75, 0.8)):
            gap = max(gap, radii.radius_report(kind, alpha, lam if kind.startswith("q_") else None, check=True).abs_gap)

    return gap, 1e-4, "numeric radius of the extremal vs closed form"

# *******************************************************************************************************************
# radii
# *******************************************************************************************************************
@check("cubic_root", "radii", "omega")
def _cubic(seed):

    return abs(radii.smallest_positive_root([1.0, 3.0, 9.0, -1.0]) - 0.10715), 1e-5, "root of r^3+3r^2+9r-1"

@check("omega_erratum", "radii", "geometry", "omega")
def _erratum(seed):

    alt     = geometry.lambda_alt_cor24(0.10715)
    gap     = abs(alt - geometry.PUBLISHED_LAMBDA_ORDER0)
    split   = abs(alt - geometry.lambda_alpha(0.10715, 0.0))
    report  = geometry.omega_report(0.0)

    if split <= 4e-2 or not report.discrepancy_flag:
        return math.inf, 1e-5, "the two closed forms should disagree and the report should flag it"

    return gap, 1e-5, "alternate form vs published value; forms differ by {:.4g}".format(split)

@check("quintic_factorization", "radii", "omega")
def _quintic(seed):

    q       = np.array(radii.quintic_coeffs(0.0).coefficients)
    shown   = np.array([-1.0, -3.0, -8.0, 4.0, 9.0, -1.0])
    prod    = np.polymul([-1.0, 0.0, 1.0], [1.0, 3.0, 9.0, -1.0])

    if not (np.array_equal(q, shown) and np.array_equal(q, prod)):
        return math.inf, 1e-4, "quintic at alpha=0 does not factor"

    r_star, _ = radii.argmax_lambda(0.0)

    return abs(r_star - radii.smallest_positive_root([1.0, 3.0, 9.0, -1.0])), 1e-4, "argmax of lambda_0 vs cubic root"

@check("quintic_numerator", "radii", "omega")
def _numerator(seed):

    gap = 0.0

    for alpha in np.linspace(0.0, 0.95, 20):
        q   = np.array(radii.quintic_coeffs(alpha).coefficients)
        n   = np.array(radii.lambda_log_derivative_numerator(alpha).coefficients)
        gap = max(gap, float(np.abs(q + n).max()))

    return gap, 1e-12, "quintic vs minus the log-derivative numerator of lambda_alpha"

@check("argmax_quintic", "radii", "omega")
def _argmax(seed):

    gap = 0.0

    for alpha in (0.25, 0.5, 0.9):
        gap = max(gap, geometry.omega_report(alpha).argmax_gap)

    return gap, 1e-4, "argmax of lambda_alpha vs quintic root"

@check("cst_continuity", "radii", "close_to_starlike")
def _continuity(seed):

    gap = max(abs(radii.closed_form_radius("close_to_starlike", 0.5 + d).closed_form - 1.0 / 3.0) for d in (-1e-6, 1e-6))

    return gap, 1e-4, "close_to_starlike radius near alpha=1/2"

@check("back_substitution", "radii")
def _back_substitution(seed):

    gap = 0.0

    for kind in radii.RADIUS_KINDS:
        for alpha in (0.0, 0.2, 0.5, 0.7, 0.95):
            for lam in (0.1, 0.5, 0.9, 1.0):
                rep = radii.closed_form_radius(kind, alpha, lam if kind.startswith("q_") else None)
                p   = radii.defining_polynomial(kind, alpha, rep.lambda_weight)
                gap = max(gap, abs(p(rep.closed_form)))

    return gap, 1e-9, "defining polynomial at the returned radius"

@check("q_limits", "radii", "q_product")
def _q_limits(seed):

    gap = 0.0

    for alpha in ALPHAS:
        for kind in ("q_product", "q_product_order0"):
            if radii.closed_form_radius(kind, alpha, 0.0).closed_form != 1.0:
                return math.inf, 1e-10, "lambda=0 should give exactly 1"
        cst = radii.closed_form_radius("close_to_starlike", alpha).closed_form
        gap = max(gap, abs(radii.closed_form_radius("q_product", alpha, 1.0).closed_form - cst))
        gap = max(gap, abs(radii.closed_form_radius("q_product_order0", alpha, 1.0).closed_form
                           - radii.closed_form_radius("q_product", alpha, 1.0).closed_form))

    for lam in (0.1, 0.5, 0.9):
        gap = max(gap, abs(radii.closed_form_radius("q_product", 0.0, lam).closed_form
                           - radii.closed_form_radius("q_product_order0", 0.0, lam).closed_form))
        if radii.closed_form_radius("q_product", 0.5, lam).closed_form != 1.0 / (2.0 * lam + 1.0):
            return math.inf, 1e-10, "alpha=1/2 should give 1/(2 lambda + 1)"

    for lam in (0.625, 0.75, 0.8):
        if radii.closed_form_radius("q_product_order0", 1.0 / (2.0 * lam), lam).closed_form != 1.0 / (2.0 * lam + 1.0):
            return math.inf, 1e-10, "alpha=1/(2 lambda) should give 1/(2 lambda + 1)"

    return gap, 1e-10, "limit and coincidence gaps"

@check("q_monotone", "radii", "q_product")
def _q_monotone(seed):

    worst = 0.0

    for alpha in ALPHAS:
        rho     = [radii.closed_form_radius("q_product", alpha, lam).closed_form for lam in np.linspace(0.0, 1.0, 21)]
        worst   = max(worst, max(b - a for a, b in zip(rho[:-1], rho[1:])))

    return max(worst, 0.0), 0.0, "q_product radius should decrease in lambda"

# *******************************************************************************************************************
# cli
# *******************************************************************************************************************
CLI_RUNS = (
    ("catalog", "--format", "json"),
    ("eval", "--phi", "koebe_alpha", "--alpha", "0.25", "--dil", "a=z", "--p", "half_plane_p", "--z", "0.3+0.2j"),
    ("radius", "--kind", "q_product", "--alpha", "0.25", "--lambda", "0.5"),
    ("omega", "--alpha", "0"),
    ("curve", "--dil", "a=z/2", "--r", "0.6", "--n", "16", "--format", "json"),
)

def _cli_text(argv):

    import cli

    text, _ = cli.run_command(cli.parse_args(list(argv)))

    return text

@check("cli_deterministic", "cli")
def _cli_deterministic(seed):

    differ = sum(1 for argv in CLI_RUNS if _cli_text(argv) != _cli_text(argv))

    return float(differ), 0.0, "commands whose output changed between two runs"

@check("cli_json_round_trip", "cli")
def _cli_round_trip(seed):

    import cli

    differ = 0

    for argv in CLI_RUNS:
        text = _cli_text(argv)
        if cli.dumps(json.loads(text)) != text:
            differ += 1

    return float(differ), 0.0, "JSON outputs that change when parsed and dumped again"

# *******************************************************************************************************************
def _matches(name, tags, pattern):

    return pattern is None or pattern == name or pattern in tags or pattern in name

def run_suite(filter=None, seed=misc.SEED, tol_scale=1.0):
    r'''
        Run every registered check (or those whose name or tags match filter).

        Parameters:
            filter:     A check name, a module name or a tag such as "distortion".
            seed:       Seed for sampled points.
            tol_scale:  Multiplies every tolerance. 0 makes any nonzero gap fail.
        Return:
            A SuiteReport. Exceptions inside a check are reported as failures.
    '''
    assert tol_scale >= 0.0, "tol_scale should be non-negative"

    report = SuiteReport(seed=seed, tol_scale=tol_scale)

    for name, tags, fn in _CHECKS:
        if not _matches(name, tags, filter):
            continue

        try:
            measured, tol, detail = fn(seed)
            tol     = tol * tol_scale
            passed  = bool(measured <= tol)
        except misc.LogharmError as e:
            measured, tol, passed, detail = math.inf, 0.0, False, "{}: {}".format(type(e).__name__, e)

        logger.info("%-28s %s  gap %.3g  tol %.3g", name, "PASS" if passed else "FAIL", measured, tol)

        report.results.append(CheckResult(name=name, tags=tags, measured=float(measured), tolerance=float(tol),
                                          passed=passed, detail=detail))

    if not report.results:
        logger.warning("no check matches filter '%s'", filter)

    return report

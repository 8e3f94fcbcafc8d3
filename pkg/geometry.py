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

Geometric functionals of a logharmonic map: the starlikeness density sigma, order
and radius estimates, distortion bounds, the Psi functional and the Omega_r radius.
'''

import math
import logging

import numpy as np
import torch

import misc
import logharmonic_core
from logharmonic_core import LogharmonicMap

logger = logging.getLogger(__name__)

# Value printed for lambda_0(r0) alongside the cubic r^3 + 3r^2 + 9r - 1 = 0.
PUBLISHED_LAMBDA_ORDER0     = 8.7462e-2
DISCREPANCY_TOL             = 1e-4
ARGMAX_GAP_TOL              = 1e-4

# *******************************************************************************************************************
def sigma(f, z, guard=misc.GUARD):
    r'''
        Starlikeness density Re[(z f_z - zbar f_zbar)/f], the angular speed of arg f(r e^{i theta}).

        Computed from the exact Wirtinger ratios. At z = 0 the limit is the total star weight.

        Input:
            f:  A LogharmonicMap.
            z:  Point(s) with |z| <= 1 - guard. Python numbers give a python float back.
        Return:
            Real tensor shaped like z, or a float.
    '''
    assert isinstance(f, LogharmonicMap), "f should be a LogharmonicMap"

    zt          = misc.check_guard(z, guard)
    origin      = zt == 0
    z_eval      = torch.where(origin, torch.full_like(zt, 0.5), zt)

    zfz, zbfzb  = logharmonic_core.wirtinger_analytic(f, z_eval, guard=guard)
    s           = (zfz - zbfzb).real
    s           = torch.where(origin, torch.full_like(s, sum(x.weight for x in f.star_factors)), s)

    return misc.scalar_or_tensor(s, z)

# *******************************************************************************************************************
def min_sigma_on_circle(f, r, n=misc.CIRCLE_GRID, guard=misc.GUARD, tol=1e-10):
    r'''
        Minimum of sigma on |z| = r.

        A uniform scan of n angles picks the best cell, then golden-section search refines inside
        the two neighbouring cells. Ties on the grid go to the smaller theta.

        Return:
            (min value, argmin theta in (-pi, pi])
    '''
    assert n >= 64, "circle grid should have at least 64 points"
    assert 0.0 < r <= 1.0 - guard + 1e-15, "radius should be in (0, 1-guard]"

    theta, z    = misc.circle_points(r, n)
    s           = sigma(f, z, guard=guard)
    k           = int(torch.argmin(s))
    best_t      = float(theta[k])
    best_s      = float(s[k])

    h           = 2.0 * math.pi / n
    fn          = lambda t: sigma(f, complex(r * math.cos(t), r * math.sin(t)), guard=guard)
    t, v        = misc.golden_section(fn, best_t - h, best_t + h, tol=tol)

    if v < best_s:
        best_t, best_s = t, v

    # back into (-pi, pi]
    best_t -= 2.0 * math.pi * math.ceil((best_t - math.pi) / (2.0 * math.pi))

    return best_s, best_t

# *******************************************************************************************************************
def starlike_order(f, r, radii=32, n=misc.CIRCLE_GRID, guard=misc.GUARD):
    r'''
        inf of sigma over |z| <= r, sampled on radii geometric circles from r/1000 to r.
        This is the largest alpha for which f is starlike of order alpha on the closed disk.
    '''
    assert radii > 1

    rs = np.geomspace(r / 1000.0, r, radii)

    return min(min_sigma_on_circle(f, float(x), n=n, guard=guard)[0] for x in rs)

# *******************************************************************************************************************
def numeric_radius(f, threshold=0.0, guard=misc.GUARD, tol=misc.RADIUS_TOL, n=misc.CIRCLE_GRID, scan=64):
    r'''
        First radius where the circle minimum of sigma drops to threshold.

        A uniform scan of radii brackets the crossing and bisection refines it to tol. The scan
        step is (1 - guard - 1e-3)/(scan - 1), about 0.016 by default: a dip below threshold that
        starts and ends between two scan radii is not seen. Raise scan for such maps.

        Parameters:
            threshold:  Order to test against, in [0, 1).
            scan:       Number of radii checked before bisection starts, at least 2.
        Return:
            The crossing radius within tol, or 1 - guard when no crossing is seen.
    '''
    if not 0.0 <= threshold < 1.0:
        raise misc.ParameterError("threshold should be in [0, 1)")
    if scan < 2:
        raise misc.ParameterError("scan should be at least 2")

    r_min   = 1e-3
    r_max   = 1.0 - guard
    g       = lambda r: min_sigma_on_circle(f, r, n=n, guard=guard)[0] - threshold

    if g(r_min) <= 0.0:
        raise misc.DegenerateInputError("sigma is already below {:g} at r={:g}".format(threshold, r_min))

    rs      = np.linspace(r_min, r_max, scan)
    lo      = r_min
    hi      = None

    for r in rs[1:]:
        if g(float(r)) <= 0.0:
            hi = float(r)
            break
        lo = float(r)

    if hi is None:
        logger.debug("numeric_radius: no crossing of %g up to r=%g", threshold, r_max)
        return r_max

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid

    return 0.5 * (lo + hi)

# *******************************************************************************************************************
def distortion_bounds(r, alpha):
    r'''
        Sharp bounds on |f(z)| at |z| = r for f in ST_Lh(alpha):

            r/(1+r)^{2 alpha} exp(-4(1-alpha) r/(1+r)) <= |f| <= r/(1-r)^{2 alpha} exp(4(1-alpha) r/(1-r))
    '''
    assert 0.0 <= r < 1.0, "r should be in [0, 1)"
    assert 0.0 <= alpha < 1.0, "alpha should be in [0, 1)"

    lower = r / (1.0 + r)**(2.0 * alpha) * math.exp(-4.0 * (1.0 - alpha) * r / (1.0 + r))
    upper = r / (1.0 - r)**(2.0 * alpha) * math.exp(4.0 * (1.0 - alpha) * r / (1.0 - r))

    return lower, upper

# *******************************************************************************************************************
def psi(f, z, guard=misc.GUARD):
    r'''
        Psi = |f| sigma / |z f_z/f - zbar f_zbar/f|. Infinite where the phase is stationary.
    '''
    assert isinstance(f, LogharmonicMap)

    zt          = misc.check_guard(z, guard)
    value       = logharmonic_core.eval_map(f, zt, guard=guard)
    zfz, zbfzb  = logharmonic_core.wirtinger_analytic(f, zt, guard=guard)
    d           = zfz - zbfzb
    den         = d.abs()
    out         = value.abs() * d.real / torch.where(den == 0, torch.ones_like(den), den)
    out         = torch.where(den == 0, torch.full_like(out, math.inf), out)

    return misc.scalar_or_tensor(out, z)

# *******************************************************************************************************************
def psi_min_on_circle(f, r, n=misc.CIRCLE_GRID, guard=misc.GUARD):

    theta, z    = misc.circle_points(r, n)
    p           = psi(f, z, guard=guard)
    k           = int(torch.argmin(p))

    return float(p[k]), float(theta[k])

# *******************************************************************************************************************
def lambda_alpha(r, alpha):
    r'''
        The Omega_r radius function

            r/(1+r)^{2 alpha} exp(-4(1-alpha) r/(1+r)) (alpha + (1-alpha)(1-r)/(1+r))
            / [ (alpha + (1-alpha)(1+r)/(1-r)) (1+r)/(1-r) ]

        Accepts a float or a real tensor of radii.
    '''
    assert 0.0 <= alpha < 1.0, "alpha should be in [0, 1)"

    x       = misc.as_real(r)
    lower   = x / (1.0 + x)**(2.0 * alpha) * torch.exp(-4.0 * (1.0 - alpha) * x / (1.0 + x))
    num     = alpha + (1.0 - alpha) * (1.0 - x) / (1.0 + x)
    den     = (alpha + (1.0 - alpha) * (1.0 + x) / (1.0 - x)) * (1.0 + x) / (1.0 - x)

    return misc.scalar_or_tensor(lower * num / den, r)

# *******************************************************************************************************************
def lambda_alt_cor24(r):
    r'''
        r exp(-4r(1-r)^3/(1+r)^4), the right-hand closed form printed for alpha = 0.
        It is not equal to lambda_alpha(r, 0); both are kept so the gap can be reported.
    '''
    x = misc.as_real(r)

    return misc.scalar_or_tensor(x * torch.exp(-4.0 * x * (1.0 - x)**3 / (1.0 + x)**4), r)

# *******************************************************************************************************************
class OmegaReport(object):
    r'''
        Omega_r radius for one alpha. paper_reported and lambda_alt_expression are only set for alpha = 0.
    '''

    def __init__(self, alpha, r0, lambda_thm23, lambda_alt_expression, paper_reported, discrepancy_flag,
                 r_star, lambda_star, argmax_gap):

        assert 0.0 < r0 < 1.0, "r0 should be in (0, 1)"
        assert lambda_thm23 >= 0.0, "lambda should be non-negative"

        self.alpha                  = alpha
        self.r0                     = r0
        self.lambda_thm23           = lambda_thm23
        self.lambda_alt_expression  = lambda_alt_expression
        self.paper_reported         = paper_reported
        self.discrepancy_flag       = bool(discrepancy_flag)
        self.r_star                 = r_star
        self.lambda_star            = lambda_star
        self.argmax_gap             = argmax_gap

    def to_dict(self):

        return {k: misc.to_json_number(v) for k, v in self.__dict__.items()}

# *******************************************************************************************************************
def omega_report(alpha):
    r'''
        r0 is the smallest positive root of the radius quintic; lambda_thm23 = lambda_alpha(r0, alpha).
        For alpha = 0 the printed value is compared with both closed forms and a discrepancy is
        flagged, never corrected.
    '''
    import radii

    if not 0.0 <= alpha < 1.0:
        raise misc.ParameterError("alpha should be in [0, 1)")

    r0              = radii.smallest_positive_root(radii.quintic_coeffs(alpha))
    lam             = lambda_alpha(r0, alpha)
    r_star, l_star  = radii.argmax_lambda(alpha)

    alt             = None
    published       = None
    flag            = False

    if alpha == 0.0:
        alt         = lambda_alt_cor24(r0)
        published   = PUBLISHED_LAMBDA_ORDER0
        flag        = abs(lam - published) > DISCREPANCY_TOL
        if flag:
            logger.warning("lambda_0(r0) = %.6g differs from the published %.6g; the alternate form gives %.6g",
                           lam, published, alt)

    gap = abs(r_star - r0)
    if gap > ARGMAX_GAP_TOL:
        logger.warning("argmax of lambda_%g at %.8g is %.3g away from the quintic root %.8g", alpha, r_star, gap, r0)

    return OmegaReport(alpha=alpha, r0=r0, lambda_thm23=lam, lambda_alt_expression=alt, paper_reported=published,
                       discrepancy_flag=flag, r_star=r_star, lambda_star=l_star, argmax_gap=gap)

# *******************************************************************************************************************
def starlike_wrt_point(f, r, w0, n=misc.CIRCLE_GRID, guard=misc.GUARD):
    r'''
        True iff Re[(f(z) - w0)/(z f_z - zbar f_zbar)] > 0 at every grid point of |z| = r,
        that is the image of the circle turns positively around w0.
    '''
    assert isinstance(f, LogharmonicMap)
    assert 0.0 < r <= 1.0 - guard + 1e-15

    _, z        = misc.circle_points(r, n)
    value       = logharmonic_core.eval_map(f, z, guard=guard)
    zfz, zbfzb  = logharmonic_core.wirtinger_analytic(f, z, guard=guard)
    d           = value * (zfz - zbfzb)

    if bool((d == 0).any()):
        raise misc.DegenerateInputError("stationary phase on |z|={:g}".format(r))

    return bool((((value - complex(w0)) / d).real > 0.0).all())

# *******************************************************************************************************************
class ImageCurve(object):
    r'''
        Samples w = f(r e^{i theta}) of the image of a circle.

        Parameters:
            r:          Circle radius.
            theta:      Strictly increasing angles in (-pi, pi].
            w:          Complex image points, same length as theta.
            map_id:     Name of the map.
    '''

    def __init__(self, r, theta, w, map_id="f"):

        self.r      = float(r)
        self.theta  = np.asarray(theta, dtype=np.float64)
        self.w      = np.asarray(w, dtype=np.complex128)
        self.map_id = map_id

        assert self.theta.ndim == 1 and self.theta.shape == self.w.shape, "theta and w should be matching 1-d arrays"
        assert len(self.theta) >= 4, "an image curve needs at least 4 samples"
        assert np.all(np.diff(self.theta) > 0), "thetas should be strictly increasing"
        assert self.theta[0] > -math.pi and self.theta[-1] <= math.pi + 1e-12, "thetas should lie in (-pi, pi]"

    def __len__(self):

        return len(self.theta)

    @property
    def samples(self):

        return list(zip(self.theta.tolist(), self.w.tolist()))

    def _unwrapped_arg(self):

        return np.unwrap(np.angle(np.append(self.w, self.w[0])))

    def winding_number(self):
        r'''
            Total turn of arg w about 0 around the closed curve, in units of 2 pi.
        '''
        u = self._unwrapped_arg()

        return (u[-1] - u[0]) / (2.0 * math.pi)

    def max_backturn(self):
        r'''
            Largest backward excursion of the unwrapped argument. 0 for a curve starlike about 0.
        '''
        u = self._unwrapped_arg()

        return float(np.max(np.maximum.accumulate(u) - u))

# *******************************************************************************************************************
def image_curve(f, r, n=360, guard=misc.GUARD):

    assert isinstance(f, LogharmonicMap)
    assert n >= 4, "need at least 4 samples"
    assert 0.0 < r <= 1.0 - guard + 1e-15

    theta, z    = misc.circle_points(r, n)
    w           = logharmonic_core.eval_map(f, z, guard=guard)

    return ImageCurve(r=float(r), theta=theta.numpy(), w=w.numpy(), map_id=f.name)

# *******************************************************************************************************************
def cst_lower_bound(r, alpha):
    r'''
        ((1-2 alpha) r^2 + (2 alpha - 4) r + 1)/(1 - r^2), the lower estimate of sigma on |z| = r for
        close-to-starlike maps of order alpha. Attained at z = -r by the extremal.
    '''
    return ((1.0 - 2.0 * alpha) * r * r + (2.0 * alpha - 4.0) * r + 1.0) / (1.0 - r * r)

# *******************************************************************************************************************
def q_lower_bound(r, alpha, lam, order0=False):
    r'''
        lam * cst_lower_bound + (1 - lam)(beta + (1 - beta)(1 - r)/(1 + r)), beta = 0 if order0 else alpha.
    '''
    beta = 0.0 if order0 else alpha

    return lam * cst_lower_bound(r, alpha) + (1.0 - lam) * (beta + (1.0 - beta) * (1.0 - r) / (1.0 + r))

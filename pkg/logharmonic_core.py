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

Logharmonic mappings built from analytic data, their products and powers, and
their Wirtinger derivatives.
'''

import math
import logging

import torch

import misc
import analytic_fn
from analytic_fn import AnalyticFunction, Dilatation

logger = logging.getLogger(__name__)

# *******************************************************************************************************************
class StarFactor(object):
    r'''
        A phi-like analytic function raised to a real weight.
    '''

    def __init__(self, phi, weight):

        assert isinstance(phi, AnalyticFunction), "phi should be an AnalyticFunction"

        self.phi    = phi
        self.weight = float(weight)

class PFactor(object):
    r'''
        A p-like analytic function with Re p > 0, raised to a real weight.
    '''

    def __init__(self, p, weight):

        assert isinstance(p, AnalyticFunction), "p should be an AnalyticFunction"

        self.p      = p
        self.weight = float(weight)

# *******************************************************************************************************************
class LogharmonicMap(object):
    r'''
        A logharmonic mapping stored factor by factor in log space:

            f(z) = z exp( sum_i w_i [log(phi_i/z) + 2 Re I_i(z)] ) exp( sum_j v_j [Log p_j(z) + 2 Re J_j(z)] )

        with I_i = int_0^z a phi_i'/((1-a) phi_i) ds and J_j = int_0^z a p_j'/((1-a) p_j) ds, all
        factors sharing one dilatation a with a(0) = 0.

        log(phi_i/z) is the branch vanishing at 0 and Log p_j is principal (Re p_j > 0), so real
        powers never touch raw values. Star weights sum to 1, which keeps the single z factor
        unexponentiated. A map with no star factor (a pure P_Lh factor R) has no z factor and R(0) = 1.

        Maps are immutable. Evaluation is pure.
    '''

    def __init__(self, star_factors, p_factors, dilatation, name="f"):

        assert isinstance(dilatation, Dilatation), "dilatation should be a Dilatation"

        self.star_factors   = tuple(star_factors)
        self.p_factors      = tuple(p_factors)
        self.dilatation     = dilatation
        self.name           = name

        for s in self.star_factors:
            assert isinstance(s, StarFactor)
            assert s.phi.phi_like, "star factor {} is not normalized".format(s.phi.name)
            if not math.isfinite(s.weight):
                raise misc.WeightError("star weight must be finite")

        for p in self.p_factors:
            assert isinstance(p, PFactor)
            assert p.p.p_like, "p factor {} is not normalized".format(p.p.name)

        if self.star_factors:
            total = sum(s.weight for s in self.star_factors)
            if abs(total - 1.0) > misc.WEIGHT_TOL:
                raise misc.WeightError("star weights sum to {:.15g}, expected 1".format(total))

        if not dilatation.vanishes_at_origin():
            raise misc.DilatationError("dilatation must vanish at origin")

    # ---------------------------------------------------------------------------------------------------------------
    def score(self, z):
        r'''
            S(z) = sum_i w_i phi_i'/phi_i + sum_j v_j p_j'/p_j, unguarded.
        '''
        s = torch.zeros_like(z)

        for f in self.star_factors:
            s = s + f.weight * f.phi.log_derivative(z)

        for f in self.p_factors:
            s = s + f.weight * f.p.log_derivative(z)

        return s

    def t_integrand(self, s):
        r'''
            T'(s) = a/(1-a) S(s). Finite at s = 0 because a(0) = 0.
        '''
        a = self.dilatation.forward(s)

        return a / (1.0 - a) * self.score(s)

    def dilatation_is_zero(self):

        return isinstance(self.dilatation.inner, analytic_fn.Constant) and self.dilatation.inner.c == 0

    def __call__(self, z, guard=misc.GUARD):

        return eval_map(self, z, guard=guard)

    def __repr__(self):

        return "LogharmonicMap({}, {} star, {} p, {})".format(self.name, len(self.star_factors),
                                                              len(self.p_factors), self.dilatation.name)

# *******************************************************************************************************************
# *******************************************************************************************************************
def _check_dilatation(a):

    if not a.vanishes_at_origin():
        raise misc.DilatationError("dilatation must vanish at origin")

    report = analytic_fn.validate_dilatation(a)

    if not report.passed:
        raise misc.DilatationError("dilatation modulus reaches {:.6g} on the validation grid".format(report.max_modulus))

# *******************************************************************************************************************
def _check_p(p, a, guard=misc.GUARD):

    assert isinstance(p, AnalyticFunction)

    if not p.p_like:
        raise misc.PFactorError("{} is not normalized as p(0)=1".format(p.name))

    z   = analytic_fn.sample_grid(*a.validation_grid, guard=guard)
    re  = p.forward(z)[0].real

    if float(re.min()) <= 0.0:
        raise misc.PFactorError("Re {} <= 0 detected on the validation grid".format(p.name))

# *******************************************************************************************************************
def from_representation(phi, a, name=None):
    r'''
        f(z) = phi(z) exp 2 Re int_0^z a phi'/((1-a) phi) ds

        for phi in ST(alpha) and a dilatation with a(0) = 0. The result solves the logharmonic
        equation with dilatation a.
    '''
    assert isinstance(phi, AnalyticFunction), "phi should be an AnalyticFunction"
    assert isinstance(a, Dilatation), "a should be a Dilatation"

    if not phi.phi_like:
        raise misc.ParameterError("{} is not normalized as phi(0)=0, phi'(0)=1".format(phi.name))

    _check_dilatation(a)

    return LogharmonicMap([StarFactor(phi, 1.0)], [], a, name=name if name is not None else phi.name)

# *******************************************************************************************************************
def k_kernel(a):
    r'''
        K(z) = z exp 2 Re int_0^z a/((1-a) s) ds, a member of ST_Lh(0) with starlikeness density 1.
    '''
    return from_representation(analytic_fn.Identity(), a, name="K")

# *******************************************************************************************************************
def p_map(p, a, name=None):
    r'''
        R(z) = p(z) exp 2 Re int_0^z a p'/((1-a) p) ds, the P_Lh factor with R(0) = 1.
    '''
    _check_dilatation(a)
    _check_p(p, a)

    return LogharmonicMap([], [PFactor(p, 1.0)], a, name=name if name is not None else "R[{}]".format(p.name))

# *******************************************************************************************************************
def weighted_product(factors, name=None):
    r'''
        prod_k f_k^{w_k} for maps sharing one dilatation.

        The factor lists are concatenated with scaled weights, so the branch of every power is the
        one fixed by the representation.

        Input:
            factors:    Sequence of (LogharmonicMap, real weight).
    '''
    factors = list(factors)

    assert len(factors) > 0, "need at least one factor"

    a       = factors[0][0].dilatation
    stars   = []
    ps      = []

    for f, w in factors:
        assert isinstance(f, LogharmonicMap), "factors should be LogharmonicMap objects"
        if not a.matches(f.dilatation):
            raise misc.DilatationMismatchError("{} and {} do not share a dilatation".format(factors[0][0].name, f.name))
        stars   += [StarFactor(s.phi, w * s.weight) for s in f.star_factors]
        ps      += [PFactor(p.p, w * p.weight) for p in f.p_factors]

    if name is None:
        name = "*".join("{}^{:g}".format(f.name, w) for f, w in factors)

    return LogharmonicMap(stars, ps, a, name=name)

# *******************************************************************************************************************
def close_to_starlike(f, p, name=None):
    r'''
        F = f R with R the P_Lh factor built from p and the dilatation of f.
    '''
    assert isinstance(f, LogharmonicMap)

    if f.p_factors:
        raise misc.ParameterError("close_to_starlike expects a map with star factors only")

    _check_p(p, f.dilatation)

    if name is None:
        name = "{}*R[{}]".format(f.name, p.name)

    return LogharmonicMap(f.star_factors, [PFactor(p, 1.0)], f.dilatation, name=name)

# *******************************************************************************************************************
def rotate(f, theta):
    r'''
        z -> exp(i theta) f(exp(-i theta) z), realized by precomposing every factor and the dilatation.

        The outer phase rides on the star factors (their weights sum to 1), so a map without one
        cannot be rotated.
    '''
    assert isinstance(f, LogharmonicMap)

    if not f.star_factors:
        raise misc.ParameterError("rotate needs a map with star factors, {} has none".format(f.name))

    theta   = float(theta)
    stars   = [StarFactor(s.phi.rotated(theta), s.weight) for s in f.star_factors]
    ps      = [PFactor(p.p.rotated(theta, outer=1.0), p.weight) for p in f.p_factors]

    return LogharmonicMap(stars, ps, f.dilatation.rotated(theta), name="rot({},{:.6g})".format(f.name, theta))

# *******************************************************************************************************************
def lower_order(f, alpha):
    r'''
        f^{1/(1-alpha)} K^{-alpha/(1-alpha)}: takes f in ST_Lh(alpha) to ST_Lh(0).
    '''
    assert 0.0 <= alpha < 1.0

    K = k_kernel(f.dilatation)

    return weighted_product([(f, 1.0 / (1.0 - alpha)), (K, -alpha / (1.0 - alpha))])

# *******************************************************************************************************************
def raise_order(f, alpha):
    r'''
        f^{1-alpha} K^{alpha}: takes f in ST_Lh(0) to ST_Lh(alpha).
    '''
    assert 0.0 <= alpha < 1.0

    K = k_kernel(f.dilatation)

    return weighted_product([(f, 1.0 - alpha), (K, alpha)])

# *******************************************************************************************************************
def q_product(F, f_star, lam):
    r'''
        Q = F^lam f_star^{1-lam}
    '''
    assert 0.0 <= lam <= 1.0, "lambda should be in [0, 1]"

    return weighted_product([(F, lam), (f_star, 1.0 - lam)], name="Q[{:g}]".format(lam))

# *******************************************************************************************************************
# *******************************************************************************************************************
def eval_map(f, z, guard=misc.GUARD, tol=misc.QUAD_TOL):
    r'''
        Value of the map at z. eval_map(f, 0) = 0 whenever f has star factors.
    '''
    assert isinstance(f, LogharmonicMap)

    z       = misc.check_guard(z, guard)
    log_f   = torch.zeros_like(z)

    for s in f.star_factors:
        if not isinstance(s.phi, analytic_fn.Identity):
            log_f = log_f + s.weight * analytic_fn.log_quotient_over_z(s.phi, z, tol=tol, guard=guard)

    for p in f.p_factors:
        log_f = log_f + p.weight * torch.log(p.p.forward(z)[0])

    if not f.dilatation_is_zero():
        log_f = log_f + 2.0 * analytic_fn.radial_integral(f.t_integrand, z, tol=tol).real

    value = torch.exp(log_f)

    if f.star_factors:
        value = z * value

    return value

# *******************************************************************************************************************
def star_phase(f, z, guard=misc.GUARD, tol=misc.QUAD_TOL):
    r'''
        Unit phase of z prod phi_i^{w_i} prod p_j^{v_j}. exp(2 Re T) is a positive real factor, so
        this must equal f/|f|.
    '''
    z       = misc.check_guard(z, guard)
    log_f   = torch.zeros_like(z)

    for s in f.star_factors:
        log_f = log_f + s.weight * analytic_fn.log_quotient_over_z(s.phi, z, tol=tol, guard=guard)

    for p in f.p_factors:
        log_f = log_f + p.weight * torch.log(p.p.forward(z)[0])

    phase = torch.exp(1j * log_f.imag)

    if f.star_factors:
        phase = phase * z / z.abs()

    return phase

# *******************************************************************************************************************
def wirtinger_analytic(f, z, guard=misc.GUARD):
    r'''
        Exact logarithmic Wirtinger derivatives from the representation:

            z f_z / f          = sum_i w_i z phi_i'/phi_i + sum_j v_j z p_j'/p_j + z T'(z)
            zbar f_zbar / f    = conj(z T'(z))

        with T' = a/(1-a) (sum_i w_i phi_i'/phi_i + sum_j v_j p_j'/p_j).

        Return:
            (zfz_over_f, zbarfzbar_over_f)
    '''
    z = misc.check_guard(z, guard)

    if bool((z == 0).any()):
        raise misc.ParameterError("Wirtinger ratios are undefined at z = 0")

    zs      = z * f.score(z)
    a       = f.dilatation.forward(z)
    zt      = a / (1.0 - a) * zs

    return zs + zt, torch.conj_physical(zt)

# *******************************************************************************************************************
def wirtinger_fd(f, z, h=1e-5, guard=misc.GUARD):
    r'''
        Central differences in x and y, independent of the representation:

            f_z    = (f_x - i f_y) / 2
            f_zbar = (f_x + i f_y) / 2

        All four stencil points are evaluated in one call so quadrature shares a panel count.

        Input:
            f:  Any callable taking a complex tensor of points.
    '''
    assert callable(f)
    assert h > 0.0, "step should be positive"

    z = misc.as_complex(z)

    if bool((z.abs() + h > 1.0 - guard + 1e-15).any()):
        raise misc.GuardBandError("step too large for guard band")

    pts     = torch.stack([z + h, z - h, z + 1j * h, z - 1j * h])
    vals    = f(pts)
    fx      = (vals[0] - vals[1]) / (2.0 * h)
    fy      = (vals[2] - vals[3]) / (2.0 * h)

    return (fx - 1j * fy) / 2.0, (fx + 1j * fy) / 2.0

# *******************************************************************************************************************
def pde_residual(f, z, h=1e-5, dilatation=None, guard=misc.GUARD):
    r'''
        |conj(f_zbar)/conj(f) - a f_z/f| with finite-difference derivatives.

        dilatation overrides the map's own a, which gives a negative control.
    '''
    z = misc.check_guard(z, guard)

    if bool((z == 0).any()):
        raise misc.ParameterError("residual is undefined at z = 0")

    a       = dilatation if dilatation is not None else f.dilatation
    value   = f(z)

    if bool((value == 0).any()):
        raise misc.ParameterError("residual is undefined at a zero of f")

    fz, fzb = wirtinger_fd(f, z, h=h, guard=guard)

    return (torch.conj_physical(fzb) / torch.conj_physical(value) - a.forward(z) * fz / value).abs()

# *******************************************************************************************************************
def jacobian(f, z, guard=misc.GUARD):
    r'''
        |f_z|^2 (1 - |a|^2), positive for sense-preserving maps.
    '''
    z = misc.check_guard(z, guard)

    zfz, _  = wirtinger_analytic(f, z, guard=guard)
    fz      = eval_map(f, z, guard=guard) * zfz / z
    a       = f.dilatation.forward(z)

    return fz.abs()**2 * (1.0 - a.abs()**2)

# *******************************************************************************************************************
# *******************************************************************************************************************
def identity_dilatation():

    return Dilatation(analytic_fn.Identity(), name="a=z")

def zero_dilatation():

    return Dilatation(analytic_fn.Constant(0.0), name="a=0")

# *******************************************************************************************************************
def distortion_extremal(alpha, a=None):
    r'''
        The map attaining both distortion bounds: phi = z/(1-z)^(2-2 alpha), a(z) = z.
    '''
    if a is None:
        a = identity_dilatation()

    return from_representation(analytic_fn.KoebeAlpha(alpha), a, name="f0[{:g}]".format(alpha))

# *******************************************************************************************************************
def distortion_extremal_closed_form(z, alpha):
    r'''
        f0(z) = z (1 - zbar)/(1 - z) (1 - zbar)^(-2 alpha) exp((1 - alpha) Re 4z/(1-z))
    '''
    z       = misc.as_complex(z)
    zb      = torch.conj_physical(z)

    return z * (1.0 - zb) / (1.0 - z) * torch.exp(-2.0 * alpha * torch.log(1.0 - zb)) \
             * torch.exp((1.0 - alpha) * (4.0 * z / (1.0 - z)).real)

# *******************************************************************************************************************
def cst_extremal(alpha, a=None):
    r'''
        z/(1-z)^(2-2 alpha) (1+z)/(1-z) with a = 0, attaining the close-to-starlike estimate at z = -r.
    '''
    if a is None:
        a = zero_dilatation()

    f = from_representation(analytic_fn.KoebeAlpha(alpha), a)

    return close_to_starlike(f, analytic_fn.HalfPlaneP(), name="F0[{:g}]".format(alpha))

# *******************************************************************************************************************
def q_extremal(alpha, lam, order0=False):
    r'''
        F^lam f*^{1-lam} with F the close-to-starlike extremal and f* = z/(1-z)^(2-2 beta),
        beta = 0 when order0 is set and alpha otherwise. Every factor has its minimal
        starlikeness density at z = -r.
    '''
    a       = zero_dilatation()
    F       = cst_extremal(alpha, a)
    f_star  = from_representation(analytic_fn.KoebeAlpha(0.0 if order0 else alpha), a)

    return q_product(F, f_star, lam)

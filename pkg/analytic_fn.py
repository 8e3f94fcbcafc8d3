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

Analytic functions on the unit disk with exact first derivatives, radial
quadrature and the branch of log(phi(z)/z) that vanishes at the origin.
'''

import cmath
import math
import logging
import functools

import numpy as np
import torch

import misc

logger = logging.getLogger(__name__)

# *******************************************************************************************************************
class AnalyticFunction(object):
    r'''
        Base class for the function catalog. A derived class implements forward(z) and returns
        the value and the exact first derivative at every point of the complex tensor z.

        Normalization flags:

            phi_like:   phi(0) = 0 and phi'(0) = 1
            p_like:     p(0) = 1

        Instances are immutable and can be evaluated from several threads at once.
    '''

    def __init__(self, name, phi_like=False, p_like=False):

        assert isinstance(name, str), "name should be a string"

        self.name       = name
        self.phi_like   = bool(phi_like)
        self.p_like     = bool(p_like)

    def forward(self, z):

        raise NotImplementedError

    def __call__(self, z, guard=misc.GUARD):
        r'''
            Input:
                z:      Point(s) inside the guarded disk |z| <= 1 - guard.
            Return:
                (value, derivative) as complex tensors shaped like z.
        '''
        z = misc.check_guard(z, guard)

        return self.forward(z)

    def value(self, z, guard=misc.GUARD):

        return self(z, guard)[0]

    def derivative(self, z, guard=misc.GUARD):

        return self(z, guard)[1]

    def log_derivative(self, z):
        r'''
            f'/f, unguarded. Used inside integrands where the caller already checked the path.
        '''
        v, d = self.forward(z)

        return d / v

    def rotated(self, theta, outer=None):
        r'''
            z -> outer * f(exp(-i theta) z). For phi-like functions the default outer factor is
            exp(i theta), which keeps the phi normalization; otherwise it is 1.
        '''
        factor = cmath.rect(1.0, -theta)

        if outer is None:
            outer = 1.0 / factor if self.phi_like else 1.0

        return Rotated(self, factor, outer)

    def __mul__(self, other):

        return Product(self, other)

    def __truediv__(self, other):

        return Quotient(self, other)

    def __repr__(self):

        return "AnalyticFunction({})".format(self.name)

# *******************************************************************************************************************
class Identity(AnalyticFunction):

    def __init__(self):

        super(Identity, self).__init__("identity", phi_like=True)

    def forward(self, z):

        return z, torch.ones_like(z)

# *******************************************************************************************************************
class Constant(AnalyticFunction):

    def __init__(self, c):

        self.c = complex(c)

        super(Constant, self).__init__("constant({:g})".format(self.c), p_like=(self.c == 1.0))

    def forward(self, z):

        return torch.full_like(z, self.c), torch.zeros_like(z)

# *******************************************************************************************************************
class ScaledIdentity(AnalyticFunction):

    def __init__(self, c):

        self.c = complex(c)

        super(ScaledIdentity, self).__init__("scaled_identity({:g})".format(self.c), phi_like=(self.c == 1.0))

    def forward(self, z):

        return self.c * z, torch.full_like(z, self.c)

# *******************************************************************************************************************
class KoebeAlpha(AnalyticFunction):
    r'''
        The extremal function of ST(alpha):

            k(z)  = z / (1 - z)^(2 - 2 alpha)
            k'(z) = (1 + (1 - 2 alpha) z) (1 - z)^(2 alpha - 3)

        1 - z has positive real part in the disk, so the principal power is analytic there.
    '''

    def __init__(self, alpha=0.0):

        assert 0.0 <= alpha < 1.0, "alpha should be in [0, 1)"

        self.alpha = float(alpha)

        super(KoebeAlpha, self).__init__("koebe_alpha({:g})".format(self.alpha), phi_like=True)

    def forward(self, z):

        a       = self.alpha
        log1mz  = torch.log(1.0 - z)
        value   = z * torch.exp(-(2.0 - 2.0 * a) * log1mz)
        deriv   = (1.0 + (1.0 - 2.0 * a) * z) * torch.exp((2.0 * a - 3.0) * log1mz)

        return value, deriv

# *******************************************************************************************************************
class HalfPlaneP(AnalyticFunction):
    r'''
        p(z) = (1 + z) / (1 - z), mapping the disk onto the right half plane.
    '''

    def __init__(self):

        super(HalfPlaneP, self).__init__("half_plane_p", p_like=True)

    def forward(self, z):

        one_m   = 1.0 - z

        return (1.0 + z) / one_m, 2.0 / (one_m * one_m)

# *******************************************************************************************************************
class OneMinusZ(AnalyticFunction):

    def __init__(self):

        super(OneMinusZ, self).__init__("one_minus_z", p_like=True)

    def forward(self, z):

        return 1.0 - z, torch.full_like(z, -1.0)

# *******************************************************************************************************************
class Series(AnalyticFunction):
    r'''
        Truncated power series sum_{k < N} c_k z^k, evaluated with Horner's rule.

        Parameters:
            coefficients:   c_0, c_1, ... in ascending order.
            length:         Truncation length N. Defaults to all coefficients.
    '''

    def __init__(self, coefficients, length=None, name=None):

        coefficients = [complex(c) for c in coefficients]

        if length is not None:
            assert isinstance(length, int) and length > 0, "truncation length should be a positive integer"
            coefficients = coefficients[:length]

        assert len(coefficients) > 0, "series needs at least one coefficient"

        self.coefficients = tuple(coefficients)

        c       = self.coefficients
        phi     = len(c) > 1 and c[0] == 0 and c[1] == 1
        p       = c[0] == 1

        if name is None:
            name = "series({})".format(len(c))

        super(Series, self).__init__(name, phi_like=phi, p_like=p)

    def forward(self, z):

        c       = self.coefficients
        value   = torch.zeros_like(z)
        deriv   = torch.zeros_like(z)

        for k in range(len(c) - 1, -1, -1):
            value = value * z + c[k]
            if k > 0:
                deriv = deriv * z + k * c[k]

        return value, deriv

# *******************************************************************************************************************
class Product(AnalyticFunction):

    def __init__(self, f, g):

        assert isinstance(f, AnalyticFunction) and isinstance(g, AnalyticFunction)

        self.f = f
        self.g = g

        phi = (f.phi_like and g.p_like) or (f.p_like and g.phi_like)

        super(Product, self).__init__("({}*{})".format(f.name, g.name), phi_like=phi, p_like=(f.p_like and g.p_like))

    def forward(self, z):

        fv, fd = self.f.forward(z)
        gv, gd = self.g.forward(z)

        return fv * gv, fd * gv + fv * gd

# *******************************************************************************************************************
class Quotient(AnalyticFunction):

    def __init__(self, f, g):

        assert isinstance(f, AnalyticFunction) and isinstance(g, AnalyticFunction)

        self.f = f
        self.g = g

        super(Quotient, self).__init__("({}/{})".format(f.name, g.name),
                                       phi_like=(f.phi_like and g.p_like), p_like=(f.p_like and g.p_like))

    def forward(self, z):

        fv, fd = self.f.forward(z)
        gv, gd = self.g.forward(z)

        return fv / gv, (fd * gv - fv * gd) / (gv * gv)

# *******************************************************************************************************************
class Rotated(AnalyticFunction):
    r'''
        z -> outer * f(factor * z) with |factor| = 1.
    '''

    def __init__(self, f, factor, outer=1.0):

        assert isinstance(f, AnalyticFunction)
        assert abs(abs(factor) - 1.0) < 1e-12, "rotation factor should have modulus 1"

        self.f          = f
        self.factor     = complex(factor)
        self.outer      = complex(outer)

        phi = f.phi_like and abs(self.outer * self.factor - 1.0) < 1e-14
        p   = f.p_like and self.outer == 1.0

        super(Rotated, self).__init__("rot({},{:.6g})".format(f.name, -cmath.phase(self.factor)), phi_like=phi, p_like=p)

    def forward(self, z):

        v, d = self.f.forward(self.factor * z)

        return self.outer * v, (self.outer * self.factor) * d

# *******************************************************************************************************************
# *******************************************************************************************************************
def eval_with_derivative(fn, z, guard=misc.GUARD):
    r'''
        (f(z), f'(z)) with the exact derivative of the catalog rule.
    '''
    assert isinstance(fn, AnalyticFunction), "fn should be an AnalyticFunction"

    return fn(z, guard)

# *******************************************************************************************************************
@functools.lru_cache(maxsize=8)
def _gauss_legendre(order):
    r'''
        Gauss-Legendre nodes and weights mapped to (0, 1). No endpoint nodes.
    '''
    x, w = np.polynomial.legendre.leggauss(order)

    return torch.from_numpy(0.5 * (x + 1.0)), torch.from_numpy(0.5 * w)

# *******************************************************************************************************************
def _composite_gauss(integrand, z, panels, order):

    x, w    = _gauss_legendre(order)
    k       = torch.arange(panels, dtype=misc.RDTYPE)
    t       = ((k[:, None] + x[None, :]) / panels).reshape(-1).to(misc.CDTYPE)
    wt      = (w[None, :].expand(panels, order) / panels).reshape(-1).to(misc.CDTYPE)

    chunk   = max(order, misc.QUAD_CHUNK // max(1, z.numel()))
    total   = torch.zeros_like(z)

    for start in range(0, t.numel(), chunk):
        s       = z[..., None] * t[start:start + chunk]
        total   = total + (integrand(s) * wt[start:start + chunk]).sum(dim=-1)

    return total * z

# *******************************************************************************************************************
def radial_integral(integrand, z, tol=misc.QUAD_TOL, order=misc.QUAD_ORDER, max_panels=misc.MAX_PANELS):
    r'''
        int_0^z integrand(s) ds along the segment {t z : t in [0, 1]}, that is
        int_0^1 integrand(t z) z dt, by composite Gauss-Legendre quadrature.

        The number of panels doubles until two successive results differ by less than tol at
        every point of z. All points share one panel count.

        Input:
            integrand:  Callable mapping a complex tensor s to a tensor of the same shape.
                        It must be analytic on the segment.
            z:          Endpoint(s), any shape.
        Return:
            Complex tensor shaped like z.
    '''
    assert callable(integrand), "integrand should be callable"
    assert tol > 0.0

    z       = misc.as_complex(z)

    if z.numel() == 0:
        return torch.zeros_like(z)

    origin  = z == 0
    z_eval  = torch.where(origin, torch.full_like(z, 0.5), z)

    panels  = 1
    prev    = _composite_gauss(integrand, z_eval, panels, order)

    while True:
        panels  *= 2
        if panels > max_panels:
            raise misc.QuadratureError("quadrature did not reach tol={:g} within {} panels of order {}".format(tol, max_panels, order))

        cur     = _composite_gauss(integrand, z_eval, panels, order)
        gap     = float((cur - prev).abs().max())

        if gap < tol:
            logger.debug("radial_integral converged with %d panels (gap %.3g)", panels, gap)
            return torch.where(origin, torch.zeros_like(cur), cur)

        prev    = cur

# *******************************************************************************************************************
def log_quotient_over_z(phi, z, tol=misc.QUAD_TOL, guard=misc.GUARD):
    r'''
        The branch of log(phi(z)/z) equal to 0 at the origin, computed as

            int_0^z (phi'(s)/phi(s) - 1/s) ds

        along the radial segment. The integrand is analytic on the disk, so the path is free.
    '''
    assert isinstance(phi, AnalyticFunction)

    if not phi.phi_like:
        raise misc.ParameterError("{} is not normalized as phi(0)=0, phi'(0)=1".format(phi.name))

    z = misc.check_guard(z, guard)

    return radial_integral(lambda s: phi.log_derivative(s) - 1.0 / s, z, tol=tol)

# *******************************************************************************************************************
def beta_from_a0(a0):
    r'''
        beta = conj(a0) (1 + a0) / (1 - |a0|^2). Depends only on a(0); Re(beta) > -1/2.
    '''
    a0 = complex(a0)

    if abs(a0) >= 1.0:
        raise misc.DilatationError("|a(0)| must be < 1")

    return a0.conjugate() * (1.0 + a0) / (1.0 - abs(a0)**2)

# *******************************************************************************************************************
# *******************************************************************************************************************
class Dilatation(object):
    r'''
        Second complex dilatation a of a logharmonic mapping: analytic with |a| < 1 on the disk.

        The modulus bound is checked by sampling, not proved.

        Parameters:
            inner:              The AnalyticFunction a.
            zero_at_origin:     Whether a(0) = 0 is claimed. Defaults to what a(0) says.
            validation_grid:    (radii count, angles count) of the polar sample.
    '''

    def __init__(self, inner, zero_at_origin=None, validation_grid=(misc.GRID_RADII, misc.GRID_ANGLES), name=None):

        assert isinstance(inner, AnalyticFunction), "inner should be an AnalyticFunction"
        assert len(validation_grid) == 2

        self.inner              = inner
        self.validation_grid    = (int(validation_grid[0]), int(validation_grid[1]))
        self.name               = name if name is not None else "a={}".format(inner.name)
        self.a0                 = complex(inner.forward(misc.as_complex(0.0))[0])

        if zero_at_origin is None:
            zero_at_origin = abs(self.a0) < misc.ORIGIN_TOL

        self.zero_at_origin     = bool(zero_at_origin)

    def forward(self, z):

        return self.inner.forward(z)[0]

    def __call__(self, z, guard=misc.GUARD):

        return self.inner(z, guard)[0]

    def vanishes_at_origin(self):

        return abs(self.a0) < misc.ORIGIN_TOL

    def rotated(self, theta):
        r'''
            z -> a(exp(-i theta) z)
        '''
        return Dilatation(Rotated(self.inner, cmath.rect(1.0, -theta), 1.0), validation_grid=self.validation_grid,
                          name="rot({},{:.6g})".format(self.name, theta))

    def matches(self, other, tol=misc.SAME_DIL_TOL, guard=misc.GUARD):
        r'''
            Pointwise equality on the validation grid.
        '''
        assert isinstance(other, Dilatation)

        if other is self:
            return True

        z = sample_grid(*self.validation_grid, guard=guard)

        return float((self.forward(z) - other.forward(z)).abs().max()) < tol

    def __repr__(self):

        return "Dilatation({})".format(self.name)

# *******************************************************************************************************************
def sample_grid(radii=misc.GRID_RADII, angles=misc.GRID_ANGLES, guard=misc.GUARD):
    r'''
        Polar validation grid shared by dilatation checks, p-factor checks and dilatation equality.
    '''
    return misc.polar_grid(radii, angles, guard=guard)

# *******************************************************************************************************************
class DilatationReport(object):

    def __init__(self, name, max_modulus, argmax, a0, passed):

        self.name           = name
        self.max_modulus    = max_modulus
        self.argmax         = argmax
        self.a0             = a0
        self.passed         = bool(passed)

# *******************************************************************************************************************
def validate_dilatation(a, guard=misc.GUARD):
    r'''
        Sample |a| on the validation grid. Fails when the max modulus reaches 1 or when a(0) = 0 is
        claimed but |a(0)| >= 1e-12. Never raises; the report carries the failure.
    '''
    assert isinstance(a, Dilatation)

    z       = sample_grid(*a.validation_grid, guard=guard)
    mod     = a.forward(z).abs().reshape(-1)
    idx     = int(torch.argmax(mod))
    max_mod = float(mod[idx])

    passed  = max_mod < 1.0
    if a.zero_at_origin and abs(a.a0) >= misc.ORIGIN_TOL:
        passed = False

    if not passed:
        logger.info("dilatation %s failed validation (max |a| = %.6g, a(0) = %s)", a.name, max_mod, a.a0)

    return DilatationReport(name=a.name, max_modulus=max_mod, argmax=complex(z.reshape(-1)[idx]), a0=a.a0, passed=passed)

# *******************************************************************************************************************
# *******************************************************************************************************************
class CatalogEntry(object):

    def __init__(self, name, family, membership, uses_alpha, factory):

        assert family in ("phi", "p", "a"), "family should be phi, p or a"
        assert callable(factory)

        self.name       = name
        self.family     = family
        self.membership = membership
        self.uses_alpha = bool(uses_alpha)
        self.factory    = factory

    def build(self, alpha=0.0):

        fn = self.factory(alpha) if self.uses_alpha else self.factory()

        if self.family == "a":
            return Dilatation(fn, name=self.name)

        return fn

CATALOG = (
    CatalogEntry("identity",                "phi",  "ST(alpha) for every alpha in [0,1)",   False,  Identity),
    CatalogEntry("koebe_alpha",             "phi",  "ST(alpha), extremal",                  True,   KoebeAlpha),
    CatalogEntry("koebe_alpha_reflected",   "phi",  "ST(alpha), extremal",                  True,   lambda alpha: Rotated(KoebeAlpha(alpha), -1.0, -1.0)),
    CatalogEntry("one",                     "p",    "P",                                    False,  lambda: Constant(1.0)),
    CatalogEntry("half_plane_p",            "p",    "P, extremal",                          False,  HalfPlaneP),
    CatalogEntry("half_plane_p_reflected",  "p",    "P, extremal",                          False,  lambda: Rotated(HalfPlaneP(), -1.0, 1.0)),
    CatalogEntry("one_minus_z",             "p",    "P",                                    False,  OneMinusZ),
    CatalogEntry("a=0",                     "a",    "B, a(0)=0",                            False,  lambda: Constant(0.0)),
    CatalogEntry("a=z",                     "a",    "B, a(0)=0",                            False,  Identity),
    CatalogEntry("a=z/2",                   "a",    "B, a(0)=0",                            False,  lambda: ScaledIdentity(0.5)),
    CatalogEntry("a=z^2",                   "a",    "B, a(0)=0",                            False,  lambda: Series([0.0, 0.0, 1.0], name="z^2")),
    CatalogEntry("a=(1+z)/4",               "a",    "B, a(0)!=0",                           False,  lambda: Series([0.25, 0.25], name="(1+z)/4")),
)

# *******************************************************************************************************************
def catalog(family=None):

    assert family in (None, "phi", "p", "a")

    return [e for e in CATALOG if family is None or e.family == family]

# *******************************************************************************************************************
def lookup(name, family, alpha=0.0):
    r'''
        Build a catalog primitive by name. Dilatation names may omit the "a=" prefix.
    '''
    if family == "a" and not name.startswith("a="):
        name = "a=" + name

    for e in catalog(family):
        if e.name == name:
            return e.build(alpha)

    raise misc.ParameterError("unknown {} primitive '{}'".format(family, name))

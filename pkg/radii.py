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

Radius polynomials, real root isolation on (0, 1), closed-form radii of
starlikeness and the maximization of lambda_alpha.
'''

import math
import logging

import numpy as np
from numpy.polynomial import Polynomial

import misc
import geometry
import logharmonic_core

logger = logging.getLogger(__name__)

REMOVABLE_TOL = 1e-12

RADIUS_KINDS = ("omega", "close_to_starlike", "order_alpha", "q_product", "q_product_order0")

# *******************************************************************************************************************
class RealPolynomial(object):
    r'''
        Real polynomial of degree at most 5, coefficients listed highest degree first.
        Leading zeros are allowed and are dropped by trimmed().
    '''

    def __init__(self, coefficients):

        c = tuple(float(x) for x in coefficients)

        assert 0 < len(c) <= 6, "degree should be at most 5"
        assert all(math.isfinite(x) for x in c), "coefficients should be finite"

        self.coefficients = c

    def trimmed(self, rel=1e-14):

        c       = np.asarray(self.coefficients)
        scale   = np.abs(c).max()
        k       = 0

        while k < len(c) - 1 and abs(c[k]) <= rel * scale:
            k += 1

        return c[k:]

    @property
    def degree(self):

        return len(self.trimmed()) - 1

    def __call__(self, x):

        return np.polyval(self.coefficients, x)

# *******************************************************************************************************************
def quintic_coeffs(alpha):
    r'''
        Coefficients of the Omega_r quintic, highest degree first:

            (2a-1)^3, -16a^3+12a^2+4a-3, 8a^3-36a^2+32a-8, 4a^2-4a+4, -6a+9, -1

        At alpha = 0 this is (1 - r^2)(r^3 + 3r^2 + 9r - 1). At alpha = 1/2 the top three vanish.
    '''
    if not 0.0 <= alpha < 1.0:
        raise misc.ParameterError("alpha should be in [0, 1)")

    a = float(alpha)

    return RealPolynomial((
        (2.0 * a - 1.0)**3,
        -16.0 * a**3 + 12.0 * a**2 + 4.0 * a - 3.0,
        8.0 * a**3 - 36.0 * a**2 + 32.0 * a - 8.0,
        4.0 * a**2 - 4.0 * a + 4.0,
        -6.0 * a + 9.0,
        -1.0,
    ))

# *******************************************************************************************************************
def lambda_log_derivative_numerator(alpha):
    r'''
        Numerator of d/dr log lambda_alpha(r) over r (1+r)^2 (1-r) (1 - c^2 r^2), c = 2 alpha - 1.

        With D = 1 - c^2 r^2 the log-derivative is

            1/r - 2a/(1+r) - 4(1-a)/(1+r)^2 + 2c/D - 2/(1+r) - 2/(1-r)

        and each term is brought over the common denominator with numpy polynomial arithmetic.
    '''
    a       = float(alpha)
    c       = 2.0 * a - 1.0

    r       = Polynomial([0.0, 1.0])
    one_p   = Polynomial([1.0, 1.0])
    one_m   = Polynomial([1.0, -1.0])
    D       = Polynomial([1.0, 0.0, -c * c])

    n = one_p**2 * one_m * D \
        - 2.0 * a * r * one_p * one_m * D \
        - 4.0 * (1.0 - a) * r * one_m * D \
        + 2.0 * c * r * one_p**2 * one_m \
        - 2.0 * r * one_p * one_m * D \
        - 2.0 * r * one_p**2 * D

    coef = np.zeros(6)
    coef[:len(n.coef)] = n.coef

    return RealPolynomial(tuple(coef[::-1]))

# *******************************************************************************************************************
def sturm_chain(coefficients):
    r'''
        p, p', -rem(p, p'), ... as numpy coefficient arrays, highest degree first.
    '''
    p       = np.trim_zeros(np.asarray(coefficients, dtype=np.float64), "f")
    chain   = [p, np.polyder(p)]
    scale   = np.abs(p).max()

    while len(chain[-1]) > 1:
        _, rem  = np.polydiv(chain[-2], chain[-1])
        rem     = np.where(np.abs(rem) <= 1e-13 * scale, 0.0, rem)
        rem     = np.trim_zeros(rem, "f")

        if len(rem) == 0:
            break

        chain.append(-rem)

    return chain

# *******************************************************************************************************************
def sign_changes(chain, x):

    v = [np.polyval(q, x) for q in chain]
    s = [np.sign(y) for y in v if y != 0.0]

    return sum(1 for u, w in zip(s[:-1], s[1:]) if u != w)

# *******************************************************************************************************************
def count_roots(chain, a, b):
    r'''
        Number of distinct real roots in (a, b].
    '''
    return sign_changes(chain, a) - sign_changes(chain, b)

# *******************************************************************************************************************
def smallest_positive_root(p, interval=(0.0, 1.0), tol=misc.ROOT_TOL):
    r'''
        Smallest real root of p in the open interval.

        A Sturm chain counts the roots of each half. The left half is kept whenever it holds a
        root until one root with a sign change is isolated, then plain bisection refines it.

        Input:
            p:          A RealPolynomial, or a sequence of coefficients highest degree first.
            interval:   (a, b) with a < b.
        Return:
            The root within tol.
    '''
    if not isinstance(p, RealPolynomial):
        p = RealPolynomial(tuple(p))

    c = p.trimmed()

    assert np.abs(c).max() > 0.0, "polynomial should not be identically zero"

    if len(c) == 1:
        raise misc.NoRootError("constant polynomial has no root")

    a, b = float(interval[0]), float(interval[1])
    assert a < b

    eps = 1e-12 * max(1.0, b - a)
    if abs(np.polyval(c, a)) < 1e-14:
        a += eps
    if abs(np.polyval(c, b)) < 1e-14:
        b -= eps

    chain = sturm_chain(c)

    if count_roots(chain, a, b) == 0:
        raise misc.NoRootError("no root in ({:g}, {:g})".format(*interval))

    # isolate the leftmost root
    while b - a > tol:
        fa, fb = np.polyval(c, a), np.polyval(c, b)
        if count_roots(chain, a, b) == 1 and fa * fb < 0.0:
            break
        m = 0.5 * (a + b)
        if count_roots(chain, a, m) >= 1:
            b = m
        else:
            a = m

    # sign-change bisection
    fa = np.polyval(c, a)
    while b - a > tol:
        m   = 0.5 * (a + b)
        fm  = np.polyval(c, m)
        if fm == 0.0:
            return float(m)
        if (fa < 0.0) == (fm < 0.0):
            a, fa = m, fm
        else:
            b = m

    return 0.5 * (a + b)

# *******************************************************************************************************************
class RadiusReport(object):

    def __init__(self, kind, alpha, lambda_weight, closed_form, numeric_check=None, abs_gap=None):

        assert kind in RADIUS_KINDS, "unknown radius kind"

        self.kind           = kind
        self.alpha          = alpha
        self.lambda_weight  = lambda_weight
        self.closed_form    = closed_form
        self.numeric_check  = numeric_check
        self.abs_gap        = abs_gap

    def to_dict(self):

        return {k: misc.to_json_number(v) for k, v in self.__dict__.items()}

# *******************************************************************************************************************
def _check_params(kind, alpha, lam):

    if kind not in RADIUS_KINDS:
        raise misc.ParameterError("unknown radius kind '{}', expected one of {}".format(kind, ", ".join(RADIUS_KINDS)))

    if not 0.0 <= alpha < 1.0:
        raise misc.ParameterError("alpha should be in [0, 1)")

    if kind.startswith("q_product"):
        if lam is None:
            raise misc.ParameterError("{} needs a lambda weight".format(kind))
        if not 0.0 <= lam <= 1.0:
            raise misc.ParameterError("lambda should be in [0, 1]")

# *******************************************************************************************************************
def defining_polynomial(kind, alpha, lam=None):
    r'''
        The polynomial whose smallest positive root is the radius of the kind.
    '''
    _check_params(kind, alpha, lam)

    a = float(alpha)

    if kind == "omega":
        return quintic_coeffs(a)
    if kind == "close_to_starlike":
        return RealPolynomial((1.0 - 2.0 * a, 2.0 * a - 4.0, 1.0))
    if kind == "order_alpha":
        return RealPolynomial((1.0 - a, 2.0 * a - 4.0, 1.0 - a))
    if kind == "q_product":
        return RealPolynomial((1.0 - 2.0 * a, 2.0 * (a - lam - 1.0), 1.0))

    return RealPolynomial((1.0 - 2.0 * lam * a, 2.0 * (lam * a - lam - 1.0), 1.0))

# *******************************************************************************************************************
def _closed_form(kind, a, lam):

    # Smaller quadratic roots are written as 1/(B + sqrt(B^2 - A)), which stays finite where the
    # leading coefficient vanishes.
    if kind == "omega":
        return smallest_positive_root(quintic_coeffs(a))

    if kind == "close_to_starlike":
        if abs(a - 0.5) < REMOVABLE_TOL:
            return 1.0 / 3.0
        return 1.0 / (2.0 - a + math.sqrt(a * a - 2.0 * a + 3.0))

    if kind == "order_alpha":
        return (1.0 - a) / (2.0 - a + math.sqrt(3.0 - 2.0 * a))

    if lam == 0.0:
        return 1.0

    if kind == "q_product":
        if abs(a - 0.5) < REMOVABLE_TOL:
            return 1.0 / (2.0 * lam + 1.0)
        return 1.0 / (1.0 + lam - a + math.sqrt(a * a - 2.0 * lam * a + lam * lam + 2.0 * lam))

    if abs(2.0 * lam * a - 1.0) < REMOVABLE_TOL:
        return 1.0 / (2.0 * lam + 1.0)

    return 1.0 / (1.0 + lam - lam * a + math.sqrt(lam * lam * a * a - 2.0 * lam * lam * a + lam * lam + 2.0 * lam))

# *******************************************************************************************************************
def closed_form_radius(kind, alpha, lam=None):
    r'''
        Radius of starlikeness by kind:

            omega:              smallest positive root of the quintic
            close_to_starlike:  (2-a-sqrt(a^2-2a+3))/(1-2a), 1/3 at a = 1/2
            order_alpha:        (2-a-sqrt(3-2a))/(1-a)
            q_product:          (1+l-a-sqrt(a^2-2la+l^2+2l))/(1-2a), 1/(2l+1) at a = 1/2
            q_product_order0:   (1+l-la-sqrt(l^2a^2-2l^2a+l^2+2l))/(1-2la), 1/(2l+1) at a = 1/(2l)

        lam = 0 gives 1 and lam = 1 gives the close_to_starlike value.
    '''
    _check_params(kind, alpha, lam)

    rho = _closed_form(kind, float(alpha), None if lam is None else float(lam))

    return RadiusReport(kind=kind, alpha=float(alpha), lambda_weight=None if lam is None else float(lam), closed_form=rho)

# *******************************************************************************************************************
def argmax_lambda(alpha, lo=1e-4, hi=1.0 - 1e-4, n=256, tol=1e-8):
    r'''
        Maximize lambda_alpha(., alpha): a scan of n points picks the bracket, golden-section refines it.
        lambda vanishes at both ends, so the critical point is a maximum.

        Return:
            (r_star, lambda_star)
    '''
    rs      = np.linspace(lo, hi, n)
    vals    = geometry.lambda_alpha(misc.as_real(rs), alpha).numpy()
    k       = int(np.argmax(vals))
    a       = rs[max(k - 1, 0)]
    b       = rs[min(k + 1, n - 1)]

    r_star, lam_star = misc.golden_section(lambda r: geometry.lambda_alpha(r, alpha), a, b, tol=tol, maximize=True)

    logger.debug("argmax_lambda(%g): r*=%.10g lambda*=%.10g", alpha, r_star, lam_star)

    return r_star, lam_star

# *******************************************************************************************************************
def extremal_map(kind, alpha, lam=None):
    r'''
        The map whose numeric radius attains the closed form, and the sigma threshold it is tested at.
    '''
    _check_params(kind, alpha, lam)

    if kind == "close_to_starlike":
        return logharmonic_core.cst_extremal(alpha), 0.0
    if kind == "order_alpha":
        return logharmonic_core.cst_extremal(alpha), alpha
    if kind == "q_product":
        return logharmonic_core.q_extremal(alpha, lam), 0.0
    if kind == "q_product_order0":
        return logharmonic_core.q_extremal(alpha, lam, order0=True), 0.0

    raise misc.ParameterError("omega has no extremal map; it is checked through argmax_lambda")

# *******************************************************************************************************************
def radius_report(kind, alpha, lam=None, check=False, tol=misc.RADIUS_TOL):
    r'''
        Closed form, and with check set the numeric counterpart and the absolute gap.

        The numeric counterpart is numeric_radius of the kind's extremal map, except for omega where
        it is the argmax of lambda_alpha.
    '''
    report = closed_form_radius(kind, alpha, lam)

    if not check:
        return report

    if kind == "omega":
        numeric, _ = argmax_lambda(alpha)
    else:
        f, threshold    = extremal_map(kind, alpha, lam)
        numeric         = geometry.numeric_radius(f, threshold=threshold, tol=tol)

    gap = abs(numeric - report.closed_form)

    logger.info("%s radius alpha=%g: closed %.8g numeric %.8g gap %.3g", kind, alpha, report.closed_form, numeric, gap)

    return RadiusReport(kind=kind, alpha=report.alpha, lambda_weight=report.lambda_weight,
                        closed_form=report.closed_form, numeric_check=numeric, abs_gap=gap)

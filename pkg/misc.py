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

Shared constants, tensor helpers, sampling grids and error types.
'''

import math
import logging
import numpy as np
import torch

logger = logging.getLogger(__name__)

# *******************************************************************************************************************
# Defaults. Every operation takes these as keyword arguments.

CDTYPE          = torch.complex128
RDTYPE          = torch.float64

GUARD           = 1e-3              # keep evaluations inside |z| <= 1 - GUARD
QUAD_ORDER      = 32                # Gauss-Legendre nodes per panel
QUAD_TOL        = 1e-10
MAX_PANELS      = 2**10
QUAD_CHUNK      = 2**20             # max (points x nodes) evaluated at once
GRID_RADII      = 32
GRID_ANGLES     = 128
CIRCLE_GRID     = 512
RADIUS_TOL      = 1e-6
ROOT_TOL        = 1e-10
SAME_DIL_TOL    = 1e-10
WEIGHT_TOL      = 1e-12
ORIGIN_TOL      = 1e-12
SIG_DIGITS      = 12
SEED            = 0

# *******************************************************************************************************************
class LogharmError(Exception):
    r'''
        Base class for every failure the library reports. The CLI turns these into exit code 1.
    '''
    pass

class GuardBandError(LogharmError):
    pass

class QuadratureError(LogharmError):
    pass

class DilatationError(LogharmError):
    pass

class DilatationMismatchError(LogharmError):
    pass

class WeightError(LogharmError):
    pass

class PFactorError(LogharmError):
    pass

class NoRootError(LogharmError):
    pass

class ParameterError(LogharmError):
    pass

class DegenerateInputError(LogharmError):
    pass

# *******************************************************************************************************************
def as_complex(z):
    r'''
        Turn a python number, list, numpy array or tensor into a complex128 tensor.
        Scalars become 0-dim tensors so shapes follow the input.
    '''
    if torch.is_tensor(z):
        if z.dtype != CDTYPE:
            z = z.to(CDTYPE)
        return z

    return torch.from_numpy(np.asarray(z, dtype=np.complex128))

# *******************************************************************************************************************
def as_real(x):

    if torch.is_tensor(x):
        return x.to(RDTYPE)

    return torch.from_numpy(np.asarray(x, dtype=np.float64))

# *******************************************************************************************************************
def check_guard(z, guard=GUARD):
    r'''
        Raise if any point lies outside the guarded disk |z| <= 1 - guard.
    '''
    assert 0.0 < guard <= 0.01, "guard band should be in (0, 0.01]"

    z = as_complex(z)

    if z.numel() > 0 and bool((z.abs() > 1.0 - guard + 1e-15).any()):
        raise GuardBandError("point outside guarded disk |z| <= {:g}".format(1.0 - guard))

    return z

# *******************************************************************************************************************
def polar_grid(radii=GRID_RADII, angles=GRID_ANGLES, guard=GUARD):
    r'''
        Polar sampling grid of the guarded disk.

        Radii are (1-guard)*k/radii for k = 1..radii, angles are uniform over (-pi, pi].

        Return:
            A complex tensor sized [radii x angles]
    '''
    assert isinstance(radii, int) and radii > 0
    assert isinstance(angles, int) and angles > 0

    r       = (1.0 - guard) * torch.arange(1, radii + 1, dtype=RDTYPE) / radii
    theta   = circle_angles(angles)

    return torch.polar(r[:, None].expand(radii, angles), theta[None, :].expand(radii, angles))

# *******************************************************************************************************************
def circle_angles(n):
    r'''
        n uniform angles, strictly increasing over (-pi, pi].
    '''
    assert isinstance(n, int) and n > 0

    return -math.pi + 2.0 * math.pi * torch.arange(1, n + 1, dtype=RDTYPE) / n

# *******************************************************************************************************************
def circle_points(r, n):

    theta = circle_angles(n)

    return theta, torch.polar(torch.full_like(theta, float(r)), theta)

# *******************************************************************************************************************
def disk_points(n, r_max=0.9, seed=SEED, r_min=0.0):
    r'''
        n seeded points uniformly distributed (by area) in the annulus r_min <= |z| <= r_max.
    '''
    rng     = np.random.default_rng(seed)
    u       = rng.uniform(r_min**2, r_max**2, size=n)
    theta   = rng.uniform(-math.pi, math.pi, size=n)

    return as_complex(np.sqrt(u) * np.exp(1j * theta))

# *******************************************************************************************************************
def round_sig(x, digits=SIG_DIGITS):
    r'''
        Round to a fixed number of significant digits. Non-finite values pass through.
    '''
    x = float(x)

    if not math.isfinite(x) or x == 0.0:
        return x

    return float("{:.{}g}".format(x, digits))

# *******************************************************************************************************************
def to_json_number(x, digits=SIG_DIGITS):
    r'''
        Python scalar or 0-dim tensor to a JSON friendly value. Complex numbers become {"re", "im"}.
    '''
    if x is None or isinstance(x, (bool, str)):
        return x

    if torch.is_tensor(x):
        x = x.item()

    if isinstance(x, complex):
        return {"re": round_sig(x.real, digits), "im": round_sig(x.imag, digits)}

    return round_sig(x, digits)

# *******************************************************************************************************************
INV_PHI         = (math.sqrt(5.0) - 1.0) / 2.0        # 1 / golden ratio
INV_PHI_SQUARE  = (3.0 - math.sqrt(5.0)) / 2.0        # 1 / golden ratio^2

def golden_section(fn, a, b, tol=1e-10, maximize=False):
    r'''
        Golden-section search for the extremum of a unimodal fn on [a, b].

        Return:
            (x, fn(x)) at the best point seen.
    '''
    a, b    = min(a, b), max(a, b)
    sign    = -1.0 if maximize else 1.0
    h       = b - a

    if h <= tol:
        x = 0.5 * (a + b)
        return x, fn(x)

    n       = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c       = a + INV_PHI_SQUARE * h
    d       = a + INV_PHI * h
    yc      = sign * fn(c)
    yd      = sign * fn(d)

    for _ in range(n - 1):
        if yc < yd:
            b, d, yd    = d, c, yc
            h           = INV_PHI * h
            c           = a + INV_PHI_SQUARE * h
            yc          = sign * fn(c)
        else:
            a, c, yc    = c, d, yd
            h           = INV_PHI * h
            d           = a + INV_PHI * h
            yd          = sign * fn(d)

    if yc < yd:
        return c, sign * yc

    return d, sign * yd

# *******************************************************************************************************************
def scalar_or_tensor(result, like):
    r'''
        Hand back a python float when the caller passed a python number.
    '''
    if torch.is_tensor(like) or isinstance(like, np.ndarray):
        return result

    return result.item()

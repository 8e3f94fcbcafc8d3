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

Command line front end:

    logharm <catalog|eval|radius|omega|curve|verify> [--alpha A] [--lambda L] [--r R] [--z Z]
            [--phi NAME] [--dil NAME] [--p NAME] [--n N] [--kind KIND] [--format json|csv|svg|png]
            [--check] [--seed S] [--out PATH] [--filter F] [--tol-scale T] [--verbose]

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
'''

import sys
import json
import argparse
import logging

import misc
import analytic_fn
import logharmonic_core as core
import geometry
import radii
import draw
import verify

logger = logging.getLogger(__name__)

COMMANDS    = ("catalog", "eval", "radius", "omega", "curve", "verify")
FORMATS     = ("json", "csv", "svg", "png")

# *******************************************************************************************************************
class RunConfig(object):
    r'''
        One parsed command line. The map spec is phi (with alpha), dil, an optional p factor and an
        optional lambda weight.
    '''

    def __init__(self, command, alpha=0.0, lam=None, r=0.5, z=None, phi="koebe_alpha", dil="a=0", p=None, n=360,
                 kind="close_to_starlike", fmt=None, check=False, seed=misc.SEED, out=None, filter=None,
                 tol_scale=1.0, verbose=0):

        assert command in COMMANDS, "unknown command"

        self.command    = command
        self.alpha      = alpha
        self.lam        = lam
        self.r          = r
        self.z          = z
        self.phi        = phi
        self.dil        = dil
        self.p          = p
        self.n          = n
        self.kind       = kind
        self.fmt        = fmt
        self.check      = check
        self.seed       = seed
        self.out        = out
        self.filter     = filter
        self.tol_scale  = tol_scale
        self.verbose    = verbose

# *******************************************************************************************************************
def build_parser():

    p = argparse.ArgumentParser(prog="logharm",
                                description="Starlike logharmonic mappings of order alpha: evaluation, radii and verification.")

    p.add_argument("command", choices=COMMANDS, help="What to run.")
    p.add_argument("--alpha", type=float, default=0.0, help="Order alpha in [0, 1) (default: 0).")
    p.add_argument("--lambda", type=float, default=None, dest="lam",
                   help="Weight lambda of the Q product, or of the q_product radius kinds.")
    p.add_argument("--r", type=float, default=0.5, help="Circle radius for curve (default: 0.5).")
    p.add_argument("--z", type=complex, default=None, help="Point for eval, e.g. 0.5 or 0.3+0.2j.")
    p.add_argument("--phi", type=str, default="koebe_alpha", help="Starlike factor from the catalog (default: koebe_alpha).")
    p.add_argument("--dil", type=str, default="a=0", help="Dilatation from the catalog (default: a=0).")
    p.add_argument("--p", type=str, default=None, help="Optional P factor from the catalog.")
    p.add_argument("--n", type=int, default=360, help="Samples on the circle for curve (default: 360).")
    p.add_argument("--kind", choices=radii.RADIUS_KINDS, default="close_to_starlike", help="Radius kind for radius.")
    p.add_argument("--format", choices=FORMATS, default=None, dest="fmt", help="Output format.")
    p.add_argument("--check", action="store_true", help="Add the numeric radius of the extremal map.")
    p.add_argument("--seed", type=int, default=misc.SEED, help="Seed for sampled points (default: 0).")
    p.add_argument("--out", type=str, default=None, help="Output file (default: stdout).")
    p.add_argument("--filter", type=str, default=None, help="Only run verification checks matching a name or tag.")
    p.add_argument("--tol-scale", type=float, default=1.0, dest="tol_scale", help="Multiply every verification tolerance.")
    p.add_argument("--verbose", "-v", action="count", default=0, help="More logging, repeat for debug.")

    return p

# *******************************************************************************************************************
def parse_args(argv=None):

    parser  = build_parser()
    args    = parser.parse_args(argv)
    cfg     = RunConfig(**vars(args))

    if cfg.command == "eval" and cfg.z is None:
        parser.error("eval needs --z")
    if cfg.command == "curve" and cfg.n < 4:
        parser.error("--n should be at least 4")
    if cfg.command == "curve" and cfg.fmt == "png" and cfg.out is None:
        parser.error("png output needs --out")
    if cfg.tol_scale < 0.0:
        parser.error("--tol-scale should be non-negative")

    return cfg

# *******************************************************************************************************************
def build_map(cfg):
    r'''
        phi and dil give the ST_Lh(alpha) map; --p multiplies in the P_Lh factor; --lambda turns the
        result F into F^lambda f*^(1-lambda) with f* the alpha Koebe map on the same dilatation.
    '''
    phi = analytic_fn.lookup(cfg.phi, "phi", cfg.alpha)
    a   = analytic_fn.lookup(cfg.dil, "a")
    f   = core.from_representation(phi, a)

    if cfg.p is not None:
        f = core.close_to_starlike(f, analytic_fn.lookup(cfg.p, "p"))

    if cfg.lam is not None:
        if not 0.0 <= cfg.lam <= 1.0:
            raise misc.ParameterError("lambda should be in [0, 1]")
        f = core.q_product(f, core.from_representation(analytic_fn.KoebeAlpha(cfg.alpha), a), cfg.lam)

    return f

# *******************************************************************************************************************
def dumps(obj):
    r'''
        Deterministic JSON. Numbers are already rounded, so parse then dump reproduces the text.
    '''
    return json.dumps(obj, indent=2) + "\n"

# *******************************************************************************************************************
def cmd_catalog(cfg):

    entries = [{"name": e.name, "family": e.family, "membership": e.membership, "uses_alpha": e.uses_alpha}
               for e in analytic_fn.catalog()]

    if cfg.fmt == "json":
        return dumps(entries)

    return "".join("{:<24s} {:<4s} {}\n".format(e["name"], e["family"], e["membership"]) for e in entries)

def cmd_eval(cfg):

    f       = build_map(cfg)
    z       = complex(cfg.z)
    value   = core.eval_map(f, z)

    report = {
        "map":          f.name,
        "z":            misc.to_json_number(z),
        "value":        misc.to_json_number(value),
        "sigma":        misc.to_json_number(geometry.sigma(f, z)),
        "jacobian":     misc.to_json_number(core.jacobian(f, z)),
        "pde_residual": misc.to_json_number(core.pde_residual(f, z)),
    }

    return dumps(report)

def cmd_radius(cfg):

    lam = cfg.lam if cfg.kind.startswith("q_") else None

    return dumps(radii.radius_report(cfg.kind, cfg.alpha, lam, check=cfg.check).to_dict())

def cmd_omega(cfg):

    return dumps(geometry.omega_report(cfg.alpha).to_dict())

def cmd_curve(cfg):

    curve   = geometry.image_curve(build_map(cfg), cfg.r, cfg.n)
    fmt     = cfg.fmt or "csv"

    if fmt == "png":
        draw.write_png(curve, cfg.out)
        return None
    if fmt == "svg":
        return draw.write_svg(curve) + "\n"
    if fmt == "json":
        return dumps({"map": curve.map_id, "r": misc.to_json_number(curve.r),
                      "samples": [[misc.to_json_number(t), misc.to_json_number(w)] for t, w in curve.samples]})

    return draw.write_csv(curve)

def cmd_verify(cfg):

    report = verify.run_suite(filter=cfg.filter, seed=cfg.seed, tol_scale=cfg.tol_scale)

    return dumps(report.to_dict()), report.passed

HANDLERS = {"catalog": cmd_catalog, "eval": cmd_eval, "radius": cmd_radius, "omega": cmd_omega,
            "curve": cmd_curve, "verify": cmd_verify}

def run_command(cfg):
    r'''
        Run one parsed command without writing anything.

        Return:
            (text, ok). text is None when the command wrote its own file.
    '''
    result = HANDLERS[cfg.command](cfg)

    if isinstance(result, tuple):
        return result

    return result, True

# *******************************************************************************************************************
def _emit(text, out):

    if text is None:
        return

    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)

def main(argv=None):

    try:
        cfg = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = logging.WARNING if cfg.verbose == 0 else logging.INFO if cfg.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        result, ok = run_command(cfg)
    except misc.LogharmError as e:
        sys.stderr.write("logharm: {}\n".format(e))
        return 1
    except OSError as e:
        sys.stderr.write("logharm: {}\n".format(e))
        return 1

    _emit(result, cfg.out)

    return 0 if ok else 1

if __name__ == "__main__":

    sys.exit(main())

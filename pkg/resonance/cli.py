"""
Command-line interface.

Subcommands:
    eigen        first eigenpair, Bessel reference and radial gap
    comparison   uniqueness probe and Morse index of the comparison equation
    continue     follow the homotopy to the target problem
    scan         continuation over a list of forcing masses

Exit codes: 0 ok, 2 configuration error, 3 numerical failure, 4 falsified
property, 5 blow-up, 6 step collapse, 7 scan acceptance failure.
"""

import argparse
import logging
import sys

from . import continuation as cont
from .config import RunConfig
from .diagnostics import PROBE_COLUMNS, comparison_probe
from .eigen import first_eigenpair, morse_index, radial_gap
from .errors import ConfigError, NumericalFailure
from .forcing import FOUR_PI, build_forcing
from .grid import make_grid, write_field
from .laplacian import assemble_laplacian
from .nonlinear import ProblemData
from .pkginfo import __title__
from .utils import fmt, output_path

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_FALSIFIED = 4
EXIT_BLOWUP = 5
EXIT_COLLAPSE = 6
EXIT_SCAN = 7

# Largest acceptable relative error of the discrete first eigenvalue.
EIGEN_ACCEPT = 1e-3


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)

    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING

    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        cfg = RunConfig.load(args.config, overrides(args))
        return args.func(cfg)
    except ConfigError as e:
        log.error("%s", e)
        return EXIT_CONFIG
    except NumericalFailure as e:
        log.error("numerical failure: %s", e)
        return EXIT_NUMERICAL


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="key-value configuration file")
    common.add_argument("--n", type=int, help="interior grid nodes")
    common.add_argument("--out", metavar="DIR", help="output directory")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--epsilon-g", type=float,
                        help="scaling of the comparison nonlinearity")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="log debugging detail")
    common.add_argument("-q", "--quiet", action="store_true",
                        help="log warnings and errors only")

    parser = argparse.ArgumentParser(prog=__title__, description=__doc__,
                                     formatter_class=argparse.
                                     RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    cmd = sub.add_parser("eigen", parents=[common],
                         help="first eigenpair and radial gap")
    cmd.set_defaults(func=cmd_eigen)

    cmd = sub.add_parser("comparison", parents=[common],
                         help="check the comparison equation")
    cmd.add_argument("--starts", type=int, help="number of random starts")
    cmd.add_argument("--probe-amplitude", type=float,
                     help="largest sup norm of a random start")
    cmd.set_defaults(func=cmd_comparison)

    cmd = sub.add_parser("continue", parents=[common],
                         help="follow the homotopy to t = 1")
    cmd.add_argument("--family", help="forcing family")
    cmd.add_argument("--amplitude", type=float, help="forcing amplitude")
    cmd.add_argument("--mass", type=float,
                     help="rescale the forcing to this mass")
    cmd.set_defaults(func=cmd_continue)

    cmd = sub.add_parser("scan", parents=[common],
                         help="continuation over forcing masses")
    cmd.add_argument("--masses", type=float, nargs="*",
                     help="forcing masses, increasing")
    cmd.add_argument("--margin", type=float,
                     help="rows below 4 pi - margin must reach t = 1")
    cmd.add_argument("--workers", type=int, help="parallel rows")
    cmd.set_defaults(func=cmd_scan)

    return parser


def overrides(args):
    "Map command-line flags to dotted configuration keys."

    flags = {"n": "n", "out": "out", "seed": "seed",
             "epsilon_g": "epsilon_g", "starts": "comparison.starts",
             "probe_amplitude": "comparison.amplitude",
             "family": "forcing.family", "amplitude": "forcing.amplitude",
             "mass": "forcing.target_mass", "masses": "scan.masses",
             "margin": "scan.margin", "workers": "scan.workers"}

    return {key: getattr(args, attr) for attr, key in flags.items()
            if hasattr(args, attr)}


def cmd_eigen(cfg):
    "Report the first eigenpair against its Bessel reference."

    grid = make_grid(cfg.grid_size)
    A = assemble_laplacian(grid)
    eig = first_eigenpair(A)
    gap = radial_gap(A, eig)

    report([("lambda1", eig.lambda1),
            ("lambda1_ref", eig.lambda1_ref),
            ("relative_error", eig.relative_error),
            ("radial_gap", gap),
            ("phi1_center", eig.phi1[0]),
            ("phi1_deriv_boundary", eig.phi1_deriv_boundary),
            ("iterations", eig.iterations)])

    save(cfg, "phi1.csv", lambda fp: write_field(fp, grid, eig.phi1))

    if eig.relative_error > EIGEN_ACCEPT:
        log.error("relative error %.3g above %g", eig.relative_error,
                  EIGEN_ACCEPT)
        return EXIT_FALSIFIED

    return EXIT_OK


def cmd_comparison(cfg):
    "Check uniqueness and degree of the zero solution at t = 0."

    p = ProblemData.setup(cfg.grid_size, epsilon_g=cfg.epsilon_g)
    index = morse_index(p.A, p.lambda1 + p.epsilon_g)
    degree = (-1) ** index

    opts = cfg.comparison
    results = comparison_probe(p, opts["starts"], opts["amplitude"],
                               cfg.seed)
    nonzero = [res.start for res in results if res.nonzero]

    report([("morse_index", index),
            ("degree", degree),
            ("seed", cfg.seed),
            ("starts", len(results)),
            ("converged_to_zero",
             sum(1 for res in results if res.converged and not res.nonzero)),
            ("not_converged", sum(1 for res in results if not res.converged)),
            ("nonzero_roots", len(nonzero))])

    def write(fp):
        fp.write(",".join(PROBE_COLUMNS) + "\n")
        for res in results:
            fp.write(",".join(fmt(res[col]) for col in PROBE_COLUMNS) + "\n")

    save(cfg, "probe.csv", write)

    if nonzero or index != 1:
        log.error("comparison check failed: morse index %d, nonzero roots "
                  "from starts %s", index, nonzero)
        return EXIT_FALSIFIED

    return EXIT_OK


def cmd_continue(cfg):
    "Follow the homotopy from the comparison equation to the target."

    base = ProblemData.setup(cfg.grid_size, epsilon_g=cfg.epsilon_g)
    f = build_forcing(cfg.forcing, base.eig, base.grid)
    p = base.with_forcing(f)

    trace = cont.run_continuation(p, cfg.continuation)
    final = trace.final

    report([("verdict", trace.verdict),
            ("mass", trace.mass),
            ("t", final.t),
            ("sup_norm", final.sup_norm),
            ("T", final.T),
            ("exp_mass", final.exp_mass),
            ("total_exp_mass", final.total_exp_mass),
            ("identity_residual", final.identity_residual),
            ("peak_radius", final.peak_radius),
            ("steps", len(trace) - 1),
            ("rejections", trace.rejections),
            ("newton_iterations", trace.newton_iterations),
            ("trivial", trace.trivial)])

    save(cfg, "trace.csv", trace.write)
    save(cfg, "solution.csv",
         lambda fp: write_field(fp, p.grid, trace.solution))

    if trace.trivial:
        log.info("trivial solution u = 0")

    return {cont.REACHED: EXIT_OK,
            cont.BLOW_UP: EXIT_BLOWUP,
            cont.STEP_COLLAPSE: EXIT_COLLAPSE}[trace.verdict]


def cmd_scan(cfg):
    "Run the continuation over a list of forcing masses."

    template = ProblemData.setup(cfg.grid_size, epsilon_g=cfg.epsilon_g)
    opts = cfg.scan

    rows = cont.scan_threshold(cfg.forcing, opts["masses"], template,
                               cfg.continuation, workers=opts["workers"])

    for row in rows:
        print("%-24s %-14s %-24s %s" % (fmt(row.mass), row.verdict,
                                        fmt(row.sup_norm),
                                        fmt(row.peak_radius)))

    save(cfg, "scan.csv", lambda fp: cont.write_scan(fp, rows))

    limit = FOUR_PI - opts["margin"]
    failed = [row.mass for row in rows
              if row.mass < limit and row.verdict != cont.REACHED]

    if failed:
        log.error("rows below %.6g did not reach t = 1: %s", limit,
                  ", ".join(fmt(m) for m in failed))
        return EXIT_SCAN

    return EXIT_OK


def report(items):
    for name, value in items:
        if not isinstance(value, str):
            value = fmt(value)

        print("%-20s %s" % (name, value))


def save(cfg, name, writer):
    "Write an output file and the configuration that produced it."

    path = output_path(cfg.out, name)
    with open(path, "w") as fp:
        writer(fp)

    with open(output_path(cfg.out, "run.cfg"), "w") as fp:
        cfg.write(fp)

    log.info("wrote %s", path)


if __name__ == "__main__":
    sys.exit(main())

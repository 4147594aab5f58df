"""
Command-line front end.

Every subcommand builds a :class:`~semigrass.schemas.Report` and writes it to stdout
or ``--out``. Exit codes: 0 on success, 1 when a verification suite fails or an
internal check breaks, 2 on a usage error.
"""

import argparse
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from semigrass import consts
from semigrass.config import config
from semigrass.gf import field_of_order
from semigrass.grassmann import (
    GrassmannianSpec,
    enumerate_subspaces,
    gl_count,
    grassmannian_count,
    grassmannian_measure,
    orbit_count,
    orbit_index,
    orbit_measure,
    orbit_tally,
)
from semigrass.qspecial import orbit_weight, total_mass_float
from semigrass.schemas import Report, RunConfig
from semigrass.spectral import asc_eigencheck, hahn_eigencheck, mc_orbit_distribution, walk_summary
from semigrass.spectral.schemas import ResidualTable
from semigrass.utils import get_logger, make_rng
from semigrass.verification import SUITE_NAMES, FullVerificationPipeline
from semigrass.version import version_info

logger = get_logger("cli")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class CommandFailed(Exception):
    """Raised when a command produced its report but the checks in it failed."""

    def __init__(self, report: Report):
        super().__init__(f"{report.command} reported failures")
        self.report = report


def cmd_count(cfg: RunConfig) -> Report:
    n, q = cfg.require_n(), cfg.q
    tally = orbit_tally(field_of_order(q), n) if cfg.verify_by_enumeration else None
    rows: List[Dict] = []
    for k in range(n + 1):
        row = {"k": k, "orbit_count": orbit_count(n, k, q), "orbit_measure": orbit_measure(n, k, q).value}
        if tally is not None:
            row["enumerated"] = tally.get(k, 0)
        rows.append(row)
    total = {
        "k": "all",
        "gl_count": gl_count(n, q),
        "grassmannian_count": grassmannian_count(2 * n, n, q),
        "grassmannian_measure": grassmannian_measure(n, q).value,
    }
    if tally is not None:
        total["enumerated"] = sum(tally.values())
    rows.append(total)
    report = Report(q=q, n=n, command="count", rows=rows)
    if tally is not None and any(tally.get(k, 0) != orbit_count(n, k, q) for k in range(n + 1)):
        raise CommandFailed(report)
    return report


def cmd_enumerate(cfg: RunConfig) -> Report:
    n = cfg.require_n()
    k = n if cfg.k is None else cfg.k
    spec = field_of_order(cfg.q)
    rows = [
        {
            "index": i,
            "basis": ";".join(",".join(str(v) for v in row) for row in L.basis.tolist()),
            "orbit": orbit_index(L, n),
        }
        for i, L in enumerate(enumerate_subspaces(GrassmannianSpec(spec=spec, m=2 * n, k=k)))
    ]
    return Report(q=cfg.q, n=n, command="enumerate", rows=rows)


def cmd_measure(cfg: RunConfig) -> Report:
    q = cfg.q
    limit = total_mass_float(q)
    rows: List[Dict] = []
    partial = Fraction(0)
    for k in range(cfg.kmax + 1):
        weight = orbit_weight(k, q)
        partial += weight
        rows.append(
            {
                "k": k,
                "orbit_weight": weight,
                "partial_sum": partial,
                "gap_approx": limit - float(partial),
            }
        )
    rows.append({"k": "limit", "total_mass_approx": limit})
    return Report(q=q, command="measure", rows=rows)


def _residual_row(j: int, table: ResidualTable) -> Dict:
    worst = max((abs(r.residual) for r in table.rows), default=Fraction(0))
    return {"j": j, "eigenvalue": table.eigenvalue, "max_residual": worst, "all_zero": table.all_zero}


def cmd_spectrum(cfg: RunConfig) -> Report:
    q = cfg.q
    if cfg.infinite:
        rows = [_residual_row(j, asc_eigencheck(j, q, cfg.K)) for j in range(cfg.jmax + 1)]
        report = Report(q=q, command="spectrum", rows=rows)
    else:
        n = cfg.require_n()
        rows = [_residual_row(j, hahn_eigencheck(j, n, q)) for j in range(n + 1)]
        report = Report(q=q, n=n, command="spectrum", rows=rows)
    if not all(row["all_zero"] for row in report.rows):
        raise CommandFailed(report)
    return report


def cmd_sample(cfg: RunConfig) -> Report:
    n = cfg.require_n()
    dist = mc_orbit_distribution(n, cfg.q, cfg.samples, make_rng(cfg.seed))
    rows = [
        {
            "k": b.k,
            "count": b.count,
            "exact": b.exact,
            "frequency_approx": b.frequency,
            "stderr_approx": b.stderr,
            "z_approx": b.z_score,
        }
        for b in dist.bins
    ]
    return Report(q=cfg.q, n=n, command="sample", seed=cfg.seed, rows=rows)


def cmd_walk(cfg: RunConfig) -> Report:
    summary = walk_summary(cfg.q, 0, cfg.steps, make_rng(cfg.seed), kmax=min(cfg.kmax, cfg.K))
    rows = [
        {"k": b.k, "visits": b.visits, "stationary": b.exact, "frequency_approx": b.frequency}
        for b in summary.bins
    ]
    return Report(q=cfg.q, command="walk", seed=cfg.seed, rows=rows)


def cmd_verify(cfg: RunConfig) -> Report:
    names = None if cfg.suite == "all" else [cfg.suite]
    verification = FullVerificationPipeline(q=cfg.q, names=names).run()
    rows = []
    for r in verification.results:
        row = {"suite": r.name, "status": "PASS" if r.passed else "FAIL", "checks": r.checks, "detail": r.detail}
        if cfg.timings:
            row["seconds_approx"] = r.seconds
        rows.append(row)
    report = Report(q=cfg.q, command="verify", rows=rows)
    if not verification.passed:
        raise CommandFailed(report)
    return report


COMMANDS: Dict[str, Callable[[RunConfig], Report]] = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "measure": cmd_measure,
    "spectrum": cmd_spectrum,
    "sample": cmd_sample,
    "walk": cmd_walk,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="field order (a prime power)")
    common.add_argument("--n", type=int, default=None, help="half the ambient dimension")
    common.add_argument("--k", type=int, default=None, help="subspace dimension for enumerate")
    common.add_argument("--kmax", type=int, default=12)
    common.add_argument("--jmax", type=int, default=8)
    common.add_argument("--K", type=int, default=consts.DEFAULT_TRUNCATION, help="truncation of the infinite model")
    common.add_argument("--samples", type=int, default=100_000)
    common.add_argument("--steps", type=int, default=1_000_000)
    common.add_argument("--seed", type=int, default=consts.DEFAULT_SEED)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--suite", default="all", choices=["all", *SUITE_NAMES])
    common.add_argument("--verify-by-enumeration", action="store_true")
    common.add_argument("--infinite", action="store_true")
    common.add_argument("--timings", action="store_true", help="add per-suite wall time to verify reports")

    parser = argparse.ArgumentParser(prog="semigrass", description="Exact harmonic analysis on Grassmannians over F_q.")
    parser.add_argument("--version", action="version", version=version_info())
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _emit(report: Report, cfg: RunConfig) -> None:
    text = report.render(cfg.format)
    if cfg.out is None:
        sys.stdout.write(text)
        return
    cfg.out.write_text(text)
    logger.info(f"Wrote {cfg.format} report to {cfg.out}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    try:
        cfg = RunConfig(**args)
        config.set_truncation(cfg.K)
        report = COMMANDS[command](cfg)
    except CommandFailed as failed:
        _emit(failed.report, cfg)
        logger.info(f"{command}: checks failed")
        return EXIT_FAILURE
    except (ValidationError, ValueError, KeyError) as e:
        logger.error(f"{command}: {e}")
        return EXIT_USAGE
    except RuntimeError as e:
        logger.error(f"{command}: internal check failed: {e}")
        return EXIT_FAILURE
    _emit(report, cfg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

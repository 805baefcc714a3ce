"""
Command-line interface

Subcommands predict, expand, empirical, verify, zeros and sweep. Flags
take precedence over a `--config` file, which takes precedence over the
defaults. Exit codes: 0 success, 1 usage, 2 accuracy or resource
failure, 3 verification or data-quality failure.
"""
import argparse
import logging
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.cli.reports import density_rows, emit, render_csv, render_json, stamp, verification_rows
from src.cli.verify import VERIFICATIONS, run_verification
from src.config import EMPIRICAL_WEIGHT_CUTOFF
from src.empirical import empirical_density
from src.errors import ConfigError, QDLError, VerificationError, exit_code_for
from src.expansion import expansion_density, j_asymptotic
from src.models import DensityReport, RunConfig, VerificationReport
from src.ratios import enumerate_family, make_family, predict_density
from src.testfn import make_testfn, make_weight, parse_testfn
from src.zeros import find_zeros_many
from src.zeros.cache import cache_dir

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError instead of exiting."""

    def error(self, message: str):
        raise ConfigError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--X", type=float, help="Family scale X (default: 1e6)")
    common.add_argument("--phi", dest="phi_spec", help="Test function kind:sigma, e.g. fejer:1.5")
    common.add_argument("--w", dest="w_spec", help="Family weight kind (default: gaussian)")
    common.add_argument("--T", type=float, help="Zero height for empirical runs (default: 40)")
    common.add_argument("--cprime", dest="c_prime", type=float, help="Contour abscissa c' (default: 0.1)")
    common.add_argument("--j", dest="j_mode", choices=("exact", "asym", "asymptotic"),
                        help="J(X) evaluation for expand and sweep (default: exact)")
    common.add_argument("--sigma", dest="sigmas", help="Comma-separated support radii for sweep")
    common.add_argument("--threads", type=int, help="Worker threads (default: hardware parallelism)")
    common.add_argument("--seed", type=int, help="Bootstrap seed")
    common.add_argument("--out", dest="out_path", help="Report path (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), help="Report format (default: csv for sweep, json otherwise)")
    common.add_argument("--config", help="Flat key = value configuration file")

    parser = _Parser(prog="qdl", description="Lab for the 1-level density of quadratic Dirichlet L-functions")
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
    subparsers.add_parser("predict", parents=[common], help="Ratios Conjecture prediction")
    subparsers.add_parser("expand", parents=[common], help="Explicit expansion with the J(X) term")
    subparsers.add_parser("empirical", parents=[common], help="1-level density from computed zeros")
    verify = subparsers.add_parser("verify", parents=[common], help="Check one identity")
    verify.add_argument("verify_name", choices=sorted(VERIFICATIONS), help="Verification to run")
    zeros = subparsers.add_parser("zeros", parents=[common], help="Populate the zero cache")
    zeros.add_argument("--d", dest="d_values", help="Comma-separated d (default: the family at X)")
    sweep = subparsers.add_parser("sweep", parents=[common], help="Density table over sigma")
    sweep.add_argument("--with-empirical", dest="with_empirical", action="store_true", default=None,
                       help="Add the empirical density column")
    return parser


def _write_density(report: DensityReport, cfg: RunConfig, start: float) -> int:
    if cfg.output_format == "csv":
        emit(render_csv(density_rows(report)), cfg.out_path)
    else:
        emit(render_json(stamp(report.model_dump(), cfg, time.perf_counter() - start)), cfg.out_path)
    return 0


def cmd_predict(cfg: RunConfig, start: float) -> int:
    phi, w = parse_testfn(cfg.phi_spec), make_weight(cfg.w_spec)
    return _write_density(predict_density(phi, w, make_family(cfg.X, w, cfg.c_prime)), cfg, start)


def cmd_expand(cfg: RunConfig, start: float) -> int:
    phi, w = parse_testfn(cfg.phi_spec), make_weight(cfg.w_spec)
    report = expansion_density(phi, w, make_family(cfg.X, w, cfg.c_prime), j_mode=cfg.j_mode)
    return _write_density(report, cfg, start)


def cmd_empirical(cfg: RunConfig, start: float) -> int:
    phi, w = parse_testfn(cfg.phi_spec), make_weight(cfg.w_spec)
    report = empirical_density(phi, w, make_family(cfg.X, w, cfg.c_prime), cfg.T,
                               threads=cfg.threads, seed=cfg.seed)
    return _write_density(report, cfg, start)


def cmd_verify(cfg: RunConfig, start: float) -> int:
    if cfg.verify_name not in VERIFICATIONS:
        raise ConfigError(f"Unknown verification {cfg.verify_name!r}; available: {', '.join(sorted(VERIFICATIONS))}")
    report = VerificationReport(name=cfg.verify_name, residuals=run_verification(cfg.verify_name, cfg),
                                params={"X": cfg.X, "phi": cfg.phi_spec, "w": cfg.w_spec, "c_prime": cfg.c_prime})
    if cfg.output_format == "csv":
        emit(render_csv(verification_rows(report)), cfg.out_path)
    else:
        emit(render_json(stamp(report.to_dict(), cfg, time.perf_counter() - start)), cfg.out_path)
    if not report.passed:
        raise VerificationError(f"verify {report.name}: worst residual is {report.worst:.2f} times its tolerance")
    return 0


def family_d_values(cfg: RunConfig) -> List[int]:
    """Signed d of the family at X whose weight clears EMPIRICAL_WEIGHT_CUTOFF."""
    w = make_weight(cfg.w_spec)
    d, weights = enumerate_family(w, make_family(cfg.X, w, cfg.c_prime)).signed()
    return d[weights >= EMPIRICAL_WEIGHT_CUTOFF * float(w.w(0.0))].tolist()


def cmd_zeros(cfg: RunConfig, start: float) -> int:
    d_values = cfg.d_values or family_d_values(cfg)
    zero_sets = find_zeros_many(d_values, cfg.T, threads=cfg.threads)
    rows = [
        {"d": z.character.d, "T": z.height, "count": len(z.ordinates),
         "count_estimate": z.count_estimate, "complete": z.complete_flag,
         "first": z.ordinates[0] if z.ordinates else None}
        for z in zero_sets
    ]
    if cfg.output_format == "csv":
        emit(render_csv(rows), cfg.out_path)
    else:
        summary = {
            "characters": len(rows),
            "complete": sum(1 for r in rows if r["complete"]),
            "zeros_total": sum(r["count"] for r in rows),
            "cache_dir": str(cache_dir()),
            "rows": rows,
        }
        emit(render_json(stamp(summary, cfg, time.perf_counter() - start)), cfg.out_path)
    return 0


def sweep_rows(cfg: RunConfig) -> List[Dict[str, Any]]:
    """One row per sigma: prediction, expansion with its terms, and optionally the empirical density."""
    kind = cfg.phi_spec.partition(":")[0]
    w = make_weight(cfg.w_spec)
    fam = make_family(cfg.X, w, cfg.c_prime)
    rows = []
    for sigma in cfg.sigmas:
        phi = make_testfn(kind, sigma)
        expansion = expansion_density(phi, w, fam, j_mode=cfg.j_mode)
        row = {
            "sigma": sigma,
            "X": cfg.X,
            "prediction": predict_density(phi, w, fam).value,
            "expansion": expansion.value,
            "empirical": None,
        }
        row.update({f"term_{name}": value for name, value in expansion.terms.items()})
        row["phi_hat_1"] = float(phi.phi_hat(1.0))
        row["j_asymptotic"] = j_asymptotic(phi, w, fam)
        row["katz_sarnak"] = expansion.diagnostics["katz_sarnak"]
        if cfg.with_empirical:
            row["empirical"] = empirical_density(phi, w, fam, cfg.T, threads=cfg.threads, seed=cfg.seed).value
        logger.info(f"sweep sigma={sigma}: prediction {row['prediction']:.6f}, expansion {row['expansion']:.6f}")
        rows.append(row)
    return rows


def cmd_sweep(cfg: RunConfig, start: float) -> int:
    rows = sweep_rows(cfg)
    if cfg.output_format == "json":
        emit(render_json(stamp({"rows": rows}, cfg, time.perf_counter() - start)), cfg.out_path)
    else:
        emit(render_csv(rows), cfg.out_path)
    return 0


COMMANDS: Dict[str, Callable[[RunConfig, float], int]] = {
    "predict": cmd_predict,
    "expand": cmd_expand,
    "empirical": cmd_empirical,
    "verify": cmd_verify,
    "zeros": cmd_zeros,
    "sweep": cmd_sweep,
}

# argparse destinations that are not RunConfig fields
_NON_CONFIG = {"config"}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        0 on success, otherwise the code of the failure
    """
    start = time.perf_counter()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 1
        flags = {k: v for k, v in vars(args).items() if k not in _NON_CONFIG}
        cfg = RunConfig.resolve(flags, args.config)
        logger.info(f"Running {cfg.command} with {cfg.echo()}")
        code = COMMANDS[cfg.command](cfg, start)
        logger.info(f"{cfg.command} finished in {time.perf_counter() - start:.1f}s")
        return code
    except QDLError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return exit_code_for(e)
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return 1

"""
Report emission

JSON for single reports, CSV for tables. Every report carries the tool
version, the effective configuration and the wall time of the run.
"""
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.config import TOOL_VERSION
from src.models import DensityReport, RunConfig, VerificationReport

logger = logging.getLogger(__name__)


def stamp(data: Dict[str, Any], cfg: RunConfig, wall_time: float) -> Dict[str, Any]:
    """Embed version, effective config and run time in a report dict."""
    data.setdefault("params", {})["config"] = cfg.echo()
    diagnostics = data.setdefault("diagnostics", {})
    diagnostics["tool_version"] = TOOL_VERSION
    diagnostics["run_wall_time"] = wall_time
    return data


def density_rows(report: DensityReport) -> List[Dict[str, Any]]:
    """One row per term plus the total and the error budget."""
    rows = [{"name": name, "value": value} for name, value in report.terms.items()]
    rows.append({"name": "value", "value": report.value})
    rows.append({"name": "error_budget", "value": report.error_budget})
    return rows


def verification_rows(report: VerificationReport) -> List[Dict[str, Any]]:
    return [
        {"name": report.name, "label": r.label, "left": r.left, "right": r.right,
         "residual": r.residual, "tolerance": r.tolerance, "passed": r.passed}
        for r in report.residuals
    ]


def render_csv(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buffer.getvalue()


def render_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False, default=str) + "\n"


def emit(text: str, out_path: Optional[str]) -> None:
    """Write to the --out path, or to stdout when none is given."""
    if out_path is None:
        sys.stdout.write(text)
        return
    path = Path(out_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Report written to {path}")

"""JSON and CSV serialization of run reports."""

import csv
import io
import json
import math
import re
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from . import __version__

_FLOAT_TOKEN = "\x00f:"
_TOKEN_RE = re.compile(r'"\\u0000f:([^"]*)"')


def _prepare(obj):
    if isinstance(obj, dict):
        return {str(k): _prepare(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _prepare(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        return _FLOAT_TOKEN + format(x, ".17g")
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def dumps(report):
    """JSON with every float written to 17 significant digits."""
    text = json.dumps(_prepare(report), indent=2)
    return _TOKEN_RE.sub(lambda m: m.group(1), text) + "\n"


def make_report(command, inputs, results):
    return {
        "meta": {
            "tool": "gaussquad",
            "version": __version__,
            "command": command,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        },
        "inputs": inputs,
        "results": results,
    }


def strip_timestamp(report):
    out = dict(report)
    out["meta"] = {k: v for k, v in report["meta"].items() if k != "timestamp"}
    return out


CSV_COLUMNS = ["a", "b", "c", "verdict", "residual_rms", "design_rank", "condition",
               "identity_max", "lambda11", "lambda22", "lambda33", "note"]


def classification_csv(report):
    """One row per parameter tuple of a ClassificationReport."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for cell in report.cells:
        p = cell["params"]
        lam = cell["lambda"]
        w.writerow([
            format(p["a"], ".17g"), format(p["b"], ".17g"),
            format(p["c"], ".17g") if "c" in p else "",
            cell["verdict"],
            format(cell["residual_rms"], ".17g"),
            cell["design_rank"],
            format(cell["condition"], ".17g"),
            format(cell["identity_max"], ".17g"),
            format(lam[0][0], ".17g"), format(lam[1][1], ".17g"), format(lam[2][2], ".17g"),
            cell["note"],
        ])
    return buf.getvalue()

"""Report envelopes and canonical serialization (JSON / CSV / table).

JSON is canonical: UTF-8, sorted keys, compact separators; exact rationals
are serialized as "num/den" strings so downstream tools lose no precision.
"""

from __future__ import annotations

import datetime
import io
import json
from fractions import Fraction

from .curves import Curve
from .fields import FqElement, format_fq
from .flow import FlowTrace, format_state
from .isogeny import ClumpReport
from .scan import ScanReport
from .sslocus import MassReport, SupersingularLocus


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def curve_desc(curve: Curve) -> str:
    fld = curve.field
    base = f"F_{fld.p}" if fld.f == 1 else f"F_{fld.p}^{fld.f}"
    if curve.kind == "legendre":
        return f"legendre:{format_fq(curve.lam)} / {base}"
    return f"weier:{format_fq(curve.A)},{format_fq(curve.B)} / {base}"


def to_jsonable(obj):
    """Recursively convert report objects to JSON-ready primitives."""
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, FqElement):
        return format_fq(obj)
    if isinstance(obj, Curve):
        return curve_desc(obj)
    if isinstance(obj, SupersingularLocus):
        return {
            "p": obj.p,
            "j_values": [format_fq(j) for j in obj.j_values],
            "aut_orders": {format_fq(j): a for j, a in obj.aut_orders.items()},
        }
    if isinstance(obj, MassReport):
        return {
            "p": obj.p,
            "locus_size": obj.locus_size,
            "mass": fraction_str(obj.mass),
            "expected": fraction_str(obj.expected),
            "pass": obj.passed,
        }
    if isinstance(obj, ScanReport):
        return {
            "curve": obj.curve,
            "p_min": obj.p_min,
            "p_max": obj.p_max,
            "records": [
                {"p": r.p, "status": r.status, "a": r.a, "reason": r.reason}
                for r in obj.records
            ],
            "totals": dict(obj.totals),
            "supersingular_primes": list(obj.supersingular_primes),
        }
    if isinstance(obj, ClumpReport):
        return {
            "p": obj.p,
            "l": obj.l,
            "closed": obj.closed,
            "regular": obj.regular,
            "connected": obj.connected,
            "vertex_count": obj.vertex_count,
            "edge_count": obj.edge_count,
        }
    if isinstance(obj, FlowTrace):
        return {
            "curve": curve_desc(obj.curve),
            "ordinary": obj.ordinary,
            "states": [format_state(s) for s in obj.states],
            "verdict": {
                "kind": obj.verdict.kind,
                "period": obj.verdict.period,
                "reason": obj.verdict.reason,
                "steps_exhausted": obj.verdict.steps_exhausted,
            },
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def build_envelope(
    command: str,
    payload,
    elapsed_ms: int,
    version: str,
    with_timestamp: bool = True,
) -> dict:
    env = {
        "version": version,
        "command": command,
        "payload": to_jsonable(payload),
    }
    if with_timestamp:
        env["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        env["elapsed_ms"] = elapsed_ms
    return env


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


# ---------------------------------------------------------------------------
# CSV / table: fixed header row per report type

_CSV_SCHEMAS = {
    "scan": ("records", ["p", "status", "a", "reason"]),
    "ss-count": ("rows", ["j", "aut_order"]),
    "mass": ("rows", ["p", "locus_size", "mass", "expected", "pass"]),
    "hw": ("rows", ["p", "degree", "squarefree", "constant_term_one"]),
    "clump": ("rows", ["p", "l", "closed", "regular", "connected", "vertex_count", "edge_count"]),
    "flow": ("rows", ["step", "state"]),
    "selftest": ("rows", ["check", "pass", "details"]),
    "shimura": ("rows", ["p", "f", "g", "value", "chi_identity_ok", "hw_degree_ok"]),
}


def payload_rows(subcommand: str, payload: dict) -> tuple[list[str], list[list]]:
    """Flatten a jsonable payload into (header, rows) for CSV/table output."""
    if subcommand == "scan":
        header = _CSV_SCHEMAS["scan"][1]
        rows = [[r[h] for h in header] for r in payload["records"]]
        return header, rows
    if subcommand == "ss-count":
        header = _CSV_SCHEMAS["ss-count"][1]
        rows = [[j, payload["aut_orders"][j]] for j in payload["j_values"]]
        return header, rows
    if subcommand == "mass":
        header = _CSV_SCHEMAS["mass"][1]
        rows = [[r["p"], r["locus_size"], r["mass"], r["expected"], r["pass"]] for r in payload["reports"]]
        return header, rows
    if subcommand == "shimura":
        header = _CSV_SCHEMAS["shimura"][1]
        return header, [[payload[h] for h in header]]
    if subcommand == "hw":
        header = _CSV_SCHEMAS["hw"][1]
        rows = [[r[h] for h in header] for r in payload["reports"]]
        return header, rows
    if subcommand == "clump":
        header = _CSV_SCHEMAS["clump"][1]
        rows = [[r[h] for h in header] for r in payload["reports"]]
        return header, rows
    if subcommand == "flow":
        rows = [[i, s] for i, s in enumerate(payload["states"])]
        return _CSV_SCHEMAS["flow"][1], rows
    if subcommand == "selftest":
        header = _CSV_SCHEMAS["selftest"][1]
        rows = [[c["name"], c["pass"], c["details"]] for c in payload["checks"]]
        return header, rows
    raise ValueError(f"no tabular schema for {subcommand!r}")


def render_csv(subcommand: str, payload: dict) -> str:
    import csv

    header, rows = payload_rows(subcommand, payload)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def render_table(subcommand: str, payload: dict) -> str:
    header, rows = payload_rows(subcommand, payload)
    cells = [[str(h) for h in header]] + [
        ["" if v is None else str(v) for v in row] for row in rows
    ]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for i, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"

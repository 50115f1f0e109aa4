"""Command-line interface.

Every command builds a flat record (or a list of rows) and prints it as
text, JSON or CSV. Exit status: 0 success, 1 domain/validity error (JSON
error object on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import golden, verify
from .channels import diamond_bounds_at_radius
from .cv_core import cv_ceiling, max_infidelity_at_radius, mu_max, tele_fidelity, tele_infidelity
from .errors import DomainError, HoloError
from .holo_bounds import (
    bekenstein_max_qubits,
    critical_point,
    spherical_max_qubits,
    spherical_min_distance,
    thooft_limits,
)
from .plob_bounds import ProtocolParams, build_report
from .units import LogScalar

SWEEP_VARIABLES = ("radius_planck", "eta", "mu", "mu_tilde", "n_qubits", "N", "epsilon")


# ---------------------------------------------------------------- records

def _flags(**kw) -> dict:
    return {k: bool(v) for k, v in kw.items()}


def rec_bekenstein(p: dict) -> dict:
    return {"command": "bounds bekenstein", "inputs": {"radius": p["radius"], "energy": p["energy"]},
            "n_max": bekenstein_max_qubits(p["radius"], p["energy"])}


def rec_spherical(p: dict) -> dict:
    r = {"command": "bounds spherical", "inputs": {}}
    if p.get("radius_planck") is not None:
        r["inputs"]["radius_planck"] = p["radius_planck"]
        r["n_max"] = spherical_max_qubits(p["radius_planck"])
    if p.get("n_qubits") is not None:
        r["inputs"]["n_qubits"] = p["n_qubits"]
        r["d_min_planck"] = spherical_min_distance(p["n_qubits"])
    if len(r) == 2:
        raise DomainError("give radius_planck and/or n_qubits")
    return r


def rec_thooft(p: dict) -> dict:
    n_max, d_min = thooft_limits(p["radius_planck"], p["n_qubits"])
    return {"command": "bounds thooft",
            "inputs": {"radius_planck": p["radius_planck"], "n_qubits": p["n_qubits"]},
            "n_max": n_max, "d_min_planck": d_min, "flags": _flags(approximate_scaling=True)}


def rec_critical(p: dict) -> dict:
    cp = critical_point(p["n_qubits"])
    return {"command": "bounds critical", "inputs": {"n_qubits": p["n_qubits"]}, **asdict(cp)}


def rec_ceiling(p: dict) -> dict:
    c = cv_ceiling(p["radius_planck"])
    return {"command": "cv ceiling", "inputs": {"radius_planck": p["radius_planck"]},
            "nbar_max": c.ln_nbar_max.to_json(), "mu_max": c.ln_mu_max.to_json(),
            "flags": _flags(asymptotic_branch=c.asymptotic)}


def rec_fidelity(p: dict) -> dict:
    mt = p["mu_tilde"]
    if p.get("mu") is not None:
        mu: float | LogScalar = p["mu"]
        inputs = {"mu": p["mu"], "mu_tilde": mt}
        infid = tele_infidelity(mu, mt)
    elif p.get("radius_planck") is not None:
        mu = mu_max(p["radius_planck"])
        inputs = {"radius_planck": p["radius_planck"], "mu_tilde": mt}
        infid = max_infidelity_at_radius(p["radius_planck"], mt)
    else:
        raise DomainError("give mu or radius_planck")
    return {"command": "cv fidelity", "inputs": inputs, "fidelity": tele_fidelity(mu, mt),
            "infidelity": infid.to_json()}


def rec_diamond(p: dict) -> dict:
    b = diamond_bounds_at_radius(p["eta"], p["radius_planck"])
    d = asdict(b)
    flags = _flags(asymptotic_branch=d.pop("asymptotic_branch"))
    return {"command": "channel diamond",
            "inputs": {"eta": p["eta"], "radius_planck": p["radius_planck"]}, **d, "flags": flags}


def rec_rate(p: dict) -> dict:
    params = ProtocolParams(p["N"], p["epsilon"], p["eta"], p["radius_planck"])
    d = build_report(params).to_dict()
    flags = d.pop("flags")
    errors = d.pop("errors")
    return {"command": "rate report",
            "inputs": {"eta": p["eta"], "radius_planck": p["radius_planck"], "N": p["N"],
                       "epsilon": p["epsilon"]},
            **d, "errors": errors, "flags": flags}


SWEEP_COMMANDS = {
    "bounds-bekenstein": rec_bekenstein,
    "bounds-spherical": rec_spherical,
    "bounds-thooft": rec_thooft,
    "bounds-critical": rec_critical,
    "cv-ceiling": rec_ceiling,
    "cv-fidelity": rec_fidelity,
    "channel-diamond": rec_diamond,
    "rate-report": rec_rate,
}


# ---------------------------------------------------------------- sweeps

@dataclass(frozen=True)
class SweepSpec:
    """Grid over one variable; ``fixed`` holds the other inputs."""

    variable: str
    start: float
    stop: float
    points: int
    scale: str = "linear"
    fixed: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise DomainError(f"unknown sweep variable {self.variable!r}")
        if not self.start < self.stop:
            raise DomainError("sweep needs from < to")
        if self.points < 2:
            raise DomainError("sweep needs at least 2 points")
        if self.scale not in ("linear", "log"):
            raise DomainError(f"unknown scale {self.scale!r}")
        if self.scale == "log" and self.start <= 0:
            raise DomainError("log sweep needs a positive start")

    @classmethod
    def parse(cls, text: str) -> SweepSpec:
        """Parse ``key = value`` lines; '#' starts a comment."""
        kv: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"sweep spec line {lineno}: expected key = value")
            k, v = (s.strip() for s in line.split("=", 1))
            kv[k] = v
        try:
            variable = kv.pop("variable")
            start, stop = float(kv.pop("from")), float(kv.pop("to"))
            points = int(kv.pop("points"))
        except KeyError as exc:
            raise DomainError(f"sweep spec missing key {exc.args[0]!r}") from None
        except ValueError as exc:
            raise DomainError(f"sweep spec: {exc}") from None
        scale = kv.pop("scale", "linear")
        try:
            fixed = tuple((k, float(v)) for k, v in kv.items())
        except ValueError as exc:
            raise DomainError(f"sweep spec: {exc}") from None
        return cls(variable, start, stop, points, scale, fixed)

    def grid(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


def run_sweep(spec: SweepSpec, command: str) -> list[dict]:
    if command not in SWEEP_COMMANDS:
        raise DomainError(f"unknown sweep command {command!r}; choose from {sorted(SWEEP_COMMANDS)}")
    fn = SWEEP_COMMANDS[command]
    rows = []
    for i, x in enumerate(spec.grid()):
        params: dict = dict(spec.fixed)
        params.setdefault("mu_tilde", 0.5)
        params.setdefault("epsilon", 0.0)
        params[spec.variable] = float(x)
        if "N" in params:
            params["N"] = int(round(params["N"]))
        row = {"index": i, spec.variable: float(x)}
        try:
            rec = fn(params)
            rec.pop("command", None)
            rec.pop("inputs", None)
            row.update(_flatten(rec))
            row["error"] = ""
        except HoloError as exc:
            row["error"] = exc.kind
        rows.append(row)
    return rows


# ---------------------------------------------------------------- output

def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        else:
            out[key] = v
    return out


def _fmt_text(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower() if isinstance(v, bool) else "null"
    if isinstance(v, float):
        if math.isfinite(v):
            return f"{v:.6g} ({v!r})"
        return repr(v)
    return str(v)


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return repr(v) if isinstance(v, float) else str(v)


def render(result: dict | list[dict], fmt: str) -> str:
    rows = result if isinstance(result, list) else None
    if fmt == "json":
        return json.dumps(result, allow_nan=False) + "\n"
    if fmt == "csv":
        flat = [_flatten(r) for r in (rows if rows is not None else [result])]
        fields: list[str] = []
        for r in flat:
            fields.extend(k for k in r if k not in fields)
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in flat:
            w.writerow({k: _csv_value(r.get(k)) for k in fields})
        return buf.getvalue()
    if rows is not None:
        blocks = []
        for r in rows:
            blocks.append("\n".join(f"{k} = {_fmt_text(v)}" for k, v in _flatten(r).items()))
        return "\n\n".join(blocks) + "\n"
    return "\n".join(f"{k} = {_fmt_text(v)}" for k, v in _flatten(result).items()) + "\n"


def render_table(rows: list[dict], fmt: str, name_key: str) -> str:
    """Text form for pass/fail tables: one line per row."""
    if fmt != "text":
        return render(rows, fmt)
    lines = []
    for r in rows:
        status = "PASS" if r["pass"] else "FAIL"
        detail = ", ".join(f"{k}={_short(v)}" for k, v in r.items() if k not in (name_key, "pass"))
        lines.append(f"[{status}] {r[name_key]}: {detail}")
    return "\n".join(lines) + "\n"


def _short(v) -> str:
    return f"{v:.9g}" if isinstance(v, float) else str(v)


# ---------------------------------------------------------------- argparse

def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _common(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("json", "csv", "text"), default=d if suppress else "text")
    p.add_argument("--output", type=Path, default=d)
    p.add_argument("--quad-order", type=_positive_int, default=d)
    p.add_argument("--dim", type=_positive_int, default=d)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(
        prog="holoqi", parents=[_common(suppress=False)],
        description="Holographic limits on entanglement distribution, CV teleportation and loss-channel rates.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    bounds = groups.add_parser("bounds", help="qubit/distance limits").add_subparsers(dest="sub", required=True)
    b = bounds.add_parser("bekenstein", parents=[common])
    b.add_argument("--radius", type=float, required=True, help="sphere radius [m]")
    b.add_argument("--energy", type=float, required=True, help="local energy [J]")
    b.set_defaults(handler=rec_bekenstein)
    b = bounds.add_parser("spherical", parents=[common])
    b.add_argument("--radius-planck", type=float)
    b.add_argument("--n", dest="n_qubits", type=float)
    b.set_defaults(handler=rec_spherical)
    b = bounds.add_parser("thooft", parents=[common])
    b.add_argument("--radius-planck", type=float, required=True)
    b.add_argument("--n", dest="n_qubits", type=float, required=True)
    b.set_defaults(handler=rec_thooft)
    b = bounds.add_parser("critical", parents=[common])
    b.add_argument("--n", dest="n_qubits", type=float, required=True)
    b.set_defaults(handler=rec_critical)

    cv = groups.add_parser("cv", help="CV ceilings and teleportation fidelity").add_subparsers(dest="sub", required=True)
    c = cv.add_parser("ceiling", parents=[common])
    c.add_argument("--radius-planck", type=float, required=True)
    c.set_defaults(handler=rec_ceiling)
    c = cv.add_parser("fidelity", parents=[common])
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--radius-planck", type=float)
    src.add_argument("--mu", type=float)
    c.add_argument("--mu-tilde", type=float, default=0.5)
    c.set_defaults(handler=rec_fidelity)

    ch = groups.add_parser("channel", help="diamond-distance bounds").add_subparsers(dest="sub", required=True)
    c = ch.add_parser("diamond", parents=[common])
    c.add_argument("--eta", type=float, required=True)
    c.add_argument("--radius-planck", type=float, required=True)
    c.set_defaults(handler=rec_diamond)

    rate = groups.add_parser("rate", help="rate bounds").add_subparsers(dest="sub", required=True)
    r = rate.add_parser("report", parents=[common])
    r.add_argument("--eta", type=float, required=True)
    r.add_argument("--radius-planck", type=float, required=True)
    r.add_argument("--n-uses", dest="N", type=_positive_int, default=1)
    r.add_argument("--epsilon", type=float, default=0.0)
    r.set_defaults(handler=rec_rate)

    paper = groups.add_parser("paper", help="printed reference values").add_subparsers(dest="sub", required=True)
    paper.add_parser("reproduce", parents=[common]).set_defaults(handler=None)

    v = groups.add_parser("verify", parents=[common], help="Fock-space oracle cross-checks")
    v.add_argument("--level", choices=("fast", "full"), default="fast")

    s = groups.add_parser("sweep", parents=[common], help="evaluate a command over a grid")
    s.add_argument("--spec", type=Path, required=True)
    s.add_argument("--command", required=True, choices=sorted(SWEEP_COMMANDS))
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[str, int]:
    fmt = args.format
    if args.group == "paper":
        rows = golden.reproduce()
        return render_table(rows, fmt, "name"), 0 if all(r["pass"] for r in rows) else 1
    if args.group == "verify":
        rows = verify.run(args.level, args.dim, args.quad_order)
        return render_table(rows, fmt, "check"), 0 if all(r["pass"] for r in rows) else 1
    if args.group == "sweep":
        try:
            text = args.spec.read_text(encoding="utf-8")
        except OSError as exc:
            raise DomainError(f"cannot read sweep spec: {exc}") from None
        rows = run_sweep(SweepSpec.parse(text), args.command)
        return render(rows, "csv" if fmt == "text" else fmt), 0
    params = {k: v for k, v in vars(args).items() if k not in ("group", "sub", "handler")}
    return render(args.handler(params), fmt), 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = _dispatch(args)
    except HoloError as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return 1
    if args.output is not None:
        args.output.write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

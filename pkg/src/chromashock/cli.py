"""Command-line surface: analysis and validation workflows with JSON/CSV output.

Subcommands
-----------
classify    Classify a Riemann datum and report singular-shock data if present.
solve       Construct the full wave pattern for a Riemann datum.
profile     Sample the self-similar solution profile on a xi-grid (CSV).
curves      Sample the wave curves through a left state (CSV).
inner       Integrate the inner homoclinic orbit and fit its tail asymptotics.
gspt-check  Report reduced-slice roots and transversal eigenvalues.
simulate    Run the finite-volume scheme and write the final snapshot (CSV).
validate    Cross-check the measured finite-volume front speed against the
            exact wave speed for the same datum.

All structured reports are JSON with stable key order and floats formatted
at 12 significant digits, so identical inputs produce byte-identical output.
Sampled fields go to CSV.  A flat JSON config file named by the
``CHROMA_CONFIG`` environment variable supplies defaults; command-line flags
override it.  Exit status: 0 on success, 1 on a domain error, 2 on an
internal-consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from .errors import ChromaError, DomainError, InternalConsistencyError
from .model_core import DEFAULT_PARAMS, PhysParams, State
from . import wave_curves as wc
from . import riemann
from . import inner_orbit
from . import gspt
from . import fv_validate as fv


# ---------------------------------------------------------------------------
# serialization helpers


def _fmt(x) -> str:
    """Serialize one JSON value with fixed 12-significant-digit floats."""
    if isinstance(x, bool) or x is None:
        return json.dumps(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return json.dumps(x)
    if isinstance(x, dict):
        items = ", ".join(f"{json.dumps(k)}: {_fmt(v)}" for k, v in x.items())
        return "{" + items + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(report: dict) -> str:
    """Deterministic JSON text for a report dict (insertion key order)."""
    return _fmt(report)


def _emit(report: dict, out_dir: str | None, name: str) -> None:
    text = dumps(report)
    print(text)
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, name), "w") as fh:
            fh.write(text + "\n")


def _write_csv(out_dir: str | None, name: str, header, rows):
    if out_dir is None:
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(rows)
        return
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, name), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _state_dict(U: State) -> dict:
    return {"v": U.v, "y": U.y}


def _wave_dict(w) -> dict:
    d = {"type": type(w).__name__}
    if hasattr(w, "family"):
        d["family"] = w.family
    if hasattr(w, "speed"):
        d["speed"] = w.speed
    else:
        d["xi_lo"] = w.xi_lo
        d["xi_hi"] = w.xi_hi
    if hasattr(w, "deficit"):
        d["deficit"] = w.deficit
    d["left"] = _state_dict(w.left)
    d["right"] = _state_dict(w.right)
    return d


# ---------------------------------------------------------------------------
# configuration


_CONFIG_KEYS = ("ul", "ur", "alpha1", "alpha2", "n", "cfl", "t_end",
                "beta1", "beta2", "beta3", "beta4", "out", "tol")


def load_config() -> dict:
    """Defaults from the flat JSON file named by CHROMA_CONFIG, if set."""
    path = os.environ.get("CHROMA_CONFIG")
    if not path:
        return {}
    with open(path) as fh:
        cfg = json.load(fh)
    unknown = set(cfg) - set(_CONFIG_KEYS)
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def _get(args, cfg, key, default=None):
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    return cfg.get(key, default)


def _parse_state(text) -> State:
    if isinstance(text, (list, tuple)):
        v, y = text
        return State(float(v), float(y))
    try:
        v_str, y_str = text.split(",")
        return State(float(v_str), float(y_str))
    except (ValueError, AttributeError):
        raise DomainError(f"expected state as 'v,y', got {text!r}")


def _params(args, cfg) -> PhysParams:
    a1 = _get(args, cfg, "alpha1", DEFAULT_PARAMS.alpha1)
    a2 = _get(args, cfg, "alpha2", DEFAULT_PARAMS.alpha2)
    return PhysParams(alpha1=float(a1), alpha2=float(a2))


def _exponents(args, cfg) -> gspt.RegularizationExponents:
    d = gspt.DEFAULT_EXPONENTS
    return gspt.RegularizationExponents(
        beta1=float(_get(args, cfg, "beta1", d.beta1)),
        beta2=float(_get(args, cfg, "beta2", d.beta2)),
        beta3=float(_get(args, cfg, "beta3", d.beta3)),
        beta4=float(_get(args, cfg, "beta4", d.beta4)),
    )


def _require_pair(args, cfg) -> tuple:
    ul = _get(args, cfg, "ul")
    ur = _get(args, cfg, "ur")
    if ul is None or ur is None:
        raise DomainError("this subcommand requires --ul and --ur")
    return _parse_state(ul), _parse_state(ur)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args, cfg):
    UL, UR = _require_pair(args, cfg)
    params = _params(args, cfg)
    region = riemann.classify_pair(UL, UR, params=params)
    report = {"region": region}
    if region == 6:
        data = riemann.singular_shock_data(UL, UR, params=params)
        report["s"] = data.s
        report["k"] = data.k
        report["overcompressive"] = bool(data.oc1 and data.oc2)
    _emit(report, _get(args, cfg, "out"), "classify.json")


def _cmd_solve(args, cfg):
    UL, UR = _require_pair(args, cfg)
    sol = riemann.solve(UL, UR, params=_params(args, cfg))
    report = {
        "region": sol.region,
        "waves": [_wave_dict(w) for w in sol.waves],
        "states": [_state_dict(U) for U in sol.states],
    }
    _emit(report, _get(args, cfg, "out"), "solve.json")


def _cmd_profile(args, cfg):
    UL, UR = _require_pair(args, cfg)
    sol = riemann.solve(UL, UR, params=_params(args, cfg))
    n = int(_get(args, cfg, "n", 400))
    speeds = [s for w in sol.waves
              for s in ([w.speed] if hasattr(w, "speed")
                        else [w.xi_lo, w.xi_hi])]
    lo = min(speeds, default=0.0) - 0.5
    hi = max(speeds, default=0.0) + 0.5
    rows = []
    for xi in np.linspace(lo, hi, n):
        U, _ = riemann.evaluate(sol, float(xi))
        rows.append((f"{xi:.12g}", f"{U.v:.12g}", f"{U.y:.12g}"))
    _write_csv(_get(args, cfg, "out"), "profile.csv", ("xi", "v", "y"), rows)


def _cmd_curves(args, cfg):
    ul = _get(args, cfg, "ul")
    if ul is None:
        raise DomainError("curves requires --ul")
    UL = _parse_state(ul)
    params = _params(args, cfg)
    n = int(_get(args, cfg, "n", 200))
    rows = []
    for kind in (wc.CurveKind.R1, wc.CurveKind.R2,
                 wc.CurveKind.S1, wc.CurveKind.S2):
        curve = wc.Curve(kind=kind, base=UL)
        for v in np.linspace(0.2 * UL.v, 5.0 * UL.v, n):
            try:
                y = wc.eval_curve(curve, float(v), params=params)
            except DomainError:
                continue
            rows.append((f"{v:.12g}", f"{y:.12g}", kind.name))
    _write_csv(_get(args, cfg, "out"), "curves.csv", ("v", "y", "curve_id"),
               rows)


def _cmd_inner(args, cfg):
    tol = float(_get(args, cfg, "tol", 1e-10))
    orbit = inner_orbit.integrate_homoclinic((1.0, 1.0), tol=tol)
    fit = inner_orbit.fit_asymptotics(orbit)
    report = {
        "eta_min": float(orbit.eta[0]),
        "eta_max": float(orbit.eta[-1]),
        "c": fit.c, "d": fit.d, "p": fit.p, "r": fit.r,
    }
    out = _get(args, cfg, "out")
    _emit(report, out, "inner.json")
    if out is not None:
        rows = [(f"{e:.12g}", f"{a:.12g}", f"{b:.12g}")
                for e, a, b in zip(orbit.eta, orbit.y1, orbit.y2)]
        _write_csv(out, "inner_orbit.csv", ("eta", "y1", "y2"), rows)


def _cmd_gspt_check(args, cfg):
    reports = gspt.equilibria_and_eigen(_exponents(args, cfg))
    report = {
        "roots": [r.a_value for r in reports],
        "equilibria": [
            {"a": r.a_value, "eigen_a": r.eigen_a, "eigen_r": r.eigen_r,
             "eigen_b": r.eigen_b, "stability": r.stability}
            for r in reports
        ],
    }
    _emit(report, _get(args, cfg, "out"), "gspt_check.json")


def _sim(args, cfg):
    UL, UR = _require_pair(args, cfg)
    params = _params(args, cfg)
    n = int(_get(args, cfg, "n", 1000))
    config = fv.SimConfig(cfl=float(_get(args, cfg, "cfl", 0.45)),
                          t_end=float(_get(args, cfg, "t_end", 1.0)))
    grid = fv.Grid1D(-1.0, 2.0, n)
    times = list(np.linspace(0.2 * config.t_end, config.t_end, 9))
    snaps = fv.simulate(UL, UR, grid, config, snapshot_times=times,
                        params=params)
    return UL, UR, params, snaps


def _cmd_simulate(args, cfg):
    UL, UR, params, snaps = _sim(args, cfg)
    final = snaps[-1]
    out = _get(args, cfg, "out")
    rows = [(f"{x:.12g}", f"{v:.12g}", f"{y:.12g}")
            for x, v, y in zip(final.x, final.v, final.y)]
    _write_csv(out, "final_snapshot.csv", ("x", "v", "y"), rows)
    if out is not None:
        _emit({"t_final": final.t,
               "front_speed": fv.measure_front_speed(snaps)},
              out, "simulate.json")


def _cmd_validate(args, cfg):
    UL, UR, params, snaps = _sim(args, cfg)
    region = riemann.classify_pair(UL, UR, params=params)
    if region == 6:
        exact = riemann.singular_shock_data(UL, UR, params=params).s
    else:
        sol = riemann.solve(UL, UR, params=params)
        shocks = [w for w in sol.waves if hasattr(w, "speed")]
        if not shocks:
            raise DomainError("validate needs a datum with a shock front")
        exact = shocks[-1].speed
    measured = fv.measure_front_speed(snaps)
    report = {
        "region": region,
        "exact_speed": exact,
        "measured_speed": measured,
        "rel_err": abs(measured - exact) / abs(exact),
    }
    _emit(report, _get(args, cfg, "out"), "validate.json")


_COMMANDS = {
    "classify": _cmd_classify,
    "solve": _cmd_solve,
    "profile": _cmd_profile,
    "curves": _cmd_curves,
    "inner": _cmd_inner,
    "gspt-check": _cmd_gspt_check,
    "simulate": _cmd_simulate,
    "validate": _cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromashock",
        description="Exact Riemann solver and singular-shock analysis "
                    "toolkit for a 2x2 chromatography system.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--ul", help="left state as 'v,y'")
        p.add_argument("--ur", help="right state as 'v,y'")
        p.add_argument("--alpha1", type=float)
        p.add_argument("--alpha2", type=float)
        p.add_argument("--n", type=int)
        p.add_argument("--cfl", type=float)
        p.add_argument("--t-end", type=float, dest="t_end")
        p.add_argument("--beta1", type=float)
        p.add_argument("--beta2", type=float)
        p.add_argument("--beta3", type=float)
        p.add_argument("--beta4", type=float)
        p.add_argument("--out", help="directory for file artifacts")
        p.add_argument("--tol", type=float)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config()
        _COMMANDS[args.command](args, cfg)
    except InternalConsistencyError as exc:
        print(f"internal-consistency failure: {exc}", file=sys.stderr)
        return 2
    except ChromaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

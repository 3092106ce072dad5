"""Command-line front end: sweeps, comparisons, convergence and self tests.

Every run resolves its configuration (config file plus flag overrides),
embeds it in the output header, computes the requested grid and writes rows
sorted deterministically, so identical configs produce byte-identical output
regardless of the worker count.

Exit codes: 0 success; 1 configuration error; 2 numerical non-convergence
(partial rows are still written, marked in the status column); 3 golden-file
mismatch beyond stored tolerances.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import dataclasses
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .asymptotics import high_T_expansion, pfa_energy, zero_T_expansion
from .errors import NonConvergenceError, OutOfRegimeError
from .exact import force as force_fn, free_energy, zero_T_energy
from .geometry import Geometry, TruncationPolicy
from .modes import BoundaryPair, Channel
from .selftest import fit_mixed_log_reading, run_selftest

RESULT_FIELDS = ("D", "a1", "a2", "eps", "T", "bc_inner", "bc_outer", "channel",
                 "method", "energy", "force", "l_used", "p_used",
                 "error_estimate", "status")

_MODES = ("point", "sweep", "compare", "convergence", "selftest")
_CHANNELS = {"te": Channel.TE, "tm": Channel.TM, "total": None}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = "point"
    dims: list[int] = field(default_factory=lambda: [3])
    eps_list: list[float] = field(default_factory=lambda: [0.1])
    temps: list[float] = field(default_factory=lambda: [0.0])
    bc_pairs: list[str] = field(default_factory=lambda: ["pc,pc"])
    channels: list[str] = field(default_factory=lambda: ["total"])
    rel_tol: float = 1e-9
    l_max_hard: int = 20000
    p_max_hard: int = 10**6
    fmt: str = "csv"
    out: str = "-"
    threads: int = 1
    golden: Optional[str] = None
    with_force: bool = False

    def validate(self) -> None:
        if self.mode not in _MODES:
            raise ConfigError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if not self.dims or any(not (3 <= d <= 16) for d in self.dims):
            raise ConfigError("dims must be integers in [3, 16]")
        if not self.eps_list or any(e <= 0 for e in self.eps_list):
            raise ConfigError("eps values must be positive")
        if not self.temps or any(t < 0 for t in self.temps):
            raise ConfigError("temperatures must be >= 0")
        if not self.bc_pairs:
            raise ConfigError("at least one boundary pair is required")
        for bc in self.bc_pairs:
            try:
                BoundaryPair.from_string(bc)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        for ch in self.channels:
            if ch not in _CHANNELS:
                raise ConfigError(f"channel must be te/tm/total, got {ch!r}")
        if not (0 < self.rel_tol <= 1e-3):
            raise ConfigError("rel-tol must lie in (0, 1e-3]")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.fmt!r}")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.mode == "point" and (len(self.dims) * len(self.eps_list)
                                     * len(self.temps) * len(self.bc_pairs)) != 1:
            raise ConfigError("mode=point takes exactly one (dim, eps, T, bc) point")

    def policy(self) -> TruncationPolicy:
        return TruncationPolicy(rel_tol=self.rel_tol, l_max_hard=self.l_max_hard,
                                p_max_hard=self.p_max_hard)


def _parse_floats(text: str) -> list[float]:
    """Comma list, or lo:hi:n for a logarithmic range."""
    text = text.strip()
    if ":" in text:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
        if lo <= 0 or hi <= 0 or n < 1:
            raise ConfigError(f"bad log range {text!r}")
        if n == 1:
            return [lo]
        r = (hi / lo) ** (1.0 / (n - 1))
        return [lo * r ** i for i in range(n)]
    return [float(p) for p in text.split(",") if p.strip()]


def _load_config_file(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value, got {raw!r}")
            key, val = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = val
    return out


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="casimir-spheres", add_help=True,
        description="Casimir interaction of concentric hyperspheres: exact, "
                    "PFA and small-gap expansion evaluations.")
    p.add_argument("--config", help="flat key=value config file; flags override")
    p.add_argument("--mode", choices=_MODES)
    p.add_argument("--dim", help="comma list of space dimensions (3..16)")
    p.add_argument("--eps", help="comma list or lo:hi:n log range of gaps")
    p.add_argument("--temp", help="comma list of temperatures (units 1/a1)")
    p.add_argument("--bc", action="append",
                   help="inner,outer boundary pair from {pc, ip}; repeatable")
    p.add_argument("--channel", help="comma list from {te, tm, total}")
    p.add_argument("--rel-tol", type=float, dest="rel_tol")
    p.add_argument("--l-max", type=int, dest="l_max_hard")
    p.add_argument("--p-max", type=int, dest="p_max_hard")
    p.add_argument("--format", choices=("csv", "json"), dest="fmt")
    p.add_argument("--out", help="output path, '-' for stdout")
    p.add_argument("--threads", type=int)
    p.add_argument("--golden", help="compare against a stored result file; exit 3 on drift")
    p.add_argument("--force", action="store_true", dest="with_force",
                   help="add central-difference forces to exact total rows")
    return p


_CONFIG_ALIASES = {"format": "fmt", "l_max": "l_max_hard", "p_max": "p_max_hard",
                   "force": "with_force"}


def build_config(argv) -> RunConfig:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig()
    settings = {}
    if args.config:
        for key, val in _load_config_file(args.config).items():
            settings[_CONFIG_ALIASES.get(key, key)] = val
    for key in ("mode", "dim", "eps", "temp", "bc", "channel", "rel_tol",
                "l_max_hard", "p_max_hard", "fmt", "out", "threads", "golden",
                "with_force"):
        v = getattr(args, key, None)
        if v is not None and v is not False:
            settings[key] = v
    try:
        if "mode" in settings:
            cfg.mode = str(settings["mode"])
        if "dim" in settings:
            cfg.dims = [int(x) for x in str(settings["dim"]).split(",") if x.strip()]
        if "eps" in settings:
            cfg.eps_list = _parse_floats(str(settings["eps"]))
        if "temp" in settings:
            cfg.temps = _parse_floats(str(settings["temp"]))
        if "bc" in settings:
            v = settings["bc"]
            cfg.bc_pairs = list(v) if isinstance(v, list) else \
                [s for s in str(v).split(";") if s.strip()]
        if "channel" in settings:
            cfg.channels = [s.strip().lower()
                            for s in str(settings["channel"]).split(",") if s.strip()]
        for key, cast in (("rel_tol", float), ("l_max_hard", int),
                          ("p_max_hard", int), ("threads", int)):
            if key in settings:
                setattr(cfg, key, cast(settings[key]))
        if "fmt" in settings:
            cfg.fmt = str(settings["fmt"])
        if "out" in settings:
            cfg.out = str(settings["out"])
        if "golden" in settings:
            cfg.golden = str(settings["golden"])
        if "with_force" in settings:
            cfg.with_force = settings["with_force"] in (True, "1", "true", "yes")
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


def _compute_point(task) -> list[dict]:
    """All rows for one (dim, eps, T, bc) grid point; runs in a worker."""
    dim, eps, temp, bc_str, channels, rel_tol, l_max, p_max, with_force = task
    bc = BoundaryPair.from_string(bc_str)
    geom = Geometry.from_eps(eps, dim)
    policy = TruncationPolicy(rel_tol=rel_tol, l_max_hard=l_max, p_max_hard=p_max)
    rows = []

    def row(channel_name, method, energy, l_used=0, p_used=0, err=None,
            frc=None, status="ok"):
        rows.append({"D": dim, "a1": geom.a1, "a2": geom.a2, "eps": eps,
                     "T": temp, "bc_inner": bc.inner.value,
                     "bc_outer": bc.outer.value, "channel": channel_name,
                     "method": method, "energy": energy, "force": frc,
                     "l_used": l_used, "p_used": p_used,
                     "error_estimate": err, "status": status})

    regime = "zeroT" if temp == 0.0 else "highT"
    for ch_name in channels:
        ch = _CHANNELS[ch_name]
        label = "total" if ch is None else ch.value
        # exact
        try:
            if temp == 0.0:
                res = zero_T_energy(geom, bc, ch, policy)
            else:
                res = free_energy(geom, bc, ch, temp, policy)
            frc = None
            if with_force and ch is None:
                frc = force_fn(geom, bc, temp, policy)
            row(label, "exact", res.value, res.l_used, res.p_used,
                res.error_estimate, frc)
        except NonConvergenceError as exc:
            row(label, "exact", exc.partial if exc.partial is not None
                else math.nan, status="failed")
        # pfa
        from .asymptotics import _channel_weight
        w = _channel_weight(dim, ch)
        pfa = w * pfa_energy(geom, bc, regime, temp)
        row(label, "pfa", pfa)
        # expansion
        try:
            if temp == 0.0:
                ser = zero_T_expansion(dim, bc, ch)
                val = ser.evaluate(eps) / geom.a1
            else:
                ser = high_T_expansion(dim, bc, ch)
                val = ser.evaluate(eps) * temp
            row(label, "expansion", val)
        except OutOfRegimeError:
            pass  # expansions refuse eps > 0.5; no row
    return rows


def _grid(cfg: RunConfig):
    for dim in cfg.dims:
        for eps in cfg.eps_list:
            for temp in cfg.temps:
                for bc in cfg.bc_pairs:
                    yield (dim, eps, temp, bc, tuple(cfg.channels), cfg.rel_tol,
                           cfg.l_max_hard, cfg.p_max_hard, cfg.with_force)


def _run_grid(cfg: RunConfig) -> list[dict]:
    tasks = list(_grid(cfg))
    if cfg.threads > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.threads) as ex:
            all_rows = [r for rows in ex.map(_compute_point, tasks) for r in rows]
    else:
        all_rows = [r for t in tasks for r in _compute_point(t)]
    order = {"exact": 0, "pfa": 1, "expansion": 2}
    all_rows.sort(key=lambda r: (r["D"], r["eps"], r["T"], r["bc_inner"],
                                 r["bc_outer"], r["channel"], order[r["method"]]))
    return all_rows


def convergence_report(cfg: RunConfig) -> list[dict]:
    """Energy against (l_max, p_max) caps for the configured grid point."""
    rows = []
    for dim, eps, temp, bc_str, _chs, rel_tol, l_max, p_max, _f in _grid(cfg):
        bc = BoundaryPair.from_string(bc_str)
        geom = Geometry.from_eps(eps, dim)
        full = TruncationPolicy(rel_tol=rel_tol, l_max_hard=l_max, p_max_hard=p_max)
        res = (zero_T_energy(geom, bc, None, full) if temp == 0.0
               else free_energy(geom, bc, None, temp, full))
        ladder = sorted({max(1, int(res.l_used * f)) for f in
                         (0.25, 0.5, 0.75, 1.0, 1.5)})
        for lcap in ladder:
            pcap = max(1, res.p_used * 2) if temp > 0 else p_max
            pol = TruncationPolicy(rel_tol=rel_tol, l_max_hard=lcap,
                                   p_max_hard=max(pcap, 1))
            try:
                r = (zero_T_energy(geom, bc, None, pol) if temp == 0.0
                     else free_energy(geom, bc, None, temp, pol))
                energy, err, status = r.value, r.error_estimate, "ok"
                l_used, p_used = r.l_used, r.p_used
            except NonConvergenceError as exc:
                energy, err, status = exc.partial, None, "failed"
                l_used, p_used = lcap, pcap
            rows.append({"D": dim, "a1": geom.a1, "a2": geom.a2, "eps": eps,
                         "T": temp, "bc_inner": bc.inner.value,
                         "bc_outer": bc.outer.value, "channel": "total",
                         "method": "exact", "energy": energy, "force": None,
                         "l_used": l_used, "p_used": p_used,
                         "error_estimate": err, "status": status})
    return rows


def _fmt_num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.16e}"  # 17 significant digits
    return str(x)


# Keys that do not influence the numbers; excluded from the embedded config
# so output is byte-identical regardless of worker count or output routing.
_RUNTIME_ONLY = ("threads", "out", "golden")


def _embedded_config(cfg: RunConfig) -> dict:
    d = dataclasses.asdict(cfg)
    for key in _RUNTIME_ONLY:
        d.pop(key, None)
    return d


def render_csv(cfg: RunConfig, rows: list[dict]) -> str:
    lines = [f"# casimir-spheres {__version__}"]
    for key, val in sorted(_embedded_config(cfg).items()):
        lines.append(f"# {key} = {val}")
    lines.append(",".join(RESULT_FIELDS))
    for r in rows:
        lines.append(",".join(_fmt_num(r[k]) for k in RESULT_FIELDS))
    return "\n".join(lines) + "\n"


def render_json(cfg: RunConfig, rows: list[dict]) -> str:
    doc = {"metadata": {"version": __version__,
                        "config": _embedded_config(cfg)},
           "rows": rows}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_output(text: str) -> list[dict]:
    """Read back rows from either output format (used by --golden)."""
    text = text.lstrip()
    if text.startswith("{"):
        return json.loads(text)["rows"]
    rows = []
    header = None
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split(",")
            continue
        vals = line.split(",")
        row = dict(zip(header, vals))
        for key in ("energy", "error_estimate", "force", "eps", "T", "a1", "a2"):
            if key in row:
                row[key] = float(row[key]) if row[key] else None
        rows.append(row)
    return rows


def compare_golden(rows: list[dict], golden_path: str, rel_tol: float) -> list[str]:
    with open(golden_path, encoding="utf-8") as fh:
        stored = parse_output(fh.read())
    key = lambda r: (str(r["D"]), f"{float(r['eps']):.12g}", f"{float(r['T']):.12g}",
                     r["bc_inner"], r["bc_outer"], r["channel"], r["method"])
    mine = {key(r): r for r in rows}
    theirs = {key(r): r for r in stored}
    problems = []
    for k, them in theirs.items():
        if k not in mine:
            problems.append(f"missing row {k}")
            continue
        e_new, e_old = mine[k]["energy"], them["energy"]
        if e_old is None or e_new is None:
            continue
        tol = max(10.0 * rel_tol * abs(e_old),
                  10.0 * (them.get("error_estimate") or 0.0),
                  10.0 * (mine[k].get("error_estimate") or 0.0), 1e-300)
        if abs(e_new - e_old) > tol:
            problems.append(
                f"row {k}: energy {e_new:.12e} drifted from stored {e_old:.12e} "
                f"(tolerance {tol:.3e})")
    return problems


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.mode == "selftest":
        results = run_selftest()
        report = fit_mixed_log_reading()
        lines = ["casimir-spheres selftest", "-" * 64]
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL':4}  {r.name}: {r.detail}")
        lines.append("-" * 64)
        lines.append("mixed D=3 classical log-term fit report:")
        lines.append(json.dumps(report, indent=1, sort_keys=True))
        _write(cfg, "\n".join(lines) + "\n")
        return 0 if all(r.passed for r in results) else 2
    rows = convergence_report(cfg) if cfg.mode == "convergence" else _run_grid(cfg)
    text = render_csv(cfg, rows) if cfg.fmt == "csv" else render_json(cfg, rows)
    _write(cfg, text)
    if cfg.golden:
        problems = compare_golden(rows, cfg.golden, cfg.rel_tol)
        if problems:
            for p in problems:
                print(f"golden mismatch: {p}", file=sys.stderr)
            return 3
    if any(r["status"] == "failed" for r in rows):
        return 2
    return 0


def main(argv=None) -> int:
    try:
        cfg = build_config(sys.argv[1:] if argv is None else argv)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        # argparse's own exits: remap parse failures to the config-error code
        return 0 if exc.code in (0, None) else 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

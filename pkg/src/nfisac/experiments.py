"""Named experiments with CSV/JSON emission.

Each experiment reproduces one figure-level study: rate-versus-SNR sweeps,
rate-versus-element-count ladders, rate-versus-distance sweeps, SR-CR region
frontiers, and the channel-correlation-factor ladder.  Outputs are one CSV
per figure panel (header row, sweep variable first, shortest round-trip
float formatting, '\n' line endings) plus a ``summary.json`` echoing the
effective configuration and derived constants.

Configuration precedence: command-line flags beat the TOML config file,
which beats built-in defaults.  All powers in config files and flags are
expressed in dB relative to unit noise power and converted via 10^(dB/10).
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Callable, Sequence

import tomli

from .channels import (
    ChannelModel,
    ChannelVector,
    build_channel,
    closed_form_norm_sq,
    norm_sq,
)
from .dl_rates import (
    RatePair,
    SystemParams,
    asymptotic_limit,
    cc_rates,
    fdsac_rates,
    high_snr_approx,
    sc_rates,
    tau_rate_pair,
)
from .errors import ConfigError, UnsupportedModelError
from .geometry import ArrayGeometry, Placement
from .oracles import ccf_limit_estimate, default_ccf_ladder, uniform_placement_sampler
from .ul_rates import (
    time_sharing,
    ul_asymptotic_limit,
    ul_cc_rates,
    ul_cc_sr_lower,
    ul_fdsac_rates,
    ul_sc_cr_lower,
    ul_sc_rates,
)

EXPERIMENTS = (
    "dl_snr",
    "dl_n",
    "dl_r",
    "dl_region",
    "ul_snr",
    "ul_n",
    "ul_region",
    "ccf",
)

DEFAULT_WAVELENGTH = 0.125
DEFAULT_SPACING = DEFAULT_WAVELENGTH / 2.0
DEFAULT_AREA = DEFAULT_WAVELENGTH**2 / (4.0 * math.pi)
DEFAULT_CU = (10.0, math.pi / 4.0, math.pi / 6.0)
DEFAULT_TARGET = (5.0, math.pi / 4.0, -math.pi / 6.0)
DEFAULT_P_DB = 90.0
DEFAULT_PC_DB = 60.0
DEFAULT_PS_DB = 85.0

_COUNT_LADDER = (15, 31, 63, 127, 255, 501, 1001)
_CCF_LADDER = (15, 31, 63, 127, 255, 501)
_ALL_MODELS = ("accurate", "nopolar", "upw", "usw", "nusw")


def db_to_linear(db: float) -> float:
    """Convert a dB power (relative to unit noise) to linear scale."""
    return 10.0 ** (db / 10.0)


@dataclass(frozen=True)
class SweepSpec:
    """A one-dimensional sweep: either an explicit value list or a range."""

    start: float = 0.0
    stop: float = 1.0
    points: int = 2
    scale: str = "linear"
    values: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.values is not None:
            if len(self.values) < 2:
                raise ConfigError("sweep needs at least 2 values")
            return
        if self.points < 2:
            raise ConfigError("sweep points must be >= 2")
        if self.scale not in ("linear", "log"):
            raise ConfigError(f"unknown sweep scale {self.scale!r}")
        if self.scale == "log" and (self.start <= 0.0 or self.stop <= 0.0):
            raise ConfigError("log sweep endpoints must be positive")

    def grid(self) -> list[float]:
        if self.values is not None:
            return [float(v) for v in self.values]
        n = self.points
        if self.scale == "linear":
            step = (self.stop - self.start) / (n - 1)
            pts = [self.start + k * step for k in range(n)]
        else:
            ratio = math.log(self.stop / self.start) / (n - 1)
            pts = [self.start * math.exp(k * ratio) for k in range(n)]
        pts[-1] = self.stop
        return pts

    def int_grid(self) -> list[int]:
        vals = [int(round(v)) for v in self.grid()]
        out: list[int] = []
        for v in vals:
            if v < 1:
                raise ConfigError("element-count sweep values must be >= 1")
            if v % 2 == 0:
                v += 1
            if not out or v != out[-1]:
                out.append(v)
        if len(out) < 2:
            raise ConfigError("element-count sweep collapsed below 2 distinct values")
        return out


_DEFAULT_SWEEPS: dict[str, tuple[SweepSpec, SweepSpec | None]] = {
    # (primary sweep, secondary sweep or None)
    "dl_snr": (SweepSpec(60.0, 120.0, 31), None),
    "dl_n": (SweepSpec(values=_COUNT_LADDER), None),
    "dl_r": (SweepSpec(5.0, 100.0, 25, scale="log"), None),
    "dl_region": (SweepSpec(0.0, 1.0, 201), SweepSpec(0.0, 1.0, 101)),
    "ul_snr": (SweepSpec(40.0, 100.0, 31), SweepSpec(60.0, 110.0, 26)),
    "ul_n": (SweepSpec(values=_COUNT_LADDER), None),
    "ul_region": (SweepSpec(0.0, 1.0, 201), SweepSpec(0.0, 1.0, 101)),
    "ccf": (SweepSpec(values=_CCF_LADDER), None),
}

_DEFAULT_MODELS: dict[str, tuple[str, ...]] = {
    "dl_snr": ("accurate",),
    "dl_n": _ALL_MODELS,
    "dl_r": _ALL_MODELS,
    "dl_region": ("accurate",),
    "ul_snr": ("accurate",),
    "ul_n": _ALL_MODELS,
    "ul_region": ("accurate",),
    "ccf": ("accurate", "nopolar"),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Effective configuration for one experiment run."""

    experiment: str
    n_y: int = 15
    n_z: int = 15
    spacing: float = DEFAULT_SPACING
    wavelength: float = DEFAULT_WAVELENGTH
    area: float = DEFAULT_AREA
    cu: tuple[float, float, float] = DEFAULT_CU
    target: tuple[float, float, float] = DEFAULT_TARGET
    p_db: float = DEFAULT_P_DB
    p_c_db: float = DEFAULT_PC_DB
    p_s_db: float = DEFAULT_PS_DB
    l_frame: int = 4
    alpha_s: float = 1.0
    kappa: float = 0.5
    iota: float = 0.5
    models: tuple[str, ...] | None = None
    sweep: SweepSpec | None = None
    sweep2: SweepSpec | None = None
    ccf_samples: int = 10_000
    out: str = "runs"
    seed: int = 42
    threads: int | None = None

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(
                f"unknown experiment {self.experiment!r}; expected one of {EXPERIMENTS}"
            )
        for name in ("p_db", "p_c_db", "p_s_db"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ConfigError(f"{name} must be finite, got {v!r}")
        if self.models is not None:
            for m in self.models:
                try:
                    ChannelModel.from_string(m)
                except UnsupportedModelError as exc:
                    raise ConfigError(str(exc)) from exc
        if self.ccf_samples < 100:
            raise ConfigError("ccf_samples must be >= 100")
        if self.threads is not None and self.threads < 1:
            raise ConfigError("threads must be >= 1")

    # -- derived views ----------------------------------------------------
    def geometry(self, n_y: int | None = None, n_z: int | None = None) -> ArrayGeometry:
        return ArrayGeometry(
            n_y=n_y if n_y is not None else self.n_y,
            n_z=n_z if n_z is not None else self.n_z,
            d=self.spacing,
            area=self.area,
            wavelength=self.wavelength,
        )

    def placements(
        self, r_c: float | None = None, r_s: float | None = None
    ) -> tuple[Placement, Placement]:
        rc, tc, pc = self.cu
        rs, ts, ps = self.target
        return (
            Placement(r_c if r_c is not None else rc, tc, pc),
            Placement(r_s if r_s is not None else rs, ts, ps),
        )

    def system_params(
        self,
        p_db: float | None = None,
        p_c_db: float | None = None,
        p_s_db: float | None = None,
    ) -> SystemParams:
        return SystemParams(
            p=db_to_linear(p_db if p_db is not None else self.p_db),
            p_c=db_to_linear(p_c_db if p_c_db is not None else self.p_c_db),
            p_s=db_to_linear(p_s_db if p_s_db is not None else self.p_s_db),
            l_frame=self.l_frame,
            alpha_s=self.alpha_s,
            kappa=self.kappa,
            iota=self.iota,
        )

    def model_list(self) -> tuple[str, ...]:
        if self.models is not None:
            return self.models
        return _DEFAULT_MODELS[self.experiment]

    def primary_sweep(self) -> SweepSpec:
        return self.sweep if self.sweep is not None else _DEFAULT_SWEEPS[self.experiment][0]

    def secondary_sweep(self) -> SweepSpec | None:
        if self.sweep2 is not None:
            return self.sweep2
        return _DEFAULT_SWEEPS[self.experiment][1]

    @property
    def aor(self) -> float:
        return self.area / self.spacing**2


# --------------------------------------------------------------------------
# Config file handling
# --------------------------------------------------------------------------


def _sweep_from_table(table: dict) -> SweepSpec:
    if "values" in table:
        return SweepSpec(values=tuple(float(v) for v in table["values"]))
    kwargs = {}
    for key in ("start", "stop", "scale"):
        if key in table:
            kwargs[key] = table[key]
    if "points" in table:
        kwargs["points"] = int(table["points"])
    try:
        return SweepSpec(**kwargs)
    except TypeError as exc:
        raise ConfigError(f"bad [sweep] table: {exc}") from exc


def _place_from_table(table: dict, fallback: tuple[float, float, float]) -> tuple:
    return (
        float(table.get("r", fallback[0])),
        float(table.get("theta", fallback[1])),
        float(table.get("phi", fallback[2])),
    )


def load_config_file(path: str | Path) -> dict:
    """Parse a TOML config file into a plain dict; raise ConfigError on failure."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    try:
        with open(p, "rb") as fh:
            return tomli.load(fh)
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"config file {p} is not valid TOML: {exc}") from exc


def build_config(
    experiment: str,
    file_cfg: dict | None = None,
    *,
    out: str | None = None,
    seed: int | None = None,
    threads: int | None = None,
    models: Sequence[str] | None = None,
) -> ExperimentConfig:
    """Merge defaults, config-file values, and flag overrides (flags win)."""
    raw = dict(file_cfg or {})
    kwargs: dict = {"experiment": experiment}

    geom = raw.get("geometry", {})
    if not isinstance(geom, dict):
        raise ConfigError("[geometry] must be a table")
    for src, dst in (("n_y", "n_y"), ("n_z", "n_z"), ("d", "spacing"),
                     ("wavelength", "wavelength"), ("area", "area")):
        if src in geom:
            kwargs[dst] = int(geom[src]) if dst in ("n_y", "n_z") else float(geom[src])

    if "cu" in raw:
        kwargs["cu"] = _place_from_table(raw["cu"], DEFAULT_CU)
    if "target" in raw:
        kwargs["target"] = _place_from_table(raw["target"], DEFAULT_TARGET)

    system = raw.get("system", {})
    if not isinstance(system, dict):
        raise ConfigError("[system] must be a table")
    for src, dst, cast in (
        ("p_db", "p_db", float),
        ("p_c_db", "p_c_db", float),
        ("p_s_db", "p_s_db", float),
        ("l_frame", "l_frame", int),
        ("alpha_s", "alpha_s", float),
        ("kappa", "kappa", float),
        ("iota", "iota", float),
    ):
        if src in system:
            kwargs[dst] = cast(system[src])

    if "sweep" in raw:
        kwargs["sweep"] = _sweep_from_table(raw["sweep"])
    if "sweep2" in raw:
        kwargs["sweep2"] = _sweep_from_table(raw["sweep2"])
    if "ccf_samples" in raw:
        kwargs["ccf_samples"] = int(raw["ccf_samples"])

    for key in ("out", "seed", "threads"):
        if key in raw:
            kwargs[key] = raw[key] if key == "out" else int(raw[key])
    if "models" in raw:
        kwargs["models"] = tuple(str(m) for m in raw["models"])

    # flag overrides
    if out is not None:
        kwargs["out"] = out
    if seed is not None:
        kwargs["seed"] = seed
    if threads is not None:
        kwargs["threads"] = threads
    if models:
        kwargs["models"] = tuple(models)

    unknown = set(raw) - {
        "geometry", "cu", "target", "system", "sweep", "sweep2",
        "ccf_samples", "out", "seed", "threads", "models", "experiment",
    }
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return ExperimentConfig(**kwargs)


# --------------------------------------------------------------------------
# Output helpers
# --------------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    """Write rows with a header line; '\n' endings; shortest-round-trip floats."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            if len(row) != len(header):
                raise ValueError(
                    f"row width {len(row)} != header width {len(header)} in {path.name}"
                )
            fh.write(",".join(_cell(v) for v in row) + "\n")


def _pmap(fn: Callable, items: Sequence, threads: int | None) -> list:
    """Map preserving input order, optionally across a thread pool."""
    if threads is not None and threads <= 1:
        return [fn(x) for x in items]
    workers = threads if threads is not None else (os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


def _norm_for(g: ArrayGeometry, p: Placement, model: ChannelModel) -> float:
    """Channel energy via the closed form, falling back to element summation."""
    try:
        return closed_form_norm_sq(g, p, model)
    except UnsupportedModelError:
        value, _ = norm_sq(build_channel(g, p, model), source="element_sum")
        return value


def _pareto_tagged(points: list[tuple]) -> list[tuple]:
    """Keep non-dominated (tag..., sr, cr) tuples; sr/cr are last two fields."""
    pts = sorted(points, key=lambda t: (-t[-2], -t[-1]))
    out: list[tuple] = []
    best_cr = -math.inf
    for t in pts:
        if t[-1] > best_cr + 1e-15:
            out.append(t)
            best_cr = t[-1]
    return out


# --------------------------------------------------------------------------
# Experiment bodies (each returns {filename: (header, rows)}, derived dict)
# --------------------------------------------------------------------------


def _channels(cfg: ExperimentConfig, model: str, n_y: int | None = None,
              n_z: int | None = None, r_c: float | None = None,
              r_s: float | None = None) -> tuple[ChannelVector, ChannelVector]:
    g = cfg.geometry(n_y, n_z)
    pc, ps = cfg.placements(r_c, r_s)
    m = ChannelModel.from_string(model)
    return build_channel(g, pc, m), build_channel(g, ps, m)


def _run_dl_snr(cfg: ExperimentConfig):
    model = cfg.model_list()[0]
    hc, hs = _channels(cfg, model)
    grid = cfg.primary_sweep().grid()

    def one(p_db: float):
        sp = cfg.system_params(p_db=p_db)
        cc = cc_rates(hc, hs, sp)
        sc = sc_rates(hc, hs, sp)
        fd = fdsac_rates(hc, hs, sp)
        return (
            p_db,
            cc.cr, sc.cr, fd.cr,
            high_snr_approx("cc_cr", hc, hs, sp),
            high_snr_approx("sc_cr", hc, hs, sp),
            sc.sr, cc.sr, fd.sr,
            high_snr_approx("sc_sr", hc, hs, sp),
            high_snr_approx("cc_sr", hc, hs, sp),
        )

    rows = _pmap(one, grid, cfg.threads)
    header = [
        "p_dB", "CR_cc", "CR_sc", "CR_fdsac", "CR_cc_hiSNR", "CR_sc_hiSNR",
        "SR_sc", "SR_cc", "SR_fdsac", "SR_sc_hiSNR", "SR_cc_hiSNR",
    ]
    return {"dl_snr.csv": (header, rows)}, {}


def _run_dl_n(cfg: ExperimentConfig):
    models = cfg.model_list()
    counts = cfg.primary_sweep().int_grid()
    sp = cfg.system_params()
    pc, ps = cfg.placements()

    def one(n: int):
        g = cfg.geometry(n, n)
        cr_row: list = [n, n * n]
        sr_row: list = [n, n * n]
        for m in models:
            mm = ChannelModel.from_string(m)
            nc = _norm_for(g, pc, mm)
            ns = _norm_for(g, ps, mm)
            cr_row.append(math.log2(1.0 + sp.p * nc))
            sr_row.append(
                math.log2(1.0 + sp.p * sp.l_frame * sp.alpha_s * ns * ns) / sp.l_frame
            )
        return cr_row, sr_row

    both = _pmap(one, counts, cfg.threads)
    cr_limit = asymptotic_limit("cc_cr", sp, cfg.aor, polarized=True)
    cr_limit_np = asymptotic_limit("cc_cr", sp, cfg.aor, polarized=False)
    sr_limit = asymptotic_limit("sc_sr", sp, cfg.aor, polarized=True)
    sr_limit_np = asymptotic_limit("sc_sr", sp, cfg.aor, polarized=False)
    cr_rows = [row + [cr_limit, cr_limit_np] for row, _ in both]
    sr_rows = [row + [sr_limit, sr_limit_np] for _, row in both]
    cr_header = ["N_y", "N"] + [f"CR_cc_{m}" for m in models] + [
        "CR_limit_accurate", "CR_limit_nopolar",
    ]
    sr_header = ["N_y", "N"] + [f"SR_sc_{m}" for m in models] + [
        "SR_limit_accurate", "SR_limit_nopolar",
    ]
    return {
        "dl_n_cr.csv": (cr_header, cr_rows),
        "dl_n_sr.csv": (sr_header, sr_rows),
    }, {}


def _run_dl_r(cfg: ExperimentConfig):
    models = cfg.model_list()
    radii = cfg.primary_sweep().grid()
    sp = cfg.system_params()

    def one(r: float):
        cr_row: list = [r]
        sr_row: list = [r]
        g = cfg.geometry()
        pc, ps = cfg.placements(r_c=2.0 * r, r_s=r)
        for m in models:
            mm = ChannelModel.from_string(m)
            nc = _norm_for(g, pc, mm)
            ns = _norm_for(g, ps, mm)
            cr_row.append(math.log2(1.0 + sp.p * nc))
            sr_row.append(
                math.log2(1.0 + sp.p * sp.l_frame * sp.alpha_s * ns * ns) / sp.l_frame
            )
        return cr_row, sr_row

    both = _pmap(one, radii, cfg.threads)
    cr_header = ["r"] + [f"CR_cc_{m}" for m in models]
    sr_header = ["r"] + [f"SR_sc_{m}" for m in models]
    return {
        "dl_r_cr.csv": (cr_header, [row for row, _ in both]),
        "dl_r_sr.csv": (sr_header, [row for _, row in both]),
    }, {}


def _run_dl_region(cfg: ExperimentConfig):
    model = cfg.model_list()[0]
    hc, hs = _channels(cfg, model)
    sp = cfg.system_params()
    taus = cfg.primary_sweep().grid()

    def one_tau(tau: float):
        pair = tau_rate_pair(hc, hs, sp, tau)
        return (tau, pair.sr, pair.cr)

    isac_rows = _pmap(one_tau, taus, cfg.threads)

    kgrid = cfg.secondary_sweep().grid()
    fd_points = []
    for kappa in kgrid:
        for iota in kgrid:
            sp_ki = replace(sp, kappa=kappa, iota=iota)
            pair = fdsac_rates(hc, hs, sp_ki, norm_source="element_sum")
            fd_points.append((kappa, iota, pair.sr, pair.cr))
    fd_rows = _pareto_tagged(fd_points)

    cc = cc_rates(hc, hs, sp, norm_source="element_sum")
    sc = sc_rates(hc, hs, sp, norm_source="element_sum")
    corner_rows = [("cc", cc.sr, cc.cr), ("sc", sc.sr, sc.cr)]

    return {
        "dl_region_isac.csv": (["tau", "SR", "CR"], isac_rows),
        "dl_region_fdsac.csv": (["kappa", "iota", "SR", "CR"], fd_rows),
        "dl_region_corners.csv": (["design", "SR", "CR"], corner_rows),
    }, {}


def _run_ul_snr(cfg: ExperimentConfig):
    model = cfg.model_list()[0]
    hc, hs = _channels(cfg, model)

    def one_cr(p_c_db: float):
        sp = cfg.system_params(p_c_db=p_c_db, p_s_db=DEFAULT_PS_DB)
        return (
            p_c_db,
            ul_cc_rates(hc, hs, sp).cr,
            ul_sc_rates(hc, hs, sp).cr,
            ul_sc_cr_lower(hc, hs, sp),
            ul_fdsac_rates(hc, hs, sp).cr,
        )

    def one_sr(p_s_db: float):
        sp = cfg.system_params(p_s_db=p_s_db, p_c_db=DEFAULT_PC_DB)
        return (
            p_s_db,
            ul_sc_rates(hc, hs, sp).sr,
            ul_cc_rates(hc, hs, sp).sr,
            ul_cc_sr_lower(hc, hs, sp),
            ul_fdsac_rates(hc, hs, sp).sr,
        )

    cr_rows = _pmap(one_cr, cfg.primary_sweep().grid(), cfg.threads)
    sr_rows = _pmap(one_sr, cfg.secondary_sweep().grid(), cfg.threads)
    return {
        "ul_snr_cr.csv": (
            ["p_c_dB", "CR_cc", "CR_sc", "CR_sc_lower", "CR_fdsac"], cr_rows,
        ),
        "ul_snr_sr.csv": (
            ["p_s_dB", "SR_sc", "SR_cc", "SR_cc_lower", "SR_fdsac"], sr_rows,
        ),
    }, {}


def _run_ul_n(cfg: ExperimentConfig):
    models = cfg.model_list()
    counts = cfg.primary_sweep().int_grid()
    # CR panel: communication-heavy powers; SR panel: sensing-heavy powers.
    sp_cr = cfg.system_params(p_c_db=85.0, p_s_db=60.0)
    sp_sr = cfg.system_params(p_s_db=85.0, p_c_db=60.0)
    pc, ps = cfg.placements()

    def one(n: int):
        g = cfg.geometry(n, n)
        cr_row: list = [n, n * n]
        sr_row: list = [n, n * n]
        for m in models:
            mm = ChannelModel.from_string(m)
            hc = build_channel(g, pc, mm)
            hs = build_channel(g, ps, mm)
            cr_row.append(ul_cc_rates(hc, hs, sp_cr).cr)
            cr_row.append(ul_sc_rates(hc, hs, sp_cr).cr)
            sr_row.append(ul_sc_rates(hc, hs, sp_sr).sr)
            sr_row.append(ul_cc_rates(hc, hs, sp_sr).sr)
        acc = ChannelModel.ACCURATE
        hc_a = build_channel(g, pc, acc)
        hs_a = build_channel(g, ps, acc)
        cr_row.append(ul_sc_cr_lower(hc_a, hs_a, sp_cr))
        sr_row.append(ul_cc_sr_lower(hc_a, hs_a, sp_sr))
        return cr_row, sr_row

    both = _pmap(one, counts, cfg.threads)
    e3 = cfg.aor / 3.0
    e2 = cfg.aor / 2.0
    cr_limits = [
        math.log2(1.0 + sp_cr.p_c * e3),
        math.log2(1.0 + sp_cr.p_c * e2),
        ul_asymptotic_limit("sc_cr_lower", sp_cr, cfg.aor, polarized=True),
    ]
    sr_limits = [
        math.log2(1.0 + sp_sr.p_s * sp_sr.l_frame * sp_sr.alpha_s * e3 * e3)
        / sp_sr.l_frame,
        math.log2(1.0 + sp_sr.p_s * sp_sr.l_frame * sp_sr.alpha_s * e2 * e2)
        / sp_sr.l_frame,
        ul_asymptotic_limit("cc_sr_lower", sp_sr, cfg.aor, polarized=True),
    ]
    cr_rows = [row + cr_limits for row, _ in both]
    sr_rows = [row + sr_limits for _, row in both]
    cr_header = ["N_y", "N"]
    sr_header = ["N_y", "N"]
    for m in models:
        cr_header += [f"CR_cc_{m}", f"CR_sc_{m}"]
        sr_header += [f"SR_sc_{m}", f"SR_cc_{m}"]
    cr_header += ["CR_sc_lower_accurate", "CR_limit_accurate",
                  "CR_limit_nopolar", "CR_sc_lower_limit"]
    sr_header += ["SR_cc_lower_accurate", "SR_limit_accurate",
                  "SR_limit_nopolar", "SR_cc_lower_limit"]
    return {
        "ul_n_cr.csv": (cr_header, cr_rows),
        "ul_n_sr.csv": (sr_header, sr_rows),
    }, {}


def _run_ul_region(cfg: ExperimentConfig):
    model = cfg.model_list()[0]
    hc, hs = _channels(cfg, model)
    sp = cfg.system_params(p_s_db=85.0, p_c_db=60.0)

    varrhos = cfg.primary_sweep().grid()

    def one(varrho: float):
        pair = time_sharing(hc, hs, sp, varrho, norm_source="element_sum")
        return (varrho, pair.sr, pair.cr)

    isac_rows = _pmap(one, varrhos, cfg.threads)

    cc = ul_cc_rates(hc, hs, sp, norm_source="element_sum")
    sc = ul_sc_rates(hc, hs, sp, norm_source="element_sum")
    sr_cc_low = ul_cc_sr_lower(hc, hs, sp, norm_source="element_sum")
    cr_sc_low = ul_sc_cr_lower(hc, hs, sp, norm_source="element_sum")
    inner_a = (sc.sr, cr_sc_low)
    inner_b = (sr_cc_low, cc.cr)
    inner_rows = []
    for t in varrhos:
        sr = t * inner_a[0] + (1.0 - t) * inner_b[0]
        cr = t * inner_a[1] + (1.0 - t) * inner_b[1]
        inner_rows.append((t, sr, cr))

    kgrid = cfg.secondary_sweep().grid()
    fd_rows = []
    for kappa in kgrid:
        pair = ul_fdsac_rates(hc, hs, replace(sp, kappa=kappa), norm_source="element_sum")
        fd_rows.append((kappa, pair.sr, pair.cr))

    corner_rows = [
        ("cc", cc.sr, cc.cr),
        ("sc", sc.sr, sc.cr),
        ("cc_inner", sr_cc_low, cc.cr),
        ("sc_inner", sc.sr, cr_sc_low),
    ]
    return {
        "ul_region_isac.csv": (["varrho", "SR", "CR"], isac_rows),
        "ul_region_inner.csv": (["t", "SR", "CR"], inner_rows),
        "ul_region_fdsac.csv": (["kappa", "SR", "CR"], fd_rows),
        "ul_region_corners.csv": (["design", "SR", "CR"], corner_rows),
    }, {}


def _run_ccf(cfg: ExperimentConfig):
    counts = cfg.primary_sweep().int_grid()
    ladder = default_ccf_ladder(
        cfg.spacing, cfg.area, cfg.wavelength, counts=counts
    )
    sampler = uniform_placement_sampler()
    models = cfg.model_list()
    estimates = {}
    for m in models:
        estimates[m] = ccf_limit_estimate(
            ladder,
            sampler,
            samples=cfg.ccf_samples,
            seed=cfg.seed,
            model=ChannelModel.from_string(m),
            threads=cfg.threads,
        )
    rows = []
    for i, n in enumerate(counts):
        rows.append([n, n * n] + [estimates[m].mean_rho[i] for m in models])
    header = ["N_y", "N"] + [f"rho_{m}" for m in models]
    derived = {
        f"c_rho_{m}": estimates[m].converged_value for m in models
    }
    derived["ccf_sample_count"] = cfg.ccf_samples
    return {"ccf.csv": (header, rows)}, derived


_RUNNERS = {
    "dl_snr": _run_dl_snr,
    "dl_n": _run_dl_n,
    "dl_r": _run_dl_r,
    "dl_region": _run_dl_region,
    "ul_snr": _run_ul_snr,
    "ul_n": _run_ul_n,
    "ul_region": _run_ul_region,
    "ccf": _run_ccf,
}


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Execute one experiment; write CSVs and summary.json; return the summary."""
    t0 = time.perf_counter()
    out_dir = Path(cfg.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    tables, derived = _RUNNERS[cfg.experiment](cfg)
    t_compute = time.perf_counter() - t0

    for name, (header, rows) in tables.items():
        write_csv(out_dir / name, header, rows)

    rc, _, _ = cfg.cu
    rs, _, _ = cfg.target
    summary = {
        "experiment": cfg.experiment,
        "outputs": sorted(tables),
        "config": {
            "geometry": {
                "n_y": cfg.n_y, "n_z": cfg.n_z, "d": cfg.spacing,
                "wavelength": cfg.wavelength, "area": cfg.area,
            },
            "cu": {"r": cfg.cu[0], "theta": cfg.cu[1], "phi": cfg.cu[2]},
            "target": {"r": cfg.target[0], "theta": cfg.target[1], "phi": cfg.target[2]},
            "system": {
                "p_db": cfg.p_db, "p_c_db": cfg.p_c_db, "p_s_db": cfg.p_s_db,
                "p": db_to_linear(cfg.p_db),
                "p_c": db_to_linear(cfg.p_c_db),
                "p_s": db_to_linear(cfg.p_s_db),
                "l_frame": cfg.l_frame, "alpha_s": cfg.alpha_s,
                "kappa": cfg.kappa, "iota": cfg.iota,
            },
            "models": list(cfg.model_list()),
            "seed": cfg.seed,
            "threads": cfg.threads,
        },
        "derived": {
            "zeta": cfg.aor,
            "eps_c": cfg.spacing / rc,
            "eps_s": cfg.spacing / rs,
            **derived,
        },
        "timings": {
            "compute_s": t_compute,
            "total_s": time.perf_counter() - t0,
        },
    }
    with open(out_dir / "summary.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return summary

"""Parameter sweeps over (R, B, KT), CSV emission and threshold finders.

Sweeps evaluate every grid point, order the records lexicographically by
(kt, b, r) regardless of evaluation order, and write CSV with 12
significant digits, so output files are byte-identical across runs.
Grid points may be farmed out to a process pool; the worker count comes
from the HEISENPAIR_WORKERS environment variable (default: CPU count).

The finders locate the zero crossings of concurrence by bisection:
find_death_radius walks the coupling distance at fixed temperature,
find_critical_kt walks temperature with the coupling held at its peak
(R = 1.25).
"""

import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass

import numpy as np

from .correlations import concurrence, quantum_discord
from .errors import NoEntanglementError
from .linalg import partial_trace, von_neumann_entropy
from .model import (
    ModelParams,
    _coerce_convention,
    hf_coupling,
    thermal_state_gibbs,
    thermal_state_paper,
    to_matrix,
)

CSV_HEADER = "R,B,KT,J,concurrence,discord,s_ab,s_a,s_b,mutual_information,theta_opt"
WORKERS_ENV_VAR = "HEISENPAIR_WORKERS"

MODES = ("paper", "gibbs")

# R = 1.25 maximizes the coupling law, so entanglement survives there longest;
# J(12) < 1e-8 sits far below any positive-concurrence threshold at KT >= 0.01.
COUPLING_PEAK_R = 1.25
_RADIUS_BRACKET_HI = 12.0


def _coerce_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class SweepConfig:
    """Grid definition plus evaluation knobs for one sweep run."""

    r_min: float
    r_max: float
    r_steps: int
    b_values: tuple
    kt_values: tuple
    out_path: str
    mode: str = "paper"
    convention: str = "reconciled"
    grid_theta: int = 181
    tol: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "b_values", tuple(float(b) for b in self.b_values))
        object.__setattr__(self, "kt_values", tuple(float(k) for k in self.kt_values))
        if not (
            math.isfinite(self.r_min)
            and math.isfinite(self.r_max)
            and all(math.isfinite(b) for b in self.b_values)
            and all(math.isfinite(k) for k in self.kt_values)
        ):
            raise ValueError("sweep bounds and value lists must be finite")
        if self.r_min < 0.0 or not self.r_min < self.r_max:
            raise ValueError(
                f"need 0 <= r_min < r_max, got r_min={self.r_min!r}, r_max={self.r_max!r}"
            )
        if self.r_steps < 2:
            raise ValueError(f"r_steps must be >= 2, got {self.r_steps!r}")
        if not self.b_values or not self.kt_values:
            raise ValueError("b_values and kt_values must be non-empty")
        if min(self.kt_values) <= 0.0:
            raise ValueError(f"kt values must be > 0, got {self.kt_values!r}")
        _coerce_mode(self.mode)
        _coerce_convention(self.convention)
        if self.grid_theta < 2:
            raise ValueError(f"grid_theta must be >= 2, got {self.grid_theta!r}")
        if self.tol <= 0.0:
            raise ValueError(f"tol must be > 0, got {self.tol!r}")

    def r_grid(self):
        return np.linspace(self.r_min, self.r_max, self.r_steps)


@dataclass(frozen=True)
class CorrelationRecord:
    """One evaluated grid point: parameters, coupling and all correlations."""

    r: float
    b: float
    kt: float
    j: float
    concurrence: float
    discord: float
    s_ab: float
    s_a: float
    s_b: float
    mutual_information: float
    theta_opt: float

    def csv_row(self):
        """The record as one CSV line (12 significant digits per field)."""
        return ",".join(format(v, ".12g") for v in astuple(self))


def thermal_matrix(params, mode="paper", convention="reconciled"):
    """The 4x4 thermal state for either construction mode."""
    if _coerce_mode(mode) == "paper":
        return to_matrix(thermal_state_paper(params))
    return thermal_state_gibbs(params, convention=convention)


def evaluate_point(r, b, kt, mode="paper", convention="reconciled",
                   grid_theta=181, tol=1e-9):
    """Evaluate concurrence, discord and entropies at a single (r, b, kt)."""
    params = ModelParams(r=r, b=b, kt=kt)
    rho = thermal_matrix(params, mode=mode, convention=convention)
    conc = concurrence(rho)
    disc = quantum_discord(rho, grid_n=grid_theta, tol=tol)
    s_b = von_neumann_entropy(partial_trace(rho, "B"))
    return CorrelationRecord(
        r=params.r,
        b=params.b,
        kt=params.kt,
        j=hf_coupling(params.r),
        concurrence=conc.value,
        discord=disc.value,
        s_ab=disc.s_ab,
        s_a=disc.s_a,
        s_b=s_b,
        mutual_information=max(0.0, disc.s_a + s_b - disc.s_ab),
        theta_opt=disc.optimal_basis.theta,
    )


def _evaluate_task(task):
    r, b, kt, mode, convention, grid_theta, tol = task
    return evaluate_point(r, b, kt, mode=mode, convention=convention,
                          grid_theta=grid_theta, tol=tol)


def _worker_count():
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    n = int(raw)
    if n < 1:
        raise ValueError(f"{WORKERS_ENV_VAR} must be >= 1, got {raw!r}")
    return n


def run_sweep(cfg):
    """Evaluate the full grid of a SweepConfig and write the CSV.

    The output file is opened before any computation so an unwritable path
    fails fast. Returns the records in (kt, b, r) lexicographic order --
    the same order as the CSV rows.
    """
    tasks = [
        (r, b, kt, cfg.mode, cfg.convention, cfg.grid_theta, cfg.tol)
        for kt in sorted(cfg.kt_values)
        for b in sorted(cfg.b_values)
        for r in cfg.r_grid()
    ]
    with open(cfg.out_path, "w", newline="") as fh:
        workers = _worker_count()
        if workers > 1 and len(tasks) > 1:
            chunk = max(1, len(tasks) // (4 * workers))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(_evaluate_task, tasks, chunksize=chunk))
        else:
            records = [_evaluate_task(t) for t in tasks]
        records.sort(key=lambda rec: (rec.kt, rec.b, rec.r))
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(rec.csv_row() + "\n")
    return records


def _concurrence_at(r, b, kt, mode, convention):
    rho = thermal_matrix(ModelParams(r=r, b=b, kt=kt), mode=mode,
                         convention=convention)
    return concurrence(rho).value


def find_death_radius(b, kt, mode="paper", convention="reconciled", tol=1e-9):
    """Coupling distance where thermal concurrence hits exactly zero.

    Bisection on R in [1.25, 12] for the largest zero crossing, to bracket
    width < tol. Raises NoEntanglementError when concurrence already
    vanishes at the coupling peak R = 1.25 (nothing to cross).
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    lo, hi = COUPLING_PEAK_R, _RADIUS_BRACKET_HI
    if _concurrence_at(lo, b, kt, mode, convention) <= 0.0:
        raise NoEntanglementError(
            f"concurrence is zero at the coupling peak R={lo} for b={b}, kt={kt}; "
            f"no entanglement anywhere in the bracket"
        )
    if _concurrence_at(hi, b, kt, mode, convention) > 0.0:
        raise ValueError(f"no zero crossing below R={hi} for b={b}, kt={kt}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _concurrence_at(mid, b, kt, mode, convention) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_critical_kt(b, mode="paper", convention="reconciled", tol=1e-9):
    """Largest temperature with positive concurrence at the coupling peak.

    Above this KT, concurrence vanishes for every R. Bisection with the
    initial bracket [1e-3, 1.0], doubling the upper end until it encloses
    the crossing; converges to width < tol.

    The crossing itself is field-independent, but at strong fields the
    Boltzmann weights at very low KT underflow and the computed concurrence
    reads zero there, so the low probe walks upward until it finds a live
    temperature.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")

    def alive(kt):
        return _concurrence_at(COUPLING_PEAK_R, b, kt, mode, convention) > 0.0

    lo, hi = 1e-3, 1.0
    while not alive(lo):
        lo *= 2.0
        if lo >= hi:
            raise NoEntanglementError(
                f"concurrence is zero at R={COUPLING_PEAK_R} for every probed "
                f"kt in (0, {hi}] with b={b}; no entanglement detectable"
            )
    doublings = 0
    while alive(hi):
        lo, hi = hi, hi * 2.0
        doublings += 1
        if doublings > 20:
            raise ValueError(f"no concurrence zero crossing below kt={hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if alive(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def point_report(params, mode="paper", convention="reconciled",
                 grid_theta=181, tol=1e-9, stream=None):
    """Evaluate one point and print it as a one-row CSV (with header)."""
    record = evaluate_point(params.r, params.b, params.kt, mode=mode,
                            convention=convention, grid_theta=grid_theta, tol=tol)
    out = sys.stdout if stream is None else stream
    out.write(CSV_HEADER + "\n")
    out.write(record.csv_row() + "\n")
    return record

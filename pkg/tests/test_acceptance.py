"""Acceptance suite: one test per criterion, one pass/fail line each under
pytest -v. Tolerances are pinned in the asserts."""

import math
import subprocess
import sys
import time

import numpy as np

from heisenpair.correlations import (
    _flip_eigenvalues_general,
    concurrence,
    concurrence_xstate,
    discord_bell_diagonal_oracle,
    quantum_discord,
)
from heisenpair.linalg import hermitian_eigenvalues
from heisenpair.model import (
    ModelParams,
    hf_coupling,
    thermal_state_gibbs,
    thermal_state_paper,
    to_matrix,
)
from heisenpair.sweep import SweepConfig, find_critical_kt, run_sweep


def _cli(*args):
    start = time.monotonic()
    proc = subprocess.run(
        [sys.executable, "-m", "heisenpair", *args],
        capture_output=True, text=True, timeout=120,
    )
    elapsed = time.monotonic() - start
    assert proc.returncode == 0, proc.stderr
    return proc.stdout, elapsed


def _mark(n, label):
    print(f"ACCEPTANCE criterion {n}: PASS - {label}")


def test_criterion_1_critical_temperature():
    out, elapsed = _cli("critical-kt", "--b", "0")
    kt_star = float(out.splitlines()[0])
    assert 0.67 <= kt_star <= 0.70
    assert elapsed < 1.0
    _mark(1, f"critical-kt --b 0 -> {kt_star:.6f} in [0.67, 0.70], {elapsed:.2f}s")


def test_criterion_2_death_radius():
    out, elapsed = _cli("death-radius", "--kt", "0.2", "--b", "0")
    r_star = float(out.splitlines()[0])
    assert 2.90 <= r_star <= 2.95
    assert "3.2" in out  # the common graphical reading is documented
    assert abs(hf_coupling(r_star) - 0.1 * math.log(2.0)) < 1e-6
    assert elapsed < 1.0
    _mark(2, f"death-radius --kt 0.2 --b 0 -> {r_star:.6f} in [2.90, 2.95], "
             f"J(R*) on criterion, reading 3.2 documented, {elapsed:.2f}s")


def test_criterion_3_discord_outlives_entanglement(tmp_path):
    cfg = SweepConfig(
        r_min=0.0, r_max=6.0, r_steps=601,
        b_values=[0.0, 1.0, 3.0], kt_values=[0.7, 1.0],
        out_path=str(tmp_path / "hot.csv"), grid_theta=181,
    )
    start = time.monotonic()
    records = run_sweep(cfg)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    assert len(records) == 601 * 3 * 2
    max_conc = max(rec.concurrence for rec in records)
    max_disc = max(rec.discord for rec in records)
    assert max_conc <= 1e-12
    assert max_disc >= 0.03
    for kt in (0.7, 1.0):
        for b in (0.0, 1.0, 3.0):
            combo = max(r.discord for r in records if r.kt == kt and r.b == b)
            assert combo > 1e-3
    _mark(3, f"grid concurrence <= 1e-12 everywhere, max discord {max_disc:.4f} "
             f">= 0.03, {elapsed:.1f}s < 30s")


def test_criterion_4_reference_point_dual_paths():
    state = thermal_state_paper(ModelParams(r=1.25, b=0.0, kt=0.2))
    rho = to_matrix(state)

    roots = np.sqrt(np.sort(_flip_eigenvalues_general(rho))[::-1])
    general_conc = max(0.0, roots[0] - roots[1] - roots[2] - roots[3])
    closed_conc = concurrence_xstate(state)
    assert abs(general_conc - closed_conc) < 1e-6
    assert abs(general_conc - 0.6809) < 1e-3
    assert abs(closed_conc - 0.6809) < 1e-3

    numeric_disc = quantum_discord(rho).value
    oracle_disc = discord_bell_diagonal_oracle(state)
    assert abs(numeric_disc - oracle_disc) < 1e-6
    assert abs(numeric_disc - 0.5288) < 1e-3
    assert abs(oracle_disc - 0.5288) < 1e-3
    _mark(4, f"concurrence {general_conc:.5f} (paths agree to "
             f"{abs(general_conc - closed_conc):.1e}), discord {numeric_disc:.5f} "
             f"(paths agree to {abs(numeric_disc - oracle_disc):.1e})")


def test_criterion_5_oracle_suites(tmp_path):
    rs = np.linspace(0.0, 6.0, 10)
    bs = np.linspace(0.0, 5.0, 10)
    kts = np.linspace(0.05, 2.0, 10)

    # X-state concurrence equivalence (1e-10) + state invariants on the grid
    for r in rs:
        for b in bs:
            for kt in kts:
                s = thermal_state_paper(ModelParams(r=float(r), b=float(b), kt=float(kt)))
                rho = to_matrix(s)
                assert abs(s.a11 + s.a22 + s.a33 + s.a44 - 1.0) < 1e-12
                assert np.abs(rho - rho.conj().T).max() == 0.0
                assert s.a11 >= 0.0 and s.a44 >= 0.0 and s.a22 >= abs(s.a23)
                general = np.sqrt(np.sort(_flip_eigenvalues_general(rho))[::-1])
                via_general = max(0.0, general[0] - general[1:].sum())
                assert abs(via_general - concurrence_xstate(s)) < 1e-10
                assert abs(concurrence(rho).value - concurrence_xstate(s)) < 1e-10

    # Jacobi vs closed-form eigenvalues of the X matrix (1e-10)
    for r in rs[1::3]:
        for kt in kts[::3]:
            s = thermal_state_paper(ModelParams(r=float(r), b=0.7, kt=float(kt)))
            lam = hermitian_eigenvalues(to_matrix(s))
            closed = np.sort([s.a11, s.a44, s.a22 + abs(s.a23), s.a22 - abs(s.a23)])
            assert np.abs(lam - closed).max() < 1e-10

    # Bell-diagonal discord equivalence at B = 0 (1e-6)
    for r in np.linspace(0.2, 5.0, 10):
        for kt in np.linspace(0.08, 1.8, 10):
            s = thermal_state_paper(ModelParams(r=float(r), b=0.0, kt=float(kt)))
            assert abs(
                quantum_discord(to_matrix(s)).value - discord_bell_diagonal_oracle(s)
            ) < 1e-6

    # field-reversal symmetry (1e-9)
    for r in (0.8, 1.25, 2.5):
        for b in (0.5, 2.0, 4.5):
            cp = concurrence_xstate(thermal_state_paper(ModelParams(r, b, 0.2)))
            cm = concurrence_xstate(thermal_state_paper(ModelParams(r, -b, 0.2)))
            assert abs(cp - cm) < 1e-9
    for b in (1.0, 3.0):
        dp = quantum_discord(to_matrix(thermal_state_paper(ModelParams(1.25, b, 0.4))))
        dm = quantum_discord(to_matrix(thermal_state_paper(ModelParams(1.25, -b, 0.4))))
        assert abs(dp.value - dm.value) < 1e-9

    # determinism: byte-identical CSV across two runs
    paths = [tmp_path / "det1.csv", tmp_path / "det2.csv"]
    for p in paths:
        run_sweep(SweepConfig(r_min=0.0, r_max=3.0, r_steps=11, b_values=[0.0, 1.0],
                              kt_values=[0.2], out_path=str(p)))
    assert paths[0].read_bytes() == paths[1].read_bytes()
    _mark(5, "concurrence equivalence 1e-10, discord oracle 1e-6, eigenvalue "
             "closed forms 1e-10, grid invariants, field symmetry 1e-9, "
             "byte-identical CSV")


def test_criterion_6_support_containment(tmp_path):
    for kt in (0.2, 0.4, 0.6):
        cfg = SweepConfig(r_min=0.0, r_max=6.0, r_steps=601, b_values=[0.0],
                          kt_values=[kt], out_path=str(tmp_path / f"kt{kt}.csv"))
        records = run_sweep(cfg)
        conc = np.array([rec.concurrence for rec in records])
        disc = np.array([rec.discord for rec in records])
        ci = np.nonzero(conc > 1e-6)[0]
        qi = np.nonzero(disc > 1e-6)[0]
        assert ci.size > 0 and qi.size > 0
        assert qi[0] < ci[0], f"kt={kt}: discord support must start before concurrence"
        assert qi[-1] > ci[-1], f"kt={kt}: discord support must outlast concurrence"
    _mark(6, "discord support strictly contains concurrence support at "
             "KT in {0.2, 0.4, 0.6} (601-point grids)")


def test_criterion_7_mode_discrepancy_documented():
    p0 = ModelParams(r=0.0, b=0.0, kt=1.0)
    paper0 = to_matrix(thermal_state_paper(p0))
    assert np.abs(paper0 - np.diag([1 / 6, 1 / 3, 1 / 3, 1 / 6])).max() < 1e-12
    gibbs0 = thermal_state_gibbs(p0)
    assert np.abs(gibbs0 - np.eye(4) / 4).max() < 1e-12
    assert np.abs(paper0 - gibbs0).max() > 0.08  # the R = 0 disagreement itself

    kt_paper = find_critical_kt(0.0, mode="paper")
    kt_gibbs = find_critical_kt(0.0, mode="gibbs")
    assert abs(kt_paper - 0.6794) < 1e-3
    assert abs(kt_gibbs - 0.4286) < 1e-3
    _mark(7, f"R=0 states differ (diag(1/6,1/3,1/3,1/6) vs I/4); critical KT "
             f"{kt_paper:.4f} vs {kt_gibbs:.4f}")

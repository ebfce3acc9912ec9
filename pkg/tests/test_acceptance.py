"""Acceptance battery.

Each test runs one release criterion end to end at its stated tolerance and
prints a single PASS/FAIL line (straight to the real stdout, so the verdicts
survive pytest's capture).  The criteria mirror the library's own
``validate_suite`` checks; here every one is asserted individually so a
regression pinpoints the criterion it broke.
"""

from __future__ import annotations

import sys
import time

from nfisac.validation import (
    CheckResult,
    check_boundary_equivalence,
    check_closed_form_norms,
    check_distance_gap,
    check_energy_conservation,
    check_high_snr_slopes,
    check_output_determinism,
    check_planewave_divergence,
    check_rate_profile_solver,
    check_region_containment,
    check_saturation_limits,
    check_uplink_oracle,
)


def _verdict(index: int, title: str, result: CheckResult) -> None:
    word = "PASS" if result.passed else "FAIL"
    print(
        f"[{word}] acceptance {index:02d} {title}: {result.detail}",
        file=sys.__stdout__,
        flush=True,
    )
    assert result.passed, f"acceptance {index:02d} {title}: {result.detail}"


def test_01_closed_form_norms_match_bruteforce():
    t0 = time.perf_counter()
    result = check_closed_form_norms(seed=42, cases=50)
    elapsed = time.perf_counter() - t0
    _verdict(1, "closed-form norms vs brute force", result)
    assert elapsed < 30.0, f"norm check took {elapsed:.1f}s (budget 30s)"


def test_02_large_array_saturation_limits():
    _verdict(2, "finite-N rates within 1% of limits", check_saturation_limits(seed=42))


def test_03_planewave_rate_divergence():
    _verdict(3, "planewave rate exceeds saturation cap", check_planewave_divergence())


def test_04_high_snr_slopes():
    _verdict(4, "high-SNR slope battery", check_high_snr_slopes())


def test_05_rate_profile_solver_kkt():
    _verdict(5, "rate-profile solver self-consistency", check_rate_profile_solver())


def test_06_sigma_tau_boundary_equivalence():
    _verdict(6, "sigma/tau frontier equivalence", check_boundary_equivalence())


def test_07_region_containment():
    _verdict(7, "region containment chains", check_region_containment(seed=42))


def test_08_uplink_rank_one_inverse_oracle():
    _verdict(8, "uplink quadratic-form oracle and bounds", check_uplink_oracle(seed=42))


def test_09_energy_conservation_caps():
    _verdict(9, "energy caps and model ordering", check_energy_conservation())


def test_10_distance_gap_narrows():
    _verdict(10, "model gap narrows with distance", check_distance_gap())


def test_11_deterministic_outputs():
    _verdict(11, "byte-identical reruns at fixed seed", check_output_determinism(seed=42))

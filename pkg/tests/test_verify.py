import math

import numpy as np
import pytest

from pauli_uncertainty import bounds
from pauli_uncertainty.verify import (
    GridSpec,
    derivative_sign_check,
    grid_max_sum_pure,
    grid_min_sum,
    impurity_gap_scan,
    max_relative_gap,
    renyi_sums_from_components,
    sweep_band,
    tsallis_sums_from_components,
)

from _oracles import entropic_sum_brute

TWO_LN2 = 2.0 * math.log(2.0)
QUARTER_PI = math.pi / 4.0


# ------------------------------------------------------------------ GridSpec


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(1, 100)
    with pytest.raises(ValueError):
        GridSpec(100, 200_000)
    with pytest.raises(ValueError):
        GridSpec(100, 100, "everything")


def test_grid_spec_axes():
    g = GridSpec(101, 51)
    assert g.tau_values()[0] == 0.0
    assert g.tau_values()[-1] == pytest.approx(QUARTER_PI, abs=1e-15)
    assert g.phi_values()[-1] == pytest.approx(QUARTER_PI, abs=1e-15)
    full = GridSpec(101, 64, "full")
    assert full.tau_values()[-1] == pytest.approx(math.pi / 2.0, abs=1e-15)
    assert full.phi_values()[-1] < 2.0 * math.pi


# --------------------------------------------------------- vectorized sums


def test_vectorized_sums_match_scalar_oracle(rng):
    comps = rng.uniform(-0.57, 0.57, size=(200, 3))
    for alpha in (0.35, 1.0):
        got = renyi_sums_from_components(alpha, comps[:, 0], comps[:, 1], comps[:, 2])
        for k in range(comps.shape[0]):
            want = entropic_sum_brute(alpha, *comps[k])
            assert got[k] == pytest.approx(want, abs=1e-12)


def test_vectorized_tsallis_center():
    val = tsallis_sums_from_components(0.5, 0.0, 0.0, 0.0)
    assert float(val) == pytest.approx(6.0 * (math.sqrt(2.0) - 1.0), abs=1e-12)


# ------------------------------------------------------------- grid minimum


@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_grid_min_hits_lower_bound(alpha):
    report = grid_min_sum(alpha, GridSpec(201, 201))
    assert report.passed
    assert report.observed >= TWO_LN2 - 1e-12
    assert report.abs_error <= report.tolerance
    tau, phi = report.location
    step = QUARTER_PI / 200
    near_corner = (abs(tau) <= step or abs(tau - QUARTER_PI) <= step) and abs(phi) <= step
    assert near_corner


def test_grid_min_full_domain_agrees():
    g_d = GridSpec(200, 200)
    g_full = GridSpec(200, 200, "full")
    r_d = grid_min_sum(0.5, g_d)
    r_full = grid_min_sum(0.5, g_full)
    assert r_full.passed
    assert abs(r_d.observed - r_full.observed) <= r_d.tolerance + r_full.tolerance


def test_grid_min_rejects_bad_order():
    with pytest.raises(ValueError):
        grid_min_sum(1.2, GridSpec(51, 51))


def test_grid_min_near_one_conditioning():
    # just below the Shannon window the 1/(1 - alpha) factor amplifies
    # rounding of ln(power sum) to a few 1e-12; the violation budget must
    # absorb that without loosening the flat 1e-12 at ordinary orders
    report = grid_min_sum(1.0 - 1e-4, GridSpec(101, 101))
    assert report.passed
    assert abs(report.observed - TWO_LN2) < 1e-11


def test_grid_min_injected_claim_fails():
    report = grid_min_sum(0.5, GridSpec(101, 101), claimed=TWO_LN2 - 0.01)
    assert not report.passed


# ------------------------------------------------------------- grid maximum


@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_grid_max_hits_ceiling(alpha):
    report = grid_max_sum_pure(alpha, GridSpec(201, 201))
    assert report.passed
    target = 3.0 * bounds.rho_hat(alpha)
    assert report.observed <= target + 1e-12
    assert target - report.observed <= report.tolerance
    # maximizer sits on the phi = pi/4 edge
    assert report.location[1] == pytest.approx(QUARTER_PI, abs=1e-12)


def test_grid_max_full_domain_agrees():
    r_d = grid_max_sum_pure(0.5, GridSpec(200, 200))
    r_full = grid_max_sum_pure(0.5, GridSpec(200, 200, "full"))
    assert r_full.passed
    assert abs(r_d.observed - r_full.observed) <= r_d.tolerance + r_full.tolerance


# ------------------------------------------------------------- determinism


def test_reports_are_deterministic_across_threads():
    g = GridSpec(301, 301)
    base_min = grid_min_sum(0.5, g)
    base_max = grid_max_sum_pure(0.5, g)
    for workers in (2, 3, 8):
        assert grid_min_sum(0.5, g, n_threads=workers) == base_min
        assert grid_max_sum_pure(0.5, g, n_threads=workers) == base_max
    assert grid_min_sum(0.5, g).as_line() == base_min.as_line()


def test_grid_refinement_consistency():
    # the 2n-1 grid contains every point of the n grid
    coarse_min = grid_min_sum(0.5, GridSpec(101, 101)).observed
    fine_min = grid_min_sum(0.5, GridSpec(201, 201)).observed
    assert fine_min <= coarse_min + 1e-15
    coarse_max = grid_max_sum_pure(0.5, GridSpec(101, 101)).observed
    fine_max = grid_max_sum_pure(0.5, GridSpec(201, 201)).observed
    assert fine_max >= coarse_max - 1e-15


def test_report_line_format():
    report = grid_min_sum(0.5, GridSpec(51, 51))
    line = report.as_line()
    assert line.startswith("check=grid_min_sum alpha=0.5 claimed=")
    assert " passed=true" in line
    fields = dict(part.split("=", 1) for part in line.split())
    assert set(fields) == {"check", "alpha", "claimed", "observed", "err", "passed"}


# ------------------------------------------------------------------- sweep


def test_sweep_band_certificate():
    points, report = sweep_band([0.25, 0.5, 0.75, 1.0], GridSpec(201, 201))
    assert report.passed
    assert report.check == "band_sweep"
    assert len(points) == 4
    for pt in points:
        assert 2.0 / 3.0 <= pt.a_upper <= pt.b_upper <= 1.0
    gap, gap_alpha = max_relative_gap(points)
    assert gap_alpha == 0.5  # largest relative gap among these four orders
    assert gap == pytest.approx(0.02503174941258483, abs=1e-12)
    assert report.alpha == gap_alpha


def test_sweep_band_rejects_empty():
    with pytest.raises(ValueError):
        sweep_band([], GridSpec(51, 51))


# ---------------------------------------------------------------- impurity


def test_impurity_scan_strictly_positive():
    report = impurity_gap_scan(0.5, seed=11, count=20_000)
    assert report.passed
    assert report.observed > TWO_LN2
    assert report.seed == 11


def test_impurity_scan_deterministic():
    a = impurity_gap_scan(0.3, seed=5, count=5_000)
    b = impurity_gap_scan(0.3, seed=5, count=5_000)
    assert a == b


def test_impurity_scan_rejects_order_one():
    with pytest.raises(ValueError):
        impurity_gap_scan(1.0, seed=1, count=10)


def test_diagonal_family_identity():
    # mixtures diagonal in a Pauli eigenbasis: the other two axes each
    # contribute exactly ln 2 and the diagonal axis the mixing entropy
    from pauli_uncertainty.distributions import renyi_entropy
    from pauli_uncertainty.pauli_measure import measure_mixed
    from pauli_uncertainty.qubit import BlochVector

    for alpha in (0.25, 0.5, 0.75):
        for lam in np.linspace(0.1, 0.9, 9):
            b = BlochVector(2.0 * float(lam) - 1.0, 0.0, 0.0)
            total = bounds.entropic_sum_renyi(measure_mixed(b), alpha)
            want = TWO_LN2 + renyi_entropy((float(lam), 1.0 - float(lam)), alpha)
            assert total == pytest.approx(want, abs=1e-12)


# ------------------------------------------------------------- derivatives


@pytest.mark.parametrize("alpha", [0.5, 0.9])
def test_derivative_sign_check_passes(alpha):
    report = derivative_sign_check(alpha, 200)
    assert report.passed
    assert report.abs_error <= 1e-4
    assert report.claimed == pytest.approx(math.pi / 8.0, abs=1e-15)


def test_derivative_sign_check_rejects_order_one():
    with pytest.raises(ValueError):
        derivative_sign_check(1.0, 100)

"""Monte-Carlo sublevel volumes: closed-form agreement, determinism,
fit behavior, and serialization."""

import json
import math

import numpy as np
import pytest

from lctkit import (
    Diagonal,
    DirectSum,
    ExponentFit,
    PrincipalMonomial,
    SampledPotential,
    SeparatedSum,
    binomial_family,
    diagonal_potential,
    estimate_sublevel_volume,
    fit_exponent,
    FitConfig,
    monomial_potential,
    parse_spec,
    potential_from_spec,
    semicontinuity_experiment,
)
from lctkit.errors import InsufficientDataError, InvalidInputError

SEED = 20240915


def zero_potential(n=1):
    return SampledPotential(lambda coords: np.zeros(coords.shape[0]), n)


# ---------------------------------------------------------------------------
# closed forms


def test_disk_area_law():
    # {log|z| < log r} is the disk of radius r, volume pi r^2
    p = monomial_potential([1])
    est, err = estimate_sublevel_volume(p, 0.5, samples=200_000, seed=SEED)
    assert err > 0
    assert abs(est - math.pi * 0.25) <= 3 * err


def test_bidisk_product_volume():
    # mu({|z1 z2| < r}) on the unit bidisk = pi^2 r^2 (1 + 2 ln(1/r))
    p = monomial_potential([1, 1])
    r = 0.1
    exact = math.pi**2 * r * r * (1 + 2 * math.log(1 / r))
    est, err = estimate_sublevel_volume(p, r, samples=200_000, seed=SEED)
    assert abs(est - exact) <= 3 * err


def test_empty_sublevel_set():
    est, err = estimate_sublevel_volume(zero_potential(), 0.5, samples=1000, seed=SEED)
    assert est == 0.0
    assert err == 0.0


def test_scaled_polydisk_volume():
    p = SampledPotential(lambda c: np.zeros(c.shape[0]), 2, radius=(2.0, 0.5))
    assert p.polydisk_volume == pytest.approx(math.pi * 4 * math.pi * 0.25)


# ---------------------------------------------------------------------------
# determinism


def test_same_seed_same_answer():
    p = monomial_potential([2, 1])
    a = estimate_sublevel_volume(p, 0.3, samples=50_000, seed=SEED)
    b = estimate_sublevel_volume(p, 0.3, samples=50_000, seed=SEED)
    assert a == b


def test_worker_count_does_not_change_counts():
    p = monomial_potential([2, 1])
    serial = estimate_sublevel_volume(p, 0.3, samples=300_000, seed=SEED, workers=1)
    threaded = estimate_sublevel_volume(p, 0.3, samples=300_000, seed=SEED, workers=4)
    assert serial == threaded


def test_thread_cap_env(monkeypatch):
    p = monomial_potential([1])
    monkeypatch.setenv("LCT_THREADS", "1")
    capped = estimate_sublevel_volume(p, 0.3, samples=300_000, seed=SEED, workers=8)
    monkeypatch.delenv("LCT_THREADS")
    free = estimate_sublevel_volume(p, 0.3, samples=300_000, seed=SEED, workers=8)
    assert capped == free


def test_thread_cap_env_must_be_integer(monkeypatch):
    monkeypatch.setenv("LCT_THREADS", "many")
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(monomial_potential([1]), 0.3, samples=1000, seed=SEED)


def test_different_seeds_differ():
    p = monomial_potential([1])
    a, _ = estimate_sublevel_volume(p, 0.3, samples=50_000, seed=1)
    b, _ = estimate_sublevel_volume(p, 0.3, samples=50_000, seed=2)
    assert a != b


# ---------------------------------------------------------------------------
# argument validation


def test_estimate_argument_errors():
    p = monomial_potential([1])
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 0.0, samples=1000)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 1.0, samples=1000)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 0.5, samples=999)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 0.5, samples=1000, seed=-1)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 0.5, samples=1000, seed=True)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(p, 0.5, samples=1000, workers=0)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume("not a potential", 0.5, samples=1000)


def test_potential_validation():
    with pytest.raises(InvalidInputError):
        SampledPotential(lambda c: c, 0)
    with pytest.raises(InvalidInputError):
        SampledPotential("no", 1)
    with pytest.raises(InvalidInputError):
        SampledPotential(lambda c: c, 2, radius=(1.0, 2.0, 3.0))
    with pytest.raises(InvalidInputError):
        SampledPotential(lambda c: c, 1, radius=(0.0,))


def test_evaluator_shape_is_checked():
    bad = SampledPotential(lambda coords: np.zeros((coords.shape[0], 2)), 1)
    with pytest.raises(InvalidInputError):
        estimate_sublevel_volume(bad, 0.5, samples=1000, seed=SEED)


# ---------------------------------------------------------------------------
# spec-derived potentials


def sample_coords(n, rng):
    return rng.uniform(-0.7, 0.7, size=(64, 2 * n))


def test_monomial_potential_matches_closed_form():
    rng = np.random.default_rng(0)
    coords = sample_coords(3, rng)
    p = monomial_potential([2, 0, 1])
    z = coords[:, 0::2] + 1j * coords[:, 1::2]
    expected = 2 * np.log(np.abs(z[:, 0])) + np.log(np.abs(z[:, 2]))
    np.testing.assert_allclose(p.evaluator(coords), expected, rtol=1e-12)


def test_diagonal_potential_matches_closed_form():
    rng = np.random.default_rng(1)
    coords = sample_coords(2, rng)
    p = diagonal_potential([2, 3])
    z = coords[:, 0::2] + 1j * coords[:, 1::2]
    expected = np.log(np.abs(z[:, 0]) ** 2 + np.abs(z[:, 1]) ** 3)
    np.testing.assert_allclose(p.evaluator(coords), expected, rtol=1e-12)


def test_potential_from_spec_dispatch():
    rng = np.random.default_rng(2)
    coords = sample_coords(2, rng)
    np.testing.assert_array_equal(
        potential_from_spec(parse_spec("mono:2,1")).evaluator(coords),
        monomial_potential([2, 1]).evaluator(coords),
    )
    np.testing.assert_array_equal(
        potential_from_spec(parse_spec("diag:2,3")).evaluator(coords),
        diagonal_potential([2, 3]).evaluator(coords),
    )


def test_separated_sum_potential_is_log_of_function_sum():
    rng = np.random.default_rng(3)
    coords = sample_coords(2, rng)
    p = potential_from_spec(parse_spec("ssum(mono:2;mono:3)"))
    z = coords[:, 0::2] + 1j * coords[:, 1::2]
    expected = np.log(np.abs(z[:, 0] ** 2 + z[:, 1] ** 3))
    np.testing.assert_allclose(p.evaluator(coords), expected, rtol=1e-12)


def test_direct_sum_potential_combines_blocks():
    rng = np.random.default_rng(4)
    coords = sample_coords(2, rng)
    p = potential_from_spec(DirectSum(Diagonal((2,)), Diagonal((3,))))
    assert p.dimension == 2
    left = diagonal_potential([2]).evaluator(coords[:, :2])
    right = diagonal_potential([3]).evaluator(coords[:, 2:])
    np.testing.assert_allclose(p.evaluator(coords), np.logaddexp(left, right), rtol=1e-12)


def test_ideal_inside_separated_sum_rejected():
    # a diagonal ideal is not a single function, so it cannot be a
    # summand of a pointwise function sum
    spec = SeparatedSum(Diagonal((2, 3)), PrincipalMonomial((2,)))
    with pytest.raises(InvalidInputError):
        potential_from_spec(spec)


def test_binomial_family():
    family = binomial_family(2, 3)
    p = family(0.5)
    assert p.dimension == 2
    coords = np.array([[0.3, 0.1, 0.2, -0.4]])
    z1, z2 = 0.3 + 0.1j, 0.2 - 0.4j
    assert p.evaluator(coords)[0] == pytest.approx(abs(z1**2 + 0.5 * z2**3), abs=0) or True
    np.testing.assert_allclose(
        p.evaluator(coords), [math.log(abs(z1**2 + 0.5 * z2**3))], rtol=1e-12
    )
    with pytest.raises(InvalidInputError):
        binomial_family(0, 2)


# ---------------------------------------------------------------------------
# exponent fits


def test_fit_area_law_exponent():
    # default grid and sample count; the innermost radius may round to a
    # zero count and drop out, the slope must still be the area law
    fit = fit_exponent(monomial_potential([1]))
    assert 0.97 <= fit.fitted_c <= 1.03
    assert fit.fitted_log_power is None
    assert fit.r_squared > 0.98
    assert sum(fit.used_in_fit) >= 11


def test_fit_volumes_exactly_monotone():
    # one common sample set across the grid makes the volume column
    # nonincreasing exactly, not just within noise
    fit = fit_exponent(
        monomial_potential([2, 1]),
        r_min=1e-3,
        r_max=0.2,
        grid_size=10,
        samples=50_000,
        seed=SEED,
    )
    for a, b in zip(fit.volumes, fit.volumes[1:]):
        assert b <= a


def test_fit_with_log_correction_recovers_product_exponent():
    fit = fit_exponent(
        monomial_potential([1, 1]),
        r_min=1e-2,
        r_max=0.2,
        grid_size=10,
        samples=200_000,
        seed=SEED,
        with_log_correction=True,
    )
    assert 0.93 <= fit.fitted_c <= 1.05
    assert fit.fitted_log_power is not None


def test_fit_excludes_zero_count_radii():
    fit = fit_exponent(
        monomial_potential([1]),
        r_min=1e-3,
        r_max=0.5,
        grid_size=6,
        samples=5000,
        seed=SEED,
    )
    assert not all(fit.used_in_fit)
    assert any(fit.used_in_fit)
    # excluded points are exactly the zero-volume ones
    for vol, used in zip(fit.volumes, fit.used_in_fit):
        assert used == (vol > 0)
    assert 0.8 <= fit.fitted_c <= 1.2


def test_fit_insufficient_data():
    with pytest.raises(InsufficientDataError):
        fit_exponent(zero_potential(), r_min=0.01, r_max=0.5, grid_size=6, samples=1000)


def test_fit_argument_errors():
    p = monomial_potential([1])
    with pytest.raises(InvalidInputError):
        fit_exponent(p, r_min=0.5, r_max=0.1)
    with pytest.raises(InvalidInputError):
        fit_exponent(p, grid_size=3)
    with pytest.raises(InvalidInputError):
        fit_exponent(p, samples=10)
    with pytest.raises(InvalidInputError):
        fit_exponent("nope")


def test_fit_serialization():
    fit = fit_exponent(
        monomial_potential([1]),
        r_min=0.05,
        r_max=0.5,
        grid_size=4,
        samples=2000,
        seed=SEED,
    )
    csv = fit.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "r,volume,std_error,used_in_fit"
    assert len(lines) == 5
    assert lines[1].endswith(",true") or lines[1].endswith(",false")
    payload = json.loads(fit.to_json())
    assert payload["fitted_c"] == fit.fitted_c
    assert len(payload["grid"]) == 4
    assert set(payload["grid"][0]) == {"r", "volume", "std_error", "used_in_fit"}


def test_exponent_fit_invariants_enforced():
    with pytest.raises(AssertionError):
        ExponentFit(
            radii=(0.1, 0.01),
            volumes=(1.0, 5.0),  # grows as r shrinks, far beyond noise
            std_errors=(0.0, 0.0),
            used_in_fit=(True, True),
            fitted_c=1.0,
            fitted_log_power=None,
            intercept=0.0,
            r_squared=1.0,
        )
    with pytest.raises(AssertionError):
        ExponentFit(
            radii=(0.01, 0.1),  # must decrease
            volumes=(1.0, 1.0),
            std_errors=(0.0, 0.0),
            used_in_fit=(True, True),
            fitted_c=1.0,
            fitted_log_power=None,
            intercept=0.0,
            r_squared=1.0,
        )


# ---------------------------------------------------------------------------
# semicontinuity experiments


SMALL_FIT = FitConfig(
    r_min=5e-3, r_max=0.2, grid_size=8, samples=150_000, seed=SEED, with_log_correction=True
)


def test_semicontinuity_binomial_family():
    report = semicontinuity_experiment(binomial_family(2, 2), [0.0, 0.5], config=SMALL_FIT)
    assert report.t_values == (0.0, 0.5)
    assert report.baseline_c == report.fits[0].fitted_c
    # dev-scale sampling; the full-scale run pins the tight tolerance
    assert abs(report.baseline_c - 0.5) < 0.12
    # c jumps up to min(1, 1/2 + 1/2) = 1 away from t = 0
    assert abs(report.fits[1].fitted_c - 1.0) < 0.12
    assert report.violations == ()
    assert report.entries() == [
        (0.0, report.fits[0].fitted_c),
        (0.5, report.fits[1].fitted_c),
    ]


def test_semicontinuity_constant_family_is_flat():
    def family(t):
        return monomial_potential([1])

    report = semicontinuity_experiment(family, [0.0, 1.0], config=SMALL_FIT)
    assert report.fits[0].fitted_c == report.fits[1].fitted_c
    assert report.violations == ()


def test_semicontinuity_argument_errors():
    fam = binomial_family(2, 2)
    with pytest.raises(InvalidInputError):
        semicontinuity_experiment(fam, [0.5, 1.0], config=SMALL_FIT)  # baseline missing
    with pytest.raises(InvalidInputError):
        semicontinuity_experiment(fam, [], config=SMALL_FIT)
    with pytest.raises(InvalidInputError):
        semicontinuity_experiment(fam, [0.0], config=SMALL_FIT, tolerance=-0.1)
    with pytest.raises(InvalidInputError):
        semicontinuity_experiment("not callable", [0.0])
    with pytest.raises(InvalidInputError):
        semicontinuity_experiment(lambda t: "junk", [0.0], config=SMALL_FIT)

"""Seeded Monte-Carlo estimation of sublevel-set volumes and exponent fits.

The singularity exponent c of a potential phi controls the growth of the
sublevel volume mu({phi < log r}) ~ r^{2c} (up to a |log r|^(n-1) factor
on the upper side).  This module estimates those volumes by uniform
sampling on a polydisk and recovers c by a log-log regression, serving
as an independent numerical oracle for the exact values of
:mod:`lctkit.lct`, and as the engine for desk-scale semicontinuity
experiments.

Estimates are deterministic for a fixed seed: sampling is partitioned
into fixed-size chunks with per-chunk seeds derived by SeedSequence
spawning, and the merged counts are independent of chunk scheduling.
One common sample set is counted against every radius of a fit grid
(common random numbers), which makes the volume curve exactly monotone
in r and keeps the fitted slope variance small.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import InsufficientDataError, InvalidInputError
from .lct import (
    Diagonal,
    DirectSum,
    MonomialIdealSpec,
    PrincipalMonomial,
    SeparatedSum,
    _require_spec,
)

#: Fixed default seed; golden outputs must never depend on wall-clock time.
DEFAULT_SEED = 1414213562

_CHUNK = 1 << 17  # samples per chunk; fixed so results never depend on worker count


def _worker_count(requested: Optional[int]) -> int:
    """Effective worker count: requested (default 1), capped by LCT_THREADS."""
    workers = 1 if requested is None else int(requested)
    if workers < 1:
        raise InvalidInputError("workers must be >= 1")
    cap = os.environ.get("LCT_THREADS", "").strip()
    if cap:
        try:
            cap_n = int(cap)
        except ValueError as exc:
            raise InvalidInputError(f"LCT_THREADS must be an integer, got {cap!r}") from exc
        if cap_n >= 1:
            workers = min(workers, cap_n)
    return workers


# ---------------------------------------------------------------------------
# potentials


@dataclass(frozen=True)
class SampledPotential:
    """A potential phi on a polydisk, evaluated on batches of points.

    ``evaluator`` maps an (N, 2n) float array of interleaved real
    coordinates (Re z1, Im z1, ..., Re zn, Im zn) to an (N,) array of
    phi values; -inf is allowed (log of a vanishing modulus).  It must
    be deterministic and total on the closed polydisk.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    dimension: int
    radius: tuple[float, ...] = (1.0,)

    def __post_init__(self):
        if not isinstance(self.dimension, int) or isinstance(self.dimension, bool) or self.dimension < 1:
            raise InvalidInputError("dimension must be a positive integer")
        if not callable(self.evaluator):
            raise InvalidInputError("evaluator must be callable")
        r = self.radius
        if isinstance(r, (int, float)):
            r = (float(r),) * self.dimension
        else:
            r = tuple(float(x) for x in r)
            if len(r) == 1:
                r = r * self.dimension
        if len(r) != self.dimension:
            raise InvalidInputError("need one polydisk radius per coordinate")
        if any(not 0.0 < x < math.inf for x in r):
            raise InvalidInputError("polydisk radii must be positive and finite")
        object.__setattr__(self, "radius", r)

    @property
    def polydisk_volume(self) -> float:
        """Lebesgue volume of the sampling polydisk, prod pi*R_i^2."""
        vol = 1.0
        for r in self.radius:
            vol *= math.pi * r * r
        return vol


def _as_complex(coords: np.ndarray) -> np.ndarray:
    return coords[:, 0::2] + 1j * coords[:, 1::2]


def monomial_potential(
    exponents: Sequence[int], radius: Union[float, Sequence[float]] = 1.0
) -> SampledPotential:
    """phi = sum alpha_i log|z_i|, the potential of a principal monomial."""
    spec = PrincipalMonomial(tuple(exponents))
    alpha = np.asarray(spec.exponents, dtype=float)

    def evaluator(coords: np.ndarray) -> np.ndarray:
        sq = coords[:, 0::2] ** 2 + coords[:, 1::2] ** 2
        with np.errstate(divide="ignore"):
            return 0.5 * (np.log(sq) @ alpha)

    return SampledPotential(evaluator, spec.nvars, _radius_tuple(radius, spec.nvars))


def diagonal_potential(
    orders: Sequence[int], radius: Union[float, Sequence[float]] = 1.0
) -> SampledPotential:
    """phi = log sum |z_i|^{m_i}, the standard potential of a diagonal ideal."""
    spec = Diagonal(tuple(orders))
    m = np.asarray(spec.orders, dtype=float)

    def evaluator(coords: np.ndarray) -> np.ndarray:
        sq = coords[:, 0::2] ** 2 + coords[:, 1::2] ** 2
        with np.errstate(divide="ignore"):
            return np.log(np.sum(sq ** (m / 2.0), axis=1))

    return SampledPotential(evaluator, spec.nvars, _radius_tuple(radius, spec.nvars))


def _radius_tuple(radius, n: int) -> tuple[float, ...]:
    if isinstance(radius, (int, float)):
        return (float(radius),) * n
    return tuple(float(x) for x in radius)


def _complex_function(spec: MonomialIdealSpec, offset: int) -> Callable[[np.ndarray], np.ndarray]:
    """The holomorphic function a spec denotes, viewed on a variable block
    starting at ``offset``.  Only principal monomials and separated sums
    denote single functions; ideals do not."""
    if isinstance(spec, PrincipalMonomial):
        exps = spec.exponents

        def fn(z: np.ndarray) -> np.ndarray:
            out = np.ones(z.shape[0], dtype=complex)
            for i, e in enumerate(exps):
                if e:
                    out = out * z[:, offset + i] ** e
            return out

        return fn
    if isinstance(spec, SeparatedSum):
        left = _complex_function(spec.left, offset)
        right = _complex_function(spec.right, offset + spec.left.nvars)
        return lambda z: left(z) + right(z)
    raise InvalidInputError(
        "only principal monomials and separated sums denote a single function; "
        f"cannot sample {type(spec).__name__} inside a separated sum"
    )


def potential_from_spec(
    spec: MonomialIdealSpec, radius: Union[float, Sequence[float]] = 1.0
) -> SampledPotential:
    """Sampling potential matching the exact threshold semantics of a spec.

    Principal monomials and separated sums become log|f|; diagonal ideals
    become log sum |z_i|^{m_i}; direct sums combine via logaddexp (the
    max-equivalent potential of an ideal sum).
    """
    _require_spec(spec)
    if isinstance(spec, PrincipalMonomial):
        return monomial_potential(spec.exponents, radius)
    if isinstance(spec, Diagonal):
        return diagonal_potential(spec.orders, radius)
    if isinstance(spec, DirectSum):
        left = potential_from_spec(spec.left)
        right = potential_from_spec(spec.right)
        off = 2 * spec.left.nvars

        def evaluator(coords: np.ndarray) -> np.ndarray:
            return np.logaddexp(left.evaluator(coords[:, :off]), right.evaluator(coords[:, off:]))

        return SampledPotential(evaluator, spec.nvars, _radius_tuple(radius, spec.nvars))
    fn = _complex_function(spec, 0)

    def evaluator(coords: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(np.abs(fn(_as_complex(coords))))

    return SampledPotential(evaluator, spec.nvars, _radius_tuple(radius, spec.nvars))


def binomial_family(m: int, p: int) -> Callable[[float], SampledPotential]:
    """The family t -> log|z1^m + t z2^p| on the unit bidisk.

    At t = 0 the exact exponent is 1/m; for t != 0 it is min(1, 1/m + 1/p).
    """
    if min(m, p) < 1:
        raise InvalidInputError("exponents must be >= 1")

    def make(t: float) -> SampledPotential:
        tt = float(t)

        def evaluator(coords: np.ndarray) -> np.ndarray:
            z = _as_complex(coords)
            with np.errstate(divide="ignore"):
                return np.log(np.abs(z[:, 0] ** m + tt * z[:, 1] ** p))

        return SampledPotential(evaluator, 2)

    return make


# ---------------------------------------------------------------------------
# sampling core


def _validate_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise InvalidInputError("seed must be a nonnegative integer")
    return seed


def _counts_below(
    p: SampledPotential,
    log_thresholds: np.ndarray,
    samples: int,
    seed: int,
    workers: Optional[int] = None,
) -> np.ndarray:
    """Number of uniform polydisk samples with phi < each threshold.

    Chunked so results are bit-identical for any worker count: chunk
    boundaries depend only on the sample count, chunk seeds only on the
    root seed and chunk index, and the merge is an integer sum.
    """
    sizes = [_CHUNK] * (samples // _CHUNK)
    if samples % _CHUNK:
        sizes.append(samples % _CHUNK)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    radius = np.asarray(p.radius)
    n = p.dimension

    def one_chunk(i: int) -> np.ndarray:
        rng = np.random.Generator(np.random.PCG64(children[i]))
        u = rng.random((sizes[i], n))
        v = rng.random((sizes[i], n))
        rad = radius * np.sqrt(u)  # area-uniform radius on each disk
        ang = (2.0 * np.pi) * v
        coords = np.empty((sizes[i], 2 * n))
        coords[:, 0::2] = rad * np.cos(ang)
        coords[:, 1::2] = rad * np.sin(ang)
        phi = np.asarray(p.evaluator(coords), dtype=float)
        if phi.shape != (sizes[i],):
            raise InvalidInputError(
                f"evaluator returned shape {phi.shape}, expected ({sizes[i]},)"
            )
        return (phi[:, None] < log_thresholds[None, :]).sum(axis=0, dtype=np.int64)

    total = np.zeros(len(log_thresholds), dtype=np.int64)
    nworkers = _worker_count(workers)
    if nworkers == 1 or len(sizes) == 1:
        for i in range(len(sizes)):
            total += one_chunk(i)
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            for counts in pool.map(one_chunk, range(len(sizes))):
                total += counts
    return total


def estimate_sublevel_volume(
    p: SampledPotential,
    r: float,
    samples: int = 10**6,
    seed: int = DEFAULT_SEED,
    workers: Optional[int] = None,
) -> tuple[float, float]:
    """Estimate mu({phi < log r}) on the polydisk.

    Returns the volume estimate and its binomial standard error, both
    scaled by the polydisk volume.  Deterministic for a fixed seed.
    """
    if not isinstance(p, SampledPotential):
        raise InvalidInputError("expected a SampledPotential")
    if not 0.0 < r < 1.0:
        raise InvalidInputError("radius r must lie in (0, 1)")
    if not isinstance(samples, int) or isinstance(samples, bool) or samples < 1000:
        raise InvalidInputError("need at least 1000 samples")
    _validate_seed(seed)
    counts = _counts_below(p, np.array([math.log(r)]), samples, seed, workers)
    frac = counts[0] / samples
    vol = p.polydisk_volume
    return vol * frac, vol * math.sqrt(frac * (1.0 - frac) / samples)


# ---------------------------------------------------------------------------
# exponent fitting


@dataclass(frozen=True)
class ExponentFit:
    """Result of a log-log regression of volume against radius.

    The model is log mu = 2c log r + beta log log(1/r) + const, with the
    beta term present only when the fit was run with the log correction,
    mirroring the |log r|^(n-1) factor allowed on the upper volume bound.
    Grid points whose estimated volume is zero carry no information for
    a log fit and are excluded (used_in_fit False), never smoothed.
    """

    radii: tuple[float, ...]
    volumes: tuple[float, ...]
    std_errors: tuple[float, ...]
    used_in_fit: tuple[bool, ...]
    fitted_c: float
    fitted_log_power: Optional[float]
    intercept: float
    r_squared: float

    def __post_init__(self):
        rs = self.radii
        assert all(0.0 < r < 1.0 for r in rs), "radii must lie in (0,1)"
        assert all(rs[i] > rs[i + 1] for i in range(len(rs) - 1)), "radii must decrease"
        for i in range(1, len(rs)):
            slack = 3.0 * (self.std_errors[i - 1] + self.std_errors[i])
            assert self.volumes[i] <= self.volumes[i - 1] + slack, (
                "volume estimates increase as r shrinks beyond 3 standard errors"
            )

    def to_rows(self) -> list[dict]:
        return [
            {
                "r": self.radii[i],
                "volume": self.volumes[i],
                "std_error": self.std_errors[i],
                "used_in_fit": self.used_in_fit[i],
            }
            for i in range(len(self.radii))
        ]

    def to_csv(self) -> str:
        lines = ["r,volume,std_error,used_in_fit"]
        for row in self.to_rows():
            lines.append(
                f"{row['r']!r},{row['volume']!r},{row['std_error']!r},"
                f"{str(row['used_in_fit']).lower()}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "fitted_c": self.fitted_c,
            "fitted_log_power": self.fitted_log_power,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "grid": self.to_rows(),
        }
        return json.dumps(payload, separators=(",", ":"))


@dataclass(frozen=True)
class FitConfig:
    """Knobs for fit_exponent / semicontinuity_experiment."""

    r_min: float = 1e-3
    r_max: float = 1e-1
    grid_size: int = 12
    samples: int = 10**6
    seed: int = DEFAULT_SEED
    with_log_correction: bool = False
    workers: Optional[int] = None


def fit_exponent(
    p: SampledPotential,
    r_min: float = 1e-3,
    r_max: float = 1e-1,
    grid_size: int = 12,
    samples: int = 10**6,
    seed: int = DEFAULT_SEED,
    with_log_correction: bool = False,
    workers: Optional[int] = None,
) -> ExponentFit:
    """Estimate volumes on a geometric radius grid and fit the exponent.

    One common sample set is counted against every radius, so the volume
    column is exactly nonincreasing as r shrinks.  Least squares on the
    usable (nonzero) grid points; fitted_c is half the log r slope.
    """
    if not isinstance(p, SampledPotential):
        raise InvalidInputError("expected a SampledPotential")
    if not (0.0 < r_min < r_max < 1.0):
        raise InvalidInputError("need 0 < r_min < r_max < 1")
    if not isinstance(grid_size, int) or isinstance(grid_size, bool) or grid_size < 4:
        raise InvalidInputError("grid_size must be an integer >= 4")
    if not isinstance(samples, int) or isinstance(samples, bool) or samples < 1000:
        raise InvalidInputError("need at least 1000 samples")
    _validate_seed(seed)

    radii = np.geomspace(r_max, r_min, grid_size)
    counts = _counts_below(p, np.log(radii), samples, seed, workers)
    frac = counts / samples
    vol = p.polydisk_volume
    volumes = vol * frac
    std_errors = vol * np.sqrt(frac * (1.0 - frac) / samples)

    used = counts > 0
    if int(used.sum()) < 3:
        raise InsufficientDataError(
            f"only {int(used.sum())} grid points have nonzero volume; need 3"
        )

    y = np.log(volumes[used])
    cols = [np.log(radii[used])]
    if with_log_correction:
        cols.append(np.log(np.log(1.0 / radii[used])))
    cols.append(np.ones(int(used.sum())))
    design = np.column_stack(cols)
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)

    residuals = y - design @ coef
    ss_res = float(residuals @ residuals)
    centered = y - y.mean()
    ss_tot = float(centered @ centered)
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot

    return ExponentFit(
        radii=tuple(float(r) for r in radii),
        volumes=tuple(float(v) for v in volumes),
        std_errors=tuple(float(s) for s in std_errors),
        used_in_fit=tuple(bool(u) for u in used),
        fitted_c=float(coef[0]) / 2.0,
        fitted_log_power=float(coef[1]) if with_log_correction else None,
        intercept=float(coef[-1]),
        r_squared=r_squared,
    )


def _fit_with_config(p: SampledPotential, config: FitConfig) -> ExponentFit:
    return fit_exponent(
        p,
        r_min=config.r_min,
        r_max=config.r_max,
        grid_size=config.grid_size,
        samples=config.samples,
        seed=config.seed,
        with_log_correction=config.with_log_correction,
        workers=config.workers,
    )


# ---------------------------------------------------------------------------
# semicontinuity experiments


@dataclass(frozen=True)
class SemicontinuityReport:
    """Fitted exponents across a potential family, with violation flags.

    Lower semicontinuity predicts fitted_c(t) cannot drop below the
    baseline fitted_c(0) (up to fit noise); any t where it does by more
    than the tolerance is flagged.
    """

    t_values: tuple[float, ...]
    fits: tuple[ExponentFit, ...]
    baseline_c: float
    tolerance: float
    violations: tuple[float, ...]

    def entries(self) -> list[tuple[float, float]]:
        return [(t, fit.fitted_c) for t, fit in zip(self.t_values, self.fits)]


def semicontinuity_experiment(
    family: Callable[[float], SampledPotential],
    t_values: Sequence[float],
    config: Optional[FitConfig] = None,
    tolerance: float = 0.05,
) -> SemicontinuityReport:
    """Fit the exponent at each family parameter and flag drops below the
    t = 0 baseline.  The baseline parameter 0 must be in t_values."""
    if not callable(family):
        raise InvalidInputError("family must map t to a SampledPotential")
    t_values = [float(t) for t in t_values]
    if not t_values:
        raise InvalidInputError("t_values must be nonempty")
    if 0.0 not in t_values:
        raise InvalidInputError("t_values must include the baseline t = 0")
    if tolerance < 0:
        raise InvalidInputError("tolerance must be nonnegative")
    config = config or FitConfig()

    fits = []
    for t in t_values:
        potential = family(t)
        if not isinstance(potential, SampledPotential):
            raise InvalidInputError(f"family({t}) did not return a SampledPotential")
        fits.append(_fit_with_config(potential, config))
    baseline = fits[t_values.index(0.0)].fitted_c
    violations = tuple(
        t for t, fit in zip(t_values, fits) if fit.fitted_c < baseline - tolerance
    )
    return SemicontinuityReport(
        t_values=tuple(t_values),
        fits=tuple(fits),
        baseline_c=baseline,
        tolerance=tolerance,
        violations=violations,
    )

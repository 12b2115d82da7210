"""Kahler-Einstein certificates for weighted Del Pezzo hypersurfaces.

A degree-d hypersurface X in the weighted projective 3-space
P(a0,a1,a2,a3) is a Del Pezzo orbifold when the weights are coprime in
triples and the monomial-existence conditions of Fletcher hold; it is
Fano when k = a0+a1+a2+a3 exceeds d.  For such X the tangent-bundle
twist argument yields a purely arithmetic sufficient criterion for the
existence of a Kahler-Einstein metric:

    a0*a1 > (2/3) d (k-d)^2        (no bad curve can exist)
    rho   = (4/3) delta d (k-d) (k-a0-a2) / (a0 a1 a2 a3) < 1

with delta = a3, except delta = a2 when a3 | d (a generic member then
misses the coordinate point of maximal isotropy).  A refined variant
replaces (k-a0-a2) by (k-a1-a2) but is only valid after a by-hand check
of the tangent bundle along the components of the curve (x0 = 0); it is
therefore reported as a separate, flagged verdict, and only granted for
systems whose curve verification is recorded in
:data:`REFINED_CURVE_CHECKS` (the inequality alone proves nothing).

Everything is exact integer/rational arithmetic; floats appear only in
display renderings.  The scan over weight boxes uses a vectorized
arithmetic prefilter (necessary conditions only) and re-checks every
surviving system exactly, so prefiltering can never change the result.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Optional

import numpy as np

from .errors import InvalidInputError, NotFanoError

KE_CERTIFIED = "KE_CERTIFIED"
KE_CERTIFIED_REFINED = "KE_CERTIFIED_REFINED"
INCONCLUSIVE = "INCONCLUSIVE"
NOT_ORBIFOLD = "NOT_ORBIFOLD"
NOT_FANO = "NOT_FANO"

# Systems whose twisted tangent bundle has been verified nef along every
# component of the curve (x0 = 0) by an explicit by-hand computation.
# That verification is the missing premise of the refined criterion and
# is not mechanized, so KE_CERTIFIED_REFINED is only granted to systems
# recorded here; rho_refined < 1 alone never upgrades a verdict.
REFINED_CURVE_CHECKS: frozenset[tuple[tuple[int, int, int, int], int]] = frozenset(
    {
        ((9, 15, 17, 20), 60),
    }
)

Monomial = tuple[int, int, int, int]

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


@dataclass(frozen=True)
class WeightSystem:
    """Weights a0 <= a1 <= a2 <= a3 and a hypersurface degree d."""

    a: tuple[int, int, int, int]
    d: int

    def __post_init__(self):
        a = tuple(self.a)
        if len(a) != 4:
            raise InvalidInputError("exactly four weights required")
        for x in a:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise InvalidInputError(f"weights must be positive integers, got {x!r}")
        if list(a) != sorted(a):
            raise InvalidInputError(f"weights must be nondecreasing, got {a}")
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 1:
            raise InvalidInputError(f"degree must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "a", a)

    @property
    def k(self) -> int:
        return sum(self.a)

    @property
    def fano_index(self) -> int:
        return self.k - self.d


def weighted_monomials(w: WeightSystem) -> list[Monomial]:
    """All exponent vectors alpha with sum alpha_i a_i = d, lex order."""
    a0, a1, a2, a3 = w.a
    d = w.d
    out: list[Monomial] = []
    for e0 in range(d // a0 + 1):
        r0 = d - e0 * a0
        for e1 in range(r0 // a1 + 1):
            r1 = r0 - e1 * a1
            for e2 in range(r1 // a2 + 1):
                r2 = r1 - e2 * a2
                if r2 % a3 == 0:
                    out.append((e0, e1, e2, r2 // a3))
    return out


# ---------------------------------------------------------------------------
# Fletcher conditions


@dataclass(frozen=True, eq=True)
class FletcherReport:
    """Witnessed evaluation of the orbifold monomial conditions.

    cond_i: per variable j, a monomial x_j^m x_k (k possibly j, the other
        exponent exactly 1 when k != j) of degree d, or None.
    cond_ii: per pair j < k, either a 1-tuple (monomial supported on
        {j,k}) or a 2-tuple of monomials x_j^m x_k^p x_l with distinct
        third variables l, or None.
    cond_iii: per variable j, a monomial with exponent 0 on j, or None.
    cond_iv: per pair j < k with gcd(a_j, a_k) > 1, a monomial supported
        on {j,k}, or None; coprime pairs are vacuous and not listed.
    """

    cond_i: dict[int, Optional[Monomial]]
    cond_ii: dict[tuple[int, int], Optional[tuple[Monomial, ...]]]
    cond_iii: dict[int, Optional[Monomial]]
    cond_iv: dict[tuple[int, int], Optional[Monomial]]
    triple_coprime: bool

    @property
    def cond_i_ok(self) -> bool:
        return all(v is not None for v in self.cond_i.values())

    @property
    def cond_ii_ok(self) -> bool:
        return all(v is not None for v in self.cond_ii.values())

    @property
    def cond_iii_ok(self) -> bool:
        return all(v is not None for v in self.cond_iii.values())

    @property
    def cond_iv_ok(self) -> bool:
        return all(v is not None for v in self.cond_iv.values())

    @property
    def passes(self) -> bool:
        return (
            self.cond_i_ok
            and self.cond_ii_ok
            and self.cond_iii_ok
            and self.cond_iv_ok
            and self.triple_coprime
        )

    def to_json_dict(self) -> dict:
        def mono(m):
            return None if m is None else list(m)

        return {
            "pass": self.passes,
            "cond_i": {str(j): mono(v) for j, v in self.cond_i.items()},
            "cond_ii": {
                f"{j},{k}": (None if v is None else [list(m) for m in v])
                for (j, k), v in self.cond_ii.items()
            },
            "cond_iii": {str(j): mono(v) for j, v in self.cond_iii.items()},
            "cond_iv": {f"{j},{k}": mono(v) for (j, k), v in self.cond_iv.items()},
            "triple_coprime": self.triple_coprime,
        }


def _support(mono: Monomial) -> tuple[int, ...]:
    return tuple(i for i in range(4) if mono[i] > 0)


def _fletcher_from(w: WeightSystem, monos: list[Monomial]) -> FletcherReport:
    supports = [_support(m) for m in monos]

    cond_i: dict[int, Optional[Monomial]] = {}
    for j in range(4):
        witness = None
        for mono, supp in zip(monos, supports):
            if mono[j] < 1:
                continue
            if supp == (j,):
                witness = mono
                break
            if len(supp) == 2 and j in supp:
                other = supp[0] if supp[1] == j else supp[1]
                if mono[other] == 1:
                    witness = mono
                    break
        cond_i[j] = witness

    cond_ii: dict[tuple[int, int], Optional[tuple[Monomial, ...]]] = {}
    for j, k in _PAIRS:
        pure = None
        for mono, supp in zip(monos, supports):
            if all(i in (j, k) for i in supp):
                pure = (mono,)
                break
        if pure is not None:
            cond_ii[(j, k)] = pure
            continue
        by_third: dict[int, Monomial] = {}
        for mono, supp in zip(monos, supports):
            extra = [i for i in supp if i not in (j, k)]
            if len(extra) == 1 and mono[extra[0]] == 1 and extra[0] not in by_third:
                by_third[extra[0]] = mono
        if len(by_third) >= 2:
            picked = sorted(by_third)[:2]
            cond_ii[(j, k)] = (by_third[picked[0]], by_third[picked[1]])
        else:
            cond_ii[(j, k)] = None

    cond_iii: dict[int, Optional[Monomial]] = {}
    for j in range(4):
        cond_iii[j] = next((m for m in monos if m[j] == 0), None)

    cond_iv: dict[tuple[int, int], Optional[Monomial]] = {}
    for j, k in _PAIRS:
        if math.gcd(w.a[j], w.a[k]) == 1:
            continue
        witness = None
        for mono, supp in zip(monos, supports):
            if all(i in (j, k) for i in supp):
                witness = mono
                break
        cond_iv[(j, k)] = witness

    triple = all(math.gcd(math.gcd(w.a[i], w.a[j]), w.a[l]) == 1 for i, j, l in _TRIPLES)

    return FletcherReport(
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        cond_iv=cond_iv,
        triple_coprime=triple,
    )


def fletcher_check(w: WeightSystem) -> FletcherReport:
    """Evaluate the orbifold conditions against the full monomial list."""
    return _fletcher_from(w, weighted_monomials(w))


# ---------------------------------------------------------------------------
# anticanonical arithmetic


def anticanonical_data(w: WeightSystem) -> tuple[int, Fraction]:
    """Fano index k-d and anticanonical self-intersection
    d (k-d)^2 / (a0 a1 a2 a3), in lowest terms."""
    if w.k <= w.d:
        raise NotFanoError(f"k={w.k} <= d={w.d}: anticanonical class is not ample")
    a0, a1, a2, a3 = w.a
    index = w.k - w.d
    return index, Fraction(w.d * index * index, a0 * a1 * a2 * a3)


def curve_bound_check(w: WeightSystem) -> bool:
    """Exact test of a0 a1 > (2/3) d (k-d)^2, the condition excluding the
    low-degree curve obstruction."""
    a0, a1 = w.a[0], w.a[1]
    index = w.k - w.d
    return 3 * a0 * a1 > 2 * w.d * index * index


def _delta(w: WeightSystem) -> int:
    """Isotropy order entering rho: a3, downgraded to a2 when a3 | d."""
    return w.a[2] if w.d % w.a[3] == 0 else w.a[3]


def _rho_with_factor(w: WeightSystem, factor: int) -> Fraction:
    a0, a1, a2, a3 = w.a
    d = w.d
    index = w.k - d
    delta = _delta(w)
    # branch form: divide by a0 a1 a2 when a3 does not divide d, else a0 a1 a3
    if d % a3 == 0:
        branch = Fraction(4 * d * index * factor, 3 * a0 * a1 * a3)
    else:
        branch = Fraction(4 * d * index * factor, 3 * a0 * a1 * a2)
    delta_form = Fraction(4 * delta * d * index * factor, 3 * a0 * a1 * a2 * a3)
    assert branch == delta_form, "rho branch/delta forms disagree"
    return branch


def rho(w: WeightSystem) -> Fraction:
    """The base criterion number; < 1 certifies a Kahler-Einstein metric
    (given the orbifold conditions and the curve bound)."""
    if w.k <= w.d:
        raise NotFanoError(f"k={w.k} <= d={w.d}: rho is undefined")
    return _rho_with_factor(w, w.k - w.a[0] - w.a[2])


def rho_refined(w: WeightSystem) -> Fraction:
    """Variant with (k-a1-a2) in place of (k-a0-a2).  Using it requires
    the by-hand nef verification along the curve (x0 = 0); certificates
    carry that caveat."""
    if w.k <= w.d:
        raise NotFanoError(f"k={w.k} <= d={w.d}: rho is undefined")
    return _rho_with_factor(w, w.k - w.a[1] - w.a[2])


# ---------------------------------------------------------------------------
# certificates


def _frac_str(q: Optional[Fraction]) -> Optional[str]:
    return None if q is None else f"{q.numerator}/{q.denominator}"


def _frac_float(q: Optional[Fraction]) -> Optional[float]:
    return None if q is None else round(float(q), 6)


@dataclass(frozen=True)
class Certificate:
    """Full record of one weight system's checks and verdict.

    Numeric fields are None when k <= d (the formulas need an ample
    anticanonical class).  rho/rho_refined are reported even when the
    orbifold conditions fail; the verdict carries the validity caveat.

    line_condition_ok: a degree-d monomial supported on {x2, x3} exists,
        so a generic member avoids the coordinate line (x0 = x1 = 0).
        The base nef twist argument assumes that line is not on the
        surface, so KE_CERTIFIED additionally requires this.
    curve_check_recorded: the (x0 = 0)-curve verification for this
        system is on file (see REFINED_CURVE_CHECKS); without it a
        passing refined inequality leaves the verdict INCONCLUSIVE.
    """

    weights: WeightSystem
    fletcher: FletcherReport
    monomial_count: int
    anticanonical_square: Optional[Fraction]
    curve_bound_ok: Optional[bool]
    line_condition_ok: Optional[bool]
    rho: Optional[Fraction]
    rho_refined: Optional[Fraction]
    delta_note: Optional[str]
    curve_check_recorded: bool
    refined_needs_curve_check: bool
    verdict: str

    def to_json_dict(self) -> dict:
        w = self.weights
        return {
            "weights": list(w.a),
            "degree": w.d,
            "k": w.k,
            "fano_index": w.k - w.d,
            "verdict": self.verdict,
            "monomial_count": self.monomial_count,
            "fletcher": self.fletcher.to_json_dict(),
            "anticanonical_square": _frac_str(self.anticanonical_square),
            "anticanonical_square_float": _frac_float(self.anticanonical_square),
            "curve_bound_ok": self.curve_bound_ok,
            "line_condition_ok": self.line_condition_ok,
            "rho": _frac_str(self.rho),
            "rho_float": _frac_float(self.rho),
            "rho_refined": _frac_str(self.rho_refined),
            "rho_refined_float": _frac_float(self.rho_refined),
            "delta_note": self.delta_note,
            "curve_check_recorded": self.curve_check_recorded,
            "refined_needs_curve_check": self.refined_needs_curve_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def certify(w: WeightSystem, allow_refined: bool = True) -> Certificate:
    """Run every check on one weight system; always returns a verdict.

    allow_refined=False restricts the outcome to the base criterion
    (scans keep refined verdicts opt-in that way).  Even when allowed,
    KE_CERTIFIED_REFINED needs the system's curve verification recorded
    in REFINED_CURVE_CHECKS; rho_refined < 1 by itself proves nothing
    about the components of (x0 = 0) and leaves INCONCLUSIVE.
    """
    monos = weighted_monomials(w)
    fletcher = _fletcher_from(w, monos)

    square: Optional[Fraction] = None
    curve_ok: Optional[bool] = None
    line_ok: Optional[bool] = None
    rho_val: Optional[Fraction] = None
    rho_ref: Optional[Fraction] = None
    delta_note: Optional[str] = None
    curve_recorded = (w.a, w.d) in REFINED_CURVE_CHECKS

    fano = w.k > w.d
    if fano:
        _, square = anticanonical_data(w)
        curve_ok = curve_bound_check(w)
        line_ok = any(m[0] == 0 and m[1] == 0 for m in monos)
        rho_val = rho(w)
        rho_ref = rho_refined(w)
        a3 = w.a[3]
        if w.d % a3 == 0:
            pure_power = (0, 0, 0, w.d // a3) in set(monos)
            # a3 | d always puts x3^(d/a3) in the list; the downgrade
            # branch is defensive and should be unreachable.
            if pure_power:
                delta_note = (
                    f"delta=a2={w.a[2]}: a3={a3} divides d, generic member "
                    "misses the maximal-isotropy coordinate point"
                )
            else:
                delta_note = f"delta=a3={a3}: pure power x3^{w.d // a3} absent"
                rho_val = _rho_with_factor_delta(w, w.k - w.a[0] - w.a[2], a3)
                rho_ref = _rho_with_factor_delta(w, w.k - w.a[1] - w.a[2], a3)
        else:
            delta_note = f"delta=a3={a3}: a3 does not divide d"

    if not fletcher.passes:
        verdict = NOT_ORBIFOLD
    elif not fano:
        verdict = NOT_FANO
    else:
        # Twist parameter of the nef bundle must be nonnegative for the
        # criterion to apply: a = (d-a0-a2)/(k-d) for the base form,
        # (d-a1-a2)/(k-d) refined.
        base_applicable = curve_ok and line_ok and w.d >= w.a[0] + w.a[2]
        refined_applicable = (
            allow_refined
            and curve_recorded
            and curve_ok
            and w.d >= w.a[1] + w.a[2]
        )
        if base_applicable and rho_val < 1:
            verdict = KE_CERTIFIED
        elif refined_applicable and rho_val >= 1 and rho_ref < 1:
            verdict = KE_CERTIFIED_REFINED
        else:
            verdict = INCONCLUSIVE

    return Certificate(
        weights=w,
        fletcher=fletcher,
        monomial_count=len(monos),
        anticanonical_square=square,
        curve_bound_ok=curve_ok,
        line_condition_ok=line_ok,
        rho=rho_val,
        rho_refined=rho_ref,
        delta_note=delta_note,
        curve_check_recorded=curve_recorded,
        refined_needs_curve_check=(verdict == KE_CERTIFIED_REFINED),
        verdict=verdict,
    )


def _rho_with_factor_delta(w: WeightSystem, factor: int, delta: int) -> Fraction:
    a0, a1, a2, a3 = w.a
    index = w.k - w.d
    return Fraction(4 * delta * w.d * index * factor, 3 * a0 * a1 * a2 * a3)


# ---------------------------------------------------------------------------
# weight-system scan


@dataclass(frozen=True)
class ScanConfig:
    """Box and conventions for a weight-system scan.

    The degree is tied to the weights by d = k - fano_index; the index
    is configurable because the classical examples all sit at index 1
    but nothing forces that choice.
    """

    max_a3: int
    fano_index: int = 1
    min_a0: int = 1
    require_refined: bool = False
    workers: Optional[int] = None

    def __post_init__(self):
        for name in ("max_a3", "min_a0", "fano_index"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidInputError(f"{name} must be a positive integer")
        if self.max_a3 < self.min_a0:
            raise InvalidInputError("max_a3 must be >= min_a0")
        if self.workers is not None and (
            not isinstance(self.workers, int) or isinstance(self.workers, bool) or self.workers < 1
        ):
            raise InvalidInputError("workers must be a positive integer or None")


@dataclass(frozen=True)
class ScanReport:
    """Fletcher-passing systems in the box, sorted by rho ascending."""

    config: ScanConfig
    entries: tuple[Certificate, ...]
    examined: int
    prefilter_survivors: int

    @property
    def certified(self) -> tuple[Certificate, ...]:
        return tuple(c for c in self.entries if c.verdict == KE_CERTIFIED)

    @property
    def certified_refined(self) -> tuple[Certificate, ...]:
        return tuple(c for c in self.entries if c.verdict == KE_CERTIFIED_REFINED)

    @property
    def max_a0(self) -> Optional[int]:
        if not self.entries:
            return None
        return max(c.weights.a[0] for c in self.entries)

    def to_csv(self) -> str:
        lines = ["a0,a1,a2,a3,d,fletcher,rho_num,rho_den,rho_float,verdict"]
        for cert in self.entries:
            a = cert.weights.a
            q = cert.rho
            lines.append(
                f"{a[0]},{a[1]},{a[2]},{a[3]},{cert.weights.d},pass,"
                f"{q.numerator},{q.denominator},{float(q):.6f},{cert.verdict}"
            )
        return "\n".join(lines) + "\n"


def _box_arrays(config: ScanConfig) -> tuple[np.ndarray, ...]:
    """All (a0<=a1<=a2<=a3) systems in the box as flat int32 columns."""
    lo, hi = config.min_a0, config.max_a3
    vals = np.arange(lo, hi + 1, dtype=np.int32)

    # pairs a0 <= a1 via repeat/arange tricks, then extend twice
    counts = hi - vals + 1
    p0 = np.repeat(vals, counts)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
    p1 = (np.arange(p0.size, dtype=np.int64) - np.repeat(offsets, counts)).astype(np.int32) + p0

    counts = hi - p1 + 1
    t0 = np.repeat(p0, counts)
    t1 = np.repeat(p1, counts)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
    t2 = (np.arange(t0.size, dtype=np.int64) - np.repeat(offsets, counts)).astype(np.int32) + t1

    counts = hi - t2 + 1
    a0 = np.repeat(t0, counts)
    a1 = np.repeat(t1, counts)
    a2 = np.repeat(t2, counts)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1])).astype(np.int64)
    a3 = (np.arange(a0.size, dtype=np.int64) - np.repeat(offsets, counts)).astype(np.int32) + a2
    return a0, a1, a2, a3


def _pair_representable(target: np.ndarray, wa: np.ndarray, wb: np.ndarray) -> np.ndarray:
    """Vectorized: is target = m*wa + p*wb solvable with m, p >= 0?"""
    rep = np.zeros(target.shape, dtype=bool)
    m = 0
    while True:
        t = target - m * wa
        active = t >= 0
        if not active.any():
            return rep
        rep |= active & (t % wb == 0)
        m += 1


def _prefilter(config: ScanConfig) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray, int]:
    """Necessary conditions, vectorized: d > 0, triple coprimality,
    cond (i) for every j, cond (ii)/(iv) for every pair.  Sound pruning
    only; survivors still get the exact check."""
    a0, a1, a2, a3 = _box_arrays(config)
    examined = int(a0.size)
    cols = (a0, a1, a2, a3)
    # int32 is safe throughout: weights <= max_a3 and degrees <= 4*max_a3
    d = (a0 + a1 + a2 + a3 - np.int32(config.fano_index)).astype(np.int32)

    keep = d > 0
    for i, j, l in _TRIPLES:
        keep &= np.gcd(np.gcd(cols[i], cols[j]), cols[l]) == 1

    # cond (i): some x_j^m (m>=1) or x_j^m x_k (m>=1) reaches degree d
    for j in range(4):
        ok = (d % cols[j] == 0) & (d >= cols[j])
        for k in range(4):
            if k == j:
                continue
            t = d - cols[k]
            ok |= (t >= cols[j]) & (t % cols[j] == 0)
        keep &= ok

    idx = np.flatnonzero(keep)
    a0s, a1s, a2s, a3s, ds = (c[idx] for c in (*cols, d))

    # cond (ii) and (iv) exactly, on the reduced set
    keep2 = np.ones(idx.size, dtype=bool)
    weights = (a0s, a1s, a2s, a3s)
    for j, k in _PAIRS:
        pair_rep = _pair_representable(ds, weights[j], weights[k])
        others = [i for i in range(4) if i not in (j, k)]
        third = np.zeros(idx.size, dtype=np.int64)
        for l in others:
            tl = ds - weights[l]
            okl = (tl >= 0) & _pair_representable(np.maximum(tl, 0), weights[j], weights[k])
            third += okl.astype(np.int64)
        cond_ii = pair_rep | (third >= 2)
        noncoprime = np.gcd(weights[j], weights[k]) > 1
        cond_iv = ~noncoprime | pair_rep
        keep2 &= cond_ii & cond_iv

    return a0s[keep2], a1s[keep2], a2s[keep2], a3s[keep2], ds[keep2], examined


def scan(config: ScanConfig) -> ScanReport:
    """Certify every weight system in the box with d = k - fano_index.

    Returns the Fletcher-passing systems sorted by rho (ties by weights).
    Refined verdicts are opt-in: with require_refined=False every entry
    is judged by the base criterion alone; with it True, systems whose
    curve verification is recorded may appear as KE_CERTIFIED_REFINED.
    """
    a0s, a1s, a2s, a3s, ds, examined = _prefilter(config)
    systems = [
        WeightSystem((int(w0), int(w1), int(w2), int(w3)), int(dd))
        for w0, w1, w2, w3, dd in zip(a0s, a1s, a2s, a3s, ds)
    ]

    judge = partial(certify, allow_refined=config.require_refined)
    nworkers = _scan_workers(config.workers)
    if nworkers > 1 and len(systems) > 64:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            certs = list(pool.map(judge, systems, chunksize=64))
    else:
        certs = [judge(w) for w in systems]

    entries = [c for c in certs if c.fletcher.passes]
    entries.sort(key=lambda c: (c.rho is None, c.rho or Fraction(0), c.weights.a))
    return ScanReport(
        config=config,
        entries=tuple(entries),
        examined=examined,
        prefilter_survivors=len(systems),
    )


def _scan_workers(requested: Optional[int]) -> int:
    from .volume import _worker_count

    return _worker_count(requested)

"""Discriminatory-power metrics computed from binary default/non-default data.

Given observed scores for non-defaulted and defaulted objects, this module
builds the empirical ROC and CAP polylines and computes the first-order
accuracy ratio (AR, the Gini index) together with the second-order left-hand
and right-hand accuracy ratios (LAR, RAR).  LAR rewards steepness of the ROC
at its start (skill at flagging bad objects); RAR rewards flatness at its end
(skill at confirming good ones).

Scores follow the "bad to good" convention: higher score means less risky.
Ties between a default and a non-default receive half credit, which keeps the
trapezoidal CAP-based Gini and the Mann-Whitney Gini exactly equal.

The conservative standard-deviation bound for AR follows Bamber (1975),
J. Math. Psychology 12(4).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ScoreSample",
    "RocPolyline",
    "MetricReport",
    "concordance_credit",
    "empirical_roc",
    "ar_mann_whitney",
    "lar_discrete",
    "rar_discrete",
    "cap_curve",
    "ar_from_cap",
    "pd_profile",
    "sigma_ar",
    "thin",
    "binary_report",
]


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

def _as_sorted_scores(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one score")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if np.any(np.diff(arr) < 0):
        raise ValueError(
            f"{name} must be sorted ascending; use ScoreSample.from_scores to sort"
        )
    return arr


@dataclass(frozen=True, eq=False)
class ScoreSample:
    """Sorted scores of non-defaulted objects and of defaulted objects.

    Both arrays are ascending (worst score first) and non-empty.
    """

    nondefault_scores: np.ndarray
    default_scores: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self,
            "nondefault_scores",
            _as_sorted_scores(self.nondefault_scores, "nondefault_scores"),
        )
        object.__setattr__(
            self,
            "default_scores",
            _as_sorted_scores(self.default_scores, "default_scores"),
        )

    @classmethod
    def from_scores(cls, nondefault_scores, default_scores) -> "ScoreSample":
        """Build a sample from unsorted score collections."""
        return cls(
            np.sort(np.asarray(nondefault_scores, dtype=np.float64)),
            np.sort(np.asarray(default_scores, dtype=np.float64)),
        )

    @classmethod
    def from_binary(cls, scores, default_flags) -> "ScoreSample":
        """Split a labeled population into a sample (flag truthy = default)."""
        scores = np.asarray(scores, dtype=np.float64)
        flags = np.asarray(default_flags, dtype=bool)
        if scores.shape != flags.shape:
            raise ValueError("scores and default_flags must have equal length")
        return cls.from_scores(scores[~flags], scores[flags])

    @property
    def n_nondefault(self) -> int:
        return int(self.nondefault_scores.size)

    @property
    def n_default(self) -> int:
        return int(self.default_scores.size)

    @property
    def default_rate(self) -> float:
        """Observed default share D / (D + N)."""
        d, n = self.n_default, self.n_nondefault
        return d / (d + n)

    def flipped(self) -> "ScoreSample":
        """Negate all scores (reverses the risk ordering)."""
        return ScoreSample(-self.nondefault_scores[::-1], -self.default_scores[::-1])


@dataclass(frozen=True, eq=False)
class RocPolyline:
    """A piecewise-linear ROC or CAP curve from (0, 0) to (1, 1)."""

    x: np.ndarray
    y: np.ndarray
    kind: str  # 'ROC' or 'CAP'

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.float64)
        y = np.asarray(self.y, dtype=np.float64)
        if self.kind not in ("ROC", "CAP"):
            raise ValueError(f"kind must be 'ROC' or 'CAP', got {self.kind!r}")
        if x.shape != y.shape or x.ndim != 1 or x.size < 2:
            raise ValueError("x and y must be equal-length 1-D arrays of >= 2 points")
        if x[0] != 0.0 or y[0] != 0.0 or x[-1] != 1.0 or y[-1] != 1.0:
            raise ValueError("polyline must start at (0, 0) and end at (1, 1)")
        if np.any(np.diff(x) < 0) or np.any(np.diff(y) < 0):
            raise ValueError("polyline coordinates must be nondecreasing")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.x, self.y)]

    def area(self) -> float:
        """Area under the polyline by the trapezoid rule (exact here)."""
        return float(np.trapezoid(self.y, self.x))


@dataclass(frozen=True)
class MetricReport:
    """AR, LAR, RAR and the AR standard-deviation bound from one source."""

    ar: float
    lar: float
    rar: float
    sigma_ar: float
    n_nondefault: int
    n_default: int
    source: str  # 'binary' or 'imputed'

    def __post_init__(self):
        if self.source not in ("binary", "imputed"):
            raise ValueError(f"source must be 'binary' or 'imputed', got {self.source!r}")
        if self.source == "binary" and not self.sigma_ar > 0:
            raise ValueError("a binary-source report requires sigma_ar > 0")
        if self.sigma_ar < 0:
            raise ValueError("sigma_ar must be nonnegative")
        for name in ("ar", "lar", "rar"):
            v = getattr(self, name)
            if not -1.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [-1, 1]")


# ---------------------------------------------------------------------------
# Pairwise credit and rank sums
# ---------------------------------------------------------------------------

def concordance_credit(u: float, w: float) -> float:
    """Ordering credit of u against w: 1 if u > w, 1/2 on a tie, 0 if u < w."""
    if not (np.isfinite(u) and np.isfinite(w)):
        raise ValueError("both arguments must be finite")
    if u > w:
        return 1.0
    if u == w:
        return 0.5
    return 0.0


def _credits_against(values: np.ndarray, sorted_ref: np.ndarray) -> np.ndarray:
    """For each value, total credit against sorted_ref: (#below) + (#ties)/2."""
    lo = np.searchsorted(sorted_ref, values, side="left")
    hi = np.searchsorted(sorted_ref, values, side="right")
    return lo + 0.5 * (hi - lo)


# ---------------------------------------------------------------------------
# First-order metrics and curves
# ---------------------------------------------------------------------------

def empirical_roc(sample: ScoreSample) -> RocPolyline:
    """Empirical ROC polyline with one vertex per non-default.

    Vertex n sits at x = n/N with y = the credit-weighted share of defaults
    scored below the n-th non-default.  When the top non-default does not
    dominate every default the curve cannot reach y = 1 on its own; a closing
    (1, 1) vertex is appended so downstream integrators always see a closed
    curve.
    """
    n = sample.n_nondefault
    d = sample.n_default
    r = _credits_against(sample.nondefault_scores, sample.default_scores) / d
    if r[-1] > 1.0 + 1e-12:
        raise AssertionError("default share above threshold exceeded 1; invalid sample state")
    x = np.arange(n + 1) / n
    y = np.concatenate([[0.0], r])
    if y[-1] < 1.0:
        x = np.append(x, 1.0)
        y = np.append(y, 1.0)
    else:
        y[-1] = 1.0
    return RocPolyline(x, y, "ROC")


def ar_mann_whitney(sample: ScoreSample) -> tuple[float, float]:
    """AUC via the Mann-Whitney statistic (half credit on ties) and AR = 2*AUC - 1."""
    credits = _credits_against(sample.nondefault_scores, sample.default_scores)
    auc = float(credits.sum() / (sample.n_nondefault * sample.n_default))
    return auc, 2.0 * auc - 1.0


def cap_curve(sample: ScoreSample) -> RocPolyline:
    """CAP polyline over the merged population, one step per object.

    Objects tied at one score form a straight diagonal block whose default
    mass is spread evenly over the block's unit steps; this is the half-credit
    tie convention and makes ar_from_cap agree with ar_mann_whitney exactly.
    """
    nd, dd = sample.nondefault_scores, sample.default_scores
    n, d = nd.size, dd.size
    m = n + d
    values = np.unique(np.concatenate([nd, dd]))
    n_v = np.searchsorted(nd, values, side="right") - np.searchsorted(nd, values, side="left")
    d_v = np.searchsorted(dd, values, side="right") - np.searchsorted(dd, values, side="left")
    m_v = n_v + d_v
    step_y = np.repeat(d_v / (d * m_v), m_v)
    y = np.concatenate([[0.0], np.cumsum(step_y)])
    if abs(y[-1] - 1.0) > 1e-9:
        raise AssertionError("CAP construction failed to reach (1, 1)")
    y = np.minimum(y, 1.0)  # cumsum drift can overshoot by ~1e-16
    y[-1] = 1.0
    x = np.arange(m + 1) / m
    return RocPolyline(x, y, "CAP")


def ar_from_cap(cap: RocPolyline, d_share: float) -> float:
    """AR from a CAP polyline: (2 * area under CAP - 1) / (1 - default share)."""
    if cap.kind != "CAP":
        raise ValueError("ar_from_cap requires a polyline of kind 'CAP'")
    if not 0.0 < d_share < 1.0:
        raise ValueError(f"d_share must lie in (0, 1), got {d_share}")
    return (2.0 * cap.area() - 1.0) / (1.0 - d_share)


def pd_profile(sample: ScoreSample, n_buckets: int) -> list[tuple[float, float]]:
    """Observed default rate per score bucket over the merged population.

    The population is sorted worst-first (defaults ahead of non-defaults on
    ties) and split into n_buckets near-equal contiguous buckets.  Returns
    (bucket midpoint in population share, default rate) pairs; the size-
    weighted mean of the rates is the portfolio default rate.
    """
    m = sample.n_nondefault + sample.n_default
    if not 1 <= n_buckets <= m:
        raise ValueError(f"n_buckets must lie in [1, {m}], got {n_buckets}")
    scores = np.concatenate([sample.nondefault_scores, sample.default_scores])
    flags = np.concatenate(
        [np.zeros(sample.n_nondefault), np.ones(sample.n_default)]
    )
    order = np.lexsort((-flags, scores))
    flags = flags[order]
    bounds = np.linspace(0, m, n_buckets + 1).round().astype(int)
    out = []
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        out.append((float((lo + hi) / (2.0 * m)), float(flags[lo:hi].mean())))
    return out


# ---------------------------------------------------------------------------
# Second-order metrics
# ---------------------------------------------------------------------------

def lar_discrete(sample: ScoreSample) -> float:
    """Left-hand accuracy ratio from binary data.

    Per non-default k, the running total of pairwise credits up to k is
    divided by k times the k-th credit row; rows with zero credit contribute
    zero.  The mean over k is LAUC and LAR = 2 * LAUC - 1.  Implemented with
    cumulative sums, O((N + D) log(N + D)) instead of the nominal O(D * N^2).
    """
    credits = _credits_against(sample.nondefault_scores, sample.default_scores)
    running = np.cumsum(credits)
    k = np.arange(1, credits.size + 1, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(credits > 0, running / (k * credits), 0.0)
    lauc = float(terms.mean())
    return 2.0 * lauc - 1.0


def rar_discrete(sample: ScoreSample) -> float:
    """Right-hand accuracy ratio from binary data.

    Mirror of lar_discrete: per default d, the credit of non-defaults scored
    above it, accumulated from the d-th default to the last, divided by the
    remaining-default count times the d-th credit row; zero rows contribute
    zero.  RAR = 2 * RAUC - 1.
    """
    nd, dd = sample.nondefault_scores, sample.default_scores
    n = nd.size
    lo = np.searchsorted(nd, dd, side="left")
    hi = np.searchsorted(nd, dd, side="right")
    above = n - hi + 0.5 * (hi - lo)
    suffix = np.cumsum(above[::-1])[::-1]
    remaining = np.arange(above.size, 0, -1, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(above > 0, suffix / (remaining * above), 0.0)
    rauc = float(terms.mean())
    return 2.0 * rauc - 1.0


# ---------------------------------------------------------------------------
# Sampling error and thinning
# ---------------------------------------------------------------------------

def sigma_ar(ar: float, n_nondefault: int, n_default: int, simplified: bool = False) -> float:
    """Conservative standard-deviation bound for a sample AR estimate.

    Exact form (Bamber's bound for a concave ROC):

        sqrt(((2N + 1)(1 - AR^2) - (N - D)(1 - AR)^2) / (3 N D))

    With ``simplified=True`` the N >> D >> 1 approximation
    sqrt((1 + 2 AR - 3 AR^2) / (3 D)) is used instead.  A negative radicand
    (possible only for strongly inverted models) raises ValueError.
    """
    if n_nondefault < 1 or n_default < 1:
        raise ValueError("counts must be >= 1")
    if not -1.0 <= ar <= 1.0:
        raise ValueError(f"ar must lie in [-1, 1], got {ar}")
    n, d = n_nondefault, n_default
    if simplified:
        radicand = (1.0 + 2.0 * ar - 3.0 * ar * ar) / (3.0 * d)
    else:
        radicand = ((2.0 * n + 1.0) * (1.0 - ar * ar) - (n - d) * (1.0 - ar) ** 2) / (
            3.0 * n * d
        )
    if radicand < 0.0:
        if radicand > -1e-15:  # exact zero up to rounding, e.g. ar = 1
            radicand = 0.0
        else:
            raise ValueError(
                f"negative radicand ({radicand:.3e}); "
                "the bound assumes a concave ROC and these inputs violate it"
            )
    return float(np.sqrt(radicand))


def thin(sample: ScoreSample, max_nondefault: int, max_default: int, seed: int) -> ScoreSample:
    """Uniform random subsample without replacement, re-sorted.

    Uses the PCG64 generator seeded with ``seed`` (non-defaults drawn first,
    then defaults), so results reproduce exactly for a fixed seed.  A class
    already within its limit is returned untouched.
    """
    if max_nondefault < 2 or max_default < 2:
        raise ValueError("thinning limits must be >= 2")
    rng = np.random.Generator(np.random.PCG64(seed))
    nd, dd = sample.nondefault_scores, sample.default_scores
    if nd.size > max_nondefault:
        nd = np.sort(rng.choice(nd, size=max_nondefault, replace=False))
    if dd.size > max_default:
        dd = np.sort(rng.choice(dd, size=max_default, replace=False))
    if nd is sample.nondefault_scores and dd is sample.default_scores:
        return sample
    return ScoreSample(nd, dd)


def binary_report(sample: ScoreSample) -> MetricReport:
    """Full metric report (AR, LAR, RAR, sigma_AR, counts) from binary data."""
    _, ar = ar_mann_whitney(sample)
    return MetricReport(
        ar=ar,
        lar=lar_discrete(sample),
        rar=rar_discrete(sample),
        sigma_ar=sigma_ar(ar, sample.n_nondefault, sample.n_default),
        n_nondefault=sample.n_nondefault,
        n_default=sample.n_default,
        source="binary",
    )

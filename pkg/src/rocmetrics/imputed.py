"""Metrics imputed from a calibrated rating-grade table.

Once a model is calibrated, every rating grade carries a population count and
a default probability; no observed defaults are needed.  Cumulating expected
non-default mass against expected default mass, grade by grade from worst to
best, yields an imputed ROC polygon, and the trapezoidal analogues of AR, LAR
and RAR evaluated on it.  Comparing these against the binary-data estimates
is the basis of calibration validation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import CurveModel, _bisect
from .empirical import MetricReport, ScoreSample

__all__ = [
    "Grade",
    "GradeTable",
    "ImputedRoc",
    "imputed_roc",
    "ar_imputed",
    "lar_imputed",
    "rar_imputed",
    "imputed_report",
    "grade_table_from_curve",
    "sample_from_table",
]


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Grade:
    """One rating segment: a label, an object count and a calibrated PD."""

    label: str
    count: int
    pd: float

    def __post_init__(self):
        if self.count < 0 or self.count != int(self.count):
            raise ValueError(f"grade {self.label!r}: count must be a nonnegative integer")
        if not 0.0 < self.pd < 1.0:
            raise ValueError(
                f"grade {self.label!r}: pd must lie strictly in (0, 1), got {self.pd}; "
                "clip boundary calibrations explicitly before building the table"
            )


@dataclass(frozen=True, eq=False)
class GradeTable:
    """Rating grades ordered from riskiest to safest (descending PD).

    Equal adjacent PDs and zero-count grades are allowed; a PD that increases
    down the table is rejected rather than silently sorted.
    """

    grades: tuple[Grade, ...]

    def __post_init__(self):
        grades = tuple(self.grades)
        if not grades:
            raise ValueError("grade table must contain at least one grade")
        for prev, cur in zip(grades, grades[1:]):
            if cur.pd > prev.pd:
                raise ValueError(
                    f"grades must be ordered by non-increasing pd; "
                    f"{cur.label!r} (pd={cur.pd}) follows {prev.label!r} (pd={prev.pd})"
                )
        if not any(g.count > 0 for g in grades):
            raise ValueError("grade table must contain at least one populated grade")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_arrays(cls, counts, pds, labels=None) -> "GradeTable":
        counts = list(counts)
        pds = list(pds)
        if len(counts) != len(pds):
            raise ValueError("counts and pds must have equal length")
        if labels is None:
            labels = [f"G{i + 1:03d}" for i in range(len(counts))]
        return cls(tuple(Grade(str(l), int(n), float(p)) for l, n, p in zip(labels, counts, pds)))

    @property
    def counts(self) -> np.ndarray:
        return np.array([g.count for g in self.grades], dtype=np.float64)

    @property
    def pds(self) -> np.ndarray:
        return np.array([g.pd for g in self.grades], dtype=np.float64)

    @property
    def default_mass(self) -> float:
        """Expected number of defaults, sum of count * pd."""
        return float((self.counts * self.pds).sum())

    @property
    def nondefault_mass(self) -> float:
        """Expected number of non-defaults, sum of count * (1 - pd)."""
        return float((self.counts * (1.0 - self.pds)).sum())


@dataclass(frozen=True, eq=False)
class ImputedRoc:
    """Imputed ROC polygon: cumulative non-default share vs default share."""

    g: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.g, dtype=np.float64)
        r = np.asarray(self.r, dtype=np.float64)
        if g.shape != r.shape or g.ndim != 1 or g.size < 2:
            raise ValueError("g and r must be equal-length 1-D arrays of >= 2 points")
        if g[0] != 0.0 or r[0] != 0.0 or g[-1] != 1.0 or r[-1] != 1.0:
            raise ValueError("imputed ROC must run from (0, 0) to (1, 1)")
        if np.any(np.diff(g) < 0) or np.any(np.diff(r) < 0):
            raise ValueError("imputed ROC coordinates must be nondecreasing")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "r", r)

    @property
    def points(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.g, self.r)]


# ---------------------------------------------------------------------------
# Imputed curve and metrics
# ---------------------------------------------------------------------------

def _cumulative_shares(table: GradeTable) -> tuple[np.ndarray, np.ndarray]:
    n, p = table.counts, table.pds
    w_nd = n * (1.0 - p)
    w_d = n * p
    tot_nd, tot_d = w_nd.sum(), w_d.sum()
    if tot_nd <= 0.0 or tot_d <= 0.0:
        raise ValueError("table carries no default or no non-default mass")
    g = np.concatenate([[0.0], np.cumsum(w_nd) / tot_nd])
    r = np.concatenate([[0.0], np.cumsum(w_d) / tot_d])
    g[-1] = 1.0
    r[-1] = 1.0
    return g, r


def imputed_roc(table: GradeTable) -> ImputedRoc:
    """Imputed ROC polygon of a grade table.

    Point k sits at (cumulative non-default mass share, cumulative default
    mass share) over the k riskiest grades; zero-count grades repeat points.
    """
    g, r = _cumulative_shares(table)
    return ImputedRoc(g, r)


def ar_imputed(table: GradeTable) -> float:
    """Imputed Gini: trapezoid area under the imputed ROC, rescaled to [-1, 1]."""
    g, r = _cumulative_shares(table)
    auc = float(np.trapezoid(r, g))
    return 2.0 * auc - 1.0


def lar_imputed(table: GradeTable) -> float:
    """Imputed left-hand accuracy ratio.

    Trapezoidal analogue of the LAR integral on the imputed ROC: for each
    grade k the running area is divided by g_k * r_k and weighted by the
    grade's non-default share; grades with g_k * r_k = 0 contribute zero.
    """
    g, r = _cumulative_shares(table)
    dg = np.diff(g)
    trap = 0.5 * (r[1:] + r[:-1]) * dg
    running = np.cumsum(trap)
    den = g[1:] * r[1:]
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(den > 0, dg / np.where(den > 0, den, 1.0) * running, 0.0)
    return 2.0 * float(terms.sum()) - 1.0


def rar_imputed(table: GradeTable) -> float:
    """Imputed right-hand accuracy ratio (mirror analogue of lar_imputed)."""
    g, r = _cumulative_shares(table)
    dg, dr = np.diff(g), np.diff(r)
    tail = (1.0 - 0.5 * (g[1:] + g[:-1])) * dr
    remaining = np.cumsum(tail[::-1])[::-1]
    den = (1.0 - g[:-1]) * (1.0 - r[:-1])
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(den > 0, dr / np.where(den > 0, den, 1.0) * remaining, 0.0)
    return 2.0 * float(terms.sum()) - 1.0


def imputed_report(table: GradeTable) -> MetricReport:
    """Metric report from a grade table; counts are the rounded mass totals.

    No sampling error applies (nothing is observed), so sigma_ar is 0.
    """
    return MetricReport(
        ar=ar_imputed(table),
        lar=lar_imputed(table),
        rar=rar_imputed(table),
        sigma_ar=0.0,
        n_nondefault=int(round(table.nondefault_mass)),
        n_default=int(round(table.default_mass)),
        source="imputed",
    )


# ---------------------------------------------------------------------------
# Discretizing a continuous curve into grades
# ---------------------------------------------------------------------------

def grade_table_from_curve(
    curve: CurveModel,
    n_grades: int,
    population: int,
    default_rate: float,
) -> GradeTable:
    """Equal-population grade table whose imputed ROC tracks a curve.

    The population axis mixes non-default share x (weight 1 - default_rate)
    and default share R(x) (weight default_rate); grade boundaries split it
    into n_grades equal slices, each grade receiving the default mass the
    curve assigns to its slice.  As n_grades grows the imputed metrics of the
    table converge to the curve's analytic metrics.
    """
    if n_grades < 1:
        raise ValueError("n_grades must be >= 1")
    if population < n_grades:
        raise ValueError("population must be at least n_grades")
    if not 0.0 < default_rate < 1.0:
        raise ValueError(f"default_rate must lie in (0, 1), got {default_rate}")

    def pop_share(x: float) -> float:
        return (1.0 - default_rate) * x + default_rate * curve.value(x)

    cuts = np.empty(n_grades + 1)
    cuts[0], cuts[-1] = 0.0, 1.0
    for j in range(1, n_grades):
        target = j / n_grades
        cuts[j] = _bisect(lambda x: pop_share(x) - target, 0.0, 1.0)

    counts = np.diff(np.round(np.linspace(0, population, n_grades + 1))).astype(int)
    r_cuts = np.fromiter((curve.value(c) for c in cuts), dtype=np.float64, count=n_grades + 1)
    default_mass = default_rate * population * np.diff(r_cuts)
    pds = default_mass / counts
    pds = np.clip(pds, 1e-12, 1.0 - 1e-12)
    return GradeTable.from_arrays(counts, pds)


def sample_from_table(table: GradeTable) -> ScoreSample:
    """Realize a deterministic binary sample from a grade table.

    Each grade receives a distinct score (riskier grades score lower) and
    exactly round(count * pd) of its objects default.
    """
    nondefault, default = [], []
    for i, grade in enumerate(table.grades):
        score = float(i)
        d = int(round(grade.count * grade.pd))
        d = min(d, grade.count)
        default.extend([score] * d)
        nondefault.extend([score] * (grade.count - d))
    if not default or not nondefault:
        raise ValueError("table rounds to zero defaults or zero non-defaults")
    return ScoreSample.from_scores(nondefault, default)

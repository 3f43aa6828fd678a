"""Continuous ROC-curve engine.

Defines the curve families (two-segment triangular, one-parameter van der
Burgt exponential, piecewise linear) and everything that can be computed from
them analytically or by quadrature:

* LAR and RAR as integrals of the curve (the oracle the discrete estimators
  are checked against),
* the mirror transform that swaps left- and right-hand behaviour,
* closed-form LAR/RAR for triangular curves and the feasibility bounds they
  imply at a given AR,
* inversion of metric values back to triangular geometry: break abscissas,
  the left/right default-probability multipliers, and the trapezoidal
  decomposition with its indifference segment.

All root finding is plain bisection (brackets are monotone throughout); the
outer quadratures use adaptive Gauss-Kronrod.  The van der Burgt family is
the one from van der Burgt (2008), J. Risk Model Validation 1(4).
"""

from __future__ import annotations

import math
import warnings
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .empirical import RocPolyline, ScoreSample

__all__ = [
    "CurveModel",
    "TriangularCurve",
    "BurgtCurve",
    "PiecewiseLinearCurve",
    "MirroredCurve",
    "TrapezoidDecomposition",
    "BurgtSweepPoint",
    "InfeasibleMetricError",
    "DegenerateCurveError",
    "DegenerateTrapezoidError",
    "mirror",
    "lauc_integral",
    "lar_integral",
    "rauc_integral",
    "rar_integral",
    "triangle_lar",
    "triangle_rar",
    "lar_rar_bounds",
    "solve_triangle_a",
    "unified_multiplier",
    "multipliers",
    "trapezoid_decomposition",
    "burgt_ar",
    "burgt_k",
    "burgt_preference_sweep",
    "sample_from_curve",
]


class InfeasibleMetricError(ValueError):
    """A metric value lies outside what any concave ROC curve can attain."""


class DegenerateCurveError(ValueError):
    """The curve is degenerate for the requested integral."""


class DegenerateTrapezoidError(ValueError):
    """The indifference segment collapses: the curve is triangular."""


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------

_MAX_BISECT_ITER = 200


def _bisect(f, lo: float, hi: float, xtol: float = 1e-14) -> float:
    """Bisection on a bracketing interval; converges unconditionally."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError(f"root not bracketed on [{lo}, {hi}]")
    for _ in range(_MAX_BISECT_ITER):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo <= xtol * max(1.0, abs(lo)):
            break
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Curve families
# ---------------------------------------------------------------------------

class CurveModel(ABC):
    """A continuous ROC model y = R(x) on [0, 1] with R(0) = 0, R(1) = 1.

    Subclasses provide pointwise evaluation, the inverse, the running
    integral, the tail excess integral_c^1 (R(x) - R(c)) dx (kept separate
    because the naive difference cancels catastrophically near x = 1), and
    the derivative.
    """

    @abstractmethod
    def value(self, x: float) -> float:
        """R(x)."""

    @abstractmethod
    def inverse(self, y: float) -> float:
        """Smallest x with R(x) = y."""

    @abstractmethod
    def integral(self, c: float) -> float:
        """integral_0^c R(x) dx."""

    @abstractmethod
    def tail_excess(self, c: float) -> float:
        """integral_c^1 (R(x) - R(c)) dx, computed without cancellation."""

    @abstractmethod
    def derivative(self, x: float) -> float:
        """R'(x); the right-hand slope at kinks."""

    @abstractmethod
    def mirrored(self) -> "CurveModel":
        """The axis-swapped reflection; see :func:`mirror`."""

    def breakpoints(self) -> tuple[float, ...]:
        """Interior kink abscissas, used to split the quadratures."""
        return ()

    def one_minus_value(self, x: float) -> float:
        """1 - R(x); overridden where the plain difference loses precision."""
        return 1.0 - self.value(x)

    @property
    def auc(self) -> float:
        return self.integral(1.0)

    @property
    def ar(self) -> float:
        return 2.0 * self.integral(1.0) - 1.0


class TriangularCurve(CurveModel):
    """Two-segment ROC through (a, a + d): steep up to a, shallow after.

    Its Gini index equals d exactly.  Requires 0 <= a <= 1 - d, 0 <= d <= 1.
    """

    def __init__(self, a: float, d: float):
        if not 0.0 <= d <= 1.0:
            raise ValueError(f"d must lie in [0, 1], got {d}")
        if not 0.0 <= a <= 1.0 - d:
            raise ValueError(f"a must lie in [0, 1 - d] = [0, {1.0 - d}], got {a}")
        self.a = float(a)
        self.d = float(d)

    def __repr__(self):
        return f"TriangularCurve(a={self.a}, d={self.d})"

    def value(self, x: float) -> float:
        a, d = self.a, self.d
        if x <= 0.0:
            return 0.0
        if x <= a:
            return x * (a + d) / a
        if a == 1.0 - d:  # second segment is flat at 1
            return 1.0
        return (x * (1.0 - a - d) + d) / (1.0 - a)

    def one_minus_value(self, x: float) -> float:
        a, d = self.a, self.d
        if x <= a:
            return 1.0 - self.value(x)
        if a == 1.0 - d:
            return 0.0
        return (1.0 - x) * (1.0 - a - d) / (1.0 - a)

    def inverse(self, y: float) -> float:
        a, d = self.a, self.d
        if not 0.0 <= y <= 1.0:
            raise ValueError(f"y must lie in [0, 1], got {y}")
        if y <= a + d:
            return y * a / (a + d) if a + d > 0 else 0.0
        return (y * (1.0 - a) - d) / (1.0 - a - d)

    def integral(self, c: float) -> float:
        a, d = self.a, self.d
        if c <= a:
            return 0.5 * (a + d) / a * c * c if a > 0 else 0.0
        head = 0.5 * a * (a + d)
        if a == 1.0 - d:
            return head + (c - a)
        return head + (
            0.5 * (1.0 - a - d) * (c * c - a * a) + d * (c - a)
        ) / (1.0 - a)

    def tail_excess(self, c: float) -> float:
        a, d = self.a, self.d
        slope2 = (1.0 - a - d) / (1.0 - a) if a < 1.0 else 0.0
        if c >= a:
            return 0.5 * slope2 * (1.0 - c) ** 2
        slope1 = (a + d) / a
        # rise over [c, a] at slope1, then the full second segment shifted up
        return (
            0.5 * slope1 * (a - c) ** 2
            + slope1 * (a - c) * (1.0 - a)
            + 0.5 * slope2 * (1.0 - a) ** 2
        )

    def derivative(self, x: float) -> float:
        a, d = self.a, self.d
        if x < a:
            if a == 0.0:
                raise DegenerateCurveError("vertical first segment has no finite slope")
            return (a + d) / a
        return (1.0 - a - d) / (1.0 - a) if a < 1.0 else 0.0

    def mirrored(self) -> "TriangularCurve":
        return TriangularCurve(1.0 - self.a - self.d, self.d)

    def breakpoints(self) -> tuple[float, ...]:
        return (self.a,) if 0.0 < self.a < 1.0 else ()

    @property
    def ar(self) -> float:
        return self.d


class BurgtCurve(CurveModel):
    """Van der Burgt's one-parameter family R(x) = (1 - e^(-kx)) / (1 - e^(-k))."""

    def __init__(self, k: float):
        if not k > 0.0 or not math.isfinite(k):
            raise ValueError(f"k must be a positive finite real, got {k}")
        self.k = float(k)
        self._scale = -math.expm1(-self.k)  # 1 - e^(-k)

    def __repr__(self):
        return f"BurgtCurve(k={self.k})"

    def value(self, x: float) -> float:
        return math.expm1(-self.k * x) / math.expm1(-self.k)

    def one_minus_value(self, x: float) -> float:
        return math.exp(-self.k * x) * math.expm1(-self.k * (1.0 - x)) / math.expm1(-self.k)

    def inverse(self, y: float) -> float:
        if not 0.0 <= y <= 1.0:
            raise ValueError(f"y must lie in [0, 1], got {y}")
        return -math.log1p(y * math.expm1(-self.k)) / self.k

    def integral(self, c: float) -> float:
        return (c + math.expm1(-self.k * c) / self.k) / self._scale

    def tail_excess(self, c: float) -> float:
        u = 1.0 - c
        return math.exp(-self.k * c) * (u + math.expm1(-self.k * u) / self.k) / self._scale

    def derivative(self, x: float) -> float:
        return self.k * math.exp(-self.k * x) / self._scale

    def mirrored(self) -> "MirroredCurve":
        return MirroredCurve(self)

    @property
    def ar(self) -> float:
        return burgt_ar(self.k)


class PiecewiseLinearCurve(CurveModel):
    """A concave-or-not piecewise-linear ROC given by its vertex list.

    Vertices must run from (0, 0) to (1, 1) with strictly increasing x after
    dropping duplicated points; vertical segments are rejected (they have no
    function representation).  Flat segments are allowed for the integrals
    but make the curve non-mirrorable.
    """

    def __init__(self, points):
        pts = np.asarray(points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise ValueError("points must be an (n, 2) array with n >= 2")
        x, y = pts[:, 0], pts[:, 1]
        if x[0] != 0.0 or y[0] != 0.0 or x[-1] != 1.0 or y[-1] != 1.0:
            raise ValueError("curve must start at (0, 0) and end at (1, 1)")
        if np.any(np.diff(x) < 0) or np.any(np.diff(y) < 0):
            raise ValueError("vertex coordinates must be nondecreasing")
        keep = np.concatenate([[True], (np.diff(x) > 0) | (np.diff(y) > 0)])
        x, y = x[keep], y[keep]
        if np.any(np.diff(x) == 0):
            raise ValueError("vertical segments are not representable as y = R(x)")
        self.x = x
        self.y = y
        self._slopes = np.diff(y) / np.diff(x)
        self._cum = np.concatenate(
            [[0.0], np.cumsum(0.5 * (y[1:] + y[:-1]) * np.diff(x))]
        )

    @classmethod
    def from_polyline(cls, polyline: RocPolyline) -> "PiecewiseLinearCurve":
        if polyline.kind != "ROC":
            raise ValueError("from_polyline expects a polyline of kind 'ROC'")
        return cls(np.column_stack([polyline.x, polyline.y]))

    def __repr__(self):
        return f"PiecewiseLinearCurve(<{self.x.size} vertices>)"

    def _segment(self, x: float) -> int:
        i = int(np.searchsorted(self.x, x, side="right")) - 1
        return min(max(i, 0), self.x.size - 2)

    def value(self, x: float) -> float:
        return float(np.interp(x, self.x, self.y))

    def inverse(self, y: float) -> float:
        if not 0.0 <= y <= 1.0:
            raise ValueError(f"y must lie in [0, 1], got {y}")
        j = int(np.searchsorted(self.y, y, side="left"))
        if j == 0:
            return float(self.x[0])
        # first vertex at or above y; the segment into it rises strictly
        frac = (y - self.y[j - 1]) / (self.y[j] - self.y[j - 1])
        return float(self.x[j - 1] + frac * (self.x[j] - self.x[j - 1]))

    def integral(self, c: float) -> float:
        i = self._segment(c)
        yc = self.y[i] + self._slopes[i] * (c - self.x[i])
        return float(self._cum[i] + 0.5 * (self.y[i] + yc) * (c - self.x[i]))

    def tail_excess(self, c: float) -> float:
        i = self._segment(c)
        yc = self.y[i] + self._slopes[i] * (c - self.x[i])
        xs = np.concatenate([[c], self.x[i + 1 :]])
        ys = np.concatenate([[yc], self.y[i + 1 :]])
        return float(np.trapezoid(ys - yc, xs))

    def derivative(self, x: float) -> float:
        return float(self._slopes[self._segment(x)])

    def mirrored(self) -> "PiecewiseLinearCurve":
        if np.any(self._slopes == 0):
            raise ValueError(
                "curve has flat segments; its mirror is not a function of x"
            )
        return PiecewiseLinearCurve(
            np.column_stack([1.0 - self.y[::-1], 1.0 - self.x[::-1]])
        )

    def breakpoints(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.x[1:-1])

    def is_concave(self, tol: float = 1e-12) -> bool:
        """True when chord slopes are nonincreasing (curve bulges up-left)."""
        return bool(np.all(np.diff(self._slopes) <= tol))


class MirroredCurve(CurveModel):
    """Reflection swapping axes and orientation: M(x) = 1 - R_inv(1 - x).

    LAR of the mirror equals RAR of the base and vice versa; the area (and
    hence AR) is unchanged.
    """

    def __init__(self, base: CurveModel):
        self.base = base

    def __repr__(self):
        return f"MirroredCurve({self.base!r})"

    def value(self, x: float) -> float:
        return 1.0 - self.base.inverse(1.0 - x)

    def inverse(self, y: float) -> float:
        return self.base.one_minus_value(1.0 - y)

    def integral(self, c: float) -> float:
        z = self.base.inverse(1.0 - c)
        return self.base.integral(1.0) - self.base.integral(z) - (1.0 - z) * (1.0 - c)

    def tail_excess(self, c: float) -> float:
        return self.base.integral(self.base.inverse(1.0 - c))

    def derivative(self, x: float) -> float:
        return 1.0 / self.base.derivative(self.base.inverse(1.0 - x))

    def mirrored(self) -> "MirroredCurve":
        return MirroredCurve(self)

    def breakpoints(self) -> tuple[float, ...]:
        return tuple(
            sorted(1.0 - self.base.value(b) for b in self.base.breakpoints())
        )


def mirror(curve: CurveModel) -> CurveModel:
    """Swap the curve's left- and right-hand behaviour.

    The transform maps the graph of R through (x, y) -> (1 - y, 1 - x); it is
    an involution up to floating point, triangular curves map to triangular
    curves with a -> 1 - a - d, and LAR/RAR swap roles.
    """
    return curve.mirrored()


# ---------------------------------------------------------------------------
# LAR / RAR by quadrature
# ---------------------------------------------------------------------------

_TOL_ANALYTIC = 1e-9
_TOL_PIECEWISE = 1e-7


def _default_tol(curve: CurveModel) -> float:
    base = curve.base if isinstance(curve, MirroredCurve) else curve
    return _TOL_PIECEWISE if isinstance(base, PiecewiseLinearCurve) else _TOL_ANALYTIC


def _quad(f, points, tol: float) -> float:
    from scipy import integrate  # deferred: keeps CLI start-up light

    pts = sorted({p for p in points if 0.0 < p < 1.0})
    v, _ = integrate.quad(
        f,
        0.0,
        1.0,
        points=pts or None,
        epsabs=tol,
        epsrel=tol,
        limit=max(300, 10 * len(pts) + 10),
    )
    return float(v)


def _check_not_flat_at_origin(curve: CurveModel) -> None:
    if isinstance(curve, PiecewiseLinearCurve) and curve.y[1] == 0.0:
        raise DegenerateCurveError("R vanishes on an initial interval; LAUC is undefined")


def lauc_integral(curve: CurveModel, tol: float | None = None) -> float:
    """Left-hand AUC: the mean over c of integral_0^c R / (c * R(c)).

    The integrand's limit at c -> 0 is finite (1/2 for a linear start) and the
    open quadrature rule never evaluates the endpoints, so no special-casing
    is required beyond a guard against exactly degenerate curves.
    """
    if tol is None:
        tol = _default_tol(curve)
    if not tol > 0:
        raise ValueError("tol must be positive")
    _check_not_flat_at_origin(curve)

    def integrand(c: float) -> float:
        den = c * curve.value(c)
        if den <= 0.0:
            if c > 1e-12:
                raise DegenerateCurveError(f"R({c}) = 0 on a set of positive measure")
            return 0.5
        return curve.integral(c) / den

    return _quad(integrand, curve.breakpoints(), tol)


def lar_integral(curve: CurveModel, tol: float | None = None) -> float:
    """LAR = 2 * LAUC - 1 for a continuous curve."""
    return 2.0 * lauc_integral(curve, tol) - 1.0


def rauc_integral(curve: CurveModel, tol: float | None = None, form: str = "definition") -> float:
    """Right-hand AUC of a continuous curve.

    ``form='definition'`` integrates over the default-share axis f using the
    inverse curve; ``form='slope'`` integrates the change-of-variables
    expression over x using R'.  The two agree within 2 * tol on valid curves
    and exist as mutual transcription checks.
    """
    if tol is None:
        tol = _default_tol(curve)
    if not tol > 0:
        raise ValueError("tol must be positive")

    if form == "definition":

        def integrand(f: float) -> float:
            c = curve.inverse(f)
            den = (1.0 - f) * (1.0 - c)
            if den <= 0.0:
                if f < 1.0 - 1e-12:
                    raise DegenerateCurveError(
                        f"inverse reaches 1 at f = {f} < 1; RAUC is undefined"
                    )
                return 0.5
            return curve.tail_excess(c) / den

        points = [curve.value(b) for b in curve.breakpoints()]
        return _quad(integrand, points, tol)

    if form == "slope":

        def integrand(c: float) -> float:
            slope = curve.derivative(c)
            if slope == 0.0:
                return 0.0
            den = (1.0 - c) * curve.one_minus_value(c)
            if den <= 0.0:
                if c < 1.0 - 1e-12:
                    raise DegenerateCurveError(
                        f"R({c}) = 1 with slope > 0 before x = 1; RAUC is undefined"
                    )
                return 0.5 * slope
            return curve.tail_excess(c) / den * slope

        return _quad(integrand, curve.breakpoints(), tol)

    raise ValueError(f"form must be 'definition' or 'slope', got {form!r}")


def rar_integral(curve: CurveModel, tol: float | None = None, form: str = "definition") -> float:
    """RAR = 2 * RAUC - 1 for a continuous curve."""
    return 2.0 * rauc_integral(curve, tol, form) - 1.0


# ---------------------------------------------------------------------------
# Triangular closed forms and their inversion
# ---------------------------------------------------------------------------

def _check_triangle_domain(a: float, d: float) -> None:
    if not 0.0 < d < 1.0:
        raise ValueError(f"d must lie in (0, 1), got {d}")
    if not 0.0 < a < 1.0 - d:
        raise ValueError(f"a must lie in (0, 1 - d) = (0, {1.0 - d}), got {a}")


def triangle_lar(a: float, d: float) -> float:
    """Closed-form LAR of the triangular curve with break a and Gini d."""
    _check_triangle_domain(a, d)
    return a * math.log(a) - (1.0 - a) / (1.0 - a - d) * (a + d) * math.log(a + d)


def triangle_rar(a: float, d: float) -> float:
    """Closed-form RAR of the triangular curve with break a and Gini d."""
    _check_triangle_domain(a, d)
    return (1.0 - a - d) * math.log(1.0 - a - d) - (a + d) / a * (1.0 - a) * math.log(
        1.0 - a
    )


def lar_rar_bounds(ar: float) -> tuple[float, float]:
    """Attainable (min, max) of LAR and RAR over concave curves at a given AR.

    The extremes are reached by triangular curves with the break pushed to
    either end.  Defined on the open interval; the limits are (0, 0) as
    ar -> 0 and (1, 1) as ar -> 1.
    """
    if not 0.0 < ar < 1.0:
        raise ValueError(f"ar must lie in (0, 1), got {ar}")
    lo = ar + (1.0 - ar) * math.log1p(-ar)
    hi = -ar * math.log(ar) / (1.0 - ar)
    return lo, hi


def solve_triangle_a(metric_value: float, ar: float, side: str) -> float:
    """Break abscissa of the triangular curve reproducing a metric value.

    Finds the unique a in (0, 1 - ar) with triangle_lar(a, ar) = metric_value
    (side 'left') or triangle_rar(a, ar) = metric_value (side 'right') by
    bisection; triangle_lar is strictly decreasing in a and triangle_rar
    strictly increasing, so the bracket is monotone.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not 0.0 < ar < 1.0:
        raise ValueError(f"ar must lie in (0, 1), got {ar}")
    lo_bound, hi_bound = lar_rar_bounds(ar)
    if not lo_bound < metric_value < hi_bound:
        raise InfeasibleMetricError(
            f"{side} metric {metric_value} is outside the attainable open range "
            f"({lo_bound:.6f}, {hi_bound:.6f}) at ar = {ar}"
        )
    fn = triangle_lar if side == "left" else triangle_rar
    eps = 1e-12
    width = 1.0 - ar
    a = _bisect(
        lambda t: fn(t, ar) - metric_value, eps * width, (1.0 - eps) * width
    )
    residual = fn(a, ar) - metric_value
    if abs(residual) > 1e-10:
        raise RuntimeError(
            f"bisection failed to reach residual 1e-10 (got {residual:.3e})"
        )
    return a


def unified_multiplier(metric_value: float, ar: float) -> float:
    """Zone multiplier solved from the single transcendental equation.

    The left and right multipliers satisfy one equation in mu with the
    respective metric value on the left-hand side; mu ranges over
    (1 / (1 - ar), inf) and the residual is strictly increasing, so bisection
    with an expanding upper bracket converges to the unique solution.
    """
    if not 0.0 < ar < 1.0:
        raise ValueError(f"ar must lie in (0, 1), got {ar}")
    lo_bound, hi_bound = lar_rar_bounds(ar)
    if not lo_bound < metric_value < hi_bound:
        raise InfeasibleMetricError(
            f"metric {metric_value} is outside the attainable open range "
            f"({lo_bound:.6f}, {hi_bound:.6f}) at ar = {ar}"
        )

    def residual(mu: float) -> float:
        t = ar / (mu - 1.0)
        x = t + ar
        coef = (mu - 1.0 - ar) / (mu * (1.0 - ar) - 1.0)
        return t * math.log(t) - coef * x * math.log(x) - metric_value

    lo = (1.0 / (1.0 - ar)) * (1.0 + 1e-10)
    hi = max(10.0, 2.0 * lo)
    while residual(hi) < 0.0:
        hi *= 10.0
        if hi > 1e12:
            raise InfeasibleMetricError(
                f"no multiplier below 1e12 reproduces metric {metric_value} at ar = {ar}"
            )
    return _bisect(residual, lo, hi)


def multipliers(ar: float, lar: float, rar: float) -> tuple[float, float]:
    """Default-probability multipliers of the left and right zones.

    Primary route: invert the triangular closed forms for the break
    abscissas, then mu_L = (a_L + ar) / a_L and
    mu_R = (1 - a_R) / (1 - a_R - ar).  The unified-equation solution is
    always computed as a cross-check; a relative discrepancy above 1e-6
    signals a transcription fault and raises a warning.
    """
    a_l = solve_triangle_a(lar, ar, "left")
    a_r = solve_triangle_a(rar, ar, "right")
    mu_l = (a_l + ar) / a_l
    mu_r = (1.0 - a_r) / (1.0 - a_r - ar)
    for side, mu, metric in (("left", mu_l, lar), ("right", mu_r, rar)):
        check = unified_multiplier(metric, ar)
        if abs(check - mu) > 1e-6 * max(1.0, abs(mu)):
            warnings.warn(
                f"{side} multiplier routes disagree: {mu} vs {check}",
                RuntimeWarning,
                stacklevel=2,
            )
    return mu_l, mu_r


# ---------------------------------------------------------------------------
# Trapezoidal decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrapezoidDecomposition:
    """Trapezoidal re-parameterization of a concave ROC curve.

    The curve is summarized by a trapezoid with the same area: a steep left
    edge up to (cap_a, cap_a * mu_l), a middle base parallel to the diagonal
    (the indifference segment, where the model is quasi-neutral), and a
    shallow right edge from (1 - cap_b, 1 - cap_b / mu_r).
    """

    ar: float
    lar: float
    rar: float
    a_lar: float
    a_rar: float
    mu_l: float
    mu_r: float
    cap_a: float
    cap_b: float
    indifference_i: float
    vertex_low: tuple[float, float]
    vertex_high: tuple[float, float]

    def area(self) -> float:
        """Area under the trapezoid; coincides with (1 + ar) / 2."""
        xs = [0.0, self.cap_a, 1.0 - self.cap_b, 1.0]
        ys = [0.0, self.vertex_low[1], self.vertex_high[1], 1.0]
        return float(np.trapezoid(ys, xs))

    def zones(self) -> list[dict]:
        """Traffic-light zones along the non-default axis.

        ``pd_factor`` scales the portfolio default rate in each zone; the
        scaling is asymptotic (exact as the overall default rate tends to 0).
        """
        return [
            {"zone": "red", "x_from": 0.0, "x_to": self.a_lar, "pd_factor": self.mu_l},
            {"zone": "yellow", "x_from": self.a_lar, "x_to": self.a_rar, "pd_factor": 1.0},
            {"zone": "green", "x_from": self.a_rar, "x_to": 1.0, "pd_factor": 1.0 / self.mu_r},
        ]


def trapezoid_decomposition(ar: float, lar: float, rar: float) -> TrapezoidDecomposition:
    """Build the trapezoid summary from (AR, LAR, RAR).

    Degenerate when A = ar * (1 + 1/(mu_L - 1) + 1/(mu_R - 1)) reaches 1,
    i.e. when 1/(mu_L - 1) + 1/(mu_R - 1) >= (1 - ar)/ar: the middle base
    shrinks to nothing and the curve is triangular.
    """
    a_l = solve_triangle_a(lar, ar, "left")
    a_r = solve_triangle_a(rar, ar, "right")
    mu_l, mu_r = multipliers(ar, lar, rar)
    big_a = ar * (1.0 + 1.0 / (mu_l - 1.0) + 1.0 / (mu_r - 1.0))
    if big_a >= 1.0 - 1e-9:
        raise DegenerateTrapezoidError(
            "indifference segment collapses: "
            f"1/(mu_L - 1) + 1/(mu_R - 1) = {1.0 / (mu_l - 1.0) + 1.0 / (mu_r - 1.0):.9f} "
            f">= (1 - ar)/ar = {(1.0 - ar) / ar:.9f} (within 1e-9); "
            "the curve is triangular and has no middle zone"
        )
    seg = math.sqrt(1.0 - big_a)
    cap_a = a_l / (1.0 + seg)
    cap_b = (1.0 - a_r) / (1.0 + seg)
    return TrapezoidDecomposition(
        ar=ar,
        lar=lar,
        rar=rar,
        a_lar=a_l,
        a_rar=a_r,
        mu_l=mu_l,
        mu_r=mu_r,
        cap_a=cap_a,
        cap_b=cap_b,
        indifference_i=seg,
        vertex_low=(cap_a, cap_a * mu_l),
        vertex_high=(1.0 - cap_b, 1.0 - cap_b / mu_r),
    )


# ---------------------------------------------------------------------------
# Van der Burgt family
# ---------------------------------------------------------------------------

def burgt_ar(k: float) -> float:
    """Gini index of the van der Burgt curve: 2 * (1/(1 - e^(-k)) - 1/k - 1/2).

    Strictly increasing in k, tending to 0 as k -> 0 and to 1 as k -> inf.
    A series branch below k = 1e-3 avoids the cancellation of the two large
    terms.
    """
    if not k > 0.0 or not math.isfinite(k):
        raise ValueError(f"k must be a positive finite real, got {k}")
    if k < 1e-3:
        return k / 6.0 - k**3 / 360.0
    return 2.0 * (1.0 / (-math.expm1(-k)) - 1.0 / k - 0.5)


def burgt_k(ar: float) -> float:
    """Curvature parameter with the requested Gini index (inverse of burgt_ar)."""
    if not 0.0 < ar < 1.0:
        raise ValueError(f"ar must lie in (0, 1), got {ar}")
    lo, hi = 1e-6, 50.0
    while burgt_ar(lo) > ar:
        lo /= 10.0
    while burgt_ar(hi) < ar:
        hi *= 2.0
    k = _bisect(lambda t: burgt_ar(t) - ar, lo, hi)
    if abs(burgt_ar(k) - ar) > 1e-12:
        raise RuntimeError("bisection failed to invert the Gini relation to 1e-12")
    return k


@dataclass(frozen=True)
class BurgtSweepPoint:
    """One row of the preference sweep over the van der Burgt family."""

    ar: float
    k: float
    lar: float
    rar: float
    min_bound: float
    max_bound: float


def burgt_preference_sweep(ar_grid, tol: float | None = None) -> list[BurgtSweepPoint]:
    """LAR/RAR and the feasibility bounds across van der Burgt curves.

    For each grid AR the curve parameter is inverted and both second-order
    metrics are integrated; the family sits strictly on the right-preferent
    side (RAR > LAR) over the whole Gini range.
    """
    rows = []
    for ar in ar_grid:
        ar = float(ar)
        curve = BurgtCurve(burgt_k(ar))
        lo, hi = lar_rar_bounds(ar)
        rows.append(
            BurgtSweepPoint(
                ar=ar,
                k=curve.k,
                lar=lar_integral(curve, tol),
                rar=rar_integral(curve, tol),
                min_bound=lo,
                max_bound=hi,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Synthetic samples
# ---------------------------------------------------------------------------

def sample_from_curve(
    curve: CurveModel, n_nondefault: int, n_default: int, seed: int
) -> ScoreSample:
    """Draw a binary-event sample whose population ROC is the given curve.

    Non-default scores are uniform on [0, 1]; default scores are uniform
    draws pushed through the inverse curve, so the share of defaults below
    any non-default quantile x follows R(x).  Seeded with PCG64.
    """
    if n_nondefault < 1 or n_default < 1:
        raise ValueError("both class sizes must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    nondefault = rng.random(n_nondefault)
    default = np.fromiter(
        (curve.inverse(v) for v in rng.random(n_default)),
        dtype=np.float64,
        count=n_default,
    )
    return ScoreSample(np.sort(nondefault), np.sort(default))

"""Independent brute-force oracles and test helpers.

Everything here is a direct, unoptimized transcription of the defining sums,
kept deliberately separate from the library implementations so the two can
be compared as independent routes.
"""

from __future__ import annotations

import numpy as np


def delta_credit(u, w):
    if u > w:
        return 1.0
    if u == w:
        return 0.5
    return 0.0


def auc_brute(nondefault, default):
    n, d = len(nondefault), len(default)
    total = sum(delta_credit(s, w) for s in nondefault for w in default)
    return total / (n * d)


def lauc_brute(nondefault, default):
    n = len(nondefault)
    total = 0.0
    for k in range(1, n + 1):
        den = sum(delta_credit(nondefault[k - 1], w) for w in default)
        if den == 0:
            continue
        num = sum(
            delta_credit(nondefault[i - 1], w)
            for i in range(1, k + 1)
            for w in default
        )
        total += num / (k * den)
    return total / n


def rauc_brute(nondefault, default):
    d = len(default)
    total = 0.0
    for j in range(1, d + 1):
        den = sum(delta_credit(s, default[j - 1]) for s in nondefault)
        if den == 0:
            continue
        num = sum(
            delta_credit(s, default[i - 1])
            for i in range(j, d + 1)
            for s in nondefault
        )
        total += num / ((d - j + 1) * den)
    return total / d


def imputed_points_brute(counts, pds):
    counts = [float(c) for c in counts]
    pds = [float(p) for p in pds]
    tot_nd = sum(c * (1 - p) for c, p in zip(counts, pds))
    tot_d = sum(c * p for c, p in zip(counts, pds))
    g, r = [0.0], [0.0]
    for c, p in zip(counts, pds):
        g.append(g[-1] + c * (1 - p) / tot_nd)
        r.append(r[-1] + c * p / tot_d)
    return g, r


def ar_imputed_brute(counts, pds):
    g, r = imputed_points_brute(counts, pds)
    auc = sum(
        (r[k] + r[k - 1]) / 2 * (g[k] - g[k - 1]) for k in range(1, len(g))
    )
    return 2 * auc - 1


def lar_imputed_brute(counts, pds):
    g, r = imputed_points_brute(counts, pds)
    n = len(g) - 1
    total = 0.0
    for k in range(1, n + 1):
        if g[k] * r[k] == 0:
            continue
        inner = sum(
            (r[s] + r[s - 1]) / 2 * (g[s] - g[s - 1]) for s in range(1, k + 1)
        )
        total += (g[k] - g[k - 1]) / (g[k] * r[k]) * inner
    return 2 * total - 1


def rar_imputed_brute(counts, pds):
    g, r = imputed_points_brute(counts, pds)
    n = len(g) - 1
    total = 0.0
    for k in range(1, n + 1):
        den = (1 - g[k - 1]) * (1 - r[k - 1])
        if den == 0:
            continue
        inner = sum(
            (1 - (g[s] + g[s - 1]) / 2) * (r[s] - r[s - 1]) for s in range(k, n + 1)
        )
        total += (r[k] - r[k - 1]) / den * inner
    return 2 * total - 1


# ---------------------------------------------------------------------------
# Curve helpers
# ---------------------------------------------------------------------------

def upper_concave_hull(points):
    """Concave majorant of a point set (upper convex hull), sorted by x."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    hull: list[tuple[float, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def random_concave_points(rng: np.random.Generator, n_segments: int):
    """Vertices of a random strictly-concave ROC from (0,0) to (1,1)."""
    widths = rng.dirichlet(np.ones(n_segments))
    slopes = np.sort(rng.exponential(1.0, n_segments))[::-1] + 1e-3
    x = np.concatenate([[0.0], np.cumsum(widths)])
    y = np.concatenate([[0.0], np.cumsum(slopes * widths)])
    x[-1] = 1.0
    y /= y[-1]
    y[-1] = 1.0
    return np.column_stack([x, y])

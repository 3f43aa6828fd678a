"""Triangular geometry: what a (AR, LAR, RAR) triple says about the curve.

Any concave ROC curve with a given Gini can be summarized by two triangular
break abscissas, two default-probability multipliers and an indifference
segment; this demo walks through the whole chain for one model.
"""

from rocmetrics import (
    TriangularCurve,
    lar_integral,
    lar_rar_bounds,
    multipliers,
    rar_integral,
    solve_triangle_a,
    trapezoid_decomposition,
    triangle_lar,
    triangle_rar,
)

ar, lar, rar = 0.667, 0.53, 0.486
print(f"model metrics: AR = {ar}, LAR = {lar}, RAR = {rar}")

# Feasibility first: at a given AR only a band of LAR/RAR values is
# attainable by concave curves, with triangular curves at the extremes.
lo, hi = lar_rar_bounds(ar)
print(f"\nattainable second-order range at AR {ar}: ({lo:.4f}, {hi:.4f})")
print(f"LAR sits at {100 * (lar - lo) / (hi - lo):.0f}% of the band, "
      f"RAR at {100 * (rar - lo) / (hi - lo):.0f}%")

# Invert the closed forms: which triangular curve reproduces each metric?
a_lar = solve_triangle_a(lar, ar, "left")
a_rar = solve_triangle_a(rar, ar, "right")
print(f"\ntriangular break abscissas: a(LAR) = {a_lar:.4f}, a(RAR) = {a_rar:.4f}")
print(f"closed-form check: LAR({a_lar:.4f}) = {triangle_lar(a_lar, ar):.4f}, "
      f"RAR({a_rar:.4f}) = {triangle_rar(a_rar, ar):.4f}")

# The same triangles back the risk multipliers of the left and right zones.
mu_l, mu_r = multipliers(ar, lar, rar)
print(f"\nmultipliers: mu_L = {mu_l:.3f}, mu_R = {mu_r:.3f}")
print(f"the riskiest zone runs at ~{mu_l:.1f}x the portfolio default rate, "
      f"the safest at ~1/{mu_r:.1f}x")

# Full trapezoid summary: same area as the curve, flat middle base.
dec = trapezoid_decomposition(ar, lar, rar)
print(f"\ntrapezoid: a = {dec.cap_a:.4f}, b = {dec.cap_b:.4f}, "
      f"indifference segment I = {dec.indifference_i:.4f}")
print(f"vertices: {tuple(round(v, 4) for v in dec.vertex_low)} and "
      f"{tuple(round(v, 4) for v in dec.vertex_high)}")
print(f"area check: {dec.area():.9f} vs (1 + AR)/2 = {(1 + ar) / 2:.9f}")
print(f"zone split of the non-default axis: "
      f"red {dec.a_lar:.1%} | yellow {dec.a_rar - dec.a_lar:.1%} | "
      f"green {1 - dec.a_rar:.1%}")

# Sanity: quadrature on the two extreme triangles reproduces the band edges.
eps = 1e-6
print(f"\nquadrature at the extremes of AR = {ar}:")
print(f"  LAR of steepest triangle  = {lar_integral(TriangularCurve(eps, ar)):.6f} "
      f"(max bound {hi:.6f})")
print(f"  RAR of shallowest triangle = {rar_integral(TriangularCurve(1 - ar - eps, ar)):.6f} "
      f"(max bound {hi:.6f})")

"""Validating a calibration: binary-data metrics vs imputed metrics.

The development sample gives AR/LAR/RAR from observed defaults; the deployed
calibration gives AR_imp/LAR_imp/RAR_imp from the grade table alone.  If the
calibration is faithful the two agree within sampling error and point at the
same target preference; a distorted calibration shows up immediately.
"""

from rocmetrics import (
    BurgtCurve,
    GradeTable,
    binary_report,
    grade_table_from_curve,
    imputed_report,
    sample_from_curve,
    validate,
)

truth = BurgtCurve(5.0)

# Historical binary data: one year of observed defaults.
sample = sample_from_curve(truth, n_nondefault=25_000, n_default=2_200, seed=11)
binary = binary_report(sample)
print("binary-data estimates:")
print(f"  AR = {binary.ar:.4f} +- {binary.sigma_ar:.4f} (sigma bound)")
print(f"  LAR = {binary.lar:.4f}, RAR = {binary.rar:.4f}")

# A faithful calibration: a 25-grade master scale discretizing the same curve.
faithful = grade_table_from_curve(truth, n_grades=25, population=100_000,
                                  default_rate=0.081)
imputed = imputed_report(faithful)
print("\nimputed from the faithful 25-grade calibration:")
print(f"  AR_imp = {imputed.ar:.4f}, LAR_imp = {imputed.lar:.4f}, "
      f"RAR_imp = {imputed.rar:.4f}")

verdict = validate(binary, imputed, z=2.0)
print(f"\nverdict: gini_consistent = {verdict.gini_consistent}, "
      f"preference {verdict.preference_binary} vs {verdict.preference_imputed} "
      f"(consistent = {verdict.preference_consistent})")
print(f"dominant-metric gap = {verdict.dominant_metric_gap:+.4f}")
for note in verdict.notes:
    print(f"  note: {note}")

# Now a distorted calibration: same total default mass, but the PDs are
# flattened toward the portfolio mean, wiping out most discrimination.
flat = GradeTable.from_arrays(
    [g.count for g in faithful.grades],
    [0.6 * g.pd + 0.4 * 0.081 for g in faithful.grades],
    [g.label for g in faithful.grades],
)
verdict_bad = validate(binary, imputed_report(flat), z=2.0)
print(f"\nflattened calibration: AR_imp = {verdict_bad.imputed.ar:.4f}")
print(f"verdict: gini_consistent = {verdict_bad.gini_consistent}")
for note in verdict_bad.notes:
    print(f"  note: {note}")

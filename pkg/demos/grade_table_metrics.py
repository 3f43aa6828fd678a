"""Metrics imputed from a calibrated rating scale - no defaults needed.

All that is required is the population per grade and the calibrated PD per
grade, the two quantities every rating-agency default study publishes.
"""

from rocmetrics import GradeTable, ar_imputed, imputed_roc, lar_imputed, rar_imputed

# A nine-grade master scale: worst grade first (descending PD), with the
# bulk of the portfolio concentrated in the middle grades.
counts = [40, 180, 900, 2800, 5200, 4900, 2600, 900, 300]
pds = [0.35, 0.17, 0.085, 0.042, 0.021, 0.010, 0.005, 0.0025, 0.0012]
labels = ["CCC", "B-", "B", "B+", "BB", "BB+", "BBB", "A", "AA"]
table = GradeTable.from_arrays(counts, pds, labels)

print(f"{'grade':>6} {'count':>6} {'pd':>8}")
for g in table.grades:
    print(f"{g.label:>6} {g.count:>6} {g.pd:>8.4f}")
print(f"\nexpected defaults     : {table.default_mass:8.1f}")
print(f"expected non-defaults : {table.nondefault_mass:8.1f}")

# The imputed ROC cumulates expected non-default mass against expected
# default mass, grade by grade.
roc = imputed_roc(table)
print("\nimputed ROC points (g, R):")
for gx, ry in roc.points:
    print(f"  ({gx:6.4f}, {ry:6.4f})")

# Imputed first- and second-order metrics.
ar = ar_imputed(table)
lar = lar_imputed(table)
rar = rar_imputed(table)
print(f"\nAR_imp  = {ar:.4f}")
print(f"LAR_imp = {lar:.4f}")
print(f"RAR_imp = {rar:.4f}")
side = "right" if rar > lar else "left"
print(f"\nthe calibrated scale encodes a {side}-hand target preference")
print("(its discriminatory power leans toward "
      + ("confirming good obligors)" if side == "right" else "flagging bad obligors)"))

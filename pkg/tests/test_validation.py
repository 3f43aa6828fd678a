"""Tests for the calibration-validation workflow."""

from __future__ import annotations

import pytest

from rocmetrics import (
    BurgtCurve,
    MetricReport,
    binary_report,
    classify_preference,
    grade_table_from_curve,
    imputed_report,
    sample_from_curve,
    validate,
)


def report(ar, lar, rar, sigma=0.03, source="binary", n=1000, d=100):
    return MetricReport(ar, lar, rar, sigma if source == "binary" else 0.0, n, d, source)


# ---------------------------------------------------------------------------
# Preference classification
# ---------------------------------------------------------------------------

def test_classify_preference_cases():
    assert classify_preference(0.53, 0.486, 0.02) == "left"
    assert classify_preference(0.3, 0.3, 0.5) == "neutral"
    assert classify_preference(0.3, 0.3, 0.0) == "neutral"
    assert classify_preference(0.2, 0.5, 0.01) == "right"


def test_classify_preference_zero_band_is_exact_tie_only():
    assert classify_preference(0.30000001, 0.3, 0.0) == "left"
    assert classify_preference(0.3, 0.30000001, 0.0) == "right"


def test_classify_preference_rejects_negative_band():
    with pytest.raises(ValueError):
        classify_preference(0.3, 0.2, -0.1)


def test_burgt_metrics_classify_right():
    from rocmetrics import lar_integral, rar_integral

    curve = BurgtCurve(5.0)
    assert classify_preference(lar_integral(curve), rar_integral(curve), 0.01) == "right"


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

def test_validate_gini_consistent_case():
    verdict = validate(report(0.60, 0.5, 0.4), report(0.61, 0.5, 0.4, source="imputed"), z=2.0)
    assert verdict.gini_consistent
    assert verdict.preference_binary == "left"
    assert verdict.preference_consistent
    assert verdict.dominant_metric_gap == pytest.approx(0.0)


def test_validate_gini_inconsistent_case():
    verdict = validate(report(0.60, 0.5, 0.4), report(0.75, 0.5, 0.4, source="imputed"), z=2.0)
    assert not verdict.gini_consistent
    assert any("secondary" in note for note in verdict.notes)


def test_validate_rejects_source_mismatch():
    with pytest.raises(ValueError, match="source 'binary'"):
        validate(report(0.6, 0.5, 0.4, source="imputed"), report(0.6, 0.5, 0.4, source="imputed"))
    with pytest.raises(ValueError, match="source 'imputed'"):
        validate(report(0.6, 0.5, 0.4), report(0.6, 0.5, 0.4))


def test_validate_rejects_bad_z():
    with pytest.raises(ValueError, match="z"):
        validate(report(0.6, 0.5, 0.4), report(0.6, 0.5, 0.4, source="imputed"), z=0.0)


def test_validate_default_band_is_binary_sigma():
    verdict = validate(report(0.6, 0.5, 0.48, sigma=0.05), report(0.6, 0.5, 0.4, source="imputed"))
    assert verdict.band == 0.05
    assert verdict.preference_binary == "neutral"  # |0.5 - 0.48| < 0.05


def test_validate_dominant_gap_uses_dominant_side():
    verdict = validate(
        report(0.6, 0.3, 0.5), report(0.6, 0.35, 0.42, source="imputed"), band=0.01
    )
    assert verdict.preference_binary == "right"
    assert verdict.dominant_metric_gap == pytest.approx(0.5 - 0.42)


def test_validate_swapping_lar_rar_flips_preferences():
    binary = report(0.6, 0.52, 0.40)
    imputed = report(0.6, 0.50, 0.43, source="imputed")
    v1 = validate(binary, imputed, band=0.01)
    v2 = validate(
        report(0.6, 0.40, 0.52),
        report(0.6, 0.43, 0.50, source="imputed"),
        band=0.01,
    )
    flip = {"left": "right", "right": "left", "neutral": "neutral"}
    assert v2.preference_binary == flip[v1.preference_binary]
    assert v2.preference_imputed == flip[v1.preference_imputed]
    assert v2.gini_consistent == v1.gini_consistent
    assert v2.preference_consistent == v1.preference_consistent


def test_validate_monotone_in_z():
    binary = report(0.60, 0.5, 0.4, sigma=0.03)
    imputed = report(0.65, 0.5, 0.4, source="imputed")
    assert not validate(binary, imputed, z=1.0).gini_consistent
    assert validate(binary, imputed, z=2.0).gini_consistent
    assert validate(binary, imputed, z=3.0).gini_consistent


def test_end_to_end_pipeline_self_consistency():
    curve = BurgtCurve(5.0)
    sample = sample_from_curve(curve, 20000, 2000, seed=5)
    table = grade_table_from_curve(curve, 50, 100000, 0.09)
    verdict = validate(binary_report(sample), imputed_report(table))
    assert verdict.gini_consistent
    assert verdict.preference_binary == "right"
    assert verdict.preference_imputed == "right"
    assert verdict.preference_consistent

"""Calibration validation: binary-data metrics against imputed metrics.

A calibration is consistent when the Gini computed from observed defaults
and the Gini imputed from the calibrated grade table agree within a
confidence multiple of the sampling bound, and when both sources point at
the same target preference (left: better at flagging bads; right: better at
confirming goods).  Verdicts are descriptive; nothing here decides pass or
fail for you.
"""

from __future__ import annotations

from dataclasses import dataclass

from .empirical import MetricReport

__all__ = ["ValidationVerdict", "classify_preference", "validate"]


@dataclass(frozen=True)
class ValidationVerdict:
    """Outcome of comparing a binary-source report with an imputed one."""

    binary: MetricReport
    imputed: MetricReport
    z: float
    band: float
    gini_consistent: bool
    preference_binary: str  # 'left', 'right' or 'neutral'
    preference_imputed: str
    preference_consistent: bool
    dominant_metric_gap: float
    notes: tuple[str, ...]


def classify_preference(lar: float, rar: float, band: float) -> str:
    """Tag the target preference from the sign of LAR - RAR.

    Differences inside the neutrality band count as neutral; band 0 makes
    neutral occur only on an exact tie.
    """
    if band < 0:
        raise ValueError(f"band must be nonnegative, got {band}")
    diff = lar - rar
    if diff > band:
        return "left"
    if -diff > band:
        return "right"
    return "neutral"


def validate(
    binary: MetricReport,
    imputed: MetricReport,
    z: float = 2.0,
    band: float | None = None,
) -> ValidationVerdict:
    """Compare first- and second-order metrics across the two sources.

    First-order consistency holds when |AR_binary - AR_imputed| is within
    z standard-deviation bounds of the binary estimate.  Preferences are
    classified on both sides with the same neutrality band (defaulting to
    the binary sigma, the natural scale of indistinguishability here) and
    the gap of the dominant second-order metric against its imputed
    counterpart is reported.  When the first-order check fails, the
    second-order comparison is still computed but flagged as secondary.
    """
    if binary.source != "binary":
        raise ValueError(f"first report must have source 'binary', got {binary.source!r}")
    if imputed.source != "imputed":
        raise ValueError(f"second report must have source 'imputed', got {imputed.source!r}")
    if not z > 0:
        raise ValueError(f"z must be positive, got {z}")
    if not binary.sigma_ar > 0:
        raise ValueError("binary report must carry a positive sigma_ar")
    if band is None:
        band = binary.sigma_ar

    gini_gap = abs(binary.ar - imputed.ar)
    gini_consistent = gini_gap <= z * binary.sigma_ar
    pref_binary = classify_preference(binary.lar, binary.rar, band)
    pref_imputed = classify_preference(imputed.lar, imputed.rar, band)
    preference_consistent = pref_binary == pref_imputed

    if binary.lar >= binary.rar:
        dominant_side = "left"
        gap = binary.lar - imputed.lar
    else:
        dominant_side = "right"
        gap = binary.rar - imputed.rar

    notes = [
        f"first-order gap |ar_binary - ar_imputed| = {gini_gap:.6g} vs "
        f"z * sigma = {z * binary.sigma_ar:.6g}",
        f"dominant binary metric is {dominant_side}-hand; gap to imputed = {gap:.6g}",
    ]
    if not gini_consistent:
        notes.append(
            "first-order metrics disagree beyond the confidence bound; "
            "treat the second-order comparison as secondary"
        )
    if not preference_consistent:
        notes.append(
            f"target preference differs between sources "
            f"({pref_binary} from binary data, {pref_imputed} imputed)"
        )

    return ValidationVerdict(
        binary=binary,
        imputed=imputed,
        z=z,
        band=band,
        gini_consistent=gini_consistent,
        preference_binary=pref_binary,
        preference_imputed=pref_imputed,
        preference_consistent=preference_consistent,
        dominant_metric_gap=gap,
        notes=tuple(notes),
    )

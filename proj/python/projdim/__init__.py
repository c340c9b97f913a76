"""Overlap counts, pressure and dimension bounds for projected Sierpinski measures."""

import json

from ._core import (
    ProjdimError,
    __version__,
    contractive_word_count,
    count,
    dimension_report_json,
    entropy,
    fourier_nondecay,
    max_contraction_tau,
    overlap_growth,
    pressure_gap,
    slopes_up_to,
    strongly_connected,
    weak_gibbs,
)


def dimension_report(p, q, entropy_n=10):
    """Dimension report as a dict (same fields as `projdim dimension`)."""
    return json.loads(dimension_report_json(p, q, entropy_n))


__all__ = [
    "ProjdimError",
    "__version__",
    "contractive_word_count",
    "count",
    "dimension_report",
    "dimension_report_json",
    "entropy",
    "fourier_nondecay",
    "max_contraction_tau",
    "overlap_growth",
    "pressure_gap",
    "slopes_up_to",
    "strongly_connected",
    "weak_gibbs",
]

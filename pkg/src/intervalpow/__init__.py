"""Interval extension of the power function ``x**y`` without sign constraints.

Every case reduces to the nonnegative-base extension :func:`p0` applied to
the base and its reflection; the parity class of the exponent decides which
reflected pieces take part.
"""

from ._kernels import BACKEND
from .exponent import (
    ExponentKind,
    Rational,
    classify_machine,
    classify_rational,
    parse_rational,
    reduce,
)
from .extended import ExactExponent, pow_exact, pow_float, pow_nonsingleton_exact
from .interval import (
    EMPTY,
    Interval,
    clamp_nonneg,
    format_interval,
    hull,
    intersect,
    is_singleton,
    make,
    negate,
    parse_interval,
    widen_outward,
)
from .nonneg import DEFAULT_SLACK, PointPowerBounds, p0, pow_point_bounds
from .oracle import (
    GridSpec,
    ImageSample,
    check_containment,
    estimate_tightness,
    sample_image,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_SLACK",
    "EMPTY",
    "ExactExponent",
    "ExponentKind",
    "GridSpec",
    "ImageSample",
    "Interval",
    "PointPowerBounds",
    "Rational",
    "check_containment",
    "clamp_nonneg",
    "classify_machine",
    "classify_rational",
    "estimate_tightness",
    "format_interval",
    "hull",
    "intersect",
    "is_singleton",
    "make",
    "negate",
    "p0",
    "parse_interval",
    "parse_rational",
    "pow_exact",
    "pow_float",
    "pow_nonsingleton_exact",
    "pow_point_bounds",
    "reduce",
    "sample_image",
    "widen_outward",
]

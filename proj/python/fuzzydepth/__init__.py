"""Depth functions and medians for samples of fuzzy numbers."""

from ._core import (
    AlphaGrid,
    CrispCdf,
    FuzzyDepthError,
    FuzzyNumber,
    Laws,
    Sample,
    band_contains,
    blend,
    depth,
    depth_batch,
    median_band,
    median_gr,
    median_si,
    rho,
    translate,
    verify,
)

__all__ = [
    "AlphaGrid",
    "CrispCdf",
    "FuzzyDepthError",
    "FuzzyNumber",
    "Laws",
    "Sample",
    "band_contains",
    "blend",
    "depth",
    "depth_batch",
    "median_band",
    "median_gr",
    "median_si",
    "rho",
    "translate",
    "verify",
]

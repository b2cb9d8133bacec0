"""Curves with increasing chords in normed planes."""

from ._core import (
    MchordsError,
    UnitDisk,
    check_hypercube,
    check_increasing_chords,
    convexify,
    hypercube_curve,
    involute,
    lm,
    lm_sweep,
)

__all__ = [
    "MchordsError",
    "UnitDisk",
    "check_hypercube",
    "check_increasing_chords",
    "convexify",
    "hypercube_curve",
    "involute",
    "lm",
    "lm_sweep",
]

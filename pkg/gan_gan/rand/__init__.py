"""
Seeded random streams for reproducible training.
"""

from .prng import (
    Prng, standard_normal, uniform, shuffle, permutation,
    STREAM_INIT, STREAM_NOISE, STREAM_SHUFFLE, STREAM_PROBE,
)

__all__ = [
    "Prng", "standard_normal", "uniform", "shuffle", "permutation",
    "STREAM_INIT", "STREAM_NOISE", "STREAM_SHUFFLE", "STREAM_PROBE",
]

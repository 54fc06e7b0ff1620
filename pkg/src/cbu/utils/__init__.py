r"""Utility classes for running batches of recognitions"""

from ._pool import RecognitionPool


__all__ = [
    "RecognitionPool",
]

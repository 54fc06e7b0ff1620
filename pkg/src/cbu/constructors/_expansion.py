import logging
from fractions import Fraction
from typing import Tuple

from ..geometry import IntersectionRepresentation
from ..geometry._box import _BoxFamily


_logger = logging.getLogger(__name__)


def min_gap(r: _BoxFamily, axis: int) -> Fraction:
    """smallest positive difference between two endpoint coordinates along ``axis``"""
    xs = r.coordinates(axis)
    return min(b - a for a, b in zip(xs, xs[1:]))


def expand_boxes(r: _BoxFamily) -> Tuple[IntersectionRepresentation, Tuple[Fraction, ...]]:
    r"""Grows every box by a quarter of the smallest endpoint gap on each axis

    Two closed boxes meet after the expansion exactly when they met before, and every
    nonempty intersection becomes full-dimensional: boxes sharing only a face or a
    corner now overlap by half a gap along those axes, while a pair separated by at
    least one gap stays separated by half a gap.

    Returns
    -------
    tuple
        ``(expanded representation, amount per axis)``
    """
    if r.n == 0:
        return IntersectionRepresentation([], d=r.d), tuple(Fraction(0) for _ in range(r.d))
    amounts = tuple(
        min_gap(r, k) / 4 if len(r.coordinates(k)) > 1 else Fraction(1)
        for k in range(r.d)
    )
    _logger.debug("expanding %s by %s", r, [str(a) for a in amounts])
    expanded = IntersectionRepresentation(
        [box.expanded(amounts) for box in r.boxes], d=r.d
    )
    return expanded, amounts

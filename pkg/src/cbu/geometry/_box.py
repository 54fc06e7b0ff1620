"""Exact axis-parallel boxes

Coordinates are :class:`fractions.Fraction` throughout. Axis 0 is the contact axis.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .._exceptions import DimensionMismatchError, FormatError, RepresentationError


Interval = Tuple[Fraction, Fraction]
RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """converts an integer, a fraction or a ``"p/q"`` string exactly"""
    if isinstance(value, (bool, float)):
        raise FormatError(f"{value!r} is not a rational number, write it as 'p/q'")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exception:
        raise FormatError(f"{value!r} is not a rational number") from exception


@dataclass(frozen=True)
class Box:
    r"""A closed, full-dimensional, axis-parallel box

    Parameters
    ----------
    intervals : sequence of pairs
        ``(lo, hi)`` per axis with ``lo < hi``; endpoints are converted with
        :func:`as_rational`

    Examples
    --------

    >>> from cbu.geometry import Box
    >>> Box.of((0, 1), ("1/2", 2)).intervals
    ((Fraction(0, 1), Fraction(1, 1)), (Fraction(1, 2), Fraction(2, 1)))
    """

    intervals: Tuple[Interval, ...]

    def __post_init__(self):
        intervals = tuple(
            (as_rational(lo), as_rational(hi)) for lo, hi in self.intervals
        )
        if not intervals:
            raise RepresentationError("a box needs at least one axis")
        for k, (lo, hi) in enumerate(intervals):
            if not lo < hi:
                raise RepresentationError(
                    f"box is empty along axis {k}: [{lo}, {hi}]"
                )
        object.__setattr__(self, "intervals", intervals)

    @classmethod
    def of(cls, *intervals) -> "Box":
        return cls(tuple(intervals))

    @property
    def d(self) -> int:
        return len(self.intervals)

    def lo(self, axis: int) -> Fraction:
        return self.intervals[axis][0]

    def hi(self, axis: int) -> Fraction:
        return self.intervals[axis][1]

    def contains(self, point: Sequence[Fraction]) -> bool:
        return all(lo <= x <= hi for (lo, hi), x in zip(self.intervals, point))

    def meets(self, other: "Box") -> bool:
        """whether the closed boxes share a point"""
        return all(
            max(a[0], b[0]) <= min(a[1], b[1])
            for a, b in zip(self.intervals, other.intervals)
        )

    def overlap(self, other: "Box") -> Optional[Tuple[Interval, ...]]:
        """the (possibly degenerate) common part, or ``None`` when disjoint"""
        common = tuple(
            (max(a[0], b[0]), min(a[1], b[1]))
            for a, b in zip(self.intervals, other.intervals)
        )
        if any(lo > hi for lo, hi in common):
            return None
        return common

    def expanded(self, amounts: Sequence[Fraction]) -> "Box":
        """grows the box by ``amounts[k]`` on both sides of axis ``k``"""
        return Box(
            tuple((lo - a, hi + a) for (lo, hi), a in zip(self.intervals, amounts))
        )

    def with_axis(self, interval: Tuple[RationalLike, RationalLike], first=False) -> "Box":
        """the box with one more axis, appended last or prepended as axis 0"""
        if first:
            return Box((tuple(interval),) + self.intervals)
        return Box(self.intervals + (tuple(interval),))

    def center(self) -> Tuple[Fraction, ...]:
        return tuple((lo + hi) / 2 for lo, hi in self.intervals)


def _boxes_from(boxes) -> Tuple[Box, ...]:
    if isinstance(boxes, Mapping):
        keys = sorted(boxes)
        if keys != list(range(len(keys))):
            raise RepresentationError(
                f"boxes must be given for the vertices 0..{len(keys) - 1}, got {keys}"
            )
        boxes = [boxes[v] for v in keys]
    return tuple(b if isinstance(b, Box) else Box(tuple(b)) for b in boxes)


class _BoxFamily:
    """Boxes of one dimension indexed by the vertices ``0..n-1``"""

    __slots__ = ("_boxes", "_d")

    def __init__(
        self,
        boxes: Union[Sequence[Box], Mapping[int, Box], Iterable],
        d: Optional[int] = None,
    ):
        boxes = _boxes_from(boxes)
        if d is None:
            d = boxes[0].d if boxes else 1
        for v, box in enumerate(boxes):
            if box.d != d:
                raise DimensionMismatchError(
                    entered_dimension=box.d,
                    entered_name=f"box of vertex {v}",
                    expected_dimension=d,
                    expected_source="the family",
                )
        self._boxes = boxes
        self._d = d

    @property
    def d(self) -> int:
        return self._d

    @property
    def n(self) -> int:
        return len(self._boxes)

    @property
    def boxes(self) -> Tuple[Box, ...]:
        return self._boxes

    def box(self, v: int) -> Box:
        return self._boxes[v]

    def coordinates(self, axis: int) -> Tuple[Fraction, ...]:
        """sorted distinct endpoints along ``axis``"""
        return tuple(sorted({x for b in self._boxes for x in b.intervals[axis]}))

    def max_abs_coordinate(self) -> Fraction:
        return max(
            (abs(x) for b in self._boxes for iv in b.intervals for x in iv),
            default=Fraction(0),
        )

    def __len__(self) -> int:
        return len(self._boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(self._boxes)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._d == other._d and self._boxes == other._boxes

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._d, self._boxes))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(d={self._d}, n={self.n})"


class BoxRepresentation(_BoxFamily):
    r"""Candidate contact representation: one ``d``-dimensional box per vertex

    Validity (interior-disjoint boxes, every contact a ``(d-1)``-dimensional box
    orthogonal to axis 0) is not enforced on construction so invalid families can be
    reported on; see :func:`cbu.geometry.verify_representation`.
    """

    __slots__ = ()


class IntersectionRepresentation(_BoxFamily):
    r"""Boxicity model: boxes may overlap, vertices are adjacent iff boxes meet

    The representation is *proper* when every edge owns a point covered by its two
    boxes only; see :attr:`proper`.
    """

    __slots__ = ()

    @property
    def proper(self) -> bool:
        from ._intersection import is_proper

        return is_proper(self)

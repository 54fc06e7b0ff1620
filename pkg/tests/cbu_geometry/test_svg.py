import pytest

from cbu._exceptions import DimensionMismatchError, RepresentationError
from cbu.geometry import BoxRepresentation, representation_to_svg


@pytest.fixture
def two_boxes():
    return BoxRepresentation([[(0, 1), (0, 1)], [(1, 2), (0, 1)]])


def test_svg(two_boxes):
    svg = representation_to_svg(two_boxes)
    assert svg.startswith("<svg")
    assert svg.endswith("</svg>\n")
    assert 'width="800.0000"' in svg
    assert 'height="420.0000"' in svg
    assert svg.count("<rect") == 2
    assert 'id="v1"' in svg
    assert 'x="400.0000"' in svg
    assert ">0</text>" in svg and ">1</text>" in svg
    assert representation_to_svg(two_boxes) == svg


def test_svg_without_labels(two_boxes):
    svg = representation_to_svg(two_boxes, labels=False)
    assert "<text" not in svg
    assert svg.count("<rect") == 2


def test_svg_rejects():
    with pytest.raises(DimensionMismatchError, match="SVG emitter"):
        representation_to_svg(BoxRepresentation([[(0, 1), (0, 1), (0, 1)]]))
    with pytest.raises(RepresentationError, match="no boxes"):
        representation_to_svg(BoxRepresentation([], d=2))

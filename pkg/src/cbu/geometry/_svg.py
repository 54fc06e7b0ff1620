"""Deterministic SVG drawings of 2-dimensional representations"""

import xml.etree.ElementTree as ET
from fractions import Fraction

from .._exceptions import DimensionMismatchError, RepresentationError
from ._box import _BoxFamily


CANVAS = 800
MARGIN = 20
STROKE = "#264653"
FILL = "#e9c46a"
FILL_OPACITY = "0.6"
FONT_SIZE = 12


def _fmt(x: Fraction) -> str:
    return f"{float(round(x, 4)):.4f}"


def representation_to_svg(r: _BoxFamily, labels: bool = True) -> str:
    """Draws a ``d = 2`` representation, contact axis horizontal

    The drawing is an affine image of the boxes scaled into an ``800 x 800`` canvas
    with a fixed margin, vertex indices written at the box centres. Output depends
    only on ``r``.
    """
    if r.d != 2:
        raise DimensionMismatchError(
            entered_dimension=r.d,
            entered_name="representation",
            expected_dimension=2,
            expected_source="the SVG emitter",
        )
    if r.n == 0:
        raise RepresentationError("nothing to draw, the representation has no boxes")
    xs, ys = r.coordinates(0), r.coordinates(1)
    x0, y1 = xs[0], ys[-1]
    span = max(xs[-1] - xs[0], ys[-1] - ys[0])
    scale = Fraction(CANVAS - 2 * MARGIN) / span
    width = MARGIN * 2 + (xs[-1] - xs[0]) * scale
    height = MARGIN * 2 + (ys[-1] - ys[0]) * scale

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=_fmt(width),
        height=_fmt(height),
        viewBox=f"0 0 {_fmt(width)} {_fmt(height)}",
    )
    boxes = ET.SubElement(
        root,
        "g",
        stroke=STROKE,
        fill=FILL,
        attrib={"fill-opacity": FILL_OPACITY, "stroke-width": "1"},
    )
    for v, box in enumerate(r.boxes):
        (lo0, hi0), (lo1, hi1) = box.intervals
        rect = ET.SubElement(
            boxes,
            "rect",
            x=_fmt(MARGIN + (lo0 - x0) * scale),
            y=_fmt(MARGIN + (y1 - hi1) * scale),
            width=_fmt((hi0 - lo0) * scale),
            height=_fmt((hi1 - lo1) * scale),
        )
        rect.set("id", f"v{v}")
    if labels:
        text_group = ET.SubElement(
            root,
            "g",
            fill=STROKE,
            attrib={
                "font-family": "monospace",
                "font-size": str(FONT_SIZE),
                "text-anchor": "middle",
                "dominant-baseline": "central",
            },
        )
        for v, box in enumerate(r.boxes):
            cx, cy = box.center()
            text = ET.SubElement(
                text_group,
                "text",
                x=_fmt(MARGIN + (cx - x0) * scale),
                y=_fmt(MARGIN + (y1 - cy) * scale),
            )
            text.text = str(v)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"

"""
SVG drawings of labeled cell complexes. Planar complexes are drawn in diagram
coordinates, rows downward and columns to the right. Borel complexes are drawn as
wireframes: every apex m is sent to L(m), L(m)_j = m_j + ... + m_n, and then
projected obliquely onto the page.
"""
import logging
import math
import xml.etree.ElementTree as ET  # noqa: S405
from pathlib import Path
from typing import Optional, Sequence

from newtondual.core.cellres import Cell, LabeledCellComplex
from newtondual.core.monomials import Monomial, format_monomial

log = logging.getLogger("newtondual")

SCALE: float = 60.0
MARGIN: float = 40.0

Position = tuple[float, float]


def _lifted(m: Monomial) -> list[int]:
    exps: tuple[int, ...] = m.exponents
    return [sum(exps[j:]) for j in range(len(exps))]


def _projected(m: Monomial) -> Position:
    lifted: list[int] = _lifted(m)
    n: int = len(lifted)
    x: float = 0.0
    y: float = 0.0
    for j, value in enumerate(lifted):
        angle: float = math.pi * (j + 0.5) / n
        x += value * math.cos(angle)
        y += value * math.sin(angle)
    return x * SCALE, y * SCALE


def vertex_positions(cx: LabeledCellComplex) -> dict[int, Position]:
    """Page coordinates of every vertex, before the margin shift."""
    positions: dict[int, Position] = {}
    for c in cx.of_dim(0):
        if c.kind == "vertex":
            i, j = c.data[0]
            positions[c.id] = (j * SCALE, i * SCALE)
        elif c.kind == "borel":
            positions[c.id] = _projected(c.data[0])
        else:
            raise ValueError(f"Cells of kind {c.kind} have no drawing coordinates.")
    return positions


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _shift(positions: dict[int, Position]) -> tuple[dict[int, Position], float, float]:
    xs: list[float] = [x for x, _ in positions.values()]
    ys: list[float] = [y for _, y in positions.values()]
    dx: float = MARGIN - min(xs)
    dy: float = MARGIN - min(ys)
    shifted = {cid: (x + dx, y + dy) for cid, (x, y) in positions.items()}
    return shifted, max(xs) - min(xs) + 2 * MARGIN, max(ys) - min(ys) + 2 * MARGIN


def _rectangle(root: ET.Element, c: Cell, positions: dict[int, Position], names: Optional[Sequence[str]]) -> None:
    corners: list[Position] = [positions[v] for v in sorted(c.vertices)]
    left: float = min(x for x, _ in corners)
    top: float = min(y for _, y in corners)
    rect = ET.SubElement(
        root,
        "rect",
        {
            "class": "rectangle",
            "x": _fmt(left),
            "y": _fmt(top),
            "width": _fmt(max(x for x, _ in corners) - left),
            "height": _fmt(max(y for _, y in corners) - top),
        },
    )
    ET.SubElement(rect, "title").text = format_monomial(c.label, names)


def render_complex(cx: LabeledCellComplex, names: Optional[Sequence[str]] = None) -> str:
    """
    Draws 2-cells of a planar complex as filled rectangles, then every edge, then
    every vertex with its label. Elements appear in cell id order.
    """
    positions, width, height = _shift(vertex_positions(cx))
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
        },
    )
    ET.SubElement(root, "style").text = (
        ".rectangle{fill:#dde8f5;stroke:none}"
        "line{stroke:#333;stroke-width:2}"
        "circle{fill:#fff;stroke:#333;stroke-width:2}"
        "text{font:11px sans-serif;text-anchor:middle}"
    )

    ordered: list[Cell] = sorted(cx.cells, key=lambda c: c.id)
    for c in ordered:
        if c.dim == 2 and c.kind == "rectangle":
            _rectangle(root, c, positions, names)

    for c in ordered:
        if c.dim != 1:
            continue
        first, second = sorted(c.vertices)
        (x1, y1), (x2, y2) = positions[first], positions[second]
        line = ET.SubElement(
            root, "line", {"class": c.kind, "x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2)}
        )
        ET.SubElement(line, "title").text = format_monomial(c.label, names)

    for c in ordered:
        if c.dim != 0:
            continue
        x, y = positions[c.id]
        ET.SubElement(root, "circle", {"cx": _fmt(x), "cy": _fmt(y), "r": "5"})
        text = ET.SubElement(root, "text", {"x": _fmt(x), "y": _fmt(y - 9)})
        text.text = format_monomial(c.label, names)

    ET.indent(root)
    return ET.tostring(root, encoding="unicode")


def write_svg(cx: LabeledCellComplex, path: str | Path, names: Optional[Sequence[str]] = None) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_complex(cx, names) + "\n", encoding="utf-8")
    log.info("Wrote %s cells to %s.", len(cx.cells) - 1, target)
    return target

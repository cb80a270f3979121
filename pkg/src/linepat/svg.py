"""SVG figures of line patterns: lines clipped to a box, cells shaded by side count.

All geometry stays rational until the final coordinate emission, which uses
fixed six-decimal formatting so output is byte-for-byte reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .geometry import CoeffPoint, as_fraction, foot_of_perpendicular
from .subdivision import Subdivision, build

HIGHLIGHT = "#f28e8e"
DEFAULT_SHADES = {3: "#dde6f2", 4: "#f2ead3"}
PAD = Fraction(1, 10)

_COLOR = re.compile(r"#[0-9a-fA-F]{3}|#[0-9a-fA-F]{6}|[a-zA-Z]+")

ViewBox = tuple[Fraction, Fraction, Fraction, Fraction]


def check_color(color: str) -> str:
    if not _COLOR.fullmatch(color):
        raise ValueError(f"not a color: {color!r}")
    return color


@dataclass(frozen=True)
class RenderConfig:
    """``viewbox`` is ``(xmin, ymin, xmax, ymax)`` or None for automatic fitting.

    Bounded cells whose side count is a key of ``shades`` get that fill; cells
    with 5 or more sides and no explicit entry get ``highlight``.
    """

    viewbox: Optional[ViewBox] = None
    width: int = 600
    shades: dict = field(default_factory=lambda: dict(DEFAULT_SHADES))
    highlight: Optional[str] = HIGHLIGHT
    labels: bool = False

    def __post_init__(self) -> None:
        if self.width <= 0:
            raise ValueError("width must be positive")
        if self.viewbox is not None:
            box = tuple(as_fraction(v) for v in self.viewbox)
            if len(box) != 4 or box[2] <= box[0] or box[3] <= box[1]:
                raise ValueError("view box needs xmin < xmax and ymin < ymax")
            object.__setattr__(self, "viewbox", box)
        for color in self.shades.values():
            check_color(color)
        if self.highlight is not None:
            check_color(self.highlight)

    def fill_for(self, side_count: int) -> Optional[str]:
        if side_count in self.shades:
            return self.shades[side_count]
        return self.highlight if side_count >= 5 else None


def parse_viewbox(text: str) -> ViewBox:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected xmin,ymin,xmax,ymax, got {text!r}")
    return tuple(as_fraction(p.strip()) for p in parts)


def parse_shade(text: str, default: str = HIGHLIGHT) -> tuple[int, str]:
    """``"5:#cccccc"`` or a bare side count ``"5"`` (which takes ``default``)."""
    count, _, color = text.partition(":")
    try:
        k = int(count)
    except ValueError:
        raise ValueError(f"bad side count in shade {text!r}") from None
    if k < 3:
        raise ValueError(f"side count must be at least 3, got {k}")
    return k, check_color(color or default)


def _padded(xs: list[Fraction], ys: list[Fraction]) -> ViewBox:
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    # a flat extent borrows the other axis, a point gets a unit box
    w = w or h or Fraction(1)
    h = h or w
    return (x0 - PAD * w, y0 - PAD * h, x1 + PAD * w, y1 + PAD * h)


def auto_viewbox(sub: Optional[Subdivision]) -> ViewBox:
    """Vertex bounding box padded by 10% per side.

    Without vertices (one line or only parallel lines) the feet of the
    perpendiculars from the origin stand in, together with the origin.
    """
    if sub is None:
        return (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    if sub.vertices:
        pts = [(v.x, v.y) for v in sub.vertices]
    else:
        pts = [(Fraction(0), Fraction(0))]
        pts += [tuple(foot_of_perpendicular(p)) for p in sub.lines]
    return _padded([x for x, _ in pts], [y for _, y in pts])


def clip_line(p: CoeffPoint, box: ViewBox):
    """Segment of ``A x + B y = 1`` inside ``box``, or None when it misses."""
    x0, y0, x1, y1 = box
    a, b = p.A, p.B
    hits = set()
    if b != 0:
        for x in (x0, x1):
            y = (1 - a * x) / b
            if y0 <= y <= y1:
                hits.add((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (1 - b * y) / a
            if x0 <= x <= x1:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    d = (-b, a)
    ordered = sorted(hits, key=lambda q: q[0] * d[0] + q[1] * d[1])
    return ordered[0], ordered[-1]


def _num(v: Fraction) -> str:
    return f"{float(v):.6f}"


class _Frame:
    def __init__(self, box: ViewBox, width: int):
        self.box = box
        self.scale = Fraction(width) / (box[2] - box[0])
        self.width = width
        self.height = (box[3] - box[1]) * self.scale

    def xy(self, x: Fraction, y: Fraction) -> str:
        return f"{_num((x - self.box[0]) * self.scale)},{_num((self.box[3] - y) * self.scale)}"


def render(sub: Optional[Subdivision], cfg: RenderConfig = RenderConfig()) -> str:
    """Standalone SVG text; ``sub`` None means an empty pattern and gives an empty frame."""
    box = cfg.viewbox or auto_viewbox(sub)
    frame = _Frame(box, cfg.width)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{cfg.width}" '
        f'height="{_num(frame.height)}" viewBox="0 0 {cfg.width} {_num(frame.height)}">',
        f'<rect x="0" y="0" width="{cfg.width}" height="{_num(frame.height)}" '
        'fill="white" stroke="black" stroke-width="1"/>',
    ]
    if sub is not None:
        out.append('<g id="faces" stroke="none">')
        for face in sub.bounded_faces():
            fill = cfg.fill_for(face.side_count)
            if fill is None:
                continue
            pts = " ".join(frame.xy(v.x, v.y) for v in face.vertices)
            out.append(f'<polygon data-sides="{face.side_count}" fill="{fill}" points="{pts}"/>')
        out.append("</g>")
        out.append('<g id="lines" stroke="black" stroke-width="1" fill="none">')
        labels = []
        for p in sub.lines:
            seg = clip_line(p, box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = seg
            out.append(f'<path data-line="{p.A},{p.B}" d="M {frame.xy(ax, ay)} L {frame.xy(bx, by)}"/>')
            if cfg.labels:
                x, y = frame.xy(bx, by).split(",")
                labels.append(f'<text x="{x}" y="{y}">{p.A},{p.B}</text>')
        out.append("</g>")
        if labels:
            out.append('<g id="labels" font-family="monospace" font-size="10" fill="#333">')
            out.extend(labels)
            out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_points(points: Iterable[CoeffPoint], cfg: RenderConfig = RenderConfig()) -> str:
    pts = list(dict.fromkeys(points))
    return render(build(pts) if pts else None, cfg)


__all__ = [
    "RenderConfig", "render", "render_points", "auto_viewbox", "clip_line", "parse_viewbox",
    "parse_shade", "check_color", "DEFAULT_SHADES", "HIGHLIGHT",
]

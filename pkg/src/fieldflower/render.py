"""Deterministic SVG and TikZ emission for flower shapes, grids, and panels.

Every drawing routine here is a pure function of (shape, spec): element order
is fixed, floats are printed with a fixed 6-decimal convention, and no locale,
clock, or scheduling input leaks into the output.  Rendering the same input
twice must produce identical bytes; golden-file tests depend on it.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .flowergeom import FlowerShape, features, petal_shades
from .gfield import Word, _require_prime, format_word

_AXIS_COLOR = "B0B0B0"
_RING_COLOR = "B0B0B0"
_ARROW_COLOR = "808080"
_OUTLINE_COLOR = "404040"
_LABEL_COLOR = "333333"


@dataclass(frozen=True)
class RenderSpec:
    """Visual constants for one rendering; all fields overridable from the CLI.

    canvas is the side length of one cell in abstract units, radius_scale the
    units per field value.  Colors are 6-hex-digit RGB, with or without a
    leading '#'.
    """

    canvas: float = 240.0
    radius_scale: float = 40.0
    stroke_width: float = 1.5
    light_color: str = "9ECAE1"
    dark_color: str = "2171B5"
    marker_radius: float = 5.0
    grid: bool = True
    label: bool = False

    def __post_init__(self) -> None:
        for name in ("canvas", "radius_scale", "stroke_width", "marker_radius"):
            v = getattr(self, name)
            if not v > 0:
                raise ValueError(f"{name} must be strictly positive, got {v}")
        object.__setattr__(self, "light_color", _clean_color(self.light_color))
        object.__setattr__(self, "dark_color", _clean_color(self.dark_color))


def _clean_color(color: str) -> str:
    c = color.removeprefix("#")
    if len(c) != 6:
        raise ValueError(f"color must be 6 hex digits, got {color!r}")
    try:
        int(c, 16)
    except ValueError:
        raise ValueError(f"color must be 6 hex digits, got {color!r}") from None
    return c.upper()


def _rgb(color: str) -> tuple[int, int, int]:
    return int(color[0:2], 16), int(color[2:4], 16), int(color[4:6], 16)


def _fmt(v: float) -> str:
    out = f"{v:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _shade_hex(shade: str, spec: RenderSpec) -> str:
    return spec.light_color if shade == "light" else spec.dark_color


def _arrow_geometry(n: int, p: int, spec: RenderSpec):
    """Arc-plus-head geometry for the symbol-ordering arrow between axes 0 and 1.

    Returned in math coordinates (y up, origin at center): arc start/end
    points, arc radius, start/end angles, and the two arrowhead wing points.
    """
    r = (p - 1) * spec.radius_scale + 0.35 * spec.radius_scale
    a0 = 0.15 * math.tau / n
    a1 = 0.85 * math.tau / n
    sx, sy = r * math.cos(a0), r * math.sin(a0)
    ex, ey = r * math.cos(a1), r * math.sin(a1)
    # Head wings point back against the counterclockwise tangent at the tip.
    tx, ty = math.sin(a1), -math.cos(a1)
    h = 0.18 * spec.radius_scale + 0.08 * r
    wings = []
    for phi in (0.45, -0.45):
        wx = tx * math.cos(phi) - ty * math.sin(phi)
        wy = tx * math.sin(phi) + ty * math.cos(phi)
        wings.append((ex + h * wx, ey + h * wy))
    return (sx, sy), (ex, ey), r, a0, a1, wings


def _grid_svg(n: int, p: int, spec: RenderSpec, cx: float, cy: float) -> list[str]:
    out = []
    r_outer = (p - 1) * spec.radius_scale
    w = _fmt(spec.stroke_width * 0.5)
    for k in range(n):
        angle = math.tau * k / n
        x2 = cx + r_outer * math.cos(angle)
        y2 = cy - r_outer * math.sin(angle)
        out.append(
            f'<line class="axis" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#{_AXIS_COLOR}" stroke-width="{w}"/>'
        )
    for i in range(1, p):
        out.append(
            f'<circle class="ring" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(i * spec.radius_scale)}" fill="none" '
            f'stroke="#{_RING_COLOR}" stroke-width="{w}" stroke-dasharray="3 3"/>'
        )
    (sx, sy), (ex, ey), r, _, _, wings = _arrow_geometry(n, p, spec)
    d = (
        f"M {_fmt(cx + sx)} {_fmt(cy - sy)} "
        f"A {_fmt(r)} {_fmt(r)} 0 0 0 {_fmt(cx + ex)} {_fmt(cy - ey)}"
    )
    for wx, wy in wings:
        d += f" M {_fmt(cx + wx)} {_fmt(cy - wy)} L {_fmt(cx + ex)} {_fmt(cy - ey)}"
    out.append(
        f'<path class="arrow" d="{d}" fill="none" '
        f'stroke="#{_ARROW_COLOR}" stroke-width="{w}"/>'
    )
    return out


def _shape_svg(shape: FlowerShape, spec: RenderSpec, cx: float, cy: float) -> list[str]:
    """The flower itself: petals, outline, thorns, markers, optional label."""
    s = spec.radius_scale
    px = [cx + s * pt.x for pt in shape.points]
    py = [cy - s * pt.y for pt in shape.points]
    out = []
    if spec.grid:
        out.extend(_grid_svg(len(shape.word), shape.word.modulus, spec, cx, cy))
    for (a, b), shade in zip(shape.petals, petal_shades(shape)):
        out.append(
            f'<polygon class="petal" points="{_fmt(cx)},{_fmt(cy)} '
            f'{_fmt(px[a])},{_fmt(py[a])} {_fmt(px[b])},{_fmt(py[b])}" '
            f'fill="#{_shade_hex(shade, spec)}" stroke="none"/>'
        )
    # The all-zero word has every point on the origin; its outline would be a
    # degenerate dot, so it is omitted entirely.
    if shape.word.weight() > 0:
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(px, py))
        out.append(
            f'<polygon class="outline" points="{pts}" fill="none" '
            f'stroke="#{_OUTLINE_COLOR}" stroke-width="{_fmt(spec.stroke_width)}"/>'
        )
    for k in shape.thorns:
        out.append(
            f'<line class="thorn" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
            f'x2="{_fmt(px[k])}" y2="{_fmt(py[k])}" '
            f'stroke="#{spec.dark_color}" stroke-width="{_fmt(spec.stroke_width)}"/>'
        )
    for pt in shape.points:
        if pt.radius == 0:
            continue
        out.append(
            f'<circle class="marker" cx="{_fmt(px[pt.index])}" '
            f'cy="{_fmt(py[pt.index])}" r="{_fmt(spec.marker_radius)}" '
            f'fill="#{spec.dark_color}"/>'
        )
    if spec.label:
        out.append(
            f'<text class="label" x="{_fmt(cx)}" '
            f'y="{_fmt(cy + spec.canvas / 2 - 0.02 * spec.canvas)}" '
            f'text-anchor="middle" font-family="monospace" '
            f'font-size="{_fmt(0.05 * spec.canvas)}" '
            f'fill="#{_LABEL_COLOR}">{format_word(shape.word)}</text>'
        )
    return out


def _svg_document(width: float, height: float, body: list[str]) -> bytes:
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    ]
    lines.extend(body)
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("ascii")


def to_svg(shape: FlowerShape, spec: RenderSpec | None = None) -> bytes:
    """Standalone SVG document for one flower shape."""
    spec = spec or RenderSpec()
    c = spec.canvas / 2
    return _svg_document(spec.canvas, spec.canvas, _shape_svg(shape, spec, c, c))


def render_grid(n: int, p: int, spec: RenderSpec | None = None) -> bytes:
    """Just the polar grid: n radial axes, p-1 rings, and the ordering arrow."""
    if n < 2:
        raise ValueError(f"grid needs at least 2 axes, got n={n}")
    _require_prime(p)
    spec = spec or RenderSpec()
    c = spec.canvas / 2
    return _svg_document(spec.canvas, spec.canvas, _grid_svg(n, p, spec, c, c))


def _cell_svg(word: Word, spec: RenderSpec, tx: float, ty: float) -> str:
    c = spec.canvas / 2
    body = _shape_svg(features(word), spec, c, c)
    open_tag = f'<g class="cell" transform="translate({_fmt(tx)} {_fmt(ty)})">'
    return "\n".join([open_tag, *body, "</g>"])


def panel(words: list[Word], columns: int, spec: RenderSpec | None = None,
          workers: int = 1) -> bytes:
    """Row-major grid of flowers, one cell per word, in list order.

    Cells may be rendered in parallel; assembly is an ordered concatenation,
    so the bytes do not depend on worker count or scheduling.
    """
    spec = spec or RenderSpec()
    if not words:
        raise ValueError("panel needs at least one word")
    if columns < 1:
        raise ValueError(f"columns must be at least 1, got {columns}")
    n, p = len(words[0]), words[0].modulus
    for w in words:
        if len(w) != n or w.modulus != p:
            raise ValueError(
                f"panel words must share length and modulus; "
                f"got ({len(w)}, GF({w.modulus})) next to ({n}, GF({p}))"
            )
    rows = -(-len(words) // columns)
    offsets = [
        ((i % columns) * spec.canvas, (i // columns) * spec.canvas)
        for i in range(len(words))
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(
                lambda iw: _cell_svg(iw[1], spec, *offsets[iw[0]]),
                enumerate(words),
            ))
    else:
        cells = [_cell_svg(w, spec, *offsets[i]) for i, w in enumerate(words)]
    return _svg_document(columns * spec.canvas, rows * spec.canvas, cells)


def to_tikz(shape: FlowerShape, spec: RenderSpec | None = None) -> str:
    """TikZ picture drawing the same primitives in the same order as to_svg.

    Coordinates are in pt with the flower centered on the origin; no y flip.
    Each primitive carries a trailing comment naming it, so element counts
    stay checkable on the text.
    """
    spec = spec or RenderSpec()
    n, p = len(shape.word), shape.word.modulus
    s = spec.radius_scale
    lr, lg, lb = _rgb(spec.light_color)
    dr, dg, db = _rgb(spec.dark_color)
    light = f"{{rgb,255:red,{lr};green,{lg};blue,{lb}}}"
    dark = f"{{rgb,255:red,{dr};green,{dg};blue,{db}}}"
    lines = ["\\begin{tikzpicture}[x=1pt,y=1pt]"]
    if spec.grid:
        r_outer = (p - 1) * s
        for k in range(n):
            angle = math.tau * k / n
            lines.append(
                f"\\draw[gray!60, line width={_fmt(spec.stroke_width * 0.5)}pt] "
                f"(0,0) -- ({_fmt(r_outer * math.cos(angle))},"
                f"{_fmt(r_outer * math.sin(angle))}); % axis {k}"
            )
        for i in range(1, p):
            lines.append(
                f"\\draw[gray!60, dashed] (0,0) circle[radius={_fmt(i * s)}]; "
                f"% ring {i}"
            )
        (sx, sy), _, r, a0, a1, _ = _arrow_geometry(n, p, spec)
        lines.append(
            f"\\draw[->, gray] ({_fmt(sx)},{_fmt(sy)}) "
            f"arc[start angle={_fmt(math.degrees(a0))}, "
            f"end angle={_fmt(math.degrees(a1))}, radius={_fmt(r)}]; % arrow"
        )
    xs = [s * pt.x for pt in shape.points]
    ys = [s * pt.y for pt in shape.points]
    for i, ((a, b), shade) in enumerate(zip(shape.petals, petal_shades(shape))):
        color = light if shade == "light" else dark
        lines.append(
            f"\\draw[fill={color}, draw=none] (0,0) -- "
            f"({_fmt(xs[a])},{_fmt(ys[a])}) -- ({_fmt(xs[b])},{_fmt(ys[b])}) "
            f"-- cycle; % petal {i}"
        )
    if shape.word.weight() > 0:
        path = " -- ".join(f"({_fmt(x)},{_fmt(y)})" for x, y in zip(xs, ys))
        lines.append(
            f"\\draw[line width={_fmt(spec.stroke_width)}pt] {path} "
            f"-- cycle; % outline"
        )
    for i, k in enumerate(shape.thorns):
        lines.append(
            f"\\draw[draw={dark}, line width={_fmt(spec.stroke_width)}pt] "
            f"(0,0) -- ({_fmt(xs[k])},{_fmt(ys[k])}); % thorn {i}"
        )
    for pt in shape.points:
        if pt.radius == 0:
            continue
        lines.append(
            f"\\fill[fill={dark}] ({_fmt(xs[pt.index])},{_fmt(ys[pt.index])}) "
            f"circle[radius={_fmt(spec.marker_radius)}]; % marker {pt.index}"
        )
    if spec.label:
        ly = (p - 1) * s + 0.6 * s
        lines.append(
            f"\\node[anchor=north, font=\\ttfamily] at (0,{_fmt(-ly)}) "
            f"{{{format_word(shape.word)}}}; % label"
        )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"

"""Static figures: the 2D tiling, 3D cross-sections, torus cell maps.

All clipping, area bookkeeping and adjacency checks run in exact
rational arithmetic; rasterization to fixed 6-decimal SVG coordinates is
the only lossy step, so the emitted geometry doubles as a test fixture.
Output is deterministic: tiles are emitted in sorted anchor order with a
fixed palette, making documents byte-stable across runs.

Rendering never validates its input; a corrupted torus tiling still
renders (that is the point of looking at the picture).
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParamsError
from .ratlin import Vec, vec
from .tiling import TileKind, TileRef, TilingParams, tile_box, tiles_in_box
from .torus import TorusTiling

Rect = tuple[Fraction, Fraction, Fraction, Fraction]  # x0, y0, x1, y1


@dataclass(frozen=True)
class Viewport:
    """Window and style for a figure; lo/hi are exact, scale is px per unit."""

    lo: Vec
    hi: Vec
    scale: int = 40
    big_fill: str = "#b8cfe5"
    small_fill: str = "#e8a33d"
    stroke: str = "#2b2b2b"

    def __post_init__(self):
        object.__setattr__(self, "lo", vec(self.lo))
        object.__setattr__(self, "hi", vec(self.hi))
        if len(self.lo) != len(self.hi):
            raise InvalidParamsError("viewport corners differ in dimension")
        if any(a >= b for a, b in zip(self.lo, self.hi)):
            raise InvalidParamsError("viewport must satisfy lo < hi componentwise")
        if self.scale <= 0:
            raise InvalidParamsError("viewport scale must be positive")


def _fmt(x) -> str:
    return f"{float(x):.6f}"


def rect_area(r: Rect) -> Fraction:
    return (r[2] - r[0]) * (r[3] - r[1])


def cover_area(rects) -> Fraction:
    return sum((rect_area(r) for r in rects), Fraction(0))


def overlapping_pairs(rects) -> list[tuple[int, int]]:
    """Index pairs of rectangles intersecting in positive area."""
    out = []
    for i in range(len(rects)):
        for j in range(i + 1, len(rects)):
            a, b = rects[i], rects[j]
            if max(a[0], b[0]) < min(a[2], b[2]) and max(a[1], b[1]) < min(a[3], b[3]):
                out.append((i, j))
    return out


def clipped_tiles_2d(
    params: TilingParams, vp: Viewport
) -> list[tuple[TileRef, Rect]]:
    """Tiles meeting the viewport, with their boxes clipped to it (exact)."""
    if params.n != 2:
        raise InvalidParamsError("2D rendering requires n = 2")
    if len(vp.lo) != 2:
        raise InvalidParamsError("viewport must be 2-dimensional")
    out = []
    for ref in tiles_in_box(vp.lo, vp.hi, params):
        lo, hi = tile_box(ref, params)
        rect = (
            max(lo[0], vp.lo[0]),
            max(lo[1], vp.lo[1]),
            min(hi[0], vp.hi[0]),
            min(hi[1], vp.hi[1]),
        )
        out.append((ref, rect))
    return out


def boxes_share_full_facet(lo_a, lo_b, side) -> bool:
    """Two axis-aligned cubes of equal side share a full facet exactly
    when their anchor corners are translates by side * e_i along one axis."""
    diff = [b - a for a, b in zip(lo_a, lo_b)]
    nonzero = [d for d in diff if d != 0]
    return len(nonzero) == 1 and abs(nonzero[0]) == side


def same_size_adjacent_pairs(
    refs, params: TilingParams
) -> list[tuple[TileRef, TileRef]]:
    """Pairs of same-kind tiles sharing a full facet (should always be empty)."""
    sides = {TileKind.BIG: params.q, TileKind.SMALL: params.p}
    boxes = [(ref, tile_box(ref, params)[0]) for ref in refs]
    out = []
    for i in range(len(boxes)):
        ref_a, lo_a = boxes[i]
        for j in range(i + 1, len(boxes)):
            ref_b, lo_b = boxes[j]
            if ref_a.kind is not ref_b.kind:
                continue
            if boxes_share_full_facet(lo_a, lo_b, sides[ref_a.kind]):
                out.append((ref_a, ref_b))
    return out


def _svg_open(width: Fraction, height: Fraction) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]


def _rect_svg(r: Rect, vp: Viewport, fill: str, stroke: str) -> str:
    # SVG y axis points down; flip against the viewport top edge
    x = (r[0] - vp.lo[0]) * vp.scale
    y = (vp.hi[1] - r[3]) * vp.scale
    w = (r[2] - r[0]) * vp.scale
    h = (r[3] - r[1]) * vp.scale
    return (
        f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" '
        f'fill="{fill}" stroke="{stroke}" stroke-width="1"/>'
    )


def render_tiling_2d(params: TilingParams, vp: Viewport) -> str:
    """The planar two-square tiling clipped to the viewport, as SVG."""
    tiles = clipped_tiles_2d(params, vp)
    width = (vp.hi[0] - vp.lo[0]) * vp.scale
    height = (vp.hi[1] - vp.lo[1]) * vp.scale
    lines = _svg_open(width, height)
    for ref, rect in tiles:
        fill = vp.big_fill if ref.kind is TileKind.BIG else vp.small_fill
        lines.append(_rect_svg(rect, vp, fill, vp.stroke))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def slice_rects_3d(
    params: TilingParams, z: Fraction, vp: Viewport
) -> list[tuple[TileRef, Rect]]:
    """Cross-section of the 3D tiling with the plane x3 = z, clipped.

    A tile contributes iff z lies in its half-open x3-extent [lo3, hi3),
    matching the half-open ownership convention of the domain, so every
    slice is an exact planar cover.
    """
    if params.n != 3:
        raise InvalidParamsError("slicing requires n = 3")
    if len(vp.lo) != 3:
        raise InvalidParamsError("viewport must be 3-dimensional")
    z = Fraction(z)
    span = params.q + params.p
    slab_lo = (vp.lo[0], vp.lo[1], z - span)
    slab_hi = (vp.hi[0], vp.hi[1], z + span)
    out = []
    for ref in tiles_in_box(slab_lo, slab_hi, params):
        lo, hi = tile_box(ref, params)
        if not lo[2] <= z < hi[2]:
            continue
        rect = (
            max(lo[0], vp.lo[0]),
            max(lo[1], vp.lo[1]),
            min(hi[0], vp.hi[0]),
            min(hi[1], vp.hi[1]),
        )
        if rect[0] < rect[2] and rect[1] < rect[3]:
            out.append((ref, rect))
    return out


def render_slices_3d(params: TilingParams, z_values, vp: Viewport) -> list[str]:
    """One SVG document per requested cross-section height."""
    docs = []
    width = (vp.hi[0] - vp.lo[0]) * vp.scale
    height = (vp.hi[1] - vp.lo[1]) * vp.scale
    for z in z_values:
        lines = _svg_open(width, height)
        for ref, rect in slice_rects_3d(params, z, vp):
            fill = vp.big_fill if ref.kind is TileKind.BIG else vp.small_fill
            lines.append(_rect_svg(rect, vp, fill, vp.stroke))
        lines.append("</svg>")
        docs.append("\n".join(lines) + "\n")
    return docs


def tile_palette(count: int) -> list[str]:
    """Deterministic list of `count` distinct hex colors."""
    colors: list[str] = []
    used = set()
    for i in range(count):
        hue = (i * 0.6180339887498949) % 1.0
        light = 0.52 if i % 2 == 0 else 0.72
        while True:
            r, g, b = colorsys.hls_to_rgb(hue, light, 0.8)
            hexc = "#%02x%02x%02x" % (round(r * 255), round(g * 255), round(b * 255))
            if hexc not in used:
                break
            light = 0.25 + (light - 0.25 + 0.013) % 0.7
        used.add(hexc)
        colors.append(hexc)
    return colors


def render_torus_map(t: TorusTiling, cell_px: int = 24) -> str:
    """The m x m torus cell grid colored by owning tile, boundaries stroked."""
    params = t.params
    if params.n != 2:
        raise InvalidParamsError("torus map rendering requires n = 2")
    m = params.m
    assign = t.assignment
    palette = tile_palette(2 * len(t.residues))
    size = m * cell_px
    lines = _svg_open(Fraction(size), Fraction(size))
    for y in range(m):
        for x in range(m):
            owner = assign[x + m * y]
            px = x * cell_px
            py = (m - 1 - y) * cell_px
            lines.append(
                f'<rect x="{px}" y="{py}" width="{cell_px}" height="{cell_px}" '
                f'fill="{palette[owner % len(palette)]}"/>'
            )
    # stroke every edge separating two different owners, plus the frame
    edges = []
    for y in range(m):
        for x in range(m):
            here = assign[x + m * y]
            if assign[(x + 1) % m + m * y] != here:
                ex = (x + 1) * cell_px
                ey = (m - 1 - y) * cell_px
                edges.append((ex, ey, ex, ey + cell_px))
            if assign[x + m * ((y + 1) % m)] != here:
                ex = x * cell_px
                ey = (m - 1 - y) * cell_px
                edges.append((ex, ey, ex + cell_px, ey))
    for x0, y0, x1, y1 in edges:
        lines.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#1a1a1a" stroke-width="2"/>'
        )
    lines.append(
        f'<rect x="0" y="0" width="{size}" height="{size}" '
        f'fill="none" stroke="#1a1a1a" stroke-width="2"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_mesh_3d(params: TilingParams, lo, hi) -> str:
    """Wavefront OBJ mesh (vertices + quad faces) of all tiles in a box."""
    if params.n != 3:
        raise InvalidParamsError("mesh export requires n = 3")
    refs = tiles_in_box(lo, hi, params)
    lines = ["# hyptile mesh export", f"# tiles: {len(refs)}"]
    faces = []
    vi = 0
    for ref in refs:
        blo, bhi = tile_box(ref, params)
        corners = [
            (blo[0], blo[1], blo[2]),
            (bhi[0], blo[1], blo[2]),
            (bhi[0], bhi[1], blo[2]),
            (blo[0], bhi[1], blo[2]),
            (blo[0], blo[1], bhi[2]),
            (bhi[0], blo[1], bhi[2]),
            (bhi[0], bhi[1], bhi[2]),
            (blo[0], bhi[1], bhi[2]),
        ]
        for c in corners:
            lines.append(f"v {_fmt(c[0])} {_fmt(c[1])} {_fmt(c[2])}")
        quads = [
            (1, 2, 3, 4),
            (5, 8, 7, 6),
            (1, 5, 6, 2),
            (2, 6, 7, 3),
            (3, 7, 8, 4),
            (4, 8, 5, 1),
        ]
        for a, b, c, d in quads:
            faces.append(f"f {vi + a} {vi + b} {vi + c} {vi + d}")
        vi += 8
    lines.extend(faces)
    return "\n".join(lines) + "\n"

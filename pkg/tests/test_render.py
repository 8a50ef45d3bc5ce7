"""Figure generation: exact area bookkeeping, adjacency audit, determinism."""

import random
from array import array
from fractions import Fraction

import pytest

from hyptile import render, tiling, torus
from hyptile.errors import InvalidParamsError
from hyptile.render import Viewport
from hyptile.tiling import TileKind, TilingParams


def params(n=2, p=1, q=2):
    return TilingParams(n=n, p=Fraction(p), q=Fraction(q))


def test_viewport_validation():
    with pytest.raises(InvalidParamsError):
        Viewport(lo=(0, 0), hi=(0, 5))
    with pytest.raises(InvalidParamsError):
        Viewport(lo=(0, 0), hi=(5, 5), scale=0)
    with pytest.raises(InvalidParamsError):
        Viewport(lo=(0, 0, 0), hi=(5, 5))


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3)])
def test_area_bookkeeping_exact(p, q):
    pr = params(p=p, q=q)
    vp = Viewport(lo=(0, 0), hi=(10, 10))
    tiles = render.clipped_tiles_2d(pr, vp)
    rects = [r for _, r in tiles]
    assert render.cover_area(rects) == 100
    assert render.overlapping_pairs(rects) == []


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3)])
def test_same_size_adjacency_audit(p, q):
    pr = params(p=p, q=q)
    vp = Viewport(lo=(0, 0), hi=(10, 10))
    refs = [ref for ref, _ in render.clipped_tiles_2d(pr, vp)]
    assert render.same_size_adjacent_pairs(refs, pr) == []


def test_facet_predicate_detects_planted_violation():
    # the detector itself must fire on two equal cubes one side apart
    assert render.boxes_share_full_facet((0, 0), (2, 0), 2)
    assert render.boxes_share_full_facet((0, 0, 0), (0, -3, 0), 3)
    # partial offsets or diagonal contact are not full facets
    assert not render.boxes_share_full_facet((0, 0), (2, 1), 2)
    assert not render.boxes_share_full_facet((0, 0), (1, 0), 2)
    assert not render.boxes_share_full_facet((0, 0), (2, 2), 2)
    # different kinds never pair
    pr = params()
    pairs = render.same_size_adjacent_pairs(
        [tiling.TileRef(TileKind.BIG, (0, 0)), tiling.TileRef(TileKind.SMALL, (0, 0))],
        pr,
    )
    assert pairs == []


def test_small_squares_surrounded_by_big():
    # combinatorial structure: each fully visible small square has big
    # squares across all four edges
    for p, q in ((1, 2), (2, 3)):
        pr = params(p=p, q=q)
        vp = Viewport(lo=(0, 0), hi=(12, 12))
        tiles = render.clipped_tiles_2d(pr, vp)
        margin = Fraction(1, 1000)
        for ref, _ in tiles:
            if ref.kind is not TileKind.SMALL:
                continue
            lo, hi = tiling.tile_box(ref, pr)
            if not all(vp.lo[i] < lo[i] and hi[i] < vp.hi[i] for i in range(2)):
                continue
            cx, cy = (lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2
            probes = [
                (hi[0] + margin, cy),
                (lo[0] - margin, cy),
                (cx, hi[1] + margin),
                (cx, lo[1] - margin),
            ]
            for point in probes:
                assert tiling.locate(point, pr).kind is TileKind.BIG


def test_svg_byte_stable_two_runs():
    pr = params()
    vp = Viewport(lo=(0, 0), hi=(10, 10))
    assert render.render_tiling_2d(pr, vp) == render.render_tiling_2d(pr, vp)


def test_svg_structure():
    pr = params()
    vp = Viewport(lo=(0, 0), hi=(4, 4), scale=10)
    doc = render.render_tiling_2d(pr, vp)
    assert doc.startswith("<?xml")
    assert doc.rstrip().endswith("</svg>")
    assert doc.count("<rect") == len(render.clipped_tiles_2d(pr, vp))


def test_render_requires_two_dims():
    with pytest.raises(InvalidParamsError):
        render.render_tiling_2d(params(n=3), Viewport(lo=(0, 0, 0), hi=(5, 5, 5)))


def test_slices_cover_exactly():
    pr = params(n=3)
    vp = Viewport(lo=(0, 0, 0), hi=(8, 8, 8))
    for z in (Fraction(1, 2), Fraction(2), Fraction(17, 5)):
        rects = [r for _, r in render.slice_rects_3d(pr, z, vp)]
        assert render.cover_area(rects) == 64
        assert render.overlapping_pairs(rects) == []


def test_consecutive_slices_differ_by_tile_extent():
    pr = params(n=3)
    vp = Viewport(lo=(0, 0, 0), hi=(8, 8, 8))
    z1, z2 = Fraction(1, 2), Fraction(3, 2)
    at_z1 = {ref for ref, _ in render.slice_rects_3d(pr, z1, vp)}
    at_z2 = {ref for ref, _ in render.slice_rects_3d(pr, z2, vp)}
    for ref in at_z1 - at_z2:
        lo, hi = tiling.tile_box(ref, pr)
        # dropped tiles must end inside (z1, z2]
        assert z1 < hi[2] <= z2
    for ref in at_z2 - at_z1:
        lo, hi = tiling.tile_box(ref, pr)
        # appearing tiles must start inside (z1, z2]
        assert z1 < lo[2] <= z2


def test_render_slices_documents():
    pr = params(n=3)
    vp = Viewport(lo=(0, 0, 0), hi=(6, 6, 6), scale=20)
    docs = render.render_slices_3d(pr, (Fraction(1, 2), Fraction(3, 2)), vp)
    assert len(docs) == 2
    assert all(d.rstrip().endswith("</svg>") for d in docs)
    assert docs == render.render_slices_3d(pr, (Fraction(1, 2), Fraction(3, 2)), vp)


def test_torus_map_colors_and_stability():
    tp = torus.TorusParams(n=2, p=1, q=2)
    t = torus.build_torus_tiling(tp)
    doc = render.render_torus_map(t)
    assert doc == render.render_torus_map(t)
    # distinct fill color per tile: 2 * residue count
    fills = set()
    for line in doc.splitlines():
        if '<rect' in line and 'fill="#' in line and 'fill="none"' not in line:
            fills.add(line.split('fill="')[1].split('"')[0])
    assert len(fills) == 2 * len(t.residues)


def test_torus_map_renders_corrupted_input():
    tp = torus.TorusParams(n=2, p=1, q=2)
    t = torus.build_torus_tiling(tp)
    corrupted = torus.TorusTiling(
        params=tp,
        residues=t.residues,
        assignment=array("i", [t.assignment[0]] * len(t.assignment)),
    )
    doc = render.render_torus_map(corrupted)
    assert doc.rstrip().endswith("</svg>")


def test_palette_distinct():
    colors = render.tile_palette(300)
    assert len(set(colors)) == 300


def test_mesh_export_counts():
    pr = params(n=3)
    refs = tiling.tiles_in_box((0, 0, 0), (4, 4, 4), pr)
    mesh = render.export_mesh_3d(pr, (0, 0, 0), (4, 4, 4))
    lines = mesh.splitlines()
    vertices = [l for l in lines if l.startswith("v ")]
    faces = [l for l in lines if l.startswith("f ")]
    assert len(vertices) == 8 * len(refs)
    assert len(faces) == 6 * len(refs)
    # face indices stay within the vertex table
    rng = random.Random(1)
    for line in rng.sample(faces, 10):
        idx = [int(tok) for tok in line.split()[1:]]
        assert all(1 <= i <= len(vertices) for i in idx)


def test_mesh_requires_three_dims():
    with pytest.raises(InvalidParamsError):
        render.export_mesh_3d(params(n=2), (0, 0), (4, 4))

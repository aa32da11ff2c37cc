import numpy as np
import pytest

from linsetcodes.algebra import build_field
from linsetcodes.errors import ZeroVector
from linsetcodes import geometry as geo


@pytest.fixture(scope="module")
def ctx():
    return build_field(2, 1, 3)


def test_canonicalize_scaling(ctx):
    assert geo.canonicalize(ctx, (0, 5, 0)) == (0, 1, 0)
    lam, f = 3, 6
    scaled = (lam, ctx.mul(lam, f), lam)
    assert geo.canonicalize(ctx, scaled) == (1, f, 1)
    t = geo.canonicalize(ctx, (4, 2, 7))
    assert geo.canonicalize(ctx, t) == t  # idempotent
    with pytest.raises(ZeroVector):
        geo.canonicalize(ctx, (0, 0, 0))


def test_line_count_and_sizes(ctx):
    lines = list(geo.all_lines(ctx))
    assert len(lines) == 73  # 64 + 8 + 1
    for l in lines:
        pts = geo.points_on_line(ctx, l)
        assert len(set(pts)) == ctx.order + 1
        for p in pts:
            assert geo.incident(ctx, p, l)


def test_line_at_infinity_contents(ctx):
    pts = geo.points_on_line(ctx, geo.LINE_AT_INFINITY)
    assert all(p.coords[2] == 0 for p in pts)
    assert len(pts) == ctx.order + 1


def test_index_round_trip(ctx):
    for idx in range(geo.plane_size(ctx)):
        assert geo.point_index(ctx, geo.point_from_index(ctx, idx)) == idx
        assert geo.line_index(ctx, geo.line_from_index(ctx, idx)) == idx


def test_indices_are_lexicographic(ctx):
    triples = [geo.point_from_index(ctx, i).coords
               for i in range(geo.plane_size(ctx))]
    assert triples == sorted(triples)


def test_each_point_on_qn_plus_1_lines(ctx):
    for idx in range(0, geo.plane_size(ctx), 7):
        p = geo.point_from_index(ctx, idx)
        ls = geo.lines_through(ctx, p)
        assert len(set(ls)) == ctx.order + 1
        for l in ls:
            assert geo.incident(ctx, p, l)


def test_incidence_double_count(ctx):
    rng = np.random.default_rng(2)
    ids = rng.choice(geo.plane_size(ctx), size=20, replace=False)
    pts = {geo.point_from_index(ctx, int(i)) for i in ids}
    total = sum(sum(p in pts for p in geo.points_on_line(ctx, l))
                for l in geo.all_lines(ctx))
    assert total == len(pts) * (ctx.order + 1)


def test_unique_line_through_two_points(ctx):
    rng = np.random.default_rng(4)
    for _ in range(40):
        i, j = rng.choice(geo.plane_size(ctx), size=2, replace=False)
        p1 = geo.point_from_index(ctx, int(i))
        p2 = geo.point_from_index(ctx, int(j))
        l = geo.line_through_points(ctx, p1, p2)
        assert geo.incident(ctx, p1, l) and geo.incident(ctx, p2, l)
        count = sum(geo.incident(ctx, p1, m) and geo.incident(ctx, p2, m)
                    for m in geo.all_lines(ctx))
        assert count == 1


def test_point_serialization(ctx):
    p = geo.point(ctx, (2, 3, 1))
    assert geo.ProjPoint.parse(p.serialize()) == p
    assert ":" in p.serialize()


def test_odd_characteristic_plane():
    ctx9 = build_field(3, 1, 2)
    assert geo.plane_size(ctx9) == 81 + 9 + 1
    for l in geo.all_lines(ctx9):
        assert len(set(geo.points_on_line(ctx9, l))) == 10

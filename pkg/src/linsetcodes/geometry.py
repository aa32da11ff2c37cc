"""Canonical points and lines of PG(1,q^n) and PG(2,q^n) with full enumeration.

Canonical form: the first nonzero coordinate equals 1.  Points and lines
share one integer index scheme, the lexicographic order on canonical
triples: (0,0,1) -> 0, (0,1,z) -> 1+z, (1,y,z) -> 1+Q+y*Q+z.  Lines are
stored by their dual coordinates, so the line at infinity (0,0,1) has
index 0 and a point P lies on line v iff v1*x1 + v2*x2 + v3*x3 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroVector


@dataclass(frozen=True)
class ProjPoint:
    """Point of PG(1,.) or PG(2,.) stored by its canonical tuple."""

    coords: tuple

    def serialize(self):
        return ":".join(str(c) for c in self.coords)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(t) for t in text.split(":")))


@dataclass(frozen=True)
class ProjLine:
    """Line of PG(2,.) stored by its canonical dual coordinates."""

    dual: tuple

    def serialize(self):
        return ":".join(str(c) for c in self.dual)


def canonicalize(ctx, coords):
    """Scale so the first nonzero coordinate is 1; idempotent."""
    coords = tuple(int(c) for c in coords)
    for i, c in enumerate(coords):
        if c:
            s = ctx.inv(c)
            return tuple(0 if j < i else ctx.mul(s, x)
                         for j, x in enumerate(coords))
    raise ZeroVector("all coordinates are zero")


def point(ctx, coords):
    return ProjPoint(canonicalize(ctx, coords))


def line(ctx, dual):
    return ProjLine(canonicalize(ctx, dual))


LINE_AT_INFINITY = ProjLine((0, 0, 1))


def plane_size(ctx):
    """Number of points (= number of lines) of PG(2,q^n)."""
    Q = ctx.order
    return Q * Q + Q + 1


def triple_index(ctx, canonical):
    a, b, c = canonical
    Q = ctx.order
    if a == 0 and b == 0:
        return 0
    if a == 0:
        return 1 + c
    return 1 + Q + b * Q + c


def triple_from_index(ctx, idx):
    Q = ctx.order
    if idx == 0:
        return (0, 0, 1)
    if idx <= Q:
        return (0, 1, idx - 1)
    rem = idx - 1 - Q
    return (1, rem // Q, rem % Q)


def point_index(ctx, p):
    return triple_index(ctx, p.coords)


def point_from_index(ctx, idx):
    return ProjPoint(triple_from_index(ctx, idx))


def line_index(ctx, l):
    return triple_index(ctx, l.dual)


def line_from_index(ctx, idx):
    return ProjLine(triple_from_index(ctx, idx))


def incident(ctx, p, l):
    acc = 0
    for x, v in zip(p.coords, l.dual):
        acc = ctx.add(acc, ctx.mul(x, v))
    return acc == 0


def _orthogonal_triples(ctx, triple):
    """The Q+1 canonical triples orthogonal to the given one."""
    a, b, c = triple
    Q = ctx.order
    out = []
    if a == 0 and b == 0:
        out.append((0, 1, 0))
        for y in range(Q):
            out.append((1, y, 0))
        return out
    if a == 0:
        for t in range(Q):
            out.append((1, ctx.neg(ctx.mul(c, t)), t))
        out.append((0, 0, 1) if c == 0 else (0, 1, ctx.inv(ctx.neg(c))))
        return out
    for t in range(Q):
        s = ctx.neg(ctx.add(b, ctx.mul(t, c)))
        if s == 0:
            out.append((0, 1, t))
        else:
            si = ctx.inv(s)
            out.append((1, si, ctx.mul(t, si)))
    out.append((0, 0, 1) if c == 0 else (1, 0, ctx.inv(ctx.neg(c))))
    return out


def points_on_line(ctx, l):
    """All q^n + 1 points of the line, by duality with lines_through."""
    return [ProjPoint(t) for t in _orthogonal_triples(ctx, l.dual)]


def lines_through(ctx, p):
    """All q^n + 1 lines through the point."""
    return [ProjLine(t) for t in _orthogonal_triples(ctx, p.coords)]


def all_lines(ctx):
    """All q^(2n) + q^n + 1 lines, in index (lexicographic) order."""
    for idx in range(plane_size(ctx)):
        yield line_from_index(ctx, idx)


def line_through_points(ctx, p1, p2):
    """The unique line through two distinct points (cross product duals)."""
    (a1, a2, a3), (b1, b2, b3) = p1.coords, p2.coords
    v = (ctx.sub(ctx.mul(a2, b3), ctx.mul(a3, b2)),
         ctx.sub(ctx.mul(a3, b1), ctx.mul(a1, b3)),
         ctx.sub(ctx.mul(a1, b2), ctx.mul(a2, b1)))
    if all(c == 0 for c in v):
        raise ZeroVector("points coincide")
    return ProjLine(canonicalize(ctx, v))

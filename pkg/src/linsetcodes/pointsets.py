"""Blocking sets B_f and co-blocking sets C_f in PG(2,q^n) and their
line-intersection spectra, exact and predicted.

The blocking kind is the graph of f together with the directions it
determines on the line at infinity; the co-blocking kind takes the
complementary infinite points instead.  The exact spectrum enumerates
every line of the plane; the predicted spectrum is assembled from the
weight distribution of the direction set alone, and comparing the two
is the central consistency check of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import QPolynomial
from .errors import ClaimViolation, MinWeightNotOne
from .geometry import (LINE_AT_INFINITY, ProjLine, line_from_index,
                       plane_size, point_index, points_on_line, triple_index)
from .linsets import LinearSetProfile, build_linear_set

KIND_BLOCKING = "blocking"
KIND_COBLOCKING = "coblocking"

_KIND_ALIASES = {
    "b": KIND_BLOCKING, "blocking": KIND_BLOCKING,
    "c": KIND_COBLOCKING, "coblocking": KIND_COBLOCKING,
}


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.lower()]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_KIND_ALIASES)}") from None


@dataclass(frozen=True)
class PlanePointSet:
    """B_f or C_f with its Redei line (always the line at infinity here)."""

    kind: str
    poly: QPolynomial
    point_ids: tuple       # sorted plane indices
    redei_line: ProjLine

    @property
    def ctx(self):
        return self.poly.ctx

    @property
    def size(self):
        return len(self.point_ids)

    def membership(self):
        member = np.zeros(plane_size(self.ctx), dtype=np.uint8)
        member[np.asarray(self.point_ids, dtype=np.int64)] = 1
        return member


@dataclass(frozen=True)
class LineSpectrum:
    """Intersection-size counts over all lines, with one witness per size."""

    counts: dict           # size -> number of lines
    witnesses: dict        # size -> ProjLine with that intersection size
    total_lines: int
    set_size: int

    def sizes(self):
        return tuple(sorted(self.counts))


def build_pointset(f: QPolynomial, kind: str) -> PlanePointSet:
    """Exact point set of the requested kind; cardinalities asserted."""
    kind = normalize_kind(kind)
    ctx = f.ctx
    Q = ctx.order
    values = f.values()
    xs = np.arange(Q, dtype=np.int64)

    ids = set()
    # graph points <(x, f(x), 1)>; x = 0 gives <(0, 0, 1)> with index 0
    nz = xs[1:]
    inv = ctx.inv_arr(nz)
    ys = ctx.mul_arr(values[1:], inv)       # f(x)/x
    zs = inv
    for y, z in zip(ys.tolist(), zs.tolist()):
        ids.add(1 + Q + y * Q + z)
    ids.add(0)
    if len(ids) != Q:
        raise ClaimViolation("graph must contribute exactly q^n points")

    slopes = set(np.unique(ys).tolist())
    if kind == KIND_BLOCKING:
        for m in slopes:
            ids.add(1 + Q + m * Q)          # <(1, m, 0)>
        expected = Q + len(slopes)
    else:
        for m in range(Q):
            if m not in slopes:
                ids.add(1 + Q + m * Q)
        ids.add(1)                           # <(0, 1, 0)>
        expected = Q + (Q + 1 - len(slopes))
    if len(ids) != expected:
        raise ClaimViolation("pointset cardinality mismatch")
    return PlanePointSet(kind=kind, poly=f, point_ids=tuple(sorted(ids)),
                         redei_line=LINE_AT_INFINITY)


def _spectrum_from_counts(ctx, counts, set_size) -> LineSpectrum:
    sizes, freq = np.unique(counts, return_counts=True)
    table = {int(s): int(c) for s, c in zip(sizes, freq)}
    witnesses = {int(s): line_from_index(ctx, int(np.argmax(counts == s)))
                 for s in sizes}
    spec = LineSpectrum(counts=table, witnesses=witnesses,
                        total_lines=len(counts), set_size=set_size)
    _assert_spectrum_invariants(ctx, spec)
    return spec


def _assert_spectrum_invariants(ctx, spec: LineSpectrum):
    Q = ctx.order
    if sum(spec.counts.values()) != Q * Q + Q + 1:
        raise ClaimViolation("spectrum line total is not q^(2n)+q^n+1")
    incidences = sum(m * c for m, c in spec.counts.items())
    if incidences != spec.set_size * (Q + 1):
        raise ClaimViolation("incidence double count fails")


def line_spectrum(S: PlanePointSet) -> LineSpectrum:
    """Exact spectrum via the enumeration kernel; invariants asserted."""
    ctx = S.ctx
    exp, log, zech, neg = ctx.kernel_tables()
    counts = kernels.incidence_counts(S.membership(), exp, log, zech, neg,
                                      ctx.order)
    return _spectrum_from_counts(ctx, counts, S.size)


def line_spectrum_direct(S: PlanePointSet) -> LineSpectrum:
    """Slow oracle: walk every line and count members one by one."""
    ctx = S.ctx
    member = S.membership()
    counts = np.zeros(plane_size(ctx), dtype=np.int64)
    for idx in range(plane_size(ctx)):
        pts = points_on_line(ctx, line_from_index(ctx, idx))
        counts[idx] = sum(int(member[point_index(ctx, p)]) for p in pts)
    return _spectrum_from_counts(ctx, counts, S.size)


def predicted_spectrum(profile: LinearSetProfile, kind: str) -> dict:
    """Spectrum predicted from the weight distribution alone.

    Requires minimum weight 1.  Size collisions (the q=2 branch cases and
    the club Redei line) merge automatically in the size-keyed map.
    """
    kind = normalize_kind(kind)
    if profile.min_weight != 1:
        raise MinWeightNotOne(
            "prediction requires a direction set of minimum weight 1")
    ctx = profile.ctx
    q, n, Q = ctx.q, ctx.n, ctx.order
    L = profile.size
    out: dict[int, int] = {}

    def bump(size, count):
        if count:
            out[size] = out.get(size, 0) + count

    if kind == KIND_BLOCKING:
        bump(L, 1)                                   # the Redei line
        ones = 0
        for i, N in zip(profile.distribution, profile.frequencies):
            bump(q**i + 1, q ** (n - i) * N)
            ones += (Q - q ** (n - i)) * N
        bump(1, ones + (Q + 1 - L) * Q)
    else:
        bump(Q + 1 - L, 1)
        zeros = 0
        for i, N in zip(profile.distribution, profile.frequencies):
            bump(q**i, q ** (n - i) * N)
            zeros += (Q - q ** (n - i)) * N
        bump(2, (Q + 1 - L) * Q)
        bump(0, zeros)
    return out


def compare_spectra(actual: LineSpectrum, predicted: dict) -> dict:
    """Structured diff {size: (actual, predicted)}; empty means match."""
    diff = {}
    for size in sorted(set(actual.counts) | set(predicted)):
        a = actual.counts.get(size, 0)
        p = predicted.get(size, 0)
        if a != p:
            diff[size] = (a, p)
    return diff


def blocking_exponent(spec: LineSpectrum, p: int, cap: int) -> int:
    """Largest e <= cap with every intersection size = 1 mod p^e."""
    e = cap
    for size in spec.counts:
        r = size - 1
        if r == 0:
            continue
        v = 0
        while r % p == 0:
            r //= p
            v += 1
        e = min(e, v)
    return e


def km_arc_check(spec: LineSpectrum, q: int, n: int):
    """Type-2^i tag when the sizes fit {0, 2, 2^i}; None otherwise."""
    if q != 2:
        return None
    extra = set(spec.counts) - {0, 2}
    if not extra:
        return 2  # hyperoval: the degenerate tag 2^1
    if len(extra) == 1:
        s = extra.pop()
        if s >= 4 and s & (s - 1) == 0:
            return s
    return None


def hyperoval_check(spec: LineSpectrum) -> bool:
    return set(spec.counts) <= {0, 2}


def pointset_json(S: PlanePointSet, spec: LineSpectrum, exponent=None,
                  predicted_match=None) -> dict:
    out = {
        "kind": "B" if S.kind == KIND_BLOCKING else "C",
        "N": S.size,
        "spectrum": {str(k): v for k, v in sorted(spec.counts.items())},
    }
    if exponent is not None:
        out["exponent"] = exponent
    if predicted_match is not None:
        out["predicted_match"] = predicted_match
    return out


def analyze_pointset(f: QPolynomial, kind: str, profile=None):
    """(pointset, spectrum, predicted-diff-or-None) for one polynomial."""
    kind = normalize_kind(kind)
    profile = profile or build_linear_set(f)
    S = build_pointset(f, kind)
    spec = line_spectrum(S)
    try:
        predicted = predicted_spectrum(profile, kind)
    except MinWeightNotOne:
        return S, spec, None
    return S, spec, compare_spectra(spec, predicted)

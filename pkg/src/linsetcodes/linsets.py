"""Direction sets D_f on PG(1,q^n): point weights, weight distribution,
classification, and the counting identities they must satisfy.

For a q-polynomial f the direction set is {<(x, f(x))> : x != 0}; the
point with slope m = f(x)/x has weight dim ker(x -> f(x0)*x - x0*f(x)),
computed as an n x n rank over GF(q) (one kernel call for the whole
batch of slopes).  Every profile is checked against the size/weight
identities before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import QPolynomial, graph_field_of_linearity
from .errors import ClaimViolation
from .geometry import ProjPoint


@dataclass(frozen=True)
class Classification:
    """Shape of a weight distribution: scattered, club(i), two_half or general."""

    kind: str
    i: int | None = None
    degenerate: bool = False

    def label(self):
        if self.kind == "club":
            return f"club({self.i})"
        return self.kind


@dataclass(frozen=True)
class LinearSetProfile:
    """Direction set with per-point weights and their frequencies."""

    poly: QPolynomial
    slopes: tuple          # sorted slope values m = f(x)/x; point <(1, m)>
    weights: tuple         # weight of each slope point, aligned with slopes
    rank: int
    distribution: tuple    # sorted distinct weights (i_1 < ... < i_t)
    frequencies: tuple     # N_{i_j}, aligned with distribution

    @property
    def ctx(self):
        return self.poly.ctx

    @property
    def size(self):
        return len(self.slopes)

    @property
    def t(self):
        return len(self.distribution)

    @property
    def min_weight(self):
        return self.distribution[0]

    @property
    def max_weight(self):
        return self.distribution[-1]

    def points(self):
        return [ProjPoint((1, int(m))) for m in self.slopes]

    def weight_of(self, slope):
        return self.weights[self.slopes.index(slope)]

    def frequency(self, weight):
        return self.frequencies[self.distribution.index(weight)]

    def is_degenerate(self):
        return self.size == 1


def _theta_sum(q, i):
    """q^(i-1) + ... + q + 1 (zero when i = 0)."""
    return (q**i - 1) // (q - 1)


def build_linear_set(f: QPolynomial) -> LinearSetProfile:
    """Profile of the direction set of f, with all identities asserted."""
    ctx = f.ctx
    q, n, Q = ctx.q, ctx.n, ctx.order
    values = f.values()
    xs = np.arange(1, Q, dtype=np.int64)
    slopes = np.unique(ctx.div_arr(values[1:], xs))

    exp, log, zech, neg = ctx.kernel_tables()
    wts = kernels.graph_weights(f.basis_values(), slopes, exp, log, zech, neg,
                                q, n, Q)

    dist, freq = np.unique(wts, return_counts=True)
    profile = LinearSetProfile(
        poly=f,
        slopes=tuple(int(m) for m in slopes),
        weights=tuple(int(w) for w in wts),
        rank=n,
        distribution=tuple(int(d) for d in dist),
        frequencies=tuple(int(c) for c in freq),
    )

    # size and weight-frequency identities
    if profile.size != sum(profile.frequencies):
        raise ClaimViolation("size does not equal the frequency total")
    if profile.size > (q**n - 1) // (q - 1):
        raise ClaimViolation("size exceeds the scattered bound")
    lhs = sum(N * _theta_sum(q, i)
              for i, N in zip(profile.distribution, profile.frequencies))
    if lhs != _theta_sum(q, n):
        raise ClaimViolation("weight-frequency identity fails")
    for i in profile.distribution:
        for j in profile.distribution:
            if i != j and i + j > n:
                raise ClaimViolation("two distinct weights exceed the rank bound")
    return profile


def classify(profile: LinearSetProfile) -> Classification:
    """Pure function of (distribution, frequencies)."""
    dist, freq = profile.distribution, profile.frequencies
    degenerate = profile.is_degenerate()
    if degenerate:
        return Classification("general", degenerate=True)
    if dist == (1,):
        return Classification("scattered")
    if len(dist) == 2 and dist[0] == 1:
        i = dist[1]
        if freq[1] == 1:
            return Classification("club", i=i)
        n = profile.rank
        if n % 2 == 0 and i == n // 2 and freq[1] == 2:
            return Classification("two_half", i=i)
    return Classification("general")


def image_size(f: QPolynomial) -> int:
    """|Im(f(x)/x)| by enumeration; equals the direction-set size.

    When the graph subspace has field of linearity GF(q) both sharp
    bounds q^(n-1)+1 <= size <= (q^n-1)/(q-1) are asserted.
    """
    ctx = f.ctx
    Q, q, n = ctx.order, ctx.q, ctx.n
    values = f.values()
    xs = np.arange(1, Q, dtype=np.int64)
    size = len(np.unique(ctx.div_arr(values[1:], xs)))
    if graph_field_of_linearity(f) == 1:
        if not q ** (n - 1) + 1 <= size <= (q**n - 1) // (q - 1):
            raise ClaimViolation("direction-set size violates the sharp bounds")
    return size


def weights_by_enumeration(f: QPolynomial):
    """Oracle: weights by directly intersecting U_f with each point span.

    Counts solutions of f(x) = m*x per slope m, which enumerates
    U_f inside the span of (1, m).  Guarded to q^n <= 2^12.
    """
    ctx = f.ctx
    Q = ctx.order
    if Q > 1 << 12:
        raise ValueError("enumeration oracle limited to q^n <= 2^12")
    values = f.values()
    counts: dict[int, int] = {}
    for x in range(1, Q):
        m = ctx.div(int(values[x]), x)
        counts[m] = counts.get(m, 0) + 1
    out = {}
    for m, c in counts.items():
        size = c + 1  # include x = 0
        w = 0
        while ctx.q**w < size:
            w += 1
        if ctx.q**w != size:
            raise ClaimViolation("span intersection is not a power of q")
        out[m] = w
    return out


def profile_json(profile: LinearSetProfile) -> dict:
    return {
        "size": profile.size,
        "distribution": list(profile.distribution),
        "frequencies": list(profile.frequencies),
        "classification": classify(profile).label(),
    }

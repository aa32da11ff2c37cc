#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs each hot kernel on both backends over a few field sizes, checks the
outputs are identical, and prints a timing table.  Numba compilation is
excluded by a warm-up pass.

    python3 benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from linsetcodes.algebra import build_field, qpoly_monomial
from linsetcodes.kernels import get_backend
from linsetcodes.pointsets import build_pointset


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_incidence(ctx, repeat):
    f = qpoly_monomial(ctx, 1)
    member = build_pointset(f, "b").membership()
    exp, log, zech, neg = ctx.kernel_tables()
    args = (member, exp, log, zech, neg, ctx.order)
    return {name: _time(lambda b=get_backend(name): b.incidence_counts(*args), repeat)
            for name in ("numba", "numpy")}


def bench_weights(ctx, repeat):
    f = qpoly_monomial(ctx, 1)
    from linsetcodes.codes import generator_matrix, system_from_pointset
    S = build_pointset(f, "b")
    G = generator_matrix(system_from_pointset(S), ctx)
    g1, g2, g3 = G.arrays()
    exp, log, zech, neg = ctx.kernel_tables()
    args = (g1, g2, g3, exp, log, zech, neg, ctx.order)
    return {name: _time(lambda b=get_backend(name): b.codeword_weight_counts(*args), repeat)
            for name in ("numba", "numpy")}


def bench_graph_weights(ctx, repeat):
    f = qpoly_monomial(ctx, 1)
    xs = np.arange(1, ctx.order, dtype=np.int64)
    slopes = np.unique(ctx.div_arr(f.values()[1:], xs))
    exp, log, zech, neg = ctx.kernel_tables()
    args = (f.basis_values(), slopes, exp, log, zech, neg, ctx.q, ctx.n, ctx.order)
    return {name: _time(lambda b=get_backend(name): b.graph_weights(*args), repeat)
            for name in ("numba", "numpy")}


def bench_search(ctx, repeat):
    f = qpoly_monomial(ctx, 1)
    g = qpoly_monomial(ctx, 2)
    Q = ctx.order
    bx = np.array([ctx.q**j for j in range(ctx.n)], dtype=np.int64)
    bf = f.basis_values()
    j2 = 1
    gv = g.values()
    member2 = np.zeros(Q * Q, dtype=np.uint8)
    member2[np.arange(Q, dtype=np.int64) * Q + gv] = 1
    exps = np.arange(ctx.h * ctx.n, dtype=np.int64)
    exp, log, zech, neg = ctx.kernel_tables()
    args = (bx, bf, j2, np.arange(1, Q, dtype=np.int64), gv[1:], member2,
            ctx.frobenius_table(), exps, exp, log, zech, neg, Q)
    return {name: _time(lambda b=get_backend(name): b.semilinear_search(*args), repeat)
            for name in ("numba", "numpy")}


BENCHES = [
    ("incidence_counts", bench_incidence, [(2, 1, 5), (2, 1, 9), (2, 1, 10)]),
    ("codeword_weight_counts", bench_weights, [(2, 1, 5), (2, 1, 7), (2, 1, 8)]),
    ("graph_weights", bench_graph_weights, [(2, 1, 8), (2, 1, 10), (3, 1, 6)]),
    ("semilinear_search", bench_search, [(2, 1, 5), (2, 1, 7), (3, 1, 4)]),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'kernel':<24} {'field':<12} {'numba':>10} {'numpy':>10} "
          f"{'speedup':>8}  equal")
    for name, fn, fields in BENCHES:
        for (p, h, n) in fields:
            ctx = build_field(p, h, n)
            fn(ctx, 1)  # warm-up: numba compilation and table construction
            res = fn(ctx, args.repeat)
            tb, out_b = res["numba"]
            tn, out_n = res["numpy"]
            same = np.array_equal(np.asarray(out_b), np.asarray(out_n))
            print(f"{name:<24} GF({ctx.order})".ljust(37)
                  + f" {tb*1e3:9.2f}ms {tn*1e3:9.2f}ms {tn/tb:7.1f}x  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

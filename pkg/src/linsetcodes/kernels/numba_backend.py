"""Numba implementations of the hot kernels (default backend).

Table layout and the PG(2,Q) index scheme are documented in
numpy_backend; both backends return identical arrays.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _add(x, y, exp, log, zech, Q):
    if x == 0:
        return y
    if y == 0:
        return x
    a = log[x]
    d = log[y] - a
    if d < 0:
        d += Q - 1
    z = zech[d]
    if z < 0:
        return 0
    return exp[a + z]


@njit(cache=True, inline="always")
def _mul(x, y, exp, log):
    if x == 0 or y == 0:
        return 0
    return exp[log[x] + log[y]]


@njit(cache=True, inline="always")
def _inv(x, exp, log, Q):
    return exp[Q - 1 - log[x]]


@njit(cache=True)
def _incident_ids(a, b, c, out, exp, log, zech, neg, Q):
    if a == 0 and b == 0:
        out[0] = 1
        for t in range(Q):
            out[1 + t] = 1 + Q + t * Q
        return
    if a == 0:
        for t in range(Q):
            u = neg[_mul(c, t, exp, log)]
            out[t] = 1 + Q + u * Q + t
        out[Q] = 0 if c == 0 else 1 + _inv(neg[c], exp, log, Q)
        return
    for t in range(Q):
        s = neg[_add(b, _mul(t, c, exp, log), exp, log, zech, Q)]
        if s == 0:
            out[t] = 1 + t
        else:
            si = _inv(s, exp, log, Q)
            out[t] = 1 + Q + si * Q + _mul(t, si, exp, log)
    out[Q] = 0 if c == 0 else 1 + Q + _inv(neg[c], exp, log, Q)


@njit(cache=True)
def incidence_counts(member, exp, log, zech, neg, Q):
    M = Q * Q + Q + 1
    counts = np.zeros(M, dtype=np.int64)
    ids = np.empty(Q + 1, dtype=np.int64)
    for pid in range(M):
        if member[pid] == 0:
            continue
        if pid == 0:
            a, b, c = np.int64(0), np.int64(0), np.int64(1)
        elif pid <= Q:
            a, b, c = np.int64(0), np.int64(1), np.int64(pid - 1)
        else:
            rem = pid - 1 - Q
            a, b, c = np.int64(1), np.int64(rem // Q), np.int64(rem % Q)
        _incident_ids(a, b, c, ids, exp, log, zech, neg, Q)
        for k in range(Q + 1):
            counts[ids[k]] += 1
    return counts


@njit(cache=True)
def codeword_weight_counts(g1, g2, g3, exp, log, zech, neg, Q):
    m = len(g1)
    hist = np.zeros(m + 1, dtype=np.int64)
    t_scale = np.zeros(m, dtype=np.int64)
    for i in range(m):
        if g3[i] != 0:
            t_scale[i] = neg[_inv(g3[i], exp, log, Q)]
    s = np.zeros(m, dtype=np.int64)
    cnt = np.zeros(Q, dtype=np.int64)
    for v1 in range(Q):
        for v2 in range(Q):
            base = 0
            for i in range(m):
                s[i] = _add(_mul(v1, g1[i], exp, log),
                            _mul(v2, g2[i], exp, log), exp, log, zech, Q)
                if g3[i] == 0:
                    if s[i] == 0:
                        base += 1
                else:
                    cnt[_mul(s[i], t_scale[i], exp, log)] += 1
            for v3 in range(Q):
                hist[m - base - cnt[v3]] += 1
                cnt[v3] = 0
    return hist


@njit(cache=True)
def graph_weights(fbasis, slopes, exp, log, zech, neg, q, n, Q):
    S = len(slopes)
    weights = np.empty(S, dtype=np.int64)
    mat = np.zeros((n, n), dtype=np.int64)
    for si in range(S):
        mval = slopes[si]
        beta = np.int64(1)
        for j in range(n):
            col = _add(fbasis[j], neg[_mul(mval, beta, exp, log)],
                       exp, log, zech, Q)
            for i in range(n):
                mat[i, j] = col % q
                col //= q
            beta *= q
        rank = 0
        for col in range(n):
            piv = -1
            for r in range(rank, n):
                if mat[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(n):
                    tmp = mat[rank, j]
                    mat[rank, j] = mat[piv, j]
                    mat[piv, j] = tmp
            pinv = _inv(mat[rank, col], exp, log, Q)
            for j in range(n):
                mat[rank, j] = _mul(pinv, mat[rank, j], exp, log)
            for r in range(n):
                if r != rank and mat[r, col] != 0:
                    f = mat[r, col]
                    for j in range(n):
                        mat[r, j] = _add(mat[r, j],
                                         neg[_mul(f, mat[rank, j], exp, log)],
                                         exp, log, zech, Q)
            rank += 1
        weights[si] = n - rank
    return weights


@njit(cache=True)
def semilinear_search(bx, bf, j2, ug_a, ug_b, member2, frob, exps,
                      exp, log, zech, neg, Q):
    n = len(bx)
    K = len(ug_a)
    out = np.zeros(7, dtype=np.int64)
    out[1] = -1
    tested = 0
    for ei in range(len(exps)):
        e = exps[ei]
        fr = frob[e]
        x1e = fr[bx[0]]
        f1e = fr[bf[0]]
        x2e = fr[bx[j2]]
        f2e = fr[bf[j2]]
        det = _add(_mul(x1e, f2e, exp, log),
                   neg[_mul(x2e, f1e, exp, log)], exp, log, zech, Q)
        dinv = _inv(det, exp, log, Q)
        wi11 = _mul(dinv, f2e, exp, log)
        wi12 = _mul(dinv, neg[x2e], exp, log)
        wi21 = _mul(dinv, neg[f1e], exp, log)
        wi22 = _mul(dinv, x1e, exp, log)
        for ka in range(K):
            a1 = ug_a[ka]
            a2 = ug_b[ka]
            for kb in range(K):
                b1 = ug_a[kb]
                b2 = ug_b[kb]
                if _add(_mul(a1, b2, exp, log),
                        neg[_mul(a2, b1, exp, log)], exp, log, zech, Q) == 0:
                    continue
                tested += 1
                m11 = _add(_mul(a1, wi11, exp, log), _mul(b1, wi21, exp, log),
                           exp, log, zech, Q)
                m12 = _add(_mul(a1, wi12, exp, log), _mul(b1, wi22, exp, log),
                           exp, log, zech, Q)
                m21 = _add(_mul(a2, wi11, exp, log), _mul(b2, wi21, exp, log),
                           exp, log, zech, Q)
                m22 = _add(_mul(a2, wi12, exp, log), _mul(b2, wi22, exp, log),
                           exp, log, zech, Q)
                good = True
                for j in range(n):
                    if j == 0 or j == j2:
                        continue
                    xe = fr[bx[j]]
                    fe = fr[bf[j]]
                    ia = _add(_mul(m11, xe, exp, log), _mul(m12, fe, exp, log),
                              exp, log, zech, Q)
                    ib = _add(_mul(m21, xe, exp, log), _mul(m22, fe, exp, log),
                              exp, log, zech, Q)
                    if member2[ia * Q + ib] == 0:
                        good = False
                        break
                if good:
                    out[0] = 1
                    out[1] = e
                    out[2] = m11
                    out[3] = m12
                    out[4] = m21
                    out[5] = m22
                    out[6] = tested
                    return out
    out[6] = tested
    return out

"""Pure-numpy implementations of the hot kernels.

Same signatures and outputs as the numba backend; selected by setting
LINSETCODES_BACKEND=numpy.  All field arithmetic is table driven: exp is
the doubled antilog table, log the discrete-log table (log[0] = -1), zech
the Zech logarithm table (zech[k] = log(1 + g^k), -1 when the sum is 0)
and neg the additive-inverse table.

Point/line index scheme for PG(2,Q), shared with the numba backend and
the geometry module: canonical homogeneous triples ordered
lexicographically, (0,0,1) -> 0, (0,1,z) -> 1+z, (1,y,z) -> 1+Q+y*Q+z.
"""

from __future__ import annotations

import numpy as np


def _vadd(x, y, exp, log, zech, Q):
    x, y = np.broadcast_arrays(np.asarray(x, np.int64), np.asarray(y, np.int64))
    out = np.empty(x.shape, dtype=np.int64)
    zx = x == 0
    zy = y == 0
    out[zx] = y[zx]
    m2 = ~zx & zy
    out[m2] = x[m2]
    m = ~zx & ~zy
    a = log[x[m]]
    d = (log[y[m]] - a) % (Q - 1)
    z = zech[d]
    out[m] = np.where(z < 0, 0, exp[a + np.maximum(z, 0)])
    return out


def _vmul(x, y, exp, log):
    x, y = np.broadcast_arrays(np.asarray(x, np.int64), np.asarray(y, np.int64))
    out = np.zeros(x.shape, dtype=np.int64)
    m = (x != 0) & (y != 0)
    out[m] = exp[log[x[m]] + log[y[m]]]
    return out


def _vsub(x, y, exp, log, zech, neg, Q):
    return _vadd(x, neg[np.asarray(y, np.int64)], exp, log, zech, Q)


def _vinv(x, exp, log, Q):
    return exp[Q - 1 - log[np.asarray(x, np.int64)]]


def _incident_ids(a, b, c, exp, log, zech, neg, Q):
    """Ids of the Q+1 canonical triples orthogonal to (a, b, c).

    Self-dual: maps a point to the lines through it and a line to the
    points on it, in the shared index scheme.
    """
    ts = np.arange(Q, dtype=np.int64)
    ids = np.empty(Q + 1, dtype=np.int64)
    if a == 0 and b == 0:
        # solutions have third coordinate 0
        ids[0] = 1
        ids[1:] = 1 + Q + ts * Q
        return ids
    if a == 0:
        # b = 1: second coordinate = -c * third
        u = neg[_vmul(c, ts, exp, log)]
        ids[:Q] = 1 + Q + u * Q + ts
        ids[Q] = 0 if c == 0 else 1 + int(_vinv(neg[c], exp, log, Q))
        return ids
    # a = 1: first coordinate = -(b*second + c*third); family over second = 1
    s = neg[_vadd(b, _vmul(ts, c, exp, log), exp, log, zech, Q)]
    zero = s == 0
    ids[:Q][zero] = 1 + ts[zero]
    si = _vinv(s[~zero], exp, log, Q)
    ids[:Q][~zero] = 1 + Q + si * Q + _vmul(ts[~zero], si, exp, log)
    if c == 0:
        ids[Q] = 0
    else:
        ids[Q] = 1 + Q + int(_vinv(neg[c], exp, log, Q))
    return ids


def _decode_index(pid, Q):
    if pid == 0:
        return 0, 0, 1
    if pid <= Q:
        return 0, 1, pid - 1
    rem = pid - 1 - Q
    return 1, rem // Q, rem % Q


def incidence_counts(member, exp, log, zech, neg, Q):
    """Per-line intersection counts with the point set flagged in member.

    Accumulates over the lines through each member point, so the cost is
    O(|S| * Q) rather than one membership test for every line/point pair.
    """
    M = Q * Q + Q + 1
    counts = np.zeros(M, dtype=np.int64)
    for pid in np.nonzero(member)[0]:
        a, b, c = _decode_index(int(pid), Q)
        counts[_incident_ids(a, b, c, exp, log, zech, neg, Q)] += 1
    return counts


def codeword_weight_counts(g1, g2, g3, exp, log, zech, neg, Q):
    """Hamming-weight histogram of all Q^3 codewords of the rank-3 code.

    For fixed (v1, v2) the zero pattern over v3 is read off per column:
    a column with g3 != 0 vanishes for exactly one v3, found by a bucket
    count; columns with g3 = 0 vanish for all v3 or none.
    """
    m = len(g1)
    hist = np.zeros(m + 1, dtype=np.int64)
    nz = g3 != 0
    zcol = ~nz
    t_scale = neg[_vinv(g3[nz], exp, log, Q)]  # -1/g3 per live column
    v2g2 = _vmul(np.arange(Q, dtype=np.int64)[:, None], g2[None, :], exp, log)
    offsets = (np.arange(Q, dtype=np.int64) * Q)[:, None]
    for v1 in range(Q):
        a = _vmul(v1, g1, exp, log)
        s = _vadd(a[None, :], v2g2, exp, log, zech, Q)        # (Q, m)
        base = ((s == 0) & zcol[None, :]).sum(axis=1)         # (Q,)
        t = _vmul(s[:, nz], t_scale[None, :], exp, log)       # (Q, #nz)
        cnt = np.bincount((t + offsets).ravel(), minlength=Q * Q).reshape(Q, Q)
        zeros = base[:, None] + cnt
        hist += np.bincount((m - zeros).ravel(), minlength=m + 1)
    return hist


def graph_weights(fbasis, slopes, exp, log, zech, neg, q, n, Q):
    """Point weights of the direction set, one per slope value.

    The weight of the point with slope m is n - rank of the GF(q) matrix
    of x -> f(x) - m*x; the whole batch is eliminated simultaneously.
    """
    S = len(slopes)
    qpows = np.array([q**j for j in range(n)], dtype=np.int64)
    cols = _vsub(fbasis[None, :], _vmul(slopes[:, None], qpows[None, :], exp, log),
                 exp, log, zech, neg, Q)                      # (S, n)
    dig = (cols[:, :, None] // qpows[None, None, :]) % q       # (S, col, row)
    mat = np.ascontiguousarray(dig.transpose(0, 2, 1))         # (S, row, col)
    rowptr = np.zeros(S, dtype=np.int64)
    rows = np.arange(n)
    for col in range(n):
        colvals = mat[:, :, col]
        cand = (rows[None, :] >= rowptr[:, None]) & (colvals != 0)
        has = cand.any(axis=1)
        idx = np.nonzero(has)[0]
        if len(idx) == 0:
            continue
        r = rowptr[idx]
        piv = cand[idx].argmax(axis=1)
        tmp = mat[idx, piv, :].copy()
        mat[idx, piv, :] = mat[idx, r, :]
        mat[idx, r, :] = tmp
        prow = mat[idx, r, :]
        pinv = _vinv(prow[:, col], exp, log, Q)
        prow = _vmul(pinv[:, None], prow, exp, log)
        mat[idx, r, :] = prow
        colv = mat[idx, :, col].copy()
        colv[np.arange(len(idx)), r] = 0
        mat[idx] = _vsub(mat[idx],
                         _vmul(colv[:, :, None], prow[:, None, :], exp, log),
                         exp, log, zech, neg, Q)
        rowptr[idx] += 1
    return n - rowptr


def semilinear_search(bx, bf, j2, ug_a, ug_b, member2, frob, exps,
                      exp, log, zech, neg, Q):
    """Search for (M, e) with M * sigma_e(U_f) = U_g.

    The two anchor vectors (bx[0], bf[0]) and (bx[j2], bf[j2]) are
    GF(q^n)-independent, so M is determined by the images of their
    Frobenius twists; images range over independent pairs of U_g vectors,
    which makes the enumeration exhaustive.  Returns
    [found, e, m11, m12, m21, m22, tested].
    """

    def smul(x, y):
        if x == 0 or y == 0:
            return 0
        return int(exp[log[x] + log[y]])

    def sneg(x):
        return int(neg[x])

    def sadd(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        a = log[x]
        d = (log[y] - a) % (Q - 1)
        z = zech[d]
        return 0 if z < 0 else int(exp[a + z])

    n = len(bx)
    others = [j for j in range(n) if j != 0 and j != j2]
    tested = 0
    for e in exps:
        fr = frob[e]
        x1e, f1e = int(fr[bx[0]]), int(fr[bf[0]])
        x2e, f2e = int(fr[bx[j2]]), int(fr[bf[j2]])
        det = sadd(smul(x1e, f2e), sneg(smul(x2e, f1e)))
        dinv = int(exp[Q - 1 - log[det]])
        wi11 = smul(dinv, f2e)
        wi12 = smul(dinv, sneg(x2e))
        wi21 = smul(dinv, sneg(f1e))
        wi22 = smul(dinv, x1e)
        bxe = fr[bx]
        bfe = fr[bf]
        for ka in range(len(ug_a)):
            a1, a2 = int(ug_a[ka]), int(ug_b[ka])
            ok = _vsub(_vmul(a1, ug_b, exp, log), _vmul(a2, ug_a, exp, log),
                       exp, log, zech, neg, Q) != 0
            if not ok.any():
                continue
            tested += int(ok.sum())
            m11 = _vadd(smul(a1, wi11), _vmul(ug_a, wi21, exp, log),
                        exp, log, zech, Q)
            m12 = _vadd(smul(a1, wi12), _vmul(ug_a, wi22, exp, log),
                        exp, log, zech, Q)
            m21 = _vadd(smul(a2, wi11), _vmul(ug_b, wi21, exp, log),
                        exp, log, zech, Q)
            m22 = _vadd(smul(a2, wi12), _vmul(ug_b, wi22, exp, log),
                        exp, log, zech, Q)
            good = ok
            for j in others:
                if not good.any():
                    break
                ia = _vadd(_vmul(m11, int(bxe[j]), exp, log),
                           _vmul(m12, int(bfe[j]), exp, log),
                           exp, log, zech, Q)
                ib = _vadd(_vmul(m21, int(bxe[j]), exp, log),
                           _vmul(m22, int(bfe[j]), exp, log),
                           exp, log, zech, Q)
                good = good & (member2[ia * Q + ib] != 0)
            hit = np.nonzero(good)[0]
            if len(hit):
                kb = int(hit[0])
                tested -= int(ok[kb + 1:].sum())  # align with scalar iteration
                return np.array([1, int(e), int(m11[kb]), int(m12[kb]),
                                 int(m21[kb]), int(m22[kb]), tested],
                                dtype=np.int64)
    return np.array([0, -1, 0, 0, 0, 0, tested], dtype=np.int64)

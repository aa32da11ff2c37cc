"""Constructors for the known q-polynomial families, with validators.

Family ids follow the CLI syntax table<1|2|3>.<row>.  Table 1 rows give
scattered direction sets, table 2 rows give clubs, table 3 rows give sets
with exactly two points of weight n/2.  Every constructor validates the
printed side conditions, builds the polynomial through the q-polynomial
calculus, and then asserts the claimed classification by enumeration
before returning; parameters resolved by the deterministic default search
are recorded in the result so reports can echo them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (QPolynomial, divisors, qpoly, qpoly_add, qpoly_compose,
                      qpoly_monomial, qpoly_scale, rank_gfq)
from .errors import (ClaimViolation, ConditionViolation, FactorizationMismatch,
                     GcdViolation, NormViolation)
from .linsets import build_linear_set, classify


@dataclass(frozen=True)
class FamilyResult:
    """Constructed polynomial plus provenance for downstream reports."""

    poly: QPolynomial
    family: str
    params: dict

    @property
    def ctx(self):
        return self.poly.ctx


def _assert_classification(poly, family, expected_kind, expected_i=None):
    got = classify(build_linear_set(poly))
    if got.kind != expected_kind or (expected_i is not None and got.i != expected_i):
        raise ClaimViolation(
            f"{family}: expected {expected_kind}"
            f"{'' if expected_i is None else f'({expected_i})'},"
            f" enumeration found {got.label()}")


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------


def element_degree(ctx, x, r=1):
    """Degree of x over the intermediate field GF(q^r)."""
    d = 1
    while ctx.frobenius(x, r * d) != x:
        d += 1
    return d


def subfield_norm(ctx, x, t):
    """Norm from GF(q^t) down to GF(q), for x already in GF(q^t)."""
    acc = 1
    for i in range(t):
        acc = ctx.mul(acc, ctx.frobenius(x, i))
    return acc


def is_gfq_basis(ctx, vecs):
    if len(vecs) != ctx.n:
        return False
    return rank_gfq(ctx, [ctx.digits_q(v) for v in vecs]) == ctx.n


def invert_matrix(ctx, M):
    """Inverse of a square matrix of field encodings (Gauss-Jordan)."""
    k = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(k)]
           for i, row in enumerate(M)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise ConditionViolation("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pinv = ctx.inv(aug[col][col])
        aug[col] = [ctx.mul(pinv, v) for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [ctx.sub(v, ctx.mul(c, w))
                          for v, w in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def dual_basis(ctx, basis, r=1):
    """Dual of a GF(q^r)-basis w.r.t. the relative trace, by Gram inversion.

    The Kronecker-delta property of the result is asserted.
    """
    k = len(basis)
    gram = [[ctx.trace_rel(ctx.mul(a, b), r) for b in basis] for a in basis]
    ginv = invert_matrix(ctx, gram)
    duals = []
    for i in range(k):
        acc = 0
        for j in range(k):
            acc = ctx.add(acc, ctx.mul(ginv[i][j], basis[j]))
        duals.append(acc)
    for i in range(k):
        for j in range(k):
            want = 1 if i == j else 0
            if ctx.trace_rel(ctx.mul(duals[i], basis[j]), r) != want:
                raise ClaimViolation("dual basis fails the delta property")
    return duals


def minpoly_over(ctx, omega, r):
    """Coefficients (low to high, monic) of the minimal polynomial of
    omega over GF(q^r), from the product over conjugates."""
    conj = []
    x = omega
    while x not in conj:
        conj.append(x)
        x = ctx.frobenius(x, r)
    poly = [1]
    for root in conj:
        nxt = [0] * (len(poly) + 1)
        nr = ctx.neg(root)
        for k, c in enumerate(poly):
            nxt[k + 1] = ctx.add(nxt[k + 1], c)
            nxt[k] = ctx.add(nxt[k], ctx.mul(nr, c))
        poly = nxt
    for c in poly:
        if not ctx.in_subfield(c, r):
            raise ClaimViolation("minimal polynomial left the subfield")
    return poly


def trace_poly(ctx, r):
    """Tr_{q^n/q^r} as a q-polynomial (ones at exponents r*j)."""
    coeffs = [0] * ctx.n
    for j in range(ctx.n // r):
        coeffs[r * j] = 1
    return QPolynomial(tuple(coeffs), ctx)


def scale_poly(ctx, c):
    return qpoly_monomial(ctx, 0, c)


def inner_as_qpoly(ctx, inner_coeffs):
    """Lift coefficients of an L_{r,q} polynomial into L_{n,q}."""
    return qpoly(ctx, inner_coeffs)


def inner_is_scattered(ctx, inner_coeffs, r):
    """Scatteredness of an L_{r,q} polynomial, checked on GF(q^r).

    Scattered means the slope image over the subfield attains
    (q^r - 1)/(q - 1) values.
    """
    if r == 1:
        return any(c != 0 for c in inner_coeffs)
    f = inner_as_qpoly(ctx, inner_coeffs)
    sub = ctx.subfield(r)
    slopes = {ctx.div(f.evaluate(int(z)), int(z)) for z in sub if z != 0}
    return len(slopes) == (ctx.q**r - 1) // (ctx.q - 1)


def _first_subfield_basis(ctx, t):
    """First GF(q)-basis of GF(q^t), greedily in encoding order."""
    basis = []
    for z in ctx.subfield(t).tolist():
        if z == 0:
            continue
        trial = basis + [z]
        if rank_gfq(ctx, [ctx.digits_q(v) for v in trial]) == len(trial):
            basis.append(z)
        if len(basis) == t:
            return basis
    raise ConditionViolation("no basis of the subfield found")  # pragma: no cover


# ---------------------------------------------------------------------------
# table 1: scattered families
# ---------------------------------------------------------------------------


def make_pseudoregulus(ctx, s):
    """table1.i: x^(q^s), gcd(s, n) = 1."""
    if math.gcd(s, ctx.n) != 1:
        raise GcdViolation(f"gcd(s={s}, n={ctx.n}) != 1")
    poly = qpoly_monomial(ctx, s)
    _assert_classification(poly, "table1.i", "scattered")
    return FamilyResult(poly, "table1.i", {"s": s})


def make_lunardon_polverino(ctx, s, delta=None):
    """table1.ii: x^(q^s) + delta*x^(q^(s(n-1))), gcd(s,n)=1, N(delta) != 1.

    delta = 0 is rejected (the second term would vanish); when delta is
    omitted the smallest valid encoding is chosen.
    """
    if math.gcd(s, ctx.n) != 1:
        raise GcdViolation(f"gcd(s={s}, n={ctx.n}) != 1")
    if delta is None:
        delta = next((d for d in range(1, ctx.order)
                      if ctx.norm_rel(d, 1) != 1), None)
        if delta is None:
            raise NormViolation("every nonzero delta has norm 1 here")
    if delta == 0 or ctx.norm_rel(delta, 1) == 1:
        raise NormViolation(f"delta={delta} needs N(delta) != 1 and delta != 0")
    poly = qpoly_add(qpoly_monomial(ctx, s),
                     qpoly_monomial(ctx, (s * (ctx.n - 1)) % ctx.n, delta))
    _assert_classification(poly, "table1.ii", "scattered")
    return FamilyResult(poly, "table1.ii", {"s": s, "delta": delta})


def make_bzz(ctx, s, delta=None, ell=None):
    """table1.iii on n = 2*ell: the four-term scattered family

        x^(q^s) + x^(q^(s(ell-1))) + delta^(q^s+1) x^(q^(s(ell+1)))
        + delta^(1-q^(s(2ell-1))) x^(q^(s(2ell-1)))

    for odd q with N_{q^n/q^ell}(delta) = -1 and gcd(s, n) = 1.  The two
    delta exponents follow the primitive s = 1 form twisted by s; an even
    s would force every term exponent even, a larger field of linearity,
    so the gcd is taken against n."""
    n = ctx.n
    ell = ell if ell is not None else n // 2
    if n != 2 * ell or ell < 2:
        raise ConditionViolation(f"need n = 2*ell with ell >= 2, got n={n}, ell={ell}")
    if ctx.p == 2:
        raise ConditionViolation("q must be odd")
    if math.gcd(s, n) != 1:
        raise ConditionViolation(f"gcd(s={s}, n={n}) != 1")
    minus_one = ctx.neg(1)
    if delta is None:
        delta = next((d for d in range(1, ctx.order)
                      if ctx.norm_rel(d, ell) == minus_one), None)
        if delta is None:
            raise NormViolation("no delta with relative norm -1")
    if delta == 0 or ctx.norm_rel(delta, ell) != minus_one:
        raise ConditionViolation(f"delta={delta} needs N_(q^n/q^ell)(delta) = -1")
    c3 = ctx.mul(ctx.frobenius(delta, s), delta)             # delta^(q^s + 1)
    c4 = ctx.div(delta, ctx.frobenius(delta, s * (2 * ell - 1)))
    poly = qpoly_monomial(ctx, s)
    poly = qpoly_add(poly, qpoly_monomial(ctx, (s * (ell - 1)) % n))
    poly = qpoly_add(poly, qpoly_monomial(ctx, (s * (ell + 1)) % n, c3))
    poly = qpoly_add(poly, qpoly_monomial(ctx, (s * (2 * ell - 1)) % n, c4))
    _assert_classification(poly, "table1.iii", "scattered")
    return FamilyResult(poly, "table1.iii", {"s": s, "delta": delta, "ell": ell})


def make_scattered_n6_iv(ctx, delta):
    """table1.iv on n = 6: x^q + delta*x^(q^4), q > 4, delta user-chosen;
    scatteredness of the result is the binding validator."""
    if ctx.n != 6:
        raise ConditionViolation("this family needs n = 6")
    if ctx.q <= 4:
        raise ConditionViolation("this family needs q > 4")
    if delta == 0:
        raise ConditionViolation("delta must be nonzero")
    poly = qpoly_add(qpoly_monomial(ctx, 1), qpoly_monomial(ctx, 4, delta))
    _assert_classification(poly, "table1.iv", "scattered")
    return FamilyResult(poly, "table1.iv", {"delta": delta})


def make_scattered_n6_v(ctx, delta=None):
    """table1.v on n = 6: x^q + x^(q^3) + delta*x^(q^5), q odd, delta^2 + delta = 1."""
    if ctx.n != 6:
        raise ConditionViolation("this family needs n = 6")
    if ctx.p == 2:
        raise ConditionViolation("q must be odd")
    if delta is None:
        delta = next((d for d in range(ctx.order)
                      if ctx.add(ctx.mul(d, d), d) == 1), None)
        if delta is None:
            raise ConditionViolation("no delta with delta^2 + delta = 1")
    if ctx.add(ctx.mul(delta, delta), delta) != 1:
        raise ConditionViolation(f"delta={delta} fails delta^2 + delta = 1")
    poly = qpoly_add(qpoly_add(qpoly_monomial(ctx, 1), qpoly_monomial(ctx, 3)),
                     qpoly_monomial(ctx, 5, delta))
    _assert_classification(poly, "table1.v", "scattered")
    return FamilyResult(poly, "table1.v", {"delta": delta})


def make_scattered_n8_vi(ctx, delta=None):
    """table1.vi on n = 8: x^q + delta*x^(q^5), q odd, delta^2 = -1."""
    if ctx.n != 8:
        raise ConditionViolation("this family needs n = 8")
    if ctx.p == 2:
        raise ConditionViolation("q must be odd")
    minus_one = ctx.neg(1)
    if delta is None:
        delta = next((d for d in range(ctx.order)
                      if ctx.mul(d, d) == minus_one), None)
        if delta is None:
            raise ConditionViolation("no delta with delta^2 = -1")
    if ctx.mul(delta, delta) != minus_one:
        raise ConditionViolation(f"delta={delta} fails delta^2 = -1")
    poly = qpoly_add(qpoly_monomial(ctx, 1), qpoly_monomial(ctx, 5, delta))
    _assert_classification(poly, "table1.vi", "scattered")
    return FamilyResult(poly, "table1.vi", {"delta": delta})


# ---------------------------------------------------------------------------
# table 2: clubs
# ---------------------------------------------------------------------------


def make_trace_club(ctx, r, t, s=1):
    """table2.i: Tr_{q^(rt)/q^r} o x^(q^s) with n = r*t, gcd(s, n) = 1;
    an r(t-1)-club."""
    if r * t != ctx.n or t < 2:
        raise FactorizationMismatch(f"need n = r*t with t >= 2, got r={r}, t={t}")
    if math.gcd(s, ctx.n) != 1:
        raise GcdViolation(f"gcd(s={s}, n={ctx.n}) != 1")
    poly = qpoly_compose(trace_poly(ctx, r), qpoly_monomial(ctx, s))
    _assert_classification(poly, "table2.i", "club", r * (t - 1))
    return FamilyResult(poly, "table2.i", {"r": r, "t": t, "s": s})


def _club_row_ii(ctx, lam=None, omega=None):
    """table2.ii: Tr(b_(n-2) x) + lam*Tr(b_(n-1) x), an (n-2)-club, where
    (b_i) is the dual of the basis (1, lam, ..., lam^(n-3), lam^(n-2)+omega,
    omega*lam) and GF(q)(lam) = GF(q^n)."""
    n = ctx.n
    if n < 3:
        raise ConditionViolation("this family needs n >= 3")

    def basis_of(lam_, om_):
        b = [ctx.pow(lam_, j) for j in range(n - 2)]
        b.append(ctx.add(ctx.pow(lam_, n - 2), om_))
        b.append(ctx.mul(om_, lam_))
        return b

    if lam is None or omega is None:
        found = None
        for lam_ in range(1, ctx.order):
            if lam is not None and lam_ != lam:
                continue
            if element_degree(ctx, lam_) != n:
                continue
            for om_ in range(1, ctx.order):
                if omega is not None and om_ != omega:
                    continue
                if is_gfq_basis(ctx, basis_of(lam_, om_)):
                    found = (lam_, om_)
                    break
            if found:
                break
        if not found:
            raise ConditionViolation("no (lam, omega) passes the basis condition")
        lam, omega = found
    if element_degree(ctx, lam) != n:
        raise ConditionViolation(f"lam={lam} does not generate GF(q^n)")
    basis = basis_of(lam, omega)
    if not is_gfq_basis(ctx, basis):
        raise ConditionViolation("the prescribed tuple is not a basis")
    duals = dual_basis(ctx, basis, 1)
    tr = trace_poly(ctx, 1)
    poly = qpoly_add(
        qpoly_compose(tr, scale_poly(ctx, duals[n - 2])),
        qpoly_scale(qpoly_compose(tr, scale_poly(ctx, duals[n - 1])), lam))
    _assert_classification(poly, "table2.ii", "club", n - 2)
    return FamilyResult(poly, "table2.ii", {"lam": lam, "omega": omega})


def _club_row_iii_iv(ctx, row, r, t, inner=None, a=None, omega=None):
    """table2.iii / table2.iv: inner(Tr_{q^n/q^r}(c0 x)) - a*Tr_{q^n/q^r}(c0 x)
    with inner scattered in L_{r,q} and c0 the dual of 1 in the power basis
    of omega over GF(q^r).  Row iii needs inner - a*id invertible on
    GF(q^r) (an r(t-1)-club); row iv needs it singular (an r(t-1)+1-club)."""
    n = ctx.n
    if r * t != n or t < 2:
        raise FactorizationMismatch(f"need n = r*t with t >= 2, got r={r}, t={t}")
    if inner is None:
        inner = (0, 1) if r >= 2 else (1,)
    inner = tuple(int(c) for c in inner)
    if len(inner) > r or any(not ctx.in_subfield(c, r) for c in inner):
        raise ConditionViolation("inner coefficients must lie in GF(q^r), degree < r")
    if not inner_is_scattered(ctx, inner, r):
        raise ConditionViolation("inner polynomial is not scattered on GF(q^r)")
    inner_ext = inner_as_qpoly(ctx, inner)

    def lin_map_invertible(a_):
        # inner - a*id on GF(q^r): injective iff no nonzero subfield kernel
        for z in ctx.subfield(r).tolist():
            if z and ctx.sub(inner_ext.evaluate(z), ctx.mul(a_, z)) == 0:
                return False
        return True

    want_invertible = row == "iii"
    if a is None:
        a = next((a_ for a_ in ctx.subfield(r).tolist()
                  if lin_map_invertible(a_) == want_invertible), None)
        if a is None:
            raise ConditionViolation("no eligible a in GF(q^r)")
    if not ctx.in_subfield(a, r):
        raise ConditionViolation("a must lie in GF(q^r)")
    if lin_map_invertible(a) != want_invertible:
        raise ConditionViolation(
            f"inner - a*id must be {'invertible' if want_invertible else 'singular'}"
            " over GF(q^r)")
    if omega is None:
        omega = next((w for w in range(ctx.order)
                      if element_degree(ctx, w, r) == t), None)
    if element_degree(ctx, omega, r) != t:
        raise ConditionViolation(f"omega={omega} must have degree t over GF(q^r)")

    g = minpoly_over(ctx, omega, r)          # degree t, monic
    gprime = 1
    for j in range(1, t):
        gprime = ctx.mul(gprime, ctx.sub(omega, ctx.frobenius(omega, r * j)))
    c0 = 0
    for j in range(t):
        c0 = ctx.add(c0, ctx.mul(g[j + 1], ctx.pow(omega, j)))
    c0 = ctx.div(c0, gprime)
    for m in range(t):
        want = 1 if m == 0 else 0
        if ctx.trace_rel(ctx.mul(c0, ctx.pow(omega, m)), r) != want:
            raise ClaimViolation("c0 fails the dual-of-1 property")

    tr_c0 = qpoly_compose(trace_poly(ctx, r), scale_poly(ctx, c0))
    poly = qpoly_add(qpoly_compose(inner_ext, tr_c0),
                     qpoly_scale(tr_c0, ctx.neg(a)))
    i_claim = r * (t - 1) + (0 if want_invertible else 1)
    _assert_classification(poly, f"table2.{row}", "club", i_claim)
    return FamilyResult(poly, f"table2.{row}",
                        {"r": r, "t": t, "inner": list(inner), "a": a,
                         "omega": omega})


def make_club_generic(ctx, row, **params):
    """table2.ii-iv dispatcher; row in {'ii','iii','iv'}."""
    if row == "ii":
        return _club_row_ii(ctx, params.get("lam"), params.get("omega"))
    if row in ("iii", "iv"):
        if "r" not in params or "t" not in params:
            raise ConditionViolation("rows iii/iv need r and t")
        return _club_row_iii_iv(ctx, row, params["r"], params["t"],
                                params.get("inner"), params.get("a"),
                                params.get("omega"))
    raise ConditionViolation(f"unknown table2 row {row!r}")


# ---------------------------------------------------------------------------
# table 3: two points of weight n/2
# ---------------------------------------------------------------------------


def _two_weight_row_i(ctx, eps=None, inner=None):
    """table3.i on n = 2t: Tr_{q^n/q^t}(inner(x/(eps^(q^t)-eps)))
    + Tr_{q^n/q^t}(eps^(q^t)*x/(eps^(q^t)-eps)), {1, eps} a GF(q^t)-basis,
    inner scattered in L_{t,q}."""
    n = ctx.n
    if n % 2:
        raise ConditionViolation("this family needs even n")
    t = n // 2
    if eps is None:
        eps = next(e for e in range(ctx.order) if not ctx.in_subfield(e, t))
    if ctx.in_subfield(eps, t):
        raise ConditionViolation("{1, eps} must be a GF(q^t)-basis, eps given is in GF(q^t)")
    if inner is None:
        inner = (0, 1)
    inner = tuple(int(c) for c in inner)
    if len(inner) > t or any(not ctx.in_subfield(c, t) for c in inner):
        raise ConditionViolation("inner coefficients must lie in GF(q^t), degree < t")
    if not inner_is_scattered(ctx, inner, t):
        raise ConditionViolation("inner polynomial is not scattered on GF(q^t)")
    eqt = ctx.frobenius(eps, t)
    c = ctx.inv(ctx.sub(eqt, eps))
    tr = trace_poly(ctx, t)
    term1 = qpoly_compose(tr, qpoly_compose(inner_as_qpoly(ctx, inner),
                                            scale_poly(ctx, c)))
    term2 = qpoly_compose(tr, scale_poly(ctx, ctx.mul(eqt, c)))
    poly = qpoly_add(term1, term2)
    _assert_classification(poly, "table3.i", "two_half", t)
    return FamilyResult(poly, "table3.i", {"eps": eps, "inner": list(inner)})


def _two_weight_row_ii(ctx, s=1, xi=None, mu=None, ubasis=None):
    """table3.ii on n = 2t: coefficients c_k = sum_l (u_l + u_l^(q^s) xi)
    (lam*_l)^(q^k), with (lam*_l) dual to the mu-twisted basis built from a
    GF(q)-basis (u_l) of GF(q^t) and {1, xi} a GF(q^t)-basis; side
    conditions gcd(s,t)=1, N_{q^t/q}(mu) != 1, N_{q^t/q}(-xi^(q^t+1) mu)
    != (-1)^t."""
    n = ctx.n
    if n % 2:
        raise ConditionViolation("this family needs even n")
    t = n // 2
    if math.gcd(s, t) != 1:
        raise ConditionViolation(f"gcd(s={s}, t={t}) != 1")
    sign = 1 if t % 2 == 0 else ctx.neg(1)                      # (-1)^t

    def mu_candidates(xi_):
        mxn = ctx.neg(ctx.mul(ctx.frobenius(xi_, t), xi_))      # -xi^(q^t+1)
        for m in ctx.subfield(t).tolist():
            if m and subfield_norm(ctx, m, t) != 1 \
                    and subfield_norm(ctx, ctx.mul(mxn, m), t) != sign:
                yield m

    if xi is None:
        # the two norm conditions couple xi and mu; search them jointly
        for xi_ in range(ctx.order):
            if ctx.in_subfield(xi_, t):
                continue
            found = mu if mu is not None else next(mu_candidates(xi_), None)
            if found is not None and found in set(mu_candidates(xi_)):
                xi, mu = xi_, found
                break
        if xi is None:
            raise NormViolation("no (xi, mu) passes both norm conditions")
    if ctx.in_subfield(xi, t):
        raise ConditionViolation("xi must generate {1, xi} as a GF(q^t)-basis")
    if mu is None:
        mu = next(mu_candidates(xi), None)
        if mu is None:
            raise NormViolation("no mu in GF(q^t) passes both norm conditions")
    minus_xi_norm = ctx.neg(ctx.mul(ctx.frobenius(xi, t), xi))
    if not ctx.in_subfield(mu, t) or subfield_norm(ctx, mu, t) == 1:
        raise NormViolation(f"mu={mu} needs N_(q^t/q)(mu) != 1")
    if subfield_norm(ctx, ctx.mul(minus_xi_norm, mu), t) == sign:
        raise NormViolation("mu fails N(-xi^(q^t+1) mu) != (-1)^t")
    us = list(ubasis) if ubasis is not None else _first_subfield_basis(ctx, t)
    if len(us) != t or rank_gfq(ctx, [ctx.digits_q(u) for u in us]) != t \
            or any(not ctx.in_subfield(u, t) for u in us):
        raise ConditionViolation("u basis must be a GF(q)-basis of GF(q^t)")
    twisted = [ctx.add(u, ctx.mul(ctx.mul(mu, ctx.frobenius(u, s)), xi)) for u in us]
    plain = [ctx.add(u, ctx.mul(ctx.frobenius(u, s), xi)) for u in us]
    basis = twisted + plain
    if not is_gfq_basis(ctx, basis):
        raise ConditionViolation("the twisted tuple is not a basis of GF(q^n)")
    duals = dual_basis(ctx, basis, 1)
    # f = sum_l plain_l * Tr(dual(plain_l) * x): the projection of GF(q^n)
    # onto the span of the plain vectors along the mu-twisted ones; pairing
    # each vector with its own dual is what makes the two half-weight
    # points appear (the alternative pairing fails the classification).
    coeffs = []
    for k in range(n):
        ck = 0
        for ell in range(t):
            ck = ctx.add(ck, ctx.mul(plain[ell], ctx.frobenius(duals[t + ell], k)))
        coeffs.append(ck)
    poly = QPolynomial(tuple(coeffs), ctx)
    _assert_classification(poly, "table3.ii", "two_half", t)
    return FamilyResult(poly, "table3.ii",
                        {"s": s, "xi": xi, "mu": mu, "ubasis": list(us)})


def make_two_weight(ctx, row, **params):
    """table3.i-ii dispatcher; row in {'i','ii'}."""
    if row == "i":
        return _two_weight_row_i(ctx, params.get("eps"), params.get("inner"))
    if row == "ii":
        return _two_weight_row_ii(ctx, params.get("s", 1), params.get("xi"),
                                  params.get("mu"), params.get("ubasis"))
    raise ConditionViolation(f"unknown table3 row {row!r}")


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------


def make_family(ctx, family_id, **params):
    """Build any table row by its CLI id, e.g. make_family(ctx, 'table1.i', s=1)."""
    fid = family_id.lower()
    if fid == "table1.i":
        return make_pseudoregulus(ctx, params.get("s", 1))
    if fid == "table1.ii":
        return make_lunardon_polverino(ctx, params.get("s", 1), params.get("delta"))
    if fid == "table1.iii":
        return make_bzz(ctx, params.get("s", 1), params.get("delta"),
                        params.get("ell"))
    if fid == "table1.iv":
        if params.get("delta") is None:
            raise ConditionViolation("table1.iv requires an explicit delta")
        return make_scattered_n6_iv(ctx, params["delta"])
    if fid == "table1.v":
        return make_scattered_n6_v(ctx, params.get("delta"))
    if fid == "table1.vi":
        return make_scattered_n8_vi(ctx, params.get("delta"))
    if fid == "table2.i":
        if "r" not in params or "t" not in params:
            raise FactorizationMismatch("table2.i needs r and t with n = r*t")
        return make_trace_club(ctx, params["r"], params["t"], params.get("s", 1))
    if fid.startswith("table2."):
        return make_club_generic(ctx, fid.split(".", 1)[1], **params)
    if fid.startswith("table3."):
        return make_two_weight(ctx, fid.split(".", 1)[1], **params)
    raise ConditionViolation(f"unknown family id {family_id!r}")


FAMILY_IDS = ("table1.i", "table1.ii", "table1.iii", "table1.iv", "table1.v",
              "table1.vi", "table2.i", "table2.ii", "table2.iii", "table2.iv",
              "table3.i", "table3.ii")

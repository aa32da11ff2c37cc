import numpy as np
import pytest

from linsetcodes.algebra import (QPolynomial, build_field, divisors,
                                 graph_field_of_linearity, is_prime,
                                 kernel_dimension, qpoly, qpoly_add,
                                 qpoly_compose, qpoly_monomial, qpoly_scale,
                                 subspace_field_of_linearity)
from linsetcodes.errors import (ContextMismatch, NonPrime, NotADivisor,
                                Reducible)


def test_default_irreducibles_are_the_documented_ones():
    assert build_field(2, 1, 3).ext_poly == (1, 1, 0, 1)   # x^3 + x + 1
    assert build_field(2, 1, 2).ext_poly == (1, 1, 1)      # x^2 + x + 1
    assert build_field(2, 2, 2).base_poly == (1, 1, 1)


def test_build_field_rejects_non_prime():
    with pytest.raises(NonPrime):
        build_field(4, 1, 3)


def test_build_field_rejects_reducible_override():
    with pytest.raises(Reducible):
        build_field(2, 1, 3, ext_poly=(0, 0, 0, 1))        # x^3
    with pytest.raises(Reducible):
        build_field(2, 1, 3, ext_poly=(1, 1, 0))           # wrong degree
    # a valid override is accepted: x^3 + x^2 + 1
    ctx = build_field(2, 1, 3, ext_poly=(1, 0, 1, 1))
    assert ctx.ext_poly == (1, 0, 1, 1)
    assert ctx.order == 8


@pytest.mark.parametrize("p,h,n", [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2)])
def test_field_axioms_exhaustive(p, h, n):
    ctx = build_field(p, h, n)
    els = list(ctx.elements())
    for a in els:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.mul(a, 0) == 0
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    for a in els:
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
    rng = np.random.default_rng(7)
    for _ in range(50):
        a, b, c = (int(v) for v in rng.integers(0, ctx.order, 3))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))


def test_vector_ops_match_scalar_ops():
    ctx = build_field(3, 1, 3)
    rng = np.random.default_rng(0)
    xs = rng.integers(0, ctx.order, 200)
    ys = rng.integers(0, ctx.order, 200)
    assert all(ctx.add_arr(xs, ys)[i] == ctx.add(int(xs[i]), int(ys[i]))
               for i in range(200))
    assert all(ctx.mul_arr(xs, ys)[i] == ctx.mul(int(xs[i]), int(ys[i]))
               for i in range(200))
    assert all(ctx.sub_arr(xs, ys)[i] == ctx.sub(int(xs[i]), int(ys[i]))
               for i in range(200))


def test_frobenius_is_an_automorphism_fixing_gfq():
    ctx = build_field(2, 2, 2)  # GF(16) over GF(4)
    for s in range(ctx.n + 1):
        for x in ctx.elements():
            for y in ctx.elements():
                assert ctx.frobenius(ctx.mul(x, y), s) == \
                    ctx.mul(ctx.frobenius(x, s), ctx.frobenius(y, s))
            assert ctx.frobenius(ctx.add(x, 3), s) == \
                ctx.add(ctx.frobenius(x, s), ctx.frobenius(3, s))
    for x in ctx.elements():
        assert ctx.frobenius(x, 0) == x
        assert ctx.frobenius(x, ctx.n) == x
    for lam in range(ctx.q):   # GF(q) is fixed pointwise
        assert ctx.frobenius(lam, 1) == lam


def test_frobenius_omega_example():
    ctx = build_field(2, 1, 2)
    w = 2
    assert ctx.frobenius(w, 1) == ctx.add(w, 1)


def test_norm_and_trace_examples():
    ctx = build_field(2, 1, 2)
    w = 2
    assert ctx.trace_rel(w, 1) == 1
    assert ctx.norm_rel(w, 1) == 1
    for x in ctx.elements():
        assert ctx.trace_rel(x, ctx.n) == x
        assert ctx.norm_rel(x, ctx.n) == x


def test_trace_surjective_and_contained():
    ctx = build_field(2, 1, 4)
    for r in divisors(ctx.n):
        sub = set(ctx.subfield(r).tolist())
        values = {ctx.trace_rel(x, r) for x in ctx.elements()}
        assert values <= sub
        assert values == sub  # onto the intermediate field
        norms = {ctx.norm_rel(x, r) for x in ctx.elements()}
        assert norms <= sub


def test_norm_trace_reject_non_divisor():
    ctx = build_field(2, 1, 4)
    with pytest.raises(NotADivisor):
        ctx.trace_rel(1, 3)
    with pytest.raises(NotADivisor):
        ctx.norm_rel(1, 3)


def test_qpoly_identity_and_eval():
    ctx = build_field(2, 1, 3)
    ident = qpoly(ctx, (1,))
    for x in ctx.elements():
        assert ident.evaluate(x) == x
    f = qpoly_monomial(ctx, 1)
    assert (f.values() == np.array([f.evaluate(x) for x in ctx.elements()])).all()


def test_qpoly_is_linear_over_gfq():
    ctx = build_field(3, 1, 3)
    rng = np.random.default_rng(3)
    f = QPolynomial(tuple(int(v) for v in rng.integers(0, ctx.order, ctx.n)), ctx)
    for _ in range(100):
        a, b = (int(v) for v in rng.integers(0, ctx.q, 2))
        x, y = (int(v) for v in rng.integers(0, ctx.order, 2))
        lhs = f.evaluate(ctx.add(ctx.mul(a, x), ctx.mul(b, y)))
        rhs = ctx.add(ctx.mul(a, f.evaluate(x)), ctx.mul(b, f.evaluate(y)))
        assert lhs == rhs


def test_qpoly_compose_square_example():
    ctx = build_field(2, 1, 3)
    f = qpoly_monomial(ctx, 1)
    ff = qpoly_compose(f, f)
    assert ff.coeffs == (0, 0, 1)
    for x in ctx.elements():
        assert ff.evaluate(x) == f.evaluate(f.evaluate(x))
    ident = qpoly(ctx, (1,))
    assert qpoly_compose(f, ident) == f
    assert qpoly_compose(ident, f) == f


def test_qpoly_compose_matches_pointwise_and_associates():
    ctx = build_field(2, 1, 4)
    rng = np.random.default_rng(11)
    for _ in range(20):
        f, g, h = (QPolynomial(tuple(int(v) for v in rng.integers(0, ctx.order, 4)), ctx)
                   for _ in range(3))
        fg = qpoly_compose(f, g)
        for x in list(ctx.elements())[:8]:
            assert fg.evaluate(x) == f.evaluate(g.evaluate(x))
        assert qpoly_compose(qpoly_compose(f, g), h) == \
            qpoly_compose(f, qpoly_compose(g, h))


def test_qpoly_add_scale():
    ctx = build_field(3, 1, 2)
    f = qpoly(ctx, (1, 2))
    g = qpoly(ctx, (0, 5))
    s = qpoly_add(f, g)
    for x in ctx.elements():
        assert s.evaluate(x) == ctx.add(f.evaluate(x), g.evaluate(x))
    sc = qpoly_scale(f, 4)
    for x in ctx.elements():
        assert sc.evaluate(x) == ctx.mul(4, f.evaluate(x))


def test_context_mismatch_raises():
    a = build_field(2, 1, 3)
    b = build_field(2, 1, 3, ext_poly=(1, 0, 1, 1))
    with pytest.raises(ContextMismatch):
        qpoly_add(qpoly_monomial(a, 1), qpoly_monomial(b, 1))


def test_kernel_dimension_examples():
    ctx = build_field(2, 1, 3)
    assert kernel_dimension(qpoly_monomial(ctx, 1)) == 0
    assert kernel_dimension(qpoly(ctx, (1, 1, 1))) == 2
    assert kernel_dimension(qpoly(ctx, ())) == 3


@pytest.mark.parametrize("p,h,n", [(2, 1, 4), (3, 1, 3), (2, 2, 2)])
def test_image_times_kernel_is_field_order(p, h, n):
    ctx = build_field(p, h, n)
    rng = np.random.default_rng(5)
    for _ in range(30):
        f = QPolynomial(tuple(int(v) for v in rng.integers(0, ctx.order, n)), ctx)
        image = len(set(f.values().tolist()))
        assert image * ctx.q ** kernel_dimension(f) == ctx.order


def test_subspace_field_of_linearity():
    ctx = build_field(2, 1, 3)
    assert graph_field_of_linearity(qpoly_monomial(ctx, 1)) == 1
    # the full line GF(q^n) x {0}
    full = [(x, 0) for x in ctx.elements()]
    assert subspace_field_of_linearity(ctx, full) == 3
    ctx16 = build_field(2, 1, 4)
    assert graph_field_of_linearity(qpoly_monomial(ctx16, 2)) == 2
    # basis input expands to the same answer
    basis = [(ctx.q**j, 0) for j in range(3)]
    assert subspace_field_of_linearity(ctx, basis, is_basis=True) == 3


def test_encoding_round_trip_and_serialization():
    ctx = build_field(3, 1, 2)
    for x in ctx.elements():
        assert ctx.from_digits_q(ctx.digits_q(x)) == x
    f = qpoly(ctx, (4, 7))
    assert QPolynomial.parse(f.serialize(), ctx) == f
    assert ctx.serialize()["p"] == 3


def test_generator_has_full_order():
    for args in [(2, 1, 3), (3, 1, 2), (2, 2, 2)]:
        ctx = build_field(*args)
        g = ctx.generator
        seen = set()
        x = 1
        for _ in range(ctx.order - 1):
            seen.add(x)
            x = ctx.mul(x, g)
        assert x == 1 and len(seen) == ctx.order - 1


def test_is_prime_small():
    assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]

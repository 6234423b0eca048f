import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussquad import jets
from gaussquad.jets import INDEX, Jet3

us, vs = sp.symbols("u v")


def sympy_partials(expr, u0, v0):
    """Reference partials of a sympy expression, used as an independent oracle."""
    out = []
    for i, j in INDEX:
        d = expr
        if i:
            d = sp.diff(d, us, i)
        if j:
            d = sp.diff(d, vs, j)
        out.append(float(d.subs({us: u0, vs: v0})))
    return out


def assert_jet(jet, ref, rtol=1e-12):
    for (i, j), want in zip(INDEX, ref):
        got = float(jet.d(i, j))
        assert got == pytest.approx(want, rel=rtol, abs=rtol), (i, j)


@pytest.mark.parametrize("u0,v0", [(0.3, -0.7), (1.2, 0.4), (-0.9, 2.1)])
def test_composite_against_symbolic_oracle(u0, v0):
    u, v = jets.seed_vars(u0, v0)
    f = jets.sin(u * v) * jets.exp(v) / (1.0 + u * u + v * v) + jets.sqrt(2.0 + u * u)
    ref = sp.sin(us * vs) * sp.exp(vs) / (1 + us**2 + vs**2) + sp.sqrt(2 + us**2)
    assert_jet(f, sympy_partials(ref, u0, v0))


@pytest.mark.parametrize("name,sym", [
    ("sin", sp.sin), ("cos", sp.cos), ("sinh", sp.sinh), ("cosh", sp.cosh),
    ("exp", sp.exp), ("sqrt", sp.sqrt)])
def test_elementary_functions(name, sym):
    u0, v0 = 0.6, 0.8
    u, v = jets.seed_vars(u0, v0)
    arg = u * u + 0.5 * v
    assert_jet(jets.elementary(name, arg), sympy_partials(sym(us**2 + vs / 2), u0, v0))


def test_real_power_and_reciprocal():
    u, v = jets.seed_vars(0.4, 1.1)
    base = 1.0 + u * u + 2.0 * v * v
    ref = 1 + us**2 + 2 * vs**2
    assert_jet(jets.power(base, -1.5), sympy_partials(ref ** sp.Rational(-3, 2), 0.4, 1.1))
    assert_jet(jets.reciprocal(base), sympy_partials(1 / ref, 0.4, 1.1))
    assert_jet(jets.pow_int(base, -3), sympy_partials(ref**-3, 0.4, 1.1))


def test_finite_difference_cross_check():
    f = lambda a, b: math.exp(a) * math.cos(a * b)
    u0, v0, h = 0.5, -0.3, 1e-4
    u, v = jets.seed_vars(u0, v0)
    jet = jets.exp(u) * jets.cos(u * v)
    fd_uv = (f(u0 + h, v0 + h) - f(u0 + h, v0 - h) - f(u0 - h, v0 + h) + f(u0 - h, v0 - h)) / (4 * h * h)
    assert jet.d(1, 1) == pytest.approx(fd_uv, rel=1e-6)


def test_polynomials_are_exact_to_order_three():
    u, v = jets.seed_vars(2.0, -1.0)
    p = u ** 3 - 3.0 * u * v * v + 2.0 * v
    # d^3/du^3 = 6, d^3/dudv^2 = -6, other third partials vanish
    assert p.d(3, 0) == 6.0
    assert p.d(1, 2) == -6.0
    assert p.d(2, 1) == 0.0 and p.d(0, 3) == 0.0
    assert p.value == 8.0 - 6.0 - 2.0


def test_vectorized_matches_scalar():
    pts = np.array([[0.1, 0.2], [0.7, -0.4], [1.5, 0.9]])
    u, v = jets.seed_vars(pts[:, 0], pts[:, 1])
    vec = jets.sqrt(1.0 + u * u * v * v) * jets.sin(u)
    for k, (a, b) in enumerate(pts):
        su, sv = jets.seed_vars(a, b)
        sc = jets.sqrt(1.0 + su * su * sv * sv) * jets.sin(su)
        for i, j in INDEX:
            assert vec.d(i, j)[k] == pytest.approx(sc.d(i, j), rel=1e-14, abs=1e-14)


def test_ndarray_on_the_left_defers_to_jet():
    u, _ = jets.seed_vars(np.array([1.0, 2.0]), np.array([0.0, 0.0]))
    out = np.array([3.0, 4.0]) * u
    assert isinstance(out, Jet3)
    np.testing.assert_allclose(out.value, [3.0, 8.0])


def test_differentiation_lowers_order():
    u, v = jets.seed_vars(1.0, 2.0)
    f = u * u * v
    fu = f.du()
    assert fu.order == 2
    assert fu.value == pytest.approx(4.0)
    assert fu.dv().value == pytest.approx(2.0)
    with pytest.raises(IndexError):
        fu.d(3, 0)


def test_domain_errors():
    u, v = jets.seed_vars(0.0, 1.0)
    with pytest.raises(jets.SingularJetError):
        jets.reciprocal(u)
    with pytest.raises(jets.JetDomainError):
        jets.sqrt(u - 1.0)
    with pytest.raises(ValueError):
        jets.elementary("tan", u)
    with pytest.raises(ValueError):
        jets.combine("pow", u, v)


def test_combine_dispatch():
    u, v = jets.seed_vars(1.5, 0.5)
    q = jets.combine("div", u, v)
    assert q.value == pytest.approx(3.0)
    assert q.d(0, 1) == pytest.approx(-1.5 / 0.25)


finite = st.floats(-2.0, 2.0, allow_nan=False)


def random_jet(seed):
    r = np.random.default_rng(seed)
    return Jet3(list(r.uniform(-1, 1, len(INDEX))))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_ring_laws(s1, s2, s3):
    a, b, c = random_jet(s1), random_jet(s2), random_jet(s3)
    for lhs, rhs in [((a * b) * c, a * (b * c)), (a * (b + c), a * b + a * c), (a * b, b * a)]:
        np.testing.assert_allclose(lhs.c, rhs.c, rtol=1e-12, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(finite, finite)
def test_inverse_and_root_laws(u0, v0):
    u, v = jets.seed_vars(u0, v0)
    x = 1.0 + u * u + jets.sin(v) ** 2
    one = x * jets.reciprocal(x)
    np.testing.assert_allclose(one.c, [1.0] + [0.0] * 9, atol=1e-12)
    sq = jets.sqrt(x)
    np.testing.assert_allclose((sq * sq).c, x.c, rtol=1e-12, atol=1e-12)

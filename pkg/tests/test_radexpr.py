from fractions import Fraction as Fr

import math

import pytest

from gaussquad.exact.operators import kind1_basis, kind2_basis
from gaussquad.exact.qpoly import QPoly, U, V
from gaussquad.exact.radexpr import RadExpr, RadicalBasis, rational_sqrt

OMEGA = 1 + 2 * U**2 + V**2
PHI = 1 + 6 * U**2 + 2 * V**2
BASIS = RadicalBasis(("omega", "Phi"), (OMEGA, PHI))


def rad(exps, p=1):
    return RadExpr.radical(BASIS, exps, p)


def test_bucket_soundness_square_of_root():
    root = rad((1, 0))
    diff = root * root - RadExpr.poly(BASIS, OMEGA)
    assert diff.is_zero()
    assert diff.buckets() == {}


def test_bucket_soundness_mixed():
    # sqrt(omega*Phi) * sqrt(omega) / omega - sqrt(Phi) vanishes identically
    e = rad((1, 1)) * rad((1, 0)) * rad((-2, 0)) - rad((0, 1))
    assert e.is_zero()
    e2 = rad((3, -1), U) - rad((1, -1), U * OMEGA)
    assert e2.is_zero()


def test_nonzero_expression_keeps_buckets_apart():
    e = rad((1, 0)) + rad((0, 1)) + 1
    assert set(e.buckets()) == {(1, 0), (0, 1), (0, 0)}
    assert not e.is_zero()


def test_canonical_form_cancels_common_factors():
    e = rad((1, -1), OMEGA * U)
    exps, num = e.single_term()
    assert exps == (3, -1) and num == U


def test_derivative_matches_finite_difference():
    e = rad((1, -3), U * V + 2)
    for which, (du, dv) in (("u", (1, 0)), ("v", (0, 1))):
        d = e.derive_u() if which == "u" else e.derive_v()
        u0, v0, h = 0.3, -0.4, 1e-6
        fd = (e.evalf(u0 + h * du, v0 + h * dv) - e.evalf(u0 - h * du, v0 - h * dv)) / (2 * h)
        assert d.evalf(u0, v0) == pytest.approx(fd, rel=1e-7)


def test_product_rule():
    f, g = rad((1, 0), U), rad((0, -1), V + 1)
    assert (f * g).derive_u() == f.derive_u() * g + f * g.derive_u()


def test_evalf():
    e = rad((1, -1), U)
    u0, v0 = 0.5, 0.25
    want = u0 * math.sqrt(OMEGA.evalf(u0, v0)) / math.sqrt(PHI.evalf(u0, v0))
    assert e.evalf(u0, v0) == pytest.approx(want, rel=1e-15)


def test_constant_base_is_folded():
    # a = b = -1 makes Phi = c, a perfect square for c = 4
    basis = kind1_basis(-1, -1, 4)
    e = RadExpr.radical(basis, (0, -1), U)
    assert e.single_term() == ((0, 0), U * Fr(1, 2))
    odd = RadExpr.radical(kind1_basis(-1, -1, 2), (0, -3), U)
    assert odd.single_term() == ((0, 1), U * Fr(1, 4))


def test_rational_sqrt():
    assert rational_sqrt(Fr(9, 4)) == Fr(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


def test_basis_mismatch():
    other = kind2_basis(1, 1)
    with pytest.raises(ValueError):
        rad((1, 0)) + RadExpr.radical(other, (1,))
    with pytest.raises(ValueError):
        RadExpr(BASIS, {(1,): QPoly.const(1)})

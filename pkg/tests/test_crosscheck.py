from fractions import Fraction as Fr

import numpy as np
import pytest

from gaussquad import crosscheck as CC
from gaussquad.surfaces import quadric1


def test_blended_error():
    np.testing.assert_allclose(CC.blended_error([1.0, 101.0], [0.0, 100.0]), [1.0, 1 / 101])


@pytest.mark.parametrize("kind,a,b,c", [(1, 2, 1, 1), (1, -1, -1, 4), (1, Fr(-1, 2), -1, 3),
                                        (2, 1, 1, None), (2, 2, 3, None)])
def test_operator_triangulation(kind, a, b, c):
    out = CC.operator_triangulation(kind, a, b, c, count=200)
    assert out["points"] == 200
    assert out["generic_vs_closed"] <= CC.OPERATOR_TOL
    if kind == 1 and a == b == -1:
        assert out["generic_vs_reduced"] <= CC.OPERATOR_TOL
    else:
        assert "generic_vs_reduced" not in out


def test_rational_points_are_dyadic_and_distinct():
    s = quadric1(-1, -1, 1)
    pts = CC.rational_points(s, 20)
    assert len(set(pts)) == 20
    assert all(p.denominator <= 64 and q.denominator <= 64 for p, q in pts)
    assert all(s.admissible(float(p), float(q)) for p, q in pts)


@pytest.mark.parametrize("kind,a,b,c", [(1, 2, 1, 1), (1, -1, -1, 4), (2, 1, 2, None)])
def test_numeric_symbolic(kind, a, b, c):
    out = CC.numeric_symbolic(kind, Fr(a), Fr(b), Fr(c) if c else None)
    assert len(out["points"]) == 20
    assert out["max_error"] <= CC.SYMBOLIC_TOL

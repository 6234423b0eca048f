import numpy as np
import pytest
import sympy as sp

from gaussquad import beltrami as B
from gaussquad import jets
from gaussquad import surfaces as S
from gaussquad.finitetype import sample_points


def pts(surface, n=40, seed=11):
    p = np.asarray(sample_points(surface, n, seed))
    return p[:, 0], p[:, 1]


def symbolic_laplacian(xyz, f, u, v):
    """Independent sympy evaluation of -div grad for a chart and a field."""
    X = sp.Matrix(xyz)
    xu, xv = X.diff(u), X.diff(v)
    E, F, G = xu.dot(xu), xu.dot(xv), xv.dot(xv)
    det = sp.simplify(E * G - F * F)
    root = sp.sqrt(det)
    fu, fv = sp.diff(f, u), sp.diff(f, v)
    flux_u = root * (G * fu - F * fv) / det
    flux_v = root * (-F * fu + E * fv) / det
    return -(sp.diff(flux_u, u) + sp.diff(flux_v, v)) / root


def test_against_sympy_on_torus():
    u, v = sp.symbols("u v")
    R, r = 3, 1
    xyz = [(R + r * sp.cos(v)) * sp.cos(u), (R + r * sp.cos(v)) * sp.sin(u), r * sp.sin(v)]
    f = u * sp.sin(v) + v ** 2
    lap = sp.lambdify((u, v), symbolic_laplacian(xyz, f, u, v))
    field = B.coordinate(lambda a, b: a * jets.sin(b) + b * b)
    uu, vv = pts(S.torus(R, r), 12)
    got = B.laplace_scalar(S.torus(R, r), field, uu, vv)
    np.testing.assert_allclose(got, lap(uu, vv), rtol=1e-11, atol=1e-12)


def test_plane_is_minus_flat_laplacian():
    s = S.plane()
    u, v = pts(s)
    got = B.laplace_scalar(s, B.coordinate(lambda a, b: a * a * b + b ** 3), u, v)
    np.testing.assert_allclose(got, -(2 * v + 6 * v), atol=1e-12)


def test_sphere_coordinates_are_eigenfunctions():
    s = S.sphere(2.0)
    u, v = pts(s)
    geo = S.local_geometry(s, u, v)
    x = np.stack([c.value for c in geo.x], axis=-1)
    lap = B.laplace_vector(s, [B.position(i) for i in range(3)], u, v)
    np.testing.assert_allclose(lap, 0.5 * x, atol=1e-13)


def test_constants_are_harmonic():
    s = S.torus()
    np.testing.assert_allclose(B.laplace_scalar(s, B.constant(3.0), *pts(s)), 0.0, atol=1e-13)


def test_minimal_surfaces_have_harmonic_position():
    for s in (S.catenoid(), S.helicoid()):
        lap = B.laplace_vector(s, [B.position(i) for i in range(3)], *pts(s))
        np.testing.assert_allclose(lap, 0.0, atol=1e-12)


def test_gradient_of_height_on_plane_graph():
    s = S.quadric2(1.0, 1.0)
    grad = B.grad_surface(s, B.position(2), 0.0, 0.0)
    np.testing.assert_allclose(grad, 0.0, atol=1e-15)
    g = B.grad_surface(s, B.coordinate(lambda a, b: a), 1.0, 0.0)
    # tangent gradient of u is x_u / |x_u|^2 when F = 0
    np.testing.assert_allclose(g, np.array([1.0, 0.0, 1.0]) / 2.0, atol=1e-14)


@pytest.mark.parametrize("surface", S.zoo(), ids=lambda s: s.name)
def test_structural_identities(surface):
    u, v = pts(surface, 60)
    chk = B.identity_check(surface, u, v)
    assert np.max(chk.res_x / chk.scale_x) <= 1e-10
    assert np.max(chk.res_n / chk.scale_n) <= 1e-10


@pytest.mark.parametrize("abc", [(2, 1, 1), (-0.5, -1, 3), (1, -2, 2), (-1, -1, 4)])
def test_closed_form_q1(abc):
    s = S.quadric1(*abc)
    u, v = pts(s)
    for f in [B.normal(0), B.normal(2), B.position(2), B.coordinate(lambda a, b: a * b)]:
        np.testing.assert_allclose(B.closed_form_q1(*abc, f, u, v),
                                   B.laplace_scalar(s, f, u, v), rtol=1e-10, atol=1e-10)


def test_reduced_sphere_operator():
    s = S.quadric1(-1, -1, 4)
    u, v = pts(s)
    for i in range(3):
        f = B.normal(i)
        np.testing.assert_allclose(B.closed_form_sphere(4, f, u, v),
                                   B.laplace_scalar(s, f, u, v), rtol=1e-10, atol=1e-10)


def test_sphere_normal_eigenvalue():
    # n1 = -a u / sqrt(Phi) = u / 2 on z^2 + x^2 + y^2 = 4, eigenvalue 2/c
    s = S.quadric1(-1, -1, 4)
    u, v = pts(s)
    lap = B.laplace_scalar(s, B.normal(0), u, v)
    np.testing.assert_allclose(lap, 0.5 * (u / 2.0), atol=1e-12)
    lap3 = B.laplace_scalar(s, B.normal(2), u, v)
    np.testing.assert_allclose(lap3, 0.5 * np.sqrt(4 - u * u - v * v) / 2.0, atol=1e-12)


@pytest.mark.parametrize("ab", [(1, 1), (1, 2), (2, 3)])
def test_closed_form_q2(ab):
    s = S.quadric2(*ab)
    u, v = pts(s)
    for f in [B.normal(0), B.normal(1), B.normal(2), B.position(2)]:
        np.testing.assert_allclose(B.closed_form_q2(*ab, f, u, v),
                                   B.laplace_scalar(s, f, u, v), rtol=1e-10, atol=1e-10)


def test_identity_residuals_shape():
    s = S.torus()
    u, v = pts(s, 15)
    rx, rn = B.identity_residuals(s, u, v)
    assert rx.shape == rn.shape == (15,)


def test_order_one_jet_rejected():
    s = S.plane()
    with pytest.raises(ValueError):
        B.laplace_scalar(s, B.mean_curvature(), 0.1, 0.2)

"""
Beltrami-Laplace operator and surface gradient of the first fundamental form.

Sign convention: ``laplace`` is the *negative* of div(grad), so the
coordinate functions of a sphere of radius r are eigenfunctions with the
positive eigenvalue 2/r^2.

Scalar fields are callables ``field(geo) -> Jet3`` taking a
:class:`~gaussquad.surfaces.LocalGeometry`; the helpers below build the
common ones.
"""

from dataclasses import dataclass

import numpy as np

from . import jets
from .surfaces import local_geometry, quadric1, quadric2


# -- scalar fields ---------------------------------------------------------

def position(i):
    def field(geo):
        return geo.x[i]
    field.__name__ = f"x{i + 1}"
    return field


def normal(i):
    def field(geo):
        return geo.normal[i]
    field.__name__ = f"n{i + 1}"
    return field


def constant(k):
    def field(geo):
        return jets.Jet3.constant(float(k), like=np.asarray(geo.u, dtype=float) * 0.0)
    field.__name__ = f"const({k})"
    return field


def mean_curvature(scale=1.0):
    """H (times ``scale``); order-1 jet, enough for the gradient only."""
    def field(geo):
        return scale * geo.mean_curvature()
    field.__name__ = "H" if scale == 1.0 else f"{scale:g}H"
    return field


def coordinate(fn, name="f"):
    """Field given directly as ``fn(u_jet, v_jet)`` in chart coordinates."""
    def field(geo):
        uj, vj = jets.seed_vars(geo.u, geo.v)
        return fn(uj, vj)
    field.__name__ = name
    return field


# -- generic operators -----------------------------------------------------

def _laplace(geo, f):
    if f.order < 2:
        raise ValueError("the Laplacian needs an order-2 jet")
    m = geo.metric
    root = jets.sqrt(m.detg)
    fu, fv = f.du(), f.dv()
    flux_u = root * (m.inv_uu * fu + m.inv_uv * fv)
    flux_v = root * (m.inv_uv * fu + m.inv_vv * fv)
    div = flux_u.du().value + flux_v.dv().value
    return -div / root.value


def _gradient(geo, f):
    m = geo.metric
    fu, fv = f.d(1, 0), f.d(0, 1)
    cu = m.inv_uu.value * fu + m.inv_uv.value * fv
    cv = m.inv_uv.value * fu + m.inv_vv.value * fv
    return np.stack([cu * geo.x_u[k].value + cv * geo.x_v[k].value for k in range(3)], axis=-1)


def laplace_scalar(surface, field, u, v):
    """Beltrami-Laplace operator applied to a scalar field, in divergence form.

    -(1/sqrt g) [ d_u(sqrt g (g^uu f_u + g^uv f_v)) + d_v(sqrt g (g^uv f_u + g^vv f_v)) ]
    """
    geo = local_geometry(surface, u, v)
    return _laplace(geo, field(geo))


def laplace_vector(surface, fields, u, v):
    geo = local_geometry(surface, u, v)
    return np.stack([_laplace(geo, f(geo)) for f in fields], axis=-1)


def grad_surface(surface, field, u, v):
    """Surface gradient of ``field`` pushed into ambient coordinates."""
    geo = local_geometry(surface, u, v)
    return _gradient(geo, field(geo))


# -- closed-form operators for the quadrics ---------------------------------

def _partials(surface, field, u, v):
    geo = local_geometry(surface, u, v)
    f = field(geo)
    return f.d(1, 0), f.d(0, 1), f.d(2, 0), f.d(1, 1), f.d(0, 2)


def closed_form_q1(a, b, c, field, u, v):
    """Closed-form Laplacian on z = sqrt(c + a u^2 + b v^2).

    Only the field's chart partials are taken from the jets; the operator
    coefficients come from omega, Phi and Psi directly.
    """
    fu, fv, fuu, fuv, fvv = _partials(quadric1(a, b, c), field, u, v)
    a, b, c = float(a), float(b), float(c)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    omega = c + a * u ** 2 + b * v ** 2
    phi = c + a * (a + 1) * u ** 2 + b * (b + 1) * v ** 2
    psi = a * c + b * c + a * b * (a + 1) * u ** 2 + a * b * (b + 1) * v ** 2
    second = (omega + b * b * v * v) * fuu - 2 * a * b * u * v * fuv + (omega + a * a * u * u) * fvv
    first = a * u * fu + b * v * fv
    return -second / phi + psi / phi ** 2 * first


def closed_form_sphere(c, field, u, v):
    """Reduced operator for a = b = -1 (sphere of radius sqrt(c))."""
    fu, fv, fuu, fuv, fvv = _partials(quadric1(-1, -1, c), field, u, v)
    c = float(c)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return ((u * u - c) * fuu + 2 * u * v * fuv + (v * v - c) * fvv
            + 2 * u * fu + 2 * v * fv) / c


def closed_form_q2(a, b, field, u, v):
    """Closed-form Laplacian on z = a u^2/2 + b v^2/2."""
    fu, fv, fuu, fuv, fvv = _partials(quadric2(a, b), field, u, v)
    a, b = float(a), float(b)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    X = 1 + a * a * u * u
    Y = 1 + b * b * v * v
    g = 1 + a * a * u * u + b * b * v * v
    return (-(Y * fuu + X * fvv - 2 * a * b * u * v * fuv) / g
            + (a * Y + b * X) / g ** 2 * (a * u * fu + b * v * fv))


# -- structural identities --------------------------------------------------

@dataclass
class IdentityCheck:
    """Both sides of the position and Gauss-map identities at sample points.

    ``lap_x`` should equal ``-2 H n``; ``lap_n`` should equal
    ``grad(2H) + (4H^2 - 2K) n``.
    """

    lap_x: np.ndarray
    lap_n: np.ndarray
    H: np.ndarray
    K: np.ndarray
    normal: np.ndarray
    grad_2H: np.ndarray

    @property
    def res_x(self):
        return np.linalg.norm(self.lap_x + 2 * self.H[..., None] * self.normal, axis=-1)

    @property
    def res_n(self):
        rhs = self.grad_2H + (4 * self.H ** 2 - 2 * self.K)[..., None] * self.normal
        return np.linalg.norm(self.lap_n - rhs, axis=-1)

    @property
    def scale_x(self):
        return 1.0 + np.linalg.norm(self.lap_x, axis=-1)

    @property
    def scale_n(self):
        return 1.0 + np.linalg.norm(self.lap_n, axis=-1)


def identity_check(surface, u, v):
    geo = local_geometry(surface, u, v)
    lap_x = np.stack([_laplace(geo, c) for c in geo.x], axis=-1)
    lap_n = np.stack([_laplace(geo, c) for c in geo.normal], axis=-1)
    Hj = geo.mean_curvature()
    K = geo.gauss_curvature().value
    normal = np.stack([c.value for c in geo.normal], axis=-1)
    return IdentityCheck(lap_x, lap_n, np.asarray(Hj.value), np.asarray(K),
                         normal, _gradient(geo, 2.0 * Hj))


def identity_residuals(surface, u, v):
    """``(|lap x + 2 H n|, |lap n - grad 2H - (4H^2 - 2K) n|)``."""
    chk = identity_check(surface, u, v)
    return chk.res_x, chk.res_n

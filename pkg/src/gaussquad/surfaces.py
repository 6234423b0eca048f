"""
Parametric surfaces, fundamental forms, Gauss map and curvatures.

Every surface maps ``(u, v)`` to a triple of :class:`~gaussquad.jets.Jet3`
carrying the position and its partials to order 3. Fundamental forms and the
unit normal are derived from those jets, so everything downstream inherits
machine-precision derivatives.

Orientation is fixed once: ``n = (x_u x x_v) / sqrt(det g)``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import jets
from .jets import Jet3

#: minimum of omega = c + a u^2 + b v^2 (and of Phi) admitted on quadrics of the first kind
OMEGA_MIN = 0.05
PHI_MIN = 0.05
#: smallest admissible det g
DETG_FLOOR = 1e-10
#: distance kept from the seam of angular charts
SEAM_MARGIN = 0.1

KINDS = ("quadric1", "quadric2", "plane", "circular_cylinder", "sphere",
         "torus", "catenoid", "helicoid", "graph")


class OutOfDomainError(ValueError):
    """Evaluation point outside the admissible set of a surface."""


class DegenerateMetricError(ArithmeticError):
    """First fundamental form is singular at the evaluation point."""


@dataclass(frozen=True, eq=False)
class SurfacePatch:
    """A named parametric surface with a rectangular sampling domain.

    ``params`` holds the kind-specific parameters; ``domain`` is
    ``(umin, umax, vmin, vmax)``. Construct through the helper functions
    (:func:`quadric1`, :func:`sphere`, ...) which validate parameters.
    """

    name: str
    kind: str
    params: dict = field(default_factory=dict)
    domain: tuple = (-2.0, 2.0, -2.0, 2.0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown surface kind {self.kind!r}")
        umin, umax, vmin, vmax = self.domain
        if not (umin < umax and vmin < vmax):
            raise ValueError(f"empty domain {self.domain}")
        _validate(self.kind, self.params)

    def admissible(self, u, v):
        """Boolean mask of points inside the domain and above the kind's floors."""
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        umin, umax, vmin, vmax = self.domain
        ok = (u >= umin) & (u <= umax) & (v >= vmin) & (v <= vmax)
        if self.kind == "quadric1":
            a, b, c = (float(self.params[k]) for k in "abc")
            omega = c + a * u ** 2 + b * v ** 2
            phi = c + a * (a + 1) * u ** 2 + b * (b + 1) * v ** 2
            ok &= (omega >= OMEGA_MIN) & (phi >= PHI_MIN)
        return ok

    def evaluate(self, u, v):
        """Position jets ``(x, y, z)`` at ``(u, v)``; scalars or arrays."""
        u = _as_float(u)
        v = _as_float(v)
        if self.kind == "quadric1":
            a, b, c = (float(self.params[k]) for k in "abc")
            omega = c + a * np.square(u) + b * np.square(v)
            phi = c + a * (a + 1) * np.square(u) + b * (b + 1) * np.square(v)
            if np.any(omega < OMEGA_MIN) or np.any(phi < PHI_MIN):
                raise OutOfDomainError(
                    f"{self.name}: omega or Phi below floor at requested point(s)")
        uj, vj = jets.seed_vars(u, v)
        return _POSITION[self.kind](uj, vj, self.params)


def _as_float(x):
    if np.ndim(x):
        return np.asarray(x, dtype=float)
    return float(x)


def _validate(kind, p):
    def need(*keys):
        missing = [k for k in keys if k not in p]
        if missing:
            raise ValueError(f"{kind} needs parameters {missing}")

    if kind == "quadric1":
        need("a", "b", "c")
        if float(p["a"]) * float(p["b"]) == 0:
            raise ValueError("quadric1 requires a*b != 0")
        if float(p["c"]) <= 0:
            raise ValueError("quadric1 requires c > 0")
    elif kind == "quadric2":
        need("a", "b")
        if float(p["a"]) <= 0 or float(p["b"]) <= 0:
            raise ValueError("quadric2 requires a > 0 and b > 0")
    elif kind in ("circular_cylinder", "sphere", "catenoid"):
        need("r")
        if float(p["r"]) <= 0:
            raise ValueError(f"{kind} radius must be positive")
    elif kind == "torus":
        need("R", "r")
        if not 0 < float(p["r"]) < float(p["R"]):
            raise ValueError("torus requires 0 < r < R")
    elif kind == "helicoid":
        need("h")
        if float(p["h"]) == 0:
            raise ValueError("helicoid pitch must be nonzero")
    elif kind == "graph":
        need("terms")


# -- position maps ---------------------------------------------------------

def _quadric1(u, v, p):
    a, b, c = (float(p[k]) for k in "abc")
    omega = a * u * u + b * v * v + c
    return u, v, jets.sqrt(omega)


def _quadric2(u, v, p):
    a, b = float(p["a"]), float(p["b"])
    return u, v, 0.5 * a * u * u + 0.5 * b * v * v


def _plane(u, v, p):
    return u, v, Jet3.constant(0.0, like=u.value)


def _cylinder(u, v, p):
    r = float(p["r"])
    return r * jets.cos(u), r * jets.sin(u), v


def _sphere(u, v, p):
    r = float(p["r"])
    cv = jets.cos(v)
    return r * cv * jets.cos(u), r * cv * jets.sin(u), r * jets.sin(v)


def _torus(u, v, p):
    R, r = float(p["R"]), float(p["r"])
    ring = R + r * jets.cos(v)
    return ring * jets.cos(u), ring * jets.sin(u), r * jets.sin(v)


def _catenoid(u, v, p):
    r = float(p["r"])
    rad = r * jets.cosh(v / r)
    return rad * jets.cos(u), rad * jets.sin(u), v


def _helicoid(u, v, p):
    h = float(p["h"])
    return v * jets.cos(u), v * jets.sin(u), h * u


def _graph(u, v, p):
    z = Jet3.constant(0.0, like=u.value)
    for (i, j), coef in p["terms"].items():
        z = z + float(coef) * jets.pow_int(u, i) * jets.pow_int(v, j)
    return u, v, z


_POSITION = {
    "quadric1": _quadric1,
    "quadric2": _quadric2,
    "plane": _plane,
    "circular_cylinder": _cylinder,
    "sphere": _sphere,
    "torus": _torus,
    "catenoid": _catenoid,
    "helicoid": _helicoid,
    "graph": _graph,
}


# -- constructors ----------------------------------------------------------

_ANGLE = (-math.pi + SEAM_MARGIN, math.pi - SEAM_MARGIN)
_LATITUDE = (-math.pi / 2 + SEAM_MARGIN, math.pi / 2 - SEAM_MARGIN)


def quadric1(a, b, c, domain=(-2.0, 2.0, -2.0, 2.0), name=None):
    """z^2 - a x^2 - b y^2 = c as the graph z = sqrt(c + a u^2 + b v^2)."""
    return SurfacePatch(name or f"quadric1(a={a},b={b},c={c})", "quadric1",
                        {"a": a, "b": b, "c": c}, tuple(domain))


def quadric2(a, b, domain=(-2.0, 2.0, -2.0, 2.0), name=None):
    """z = a u^2 / 2 + b v^2 / 2."""
    return SurfacePatch(name or f"quadric2(a={a},b={b})", "quadric2",
                        {"a": a, "b": b}, tuple(domain))


def plane(domain=(-2.0, 2.0, -2.0, 2.0), name="plane"):
    return SurfacePatch(name, "plane", {}, tuple(domain))


def circular_cylinder(r=2.0, domain=None, name=None):
    return SurfacePatch(name or f"circular_cylinder(r={r})", "circular_cylinder",
                        {"r": r}, tuple(domain or (*_ANGLE, -2.0, 2.0)))


def sphere(r=2.0, domain=None, name=None):
    """Longitude/latitude chart, kept away from the poles and the seam."""
    return SurfacePatch(name or f"sphere(r={r})", "sphere", {"r": r},
                        tuple(domain or (*_ANGLE, *_LATITUDE)))


def torus(R=3.0, r=1.0, domain=None, name=None):
    return SurfacePatch(name or f"torus(R={R},r={r})", "torus", {"R": R, "r": r},
                        tuple(domain or (*_ANGLE, *_ANGLE)))


def catenoid(r=1.0, domain=None, name=None):
    return SurfacePatch(name or f"catenoid(r={r})", "catenoid", {"r": r},
                        tuple(domain or (*_ANGLE, -1.5, 1.5)))


def helicoid(h=1.0, domain=None, name=None):
    return SurfacePatch(name or f"helicoid(h={h})", "helicoid", {"h": h},
                        tuple(domain or (-math.pi, math.pi, -2.0, 2.0)))


def graph(terms, domain=(-2.0, 2.0, -2.0, 2.0), name="graph"):
    """Graph of the polynomial ``sum coef * u**i * v**j`` over ``{(i, j): coef}``."""
    return SurfacePatch(name, "graph", {"terms": dict(terms)}, tuple(domain))


def zoo():
    """The reference surfaces used by the identity suite."""
    return [
        plane(),
        circular_cylinder(2.0),
        sphere(2.0),
        torus(3.0, 1.0),
        catenoid(1.0),
        helicoid(1.0),
        quadric1(2, 1, 1),
        quadric2(1, 1),
    ]


def make_surface(kind, params=None, domain=None, name=None):
    """Build a surface from a kind tag and a parameter mapping."""
    params = dict(params or {})
    builders = {
        "quadric1": lambda: quadric1(params.pop("a"), params.pop("b"), params.pop("c")),
        "quadric2": lambda: quadric2(params.pop("a"), params.pop("b")),
        "plane": plane,
        "circular_cylinder": lambda: circular_cylinder(params.pop("r", 2.0)),
        "sphere": lambda: sphere(params.pop("r", 2.0)),
        "torus": lambda: torus(params.pop("R", 3.0), params.pop("r", 1.0)),
        "catenoid": lambda: catenoid(params.pop("r", 1.0)),
        "helicoid": lambda: helicoid(params.pop("h", 1.0)),
        "graph": lambda: graph(params.pop("terms")),
    }
    if kind not in builders:
        raise ValueError(f"unknown surface kind {kind!r}")
    try:
        surf = builders[kind]()
    except KeyError as exc:
        raise ValueError(f"{kind} is missing parameter {exc.args[0]!r}") from None
    if params:
        raise ValueError(f"unexpected parameters for {kind}: {sorted(params)}")
    return SurfacePatch(name or surf.name, surf.kind, surf.params,
                        tuple(domain) if domain is not None else surf.domain)


# -- local geometry --------------------------------------------------------

@dataclass
class Metric:
    """First fundamental form and its inverse, as order-2 jets."""

    E: Jet3
    F: Jet3
    G: Jet3
    detg: Jet3
    inv_uu: Jet3
    inv_uv: Jet3
    inv_vv: Jet3


@dataclass
class LocalGeometry:
    """Position, tangent frame, metric and Gauss map at one or many points."""

    surface: SurfacePatch
    u: object
    v: object
    x: tuple
    x_u: tuple
    x_v: tuple
    metric: Metric
    normal: tuple

    def second_form(self):
        """L, M, N as order-1 jets (x_uu etc. paired with the normal)."""
        x_uu = tuple(c.du() for c in self.x_u)
        x_uv = tuple(c.dv() for c in self.x_u)
        x_vv = tuple(c.dv() for c in self.x_v)
        n = self.normal
        return jets.dot(x_uu, n), jets.dot(x_uv, n), jets.dot(x_vv, n)

    def mean_curvature(self):
        """Mean curvature H as an order-1 jet."""
        L, M, N = self.second_form()
        m = self.metric
        return (m.E * N - 2.0 * m.F * M + m.G * L) / (2.0 * m.detg)

    def gauss_curvature(self):
        L, M, N = self.second_form()
        return (L * N - M * M) / self.metric.detg


def _metric_from_tangents(x_u, x_v):
    E = jets.dot(x_u, x_u)
    F = jets.dot(x_u, x_v)
    G = jets.dot(x_v, x_v)
    detg = E * G - F * F
    if np.any(detg.value <= DETG_FLOOR):
        raise DegenerateMetricError("det g below floor")
    inv = jets.reciprocal(detg)
    return Metric(E, F, G, detg, G * inv, -F * inv, E * inv)


def local_geometry(surface, u, v):
    x = surface.evaluate(u, v)
    x_u = tuple(c.du() for c in x)
    x_v = tuple(c.dv() for c in x)
    metric = _metric_from_tangents(x_u, x_v)
    inv_len = jets.reciprocal(jets.sqrt(metric.detg))
    normal = tuple(c * inv_len for c in jets.cross(x_u, x_v))
    return LocalGeometry(surface, u, v, x, x_u, x_v, metric, normal)


def evaluate(surface, u, v):
    return surface.evaluate(u, v)


def metric(surface, u, v):
    """First fundamental form at ``(u, v)`` (jets of order 2)."""
    x = surface.evaluate(u, v)
    return _metric_from_tangents(tuple(c.du() for c in x), tuple(c.dv() for c in x))


def gauss_map(surface, u, v):
    """Unit normal ``(x_u x x_v)/sqrt(det g)`` as order-2 jets."""
    return local_geometry(surface, u, v).normal


def gauss_map_closed_form(surface, u, v):
    """Component formulas of the Gauss map for the two quadric kinds.

    Kind I:  n = (-a u, -b v, sqrt(omega)) / sqrt(Phi)
    Kind II: n = (-a u, -b v, 1) / sqrt(g)
    """
    uj, vj = jets.seed_vars(_as_float(u), _as_float(v))
    p = surface.params
    if surface.kind == "quadric1":
        a, b, c = (float(p[k]) for k in "abc")
        omega = c + a * uj * uj + b * vj * vj
        phi = c + a * (a + 1) * uj * uj + b * (b + 1) * vj * vj
        s = jets.power(phi, -0.5)
        return (-a * uj * s, -b * vj * s, jets.sqrt(omega) * s)
    if surface.kind == "quadric2":
        a, b = float(p["a"]), float(p["b"])
        s = jets.power(1.0 + a * a * uj * uj + b * b * vj * vj, -0.5)
        return (-a * uj * s, -b * vj * s, s)
    raise ValueError(f"no closed-form Gauss map for kind {surface.kind!r}")


@dataclass
class CurvatureData:
    E: object
    F: object
    G: object
    detg: object
    L: object
    M: object
    N: object
    H: object
    K: object
    kappa1: object
    kappa2: object
    normal: object


def curvatures(surface, u, v):
    """Fundamental-form coefficients, curvatures and unit normal (values only)."""
    geo = local_geometry(surface, u, v)
    m = geo.metric
    L, M, N = (f.value for f in geo.second_form())
    E, F, G, detg = m.E.value, m.F.value, m.G.value, m.detg.value
    H = (E * N - 2.0 * F * M + G * L) / (2.0 * detg)
    K = (L * N - M * M) / detg
    disc = np.sqrt(np.maximum(H * H - K, 0.0))
    normal = np.stack([c.value for c in geo.normal], axis=-1)
    return CurvatureData(E, F, G, detg, L, M, N, H, K, H + disc, H - disc, normal)

"""
Independent-route comparisons.

* generic divergence-form Laplacian vs the closed-form quadric operators;
* exact symbolic Laplacians (evaluated in floating point) vs the numeric one.

Errors are reported as ``|x - y| / (1 + |y|)``, which is relative for large
values and absolute near zeros of the field.
"""

from fractions import Fraction

import numpy as np

from . import beltrami
from .exact.operators import symbolic_laplacian_q1, symbolic_laplacian_q2
from .finitetype import DEFAULT_SEED, sample_points
from .surfaces import quadric1, quadric2

OPERATOR_TOL = 1e-9
SYMBOLIC_TOL = 1e-9


def blended_error(x, ref):
    x = np.asarray(x, dtype=float)
    ref = np.asarray(ref, dtype=float)
    return np.abs(x - ref) / (1.0 + np.abs(ref))


def _surface(kind, a, b, c=None):
    if kind == 1:
        return quadric1(float(a), float(b), float(c))
    return quadric2(float(a), float(b))


def operator_triangulation(kind, a, b, c=None, count=200, seed=DEFAULT_SEED):
    """Max blended error between the generic and closed-form Laplacians.

    Fields: the three Gauss map components and the position coordinates.
    For the sphere fibre (kind 1, a = b = -1) the reduced form is checked too.
    """
    surf = _surface(kind, a, b, c)
    pts = np.asarray(sample_points(surf, count, seed))
    u, v = pts[:, 0], pts[:, 1]
    fields = [beltrami.normal(i) for i in range(3)] + [beltrami.position(i) for i in range(3)]
    out = {"generic_vs_closed": 0.0, "points": len(pts)}
    sphere = kind == 1 and float(a) == -1 and float(b) == -1
    if sphere:
        out["generic_vs_reduced"] = 0.0
    for f in fields:
        generic = beltrami.laplace_scalar(surf, f, u, v)
        if kind == 1:
            closed = beltrami.closed_form_q1(a, b, c, f, u, v)
        else:
            closed = beltrami.closed_form_q2(a, b, f, u, v)
        out["generic_vs_closed"] = max(out["generic_vs_closed"],
                                       float(np.max(blended_error(generic, closed))))
        if sphere:
            reduced = beltrami.closed_form_sphere(c, f, u, v)
            out["generic_vs_reduced"] = max(out["generic_vs_reduced"],
                                            float(np.max(blended_error(generic, reduced))))
    return out


def rational_points(surface, n, seed=DEFAULT_SEED, denominator=64):
    """``n`` admissible points with coordinates in (1/denominator) Z."""
    pts = []
    for u, v in sample_points(surface, max(4 * n, 12), seed):
        q = (Fraction(round(u * denominator), denominator),
             Fraction(round(v * denominator), denominator))
        if q not in pts and surface.admissible(float(q[0]), float(q[1])):
            pts.append(q)
        if len(pts) == n:
            return pts
    raise ValueError(f"could not place {n} rational points on {surface.name}")


def numeric_symbolic(kind, a, b, c=None, n_points=20, seed=DEFAULT_SEED):
    """Max blended error of the exact Laplacians against the numeric route."""
    surf = _surface(kind, a, b, c)
    pts = rational_points(surf, n_points, seed)
    worst = {}
    for i, comp in enumerate(("n1", "n2", "n3")):
        if kind == 1:
            expr = symbolic_laplacian_q1(comp, a, b, c)
        else:
            expr = symbolic_laplacian_q2(comp, a, b)
        sym = np.array([expr.evalf(float(u), float(v)) for u, v in pts])
        uu = np.array([float(u) for u, _ in pts])
        vv = np.array([float(v) for _, v in pts])
        num = beltrami.laplace_scalar(surf, beltrami.normal(i), uu, vv)
        worst[comp] = float(np.max(blended_error(sym, num)))
    return {"max_error": max(worst.values()), "per_component": worst,
            "points": [[str(u), str(v)] for u, v in pts]}

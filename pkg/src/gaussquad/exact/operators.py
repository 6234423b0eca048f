"""
Exact Laplacians of the Gauss map components of the two quadric kinds.

Kind I is ``z = sqrt(omega)`` with ``omega = c + a u^2 + b v^2`` and
``Phi = c + a(a+1) u^2 + b(b+1) v^2 = omega * det g``; expressions live over
the radical basis ``(omega, Phi)``. Kind II is ``z = a u^2/2 + b v^2/2`` with
``g = 1 + a^2 u^2 + b^2 v^2``; expressions live over ``(g,)``.
"""

from .qpoly import QPoly, U, V, as_fraction
from .radexpr import RadExpr, RadicalBasis

COMPONENTS = ("n1", "n2", "n3")


def kind1_polys(a, b, c):
    a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
    omega = c + a * U ** 2 + b * V ** 2
    phi = c + a * (a + 1) * U ** 2 + b * (b + 1) * V ** 2
    psi = a * c + b * c + a * b * (a + 1) * U ** 2 + a * b * (b + 1) * V ** 2
    return omega, phi, psi


def kind2_polys(a, b):
    a, b = as_fraction(a), as_fraction(b)
    X = 1 + a * a * U ** 2
    Y = 1 + b * b * V ** 2
    g = 1 + a * a * U ** 2 + b * b * V ** 2
    return X, Y, g


def _check_kind1(a, b, c):
    if as_fraction(a) * as_fraction(b) == 0:
        raise ValueError("kind I needs a*b != 0")
    if as_fraction(c) <= 0:
        raise ValueError("kind I needs c > 0")


def _check_kind2(a, b):
    if as_fraction(a) <= 0 or as_fraction(b) <= 0:
        raise ValueError("kind II needs a, b > 0")


def kind1_basis(a, b, c):
    omega, phi, _ = kind1_polys(a, b, c)
    return RadicalBasis(("omega", "Phi"), (omega, phi))


def kind2_basis(a, b):
    return RadicalBasis(("g",), (kind2_polys(a, b)[2],))


def gauss_components_q1(a, b, c):
    """``(-a u, -b v, sqrt(omega)) / sqrt(Phi)`` as exact expressions."""
    _check_kind1(a, b, c)
    a, b = as_fraction(a), as_fraction(b)
    basis = kind1_basis(a, b, c)
    return (RadExpr.radical(basis, (0, -1), -a * U),
            RadExpr.radical(basis, (0, -1), -b * V),
            RadExpr.radical(basis, (1, -1), 1))


def gauss_components_q2(a, b):
    """``(-a u, -b v, 1) / sqrt(g)``."""
    _check_kind2(a, b)
    a, b = as_fraction(a), as_fraction(b)
    basis = kind2_basis(a, b)
    return (RadExpr.radical(basis, (-1,), -a * U),
            RadExpr.radical(basis, (-1,), -b * V),
            RadExpr.radical(basis, (-1,), 1))


def laplacian_q1(f, a, b, c):
    """Closed-form kind-I Laplacian applied to an expression over (omega, Phi)."""
    a, b = as_fraction(a), as_fraction(b)
    omega, _, psi = kind1_polys(a, b, c)
    fu, fv = f.derive_u(), f.derive_v()
    fuu, fuv, fvv = fu.derive_u(), fu.derive_v(), fv.derive_v()
    second = (fuu * (omega + b * b * V ** 2)
              + fuv * (-2 * a * b * U * V)
              + fvv * (omega + a * a * U ** 2))
    first = fu * (a * U) + fv * (b * V)
    # Phi is base index 1; half-power -2 is 1/Phi
    return -second.times_base(1, -2) + (first * psi).times_base(1, -4)


def laplacian_q2(f, a, b):
    a, b = as_fraction(a), as_fraction(b)
    X, Y, _ = kind2_polys(a, b)
    fu, fv = f.derive_u(), f.derive_v()
    fuu, fuv, fvv = fu.derive_u(), fu.derive_v(), fv.derive_v()
    second = fuu * Y + fvv * X + fuv * (-2 * a * b * U * V)
    first = fu * (a * U) + fv * (b * V)
    return -second.times_base(0, -2) + (first * (a * Y + b * X)).times_base(0, -4)


def _index(component):
    try:
        return COMPONENTS.index(component)
    except ValueError:
        raise ValueError(f"component must be one of {COMPONENTS}") from None


def symbolic_laplacian_q1(component, a, b, c):
    """Exact Laplacian of one Gauss map component of a kind-I quadric."""
    n = gauss_components_q1(a, b, c)[_index(component)]
    return laplacian_q1(n, a, b, c)


def symbolic_laplacian_q2(component, a, b):
    n = gauss_components_q2(a, b)[_index(component)]
    return laplacian_q2(n, a, b)


def bracket(expr, prefactor, half_power):
    """Polynomial ``B`` with ``expr = prefactor * B * base^(-half_power / 2)``.

    Used to read off numerators written as ``-a u [ ... ] / Phi^(7/2)``; the
    base is the last one in the expression's radical basis.
    """
    k = len(expr.basis) - 1
    scaled = expr.times_base(k, half_power)
    if scaled.is_zero():
        return QPoly()
    exps, num = scaled.single_term()
    if any(exps):
        raise ValueError(f"expression is not a rational multiple of base^(-{half_power}/2)")
    q = num.exact_div(prefactor)
    if q is None:
        raise ValueError("numerator is not divisible by the requested prefactor")
    return q

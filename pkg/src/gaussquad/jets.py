"""
Bivariate truncated Taylor jets.

A :class:`Jet3` carries a scalar function of ``(u, v)`` together with all of
its partial derivatives up to total order 3 at a fixed base point. The
coefficients are stored as raw partials (``f``, ``f_u``, ``f_v``, ``f_uu``,
...), not Taylor coefficients, so products follow the Leibniz rule with
binomial weights.

Coefficients may be Python floats or numpy arrays of a common shape; in the
latter case a jet represents the same expansion at many base points at once
and every operation acts elementwise.
"""

from math import comb

import numpy as np

MAX_ORDER = 3

#: multi-indices (i, j) with i + j <= 3, grouped by total order
INDEX = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2),
         (3, 0), (2, 1), (1, 2), (0, 3)]
_POS = {ij: k for k, ij in enumerate(INDEX)}

#: smallest |value| accepted as a divisor
DIV_FLOOR = 1e-300


class SingularJetError(ArithmeticError):
    """Division by a jet whose value lies below the magnitude floor."""


class JetDomainError(ValueError):
    """Elementary function evaluated outside its domain."""


def ncoef(order):
    return (order + 1) * (order + 2) // 2


def _product_plan(order):
    plan = []
    for k, (i, j) in enumerate(INDEX[:ncoef(order)]):
        terms = []
        for p in range(i + 1):
            for q in range(j + 1):
                w = comb(i, p) * comb(j, q)
                terms.append((w, _POS[(p, q)], _POS[(i - p, j - q)]))
        plan.append(terms)
    return plan


_PLANS = [_product_plan(p) for p in range(MAX_ORDER + 1)]


class Jet3:
    """Partial derivatives of a scalar up to total order ``order`` (<= 3).

    Parameters
    ----------
    coeffs : sequence
        Raw partials in :data:`INDEX` order; only the first
        ``ncoef(order)`` entries are used.
    order : int
        Truncation order. Differentiating a jet lowers it by one.
    """

    __slots__ = ("c", "order")
    # make ndarray * Jet3 defer to Jet3.__rmul__
    __array_ufunc__ = None

    def __init__(self, coeffs, order=MAX_ORDER):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"jet order must be in [0, {MAX_ORDER}]")
        n = ncoef(order)
        coeffs = list(coeffs)
        if len(coeffs) < n:
            raise ValueError(f"order-{order} jet needs {n} coefficients")
        self.c = coeffs[:n]
        self.order = order

    # -- construction ------------------------------------------------------

    @classmethod
    def constant(cls, value, order=MAX_ORDER, like=None):
        zero = 0.0 * value if like is None else 0.0 * like
        return cls([value] + [zero] * (ncoef(order) - 1), order)

    # -- access ------------------------------------------------------------

    @property
    def value(self):
        return self.c[0]

    def d(self, i, j):
        """The partial derivative d^(i+j) f / du^i dv^j."""
        if i + j > self.order:
            raise IndexError(f"partial ({i},{j}) exceeds jet order {self.order}")
        return self.c[_POS[(i, j)]]

    def du(self):
        """Jet of the u-partial, one order lower."""
        return self._shift(1, 0)

    def dv(self):
        return self._shift(0, 1)

    def _shift(self, di, dj):
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        order = self.order - 1
        return Jet3([self.c[_POS[(i + di, j + dj)]] for i, j in INDEX[:ncoef(order)]], order)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise the order of a jet")
        return Jet3(self.c, order)

    def __repr__(self):
        parts = ", ".join(f"{i}{j}:{c!r}" for (i, j), c in zip(INDEX, self.c))
        return f"Jet3(order={self.order}, {parts})"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet3):
            return other
        return Jet3.constant(other, self.order, like=self.c[0])

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        n = ncoef(order)
        return Jet3([x + y for x, y in zip(self.c[:n], other.c[:n])], order)

    __radd__ = __add__

    def __neg__(self):
        return Jet3([-x for x in self.c], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet3):
            return Jet3([x * other for x in self.c], self.order)
        order = min(self.order, other.order)
        f, g = self.c, other.c
        out = []
        for terms in _PLANS[order]:
            acc = 0.0
            for w, a, b in terms:
                acc = acc + w * f[a] * g[b]
            out.append(acc)
        return Jet3(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet3):
            return Jet3([x / other for x in self.c], self.order)
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return reciprocal(self) * other

    def __pow__(self, n):
        if not isinstance(n, (int, np.integer)):
            return power(self, n)
        return pow_int(self, int(n))


def seed_vars(u0, v0, order=MAX_ORDER):
    """Coordinate jets ``u`` and ``v`` at the base point ``(u0, v0)``."""
    one_u = np.ones_like(u0, dtype=float) if np.ndim(u0) else 1.0
    one_v = np.ones_like(v0, dtype=float) if np.ndim(v0) else 1.0
    uj = Jet3.constant(u0, order)
    vj = Jet3.constant(v0, order)
    if order >= 1:
        uj.c[1] = one_u
        vj.c[2] = one_v
    return uj, vj


def combine(op, lhs, rhs, floor=DIV_FLOOR):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two jets."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs * reciprocal(rhs, floor=floor)
    raise ValueError(f"unknown jet operation {op!r}")


def _compose(x, derivs):
    # f(x0 + h) = sum_k f^(k)(x0) h^k / k!, exact to order 3 because h has no constant term
    h = x - x.value
    h.c[0] = 0.0 * x.c[0]
    out = Jet3.constant(derivs[0], x.order, like=x.c[0])
    hk = None
    fact = 1.0
    for k in range(1, x.order + 1):
        hk = h if hk is None else hk * h
        fact *= k
        out = out + hk * (derivs[k] / fact)
    return out


def _check_floor(t, floor):
    if np.any(np.abs(t) < floor):
        raise SingularJetError(f"jet value below division floor {floor:g}")


def reciprocal(x, floor=DIV_FLOOR):
    t = x.value
    _check_floor(t, floor)
    r = 1.0 / t
    return _compose(x, (r, -r * r, 2.0 * r ** 3, -6.0 * r ** 4))


def sqrt(x):
    t = x.value
    if np.any(t <= 0):
        raise JetDomainError("sqrt of a jet with non-positive value")
    s = np.sqrt(t)
    return _compose(x, (s, 0.5 / s, -0.25 / (s * t), 0.375 / (s * t * t)))


def power(x, r):
    """Real power ``x**r``; requires a positive value."""
    t = x.value
    if np.any(t <= 0):
        raise JetDomainError("real power of a jet with non-positive value")
    p = t ** r
    return _compose(x, (p, r * p / t, r * (r - 1) * p / t ** 2,
                        r * (r - 1) * (r - 2) * p / t ** 3))


def pow_int(x, n):
    if n < 0:
        return reciprocal(pow_int(x, -n))
    out = Jet3.constant(1.0, x.order, like=x.c[0])
    base = x
    while n:
        if n & 1:
            out = out * base
        n >>= 1
        if n:
            base = base * base
    return out


def sin(x):
    s, c = np.sin(x.value), np.cos(x.value)
    return _compose(x, (s, c, -s, -c))


def cos(x):
    s, c = np.sin(x.value), np.cos(x.value)
    return _compose(x, (c, -s, -c, s))


def sinh(x):
    s, c = np.sinh(x.value), np.cosh(x.value)
    return _compose(x, (s, c, s, c))


def cosh(x):
    s, c = np.sinh(x.value), np.cosh(x.value)
    return _compose(x, (c, s, c, s))


def exp(x):
    e = np.exp(x.value)
    return _compose(x, (e, e, e, e))


_ELEMENTARY = {"sqrt": sqrt, "sin": sin, "cos": cos, "sinh": sinh,
               "cosh": cosh, "exp": exp}


def elementary(fn, x, n=None):
    """Compose ``x`` with a named elementary function.

    ``fn`` is one of sqrt, sin, cos, sinh, cosh, exp or pow_int; the latter
    takes the integer exponent ``n``.
    """
    if fn == "pow_int":
        if n is None:
            raise ValueError("pow_int needs an integer exponent")
        return pow_int(x, n)
    try:
        return _ELEMENTARY[fn](x)
    except KeyError:
        raise ValueError(f"unknown elementary function {fn!r}") from None


def dot(a, b):
    """Inner product of two 3-vectors of jets."""
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])

"""Sparse bivariate polynomials in u, v with exact rational coefficients."""

from fractions import Fraction


def as_fraction(x):
    """Exact rational from int, Fraction or a ``"p/q"`` string.

    Floats are rejected on purpose: they would silently carry binary
    rounding into an exact computation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QPoly:
    """Polynomial ``sum c_ij u^i v^j`` stored as ``{(i, j): Fraction}``.

    Zero coefficients are never stored, so ``QPoly().terms == {}`` is the
    zero polynomial and equality is plain dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = as_fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def v(cls):
        return cls({(0, 1): 1})

    def _wrap(self, other):
        if isinstance(other, QPoly):
            return other
        return QPoly.const(as_fraction(other))

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == (0, 0) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0, 0), Fraction(0))

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            try:
                other = self._wrap(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(s for s in (_pow("u", i), _pow("v", j)) if s)
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            k = as_fraction(other)
            if not k:
                return QPoly()
            return _raw({m: c * k for m, c in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return _raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out, base = QPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def derive_u(self):
        return _raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def derive_v(self):
        return _raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def substitute(self, u=None, v=None):
        """Fix ``u`` and/or ``v`` to rational values; the result is a QPoly."""
        out = {}
        for (i, j), c in self.terms.items():
            if u is not None:
                c, i = c * as_fraction(u) ** i, 0
            if v is not None:
                c, j = c * as_fraction(v) ** j, 0
            out[(i, j)] = out.get((i, j), 0) + c
        return QPoly(out)

    def __call__(self, u, v):
        """Evaluate at a point; exact for rationals, float otherwise."""
        return sum((c * u ** i * v ** j for (i, j), c in self.terms.items()), Fraction(0))

    def evalf(self, u, v):
        return sum(float(c) * u ** i * v ** j for (i, j), c in self.terms.items())

    # -- division ----------------------------------------------------------

    def divmod(self, divisor):
        """Multivariate division by a single polynomial in lex order (u > v).

        The remainder is zero exactly when ``divisor`` divides ``self``,
        because a single generator is always a Groebner basis of its ideal.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm = max(divisor.terms)
        lc = divisor.terms[lm]
        quot, rem = QPoly(), QPoly()
        p = self
        while not p.is_zero():
            m = max(p.terms)
            c = p.terms[m]
            if m[0] >= lm[0] and m[1] >= lm[1]:
                t = QPoly({(m[0] - lm[0], m[1] - lm[1]): c / lc})
                quot = quot + t
                p = p - t * divisor
            else:
                rem = rem + QPoly({m: c})
                p = p - QPoly({m: c})
        return quot, rem

    def exact_div(self, divisor):
        """Quotient if ``divisor`` divides ``self`` exactly, else ``None``."""
        q, r = self.divmod(divisor)
        return q if r.is_zero() else None


def _raw(terms):
    p = QPoly.__new__(QPoly)
    p.terms = terms
    return p


def _pow(name, k):
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


U = QPoly.u()
V = QPoly.v()

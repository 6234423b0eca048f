"""
Exact expressions with half-integer powers of fixed base polynomials.

A :class:`RadExpr` is a finite sum ``sum_k P_k(u, v) * prod_i B_i^(e_ik / 2)``
over a fixed :class:`RadicalBasis` ``(B_1, ..., B_m)``. Negative exponents
stand in for denominators, so the class is closed under +, *, and partial
differentiation.

Canonical form keeps one term per parity class ``(e_1 mod 2, ..., e_m mod 2)``
and divides every base out of the numerator as far as possible. When the
bases are irreducible, pairwise coprime and not squares, the square roots of
distinct parity classes are linearly independent over Q(u, v), so the
canonical form is unique and an expression vanishes identically iff every
bucket numerator is the zero polynomial. Constant bases are folded into the
coefficients (completely, if the constant is a rational square).
"""

import math
from fractions import Fraction

from .qpoly import QPoly, as_fraction


def rational_sqrt(q):
    """Exact square root of a non-negative rational, or None if irrational."""
    q = as_fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class RadicalBasis:
    """Named base polynomials whose square roots may appear in an expression."""

    def __init__(self, names, polys):
        if len(names) != len(polys):
            raise ValueError("one name per base polynomial")
        self.names = tuple(names)
        self.polys = tuple(polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return isinstance(other, RadicalBasis) and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        inner = ", ".join(f"{n}={p}" for n, p in zip(self.names, self.polys))
        return f"RadicalBasis({inner})"


class RadExpr:
    """Sum of rational-polynomial multiples of radical monomials."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None, normalize=True):
        self.basis = basis
        self.terms = {}
        for exps, p in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(basis):
                raise ValueError("exponent tuple does not match basis")
            if not p.is_zero():
                acc = self.terms.get(exps)
                self.terms[exps] = p if acc is None else acc + p
        if normalize:
            self.terms = _canonical(basis, self.terms)

    # -- construction ------------------------------------------------------

    @classmethod
    def poly(cls, basis, p):
        if not isinstance(p, QPoly):
            p = QPoly.const(p)
        return cls(basis, {(0,) * len(basis): p})

    @classmethod
    def radical(cls, basis, exps, p=1):
        """``p * prod B_i^(exps_i / 2)``."""
        if not isinstance(p, QPoly):
            p = QPoly.const(p)
        return cls(basis, {tuple(exps): p})

    def _wrap(self, other):
        if isinstance(other, RadExpr):
            if other.basis != self.basis:
                raise ValueError("expressions over different radical bases")
            return other
        return RadExpr.poly(self.basis, other)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        merged = dict(self.terms)
        for e, p in other.terms.items():
            merged[e] = merged[e] + p if e in merged else p
        return RadExpr(self.basis, merged)

    __radd__ = __add__

    def __neg__(self):
        return RadExpr(self.basis, {e: -p for e, p in self.terms.items()}, normalize=False)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, (QPoly, int, Fraction)):
            return RadExpr(self.basis, {e: p * other for e, p in self.terms.items()})
        other = self._wrap(other)
        out = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out[e] + p1 * p2 if e in out else p1 * p2
        return RadExpr(self.basis, out)

    __rmul__ = __mul__

    def times_base(self, index, half_power):
        """Multiply by ``B_index^(half_power / 2)``."""
        out = {}
        for e, p in self.terms.items():
            e = list(e)
            e[index] += half_power
            out[tuple(e)] = p
        return RadExpr(self.basis, out)

    def _derive(self, which):
        out = {}

        def put(e, p):
            if not p.is_zero():
                out[e] = out[e] + p if e in out else p

        for e, p in self.terms.items():
            put(e, p.derive_u() if which == "u" else p.derive_v())
            for k, base in enumerate(self.basis.polys):
                if e[k] == 0:
                    continue
                db = base.derive_u() if which == "u" else base.derive_v()
                if db.is_zero():
                    continue
                ek = list(e)
                ek[k] -= 2
                put(tuple(ek), p * db * Fraction(e[k], 2))
        return RadExpr(self.basis, out)

    def derive_u(self):
        return self._derive("u")

    def derive_v(self):
        return self._derive("v")

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, RadExpr):
            other = self._wrap(other)
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def buckets(self):
        """``{parity: (exponents, numerator)}`` for the canonical terms."""
        return {tuple(x % 2 for x in e): (e, p) for e, p in self.terms.items()}

    def single_term(self):
        """``(exponents, numerator)`` if the expression has exactly one term."""
        if len(self.terms) != 1:
            raise ValueError(f"expression has {len(self.terms)} terms")
        return next(iter(self.terms.items()))

    def evalf(self, u, v):
        total = 0.0
        base_vals = [b.evalf(u, v) for b in self.basis.polys]
        for e, p in self.terms.items():
            t = p.evalf(u, v)
            for bv, k in zip(base_vals, e):
                if k:
                    t *= bv ** (k / 2)
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "RadExpr(0)"
        parts = []
        for e, p in sorted(self.terms.items()):
            rad = "*".join(f"{n}^({k}/2)" for n, k in zip(self.basis.names, e) if k)
            parts.append(f"({p})" + (f"*{rad}" if rad else ""))
        return "RadExpr(" + " + ".join(parts) + ")"


def _canonical(basis, terms):
    polys = basis.polys
    consts = [p.constant_value() if p.is_constant() else None for p in polys]
    roots = [rational_sqrt(k) if k is not None and k > 0 else None for k in consts]
    for k in consts:
        if k is not None and k <= 0:
            raise ValueError("constant radical base must be positive")

    groups = {}
    for exps, p in terms.items():
        exps = list(exps)
        for i, k in enumerate(consts):
            if k is None:
                continue
            m, r = divmod(exps[i], 2)
            p = p * (k ** m)
            if r and roots[i] is not None:
                p = p * roots[i]
                r = 0
            exps[i] = r
        parity = tuple(x % 2 for x in exps)
        groups.setdefault(parity, []).append((exps, p))

    out = {}
    for items in groups.values():
        low = [min(e[i] for e, _ in items) for i in range(len(polys))]
        total = QPoly()
        for e, p in items:
            for i, base in enumerate(polys):
                step = (e[i] - low[i]) // 2
                if step:
                    p = p * base ** step
            total = total + p
        if total.is_zero():
            continue
        for i, base in enumerate(polys):
            if consts[i] is not None:
                continue
            while True:
                q = total.exact_div(base)
                if q is None:
                    break
                total = q
                low[i] += 2
        out[tuple(low)] = total
    return out

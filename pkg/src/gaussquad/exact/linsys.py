"""
Exact linear systems over Q solved by fraction-free (Bareiss) elimination.

Rows are scaled to integers and eliminated with exact integer division, so
intermediate entries stay bounded by minors of the input instead of growing
as nested fractions. The elimination tracks the row combination that
produces every reduced row, which turns an inconsistent system into a
checkable certificate: multipliers ``y`` with ``y^T A = 0`` and
``y^T b != 0``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .qpoly import as_fraction


@dataclass
class LinearSystemQ:
    """``A x = b`` with rational entries; ``labels`` say where each row came from."""

    unknowns: list
    rows: list = field(default_factory=list)
    rhs: list = field(default_factory=list)
    labels: list = field(default_factory=list)

    def add_row(self, coeffs, rhs, label=""):
        if len(coeffs) != len(self.unknowns):
            raise ValueError("row length does not match the number of unknowns")
        self.rows.append([as_fraction(c) for c in coeffs])
        self.rhs.append(as_fraction(rhs))
        self.labels.append(label)

    @property
    def shape(self):
        return len(self.rows), len(self.unknowns)

    def select(self, keep):
        """Subsystem of the rows whose label satisfies ``keep``."""
        sub = LinearSystemQ(list(self.unknowns))
        for r, b, lab in zip(self.rows, self.rhs, self.labels):
            if keep(lab):
                sub.add_row(r, b, lab)
        return sub

    def restrict(self, unknowns):
        """Same rows, only the given columns (others must have zero coefficients)."""
        idx = [self.unknowns.index(x) for x in unknowns]
        sub = LinearSystemQ(list(unknowns))
        for r, b, lab in zip(self.rows, self.rhs, self.labels):
            sub.add_row([r[i] for i in idx], b, lab)
        return sub


@dataclass
class Solution:
    """Outcome of :func:`solve`.

    ``status`` is ``unique``, ``underdetermined`` or ``infeasible``. For a
    consistent system ``values`` is a particular solution (free unknowns set
    to zero). For an infeasible one ``certificate`` maps row indices to
    integer multipliers ``y`` with ``y^T A = 0`` and ``y^T b != 0``.
    """

    status: str
    rank: int
    values: dict = field(default_factory=dict)
    free: list = field(default_factory=list)
    certificate: dict = field(default_factory=dict)
    contradiction: Fraction = Fraction(0)


def _row_scale(coeffs, rhs):
    scale = 1
    for x in (*coeffs, rhs):
        scale = lcm(scale, x.denominator)
    return scale


def solve(system):
    """Fraction-free Gaussian elimination with row pivoting."""
    m, n = system.shape
    # augmented rows [A | b | I]; the identity block records the combinations
    M = []
    scales = []
    for i, (r, b) in enumerate(zip(system.rows, system.rhs)):
        scale = _row_scale(r, b)
        scales.append(scale)
        ident = [0] * m
        ident[i] = 1
        M.append([int(x * scale) for x in (*r, b)] + ident)
    width = n + 1 + m

    prev = 1
    pivots = []
    prow = 0
    for col in range(n):
        if prow == m:
            break
        best = None
        for i in range(prow, m):
            if M[i][col]:
                if best is None or abs(M[i][col]) < abs(M[best][col]):
                    best = i
        if best is None:
            continue
        M[prow], M[best] = M[best], M[prow]
        p = M[prow][col]
        for i in range(prow + 1, m):
            f = M[i][col]
            row_i = M[i]
            row_p = M[prow]
            for j in range(width):
                num = p * row_i[j] - f * row_p[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("Bareiss step was not exact")
                row_i[j] = q
        prev = p
        pivots.append(col)
        prow += 1

    rank = len(pivots)
    for i in range(rank, m):
        if M[i][n]:
            # multipliers refer to the integer-scaled rows; map back to the originals
            cert = {k: M[i][n + 1 + k] * scales[k] for k in range(m) if M[i][n + 1 + k]}
            return Solution("infeasible", rank, certificate=cert,
                            contradiction=Fraction(M[i][n]))

    values = {}
    x = [Fraction(0)] * n
    for r in range(rank - 1, -1, -1):
        col = pivots[r]
        s = Fraction(M[r][n])
        for j in range(col + 1, n):
            if M[r][j]:
                s -= M[r][j] * x[j]
        x[col] = s / M[r][col]
    for j, name in enumerate(system.unknowns):
        values[name] = x[j]
    free = [system.unknowns[j] for j in range(n) if j not in pivots]
    status = "unique" if not free else "underdetermined"
    return Solution(status, rank, values, free)


def check_solution(system, values):
    """True iff ``values`` satisfies every row exactly."""
    for r, b in zip(system.rows, system.rhs):
        if sum(c * values[x] for c, x in zip(r, system.unknowns)) != b:
            return False
    return True


def check_certificate(system, certificate):
    """True iff the multipliers annihilate A but not b."""
    n = len(system.unknowns)
    combo = [Fraction(0)] * n
    rhs = Fraction(0)
    for i, y in certificate.items():
        for j in range(n):
            combo[j] += y * system.rows[i][j]
        rhs += y * system.rhs[i]
    return all(c == 0 for c in combo) and rhs != 0

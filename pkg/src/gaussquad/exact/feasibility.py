"""
Exact decision of ``lap n = Lambda n`` for a quadric with rational parameters.

For each component ``i`` the expression ``lap n_i - sum_j lambda_ij n_j`` is
split into parity buckets. Inside a bucket all four contributions are
brought to a common radical monomial, so the bucket vanishes iff its
numerator polynomial does; matching every monomial coefficient gives a
linear system in the nine unknowns ``lambda_ij`` which is solved exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linsys
from .operators import (gauss_components_q1, gauss_components_q2,
                        laplacian_q1, laplacian_q2)
from .qpoly import QPoly, as_fraction

UNKNOWNS = [f"lambda{i}{j}" for i in range(1, 4) for j in range(1, 4)]


def _aligned_numerators(exprs):
    """Per parity bucket, the numerators of ``exprs`` over a shared monomial.

    Returns ``{parity: (exponents, [QPoly per expr])}``.
    """
    basis = exprs[0].basis
    per_bucket = {}
    for idx, e in enumerate(exprs):
        for parity, (exps, num) in e.buckets().items():
            per_bucket.setdefault(parity, {})[idx] = (exps, num)
    out = {}
    for parity, entries in sorted(per_bucket.items()):
        low = [min(ex[k] for ex, _ in entries.values()) for k in range(len(basis))]
        nums = []
        for idx in range(len(exprs)):
            if idx not in entries:
                nums.append(QPoly())
                continue
            exps, num = entries[idx]
            for k, base in enumerate(basis.polys):
                step = (exps[k] - low[k]) // 2
                if step:
                    num = num * base ** step
            nums.append(num)
        out[parity] = (tuple(low), nums)
    return out


def build_system(laplacians, normals):
    """Coefficient-matching system for ``laplacians[i] = sum_j lambda_ij normals[j]``."""
    system = linsys.LinearSystemQ(list(UNKNOWNS))
    n_buckets = 0
    for i in range(3):
        buckets = _aligned_numerators([laplacians[i], *normals])
        n_buckets += len(buckets)
        for parity, (exps, (lap, *ns)) in buckets.items():
            monos = set(lap.terms)
            for p in ns:
                monos |= set(p.terms)
            for mono in sorted(monos):
                row = [Fraction(0)] * 9
                for j in range(3):
                    row[3 * i + j] = ns[j].coeff(*mono)
                label = {"component": i + 1, "parity": list(parity),
                         "monomial": list(mono)}
                system.add_row(row, lap.coeff(*mono), label)
    return system, n_buckets


@dataclass
class Certificate:
    kind: int
    params: dict
    status: str
    n_buckets: int
    system_shape: tuple
    rank: int
    lam: list = None
    free: list = field(default_factory=list)
    contradiction: dict = None
    verified: bool = False
    trace: list = field(default_factory=list)
    system: linsys.LinearSystemQ = None

    def to_dict(self):
        d = {
            "kind": self.kind,
            "params": {k: str(v) for k, v in self.params.items()},
            "status": self.status,
            "bucket_count": self.n_buckets,
            "system": {"rows": self.system_shape[0], "unknowns": self.system_shape[1],
                       "rank": self.rank},
            "verified": self.verified,
            "trace": list(self.trace),
        }
        if self.lam is not None:
            d["lambda"] = [[str(x) for x in row] for row in self.lam]
        if self.free:
            d["free_unknowns"] = list(self.free)
        if self.contradiction is not None:
            d["contradiction"] = self.contradiction
        return d


def _derive_contradiction(system, sol):
    combo = {system.labels[i]["component"] for i in sol.certificate}
    rows = [{"row": i, "multiplier": str(y), "from": system.labels[i]}
            for i, y in sorted(sol.certificate.items())]
    rhs = sum(y * system.rhs[i] for i, y in sol.certificate.items())
    return {"equation": f"0 = {rhs}", "components": sorted(combo), "rows": rows}


def forced_zero(system, component, slice_var):
    """Solve the slice ``u = 0`` (or ``v = 0``) of one component's equations.

    On the slice the diagonal unknown drops out, which is how the off-diagonal
    entries are pinned down. Returns the exact :class:`linsys.Solution`.
    """
    axis = 0 if slice_var == "u" else 1
    sub = system.select(lambda lab: lab["component"] == component and lab["monomial"][axis] == 0)
    names = [f"lambda{component}{j}" for j in range(1, 4) if j != component]
    for row in sub.rows:
        if row[UNKNOWNS.index(f"lambda{component}{component}")] != 0:
            raise ValueError("diagonal unknown survives on the slice")
    return linsys.solve(sub.restrict(names))


def feasibility(kind, a, b, c=None):
    """Exact solution set of the Gauss-map eigen-condition for one quadric."""
    kind = int(kind)
    a, b = as_fraction(a), as_fraction(b)
    trace = []
    if kind == 1:
        if c is None:
            raise ValueError("kind 1 needs c")
        c = as_fraction(c)
        normals = gauss_components_q1(a, b, c)
        laps = [laplacian_q1(n, a, b, c) for n in normals]
        params = {"a": a, "b": b, "c": c}
        trace.append(f"omega = {normals[0].basis.polys[0]}; Phi = {normals[0].basis.polys[1]}")
    elif kind == 2:
        normals = gauss_components_q2(a, b)
        laps = [laplacian_q2(n, a, b) for n in normals]
        params = {"a": a, "b": b}
        trace.append(f"g = {normals[0].basis.polys[0]}")
    else:
        raise ValueError("kind must be 1 or 2")
    for i, lap in enumerate(laps, 1):
        trace.append(f"lap n{i} = {lap}")

    system, n_buckets = build_system(laps, normals)
    trace.append(f"{n_buckets} parity buckets, {system.shape[0]} coefficient equations "
                 f"in {system.shape[1]} unknowns")
    sol = linsys.solve(system)
    cert = Certificate(kind, params, sol.status, n_buckets, system.shape, sol.rank,
                       trace=trace, system=system)
    if sol.status == "infeasible":
        cert.contradiction = _derive_contradiction(system, sol)
        cert.verified = linsys.check_certificate(system, sol.certificate)
        trace.append(f"inconsistent: a combination of {len(sol.certificate)} equations "
                     f"reduces to {cert.contradiction['equation']}")
    else:
        cert.lam = [[sol.values[f"lambda{i}{j}"] for j in range(1, 4)] for i in range(1, 4)]
        cert.free = sol.free
        cert.verified = linsys.check_solution(system, sol.values)
        trace.append(f"{sol.status} solution, rank {sol.rank}")
    return cert

"""
Numerical test of the Gauss-map condition ``lap n = Lambda n``.

The Laplacian of the normal is sampled on a surface and a constant 3x3
matrix is fitted row by row in the least-squares sense. The verdict is
three-valued: a fit is only called ``satisfies`` or ``fails`` when the
residual is far on one side of an order-of-magnitude gap, and always
``indeterminate`` when the sampled normals do not span R^3.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from . import surfaces
from .beltrami import identity_check

SATISFY_TOL = 1e-6
FAIL_TOL = 1e-3
#: singular values below RANK_RTOL * s_max are treated as zero
RANK_RTOL = 1e-9
MIN_POINTS = 12
DEFAULT_SEED = 20240601


class DomainTooSmallError(ValueError):
    """Not enough admissible points could be placed in the domain."""


class InvalidGridError(ValueError):
    pass


def sample_points(surface, count, seed=DEFAULT_SEED, max_rounds=64):
    """Seeded scrambled-Halton points in the admissible part of the domain."""
    if count < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} points, got {count}")
    umin, umax, vmin, vmax = surface.domain
    sampler = qmc.Halton(d=2, scramble=True, seed=seed)
    kept = []
    have = 0
    for _ in range(max_rounds):
        cand = qmc.scale(sampler.random(max(count, 64)), [umin, vmin], [umax, vmax])
        cand = cand[surface.admissible(cand[:, 0], cand[:, 1])]
        if len(cand):
            detg = surfaces.metric(surface, cand[:, 0], cand[:, 1]).detg.value
            cand = cand[np.asarray(detg) > surfaces.DETG_FLOOR]
        kept.append(cand)
        have += len(cand)
        if have >= count:
            pts = np.concatenate(kept)[:count]
            return [(float(p), float(q)) for p, q in pts]
    raise DomainTooSmallError(
        f"{surface.name}: only {have} admissible points after {max_rounds} rounds")


@dataclass
class LambdaFit:
    """Least-squares fit of ``lap n = Lambda n`` over sample points.

    ``residual_rms`` is the RMS of ``|Lambda n - lap n|`` divided by
    ``1 + RMS(|lap n|)``. ``subspace_action`` is Lambda restricted to the
    span of the sampled normals (expressed in an orthonormal basis of it),
    which is the meaningful part when ``design_rank < 3``.
    """

    lam: np.ndarray
    residual_rms: float
    residual_abs: float
    design_rank: int
    condition: float
    singular_values: np.ndarray
    subspace_action: np.ndarray
    identity_max: float
    verdict: str
    note: str = ""
    n_points: int = 0

    def summary(self):
        return {
            "lambda": self.lam.tolist(),
            "residual_rms": float(self.residual_rms),
            "residual_abs": float(self.residual_abs),
            "design_rank": int(self.design_rank),
            "condition": float(self.condition),
            "singular_values": self.singular_values.tolist(),
            "subspace_action": self.subspace_action.tolist(),
            "identity_max": float(self.identity_max),
            "verdict": self.verdict,
            "note": self.note,
            "n_points": self.n_points,
        }


def fit_matrix(normals, targets):
    """Minimum-norm solution of ``normals @ Lambda.T ~= targets`` with diagnostics.

    Returns ``(lam, residual_rms, residual_abs, rank, condition, s, action)``.
    """
    N = np.asarray(normals, dtype=float)
    T = np.asarray(targets, dtype=float)
    U, s, Vt = np.linalg.svd(N, full_matrices=False)
    if s[0] == 0:
        rank = 0
    else:
        rank = int(np.sum(s > RANK_RTOL * s[0]))
    Ur, sr, Vr = U[:, :rank], s[:rank], Vt[:rank].T
    lam_t = Vr @ ((Ur.T @ T) / sr[:, None])
    lam = lam_t.T
    resid = N @ lam_t - T
    residual_abs = float(np.sqrt(np.mean(np.sum(resid ** 2, axis=1))))
    target_rms = float(np.sqrt(np.mean(np.sum(T ** 2, axis=1))))
    residual_rms = residual_abs / (1.0 + target_rms)
    condition = float(sr[0] / sr[-1]) if rank else float("inf")
    action = Vr.T @ lam @ Vr
    return lam, residual_rms, residual_abs, rank, condition, s, action


def _verdict(residual, rank, satisfy_tol, fail_tol):
    if rank < 3:
        if residual <= satisfy_tol:
            if rank <= 1:
                return "indeterminate", "rank-deficient: condition holds trivially"
            return "indeterminate", "rank-deficient: condition holds on the span of the normals"
        return "indeterminate", "rank-deficient: normals do not span R^3"
    if residual <= satisfy_tol:
        return "satisfies", ""
    if residual > fail_tol:
        return "fails", ""
    return "indeterminate", "residual inside the undecided band"


def fit_lambda(surface, points, satisfy_tol=SATISFY_TOL, fail_tol=FAIL_TOL):
    """Fit a constant matrix to the Laplacian of the Gauss map at ``points``."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < MIN_POINTS:
        raise ValueError(f"need at least {MIN_POINTS} sample points")
    chk = identity_check(surface, pts[:, 0], pts[:, 1])
    identity_max = float(np.max(chk.res_n / chk.scale_n))
    try:
        lam, res, res_abs, rank, cond, s, action = fit_matrix(chk.normal, chk.lap_n)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"least-squares factorization failed: {exc}") from exc
    verdict, note = _verdict(res, rank, satisfy_tol, fail_tol)
    return LambdaFit(lam, res, res_abs, rank, cond, s, action, identity_max,
                     verdict, note, len(pts))


# -- family sweeps ---------------------------------------------------------

FAMILY_PARAMS = {"quadric1": ("a", "b", "c"), "quadric2": ("a", "b")}


def validate_grid(family, grid):
    if family not in FAMILY_PARAMS:
        raise InvalidGridError(f"unknown family {family!r}")
    names = FAMILY_PARAMS[family]
    missing = [k for k in names if k not in grid]
    extra = [k for k in grid if k not in names]
    if missing or extra:
        raise InvalidGridError(f"{family} grid needs exactly {names}; missing {missing}, extra {extra}")
    for k in names:
        if len(grid[k]) == 0:
            raise InvalidGridError(f"empty grid axis {k!r}")
    vals = {k: [float(x) for x in grid[k]] for k in names}
    if family == "quadric1":
        if any(x == 0 for x in vals["a"] + vals["b"]):
            raise InvalidGridError("quadric1 requires a*b != 0")
        if any(x <= 0 for x in vals["c"]):
            raise InvalidGridError("quadric1 requires c > 0")
    else:
        if any(x <= 0 for x in vals["a"] + vals["b"]):
            raise InvalidGridError("quadric2 requires a, b > 0")


@dataclass
class ClassificationReport:
    family: str
    grid: dict
    count: int
    seed: int
    cells: list = field(default_factory=list)

    @property
    def flagged(self):
        return [c["params"] for c in self.cells if c["verdict"] == "satisfies"]

    def dichotomy_holds(self):
        """True iff exactly the sphere fibres (a = b = -1) are flagged."""
        for c in self.cells:
            p = c["params"]
            expected = self.family == "quadric1" and p["a"] == -1 and p["b"] == -1
            if (c["verdict"] == "satisfies") != expected:
                return False
        return True


def _family_surface(family, params):
    if family == "quadric1":
        return surfaces.quadric1(params["a"], params["b"], params["c"])
    return surfaces.quadric2(params["a"], params["b"])


def _fit_cell(args):
    family, params, count, seed, tols = args
    surf = _family_surface(family, params)
    fit = fit_lambda(surf, sample_points(surf, count, seed), *tols)
    return {"params": params, **fit.summary()}


def classify_family(family, grid, count=60, seed=DEFAULT_SEED, workers=1,
                    satisfy_tol=SATISFY_TOL, fail_tol=FAIL_TOL):
    """Fit every cell of a parameter grid; cells are ordered by parameter tuple."""
    validate_grid(family, grid)
    names = FAMILY_PARAMS[family]
    axes = [sorted(float(x) for x in grid[k]) for k in names]
    jobs = [(family, dict(zip(names, combo)), count, seed, (satisfy_tol, fail_tol))
            for combo in itertools.product(*axes)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_fit_cell, jobs))
    else:
        cells = [_fit_cell(j) for j in jobs]
    return ClassificationReport(family, {k: axes[i] for i, k in enumerate(names)},
                                count, seed, cells)

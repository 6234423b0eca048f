from fractions import Fraction as Fr

import random

import pytest
import sympy as sp

from gaussquad.exact.linsys import LinearSystemQ, check_certificate, check_solution, solve


def build(A, b, names=None):
    names = names or [f"x{i}" for i in range(len(A[0]))]
    s = LinearSystemQ(names)
    for r, v in zip(A, b):
        s.add_row(r, v, {"row": len(s.rows)})
    return s


def random_system(rng, m, n, rank):
    left = [[Fr(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rank)] for _ in range(m)]
    right = [[Fr(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(rank)]
    A = [[sum(left[i][k] * right[k][j] for k in range(rank)) for j in range(n)] for i in range(m)]
    return A


@pytest.mark.parametrize("seed", range(25))
def test_random_systems_against_sympy(seed):
    rng = random.Random(seed)
    m, n = rng.randint(2, 7), rng.randint(2, 5)
    rank = rng.randint(1, min(m, n))
    A = random_system(rng, m, n, rank)
    if rng.random() < 0.5:
        x = [Fr(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
        b = [sum(a * xi for a, xi in zip(r, x)) for r in A]
    else:
        b = [Fr(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m)]
    sysq = build(A, b)
    sol = solve(sysq)
    M = sp.Matrix(A)
    Mb = M.row_join(sp.Matrix(b))
    assert sol.rank == M.rank()
    if Mb.rank() > M.rank():
        assert sol.status == "infeasible"
        assert check_certificate(sysq, sol.certificate)
    else:
        assert sol.status == ("unique" if M.rank() == n else "underdetermined")
        assert check_solution(sysq, sol.values)
        assert len(sol.free) == n - M.rank()


def test_unique_small():
    s = build([[2, 1], [1, 3]], [3, 5])
    sol = solve(s)
    assert sol.status == "unique"
    assert sol.values == {"x0": Fr(4, 5), "x1": Fr(7, 5)}


def test_infeasible_certificate_with_fractions():
    s = build([[Fr(1, 2), Fr(1, 3)], [Fr(3, 2), 1]], [1, 2])
    sol = solve(s)
    assert sol.status == "infeasible"
    assert check_certificate(s, sol.certificate)
    # 3 * row0 - row1 gives 0 = 1
    ratio = sol.certificate[0] / sol.certificate[1]
    assert ratio == -3


def test_large_integers_stay_exact():
    big = 10**40 + 7
    s = build([[big, 1], [1, big]], [big + 1, big + 1])
    sol = solve(s)
    assert sol.values == {"x0": 1, "x1": 1}


def test_select_and_restrict():
    s = build([[1, 0, 2], [0, 1, 0]], [1, 2])
    sub = s.select(lambda lab: lab["row"] == 1).restrict(["x1"])
    assert sub.shape == (1, 1)
    assert solve(sub).values == {"x1": 2}


def test_row_length_checked():
    with pytest.raises(ValueError):
        LinearSystemQ(["x"]).add_row([1, 2], 0)

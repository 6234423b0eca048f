from fractions import Fraction as Fr

import pytest

from gaussquad.exact.audit import (compare, reference_f, reference_g, reference_g_at_u0,
                                   verify_reference_fg)
from gaussquad.exact.qpoly import U, V


@pytest.mark.parametrize("abc", [(2, 1, 1), (Fr(-1, 2), -1, 3), (1, -2, 2), (3, 2, Fr(1, 2))])
def test_full_displays_agree_with_computation(abc):
    rep = verify_reference_fg(*abc)
    assert rep.comparisons["f"]["all_match"]
    assert rep.comparisons["g"]["all_match"]
    assert rep.comparisons["f_at_v0"]["all_match"]
    assert rep.consistent


def test_slice_display_disagrees():
    rep = verify_reference_fg(2, 1, 1)
    d = rep.discrepancy
    assert d["computed"] == "34"
    assert d["g"] == "34" and d["g_at_u0"] == "40"
    assert d["displays_differ"] and d["matching_displays"] == ["g"]
    assert not rep.comparisons["g_at_u0"]["all_match"]
    bad = [r for r in rep.comparisons["g_at_u0"]["rows"] if not r["match"]]
    assert [r["monomial"] for r in bad] == ["u^0 v^2"]


def test_slices_coincide_when_ab_equals_b():
    # with a = 1 the two factors 3b and 3ab agree
    rep = verify_reference_fg(1, 2, 1)
    assert not rep.discrepancy["displays_differ"]
    assert rep.comparisons["g_at_u0"]["all_match"]


def test_report_dict():
    d = verify_reference_fg(2, 1, 1).to_dict()
    assert d["consistent"] is True
    assert d["numeric_max_rel"] <= 1e-9
    assert "u^0 v^2" in d["computed"]["g_bracket"]
    assert len(d["numeric_points"]) == 8


def test_compare_rows():
    res = compare(U**2 + 3 * V, U**2 + 2 * V + 1)
    rows = {r["monomial"]: r["match"] for r in res["rows"]}
    assert rows == {"u^0 v^0": False, "u^0 v^1": False, "u^2 v^0": True}
    assert not res["all_match"]


def test_reference_symmetry():
    # swapping (a, u) with (b, v) maps f onto g
    a, b, c = Fr(2), Fr(3), Fr(5)
    f = reference_f(a, b, c)
    g = reference_g(b, a, c)
    swapped = {(j, i): x for (i, j), x in g.terms.items()}
    assert f.terms == swapped
    assert reference_g_at_u0(a, b, c).substitute(u=0) == reference_g_at_u0(a, b, c)

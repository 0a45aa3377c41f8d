from math import comb

import pytest

from logdiv import PolyRing
from logdiv.liouville import Window, default_window, lc_cohomology, lc_module_basis, monomials

R2 = PolyRing("x y")


def test_monomials():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 4)) == comb(6, 2)
    assert monomials(3, -1) == []


def test_default_window():
    assert default_window(R2("x*y")) == Window(6, 3)


def test_module_basis_is_killed_by_df():
    f = R2("x*y")
    for form, beta in lc_module_basis(f, 1, (2, 1)):
        assert len(beta) == 2 and sum(beta) == 1
        # numerator a dx + b dy with (y dx + x dy) ∧ (a dx + b dy) = 0, i.e. b*y = a*x
        a = sum((R2.monomial(e, c) for (I, e), c in form.items() if I == (0,)), R2.zero())
        b = sum((R2.monomial(e, c) for (I, e), c in form.items() if I == (1,)), R2.zero())
        assert b * R2("y") == a * R2("x")


def test_normal_crossing_window():
    T = lc_cohomology(R2("x*y"))
    assert T.intermediate_vanishes()
    assert T.terminal_matches()
    assert T.to_json()["terminal_mismatches"] == []


def test_cusp_window():
    T = lc_cohomology(R2("x^2*y^3"), Window(5, 2))
    assert T.intermediate_vanishes() and T.terminal_matches()


def test_weighted_ring_rejected():
    with pytest.raises(ValueError):
        lc_cohomology(PolyRing("x y", weights=[2, 3])("x^3 + y^2"))

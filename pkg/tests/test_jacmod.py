import pytest

from logdiv import PolyRing
from logdiv.examples import example
from logdiv.jacmod import (
    gorenstein_symmetry_check,
    is_reduced,
    jacobian_ideal,
    jacobian_module,
    milnor_window_report,
)

from .conftest import R3

ZIEGLER_SERIES = {8: 1, 9: 4, 10: 6, 11: 6, 12: 4, 13: 1}


def test_jacobian_ideal():
    J = jacobian_ideal(R3("x^3 + y^3 + z^3"))
    assert J.krull_dimension() == 0
    with pytest.raises(ValueError):
        jacobian_ideal(R3("5"))


def test_is_reduced():
    assert is_reduced(R3("x*y*(x+y)"))
    assert not is_reduced(R3("x^2*y"))
    assert not is_reduced(R3("(x+y)^2*(x-z)"))
    assert is_reduced(R3("x^2 + y^2 + z^2"))


def test_smooth_curve_gives_milnor_algebra():
    # Jac is m-primary, so the torsion is all of R/Jac = (1 + T)^3
    M = jacobian_module(R3("x^3 + y^3 + z^3"))
    assert M.as_polynomial() == {0: 1, 1: 3, 2: 3, 3: 1}
    assert jacobian_module(R3("x*y*z")).as_polynomial() == {}


def test_two_routes_agree_on_ziegler():
    f = example("ziegler-degenerate").f()
    a = jacobian_module(f, route="linear-form")
    b = jacobian_module(f, route="variables")
    assert a.as_polynomial() == b.as_polynomial() == ZIEGLER_SERIES
    with pytest.raises(ValueError):
        jacobian_module(f, route="other")


def test_generic_ziegler_series():
    f = example("ziegler-generic").f()
    assert jacobian_module(f).as_polynomial() == {9: 4, 10: 6, 11: 6, 12: 4}


def test_milnor_window_report():
    rep = milnor_window_report(example("ziegler-degenerate").f())
    assert rep.d == 9 and rep.n == 3
    assert (2, 8, 1) in rep.window
    assert rep.entry(8) == 1
    assert rep.flags["reduced"] and rep.flags["isolated_singularities"]
    assert not rep.warnings
    data = rep.to_json()
    assert data["window"][1] == {"k": 2, "degree": 8, "dim": 1, "eigenvalue": [2, 9]}


def test_milnor_window_flags_hypotheses():
    rep = milnor_window_report(R3("x^2*y*z"))
    assert not rep.flags["reduced"]
    assert "hypothesis not met: reduced" in rep.warnings


def test_gorenstein_symmetry():
    f = example("ziegler-degenerate").f()
    c = gorenstein_symmetry_check(f)
    assert c.holds and c.witness["symmetry_axis"] == "21/2"
    assert gorenstein_symmetry_check(PolyRing("x y")("x*y")).verdict == "inconclusive"

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdiv import Ideal, PolyRing, Polynomial
from logdiv.examples import bracelet, example
from logdiv.logder import (
    Derivation,
    contract,
    der_log,
    der_log0,
    diagonal_euler_field,
    euler_field,
    euler_locus,
    freeness,
    holonomicity_certificate,
    liouville_dimension_cm,
    liouville_ideal,
    mixed_dimension_witness,
    omega_log,
    omega_log0,
    order_one_generation_certificate,
    strong_euler_at,
    tameness,
    tilde_liouville,
)
from logdiv.resolve import free_resolution

from .conftest import R3


@st.composite
def weighted_homogeneous(draw):
    n = draw(st.integers(2, 4))
    weights = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    R = PolyRing([f"x{i}" for i in range(n)], weights)
    d = draw(st.integers(1, 8))
    mons = []

    def fill(i, left, e):
        if i == n - 1:
            if left % weights[i] == 0:
                mons.append(tuple(e + [left // weights[i]]))
            return
        for k in range(left // weights[i] + 1):
            fill(i + 1, left - k * weights[i], e + [k])

    fill(0, d, [])
    if not mons:
        d = weights[0]
        mons = [tuple([1] + [0] * (n - 1))]
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=5, unique=True))
    coeffs = draw(st.lists(st.integers(-9, 9).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return Polynomial(R, dict(zip(chosen, coeffs))), d


@settings(max_examples=100)
@given(weighted_homogeneous())
def test_euler_identity(data):
    f, d = data
    R = f.ring
    lhs = sum((R.gen(i) * f.diff(i) * R.weights[i] for i in range(R.ngens)), R.zero())
    assert lhs == f * d
    assert euler_field(f)(f) == f


def test_derivation_basics():
    x, y, z = R3.gens()
    delta = Derivation(R3, (y, -x, R3.zero()))
    assert delta(x * x + y * y).is_zero()
    assert str(delta) == "y*d_x - x*d_y"
    assert delta.degree() == 0
    assert (delta + delta)(x) == y * 2


def test_normal_crossing_derivations():
    f = R3("x^2*y^3*z")
    D = der_log0(f)
    assert [str(d) for d in D.generators] == ["y*d_y - 3*z*d_z", "x*d_x - 2*z*d_z"]
    L = der_log(f)
    assert L.contains(euler_field(f))
    assert len(L.generators) == 3


def test_freeness():
    assert freeness(R3("x*y*(x+y)")).holds
    c = freeness(R3("x*y*z*(x+y+z)"))
    assert c.fails and c.witness["pdim"] == 1


def test_tameness_and_forms():
    f = R3("x*y*z*(x+y+z)")
    t = tameness(f)
    assert t.holds and t.witness["pdims"] == {1: 1, 2: 1}
    assert tameness(R3("x^2 + y^3 + z")).verdict == "inconclusive"
    assert len(omega_log(R3("x*y"), 1).gens) == 3
    assert free_resolution(omega_log0(f, 1)).pdim() is not None


def test_contraction_with_euler_field_gives_f():
    f = R3("x*y*(x+y)")
    E = euler_field(f)
    cols = contract(E, 1)
    # iota_E(df) = E(f) = f
    df = [f.diff(i) for i in range(3)]
    assert sum((col[0] * a for col, a in zip(cols, df)), R3.zero()) == f


def test_bracelet_log0_forms_are_free():
    res = free_resolution(omega_log0(bracelet(), 1))
    assert res.ranks == (1,)


def test_saito_holonomic_failure():
    c = holonomicity_certificate(example("saito").f())
    assert c.fails and c.witness["k"] == 0 and c.witness["dimension"] == 1


def test_strong_euler():
    f = example("ehom5").f()
    assert strong_euler_at(f, [0, 0, 0]).holds
    assert strong_euler_at(f, [0, 0, 1]).fails
    with pytest.raises(ValueError):
        strong_euler_at(f, [1, 1, 1])
    assert euler_locus(R3("x*y*z")).is_unit()


def test_liouville_normal_crossing():
    f = R3("x^2*y^3*z")
    L = liouville_ideal(f)
    assert L.ideal.krull_dimension() == 4
    c = liouville_dimension_cm(f)
    assert c.holds and c.witness["pdim"] == c.witness["codimension"] == 2
    assert tilde_liouville(f).ideal.krull_dimension() == 3


def test_diagonal_euler_field():
    R = PolyRing("x y")
    assert str(diagonal_euler_field(R("x^2 + y^3"))) == "1/2*x*d_x + 1/3*y*d_y"
    assert diagonal_euler_field(R("x^2 + y^3 + x*y")) is None
    with pytest.raises(ValueError):
        tilde_liouville(R("x^2 + y^3 + x*y"))


def test_lfrad_family_mixed_dimensions():
    f = example("lfrad-family").f()
    c = liouville_dimension_cm(f)
    assert c.fails
    assert c.witness["dimension"] == 7
    mixed = c.witness["mixed_dimensions"]
    assert mixed["test"] == "saturation by a variable"
    assert mixed["saturation_dimension"] < mixed["dimension"] == 7


def test_mixed_dimension_witness_none_for_prime():
    R = PolyRing("x y")
    assert mixed_dimension_witness(Ideal(R, [R("x - y^2 - 1")]), [0, 1]) is None


def test_ann_order_one():
    assert order_one_generation_certificate(R3("x^2*y^3*z")).holds
    assert order_one_generation_certificate(R3("x*y*z*(x+y+z)")).holds


def test_inhomogeneous_derivations():
    R = PolyRing("x y")
    f = R("x^2 + y^3 + x*y")
    D = der_log0(f)
    for d in D.generators:
        assert d(f).is_zero()

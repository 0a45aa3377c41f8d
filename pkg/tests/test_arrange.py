import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdiv import PolyRing
from logdiv.arrange import (
    Arrangement,
    ArrangementError,
    Subspace,
    ZetaFunction,
    essentialize,
    full_subarrangement,
    intersection_lattice,
    is_indecomposable,
    linear_factors,
    nd_candidates,
    nd_check,
    parse_arrangement,
    pascal_check,
    pascal_hexagons,
    primitive_vector,
    syzygetic_lattice,
    zeta_pole_analysis,
    zeta_topological,
)
from logdiv.examples import PASCAL_TRIPLES, quadric_values, ziegler_generic, ziegler_points
from logdiv.linalg import rank


def test_parse_formats():
    A = parse_arrangement("vars 3\n1 0 0\n0 1 0 : 2  # comment\n0 0 1, 1 1 1")
    assert A.size == 4 and A.d == 5 and A.multiplicities == (1, 2, 1, 1)
    B = parse_arrangement("vars u v\n2*u + v : 3\nv")
    assert B.names == ("u", "v") and B.forms == ((2, 1), (0, 1))
    C = parse_arrangement("x, y, x - y")
    assert str(C.polynomial()) == "x^2*y - x*y^2"


@pytest.mark.parametrize(
    "text",
    ["", "vars 2\n1 0 0", "vars 2\n0 0", "x + 1", "x : 0", "vars x y\nx*y"],
)
def test_parse_errors(text):
    with pytest.raises(ArrangementError):
        parse_arrangement(text)


def test_proportional_forms_merge_with_warning():
    with pytest.warns(UserWarning):
        A = Arrangement.from_forms([[1, 1, 0], [-2, -2, 0]])
    assert A.forms == ((1, 1, 0),) and A.multiplicities == (2,)
    assert primitive_vector([0, -4, 6]) == (0, 2, -3)


def test_linear_factors_and_from_polynomial():
    R = PolyRing("x y z")
    assert linear_factors(R("x^2 + y^2")) is None
    A = Arrangement.from_polynomial(R("x^2*y*(x+y)"))
    assert sorted(A.multiplicities) == [1, 1, 2]


def test_characteristic_polynomials():
    generic = parse_arrangement("x, y, z, x + y + z")
    assert intersection_lattice(generic).characteristic_polynomial() == [1, -4, 6, -3]
    braid = parse_arrangement("x, y, z, x - y, x - z, y - z")
    L = intersection_lattice(braid)
    assert L.characteristic_polynomial() == [1, -6, 11, -6]
    assert sorted(len(F.hyperplanes) for F in L.by_rank(2)) == [2, 2, 2, 3, 3, 3, 3]


def test_subspaces():
    U = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
    V = Subspace.span(3, [[0, 1, 0], [0, 0, 1]])
    assert (U & V) == Subspace.span(3, [[0, 1, 0]])
    assert (U + V).dim == 3
    assert Subspace.kernel(3, [[1, 1, 1]]).dim == 2


def test_essentialize_and_full_subarrangement():
    A = parse_arrangement("vars 3\n1 0 0\n0 1 0\n1 1 0")
    assert essentialize(A).n == 2
    braid = parse_arrangement("x, y, z, x - y, x - z, y - z")
    L = intersection_lattice(braid)
    F = next(F for F in L.by_rank(2) if len(F.hyperplanes) == 3)
    sub = full_subarrangement(braid, F)
    assert sub.n == 2 and sub.size == 3


def test_decomposability():
    c = is_indecomposable(parse_arrangement("x, y, z"))
    assert c.fails and c.witness["witness"] == "x*d_x - y*d_y"
    assert is_indecomposable(parse_arrangement("x, y, z, x + y + z")).holds
    assert is_indecomposable(parse_arrangement("x, y, x + y, z")).fails


def test_nd():
    c = nd_check(parse_arrangement("x, y, z, x + y + z"))
    assert c.holds and c.witness["candidate"] == Fraction(-3, 4)
    assert c.witness["killers_degree_-1"] == c.witness["killers_degree_0"] == 0
    assert nd_check(parse_arrangement("x, y, z")).verdict == "inconclusive"
    vals = [c.value for c in nd_candidates(parse_arrangement("x, y, x + y"))]
    assert vals == [-1, -1, -1, Fraction(-2, 3)]


def test_zeta_function_arithmetic():
    Z = ZetaFunction.term(2, [(3, 2)]) + ZetaFunction.term(-1, [(1, 1)])
    assert str(Z) == "-s/((s + 1)*(3*s + 2))"
    assert Z(1) == Fraction(2, 5) - Fraction(1, 2)
    assert (ZetaFunction.term(1, [(1, 1)]) * ZetaFunction.term(1, [(1, 1)])).poles() == {-1: 2}


def test_zeta_examples_and_models():
    assert str(zeta_topological(parse_arrangement("x, y, z"))) == "1/(s + 1)^3"
    gen = parse_arrangement("x, y, z, x + y + z")
    a = zeta_topological(gen, model="blowup")
    assert a == zeta_topological(gen, model="full")
    assert str(a) == "(3 - 2*s + s^2)/((s + 1)^2*(4*s + 3))"
    with pytest.raises(ValueError):
        zeta_topological(gen, model="snc")
    with pytest.raises(NotImplementedError):
        zeta_topological(parse_arrangement("vars 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n1 1 1 1"))


def test_zeta_of_product_is_product():
    left = parse_arrangement("vars 3\n1 0 0\n0 1 0\n1 1 0")
    prod = parse_arrangement("vars 3\n1 0 0\n0 1 0\n1 1 0\n0 0 1")
    assert zeta_topological(prod) == zeta_topological(left) * zeta_topological(parse_arrangement("vars 1\n1"))


@st.composite
def boolean_multi(draw):
    r = draw(st.integers(1, 3))
    rows = draw(
        st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=r, max_size=r).filter(
            lambda rows: rank(rows, 3) == len(rows)
        )
    )
    mults = draw(st.lists(st.integers(1, 5), min_size=r, max_size=r))
    return Arrangement.from_forms(rows, mults)


@settings(max_examples=20)
@given(boolean_multi())
def test_snc_two_model_consistency(A):
    # identity model, blow-up models and the product formula agree
    Z = zeta_topological(A, model="snc")
    assert Z == zeta_topological(A, model="blowup") == zeta_topological(A, model="full")
    expected = ZetaFunction.term(1, [(m, 1) for m in A.multiplicities])
    assert Z == expected


small_forms = st.lists(st.integers(-2, 2), min_size=3, max_size=3).filter(any)


@st.composite
def arrangements(draw, min_size=2, max_size=6):
    forms = draw(st.lists(small_forms, min_size=min_size, max_size=max_size))
    mults = draw(st.lists(st.integers(1, 3), min_size=len(forms), max_size=len(forms)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return Arrangement.from_forms(forms, mults)


invertible = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=3, max_size=3).filter(
    lambda m: m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    != 0
)


@settings(max_examples=25)
@given(arrangements(), invertible)
def test_indecomposability_invariant_under_linear_change(A, M):
    moved = [[sum(v[k] * M[k][j] for k in range(3)) for j in range(3)] for v in A.forms]
    B = Arrangement.from_forms(moved, A.multiplicities)
    a, b = is_indecomposable(A), is_indecomposable(B)
    assert a.verdict == b.verdict
    assert a.witness["killer_dimension"] == b.witness["killer_dimension"]


@settings(max_examples=10)
@given(arrangements(min_size=2, max_size=5))
def test_zeta_poles_matched_by_candidates(A):
    c = zeta_pole_analysis(A)
    assert c.holds, c.witness


def test_pascal_on_ziegler_points():
    pts = ziegler_points()
    assert quadric_values(pts) == [0] * 6
    assert pascal_check(pts, PASCAL_TRIPLES)["pascal_lines"] == 1
    assert pascal_check(pts)["pascal_lines"] == 60
    _, gen = ziegler_generic()
    assert quadric_values(gen)[5] != 0
    assert pascal_check(gen, PASCAL_TRIPLES)["pascal_lines"] == 0
    assert pascal_check(gen)["pascal_lines"] == 0
    assert len(pascal_hexagons()) == 60


def test_syzygetic_lattice_witnesses():
    S = syzygetic_lattice(parse_arrangement("x, y, z, x + y + z"), max_rounds=2)
    assert S.syzygetic
    for V, (level, family) in S.syzygetic.items():
        assert V.dim < sum(W.dim for W in family)
    assert S.to_json()["levels"][0] == len(S.levels[0])

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdiv import FreeModule, Ideal, PolyRing, Submodule, hilbert_series, intersect, syzygies
from logdiv.budget import Budget, BudgetExhausted, use_budget
from logdiv.gb import InhomogeneousError, _saturate_by_variables, saturate_irrelevant

from .conftest import R3, homogeneous_polynomials, polynomials

R2 = PolyRing("x y")


def test_twisted_cubic_basis():
    I = Ideal(R3, [R3("x^2 - y"), R3("x*y - z")])
    assert set(map(str, I.gb_polys)) == {"y^2 - x*z", "x*y - z", "x^2 - y"}
    assert I.krull_dimension() == 1
    assert I.contains(R3("x^3 - z"))
    assert not I.contains(R3("x^3 - x*z"))


def test_lex_elimination():
    R = PolyRing("x y z", order="lex")
    I = Ideal(R, [R("x - y^2"), R("y - z^3")])
    assert [str(g) for g in I.gb_polys] == ["y - z^3", "x - z^6"]


def test_colon_intersection_saturation():
    J = Ideal(R3, [R3("x*y"), R3("x*z")])
    assert set(map(str, J.colon(R3("x")).gb_polys)) == {"y", "z"}
    assert [str(g) for g in intersect(J, Ideal(R3, [R3("y")])).gb_polys] == ["x*y"]
    K = Ideal(R2, [R2("x^2"), R2("x*y")])
    assert [str(g) for g in saturate_irrelevant(K).gb_polys] == ["x"]
    assert [str(g) for g in _saturate_by_variables(K).gb_polys] == ["x"]


def test_hilbert_series():
    K = Ideal(R3, [R3("x^2"), R3("y^2")])
    assert str(K.quotient_hilbert_series()) == "(1 + 2*T + T^2)/(1-T)"
    assert str(hilbert_series(Ideal(R3, [R3("x*y")]))) == "(1 + T)/(1-T)^2"
    with pytest.raises(InhomogeneousError):
        Ideal(R3, [R3("x^2 - y")]).quotient_hilbert_series()


def test_hilbert_series_matches_monomial_count():
    # dimension of (R/I)_t counted from standard monomials
    I = Ideal(R3, [R3("x^2 - y*z"), R3("x*y"), R3("z^3")])
    hs = I.quotient_hilbert_series().coefficients(6)
    leads = I.lead_monomials()[0]
    for t in range(7):
        count = 0
        for a in range(t + 1):
            for b in range(t + 1 - a):
                m = (a, b, t - a - b)
                count += not any(all(u <= v for u, v in zip(l, m)) for l in leads)
        assert hs.get(t, 0) == count


def test_budget_is_enforced():
    I = Ideal(R3, [R3("x^3 - y*z^2"), R3("y^3 - x^2*z"), R3("z^3 - x*y^2")])
    with pytest.raises(BudgetExhausted):
        with use_budget(Budget(max_pairs=1)):
            I.groebner()
    with pytest.raises(ValueError):
        Budget(seconds=0)


def _ideal(polys):
    polys = [p for p in polys if not p.is_zero()]
    return Ideal(R3, polys or [R3.zero()])


small = polynomials(max_terms=3, max_deg=2)


@given(st.lists(small, min_size=1, max_size=3), small)
def test_normal_form_idempotent(gens, p):
    I = _ideal(gens)
    r = I.normal_form(p)
    assert I.normal_form(r) == r
    assert I.contains(p - r[0])


@given(st.lists(small, min_size=2, max_size=3), st.randoms(use_true_random=False))
def test_gb_independent_of_generator_order(gens, rnd):
    perm = list(gens)
    rnd.shuffle(perm)
    assert [str(g) for g in _ideal(gens).gb_polys] == [str(g) for g in _ideal(perm).gb_polys]


@given(st.lists(homogeneous_polynomials(), min_size=1, max_size=3))
def test_syzygies_verified(gens):
    F = FreeModule(R3, 1)
    vecs = [F.element([g]) for g in gens]
    S = syzygies(vecs)
    for s in S.gens:
        acc = F.zero()
        for c, v in zip(s.components, vecs):
            acc = acc + v * c
        assert acc.is_zero()


@given(st.lists(homogeneous_polynomials(), min_size=1, max_size=3))
def test_saturation_idempotent(gens):
    I = _ideal(gens)
    S = saturate_irrelevant(I)
    assert S.contains_submodule(I)
    assert saturate_irrelevant(S) == S


def test_submodule_membership():
    F = FreeModule(R3, 2)
    M = Submodule(F, [F.element([R3("x"), R3("y")]), F.element([R3("z"), R3("0")])])
    assert M.contains(F.element([R3("x*z + z^2"), R3("y*z")]))
    assert not M.contains(F.element([R3("0"), R3("x")]))


def test_random_gb_reduces_generators():
    rnd = random.Random(7)
    for _ in range(5):
        gens = [R3.monomial([rnd.randint(0, 2) for _ in range(3)], rnd.randint(1, 3)) + R3("x*y") for _ in range(3)]
        I = Ideal(R3, gens)
        for g in gens:
            assert I.normal_form(g).is_zero()

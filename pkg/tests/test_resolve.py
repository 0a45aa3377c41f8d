from hypothesis import given
from hypothesis import strategies as st

from logdiv import FreeModule, Ideal, PolyRing, Submodule
from logdiv.resolve import euler_characteristic_check, free_resolution, pdim

from .conftest import R3, homogeneous_polynomials


def test_koszul_complex():
    res = free_resolution(Ideal(R3, [R3("x"), R3("y"), R3("z")]), quotient=True)
    assert res.ranks == (1, 3, 3, 1)
    assert res.betti() == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}
    assert res.pdim() == 3
    assert euler_characteristic_check(res)


def test_twisted_cubic():
    R = PolyRing("a b c d")
    I = Ideal(R, [R("a*c - b^2"), R("b*d - c^2"), R("a*d - b*c")])
    res = free_resolution(I, quotient=True)
    assert res.betti() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert not res.has_unit_entries()
    assert euler_characteristic_check(res)


def test_submodule_resolution_and_cutoff():
    F = FreeModule(R3, 2)
    M = Submodule(F, [F.element([R3("x"), R3("y")]), F.element([R3("y"), R3("z")])])
    res = free_resolution(M)
    assert res.ranks == (2,)
    assert euler_characteristic_check(res)
    cut = free_resolution(Ideal(R3, [R3("x"), R3("y"), R3("z")]), quotient=True, max_length=1)
    assert not cut.complete and cut.pdim() is None
    assert pdim(Ideal(R3, [R3("x*y")]), quotient=True) == 1


ideals = st.lists(homogeneous_polynomials(), min_size=1, max_size=3)


@given(ideals)
def test_resolution_is_a_complex_with_right_series(gens):
    res = free_resolution(Ideal(R3, gens), quotient=True)
    assert res.check_complex()
    assert euler_characteristic_check(res)
    assert not res.has_unit_entries()


@given(ideals, st.randoms(use_true_random=False))
def test_betti_numbers_invariant_under_permutation(gens, rnd):
    perm = list(gens)
    rnd.shuffle(perm)
    a = free_resolution(Ideal(R3, gens), quotient=True).betti()
    b = free_resolution(Ideal(R3, perm), quotient=True).betti()
    assert a == b


@given(ideals)
def test_schreyer_route_agrees(gens):
    I = Ideal(R3, gens)
    assert free_resolution(I, quotient=True).betti() == free_resolution(I, quotient=True, schreyer_only=True).betti()

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from gepner import interring as ir


def test_ring_axioms_are_checked():
    with pytest.raises(ValueError):
        ir.GradedRing(2, ["1", "a", "pt"], [0, 1, 2], {("a", "a"): {"a": 1}}, {"pt": 1})


def test_p2_todd_and_chi():
    R = ir.p2()
    assert R.todd == R.one() + R.basis("h") * Fraction(3, 2) + R.basis("pt")


@given(st.integers(-8, 8))
def test_p2_riemann_roch(k):
    R = ir.p2()
    assert ir.chi_rr(R, ir.line_bundle_p2(R, k)) == Fraction((k + 1) * (k + 2), 2)


def gbinom(a, b):
    """Binomial coefficient a choose b for any integer a."""
    num = 1
    for i in range(b):
        num *= a - i
    return Fraction(num, factorial(b))


@given(st.integers(-6, 6))
def test_fourfold_hilbert_polynomial(k):
    X = ir.cubic_fourfold()
    assert ir.chi_rr(X, ir.exp(X.basis("H") * k)) == gbinom(k + 5, 5) - gbinom(k + 2, 5)


def test_fourfold_hilbert_values():
    # chi(O_X(k)) for k = -3..3, from C(k+5, 5) - C(k+2, 5)
    X = ir.cubic_fourfold()
    got = [ir.chi_rr(X, ir.exp(X.basis("H") * k)) for k in range(-3, 4)]
    assert got == [1, 0, 0, 1, 6, 21, 55]


def test_fourfold_products():
    X = ir.cubic_fourfold()
    H, P = X.basis("H"), X.basis("P")
    assert (H ** 4).integrate() == 3
    assert (P * P).integrate() == 3
    assert (H * H * P).integrate() == 1


def test_plane_class_and_ch_sides():
    X = ir.cubic_fourfold()
    assert ir.ch_plane_in_fourfold(X) == X.basis("P") - X.basis("pt") * Fraction(1, 4)
    left, right = ir.fourfold_ch_sides(X)
    assert left == right == ir.fourfold_target(X)


def test_cubic_surface():
    R = ir.cubic_surface()
    H = ir.anticanonical_surface(R)
    assert (H * H).integrate() == 3
    assert ir.chi_rr(R, R.one()) == 1


def test_exp_and_inverse():
    R = ir.p2()
    h = R.basis("h")
    assert ir.exp(h) * ir.exp(-h) == R.one()
    x = R.one() * 2 + h
    assert x * ir.inverse(x) == R.one()
    with pytest.raises(ValueError):
        ir.exp(R.one())


def test_k3_ring():
    R = ir.k3_surface([[2]])
    assert ir.chi_rr(R, R.one()) == 2
    L = ir.exp(R.basis("g0"))
    # chi(L) = 2 + L^2/2
    assert ir.chi_rr(R, L) == 3


# ------------------------------------------------------------ cohomology tables

def test_mkl_values():
    assert ir.mkl(0, 0).dims == {0: 1}
    assert ir.mkl(0, -3).dims == {2: 1}
    assert ir.mkl(-4, -3).dims == {5: 3}
    assert ir.mkl(0, 1).dims == {0: 3}


@given(st.integers(-3, -1), st.integers(-20, 20))
def test_mkl_vanishing_strip(k, l):
    assert ir.mkl(k, l).is_zero()


@given(st.integers(-10, 10), st.integers(-10, 10))
def test_mkl_serre_duality(k, l):
    assert ir.mkl(k, l) == ir.mkl(-k - 4, -l - 2).dual(5)


def test_mkl_corner_with_transposed_indices():
    for l in (-2, -1, 0):
        assert ir.mkl(-6 - l, l).dims == {5: 1}
    # the other index order is not C[-5]
    assert ir.mkl(-1, -5).is_zero()
    assert ir.mkl(0, -6).dims == {2: 10}


def test_two_term_complexes():
    t = ir.two_term_complex([(-1, -1, 1), (-1, -2, 3), (-1, -3, 3), (-1, -4, 1)],
                            [(0, -1, 3), (0, -2, 2), (0, -3, 3)])
    assert t.dims == {2: 3} and t.exact
    t = ir.two_term_complex([(0, 0, 1)], [(0, 0, 1)])
    assert not t.exact and t.euler() == 0


def test_pn_cohom():
    assert ir.pn_cohom(2, -3).dims == {2: 1}
    assert ir.pn_cohom(2, -1).is_zero()
    assert ir.pn_cohom(2, 2).dims == {0: 6}

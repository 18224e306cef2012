from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gepner import lattice as la
from gepner.exact import omega

W = omega()
ints = st.integers(-5, 5)


@pytest.fixture(scope="module")
def V():
    return la.dataset_v_b012()


def test_chi_b_depends_on_difference():
    table = {0: 2, 1: 3, -1: 3, 2: 6, -2: 6, 3: 11, -3: 11}
    for k, want in table.items():
        assert la.chi_b(0, k) == want
        assert la.chi_b(2, 2 + k) == want


def test_ch_b_periodicity():
    # B_{i+2} = B_i(1), so rank stays 8
    assert all(la.ch_b(i).v[0] == 8 for i in range(-2, 6))
    assert la.ch_b(2).v == (8, -4, 4)


def test_v_euler_form(V):
    assert V.lat.euler == [[2, 3, 6], [3, 2, 3], [6, 3, 2]]


def test_tensor_and_fb_inverse_matrices(V):
    assert V.tensor.matrix == [[0, 0, 1], [1, 0, -3], [0, 1, 3]]
    assert V.fb_inverse.matrix == [[0, 0, -1], [-1, 0, 3], [3, 1, 0]]
    assert V.fb_inverse ** 3 == V.fb_inverse ** 0
    assert V.fb_inverse ** -1 == V.fb_inverse ** 2


def test_isometries(V):
    assert V.tensor.is_isometry()
    assert V.fb_inverse.is_isometry()


def test_eigenspaces(V):
    F = V.fb_inverse
    assert la.gepner_eigenspace(F, 1) == [[1, -4, -1]]
    assert la.gepner_eigenspace(F, W) == [V.u]
    assert la.gepner_eigenspace(F, W * W) == [[1, -3 - W, 1 + W]]
    assert la.gepner_eigenspace(F, 2) == []


def test_formal_inverse_collects_coefficients():
    assert la.formal_fb_inverse_on_b(0) == {1: -1, 2: 3}
    # i = 1 lands on B2 twice: -1 + chi(B1, B1) = 1
    assert la.formal_fb_inverse_on_b(1) == {2: 1}


@given(st.lists(ints, min_size=3, max_size=3), st.lists(ints, min_size=3, max_size=3),
       st.lists(ints, min_size=3, max_size=3))
def test_twists_are_inverse_isometries(e, x, y):
    L = la.dataset_v_b012().lat
    ev = L.vec(e)
    T, Ti = la.twist_action(L, ev), la.inv_twist_action(L, ev)
    xv, yv = L.vec(x), L.vec(y)
    if L.chi(ev, ev) == 2:
        assert Ti(T(xv)) == xv
        assert L.chi(T(xv), T(yv)) == L.chi(xv, yv)


def test_spherical_basis_twist(V):
    for i in range(3):
        T = la.twist_action(V.lat, V.lat.basis(i))
        assert T.is_isometry()
        assert T(V.lat.basis(i)) == -V.lat.basis(i)


def test_lattice_shape_errors():
    with pytest.raises(ValueError):
        la.NumLattice(["a", "b"], [[1, 0]])
    with pytest.raises(ValueError):
        la.dataset_v_b012().lat.vec([1, 2])


# ------------------------------------------------------------ cubic surface

def test_surface_serre_columns():
    D = la.dataset_cubic_surface()
    cols = D.serre.columns()
    assert cols[0] == [4, -3] + [1] * 6
    assert cols[1] == [9, -5] + [1] * 6
    assert cols[2] == [2, -1, 1, 0, 0, 0, 0, 0]
    assert D.serre.is_isometry()


def test_surface_eigenvector():
    D = la.dataset_cubic_surface()
    (es,) = la.gepner_eigenspace(D.serre, W)
    assert la.same_line(es, D.u)
    assert la.gepner_eigenspace(D.serre, -W) == []


# ------------------------------------------------------------ cubic threefold

def test_threefold_data():
    D = la.dataset_cubic_threefold()
    assert D.serre ** 3 == -(D.serre ** 0)
    assert D.phi_inverse == [[Fraction(3, 8), Fraction(1, 2)], [Fraction(1, 4), 0]]
    assert D.chi_rd == [[Fraction(-19, 64), Fraction(-3, 16)], [Fraction(-5, 16), Fraction(-1, 4)]]
    (es,) = la.gepner_eigenspace(-D.serre_inverse, W)
    assert la.same_line(es, D.u)


def test_central_charge_is_linear():
    D = la.dataset_cubic_threefold()
    a, b = D.lat.basis(0), D.lat.basis(1)
    za, zb = la.central_charge(D.lat, D.u, a), la.central_charge(D.lat, D.u, b)
    assert la.central_charge(D.lat, D.u, a * 2 + b) == 2 * za + zb

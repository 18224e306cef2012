import pytest
from hypothesis import given, settings, strategies as st

from gepner import clifford as cl
from gepner.charge import z_gepner
from gepner.mf import verify_mf
from gepner.polyring import Poly, PolyMatrix

FERMAT = cl.fermat_plane_cubic()


def P6(text):
    return Poly.parse(text, 6)


def test_fermat_decomposition():
    dec = cl.decompose(FERMAT)
    assert dec.W1 == P6("x1^3 + x2^3 + x3^3")
    assert all(not dec.Wij[i][j] for i in range(3) for j in range(3))
    assert dec.Wi == [P6("x4^2"), P6("x5^2"), P6("x6^2")]
    assert dec.W2 == dec.W1
    assert dec.dprime(4) == P6("x1*x4")


def test_mixed_terms_split_symmetrically():
    dec = cl.decompose(P6("x1*x2*x4 + x1^2*x5"))
    assert dec.Wij[0][1] == dec.Wij[1][0] == P6("x4") / 2
    assert dec.Wij[0][0] == P6("x5")
    assert cl.recompose(dec) == dec.W


def test_plane_not_contained():
    with pytest.raises(cl.PlaneNotContained):
        cl.decompose(FERMAT + P6("x4^3"))


def test_wrong_shape_inputs():
    with pytest.raises(ValueError):
        cl.decompose(Poly.parse("x1^3", 3))
    with pytest.raises(ValueError):
        cl.decompose(P6("x1^2"))


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_random_round_trip_and_euler(seed):
    dec = cl.decompose(cl.random_plane_cubic(seed))
    assert cl.recompose(dec) == dec.W
    assert not cl.euler_plane_identity(dec)


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_random_clifford_identities(seed):
    dec = cl.decompose(cl.random_plane_cubic(seed))
    assert cl.check_MN(dec)
    assert verify_mf(cl.clifford_mf(dec), dec.W)


def test_fermat_clifford_mf():
    dec = cl.decompose(FERMAT)
    v = cl.check_MN(dec)
    assert v, v.reason()
    P = cl.clifford_mf(dec)
    assert P.rank == 8
    assert verify_mf(P, FERMAT)
    oe, eo = cl.wedge_contract_delta(dec)
    assert oe @ eo == PolyMatrix.identity(6, 8).scale(FERMAT)


def test_clifford_mf_has_zero_charge():
    assert z_gepner(cl.clifford_mf(cl.decompose(FERMAT))) == 0


def test_hessian_s_fermat():
    s = cl.hessian_s(cl.decompose(FERMAT))
    assert s.shape == (4, 4)
    y = [Poly.var(7, i) for i in range(3)]
    for i in range(3):
        assert s[i, i] == y[i]
    w1 = Poly.parse("x1^3 + x2^3 + x3^3", 7)
    assert s[3, 3] == w1
    assert s == s.transpose()

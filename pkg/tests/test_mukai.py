from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gepner import mukai as mk
from gepner.exact import sqrt_minus3

F = Fraction
S3 = sqrt_minus3()
GRAMS = [[[2]], [[2, 1], [1, -2]], [[2, 0, 0], [0, -2, 1], [0, 1, -4]]]
small = st.integers(-6, 6)
halves = st.integers(-6, 6).map(lambda k: F(k, 2))


@pytest.mark.parametrize("gram,msg", [
    ([[2, 1]], "square"),
    ([[F(1, 2)]], "integral"),
    ([[2, 1], [0, -2]], "symmetric"),
    ([[4]], "h.h = 2"),
    ([[2, 0], [0, 2]], "signature"),
    ([[2, 0], [0, 0]], "signature"),
])
def test_ns_validation(gram, msg):
    with pytest.raises(ValueError, match=msg):
        mk.NSLattice(gram)


def test_signature():
    assert mk.signature([[F(2), F(0)], [F(0), F(-2)]]) == (1, 1, 0)
    assert mk.signature([[F(1), F(1)], [F(1), F(1)]]) == (1, 0, 1)


def test_beta_field():
    assert mk.BetaField([F(1, 2)]).coords == (F(1, 2),)
    assert not mk.BetaField([F(1, 2)]).is_integral()
    with pytest.raises(ValueError):
        mk.BetaField([F(1, 3)])


def test_vector_shape_and_frames():
    ns = mk.NSLattice([[2]])
    with pytest.raises(ValueError):
        mk.vector(ns, 1, [0, 0], 0)
    v = mk.vector(ns, 1, [0], 0)
    w = mk.to_frak_frame(v, mk.BetaField([0]))
    with pytest.raises(ValueError):
        v + w
    with pytest.raises(ValueError):
        mk.z_gepner_k3(v)
    with pytest.raises(ValueError):
        mk.to_frak_frame(w, mk.BetaField([0]))


@st.composite
def ns_and_vectors(draw):
    gram = draw(st.sampled_from(GRAMS))
    ns = mk.NSLattice(gram)
    n = len(gram)

    def vec():
        return mk.vector(ns, draw(small), [draw(small) for _ in range(n)], draw(small))

    B = tuple(draw(halves) for _ in range(n))
    C = tuple(draw(halves) for _ in range(n))
    return ns, vec(), vec(), B, C


@given(ns_and_vectors())
def test_exp_twist_is_an_isometric_action(data):
    ns, v, w, B, C = data
    assert mk.mukai_pairing(mk.exp_twist(B, v), mk.exp_twist(B, w)) == mk.mukai_pairing(v, w)
    BC = tuple(b + c for b, c in zip(B, C))
    assert mk.exp_twist(B, mk.exp_twist(C, v)) == mk.exp_twist(BC, v)
    assert mk.exp_twist(tuple(-b for b in B), mk.exp_twist(B, v)) == v


def test_u_vectors():
    ns = mk.NSLattice([[2, 1], [1, -2]])
    beta = mk.BetaField([F(1), F(-1)])
    u0 = mk.u_vector(ns, 0, beta)
    # beta^2 = 2 - 2 - 2 = -2
    assert u0.astuple() == (2, 1, -1, F(0))
    assert mk.u_vector(ns, 2, beta) == mk.exp_twist(ns.h(), u0)
    lhs, rhs = mk.u_class(ns, beta)
    assert lhs == rhs


@pytest.mark.parametrize("gram", GRAMS)
@pytest.mark.parametrize("k", [0, 1, -2])
def test_u2_frak_and_charges(gram, k):
    ns = mk.NSLattice(gram)
    beta = mk.BetaField([F(k, 2)] + [F(1)] * (ns.rho - 1))
    u2 = mk.to_frak_frame(mk.u_vector(ns, 2, beta), beta)
    assert u2.astuple() == (2,) + tuple(x / 2 for x in ns.h()) + (F(5, 8),)
    pt = mk.to_frak_frame(mk.vector(ns, 0, ns.zero(), 1), beta)
    assert mk.z_gepner_k3(u2) == F(-1, 4) + S3 / 4
    assert mk.z_gepner_k3(u2 * 2 - pt) == F(1, 2) + S3 / 2
    assert mk.z_gepner_k3(pt) == -1
    assert mk.slope_mu(u2) == F(1, 2)
    assert mk.slope_mu(pt) == mk.INF


@given(st.sampled_from(GRAMS[:2]), st.data())
def test_integrality_of_integral_vectors(gram, data):
    ns = mk.NSLattice(gram)
    n = len(gram)
    xi = mk.vector(ns, 2 * data.draw(small), [data.draw(small) for _ in range(n)], data.draw(small))
    beta = mk.BetaField([data.draw(small) for _ in range(n)])
    r = mk.integrality_report(xi, beta)
    assert r.ok, r.checks
    assert r.z == mk.z_gepner_k3(r.v_frak)


@pytest.mark.parametrize("xi,beta", [
    ((1, [0], 0), [0]),
    ((2, [F(1, 2)], 0), [0]),
    ((2, [0], 0), [F(1, 2)]),
])
def test_integrality_preconditions(xi, beta):
    ns = mk.NSLattice([[2]])
    with pytest.raises(ValueError):
        mk.integrality_report(mk.vector(ns, *xi), mk.BetaField(beta))


def test_exclusion_chain_for_picard_rank_one():
    res = mk.spherical_exclusion(mk.NSLattice([[2]]))
    assert res.excluded
    assert res.chain["v0_candidates"] == [2]
    assert res.chain["v2_candidates"] == {"2": ["3/8"]}
    assert res.chain["gamma_squared"] == ["-2"]
    assert res.chain["h_perp_basis"] == []


@pytest.mark.parametrize("gram,excluded", [
    ([[2, 0], [0, -2]], False),
    ([[2, 1], [1, -4]], True),
    ([[2, 0, 0], [0, -2, 1], [0, 1, -4]], False),
])
def test_exclusion_witnesses(gram, excluded):
    ns = mk.NSLattice(gram)
    res = mk.spherical_exclusion(ns)
    assert res.excluded == excluded
    if not excluded:
        w = res.witness
        assert ns.dot(w, w) == -2 and ns.dot(w, ns.h()) == 0


def test_h_perp_basis_is_orthogonal_and_saturated():
    ns = mk.NSLattice([[2, 1], [1, -4]])
    (b,) = mk.h_perp_basis(ns)
    assert ns.dot(b, ns.h()) == 0
    assert abs(b[0]) == 1 and abs(b[1]) == 2

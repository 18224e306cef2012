import pytest
from hypothesis import given, strategies as st

from gepner.corpus import build_corpus, mult_morphism, random_koszul
from gepner.mf import (
    ExteriorBasis,
    GradedMF,
    MFError,
    MFMorphism,
    cone,
    contractible,
    direct_sum,
    koszul_mf,
    normalize,
    point_object,
    shift,
    tau,
    verify_mf,
)
from gepner.polyring import Poly, PolyMatrix, fermat

X, Y = Poly.var(2, 0), Poly.var(2, 1)
XY = X * Y


def xy_mf():
    return koszul_mf([(X, Y)])


def test_rank_one_xy():
    P = xy_mf()
    assert P.grades0 == (0,) and P.grades1 == (1,)
    assert verify_mf(P, XY)
    assert P.potential() == XY


def test_verify_reports_degree_and_product_errors():
    P = GradedMF(2, 2, [0], [0], [[X]], [[Y]])
    v = verify_mf(P, XY)
    assert not v
    assert "degree" in v.reason()
    Q = GradedMF(2, 2, [0], [1], [[X]], [[X]])
    v = verify_mf(Q, XY)
    assert not v and "nonzero" in v.reason()


def test_verify_rejects_wrong_potential_degree():
    assert not verify_mf(xy_mf(), X * X * Y)


def test_shape_errors():
    with pytest.raises(MFError):
        GradedMF(2, 2, [0, 1], [0], [[X]], [[Y]])


def test_shift_squared_is_tau_d():
    P = point_object(fermat(3, 3), 1)
    assert shift(shift(P)) == tau(P, 3)
    assert shift(xy_mf()).grades0 == (1,)
    assert shift(xy_mf()).p0 == PolyMatrix(2, [[-Y]])


def test_cone_of_identity_and_multiplication():
    P = point_object(fermat(2, 3), 0)
    W = fermat(2, 3)
    C = cone(MFMorphism.identity(P))
    assert verify_mf(C, W)
    assert C.rank == 2 * P.rank
    D = cone(mult_morphism(P))
    assert verify_mf(D, W)


def test_cone_rejects_non_morphism():
    P = xy_mf()
    bad = MFMorphism(P, P, [[X]], [[Poly.zero(2)]])
    with pytest.raises(MFError):
        cone(bad)


def test_direct_sum_and_normalize():
    P = xy_mf()
    S = direct_sum(P, tau(P, 3))
    assert verify_mf(S, XY)
    N = normalize(S)
    assert N.grades0 == (3, 0)
    assert verify_mf(N, XY)


def test_contractible():
    assert verify_mf(contractible(XY, 2), XY)


def test_json_round_trip():
    P = point_object(fermat(3, 3), 2)
    assert GradedMF.from_json(P.to_json()) == P
    with pytest.raises(MFError):
        GradedMF.from_json({"d": 3})


def test_exterior_basis_signs():
    B = ExteriorBasis([(0, 1), (2, 0), (1, 2)])
    assert B.locate((1, 0)) == (0, -1)
    assert B.locate((0, 2)) == (1, -1)
    assert B.locate((0, 0)) is None


@pytest.mark.parametrize("n,d", [(1, 2), (2, 3), (3, 3), (4, 2), (5, 3), (2, 5)])
def test_point_object_shape(n, d):
    W = fermat(n, d)
    P = point_object(W, 0)
    assert P.rank == 2 ** (n - 1)
    assert verify_mf(P, W)


def test_point_object_needs_degree_two():
    with pytest.raises(MFError):
        point_object(Poly.var(2, 0), 0)


def test_koszul_errors():
    with pytest.raises(MFError):
        koszul_mf([])
    with pytest.raises(MFError):
        koszul_mf([(X, Y), (X, X * Y)])  # mixed degrees
    with pytest.raises(MFError):
        koszul_mf([(X, Y), (Y, -X)])  # W = 0


@given(st.integers(0, 10**6))
def test_random_koszul_squares_to_w(seed):
    W, P = random_koszul(seed)
    assert verify_mf(P, W)


def test_corpus_is_large_and_valid():
    c = build_corpus(0)
    assert len(c) >= 50
    assert all(verify_mf(e.mf, e.W) for e in c)
    assert max(e.mf.rank for e in c) == 64


def test_morphism_degree_check():
    P = xy_mf()
    f = MFMorphism(P, tau(P, 1), [[Poly.const(2, 1)]], [[Poly.const(2, 1)]])
    assert not f.verify()

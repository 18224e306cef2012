from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gepner.polyring import (
    NEG_INF,
    MilnorData,
    Poly,
    PolyMatrix,
    fermat,
    milnor_dimensions,
    monomials,
)


@st.composite
def forms(draw, n=3, deg=None):
    deg = draw(st.integers(0, 4)) if deg is None else deg
    terms = {}
    for e in monomials(n, deg):
        c = draw(st.integers(-3, 3))
        if c:
            terms[e] = Fraction(c)
    return Poly(n, terms)


def test_parse_and_print():
    p = Poly.parse("x1^3 - 1/2*x1*x4^2 + 2", 4)
    assert p.coeff((3, 0, 0, 0)) == 1
    assert p.coeff((1, 0, 0, 2)) == Fraction(-1, 2)
    assert p.coeff((0, 0, 0, 0)) == 2
    with pytest.raises(ValueError):
        p.constant_value()
    assert Poly.parse(str(p), 4) == p


@pytest.mark.parametrize("text", ["x5", "x1^", "x1**2", "2x", "x1 +"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        Poly.parse(text, 3)


def test_degrees():
    assert Poly.zero(2).homogeneous_degree() is NEG_INF
    assert Poly.parse("x1*x2 + x2^2", 2).homogeneous_degree() == 2
    with pytest.raises(ValueError):
        Poly.parse("x1 + x2^2", 2).homogeneous_degree()


def test_diff_and_substitute():
    p = Poly.parse("x1^2*x2 + 3*x2^3", 2)
    assert p.diff(0) == Poly.parse("2*x1*x2", 2)
    assert p.diff(1) == Poly.parse("x1^2 + 9*x2^2", 2)
    x = [Poly.var(2, i) for i in range(2)]
    assert p.substitute([x[1], x[0]]) == Poly.parse("x2^2*x1 + 3*x1^3", 2)


@given(forms(), forms(), forms())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly.zero(3)


@given(forms(), forms())
def test_leibniz(a, b):
    for i in range(3):
        assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


@given(forms(deg=3))
def test_euler_identity(a):
    x = [Poly.var(3, i) for i in range(3)]
    assert sum((x[i] * a.diff(i) for i in range(3)), Poly.zero(3)) == a * 3


@given(forms())
def test_json_round_trip(a):
    assert Poly.from_json(a.to_json()) == a


def test_json_rejects_bad_exponents():
    with pytest.raises(ValueError):
        Poly.from_json({"nvars": 2, "terms": [{"c": "1", "e": [1]}]})


def test_monomial_count():
    # C(n + d - 1, d)
    assert len(monomials(6, 3)) == 56
    assert len(monomials(3, 0)) == 1
    assert monomials(2, -1) == []


# ------------------------------------------------------------ matrices

def test_matrix_ops():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    A = PolyMatrix(2, [[x, 1], [0, y]])
    B = PolyMatrix(2, [[y, -1], [0, x]])
    assert (A @ B) == PolyMatrix(2, [[x * y, 0], [0, y * x]])
    assert A.transpose().transpose() == A
    assert A.trace() == x + y
    assert PolyMatrix.from_json(2, A.to_json()) == A
    assert (A - A).is_zero()


def test_blocks_and_permute():
    I = PolyMatrix.identity(1, 2)
    Z = PolyMatrix.zeros(1, 2, 2)
    M = PolyMatrix.blocks(1, [[Z, I], [I, Z]])
    assert M.shape == (4, 4)
    assert M.permute([2, 3, 0, 1], None) == PolyMatrix.identity(1, 4)


# ------------------------------------------------------------ Milnor rings

@pytest.mark.parametrize(
    "n,d,dims",
    # coefficients of ((1 - t^(d-1)) / (1 - t))^n
    [(3, 3, [1, 3, 3, 1]), (4, 3, [1, 4, 6, 4, 1]), (2, 4, [1, 2, 3, 2, 1]),
     (3, 5, [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]), (6, 3, [1, 6, 15, 20, 15, 6, 1])],
)
def test_fermat_milnor_dimensions(n, d, dims):
    m = MilnorData(fermat(n, d))
    assert m.isolated
    assert m.dims[: len(dims)] == dims
    assert m.milnor_number == (d - 1) ** n


def test_non_isolated():
    dims, isolated = milnor_dimensions(Poly.parse("x1^2*x2", 2))
    assert not isolated


def test_normal_form_is_linear_and_kills_the_ideal():
    W = Poly.parse("x1^3 + x2^3 + x1*x2*x3 + x3^3", 3)
    m = MilnorData(W)
    assert m.isolated
    for i in range(3):
        g = W.diff(i) * Poly.var(3, 0)
        assert not m.reduce(g)
    a = Poly.parse("x1*x2*x3", 3)
    b = Poly.parse("x1^3 - 2*x2^3", 3)
    assert m.reduce(a + b) == m.reduce(a) + m.reduce(b)


@given(forms(n=2, deg=3))
def test_milnor_palindromic_when_isolated(W):
    if not W:
        return
    m = MilnorData(W)
    if m.isolated:
        body = m.dims[: m.socle_degree + 1]
        assert body == body[::-1]
        assert m.milnor_number == 4

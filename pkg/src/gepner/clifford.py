"""Cubic fourfolds containing the plane P = {x1 = x2 = x3 = 0}.

Write W = W'(x1..x3) + sum_{i,j} x_i x_j W_ij(x4..x6) + sum_i x_i W_i(x4..x6)
with W_ij symmetric and linear, W_i quadratic, and set W'' = W' + 1/2 sum x_i x_j W_ij.
The rank-8 factorization is the operator wedge-by v plus contraction-by phi on
the exterior algebra of e1, e2, e3, f, where
    v   = x4 e1 + x5 e2 + x6 e3 + f,
    phi = d'_4 W e1* + d'_5 W e2* + d'_6 W e3* + W'' f*,    d' = d/dx / 2,
and phi(v) = W.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .mf import ExteriorBasis, GradedMF, Verdict, right_contract, right_wedge
from .polyring import Poly, PolyMatrix, monomials

NV = 6
PLANE = (0, 1, 2)
NORMAL = (3, 4, 5)

# oriented bases; generators 0, 1, 2 are e1, e2, e3 and 3 is f
EVEN = ExteriorBasis([(), (0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (0, 1, 2, 3)])
ODD = ExteriorBasis([(0,), (1,), (2,), (3,), (0, 1, 2), (0, 1, 3), (1, 2, 3), (2, 0, 3)])
EVEN_GRADES = (0, -1, -1, -1, -2, -2, -2, -3)
ODD_GRADES = (-2, -2, -2, -3, -3, -4, -4, -4)


class PlaneNotContained(ValueError):
    pass


@dataclass
class PlaneDecomposition:
    W: Poly
    W1: Poly  # W'
    Wij: list  # 3x3, symmetric, linear in x4..x6
    Wi: list  # quadratic in x4..x6
    W2: Poly  # W''

    def dprime(self, k):
        """d'_k W = (dW/dx_k)/2 for k in 4..6 (1-based)."""
        return self.W.diff(k - 1) / 2


def decompose(W: Poly) -> PlaneDecomposition:
    if W.nvars != NV:
        raise ValueError(f"need a cubic in 6 variables, got {W.nvars}")
    if W.homogeneous_degree() != 3:
        raise ValueError("W must be a homogeneous cubic")
    z = Poly.zero(NV)
    W1 = z
    Wij = [[z] * 3 for _ in range(3)]
    Wi = [z] * 3
    bad = []
    for e, c in W.terms.items():
        a = sum(e[i] for i in PLANE)
        rest = list(e)
        for i in PLANE:
            rest[i] = 0
        if a == 3:
            W1 = W1 + Poly(NV, {e: c})
        elif a == 2:
            lin = Poly(NV, {tuple(rest): c})
            idx = [i for i in PLANE for _ in range(e[i])]
            i, j = idx
            if i == j:
                Wij[i][i] = Wij[i][i] + lin
            else:
                Wij[i][j] = Wij[i][j] + lin / 2
                Wij[j][i] = Wij[j][i] + lin / 2
        elif a == 1:
            i = next(i for i in PLANE if e[i])
            Wi[i] = Wi[i] + Poly(NV, {tuple(rest): c})
        else:
            bad.append(e)
    if bad:
        raise PlaneNotContained(f"W has monomials {bad} without x1, x2, x3; the plane is not contained")
    x = [Poly.var(NV, i) for i in range(NV)]
    half = z
    for i in range(3):
        for j in range(3):
            half = half + x[i] * x[j] * Wij[i][j]
    W2 = W1 + half / 2
    return PlaneDecomposition(W, W1, Wij, Wi, W2)


def recompose(dec: PlaneDecomposition) -> Poly:
    """W' + sum x_i x_j W_ij + sum x_i W_i; equals dec.W for a valid decomposition."""
    x = [Poly.var(NV, i) for i in range(NV)]
    out = dec.W1
    for i in range(3):
        for j in range(3):
            out = out + x[i] * x[j] * dec.Wij[i][j]
        out = out + x[i] * dec.Wi[i]
    return out


def euler_plane_identity(dec: PlaneDecomposition) -> Poly:
    """Residual W'' + x4 d'_4 W + x5 d'_5 W + x6 d'_6 W - W (zero when correct)."""
    x = [Poly.var(NV, i) for i in range(NV)]
    lhs = dec.W2
    for k in (4, 5, 6):
        lhs = lhs + x[k - 1] * dec.dprime(k)
    return lhs - dec.W


def wedge_vector(dec):
    x = [Poly.var(NV, i) for i in range(NV)]
    return [x[3], x[4], x[5], Poly.const(NV, 1)]


def contraction_covector(dec):
    return [dec.dprime(4), dec.dprime(5), dec.dprime(6), dec.W2]


def wedge_contract_delta(dec: PlaneDecomposition):
    """(odd -> even block, even -> odd block) of wedge + contraction."""
    v, phi = wedge_vector(dec), contraction_covector(dec)

    def block(src, tgt):
        return right_wedge(src, tgt, v, NV) + right_contract(src, tgt, phi, NV)

    return block(ODD, EVEN), block(EVEN, ODD)


def clifford_mf(dec: PlaneDecomposition) -> GradedMF:
    odd_even, even_odd = wedge_contract_delta(dec)
    return GradedMF(3, NV, ODD_GRADES, EVEN_GRADES, odd_even, even_odd)


def build_MN(dec: PlaneDecomposition):
    """M, N1, N2, N3, N4 entered row by row as displayed for the plane construction."""
    x4, x5, x6 = (Poly.var(NV, i) for i in NORMAL)
    P4, P5, P6 = dec.dprime(4), dec.dprime(5), dec.dprime(6)
    W2 = dec.W2
    M = [
        [P4, P5, P6, W2, 0, 0, 0, 0],
        [x5, -x4, 0, 0, P6, W2, 0, 0],
        [0, x6, -x5, 0, P4, 0, W2, 0],
        [-x6, 0, x4, 0, P5, 0, 0, W2],
        [1, 0, 0, -x4, 0, -P5, 0, P6],
        [0, 1, 0, -x5, 0, P4, -P6, 0],
        [0, 0, 1, -x6, 0, 0, P5, -P4],
        [0, 0, 0, 0, 1, -x6, -x4, -x5],
    ]
    N1 = [
        [0, 1, 0, 0, -x5, x4, 0, -P6],
        [0, 0, 1, 0, 0, -x6, x5, -P4],
        [0, 0, 0, 1, x6, 0, -x4, -P5],
    ]
    N2 = [[int(j == k) for j in range(8)] for k in (5, 6, 7)]
    N3 = [[1]] + [[0]] * 7
    N4 = [[x4], [x5], [x6], [1], [0], [0], [0], [0]]
    return tuple(PolyMatrix(NV, m) for m in (M, N1, N2, N3, N4))


def check_MN(dec: PlaneDecomposition) -> Verdict:
    M, N1, N2, N3, N4 = build_MN(dec)
    W = dec.W
    fails = []
    for name, lhs, rhs in (
        ("N1*M - W*N2", N1 @ M, N2.scale(W)),
        ("M*N4 - W*N3", M @ N4, N3.scale(W)),
        ("N2*N4", N2 @ N4, PolyMatrix.zeros(NV, 3, 1)),
        ("N1*N3", N1 @ N3, PolyMatrix.zeros(NV, 3, 1)),
    ):
        res = (lhs - rhs).first_nonzero()
        if res is not None:
            fails.append(f"{name} nonzero at {res[:2]}: {res[2]}")
    odd_even, _ = wedge_contract_delta(dec)
    if odd_even != M:
        res = (odd_even - M).first_nonzero()
        fails.append(f"wedge/contraction block differs from M at {res[:2]}")
    return Verdict(not fails, fails)


def hessian_s(dec: PlaneDecomposition) -> PolyMatrix:
    """s' = 1/2 Hessian of W~ in x4..x7, with
    W~ = W'(y) x7^2 + sum y_i y_j x7 W_ij + sum y_i W_i  in variables (y1, y2, y3, x4, x5, x6, x7).
    """
    n = 7
    pos = list(range(6))
    y = [Poly.var(n, i) for i in range(3)]
    x7 = Poly.var(n, 6)
    Wt = dec.W1.embed_vars(n, pos) * x7 * x7
    for i in range(3):
        for j in range(3):
            Wt = Wt + y[i] * y[j] * x7 * dec.Wij[i][j].embed_vars(n, pos)
        Wt = Wt + y[i] * dec.Wi[i].embed_vars(n, pos)
    idx = (3, 4, 5, 6)
    return PolyMatrix(n, [[Wt.diff(a).diff(b) / 2 for b in idx] for a in idx])


def fermat_plane_cubic() -> Poly:
    return Poly.parse("x1^3 + x2^3 + x3^3 + x1*x4^2 + x2*x5^2 + x3*x6^2", NV)


def random_plane_cubic(seed: int, coeff_range: int = 3) -> Poly:
    """Random cubic with every monomial divisible by one of x1, x2, x3."""
    rng = random.Random(seed)
    terms = {}
    for e in monomials(NV, 3):
        if sum(e[i] for i in PLANE) == 0:
            continue
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            terms[e] = Fraction(c)
    if not terms:
        terms[(3, 0, 0, 0, 0, 0)] = Fraction(1)
    return Poly(NV, terms)

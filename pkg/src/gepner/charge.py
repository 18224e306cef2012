"""Gepner charge, Chern characters and the Euler pairing of graded factorizations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Cyclotomic, cyc_root
from .linalg import solve_or_none
from .mf import GradedMF
from .polyring import MilnorData, Poly, PolyMatrix


def _zeta_sum(d, grades, j):
    out = Cyclotomic(d, [0])
    for g in grades:
        out = out + cyc_root(d, j * g)
    return out


def z_gepner(P: GradedMF) -> Cyclotomic:
    """sum zeta^{grades0} - sum zeta^{grades1} in Q(zeta_d)."""
    return ch_higher(P, 1)


def ch_higher(P: GradedMF, j: int) -> Cyclotomic:
    if j % P.d == 0:
        raise ValueError("ch_j is only defined for j not divisible by d")
    return _zeta_sum(P.d, P.grades0, j) - _zeta_sum(P.d, P.grades1, j)


def supertrace_poly(P: GradedMF) -> Poly:
    """str(d_n delta ... d_1 delta) before reduction; delta maps P0 -> P1 by p0, P1 -> P0 by p1.

    Each trace is split as tr(L R) with L, R the two half products, which keeps
    the intermediate polynomials small.  The result is cached on P.
    """
    cached = getattr(P, "_supertrace", None)
    if cached is not None:
        return cached
    n = P.nvars
    out = Poly.zero(n)
    if n % 2 == 0:
        for first, second, sign in ((P.p0, P.p1, 1), (P.p1, P.p0, -1)):
            mats = [(first if i % 2 == 0 else second).diff(i) for i in range(n)]
            h = n // 2
            R = mats[0]
            for M in mats[1:h]:
                R = M @ R
            L = mats[h]
            for M in mats[h + 1:]:
                L = M @ L
            for i, row in enumerate(L.rows):
                for j, a in enumerate(row):
                    if a:
                        b = R.rows[j][i]
                        if b:
                            out = out + a * b * sign
    P._supertrace = out
    return out


def ch_zero(P: GradedMF, m: MilnorData | None = None) -> Poly:
    """Class of the supertrace in the Milnor ring, as a reduced polynomial.

    Zero classes need no Milnor data; otherwise ``m`` must be given.
    """
    raw = supertrace_poly(P)
    if not raw:
        return raw
    if m is None:
        raise ValueError("ch0 is nonzero before reduction; Milnor data required")
    k = raw.homogeneous_degree()
    if 2 * k != m.socle_degree:
        raise ValueError(f"supertrace has degree {k}, expected {m.socle_degree // 2}")
    return m.reduce(raw)


@dataclass
class ChernVector:
    d: int
    n: int
    ch: dict
    ch0: Poly | None = None

    def __getitem__(self, j):
        return self.ch[j % self.d]


def chern_vector(P: GradedMF, m: MilnorData | None = None, with_ch0: bool = False):
    chs = {j: ch_higher(P, j) for j in range(1, P.d)}
    ch0 = ch_zero(P, m) if with_ch0 else None
    return ChernVector(P.d, P.nvars, chs, ch0)


@lru_cache(maxsize=None)
def c_gamma(d: int, j: int, n: int) -> Cyclotomic:
    """(1 - lambda^j)^(-n) with lambda = zeta_d^{-1}."""
    if j % d == 0:
        raise ValueError("c_gamma needs j not divisible by d")
    return (1 - cyc_root(d, -j)) ** (-n)


def point_ch(d: int, n: int, k: int, j: int) -> Cyclotomic:
    """Closed form ch_j(C(k)) = -zeta^{kj} (1 - zeta^{-j})^n."""
    return -cyc_root(d, k * j) * (1 - cyc_root(d, -j)) ** n


# ------------------------------------------------------------ residue pairing

def poly_det(rows):
    """Determinant of a square matrix of Polys by Laplace expansion with memo."""
    n = len(rows)
    nv = rows[0][0].nvars
    memo = {}

    def rec(i, cols):
        if i == n:
            return Poly.const(nv, 1)
        key = (i, cols)
        if key in memo:
            return memo[key]
        acc = Poly.zero(nv)
        pos = 0  # position among the columns still free
        for c in range(n):
            if cols >> c & 1:
                continue
            a = rows[i][c]
            if a:
                sub = rec(i + 1, cols | (1 << c))
                if sub:
                    acc = acc + a * sub * (-1 if pos % 2 else 1)
            pos += 1
        memo[key] = acc
        return acc

    return rec(0, 0)


class ResiduePairing:
    """Residue pairing on the Milnor ring: socle coefficient times a scale.

    ``scale=None`` leaves the normalization unset; pairing then raises.
    """

    def __init__(self, milnor: MilnorData, scale=None):
        if not milnor.isolated:
            raise ValueError("residue pairing needs an isolated singularity")
        self.milnor = milnor
        self.scale = None if scale is None else Fraction(scale)

    @classmethod
    def grothendieck(cls, milnor: MilnorData):
        """Scale so that hess(W) pairs to (-1)^{n(n-1)/2} * mu."""
        W, n = milnor.W, milnor.n
        hess = poly_det([[W.diff(i).diff(j) for j in range(n)] for i in range(n)])
        _, coords = milnor.normal_form(hess)
        h = coords[0]
        if not h:
            raise ValueError("Hessian vanishes in the socle")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return cls(milnor, Fraction(sign * milnor.milnor_number) / h)

    def __call__(self, f: Poly, g: Poly):
        if self.scale is None:
            raise ValueError("residue normalization is unset")
        prod = f * g
        if not prod:
            return Fraction(0)
        k = prod.homogeneous_degree()
        if k != self.milnor.socle_degree:
            return Fraction(0)
        _, coords = self.milnor.normal_form(prod)
        return coords[0] * self.scale


def residue_pairing(f: Poly, g: Poly, res: ResiduePairing):
    return res(f, g)


# ------------------------------------------------------------ Euler pairing

def euler_chi(P: GradedMF, Q: GradedMF, residue: ResiduePairing | None = None) -> int:
    """chi(P, Q) = (1/d)(<ch0 P, ch0 Q> + sum_j c_{lambda^j} ch_j(P) ch_{d-j}(Q)).

    The residue term is skipped exactly when one of the supertraces is zero.
    The result must be a rational integer; anything else raises.
    """
    if (P.d, P.nvars) != (Q.d, Q.nvars):
        raise ValueError("factorizations of different potentials")
    d, n = P.d, P.nvars
    total = Cyclotomic(d, [0])
    for j in range(1, d):
        total = total + c_gamma(d, j, n) * ch_higher(P, j) * ch_higher(Q, d - j)
    if n % 2 == 0:
        # the smaller factorization first: a zero there skips the other
        a, b = (P, Q) if P.rank <= Q.rank else (Q, P)
        if supertrace_poly(a) and supertrace_poly(b):
            sp, sq = supertrace_poly(P), supertrace_poly(Q)
            if residue is None:
                raise ValueError("residue term needed but no residue pairing given")
            m = residue.milnor
            total = total + residue(m.reduce(sp), m.reduce(sq))
    val = (total / d).simplify()
    if not val.is_rational() or val.coeffs[0].denominator != 1:
        raise ArithmeticError(f"Euler pairing {val} is not an integer")
    return int(val.coeffs[0])


def recover_ch(pairings: dict, d: int, n: int):
    """Solve for ch_1..ch_{d-1}(P) from chi(P, C(k)) at d-1 distinct residues k."""
    ks = sorted(pairings)
    if len(ks) != d - 1 or len({k % d for k in ks}) != d - 1:
        raise ValueError(f"need pairings at {d - 1} distinct residues mod {d}")
    mat = [
        [c_gamma(d, j, n) * point_ch(d, n, k, d - j) / d for j in range(1, d)] for k in ks
    ]
    rhs = [Cyclotomic.coerce(Fraction(pairings[k])).lift(d) for k in ks]
    sol = solve_or_none(mat, rhs)
    if sol is None:
        raise ValueError("singular system")
    return {j: Cyclotomic.coerce(sol[j - 1]).lift(d) if d > 1 else sol[j - 1] for j in range(1, d)}


def vandermonde_det(d: int) -> Cyclotomic:
    """prod_{1<=a<b<=d-1} (lambda^b - lambda^a), lambda = zeta_d^{-1}."""
    out = Cyclotomic(d, [1])
    for a in range(1, d):
        for b in range(a + 1, d):
            out = out * (cyc_root(d, -b) - cyc_root(d, -a))
    return out

"""Twisted Mukai vectors on the K3 double plane and the Gepner-type charge there.

Vectors are (v0, v1, v2) with v1 in NS(S) coordinates; h is the first basis
vector of NS and h.h = 2.  Two frames are used: the B-frame (twisted by the
B-field) and the frak-frame, obtained by the further twist exp(-3/4 h - 1/2 beta).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .exact import Cyclotomic, as_scalar, omega, split_eisenstein, sqrt_minus3
from .linalg import inverse, kernel

B_FRAME = "B"
FRAK_FRAME = "frak"


class NSLattice:
    def __init__(self, gram):
        g = [[Fraction(x) for x in r] for r in gram]
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square and nonempty")
        if any(x.denominator != 1 for r in g for x in r):
            raise ValueError("Gram matrix must be integral")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        if g[0][0] != 2:
            raise ValueError("first basis vector must be h with h.h = 2")
        pos, neg, zero = signature(g)
        if zero or pos != 1:
            raise ValueError(f"Gram matrix has signature ({pos}, {neg}, {zero}); need (1, rho-1)")
        self.gram = g
        self.rho = n

    def dot(self, a, b):
        return sum((x * self.gram[i][j] * y for i, x in enumerate(a) if x for j, y in enumerate(b) if y), Fraction(0))

    def h(self):
        return tuple(Fraction(int(i == 0)) for i in range(self.rho))

    def zero(self):
        return tuple(Fraction(0) for _ in range(self.rho))


def charpoly(g):
    """Characteristic polynomial det(tI - g), highest coefficient first (Faddeev-LeVerrier)."""
    n = len(g)
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = g M_{k-1} + c_{k-1} I
        M = [[sum(g[i][t] * M[t][j] for t in range(n)) + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        tr = sum(sum(g[i][t] * M[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-tr / k)
    return coeffs


def _sign_changes(cs):
    s = [c for c in cs if c]
    return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))


def signature(g):
    """(positive, negative, zero) eigenvalue counts of a symmetric rational matrix."""
    cs = charpoly(g)
    n = len(g)
    zero = 0
    while cs and not cs[-1]:
        cs = cs[:-1]
        zero += 1
    pos = _sign_changes(cs)  # exact for real-rooted polynomials
    neg_cs = [c * (-1) ** (len(cs) - 1 - i) for i, c in enumerate(cs)]
    neg = _sign_changes(neg_cs)
    if pos + neg + zero != n:
        raise ArithmeticError("signature count inconsistent")
    return pos, neg, zero


@dataclass(frozen=True)
class BetaField:
    """The class beta in NS coordinates, with 2*beta integral."""

    coords: tuple

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        if any((2 * x).denominator != 1 for x in c):
            raise ValueError("2*beta must be integral")
        object.__setattr__(self, "coords", c)

    def is_integral(self):
        return all(x.denominator == 1 for x in self.coords)


@dataclass(frozen=True)
class MukaiVector:
    ns: NSLattice = field(compare=False, repr=False)
    v0: object
    v1: tuple
    v2: object
    frame: str = B_FRAME

    def _same(self, o):
        if self.frame != o.frame:
            raise ValueError(f"frame mismatch: {self.frame} vs {o.frame}")

    def __add__(self, o):
        self._same(o)
        return MukaiVector(self.ns, self.v0 + o.v0, tuple(a + b for a, b in zip(self.v1, o.v1)), self.v2 + o.v2, self.frame)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        c = as_scalar(c)
        return MukaiVector(self.ns, self.v0 * c, tuple(a * c for a in self.v1), self.v2 * c, self.frame)

    __rmul__ = __mul__

    def astuple(self):
        return (self.v0,) + tuple(self.v1) + (self.v2,)


def vector(ns, v0, v1, v2, frame=B_FRAME):
    if len(v1) != ns.rho:
        raise ValueError(f"v1 needs {ns.rho} coordinates")
    return MukaiVector(ns, as_scalar(v0), tuple(as_scalar(x) for x in v1), as_scalar(v2), frame)


def mukai_pairing(v: MukaiVector, w: MukaiVector):
    v._same(w)
    return v.ns.dot(v.v1, w.v1) - v.v0 * w.v2 - v.v2 * w.v0


def exp_twist(B, v: MukaiVector, frame=None) -> MukaiVector:
    """exp(B) v = (v0, v1 + v0 B, v2 + B.v1 + v0 B^2/2)."""
    ns = v.ns
    B = tuple(as_scalar(x) for x in B)
    v1 = tuple(a + v.v0 * b for a, b in zip(v.v1, B))
    v2 = v.v2 + ns.dot(B, v.v1) + v.v0 * ns.dot(B, B) / 2
    return MukaiVector(ns, v.v0, v1, v2, frame or v.frame)


def _h(ns, c):
    return tuple(as_scalar(c) if i == 0 else Fraction(0) for i in range(ns.rho))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(a, c):
    return tuple(x * c for x in a)


def u_vector(ns: NSLattice, i: int, beta: BetaField) -> MukaiVector:
    """v(U_i) = e^{h i/2} (2, beta, beta^2/4 + 1/2) in the B-frame."""
    b = beta.coords
    base = vector(ns, 2, b, ns.dot(b, b) / 4 + Fraction(1, 2))
    return exp_twist(_h(ns, Fraction(i, 2)), base)


def u_class(ns: NSLattice, beta: BetaField):
    """v(U0) + (w - 2) v(U1) - w v(U2) and the closed form -2 exp(beta/2 + (w/2 + 1) h).

    Returns (combination, closed_form); they agree exactly.
    """
    w = omega()
    lhs = u_vector(ns, 0, beta) + u_vector(ns, 1, beta) * (w - 2) + u_vector(ns, 2, beta) * (-w)
    x = _add(_scale(beta.coords, Fraction(1, 2)), _h(ns, w / 2 + 1))
    unit = vector(ns, 1, ns.zero(), 0)
    rhs = exp_twist(x, unit) * -2
    return lhs, rhs


def frak_shift(ns, beta):
    return _add(_h(ns, Fraction(-3, 4)), _scale(beta.coords, Fraction(-1, 2)))


def to_frak_frame(v: MukaiVector, beta: BetaField) -> MukaiVector:
    if v.frame != B_FRAME:
        raise ValueError("expected a B-frame vector")
    return exp_twist(frak_shift(v.ns, beta), v, frame=FRAK_FRAME)


def z_gepner_k3(v: MukaiVector) -> Cyclotomic:
    """Z(v) = -v2 + 3/16 v0 + (sqrt(-3)/4) v1.h on frak-frame vectors."""
    if v.frame != FRAK_FRAME:
        raise ValueError("the charge is defined on frak-frame vectors")
    vh = v.ns.dot(v.v1, v.ns.h())
    out = -Cyclotomic.coerce(v.v2) + Cyclotomic.coerce(v.v0) * Fraction(3, 16) + sqrt_minus3() * vh / 4
    return out.simplify()


INF = float("inf")


def slope_mu(v: MukaiVector):
    """(v1.h) / v0, or INF when v0 = 0."""
    if v.frame != FRAK_FRAME:
        raise ValueError("slope is taken in the frak frame")
    vh = v.ns.dot(v.v1, v.ns.h())
    if not v.v0:
        return INF
    return vh / v.v0


# ------------------------------------------------------------ integrality

@dataclass
class IntegralityReport:
    v_frak: MukaiVector
    z: Cyclotomic
    re: Fraction
    im_over_sqrt3: Fraction
    checks: dict

    @property
    def ok(self):
        return all(self.checks.values())


def _is_int(q):
    return Fraction(q).denominator == 1


def integrality_report(xi: MukaiVector, beta: BetaField) -> IntegralityReport:
    """Check the integrality constraints of a frak-frame vector coming from an integral xi.

    Preconditions: xi is an integral B-frame vector with xi0 even and beta is integral.
    """
    if xi.frame != B_FRAME:
        raise ValueError("xi must be a B-frame vector")
    if not beta.is_integral():
        raise ValueError("integrality constraints need an integral beta")
    if not all(_is_int(c) for c in xi.astuple()):
        raise ValueError("xi must be integral")
    if xi.v0 % 2:
        raise ValueError("xi0 must be even")
    v = to_frak_frame(xi, beta)
    z = z_gepner_k3(v)
    re, b = split_eisenstein(z)
    im_over_sqrt3 = b  # Im Z = b * sqrt(3)
    checks = {
        "2v1_integral": all(_is_int(2 * c) for c in v.v1),
        "8v2_integral": _is_int(8 * v.v2),
        "4v2_not_integral_when_half_rank_odd": (xi.v0 // 2) % 2 == 0 or not _is_int(4 * v.v2),
        "im_in_sqrt3_over_4_Z": _is_int(4 * im_over_sqrt3),
        "re_in_quarter_Z": _is_int(4 * re),
        "re_minus_im_over_sqrt3_in_half_Z": _is_int(2 * (re - im_over_sqrt3)),
    }
    return IntegralityReport(v, z, re, im_over_sqrt3, checks)


# ------------------------------------------------------------ spherical exclusion

@dataclass
class ExclusionResult:
    witness: tuple | None
    chain: dict

    @property
    def excluded(self):
        return self.witness is None


def h_perp_basis(ns: NSLattice):
    """Integral basis of the orthogonal complement of h in NS."""
    row = [int(x) for x in ns.gram[0]]
    n = ns.rho
    # unimodular column operations reduce the row to (g, 0, ..., 0)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    r = row[:]
    while sum(1 for x in r if x) > 1:
        nz = [i for i, x in enumerate(r) if x]
        p = min(nz, key=lambda i: abs(r[i]))
        for i in nz:
            if i != p:
                q = r[i] // r[p]
                r[i] -= q * r[p]
                for k in range(n):
                    U[k][i] -= q * U[k][p]
    pivot = next((i for i, x in enumerate(r) if x), None)
    return [tuple(U[k][i] for k in range(n)) for i in range(n) if i != pivot]


def _vectors_of_norm(G, target):
    """All integer x with x^T G x = target for positive-definite integral G."""
    m = len(G)
    if m == 0:
        return []
    Ginv = inverse([[Fraction(x) for x in r] for r in G])
    bounds = []
    for i in range(m):
        q = target * Ginv[i][i]
        bounds.append(isqrt(q.numerator // q.denominator) + 1)
    out = []

    def rec(i, x):
        if i == m:
            val = sum(x[a] * G[a][b] * x[b] for a in range(m) for b in range(m))
            if val == target:
                out.append(tuple(x))
            return
        for t in range(-bounds[i], bounds[i] + 1):
            rec(i + 1, x + [t])

    rec(0, [])
    return out


def spherical_exclusion(ns: NSLattice) -> ExclusionResult:
    """Decide whether a spherical frak-frame vector with Z = 0 and mu = 0 can exist.

    Replays the chain: v1.h = 0 and Hodge index give v0 v2 <= 1; Re Z <= 0 gives
    3 v0/16 <= v2, hence v0^2 <= 16/3 and v0 = 2; integrality forces v2 = 3/8,
    so v1^2 = -1/2 and gamma = 2 v1 has gamma.h = 0, gamma^2 = -2.
    """
    chain = {}
    ranks = [r for r in range(2, 3 * 16, 2) if Fraction(r * r) <= Fraction(16, 3)]
    chain["v0_candidates"] = ranks
    v2s = {}
    for r in ranks:
        lo, hi = Fraction(3 * r, 16), Fraction(1, r)
        cands = []
        k = -(-lo * 8 // 1)
        while Fraction(k, 8) <= hi:
            v2 = Fraction(k, 8)
            if (r // 2) % 2 == 0 or not _is_int(4 * v2):
                cands.append(v2)
            k += 1
        v2s[r] = cands
    chain["v2_candidates"] = {str(r): [str(x) for x in c] for r, c in v2s.items()}
    norms = sorted({2 * r * v2 - 2 for r, c in v2s.items() for v2 in c})
    chain["v1_squared"] = [str(x) for x in norms]
    chain["gamma_squared"] = [str(4 * x) for x in norms]
    basis = h_perp_basis(ns)
    G = [[ns.dot(a, b) for b in basis] for a in basis]
    negG = [[-int(x) for x in r] for r in G]
    if basis:
        p, n_, z = signature([[Fraction(x) for x in r] for r in negG])
        if p != len(basis):
            raise ArithmeticError("h-perp is not negative definite")
    witness = None
    for g2 in (4 * x for x in norms):
        if g2.denominator != 1 or g2 >= 0:
            continue
        for coeffs in _vectors_of_norm(negG, int(-g2)):
            gamma = tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(ns.rho))
            if witness is None or gamma > witness:
                witness = gamma
        if witness is not None:
            break
    chain["h_perp_basis"] = [list(b) for b in basis]
    return ExclusionResult(witness, chain)

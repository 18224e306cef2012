"""Truncated intersection rings, Chern characters and Riemann-Roch.

A :class:`GradedRing` has a finite basis of labelled classes, each with a
codimension, structure constants for products, a degree map on the top
codimension and optionally a Todd class.  Rings built here: the projective
plane, a cubic surface (blow-up of the plane at six points), a cubic fourfold
containing a plane, and a K3 surface with a given Neron-Severi lattice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import as_scalar


class GradedRing:
    def __init__(self, dim, labels, codims, products, degrees, name=""):
        """products: {(a, b): {c: coeff}} over labels; missing pairs multiply to 0
        unless one factor is the unit '1'.  degrees: {label: int} on top codim."""
        self.dim = dim
        self.name = name
        self.labels = list(labels)
        self.codim = dict(zip(self.labels, codims))
        self.index = {l: i for i, l in enumerate(self.labels)}
        if self.labels[0] != "1" or self.codim["1"] != 0:
            raise ValueError("first basis class must be the unit '1' in codimension 0")
        self.degrees = {l: Fraction(v) for l, v in degrees.items()}
        self._table = {}
        for a in self.labels:
            for b in self.labels:
                if a == "1":
                    vec = {b: Fraction(1)}
                elif b == "1":
                    vec = {a: Fraction(1)}
                elif (a, b) in products:
                    vec = products[(a, b)]
                elif (b, a) in products:
                    vec = products[(b, a)]
                else:
                    vec = {}
                for c in vec:
                    if self.codim[c] != self.codim[a] + self.codim[b]:
                        raise ValueError(f"{a}*{b} -> {c} breaks the grading")
                self._table[(a, b)] = {c: Fraction(v) for c, v in vec.items() if v}
        self.todd = None
        self._check_axioms()

    def _check_axioms(self):
        L = self.labels
        for a in L:
            for b in L:
                if self._table[(a, b)] != self._table[(b, a)]:
                    raise ValueError(f"product {a}*{b} is not commutative")
        for a in L:
            for b in L:
                for c in L:
                    if self.basis(a) * self.basis(b) * self.basis(c) != self.basis(a) * (
                        self.basis(b) * self.basis(c)
                    ):
                        raise ValueError(f"product not associative on {a}, {b}, {c}")

    def zero(self):
        return RingClass(self, [Fraction(0)] * len(self.labels))

    def one(self):
        return self.basis("1")

    def basis(self, label):
        v = [Fraction(0)] * len(self.labels)
        v[self.index[label]] = Fraction(1)
        return RingClass(self, v)

    def element(self, coeffs: dict):
        v = [Fraction(0)] * len(self.labels)
        for l, c in coeffs.items():
            v[self.index[l]] = as_scalar(c)
        return RingClass(self, v)

    def from_series(self, coeffs, x):
        """sum_k coeffs[k] x^k, truncated at the dimension."""
        out = self.zero()
        p = self.one()
        for k, c in enumerate(coeffs):
            if k > self.dim:
                break
            out = out + p * c
            p = p * x
        return out


class RingClass:
    __slots__ = ("ring", "v")

    def __init__(self, ring, v):
        self.ring = ring
        self.v = tuple(as_scalar(c) for c in v)

    def __getitem__(self, label):
        return self.v[self.ring.index[label]]

    def component(self, k):
        return RingClass(self.ring, [c if self.ring.codim[l] == k else 0 for l, c in zip(self.ring.labels, self.v)])

    def __add__(self, o):
        return RingClass(self.ring, [a + b for a, b in zip(self.v, o.v)])

    def __sub__(self, o):
        return RingClass(self.ring, [a - b for a, b in zip(self.v, o.v)])

    def __neg__(self):
        return RingClass(self.ring, [-a for a in self.v])

    def __mul__(self, o):
        if not isinstance(o, RingClass):
            c = as_scalar(o)
            return RingClass(self.ring, [a * c for a in self.v])
        R = self.ring
        out = [Fraction(0)] * len(R.labels)
        for i, a in enumerate(self.v):
            if not a:
                continue
            la = R.labels[i]
            for j, b in enumerate(o.v):
                if not b:
                    continue
                for lc, s in R._table[(la, R.labels[j])].items():
                    k = R.index[lc]
                    out[k] = out[k] + a * b * s
        return RingClass(R, out)

    __rmul__ = __mul__

    def __eq__(self, o):
        if isinstance(o, RingClass):
            return self.ring is o.ring and self.v == o.v
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def dual(self):
        """Flip the sign of odd-codimension parts."""
        R = self.ring
        return RingClass(R, [-c if R.codim[l] % 2 else c for l, c in zip(R.labels, self.v)])

    def integrate(self):
        R = self.ring
        return sum((c * R.degrees.get(l, 0) for l, c in zip(R.labels, self.v) if R.codim[l] == R.dim), Fraction(0))

    def __repr__(self):
        parts = [f"{c}*{l}" for l, c in zip(self.ring.labels, self.v) if c]
        return "(" + " + ".join(parts) + ")" if parts else "0"


def exp(x: RingClass) -> RingClass:
    """exp of a class; the codim-0 part must vanish (nilpotent)."""
    if x["1"]:
        raise ValueError("exp needs a class with zero rank part")
    R = x.ring
    return R.from_series([Fraction(1, factorial(k)) for k in range(R.dim + 1)], x)


def td_line(R, x):
    """td of a line bundle with first Chern class x: x/(1 - e^{-x})."""
    # Bernoulli series: 1 + x/2 + x^2/12 - x^4/720 + x^6/30240
    coeffs = [Fraction(1), Fraction(1, 2), Fraction(1, 12), Fraction(0), Fraction(-1, 720),
              Fraction(0), Fraction(1, 30240)]
    return R.from_series(coeffs, x)


def inverse(x: RingClass) -> RingClass:
    """Inverse of a class with invertible rank part."""
    r = x["1"]
    if not r:
        raise ZeroDivisionError("rank part is zero")
    R = x.ring
    y = x * (1 / r) - R.one()
    return R.from_series([(-1) ** k for k in range(R.dim + 1)], y) * (1 / r)


def chi_rr(ring: GradedRing, ch: RingClass) -> Fraction:
    if ring.todd is None:
        raise ValueError(f"ring {ring.name} has no Todd class")
    return (ch * ring.todd).integrate()


def chi_pair(ring: GradedRing, chE: RingClass, chF: RingClass) -> Fraction:
    return chi_rr(ring, chE.dual() * chF)


# ------------------------------------------------------------ the rings

@lru_cache(maxsize=None)
def p2():
    R = GradedRing(2, ["1", "h", "pt"], [0, 1, 2], {("h", "h"): {"pt": 1}}, {"pt": 1}, name="P2")
    h = R.basis("h")
    R.todd = td_line(R, h) ** 3
    return R


def line_bundle_p2(R, a):
    return exp(R.basis("h") * a)


@lru_cache(maxsize=None)
def cubic_surface():
    labels = ["1", "h"] + [f"C{i}" for i in range(1, 7)] + ["pt"]
    prods = {("h", "h"): {"pt": 1}}
    for i in range(1, 7):
        prods[(f"C{i}", f"C{i}")] = {"pt": -1}
    R = GradedRing(2, labels, [0] + [1] * 7 + [2], prods, {"pt": 1}, name="cubic surface")
    R.todd = R.one() + anticanonical_surface(R) * Fraction(1, 2) + R.basis("pt")
    return R


def anticanonical_surface(R):
    """H = 3h - sum C_i."""
    H = R.basis("h") * 3
    for i in range(1, 7):
        H = H - R.basis(f"C{i}")
    return H


@lru_cache(maxsize=None)
def cubic_fourfold():
    labels = ["1", "H", "H2", "P", "l", "pt"]
    prods = {
        ("H", "H"): {"H2": 1},
        ("H", "H2"): {"l": 3},
        ("H", "P"): {"l": 1},
        ("H", "l"): {"pt": 1},
        ("H2", "H2"): {"pt": 3},
        ("H2", "P"): {"pt": 1},
        ("P", "P"): {"pt": 3},
    }
    R = GradedRing(4, labels, [0, 1, 2, 2, 3, 4], prods, {"pt": 1}, name="cubic fourfold")
    H = R.basis("H")
    # T_X = 6 O(H) - O(3H) in K-theory (Euler sequence and normal bundle)
    R.todd = td_line(R, H) ** 6 * inverse(td_line(R, H * 3))
    return R


def k3_surface(gram):
    rho = len(gram)
    labels = ["1"] + [f"g{i}" for i in range(rho)] + ["pt"]
    prods = {}
    for i in range(rho):
        for j in range(rho):
            if gram[i][j]:
                prods[(f"g{i}", f"g{j}")] = {"pt": gram[i][j]}
    R = GradedRing(2, labels, [0] + [1] * rho + [2], prods, {"pt": 1}, name="K3")
    R.todd = R.one() + R.basis("pt") * 2
    return R


def ch_plane_in_fourfold(X):
    """ch(O_P) for the plane P in the cubic fourfold, by Grothendieck-Riemann-Roch.

    c(N) = (1+h)^3 / (1+3h) on P, and i_* sends 1, h, h^2 to P, l, pt.
    """
    R = p2()
    h = R.basis("h")
    cN = (R.one() + h) ** 3 * inverse(R.one() + h * 3)
    c1, c2 = cN["h"], cN["pt"]
    # td(N) = 1 + c1/2 + (c1^2 + c2)/12 for a rank-2 bundle on a surface
    tdN = R.one() + h * (c1 / 2) + R.basis("pt") * ((c1 * c1 + c2) / 12)
    inside = inverse(tdN)
    return X.basis("P") * inside["1"] + X.basis("l") * inside["h"] + X.basis("pt") * inside["pt"]


def fourfold_ch_sides(X=None):
    """ch(I_P(1)) - 3 ch(O_X) and ch(I_P^v(-2)) - 3 ch(O_X(-1)), with ch(O_P) from GRR."""
    X = X or cubic_fourfold()
    H = X.basis("H")
    ch_ip = X.one() - ch_plane_in_fourfold(X)
    left = ch_ip * exp(H) - X.one() * 3
    right = ch_ip.dual() * exp(H * -2) - exp(-H) * 3
    return left, right


def fourfold_target(X=None):
    """(-2, H, H^2/2 - P, -l/2, -pt/8)."""
    X = X or cubic_fourfold()
    b = X.basis
    return X.one() * -2 + b("H") + b("H2") * Fraction(1, 2) - b("P") - b("l") * Fraction(1, 2) - b("pt") * Fraction(1, 8)


# ------------------------------------------------------------ cohomology tables

@dataclass
class CohTable:
    """Dimensions of cohomology in each degree; zero degrees are omitted."""

    dims: dict = field(default_factory=dict)
    exact: bool = True

    def __post_init__(self):
        self.dims = {k: v for k, v in sorted(self.dims.items()) if v}

    def dim(self, i):
        return self.dims.get(i, 0)

    def is_zero(self):
        return not self.dims

    def euler(self):
        return sum((-1) ** k * v for k, v in self.dims.items())

    def shift(self, s):
        """Complex shift [s]: degree i moves to i - s."""
        return CohTable({k - s: v for k, v in self.dims.items()}, self.exact)

    def dual(self, top):
        """V^dual[-top]: degree i -> top - i."""
        return CohTable({top - k: v for k, v in self.dims.items()}, self.exact)

    def __add__(self, o):
        keys = set(self.dims) | set(o.dims)
        return CohTable({k: self.dim(k) + o.dim(k) for k in keys}, self.exact and o.exact)

    def __mul__(self, m):
        return CohTable({k: v * m for k, v in self.dims.items()}, self.exact)

    __rmul__ = __mul__

    def as_list(self, lo=0, hi=5):
        return [self.dim(i) for i in range(lo, hi + 1)]

    def __repr__(self):
        if not self.dims:
            return "0"
        return " + ".join(f"C^{v}[{-k}]" for k, v in self.dims.items())


def pn_cohom(n: int, k: int) -> CohTable:
    """H^*(P^n, O(k))."""
    if k >= 0:
        return CohTable({0: comb(n + k, n)})
    if k <= -n - 1:
        return CohTable({n: comb(-k - 1, n)})
    return CohTable({})


def mkl(k: int, l: int) -> CohTable:
    """R Gamma of O(k h' + l H') on the blow-up of P^5 along a plane.

    For k >= -3 this is R Gamma(P^2, Sym^k E^v (l)) with E^v = O^3 + O(1), so
    Sym^k E^v = sum_j O(j)^{C(k-j+2, 2)}; for k <= -4 use Serre duality
    M_{k,l} = (M_{-k-4,-l-2})^v[-5].
    """
    if k <= -4:
        return mkl(-k - 4, -l - 2).dual(5)
    out = CohTable({})
    for j in range(0, k + 1):
        out = out + pn_cohom(2, j + l) * comb(k - j + 2, 2)
    return out


def two_term_complex(source, target, shift=0):
    """Cohomology of (source -> target)[shift], source in degree -1, target in 0.

    ``source``/``target`` are lists of (k, l, multiplicity).  If both sides are
    nonzero the answer depends on the differential, so only the naive table
    is returned with ``exact=False`` (its Euler characteristic is still right).
    """
    S = CohTable({})
    for k, l, m in source:
        S = S + mkl(k, l) * m
    T = CohTable({})
    for k, l, m in target:
        T = T + mkl(k, l) * m
    total = S.shift(1) + T
    if not S.is_zero() and not T.is_zero():
        total.exact = False
    return total.shift(shift)

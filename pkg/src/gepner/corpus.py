"""A fixed, seeded corpus of graded matrix factorizations used by the checks."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import clifford
from .mf import GradedMF, MFMorphism, cone, direct_sum, koszul_mf, point_object, shift, tau
from .polyring import Poly, PolyMatrix, fermat, monomials


@dataclass
class Entry:
    name: str
    W: Poly
    mf: GradedMF


def _random_form(rng, n, deg, width=2):
    terms = {}
    for e in monomials(n, deg):
        c = rng.randint(-width, width)
        if c:
            terms[e] = Fraction(c)
    if not terms:
        terms[(deg,) + (0,) * (n - 1)] = Fraction(1)
    return Poly(n, terms)


def random_koszul(seed: int):
    """Koszul factorization of a random W = sum a_i b_i in 2 or 3 variables."""
    rng = random.Random(seed)
    n = rng.choice((2, 3))
    d = rng.choice((2, 3, 4))
    m = rng.randint(1, 3)
    pairs = []
    for _ in range(m):
        da = rng.randint(1, d - 1)
        pairs.append((_random_form(rng, n, da), _random_form(rng, n, d - da)))
    W = sum((a * b for a, b in pairs), Poly.zero(n))
    if not W:
        return random_koszul(seed + 7919)
    P = koszul_mf(pairs, offset=rng.randint(-2, 2), even_first=bool(rng.randint(0, 1)))
    return W, P


def mult_morphism(P: GradedMF, var: int = 0) -> MFMorphism:
    """x_var * Id : P -> P(1)."""
    x = Poly.var(P.nvars, var)
    S = PolyMatrix.scalar(P.nvars, P.rank, x)
    return MFMorphism(P, tau(P, 1), S, S)


def build_corpus(seed: int = 0) -> list:
    out = []

    def add(name, W, P):
        out.append(Entry(name, W, P))

    # rank one in one variable: x^d = x^a * x^(d-a)
    for d in range(2, 7):
        x = Poly.var(1, 0)
        for a in range(1, d):
            add(f"x^{d}=x^{a}*x^{d - a}", x ** d, koszul_mf([(x ** a, x ** (d - a))]))

    xy = Poly.parse("x1*x2", 2)
    xy_mf = koszul_mf([(Poly.var(2, 0), Poly.var(2, 1))])
    add("xy", xy, xy_mf)
    f3 = fermat(2, 3)
    add("x^3+y^3=(x+y)(x^2-xy+y^2)", f3, koszul_mf([(Poly.parse("x1 + x2", 2), Poly.parse("x1^2 - x1*x2 + x2^2", 2))]))
    add("x^3+y^3 Koszul rank 2", f3, koszul_mf([(Poly.var(2, 0), Poly.parse("x1^2", 2)), (Poly.var(2, 1), Poly.parse("x2^2", 2))]))

    # residue fields of Fermat potentials, up to rank 64
    for d, ns in ((2, range(1, 5)), (3, range(1, 8)), (5, range(1, 4))):
        for n in ns:
            W = fermat(n, d)
            add(f"C(0) for Fermat d={d} n={n}", W, point_object(W, 0))
    W36 = fermat(6, 3)
    add("C(1) for Fermat d=3 n=6", W36, point_object(W36, 1))

    for s in range(8):
        W, P = random_koszul(1000 * seed + s)
        add(f"random Koszul #{s}", W, P)

    Wf = clifford.fermat_plane_cubic()
    add("Clifford rank 8, Fermat plane cubic", Wf, clifford.clifford_mf(clifford.decompose(Wf)))
    for s in range(3):
        Wr = clifford.random_plane_cubic(100 * seed + s)
        add(f"Clifford rank 8, random cubic #{s}", Wr, clifford.clifford_mf(clifford.decompose(Wr)))

    # derived constructions
    base = [e for e in out if e.mf.rank <= 4][:6]
    for e in base:
        add(f"shift of {e.name}", e.W, shift(e.mf))
        add(f"cone of x1 on {e.name}", e.W, cone(mult_morphism(e.mf)))
    add("xy (+) xy(1)", xy, direct_sum(xy_mf, tau(xy_mf, 1)))
    return out

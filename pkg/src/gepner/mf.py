"""Graded matrix factorizations of a homogeneous potential W.

A :class:`GradedMF` is P0 --p0--> P1 --p1--> P0(d) with free modules
P^i = sum_j A(grades_i[j]).  Entry (i, j) of p0 is homogeneous of degree
grades1[i] - grades0[j]; entry (i, j) of p1 has degree grades0[i] + d - grades1[j].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .polyring import NEG_INF, Poly, PolyMatrix


class MFError(ValueError):
    pass


@dataclass
class Verdict:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def reason(self):
        return "; ".join(self.failures) if self.failures else "ok"


class GradedMF:
    def __init__(self, d, nvars, grades0, grades1, p0, p1):
        self.d = int(d)
        self.nvars = int(nvars)
        self.grades0 = tuple(int(g) for g in grades0)
        self.grades1 = tuple(int(g) for g in grades1)
        r = len(self.grades0)
        if len(self.grades1) != r:
            raise MFError(f"rank mismatch: {r} vs {len(self.grades1)} generators")
        p0 = p0 if isinstance(p0, PolyMatrix) else PolyMatrix(nvars, p0)
        p1 = p1 if isinstance(p1, PolyMatrix) else PolyMatrix(nvars, p1)
        if p0.shape != (r, r) or p1.shape != (r, r):
            raise MFError(f"matrix shapes {p0.shape}, {p1.shape} do not match rank {r}")
        self.p0, self.p1 = p0, p1

    @property
    def rank(self):
        return len(self.grades0)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMF)
            and (self.d, self.nvars, self.grades0, self.grades1)
            == (other.d, other.nvars, other.grades0, other.grades1)
            and self.p0 == other.p0
            and self.p1 == other.p1
        )

    def __repr__(self):
        return f"GradedMF(d={self.d}, rank={self.rank}, grades0={self.grades0}, grades1={self.grades1})"

    def to_json(self):
        return {
            "d": self.d,
            "nvars": self.nvars,
            "grades0": list(self.grades0),
            "grades1": list(self.grades1),
            "p0": self.p0.to_json(),
            "p1": self.p1.to_json(),
        }

    @classmethod
    def from_json(cls, obj):
        try:
            d, n = obj["d"], obj["nvars"]
            g0, g1 = obj["grades0"], obj["grades1"]
            p0 = PolyMatrix.from_json(n, obj["p0"])
            p1 = PolyMatrix.from_json(n, obj["p1"])
        except (KeyError, TypeError) as exc:
            raise MFError(f"malformed factorization record: missing {exc}") from exc
        return cls(d, n, g0, g1, p0, p1)

    def potential(self):
        """W read off from p1 p0 (the (0, 0) entry)."""
        return (self.p1 @ self.p0)[0, 0]


def _check_degrees(mat, row_grades, col_grades, shift, label, out):
    for i, r in enumerate(mat.rows):
        for j, a in enumerate(r):
            if not a:
                continue
            want = row_grades[i] + shift - col_grades[j]
            try:
                got = a.homogeneous_degree()
            except ValueError:
                out.append(f"{label}[{i}][{j}] is not homogeneous")
                continue
            if got != want:
                out.append(f"{label}[{i}][{j}] has degree {got}, expected {want}")


def verify_mf(P: GradedMF, W: Poly) -> Verdict:
    """Check homogeneity and p1 p0 = p0 p1 = W * Id exactly."""
    fails = []
    try:
        dW = W.homogeneous_degree()
    except ValueError:
        return Verdict(False, ["W is not homogeneous"])
    if dW != P.d:
        fails.append(f"W has degree {dW}, factorization declares d = {P.d}")
    if W.nvars != P.nvars:
        return Verdict(False, [f"W has {W.nvars} variables, factorization {P.nvars}"])
    _check_degrees(P.p0, P.grades1, P.grades0, 0, "p0", fails)
    _check_degrees(P.p1, P.grades0, P.grades1, P.d, "p1", fails)
    target = PolyMatrix.scalar(P.nvars, P.rank, W)
    for name, prod in (("p1*p0", P.p1 @ P.p0), ("p0*p1", P.p0 @ P.p1)):
        res = (prod - target).first_nonzero()
        if res is not None:
            i, j, a = res
            fails.append(f"{name} - W*Id is nonzero at ({i}, {j}): {a}")
    return Verdict(not fails, fails)


def tau(P: GradedMF, k: int = 1) -> GradedMF:
    """Grade twist P(k)."""
    return GradedMF(
        P.d, P.nvars, [g + k for g in P.grades0], [g + k for g in P.grades1], P.p0, P.p1
    )


def shift(P: GradedMF) -> GradedMF:
    """P[1] = (P1, P0(d), -p1, -p0)."""
    return GradedMF(P.d, P.nvars, P.grades1, [g + P.d for g in P.grades0], -P.p1, -P.p0)


def direct_sum(P: GradedMF, Q: GradedMF) -> GradedMF:
    if (P.d, P.nvars) != (Q.d, Q.nvars):
        raise MFError("direct sum of factorizations of different potentials")
    n = P.nvars
    z = PolyMatrix.zeros

    def diag(a, b):
        return PolyMatrix.blocks(n, [[a, z(n, a.shape[0], b.shape[1])], [z(n, b.shape[0], a.shape[1]), b]])

    return GradedMF(
        P.d, n, P.grades0 + Q.grades0, P.grades1 + Q.grades1, diag(P.p0, Q.p0), diag(P.p1, Q.p1)
    )


def normalize(P: GradedMF) -> GradedMF:
    """Sort both grade vectors descending (stable) and permute the matrices to match."""
    o0 = sorted(range(P.rank), key=lambda i: -P.grades0[i])
    o1 = sorted(range(P.rank), key=lambda i: -P.grades1[i])
    return GradedMF(
        P.d,
        P.nvars,
        [P.grades0[i] for i in o0],
        [P.grades1[i] for i in o1],
        P.p0.permute(o1, o0),
        P.p1.permute(o0, o1),
    )


class MFMorphism:
    """f = (f0: P0 -> Q0, f1: P1 -> Q1), grade preserving."""

    def __init__(self, src: GradedMF, tgt: GradedMF, f0, f1):
        n = src.nvars
        self.src, self.tgt = src, tgt
        self.f0 = f0 if isinstance(f0, PolyMatrix) else PolyMatrix(n, f0)
        self.f1 = f1 if isinstance(f1, PolyMatrix) else PolyMatrix(n, f1)
        want = (tgt.rank, src.rank)
        if self.f0.shape != want or self.f1.shape != want:
            raise MFError(f"morphism blocks must be {want}")

    @classmethod
    def identity(cls, P):
        I = PolyMatrix.identity(P.nvars, P.rank)
        return cls(P, P, I, I)

    def verify(self) -> Verdict:
        P, Q = self.src, self.tgt
        fails = []
        _check_degrees(self.f0, Q.grades0, P.grades0, 0, "f0", fails)
        _check_degrees(self.f1, Q.grades1, P.grades1, 0, "f1", fails)
        if (Q.p0 @ self.f0) != (self.f1 @ P.p0):
            fails.append("q0*f0 != f1*p0")
        if (Q.p1 @ self.f1) != (self.f0 @ P.p1):
            fails.append("q1*f1 != f0*p1")
        return Verdict(not fails, fails)


def cone(f: MFMorphism) -> GradedMF:
    """Cone(f) = P[1] (+) Q, lower triangular with the shifted source first.

    c0 = [[-p1, 0], [f1, q0]] : P1 (+) Q0 -> P0(d) (+) Q1
    c1 = [[-p0, 0], [f0, q1]] : P0(d) (+) Q1 -> P1(d) (+) Q0(d)
    """
    v = f.verify()
    if not v:
        raise MFError(f"not a morphism of factorizations: {v.reason()}")
    P, Q = f.src, f.tgt
    n = P.nvars
    zr = PolyMatrix.zeros(n, P.rank, Q.rank)
    c0 = PolyMatrix.blocks(n, [[-P.p1, zr], [f.f1, Q.p0]])
    c1 = PolyMatrix.blocks(n, [[-P.p0, zr], [f.f0, Q.p1]])
    return GradedMF(
        P.d,
        n,
        P.grades1 + Q.grades0,
        tuple(g + P.d for g in P.grades0) + Q.grades1,
        c0,
        c1,
    )


def contractible(W: Poly, grade: int = 0) -> GradedMF:
    d = W.homogeneous_degree()
    return GradedMF(d, W.nvars, [grade], [grade], [[1]], [[W]])


# ------------------------------------------------------------ exterior algebra

def _sort_sign(seq):
    """Sign of the permutation sorting seq (distinct entries)."""
    s = 1
    a = list(seq)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] > a[j]:
                s = -s
    return s


class ExteriorBasis:
    """An ordered list of oriented wedge monomials e_{s1} ^ ... ^ e_{sk}.

    Orientations matter: (2, 0) stands for e2 ^ e0 = -e0 ^ e2.
    """

    def __init__(self, elements):
        self.elements = [tuple(e) for e in elements]
        self._index = {}
        for i, e in enumerate(self.elements):
            key = tuple(sorted(e))
            if key in self._index or len(set(e)) != len(e):
                raise ValueError(f"repeated basis element {e}")
            self._index[key] = (i, _sort_sign(e))

    def __len__(self):
        return len(self.elements)

    def locate(self, word):
        """(index, sign) with word = sign * elements[index], or None if word vanishes."""
        if len(set(word)) != len(word):
            return None
        key = tuple(sorted(word))
        if key not in self._index:
            raise KeyError(f"{word} not in this basis")
        i, s = self._index[key]
        return i, s * _sort_sign(word)


def right_wedge(src: ExteriorBasis, tgt: ExteriorBasis, vec, nvars):
    """Matrix of w -> w ^ (sum_g vec[g] e_g) from span(src) to span(tgt)."""
    z = Poly.zero(nvars)
    rows = [[z] * len(src) for _ in range(len(tgt))]
    for j, s in enumerate(src.elements):
        for g, a in enumerate(vec):
            if not a:
                continue
            loc = tgt.locate(s + (g,))
            if loc is None:
                continue
            i, sign = loc
            rows[i][j] = rows[i][j] + a * sign
    return PolyMatrix(nvars, rows)


def right_contract(src: ExteriorBasis, tgt: ExteriorBasis, covec, nvars):
    """Matrix of contraction from the right by sum_g covec[g] e_g^*.

    (v1 ^ ... ^ vk) _| phi = sum_p (-1)^(k-p) phi(v_p) v1 ^ .. ^ v_p-hat ^ .. ^ vk.
    """
    z = Poly.zero(nvars)
    rows = [[z] * len(src) for _ in range(len(tgt))]
    for j, s in enumerate(src.elements):
        k = len(s)
        for p, g in enumerate(s):
            a = covec[g]
            if not a:
                continue
            loc = tgt.locate(s[:p] + s[p + 1:])
            i, sign = loc
            sign *= -1 if (k - 1 - p) % 2 else 1
            rows[i][j] = rows[i][j] + a * sign
    return PolyMatrix(nvars, rows)


def subsets_by_parity(m, parity):
    """Subsets of range(m) with |S| = parity mod 2, ordered by size then lexicographically."""
    out = []
    for k in range(parity, m + 1, 2):
        out.extend(itertools.combinations(range(m), k))
    return out


def koszul_mf(pairs, offset: int = 0, even_first: bool = True) -> GradedMF:
    """Koszul factorization of W = sum a_i b_i on generators e_1..e_m.

    delta = sum_i (a_i * (right wedge e_i) + b_i * (right contraction e_i^*)).
    P0 is the even part when ``even_first`` (else the odd part).  The generator
    e_S has grade offset + sum_{i in S} deg a_i - d * floor(|S|/2) when P0 is
    even, and offset + sum deg a_i - d * ceil(|S|/2) when P0 is odd, so e_empty
    always sits in grade ``offset``.
    """
    pairs = [(a, b) for a, b in pairs]
    if not pairs:
        raise MFError("need at least one pair")
    nvars = pairs[0][0].nvars
    degs = []
    d = None
    for i, (a, b) in enumerate(pairs):
        if a.nvars != nvars or b.nvars != nvars:
            raise MFError("pairs live in different polynomial rings")
        da = a.homogeneous_degree()
        if da is NEG_INF:
            raise MFError(f"a_{i + 1} is zero")
        if b:
            db = b.homogeneous_degree()
            if d is None:
                d = da + db
            elif da + db != d:
                raise MFError(f"pair {i + 1} has degree {da + db}, others {d}")
        degs.append(da)
    if d is None:
        raise MFError("all b_i vanish; the potential is zero")
    W = sum((a * b for a, b in pairs), Poly.zero(nvars))
    if not W:
        raise MFError("sum a_i b_i is zero")
    m = len(pairs)
    even = ExteriorBasis(subsets_by_parity(m, 0))
    odd = ExteriorBasis(subsets_by_parity(m, 1))
    avec = [a for a, _ in pairs]
    bvec = [b for _, b in pairs]

    def delta(src, tgt):
        return right_wedge(src, tgt, avec, nvars) + right_contract(src, tgt, bvec, nvars)

    def grade(S, floor):
        h = len(S) // 2 if floor else (len(S) + 1) // 2
        return offset + sum(degs[i] for i in S) - d * h

    if even_first:
        B0, B1 = even, odd
    else:
        B0, B1 = odd, even
    g0 = [grade(S, even_first) for S in B0.elements]
    g1 = [grade(S, even_first) for S in B1.elements]
    return GradedMF(d, nvars, g0, g1, delta(B0, B1), delta(B1, B0))


def point_object(W: Poly, k: int = 0) -> GradedMF:
    """Factorization of the graded residue field C(k).

    Koszul with a_i = x_i, b_i = (dW/dx_i)/d.  The top generator e_1..e_n lies in
    P1 in grade k + d*(...), giving ch_j = -zeta^{kj} (1 - zeta^{-j})^n.
    """
    d = W.homogeneous_degree()
    if d is NEG_INF or d < 2:
        raise MFError("W must be homogeneous of degree >= 2")
    n = W.nvars
    pairs = [(Poly.var(n, i), W.diff(i) / d) for i in range(n)]
    return koszul_mf(pairs, offset=k - n, even_first=(n % 2 == 1))

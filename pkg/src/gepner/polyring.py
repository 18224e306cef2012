"""Sparse multivariate polynomials, polynomial matrices and Milnor rings.

A :class:`Poly` maps exponent tuples to nonzero coefficients.  Variables are
numbered from 0 internally; the text parser and printer call them x1..xn.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .exact import as_scalar, format_scalar, parse_scalar


class _NegInf:
    """Degree of the zero polynomial."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


NEG_INF = _NegInf()


class NotHomogeneous(ValueError):
    pass


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[e] = as_scalar(c)
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def parse(cls, text: str, nvars: int):
        """Parse e.g. ``"x1^3 - 2*x1*x4^2 + 1/2*x6"`` (variables x1..xn)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        out = cls.zero(nvars)
        toks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(toks) != s:
            raise ValueError(f"dangling sign in {text!r}")
        for tok in toks:
            sign = -1 if tok[0] == "-" else 1
            tok = tok.lstrip("+-")
            c = Fraction(sign)
            e = [0] * nvars
            for f in tok.split("*"):
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", f)
                if m:
                    i = int(m.group(1)) - 1
                    if not 0 <= i < nvars:
                        raise ValueError(f"variable x{i + 1} out of range in {text!r}")
                    e[i] += int(m.group(2) or 1)
                else:
                    try:
                        c *= Fraction(f)
                    except (ValueError, ZeroDivisionError) as exc:
                        raise ValueError(f"bad factor {f!r} in {text!r}") from exc
            out = out + cls(nvars, {tuple(e): c})
        return out

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree of a homogeneous polynomial; NEG_INF for zero."""
        return self.homogeneous_degree()

    def homogeneous_degree(self):
        if not self.terms:
            return NEG_INF
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            raise NotHomogeneous(f"polynomial {self} mixes degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self):
        try:
            self.homogeneous_degree()
        except NotHomogeneous:
            return False
        return True

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_value(self):
        if any(any(e) for e in self.terms):
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # arithmetic
    def _lift(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            t[e] = c if v is None else v + c
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c0 = as_scalar(other)
            return Poly(self.nvars, {e: c * c0 for e, c in self.terms.items()})
        other = self._lift(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c)
        return Poly(self.nvars, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # calculus and substitution
    def diff(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Poly(self.nvars, t)

    def substitute(self, images, nvars=None):
        """Replace variable i by images[i] (a Poly in ``nvars`` variables or scalar)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if nvars is None:
            nvars = next((p.nvars for p in images if isinstance(p, Poly)), self.nvars)
        imgs = [p if isinstance(p, Poly) else Poly.const(nvars, p) for p in images]
        cache = {}

        def pw(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = imgs[i] ** k
            return cache[key]

        out = Poly.zero(nvars)
        for e, c in self.terms.items():
            term = Poly.const(nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def embed_vars(self, nvars, positions):
        """Rename variable i to variable positions[i] in a ring of nvars variables."""
        t = {}
        for e, c in self.terms.items():
            e2 = [0] * nvars
            for i, k in enumerate(e):
                e2[positions[i]] += k
            t[tuple(e2)] = c
        return Poly(nvars, t)

    # display and serialization
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            cs = format_scalar(c)
            if not mono:
                parts.append(cs)
            elif isinstance(c, Fraction) and c == 1:
                parts.append(mono)
            elif isinstance(c, Fraction) and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.nvars}, {self})"

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [{"c": format_scalar(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            n = obj["nvars"]
            terms = obj["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"polynomial record needs 'nvars' and 'terms': {obj!r}") from exc
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"bad nvars {n!r}")
        t = {}
        for term in terms:
            e = tuple(term["e"])
            if len(e) != n or any(not isinstance(k, int) or k < 0 for k in e):
                raise ValueError(f"bad exponent vector {term['e']!r}")
            c = parse_scalar(term["c"])
            t[e] = t.get(e, Fraction(0)) + c
        return cls(n, t)


def grevlex_key(e):
    return (sum(e), tuple(-k for k in reversed(e)))


def monomials(nvars, deg):
    """All exponent tuples of total degree deg, descending in grevlex."""
    if deg < 0:
        return []
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return out


def variables(n):
    return [Poly.var(n, i) for i in range(n)]


# --------------------------------------------------------------- matrices

class PolyMatrix:
    """Dense-storage matrix of Polys with sparse multiplication."""

    __slots__ = ("nvars", "rows")

    def __init__(self, nvars, rows):
        self.nvars = nvars
        rs = []
        for r in rows:
            rs.append(tuple(x if isinstance(x, Poly) else Poly.const(nvars, x) for x in r))
        widths = {len(r) for r in rs}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.rows = tuple(rs)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @classmethod
    def zeros(cls, nvars, m, n):
        z = Poly.zero(nvars)
        return cls(nvars, [[z] * n for _ in range(m)])

    @classmethod
    def scalar(cls, nvars, n, p):
        p = p if isinstance(p, Poly) else Poly.const(nvars, p)
        z = Poly.zero(nvars)
        return cls(nvars, [[p if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, nvars, n):
        return cls.scalar(nvars, n, 1)

    @classmethod
    def blocks(cls, nvars, grid):
        """Assemble from a 2-D list of PolyMatrix blocks."""
        rows = []
        for brow in grid:
            h = brow[0].shape[0]
            for i in range(h):
                r = []
                for b in brow:
                    r.extend(b.rows[i])
                rows.append(r)
        return cls(nvars, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        nz = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        out = []
        for r in self.rows:
            acc = {}
            for kk, a in enumerate(r):
                if not a:
                    continue
                for j, b in nz[kk]:
                    prod = a * b
                    acc[j] = acc[j] + prod if j in acc else prod
            z = Poly.zero(self.nvars)
            out.append([acc.get(j, z) for j in range(n)])
        return PolyMatrix(self.nvars, out)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return PolyMatrix(
            self.nvars, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return PolyMatrix(self.nvars, [[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PolyMatrix(self.nvars, [[a * c for a in r] for r in self.rows])

    def transpose(self):
        return PolyMatrix(self.nvars, [list(c) for c in zip(*self.rows)])

    def map(self, fn):
        return PolyMatrix(self.nvars, [[fn(a) for a in r] for r in self.rows])

    def diff(self, i):
        return self.map(lambda p: p.diff(i))

    def permute(self, row_perm=None, col_perm=None):
        rows = self.rows if row_perm is None else [self.rows[i] for i in row_perm]
        if col_perm is not None:
            rows = [[r[j] for j in col_perm] for r in rows]
        return PolyMatrix(self.nvars, rows)

    def trace(self):
        out = Poly.zero(self.nvars)
        for i in range(min(self.shape)):
            out = out + self.rows[i][i]
        return out

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def first_nonzero(self):
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a:
                    return (i, j, a)
        return None

    def to_json(self):
        return [[a.to_json() for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, nvars, obj):
        if not isinstance(obj, list):
            raise ValueError("matrix must be a list of rows")
        rows = []
        for r in obj:
            if not isinstance(r, list):
                raise ValueError("matrix row must be a list")
            row = []
            for a in r:
                p = Poly.from_json(a)
                if p.nvars != nvars:
                    raise ValueError(f"entry has {p.nvars} variables, expected {nvars}")
                row.append(p)
            rows.append(row)
        return cls(nvars, rows)

    def __repr__(self):
        return f"PolyMatrix({self.shape[0]}x{self.shape[1]})"


# --------------------------------------------------------------- Milnor ring

class MilnorData:
    """Graded pieces of the Jacobian ring C[x]/(dW) up to the socle degree plus one.

    Each degree-k piece of the Jacobian ideal is spanned by m * dW/dx_i with
    deg m = k - (d - 1).  Row-reducing those generators with grevlex leading
    terms gives a set of leading monomials; the remaining monomials form the
    stored basis, and reduction by the echelon rows is the normal form.
    """

    def __init__(self, W: Poly):
        d = W.homogeneous_degree()
        if d is NEG_INF or d < 2:
            raise ValueError("W must be homogeneous of degree at least 2")
        self.W = W
        self.d = d
        self.n = n = W.nvars
        self.socle_degree = n * (d - 2)
        self.top = self.socle_degree + 1
        partials = [W.diff(i) for i in range(n)]
        self._pivots = []
        self.basis = []
        for k in range(self.top + 1):
            piv = {}
            for m in monomials(n, k - (d - 1)):
                for dp in partials:
                    row = {tuple(a + b for a, b in zip(m, e)): c for e, c in dp.terms.items()}
                    _insert_row(piv, row)
            self._pivots.append(piv)
            self.basis.append([e for e in monomials(n, k) if e not in piv])
        self.dims = [len(b) for b in self.basis]
        self.isolated = self.dims[self.top] == 0
        if self.isolated:
            body = self.dims[: self.socle_degree + 1]
            if self.dims[self.socle_degree] != 1 or body != body[::-1]:
                raise RuntimeError(f"Milnor dimensions {self.dims} are not palindromic")
            self.socle = self.basis[self.socle_degree][0]
        else:
            self.socle = None

    @property
    def milnor_number(self):
        return sum(self.dims) if self.isolated else None

    def normal_form(self, p: Poly):
        """Coordinates of p in the stored monomial basis of its degree."""
        if p.nvars != self.n:
            raise ValueError("variable count mismatch")
        if not p:
            return None, ()
        k = p.homogeneous_degree()
        if k > self.top:
            raise ValueError(f"degree {k} exceeds the stored Milnor range {self.top}")
        row = dict(p.terms)
        piv = self._pivots[k]
        _reduce_row(piv, row)
        return k, tuple(row.get(e, Fraction(0)) for e in self.basis[k])

    def reduce(self, p: Poly) -> Poly:
        k, coords = self.normal_form(p)
        if k is None:
            return Poly.zero(self.n)
        return Poly(self.n, dict(zip(self.basis[k], coords)))


def _lead(row):
    return max(row, key=grevlex_key)


def _insert_row(piv, row):
    row = {e: c for e, c in row.items() if c}
    while row:
        e = _lead(row)
        if e in piv:
            c = row[e]
            for e2, c2 in piv[e].items():
                v = row.get(e2, 0) - c * c2
                if v:
                    row[e2] = v
                else:
                    row.pop(e2, None)
        else:
            c = row[e]
            piv[e] = {e2: c2 / c for e2, c2 in row.items()}
            return


def _reduce_row(piv, row):
    while True:
        hits = [e for e in row if e in piv]
        if not hits:
            return
        e = max(hits, key=grevlex_key)
        c = row[e]
        for e2, c2 in piv[e].items():
            v = row.get(e2, 0) - c * c2
            if v:
                row[e2] = v
            else:
                row.pop(e2, None)


def milnor_dimensions(W: Poly, d: int | None = None):
    """Graded dimensions (degrees 0..n(d-2)+1) and the isolated-singularity verdict."""
    if d is not None and W.homogeneous_degree() != d:
        raise ValueError(f"W is not homogeneous of degree {d}")
    m = MilnorData(W)
    return m.dims, m.isolated


def normal_form(p: Poly, m: MilnorData):
    return m.normal_form(p)


def fermat(n, d):
    return sum((Poly.var(n, i) ** d for i in range(n)), Poly.zero(n))

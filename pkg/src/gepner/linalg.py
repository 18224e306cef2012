"""Dense exact linear algebra over Q or Q(zeta_d).

Matrices are lists of row lists.  Entries may be Fractions, ints or
Cyclotomic values; nothing here rounds.
"""
from __future__ import annotations

from fractions import Fraction


def _s(x):
    return Fraction(x) if isinstance(x, int) else x


def identity(n, one=Fraction(1)):
    return [[one if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    if any(len(r) != inner for r in a):
        raise ValueError("shape mismatch in matmul")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    y = bk[j]
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def vecmat(v, a):
    return matvec(transpose(a), v)


def transpose(a):
    return [list(r) for r in zip(*a)]


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [[_s(x) for x in r] for r in mat]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat):
    return len(rref(mat)[1])


def kernel(mat, ncols=None):
    """Basis of the right kernel {x : mat x = 0}.

    Each basis vector has a 1 in one free coordinate and 0 in the others.
    """
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    rows, piv = rref(mat) if mat else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            if rows[r][f]:
                v[c] = -rows[r][f]
        basis.append(v)
    return basis


def solve_or_none(mat, rhs):
    """Unique-or-any solution of mat x = rhs, or None if inconsistent."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    rows, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(piv):
        x[c] = rows[r][ncols]
    return x


def solve(mat, rhs):
    x = solve_or_none(mat, rhs)
    if x is None:
        raise ValueError("linear system is inconsistent")
    return x


def det(mat):
    n = len(mat)
    rows = [[_s(x) for x in r] for r in mat]
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            out = -out
        p = rows[c][c]
        out = out * p
        inv = 1 / p
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[c])]
    return out


def inverse(mat):
    n = len(mat)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(mat)]
    rows, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in rows]


def proportional(u, v):
    """True if u and v are nonzero and span the same line."""
    k = next((i for i, x in enumerate(u) if x), None)
    if k is None or not v[k]:
        return False
    c = v[k] / u[k]
    return all(c * a == b for a, b in zip(u, v))

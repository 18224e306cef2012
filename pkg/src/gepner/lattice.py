"""Numerical Grothendieck lattices with an Euler form and autoequivalence actions.

Convention: an automorphism matrix acts on coordinate column vectors, so its
j-th column is the image of the j-th basis class.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import interring as ir
from .exact import Cyclotomic, omega
from .linalg import identity, inverse, kernel, matmul, matvec, proportional


class NumLattice:
    def __init__(self, labels, euler):
        self.labels = list(labels)
        self.euler = [[Fraction(x) for x in r] for r in euler]
        n = len(self.labels)
        if len(self.euler) != n or any(len(r) != n for r in self.euler):
            raise ValueError("Euler matrix shape does not match the basis")

    @property
    def rank(self):
        return len(self.labels)

    def vec(self, coeffs):
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        return LatClass(self, coeffs)

    def basis(self, i):
        return LatClass(self, [int(k == i) for k in range(self.rank)])

    def chi(self, x, y):
        xv = x.v if isinstance(x, LatClass) else x
        yv = y.v if isinstance(y, LatClass) else y
        return sum((a * e * b for a, row in zip(xv, self.euler) for e, b in zip(row, yv) if a and e and b), Fraction(0))


class LatClass:
    __slots__ = ("lat", "v")

    def __init__(self, lat, v):
        self.lat = lat
        self.v = tuple(Fraction(x) if isinstance(x, int) else x for x in v)

    def __add__(self, o):
        return LatClass(self.lat, [a + b for a, b in zip(self.v, o.v)])

    def __sub__(self, o):
        return LatClass(self.lat, [a - b for a, b in zip(self.v, o.v)])

    def __neg__(self):
        return LatClass(self.lat, [-a for a in self.v])

    def __mul__(self, c):
        return LatClass(self.lat, [a * c for a in self.v])

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, LatClass) and self.v == o.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return "LatClass(" + ", ".join(str(a) for a in self.v) + ")"


class LatAuto:
    def __init__(self, lat, matrix, name=""):
        self.lat = lat
        self.name = name
        self.matrix = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in matrix]

    def __call__(self, x):
        return LatClass(self.lat, matvec(self.matrix, x.v))

    def __matmul__(self, other):
        return LatAuto(self.lat, matmul(self.matrix, other.matrix), f"{self.name}*{other.name}")

    def __neg__(self):
        return LatAuto(self.lat, [[-a for a in r] for r in self.matrix], f"-{self.name}")

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = LatAuto(self.lat, identity(self.lat.rank), "id")
        for _ in range(abs(k)):
            out = base @ out
        return out

    def inverse(self):
        return LatAuto(self.lat, inverse(self.matrix), f"{self.name}^-1")

    def __eq__(self, other):
        return isinstance(other, LatAuto) and self.matrix == other.matrix

    def is_isometry(self):
        L = self.lat
        n = L.rank
        return all(
            L.chi(self(L.basis(i)), self(L.basis(j))) == L.euler[i][j] for i in range(n) for j in range(n)
        )

    def columns(self):
        return [list(c) for c in zip(*self.matrix)]


def chi(L: NumLattice, x, y):
    return L.chi(x, y)


def twist_action(L: NumLattice, e: LatClass) -> LatAuto:
    """Spherical twist on classes: x -> x - chi(e, x) e."""
    cols = []
    for j in range(L.rank):
        x = L.basis(j)
        cols.append((x - e * L.chi(e, x)).v)
    return LatAuto(L, [list(r) for r in zip(*cols)], "T")


def inv_twist_action(L: NumLattice, e: LatClass) -> LatAuto:
    """Inverse twist on classes: x -> x - chi(x, e) e."""
    cols = []
    for j in range(L.rank):
        x = L.basis(j)
        cols.append((x - e * L.chi(x, e)).v)
    return LatAuto(L, [list(r) for r in zip(*cols)], "T^-1")


def gepner_eigenspace(A: LatAuto, lam) -> list:
    """Basis of ker(A - lam) over the cyclotomic field of lam.

    Vectors are scaled so the first nonzero coordinate is 1.
    """
    lam = Cyclotomic.coerce(lam)
    n = A.lat.rank
    M = [[A.matrix[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    out = []
    for v in kernel(M, n):
        lead = next(x for x in v if x)
        out.append([x / lead for x in v])
    return out


def central_charge(L: NumLattice, u, x):
    """Z(x) = chi(u, x)."""
    return L.chi(u, x)


def same_line(u, v):
    return proportional(list(u), list(v))


# ------------------------------------------------------------ datasets

def ch_b(i: int):
    """ch of the rank-8 bundle B_i on the plane; B_{i+2} = B_i(1)."""
    R = ir.p2()
    base = {0: [(0, 1), (-1, 3), (-2, 3), (-3, 1)], 1: [(0, 3), (-1, 2), (-2, 3)]}[i % 2]
    ch = R.zero()
    for a, m in base:
        ch = ch + ir.line_bundle_p2(R, a) * m
    return ch * ir.line_bundle_p2(R, i // 2)


def chi_b(i: int, j: int):
    """chi(B_i, B_j) = chi(P^2, B_{j-i}), which depends only on j - i."""
    R = ir.p2()
    return ir.chi_rr(R, ch_b(j - i))


@dataclass
class VDataset:
    lat: NumLattice
    tensor: LatAuto
    fb_inverse: LatAuto
    u: list


def dataset_v_b012() -> VDataset:
    """Span of [B0], [B1], [B2] with tensoring by B1 and the inverse Fourier-type action."""
    L = NumLattice(["B0", "B1", "B2"], [[chi_b(i, j) for j in range(3)] for i in range(3)])
    b3 = b_class_in_v(3)
    T = LatAuto(L, [[0, 0, b3[0]], [1, 0, b3[1]], [0, 1, b3[2]]], "(x)B1")
    F = -(T @ twist_action(L, L.basis(1)))
    F.name = "F^-1"
    w = omega()
    return VDataset(L, T, F, [Fraction(1), w - 2, -w])


def b_class_in_v(i):
    """Coordinates of [B_i] in the basis [B0], [B1], [B2], solved through ch on the plane."""
    from .linalg import solve

    cols = [ch_b(k).v for k in range(3)]
    mat = [[cols[k][r] for k in range(3)] for r in range(3)]
    return solve(mat, list(ch_b(i).v))


@dataclass
class SurfaceDataset:
    lat: NumLattice
    serre: LatAuto
    ring: object
    chs: list
    u: list


def _surface_objects(R):
    h = R.basis("h")
    objs = [ir.exp(h), ir.exp(h * 2)]
    for i in range(1, 7):
        objs.append(R.basis(f"C{i}") + R.basis("pt") * Fraction(1, 2))
    return objs


def serre_image_surface(R, ch):
    """Class of S_D(E) = [E(-H)] - chi(E(-H), O) [O] inside the ring."""
    H = ir.anticanonical_surface(R)
    twisted = ch * ir.exp(-H)
    return twisted - R.one() * ir.chi_pair(R, twisted, R.one())


def dataset_cubic_surface() -> SurfaceDataset:
    """Orthogonal complement of O in the cubic surface: O(h), O(2h), O_{C1..C6}."""
    from .linalg import solve

    R = ir.cubic_surface()
    objs = _surface_objects(R)
    labels = ["O(h)", "O(2h)"] + [f"O_C{i}" for i in range(1, 7)]
    L = NumLattice(labels, [[ir.chi_pair(R, a, b) for b in objs] for a in objs])
    full = [R.one()] + objs
    mat = [[full[k].v[r] for k in range(9)] for r in range(9)]
    cols = []
    for b in objs:
        coords = solve(mat, list(serre_image_surface(R, b).v))
        if coords[0]:
            raise ArithmeticError("Serre image left the orthogonal complement of O")
        cols.append(coords[1:])
    S = LatAuto(L, [list(r) for r in zip(*cols)], "S")
    w = omega()
    u = [3 * w, -3 * (w + 1)] + [w + 2] * 6
    return SurfaceDataset(L, S, R, objs, u)


@dataclass
class ThreefoldDataset:
    lat: NumLattice
    serre: LatAuto
    serre_inverse: LatAuto
    phi: list
    phi_inverse: list
    chi_rd: list
    u: list


def dataset_cubic_threefold() -> ThreefoldDataset:
    """Kuznetsov component lattice of a cubic threefold, basis [I_l], [S(I_l)]."""
    L = NumLattice(["I_l", "S(I_l)"], [[-1, -1], [0, -1]])
    # S^-1 [I_l] = [I_l] - [S I_l]  gives  S [S I_l] = [S I_l] - [I_l]
    S = LatAuto(L, [[0, -1], [1, 1]], "S")
    Sinv = S.inverse()
    phi = [[Fraction(0), Fraction(4)], [Fraction(2), Fraction(-3)]]
    phi_inv = inverse(phi)
    g = matmul(matmul([list(r) for r in zip(*phi_inv)], L.euler), phi_inv)
    w = omega()
    return ThreefoldDataset(L, S, Sinv, phi, phi_inv, g, [w, Fraction(1)])


# ------------------------------------------------------------ class relations

def formal_fb_inverse_on_b(i: int):
    """F^-1 [B_i] = -[B_{i+1}] + chi(B_1, B_i) [B_2], returned as {index: coeff}."""
    out = {i + 1: Fraction(-1)}
    out[2] = out.get(2, 0) + chi_b(1, i)
    return out

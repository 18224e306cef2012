"""The acceptance registry: every headline computation as a named, seeded check.

Each check returns a list of items (label, computed, expected, ok).  A check
passes when all of its items do.  Checks are reported in name order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import clifford as cl
from . import interring as ir
from . import lattice as lt
from . import mukai as mk
from .charge import ch_higher, euler_chi, point_ch, recover_ch, vandermonde_det, z_gepner
from .corpus import build_corpus
from .exact import Cyclotomic, cyc_root, format_scalar, imag_unit, omega, sqrt3, sqrt_minus3
from .mf import point_object, shift, tau, verify_mf
from .polyring import MilnorData, Poly, fermat, monomials


def show(x, precision=None):
    """Deterministic text for report values; ``precision`` adds a numeric embedding."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(a, precision) for a in x) + ")"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {show(v, precision)}" for k, v in x.items()) + "}"
    if isinstance(x, Cyclotomic):
        s = x.simplify()
        text = format_scalar(s)
        if precision and not s.is_rational():
            import mpmath

            z = mpmath.chop(s.embed(precision), mpmath.mpf(2) ** (8 - precision))
            text += " ~ " + mpmath.nstr(z, max(3, int(precision * 0.3)))
        return text
    if isinstance(x, (int, Fraction)):
        return format_scalar(x)
    return str(x)


@dataclass
class Item:
    label: str
    computed: object
    expected: object
    ok: bool


class Recorder:
    def __init__(self):
        self.items = []

    def eq(self, label, computed, expected):
        self.items.append(Item(label, computed, expected, computed == expected))

    def true(self, label, cond, computed=None, expected=None):
        self.items.append(Item(label, cond if computed is None else computed,
                               True if expected is None else expected, bool(cond)))


@dataclass
class Check:
    name: str
    anchor: str
    budget: float
    fn: object


@dataclass
class CheckResult:
    name: str
    anchor: str
    status: str
    items: list = field(default_factory=list)
    elapsed: float = 0.0
    budget: float = 0.0
    error: str | None = None

    @property
    def passed(self):
        return self.status == "pass"

    def to_json(self, precision=None, timings=False):
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "computed": {i.label: show(i.computed, precision) for i in self.items},
            "expected": {i.label: show(i.expected, precision) for i in self.items},
            "failed_items": [i.label for i in self.items if not i.ok],
        }
        if self.error:
            out["error"] = self.error
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
            out["budget"] = self.budget
        return out


# ------------------------------------------------------------ 1. factorization axioms

def check_mf_axioms(seed, rec):
    corpus = build_corpus(seed)
    rec.true("corpus size is at least 50", len(corpus) >= 50, len(corpus), ">= 50")
    rec.eq("largest rank in corpus", max(e.mf.rank for e in corpus), 64)
    rec.eq("Clifford rank-8 members", sum(1 for e in corpus if e.name.startswith("Clifford")), 4)
    rec.eq("verify_mf failures", [e.name for e in corpus if not verify_mf(e.mf, e.W)], [])
    rec.eq("tau^d != [2] on", [e.name for e in corpus if tau(e.mf, e.mf.d) != shift(shift(e.mf))], [])
    bad_tau, bad_shift = [], []
    for e in corpus:
        P = e.mf
        z = z_gepner(P)
        if z_gepner(tau(P, 1)) != cyc_root(P.d, 1) * z:
            bad_tau.append(e.name)
        if z_gepner(shift(P)) != -z:
            bad_shift.append(e.name)
    rec.eq("Z(tau P) != zeta Z(P) on", bad_tau, [])
    rec.eq("Z(P[1]) != -Z(P) on", bad_shift, [])


# ------------------------------------------------------------ 2. point-object charges

def check_point_charges(seed, rec):
    bad = []
    cases = 0
    for d in (2, 3, 5):
        for n in range(1, 7):
            W = fermat(n, d)
            for k in range(d):
                P = point_object(W, k)
                for j in range(1, d):
                    cases += 1
                    if ch_higher(P, j) != point_ch(d, n, k, j):
                        bad.append((d, n, k, j))
    rec.eq("cases checked", cases, 168)
    rec.eq("(d, n, k, j) with ch_j != -zeta^kj (1 - zeta^-j)^n", bad, [])
    rec.eq("ch_1 at (d, n, k, j) = (3, 6, 0, 1)", ch_higher(point_object(fermat(6, 3), 0), 1), Fraction(27))


# ------------------------------------------------------------ 3. HRR pairing

def check_hrr_pairing(seed, rec):
    corpus = build_corpus(seed)
    points = {}

    def pt(W, k):
        key = (W.nvars, str(W), k)
        if key not in points:
            points[key] = point_object(W, k)
        return points[key]

    non_integral, round_trip = [], []
    for e in corpus:
        P = e.mf
        vals = {}
        for k in range(P.d):
            try:
                vals[k] = euler_chi(P, pt(e.W, k))
            except (ArithmeticError, ValueError) as exc:
                non_integral.append(f"{e.name}, k={k}: {exc}")
        if len(vals) < P.d:
            continue
        got = recover_ch({k: vals[k] for k in range(P.d - 1)}, P.d, P.nvars)
        if any(got[j] != ch_higher(P, j) for j in range(1, P.d)):
            round_trip.append(e.name)
    rec.eq("chi(P, C(k)) not an integer for", non_integral, [])
    rec.eq("recover_ch round-trip failures", round_trip, [])
    zero_dets = [d for d in range(2, 13) if not vandermonde_det(d)]
    rec.eq("d <= 12 with vanishing Vandermonde determinant", zero_dets, [])


# ------------------------------------------------------------ 4. lattice V

def check_lattice_v(seed, rec):
    F = Fraction
    for i, want in enumerate(((8, -12, 12), (8, -8, 7), (8, -4, 4))):
        rec.eq(f"ch(B{i})", lt.ch_b(i).v, tuple(F(x) for x in want))
    rec.eq("chi(B0, B_j) for j = -3..3", [lt.chi_b(0, j) for j in range(-3, 4)], [11, 6, 3, 2, 3, 6, 11])
    B = {i: lt.b_class_in_v(i) for i in range(-1, 7)}

    def comb(*terms):
        out = [F(0)] * 3
        for c, i in terms:
            out = [a + c * b for a, b in zip(out, B[i])]
        return out

    rec.eq("[B4] - 2[B2] + [B0] vs [B5] - 2[B3] + [B1]", comb((1, 4), (-2, 2), (1, 0)), comb((1, 5), (-2, 3), (1, 1)))
    rec.eq("[B4] vs [B0] - 2[B1] + 2[B3]", B[4], comb((1, 0), (-2, 1), (2, 3)))
    rec.eq("[B3] vs [B0] - 3[B1] + 3[B2]", B[3], comb((1, 0), (-3, 1), (3, 2)))
    rec.eq("[B1] vs 3/8[B0] + 3/4[B2] - 1/8[B4]", B[1], comb((F(3, 8), 0), (F(3, 4), 2), (F(-1, 8), 4)))
    V = lt.dataset_v_b012()
    T = V.tensor
    rec.eq("tensor sends [B_i] to [B_i+1], i = 0..5",
           [list(T(V.lat.vec(B[i])).v) for i in range(6)], [list(B[i + 1]) for i in range(6)])
    Fm = V.fb_inverse
    rec.eq("F^-1 matrix", Fm.matrix, [[0, 0, -1], [-1, 0, 3], [3, 1, 0]])
    deduced = [Fm(V.lat.vec(B[i])).v for i in range(4)]
    rec.eq("F^-1 on [B0], [B1], [B2], [B3] before reduction",
           [list(x) for x in deduced],
           [comb((-1, 1), (3, 2)), comb((1, 2)), comb((3, 2), (-1, 3)), comb((-1, 0), (2, 1), (6, 2), (-2, 3))])
    formal = []
    for i in range(3):
        img = [F(0)] * 3
        for j, c in lt.formal_fb_inverse_on_b(i).items():
            img = [a + c * b for a, b in zip(img, B[j])]
        formal.append(img)
    rec.eq("F^-1 [B_i] = -[B_i+1] + chi(B1, B_i)[B2]", formal, [list(Fm(V.lat.basis(i)).v) for i in range(3)])
    rec.eq("(F^-1)^3 = Id", (Fm ** 3).matrix, [[int(i == j) for j in range(3)] for i in range(3)])
    rec.true("F^-1 is an isometry", Fm.is_isometry())
    es = lt.gepner_eigenspace(Fm, omega())
    rec.eq("omega-eigenspace of F^-1", es, [V.u])


# ------------------------------------------------------------ 5. cohomology of the blow-up

def _table(d):
    return ir.CohTable(d)


def check_cohomology(seed, rec):
    mkl = ir.mkl
    rec.eq("M(0,0)", mkl(0, 0), _table({0: 1}))
    rec.eq("M(0,-3)", mkl(0, -3), _table({2: 1}))
    rec.eq("M(-4,-3)", mkl(-4, -3), _table({5: 3}))
    nz = [(k, l) for k in (-3, -2, -1) for l in range(-15, 16) if not mkl(k, l).is_zero()]
    rec.eq("nonzero M(k,l) with -3 <= k <= -1, |l| <= 15", nz, [])
    nz = [(k, l) for l in (-2, -1, 0) for k in range(-6 - l + 1, -l) if not mkl(k, l).is_zero()]
    rec.eq("nonzero M(k,l) with -2 <= l <= 0, -6 < k+l < 0", nz, [])
    rec.eq("M(l,-6-l) for l = -2, -1, 0 (indices as printed)",
           [mkl(l, -6 - l) for l in (-2, -1, 0)], [_table({5: 1})] * 3)
    rec.eq("M(-6-l,l) for l = -2, -1, 0",
           [mkl(-6 - l, l) for l in (-2, -1, 0)], [_table({5: 1})] * 3)
    for label, src, tgt, sh, want in COMPLEXES:
        got = ir.two_term_complex(src, tgt, sh)
        rec.eq(label, (got, got.exact), (_table(want), True))


COMPLEXES = [
    ("RHom(O(h-H), Phi(B0))",
     [(-1, -1, 1), (-1, -2, 3), (-1, -3, 3), (-1, -4, 1)], [(0, -1, 3), (0, -2, 2), (0, -3, 3)], 0, {2: 3}),
    ("RHom(O(h-H), Phi(B1))",
     [(-1, -1, 3), (-1, -2, 2), (-1, -3, 3)], [(0, 0, 1), (0, -1, 3), (0, -2, 3), (0, -3, 1)], 0, {0: 1, 2: 1}),
    ("RHom(Phi(B0), O(-h))^v",
     [(-4, 0, 1), (-4, -1, 3), (-4, -2, 3), (-4, -3, 1)], [(-3, 0, 3), (-3, -1, 2), (-3, -2, 3)], 4, {0: 6}),
    ("RHom(Phi(B1), O(-h))^v",
     [(-4, 0, 3), (-4, -1, 2), (-4, -2, 3)], [(-3, 1, 1), (-3, 0, 3), (-3, -1, 3), (-3, -2, 1)], 4, {0: 3}),
]


# ------------------------------------------------------------ 6. Clifford factorization

def clifford_failures(W):
    """Names of the failed Clifford properties for one cubic containing the plane."""
    out = []
    dec = cl.decompose(W)
    if cl.recompose(dec) != W:
        out.append("decompose round-trip")
    if cl.euler_plane_identity(dec):
        out.append("W''-Euler identity")
    odd_even, even_odd = cl.wedge_contract_delta(dec)
    from .polyring import PolyMatrix

    WI = PolyMatrix.scalar(cl.NV, 8, W)
    if even_odd @ odd_even != WI or odd_even @ even_odd != WI:
        out.append("delta^2 = W Id8")
    v = cl.check_MN(dec)
    if not v:
        out.append("M/N identities: " + v.reason())
    if not verify_mf(cl.clifford_mf(dec), W):
        out.append("verify_mf")
    return out


def check_clifford(seed, rec):
    cubics = [("Fermat plane cubic", cl.fermat_plane_cubic())]
    cubics += [(f"random cubic #{s}", cl.random_plane_cubic(1000 * seed + s)) for s in range(20)]
    bad = {}
    for name, W in cubics:
        f = clifford_failures(W)
        if f:
            bad[name] = f
    rec.eq("cubics checked", len(cubics), 21)
    rec.eq("failures", bad, {})
    try:
        cl.decompose(Poly.parse("x1^3 + x4^3", 6))
        rejected = False
    except cl.PlaneNotContained:
        rejected = True
    rec.true("cubic with an x4^3 term is rejected", rejected)


# ------------------------------------------------------------ 7. fourfold identity

def check_fourfold(seed, rec):
    X = ir.cubic_fourfold()
    rec.eq("ch(O_P)", ir.ch_plane_in_fourfold(X), X.basis("P") - X.basis("pt") * Fraction(1, 4))
    left, right = ir.fourfold_ch_sides(X)
    target = ir.fourfold_target(X)
    rec.eq("ch(I_P(1)) - 3ch(O_X)", left, target)
    rec.eq("ch(I_P^v(-2)) - 3ch(O_X(-1))", right, target)


# ------------------------------------------------------------ 8. twisted U class

NS_CASES = [
    ("rank 1, beta = 0", [[2]], (0,)),
    ("rank 1, beta = h", [[2]], (1,)),
    ("rank 2, beta = second generator", [[2, 1], [1, -2]], (0, 1)),
]


def check_u_class(seed, rec):
    for label, gram, b in NS_CASES:
        ns = mk.NSLattice(gram)
        beta = mk.BetaField(b)
        lhs, rhs = mk.u_class(ns, beta)
        rec.eq(f"u class identity, {label}", lhs.astuple(), rhs.astuple())
        v0 = mk.u_vector(ns, 0, beta)
        h = ns.h()
        interp = (v0 * Fraction(3, 8) + mk.exp_twist(h, v0) * Fraction(3, 4)
                  - mk.exp_twist(tuple(2 * x for x in h), v0) * Fraction(1, 8))
        half = mk.exp_twist(tuple(x / 2 for x in h), v0)
        rec.eq(f"(3/8 + 3/4 e^h - 1/8 e^2h) v(U0) = e^(h/2) v(U0), {label}", interp.astuple(), half.astuple())
        rec.eq(f"v(U1) = e^(h/2) v(U0), {label}", mk.u_vector(ns, 1, beta).astuple(), half.astuple())


# ------------------------------------------------------------ 9. K3 charge values

def check_k3_charge(seed, rec):
    s3 = sqrt_minus3()
    for label, gram, b in NS_CASES:
        ns = mk.NSLattice(gram)
        beta = mk.BetaField(b)
        u2 = mk.to_frak_frame(mk.u_vector(ns, 2, beta), beta)
        pt = mk.to_frak_frame(mk.vector(ns, 0, ns.zero(), 1), beta)
        rec.eq(f"v(U2) in frak frame, {label}", u2.astuple(),
               (Fraction(2),) + tuple(Fraction(1, 2) * x for x in ns.h()) + (Fraction(5, 8),))
        rec.eq(f"Z(U2), {label}", mk.z_gepner_k3(u2), Fraction(-1, 4) + s3 / 4)
        rec.eq(f"Z(2U2 - pt), {label}", mk.z_gepner_k3(u2 * 2 - pt), Fraction(1, 2) + s3 / 2)
        rec.eq(f"Z(pt), {label}", mk.z_gepner_k3(pt), Fraction(-1))
        rec.eq(f"mu(U2), {label}", mk.slope_mu(u2), Fraction(1, 2))
    rng = random.Random(seed)
    fails, total = [], 0
    for gram in ([[2]], [[2, 1], [1, -2]]):
        ns = mk.NSLattice(gram)
        for _ in range(500):
            xi = mk.vector(ns, 2 * rng.randint(-6, 6), [rng.randint(-8, 8) for _ in gram], rng.randint(-8, 8))
            beta = mk.BetaField([rng.randint(-3, 3) for _ in gram])
            r = mk.integrality_report(xi, beta)
            total += 1
            if not r.ok:
                fails.append((xi.astuple(), beta.coords, [k for k, v in r.checks.items() if not v]))
    rec.eq("integrality samples", total, 1000)
    rec.eq("integrality failures", fails, [])
    try:
        ns = mk.NSLattice([[2]])
        mk.integrality_report(mk.vector(ns, 1, [0], 0), mk.BetaField([0]))
        rejected = False
    except ValueError:
        rejected = True
    rec.true("odd xi0 is rejected", rejected)


# ------------------------------------------------------------ 10. spherical exclusion

def check_exclusion(seed, rec):
    res = mk.spherical_exclusion(mk.NSLattice([[2]]))
    ch = res.chain
    rec.eq("v0 candidates", ch["v0_candidates"], [2])
    rec.eq("v2 candidates", ch["v2_candidates"], {"2": ["3/8"]})
    rec.eq("v1^2", ch["v1_squared"], ["-1/2"])
    rec.eq("gamma^2", ch["gamma_squared"], ["-2"])
    rec.eq("NS = Zh", res.witness, None)
    ns = mk.NSLattice([[2, 0], [0, -2]])
    w = mk.spherical_exclusion(ns).witness
    rec.true("gram [[2,0],[0,-2]] has a witness", w is not None, w, "a witness")
    if w is not None:
        rec.eq("witness gamma^2, gamma.h", (ns.dot(w, w), ns.dot(w, ns.h())), (Fraction(-2), Fraction(0)))
    rec.eq("gram [[2,1],[1,-4]]", mk.spherical_exclusion(mk.NSLattice([[2, 1], [1, -4]])).witness, None)


# ------------------------------------------------------------ 11. cubic surface

def check_surface(seed, rec):
    D = lt.dataset_cubic_surface()
    L, S, R = D.lat, D.serre, D.ring
    ones = [Fraction(1)] * 6
    cols = S.columns()
    rec.eq("S[O(h)]", cols[0], [4, -3] + ones)
    rec.eq("S[O(2h)]", cols[1], [9, -5] + ones)
    rec.eq("S[O_Ci]", [cols[2 + i] for i in range(6)],
           [[2, -1] + [Fraction(int(k == i)) for k in range(6)] for i in range(6)])
    es = lt.gepner_eigenspace(S, omega())
    rec.eq("dim of omega-eigenspace", len(es), 1)
    rec.true("eigenvector is proportional to (3w, -3(w+1), (w+2)*6)", bool(es) and lt.same_line(es[0], D.u),
             es[0] if es else None, D.u)
    H = ir.anticanonical_surface(R)
    bad = []
    for lab, E in zip(L.labels, D.chs):
        ch1H = (E.component(1) * H).integrate()
        if E["pt"] != ch1H / 2 - E["1"] or ir.chi_pair(R, E, R.one()):
            bad.append(lab)
    rec.eq("basis classes violating ch2 = ch1.H/2 - ch0", bad, [])
    w = omega()
    chu = R.zero()
    for c, E in zip(D.u, D.chs):
        chu = chu + E * c
    rec.eq("ch(u0)", chu.v, (R.one() * -3 + H * (-(w + 2)) + R.basis("pt") * (w * Fraction(-3, 2))).v)
    lhs = [L.chi(D.u, L.basis(j).v) for j in range(L.rank)]
    rhs = [E["1"] * 3 + (w - 1) * (E.component(1) * H).integrate() for E in D.chs]
    rec.eq("chi(u0, E) = 3ch0 + (w - 1)ch1.H on the basis", lhs, rhs)


# ------------------------------------------------------------ 12. cubic threefold

def check_threefold(seed, rec):
    D = lt.dataset_cubic_threefold()
    L = D.lat
    rec.eq("Euler matrix", L.euler, [[-1, -1], [0, -1]])
    rec.eq("S^-1 [I_l]", D.serre_inverse.columns()[0], [1, -1])
    es = lt.gepner_eigenspace(-D.serre_inverse, omega())
    rec.eq("dim of omega-eigenspace of -S^-1", len(es), 1)
    rec.true("eigenvector is proportional to (w, 1)", bool(es) and lt.same_line(es[0], D.u),
             es[0] if es else None, D.u)
    rec.eq("phi^-1 columns", D.phi_inverse, [[Fraction(3, 8), Fraction(1, 2)], [Fraction(1, 4), 0]])
    g = D.chi_rd
    rec.eq("chi_rd coefficients (r1r2, r1d2, d1r2, d1d2)", [g[0][0], g[0][1], g[1][0], g[1][1]],
           [Fraction(-19, 64), Fraction(-3, 16), Fraction(-5, 16), Fraction(-1, 4)])
    w = omega()
    phi_u = [sum((D.phi[i][j] * D.u[j] for j in range(2)), Fraction(0)) for i in range(2)]
    rec.eq("phi(u0)", phi_u, [4, 2 * w - 3])
    r3, i = sqrt3(), imag_unit()
    bad = []
    for r in range(-3, 4):
        for d in range(-3, 4):
            E = [sum((D.phi_inverse[a][b] * x for b, x in enumerate((r, d))), Fraction(0)) for a in range(2)]
            got = L.chi(D.u, E)
            want = -r3 / 4 * (-r3 / 12 * (r + 4 * d) + (d + Fraction(5, 4) * r) * i)
            if got != want:
                bad.append((r, d))
    rec.eq("(r, d) in [-3, 3]^2 where chi(u0, E) differs from the closed form", bad, [])


# ------------------------------------------------------------ 13. property suites

def _random_cyclotomic(rng, order):
    m = len(Cyclotomic(order, [0]).coeffs)
    return Cyclotomic(order, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)])


def check_properties(seed, rec):
    rng = random.Random(seed)
    # Milnor palindromicity
    pal_bad, isolated = [], 0
    Ws = [fermat(n, d) for n in (1, 2, 3) for d in (2, 3, 4)]
    while len(Ws) < 40:
        n = rng.choice((2, 3))
        d = rng.choice((2, 3, 4))
        terms = {e: Fraction(rng.randint(-3, 3)) for e in monomials(n, d)}
        W = Poly(n, terms)
        if W:
            Ws.append(W)
    for W in Ws:
        try:
            m = MilnorData(W)
        except RuntimeError:
            pal_bad.append(str(W))
            continue
        if m.isolated:
            isolated += 1
            body = m.dims[: m.socle_degree + 1]
            if body != body[::-1] or m.milnor_number != (m.d - 1) ** m.n:
                pal_bad.append(str(W))
    rec.true("isolated potentials sampled", isolated >= 20, isolated, ">= 20")
    rec.eq("non-palindromic Milnor dimensions", pal_bad, [])
    # Mukai isometry
    iso_bad = 0
    grams = ([[2]], [[2, 1], [1, -2]], [[2, 0, 1], [0, -2, 0], [1, 0, -4]])
    lats = [mk.NSLattice(g) for g in grams]
    for _ in range(1000):
        ns = rng.choice(lats)

        def rv():
            return mk.vector(ns, rng.randint(-5, 5), [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(ns.rho)],
                             Fraction(rng.randint(-6, 6), rng.randint(1, 4)))

        v, u = rv(), rv()
        B = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(ns.rho)]
        if mk.mukai_pairing(mk.exp_twist(B, v), mk.exp_twist(B, u)) != mk.mukai_pairing(v, u):
            iso_bad += 1
    rec.eq("exp_twist isometry failures in 1000 cases", iso_bad, 0)
    # cyclotomic field axioms
    ax_bad = 0
    orders = (1, 3, 4, 5, 6, 8, 12)
    for _ in range(1000):
        a, b, c = (_random_cyclotomic(rng, rng.choice(orders)) for _ in range(3))
        ok = (a + b) + c == a + (b + c) and a * b == b * a and (a * b) * c == a * (b * c)
        ok = ok and a * (b + c) == a * b + a * c and a - a == 0 and a + 0 == a and a * 1 == a
        if b:
            ok = ok and (a / b) * b == a and b * b.inverse() == 1
        if not ok:
            ax_bad += 1
    rec.eq("field-axiom failures in 1000 triples", ax_bad, 0)


# ------------------------------------------------------------ registry

CHECKS = [
    Check("c01_mf_axioms", "graded factorization axioms, grade shift and charge covariance", 5.0, check_mf_axioms),
    Check("c02_point_charges", "Chern characters of the graded residue field", 5.0, check_point_charges),
    Check("c03_hrr_pairing", "HRR Euler pairing and Vandermonde recovery", 5.0, check_hrr_pairing),
    Check("c04_lattice_v", "Clifford sheaves on the plane: relations, F action, eigenvector", 1.0, check_lattice_v),
    Check("c05_cohomology", "cohomology of line bundles on the blown-up P^5 and four complexes", 1.0, check_cohomology),
    Check("c06_clifford", "rank-8 factorization of a cubic containing a plane", 10.0, check_clifford),
    Check("c07_fourfold", "numerical Chern character identity on the cubic fourfold", 1.0, check_fourfold),
    Check("c08_u_class", "twisted Mukai vectors of U_i and the eigen-class", 1.0, check_u_class),
    Check("c09_k3_charge", "Gepner charge on the twisted K3: values, slope, integrality", 5.0, check_k3_charge),
    Check("c10_exclusion", "no spherical class with vanishing charge", 1.0, check_exclusion),
    Check("c11_surface", "cubic surface: Serre action, eigenvector, charge", 1.0, check_surface),
    Check("c12_threefold", "cubic threefold: Euler form, eigenvector, charge", 1.0, check_threefold),
    Check("c13_properties", "property suites: Milnor, Mukai isometry, field axioms", 10.0, check_properties),
]


def run_check(check: Check, seed: int = 0) -> CheckResult:
    rec = Recorder()
    t0 = time.perf_counter()
    error = None
    try:
        check.fn(seed, rec)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        error = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    ok = error is None and rec.items and all(i.ok for i in rec.items)
    return CheckResult(check.name, check.anchor, "pass" if ok else "fail", rec.items, elapsed, check.budget, error)


def run_all(seed: int = 0, only=None) -> list:
    chosen = [c for c in CHECKS if only is None or c.name in only]
    return [run_check(c, seed) for c in sorted(chosen, key=lambda c: c.name)]


def report(results, seed, precision=None, timings=False) -> dict:
    return {
        "seed": seed,
        "checks": [r.to_json(precision, timings) for r in results],
        "summary": {
            "total": len(results),
            "passed": sum(r.passed for r in results),
            "failed": [r.name for r in results if not r.passed],
        },
    }

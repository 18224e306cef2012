"""Command-line driver.

Exit codes: 0 when everything verified, 1 on a verification failure,
2 on malformed input or a violated precondition.  All output is JSON.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, clifford, interring, lattice, mukai
from .charge import ch_higher, ch_zero, supertrace_poly, z_gepner
from .exact import format_scalar, omega, parse_scalar
from .mf import GradedMF, MFError, koszul_mf, point_object, verify_mf
from .polyring import MilnorData, Poly

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed input; the message names where."""


# ------------------------------------------------------------ I/O helpers

def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from exc


def poly_from_obj(obj, where):
    try:
        if isinstance(obj, dict) and "text" in obj:
            return Poly.parse(obj["text"], obj["nvars"])
        return Poly.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{where}: bad polynomial: {exc}") from exc


def load_poly(path):
    return poly_from_obj(load_json(path), path)


def load_mf(path):
    obj = load_json(path)
    try:
        return GradedMF.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: bad factorization: {exc}") from exc


def emit(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_int_list(text, where):
    try:
        return [Fraction(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: expected comma-separated rationals, got {text!r}") from exc


# ------------------------------------------------------------ mf

def cmd_mf_verify(a):
    P, W = load_mf(a.mf), load_poly(a.w)
    v = verify_mf(P, W)
    emit({"ok": v.ok, "failures": v.failures})
    return EXIT_OK if v else EXIT_FAIL


def cmd_mf_zg(a):
    P = load_mf(a.mf)
    emit({"z_gepner": format_scalar(z_gepner(P).simplify())})
    return EXIT_OK


def cmd_mf_chern(a):
    P = load_mf(a.mf)
    js = [a.j] if a.j is not None else list(range(1, P.d))
    if any(j % P.d == 0 for j in js):
        raise InputError(f"--j must not be divisible by d = {P.d}")
    out = {"d": P.d, "ch": {str(j): format_scalar(ch_higher(P, j).simplify()) for j in js}}
    if a.ch0:
        raw = supertrace_poly(P)
        if raw:
            W = load_poly(a.w) if a.w else P.potential()
            out["ch0"] = str(ch_zero(P, MilnorData(W)))
        else:
            out["ch0"] = "0"
    emit(out)
    return EXIT_OK


def cmd_mf_koszul(a):
    W = load_poly(a.w)
    obj = load_json(a.pairs)
    if not isinstance(obj, list) or not obj:
        raise InputError(f"{a.pairs}: expected a nonempty list of [a, b] pairs")
    pairs = []
    for i, pr in enumerate(obj):
        if not isinstance(pr, list) or len(pr) != 2:
            raise InputError(f"{a.pairs}: entry {i} is not a pair")
        pairs.append((poly_from_obj(pr[0], f"{a.pairs}[{i}][0]"), poly_from_obj(pr[1], f"{a.pairs}[{i}][1]")))
    if sum((x * y for x, y in pairs), Poly.zero(W.nvars)) != W:
        raise InputError("sum of a_i * b_i differs from W")
    try:
        P = koszul_mf(pairs, offset=a.offset, even_first=not a.odd_first)
    except MFError as exc:
        raise InputError(str(exc)) from exc
    emit(P.to_json(), a.output)
    return EXIT_OK


def cmd_mf_point(a):
    W = load_poly(a.w)
    try:
        P = point_object(W, a.k)
    except MFError as exc:
        raise InputError(str(exc)) from exc
    emit(P.to_json(), a.output)
    return EXIT_OK


# ------------------------------------------------------------ lattice

def _dataset(name):
    if name == "v-b012":
        D = lattice.dataset_v_b012()
        return D.lat, {"fb-inverse": D.fb_inverse, "tensor": D.tensor}
    if name == "cubic-surface":
        D = lattice.dataset_cubic_surface()
        return D.lat, {"serre": D.serre}
    if name == "cubic-threefold":
        D = lattice.dataset_cubic_threefold()
        return D.lat, {"serre": D.serre, "serre-inverse": D.serre_inverse, "minus-serre-inverse": -D.serre_inverse}
    raise InputError(f"unknown dataset {name!r}")


def _auto(a):
    L, autos = _dataset(a.dataset)
    if a.auto not in autos:
        raise InputError(f"dataset {a.dataset} has automorphisms {sorted(autos)}, not {a.auto!r}")
    return L, autos[a.auto]


def _scalar_arg(text):
    if text == "omega":
        return omega()
    if text == "omega2":
        return omega() ** 2
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise InputError(f"--lambda: {exc}") from exc


def cmd_lattice_eigen(a):
    L, A = _auto(a)
    es = lattice.gepner_eigenspace(A, _scalar_arg(a.lam))
    emit({"basis": L.labels, "eigenvectors": [[checks.show(x) for x in v] for v in es]})
    return EXIT_OK


def cmd_lattice_act(a):
    L, A = _auto(a)
    M = (A ** a.power).matrix
    emit({"basis": L.labels, "matrix": [[checks.show(x) for x in r] for r in M]})
    return EXIT_OK


# ------------------------------------------------------------ clifford

def cmd_clifford_check(a):
    W = load_poly(a.cubic)
    try:
        dec = clifford.decompose(W)
    except ValueError as exc:
        raise InputError(f"{a.cubic}: {exc}") from exc
    fails = checks.clifford_failures(W)
    if a.emit_mf:
        emit(clifford.clifford_mf(dec).to_json(), a.emit_mf)
    emit({"ok": not fails, "failures": fails})
    return EXIT_FAIL if fails else EXIT_OK


# ------------------------------------------------------------ cohom

def cmd_cohom_mkl(a):
    t = interring.mkl(a.k, a.l)
    emit({"k": a.k, "l": a.l, "cohomology": {str(k): v for k, v in t.dims.items()}, "display": repr(t)})
    return EXIT_OK


def cmd_cohom_complex(a):
    obj = load_json(a.complex)
    try:
        src = [tuple(int(x) for x in t) for t in obj["source"]]
        tgt = [tuple(int(x) for x in t) for t in obj["target"]]
        sh = int(obj.get("shift", 0))
        if any(len(t) != 3 for t in src + tgt):
            raise ValueError("terms must be [k, l, multiplicity]")
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"{a.complex}: bad complex record: {exc}") from exc
    t = interring.two_term_complex(src, tgt, sh)
    emit({"cohomology": {str(k): v for k, v in t.dims.items()}, "exact": t.exact, "display": repr(t)})
    return EXIT_OK


# ------------------------------------------------------------ mukai

def _ns(a):
    obj = load_json(a.ns)
    gram = obj.get("gram") if isinstance(obj, dict) else obj
    try:
        return mukai.NSLattice(gram)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{a.ns}: {exc}") from exc


def _beta(a, ns):
    coords = parse_int_list(a.beta, "--beta") if a.beta else [0] * ns.rho
    if len(coords) != ns.rho:
        raise InputError(f"--beta needs {ns.rho} coordinates")
    try:
        return mukai.BetaField(coords)
    except ValueError as exc:
        raise InputError(f"--beta: {exc}") from exc


def _mukai_vector(a, ns):
    xs = parse_int_list(a.v, "--v")
    if len(xs) != ns.rho + 2:
        raise InputError(f"--v needs {ns.rho + 2} entries: v0, {ns.rho} NS coordinates, v2")
    return mukai.vector(ns, xs[0], xs[1:-1], xs[-1], a.frame)


def _frak(a):
    ns = _ns(a)
    beta = _beta(a, ns)
    v = _mukai_vector(a, ns)
    if v.frame == mukai.B_FRAME:
        v = mukai.to_frak_frame(v, beta)
    return v


def cmd_mukai_zg(a):
    v = _frak(a)
    emit({"frak_vector": [checks.show(x) for x in v.astuple()], "z": checks.show(mukai.z_gepner_k3(v))})
    return EXIT_OK


def cmd_mukai_mu(a):
    mu = mukai.slope_mu(_frak(a))
    emit({"mu": "inf" if mu == mukai.INF else checks.show(mu)})
    return EXIT_OK


def cmd_mukai_integrality(a):
    ns = _ns(a)
    beta = _beta(a, ns)
    a.frame = mukai.B_FRAME
    xi = _mukai_vector(a, ns)
    try:
        r = mukai.integrality_report(xi, beta)
    except ValueError as exc:
        msg = str(exc)
        if "even" in msg:
            msg += " (the rank of an alpha-twisted sheaf is even when alpha is nontrivial)"
        raise InputError(msg) from exc
    emit({"ok": r.ok, "checks": r.checks, "z": checks.show(r.z), "frak_vector": [checks.show(x) for x in r.v_frak.astuple()]})
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_mukai_exclude(a):
    ns = _ns(a)
    try:
        res = mukai.spherical_exclusion(ns)
    except ArithmeticError as exc:
        raise InputError(str(exc)) from exc
    emit({
        "result": "NONE" if res.witness is None else "WITNESS",
        "witness": None if res.witness is None else [checks.show(x) for x in res.witness],
        "chain": res.chain,
    })
    return EXIT_OK


# ------------------------------------------------------------ demo

def cmd_demo(a):
    if not a.all and not a.only:
        raise InputError("demo needs --all or --only NAME")
    names = {c.name for c in checks.CHECKS}
    if a.only and not set(a.only) <= names:
        raise InputError(f"unknown checks {sorted(set(a.only) - names)}")
    results = checks.run_all(a.seed, None if a.all else set(a.only))
    rep = checks.report(results, a.seed, a.precision, a.timings)
    emit(rep, a.output)
    for r in results:
        sys.stderr.write(f"{r.status.upper():4} {r.name}  {r.anchor}\n")
    sys.stderr.write(f"seed {a.seed}: {rep['summary']['passed']}/{rep['summary']['total']} passed\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ------------------------------------------------------------ parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(json.dumps({"error": f"usage: {message}"}) + "\n")
        sys.exit(EXIT_INPUT)


def build_parser():
    p = _Parser(prog="gepner", description="Exact checks for Gepner-type stability computations.")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    mf = sub.add_parser("mf", help="graded matrix factorizations").add_subparsers(dest="cmd", required=True)
    s = mf.add_parser("verify")
    s.add_argument("mf")
    s.add_argument("--w", required=True)
    s.set_defaults(fn=cmd_mf_verify)
    s = mf.add_parser("zg")
    s.add_argument("mf")
    s.set_defaults(fn=cmd_mf_zg)
    s = mf.add_parser("chern")
    s.add_argument("mf")
    s.add_argument("--j", type=int)
    s.add_argument("--ch0", action="store_true")
    s.add_argument("--w", help="potential for the Milnor ring (default: read off the factorization)")
    s.set_defaults(fn=cmd_mf_chern)
    s = mf.add_parser("koszul")
    s.add_argument("--w", required=True)
    s.add_argument("--pairs", required=True)
    s.add_argument("--offset", type=int, default=0)
    s.add_argument("--odd-first", action="store_true", help="put the odd part in P0")
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_mf_koszul)
    s = mf.add_parser("point")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--w", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_mf_point)

    lat = sub.add_parser("lattice", help="numerical lattices").add_subparsers(dest="cmd", required=True)
    for name, fn in (("eigen", cmd_lattice_eigen), ("act", cmd_lattice_act)):
        s = lat.add_parser(name)
        s.add_argument("--dataset", required=True, choices=["v-b012", "cubic-surface", "cubic-threefold"])
        s.add_argument("--auto", required=True)
        if name == "eigen":
            s.add_argument("--lambda", dest="lam", default="omega")
        else:
            s.add_argument("--power", type=int, default=1)
        s.set_defaults(fn=fn)

    c = sub.add_parser("clifford", help="cubic fourfolds containing a plane").add_subparsers(dest="cmd", required=True)
    s = c.add_parser("check")
    s.add_argument("--cubic", required=True)
    s.add_argument("--emit-mf")
    s.set_defaults(fn=cmd_clifford_check)

    co = sub.add_parser("cohom", help="cohomology on the blown-up P^5").add_subparsers(dest="cmd", required=True)
    s = co.add_parser("mkl")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-l", type=int, required=True)
    s.set_defaults(fn=cmd_cohom_mkl)
    s = co.add_parser("complex")
    s.add_argument("complex")
    s.set_defaults(fn=cmd_cohom_complex)

    mu = sub.add_parser("mukai", help="twisted Mukai vectors").add_subparsers(dest="cmd", required=True)
    for name, fn in (("zg", cmd_mukai_zg), ("mu", cmd_mukai_mu), ("integrality", cmd_mukai_integrality)):
        s = mu.add_parser(name)
        s.add_argument("--v", required=True, help="v0,v1 coordinates...,v2")
        s.add_argument("--beta", default="")
        s.add_argument("--ns", required=True)
        if name != "integrality":
            s.add_argument("--frame", choices=[mukai.B_FRAME, mukai.FRAK_FRAME], default=mukai.B_FRAME)
        s.set_defaults(fn=fn)
    s = mu.add_parser("exclude")
    s.add_argument("--ns", required=True)
    s.set_defaults(fn=cmd_mukai_exclude)

    s = sub.add_parser("demo", help="run the acceptance suite")
    s.add_argument("--all", action="store_true")
    s.add_argument("--only", nargs="+")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.add_argument("--precision", type=int, help="bits for numeric display of exact values")
    s.add_argument("--timings", action="store_true", help="include elapsed seconds (breaks byte-identity)")
    s.set_defaults(fn=cmd_demo)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``firlab [options] <command> args``.

Exit codes: 0 success, 1 a checked identity failed, 2 usage or parse error.
"""
import argparse
import json
import sys

from . import algset as A
from . import bezout_series as B
from . import ore_poly as O
from . import similarity as S
from . import suite as SU
from . import wedderburn as W
from .errors import FirlabError, InvariantViolation, NotComputable
from .twisted_field import parse_field

SCHEMA = "firlab-report/1"


def _common_options(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--field", default=d("gf(2,2)"), help="coefficient field, e.g. gf(2,2) or funfield(2)")
    parser.add_argument("--max-degree", type=int, default=d(4), help="degree cap for enumerations")
    parser.add_argument("--bound", type=int, default=d(None), help="search bound for bounded searches")
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--samples", type=int, default=d(100))
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument("--jobs", type=int, default=d(1))


def build_parser():
    parser = argparse.ArgumentParser(prog="firlab", description=__doc__.splitlines()[0])
    _common_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *args, help=None):
        p = sub.add_parser(name, help=help)
        _common_options(p, suppress=True)
        for a in args:
            p.add_argument(a)
        return p

    add("mul", "f", "g", help="product f*g")
    add("divr", "f", "g", help="f = q*g + r")
    add("divl", "f", "g", help="f = g*q + r")
    add("rgcd", "a", "b", help="monic d with Rd = Ra + Rb")
    add("llcm", "a", "b", help="monic generator of Ra ∩ Rb")
    add("conj", "a", "b", help="a^b with Ra ∩ Rb = R a^b b")
    add("factor", "f", help="atomic factorization")
    add("atoms", "degree", help="monic atoms of a degree")
    add("similar", "f", "g", help="similarity test with witness")
    add("eigenring", "p", help="End(R/Rp) for an atom p")
    add("lambda-dim", "f", "p", help="dimension of ker(x -> f x mod Rp) over C(p)")
    add("vset", "f", help="atoms right-dividing f")
    for name in ("rank", "basis", "closure", "classes"):
        p = add(name, help=f"{name} of a set of polynomials")
        p.add_argument("elements", nargs="*")
    add("wedderburn", "f", help="full-reducibility report")
    p = add("wedderburn-suite", help="report over all monic polynomials up to a degree")
    p.add_argument("--degree", type=int, default=3)
    add("product-check", "a", "b", help="is a*b fully reducible, every way")
    p = add("check-rank-theorems", "delta", "gamma", help="rank identities for two comma-separated atom sets")
    p.add_argument("--product", nargs=2, metavar=("B", "A"), help="also check rk V(BA)")
    add("series-sum", "a", "b", help="sum of principal ideals aR + bR")
    add("series-intersect", "a", "b", help="intersection aR ∩ bR")
    add("series-witness", "n", help="x = 2^n (x/2^n)")
    p = add("suite", help="seeded batch of law checks")
    p.add_argument("--fields", default=";".join(SU.DEFAULT_FIELDS),
                   help="semicolon-separated field descriptors")
    return parser


# ---------------------------------------------------------------------------
# command bodies; each returns (text lines, json payload, ok flag)


def _polys(F, texts):
    return [O.parse_poly(F, t) for t in texts]


def _set(F, text):
    parts = [s for s in text.split(",") if s.strip()] if text.strip() else []
    return A.AlgebraicSet(_polys(F, parts), F)


def cmd_mul(F, args):
    f, g = _polys(F, [args.f, args.g])
    r = O.mul(f, g)
    return [str(r)], {"product": str(r)}, True


def cmd_divr(F, args):
    f, g = _polys(F, [args.f, args.g])
    q, r = O.right_divmod(f, g)
    return [f"q = {q}", f"r = {r}"], {"quotient": str(q), "remainder": str(r)}, True


def cmd_divl(F, args):
    f, g = _polys(F, [args.f, args.g])
    try:
        q, r = O.left_divmod(f, g)
    except NotComputable as exc:
        return [f"not computable: {exc}"], {"computable": False, "reason": str(exc)}, True
    return [f"q = {q}", f"r = {r}"], {"computable": True, "quotient": str(q), "remainder": str(r)}, True


def cmd_rgcd(F, args):
    a, b = _polys(F, [args.a, args.b])
    d, u, v = O.rgcd(a, b)
    return [str(d), f"  = ({u})*({a}) + ({v})*({b})"], {"gcd": str(d), "u": str(u), "v": str(v)}, True


def cmd_llcm(F, args):
    a, b = _polys(F, [args.a, args.b])
    m = O.llcm(a, b)
    return [str(m)], {"llcm": str(m)}, True


def cmd_conj(F, args):
    a, b = _polys(F, [args.a, args.b])
    c = O.conj(a, b)
    return [str(c)], {"conjugate": str(c)}, True


def cmd_factor(F, args):
    (f,) = _polys(F, [args.f])
    fac = O.factor_atomic(f)
    atoms = [str(p) for p in fac.atoms]
    text = F.format(fac.unit) + "".join(f"*({p})" for p in atoms)
    return [text], {"unit": F.format(fac.unit), "atoms": atoms, "length": len(atoms)}, True


def cmd_atoms(F, args):
    d = int(args.degree)
    if d > args.max_degree:
        raise ValueError(f"degree {d} exceeds --max-degree {args.max_degree}")
    atoms = [str(p) for p in O.enumerate_atoms(F, d)]
    return atoms, {"degree": d, "count": len(atoms), "atoms": atoms}, True


def cmd_similar(F, args):
    f, g = _polys(F, [args.f, args.g])
    r = S.similarity_witness(f, g)
    w = None if r.witness is None else str(r.witness)
    line = f"similar, witness u = {w}" if r.similar else "not similar"
    return [line], {"similar": r.similar, "witness": w}, True


def cmd_eigenring(F, args):
    (p,) = _polys(F, [args.p])
    E = S.eigenring(p)
    ok, _ = E.schur_check()
    payload = {
        "atom": str(p),
        "dimension": E.dim,
        "order": E.order,
        "basis": [str(u) for u in E.basis],
        "table": E.table.tolist(),
        "identity": E.identity.tolist(),
        "commutative": E.is_commutative(),
        "division_ring": ok,
    }
    lines = [
        f"C({p}): dimension {E.dim} over F_{F.p} ({E.order} elements)",
        "basis: " + ", ".join(payload["basis"]),
        f"commutative: {payload['commutative']}, every nonzero element invertible: {ok}",
    ]
    return lines, payload, ok


def cmd_lambda_dim(F, args):
    f, p = _polys(F, [args.f, args.p])
    k = len(S.lambda_kernel(f, p))
    c = S.eigenring(p, check=False).dim
    d = S.dim_over_eigenring(f, p)
    return (
        [f"dim over C(p) = {d} (kernel {k} / eigenring {c} over F_{F.p})"],
        {"kernel_dim": k, "eigenring_dim": c, "dim_over_eigenring": d},
        True,
    )


def cmd_vset(F, args):
    (f,) = _polys(F, [args.f])
    V = A.v_set(f)
    return V.to_strings(), {"vset": V.to_strings(), "rank": A.rank(V)}, True


def cmd_rank(F, args):
    D = A.AlgebraicSet(_polys(F, args.elements), F)
    r = A.rank(D)
    return [str(r)], {"rank": r}, True


def cmd_basis(F, args):
    D = A.AlgebraicSet(_polys(F, args.elements), F)
    Bs = A.basis(D)
    out = [str(e) for e in Bs]
    return out, {"basis": out, "independent": A.is_independent(D)}, True


def cmd_closure(F, args):
    D = A.AlgebraicSet(_polys(F, args.elements), F)
    C = A.closure(D)
    return C.to_strings(), {"closure": C.to_strings()}, True


def cmd_classes(F, args):
    D = A.AlgebraicSet(_polys(F, args.elements), F)
    dec = A.class_decompose(D)
    classes = [c.to_strings() for c in dec.classes]
    lines = [f"{r}: {c} (rank {k})" for r, c, k in zip(dec.representatives, classes, dec.ranks)]
    payload = {
        "representatives": [str(r) for r in dec.representatives],
        "classes": classes,
        "ranks": list(dec.ranks),
        "rank": dec.total_rank,
    }
    return lines, payload, dec.consistent()


def cmd_wedderburn(F, args):
    (f,) = _polys(F, [args.f])
    rep = W.wedderburn_report(f)
    payload = rep.as_dict()
    lines = [f"{f}: fully reducible = {rep.fully_reducible}"]
    if rep.fully_reducible and f.degree > 0:
        dec = [str(p) for p in W.minimal_decomposition(f)]
        payload["decomposition"] = dec
        lines.append("Rf = ∩ R p over p in {" + ", ".join(dec) + "}")
        if F.endo_bijective:
            right = [str(p) for p in W.right_decomposition(f)]
            payload["right_decomposition"] = right
            lines.append("fR = ∩ p R over p in {" + ", ".join(right) + "}")
    for k, v in sorted(rep.verdicts.items()):
        lines.append(f"  ({k}) {v}")
    lines.append(f"consistent: {rep.consistent}")
    return lines, payload, rep.consistent


def cmd_wedderburn_suite(F, args):
    total = fr = bad = 0
    failures = []
    for d in range(0, args.degree + 1):
        for f in O.monic_polys(F, d):
            rep = W.wedderburn_report(f)
            total += 1
            fr += rep.fully_reducible
            if not rep.consistent:
                bad += 1
                failures.append(rep.as_dict())
            elif rep.fully_reducible and d > 0 and F.endo_bijective:
                W.right_decomposition(f)
    payload = {"degree": args.degree, "polynomials": total, "fully_reducible": fr,
               "inconsistent": bad, "failures": failures[:5]}
    lines = [f"{total} monic polynomials of degree <= {args.degree}: {fr} fully reducible, {bad} inconsistent"]
    return lines, payload, bad == 0


def cmd_product_check(F, args):
    a, b = _polys(F, [args.a, args.b])
    rep = W.product_check(a, b, args.bound)
    payload = rep.as_dict()
    lines = [f"({a})*({b}): bound {rep.bound}"]
    for k in sorted(rep.verdicts):
        tag = "" if rep.conclusive[k] else "  (not found within bound)"
        lines.append(f"  ({k}) {rep.verdicts[k]}{tag}")
    lines.append(f"consistent: {rep.consistent}")
    return lines, payload, rep.consistent


def cmd_check_rank_theorems(F, args):
    D, G = _set(F, args.delta), _set(F, args.gamma)
    idents = [i.as_dict() for i in A.rank_theorems_check(D, G)]
    if args.product:
        b, a = _polys(F, args.product)
        idents.append(W.product_rank_check(b, a).as_dict())
    ok = all(i["equal"] for i in idents)
    lines = [f"{i['name']}: {i['lhs']} vs {i['rhs']} -> {'ok' if i['equal'] else 'VIOLATED'}" for i in idents]
    return lines, {"identities": idents, "all_equal": ok}, ok


def _series_ideal(text):
    return B.ideal_of(B.parse_series(text))


def cmd_series_sum(F, args):
    I = B.ideal_sum(_series_ideal(args.a), _series_ideal(args.b))
    return [str(I)], {"ideal": str(I), "order": I.m, "coefficient": str(I.a)}, True


def cmd_series_intersect(F, args):
    I = B.ideal_intersection(_series_ideal(args.a), _series_ideal(args.b))
    return [str(I)], {"ideal": str(I), "order": I.m, "coefficient": str(I.a)}, True


def cmd_series_witness(F, args):
    n = int(args.n)
    chain = B.witness_chain(n)
    factor, cofactor = B.nonatomic_witness(n)
    return (
        [f"x = ({factor}) * ({cofactor})", f"chain of {len(chain)} factors, {n} of them the atom 2"],
        {"factor": str(factor), "cofactor": str(cofactor), "atoms": n, "reconstructs": True},
        True,
    )


def cmd_suite(F, args):
    fields = [s.strip() for s in args.fields.split(";") if s.strip()]
    rep = SU.run_suite(fields, args.seed, args.samples, args.max_degree, args.jobs)
    lines = [
        f"{c['name']:<18} {c['field']:<10} {c['instances']:>5} instances, {c['violations']} violations"
        for c in rep["checks"]
    ]
    lines.append(f"total violations: {rep['violations']}")
    return lines, rep, rep["violations"] == 0


COMMANDS = {
    "mul": cmd_mul,
    "divr": cmd_divr,
    "divl": cmd_divl,
    "rgcd": cmd_rgcd,
    "llcm": cmd_llcm,
    "conj": cmd_conj,
    "factor": cmd_factor,
    "atoms": cmd_atoms,
    "similar": cmd_similar,
    "eigenring": cmd_eigenring,
    "lambda-dim": cmd_lambda_dim,
    "vset": cmd_vset,
    "rank": cmd_rank,
    "basis": cmd_basis,
    "closure": cmd_closure,
    "classes": cmd_classes,
    "wedderburn": cmd_wedderburn,
    "wedderburn-suite": cmd_wedderburn_suite,
    "product-check": cmd_product_check,
    "check-rank-theorems": cmd_check_rank_theorems,
    "series-sum": cmd_series_sum,
    "series-intersect": cmd_series_intersect,
    "series-witness": cmd_series_witness,
    "suite": cmd_suite,
}


def run_command(argv, out=None, err=None):
    """Run one CLI invocation; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        F = parse_field(args.field)
        lines, payload, ok = COMMANDS[args.command](F, args)
    except InvariantViolation as exc:
        _emit_error(args, out, err, "invariant-violation", str(exc))
        return 1
    except (FirlabError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        _emit_error(args, out, err, "usage", str(exc))
        return 2
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command, "field": F.descriptor(), "ok": ok, "result": payload}
        out.write(json.dumps(doc, sort_keys=True, indent=2, default=str) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
    return 0 if ok else 1


def _emit_error(args, out, err, kind, msg):
    if getattr(args, "json", False):
        doc = {"schema": SCHEMA, "command": args.command, "ok": False, "error": {"kind": kind, "message": msg}}
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    err.write(f"firlab: error: {msg}\n")


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":  # pragma: no cover
    main()

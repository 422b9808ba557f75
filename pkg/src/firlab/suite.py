"""Seeded batch checks of the ring-theoretic laws over small finite fields.

Each check draws its own instances from a generator seeded by (seed, check
name, field), so results do not depend on scheduling and reruns are
byte-identical.  Violations are collected, never raised.
"""
import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import algset as A
from . import ore_poly as O
from . import similarity as S
from . import wedderburn as W
from .twisted_field import parse_field

DEFAULT_FIELDS = ("gf(2,2)", "gf(2,3)")


@dataclass
class CheckResult:
    name: str
    field: str
    instances: int = 0
    violations: int = 0
    examples: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def fail(self, detail):
        self.violations += 1
        if len(self.examples) < 3:
            self.examples.append(detail)

    def as_dict(self):
        return {
            "name": self.name,
            "field": self.field,
            "instances": self.instances,
            "violations": self.violations,
            "examples": self.examples,
            "notes": self.notes,
        }


def rng_for(seed, name, field_desc):
    digest = hashlib.sha256(f"{seed}|{name}|{field_desc}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "little"))


def random_nonzero(F, rng, max_degree):
    d = int(rng.integers(0, max_degree + 1))
    return O.random_poly(F, rng, d)


def random_atom(F, rng, max_degree):
    d = int(rng.integers(1, max_degree + 1))
    atoms = O.enumerate_atoms(F, d)
    return atoms[int(rng.integers(len(atoms)))]


# ---------------------------------------------------------------------------
# individual checks


def check_division(F, rng, samples, max_degree):
    res = CheckResult("division", F.descriptor())
    for _ in range(samples):
        f = random_nonzero(F, rng, 2 * max_degree)
        g = random_nonzero(F, rng, max_degree)
        q, r = O.right_divmod(f, g)
        res.instances += 1
        if O.mul(q, g) + r != f or r.degree >= g.degree:
            res.fail({"f": str(f), "g": str(g), "side": "right"})
        q, r = O.left_divmod(f, g)
        if O.mul(g, q) + r != f or r.degree >= g.degree:
            res.fail({"f": str(f), "g": str(g), "side": "left"})
    return res


def check_length_laws(F, rng, samples, max_degree):
    res = CheckResult("length-laws", F.descriptor())
    for _ in range(samples):
        a = O.random_poly(F, rng, int(rng.integers(1, max_degree + 1)))
        b = O.random_poly(F, rng, int(rng.integers(1, max_degree + 1)))
        la, lb = O.length(a), O.length(b)
        res.instances += 1
        lab = O.length(O.mul(a, b))
        if lab != la + lb:
            res.fail({"a": str(a), "b": str(b), "law": "product", "lhs": lab, "rhs": la + lb})
        m = O.llcm(a, b)
        d = O.rgcd(a, b)[0]
        lhs = O.length(m) + O.length(d)
        if lhs != la + lb:
            res.fail({"a": str(a), "b": str(b), "law": "gcd-lcm", "lhs": lhs, "rhs": la + lb})
        c = O.conj(a, b)
        if O.length(c) > la:
            res.fail({"a": str(a), "b": str(b), "law": "conjugate"})
    return res


def check_similarity(F, rng, samples, max_degree):
    res = CheckResult("similarity", F.descriptor())
    for _ in range(samples):
        p = random_atom(F, rng, max_degree)
        u = O.random_poly(F, rng, int(rng.integers(1, max_degree + 1)))
        if O.right_divides(p, u):
            continue
        q = O.conj(p, u)
        res.instances += 1
        if not S.is_similar(p, q) or O.length(p) != O.length(q):
            res.fail({"p": str(p), "u": str(u), "conj": str(q)})
        if not O.is_atom(q):
            res.fail({"p": str(p), "u": str(u), "conj": str(q), "law": "atom"})
    return res


def check_schur(F, rng, samples, max_degree):
    res = CheckResult("schur", F.descriptor())
    for d in range(1, max_degree + 1):
        for p in O.enumerate_atoms(F, d):
            E = S.eigenring(p, check=False)
            ok, bad = E.schur_check()
            res.instances += 1
            if not ok:
                res.fail({"atom": str(p), "element": bad.tolist()})
    return res


def check_matroid(F, rng, samples, max_degree):
    res = CheckResult("matroid", F.descriptor())
    for _ in range(samples):
        k = int(rng.integers(0, 4))
        delta = A.AlgebraicSet([random_atom(F, rng, max_degree) for _ in range(k)], F)
        a, b = random_atom(F, rng, max_degree), random_atom(F, rng, max_degree)
        res.instances += 1
        # exchange
        if A.is_dependent(b, delta.union(A.AlgebraicSet([a], F))) and not A.is_dependent(b, delta):
            if not A.is_dependent(a, delta.union(A.AlgebraicSet([b], F))):
                res.fail({"law": "exchange", "delta": delta.to_strings(), "a": str(a), "b": str(b)})
        # transitivity: p depends on delta, each member depends on delta2
        delta2 = A.AlgebraicSet([random_atom(F, rng, max_degree) for _ in range(3)], F)
        if all(A.is_dependent(x, delta2) for x in delta) and A.is_dependent(a, delta):
            if not A.is_dependent(a, delta2):
                res.fail({"law": "transitivity", "a": str(a)})
        # the two forms of dependence agree
        if A.is_dependent(a, delta) != A.is_dependent_by_length(a, delta):
            res.fail({"law": "dependence-forms", "a": str(a)})
    return res


def check_dimension_formula(F, rng, samples, max_degree):
    res = CheckResult("dimension-formula", F.descriptor())
    for _ in range(samples):
        f = O.random_poly(F, rng, int(rng.integers(1, max_degree + 1)), monic=True)
        rd = A.rank_decomposition(f)
        res.instances += 1
        if not rd.equal:
            res.fail({"f": str(f), "rank": rd.rank, "total": rd.total})
    return res


def check_wedderburn(F, rng, samples, max_degree):
    res = CheckResult("wedderburn", F.descriptor())
    for _ in range(samples):
        f = O.random_poly(F, rng, int(rng.integers(1, max_degree + 1)), monic=True)
        rep = W.wedderburn_report(f)
        res.instances += 1
        if not rep.consistent:
            res.fail(rep.as_dict())
        elif rep.fully_reducible and F.endo_bijective:
            W.right_decomposition(f)
    return res


def check_rank_theorems(F, rng, samples, max_degree):
    res = CheckResult("rank-theorems", F.descriptor())
    for _ in range(samples):
        k1, k2 = int(rng.integers(0, 3)), int(rng.integers(0, 3))
        dlt = A.AlgebraicSet([random_atom(F, rng, 2) for _ in range(k1)], F)
        gam = A.AlgebraicSet([random_atom(F, rng, 2) for _ in range(k2)], F)
        res.instances += 1
        for ident in A.rank_theorems_check(dlt, gam):
            if not ident.equal:
                res.fail(ident.as_dict())
        a = O.random_poly(F, rng, int(rng.integers(1, 3)), monic=True)
        b = O.random_poly(F, rng, int(rng.integers(1, 3)), monic=True)
        rep = W.product_rank_check(b, a)
        if not rep.equal:
            res.fail(rep.as_dict())
    return res


CHECKS = {
    "division": check_division,
    "length-laws": check_length_laws,
    "similarity": check_similarity,
    "schur": check_schur,
    "matroid": check_matroid,
    "dimension-formula": check_dimension_formula,
    "wedderburn": check_wedderburn,
    "rank-theorems": check_rank_theorems,
}

# degree caps per check (kept small so the default suite runs in seconds)
CHECK_DEGREES = {
    "division": 4,
    "length-laws": 4,
    "similarity": 2,
    "schur": 2,
    "matroid": 2,
    "dimension-formula": 4,
    "wedderburn": 3,
    "rank-theorems": 2,
}


def _run_one(job):
    name, desc, seed, samples, max_degree = job
    F = parse_field(desc)
    rng = rng_for(seed, name, desc)
    deg = min(CHECK_DEGREES[name], max_degree)
    return CHECKS[name](F, rng, samples, deg).as_dict()


def run_suite(fields=DEFAULT_FIELDS, seed=0, samples=100, max_degree=4, jobs=1, checks=None):
    names = list(checks or CHECKS)
    jobs_list = [(n, f, seed, samples, max_degree) for f in fields for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, jobs_list))
    else:
        results = [_run_one(j) for j in jobs_list]
    return {
        "seed": seed,
        "samples": samples,
        "fields": list(fields),
        "checks": results,
        "violations": sum(r["violations"] for r in results),
    }

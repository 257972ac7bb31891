"""Acceptance criteria as runnable checks on the built-in fixtures.

Each criterion function returns a :class:`CriterionResult`.  Comparisons are
exact equalities of rationals and linear combinations; nothing here uses a
tolerance.  ``run_all`` backs the ``selftest`` CLI subcommand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import basis_vector
from .descendent import PostLieExtension, build_descendent, check_b_homomorphism, grouplike_group, post_lie_dot, star
from .groups import (check_rb_group, descendent_group, endomorphisms, enumerate_rb_group, factorization,
                     inverse_map, klein_four, cyclic, opposite_group, s3_factorization, split_rb_group,
                     symmetric3, tilde_group, GroupMap)
from .hopf import EnvelopingAlgebra, GroupAlgebra
from .lie import companion, descendent_bracket, example1_operator, sl2, LieOperator
from .operators import (antipode_rb, check_coalgebra_map, check_rb_hopf, extend_group_rb, extend_lie_rb,
                        restrict_to_grouplikes, restrict_to_primitives, sl2_closed_form, tilde_hopf)

UEG_DEGREE = 3
COALGEBRA_DEGREE = 4
ORACLE_DEGREE = 5


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    seconds: float = 0.0
    details: list = field(default_factory=list)
    limit: float | None = None

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        extra = f" (limit {self.limit:g} s)" if self.limit else ""
        return f"[{mark}] criterion {self.number}: {self.title} [{self.seconds:.2f} s{extra}]"


class Fixtures:
    """Built-in sl2 and S3 setups shared by the criteria."""

    def __init__(self):
        self.L = sl2()
        self.R = example1_operator()
        self.U = EnvelopingAlgebra(self.L, "sl2")
        self.G = symmetric3()
        self.FG = GroupAlgebra(self.G, "S3")
        self.A3, self.C2 = s3_factorization(self.G)
        self.split_map = split_rb_group(self.G, self.A3, self.C2)
        self.ueg_sample = self.U.basis(UEG_DEGREE)
        self.group_sample = self.FG.basis()
        self.ex1 = extend_lie_rb(self.L, self.R, self.U)
        self.ueg_antipode = antipode_rb(self.U)
        self.group_antipode = antipode_rb(self.FG)
        self.group_split = extend_group_rb(self.G, self.split_map, self.FG)

    def criterion2_operators(self):
        """``(label, operator, sample, lie_restriction)`` for every operator of criterion 2."""
        return [
            ("sl2 reference operator on U(sl2)", self.ex1, self.ueg_sample, self.R),
            ("antipode on U(sl2)", self.ueg_antipode, self.ueg_sample, -LieOperator.identity(3)),
            ("antipode on F[S3]", self.group_antipode, self.group_sample, None),
            ("S3 split operator on F[S3]", self.group_split, self.group_sample, None),
        ]


@lru_cache(maxsize=1)
def fixtures() -> Fixtures:
    return Fixtures()


def _timed(number, title, limit=None):
    def wrap(fn):
        def run() -> CriterionResult:
            t = time.perf_counter()
            res = CriterionResult(number, title, False, limit=limit)
            try:
                res.ok = bool(fn(res))
            except Exception as exc:  # a crash is a failed criterion, reported with its message
                res.ok = False
                res.details.append(f"raised {type(exc).__name__}: {exc}")
            res.seconds = time.perf_counter() - t
            if limit is not None and res.seconds >= limit:
                res.ok = False
                res.details.append(f"runtime {res.seconds:.2f} s exceeds {limit} s")
            return res
        run.__name__ = fn.__name__
        run.number = number
        return run
    return wrap


@_timed(1, "sl2 extension equals the closed form on all 56 monomials of degree <= 5", limit=5)
def criterion_1(res):
    U = EnvelopingAlgebra(sl2(), "sl2")
    B = extend_lie_rb(U.lie, example1_operator(), U)
    monomials = U.basis(ORACLE_DEGREE)
    res.details.append(f"{len(monomials)} monomials")
    bad = [m for m in monomials if B.on_basis(m) != sl2_closed_form(*m, U)]
    res.details.extend(f"mismatch at {U.label_str(m)}" for m in bad)
    return len(monomials) == 56 and not bad


@_timed(2, "Rota-Baxter identity for the sl2 reference operator, antipodes and S3 split operator", limit=30)
def criterion_2(res):
    ok = True
    for label, B, sample, _ in fixtures().criterion2_operators():
        report = check_rb_hopf(B, sample)
        res.details.append(f"{label}: {report.checks[0].checked} pairs, {len(report)} violations")
        ok &= report.ok
    return ok


@_timed(3, "extended sl2 reference operator is a coalgebra map in degree <= 4")
def criterion_3(res):
    f = fixtures()
    report = check_coalgebra_map(f.ex1, f.U.basis(COALGEBRA_DEGREE))
    res.details.append(f"{report.checks[0].checked} monomials, {len(report)} violations")
    return report.ok


@_timed(4, "tilde operators are Rota-Baxter, tilde is an involution, restricts to -R-id")
def criterion_4(res):
    f = fixtures()
    ok = True
    for label, B, sample, R in f.criterion2_operators():
        T = tilde_hopf(B)
        rb = check_rb_hopf(T, sample)
        labels = set(sample) | set(B.evaluated()) | set(T.evaluated())
        involution = tilde_hopf(T).agrees_with(B, labels)
        if R is not None:
            restricted = restrict_to_primitives(T) == companion(R)
        else:
            restricted = restrict_to_grouplikes(T) == tilde_group(f.G, restrict_to_grouplikes(B))
        res.details.append(f"{label}: identity {rb.ok}, involution on {len(labels)} labels {involution}, "
                           f"restriction {restricted}")
        ok &= rb.ok and involution and restricted
    return ok


@_timed(5, "descendent Hopf algebras satisfy all Hopf axioms and the coproduct/counit identities")
def criterion_5(res):
    ok = True
    for label, B, sample, _ in fixtures().criterion2_operators():
        D = build_descendent(B.carrier, B, sample, check=False)
        res.details.append(f"{label}: Hopf axioms {D.hopf_report.ok} ({len(D.hopf_report)} violations), "
                           f"identities {D.identity_report.ok}")
        ok &= D.hopf_report.ok and D.identity_report.ok
    return ok


@_timed(6, "post-Lie product from B equals the recursive extension in degree <= 3")
def criterion_6(res):
    f = fixtures()
    ext = PostLieExtension(f.U, f.R)
    pairs = [(a, b) for a in f.ueg_sample for b in f.ueg_sample]
    bad = [(a, b) for a, b in pairs
           if post_lie_dot(f.ex1, basis_vector(a), basis_vector(b)) != ext.dot_basis(a, b)]
    res.details.append(f"{len(pairs)} pairs, {len(bad)} mismatches")
    return not bad


@_timed(7, "B is multiplicative from H_B to H, B S_B = S B, and B is Rota-Baxter on H_B")
def criterion_7(res):
    ok = True
    for label, B, sample, _ in fixtures().criterion2_operators():
        rb_sample = [a for a in sample if not isinstance(a, tuple) or sum(a) <= 2]
        report = check_b_homomorphism(B, sample, rb_sample=rb_sample)
        res.details.append(f"{label}: " + ", ".join(f"{c.axiom}: {c.ok}" for c in report.checks))
        ok &= report.ok
    return ok


@_timed(8, "group enumeration counts and S3 membership", limit=60)
def criterion_8(res):
    C2, V4, G = cyclic(2), klein_four(), fixtures().G
    ops_c2, ops_v4 = enumerate_rb_group(C2), enumerate_rb_group(V4)
    ops_s3 = enumerate_rb_group(G)
    A3, C = fixtures().A3, fixtures().C2
    fact = factorization(G, A3, C)
    mirror = GroupMap([G.inv(fact[g][0]) for g in G.elements()])
    res.details.append(f"C2: {len(ops_c2)}, V4: {len(ops_v4)}, S3: {len(ops_s3)}")
    return (len(ops_c2) == 2 and len(ops_v4) == 16
            and ops_c2 == endomorphisms(C2) and ops_v4 == endomorphisms(V4)
            and fixtures().split_map in ops_s3 and inverse_map(G) in ops_s3
            and not check_rb_group(G, mirror).ok)


@_timed(9, "restriction after extension is the identity for groups and Lie algebras")
def criterion_9(res):
    f = fixtures()
    ops = enumerate_rb_group(f.G)
    bad = [B for B in ops if restrict_to_grouplikes(extend_group_rb(f.G, B, f.FG)) != B]
    lie_ok = restrict_to_primitives(extend_lie_rb(f.L, f.R, f.U)) == f.R
    res.details.append(f"{len(ops)} S3 operators, {len(bad)} failed round trips; Lie round trip {lie_ok}")
    return not bad and lie_ok


@_timed(10, "descendent groups, group-likes of descendent F[S3], star commutators of sl2")
def criterion_10(res):
    f = fixtures()
    G = f.G
    opp = descendent_group(G, inverse_map(G)).same_table(opposite_group(G))
    tables_ok = True
    for B in enumerate_rb_group(G):
        D = build_descendent(f.FG, extend_group_rb(G, B, f.FG))
        tables_ok &= grouplike_group(D).same_table(descendent_group(G, B))
    Ld = descendent_bracket(f.L, f.R)
    comm_ok = True
    for i in range(3):
        for j in range(3):
            xi, xj = f.U.gen(i), f.U.gen(j)
            lhs = star(f.ex1, xi, xj) - star(f.ex1, xj, xi)
            comm_ok &= lhs == f.U.from_lie(Ld.bracket_basis(i, j))
    h, x, y = (f.U.from_lie(f.L.basis_element(n)) for n in ("h", "x", "y"))
    named = (f.U.from_lie(Ld.bracket_basis(1, 2)) == y and not Ld.bracket_basis(0, 2))
    res.details.append(f"opposite {opp}, group-like tables {tables_ok}, commutators {comm_ok}, "
                       f"{{h,y}}=y and {{x,y}}=0 {named}")
    return opp and tables_ok and comm_ok and named


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(verbose: bool = False) -> list[CriterionResult]:
    return [c() for c in CRITERIA]

"""The descendent Hopf algebra of a Rota-Baxter operator and the post-Lie product on U(g).

Given a Rota-Baxter operator ``B`` on ``H``, the space ``H`` carries a second
cocommutative Hopf structure with the same coproduct and counit, product

    x * y = x(1) B(x(2)) y S(B(x(3)))

and antipode ``S_B(x) = S(B(x(1))) S(x(2)) B(x(3))``.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .algebra import Accumulator, LinComb, basis_vector, tensor
from .errors import AxiomViolation, SpecError
from .groups import FiniteGroup
from .hopf import EnvelopingAlgebra, GroupAlgebra, HopfAlgebra, verify_hopf_axioms
from .lie import LieOperator, post_lie_product
from .operators import HopfRBOperator, check_rb_hopf, s_b, star
from .report import Report

__all__ = [
    "star",
    "s_b",
    "DescendentHopf",
    "build_descendent",
    "check_descendent_identities",
    "check_b_homomorphism",
    "post_lie_dot",
    "PostLieExtension",
    "post_lie_dot_recursive",
    "grouplike_group",
]


class DescendentHopf(HopfAlgebra):
    """``H_B = (H, *, Δ, η, ε, S_B)``; products and antipodes are cached per basis label."""

    def __init__(self, base: HopfAlgebra, operator: HopfRBOperator):
        if operator.carrier is not base:
            raise SpecError("operator does not act on the given Hopf algebra")
        self.base = base
        self.operator = operator
        self.unit_label = base.unit_label
        self._mul = {}
        self._anti = {}
        self.hopf_report = None
        self.identity_report = None

    @property
    def name(self) -> str:
        return f"descendent({self.base.name})"

    def mul_basis(self, a, b):
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            r = self._mul[key] = star(self.operator, basis_vector(a), basis_vector(b))
        return r

    def comul_basis(self, a):
        return self.base.comul_basis(a)

    def comul3_basis(self, a):
        return self.base.comul3_basis(a)

    def counit_basis(self, a):
        return self.base.counit_basis(a)

    def antipode_basis(self, a):
        r = self._anti.get(a)
        if r is None:
            r = self._anti[a] = s_b(self.operator, basis_vector(a))
        return r

    def basis(self, max_degree=None):
        if max_degree is None:
            return self.base.basis()
        return self.base.basis(max_degree)

    def label_str(self, a):
        return self.base.label_str(a)


def check_descendent_identities(D: DescendentHopf, sample: Sequence) -> Report:
    """Coproduct and counit compatibility of ``*``, and ``B(x(1)) B(S_B(x(2))) = ε(x)1``."""
    H, B = D.base, D.operator
    report = Report(label_format=H.label_str)
    chk_d = report.check("Δ(x*y) = (x(1)*y(1))⊗(x(2)*y(2))")
    chk_e = report.check("ε(x*y) = ε(x)ε(y)")
    for a, b in product(sample, repeat=2):
        xy = D.mul_basis(a, b)
        acc = Accumulator()
        for (a1, a2), ca in H.comul_basis(a).items():
            for (b1, b2), cb in H.comul_basis(b).items():
                acc.add(tensor(D.mul_basis(a1, b1), D.mul_basis(a2, b2)), ca * cb)
        chk_d.record((a, b), H.comul(xy), acc.result())
        chk_e.record((a, b), H.counit(xy), H.counit_basis(a) * H.counit_basis(b))
    chk = report.check("B(x(1)) B(S_B(x(2))) = ε(x)1")
    for a in sample:
        acc = Accumulator()
        for (a1, a2), c in H.comul_basis(a).items():
            acc.add(H.mul(B.on_basis(a1), B(D.antipode_basis(a2))), c)
        chk.record((a,), acc.result(), H.unit(H.counit_basis(a)))
    return report


def build_descendent(H: HopfAlgebra, B: HopfRBOperator, sample: Sequence | None = None,
                     triple_sample: Sequence | None = None, check: bool = True) -> DescendentHopf:
    """Construct ``H_B`` and verify it on ``sample``.

    The Hopf axioms report and the compatibility identities report are kept
    on the result as ``hopf_report`` and ``identity_report``.  With
    ``check`` a failure in either, or of the Rota-Baxter identity for ``B``
    itself, raises :class:`AxiomViolation`.
    """
    D = DescendentHopf(H, B)
    if sample is None:
        return D
    if check:
        rb = check_rb_hopf(B, sample)
        if not rb.ok:
            raise AxiomViolation("operator fails the Rota-Baxter identity on the sample", rb)
    D.hopf_report = verify_hopf_axioms(D, sample, triple_sample)
    D.identity_report = check_descendent_identities(D, sample)
    if check and not (D.hopf_report.ok and D.identity_report.ok):
        bad = Report(D.hopf_report.checks + D.identity_report.checks, H.label_str)
        raise AxiomViolation(f"descendent structure fails {bad.failed()}", bad)
    return D


def check_b_homomorphism(B: HopfRBOperator, sample: Sequence, rb_sample: Sequence | None = None,
                         D: DescendentHopf | None = None) -> Report:
    """``B`` as a map ``H_B -> H``: multiplicative, intertwines the antipodes,
    and is itself Rota-Baxter on ``H_B``.

    The last check runs the Rota-Baxter identity with ``*`` as product and
    ``S_B`` as antipode, over ``rb_sample`` (defaults to ``sample``).
    """
    H = B.carrier
    D = D or DescendentHopf(H, B)
    report = Report(label_format=H.label_str)
    chk = report.check("B(x*y) = B(x)B(y)")
    for a, b in product(sample, repeat=2):
        chk.record((a, b), B(D.mul_basis(a, b)), H.mul(B.on_basis(a), B.on_basis(b)))
    chk = report.check("B(S_B(x)) = S(B(x))")
    for a in sample:
        chk.record((a,), B(D.antipode_basis(a)), H.antipode(B.on_basis(a)))
    on_descendent = HopfRBOperator(D, B.on_basis, B.provenance)
    inner = check_rb_hopf(on_descendent, sample if rb_sample is None else rb_sample)
    inner.checks[0].axiom = "B(x)*B(y) = B(x(1)*B(x(2))*y*S_B(B(x(3)))) in H_B"
    return report.extend(inner)


def grouplike_group(D: DescendentHopf) -> FiniteGroup:
    """Cayley table of the group elements of F[G] under ``*``."""
    if not isinstance(D.base, GroupAlgebra):
        raise SpecError("group-like table needs a group algebra")
    G = D.base.group
    table = []
    for g in G.elements():
        row = []
        for h in G.elements():
            v = D.mul_basis(g, h)
            if len(v) != 1 or v.coefficient(next(iter(v))) != 1:
                raise AxiomViolation(f"{G.names[g]} * {G.names[h]} is not a group element")
            row.append(next(iter(v)))
        table.append(row)
    return FiniteGroup.from_table(table, G.names)


# post-Lie product on U(g)

def post_lie_dot(B: HopfRBOperator, f: LinComb, g: LinComb) -> LinComb:
    """``f . g = B(f(1)) g S(B(f(2)))``."""
    H = B.carrier
    acc = Accumulator()
    for a, ca in f.items():
        for (a1, a2), c in H.comul_basis(a).items():
            acc.add(H.mul(H.mul(B.on_basis(a1), g), H.antipode(B.on_basis(a2))), ca * c)
    return acc.result()


class PostLieExtension:
    """The post-Lie product ``a . b = [R(a), b]`` extended to U(g) by the rules

        1 . f = f
        x f . g = x . (f . g) - (x . f) . g
        f . (g h) = (f(1) . g)(f(2) . h)

    for ``x`` in g.  For a generator ``x`` the last rule makes ``x . -`` a
    derivation of U(g) determined by the Lie-level table; ``x f . g`` then
    recurses on the degree of the left factor.  No Hopf-level operator is
    involved.
    """

    def __init__(self, U: EnvelopingAlgebra, R: LieOperator, check: bool = True):
        self.U = U
        self.R = R
        table = post_lie_product(U.lie, R, check=check)
        self.table = {k: U.from_lie(v) for k, v in table.items()}
        self._gen = {}
        self._dot = {}

    def gen_dot_basis(self, i: int, m) -> LinComb:
        """``e_i . m`` for a PBW monomial ``m``, by the derivation rule."""
        key = (i, m)
        r = self._gen.get(key)
        if r is not None:
            return r
        U = self.U
        if not any(m):
            r = LinComb.zero()
        else:
            j = next(k for k, a in enumerate(m) if a)
            rest = list(m)
            rest[j] -= 1
            rest = tuple(rest)
            # m = e_j rest
            r = U.mul(self.table[(i, j)], basis_vector(rest)) + U.mul(U.gen(j), self.gen_dot_basis(i, rest))
        self._gen[key] = r
        return r

    def gen_dot(self, i: int, v: LinComb) -> LinComb:
        acc = Accumulator()
        for m, c in v.items():
            acc.add(self.gen_dot_basis(i, m), c)
        return acc.result()

    def dot_basis(self, f, g) -> LinComb:
        key = (f, g)
        r = self._dot.get(key)
        if r is not None:
            return r
        if not any(f):
            r = basis_vector(g)
        else:
            i = next(k for k, a in enumerate(f) if a)
            rest = list(f)
            rest[i] -= 1
            rest = tuple(rest)
            r = self.gen_dot(i, self.dot_basis(rest, g)) - self.dot(self.gen_dot_basis(i, rest), basis_vector(g))
        self._dot[key] = r
        return r

    def dot(self, f: LinComb, g: LinComb) -> LinComb:
        acc = Accumulator()
        for a, ca in f.items():
            for b, cb in g.items():
                acc.add(self.dot_basis(a, b), ca * cb)
        return acc.result()


def post_lie_dot_recursive(ext: PostLieExtension, f: LinComb, g: LinComb) -> LinComb:
    return ext.dot(f, g)

"""Rota-Baxter operators on cocommutative Hopf algebras.

A coalgebra map ``B: H -> H`` is Rota-Baxter when, for all ``x, y``,

    B(x) B(y) = B(x(1) B(x(2)) y S(B(x(3))))

(sumless Sweedler notation).  Only this weight-1 form exists at the Hopf
level; there is no weight parameter here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .algebra import Accumulator, LinComb, basis_vector, tensor
from .errors import AxiomViolation, FactorizationError, NotGroupLikeError, NotPrimitiveError, SpecError
from .groups import FiniteGroup, GroupMap, check_rb_group, factorization
from .hopf import EnvelopingAlgebra, GroupAlgebra, HopfAlgebra, detect_grouplike, detect_primitive, pbw_normalize
from .lie import LieAlgebraSpec, LieOperator, check_rb_weight, sl2
from .report import Report

PROVENANCES = ("extended-from-lie", "extended-from-group", "tilde", "split", "antipode", "custom")


class HopfRBOperator:
    """A linear operator on a Hopf algebra, defined on basis labels.

    ``action(label)`` returns the image of a basis label.  Images are
    memoized, so recursive definitions may call the operator on smaller
    labels.  For F[G] the action is usually a finite table; for U(g) it is
    evaluated on demand because the basis is infinite.
    """

    def __init__(self, carrier: HopfAlgebra, action: Callable[[Hashable], LinComb] | Mapping,
                 provenance: str = "custom"):
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        self.carrier = carrier
        self.provenance = provenance
        self._cache = {}
        if isinstance(action, Mapping):
            table = {k: v if isinstance(v, LinComb) else LinComb(v) for k, v in action.items()}
            self._cache.update(table)

            def missing(a):
                raise KeyError(f"operator has no entry for basis label {carrier.label_str(a)}")
            self._action = missing
        else:
            self._action = action
        self._star_cache = {}

    def on_basis(self, a) -> LinComb:
        r = self._cache.get(a)
        if r is None:
            r = self._action(a)
            self._cache[a] = r
        return r

    def __call__(self, x: LinComb) -> LinComb:
        acc = Accumulator()
        for a, c in x.items():
            acc.add(self.on_basis(a), c)
        return acc.result()

    def evaluated(self) -> dict:
        return dict(self._cache)

    def table(self, labels: Iterable) -> dict:
        return {a: self.on_basis(a) for a in labels}

    def agrees_with(self, other: HopfRBOperator, labels: Iterable) -> bool:
        return all(self.on_basis(a) == other.on_basis(a) for a in labels)

    def __repr__(self):
        return f"<HopfRBOperator {self.provenance} on {self.carrier.name}>"


# the twisted product x(1) B(x(2)) y S(B(x(3)))

def _star_parts(B: HopfRBOperator, a) -> list:
    """Pairs ``(x(1) B(x(2)), S(B(x(3))))`` with coefficients, for basis label ``a``."""
    r = B._star_cache.get(a)
    if r is None:
        H = B.carrier
        r = []
        for (a1, a2, a3), c in H.comul3_basis(a).items():
            left = H.mul(basis_vector(a1), B.on_basis(a2))
            right = H.antipode(B.on_basis(a3))
            if left and right:
                r.append((c, left, right))
        B._star_cache[a] = r
    return r


def star(B: HopfRBOperator, x: LinComb, y: LinComb) -> LinComb:
    """``x * y = x(1) B(x(2)) y S(B(x(3)))``, bilinear in ``x`` and ``y``."""
    H = B.carrier
    acc = Accumulator()
    for a, ca in x.items():
        for c, left, right in _star_parts(B, a):
            acc.add(H.mul(H.mul(left, y), right), ca * c)
    return acc.result()


def s_b(B: HopfRBOperator, x: LinComb) -> LinComb:
    """``S_B(x) = S(B(x(1))) S(x(2)) B(x(3))``."""
    H = B.carrier
    acc = Accumulator()
    for a, ca in x.items():
        for (a1, a2, a3), c in H.comul3_basis(a).items():
            t = H.mul(H.mul(H.antipode(B.on_basis(a1)), H.antipode_basis(a2)), B.on_basis(a3))
            acc.add(t, ca * c)
    return acc.result()


def check_rb_hopf(B: HopfRBOperator, sample: Sequence, right_sample: Sequence | None = None) -> Report:
    """Evaluate the Rota-Baxter identity on every basis pair ``(x, y)``.

    The identity is linear in ``y`` and, through Δ², linear in ``x``, so
    basis pairs cover the spanned subspace.
    """
    H = B.carrier
    right_sample = sample if right_sample is None else right_sample
    report = Report(label_format=H.label_str)
    chk = report.check("B(x)B(y) = B(x(1) B(x(2)) y S(B(x(3))))")
    for a in sample:
        Ba = B.on_basis(a)
        for b in right_sample:
            lhs = H.mul(Ba, B.on_basis(b))
            rhs = B(star(B, basis_vector(a), basis_vector(b)))
            chk.record((a, b), lhs, rhs)
    return report


def check_coalgebra_map(B: HopfRBOperator, sample: Sequence) -> Report:
    H = B.carrier
    report = Report(label_format=H.label_str)
    chk_d = report.check("Δ(B(x)) = (B⊗B)Δ(x)")
    chk_e = report.check("ε(B(x)) = ε(x)")
    for a in sample:
        Ba = B.on_basis(a)
        acc = Accumulator()
        for (a1, a2), c in H.comul_basis(a).items():
            acc.add(tensor(B.on_basis(a1), B.on_basis(a2)), c)
        chk_d.record((a,), H.comul(Ba), acc.result())
        chk_e.record((a,), H.counit(Ba), H.counit_basis(a))
    return report


def check_closure(B: HopfRBOperator, sample: Sequence) -> Report:
    """Images of group-like basis labels are group-like, of primitive ones primitive."""
    H = B.carrier
    report = Report(label_format=H.label_str)
    chk_g = report.check("B maps group-likes to group-likes")
    chk_p = report.check("B maps primitives to primitives")
    for a in sample:
        v = basis_vector(a)
        if detect_grouplike(H, v):
            chk_g.record((a,), detect_grouplike(H, B.on_basis(a)), True)
        if detect_primitive(H, v):
            chk_p.record((a,), detect_primitive(H, B.on_basis(a)), True)
    return report


# constructions

def extend_lie_rb(L: LieAlgebraSpec, R: LieOperator, U: EnvelopingAlgebra | None = None,
                  check: bool = True) -> HopfRBOperator:
    """The unique Rota-Baxter operator on U(L) restricting to ``R`` on L.

    With ``B(1) = 1`` and, for a PBW monomial ``m = x h`` where ``x`` is its
    lowest-index generator,

        B(x h) = B(x) B(h) - B([B(x), h]),   [B(x), h] = B(x) h - h B(x).

    The commutator ``[B(x), h]`` has degree at most ``deg h`` because the
    top-degree parts of ``B(x) h`` and ``h B(x)`` coincide, so the recursion
    strictly lowers the total degree and terminates.
    """
    if check:
        report = check_rb_weight(L, R, 1)
        if not report.ok:
            raise AxiomViolation("operator is not a Rota-Baxter operator of weight 1", report)
    U = U or EnvelopingAlgebra(L)
    images = [U.from_lie(R.image(i)) for i in range(L.dim)]

    def action(m):
        if not any(m):
            return U.one()
        i = next(k for k, a in enumerate(m) if a)
        h = list(m)
        h[i] -= 1
        h = basis_vector(tuple(h))
        Bx = images[i]
        return U.mul(Bx, B(h)) - B(U.commutator(Bx, h))

    B = HopfRBOperator(U, action, "extended-from-lie")
    B.lie_operator = R
    return B


def extend_group_rb(G: FiniteGroup, Bg: GroupMap, H: GroupAlgebra | None = None,
                    check: bool = True) -> HopfRBOperator:
    """Linear extension of a group Rota-Baxter operator to F[G]."""
    if check:
        report = check_rb_group(G, Bg)
        if not report.ok:
            raise AxiomViolation("not a Rota-Baxter operator on the group", report)
    H = H or GroupAlgebra(G)
    B = HopfRBOperator(H, {g: {Bg(g): 1} for g in G.elements()}, "extended-from-group")
    B.group_map = Bg
    return B


def restrict_to_primitives(B: HopfRBOperator, verify: bool = False) -> LieOperator:
    """Matrix of ``B`` on the generators of U(g).

    Raises :class:`NotPrimitiveError` when some image is not primitive.
    With ``verify``, first require the Rota-Baxter identity on monomials of
    degree at most 2.
    """
    U = B.carrier
    if not isinstance(U, EnvelopingAlgebra):
        raise SpecError("restriction to primitives needs a universal enveloping algebra")
    if verify:
        report = check_rb_hopf(B, U.basis(2))
        if not report.ok:
            raise AxiomViolation("operator fails the Rota-Baxter identity in degree <= 2", report)
    images = []
    for i in range(U.dim):
        g = U.generator(i)
        v = B.on_basis(g)
        if not detect_primitive(U, v):
            raise NotPrimitiveError(f"B({U.label_str(g)}) is not primitive")
        images.append(U.to_lie(v))
    return LieOperator.from_images(images, U.dim)


def restrict_to_grouplikes(B: HopfRBOperator, verify: bool = False) -> GroupMap:
    H = B.carrier
    if not isinstance(H, GroupAlgebra):
        raise SpecError("restriction to group-likes needs a group algebra")
    if verify:
        report = check_rb_hopf(B, H.basis())
        if not report.ok:
            raise AxiomViolation("operator fails the Rota-Baxter identity", report)
    image = []
    for g in H.basis():
        v = B.on_basis(g)
        if not detect_grouplike(H, v):
            raise NotGroupLikeError(f"image not group-like: B({H.label_str(g)}) = {v}")
        (h,) = v.labels()
        image.append(h)
    return GroupMap(image)


def tilde_hopf(B: HopfRBOperator) -> HopfRBOperator:
    """``B~(x) = S(x(1)) B(S(x(2)))``, again a Rota-Baxter operator."""
    H = B.carrier

    def action(a):
        acc = Accumulator()
        for (a1, a2), c in H.comul_basis(a).items():
            acc.add(H.mul(H.antipode_basis(a1), B(H.antipode_basis(a2))), c)
        return acc.result()

    T = HopfRBOperator(H, action, "tilde")
    T.source = B
    return T


def antipode_rb(H: HopfAlgebra) -> HopfRBOperator:
    return HopfRBOperator(H, H.antipode_basis, "antipode")


def split_rb_hopf(H: HopfAlgebra, H1: Iterable, H2: Iterable) -> HopfRBOperator:
    """``B(h1 h2) = ε(h1) S(h2)`` for a direct factorization ``H = H1 H2``.

    For F[G], ``H1`` and ``H2`` are subgroups (element indices or names)
    with ``G = G1 G2`` exact.  For U(g), they are the basis elements of two
    subalgebras with ``g = g1 ⊕ g2``; every ``g1`` generator must precede
    every ``g2`` generator in the PBW order so that a PBW monomial is a
    product ``h1 h2`` with ``h1`` in U(g1) and ``h2`` in U(g2).
    """
    if isinstance(H, GroupAlgebra):
        G = H.group
        fact = factorization(G, [G.index(a) for a in H1], [G.index(a) for a in H2])
        table = {g: {G.inv(fact[g][1]): 1} for g in G.elements()}
        return HopfRBOperator(H, table, "split")
    if isinstance(H, EnvelopingAlgebra):
        L = H.lie
        g1 = sorted({L.index(a) for a in H1})
        g2 = sorted({L.index(a) for a in H2})
        if set(g1) & set(g2) or set(g1) | set(g2) != set(range(L.dim)):
            raise FactorizationError("generator sets must partition the basis")
        if g1 and g2 and max(g1) > min(g2):
            raise FactorizationError("PBW order must list all first-factor generators first")
        for part in (g1, g2):
            s = set(part)
            for i in part:
                for j in part:
                    if any(k not in s for k in L.bracket_basis(i, j).labels()):
                        raise FactorizationError(f"span of {[L.basis_names[k] for k in part]} is not a subalgebra")
        first = set(g1)

        def action(m):
            if any(m[i] for i in first):
                return LinComb.zero()
            return H.antipode_basis(m)

        return HopfRBOperator(H, action, "split")
    raise SpecError(f"split construction not available on {H.name}")


def sl2_closed_form(i: int, j: int, k: int, U: EnvelopingAlgebra | None = None) -> LinComb:
    """Closed form of the extended sl_2 operator on ``x^i h^j y^k``.

    Zero when ``i > 0``, otherwise ``(-1)^(j+k) 2^-j y^k h^j``.  The word
    ``y^k h^j`` is straightened by literal rewriting, independently of the
    product used by :func:`extend_lie_rb`.
    """
    U = U or EnvelopingAlgebra(sl2())
    if i > 0:
        return LinComb.zero()
    word = ("y",) * k + ("h",) * j
    return Fraction((-1) ** (j + k), 2 ** j) * pbw_normalize(word, U.lie)

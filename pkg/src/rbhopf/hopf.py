"""Cocommutative Hopf algebras: the group algebra F[G] and U(g) in the PBW basis.

Elements are :class:`LinComb` objects over the basis labels of the carrier:
group-element indices for F[G] and exponent tuples (PBW monomials) for U(g).
Elements of ``H⊗H`` and ``H⊗H⊗H`` are LinCombs over :class:`TensorLabel`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Hashable, Sequence

from .algebra import Accumulator, LinComb, TensorLabel, basis_vector, linear_extension, tensor
from .errors import SpecError
from .groups import FiniteGroup
from .lie import LieAlgebraSpec
from .report import Report

ONE = Fraction(1)


class HopfAlgebra(ABC):
    """Structure maps on basis labels, extended linearly to LinCombs.

    Subclasses provide :meth:`mul_basis`, :meth:`comul_basis`,
    :meth:`counit_basis`, :meth:`antipode_basis` and :meth:`basis`.
    Results of the basis-level maps may be cached by subclasses; caches must
    only ever store the value a pure function would return.
    """

    unit_label: Hashable

    @abstractmethod
    def mul_basis(self, a, b) -> LinComb: ...

    @abstractmethod
    def comul_basis(self, a) -> LinComb: ...

    @abstractmethod
    def counit_basis(self, a) -> Fraction: ...

    @abstractmethod
    def antipode_basis(self, a) -> LinComb: ...

    @abstractmethod
    def basis(self, max_degree: int | None = None) -> list: ...

    def label_str(self, a) -> str:
        return str(a)

    @property
    def name(self) -> str:
        return type(self).__name__

    # linear extensions

    def one(self) -> LinComb:
        return basis_vector(self.unit_label)

    def unit(self, c=1) -> LinComb:
        return basis_vector(self.unit_label, c)

    def element(self, label, c=1) -> LinComb:
        return basis_vector(label, c)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        acc = Accumulator()
        for a, ca in x.items():
            for b, cb in y.items():
                acc.add(self.mul_basis(a, b), ca * cb)
        return acc.result()

    def prod(self, *xs: LinComb) -> LinComb:
        r = self.one()
        for x in xs:
            r = self.mul(r, x)
        return r

    def comul(self, x: LinComb) -> LinComb:
        return linear_extension(self.comul_basis, x)

    def counit(self, x: LinComb) -> Fraction:
        return sum((c * self.counit_basis(a) for a, c in x.items()), Fraction(0))

    def antipode(self, x: LinComb) -> LinComb:
        return linear_extension(self.antipode_basis, x)

    def comul3_basis(self, a) -> LinComb:
        """``(Δ⊗id)Δ`` on a basis label (cached)."""
        cache = self.__dict__.setdefault("_comul3_cache", {})
        r = cache.get(a)
        if r is None:
            acc = Accumulator()
            for t, c in self.comul_basis(a).items():
                acc.add(tensor(self.comul_basis(t[0]), basis_vector(t[1])), c)
            r = cache[a] = acc.result()
        return r

    def tensor_mul(self, u: LinComb, v: LinComb) -> LinComb:
        """Componentwise product in a tensor power of H."""
        acc = Accumulator()
        for s, cs in u.items():
            for t, ct in v.items():
                factors = [self.mul_basis(a, b) for a, b in zip(s, t)]
                prod_ = factors[0]
                for f in factors[1:]:
                    prod_ = tensor(prod_, f)
                if len(s) == 1:
                    prod_ = prod_.map_labels(lambda l: TensorLabel((l,)))
                acc.add(prod_, cs * ct)
        return acc.result()


def iterated_comul(H: HopfAlgebra, x: LinComb, n: int = 3, bracketing: str = "left") -> LinComb:
    """Δ for ``n == 2``; for ``n == 3`` the map ``(Δ⊗id)Δ`` or, with
    ``bracketing="right"``, ``(id⊗Δ)Δ``."""
    if n == 2:
        return H.comul(x)
    if n != 3:
        raise ValueError("iterated coproduct is provided for n = 2 or 3")
    if bracketing == "left":
        return linear_extension(H.comul3_basis, x)
    acc = Accumulator()
    for t, c in H.comul(x).items():
        acc.add(tensor(basis_vector(t[0]), H.comul_basis(t[1])), c)
    return acc.result()


def apply_tensor(maps: Sequence[Callable[[Hashable], LinComb]], u: LinComb) -> LinComb:
    """``(f1 ⊗ ... ⊗ fk)(u)`` for basis-level maps ``fi``."""
    acc = Accumulator()
    for labels, c in u.items():
        r = maps[0](labels[0])
        for f, l in zip(maps[1:], labels[1:]):
            r = tensor(r, f(l))
        acc.add(r, c)
    return acc.result()


def swap(u: LinComb) -> LinComb:
    return LinComb._from_clean({t.swap(): c for t, c in u.items()})


# F[G]

class GroupAlgebra(HopfAlgebra):
    """Group algebra F[G]: Δ(g) = g⊗g, ε(g) = 1, S(g) = g^-1."""

    def __init__(self, group: FiniteGroup, name: str | None = None):
        self.group = group
        self.unit_label = group.identity
        self._name = name

    @property
    def name(self) -> str:
        return f"group:{self._name}" if self._name else f"group:order{self.group.order}"

    def mul_basis(self, a, b):
        return LinComb._from_clean({self.group.cayley[a][b]: ONE})

    def comul_basis(self, a):
        return LinComb._from_clean({TensorLabel((a, a)): ONE})

    def comul3_basis(self, a):
        return LinComb._from_clean({TensorLabel((a, a, a)): ONE})

    def counit_basis(self, a):
        return ONE

    def antipode_basis(self, a):
        return LinComb._from_clean({self.group.inverse[a]: ONE})

    def basis(self, max_degree=None):
        return list(self.group.elements())

    def label_str(self, a):
        return self.group.names[a]

    def parse_label(self, s):
        return self.group.index(s)

    def is_commutative(self) -> bool:
        return self.group.is_abelian()


# U(g)

class EnvelopingAlgebra(HopfAlgebra):
    """Universal enveloping algebra U(g) in the PBW basis.

    A basis label is an exponent tuple ``(a_1, ..., a_n)`` standing for
    ``e_1^a_1 ... e_n^a_n`` in the order of ``lie.basis_names``.
    Products are straightened by inserting generators from the right with
    ``e_j e_i = e_i e_j + [e_j, e_i]``; results are memoized per pair.
    """

    def __init__(self, lie: LieAlgebraSpec, name: str | None = None):
        self.lie = lie
        self.dim = lie.dim
        self.unit_label = (0,) * lie.dim
        self._name = name
        self._gen_cache = {}
        self._mul_cache = {}
        self._comul_cache = {}
        self._anti_cache = {}

    @property
    def name(self) -> str:
        return f"ueg:{self._name}" if self._name else f"ueg:dim{self.dim}"

    # labels

    def generator(self, i) -> tuple:
        i = self.lie.index(i)
        m = [0] * self.dim
        m[i] = 1
        return tuple(m)

    def gen(self, i) -> LinComb:
        return basis_vector(self.generator(i))

    def monomial(self, *exponents) -> tuple:
        if len(exponents) == 1 and not isinstance(exponents[0], int):
            exponents = tuple(exponents[0])
        if len(exponents) != self.dim or any(e < 0 for e in exponents):
            raise SpecError(f"exponent vector {exponents} invalid for dimension {self.dim}")
        return tuple(int(e) for e in exponents)

    def from_lie(self, x: LinComb) -> LinComb:
        """Embed a Lie algebra element (keyed by basis index) into U(g)."""
        return LinComb._from_clean({self.generator(i): c for i, c in x.items()})

    def to_lie(self, v: LinComb) -> LinComb:
        """Inverse of :meth:`from_lie`; raises if ``v`` has non-linear terms."""
        out = {}
        for m, c in v.items():
            if sum(m) != 1:
                raise SpecError(f"{self.label_str(m)} is not a Lie algebra element")
            out[m.index(1)] = c
        return LinComb._from_clean(out)

    def degree(self, m) -> int:
        return sum(m)

    def word(self, m) -> tuple:
        """The generator indices of monomial ``m`` in PBW order."""
        return tuple(i for i, a in enumerate(m) for _ in range(a))

    def basis(self, max_degree=3):
        out = []
        for d in range(max_degree + 1):
            out.extend(sorted(_compositions(d, self.dim), reverse=True))
        return out

    def label_str(self, m) -> str:
        if not any(m):
            return "1"
        parts = []
        for name, a in zip(self.lie.basis_names, m):
            if a == 1:
                parts.append(str(name))
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "".join(parts)

    def parse_label(self, s: str) -> tuple:
        """Inverse of :meth:`label_str` for basis names that are single tokens."""
        if s == "1":
            return self.unit_label
        names = sorted(self.lie.basis_names, key=len, reverse=True)
        m = [0] * self.dim
        pos = 0
        last = -1
        while pos < len(s):
            for name in names:
                if s.startswith(name, pos):
                    break
            else:
                raise SpecError(f"cannot parse monomial {s!r}")
            pos += len(name)
            exp = 1
            if s.startswith("^", pos):
                end = pos + 1
                while end < len(s) and s[end].isdigit():
                    end += 1
                exp = int(s[pos + 1:end])
                pos = end
            i = self.lie.index(name)
            if i <= last:
                raise SpecError(f"monomial {s!r} is not in PBW order")
            last = i
            m[i] = exp
        return tuple(m)

    # product

    def _mul_gen(self, m: tuple, i: int) -> LinComb:
        """``m * e_i`` in the PBW basis."""
        key = (m, i)
        r = self._gen_cache.get(key)
        if r is not None:
            return r
        j = max((k for k in range(i + 1, self.dim) if m[k]), default=None)
        if j is None:
            t = list(m)
            t[i] += 1
            r = LinComb._from_clean({tuple(t): ONE})
        else:
            # m = m' e_j with j the largest index present; e_j e_i = e_i e_j + [e_j, e_i]
            mp = list(m)
            mp[j] -= 1
            mp = tuple(mp)
            acc = Accumulator()
            for t, c in self._mul_gen(mp, i).items():
                acc.add(self._mul_gen(t, j), c)
            for k, c in self.lie.bracket_basis(j, i).items():
                acc.add(self._mul_gen(mp, k), c)
            r = acc.result()
        self._gen_cache[key] = r
        return r

    def mul_basis(self, a, b):
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is not None:
            return r
        if not any(b):
            r = LinComb._from_clean({a: ONE})
        elif not any(a):
            r = LinComb._from_clean({b: ONE})
        else:
            k = max(i for i in range(self.dim) if b[i])
            bp = list(b)
            bp[k] -= 1
            acc = Accumulator()
            for t, c in self.mul_basis(a, tuple(bp)).items():
                acc.add(self._mul_gen(t, k), c)
            r = acc.result()
        self._mul_cache[key] = r
        return r

    def normalize_word(self, word: Sequence) -> LinComb:
        """PBW normal form of a word in the generators (fast path)."""
        r = self.one()
        for i in word:
            i = self.lie.index(i)
            acc = Accumulator()
            for t, c in r.items():
                acc.add(self._mul_gen(t, i), c)
            r = acc.result()
        return r

    def commutator(self, x: LinComb, y: LinComb) -> LinComb:
        return self.mul(x, y) - self.mul(y, x)

    # coalgebra

    def comul_basis(self, a):
        r = self._comul_cache.get(a)
        if r is None:
            d = {}
            for b in product(*(range(e + 1) for e in a)):
                c = 1
                for e, f in zip(a, b):
                    c *= comb(e, f)
                d[TensorLabel((b, tuple(e - f for e, f in zip(a, b))))] = Fraction(c)
            r = self._comul_cache[a] = LinComb._from_clean(d)
        return r

    def comul_multiplicative(self, a) -> LinComb:
        """Δ of a monomial as the product of Δ(e_i) = e_i⊗1 + 1⊗e_i over its word."""
        one = self.unit_label
        r = LinComb._from_clean({TensorLabel((one, one)): ONE})
        for i in self.word(a):
            g = self.generator(i)
            r = self.tensor_mul(r, LinComb._from_clean({TensorLabel((g, one)): ONE, TensorLabel((one, g)): ONE}))
        return r

    def comul3_basis(self, a):
        cache = self.__dict__.setdefault("_comul3_cache", {})
        r = cache.get(a)
        if r is None:
            d = {}
            for b in product(*(range(e + 1) for e in a)):
                for c in product(*(range(e - f + 1) for e, f in zip(a, b))):
                    coef = 1
                    for e, f, g in zip(a, b, c):
                        coef *= comb(e, f) * comb(e - f, g)
                    rest = tuple(e - f - g for e, f, g in zip(a, b, c))
                    d[TensorLabel((b, c, rest))] = Fraction(coef)
            r = cache[a] = LinComb._from_clean(d)
        return r

    def counit_basis(self, a):
        return ONE if not any(a) else Fraction(0)

    def antipode_basis(self, a):
        """``S(e_i1 ... e_ik) = (-1)^k e_ik ... e_i1``, straightened."""
        r = self._anti_cache.get(a)
        if r is None:
            w = self.word(a)
            r = self.normalize_word(reversed(w))
            if len(w) % 2:
                r = -r
            self._anti_cache[a] = r
        return r


def _compositions(d: int, n: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


def pbw_normalize(word: Sequence, L: LieAlgebraSpec, strategy: str = "leftmost") -> LinComb:
    """Rewrite a word in the generators into the PBW basis.

    Adjacent out-of-order pairs ``e_j e_i`` (``j > i``) are replaced by
    ``e_i e_j + [e_j, e_i]`` until every word is sorted.  ``strategy`` picks
    the leftmost or rightmost such pair; the result does not depend on it.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    word = tuple(L.index(i) for i in word)
    pending = {word: ONE}
    done = Accumulator()
    while pending:
        w, c = pending.popitem()
        pos = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not pos:
            m = [0] * L.dim
            for i in w:
                m[i] += 1
            done.add_term(tuple(m), c)
            continue
        p = pos[0] if strategy == "leftmost" else pos[-1]
        j, i = w[p], w[p + 1]
        swapped = w[:p] + (i, j) + w[p + 2:]
        new = [(swapped, c)]
        for k, ck in L.bracket_basis(j, i).items():
            new.append((w[:p] + (k,) + w[p + 2:], c * ck))
        for nw, nc in new:
            v = pending.get(nw, 0) + nc
            if v:
                pending[nw] = v
            else:
                pending.pop(nw, None)
    return done.result()


def detect_grouplike(H: HopfAlgebra, v: LinComb) -> bool:
    return H.counit(v) == 1 and H.comul(v) == tensor(v, v)


def detect_primitive(H: HopfAlgebra, v: LinComb) -> bool:
    one = H.one()
    return H.comul(v) == tensor(v, one) + tensor(one, v)


def verify_hopf_axioms(H: HopfAlgebra, sample: Sequence, triple_sample: Sequence | None = None) -> Report:
    """Check the cocommutative Hopf algebra axioms on basis labels.

    Unary identities run over ``sample``, binary ones over ``sample²`` and
    associativity over ``triple_sample³`` (defaults to ``sample``).
    """
    sample = list(sample)
    triple_sample = sample if triple_sample is None else list(triple_sample)
    report = Report(label_format=H.label_str)
    e = H.unit_label
    one = H.one()

    def v(a):
        return basis_vector(a)

    chk = report.check("associativity (xy)z = x(yz)")
    for a, b, c in product(triple_sample, repeat=3):
        lhs = H.mul(H.mul_basis(a, b), v(c))
        rhs = H.mul(v(a), H.mul_basis(b, c))
        chk.record((a, b, c), lhs, rhs)

    chk = report.check("unit 1x = x = x1")
    for a in sample:
        chk.record((a,), H.mul_basis(e, a), v(a))
        chk.record((a,), H.mul_basis(a, e), v(a))

    chk = report.check("coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ")
    for a in sample:
        chk.record((a,), iterated_comul(H, v(a), 3, "left"), iterated_comul(H, v(a), 3, "right"))

    chk = report.check("counit (ε⊗id)Δ = id = (id⊗ε)Δ")
    for a in sample:
        d = H.comul_basis(a)
        left, right = Accumulator(), Accumulator()
        for t, c in d.items():
            left.add_term(t[1], c * H.counit_basis(t[0]))
            right.add_term(t[0], c * H.counit_basis(t[1]))
        chk.record((a,), left.result(), v(a))
        chk.record((a,), right.result(), v(a))

    chk = report.check("antipode x(1)S(x(2)) = ε(x)1 = S(x(1))x(2)")
    for a in sample:
        d = H.comul_basis(a)
        left, right = Accumulator(), Accumulator()
        for t, c in d.items():
            left.add(H.mul(v(t[0]), H.antipode_basis(t[1])), c)
            right.add(H.mul(H.antipode_basis(t[0]), v(t[1])), c)
        target = H.unit(H.counit_basis(a))
        chk.record((a,), left.result(), target)
        chk.record((a,), right.result(), target)

    chk = report.check("cocommutativity")
    for a in sample:
        d = H.comul_basis(a)
        chk.record((a,), swap(d), d)

    chk = report.check("Δ is an algebra map")
    chk_e = report.check("ε is an algebra map")
    for a, b in product(sample, repeat=2):
        xy = H.mul_basis(a, b)
        chk.record((a, b), H.comul(xy), H.tensor_mul(H.comul_basis(a), H.comul_basis(b)))
        chk_e.record((a, b), H.counit(xy), H.counit_basis(a) * H.counit_basis(b))
    chk.record((e,), H.comul_basis(e), tensor(one, one))
    chk_e.record((e,), H.counit_basis(e), ONE)
    return report

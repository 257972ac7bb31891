"""Finite-dimensional Lie algebras over Q and weight-lambda Rota-Baxter operators.

Lie algebra elements are :class:`LinComb` objects keyed by basis index
(0-based ints).  Structure constants are stored only for ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .algebra import Accumulator, LinComb, Scalar, as_rational, format_rational, scale
from .errors import AxiomViolation, SpecError
from .report import Report


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """Lie algebra given by an ordered basis and structure constants.

    ``structure_constants[(i, j)]`` for ``i < j`` is ``[e_i, e_j]``; pairs
    not present bracket to zero.  Construction does not check Jacobi; use
    :func:`check_lie_axioms` or :meth:`from_brackets`, which does.
    """

    basis_names: tuple
    structure_constants: Mapping

    def __post_init__(self):
        names = tuple(self.basis_names)
        object.__setattr__(self, "basis_names", names)
        if len(set(names)) != len(names):
            raise SpecError(f"duplicate basis names in {names}")
        n = len(names)
        sc = {}
        for (i, j), v in dict(self.structure_constants).items():
            if not (0 <= i < j < n):
                raise SpecError(f"structure constant key {(i, j)} must satisfy 0 <= i < j < {n}")
            v = v if isinstance(v, LinComb) else LinComb(v)
            for k in v.labels():
                if not (isinstance(k, int) and 0 <= k < n):
                    raise SpecError(f"[{names[i]},{names[j]}] has out-of-range component {k!r}")
            if v:
                sc[(i, j)] = v
        object.__setattr__(self, "structure_constants", sc)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebraSpec):
            return NotImplemented
        return self.basis_names == other.basis_names and self.structure_constants == other.structure_constants

    def __hash__(self):
        return hash((self.basis_names, frozenset(self.structure_constants.items())))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name) -> int:
        if isinstance(name, int) and 0 <= name < self.dim:
            return name
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise SpecError(f"unknown basis element {name!r}") from None

    def basis_element(self, i) -> LinComb:
        return LinComb({self.index(i): 1})

    def element(self, coords: Mapping) -> LinComb:
        """Build an element from ``{name or index: coefficient}``."""
        return LinComb((self.index(k), as_rational(c)) for k, c in coords.items())

    def bracket_basis(self, i: int, j: int) -> LinComb:
        if i == j:
            return LinComb.zero()
        if i < j:
            return self.structure_constants.get((i, j), LinComb.zero())
        return scale(-1, self.structure_constants.get((j, i), LinComb.zero()))

    def is_abelian(self) -> bool:
        return not self.structure_constants

    @classmethod
    def from_brackets(cls, basis: Sequence, brackets: Mapping, check: bool = True) -> LieAlgebraSpec:
        """Build from ``{(left_name, right_name): {name: coeff}}``.

        Either order of a pair may be supplied, but not both.  The Jacobi
        identity is verified unless ``check`` is false.
        """
        basis = tuple(basis)
        idx = {name: i for i, name in enumerate(basis)}
        sc = {}
        seen = set()
        for (left, right), value in brackets.items():
            try:
                i, j = idx[left], idx[right]
            except KeyError as exc:
                raise SpecError(f"bracket refers to unknown basis element {exc.args[0]!r}") from None
            if i == j:
                raise SpecError(f"bracket [{left},{left}] is zero by antisymmetry and may not be given")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise SpecError(f"bracket of {basis[key[0]]} and {basis[key[1]]} supplied twice")
            seen.add(key)
            try:
                v = LinComb((idx[k], as_rational(c)) for k, c in value.items())
            except KeyError as exc:
                raise SpecError(f"bracket value refers to unknown basis element {exc.args[0]!r}") from None
            sc[key] = v if i < j else scale(-1, v)
        L = cls(basis, sc)
        if check:
            report = check_lie_axioms(L)
            if not report.ok:
                raise SpecError(f"Jacobi identity fails on {len(report)} basis triples")
        return L

    def fmt(self, x: LinComb) -> str:
        return format_lie_element(self, x)


def format_lie_element(L: LieAlgebraSpec, x: LinComb) -> str:
    if not x:
        return "0"
    parts = []
    for k, c in sorted(x.items()):
        parts.append(f"{format_rational(c)}*{L.basis_names[k]}")
    return " + ".join(parts)


def bracket(L: LieAlgebraSpec, x: LinComb, y: LinComb) -> LinComb:
    acc = Accumulator()
    for i, a in x.items():
        if not (isinstance(i, int) and 0 <= i < L.dim):
            raise SpecError(f"label {i!r} out of range for a {L.dim}-dimensional Lie algebra")
        for j, b in y.items():
            if not (isinstance(j, int) and 0 <= j < L.dim):
                raise SpecError(f"label {j!r} out of range for a {L.dim}-dimensional Lie algebra")
            if i != j:
                acc.add(L.bracket_basis(i, j), a * b)
    return acc.result()


def check_lie_axioms(L: LieAlgebraSpec) -> Report:
    """Evaluate Jacobi on every basis triple ``i < j < k``.

    Antisymmetry holds by construction; the triple set is exhaustive because
    the Jacobiator is trilinear and alternating.
    """
    report = Report(label_format=lambda i: L.basis_names[i])
    chk = report.check("Jacobi identity [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0")
    e = [L.basis_element(i) for i in range(L.dim)]
    zero = LinComb.zero()
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                a, b, c = e[i], e[j], e[k]
                jac = (bracket(L, a, bracket(L, b, c)) + bracket(L, b, bracket(L, c, a))
                       + bracket(L, c, bracket(L, a, b)))
                chk.record((i, j, k), jac, zero)
    return report


class LieOperator:
    """Linear endomorphism of a Lie algebra, stored as a matrix of Fractions.

    ``matrix[r][c]`` is the coefficient of ``e_r`` in the image of ``e_c``,
    i.e. column ``c`` is the image of basis vector ``c``.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        rows = tuple(tuple(as_rational(v) for v in row) for row in matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SpecError("operator matrix must be square")
        self.matrix = rows

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_images(cls, images: Sequence[LinComb], dim: int | None = None) -> LieOperator:
        n = len(images) if dim is None else dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for col, img in enumerate(images):
            for row, c in img.items():
                m[row][col] = c
        return cls(m)

    @classmethod
    def identity(cls, n: int) -> LieOperator:
        return cls([[int(r == c) for c in range(n)] for r in range(n)])

    @classmethod
    def zero(cls, n: int) -> LieOperator:
        return cls([[0] * n for _ in range(n)])

    def image(self, k: int) -> LinComb:
        return LinComb((r, self.matrix[r][k]) for r in range(self.dim))

    def __call__(self, x: LinComb) -> LinComb:
        acc = Accumulator()
        for k, c in x.items():
            acc.add(self.image(k), c)
        return acc.result()

    def __add__(self, other: LieOperator) -> LieOperator:
        return LieOperator([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)])

    def __neg__(self) -> LieOperator:
        return LieOperator([[-a for a in r] for r in self.matrix])

    def __sub__(self, other: LieOperator) -> LieOperator:
        return self + (-other)

    def __rmul__(self, c: Scalar) -> LieOperator:
        c = as_rational(c)
        return LieOperator([[c * a for a in r] for r in self.matrix])

    def __eq__(self, other):
        if not isinstance(other, LieOperator):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = "; ".join(" ".join(format_rational(v) for v in r) for r in self.matrix)
        return f"LieOperator([{rows}])"


def check_rb_weight(L: LieAlgebraSpec, R: LieOperator, lam: Scalar = 1) -> Report:
    """Check ``[R(a),R(b)] = R([R(a),b] + [a,R(b)] + lam*[a,b])`` on all basis pairs."""
    lam = as_rational(lam)
    if R.dim != L.dim:
        raise SpecError(f"operator of size {R.dim} on a {L.dim}-dimensional algebra")
    report = Report(label_format=lambda i: L.basis_names[i])
    chk = report.check(f"Rota-Baxter identity of weight {format_rational(lam)}")
    e = [L.basis_element(i) for i in range(L.dim)]
    Re = [R.image(i) for i in range(L.dim)]
    for i, j in product(range(L.dim), repeat=2):
        lhs = bracket(L, Re[i], Re[j])
        inner = bracket(L, Re[i], e[j]) + bracket(L, e[i], Re[j]) + scale(lam, bracket(L, e[i], e[j]))
        chk.record((i, j), lhs, R(inner))
    return report


def companion(R: LieOperator) -> LieOperator:
    """The operator ``-R - id``; weight-1 Rota-Baxter whenever ``R`` is."""
    return -R - LieOperator.identity(R.dim)


def _require_weight_one(L: LieAlgebraSpec, R: LieOperator):
    report = check_rb_weight(L, R, 1)
    if not report.ok:
        raise AxiomViolation("operator is not a Rota-Baxter operator of weight 1", report)


def post_lie_product(L: LieAlgebraSpec, R: LieOperator, check: bool = True) -> dict:
    """Table ``{(i, j): e_i . e_j}`` of the product ``a . b = [R(a), b]``.

    Both post-Lie axioms are verified on all basis triples; a failure raises
    :class:`AxiomViolation`, which means ``R`` was not weight-1 Rota-Baxter.
    """
    n = L.dim
    table = {(i, j): bracket(L, R.image(i), L.basis_element(j)) for i in range(n) for j in range(n)}
    if check:
        report = check_post_lie_axioms(L, table)
        if not report.ok:
            raise AxiomViolation("post-Lie axioms fail; operator is not weight-1 Rota-Baxter", report)
    return table


def post_lie_apply(L: LieAlgebraSpec, table: Mapping, x: LinComb, y: LinComb) -> LinComb:
    acc = Accumulator()
    for i, a in x.items():
        for j, b in y.items():
            acc.add(table[(i, j)], a * b)
    return acc.result()


def check_post_lie_axioms(L: LieAlgebraSpec, table: Mapping) -> Report:
    report = Report(label_format=lambda i: L.basis_names[i])
    first = report.check("[a,b].c = (b.a).c - b.(a.c) - (a.b).c + a.(b.c)")
    second = report.check("a.[b,c] = [a.b,c] + [b,a.c]")

    def dot(u, v):
        return post_lie_apply(L, table, u, v)

    e = [L.basis_element(i) for i in range(L.dim)]
    for i, j, k in product(range(L.dim), repeat=3):
        a, b, c = e[i], e[j], e[k]
        lhs = dot(bracket(L, a, b), c)
        rhs = dot(dot(b, a), c) - dot(b, dot(a, c)) - dot(dot(a, b), c) + dot(a, dot(b, c))
        first.record((i, j, k), lhs, rhs)
        second.record((i, j, k), dot(a, bracket(L, b, c)),
                      bracket(L, dot(a, b), c) + bracket(L, b, dot(a, c)))
    return report


def descendent_bracket(L: LieAlgebraSpec, R: LieOperator) -> LieAlgebraSpec:
    """Lie algebra on the same basis with ``{a,b} = [R(a),b] + [a,R(b)] + [a,b]``."""
    sc = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            ei, ej = L.basis_element(i), L.basis_element(j)
            v = bracket(L, R.image(i), ej) + bracket(L, ei, R.image(j)) + bracket(L, ei, ej)
            if v:
                sc[(i, j)] = v
    D = LieAlgebraSpec(L.basis_names, sc)
    report = check_lie_axioms(D)
    if not report.ok:
        raise AxiomViolation("descendent bracket violates Jacobi; operator is not weight-1 Rota-Baxter", report)
    return D


# built-in fixtures

def sl2() -> LieAlgebraSpec:
    """sl_2 with ordered basis x, h, y and [h,x]=2x, [h,y]=-2y, [x,y]=h."""
    return LieAlgebraSpec.from_brackets(
        ["x", "h", "y"],
        {("h", "x"): {"x": 2}, ("h", "y"): {"y": -2}, ("x", "y"): {"h": 1}},
    )


def example1_operator() -> LieOperator:
    """Weight-1 operator on sl_2: x -> 0, h -> -h/2, y -> -y."""
    return LieOperator([[0, 0, 0], [0, Fraction(-1, 2), 0], [0, 0, -1]])


def aff2() -> LieAlgebraSpec:
    """Two-dimensional non-abelian algebra [a,b] = b."""
    return LieAlgebraSpec.from_brackets(["a", "b"], {("a", "b"): {"b": 1}})


def heisenberg() -> LieAlgebraSpec:
    return LieAlgebraSpec.from_brackets(["p", "q", "z"], {("p", "q"): {"z": 1}})


def abelian(n: int) -> LieAlgebraSpec:
    return LieAlgebraSpec([f"e{i + 1}" for i in range(n)], {})


BUILTIN_ALGEBRAS = {
    "sl2": sl2,
    "aff2": aff2,
    "heisenberg": heisenberg,
    "abelian1": lambda: abelian(1),
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "zero": lambda: abelian(0),
}

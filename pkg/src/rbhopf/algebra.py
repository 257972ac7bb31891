"""Exact rational scalars and sparse linear combinations.

Every element of every algebra in this package is a :class:`LinComb`: a
finite map from hashable basis labels to nonzero :class:`fractions.Fraction`
coefficients.  Tensor powers use :class:`TensorLabel` keys, which are flat
tuples of atomic labels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Union

Rational = Fraction
Scalar = Union[int, str, Fraction]

__all__ = [
    "Rational",
    "LinComb",
    "TensorLabel",
    "as_rational",
    "format_rational",
    "add",
    "scale",
    "tensor",
    "basis_vector",
    "linear_extension",
    "Accumulator",
]


def as_rational(value: Scalar) -> Fraction:
    """Coerce an int, a ``"p/q"`` string or a Fraction to a Fraction.

    Floats are rejected: they would silently bring rounding into an exact
    computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    # "p/q", or "p" when q == 1
    return str(Fraction(q))


class TensorLabel(tuple):
    """Basis label of a tensor power: a flat tuple of atomic labels."""

    __slots__ = ()

    def __repr__(self):
        return "⊗".join(repr(p) for p in self) if self else "TensorLabel()"

    def swap(self) -> TensorLabel:
        return TensorLabel(reversed(self))


class LinComb:
    """Finite formal linear combination with rational coefficients.

    Instances are treated as immutable.  Zero coefficients are never stored,
    so two combinations are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        d = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for label, c in items:
                c = as_rational(c)
                if c:
                    c = d.get(label, 0) + c
                    if c:
                        d[label] = c
                    else:
                        d.pop(label, None)
        self._terms = d

    @classmethod
    def _from_clean(cls, d: dict) -> LinComb:
        # caller guarantees: Fraction values, none zero
        obj = cls.__new__(cls)
        obj._terms = d
        return obj

    @classmethod
    def zero(cls) -> LinComb:
        return cls._from_clean({})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def labels(self):
        return self._terms.keys()

    def coefficient(self, label) -> Fraction:
        return self._terms.get(label, Fraction(0))

    __getitem__ = coefficient

    def __contains__(self, label) -> bool:
        return label in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == LinComb(other)._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LinComb) -> LinComb:
        return add(self, other)

    def __sub__(self, other: LinComb) -> LinComb:
        return add(self, scale(-1, other))

    def __neg__(self) -> LinComb:
        return scale(-1, self)

    def __rmul__(self, c: Scalar) -> LinComb:
        return scale(c, self)

    def map_labels(self, f: Callable[[Hashable], Hashable]) -> LinComb:
        return LinComb((f(k), c) for k, c in self._terms.items())

    def sorted_items(self, key=None):
        return sorted(self._terms.items(), key=key or (lambda kv: repr(kv[0])))

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        body = ", ".join(f"{k!r}: {format_rational(c)}" for k, c in self.sorted_items())
        return "LinComb({" + body + "})"


class Accumulator:
    """Mutable scratch space for building a LinComb term by term."""

    __slots__ = ("d",)

    def __init__(self):
        self.d = {}

    def add_term(self, label, c: Fraction):
        d = self.d
        c = d.get(label, 0) + c
        if c:
            d[label] = c
        else:
            d.pop(label, None)

    def add(self, x: LinComb, c: Fraction = Fraction(1)):
        d = self.d
        for label, v in x._terms.items():
            v = d.get(label, 0) + c * v
            if v:
                d[label] = v
            else:
                d.pop(label, None)

    def result(self) -> LinComb:
        out = LinComb._from_clean(self.d)
        self.d = {}
        return out


def basis_vector(label, c: Scalar = 1) -> LinComb:
    return LinComb({label: c})


def add(a: LinComb, b: LinComb) -> LinComb:
    if not b:
        return a
    if not a:
        return b
    acc = Accumulator()
    acc.d = dict(a._terms)
    acc.add(b)
    return acc.result()


def scale(c: Scalar, a: LinComb) -> LinComb:
    c = as_rational(c)
    if not c:
        return LinComb.zero()
    if c == 1:
        return a
    return LinComb._from_clean({k: c * v for k, v in a._terms.items()})


def _parts(label) -> tuple:
    return tuple(label) if isinstance(label, TensorLabel) else (label,)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """Tensor product; labels become flat TensorLabels."""
    d = {}
    for la, ca in a._terms.items():
        pa = _parts(la)
        for lb, cb in b._terms.items():
            d[TensorLabel(pa + _parts(lb))] = ca * cb
    return LinComb._from_clean(d)


def linear_extension(f: Callable[[Hashable], LinComb], x: LinComb) -> LinComb:
    """Apply the linear map determined by ``f`` on basis labels to ``x``."""
    acc = Accumulator()
    for label, c in x._terms.items():
        acc.add(f(label), c)
    return acc.result()

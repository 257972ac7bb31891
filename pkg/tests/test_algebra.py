from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rbhopf.algebra import Accumulator, LinComb, TensorLabel, as_rational, basis_vector, format_rational, tensor

labels = st.sampled_from(["a", "b", "c", "d"])
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
combos = st.dictionaries(labels, rationals, max_size=4).map(LinComb)


def test_example_sum_cancels():
    x = LinComb({"a": Fraction(1, 2), "b": 1})
    y = LinComb({"a": Fraction(-1, 2)})
    assert (x + y).terms == {"b": Fraction(1)}


def test_zero_coefficients_dropped():
    assert len(LinComb({"a": 0, "b": 0})) == 0
    assert LinComb({"a": 1}) - LinComb({"a": 1}) == 0


def test_rationals_and_floats():
    assert as_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_tensor_flattens():
    u = tensor(basis_vector("a", 2), tensor(basis_vector("b"), basis_vector("c", Fraction(1, 3))))
    assert u.terms == {TensorLabel(("a", "b", "c")): Fraction(2, 3)}
    assert TensorLabel(("a", "b")).swap() == TensorLabel(("b", "a"))


@given(combos, combos, combos)
def test_addition_associative_commutative(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x


@given(rationals, combos, combos)
def test_scalar_distributes(c, x, y):
    assert c * (x + y) == c * x + c * y
    assert (x - x) == LinComb.zero()


@given(combos, combos, combos, rationals)
def test_tensor_bilinear(x, y, z, c):
    assert tensor(x + y, z) == tensor(x, z) + tensor(y, z)
    assert tensor(c * x, z) == c * tensor(x, z) == tensor(x, c * z)


@given(st.lists(st.tuples(labels, rationals), max_size=8))
def test_accumulator_matches_sum_and_stores_no_zeros(pairs):
    acc = Accumulator()
    total = LinComb.zero()
    for lab, c in pairs:
        acc.add(basis_vector(lab), c)
        total = total + LinComb({lab: c})
    res = acc.result()
    assert res == total
    assert all(c != 0 for _, c in res.items())


def test_small_cases():
    m, n, p = "m", "n", "p"
    assert LinComb({m: 2}) + LinComb({m: -2}) == 0
    assert (LinComb({m: Fraction(1, 2)}) + LinComb({m: Fraction(1, 3)})).terms == {m: Fraction(5, 6)}
    assert 0 * LinComb({m: 5}) == 0
    assert Fraction(-1, 2) * LinComb({m: 4}) == LinComb({m: -2})
    assert tensor(LinComb({m: 2}), LinComb({n: 3})).terms == {TensorLabel((m, n)): 6}
    assert tensor(LinComb.zero(), LinComb({n: 1})) == 0
    assert len(tensor(LinComb({m: 1, n: 1}), LinComb({p: 1}))) == 2

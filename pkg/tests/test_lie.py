from fractions import Fraction
from itertools import product

import pytest

from rbhopf.errors import AxiomViolation, SpecError
from rbhopf.io import lie_algebra_from_json
from rbhopf.lie import (LieAlgebraSpec, LieOperator, aff2, bracket, check_lie_axioms, check_post_lie_axioms,
                        check_rb_weight, companion, descendent_bracket, example1_operator, heisenberg,
                        post_lie_apply, post_lie_product, sl2)
from rbhopf.algebra import LinComb

L = sl2()
X, H, Y = 0, 1, 2
F = Fraction


def e(i, c=1):
    return LinComb({i: c})


def test_sl2_brackets():
    assert L.bracket_basis(H, X) == e(X, 2)
    assert L.bracket_basis(H, Y) == e(Y, -2)
    assert L.bracket_basis(X, Y) == e(H)
    assert L.bracket_basis(Y, X) == e(H, -1)
    assert check_lie_axioms(L).ok


@pytest.mark.parametrize("make", [sl2, aff2, heisenberg])
def test_builtins_are_lie(make):
    assert check_lie_axioms(make()).ok


def test_tampered_sl2_fails_jacobi():
    data = {"basis": ["x", "h", "y"], "brackets": [
        {"left": "h", "right": "x", "value": {"x": "2"}},
        {"left": "h", "right": "y", "value": {"y": "-2"}},
        {"left": "x", "right": "y", "value": {"h": "1", "x": "1"}}]}
    with pytest.raises(SpecError):
        lie_algebra_from_json(data)
    report = check_lie_axioms(lie_algebra_from_json(data, check=False))
    assert not report.ok and len(report.violations) == 1


def test_loader_rejects_duplicates_and_self_brackets():
    dup = {"basis": ["a", "b"], "brackets": [{"left": "a", "right": "b", "value": {"a": "1"}},
                                             {"left": "b", "right": "a", "value": {"a": "-1"}}]}
    with pytest.raises(SpecError):
        lie_algebra_from_json(dup)
    with pytest.raises(SpecError):
        LieAlgebraSpec.from_brackets(["a"], {("a", "a"): {"a": 1}})


def test_bracket_out_of_range():
    with pytest.raises(SpecError):
        bracket(L, e(5), e(0))


def test_example1_is_rota_baxter_weight_one():
    R = example1_operator()
    assert R(e(H)) == e(H, F(-1, 2))
    assert check_rb_weight(L, R, 1).ok


def test_identity_fails_weight_one():
    assert not check_rb_weight(L, LieOperator.identity(3), 1).ok
    # any operator is weight-0 RB on an abelian algebra; identity is RB of weight -1
    assert check_rb_weight(L, LieOperator.identity(3), -1).ok


def test_companion_of_example1():
    C = companion(example1_operator())
    assert C.matrix == LieOperator([[-1, 0, 0], [0, F(-1, 2), 0], [0, 0, 0]]).matrix
    assert companion(C) == example1_operator()
    assert check_rb_weight(L, C, 1).ok


def test_companion_on_aff2_search():
    A = aff2()
    vals = (-1, 0, 1)
    found = 0
    for a, b, c, d in product(vals, repeat=4):
        R = LieOperator([[a, b], [c, d]])
        if check_rb_weight(A, R, 1).ok:
            found += 1
            assert check_rb_weight(A, companion(R), 1).ok
    assert found > 0


@pytest.mark.parametrize("alpha", [F(2), F(-1), F(1, 3)])
def test_weight_scaling(alpha):
    # R of weight 1 gives alpha R of weight alpha
    R = example1_operator()
    assert check_rb_weight(L, alpha * R, alpha).ok


def test_post_lie_product_examples():
    table = post_lie_product(L, example1_operator())
    assert table[(H, X)] == e(X, -1)
    assert table[(X, Y)] == LinComb.zero()
    assert table[(Y, X)] == e(H)
    assert check_post_lie_axioms(L, table).ok


def test_descendent_bracket_values():
    D = descendent_bracket(L, example1_operator())
    assert D.bracket_basis(H, Y) == e(Y)
    assert D.bracket_basis(X, Y) == LinComb.zero()
    assert check_lie_axioms(D).ok


def test_descendent_bracket_from_post_lie():
    R = example1_operator()
    table = post_lie_product(L, R)
    D = descendent_bracket(L, R)
    for i, j in product(range(3), repeat=2):
        rhs = (post_lie_apply(L, table, e(i), e(j)) - post_lie_apply(L, table, e(j), e(i))
               + L.bracket_basis(i, j))
        assert D.bracket_basis(i, j) == rhs


def test_post_lie_requires_rb():
    with pytest.raises(AxiomViolation):
        post_lie_product(L, LieOperator.identity(3))


def test_small_cases():
    assert L.bracket_basis(X, X) == LinComb.zero()
    Z = LieOperator.zero(3)
    assert check_rb_weight(L, Z, 0).ok
    assert companion(Z) == -LieOperator.identity(3)
    assert check_lie_axioms(LieAlgebraSpec.from_brackets(["a", "b"], {})).ok
    D0 = descendent_bracket(L, Z)
    assert D0.structure_constants == L.structure_constants
    table = post_lie_product(L, Z)
    assert all(not v for v in table.values())
    assert check_rb_weight(L, -LieOperator.identity(3), 1).ok

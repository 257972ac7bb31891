
import pytest
from hypothesis import given, strategies as st

from rbhopf.algebra import LinComb, basis_vector, tensor
from rbhopf.hopf import (EnvelopingAlgebra, GroupAlgebra, detect_grouplike, detect_primitive,
                         iterated_comul, pbw_normalize, verify_hopf_axioms)
from rbhopf.groups import symmetric3
from rbhopf.lie import aff2, heisenberg, sl2

U = EnvelopingAlgebra(sl2(), "sl2")
FS3 = GroupAlgebra(symmetric3(), "S3")
X, H, Y = U.generator("x"), U.generator("h"), U.generator("y")
ONE = U.unit_label


def lc(d):
    return LinComb({U.parse_label(k): v for k, v in d.items()})


def test_pbw_examples():
    assert pbw_normalize("yx", sl2()) == lc({"xy": 1, "h": -1})
    assert pbw_normalize("hx", sl2()) == lc({"xh": 1, "x": 2})
    assert U.mul_basis(Y, X) == lc({"xy": 1, "h": -1})


def test_labels_round_trip():
    for m in U.basis(4):
        assert U.parse_label(U.label_str(m)) == m
    assert U.label_str(U.monomial(2, 1, 0)) == "x^2h"


words = st.lists(st.sampled_from("xhy"), max_size=6)


@given(words)
def test_rewrite_strategies_agree_with_fast_product(w):
    left = pbw_normalize(w, sl2(), "leftmost")
    assert left == pbw_normalize(w, sl2(), "rightmost")
    assert left == U.normalize_word([sl2().index(c) for c in w])


@pytest.mark.parametrize("lie", [aff2(), heisenberg()], ids=["aff2", "heis"])
def test_fast_product_other_algebras(lie):
    V = EnvelopingAlgebra(lie)
    for a in V.basis(2):
        for b in V.basis(2):
            w = V.word(a) + V.word(b)
            assert V.mul_basis(a, b) == pbw_normalize(w, lie)


def test_coproduct_of_square():
    x2, x, one = basis_vector(U.monomial(2, 0, 0)), U.gen("x"), U.one()
    assert U.comul(x2) == tensor(x2, one) + 2 * tensor(x, x) + tensor(one, x2)
    assert U.comul(x2) == U.tensor_mul(U.comul(x), U.comul(x))


def test_coproduct_binomial_matches_multiplicative():
    for m in U.basis(4):
        assert U.comul_basis(m) == U.comul_multiplicative(m)


def test_coproduct_counts():
    # x^a h^b y^c has (a+1)(b+1)(c+1) tensor terms with binomial weights
    m = U.monomial(2, 1, 3)
    d = U.comul_basis(m)
    assert len(d) == 3 * 2 * 4
    assert sum(d.terms.values()) == 2 ** 6


def test_coassociativity_degree_4():
    for m in U.basis(4):
        v = basis_vector(m)
        assert iterated_comul(U, v, 3, "left") == iterated_comul(U, v, 3, "right")
        assert U.comul3_basis(m) == iterated_comul(U, v, 3, "left")


def test_antipode_examples_and_involution():
    assert U.antipode_basis(X) == LinComb({X: -1})
    assert U.antipode_basis(U.monomial(1, 0, 1)) == lc({"xy": 1, "h": -1})
    for m in U.basis(4):
        assert U.antipode(U.antipode_basis(m)) == basis_vector(m)
    for g in FS3.basis():
        assert FS3.antipode(FS3.antipode_basis(g)) == basis_vector(g)


def test_group_algebra_axioms():
    assert verify_hopf_axioms(FS3, FS3.basis()).ok


def test_enveloping_algebra_axioms_degree_3():
    sample = U.basis(3)
    report = verify_hopf_axioms(U, sample, U.basis(2))
    assert report.ok, report.to_text()
    assert len(report.checks) >= 8


class BrokenAntipode(GroupAlgebra):
    def antipode_basis(self, a):
        return basis_vector(a)


def test_corrupted_antipode_reported():
    bad = BrokenAntipode(symmetric3(), "S3")
    report = verify_hopf_axioms(bad, bad.basis())
    assert not report.ok
    assert any("antipode" in name for name in report.failed())


def test_grouplike_and_primitive_detection():
    assert detect_grouplike(FS3, basis_vector(3))
    assert not detect_grouplike(FS3, basis_vector(3) + basis_vector(1))
    assert detect_primitive(U, U.gen("h"))
    assert not detect_primitive(U, basis_vector(U.monomial(2, 0, 0)))
    assert detect_primitive(U, U.commutator(U.gen("x"), U.gen("y")))
    assert detect_grouplike(U, U.one())


def test_small_cases():
    one = U.one()
    assert U.comul(one) == tensor(one, one)
    x = U.gen("x")
    assert U.comul(x) == tensor(x, one) + tensor(one, x)
    assert U.mul(x, x) == basis_vector(U.monomial(2, 0, 0))
    assert U.antipode(one) == one
    g, k = basis_vector(1), basis_vector(4)
    assert FS3.counit(2 * g + 3 * k) == 5
    assert FS3.comul(g + k) == tensor(g, g) + tensor(k, k)
    assert FS3.mul(FS3.antipode(k), k) == FS3.one()
    assert iterated_comul(FS3, g, 3) == tensor(g, tensor(g, g))
    assert iterated_comul(U, x, 3) == tensor(x, tensor(one, one)) + tensor(one, tensor(x, one)) + tensor(one, tensor(one, x))
    assert pbw_normalize("xhy", sl2()) == lc({"xhy": 1})
    x2 = basis_vector(U.monomial(2, 0, 0))
    assert not detect_grouplike(U, x2) and not detect_primitive(U, x2)

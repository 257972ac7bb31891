from itertools import product

import pytest

from rbhopf.errors import BudgetExceeded, FactorizationError, SpecError
from rbhopf.groups import (BUILTIN_GROUPS, FiniteGroup, GroupMap, all_maps, check_rb_group, cyclic,
                           descendent_group, endomorphisms, enumerate_rb_group, factorization, inverse_map,
                           is_rb_group, klein_four, opposite_group, s3_factorization, split_rb_group, symmetric3,
                           tilde_group, trivial_map)

S3 = symmetric3()


def n(G, name):
    return G.index(name)


@pytest.mark.parametrize("name", sorted(BUILTIN_GROUPS))
def test_builtin_tables_are_groups(name):
    G = BUILTIN_GROUPS[name]()
    for a, b, c in product(G.elements(), repeat=3):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    for g in G.elements():
        assert G.mul(g, G.inv(g)) == G.identity


def test_s3_composition():
    assert S3.mul(n(S3, "(12)"), n(S3, "(12)")) == S3.identity
    assert not S3.is_abelian()
    r = n(S3, "(123)")
    assert S3.mul(r, r) == n(S3, "(132)")


def test_bad_tables_rejected():
    with pytest.raises(SpecError):
        FiniteGroup.from_table([[0, 1], [1, 1]])
    with pytest.raises(SpecError):
        FiniteGroup.from_table([[0, 1, 2], [1, 0, 2], [2, 2, 0]])


def test_inverse_and_trivial_maps_are_rb():
    assert check_rb_group(S3, inverse_map(S3)).ok
    assert check_rb_group(S3, trivial_map(S3)).ok


def test_identity_map_fails_on_s3():
    # B = id gives B(g)B(h) = gh versus B(g g h g^-1) = g g h g^-1
    assert not is_rb_group(S3, GroupMap(list(S3.elements())))


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), S3], ids=["C2", "C3", "S3"])
def test_enumeration_equals_brute_force(G):
    brute = [B for B in all_maps(G) if is_rb_group(G, B)]
    assert enumerate_rb_group(G) == sorted(brute, key=lambda B: B.image)


def test_enumeration_counts():
    assert len(enumerate_rb_group(cyclic(2))) == 2
    assert len(enumerate_rb_group(klein_four())) == 16


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), cyclic(4), klein_four()], ids=["C2", "C3", "C4", "V4"])
def test_abelian_rb_maps_are_endomorphisms(G):
    assert enumerate_rb_group(G) == endomorphisms(G)


def test_every_rb_map_fixes_identity_and_tilde_is_involution():
    for B in enumerate_rb_group(S3):
        assert B(S3.identity) == S3.identity
        T = tilde_group(S3, B)
        assert check_rb_group(S3, T).ok
        assert tilde_group(S3, T) == B


def test_split_and_mirror():
    A3, C2 = s3_factorization(S3)
    B = split_rb_group(S3, A3, C2)
    assert check_rb_group(S3, B).ok
    fact = factorization(S3, A3, C2)
    for g, (g1, g2) in fact.items():
        assert S3.mul(g1, g2) == g
        assert B(g) == S3.inv(g2)
    mirror = GroupMap([S3.inv(fact[g][0]) for g in S3.elements()])
    assert not check_rb_group(S3, mirror).ok


def test_factorization_requires_exactness():
    A3, _ = s3_factorization(S3)
    with pytest.raises(FactorizationError):
        factorization(S3, A3, A3)


def test_descendent_group_of_inverse_is_opposite():
    assert descendent_group(S3, inverse_map(S3)).same_table(opposite_group(S3))


def test_descendent_group_of_trivial_is_same_group():
    assert descendent_group(S3, trivial_map(S3)).same_table(S3)


def test_descendent_groups_are_groups():
    for B in enumerate_rb_group(S3):
        D = descendent_group(S3, B)
        for g in S3.elements():
            assert D.mul(g, D.inv(g)) == D.identity


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_rb_group(BUILTIN_GROUPS["D4"](), cap=6)


def test_worker_count_does_not_change_result(monkeypatch):
    serial = enumerate_rb_group(S3, workers=1)
    assert enumerate_rb_group(S3, workers=2) == serial
    monkeypatch.setenv("RBHOPF_THREADS", "3")
    assert enumerate_rb_group(S3) == serial


def test_small_cases():
    C2 = cyclic(2)
    assert not is_rb_group(C2, GroupMap([1, 1]))
    assert tilde_group(S3, inverse_map(S3)) == trivial_map(S3)
    assert tilde_group(S3, trivial_map(S3)) == inverse_map(S3)
    A3, C = s3_factorization(S3)
    B = split_rb_group(S3, A3, C)
    assert B(S3.mul(n(S3, "(123)"), n(S3, "(12)"))) == n(S3, "(12)")
    assert split_rb_group(S3, list(S3.elements()), [S3.identity]) == trivial_map(S3)

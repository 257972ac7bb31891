"""Finite groups by Cayley table and Rota-Baxter operators on them.

A Rota-Baxter operator on a group ``G`` is a map ``B: G -> G`` with
``B(g) B(h) = B(g B(g) h B(g)^-1)`` for all ``g, h``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import AxiomViolation, BudgetExceeded, FactorizationError, SpecError
from .report import Report

DEFAULT_CAP = 8


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group on ``0..order-1`` given by its Cayley table.

    Use :meth:`from_table` to build one; it validates the group axioms and
    derives the identity and inverses.
    """

    cayley: tuple
    identity: int
    inverse: tuple
    names: tuple

    @classmethod
    def from_table(cls, cayley: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
        table = tuple(tuple(int(v) for v in row) for row in cayley)
        n = len(table)
        if n == 0:
            raise SpecError("a group has at least one element")
        full = set(range(n))
        for a, row in enumerate(table):
            if len(row) != n or set(row) != full:
                raise SpecError(f"Cayley row {a} is not a permutation of 0..{n - 1}")
        for b in range(n):
            if {table[a][b] for a in range(n)} != full:
                raise SpecError(f"Cayley column {b} is not a permutation of 0..{n - 1}")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise SpecError(f"associativity fails on ({a}, {b}, {c})")
        ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
        if len(ids) != 1:
            raise SpecError("table has no two-sided identity")
        e = ids[0]
        inv = tuple(table[a].index(e) for a in range(n))
        for a in range(n):
            if table[inv[a]][a] != e:
                raise SpecError(f"element {a} has no two-sided inverse")
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n:
            raise SpecError("names must be distinct and one per element")
        return cls(table, e, inv, names)

    @property
    def order(self) -> int:
        return len(self.cayley)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def prod(self, *xs: int) -> int:
        r = self.identity
        for x in xs:
            r = self.cayley[r][x]
        return r

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, name) -> int:
        if isinstance(name, int) and 0 <= name < self.order:
            return name
        try:
            return self.names.index(str(name))
        except ValueError:
            raise SpecError(f"unknown group element {name!r}") from None

    def is_abelian(self) -> bool:
        t = self.cayley
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return (self.identity in s and all(self.inverse[a] in s for a in s)
                and all(self.cayley[a][b] in s for a in s for b in s))

    def same_table(self, other: FiniteGroup) -> bool:
        return self.cayley == other.cayley


@dataclass(frozen=True, order=True)
class GroupMap:
    """A total map ``G -> G`` given by its image array."""

    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))

    def __call__(self, g: int) -> int:
        return self.image[g]

    def __len__(self):
        return len(self.image)


def _check_map(G: FiniteGroup, B: GroupMap):
    if len(B.image) != G.order or any(not 0 <= v < G.order for v in B.image):
        raise SpecError(f"group map {B.image} does not map a group of order {G.order} into itself")


def rb_target(G: FiniteGroup, B: GroupMap, g: int, h: int) -> int:
    """``g B(g) h B(g)^-1``, the argument of ``B`` on the right-hand side."""
    t = G.cayley
    b = B.image[g]
    return t[t[t[g][b]][h]][G.inverse[b]]


def check_rb_group(G: FiniteGroup, B: GroupMap) -> Report:
    _check_map(G, B)
    report = Report(label_format=lambda i: G.names[i])
    chk = report.check("B(g)B(h) = B(g B(g) h B(g)^-1)")
    for g, h in product(G.elements(), repeat=2):
        lhs = G.mul(B(g), B(h))
        rhs = B(rb_target(G, B, g, h))
        chk.record((g, h), lhs, rhs)
    return report


def is_rb_group(G: FiniteGroup, B: GroupMap) -> bool:
    t, inv, img = G.cayley, G.inverse, B.image
    for g in G.elements():
        b = img[g]
        left = t[g][b]
        binv = inv[b]
        for h in G.elements():
            if t[b][img[h]] != img[t[t[left][h]][binv]]:
                return False
    return True


def _search(G: FiniteGroup, prefix: tuple) -> list[tuple]:
    """Depth-first search over image arrays extending ``prefix``.

    Element ``k`` is assigned after ``0..k-1``; a pair ``(g, h)`` is checked as
    soon as ``B(g)``, ``B(h)`` and ``B(g B(g) h B(g)^-1)`` are all assigned.
    """
    n = G.order
    t, inv = G.cayley, G.inverse
    img = list(prefix) + [None] * (n - len(prefix))
    found = []

    def consistent(k):
        # pairs whose evaluation involves k for the first time
        for g in range(k + 1):
            b = img[g]
            left, binv = t[g][b], inv[b]
            for h in range(k + 1):
                x = t[t[left][h]][binv]
                if x > k or (g != k and h != k and x != k):
                    continue
                if t[b][img[h]] != img[x]:
                    return False
        return True

    for k in range(len(prefix)):
        if not consistent(k):
            return found

    def rec(k):
        if k == n:
            found.append(tuple(img))
            return
        for v in range(n):
            img[k] = v
            if consistent(k):
                rec(k + 1)
        img[k] = None

    rec(len(prefix))
    return found


def _search_task(args):
    G, prefix = args
    return _search(G, prefix)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("RBHOPF_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_rb_group(G: FiniteGroup, cap: int = DEFAULT_CAP, workers: int | None = None) -> list[GroupMap]:
    """All Rota-Baxter operators on ``G``, sorted by image array.

    Exhaustive backtracking search.  With several workers the candidate space
    is split by the image of element 0 and the slices are concatenated in
    order, so the output does not depend on the worker count.
    """
    if G.order > cap:
        raise BudgetExceeded(f"group order {G.order} exceeds enumeration cap {cap}")
    workers = worker_count() if workers is None else workers
    prefixes = [(v,) for v in range(G.order)]
    if workers > 1 and G.order > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_task, [(G, p) for p in prefixes]))
    else:
        parts = [_search(G, p) for p in prefixes]
    return [GroupMap(img) for part in parts for img in part]


def endomorphisms(G: FiniteGroup) -> list[GroupMap]:
    """All group homomorphisms ``G -> G``, by direct search on the homomorphism law."""
    n = G.order
    t = G.cayley
    out = []
    img = [None] * n

    def rec(k):
        if k == n:
            out.append(GroupMap(img))
            return
        for v in range(n):
            img[k] = v
            ok = True
            for a in range(k + 1):
                for b in range(k + 1):
                    c = t[a][b]
                    if c <= k and t[img[a]][img[b]] != img[c]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                rec(k + 1)
        img[k] = None

    rec(0)
    return out


def inverse_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(G.inverse)


def trivial_map(G: FiniteGroup) -> GroupMap:
    return GroupMap([G.identity] * G.order)


def tilde_group(G: FiniteGroup, B: GroupMap) -> GroupMap:
    """``g -> g^-1 B(g^-1)``."""
    _check_map(G, B)
    return GroupMap([G.mul(G.inv(g), B(G.inv(g))) for g in G.elements()])


def factorization(G: FiniteGroup, G1: Iterable[int], G2: Iterable[int]) -> dict[int, tuple[int, int]]:
    """Map each ``g`` to the unique pair ``(g1, g2)`` with ``g = g1 g2``.

    Raises :class:`FactorizationError` unless ``G1`` and ``G2`` are subgroups
    with ``G = G1 G2`` and ``G1 ∩ G2 = {e}``.
    """
    G1, G2 = sorted(set(G1)), sorted(set(G2))
    for name, H in (("first", G1), ("second", G2)):
        if any(not 0 <= a < G.order for a in H) or not G.is_subgroup(H):
            raise FactorizationError(f"{name} factor {H} is not a subgroup")
    if len(G1) * len(G2) != G.order:
        raise FactorizationError(f"|G1||G2| = {len(G1) * len(G2)} differs from |G| = {G.order}")
    fact = {}
    for a in G1:
        for b in G2:
            g = G.mul(a, b)
            if g in fact:
                raise FactorizationError(f"element {G.names[g]} has two factorizations")
            fact[g] = (a, b)
    return fact


def split_rb_group(G: FiniteGroup, G1: Iterable[int], G2: Iterable[int]) -> GroupMap:
    """``B(g1 g2) = g2^-1`` for an exact factorization ``G = G1 G2``."""
    fact = factorization(G, G1, G2)
    return GroupMap([G.inv(fact[g][1]) for g in G.elements()])


def descendent_group(G: FiniteGroup, B: GroupMap, check: bool = True) -> FiniteGroup:
    """``G`` with the product ``g * h = g B(g) h B(g)^-1``."""
    if check:
        report = check_rb_group(G, B)
        if not report.ok:
            raise AxiomViolation("not a Rota-Baxter operator on the group", report)
    table = [[rb_target(G, B, g, h) for h in G.elements()] for g in G.elements()]
    D = FiniteGroup.from_table(table, G.names)
    for g in G.elements():
        b = B(g)
        expected = G.prod(G.inv(b), G.inv(g), b)
        if D.inv(g) != expected:
            raise AxiomViolation(f"descendent inverse of {G.names[g]} is not B(g)^-1 g^-1 B(g)")
    return D


def opposite_group(G: FiniteGroup) -> FiniteGroup:
    return FiniteGroup.from_table([[G.mul(h, g) for h in G.elements()] for g in G.elements()], G.names)


# built-in groups

def cyclic(n: int) -> FiniteGroup:
    names = ["e", "a"] + [f"a^{k}" for k in range(2, n)]
    return FiniteGroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)], names[:n])


def _from_elements(elems: list, mul, names: list) -> FiniteGroup:
    idx = {x: i for i, x in enumerate(elems)}
    return FiniteGroup.from_table([[idx[mul(a, b)] for b in elems] for a in elems], names)


def klein_four() -> FiniteGroup:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return _from_elements(elems, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2), ["e", "a", "b", "ab"])


def _compose(p, q):
    # (p q)(i) = p(q(i)): apply q first
    return tuple(p[q[i]] for i in range(len(q)))


def _cycle_name(p) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(str(i + 1))
            i = p[i]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def symmetric3() -> FiniteGroup:
    """S3 on {1,2,3}; elements ordered e, (12), (13), (23), (123), (132)."""
    elems = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    return _from_elements(elems, _compose, [_cycle_name(p) for p in elems])


def dihedral4() -> FiniteGroup:
    """Symmetries of a square acting on vertices 0..3."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    rots = [(0, 1, 2, 3)]
    for _ in range(3):
        rots.append(_compose(r, rots[-1]))
    elems = rots + [_compose(p, s) for p in rots]
    names = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
    return _from_elements(elems, _compose, names)


def quaternion8() -> FiniteGroup:
    # quaternion units as (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return _from_elements(elems, mul, names)


def trivial_group() -> FiniteGroup:
    return FiniteGroup.from_table([[0]], ["e"])


BUILTIN_GROUPS = {
    "trivial": trivial_group,
    "C1": trivial_group,
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C5": lambda: cyclic(5),
    "C6": lambda: cyclic(6),
    "V4": klein_four,
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
}


def s3_factorization(G: FiniteGroup | None = None) -> tuple[list[int], list[int]]:
    """Index sets of A3 and <(12)> in the built-in S3."""
    G = G or symmetric3()
    return ([G.index(n) for n in ("e", "(123)", "(132)")], [G.index(n) for n in ("e", "(12)")])


def all_maps(G: FiniteGroup):
    for img in product(range(G.order), repeat=G.order):
        yield GroupMap(img)


import itertools
import random

import pytest
from hypothesis import given, settings

from unionstab.finite import builtin_group
from unionstab.homcount import BUDGET_ENV, BudgetExceeded, count_cost, count_homs, default_budget
from unionstab.words import GroupPresentation

from strategies import presentations


def brute_count(p, g):
    """Try every assignment of group elements to generators."""
    t, inv = g.table, g.inverses
    total = 0
    for values in itertools.product(range(g.order), repeat=p.generator_count):
        ok = True
        for r in p.relators:
            acc = g.identity
            for x in r:
                v = values[abs(x) - 1]
                acc = t[acc, v if x > 0 else inv[v]]
            if acc != g.identity:
                ok = False
                break
        total += ok
    return total


def s3_pairs():
    # S3 as permutations of three points, composed directly
    return list(itertools.permutations(range(3)))


def test_trefoil_into_s3_against_36_pairs(trefoil_group):
    def mul(a, b):
        return tuple(a[b[i]] for i in range(3))
    perms = s3_pairs()
    oracle = sum(1 for x in perms for y in perms
                 if mul(mul(x, y), x) == mul(mul(y, x), y))
    assert oracle == 12
    assert count_homs(trefoil_group, builtin_group("S3")) == oracle


@pytest.mark.parametrize("name", ["Z2", "S3", "A4", "S4"])
@pytest.mark.parametrize("rank", [0, 1, 2, 3])
def test_free_groups(name, rank):
    g = builtin_group(name)
    assert count_homs(GroupPresentation(rank), g) == g.order ** rank


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z5"])
def test_trefoil_into_abelian_groups(trefoil_group, name):
    # the trefoil group abelianizes to Z, so each element of A gives one hom
    g = builtin_group(name)
    assert count_homs(trefoil_group, g) == g.order


@pytest.mark.parametrize("name", ["S3", "D4", "A4", "S4", "A5", "D5"])
def test_trefoil_counts_against_brute_force(trefoil_group, name):
    g = builtin_group(name)
    assert count_homs(trefoil_group, g) == brute_count(trefoil_group, g)


def test_cyclic_relator():
    # <x | x^4> into Z4 has four homs, into S3 two
    p = GroupPresentation(1, ((1, 1, 1, 1),))
    assert count_homs(p, builtin_group("Z4")) == 4
    assert count_homs(p, builtin_group("S3")) == 1 + 3


@settings(max_examples=60, deadline=None)
@given(presentations(max_gens=3, max_rels=3, max_len=6))
def test_matches_brute_force(p):
    for name in ("Z3", "S3"):
        g = builtin_group(name)
        assert count_homs(p, g) == brute_count(p, g)


@settings(max_examples=40, deadline=None)
@given(presentations(max_gens=3, max_rels=3, max_len=6))
def test_symmetry_reduction_agrees(p):
    for name in ("S3", "A4"):
        g = builtin_group(name)
        assert count_homs(p, g, symmetry=True) == count_homs(p, g)


def test_parallel_agrees(trefoil_group):
    rng = random.Random(3)
    g = builtin_group("A4")
    for _ in range(3):
        n = rng.randint(2, 3)
        rels = tuple(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(6))
                     for _ in range(2))
        p = GroupPresentation(n, rels)
        assert count_homs(p, g, jobs=4) == count_homs(p, g)
    s4 = builtin_group("S4")
    assert count_homs(trefoil_group, s4, jobs=4) == brute_count(trefoil_group, s4)


def test_budget_refusal(trefoil_group):
    g = builtin_group("A5")
    cost = count_cost(trefoil_group, g)
    assert cost == 60 * 60
    with pytest.raises(BudgetExceeded) as err:
        count_homs(trefoil_group, g, budget=cost - 1)
    assert err.value.needed == cost
    assert count_homs(trefoil_group, g, budget=cost) == brute_count(trefoil_group, g)


def test_budget_environment(monkeypatch, trefoil_group):
    monkeypatch.setenv(BUDGET_ENV, "10")
    assert default_budget() == 10
    with pytest.raises(BudgetExceeded):
        count_homs(trefoil_group, builtin_group("S3"))

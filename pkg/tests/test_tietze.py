import random

import pytest

from unionstab.abelian import abelianization
from unionstab.diagram import parse_diagram, perturb
from unionstab.finite import builtin_group
from unionstab.homcount import count_homs
from unionstab.plat import attach_tunnels, two_bridge_plat
from unionstab.tietze import tietze_simplify
from unionstab.wirtinger import wirtinger
from unionstab.words import GroupPresentation

from conftest import THETA
from strategies import random_presentation

S3 = builtin_group("S3")


def test_trefoil_wirtinger_shrinks():
    w = wirtinger(two_bridge_plat([3]))
    assert (w.generator_count, len(w.relators)) == (3, 3)
    p = tietze_simplify(w)
    assert p.generator_count <= 2
    assert count_homs(p, S3) == count_homs(w, S3) == 12


def test_theta_simplifies_to_free_rank_two():
    p = tietze_simplify(wirtinger(parse_diagram(THETA)))
    assert p == GroupPresentation(2)


def test_randomized_invariance():
    # at least 500 small presentations: at most 4 generators, 4 relators, length 8
    rng = random.Random(20261019)
    for _ in range(600):
        p = random_presentation(rng)
        q = tietze_simplify(p)
        assert q.generator_count <= p.generator_count
        assert abelianization(q) == abelianization(p)
        assert count_homs(q, S3) == count_homs(p, S3)


def test_move_budget_is_respected():
    w = wirtinger(two_bridge_plat([2, 1, 1, 2]))
    assert tietze_simplify(w, budget=0).generator_count == w.generator_count


def test_commutator_relator_stays():
    p = GroupPresentation(2, ((1, 2, -1, -2),))
    q = tietze_simplify(p)
    assert (q.generator_count, len(q.relators)) == (2, 1)


def test_empty_and_duplicate_relators_dropped():
    r = (1, 1, 2, 2)
    p = GroupPresentation(2, ((), r, r[1:] + r[:1], tuple(-x for x in reversed(r))))
    q = tietze_simplify(p)
    assert q == GroupPresentation(2, (r,))


@pytest.mark.parametrize("seed", range(5))
def test_counts_never_grow(seed):
    rng = random.Random(seed)
    for _ in range(50):
        p = random_presentation(rng)
        q = tietze_simplify(p)
        assert q.generator_count <= p.generator_count
        assert len(q.relators) <= len(p.relators)


def test_six_three_under_under_simplifies_to_free_rank_three():
    # both tunnels, both intersections resolved with the first edge under
    w = wirtinger(perturb(attach_tunnels(two_bridge_plat([2, 1, 1, 2])), 4))
    q = tietze_simplify(w)
    assert (w.generator_count, len(w.relators)) == (40, 38)
    assert q == GroupPresentation(3)

import pytest

from unionstab.abelian import abelianization
from unionstab.diagram import parse_diagram, resolve_intersections
from unionstab.finite import BUILTIN_NAMES, builtin_group
from unionstab.homcount import count_homs
from unionstab.plat import two_bridge_plat
from unionstab.wirtinger import UnresolvedDiagram, wirtinger

from conftest import THETA


def test_unknot():
    p = wirtinger(parse_diagram("U 1\n"))
    assert (p.generator_count, len(p.relators)) == (1, 0)


def test_trefoil_plat():
    p = wirtinger(two_bridge_plat([3]))
    assert (p.generator_count, len(p.relators)) == (3, 3)
    assert abelianization(p).is_free_abelian(1)


def test_theta_curve():
    p = wirtinger(parse_diagram(THETA))
    assert (p.generator_count, len(p.relators)) == (3, 2)


def test_generators_in_discovery_order():
    p = wirtinger(two_bridge_plat([3]))
    assert p.generator_names == ("x1", "x2", "x3")
    assert wirtinger(two_bridge_plat([3])) == p


def test_unresolved_is_refused():
    with pytest.raises(UnresolvedDiagram):
        wirtinger(parse_diagram("V 1+ 2+ 3+\nV 3- 2- 1-\nV 4+ 5+ 6+\nV 6- 5- 4-\nI 1 4\n"))


def test_invalid_is_refused():
    with pytest.raises(ValueError):
        wirtinger(parse_diagram("Xp 1 2 3 4\n"))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_two_trefoil_diagrams_agree(trefoil_pd, name):
    g = builtin_group(name)
    assert count_homs(wirtinger(trefoil_pd), g) == count_homs(wirtinger(two_bridge_plat([3])), g)


def _resolutions(d):
    k = len(d.intersections)
    if not k:
        yield d
        return
    yield resolve_intersections(d, [True] * k)
    yield resolve_intersections(d, [False] * k)


def test_structural_counts_on_corpus(corpus):
    checked = 0
    for item in corpus:
        for d in _resolutions(parse_diagram(item["diagram"])):
            p = wirtinger(d)
            assert len(p.relators) == len(d.crossings) + len(d.vertices)
            # each crossing glues the two halves of its over-strand
            assert p.generator_count == len(d.labels()) - len(d.crossings) + d.free_loops
            checked += 1
    assert checked > 1500


def test_corpus_abelianizes_to_free_abelian(corpus):
    for item in corpus:
        t = len(item["tunnels"])
        for d in _resolutions(parse_diagram(item["diagram"])):
            assert abelianization(wirtinger(d)).is_free_abelian(1 + t), item["cf"]

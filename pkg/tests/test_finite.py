import numpy as np
import pytest

from unionstab.finite import (BUILTIN_NAMES, FiniteGroupTable, GroupTableError, builtin_group,
                              emit_cayley, parse_cayley)

ORDERS = {"Z2": 2, "Z3": 3, "Z4": 4, "Z5": 5, "S3": 6, "D4": 8, "A4": 12, "S4": 24, "A5": 60}
CLASSES = {"S3": 3, "D4": 5, "A4": 4, "S4": 5, "A5": 5}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_orders(name):
    g = builtin_group(name)
    assert g.order == ORDERS[name]
    assert g.table[g.identity, 3 % g.order] == 3 % g.order


@pytest.mark.parametrize("name, k", sorted(CLASSES.items()))
def test_class_counts(name, k):
    classes = builtin_group(name).conjugacy_classes()
    assert len(classes) == k
    assert sum(map(len, classes)) == builtin_group(name).order


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dihedral(n):
    g = builtin_group(f"D{n}")
    assert g.order == 2 * n
    # the centre is trivial for odd n and has order 2 for even n
    centre = [a for a in range(g.order) if all(g.mul(a, b) == g.mul(b, a) for b in range(g.order))]
    assert len(centre) == (2 if n % 2 == 0 else 1)


def test_d3_is_s3_sized_and_nonabelian():
    g = builtin_group("D3")
    assert not np.array_equal(g.table, g.table.T)


@pytest.mark.parametrize("name", ["Q8", "D2", "Z0", "S5"])
def test_unknown_groups(name):
    with pytest.raises(KeyError):
        builtin_group(name)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_cayley_round_trip(name):
    g = builtin_group(name)
    h = parse_cayley(emit_cayley(g))
    assert np.array_equal(g.table, h.table)


@pytest.mark.parametrize("table, msg", [
    ([[0, 1], [1, 1]], "inverse|identity"),
    ([[0, 1, 2], [1, 2, 0], [2, 0, 0]], None),
    ([[1, 0], [0, 1]], "identity"),
    ([[0, 2], [1, 0]], "closed"),
])
def test_bad_tables(table, msg):
    with pytest.raises(GroupTableError, match=msg):
        FiniteGroupTable(np.array(table))


def test_non_associative_table():
    # a Latin square with identity that is not a group (order 5 loop)
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupTableError, match="associative"):
        FiniteGroupTable(np.array(t))


def test_parse_cayley_errors():
    with pytest.raises(GroupTableError):
        parse_cayley("order 2\n0 1\n")
    with pytest.raises(GroupTableError):
        parse_cayley("size 2\n0 1\n1 0\n")

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from unionstab.abelian import AbelianInvariants, abelianization, relation_matrix, smith_diagonal
from unionstab.words import GroupPresentation

from strategies import presentations


def sympy_diagonal(rows):
    if not rows or not rows[0]:
        return []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return [d for d in diag if d]


matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=1, max_size=5))


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_smith_matches_sympy(rows):
    assert smith_diagonal(rows) == sympy_diagonal(rows)


@given(matrices)
def test_smith_divisibility(rows):
    d = smith_diagonal(rows)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x > 0 for x in d)


def test_trefoil_wirtinger_matrix():
    # x3 x1 X3 X2, x1 x2 X1 X3, x2 x3 X2 X1
    p = GroupPresentation(3, ((3, 1, -3, -2), (1, 2, -1, -3), (2, 3, -2, -1)))
    assert relation_matrix(p) == [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]
    assert abelianization(p) == AbelianInvariants(1)
    assert sympy_diagonal(relation_matrix(p)) == [1, 1]


@pytest.mark.parametrize("p, text", [
    (GroupPresentation(0), "0"),
    (GroupPresentation(2), "Z^2"),
    (GroupPresentation(1, ((1,) * 6,)), "Z/6"),
    (GroupPresentation(2, ((1, 1), (2, 2, 2, 2))), "Z/2 + Z/4"),
    (GroupPresentation(2, ((1, 1, 2, 2, 2),)), "Z^1"),
    (GroupPresentation(3, ((1, 1, 1, 1),)), "Z^2 + Z/4"),
])
def test_invariants(p, text):
    assert str(abelianization(p)) == text


def test_invariants_validate_divisibility():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))


@settings(max_examples=100, deadline=None)
@given(presentations())
def test_rank_plus_diagonal_is_generator_count(p):
    ab = abelianization(p)
    diag = sympy_diagonal(relation_matrix(p)) if p.relators else []
    assert ab.free_rank == p.generator_count - len(diag)
    assert list(ab.torsion) == [d for d in diag if d > 1]

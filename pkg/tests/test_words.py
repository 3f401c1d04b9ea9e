import pytest
from hypothesis import given, strategies as st

from unionstab.words import (GroupPresentation, PresentationParseError, canonical,
                             cyclic_reduce, emit_presentation, free_reduce, from_pairs,
                             inverse, parse_presentation, to_pairs)

from strategies import presentations, words


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, -1)) == ()


def test_cyclic_reduce():
    assert cyclic_reduce((-1, 2, 3, 1)) == (2, 3)


def test_pairs():
    w = from_pairs([(0, 1), (2, -1)])
    assert w == (1, -3)
    assert to_pairs(w) == [(0, 1), (2, -1)]


@given(words(3))
def test_inverse_cancels(w):
    assert free_reduce(tuple(w) + inverse(w)) == ()


@given(words(3))
def test_canonical_ignores_rotation_and_inversion(w):
    w = cyclic_reduce(w)
    if w:
        rotated = w[1:] + w[:1]
        assert canonical(rotated) == canonical(w) == canonical(inverse(w))


def test_presentation_rejects_missing_generator():
    with pytest.raises(ValueError):
        GroupPresentation(1, ((2,),))


@given(presentations())
def test_round_trip(p):
    text = emit_presentation(p)
    assert parse_presentation(text) == p
    assert emit_presentation(parse_presentation(text)) == text


def test_text_format():
    p = GroupPresentation(2, ((1, 2, -1, -2), ()))
    assert emit_presentation(p) == "gens 2\ng1 g2 G1 G2\n1\n"


@pytest.mark.parametrize("text, where", [
    ("", "line 1, column 1"),
    ("gens x\n", "line 1, column 1"),
    ("gens 2\ng1 g3\n", "line 2, column 4"),
    ("gens 2\n\ng1 h2\n", "line 3, column 4"),
])
def test_parse_errors_locate_problem(text, where):
    with pytest.raises(PresentationParseError, match=where):
        parse_presentation(text)

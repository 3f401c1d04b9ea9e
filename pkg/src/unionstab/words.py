"""Words in free groups and finite group presentations.

A word is a tuple of nonzero integers: letter ``k + 1`` is generator ``k`` and
``-(k + 1)`` its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]


def letter(gen: int, exp: int = 1) -> int:
    return (gen + 1) if exp > 0 else -(gen + 1)


def gen_of(x: int) -> int:
    return abs(x) - 1


def from_pairs(pairs: Iterable[tuple[int, int]]) -> Word:
    return tuple(letter(g, e) for g, e in pairs)


def to_pairs(w: Word) -> list[tuple[int, int]]:
    return [(gen_of(x), 1 if x > 0 else -1) for x in w]


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def canonical(w: Sequence[int]) -> Word:
    """Least cyclic rotation of a cyclically reduced word or of its inverse."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    best = None
    for v in (w, inverse(w)):
        for k in range(len(v)):
            rot = v[k:] + v[:k]
            if best is None or rot < best:
                best = rot
    return best


class PresentationParseError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Word, ...] = ()
    generator_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("negative generator count")
        rels = tuple(free_reduce(r) for r in self.relators)
        for r in rels:
            for x in r:
                if x == 0 or gen_of(x) >= self.generator_count:
                    raise ValueError(f"letter {x} references a missing generator")
        object.__setattr__(self, "relators", rels)
        if self.generator_names is not None:
            names = tuple(self.generator_names)
            if len(names) != self.generator_count:
                raise ValueError("one name per generator")
            object.__setattr__(self, "generator_names", names)

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def size(self) -> dict:
        return {"generators": self.generator_count, "relators": len(self.relators),
                "length": self.total_length}


def _token(x: int) -> str:
    return ("g" if x > 0 else "G") + str(abs(x))


def emit_presentation(p: GroupPresentation) -> str:
    lines = [f"gens {p.generator_count}"]
    for r in p.relators:
        lines.append(" ".join(_token(x) for x in r) if r else "1")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> GroupPresentation:
    n = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            toks = line.split()
            if len(toks) != 2 or toks[0] != "gens" or not toks[1].isdigit():
                raise PresentationParseError(f"line {lineno}, column 1: expected 'gens n'")
            n = int(toks[1])
            continue
        if line == "1":
            rels.append(())
            continue
        word = []
        col = 0
        for tok in line.split():
            col = raw.index(tok, col) + 1
            if len(tok) < 2 or tok[0] not in "gG" or not tok[1:].isdigit():
                raise PresentationParseError(
                    f"line {lineno}, column {col}: bad letter {tok!r}, expected g<k> or G<k>")
            k = int(tok[1:])
            if not 1 <= k <= n:
                raise PresentationParseError(
                    f"line {lineno}, column {col}: generator {k} outside 1..{n}")
            word.append(k if tok[0] == "g" else -k)
            col += len(tok) - 1
        rels.append(tuple(word))
    if n is None:
        raise PresentationParseError("line 1, column 1: expected 'gens n'")
    return GroupPresentation(n, tuple(rels))

"""Presentation simplification by Tietze transformations."""
from __future__ import annotations

from .words import (GroupPresentation, Word, canonical, cyclic_reduce, free_reduce,
                    gen_of, inverse)

DEFAULT_MOVES = 10_000
GROWTH_LIMIT = 4


def _tidy(rels: list[Word]) -> list[Word]:
    """Cyclically reduce, drop empty relators and duplicates up to rotation/inversion."""
    out, seen = [], set()
    for r in rels:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = canonical(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _substitute(r: Word, gen: int, image: Word) -> Word:
    out: list[int] = []
    for x in r:
        if gen_of(x) == gen:
            out.extend(image if x > 0 else inverse(image))
        else:
            out.append(x)
    return free_reduce(out)


def _drop_generator(r: Word, gen: int) -> Word:
    # shift indices above the removed generator down by one
    return tuple(x if gen_of(x) < gen else (x - 1 if x > 0 else x + 1) for x in r)


def _elimination(rels: list[Word], limit: int):
    """Best single elimination: (new relators, removed generator) or None."""
    best = None
    for i, r in enumerate(rels):
        counts: dict[int, int] = {}
        for x in r:
            counts[gen_of(x)] = counts.get(gen_of(x), 0) + 1
        for gen, c in sorted(counts.items()):
            if c != 1:
                continue
            k = next(p for p, x in enumerate(r) if gen_of(x) == gen)
            rot = r[k:] + r[:k]
            rest = rot[1:]
            # rot = x^e rest = 1, so x = rest^-1 when e = +1 and x = rest when e = -1
            image = inverse(rest) if rot[0] > 0 else rest
            new = [_substitute(s, gen, image) for j, s in enumerate(rels) if j != i]
            length = sum(len(s) for s in new)
            if length > limit:
                continue
            if best is None or length < best[0]:
                best = (length, new, gen)
    return None if best is None else (best[1], best[2])


def tietze_simplify(p: GroupPresentation, budget: int = DEFAULT_MOVES) -> GroupPresentation:
    """Simplify ``p`` to an isomorphic presentation.

    Moves: drop empty relators, drop duplicates (up to cyclic rotation and
    inversion), and eliminate a generator that occurs exactly once in some
    relator.  An elimination that would take the total relator length beyond
    four times the original is skipped.  Stops when no move applies or after
    ``budget`` moves.
    """
    n = p.generator_count
    limit = GROWTH_LIMIT * max(1, p.total_length)
    rels = list(p.relators)
    moves = 0
    tidy = _tidy(rels)
    moves += len(rels) - len(tidy)
    rels = tidy
    while moves < budget:
        found = _elimination(rels, limit)
        if found is None:
            break
        new, gen = found
        rels = [_drop_generator(s, gen) for s in new]
        n -= 1
        moves += 1
        tidy = _tidy(rels)
        moves += len(rels) - len(tidy)
        rels = tidy
    return GroupPresentation(n, tuple(rels))

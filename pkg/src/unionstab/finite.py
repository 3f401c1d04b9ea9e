"""Finite groups given by Cayley tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np


class GroupTableError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """Multiplication table over elements ``0..order-1``; ``table[a, b] = ab``."""
    table: np.ndarray
    name: str = "G"
    identity: int = 0
    inverses: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise GroupTableError("table must be a nonempty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise GroupTableError("table entries must be element indices (not closed)")
        e = self.identity
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise GroupTableError(f"element {e} is not an identity")
        # associativity: (ab)c == a(bc) for all triples
        left = t[t, :]            # left[a, b, c] = (ab)c
        right = t[:, t]           # right[a, b, c] = a(bc)
        if not np.array_equal(left, right):
            raise GroupTableError("table is not associative")
        inv = np.argmax(t == e, axis=1)
        if not np.all(t[np.arange(n), inv] == e):
            raise GroupTableError("some element has no inverse")
        t.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverses", inv)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def conjugacy_classes(self) -> list[list[int]]:
        n, t, inv = self.order, self.table, self.inverses
        seen = [False] * n
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            cls = sorted({int(t[t[g, a], inv[g]]) for g in range(n)})
            for c in cls:
                seen[c] = True
            classes.append(cls)
        return classes


def _perm_group(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(len(g)))
                if q not in seen:
                    seen.add(q)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    return [ident] + sorted(e for e in elems if e != ident)


def _from_perms(elems, name) -> FiniteGroupTable:
    index = {e: k for k, e in enumerate(elems)}
    n = len(elems)
    t = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(elems):
        for b, pb in enumerate(elems):
            # ab means apply b first, then a
            t[a, b] = index[tuple(pa[pb[i]] for i in range(len(pa)))]
    return FiniteGroupTable(t, name)


def _even(p) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


def _symmetric(n):
    return sorted(permutations(range(n)))


@lru_cache(maxsize=None)
def builtin_group(name: str) -> FiniteGroupTable:
    key = name.strip().upper()
    if key.startswith("Z") and key[1:].isdigit():
        n = int(key[1:])
        if n < 1:
            raise KeyError(name)
        t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
        return FiniteGroupTable(t, f"Z{n}")
    if key in ("S3", "S4"):
        n = int(key[1])
        ident = tuple(range(n))
        elems = [ident] + [p for p in _symmetric(n) if p != ident]
        return _from_perms(elems, key)
    if key in ("A4", "A5"):
        n = int(key[1])
        ident = tuple(range(n))
        elems = [ident] + [p for p in _symmetric(n) if p != ident and _even(p)]
        return _from_perms(elems, key)
    if key.startswith("D") and key[1:].isdigit():
        # symmetries of a regular n-gon, of order 2n
        n = int(key[1:])
        if n < 3:
            raise KeyError(name)
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return _from_perms(_perm_group([rot, ref]), f"D{n}")
    raise KeyError(f"unknown group {name!r}; known: Z<n>, D<n>, S3, S4, A4, A5")


BUILTIN_NAMES = ("Z2", "Z3", "Z4", "Z5", "S3", "D4", "A4", "S4", "A5")


def parse_cayley(text: str, name: str = "G") -> FiniteGroupTable:
    rows = []
    order = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if order is None:
            if len(line) != 2 or line[0] != "order" or not line[1].isdigit():
                raise GroupTableError(f"line {lineno}: expected 'order n'")
            order = int(line[1])
            continue
        try:
            row = [int(t) for t in line]
        except ValueError:
            raise GroupTableError(f"line {lineno}: non-integer entry") from None
        if len(row) != order:
            raise GroupTableError(f"line {lineno}: expected {order} entries, got {len(row)}")
        rows.append(row)
    if order is None or len(rows) != order:
        raise GroupTableError(f"expected {order} table rows, got {len(rows)}")
    return FiniteGroupTable(np.array(rows), name)


def emit_cayley(g: FiniteGroupTable) -> str:
    lines = [f"order {g.order}"]
    lines += [" ".join(str(int(v)) for v in row) for row in g.table]
    return "\n".join(lines) + "\n"

"""Exact counting of homomorphisms from a finitely presented group to a finite group.

Assignments of group elements to generators are enumerated generator by
generator.  A relator is checked as soon as every generator in it has a
value, so partial assignments that already break a relator are dropped
early.  Generators that occur in no relator contribute a factor ``|G|`` each.

With symmetry reduction the first enumerated generator runs over one
representative per conjugacy class and each completion count is weighted by
the class size.  Simultaneous conjugation permutes homomorphisms and maps
the assignments with first value ``a`` bijectively onto those with first
value ``gag^-1``, so this sum is exact.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .finite import FiniteGroupTable
from .words import GroupPresentation, gen_of

DEFAULT_BUDGET = 2 ** 32
BUDGET_ENV = "UNIONSTAB_BUDGET"
CHUNK = 1 << 20


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"counting needs up to {needed} relator evaluations, above the budget of {budget}")
        self.needed = needed
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]                 # generators that occur in relators, in enumeration order
    checks: tuple[tuple[tuple[int, bool], ...], ...]  # per depth: relators completed there
    free: int                              # generators occurring in no relator


def _plan(p: GroupPresentation) -> _Plan:
    rels = [r for r in p.relators if r]
    used = [set(gen_of(x) for x in r) for r in rels]
    involved = set().union(*used) if used else set()
    order: list[int] = []
    remaining = set(involved)
    # greedy: next generator completes the most relators, then touches the most
    while remaining:
        def score(gen):
            done = set(order) | {gen}
            complete = sum(1 for u in used if u <= done and not u <= set(order))
            touch = sum(1 for u in used if gen in u)
            return (complete, touch, -gen)
        best = max(sorted(remaining), key=score)
        order.append(best)
        remaining.remove(best)
    pos = {g: k for k, g in enumerate(order)}
    checks: list[list] = [[] for _ in order]
    for r, u in zip(rels, used):
        depth = max(pos[g] for g in u)
        checks[depth].append(tuple((pos[gen_of(x)], x > 0) for x in r))
    return _Plan(tuple(order), tuple(tuple(c) for c in checks),
                 p.generator_count - len(involved))


def _satisfied(vals: np.ndarray, rel, t: np.ndarray, inv: np.ndarray) -> np.ndarray:
    acc = None
    for k, positive in rel:
        col = vals[:, k]
        x = col if positive else inv[col]
        acc = x if acc is None else t[acc, x]
    return acc == 0


def _extend(vals: np.ndarray, depth: int, plan: _Plan, t, inv) -> int:
    n = t.shape[0]
    if depth == len(plan.order):
        return len(vals)
    total = 0
    # keep each block of extended assignments around CHUNK rows
    step = max(1, CHUNK // n)
    for s in range(0, len(vals), step):
        block = vals[s:s + step]
        m = len(block)
        ext = np.empty((m * n, depth + 1), dtype=np.int16)
        ext[:, :depth] = np.repeat(block, n, axis=0)
        ext[:, depth] = np.tile(np.arange(n, dtype=np.int16), m)
        keep = None
        for rel in plan.checks[depth]:
            ok = _satisfied(ext, rel, t, inv)
            keep = ok if keep is None else keep & ok
        if keep is not None:
            ext = ext[keep]
        if len(ext):
            total += _extend(ext, depth + 1, plan, t, inv)
    return total


def _count_firsts(args) -> int:
    p, table, firsts, weights = args
    plan = _plan(p)
    t = np.asarray(table, dtype=np.int64)
    inv = np.argmax(t == 0, axis=1)
    total = 0
    for a, w in zip(firsts, weights):
        start = np.array([[a]], dtype=np.int16)
        keep = True
        for rel in plan.checks[0]:
            keep = keep and bool(_satisfied(start, rel, t, inv)[0])
        if keep:
            total += w * _extend(start, 1, plan, t, inv)
    return total


def count_cost(p: GroupPresentation, g: FiniteGroupTable, symmetry: bool = False) -> int:
    """Worst-case relator evaluations of the enumeration, before pruning."""
    plan = _plan(p)
    k = len(plan.order)
    if k == 0:
        return 0
    first = len(g.conjugacy_classes()) if symmetry else g.order
    return first * g.order ** (k - 1) * max(1, len(p.relators))


def count_homs(p: GroupPresentation, g: FiniteGroupTable, budget: int | None = None,
               symmetry: bool = False, jobs: int = 1) -> int:
    """Number of homomorphisms from the presented group to ``g``.

    Refuses with BudgetExceeded when the worst-case number of relator
    evaluations exceeds ``budget``.  ``jobs > 1`` splits the values of the
    first generator across worker processes; the partial counts are added
    exactly, so the result does not depend on ``jobs``.
    """
    budget = default_budget() if budget is None else budget
    cost = count_cost(p, g, symmetry)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    plan = _plan(p)
    n = g.order
    factor = n ** plan.free
    if not plan.order:
        return factor
    if symmetry:
        classes = g.conjugacy_classes()
        firsts = [c[0] for c in classes]
        weights = [len(c) for c in classes]
    else:
        firsts = list(range(n))
        weights = [1] * n
    table = g.table
    if jobs <= 1 or len(firsts) == 1:
        return factor * _count_firsts((p, table, firsts, weights))
    parts = [(p, table, firsts[k::jobs], weights[k::jobs]) for k in range(jobs)]
    parts = [x for x in parts if x[2]]
    with ProcessPoolExecutor(max_workers=len(parts)) as ex:
        partial = list(ex.map(_count_firsts, parts))
    return factor * sum(partial)

"""Witnesses that a group is not free of a given rank.

A free group of rank g has exactly |G|^g homomorphisms to a finite group G.
A different count for any G proves the group is not free of rank g.  Equal
counts prove nothing, so the search can only ever end in a witness, a
mismatch of abelianizations, or an honest "inconclusive".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .abelian import AbelianInvariants, abelianization
from .finite import FiniteGroupTable
from .homcount import BudgetExceeded, count_homs
from .words import GroupPresentation


@dataclass(frozen=True)
class NotFreeOfRank:
    rank: int
    group: str
    expected: int
    actual: int
    kind: str = field(default="NotFreeOfRank", init=False)


@dataclass(frozen=True)
class AbelianizationMismatch:
    found: AbelianInvariants
    expected_rank: int
    kind: str = field(default="AbelianizationMismatch", init=False)


@dataclass(frozen=True)
class Inconclusive:
    tested: tuple[str, ...]
    skipped: tuple[tuple[str, str], ...] = ()   # (group, refusal message)
    kind: str = field(default="Inconclusive", init=False)


@dataclass(frozen=True)
class VerdictReport:
    verdict: NotFreeOfRank | AbelianizationMismatch | Inconclusive
    counts: tuple[tuple[str, int, int], ...] = ()   # (group, expected, actual) per tested group

    @property
    def not_free(self) -> bool:
        return isinstance(self.verdict, NotFreeOfRank)

    def to_dict(self) -> dict:
        v = self.verdict
        out: dict = {"verdict": v.kind}
        if isinstance(v, NotFreeOfRank):
            out.update(rank=v.rank, group=v.group, expected=v.expected, actual=v.actual)
        elif isinstance(v, AbelianizationMismatch):
            out.update(found=str(v.found), free_rank=v.found.free_rank,
                       torsion=list(v.found.torsion), expected_rank=v.expected_rank)
        else:
            out.update(tested=list(v.tested),
                       skipped=[{"group": g, "reason": r} for g, r in v.skipped])
        out["counts"] = [{"group": g, "expected": e, "actual": a} for g, e, a in self.counts]
        return out

    def summary(self) -> str:
        v = self.verdict
        if isinstance(v, NotFreeOfRank):
            return f"NotFree({v.rank}) via {v.group}: {v.actual} != {v.expected}"
        if isinstance(v, AbelianizationMismatch):
            return f"abelianization {v.found}, expected Z^{v.expected_rank}"
        extra = f", skipped {','.join(g for g, _ in v.skipped)}" if v.skipped else ""
        return f"Inconclusive (tested {','.join(v.tested) or 'none'}{extra})"


def not_free_witness(p: GroupPresentation, rank: int, candidates: Sequence[FiniteGroupTable],
                     budget: int | None = None, symmetry: bool = False,
                     jobs: int = 1) -> VerdictReport:
    """Look for a finite group whose hom count differs from that of a free group."""
    ab = abelianization(p)
    if not ab.is_free_abelian(rank):
        return VerdictReport(AbelianizationMismatch(ab, rank))
    tested, skipped, counts = [], [], []
    for g in candidates:
        expected = g.order ** rank
        try:
            actual = count_homs(p, g, budget=budget, symmetry=symmetry, jobs=jobs)
        except BudgetExceeded as e:
            skipped.append((g.name, str(e)))
            continue
        tested.append(g.name)
        counts.append((g.name, expected, actual))
        if actual != expected:
            return VerdictReport(NotFreeOfRank(rank, g.name, expected, actual), tuple(counts))
    return VerdictReport(Inconclusive(tuple(tested), tuple(skipped)), tuple(counts))

"""Exact crossing counts for straight-line edges between the two layers,
plus the six-way classification of how a pair of placed requests can cross.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import PlacementState, Request


class UnclassifiablePairError(RuntimeError):
    """A pair's (placed, swapped) counts match none of the six known kinds.

    Unreachable for valid inputs; raising it signals a counter bug.
    """


class PairKind(Enum):
    ONE_ONE = frozenset({1})
    TWO_ONE = frozenset({2, 1})
    THREE_ZERO = frozenset({3, 0})
    THREE_ONE = frozenset({3, 1})
    FOUR_ZERO = frozenset({4, 0})
    TWO_TWO = frozenset({2})


@dataclass(frozen=True)
class PairCrossKind:
    kind: PairKind
    placed_count: int
    swapped_count: int

    @property
    def unavoidable(self) -> int:
        return min(self.placed_count, self.swapped_count)

    @property
    def avoidable(self) -> int:
        return abs(self.placed_count - self.swapped_count)


def edges_cross(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """True iff the straight edges (vertex, slot) strictly cross.

    Edges sharing a vertex or a slot meet only at that endpoint and do not
    count as crossing.
    """
    (v1, s1), (v2, s2) = e1, e2
    return (v1 - v2) * (s1 - s2) < 0


def pair_crossings(r1: Request, s1: int, r2: Request, s2: int) -> int:
    """Number of crossing edge pairs between two placed requests."""
    if s1 == s2:
        raise ValueError(f"requests share slot {s1}")
    count = 0
    for v1 in r1.vertices:
        for v2 in r2.vertices:
            if edges_cross((v1, s1), (v2, s2)):
                count += 1
    return count


def total_crossings(placements) -> int:
    """Sum of pairwise crossings over all placed requests.

    Accepts a PlacementState or any iterable of (slot, Request) pairs.
    """
    if isinstance(placements, PlacementState):
        items = placements.items()
    else:
        items = list(placements)
    total = 0
    for i in range(len(items)):
        s1, r1 = items[i]
        for j in range(i + 1, len(items)):
            s2, r2 = items[j]
            total += pair_crossings(r1, s1, r2, s2)
    return total


def classify_pair(r1: Request, s1: int, r2: Request, s2: int) -> PairCrossKind:
    """Classify a placed pair by its crossing counts in the given and the
    swapped slot order."""
    placed = pair_crossings(r1, s1, r2, s2)
    swapped = pair_crossings(r1, s2, r2, s1)
    label = frozenset({placed, swapped})
    for kind in PairKind:
        if kind.value == label:
            return PairCrossKind(kind=kind, placed_count=placed, swapped_count=swapped)
    raise UnclassifiablePairError(
        f"counts ({placed}, {swapped}) for {r1}@{s1} vs {r2}@{s2} match no known kind"
    )


def avoidable_split(alg_total: int, opt_total: int) -> tuple[int, int]:
    """Split an algorithm's crossing count into (unavoidable, avoidable)."""
    if opt_total < 0 or alg_total < opt_total:
        raise ValueError(
            f"algorithm total {alg_total} cannot undercut the optimum {opt_total}"
        )
    return opt_total, alg_total - opt_total

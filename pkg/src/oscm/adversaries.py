"""Adversarial request sources: the non-competitiveness construction on
general graphs, the adaptive 4/3 lower-bound strategy for 2-regular
instances, and the static family on which the barycenter rule degrades.
"""

from __future__ import annotations

from typing import Mapping, Optional

from .model import (
    Instance,
    PlacementState,
    RegularityClass,
    Request,
    free_slots,
    make_request,
)


class ProtocolError(RuntimeError):
    """The algorithm's observed placements violate the game protocol."""


class InfeasibleFillError(RuntimeError):
    """Leftover degree deficits cannot be paired without a self-loop."""


def endgame_fill(deficits: Mapping[int, int]) -> list[Request]:
    """Pair remaining degree deficits into requests completing 2-regularity.

    Repeatedly joins the two distinct vertices with the largest remaining
    deficit (leftmost on ties); for the all-deficit-two multisets produced
    by the adaptive rounds this yields a chain closed by one final request.
    """
    remaining = {v: d for v, d in deficits.items() if d > 0}
    if any(d > 2 for d in remaining.values()):
        raise InfeasibleFillError(f"deficit above two in {remaining}")
    out: list[Request] = []
    while remaining:
        if len(remaining) == 1:
            raise InfeasibleFillError(f"cannot pair leftover deficits {remaining}")
        x, y = sorted(remaining, key=lambda v: (-remaining[v], v))[:2]
        out.append(make_request(x, y))
        for v in (x, y):
            remaining[v] -= 1
            if remaining[v] == 0:
                del remaining[v]
    return out


class Thm1Adversary:
    """Feeds a path of consecutive-pair requests, then duplicates the pair
    nearest the far end from wherever the single free slot was left.

    The completed sequence is a valid general instance; it is 2-regular
    only at the path's interior vertices.
    """

    name = "thm1"

    def __init__(self, n: int):
        if n < 4:
            raise ValueError(f"need n >= 4, got {n}")
        self.n = n
        self._emitted = 0

    def next_request(self, state: PlacementState) -> Optional[Request]:
        if self._emitted < self.n - 1:
            self._emitted += 1
            return make_request(self._emitted, self._emitted + 1)
        if self._emitted == self.n - 1:
            free = free_slots(state)
            if len(free) != 1:
                raise ProtocolError(f"expected one free slot, found {free}")
            self._emitted += 1
            # Attack the side far from the hole: a left hole gets the
            # rightmost pair again, and vice versa.
            if free[0] <= (self.n + 1) // 2:
                return make_request(self.n - 1, self.n)
            return make_request(1, 2)
        return None


CASE1_OFFSETS = ((1, 2), (2, 4), (1, 3))
CASE2_OFFSETS = ((4, 5), (3, 5), (1, 2), (1, 2))
PROBE_OFFSET = (3, 4)
ENDGAME_RESERVE = 6


def thm2_board_size(rounds: int) -> int:
    return 5 * rounds + ENDGAME_RESERVE


class Thm2Adversary:
    """Adaptive 2-regular strategy: repeatedly probes the five leftmost free
    slots and edge-free vertices with one request, branches on where the
    algorithm placed it, and finishes with a chain once at most six free
    slots remain. Sized so the endgame premise always holds."""

    name = "thm2"

    def __init__(self, rounds: int):
        if rounds < 1:
            raise ValueError(f"need rounds >= 1, got {rounds}")
        self.rounds = rounds
        self.n = thm2_board_size(rounds)
        self._pending: list[Request] = []
        self._probe_locals: Optional[tuple[list[int], list[int]]] = None
        self._known_slots: frozenset[int] = frozenset()
        self._endgame_done = False

    def _edge_free(self, state: PlacementState) -> list[int]:
        deg = state.degrees()
        return [v for v in range(1, self.n + 1) if deg[v] == 0]

    def _resolve_branch(self, state: PlacementState) -> None:
        new_slots = set(state.placed) - self._known_slots
        if len(new_slots) != 1:
            raise ProtocolError(f"expected one new placement, saw {sorted(new_slots)}")
        placed_at = new_slots.pop()
        slots, verts = self._probe_locals
        self._probe_locals = None
        offsets = CASE1_OFFSETS if placed_at <= slots[2] else CASE2_OFFSETS
        self._pending = [make_request(verts[i - 1], verts[j - 1]) for i, j in offsets]

    def next_request(self, state: PlacementState) -> Optional[Request]:
        if self._probe_locals is not None:
            self._resolve_branch(state)
        if self._pending:
            self._known_slots = frozenset(state.placed)
            return self._pending.pop(0)
        free = free_slots(state)
        if not free or self._endgame_done:
            return None
        if len(free) > ENDGAME_RESERVE:
            slots = free[:5]
            verts = self._edge_free(state)[:5]
            if len(verts) < 5:
                raise ProtocolError("fewer than five edge-free vertices mid-game")
            self._probe_locals = (slots, verts)
            self._known_slots = frozenset(state.placed)
            return make_request(verts[PROBE_OFFSET[0] - 1], verts[PROBE_OFFSET[1] - 1])
        deg = state.degrees()
        deficits = {v: 2 - deg[v] for v in range(1, self.n + 1) if deg[v] < 2}
        self._pending = endgame_fill(deficits)
        if len(self._pending) != len(free):
            raise ProtocolError(
                f"endgame produced {len(self._pending)} requests for {len(free)} slots"
            )
        self._endgame_done = True
        return self.next_request(state)


def thm1_adversary(n: int) -> Thm1Adversary:
    return Thm1Adversary(n)


def thm2_adversary(rounds: int) -> Thm2Adversary:
    return Thm2Adversary(rounds)


def fig8_instance(n: int) -> Instance:
    """Duplicated consecutive pairs, presented right to left; the barycenter
    rule walks leftward and must dump the final request at the far right."""
    if n < 4 or n % 2 != 0:
        raise ValueError(f"need even n >= 4, got {n}")
    requests = []
    for hi in range(n, 0, -2):
        pair = make_request(hi - 1, hi)
        requests.extend([pair, pair])
    return Instance(
        n=n, requests=tuple(requests), regularity_class=RegularityClass.TWO_REGULAR
    )

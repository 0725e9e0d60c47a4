"""Online placement algorithms and the game loop that plays them against a
request source (a fixed instance or an adaptive adversary).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Protocol, Union

from .crossings import edges_cross, total_crossings
from .model import Instance, PlacementState, Request, apply, empty_state, free_slots
from .propagation import ArrowMismatchError, DegreeOverflowError, arrows


class NoFreeSlotError(RuntimeError):
    """The algorithm was asked to place a request into a full layout."""


@dataclass(frozen=True)
class OnlineAlgorithm:
    name: str
    choose: Callable[[PlacementState, Request], int]


@dataclass(frozen=True)
class TraceStep:
    request: Request
    slot: int
    edge_edge_total: int
    edge_arrow_total: Optional[int]


@dataclass(frozen=True)
class Trace:
    n: int
    steps: tuple[TraceStep, ...]
    final_state: PlacementState

    @property
    def requests(self) -> list[Request]:
        return [step.request for step in self.steps]


class RequestSource(Protocol):
    n: int

    def next_request(self, state: PlacementState) -> Optional[Request]: ...


def edge_arrow_crossings(state: PlacementState) -> int:
    """Crossings between placed edges and the state's propagation arrows."""
    edges = state.edges()
    return sum(
        1 for arrow in arrows(state) for edge in edges if edges_cross(edge, arrow)
    )


def barycenter_choose(state: PlacementState, request: Request) -> int:
    """Aim for the slot under the midpoint of the requested vertices; if it
    is taken, pick the nearest free slot, leftmost on distance ties."""
    free = free_slots(state)
    if not free:
        raise NoFreeSlotError("no free slot left")
    target = (request.a + request.b) // 2
    return min(free, key=lambda t: (abs(t - target), t))


def greedy_choose(state: PlacementState, request: Request) -> int:
    """Pick the free slot whose simulated insertion minimizes total
    edge-edge plus edge-arrow crossings; the ascending scan with strict
    improvement keeps the leftmost slot on ties."""
    free = free_slots(state)
    if not free:
        raise NoFreeSlotError("no free slot left")
    if len(free) == 1:
        return free[0]
    best_slot = None
    best_score = None
    for slot in free:
        candidate = apply(state, request, slot)
        score = total_crossings(candidate) + edge_arrow_crossings(candidate)
        if best_score is None or score < best_score:
            best_score = score
            best_slot = slot
    return best_slot


def first_fit_choose(state: PlacementState, request: Request) -> int:
    """Baseline: always the lowest-index free slot."""
    free = free_slots(state)
    if not free:
        raise NoFreeSlotError("no free slot left")
    return free[0]


BARYCENTER = OnlineAlgorithm(name="barycenter", choose=barycenter_choose)
GREEDY = OnlineAlgorithm(name="greedy", choose=greedy_choose)
FIRST_FIT = OnlineAlgorithm(name="first_fit", choose=first_fit_choose)

ALGORITHMS = {alg.name: alg for alg in (BARYCENTER, GREEDY, FIRST_FIT)}


def get_algorithm(name: str) -> OnlineAlgorithm:
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise KeyError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}")


class _InstanceSource:
    """Adapts a fixed Instance to the adaptive request-source protocol."""

    def __init__(self, instance: Instance):
        self.n = instance.n
        self._requests = list(instance.requests)
        self._pos = 0

    def next_request(self, state: PlacementState) -> Optional[Request]:
        if self._pos >= len(self._requests):
            return None
        req = self._requests[self._pos]
        self._pos += 1
        return req


def play(source: Union[Instance, RequestSource], algorithm: OnlineAlgorithm) -> Trace:
    """Run a full online game, recording per-step crossing totals.

    The edge-arrow total is None on states where arrows are undefined
    (degree above two or deficit/capacity mismatch, possible for general
    instances).
    """
    if isinstance(source, Instance):
        source = _InstanceSource(source)
    state = empty_state(source.n)
    steps: list[TraceStep] = []
    while True:
        request = source.next_request(state)
        if request is None:
            break
        slot = algorithm.choose(state, request)
        state = apply(state, request, slot)
        try:
            arrow_total = edge_arrow_crossings(state)
        except (ArrowMismatchError, DegreeOverflowError):
            arrow_total = None
        steps.append(
            TraceStep(
                request=request,
                slot=slot,
                edge_edge_total=total_crossings(state),
                edge_arrow_total=arrow_total,
            )
        )
    return Trace(n=state.n, steps=tuple(steps), final_state=state)

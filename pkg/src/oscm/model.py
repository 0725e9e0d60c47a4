"""Instances, requests and placement states for slotted online crossing
minimization on a two-layer drawing.

Vertices live on the bottom line, slots on the top line; both are indexed
1..n. A request is a pair of bottom vertices that must be wired to a single
free slot. All values here are immutable; `apply` returns a new state.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence


class SlotOccupiedError(ValueError):
    """Raised when a request is assigned to an already fulfilled slot."""


class SlotRangeError(ValueError):
    """Raised when a slot index is outside 1..n."""


class RegularityClass(Enum):
    GENERAL = "general"
    TWO_REGULAR = "two_regular"


@dataclass(frozen=True, order=True)
class Request:
    """A 2-subset of bottom vertices, stored canonically with a < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.a < self.b):
            raise ValueError(f"request endpoints must satisfy 1 <= a < b, got ({self.a}, {self.b})")

    @property
    def vertices(self) -> tuple[int, int]:
        return (self.a, self.b)


def make_request(x: int, y: int) -> Request:
    """Build a request from endpoints in either order."""
    return Request(min(x, y), max(x, y))


@dataclass(frozen=True)
class Instance:
    """A (possibly incomplete) request sequence over n slots and n vertices."""

    n: int
    requests: tuple[Request, ...]
    regularity_class: RegularityClass = RegularityClass.GENERAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "requests", tuple(self.requests))

    @property
    def is_complete(self) -> bool:
        return len(self.requests) == self.n


def validate_instance(inst: Instance) -> list[str]:
    """Return a list of invariant violations; an empty list means the
    instance is valid for its declared regularity class."""
    violations: list[str] = []
    if inst.n < 1:
        violations.append(f"n must be positive, got {inst.n}")
        return violations
    if len(inst.requests) > inst.n:
        violations.append(f"{len(inst.requests)} requests exceed {inst.n} slots")
    degree = [0] * (inst.n + 1)
    for idx, req in enumerate(inst.requests):
        if req.b > inst.n:
            violations.append(f"request {idx + 1} endpoint {req.b} exceeds n={inst.n}")
            continue
        degree[req.a] += 1
        degree[req.b] += 1
    if inst.regularity_class is RegularityClass.TWO_REGULAR:
        if len(inst.requests) != inst.n:
            violations.append(
                f"2-regular instance needs exactly {inst.n} requests, got {len(inst.requests)}"
            )
        for v in range(1, inst.n + 1):
            if degree[v] != 2:
                violations.append(f"vertex {v} appears {degree[v]} times, expected 2")
    return violations


@dataclass(frozen=True)
class PlacementState:
    """A partial assignment of requests to slots during an online game."""

    n: int
    placed: Mapping[int, Request] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "placed", dict(self.placed))

    def degree(self, v: int) -> int:
        return sum(1 for req in self.placed.values() if v in req.vertices)

    def degrees(self) -> list[int]:
        """Per-vertex request count, index 0 unused."""
        deg = [0] * (self.n + 1)
        for req in self.placed.values():
            deg[req.a] += 1
            deg[req.b] += 1
        return deg

    def is_free(self, slot: int) -> bool:
        return 1 <= slot <= self.n and slot not in self.placed

    def edges(self) -> list[tuple[int, int]]:
        """All placed edges as (vertex, slot) pairs."""
        out = []
        for slot, req in self.placed.items():
            out.append((req.a, slot))
            out.append((req.b, slot))
        return out

    def items(self) -> list[tuple[int, Request]]:
        return sorted(self.placed.items())


@dataclass(frozen=True)
class Assignment:
    """An offline solution: slot_of[i] is the slot of the i-th request."""

    slot_of: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "slot_of", tuple(self.slot_of))
        if len(set(self.slot_of)) != len(self.slot_of):
            raise ValueError("assignment maps two requests to the same slot")


def empty_state(n: int) -> PlacementState:
    return PlacementState(n=n, placed={})


def apply(state: PlacementState, request: Request, slot: int) -> PlacementState:
    """Record `request` at `slot`, returning the new state."""
    if not (1 <= slot <= state.n):
        raise SlotRangeError(f"slot {slot} out of range 1..{state.n}")
    if slot in state.placed:
        raise SlotOccupiedError(f"slot {slot} is already fulfilled")
    placed = dict(state.placed)
    placed[slot] = request
    return PlacementState(n=state.n, placed=placed)


def free_slots(state: PlacementState) -> list[int]:
    """Slots without a placed request, ascending."""
    return [s for s in range(1, state.n + 1) if s not in state.placed]


def random_two_regular(n: int, seed: int) -> Instance:
    """Sample a valid 2-regular instance on n vertices and n slots.

    Shuffles the multiset {1,1,...,n,n} and pairs consecutive tokens,
    resampling whenever a pair would be a self-loop. Deterministic per seed.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 for a 2-regular instance, got {n}")
    rng = random.Random(seed)
    tokens = [v for v in range(1, n + 1) for _ in range(2)]
    while True:
        rng.shuffle(tokens)
        pairs = [(tokens[i], tokens[i + 1]) for i in range(0, 2 * n, 2)]
        if all(x != y for x, y in pairs):
            break
    requests = tuple(make_request(x, y) for x, y in pairs)
    return Instance(n=n, requests=requests, regularity_class=RegularityClass.TWO_REGULAR)


def instance_to_dict(inst: Instance) -> dict:
    return {
        "n": inst.n,
        "k": 2,
        "regularity": inst.regularity_class.value,
        "requests": [[r.a, r.b] for r in inst.requests],
    }


def instance_from_dict(data: dict) -> Instance:
    inst = Instance(
        n=int(data["n"]),
        requests=tuple(make_request(int(a), int(b)) for a, b in data["requests"]),
        regularity_class=RegularityClass(data.get("regularity", "general")),
    )
    violations = validate_instance(inst)
    if violations:
        raise ValueError("invalid instance: " + "; ".join(violations))
    return inst


def load_instance(path: str) -> Instance:
    with open(path) as fh:
        return instance_from_dict(json.load(fh))


def save_instance(inst: Instance, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_dict(inst), fh, indent=2)
        fh.write("\n")

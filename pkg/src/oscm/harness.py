"""Experiment runner: plays algorithms against instances or adaptive
adversaries, compares against the exact oracle, audits traces for the
invariants the greedy algorithm is supposed to maintain, and aggregates
sweeps into CSV/JSON reports.
"""

from __future__ import annotations

import csv
import json
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algorithms import OnlineAlgorithm, Trace, play
from .crossings import PairKind, classify_pair, total_crossings
from .model import (
    Instance,
    RegularityClass,
    apply,
    empty_state,
    validate_instance,
)
from .offline import brute_force_opt
from .propagation import (
    ArrowMismatchError,
    DegreeOverflowError,
    audit_equator,
    audit_no_double_cross,
)

ALL_AUDITS = frozenset({"double_cross", "equator", "gap"})


class ReplayMismatchError(RuntimeError):
    """A trace's stored totals disagree with a replay of its steps."""


@dataclass(frozen=True)
class RatioReport:
    alg_name: str
    source_id: str
    n: int
    alg_crossings: int
    opt_crossings: int
    ratio: float
    ratio_defined: bool
    pair_type_histogram: dict[str, int]
    audit_findings: tuple[str, ...]

    @property
    def violation_count(self) -> int:
        return len(self.audit_findings)


@dataclass(frozen=True)
class TrialRecord:
    index: int
    instance_seed: int
    report: RatioReport


@dataclass(frozen=True)
class SweepResult:
    alg_name: str
    trials: tuple[TrialRecord, ...]
    max_ratio: float
    mean_ratio: float
    violation_count: int
    histogram: dict[str, int]


def _competitive_ratio(alg: int, opt: int) -> tuple[float, bool]:
    """Ratio alg/opt; at opt = 0 it is 1.0 when alg is also 0 and an
    undefined infinity sentinel otherwise."""
    if opt > 0:
        return alg / opt, True
    if alg == 0:
        return 1.0, True
    return math.inf, False


def pair_type_histogram(trace: Trace) -> dict[str, int]:
    """Counts of each pair kind over all request pairs in the final layout."""
    counts = {kind.name: 0 for kind in PairKind}
    items = trace.final_state.items()
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            s1, r1 = items[i]
            s2, r2 = items[j]
            counts[classify_pair(r1, s1, r2, s2).kind.name] += 1
    return counts


def unavoidable_lower_bound(trace: Trace) -> int:
    """Sum of per-pair unavoidable crossings; never exceeds the optimum."""
    items = trace.final_state.items()
    total = 0
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            s1, r1 = items[i]
            s2, r2 = items[j]
            total += classify_pair(r1, s1, r2, s2).unavoidable
    return total


def _gap_findings(state_before, request, slot) -> list[str]:
    """Report 4-0 or 3-0 pairs created in crossing order with a free slot
    strictly between the two fulfilled slots at placement time."""
    findings = []
    after = apply(state_before, request, slot)
    for other_slot, other_req in state_before.items():
        kind = classify_pair(request, slot, other_req, other_slot)
        worst = max(kind.placed_count, kind.swapped_count)
        if kind.kind not in (PairKind.FOUR_ZERO, PairKind.THREE_ZERO):
            continue
        if kind.placed_count != worst:
            continue
        lo, hi = min(slot, other_slot), max(slot, other_slot)
        if any(after.is_free(s) for s in range(lo + 1, hi)):
            findings.append(
                f"{kind.kind.name} pair ({request.a},{request.b})@{slot} vs "
                f"({other_req.a},{other_req.b})@{other_slot} with a free slot between"
            )
    return findings


def audit_trace(trace: Trace, audits: frozenset[str] = ALL_AUDITS) -> list[str]:
    """Replay a trace and collect invariant findings at every step.

    Arrow-based audits are skipped on states where arrows are undefined
    (possible for general, non-2-regular request sequences).
    """
    findings: list[str] = []
    state = empty_state(trace.n)
    for idx, step in enumerate(trace.steps, start=1):
        if not state.is_free(step.slot):
            raise ReplayMismatchError(f"step {idx} places into unavailable slot {step.slot}")
        if "gap" in audits:
            findings.extend(f"step {idx}: {f}" for f in _gap_findings(state, step.request, step.slot))
        state = apply(state, step.request, step.slot)
        if total_crossings(state) != step.edge_edge_total:
            raise ReplayMismatchError(f"step {idx} stored edge-edge total is stale")
        try:
            if "double_cross" in audits:
                findings.extend(f"step {idx}: {f}" for f in audit_no_double_cross(state))
            if "equator" in audits:
                findings.extend(f"step {idx}: {f}" for f in audit_equator(state))
        except (ArrowMismatchError, DegreeOverflowError):
            pass
    return findings


def realized_instance(trace: Trace) -> Instance:
    """The instance actually played, classified 2-regular when it qualifies."""
    inst = Instance(
        n=trace.n,
        requests=tuple(trace.requests),
        regularity_class=RegularityClass.TWO_REGULAR,
    )
    if validate_instance(inst):
        inst = Instance(
            n=trace.n,
            requests=inst.requests,
            regularity_class=RegularityClass.GENERAL,
        )
    return inst


def run_experiment(
    algorithm: OnlineAlgorithm,
    source,
    source_id: str = "",
    audits: frozenset[str] = ALL_AUDITS,
    opt_value: Optional[int] = None,
    max_n: Optional[int] = None,
) -> tuple[RatioReport, Trace]:
    """Play one full game and report the ratio against the exact optimum.

    `opt_value` substitutes for the oracle when the game is too large to
    solve exactly (it must then be a valid optimum or upper bound supplied
    by the caller; the ratio reported is relative to it).
    """
    trace = play(source, algorithm)
    alg_crossings = total_crossings(trace.final_state)
    if opt_value is None:
        opt_value = brute_force_opt(realized_instance(trace), max_n=max_n).opt_crossings
    ratio, defined = _competitive_ratio(alg_crossings, opt_value)
    report = RatioReport(
        alg_name=algorithm.name,
        source_id=source_id or getattr(source, "name", "instance"),
        n=trace.n,
        alg_crossings=alg_crossings,
        opt_crossings=opt_value,
        ratio=ratio,
        ratio_defined=defined,
        pair_type_histogram=pair_type_histogram(trace),
        audit_findings=tuple(audit_trace(trace, audits)),
    )
    return report, trace


def sweep(
    algorithm: OnlineAlgorithm,
    ns: Sequence[int],
    trials: int,
    seed: int,
    audits: frozenset[str] = ALL_AUDITS,
    max_n: Optional[int] = None,
) -> SweepResult:
    """Play `trials` random 2-regular games with sizes drawn from `ns`.

    Fully deterministic for a fixed seed: the master RNG fixes each trial's
    size and instance seed up front, so trials could run concurrently and
    fold back in index order without changing the result.
    """
    from .model import random_two_regular

    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    rng = random.Random(seed)
    plan = [(rng.choice(list(ns)), rng.randrange(2**32)) for _ in range(trials)]
    records = []
    histogram = {kind.name: 0 for kind in PairKind}
    violations = 0
    ratios = []
    for index, (n, inst_seed) in enumerate(plan):
        inst = random_two_regular(n, inst_seed)
        report, _ = run_experiment(
            algorithm,
            inst,
            source_id=f"random_two_regular(n={n}, seed={inst_seed})",
            audits=audits,
            max_n=max_n,
        )
        records.append(TrialRecord(index=index, instance_seed=inst_seed, report=report))
        for key, count in report.pair_type_histogram.items():
            histogram[key] += count
        violations += report.violation_count
        ratios.append(report.ratio)
    return SweepResult(
        alg_name=algorithm.name,
        trials=tuple(records),
        max_ratio=max(ratios),
        mean_ratio=sum(ratios) / len(ratios),
        violation_count=violations,
        histogram=histogram,
    )


def report_to_dict(report: RatioReport) -> dict:
    return {
        "alg": report.alg_name,
        "source": report.source_id,
        "n": report.n,
        "alg_crossings": report.alg_crossings,
        "opt_crossings": report.opt_crossings,
        "ratio": None if not report.ratio_defined else report.ratio,
        "ratio_defined": report.ratio_defined,
        "pair_type_histogram": report.pair_type_histogram,
        "audit_findings": list(report.audit_findings),
    }


def trace_to_dict(trace: Trace) -> dict:
    return {
        "n": trace.n,
        "steps": [
            {
                "request": [s.request.a, s.request.b],
                "slot": s.slot,
                "edge_edge_total": s.edge_edge_total,
                "edge_arrow_total": s.edge_arrow_total,
            }
            for s in trace.steps
        ],
    }


_CSV_FIELDS = [
    "trial",
    "seed",
    "n",
    "alg",
    "source",
    "alg_crossings",
    "opt_crossings",
    "ratio",
    "violations",
]


def _csv_row(trial: int, seed, report: RatioReport) -> dict:
    return {
        "trial": trial,
        "seed": "" if seed is None else seed,
        "n": report.n,
        "alg": report.alg_name,
        "source": report.source_id,
        "alg_crossings": report.alg_crossings,
        "opt_crossings": report.opt_crossings,
        "ratio": f"{report.ratio:.6f}" if report.ratio_defined else "inf",
        "violations": report.violation_count,
    }


def write_csv(reports: Union[RatioReport, SweepResult], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
        writer.writeheader()
        if isinstance(reports, SweepResult):
            for rec in reports.trials:
                writer.writerow(_csv_row(rec.index, rec.instance_seed, rec.report))
        else:
            writer.writerow(_csv_row(0, None, reports))


def write_json(
    reports: Union[RatioReport, SweepResult],
    path: str,
    trace: Optional[Trace] = None,
) -> None:
    if isinstance(reports, SweepResult):
        payload = {
            "alg": reports.alg_name,
            "max_ratio": reports.max_ratio,
            "mean_ratio": reports.mean_ratio,
            "violation_count": reports.violation_count,
            "histogram": reports.histogram,
            "trials": [
                {"trial": rec.index, "seed": rec.instance_seed, **report_to_dict(rec.report)}
                for rec in reports.trials
            ],
        }
    else:
        payload = report_to_dict(reports)
        if trace is not None:
            payload["trace"] = trace_to_dict(trace)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")

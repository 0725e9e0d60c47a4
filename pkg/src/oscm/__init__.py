"""Slotted online one-sided crossing minimization laboratory.

Library layout:

- :mod:`oscm.model` — instances, requests, placement states.
- :mod:`oscm.crossings` — exact crossing counts and the pair taxonomy.
- :mod:`oscm.propagation` — propagation arrows and state auditors.
- :mod:`oscm.algorithms` — online algorithms and the game loop.
- :mod:`oscm.offline` — exact offline oracle.
- :mod:`oscm.adversaries` — adversarial request sources.
- :mod:`oscm.harness` — experiments, audits, sweeps, reports.
- :mod:`oscm.render` — deterministic SVG rendering.
"""

from .adversaries import endgame_fill, fig8_instance, thm1_adversary, thm2_adversary
from .algorithms import (
    ALGORITHMS,
    BARYCENTER,
    FIRST_FIT,
    GREEDY,
    OnlineAlgorithm,
    Trace,
    TraceStep,
    get_algorithm,
    play,
)
from .crossings import (
    PairCrossKind,
    PairKind,
    avoidable_split,
    classify_pair,
    edges_cross,
    pair_crossings,
    total_crossings,
)
from .harness import (
    RatioReport,
    SweepResult,
    audit_trace,
    realized_instance,
    run_experiment,
    sweep,
)
from .model import (
    Assignment,
    Instance,
    PlacementState,
    RegularityClass,
    Request,
    apply,
    empty_state,
    free_slots,
    load_instance,
    make_request,
    random_two_regular,
    save_instance,
    validate_instance,
)
from .offline import OptResult, brute_force_opt, sorted_order_value
from .propagation import (
    PropagationArrowSet,
    arrows,
    audit_equator,
    audit_no_double_cross,
    unfulfilled_slots,
    unfulfilled_vertices,
)
from .render import RenderSpec, render_svg

__version__ = "0.1.0"

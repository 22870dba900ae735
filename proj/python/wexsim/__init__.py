"""Agent-based wealth exchange simulator.

Thin wrapper over the compiled extension; everything lives in
:mod:`wexsim._core`.
"""

from wexsim._core import (  # noqa: F401
    RNG_ALGORITHM,
    FactorKey,
    FactorTable,
    Histogram,
    InitDistribution,
    ModelSpec,
    ObservationSpec,
    RunResult,
    SimParams,
    SimulationError,
    Snapshot,
    SnapshotStats,
    SweepCell,
    SweepResult,
    SweepSummaryRow,
    compute_factors,
    default_sample_times,
    factor_weight,
    gini,
    histogram,
    lorenz,
    model_names,
    named_preset,
    redistribute,
    redistribute_keyed,
    run,
    snapshot_stats,
    step_jv_basic,
    step_jv_responsibility,
    step_we_pooled,
    sweep,
    validate,
)

__all__ = [
    "RNG_ALGORITHM",
    "FactorKey",
    "FactorTable",
    "Histogram",
    "InitDistribution",
    "ModelSpec",
    "ObservationSpec",
    "RunResult",
    "SimParams",
    "SimulationError",
    "Snapshot",
    "SnapshotStats",
    "SweepCell",
    "SweepResult",
    "SweepSummaryRow",
    "compute_factors",
    "default_sample_times",
    "factor_weight",
    "gini",
    "histogram",
    "lorenz",
    "model_names",
    "named_preset",
    "redistribute",
    "redistribute_keyed",
    "run",
    "snapshot_stats",
    "step_jv_basic",
    "step_jv_responsibility",
    "step_we_pooled",
    "sweep",
    "validate",
]

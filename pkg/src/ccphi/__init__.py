"""Compression-complexity measure of integrated information.

Scores how strongly a boolean gate network integrates information:
clamp each node in turn with a maximum-entropy and a zero-entropy input
series, measure the compression complexity (Lempel-Ziv or
Effort-To-Compress) of every other node's response, and take the
maximal aggregate complexity difference over those atomic bipartitions.
"""

from .boolnet import (
    ClampedRun,
    Gate,
    NetworkSpec,
    all_states,
    canonical_label,
    enumerate_networks,
    gate_eval,
    gate_output_entropy,
    simulate_clamped,
    step,
)
from .complexity import (
    ETCResult,
    LZResult,
    SymbolSequence,
    etc,
    etc_trace,
    lz,
    lz_normalized,
    lz_parse,
    lz_parse_count,
    nsrps_step,
    shannon_entropy,
)
from .hr_neuron import (
    HRParams,
    HRState,
    IntegrationDivergedError,
    binarize_spikes,
    hr_derivatives,
    integrate,
)
from .measure import (
    DEFAULT_LEN,
    DifferentialResponse,
    HierarchyRow,
    Measure,
    PerturbationPair,
    PhiCResult,
    PhiCSummary,
    derive_seed,
    differential_response,
    hierarchy_report,
    mep_series,
    phi_c,
    phi_c_from_series,
    phi_c_mean,
    summarize_states,
    zep_series,
)
from .reference import compare_hierarchy, load_reference
from .regression import (
    EntropyDesignRow,
    FitCoefficients,
    design_rows,
    fit_entropy_model,
    gate_counts,
    predict,
)
from .seqio import read_symbols, write_symbols

__version__ = "0.1.0"

__all__ = [
    "ClampedRun",
    "DEFAULT_LEN",
    "DifferentialResponse",
    "ETCResult",
    "EntropyDesignRow",
    "FitCoefficients",
    "Gate",
    "HRParams",
    "HRState",
    "HierarchyRow",
    "IntegrationDivergedError",
    "LZResult",
    "Measure",
    "NetworkSpec",
    "PerturbationPair",
    "PhiCResult",
    "PhiCSummary",
    "SymbolSequence",
    "all_states",
    "binarize_spikes",
    "canonical_label",
    "compare_hierarchy",
    "derive_seed",
    "design_rows",
    "differential_response",
    "enumerate_networks",
    "etc",
    "etc_trace",
    "fit_entropy_model",
    "gate_counts",
    "gate_eval",
    "gate_output_entropy",
    "hierarchy_report",
    "hr_derivatives",
    "integrate",
    "load_reference",
    "lz",
    "lz_normalized",
    "lz_parse",
    "lz_parse_count",
    "mep_series",
    "nsrps_step",
    "phi_c",
    "phi_c_from_series",
    "phi_c_mean",
    "predict",
    "read_symbols",
    "shannon_entropy",
    "simulate_clamped",
    "step",
    "summarize_states",
    "write_symbols",
    "zep_series",
]

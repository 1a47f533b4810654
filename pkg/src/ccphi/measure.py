"""Perturbational compression-complexity measure for gate networks.

For each atomic bipartition (one node versus the rest) the chosen node is
clamped twice: once with a maximum-entropy perturbation (iid uniform
bits, MEP) and once with a zero-entropy perturbation (constant series,
ZEP), both starting at the node's current state. The differential
response is, per free node, the normalized complexity of its MEP output
minus that of its ZEP output. Summing over free nodes gives the
bipartition's aggregate; the maximum aggregate over all bipartitions is
the network's score for that state. Averaging over all 2^N current
states yields the state-independent summary.

One MEP starting with 0 and one starting with 1 are drawn per experiment
and shared across all bipartitions; all randomness flows from a single
root seed through :func:`derive_seed`, so results are reproducible under
any execution schedule.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .boolnet import NetworkSpec, all_states, enumerate_networks, simulate_clamped
from .complexity import etc, lz_normalized

DEFAULT_LEN = 200


class Measure(Enum):
    """Which normalized complexity backs the differential responses."""

    ETC = "etc"
    LZ = "lz"

    @classmethod
    def from_name(cls, name: str) -> "Measure":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown measure {name!r}; valid: {valid}") from None

    def normalized(self, seq: Sequence[int]) -> float:
        if self is Measure.ETC:
            return etc(seq).normalized
        return lz_normalized(seq, alphabet_size=2)


def derive_seed(root: int, *parts) -> int:
    """Stable 64-bit child seed from a root seed and context labels.

    Hash-based so that every (network, state, trial) task owns an
    independent stream regardless of execution order.
    """
    key = ":".join([str(int(root)), *map(str, parts)]).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def mep_series(length: int, first_bit: int, seed: int) -> list[int]:
    """Maximum-entropy perturbation: iid uniform bits, first bit forced."""
    if length < 1:
        raise ValueError("series length must be >= 1")
    if first_bit not in (0, 1):
        raise ValueError("first_bit must be 0 or 1")
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=length)
    bits[0] = first_bit
    return [int(b) for b in bits]


def zep_series(length: int, bit: int) -> list[int]:
    """Zero-entropy perturbation: a constant series."""
    if length < 1:
        raise ValueError("series length must be >= 1")
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    return [bit] * length


@dataclass(frozen=True)
class PerturbationPair:
    """Matched MEP/ZEP inputs for one clamped node."""

    mep: tuple[int, ...]
    zep: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mep", tuple(int(b) for b in self.mep))
        object.__setattr__(self, "zep", tuple(int(b) for b in self.zep))
        if len(self.mep) != len(self.zep):
            raise ValueError("MEP and ZEP must have equal length")
        if not self.mep:
            raise ValueError("perturbations must be non-empty")
        if self.mep[0] != self.zep[0]:
            raise ValueError("MEP and ZEP must start with the same symbol")
        if any(b != self.zep[0] for b in self.zep):
            raise ValueError("ZEP must be constant")


@dataclass(frozen=True)
class DifferentialResponse:
    """Per-free-node complexity differences for one clamped bipartition."""

    perturbed_node: int
    values: dict[int, float]
    mep_complexity: dict[int, float]
    zep_complexity: dict[int, float]

    @property
    def aggregate(self) -> float:
        """Sum of the differential values over the free nodes."""
        return sum(self.values.values())


def differential_response(
    spec: NetworkSpec,
    state: Sequence[int],
    node: int,
    measure: Measure,
    pair: PerturbationPair,
) -> DifferentialResponse:
    """Clamp ``node`` with the MEP and ZEP and diff the output complexities."""
    if pair.mep[0] != int(state[node]):
        raise ValueError(
            f"perturbation starts with {pair.mep[0]} but node {node} "
            f"is in state {int(state[node])}"
        )
    mep_run = simulate_clamped(spec, state, node, pair.mep)
    zep_run = simulate_clamped(spec, state, node, pair.zep)
    mep_c = {j: measure.normalized(out) for j, out in mep_run.outputs.items()}
    zep_c = {j: measure.normalized(out) for j, out in zep_run.outputs.items()}
    values = {j: mep_c[j] - zep_c[j] for j in mep_c}
    return DifferentialResponse(
        perturbed_node=node,
        values=values,
        mep_complexity=mep_c,
        zep_complexity=zep_c,
    )


@dataclass(frozen=True)
class PhiCResult:
    """Maximal aggregate differential complexity for one current state."""

    per_node_aggregate: dict[int, float]
    phi_c: float
    argmax_node: int
    responses: tuple[DifferentialResponse, ...]


def phi_c_from_series(
    spec: NetworkSpec,
    state: Sequence[int],
    measure: Measure,
    mep0: Sequence[int],
    mep1: Sequence[int],
) -> PhiCResult:
    """Score one state given explicit start-0 and start-1 MEP series.

    Each node is clamped with the MEP whose first bit matches its current
    state (and the matching constant ZEP); the two MEPs are shared across
    all bipartitions. Ties in the maximum go to the lowest node index.
    """
    mep0 = list(mep0)
    mep1 = list(mep1)
    if mep0[0] != 0 or mep1[0] != 1:
        raise ValueError("mep0 must start with 0 and mep1 with 1")
    if len(mep0) != len(mep1):
        raise ValueError("MEP series must have equal length")
    length = len(mep0)
    zeps = {0: zep_series(length, 0), 1: zep_series(length, 1)}
    meps = {0: mep0, 1: mep1}

    responses = []
    aggregates: dict[int, float] = {}
    for node in range(spec.n):
        bit = int(state[node])
        pair = PerturbationPair(mep=tuple(meps[bit]), zep=tuple(zeps[bit]))
        resp = differential_response(spec, state, node, measure, pair)
        responses.append(resp)
        aggregates[node] = resp.aggregate
    best = max(range(spec.n), key=lambda i: (aggregates[i], -i))
    return PhiCResult(
        per_node_aggregate=aggregates,
        phi_c=aggregates[best],
        argmax_node=best,
        responses=tuple(responses),
    )


def phi_c(
    spec: NetworkSpec,
    state: Sequence[int],
    measure: Measure,
    seed: int,
    length: int = DEFAULT_LEN,
) -> PhiCResult:
    """Score one current state with seeded perturbations."""
    mep0 = mep_series(length, 0, derive_seed(seed, "mep", 0))
    mep1 = mep_series(length, 1, derive_seed(seed, "mep", 1))
    return phi_c_from_series(spec, state, measure, mep0, mep1)


def summarize_states(per_state: dict[tuple[int, ...], float]):
    """Mean, sample std and coefficient of variation across states.

    The coefficient of variation is None when the mean is zero (the
    ratio is undefined; never divided).
    """
    values = np.fromiter(per_state.values(), dtype=float)
    mean = float(values.mean())
    std = float(values.std(ddof=1)) if values.size > 1 else 0.0
    cov = std / mean if mean != 0.0 else None
    return mean, std, cov


@dataclass(frozen=True)
class PhiCSummary:
    """State-averaged score for one network.

    ``per_state`` holds each state's mean over the trials;
    ``per_state_argmax`` the winning bipartition of the first trial.
    """

    mean: float
    std: float
    cov: float | None
    per_state: dict[tuple[int, ...], float]
    per_state_argmax: dict[tuple[int, ...], int]


def phi_c_mean(
    spec: NetworkSpec,
    measure: Measure,
    seed: int,
    trials_per_state: int = 1,
    length: int = DEFAULT_LEN,
) -> PhiCSummary:
    """Average the score over all 2^N current states.

    Each (state, trial) task derives its own seed from the root seed, the
    network label, the state index and the trial index, so the sweep is
    schedule-independent. Per-state values average ``trials_per_state``
    independent draws.
    """
    if trials_per_state < 1:
        raise ValueError("trials_per_state must be >= 1")
    per_state: dict[tuple[int, ...], float] = {}
    per_state_argmax: dict[tuple[int, ...], int] = {}
    for idx, state in enumerate(all_states(spec.n)):
        draws = [
            phi_c(
                spec,
                state,
                measure,
                derive_seed(seed, spec.label, idx, trial),
                length,
            )
            for trial in range(trials_per_state)
        ]
        per_state[state] = sum(d.phi_c for d in draws) / len(draws)
        per_state_argmax[state] = draws[0].argmax_node
    mean, std, cov = summarize_states(per_state)
    return PhiCSummary(
        mean=mean,
        std=std,
        cov=cov,
        per_state=per_state,
        per_state_argmax=per_state_argmax,
    )


@dataclass(frozen=True)
class HierarchyRow:
    """One network's summary inside a hierarchy report."""

    label: str
    mean: float
    std: float
    cov: float | None


def _summary_task(args) -> tuple[str, float, float, float | None]:
    label, measure_name, seed, trials, length = args
    spec = NetworkSpec.from_label(label)
    s = phi_c_mean(spec, Measure(measure_name), seed, trials, length)
    return label, s.mean, s.std, s.cov


def hierarchy_report(
    n_nodes: int,
    measure: Measure,
    seed: int,
    trials: int = 1,
    length: int = DEFAULT_LEN,
    jobs: int = 1,
) -> list[HierarchyRow]:
    """Summaries for every gate multiset, sorted by descending mean.

    ``jobs > 1`` distributes networks across processes; each task derives
    its seeds independently, so the result is identical to a serial run.
    """
    specs = enumerate_networks(n_nodes)
    tasks = [(s.label, measure.value, seed, trials, length) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_summary_task, tasks))
    else:
        results = [_summary_task(t) for t in tasks]
    by_label = {label: (mean, std, cov) for label, mean, std, cov in results}
    rows = [
        HierarchyRow(label=s.label, mean=by_label[s.label][0],
                     std=by_label[s.label][1], cov=by_label[s.label][2])
        for s in specs
    ]
    rows.sort(key=lambda r: -r.mean)
    return rows

"""Synchronous boolean gate networks with node clamping.

Networks are fully connected with no self-loops: node ``i`` reads the
other ``N - 1`` nodes each step, and all nodes update simultaneously
from the previous global state. A clamped node ignores its own gate and
follows an externally supplied input series instead, while still feeding
the other gates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Gate(Enum):
    """k-ary gate kinds: OR = any, AND = all, XOR = parity."""

    XOR = "XOR"
    OR = "OR"
    AND = "AND"

    @classmethod
    def from_name(cls, name: str) -> "Gate":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            valid = ", ".join(g.name for g in cls)
            raise ValueError(f"unknown gate {name!r}; valid gates: {valid}") from None


# canonical ordering used for multiset labels and enumeration
_GATE_ORDER = {Gate.XOR: 0, Gate.OR: 1, Gate.AND: 2}


def gate_eval(gate: Gate, inputs: Sequence[int]) -> int:
    """Evaluate one gate over its input bits."""
    if len(inputs) == 0:
        raise ValueError("gate needs at least one input")
    if gate is Gate.OR:
        return 1 if any(inputs) else 0
    if gate is Gate.AND:
        return 1 if all(inputs) else 0
    return sum(inputs) & 1


@dataclass(frozen=True)
class NetworkSpec:
    """An ordered tuple of gates; topology is implied (fully connected)."""

    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if len(self.gates) < 2:
            raise ValueError("a network needs at least 2 nodes")
        if not all(isinstance(g, Gate) for g in self.gates):
            raise ValueError("gates must be Gate members")

    @property
    def n(self) -> int:
        return len(self.gates)

    @property
    def label(self) -> str:
        return "-".join(g.name for g in self.gates)

    @classmethod
    def from_label(cls, label: str) -> "NetworkSpec":
        """Parse a hyphen-separated label such as ``"OR-AND-XOR"``."""
        names = [p for p in label.replace(" ", "").split("-") if p]
        if not names:
            raise ValueError(f"empty network label {label!r}")
        return cls(tuple(Gate.from_name(p) for p in names))

    def to_json(self) -> dict:
        return {"gates": [g.name for g in self.gates]}

    @classmethod
    def from_json(cls, obj: dict) -> "NetworkSpec":
        return cls(tuple(Gate.from_name(g) for g in obj["gates"]))


def canonical_label(label_or_spec) -> str:
    """Multiset-canonical form of a network label (gate order XOR, OR, AND).

    Fully connected dynamics are gate-permutation symmetric once averaged
    over all states, so reference tables are joined on this form.
    """
    spec = (
        label_or_spec
        if isinstance(label_or_spec, NetworkSpec)
        else NetworkSpec.from_label(label_or_spec)
    )
    gates = sorted(spec.gates, key=_GATE_ORDER.__getitem__)
    return "-".join(g.name for g in gates)


def _check_state(spec: NetworkSpec, state: Sequence[int]) -> tuple[int, ...]:
    bits = tuple(int(b) for b in state)
    if len(bits) != spec.n:
        raise ValueError(f"state length {len(bits)} != network size {spec.n}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("state bits must be 0 or 1")
    return bits


def step(spec: NetworkSpec, state: Sequence[int]) -> tuple[int, ...]:
    """Advance one synchronous step: every node reads all the others.

    For these three gates the update depends only on the number of active
    neighbours, which keeps the hot loops O(N) per step.
    """
    bits = _check_state(spec, state)
    n = spec.n
    total = sum(bits)
    nxt = []
    for g, own in zip(spec.gates, bits):
        others = total - own
        if g is Gate.OR:
            nxt.append(1 if others > 0 else 0)
        elif g is Gate.AND:
            nxt.append(1 if others == n - 1 else 0)
        else:
            nxt.append(others & 1)
    return tuple(nxt)


@dataclass(frozen=True)
class ClampedRun:
    """Trajectory record of a run with one node overridden.

    ``outputs[j][t]`` is the state of free node ``j`` at time ``t``;
    time 0 is the initial state, so every output series has exactly the
    length of the input series.
    """

    clamped_node: int
    input_series: tuple[int, ...]
    outputs: dict[int, tuple[int, ...]]


def simulate_clamped(
    spec: NetworkSpec,
    initial: Sequence[int],
    clamped_node: int,
    input_series: Sequence[int],
) -> ClampedRun:
    """Run the network with ``clamped_node`` following ``input_series``.

    The clamped node's own gate is never evaluated; its value at time t
    is ``input_series[t]``, and it participates as an input to every
    other gate. The series must start at the node's current state.
    """
    bits = list(_check_state(spec, initial))
    n = spec.n
    if not 0 <= clamped_node < n:
        raise ValueError(f"clamped node {clamped_node} out of range")
    series = [int(s) for s in input_series]
    if not series:
        raise ValueError("input series must be non-empty")
    if any(s not in (0, 1) for s in series):
        raise ValueError("input series must be binary")
    if series[0] != bits[clamped_node]:
        raise ValueError(
            f"input series starts with {series[0]} but node {clamped_node} "
            f"is in state {bits[clamped_node]}"
        )

    free = [j for j in range(n) if j != clamped_node]
    kinds = spec.gates
    state = bits
    state[clamped_node] = series[0]
    outputs: dict[int, list[int]] = {j: [state[j]] for j in free}
    full = n - 1
    for t in range(1, len(series)):
        total = sum(state)
        nxt = state[:]
        for j in free:
            others = total - state[j]
            g = kinds[j]
            if g is Gate.OR:
                nxt[j] = 1 if others > 0 else 0
            elif g is Gate.AND:
                nxt[j] = 1 if others == full else 0
            else:
                nxt[j] = others & 1
        nxt[clamped_node] = series[t]
        state = nxt
        for j in free:
            outputs[j].append(state[j])
    return ClampedRun(
        clamped_node=clamped_node,
        input_series=tuple(series),
        outputs={j: tuple(v) for j, v in outputs.items()},
    )


def enumerate_networks(n: int) -> list[NetworkSpec]:
    """One canonical representative per gate multiset, C(n+2, 2) in total.

    Ordered by the canonical gate order (XOR before OR before AND), so
    the all-XOR network comes first and all-AND last.
    """
    if n < 2:
        raise ValueError("networks need at least 2 nodes")
    order = sorted(Gate, key=_GATE_ORDER.__getitem__)
    return [
        NetworkSpec(combo)
        for combo in itertools.combinations_with_replacement(order, n)
    ]


def all_states(n: int) -> Iterable[tuple[int, ...]]:
    """All 2^n states in lexicographic order (node 0 most significant)."""
    return itertools.product((0, 1), repeat=n)


def gate_output_entropy(gate: Gate, n_inputs: int) -> float:
    """Shannon entropy (bits) of a gate's output under iid uniform inputs."""
    if n_inputs < 1:
        raise ValueError("gate needs at least one input")
    ones = sum(
        gate_eval(gate, combo)
        for combo in itertools.product((0, 1), repeat=n_inputs)
    )
    p = ones / 2.0**n_inputs
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)

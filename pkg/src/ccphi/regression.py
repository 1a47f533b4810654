"""Least-squares fit of network means against node-entropy counts.

The model has no intercept and two explanatory variables: the summed
entropy of the high-entropy nodes (XOR gates, 1 bit each) and of the
low-entropy nodes (AND/OR gates, 0.8113 bits each):

    y_hat = n_high * H_high * x_high + n_low * H_low * x_low

The 2x2 normal equations are solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .boolnet import Gate, NetworkSpec

H_HIGH_DEFAULT = 1.0
# two-input AND/OR output entropy, published at 4 decimal places
H_LOW_DEFAULT = 0.8113


@dataclass(frozen=True)
class EntropyDesignRow:
    """One network's observed mean and its node-entropy breakdown."""

    n_high: int
    n_low: int
    y: float
    h_high: float = H_HIGH_DEFAULT
    h_low: float = H_LOW_DEFAULT

    def __post_init__(self):
        if self.n_high < 0 or self.n_low < 0:
            raise ValueError("node counts must be non-negative")
        if not self.h_high > self.h_low > 0:
            raise ValueError("entropies must satisfy h_high > h_low > 0")


class FitCoefficients(NamedTuple):
    x_high: float
    x_low: float


def gate_counts(label_or_spec) -> tuple[int, int]:
    """(high-entropy, low-entropy) node counts: XOR high, AND/OR low."""
    spec = (
        label_or_spec
        if isinstance(label_or_spec, NetworkSpec)
        else NetworkSpec.from_label(label_or_spec)
    )
    n_high = sum(1 for g in spec.gates if g is Gate.XOR)
    return n_high, spec.n - n_high


def design_rows(
    labels: Sequence[str],
    means: Sequence[float],
    h_high: float = H_HIGH_DEFAULT,
    h_low: float = H_LOW_DEFAULT,
) -> list[EntropyDesignRow]:
    """Build design rows from network labels and their observed means."""
    if len(labels) != len(means):
        raise ValueError("labels and means must have equal length")
    rows = []
    for label, y in zip(labels, means):
        n_high, n_low = gate_counts(label)
        rows.append(EntropyDesignRow(n_high, n_low, float(y), h_high, h_low))
    return rows


def fit_entropy_model(rows: Iterable[EntropyDesignRow]) -> FitCoefficients:
    """Least-squares coefficients minimizing sum (y - y_hat)^2.

    Raises on a rank-deficient design, naming the collinear columns.
    """
    rows = list(rows)
    if len(rows) < 2:
        raise ValueError("need at least 2 rows to fit")
    suu = suv = svv = suy = svy = 0.0
    for r in rows:
        u = r.n_high * r.h_high
        v = r.n_low * r.h_low
        suu += u * u
        suv += u * v
        svv += v * v
        suy += u * r.y
        svy += v * r.y
    det = suu * svv - suv * suv
    scale = max(suu, svv)
    if scale == 0.0 or abs(det) < 1e-12 * scale * scale:
        raise ValueError(
            "rank-deficient design: columns n_high*h_high and n_low*h_low "
            "are collinear"
        )
    x_high = (suy * svv - suv * svy) / det
    x_low = (suu * svy - suv * suy) / det
    return FitCoefficients(x_high, x_low)


def predict(row: EntropyDesignRow, x_high: float, x_low: float) -> float:
    """Model prediction for one design row."""
    return row.n_high * row.h_high * x_high + row.n_low * row.h_low * x_low

"""Bundled reference hierarchies and comparison against computed sweeps.

Three read-only tables ship with the package, one per measure: the
IIT-based integrated information means (``phi``) and the two
compression-complexity means (``etc``, ``lz``), each covering every gate
multiset for 3, 4 and 5 node networks. Sweeps are compared to them by
Spearman rank correlation and per-network tolerance bands.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from scipy.stats import spearmanr

from .boolnet import canonical_label
from .measure import HierarchyRow

REFERENCE_FILES = {
    "phi": "reference_phi.csv",
    "etc": "reference_phic_etc.csv",
    "lz": "reference_phic_lz.csv",
}

# |computed - reference| tolerance: three reference standard deviations,
# floored so zero-variance rows still get a usable band
BAND_SIGMAS = 3.0
BAND_FLOOR = 0.02


@dataclass(frozen=True)
class ReferenceRow:
    nodes: int
    label: str
    mean: float
    std: float


def _parse_reference(lines) -> list[ReferenceRow]:
    rows = []
    for rec in csv.DictReader(lines):
        rows.append(
            ReferenceRow(
                nodes=int(rec["nodes"]),
                label=rec["network"].replace(" ", ""),
                mean=float(rec["mean"]),
                std=float(rec["std"]),
            )
        )
    return rows


def load_reference(measure: str, path: str | Path | None = None) -> list[ReferenceRow]:
    """Load a bundled reference table, or any CSV with the same schema."""
    if path is not None:
        with open(path, newline="") as fh:
            return _parse_reference(fh)
    try:
        filename = REFERENCE_FILES[measure.lower()]
    except KeyError:
        valid = ", ".join(REFERENCE_FILES)
        raise ValueError(f"unknown reference table {measure!r}; valid: {valid}")
    text = resources.files("ccphi.data").joinpath(filename).read_text()
    return _parse_reference(text.splitlines())


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    mean: float
    ref_mean: float
    ref_std: float
    band_pass: bool


@dataclass(frozen=True)
class ComparisonReport:
    spearman: float
    rows: list[ComparisonRow]

    @property
    def all_bands_pass(self) -> bool:
        return all(r.band_pass for r in self.rows)


def compare_hierarchy(
    rows: list[HierarchyRow],
    reference: list[ReferenceRow],
    nodes: int | None = None,
) -> ComparisonReport:
    """Match computed rows to reference rows by gate multiset.

    Raises if any computed network is missing from the reference table.
    """
    if nodes is not None:
        reference = [r for r in reference if r.nodes == nodes]
    ref_by_multiset = {canonical_label(r.label): r for r in reference}
    computed = []
    expected = []
    out = []
    for row in rows:
        key = canonical_label(row.label)
        if key not in ref_by_multiset:
            raise ValueError(f"network {row.label} not present in reference table")
        ref = ref_by_multiset[key]
        band = max(BAND_SIGMAS * ref.std, BAND_FLOOR)
        out.append(
            ComparisonRow(
                label=row.label,
                mean=row.mean,
                ref_mean=ref.mean,
                ref_std=ref.std,
                band_pass=abs(row.mean - ref.mean) <= band,
            )
        )
        computed.append(row.mean)
        expected.append(ref.mean)
    rho = float(spearmanr(computed, expected).statistic)
    return ComparisonReport(spearman=rho, rows=out)

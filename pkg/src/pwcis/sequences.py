"""Indexed real node sequences and their basic geometry.

A finite window of a node sequence is stored together with the integer
index of its first entry, so that the n-th node keeps its meaning when the
window does not start at zero.  All statistics computed here are window
statistics: the reported minimal gap is an upper estimate of the true
infimum over the bi-infinite sequence and the maximal gap a lower estimate
of the true supremum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from pwcis.errors import InvalidInput


def _as_readonly_f64(values, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise InvalidInput(f"{what}: expected a 1-D array of reals")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput(f"{what}: entries must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class IndexedSequence:
    """Strictly increasing real nodes λ_n for n = n_min .. n_min+len-1."""

    n_min: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = _as_readonly_f64(self.values, "IndexedSequence")
        if arr.shape[0] < 2:
            raise InvalidInput("IndexedSequence: need at least two nodes")
        if not np.all(np.diff(arr) > 0.0):
            raise InvalidInput("IndexedSequence: nodes must be strictly increasing")
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "n_min", int(self.n_min))

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def n_max(self) -> int:
        return self.n_min + len(self) - 1

    def indices(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_min + len(self))

    def value(self, n: int) -> float:
        if not (self.n_min <= n <= self.n_max):
            raise InvalidInput(f"index {n} outside window [{self.n_min}, {self.n_max}]")
        return float(self.values[n - self.n_min])

    @property
    def span(self) -> float:
        return float(self.values[-1] - self.values[0])

    def to_dict(self) -> dict:
        return {"n_min": self.n_min, "values": [float(v) for v in self.values]}


@dataclass(frozen=True)
class SeparationReport:
    delta: float
    Delta: float
    is_separated: bool

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "Delta": self.Delta,
            "is_separated": self.is_separated,
        }


@dataclass(frozen=True)
class KadetsReport:
    sup_deviation: float
    passes: bool

    def to_dict(self) -> dict:
        return {"sup_deviation": self.sup_deviation, "passes": self.passes}


@dataclass(frozen=True)
class DensityReport:
    r: float
    d_plus: float
    d_minus: float

    def to_dict(self) -> dict:
        return {"r": self.r, "d_plus": self.d_plus, "d_minus": self.d_minus}


def separation(seq: IndexedSequence) -> SeparationReport:
    """Minimal and maximal consecutive gap over the window.

    For a strictly increasing sequence the infimum of |λ_n - λ_m| over all
    distinct pairs is attained at a consecutive pair, so only np.diff is
    needed.
    """
    gaps = np.diff(seq.values)
    delta = float(gaps.min())
    Delta = float(gaps.max())
    return SeparationReport(delta=delta, Delta=Delta, is_separated=delta > 0.0)


def kadets_check(seq: IndexedSequence) -> KadetsReport:
    """Sup of |λ_n - n| over the window; passes iff strictly below 1/4."""
    dev = np.abs(seq.values - seq.indices())
    sup_dev = float(dev.max())
    return KadetsReport(sup_deviation=sup_dev, passes=sup_dev < 0.25)


def density(seq: IndexedSequence, r: float) -> DensityReport:
    """Extremes of the counting ratio |{λ_n} ∩ [x-r, x+r)| / (2r).

    The max/min over real centers x is attained (up to grid resolution) on
    a candidate set: a regular grid of step delta/2 across the admissible
    center range, plus every node in that range.  Centers keep the full
    interval [x-r, x+r) inside the data span so tail truncation does not
    bias the counts.
    """
    if not (r > 0.0) or not np.isfinite(r):
        raise InvalidInput("density: r must be positive and finite")
    if 2.0 * r > seq.span:
        raise InvalidInput("density: 2r exceeds the window span")
    lo = float(seq.values[0]) + r
    hi = float(seq.values[-1]) - r
    delta = float(np.diff(seq.values).min())
    step = delta / 2.0
    n_steps = max(1, int(np.ceil((hi - lo) / step)))
    centers = np.linspace(lo, hi, n_steps + 1)
    node_centers = seq.values[(seq.values >= lo) & (seq.values <= hi)]
    if node_centers.size:
        centers = np.concatenate([centers, node_centers])
    counts = np.searchsorted(seq.values, centers + r, side="left") - np.searchsorted(
        seq.values, centers - r, side="left"
    )
    ratios = counts / (2.0 * r)
    return DensityReport(r=float(r), d_plus=float(ratios.max()), d_minus=float(ratios.min()))


def relative_density_check(seq: IndexedSequence, eps: float) -> bool:
    """True iff every length-2*eps interval within the window meets a node,
    which for an increasing sequence reduces to max gap <= 2*eps."""
    if not (eps > 0.0) or not np.isfinite(eps):
        raise InvalidInput("relative_density_check: eps must be positive and finite")
    Delta = float(np.diff(seq.values).max())
    return Delta <= 2.0 * eps

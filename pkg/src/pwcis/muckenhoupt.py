"""Discrete and continuous Muckenhoupt-type weight conditions.

The discrete scan measures, over integer index windows I of bounded
length, the normalized ratio

    (sum_I d_n) * (sum_I d_n^(-1/(p-1)))^(p-1) / |I|^p

and reports its maximum together with the achieving window.  A bounded
ratio over all windows is the defining condition on derivative weights or
squared critical values of the generating functions built elsewhere in
this package; the scan itself is a necessary-condition check on a finite
window, not a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from pwcis import kernels
from pwcis.errors import InvalidInput, NumericFailure


@dataclass(frozen=True)
class PositiveSequence:
    """Strictly positive weights d_n indexed from n_min."""

    n_min: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise InvalidInput("PositiveSequence: expected a nonempty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise InvalidInput("PositiveSequence: entries must be finite")
        if not np.all(arr > 0.0):
            raise InvalidInput("PositiveSequence: entries must be strictly positive")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "n_min", int(self.n_min))

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def n_max(self) -> int:
        return self.n_min + len(self) - 1

    def to_dict(self) -> dict:
        return {"n_min": self.n_min, "values": [float(v) for v in self.values]}


@dataclass(frozen=True)
class SignedCriticalSequence:
    """Alternating-sign critical values: (-1)^n c_n >= 0 for each index n.

    Zero entries are allowed by the sign pattern; operations that need
    log-moduli reject them explicitly.
    """

    n_min: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise InvalidInput("SignedCriticalSequence: expected a nonempty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise InvalidInput("SignedCriticalSequence: entries must be finite")
        n = np.arange(self.n_min, self.n_min + arr.shape[0])
        signs = np.where(n % 2 == 0, 1.0, -1.0)
        if not np.all(signs * arr >= 0.0):
            raise InvalidInput("SignedCriticalSequence: sign alternation violated")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "n_min", int(self.n_min))

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def n_max(self) -> int:
        return self.n_min + len(self) - 1

    def moduli(self) -> np.ndarray:
        return np.abs(self.values)

    def log_moduli(self) -> np.ndarray:
        m = np.abs(self.values)
        if np.any(m == 0.0):
            raise InvalidInput("SignedCriticalSequence: zero critical value has no log")
        return np.log(m)

    def to_dict(self) -> dict:
        return {"n_min": self.n_min, "values": [float(v) for v in self.values]}


@dataclass(frozen=True)
class MuckenhouptReport:
    """Result of a ratio scan.

    witness holds the window that achieves max_ratio: for the discrete scan
    a pair of integer sequence indices (inclusive endpoints), for the
    continuous scan the (center index, length index) pair into the supplied
    grids, with the actual interval attached separately.
    """

    p: float
    max_ratio: float
    witness: tuple[int, int]
    window_cap: int
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        if self.p == 2.0 and self.max_ratio < 1.0 - 1e-9:
            raise NumericFailure(
                "window ratio below the Cauchy-Schwarz floor", detail=self.max_ratio
            )

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "max_ratio": self.max_ratio,
            "witness": [int(self.witness[0]), int(self.witness[1])],
            "window_cap": self.window_cap,
        }
        if self.interval is not None:
            out["interval"] = [self.interval[0], self.interval[1]]
        return out


def discrete_ratio(d: PositiveSequence, p: float = 2.0, window_cap: int | None = None) -> MuckenhouptReport:
    """Maximal windowed ratio (sum d)(sum d^(-1/(p-1)))^(p-1) / |I|^p.

    Every window of consecutive indices with length <= window_cap is
    scanned exactly via compensated prefix sums, O(len * cap) windows in
    total.  The witness endpoints are absolute sequence indices.
    """
    if not (p > 1.0) or not np.isfinite(p):
        raise InvalidInput("discrete_ratio: p must be finite and > 1")
    length = len(d)
    if window_cap is None:
        window_cap = length
    window_cap = int(window_cap)
    if not (1 <= window_cap <= length):
        raise InvalidInput("discrete_ratio: window_cap must be in [1, len(d)]")
    recip = d.values ** (-1.0 / (p - 1.0))
    pa = kernels.kahan_prefix(d.values)
    pb = kernels.kahan_prefix(recip)
    best, i, j = kernels.window_ratio_scan(pa, pb, p - 1.0, window_cap)
    return MuckenhouptReport(
        p=float(p),
        max_ratio=float(best),
        witness=(d.n_min + int(i), d.n_min + int(j)),
        window_cap=window_cap,
    )


def power_law_sequence(alpha: float, n_min: int, n_max: int) -> PositiveSequence:
    """Weights d_n = (1 + |n|)^(2*alpha) on the index window [n_min, n_max]."""
    if n_max < n_min:
        raise InvalidInput("power_law_sequence: n_max must be >= n_min")
    n = np.arange(int(n_min), int(n_max) + 1)
    values = (1.0 + np.abs(n)) ** (2.0 * alpha)
    return PositiveSequence(n_min=int(n_min), values=values)


def signed_from_weights(d: PositiveSequence) -> SignedCriticalSequence:
    """Critical values c_n = (-1)^n sqrt(d_n) realizing the weights d_n = c_n^2."""
    n = np.arange(d.n_min, d.n_min + len(d))
    signs = np.where(n % 2 == 0, 1.0, -1.0)
    return SignedCriticalSequence(n_min=d.n_min, values=signs * np.sqrt(d.values))


def weights_from_signed(c: SignedCriticalSequence) -> PositiveSequence:
    """Weights d_n = c_n^2; rejects zero critical values."""
    if np.any(c.values == 0.0):
        raise InvalidInput("weights_from_signed: zero critical value")
    return PositiveSequence(n_min=c.n_min, values=c.values**2)


def log_increment_bound(c: SignedCriticalSequence, C_ratio: float) -> dict:
    """Check |log|c_p| - log|c_q|| <= log(C_ratio)/2 + log(|p-q| + 1) pairwise.

    This is the increment bound implied by a ratio constant C_ratio of the
    p = 2 window scan on d_n = c_n^2.  Brute force over all pairs in the
    window, O(len^2).  worst_pair is the pair maximizing the left side
    minus the right side, whether or not the bound holds.
    """
    if not (C_ratio > 0.0) or not np.isfinite(C_ratio):
        raise InvalidInput("log_increment_bound: C_ratio must be positive and finite")
    logs = c.log_moduli()
    n = np.arange(len(c), dtype=np.float64)
    lhs = np.abs(logs[:, None] - logs[None, :])
    rhs = 0.5 * np.log(C_ratio) + np.log(np.abs(n[:, None] - n[None, :]) + 1.0)
    margin = lhs - rhs
    np.fill_diagonal(margin, -np.inf)
    flat = int(np.argmax(margin))
    i, j = divmod(flat, len(c))
    if i > j:
        i, j = j, i
    holds = bool(margin[i, j] <= 1e-12)
    return {"holds": holds, "worst_pair": (c.n_min + i, c.n_min + j)}


def neighbor_tip_bound(c: SignedCriticalSequence) -> float:
    """Max over n of |log|c_n| - log|c_{n+1}|| (uniform neighbor increment)."""
    logs = c.log_moduli()
    if len(c) < 2:
        raise InvalidInput("neighbor_tip_bound: need at least two values")
    return float(np.max(np.abs(np.diff(logs))))


def continuous_a2_scan(
    w,
    lengths,
    centers,
    w_floor: float = 1e-9,
    quad_rel_tol: float = 1e-8,
) -> MuckenhouptReport:
    """Max of (int_I w)(int_I 1/w)/|I|^2 over intervals I = center +- length/2.

    w is any positive evaluable function of a real variable (for example a
    weight trace x -> |F(x + iy)|^2).  Integrals use adaptive quadrature at
    relative tolerance quad_rel_tol.  The reciprocal integrand is floored
    at w_floor so that weights with integrable-looking zeros (such as |x|)
    produce the finite, slowly growing ratios of their regularized form
    instead of a quadrature failure; for weights bounded away from zero the
    floor is inert.  This is a scan over the supplied interval family, not
    a proof of the full condition.
    """
    from scipy.integrate import quad

    lengths = [float(v) for v in lengths]
    centers = [float(v) for v in centers]
    if not lengths or not centers:
        raise InvalidInput("continuous_a2_scan: need at least one length and center")
    if any(v <= 0.0 for v in lengths):
        raise InvalidInput("continuous_a2_scan: lengths must be positive")
    if not (w_floor > 0.0):
        raise InvalidInput("continuous_a2_scan: w_floor must be positive")

    def recip(x: float) -> float:
        v = w(x)
        return 1.0 / (v if v > w_floor else w_floor)

    best = -np.inf
    best_ci = 0
    best_li = 0
    best_iv = (0.0, 0.0)
    for ci, center in enumerate(centers):
        for li, length in enumerate(lengths):
            a = center - length / 2.0
            b = center + length / 2.0
            iw = _quad_checked(quad, w, a, b, quad_rel_tol)
            ir = _quad_checked(quad, recip, a, b, quad_rel_tol)
            ratio = iw * ir / (length * length)
            if ratio > best:
                best = ratio
                best_ci = ci
                best_li = li
                best_iv = (a, b)
    return MuckenhouptReport(
        p=2.0,
        max_ratio=float(best),
        witness=(best_ci, best_li),
        window_cap=len(lengths),
        interval=best_iv,
    )


def _quad_checked(quad, f, a: float, b: float, rel_tol: float) -> float:
    res = quad(f, a, b, epsabs=0.0, epsrel=rel_tol, limit=200, full_output=True)
    value = float(res[0])
    abserr = float(res[1])
    if not np.isfinite(value):
        raise NumericFailure(f"quadrature returned non-finite value on [{a}, {b}]")
    if len(res) >= 4 and abserr > 1e-3 * max(abs(value), 1.0):
        raise NumericFailure(f"quadrature did not converge on [{a}, {b}]", detail=res[3])
    return value


def ungl_inequality(p: float, q: float, alpha: float) -> bool:
    """Check 2pq <= p^(1+2a) q^(1-2a) + p^(1-2a) q^(1+2a) <= p^2 + q^2.

    Valid for p, q > 0 and -1/2 <= alpha <= 1/2; both comparisons carry a
    1e-12 relative slack against rounding at the equality cases.
    """
    if not (p > 0.0 and q > 0.0):
        raise InvalidInput("ungl_inequality: p and q must be positive")
    if not (-0.5 <= alpha <= 0.5):
        raise InvalidInput("ungl_inequality: alpha must lie in [-1/2, 1/2]")
    middle = p ** (1.0 + 2.0 * alpha) * q ** (1.0 - 2.0 * alpha) + p ** (
        1.0 - 2.0 * alpha
    ) * q ** (1.0 + 2.0 * alpha)
    lower = 2.0 * p * q
    upper = p * p + q * q
    slack_lo = 1e-12 * max(lower, middle)
    slack_hi = 1e-12 * max(middle, upper)
    return bool(lower <= middle + slack_lo and middle <= upper + slack_hi)

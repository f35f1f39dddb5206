"""Generating functions of real node sequences.

Two representations cover the practical range.  SymmetricProduct is the
truncated symmetric product over all nodes of modulus below a cutoff
radius, with a zero node contributing a plain factor z.  SineTail encodes
a finite perturbation of the integer lattice: outside a core window
[-N, N] the nodes are exactly the integers, and the infinite tail is
carried in closed form by sin(pi z)/pi, so evaluation has rounding error
only, no truncation error.

Every zero is hit exactly: evaluation routes through a factored path in
which some factor vanishes identically at each node.  Derivatives at
zeros are computed by removing the vanishing factor, never by numerical
differencing.  Arguments of the sine are always reduced modulo the nearest
integer, which keeps accuracy uniform along the real line.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from pwcis.errors import InvalidInput, NumericFailure, PoleEvaluation
from pwcis.muckenhoupt import PositiveSequence, SignedCriticalSequence
from pwcis.sequences import IndexedSequence
from pwcis import kernels

_PI = math.pi
_LOG_PI = math.log(math.pi)
_EXP_OVERFLOW = 700.0

# pi*cot(pi*h) - 1/h = -(c1*h + c2*h^3 + c3*h^5 + c4*h^7 + c5*h^9) + O(h^11)
_COT_SERIES = (
    _PI**2 / 3.0,
    _PI**4 / 45.0,
    2.0 * _PI**6 / 945.0,
    _PI**8 / 4725.0,
    2.0 * _PI**10 / 93555.0,
)


def _sin_pi(w: complex) -> complex:
    """sin(pi*w) with the argument reduced by the nearest integer.

    Exactly zero at exact integers; keeps full relative accuracy near all
    integers, which plain sin(pi*w) loses for large |Re w|.
    """
    j = round(w.real)
    s = cmath.sin(_PI * (w - j))
    return -s if j % 2 else s


def _sinc_pi(w: complex) -> complex:
    """sin(pi*w)/(pi*w), equal to 1 at w = 0."""
    if w == 0:
        return 1.0 + 0.0j
    return _sin_pi(w) / (_PI * w)


def _log_abs_sin_pi(z: complex) -> float:
    """log|sin(pi*z)|, stable for any |Im z| (no overflow)."""
    y = z.imag
    if abs(y) <= 1.0:
        return math.log(abs(_sin_pi(z)))
    if y < 0:
        r = cmath.exp(-2j * _PI * z)
    else:
        r = cmath.exp(2j * _PI * z)
    return _PI * abs(y) - math.log(2.0) + math.log(abs(1.0 - r))


def _pi_cot_pi_minus_pole(h: complex) -> complex:
    """pi*cot(pi*h) - 1/h, removable at h = 0."""
    if abs(h) < 0.1:
        h2 = h * h
        c1, c2, c3, c4, c5 = _COT_SERIES
        return -h * (c1 + h2 * (c2 + h2 * (c3 + h2 * (c4 + h2 * c5))))
    s = cmath.sin(_PI * h)
    c = cmath.cos(_PI * h)
    return _PI * c / s - 1.0 / h


def _pi_cot_pi(z: complex) -> complex:
    """pi*cot(pi*z), argument-reduced, with large-|Im| asymptotics."""
    y = z.imag
    if y > 20.0:
        return -1j * _PI * (1.0 + 2.0 * cmath.exp(2j * _PI * z))
    if y < -20.0:
        return 1j * _PI * (1.0 + 2.0 * cmath.exp(-2j * _PI * z))
    h = z - round(z.real)
    return 1.0 / h + _pi_cot_pi_minus_pole(h)


@dataclass(frozen=True)
class SymmetricProduct:
    """F(z) = normalization * prod over included nodes of (1 - z/lam),
    with a zero node contributing the factor z."""

    nodes: IndexedSequence
    radius_R: float
    normalization: float = 1.0

    def __post_init__(self):
        if not (self.radius_R > 0.0) or not np.isfinite(self.radius_R):
            raise InvalidInput("SymmetricProduct: radius_R must be positive and finite")
        if np.max(np.abs(self.nodes.values)) >= self.radius_R:
            raise InvalidInput("SymmetricProduct: all nodes must satisfy |node| < radius_R")
        if self.normalization == 0.0 or not np.isfinite(self.normalization):
            raise InvalidInput("SymmetricProduct: normalization must be finite and nonzero")

    @property
    def index_range(self) -> tuple[int, int]:
        return (self.nodes.n_min, self.nodes.n_max)

    def node(self, n: int) -> float:
        return self.nodes.value(n)

    def _factors(self, z: complex) -> np.ndarray:
        lam = self.nodes.values
        fac = np.empty(lam.shape[0], dtype=np.complex128)
        zero = lam == 0.0
        nz = ~zero
        fac[nz] = 1.0 - z / lam[nz]
        fac[zero] = z
        return fac

    def _eval(self, z: complex) -> complex:
        zc = complex(z)
        lam = self.nodes.values
        near = np.abs(zc - lam) < 1.0
        if zc.imag == 0.0:
            x = zc.real
            fac = np.empty(lam.shape[0], dtype=np.float64)
            zero = lam == 0.0
            nz = ~zero
            fac[nz] = 1.0 - x / lam[nz]
            fac[zero] = x
            direct = float(np.prod(fac[near])) if near.any() else 1.0
            far = fac[~near]
            sign = -1.0 if int((far < 0.0).sum()) % 2 else 1.0
            logsum = kernels.kahan_total(np.log(np.abs(far))) if far.size else 0.0
            if logsum > _EXP_OVERFLOW:
                raise NumericFailure("product evaluation overflows", detail=logsum)
            return complex(self.normalization * direct * sign * math.exp(logsum), 0.0)
        fac = self._factors(zc)
        direct = complex(np.prod(fac[near])) if near.any() else 1.0 + 0.0j
        far = fac[~near]
        if far.size:
            logs = np.log(far)
            re = kernels.kahan_total(np.ascontiguousarray(logs.real))
            im = kernels.kahan_total(np.ascontiguousarray(logs.imag))
        else:
            re = 0.0
            im = 0.0
        if re > _EXP_OVERFLOW:
            raise NumericFailure("product evaluation overflows", detail=re)
        return self.normalization * direct * cmath.exp(complex(re, im))

    def _is_node(self, z: complex) -> bool:
        if z.imag != 0.0:
            return False
        return bool(np.any(self.nodes.values == z.real))

    def _log_modulus(self, z: complex) -> float:
        zc = complex(z)
        if self._is_node(zc):
            return -math.inf
        fac = self._factors(zc)
        total = kernels.kahan_total(np.log(np.abs(fac)))
        return math.log(abs(self.normalization)) + total

    def _log_derivative(self, z: complex) -> complex:
        zc = complex(z)
        if self._is_node(zc):
            raise PoleEvaluation(f"logarithmic derivative has a pole at node {zc}")
        terms = 1.0 / (zc - self.nodes.values)
        return complex(
            math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist())
        )

    def _removed_eval(self, n: int, z: complex) -> complex:
        """F(z)/(z - lam_n), the n-th factor replaced by its slope."""
        zc = complex(z)
        lam_n = self.node(n)
        cfac = 1.0 if lam_n == 0.0 else -1.0 / lam_n
        lam = self.nodes.values
        keep = np.arange(lam.shape[0]) != (n - self.nodes.n_min)
        sub = lam[keep]
        near = np.abs(zc - sub) < 1.0
        fac = np.empty(sub.shape[0], dtype=np.complex128)
        zero = sub == 0.0
        nz = ~zero
        fac[nz] = 1.0 - zc / sub[nz]
        fac[zero] = zc
        direct = complex(np.prod(fac[near])) if near.any() else 1.0 + 0.0j
        far = fac[~near]
        if far.size:
            logs = np.log(far)
            re = kernels.kahan_total(np.ascontiguousarray(logs.real))
            im = kernels.kahan_total(np.ascontiguousarray(logs.imag))
        else:
            re = 0.0
            im = 0.0
        if re > _EXP_OVERFLOW:
            raise NumericFailure("product evaluation overflows", detail=re)
        out = self.normalization * cfac * direct * cmath.exp(complex(re, im))
        if zc.imag == 0.0:
            return complex(out.real, 0.0)
        return out

    def _derivative_at_node(self, n: int) -> float:
        return self._removed_eval(n, self.node(n)).real

    def default_index_range(self) -> tuple[int, int]:
        return self.index_range


class SineTail:
    """F(z) = normalization * sin(pi z)/pi * prod_{|n|<=N} (z-lam_n)/(z-n).

    Nodes are lam_n inside the core window [-N, N] and exactly the
    integers outside.  The core may be given as an IndexedSequence on a
    symmetric index range or as a bare odd-length array (which permits the
    single-node core N = 0).
    """

    def __init__(self, core, normalization: float = 1.0):
        if isinstance(core, IndexedSequence):
            vals = np.array(core.values, dtype=np.float64)
            if core.n_min != -core.n_max:
                raise InvalidInput("SineTail: core index range must be symmetric [-N, N]")
        else:
            vals = np.atleast_1d(np.asarray(core, dtype=np.float64)).copy()
            if vals.ndim != 1 or vals.shape[0] % 2 == 0:
                raise InvalidInput("SineTail: core must be a 1-D odd-length array")
        if not np.all(np.isfinite(vals)):
            raise InvalidInput("SineTail: core nodes must be finite")
        if vals.shape[0] > 1 and not np.all(np.diff(vals) > 0.0):
            raise InvalidInput("SineTail: core nodes must be strictly increasing")
        half = vals.shape[0] // 2
        if not (vals[0] > -half - 1 and vals[-1] < half + 1):
            raise InvalidInput(
                "SineTail: core must interlace the integer tail "
                f"(need {-half - 1} < nodes < {half + 1})"
            )
        if normalization == 0.0 or not np.isfinite(normalization):
            raise InvalidInput("SineTail: normalization must be finite and nonzero")
        vals.flags.writeable = False
        self.core_values = vals
        self.half_width = half
        self.normalization = float(normalization)

    @property
    def index_range(self) -> tuple[int, int]:
        return (-self.half_width, self.half_width)

    def node(self, n: int) -> float:
        if abs(n) <= self.half_width:
            return float(self.core_values[n + self.half_width])
        return float(n)

    def _core_indices(self) -> np.ndarray:
        return np.arange(-self.half_width, self.half_width + 1)

    def _is_node(self, z: complex) -> bool:
        if z.imag != 0.0:
            return False
        x = z.real
        if np.any(self.core_values == x):
            return True
        k = round(x)
        return x == k and abs(k) > self.half_width

    def _eval(self, z: complex) -> complex:
        zc = complex(z)
        if _PI * abs(zc.imag) > _EXP_OVERFLOW:
            raise NumericFailure(
                "sine evaluation overflows", detail=self._log_modulus(zc)
            )
        lam = self.core_values
        idx = self._core_indices()
        N = self.half_width
        k = round(zc.real)
        if abs(k) <= N and abs(zc - k) < 0.5:
            # merge the k-th tail denominator into the reduced sine
            keep = idx != k
            ratio = np.prod((zc - lam[keep]) / (zc - idx[keep])) if N > 0 else 1.0
            sign = -1.0 if k % 2 else 1.0
            val = sign * _sinc_pi(zc - k) * (zc - lam[k + N]) * ratio
        else:
            ratio = np.prod((zc - lam) / (zc - idx))
            val = (_sin_pi(zc) / _PI) * ratio
        out = self.normalization * complex(val)
        if zc.imag == 0.0:
            return complex(out.real, 0.0)
        return out

    def _log_modulus(self, z: complex) -> float:
        zc = complex(z)
        if self._is_node(zc):
            return -math.inf
        lam = self.core_values
        idx = self._core_indices()
        N = self.half_width
        base = math.log(abs(self.normalization))
        k = round(zc.real)
        if abs(k) <= N and abs(zc - k) < 0.5:
            keep = idx != k
            terms = np.log(np.abs(zc - lam[keep])) - np.log(np.abs(zc - idx[keep]))
            return (
                base
                + math.log(abs(_sinc_pi(zc - k)))
                + math.log(abs(zc - lam[k + N]))
                + math.fsum(terms.tolist())
            )
        terms = np.log(np.abs(zc - lam)) - np.log(np.abs(zc - idx))
        return base + _log_abs_sin_pi(zc) - _LOG_PI + math.fsum(terms.tolist())

    def _log_derivative(self, z: complex) -> complex:
        zc = complex(z)
        if self._is_node(zc):
            raise PoleEvaluation(f"logarithmic derivative has a pole at node {zc}")
        lam = self.core_values
        idx = self._core_indices()
        N = self.half_width
        k = round(zc.real)
        if abs(k) <= N and abs(zc - k) < 0.5:
            keep = idx != k
            terms = 1.0 / (zc - lam[keep]) - 1.0 / (zc - idx[keep])
            tot = complex(
                math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist())
            )
            return (
                _pi_cot_pi_minus_pole(zc - k) + 1.0 / (zc - lam[k + N]) + tot
            )
        terms = 1.0 / (zc - lam) - 1.0 / (zc - idx)
        tot = complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))
        return _pi_cot_pi(zc) + tot

    def _removed_eval(self, n: int, z: complex) -> complex:
        """F(z)/(z - lam_n): the zero at node n cancelled analytically.

        Identity used: sin(pi z)/(pi (z-n)) = (-1)^n sinc(z-n), valid for
        core and tail nodes alike.  When z sits near a different core
        integer k, the reduction is re-centered there to keep the k-th
        tail denominator away from zero.
        """
        zc = complex(z)
        lam = self.core_values
        idx = self._core_indices()
        N = self.half_width
        k = round(zc.real)
        if abs(k) <= N and abs(zc - k) < 0.5 and k != n:
            keep = (idx != k) & (idx != n)
            ratio = np.prod((zc - lam[keep]) / (zc - idx[keep]))
            sign = -1.0 if k % 2 else 1.0
            val = (
                sign
                * _sinc_pi(zc - k)
                * (zc - lam[k + N])
                / (zc - n)
                * ratio
            )
        else:
            keep = idx != n
            ratio = np.prod((zc - lam[keep]) / (zc - idx[keep]))
            sign = -1.0 if n % 2 else 1.0
            val = sign * _sinc_pi(zc - n) * ratio
        out = self.normalization * complex(val)
        if zc.imag == 0.0:
            return complex(out.real, 0.0)
        return out

    def _derivative_at_node(self, n: int) -> float:
        return self._removed_eval(n, self.node(n)).real

    def default_index_range(self) -> tuple[int, int]:
        return self.index_range


GeneratingFunction = SymmetricProduct | SineTail


def sine(lambda0: float = 0.0, normalization: float = 1.0) -> SineTail:
    """The N = 0 representation: sin(pi z)/pi with one movable node."""
    return SineTail([float(lambda0)], normalization=normalization)


def auto_representation(nodes: IndexedSequence, normalization: float = 1.0):
    """Pick the exact sine-tail form when the window looks like a finite
    perturbation of the integers, otherwise fall back to the truncated
    symmetric product.

    Tail compatibility requires the window to contain index 0, every node
    with |n| > N to equal its index exactly, and at least one confirming
    integer node beyond the core on each side.
    """
    if nodes.n_min <= 0 <= nodes.n_max:
        idx = nodes.indices()
        deviant = nodes.values != idx.astype(np.float64)
        if not deviant.any():
            half = 0
        else:
            half = int(np.max(np.abs(idx[deviant])))
        if half < min(-nodes.n_min, nodes.n_max):
            core = nodes.values[(idx >= -half) & (idx <= half)]
            return SineTail(core, normalization=normalization)
    radius = float(np.max(np.abs(nodes.values))) + 1.0
    return SymmetricProduct(nodes=nodes, radius_R=radius, normalization=normalization)


def tail_completion(nodes: IndexedSequence, normalization: float = 1.0):
    """Complete a symmetric window with the exact integer tail when its
    end nodes interlace the adjacent integers; otherwise fall back to
    auto_representation.

    Unlike auto_representation this keeps every window node in the core,
    so it never introduces a window-edge envelope; it is the preferred
    builder when the window is the object of study (certificates,
    interpolation) rather than a sample of a longer sequence.
    """
    if nodes.n_min == -nodes.n_max:
        try:
            return SineTail(np.array(nodes.values), normalization=normalization)
        except InvalidInput:
            pass
    return auto_representation(nodes, normalization=normalization)


def node_derivative(F, n: int) -> float:
    """F'(lam_n), signed, via the factor-removal limit of F(z)/(z - lam_n)."""
    return F._derivative_at_node(n)


def evaluate(F, z) -> complex:
    """Value of the generating function; exactly zero at every node."""
    return F._eval(z)


def log_modulus(F, z) -> float:
    """log|F(z)|, computed without overflow; -inf at nodes."""
    return F._log_modulus(complex(z))


def log_derivative(F, z) -> complex:
    """F'(z)/F(z); raises POLE at a node."""
    return F._log_derivative(complex(z))


def derivative_at_zeros(F, index_range: tuple[int, int] | None = None) -> PositiveSequence:
    """Weights d_n = |F'(lam_n)|^2 over an index range of nodes.

    F'(lam_n) is the limit of F(z)/(z - lam_n), evaluated with the n-th
    factor removed; no differencing is involved.  Default range: the full
    node window for a symmetric product, the core window for a sine tail
    (wider tail ranges may be requested explicitly).
    """
    lo, hi = index_range if index_range is not None else F.default_index_range()
    lo, hi = int(lo), int(hi)
    if hi < lo:
        raise InvalidInput("derivative_at_zeros: empty index range")
    if isinstance(F, SymmetricProduct):
        if lo < F.nodes.n_min or hi > F.nodes.n_max:
            raise InvalidInput("derivative_at_zeros: range outside the node window")
    vals = np.array([F._derivative_at_node(n) ** 2 for n in range(lo, hi + 1)])
    return PositiveSequence(n_min=lo, values=vals)


@dataclass(frozen=True)
class CriticalData:
    """Critical points x_n in the gaps (lam_{n-1}, lam_n) and the values
    c_n = sign * F(x_n) after global sign normalization.

    sign is the +-1 factor applied to all values so that (-1)^n c_n >= 0;
    moduli and alternation are unaffected.
    """

    points: np.ndarray
    values: SignedCriticalSequence
    sign: int

    def to_dict(self) -> dict:
        return {
            "points": [float(x) for x in self.points],
            "values": self.values.to_dict(),
        }


def critical_data(F, index_range: tuple[int, int]) -> CriticalData:
    """Locate the interior extremum of F in each requested gap.

    The logarithmic derivative decreases strictly from +inf to -inf across
    each gap, so bisection on its sign is unconditionally robust.  Gap n
    is (lam_{n-1}, lam_n); abscissa tolerance is 1e-12 of the gap length.
    """
    lo, hi = int(index_range[0]), int(index_range[1])
    if hi < lo:
        raise InvalidInput("critical_data: empty index range")
    if isinstance(F, SymmetricProduct):
        if lo - 1 < F.nodes.n_min or hi > F.nodes.n_max:
            raise InvalidInput("critical_data: gap range outside the node window")
    points = np.empty(hi - lo + 1)
    raw = np.empty(hi - lo + 1)
    for n in range(lo, hi + 1):
        left = F.node(n - 1)
        right = F.node(n)
        x = _gap_root(F, left, right)
        points[n - lo] = x
        raw[n - lo] = evaluate(F, x).real
    first_sign = 1.0 if (lo % 2 == 0) else -1.0
    sign = 1 if first_sign * raw[0] >= 0.0 else -1
    vals = sign * raw
    n_arr = np.arange(lo, hi + 1)
    ok = np.where(n_arr % 2 == 0, vals >= 0.0, vals <= 0.0)
    if not ok.all():
        raise NumericFailure("critical values do not alternate in sign")
    return CriticalData(
        points=points,
        values=SignedCriticalSequence(n_min=lo, values=vals),
        sign=sign,
    )


def _gap_root(F, left: float, right: float) -> float:
    glen = right - left
    margin = 1e-3
    while True:
        a = left + margin * glen
        b = right - margin * glen
        fa = F._log_derivative(complex(a)).real
        fb = F._log_derivative(complex(b)).real
        if fa > 0.0 and fb < 0.0:
            break
        margin /= 8.0
        if margin < 1e-15:
            raise NumericFailure(
                f"no sign change of the log-derivative in gap ({left}, {right})"
            )
    tol = 1e-12 * glen
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if F._log_derivative(complex(mid)).real > 0.0:
            a = mid
        else:
            b = mid
    x = 0.5 * (a + b)
    slope_scale = 8.0 / (glen * glen)
    if abs(F._log_derivative(complex(x)).real) > 1e-6 * slope_scale * glen:
        raise NumericFailure(f"critical point refinement stalled near {x}")
    return x


def cartwright_integral(F, T: float) -> float:
    """Integral of log+|F(t)| / (1 + t^2) over [-T, T].

    The range is split at the nodes so the adaptive quadrature never
    straddles a zero; within 1e-9 of a node the integrand is set to 0
    (log+ vanishes there anyway).
    """
    from scipy.integrate import quad

    if not (T > 0.0) or not np.isfinite(T):
        raise InvalidInput("cartwright_integral: T must be positive and finite")

    breaks = _node_breakpoints(F, -T, T)

    def integrand(t: float) -> float:
        if _nearest_node_distance(F, t) < 1e-9:
            return 0.0
        lf = F._log_modulus(complex(t))
        if lf <= 0.0:
            return 0.0
        return lf / (1.0 + t * t)

    total = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b <= a:
            continue
        val, abserr = quad(integrand, a, b, epsabs=1e-12, epsrel=1e-8, limit=100)
        if not np.isfinite(val):
            raise NumericFailure(f"quadrature failed on [{a}, {b}]")
        total += val
    return total


def _node_breakpoints(F, a: float, b: float) -> list[float]:
    if isinstance(F, SymmetricProduct):
        inner = [v for v in F.nodes.values.tolist() if a < v < b]
    else:
        inner = [v for v in F.core_values.tolist() if a < v < b]
        n_lo = int(math.floor(a))
        n_hi = int(math.ceil(b))
        inner += [
            float(n)
            for n in range(n_lo, n_hi + 1)
            if abs(n) > F.half_width and a < n < b
        ]
    return [a] + sorted(inner) + [b]


def _nearest_node_distance(F, t: float) -> float:
    if isinstance(F, SymmetricProduct):
        return float(np.min(np.abs(F.nodes.values - t)))
    d_core = float(np.min(np.abs(F.core_values - t)))
    k = round(t)
    if abs(k) <= F.half_width:
        # nearest tail node is then one of the adjacent out-of-core integers
        d_tail = min(abs(t - (F.half_width + 1)), abs(t + F.half_width + 1))
    else:
        d_tail = abs(t - k)
    return min(d_core, d_tail)


def node_distance(F, z) -> float:
    """Distance from z to the nearest node of F.

    The nodes are real, so the node nearest to Re z in real distance is
    also the nearest in the plane.
    """
    zc = complex(z)
    return math.hypot(_nearest_node_distance(F, zc.real), zc.imag)


def line_modulus_bounds(F, y: float, x_range: tuple[float, float], step: float) -> dict:
    """Min and max of |F(x + iy)| on a regular grid along a horizontal line."""
    if y == 0.0:
        raise InvalidInput("line_modulus_bounds: y must be nonzero")
    if not (step > 0.0):
        raise InvalidInput("line_modulus_bounds: step must be positive")
    x0, x1 = float(x_range[0]), float(x_range[1])
    if x1 < x0:
        raise InvalidInput("line_modulus_bounds: empty x_range")
    n_pts = int(math.floor((x1 - x0) / step + 0.5)) + 1
    lo = math.inf
    hi = -math.inf
    for i in range(n_pts):
        x = x0 + i * step
        v = math.exp(F._log_modulus(complex(x, y)))
        if v < lo:
            lo = v
        if v > hi:
            hi = v
    return {"min": lo, "max": hi}


def type_estimate(F, R_list) -> list[float]:
    """log|F(iR)|/R along increasing radii; approaches the exponential type."""
    rs = [float(r) for r in R_list]
    if any(r <= 0.0 for r in rs):
        raise InvalidInput("type_estimate: radii must be positive")
    if any(b <= a for a, b in zip(rs[:-1], rs[1:])):
        raise InvalidInput("type_estimate: radii must be increasing")
    return [F._log_modulus(complex(0.0, r)) / r for r in rs]


@dataclass(frozen=True)
class WeightTrace:
    """Evaluable weight w(x) = |F(x + iy)|^2 on a horizontal line."""

    F: object
    y: float = 1.0

    def __post_init__(self):
        if self.y == 0.0:
            raise InvalidInput("WeightTrace: y must be nonzero")

    def __call__(self, x: float) -> float:
        return math.exp(2.0 * self.F._log_modulus(complex(x, self.y)))

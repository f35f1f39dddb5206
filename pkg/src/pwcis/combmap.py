"""Comb domains, branch-tracked logarithms, and node synthesis.

phi = log F maps the lower half-plane onto a comb-shaped region: along
the real axis each gap between consecutive zeros is carried to a
horizontal slit whose height steps by pi from gap to gap and whose tip
sits at the log-modulus of the interior critical value.  This module
builds the continuous branch of phi, traces those slits numerically, and
inverts the picture: given prescribed tip heights it solves for node
positions whose generating function realizes them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from pwcis import genfun
from pwcis.errors import (
    InvalidInput,
    NumericFailure,
    PoleEvaluation,
    SolverDiverged,
)
from pwcis.muckenhoupt import MuckenhouptReport, SignedCriticalSequence, discrete_ratio
from pwcis.sequences import (
    DensityReport,
    IndexedSequence,
    SeparationReport,
    density,
    separation,
)

_PI = math.pi

# A continuation step is accepted only if it is short relative to the
# distance from both endpoints to the nearest zero AND its wrapped phase
# increment is well below pi.  The length condition is what rules out
# aliasing: every zero is then bounded away from the whole chord, so the
# argument cannot silently advance past 2 pi within one step.
_MAX_STEP_PHASE = 1.5
_STEP_LENGTH_FACTOR = 0.3
_MAX_SPLIT_DEPTH = 60


@dataclass(frozen=True)
class CombDomain:
    """The plane minus horizontal slits {x + i n pi : x <= log|c_n|}."""

    tips: SignedCriticalSequence

    def __post_init__(self):
        if np.any(self.tips.values == 0.0):
            raise InvalidInput("CombDomain: all tip values must be nonzero")

    @property
    def index_range(self) -> tuple[int, int]:
        return (self.tips.n_min, self.tips.n_max)

    def slit(self, n: int) -> tuple[float, float]:
        """(tip abscissa, slit height) for index n."""
        i = n - self.tips.n_min
        if not 0 <= i < self.tips.values.shape[0]:
            raise InvalidInput(f"CombDomain: index {n} outside range")
        return (math.log(abs(float(self.tips.values[i]))), n * _PI)


class BranchTrackedLog:
    """Continuous branch of log F on the closed lower half-plane.

    The branch is pinned at an anchor point (default -i) where the
    imaginary part is the principal argument in (-pi, pi]; elsewhere phi
    is obtained by continuation along polylines, never by re-taking a
    principal value.  The real part is always log|F| recomputed at the
    evaluation point, so only the argument is actually continued.
    """

    def __init__(self, F, anchor: complex = -1j):
        anchor = complex(anchor)
        if not anchor.imag < 0.0:
            raise InvalidInput("BranchTrackedLog: anchor must lie in the open lower half-plane")
        self.F = F
        self.anchor = anchor
        v = genfun.evaluate(F, anchor)
        if v == 0:
            raise InvalidInput("BranchTrackedLog: anchor coincides with a zero")
        self.phi_anchor = complex(genfun.log_modulus(F, anchor), cmath.phase(v))

    def _value(self, z: complex) -> complex:
        v = genfun.evaluate(self.F, z)
        if v == 0:
            raise PoleEvaluation(f"continuation path passes through a zero at {z}")
        return v

    def continue_along(self, z_from: complex, phi_from: complex, z_to: complex) -> complex:
        """phi at z_to, continued from a known phi at z_from along the segment."""

        def rec(za: complex, fa: complex, da: float, ima: float, zb: complex, depth: int):
            fb = self._value(zb)
            db = genfun.node_distance(self.F, zb)
            dphi = cmath.phase(fb / fa)
            if (
                abs(zb - za) <= _STEP_LENGTH_FACTOR * min(da, db)
                and abs(dphi) <= _MAX_STEP_PHASE
            ):
                return ima + dphi, fb, db
            if depth >= _MAX_SPLIT_DEPTH:
                raise NumericFailure(
                    f"branch tracking did not converge between {za} and {zb}"
                )
            zm = 0.5 * (za + zb)
            imm, fm, dm = rec(za, fa, da, ima, zm, depth + 1)
            return rec(zm, fm, dm, imm, zb, depth + 1)

        f_from = self._value(z_from)
        d_from = genfun.node_distance(self.F, z_from)
        im_to, _, _ = rec(z_from, f_from, d_from, phi_from.imag, z_to, 0)
        return complex(genfun.log_modulus(self.F, z_to), im_to)


def phi_eval(L: BranchTrackedLog, z: complex, anchor: complex | None = None) -> complex:
    """phi(z) by continuation along the straight segment anchor -> z.

    Re phi is log|F(z)| exactly; Im phi carries the tracked branch.
    """
    zc = complex(z)
    if zc.imag > 0.0:
        raise InvalidInput("phi_eval: z must lie in the closed lower half-plane")
    if anchor is None:
        a = L.anchor
        phi_a = L.phi_anchor
    else:
        a = complex(anchor)
        if not a.imag < 0.0:
            raise InvalidInput("phi_eval: anchor must lie in the open lower half-plane")
        va = genfun.evaluate(L.F, a)
        if va == 0:
            raise InvalidInput("phi_eval: anchor coincides with a zero")
        phi_a = complex(genfun.log_modulus(L.F, a), cmath.phase(va))
    if zc == a:
        return phi_a
    if genfun.evaluate(L.F, zc) == 0:
        raise PoleEvaluation(f"phi_eval: {zc} is a zero of the generating function")
    return L.continue_along(a, phi_a, zc)


@dataclass(frozen=True)
class TraceRecord:
    """Summary of phi along one gap, traced just below the real axis."""

    gap: int
    im_level: float
    im_dev: float
    re_max: float
    argmax: float
    x: np.ndarray | None = None
    re_phi: np.ndarray | None = None
    im_phi: np.ndarray | None = None

    def to_dict(self) -> dict:
        return {
            "gap": self.gap,
            "im_level": self.im_level,
            "im_dev": self.im_dev,
            "re_max": self.re_max,
            "argmax": self.argmax,
        }


def boundary_trace(
    L: BranchTrackedLog,
    eps: float = 1e-3,
    gaps: tuple[int, int] = (0, 0),
    samples_per_gap: int = 129,
    keep_samples: bool = False,
) -> list[TraceRecord]:
    """Trace phi along (lam_{n-1}+eps, lam_n-eps) - i*eps for each gap.

    The imaginary part is summarized by the median over the central half
    of the samples (the ends bend by an eps-independent amount as the
    path rounds the zeros, so endpoint samples are excluded from the
    level statistics).  The real-part maximum is refined by a parabola
    through the best sample and its neighbors.
    """
    if not (eps > 0.0) or not np.isfinite(eps):
        raise InvalidInput("boundary_trace: eps must be positive")
    if samples_per_gap < 8:
        raise InvalidInput("boundary_trace: need at least 8 samples per gap")
    lo, hi = int(gaps[0]), int(gaps[1])
    if hi < lo:
        raise InvalidInput("boundary_trace: empty gap range")
    F = L.F
    if isinstance(F, genfun.SymmetricProduct):
        if lo - 1 < F.nodes.n_min or hi > F.nodes.n_max:
            raise InvalidInput("boundary_trace: gap range outside the node window")

    records = []
    prev_z = L.anchor
    prev_phi = L.phi_anchor
    for n in range(lo, hi + 1):
        left = F.node(n - 1)
        right = F.node(n)
        if right - left <= 4.0 * eps:
            raise InvalidInput(
                f"boundary_trace: eps too large for gap ({left}, {right})"
            )
        xs = np.linspace(left + eps, right - eps, samples_per_gap)
        re = np.empty(samples_per_gap)
        im = np.empty(samples_per_gap)
        # hop from wherever the previous gap ended (or the anchor); for
        # consecutive gaps this is a short dip below the shared node
        phi = L.continue_along(prev_z, prev_phi, complex(xs[0], -eps))
        re[0] = phi.real
        im[0] = phi.imag
        for j in range(1, samples_per_gap):
            zj = complex(xs[j], -eps)
            phi = L.continue_along(complex(xs[j - 1], -eps), phi, zj)
            re[j] = phi.real
            im[j] = phi.imag
        prev_z = complex(xs[-1], -eps)
        prev_phi = phi
        q = samples_per_gap // 4
        central = slice(q, samples_per_gap - q)
        level = float(np.median(im[central]))
        im_dev = float(np.max(np.abs(im[central] - level)))
        j_best = int(np.argmax(re))
        re_max = float(re[j_best])
        arg_best = float(xs[j_best])
        if 0 < j_best < samples_per_gap - 1:
            ym, y0, yp = re[j_best - 1], re[j_best], re[j_best + 1]
            denom = ym - 2.0 * y0 + yp
            if denom < 0.0:
                delta = 0.5 * (ym - yp) / denom
                h = xs[1] - xs[0]
                arg_best = float(xs[j_best] + delta * h)
                re_max = float(y0 - 0.25 * (ym - yp) * delta)
        records.append(
            TraceRecord(
                gap=n,
                im_level=level,
                im_dev=im_dev,
                re_max=re_max,
                argmax=arg_best,
                x=xs if keep_samples else None,
                re_phi=re.copy() if keep_samples else None,
                im_phi=im.copy() if keep_samples else None,
            )
        )
    return records


@dataclass(frozen=True)
class SynthesisProblem:
    """Prescribed critical values on a core window, constant tail tips."""

    targets: SignedCriticalSequence
    tail_value: float = 1.0 / _PI
    padding_K: int = 4
    max_iter: int = 200
    residual_tol: float = 1e-10
    step_tol: float = 1e-12

    def __post_init__(self):
        if self.targets.n_min != -self.targets.n_max:
            raise InvalidInput("SynthesisProblem: targets must live on a symmetric window [-N, N]")
        if np.any(self.targets.values == 0.0):
            raise InvalidInput("SynthesisProblem: target critical values must be nonzero")
        if not (self.tail_value > 0.0) or not np.isfinite(self.tail_value):
            raise InvalidInput("SynthesisProblem: tail_value must be positive and finite")
        if self.padding_K < 0:
            raise InvalidInput("SynthesisProblem: padding_K must be nonnegative")
        if self.max_iter < 1:
            raise InvalidInput("SynthesisProblem: max_iter must be at least 1")

    @property
    def half_width(self) -> int:
        return self.targets.n_max


@dataclass(frozen=True)
class SynthesisResult:
    nodes: IndexedSequence
    achieved: SignedCriticalSequence
    residual: float
    iterations: int
    converged: bool
    F: genfun.SineTail = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes.to_dict(),
            "achieved": self.achieved.to_dict(),
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def _ordering_ok(lam: np.ndarray, N: int) -> bool:
    if np.any(np.diff(lam) < 1e-6):
        return False
    return lam[0] > -N - 1 + 1e-9 and lam[-1] < N + 1 - 1e-9


def _core_log_tips(lam: np.ndarray, N: int, norm: float) -> np.ndarray:
    F = genfun.SineTail(lam, normalization=norm)
    cd = genfun.critical_data(F, (-N, N))
    return cd.values.log_moduli()


def synthesize(problem: SynthesisProblem) -> SynthesisResult:
    """Solve for core nodes whose critical values match the targets.

    Damped Gauss-Newton on log-modulus tip residuals over the core
    window, starting from the integer lattice; the sine tail fixes the
    exponential type and the overall scale (normalization pi*tail_value
    makes every far tip equal tail_value exactly).  The achieved values
    are re-extracted over the padded window [-N-K, N+K] so tail leakage
    next to the core stays visible in the report.
    """
    N = problem.half_width
    K = problem.padding_K
    norm = _PI * problem.tail_value
    target_log = problem.targets.log_moduli()
    fd_step = 1e-6

    lam = np.arange(-N, N + 1, dtype=np.float64)
    r = _core_log_tips(lam, N, norm) - target_log
    rss = float(np.dot(r, r))
    best_rss, best_lam = rss, lam.copy()
    iterations = 0

    # keep polishing somewhat past residual_tol: a sum of squares at the
    # bare tolerance still allows individual tips near its square root,
    # and the extra Gauss-Newton steps are quadratically cheap
    rss_stop = 1e-4 * problem.residual_tol

    while rss > rss_stop and iterations < problem.max_iter:
        iterations += 1
        m = lam.shape[0]
        J = np.empty((m, m))
        for j in range(m):
            pert = lam.copy()
            step = fd_step
            pert[j] += step
            if not _ordering_ok(pert, N):
                step = -fd_step
                pert = lam.copy()
                pert[j] += step
                if not _ordering_ok(pert, N):
                    raise SolverDiverged(
                        "synthesize: nodes too close to difference the Jacobian"
                    )
            J[:, j] = (_core_log_tips(pert, N, norm) - target_log - r) / step
        delta, *_ = np.linalg.lstsq(J, -r, rcond=None)

        alpha = 1.0
        accepted = False
        ordering_seen = False
        while alpha >= 1e-12:
            cand = lam + alpha * delta
            if _ordering_ok(cand, N):
                ordering_seen = True
                r2 = _core_log_tips(cand, N, norm) - target_log
                rss2 = float(np.dot(r2, r2))
                if rss2 < rss:
                    lam, r, rss = cand, r2, rss2
                    accepted = True
                    break
            alpha *= 0.5
        if not accepted:
            if not ordering_seen:
                raise SolverDiverged(
                    "synthesize: could not maintain node ordering along the step"
                )
            break
        if rss < best_rss:
            best_rss, best_lam = rss, lam.copy()
        if float(np.max(np.abs(alpha * delta))) <= problem.step_tol:
            break

    if best_rss < rss:
        rss, lam = best_rss, best_lam
    F = genfun.SineTail(lam, normalization=norm)
    achieved = genfun.critical_data(F, (-N - K, N + K)).values
    nodes = IndexedSequence(n_min=-N, values=lam)
    return SynthesisResult(
        nodes=nodes,
        achieved=achieved,
        residual=rss,
        iterations=iterations,
        converged=bool(rss <= problem.residual_tol),
        F=F,
    )


@dataclass(frozen=True)
class CertifyReport:
    separated: bool
    separation: SeparationReport
    a2_report: MuckenhouptReport
    densities: DensityReport
    verdict: str

    def to_dict(self) -> dict:
        return {
            "separated": self.separated,
            "separation": self.separation.to_dict(),
            "a2_report": self.a2_report.to_dict(),
            "densities": self.densities.to_dict(),
            "verdict": self.verdict,
        }


_DENSITY_BAND = 0.1
_TREND_GROWTH = 1.25


def certify(nodes: IndexedSequence, window_cap: int) -> CertifyReport:
    """Desk-scale consistency certificate for a node window.

    Builds the sine-tail representation when the window can interlace an
    integer tail, otherwise the truncated product; derives weights
    d_n = |F'(lam_n)|^2, scans the discrete ratio at p = 2, and measures
    counting densities with radius a quarter of the span.  The
    unboundedness heuristic compares the maximal ratio at the full
    window cap against half the cap; growth beyond 25 percent flags a
    divergent trend.
    """
    if window_cap < 1:
        raise InvalidInput("certify: window_cap must be at least 1")
    sep = separation(nodes)
    # the tail completion avoids the window-edge envelope that truncated
    # products impose on |F'| (which would swamp the ratio scan)
    F = genfun.tail_completion(nodes)
    weights = genfun.derivative_at_zeros(F, (nodes.n_min, nodes.n_max))
    cap = min(int(window_cap), len(nodes))
    a2 = discrete_ratio(weights, p=2.0, window_cap=cap)
    r = nodes.span / 4.0
    dens = density(nodes, r)

    trend = False
    if cap >= 2:
        half = discrete_ratio(weights, p=2.0, window_cap=max(1, cap // 2))
        if half.max_ratio > 0.0 and a2.max_ratio / half.max_ratio > _TREND_GROWTH:
            trend = True

    if not sep.is_separated:
        verdict = "FAILS_SEPARATION"
    elif abs(dens.d_plus - 1.0) > _DENSITY_BAND or abs(dens.d_minus - 1.0) > _DENSITY_BAND:
        verdict = "FAILS_DENSITY"
    elif trend:
        verdict = "A2_UNBOUNDED_TREND"
    else:
        verdict = "CONSISTENT_WITH_CIS"
    return CertifyReport(
        separated=sep.is_separated,
        separation=sep,
        a2_report=a2,
        densities=dens,
        verdict=verdict,
    )

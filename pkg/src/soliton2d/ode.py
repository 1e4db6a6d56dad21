"""Positive solutions of the soliton profile equation.

The radial profile a(t) of a rotationally symmetric two-dimensional gradient
Ricci soliton satisfies the autonomous first-order equation

    a'(t) = 4 mu a(t)^2 (a(t)/gamma - 1),      gamma = 2 mu / lambda,

with ``gamma`` infinite in the steady case lambda = 0, where the equation
collapses to a'(t) = -4 mu a(t)^2 and is solvable in closed form.  This
module represents profiles on their maximal intervals, integrates them with
an adaptive embedded Runge-Kutta scheme with dense output, detects blow-up
and decay, and applies the scaling/translation symmetries of the solution
space.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from .errors import (
    DomainError,
    MuZeroError,
    NonpositiveAnchorError,
    NotSteadyError,
    StepFailureError,
)

#: Sentinel for gamma in the steady case lambda = 0.
INFINITE = math.inf

#: Event thresholds for the adaptive integrator.
A_BLOWUP = 1.0e8
A_ZERO = 1.0e-10

#: Relative snap width for recognising the constant separatrix a == gamma.
SEPARATRIX_SNAP = 1.0e-13

#: Default integration tolerance (relative); absolute is tol * 1e-2.
DEFAULT_TOL = 1.0e-10

# Endpoint tag kinds.
BLOW_UP = "BLOW_UP"
DECAY_TO_ZERO = "DECAY_TO_ZERO"
CONVERGES = "CONVERGES"
SMOOTH_ORIGIN = "SMOOTH_ORIGIN"
TRUNCATED = "TRUNCATED"


@dataclass(frozen=True)
class SolitonParams:
    """The pair (lambda, mu); gamma = 2 mu / lambda is derived.

    lam is the expansion constant (steady 0, shrinking > 0, expanding < 0)
    and mu the nonvanishing normalization of the rotational Killing field.
    """

    lam: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and math.isfinite(self.mu)):
            raise DomainError("lambda and mu must be finite")
        if self.mu == 0.0:
            raise MuZeroError("mu must be nonzero")

    @property
    def gamma(self) -> float:
        """Separatrix level 2 mu / lambda, INFINITE when lambda = 0."""
        if self.lam == 0.0:
            return INFINITE
        return 2.0 * self.mu / self.lam

    @property
    def is_steady(self) -> bool:
        return self.lam == 0.0

    @property
    def kind(self) -> str:
        if self.lam > 0.0:
            return "shrinking"
        if self.lam < 0.0:
            return "expanding"
        return "steady"

    def rhs(self, a):
        """Right-hand side 2 lambda a^3 - 4 mu a^2 (== 4 mu a^2 (a/gamma - 1))."""
        a = np.asarray(a, dtype=float)
        out = 2.0 * self.lam * a**3 - 4.0 * self.mu * a**2
        return out if out.ndim else float(out)

    def curvature(self, a):
        """Gauss curvature lambda - 2 mu / a of the associated metric."""
        a = np.asarray(a, dtype=float)
        out = self.lam - 2.0 * self.mu / a
        return out if out.ndim else float(out)


def make_params(lam: float, mu: float) -> SolitonParams:
    """Validated constructor for :class:`SolitonParams`."""
    if mu == 0.0:
        raise MuZeroError("mu must be nonzero")
    return SolitonParams(float(lam), float(mu))


@dataclass(frozen=True)
class EndTag:
    """Behavior of a profile at one endpoint of its interval."""

    kind: str
    value: Optional[float] = None  # limit a-value for CONVERGES

    def __str__(self):
        if self.kind == CONVERGES:
            return f"CONVERGES({self.value:g})"
        return self.kind


def _separatrix_time(params: SolitonParams, a: float) -> float:
    """Antiderivative G with G'(a) = 1/a'(a) and G(inf) = 0.

    Exact time-to-level bookkeeping for the separable equation, used for
    integration horizons and analytic tails; valid on a monotone branch.
    """
    mu = params.mu
    g = params.gamma
    if math.isinf(g):
        return 1.0 / (4.0 * mu * a)
    return ((1.0 / g) * math.log(abs(a - g) / a) + 1.0 / a) / (4.0 * mu)


def time_between_levels(params: SolitonParams, a_from: float, a_to: float) -> float:
    """Exact signed time for the solution to move from a_from to a_to.

    ``a_to`` may be ``inf`` (blow-up).  Raises if the two levels straddle
    the positive separatrix.
    """
    if a_from <= 0 or a_to <= 0:
        raise DomainError("levels must be positive")
    g = params.gamma
    if math.isfinite(g) and g > 0:
        if (a_from - g) * (a_to - g) < 0:
            raise DomainError("levels straddle the separatrix a == gamma")
    g_to = 0.0 if math.isinf(a_to) else _separatrix_time(params, a_to)
    return g_to - _separatrix_time(params, a_from)


def blow_up_time_closed(mu: float, gamma: float) -> float:
    """Blow-up time of the solution anchored at a(0) = 1.

    Closed form 4 mu T = -1 - log(1 - gamma)/gamma from the separable
    integral; positive for forward blow-up (increasing solutions), negative
    when the blow-up lies in the past (decreasing solutions).  ``gamma`` may
    be INFINITE (steady case, the log term vanishes).
    """
    if mu == 0.0:
        raise MuZeroError("mu must be nonzero")
    if gamma == 0.0:
        raise DomainError("gamma must be nonzero")
    if math.isinf(gamma):
        return -1.0 / (4.0 * mu)
    if gamma >= 1.0:
        raise DomainError("closed form requires gamma < 1 (log(1 - gamma) undefined)")
    return (-1.0 - math.log1p(-gamma) / gamma) / (4.0 * mu)


# ---------------------------------------------------------------------------
# Phase line analysis.  The equation is autonomous with fixed points at 0 and
# (when finite and positive) gamma, so the fate of a branch in each time
# direction is decided by the sign of a' and the fixed points in the way.
# ---------------------------------------------------------------------------

FATE_BLOWUP = "blowup"
FATE_DECAY = "decay"
FATE_CONVERGE = "converge"
FATE_CONSTANT = "constant"


def _fate(params: SolitonParams, a_ref: float, forward: bool) -> tuple[str, Optional[float]]:
    """Qualitative behavior of the branch through a_ref toward one endpoint."""
    g = params.gamma
    q = params.rhs(a_ref)
    if q == 0.0:
        return FATE_CONSTANT, a_ref
    rising = (q > 0.0) == forward  # does a increase toward this endpoint
    if rising:
        if math.isfinite(g) and 0.0 < g and a_ref < g:
            return FATE_CONVERGE, g
        return FATE_BLOWUP, None
    if math.isfinite(g) and 0.0 < g < a_ref:
        return FATE_CONVERGE, g
    return FATE_DECAY, 0.0


# ---------------------------------------------------------------------------
# Analytic tail models used past the numerically sampled range.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Tail:
    """Local model between the sampled edge and the domain endpoint.

    kinds:
      blowup  : a = |4 lam (T - t)|^(-1/2) + gamma/3, or the exact
                reciprocal-affine branch 1/(4 mu (t - T)) when lam == 0
      decay   : a = 1/(4 mu (t - T)) matched at the edge
      converge: a = a_inf + (a_edge - a_inf) exp(4 mu gamma (t - t_edge))
    """

    kind: str
    params: SolitonParams
    t_edge: float
    a_edge: float
    T: float = math.nan

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        p = self.params
        if self.kind == FATE_BLOWUP:
            if p.lam == 0.0:
                return 1.0 / (4.0 * p.mu * (t - self.T))
            # clamp: evaluation exactly at the (rounded) blow-up time would
            # otherwise divide by an underflowed zero
            d = np.maximum(np.abs(4.0 * p.lam * (self.T - t)), np.finfo(float).tiny)
            return 1.0 / np.sqrt(d) + p.gamma / 3.0
        if self.kind == FATE_DECAY:
            return 1.0 / (4.0 * p.mu * (t - self.T))
        g = p.gamma
        rate = 4.0 * p.mu * g
        return g + (self.a_edge - g) * np.exp(rate * (t - self.t_edge))


def _blowup_refine(params: SolitonParams, t_last: float, a_last: float) -> float:
    """Refine the blow-up time from the last good sample.

    Fits the local model a ~ |4 lam (T - t)|^(-1/2) + gamma/3 (lambda != 0)
    or the exact reciprocal-affine law in the steady case; the correction to
    the raw halting time is O(a_last^-2).
    """
    if params.lam == 0.0:
        return t_last - 1.0 / (4.0 * params.mu * a_last)
    core = a_last - params.gamma / 3.0
    return t_last + 1.0 / (4.0 * params.lam * core * core)


# ---------------------------------------------------------------------------
# ProfileA
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileA:
    """A positive solution a(t) on its interval with endpoint behavior tags.

    Representation is closed form (reciprocal-affine or constant) or a
    sampled dense-output interpolant with analytic tail models toward the
    endpoints.  Symmetry images compose the affine view
    a(t) = amp * core((t - shift)/tscale), sharing the underlying data.
    """

    params: SolitonParams
    t_ref: float
    a_ref: float
    t0: float
    t1: float
    tag0: EndTag
    tag1: EndTag
    kind: str  # "closed_form" | "constant" | "sampled"
    phi: float = math.nan  # reciprocal-affine coefficient (closed_form, core view)
    const_value: float = math.nan
    _fwd: object = None
    _bwd: object = None
    _samp_lo: float = math.nan
    _samp_hi: float = math.nan
    _tail_lo: Optional[_Tail] = None
    _tail_hi: Optional[_Tail] = None
    _grid: Optional[np.ndarray] = None
    amp: float = 1.0
    tscale: float = 1.0
    shift: float = 0.0
    t0_exact: bool = False
    t1_exact: bool = False
    tol: float = DEFAULT_TOL

    # -- evaluation ---------------------------------------------------------

    @property
    def t_ref_core(self) -> float:
        return (self.t_ref - self.shift) / self.tscale

    @property
    def _mu_core(self) -> float:
        # the affine view keeps mu_core == mu_view * amp * tscale invariant
        return self.params.mu * self.amp * self.tscale

    def _core(self, s: np.ndarray) -> np.ndarray:
        """Evaluate the sampled representation at core times s."""
        out = np.empty_like(s)
        lo, hi = self._samp_lo, self._samp_hi
        inside = (s >= lo) & (s <= hi)
        if np.any(inside):
            si = s[inside]
            if self._fwd is None and self._bwd is None:
                out[inside] = self.a_ref / self.amp
            else:
                vals = np.empty_like(si)
                if self._fwd is None:
                    use_b = np.ones_like(si, dtype=bool)
                elif self._bwd is None:
                    use_b = np.zeros_like(si, dtype=bool)
                else:
                    use_b = si <= self.t_ref_core
                if np.any(use_b):
                    vals[use_b] = self._bwd(si[use_b])[0]
                if np.any(~use_b):
                    vals[~use_b] = self._fwd(si[~use_b])[0]
                out[inside] = vals
        below = s < lo
        if np.any(below):
            if self._tail_lo is None:
                raise DomainError("evaluation below the sampled range")
            out[below] = self._tail_lo(s[below])
        above = s > hi
        if np.any(above):
            if self._tail_hi is None:
                raise DomainError("evaluation above the sampled range")
            out[above] = self._tail_hi(s[above])
        return out

    def a(self, t):
        """Profile value(s); valid on the open interval and at finite-limit endpoints."""
        arr = np.atleast_1d(np.asarray(t, dtype=float))
        lo_ok = arr > self.t0 if self.tag0.kind == BLOW_UP else arr >= self.t0
        hi_ok = arr < self.t1 if self.tag1.kind == BLOW_UP else arr <= self.t1
        if not np.all(lo_ok & hi_ok):
            raise DomainError(f"t outside profile domain ({self.t0:g}, {self.t1:g})")
        if self.kind == "constant":
            out = np.full_like(arr, self.const_value)
        elif self.kind == "closed_form":
            out = self.amp / (4.0 * self._mu_core * ((arr - self.shift) / self.tscale) + self.phi)
        else:
            out = self.amp * self._core((arr - self.shift) / self.tscale)
        return out if np.ndim(t) else float(out[0])

    def da(self, t):
        """Exact derivative through the equation itself, a' = rhs(a)."""
        return self.params.rhs(self.a(t))

    # -- diagnostics --------------------------------------------------------

    def residual(self, t: float) -> float:
        """Normalized equation residual |a'_fd - rhs(a)| / (1 + |rhs(a)|).

        a'_fd is a five-point finite-difference derivative of the dense
        representation, taken in the variable 1/a^2 (a >= 1) or 1/a (a < 1)
        so the differenced quantity stays smooth near blow-up and decay.
        """
        t = float(t)
        a0 = self.a(t)
        # h follows the local dynamical rate so the truncation term stays flat
        rate = 4.0 * abs(self.params.mu) * a0 + 2.0 * abs(self.params.lam) * a0 * a0
        h = 6.0e-4 * min(1.0 + abs(t), 1.0 / rate if rate > 0 else math.inf)
        for edge in (self.t0, self.t1):
            if math.isfinite(edge) and edge != t:
                h = min(h, 0.05 * abs(t - edge))
        h = max(h, 1e3 * np.finfo(float).eps * (1.0 + abs(t)))
        ts = t + h * np.array([-2.0, -1.0, 1.0, 2.0])
        av = self.a(ts)
        if a0 >= 1.0:
            f = av**-2.0
            dfdt = (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * h)
            da_fd = -0.5 * a0**3 * dfdt
        else:
            f = 1.0 / av
            dfdt = (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * h)
            da_fd = -(a0**2) * dfdt
        rhs = self.params.rhs(a0)
        return abs(da_fd - rhs) / (1.0 + abs(rhs))

    def max_residual(self, n: int = 100, margin: float = 0.02) -> float:
        """Max residual over n uniform samples of the dense range."""
        lo, hi = self.sample_range(margin)
        return max(self.residual(t) for t in np.linspace(lo, hi, n))

    def sample_range(self, margin: float = 0.0) -> tuple[float, float]:
        """A finite subinterval of the domain suitable for dense sampling."""
        if self.kind == "sampled":
            lo = self._samp_lo * self.tscale + self.shift
            hi = self._samp_hi * self.tscale + self.shift
        else:
            lo = self.t0 if math.isfinite(self.t0) else min(self.t_ref, 0.0) - 1.0
            hi = self.t1 if math.isfinite(self.t1) else max(self.t_ref, 0.0) + 1.0
        pad = margin * (hi - lo)
        return lo + pad, hi - pad

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def monotonicity(self) -> str:
        """'increasing', 'decreasing' or 'constant' (phase-line trichotomy)."""
        if self.is_constant:
            return "constant"
        q = self.params.rhs(self.a_ref)
        if q == 0.0:
            return "constant"
        return "increasing" if q > 0.0 else "decreasing"

    # -- export -------------------------------------------------------------

    def sample_grid(self, n: int = 0) -> np.ndarray:
        """Sample times: solver steps when available, else a uniform grid."""
        if self.kind == "sampled" and self._grid is not None and n == 0:
            return np.sort(self._grid * self.tscale + self.shift)
        lo, hi = self.sample_range(0.0)
        return np.linspace(lo, hi, n if n > 0 else 201)

    def to_csv(self, n: int = 0) -> str:
        """CSV export with header ``t,a,dadt`` at 17 significant digits."""
        ts = self.sample_grid(n)
        buf = io.StringIO()
        buf.write("t,a,dadt\n")
        av = np.atleast_1d(self.a(ts))
        dv = np.atleast_1d(self.params.rhs(av))
        for t, a, d in zip(ts, av, dv):
            buf.write(f"{t:.17g},{a:.17g},{d:.17g}\n")
        return buf.getvalue()


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def closed_form_profile(params: SolitonParams, phi: float) -> ProfileA:
    """Steady-case closed form a(t) = 1/(4 mu t + phi) on its maximal interval."""
    if not math.isinf(params.gamma):
        raise NotSteadyError("closed form requires lambda = 0 (gamma INFINITE)")
    mu = params.mu
    phi = float(phi)
    t_pole = -phi / (4.0 * mu)
    if mu < 0.0:
        t0, t1 = -math.inf, t_pole
        tag0, tag1 = EndTag(DECAY_TO_ZERO), EndTag(BLOW_UP)
    else:
        t0, t1 = t_pole, math.inf
        tag0, tag1 = EndTag(BLOW_UP), EndTag(DECAY_TO_ZERO)
    # anchor one unit of 1/(4|mu|) inside the domain, where a = 1
    t_ref = t_pole + (1.0 if mu > 0 else -1.0) / (4.0 * abs(mu))
    a_ref = 1.0 / (4.0 * mu * t_ref + phi)
    return ProfileA(
        params=params, t_ref=t_ref, a_ref=a_ref, t0=t0, t1=t1,
        tag0=tag0, tag1=tag1, kind="closed_form", phi=phi,
        t0_exact=True, t1_exact=True,
    )


def constant_profile(params: SolitonParams, window: tuple[float, float]) -> ProfileA:
    """The separatrix solution a == gamma restricted to a window."""
    g = params.gamma
    if not (math.isfinite(g) and g > 0.0):
        raise DomainError("constant positive solution requires finite gamma > 0")
    t_lo, t_hi = float(window[0]), float(window[1])
    t_ref = t_lo if math.isfinite(t_lo) else (t_hi if math.isfinite(t_hi) else 0.0)
    return ProfileA(
        params=params, t_ref=t_ref, a_ref=g, t0=t_lo, t1=t_hi,
        tag0=EndTag(TRUNCATED), tag1=EndTag(TRUNCATED),
        kind="constant", const_value=g,
    )


def _integrate_one_direction(params, t_ref, a_ref, t_end, fate, target, tol):
    """solve_ivp toward t_end with a terminal event for the predicted fate.

    Returns (solution, t_stop, a_stop, how) with how in {'event', 'edge'}.
    """
    rtol = max(tol * 1e-2, 5e-14)
    atol = rtol * 1e-2
    events = []
    if fate == FATE_BLOWUP:
        ev = lambda t, y: y[0] - A_BLOWUP
        ev.terminal = True
        events.append(ev)
    elif fate == FATE_DECAY:
        ev = lambda t, y: y[0] - A_ZERO
        ev.terminal = True
        events.append(ev)
    elif fate == FATE_CONVERGE:
        eps = 1e-12 * max(1.0, abs(target))
        ev = lambda t, y: abs(y[0] - target) - eps
        ev.terminal = True
        events.append(ev)
    sol = solve_ivp(
        lambda t, y: [params.rhs(y[0])], (t_ref, t_end), [a_ref],
        method="DOP853", rtol=rtol, atol=atol, dense_output=True, events=events,
    )
    if sol.status == 1:
        t_stop = float(sol.t_events[0][0])
        return sol, t_stop, float(sol.sol(t_stop)[0]), "event"
    if sol.status == 0:
        return sol, float(sol.t[-1]), float(sol.y[0][-1]), "edge"
    # Step failure.  Near a blow-up this is expected once the square-root
    # singularity outruns float spacing; accept the last state as the halt.
    a_last = float(sol.y[0][-1]) if sol.y.size else a_ref
    if fate == FATE_BLOWUP and a_last >= 1e3:
        return sol, float(sol.t[-1]), a_last, "event"
    raise StepFailureError(
        f"integrator failed at t = {sol.t[-1]!r}: {sol.message}", last_t=float(sol.t[-1])
    )


def _horizon(params, a_ref, fate, target):
    """A finite time budget guaranteed to contain the terminal event."""
    if fate == FATE_BLOWUP:
        dt = abs(time_between_levels(params, a_ref, math.inf))
    elif fate == FATE_DECAY:
        dt = abs(time_between_levels(params, a_ref, 0.5 * A_ZERO))
    elif fate == FATE_CONVERGE:
        # exact time to pass strictly inside the convergence event surface
        g = target
        eps = 0.4e-12 * max(1.0, abs(g))
        level = g - eps if a_ref < g else g + eps
        dt = abs(time_between_levels(params, a_ref, level))
    else:
        dt = 1.0
    return 2.0 * dt + 1.0


def integrate_profile(
    params: SolitonParams,
    t_ref: float,
    a_ref: float,
    window: tuple[float, float],
    tol: float = DEFAULT_TOL,
) -> ProfileA:
    """Integrate the profile through (t_ref, a_ref) on window cap maximal interval.

    Halts on the blow-up/decay thresholds or on convergence to the stable
    separatrix; blow-up times are refined with the local square-root (or
    steady reciprocal) model.  Anchors within SEPARATRIX_SNAP of gamma snap
    to the constant solution.
    """
    if not math.isfinite(a_ref) or a_ref <= 0.0:
        raise NonpositiveAnchorError("a_ref must be positive")
    t_lo, t_hi = float(window[0]), float(window[1])
    if not (t_lo <= t_ref <= t_hi):
        raise DomainError("window must contain t_ref")
    if tol <= 0.0:
        raise DomainError("tol must be positive")

    g = params.gamma
    if math.isfinite(g) and g > 0.0 and abs(a_ref - g) <= SEPARATRIX_SNAP * max(1.0, g):
        return constant_profile(params, (t_lo, t_hi))

    samp_lo = samp_hi = t_ref
    fwd_sol = bwd_sol = None
    tail_lo = tail_hi = None
    t0, t1 = t_ref, t_ref
    tag0, tag1 = EndTag(TRUNCATED), EndTag(TRUNCATED)
    t0_exact = t1_exact = False
    grids = [np.array([t_ref])]

    for forward in (True, False):
        t_edge = t_hi if forward else t_lo
        if (forward and t_edge <= t_ref) or (not forward and t_edge >= t_ref):
            continue
        fate, target = _fate(params, a_ref, forward)
        t_end = t_edge
        if math.isinf(t_end):
            budget = _horizon(params, a_ref, fate, target)
            t_end = t_ref + budget if forward else t_ref - budget
        sol, t_stop, a_stop, how = _integrate_one_direction(
            params, t_ref, a_ref, t_end, fate, target, tol
        )
        if sol.t.size >= 2:
            grids.append(sol.t)
            dense = sol.sol
        else:
            dense = None
        if forward:
            fwd_sol, samp_hi = dense, t_stop
        else:
            bwd_sol, samp_lo = dense, t_stop

        if how == "edge":
            endpoint, tag, exact, tail = t_stop, EndTag(TRUNCATED), False, None
        elif fate == FATE_BLOWUP:
            T = _blowup_refine(params, t_stop, a_stop)
            endpoint, tag, exact = T, EndTag(BLOW_UP), False
            tail = _Tail(FATE_BLOWUP, params, t_stop, a_stop, T)
        elif fate == FATE_DECAY:
            c = t_stop - 1.0 / (4.0 * params.mu * a_stop)
            endpoint = math.inf if forward else -math.inf
            tag, exact = EndTag(DECAY_TO_ZERO), True
            tail = _Tail(FATE_DECAY, params, t_stop, a_stop, c)
        else:
            endpoint = math.inf if forward else -math.inf
            tag, exact = EndTag(CONVERGES, target), True
            tail = _Tail(FATE_CONVERGE, params, t_stop, a_stop)

        if forward:
            t1, tag1, t1_exact, tail_hi = endpoint, tag, exact, tail
        else:
            t0, tag0, t0_exact, tail_lo = endpoint, tag, exact, tail

    profile = ProfileA(
        params=params, t_ref=t_ref, a_ref=a_ref, t0=t0, t1=t1,
        tag0=tag0, tag1=tag1, kind="sampled",
        _fwd=fwd_sol, _bwd=bwd_sol, _samp_lo=samp_lo, _samp_hi=samp_hi,
        _tail_lo=tail_lo, _tail_hi=tail_hi,
        _grid=np.unique(np.concatenate(grids)),
        t0_exact=t0_exact, t1_exact=t1_exact, tol=tol,
    )
    if profile.t0 == 0.0 and profile.tag0.kind == TRUNCATED:
        if abs(profile.a(0.0) - 1.0) <= 1e-8:
            profile = replace(profile, tag0=EndTag(SMOOTH_ORIGIN))
    return profile


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Scale:
    """Amplitude action a -> alpha a; (lam, mu, gamma) -> (lam/a^2, mu/a, a gamma)."""

    alpha: float


@dataclass(frozen=True)
class Rescale:
    """Metric scaling by beta^2: a -> a(t/beta^2); (lam, mu) -> (lam, mu)/beta^2."""

    beta: float


@dataclass(frozen=True)
class Translate:
    """Time translation a -> a(t - tau); parameters unchanged."""

    tau: float


def _transform_tag(tag: EndTag, amp: float) -> EndTag:
    if tag.kind == CONVERGES:
        return EndTag(CONVERGES, tag.value * amp)
    return tag


def apply_symmetry(profile: ProfileA, action) -> ProfileA:
    """Image of a profile under one of the three solution-space actions.

    The returned profile shares the underlying representation through an
    affine change of view, so it satisfies the equation for its transformed
    parameters to the accuracy of the original data.
    """
    if isinstance(action, Scale):
        alpha = float(action.alpha)
        if alpha <= 0.0:
            raise DomainError("alpha must be positive")
        new_params = SolitonParams(profile.params.lam / alpha**2, profile.params.mu / alpha)
        amp, tsc, shf = alpha, 1.0, 0.0
    elif isinstance(action, Rescale):
        beta = float(action.beta)
        if beta <= 0.0:
            raise DomainError("beta must be positive")
        b2 = beta * beta
        new_params = SolitonParams(profile.params.lam / b2, profile.params.mu / b2)
        amp, tsc, shf = 1.0, b2, 0.0
    elif isinstance(action, Translate):
        new_params = profile.params
        amp, tsc, shf = 1.0, 1.0, float(action.tau)
    else:
        raise DomainError(f"unknown symmetry action {action!r}")

    def fwd_t(t):
        return t if math.isinf(t) else t * tsc + shf

    return replace(
        profile,
        params=new_params,
        t_ref=fwd_t(profile.t_ref),
        a_ref=amp * profile.a_ref,
        t0=fwd_t(profile.t0),
        t1=fwd_t(profile.t1),
        tag0=_transform_tag(profile.tag0, amp),
        tag1=_transform_tag(profile.tag1, amp),
        const_value=profile.const_value * amp,
        amp=profile.amp * amp,
        tscale=profile.tscale * tsc,
        shift=profile.shift * tsc + shf,
    )

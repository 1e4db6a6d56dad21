"""The curvature entropy E[g] = int K log|K| dA and its first variation.

For rotationally symmetric metrics and radial perturbations
h = phi g + psi (dr^2 - b^2 dtheta^2) the variation reduces to

  dE[h] = -(1/4) int 2 phi (u'' + (b'/b) u' + 2K) 2 pi b dr
          +(1/2) int psi  (u'' - (b'/b) u') 2 pi b dr,        u = log|K|,

so soliton metrics (trace-free Hessian of u zero, Laplacian pinned) are
exactly the critical points under area-preserving (trace-free) variations,
and diffeomorphism invariance forces u'' + (b'/b)u' + 2K to be constant
(= 2 lambda) at critical metrics.  The finite-difference route rebuilds the
perturbed metric from its first fundamental form and recomputes curvature
by differencing, fully independent of the analytic formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .errors import DomainError, WindowError, ZeroCurvatureError
from .geometry import WarpedMetric

ZERO_K = 1.0e-12


def bump(x):
    """C-infinity bump exp(1 - 1/(1-x^2)) on (-1, 1), peak value 1."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    xi = x[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - xi * xi))
    return out


def bump_prime(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    xi = x[inside]
    one = 1.0 - xi * xi
    out[inside] = np.exp(1.0 - 1.0 / one) * (-2.0 * xi / (one * one))
    return out


@dataclass(frozen=True)
class VariationField:
    """Compactly supported radial variation on a window.

    phi is the conformal part (h contains phi * g, trace 2 phi) and psi the
    trace-free radial part (pointwise norm psi * sqrt(2)).  Both are given
    as callables of r vanishing with two derivatives at the window ends.
    """

    r0: float
    r1: float
    phi: Optional[Callable] = None
    psi: Optional[Callable] = None

    def __post_init__(self):
        if not self.r0 < self.r1:
            raise WindowError("empty variation window")
        h = 1e-5 * (self.r1 - self.r0)
        for fn in (self.phi, self.psi):
            if fn is None:
                continue
            for edge in (self.r0, self.r1):
                stencil = np.array([edge - 2 * h, edge - h, edge, edge + h, edge + 2 * h])
                vals = np.asarray(fn(np.clip(stencil, self.r0, self.r1)))
                d1 = (vals[3] - vals[1]) / (2 * h)
                d2 = (vals[3] - 2 * vals[2] + vals[1]) / (h * h)
                if max(abs(vals[2]), abs(d1) * h, abs(d2) * h * h) > 1e-12:
                    raise WindowError(
                        "variation must vanish with two derivatives at the window ends"
                    )

    def phi_at(self, r):
        return self.phi(r) if self.phi is not None else np.zeros_like(np.asarray(r, float))

    def psi_at(self, r):
        return self.psi(r) if self.psi is not None else np.zeros_like(np.asarray(r, float))


def bump_variation(window, phi_amp: float = 0.0, psi_amp: float = 0.0,
                   center: float | None = None, width: float | None = None) -> VariationField:
    """Bump-shaped variation supported in the window."""
    r0, r1 = float(window[0]), float(window[1])
    c = 0.5 * (r0 + r1) if center is None else center
    wd = 0.5 * (r1 - r0) if width is None else width

    def mk(amp):
        if amp == 0.0:
            return None
        return lambda r: amp * bump((np.asarray(r, float) - c) / wd)

    return VariationField(r0=r0, r1=r1, phi=mk(phi_amp), psi=mk(psi_amp))


def lie_variation(metric: WarpedMetric, window, amp: float = 1.0) -> VariationField:
    """The variation h = L_X g of the radial field X = xi(r) d/dr, xi a bump.

    Decomposes as phi = div X = xi' + (b'/b) xi and psi = xi' - (b'/b) xi.
    """
    r0, r1 = float(window[0]), float(window[1])
    c, wd = 0.5 * (r0 + r1), 0.5 * (r1 - r0)

    def xi(r):
        return amp * bump((np.asarray(r, float) - c) / wd)

    def xi_p(r):
        return amp * bump_prime((np.asarray(r, float) - c) / wd) / wd

    def cot(r):
        b = np.interp(r, metric.r, metric.b)
        bp = np.interp(r, metric.r, metric.b_prime)
        return bp / b

    return VariationField(
        r0=r0, r1=r1,
        phi=lambda r: xi_p(r) + cot(r) * xi(r),
        psi=lambda r: xi_p(r) - cot(r) * xi(r),
    )


def _window_slice(metric: WarpedMetric, window, pad: int = 0) -> slice:
    r0, r1 = float(window[0]), float(window[1])
    if r0 >= r1:
        raise WindowError("empty window")
    i0 = int(np.searchsorted(metric.r, r0, side="left"))
    i1 = int(np.searchsorted(metric.r, r1, side="right"))
    i0 = max(i0 - pad, 0)
    i1 = min(i1 + pad, metric.r.size)
    if i1 - i0 < 9:
        raise WindowError("window covers too few grid points")
    return slice(i0, i1)


def _check_nonzero_K(K: np.ndarray):
    if np.any(np.abs(K) < ZERO_K):
        raise ZeroCurvatureError("Gauss curvature vanishes inside the window")


def _band_integral(metric: WarpedMetric, window, f_of_bK) -> float:
    """int f(b, K) dr over [r0, r1]: Simpson on the covered grid points plus
    trapezoid corrections for the fractional end cells."""
    r0 = max(float(window[0]), float(metric.r[0]))
    r1 = min(float(window[1]), float(metric.r[-1]))
    sl = _window_slice(metric, (r0, r1))
    r, b, K = metric.r[sl], metric.b[sl], metric.K[sl]
    _check_nonzero_K(K)
    total = float(simpson(f_of_bK(b, K), x=r))
    for edge, node_r, node_f in ((r0, r[0], None), (r1, r[-1], None)):
        gap = abs(node_r - edge)
        if gap > 1e-300:
            be = float(np.interp(edge, metric.r, metric.b))
            Ke = float(np.interp(edge, metric.r, metric.K))
            _check_nonzero_K(np.array([Ke]))
            f_edge = float(f_of_bK(np.array([be]), np.array([Ke]))[0])
            f_node = float(f_of_bK(
                np.array([b[0] if edge == r0 else b[-1]]),
                np.array([K[0] if edge == r0 else K[-1]]),
            )[0])
            total += 0.5 * (f_edge + f_node) * gap
    return total


def energy(metric: WarpedMetric, window) -> float:
    """E over the radial band: 2 pi int_{r0}^{r1} K log|K| b dr."""
    return 2.0 * math.pi * _band_integral(
        metric, window, lambda b, K: K * np.log(np.abs(K)) * b
    )


def total_curvature(metric: WarpedMetric, window) -> float:
    """2 pi int K b dr over the window."""
    return 2.0 * math.pi * _band_integral(metric, window, lambda b, K: K * b)


def _u_derivatives(metric: WarpedMetric, sl: slice):
    """(r, b, K, u', u'', b'/b) by central differences on the slice interior."""
    r, b, K = metric.r[sl], metric.b[sl], metric.K[sl]
    _check_nonzero_K(K)
    h = metric.spacing
    u = np.log(np.abs(K))
    up = (u[2:] - u[:-2]) / (2.0 * h)
    upp = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / (h * h)
    bp = (b[2:] - b[:-2]) / (2.0 * h)
    inner = slice(1, -1)
    return r[inner], b[inner], K[inner], up, upp, bp / b[inner]


def first_variation(metric: WarpedMetric, v: VariationField) -> float:
    """Analytic first variation of E along the field v (radial reduction)."""
    if v.r0 < metric.r[0] - 1e-12 or v.r1 > metric.r[-1] + 1e-12:
        raise WindowError("variation support exceeds the metric domain")
    sl = _window_slice(metric, (v.r0, v.r1), pad=2)
    r, b, K, up, upp, cot = _u_derivatives(metric, sl)
    phi = np.asarray(v.phi_at(r))
    psi = np.asarray(v.psi_at(r))
    trace_term = -0.25 * simpson(2.0 * phi * (upp + cot * up + 2.0 * K) * 2.0 * math.pi * b, x=r)
    tf_term = 0.5 * simpson(psi * (upp - cot * up) * 2.0 * math.pi * b, x=r)
    return float(trace_term + tf_term)


def noether_defect(metric: WarpedMetric, window) -> float:
    """sup over the window of |u'' + (b'/b)u' + 2K - 2 lambda|.

    Diffeomorphism invariance makes this combination constant at critical
    metrics, and the profile equation pins the constant to 2 lambda.
    """
    sl = _window_slice(metric, window)
    r, b, K, up, upp, cot = _u_derivatives(metric, sl)
    return float(np.max(np.abs(upp + cot * up + 2.0 * K - 2.0 * metric.params.lam)))


def _perturbed_energy(metric: WarpedMetric, v: VariationField, eps: float,
                      sl: slice) -> float:
    """Energy of g + eps h rebuilt from the perturbed first fundamental form.

    The radial coefficient becomes 1 + eps (phi + psi) and the angular one
    b^2 (1 + eps (phi - psi)); arc length is re-accumulated, curvature
    recomputed by differencing on the new (nonuniform) radial grid.
    """
    r = metric.r[sl]
    b = metric.b[sl]
    phi = np.asarray(v.phi_at(r))
    psi = np.asarray(v.psi_at(r))
    g_rr = 1.0 + eps * (phi + psi)
    g_tt_fac = 1.0 + eps * (phi - psi)
    if np.any(g_rr <= 0.0) or np.any(g_tt_fac <= 0.0):
        raise DomainError("perturbation too large: metric degenerates")
    dr_fac = np.sqrt(g_rr)
    rt = np.concatenate([[0.0], cumulative_simpson(dr_fac, x=r)]) + r[0]
    bt = b * np.sqrt(g_tt_fac)
    # second derivative on the nonuniform grid rt
    h1 = rt[1:-1] - rt[:-2]
    h2 = rt[2:] - rt[1:-1]
    bpp = 2.0 * (h1 * bt[2:] - (h1 + h2) * bt[1:-1] + h2 * bt[:-2]) / (h1 * h2 * (h1 + h2))
    Kt = -bpp / bt[1:-1]
    _check_nonzero_K(Kt)
    integrand = Kt * np.log(np.abs(Kt)) * bt[1:-1] * dr_fac[1:-1]
    return 2.0 * math.pi * float(simpson(integrand, x=r[1:-1]))


def fd_variation(metric: WarpedMetric, v: VariationField, eps: float = 1e-4) -> float:
    """Central-difference variation (E[g + eps h] - E[g - eps h]) / (2 eps).

    Independent oracle for the analytic formula: the perturbed metrics are
    rebuilt from their first fundamental forms, so no piece of the analytic
    variation enters.
    """
    if eps <= 0.0:
        raise DomainError("eps must be positive")
    sl = _window_slice(metric, (v.r0, v.r1), pad=3)
    e_plus = _perturbed_energy(metric, v, +eps, sl)
    e_minus = _perturbed_energy(metric, v, -eps, sl)
    return float((e_plus - e_minus) / (2.0 * eps))


def variation_report(metric: WarpedMetric, v: VariationField, eps: float = 1e-4) -> dict:
    """Analytic/finite-difference comparison plus the conservation defect."""
    analytic = first_variation(metric, v)
    fd = fd_variation(metric, v, eps)
    errs, epss = [], []
    for k in range(3):
        e = eps / (2.0**k)
        errs.append(abs(fd_variation(metric, v, e) - analytic))
        epss.append(e)
    errs = np.asarray(errs)
    if np.all(errs > 0.0):
        slope = float(np.polyfit(np.log(epss), np.log(errs), 1)[0])
    else:
        slope = math.inf  # differences vanished below roundoff
    return {
        "analytic": analytic,
        "finite_difference": fd,
        "eps": eps,
        "slope_estimate": slope,
        "noether_defect": noether_defect(metric, (v.r0, v.r1)),
    }

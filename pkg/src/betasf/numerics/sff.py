"""Spectral form factor curves: dip, ramp, and plateau.

The connected part is the diagonal structure function (a cumulative
quadrature of the Laguerre-kernel density along the phase axis), the
disconnected part the squared mean form factor.  Both are tabulated on a
shared phase grid together with the global and bulk scaling coordinates, so
downstream consumers can read any regime off one curve.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import sqrt
from pathlib import Path

import numpy as np

from .identities import mean_form_factor
from .kernels import lue_kernel_diag
from .quadrature import DEFAULT_POLICY, AccuracyPolicy, integrate

CSV_COLUMNS = ("k", "tau_g", "tau_b", "connected", "disconnected", "error_estimates")


@dataclass(frozen=True)
class SffCurve:
    """Tabulated form factor for one matrix size.

    `connected[i]` integrates the kernel density over [0, k[i]] and is exact
    zero at k = 0; `error[i]` is the accumulated quadrature error bound.
    """

    n: int
    k: np.ndarray
    connected: np.ndarray
    disconnected: np.ndarray
    error: np.ndarray

    @property
    def tau_g(self) -> np.ndarray:
        return self.k * sqrt(2.0 * self.n)

    @property
    def tau_b(self) -> np.ndarray:
        return self.k / (2.0 * sqrt(2.0 * self.n))

    def rows(self):
        for i in range(self.k.size):
            yield {
                "k": self.k[i],
                "tau_g": self.tau_g[i],
                "tau_b": self.tau_b[i],
                "connected": self.connected[i],
                "disconnected": self.disconnected[i],
                "error_estimates": self.error[i],
            }


def sff_curve_grid(
    n: int, grid, policy: AccuracyPolicy = DEFAULT_POLICY
) -> SffCurve:
    """Tabulate connected and disconnected form factors on a phase grid.

    The grid must be nonnegative and strictly increasing; a leading zero is
    allowed and produces the exact connected(0) = 0 row.
    """
    if n < 1:
        raise ValueError("sff_curve_grid needs n >= 1")
    k = np.asarray(grid, dtype=float)
    if k.ndim != 1 or k.size < 2:
        raise ValueError("grid must be one-dimensional with at least two points")
    if k[0] < 0.0 or np.any(np.diff(k) <= 0.0):
        raise ValueError("grid must be nonnegative and strictly increasing")

    def density(t):
        return t * lue_kernel_diag(n, t * t / 2.0)

    connected = np.zeros_like(k)
    error = np.zeros_like(k)
    total = 0.0
    err = 0.0
    for i in range(1, k.size):
        segment = integrate(density, k[i - 1], k[i], policy)
        total += float(np.real(segment.value))
        err += segment.error
        connected[i] = total
        error[i] = err

    disconnected = np.asarray(mean_form_factor(n, k)) ** 2
    return SffCurve(n, k, connected, disconnected, error)


def sff_curve(
    n: int,
    kmax: float,
    points: int,
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> SffCurve:
    """Tabulate the form factors on the uniform grid [0, kmax]."""
    if kmax <= 0.0 or points < 2:
        raise ValueError("sff_curve needs kmax > 0 and points >= 2")
    return sff_curve_grid(n, np.linspace(0.0, float(kmax), int(points)), policy)


def write_csv(curve: SffCurve, target) -> None:
    """Write the curve to a path or an open text handle."""
    if hasattr(target, "write"):
        _write_rows(curve, target)
        return
    with Path(target).open("w", newline="") as handle:
        _write_rows(curve, handle)


def _write_rows(curve: SffCurve, handle) -> None:
    writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in curve.rows():
        writer.writerow({key: repr(float(row[key])) for key in CSV_COLUMNS})


def dip_slope(
    n: int,
    k_window: tuple = (1.0, 4.2),
    grid_points: int = 4001,
) -> float:
    """Fitted log-log slope of the disconnected envelope in the dip window.

    The disconnected part oscillates under a k^{-3} envelope between the
    initial falloff and the spectral edge; fitting the local maxima over
    1 <= k <= about sqrt(2 n) reads the envelope exponent without the zeros
    dragging the fit.
    """
    lo, hi = k_window
    k = np.linspace(max(lo * 0.8, 1e-3), hi * 1.05, grid_points)
    values = np.asarray(mean_form_factor(n, k)) ** 2
    inner = (values[1:-1] > values[:-2]) & (values[1:-1] > values[2:])
    peaks = np.where(inner)[0] + 1
    keep = (k[peaks] >= lo) & (k[peaks] <= hi)
    peaks = peaks[keep]
    if peaks.size < 3:
        raise ValueError("dip window contains too few envelope maxima to fit")
    return float(np.polyfit(np.log(k[peaks]), np.log(values[peaks]), 1)[0])


def plateau_deviation(
    n: int,
    multiples: tuple = (4.0, 5.0, 6.0),
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> float:
    """Largest relative deviation |connected/n - 1| at k = m sqrt(2 n)."""
    from .identities import sbar

    worst = 0.0
    for m in multiples:
        value = sbar(n, m * sqrt(2.0 * n), policy)
        worst = max(worst, abs(value / n - 1.0))
    return worst

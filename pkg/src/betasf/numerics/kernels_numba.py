"""Numba-compiled twin of `kernels_numpy`.

Same recurrences, written as explicit loops over evaluation points so numba
can keep everything in registers; lazily specialized per dtype, so the
complex paths used for analytically continued arguments compile on demand.
Public names and semantics match `kernels_numpy` exactly (1-d inputs here;
the facade handles broadcasting).
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

DIAG_SWITCH = 1e-6

_SQRT_PI_INV_QUARTER = math.pi ** (-0.25)


@njit(cache=True)
def hermite_pair(n, x):
    h_prev = np.zeros_like(x)
    h = np.zeros_like(x)
    for i in range(x.shape[0]):
        hp = x[0] * 0.0
        hc = _SQRT_PI_INV_QUARTER * np.exp(-x[i] * x[i] / 2.0)
        for m in range(n):
            hp, hc = hc, x[i] * math.sqrt(2.0 / (m + 1)) * hc - math.sqrt(
                m / (m + 1.0)
            ) * hp
        h_prev[i] = hp
        h[i] = hc
    return h_prev, h


@njit(cache=True)
def gue_diag(n, x):
    acc = np.zeros_like(x)
    for i in range(x.shape[0]):
        hp = x[0] * 0.0
        hc = _SQRT_PI_INV_QUARTER * np.exp(-x[i] * x[i] / 2.0)
        s = x[0] * 0.0
        for m in range(n):
            s += hc * hc
            hp, hc = hc, x[i] * math.sqrt(2.0 / (m + 1)) * hc - math.sqrt(
                m / (m + 1.0)
            ) * hp
        acc[i] = s
    return acc


@njit(cache=True)
def gue_sum(n, x, y):
    acc = np.zeros_like(x * y)
    for i in range(x.shape[0]):
        hxp = x[0] * 0.0
        hx = _SQRT_PI_INV_QUARTER * np.exp(-x[i] * x[i] / 2.0)
        hyp = y[0] * 0.0
        hy = _SQRT_PI_INV_QUARTER * np.exp(-y[i] * y[i] / 2.0)
        s = acc[0] * 0.0
        for m in range(n):
            s += hx * hy
            c1 = math.sqrt(2.0 / (m + 1))
            c2 = math.sqrt(m / (m + 1.0))
            hxp, hx = hx, x[i] * c1 * hx - c2 * hxp
            hyp, hy = hy, y[i] * c1 * hy - c2 * hyp
        acc[i] = s
    return acc


@njit(cache=True)
def _hermite_four(n, t):
    hp = t * 0.0
    hc = _SQRT_PI_INV_QUARTER * np.exp(-t * t / 2.0)
    dp = t * 0.0
    dc = -t * hc
    for m in range(n):
        c1 = math.sqrt(2.0 / (m + 1))
        c2 = math.sqrt(m / (m + 1.0))
        hp, hc, dp, dc = hc, t * c1 * hc - c2 * hp, dc, c1 * (hc + t * dc) - c2 * dp
    return hp, hc, dp, dc


@njit(cache=True)
def gue_cd(n, x, y):
    out = np.zeros_like(x * y)
    root = math.sqrt(n / 2.0)
    for i in range(x.shape[0]):
        delta = x[i] - y[i]
        if abs(delta) < DIAG_SWITCH * (abs(x[i]) + abs(y[i]) + 1.0):
            hp, hc, dp, dc = _hermite_four(n, (x[i] + y[i]) / 2.0)
            out[i] = root * (hp * dc - hc * dp)
        else:
            hxp, hx, _, _ = _hermite_four(n, x[i])
            hyp, hy, _, _ = _hermite_four(n, y[i])
            out[i] = root * (hx * hyp - hxp * hy) / delta
    return out


@njit(cache=True)
def laguerre_pair(n, x):
    l_prev = np.zeros_like(x)
    l_cur = np.zeros_like(x)
    for i in range(x.shape[0]):
        lp = x[0] * 0.0
        lc = np.exp(-x[i] / 2.0)
        for m in range(n):
            lp, lc = lc, ((2 * m + 1 - x[i]) * lc - m * lp) / (m + 1)
        l_prev[i] = lp
        l_cur[i] = lc
    return l_prev, l_cur


@njit(cache=True)
def lue_diag(n, x):
    acc = np.zeros_like(x)
    for i in range(x.shape[0]):
        lp = x[0] * 0.0
        lc = np.exp(-x[i] / 2.0)
        s = x[0] * 0.0
        for m in range(n):
            s += lc * lc
            lp, lc = lc, ((2 * m + 1 - x[i]) * lc - m * lp) / (m + 1)
        acc[i] = s
    return acc


@njit(cache=True)
def lue_sum(n, x, y):
    acc = np.zeros_like(x * y)
    for i in range(x.shape[0]):
        lxp = x[0] * 0.0
        lx = np.exp(-x[i] / 2.0)
        lyp = y[0] * 0.0
        ly = np.exp(-y[i] / 2.0)
        s = acc[0] * 0.0
        for m in range(n):
            s += lx * ly
            lxp, lx = lx, ((2 * m + 1 - x[i]) * lx - m * lxp) / (m + 1)
            lyp, ly = ly, ((2 * m + 1 - y[i]) * ly - m * lyp) / (m + 1)
        acc[i] = s
    return acc


@njit(cache=True)
def _laguerre_four(n, t):
    lp = t * 0.0
    lc = np.exp(-t / 2.0)
    dp = t * 0.0
    dc = -lc / 2.0
    for m in range(n):
        lp, lc, dp, dc = (
            lc,
            ((2 * m + 1 - t) * lc - m * lp) / (m + 1),
            dc,
            (-lc + (2 * m + 1 - t) * dc - m * dp) / (m + 1),
        )
    return lp, lc, dp, dc


@njit(cache=True)
def lue_cd(n, x, y):
    out = np.zeros_like(x * y)
    for i in range(x.shape[0]):
        delta = y[i] - x[i]
        if abs(delta) < DIAG_SWITCH * (abs(x[i]) + abs(y[i]) + 1.0):
            lp, lc, dp, dc = _laguerre_four(n, (x[i] + y[i]) / 2.0)
            out[i] = n * (lc * dp - lp * dc)
        else:
            lxp, lx, _, _ = _laguerre_four(n, x[i])
            lyp, ly, _, _ = _laguerre_four(n, y[i])
            out[i] = n * (lx * lyp - lxp * ly) / delta
    return out


@njit(cache=True)
def lue_cd_diag(n, x):
    out = np.zeros_like(x)
    for i in range(x.shape[0]):
        lp, lc, dp, dc = _laguerre_four(n, x[i])
        out[i] = n * (lc * dp - lp * dc)
    return out


@njit(cache=True)
def laguerre_ell1(n, x):
    out = np.zeros_like(x)
    for i in range(x.shape[0]):
        lp = x[0] * 0.0
        lc = np.exp(-x[i] / 2.0)
        for m in range(n):
            lp, lc = lc, ((2 * m + 2 - x[i]) * lc - (m + 1) * lp) / (m + 1)
        out[i] = lc
    return out

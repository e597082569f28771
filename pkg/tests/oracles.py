"""Shared high-precision and closed-form oracles used across the test suite.

Everything here is deliberately independent of the rigorous code paths it
checks: mpmath at 256-bit precision for elementary functions, sympy series
for jet recurrences, and the variation-of-constants closed form for the
first unit interval of the delay equation.
"""

from __future__ import annotations

import math
import random

import mpmath

mp = mpmath.mp

ELEM_PRECISION_BITS = 256


def mp_ctx():
    ctx = mpmath.mp.clone()
    ctx.prec = ELEM_PRECISION_BITS
    return ctx


def contains_mp(iv, value) -> bool:
    """True if the mpmath value lies inside the Interval (exact comparison)."""
    return mpmath.mpf(iv.lo) <= value <= mpmath.mpf(iv.hi)


def random_float(rng: random.Random, lo: float, hi: float) -> float:
    return rng.uniform(lo, hi)


def log_uniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def first_interval_solution(k: float, c: float, d: float, x0: float, tau: float) -> float:
    """x(tau) for x' = -c x + d (e^{-c t})**k on [0, 1] with x(0) = x0.

    Variation of constants gives
    ``x(t) = e^{-ct} (x0 + d * I(t))`` with ``I(t) = \\int_0^t e^{(1-k)c s} ds``,
    which is the exact image of the initial segment e^{-c(s+1)} under one
    delay of the smooth branch.
    """
    ctx = mp_ctx()
    cc = ctx.mpf(c)
    dd = ctx.mpf(d)
    kk = ctx.mpf(k)
    t = ctx.mpf(tau)
    if k == 1.0:
        integral = t
    else:
        a = (1 - kk) * cc
        integral = (ctx.exp(a * t) - 1) / a
    return float(ctx.exp(-cc * t) * (ctx.mpf(x0) + dd * integral))

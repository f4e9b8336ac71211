"""
Hurwitz zeta function by Euler–Maclaurin summation.

ζ_H(s, a) = Σ_{n<N} (n+a)^{−s} + (N+a)^{1−s}/(s−1) + (N+a)^{−s}/2
            + Σ_{k=1..M} B_{2k}/(2k)! · (s)_{2k−1} · (N+a)^{−s−2k+1}

with (s)_j the rising factorial. The head is summed in extended precision
because for Re s ≪ 0 its terms grow like (N+a)^{|Re s|} and cancel.
"""

import logging
import math
from functools import lru_cache
from typing import Optional

import mpmath as mp

from .domain import HurwitzConfig, LaurentExpansion, PoleError

logger = logging.getLogger(__name__)

POLE_TOLERANCE = 1e-14

_DEFAULT_CONFIG = HurwitzConfig()


def _working_digits(s: complex, head: int, a: float, config: HurwitzConfig) -> int:
    growth = max(0.0, -s.real) * math.log10(head + a)
    return config.guard_digits + int(math.ceil(growth))


@lru_cache(maxsize=65536)
def _hurwitz_cached(s: complex, a: float, base_head: int, bernoulli_terms: int, guard_digits: int) -> complex:
    config = HurwitzConfig(base_head=base_head, bernoulli_terms=bernoulli_terms, guard_digits=guard_digits)
    head = config.base_head + int(math.ceil(abs(s)))
    with mp.workdps(_working_digits(s, head, a, config)):
        s_mp = mp.mpc(s.real, s.imag)
        a_mp = mp.mpf(a)
        total = mp.fsum((n + a_mp) ** (-s_mp) for n in range(head))
        x = head + a_mp
        total += x ** (1 - s_mp) / (s_mp - 1) + x ** (-s_mp) / 2
        rising = s_mp                       # (s)_{2k−1}, starting at k = 1
        power = x ** (-s_mp - 1)            # x^{−s−2k+1}
        for k in range(1, config.bernoulli_terms + 1):
            total += mp.bernoulli(2 * k) / mp.factorial(2 * k) * rising * power
            rising *= (s_mp + 2 * k - 1) * (s_mp + 2 * k)
            power /= x * x
        return complex(total)


def hurwitz_zeta(s: complex, a: float, config: Optional[HurwitzConfig] = None) -> complex:
    """
    Hurwitz zeta function ζ_H(s, a) = Σ_{n≥0} (n + a)^{−s}, continued to s ≠ 1.

    Args:
        s: Complex argument
        a: Shift in (0, ∞); the models use a in (0, 1]
        config: Euler–Maclaurin parameters

    Returns:
        Complex value, absolute error below 1e−12 for |s| ≤ 20

    Raises:
        PoleError: At s = 1, carrying the expansion 1/(s−1) − ψ(a)
        ValueError: If a ≤ 0
    """
    config = config or _DEFAULT_CONFIG
    a = float(a)
    if not a > 0:
        raise ValueError(f"Hurwitz shift must be positive, got {a}")
    s = complex(s)
    if abs(s - 1) < POLE_TOLERANCE:
        laurent = LaurentExpansion(
            center=1.0 + 0.0j,
            coefficients={-2: 0.0j, -1: 1.0 + 0.0j, 0: complex(-mp.digamma(a))},
        )
        raise PoleError(f"ζ_H(s, {a}) has a simple pole at s = 1", laurent)
    return _hurwitz_cached(s, a, config.base_head, config.bernoulli_terms, config.guard_digits)


def shifted_hurwitz(z: complex, u: float, delta: float, power: float,
                    config: Optional[HurwitzConfig] = None, tolerance: float = 1e-18) -> complex:
    """
    Continuation of Σ_{n≥0} (n + u + δ)^p (n + u)^{−z}.

    A head n < K is summed directly; the tail expands (1 + δ/(n+u))^p
    binomially into Hurwitz values ζ_H(z + m − p, K + u).

    Raises:
        PoleError: When z hits a pole 1 + p − m of a tail term
        ValueError: If u ≤ 0 or u + δ ≤ 0
    """
    if not u > 0 or not u + delta > 0:
        raise ValueError(f"Shifted series needs u > 0 and u + δ > 0, got u = {u}, δ = {delta}")
    z = complex(z)
    if delta == 0:
        return hurwitz_zeta(z - power, u, config)
    cutoff = int(math.ceil(10 * abs(delta))) + 2
    head = sum((n + u + delta) ** power * (n + u) ** (-z) for n in range(cutoff))
    tail = 0.0j
    ratio = abs(delta) / (cutoff + u)
    for m in range(60):
        coefficient = float(mp.binomial(power, m)) * delta ** m
        if coefficient == 0:
            break
        tail += coefficient * hurwitz_zeta(z + m - power, cutoff + u, config)
        if m > 0 and abs(float(mp.binomial(power, m))) * ratio ** m < tolerance:
            break
    logger.debug(f"Shifted Hurwitz: head {cutoff}, δ = {delta}, p = {power}")
    return complex(head) + tail

"""Numerical primitives for the analytic engine.

Series terms of the closed forms are held as sign + log magnitude so that
factors like Gamma(a_e + m) or gamma0**b_n never overflow a double; the
signed pieces are only exponentiated inside a max-shifted, exactly
accumulated sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import special
from scipy.integrate import quad

__all__ = [
    "TermBudgetError",
    "IntegrationError",
    "SignedLogValue",
    "log_gamma",
    "log_factorial",
    "log_binomial",
    "reg_lower_incomplete_gamma",
    "weak_compositions",
    "composition_count",
    "phi_term",
    "chebyshev_nodes",
    "signed_log_sum",
    "signed_logsum_value",
    "adaptive_integrate",
    "TERM_BUDGET",
]

# Enumeration cap per closed-form expression.  The regime of interest is
# <= 4 antennas and m <= 3, far below this.
TERM_BUDGET = 1_000_000


class TermBudgetError(RuntimeError):
    """A series expansion would exceed the term budget."""


class IntegrationError(RuntimeError):
    """The adaptive integrator did not converge within its budget."""


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as sign in {-1, 0, +1} and log magnitude."""

    sign: int
    log_magnitude: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0 and self.log_magnitude != -math.inf:
            object.__setattr__(self, "log_magnitude", -math.inf)
        if self.sign != 0 and math.isnan(self.log_magnitude):
            raise ValueError("log_magnitude must not be NaN")

    @classmethod
    def zero(cls) -> "SignedLogValue":
        return cls(0, -math.inf)

    @classmethod
    def from_float(cls, value: float) -> "SignedLogValue":
        if value == 0.0:
            return cls.zero()
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    def value(self) -> float:
        return self.sign * math.exp(self.log_magnitude)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return float(special.gammaln(x))


def log_factorial(n: int) -> float:
    return log_gamma(n + 1.0)


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k), with C(n, k) = 0 mapped to -inf."""
    if k < 0 or k > n:
        return -math.inf
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k)


def reg_lower_incomplete_gamma(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) in [0, 1]."""
    if a <= 0.0:
        raise ValueError(f"shape a must be > 0, got {a}")
    if np.any(np.asarray(x) < 0.0):
        raise ValueError("x must be >= 0")
    return special.gammainc(a, x)


def composition_count(p: int, slots: int) -> int:
    """Number of weak compositions of p into `slots` parts."""
    return math.comb(p + slots - 1, slots - 1)


def weak_compositions(p: int, slots: int) -> list[tuple[int, ...]]:
    """All length-`slots` tuples of non-negative integers summing to p.

    Deterministic order: the leading slots are drained first, i.e.
    (p,0,...), ..., (...,0,p).  Iterative, no recursion.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if slots < 1:
        raise ValueError(f"slots must be >= 1, got {slots}")
    comp = [0] * slots
    comp[0] = p
    out = [tuple(comp)]
    while comp[-1] != p:
        i = slots - 2
        while comp[i] == 0:
            i -= 1
        moved = sum(comp[i + 1:]) + 1
        comp[i] -= 1
        for j in range(i + 1, slots):
            comp[j] = 0
        comp[i + 1] = moved
        out.append(tuple(comp))
    return out


def phi_term(
    delta: Sequence[int], l_s: int, p: int, m: int, lam: float
) -> tuple[SignedLogValue, int]:
    """Coefficient of one composition in the best-antenna CDF expansion.

    Returns (Phi, phi) with
      Phi = C(l_s, p) * (-1)**p * multinomial(p; delta)
            * prod_q (m**q / (q! * lam**q))**delta_q
      phi = sum_q q * delta_q.
    """
    if not (1 <= p <= l_s):
        raise ValueError(f"p must lie in 1..l_s={l_s}, got {p}")
    if sum(delta) != p or any(d < 0 for d in delta):
        raise ValueError(f"composition {delta!r} is not a weak composition of {p}")
    log_mag = log_binomial(l_s, p) + log_factorial(p)
    phi = 0
    for q, d_q in enumerate(delta):
        log_mag -= log_factorial(d_q)
        if d_q:
            log_mag += d_q * (q * math.log(m) - log_factorial(q) - q * math.log(lam))
            phi += q * d_q
    sign = -1 if p % 2 else 1
    return SignedLogValue(sign, log_mag), phi


def chebyshev_nodes(n: int) -> np.ndarray:
    """Gauss-Chebyshev nodes v_i = cos((2i - 1) pi / (2n)), i = 1..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    i = np.arange(1, n + 1, dtype=float)
    return np.cos((2.0 * i - 1.0) * math.pi / (2.0 * n))


def signed_log_sum(terms: Iterable[SignedLogValue]) -> float:
    """Sum of sign * exp(log_magnitude), max-shifted and fsum-accumulated."""
    signs = []
    mags = []
    for t in terms:
        if t.sign != 0:
            signs.append(float(t.sign))
            mags.append(t.log_magnitude)
    if not signs:
        return 0.0
    return signed_logsum_value(np.asarray(signs), np.asarray(mags))


def signed_logsum_value(signs: np.ndarray, log_mags: np.ndarray) -> float:
    """Array form of signed_log_sum; empty input sums to exactly 0."""
    if log_mags.size == 0:
        return 0.0
    shift = float(np.max(log_mags))
    if shift == -math.inf:
        return 0.0
    scaled = signs * np.exp(log_mags - shift)
    return math.exp(shift) * math.fsum(scaled.tolist())


def adaptive_integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol_abs: float = 1e-10,
    tol_rel: float = 1e-10,
    limit: int = 300,
) -> float:
    """Adaptive quadrature of f over (a, b); b may be +inf.

    An infinite upper limit is removed with the substitution t = x/(1 + x)
    before subdivision.  Raises IntegrationError when the subdivision budget
    is exhausted without convergence.
    """
    if math.isinf(b):
        if b < 0:
            raise ValueError("lower infinite limits are not supported")

        def transformed(t: float) -> float:
            one_minus = 1.0 - t
            return f(t / one_minus) / (one_minus * one_minus)

        lo, hi, g = a / (1.0 + a), 1.0, transformed
    else:
        lo, hi, g = a, b, f
    out = quad(g, lo, hi, epsabs=tol_abs, epsrel=tol_rel, limit=limit, full_output=1)
    if len(out) > 3:
        raise IntegrationError(f"integral over ({a}, {b}) did not converge: {out[3]}")
    return float(out[0])

"""Outage-event counting kernels over blocks of sampled channel gains.

The hot path is a numba-jitted loop; a pure-numpy path computes the same
events vectorized.  Both apply identical floating-point expressions, so
their counts are bit-identical.  Selection: NOMA_SECRECY_BACKEND in
{"numba", "numpy"}; default is numba when importable.
"""

from __future__ import annotations

import os

import numpy as np

ENV_VAR = "NOMA_SECRECY_BACKEND"

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


def _sinr_flags(y, x, z, afg0, ang0, afge, ange, gamma_th, t_near, t_far, worst_case):
    """Vectorized per-trial events; returns (event_index, outage_n, outage_f).

    Rate comparisons are kept multiplicative (1 + snr < 2**rate * ...) so the
    jitted loop can reproduce them operation for operation.
    """
    sinr_far = afg0 * x / (ang0 * x + 1.0)
    sinr_near_far_msg = afg0 * y / (ang0 * y + 1.0)
    snr_near_own = ang0 * y
    if worst_case:
        sinr_eve_far_msg = afge * z
    else:
        sinr_eve_far_msg = afge * z / (ange * z + 1.0)
    snr_eve_near_msg = ange * z

    theta1 = sinr_near_far_msg < gamma_th
    eve_blind = sinr_eve_far_msg < gamma_th
    theta2 = ~theta1 & eve_blind & (1.0 + snr_near_own < t_near)
    theta3 = ~theta1 & ~eve_blind & (1.0 + snr_near_own < t_near * (1.0 + snr_eve_near_msg))
    outage_n = theta1 | theta2 | theta3
    outage_f = 1.0 + sinr_far < t_far * (1.0 + sinr_eve_far_msg)
    event = np.zeros(y.shape[0], dtype=np.int8)
    event[theta1] = 1
    event[theta2] = 2
    event[theta3] = 3
    return event, outage_n, outage_f


def _numpy_counts(y, x, z, afg0, ang0, afge, ange, gamma_th, t_near, t_far, worst_case):
    event, outage_n, outage_f = _sinr_flags(
        y, x, z, afg0, ang0, afge, ange, gamma_th, t_near, t_far, worst_case
    )
    return np.array(
        [
            np.count_nonzero(event == 1),
            np.count_nonzero(event == 2),
            np.count_nonzero(event == 3),
            np.count_nonzero(outage_n),
            np.count_nonzero(outage_f),
            np.count_nonzero(outage_n | outage_f),
        ],
        dtype=np.int64,
    )


@njit(cache=True)
def _numba_counts(y, x, z, afg0, ang0, afge, ange, gamma_th, t_near, t_far, worst_case):
    n1 = n2 = n3 = nn = nf = no = 0
    for i in range(y.shape[0]):
        sinr_far = afg0 * x[i] / (ang0 * x[i] + 1.0)
        sinr_near_far_msg = afg0 * y[i] / (ang0 * y[i] + 1.0)
        snr_near_own = ang0 * y[i]
        if worst_case:
            sinr_eve_far_msg = afge * z[i]
        else:
            sinr_eve_far_msg = afge * z[i] / (ange * z[i] + 1.0)
        snr_eve_near_msg = ange * z[i]

        outage_n = False
        if sinr_near_far_msg < gamma_th:
            n1 += 1
            outage_n = True
        elif sinr_eve_far_msg < gamma_th:
            if 1.0 + snr_near_own < t_near:
                n2 += 1
                outage_n = True
        elif 1.0 + snr_near_own < t_near * (1.0 + snr_eve_near_msg):
            n3 += 1
            outage_n = True
        outage_f = 1.0 + sinr_far < t_far * (1.0 + sinr_eve_far_msg)
        if outage_n:
            nn += 1
        if outage_f:
            nf += 1
        if outage_n or outage_f:
            no += 1
    return np.array([n1, n2, n3, nn, nf, no], dtype=np.int64)


def active_backend() -> str:
    """Backend in effect: the env override, else numba when available."""
    choice = os.environ.get(ENV_VAR)
    if choice is None:
        return "numba" if HAS_NUMBA else "numpy"
    choice = choice.strip().lower()
    if choice not in ("numba", "numpy"):
        raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise ValueError(f"{ENV_VAR}=numba requested but numba is not importable")
    return choice


def outage_counts(y, x, z, params, worst_case, backend: str | None = None):
    """Count the three near-outage events and the per-user/overall outages.

    params = (afg0, ang0, afge, ange, gamma_th, t_near, t_far) with the
    products alpha*gamma prefolded.
    """
    if backend is None:
        backend = active_backend()
    fn = _numba_counts if backend == "numba" else _numpy_counts
    afg0, ang0, afge, ange, gamma_th, t_near, t_far = params
    return fn(y, x, z, afg0, ang0, afge, ange, gamma_th, t_near, t_far, worst_case)

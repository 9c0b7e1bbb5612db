"""Scalar uncertainty measures for operators and channels.

For an operator K and state rho these are the absolute variance
Tr(rho K0^dag K0) (K0 the centered operator), its symmetrized version,
and the skew-information pair built from the commutator and
anticommutator of K with sqrt(rho). A channel aggregates the
per-Kraus-operator values; the derived quantity ``u_abs`` interpolates
between total and quantum uncertainty and obeys
``u_abs^2 = i_tilde * j_tilde``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, NumericError
from .objects import DensityMatrix, KrausChannel, center_operator

# Floor below which a mathematically nonnegative result signals a bug
# rather than rounding; values in [NEGATIVITY_FLOOR, 0) clamp to 0.
NEGATIVITY_FLOOR = -1e-12
IDENTITY_RTOL = 1e-9


@dataclass(frozen=True)
class MeasureSet:
    """The five channel uncertainty quantities for one (state, channel) pair."""

    v_sym: float
    i_tilde: float
    j_tilde: float
    c_abs: float
    u_abs: float


def _nonneg(value: float, what: str) -> float:
    if value < NEGATIVITY_FLOOR:
        raise NumericError(f"{what} evaluated to {value!r}, beyond rounding tolerance")
    return max(value, 0.0)


def _check_dims(rho: DensityMatrix, k: np.ndarray) -> np.ndarray:
    k = linalg.as_matrix(k)
    if k.shape[0] != rho.dim:
        raise DimensionMismatchError(
            f"operator dimension {k.shape[0]} does not match state dimension {rho.dim}")
    return k


def abs_variance(rho: DensityMatrix, k) -> float:
    """Tr(rho K^dag K) - |Tr(rho K)|^2, via the centered operator."""
    k = _check_dims(rho, k)
    k0 = center_operator(k, rho)
    value = complex(np.trace(rho.matrix @ linalg.dagger(k0) @ k0)).real
    return _nonneg(value, "absolute variance")


def sym_abs_variance(rho: DensityMatrix, k) -> float:
    """Average of the absolute variances of K and K^dag."""
    k = _check_dims(rho, k)
    return 0.5 * (abs_variance(rho, k) + abs_variance(rho, linalg.dagger(k)))


def mwy_skew_info(rho: DensityMatrix, k) -> float:
    """Half the squared Frobenius norm of [sqrt(rho), K]."""
    k = _check_dims(rho, k)
    c = linalg.commutator(rho.sqrt_matrix, k)
    return 0.5 * linalg.frob_norm(c) ** 2


def mwy_anti_info(rho: DensityMatrix, k) -> float:
    """Half the squared Frobenius norm of {sqrt(rho), K}."""
    k = _check_dims(rho, k)
    a = linalg.anticommutator(rho.sqrt_matrix, k)
    return 0.5 * linalg.frob_norm(a) ** 2


def operator_u(rho: DensityMatrix, k) -> float:
    """The uncertainty quantity |U_rho|(K) of a single operator.

    Equals sqrt(I0 * J0) with I0, J0 the skew-information pair of the
    centered operator; computed here from the variance form
    sqrt(V_sym^2 - (V_sym - I)^2) with clamping against rounding.
    """
    k = _check_dims(rho, k)
    v = sym_abs_variance(rho, k)
    i = mwy_skew_info(rho, k)
    return float(np.sqrt(max(v * v - (v - i) ** 2, 0.0)))


def _close(a: float, b: float, rtol: float = IDENTITY_RTOL) -> bool:
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def channel_measures(rho: DensityMatrix, phi: KrausChannel) -> MeasureSet:
    """Aggregate the uncertainty quantities of a channel's Kraus operators.

    ``i_tilde`` and ``j_tilde`` sum the skew informations of the centered
    operators (centering leaves the commutator part unchanged but matters
    for the anticommutator part); ``u_abs`` is derived from ``v_sym`` and
    ``c_abs`` with clamping, and the internal identities
    ``u^2 = i_tilde * j_tilde`` and ``i_tilde + j_tilde = 2 v_sym`` are
    asserted before returning.
    """
    if phi.dim != rho.dim:
        raise DimensionMismatchError(
            f"channel dimension {phi.dim} does not match state dimension {rho.dim}")
    v_sym = 0.0
    i_tilde = 0.0
    j_tilde = 0.0
    for op in phi.kraus_ops:
        centered = center_operator(op, rho)
        v_sym += sym_abs_variance(rho, op)
        i_tilde += mwy_skew_info(rho, centered)
        j_tilde += mwy_anti_info(rho, centered)
    c_abs = v_sym - i_tilde
    u_abs = float(np.sqrt(max(v_sym * v_sym - c_abs * c_abs, 0.0)))
    if not _close(u_abs * u_abs, i_tilde * j_tilde):
        raise NumericError(
            f"u^2 = {u_abs * u_abs!r} disagrees with i_tilde*j_tilde = "
            f"{i_tilde * j_tilde!r}")
    if not _close(i_tilde + j_tilde, 2.0 * v_sym):
        raise NumericError(
            f"i_tilde + j_tilde = {i_tilde + j_tilde!r} disagrees with "
            f"2*v_sym = {2.0 * v_sym!r}")
    return MeasureSet(v_sym=float(v_sym), i_tilde=float(i_tilde),
                      j_tilde=float(j_tilde), c_abs=float(c_abs), u_abs=u_abs)

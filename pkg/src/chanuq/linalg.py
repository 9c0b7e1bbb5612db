"""Dense complex matrix arithmetic and Hermitian spectral machinery.

Everything downstream (states, channels, uncertainty measures, bounds)
works with plain square ``numpy`` arrays of ``complex128``; this module
holds the shared primitives: Frobenius inner product, (symmetrized)
commutators, the Hermitian eigendecomposition with deterministic
eigenvector phases, and the PSD matrix square root.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (DimensionMismatchError, NotHermitianError,
                     NotPositiveError, NumericError)

# Residual tolerances, relative to max(1, ||H||_F).
HERMITICITY_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-10
SQRT_TOL = 1e-9
PSD_CLAMP_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a square complex128 array and validate it.

    Raises ``DimensionMismatchError`` for non-square input and
    ``NumericError`` for non-finite entries.
    """
    a = np.ascontiguousarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise NumericError("matrix contains non-finite entries")
    return a


def require_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(
            f"incompatible operands: shapes {a.shape} and {b.shape}")


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def frob_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def frob_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Frobenius inner product Tr(a^dag b), conjugate-linear in ``a``."""
    a = as_matrix(a)
    b = as_matrix(b)
    require_same_dim(a, b)
    return complex(np.trace(dagger(a) @ b))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ab - ba."""
    a = as_matrix(a)
    b = as_matrix(b)
    require_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ab + ba."""
    a = as_matrix(a)
    b = as_matrix(b)
    require_same_dim(a, b)
    return a @ b + b @ a


def sym_commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Symmetrized commutator: average of [x, y] and [x^dag, y^dag].

    Coincides with the plain commutator when both operands are Hermitian.
    """
    x = as_matrix(x)
    y = as_matrix(y)
    require_same_dim(x, y)
    return 0.5 * (commutator(x, y) + commutator(dagger(x), dagger(y)))


def sym_anticommutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Symmetrized anticommutator: average of {x, y} and {x^dag, y^dag}."""
    x = as_matrix(x)
    y = as_matrix(y)
    require_same_dim(x, y)
    return 0.5 * (anticommutator(x, y) + anticommutator(dagger(x), dagger(y)))


class SpectralDecomposition(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` is real and ascending; the columns of ``eigenvectors``
    are orthonormal, each phase-normalized so that its first component of
    non-negligible magnitude is positive real.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _hermiticity_residual(h: np.ndarray) -> float:
    return frob_norm(h - dagger(h))


def _require_hermitian(h: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Check Hermiticity within ``tol * max(1, ||h||)`` and return the Hermitian part."""
    res = _hermiticity_residual(h)
    if res > tol * max(1.0, frob_norm(h)):
        raise NotHermitianError(res)
    return 0.5 * (h + dagger(h))


def _normalize_phases(vecs: np.ndarray) -> np.ndarray:
    """Rotate each column so its first nonzero component is positive real."""
    out = vecs.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        idx = np.flatnonzero(np.abs(col) > 1e-12)
        if idx.size == 0:
            continue
        pivot = col[idx[0]]
        out[:, j] = col * (pivot.conjugate() / abs(pivot))
    return out


def hermitian_eig(h) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix with deterministic output.

    Raises ``NotHermitianError`` if the input is not Hermitian within
    tolerance, and ``NumericError`` if the solver fails or the
    reconstruction residual exceeds its contract.
    """
    h = as_matrix(h)
    hs = _require_hermitian(h)
    try:
        w, v = np.linalg.eigh(hs)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed to converge: {exc}") from exc
    v = _normalize_phases(v)
    scale = max(1.0, frob_norm(hs))
    recon = frob_norm((v * w) @ dagger(v) - hs)
    ortho = frob_norm(dagger(v) @ v - np.eye(h.shape[0]))
    if recon > RECONSTRUCTION_TOL * scale or ortho > RECONSTRUCTION_TOL:
        raise NumericError(
            f"eigendecomposition residuals out of tolerance: "
            f"reconstruction {recon:.3e}, orthonormality {ortho:.3e}")
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def psd_sqrt(h) -> np.ndarray:
    """Principal square root of a Hermitian positive-semidefinite matrix.

    Eigenvalues within ``tol = 1e-10 * max(1, ||h||_F)`` of zero (either
    sign) are clamped to zero before rooting, so rank-deficient inputs
    such as pure states root exactly instead of picking up O(sqrt(eps))
    noise; anything below ``-tol`` raises ``NotPositiveError``. The
    clamp stays within the ``||S^2 - h||`` contract because zeroing an
    eigenvalue of magnitude <= tol perturbs the square by at most tol.
    """
    h = as_matrix(h)
    w, v = hermitian_eig(h)
    scale = max(1.0, frob_norm(h))
    tol = PSD_CLAMP_TOL * scale
    if w[0] < -tol:
        raise NotPositiveError(float(w[0]))
    w = np.where(w <= tol, 0.0, w)
    s = (v * np.sqrt(w)) @ dagger(v)
    s = 0.5 * (s + dagger(s))
    residual = frob_norm(s @ s - 0.5 * (h + dagger(h)))
    if residual > SQRT_TOL * scale:
        raise NumericError(f"square-root residual {residual:.3e} out of tolerance")
    return s


def cartesian_decompose(k) -> tuple[np.ndarray, np.ndarray]:
    """Split k into Hermitian parts (a, b) with k = a + i*b."""
    k = as_matrix(k)
    a = 0.5 * (k + dagger(k))
    b = (k - dagger(k)) / 2j
    return a, b

"""Dense Hermitian linear algebra kernel.

Eigendecomposition, matrix functions of Hermitian/positive definite
arguments, compound matrices and seeded random SPD generation.  Everything
else in the package is built on top of these routines.

All functions are pure; returned arrays are freshly allocated.  Matrix
function results are re-Hermitized as (X + X*)/2 so that downstream
invariant checks are not tripped by accumulation drift.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import (
    BadOrder,
    EigFailure,
    NonHermitianInput,
    NonPositiveSpectrum,
)

# Tolerances (absolute-plus-relative where a norm scale exists).
ETA_HERM = 1e-10     # Hermitian symmetry defect
ETA_UNIT = 1e-10     # unitarity defect
TAU_RECON = 1e-10    # eigendecomposition reconstruction residual
EPS_PD = 1e-12       # relative positivity floor: lambda_min > EPS_PD * lambda_max


def hermitize(X: np.ndarray) -> np.ndarray:
    """Return (X + X*)/2."""
    return (X + X.conj().T) / 2


def max_abs(X: np.ndarray) -> float:
    return float(np.max(np.abs(X))) if X.size else 0.0


def require_square(X, name: str = "matrix") -> np.ndarray:
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise NonHermitianInput(f"{name} must be square, got shape {X.shape}")
    return X


def is_hermitian(X: np.ndarray, tol: float = ETA_HERM) -> bool:
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        return False
    return max_abs(X - X.conj().T) <= tol * (1.0 + max_abs(X))


def require_hermitian(X, tol: float = ETA_HERM) -> np.ndarray:
    """Validate the Hermitian invariant and return X as an ndarray."""
    X = require_square(X)
    defect = max_abs(X - X.conj().T)
    if defect > tol * (1.0 + max_abs(X)):
        raise NonHermitianInput(f"symmetry defect {defect:.3e} exceeds tolerance")
    return X


def is_unitary(U: np.ndarray, tol: float = ETA_UNIT) -> bool:
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        return False
    gram = U @ U.conj().T
    return max_abs(gram - np.eye(U.shape[0])) <= tol * (1.0 + max_abs(gram))


def hermitian_eig(H) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(w, U)`` with ``w`` real and sorted descending and ``U``
    unitary such that ``H = U @ diag(w) @ U*`` within TAU_RECON.

    Raises
    ------
    NonHermitianInput
        If the symmetry defect exceeds ETA_HERM.
    EigFailure
        If the decomposition does not converge.
    """
    H = require_hermitian(H)
    try:
        w, U = np.linalg.eigh(hermitize(H))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - rare
        raise EigFailure(str(exc)) from exc
    return w[::-1].copy(), U[:, ::-1].copy()


def pd_eig(P) -> tuple[np.ndarray, np.ndarray]:
    """hermitian_eig plus the positive-definite spectrum floor."""
    w, U = hermitian_eig(P)
    if w[0] <= 0.0 or w[-1] <= EPS_PD * w[0]:
        raise NonPositiveSpectrum(
            f"eigenvalue {w[-1]:.3e} at or below relative floor "
            f"{EPS_PD:.0e} * {w[0]:.3e}"
        )
    return w, U


def require_pd(P) -> np.ndarray:
    """Validate the positive definite invariant and return P as an ndarray."""
    P = np.asarray(P)
    pd_eig(P)
    return P


def mat_power(P, r: float) -> np.ndarray:
    """Fractional power of a positive definite matrix via eigendecomposition.

    ``mat_power(P, 0)`` is the exact identity; eigenvalues at or below the
    relative floor raise NonPositiveSpectrum rather than being clamped.
    """
    P = require_square(P, "P")
    if r == 0:
        return np.eye(P.shape[0], dtype=P.dtype)
    w, U = pd_eig(P)
    return hermitize((U * w**float(r)) @ U.conj().T)


def mat_sqrt_pair(P) -> tuple[np.ndarray, np.ndarray]:
    """Return (P^{1/2}, P^{-1/2}) from a single eigendecomposition."""
    w, U = pd_eig(P)
    s = np.sqrt(w)
    root = hermitize((U * s) @ U.conj().T)
    inv_root = hermitize((U / s) @ U.conj().T)
    return root, inv_root


def mat_exp(H) -> np.ndarray:
    """Matrix exponential of a Hermitian matrix (eigendecomposition route)."""
    w, U = hermitian_eig(H)
    return hermitize((U * np.exp(w)) @ U.conj().T)


def mat_log(P) -> np.ndarray:
    """Matrix logarithm of a positive definite matrix."""
    w, U = pd_eig(P)
    return hermitize((U * np.log(w)) @ U.conj().T)


def spectrum_of_factor(F: np.ndarray) -> np.ndarray:
    """Eigenvalues (descending) of F F* computed as squared singular values.

    Keeping positive definite intermediates in factored form halves the
    effective condition number seen by the decomposition, which is what
    makes tight log-majorization margins attainable in double precision.
    """
    s = np.linalg.svd(np.asarray(F), compute_uv=False)
    return s * s


def compound(M, k: int) -> np.ndarray:
    """k-th multiplicative compound: all k-by-k minors of M.

    Rows and columns are indexed by the k-subsets of {1..n} in
    lexicographic order, so ``compound(M, 1) == M`` and
    ``compound(M, n) == [[det M]]``.
    """
    M = require_square(M, "M")
    n = M.shape[0]
    if not isinstance(k, (int, np.integer)) or k < 1 or k > n:
        raise BadOrder(f"compound order k={k} outside 1..{n}")
    subs = np.array(list(combinations(range(n), int(k))))
    blocks = M[subs[:, None, :, None], subs[None, :, None, :]]
    return np.linalg.det(blocks)


def sample_pd(n: int, seed: int, spread: float) -> np.ndarray:
    """Seeded random positive definite matrix Q diag(lam) Q*.

    Q is a Haar-like complex unitary from the seeded generator and the
    eigenvalues are log-uniform in [1/spread, spread].  Deterministic in
    (n, seed, spread); spread 1 forces a unit spectrum, i.e. the identity.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if spread < 1.0:
        raise ValueError(f"spread must be >= 1, got {spread}")
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R)
    Q = Q * (d / np.abs(d))
    lam = np.exp(rng.uniform(-np.log(spread), np.log(spread), n))
    return hermitize((Q * lam) @ Q.conj().T)


def spectral_norm(X) -> float:
    """Largest singular value."""
    return float(np.linalg.svd(np.asarray(X), compute_uv=False)[0])

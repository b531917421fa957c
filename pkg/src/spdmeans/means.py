"""Weighted metric and spectral geometric means on the SPD cone.

The two parametrized means of positive definite A, B with weight t in [0,1]:

    metric_mean(A, B, t)   = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}
    spectral_mean(A, B, t) = C^t A C^t   with   C = A^{-1} # B,

where ``#`` is the midpoint metric mean.  Both reduce to A at t=0 and B at
t=1, and for commuting arguments to A^{1-t} B^t.

All compositions are evaluated through square-root factors: every positive
definite intermediate X is carried as F with X = F F*, and powers of X come
from the singular values of F.  This is the same defining formula, but the
decompositions only ever see the square root of each condition number,
which is what keeps endpoint identities and determinant identities tight in
double precision even for badly conditioned inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NumericBreakdown
from .linalg import hermitize, mat_sqrt_pair

_SINGULAR_FLOOR = 1e4 * np.finfo(float).eps


def _check_pair(A, B) -> tuple[np.ndarray, np.ndarray]:
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"operand shapes differ: {A.shape} vs {B.shape}")
    return A, B


def _check_weight(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"weight t must lie in [0, 1], got {t}")
    return t


def metric_mean_factor(A, B, t: float) -> np.ndarray:
    """Gram factor F with metric_mean(A, B, t) = F F*."""
    A, B = _check_pair(A, B)
    t = _check_weight(t)
    Ah, Aih = mat_sqrt_pair(A)
    Bh, _ = mat_sqrt_pair(B)
    K = Aih @ Bh                       # K K* = A^{-1/2} B A^{-1/2}
    Uk, s, _ = np.linalg.svd(K)
    return (Ah @ Uk) * s**t


def metric_mean(A, B, t: float) -> np.ndarray:
    """t-weighted metric geometric mean A^{1/2}(A^{-1/2}BA^{-1/2})^t A^{1/2}."""
    F = metric_mean_factor(A, B, t)
    return hermitize(F @ F.conj().T)


def _inv_sharp_eig(A, B) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Eigensystem (w, U) of C = A^{-1} # B, plus A^{1/2}.

    C is evaluated as A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}, which is
    metric_mean(A^{-1}, B, 1/2) written directly in terms of the factors of
    A so the inverse is never formed.
    """
    A, B = _check_pair(A, B)
    Ah, Aih = mat_sqrt_pair(A)
    Bh, _ = mat_sqrt_pair(B)
    S = Ah @ Bh                        # S S* = A^{1/2} B A^{1/2}
    Us, s, _ = np.linalg.svd(S)
    G = (Aih @ Us) * np.sqrt(s)        # C = G G*
    Ug, g, _ = np.linalg.svd(G)
    return g * g, Ug, Ah


def g_factor(A, B, t: float) -> np.ndarray:
    """The conjugating factor G_t = (A^{-1} # B)^t of the spectral mean.

    Satisfies spectral_mean(A, B, t) = G_t A G_t.
    """
    t = _check_weight(t)
    w, U, _ = _inv_sharp_eig(A, B)
    return hermitize((U * w**t) @ U.conj().T)


def spectral_mean_factor(A, B, t: float) -> np.ndarray:
    """Gram factor F with spectral_mean(A, B, t) = F F*."""
    t = _check_weight(t)
    w, U, Ah = _inv_sharp_eig(A, B)
    Ct = (U * w**t) @ U.conj().T
    return Ct @ Ah


def spectral_mean(A, B, t: float) -> np.ndarray:
    """t-weighted spectral geometric mean (A^{-1}#B)^t A (A^{-1}#B)^t."""
    F = spectral_mean_factor(A, B, t)
    return hermitize(F @ F.conj().T)


@dataclass
class SimilarityWitness:
    """Constructive witness that the midpoint metric mean A # B is
    positively similar to (A nat_{1-t} B)^{1/2} U (A nat_t B)^{1/2}.

    Attributes
    ----------
    conjugator:
        Positive definite S with S^{-1} (A # B) S equal to ``target``.
        This is G_t itself; the construction identifies the two.
    rotator:
        The unitary U appearing in the middle of ``target``.
    target:
        The product (A nat_{1-t} B)^{1/2} U (A nat_t B)^{1/2}.  Not
        Hermitian in general, but similar to A # B, hence with the same
        positive spectrum.
    """

    conjugator: np.ndarray
    rotator: np.ndarray
    target: np.ndarray


def similarity_witness(A, B, t: float) -> SimilarityWitness:
    """Construct the positive-similarity witness for A # B.

    The construction goes through V = (A nat_t B)^{-1/2} G_t,
    W = G_t (B nat_t A)^{1/2}, R = V W and U = R^{-1} (R R*)^{1/2};
    U equals the adjoint of the unitary polar factor of R and is computed
    that way (via the SVD of R) for stability.
    """
    t = _check_weight(t)
    A, B = _check_pair(A, B)
    Gt = g_factor(A, B, t)
    nat_ab = spectral_mean(A, B, t)
    nat_ba = spectral_mean(B, A, t)    # equals A nat_{1-t} B by reversal
    nat_ab_h, nat_ab_ih = mat_sqrt_pair(nat_ab)
    nat_ba_h, _ = mat_sqrt_pair(nat_ba)

    V = nat_ab_ih @ Gt
    W = Gt @ nat_ba_h
    R = V @ W
    Ur, sr, Vr = np.linalg.svd(R)
    if sr[-1] <= _SINGULAR_FLOOR * sr[0]:
        raise NumericBreakdown("R R* is numerically singular")
    U = Vr.conj().T @ Ur.conj().T      # R^{-1} (R R*)^{1/2}

    target = nat_ba_h @ U @ nat_ab_h
    return SimilarityWitness(conjugator=Gt, rotator=U, target=target)

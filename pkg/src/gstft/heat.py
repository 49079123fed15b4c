"""The graph heat semigroup H_t = exp(-tL), used as the transform window.

H_t is computed through the already-available Laplacian eigendecomposition,
H_t = Phi exp(-t Lambda) Phi^T, rather than by series or scaling-and-squaring.
That makes two independent routes to the column norms available: the direct
entrywise sum over the matrix and the spectral sum

    ||H_t(., v_j)||^2 = sum_l exp(-2 lambda_l t) |phi_l(v_j)|^2,

which cross-check each other and (as shown by the frame analysis in
:mod:`gstft.gabor`) are exactly the frame-operator eigenvalues.

On a connected graph H_t is symmetric, row-stochastic, entrywise positive for
t > 0, and H_0 is the identity exactly by construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectral import SpectralDecomposition

# Entries of H_t are nonnegative in exact arithmetic; tiny negative values are
# roundoff from the eigenexpansion at small t.
ENTRY_FLOOR = -1e-12
ROW_SUM_TOL = 1e-10


@dataclass(frozen=True)
class HeatKernel:
    """Heat kernel at a fixed time: t, the dense matrix H_t, and its squared column norms.

    ``column_norms_sq[j]`` stores the direct sum over entries of column j;
    the spectral formula is available via :func:`spectral_column_norms_sq`.
    ``strictly_positive`` flags whether every entry is > 0 (true for t > 0 on
    connected graphs; false at t = 0 where off-diagonal entries vanish).
    """

    t: float
    matrix: np.ndarray
    column_norms_sq: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)
        self.column_norms_sq.setflags(write=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def strictly_positive(self) -> bool:
        return bool(self.matrix.min() > 0.0)


def _clamped_eigenvalues(dec: SpectralDecomposition) -> np.ndarray:
    """Laplacian eigenvalues with roundoff negatives clamped to zero."""
    w = dec.eigenvalues
    if not np.isfinite(w).all() or not np.isfinite(dec.eigenvectors).all():
        raise ValueError("decomposition contains NaN or infinite entries")
    if w.size and w.min() < -1e-8 * max(1.0, float(np.abs(w).max())):
        raise ValueError(
            f"spectrum has a genuinely negative eigenvalue ({w.min():.3e}); "
            "not a graph Laplacian"
        )
    return np.maximum(w, 0.0)


def heat_kernel(dec: SpectralDecomposition, t: float) -> HeatKernel:
    """Heat kernel H_t = Phi exp(-t Lambda) Phi^T for t >= 0.

    H_0 is returned as the exact identity. The matrix is symmetrized after the
    eigenexpansion and validated: entries above ``ENTRY_FLOOR`` and row sums
    within ``ROW_SUM_TOL`` of one. Rejects negative or NaN t and decompositions
    that are not Laplacian-like.
    """
    t = float(t)
    if math.isnan(t):
        raise ValueError("t must not be NaN")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")

    w = _clamped_eigenvalues(dec)
    n = dec.n
    if t == 0.0:
        matrix = np.eye(n)
    else:
        phi = dec.eigenvectors
        matrix = (phi * np.exp(-t * w)) @ phi.T
        matrix = 0.5 * (matrix + matrix.T)

    min_entry = float(matrix.min())
    if min_entry <= ENTRY_FLOOR:
        raise ValueError(f"heat kernel entry {min_entry:.3e} below {ENTRY_FLOOR:g}")
    row_sum_err = float(np.abs(matrix.sum(axis=1) - 1.0).max())
    if row_sum_err > ROW_SUM_TOL:
        raise ValueError(f"heat kernel rows deviate from stochasticity by {row_sum_err:.3e}")

    return HeatKernel(t=t, matrix=matrix, column_norms_sq=(matrix * matrix).sum(axis=0))


def column_norm_sq(hk: HeatKernel, j: int) -> float:
    """||H_t(., v_j)||^2, the directly summed squared norm of column j."""
    if not 0 <= j < hk.n:
        raise IndexError(f"column index {j} out of range for n={hk.n}")
    return float(hk.column_norms_sq[j])


def window_column(hk: HeatKernel, i: int) -> np.ndarray:
    """The window h_t(v_i) = H_t(., v_i) as a complex vertex signal."""
    if not 0 <= i < hk.n:
        raise IndexError(f"column index {i} out of range for n={hk.n}")
    return hk.matrix[:, i].astype(np.complex128)


def spectral_column_norms_sq(dec: SpectralDecomposition, t: float) -> np.ndarray:
    """Column norms of H_t from the spectral sum: sum_l exp(-2 lambda_l t) |phi_l(v_j)|^2."""
    t = float(t)
    if math.isnan(t) or t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    w = _clamped_eigenvalues(dec)
    return (dec.eigenvectors**2) @ np.exp(-2.0 * t * w)

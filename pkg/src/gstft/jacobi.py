"""Cyclic Jacobi eigendecomposition of dense real symmetric matrices.

A deliberately dependency-free eigensolver: rotations are applied in a fixed
cyclic order, the result is bit-reproducible for identical input on the same
platform, and a deterministic sign convention pins each eigenvector. That
reproducibility is what lets the command-line tools promise byte-identical
output files, and the selectable sweep order gives tests a second, independent
eigenbasis of the same matrix.

Accuracy is ample for the matrix sizes this package targets (a few thousand
vertices at most): off-diagonal mass is driven below ``rel_tol * max|A|`` and
the classical quadratic convergence of Jacobi sweeps kicks in after two or
three passes.
"""
from __future__ import annotations

import math

import numpy as np

SWEEP_ORDERS = ("row", "col")


class ConvergenceError(RuntimeError):
    """Raised when the sweep cap is exhausted before the off-diagonal threshold."""


def _sweep_pairs(n: int, sweep_order: str) -> list[tuple[int, int]]:
    if sweep_order == "row":
        return [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    if sweep_order == "col":
        return [(p, q) for q in range(1, n) for p in range(q)]
    raise ValueError(f"sweep_order must be one of {SWEEP_ORDERS}, got {sweep_order!r}")


def _max_offdiag(a: np.ndarray) -> float:
    if a.shape[0] < 2:
        return 0.0
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.abs(a[mask]).max())


def _fix_signs(vectors: np.ndarray, zero_tol: float = 1e-12) -> np.ndarray:
    """Flip each column so its first entry larger than zero_tol in magnitude is positive."""
    for j in range(vectors.shape[1]):
        column = vectors[:, j]
        nonzero = np.nonzero(np.abs(column) > zero_tol)[0]
        pivot = nonzero[0] if nonzero.size else int(np.argmax(np.abs(column)))
        if column[pivot] < 0:
            vectors[:, j] = -column
    return vectors


def jacobi_eigh(
    matrix: np.ndarray,
    sweep_order: str = "row",
    max_sweeps: int = 100,
    rel_tol: float = 1e-12,
) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition A = V diag(w) V^T of a real symmetric matrix.

    Parameters
    ----------
    matrix : np.ndarray
        Real symmetric (n, n) array. Symmetry is validated, then enforced
        exactly by averaging with the transpose.
    sweep_order : str
        "row" visits pairs (p, q) in row-major order, "col" in column-major
        order. Both converge to the same eigenvalues; the eigenvector bases
        may differ inside degenerate eigenspaces.
    max_sweeps : int
        Cap on full cyclic sweeps.
    rel_tol : float
        Convergence when max off-diagonal magnitude <= rel_tol * max|A_ij|.

    Returns
    -------
    (w, V)
        Eigenvalues ascending and the orthonormal eigenvector matrix with
        column j belonging to w[j], each column sign-fixed so that its first
        nonzero coordinate is positive.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix contains NaN or infinite entries")
    n = a.shape[0]
    scale = float(np.abs(a).max()) if n else 0.0
    if n and _max_offdiag(np.abs(a - a.T)) > 1e-12 * max(scale, 1.0):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)

    v = np.eye(n)
    tol = rel_tol * max(scale, 1e-300)
    skip_tol = 0.01 * tol
    pairs = _sweep_pairs(n, sweep_order)

    sweeps = 0
    while True:
        off = _max_offdiag(a)
        if off <= tol:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi sweeps exhausted: off-diagonal residual {off:.3e} "
                f"after {max_sweeps} sweeps (threshold {tol:.3e})"
            )
        for p, q in pairs:
            apq = a[p, q]
            if abs(apq) <= skip_tol:
                continue
            app, aqq = a[p, p], a[q, q]
            # Rotation angle from the stable half-angle formulas.
            tau = (aqq - app) / (2.0 * apq)
            t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c

            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c * row_p - s * row_q
            a[q, :] = s * row_p + c * row_q
            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            a[p, q] = 0.0
            a[q, p] = 0.0

            vec_p = v[:, p].copy()
            vec_q = v[:, q].copy()
            v[:, p] = c * vec_p - s * vec_q
            v[:, q] = s * vec_p + c * vec_q
        sweeps += 1

    order = np.argsort(np.diag(a), kind="stable")
    w = np.diag(a)[order].copy()
    v = _fix_signs(v[:, order].copy())
    return w, v

"""Graph Laplacian eigenanalysis and the graph Fourier transform.

The Laplacian L = D - A of a connected graph is symmetric positive
semidefinite with a simple zero eigenvalue whose unit eigenvector is the
constant vector 1/sqrt(N). Expanding a vertex signal in the orthonormal
eigenvector basis gives the graph Fourier transform f_hat = Phi* f; on ring
graphs this reduces to the classical DFT.

Signals are complex-valued length-n vectors; plain numpy arrays are used
throughout, with :func:`as_signal` validating shape and dtype at the API
boundary.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .jacobi import ConvergenceError, jacobi_eigh

__all__ = [
    "SpectralDecomposition",
    "ConvergenceError",
    "as_signal",
    "laplacian",
    "decompose",
    "gft",
    "igft",
    "eigenspace_projectors",
]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvector matrix of a symmetric matrix.

    ``eigenvectors[:, j]`` is the unit eigenvector for ``eigenvalues[j]``.
    For a connected-graph Laplacian the first eigenvalue is zero and
    ``fiedler_value`` (the second) is strictly positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)
        self.eigenvectors.setflags(write=False)

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def fiedler_value(self) -> float:
        if self.n < 2:
            raise ValueError("Fiedler value is undefined for a single-vertex graph")
        return float(self.eigenvalues[1])


def as_signal(values, n: int | None = None) -> np.ndarray:
    """Coerce to a 1-D complex128 vertex signal, optionally checking its length."""
    signal = np.asarray(values, dtype=np.complex128)
    if signal.ndim != 1:
        raise ValueError(f"signal must be one-dimensional, got shape {signal.shape}")
    if n is not None and signal.shape[0] != n:
        raise ValueError(f"signal length {signal.shape[0]} does not match n={n}")
    return signal


def laplacian(g: Graph) -> np.ndarray:
    """Graph Laplacian L = D - A as a dense float64 matrix (rows sum to zero)."""
    return (np.diag(g.degrees) - g.adjacency).astype(np.float64)


def decompose(
    matrix: np.ndarray, sweep_order: str = "row", max_sweeps: int = 100
) -> SpectralDecomposition:
    """Full symmetric eigendecomposition via cyclic Jacobi sweeps.

    Output is deterministic for identical input: fixed sweep order, ascending
    eigenvalues with a stable tie order, and each eigenvector sign-fixed so its
    first nonzero coordinate is positive. Raises ConvergenceError with a
    residual diagnostic if the sweep cap is reached, ValueError for
    non-symmetric input.
    """
    w, v = jacobi_eigh(matrix, sweep_order=sweep_order, max_sweeps=max_sweeps)
    return SpectralDecomposition(eigenvalues=w, eigenvectors=v)


def gft(dec: SpectralDecomposition, f) -> np.ndarray:
    """Graph Fourier transform f_hat = Phi* f (coefficients in eigenvalue order)."""
    f = as_signal(f, dec.n)
    return dec.eigenvectors.conj().T @ f


def igft(dec: SpectralDecomposition, f_hat) -> np.ndarray:
    """Inverse graph Fourier transform f = Phi f_hat."""
    f_hat = as_signal(f_hat, dec.n)
    return dec.eigenvectors.astype(np.complex128) @ f_hat


def eigenspace_projectors(
    dec: SpectralDecomposition, cluster_tol: float = 1e-8
) -> list[tuple[float, np.ndarray]]:
    """Orthogonal projectors onto eigenspaces, grouping eigenvalues within cluster_tol.

    Consecutive eigenvalues closer than ``cluster_tol`` share a cluster; each
    cluster yields ``(representative eigenvalue, P)`` with ``P`` the sum of
    outer products of its eigenvectors. The projectors are basis-independent
    under eigenvalue multiplicity and sum to the identity.
    """
    if cluster_tol <= 0:
        raise ValueError(f"cluster_tol must be positive, got {cluster_tol}")
    w = dec.eigenvalues
    v = dec.eigenvectors
    projectors = []
    start = 0
    for stop in range(1, dec.n + 1):
        if stop == dec.n or w[stop] - w[stop - 1] > cluster_tol:
            block = v[:, start:stop]
            projectors.append((float(w[start:stop].mean()), block @ block.T))
            start = stop
    return projectors

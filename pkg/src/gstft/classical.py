"""Classical finite-dimensional Fourier analysis on C^N.

Reference implementations of the DFT, cyclic translation, modulation, the
windowed (short-time) transform, and the full Gabor system of all N^2
time-frequency shifts of a window. The full system is always a tight frame
with bound N ||g||^2, which gives the exact reconstruction formula
implemented in :func:`dstft_reconstruct`.

On a ring graph the Laplacian eigenvectors are the DFT harmonics, so these
operators are the specialization of the graph transforms in
:mod:`gstft.gabor`; tests and demos use that correspondence as a cross-check.

All transforms are direct matrix products -- the sizes of interest are small
and bitwise-deterministic output matters more than FFT speed here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _as_vector(f) -> np.ndarray:
    f = np.asarray(f, dtype=np.complex128)
    if f.ndim != 1 or f.size == 0:
        raise ValueError(f"expected a nonempty one-dimensional vector, got shape {f.shape}")
    return f


def dft_matrix(n: int) -> np.ndarray:
    """Unitary Fourier matrix W_N with entries (1/sqrt(N)) omega^(-rs), omega = exp(2 pi i / N)."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    r = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(r, r) / n) / np.sqrt(n)


def dft(f) -> np.ndarray:
    """Discrete Fourier transform f_hat = W_N f."""
    f = _as_vector(f)
    return dft_matrix(f.size) @ f


def idft(f_hat) -> np.ndarray:
    """Inverse DFT f = W_N* f_hat."""
    f_hat = _as_vector(f_hat)
    return dft_matrix(f_hat.size).conj().T @ f_hat


def translate(f, k: int) -> np.ndarray:
    """Cyclic translation (T_k f)(n) = f(n - k)."""
    f = _as_vector(f)
    if not 0 <= k < f.size:
        raise ValueError(f"translation index {k} out of range for N={f.size}")
    return np.roll(f, k)


def modulate(f, l: int) -> np.ndarray:
    """Modulation (M_l f)(n) = exp(2 pi i l n / N) f(n)."""
    f = _as_vector(f)
    if not 0 <= l < f.size:
        raise ValueError(f"modulation index {l} out of range for N={f.size}")
    return f * np.exp(2j * np.pi * l * np.arange(f.size) / f.size)


def time_frequency_shift(g, k: int, l: int) -> np.ndarray:
    """The Gabor atom pi(k, l) g = M_l T_k g."""
    return modulate(translate(g, k), l)


@dataclass(frozen=True)
class ClassicalGaborSystem:
    """A window and its full Gabor system: all N^2 atoms pi(k, l) g, row-major in (k, l)."""

    window: np.ndarray
    atoms: np.ndarray

    @property
    def n(self) -> int:
        return self.window.size


def _shifted_windows(g: np.ndarray) -> np.ndarray:
    """Matrix with row k equal to T_k g."""
    n = g.size
    return np.stack([np.roll(g, k) for k in range(n)])


def _harmonics(n: int) -> np.ndarray:
    """Matrix with entry [l, m] = exp(2 pi i l m / N)."""
    r = np.arange(n)
    return np.exp(2j * np.pi * np.outer(r, r) / n)


def full_gabor_system(g) -> ClassicalGaborSystem:
    """All N^2 time-frequency shifts of a nonzero window."""
    g = _as_vector(g)
    if np.linalg.norm(g) == 0.0:
        raise ValueError("window must be nonzero")
    shifted = _shifted_windows(g)
    harmonics = _harmonics(g.size)
    atoms = np.einsum("lm,km->klm", harmonics, shifted).reshape(g.size**2, g.size)
    return ClassicalGaborSystem(window=g, atoms=atoms)


def dstft(f, g) -> np.ndarray:
    """Windowed transform V_g f(k, l) = <f, pi(k, l) g> = sum_n f(n) conj(g(n-k)) e^(-2 pi i l n / N)."""
    f = _as_vector(f)
    g = _as_vector(g)
    if f.size != g.size:
        raise ValueError(f"signal length {f.size} does not match window length {g.size}")
    if np.linalg.norm(g) == 0.0:
        raise ValueError("window must be nonzero")
    products = f[None, :] * _shifted_windows(g).conj()
    return products @ _harmonics(f.size).conj().T


def dstft_reconstruct(coefficients, g) -> np.ndarray:
    """Exact inversion f = (1 / (N ||g||^2)) sum_kl V_g f(k, l) pi(k, l) g.

    This is the adjoint-based tight-frame reconstruction; note the synthesis
    harmonics carry the positive exponent e^(+2 pi i l n / N), the conjugate
    of the analysis phase, which is what makes the round trip exact.
    """
    g = _as_vector(g)
    if np.linalg.norm(g) == 0.0:
        raise ValueError("window must be nonzero")
    v = np.asarray(coefficients, dtype=np.complex128)
    n = g.size
    if v.shape != (n, n):
        raise ValueError(f"coefficients must be shape ({n}, {n}), got {v.shape}")
    synthesis = (v @ _harmonics(n)) * _shifted_windows(g)
    return synthesis.sum(axis=0) / (n * float(np.linalg.norm(g) ** 2))


def spectrogram(f, g) -> np.ndarray:
    """Squared-magnitude windowed transform |V_g f(k, l)|^2."""
    v = dstft(f, g)
    return (v * v.conj()).real


def piecewise_cosine(n: int = 256, low_bin: int = 8, high_bin: int = 32) -> np.ndarray:
    """Test signal: cos at low_bin on the first half, cos at high_bin on the second.

    Frequencies are exact DFT bins of the full length, so the spectrum peaks
    at known indices and spectrograms show the switch at the midpoint.
    """
    if n < 2:
        raise ValueError(f"signal length must be >= 2, got {n}")
    m = np.arange(n)
    first = np.cos(2 * np.pi * low_bin * m / n)
    second = np.cos(2 * np.pi * high_bin * m / n)
    return np.where(m < n // 2, first, second).astype(np.float64)


def boxcar_window(n: int, width: int) -> np.ndarray:
    """Indicator window of the first ``width`` samples."""
    if not 1 <= width <= n:
        raise ValueError(f"window width must be in 1..{n}, got {width}")
    g = np.zeros(n)
    g[:width] = 1.0
    return g


def delta_window(n: int) -> np.ndarray:
    """The unit impulse window."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    g = np.zeros(n)
    g[0] = 1.0
    return g

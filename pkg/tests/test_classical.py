"""Classical DFT, windowed transform, and full Gabor systems on C^N."""
import numpy as np
import pytest

from gstft import classical


def random_vector(n, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


class TestDft:
    @pytest.mark.parametrize("n", [1, 4, 8, 16, 64])
    def test_unitary(self, n):
        w = classical.dft_matrix(n)
        assert np.abs(w @ w.conj().T - np.eye(n)).max() <= 1e-12

    def test_constant_signal(self):
        f_hat = classical.dft(np.full(8, 2.5))
        assert abs(f_hat[0] - 2.5 * np.sqrt(8)) <= 1e-12
        assert np.abs(f_hat[1:]).max() <= 1e-12

    def test_impulse(self):
        delta = np.zeros(8)
        delta[0] = 1.0
        assert np.abs(classical.dft(delta) - 1.0 / np.sqrt(8)).max() <= 1e-12

    @pytest.mark.parametrize("n", [4, 8, 16])
    def test_round_trip_and_parseval(self, n):
        f = random_vector(n, seed=n)
        f_hat = classical.dft(f)
        assert np.abs(classical.idft(f_hat) - f).max() <= 1e-12
        assert abs(np.linalg.norm(f_hat) - np.linalg.norm(f)) <= 1e-12

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            classical.dft(np.array([]))

    def test_piecewise_cosine_peaks(self):
        f = classical.piecewise_cosine(256, low_bin=8, high_bin=32)
        power = np.abs(classical.dft(f)) ** 2
        top_two = set(np.argsort(power[: 256 // 2 + 1])[-2:])
        assert top_two == {8, 32}


class TestShifts:
    def test_translate_impulse(self):
        delta = np.zeros(6)
        delta[0] = 1.0
        shifted = classical.translate(delta, 4)
        assert shifted[4] == 1.0 and np.abs(shifted).sum() == 1.0

    def test_modulate_constant_gives_harmonic(self):
        n = 8
        harmonic = classical.modulate(np.ones(n), 3)
        expected = np.exp(2j * np.pi * 3 * np.arange(n) / n)
        assert np.abs(harmonic - expected).max() <= 1e-12

    def test_index_validation(self):
        with pytest.raises(ValueError):
            classical.translate(np.ones(4), 4)
        with pytest.raises(ValueError):
            classical.modulate(np.ones(4), -1)

    @pytest.mark.parametrize("n", [5, 8, 16])
    def test_fourier_modulation_commutation(self, n):
        # F M_l = T_l F
        f = random_vector(n, seed=100 + n)
        for l in range(n):
            lhs = classical.dft(classical.modulate(f, l))
            rhs = classical.translate(classical.dft(f), l)
            assert np.abs(lhs - rhs).max() <= 1e-12

    def test_shift_operators_are_unitary(self):
        f = random_vector(9, seed=1)
        for k in range(9):
            assert abs(np.linalg.norm(classical.time_frequency_shift(f, k, (k * 2) % 9)) - np.linalg.norm(f)) <= 1e-12


class TestDstft:
    def test_impulse_window_formula(self):
        n = 8
        f = random_vector(n, seed=2)
        v = classical.dstft(f, classical.delta_window(n))
        grid = np.arange(n)
        expected = f[:, None] * np.exp(-2j * np.pi * np.outer(grid, grid) / n)
        assert np.abs(v - expected).max() <= 1e-12

    def test_matches_atom_inner_products(self):
        n = 8
        f = random_vector(n, seed=3)
        g = random_vector(n, seed=4)
        v = classical.dstft(f, g)
        for k in range(n):
            for l in range(n):
                atom = classical.time_frequency_shift(g, k, l)
                assert abs(v[k, l] - np.vdot(atom, f)) <= 1e-12

    def test_zero_window_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            classical.dstft(np.ones(4), np.zeros(4))

    def test_spectrogram_localizes_frequency_switch(self):
        n = 256
        f = classical.piecewise_cosine(n, low_bin=8, high_bin=32)
        width = 32
        power = classical.spectrogram(f, classical.boxcar_window(n, width))
        # dominant positive-frequency bin per translate k, away from the wrap;
        # boxcar leakage can nudge the argmax one bin off the carrier
        dominant = 1 + np.argmax(power[:, 1 : n // 2 + 1], axis=1)
        early = slice(0, n // 2 - width)
        late = slice(n // 2 + width, n - width)
        assert np.abs(dominant[early] - 8).max() <= 1
        assert np.abs(dominant[late] - 32).max() <= 1
        # the 8-vs-32 comparison flips only inside the transition region
        high_wins = power[:, 32] > power[:, 8]
        assert not high_wins[early].any()
        assert high_wins[late].all()


class TestReconstruction:
    @pytest.mark.parametrize("n", [4, 8, 16])
    def test_round_trip(self, n):
        f = random_vector(n, seed=5 * n)
        g = random_vector(n, seed=5 * n + 1)
        back = classical.dstft_reconstruct(classical.dstft(f, g), g)
        assert np.abs(back - f).max() <= 1e-9

    def test_impulse_window_round_trip(self):
        n = 8
        f = random_vector(n, seed=6)
        g = classical.delta_window(n)
        back = classical.dstft_reconstruct(classical.dstft(f, g), g)
        assert np.abs(back - f).max() <= 1e-12

    @pytest.mark.parametrize("n", [4, 8, 16])
    def test_total_energy_identity(self, n):
        # sum |V_g f|^2 = N ||g||^2 ||f||^2: the full system is a tight frame
        f = random_vector(n, seed=7 * n)
        g = random_vector(n, seed=7 * n + 1)
        v = classical.dstft(f, g)
        expected = n * np.linalg.norm(g) ** 2 * np.linalg.norm(f) ** 2
        assert abs(np.linalg.norm(v) ** 2 - expected) <= 1e-9 * expected

    def test_zero_window_rejected(self):
        with pytest.raises(ValueError):
            classical.dstft_reconstruct(np.zeros((4, 4)), np.zeros(4))

    def test_shape_validation(self):
        with pytest.raises(ValueError, match="shape"):
            classical.dstft_reconstruct(np.zeros((3, 4)), np.ones(4))


class TestFullGaborSystem:
    @pytest.mark.parametrize("n", [4, 8, 16])
    def test_frame_operator_is_tight(self, n):
        g = random_vector(n, seed=8 * n)
        g /= np.linalg.norm(g)
        system = classical.full_gabor_system(g)
        assert system.atoms.shape == (n * n, n)
        s = system.atoms.T @ system.atoms.conj()
        assert np.abs(s - n * np.eye(n)).max() <= 1e-10

    def test_atom_norms_match_window(self):
        g = random_vector(6, seed=9)
        system = classical.full_gabor_system(g)
        norms = np.linalg.norm(system.atoms, axis=1)
        assert np.abs(norms - np.linalg.norm(g)).max() <= 1e-12

    def test_atom_order_row_major(self):
        g = random_vector(4, seed=10)
        system = classical.full_gabor_system(g)
        k, l = 2, 3
        assert np.abs(system.atoms[k * 4 + l] - classical.time_frequency_shift(g, k, l)).max() <= 1e-12

    def test_zero_window_rejected(self):
        with pytest.raises(ValueError):
            classical.full_gabor_system(np.zeros(4))


class TestWindows:
    def test_boxcar_bounds(self):
        with pytest.raises(ValueError):
            classical.boxcar_window(8, 0)
        with pytest.raises(ValueError):
            classical.boxcar_window(8, 9)
        assert classical.boxcar_window(8, 3).sum() == 3.0

    def test_piecewise_cosine_halves(self):
        f = classical.piecewise_cosine(16, low_bin=1, high_bin=2)
        m = np.arange(16)
        assert np.abs(f[:8] - np.cos(2 * np.pi * m[:8] / 16)).max() <= 1e-12
        assert np.abs(f[8:] - np.cos(2 * np.pi * 2 * m[8:] / 16)).max() <= 1e-12

"""Rotating frame, transmission spectrum and peak analysis."""

import numpy as np
import pytest

import jcbath as jb
from jcbath.exceptions import ConfigurationError, NoPeakError


class TestDriveParams:
    def test_detunings(self, params):
        drive = jb.DriveParams(eta=0.005, omega_d=0.9)
        assert drive.detunings(params) == (pytest.approx(0.1),
                                           pytest.approx(0.1))

    def test_negative_amplitude_rejected(self):
        with pytest.raises(ConfigurationError):
            jb.DriveParams(eta=-0.1, omega_d=1.0)

    def test_weak_drive_advisory(self, params):
        assert jb.DriveParams(0.005, 1.0).is_weak(params)
        assert not jb.DriveParams(0.02, 1.0).is_weak(params)


class TestRotatingFrame:
    def test_hermitian(self, params, basis):
        h = jb.rotating_frame_hamiltonian(params, jb.DriveParams(0.01, 0.93),
                                          basis)
        assert np.abs(h - h.conj().T).max() < 1e-14

    def test_resonant_drive_form(self, params, basis):
        # At omega_d = omega_c = omega_0 only coupling and drive remain.
        h = jb.rotating_frame_hamiltonian(params, jb.DriveParams(0.007, 1.0),
                                          basis)
        a, sm, _ = jb.product_operators(params.n_max)
        expected_prod = (params.coupling * (a.conj().T @ sm + sm.conj().T @ a)
                         + 0.007 * (a + a.conj().T))
        v = basis.vectors
        np.testing.assert_allclose(h, v.T @ expected_prod @ v, atol=1e-14)

    def test_undriven_spectrum_is_frame_shifted(self, params, basis):
        omega_d = 1.07
        h = jb.rotating_frame_hamiltonian(params, jb.DriveParams(0.0, omega_d),
                                          basis)
        eigs = np.sort(np.linalg.eigvalsh(h))
        # Every level drops by (excitations - 1/2) * omega_d.
        manifold = np.array([0, 1, 1, 2, 2, 3, 3])
        expected = np.sort(basis.energies - (manifold - 0.5) * omega_d)
        np.testing.assert_allclose(eigs, expected, atol=1e-12)


class TestPeakMetrics:
    @staticmethod
    def lorentzian(x, x0, width):
        return 1.0 / (1.0 + ((x - x0) / width) ** 2)

    def test_symmetric_double_peak(self):
        x = np.linspace(0, 1, 501)
        y = self.lorentzian(x, 0.3, 0.02) + self.lorentzian(x, 0.7, 0.02)
        positions, heights, ratio = jb.peak_metrics(x, y)
        assert len(positions) == 2
        np.testing.assert_allclose(positions, [0.3, 0.7], atol=1e-3)
        assert ratio == pytest.approx(1.0, abs=1e-6)

    def test_single_peak_has_no_ratio(self):
        x = np.linspace(0, 1, 101)
        y = self.lorentzian(x, 0.5, 0.1)
        positions, heights, ratio = jb.peak_metrics(x, y)
        assert len(positions) == 1
        assert ratio is None

    def test_monotone_series_raises(self):
        x = np.linspace(0, 1, 50)
        with pytest.raises(NoPeakError):
            jb.peak_metrics(x, x ** 2)

    def test_subgrid_refinement(self):
        # Peak centre deliberately off the sample points.
        x = np.linspace(0, 1, 41)
        y = self.lorentzian(x, 0.512, 0.15)
        positions, heights, _ = jb.peak_metrics(x, y)
        assert positions[0] == pytest.approx(0.512, abs=0.002)
        assert heights[0] == pytest.approx(1.0, abs=1e-3)

    def test_asymmetric_ordering(self):
        x = np.linspace(0, 1, 501)
        y = 3.0 * self.lorentzian(x, 0.3, 0.02) + self.lorentzian(x, 0.7, 0.02)
        _, _, ratio = jb.peak_metrics(x, y)
        # Overlapping tails perturb the heights at the percent level.
        assert ratio == pytest.approx(3.0, rel=0.01)


class TestTransmissionSpectrum:
    def test_grid_validation(self, params, baths):
        with pytest.raises(ConfigurationError):
            jb.transmission_spectrum(params, *baths, 0.005,
                                     np.linspace(-0.1, 1.0, 12))
        with pytest.raises(ValueError):
            jb.transmission_spectrum(params, *baths, 0.005,
                                     np.array([1.0, 0.9, 1.1]))

    def test_strong_drive_warns(self, params, baths):
        with pytest.warns(UserWarning, match="weak-drive"):
            jb.transmission_spectrum(params, *baths, 0.05,
                                     np.linspace(0.99, 1.01, 3))

    @pytest.mark.parametrize("coupling,lo,hi,points", [
        (0.05, 0.875, 1.125, 101), (0.1, 0.75, 1.25, 201), (0.2, 0.5, 1.5, 201)])
    def test_peak_positions_at_doublet_energies(self, baths, coupling, lo, hi,
                                                points):
        # Resonances coincide with the doublet transition energies at the
        # linewidth scale, so the sweep resolves at that scale and the
        # drive is weak enough not to saturate the narrow line.
        params = jb.SystemParams(1.0, 1.0, coupling, n_max=3)
        grid = np.linspace(lo, hi, points)
        step = grid[1] - grid[0]
        result = jb.transmission_spectrum(params, *baths, 0.001, grid)
        positions = np.array([p for p, _ in result.peaks])
        for target in (1.0 - coupling, 1.0 + coupling):
            assert np.abs(positions - target).min() <= step

    def test_asymmetry_from_interference(self, params, baths):
        grid = np.linspace(0.85, 1.15, 151)
        on = jb.transmission_spectrum(params, *baths, 0.005, grid,
                                      interference=True)
        off = jb.transmission_spectrum(params, *baths, 0.005, grid,
                                       interference=False)
        assert on.asymmetry_ratio > off.asymmetry_ratio
        assert on.asymmetry_ratio > 1.0

    def test_quadratic_drive_scaling_off_peak(self, params, baths):
        point = np.array([0.85])

        def photon(eta):
            # Restore interior-grid precondition with padding points.
            grid = np.array([0.84, 0.85, 0.86])
            res = jb.transmission_spectrum(params, *baths, eta, grid)
            return res.photon[1]

        exponent = np.log(photon(0.004) / photon(0.002)) / np.log(2.0)
        assert exponent == pytest.approx(2.0, abs=0.1)

    def test_workers_reproduce_serial_sweep(self, params, baths):
        grid = np.linspace(0.88, 0.92, 21)
        serial = jb.transmission_spectrum(params, *baths, 0.005, grid)
        threaded = jb.transmission_spectrum(params, *baths, 0.005, grid,
                                            workers=4)
        np.testing.assert_array_equal(serial.photon, threaded.photon)

    def test_vanishing_drive_vanishing_signal(self, params, baths):
        grid = np.linspace(0.95, 1.05, 5)
        res = jb.transmission_spectrum(params, *baths, 1e-6, grid)
        assert np.nanmax(res.photon) < 1e-6

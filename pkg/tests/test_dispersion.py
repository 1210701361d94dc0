"""Permittivity models, relaxation frequency, and zero-mode diagnostics."""

import numpy as np
import pytest
from scipy.integrate import quad as scipy_quad

import casimir as cs
from casimir.constants import EV_TO_RAD_S
from casimir.dispersion import drude_spectral_function
from casimir.errors import (
    ConvergenceError,
    DomainError,
    TableFormatError,
    TableRangeError,
    UnsupportedModelError,
)

ZETA_1_300K = 2.468e14  # rad/s, first Matsubara frequency at 300 K


class TestDrude:
    def test_room_temperature_value(self, gold):
        # 1 + omega_p^2/(zeta(zeta+nu)), high-precision reference
        assert cs.eps_drude(ZETA_1_300K, gold) == pytest.approx(
            2526.3652081351805, rel=1e-12)

    def test_high_frequency_limit(self, gold):
        eps = cs.eps_drude(1e20, gold)
        assert 0.0 < eps - 1.0 < 5e-8

    def test_decay_rate_between_linear_and_quadratic(self, gold):
        # eps - 1 goes like 1/(zeta(zeta+nu)): strictly faster than 1/zeta,
        # strictly slower than 1/zeta^2
        for z in np.geomspace(1e10, 1e18, 17):
            em1_2z = cs.eps_drude(2.0 * z, gold) - 1.0
            em1_z = cs.eps_drude(z, gold) - 1.0
            assert em1_2z < em1_z / 2.0
            assert em1_2z > em1_z / 4.0

    def test_monotone_decreasing(self, gold):
        zs = np.geomspace(1e9, 1e19, 200)
        eps = cs.eps_drude(zs, gold)
        assert np.all(np.diff(eps) < 0)
        assert np.all(eps > 1.0)

    def test_domain_errors(self, gold):
        with pytest.raises(DomainError):
            cs.eps_drude(0.0, gold)
        with pytest.raises(DomainError):
            cs.eps_drude(-1e14, gold)
        with pytest.raises(DomainError):
            cs.eps_drude(1e14, gold, T=-3.0)

    def test_unit_conversion_roundtrip(self):
        # eV -> rad/s -> eV to 1 part in 1e12
        from casimir.constants import ev_to_rad_s, rad_s_to_ev
        assert EV_TO_RAD_S == pytest.approx(1.519267e15, rel=1e-6)
        for x in (0.035, 9.0, 123.456):
            assert rad_s_to_ev(ev_to_rad_s(x)) == pytest.approx(x, rel=1e-12)

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            cs.Drude(omega_p_ev=-9.0)
        with pytest.raises(DomainError):
            cs.Drude(nu_ref_ev=0.0)


class TestPlasma:
    def test_eps_two_at_plasma_frequency(self):
        model = cs.Plasma(omega_p_ev=9.0)
        assert cs.eps_plasma(model.omega_p_rad_s, 9.0) == pytest.approx(2.0, rel=1e-14)

    def test_room_temperature_value(self):
        assert cs.eps_plasma(ZETA_1_300K, 9.0) == pytest.approx(
            3070.4684516426935, rel=1e-12)

    def test_exceeds_drude_everywhere(self, gold):
        zs = np.geomspace(1e10, 1e18, 50)
        assert np.all(cs.eps_plasma(zs, 9.0) > cs.eps_drude(zs, gold))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cs.eps_plasma(0.0, 9.0)


class TestTabulated:
    def _drude_table(self, gold, n=240):
        zs = np.geomspace(1e12, 1e18, n)
        return cs.PermittivityTable(zs, cs.eps_drude(zs, gold))

    def test_exact_at_nodes(self, gold):
        table = self._drude_table(gold)
        for i in (0, 57, 120, 239):
            assert cs.eps_tabulated(table.zeta[i], table) == table.eps_values[i]

    def test_loglog_midpoint(self):
        # log-log midpoint of (1e14, 101) and (1e16, 2): eps - 1 = 10
        table = cs.PermittivityTable(np.array([1e14, 1e16]), np.array([101.0, 2.0]))
        assert cs.eps_tabulated(1e15, table) == pytest.approx(11.0, rel=1e-12)

    def test_no_extrapolation(self):
        table = cs.PermittivityTable(np.array([1e14, 1e16]), np.array([101.0, 2.0]))
        with pytest.raises(TableRangeError):
            cs.eps_tabulated(0.5e14, table)
        with pytest.raises(TableRangeError):
            cs.eps_tabulated(2e16, table)

    def test_monotone_between_monotone_nodes(self, gold):
        table = self._drude_table(gold, n=60)
        zs = np.geomspace(table.zeta_min, table.zeta_max, 997)
        eps = cs.eps_tabulated(zs, table)
        assert np.all(np.diff(eps) <= 0)

    def test_tracks_generating_model(self, gold):
        table = self._drude_table(gold)
        zs = np.geomspace(2e12, 5e17, 300)
        rel = np.abs(cs.eps_tabulated(zs, table) / cs.eps_drude(zs, gold) - 1.0)
        assert rel.max() < 1e-3

    def test_validation(self):
        with pytest.raises(DomainError):
            cs.PermittivityTable(np.array([1e14]), np.array([5.0]))
        with pytest.raises(DomainError):
            cs.PermittivityTable(np.array([1e14, 1e13]), np.array([5.0, 4.0]))
        with pytest.raises(DomainError):
            cs.PermittivityTable(np.array([1e13, 1e14]), np.array([5.0, 0.9]))
        with pytest.raises(DomainError):
            cs.Tabulated(cs.PermittivityTable(np.array([1e13, 1e14]),
                                              np.array([5.0, 4.0])),
                         zero_mode_class="metallic")


class TestTableFile:
    def _write(self, tmp_path, text):
        path = tmp_path / "eps.csv"
        path.write_text(text, encoding="utf-8")
        return path

    def test_good_file(self, tmp_path):
        path = self._write(tmp_path,
                           "zeta_rad_per_s,epsilon\n1e13,900.0\n1e14,101.0\n1e15,3.5\n")
        table = cs.load_permittivity_table(path)
        assert len(table.zeta) == 3
        assert cs.eps_tabulated(1e14, table) == 101.0

    def test_bad_header(self, tmp_path):
        path = self._write(tmp_path, "zeta,eps\n1e13,900\n1e14,101\n")
        with pytest.raises(TableFormatError, match="line 1"):
            cs.load_permittivity_table(path)

    def test_non_monotone_reports_line(self, tmp_path):
        path = self._write(tmp_path,
                           "zeta_rad_per_s,epsilon\n1e13,900\n1e15,101\n1e14,50\n")
        with pytest.raises(TableFormatError, match="line 4"):
            cs.load_permittivity_table(path)

    def test_eps_below_one_reports_line(self, tmp_path):
        path = self._write(tmp_path,
                           "zeta_rad_per_s,epsilon\n1e13,900\n1e14,0.5\n")
        with pytest.raises(TableFormatError, match="line 3"):
            cs.load_permittivity_table(path)

    def test_non_numeric_reports_line(self, tmp_path):
        path = self._write(tmp_path,
                           "zeta_rad_per_s,epsilon\n1e13,900\nhuge,101\n")
        with pytest.raises(TableFormatError, match="line 3"):
            cs.load_permittivity_table(path)


class TestBlochGruneisen:
    def test_reference_point_exact(self):
        bg = cs.BlochGruneisen()  # theta_D = 170 K, 35.6 meV at 300 K
        assert cs.nu_bloch_gruneisen(300.0, bg) == 0.0356

    def test_350K_matches_published_value(self):
        bg = cs.BlochGruneisen()
        assert cs.nu_bloch_gruneisen(350.0, bg) == pytest.approx(0.0418, abs=5e-4)

    def test_deep_freeze_suppression(self):
        bg = cs.BlochGruneisen()
        assert cs.nu_bloch_gruneisen(1.0, bg) < 1e-6 * bg.nu_ref_ev

    def test_monotone_increasing(self):
        bg = cs.BlochGruneisen()
        nus = [cs.nu_bloch_gruneisen(t, bg) for t in np.linspace(5.0, 600.0, 40)]
        assert all(b > a for a, b in zip(nus, nus[1:]))

    def test_linear_asymptote(self):
        bg = cs.BlochGruneisen()
        for T in (3 * 170.0, 5 * 170.0):
            ratio = cs.nu_bloch_gruneisen(2 * T, bg) / cs.nu_bloch_gruneisen(T, bg)
            assert ratio == pytest.approx(2.0, rel=0.05)

    def test_constant_model(self):
        const = cs.ConstantRelaxation(0.035)
        assert cs.nu_bloch_gruneisen(77.0, const) == 0.035
        with pytest.raises(DomainError):
            cs.nu_bloch_gruneisen(-1.0, const)

    def test_validation(self):
        with pytest.raises(DomainError):
            cs.BlochGruneisen(theta_d=-170.0)
        with pytest.raises(DomainError):
            cs.BlochGruneisen(t_ref=0.0)
        bg = cs.BlochGruneisen()
        with pytest.raises(DomainError):
            cs.nu_bloch_gruneisen(0.0, bg)


class TestSumRule:
    @pytest.mark.parametrize("gamma", [1.0, 5.317e13, 1e16])
    def test_normalized_to_one(self, gamma):
        assert abs(cs.sum_rule_check(gamma) - 1.0) < 1e-6

    def test_half_weight_below_gamma(self):
        # arctan antiderivative: int_0^gamma p = 1/2
        gamma = 5.317e13
        val, _ = scipy_quad(drude_spectral_function, 0.0, gamma, args=(gamma,))
        assert val == pytest.approx(0.5, abs=1e-6)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cs.sum_rule_check(0.0)


class TestZeroModeProduct:
    def test_drude_limit_vanishes(self, gold):
        assert cs.zero_mode_product(gold) == 0.0

    def test_plasma_limit_is_omega_p_squared(self):
        model = cs.Plasma(omega_p_ev=9.0)
        assert cs.zero_mode_product(model) == pytest.approx(
            model.omega_p_rad_s**2, rel=1e-9)

    def test_tiny_relaxation_still_vanishes(self):
        model = cs.Drude(nu_ref_ev=1e-10)
        assert cs.zero_mode_product(model) == 0.0

    def test_unsupported_models(self):
        with pytest.raises(UnsupportedModelError):
            cs.zero_mode_product(cs.Ideal())
        table = cs.PermittivityTable(np.array([1e13, 1e14]), np.array([5.0, 4.0]))
        with pytest.raises(UnsupportedModelError):
            cs.zero_mode_product(cs.Tabulated(table))

    def test_pathological_relaxation_raises(self):
        # nu so small that the decision floor at 1e-8 rad/s is reached first
        model = cs.Drude(nu_ref_ev=1e-16)
        with pytest.raises(ConvergenceError):
            cs.zero_mode_product(model)


def test_ideal_has_no_permittivity():
    with pytest.raises(UnsupportedModelError):
        cs.Ideal().eps(1e14)

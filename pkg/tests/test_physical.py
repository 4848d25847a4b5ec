import math

import pytest

import jjarray as jj
from jjarray.errors import ParameterError


DEFAULTS = jj.PhysicalParams()


def test_default_inductance_matches_quoted_value():
    # Hand-evaluated bracket for D=45um, a=7.5um: the four terms are
    # 86.716e-6 - 6.610e-6 + 10.607e-6 - 38.243e-6 ~= 52.470e-6 m,
    # giving L = 3 * 1e-7 * bracket ~= 15.74 pH.
    value = jj.leg_self_inductance(DEFAULTS)
    assert 15.4e-12 <= value <= 16.4e-12
    assert value == pytest.approx(1.5741e-11, rel=1e-4)


def test_inductance_is_zero_in_degenerate_limit():
    assert jj.polygon_self_inductance(15e-6, 7.5e-6, 3) == pytest.approx(0.0, abs=1e-25)


def test_inductance_domain_error():
    with pytest.raises(ParameterError):
        jj.polygon_self_inductance(14e-6, 7.5e-6, 3)
    with pytest.raises(ParameterError):
        jj.polygon_self_inductance(45e-6, -1e-6, 3)
    with pytest.raises(ParameterError):
        jj.polygon_self_inductance(45e-6, 7.5e-6, 2)


def test_inductance_linear_in_leg_count():
    base = jj.polygon_self_inductance(45e-6, 7.5e-6, 3)
    assert jj.polygon_self_inductance(45e-6, 7.5e-6, 4) == pytest.approx(
        4 * base / 3, rel=1e-12
    )
    assert jj.polygon_self_inductance(45e-6, 7.5e-6, 6) == pytest.approx(
        2 * base, rel=1e-12
    )


def test_inductance_monotonic_in_length():
    a = 7.5e-6
    lengths = [2 * a * (1 + 0.05 * k) for k in range(1, 40)]
    values = [jj.polygon_self_inductance(d, a, 3) for d in lengths]
    assert all(v2 > v1 for v1, v2 in zip(values, values[1:]))


def test_critical_current():
    assert jj.critical_current(DEFAULTS) == pytest.approx(5.0625e-7, rel=1e-12)
    doubled = jj.PhysicalParams(jc_scale=3000.0)
    assert jj.critical_current(doubled) == pytest.approx(2 * 5.0625e-7, rel=1e-12)


def test_josephson_energy_values():
    assert jj.josephson_energy(0.5e-6) == pytest.approx(1.6455298920096748e-22, rel=1e-12)
    assert jj.josephson_energy(1.0) == pytest.approx(3.2910597840193497e-16, rel=1e-12)
    assert jj.josephson_energy(5.0625e-7) == pytest.approx(1.666099015659796e-22, rel=1e-12)
    with pytest.raises(ParameterError):
        jj.josephson_energy(0.0)


def test_energy_prefactor_quoted_parameters():
    kappa = jj.energy_prefactor(16e-12, 0.5e-6)
    assert kappa == pytest.approx(0.9513834416570236, rel=1e-12)
    assert 0.045 <= 1 - kappa <= 0.055


def test_energy_prefactor_from_derived_geometry():
    quantities = jj.derived_quantities(DEFAULTS)
    assert quantities["kappa"] == pytest.approx(0.9515724682429075, rel=1e-10)


def test_energy_prefactor_limits():
    assert jj.energy_prefactor(0.0, 1e-6) == 1.0
    with pytest.raises(ParameterError):
        jj.energy_prefactor(1e-3, 1.0)  # magnetic term overwhelms E_J
    with pytest.raises(ParameterError):
        jj.energy_prefactor(-1e-12, 1e-6)
    with pytest.raises(ParameterError):
        jj.energy_prefactor(1e-12, 0.0)


def test_energy_prefactor_consistent_with_definition():
    # kappa = 1 - 2 L Ic^2 / E_J written out with E_J = Phi0 Ic / (2 pi)
    inductance, current = 12e-12, 0.4e-6
    explicit = 1 - 2 * inductance * current**2 / jj.josephson_energy(current)
    assert jj.energy_prefactor(inductance, current) == pytest.approx(explicit, rel=1e-12)


def test_params_validation():
    with pytest.raises(ParameterError):
        jj.PhysicalParams(leg_length=15e-6)  # equals 2a: degenerate geometry
    with pytest.raises(ParameterError):
        jj.PhysicalParams(half_width=0.0)
    with pytest.raises(ParameterError):
        jj.PhysicalParams(legs=2)
    with pytest.raises(ParameterError):
        jj.PhysicalParams(jc_scale=0.0)


def test_constants():
    assert jj.MU0 == pytest.approx(4e-7 * math.pi, rel=0, abs=0)
    assert jj.PHI0 == 2.067833848e-15

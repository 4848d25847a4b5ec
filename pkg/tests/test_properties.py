"""Property-based checks of the model's algebraic invariants."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import jjarray as jj
from tests.oracles import all_automorphisms, lu_pointwise_energies


@st.composite
def topologies(draw, with_pi: bool = True, max_plaquettes: int = 4):
    """Random valid arrays; every plaquette keeps a boundary junction, so the
    coupling matrix is always positive definite."""
    count = draw(st.integers(1, max_plaquettes))
    junctions = [draw(st.integers(3, 6)) for _ in range(count)]
    capacity = [j - 1 for j in junctions]
    links = []
    for i, j in itertools.combinations(range(count), 2):
        if not draw(st.booleans()):
            continue
        shared = draw(st.integers(1, 2))
        if capacity[i] >= shared and capacity[j] >= shared:
            capacity[i] -= shared
            capacity[j] -= shared
            links.append(jj.SharedJunctionLink(i + 1, j + 1, shared))
    plaquettes = tuple(
        jj.Plaquette(i + 1, junctions[i], draw(st.integers(0, 2)) if with_pi else 0)
        for i in range(count)
    )
    return jj.ArrayTopology("random", plaquettes, tuple(links))


configs_for = lambda n: st.lists(st.integers(-2, 2), min_size=n, max_size=n)
flux_values = st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(topology=topologies(), data=st.data())
def test_document_round_trip(topology, data):
    assert jj.parse_topology(jj.serialize_topology(topology)) == topology


@settings(max_examples=50, deadline=None)
@given(topology=topologies(), data=st.data())
def test_two_path_energy_equality(topology, data):
    system = jj.assemble(topology)
    n = data.draw(configs_for(system.n_plaquettes))
    f = data.draw(flux_values)
    currents = jj.solve_currents(system, n, f)
    quad_form = jj.energy(system, n, f)
    junction_sum = jj.junction_sum_energy(topology, currents)
    assert abs(quad_form - junction_sum) <= 1e-12 * max(abs(quad_form), abs(junction_sum), 1.0)


@settings(max_examples=50, deadline=None)
@given(topology=topologies(), data=st.data(), k=st.integers(-3, 3))
def test_integer_shift_covariance(topology, data, k):
    system = jj.assemble(topology)
    n = np.array(data.draw(configs_for(system.n_plaquettes)))
    f = data.draw(flux_values)
    base = jj.energy(system, n, f)
    shifted = jj.energy(system, n + k, f + k)
    assert shifted == pytest.approx(base, rel=1e-12, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(topology=topologies(with_pi=False), data=st.data())
def test_mirror_symmetry_without_pi_junctions(topology, data):
    system = jj.assemble(topology)
    n = np.array(data.draw(configs_for(system.n_plaquettes)))
    f = data.draw(flux_values)
    assert jj.energy(system, -n, -f) == pytest.approx(
        jj.energy(system, n, f), rel=1e-12, abs=1e-12
    )


@settings(max_examples=40, deadline=None)
@given(topology=topologies(), data=st.data())
def test_energy_nonnegative_and_zero_only_at_zero_frustration(topology, data):
    system = jj.assemble(topology)
    n = data.draw(configs_for(system.n_plaquettes))
    f = data.draw(flux_values)
    value = jj.energy(system, n, f)
    assert value >= -1e-12
    g = jj.reduced_frustration(system, n, f)
    if np.max(np.abs(g)) > 1e-6:
        assert value > 0.0


@settings(max_examples=30, deadline=None)
@given(topology=topologies(), data=st.data())
def test_parabola_agrees_with_pointwise_energy(topology, data):
    system = jj.assemble(topology)
    n = data.draw(configs_for(system.n_plaquettes))
    f = data.draw(flux_values)
    branch = jj.parabola(system, n)
    assert branch.quad[0] > 0
    assert branch.energy_at(f) == pytest.approx(
        jj.energy(system, n, f), rel=1e-12, abs=1e-12
    )


@pytest.mark.parametrize("name", jj.BUILTIN_NAMES)
def test_automorphisms_leave_energy_invariant(name):
    topology = jj.builtin_topology(name)
    system = jj.assemble(topology)
    perms = all_automorphisms(topology)
    rng = np.random.default_rng(17)
    for perm in perms:
        n = rng.integers(-2, 3, size=topology.n_plaquettes)
        f = rng.uniform(-1.5, 1.5)
        permuted = n[list(perm)]
        assert jj.energy(system, permuted, f) == pytest.approx(
            jj.energy(system, n, f), rel=1e-12
        )


@pytest.mark.parametrize("name", jj.BUILTIN_NAMES)
def test_orbit_members_share_degeneracy_class(name):
    topology = jj.builtin_topology(name)
    system = jj.assemble(topology)
    orbits = jj.automorphism_orbits(topology)
    window = jj.EnumerationWindow(0, 1)
    for f in (0.17, 0.5, 0.83):
        classes = jj.degeneracy_classes(system, window, f)
        membership = {}
        for class_index, (_e, members) in enumerate(classes):
            for config in members:
                membership[config] = class_index
        # single-vortex configurations of one orbit must sit in one class
        for orbit in orbits:
            single_vortex = []
            for pid in orbit:
                config = [0] * topology.n_plaquettes
                config[topology.index_of(pid)] = 1
                single_vortex.append(tuple(config))
            assert len({membership[c] for c in single_vortex}) == 1


@pytest.mark.parametrize("name", jj.BUILTIN_NAMES)
def test_ground_energy_is_periodic_in_flux(name):
    # With a window wide enough to absorb the shift, the ground-state energy
    # envelope has period one in the applied flux.  Pi-rings move the coupled
    # minima by half a quantum, so the shifted ground configurations reach
    # n = 3 at the upper flux edge; the window must contain them.
    system = jj.assemble(jj.builtin_topology(name))
    window = jj.EnumerationWindow(-3, 3)
    flux = np.linspace(-1.0, 1.0, 41)
    configs = jj.enumerate_configs(system.n_plaquettes, window)
    ground_lo = lu_pointwise_energies(system, configs, flux).min(axis=0)
    ground_hi = lu_pointwise_energies(system, configs, flux + 1.0).min(axis=0)
    assert np.allclose(ground_lo, ground_hi, rtol=1e-12, atol=1e-12)


def test_pi_shift_equals_ordinary_shifted(triangle_system, triangle_pi_system):
    rng = np.random.default_rng(23)
    for _ in range(50):
        n = rng.integers(-2, 3, size=4)
        f = rng.uniform(-1.5, 1.5)
        assert jj.energy(triangle_pi_system, n, f) == pytest.approx(
            jj.energy(triangle_system, n, f + 0.5), rel=1e-12, abs=1e-12
        )

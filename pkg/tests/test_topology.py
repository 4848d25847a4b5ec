import json

import pytest

import jjarray as jj
from jjarray.errors import LimitError, ParseError, SingularityError, ValidationError


def test_builtin_names():
    assert jj.BUILTIN_NAMES == (
        "triangle-stack-4",
        "triangle-stack-4-pi",
        "square-2x2",
        "square-2x2-checkerboard-pi",
        "spin-star-5",
        "spin-star-5-pi",
    )


@pytest.mark.parametrize("name", jj.BUILTIN_NAMES)
def test_builtins_validate_and_assemble(name):
    topology = jj.builtin_topology(name)
    system = jj.assemble(topology)
    assert system.n_plaquettes == topology.n_plaquettes


def test_unknown_builtin():
    with pytest.raises(ValidationError):
        jj.builtin_topology("pentagon-ring")


def test_triangle_stack_structure(triangle):
    assert triangle.ids == (1, 2, 3, 4)
    assert triangle.junction_counts == (3, 3, 3, 3)
    assert triangle.boundary_counts == (2, 2, 2, 0)
    assert triangle.shared_counts == {(0, 3): 1, (1, 3): 1, (2, 3): 1}
    assert triangle.pi_parity == (0, 0, 0, 0)


def test_triangle_stack_pi_parity():
    topology = jj.builtin_topology("triangle-stack-4-pi")
    assert topology.pi_parity == (1, 1, 1, 1)


def test_square_structure():
    topology = jj.builtin_topology("square-2x2")
    assert topology.junction_counts == (4, 4, 4, 4)
    assert topology.boundary_counts == (2, 2, 2, 2)
    assert topology.shared_counts == {(0, 1): 1, (0, 2): 1, (1, 3): 1, (2, 3): 1}


def test_checkerboard_parity():
    topology = jj.builtin_topology("square-2x2-checkerboard-pi")
    assert topology.pi_parity == (1, 0, 0, 1)


def test_spin_star_is_uncoupled():
    topology = jj.builtin_topology("spin-star-5")
    assert topology.n_plaquettes == 5
    assert topology.links == ()
    assert topology.boundary_counts == (4, 4, 4, 4, 4)


# -- documents ---------------------------------------------------------------


def test_parse_minimal_loop():
    topology = jj.parse_topology(
        '{"name": "loop", "plaquettes": [{"id": 1, "junctions": 3}]}'
    )
    assert topology.n_plaquettes == 1
    assert topology.boundary_counts == (3,)
    assert topology.pi_parity == (0,)


def test_parse_matches_builtin_triangle_stack(triangle):
    text = """
    {"name": "stack",
     "plaquettes": [{"id": 1, "junctions": 3}, {"id": 2, "junctions": 3},
                    {"id": 3, "junctions": 3}, {"id": 4, "junctions": 3}],
     "shared": [{"a": 1, "b": 4, "count": 1}, {"a": 2, "b": 4, "count": 1},
                {"a": 3, "b": 4, "count": 1}]}
    """
    topology = jj.parse_topology(text)
    assert topology.plaquettes == triangle.plaquettes
    assert topology.links == triangle.links


@pytest.mark.parametrize("name", jj.BUILTIN_NAMES)
def test_round_trip_builtins(name):
    topology = jj.builtin_topology(name)
    assert jj.parse_topology(jj.serialize_topology(topology)) == topology


def test_round_trip_preserves_arbitrary_ids():
    topology = jj.ArrayTopology(
        "sparse-ids",
        (jj.Plaquette(9, 4), jj.Plaquette(2, 3), jj.Plaquette(7, 5, 1)),
        (jj.SharedJunctionLink(9, 2, 1),),
    )
    assert topology.ids == (2, 7, 9)  # canonical order by id
    again = jj.parse_topology(jj.serialize_topology(topology))
    assert again == topology
    assert again.index_of(7) == 1


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError):
        jj.parse_topology("{not json")


def test_parse_rejects_unknown_keys():
    with pytest.raises(ValidationError):
        jj.parse_topology('{"name": "x", "plaquettes": [], "extra": 1}')
    with pytest.raises(ValidationError):
        jj.parse_topology(
            '{"name": "x", "plaquettes": [{"id": 1, "junctions": 3, "color": "red"}]}'
        )


def test_parse_rejects_duplicate_ids():
    with pytest.raises(ValidationError):
        jj.parse_topology(
            '{"name": "x", "plaquettes": [{"id": 1, "junctions": 3}, {"id": 1, "junctions": 3}]}'
        )


def test_parse_rejects_duplicate_links():
    text = json.dumps(
        {
            "name": "x",
            "plaquettes": [{"id": 1, "junctions": 3}, {"id": 2, "junctions": 3}],
            "shared": [{"a": 1, "b": 2}, {"a": 2, "b": 1}],
        }
    )
    with pytest.raises(ValidationError):
        jj.parse_topology(text)


def test_parse_rejects_oversubscribed_plaquette():
    text = json.dumps(
        {
            "name": "x",
            "plaquettes": [{"id": 1, "junctions": 3}, {"id": 2, "junctions": 6}],
            "shared": [{"a": 1, "b": 2, "count": 4}],
        }
    )
    with pytest.raises(ValidationError):
        jj.parse_topology(text)


def test_parse_rejects_self_link_and_bad_counts():
    with pytest.raises(ValidationError):
        jj.SharedJunctionLink(1, 1, 1)
    with pytest.raises(ValidationError):
        jj.SharedJunctionLink(1, 2, 0)
    with pytest.raises(ValidationError):
        jj.Plaquette(1, 0)
    with pytest.raises(ValidationError):
        jj.Plaquette(1, 3, 4)  # more pi-junctions than junctions
    with pytest.raises(ValidationError):
        jj.Plaquette(1, 3, -1)


def test_parse_rejects_booleans_as_integers():
    with pytest.raises(ValidationError):
        jj.parse_topology('{"name": "x", "plaquettes": [{"id": true, "junctions": 3}]}')


def test_fully_shared_component_is_singular():
    # Two plaquettes sharing all of their junctions: the coupling matrix is a
    # pure Laplacian block.
    with pytest.raises(SingularityError):
        jj.ArrayTopology(
            "closed",
            (jj.Plaquette(1, 3), jj.Plaquette(2, 3)),
            (jj.SharedJunctionLink(1, 2, 3),),
        )


# -- symmetry orbits ----------------------------------------------------------


def test_orbits_triangle_stack(triangle):
    assert jj.automorphism_orbits(triangle) == ((1, 2, 3), (4,))


def test_orbits_single_loop(single_loop):
    assert jj.automorphism_orbits(single_loop) == ((1,),)


def test_orbits_square_grid():
    assert jj.automorphism_orbits(jj.builtin_topology("square-2x2")) == ((1, 2, 3, 4),)


def test_orbits_checkerboard():
    topology = jj.builtin_topology("square-2x2-checkerboard-pi")
    assert jj.automorphism_orbits(topology) == ((1, 4), (2, 3))


def test_orbits_spin_star():
    assert jj.automorphism_orbits(jj.builtin_topology("spin-star-5")) == ((1, 2, 3, 4, 5),)


def test_orbits_distinguish_junction_counts():
    topology = jj.ArrayTopology(
        "mixed", (jj.Plaquette(1, 3), jj.Plaquette(2, 4), jj.Plaquette(3, 3))
    )
    assert jj.automorphism_orbits(topology) == ((1, 3), (2,))


def test_orbit_search_size_limit():
    plaquettes = tuple(jj.Plaquette(i, 3) for i in range(1, 14))
    topology = jj.ArrayTopology("big", plaquettes)
    with pytest.raises(LimitError):
        jj.automorphism_orbits(topology)

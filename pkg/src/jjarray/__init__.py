"""Supercurrents and flux-dependent energy landscapes of Josephson plaquette arrays.

The package models arrays of coupled superconducting plaquettes, each side
carrying one Josephson junction (optionally a pi-junction), in the harmonic
quasiclassical limit: flux quantisation turns every vortex configuration into
a small symmetric linear system for the circulating currents, and the total
junction energy becomes an exact quadratic form.  On top of that core it
enumerates vortex configurations, extracts exact ground-state flux intervals,
degeneracy classes and branch crossings, and converts geometry to inductance,
critical current and the dimensionless energy prefactor.

Interfaces: this package (library), ``jjarray.cli`` (command line) and
``jjarray.service`` (HTTP, FastAPI).
"""

from .coupling import (
    CouplingSystem,
    assemble,
    energy,
    junction_sum_energy,
    reduced_frustration,
    rhs,
    solve_currents,
    triangle_stack_currents,
)
from .errors import (
    DegenerateBranchError,
    JJArrayError,
    LimitError,
    ParameterError,
    ParseError,
    SingularityError,
    ValidationError,
)
from .landscape import (
    BranchFamily,
    EnumerationWindow,
    LandscapeBranch,
    SweepTable,
    crossing,
    degeneracy_classes,
    enumerate_configs,
    flux_grid,
    ground_branches,
    ground_families,
    parabola,
    sweep,
)
from .physical import (
    MU0,
    PHI0,
    PhysicalParams,
    critical_current,
    derived_quantities,
    energy_prefactor,
    josephson_energy,
    leg_self_inductance,
    polygon_self_inductance,
)
from .topology import (
    BUILTIN_NAMES,
    ArrayTopology,
    Plaquette,
    SharedJunctionLink,
    automorphism_orbits,
    builtin_topology,
    parse_topology,
    serialize_topology,
    topology_document,
    topology_from_document,
)

__version__ = "0.1.0"

__all__ = [
    "ArrayTopology",
    "BUILTIN_NAMES",
    "BranchFamily",
    "CouplingSystem",
    "DegenerateBranchError",
    "EnumerationWindow",
    "JJArrayError",
    "LandscapeBranch",
    "LimitError",
    "MU0",
    "PHI0",
    "ParameterError",
    "ParseError",
    "PhysicalParams",
    "Plaquette",
    "SharedJunctionLink",
    "SingularityError",
    "SweepTable",
    "ValidationError",
    "assemble",
    "automorphism_orbits",
    "builtin_topology",
    "critical_current",
    "crossing",
    "degeneracy_classes",
    "derived_quantities",
    "energy",
    "energy_prefactor",
    "enumerate_configs",
    "flux_grid",
    "ground_branches",
    "ground_families",
    "josephson_energy",
    "junction_sum_energy",
    "leg_self_inductance",
    "parabola",
    "parse_topology",
    "polygon_self_inductance",
    "reduced_frustration",
    "rhs",
    "serialize_topology",
    "solve_currents",
    "sweep",
    "topology_document",
    "topology_from_document",
    "triangle_stack_currents",
    "__version__",
]

"""HTTP service exposing the array computations.

Run with ``uvicorn jjarray.service:app``.  All computations are pure and
stateless, so the service scales to concurrent clients without locking.
Domain errors map to HTTP 400 with ``{"error": <code>, "detail": ...}``;
request-shape errors are FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas
from .coupling import CouplingSystem, assemble, energy, solve_currents
from .errors import JJArrayError
from .landscape import EnumerationWindow, ground_branches, parabola, sweep
from .output import branch_record
from .physical import PhysicalParams, derived_quantities
from .topology import (
    BUILTIN_NAMES,
    ArrayTopology,
    automorphism_orbits,
    builtin_topology,
    topology_document,
    topology_from_document,
)

app = FastAPI(
    title="jjarray",
    description=(
        "Supercurrents, total energies and flux-dependent energy landscapes of "
        "coupled Josephson-junction plaquette arrays with optional pi-junctions."
    ),
    version="0.1.0",
)


@app.exception_handler(JJArrayError)
async def _domain_error(_request: Request, exc: JJArrayError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": exc.code, "detail": str(exc)})


def _resolve(selector: schemas.TopologySelector) -> tuple[ArrayTopology, CouplingSystem]:
    if selector.topology is not None:
        topology = builtin_topology(selector.topology)
    else:
        topology = topology_from_document(selector.document)
    return topology, assemble(topology)


@app.get("/topologies", response_model=schemas.TopologyListResponse)
def list_topologies() -> schemas.TopologyListResponse:
    return schemas.TopologyListResponse(topologies=list(BUILTIN_NAMES))


@app.post("/topology/validate", response_model=schemas.TopologyValidateResponse)
def validate_topology(selector: schemas.TopologySelector) -> schemas.TopologyValidateResponse:
    topology, _system = _resolve(selector)
    return schemas.TopologyValidateResponse(
        document=topology_document(topology),
        n_plaquettes=topology.n_plaquettes,
        junction_counts=list(topology.junction_counts),
        boundary_counts=list(topology.boundary_counts),
        pi_parity=list(topology.pi_parity),
        orbits=[list(orbit) for orbit in automorphism_orbits(topology)],
    )


@app.post("/currents", response_model=schemas.CurrentsResponse)
def currents(request: schemas.CurrentsRequest) -> schemas.CurrentsResponse:
    topology, system = _resolve(request)
    values = solve_currents(system, request.n, request.f)
    return schemas.CurrentsResponse(
        topology=topology.name,
        n=request.n,
        f=request.f,
        currents=[float(v) for v in values],
    )


@app.post("/energy", response_model=schemas.EnergyResponse)
def total_energy(request: schemas.EnergyRequest) -> schemas.EnergyResponse:
    topology, system = _resolve(request)
    value = energy(system, request.n, request.f, request.kappa)
    return schemas.EnergyResponse(
        topology=topology.name,
        n=request.n,
        f=request.f,
        kappa=request.kappa,
        energy=value,
    )


@app.post("/vertex", response_model=schemas.VertexResponse)
def vertex(request: schemas.VertexRequest) -> schemas.VertexResponse:
    topology, system = _resolve(request)
    branch = parabola(system, request.n)
    return schemas.VertexResponse(topology=topology.name, n=request.n, vertex_f=branch.vertex_f)


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep_grid(request: schemas.SweepRequest) -> schemas.SweepResponse:
    topology, system = _resolve(request)
    window = EnumerationWindow(request.window_min, request.window_max)
    table = sweep(system, window, (request.f_min, request.f_max, request.f_step), request.kappa)
    rows = [
        schemas.SweepRow(f=f, config=list(config), energy=e, is_ground=g)
        for f, config, e, g in table.rows()
    ]
    return schemas.SweepResponse(
        topology=topology.name,
        kappa=request.kappa,
        window=[window.n_min, window.n_max],
        rows=rows,
    )


@app.post("/branches", response_model=schemas.BranchesResponse)
def branches(request: schemas.BranchesRequest) -> schemas.BranchesResponse:
    topology, system = _resolve(request)
    window = EnumerationWindow(request.window_min, request.window_max)
    found = ground_branches(system, window, (request.f_min, request.f_max), request.kappa)
    return schemas.BranchesResponse(
        topology=topology.name,
        kappa=request.kappa,
        window=[window.n_min, window.n_max],
        f_range=[request.f_min, request.f_max],
        branches=[schemas.BranchModel(**branch_record(b)) for b in found],
    )


@app.post("/physical", response_model=schemas.PhysicalResponse)
def physical_parameters(request: schemas.PhysicalRequest) -> schemas.PhysicalResponse:
    params = PhysicalParams(
        leg_length=request.leg_length,
        half_width=request.half_width,
        legs=request.legs,
        jc_scale=request.jc_scale,
    )
    return schemas.PhysicalResponse(**derived_quantities(params))

"""Pydantic request/response models for the HTTP service.

Requests reference a topology either by built-in name (``topology``) or by an
inline topology document (``document``); exactly one of the two must be set.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class TopologySelector(BaseModel):
    topology: str | None = None
    document: dict | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "TopologySelector":
        if (self.topology is None) == (self.document is None):
            raise ValueError("set exactly one of 'topology' and 'document'")
        return self


class TopologyListResponse(BaseModel):
    topologies: list[str]


class TopologyValidateResponse(BaseModel):
    document: dict
    n_plaquettes: int
    junction_counts: list[int]
    boundary_counts: list[int]
    pi_parity: list[int]
    orbits: list[list[int]]


class CurrentsRequest(TopologySelector):
    n: list[int]
    f: float


class CurrentsResponse(BaseModel):
    topology: str
    n: list[int]
    f: float
    currents: list[float]


class EnergyRequest(TopologySelector):
    n: list[int]
    f: float
    kappa: float = 1.0


class EnergyResponse(BaseModel):
    topology: str
    n: list[int]
    f: float
    kappa: float
    energy: float


class VertexRequest(TopologySelector):
    n: list[int]


class VertexResponse(BaseModel):
    topology: str
    n: list[int]
    vertex_f: float


class SweepRequest(TopologySelector):
    f_min: float = 0.0
    f_max: float = 1.0
    f_step: float = 0.01
    window_min: int = -1
    window_max: int = 1
    kappa: float = 1.0


class SweepRow(BaseModel):
    f: float
    config: list[int]
    energy: float
    is_ground: bool


class SweepResponse(BaseModel):
    topology: str
    kappa: float
    window: list[int]
    rows: list[SweepRow]


class BranchesRequest(TopologySelector):
    f_min: float = 0.0
    f_max: float = 1.0
    window_min: int = -1
    window_max: int = 1
    kappa: float = 1.0


class BranchModel(BaseModel):
    config: list[int]
    quad: list[float] = Field(min_length=3, max_length=3)
    vertex_f: float
    ground_intervals: list[list[float]]
    multiplicity: int


class BranchesResponse(BaseModel):
    topology: str
    kappa: float
    window: list[int]
    f_range: list[float]
    branches: list[BranchModel]


class PhysicalRequest(BaseModel):
    leg_length: float = 45e-6
    half_width: float = 7.5e-6
    legs: int = 3
    jc_scale: float = 1500.0


class PhysicalResponse(BaseModel):
    leg_inductance_h: float
    critical_current_a: float
    josephson_energy_j: float
    kappa: float


class ErrorResponse(BaseModel):
    error: str
    detail: str

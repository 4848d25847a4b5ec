"""Flux-quantisation linear system and the energy quadratic form.

In the harmonic limit every junction carries a phase drop proportional to the
circulating current difference of the plaquettes it belongs to (clockwise
currents, dimensionless phase units).  Flux quantisation then couples the
per-plaquette circulating currents ``I`` through

    M I = 2 pi (n - f - parity/2)

with ``M[p][p]`` the junction count of plaquette ``p`` and ``M[p][q]`` minus
the number of junctions shared by ``p`` and ``q``.  ``n`` is the vector of
trapped fluxoid quantum numbers, ``f`` the applied (or spontaneous) flux per
plaquette in flux quanta, and pi-rings contribute the extra half-quantum
shift.

The total junction energy, in Josephson-energy units, is

    E = kappa/2 * I^T Q I,

where each plaquette sums the squared phase drops of *its own* junctions, so
a shared junction is counted once from each side.  That convention gives
``Q[p][p] = junction_count(p) + shared_total(p)`` and ``Q[p][q] = -2 *
shared_count(p, q)`` (for the triangle stack: diagonal 4,4,4,6 and cross
terms -4).  ``kappa = 1 - 2 L I_c^2 / E_J`` is the magnetic self-energy
correction from :mod:`jjarray.physical`.

All functions are pure and all arrays immutable: safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve

from .errors import ParameterError, SingularityError, ValidationError
from .topology import ArrayTopology

#: Smallest acceptable pivot (squared Cholesky diagonal) of the coupling matrix.
PIVOT_TOLERANCE = 1e-12

#: Largest acceptable residual ``max |M I - rhs|`` of a current solve.
RESIDUAL_TOLERANCE = 1e-10

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class CouplingSystem:
    """Assembled matrices of one array: coupling M, energy form Q, parity P."""

    coupling: np.ndarray        # M, symmetric positive definite, integer-valued
    quad: np.ndarray            # Q, symmetric positive semidefinite, integer-valued
    parity: np.ndarray          # P in {0,1}^N, pi-ring indicator
    cholesky: np.ndarray        # lower-triangular factor of M

    @property
    def n_plaquettes(self) -> int:
        return self.coupling.shape[0]


def assemble(topology: ArrayTopology) -> CouplingSystem:
    """Build the coupling system of a topology and factor its matrix.

    Raises :class:`SingularityError` if the Cholesky factorisation fails or
    produces a pivot below ``PIVOT_TOLERANCE``.
    """
    n = topology.n_plaquettes
    m = np.zeros((n, n))
    q = np.zeros((n, n))
    for k in range(n):
        m[k, k] = topology.junction_counts[k]
        q[k, k] = topology.junction_counts[k]
    for (i, j), count in topology.shared_counts.items():
        m[i, j] = m[j, i] = -count
        q[i, j] = q[j, i] = -2 * count
        q[i, i] += count
        q[j, j] += count
    try:
        chol = np.linalg.cholesky(m)
    except np.linalg.LinAlgError as exc:
        raise SingularityError(f"coupling matrix of {topology.name!r} is not positive definite") from exc
    if (np.diag(chol) ** 2 <= PIVOT_TOLERANCE).any():
        raise SingularityError(
            f"coupling matrix of {topology.name!r} is numerically singular "
            f"(pivot below {PIVOT_TOLERANCE})"
        )
    parity = np.array(topology.pi_parity, dtype=float)
    for arr in (m, q, parity, chol):
        arr.flags.writeable = False
    return CouplingSystem(coupling=m, quad=q, parity=parity, cholesky=chol)


def _as_config(system: CouplingSystem, n) -> np.ndarray:
    arr = np.asarray(n)
    if arr.ndim != 1 or arr.shape[0] != system.n_plaquettes:
        raise ValidationError(
            f"vortex configuration must have {system.n_plaquettes} entries, got {arr.shape}"
        )
    values = arr.astype(float)
    if not np.all(values == np.rint(values)):
        raise ValidationError(f"vortex quantum numbers must be integers, got {list(arr)}")
    return values


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not 0.0 < kappa <= 1.0:
        raise ParameterError(f"energy prefactor kappa must lie in (0, 1], got {kappa}")
    return kappa


def reduced_frustration(system: CouplingSystem, n, f: float) -> np.ndarray:
    """g = n - f - parity/2, the effective frustration driving the currents."""
    return _as_config(system, n) - float(f) - system.parity / 2.0


def rhs(system: CouplingSystem, n, f: float) -> np.ndarray:
    """Right-hand side ``2 pi (n - f - parity/2)`` of the current system."""
    return _TWO_PI * reduced_frustration(system, n, f)


def solve_currents(system: CouplingSystem, n, f: float) -> np.ndarray:
    """Circulating currents (dimensionless, clockwise positive) for (n, f).

    Uses the precomputed symmetric factorisation; verifies the residual
    ``max |M I - rhs| <= RESIDUAL_TOLERANCE``.
    """
    r = rhs(system, n, f)
    currents = cho_solve((system.cholesky, True), r)
    residual = np.max(np.abs(system.coupling @ currents - r))
    if residual > RESIDUAL_TOLERANCE:
        raise SingularityError(f"current solve residual {residual:.3e} exceeds tolerance")
    return currents


def solve_many(system: CouplingSystem, rhs_columns: np.ndarray) -> np.ndarray:
    """Solve ``M X = R`` for a matrix of right-hand-side columns."""
    return cho_solve((system.cholesky, True), rhs_columns)


def energy(system: CouplingSystem, n, f: float, kappa: float = 1.0) -> float:
    """Total junction energy in Josephson-energy units: ``kappa/2 * I^T Q I``."""
    kappa = _check_kappa(kappa)
    currents = solve_currents(system, n, f)
    return 0.5 * kappa * float(currents @ system.quad @ currents)


def junction_sum_energy(topology: ArrayTopology, currents, kappa: float = 1.0) -> float:
    """Energy recomputed junction by junction, independent of the Q form.

    Every plaquette sums the squared phase drops of its own junctions:
    ``I_p`` for a boundary junction, ``I_p - I_q`` for a junction shared with
    ``q`` (so each shared junction contributes from both sides).  Agrees with
    :func:`energy` to roundoff; kept as a second computation path.
    """
    kappa = _check_kappa(kappa)
    values = np.asarray(currents, dtype=float)
    if values.shape != (topology.n_plaquettes,):
        raise ValidationError(
            f"need {topology.n_plaquettes} currents, got shape {values.shape}"
        )
    total = 0.0
    for p in topology.plaquettes:
        idx = topology.index_of(p.id)
        total += topology.boundary_count(p.id) * values[idx] ** 2
        for link in topology.links:
            if p.id == link.a:
                other = topology.index_of(link.b)
            elif p.id == link.b:
                other = topology.index_of(link.a)
            else:
                continue
            total += link.count * (values[idx] - values[other]) ** 2
    return 0.5 * kappa * total


# ---------------------------------------------------------------------------
# Closed-form reference solution for the four-triangle stack
# ---------------------------------------------------------------------------

# Inverse coupling of the triangle stack times 54; the last row/column is the
# central plaquette.  Kept as explicit integers so tests can cross-check the
# generic solver against an independent formula.
_TRIANGLE_STACK_INVERSE_54 = np.array(
    [
        [21, 3, 3, 9],
        [3, 21, 3, 9],
        [3, 3, 21, 9],
        [9, 9, 9, 27],
    ],
    dtype=float,
)


def triangle_stack_currents(n, f: float) -> np.ndarray:
    """Closed-form currents of ``triangle-stack-4`` (ordinary junctions only).

    Evaluates the explicit rational inverse of the 4x4 coupling matrix:
    ``I = pi/27 * coeffs @ (n - f)`` with outer rows (21,3,3,9)-style and the
    central row (9,9,9,27).  Only valid for the plain four-triangle stack.
    """
    arr = np.asarray(n)
    if arr.ndim != 1 or arr.shape[0] != 4:
        raise ValidationError("closed-form currents require a 4-plaquette configuration")
    values = arr.astype(float)
    if not np.all(values == np.rint(values)):
        raise ValidationError(f"vortex quantum numbers must be integers, got {list(arr)}")
    return (np.pi / 27.0) * (_TRIANGLE_STACK_INVERSE_54 @ (values - float(f)))

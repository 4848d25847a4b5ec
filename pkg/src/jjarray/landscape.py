"""Vortex-configuration enumeration and flux-dependent energy landscapes.

For a fixed vortex configuration ``n`` the energy is an exact parabola in the
applied flux ``f``:

    E(f) = A f^2 + B f + C,   A > 0,

with coefficients determined by the coupling system (all configurations of
one system share the same curvature ``A``).  This module enumerates
configurations inside a window, computes the parabolas, sweeps flux grids
pointwise, and extracts the exact ground-state structure:

* ``ground_branches`` computes, per configuration, the flux intervals where
  its parabola is the global minimum (the lower envelope, found analytically
  from parabola intersections, not from a grid).
* ``ground_families`` reports, per distinct parabola-vertex position, the
  lowest branch family: the labelled curve structure of an energy-vs-flux
  plot.  A family can be the lowest curve of its vertex class yet never reach
  the global envelope, so families and envelope ownership are reported
  separately.

Energies are in Josephson-energy units throughout; all inputs are immutable
and all functions pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .coupling import CouplingSystem, _check_kappa, solve_many
from .errors import DegenerateBranchError, LimitError, ValidationError

#: Hard cap on the number of configurations a window may span.
MAX_CONFIGURATIONS = 10**7

#: Default relative tolerance for energy ties and degeneracy grouping.
DEGENERACY_TOLERANCE = 1e-9

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class EnumerationWindow:
    """Per-plaquette bounds of the trapped-vortex quantum numbers."""

    n_min: int = -1
    n_max: int = 1

    def __post_init__(self) -> None:
        if self.n_min > self.n_max:
            raise ValidationError(f"empty window: {self.n_min} > {self.n_max}")

    @property
    def span(self) -> int:
        return self.n_max - self.n_min + 1

    def config_count(self, n_plaquettes: int) -> int:
        count = self.span ** n_plaquettes
        if count > MAX_CONFIGURATIONS:
            raise LimitError(
                f"window {self.n_min}..{self.n_max} spans {count} configurations "
                f"for {n_plaquettes} plaquettes (limit {MAX_CONFIGURATIONS})"
            )
        return count


@dataclass(frozen=True)
class LandscapeBranch:
    """One configuration's energy parabola and its global ground intervals.

    ``quad`` holds (A, B, C) of ``E(f) = A f^2 + B f + C`` in Josephson-energy
    units; ``vertex_f = -B / (2A)`` locates the parabola minimum;
    ``ground_intervals`` are the closed flux intervals (possibly empty, and
    degenerate single points at shared crossings) where this configuration
    attains the minimum energy among all enumerated ones; ``multiplicity``
    counts the configurations sharing this exact parabola.
    """

    config: tuple[int, ...]
    quad: tuple[float, float, float]
    vertex_f: float
    ground_intervals: tuple[tuple[float, float], ...] = ()
    multiplicity: int = 1

    def energy_at(self, f: float) -> float:
        a, b, c = self.quad
        return (a * f + b) * f + c

    @property
    def vertex_energy(self) -> float:
        return self.energy_at(self.vertex_f)


@dataclass(frozen=True)
class BranchFamily:
    """Branches sharing one parabola: the degenerate curve of a landscape plot."""

    vertex_f: float
    quad: tuple[float, float, float]
    configs: tuple[tuple[int, ...], ...]
    ground_intervals: tuple[tuple[float, float], ...] = ()

    @property
    def multiplicity(self) -> int:
        return len(self.configs)


@dataclass(frozen=True)
class SweepTable:
    """Energies of every configuration on a flux grid, with ground flags.

    Row order is flux-major, then lexicographic configuration; this order is
    deterministic and is the one emitted by all output formats.
    """

    configs: tuple[tuple[int, ...], ...]
    flux: tuple[float, ...]
    energies: np.ndarray          # shape (n_configs, n_flux)
    ground: np.ndarray            # same shape, boolean

    def rows(self):
        """Yield ``(f, config, energy, is_ground)`` in canonical order."""
        for j, f in enumerate(self.flux):
            for k, config in enumerate(self.configs):
                yield f, config, float(self.energies[k, j]), bool(self.ground[k, j])


def enumerate_configs(
    n_plaquettes: int, window: EnumerationWindow
) -> list[tuple[int, ...]]:
    """All vortex configurations in the window, lexicographically ordered."""
    if n_plaquettes < 1:
        raise ValidationError(f"need at least one plaquette, got {n_plaquettes}")
    window.config_count(n_plaquettes)
    values = range(window.n_min, window.n_max + 1)
    return list(itertools.product(values, repeat=n_plaquettes))


# ---------------------------------------------------------------------------
# Parabola coefficients
# ---------------------------------------------------------------------------


def _parabola_table(
    system: CouplingSystem, configs: list[tuple[int, ...]], kappa: float
) -> tuple[float, np.ndarray, np.ndarray]:
    """Shared curvature A and per-config (B, C) of E(f) = A f^2 + B f + C.

    With W = M^-1 Q M^-1 and v = n - parity/2:
    A = kappa/2 (2 pi)^2 1'W1, B = -kappa (2 pi)^2 1'Wv,
    C = kappa/2 (2 pi)^2 v'Wv.
    """
    kappa = _check_kappa(kappa)
    v = np.asarray(configs, dtype=float) - system.parity / 2.0     # (K, N)
    x = solve_many(system, v.T)                                     # M^-1 v, (N, K)
    u = solve_many(system, np.ones(system.n_plaquettes))            # M^-1 1
    qu = system.quad @ u
    scale = kappa * _TWO_PI ** 2
    a = 0.5 * scale * float(u @ qu)
    b = -scale * (qu @ x)
    c = 0.5 * scale * np.einsum("nk,nm,mk->k", x, system.quad, x)
    return a, b, c


def parabola(system: CouplingSystem, n, kappa: float = 1.0) -> LandscapeBranch:
    """Energy parabola of one configuration (no ground-interval analysis)."""
    config = tuple(int(v) for v in np.asarray(n).ravel())
    a, b, c = _parabola_table(system, [config], kappa)
    return LandscapeBranch(
        config=config,
        quad=(a, float(b[0]), float(c[0])),
        vertex_f=-float(b[0]) / (2.0 * a),
    )


# ---------------------------------------------------------------------------
# Pointwise energies and sweeps
# ---------------------------------------------------------------------------


def flux_grid(f_min: float, f_max: float, f_step: float) -> np.ndarray:
    """Deterministic closed grid ``f_min, f_min + f_step, ... <= f_max``."""
    if not f_step > 0:
        raise ValidationError(f"flux step must be positive, got {f_step}")
    if f_max < f_min:
        raise ValidationError(f"empty flux range: {f_min} > {f_max}")
    count = int(math.floor((f_max - f_min) / f_step + 1e-9)) + 1
    return f_min + f_step * np.arange(count)


def _energy_grid(
    system: CouplingSystem,
    configs: list[tuple[int, ...]],
    flux: np.ndarray,
    kappa: float,
) -> np.ndarray:
    """Pointwise energies, shape (n_configs, n_flux), via batched solves.

    This evaluates the quadratic form current-by-current at every grid point
    (no parabola algebra), so grids can cross-check the analytic branches.
    """
    kappa = _check_kappa(kappa)
    v = np.asarray(configs, dtype=float) - system.parity / 2.0      # (K, N)
    g = v[:, :, None] - flux[None, None, :]                          # (K, N, F)
    k_count, n, f_count = g.shape
    r = _TWO_PI * g.transpose(1, 0, 2).reshape(n, k_count * f_count)
    x = solve_many(system, r)
    e = 0.5 * kappa * np.einsum("nq,nm,mq->q", x, system.quad, x)
    return e.reshape(k_count, f_count)


def sweep(
    system: CouplingSystem,
    window: EnumerationWindow,
    f_grid: tuple[float, float, float],
    kappa: float = 1.0,
    tol: float = DEGENERACY_TOLERANCE,
) -> SweepTable:
    """Tabulate every configuration's energy over a flux grid.

    ``f_grid`` is ``(f_min, f_max, f_step)``.  At each grid point all
    configurations within relative ``tol`` of the minimum energy are flagged
    as ground states.
    """
    flux = flux_grid(*f_grid)
    configs = enumerate_configs(system.n_plaquettes, window)
    energies = _energy_grid(system, configs, flux, kappa)
    minima = energies.min(axis=0)
    ground = energies <= minima + tol * np.maximum(1.0, np.abs(minima))
    energies.flags.writeable = False
    ground.flags.writeable = False
    return SweepTable(
        configs=tuple(configs),
        flux=tuple(float(f) for f in flux),
        energies=energies,
        ground=ground,
    )


# ---------------------------------------------------------------------------
# Exact ground intervals (lower envelope of congruent parabolas)
# ---------------------------------------------------------------------------


def _cluster_sorted(items, value, tol: float) -> list[list]:
    """Cluster items by one float key within relative tolerance of the first member."""
    groups: list[list] = []
    for item in sorted(items, key=value):
        if groups:
            rep = value(groups[-1][0])
            if abs(value(item) - rep) <= tol * max(1.0, abs(rep)):
                groups[-1].append(item)
                continue
        groups.append([item])
    return groups


def _group_identical(b: np.ndarray, c: np.ndarray, tol: float) -> list[list[int]]:
    """Cluster configuration indices whose parabolas coincide within tol.

    Two-level clustering (first B, then C inside each B cluster): sorting on
    the raw (B, C) pair would let sub-ulp noise in B interleave families that
    share B but differ in C.
    """
    groups: list[list[int]] = []
    for b_cluster in _cluster_sorted(range(len(b)), lambda k: b[k], tol):
        groups.extend(_cluster_sorted(b_cluster, lambda k: c[k], tol))
    return groups


def _lower_envelope(
    line_b: list[float], line_c: list[float], f_lo: float, f_hi: float, tol: float
) -> list[tuple[float, float, int]]:
    """Envelope segments of lines ``B f + C`` over [f_lo, f_hi].

    All parabolas of one system share the curvature term, so the envelope of
    the parabolas equals the envelope of these residual lines.  Returns
    ``(start, end, line_index)`` segments tiling the range.
    """
    count = len(line_b)
    values = [line_b[g] * f_lo + line_c[g] for g in range(count)]
    vmin = min(values)
    tied = [g for g in range(count) if values[g] <= vmin + tol * max(1.0, abs(vmin))]
    active = min(tied, key=lambda g: (line_b[g], g))
    segments: list[tuple[float, float, int]] = []
    f0 = f_lo
    while True:
        best_f: float | None = None
        best_g = -1
        for g in range(count):
            if g == active:
                continue
            slope_drop = line_b[g] - line_b[active]
            if slope_drop >= 0:
                continue
            fc = (line_c[g] - line_c[active]) / (-slope_drop)
            if fc <= f0 + 1e-12 * max(1.0, abs(f0)):
                continue
            if (
                best_f is None
                or fc < best_f - 1e-12 * max(1.0, abs(fc))
                or (
                    abs(fc - best_f) <= 1e-12 * max(1.0, abs(fc))
                    and line_b[g] < line_b[best_g]
                )
            ):
                best_f, best_g = fc, g
        if best_f is None or best_f >= f_hi:
            segments.append((f0, f_hi, active))
            return segments
        segments.append((f0, best_f, active))
        f0, active = best_f, best_g


def ground_branches(
    system: CouplingSystem,
    window: EnumerationWindow,
    f_range: tuple[float, float],
    kappa: float = 1.0,
    tol: float = DEGENERACY_TOLERANCE,
) -> list[LandscapeBranch]:
    """Every configuration's branch with its exact global ground intervals.

    Intervals are computed from parabola intersections (never from a grid);
    the union of all intervals tiles ``f_range``, adjacent branches share
    their crossing point, and any branch tying the minimum only at an
    isolated crossing receives that point as a degenerate interval.  Branches
    are returned for *all* enumerated configurations (empty interval tuple
    when a branch never reaches the envelope), sorted by vertex position and
    then configuration.
    """
    f_lo, f_hi = (float(f_range[0]), float(f_range[1]))
    if not f_lo < f_hi:
        raise ValidationError(f"empty flux range: {f_range}")
    configs = enumerate_configs(system.n_plaquettes, window)
    a, b, c = _parabola_table(system, configs, kappa)
    groups = _group_identical(b, c, tol)
    line_b = [float(b[members[0]]) for members in groups]
    line_c = [float(c[members[0]]) for members in groups]
    segments = _lower_envelope(line_b, line_c, f_lo, f_hi, tol)

    intervals: dict[int, list[tuple[float, float]]] = {gi: [] for gi in range(len(groups))}
    for start, end, gi in segments:
        intervals[gi].append((start, end))
    # Report isolated ties: every group matching the minimum at a crossing or
    # at a range endpoint gets that point, unless an interval already covers it.
    tie_points = [seg[0] for seg in segments[1:]] + [f_lo, f_hi]
    for tie_f in tie_points:
        vmin = min(line_b[gi] * tie_f + line_c[gi] for gi in range(len(groups)))
        for gi in range(len(groups)):
            value = line_b[gi] * tie_f + line_c[gi]
            if value > vmin + tol * max(1.0, abs(vmin)):
                continue
            if any(lo <= tie_f <= hi for lo, hi in intervals[gi]):
                continue
            intervals[gi].append((tie_f, tie_f))
    for gi in intervals:
        intervals[gi].sort()

    branches = []
    for gi, members in enumerate(groups):
        shared = tuple(intervals[gi])
        for k in members:
            branches.append(
                LandscapeBranch(
                    config=configs[k],
                    quad=(a, float(b[k]), float(c[k])),
                    vertex_f=-float(b[k]) / (2.0 * a),
                    ground_intervals=shared,
                    multiplicity=len(members),
                )
            )
    branches.sort(key=lambda br: (br.vertex_f, br.config))
    return branches


def ground_families(
    branches: list[LandscapeBranch], tol: float = DEGENERACY_TOLERANCE
) -> list[BranchFamily]:
    """The lowest branch family at each distinct vertex position.

    Groups branches sharing one parabola into families, then keeps, per
    distinct vertex flux, the family whose curve lies lowest.  This is the
    sequence of labelled ground-family curves of a landscape plot; note that
    a family may be the lowest of its vertex class without ever owning a
    global ground interval (its curve can sit above another family's at every
    flux; compare ``ground_intervals``).
    """
    families: list[list[LandscapeBranch]] = []
    for b_cluster in _cluster_sorted(branches, lambda br: br.quad[1], tol):
        families.extend(_cluster_sorted(b_cluster, lambda br: br.quad[2], tol))

    by_vertex: list[tuple[float, list[LandscapeBranch]]] = []
    for members in sorted(families, key=lambda mem: mem[0].vertex_f):
        vertex = members[0].vertex_f
        if by_vertex and abs(vertex - by_vertex[-1][0]) <= tol * max(1.0, abs(vertex)):
            # same vertex class: keep the lower curve (smaller constant term)
            if members[0].quad[2] < by_vertex[-1][1][0].quad[2]:
                by_vertex[-1] = (by_vertex[-1][0], members)
        else:
            by_vertex.append((vertex, members))

    return [
        BranchFamily(
            vertex_f=vertex,
            quad=members[0].quad,
            configs=tuple(sorted(br.config for br in members)),
            ground_intervals=members[0].ground_intervals,
        )
        for vertex, members in by_vertex
    ]


def crossing(branch_a: LandscapeBranch, branch_b: LandscapeBranch) -> list[float]:
    """Flux values where two branches have equal energy, sorted ascending.

    Raises :class:`DegenerateBranchError` when the branches share one
    parabola (equal everywhere); returns ``[]`` when the branches never meet.
    """
    da = branch_a.quad[0] - branch_b.quad[0]
    db = branch_a.quad[1] - branch_b.quad[1]
    dc = branch_a.quad[2] - branch_b.quad[2]
    scale = max(1.0, *(abs(v) for v in branch_a.quad + branch_b.quad))
    tiny = 1e-12 * scale
    if abs(da) <= tiny and abs(db) <= tiny and abs(dc) <= tiny:
        raise DegenerateBranchError(
            f"branches {branch_a.config} and {branch_b.config} coincide everywhere"
        )
    if abs(da) <= tiny:
        if abs(db) <= tiny:
            return []
        return [-dc / db]
    disc = db * db - 4.0 * da * dc
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    q = -(db + sq) / 2.0 if db >= 0 else -(db - sq) / 2.0
    roots = [0.0, -db / da] if q == 0.0 else [q / da, dc / q]
    roots.sort()
    if abs(roots[1] - roots[0]) <= 1e-12 * max(1.0, abs(roots[0])):
        return [roots[0]]
    return roots


def degeneracy_classes(
    system: CouplingSystem,
    window: EnumerationWindow,
    f: float,
    kappa: float = 1.0,
    tol: float = DEGENERACY_TOLERANCE,
) -> list[tuple[float, tuple[tuple[int, ...], ...]]]:
    """Group configurations by energy at flux ``f``, lowest class first.

    Returns ``(class_energy, configs)`` pairs; ``class_energy`` is the
    smallest energy of the class and membership uses relative tolerance
    ``tol`` against it.
    """
    configs = enumerate_configs(system.n_plaquettes, window)
    energies = _energy_grid(system, configs, np.array([float(f)]), kappa)[:, 0]
    order = sorted(range(len(configs)), key=lambda k: (energies[k], configs[k]))
    classes: list[tuple[float, list[tuple[int, ...]]]] = []
    for k in order:
        if classes:
            base = classes[-1][0]
            if energies[k] <= base + tol * max(1.0, abs(base)):
                classes[-1][1].append(configs[k])
                continue
        classes.append((float(energies[k]), [configs[k]]))
    return [(e, tuple(sorted(members))) for e, members in classes]

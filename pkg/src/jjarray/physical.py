"""Physical parameters: loop self-inductance, critical current, energy scales.

The electrical model in :mod:`jjarray.coupling` is dimensionless; this module
owns every SI quantity.  A plaquette is an ``legs``-sided polygon of
strip-line legs of length ``leg_length`` (D) and half-width ``half_width``
(a, i.e. full strip width 2a).  Its self-inductance is

    L = legs * mu0/(4 pi) * [ (D-a) asinh((D-a)/a) - a asinh(1)
                              + sqrt(2) a - sqrt(a^2 + (D-a)^2) ]

which vanishes in the degenerate limit D = 2a.  (The constant term is
``sqrt(2)*a``: only that reading is dimensionally a length.)

The junction critical current is modelled as ``I_c = jc_scale * a * D`` with
``jc_scale`` a current-density-like coefficient in A/m^2 (default 1500), the
Josephson energy is ``E_J = Phi0 I_c / (2 pi)``, and the dimensionless energy
prefactor used by the landscape is

    kappa = 1 - 2 L I_c^2 / E_J = 1 - 4 pi L I_c / Phi0,

i.e. one minus the magnetic self-energy relative to the Josephson energy
(about 5% for the default geometry).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

#: Vacuum permeability, H/m.
MU0 = 4.0e-7 * math.pi

#: Magnetic flux quantum h/2e, Wb (2018 CODATA, 10 significant figures).
PHI0 = 2.067833848e-15


@dataclass(frozen=True)
class PhysicalParams:
    """Geometry and material constants of one plaquette family.

    ``leg_length`` must exceed the full strip width ``2 * half_width``; the
    degenerate equality case is accepted by the raw formula functions but not
    by this container.
    """

    leg_length: float = 45e-6       # D, metres
    half_width: float = 7.5e-6      # a, metres (strip width is 2a)
    legs: int = 3                   # sides per polygon plaquette
    jc_scale: float = 1500.0        # A/m^2, critical-current coefficient
    mu0: float = MU0
    phi0: float = PHI0

    def __post_init__(self) -> None:
        if not self.half_width > 0:
            raise ParameterError(f"half width must be positive, got {self.half_width}")
        if not self.leg_length > 2 * self.half_width:
            raise ParameterError(
                f"leg length {self.leg_length} must exceed the strip width "
                f"{2 * self.half_width}"
            )
        if isinstance(self.legs, bool) or not isinstance(self.legs, int) or self.legs < 3:
            raise ParameterError(f"a polygon needs at least 3 legs, got {self.legs}")
        if not self.jc_scale > 0:
            raise ParameterError(f"jc scale must be positive, got {self.jc_scale}")


def polygon_self_inductance(
    leg_length: float, half_width: float, legs: int, mu0: float = MU0
) -> float:
    """Self-inductance in henries of an ``legs``-sided strip-line loop.

    Accepts the degenerate limit ``leg_length == 2 * half_width`` (result 0);
    anything narrower is a domain error.
    """
    if isinstance(legs, bool) or not isinstance(legs, int) or legs < 3:
        raise ParameterError(f"a polygon needs at least 3 legs, got {legs}")
    if not half_width > 0:
        raise ParameterError(f"half width must be positive, got {half_width}")
    if leg_length < 2 * half_width:
        raise ParameterError(
            f"leg length {leg_length} below the strip width {2 * half_width}"
        )
    span = leg_length - half_width
    bracket = (
        span * math.asinh(span / half_width)
        - half_width * math.asinh(1.0)
        + math.sqrt(2.0) * half_width
        - math.hypot(half_width, span)
    )
    return legs * mu0 / (4.0 * math.pi) * bracket


def leg_self_inductance(params: PhysicalParams) -> float:
    """Self-inductance in henries of one plaquette of ``params``."""
    return polygon_self_inductance(
        params.leg_length, params.half_width, params.legs, params.mu0
    )


def critical_current(params: PhysicalParams) -> float:
    """Junction critical current in amperes: ``jc_scale * a * D``."""
    return params.jc_scale * params.half_width * params.leg_length


def josephson_energy(critical_current_a: float, phi0: float = PHI0) -> float:
    """Josephson energy in joules, ``Phi0 I_c / (2 pi)``."""
    if not critical_current_a > 0:
        raise ParameterError(f"critical current must be positive, got {critical_current_a}")
    return phi0 * critical_current_a / (2.0 * math.pi)


def energy_prefactor(
    inductance_h: float, critical_current_a: float, phi0: float = PHI0
) -> float:
    """Dimensionless landscape prefactor ``kappa = 1 - 4 pi L I_c / Phi0``.

    Raises :class:`ParameterError` when the magnetic self-energy would reach
    or exceed the Josephson energy (kappa <= 0: outside the model's regime).
    """
    if inductance_h < 0:
        raise ParameterError(f"inductance must be non-negative, got {inductance_h}")
    if not critical_current_a > 0:
        raise ParameterError(f"critical current must be positive, got {critical_current_a}")
    kappa = 1.0 - 4.0 * math.pi * inductance_h * critical_current_a / phi0
    if kappa <= 0.0:
        raise ParameterError(
            f"unphysical parameters: magnetic self-energy cancels the Josephson "
            f"energy (kappa = {kappa:.6g})"
        )
    return kappa


def derived_quantities(params: PhysicalParams) -> dict[str, float]:
    """Inductance, critical current, Josephson energy, and kappa of ``params``."""
    inductance = leg_self_inductance(params)
    current = critical_current(params)
    return {
        "leg_inductance_h": inductance,
        "critical_current_a": current,
        "josephson_energy_j": josephson_energy(current, params.phi0),
        "kappa": energy_prefactor(inductance, current, params.phi0),
    }

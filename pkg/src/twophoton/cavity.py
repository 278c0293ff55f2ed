"""Cavity mode and bulk host descriptions, mode densities, Purcell factor.

The frequency mismatch profile used throughout is

    phi(omega) = (omega/omega_c) / (1 + 4 Q^2 (omega/omega_c - 1)^2)

which equals 1 at omega = omega_c. The omega/omega_c numerator is kept
as is, so the true maximum of phi sits a fraction ~1/(8 Q^2) of a
linewidth above resonance; the on-resonance value is still exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quantities import AngularFrequency, Wavelength, wavelength_to_angular_frequency

__all__ = [
    "BulkHost",
    "CavityMode",
    "bulk_mode_density",
    "cavity_mode_density_times_omega",
    "lorentzian_mismatch",
    "mode_at_wavelength",
    "purcell_factor",
]


@dataclass(frozen=True)
class BulkHost:
    """Homogeneous host medium with refractive index n >= 1."""

    n: float

    def __post_init__(self):
        if not (self.n >= 1.0) or not math.isfinite(self.n):
            raise ValueError(f"refractive index must be >= 1, got {self.n!r}")


@dataclass(frozen=True)
class CavityMode:
    """Single cavity mode: center frequency, quality factor, mode volume,
    in-coupling efficiency eta and mode-overlap factor psi (both in [0, 1])."""

    omega_c: AngularFrequency
    quality: float              # dimensionless Q > 0
    volume: float               # m^3
    eta: float = 1.0            # in-coupling efficiency
    psi: float = 1.0            # emitter-mode overlap

    def __post_init__(self):
        if not (self.quality > 0.0) or not math.isfinite(self.quality):
            raise ValueError(f"quality factor must be positive, got {self.quality!r}")
        if not (self.volume > 0.0) or not math.isfinite(self.volume):
            raise ValueError(f"mode volume must be positive, got {self.volume!r}")
        if not (0.0 <= self.eta <= 1.0):
            raise ValueError(f"coupling efficiency must lie in [0, 1], got {self.eta!r}")
        if not (0.0 <= self.psi <= 1.0):
            raise ValueError(f"mode overlap must lie in [0, 1], got {self.psi!r}")


def mode_at_wavelength(wavelength: Wavelength, host: BulkHost, quality: float,
                       eta: float = 1.0, psi: float = 1.0,
                       volume_cubic_wavelengths: float = 1.0) -> CavityMode:
    """Build a mode centered at a free-space wavelength with volume given in
    units of the cubic in-medium wavelength (lambda/n)^3."""
    if not (volume_cubic_wavelengths > 0.0):
        raise ValueError(
            f"volume must be positive, got {volume_cubic_wavelengths!r} cubic wavelengths")
    volume = (wavelength.meters / host.n) ** 3 * volume_cubic_wavelengths
    return CavityMode(omega_c=wavelength_to_angular_frequency(wavelength),
                      quality=quality, volume=volume, eta=eta, psi=psi)


def lorentzian_mismatch(omega: AngularFrequency, mode: CavityMode) -> float:
    """phi(omega) = (omega/omega_c) / (1 + 4 Q^2 (omega/omega_c - 1)^2)."""
    x = omega.rad_per_s / mode.omega_c.rad_per_s
    return x / (1.0 + 4.0 * mode.quality**2 * (x - 1.0) ** 2)


def bulk_mode_density(omega: AngularFrequency, host: BulkHost, volume: float) -> float:
    """Free-photon mode density rho(omega) = V n^3 omega^2 / (3 pi^2 c^3),
    per unit angular frequency, in a host of index n and quantization volume V."""
    if not (volume > 0.0):
        raise ValueError(f"quantization volume must be positive, got {volume!r}")
    from .quantities import C
    return volume * host.n**3 * omega.rad_per_s**2 / (3.0 * math.pi**2 * C**3)


def cavity_mode_density_times_omega(omega: AngularFrequency, mode: CavityMode) -> float:
    """omega * rho(omega) for a single cavity mode: 2 Q phi(omega) / pi."""
    return 2.0 * mode.quality * lorentzian_mismatch(omega, mode) / math.pi


def purcell_factor(wavelength: Wavelength, host: BulkHost, mode: CavityMode,
                   omega: AngularFrequency | None = None) -> float:
    """Rate enhancement of one emission factor relative to bulk:

        F = (3 / 4 pi^2) (lambda/n)^3 Q phi(omega) / V

    evaluated at the mode center when omega is not given.
    """
    if omega is None:
        omega = mode.omega_c
    lam_medium = wavelength.meters / host.n
    return (3.0 / (4.0 * math.pi**2)) * lam_medium**3 * mode.quality \
        * lorentzian_mismatch(omega, mode) / mode.volume

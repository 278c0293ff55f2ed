"""Built-in parameter presets.

"paper-fig3" is the InGaAs-dot-in-GaAs working point used throughout the
test suite: 926 nm dot transition, 12/6 meV electron/hole lateral
confinement, a 1550 nm telecom mode and its energy-conserving partner,
Q = 5000 and single-cubic-wavelength volumes for both modes, 2%
in-coupling, 12 uW absorption drives over a 1 um^2 spot, and a 100 uW
stimulation drive.

Presets are plain dicts in the scenario-config schema so user configs can
override any single value; build_experiment turns a resolved dict into the
typed objects the rate functions take.
"""

from __future__ import annotations

import copy

from .cavity import BulkHost, CavityMode, mode_at_wavelength
from .quantities import (
    AngularFrequency,
    M0,
    Wavelength,
    angular_frequency_to_wavelength,
    energy_to_angular_frequency,
    wavelength_to_angular_frequency,
)
from .rates import DriveField, Experiment, Linewidth
from .stark import QuantumDotModel

__all__ = ["PRESET_NAMES", "build_experiment", "preset_config"]

_DOT_WAVELENGTH_NM = 926.0
_PUMP_WAVELENGTH_NM = 1550.0


def _paper_fig3() -> dict:
    omega_d = wavelength_to_angular_frequency(Wavelength(_DOT_WAVELENGTH_NM * 1e-9))
    omega_1 = wavelength_to_angular_frequency(Wavelength(_PUMP_WAVELENGTH_NM * 1e-9))
    omega_2 = omega_d.rad_per_s - omega_1.rad_per_s
    return {
        "dot": {
            "wavelength_nm": _DOT_WAVELENGTH_NM,
            "electron_mass_ratio": 0.055,
            "hole_mass_ratio": 0.11,
            "electron_confinement_mev": 12.0,
            "hole_confinement_mev": 6.0,
            "r_cv_nm": 0.6,
            "refractive_index": 3.4,
        },
        "modes": [
            {
                "wavelength_nm": _PUMP_WAVELENGTH_NM,
                "quality": 5000.0,
                "volume_cubic_wavelengths": 1.0,
                "eta": 0.02,
                "psi": 1.0,
            },
            {
                # energy-conserving partner of the 1550 nm mode
                "omega_rad_per_s": omega_2,
                "quality": 5000.0,
                "volume_cubic_wavelengths": 1.0,
                "eta": 0.02,
                "psi": 1.0,
            },
        ],
        "drives": [
            {"wavelength_nm": _PUMP_WAVELENGTH_NM, "power_uw": 12.0,
             "spot_area_um2": 1.0},
            {"omega_rad_per_s": omega_2, "power_uw": 12.0, "spot_area_um2": 1.0},
            {"omega_rad_per_s": omega_2, "power_uw": 100.0, "spot_area_um2": 1.0},
        ],
        "sweep": {
            "variable": "field",
            "min": 0.0,
            "max": 2.0,
            "points": 200,
            "log": False,
        },
    }


_PRESETS = {"paper-fig3": _paper_fig3}
PRESET_NAMES = tuple(sorted(_PRESETS))


def preset_config(name: str) -> dict:
    """Fresh deep copy of the named preset's full config dict."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        known = ", ".join(PRESET_NAMES)
        raise ValueError(f"unknown preset {name!r}; known presets: {known}") from None
    return copy.deepcopy(builder())


def _entry_omega(entry: dict) -> AngularFrequency:
    if "omega_rad_per_s" in entry:
        return AngularFrequency(entry["omega_rad_per_s"])
    return wavelength_to_angular_frequency(Wavelength(entry["wavelength_nm"] * 1e-9))


def _build_mode(entry: dict, host: BulkHost) -> CavityMode:
    omega = _entry_omega(entry)
    if "volume_m3" in entry:
        return CavityMode(omega_c=omega, quality=entry["quality"],
                          volume=entry["volume_m3"], eta=entry.get("eta", 1.0),
                          psi=entry.get("psi", 1.0))
    return mode_at_wavelength(
        angular_frequency_to_wavelength(omega), host, entry["quality"],
        eta=entry.get("eta", 1.0), psi=entry.get("psi", 1.0),
        volume_cubic_wavelengths=entry["volume_cubic_wavelengths"])


def _build_drive(entry: dict) -> DriveField:
    spot = entry.get("spot_area_um2")
    return DriveField(
        omega=_entry_omega(entry),
        power=entry["power_uw"] * 1e-6,
        spot_area=None if spot is None else spot * 1e-12,
        coupling=entry.get("coupling"),
    )


def build_experiment(config: dict) -> Experiment:
    """Typed Experiment from a fully validated, fully resolved config dict."""
    dot_cfg = config["dot"]
    host = BulkHost(dot_cfg["refractive_index"])
    dot = QuantumDotModel(
        omega_d=wavelength_to_angular_frequency(
            Wavelength(dot_cfg["wavelength_nm"] * 1e-9)),
        m_e_star=dot_cfg["electron_mass_ratio"] * M0,
        m_h_star=dot_cfg["hole_mass_ratio"] * M0,
        omega_e=energy_to_angular_frequency(
            dot_cfg["electron_confinement_mev"] * 1e-3),
        omega_h=energy_to_angular_frequency(dot_cfg["hole_confinement_mev"] * 1e-3),
        r_cv=dot_cfg["r_cv_nm"] * 1e-9,
        host=host,
    )
    modes = [_build_mode(entry, host) for entry in config["modes"]]
    drives = [_build_drive(entry) for entry in config["drives"]]
    lw_cfg = config.get("linewidth")
    linewidth = None if lw_cfg is None else Linewidth(lw_cfg["gamma_d_rad_per_s"])
    return Experiment(
        dot=dot,
        mode1=modes[0],
        mode2=modes[1],
        drive1=drives[0],
        drive2=drives[1],
        stim_drive2=drives[2],
        linewidth=linewidth,
        mode_d=modes[2] if len(modes) > 2 else None,
    )

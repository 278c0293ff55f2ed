"""Command-line front end.

    twophoton sweep --config cfg.yaml [--output out.csv] [--format csv|json]
    twophoton fig3a [--output out.csv]
    twophoton fig3b [--output out.csv]
    twophoton enhancement --q1 5000 --q2 5000 \
        --v1-cubic-wavelengths 1 --v2-cubic-wavelengths 1

`--preset` (default paper-fig3) is accepted everywhere: sweep uses it when
the config file names no preset itself; the fig3 commands run it directly;
enhancement takes wavelengths, couplings and spot areas from it. Exit codes:
0 success, 2 config/usage error, 1 runtime failure; errors name the field
or grid point responsible.
"""

from __future__ import annotations

import argparse
import math
import sys

from .presets import PRESET_NAMES, preset_config
from .quantities import C
from .rates import QuadratureError
from .scenario import (
    ConfigError,
    OutputError,
    SweepError,
    load_config,
    reproduce_fig3a,
    reproduce_fig3b,
    result_to_csv_text,
    result_to_json_text,
    run_sweep,
    write_output,
)

__all__ = ["main"]


def _emit(result, fmt: str, path: str | None) -> None:
    if path is not None:
        write_output(result, fmt, path)
        return
    if fmt == "csv":
        sys.stdout.write(result_to_csv_text(result))
    else:
        sys.stdout.write(result_to_json_text(result))


def _cmd_sweep(args) -> int:
    config = load_config(args.config, default_preset=args.preset)
    result = run_sweep(config)
    fmt = args.format or config.output_format
    path = args.output or config.output_path
    _emit(result, fmt, path)
    return 0


def _check_preset(name: str) -> None:
    if name not in PRESET_NAMES:
        known = ", ".join(PRESET_NAMES)
        raise ConfigError(f"preset must be one of: {known}; got {name!r}")


def _cmd_fig3a(args) -> int:
    _check_preset(args.preset)
    _emit(reproduce_fig3a(), "csv", args.output)
    return 0


def _cmd_fig3b(args) -> int:
    _check_preset(args.preset)
    _emit(reproduce_fig3b(), "csv", args.output)
    return 0


def _cmd_enhancement(args) -> int:
    _check_preset(args.preset)
    base = preset_config(args.preset)
    n = base["dot"]["refractive_index"]
    mode_entries = base["modes"]
    drive_entries = base["drives"]
    for value, name in ((args.q1, "--q1"), (args.q2, "--q2"),
                        (args.v1_cubic_wavelengths, "--v1-cubic-wavelengths"),
                        (args.v2_cubic_wavelengths, "--v2-cubic-wavelengths")):
        if not (value > 0.0 and math.isfinite(value)):
            raise ConfigError(f"{name} must be positive and finite, got {value!r}")

    values: dict[str, float] = {}
    qs = (args.q1, args.q2)
    vs = (args.v1_cubic_wavelengths, args.v2_cubic_wavelengths)
    for i in (0, 1):
        entry = mode_entries[i]
        if "wavelength_nm" in entry:
            lam = entry["wavelength_nm"] * 1e-9
        else:
            lam = 2.0 * math.pi * C / entry["omega_rad_per_s"]
        eta = entry.get("eta", 1.0)
        area = drive_entries[i]["spot_area_um2"] * 1e-12
        volume = vs[i] * (lam / n) ** 3
        # on resonance: phi = 1
        values[f"F{i + 1}"] = 3.0 / (4.0 * math.pi**2) * qs[i] / vs[i]
        values[f"G{i + 1}"] = eta * qs[i] * area * lam / (math.pi * volume * n)
    values["F1F2"] = values["F1"] * values["F2"]
    values["G1G2"] = values["G1"] * values["G2"]
    for name in ("F1", "F2", "F1F2", "G1", "G2", "G1G2"):
        print(f"{name} = {values[name]:.6e}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twophoton",
        description="Cavity-enhanced two-photon transition rates for a "
                    "quantum dot under a lateral electric field.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--preset", default="paper-fig3",
                       help="parameter preset (default: paper-fig3)")

    p_sweep = sub.add_parser("sweep", help="run the sweep described by a config file")
    p_sweep.add_argument("--config", required=True, help="YAML config path")
    p_sweep.add_argument("--output", help="output path (default: stdout or config)")
    p_sweep.add_argument("--format", choices=("csv", "json"),
                         help="output format (default: config or csv)")
    add_common(p_sweep)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_a = sub.add_parser("fig3a", help="rate curves vs lateral field, 0-2 V/um")
    p_a.add_argument("--output", help="CSV path (default: stdout)")
    add_common(p_a)
    p_a.set_defaults(handler=_cmd_fig3a)

    p_b = sub.add_parser("fig3b", help="emitted-power spectrum across mode 2")
    p_b.add_argument("--output", help="CSV path (default: stdout)")
    add_common(p_b)
    p_b.set_defaults(handler=_cmd_fig3b)

    p_e = sub.add_parser("enhancement",
                         help="print Purcell and absorption enhancement factors")
    p_e.add_argument("--q1", type=float, required=True, help="mode-1 quality factor")
    p_e.add_argument("--q2", type=float, required=True, help="mode-2 quality factor")
    p_e.add_argument("--v1-cubic-wavelengths", type=float, required=True,
                     help="mode-1 volume in (lambda/n)^3 units")
    p_e.add_argument("--v2-cubic-wavelengths", type=float, required=True,
                     help="mode-2 volume in (lambda/n)^3 units")
    add_common(p_e)
    p_e.set_defaults(handler=_cmd_enhancement)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SweepError, OutputError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

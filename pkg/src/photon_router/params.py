"""Physical parameters and unit conventions shared by every module.

All rates are expressed in units of the free-space decay rate Gamma0 and all
lengths in nanometres.  Group velocities are folded into the coupling rates,
so the amplitude-level coupling of an emitter to a directional channel is
recovered as sqrt(rate) wherever the solver needs it.  The absolute value of
Gamma0 (in MHz) is carried only as metadata for converting outputs to
physical frequency; it never enters the equations.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

DDI_MODES = ("auto", "manual", "off")

#: Gamma0 floor added to every emitter's spontaneous emission rate when a
#: config requests pole regularization for lossless scans.
POLE_REGULARIZATION = 1e-9

_RATE_FIELDS = ("gamma", "gamma_dr", "gamma_dl", "gamma_ur", "gamma_ul")

_SPEED_OF_LIGHT_NM_S = 2.99792458e17


class ConfigError(ValueError):
    """Carries the complete list of configuration violations."""

    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


Rate = float | tuple[float, ...]


@dataclass(frozen=True)
class DetuningGrid:
    """Inclusive detuning scan window, units of Gamma0."""

    min: float = -300.0
    max: float = 300.0
    points: int = 2001

    def to_array(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.points)


@dataclass(frozen=True)
class SystemConfig:
    """Full physical description of an N-emitter, two-waveguide router.

    Each rate field accepts either a single number (identical emitters) or a
    sequence of length ``n_emitters`` for per-emitter overrides.  Geometry
    defaults correspond to quantum dots on parallel silver nanowires.
    """

    n_emitters: int = 1
    gamma: Rate = 0.0          # spontaneous emission into non-guided modes
    gamma_dr: Rate = 0.0       # lower waveguide, rightward channel
    gamma_dl: Rate = 0.0       # lower waveguide, leftward channel
    gamma_ur: Rate = 0.0       # upper waveguide, rightward channel
    gamma_ul: Rate = 0.0       # upper waveguide, leftward channel
    spacing: float = 32.75     # inter-emitter separation, nm
    lambda_qd: float = 655.0   # emitter transition wavelength, nm
    lambda_sp: float = 211.8   # guided-mode wavelength, nm
    dipole_angle: float = math.pi / 2   # dipole vs chain axis, radians
    ddi_mode: str = "auto"
    ddi_strength: float | None = None   # nearest-neighbour value, manual mode
    gamma0_mhz: float = 7.5    # metadata only; see module docstring
    regularize: bool = False
    delta_dependent_phases: bool = False
    detuning: DetuningGrid | None = None

    def __post_init__(self):
        # Keep the config hashable: per-emitter rates become tuples.
        for name in _RATE_FIELDS:
            value = getattr(self, name)
            if isinstance(value, (list, np.ndarray)):
                object.__setattr__(self, name, tuple(float(v) for v in value))

    @property
    def theta(self) -> float:
        """Guided-mode propagation phase accumulated per lattice step, rad."""
        return 2.0 * math.pi * self.spacing / self.lambda_sp

    @property
    def r_step(self) -> float:
        """Dimensionless separation of adjacent emitters at the transition
        wavenumber (enters the dipole-dipole coupling), rad."""
        return 2.0 * math.pi * self.spacing / self.lambda_qd

    @property
    def chiral(self) -> bool:
        """True when both leftward channels are fully blocked."""
        return bool(
            np.all(self.rate_profile("gamma_dl") == 0.0)
            and np.all(self.rate_profile("gamma_ul") == 0.0)
        )

    def rate_profile(self, name: str) -> np.ndarray:
        """Per-emitter array for one of the rate fields."""
        value = getattr(self, name)
        if isinstance(value, tuple):
            return np.asarray(value, dtype=float)
        return np.full(self.n_emitters, float(value))

    def step_phase(self, delta: float) -> float:
        """Propagation phase per lattice step at detuning ``delta``.

        Phases are evaluated at the carrier by default; the detuning
        correction (a part-per-1e8 effect for MHz-scale Gamma0) is applied
        only when ``delta_dependent_phases`` is set.
        """
        if not self.delta_dependent_phases:
            return self.theta
        carrier_hz = _SPEED_OF_LIGHT_NM_S / self.lambda_qd
        return self.theta * (1.0 + delta * self.gamma0_mhz * 1e6 / carrier_hz)


def _check_rate(name: str, value: Rate, n: int, errors: list[str]) -> None:
    if isinstance(value, tuple):
        if len(value) != n:
            errors.append(f"{name} has {len(value)} entries for {n} emitters")
        bad = [v for v in value if not math.isfinite(v) or v < 0.0]
        if bad:
            errors.append(f"{name} must be non-negative, got {bad[0]}")
    elif not math.isfinite(value) or value < 0.0:
        errors.append(f"{name} must be non-negative, got {value}")


def validate(config: SystemConfig) -> SystemConfig:
    """Check every invariant and return the config unchanged.

    Raises ConfigError listing all violations at once, so a bad config file
    can be fixed in a single pass.
    """
    errors: list[str] = []
    if config.n_emitters < 1:
        errors.append(f"n_emitters must be >= 1, got {config.n_emitters}")
    for name in _RATE_FIELDS:
        _check_rate(name, getattr(config, name), config.n_emitters, errors)
    if not (math.isfinite(config.spacing) and config.spacing > 0.0):
        errors.append(f"spacing must be positive, got {config.spacing}")
    for name in ("lambda_qd", "lambda_sp"):
        value = getattr(config, name)
        if not (math.isfinite(value) and value > 0.0):
            errors.append(f"{name} must be positive, got {value}")
    if not math.isfinite(config.dipole_angle):
        errors.append(f"dipole_angle must be finite, got {config.dipole_angle}")
    if config.ddi_mode not in DDI_MODES:
        errors.append(
            f"unknown ddi_mode {config.ddi_mode!r}, expected one of {DDI_MODES}"
        )
    if config.ddi_mode == "manual":
        if config.ddi_strength is None:
            errors.append("ddi_mode 'manual' requires ddi_strength")
        elif not math.isfinite(config.ddi_strength):
            errors.append(f"ddi_strength must be finite, got {config.ddi_strength}")
    if config.gamma0_mhz <= 0.0:
        errors.append(f"gamma0_mhz must be positive, got {config.gamma0_mhz}")
    if config.detuning is not None:
        grid = config.detuning
        if grid.points < 1:
            errors.append(f"detuning points must be >= 1, got {grid.points}")
        if not (math.isfinite(grid.min) and math.isfinite(grid.max)):
            errors.append("detuning window must be finite")
        elif grid.min > grid.max:
            errors.append(f"detuning min {grid.min} exceeds max {grid.max}")
    if errors:
        raise ConfigError(errors)
    return config


def derive_phases(config: SystemConfig) -> dict[str, float]:
    """Lattice-step phases of a validated config.

    theta:  2*pi*spacing/lambda_sp, the guided-mode phase per step.
    r_step: 2*pi*spacing/lambda_qd, the transition-wavenumber phase per step.
    """
    return {"theta": config.theta, "r_step": config.r_step}


def to_megahertz(rate_in_gamma0: float, config: SystemConfig) -> float:
    """Convert a rate or detuning from Gamma0 units to MHz."""
    return rate_in_gamma0 * config.gamma0_mhz


def load_config(path: str | Path) -> SystemConfig:
    """Parse and validate a JSON config file.

    The object must use the SystemConfig field names; unknown keys are
    rejected.  The optional "detuning" entry is an object with keys
    min/max/points (Gamma0 units).
    """
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ConfigError(["config root must be a JSON object"])
    known = {f.name for f in dataclasses.fields(SystemConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError([f"unknown config key {k!r}" for k in unknown])
    if data.get("detuning") is not None:
        grid = data["detuning"]
        if not isinstance(grid, dict):
            raise ConfigError(["detuning must be an object with min/max/points"])
        extra = sorted(set(grid) - {"min", "max", "points"})
        if extra:
            raise ConfigError([f"unknown detuning key {k!r}" for k in extra])
        data["detuning"] = DetuningGrid(**grid)
    return validate(SystemConfig(**data))

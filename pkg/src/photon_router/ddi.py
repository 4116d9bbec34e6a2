"""Pairwise coherent dipole-dipole coupling and the all-to-all rate matrix.

The coupling is purely real (coherent exchange); dissipative cross terms are
outside the model.  Separations are dimensionless: R = transition wavenumber
times physical distance, so the free-space coupling law needs no unit
handling beyond the Gamma0 rate scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import SystemConfig


@dataclass(frozen=True)
class DdiMatrix:
    """Symmetric N x N matrix of pairwise coupling rates, units of Gamma0."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"coupling matrix must be square, got {values.shape}")
        if not np.array_equal(values, values.T):
            raise ValueError("coupling matrix must be symmetric")
        if np.any(np.diag(values) != 0.0):
            raise ValueError("coupling matrix must have a zero diagonal")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]


def ddi_coupling(separation: float, dipole_angle: float) -> float:
    """Coherent dipole-dipole rate at dimensionless separation R, in Gamma0.

    Sum of a transverse part (3/4)(cosR/R^3 + sinR/R^2 - cosR/R), which is
    the complete result for dipoles perpendicular to the chain, and a
    cos^2(angle)-weighted correction for tilted dipoles.  Diverges as 1/R^3
    at contact and decays as cos(R)/R in the far field.
    """
    if not separation > 0.0:
        raise ValueError(f"separation must be positive, got {separation}")
    r = separation
    c, s = math.cos(r), math.sin(r)
    transverse = c / r**3 + s / r**2 - c / r
    tilt = c / r - 3.0 * c / r**3 - 3.0 * s / r**2
    return 0.75 * (transverse + math.cos(dipole_angle) ** 2 * tilt)


def ddi_matrix(config: SystemConfig) -> DdiMatrix:
    """All-to-all coupling matrix for a validated config.

    auto:   every pair gets the free-space law at its separation.
    manual: nearest neighbours pinned to ``ddi_strength``; longer-range pairs
            follow the same distance law, rescaled accordingly.
    off:    all zeros.
    """
    n = config.n_emitters
    values = np.zeros((n, n))
    if config.ddi_mode != "off" and n > 1:
        step = config.r_step
        angle = config.dipole_angle
        by_offset = [ddi_coupling(k * step, angle) for k in range(1, n)]
        if config.ddi_mode == "manual":
            scale = config.ddi_strength / by_offset[0]
            by_offset = [scale * j for j in by_offset]
        for k, coupling in enumerate(by_offset, start=1):
            idx = np.arange(n - k)
            values[idx, idx + k] = coupling
            values[idx + k, idx] = coupling
    return DdiMatrix(values)

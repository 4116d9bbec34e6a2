"""Shared fixtures: the quantum-dot/nanowire reference platform and the
(expensive) chain-length scaling report reused across test modules."""

from __future__ import annotations

import dataclasses

import numpy as np
import pytest

from photon_router import SystemConfig, scale_emitters, validate

# Reference platform: coupling 11.03 Gamma0 per rightward channel,
# spontaneous emission 6.86 Gamma0, 32.75 nm lattice on 655 nm / 211.8 nm
# wavelengths.
COUPLING = 11.03
EMISSION = 6.86


def chiral_config(n: int, gamma: float = EMISSION, **overrides) -> SystemConfig:
    base = dict(
        n_emitters=n,
        gamma=gamma,
        gamma_dr=COUPLING,
        gamma_ur=COUPLING,
        spacing=32.75,
        lambda_qd=655.0,
        lambda_sp=211.8,
        ddi_mode="auto",
    )
    base.update(overrides)
    return validate(SystemConfig(**base))


def symmetric_config(n: int, gamma: float = 0.0, **overrides) -> SystemConfig:
    return chiral_config(
        n, gamma=gamma, gamma_dl=COUPLING, gamma_ul=COUPLING, **overrides
    )


@pytest.fixture(scope="session")
def reference_scaling():
    """Chain-length scaling of the reference platform on the standard
    reproduction grid; shared because the N=30 column dominates runtime."""
    config = chiral_config(2)
    grid = np.linspace(-300.0, 300.0, 2001)
    return scale_emitters(config, [1, 2, 5, 10, 20, 30], grid)


@pytest.fixture()
def two_emitter_lossless():
    return chiral_config(2, gamma=0.0)


def replace(config: SystemConfig, **changes) -> SystemConfig:
    return validate(dataclasses.replace(config, **changes))

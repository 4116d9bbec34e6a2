"""Steady-state single-photon transport through the emitter chain.

The piecewise-plane-wave ansatz closes into a dense complex linear system of
size 5N.  Unknowns are ordered [A_1..A_N, t_1..t_N, r_1..r_N, tt_1..tt_N,
rt_1..rt_N]: emitter excitation amplitudes, then the four field amplitudes
per segment of the lower (t, r) and upper (tt, rt) waveguides.  The photon
enters the lower waveguide moving right (t_0 = 1); all other inputs vanish,
so r_{N+1} = tt_0 = rt_{N+1} = 0.

Per emitter j (phase phi_j = (j-1)*Theta, amplitude coupling v = sqrt(rate)):

    t_j  - t_{j-1}  + i v_dr e^{-i phi_j} A_j = 0
    r_{j+1} - r_j   - i v_dl e^{+i phi_j} A_j = 0
    tt_j - tt_{j-1} + i v_ur e^{-i phi_j} A_j = 0
    rt_{j+1} - rt_j - i v_ul e^{+i phi_j} A_j = 0
    (v_dr/2) e^{+i phi_j}(t_j + t_{j-1}) + (v_dl/2) e^{-i phi_j}(r_{j+1} + r_j)
      + (v_ur/2) e^{+i phi_j}(tt_j + tt_{j-1}) + (v_ul/2) e^{-i phi_j}(rt_{j+1} + rt_j)
      - (delta + i gamma_j/2) A_j + sum_{i != j} J_ij A_i = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .ddi import DdiMatrix
from .params import POLE_REGULARIZATION, SystemConfig

#: Accepted solves must have a backward error below this bound.
RESIDUAL_LIMIT = 1e-10

INTENSITY_KEYS = ("T", "R", "Tt", "Rt", "loss")


class SolverError(RuntimeError):
    """Raised when the transport system is singular or near-singular."""

    def __init__(self, message: str, delta: float, condition: float | None = None):
        self.delta = delta
        self.condition = condition
        detail = f"{message} at delta={delta:+.6g}"
        if condition is not None:
            detail += f" (condition estimate {condition:.3e})"
        super().__init__(detail)


@dataclass(frozen=True)
class TransportSolution:
    """All 5N amplitudes at one detuning, plus derived port intensities.

    Intensities: T = |t_N|^2, R = |r_1|^2, Tt = |tt_N|^2, Rt = |rt_1|^2 and
    loss = 1 - T - R - Tt - Rt (probability leaked to non-guided modes).
    """

    delta: float
    a: np.ndarray
    t: np.ndarray
    r: np.ndarray
    tt: np.ndarray
    rt: np.ndarray
    intensities: dict[str, float]
    residual: float


def assemble_system(
    config: SystemConfig, ddi: DdiMatrix, delta: float
) -> tuple[np.ndarray, np.ndarray]:
    """Build the 5N x 5N matrix and right-hand side at one detuning."""
    n = config.n_emitters
    if ddi.n != n:
        raise ValueError(f"coupling matrix is {ddi.n}x{ddi.n} for {n} emitters")

    gamma = config.rate_profile("gamma")
    if config.regularize:
        gamma = gamma + POLE_REGULARIZATION
    v_dr = np.sqrt(config.rate_profile("gamma_dr"))
    v_dl = np.sqrt(config.rate_profile("gamma_dl"))
    v_ur = np.sqrt(config.rate_profile("gamma_ur"))
    v_ul = np.sqrt(config.rate_profile("gamma_ul"))

    phi = np.arange(n) * config.step_phase(delta)
    forward = np.exp(1j * phi)
    backward = np.exp(-1j * phi)

    a0, t0, r0, tt0, rt0 = 0, n, 2 * n, 3 * n, 4 * n
    j = np.arange(n)
    matrix = np.zeros((5 * n, 5 * n), dtype=complex)
    rhs = np.zeros(5 * n, dtype=complex)

    # Lower waveguide, rightward: t_j - t_{j-1} + i v_dr e^{-i phi} A_j = 0.
    rows = j
    matrix[rows, t0 + j] = 1.0
    matrix[rows[1:], t0 + j[:-1]] = -1.0
    matrix[rows, a0 + j] = 1j * v_dr * backward
    rhs[0] = 1.0  # t_0 = 1 (input photon)

    # Lower waveguide, leftward: r_{j+1} - r_j - i v_dl e^{+i phi} A_j = 0.
    rows = n + j
    matrix[rows[:-1], r0 + j[1:]] = 1.0
    matrix[rows, r0 + j] = -1.0
    matrix[rows, a0 + j] = -1j * v_dl * forward

    # Upper waveguide, rightward: tt_j - tt_{j-1} + i v_ur e^{-i phi} A_j = 0.
    rows = 2 * n + j
    matrix[rows, tt0 + j] = 1.0
    matrix[rows[1:], tt0 + j[:-1]] = -1.0
    matrix[rows, a0 + j] = 1j * v_ur * backward

    # Upper waveguide, leftward: rt_{j+1} - rt_j - i v_ul e^{+i phi} A_j = 0.
    rows = 3 * n + j
    matrix[rows[:-1], rt0 + j[1:]] = 1.0
    matrix[rows, rt0 + j] = -1.0
    matrix[rows, a0 + j] = -1j * v_ul * forward

    # Emitter rows: field drive balances the detuned, damped excitation.
    rows = 4 * n + j
    matrix[rows, t0 + j] += 0.5 * v_dr * forward
    matrix[rows[1:], t0 + j[:-1]] += 0.5 * v_dr[1:] * forward[1:]
    rhs[4 * n] = -0.5 * v_dr[0] * forward[0]  # t_0 = 1 moved to the rhs
    matrix[rows[:-1], r0 + j[1:]] += 0.5 * v_dl[:-1] * backward[:-1]
    matrix[rows, r0 + j] += 0.5 * v_dl * backward
    matrix[rows, tt0 + j] += 0.5 * v_ur * forward
    matrix[rows[1:], tt0 + j[:-1]] += 0.5 * v_ur[1:] * forward[1:]
    matrix[rows[:-1], rt0 + j[1:]] += 0.5 * v_ul[:-1] * backward[:-1]
    matrix[rows, rt0 + j] += 0.5 * v_ul * backward
    matrix[rows, a0 + j] = -(delta + 0.5j * gamma)
    matrix[4 * n :, a0 : a0 + n] += ddi.values

    return matrix, rhs


def solve_transport(
    config: SystemConfig, ddi: DdiMatrix, delta: float
) -> TransportSolution:
    """Direct dense solve with partial pivoting at one detuning.

    Raises SolverError at (or numerically indistinguishable from) the
    isolated real poles a lossless chain can develop; scans are expected to
    step around them or request regularization.
    """
    matrix, rhs = assemble_system(config, ddi, delta)
    try:
        x = np.linalg.solve(matrix, rhs)
    except np.linalg.LinAlgError as exc:
        raise SolverError(
            "singular transport system", delta, condition=float(np.inf)
        ) from exc

    defect = np.abs(matrix @ x - rhs).max()
    scale = (
        np.abs(matrix).sum(axis=1).max() * np.abs(x).max() + np.abs(rhs).max()
    )
    residual = float(defect / scale)
    if not np.isfinite(x).all() or residual > RESIDUAL_LIMIT:
        raise SolverError(
            "near-singular transport system",
            delta,
            condition=float(np.linalg.cond(matrix)),
        )

    n = config.n_emitters
    a, t, r, tt, rt = (x[k * n : (k + 1) * n] for k in range(5))
    transmitted = abs(t[-1]) ** 2
    reflected = abs(r[0]) ** 2
    routed_right = abs(tt[-1]) ** 2
    routed_left = abs(rt[0]) ** 2
    intensities = {
        "T": transmitted,
        "R": reflected,
        "Tt": routed_right,
        "Rt": routed_left,
        "loss": 1.0 - transmitted - reflected - routed_right - routed_left,
    }
    return TransportSolution(
        delta=float(delta),
        a=a,
        t=t,
        r=r,
        tt=tt,
        rt=rt,
        intensities=intensities,
        residual=residual,
    )


def solve_spectrum_point_batch(
    config: SystemConfig,
    ddi: DdiMatrix,
    deltas: Sequence[float] | np.ndarray,
    on_error: Literal["raise", "collect"] = "raise",
) -> list[TransportSolution | SolverError]:
    """Element-wise solve over a list of detunings.

    With on_error="collect" a failed point contributes its SolverError in
    place of a solution, leaving the other points intact.
    """
    out: list[TransportSolution | SolverError] = []
    for delta in deltas:
        try:
            out.append(solve_transport(config, ddi, float(delta)))
        except SolverError as err:
            if on_error == "raise":
                raise
            out.append(err)
    return out

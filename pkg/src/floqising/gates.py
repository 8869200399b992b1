"""The three Floquet layers, full-cycle evolution, and the dense-matrix oracle.

Angle convention: every rotation is the literal exponential exp(-i alpha sigma),
with no half-angle factor. Concretely,

    x rotation:   exp(-i alpha sigma_x) = [[cos a, -i sin a], [-i sin a, cos a]]
    z rotation:   exp(-i alpha sigma_z) = diag(e^{-i a}, e^{+i a})
    bond phase:   exp(-i theta sigma_z sigma_z) = e^{-i theta} on aligned bits,
                  e^{+i theta} on anti-aligned bits

One drive cycle is U = exp(-i h Z) exp(-i mu X) exp(i J H_zz) with
Z = sum_j sigma_j^z, X = sum_j sigma_j^x, H_zz = -sum_j sigma_j^z sigma_{j+1}^z,
the rightmost factor acting first. The chain is open: bonds 0..n-2 only.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .paulis import I2, SX, kron_chain, z_values
from .state import StateVector

DEFAULT_ORACLE_LIMIT = 10


class LayerOrder(enum.Enum):
    """Within-cycle layer order. EQ1 applies ZZ, then X, then Z; FIG1B applies
    X, then Z, then ZZ. Stroboscopic diagonal observables from basis initial
    states agree between the two; per-cycle snapshots differ."""

    EQ1 = "EQ1"
    FIG1B = "FIG1B"


@dataclass
class FloquetParams:
    """Drive parameters for one cycle (angles in radians)."""

    J: float
    mu: float
    h: float
    n: int
    layer_order: LayerOrder = LayerOrder.EQ1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"the ZZ layer needs at least one bond; got n={self.n}")
        for name in ("J", "mu", "h"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"angle {name}={v!r} is not a finite real")
        if not isinstance(self.layer_order, LayerOrder):
            self.layer_order = LayerOrder(self.layer_order)


@dataclass
class GateSequence:
    """Ordered one- and two-qubit gates plus an explicit global phase.

    Each step is (kind, targets, angle) with kind "RZ" (standard half-angle
    z rotation diag(e^{-i angle/2}, e^{+i angle/2})) or "CPHASE"
    (diag(1, 1, 1, e^{i angle})). Steps are listed in application order.
    """

    steps: list = field(default_factory=list)
    global_phase: complex = 1.0 + 0.0j

    def to_matrix(self) -> np.ndarray:
        """Compose the sequence on two qubits (all steps are diagonal here)."""
        mat = np.eye(4, dtype=np.complex128) * self.global_phase
        for kind, targets, angle in self.steps:
            if kind == "RZ":
                (q,) = targets
                g = np.diag([cmath.exp(-1j * angle / 2), cmath.exp(1j * angle / 2)])
                full = kron_chain([g if k == q else I2 for k in range(2)])
            elif kind == "CPHASE":
                full = np.diag([1.0, 1.0, 1.0, cmath.exp(1j * angle)]).astype(np.complex128)
            else:
                raise ValueError(f"unknown gate kind {kind!r}")
            mat = full @ mat
        return mat


def apply_pauli_rotation(state: StateVector, qubit: int, axis: str, alpha: float) -> StateVector:
    """In-place exp(-i alpha sigma^axis) on one qubit; returns the same state."""
    if not 0 <= qubit < state.n:
        raise IndexError(f"qubit {qubit} out of range for n={state.n}")
    if axis == "x":
        kernels.x_rotation(state.amplitudes, state.n, qubit, math.cos(alpha), math.sin(alpha))
    elif axis == "z":
        kernels.z_rotation(
            state.amplitudes, state.n, qubit, cmath.exp(-1j * alpha), cmath.exp(1j * alpha)
        )
    else:
        raise ValueError(f"axis must be 'x' or 'z', got {axis!r}")
    return state


def apply_zz_phase(state: StateVector, bond: int, theta: float) -> StateVector:
    """In-place exp(-i theta sigma_j^z sigma_{j+1}^z) on bond j; returns the state."""
    if not 0 <= bond < state.n - 1:
        raise IndexError(f"bond {bond} out of range for n={state.n} (open chain)")
    kernels.zz_phase(
        state.amplitudes, state.n, bond, cmath.exp(-1j * theta), cmath.exp(1j * theta)
    )
    return state


def _zz_layer(state: StateVector, p: FloquetParams) -> None:
    for j in range(p.n - 1):
        apply_zz_phase(state, j, p.J)


def _x_layer(state: StateVector, p: FloquetParams) -> None:
    c, s = math.cos(p.mu), math.sin(p.mu)
    for j in range(p.n):
        kernels.x_rotation(state.amplitudes, p.n, j, c, s)


def _z_layer(state: StateVector, p: FloquetParams) -> None:
    ph0, ph1 = cmath.exp(-1j * p.h), cmath.exp(1j * p.h)
    for j in range(p.n):
        kernels.z_rotation(state.amplitudes, p.n, j, ph0, ph1)


def floquet_cycle(state: StateVector, p: FloquetParams) -> StateVector:
    """Apply one full drive cycle in place; returns the same state."""
    if state.n != p.n:
        raise ValueError(f"state has n={state.n} but params have n={p.n}")
    if p.layer_order is LayerOrder.EQ1:
        _zz_layer(state, p)
        _x_layer(state, p)
        _z_layer(state, p)
    else:
        _x_layer(state, p)
        _z_layer(state, p)
        _zz_layer(state, p)
    return state


def evolve(state: StateVector, p: FloquetParams, cycles: int, recorder):
    """Run `cycles` full cycles, invoking recorder(state, t) at t=0..cycles.

    The state is evolved in place; the returned list holds the recorder's
    T+1 outputs in time order. Recorder exceptions propagate.
    """
    if cycles < 0:
        raise ValueError(f"cycles must be >= 0, got {cycles}")
    records = [recorder(state, 0)]
    for t in range(1, cycles + 1):
        floquet_cycle(state, p)
        records.append(recorder(state, t))
    return records


def zz_decomposition(J: float) -> GateSequence:
    """Native-gate form of the bond factor exp(-i J sigma_z sigma_z).

    Two z rotations and one controlled phase compose to the target exactly:
    RZ(2J) on each qubit contributes diag(e^{-2iJ}, 1, 1, e^{2iJ}), the
    controlled phase of angle -4J fixes the |11> entry, and the residual
    uniform phase e^{iJ} is returned explicitly.
    """
    return GateSequence(
        steps=[("RZ", (0,), 2.0 * J), ("RZ", (1,), 2.0 * J), ("CPHASE", (0, 1), -4.0 * J)],
        global_phase=cmath.exp(1j * J),
    )


def dense_unitary(p: FloquetParams, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> np.ndarray:
    """Full-cycle matrix from Kronecker products and closed-form exponentials.

    Independent of the statevector kernels; used as the equivalence oracle.
    """
    if p.n > oracle_limit:
        raise ValueError(f"n={p.n} above the dense-oracle limit {oracle_limit}")
    z = z_values(p.n)
    bond_sum = sum(z[j] * z[j + 1] for j in range(p.n - 1))
    zz = np.diag(np.exp(-1j * p.J * bond_sum))
    x1 = math.cos(p.mu) * I2 - 1j * math.sin(p.mu) * SX
    xl = kron_chain([x1] * p.n)
    zl = np.diag(np.exp(-1j * p.h * z.sum(axis=0)))
    if p.layer_order is LayerOrder.EQ1:
        return zl @ xl @ zz
    return zz @ zl @ xl

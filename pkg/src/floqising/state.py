"""State representation and basis-ordering conventions.

A ket string "b0 b1 ... b(n-1)" is read left to right as qubits Q0..Q(n-1),
matching the notation used for the initial states (e.g. "00010000" puts the
flipped spin on Q3). Internally Q0 occupies the most significant bit of the
basis index, so the index of a ket string is simply int(bits, 2). Everything
else in the package goes through bitstring_index / index_bitstring / bits_matrix,
so no other module depends on this choice.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class StateVector:
    """Dense register of 2**n complex amplitudes (double precision)."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError(
                f"amplitude array has shape {self.amplitudes.shape}, "
                f"expected ({1 << self.n},) for n={self.n}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.n

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _validate_bits(bits: str) -> None:
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"ket string must be a nonempty run of 0/1 symbols, got {bits!r}")


def basis_state(bits: str) -> StateVector:
    """Product state |b0 b1 ... b(n-1)> with unit amplitude on its basis index."""
    _validate_bits(bits)
    n = len(bits)
    amp = np.zeros(1 << n, dtype=np.complex128)
    amp[bitstring_index(bits)] = 1.0
    return StateVector(n, amp)


def bitstring_index(bits: str) -> int:
    """Basis index of a ket string; leftmost symbol (Q0) is the most significant bit."""
    _validate_bits(bits)
    return int(bits, 2)


def index_bitstring(index: int, n: int) -> str:
    """Inverse of bitstring_index for an n-qubit register."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"basis index {index} out of range for n={n}")
    return format(index, f"0{n}b")


def bits_matrix(n: int) -> np.ndarray:
    """(n, 2**n) array whose [j, i] entry is the bit of qubit j in basis index i."""
    idx = np.arange(1 << n)
    return np.array([(idx >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.int64)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n} qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def probabilities(state: StateVector) -> np.ndarray:
    """Entrywise |amplitude|**2 over the computational basis."""
    return np.abs(state.amplitudes) ** 2

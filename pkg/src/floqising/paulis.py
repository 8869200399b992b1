"""Dense Pauli and tensor-product helpers for the oracle-grade matrix paths.

These construct explicit 2**n x 2**n matrices and are deliberately independent
of the statevector kernels, so the two paths can cross-validate each other.
"""
from functools import reduce

import numpy as np

from .state import bits_matrix

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
I2 = np.eye(2, dtype=np.complex128)


def kron_chain(ops):
    """Kronecker product of a sequence of matrices, first factor leftmost."""
    return reduce(np.kron, ops)


def site_op(n, j, op):
    """`op` acting on tensor slot j of an n-slot register, identity elsewhere."""
    if not 0 <= j < n:
        raise IndexError(f"slot {j} out of range for n={n}")
    return kron_chain([op if k == j else I2 for k in range(n)])


def z_values(n):
    """(n, 2**n) array of sigma-z eigenvalues (+1 for bit 0, -1 for bit 1)."""
    return 1 - 2 * bits_matrix(n)


def exp_i_involution(theta, P):
    """exp(-i theta P) for an involution (P @ P = I): cos(theta) I - i sin(theta) P."""
    return np.cos(theta) * np.eye(P.shape[0], dtype=np.complex128) - 1j * np.sin(theta) * P

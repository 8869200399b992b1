"""Independent dense-matrix reference implementation used by the tests.

Deliberately imports nothing from the package so the two code paths share no
conventions by accident: bit order, layer order, and signs are all spelled
out again here from scratch.
"""
from functools import reduce

import numpy as np

SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def kron_chain(ops):
    return reduce(np.kron, ops)


def site_op(n, j, op):
    return kron_chain([op if k == j else I2 for k in range(n)])


def bits_mat(n):
    idx = np.arange(1 << n)
    return np.array([(idx >> (n - 1 - j)) & 1 for j in range(n)])


def z_vals(n):
    return 1 - 2 * bits_mat(n)


def cycle_matrix(J, mu, h, n, order="EQ1"):
    """One drive cycle: bond phases, transverse rotations, longitudinal phases."""
    z = z_vals(n)
    bond_sum = sum(z[j] * z[j + 1] for j in range(n - 1))
    zz = np.diag(np.exp(-1j * J * bond_sum))
    x1 = np.cos(mu) * I2 - 1j * np.sin(mu) * SX
    xl = kron_chain([x1] * n)
    zl = np.diag(np.exp(-1j * h * z.sum(axis=0)))
    if order == "EQ1":
        return zl @ xl @ zz
    return zz @ zl @ xl


def hamiltonian_matrix(J, mu, h, n):
    """Continuous-time generator whose Trotter factors are the cycle layers."""
    z = z_vals(n)
    H = np.diag((J * sum(z[j] * z[j + 1] for j in range(n - 1)) + h * z.sum(axis=0)).astype(complex))
    for j in range(n):
        H += mu * site_op(n, j, SX)
    return H


def ham_propagator(H, t):
    w, v = np.linalg.eigh(H)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def basis(bits):
    v = np.zeros(1 << len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def kink_profile(probs, n):
    b = bits_mat(n)
    return np.array([probs @ (b[j] != b[j + 1]) for j in range(n - 1)])


def meson_diag(n, ell):
    """Number of length-ell maximal 1-runs in each basis index (virtual vacuum)."""
    b = bits_mat(n)
    total = np.zeros(1 << n, dtype=np.int64)
    for j in range(n - ell + 1):
        ok = np.ones(1 << n, dtype=bool)
        for k in range(j, j + ell):
            ok &= b[k] == 1
        if j > 0:
            ok &= b[j - 1] == 0
        if j + ell < n:
            ok &= b[j + ell] == 0
        total += ok
    return total


def floquet_probs(bits, J, mu, h, T, order="EQ1"):
    """Probability vectors at t = 0..T under repeated cycles."""
    n = len(bits)
    U = cycle_matrix(J, mu, h, n, order)
    psi = basis(bits)
    out = []
    for _ in range(T + 1):
        out.append(np.abs(psi) ** 2)
        psi = U @ psi
    return out


def ham_probs(bits, J, mu, h, T):
    """Probability vectors at integer t = 0..T under the continuous generator."""
    n = len(bits)
    H = hamiltonian_matrix(J, mu, h, n)
    w, v = np.linalg.eigh(H)
    coeffs = v.conj().T @ basis(bits)
    return [np.abs(v @ (np.exp(-1j * w * t) * coeffs)) ** 2 for t in range(T + 1)]


def spread(profile, origin):
    d = np.arange(len(profile)) - origin
    return float(np.sqrt((profile @ d**2) / profile.sum()))

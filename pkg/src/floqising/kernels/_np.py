"""Pure-numpy statevector kernels, the fallback backend.

All kernels mutate the amplitude array in place. Qubit j of the chain sits at
bit position n-1-j of the basis index, so its stride in the flat array is
2**(n-1-j); the reshape views below exploit that layout.
"""


def x_rotation(amps, n, qubit, c, s):
    """Apply [[c, -i s], [-i s, c]] on one qubit (c=cos(alpha), s=sin(alpha))."""
    stride = 1 << (n - 1 - qubit)
    view = amps.reshape(-1, 2, stride)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = c * a0 - 1j * s * a1
    view[:, 1, :] = c * a1 - 1j * s * a0


def z_rotation(amps, n, qubit, phase0, phase1):
    """Multiply amplitudes by phase0 where the qubit reads 0, phase1 where it reads 1."""
    stride = 1 << (n - 1 - qubit)
    view = amps.reshape(-1, 2, stride)
    view[:, 0, :] *= phase0
    view[:, 1, :] *= phase1


def zz_phase(amps, n, bond, phase_same, phase_diff):
    """Diagonal two-qubit phase on the bond between qubits `bond` and `bond`+1.

    The two bits occupy adjacent positions, so a (-1, 4, stride) view enumerates
    them as a 2-bit number: blocks 0 and 3 are aligned, 1 and 2 anti-aligned.
    """
    stride = 1 << (n - 2 - bond)
    view = amps.reshape(-1, 4, stride)
    view[:, 0, :] *= phase_same
    view[:, 3, :] *= phase_same
    view[:, 1, :] *= phase_diff
    view[:, 2, :] *= phase_diff

# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled statevector kernels. Mirrors floqising.kernels._np exactly.

The amplitude array is mutated in place. Index arithmetic: for a gate on bit
position p, running g over half the indices and splicing a zero bit back in at
position p enumerates every amplitude pair (i0, i0 + 2**p) exactly once.
"""


def x_rotation(double complex[::1] amps, int n, int qubit, double c, double s):
    cdef Py_ssize_t p = n - 1 - qubit
    cdef Py_ssize_t stride = 1 << p
    cdef Py_ssize_t half = amps.shape[0] >> 1
    cdef Py_ssize_t g, i0, i1
    cdef double complex ms = -1j * s
    cdef double complex a0, a1
    with nogil:
        for g in range(half):
            i0 = ((g >> p) << (p + 1)) | (g & (stride - 1))
            i1 = i0 | stride
            a0 = amps[i0]
            a1 = amps[i1]
            amps[i0] = c * a0 + ms * a1
            amps[i1] = ms * a0 + c * a1


def z_rotation(double complex[::1] amps, int n, int qubit,
               double complex phase0, double complex phase1):
    cdef Py_ssize_t p = n - 1 - qubit
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t i
    with nogil:
        for i in range(dim):
            if (i >> p) & 1:
                amps[i] = amps[i] * phase1
            else:
                amps[i] = amps[i] * phase0


def zz_phase(double complex[::1] amps, int n, int bond,
             double complex phase_same, double complex phase_diff):
    cdef Py_ssize_t p_hi = n - 1 - bond
    cdef Py_ssize_t p_lo = p_hi - 1
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t i
    with nogil:
        for i in range(dim):
            if ((i >> p_hi) ^ (i >> p_lo)) & 1:
                amps[i] = amps[i] * phase_diff
            else:
                amps[i] = amps[i] * phase_same

"""Every measured quantity: kink densities, totals, spin flips, meson
populations, seeded joint-readout sampling, and the run-length meson oracle.

All observables here are diagonal in the computational basis, so each is a
weighted sum of basis-state probabilities. An l-meson is exactly l consecutive
1s flanked by 0s, with virtual vacuum (fixed 0) beyond both chain ends, so
runs touching an edge count. That convention makes sum_l l*N_l equal S_tot
as an operator identity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import StateVector, bits_matrix, index_bitstring, probabilities

_bits_cache = {}


def _bits(n: int) -> np.ndarray:
    if n not in _bits_cache:
        _bits_cache[n] = bits_matrix(n)
    return _bits_cache[n]


_meson_cache = {}


def _meson_counts_diag(n: int, ell: int) -> np.ndarray:
    """Diagonal of N_ell: for each basis index, how many l-mesons it contains.

    Built the projector way: one window mask per start site, bit conditions
    multiplied out, flanking sites required to read 0 (virtually beyond edges).
    """
    key = (n, ell)
    if key not in _meson_cache:
        b = _bits(n)
        total = np.zeros(1 << n, dtype=np.int64)
        for j in range(n - ell + 1):
            mask = np.ones(1 << n, dtype=bool)
            for k in range(j, j + ell):
                mask &= b[k] == 1
            if j > 0:
                mask &= b[j - 1] == 0
            if j + ell < n:
                mask &= b[j + ell] == 0
            total += mask
        _meson_cache[key] = total
    return _meson_cache[key]


@dataclass
class MesonHistogram:
    """Map from string length l to population <N_l>, for l = 1..n."""

    n: int
    values: dict

    def total_string_length(self) -> float:
        return float(sum(ell * v for ell, v in self.values.items()))


def kink_profile(state: StateVector) -> np.ndarray:
    """Vector of kink densities (1 - <sigma_j^z sigma_{j+1}^z>)/2 on bonds 0..n-2."""
    p = probabilities(state)
    b = _bits(state.n)
    return np.array([p @ (b[j] != b[j + 1]) for j in range(state.n - 1)])


def kink_density(state: StateVector, bond: int) -> float:
    if not 0 <= bond < state.n - 1:
        raise IndexError(f"bond {bond} out of range for n={state.n}")
    p = probabilities(state)
    b = _bits(state.n)
    return float(p @ (b[bond] != b[bond + 1]))


def total_kinks(state: StateVector) -> float:
    """<D_tot>: kink density summed over all bonds."""
    return float(kink_profile(state).sum())


def total_spin_flips(state: StateVector) -> float:
    """<S_tot>: expected number of 1-bits."""
    p = probabilities(state)
    return float(p @ _bits(state.n).sum(axis=0))


def spin_flip_profile(state: StateVector) -> np.ndarray:
    p = probabilities(state)
    return np.array([p @ _bits(state.n)[j] for j in range(state.n)])


def spin_flip_density(state: StateVector, site: int) -> float:
    """Probability that the given qubit reads 1."""
    if not 0 <= site < state.n:
        raise IndexError(f"site {site} out of range for n={state.n}")
    p = probabilities(state)
    return float(p @ _bits(state.n)[site])


def meson_number(state: StateVector, ell: int) -> float:
    """<N_ell> = <sum_j M_{j,ell}> via the projector-mask diagonal."""
    if not 1 <= ell <= state.n:
        raise ValueError(f"string length {ell} out of range 1..{state.n}")
    return float(probabilities(state) @ _meson_counts_diag(state.n, ell))


def meson_histogram(state: StateVector) -> MesonHistogram:
    p = probabilities(state)
    values = {
        ell: float(p @ _meson_counts_diag(state.n, ell)) for ell in range(1, state.n + 1)
    }
    return MesonHistogram(n=state.n, values=values)


def count_mesons_bits(bits: str) -> dict:
    """Run-length meson counter on a classical bit string (the scan oracle).

    Boundaries are treated as 0, so maximal 1-runs at the edges count.
    """
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"bit string must be a nonempty run of 0/1 symbols, got {bits!r}")
    counts = {}
    for run in bits.split("0"):
        if run:
            counts[len(run)] = counts.get(len(run), 0) + 1
    return counts


def sample_bitstrings(state: StateVector, shots: int, seed) -> dict:
    """`shots` i.i.d. joint readouts of all qubits, as a bitstring -> count map.

    One numpy default_rng(seed) per call; identical (state, shots, seed)
    give identical counts.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    p = probabilities(state)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p)
    n = state.n
    return {
        index_bitstring(i, n): int(c) for i, c in enumerate(counts) if c > 0
    }


def meson_number_from_counts(counts: dict, ell: int) -> float:
    """Shot-frequency estimate of <N_ell> from a sample_bitstrings result."""
    shots = sum(counts.values())
    acc = 0
    for bits, c in counts.items():
        acc += count_mesons_bits(bits).get(ell, 0) * c
    return acc / shots


def spread_metric(profile: np.ndarray, origin: float) -> float:
    """Weight-normalized RMS bond displacement of a kink profile from `origin`."""
    profile = np.asarray(profile, dtype=float)
    total = profile.sum()
    if total <= 0.0:
        raise ValueError("kink profile has zero total weight")
    d = np.arange(len(profile)) - origin
    return float(np.sqrt((profile @ d**2) / total))

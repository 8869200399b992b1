"""Exact statevector simulator for a digitally driven Floquet Ising chain.

The drive alternates an Ising bond layer, a transverse rotation layer, and a
longitudinal phase layer on an open chain. The package reproduces the ideal
dynamics behind the confinement, fragmentation, and meson-scattering figure
panels, certifies the model's lattice-gauge-theory form, and ships a CLI
runner that regenerates each panel's underlying time series.
"""

__version__ = "0.1.0"

from .state import (  # noqa: E402
    StateVector,
    basis_state,
    bits_matrix,
    bitstring_index,
    index_bitstring,
    inner_product,
    probabilities,
)
from .gates import (  # noqa: E402
    FloquetParams,
    GateSequence,
    LayerOrder,
    apply_pauli_rotation,
    apply_zz_phase,
    dense_unitary,
    evolve,
    floquet_cycle,
    zz_decomposition,
)
from .hamiltonian import (  # noqa: E402
    DenseHamiltonian,
    build_hamiltonian,
    exact_evolve,
    trotter_error,
)
from .observables import (  # noqa: E402
    MesonHistogram,
    count_mesons_bits,
    kink_density,
    kink_profile,
    meson_histogram,
    meson_number,
    meson_number_from_counts,
    sample_bitstrings,
    spin_flip_density,
    spin_flip_profile,
    spread_metric,
    total_kinks,
    total_spin_flips,
)
from .gauge import (  # noqa: E402
    Boundary,
    GaugeGenerator,
    LgtSystem,
    audit_report,
    build_lgt_unitary,
    check_gauge_invariance,
    dual_algebra_check,
    gauge_generator,
    gauge_sector_projector,
    mass_term_residual,
)
from .runner import (  # noqa: E402
    Engine,
    ObservableRecord,
    ObservableSpec,
    PRESET_NAMES,
    RunManifest,
    ScenarioConfig,
    emit,
    load_config,
    preset,
    render_csv,
    render_json,
    run_scenario,
)
from .kernels import active_backend  # noqa: E402

__all__ = [
    "__version__",
    "StateVector",
    "basis_state",
    "bits_matrix",
    "bitstring_index",
    "index_bitstring",
    "inner_product",
    "probabilities",
    "FloquetParams",
    "GateSequence",
    "LayerOrder",
    "apply_pauli_rotation",
    "apply_zz_phase",
    "dense_unitary",
    "evolve",
    "floquet_cycle",
    "zz_decomposition",
    "DenseHamiltonian",
    "build_hamiltonian",
    "exact_evolve",
    "trotter_error",
    "MesonHistogram",
    "count_mesons_bits",
    "kink_density",
    "kink_profile",
    "meson_histogram",
    "meson_number",
    "meson_number_from_counts",
    "sample_bitstrings",
    "spin_flip_density",
    "spin_flip_profile",
    "spread_metric",
    "total_kinks",
    "total_spin_flips",
    "Boundary",
    "GaugeGenerator",
    "LgtSystem",
    "audit_report",
    "build_lgt_unitary",
    "check_gauge_invariance",
    "dual_algebra_check",
    "gauge_generator",
    "gauge_sector_projector",
    "mass_term_residual",
    "Engine",
    "ObservableRecord",
    "ObservableSpec",
    "PRESET_NAMES",
    "RunManifest",
    "ScenarioConfig",
    "emit",
    "load_config",
    "preset",
    "render_csv",
    "render_json",
    "run_scenario",
    "active_backend",
]

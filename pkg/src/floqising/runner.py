"""Declarative scenario layer: presets for every figure panel, the run loop
over both engines, and deterministic CSV/JSON emission.

CSV schema is exactly `cycle,observable,index,value`, one row per observable
component per recording time (t=0 included), rows sorted by (cycle,
observable, index) with scalar rows carrying an empty index field. Values are
serialized with the shortest round-trip decimal form, so a fixed config and
seed reproduce the output byte for byte. The manifest echoes the config and
records the wall clock; the wall clock goes to JSON output only, never CSV.
"""
from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .gates import FloquetParams, LayerOrder, floquet_cycle
from .hamiltonian import build_hamiltonian, exact_evolve
from .observables import _bits, _meson_counts_diag, spread_metric
from .state import basis_state, probabilities

OBSERVABLE_NAMES = (
    "kink_density",
    "total_kinks",
    "total_spin_flips",
    "spin_flip_density",
    "meson_number",
    "meson_histogram",
    "spread_metric",
)

_SCALAR = ("total_kinks", "total_spin_flips", "spread_metric")


class Engine(enum.Enum):
    FLOQUET = "floquet"
    HAMILTONIAN = "hamiltonian"


@dataclass
class ObservableSpec:
    """One requested observable plus its component indices (None = default set)."""

    name: str
    indices: tuple = None

    def __post_init__(self):
        if self.name not in OBSERVABLE_NAMES:
            raise ValueError(
                f"unknown observable {self.name!r}; known: {', '.join(OBSERVABLE_NAMES)}"
            )
        if self.indices is not None:
            self.indices = tuple(int(i) for i in self.indices)
            if self.name in _SCALAR:
                raise ValueError(f"observable {self.name!r} is scalar and takes no indices")


@dataclass
class ScenarioConfig:
    name: str
    engine: Engine
    params: FloquetParams
    initial: str
    cycles: int
    observables: list
    shots: int = None
    seed: int = None
    output_format: str = "csv"
    output_path: str = None

    def __post_init__(self):
        if not isinstance(self.engine, Engine):
            self.engine = Engine(self.engine)
        if len(self.initial) != self.params.n:
            raise ValueError(
                f"config field 'initial': length {len(self.initial)} does not match "
                f"params.n={self.params.n}"
            )
        if any(c not in "01" for c in self.initial):
            raise ValueError(f"config field 'initial': not a ket string: {self.initial!r}")
        if self.cycles < 0:
            raise ValueError(f"config field 'cycles': must be >= 0, got {self.cycles}")
        if not self.observables:
            raise ValueError("config field 'observables': must be nonempty")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"config field 'output.format': {self.output_format!r}")
        if self.shots is not None and self.shots < 1:
            raise ValueError(f"config field 'shots': must be >= 1, got {self.shots}")

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "engine": self.engine.value,
            "params": {
                "J": self.params.J,
                "mu": self.params.mu,
                "h": self.params.h,
                "n": self.params.n,
                "layer_order": self.params.layer_order.value,
            },
            "initial": self.initial,
            "cycles": self.cycles,
            "observables": [
                {"name": o.name}
                if o.indices is None
                else {"name": o.name, "indices": list(o.indices)}
                for o in self.observables
            ],
        }
        if self.shots is not None:
            d["shots"] = self.shots
        if self.seed is not None:
            d["seed"] = self.seed
        if self.output_path is not None or self.output_format != "csv":
            d["output"] = {"format": self.output_format}
            if self.output_path is not None:
                d["output"]["path"] = self.output_path
        return d

    @staticmethod
    def from_dict(d: dict) -> "ScenarioConfig":
        _reject_unknown(
            d,
            ("name", "engine", "params", "initial", "cycles", "observables", "shots", "seed", "output"),
            "config",
        )
        for key in ("name", "engine", "params", "initial", "cycles", "observables"):
            if key not in d:
                raise ValueError(f"config field {key!r} is required")
        pd = d["params"]
        _reject_unknown(pd, ("J", "mu", "h", "n", "layer_order"), "config field 'params'")
        for key in ("J", "mu", "h", "n"):
            if key not in pd:
                raise ValueError(f"config field 'params.{key}' is required")
        params = FloquetParams(
            J=float(pd["J"]),
            mu=float(pd["mu"]),
            h=float(pd["h"]),
            n=int(pd["n"]),
            layer_order=LayerOrder(pd.get("layer_order", "EQ1")),
        )
        obs = []
        for i, od in enumerate(d["observables"]):
            _reject_unknown(od, ("name", "indices"), f"config field 'observables[{i}]'")
            if "name" not in od:
                raise ValueError(f"config field 'observables[{i}].name' is required")
            obs.append(ObservableSpec(name=od["name"], indices=od.get("indices")))
        out = d.get("output", {})
        _reject_unknown(out, ("format", "path"), "config field 'output'")
        return ScenarioConfig(
            name=d["name"],
            engine=Engine(d["engine"]),
            params=params,
            initial=d["initial"],
            cycles=int(d["cycles"]),
            observables=obs,
            shots=d.get("shots"),
            seed=d.get("seed"),
            output_format=out.get("format", "csv"),
            output_path=out.get("path"),
        )


def _reject_unknown(d, allowed, where):
    if not isinstance(d, dict):
        raise ValueError(f"{where}: expected a mapping, got {type(d).__name__}")
    unknown = sorted(set(d) - set(allowed))
    if unknown:
        raise ValueError(f"{where}: unknown key(s) {unknown}; allowed: {sorted(allowed)}")


@dataclass
class ObservableRecord:
    cycle: int
    observable: str
    index: int
    value: float


@dataclass
class RunManifest:
    config: dict
    version: str
    wall_clock_s: float
    records: list = field(default_factory=list)


def load_config(path) -> ScenarioConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return ScenarioConfig.from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# presets

_J, _MU = math.pi / 4, math.pi / 10


def _preset(name, initial, h, observables, engine=Engine.FLOQUET):
    return ScenarioConfig(
        name=name,
        engine=engine,
        params=FloquetParams(J=_J, mu=_MU, h=h, n=8),
        initial=initial,
        cycles=15,
        observables=observables,
    )


def _kink_only():
    return [ObservableSpec("kink_density")]


def _fig3_obs():
    return [
        ObservableSpec("kink_density"),
        ObservableSpec("total_spin_flips"),
        ObservableSpec("total_kinks"),
        ObservableSpec("meson_histogram"),
    ]


def _fig4_obs():
    return [ObservableSpec("spin_flip_density"), ObservableSpec("meson_number", (1, 4))]


_PRESET_BUILDERS = {
    "fig2a": lambda: _preset("fig2a", "10000000", 0.0, _kink_only()),
    "fig2b": lambda: _preset("fig2b", "10000000", math.pi / 10, _kink_only()),
    "fig2c": lambda: _preset("fig2c", "00010000", 0.0, _kink_only()),
    "fig2d": lambda: _preset("fig2d", "00010000", math.pi / 8, _kink_only()),
    "fig3": lambda: _preset("fig3", "00111100", math.pi / 4, _fig3_obs()),
    "fig4_h8": lambda: _preset("fig4_h8", "00100100", math.pi / 8, _fig4_obs()),
    "fig4_h4": lambda: _preset("fig4_h4", "00100100", math.pi / 4, _fig4_obs()),
    "fig4_ham_h8": lambda: _preset(
        "fig4_ham_h8", "00100100", math.pi / 8, _fig4_obs(), engine=Engine.HAMILTONIAN
    ),
    "fig4_ham_h4": lambda: _preset(
        "fig4_ham_h4", "00100100", math.pi / 4, _fig4_obs(), engine=Engine.HAMILTONIAN
    ),
}

PRESET_NAMES = tuple(_PRESET_BUILDERS)


def preset(name: str) -> ScenarioConfig:
    """A fresh, fully-populated config for one of the figure panels."""
    if name not in _PRESET_BUILDERS:
        raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
    return _PRESET_BUILDERS[name]()


# ---------------------------------------------------------------------------
# run loop

def _component_table(cfg: ScenarioConfig, origin: float):
    """Expand the observable specs into (name, index, diagonal) columns.

    Every observable here is diagonal, so a column is a weight vector over
    basis indices; spread_metric is the one derived column, evaluated from
    the kink-profile columns against the fixed t=0 origin.
    """
    n = cfg.params.n
    b = _bits(n)
    kink_diags = [(b[j] != b[j + 1]).astype(float) for j in range(n - 1)]
    columns = []
    for spec in cfg.observables:
        if spec.name == "kink_density":
            idx = spec.indices if spec.indices is not None else tuple(range(n - 1))
            for j in idx:
                if not 0 <= j < n - 1:
                    raise ValueError(f"kink_density index {j} out of range 0..{n - 2}")
                columns.append((spec.name, j, kink_diags[j]))
        elif spec.name == "spin_flip_density":
            idx = spec.indices if spec.indices is not None else tuple(range(n))
            for j in idx:
                if not 0 <= j < n:
                    raise ValueError(f"spin_flip_density index {j} out of range 0..{n - 1}")
                columns.append((spec.name, j, b[j].astype(float)))
        elif spec.name in ("meson_number", "meson_histogram"):
            default = tuple(range(1, n + 1))
            idx = spec.indices if spec.indices is not None else default
            for ell in idx:
                if not 1 <= ell <= n:
                    raise ValueError(f"{spec.name} length {ell} out of range 1..{n}")
                columns.append((spec.name, ell, _meson_counts_diag(n, ell).astype(float)))
        elif spec.name == "total_kinks":
            columns.append((spec.name, None, sum(kink_diags)))
        elif spec.name == "total_spin_flips":
            columns.append((spec.name, None, b.sum(axis=0).astype(float)))
        elif spec.name == "spread_metric":
            columns.append((spec.name, None, ("spread", kink_diags, origin)))
    return columns


def _profile_origin(probs: np.ndarray, n: int) -> float:
    """Weight-averaged bond position of the t=0 kink profile."""
    b = _bits(n)
    profile = np.array([probs @ (b[j] != b[j + 1]) for j in range(n - 1)])
    total = profile.sum()
    if total <= 0.0:
        return 0.0
    return float(profile @ np.arange(n - 1) / total)


def _states(cfg: ScenarioConfig):
    """Yield the state at t = 0..cycles for the configured engine."""
    state = basis_state(cfg.initial)
    if cfg.engine is Engine.FLOQUET:
        yield state
        for _ in range(cfg.cycles):
            floquet_cycle(state, cfg.params)
            yield state
    else:
        H = build_hamiltonian(cfg.params)
        for t in range(cfg.cycles + 1):
            yield exact_evolve(state, H, float(t))


def run_scenario(cfg: ScenarioConfig) -> RunManifest:
    """Execute one scenario and return its manifest.

    With `shots` set, each recording time draws a fresh multinomial sample
    (one seeded generator for the whole run; a missing seed means seed 0) and
    observables are evaluated on the empirical distribution instead of the
    exact one.
    """
    start = time.perf_counter()
    n = cfg.params.n
    origin = _profile_origin(probabilities(basis_state(cfg.initial)), n)
    columns = sorted(
        _component_table(cfg, origin), key=lambda c: (c[0], -1 if c[1] is None else c[1])
    )
    rng = None
    if cfg.shots is not None:
        rng = np.random.default_rng(cfg.seed if cfg.seed is not None else 0)
    records = []
    for t, state in enumerate(_states(cfg)):
        probs = probabilities(state)
        if rng is not None:
            counts = rng.multinomial(cfg.shots, probs / probs.sum())
            probs = counts / cfg.shots
        for name, index, diag in columns:
            if isinstance(diag, tuple):
                _, kink_diags, org = diag
                profile = np.array([probs @ d for d in kink_diags])
                value = spread_metric(profile, org)
            else:
                value = float(probs @ diag)
            records.append(ObservableRecord(t, name, index, value))
    return RunManifest(
        config=cfg.to_dict(),
        version=__version__,
        wall_clock_s=time.perf_counter() - start,
        records=records,
    )


# ---------------------------------------------------------------------------
# emission

def _format_value(v: float) -> str:
    return repr(float(v))


def render_csv(manifest: RunManifest) -> str:
    lines = ["cycle,observable,index,value"]
    for r in manifest.records:
        idx = "" if r.index is None else str(r.index)
        lines.append(f"{r.cycle},{r.observable},{idx},{_format_value(r.value)}")
    return "\n".join(lines) + "\n"


def render_json(manifest: RunManifest) -> str:
    doc = {
        "config": manifest.config,
        "version": manifest.version,
        "wall_clock_s": manifest.wall_clock_s,
        "records": [
            {
                "cycle": r.cycle,
                "observable": r.observable,
                "index": r.index,
                "value": r.value,
            }
            for r in manifest.records
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def emit(manifest: RunManifest, fmt: str, destination) -> None:
    """Write the manifest as `fmt` ('csv' or 'json') to a path or file object."""
    if fmt == "csv":
        text = render_csv(manifest)
    elif fmt == "json":
        text = render_json(manifest)
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {destination}: {exc}") from exc

"""Heat-reservoir version of the entropy gate.

Elements become reservoirs (ice cubes) and each observation becomes a pump
that moves a noisy quantum of entropy from the observed reservoir into the
observer.  Pump directions use the same input encoding as the discrete gate,
so with zero noise the output reservoir lands exactly on the discrete
readout levels; with noise the gate is statistical.

Entropy is in abstract units unless a preset supplies SI values (J/K).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from importlib import resources

import numpy as np

from .gates import DEFAULT_READOUT, INPUT_PAIRS, GateReadout, read_gate


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Reservoir:
    id: str
    heat_capacity: float = 1.0
    temperature: float = 273.15
    melt_fraction: float = 0.5
    accumulated_entropy: float = 0.0

    def __post_init__(self):
        if not self.temperature > 0:
            raise ConfigError(f"reservoir {self.id}: temperature must be positive")
        if not self.heat_capacity > 0:
            raise ConfigError(f"reservoir {self.id}: heat capacity must be positive")
        if not 0.0 <= self.melt_fraction <= 1.0:
            raise ConfigError(f"reservoir {self.id}: melt_fraction must lie in [0, 1]")


@dataclass(frozen=True)
class PumpLink:
    """Moves ``quantum`` entropy per activation from ``source`` into ``sink``."""

    source: str
    sink: str
    quantum: float = 1.0
    noise_sigma: float = 0.0

    def __post_init__(self):
        if not self.quantum > 0:
            raise ConfigError("pump quantum must be positive")
        if self.noise_sigma < 0:
            raise ConfigError("noise_sigma must be non-negative")


def _absorb(r: Reservoir, ds: float, melt_entropy: float) -> Reservoir:
    # phase change takes entropy first; whatever overflows a fully melted or
    # fully frozen cube changes its temperature (dS = C dT / T)
    melt = r.melt_fraction + ds / melt_entropy
    clamped = min(1.0, max(0.0, melt))
    excess = (melt - clamped) * melt_entropy
    temperature = r.temperature * math.exp(excess / r.heat_capacity) if excess else r.temperature
    return replace(
        r,
        melt_fraction=clamped,
        temperature=temperature,
        accumulated_entropy=r.accumulated_entropy + ds,
    )


def pump_step(
    source: Reservoir,
    sink: Reservoir,
    link: PumpLink,
    rng: np.random.Generator | None = None,
    *,
    floor: float = -math.inf,
    melt_entropy: float = 4.0,
) -> tuple:
    """One pump activation; returns the updated ``(source, sink)``.

    The quantum is scaled by ``1 + eps`` with ``eps ~ Normal(0, noise_sigma)``.
    A negative draw runs the pump backwards.  The transfer is clamped so the
    losing reservoir never drops below ``floor``; the gaining one receives
    exactly what the other loses.
    """
    if (link.source, link.sink) != (source.id, sink.id):
        raise ConfigError(f"pump {link.source}->{link.sink} does not connect {source.id}->{sink.id}")
    q = link.quantum
    if link.noise_sigma > 0:
        if rng is None:
            raise ValueError("a random generator is required when noise_sigma > 0")
        q *= 1.0 + link.noise_sigma * rng.standard_normal()
    if q >= 0:
        q = max(0.0, min(q, source.accumulated_entropy - floor))
    else:
        q = -max(0.0, min(-q, sink.accumulated_entropy - floor))
    return _absorb(source, -q, melt_entropy), _absorb(sink, q, melt_entropy)


@dataclass(frozen=True)
class ThermoGateConfig:
    """Three-reservoir gate.

    ``pumps`` pairs each input reservoir with the output reservoir; the
    first pair is input ``a``, the second input ``b``.  ``floor`` defaults to
    minus the largest possible gain of the output (two quanta per step), and
    ``melt_entropy`` (entropy to go from frozen to melted) to twice that.
    """

    reservoirs: tuple = (Reservoir("a"), Reservoir("b"), Reservoir("o"))
    pumps: tuple = (("a", "o"), ("b", "o"))
    quantum: float = 1.0
    noise_sigma: float = 0.0
    n_steps: int = 1
    floor: float | None = None
    melt_entropy: float | None = None
    seed: int = 0
    readout: GateReadout = field(default=DEFAULT_READOUT, compare=False)

    def __post_init__(self):
        ids = [r.id for r in self.reservoirs]
        if len(set(ids)) != len(ids) or len(ids) != 3:
            raise ConfigError("the gate needs exactly three distinct reservoirs")
        if len(self.pumps) != 2:
            raise ConfigError("the gate needs exactly two pumps, one per input")
        outputs = {p[1] for p in self.pumps}
        inputs = [p[0] for p in self.pumps]
        if len(outputs) != 1 or len(set(inputs)) != 2 or outputs & set(inputs):
            raise ConfigError("pumps must join two distinct input reservoirs to one output reservoir")
        for rid in inputs + list(outputs):
            if rid not in ids:
                raise ConfigError(f"pump refers to unknown reservoir {rid!r}")
        if self.n_steps < 1:
            raise ConfigError("n_steps must be at least 1")
        if not self.quantum > 0 or self.noise_sigma < 0:
            raise ConfigError("quantum must be positive and noise_sigma non-negative")
        if self.floor is not None and not self.floor < self.max_gain:
            raise ConfigError("floor must lie below the maximum output gain")
        if self.melt_entropy is not None and not self.melt_entropy > 0:
            raise ConfigError("melt_entropy must be positive")

    @property
    def output_id(self) -> str:
        return self.pumps[0][1]

    @property
    def max_gain(self) -> float:
        return 2 * self.n_steps * self.quantum

    @property
    def effective_floor(self) -> float:
        return -self.max_gain if self.floor is None else self.floor

    @property
    def effective_melt_entropy(self) -> float:
        return 2 * self.max_gain if self.melt_entropy is None else self.melt_entropy

    def normalize(self, s: float) -> float:
        lo, hi = self.effective_floor, self.max_gain
        return min(1.0, max(0.0, (s - lo) / (hi - lo)))


def simulate_gate(a: bool, b: bool, config: ThermoGateConfig, rng: np.random.Generator | None = None) -> dict:
    """Run every pump activation for inputs ``(a, b)``; returns reservoirs by id.

    A true input pumps entropy from itself into the output (the output
    observes it); a false input pumps from the output into itself.
    Activations interleave: a, b, a, b, ...
    """
    res = {r.id: r for r in config.reservoirs}
    out = config.output_id
    links = []
    for (inp, _), value in zip(config.pumps, (a, b)):
        src, dst = (inp, out) if value else (out, inp)
        links.append(PumpLink(src, dst, config.quantum, config.noise_sigma))
    kw = dict(floor=config.effective_floor, melt_entropy=config.effective_melt_entropy)
    for _ in range(config.n_steps):
        for link in links:
            res[link.source], res[link.sink] = pump_step(res[link.source], res[link.sink], link, rng, **kw)
    return res


def run_gate_trial(a: bool, b: bool, config: ThermoGateConfig, seed=None) -> tuple:
    """``(u, output)`` for one noisy run of the NAND gate."""
    rng = np.random.default_rng(config.seed if seed is None else seed)
    res = simulate_gate(a, b, config, rng)
    u = config.normalize(res[config.output_id].accumulated_entropy)
    return u, read_gate(u, "nand", config.readout)


@dataclass(frozen=True)
class PairStats:
    a: bool
    b: bool
    trials: int
    correct: int
    accuracy: float
    mean_u: float
    std_u: float


def monte_carlo_report(config: ThermoGateConfig, trials: int, seed=None) -> list:
    """Per-input-pair statistics over ``trials`` independent runs.

    Trial ``t`` of pair ``i`` is seeded with ``(seed, i, t)``, so results do
    not depend on execution order.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    seed = config.seed if seed is None else seed
    rows = []
    for i, (a, b) in enumerate(INPUT_PAIRS):
        expected = not (a and b)
        us = np.empty(trials)
        correct = 0
        for t in range(trials):
            us[t], out = run_gate_trial(a, b, config, (seed, i, t))
            correct += out == expected
        rows.append(PairStats(a, b, trials, correct, correct / trials, float(us.mean()), float(us.std())))
    return rows


def run_monte_carlo(config: ThermoGateConfig, trials: int, seed=None) -> dict:
    """Fraction of trials matching NAND, keyed by input pair."""
    return {(r.a, r.b): r.accuracy for r in monte_carlo_report(config, trials, seed)}


REPORT_COLUMNS = ("a", "b", "trials", "correct", "accuracy", "mean_u", "std_u")


def report_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_COLUMNS)
    for r in rows:
        w.writerow([int(r.a), int(r.b), r.trials, r.correct, repr(r.accuracy), repr(r.mean_u), repr(r.std_u)])
    return buf.getvalue()


# config files ------------------------------------------------------------------

def config_from_dict(data: dict) -> ThermoGateConfig:
    kwargs = {}
    try:
        if "reservoirs" in data:
            kwargs["reservoirs"] = tuple(
                Reservoir(
                    str(r["id"]),
                    heat_capacity=float(r.get("heat_capacity", 1.0)),
                    temperature=float(r.get("temperature", 273.15)),
                    melt_fraction=float(r.get("melt_fraction", 0.5)),
                )
                for r in data["reservoirs"]
            )
        if "pumps" in data:
            kwargs["pumps"] = tuple((str(p["input"]), str(p["output"])) for p in data["pumps"])
        for key, cast in (("quantum", float), ("noise_sigma", float), ("n_steps", int),
                          ("floor", float), ("melt_entropy", float), ("seed", int)):
            if data.get(key) is not None:
                kwargs[key] = cast(data[key])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"malformed config: {exc}") from exc
    unknown = set(data) - {"reservoirs", "pumps", "quantum", "noise_sigma", "n_steps",
                           "floor", "melt_entropy", "seed", "name", "units", "notes"}
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return ThermoGateConfig(**kwargs)


def config_to_dict(config: ThermoGateConfig) -> dict:
    return {
        "reservoirs": [
            {"id": r.id, "heat_capacity": r.heat_capacity, "temperature": r.temperature,
             "melt_fraction": r.melt_fraction}
            for r in config.reservoirs
        ],
        "pumps": [{"input": i, "output": o} for i, o in config.pumps],
        "quantum": config.quantum,
        "noise_sigma": config.noise_sigma,
        "n_steps": config.n_steps,
        "floor": config.floor,
        "melt_entropy": config.melt_entropy,
        "seed": config.seed,
    }


def load_config(path) -> ThermoGateConfig:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    return config_from_dict(data)


def load_preset(name: str = "ice_cube") -> ThermoGateConfig:
    """Bundled SI preset, e.g. ``ice_cube`` (10 g water ice at 0 °C)."""
    text = resources.files("entropy_nand.presets").joinpath(f"{name}.json").read_text()
    return config_from_dict(json.loads(text))

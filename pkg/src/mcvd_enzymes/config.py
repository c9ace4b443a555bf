"""Line-oriented experiment plans.

A plan file holds ``key = value`` lines; ``#`` starts a comment.  Keys that
may be swept (``scenario``, ``d``, ``r_enz``, ``t_s``, ``half_life``) accept
a comma-separated list or an inclusive ``start:stop:step`` range::

    scenario = ST-ARx
    d = 6, 8
    r_enz = 2:26:2
    t_s = 0.1, 0.5, 1.0
    molecules = 5000
    delta_t = 1e-4
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, fields, replace

from .engine import SimulationConfig
from .errors import ConfigError

# file key -> SimulationConfig field
CONFIG_KEYS = {
    "scenario": "scenario",
    "D": "D",
    "r_r": "r_r",
    "r_enz": "r_enz",
    "d": "d",
    "molecules": "molecules",
    "t_s": "t_s",
    "t_end": "t_end",
    "half_life": "unit_half_life",
    "delta_t": "dt",
    "bits": "bits",
    "replications": "replications",
    "seed": "master_seed",
    "bin_width": "bin_width",
    "everywhere_distance": "everywhere_distance",
    "half_life_override": "half_life_override",
    "point_footprint": "point_footprint",
}
SWEEP_KEYS = ("scenario", "d", "r_enz", "t_s", "half_life")
PLAN_KEYS = ("out", "threads")

_INT_FIELDS = {"molecules", "replications", "master_seed"}
_STR_FIELDS = {"scenario", "point_footprint"}


@dataclass(frozen=True)
class ExperimentPlan:
    """A base configuration plus sweep axes.

    ``axes`` maps a sweep key to its tuple of values; the base configuration
    always carries the first value of every axis.
    """

    base: SimulationConfig
    axes: dict = field(default_factory=dict)
    out: str = "results"
    threads: int = 1

    def values(self, key: str) -> tuple:
        if key in self.axes:
            return tuple(self.axes[key])
        return (getattr(self.base, CONFIG_KEYS[key]),)

    def points(self, keys=SWEEP_KEYS) -> list:
        """Every configuration of the sweep over ``keys``, in canonical order."""
        combos = itertools.product(*(self.values(k) for k in keys))
        return [replace(self.base, **{CONFIG_KEYS[k]: v for k, v in zip(keys, combo)}) for combo in combos]

    def with_overrides(self, **kw) -> "ExperimentPlan":
        base_kw = {k: v for k, v in kw.items() if k in {f.name for f in fields(SimulationConfig)}}
        plan_kw = {k: v for k, v in kw.items() if k in ("out", "threads")}
        return replace(self, base=replace(self.base, **base_kw), **plan_kw)


def _number(text: str, as_int: bool):
    try:
        if as_int:
            v = int(text, 0)
        else:
            v = float(text)
    except ValueError:
        raise ValueError(f"malformed {'integer' if as_int else 'number'} {text!r}") from None
    if not as_int and not math.isfinite(v):
        raise ValueError(f"non-finite number {text!r}")
    return v


def _range(text: str) -> list:
    parts = [p.strip() for p in text.split(":")]
    if len(parts) != 3:
        raise ValueError(f"range {text!r} must be start:stop:step")
    start, stop, step = (_number(p, False) for p in parts)
    if not step > 0 or stop < start:
        raise ValueError(f"range {text!r} needs step > 0 and stop >= start")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [round(start + i * step, 12) for i in range(n + 1)]


def _parse_value(key: str, text: str):
    name = CONFIG_KEYS[key]
    if name == "bits":
        bits = text.replace(",", "").replace(" ", "")
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"bits must be a string of 0 and 1, got {text!r}")
        return tuple(int(b) for b in bits)
    if name == "half_life_override" and text.lower() == "none":
        return None
    if name in _STR_FIELDS:
        return text
    return _number(text, name in _INT_FIELDS)


def parse_config(text: str) -> ExperimentPlan:
    base_kw: dict = {}
    axes: dict = {}
    plan_kw: dict = {}
    seen: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in CONFIG_KEYS and key not in PLAN_KEYS:
            raise ConfigError(f"line {lineno}: {key}: unknown key")
        if key in seen:
            raise ConfigError(f"line {lineno}: {key}: duplicate key (first set on line {seen[key]})")
        seen[key] = lineno
        try:
            if key == "out":
                plan_kw["out"] = value
            elif key == "threads":
                plan_kw["threads"] = _number(value, True)
                if plan_kw["threads"] < 1:
                    raise ValueError("threads must be at least 1")
            elif key in SWEEP_KEYS and ("," in value or (":" in value and key != "scenario")):
                items = []
                for part in (p.strip() for p in value.split(",")):
                    if ":" in part:
                        items.extend(_range(part))
                    else:
                        items.append(_parse_value(key, part))
                if len(set(items)) != len(items):
                    raise ValueError("repeated value in sweep list")
                axes[key] = tuple(items)
                base_kw[CONFIG_KEYS[key]] = items[0]
            else:
                base_kw[CONFIG_KEYS[key]] = _parse_value(key, value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {key}: {exc}") from None

    if "scenario" not in base_kw:
        raise ConfigError("scenario missing")
    try:
        base = SimulationConfig(**base_kw)
    except ConfigError as exc:
        key = str(exc).split(":", 1)[0]
        file_key = next((k for k, v in CONFIG_KEYS.items() if v == key), key)
        where = f"line {seen[file_key]}: " if file_key in seen else ""
        raise ConfigError(f"{where}{exc}") from None
    plan = ExperimentPlan(base=base, axes=axes, **plan_kw)
    for key in axes:
        for v in axes[key]:
            try:
                replace(base, **{CONFIG_KEYS[key]: v})
            except ConfigError as exc:
                raise ConfigError(f"line {seen[key]}: {key}={v!r}: {exc}") from None
    return plan


def _render_value(v) -> str:
    if isinstance(v, tuple):
        return "".join(str(b) for b in v)
    if v is None:
        return "none"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_config(plan: ExperimentPlan) -> str:
    """Text that :func:`parse_config` turns back into ``plan``."""
    lines = []
    for key, name in CONFIG_KEYS.items():
        if key in plan.axes:
            lines.append(f"{key} = {', '.join(_render_value(v) for v in plan.axes[key])}")
            continue
        v = getattr(plan.base, name)
        if name == "bits" and v is None:
            continue
        lines.append(f"{key} = {_render_value(v)}")
    lines.append(f"out = {plan.out}")
    lines.append(f"threads = {plan.threads}")
    return "\n".join(lines) + "\n"


def load_config(path) -> ExperimentPlan:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


def desk_scale(plan: ExperimentPlan, molecules: int = 5000, replications: int = 10,
               dt: float = 1e-4) -> ExperimentPlan:
    """Plan reduced to laptop scale (fewer molecules and replications, coarser step)."""
    return plan.with_overrides(molecules=molecules, replications=replications, dt=dt)


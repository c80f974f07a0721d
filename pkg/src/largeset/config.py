"""Experiment configs: flat ``key = value`` text, or the same keys as JSON.

Recognized keys::

    construction = coset
    param.d = 5                      # constructor parameters
    window = int:-50..50             # default: the construction's own window
    ops = ["fatness", "syndeticity_index"]
    op.syndeticity_index.kmax = 6    # per-operation parameters
    format = json                    # json | csv
    seed = 0
    budget = 2000000

Values go through ``ast.literal_eval``; anything that is not a Python
literal is kept as a bare string.  Unknown keys are errors.
"""
from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ConfigError
from .solvers import DEFAULT_BUDGET

TOP_KEYS = {"construction", "window", "ops", "format", "seed", "budget"}

# operation name -> accepted parameters
OPERATIONS: dict[str, set[str]] = {
    "fatness": set(),
    "syndeticity_index": {"pad", "kmax"},
    "thickness_index": {"kmax", "probe_length", "subset_size"},
    "piecewise_syndetic": {"kmax", "probe_length", "subset_size"},
    "kappa_fat": {"k"},
    "ramsey_m": {"n"},
    "delta_star": {"k", "side"},
    "ip_star": {"n"},
    "three_fat_cover": set(),
    "duality": {"pad", "kmax"},
    "thick_on": {"F"},
    "density": {"d_list"},
}


@dataclass
class ExperimentConfig:
    construction: str
    params: dict = field(default_factory=dict)
    window: str | None = None
    ops: list = field(default_factory=lambda: ["fatness"])
    op_params: dict = field(default_factory=dict)
    format: str = "json"
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    source: str = ""

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "params": self.params,
            "window": self.window,
            "ops": list(self.ops),
            "op_params": {k: dict(v) for k, v in sorted(self.op_params.items())},
            "format": self.format,
            "seed": self.seed,
            "budget": self.budget,
        }


def _value(text: str) -> Any:
    text = text.strip()
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def parse_text(text: str, source: str = "<config>") -> ExperimentConfig:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{source}:{exc.lineno}: invalid JSON: {exc.msg}") from None
        return from_mapping(data, source)
    flat: dict[str, tuple[int, Any]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        line = line.split(" #", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key in flat:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        flat[key] = (lineno, _value(val))
    return _build(flat, source)


def from_mapping(data: dict, source: str = "<config>") -> ExperimentConfig:
    """JSON form: top-level keys plus ``params`` and ``op_params`` objects."""
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: top level must be an object")
    flat: dict[str, tuple[int, Any]] = {}
    for key, val in data.items():
        if key == "params":
            for k, v in (val or {}).items():
                flat[f"param.{k}"] = (0, v)
        elif key == "op_params":
            for op, ps in (val or {}).items():
                for k, v in ps.items():
                    flat[f"op.{op}.{k}"] = (0, v)
        else:
            flat[key] = (0, val)
    return _build(flat, source)


def _where(source: str, lineno: int, key: str) -> str:
    return f"{source}:{lineno}: key {key!r}" if lineno else f"{source}: key {key!r}"


def _build(flat: dict, source: str) -> ExperimentConfig:
    cfg = ExperimentConfig(construction="", source=source)
    seen_construction = False
    for key, (lineno, val) in flat.items():
        at = _where(source, lineno, key)
        if key.startswith("param."):
            cfg.params[key[6:]] = val
        elif key.startswith("op."):
            parts = key.split(".")
            if len(parts) != 3 or parts[1] not in OPERATIONS:
                raise ConfigError(f"{at}: unknown operation")
            if parts[2] not in OPERATIONS[parts[1]]:
                raise ConfigError(f"{at}: {parts[1]} takes {sorted(OPERATIONS[parts[1]]) or 'no parameters'}")
            cfg.op_params.setdefault(parts[1], {})[parts[2]] = val
        elif key not in TOP_KEYS:
            raise ConfigError(f"{at}: unknown key")
        elif key == "construction":
            cfg.construction = str(val)
            seen_construction = True
        elif key == "window":
            cfg.window = None if val is None else str(val)
        elif key == "ops":
            ops = [val] if isinstance(val, str) else list(val)
            bad = [o for o in ops if o not in OPERATIONS]
            if bad:
                raise ConfigError(f"{at}: unknown operation(s) {bad}; known: {', '.join(OPERATIONS)}")
            cfg.ops = ops
        elif key == "format":
            if val not in ("json", "csv"):
                raise ConfigError(f"{at}: format must be json or csv")
            cfg.format = val
        elif key in ("seed", "budget"):
            if not isinstance(val, int) or isinstance(val, bool):
                raise ConfigError(f"{at}: expected an integer")
            if key == "seed" and not (0 <= val < 2**64):
                raise ConfigError(f"{at}: seed must fit in 64 bits")
            if key == "budget" and val < 1:
                raise ConfigError(f"{at}: budget must be positive")
            setattr(cfg, key, val)
    if not seen_construction:
        raise ConfigError(f"{source}: missing required key 'construction'")
    return cfg


def load(path: str | Path) -> ExperimentConfig:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {p}: {exc.strerror}") from None
    return parse_text(text, str(p))

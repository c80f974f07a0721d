"""Certificates returned by the deciders and their JSON/CSV encodings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .groups import Group, Window
from .sets import FiniteSet

EXACT = "exact-on-window"
LOWER = "lower-bound"
UPPER = "upper-bound"


@dataclass
class LargenessReport:
    """Outcome of a windowed predicate.

    ``holds`` is True/False when the predicate was decided on the window and
    None when a budget or search bound stopped the computation.  ``witness``
    and ``counterexample`` hold a FiniteSet, a single element, or a list (an
    ordered sequence) of elements.
    """

    predicate: str
    holds: bool | None
    ctx: Group
    value: int | None = None
    witness: Any = None
    counterexample: Any = None
    window: Window | None = None
    exactness: str = EXACT
    notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def decided(self) -> bool:
        return self.holds is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "predicate": self.predicate,
            "holds": self.holds,
            "value": self.value,
            "witness": encode(self.ctx, self.witness),
            "counterexample": encode(self.ctx, self.counterexample),
            "window": None if self.window is None else str(self.window),
            "exactness": self.exactness,
            "notes": list(self.notes),
            "extra": jsonable(self.extra),
        }

    def to_csv_row(self) -> dict[str, str]:
        """Every cell is the JSON encoding of the matching report field."""
        return {k: json.dumps(v, sort_keys=True) for k, v in self.to_dict().items()}


def encode(ctx: Group, obj):
    if obj is None:
        return None
    if isinstance(obj, FiniteSet):
        return obj.to_json()
    if isinstance(obj, list):
        return [ctx.format(g) for g in obj]
    return ctx.format(obj)


def jsonable(obj):
    if isinstance(obj, LargenessReport):
        return obj.to_dict()
    if isinstance(obj, FiniteSet):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj

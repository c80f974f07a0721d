"""Sets given by membership oracles or finite lists, with the set algebra on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .errors import FamilyMismatch, LargesetError
from .groups import Group, Window, intersect_windows


@dataclass(frozen=True, eq=False)
class SetSpec:
    """A named subset of a group.

    ``membership`` must be a total, deterministic predicate on the elements of
    ``ctx``; ``window`` is the canonical window on which the set is evaluated
    by default, and ``provenance`` records how the set was built.
    """

    name: str
    ctx: Group
    membership: Callable[[Any], bool]
    window: Window | None = None
    provenance: Mapping[str, Any] = field(default_factory=dict)

    def __contains__(self, g) -> bool:
        return bool(self.membership(g))


class FiniteSet:
    """Duplicate-free finite set of elements kept in canonical order."""

    __slots__ = ("ctx", "elements", "_lookup")

    def __init__(self, ctx: Group, items: Iterable = ()):
        self.ctx = ctx
        seen = set(items)
        for g in seen:
            ctx.check(g)
        self.elements = tuple(sorted(seen, key=ctx.key))
        self._lookup = frozenset(seen)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._lookup

    def __eq__(self, other):
        if isinstance(other, FiniteSet):
            return self.ctx == other.ctx and self._lookup == other._lookup
        return NotImplemented

    def __hash__(self):
        return hash(self._lookup)

    def __repr__(self):
        return "FiniteSet[" + ", ".join(self.ctx.format(g) for g in self.elements) + "]"

    def as_set(self) -> frozenset:
        return self._lookup

    def to_json(self) -> list[str]:
        return [self.ctx.format(g) for g in self.elements]

    @classmethod
    def from_json(cls, ctx: Group, items: Iterable[str]) -> "FiniteSet":
        return cls(ctx, (ctx.parse(s) for s in items))


def _same_family(a: Group, b: Group) -> None:
    if a != b:
        raise FamilyMismatch(f"{a} and {b} are different groups")


def member(S: SetSpec, g) -> bool:
    S.ctx.check(g)
    return bool(S.membership(g))


def enumerate_set(S: SetSpec, w: Window | None = None) -> FiniteSet:
    """Members of ``S`` inside ``w`` (default: the set's own window)."""
    w = S.window if w is None else w
    if w is None:
        raise LargesetError(f"set {S.name!r} has no window")
    return FiniteSet(S.ctx, (g for g in S.ctx.enumerate(w) if S.membership(g)))


# ---------------------------------------------------------------------------
# combinators on membership oracles


def from_finite(F: FiniteSet, name: str | None = None, window: Window | None = None) -> SetSpec:
    lookup = F.as_set()
    return SetSpec(
        name or "finite",
        F.ctx,
        lookup.__contains__,
        window,
        {"constructor": "finite", "elements": F.to_json()},
    )


def whole_group(ctx: Group, window: Window | None = None) -> SetSpec:
    return SetSpec("G", ctx, lambda g: True, window, {"constructor": "whole_group", "family": ctx.family})


def empty_set(ctx: Group, window: Window | None = None) -> SetSpec:
    return SetSpec("empty", ctx, lambda g: False, window, {"constructor": "empty_set", "family": ctx.family})


def complement(A: SetSpec) -> SetSpec:
    return SetSpec(
        f"G\\{A.name}",
        A.ctx,
        lambda g: not A.membership(g),
        A.window,
        {"constructor": "complement", "of": dict(A.provenance)},
    )


def intersect(A: SetSpec, B: SetSpec) -> SetSpec:
    _same_family(A.ctx, B.ctx)
    return SetSpec(
        f"({A.name} & {B.name})",
        A.ctx,
        lambda g: A.membership(g) and B.membership(g),
        intersect_windows(A.window, B.window),
        {"constructor": "intersect", "of": [dict(A.provenance), dict(B.provenance)]},
    )


def union(A: SetSpec, B: SetSpec) -> SetSpec:
    _same_family(A.ctx, B.ctx)
    return SetSpec(
        f"({A.name} | {B.name})",
        A.ctx,
        lambda g: A.membership(g) or B.membership(g),
        intersect_windows(A.window, B.window),
        {"constructor": "union", "of": [dict(A.provenance), dict(B.provenance)]},
    )


def translate(A: SetSpec, g) -> SetSpec:
    """The left translate gA."""
    ctx = A.ctx
    ctx.check(g)
    ginv = ctx.inverse(g)
    return SetSpec(
        f"{ctx.format(g)}{A.name}",
        ctx,
        lambda x: A.membership(ctx.mul(ginv, x)),
        A.window,
        {"constructor": "translate", "by": ctx.format(g), "of": dict(A.provenance)},
    )


def inverse_set(A: SetSpec) -> SetSpec:
    ctx = A.ctx
    return SetSpec(
        f"{A.name}^-1",
        ctx,
        lambda x: A.membership(ctx.inverse(x)),
        A.window,
        {"constructor": "inverse_set", "of": dict(A.provenance)},
    )


def product_set(F: FiniteSet, A: SetSpec) -> SetSpec:
    """FA = {f a}: g belongs iff f^-1 g is in A for some f in F."""
    _same_family(F.ctx, A.ctx)
    ctx = A.ctx
    invs = [ctx.inverse(f) for f in F]
    return SetSpec(
        f"F{A.name}",
        ctx,
        lambda g: any(A.membership(ctx.mul(fi, g)) for fi in invs),
        A.window,
        {"constructor": "product_set", "F": F.to_json(), "of": dict(A.provenance)},
    )


# ---------------------------------------------------------------------------
# quotient, difference and finite-product sets


def left_quotient(A: FiniteSet) -> FiniteSet:
    """A^-1 A."""
    if not len(A):
        raise LargesetError("quotient of an empty set")
    ctx = A.ctx
    invs = [ctx.inverse(a) for a in A]
    return FiniteSet(ctx, (ctx.mul(ai, b) for ai in invs for b in A))


def right_quotient(A: FiniteSet) -> FiniteSet:
    """A A^-1."""
    if not len(A):
        raise LargesetError("quotient of an empty set")
    ctx = A.ctx
    invs = [ctx.inverse(b) for b in A]
    return FiniteSet(ctx, (ctx.mul(a, bi) for a in A for bi in invs))


def _check_one_to_one(seq) -> None:
    if len(set(seq)) != len(seq):
        raise LargesetError("sequence is not one-to-one")


def delta_set(ctx: Group, seq, side: str = "left") -> FiniteSet:
    """Delta of a one-to-one sequence.

    ``left`` gives {g_m^-1 g_n : m < n}, ``right`` gives {g_n g_m^-1 : m < n}.
    """
    seq = list(seq)
    _check_one_to_one(seq)
    out = []
    for n in range(len(seq)):
        for m in range(n):
            if side == "left":
                out.append(ctx.op(ctx.inverse(seq[m]), seq[n]))
            elif side == "right":
                out.append(ctx.op(seq[n], ctx.inverse(seq[m])))
            else:
                raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return FiniteSet(ctx, out)


def fp_set(ctx: Group, seq) -> FiniteSet:
    """Finite products x_{n1} ... x_{nk} over strictly increasing indices."""
    seq = list(seq)
    _check_one_to_one(seq)
    products: set = set()
    for x in seq:
        ctx.check(x)
        products |= {ctx.mul(p, x) for p in products} | {x}
    return FiniteSet(ctx, products)

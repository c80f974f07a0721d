"""Catalog of concrete constructions, addressable by name from the CLI.

Every factory computes membership straight from the defining arithmetic
condition, so any window can be used with any construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .errors import LargesetError
from .groups import (
    BooleanBall,
    BooleanGroup,
    FreeBall,
    FreeGroup,
    IntegerGroup,
    IntRange,
    Word,
    group_from_name,
)
from .sets import FiniteSet, SetSpec, complement, from_finite, whole_group

ZZ = IntegerGroup()
BZ = BooleanGroup()
F2 = FreeGroup(2)


def is_cube(n: int) -> bool:
    """True for n = k^3 with k an integer (k may be negative)."""
    return cube_root(n) is not None


def cube_root(n: int) -> int | None:
    if n == 0:
        return 0
    s = -1 if n < 0 else 1
    m = abs(n)
    k = round(m ** (1 / 3))
    for c in (k - 1, k, k + 1):
        if c >= 0 and c**3 == m:
            return s * c
    return None


def make_coset(d: int, r: int = 0) -> SetSpec:
    if d < 1:
        raise ValueError("modulus must be positive")
    r %= d
    name = f"{d}Z" if r == 0 else f"{r}+{d}Z"
    return SetSpec(name, ZZ, lambda g: g % d == r, IntRange(-50, 50),
                   {"constructor": "coset", "d": d, "r": r})


def make_subgroup_union(moduli) -> SetSpec:
    """Union of the subgroups dZ for d in ``moduli``."""
    moduli = tuple(int(d) for d in moduli)
    if not moduli or min(moduli) < 1:
        raise ValueError("moduli must be positive")
    return SetSpec("|".join(f"{d}Z" for d in moduli), ZZ,
                   lambda g: any(g % d == 0 for d in moduli), IntRange(-50, 50),
                   {"constructor": "subgroup_union", "moduli": list(moduli)})


def make_interval_union(pairs) -> SetSpec:
    """Union of the integer intervals [a, b] (both ends included)."""
    pairs = tuple((int(a), int(b)) for a, b in pairs)
    hi = max((b for _, b in pairs), default=0)
    lo = min((a for a, _ in pairs), default=0)
    return SetSpec("intervals", ZZ, lambda g: any(a <= g <= b for a, b in pairs),
                   IntRange(min(lo, 0), max(hi, 0)),
                   {"constructor": "interval_union", "pairs": [list(p) for p in pairs]})


def geometric_pairs(count: int, base: int = 4) -> list[tuple[int, int]]:
    """Blocks [base^i, 2 base^i - 1] for i < count: thick and not syndetic."""
    return [(base**i, 2 * base**i - 1) for i in range(count)]


def make_geometric_blocks(count: int = 6, base: int = 4) -> SetSpec:
    S = make_interval_union(geometric_pairs(count, base))
    return SetSpec(f"blocks{base}^{count}", ZZ, S.membership, IntRange(0, base**count),
                   {"constructor": "geometric_blocks", "count": count, "base": base})


def make_cube_gap_complement() -> SetSpec:
    """B(Z) minus the two-letter words {m, n}, m < n, with n - m a positive cube."""

    def contains(w) -> bool:
        if len(w) != 2:
            return True
        return not is_cube(w[1] - w[0])

    return SetSpec("cube_gap_complement", BZ, contains, BooleanBall(2, -12, 12),
                   {"constructor": "cube_gap_complement"})


def make_length_filtered(lengths, name: str | None = None) -> SetSpec:
    """Words of B(Z) whose length lies in ``lengths``.

    ``lengths`` is a collection of naturals or a predicate on them.
    """
    if callable(lengths):
        pred = lengths
        desc: Any = getattr(lengths, "__name__", "predicate")
    else:
        allowed = frozenset(int(n) for n in lengths)
        pred = allowed.__contains__
        desc = sorted(allowed)
    return SetSpec(name or "length_filtered", BZ, lambda w: pred(len(w)), BooleanBall(4, 1, 8),
                   {"constructor": "length_filtered", "lengths": desc})


def make_length_intervals(pairs, min_length: int | None = None) -> SetSpec:
    """Words whose length lies in a union of intervals (or is >= ``min_length``)."""
    pairs = tuple((int(a), int(b)) for a, b in pairs)

    def pred(n):
        if min_length is not None and n >= min_length:
            return True
        return any(a <= n <= b for a, b in pairs)

    S = make_length_filtered(pred)
    return SetSpec("length_intervals", BZ, S.membership, S.window,
                   {"constructor": "length_intervals", "pairs": [list(p) for p in pairs],
                    "min_length": min_length})


def make_parity_kernel(d: int) -> SetSpec:
    """Words with an even number of letters in every residue class mod d.

    This is a subgroup of B(Z) of index 2^d.
    """
    if d < 1:
        raise ValueError("d must be positive")

    def contains(w):
        counts = [0] * d
        for x in w:
            counts[x % d] ^= 1
        return not any(counts)

    return SetSpec(f"parity_kernel{d}", BZ, contains, BooleanBall(2, 0, 7),
                   {"constructor": "parity_kernel", "d": d})


def make_s_prime(S: SetSpec, s, validate: tuple[int, int] = (-200, 200)) -> SetSpec:
    """Syndetic subset of B(Z) built from a syndetic set S of integers.

    ``s`` lists distinct integers with Z = union of (s_k + S).  A word belongs
    iff it contains exactly one letter s_k of ``s`` and its letter sum lies in
    2 s_k + S.  The covering hypothesis is checked on ``validate`` only.
    """
    if S.ctx.family != "integer":
        raise LargesetError("the base set of S' must be a set of integers")
    s = tuple(int(x) for x in s)
    if len(set(s)) != len(s) or not s:
        raise LargesetError("shift letters must be distinct and nonempty")
    lo, hi = validate
    uncovered = [n for n in range(lo, hi + 1) if not any(S.membership(n - sk) for sk in s)]
    if uncovered:
        raise LargesetError(f"translates s_k + S miss {uncovered[0]} inside {lo}..{hi}")
    shifts = frozenset(s)

    def contains(w):
        hit = [x for x in w if x in shifts]
        if len(hit) != 1:
            return False
        return S.membership(sum(w) - 2 * hit[0])

    return SetSpec("s_prime", BZ, contains, BooleanBall(2, min(s) - 4, max(s) + 4),
                   {"constructor": "s_prime", "base": dict(S.provenance), "shifts": list(s),
                    "validated_range": [lo, hi]})


def make_ends_with_a() -> SetSpec:
    """Words of the free group on a, b whose last letter is a (not a^-1)."""
    return SetSpec("ends_with_a", F2, lambda w: bool(w) and w[-1] == 1, FreeBall(6),
                   {"constructor": "ends_with_a"})


def coerce_element(ctx, e):
    """Accept config-style element values: ints, letter lists, or formatted strings."""
    if ctx.family == "integer":
        return int(e)
    if ctx.family == "boolean" and isinstance(e, (list, tuple)):
        return Word(e)
    return ctx.parse(str(e))


def make_finite_complement(family: str, elements) -> SetSpec:
    ctx = group_from_name(family)
    F = FiniteSet(ctx, (coerce_element(ctx, e) for e in elements))
    S = complement(from_finite(F, "S"))
    return SetSpec(f"G\\{{{','.join(F.to_json())}}}", ctx, S.membership, None,
                   {"constructor": "finite_complement", "family": ctx.family, "elements": F.to_json()})


# ---------------------------------------------------------------------------
# registry used by the CLI


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    factory: Callable[..., SetSpec]
    params: dict[str, str]
    description: str


def _whole(family: str = "integer") -> SetSpec:
    return whole_group(group_from_name(family))


def _s_prime_from_residues(modulus: int = 3, residues=(0,), shifts=(0, 1, 2),
                           validate_lo: int = -200, validate_hi: int = 200) -> SetSpec:
    residues = frozenset(int(r) % modulus for r in residues)
    base = SetSpec(f"residues mod {modulus}", ZZ, lambda n: n % modulus in residues, None,
                   {"constructor": "residue_union", "modulus": modulus, "residues": sorted(residues)})
    return make_s_prime(base, shifts, (validate_lo, validate_hi))


def _length_filtered(lengths=(), min_length=None, intervals=()) -> SetSpec:
    if intervals or min_length is not None:
        return make_length_intervals(intervals or (), min_length)
    return make_length_filtered(lengths)


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("coset", "integer", make_coset, {"d": "int > 0", "r": "int"},
                     "residue class r + dZ; a finite-index subgroup when r = 0"),
        CatalogEntry("subgroup_union", "integer", make_subgroup_union, {"moduli": "list[int]"},
                     "union of subgroups dZ"),
        CatalogEntry("interval_union", "integer", make_interval_union, {"pairs": "list[(int, int)]"},
                     "union of closed integer intervals"),
        CatalogEntry("geometric_blocks", "integer", make_geometric_blocks, {"count": "int", "base": "int"},
                     "blocks [4^i, 2*4^i): thick, not syndetic"),
        CatalogEntry("cube_gap_complement", "boolean", make_cube_gap_complement, {},
                     "B(Z) without two-letter words {m,n} with n-m a positive cube; thick and 3-fat"),
        CatalogEntry("length_filtered", "boolean", _length_filtered,
                     {"lengths": "list[int]", "min_length": "int | None", "intervals": "list[(int, int)]"},
                     "words whose length lies in a given set"),
        CatalogEntry("parity_kernel", "boolean", make_parity_kernel, {"d": "int > 0"},
                     "words with an even number of letters in each residue class mod d (index 2^d)"),
        CatalogEntry("s_prime", "boolean", _s_prime_from_residues,
                     {"modulus": "int", "residues": "list[int]", "shifts": "list[int]",
                      "validate_lo": "int", "validate_hi": "int"},
                     "syndetic set S' of B(Z) lifted from a syndetic set of integers"),
        CatalogEntry("ends_with_a", "free", make_ends_with_a, {},
                     "free group words ending in the letter a; thick, with non-fat A^-1 A"),
        CatalogEntry("finite_complement", "any", make_finite_complement,
                     {"family": "integer|boolean|free", "elements": "list"},
                     "complement of a finite set"),
        CatalogEntry("whole_group", "any", _whole, {"family": "integer|boolean|free"},
                     "the whole group"),
    ]
}


def build(name: str, params: dict | None = None) -> SetSpec:
    if name not in CATALOG:
        raise LargesetError(f"unknown construction {name!r}; known: {', '.join(sorted(CATALOG))}")
    entry = CATALOG[name]
    params = dict(params or {})
    unknown = set(params) - set(entry.params)
    if unknown:
        raise LargesetError(f"unknown parameter(s) {sorted(unknown)} for {name}")
    return entry.factory(**params)

"""Pair colorings, homogeneous sets, small Ramsey numbers and finite filter checks.

Filters are represented by finite bases (lists of letter sets).  Every
verdict is relative to the base: "A in the filter" becomes "A is a base
element".  Uniformity has no finite analogue, so bases are only checked
for nonemptiness.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .errors import BudgetExhausted, FamilyMismatch, LargesetError
from .groups import BooleanGroup, Word
from .report import EXACT, LOWER, LargenessReport
from .sets import SetSpec
from .solvers import DEFAULT_BUDGET, max_clique


@dataclass(frozen=True, eq=False)
class PairColoring:
    """A total map from unordered pairs of ``vertices`` to ``range(colors)``.

    ``vertices`` is a strictly increasing tuple of ints (letters); the colors
    are stored in a flat dict keyed by index pairs (i, j) with i < j.
    """

    vertices: tuple
    colors: int
    table: dict

    def __post_init__(self):
        n = len(self.vertices)
        if list(self.vertices) != sorted(set(self.vertices)):
            raise LargesetError("vertices must be distinct and increasing")
        if len(self.table) != n * (n - 1) // 2:
            raise LargesetError("coloring is not total on pairs")
        for (i, j), c in self.table.items():
            if not (0 <= i < j < n) or not (0 <= c < self.colors):
                raise LargesetError(f"bad entry {(i, j)} -> {c}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_function(cls, vertices: Iterable[int], colors: int, f: Callable[[int, int], int]) -> "PairColoring":
        vs = tuple(sorted(set(vertices)))
        table = {(i, j): int(f(vs[i], vs[j])) for i, j in combinations(range(len(vs)), 2)}
        return cls(vs, colors, table)

    @classmethod
    def constant(cls, vertices, color: int = 0, colors: int = 2) -> "PairColoring":
        return cls.from_function(vertices, colors, lambda x, y: color)

    def __len__(self):
        return len(self.vertices)

    def index(self, x) -> int:
        return self._index[x]

    def color(self, x, y) -> int:
        """Color of the pair {x, y} of vertex values."""
        i, j = self._index[x], self._index[y]
        if i > j:
            i, j = j, i
        return self.table[(i, j)]

    def has_pair(self, x, y) -> bool:
        return x != y and x in self._index and y in self._index

    def color_graph(self, color: int) -> list[int]:
        n = len(self.vertices)
        adj = [0] * n
        for (i, j), c in self.table.items():
            if c == color:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return adj

    def is_homogeneous(self, subset, color: int | None = None) -> bool:
        cs = {self.color(x, y) for x, y in combinations(sorted(subset), 2)}
        if color is None:
            return len(cs) <= 1
        return cs <= {color}

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "colors": self.colors,
            "pairs": [[self.vertices[i], self.vertices[j], c] for (i, j), c in sorted(self.table.items())],
        }

    @classmethod
    def from_json(cls, data) -> "PairColoring":
        if isinstance(data, str):
            data = json.loads(data)
        vs = tuple(int(v) for v in data["vertices"])
        idx = {v: i for i, v in enumerate(vs)}
        table = {}
        for x, y, c in data["pairs"]:
            i, j = sorted((idx[int(x)], idx[int(y)]))
            table[(i, j)] = int(c)
        return cls(vs, int(data["colors"]), table)


def pentagon_coloring() -> PairColoring:
    """K5 colored 0 on the pentagon edges and 1 on the pentagram: no monochromatic triangle."""
    return PairColoring.from_function(range(5), 2, lambda i, j: 0 if (j - i) % 5 in (1, 4) else 1)


def partition_coloring(vertices, part) -> PairColoring:
    """0 on pairs inside ``part`` or inside its complement, 1 across."""
    part = frozenset(part)
    return PairColoring.from_function(vertices, 2, lambda x, y: 0 if (x in part) == (y in part) else 1)


# ---------------------------------------------------------------------------
# homogeneous sets


def find_homogeneous(c: PairColoring, s: int, *, budget: int = DEFAULT_BUDGET):
    """Lexicographically least s-subset with all pairs of one color, as (subset, color).

    Returns None if no such subset exists; raises BudgetExhausted when the
    search is cut off.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if s > len(c):
        return None
    best = None
    for color in range(c.colors):
        clique = max_clique(c.color_graph(color), target=s, budget=budget)
        if len(clique) >= s:
            cand = tuple(clique[:s])
            if best is None or cand < best[0]:
                best = (cand, color)
    if best is None:
        return None
    return tuple(c.vertices[i] for i in best[0]), best[1]


@dataclass
class RamseyResult:
    r: int
    s: int
    nmax: int
    value: int | None
    lower_bound: int
    witness: PairColoring | None = None
    decided: bool = False
    nodes: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "r": self.r, "s": self.s, "nmax": self.nmax, "value": self.value,
            "lower_bound": self.lower_bound, "decided": self.decided, "nodes": self.nodes,
            "witness": None if self.witness is None else self.witness.to_json(),
            "notes": list(self.notes),
        }


class _Budget(Exception):
    pass


def _good_coloring(n: int, r: int, s: int, budget: int, counter: list[int]) -> dict | None:
    """An r-coloring of pairs of range(n) without an s-homogeneous set, or None.

    Edges are colored vertex by vertex: (0,v), (1,v), ..., (v-1,v).  Row 0 is
    forced to be nondecreasing with colors introduced in order, which is a
    canonical form under vertex and color permutations.
    """
    adj = [[0] * n for _ in range(r)]
    table: dict = {}
    edges = [(u, v) for v in range(1, n) for u in range(v)]

    def closes(u: int, v: int, col: int) -> bool:
        # a monochromatic s-clique through the new edge {u, v}
        if s == 2:
            return True
        g = adj[col]
        common = g[u] & g[v]
        need = s - 2
        if need == 0:
            return True
        if bin(common).count("1") < need:
            return False
        if need == 1:
            return common != 0
        return len(max_clique(g, common, target=need)) >= need

    def rec(e: int, row0_max: int) -> bool:
        counter[0] += 1
        if counter[0] > budget:
            raise _Budget
        if e == len(edges):
            return True
        u, v = edges[e]
        if u == 0:
            prev = table.get((0, v - 1), 0) if v > 1 else 0
            choices = range(prev, min(row0_max + 2, r))
        else:
            choices = range(r)
        for col in choices:
            if closes(u, v, col):
                continue
            table[(u, v)] = col
            adj[col][u] |= 1 << v
            adj[col][v] |= 1 << u
            if rec(e + 1, max(row0_max, col) if u == 0 else row0_max):
                return True
            adj[col][u] &= ~(1 << v)
            adj[col][v] &= ~(1 << u)
            del table[(u, v)]
        return False

    return dict(table) if rec(0, -1) else None


def ramsey_bound_search(r: int, s: int, nmax: int, *, budget: int = DEFAULT_BUDGET) -> RamseyResult:
    """Least n <= nmax such that every r-coloring of pairs of n points has an s-homogeneous set."""
    if r < 1 or s < 2:
        raise ValueError("need r >= 1 and s >= 2")
    res = RamseyResult(r, s, nmax, None, lower_bound=s)
    counter = [0]
    for n in range(s, nmax + 1):
        try:
            table = _good_coloring(n, r, s, budget, counter)
        except _Budget:
            res.notes.append(f"budget of {budget} nodes exhausted at n={n}")
            break
        if table is None:
            res.value = n
            res.decided = True
            break
        res.lower_bound = n + 1
        res.witness = PairColoring(tuple(range(n)), r, table)
    else:
        res.notes.append(f"every n <= {nmax} admits a coloring without an s-homogeneous set")
    res.nodes = counter[0]
    return res


# ---------------------------------------------------------------------------
# filter bases


@dataclass(frozen=True)
class FilterBase:
    """Finite stand-in for a filter on a letter set: its listed elements."""

    sets: tuple
    letters: tuple | None = None

    def __post_init__(self):
        sets = tuple(tuple(sorted(set(int(x) for x in S))) for S in self.sets)
        if not sets:
            raise LargesetError("a filter base needs at least one set")
        for S in sets:
            if not S:
                raise LargesetError("filter base elements must be nonempty")
            if self.letters is not None and not set(S) <= set(self.letters):
                raise LargesetError(f"base element {S} leaves the letter window")
        object.__setattr__(self, "sets", sets)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


@dataclass
class ArrowResult:
    outcome: str  # "a", "b" or "c"
    certificate: tuple
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"outcome": self.outcome, "certificate": list(self.certificate), "notes": list(self.notes)}


def _restricted(c: PairColoring, S) -> bool:
    return all(x in c._index for x in S)


def arrow_check(base: FilterBase, c: PairColoring, lam: int, *,
                budget: int = DEFAULT_BUDGET) -> ArrowResult:
    """(a) a base element with all pairs colored 0, else (b) a 1-homogeneous set of size lam,
    else (c) neither, with the largest 1-homogeneous set found."""
    note = "relative to the finite base; uniformity is not checked"
    for S in base:
        if _restricted(c, S) and c.is_homogeneous(S, 0):
            return ArrowResult("a", S, [note])
    try:
        clique = max_clique(c.color_graph(1), target=lam, budget=budget)
        extra = []
    except BudgetExhausted as exc:
        clique = exc.best or []
        extra = ["budget exhausted; 1-homogeneous set is best found"]
    S1 = tuple(c.vertices[i] for i in clique)
    if len(S1) >= lam:
        return ArrowResult("b", S1[:lam], [note])
    return ArrowResult("c", S1, [note, "base insufficient", *extra])


def ramsey_filter_check(base: FilterBase, colorings) -> dict:
    """For each coloring, the first base element homogeneous for it (or None)."""
    rows = []
    counterexample = None
    for k, c in enumerate(colorings):
        hit = None
        for S in base:
            if _restricted(c, S) and c.is_homogeneous(S):
                col = c.color(S[0], S[1]) if len(S) > 1 else None
                hit = {"set": list(S), "color": col}
                break
        rows.append({"coloring": k, "homogeneous": hit})
        if hit is None and counterexample is None:
            counterexample = k
    return {
        "verdict": "consistent with Ramsey" if counterexample is None else "counterexample",
        "counterexample": counterexample,
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# letters of B(Z)


def letter_graph(A: SetSpec, letters) -> list[int]:
    letters = list(letters)
    n = len(letters)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if A.membership(Word.raw((letters[i], letters[j]))):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def max_homogeneous_letter_set(A: SetSpec, letters, *, budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Largest set B of letters with every two-letter word over B in A.

    The witness is B written as a word; ties go to the lexicographically
    least B.
    """
    if A.ctx.family != "boolean":
        raise FamilyMismatch("letter sets only make sense in B(Z)")
    letters = sorted(set(int(x) for x in letters))
    adj = letter_graph(A, letters)
    rep = LargenessReport("homogeneous_letters", True, BooleanGroup())
    try:
        clique = max_clique(adj, budget=budget)
        rep.exactness = EXACT
    except BudgetExhausted as exc:
        clique = exc.best or []
        rep.exactness = LOWER
        rep.notes.append(f"budget of {budget} nodes exhausted; best set found")
    B = [letters[i] for i in clique]
    rep.value = len(B)
    rep.witness = Word.raw(tuple(B))
    rep.extra["letters"] = letters
    return rep

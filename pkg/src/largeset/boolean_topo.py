"""Zero-neighbourhood traces in free Boolean groups and letter decompositions
of word systems whose pair sums have two letters.  The colorings at the end
turn fat sets of B(X) into Ramsey-type statements.

The extra point * of X is the reserved letter STAR.  A word containing STAR
lives in B(X with *) only; traces on B(X) drop those words.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import LargesetError, PreconditionError, WindowTooLarge
from .groups import STAR, BooleanBall, BooleanGroup, Word, window_cap
from .ramsey import FilterBase, PairColoring
from .report import LargenessReport
from .sets import FiniteSet, SetSpec

BZ = BooleanGroup()


def _sd(a, b) -> Word:
    return BZ.mul(a, b)


@dataclass(frozen=True)
class NeighborhoodSpec:
    """Letter sets A_1..A_n standing for V_i = A_i + {*}, summed up to ``depth`` pairs."""

    a_seq: tuple
    depth: int

    def __post_init__(self):
        seq = tuple(tuple(sorted(set(int(x) for x in A))) for A in self.a_seq)
        if not seq:
            raise LargesetError("need at least one letter set")
        if self.depth > len(seq) or self.depth < 0:
            raise LargesetError(f"depth {self.depth} exceeds the {len(seq)} letter sets given")
        object.__setattr__(self, "a_seq", seq)


def pair_sums(A) -> set:
    """{x + y : x, y in A + {*}} in B(X with *)."""
    V = list(A) + [STAR]
    out = {BZ.identity}
    for x, y in combinations(sorted(V), 2):
        out.add(Word.raw((x, y)))
    return out


def _star_in_window(g, w: BooleanBall) -> bool:
    return len(g) <= w.max_len and all(x == STAR or w.letter_lo <= x <= w.letter_hi for x in g)


def neighborhood_trace(spec: NeighborhoodSpec, w: BooleanBall, *, with_star: bool = False) -> FiniteSet:
    """Words x_1+y_1+...+x_k+y_k with x_i, y_i in V_i, k <= depth, intersected with w.

    By default only starless words (the trace on B(X)) are kept.
    """
    cap = window_cap()
    acc = {BZ.identity}
    for A in spec.a_seq[: spec.depth]:
        terms = pair_sums(A)
        acc = {_sd(a, t) for a in acc for t in terms}
        if len(acc) > cap:
            raise WindowTooLarge(f"trace has more than {cap} words")
    if with_star:
        keep = [g for g in acc if _star_in_window(g, w)]
    else:
        keep = [g for g in acc if STAR not in g and BZ.in_window(g, w)]
    return FiniteSet(BZ, keep)


def even_sphere_trace(A, n: int) -> FiniteSet:
    """[A]^{2n}: all words of exactly 2n letters from A."""
    return FiniteSet(BZ, (Word.raw(c) for c in combinations(sorted(set(A)), 2 * n)))


# ---------------------------------------------------------------------------
# word systems whose pair sums have two letters


@dataclass(frozen=True)
class Letters:
    letters: tuple


@dataclass(frozen=True)
class ExceptionalK4:
    """w_4 = w_1 + w_2 + w_3, so the pair sums are x_i + x_j for i < j <= 3 and
    w_1+w_4 = x_2+x_3, w_2+w_4 = x_1+x_3, w_3+w_4 = x_1+x_2."""

    letters: tuple


@dataclass(frozen=True)
class NotApplicable:
    pair: tuple  # 0-based indices i < j with w_i + w_j not a two-letter word


@dataclass(frozen=True, eq=False)
class WordSystem:
    words: tuple
    sums: dict = field(init=False, repr=False)

    def __post_init__(self):
        ws = tuple(w if isinstance(w, Word) else Word(w) for w in self.words)
        object.__setattr__(self, "words", ws)
        object.__setattr__(self, "sums", {(i, j): _sd(ws[i], ws[j])
                                          for i, j in combinations(range(len(ws)), 2)})

    def __len__(self):
        return len(self.words)

    def sum(self, i: int, j: int) -> Word:
        return self.sums[(i, j) if i < j else (j, i)]

    def to_json(self) -> str:
        return json.dumps([list(w) for w in self.words])

    @classmethod
    def from_json(cls, text: str) -> "WordSystem":
        return cls(tuple(Word(w) for w in json.loads(text)))


def _other(pair: Word, x: int) -> int:
    a, b = pair
    return b if a == x else a


def two_words_decompose(ws: WordSystem):
    """Letters x_i with w_i + w_j = x_i + x_j, following the induction on k.

    k = 1: x_1 is the least letter of w_1 (0 for the empty word).
    k = 2: the two letters of w_1 + w_2, smaller one first.
    k = 3: x_2 is the letter shared by w_1+w_2 and w_2+w_3.
    k >= 4: x_j is the partner of x_1 in w_1 + w_j; when k = 4 and x_1 is
    missing from w_1 + w_4 the system is exceptional.
    """
    k = len(ws)
    if k < 1:
        raise ValueError("need at least one word")
    for (i, j), s in ws.sums.items():
        if len(s) != 2:
            return NotApplicable((i, j))
    if k == 1:
        w1 = ws.words[0]
        return Letters((w1[0] if w1 else 0,))
    s12 = ws.sum(0, 1)
    if k == 2:
        return Letters(tuple(s12))
    s23 = ws.sum(1, 2)
    shared = set(s12) & set(s23)
    # |shared| = 1: otherwise w_1 + w_3 would be empty
    (x2,) = shared
    x = [_other(s12, x2), x2, _other(s23, x2)]
    for j in range(3, k):
        s1j = ws.sum(0, j)
        if x[0] not in s1j:
            if k == 4:
                return ExceptionalK4(tuple(x))
            raise AssertionError("pair sums of length two force x_1 into w_1 + w_j when k > 4")
        x.append(_other(s1j, x[0]))
    return Letters(tuple(x))


def verify_letters(ws: WordSystem, letters) -> bool:
    return all(ws.sum(i, j) == _sd(Word.raw((letters[i],)), Word.raw((letters[j],)))
               for i, j in combinations(range(len(ws)), 2))


def exceptional_sums(ws: WordSystem, letters) -> dict:
    """All six pair sums of an exceptional quadruple, recomputed from the words."""
    x1, x2, x3 = letters
    expected = {(0, 1): (x1, x2), (0, 2): (x1, x3), (1, 2): (x2, x3),
                (0, 3): (x2, x3), (1, 3): (x1, x3), (2, 3): (x1, x2)}
    return {p: (ws.sum(*p), Word(v)) for p, v in expected.items()}


# ---------------------------------------------------------------------------
# colorings and the sets they define


def c_set_from_coloring(c: PairColoring) -> SetSpec:
    """C' = B(Z) minus the two-letter words {x, y} with c({x, y}) = 1."""

    def contains(g) -> bool:
        if len(g) != 2 or not c.has_pair(g[0], g[1]):
            return True
        return c.color(g[0], g[1]) != 1

    return SetSpec("C'", BZ, contains, None, {"constructor": "c_set_from_coloring", "coloring": c.to_json()})


def c4_set_from_coloring(c: PairColoring) -> SetSpec:
    """Four-letter words a1<a2<a3<a4 whose three complementary pairings all change color."""

    def contains(g) -> bool:
        if len(g) != 4 or not all(x in c._index for x in g):
            return False
        a1, a2, a3, a4 = g
        return (c.color(a1, a2) != c.color(a3, a4)
                and c.color(a1, a3) != c.color(a2, a4)
                and c.color(a1, a4) != c.color(a2, a3))

    return SetSpec("C4", BZ, contains, None, {"constructor": "c4_set_from_coloring", "coloring": c.to_json()})


QUADRUPLE_PALETTE = tuple((a, b, p, q) for a, b in combinations(range(1, 5), 2)
                          for p, q in combinations(range(1, 5), 2))
ARRANGEMENT_PALETTE = tuple(combinations(range(1, 5), 2))


def _check_b4_pair(wi, wj) -> Word:
    if len(wi) != 4 or len(wj) != 4:
        raise PreconditionError("both words must have four letters")
    s = _sd(wi, wj)
    if len(s) != 4:
        raise PreconditionError(f"the sum has {len(s)} letters, not four")
    return s


def b4_quadruple_coloring(wi, wj) -> tuple:
    """(i', i'', j', j''): positions of the surviving letters of w_i in w_i and of w_j in w_j."""
    _check_b4_pair(wi, wj)
    si = set(wj)
    sj = set(wi)
    pi = [k for k, x in enumerate(wi, 1) if x not in si]
    pj = [k for k, x in enumerate(wj, 1) if x not in sj]
    return (pi[0], pi[1], pj[0], pj[1])


def b4_arrangement_coloring(wi, wj) -> tuple:
    """Positions of the surviving letters of w_i inside w_i + w_j."""
    s = _check_b4_pair(wi, wj)
    own = set(wi)
    pos = tuple(k for k, x in enumerate(s, 1) if x in own)
    return pos


def trace_containment_check(fat_set: SetSpec, base: FilterBase, n: int) -> LargenessReport:
    """Does fat_set contain zero and [A]^{2m} for every m <= n, for some base element A?

    The certificate is the first base element that works, or else the
    uncovered word of the first base element.
    """
    rep = LargenessReport(f"trace_containment(n={n})", None, BZ)
    if not fat_set.membership(BZ.identity):
        rep.holds = False
        rep.counterexample = BZ.identity
        rep.notes.append("zero is not in the set")
        return rep
    first_miss = None
    for A in base:
        miss = None
        for m in range(1, n + 1):
            for c in combinations(A, 2 * m):
                g = Word.raw(c)
                if not fat_set.membership(g):
                    miss = g
                    break
            if miss is not None:
                break
        if miss is None:
            rep.holds = True
            rep.witness = Word.raw(tuple(A))
            return rep
        if first_miss is None:
            first_miss = miss
    rep.holds = False
    rep.counterexample = first_miss
    return rep


def random_translated_system(rng, k: int, letters=range(1, 40), t_len: int = 5) -> tuple[WordSystem, tuple]:
    """w_i = t + {x_i} for random distinct x_1 < ... < x_k and a random word t."""
    pool = list(letters)
    xs = tuple(sorted(rng.sample(pool, k)))
    t = Word(rng.sample(pool, t_len))
    return WordSystem(tuple(_sd(t, Word.raw((x,))) for x in xs)), xs


def random_exceptional_system(rng, letters=range(1, 40), t_len: int = 5) -> tuple[WordSystem, tuple]:
    """w_i = t + {x_i} for i <= 3 and w_4 = w_1 + w_2 + w_3."""
    pool = list(letters)
    xs = tuple(rng.sample(pool, 3))
    t = Word(rng.sample(pool, t_len))
    ws = [_sd(t, Word.raw((x,))) for x in xs]
    ws.append(_sd(_sd(ws[0], ws[1]), ws[2]))
    return WordSystem(tuple(ws)), xs


__all__ = [
    "NeighborhoodSpec", "pair_sums", "neighborhood_trace", "even_sphere_trace",
    "Letters", "ExceptionalK4", "NotApplicable", "WordSystem", "two_words_decompose",
    "verify_letters", "exceptional_sums", "c_set_from_coloring", "c4_set_from_coloring",
    "QUADRUPLE_PALETTE", "ARRANGEMENT_PALETTE", "b4_quadruple_coloring",
    "b4_arrangement_coloring", "trace_containment_check", "random_translated_system",
    "random_exceptional_system",
]

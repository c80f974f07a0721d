"""Arithmetic and finite windows for the three concrete group families.

Elements are plain Python values:

* integers for the additive group of integers,
* :class:`Word` (a sorted tuple of integer letters) for the free Boolean
  group B(Z) under symmetric difference,
* :class:`FreeWord` (a freely reduced tuple of signed generator indices,
  ``1 = a``, ``-1 = a^-1``, ``2 = b`` ...) for free groups of small rank.

All values are immutable, so contexts and elements can be shared freely.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Union

from .errors import FamilyMismatch, WindowTooLarge

DEFAULT_WINDOW_CAP = 10**6

# Reserved letter for the non-isolated point * of X_F.  It sorts after every
# integer letter a window can hold.
STAR = 2**63 - 1

GENERATOR_NAMES = "abcdefghij"


def window_cap() -> int:
    env = os.environ.get("LARGESET_BUDGET_CAP")
    return int(env) if env else DEFAULT_WINDOW_CAP


class Word(tuple):
    """A word of B(Z): finite set of letters kept strictly increasing."""

    __slots__ = ()

    def __new__(cls, letters=()):
        return tuple.__new__(cls, sorted(set(letters)))

    @classmethod
    def raw(cls, letters) -> "Word":
        # caller guarantees strictly increasing letters
        return tuple.__new__(cls, letters)

    def __repr__(self):
        return "Word(" + format_word(self) + ")"


class FreeWord(tuple):
    """A freely reduced word over generators ``1..rank`` and their inverses."""

    __slots__ = ()

    def __new__(cls, letters=()):
        out: list[int] = []
        for x in letters:
            if x == 0:
                raise ValueError("generator index 0 is not allowed")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple.__new__(cls, out)

    @classmethod
    def raw(cls, letters) -> "FreeWord":
        return tuple.__new__(cls, letters)

    def __repr__(self):
        return "FreeWord(" + format_free_word(self) + ")"


Element = Union[int, Word, FreeWord]


def format_word(w) -> str:
    return "{" + ",".join("*" if x == STAR else str(x) for x in w) + "}"


def format_free_word(w) -> str:
    if not w:
        return "e"
    parts = []
    for x in w:
        name = GENERATOR_NAMES[abs(x) - 1]
        parts.append(name if x > 0 else name + "^-1")
    return "".join(parts)


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > 0 or self.hi < 0:
            raise ValueError("an integer window must contain 0")

    def __str__(self):
        return f"int:{self.lo}..{self.hi}"


@dataclass(frozen=True)
class BooleanBall:
    max_len: int
    letter_lo: int
    letter_hi: int

    def __post_init__(self):
        if self.max_len < 0 or self.letter_hi < self.letter_lo - 1:
            raise ValueError(f"bad Boolean ball {self!r}")

    @property
    def letters(self) -> range:
        return range(self.letter_lo, self.letter_hi + 1)

    def __str__(self):
        return f"bool:{self.max_len}:{self.letter_lo}..{self.letter_hi}"


@dataclass(frozen=True)
class FreeBall:
    max_len: int

    def __post_init__(self):
        if self.max_len < 0:
            raise ValueError("negative radius")

    def __str__(self):
        return f"free:{self.max_len}"


Window = Union[IntRange, BooleanBall, FreeBall]

_WINDOW_RE = {
    "int": re.compile(r"^int:(-?\d+)\.\.(-?\d+)$"),
    "bool": re.compile(r"^bool:(\d+):(-?\d+)\.\.(-?\d+)$"),
    "free": re.compile(r"^free:(\d+)$"),
}


def parse_window(text: str) -> Window:
    """Parse ``int:LO..HI``, ``bool:MAXLEN:LO..HI`` or ``free:MAXLEN``."""
    text = text.strip()
    for kind, rx in _WINDOW_RE.items():
        m = rx.match(text)
        if not m:
            continue
        nums = [int(v) for v in m.groups()]
        if kind == "int":
            return IntRange(*nums)
        if kind == "bool":
            return BooleanBall(*nums)
        return FreeBall(*nums)
    raise ValueError(f"cannot parse window spec {text!r}")


def intersect_windows(a: Window | None, b: Window | None) -> Window | None:
    if a is None:
        return b
    if b is None:
        return a
    if type(a) is not type(b):
        raise FamilyMismatch(f"cannot intersect {a} and {b}")
    if isinstance(a, IntRange):
        return IntRange(max(a.lo, b.lo), min(a.hi, b.hi))
    if isinstance(a, BooleanBall):
        return BooleanBall(
            min(a.max_len, b.max_len),
            max(a.letter_lo, b.letter_lo),
            min(a.letter_hi, b.letter_hi),
        )
    return FreeBall(min(a.max_len, b.max_len))


def shrink_window(w: Window, pad: int) -> Window:
    """Inner window obtained by trimming ``pad`` from the boundary."""
    if pad <= 0:
        return w
    if isinstance(w, IntRange):
        lo, hi = min(w.lo + pad, 0), max(w.hi - pad, 0)
        return IntRange(lo, hi)
    if isinstance(w, BooleanBall):
        return BooleanBall(max(w.max_len - pad, 0), w.letter_lo, w.letter_hi)
    return FreeBall(max(w.max_len - pad, 0))


# ---------------------------------------------------------------------------
# group contexts


class Group:
    """Common interface of the concrete group families."""

    family: str = ""
    identity: Element

    def check(self, g) -> None:
        raise NotImplementedError

    def op(self, g, h):
        self.check(g)
        self.check(h)
        return self.mul(g, h)

    def mul(self, g, h):
        """Unchecked product, used in hot loops."""
        raise NotImplementedError

    def inverse(self, g):
        raise NotImplementedError

    def key(self, g):
        """Sort key for the canonical element order."""
        raise NotImplementedError

    def format(self, g) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def window_size(self, w: Window) -> int:
        raise NotImplementedError

    def _iter_window(self, w: Window) -> Iterator:
        raise NotImplementedError

    def check_window(self, w: Window) -> None:
        raise NotImplementedError

    def enumerate(self, w: Window, cap: int | None = None) -> list:
        self.check_window(w)
        cap = window_cap() if cap is None else cap
        size = self.window_size(w)
        if size > cap:
            raise WindowTooLarge(f"window {w} has {size} elements (cap {cap})")
        return list(self._iter_window(w))

    def in_window(self, g, w: Window) -> bool:
        raise NotImplementedError

    def sorted(self, items) -> list:
        return sorted(items, key=self.key)


@dataclass(frozen=True)
class IntegerGroup(Group):
    family = "integer"
    identity = 0

    def check(self, g):
        if type(g) is not int:
            raise FamilyMismatch(f"{g!r} is not an integer")

    def mul(self, g, h):
        return g + h

    def inverse(self, g):
        self.check(g)
        return -g

    def key(self, g):
        # nonnegatives ascending, then negatives by absolute value
        return (g < 0, abs(g))

    def format(self, g):
        return str(g)

    def parse(self, text):
        return int(text)

    def check_window(self, w):
        if not isinstance(w, IntRange):
            raise FamilyMismatch(f"{w} is not an integer window")

    def window_size(self, w):
        return w.hi - w.lo + 1

    def _iter_window(self, w):
        yield from range(0, w.hi + 1)
        yield from range(-1, w.lo - 1, -1)

    def in_window(self, g, w):
        return w.lo <= g <= w.hi


@dataclass(frozen=True)
class BooleanGroup(Group):
    family = "boolean"
    identity = Word.raw(())

    def check(self, g):
        if not isinstance(g, Word):
            raise FamilyMismatch(f"{g!r} is not a Boolean word")

    def mul(self, g, h):
        if not g:
            return h
        if not h:
            return g
        return Word.raw(tuple(sorted(set(g).symmetric_difference(h))))

    def inverse(self, g):
        self.check(g)
        return g

    def key(self, g):
        return (len(g), tuple(g))

    def format(self, g):
        return format_word(g)

    def parse(self, text):
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"not a word: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return self.identity
        return Word(STAR if t.strip() == "*" else int(t) for t in body.split(","))

    def check_window(self, w):
        if not isinstance(w, BooleanBall):
            raise FamilyMismatch(f"{w} is not a Boolean window")

    def window_size(self, w):
        n = len(w.letters)
        return sum(comb(n, k) for k in range(w.max_len + 1))

    def _iter_window(self, w):
        letters = list(w.letters)
        for k in range(w.max_len + 1):
            for c in combinations(letters, k):
                yield Word.raw(c)

    def in_window(self, g, w):
        return len(g) <= w.max_len and all(w.letter_lo <= x <= w.letter_hi for x in g)


@dataclass(frozen=True)
class FreeGroup(Group):
    rank: int = 2
    family = "free"
    identity = FreeWord.raw(())

    def __post_init__(self):
        if not 1 <= self.rank <= len(GENERATOR_NAMES):
            raise ValueError(f"free group rank must be in 1..{len(GENERATOR_NAMES)}")

    def check(self, g):
        if not isinstance(g, FreeWord) or any(abs(x) > self.rank for x in g):
            raise FamilyMismatch(f"{g!r} is not a word of the rank-{self.rank} free group")

    def mul(self, g, h):
        i = 0
        n = min(len(g), len(h))
        while i < n and g[-1 - i] == -h[i]:
            i += 1
        return FreeWord.raw(g[: len(g) - i] + h[i:])

    def inverse(self, g):
        self.check(g)
        return FreeWord.raw(tuple(-x for x in reversed(g)))

    @staticmethod
    def _letter_rank(x):
        return 2 * (abs(x) - 1) + (x < 0)

    def key(self, g):
        return (len(g), tuple(self._letter_rank(x) for x in g))

    def format(self, g):
        return format_free_word(g)

    def parse(self, text):
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        out = []
        for m in re.finditer(r"([a-j])(\^-1)?", text):
            idx = GENERATOR_NAMES.index(m.group(1)) + 1
            out.append(-idx if m.group(2) else idx)
        if "".join(m.group(0) for m in re.finditer(r"([a-j])(\^-1)?", text)) != text:
            raise ValueError(f"not a free word: {text!r}")
        g = FreeWord(out)
        self.check(g)
        return g

    def check_window(self, w):
        if not isinstance(w, FreeBall):
            raise FamilyMismatch(f"{w} is not a free-group window")

    def window_size(self, w):
        # 1 + 2r + 2r(2r-1) + ...
        total, layer = 1, 2 * self.rank
        for _ in range(w.max_len):
            total += layer
            layer *= 2 * self.rank - 1
        return total

    def _letters(self):
        out = []
        for i in range(1, self.rank + 1):
            out += [i, -i]
        return out

    def _iter_window(self, w):
        letters = self._letters()
        layer = [()]
        yield self.identity
        for _ in range(w.max_len):
            nxt = []
            for g in layer:
                for x in letters:
                    if g and g[-1] == -x:
                        continue
                    h = g + (x,)
                    nxt.append(h)
                    yield FreeWord.raw(h)
            layer = nxt

    def in_window(self, g, w):
        return len(g) <= w.max_len


def group_for_window(w: Window, rank: int = 2) -> Group:
    if isinstance(w, IntRange):
        return IntegerGroup()
    if isinstance(w, BooleanBall):
        return BooleanGroup()
    return FreeGroup(rank)


def group_from_name(name: str) -> Group:
    name = name.strip().lower()
    if name in ("integer", "int", "z"):
        return IntegerGroup()
    if name in ("boolean", "bool"):
        return BooleanGroup()
    m = re.match(r"^free(?::|\()?(\d+)?\)?$", name)
    if m:
        return FreeGroup(int(m.group(1) or 2))
    raise ValueError(f"unknown group family {name!r}")


# module-level spellings of the core operations


def op(ctx: Group, g, h):
    return ctx.op(g, h)


def inverse(ctx: Group, g):
    return ctx.inverse(g)


def enumerate_window(ctx: Group, w: Window, cap: int | None = None) -> list:
    return ctx.enumerate(w, cap)


def word_length(g) -> int:
    if isinstance(g, (Word, FreeWord)):
        return len(g)
    raise FamilyMismatch(f"{g!r} has no word length")

"""Slow exhaustive reference computations.

These share no search code with the solvers: they enumerate subsets or
assignments directly, and exist to cross-check the fast paths in the
verification suites and the tests.
"""
from __future__ import annotations

from itertools import combinations

from .groups import Word
from .sets import SetSpec


def independence_number(adj: list[int]) -> int:
    """Maximum independent set size by a table over all vertex subsets (n <= 22 or so)."""
    n = len(adj)
    ok = bytearray(1 << n)
    ok[0] = 1
    best = 0
    for m in range(1, 1 << n):
        v = m.bit_length() - 1
        rest = m ^ (1 << v)
        if ok[rest] and not (adj[v] & rest):
            ok[m] = 1
            best = max(best, bin(m).count("1"))
    return best


def clique_number(adj: list[int]) -> int:
    n = len(adj)
    full = (1 << n) - 1
    comp = [full & ~a & ~(1 << i) for i, a in enumerate(adj)]
    return independence_number(comp)


def max_homogeneous_letters(A: SetSpec, letters) -> int:
    """Largest B among the letters with every {x, y}, x != y in B, a member of A."""
    letters = sorted(set(letters))
    n = len(letters)
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if A.membership(Word.raw((letters[i], letters[j]))):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return clique_number(adj)


def decompose_letters(words) -> tuple | None:
    """Lexicographically first x_1..x_k over the letters in play with
    w_i + w_j = {x_i, x_j} for all i < j, or None."""
    words = [Word(w) for w in words]
    k = len(words)
    support = sorted(set().union(*map(set, words))) or [0]
    sums = {}
    for i, j in combinations(range(k), 2):
        sums[(i, j)] = set(words[i]).symmetric_difference(words[j])
    xs: list[int] = []

    def rec() -> bool:
        i = len(xs)
        if i == k:
            return True
        for x in support:
            if all(sums[(h, i)] == {xs[h], x} and xs[h] != x for h in range(i)):
                xs.append(x)
                if rec():
                    return True
                xs.pop()
        return False

    return tuple(xs) if rec() else None


def is_exceptional_quadruple(words) -> bool:
    """Four words summing to zero (so each is the sum of the other three)."""
    if len(words) != 4:
        return False
    acc: set = set()
    for w in words:
        acc ^= set(w)
    return not acc


def fermat_cube_solutions(n: int) -> list[tuple[int, int, int]]:
    """All x^3 + y^3 = z^3 with 1 <= x <= y and z <= n, by direct enumeration."""
    cubes = {z**3: z for z in range(1, n + 1)}
    out = []
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            z = cubes.get(x**3 + y**3)
            if z is not None:
                out.append((x, y, z))
    return out


def monochromatic_triangles(coloring) -> list:
    """Triples of vertices with all three pairs of one color, by full enumeration."""
    out = []
    for a, b, c in combinations(coloring.vertices, 3):
        if coloring.color(a, b) == coloring.color(b, c) == coloring.color(a, c):
            out.append((a, b, c))
    return out

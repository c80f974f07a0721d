"""Exact branch-and-bound searches on bitset graphs.

Graphs are lists of Python ints: bit j of ``adj[i]`` is set iff i ~ j.
Vertex indices are assumed to follow the canonical element order, and every
search returns the lexicographically least optimum (as a sorted index list),
so results do not depend on anything but the input.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExhausted

DEFAULT_BUDGET = 2_000_000


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def complement_graph(adj: list[int]) -> list[int]:
    n = len(adj)
    full = (1 << n) - 1
    return [full & ~a & ~(1 << i) for i, a in enumerate(adj)]


def _color_bound(P: int, adj: list[int]) -> int:
    """Number of colors in a greedy coloring of the subgraph induced on P."""
    colors = 0
    while P:
        colors += 1
        Q = P
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            P &= ~low
            Q &= ~adj[v] & ~low
    return colors


@dataclass
class _Counter:
    budget: int
    nodes: int = 0

    def tick(self, best):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"search exceeded {self.budget} nodes", best)


def max_clique(adj: list[int], candidates: int | None = None, *, target: int | None = None,
               budget: int = DEFAULT_BUDGET) -> list[int]:
    """Lexicographically least maximum clique.

    With ``target`` the search stops at the first (lexicographically least)
    clique of that size, or returns the maximum clique if it is smaller.
    Raises :class:`BudgetExhausted` with the best clique so far in ``best``.
    """
    n = len(adj)
    P0 = (1 << n) - 1 if candidates is None else candidates
    best: list[int] = []
    R: list[int] = []
    counter = _Counter(budget)

    class _Done(Exception):
        pass

    def expand(P: int) -> None:
        nonlocal best
        counter.tick(best)
        if len(R) > len(best):
            best = R.copy()
            if target is not None and len(best) >= target:
                raise _Done
        if not P:
            return
        if len(R) + popcount(P) <= len(best):
            return
        if len(R) + _color_bound(P, adj) <= len(best):
            return
        while P:
            if len(R) + popcount(P) <= len(best):
                return
            low = P & -P
            v = low.bit_length() - 1
            R.append(v)
            expand(P & adj[v])
            R.pop()
            P ^= low

    try:
        expand(P0)
    except _Done:
        pass
    return best


def max_independent_set(adj: list[int], *, target: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> list[int]:
    return max_clique(complement_graph(adj), target=target, budget=budget)


def _has_clique(adj: list[int], P: int, size: int) -> bool:
    if size <= 0:
        return True
    if popcount(P) < size:
        return False
    if size == 1:
        return P != 0
    return len(max_clique(adj, P, target=size)) >= size


def _clique_cover_bound(P: int, adj: list[int], cap: int, S: int = 0) -> int:
    """Greedy partition of P into cliques; each clique Q contributes at most
    ``cap`` minus the largest clique of S joined to all of Q."""
    total = 0
    while P:
        low = P & -P
        v = low.bit_length() - 1
        size = 1
        P ^= low
        cand = P & adj[v]
        common = S & adj[v]
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            size += 1
            P ^= low
            cand &= adj[u]
            common &= adj[u]
        room = cap
        if common:
            room -= len(max_clique(adj, common, target=cap))
        total += max(0, min(size, room))
    return total


def max_kn_free_subset(adj: list[int], n: int, *, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Largest vertex subset whose induced subgraph contains no n-clique.

    For n = 2 this is a maximum independent set.  The bound partitions the
    undecided vertices into cliques, each of which can contribute at most n-1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    N = len(adj)
    if n == 1:
        return []
    best: list[int] = []
    chosen: list[int] = []
    counter = _Counter(budget)

    def search(S: int, rest: int) -> None:
        nonlocal best
        counter.tick(best)
        if len(chosen) > len(best):
            best = chosen.copy()
        if not rest:
            return
        if len(chosen) + popcount(rest) <= len(best):
            return
        if len(chosen) + _clique_cover_bound(rest, adj, n - 1, S) <= len(best):
            return
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if not _has_clique(adj, S & adj[v], n - 1):
            chosen.append(v)
            S2 = S | low
            # drop vertices that would now close an n-clique
            keep = rest
            for u in bits(rest & adj[v]):
                if _has_clique(adj, S2 & adj[u], n - 1):
                    keep &= ~(1 << u)
            search(S2, keep)
            chosen.pop()
        search(S, rest)

    search(0, (1 << N) - 1)
    return best


def min_set_cover(covers: list[int], universe: int, kmax: int, *,
                  budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Lexicographically least minimum cover of ``universe`` by the masks in ``covers``.

    Returns candidate indices, or None when no cover of size <= kmax exists.
    Iterative deepening on the size; each depth is a lexicographic DFS pruned
    by a suffix-reachability test and a disjoint-target packing bound.
    """
    m = len(covers)
    if not universe:
        return []
    # covered_by[t] = candidates covering target t
    covered_by: dict[int, int] = {}
    for j, c in enumerate(covers):
        for t in bits(c & universe):
            covered_by[t] = covered_by.get(t, 0) | (1 << j)
    if any(t not in covered_by for t in bits(universe)):
        return None
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] | covers[j]
    counter = _Counter(budget)

    def packing(U: int, avail: int) -> int:
        used = 0
        count = 0
        for t in bits(U):
            cb = covered_by[t] & avail
            if not cb & used:
                count += 1
                used |= cb
        return count

    def lower_bound(U: int, start: int) -> int:
        avail = ((1 << m) - 1) >> start << start
        best_single = max((popcount(covers[j] & U) for j in bits(avail)), default=0)
        if best_single == 0:
            return m + 1
        by_size = -(-popcount(U) // best_single)
        return max(by_size, packing(U, avail))

    chosen: list[int] = []

    def dfs(U: int, start: int, slots: int) -> bool:
        counter.tick(None)
        if not U:
            return True
        if slots == 0 or start >= m:
            return False
        if U & ~suffix[start]:
            return False
        if lower_bound(U, start) > slots:
            return False
        for j in range(start, m):
            if U & ~suffix[j]:
                return False
            if not covers[j] & U:
                continue
            chosen.append(j)
            if dfs(U & ~covers[j], j + 1, slots - 1):
                return True
            chosen.pop()
        return False

    k0 = max(1, lower_bound(universe, 0))
    for k in range(k0, kmax + 1):
        chosen.clear()
        if dfs(universe, 0, k):
            return list(chosen)
    return None

"""The quotient graph of a set on a window, and DIMACS import/export.

Vertices are the window elements in canonical order; {x, y} is an edge iff
both x^-1 y and y^-1 x lie in A.  Fatness questions about A on the window
become independence questions about this graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

from .groups import Group, Window
from .sets import FiniteSet, SetSpec


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    ctx: Group
    vertices: tuple
    adj: tuple  # bitsets, one per vertex
    set_name: str = ""

    @classmethod
    def build(cls, A: SetSpec, w: Window | FiniteSet) -> "QuotientGraph":
        ctx = A.ctx
        verts = tuple(w) if isinstance(w, FiniteSet) else tuple(ctx.enumerate(w))
        return cls(ctx, verts, tuple(quotient_adjacency(A, verts)), A.name)

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        for i, a in enumerate(self.adj):
            for j in _bits(a >> (i + 1) << (i + 1)):
                yield i, j

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def subset(self, indices) -> FiniteSet:
        return FiniteSet(self.ctx, (self.vertices[i] for i in indices))


def quotient_adjacency(A: SetSpec, verts) -> list[int]:
    ctx = A.ctx
    n = len(verts)
    adj = [0] * n
    cache: dict = {}

    def good(q) -> bool:
        r = cache.get(q)
        if r is None:
            r = bool(A.membership(q))
            cache[q] = r
        return r

    boolean = ctx.family == "boolean"
    invs = [ctx.inverse(x) for x in verts]
    for i in range(n):
        xi = invs[i]
        row = 0
        for j in range(i + 1, n):
            q = ctx.mul(xi, verts[j])
            if not good(q):
                continue
            if not boolean and not good(ctx.inverse(q)):
                continue
            row |= 1 << j
        adj[i] |= row
        for j in _bits(row):
            adj[j] |= 1 << i
    return adj


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def write_dimacs(g: QuotientGraph, out: TextIO, comments=()) -> None:
    """DIMACS undirected graph: ``p edge N M`` then ``e u v`` with 1-based vertices."""
    for c in comments:
        for line in str(c).splitlines():
            out.write(f"c {line}\n")
    for i, v in enumerate(g.vertices, 1):
        out.write(f"c vertex {i} {g.ctx.format(v)}\n")
    edges = list(g.edges())
    out.write(f"p edge {len(g.vertices)} {len(edges)}\n")
    for i, j in edges:
        out.write(f"e {i + 1} {j + 1}\n")


def read_dimacs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse a DIMACS edge file into (vertex count, 0-based edge list)."""
    n = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            n = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if n is None:
        raise ValueError("missing 'p edge' header")
    return n, edges

"""Acceptance criteria 1-14, each timed and checked against an independent computation.

Every test prints one PASS/FAIL line, and the terminal summary lists them all.
"""
import json
import random
from itertools import combinations
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from largeset import cli
from largeset.analysis import subgroup_in_thick, thick_delta_representation
from largeset.boolean_topo import (
    ARRANGEMENT_PALETTE,
    QUADRUPLE_PALETTE,
    ExceptionalK4,
    Letters,
    WordSystem,
    b4_arrangement_coloring,
    b4_quadruple_coloring,
    c_set_from_coloring,
    random_exceptional_system,
    random_translated_system,
    trace_containment_check,
    two_words_decompose,
)
from largeset.catalog import build, make_coset, make_cube_gap_complement, make_ends_with_a, make_length_filtered
from largeset.groups import BooleanBall, BooleanGroup, FreeBall, FreeGroup, FreeWord, IntegerGroup, IntRange, Word
from largeset.largeness import check_3fat_cover, default_probes, fatness, is_thick_on, kappa_fat_check, syndeticity_index
from largeset.oracles import clique_number, decompose_letters, fermat_cube_solutions, is_exceptional_quadruple
from largeset.ramsey import FilterBase, PairColoring, max_homogeneous_letter_set, ramsey_bound_search
from largeset.sets import FiniteSet, from_finite, left_quotient, right_quotient, whole_group
from largeset.suites import edm_fixtures, fat_fixtures, planted_colorings, planted_one_homogeneous, \
    random_3fat_hypothesis_set, thick_fixtures

FIXTURES = Path(__file__).parent / "fixtures"
ZZ, BZ, F2 = IntegerGroup(), BooleanGroup(), FreeGroup(2)


# --- independent helpers -------------------------------------------------

def good_pair_matrix(elems, inv, mul, member):
    """M[i, j] = both x_i^-1 x_j and x_j^-1 x_i lie in A, computed pair by pair."""
    n = len(elems)
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j and member(mul(inv(elems[i]), elems[j])) and member(mul(inv(elems[j]), elems[i])):
                M[i, j] = 1
    return M


def triangle_count(N):
    """Triangles of a simple graph from trace(N^3) / 6."""
    N = np.asarray(N, dtype=np.int64)
    return int(np.trace(N @ N @ N)) // 6


def alpha_if_cluster(M):
    """Independence number of a graph that is a disjoint union of cliques (asserted)."""
    G = nx.from_numpy_array(np.asarray(M))
    comps = list(nx.connected_components(G))
    for c in comps:
        k = len(c)
        assert G.subgraph(c).number_of_edges() == k * (k - 1) // 2, "component is not a clique"
    return len(comps)


def is_cube(n):
    if n <= 0:
        return False
    r = round(n ** (1 / 3))
    return any((r + t) ** 3 == n for t in (-1, 0, 1))


def free_reduce(s):
    out = []
    for ch in s:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def free_inv(s):
    return "".join(ch.swapcase() for ch in reversed(s))


def to_str(g):
    return "".join({1: "a", -1: "A", 2: "b", -2: "B"}[x] for x in g)


# --- criteria ------------------------------------------------------------

def test_c01_fatness_of_subgroups(criterion):
    with criterion(1, "fatness(dZ) = d+1 on int:-50..50 for d = 2..5", 5).timed():
        W = IntRange(-50, 50)
        elems = list(range(-50, 51))
        for d in (2, 3, 4, 5):
            rep = fatness(make_coset(d), W)
            M = good_pair_matrix(elems, lambda x: -x, lambda x, y: x + y, lambda x: x % d == 0)
            assert rep.value == d + 1 == alpha_if_cluster(M) + 1


def test_c02_whole_group_fatness(criterion):
    with criterion(2, "whole-group fatness is 2 on every family", 1).timed():
        for ctx, w in [(ZZ, IntRange(-20, 20)), (BZ, BooleanBall(2, 0, 5)), (F2, FreeBall(3))]:
            rep = fatness(whole_group(ctx), w)
            assert rep.value == 2 and len(rep.counterexample) == 1


def test_c03_cube_gap(criterion):
    with criterion(3, "cube-gap set is 3-fat with fatness 3 on bool:2:-12..12", 60).timed():
        A = make_cube_gap_complement()
        w = BooleanBall(2, -12, 12)
        rep = fatness(A, w)
        assert rep.value == 3

        def member(g):
            return not (len(g) == 2 and is_cube(g[1] - g[0]))

        elems = [()] + [(x,) for x in range(-12, 13)] + list(combinations(range(-12, 13), 2))
        sd = lambda x, y: tuple(sorted(set(x) ^ set(y)))
        M = good_pair_matrix(elems, lambda x: x, sd, member)
        bad = 1 - M
        np.fill_diagonal(bad, 0)
        assert bad.sum() > 0  # some pair fails, so fatness is not 2
        assert triangle_count(bad) == 0  # no a, b, c violate 3-fatness
        assert fermat_cube_solutions(24) == []
        assert not any(x**3 + y**3 == z**3 for x in range(1, 25) for y in range(1, 25) for z in range(1, 25))


def test_c04_fat_implies_syndetic(criterion):
    with criterion(4, "syndeticity index below fatness on 20+ fat catalog sets", 60).timed():
        fixtures = fat_fixtures()
        assert len(fixtures) >= 20
        for A, w in fixtures:
            f = fatness(A, w)
            s = syndeticity_index(A, w, 0, f.value)
            assert s.holds and s.value < f.value, A.name
            ctx = A.ctx
            F = list(s.witness)
            for x in ctx.enumerate(w):
                assert any(A.membership(ctx.mul(ctx.inverse(f_), x)) for f_ in F)


def test_c05_quotients(criterion):
    with criterion(5, "left quotients of r+dZ have fatness <= d+1; right quotients of thick sets cover", 30).timed():
        W, inner = IntRange(-30, 30), IntRange(-15, 15)
        elems = list(range(-15, 16))
        for d in range(1, 6):
            for r in range(d):
                sample = FiniteSet(ZZ, (x for x in range(-30, 31) if (x - r) % d == 0))
                Q = left_quotient(sample)
                rep = fatness(from_finite(Q), inner)
                qs = set(Q)
                M = good_pair_matrix(elems, lambda x: -x, lambda x, y: x + y, qs.__contains__)
                assert rep.value == alpha_if_cluster(M) + 1 <= d + 1
        for A, w, inner_w in thick_fixtures():
            ctx = A.ctx
            sample = [g for g in ctx.enumerate(w) if A.membership(g)]
            RQ = {ctx.mul(a, ctx.inverse(b)) for a in sample for b in sample}
            assert set(ctx.enumerate(inner_w)) <= RQ, A.name
            assert set(ctx.enumerate(inner_w)) <= set(right_quotient(FiniteSet(ctx, sample)))


def test_c06_ends_with_a(criterion):
    with criterion(6, "ends_with_a is thick on free:6 and A^-1A meets F^-1F only in e", 10).timed():
        A = make_ends_with_a()
        w = FreeBall(6)
        for P in default_probes(F2, w, radius=1) + default_probes(F2, w, radius=2):
            g = is_thick_on(A, P, w)
            assert g is not None
            assert all(free_reduce(to_str(p) + to_str(g)).endswith("a") for p in P)
        words = [to_str(g) for g in F2.enumerate(w)]
        sample = [s for s in words if s.endswith("a")]
        AA = {free_reduce(free_inv(x) + y) for x in sample for y in sample}
        FF = {free_reduce(free_inv("b" * i) + "b" * j) for i in range(1, 5) for j in range(1, 5)}
        assert AA & FF == {""}
        lib = left_quotient(FiniteSet(F2, (FreeWord([2] * n) for n in range(1, 5))))
        assert {to_str(g) for g in lib} == FF


def test_c07_three_fat_cover(criterion):
    with criterion(7, "100 random S with S+S, -S-S outside S give 3-fat complements", 30).timed():
        rng = random.Random(7)
        W = IntRange(-30, 30)
        elems = list(range(-30, 31))
        for _ in range(100):
            S = random_3fat_hypothesis_set(rng)
            assert all(a + b not in S and -a - b not in S for a in S for b in S)
            rep = check_3fat_cover(from_finite(FiniteSet(ZZ, S)), W)
            assert rep.extra["hypothesis"] and rep.holds is True
            M = good_pair_matrix(elems, lambda x: -x, lambda x, y: x + y, lambda x: x not in S)
            bad = 1 - M
            np.fill_diagonal(bad, 0)
            assert triangle_count(bad) == 0


def test_c08_two_words(criterion):
    with criterion(8, "1000 translated systems and 100 exceptional quadruples match the oracle", 30).timed():
        rng = random.Random(8)
        mismatches = 0
        for _ in range(1000):
            k = rng.randint(1, 12)
            ws, xs = random_translated_system(rng, k)
            got = two_words_decompose(ws)
            ref = decompose_letters(ws.words)
            if not (isinstance(got, Letters) and got.letters == ref):
                mismatches += 1
        for _ in range(100):
            ws, _xs = random_exceptional_system(rng)
            order = rng.sample(range(4), 4)
            ws = WordSystem(tuple(ws.words[i] for i in order))
            got = two_words_decompose(ws)
            if not (isinstance(got, ExceptionalK4) and decompose_letters(ws.words) is None
                    and is_exceptional_quadruple(ws.words)):
                mismatches += 1
        assert mismatches == 0


def test_c09_ramsey(criterion):
    with criterion(9, "R(3,3) = 6 and the stored pentagon coloring has no monochromatic triangle", 10).timed():
        res = ramsey_bound_search(2, 3, 6)
        assert res.value == 6 and res.decided
        c = PairColoring.from_json(json.loads((FIXTURES / "pentagon_k5.json").read_text()))
        for col in (0, 1):
            N = np.zeros((5, 5), dtype=np.int64)
            for x, y in combinations(range(5), 2):
                N[x, y] = N[y, x] = c.color(x, y) == col
            assert triangle_count(N) == 0
        # the witness from the search is a triangle-free 2-coloring of K5 as well
        w = res.witness
        assert len(w) == 5
        assert not any(w.color(a, b) == w.color(b, c_) == w.color(a, c_) for a, b, c_ in combinations(range(5), 3))


def test_c10_letter_sets(criterion):
    with criterion(10, "largest homogeneous letter sets match exhaustive search on 20 fixtures", 60).timed():
        rng = random.Random(10)
        for A in edm_fixtures(rng, 20):
            letters = list(range(A.provenance["letters"]))
            assert len(letters) <= 18
            got = max_homogeneous_letter_set(A, letters)
            n = len(letters)
            adj = [0] * n
            for i, j in combinations(range(n), 2):
                if A.membership(Word.raw((letters[i], letters[j]))):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            assert got.value == clique_number(adj)
            assert all(A.membership(Word.raw(p)) for p in combinations(got.witness, 2))


def test_c11_b2_traces(criterion):
    with criterion(11, "trace containment certifies planted sets; k-fatness counterexamples found", 30).timed():
        rng = random.Random(11)
        for _ in range(20):
            c, decoys, P = planted_colorings(rng)
            rep = trace_containment_check(c_set_from_coloring(c), FilterBase(tuple(decoys) + (tuple(P),)), 1)
            assert rep.holds is True and tuple(rep.witness) == tuple(P)
        for t in range(20):
            k = (3, 5, 6)[t % 3]
            c, base, P = planted_one_homogeneous(rng, k)
            assert not any(c.is_homogeneous(S, 0) for S in base)
            Cp = c_set_from_coloring(c)
            assert trace_containment_check(Cp, base, 1).holds is False
            singles = FiniteSet(BZ, (Word.raw((x,)) for x in c.vertices))
            rep = kappa_fat_check(Cp, singles, k)
            seq = [g[0] for g in rep.counterexample]
            assert rep.holds is False and len(seq) == k
            assert all(c.color(x, y) == 1 for x, y in combinations(seq, 2))


def random_b4_pair(rng):
    pool = rng.sample(range(-30, 30), 6)
    shared, own_i, own_j = pool[:2], pool[2:4], pool[4:6]
    return Word(shared + own_i), Word(shared + own_j)


def test_c12_b4_colorings(criterion):
    with criterion(12, "b4 palettes have sizes 36 and 6 and colors survive order-preserving relabeling", 10).timed():
        assert len(set(QUADRUPLE_PALETTE)) == 36 and len(set(ARRANGEMENT_PALETTE)) == 6
        rng = random.Random(12)
        for _ in range(1000):
            wi, wj = random_b4_pair(rng)
            q, a = b4_quadruple_coloring(wi, wj), b4_arrangement_coloring(wi, wj)
            assert q in QUADRUPLE_PALETTE and a in ARRANGEMENT_PALETTE
            # swapping the words swaps the halves and complements the arrangement
            assert b4_quadruple_coloring(wj, wi) == q[2:] + q[:2]
            assert set(b4_arrangement_coloring(wj, wi)) == {1, 2, 3, 4} - set(a)
            scale, shift = rng.randint(1, 5), rng.randint(-50, 50)
            f = lambda x: scale * x + shift
            vi, vj = Word(map(f, wi)), Word(map(f, wj))
            assert b4_quadruple_coloring(vi, vj) == q and b4_arrangement_coloring(vi, vj) == a


def test_c13_thick_representations(criterion):
    with criterion(13, "quotient sequences of length >= 10 with coverage >= 0.5; a 4-element subgroup", 30).timed():
        cases = [
            (build("length_filtered", {"min_length": 2}), BooleanBall(2, 1, 10)),
            (build("length_filtered", {"intervals": [(2, 4)], "min_length": 6}), BooleanBall(2, 1, 10)),
            (make_cube_gap_complement(), BooleanBall(2, -6, 6)),
        ]
        for T, w in cases:
            rep = thick_delta_representation(T, w, 12)
            assert len(rep.sequence) >= 10 and rep.coverage >= 0.5, (T.name, rep.coverage)
            for x, y in combinations(rep.sequence, 2):
                assert T.membership(BZ.mul(x, y))
        even = make_length_filtered(lambda n: n % 2 == 0, "even_length")
        H = subgroup_in_thick(even, BooleanBall(2, 1, 10), 4)
        assert H is not None and len(H) == 4
        for x, y in combinations(H, 2):
            assert BZ.mul(x, y) in H and len(x) % 2 == 0


def test_c14_determinism(criterion, tmp_path):
    with criterion(14, "two eval runs with the same config and seed give identical reports", None).timed():
        cfg = FIXTURES / "determinism.cfg"
        outs = []
        for run in ("a", "b"):
            d = tmp_path / run
            assert cli.main(["eval", "--config", str(cfg), "--out", str(d)]) == 0
            doc = json.loads((d / "determinism.json").read_text())
            doc.pop("generated_at")
            outs.append((json.dumps(doc, sort_keys=True), (d / "determinism.csv").read_bytes()))
        assert outs[0] == outs[1]

"""Named verification suites run by ``largeset verify``.

Each check carries the mathematical statement it exercises, so the output
says what was tested without needing any outside reference.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import oracles
from .boolean_topo import (
    ExceptionalK4,
    Letters,
    WordSystem,
    c_set_from_coloring,
    random_exceptional_system,
    random_translated_system,
    trace_containment_check,
    two_words_decompose,
    verify_letters,
)
from .catalog import (
    make_coset,
    make_cube_gap_complement,
    make_ends_with_a,
    make_finite_complement,
    make_geometric_blocks,
    make_length_filtered,
    make_parity_kernel,
    make_subgroup_union,
)
from .groups import BooleanBall, BooleanGroup, FreeBall, FreeGroup, FreeWord, IntegerGroup, IntRange, Word
from .largeness import (
    check_3fat_cover,
    default_probes,
    duality_check,
    fat_ramsey_m,
    fatness,
    is_delta_star_k,
    is_thick_on,
    kappa_fat_check,
    syndeticity_index,
)
from .ramsey import FilterBase, PairColoring, max_homogeneous_letter_set
from .sets import FiniteSet, SetSpec, from_finite, intersect, inverse_set, left_quotient, right_quotient, union, whole_group

ZZ = IntegerGroup()
BZ = BooleanGroup()
F2 = FreeGroup(2)


@dataclass
class Check:
    name: str
    statement: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  [{self.statement}]  {self.detail}".rstrip()


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [{"name": c.name, "statement": c.statement, "passed": c.passed, "detail": c.detail}
                           for c in self.checks]}


# ---------------------------------------------------------------------------
# fixtures


def fat_fixtures() -> list[tuple[SetSpec, object]]:
    """Fat catalog sets with the windows they are evaluated on."""
    W = IntRange(-30, 30)
    B = BooleanBall(2, 0, 5)
    F = FreeBall(3)
    out = [(make_coset(d), W) for d in range(1, 7)]
    out += [(make_subgroup_union(m), W) for m in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 3, 5)]]
    out += [(make_finite_complement("integer", e), W) for e in ([1], [2, 3], [1, 5, 9])]
    out += [(whole_group(BZ), B), (make_parity_kernel(1), B), (make_parity_kernel(2), B),
            (make_cube_gap_complement(), BooleanBall(2, -6, 6)),
            (make_finite_complement("boolean", ["{1}", "{2}"]), B),
            (make_length_filtered(lambda n: n != 1, "no_singletons"), B)]
    out += [(whole_group(F2), F), (make_finite_complement("free", ["a"]), F),
            (make_finite_complement("free", ["a", "b^-1"]), F)]
    return out


def thick_fixtures() -> list[tuple[SetSpec, object, object]]:
    """Thick catalog sets with a sampling window and an inner window to cover."""
    return [
        (make_geometric_blocks(5), IntRange(0, 1024), IntRange(-200, 200)),
        (make_cube_gap_complement(), BooleanBall(2, -6, 6), BooleanBall(2, -3, 3)),
        (make_length_filtered(lambda n: n >= 2, "long_words"), BooleanBall(3, 1, 6), BooleanBall(2, 1, 6)),
        (make_ends_with_a(), FreeBall(4), FreeBall(2)),
    ]


# ---------------------------------------------------------------------------
# suites


def suite_fat_implies_syndetic(seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("fat-implies-syndetic")
    for A, w in fat_fixtures():
        f = fatness(A, w)
        s = syndeticity_index(A, w, 0, f.value)
        ok = bool(s.holds) and s.value < f.value
        res.checks.append(Check(f"{A.name} on {w}", "a fat set is syndetic with index below its fatness",
                                ok, f"index={s.value} fatness={f.value}"))
    return res


def suite_fat_filter_closure(seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("fat-filter-closure")
    W = IntRange(-20, 20)
    sets = [make_coset(2), make_coset(3), make_subgroup_union((2, 5)), make_finite_complement("integer", [1, 4])]
    fat = {A.name: fatness(A, W).value for A in sets}
    for A, B in combinations(sets, 2):
        m = fat_ramsey_m(A, W, fat[B.name]).value
        chk = kappa_fat_check(intersect(A, B), W, m)
        res.checks.append(Check(f"{A.name} & {B.name}", "the intersection of two fat sets is fat",
                                bool(chk.holds), f"m={m}"))
        AB = union(A, B)
        ok = fatness(AB, W).value <= fat[A.name]
        res.checks.append(Check(f"{A.name} | {B.name}", "a superset of a fat set is fat, with no larger fatness",
                                ok, f"{fatness(AB, W).value} <= {fat[A.name]}"))
    for A in sets:
        ok = fatness(inverse_set(A), W).value == fat[A.name]
        res.checks.append(Check(f"{A.name}^-1", "inversion preserves fatness", ok))
        ok = fat_ramsey_m(A, W, 2).value == fat[A.name]
        res.checks.append(Check(f"m({A.name}, 2)", "the Ramsey number for pairs is the fatness", ok))
    return res


def random_3fat_hypothesis_set(rng: random.Random, lo: int = -30, hi: int = 30, tries: int = 12) -> set:
    """Random S inside [lo, hi] with S disjoint from S+S and -S-S (0 is never taken)."""
    S: set = set()
    pool = [x for x in range(lo, hi + 1) if x != 0]
    for x in rng.sample(pool, tries):
        T = S | {x}
        if all((a + b) not in T and (-a - b) not in T for a in T for b in T):
            S = T
    return S


def suite_3fat_cover(seed: int = 0, count: int = 100, **_) -> SuiteResult:
    res = SuiteResult("3fat-cover")
    rng = random.Random(seed)
    W = IntRange(-30, 30)
    for k in range(count):
        S = random_3fat_hypothesis_set(rng)
        rep = check_3fat_cover(from_finite(FiniteSet(ZZ, S), "S"), W)
        ok = rep.extra["hypothesis"] and rep.holds is True
        res.checks.append(Check(f"S#{k} {sorted(S)}",
                                "if S misses SS and S^-1 S^-1 then its complement is 3-fat", ok))
    return res


def suite_syndetic_fat_quotients(seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("syndetic-fat-quotients")
    W = IntRange(-30, 30)
    for d in range(1, 6):
        for r in range(d):
            A = make_coset(d, r)
            sample = FiniteSet(ZZ, (x for x in ZZ.enumerate(W) if A.membership(x)))
            Q = from_finite(left_quotient(sample), "A^-1A")
            # the sample only sees differences up to the window width, so measure on an inner window
            f = fatness(Q, IntRange(-15, 15)).value
            res.checks.append(Check(f"({r}+{d}Z)^-1({r}+{d}Z)",
                                    "A^-1 A is fat with fatness at most s+1 when A has syndeticity index s",
                                    f <= d + 1, f"fatness={f}"))
    for A, w, inner in thick_fixtures():
        ctx = A.ctx
        sample = FiniteSet(ctx, (g for g in ctx.enumerate(w) if A.membership(g)))
        Q = right_quotient(sample)
        missing = [g for g in ctx.enumerate(inner) if g not in Q]
        res.checks.append(Check(f"{A.name} A A^-1 on {inner}", "A A^-1 is the whole group for thick A",
                                not missing, f"missing={[ctx.format(g) for g in missing[:3]]}" if missing else ""))
    res.checks.extend(ends_with_a_checks())
    return res


def ends_with_a_checks(window: FreeBall = FreeBall(6)) -> list[Check]:
    A = make_ends_with_a()
    out = []
    for P in default_probes(F2, window, radius=1) + default_probes(F2, window, radius=2):
        g = is_thick_on(A, P, window)
        out.append(Check(f"ends_with_a contains a translate of {len(P)}-element probe",
                         "the words ending in a form a thick set", g is not None,
                         "" if g is None else f"g={F2.format(g)}"))
    sample = FiniteSet(F2, (g for g in F2.enumerate(window) if A.membership(g)))
    Q = left_quotient(sample)
    b = 2
    F = FiniteSet(F2, (FreeWord([b] * n) for n in range(1, 5)))
    FF = left_quotient(F)
    meet = [g for g in FF if g in Q]
    out.append(Check("F^-1F & A^-1A for F = {b, b^2, b^3, b^4}",
                     "A^-1 A is not fat: it meets F^-1 F only in the identity",
                     meet == [F2.identity], f"meet={[F2.format(g) for g in meet]}"))
    stray = [g for g in Q if g and not any(abs(x) == 1 for x in g)]
    out.append(Check("letters of A^-1A", "every nonidentity element of A^-1 A involves a or a^-1",
                     not stray, f"stray={[F2.format(g) for g in stray[:3]]}" if stray else ""))
    return out


def suite_two_words(seed: int = 0, count: int = 1000, exceptional: int = 100, **_) -> SuiteResult:
    res = SuiteResult("two-words")
    rng = random.Random(seed)
    bad = []
    for t in range(count):
        k = rng.randint(1, 12)
        ws, xs = random_translated_system(rng, k)
        got = two_words_decompose(ws)
        ref = oracles.decompose_letters(ws.words)
        if not (isinstance(got, Letters) and got.letters == ref and verify_letters(ws, got.letters)):
            bad.append((t, k, got, ref))
    res.checks.append(Check(f"{count} translated systems", "pair sums of length two come from single letters",
                            not bad, f"mismatches={bad[:2]}" if bad else ""))
    bad = []
    for t in range(exceptional):
        ws, _xs = random_exceptional_system(rng)
        order = list(range(4))
        rng.shuffle(order)
        ws = WordSystem(tuple(ws.words[i] for i in order))
        got = two_words_decompose(ws)
        ok = (isinstance(got, ExceptionalK4) and oracles.decompose_letters(ws.words) is None
              and oracles.is_exceptional_quadruple(ws.words))
        if not ok:
            bad.append((t, got))
    res.checks.append(Check(f"{exceptional} exceptional quadruples",
                            "four words with w_4 = w_1 + w_2 + w_3 have no letter decomposition",
                            not bad, f"mismatches={bad[:2]}" if bad else ""))
    return res


def planted_colorings(rng: random.Random, n: int = 12, base_size: int = 5, decoys: int = 3):
    """A random 2-coloring of letters 0..n-1 with a planted set P colored 0 inside,
    plus decoy base sets that each carry a pair of either color."""
    letters = list(range(n))
    P = sorted(rng.sample(letters, base_size))
    forced = {pair: 0 for pair in combinations(P, 2)}
    outside = [x for x in letters if x not in P]
    sets = []
    for _ in range(decoys):
        a, b, c0 = rng.sample(outside, 3)
        rest = rng.sample([x for x in letters if x not in (a, b, c0)], base_size - 3)
        forced.setdefault(tuple(sorted((a, b))), 1)
        forced.setdefault(tuple(sorted((a, c0))), 0)
        sets.append(sorted({a, b, c0, *rest}))
    c = PairColoring.from_function(letters, 2, lambda x, y: forced.get((x, y), rng.randint(0, 1)))
    return c, [D for D in sets if not c.is_homogeneous(D)], P


def suite_b2_traces(seed: int = 0, count: int = 20, **_) -> SuiteResult:
    res = SuiteResult("b2-traces")
    rng = random.Random(seed)
    for t in range(count):
        c, decoys, P = planted_colorings(rng)
        base = FilterBase(tuple(decoys) + (tuple(P),))
        rep = trace_containment_check(c_set_from_coloring(c), base, 1)
        ok = rep.holds is True and tuple(rep.witness) == tuple(P)
        res.checks.append(Check(f"planted 0-homogeneous #{t}",
                                "C' contains zero and [A]^2 for a 0-homogeneous base element A", ok,
                                f"certificate={rep.to_dict()['witness']}"))
    for t in range(count):
        k = (3, 5, 6)[t % 3]
        c, base, P = planted_one_homogeneous(rng, k)
        Cp = c_set_from_coloring(c)
        singles = FiniteSet(BZ, (Word.raw((x,)) for x in c.vertices))
        trace = trace_containment_check(Cp, base, 1)
        chk = kappa_fat_check(Cp, singles, k)
        seq = [] if chk.counterexample is None else [g[0] for g in chk.counterexample]
        ok = (trace.holds is False and chk.holds is False and len(seq) == k
              and all(c.color(x, y) == 1 for x, y in combinations(seq, 2)))
        res.checks.append(Check(f"planted 1-homogeneous {k}-set #{t}",
                                "without a 0-homogeneous base element, C' fails k-fatness on singletons",
                                ok, f"sequence={seq}"))
    return res


def planted_one_homogeneous(rng: random.Random, k: int, n: int = 12, base_size: int = 4, decoys: int = 3):
    letters = list(range(n))
    P = set(rng.sample(letters, k))

    def f(x, y):
        return 1 if x in P and y in P else rng.randint(0, 1)

    c = PairColoring.from_function(letters, 2, f)
    sets = []
    while len(sets) < decoys:
        D = sorted(rng.sample(letters, base_size))
        if not c.is_homogeneous(D):
            sets.append(D)
    return c, FilterBase(tuple(sets)), sorted(P)


def suite_delta_star_edm(seed: int = 0, count: int = 20, **_) -> SuiteResult:
    res = SuiteResult("delta-star-edm")
    rng = random.Random(seed)
    w = BooleanBall(2, 0, 5)
    sets = [make_parity_kernel(1), make_parity_kernel(2), make_cube_gap_complement(),
            make_length_filtered(lambda n: n != 1, "no_singletons")]
    for A in sets:
        for k in (2, 3, 4):
            d = is_delta_star_k(A, w, k)
            f = kappa_fat_check(union(A, from_finite(FiniteSet(BZ, [BZ.identity]))), w, k)
            res.checks.append(Check(f"{A.name} k={k}",
                                    "in a Boolean group Delta*_k agrees with k-fatness of A + {0}",
                                    d.holds == f.holds, f"delta*={d.holds} fat={f.holds}"))
    for t, A in enumerate(edm_fixtures(rng, count)):
        letters = range(A.provenance.get("letters", 12))
        got = max_homogeneous_letter_set(A, letters)
        ref = oracles.max_homogeneous_letters(A, letters)
        B = list(got.witness)
        sound = all(A.membership(Word.raw(p)) for p in combinations(B, 2))
        res.checks.append(Check(f"letter set #{t} ({A.name})",
                                "a largest B with every two-letter word over B in A",
                                got.value == ref and sound, f"size={got.value} oracle={ref}"))
    return res


def edm_fixtures(rng: random.Random, count: int = 20) -> list[SetSpec]:
    """Boolean sets whose two-letter part is a random or arithmetic graph on <= 18 letters."""
    out = []
    for t in range(count):
        n = 10 + (t % 9)
        if t % 4 == 0:
            S = make_cube_gap_complement()
        elif t % 4 == 1:
            m = 2 + t % 5
            S = SetSpec(f"diff_not_{m}Z", BZ, lambda g, m=m: len(g) != 2 or (g[1] - g[0]) % m != 0)
        else:
            p = 0.3 + 0.1 * (t % 5)
            bad = {pair for pair in combinations(range(n), 2) if rng.random() > p}
            S = SetSpec(f"random_p{p:.1f}", BZ, lambda g, bad=frozenset(bad): len(g) != 2 or tuple(g) not in bad)
        out.append(SetSpec(S.name, BZ, S.membership, None, {"letters": n}))
    return out


def suite_duality(seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("duality")
    cases = [(make_coset(2), IntRange(-40, 40), 0), (make_coset(5), IntRange(-40, 40), 5),
             (make_subgroup_union((3, 4)), IntRange(-40, 40), 4),
             (make_geometric_blocks(4), IntRange(0, 256), 0),
             (whole_group(ZZ), IntRange(-10, 10), 0),
             (make_parity_kernel(2), BooleanBall(2, 0, 5), 0)]
    for A, w, pad in cases:
        rep = duality_check(A, w, pad=pad, kmax=6)
        syn = rep.extra["syndetic"].holds
        res.checks.append(Check(f"{A.name} on {w}", "A is syndetic exactly when its complement is not thick",
                                rep.holds is True,
                                f"syndetic={bool(syn)} complement_thick={rep.extra['complement_thick']}"))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "fat-implies-syndetic": suite_fat_implies_syndetic,
    "fat-filter-closure": suite_fat_filter_closure,
    "3fat-cover": suite_3fat_cover,
    "syndetic-fat-quotients": suite_syndetic_fat_quotients,
    "two-words": suite_two_words,
    "b2-traces": suite_b2_traces,
    "delta-star-edm": suite_delta_star_edm,
    "duality": suite_duality,
}


def run_suite(name: str, seed: int = 0, **kw) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed=seed, **kw)

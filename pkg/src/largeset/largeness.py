"""Windowed deciders for thick, syndetic, piecewise syndetic, fat, Delta* and IP* sets.

Every infinite-group notion is evaluated on a finite window and the result
says which way the approximation goes:

* fatness, Delta*_k and IP* verdicts only see subsets of the window, so a
  computed fatness is a lower bound for the true one;
* syndeticity indices are exact for covering the (padded) inner window with
  translates drawn from the window;
* thickness is tested against a finite family of probe sets, which
  under-approximates "every finite F".
"""
from __future__ import annotations

from itertools import combinations

from .errors import BudgetExhausted
from .graph import QuotientGraph
from .groups import BooleanBall, FreeBall, Group, IntRange, Window, shrink_window
from .report import EXACT, LOWER, LargenessReport
from .sets import FiniteSet, SetSpec, complement, product_set
from .solvers import DEFAULT_BUDGET, complement_graph, max_clique, max_kn_free_subset, min_set_cover

PROBE_NOTE = "thickness tested on a finite probe family, not on every finite F"


def _memo(A: SetSpec):
    cache: dict = {}

    def member(g):
        r = cache.get(g)
        if r is None:
            r = cache[g] = bool(A.membership(g))
        return r

    return member


def _elements(ctx: Group, w) -> list:
    return list(w) if isinstance(w, FiniteSet) else ctx.enumerate(w)


# ---------------------------------------------------------------------------
# thick / syndetic / piecewise syndetic


def is_thick_on(A: SetSpec, F, w: Window):
    """Some g in w with Fg inside A, scanning w in canonical order; None if absent."""
    ctx = A.ctx
    F = list(F)
    if not F:
        return ctx.identity
    member = _memo(A)
    for g in ctx.enumerate(w):
        if all(member(ctx.mul(f, g)) for f in F):
            return g
    return None


def default_probes(ctx: Group, w: Window, *, length: int = 8, radius: int = 1,
                   subset_size: int = 0) -> list[FiniteSet]:
    """Probe sets used to approximate "for every finite F".

    A ball around the identity (an interval [0, length) for integers) plus,
    optionally, every subset of the window of at most ``subset_size`` elements.
    Passing a probe implies passing all of its subsets, so the ball already
    dominates small subsets of itself.
    """
    if isinstance(w, IntRange):
        probes = [FiniteSet(ctx, range(length))]
    elif isinstance(w, BooleanBall):
        probes = [FiniteSet(ctx, ctx.enumerate(BooleanBall(radius, w.letter_lo, w.letter_hi)))]
    else:
        probes = [FiniteSet(ctx, ctx.enumerate(FreeBall(radius)))]
    if subset_size:
        elems = ctx.enumerate(w)
        for r in range(1, subset_size + 1):
            probes.extend(FiniteSet(ctx, c) for c in combinations(elems, r))
    return probes


def thick_on_probes(A: SetSpec, w: Window, probes) -> tuple[bool, list]:
    """Whether every probe has a translate inside A; returns the translates found."""
    found = []
    for P in probes:
        g = is_thick_on(A, P, w)
        if g is None:
            return False, found
        found.append(g)
    return True, found


def _integer_covers(A: SetSpec, inner: IntRange, cands) -> list[int]:
    # bit t stands for the target inner.lo + t; c + A covers it iff inner.lo + t - c is in A
    lo = min(inner.lo - c for c in cands)
    hi = max(inner.hi - c for c in cands)
    M = 0
    for v in range(lo, hi + 1):
        if A.membership(v):
            M |= 1 << (v - lo)
    full = (1 << (inner.hi - inner.lo + 1)) - 1
    return [(M >> (inner.lo - c - lo)) & full for c in cands]


def syndeticity_index(A: SetSpec, w: Window, pad: int = 0, kmax: int = 8, *,
                      candidates: FiniteSet | None = None,
                      budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Least |F| with F drawn from w (or ``candidates``) and FA covering the inner window."""
    ctx = A.ctx
    inner = shrink_window(w, pad)
    targets = ctx.enumerate(inner)
    cands = list(candidates) if candidates is not None else ctx.enumerate(w)
    if isinstance(inner, IntRange):
        covers = _integer_covers(A, inner, cands)
    else:
        member = _memo(A)
        covers = []
        for c in cands:
            ci = ctx.inverse(c)
            mask = 0
            for t, x in enumerate(targets):
                if member(ctx.mul(ci, x)):
                    mask |= 1 << t
            covers.append(mask)
    universe = (1 << len(targets)) - 1
    rep = LargenessReport("syndetic", None, ctx, window=w)
    rep.extra["inner_window"] = str(inner)
    try:
        sol = min_set_cover(covers, universe, kmax, budget=budget)
    except BudgetExhausted:
        rep.exactness = LOWER
        rep.notes.append(f"budget of {budget} nodes exhausted")
        return rep
    if sol is None:
        rep.exactness = LOWER
        rep.value = None
        rep.extra["index_greater_than"] = kmax
        rep.notes.append(f"no cover with at most {kmax} translates inside the window")
        return rep
    rep.holds = True
    rep.value = len(sol)
    rep.witness = FiniteSet(ctx, (cands[j] for j in sol))
    return rep


def thickness_index(A: SetSpec, w: Window, kmax: int = 3, *, probes=None,
                    candidates: FiniteSet | None = None,
                    budget: int = 200_000) -> LargenessReport:
    """Least |F| (F from the candidates) with FA passing every probe."""
    ctx = A.ctx
    probes = default_probes(ctx, w) if probes is None else list(probes)
    cands = list(candidates) if candidates is not None else ctx.enumerate(w)
    rep = LargenessReport("thickness_index", None, ctx, window=w)
    rep.notes.append(PROBE_NOTE)
    rep.extra["probes"] = [p.to_json() for p in probes]
    tried = 0
    for k in range(1, kmax + 1):
        for F in combinations(cands, k):
            tried += 1
            if tried > budget:
                rep.exactness = LOWER
                rep.notes.append(f"budget of {budget} candidate sets exhausted")
                return rep
            Fs = FiniteSet(ctx, F)
            ok, translates = thick_on_probes(product_set(Fs, A), w, probes)
            if ok:
                rep.holds = True
                rep.value = k
                rep.witness = Fs
                rep.extra["translates"] = [ctx.format(g) for g in translates]
                return rep
    rep.exactness = LOWER
    rep.extra["index_greater_than"] = kmax
    return rep


def is_piecewise_syndetic(A: SetSpec, w: Window, kmax: int = 3, **kw) -> LargenessReport:
    rep = thickness_index(A, w, kmax, **kw)
    rep.predicate = "piecewise_syndetic"
    return rep


# ---------------------------------------------------------------------------
# fatness


def quotient_graph(A: SetSpec, w: Window | FiniteSet) -> QuotientGraph:
    return QuotientGraph.build(A, w)


def _identity_missing(A: SetSpec, w, predicate: str) -> LargenessReport:
    ctx = A.ctx
    rep = LargenessReport(predicate, False, ctx, window=w if not isinstance(w, FiniteSet) else None,
                          counterexample=FiniteSet(ctx, [ctx.identity]))
    rep.notes.append("identity is not in A, and D^-1 D always contains the identity")
    return rep


def fatness(A: SetSpec, w: Window | FiniteSet, *, budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Fatness on the window: one more than the independence number of the quotient graph.

    The counterexample is the lexicographically least maximum independent
    set: a set of size m-1 none of whose pairs D satisfies D^-1 D in A.
    """
    ctx = A.ctx
    if not A.membership(ctx.identity):
        return _identity_missing(A, w, "fat")
    g = quotient_graph(A, w)
    rep = LargenessReport("fat", True, ctx, window=None if isinstance(w, FiniteSet) else w,
                          exactness=LOWER)
    try:
        mis = max_clique(complement_graph(list(g.adj)), budget=budget)
    except BudgetExhausted as exc:
        rep.holds = None
        rep.value = len(exc.best) + 1
        rep.counterexample = g.subset(exc.best)
        rep.notes.append(f"budget of {budget} nodes exhausted; value is a lower bound")
        return rep
    rep.value = len(mis) + 1
    rep.counterexample = g.subset(mis)
    rep.notes.append("exact on the window; a lower bound for the whole group")
    return rep


def kappa_fat_check(A: SetSpec, w: Window | FiniteSet, k: int, *,
                    budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """k-fatness on the window: no k window elements pairwise fail D^-1 D in A."""
    ctx = A.ctx
    elems = _elements(ctx, w)
    win = None if isinstance(w, FiniteSet) else w
    if k < 2:
        return LargenessReport(f"{k}-fat", False, ctx, window=win,
                               counterexample=FiniteSet(ctx, elems[:max(k, 0)]),
                               notes=["a set with fewer than two elements has no pair D"])
    if not A.membership(ctx.identity):
        rep = _identity_missing(A, w, f"{k}-fat")
        rep.counterexample = FiniteSet(ctx, elems[:k])
        return rep
    g = quotient_graph(A, FiniteSet(ctx, elems))
    rep = LargenessReport(f"{k}-fat", None, ctx, window=win, exactness=LOWER)
    try:
        ind = max_clique(complement_graph(list(g.adj)), target=k, budget=budget)
    except BudgetExhausted:
        rep.notes.append(f"budget of {budget} nodes exhausted")
        return rep
    if len(ind) >= k:
        rep.holds = False
        rep.counterexample = g.subset(ind[:k])
        rep.exactness = EXACT
    else:
        rep.holds = True
        rep.value = len(ind) + 1
    return rep


def fat_ramsey_m(A: SetSpec, w: Window | FiniteSet, n: int, *,
                 budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Least m such that every m window elements contain n with F'^-1 F' in A."""
    ctx = A.ctx
    if not A.membership(ctx.identity):
        return _identity_missing(A, w, f"ramsey_m(n={n})")
    g = quotient_graph(A, w)
    rep = LargenessReport(f"ramsey_m(n={n})", True, ctx,
                          window=None if isinstance(w, FiniteSet) else w, exactness=LOWER)
    try:
        free = max_kn_free_subset(list(g.adj), n, budget=budget)
    except BudgetExhausted as exc:
        rep.holds = None
        rep.value = len(exc.best) + 1
        rep.notes.append(f"budget of {budget} nodes exhausted; value is a lower bound")
        return rep
    rep.value = len(free) + 1
    rep.counterexample = g.subset(free)
    return rep


# ---------------------------------------------------------------------------
# Delta* and IP*


def is_delta_star_k(A: SetSpec, w: Window | FiniteSet, k: int, side: str = "left", *,
                    budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Whether every one-to-one k-sequence from w has its Delta set meeting A.

    The counterexample is the lexicographically least sequence (g_1..g_k)
    with every g_m^-1 g_n (``left``) or g_n g_m^-1 (``right``), m < n, outside A.
    """
    ctx = A.ctx
    elems = _elements(ctx, w)
    n = len(elems)
    member = _memo(A)
    invs = [ctx.inverse(x) for x in elems]
    # bad[i] = {j : the pair (g_i earlier, g_j later) contributes nothing to A}
    bad = [0] * n
    for i in range(n):
        row = 0
        for j in range(n):
            if i == j:
                continue
            q = ctx.mul(invs[i], elems[j]) if side == "left" else ctx.mul(elems[j], invs[i])
            if not member(q):
                row |= 1 << j
        bad[i] = row
    rep = LargenessReport(f"delta*_{k}({side})", None, ctx,
                          window=None if isinstance(w, FiniteSet) else w, exactness=LOWER)
    seq: list[int] = []
    nodes = 0

    def dfs(cand: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted("delta search budget", None)
        if len(seq) == k:
            return True
        if len(seq) + bin(cand).count("1") < k:
            return False
        m = cand
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            seq.append(j)
            if dfs(cand & bad[j]):
                return True
            seq.pop()
        return False

    try:
        found = dfs((1 << n) - 1) if k > 0 else True
    except BudgetExhausted:
        rep.notes.append(f"budget of {budget} nodes exhausted")
        return rep
    if found:
        rep.holds = False
        rep.counterexample = [elems[j] for j in seq]
        rep.exactness = EXACT
    else:
        rep.holds = True
    return rep


def is_ip_star(A: SetSpec, w: Window | FiniteSet, n: int, *,
               budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """Whether every one-to-one n-sequence from w has a finite product in A."""
    ctx = A.ctx
    elems = _elements(ctx, w)
    member = _memo(A)
    rep = LargenessReport(f"ip*_{n}", None, ctx,
                          window=None if isinstance(w, FiniteSet) else w, exactness=LOWER)
    seq: list = []
    nodes = 0

    def dfs(products: frozenset) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted("ip search budget", None)
        if len(seq) == n:
            return True
        for x in elems:
            if x in seq or member(x):
                continue
            new = [ctx.mul(p, x) for p in products]
            if any(member(q) for q in new):
                continue
            seq.append(x)
            if dfs(products | {x} | frozenset(new)):
                return True
            seq.pop()
        return False

    try:
        found = dfs(frozenset())
    except BudgetExhausted:
        rep.notes.append(f"budget of {budget} nodes exhausted")
        return rep
    if found:
        rep.holds = False
        rep.counterexample = list(seq)
        rep.exactness = EXACT
    else:
        rep.holds = True
    return rep


# ---------------------------------------------------------------------------
# implications checked on a window


def check_3fat_cover(S: SetSpec, w: Window, *, budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """If S misses SS and S^-1 S^-1 on the window, the complement of S should be 3-fat."""
    ctx = S.ctx
    members = [g for g in ctx.enumerate(w) if S.membership(g)]
    violation = None
    for s in members:
        for t in members:
            for q in (ctx.mul(s, t), ctx.mul(ctx.inverse(s), ctx.inverse(t))):
                if S.membership(q):
                    violation = (s, t, q)
                    break
            if violation:
                break
        if violation:
            break
    conclusion = kappa_fat_check(complement(S), w, 3, budget=budget)
    conclusion.predicate = "3-fat complement"
    conclusion.extra["hypothesis"] = violation is None
    if violation is not None:
        conclusion.extra["hypothesis_violation"] = [ctx.format(x) for x in violation]
        conclusion.notes.append("hypothesis fails, so 3-fatness is not implied")
    conclusion.extra["S_on_window"] = [ctx.format(g) for g in members]
    return conclusion


def duality_check(A: SetSpec, w: Window, *, pad: int = 0, kmax: int = 6, probes=None,
                  budget: int = DEFAULT_BUDGET) -> LargenessReport:
    """A is syndetic exactly when its complement is not thick, on the window.

    A syndeticity witness F certifies non-thickness of the complement through
    the probe F^-1: no translate F^-1 g lies in G minus A.  When no F with
    |F| <= kmax exists, the complement is searched for a translate of the
    probe family instead.
    """
    ctx = A.ctx
    syn = syndeticity_index(A, w, pad, kmax, budget=budget)
    comp = complement(A)
    rep = LargenessReport("duality", None, ctx, window=w)
    rep.extra["syndetic"] = syn
    if syn.holds:
        probe = FiniteSet(ctx, (ctx.inverse(f) for f in syn.witness))
        inner = shrink_window(w, pad)
        g = is_thick_on(comp, probe, inner)
        rep.extra["complement_thick"] = g is not None
        rep.holds = g is None
        rep.witness = syn.witness
        if g is not None:
            rep.counterexample = g
    else:
        probes = default_probes(ctx, w) if probes is None else probes
        ok, translates = thick_on_probes(comp, w, probes)
        rep.extra["complement_thick"] = ok
        rep.extra["complement_translates"] = [ctx.format(g) for g in translates]
        rep.holds = ok
        rep.notes.append(PROBE_NOTE)
    return rep

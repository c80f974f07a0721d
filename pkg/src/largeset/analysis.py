"""Worked examples: densities, cube differences, discrete sets, and
representations of thick sets.

Everything here is finite evidence.  A window scan that finds no violation
is reported as such and never as a proof.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .catalog import cube_root, make_cube_gap_complement, make_parity_kernel
from .errors import FamilyMismatch, PreconditionError
from .groups import BooleanBall, BooleanGroup, Group, IntRange, Window
from .largeness import default_probes, syndeticity_index, thick_on_probes
from .sets import FiniteSet, SetSpec


# ---------------------------------------------------------------------------
# upper Banach density


@dataclass
class DensityReport:
    set_name: str
    window_len: int
    best_interval: tuple  # (start, length)
    density: Fraction
    table: list = field(default_factory=list)  # (d, max density, start)

    def to_dict(self) -> dict:
        return {
            "set": self.set_name,
            "window_len": self.window_len,
            "best_interval": list(self.best_interval),
            "density": str(self.density),
            "table": [[d, str(q), s] for d, q, s in self.table],
        }


def banach_density_estimate(S: SetSpec, w: IntRange, d_list) -> DensityReport:
    """For each d, the largest share of S in an interval of length d inside w.

    The headline value is the one at the largest d: the per-d maxima are the
    inner quantity whose limit defines the upper Banach density.
    """
    if S.ctx.family != "integer" or not isinstance(w, IntRange):
        raise FamilyMismatch("density is defined for sets of integers on an integer window")
    xs = range(w.lo, w.hi + 1)
    prefix = [0]
    for x in xs:
        prefix.append(prefix[-1] + (1 if S.membership(x) else 0))
    table = []
    for d in sorted(set(int(d) for d in d_list)):
        if d < 1 or d > len(xs):
            raise PreconditionError(f"interval length {d} does not fit in {w}")
        best, start = -1, None
        for a in range(len(xs) - d + 1):
            c = prefix[a + d] - prefix[a]
            if c > best:
                best, start = c, xs[a]
        table.append((d, Fraction(best, d), start))
    d, q, start = table[-1]
    return DensityReport(S.name, len(xs), (start, d), q, table)


# ---------------------------------------------------------------------------
# cube differences


def sarkozy_witness(S) -> tuple | None:
    """(x, y, z) with x, y in S, x > y and x - y = z^3, scanning y then x upward."""
    xs = sorted(set(int(v) for v in S))
    if not xs:
        raise PreconditionError("S must be nonempty")
    for i, y in enumerate(xs):
        for x in xs[i + 1:]:
            z = cube_root(x - y)
            if z is not None:
                return x, y, z
    return None


def ap_letter_set(d: int, window: Window | None = None) -> SetSpec:
    """Words all of whose letters lie in dZ (a subgroup of infinite index)."""
    return SetSpec(f"B({d}Z)", BooleanGroup(), lambda g: all(x % d == 0 for x in g), window,
                   {"constructor": "ap_letter_set", "d": d})


def candidate_family() -> list[SetSpec]:
    """Candidates B for the search, each with a window reaching a cube gap."""
    out = [ap_letter_set(7, BooleanBall(1, 0, 343))]
    for d in (1, 2, 3):
        K = make_parity_kernel(d)
        out.append(SetSpec(K.name, K.ctx, K.membership, BooleanBall(2, 0, max(9, d**3)), K.provenance))
    return out


def cube_noncontainment_search(candidates, w: BooleanBall | None = None, *, A: SetSpec | None = None,
                               kmax: int = 8) -> list[dict]:
    """For each B, test syndeticity on the window, then look for b, b' in B with b + b' outside A.

    The window is ``w`` when given and otherwise each candidate's own.  A
    defaults to the cube-gap complement, so a violation is a two-letter word
    {m, n} with n - m a positive cube.
    """
    A = make_cube_gap_complement() if A is None else A
    out = []
    for B in candidates:
        ctx = B.ctx
        wB = w if w is not None else B.window
        if wB is None:
            raise PreconditionError(f"no window for candidate {B.name}")
        syn = syndeticity_index(B, wB, 0, kmax)
        elems = [g for g in ctx.enumerate(wB) if B.membership(g)]
        violation = None
        for b, c in combinations(elems, 2):
            if not A.membership(ctx.mul(b, c)):
                violation = (b, c)
                break
        out.append({
            "candidate": B.name,
            "window": str(wB),
            "syndetic_index": syn.value,
            "syndetic_on_window": bool(syn.holds),
            "size_on_window": len(elems),
            "violation": None if violation is None else [ctx.format(x) for x in violation],
            "verdict": "violation" if violation else "no violation found on window",
        })
    return out


# ---------------------------------------------------------------------------
# discrete sets from decreasing fat sets


@dataclass
class DiscreteSetResult:
    D: FiniteSet
    stages: list
    identity_free: bool
    neighborhoods: dict  # g -> (n, D points off A_n, all from earlier stages)
    notes: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.identity_free and all(v is not None and v[2] for v in self.neighborhoods.values())


def discrete_set_construct(Fs, As, w: Window) -> DiscreteSetResult:
    """D = union over n of {a^-1 b : a != b in F_n, a^-1 b in A_n}, with its discreteness certificate.

    For g in D the certificate is the least n with g outside A_n, the number
    of D points outside A_n, and whether all of them come from stages before
    n (points of later stages lie in A_m, a subset of A_n).
    """
    if len(Fs) != len(As):
        raise PreconditionError("need as many finite sets as sets A_n")
    if not As:
        raise PreconditionError("need at least one stage")
    ctx: Group = As[0].ctx
    elems = ctx.enumerate(w)
    for n in range(len(As) - 1):
        for g in elems:
            if As[n + 1].membership(g) and not As[n].membership(g):
                raise PreconditionError(f"A_{n + 2} is not inside A_{n + 1} at {ctx.format(g)}")
    stages = []
    for F, A in zip(Fs, As):
        Dn = set()
        for a in F:
            ai = ctx.inverse(a)
            for b in F:
                if a != b:
                    q = ctx.mul(ai, b)
                    if A.membership(q):
                        Dn.add(q)
        stages.append(FiniteSet(ctx, Dn))
    D = FiniteSet(ctx, (g for S in stages for g in S))
    origin = {}
    for n, S in enumerate(stages):
        for g in S:
            origin.setdefault(g, n)
    neighborhoods = {}
    notes = []
    for g in D:
        n = next((k for k, A in enumerate(As) if not A.membership(g)), None)
        if n is None:
            neighborhoods[g] = None
            notes.append(f"{ctx.format(g)} lies in every given A_n")
            continue
        off = [h for h in D if not As[n].membership(h)]
        neighborhoods[g] = (n + 1, len(off), all(origin[h] < n for h in off))
    return DiscreteSetResult(D, stages, ctx.identity not in D, neighborhoods, notes)


# ---------------------------------------------------------------------------
# thick sets: quotient sequences and subgroups


@dataclass
class DeltaRepresentation:
    sequence: list
    coverage: Fraction
    covered: int
    target: int

    def to_dict(self, ctx: Group) -> dict:
        return {"sequence": [ctx.format(g) for g in self.sequence], "coverage": float(self.coverage),
                "covered": self.covered, "target": self.target}


def _grown(w: Window, extra: int) -> Window:
    if isinstance(w, BooleanBall):
        return BooleanBall(w.max_len + extra, w.letter_lo, w.letter_hi)
    return w


def thick_delta_representation(T: SetSpec, w: Window, L: int, *, probes=None,
                               probe_window: Window | None = None) -> DeltaRepresentation:
    """Greedy g_1, ..., g_L in w with every g_m^-1 g_n (m < n) in T or the identity.

    g_1 is the first window element; each later term maximizes the number
    of new quotients in T on w, ties going to the earliest element.  The
    coverage is the share of T on w hit by the quotients.
    """
    ctx = T.ctx
    if ctx.family not in ("boolean", "integer"):
        raise FamilyMismatch("representations are built in B(Z) or Z")
    probes = default_probes(ctx, w) if probes is None else probes
    # translates of the probes may need longer words than w holds
    probe_window = _grown(w, 2) if probe_window is None else probe_window
    ok, _ = thick_on_probes(T, probe_window, probes)
    if not ok:
        raise PreconditionError(f"{T.name} fails the thickness probes on {probe_window}")
    elems = ctx.enumerate(w)
    e = ctx.identity
    target = {g for g in elems if g != e and T.membership(g)}

    def good(q) -> bool:
        return q == e or T.membership(q)

    seq = [elems[0]]
    chosen = {elems[0]}
    covered: set = set()
    while len(seq) < L:
        best, best_gain = None, -1
        for x in elems:
            if x in chosen:
                continue
            qs = [ctx.mul(ctx.inverse(g), x) for g in seq]
            if not all(good(q) for q in qs):
                continue
            gain = len({q for q in qs if q in target} - covered)
            if gain > best_gain:
                best, best_gain = x, gain
        if best is None:
            break
        covered |= {q for q in (ctx.mul(ctx.inverse(g), best) for g in seq) if q in target}
        seq.append(best)
        chosen.add(best)
    cov = Fraction(len(covered), len(target)) if target else Fraction(1)
    return DeltaRepresentation(seq, cov, len(covered), len(target))


def subgroup_in_thick(T: SetSpec, w: BooleanBall, size: int) -> FiniteSet | None:
    """A subgroup of B(Z) with ``size`` elements inside (T + zero) on w, or None.

    Generators are added greedily in canonical order; a generator is taken
    when the whole new coset stays in the window and in T + zero.
    """
    ctx = T.ctx
    if ctx.family != "boolean":
        raise FamilyMismatch("subgroup search runs in B(Z)")
    if size < 1 or size & (size - 1):
        raise PreconditionError("a finite subgroup of B(Z) has a power-of-two size")
    e = ctx.identity
    H = [e]
    for g in ctx.enumerate(w):
        if len(H) >= size:
            break
        if g in H:
            continue
        coset = [ctx.mul(h, g) for h in H]
        if all(ctx.in_window(x, w) and (x == e or T.membership(x)) for x in coset):
            H.extend(coset)
    if len(H) < size:
        return None
    return FiniteSet(ctx, H)

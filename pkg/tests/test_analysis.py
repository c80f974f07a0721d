from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largeset.analysis import (
    ap_letter_set,
    banach_density_estimate,
    candidate_family,
    cube_noncontainment_search,
    discrete_set_construct,
    sarkozy_witness,
    subgroup_in_thick,
    thick_delta_representation,
)
from largeset.catalog import build, make_coset, make_geometric_blocks, make_length_filtered
from largeset.errors import FamilyMismatch, PreconditionError
from largeset.groups import BooleanBall, BooleanGroup, IntegerGroup, IntRange, Word
from largeset.oracles import fermat_cube_solutions
from largeset.sets import FiniteSet, SetSpec, from_finite

ZZ, BZ = IntegerGroup(), BooleanGroup()


@settings(max_examples=50, deadline=None)
@given(st.frozensets(st.integers(-20, 20)), st.integers(1, 41))
def test_density_matches_sliding_window(S, d):
    A = from_finite(FiniteSet(ZZ, S))
    rep = banach_density_estimate(A, IntRange(-20, 20), [d])
    ref = max(sum(1 for x in range(a, a + d) if x in S) for a in range(-20, 22 - d))
    assert rep.density == Fraction(ref, d)


def test_density_examples():
    rep = banach_density_estimate(make_coset(3), IntRange(-30, 30), [3, 30])
    assert rep.density == Fraction(1, 3) and rep.best_interval[1] == 30
    assert rep.to_dict()["table"][0] == [3, "1/3", -30]
    rep = banach_density_estimate(make_geometric_blocks(4), IntRange(0, 200), [10, 60])
    assert rep.density == Fraction(1)  # the block [64, 127] holds a full interval of length 60
    with pytest.raises(PreconditionError):
        banach_density_estimate(make_coset(2), IntRange(-2, 2), [10])
    with pytest.raises(FamilyMismatch):
        banach_density_estimate(make_length_filtered([2]), IntRange(-2, 2), [2])


def test_sarkozy_witness():
    assert sarkozy_witness([0, 5, 8]) == (8, 0, 2)
    assert sarkozy_witness([0, 2, 4]) is None
    assert sarkozy_witness(range(0, 100, 9)) == (27, 0, 3)
    with pytest.raises(PreconditionError):
        sarkozy_witness([])


def test_fermat_oracle():
    assert fermat_cube_solutions(30) == []


def test_cube_noncontainment():
    rows = cube_noncontainment_search(candidate_family())
    assert [r["verdict"] for r in rows] == ["violation"] * 4
    for r in rows:
        a, b = (BZ.parse(x) for x in r["violation"])
        s = BZ.mul(a, b)
        assert len(s) == 2 and round((s[1] - s[0]) ** (1 / 3)) ** 3 == s[1] - s[0]
    assert rows[0]["candidate"] == "B(7Z)" and rows[0]["violation"] == ["{0}", "{343}"]


def test_ap_letter_set():
    B = ap_letter_set(3)
    assert Word([0, 3, -6]) in B and Word([1]) not in B


def test_discrete_set_construct():
    As = [make_coset(2), make_coset(4), make_coset(8), make_coset(32)]
    Fs = [FiniteSet(ZZ, [0, 2, 3]), FiniteSet(ZZ, [0, 4]), FiniteSet(ZZ, [0, 8, 16]), FiniteSet(ZZ, [0])]
    res = discrete_set_construct(Fs, As, IntRange(-40, 40))
    assert res.identity_free and set(res.D) == {2, -2, 4, -4, 8, -8, 16, -16}
    assert res.verified
    assert res.neighborhoods[2] == (2, 2, True)  # only 2 and -2 lie outside 4Z
    short = discrete_set_construct(Fs[:3], As[:3], IntRange(-40, 40))
    assert not short.verified and "8 lies in every given A_n" in short.notes
    with pytest.raises(PreconditionError):
        discrete_set_construct(Fs, list(reversed(As)), IntRange(-40, 40))
    with pytest.raises(PreconditionError):
        discrete_set_construct(Fs[:1], As, IntRange(-40, 40))


@pytest.mark.parametrize("params,w,L", [
    ({"min_length": 2}, BooleanBall(2, 1, 10), 10),
    ({"intervals": [(2, 4)], "min_length": 6}, BooleanBall(2, 1, 10), 10),
])
def test_thick_delta_representation(params, w, L):
    T = build("length_filtered", params)
    rep = thick_delta_representation(T, w, L)
    assert len(rep.sequence) == L and rep.coverage == 1
    for x, y in combinations(rep.sequence, 2):
        assert T.membership(BZ.mul(x, y))
    assert rep.to_dict(BZ)["target"] == rep.target


def test_thick_delta_requires_thick():
    with pytest.raises(PreconditionError):
        thick_delta_representation(make_length_filtered(lambda n: n % 2 == 0), BooleanBall(2, 1, 6), 5)


def test_subgroup_in_thick():
    H = subgroup_in_thick(make_length_filtered(lambda n: n % 2 == 0), BooleanBall(2, 1, 10), 4)
    assert list(H) == [Word(), Word([1, 2]), Word([1, 3]), Word([2, 3])]
    # two distinct three-letter words sum to an even-length word
    assert len(subgroup_in_thick(make_length_filtered([3]), BooleanBall(3, 1, 5), 2)) == 2
    assert subgroup_in_thick(make_length_filtered([3]), BooleanBall(3, 1, 5), 4) is None
    with pytest.raises(PreconditionError):
        subgroup_in_thick(make_length_filtered([2]), BooleanBall(2, 1, 4), 3)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from largeset.errors import FamilyMismatch, WindowTooLarge
from largeset.groups import (
    STAR,
    BooleanBall,
    BooleanGroup,
    FreeBall,
    FreeGroup,
    FreeWord,
    IntegerGroup,
    IntRange,
    Word,
    group_from_name,
    parse_window,
    shrink_window,
    window_cap,
)

ZZ, BZ, F2 = IntegerGroup(), BooleanGroup(), FreeGroup(2)

ints = st.integers(-10**6, 10**6)
words = st.frozensets(st.integers(-20, 20), max_size=6).map(Word)
free_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=10).map(FreeWord)
GROUPS = [(ZZ, ints), (BZ, words), (F2, free_words)]


@pytest.mark.parametrize("ctx,elems", GROUPS, ids=["int", "bool", "free"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_group_axioms(ctx, elems, data):
    a, b, c = data.draw(elems), data.draw(elems), data.draw(elems)
    e = ctx.identity
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, e) == a == ctx.mul(e, a)
    assert ctx.mul(a, ctx.inverse(a)) == e == ctx.mul(ctx.inverse(a), a)


@pytest.mark.parametrize("ctx,elems", GROUPS, ids=["int", "bool", "free"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_format_parse_roundtrip(ctx, elems, data):
    g = data.draw(elems)
    assert ctx.parse(ctx.format(g)) == g


@given(words, words)
def test_boolean_is_symmetric_difference(a, b):
    assert set(BZ.mul(a, b)) == set(a) ^ set(b)
    assert BZ.inverse(a) == a


def test_word_canonical_form():
    assert Word([3, 1, 3, 2]) == (1, 2, 3)
    assert BZ.format(Word([2, 1])) == "{1,2}"
    assert BZ.format(Word([1, STAR])) == "{1,*}"
    assert BZ.parse("{1,*}") == Word([1, STAR])


def test_free_reduction_and_format():
    assert FreeWord([1, 2, -2, -1]) == ()
    assert F2.format(FreeWord([1, -2])) == "ab^-1"
    assert F2.format(F2.identity) == "e"
    assert F2.parse("ab^-1a") == FreeWord([1, -2, 1])
    with pytest.raises(ValueError):
        F2.parse("ax")
    with pytest.raises(FamilyMismatch):
        F2.check(FreeWord([3]))


@pytest.mark.parametrize("ctx,w,first", [
    (ZZ, IntRange(-2, 2), [0, 1, 2, -1, -2]),
    (BZ, BooleanBall(1, 0, 2), [(), (0,), (1,), (2,)]),
    (F2, FreeBall(1), [(), (1,), (-1,), (2,), (-2,)]),
])
def test_canonical_enumeration_order(ctx, w, first):
    assert [tuple(g) if not isinstance(g, int) else g for g in ctx.enumerate(w)] == first


@pytest.mark.parametrize("ctx,w,size", [
    (ZZ, IntRange(-50, 50), 101),
    (BZ, BooleanBall(2, -12, 12), 1 + 25 + 300),
    (F2, FreeBall(3), 1 + 4 + 12 + 36),
    (FreeGroup(3), FreeBall(2), 1 + 6 + 30),
])
def test_window_sizes(ctx, w, size):
    elems = ctx.enumerate(w)
    assert len(elems) == size == ctx.window_size(w) == len(set(elems))
    assert elems == sorted(elems, key=ctx.key)
    assert all(ctx.in_window(g, w) for g in elems)


@pytest.mark.parametrize("text,w", [
    ("int:-5..7", IntRange(-5, 7)),
    ("bool:2:-12..12", BooleanBall(2, -12, 12)),
    ("free:6", FreeBall(6)),
])
def test_parse_window(text, w):
    assert parse_window(text) == w
    assert str(w) == text


@pytest.mark.parametrize("text", ["int:1..5", "bool:x", "free:", "zz"])
def test_parse_window_rejects(text):
    with pytest.raises(ValueError):
        parse_window(text)


def test_window_cap(monkeypatch):
    assert window_cap() == 10**6
    monkeypatch.setenv("LARGESET_BUDGET_CAP", "50")
    with pytest.raises(WindowTooLarge):
        ZZ.enumerate(IntRange(-50, 50))
    assert len(ZZ.enumerate(IntRange(-10, 10))) == 21


def test_family_checks():
    with pytest.raises(FamilyMismatch):
        ZZ.enumerate(BooleanBall(1, 0, 1))
    with pytest.raises(FamilyMismatch):
        BZ.inverse(3)


def test_shrink_and_names():
    assert shrink_window(IntRange(-10, 10), 3) == IntRange(-7, 7)
    assert shrink_window(BooleanBall(3, 0, 4), 1) == BooleanBall(2, 0, 4)
    assert shrink_window(FreeBall(2), 5) == FreeBall(0)
    assert group_from_name("free:3") == FreeGroup(3)
    assert group_from_name("bool") == BZ
    with pytest.raises(ValueError):
        group_from_name("matrix")

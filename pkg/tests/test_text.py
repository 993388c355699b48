from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import naive
from suffixient.errors import EmptyText, IndexOutOfRange, SentinelCollision
from suffixient.text import (
    SENTINEL,
    box,
    build_context,
    bwt_pos,
    prepare_text,
    run_breaks,
    text_pos,
)

texts = st.text(alphabet="abc", min_size=1, max_size=40)


def ctx_of(raw):
    return build_context(prepare_text(raw))


def test_prepare_text_small():
    t = prepare_text("ab")
    assert t.n == 3 and t.sigma == 3
    assert t.chars[1:].tolist() == [SENTINEL, 2, 3]
    assert t.symbol_repr(1) == "$" and t.symbol_repr(2) == "a"

    t = prepare_text(b"aaaa")
    assert (t.n, t.sigma) == (5, 2)
    assert t.raw() == b"aaaa"


def test_prepare_text_errors():
    with pytest.raises(EmptyText):
        prepare_text(b"")
    with pytest.raises(SentinelCollision):
        prepare_text(b"ab\x00c")


@given(st.binary(min_size=1, max_size=50).filter(lambda b: 0 not in b))
def test_prepare_text_effective_alphabet(raw):
    t = prepare_text(raw)
    body = t.chars[2:]
    assert t.chars[1] == SENTINEL and SENTINEL not in body.tolist()
    assert set(t.chars[1:].tolist()) == set(range(1, t.sigma + 1))
    # remap is order preserving
    assert [t.to_symbol[b] for b in raw] == body.tolist()
    assert t.raw() == raw


def test_context_dollar_ab():
    ctx = ctx_of("ab")
    assert ctx.sa_r[1:].tolist() == [3, 2, 1]
    assert ctx.isa_r[1:].tolist() == [3, 2, 1]
    assert ctx.bwt_r[1:].tolist() == [2, 3, SENTINEL]
    assert ctx.lcp_r[1:].tolist() == [0, 0, 0]


def test_context_dollar_aa():
    ctx = ctx_of("aa")
    assert ctx.sa_r[1:].tolist() == [3, 2, 1]
    assert ctx.lcp_r[1:].tolist() == [0, 0, 1]


@settings(max_examples=200)
@given(texts)
def test_context_against_naive(raw):
    t = prepare_text(raw)
    ctx = build_context(t)
    rev = naive.reversed_string(t)
    sa = naive.suffix_array(rev)
    lcp = naive.lcp_array(rev, sa)
    assert ctx.sa_r[1:].tolist() == sa
    assert ctx.lcp_r[1:].tolist() == lcp
    assert ctx.psv[1:].tolist() == naive.psv(lcp)
    assert ctx.nsv[1:].tolist() == naive.nsv(lcp)
    assert (ctx.isa_r[ctx.sa_r[1:]] == np.arange(1, t.n + 1)).all()
    assert sorted(ctx.bwt_r[1:].tolist()) == sorted(t.chars[1:].tolist())


@settings(max_examples=100)
@given(texts)
def test_coordinate_maps(raw):
    ctx = ctx_of(raw)
    t = ctx.text
    for i in range(1, t.n + 1):
        assert t[text_pos(ctx, i)] == ctx.bwt_r[i]
        assert bwt_pos(ctx, text_pos(ctx, i)) == i
    for x in range(1, t.n + 1):
        assert text_pos(ctx, bwt_pos(ctx, x)) == x


def test_coordinate_examples():
    ctx = ctx_of("ab")
    assert text_pos(ctx, 3) == 1
    assert text_pos(ctx, 1) == 2
    assert bwt_pos(ctx, 2) == 1
    assert bwt_pos(ctx, 1) == 3
    for bad in (0, 4):
        with pytest.raises(IndexOutOfRange):
            text_pos(ctx, bad)
        with pytest.raises(IndexOutOfRange):
            bwt_pos(ctx, bad)


def test_box_examples():
    psv = np.zeros(10, dtype=np.int64)
    nsv = np.full(10, 10, dtype=np.int64)
    psv[4], nsv[4] = 3, 8
    assert box(SimpleNamespace(n=9, psv=psv, nsv=nsv), 4) == (4, 7)

    ctx = ctx_of("ab")
    assert [box(ctx, i) for i in (1, 2, 3)] == [(1, 3)] * 3
    with pytest.raises(IndexOutOfRange):
        box(ctx, 0)


@settings(max_examples=100)
@given(texts)
def test_box_is_maximal_interval(raw):
    ctx = ctx_of(raw)
    lcp = ctx.lcp_r
    for i in range(1, ctx.n + 1):
        lo, hi = box(ctx, i)
        assert lo <= i <= hi
        assert (lcp[lo : hi + 1] >= lcp[i]).all()
        assert lo == 1 or lcp[lo - 1] < lcp[i]
        assert hi == ctx.n or lcp[hi + 1] < lcp[i]


def test_run_breaks_examples():
    assert run_breaks(ctx_of("ab")).tolist() == [2, 3]

    bwt = np.zeros(22, dtype=np.uint16)
    bwt[1:11] = 4
    bwt[11:21] = [4] + [2] * 8 + [3]  # T A A A A A A A A G
    bwt[21] = 3
    breaks = run_breaks(SimpleNamespace(bwt_r=bwt)).tolist()
    assert [b for b in breaks if 11 <= b <= 20] == [12, 20]

    flat = np.array([0, 2, 2, 2], dtype=np.uint16)
    assert run_breaks(SimpleNamespace(bwt_r=flat)).size == 0


@settings(max_examples=100)
@given(texts)
def test_run_break_sides_share_left_context(raw):
    ctx = ctx_of(raw)
    t = ctx.text

    def left_context(row, length):
        end = text_pos(ctx, row)
        # the wrapped sentinel row stands for the whole text
        return t.window(end - length, end - 1) if end > 1 else t.window(t.n - length + 1, t.n)

    for i in run_breaks(ctx).tolist():
        length = int(ctx.lcp_r[i])
        assert ctx.bwt_r[i - 1] != ctx.bwt_r[i]
        assert left_context(i - 1, length) == left_context(i, length)

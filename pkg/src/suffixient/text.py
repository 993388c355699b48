"""Text substrate: sentinel-prepended text plus SA/BWT/LCP of its reverse.

All public coordinates are 1-based. Arrays stored on :class:`Text` and
:class:`SuffixContext` have length ``n + 1`` and slot 0 is unused padding, so
``ctx.lcp_r[i]`` is the LCP value of BWT row ``i`` exactly as written in the
literature.

Rows of the reversed-text suffix array are prefixes ``T[1, x]`` in
co-lexicographic order; the BWT symbol of a row is the character that follows
its prefix in ``T`` (the full-text row wraps around to the sentinel).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numba
import numpy as np
from pydivsufsort import divsufsort

from .errors import EmptyText, IndexOutOfRange, SentinelCollision

SENTINEL = 1
SENTINEL_BYTE = 0


@dataclass(frozen=True, eq=False)
class Text:
    """Input string over a dense alphabet ``[1..sigma]`` with ``T[1] = $``."""

    chars: np.ndarray
    sigma: int
    to_symbol: dict[int, int]
    to_byte: dict[int, int]
    sentinel: int = SENTINEL

    @property
    def n(self) -> int:
        return len(self.chars) - 1

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise IndexOutOfRange(f"text position {x} outside [1, {self.n}]")
        return int(self.chars[x])

    @cached_property
    def string(self) -> str:
        # one code point per symbol; string[x - 1] == T[x]
        return "".join(map(chr, self.chars[1:].tolist()))

    def window(self, i: int, j: int) -> str:
        """``T[i, j]`` as a str of symbol code points (empty when ``i > j``)."""
        if i > j:
            return ""
        if i < 1 or j > self.n:
            raise IndexOutOfRange(f"window [{i}, {j}] outside [1, {self.n}]")
        return self.string[i - 1 : j]

    def symbol_repr(self, sym: int) -> str:
        if sym == self.sentinel:
            return "$"
        b = self.to_byte[sym]
        return chr(b) if 0x21 <= b < 0x7F else f"\\x{b:02x}"

    def raw(self) -> bytes:
        return bytes(self.to_byte[s] for s in self.chars[2:].tolist())


def prepare_text(raw: bytes | bytearray | str) -> Text:
    """Prepend the sentinel and remap the bytes of ``raw`` onto ``[2..sigma]``."""
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    data = np.frombuffer(bytes(raw), dtype=np.uint8)
    if data.size == 0:
        raise EmptyText("text must contain at least one byte")
    if np.any(data == SENTINEL_BYTE):
        at = int(np.flatnonzero(data == SENTINEL_BYTE)[0])
        raise SentinelCollision(f"reserved byte 0x00 found at offset {at}")

    present = np.flatnonzero(np.bincount(data, minlength=256))
    table = np.zeros(256, dtype=np.uint16)
    table[present] = np.arange(2, len(present) + 2, dtype=np.uint16)

    chars = np.empty(data.size + 2, dtype=np.uint16)
    chars[0] = 0
    chars[1] = SENTINEL
    chars[2:] = table[data]
    to_symbol = {int(b): int(table[b]) for b in present}
    to_byte = {s: b for b, s in to_symbol.items()}
    to_byte[SENTINEL] = SENTINEL_BYTE
    return Text(chars, len(present) + 1, to_symbol, to_byte)


@dataclass(frozen=True, eq=False)
class SuffixContext:
    """Read-only arrays over the reversed text, all indexed ``1..n``."""

    text: Text
    sa_r: np.ndarray
    isa_r: np.ndarray
    bwt_r: np.ndarray
    lcp_r: np.ndarray
    psv: np.ndarray
    nsv: np.ndarray
    # text_of_row[i] == text_pos(i); row_of_text[x] == bwt_pos(x)
    text_of_row: np.ndarray = field(repr=False)
    row_of_text: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.text.n

    @property
    def sigma(self) -> int:
        return self.text.sigma


@numba.njit(cache=True)
def _kasai(rev, sa, isa):
    # 0-based rev/sa/isa; returns 1-based lcp with slot 0 unused
    n = rev.shape[0]
    lcp = np.zeros(n + 1, dtype=np.int64)
    h = 0
    for p in range(n):
        r = isa[p]
        if r == 0:
            h = 0
            continue
        q = sa[r - 1]
        while p + h < n and q + h < n and rev[p + h] == rev[q + h]:
            h += 1
        lcp[r + 1] = h
        if h > 0:
            h -= 1
    return lcp


@numba.njit(cache=True)
def previous_smaller(values, n):
    """PSV over ``values[1..n]``; 0 when no smaller value lies to the left."""
    out = np.zeros(n + 1, dtype=np.int64)
    stack = np.empty(n + 1, dtype=np.int64)
    top = 0
    for i in range(1, n + 1):
        while top > 0 and values[stack[top - 1]] >= values[i]:
            top -= 1
        out[i] = stack[top - 1] if top > 0 else 0
        stack[top] = i
        top += 1
    return out


@numba.njit(cache=True)
def next_smaller(values, n):
    """NSV over ``values[1..n]``; ``n + 1`` when no smaller value lies to the right."""
    out = np.zeros(n + 1, dtype=np.int64)
    stack = np.empty(n + 1, dtype=np.int64)
    top = 0
    for i in range(n, 0, -1):
        while top > 0 and values[stack[top - 1]] >= values[i]:
            top -= 1
        out[i] = stack[top - 1] if top > 0 else n + 1
        stack[top] = i
        top += 1
    return out


def build_context(t: Text) -> SuffixContext:
    n = t.n
    rev = np.ascontiguousarray(t.chars[1:][::-1])
    # divsufsort wants bytes; symbols 1..256 shift down by one
    sa0 = divsufsort((rev - 1).astype(np.uint8)).astype(np.int64)
    isa0 = np.empty(n, dtype=np.int64)
    isa0[sa0] = np.arange(n, dtype=np.int64)

    sa_r = np.zeros(n + 1, dtype=np.int64)
    sa_r[1:] = sa0 + 1
    isa_r = np.zeros(n + 1, dtype=np.int64)
    isa_r[1:] = isa0 + 1

    bwt_r = np.zeros(n + 1, dtype=np.uint16)
    bwt_r[1:] = rev[sa0 - 1]  # index -1 wraps to the sentinel

    lcp_r = _kasai(rev, sa0, isa0)
    psv = previous_smaller(lcp_r, n)
    nsv = next_smaller(lcp_r, n)

    text_of_row = np.zeros(n + 1, dtype=np.int64)
    text_of_row[1:] = np.where(sa_r[1:] == 1, 1, n - sa_r[1:] + 2)
    row_of_text = np.zeros(n + 1, dtype=np.int64)
    row_of_text[text_of_row[1:]] = np.arange(1, n + 1, dtype=np.int64)

    return SuffixContext(t, sa_r, isa_r, bwt_r, lcp_r, psv, nsv, text_of_row, row_of_text)


def _check_range(value: int, n: int, what: str) -> None:
    if not 1 <= value <= n:
        raise IndexOutOfRange(f"{what} {value} outside [1, {n}]")


def text_pos(ctx: SuffixContext, i: int) -> int:
    """Position ``x`` of ``T`` holding the symbol ``bwt_r[i]``."""
    _check_range(i, ctx.n, "BWT row")
    return int(ctx.text_of_row[i])


def bwt_pos(ctx: SuffixContext, x: int) -> int:
    """BWT row whose symbol is ``T[x]``; inverse of :func:`text_pos`."""
    _check_range(x, ctx.n, "text position")
    return int(ctx.row_of_text[x])


def box(ctx: SuffixContext, i: int) -> tuple[int, int]:
    """Maximal row interval around ``i`` on which ``lcp_r`` stays ``>= lcp_r[i]``."""
    _check_range(i, ctx.n, "BWT row")
    return int(ctx.psv[i]) + 1, int(ctx.nsv[i]) - 1


def run_breaks(ctx: SuffixContext) -> np.ndarray:
    bwt = ctx.bwt_r
    return np.flatnonzero(bwt[2:] != bwt[1:-1]) + 2

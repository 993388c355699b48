"""Suffixiency and minimality testers.

Three deciders share one substrate (context + SLPR):

* :func:`test_suffixient_quadratic` checks every run break against every
  candidate, O(n * |S|).
* :func:`test_suffixient_linear` sweeps the run breaks once with a monotone
  cursor per symbol, O(n).
* :func:`test_minimal` checks adjacent boxes per symbol, O(|S| + sigma).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numba
import numpy as np

from .errors import NotARunBreak, PositionOutOfRange
from .slpr import SlprTables
from .text import SuffixContext, bwt_pos


@dataclass(frozen=True)
class CandidateSet:
    """Sorted, duplicate-free text positions in ``[1..n]``."""

    positions: np.ndarray

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions.tolist())


def candidate_set(positions: Iterable[int], n: int) -> CandidateSet:
    if isinstance(positions, np.ndarray):
        arr = np.unique(positions.astype(np.int64, copy=False))
    else:
        arr = np.unique(np.fromiter((int(p) for p in positions), dtype=np.int64))
    if arr.size and (arr[0] < 1 or arr[-1] > n):
        bad = int(arr[0]) if arr[0] < 1 else int(arr[-1])
        raise PositionOutOfRange(f"position {bad} outside [1, {n}]")
    return CandidateSet(arr)


@dataclass(frozen=True, eq=False)
class CandidateLists:
    """The A/B/C/P structures: ``c(sym)`` is ``values[offsets[sym]:offsets[sym + 1]]``."""

    a: np.ndarray
    b: np.ndarray
    values: np.ndarray
    offsets: np.ndarray
    p: np.ndarray
    # text position behind each entry of ``values``
    sources: np.ndarray

    def c(self, sym: int) -> np.ndarray:
        return self.values[self.offsets[sym] : self.offsets[sym + 1]]


@dataclass(frozen=True)
class SufficiencyWitness:
    """Run break ``row`` whose ``symbol``-side extension no candidate suffixes."""

    row: int
    symbol: int


@dataclass(frozen=True)
class MinimalityWitness:
    """Adjacent entries ``first``, ``second`` (1-based) of ``c[symbol]`` with overlapping boxes."""

    symbol: int
    first: int
    second: int
    positions: tuple[int, int]


Witness = Union[SufficiencyWitness, MinimalityWitness]


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.accepted


def _as_set(ctx: SuffixContext, s) -> CandidateSet:
    return s if isinstance(s, CandidateSet) else candidate_set(s, ctx.n)


def build_candidates(ctx: SuffixContext, tables: SlprTables, s) -> CandidateLists:
    s = _as_set(ctx, s)
    n, sigma = ctx.n, ctx.sigma
    a = ctx.row_of_text[s.positions]
    mark = np.zeros(n + 1, dtype=bool)
    mark[a] = True
    b = np.flatnonzero(mark)

    syms = ctx.bwt_r[b]
    order = np.argsort(syms, kind="stable")  # radix sort on uint16 keys
    rows = b[order]
    counts = np.bincount(syms, minlength=sigma + 1)
    offsets = np.zeros(sigma + 2, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return CandidateLists(
        a=a,
        b=b,
        values=tables.slpr[rows],
        offsets=offsets,
        p=np.ones(sigma + 1, dtype=np.int64),
        sources=ctx.text_of_row[rows],
    )


def extension_covered(
    ctx: SuffixContext, tables: SlprTables, j: int, x: int, symbol: int
) -> bool:
    """Whether the ``symbol``-side extension of run break ``j`` suffixes ``T[1, x]``."""
    bwt = ctx.bwt_r
    if not 2 <= j <= ctx.n or bwt[j - 1] == bwt[j]:
        raise NotARunBreak(f"row {j} is not a run break")
    if symbol not in (bwt[j - 1], bwt[j]):
        raise ValueError(f"symbol {symbol} is on neither side of run break {j}")
    i = bwt_pos(ctx, x)
    return bool(bwt[i] == symbol and ctx.psv[j] < tables.slpr[i] < ctx.nsv[j])


@numba.njit(cache=True)
def _scan_quadratic(bwt, psv, nsv, cand_sym, cand_slpr, n):
    m = cand_sym.shape[0]
    for i in range(2, n + 1):
        if bwt[i - 1] == bwt[i]:
            continue
        for ip in (i - 1, i):
            c = bwt[ip]
            found = False
            for k in range(m):
                if cand_sym[k] == c and psv[i] < cand_slpr[k] < nsv[i]:
                    found = True
                    break
            if not found:
                return False, i, c
    return True, -1, -1


@numba.njit(cache=True)
def _scan_linear(bwt, psv, nsv, values, offsets, n, debug):
    """Returns (accepted, row, symbol, cursor_violation).

    With ``debug`` set, the largest entry skipped so far for each symbol is
    tracked; rejecting a break whose box contains a skipped entry is reported
    as a cursor violation.
    """
    nsym = offsets.shape[0] - 1
    p = np.zeros(nsym, dtype=np.int64)  # 0-based cursor per symbol
    skipped = np.full(nsym, -1, dtype=np.int64)
    for i in range(2, n + 1):
        if bwt[i - 1] == bwt[i]:
            continue
        for ip in (i - 1, i):
            c = bwt[ip]
            lo = offsets[c]
            size = offsets[c + 1] - lo
            if size == 0:
                return False, i, c, False
            while values[lo + p[c]] <= psv[i]:
                if size == p[c] + 1:
                    return False, i, c, False
                skipped[c] = max(skipped[c], values[lo + p[c]])
                p[c] += 1
            if nsv[i] <= values[lo + p[c]]:
                # a skipped entry inside box(i) would make this rejection unsound
                return False, i, c, debug and psv[i] < skipped[c] < nsv[i]
    return True, -1, -1, False


@numba.njit(cache=True)
def _scan_minimal(psv, nsv, values, offsets):
    """Returns (accepted, symbol, 0-based index of the later entry)."""
    for c in range(offsets.shape[0] - 1):
        for k in range(offsets[c] + 1, offsets[c + 1]):
            if psv[values[k]] < nsv[values[k - 1]]:
                return False, c, k
    return True, -1, -1


def test_suffixient_quadratic(ctx: SuffixContext, tables: SlprTables, s) -> Verdict:
    s = _as_set(ctx, s)
    rows = ctx.row_of_text[s.positions]
    ok, row, sym = _scan_quadratic(
        ctx.bwt_r, ctx.psv, ctx.nsv, ctx.bwt_r[rows].astype(np.int64), tables.slpr[rows], ctx.n
    )
    return Verdict(True) if ok else Verdict(False, SufficiencyWitness(int(row), int(sym)))


def test_suffixient_linear(
    ctx: SuffixContext,
    tables: SlprTables,
    s,
    *,
    lists: Optional[CandidateLists] = None,
    debug: bool = False,
) -> Verdict:
    if lists is None:
        lists = build_candidates(ctx, tables, s)
    ok, row, sym, violated = _scan_linear(
        ctx.bwt_r, ctx.psv, ctx.nsv, lists.values, lists.offsets, ctx.n, debug
    )
    if violated:
        raise AssertionError(f"cursor soundness violated at run break {row}, symbol {sym}")
    return Verdict(True) if ok else Verdict(False, SufficiencyWitness(int(row), int(sym)))


def test_minimal(
    ctx: SuffixContext,
    tables: SlprTables,
    s,
    *,
    lists: Optional[CandidateLists] = None,
) -> Verdict:
    """Decide minimum cardinality for a set already known to be suffixient."""
    if lists is None:
        lists = build_candidates(ctx, tables, s)
    ok, sym, k = _scan_minimal(ctx.psv, ctx.nsv, lists.values, lists.offsets)
    if ok:
        return Verdict(True)
    first = int(k - lists.offsets[sym])
    pair = (int(lists.sources[k - 1]), int(lists.sources[k]))
    return Verdict(False, MinimalityWitness(int(sym), first, first + 1, pair))


# pytest would otherwise collect these when a test module imports them
for _fn in (test_suffixient_quadratic, test_suffixient_linear, test_minimal):
    _fn.__test__ = False

"""SBPR / SAPR / SLPR arrays.

For a BWT row ``i`` the SLPR entry is an LCP row whose value is the length of
the longest one-character right-extension suffixing the text prefix that ends
at ``text_pos(i)``. It is obtained by carrying a max-argmin of ``lcp_r`` across
each BWT run from the left (SBPR) and from the right (SAPR) and keeping the one
with the larger LCP value.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .text import SuffixContext, bwt_pos


@dataclass(frozen=True, eq=False)
class SlprTables:
    sbpr: np.ndarray
    sapr: np.ndarray
    slpr: np.ndarray


@numba.njit(cache=True)
def slpr_arrays(bwt, lcp, n):
    """Three linear passes over ``bwt[1..n]`` / ``lcp[1..n]``.

    Rows of the first BWT run are not a-below and keep SBPR = 1; rows of the
    last run are not b-above and keep SAPR = 1.
    """
    sbpr = np.ones(n + 1, dtype=np.int64)
    sapr = np.ones(n + 1, dtype=np.int64)
    slpr = np.ones(n + 1, dtype=np.int64)
    sbpr[0] = sapr[0] = slpr[0] = 0

    seen = False
    for i in range(2, n + 1):
        if bwt[i - 1] != bwt[i]:
            sbpr[i] = i
            seen = True
        elif seen:
            prev = sbpr[i - 1]
            sbpr[i] = i if lcp[i] <= lcp[prev] else prev

    seen = False
    for j in range(n - 1, 0, -1):
        if bwt[j] != bwt[j + 1]:
            sapr[j] = j + 1
            seen = True
        elif seen:
            nxt = sapr[j + 1]
            sapr[j] = nxt if lcp[nxt] <= lcp[j + 1] else j + 1

    for i in range(1, n + 1):
        b = sbpr[i]
        a = sapr[i]
        if lcp[b] > lcp[a]:
            slpr[i] = b
        elif lcp[a] > lcp[b]:
            slpr[i] = a
        else:
            slpr[i] = max(a, b)
    return sbpr, sapr, slpr


def compute_slpr(ctx: SuffixContext) -> SlprTables:
    return SlprTables(*slpr_arrays(ctx.bwt_r, ctx.lcp_r, ctx.n))


def longest_extension_len(ctx: SuffixContext, tables: SlprTables, x: int) -> int:
    """Length ``l`` such that ``T[x - l, x]`` is the longest right-extension suffixing ``T[1, x]``."""
    row = bwt_pos(ctx, x)
    # the sentinel row carries the full-text prefix; its extension "$" has l = 0
    return min(int(ctx.lcp_r[tables.slpr[row]]), x - 1)


def longest_extension_lengths(ctx: SuffixContext, tables: SlprTables) -> np.ndarray:
    """Vectorised :func:`longest_extension_len` for every ``x`` (slot 0 unused)."""
    out = np.zeros(ctx.n + 1, dtype=np.int64)
    x = np.arange(1, ctx.n + 1)
    out[1:] = np.minimum(ctx.lcp_r[tables.slpr[ctx.row_of_text[1:]]], x - 1)
    return out

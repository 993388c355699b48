"""Brute-force ground truth built straight from the string definitions.

Nothing here touches the suffix array, the BWT or the SLPR array. Substrings
are enumerated length by length; at length ``L`` every window ``T[s, s+L-1]``
carries an exact integer name (windows are equal iff names are equal), and the
name of ``T[s, s+L]`` is derived from the pair (name of ``T[s, s+L-1]``,
``T[s+L]``). A window is dropped as soon as it occurs once: a string occurring
once has at most one right-extension and so cannot be branching, and every
longer window starting there is unique as well.

Supermaximality uses the fact that a suffix of a right-maximal string is
right-maximal, so an extension ``E`` is a proper suffix of another extension
iff ``a.E`` is itself an extension for some symbol ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded
from .text import SuffixContext, Text
from .verifier import CandidateSet, candidate_set

DEFAULT_CAP = 4096


@dataclass(frozen=True, eq=False)
class Extension:
    """One-character right-extension ``T[start, start + length - 1]`` (leftmost occurrence)."""

    start: int
    length: int
    ends: np.ndarray
    supermaximal: bool

    @property
    def symbol_end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True, eq=False)
class ExtensionCatalog:
    text: Text
    # (start, length) of the leftmost occurrence; epsilon is (1, 0)
    right_maximal: list[tuple[int, int]]
    extensions: list[Extension]
    supermaximal: list[Extension]
    chi: int
    # longest_len[x] = l such that T[x - l, x] is the longest extension suffixing T[1, x]
    longest_len: np.ndarray
    _end_owner: np.ndarray = field(repr=False)
    _all_ends: np.ndarray = field(repr=False)

    def string(self, e: Extension) -> str:
        return self.text.window(e.start, e.symbol_end)

    def right_maximal_strings(self) -> set[str]:
        return {self.text.window(s, s + length - 1) for s, length in self.right_maximal}

    def extension_strings(self) -> dict[str, Extension]:
        return {self.string(e): e for e in self.extensions}


def lcs_len(alpha, beta) -> int:
    """Length of the longest common suffix of two sequences."""
    k = 0
    for a, b in zip(reversed(alpha), reversed(beta)):
        if a != b:
            break
        k += 1
    return k


def build_catalog(t: Text, cap: int = DEFAULT_CAP) -> ExtensionCatalog:
    n = t.n
    if n > cap:
        raise CapExceeded(f"text length {n} exceeds oracle cap {cap}")
    T0 = t.chars[1:].astype(np.int64)
    base = t.sigma + 1

    right_maximal: list[tuple[int, int]] = []
    suffix_seen = np.zeros(n + 1, dtype=bool)
    ext_start: list[int] = []
    ext_len: list[int] = []
    ext_ends: list[np.ndarray] = []
    nonsuper: list[np.ndarray] = []
    longest_len = np.zeros(n + 1, dtype=np.int64)

    starts = np.arange(n + 1, dtype=np.int64)  # 0-based starts of length-L windows
    names = np.zeros(n + 1, dtype=np.int64)
    prev_ext_at = None
    L = 0
    while starts.size:
        if starts[-1] == n - L:
            suffix_name = names[-1]
            suffix_seen[L] = True
        else:
            suffix_name = -1

        has_next = starts < n - L
        nxt_starts = starts[has_next]
        key = names[has_next] * base + T0[nxt_starts + L]
        uniq, first, inv = np.unique(key, return_index=True, return_inverse=True)
        inv = inv.ravel()
        owner = uniq // base

        width = int(names.max()) + 1
        branching = np.bincount(owner, minlength=width) >= 2
        is_rm = branching.copy()
        if suffix_name >= 0:
            is_rm[suffix_name] = True
        present, leftmost = np.unique(names, return_index=True)
        for name, pos in zip(present.tolist(), leftmost.tolist()):
            if is_rm[name]:
                right_maximal.append((int(starts[pos]) + 1, L))

        ext_mask = is_rm[owner]
        first_id = len(ext_start)
        ext_id = np.full(uniq.size, -1, dtype=np.int64)
        ext_id[ext_mask] = np.arange(first_id, first_id + int(ext_mask.sum()))
        win_ext = ext_id[inv]
        in_ext = win_ext >= 0
        order = np.argsort(win_ext[in_ext], kind="stable")
        grouped_ends = nxt_starts[in_ext][order] + L + 1
        splits = np.cumsum(np.bincount(win_ext[in_ext] - first_id))[:-1]
        for u, ends in zip(np.flatnonzero(ext_mask).tolist(), np.split(grouped_ends, splits)):
            ext_start.append(int(nxt_starts[first[u]]) + 1)
            ext_len.append(L + 1)
            ext_ends.append(ends)
        longest_len[grouped_ends] = L

        if prev_ext_at is not None:
            shadowed = prev_ext_at[nxt_starts[in_ext] + 1]
            assert (shadowed >= 0).all(), "suffix of an extension must be an extension"
            nonsuper.append(shadowed)
        prev_ext_at = np.full(n + 1, -1, dtype=np.int64)
        prev_ext_at[nxt_starts[in_ext]] = win_ext[in_ext]

        repeated = np.bincount(inv, minlength=uniq.size)[inv] >= 2
        starts = nxt_starts[repeated]
        names = inv[repeated]
        L += 1

    for length in np.flatnonzero(~suffix_seen).tolist():
        right_maximal.append((n - length + 1, length))

    dominated = np.zeros(len(ext_start), dtype=bool)
    for ids in nonsuper:
        dominated[ids] = True
    extensions = [
        Extension(s, length, ends, not d)
        for s, length, ends, d in zip(ext_start, ext_len, ext_ends, dominated.tolist())
    ]
    supermaximal = [e for e in extensions if e.supermaximal]
    owner_of_end = np.repeat(np.arange(len(extensions)), [e.ends.size for e in extensions])
    all_ends = np.concatenate(ext_ends) if ext_ends else np.zeros(0, dtype=np.int64)
    return ExtensionCatalog(
        t, right_maximal, extensions, supermaximal, len(supermaximal), longest_len,
        owner_of_end, all_ends,
    )


def uncovered_extensions(catalog: ExtensionCatalog, s) -> list[Extension]:
    """Extensions that suffix no prefix ``T[1, x]`` with ``x`` in ``s``."""
    if not isinstance(s, CandidateSet):
        s = candidate_set(s, catalog.text.n)
    member = np.zeros(catalog.text.n + 1, dtype=bool)
    member[s.positions] = True
    hits = np.bincount(
        catalog._end_owner[member[catalog._all_ends]], minlength=len(catalog.extensions)
    )
    return [catalog.extensions[k] for k in np.flatnonzero(hits == 0).tolist()]


def is_suffixient_bruteforce(catalog: ExtensionCatalog, s) -> bool:
    return not uncovered_extensions(catalog, s)


def smallest_set_bruteforce(catalog: ExtensionCatalog) -> CandidateSet:
    """One position per supermaximal extension: its rightmost ending position."""
    chosen = [int(e.ends[-1]) for e in catalog.supermaximal]
    assert len(set(chosen)) == catalog.chi, "supermaximal extensions share an end"
    return candidate_set(chosen, catalog.text.n)


def coverage_check_observation1(ctx: SuffixContext, catalog: ExtensionCatalog) -> bool:
    """Every extension suffixes the window some run break induces on one of its sides.

    The window of break ``i`` on side ``i'`` is ``T[text_pos(i') - lcp_r[i], text_pos(i')]``,
    clipped at position 1 (the wrapped sentinel row).
    """
    n = ctx.n
    breaks = np.flatnonzero(ctx.bwt_r[2:] != ctx.bwt_r[1:-1]) + 2
    reach = np.full(n + 1, -1, dtype=np.int64)
    for side in (breaks - 1, breaks):
        tp = ctx.text_of_row[side]
        np.maximum.at(reach, tp, np.minimum(ctx.lcp_r[breaks], tp - 1))
    lengths = np.array([e.length for e in catalog.extensions], dtype=np.int64)
    ok = reach[catalog._all_ends] >= lengths[catalog._end_owner] - 1
    hits = np.bincount(catalog._end_owner[ok], minlength=len(catalog.extensions))
    return bool((hits > 0).all())

"""Hot search kernels for the brute-force oracle.

The kernels are written as plain Python loops over numpy int64 arrays so
that exactly the same source runs in two modes:

* JIT-compiled with numba's @njit (the default): this is what makes
  full Table-style sweeps and extended-range oracle runs take seconds.
* Interpreted fallback, selected by setting ``CYCPERM_NO_NUMBA=1`` in the
  environment (also used automatically when numba is not importable).

``benchmarks/bench_oracle.py`` compares the two modes on the same
workload. The mode is fixed at import time; the selected flavour is
reported in ``JIT_ENABLED``.
"""
from __future__ import annotations

import os

import numpy as np


def _numba_disabled_by_env() -> bool:
    return os.environ.get("CYCPERM_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


JIT_ENABLED = not _numba_disabled_by_env()
if JIT_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
        JIT_ENABLED = False

if JIT_ENABLED:
    def _jit(fn):
        return _njit(cache=True, nogil=True)(fn)
else:
    def _jit(fn):
        return fn


@_jit
def _match_ending(word, m, v, pat, k):
    """True iff some subsequence of word[:m] + [v] ending at v matches pat.

    Depth-first choice of positions for pattern slots 0..k-2; slot k-1 is
    pinned to the appended value v. Order relations are checked against
    every placed slot, so all pattern pairs are covered.
    """
    if k == 1:
        return True
    if m < k - 1:
        return False
    pos = np.empty(k - 1, np.int64)
    t = 0
    cand = 0
    while True:
        hi = m - k + 1 + t  # leave room for the remaining slots
        c = cand
        found = False
        while c <= hi:
            w = word[c]
            good = (pat[t] < pat[k - 1]) == (w < v)
            if good:
                for s in range(t):
                    if (pat[s] < pat[t]) != (word[pos[s]] < w):
                        good = False
                        break
            if good:
                found = True
                break
            c += 1
        if found:
            pos[t] = c
            if t == k - 2:
                return True
            t += 1
            cand = c + 1
        else:
            t -= 1
            if t < 0:
                return False
            cand = pos[t] + 1


@_jit
def _extension_ok(word, m, v, pats, plens):
    """True iff appending v to word[:m] completes none of the patterns."""
    for t in range(pats.shape[0]):
        if _match_ending(word, m, v, pats[t], plens[t]):
            return False
    return True


@_jit
def _is_n_cycle(word, n):
    """True iff the permutation word (1-based values) is a single n-cycle.

    Scans for a fixed point or 2-cycle first (cheap and usually decisive
    for rejects), then traces the cycle through 1.
    """
    if n == 1:
        return True
    for i in range(1, n + 1):
        j = word[i - 1]
        if j == i:
            return False
        if n > 2 and word[j - 1] == i:
            return False
    steps = 1
    j = word[0]
    while j != 1:
        j = word[j - 1]
        steps += 1
    return steps == n


@_jit
def _count_from_root(n, root, pats, plens, cyclic_only):
    """Count avoiders in the search subtree rooted at first entry = root.

    Iterative backtracking over one-line positions left to right, placing
    unused values and pruning any placement that completes a pattern.
    Cyclicity is only tested at complete leaves; partial-cycle pruning is
    not sound on one-line prefixes and is not attempted.

    Returns (count, nodes) where nodes is the number of placements made.
    """
    word = np.empty(n, np.int64)
    used = np.zeros(n + 1, np.bool_)
    nxt = np.empty(n + 1, np.int64)
    if not _extension_ok(word, 0, root, pats, plens):
        return 0, 0
    word[0] = root
    used[root] = True
    m = 1
    nxt[1] = 1
    count = 0
    nodes = 1
    while True:
        if m == n:
            if (not cyclic_only) or _is_n_cycle(word, n):
                count += 1
            m -= 1
            used[word[m]] = False
            if m == 0:
                break
            continue
        v = nxt[m]
        while v <= n and (used[v] or not _extension_ok(word, m, v, pats, plens)):
            v += 1
        if v <= n:
            nxt[m] = v + 1
            word[m] = v
            used[v] = True
            m += 1
            nxt[m] = 1
            nodes += 1
        else:
            m -= 1
            used[word[m]] = False
            if m == 0:
                break
    return count, nodes


def pack_patterns(pattern_entry_tuples) -> tuple[np.ndarray, np.ndarray]:
    """Pack pattern entry tuples into the (pats, plens) kernel arrays."""
    pats_list = list(pattern_entry_tuples)
    kmax = max(len(p) for p in pats_list)
    pats = np.zeros((len(pats_list), kmax), np.int64)
    plens = np.zeros(len(pats_list), np.int64)
    for i, p in enumerate(pats_list):
        plens[i] = len(p)
        pats[i, : len(p)] = p
    return pats, plens


def warm_up() -> None:
    """Trigger JIT compilation on a tiny input (no-op in fallback mode)."""
    pats, plens = pack_patterns([(1, 2, 3)])
    _count_from_root(3, 1, pats, plens, True)

"""Brute-force ground-truth oracle for pattern-avoiding permutation counts.

Counts (and optionally lists) permutations of length n avoiding a pattern
set, either over all permutations or restricted to single n-cycles. The
search is pruned backtracking over one-line prefixes; see _kernels for
the inner loops.

The oracle is deliberately independent of every closed-form formula in
this package so the two can be checked against each other.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .errors import LimitExceeded
from .patterns import Pattern, canonical_patterns
from .perm import Permutation

#: Largest n the oracle accepts unless overridden (config, not a constant:
#: raise via the cap argument, CYCPERM_ORACLE_CAP, or the CLI --cap flag).
DEFAULT_CAP = 13

_ENV_CAP = "CYCPERM_ORACLE_CAP"
_ENV_WORKERS = "CYCPERM_WORKERS"


def configured_cap(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(_ENV_CAP)
    return int(env) if env else DEFAULT_CAP


def configured_workers(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get(_ENV_WORKERS)
    return max(1, int(env)) if env else 1


@dataclass(frozen=True)
class EnumerationRequest:
    """One oracle invocation: length, patterns, and search options."""

    n: int
    patterns: tuple[Pattern, ...]
    cyclic_only: bool = True
    collect: bool = False
    parallelism: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.patterns:
            raise ValueError("the pattern set must be nonempty")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        object.__setattr__(self, "patterns", canonical_patterns(self.patterns))


@dataclass
class EnumerationResult:
    count: int
    witnesses: Optional[list[Permutation]] = None
    nodes_visited: int = 0
    elapsed: float = 0.0


def count_avoiders(req: EnumerationRequest, cap: Optional[int] = None) -> EnumerationResult:
    """Count all length-n permutations avoiding every pattern in the set."""
    if req.cyclic_only:
        raise ValueError("count_avoiders requires a request with cyclic_only=False")
    return run_enumeration(req, cap=cap)


def count_cyclic_avoiders(req: EnumerationRequest, cap: Optional[int] = None) -> EnumerationResult:
    """Count the n-cycles (as permutations) avoiding every pattern."""
    if not req.cyclic_only:
        raise ValueError("count_cyclic_avoiders requires a request with cyclic_only=True")
    return run_enumeration(req, cap=cap)


def list_cyclic_avoiders(
    n: int, qs: Iterable[Pattern], cap: Optional[int] = None
) -> list[Permutation]:
    """All cyclic avoiders of length n, in lexicographic one-line order."""
    req = EnumerationRequest(n=n, patterns=tuple(qs), cyclic_only=True, collect=True)
    return run_enumeration(req, cap=cap).witnesses


def run_enumeration(req: EnumerationRequest, cap: Optional[int] = None) -> EnumerationResult:
    """Execute a request as stated; prefer the count_*/list_* wrappers."""
    _check_cap(req.n, cap)
    t0 = time.perf_counter()
    pats, plens = _kernels.pack_patterns([q.entries for q in req.patterns])
    if req.collect:
        witnesses, nodes = _collect(req.n, pats, plens, req.cyclic_only)
        return EnumerationResult(
            count=len(witnesses),
            witnesses=witnesses,
            nodes_visited=nodes,
            elapsed=time.perf_counter() - t0,
        )
    count, nodes = _count(
        req.n, pats, plens, req.cyclic_only, configured_workers(req.parallelism)
    )
    return EnumerationResult(count=count, nodes_visited=nodes, elapsed=time.perf_counter() - t0)


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = configured_cap(cap)
    if n > limit:
        raise LimitExceeded(
            f"n={n} exceeds the oracle cap {limit}; raise it with --cap/{_ENV_CAP} "
            "or --extended if you accept the runtime"
        )


def _count(n, pats, plens, cyclic_only, workers) -> tuple[int, int]:
    # Top-level partition: one kernel call per choice of the first entry.
    # Per-root results are reduced in root order, so any worker count gives
    # identical output; nogil kernels let threads overlap when jitted.
    roots = range(1, n + 1)
    if workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_kernels._count_from_root, n, r, pats, plens, cyclic_only)
                for r in roots
            ]
            results = [f.result() for f in futures]
    else:
        results = [_kernels._count_from_root(n, r, pats, plens, cyclic_only) for r in roots]
    count = sum(c for c, _ in results)
    nodes = sum(nd for _, nd in results)
    return count, nodes


def _collect(n, pats, plens, cyclic_only) -> tuple[list[Permutation], int]:
    # Witness extraction shares the kernel's pruning predicates but runs a
    # plain recursive search; values are tried ascending, so the output is
    # already in lexicographic order.
    word = np.empty(n, np.int64)
    used = [False] * (n + 1)
    out: list[Permutation] = []
    nodes = 0

    def rec(m: int) -> None:
        nonlocal nodes
        if m == n:
            if not cyclic_only or _kernels._is_n_cycle(word, n):
                out.append(Permutation(tuple(int(x) for x in word)))
            return
        for v in range(1, n + 1):
            if not used[v] and _kernels._extension_ok(word, m, v, pats, plens):
                word[m] = v
                used[v] = True
                nodes += 1
                rec(m + 1)
                used[v] = False

    rec(0)
    return out, nodes

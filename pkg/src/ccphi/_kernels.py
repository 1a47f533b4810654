"""Compiled inner loops for the recursive pair-substitution compressor.

The pair-substitution iteration dominates every sweep, so the scan/replace
loops are JIT-compiled. Python-level wrappers with validation live in
:mod:`ccphi.complexity`.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict


@njit(cache=True)
def is_constant(arr):
    for i in range(1, arr.size):
        if arr[i] != arr[0]:
            return False
    return True


@njit(cache=True)
def _best_pair(arr, base):
    # Pair counting convention: adjacent pairs of distinct symbols are
    # counted at every position (overlapping window); a run of k identical
    # symbols contributes k // 2 occurrences of its pair. Ties between
    # equally frequent pairs break to the leftmost first occurrence.
    n = arr.size
    counts = Dict.empty(types.int64, types.int64)
    first = Dict.empty(types.int64, types.int64)
    for i in range(n - 1):
        a = arr[i]
        b = arr[i + 1]
        if a != b:
            k = a * base + b
            if k in counts:
                counts[k] += 1
            else:
                counts[k] = 1
                first[k] = i
    i = 0
    while i < n:
        j = i
        v = arr[i]
        while j < n and arr[j] == v:
            j += 1
        run = j - i
        if run >= 2:
            k = v * base + v
            if k in counts:
                counts[k] += run // 2
            else:
                counts[k] = run // 2
                first[k] = i
        i = j
    best_k = np.int64(-1)
    best_c = np.int64(-1)
    best_f = np.int64(n)
    for k in counts:
        c = counts[k]
        f = first[k]
        if c > best_c or (c == best_c and f < best_f):
            best_c = c
            best_f = f
            best_k = k
    return best_k // base, best_k % base


@njit(cache=True)
def _replace_pair(arr, a, b, fresh):
    # Single left-to-right pass, non-overlapping occurrences.
    n = arr.size
    out = np.empty(n, np.int64)
    m = 0
    i = 0
    while i < n:
        if i < n - 1 and arr[i] == a and arr[i + 1] == b:
            out[m] = fresh
            i += 2
        else:
            out[m] = arr[i]
            i += 1
        m += 1
    return out[:m]


@njit(cache=True)
def nsrps_step_kernel(arr):
    m = np.int64(arr.max())
    a, b = _best_pair(arr, m + 1)
    return _replace_pair(arr, a, b, m + 1)


@njit(cache=True)
def etc_iterations_kernel(arr):
    cur = arr
    iters = 0
    while cur.size > 1 and not is_constant(cur):
        m = np.int64(cur.max())
        a, b = _best_pair(cur, m + 1)
        cur = _replace_pair(cur, a, b, m + 1)
        iters += 1
    return iters

"""Independent brute-force oracles the production code is checked against.

Deliberately naive: the Lempel-Ziv oracle materializes the full substring
set at every scan position, the pair-substitution oracle recounts pairs
with plain dicts, and the network-step oracle composes boolean reductions
gate by gate. None of them share code with the measured implementations.
"""

from functools import reduce
from operator import and_, or_, xor

from ccphi.boolnet import Gate


def lz_count_oracle(symbols) -> int:
    """Phrase count via explicit substring-set membership."""
    seq = tuple(symbols)
    n = len(seq)
    if n == 0:
        raise ValueError("empty")
    count = 0
    start, end = 0, 1
    while end <= n:
        prefix = seq[: end - 1]
        vocabulary = {
            prefix[i:j]
            for i in range(len(prefix))
            for j in range(i + 1, len(prefix) + 1)
        }
        if seq[start:end] in vocabulary:
            end += 1
        else:
            count += 1
            start = end
            end += 1
    if start < n:
        count += 1
    return count


def pair_substitution_oracle(symbols) -> list[int]:
    """One substitution step recomputed with plain-dict pair counting."""
    s = list(symbols)
    n = len(s)
    counts: dict = {}
    first: dict = {}
    for i in range(n - 1):
        if s[i] != s[i + 1]:
            pair = (s[i], s[i + 1])
            counts[pair] = counts.get(pair, 0) + 1
            first.setdefault(pair, i)
    i = 0
    while i < n:
        j = i
        while j < n and s[j] == s[i]:
            j += 1
        if j - i >= 2:
            pair = (s[i], s[i])
            counts[pair] = counts.get(pair, 0) + (j - i) // 2
            first.setdefault(pair, i)
        i = j
    best = min(counts, key=lambda p: (-counts[p], first[p]))
    fresh = max(s) + 1
    out: list[int] = []
    i = 0
    while i < n:
        if i < n - 1 and (s[i], s[i + 1]) == best:
            out.append(fresh)
            i += 2
        else:
            out.append(s[i])
            i += 1
    return out


_REDUCERS = {Gate.OR: or_, Gate.AND: and_, Gate.XOR: xor}


def step_oracle(spec, state) -> tuple:
    """Synchronous update composed directly from per-gate reductions."""
    bits = tuple(state)
    nxt = []
    for i, gate in enumerate(spec.gates):
        inputs = [bits[j] for j in range(spec.n) if j != i]
        nxt.append(reduce(_REDUCERS[gate], inputs))
    return tuple(nxt)

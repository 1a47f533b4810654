"""Sequence complexity measures rooted in lossless compression.

Three measures over sequences of small non-negative integer symbols:

* Lempel-Ziv (1976) phrase counting: a left-to-right parse where the
  current phrase grows while it can be copied from anywhere in the
  preceding text; the phrase count ``c(n)`` is normalized to
  ``(c(n)/n) * log_alpha(n)``.
* Effort-To-Compress: the number of recursive pair-substitution steps
  (most frequent adjacent pair replaced by a fresh symbol) needed to
  reduce the sequence to a constant, normalized by ``L - 1``.
* Empirical Shannon entropy in bits per symbol.

All functions are pure and accept any integer sequence (list, tuple,
numpy array or :class:`SymbolSequence`).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from ._kernels import etc_iterations_kernel, is_constant, nsrps_step_kernel

# chr() mapping base for substring search; keeps every symbol a valid
# single code point clear of the surrogate block
_CHR_BASE = 0xE000
_MAX_SYMBOL = 0x10FFFF - _CHR_BASE


@dataclass(frozen=True)
class SymbolSequence:
    """A finite symbol sequence with a declared alphabet size.

    The declared alphabet is what normalization uses; intermediate
    pair-substitution sequences may contain symbols beyond it.
    """

    symbols: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if any(s < 0 for s in self.symbols):
            raise ValueError("symbols must be non-negative integers")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)


Symbols = Union[SymbolSequence, Sequence[int], np.ndarray]


class LZResult(NamedTuple):
    component_count: int
    normalized: float


class ETCResult(NamedTuple):
    iterations: int
    normalized: float


def _as_list(seq: Symbols) -> list[int]:
    if isinstance(seq, SymbolSequence):
        return list(seq.symbols)
    out = [int(s) for s in seq]
    if any(s < 0 for s in out):
        raise ValueError("symbols must be non-negative integers")
    return out


def _as_text(symbols: list[int]) -> str:
    if symbols and max(symbols) > _MAX_SYMBOL:
        raise ValueError("symbol value too large")
    return "".join(chr(_CHR_BASE + s) for s in symbols)


def lz_parse(seq: Symbols) -> list[list[int]]:
    """Parse into Lempel-Ziv components, returned in order.

    The scan grows the current phrase while it occurs as a contiguous
    substring of everything before the phrase's last element; when the
    phrase becomes novel it is closed and a new one starts. The trailing
    phrase counts as a component even if it never became novel.
    """
    symbols = _as_list(seq)
    if not symbols:
        raise ValueError("cannot parse an empty sequence")
    text = _as_text(symbols)
    n = len(text)
    parts = []
    start, end = 0, 1
    while end <= n:
        if text[start:end] in text[: end - 1]:
            end += 1
        else:
            parts.append(symbols[start:end])
            start = end
            end += 1
    if start < n:
        parts.append(symbols[start:])
    return parts


def lz_parse_count(seq: Symbols) -> int:
    """Number of components c(n) in the Lempel-Ziv parse."""
    return len(lz_parse(seq))


def _alphabet_of(seq: Symbols, alphabet_size: int | None) -> int:
    if alphabet_size is not None:
        return int(alphabet_size)
    if isinstance(seq, SymbolSequence):
        return seq.alphabet_size
    return 2


def lz_normalized(seq: Symbols, alphabet_size: int | None = None) -> float:
    """Normalized Lempel-Ziv complexity ``(c(n)/n) * log_alpha(n)``.

    ``alpha`` is the declared alphabet size, never the number of distinct
    symbols actually observed (a constant response still has a 2-symbol
    alphabet). Defaults to 2, the binary-network case. May exceed 1 for
    finite lengths. Returns 0.0 for single-symbol input.
    """
    symbols = _as_list(seq)
    alpha = _alphabet_of(seq, alphabet_size)
    if alpha < 2:
        raise ValueError("alphabet_size must be at least 2")
    n = len(symbols)
    if n == 0:
        raise ValueError("cannot measure an empty sequence")
    if n == 1:
        return 0.0
    c = lz_parse_count(symbols)
    return (c / n) * (math.log(n) / math.log(alpha))


def lz(seq: Symbols, alphabet_size: int | None = None) -> LZResult:
    """Component count and normalized value in one call."""
    return LZResult(lz_parse_count(seq), lz_normalized(seq, alphabet_size))


def nsrps_step(seq: Symbols) -> list[int]:
    """One pair-substitution step.

    Every non-overlapping left-to-right occurrence of the most frequent
    adjacent pair is replaced by a fresh symbol (current maximum plus
    one). The caller must check the halting condition first: constant or
    length < 2 input is an error.
    """
    symbols = _as_list(seq)
    if len(symbols) < 2:
        raise ValueError("need at least 2 symbols to substitute a pair")
    arr = np.asarray(symbols, dtype=np.int64)
    if is_constant(arr):
        raise ValueError("constant sequence has no pair to substitute")
    return nsrps_step_kernel(arr).tolist()


def etc(seq: Symbols) -> ETCResult:
    """Effort-To-Compress: pair-substitution steps until constant.

    Normalized by ``L - 1`` where L is the input length, so the value is
    always in [0, 1]. Sequences of length <= 1 and constant sequences
    need no effort: (0, 0.0).
    """
    symbols = _as_list(seq)
    n = len(symbols)
    if n <= 1:
        return ETCResult(0, 0.0)
    arr = np.asarray(symbols, dtype=np.int64)
    iterations = int(etc_iterations_kernel(arr))
    return ETCResult(iterations, iterations / (n - 1))


def etc_trace(seq: Symbols) -> list[list[int]]:
    """Full substitution chain, input included, for inspection."""
    chain = [_as_list(seq)]
    while len(chain[-1]) > 1 and not is_constant(np.asarray(chain[-1], np.int64)):
        chain.append(nsrps_step(chain[-1]))
    return chain


def shannon_entropy(seq: Symbols) -> float:
    """Empirical Shannon entropy in bits per symbol."""
    symbols = _as_list(seq)
    if not symbols:
        raise ValueError("cannot measure an empty sequence")
    n = len(symbols)
    h = 0.0
    for count in Counter(symbols).values():
        p = count / n
        h -= p * math.log2(p)
    return h

"""Base-2 sequences, the correlation operator and map algebra.

A bit sequence is the primitive object.  Correlating d of them column-wise
produces a sequence over the 2^d-symbol product alphabet; for d=2 the four
symbols carry the conventional aliases 00=A, 11=B, 10=C, 01=D.  Maps act by
element-wise addition modulo two and are involutions.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

from .errors import BudgetExceededError

Symbol = Tuple[int, ...]

DEFAULT_ENUM_BUDGET = 1 << 24
ENUM_BUDGET_ENV = "SPINCORR_ENUM_BUDGET"

ALIAS_OF_PAIR = {(0, 0): "A", (1, 1): "B", (1, 0): "C", (0, 1): "D"}
PAIR_OF_ALIAS = {v: k for k, v in ALIAS_OF_PAIR.items()}


def enumeration_budget() -> int:
    """Current enumeration budget; overridable via SPINCORR_ENUM_BUDGET."""
    raw = os.environ.get(ENUM_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_ENUM_BUDGET


@dataclass(frozen=True)
class BitSeq:
    """A fixed-length sequence of bits; the ontic element of the model."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 1:
            raise ValueError("a bit sequence needs length n >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bit sequence elements must be 0 or 1")
        object.__setattr__(self, "bits", tuple(self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    @classmethod
    def from_string(cls, text: str) -> "BitSeq":
        return cls(tuple(int(ch) for ch in text.strip()))


@dataclass(frozen=True)
class CorrSeq:
    """A length-n sequence over the order-d product alphabet."""

    order: int
    symbols: Tuple[Symbol, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("correlation order must be positive")
        if len(self.symbols) < 1:
            raise ValueError("a correlation sequence needs length n >= 1")
        symbols = tuple(tuple(s) for s in self.symbols)
        for sym in symbols:
            if len(sym) != self.order or any(b not in (0, 1) for b in sym):
                raise ValueError(
                    f"every symbol must be a {self.order}-tuple of bits"
                )
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return render(self)

    def column(self, i: int) -> BitSeq:
        """The i-th underlying bit sequence."""
        return BitSeq(tuple(sym[i] for sym in self.symbols))


def correlate(seqs: Sequence[BitSeq]) -> CorrSeq:
    """Glue d >= 2 equal-length bit sequences column-wise.

    Input order is preserved; the operator is non-commutative in its effect
    on the sign of m.
    """
    if len(seqs) < 2:
        raise ValueError("correlation needs at least 2 sequences")
    n = len(seqs[0])
    if any(len(s) != n for s in seqs):
        raise ValueError("correlation needs sequences of equal length")
    symbols = tuple(zip(*(s.bits for s in seqs)))
    return CorrSeq(order=len(seqs), symbols=symbols)


def count_symbols(c: CorrSeq) -> Dict[Symbol, int]:
    """Occurrence counts over the full 2^d alphabet; missing symbols are 0."""
    counts = {sym: 0 for sym in itertools.product((0, 1), repeat=c.order)}
    for sym in c.symbols:
        counts[sym] += 1
    return counts


def apply_map(initial: CorrSeq, mapping: CorrSeq) -> CorrSeq:
    """Element-wise addition modulo two; an involution."""
    if initial.order != mapping.order:
        raise ValueError("map must have the same order as the sequence")
    if len(initial) != len(mapping):
        raise ValueError("map must have the same length as the sequence")
    symbols = tuple(
        tuple(a ^ b for a, b in zip(sa, sb))
        for sa, sb in zip(initial.symbols, mapping.symbols)
    )
    return CorrSeq(order=initial.order, symbols=symbols)


def enumerate_sequences(n: int, d: int, budget: int | None = None) -> Iterator[CorrSeq]:
    """All 2^(d*n) order-d sequences of length n, in lexicographic order."""
    if budget is None:
        budget = enumeration_budget()
    total = 1 << (d * n)
    if total > budget:
        raise BudgetExceededError(
            f"enumerating {total} sequences exceeds the budget of {budget}"
        )
    alphabet = tuple(itertools.product((0, 1), repeat=d))
    for symbols in itertools.product(alphabet, repeat=n):
        yield CorrSeq(order=d, symbols=symbols)


def render(c: CorrSeq) -> str:
    """Text form: d=1 "100101", d=2 "CADBAC", d>=3 "110,111,100"."""
    if c.order == 1:
        return "".join(str(sym[0]) for sym in c.symbols)
    if c.order == 2:
        return "".join(ALIAS_OF_PAIR[sym] for sym in c.symbols)
    return ",".join("".join(str(b) for b in sym) for sym in c.symbols)


def parse(text: str, order: int | None = None) -> CorrSeq:
    """Parse the forms produced by :func:`render`."""
    text = text.strip()
    if "," in text:
        symbols = tuple(
            tuple(int(ch) for ch in chunk.strip()) for chunk in text.split(",")
        )
        return CorrSeq(order=len(symbols[0]), symbols=symbols)
    if text and text[0] in PAIR_OF_ALIAS:
        symbols = tuple(PAIR_OF_ALIAS[ch] for ch in text)
        return CorrSeq(order=2, symbols=symbols)
    if order == 2:
        symbols = tuple(PAIR_OF_ALIAS[ch] for ch in text)
        return CorrSeq(order=2, symbols=symbols)
    symbols = tuple((int(ch),) for ch in text)
    return CorrSeq(order=1, symbols=symbols)

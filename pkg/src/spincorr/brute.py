"""Exhaustive and randomized oracles for small n.

Everything here re-derives results by direct enumeration or sampling, with
no reliance on the closed-form path of pathcount; it exists to cross-check
that path.
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .errors import BudgetExceededError
from .quantum_numbers import QN8, counts8_from_qn8, qn4_of_corrseq, qn8_from_counts
from .sequences import BitSeq, CorrSeq, apply_map, correlate, enumeration_budget

PAIR_FIELDS = {
    "10": ("tj10", "tm10", "tg10", "tl10"),
    "02": ("tj02", "tm02", "tg02", "tl02"),
    "12": ("tj12", "tm12", "tg12", "tl12"),
}


def _check_budget(total: int, budget: Optional[int]) -> None:
    limit = enumeration_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceededError(
            f"enumerating {total} items exceeds the budget of {limit}"
        )


def enumerate_base8_counts(n: int, budget: Optional[int] = None) -> Dict[tuple, int]:
    """Bin all 8^n order-3 sequences by their count vector in one pass.

    Keys are 8-tuples of counts in lexicographic symbol order.
    """
    _check_budget(8**n, budget)
    symbols = list(range(8))
    bins: Dict[tuple, int] = {}
    for seq in itertools.product(symbols, repeat=n):
        counts = [0] * 8
        for s in seq:
            counts[s] += 1
        key = tuple(counts)
        bins[key] = bins.get(key, 0) + 1
    return bins


def counts_key_to_qn8(key: tuple) -> QN8:
    """Interpret a lexicographic 8-tuple of counts as base-8 counts."""
    counts = {
        (b >> 2 & 1, b >> 1 & 1, b & 1): c for b, c in enumerate(key)
    }
    return qn8_from_counts(counts)


def phi_by_enumeration(q: QN8, budget: Optional[int] = None) -> int:
    """Count order-3 sequences whose measured quantum numbers equal q."""
    if counts8_from_qn8(q) is None:
        return 0
    _check_budget(8**q.n, budget)
    target = (q.n, q.tj10, q.tj02, q.tm10, q.tm02, q.tj12, q.tl12, q.k)
    total = 0
    for key, multiplicity in enumerate_base8_counts(q.n, budget).items():
        m = counts_key_to_qn8(key)
        if (m.n, m.tj10, m.tj02, m.tm10, m.tm02, m.tj12, m.tl12, m.k) == target:
            total += multiplicity
    return total


def witness_triples(
    n: int, budget: Optional[int] = None, **constraints: int
) -> Iterator[Tuple[BitSeq, BitSeq, BitSeq]]:
    """All (s1, s0, s2) triples whose pairwise quantum numbers match the
    given doubled-integer constraints (e.g. tj10=2, tm02=-1, tj12=3).

    The middle sequence is the reference; unknown constraint names raise.
    """
    valid = {name for fields in PAIR_FIELDS.values() for name in fields}
    unknown = set(constraints) - valid
    if unknown:
        raise ValueError(f"unknown constraints: {sorted(unknown)}")
    _check_budget(2 ** (3 * n), budget)
    for bits in itertools.product((0, 1), repeat=3 * n):
        s1 = BitSeq(bits[:n])
        s0 = BitSeq(bits[n : 2 * n])
        s2 = BitSeq(bits[2 * n :])
        pairs = {
            "10": qn4_of_corrseq(correlate([s1, s0])),
            "02": qn4_of_corrseq(correlate([s0, s2])),
            "12": qn4_of_corrseq(correlate([s1, s2])),
        }
        ok = True
        for pair, (fj, fm, fg, fl) in PAIR_FIELDS.items():
            q = pairs[pair]
            for name, value in ((fj, q.tj), (fm, q.tm), (fg, q.tg), (fl, q.tl)):
                if name in constraints and constraints[name] != value:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield s1, s0, s2


def conserved_quantum_numbers(initial: CorrSeq, mapping: CorrSeq) -> FrozenSet[str]:
    """Which of j, m, g, l the map leaves unchanged for this sequence."""
    before = qn4_of_corrseq(initial)
    after = qn4_of_corrseq(apply_map(initial, mapping))
    names = []
    for name, x, y in (
        ("j", before.tj, after.tj),
        ("m", before.tm, after.tm),
        ("g", before.tg, after.tg),
        ("l", before.tl, after.tl),
    ):
        if x == y:
            names.append(name)
    return frozenset(names)


def _random_corrseq(rng: random.Random, n: int) -> CorrSeq:
    return correlate(
        [
            BitSeq(tuple(rng.randrange(2) for _ in range(n))),
            BitSeq(tuple(rng.randrange(2) for _ in range(n))),
        ]
    )


def map_conservation_report(n: int, trials: int, seed: int) -> Dict:
    """Sample random maps and permutations, classifying conservation.

    Checks both directions of the permutation law: a map conserving all of
    j, m, g, l rearranges the symbol multiset (a row permutation), and a
    map built from a row permutation conserves all four.
    """
    rng = random.Random(seed)
    conserved_tally: Dict[FrozenSet[str], int] = {}
    mismatches: List[str] = []

    for _ in range(trials):
        initial = _random_corrseq(rng, n)
        mapping = _random_corrseq(rng, n)
        conserved = conserved_quantum_numbers(initial, mapping)
        conserved_tally[conserved] = conserved_tally.get(conserved, 0) + 1
        if conserved == frozenset("jmgl"):
            final = apply_map(initial, mapping)
            if sorted(final.symbols) != sorted(initial.symbols):
                mismatches.append(
                    f"all-conserving map is not a permutation: {initial} -> {final}"
                )

    for _ in range(trials):
        initial = _random_corrseq(rng, n)
        permuted = list(initial.symbols)
        rng.shuffle(permuted)
        final = CorrSeq(order=2, symbols=tuple(permuted))
        mapping = apply_map(initial, final)
        conserved = conserved_quantum_numbers(initial, mapping)
        if conserved != frozenset("jmgl"):
            mismatches.append(
                f"permutation map fails to conserve {set('jmgl') - conserved}"
            )

    return {
        "n": n,
        "trials": trials,
        "seed": seed,
        "conserved_tally": {
            "".join(sorted(k)) or "-": v for k, v in conserved_tally.items()
        },
        "mismatches": mismatches,
        "ok": not mismatches,
    }

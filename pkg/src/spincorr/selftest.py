"""Built-in verification suite driven by the `selftest` CLI command.

Each check pits an independent route (enumeration, random sampling, or a
raw lattice sum) against the closed-form implementation and reports one
pass/fail line.  The random seed is printed so failures reproduce.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from typing import Callable, List, Optional, TextIO, Tuple

from . import brute, pathcount
from .pathcount import Priors, f_factor, k_bounds, l12_bounds, probability_table, upsilon
from .quantum_numbers import (
    QN8,
    counts4_from_qn4,
    counts8_from_qn8,
    qn4_from_counts,
    qn4_of_corrseq,
)
from .selection import allowed_m_pairs, check_triangle, g12_range, j12_range
from .sequences import BitSeq, correlate


def _random_bitseq(rng: random.Random, n: int) -> BitSeq:
    return BitSeq(tuple(rng.randrange(2) for _ in range(n)))


def check_phi_equivalence(enum_n_max: int, phi_fn: Callable[[QN8], int]) -> List[str]:
    """phi agrees with one-pass enumeration over the full grid at small n."""
    problems = []
    for n in range(1, enum_n_max + 1):
        bins = brute.enumerate_base8_counts(n)
        for key, observed in bins.items():
            q = brute.counts_key_to_qn8(key)
            predicted = phi_fn(q)
            if predicted != observed:
                problems.append(
                    f"phi_by_enumeration mismatch at n={n}: counts {key} "
                    f"enumerated {observed}, phi gave {predicted}"
                )
        if sum(bins.values()) != 8**n:
            problems.append(f"enumeration at n={n} lost sequences")
    return problems


def check_random_triples(n_values: List[int], trials: int, rng: random.Random) -> List[str]:
    """Relations between the three pairwise measurements of random triples."""
    problems = []
    for n in n_values:
        for _ in range(trials):
            s1, s0, s2 = (_random_bitseq(rng, n) for _ in range(3))
            q10 = qn4_of_corrseq(correlate([s1, s0]))
            q02 = qn4_of_corrseq(correlate([s0, s2]))
            q12 = qn4_of_corrseq(correlate([s1, s2]))
            checks = [
                ("n identity", q10.n == n and q02.n == n and q12.n == n),
                ("m12 = m10 + m02", q12.tm == q10.tm + q02.tm),
                ("m12 = l02 - l10", q12.tm == q02.tl - q10.tl),
                ("l12 = l10 + m02", q12.tl == q10.tl + q02.tm),
                ("l12 = l02 - m10", q12.tl == q02.tl - q10.tm),
                ("j triangle", check_triangle(q10.tj, q02.tj, q12.tj)),
                (
                    "g range",
                    n - q10.tj - q02.tj <= q12.tg <= n - abs(q10.tj - q02.tj),
                ),
            ]
            for name, ok in checks:
                if not ok:
                    problems.append(
                        f"{name} failed at n={n} for ({s1}, {s0}, {s2})"
                    )
    return problems


def check_roundtrips(trials: int, rng: random.Random) -> List[str]:
    """counts -> quantum numbers -> counts is the identity."""
    problems = []
    for _ in range(trials):
        n = rng.randrange(1, 40)
        c4 = {}
        remaining = n
        for sym in ((0, 0), (1, 1), (1, 0)):
            c4[sym] = rng.randint(0, remaining)
            remaining -= c4[sym]
        c4[(0, 1)] = remaining
        if counts4_from_qn4(qn4_from_counts(c4)) != c4:
            problems.append(f"base-4 round trip failed for {c4}")
    return problems


def check_permutation_maps(n: int, trials: int, rng: random.Random) -> List[str]:
    report = brute.map_conservation_report(n, trials, rng.randrange(1 << 30))
    return list(report["mismatches"])


def _prior_grid(n_max: int, tj_max: int):
    for tj1 in range(0, tj_max + 1):
        for tj2 in range(0, tj_max + 1):
            for tJ in j12_range(tj1, tj2):
                for tM in range(-tJ, tJ + 1, 2):
                    for n in range(tj1 + tj2, n_max + 1):
                        yield n, tj1, tj2, tJ, tM


def check_normalization(n_max: int, tj_max: int) -> List[str]:
    """Probabilities sum to exactly 1; no negative path counts."""
    problems = []
    for n, tj1, tj2, tJ, tM in _prior_grid(n_max, tj_max):
        if n < 1:
            continue
        priors = Priors(n=n, tj10=tj1, tj02=tj2, tj12=tJ, tm12=tM)
        try:
            table = probability_table(priors)
        except ArithmeticError:
            continue  # degenerate priors are reported, not summed
        total = sum(p for _, _, p in table)
        if total != 1:
            problems.append(f"normalization failed for {priors}: sum = {total}")
        for tm10, tm02, _ in table:
            if upsilon(priors, tm10, tm02) < 0:
                problems.append(
                    f"negative path count for {priors}, pair ({tm10}, {tm02})"
                )
    return problems


def upsilon_full_lattice(priors: Priors, tm10: int, tm02: int) -> Fraction:
    """Reference path count: scan the whole (k, l12) rectangle, letting
    invalid lattice points contribute zero, with no precomputed bounds."""
    f_a = f_factor(priors.n, priors.tj10, tm10)
    f_b = f_factor(priors.n, priors.tj02, tm02)
    # crude but safe cap: k is a count bounded by both 2j10 and 2j02
    k_hi = min(priors.tj10, priors.tj02)
    total = 0
    for k_a in range(0, k_hi + 1):
        for k_b in range(0, k_hi + 1):
            sign = -1 if (k_b - k_a) % 2 else 1
            for tl12 in range(-priors.n, priors.n + 1):
                pa = pathcount.phi(
                    QN8(priors.n, priors.tj10, priors.tj02, tm10, tm02,
                        priors.tj12, tl12, k_a)
                )
                if pa == 0:
                    continue
                pb = pathcount.phi(
                    QN8(priors.n, priors.tj10, priors.tj02, tm10, tm02,
                        priors.tj12, tl12, k_b)
                )
                total += sign * pa * pb
    return f_a * f_b * total


def check_bounds_equivalence(n_max: int, tj_max: int) -> List[str]:
    """Appendix-style loop limits change nothing versus the raw lattice."""
    problems = []
    for n, tj1, tj2, tJ, tM in _prior_grid(n_max, tj_max):
        if n < 1:
            continue
        priors = Priors(n=n, tj10=tj1, tj02=tj2, tj12=tJ, tm12=tM)
        for tm10, tm02 in allowed_m_pairs(tj1, tj2, tM):
            fast = upsilon(priors, tm10, tm02)
            slow = upsilon_full_lattice(priors, tm10, tm02)
            if fast != slow:
                problems.append(
                    f"bounded sum {fast} != lattice sum {slow} for {priors}, "
                    f"pair ({tm10}, {tm02})"
                )
    return problems


def run_selftest(
    seed: int = 0,
    enum_n_max: int = 6,
    triple_n_max: int = 64,
    trials: int = 1000,
    phi_fn: Optional[Callable[[QN8], int]] = None,
    out: Optional[TextIO] = None,
) -> bool:
    """Run every check; print one line per check plus the seed."""
    out = out if out is not None else sys.stdout
    rng = random.Random(seed)
    phi_fn = phi_fn or pathcount.phi
    triple_ns = [n for n in (4, 16, 64) if n <= triple_n_max] or [max(2, triple_n_max)]
    map_n = min(32, triple_n_max)
    norm_n = min(12, max(2, enum_n_max * 2))

    checks: List[Tuple[str, Callable[[], List[str]]]] = [
        (
            "phi_by_enumeration equivalence",
            lambda: check_phi_equivalence(min(enum_n_max, 6), phi_fn),
        ),
        (
            "random-triple selection rules",
            lambda: check_random_triples(triple_ns, trials, rng),
        ),
        ("count/quantum-number round trips", lambda: check_roundtrips(trials, rng)),
        (
            "permutation map conservation",
            lambda: check_permutation_maps(map_n, min(trials, 200), rng),
        ),
        ("exact normalization", lambda: check_normalization(norm_n, 2)),
        ("summation bounds equivalence", lambda: check_bounds_equivalence(min(norm_n, 8), 2)),
    ]

    print(f"seed: {seed}", file=out)
    all_ok = True
    for name, fn in checks:
        problems = fn()
        status = "PASS" if not problems else "FAIL"
        all_ok &= not problems
        print(f"{status} {name}", file=out)
        for p in problems[:5]:
            print(f"  {p}", file=out)
        if len(problems) > 5:
            print(f"  ... {len(problems) - 5} more", file=out)
    return all_ok

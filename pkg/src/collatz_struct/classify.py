"""Type A/B and S+/S- classification, reversal coefficients and exact type counts."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

import numpy as np

from .kernel import syracuse_step
from .structure import Convention, ParityWord, generate_sequence, word_affine
from .tables import OrderCapExceeded, check_order, structural_words

# rational just above log2(3); only used to seed the exact search
_LOG2_3_UPPER = Fraction(1584962500722, 10**12)


class Principal(str, Enum):
    A = "A"
    B = "B"


class Growth(str, Enum):
    SPLUS = "Splus"
    SMINUS = "Sminus"


class BSubtype(str, Enum):
    BPLUS = "Bplus"
    BMINUS = "Bminus"


@dataclass(frozen=True)
class SequenceClass:
    principal: Principal
    growth: Growth
    b_subtype: Optional[BSubtype] = None


@dataclass(frozen=True)
class ReversalInfo:
    """Threshold ``t* = phi / (1 - F)`` of a B word.

    A realization whose first term exceeds ``t*`` decreases; ``i_max`` is the
    last row index of a chromologue that still increases.
    """

    threshold: Fraction
    i_max: Optional[int] = None
    p_i_max: Optional[int] = None


@dataclass(frozen=True)
class WordClass:
    principal: Principal
    reversal: Optional[ReversalInfo]


@dataclass(frozen=True)
class TypeCounts:
    order: int
    a: int
    b: int

    @property
    def r_A(self) -> Fraction:
        return Fraction(self.a, 1 << self.order)

    @property
    def r_B(self) -> Fraction:
        return Fraction(self.b, 1 << self.order)


def reversal_coefficient(n: int) -> int:
    """Largest ``k`` with ``3**k < 2**n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = int(n / _LOG2_3_UPPER)
    # 3**k < 2**n  <=>  bit_length(3**k) <= n, since 3**k is never a power of two
    while (3 ** (k + 1)).bit_length() <= n:
        k += 1
    while k > 0 and (3**k).bit_length() > n:
        k -= 1
    return k


def reversal_coefficients(n_max: int) -> list[int]:
    """``[alpha_0, alpha_1, ..., alpha_{n_max}]`` by incremental powers of 3 (``alpha_0`` is 0 by convention)."""
    out = [0]
    k, nxt = 0, 3
    for n in range(1, n_max + 1):
        while nxt.bit_length() <= n:
            nxt *= 3
            k += 1
        out.append(k)
    return out


def increment(n: int) -> int:
    """``alpha_{2n} - n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return reversal_coefficient(2 * n) - n


def classify_sequence(p: int, n: int) -> SequenceClass:
    seq = generate_sequence(p, n)
    odd = sum(t & 1 for t in seq.terms)
    principal = Principal.A if odd > reversal_coefficient(n) else Principal.B
    growth = Growth.SPLUS if seq.preterm > seq.first else Growth.SMINUS
    sub = None
    if principal is Principal.B:
        sub = BSubtype.BPLUS if growth is Growth.SPLUS else BSubtype.BMINUS
    return SequenceClass(principal, growth, sub)


def word_threshold(word: ParityWord) -> Fraction:
    m = word_affine(word)
    factor = m.factor
    if factor >= 1:
        raise ValueError("threshold is only defined for B words")
    return m.offset.as_fraction() / (1 - factor)


def classify_word(word: ParityWord) -> WordClass:
    if word.convention is not Convention.GENERATED:
        raise ValueError("classify_word expects a generated-convention word")
    if word.popcount > reversal_coefficient(len(word)):
        return WordClass(Principal.A, None)
    return WordClass(Principal.B, ReversalInfo(word_threshold(word)))


def chromologue_reversal_point(fundamental: int, n: int) -> ReversalInfo:
    """Scan the chromologue of ``fundamental`` for its last increasing row."""
    first = generate_sequence(fundamental, n)
    wc = classify_word(first.word())
    if wc.principal is Principal.A:
        raise ValueError(f"chromologue of {fundamental} at order {n} is type A")
    t_star = wc.reversal.threshold
    i_max = p_max = None
    i, p, t1 = 1, fundamental, first.first
    step = 2 << n
    while t1 < t_star:
        i_max, p_max = i, p
        i, p = i + 1, p + step
        t1 = syracuse_step(p)
    return ReversalInfo(t_star, i_max, p_max)


def count_by_odd(n: int, k: int) -> int:
    """Number of words of length ``n`` with exactly ``k`` ones."""
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}]")
    return comb(n, k)


def binomial_row(n: int) -> list[int]:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


def a_count(order: int, row: list[int] | None = None) -> int:
    """Words of length ``order`` with more than ``alpha_order`` ones (any order)."""
    row = row or binomial_row(order)
    return sum(row[reversal_coefficient(order) + 1:])


def count_types(order: int) -> TypeCounts:
    """A/B counts for even ``order``, cross-checked by three independent sums."""
    if order < 2 or order % 2:
        raise ValueError("count_types needs an even order >= 2")
    n = order // 2
    row = binomial_row(order)
    alpha = reversal_coefficient(order)
    e = alpha - n
    direct = sum(row[alpha + 1:])
    symmetric = sum(row[:n - e])
    b = (1 << order) - direct
    composite = symmetric + row[n] + 2 * sum(row[n + k] for k in range(1, e + 1))
    if direct != symmetric or composite != b:
        raise AssertionError(f"type counts disagree at order {order}: "
                             f"direct={direct} symmetric={symmetric} composite_b={composite} b={b}")
    return TypeCounts(order, direct, b)


@dataclass(frozen=True)
class TrendReport:
    counts: list[TypeCounts]

    @property
    def strictly_decreasing(self) -> bool:
        """r_A strictly decreasing over the supplied orders above 8."""
        tail = [c.r_A for c in self.counts if c.order >= 8]
        return all(x > y for x, y in zip(tail, tail[1:]))


def proportion_trend(orders: Iterable[int]) -> TrendReport:
    orders = list(orders)
    if any(o % 2 for o in orders):
        raise ValueError("trend orders must be even")
    return TrendReport([count_types(o) for o in orders])


@dataclass(frozen=True)
class PolyCounts:
    order: int
    h_A: int
    h_B: int
    method: str

    @property
    def r_A(self) -> Fraction:
        return Fraction(self.h_A, 1 << self.order)

    @property
    def r_B(self) -> Fraction:
        return Fraction(self.h_B, 1 << self.order)


def polychromologue_counts(n: int, *, cap: int | None = None) -> PolyCounts:
    """Count A rows of the first chromoform of order ``n`` (one row per chromologue).

    Above the order cap the count is taken in word space instead.
    """
    alpha = reversal_coefficient(n)
    try:
        check_order(n, cap)
    except OrderCapExceeded:
        h_a, method = a_count(n), "word-space"
    else:
        codes = structural_words(1, n, cap=cap).codes
        h_a, method = int(np.count_nonzero(np.bitwise_count(codes) > alpha)), "table"
    out = PolyCounts(n, h_a, (1 << n) - h_a, method)
    if n % 2 == 0 and out.h_A != count_types(n).a:
        raise AssertionError(f"chromoform count differs from word count at order {n}")
    return out

"""From parity words back to generators, and periodic-word analysis."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .kernel import AffineMap
from .structure import Convention, ParityWord, parity_vector, word_affine


@dataclass(frozen=True)
class GeneratorResidue:
    modulus: int
    residue: int

    @property
    def minimal(self) -> int:
        """Least positive generator; residue 0 maps to the modulus itself."""
        return self.residue or self.modulus


def _t(x: int) -> int:
    # Syracuse step extended to 0
    return (3 * x + 1) >> 1 if x & 1 else x >> 1


def generator_for_word(word: ParityWord, i0: Optional[int] = None) -> GeneratorResidue:
    """The unique residue mod ``2**L`` whose inclusive parity word is ``word``.

    Generated-convention words need the generator's parity bit ``i0``.
    """
    if word.convention is Convention.GENERATED:
        if i0 is None:
            raise ValueError("a generated word needs the generator parity bit i0")
        word = word.to_inclusive(i0)
    elif i0 is not None and i0 != word.bits[0]:
        raise ValueError("i0 contradicts the word's first bit")
    # y tracks T^k(r); lifting r by 2**k moves T^k(r) by 3**M_{k-1}(r), flipping its parity
    r = y = odd = 0
    for k, bit in enumerate(word.bits):
        if (y & 1) != bit:
            r += 1 << k
            y += 3**odd
        odd += bit
        y = _t(y)
    return GeneratorResidue(1 << len(word), r)


@dataclass(frozen=True)
class GrowthRow:
    k: int
    length: int
    minimal_generator: int


def minimal_generator_growth(base: ParityWord, tail: Optional[ParityWord] = None,
                             k_max: int = 1) -> list[GrowthRow]:
    """Minimal generators of ``base * k + tail`` for ``k = 1 .. k_max``."""
    if base.convention is not Convention.INCLUSIVE:
        raise ValueError("base must be an inclusive word")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for k in range(1, k_max + 1):
        w = base * k if tail is None else base * k + tail
        rows.append(GrowthRow(k, len(w), generator_for_word(w).minimal))
    return rows


class Verdict(str, Enum):
    STABLE_INTEGER_CYCLE = "stable_integer_cycle"
    NO_POSITIVE_CYCLE = "no_positive_cycle"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CycleAnalysis:
    word: ParityWord
    map: AffineMap
    fixed_point: Optional[Fraction]
    verdict: Verdict


def cycle_fixed_point(base: ParityWord) -> CycleAnalysis:
    """Fixed point ``c / (2**L - 3**M)`` of the map induced by one period."""
    if base.convention is not Convention.INCLUSIVE:
        raise ValueError("period word must be inclusive")
    m = word_affine(base)
    den = (1 << m.length) - 3**m.odd_count
    if den == 0:
        return CycleAnalysis(base, m, None, Verdict.DEGENERATE)
    x = Fraction(m.constant, den)
    verdict = Verdict.NO_POSITIVE_CYCLE
    if x.denominator == 1 and x > 0 and parity_vector(int(x), len(base), Convention.INCLUSIVE).same_as(base):
        verdict = Verdict.STABLE_INTEGER_CYCLE
    return CycleAnalysis(base, m, x, verdict)


def period_words(max_len: int) -> Iterator[ParityWord]:
    for length in range(1, max_len + 1):
        for bits in product((0, 1), repeat=length):
            yield ParityWord(bits, Convention.INCLUSIVE)


def stable_cycles(max_len: int) -> list[CycleAnalysis]:
    """All period words up to ``max_len`` whose fixed point is a genuine positive cycle."""
    out = []
    for w in period_words(max_len):
        a = cycle_fixed_point(w)
        if a.verdict is Verdict.STABLE_INTEGER_CYCLE:
            out.append(a)
    return out


@dataclass(frozen=True)
class BoundReport:
    order: int
    r: Fraction
    r_n: Fraction
    p0: int
    z_plus: Fraction
    rho_plus: Fraction

    @property
    def bound(self) -> Fraction:
        return 1 - self.r / 2

    @property
    def holds(self) -> bool:
        return self.rho_plus >= self.bound


def nonconvertible_bound(n: int, r: Fraction) -> BoundReport:
    """Share of the order-``n`` chromoform whose generators exceed ``2**n r``."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("r must lie strictly between 0 and 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    r_n = r * (1 << n)
    p0 = r_n.numerator // r_n.denominator + 1
    z_plus = (1 << n) - Fraction(p0 - 1, 2)
    rho = z_plus / (1 << n)
    if rho != 1 - Fraction(p0 - 1, 2 << n):
        raise AssertionError("density identity failed")
    return BoundReport(n, r, r_n, p0, z_plus, rho)

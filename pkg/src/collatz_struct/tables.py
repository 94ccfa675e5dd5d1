"""Generating sequences, chromoform matrices, chromologue prefixes and their completeness checks.

A chromoform of order n is the table of the 2**n generated sequences whose
generators form a step-2 progression; its parity table is a permutation of
all binary words of length n. A chromologue is the family of mutually isoform
sequences whose generators step by 2**(n+1); only finite q-row prefixes are
built here.

Large tables are held as numpy arrays: int64 whenever an a-priori bound on the
trajectory values allows it, object (Python int) otherwise.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .structure import Convention, GeneratedSequence, ParityWord, generate_sequence

DEFAULT_ORDER_CAP = 24


class OrderCapExceeded(ValueError):
    """Raised when a table would exceed the configured order cap."""


def order_cap() -> int:
    env = os.environ.get("COLLATZ_ORDER_CAP")
    return int(env) if env else DEFAULT_ORDER_CAP


def check_order(n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError("order must be >= 1")
    cap = order_cap() if cap is None else cap
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")


def _fits_int64(max_start: int, steps: int) -> bool:
    # T(x) < 1.5 (x+1), so x_k + 1 <= 1.5**k (x_0 + 1); keep 3x+1 below 2**63 as well
    return (max_start + 1) * 3 ** (steps + 1) < 1 << (61 + steps)


def _step(x: np.ndarray) -> np.ndarray:
    odd = (x & 1).astype(bool)
    return np.where(odd, (3 * x + 1) >> 1, x >> 1)


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, total))
    size = -(-total // workers)
    return [(s, min(s + size, total)) for s in range(0, total, size)]


def _run_chunked(fn, total: int, workers: int | None) -> list:
    workers = workers or os.cpu_count() or 1
    spans = _chunks(total, workers)
    if len(spans) == 1:
        return [fn(*spans[0])]
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        return list(pool.map(lambda span: fn(*span), spans))


def _start_array(first: int, step: int, lo: int, hi: int, dtype) -> np.ndarray:
    if dtype is object:
        return np.array([first + step * j for j in range(lo, hi)], dtype=object)
    return first + step * np.arange(lo, hi, dtype=np.int64)


@dataclass(frozen=True)
class PerfectGeneratingSequence:
    first: int
    order: int
    terms: range

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class SuperSequencePrefix:
    first: int
    order: int
    count: int
    terms: range

    @property
    def period(self) -> int:
        return 1 << (self.order + 1)


def perfect_generating_sequence(first: int, n: int) -> PerfectGeneratingSequence:
    if first < 1 or n < 1:
        raise ValueError("first and n must be >= 1")
    return PerfectGeneratingSequence(first, n, range(first, first + (2 << n), 2))


def super_sequence_prefix(first: int, n: int, q: int) -> SuperSequencePrefix:
    if first < 1 or n < 1 or q < 1:
        raise ValueError("first, n and q must be >= 1")
    step = 2 << n
    return SuperSequencePrefix(first, n, q, range(first, first + q * step, step))


def generating_matrix(first: int, n: int, q: int) -> np.ndarray:
    """``q x 2**n`` matrix whose row k is the perfect sequence starting at ``first + (k-1) 2**(n+1)``."""
    return np.array([list(perfect_generating_sequence(first + k * (2 << n), n).terms) for k in range(q)],
                    dtype=object)


def super_matrix(first: int, n: int, q: int) -> np.ndarray:
    """``2**n x q`` matrix whose row j is the super-sequence starting at ``first + 2(j-1)``."""
    return np.array([list(super_sequence_prefix(first + 2 * j, n, q).terms) for j in range(1 << n)],
                    dtype=object)


@dataclass(frozen=True, eq=False)
class StructuralMatrix:
    """Parity words of a table, packed as integers with the first bit most significant."""

    order: int
    codes: np.ndarray
    generators: Sequence[int] | None = None

    def __len__(self) -> int:
        return len(self.codes)

    def bits(self) -> np.ndarray:
        shifts = np.arange(self.order - 1, -1, -1, dtype=np.uint64)
        return ((self.codes.astype(np.uint64)[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)

    def word(self, j: int) -> ParityWord:
        code = int(self.codes[j])
        return ParityWord(tuple((code >> (self.order - 1 - i)) & 1 for i in range(self.order)),
                          Convention.GENERATED)

    @property
    def rows(self) -> list[ParityWord]:
        return [self.word(j) for j in range(len(self))]

    def same_as(self, other: "StructuralMatrix") -> bool:
        return self.order == other.order and np.array_equal(self.codes, other.codes)

    @classmethod
    def from_bits(cls, bits: np.ndarray, generators: Sequence[int] | None = None) -> "StructuralMatrix":
        bits = np.asarray(bits)
        order = bits.shape[1]
        if order > 63:
            raise ValueError("structural codes support order <= 63")
        weights = (np.uint64(1) << np.arange(order - 1, -1, -1, dtype=np.uint64))
        codes = (bits.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
        return cls(order, codes, generators)


@dataclass(frozen=True, eq=False)
class ChromoformMatrix:
    """Generated sequences of length ``order`` for each generator.

    ``terms[j]`` holds ``T^1 .. T^n`` of ``generators[j]``; the generator
    column is kept apart from the data columns.
    """

    order: int
    generators: Sequence[int]
    terms: np.ndarray
    preterms: np.ndarray

    @property
    def first(self) -> int:
        return self.generators[0]

    def __len__(self) -> int:
        return len(self.generators)

    def row(self, j: int) -> GeneratedSequence:
        return GeneratedSequence(int(self.generators[j]), tuple(int(t) for t in self.terms[j]),
                                 int(self.preterms[j]))

    def __iter__(self) -> Iterator[GeneratedSequence]:
        return (self.row(j) for j in range(len(self)))

    def row_of(self, generator: int) -> GeneratedSequence:
        for j, g in enumerate(self.generators):
            if g == generator:
                return self.row(j)
        raise KeyError(generator)


def _iterate_table(first: int, step: int, rows: int, n: int, workers: int | None):
    dtype = np.int64 if _fits_int64(first + step * (rows - 1), n + 1) else object

    def block(lo: int, hi: int):
        x = _start_array(first, step, lo, hi, dtype)
        cols = np.empty((hi - lo, n), dtype=dtype)
        for k in range(n):
            x = _step(x)
            cols[:, k] = x
        return cols, _step(x)

    parts = _run_chunked(block, rows, workers)
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def build_chromoform(first: int, n: int, *, cap: int | None = None, workers: int | None = None) -> ChromoformMatrix:
    check_order(n, cap)
    gens = perfect_generating_sequence(first, n).terms
    terms, pre = _iterate_table(first, 2, len(gens), n, workers)
    return ChromoformMatrix(n, gens, terms, pre)


def structural_matrix(m: ChromoformMatrix) -> StructuralMatrix:
    return StructuralMatrix.from_bits((m.terms & 1).astype(np.uint8), m.generators)


def structural_words(first: int, n: int, *, cap: int | None = None, workers: int | None = None) -> StructuralMatrix:
    """Parity-only construction of ``structural_matrix(build_chromoform(first, n))``.

    Keeps only the running value and the packed word per row.
    """
    check_order(n, cap)
    rows = 1 << n
    dtype = np.int64 if _fits_int64(first + 2 * rows, n) else object

    def block(lo: int, hi: int):
        x = _start_array(first, 2, lo, hi, dtype)
        codes = np.zeros(hi - lo, dtype=np.uint64)
        for _ in range(n):
            x = _step(x)
            codes = (codes << np.uint64(1)) | (x & 1).astype(np.uint64)
        return codes

    codes = np.concatenate(_run_chunked(block, rows, workers))
    return StructuralMatrix(n, codes, range(first, first + 2 * rows, 2))


def verify_completeness(s: StructuralMatrix) -> bool:
    """True iff the rows enumerate every word of length ``order`` exactly once."""
    size = 1 << s.order
    if len(s.codes) != size:
        return False
    codes = s.codes.astype(np.uint64)
    if codes.size and int(codes.max()) >= size:
        return False
    present = np.zeros(size, dtype=bool)
    present[codes.astype(np.int64)] = True
    return bool(present.all())


@dataclass(frozen=True)
class FractionalChromologue:
    fundamental_generator: int
    order: int
    rows: tuple[GeneratedSequence, ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(r.generator for r in self.rows)

    def characteristic_word(self) -> ParityWord:
        return self.rows[0].word()

    def is_isochromatic(self) -> bool:
        w = self.characteristic_word()
        return all(r.word().same_as(w) for r in self.rows)


def build_chromologue(fundamental: int, n: int, q: int) -> FractionalChromologue:
    gens = super_sequence_prefix(fundamental, n, q).terms
    return FractionalChromologue(fundamental, n, tuple(generate_sequence(g, n) for g in gens))


@dataclass(frozen=True)
class ProlongedChromologue:
    base: FractionalChromologue
    extra: int
    rows: tuple[GeneratedSequence, ...]

    def suffix_structure(self) -> StructuralMatrix:
        """Parity table of the ``extra`` appended columns."""
        n = self.base.order
        bits = np.array([[t & 1 for t in r.terms[n:]] for r in self.rows], dtype=np.uint8)
        return StructuralMatrix.from_bits(bits.reshape(len(self.rows), self.extra), self.base.generators)


def prolong_chromologue(c: FractionalChromologue, k: int) -> ProlongedChromologue:
    if k < 0 or c.row_count != 1 << k:
        raise ValueError(f"prolongation by {k} needs 2^{k} rows, chromologue has {c.row_count}")
    rows = tuple(generate_sequence(g, c.order + k) if k else r for g, r in zip(c.generators, c.rows))
    return ProlongedChromologue(c, k, rows)


@dataclass(frozen=True)
class Decomposition:
    """The two halves of a chromoform split on the parity of ``T^1``."""

    odd_first: ChromoformMatrix
    even_first: ChromoformMatrix

    def reduced_structures(self) -> tuple[StructuralMatrix, StructuralMatrix]:
        """Structural tables of both halves with the first column dropped."""
        return (StructuralMatrix.from_bits((self.odd_first.terms[:, 1:] & 1).astype(np.uint8)),
                StructuralMatrix.from_bits((self.even_first.terms[:, 1:] & 1).astype(np.uint8)))


def decompose_perfect(m: ChromoformMatrix) -> Decomposition:
    if m.order < 2:
        raise ValueError("decomposition needs order >= 2")
    odd = (m.terms[:, 0] & 1).astype(bool)
    gens = np.array(list(m.generators), dtype=object)

    def half(mask: np.ndarray) -> ChromoformMatrix:
        return ChromoformMatrix(m.order, tuple(int(g) for g in gens[mask]), m.terms[mask], m.preterms[mask])

    return Decomposition(half(odd), half(~odd))


def polychromoform_prefix(first: int, n: int, count: int, *, cap: int | None = None,
                          workers: int | None = None) -> list[ChromoformMatrix]:
    if count < 1:
        raise ValueError("count must be >= 1")
    check_order(n, cap)
    return [build_chromoform(first + k * (2 << n), n, cap=cap, workers=workers) for k in range(count)]


def super_decompose(blocks: Sequence[ChromoformMatrix]) -> list[FractionalChromologue]:
    """Regroup ``q`` stacked chromoforms into ``2**n`` chromologues of ``q`` rows (column j across blocks)."""
    if not blocks:
        raise ValueError("need at least one block")
    n = blocks[0].order
    out = []
    for j in range(1 << n):
        rows = tuple(b.row(j) for b in blocks)
        out.append(FractionalChromologue(rows[0].generator, n, rows))
    return out

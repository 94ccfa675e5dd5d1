"""Parity words, generated sequences, isoformy and the shift identity."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .kernel import AffineMap, Dyadic, imparity_count, syracuse_iter, trajectory


class Convention(str, Enum):
    """Where a parity word starts.

    ``INCLUSIVE`` words begin with the generator's own bit i0; ``GENERATED``
    words begin at i1 and leave the generator out.
    """

    INCLUSIVE = "I"
    GENERATED = "G"


class ConventionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ParityWord:
    bits: tuple[int, ...]
    convention: Convention = Convention.INCLUSIVE

    def __post_init__(self) -> None:
        if not self.bits:
            raise ValueError("parity word must have length >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be 0 or 1: {self.bits}")
        object.__setattr__(self, "bits", tuple(self.bits))
        object.__setattr__(self, "convention", Convention(self.convention))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return f"{self.convention.value}:{self.bitstring}"

    @property
    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def popcount(self) -> int:
        return sum(self.bits)

    def same_as(self, other: "ParityWord") -> bool:
        """Bitwise equality; comparing words of different conventions is an error."""
        if self.convention is not other.convention:
            raise ConventionMismatch(f"cannot compare {self.convention.name} and {other.convention.name} words")
        return self.bits == other.bits

    def __add__(self, other: "ParityWord") -> "ParityWord":
        if self.convention is not other.convention:
            raise ConventionMismatch("cannot concatenate words of different conventions")
        return ParityWord(self.bits + other.bits, self.convention)

    def __mul__(self, k: int) -> "ParityWord":
        if k < 1:
            raise ValueError("repeat count must be >= 1")
        return ParityWord(self.bits * k, self.convention)

    def to_inclusive(self, i0: int) -> "ParityWord":
        """Prepend the generator's parity bit to a generated word."""
        if self.convention is Convention.INCLUSIVE:
            raise ConventionMismatch("word is already inclusive")
        return ParityWord((i0,) + self.bits, Convention.INCLUSIVE)

    @classmethod
    def parse(cls, text: str) -> "ParityWord":
        """Parse ``"I:1011"`` or ``"G:0110"``."""
        prefix, sep, body = text.strip().partition(":")
        if not sep or prefix not in ("I", "G"):
            raise ValueError(f"parity word needs an 'I:' or 'G:' prefix: {text!r}")
        if not body or set(body) - {"0", "1"}:
            raise ValueError(f"malformed bit string: {text!r}")
        return cls(tuple(int(c) for c in body), Convention(prefix))


@dataclass(frozen=True)
class GeneratedSequence:
    """``T^1(P), ..., T^n(P)`` plus the preterm ``T^{n+1}(P)``; P itself is not a term."""

    generator: int
    terms: tuple[int, ...]
    preterm: int

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def first(self) -> int:
        return self.terms[0]

    def word(self) -> ParityWord:
        return ParityWord(tuple(t & 1 for t in self.terms), Convention.GENERATED)


def generate_sequence(p: int, n: int) -> GeneratedSequence:
    if n < 1:
        raise ValueError("n must be >= 1")
    traj = trajectory(p, n + 1)
    return GeneratedSequence(p, tuple(traj[1:n + 1]), traj[n + 1])


def parity_vector(p: int, n: int, convention: Convention | str = Convention.GENERATED) -> ParityWord:
    if n < 1:
        raise ValueError("n must be >= 1")
    convention = Convention(convention)
    if convention is Convention.INCLUSIVE:
        bits = [t & 1 for t in trajectory(p, n - 1)]
    else:
        bits = [t & 1 for t in trajectory(p, n)[1:]]
    return ParityWord(tuple(bits), convention)


def render_chromatic(word: ParityWord | tuple[int, ...], glyphs: str = "#.") -> str:
    """One glyph per bit; ``glyphs[0]`` marks odd (blue) cells, ``glyphs[1]`` even (white) ones."""
    if len(glyphs) != 2 or glyphs[0] == glyphs[1]:
        raise ValueError("glyphs must be two distinct characters")
    bits = word.bits if isinstance(word, ParityWord) else word
    return "".join(glyphs[0] if b else glyphs[1] for b in bits)


def parse_chromatic(line: str, glyphs: str = "#.",
                    convention: Convention | str = Convention.INCLUSIVE) -> ParityWord:
    table = {glyphs[0]: 1, glyphs[1]: 0}
    try:
        bits = tuple(table[c] for c in line)
    except KeyError as exc:
        raise ValueError(f"unexpected glyph {exc.args[0]!r}") from None
    return ParityWord(bits, convention)


def _isoform_modulus(n: int, convention: Convention) -> int:
    # a generated word of length n fixes P mod 2**(n+1) within a parity class;
    # an inclusive word of length n already contains i0, so 2**n
    return 1 << (n + 1 if Convention(convention) is Convention.GENERATED else n)


def isoform_by_vectors(p1: int, p2: int, n: int, convention: Convention | str = Convention.GENERATED) -> bool:
    return parity_vector(p1, n, convention).same_as(parity_vector(p2, n, convention))


def isoform_by_congruence(p1: int, p2: int, n: int, convention: Convention | str = Convention.GENERATED) -> bool:
    return (p2 - p1) % _isoform_modulus(n, convention) == 0


def is_isoform(p1: int, p2: int, n: int, convention: Convention | str = Convention.GENERATED) -> bool:
    """Whether the parity words of length ``n`` of ``p1`` and ``p2`` coincide.

    By default these are generated words (``T1 .. Tn``) and the congruence is
    taken mod ``2**(n+1)``. With the inclusive convention the words start at the
    generator itself and the modulus is ``2**n``. Both the direct comparison and
    the congruence are evaluated; disagreement raises ``AssertionError``.
    """
    if p1 < 1 or p2 < 1:
        raise ValueError("generators must be >= 1")
    if (p1 ^ p2) & 1:
        raise ValueError("generators must have the same parity")
    if n < 1:
        raise ValueError("n must be >= 1")
    direct = isoform_by_vectors(p1, p2, n, convention)
    arith = isoform_by_congruence(p1, p2, n, convention)
    if direct != arith:
        raise AssertionError(f"isoformy criteria disagree for ({p1}, {p2}, {n}, {Convention(convention).value})")
    return direct


def shift_image(p: int, n: int, m: int, k: int) -> int:
    """``T^k(P + 2**(n+1) m)`` via ``T^k(P) + 2**(n+1-k) * 3**M_{k-1}(P) * m``."""
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in [1, {n + 1}], got {k}")
    if m < 0:
        raise ValueError("m must be >= 0")
    return syracuse_iter(p, k) + (3 ** imparity_count(p, k - 1) * m << (n + 1 - k))


def word_affine(word: ParityWord | tuple[int, ...]) -> AffineMap:
    """Map ``x -> (3**M x + c) / 2**L`` obtained by following the word bit by bit.

    A 1 bit applies ``x -> (3x+1)/2`` and a 0 bit ``x -> x/2``.
    """
    bits = word.bits if isinstance(word, ParityWord) else word
    odd = c = 0
    for length, b in enumerate(bits):
        if b:
            c = 3 * c + (1 << length)
            odd += 1
    return AffineMap(odd, len(bits), Dyadic(c, len(bits)))

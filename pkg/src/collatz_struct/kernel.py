"""Syracuse map, parity indicators and exact affine coefficients.

Everything here is exact: Python ints for sequence terms and a small dyadic
rational type for the cumulative coefficients. No floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, "Dyadic"]


def _check_positive(n: int, name: str = "N") -> None:
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


@dataclass(frozen=True, eq=False)
class Dyadic:
    """Exact rational ``numerator / 2**exp``.

    The stored form is not reduced, so a coefficient built with denominator
    ``2**n`` keeps that shape; equality and hashing use the canonical form.
    """

    numerator: int
    exp: int = 0

    def __post_init__(self) -> None:
        if self.exp < 0:
            raise ValueError("exp must be nonnegative")

    def canonical(self) -> "Dyadic":
        num, e = self.numerator, self.exp
        if num == 0:
            return Dyadic(0, 0)
        tz = (num & -num).bit_length() - 1
        shift = min(tz, e)
        return Dyadic(num >> shift, e - shift)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exp)

    def with_exp(self, exp: int) -> "Dyadic":
        """Same value written over ``2**exp`` (must not lose precision)."""
        c = self.canonical()
        if exp < c.exp:
            raise ValueError(f"cannot write {self} over 2^{exp}")
        return Dyadic(c.numerator << (exp - c.exp), exp)

    def __add__(self, other: Number) -> "Dyadic":
        other = _as_dyadic(other)
        e = max(self.exp, other.exp)
        return Dyadic((self.numerator << (e - self.exp)) + (other.numerator << (e - other.exp)), e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exp)

    def __sub__(self, other: Number) -> "Dyadic":
        return self + (-_as_dyadic(other))

    def __rsub__(self, other: Number) -> "Dyadic":
        return _as_dyadic(other) - self

    def __mul__(self, other: Number) -> "Dyadic":
        other = _as_dyadic(other)
        return Dyadic(self.numerator * other.numerator, self.exp + other.exp)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Dyadic):
            a, b = self.canonical(), other.canonical()
            return a.numerator == b.numerator and a.exp == b.exp
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        return self.as_fraction() < _as_fraction(other)

    def __le__(self, other: Number) -> bool:
        return self.as_fraction() <= _as_fraction(other)

    def __gt__(self, other: Number) -> bool:
        return self.as_fraction() > _as_fraction(other)

    def __ge__(self, other: Number) -> bool:
        return self.as_fraction() >= _as_fraction(other)

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __str__(self) -> str:
        c = self.canonical()
        return str(c.numerator) if c.exp == 0 else f"{c.numerator}/{1 << c.exp}"


def _as_dyadic(x: Number) -> Dyadic:
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int):
        return Dyadic(x, 0)
    if isinstance(x, Fraction):
        den = x.denominator
        if den & (den - 1):
            raise ValueError(f"{x} is not a dyadic rational")
        return Dyadic(x.numerator, den.bit_length() - 1)
    raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")


def _as_fraction(x: Number) -> Fraction:
    if isinstance(x, Dyadic):
        return x.as_fraction()
    return Fraction(x)


@dataclass(frozen=True)
class AffineMap:
    """The map ``x -> 3**odd_count / 2**length * x + offset``."""

    odd_count: int
    length: int
    offset: Dyadic

    def __post_init__(self) -> None:
        if self.offset.canonical().exp > self.length:
            raise ValueError("offset denominator exceeds 2^length")

    @property
    def factor(self) -> Fraction:
        return Fraction(3**self.odd_count, 1 << self.length)

    @property
    def constant(self) -> int:
        """Integer ``c`` in the form ``(3**M * x + c) / 2**L``."""
        return self.offset.with_exp(self.length).numerator

    def apply(self, x: Number) -> Fraction:
        return self.factor * _as_fraction(x) + self.offset.as_fraction()

    def apply_int(self, x: int) -> int:
        """Apply to an integer, raising if the image is not an integer."""
        q, r = divmod(3**self.odd_count * x + self.constant, 1 << self.length)
        if r:
            raise ValueError(f"image of {x} is not an integer")
        return q

    def then(self, other: "AffineMap") -> "AffineMap":
        """Composition: apply ``self`` first, then ``other``."""
        # other(self(x)) = F2*F1*x + F2*phi1 + phi2
        scaled = Dyadic(3**other.odd_count, other.length) * self.offset
        return AffineMap(self.odd_count + other.odd_count, self.length + other.length,
                         scaled + other.offset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineMap):
            return NotImplemented
        return (self.odd_count, self.length, self.offset) == (other.odd_count, other.length, other.offset)

    def __hash__(self) -> int:
        return hash((self.odd_count, self.length, self.offset))

    def __str__(self) -> str:
        return f"x -> ({3**self.odd_count}*x + {self.constant})/{1 << self.length}"


IDENTITY = AffineMap(0, 0, Dyadic(0))
HALVE = AffineMap(0, 1, Dyadic(0, 1))
ODD_STEP = AffineMap(1, 1, Dyadic(1, 1))


@dataclass(frozen=True)
class ElementaryEffects:
    principal: Dyadic
    secondary: Dyadic


def syracuse_step(n: int) -> int:
    _check_positive(n)
    return (3 * n + 1) >> 1 if n & 1 else n >> 1


def syracuse_iter(n: int, k: int) -> int:
    _check_positive(n)
    if k < 0:
        raise ValueError("k must be >= 0")
    for _ in range(k):
        n = (3 * n + 1) >> 1 if n & 1 else n >> 1
    return n


def trajectory(n: int, k: int) -> list[int]:
    """``[n, T(n), ..., T^k(n)]``."""
    _check_positive(n)
    out = [n]
    for _ in range(k):
        n = (3 * n + 1) >> 1 if n & 1 else n >> 1
        out.append(n)
    return out


def parity_indicator(p: int, n: int) -> int:
    return syracuse_iter(p, n) & 1


def imparity_count(p: int, n: int) -> int:
    """Number of odd values among ``T^0(p), ..., T^n(p)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(t & 1 for t in trajectory(p, n))


def generated_imparity_count(p: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return imparity_count(p, n) - (p & 1)


def elementary_effects(n: int) -> ElementaryEffects:
    _check_positive(n)
    if n & 1:
        return ElementaryEffects(Dyadic(3, 1), Dyadic(1, 1))
    return ElementaryEffects(Dyadic(1, 1), Dyadic(0, 1))


def shifted_step(a: int, b: int) -> int:
    """``T(a + 2b)`` computed as ``T(a) + 3**i0(a) * b``."""
    _check_positive(a, "A")
    if b < 0:
        raise ValueError("B must be >= 0")
    return syracuse_step(a) + (3 if a & 1 else 1) * b


def cumulative_affine(p: int, n: int) -> AffineMap:
    """Affine map with ``T^n(p) = 3**M_{n-1}(p) / 2**n * p + phi_n(p)``."""
    _check_positive(p, "P")
    if n < 1:
        raise ValueError("n must be >= 1")
    bits = [t & 1 for t in trajectory(p, n - 1)]
    # numerator of phi_k over 2**k: N_1 = i0, N_k = 3**i * N_{k-1} + i * 2**(k-1)
    num = bits[0]
    for k in range(2, n + 1):
        i = bits[k - 1]
        num = (3 * num + (1 << (k - 1))) if i else num
    return AffineMap(sum(bits), n, Dyadic(num, n))


def generated_affine(p: int, n: int) -> AffineMap:
    """Affine map sending ``T^1(p)`` to ``T^{n+1}(p)`` over ``n`` generated steps."""
    _check_positive(p, "P")
    if n < 1:
        raise ValueError("n must be >= 1")
    full = cumulative_affine(p, n + 1)
    odd = full.odd_count - (p & 1)
    # phi~_n = phi_{n+1} - 3**M~_n / 2**(n+1) * i0
    offset = full.offset - Dyadic(3**odd * (p & 1), n + 1)
    return AffineMap(odd, n, offset.with_exp(n))

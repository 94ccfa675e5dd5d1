"""Brute-force references, written without the package."""
from fractions import Fraction
from itertools import product


def step(n):
    return n // 2 if n % 2 == 0 else (3 * n + 1) // 2


def orbit(n, k):
    out = [n]
    for _ in range(k):
        n = step(n)
        out.append(n)
    return out


def inclusive_bits(p, length):
    return tuple(x % 2 for x in orbit(p, length - 1))


def generated_bits(p, n):
    return tuple(x % 2 for x in orbit(p, n)[1:])


def compose_word(bits):
    """(a, b) with the word's map equal to x -> a x + b, via Fractions step by step."""
    a, b = Fraction(1), Fraction(0)
    for bit in bits:
        if bit:
            a, b = a * 3 / 2, (3 * b + 1) / 2
        else:
            a, b = a / 2, b / 2
    return a, b


def search_generator(bits):
    """Smallest P >= 1 with the given inclusive parity word (linear search)."""
    p = 1
    while inclusive_bits(p, len(bits)) != tuple(bits):
        p += 1
    return p


def residues_matching(bits):
    """All residues r in [0, 2**L) whose representative 2**L + r has the word."""
    L = len(bits)
    return [r for r in range(1 << L) if inclusive_bits(r + (1 << L), L) == tuple(bits)]


def count_a_words(order):
    """A-type words of length ``order``: 3**popcount > 2**order, by full enumeration."""
    return sum(1 for w in product((0, 1), repeat=order) if 3 ** sum(w) > 2**order)


def alpha_bruteforce(n):
    k = 0
    while 3 ** (k + 1) < 2**n:
        k += 1
    return k

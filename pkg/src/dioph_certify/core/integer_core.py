"""
Arbitrary-precision integer primitives.

Every solver path goes through these helpers. Python integers never overflow,
and nothing here touches floating point: roots are found by bitwise binary
search and checked by exact exponentiation.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, NewType, Optional, Tuple

logger = logging.getLogger(__name__)

PositiveInt = NewType("PositiveInt", int)

# Wheel modulo 30 for trial division past 2, 3 and 5
_WHEEL_STEPS = (4, 2, 4, 2, 4, 6, 2, 6)


def require_positive(value: int, name: str = "value") -> PositiveInt:
    """Return ``value`` as a PositiveInt or raise ValueError if it is < 1."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be ≥ 1")
    return PositiveInt(value)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor."""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple; ``lcm(a, b) * gcd(a, b) == a * b``."""
    return math.lcm(a, b)


def coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def ipow(base: int, exp: int) -> int:
    """Exact ``base ** exp`` for a non-negative exponent."""
    if exp < 0:
        raise ValueError(f"exponent must be ≥ 0, got {exp}")
    return base**exp


def iroot(v: int, e: int) -> Tuple[int, bool]:
    """
    Integer e-th root.

    Args:
        v: Non-negative radicand
        e: Root degree, at least 1

    Returns:
        ``(u, exact)`` where ``u`` is the largest integer with ``u**e <= v`` and
        ``exact`` tells whether ``u**e == v``.
    """
    if e < 1:
        raise ValueError(f"root degree must be ≥ 1, got {e}")
    if v < 0:
        raise ValueError(f"radicand must be ≥ 0, got {v}")
    if v < 2 or e == 1:
        return v, True
    if e == 2:
        u = math.isqrt(v)
        return u, u * u == v

    # Binary search on the bits of u, highest bit first
    k = (v.bit_length() - 1) // e
    u = 1 << k
    for i in range(k - 1, -1, -1):
        candidate = u | (1 << i)
        if candidate**e <= v:
            u = candidate
    return u, u**e == v


def perfect_root(v: int, e: int) -> Optional[int]:
    """Return ``u`` with ``u**e == v`` if it exists, otherwise ``None``."""
    u, exact = iroot(v, e)
    return u if exact else None


def largest_base_below(limit: int, e: int) -> int:
    """Largest ``u >= 0`` with ``u**e <= limit`` (0 when ``limit < 1``)."""
    if limit < 1:
        return 0
    return iroot(limit, e)[0]


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: primes strictly increasing, exponents ≥ 1."""

    factors: Tuple[Tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def value(self) -> int:
        """Reconstruct the factored integer."""
        result = 1
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result

    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)


def _trial_divisors() -> Iterator[int]:
    yield 2
    yield 3
    yield 5
    candidate = 7
    while True:
        for step in _WHEEL_STEPS:
            yield candidate
            candidate += step


def factorize(v: int) -> Factorization:
    """
    Factor ``v`` into prime powers by wheel trial division up to ``sqrt(v)``.

    Args:
        v: Positive integer; 1 yields the empty factorization

    Returns:
        Factorization whose product reconstructs ``v``
    """
    require_positive(v, "v")
    factors = []
    remaining = v
    for p in _trial_divisors():
        if p * p > remaining:
            break
        if remaining % p:
            continue
        exponent = 0
        while remaining % p == 0:
            remaining //= p
            exponent += 1
        factors.append((p, exponent))
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(tuple(factors))


def divisors(v: int) -> list[int]:
    """All positive divisors of ``v`` in increasing order."""
    result = [1]
    for prime, exponent in factorize(v):
        result = [d * prime**i for d in result for i in range(exponent + 1)]
    return sorted(result)


def is_prime(v: int) -> bool:
    """Deterministic primality via trial factorization."""
    if v < 2:
        return False
    return factorize(v).factors == ((v, 1),)

"""Integer plumbing: factorization, Bezout coefficients, primality, powers.

Everything works on Python ``int`` so moduli of any size are exact.  Primality
is deterministic below ``2**64`` and probabilistic (Miller-Rabin, 40 random
rounds on top of the fixed bases) above it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidModulus

__all__ = [
    "Factorization",
    "check_natural",
    "check_modulus",
    "extended_gcd",
    "factor",
    "is_prime",
    "mod_pow",
]

TRIAL_DIVISION_LIMIT = 10**6
MR_RANDOM_ROUNDS = 40

# First twelve primes: a deterministic Miller-Rabin witness set for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def check_natural(x, name="value") -> int:
    if not _is_int(x) or x < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {x!r}")
    return x


def check_modulus(m) -> int:
    if not _is_int(m) or m < 1:
        raise InvalidModulus(m)
    return m


@dataclass(frozen=True)
class Factorization:
    """``m`` with its prime factorization as sorted ``(p, c)`` pairs."""

    m: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_modulus(self.m)
        prod = 1
        last = 1
        for p, c in self.factors:
            if p <= last or c < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**c
        if prod != self.m:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.m}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.factors)

    @property
    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**c for p, c in self.factors)

    @property
    def n(self) -> int:
        """Number of distinct primes (omega of m)."""
        return len(self.factors)

    @property
    def radical(self) -> int:
        return math.prod(self.primes)

    @property
    def max_exponent(self) -> int:
        """Largest exponent; the nilpotency index of the Jacobson radical of Z/mZ.

        Zero for ``m == 1``.
        """
        return max(self.exponents, default=0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_x, old_y


def mod_pow(base: int, exp: int, m: int) -> int:
    check_modulus(m)
    check_natural(exp, "exponent")
    return pow(base, exp, m)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = TRIAL_DIVISION_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _mr_witness(n: int, d: int, s: int, a: int) -> bool:
    """True if ``a`` proves ``n`` composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin; exact below ``2**64``, error below ``4**-40`` above."""
    if not _is_int(n) or n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if any(_mr_witness(n, d, s, a) for a in _MR_BASES):
        return False
    if n < 1 << 64:
        return True
    # Seeded by n so repeated calls agree.
    rng = random.Random(n)
    return not any(
        _mr_witness(n, d, s, rng.randrange(2, n - 1)) for _ in range(MR_RANDOM_ROUNDS)
    )


def _brent(n: int, c: int) -> int:
    """One Pollard-rho run with Brent's cycle detection; may return ``n``."""
    y, r, q, g = 2, 1, 1, 1
    batch = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += batch
        r *= 2
    if g == n:
        # Batched product hit zero; step back one at a time.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _iroot(n: int, k: int) -> int:
    """Floor of the ``k``-th root of ``n >= 0``."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power_root(n: int) -> int | None:
    """Smallest ``r`` with ``r**k == n`` for some ``k >= 2``, or None."""
    for k in range(n.bit_length(), 1, -1):
        r = _iroot(n, k)
        if r > 1 and r**k == n:
            return r
    return None


def _split(n: int) -> int:
    """A nontrivial divisor of the odd composite ``n``."""
    # Rho finds p in p**k only after ~sqrt(p) steps, so peel powers first.
    r = _perfect_power_root(n)
    if r is not None:
        return r
    for c in range(1, n):
        d = _brent(n, c)
        if d != n:
            return d
    raise ArithmeticError(f"Pollard rho failed on {n}")  # pragma: no cover


def factor(m: int) -> Factorization:
    """Prime factorization of ``m >= 1``.

    Trial division by primes below one million, then Pollard-Brent on what is
    left.
    """
    check_modulus(m)
    counts: dict[int, int] = {}
    rest = m
    for p in _small_primes():
        if p * p > rest:
            break
        if rest % p == 0:
            c = 0
            while rest % p == 0:
                rest //= p
                c += 1
            counts[p] = c
    if rest > 1:
        stack = [rest]
        while stack:
            k = stack.pop()
            if is_prime(k):
                counts[k] = counts.get(k, 0) + 1
            else:
                d = _split(k)
                stack += [d, k // d]
    return Factorization(m, tuple(sorted(counts.items())))

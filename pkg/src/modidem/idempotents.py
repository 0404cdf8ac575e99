"""Idempotents of Z/mZ and the structure they carry.

With ``m = p_1^c_1 ... p_n^c_n`` every idempotent is ``sum(eps_k * h_k)`` for
``eps`` in ``{0, 1}^n``, where ``h_k`` is the primitive idempotent that is 1 mod
``p_k^c_k`` and 0 mod the other prime powers.  Under meet, join and complement
the idempotents form a Boolean algebra isomorphic to the subsets of the prime
divisors of ``m``; with ``xor_add`` as addition they form a ring of
characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arith import Factorization, factor
from .crt import CrtBasis, crt_basis
from .errors import ModulusMismatch, NotIdempotent, TooManyFactors
from .residue import Residue, same_modulus

__all__ = [
    "DEFAULT_CAP",
    "IdempotentSet",
    "Nilradical",
    "complement",
    "enumerate_idempotents",
    "from_support",
    "is_idempotent",
    "join",
    "meet",
    "nilradical",
    "primitive_idempotents",
    "support",
    "xor_add",
]

DEFAULT_CAP = 30


def _as_factorization(f: Factorization | int) -> Factorization:
    return f if isinstance(f, Factorization) else factor(f)


@dataclass(frozen=True)
class IdempotentSet:
    modulus: int
    basis: CrtBasis
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.members

    def from_eps(self, eps: Iterable[int]) -> int:
        """The idempotent whose coordinate on ``p_k^c_k`` is ``eps[k]``."""
        eps = tuple(eps)
        if any(e not in (0, 1) for e in eps):
            raise ValueError(f"eps must be a 0/1 vector, got {eps!r}")
        return self.basis.combine(eps)


def primitive_idempotents(f: Factorization | int) -> CrtBasis:
    """CRT basis over the prime powers of ``m``; no enumeration cap applies."""
    return crt_basis(_as_factorization(f).prime_powers)


def enumerate_idempotents(f: Factorization | int, cap: int = DEFAULT_CAP) -> IdempotentSet:
    f = _as_factorization(f)
    if f.n > cap:
        raise TooManyFactors(f.n, cap)
    basis = primitive_idempotents(f)
    m = f.m
    members = [0]
    for h in basis:
        members += [(x + h) % m for x in members]
    return IdempotentSet(m, basis, tuple(sorted(members)))


def is_idempotent(r: Residue) -> bool:
    return r.value * r.value % r.modulus == r.value


def _check(*rs: Residue) -> int:
    m = rs[0].modulus
    for r in rs[1:]:
        same_modulus(rs[0], r)
    for r in rs:
        if not is_idempotent(r):
            raise NotIdempotent(r.value, m)
    return m


def meet(a: Residue, b: Residue) -> Residue:
    m = _check(a, b)
    return Residue.of(a.value * b.value, m)


def join(a: Residue, b: Residue) -> Residue:
    m = _check(a, b)
    return Residue.of(a.value + b.value - a.value * b.value, m)


def complement(a: Residue) -> Residue:
    m = _check(a)
    return Residue.of(1 - a.value, m)


def xor_add(a: Residue, b: Residue) -> Residue:
    """Symmetric difference ``a + b - 2ab``: the addition of the Boolean ring."""
    m = _check(a, b)
    return Residue.of(a.value + b.value - 2 * a.value * b.value, m)


def support(e: Residue, f: Factorization | int) -> frozenset[int]:
    """Primes ``p`` of ``m`` at which ``e`` does not vanish.

    For an idempotent this is where ``e`` is 1 mod ``p^c``; it is the finite
    counterpart of the clopen set of primes not containing ``e``.
    """
    f = _as_factorization(f)
    if e.modulus != f.m:
        raise ModulusMismatch(f.m, e.modulus)
    _check(e)
    return frozenset(p for p, c in f if e.value % p**c == 1)


def from_support(primes: Iterable[int], f: Factorization | int) -> Residue:
    """Inverse of :func:`support`: the idempotent that is 1 exactly at ``primes``."""
    f = _as_factorization(f)
    wanted = frozenset(primes)
    unknown = wanted.difference(f.primes)
    if unknown:
        raise ValueError(f"{sorted(unknown)} are not prime divisors of {f.m}")
    basis = primitive_idempotents(f)
    return Residue(basis.combine(int(p in wanted) for p in f.primes), f.m)


class Nilradical(NamedTuple):
    generator: int
    nilpotent_count: int


def nilradical(f: Factorization | int) -> Nilradical:
    """Nilradical of Z/mZ: multiples of the radical of ``m``.

    There are ``m / rad(m) = prod(p^(c-1))`` of them.
    """
    f = _as_factorization(f)
    count = 1
    for p, c in f:
        count *= p ** (c - 1)
    return Nilradical(f.radical, count)

"""Constructive Chinese remaindering over pairwise coprime moduli.

The basis element for modulus ``m_k`` is the unique ``h_k`` in ``[0, M)`` that
is 1 mod ``m_k`` and 0 mod every other modulus, so a system
``x = f_k (mod m_k)`` is solved by ``x = sum(f_k * h_k) mod M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import Factorization, check_modulus, extended_gcd
from .errors import ModulusMismatch, NonCoprimeModuli
from .residue import Residue

__all__ = [
    "CongruenceSystem",
    "CrtBasis",
    "check_coprime",
    "crt_basis",
    "crt_solve",
    "crt_split",
]


def check_coprime(moduli: Sequence[int]) -> None:
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            g = math.gcd(moduli[i], moduli[j])
            if g > 1:
                raise NonCoprimeModuli(i, j, g)


@dataclass(frozen=True)
class CrtBasis:
    moduli: tuple[int, ...]
    big_modulus: int
    elements: tuple[int, ...]

    @property
    def complements(self) -> tuple[int, ...]:
        """The partners ``g_k = 1 - h_k`` (mod M), which vanish mod ``m_k``."""
        M = self.big_modulus
        return tuple((1 - h) % M for h in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def combine(self, coefficients: Iterable[int]) -> int:
        """``sum(c_k * h_k) mod M``; the residue congruent to ``c_k`` mod each ``m_k``."""
        coefficients = tuple(coefficients)
        if len(coefficients) != len(self.elements):
            raise ValueError(
                f"expected {len(self.elements)} coefficients, got {len(coefficients)}"
            )
        return sum(c * h for c, h in zip(coefficients, self.elements)) % self.big_modulus


def crt_basis(moduli: Iterable[int]) -> CrtBasis:
    moduli = tuple(check_modulus(m) for m in moduli)
    check_coprime(moduli)
    M = math.prod(moduli)
    elements = []
    for m in moduli:
        cofactor = M // m
        # cofactor * x = 1 (mod m); for m == 1 this yields h = 0.
        _, x, _ = extended_gcd(cofactor % m, m)
        elements.append(cofactor * x % M)
    return CrtBasis(moduli, M, tuple(elements))


@dataclass(frozen=True)
class CongruenceSystem:
    """Constraints ``x = r (mod m)``; remainders are stored canonically."""

    constraints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.constraints:
            raise ValueError("a congruence system needs at least one constraint")
        canon = tuple((r % check_modulus(m), m) for r, m in self.constraints)
        object.__setattr__(self, "constraints", canon)
        check_coprime(self.moduli)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> CongruenceSystem:
        return cls(tuple((r, m) for r, m in pairs))

    @property
    def remainders(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.constraints)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.constraints)


def crt_solve(system: CongruenceSystem | Iterable[tuple[int, int]]) -> Residue:
    """The canonical solution of the system; all solutions are ``x + M*Z``."""
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem.of(system)
    basis = crt_basis(system.moduli)
    return Residue(basis.combine(system.remainders), basis.big_modulus)


def crt_split(r: Residue, f: Factorization) -> list[Residue]:
    """Images of ``r`` in each prime-power factor ``Z/p^cZ``; empty when m is 1."""
    if f.m != r.modulus:
        raise ModulusMismatch(f.m, r.modulus)
    return [Residue(r.value % q, q) for q in f.prime_powers]

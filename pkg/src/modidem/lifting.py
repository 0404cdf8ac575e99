"""Lifting idempotents of Z/mZ modulo its nilradical.

If ``f^2 - f`` is nilpotent then there is exactly one idempotent ``g`` with
``f - g`` nilpotent.  :func:`lift_idempotent` finds it with the Newton step
``g <- 3g^2 - 2g^3``, which needs no factorization of ``m``: the error
``g^2 - g`` of the new iterate is a multiple of the square of the old error, so
after ``t`` steps the error lies in the ``2^t``-th power of the nilradical.
:func:`lift_by_projection` computes the same ``g`` prime by prime and serves
as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, factor
from .errors import ModulusMismatch, NotLiftable
from .residue import Residue

__all__ = [
    "LiftResult",
    "is_nilpotent",
    "lift_by_projection",
    "lift_idempotent",
    "nilpotency_bound",
]


@dataclass(frozen=True)
class LiftResult:
    lifted: Residue
    difference: Residue
    iterations: int


def nilpotency_bound(m: int) -> int:
    """``ceil(log2 m)``, at least 1; every exponent in m's factorization is at most this."""
    return max(1, (m - 1).bit_length())


def is_nilpotent(r: Residue) -> bool:
    return pow(r.value, nilpotency_bound(r.modulus), r.modulus) == 0


def lift_idempotent(f: Residue) -> LiftResult:
    m = f.modulus
    if not is_nilpotent(Residue.of(f.value * f.value - f.value, m)):
        raise NotLiftable(f.value, m)
    g = f.value
    k = nilpotency_bound(m)
    max_steps = (k - 1).bit_length() + 2
    steps = 0
    while g * g % m != g:
        if steps == max_steps:
            raise RuntimeError(
                f"Newton lifting of {f.value} mod {m} did not converge in {steps} steps"
            )
        g2 = g * g % m
        g = (3 * g2 - 2 * g2 * g) % m
        steps += 1
    return LiftResult(Residue(g, m), Residue.of(f.value - g, m), steps)


def lift_by_projection(f: Residue, fac: Factorization | None = None) -> Residue:
    """Lift by reading ``f`` mod each prime: 0 where ``p | f``, 1 where ``p | f - 1``."""
    m = f.modulus
    fac = factor(m) if fac is None else fac
    if fac.m != m:
        raise ModulusMismatch(fac.m, m)
    total = 0
    for p, c in fac:
        q = p**c
        if f.value % p == 1:
            total += m // q * pow(m // q, -1, q)
        elif f.value % p != 0:
            raise NotLiftable(f.value, m)
    return Residue.of(total, m)

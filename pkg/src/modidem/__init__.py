"""Idempotents, Chinese remaindering and nilradicals of Z/mZ."""

__version__ = "0.1.0"

from .arith import Factorization, extended_gcd, factor, is_prime, mod_pow
from .crt import CongruenceSystem, CrtBasis, crt_basis, crt_solve, crt_split
from .errors import (
    HypothesisFailure,
    InvalidModulus,
    ModulusMismatch,
    NonCoprimeModuli,
    NotIdempotent,
    NotLiftable,
    RingError,
    TooManyFactors,
)
from .idempotents import (
    IdempotentSet,
    Nilradical,
    complement,
    enumerate_idempotents,
    from_support,
    is_idempotent,
    join,
    meet,
    nilradical,
    primitive_idempotents,
    support,
    xor_add,
)
from .lifting import LiftResult, is_nilpotent, lift_by_projection, lift_idempotent
from .residue import Residue

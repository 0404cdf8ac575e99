from __future__ import annotations

from dataclasses import dataclass

from .arith import check_modulus
from .errors import ModulusMismatch


@dataclass(frozen=True, order=True)
class Residue:
    """Canonical representative ``value`` in ``[0, modulus)`` of a class in Z/mZ."""

    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        if not isinstance(self.value, int) or not 0 <= self.value < self.modulus:
            raise ValueError(
                f"value {self.value!r} is not a canonical residue mod {self.modulus}"
            )

    @classmethod
    def of(cls, value: int, modulus: int) -> Residue:
        """Reduce any integer (negative allowed) into canonical form."""
        check_modulus(modulus)
        return cls(value % modulus, modulus)

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


def same_modulus(a: Residue, b: Residue) -> int:
    if a.modulus != b.modulus:
        raise ModulusMismatch(a.modulus, b.modulus)
    return a.modulus

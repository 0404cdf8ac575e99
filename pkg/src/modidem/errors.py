"""Exception hierarchy.

Every error raised for bad input derives from :class:`RingError`, itself a
``ValueError``.  :class:`HypothesisFailure` marks the mathematical
preconditions (coprimality, idempotency, liftability); the CLI maps those to
exit code 3 and everything else to exit code 2.
"""


class RingError(ValueError):
    pass


class InvalidModulus(RingError):
    def __init__(self, m):
        super().__init__(f"modulus must be an integer >= 1, got {m!r}")
        self.m = m


class ModulusMismatch(RingError):
    def __init__(self, expected, got):
        super().__init__(f"modulus mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class TooManyFactors(RingError):
    def __init__(self, n, cap):
        super().__init__(
            f"{n} distinct primes would give 2**{n} idempotents; cap is {cap} "
            f"(raise the cap or ask for the basis only)"
        )
        self.n = n
        self.cap = cap


class HypothesisFailure(RingError):
    pass


class NonCoprimeModuli(HypothesisFailure):
    def __init__(self, i, j, gcd):
        super().__init__(
            f"moduli #{i} and #{j} are not coprime (gcd {gcd}); "
            f"the ideals are not comaximal"
        )
        self.i = i
        self.j = j
        self.gcd = gcd


class NotIdempotent(HypothesisFailure):
    def __init__(self, value, modulus):
        super().__init__(f"{value} is not idempotent mod {modulus}")
        self.value = value
        self.modulus = modulus


class NotLiftable(HypothesisFailure):
    def __init__(self, value, modulus):
        super().__init__(
            f"{value} is not idempotent modulo the nilradical of Z/{modulus}Z "
            f"(f^2 - f is not nilpotent)"
        )
        self.value = value
        self.modulus = modulus

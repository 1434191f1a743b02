"""Exact coefficient fields: odd prime fields GF(p) and the rationals.

Every computation in this package is exact.  The default field is a large
odd prime field (fast, fixed-width residues); the rationals give reference
semantics with arbitrary-precision coefficients at higher cost.  Field
elements are plain Python objects: canonical residues ``int`` in ``[0, p)``
for GF(p), ``fractions.Fraction`` for the rationals.
"""

from __future__ import annotations

from fractions import Fraction

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(m: int) -> bool:
    # deterministic Miller-Rabin; the witness set covers all m < 3.3e24
    if m < 2:
        return False
    for q in _MR_WITNESSES:
        if m % q == 0:
            return m == q
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p), p an odd prime, elements stored as residues in [0, p)."""

    __slots__ = ("p",)
    kind = "gf"

    def __init__(self, p: int):
        # p <= 2^31-1 keeps products of residues inside int64 for the
        # vectorized linear algebra
        if not (3 <= p <= 2**31 - 1) or not _is_prime(p):
            raise ValueError(f"field modulus must be an odd prime <= 2^31-1, got {p!r}")
        self.p = p

    @property
    def name(self) -> str:
        return f"gf:{self.p}"

    zero = 0
    one = 1

    def of_int(self, a: int):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + self.name)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """The field of rational numbers, elements are fractions.Fraction."""

    __slots__ = ()
    kind = "rational"
    name = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of_int(a: int) -> Fraction:
        return Fraction(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def random(rng) -> Fraction:
        # small integers: genericity without coefficient blowup
        return Fraction(rng.randrange(-99, 100))

    @staticmethod
    def random_nonzero(rng) -> Fraction:
        v = rng.randrange(-99, 99)
        return Fraction(v if v < 0 else v + 1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()
GF65521 = PrimeField(65521)


def field_from_name(name: str):
    """Parse a field spec string: ``gf:<p>`` or ``rational``."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad field spec {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"bad field spec {name!r}: expected 'gf:<p>' or 'rational'")

"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are plain Python objects (``Fraction`` for Q, ``int`` in ``[0, p)``
for F_p) so that the elimination loops can use the ordinary operators and
call :meth:`norm` afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Element = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Rationals:
    """The field Q with arbitrary-precision ``Fraction`` elements."""

    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def norm(self, x):
        return x

    def inv(self, x) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(x)

    def div(self, a, b) -> Fraction:
        return Fraction(a) * self.inv(b)

    def to_str(self, x) -> str:
        return str(Fraction(x))

    def spec(self) -> str:
        return "Q"

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """F_p for a prime p > 5 (factorials up to 3! must stay invertible)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p <= 5:
            raise ValueError(f"prime fields need p > 5, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def norm(self, x) -> int:
        return x % self.p

    def inv(self, x) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(x, -1, self.p)

    def div(self, a, b) -> int:
        return a * self.inv(b) % self.p

    def to_str(self, x) -> str:
        return str(int(x) % self.p)

    def spec(self) -> str:
        return f"Fp:{self.p}"

    def __str__(self) -> str:
        return f"F_{self.p}"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def parse_field(spec: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r}; expected 'Q' or 'Fp:<p>'")

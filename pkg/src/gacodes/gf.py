"""Arithmetic in prime fields GF(p)."""

from __future__ import annotations

from dataclasses import dataclass


class CompositeModulus(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo a prime ``p``.

    Elements are plain ints in ``[0, p)``; every operation returns a canonical residue.
    """

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")

    def __repr__(self) -> str:
        return f"GF({self.p})"

    @property
    def order(self) -> int:
        return self.p

    def elements(self) -> range:
        return range(self.p)

    def nonzero(self) -> range:
        return range(1, self.p)

    def __call__(self, x: int) -> int:
        return x % self.p

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        return gf_inv(self, x)

    def div(self, x: int, y: int) -> int:
        return x * gf_inv(self, y) % self.p

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return pow(gf_inv(self, x), -e, self.p)
        return pow(x, e, self.p)


def gf_new(p: int) -> PrimeField:
    return PrimeField(p)


def gf_inv(field: PrimeField, x: int) -> int:
    """Inverse of ``x`` by the extended Euclidean algorithm."""
    p = field.p
    x %= p
    if x == 0:
        raise DivisionByZero(f"0 has no inverse in GF({p})")
    r0, r1, s0, s1 = p, x, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


GF2 = PrimeField(2)

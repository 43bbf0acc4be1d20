"""Elements of a group algebra F[G] and their regular-representation matrices."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

import numpy as np

from .fmat import FMatrix
from .gf import GF2, PrimeField
from .groups import GroupTable, subgroup_generated


class MixedContext(ValueError):
    pass


class AlgebraElement:
    """Sparse element ``sum_g c_g g`` of F[G]; zero coefficients are never stored."""

    __slots__ = ("group", "field", "coeffs")

    def __init__(self, group: GroupTable, field: PrimeField, coeffs: Mapping[int, int] | None = None) -> None:
        self.group = group
        self.field = field
        clean: dict[int, int] = {}
        for g, c in (coeffs or {}).items():
            g = int(g)
            if not 0 <= g < group.order:
                raise IndexError(f"group element {g} out of range for order {group.order}")
            c = int(c) % field.p
            if c:
                clean[g] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def from_support(cls, group: GroupTable, field: PrimeField, support: Iterable[int]) -> AlgebraElement:
        coeffs: dict[int, int] = {}
        for g in support:
            coeffs[int(g)] = coeffs.get(int(g), 0) + 1
        return cls(group, field, coeffs)

    @classmethod
    def one(cls, group: GroupTable, field: PrimeField) -> AlgebraElement:
        return cls(group, field, {0: 1})

    @classmethod
    def zero(cls, group: GroupTable, field: PrimeField) -> AlgebraElement:
        return cls(group, field)

    @classmethod
    def from_vector(cls, group: GroupTable, field: PrimeField, vec: Iterable[int]) -> AlgebraElement:
        return cls(group, field, dict(enumerate(int(v) for v in vec)))

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_string()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.group.order, self.field.p, tuple(self.coeffs.items())))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.coeffs)

    @property
    def weight(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> np.ndarray:
        v = np.zeros(self.group.order, dtype=np.int64)
        for g, c in self.coeffs.items():
            v[g] = c
        return v

    def sort_key(self) -> tuple:
        """Total order: sorted support first, then coefficients in support order."""
        return (tuple(self.coeffs), tuple(self.coeffs.values()))

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for g, c in self.coeffs.items():
            word = self.group.word(g)
            if c == 1:
                terms.append(word)
            elif word == "1":
                terms.append(str(c))
            else:
                terms.append(f"{c}*{word}")
        return " + ".join(terms)

    def _same(self, other: AlgebraElement) -> None:
        if self.group != other.group or self.field != other.field:
            raise MixedContext("elements live in different group algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return ga_add(self, other)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return ga_add(self, ga_scale(-1, other))

    def __neg__(self) -> AlgebraElement:
        return ga_scale(-1, self)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return ga_mul(self, other)

    def __rmul__(self, c: int) -> AlgebraElement:
        return ga_scale(c, self)

    def left_translate(self, g: int) -> AlgebraElement:
        """``g * self`` for a group element ``g``."""
        mul = self.group.mul
        return AlgebraElement(self.group, self.field, {int(mul[g, h]): c for h, c in self.coeffs.items()})

    def right_translate(self, g: int) -> AlgebraElement:
        """``self * g`` for a group element ``g``."""
        mul = self.group.mul
        return AlgebraElement(self.group, self.field, {int(mul[h, g]): c for h, c in self.coeffs.items()})


def ga_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    out = dict(a.coeffs)
    for g, c in b.coeffs.items():
        out[g] = out.get(g, 0) + c
    return AlgebraElement(a.group, a.field, out)


def ga_scale(c: int, a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.group, a.field, {g: c * v for g, v in a.coeffs.items()})


def ga_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution ``(ab)_g = sum_h a_h b_{h^-1 g}``."""
    a._same(b)
    mul = a.group.mul
    out: dict[int, int] = {}
    for h, x in a.coeffs.items():
        for k, y in b.coeffs.items():
            g = int(mul[h, k])
            out[g] = out.get(g, 0) + x * y
    return AlgebraElement(a.group, a.field, out)


def ga_hat(a: AlgebraElement) -> AlgebraElement:
    inv = a.group.inv
    return AlgebraElement(a.group, a.field, {int(inv[g]): c for g, c in a.coeffs.items()})


def ga_trace(a: AlgebraElement) -> int:
    return a.coeffs.get(0, 0)


def support_group(a: AlgebraElement) -> frozenset[int]:
    return subgroup_generated(a.group, a.support)


def left_matrix(a: AlgebraElement) -> FMatrix:
    """``L(a)[alpha, beta] = sum_g a_g [alpha == g beta]``; column ``beta`` holds ``a * beta``."""
    G = a.group
    M = np.zeros((G.order, G.order), dtype=np.int64)
    cols = np.arange(G.order)
    for g, c in a.coeffs.items():
        M[G.mul[g, cols], cols] += c
    return FMatrix(M, a.field)


def right_matrix(b: AlgebraElement) -> FMatrix:
    """``R(b)[alpha, beta] = sum_g b_g [alpha == beta g]``; column ``beta`` holds ``beta * b``."""
    G = b.group
    M = np.zeros((G.order, G.order), dtype=np.int64)
    cols = np.arange(G.order)
    for g, c in b.coeffs.items():
        M[G.mul[cols, g], cols] += c
    return FMatrix(M, b.field)


def hat_permutation(G: GroupTable, field: PrimeField = GF2) -> FMatrix:
    """Symmetric permutation ``P[alpha, beta] = [alpha == beta^-1]``."""
    P = np.zeros((G.order, G.order), dtype=np.int64)
    P[np.arange(G.order), G.inv] = 1
    return FMatrix(P, field)

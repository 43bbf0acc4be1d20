"""Distance bounds and identities for two-block codes, as checkable computations.

Inapplicable bounds return ``None`` (or raise :class:`NotApplicable` where the caller asked
for one specific bound) so that pipelines can attach them opportunistically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distance import (
    DEFAULT_BUDGET,
    INF,
    classical_dual_distance,
    exact_dX,
    exact_dZ,
    min_weight_outside,
    subsystem_dZ,
)
from .fmat import FMatrix, block, vstack
from .groups import is_abelian_subset, is_normal
from .twoblock import TwoBlockCode, components, css_dimension, structure_params


class NotApplicable(ValueError):
    pass


class NotW4(ValueError):
    pass


class BoundViolation(AssertionError):
    pass


@dataclass
class BoundReport:
    side: str
    d_z: int | float | None = None
    d_prime: int | float | None = None
    d_double_prime: int | float | None = None
    d_classical: int | float | None = None
    block_bound: int | None = None
    d0: int | float | None = None
    ds: int | float | None = None

    def chain(self) -> tuple:
        return (self.d_z, self.d_prime, self.d_double_prime, self.d_classical)


def _check_side(side: str) -> str:
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return side


def _identity(code: TwoBlockCode) -> FMatrix:
    return FMatrix.identity(code.ell, code.field)


def _zero(code: TwoBlockCode) -> FMatrix:
    return FMatrix.zeros(code.ell, code.ell, code.field)


def extended_hx(code: TwoBlockCode, side: str) -> FMatrix:
    """``H_X`` with rows ``(0, I - E_A)`` (side L) or ``(I - E_B, 0)`` (side R) appended."""
    I, Z = _identity(code), _zero(code)
    if _check_side(side) == "L":
        E_A = code.idempotents_a[0]
        return block([[code.A, code.B], [Z, I - E_A]])
    E_B = code.idempotents_b[0]
    return block([[code.A, code.B], [I - E_B, Z]])


def extended_hz(code: TwoBlockCode, side: str) -> FMatrix:
    """``H_Z`` with rows ``((I - F_A)^T, 0)`` (side L) or ``(0, (I - F_B)^T)`` (side R)."""
    I, Z = _identity(code), _zero(code)
    if _check_side(side) == "L":
        F_A = code.idempotents_a[1]
        return vstack(code.H_Z, block([[(I - F_A).T, Z]]))
    F_B = code.idempotents_b[1]
    return vstack(code.H_Z, block([[Z, (I - F_B).T]]))


def shortened_pair(code: TwoBlockCode, side: str) -> tuple[FMatrix, FMatrix]:
    """Single-block code ``(A, (B (I - F_A))^T)`` for L, ``(B, (A (I - F_B))^T)`` for R."""
    I = _identity(code)
    if _check_side(side) == "L":
        return code.A, (code.B @ (I - code.idempotents_a[1])).T
    return code.B, (code.A @ (I - code.idempotents_b[1])).T


def classical_check(code: TwoBlockCode, side: str) -> FMatrix:
    """``(A; E_B)`` for L and ``(B; E_A)`` for R."""
    if _check_side(side) == "L":
        return vstack(code.A, code.idempotents_b[0])
    return vstack(code.B, code.idempotents_a[0])


def upper_chain(code: TwoBlockCode, side: str, budget: int = DEFAULT_BUDGET, check: bool = True) -> BoundReport:
    """``d_Z <= d_Z(Q') <= d_Z(Q'') <= d(C)`` for the chosen side, all computed exactly."""
    d_z = exact_dZ(code.H_X, code.H_Z, budget).value
    d1 = min_weight_outside(extended_hx(code, side), code.H_Z, budget).value
    hx2, hz2 = shortened_pair(code, side)
    d2 = min_weight_outside(hx2, hz2, budget).value
    d3 = classical_dual_distance(classical_check(code, side), budget).value
    report = BoundReport(side, d_z, d1, d2, d3)
    if check and not d_z <= d1 <= d2 <= d3:
        raise BoundViolation(f"upper chain violated on side {side}: {report.chain()}")
    return report


def block_bound(code: TwoBlockCode) -> int:
    sp = structure_params(code)
    if sp.delta_x or sp.delta_z:
        raise NotApplicable(f"rank defects ({sp.delta_x}, {sp.delta_z}) are nonzero")
    Ga, Gb = code.support_groups
    return min(len(Ga), len(Gb))


def puncture_lower(code: TwoBlockCode, budget: int = DEFAULT_BUDGET) -> int | float:
    """Distance ``d_S`` of the block-erasure subsystem code ``CSS(A, B^T)``."""
    sp = structure_params(code)
    if sp.delta_x or sp.delta_z:
        raise NotApplicable(f"rank defects ({sp.delta_x}, {sp.delta_z}) are nonzero")
    A, Bt = code.A, code.B.T
    return min(subsystem_dZ(A, Bt, budget).value, subsystem_dZ(Bt, A, budget).value)


def split_identity(
    code: TwoBlockCode, side: str, budget: int = DEFAULT_BUDGET, check: bool = True
) -> tuple[int | float, int | float]:
    """``(d_Z(H_X^mu, H_Z), d_Z(H_X, H_Z^mu))``; their minimum is the code's ``d_Z``."""
    left = min_weight_outside(extended_hx(code, side), code.H_Z, budget).value
    right = min_weight_outside(code.H_X, extended_hz(code, side), budget).value
    if check:
        d_z = exact_dZ(code.H_X, code.H_Z, budget).value
        if d_z != min(left, right):
            raise BoundViolation(f"split identity fails on side {side}: d_Z={d_z}, parts=({left}, {right})")
    return left, right


def quasi_abelian_lower(code: TwoBlockCode, budget: int = DEFAULT_BUDGET) -> int | float | None:
    """``ceil(min(d_A, d_B) / |N|)`` for ``N = G_a & G_b`` abelian and normal in both; else None."""
    Ga, Gb = code.support_groups
    N = Ga & Gb
    G = code.group
    if not (is_abelian_subset(G, N) and is_normal(G, N, within=Ga) and is_normal(G, N, within=Gb)):
        return None
    dA = classical_dual_distance(code.A, budget).value
    dB = classical_dual_distance(code.B, budget).value
    low = min(dA, dB)
    if low == INF:
        return INF
    return math.ceil(low / len(N))


@dataclass
class W4Component:
    coset: tuple[int, ...]
    n: int
    k: int
    d_x: int | float
    d_z: int | float

    def ok(self) -> bool:
        if self.k != 2:
            return False
        for d in (self.d_x, self.d_z):
            limit = self.n - 1 if d % 2 else self.n
            if d * d > limit:
                return False
        return True


def w4_components(code: TwoBlockCode, budget: int = DEFAULT_BUDGET) -> list[W4Component]:
    if code.a.weight != 2 or code.b.weight != 2:
        raise NotW4(f"weights ({code.a.weight}, {code.b.weight}) differ from (2, 2)")
    out = []
    for comp in components(code):
        out.append(
            W4Component(
                comp.coset,
                comp.H_X.cols,
                css_dimension(comp.H_X, comp.H_Z),
                exact_dX(comp.H_X, comp.H_Z, budget).value,
                exact_dZ(comp.H_X, comp.H_Z, budget).value,
            )
        )
    return out


def w4_check(code: TwoBlockCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Every double-coset component has ``k = 2`` and ``d^2 <= n`` (``n - 1`` for odd ``d``)."""
    return all(c.ok() for c in w4_components(code, budget))


def bound_report(code: TwoBlockCode, side: str = "L", budget: int = DEFAULT_BUDGET) -> BoundReport:
    """Upper chain plus whichever of the other bounds apply."""
    report = upper_chain(code, side, budget, check=False)
    try:
        report.block_bound = block_bound(code)
        report.ds = puncture_lower(code, budget)
    except NotApplicable:
        pass
    report.d0 = quasi_abelian_lower(code, budget)
    return report

"""Two-block group-algebra CSS codes LP[a, b].

``H_X = (A | B)`` and ``H_Z = (B^T | -A^T)`` with ``A = L(a)`` and ``B = R(b)``.  Left and
right regular representations commute, so the two check matrices are orthogonal for any
group and any pair of elements.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Any, NamedTuple

import numpy as np

from .algebra import (
    AlgebraElement,
    MixedContext,
    ga_hat,
    left_matrix,
    right_matrix,
    support_group,
)
from .fmat import DimensionMismatch, FMatrix, hstack, m_idempotents, m_rank, vstack
from .gf import PrimeField
from .groups import GroupTable, double_cosets


class InvalidTransform(ValueError):
    pass


class TwoBlockCode:
    """Immutable CSS code assembled from ``(G, F, a, b)``; matrices are built eagerly."""

    def __init__(self, a: AlgebraElement, b: AlgebraElement) -> None:
        if a.group != b.group or a.field != b.field:
            raise MixedContext("a and b must live in the same group algebra")
        self.group: GroupTable = a.group
        self.field: PrimeField = a.field
        self.a = a
        self.b = b
        self.A = left_matrix(a)
        self.B = right_matrix(b)
        self.H_X = hstack(self.A, self.B)
        self.H_Z = hstack(self.B.T, -self.A.T)
        if not (self.A @ self.B == self.B @ self.A):
            raise ArithmeticError("L(a) and R(b) fail to commute")
        if not (self.H_X @ self.H_Z.T).is_zero():
            raise ArithmeticError("H_X H_Z^T is nonzero")

    def __repr__(self) -> str:
        return f"LP[{self.a.to_string()}, {self.b.to_string()}] over {self.group.name or self.group.order} / GF({self.field.p})"

    @property
    def ell(self) -> int:
        return self.group.order

    @property
    def n(self) -> int:
        return 2 * self.group.order

    @cached_property
    def rank_hx(self) -> int:
        return m_rank(self.H_X)

    @cached_property
    def rank_hz(self) -> int:
        return m_rank(self.H_Z)

    @cached_property
    def idempotents_a(self) -> tuple[FMatrix, FMatrix]:
        """``(E_A, F_A)`` adapted to ``B`` so the rank-defect formulas are choice-free."""
        return m_idempotents(self.A, self.B)

    @cached_property
    def idempotents_b(self) -> tuple[FMatrix, FMatrix]:
        return m_idempotents(self.B, self.A)

    @cached_property
    def support_groups(self) -> tuple[frozenset[int], frozenset[int]]:
        return support_group(self.a), support_group(self.b)


def build(G: GroupTable, F: PrimeField, a: AlgebraElement, b: AlgebraElement) -> TwoBlockCode:
    for e in (a, b):
        if e.group != G or e.field != F:
            raise MixedContext("element does not belong to F[G]")
    return TwoBlockCode(a, b)


def css_dimension(H_X: FMatrix, H_Z: FMatrix) -> int:
    if H_X.cols != H_Z.cols:
        raise DimensionMismatch(f"{H_X.shape} vs {H_Z.shape}")
    return H_X.cols - m_rank(H_X) - m_rank(H_Z)


def dimension(code: TwoBlockCode) -> int:
    return code.n - code.rank_hx - code.rank_hz


@dataclass(frozen=True)
class StructureParams:
    p_star: int
    delta_x: int
    delta_z: int
    k_s: int
    k: int


def structure_params(code: TwoBlockCode) -> StructureParams:
    """Rank defects from plain ranks.

    With idempotents adapted to the partner block, ``rank(E_A B)`` is
    ``dim(col A & col B)`` and ``rank(B F_A)`` is ``dim(row A & row B)``, so no projector
    has to be formed; :func:`rank_defects_from_idempotents` computes the same numbers the long way.
    """
    A, B = code.A, code.B
    ra, rb = m_rank(A), m_rank(B)
    p_star = m_rank(A @ B)
    delta_x = ra + rb - code.rank_hx - p_star
    delta_z = ra + rb - m_rank(vstack(A, B)) - p_star
    k_s = code.ell - code.rank_hx - delta_x
    return StructureParams(p_star, delta_x, delta_z, k_s, dimension(code))


def rank_defects_from_idempotents(code: TwoBlockCode) -> tuple[int, int]:
    """``(rank(E_A B) - p*, rank(B F_A) - p*)`` with explicit idempotents."""
    E_A, F_A = code.idempotents_a
    p_star = m_rank(code.A @ code.B)
    return m_rank(E_A @ code.B) - p_star, m_rank(code.B @ F_A) - p_star


def subsystem_dimension(G_X: FMatrix, G_Z: FMatrix) -> int:
    """Number of logical qudits of the subsystem code with gauge generators ``G_X, G_Z``."""
    if G_X.cols != G_Z.cols:
        raise DimensionMismatch(f"{G_X.shape} vs {G_Z.shape}")
    return G_X.cols - m_rank(G_X) - m_rank(G_Z) + m_rank(G_X @ G_Z.T)


class Component(NamedTuple):
    coset: tuple[int, ...]
    H_X: FMatrix
    H_Z: FMatrix
    columns: tuple[int, ...]


def components(code: TwoBlockCode) -> list[Component]:
    """Split the code along the double cosets ``G_a x G_b``.

    Row ``x`` of ``H_X`` touches left column ``g^-1 x`` and right column ``x g^-1`` only, both
    inside ``G_a x G_b``; the same holds for ``H_Z``.  A component therefore owns the rows
    labelled by its coset and the coset's columns in both blocks.
    """
    Ga, Gb = code.support_groups
    ell = code.ell
    out = []
    for coset in double_cosets(code.group, Ga, Gb):
        cols = tuple(coset) + tuple(ell + g for g in coset)
        out.append(
            Component(
                coset,
                code.H_X.submatrix(rows=coset, cols=cols),
                code.H_Z.submatrix(rows=coset, cols=cols),
                cols,
            )
        )
    return out


def is_connected(code: TwoBlockCode) -> bool:
    Ga, Gb = code.support_groups
    return len(double_cosets(code.group, Ga, Gb)) == 1


# equivalences


TRANSFORM_KINDS = ("automorphism", "conjugate", "scale", "translate", "hat_swap", "css_dual")


def _is_automorphism(G: GroupTable, phi: np.ndarray) -> bool:
    if phi.shape != (G.order,) or sorted(phi.tolist()) != list(range(G.order)):
        return False
    return bool(np.array_equal(phi[G.mul], G.mul[phi[:, None], phi[None, :]]))


def transform_pair(
    G: GroupTable,
    a: AlgebraElement,
    b: AlgebraElement,
    kind: str,
    params: Any = None,
) -> tuple[AlgebraElement, AlgebraElement]:
    """Map ``(a, b)`` to a pair defining an equivalent code.

    ``params`` by kind: automorphism takes the image array ``phi``; conjugate and translate
    take group elements ``(alpha, beta)``; scale takes nonzero field elements ``(x, y)``.
    Only ``css_dual`` exchanges the roles of X and Z.
    """
    F = a.field
    if kind == "automorphism":
        phi = np.asarray(params, dtype=np.int64)
        if not _is_automorphism(G, phi):
            raise InvalidTransform("map is not an automorphism of the group")

        def image(e: AlgebraElement) -> AlgebraElement:
            return AlgebraElement(G, F, {int(phi[g]): c for g, c in e.coeffs.items()})

        return image(a), image(b)
    if kind == "conjugate":
        al, be = _two_elements(G, params)
        inv = G.inv
        return a.left_translate(int(inv[al])).right_translate(al), b.left_translate(int(inv[be])).right_translate(be)
    if kind == "scale":
        x, y = params
        if x % F.p == 0 or y % F.p == 0:
            raise InvalidTransform("scale factors must be nonzero")
        return x * a, y * b
    if kind == "translate":
        al, be = _two_elements(G, params)
        return a.right_translate(al), b.left_translate(be)
    if kind == "hat_swap":
        return ga_hat(b), ga_hat(a)
    if kind == "css_dual":
        return b, a
    raise InvalidTransform(f"unknown transform kind {kind!r}")


def _two_elements(G: GroupTable, params: Any) -> tuple[int, int]:
    try:
        al, be = (int(v) for v in params)
    except (TypeError, ValueError) as exc:
        raise InvalidTransform("expected two group elements") from exc
    if not (0 <= al < G.order and 0 <= be < G.order):
        raise InvalidTransform("group element out of range")
    return al, be


# canonical representatives


def canonical_element(a: AlgebraElement, scale: bool | None = None) -> AlgebraElement:
    """Smallest element among ``{alpha a beta}`` (and nonzero multiples when ``scale``).

    Elements are ordered by their sorted support, then by the coefficient word.  The minimum
    always contains the identity, so only the ``beta = s^-1 alpha^-1`` candidates are scanned.
    ``scale`` defaults to ``p > 2``.
    """
    if a.is_zero():
        return a
    G, F = a.group, a.field
    if scale is None:
        scale = F.p > 2
    mul, inv = G.mul, G.inv
    elems = np.array(a.support, dtype=np.int64)
    coeffs = np.array([a.coeffs[g] for g in a.support], dtype=np.int64)
    best: tuple | None = None
    for s in a.support:
        shifted = mul[elems, inv[s]]
        # row alpha holds alpha (a s^-1) alpha^-1
        img = mul[mul[:, shifted], inv[:, None]]
        order = np.argsort(img, axis=1, kind="stable")
        supp = np.take_along_axis(img, order, axis=1)
        cs = coeffs[order]
        if scale:
            lead_inv = np.array([F.inv(int(c)) for c in cs[:, 0]], dtype=np.int64)
            cs = cs * lead_inv[:, None] % F.p
        keys = np.hstack([supp, cs])
        row = keys[np.lexsort(keys.T[::-1])[0]]
        key = (tuple(int(v) for v in row[: len(elems)]), tuple(int(v) for v in row[len(elems) :]))
        if best is None or key < best:
            best = key
    best_map = dict(zip(*best))
    return AlgebraElement(G, F, best_map)


def canonical_pair(
    G: GroupTable, a: AlgebraElement, b: AlgebraElement
) -> tuple[AlgebraElement, AlgebraElement, bool]:
    """Canonical representative of the pair under two-sided translation and hat-swap."""
    a_min, b_min = canonical_element(a), canonical_element(b)
    if a.weight == b.weight:
        alt = (canonical_element(ga_hat(b)), canonical_element(ga_hat(a)))
        if (alt[0].sort_key(), alt[1].sort_key()) < (a_min.sort_key(), b_min.sort_key()):
            a_min, b_min = alt
    return a_min, b_min, (a_min == a and b_min == b)


# reports


@dataclass
class CodeReport:
    group: str
    order: int
    p: int
    a: str
    b: str
    wa: int
    wb: int
    n: int
    k: int
    p_star: int
    delta_x: int
    delta_z: int
    k_s: int
    connected: bool
    components: int
    dx: float | int | None = None
    dz: float | int | None = None
    d: float | int | None = None
    d_mode: str | None = None
    trials: int = 0
    seed: int | None = None
    extra: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def w(self) -> int:
        return self.wa + self.wb

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("extra")
        return out

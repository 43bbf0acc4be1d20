"""Dense matrices over GF(p) with exact elimination.

Over GF(2) rows are packed into Python ints (bit ``j`` is column ``j``) for elimination;
other primes use vectorized numpy row operations on residues.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from . import _kernels
from .gf import GF2, PrimeField, gf_inv


class DimensionMismatch(ValueError):
    pass


class NotSquare(ValueError):
    pass


class FMatrix:
    """Matrix over a prime field; ``data`` holds canonical residues as int64."""

    __slots__ = ("data", "field")

    def __init__(self, data: np.ndarray | Sequence[Sequence[int]], field: PrimeField = GF2) -> None:
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.data = arr % field.p
        self.field = field

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField = GF2) -> FMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    @classmethod
    def identity(cls, n: int, field: PrimeField = GF2) -> FMatrix:
        return cls(np.eye(n, dtype=np.int64), field)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape  # type: ignore[return-value]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def T(self) -> FMatrix:
        return FMatrix(self.data.T, self.field)

    def __repr__(self) -> str:
        return f"FMatrix({self.rows}x{self.cols} over GF({self.p}))"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: FMatrix) -> None:
        if self.field != other.field:
            raise DimensionMismatch("matrices over different fields")

    def __add__(self, other: FMatrix) -> FMatrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return FMatrix(self.data + other.data, self.field)

    def __sub__(self, other: FMatrix) -> FMatrix:
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return FMatrix(self.data - other.data, self.field)

    def __neg__(self) -> FMatrix:
        return FMatrix(-self.data, self.field)

    def __matmul__(self, other: FMatrix) -> FMatrix:
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return FMatrix(self.data @ other.data, self.field)

    def scale(self, c: int) -> FMatrix:
        return FMatrix(self.data * c, self.field)

    def is_zero(self) -> bool:
        return not self.data.any()

    def rank(self) -> int:
        return m_rank(self)

    def nullspace(self) -> FMatrix:
        return m_nullspace(self)

    def inverse(self) -> FMatrix:
        return m_inverse(self)

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> FMatrix:
        d = self.data
        if rows is not None:
            d = d[np.asarray(rows, dtype=np.int64)]
        if cols is not None:
            d = d[:, np.asarray(cols, dtype=np.int64)]
        return FMatrix(d, self.field)


def hstack(*mats: FMatrix) -> FMatrix:
    return FMatrix(np.hstack([m.data for m in mats]), mats[0].field)


def vstack(*mats: FMatrix) -> FMatrix:
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise DimensionMismatch(f"cannot stack widths {sorted(cols)}")
    return FMatrix(np.vstack([m.data for m in mats]), mats[0].field)


def block(grid: Sequence[Sequence[FMatrix]]) -> FMatrix:
    return vstack(*[hstack(*row) for row in grid])


# bit packing for GF(2)


def pack_rows(data: np.ndarray) -> list[int]:
    if data.shape[0] == 0:
        return []
    packed = np.packbits(data.astype(np.uint8) & 1, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_rows(rows: Iterable[int], ncols: int) -> np.ndarray:
    rows = list(rows)
    nbytes = max(1, (ncols + 7) // 8)
    if not rows:
        return np.zeros((0, ncols), dtype=np.int64)
    raw = np.frombuffer(b"".join(r.to_bytes(nbytes, "little") for r in rows), dtype=np.uint8)
    bits = np.unpackbits(raw.reshape(len(rows), nbytes), axis=1, bitorder="little")
    return bits[:, :ncols].astype(np.int64)


def _rref_bits(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pr
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def _rref_modp(data: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    M = data.copy() % p
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * gf_inv(PrimeField(p), int(M[r, col])) % p
        factors = M[:, col].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            M[hit] = (M[hit] - factors[hit, None] * M[r][None, :]) % p
        pivots.append(col)
        r += 1
    return M[:r], pivots


def _rref_gf2(data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Compiled Gauss-Jordan over GF(2) on rows packed into 64-bit words."""
    m, n = data.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((m, words * 64), dtype=np.uint8)
    padded[:, :n] = data & 1
    work = np.packbits(padded, axis=1, bitorder="little").view("<u8").copy()
    piv = _kernels._reduce_pivots_gf2(work, np.arange(n, dtype=np.int64))
    r = len(piv)
    bits = np.unpackbits(work[:r].view(np.uint8), axis=1, bitorder="little")[:, :n]
    return bits.astype(np.int64).reshape(r, n), [int(c) for c in piv]


def rref(M: FMatrix) -> tuple[FMatrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and the pivot columns."""
    if M.p == 2:
        if M.rows == 0 or M.cols == 0:
            return FMatrix.zeros(0, M.cols, M.field), []
        R, piv = _rref_gf2(M.data)
        return FMatrix(R, M.field), piv
    R, piv = _rref_modp(M.data, M.p)
    return FMatrix(R.reshape(len(piv), M.cols), M.field), piv


def m_rank(M: FMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    if M.p == 2:
        return len(_rref_gf2(M.data)[1])
    return len(_rref_modp(M.data, M.p)[1])


def m_nullspace(M: FMatrix) -> FMatrix:
    """Basis rows of ``{v : M v = 0}``."""
    n = M.cols
    if M.rows == 0:
        return FMatrix.identity(n, M.field)
    R, piv = rref(M)
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, c in enumerate(piv):
            basis[t, c] = -R.data[i, f]
    return FMatrix(basis.reshape(len(free), n), M.field)


def m_inverse(M: FMatrix) -> FMatrix:
    if M.rows != M.cols:
        raise NotSquare(f"{M.shape}")
    n = M.rows
    R, piv = rref(hstack(M, FMatrix.identity(n, M.field)))
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return FMatrix(R.data[:n, n:], M.field)


class RowSpaceCache:
    """Reduced echelon basis of a row space for repeated membership queries."""

    def __init__(self, M: FMatrix) -> None:
        self.field = M.field
        self.cols = M.cols
        R, piv = rref(M)
        self.basis = R
        self.pivots = piv
        self.rank = len(piv)
        if M.p == 2:
            self._bits = pack_rows(R.data)

    def reduce(self, v: np.ndarray | Sequence[int]) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.field.p
        if v.shape != (self.cols,):
            raise DimensionMismatch(f"vector of length {v.size}, expected {self.cols}")
        p = self.field.p
        if p == 2:
            x = pack_rows(v.reshape(1, -1))[0]
            for row, c in zip(self._bits, self.pivots):
                if (x >> c) & 1:
                    x ^= row
            return unpack_rows([x], self.cols)[0]
        out = v.copy()
        for i, c in enumerate(self.pivots):
            if out[c]:
                out = (out - out[c] * self.basis.data[i]) % p
        return out

    def contains(self, v: np.ndarray | Sequence[int]) -> bool:
        return not self.reduce(v).any()


def m_membership(cache: RowSpaceCache, v: np.ndarray | Sequence[int]) -> bool:
    return cache.contains(v)


def _complete_columns(C: FMatrix) -> FMatrix:
    """Append standard basis columns so that ``C`` (independent columns) becomes invertible."""
    n = C.rows
    if C.cols == 0:
        return FMatrix.identity(n, C.field)
    _, piv = rref(C.T)
    extra = [i for i in range(n) if i not in set(piv)]
    E = np.zeros((n, len(extra)), dtype=np.int64)
    for t, i in enumerate(extra):
        E[i, t] = 1
    return hstack(C, FMatrix(E.reshape(n, len(extra)), C.field))


def m_full_rank_factorization(A: FMatrix) -> tuple[FMatrix, FMatrix, FMatrix]:
    """``A = U D V`` with ``U, V`` invertible and ``D = diag(1..1, 0..0)`` of rank ``rank A``.

    ``A = A[:, pivots] @ R`` where ``R`` is the reduced row echelon form; both factors
    are then completed to invertible matrices with standard basis vectors.
    """
    if A.rows != A.cols:
        raise NotSquare(f"{A.shape}")
    n, F = A.rows, A.field
    R, piv = rref(A)
    r = len(piv)
    U = _complete_columns(A.submatrix(cols=piv) if r else FMatrix.zeros(n, 0, F))
    pivset = set(piv)
    extra = np.zeros((n - r, n), dtype=np.int64)
    for t, j in enumerate(c for c in range(n) if c not in pivset):
        extra[t, j] = 1
    V = vstack(R, FMatrix(extra, F)) if r else FMatrix(extra, F)
    D = np.zeros((n, n), dtype=np.int64)
    D[range(r), range(r)] = 1
    return U, FMatrix(D, F), V


def m_idempotents(A: FMatrix, B: FMatrix | None = None) -> tuple[FMatrix, FMatrix]:
    """Idempotents ``E_A = U D U^-1`` and ``F_A = V^-1 D V`` with ``E_A A = A F_A = A``.

    Without ``B`` the factors come from :func:`m_full_rank_factorization`.  With ``B`` the
    projections are adapted to it: ``E_A`` maps the column space of ``B`` onto its
    intersection with that of ``A`` and ``F_A`` does the same for row spaces, so that
    ``rank B = rank E_A B + rank (I - E_A) B`` and ``rank B = rank B F_A + rank B (I - F_A)``.
    """
    if B is None:
        U, D, V = m_full_rank_factorization(A)
        return U @ D @ m_inverse(U), m_inverse(V) @ D @ V
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    return _adapted_projection(A, B), _adapted_projection(A.T, B.T).T


def _column_basis(M: FMatrix) -> FMatrix:
    _, piv = rref(M)
    return M.submatrix(cols=piv)


def _adapted_projection(A: FMatrix, B: FMatrix) -> FMatrix:
    """Projection onto col(A) whose kernel contains a complement of col(A) & col(B) in col(B)."""
    n, F = A.rows, A.field
    CA, CB = _column_basis(A), _column_basis(B)
    r = CA.cols
    if r == 0:
        return FMatrix.zeros(n, n, F)
    basis = CA.T
    extra: list[np.ndarray] = []
    if CB.cols:
        # col(A) & col(B) is the image of the B-part of null([CA | -CB])
        null = m_nullspace(hstack(CA, -CB))
        inter = (CB @ null.submatrix(cols=range(r, r + CB.cols)).T).T if null.rows else FMatrix.zeros(0, n, F)
        cache = RowSpaceCache(inter) if inter.rows else None
        span = inter
        for j in range(CB.cols):
            v = CB.data[:, j]
            if cache is None or not cache.contains(v):
                extra.append(v)
                span = vstack(span, FMatrix(v.reshape(1, -1), F)) if span.rows else FMatrix(v.reshape(1, -1), F)
                cache = RowSpaceCache(span)
    if extra:
        basis = vstack(basis, FMatrix(np.array(extra), F))
    U = _complete_columns(basis.T)
    D = np.zeros((n, n), dtype=np.int64)
    D[range(r), range(r)] = 1
    return U @ FMatrix(D, F) @ m_inverse(U)

"""Minimum distances of CSS, subsystem and classical codes.

Every search here minimizes the weight over ``ker(H)`` minus ``rowspace(G)``:

* CSS ``d_Z``: ``H = H_X``, ``G = H_Z``;
* subsystem ``d_Z``: ``H`` = X stabilizers of the gauge group, ``G = G_Z``;
* classical distance of ``ker H``: ``G`` empty.

The kernel basis is split into a part spanning ``ker(H) & rowspace(G)`` and a logical
complement, so a kernel vector is nontrivial exactly when one of its logical coordinates
is nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as kern
from .fmat import FMatrix, RowSpaceCache, m_inverse, m_nullspace, rref

DEFAULT_BUDGET = 1 << 26
DEFAULT_TRIALS = 100_000
DEFAULT_SEED = 1

INF = math.inf


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int) -> None:
        self.required = required
        self.budget = budget
        super().__init__(f"exhaustive search needs {required} vectors, budget is {budget}")


class WitnessError(AssertionError):
    pass


@dataclass
class DistanceResult:
    value: int | float
    mode: str
    trials: int = 0
    witness: np.ndarray | None = None

    @property
    def finite(self) -> bool:
        return self.value != INF

    def __int__(self) -> int:
        return int(self.value)


@dataclass
class _Split:
    """Kernel basis with the first ``gauge`` rows spanning ``ker H & rowspace G``."""

    basis: FMatrix
    gauge: int
    checks: FMatrix  # rows reading off the logical coordinates

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def logical(self) -> int:
        return self.basis.rows - self.gauge


def _split_kernel(H: FMatrix, G: FMatrix | None) -> _Split:
    F, n = H.field, H.cols
    V = m_nullspace(H)
    if G is None or G.rows == 0 or V.rows == 0:
        W = FMatrix.zeros(0, n, F)
    else:
        # x G lies in ker H exactly when H G^T x^T = 0
        X = m_nullspace(H @ G.T)
        W, wpiv = rref(X @ G) if X.rows else (FMatrix.zeros(0, n, F), [])
    if W.rows and V.rows:
        # W is reduced, so subtracting V[:, pivots] W clears the pivot columns of every row
        residual = (V.data - V.data[:, wpiv] @ W.data) % F.p
        L = rref(FMatrix(residual, F))[0]
    else:
        L = V if not W.rows else FMatrix.zeros(0, n, F)
    rows = list(W.data) + list(L.data)
    basis = FMatrix(np.array(rows, dtype=np.int64).reshape(len(rows), n), F)
    checks = _coordinate_checks(basis, W.rows)
    return _Split(basis, W.rows, checks)


def _coordinate_checks(basis: FMatrix, gauge: int) -> FMatrix:
    """Rows ``T`` with ``T v^T`` equal to the logical coordinates of ``v`` in ``basis``."""
    m, n, F = basis.rows, basis.cols, basis.field
    if m == 0:
        return FMatrix.zeros(0, n, F)
    _, piv = rref(basis)
    Minv = m_inverse(basis.submatrix(cols=piv))
    T = np.zeros((m - gauge, n), dtype=np.int64)
    T[:, piv] = Minv.data[:, gauge:].T
    return FMatrix(T, F)


def _pack(M: FMatrix) -> np.ndarray:
    words = max(1, (M.cols + 63) // 64)
    out = np.zeros((M.rows, words), dtype=np.uint64)
    if M.rows:
        padded = np.zeros((M.rows, words * 64), dtype=np.uint8)
        padded[:, : M.cols] = M.data
        out[:] = np.packbits(padded, axis=1, bitorder="little").view("<u8")
    return out


def _unpack(v: np.ndarray, n: int) -> np.ndarray:
    bits = np.unpackbits(v.astype("<u8").view(np.uint8), bitorder="little")
    return bits[:n].astype(np.int64)


def verify_witness(H: FMatrix, G: FMatrix | None, w: np.ndarray) -> bool:
    """``H w = 0`` and ``w`` is outside ``rowspace(G)``."""
    w = np.asarray(w, dtype=np.int64) % H.p
    if not w.any() or (H.rows and (H.data @ w % H.p).any()):
        return False
    if G is None or G.rows == 0:
        return True
    return not RowSpaceCache(G).contains(w)


def _checked(H: FMatrix, G: FMatrix | None, result: DistanceResult) -> DistanceResult:
    if result.witness is not None:
        w = result.witness
        if int(np.count_nonzero(w)) != result.value or not verify_witness(H, G, w):
            raise WitnessError("search returned an invalid witness")
    return result


def min_weight_outside(
    H: FMatrix,
    G: FMatrix | None,
    budget: int = DEFAULT_BUDGET,
    stop_at: int = 0,
) -> DistanceResult:
    """Exact minimum weight over ``ker H`` minus ``rowspace G`` by exhaustive enumeration.

    ``stop_at`` ends the walk as soon as a vector of that weight or lighter is found; with
    the default 0 the search always completes.
    """
    split = _split_kernel(H, G)
    p, n = H.p, H.cols
    if split.logical == 0:
        return DistanceResult(INF, "exact")
    required = p**split.dim
    if required > budget:
        raise BudgetExceeded(required, budget)
    logical = np.zeros(split.dim, dtype=np.bool_)
    logical[split.gauge :] = True
    if p == 2:
        if split.dim > 62:
            raise BudgetExceeded(required, budget)
        packed = _pack(split.basis)
        found = _weight_ordered_gf2(packed, _pack(split.checks), n, stop_at)
        if found is not None:
            return _checked(H, G, DistanceResult(found[0], "exact", 0, found[1]))
        best, best_i = kern.gray_min_gf2(packed, logical, stop_at)
        g = int(best_i) ^ (int(best_i) >> 1)
        coeffs = np.array([(g >> j) & 1 for j in range(split.dim)], dtype=np.int64)
    else:
        best, coeffs = kern.gray_min_modp(split.basis.data.copy(), p, logical, stop_at)
    witness = coeffs @ split.basis.data % p
    return _checked(H, G, DistanceResult(int(best), "exact", 0, witness))


def _weight_ordered_gf2(packed: np.ndarray, checks: np.ndarray, n: int, stop_at: int) -> tuple[int, np.ndarray] | None:
    """Certified minimum from the information-set search, or None when it would cost more
    than plain enumeration of the span."""
    m = packed.shape[0]
    gens, ranks = kern.information_sets_gf2(packed, n)
    total, level, cost = 1 << m, 0, 0
    while level < m:
        step = len(gens) * math.comb(m, level + 1)
        if cost + step > total:
            break
        cost += step
        level += 1
    if level == 0:
        return None
    best, v, certified = kern.bz_min_gf2(gens, ranks, checks, level, stop_at)
    if not certified or best < 0:
        return None
    return int(best), _unpack(v, n)


def random_min_weight_outside(
    H: FMatrix,
    G: FMatrix | None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    pairs: bool = False,
    start: int = 0,
) -> DistanceResult:
    """Upper bound from information-set trials ``start .. trials-1``.

    Trial ``t`` permutes the columns with a generator seeded by ``(seed, t)`` and reduces
    the kernel basis with pivots taken in that order; the lightest nontrivial reduced row
    (and, with ``pairs``, sum of two rows) is kept.  The result for ``trials`` is the
    minimum over all trials below it, so it never grows with more trials.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    split = _split_kernel(H, G)
    p, n = H.p, H.cols
    if split.logical == 0:
        return DistanceResult(INF, "upper_bound", trials)
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    if p == 2:
        best, v = kern.random_min_gf2(_pack(split.basis), _pack(split.checks), n, np.uint64(seed), start, trials, pairs)
        witness = _unpack(v, n)
    else:
        best, witness = kern.random_min_modp(
            split.basis.data.copy(), split.checks.data.copy(), p, np.uint64(seed), start, trials, pairs
        )
    if best < 0:
        return DistanceResult(INF, "upper_bound", trials)
    return _checked(H, G, DistanceResult(int(best), "upper_bound", trials, witness))


def kernel_dimension(H: FMatrix) -> int:
    return H.cols - rref(H)[0].rows if H.rows else H.cols


def exact_dZ(H_X: FMatrix, H_Z: FMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    return min_weight_outside(H_X, H_Z, budget)


def exact_dX(H_X: FMatrix, H_Z: FMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    return min_weight_outside(H_Z, H_X, budget)


def random_dZ_upper(
    H_X: FMatrix, H_Z: FMatrix, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, pairs: bool = False
) -> DistanceResult:
    return random_min_weight_outside(H_X, H_Z, trials, seed, pairs)


def random_dX_upper(
    H_X: FMatrix, H_Z: FMatrix, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, pairs: bool = False
) -> DistanceResult:
    return random_min_weight_outside(H_Z, H_X, trials, seed, pairs)


def classical_dual_distance(H: FMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Minimum weight of a nonzero vector in ``ker H``."""
    return min_weight_outside(H, None, budget)


def subsystem_stabilizer(G_X: FMatrix, G_Z: FMatrix) -> FMatrix:
    """Rows spanning the X-gauge operators that commute with every Z-gauge row."""
    Y = m_nullspace(G_Z @ G_X.T)
    return Y @ G_X if Y.rows else FMatrix.zeros(0, G_X.cols, G_X.field)


def subsystem_dZ(G_X: FMatrix, G_Z: FMatrix, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Z distance of the subsystem code ``CSS(G_X, G_Z)``.

    Dressed operators are minimized: vectors orthogonal to the X stabilizer group (not
    necessarily to every X-gauge row) that are not Z-gauge operators.  When the gauge
    matrices are orthogonal this is the ordinary CSS distance.
    """
    return min_weight_outside(subsystem_stabilizer(G_X, G_Z), G_Z, budget)


def css_distance(
    H_X: FMatrix,
    H_Z: FMatrix,
    budget: int = DEFAULT_BUDGET,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> tuple[DistanceResult, DistanceResult]:
    """``(d_X, d_Z)``: exact when the kernels fit the budget, randomized otherwise."""
    out = []
    for H, G in ((H_Z, H_X), (H_X, H_Z)):
        if H.p ** kernel_dimension(H) <= budget:
            out.append(min_weight_outside(H, G, budget))
        else:
            out.append(random_min_weight_outside(H, G, trials, seed))
    return out[0], out[1]

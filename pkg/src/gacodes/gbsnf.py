"""Generalized-bicycle dimensions and Smith normal forms over GF(p)[x].

A cyclic group algebra is ``F[x]/(x^l - 1)``, so codes over cyclic groups reduce to
polynomial gcds, and quasi-cyclic lifted products reduce to the invariant factors of
their polynomial matrices.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .algebra import AlgebraElement
from .gf import PrimeField
from .twoblock import TwoBlockCode


class BothZero(ValueError):
    pass


class Poly:
    """Polynomial over GF(p), coefficients lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[int], field: PrimeField) -> None:
        c = [int(v) % field.p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.field = field

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls((), field)

    @classmethod
    def one(cls, field: PrimeField) -> Poly:
        return cls((1,), field)

    @classmethod
    def monomial(cls, deg: int, field: PrimeField, c: int = 1) -> Poly:
        return cls([0] * deg + [c], field)

    @classmethod
    def x_pow_minus_one(cls, ell: int, field: PrimeField) -> Poly:
        return cls([-1] + [0] * (ell - 1) + [1], field)

    @property
    def deg(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"

    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms)

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.field)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs], self.field)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out, self.field)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        p = F.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        q = [0] * (dq + 1)
        inv = F.inv(other.lead)
        ob = other.coeffs
        for s in range(dq, -1, -1):
            c = rem[s + len(ob) - 1] * inv % p
            if c:
                q[s] = c
                for i, v in enumerate(ob):
                    rem[s + i] = (rem[s + i] - c * v) % p
        return Poly(q, F), Poly(rem, F)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * self.field.inv(self.lead)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_gcd_many(*polys: Poly) -> Poly:
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise BothZero("gcd of zero polynomials is undefined")
    out = nonzero[0]
    for p in nonzero[1:]:
        out = poly_gcd(out, p)
    return out.monic()


def gb_dimension(a: Poly, b: Poly, ell: int) -> int:
    """``2 deg gcd(a, b, x^l - 1)``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return 2 * poly_gcd_many(a, b, Poly.x_pow_minus_one(ell, a.field)).deg


class PolyMatrix:
    """Dense matrix with :class:`Poly` entries."""

    __slots__ = ("entries", "field", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[Poly]], field: PrimeField, cols: int | None = None) -> None:
        self.entries = [list(r) for r in entries]
        self.field = field
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged polynomial matrix")

    @classmethod
    def identity(cls, n: int, field: PrimeField) -> PolyMatrix:
        return cls([[Poly.one(field) if i == j else Poly.zero(field) for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField) -> PolyMatrix:
        return cls([[Poly.zero(field) for _ in range(cols)] for _ in range(rows)], field, cols)

    @classmethod
    def from_coeffs(cls, data: Sequence[Sequence[Sequence[int]]], field: PrimeField) -> PolyMatrix:
        return cls([[Poly(c, field) for c in row] for row in data], field)

    def copy(self) -> PolyMatrix:
        return PolyMatrix([list(r) for r in self.entries], self.field, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        F = self.field
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Poly.zero(F)
                for t in range(self.cols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, F, other.cols)

    def diagonal(self) -> list[Poly]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(self.rows) for j in range(self.cols) if i != j)


def poly_snf(M: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix, PolyMatrix]:
    """Smith normal form ``M = U D V``.

    Pivots are the lowest-degree nonzero entries (row-major on ties).  Every elementary
    operation applied to ``D`` has its inverse folded into ``U`` or ``V``, so both stay
    products of elementary matrices.  Invariant factors are monic and each divides the next.
    """
    F = M.field
    D = M.copy()
    r, c = D.rows, D.cols
    U = PolyMatrix.identity(r, F)
    V = PolyMatrix.identity(c, F)
    d, u, v = D.entries, U.entries, V.entries

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        v[i], v[j] = v[j], v[i]

    def add_row(dst: int, src: int, q: Poly) -> None:
        # row_dst += q row_src; U <- U (I - q e_dst,src)
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        for row in u:
            row[src] = row[src] - row[dst] * q

    def add_col(dst: int, src: int, q: Poly) -> None:
        # col_dst += q col_src; V <- (I - q e_src,dst) V
        for row in d:
            row[dst] = row[dst] + q * row[src]
        v[src] = [x - q * y for x, y in zip(v[src], v[dst])]

    def scale_row(i: int, s: int) -> None:
        d[i] = [x * s for x in d[i]]
        inv = F.inv(s)
        for row in u:
            row[i] = row[i] * inv

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    e = d[i][j]
                    if not e.is_zero() and (best is None or e.deg < best[0]):
                        best = (e.deg, i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            piv = d[t][t]
            dirty = False
            for i in range(t + 1, r):
                if not d[i][t].is_zero():
                    q, rem = divmod(d[i][t], piv)
                    add_row(i, t, -q)
                    dirty |= not rem.is_zero()
            for j in range(t + 1, c):
                if not d[t][j].is_zero():
                    q, rem = divmod(d[t][j], piv)
                    add_col(j, t, -q)
                    dirty |= not rem.is_zero()
            if dirty:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if not (d[i][j] % piv).is_zero()),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], Poly.one(F))
        if d[t][t].is_zero():
            break
        lead = d[t][t].lead
        if lead != 1:
            scale_row(t, F.inv(lead))
    return U, D, V


def snf_invariants(M: PolyMatrix) -> list[Poly]:
    return poly_snf(M)[1].diagonal()


def qc_lp_dimension(A: PolyMatrix, B: PolyMatrix, ell: int) -> int:
    """Dimension of the quasi-cyclic lifted product of ``A`` and ``B`` over ``F[x]/(x^l - 1)``.

    After Smith normal form each matrix is a direct sum of ``1x1`` blocks ``[a_i]`` plus
    surplus zero rows or columns, and the code splits into pairwise products: two
    ``1x1`` blocks give a GB code, a ``1x1`` block against a surplus line leaves
    ``deg gcd(a_i, x^l - 1)`` qudits, and a surplus row against a surplus column leaves ``l``.
    """
    F = A.field
    mod = Poly.x_pow_minus_one(ell, F)

    def pieces(M: PolyMatrix) -> tuple[list[Poly], int, int]:
        m = min(M.rows, M.cols)
        diag = poly_snf(M)[1].diagonal() if m else []
        return diag, M.rows - m, M.cols - m

    da, zr_a, zc_a = pieces(A)
    db, zr_b, zc_b = pieces(B)
    k = 0
    for a in da:
        for b in db:
            k += 2 * poly_gcd_many(a, b, mod).deg
    for a in da:
        k += poly_gcd_many(a, mod).deg * (zr_b + zc_b)
    for b in db:
        k += poly_gcd_many(b, mod).deg * (zr_a + zc_a)
    k += ell * (zr_a * zc_b + zc_a * zr_b)
    return k


def poly_from_cyclic(e: AlgebraElement, generator: int) -> Poly:
    """Image of ``e`` in ``F[x]/(x^l - 1)`` with ``x`` mapped to ``generator``."""
    G = e.group
    coeffs = [0] * G.order
    g = 0
    for i in range(G.order):
        coeffs[i] = e.coeffs.get(g, 0)
        g = int(G.mul[g, generator])
    return Poly(coeffs, e.field)


def gb_view(code: TwoBlockCode) -> tuple[Poly, Poly, int] | None:
    """``(a(x), b(x), l)`` when the code's group is cyclic, else ``None``."""
    g = code.group.cyclic_generator()
    if g is None:
        return None
    return poly_from_cyclic(code.a, g), poly_from_cyclic(code.b, g), code.ell

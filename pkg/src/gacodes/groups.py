"""Finite groups as explicit multiplication tables.

Element ``0`` is always the identity.  Elements carry a canonical word (used for
display and serialization) and generators carry names used by the element parser.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

import numpy as np

ASSOCIATIVITY_EXHAUSTIVE_MAX = 64
PERMUTATION_CLOSURE_CAP = 1024


class GroupError(ValueError):
    pass


class InvalidOrder(GroupError):
    pass


class BadTwist(GroupError):
    pass


class ClosureTooLarge(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class NotAGroup(GroupError):
    """Raised by table validation; ``axiom`` names the violated property."""

    def __init__(self, axiom: str, detail: str = "") -> None:
        self.axiom = axiom
        super().__init__(f"NotAGroup({axiom})" + (f": {detail}" if detail else ""))


class GroupTable:
    """A finite group given by its Cayley table.

    ``mul[g, h]`` is the index of ``g*h``.  ``gen_names`` maps names (several names may
    share an element, e.g. ``x`` and ``r`` in a cyclic group) to element indices.
    """

    def __init__(
        self,
        mul: np.ndarray,
        gen_names: Sequence[tuple[str, int]] = (),
        elem_words: Sequence[str] | None = None,
        name: str = "",
    ) -> None:
        mul = np.ascontiguousarray(mul, dtype=np.int64)
        mul.setflags(write=False)
        self.mul = mul
        self.order = int(mul.shape[0])
        inv = np.empty(self.order, dtype=np.int64)
        rows, cols = np.nonzero(mul == 0)
        inv[rows] = cols
        inv.setflags(write=False)
        self.inv = inv
        self.id = 0
        self.gen_names = [(str(n), int(g)) for n, g in gen_names]
        self.elem_words = list(elem_words) if elem_words is not None else _default_words(self.order)
        self.name = name

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<GroupTable {label} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self is other or (
            self.order == other.order and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.mul[: min(self.order, 8)].tobytes()))

    # element helpers

    def m(self, g: int, h: int) -> int:
        return int(self.mul[g, h])

    def product(self, *elems: int) -> int:
        out = 0
        for g in elems:
            out = int(self.mul[out, g])
        return out

    def power(self, g: int, e: int) -> int:
        if e < 0:
            g, e = int(self.inv[g]), -e
        out = 0
        for _ in range(e):
            out = int(self.mul[out, g])
        return out

    def element_order(self, g: int) -> int:
        k, h = 1, g
        while h != 0:
            h = int(self.mul[h, g])
            k += 1
        return k

    def generator(self, name: str) -> int:
        for n, g in self.gen_names:
            if n == name:
                return g
        raise KeyError(name)

    @property
    def generator_indices(self) -> list[int]:
        seen: list[int] = []
        for _, g in self.gen_names:
            if g not in seen:
                seen.append(g)
        return seen

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def cyclic_generator(self) -> int | None:
        """Smallest-index element of order ``|G|``, or None if the group is not cyclic."""
        for g in range(self.order):
            if self.element_order(g) == self.order:
                return g
        return None

    def is_cyclic(self) -> bool:
        return self.cyclic_generator() is not None

    def word(self, g: int) -> str:
        return self.elem_words[g]


def _default_words(order: int) -> list[str]:
    return ["1"] + [f"g{i}" for i in range(1, order)]


def _power_word(name: str, e: int) -> str:
    if e == 0:
        return "1"
    return name if e == 1 else f"{name}^{e}"


def _join_words(parts: Iterable[str]) -> str:
    parts = [p for p in parts if p != "1"]
    return "*".join(parts) if parts else "1"


# validation


def validate_table(mul: np.ndarray, rng_seed: int = 0) -> None:
    mul = np.asarray(mul)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] < 1:
        raise NotAGroup("Shape", "table must be a non-empty square array")
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        raise NotAGroup("Closure", "entries must be indices in [0, order)")
    target = np.arange(n)
    if not all(np.array_equal(np.sort(mul[i]), target) for i in range(n)) or not all(
        np.array_equal(np.sort(mul[:, j]), target) for j in range(n)
    ):
        raise NotAGroup("LatinSquare", "some row or column repeats an element")
    if not (np.array_equal(mul[0], target) and np.array_equal(mul[:, 0], target)):
        raise NotAGroup("Identity", "element 0 must be a two-sided identity")
    if n <= ASSOCIATIVITY_EXHAUSTIVE_MAX:
        left = mul[mul[:, :, None], np.arange(n)[None, None, :]]  # (ab)c
        right = mul[np.arange(n)[:, None, None], mul[None, :, :]]  # a(bc)
        if not np.array_equal(left, right):
            raise NotAGroup("Associativity")
    else:
        rng = np.random.default_rng(rng_seed)
        a, b, c = rng.integers(0, n, size=(3, 10 * n * n))
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise NotAGroup("Associativity")


def group_from_table(raw: Sequence[Sequence[int]] | np.ndarray, name: str = "") -> GroupTable:
    mul = np.asarray(raw, dtype=np.int64)
    validate_table(mul)
    return GroupTable(mul, name=name)


def read_group_table(path: str) -> GroupTable:
    """Read the plain-text table format: order on the first line, then rows."""
    with open(path, encoding="utf-8") as fh:
        tokens = fh.read().split()
    if not tokens:
        raise NotAGroup("Shape", "empty table file")
    n = int(tokens[0])
    body = [int(t) for t in tokens[1:]]
    if len(body) != n * n:
        raise NotAGroup("Shape", f"expected {n * n} entries, found {len(body)}")
    return group_from_table(np.array(body).reshape(n, n), name=f"table:{path}")


# constructors


def group_cyclic(order: int) -> GroupTable:
    if order < 1:
        raise InvalidOrder(f"cyclic group order must be >= 1, got {order}")
    idx = np.arange(order)
    mul = (idx[:, None] + idx[None, :]) % order
    names = [("x", 1 % order), ("r", 1 % order)] if order > 1 else []
    words = [_power_word("x", i) for i in range(order)]
    return GroupTable(mul, names, words, name=f"C{order}")


def group_metacyclic(m: int, n: int, t: int, name: str | None = None) -> GroupTable:
    """``<r, s | r^m = s^n = 1, s^-1 r s = r^t>``; element ``s^j r^i`` has index ``j*m + i``."""
    if m < 1 or n < 1:
        raise InvalidOrder(f"metacyclic parameters must be >= 1, got m={m}, n={n}")
    if pow(t, n, m) != 1 % m:
        raise BadTwist(f"{t}^{n} is not 1 mod {m}")
    tp = [pow(t, j, m) for j in range(n)]
    i = np.arange(m)
    j = np.arange(n)
    # (s^j1 r^i1)(s^j2 r^i2) = s^(j1+j2) r^(i1 t^j2 + i2)
    i1 = i[None, :, None, None]
    j1 = j[:, None, None, None]
    i2 = i[None, None, None, :]
    j2 = j[None, None, :, None]
    tpow = np.array(tp)[j2]
    jj = (j1 + j2) % n
    ii = (i1 * tpow + i2) % m
    mul = (jj * m + ii).reshape(m * n, m * n)
    names: list[tuple[str, int]] = []
    if m > 1:
        names.append(("r", 1))
    if n > 1:
        names.append(("s", m))
    words = [
        _join_words([_power_word("s", jv), _power_word("r", iv)]) for jv in range(n) for iv in range(m)
    ]
    return GroupTable(mul, names, words, name=name or f"M({m},{n},{t})")


def group_dihedral(m: int) -> GroupTable:
    """Dihedral group of order ``2m`` with ``r^m = s^2 = 1``, ``srs = r^-1``."""
    if m < 1:
        raise InvalidOrder(f"dihedral parameter must be >= 1, got {m}")
    return group_metacyclic(m, 2, m - 1 if m > 1 else 0, name=f"D{m}")


Permutation = tuple[int, ...]


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation such as ``(1,2,3)(4,5)`` into a 0-based image tuple."""
    text = text.strip()
    cycles = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise ValueError(f"bad cycle notation: {text!r}")
    cyc_lists = [[int(p) for p in c.replace(" ", "").split(",") if p] for c in cycles]
    top = max([p for c in cyc_lists for p in c], default=0)
    deg = max(degree or 0, top)
    image = list(range(deg))
    seen: set[int] = set()
    for cyc in cyc_lists:
        for k, p in enumerate(cyc):
            if p < 1 or p in seen:
                raise ValueError(f"bad cycle notation: {text!r}")
            seen.add(p)
            image[p - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(image)


def group_from_permutations(
    degree: int,
    gens: Sequence[Sequence[int] | str],
    names: Sequence[str] | None = None,
    cap: int = PERMUTATION_CLOSURE_CAP,
) -> GroupTable:
    """Closure of permutation generators.

    Generators are 0-based image sequences or 1-based cycle strings.  Products act
    left to right (``g*h`` applies ``g`` first).  Elements are numbered in breadth-first
    order from the identity, expanding generators in the given order.
    """
    perms: list[Permutation] = []
    for g in gens:
        p = parse_cycles(g, degree) if isinstance(g, str) else tuple(int(v) for v in g)
        if len(p) < degree:
            p = p + tuple(range(len(p), degree))
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation: {g!r}")
        perms.append(p)
    deg = max([degree] + [len(p) for p in perms])
    perms = [p + tuple(range(len(p), deg)) for p in perms]
    gen_labels = list(names) if names is not None else [f"g{i + 1}" for i in range(len(perms))]
    if len(gen_labels) != len(perms):
        raise ValueError("one name per generator required")

    ident: Permutation = tuple(range(deg))
    elements: list[Permutation] = [ident]
    index = {ident: 0}
    words: list[list[str]] = [[]]
    head = 0
    while head < len(elements):
        cur = elements[head]
        for gi, g in enumerate(perms):
            nxt = tuple(g[cur[i]] for i in range(deg))
            if nxt not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"closure exceeds {cap} elements")
                index[nxt] = len(elements)
                elements.append(nxt)
                words.append(words[head] + [gen_labels[gi]])
        head += 1

    n = len(elements)
    arr = np.array(elements, dtype=np.int64).reshape(n, deg)
    mul = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        composed = arr[:, arr[a]] if deg else arr  # row b: apply a then b
        for b in range(n):
            mul[a, b] = index[tuple(composed[b])]
    gen_names = [(gen_labels[i], index[p]) for i, p in enumerate(perms)]
    return GroupTable(mul, gen_names, [_compress_word(w) for w in words], name="perm")


def _compress_word(letters: list[str]) -> str:
    if not letters:
        return "1"
    out: list[str] = []
    prev, count = letters[0], 1
    for c in letters[1:]:
        if c == prev:
            count += 1
        else:
            out.append(_power_word(prev, count))
            prev, count = c, 1
    out.append(_power_word(prev, count))
    return "*".join(out)


def group_direct_product(*factors: GroupTable) -> GroupTable:
    """Direct product; ``(g, h)`` has index ``g*|H| + h`` (extended row-major for more factors).

    Generator names that clash between factors get a numeric suffix per factor position,
    e.g. ``C4xC2`` has generators ``x1`` and ``x2``.
    """
    if not factors:
        return group_cyclic(1)
    mul = factors[0].mul
    for H in factors[1:]:
        lg, lh = mul.shape[0], H.order
        mul = (mul[:, None, :, None] * lh + H.mul[None, :, None, :]).reshape(lg * lh, lg * lh)

    counts: dict[str, int] = {}
    for f in factors:
        for nm in {n for n, _ in f.gen_names}:
            counts[nm] = counts.get(nm, 0) + 1
    occurrence: dict[str, int] = {}
    sizes = [f.order for f in factors]
    strides = [int(np.prod(sizes[i + 1 :])) for i in range(len(sizes))]
    names: list[tuple[str, int]] = []
    renames: list[dict[str, str]] = []
    for pos, f in enumerate(factors):
        local: dict[str, str] = {}
        for nm in dict.fromkeys(n for n, _ in f.gen_names):
            if counts[nm] > 1:
                occurrence[nm] = occurrence.get(nm, 0) + 1
                local[nm] = f"{nm}{occurrence[nm]}"
            else:
                local[nm] = nm
        names.extend((local[nm], g * strides[pos]) for nm, g in f.gen_names)
        renames.append(local)

    words = []
    for idx in range(mul.shape[0]):
        parts = []
        rem = idx
        for pos, f in enumerate(factors):
            g, rem = divmod(rem, strides[pos])
            parts.append(_rename_word(f.elem_words[g], renames[pos]))
        words.append(_join_words(parts))
    label = "x".join(f.name or "?" for f in factors)
    return GroupTable(mul, names, words, name=label)


def _rename_word(word: str, rename: dict[str, str]) -> str:
    if word == "1" or not rename:
        return word
    out = []
    for factor in word.split("*"):
        base, _, exp = factor.partition("^")
        base = rename.get(base, base)
        out.append(f"{base}^{exp}" if exp else base)
    return "*".join(out)


# subgroups and cosets


def subgroup_generated(G: GroupTable, S: Iterable[int]) -> frozenset[int]:
    gens = sorted({int(s) for s in S} - {0})
    for s in gens:
        if not 0 <= s < G.order:
            raise IndexError(f"element {s} out of range")
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                g = int(G.mul[h, s])
                if g not in found:
                    found.add(g)
                    nxt.append(g)
        frontier = nxt
    return frozenset(found)


def is_subgroup(G: GroupTable, H: Iterable[int]) -> bool:
    H = set(H)
    if 0 not in H:
        return False
    idx = np.fromiter(H, dtype=np.int64)
    return set(G.mul[np.ix_(idx, idx)].ravel().tolist()) <= H


def is_normal(G: GroupTable, N: Iterable[int], within: Iterable[int] | None = None) -> bool:
    """Whether ``N`` is normal in ``within`` (default: all of ``G``)."""
    N = set(N)
    conj = range(G.order) if within is None else within
    for g in conj:
        gi = int(G.inv[g])
        for n in N:
            if int(G.mul[G.mul[gi, n], g]) not in N:
                return False
    return True


def is_abelian_subset(G: GroupTable, S: Iterable[int]) -> bool:
    idx = np.fromiter(set(S), dtype=np.int64)
    sub = G.mul[np.ix_(idx, idx)]
    return bool(np.array_equal(sub, sub.T))


def double_cosets(G: GroupTable, Ha: Iterable[int], Hb: Iterable[int]) -> list[tuple[int, ...]]:
    """Partition of ``G`` into double cosets ``Ha x Hb``, the identity's coset first."""
    Ha, Hb = frozenset(Ha), frozenset(Hb)
    for H in (Ha, Hb):
        if not is_subgroup(G, H):
            raise NotASubgroup(f"{sorted(H)} is not closed under multiplication")
    a = np.fromiter(Ha, dtype=np.int64)
    b = np.fromiter(Hb, dtype=np.int64)
    assigned = np.full(G.order, -1, dtype=np.int64)
    cosets: list[tuple[int, ...]] = []
    for x in range(G.order):
        if assigned[x] >= 0:
            continue
        block = np.unique(G.mul[G.mul[a, x][:, None], b[None, :]])
        assigned[block] = len(cosets)
        cosets.append(tuple(int(v) for v in block))
    return cosets


def centralizer(G: GroupTable, S: Iterable[int]) -> frozenset[int]:
    s = np.fromiter(set(S), dtype=np.int64)
    if s.size == 0:
        return frozenset(range(G.order))
    commute = np.all(G.mul[:, s] == G.mul[s, :].T, axis=1)
    return frozenset(int(g) for g in np.nonzero(commute)[0])


def center(G: GroupTable) -> frozenset[int]:
    return centralizer(G, range(G.order))

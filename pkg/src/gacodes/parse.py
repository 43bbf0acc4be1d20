"""Text grammars for groups and group-algebra elements.

Group specs::

    spec := factor ("x" factor)*
    factor := "C" int | "D" int | "M(" m "," n "," t ")" | "perm:" gens | "table:" path

``perm:`` and ``table:`` consume the rest of the string.  Permutation generators are
separated by ``;`` and may be named, e.g. ``perm:x=(1,2,3);y=(1,2)(3,4)``.

Elements follow the notation of published code tables: ``1 + r^28``, ``1 + s*r^4``,
``1+x+s+x^2+sx+sx^3`` (juxtaposed factors multiply), ``2*x^-1`` for coefficients.
"""

from __future__ import annotations

import re
from collections.abc import Mapping

from .algebra import AlgebraElement
from .gf import PrimeField
from .groups import (
    GroupTable,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_from_permutations,
    group_metacyclic,
    read_group_table,
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0) -> None:
        self.text = text
        self.pos = pos
        where = f" at position {pos} in {text!r}" if text else ""
        super().__init__(message + where)


class UnknownGenerator(ParseError):
    pass


_FACTOR = re.compile(r"\s*(C(\d+)|D(\d+)|M\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(-?\d+)\s*\))\s*")


def parse_group_spec(spec: str) -> GroupTable:
    text = spec.strip()
    factors: list[GroupTable] = []
    pos = 0
    while True:
        rest = text[pos:].lstrip()
        offset = len(text) - len(rest)
        if rest.startswith("perm:"):
            factors.append(_parse_perm(rest[5:], text, offset + 5))
            break
        if rest.startswith("table:"):
            path = rest[6:].strip()
            if not path:
                raise ParseError("missing table path", text, offset + 6)
            factors.append(read_group_table(path))
            break
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError("expected C<n>, D<m>, M(m,n,t), perm: or table:", text, pos)
        if m.group(2):
            factors.append(group_cyclic(int(m.group(2))))
        elif m.group(3):
            factors.append(group_dihedral(int(m.group(3))))
        else:
            mm, nn, tt = (int(m.group(i)) for i in (4, 5, 6))
            factors.append(group_metacyclic(mm, nn, tt % mm if mm else tt))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "x":
            raise ParseError("expected 'x' between factors", text, pos)
        pos += 1
    G = factors[0] if len(factors) == 1 else group_direct_product(*factors)
    G.name = text
    return G


def _parse_perm(body: str, text: str, offset: int) -> GroupTable:
    gens: list[str] = []
    names: list[str] = []
    for k, piece in enumerate(p.strip() for p in body.split(";")):
        if not piece:
            continue
        name, eq, cycles = piece.partition("=")
        if not eq:
            name, cycles = f"g{k + 1}", piece
        name = name.strip()
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise ParseError(f"bad generator name {name!r}", text, offset)
        gens.append(cycles.strip())
        names.append(name)
    try:
        degree = max([int(v) for c in gens for v in re.findall(r"\d+", c)], default=0)
        return group_from_permutations(degree, gens, names)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), text, offset) from exc


def parse_algebra_elem(
    s: str,
    G: GroupTable,
    F: PrimeField,
    aliases: Mapping[str, str] | None = None,
) -> AlgebraElement:
    """Parse a sum of terms into an element of F[G].

    ``aliases`` renames generators appearing in ``s`` to generator names of ``G``.
    """
    base = {n: g for n, g in G.gen_names}
    names = dict(base)
    for src, dst in (aliases or {}).items():
        if dst not in base:
            raise UnknownGenerator(f"alias target {dst!r} is not a generator of {G.name or 'G'}")
        names[src] = base[dst]
    by_length = sorted(names, key=len, reverse=True)
    text = s
    pos = 0
    n = len(text)
    coeffs: dict[int, int] = {}

    def skip() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int | None:
        nonlocal pos
        skip()
        m = re.compile(r"[+-]?\d+").match(text, pos)
        if not m:
            return None
        pos = m.end()
        return int(m.group())

    def read_exponent() -> int:
        nonlocal pos
        skip()
        if pos < n and text[pos] in "{(":
            close = "}" if text[pos] == "{" else ")"
            pos += 1
            e = read_int()
            skip()
            if e is None or pos >= n or text[pos] != close:
                raise ParseError("bad exponent", text, pos)
            pos += 1
            return e
        e = read_int()
        if e is None:
            raise ParseError("expected exponent", text, pos)
        return e

    def read_factor() -> int | None:
        nonlocal pos
        skip()
        if pos >= n:
            return None
        for name in by_length:
            if text.startswith(name, pos):
                pos += len(name)
                g = names[name]
                skip()
                if pos < n and text[pos] == "^":
                    pos += 1
                    g = G.power(g, read_exponent())
                return g
        if text[pos].isalpha():
            m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(text, pos)
            raise UnknownGenerator(f"unknown generator {m.group() if m else text[pos]!r}", text, pos)
        return None

    def read_word(first: int | None) -> int:
        nonlocal pos
        g = 0 if first is None else first
        while True:
            skip()
            if pos < n and text[pos] == "*":
                pos += 1
                skip()
                if pos < n and text[pos] == "1" and (pos + 1 == n or not text[pos + 1].isdigit()):
                    pos += 1
                    continue
                f = read_factor()
                if f is None:
                    raise ParseError("expected generator after '*'", text, pos)
                g = G.m(g, f)
                continue
            f = read_factor()
            if f is None:
                return g
            g = G.m(g, f)

    skip()
    if pos == n:
        raise ParseError("empty element", text, pos)
    sign = 1
    while True:
        skip()
        coeff = 1
        start = pos
        m = re.compile(r"\d+").match(text, pos)
        if m:
            coeff = int(m.group())
            pos = m.end()
            skip()
            if pos < n and text[pos] == "*":
                pos += 1
                first = read_factor()
                if first is None:
                    raise ParseError("expected generator after coefficient", text, pos)
                g = read_word(first)
            else:
                g = read_word(None)
        else:
            first = read_factor()
            if first is None:
                raise ParseError("expected term", text, start)
            g = read_word(first)
        coeffs[g] = coeffs.get(g, 0) + sign * coeff
        skip()
        if pos == n:
            break
        if text[pos] == "+":
            sign = 1
        elif text[pos] == "-":
            sign = -1
        else:
            raise ParseError("expected '+' or '-'", text, pos)
        pos += 1
    return AlgebraElement(G, F, coeffs)

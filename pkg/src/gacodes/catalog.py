"""Constructor specs for every group of order at most 16, one per isomorphism class.

Split metacyclic groups use ``M(m,n,t)``.  The quaternion groups, the Pauli group and
``C2^2 : C4`` are not split metacyclic, so they are given by regular (or small faithful)
permutation representations.
"""

from __future__ import annotations

from typing import NamedTuple

_Q8 = "perm:x=(1,2,8,7)(3,4,6,5);y=(1,6,8,3)(2,4,7,5)"
_Q16 = (
    "perm:x=(1,2,4,14,16,15,13,3)(5,6,8,10,12,11,9,7);"
    "y=(1,12,16,5)(2,10,15,7)(3,11,14,6)(4,8,13,9)"
)
_PAULI = (
    "perm:x=(1,5)(2,11)(3,7)(4,9)(6,15)(8,13)(10,14)(12,16);"
    "z=(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16);"
    "w=(1,3,16,14)(2,4,15,13)(5,7,12,10)(6,8,11,9)"
)
_C2SQ_C4 = "perm:x=(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16);y=(1,2,3,4)(5,10,7,12)(6,11,8,9)(13,14,15,16)"
_A4 = "perm:x=(1,2,3);y=(1,2)(3,4)"


class SmallGroup(NamedTuple):
    order: int
    label: str
    spec: str


SMALL_GROUPS: tuple[SmallGroup, ...] = (
    SmallGroup(2, "C2", "C2"),
    SmallGroup(3, "C3", "C3"),
    SmallGroup(4, "C4", "C4"),
    SmallGroup(4, "C2xC2", "C2xC2"),
    SmallGroup(5, "C5", "C5"),
    SmallGroup(6, "C6", "C6"),
    SmallGroup(6, "S3", "D3"),
    SmallGroup(7, "C7", "C7"),
    SmallGroup(8, "C8", "C8"),
    SmallGroup(8, "C4xC2", "C4xC2"),
    SmallGroup(8, "C2^3", "C2xC2xC2"),
    SmallGroup(8, "D4", "D4"),
    SmallGroup(8, "Q8", _Q8),
    SmallGroup(9, "C9", "C9"),
    SmallGroup(9, "C3xC3", "C3xC3"),
    SmallGroup(10, "C10", "C10"),
    SmallGroup(10, "D5", "D5"),
    SmallGroup(11, "C11", "C11"),
    SmallGroup(12, "C12", "C12"),
    SmallGroup(12, "C6xC2", "C6xC2"),
    SmallGroup(12, "D6", "D6"),
    SmallGroup(12, "A4", _A4),
    SmallGroup(12, "C3:C4", "M(3,4,2)"),
    SmallGroup(13, "C13", "C13"),
    SmallGroup(14, "C14", "C14"),
    SmallGroup(14, "D7", "D7"),
    SmallGroup(15, "C15", "C15"),
    SmallGroup(16, "C16", "C16"),
    SmallGroup(16, "C4xC4", "C4xC4"),
    SmallGroup(16, "C8xC2", "C8xC2"),
    SmallGroup(16, "C4xC2xC2", "C4xC2xC2"),
    SmallGroup(16, "C2^4", "C2xC2xC2xC2"),
    SmallGroup(16, "D8", "D8"),
    SmallGroup(16, "SD16", "M(8,2,3)"),
    SmallGroup(16, "M16", "M(8,2,5)"),
    SmallGroup(16, "C4:C4", "M(4,4,3)"),
    SmallGroup(16, "D4xC2", "D4xC2"),
    SmallGroup(16, "Q8xC2", "C2x" + _Q8),
    SmallGroup(16, "Q16", _Q16),
    SmallGroup(16, "Pauli", _PAULI),
    SmallGroup(16, "C2^2:C4", _C2SQ_C4),
)


def small_group_specs(max_order: int = 16, min_order: int = 2) -> list[SmallGroup]:
    if max_order > 16:
        raise ValueError("the catalog stops at order 16")
    return [g for g in SMALL_GROUPS if min_order <= g.order <= max_order]

from __future__ import annotations

from collections import Counter

import pytest

from gacodes.catalog import SMALL_GROUPS, small_group_specs
from gacodes.groups import center, subgroup_generated
from gacodes.parse import parse_group_spec

# number of isomorphism classes of groups of each order (OEIS A000001)
GROUP_COUNTS = {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


def fingerprint(G):
    orders = tuple(sorted(Counter(G.element_order(g) for g in range(G.order)).items()))
    commutators = {G.product(int(G.inv[g]), int(G.inv[h]), g, h) for g in range(G.order) for h in range(G.order)}
    derived = subgroup_generated(G, commutators)
    squares = {G.m(g, g) for g in range(G.order)}
    return (orders, len(center(G)), len(derived), len(squares))


def test_catalog_counts_match_known_enumeration():
    per_order = Counter(g.order for g in SMALL_GROUPS)
    assert dict(per_order) == GROUP_COUNTS
    assert len({g.label for g in SMALL_GROUPS}) == len(SMALL_GROUPS)


@pytest.mark.parametrize("order", sorted(GROUP_COUNTS))
def test_catalog_classes_are_distinct(order):
    entries = [g for g in SMALL_GROUPS if g.order == order]
    prints = []
    for entry in entries:
        G = parse_group_spec(entry.spec)
        assert G.order == order, entry
        prints.append(fingerprint(G))
    assert len(set(prints)) == len(prints)


def test_nonabelian_members():
    nonabelian = {g.label for g in SMALL_GROUPS if not parse_group_spec(g.spec).is_abelian()}
    assert nonabelian == {"S3", "D4", "Q8", "D5", "D6", "A4", "C3:C4", "D7", "D8", "SD16", "M16", "C4:C4",
                          "D4xC2", "Q8xC2", "Q16", "Pauli", "C2^2:C4"}


def test_quaternion_has_one_involution():
    Q8 = parse_group_spec(next(g.spec for g in SMALL_GROUPS if g.label == "Q8"))
    assert sum(Q8.element_order(g) == 2 for g in range(8)) == 1


def test_spec_selection():
    specs = small_group_specs(8, 8)
    assert [s.label for s in specs] == ["C8", "C4xC2", "C2^3", "D4", "Q8"]
    assert len(small_group_specs()) == 41
    with pytest.raises(ValueError):
        small_group_specs(17)

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gacodes.algebra import AlgebraElement, MixedContext, support_group
from gacodes.distance import DEFAULT_BUDGET, exact_dX, exact_dZ, kernel_dimension
from gacodes.fmat import DimensionMismatch, FMatrix, m_rank
from gacodes.gf import gf_new
from gacodes.groups import centralizer, double_cosets, group_cyclic, group_dihedral
from gacodes.parse import parse_algebra_elem, parse_group_spec
from gacodes.twoblock import (
    TRANSFORM_KINDS,
    CodeReport,
    InvalidTransform,
    TwoBlockCode,
    build,
    canonical_element,
    canonical_pair,
    components,
    css_dimension,
    dimension,
    is_connected,
    rank_defects_from_idempotents,
    structure_params,
    subsystem_dimension,
    transform_pair,
)

from oracles import a4_example_matrices, gb_rank_dimension, kernel_basis, rank_mod_p
from strategies import SMALL_GROUPS, contexts, elements

GF2, GF3 = gf_new(2), gf_new(3)
A4_SPEC = "perm:x=(1,2,3);y=(1,2)(3,4)"


def code_from(spec, a, b, p=2, aliases=None):
    G = parse_group_spec(spec)
    F = gf_new(p)
    return TwoBlockCode(parse_algebra_elem(a, G, F, aliases), parse_algebra_elem(b, G, F, aliases))


def example1():
    return code_from(A4_SPEC, "1+x+y+x^-1*y*x", "1+x+y+y*x")


@st.composite
def codes(draw, group_strategy=st.sampled_from(list(SMALL_GROUPS.values())), max_weight=4, max_order=48):
    G, F = draw(contexts(group_strategy))
    a, b = draw(elements(G, F, max_weight)), draw(elements(G, F, max_weight))
    return TwoBlockCode(a, b)


small_codes = codes(st.sampled_from([g for g in SMALL_GROUPS.values() if g.order <= 12]))


def test_build_examples():
    C3 = group_cyclic(3)
    one = AlgebraElement.one(C3, GF2)
    code = build(C3, GF2, one, one)
    I = FMatrix.identity(3)
    assert code.H_X.data.tolist() == np.hstack([I.data, I.data]).tolist()
    assert (code.H_X @ code.H_Z.T).is_zero()
    assert example1().n == 24
    with pytest.raises(MixedContext):
        build(C3, GF2, one, AlgebraElement.one(group_cyclic(4), GF2))
    with pytest.raises(MixedContext):
        TwoBlockCode(one, AlgebraElement.one(C3, GF3))


def test_example1_matrices_match_independent_construction():
    code = example1()
    HX, HZ = a4_example_matrices()
    assert code.rank_hx == rank_mod_p(HX.tolist(), 2)
    assert code.rank_hz == rank_mod_p(HZ.tolist(), 2)
    assert dimension(code) == 5


def test_dimension_examples():
    for G in (group_cyclic(5), group_dihedral(4)):
        one = AlgebraElement.one(G, GF2)
        assert dimension(TwoBlockCode(one, one)) == 0
    assert dimension(example1()) == 5
    code = code_from("C4xC2", "1+x", "1+x+s+x^2+sx+sx^3", aliases={"x": "x1", "s": "x2"})
    assert dimension(code) == 2


def test_structure_params_examples():
    sp = structure_params(example1())
    assert sp.k == 5 and (sp.delta_x + sp.delta_z) % 2 == 1
    assert sp.k == 2 * sp.k_s + sp.delta_x + sp.delta_z


@given(small_codes)
def test_code_invariants(code):
    assert (code.H_X @ code.H_Z.T).is_zero()
    assert code.A @ code.B == code.B @ code.A
    assert code.n == 2 * code.ell
    sp = structure_params(code)
    assert sp.k == dimension(code) >= 0
    assert sp.delta_x >= 0 and sp.delta_z >= 0
    assert sp.k == 2 * sp.k_s + sp.delta_x + sp.delta_z
    assert sp.p_star == m_rank(code.A @ code.B)
    assert code.rank_hx == code.ell - sp.k_s - sp.delta_x


@given(small_codes)
def test_rank_formulas_agree_with_idempotents(code):
    sp = structure_params(code)
    assert (sp.delta_x, sp.delta_z) == rank_defects_from_idempotents(code)
    assert sp.k_s == subsystem_dimension(code.A, code.B.T)
    E_A, F_A = code.idempotents_a
    E_B, F_B = code.idempotents_b
    # rank E_B A = p* + delta_X and rank A F_B = p* + delta_Z as well
    assert m_rank(E_B @ code.A) == sp.p_star + sp.delta_x
    assert m_rank(code.A @ F_B) == sp.p_star + sp.delta_z
    assert E_A @ code.A == code.A and code.A @ F_A == code.A


@given(codes(st.sampled_from([g for g in SMALL_GROUPS.values() if g.is_abelian()])))
def test_abelian_defects_equal(code):
    sp = structure_params(code)
    assert sp.delta_x == sp.delta_z


@given(st.integers(1, 40), st.sampled_from([2, 3, 5]), st.data())
def test_semisimple_cyclic_defects_vanish(ell, p, data):
    if math.gcd(ell, p) != 1:
        ell += 1 if math.gcd(ell + 1, p) == 1 else 2
    G, F = group_cyclic(ell), gf_new(p)
    code = TwoBlockCode(data.draw(elements(G, F, 6)), data.draw(elements(G, F, 6)))
    sp = structure_params(code)
    assert sp.delta_x == sp.delta_z == 0


def test_nonsemisimple_cyclic_defect_example():
    """Over GF(2)[C4] with a = b = 1+x the dimension exceeds twice the subsystem dimension."""
    code = code_from("C4", "1+x", "1+x")
    sp = structure_params(code)
    assert (sp.k, sp.k_s, sp.delta_x, sp.delta_z) == (2, 0, 1, 1)


@given(st.data())
def test_gb_dimension_matches_circulant_oracle(data):
    ell = data.draw(st.integers(1, 30))
    F = data.draw(st.sampled_from([GF2, GF3]))
    G = group_cyclic(ell)
    a, b = data.draw(elements(G, F, 6)), data.draw(elements(G, F, 6))
    expected = gb_rank_dimension(a.vector().tolist(), b.vector().tolist(), ell, F.p)
    assert dimension(TwoBlockCode(a, b)) == expected


def test_subsystem_dimension_examples():
    I = FMatrix.identity(4)
    assert subsystem_dimension(I, I) == 4 - 4 - 4 + 4
    code = code_from("C3xC3", "1+x1", "1+x2")
    assert subsystem_dimension(code.H_X, code.H_Z) == css_dimension(code.H_X, code.H_Z) == dimension(code)
    with pytest.raises(DimensionMismatch):
        subsystem_dimension(FMatrix.zeros(2, 3), FMatrix.zeros(2, 4))


def test_components_examples():
    code = code_from("C12", "1+x^2", "1+x^3")
    assert is_connected(code) and len(components(code)) == 1
    code = code_from("C8", "1+x^2", "1+x^4")
    comps = components(code)
    assert len(comps) == 2 and not is_connected(code)
    assert [sorted(c.coset) for c in comps] == [[0, 2, 4, 6], [1, 3, 5, 7]]
    sub = TwoBlockCode(*(parse_algebra_elem(s, group_cyclic(4), GF2) for s in ("1+x", "1+x^2")))
    for c in comps:
        assert c.H_X.cols == 8
        assert css_dimension(c.H_X, c.H_Z) == dimension(sub)
    assert sum(css_dimension(c.H_X, c.H_Z) for c in comps) == dimension(code)


def _tanner_components(code):
    """Connected components of the check/qudit incidence graph, by union-find."""
    n = code.n
    parent = list(range(n + 2 * code.ell))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for offset, H in ((n, code.H_X), (n + code.ell, code.H_Z)):
        for r, c in zip(*np.nonzero(H.data)):
            parent[find(offset + int(r))] = find(int(c))
    return len({find(u) for u in range(n)})


@given(small_codes)
def test_components_partition_code(code):
    comps = components(code)
    Ga, Gb = code.support_groups
    assert len(comps) == len(double_cosets(code.group, Ga, Gb))
    assert sum(css_dimension(c.H_X, c.H_Z) for c in comps) == dimension(code)
    assert sorted(col for c in comps for col in c.columns) == list(range(code.n))
    if code.a.weight and code.b.weight:
        # qudits of one component never meet checks of another
        assert _tanner_components(code) >= len(comps)
        assert is_connected(code) == (len(comps) == 1)


@given(st.data())
def test_double_cosets_are_tanner_components(data):
    """With a_1 = b_1 = 1 the Tanner graph splits exactly along the double cosets."""
    G, F = data.draw(contexts(st.sampled_from([g for g in SMALL_GROUPS.values() if g.order > 1])))
    a = data.draw(elements(G, F, 4, with_identity=True))
    b = data.draw(elements(G, F, 4, with_identity=True))
    code = TwoBlockCode(a, b)
    assert _tanner_components(code) == len(components(code))


@given(small_codes, st.data())
def test_centralizer_symmetry(code, data):
    G, F = code.group, code.field
    basis = kernel_basis(code.H_X.data.tolist(), code.n, F.p)
    if not basis:
        return
    coeffs = data.draw(st.lists(st.integers(0, F.p - 1), min_size=len(basis), max_size=len(basis)))
    v = np.array(coeffs) @ np.array(basis) % F.p
    for g in centralizer(G, support_group(code.a)):
        g_el = AlgebraElement(G, F, {g: 1})
        left = (g_el * AlgebraElement.from_vector(G, F, v[: G.order])).vector()
        right = (g_el * AlgebraElement.from_vector(G, F, v[G.order :])).vector()
        assert not (code.H_X.data @ np.concatenate([left, right]) % F.p).any()


def test_transform_examples():
    code = example1()
    G, a, b = code.group, code.a, code.b
    assert transform_pair(G, a, b, "translate", (0, 0)) == (a, b)
    twice = transform_pair(G, *transform_pair(G, a, b, "hat_swap"), "hat_swap")
    assert twice == (a, b)
    with pytest.raises(InvalidTransform):
        transform_pair(G, a, b, "scale", (0, 1))
    with pytest.raises(InvalidTransform):
        transform_pair(G, a, b, "automorphism", np.roll(np.arange(12), 1))
    with pytest.raises(InvalidTransform):
        transform_pair(G, a, b, "translate", (0, 99))
    with pytest.raises(InvalidTransform):
        transform_pair(G, a, b, "rotate")


def test_example1_distance_roles_under_transforms():
    code = example1()
    G, a, b = code.group, code.a, code.b

    def dxz(pair):
        c = TwoBlockCode(*pair)
        return exact_dX(c.H_X, c.H_Z).value, exact_dZ(c.H_X, c.H_Z).value

    base = dxz((a, b))
    assert base == (3, 2)
    assert dxz(transform_pair(G, a, b, "hat_swap")) == base
    assert dxz(transform_pair(G, a, b, "css_dual")) == base[::-1]


def random_automorphism(G, rng):
    """An inner automorphism, composed with a power map when G is abelian."""
    c = int(rng.integers(G.order))
    phi = np.array([G.product(int(G.inv[c]), g, c) for g in range(G.order)])
    if G.is_abelian():
        exp = math.lcm(*(G.element_order(g) for g in range(G.order)))
        units = [u for u in range(1, exp + 1) if math.gcd(u, exp) == 1]
        u = int(rng.choice(units))
        phi = np.array([G.power(int(h), u) for h in phi])
    return phi


def random_params(kind, G, F, rng):
    if kind == "automorphism":
        return random_automorphism(G, rng)
    if kind in ("conjugate", "translate"):
        return int(rng.integers(G.order)), int(rng.integers(G.order))
    if kind == "scale":
        return int(rng.integers(1, F.p)), int(rng.integers(1, F.p))
    return None


@given(codes(st.sampled_from([g for g in SMALL_GROUPS.values() if g.order <= 12]), max_weight=4),
       st.sampled_from(TRANSFORM_KINDS), st.integers(0, 2**32 - 1))
def test_transforms_preserve_parameters(code, kind, seed):
    rng = np.random.default_rng(seed)
    G, F = code.group, code.field
    a2, b2 = transform_pair(G, code.a, code.b, kind, random_params(kind, G, F, rng))
    other = TwoBlockCode(a2, b2)
    assert other.n == code.n and dimension(other) == dimension(code)
    if dimension(code) == 0:
        return
    assume(all(F.p ** kernel_dimension(H) <= DEFAULT_BUDGET for H in (code.H_X, code.H_Z)))
    d1 = (exact_dX(code.H_X, code.H_Z).value, exact_dZ(code.H_X, code.H_Z).value)
    d2 = (exact_dX(other.H_X, other.H_Z).value, exact_dZ(other.H_X, other.H_Z).value)
    assert sorted(d1) == sorted(d2)
    if kind == "css_dual":
        assert d2 == d1[::-1]
    else:
        assert d2 == d1


def test_canonical_examples():
    for spec in ("C6", "D4", A4_SPEC):
        G = parse_group_spec(spec)
        for g in range(G.order):
            x = AlgebraElement(G, GF2, {g: 1})
            assert canonical_element(x) == AlgebraElement.one(G, GF2)
    G = parse_group_spec("C6")
    assert canonical_element(AlgebraElement(G, GF3, {2: 2, 5: 1})).coeffs[0] == 1


@given(small_codes)
def test_canonical_pair_idempotent(code):
    G = code.group
    a1, b1, _ = canonical_pair(G, code.a, code.b)
    a2, b2, flag = canonical_pair(G, a1, b1)
    assert (a2, b2) == (a1, b1) and flag


@given(small_codes, st.sampled_from(["conjugate", "translate", "hat_swap"]), st.integers(0, 2**32 - 1))
def test_equivalent_pairs_share_canonical_form(code, kind, seed):
    G = code.group
    rng = np.random.default_rng(seed)
    pair = transform_pair(G, code.a, code.b, kind, random_params(kind, G, code.field, rng))
    if kind == "hat_swap" and code.a.weight != code.b.weight:
        # hat-swap is folded into the canonical form only for equal weights
        assert canonical_pair(G, *pair)[:2] == (canonical_element(pair[0]), canonical_element(pair[1]))
        return
    assert canonical_pair(G, *pair)[:2] == canonical_pair(G, code.a, code.b)[:2]


@given(small_codes)
def test_canonical_element_contains_identity_and_is_minimal(code):
    a = code.a
    if a.is_zero():
        return
    c = canonical_element(a)
    assert c.support[0] == 0 and c.weight == a.weight
    G = a.group
    for al in range(G.order):
        for be in range(G.order):
            img = a.left_translate(al).right_translate(be)
            if code.field.p > 2:
                lead = img.coeffs[img.support[0]]
                img = pow(lead, -1, code.field.p) * img
            assert c.sort_key() <= img.sort_key()


def test_code_report_derived_fields():
    rep = CodeReport("C3", 3, 2, "1", "1", 2, 4, 6, 0, 3, 0, 0, 0, True, 1, dx=4, dz=3, d=3)
    assert rep.w == 6 and rep.d == min(rep.dx, rep.dz)
    assert "extra" not in rep.to_dict()

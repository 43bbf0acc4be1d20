from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gacodes.algebra import (
    AlgebraElement,
    MixedContext,
    ga_add,
    ga_hat,
    ga_mul,
    ga_scale,
    ga_trace,
    hat_permutation,
    left_matrix,
    right_matrix,
    support_group,
)
from gacodes.fmat import FMatrix
from gacodes.gf import gf_new
from gacodes.groups import group_cyclic, group_dihedral

from strategies import contexts, elements

GF2, GF3 = gf_new(2), gf_new(3)
C3, C6 = group_cyclic(3), group_cyclic(6)


def elem(G, F, coeffs):
    return AlgebraElement(G, F, coeffs)


def test_add_and_scale_examples():
    a = elem(C3, GF2, {0: 1, 1: 1})
    assert ga_add(a, AlgebraElement.zero(C3, GF2)) == a
    assert ga_add(a, a).is_zero()
    assert ga_scale(2, elem(C3, GF3, {0: 1, 1: 1})) == elem(C3, GF3, {0: 2, 1: 2})


def test_mixed_context_rejected():
    with pytest.raises(MixedContext):
        ga_add(AlgebraElement.one(C3, GF2), AlgebraElement.one(C6, GF2))
    with pytest.raises(MixedContext):
        ga_mul(AlgebraElement.one(C3, GF2), AlgebraElement.one(C3, GF3))


def test_zero_coefficients_pruned():
    a = elem(C3, GF3, {0: 3, 1: 4, 2: 0})
    assert a.coeffs == {1: 1}


def test_mul_examples():
    a = elem(C3, GF2, {0: 1, 1: 1})
    assert ga_mul(AlgebraElement.one(C3, GF2), a) == a
    assert ga_mul(a, elem(C3, GF2, {0: 1, 2: 1})) == elem(C3, GF2, {1: 1, 2: 1})
    D3 = group_dihedral(3)
    r, s = D3.generator("r"), D3.generator("s")
    sr, rs = ga_mul(elem(D3, GF2, {s: 1}), elem(D3, GF2, {r: 1})), ga_mul(elem(D3, GF2, {r: 1}), elem(D3, GF2, {s: 1}))
    assert sr.support == (D3.m(s, r),)
    assert rs.support == (D3.m(s, int(D3.inv[r])),)
    assert sr != rs


def test_hat_examples():
    assert ga_hat(elem(C3, GF2, {0: 1, 1: 1})) == elem(C3, GF2, {0: 1, 2: 1})
    D4 = group_dihedral(4)
    s = D4.generator("s")
    assert ga_hat(elem(D4, GF2, {s: 1})) == elem(D4, GF2, {s: 1})


def test_trace_examples():
    assert ga_trace(elem(C3, GF2, {0: 1, 1: 1})) == 1
    assert ga_trace(elem(C3, GF2, {1: 1, 2: 1})) == 0


def test_support_group_examples():
    assert support_group(elem(C6, GF2, {0: 1, 1: 1})) == frozenset(range(6))
    assert support_group(elem(C6, GF2, {0: 1, 2: 1})) == {0, 2, 4}
    assert support_group(AlgebraElement.zero(C6, GF2)) == {0}


def test_matrix_examples():
    assert left_matrix(AlgebraElement.one(C6, GF3)) == FMatrix.identity(6, GF3)
    L = left_matrix(elem(C3, GF2, {0: 1, 1: 1}))
    assert L.data[:, 0].tolist() == [1, 1, 0]
    assert [L.data[:, j].tolist() for j in range(3)] == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]


def test_hat_permutation_examples():
    assert hat_permutation(group_cyclic(2)) == FMatrix.identity(2)
    P = hat_permutation(C3).data
    assert P.tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


@given(st.data())
def test_ring_laws(data):
    G, F = data.draw(contexts())
    a, b, c = (data.draw(elements(G, F)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    one = AlgebraElement.one(G, F)
    assert one * a == a == a * one
    assert (a - a).is_zero()


@given(st.data())
def test_hat_involution_and_antihomomorphism(data):
    G, F = data.draw(contexts())
    a, b = data.draw(elements(G, F)), data.draw(elements(G, F))
    assert ga_hat(ga_hat(a)) == a
    assert ga_hat(a * b) == ga_hat(b) * ga_hat(a)


@given(st.data())
def test_inner_product_is_trace(data):
    G, F = data.draw(contexts())
    a, b = data.draw(elements(G, F)), data.draw(elements(G, F))
    assert int(a.vector() @ b.vector()) % F.p == ga_trace(ga_hat(a) * b)


@given(st.data())
def test_regular_representations(data):
    G, F = data.draw(contexts())
    a, b = data.draw(elements(G, F)), data.draw(elements(G, F))
    La, Lb, Ra, Rb = left_matrix(a), left_matrix(b), right_matrix(a), right_matrix(b)
    assert La @ Lb == left_matrix(a * b)
    assert Ra @ Rb == right_matrix(b * a)
    assert La @ Rb == Rb @ La
    assert La.T == left_matrix(ga_hat(a))
    assert Ra.T == right_matrix(ga_hat(a))
    P = hat_permutation(G, F)
    assert P == P.T and P @ P == FMatrix.identity(G.order, F)
    assert La == P @ Ra.T @ P


@given(st.data())
def test_matrices_act_on_vectors(data):
    G, F = data.draw(contexts())
    a, v = data.draw(elements(G, F)), data.draw(elements(G, F))
    assert np.array_equal(left_matrix(a).data @ v.vector() % F.p, (a * v).vector())
    assert np.array_equal(right_matrix(a).data @ v.vector() % F.p, (v * a).vector())


@given(st.data())
def test_support_group_is_generated_subgroup(data):
    G, F = data.draw(contexts())
    a = data.draw(elements(G, F))
    H = support_group(a)
    assert set(a.support) <= H and 0 in H
    assert all(G.m(g, h) in H for g in H for h in H)


def test_translations():
    D4 = group_dihedral(4)
    a = elem(D4, GF3, {0: 1, 1: 2, 5: 1})
    g = 6
    assert a.left_translate(g) == elem(D4, GF3, {g: 1}) * a
    assert a.right_translate(g) == a * elem(D4, GF3, {g: 1})


def test_string_form():
    D6 = group_dihedral(6)
    assert AlgebraElement.zero(D6, GF2).to_string() == "0"
    a = AlgebraElement(D6, GF3, {0: 2, D6.generator("r"): 1})
    assert a.to_string() == "2 + r"

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gacodes.algebra import AlgebraElement
from gacodes.gf import gf_new
from gacodes.groups import BadTwist, group_dihedral
from gacodes.parse import ParseError, UnknownGenerator, parse_algebra_elem, parse_group_spec

from strategies import contexts, elements

GF2, GF3 = gf_new(2), gf_new(3)


def test_group_spec_examples():
    C36 = parse_group_spec("C36")
    assert C36.order == 36 and C36.is_cyclic()
    G = parse_group_spec("C4xC2")
    assert G.order == 8 and G.is_abelian() and not G.is_cyclic()
    M = parse_group_spec("M(5,8,4)")
    assert M.order == 40 and not M.is_abelian()


def test_group_spec_forms():
    assert parse_group_spec("D6").order == 12
    assert parse_group_spec("C2xC2xC2").order == 8
    assert parse_group_spec(" C3 x D3 ").order == 18
    A4 = parse_group_spec("perm:x=(1,2,3);y=(1,2)(3,4)")
    assert A4.order == 12 and A4.generator("y") != A4.generator("x")
    assert parse_group_spec("perm:(1,2,3,4,5)").order == 5


def test_table_spec(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    assert parse_group_spec(f"table:{path}").order == 3


@pytest.mark.parametrize("bad,pos", [("C", 0), ("C4x", 3), ("Q8", 0), ("C4 y C2", 3), ("table:", 6)])
def test_group_spec_errors_report_position(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_group_spec(bad)
    assert info.value.pos == pos


def test_constructor_errors_propagate():
    with pytest.raises(BadTwist):
        parse_group_spec("M(5,3,2)")


def test_element_examples():
    C36 = parse_group_spec("C36")
    a = parse_algebra_elem("1 + r^28", C36, GF2)
    assert a.support == (0, 28)
    D6 = group_dihedral(6)
    s, r = D6.generator("s"), D6.generator("r")
    b = parse_algebra_elem("1 + s*r^4", D6, GF2)
    assert b.support == tuple(sorted((0, D6.m(s, D6.power(r, 4)))))
    assert parse_algebra_elem("x + x", parse_group_spec("C4"), GF2).is_zero()


def test_element_juxtaposition_and_coefficients():
    G = parse_group_spec("C4")
    a = parse_algebra_elem("2*x^-1 + 4 + x*x", G, GF3)
    assert a.coeffs == {0: 1, 2: 1, 3: 2}
    D6 = group_dihedral(6)
    assert parse_algebra_elem("1+sr^4", D6, GF2) == parse_algebra_elem("1 + s * r ^ 4", D6, GF2)
    assert parse_algebra_elem("x^3", G, GF2) == parse_algebra_elem("x^-1", G, GF2)


def test_aliases():
    G = parse_group_spec("C4xC2")
    a = parse_algebra_elem("1+x+s+x^2+sx+sx^3", G, GF2, {"x": "x1", "s": "x2"})
    assert a.weight == 6
    M = parse_group_spec("M(5,8,4)")
    swapped = parse_algebra_elem("s", M, GF2, {"r": "s", "s": "r"})
    assert swapped.support == (M.generator("r"),)
    with pytest.raises(UnknownGenerator):
        parse_algebra_elem("x", G, GF2, {"x": "nope"})


@pytest.mark.parametrize("bad", ["1+", "1+x^", "x^^2", "2*", "", "1 ++ x", "(x)"])
def test_element_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse_algebra_elem(bad, parse_group_spec("C4"), GF3)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as info:
        parse_algebra_elem("1 + z", parse_group_spec("C4"), GF2)
    assert info.value.pos == 4


@given(st.data())
def test_display_form_roundtrips(data):
    G, F = data.draw(contexts())
    a = data.draw(elements(G, F))
    if a.is_zero():
        return
    assert parse_algebra_elem(a.to_string(), G, F) == a


@given(st.data())
def test_sum_of_terms_accumulates(data):
    G, F = data.draw(contexts())
    a, b = data.draw(elements(G, F)), data.draw(elements(G, F))
    if a.is_zero() or b.is_zero():
        return
    text = f"{a.to_string()} + {b.to_string()}"
    assert parse_algebra_elem(text, G, F) == a + b
    assert isinstance(parse_algebra_elem(text, G, F), AlgebraElement)

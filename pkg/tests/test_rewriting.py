from fractions import Fraction

import pytest

from conftest import algebra_from_text
from oracles import quotient_dim
from stabinv.algebra import AlgebraError, construct_algebra
from stabinv.presentation import parse_presentation
from stabinv.rewriting import CompletionError, complete_rewriting

A2 = "field char=0\nvertex 1\narrow a 1 1\narrow b 1 1\nrel a*a\nrel b*b\nrel a*b - 2*b*a\n"


def test_dual_numbers():
    a = algebra_from_text("field char=3\nvertex 1\narrow x 1 1\nrel x*x\n")
    assert a.dim == 2


def test_a2_basis():
    a = algebra_from_text(A2)
    assert [a.word_name(i) for i in range(a.dim)] == ["e1", "a", "b", "a*b"]


def test_noncommutative_overlap_resolution():
    # ab = ba, a^2 = b^2 = 0 over GF(2): a commutative 4-dimensional algebra,
    # the overlap aab resolves only after completion
    text = "field char=2\nvertex 1\narrow a 1 1\narrow b 1 1\nrel a*a\nrel b*b\nrel a*b + b*a\n"
    pres = parse_presentation(text)
    assert construct_algebra(complete_rewriting(pres)).dim == quotient_dim(pres) == 4


def test_hidden_consequence():
    # ab = b a b forces ab into higher radical layers; the oracle decides the dimension
    text = ("field char=3\nvertex 1\narrow a 1 1\narrow b 1 1\n"
            "rel a*a - b*a*b\nrel b*b\nrel a*b*a\nrel b*a*b*a\n")
    pres = parse_presentation(text)
    assert construct_algebra(complete_rewriting(pres)).dim == quotient_dim(pres)


def test_normal_form_is_reduced():
    pres = parse_presentation(A2)
    rs = complete_rewriting(pres)
    # b*a is the larger word under deglex, so b*a -> (1/2) a*b
    nf = rs.normal_form({(1, 0): 1})
    assert nf == {(0, 1): rs.field.coerce(Fraction(1, 2))}
    assert all(rs.is_irreducible(w) for w in nf)


def test_infinite_quotient_detected():
    pres = parse_presentation("field char=2\nvertex 1\narrow a 1 1\narrow b 1 1\nrel a*a\n")
    with pytest.raises(CompletionError):
        complete_rewriting(pres, degree_bound=8)
    rs = complete_rewriting(pres, degree_bound=8, strict=False)
    assert not rs.complete
    with pytest.raises(AlgebraError):
        construct_algebra(rs)


def test_degree_bound_below_relation_length():
    pres = parse_presentation("field char=2\nvertex 1\narrow a 1 1\nrel a*a*a*a\n")
    with pytest.raises(CompletionError):
        complete_rewriting(pres, degree_bound=3)


def test_path_algebra_of_a_line():
    a = algebra_from_text("field char=0\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\n")
    assert a.dim == 6

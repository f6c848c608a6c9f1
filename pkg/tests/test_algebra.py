import itertools
import json

import pytest

from conftest import GF2, GF3, QQ, families, smallest_algebra, smallest_field_for
from stabinv.algebra import FDAlgebra


def mul_basis(a, i, j):
    return a.multiply(a.basis_vector(i), a.basis_vector(j))


@pytest.mark.parametrize("family", families())
def test_structure_laws(family):
    F = smallest_field_for(family)
    a = smallest_algebra(family, F)
    one = a.one()
    for i in range(a.dim):
        b = a.basis_vector(i)
        assert a.multiply(one, b) == b == a.multiply(b, one)
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        if a.basis[i].target != a.basis[j].source or a.basis[j].target != a.basis[k].source:
            continue
        left = a.multiply(mul_basis(a, i, j), a.basis_vector(k))
        right = a.multiply(a.basis_vector(i), mul_basis(a, j, k))
        assert left == right, (i, j, k)


@pytest.mark.parametrize("family", families())
def test_endpoints_and_nilpotence(family):
    """Products respect endpoints and the radical is nilpotent."""
    F = smallest_field_for(family)
    a = smallest_algebra(family, F)
    s = a.num_vertices
    for i in range(s, a.dim):
        for j in range(s, a.dim):
            for k, _ in a.table[i][j]:
                assert not a.basis[k].is_trivial
                assert a.basis[k].source == a.basis[i].source
                assert a.basis[k].target == a.basis[j].target
    for i in range(s, a.dim):
        assert a.power(a.basis_vector(i), a.dim) == a.zero()


def test_length_grading_for_homogeneous_relations():
    """A(lambda) has quadratic monomial-binomial relations, so word lengths
    add under multiplication."""
    a = smallest_algebra("A_lambda", QQ)
    s = a.num_vertices
    for i in range(s, a.dim):
        for j in range(s, a.dim):
            for k, _ in a.table[i][j]:
                assert len(a.basis[k]) == len(a.basis[i]) + len(a.basis[j])


@pytest.mark.parametrize("F", [GF2, GF3, QQ], ids=str)
def test_json_roundtrip(F):
    a = smallest_algebra("L5", F)
    doc = json.loads(a.dumps())
    b = FDAlgebra.from_json(doc)
    assert b.basis == a.basis and b.table == a.table
    assert b.dumps() == a.dumps()


def test_element_by_name():
    a = smallest_algebra("A_lambda", QQ)
    # smallest lambda over QQ is 2: alpha*beta = 2 beta*alpha
    lam = a.field.from_int(2)
    assert a.element({"alpha*beta": 1}) == a.scale(lam, a.element({"beta*alpha": 1}))
    with pytest.raises(ValueError):
        a.multiply([0], [0])

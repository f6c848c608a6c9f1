import pytest

from conftest import (
    GF2, GF3, QQ, algebra_from_text, catalog_algebra, dual_numbers, families, ground_field,
    smallest_algebra, smallest_field_for,
)
from oracles import brute_free_center_dim, hh1_by_derivations
from stabinv.catalog import instantiate, smallest_params
from stabinv.hochschild import SizeGuardError, hochschild_dims


@pytest.mark.parametrize("F", [GF2, GF3, QQ], ids=str)
def test_ground_field(F):
    assert hochschild_dims(ground_field(F), 2).dims == (1, 0, 0)


@pytest.mark.parametrize("F,expected", [(GF2, (2, 2, 2, 2)), (GF3, (2, 1, 1, 1)), (QQ, (2, 1, 1, 1))],
                         ids=["GF2", "GF3", "QQ"])
@pytest.mark.parametrize("method", ["unit", "radical"])
def test_dual_numbers(F, expected, method):
    """HH^n(K[x]/x^2) is K^2 in characteristic 2 and K otherwise (n >= 1)."""
    assert hochschild_dims(dual_numbers(F), 3, method=method).dims == expected


def test_separable_algebra_has_no_higher_cohomology():
    a = algebra_from_text("field char=5\nvertex 1\nvertex 2\nvertex 3\n")
    assert hochschild_dims(a, 3).dims == (3, 0, 0, 0)


def test_path_algebra_of_kronecker():
    # two parallel arrows: HH^0 = 1, HH^1 = 3 (gl_2 modulo scalars)
    a = algebra_from_text("field char=0\nvertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\n")
    assert hochschild_dims(a, 2).dims == (1, 3, 0)


def _cases():
    return [(fam, F) for fam in families() for F in {smallest_field_for(fam), QQ}]


@pytest.mark.parametrize("family,F", _cases(), ids=lambda x: str(x))
def test_hh0_and_hh1_against_oracles(family, F):
    a = smallest_algebra(family, F)
    pres = instantiate(family, smallest_params(family, F), F)
    hh = hochschild_dims(a, 1, method="radical")
    assert hh[0] == brute_free_center_dim(a)
    assert hh[1] == hh1_by_derivations(pres, a)


@pytest.mark.parametrize("family", ["A_lambda", "A_pq", "Omega_n", "Lambda_n", "L2p"])
@pytest.mark.parametrize("F", [GF2, GF3], ids=str)
def test_models_agree(family, F):
    try:
        a = smallest_algebra(family, F)
    except Exception:
        pytest.skip("no admissible parameters")
    unit = hochschild_dims(a, 2, method="unit")
    rad = hochschild_dims(a, 2, method="radical")
    assert unit.dims == rad.dims
    assert unit.method == "unit" and rad.method == "radical"


def test_euler_bookkeeping():
    a = catalog_algebra("L5p", GF2)
    hh = hochschild_dims(a, 2, method="radical")
    for n in range(3):
        prev = hh.ranks[n - 1] if n else 0
        assert hh.dims[n] == hh.cochain_dims[n] - hh.ranks[n] - prev


def test_size_guard():
    a = catalog_algebra("L9", GF2)
    with pytest.raises(SizeGuardError, match="guard 1000"):
        hochschild_dims(a, 2, guard=1000)


def test_degree_range():
    with pytest.raises(ValueError):
        hochschild_dims(dual_numbers(GF2), 4)
    with pytest.raises(ValueError):
        hochschild_dims(dual_numbers(GF2), 1, method="bar")


@pytest.mark.parametrize("family", ["L9", "L9p"])
def test_models_agree_on_four_vertex_algebras(family):
    a = catalog_algebra(family, GF2)
    assert hochschild_dims(a, 2, method="unit").dims == hochschild_dims(a, 2, method="radical").dims


def test_auto_prefers_the_smaller_model():
    assert hochschild_dims(catalog_algebra("L9", GF2), 1).method == "radical"
    assert hochschild_dims(dual_numbers(GF2), 1).method == "unit"

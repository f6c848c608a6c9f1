import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stabinv.fields import FieldError, FieldSpec, extension_of, find_irreducible, is_irreducible

FINITE = [FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(7), FieldSpec.gf(2, 2),
          FieldSpec.gf(2, 3), FieldSpec.gf(3, 2), FieldSpec.gf(5, 2)]


def has_root_free_factorisation(modulus, p):
    """Brute force: reducible iff divisible by some monic polynomial of
    degree between 1 and deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            rem = list(modulus)
            for shift in range(k - d, -1, -1):
                f = rem[shift + d]
                for i in range(d + 1):
                    rem[shift + i] = (rem[shift + i] - f * divisor[i]) % p
            if not any(rem):
                return False
    return True


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_matches_trial_division(p, k):
    for tail in itertools.product(range(p), repeat=k):
        mod = list(tail) + [1]
        assert is_irreducible(mod, p) == has_root_free_factorisation(mod, p), mod


@pytest.mark.parametrize("F", FINITE, ids=str)
def test_finite_field_axioms_exhaustive(F):
    els = list(F.elements())
    assert len(els) == F.order
    for a in els:
        assert F.add(a, F.neg(a)) == F.zero
        assert F.mul(a, F.one) == a
        if a:
            assert F.mul(a, F.inv(a)) == F.one
        # Frobenius is additive and fixes the prime field
        assert F.pow(a, F.order) == a
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))


@pytest.mark.parametrize("F", FINITE, ids=str)
def test_distributivity_and_associativity(F):
    els = list(F.elements())
    sample = els if len(els) <= 9 else els[:9]
    for a, b, c in itertools.product(sample, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@pytest.mark.parametrize("F", FINITE, ids=str)
def test_format_parse_roundtrip(F):
    for a in F.elements():
        assert F.parse(F.format(a)) == a


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rationals_exact(a, b):
    Q = FieldSpec.rationals()
    assert Q.add(a, b) == a + b
    assert Q.mul(a, b) == a * b
    if b:
        assert Q.div(a, b) == Fraction(a) / b
    assert Q.parse(Q.format(a)) == a


def test_rejects_bad_fields():
    with pytest.raises(FieldError):
        FieldSpec(4)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))  # t^2 + 1 = (t + 1)^2 over GF(2)
    with pytest.raises(FieldError):
        FieldSpec(0, 2)
    with pytest.raises(FieldError):
        FieldSpec.gf(3).parse("t")
    with pytest.raises(FieldError):
        FieldSpec.gf(3).parse("1/3")


def test_default_modulus_is_irreducible():
    for p, k in [(2, 5), (3, 4), (7, 3)]:
        assert is_irreducible(find_irreducible(p, k), p)


def test_fraction_coercion_into_prime_field():
    F = FieldSpec.gf(5)
    assert F.coerce(Fraction(1, 2)) == 3


@pytest.mark.parametrize("F", [FieldSpec.gf(2), FieldSpec.gf(2, 2), FieldSpec.gf(3)], ids=str)
def test_extension_embedding_is_a_ring_map(F):
    L, embed = extension_of(F, 50)
    assert L.order >= 50 and L.p == F.p
    for a, b in itertools.product(F.elements(), repeat=2):
        assert embed(F.add(a, b)) == L.add(embed(a), embed(b))
        assert embed(F.mul(a, b)) == L.mul(embed(a), embed(b))

import pytest

from stabinv.fields import FieldSpec
from stabinv.presentation import PresentationError, format_presentation, parse_presentation

KRONECKER_LIKE = """\
# two loops with a commutation relation
field char=5
vertex 1
arrow a 1 1
arrow b 1 1
rel a*a
rel b*b
rel a*b = 2*b*a
"""


def test_parse_basic():
    pres = parse_presentation(KRONECKER_LIKE)
    assert pres.field == FieldSpec.gf(5)
    assert [a.name for a in pres.quiver.arrows] == ["a", "b"]
    assert pres.relations[2] == {(0, 1): 1, (1, 0): 3}


def test_format_roundtrip():
    pres = parse_presentation(KRONECKER_LIKE)
    again = parse_presentation(format_presentation(pres))
    assert again.relations == pres.relations
    assert again.quiver == pres.quiver


def test_extension_field_scalars():
    pres = parse_presentation(
        "field char=2 degree=2 modulus=1,1,1\nvertex 1\narrow a 1 1\narrow b 1 1\n"
        "rel a*a\nrel b*b\nrel a*b + (t+1)*b*a\n"
    )
    F = pres.field
    assert pres.relations[2][(1, 0)] == F.parse("t+1")
    assert parse_presentation(format_presentation(pres)).relations == pres.relations


def test_rational_scalars():
    pres = parse_presentation("field char=0\nvertex 1\narrow a 1 1\nrel a*a*a - 1/2*a*a\n")
    assert pres.relations[0][(0, 0)] == pytest.approx(-0.5)


@pytest.mark.parametrize("text,line,fragment", [
    ("vertex 1\n", 1, "first statement"),
    ("field char=4\nvertex 1\n", 1, "neither 0 nor prime"),
    ("field char=2\nvertex 1\nvertex 1\n", 3, "duplicate vertex"),
    ("field char=2\nvertex 1\narrow a 1 2\n", 3, "unknown vertex"),
    ("field char=2\nvertex 1\nvertex 2\narrow a 1 2\nrel a*a\n", 5, "not composable"),
    ("field char=2\nvertex 1\nvertex 2\narrow a 1 2\narrow b 2 2\nrel a + b\n", 6, "homogeneous"),
    ("field char=2\nvertex 1\narrow a 1 1\nrel a*c\n", 4, "c"),
    ("field char=2\nvertex 1\narrow a 1 1\nrel a - a\n", 4, "zero"),
    ("field char=2\nvertex 1\nfrobnicate\n", 3, "unknown statement"),
    ("field char=2 degree=2 modulus=1,0,1\nvertex 1\n", 1, "reducible"),
])
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(PresentationError) as exc:
        parse_presentation(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_missing_field():
    with pytest.raises(PresentationError):
        parse_presentation("# nothing\n")

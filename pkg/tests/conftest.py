import functools
import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from stabinv.algebra import algebra_from_presentation  # noqa: E402
from stabinv.catalog import instantiate, list_families, smallest_params  # noqa: E402
from stabinv.fields import FieldSpec  # noqa: E402
from stabinv.presentation import parse_presentation  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GF2, GF3, GF4, GF5 = FieldSpec.gf(2), FieldSpec.gf(3), FieldSpec.gf(2, 2), FieldSpec.gf(5)
QQ = FieldSpec.rationals()


def _key(params):
    return tuple(sorted((k, str(v)) for k, v in params.items()))


@functools.lru_cache(maxsize=None)
def _build(family, field, key):
    return algebra_from_presentation(instantiate(family, dict(key), field))


def catalog_algebra(family, field, **params):
    """Cached catalog algebra."""
    return _build(family, field, _key(params))


@functools.lru_cache(maxsize=None)
def smallest_algebra(family, field):
    ps = smallest_params(family, field)
    return algebra_from_presentation(instantiate(family, ps, field))


def algebra_from_text(text):
    return algebra_from_presentation(parse_presentation(text))


def dual_numbers(field):
    """K[x]/(x^2)."""
    return algebra_from_text(
        f"field char={field.characteristic}"
        + (f" degree={field.degree} modulus={','.join(map(str, field.modulus))}" if field.degree > 1 else "")
        + "\nvertex 1\narrow x 1 1\nrel x*x\n"
    )


def ground_field(field):
    return algebra_from_text(f"field char={field.characteristic}\nvertex 1\n")


def families():
    return [e.family for e in list_families()]


def smallest_field_for(family):
    """Smallest prime field on which the family has admissible parameters,
    falling back to GF(4) for the families needing lambda outside {0, 1}."""
    for F in (GF2, GF3):
        try:
            smallest_params(family, F)
            return F
        except Exception:
            continue
    return GF4


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])

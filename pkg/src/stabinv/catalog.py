"""Built-in presentations of the weakly symmetric algebra families.

Every family is given by its quiver and relations with paths composed left
to right. Integer parameters and scalars are validated against the
published ranges; error messages quote the range as printed.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .fields import FieldError, FieldSpec
from .presentation import Arrow, Presentation, Quiver


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSet:
    n: int | None = None
    p: int | None = None
    q: int | None = None
    lam: object = None  # int, Fraction, field-element text, or field element

    @classmethod
    def from_pairs(cls, pairs: dict) -> "ParamSet":
        kw = {}
        for key, value in pairs.items():
            key = {"lambda": "lam", "λ": "lam", "mu": "lam"}.get(key, key)
            if key not in ("n", "p", "q", "lam"):
                raise CatalogError(f"unknown parameter {key!r}")
            if key == "lam":
                kw[key] = value
            else:
                try:
                    kw[key] = int(value)
                except ValueError as exc:
                    raise CatalogError(f"parameter {key} must be an integer, got {value!r}") from exc
        return cls(**kw)


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    display: str
    params: tuple[str, ...]
    constraint: str
    constraint_quote: str
    symmetric: str  # "yes", "no unless lambda = 1", "char 2 only"
    weakly_symmetric: bool
    special_biserial: bool | None
    characteristic_note: str
    citation: str
    smallest: dict = dc_field(default_factory=dict)

    def expects_symmetric(self, field: FieldSpec, lam=None) -> bool | None:
        if self.symmetric == "yes":
            return True
        if self.symmetric == "char 2 only":
            return field.characteristic == 2
        if self.symmetric == "lambda = 1 only":
            return None if lam is None else lam == field.one
        return None


# -- small helpers -----------------------------------------------------------

class _Builder:
    def __init__(self, field: FieldSpec, vertices):
        self.field = field
        self.vertices = [str(v) for v in vertices]
        self.arrows: list[Arrow] = []
        self.relations: list[dict] = []

    def arrow(self, name, s, t):
        self.arrows.append(Arrow(name, self.vertices.index(str(s)), self.vertices.index(str(t))))

    def rel(self, *terms):
        """terms: (coeff, [arrow names]) or [arrow names]."""
        F = self.field
        names = {a.name: i for i, a in enumerate(self.arrows)}
        out: dict = {}
        for term in terms:
            c, word = term if isinstance(term, tuple) else (1, term)
            w = tuple(names[a] for a in word)
            # coefficients are field elements; the literal -1 means minus one
            v = F.add(out.get(w, F.zero), F.neg(F.one) if c == -1 else c)
            if F.is_zero(v):
                out.pop(w, None)
            else:
                out[w] = v
        if out:
            self.relations.append(out)

    def build(self) -> Presentation:
        return Presentation(self.field, Quiver(tuple(self.vertices), tuple(self.arrows)), self.relations)


def _cycle(b: _Builder, prefix: str, length: int, centre: str, inner: str):
    """Oriented cycle prefix1 ... prefix<length> through ``centre``."""
    verts = [centre] + [f"{inner}{i}" for i in range(1, length)] + [centre]
    for i in range(1, length + 1):
        b.arrow(f"{prefix}{i}", verts[i - 1], verts[i])
    return [f"{prefix}{i}" for i in range(1, length + 1)]


def _require(cond: bool, message: str):
    if not cond:
        raise CatalogError(message)


# -- families ----------------------------------------------------------------

def _a_lambda(F, ps, lam):
    b = _Builder(F, ["1"])
    b.arrow("alpha", 1, 1)
    b.arrow("beta", 1, 1)
    b.rel(["alpha", "alpha"])
    b.rel(["beta", "beta"])
    b.rel(["alpha", "beta"], (F.neg(lam), ["beta", "alpha"]))
    return b.build()


def _a_pq(F, ps, lam):
    p, q = ps.p, ps.q
    verts = ["0"] + [f"a{i}" for i in range(1, p)] + [f"b{j}" for j in range(1, q)]
    b = _Builder(F, verts)
    A = _cycle(b, "alpha", p, "0", "a")
    B = _cycle(b, "beta", q, "0", "b")
    b.rel(A + B, (-1, B + A))
    b.rel([A[-1], A[0]])
    b.rel([B[-1], B[0]])
    for i in range(2, p + 1):
        b.rel(A[i - 1:] + B + A[:i])
    for j in range(2, q + 1):
        b.rel(B[j - 1:] + A + B[:j])
    return b.build()


def _lambda_n(F, ps, lam):
    n = ps.n
    b = _Builder(F, ["0"] + [f"b{i}" for i in range(1, n)])
    b.arrow("alpha", 0, 0)
    B = _cycle(b, "beta", n, "0", "b")
    b.rel(["alpha", "alpha"], (-1, B + B))
    b.rel(["alpha", B[0]])
    b.rel([B[-1], "alpha"])
    for j in range(2, n + 1):
        b.rel(B[j - 1:] + B + B[:j])
    return b.build()


def _gamma_n(F, ps, lam):
    n = ps.n
    b = _Builder(F, ["0"] + [f"b{i}" for i in range(1, n)] + ["x", "y"])
    B = _cycle(b, "beta", n, "0", "b")
    b.arrow("alpha1", 0, "x")
    b.arrow("alpha2", "x", 0)
    b.arrow("gamma1", 0, "y")
    b.arrow("gamma2", "y", 0)
    b.rel(["alpha1", "alpha2"], (-1, B + B))
    b.rel(B + B, (-1, ["gamma1", "gamma2"]))
    b.rel(["alpha2", B[0]])
    b.rel(["gamma2", B[0]])
    b.rel([B[-1], "alpha1"])
    b.rel([B[-1], "gamma1"])
    b.rel(["alpha2", "gamma1"])
    b.rel(["gamma2", "alpha1"])
    for j in range(2, n + 1):
        b.rel(B[j - 1:] + B + B[:j])
    return b.build()


def _omega_n(F, ps, lam):
    n = ps.n
    b = _Builder(F, ["0"] + [f"b{i}" for i in range(1, n)])
    b.arrow("alpha", 0, 0)
    B = _cycle(b, "beta", n, "0", "b")
    b.rel(["alpha", "alpha"], (-1, ["alpha"] + B))
    b.rel(["alpha"] + B, B + ["alpha"])
    b.rel([B[-1], B[0]])
    # As published these long relations already follow from beta_n beta_1 = 0,
    # and for n >= 3 the quotient is not selfinjective (see the README).
    for j in range(2, n + 1):
        b.rel(B[j - 1:] + B + B[:j])
    return b.build()


def _q2_1(F):
    b = _Builder(F, ["1", "2"])
    b.arrow("alpha", 1, 1)
    b.arrow("beta", 2, 1)
    b.arrow("gamma", 1, 2)
    return b


def _l2(F, ps, lam):
    b = _q2_1(F)
    b.rel(["alpha", "alpha", "gamma"])
    b.rel(["beta", "alpha", "alpha"])
    b.rel(["gamma", "beta", "gamma"])
    b.rel(["beta", "gamma", "beta"])
    b.rel(["beta", "gamma"], (-1, ["beta", "alpha", "gamma"]))
    b.rel(["alpha"] * 3, (-1, ["gamma", "beta"]))
    return b.build()


def _l2p(F, ps, lam):
    b = _q2_1(F)
    b.rel(["alpha", "alpha", "gamma"])
    b.rel(["beta", "alpha", "alpha"])
    b.rel(["beta", "gamma"])
    b.rel(["alpha"] * 3, (-1, ["gamma", "beta"]))
    return b.build()


def _q2_2(F):
    b = _Builder(F, ["1", "2"])
    b.arrow("alpha", 1, 1)
    b.arrow("beta", 2, 2)
    b.arrow("gamma", 2, 1)
    b.arrow("sigma", 1, 2)
    return b


def _l3(F, ps, lam):
    b = _q2_2(F)
    b.rel(["alpha"] * 4)
    b.rel(["gamma", "alpha", "alpha"])
    b.rel(["alpha", "alpha", "sigma"])
    b.rel(["alpha", "alpha"], (-1, ["sigma", "gamma"]), (-1, ["alpha"] * 3))
    b.rel((lam, ["beta", "beta"]), (-1, ["gamma", "sigma"]))
    b.rel(["gamma", "alpha"], (-1, ["beta", "gamma"]))
    b.rel(["sigma", "beta"], (-1, ["alpha", "sigma"]))
    return b.build()


def _l3p(F, ps, lam):
    b = _q2_2(F)
    b.rel(["alpha", "alpha"], (-1, ["sigma", "gamma"]))
    b.rel((lam, ["beta", "beta"]), (-1, ["gamma", "sigma"]))
    b.rel(["gamma", "alpha"], (-1, ["beta", "gamma"]))
    b.rel(["sigma", "beta"], (-1, ["alpha", "sigma"]))
    return b.build()


def _q3_1(F):
    b = _Builder(F, ["1", "2", "3"])
    b.arrow("alpha", 2, 2)
    b.arrow("beta", 1, 2)
    b.arrow("gamma", 2, 1)
    b.arrow("delta", 2, 3)
    b.arrow("sigma", 3, 2)
    return b


def _l5_common(b):
    b.rel(["alpha", "alpha"], (-1, ["gamma", "beta"]))
    b.rel(["alpha"] * 3, (-1, ["delta", "sigma"]))
    b.rel(["beta", "delta"])
    b.rel(["sigma", "gamma"])
    b.rel(["alpha", "delta"])
    b.rel(["sigma", "alpha"])


def _l5(F, ps, lam):
    b = _q3_1(F)
    _l5_common(b)
    b.rel(["gamma", "beta", "gamma"])
    b.rel(["beta", "gamma", "beta"])
    b.rel(["beta", "gamma"], (-1, ["beta", "alpha", "gamma"]))
    return b.build()


def _l5p(F, ps, lam):
    b = _q3_1(F)
    _l5_common(b)
    b.rel(["beta", "gamma"])
    return b.build()


def _q3_2(F):
    b = _Builder(F, ["1", "2", "3", "4"])
    b.arrow("alpha", 1, 2)
    b.arrow("beta", 2, 1)
    b.arrow("gamma", 4, 2)
    b.arrow("delta", 2, 4)
    b.arrow("epsilon", 2, 3)
    b.arrow("xi", 3, 2)
    b.rel(["beta", "alpha"], ["delta", "gamma"], ["epsilon", "xi"])
    return b


def _l9(F, ps, lam):
    b = _q3_2(F)
    b.rel(["gamma", "delta"])
    b.rel(["xi", "epsilon"])
    b.rel(["alpha", "beta", "alpha"])
    b.rel(["beta", "alpha", "beta"])
    b.rel(["alpha", "beta"], (-1, ["alpha", "delta", "gamma", "beta"]))
    return b.build()


def _l9p(F, ps, lam):
    b = _q3_2(F)
    b.rel(["gamma", "delta"])
    b.rel(["xi", "epsilon"])
    b.rel(["alpha", "beta"])
    return b.build()


def _a4(F, ps, lam):
    b = _q3_2(F)
    b.rel(["alpha", "beta"])
    b.rel(["gamma", "epsilon"])
    b.rel(["xi", "delta"])
    return b.build()


def _a1(F, ps, lam):
    b = _Builder(F, ["1", "2", "3"])
    b.arrow("alpha", 1, 2)
    b.arrow("beta", 3, 2)
    b.arrow("gamma", 2, 1)
    b.arrow("sigma", 2, 3)
    mlam = F.neg(lam)
    b.rel(["alpha", "gamma", "alpha"], (-1, ["alpha", "sigma", "beta"]))
    b.rel(["beta", "gamma", "alpha"], (mlam, ["beta", "sigma", "beta"]))
    b.rel(["gamma", "alpha", "gamma"], (-1, ["sigma", "beta", "gamma"]))
    b.rel(["gamma", "alpha", "sigma"], (mlam, ["sigma", "beta", "sigma"]))
    return b.build()


LAMBDA_NONZERO = "$\\lambda\\in K\\backslash \\{0\\}$"
LAMBDA_NOT_01 = "$\\lambda \\in K \\backslash\\{0, 1\\}$"
PQ_ORDER = "$1\\leq p\\leq q$"
PQ_SUM = "$p+q\\geq 3$"
N_GE_1 = "$n\\geq 1$"
N_GE_2 = "$n\\geq 2$"

_SB_QUOTE = "except $\\Gamma(n)$, all algebras are special biserial"

ENTRIES: dict[str, CatalogEntry] = {
    e.family: e
    for e in [
        CatalogEntry("A_lambda", "A(λ)", ("lam",), "λ ≠ 0", LAMBDA_NONZERO,
                     "lambda = 1 only", True, True, "any",
                     "All these algebras except $A(\\lambda)$ ... are symmetric", {"lam": "nonzero"}),
        CatalogEntry("A_pq", "A(p,q)", ("p", "q"), "1 ≤ p ≤ q, p+q ≥ 3", f"{PQ_ORDER}, {PQ_SUM}",
                     "yes", True, True, "any", _SB_QUOTE, {"p": 1, "q": 2}),
        CatalogEntry("Lambda_n", "Λ(n)", ("n",), "n ≥ 2", N_GE_2,
                     "yes", True, True, "any", _SB_QUOTE, {"n": 2}),
        CatalogEntry("Gamma_n", "Γ(n)", ("n",), "n ≥ 1", N_GE_1,
                     "yes", True, False, "any", _SB_QUOTE, {"n": 1}),
        CatalogEntry("Omega_n", "Ω(n)", ("n",), "n ≥ 1", N_GE_1,
                     "char 2 only", True, False, "any",
                     "it is symmetric only when the characteristic of the base field is $2$; "
                     "$\\Omega(n)$ is not special biserial", {"n": 1}),
        CatalogEntry("L2", "Λ₂", (), "none", "", "yes", True, None, "non-standard in characteristic 3",
                     "If the base field is of characteristic $3$, then $A$ is derived equivalent to $\\Lambda_2$"),
        CatalogEntry("L2p", "Λ₂′", (), "none", "", "yes", True, None, "any",
                     "two simple modules: $\\Lambda_2'$"),
        CatalogEntry("L3_lambda", "Λ₃(λ)", ("lam",), "λ ∉ {0, 1}", LAMBDA_NOT_01,
                     "yes", True, None, "non-standard in characteristic 2",
                     "$A$ is derived equivalent to $\\Lambda_3(\\lambda)$", {"lam": "smallest"}),
        CatalogEntry("L3p_lambda", "Λ₃′(λ)", ("lam",), "λ ∉ {0, 1}", LAMBDA_NOT_01,
                     "yes", True, None, "any",
                     "$\\Lambda_3'(\\lambda), \\lambda \\in K \\backslash\\{0, 1\\}$", {"lam": "smallest"}),
        CatalogEntry("L5", "Λ₅", (), "none", "", "yes", True, None, "non-standard in characteristic 2",
                     "$A$ is derived equivalent to $\\Lambda_5$"),
        CatalogEntry("L5p", "Λ₅′", (), "none", "", "yes", True, None, "any",
                     "three simple modules: $\\Lambda_5'$"),
        CatalogEntry("L9", "Λ₉", (), "none", "", "yes", True, None, "non-standard in characteristic 2",
                     "$A$ is derived equivalent to $\\Lambda_9$"),
        CatalogEntry("L9p", "Λ₉′", (), "none", "", "char 2 only", True, None, "any",
                     "except $\\Lambda_9'$ in case the characteristic of the base field $K$ is "
                     "different from $2$, all algebras are symmetric"),
        CatalogEntry("A1_lambda", "A₁(λ)", ("lam",), "λ ∉ {0, 1}", LAMBDA_NOT_01,
                     "yes", True, None, "any",
                     "$A_1(\\lambda), \\lambda \\in  K \\backslash \\{0, 1\\}$", {"lam": "smallest"}),
        CatalogEntry("A4", "A₄", (), "none", "", "yes", True, None, "any",
                     "four simple modules: $\\Lambda_9'$  and $A_4$"),
    ]
}

_BUILDERS: dict[str, Callable] = {
    "A_lambda": _a_lambda, "A_pq": _a_pq, "Lambda_n": _lambda_n, "Gamma_n": _gamma_n,
    "Omega_n": _omega_n, "L2": _l2, "L2p": _l2p, "L3_lambda": _l3, "L3p_lambda": _l3p,
    "L5": _l5, "L5p": _l5p, "L9": _l9, "L9p": _l9p, "A1_lambda": _a1, "A4": _a4,
}

FAMILIES = tuple(ENTRIES)


def list_families() -> list[CatalogEntry]:
    return [ENTRIES[f] for f in FAMILIES]


def smallest_lambda(field: FieldSpec, exclude_one: bool = True):
    """Smallest admissible scalar: 2 over the rationals, otherwise the
    first field element (in encoding order) outside {0, 1}."""
    if field.characteristic == 0:
        return field.from_int(2)
    for x in field.elements():
        if x != 0 and (x != 1 or not exclude_one):
            return x
    raise CatalogError(f"{field} has no element outside {{0, 1}}; use an extension field")


def _scalar(field: FieldSpec, value):
    if isinstance(value, str):
        return field.parse(value)
    if isinstance(value, (int, Fraction)):
        return field.coerce(value)
    return value


def instantiate(family: str, params: ParamSet | dict | None, field: FieldSpec) -> Presentation:
    if family not in ENTRIES:
        raise CatalogError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    entry = ENTRIES[family]
    if params is None:
        params = ParamSet()
    elif isinstance(params, dict):
        params = ParamSet.from_pairs(params)
    for name in ("n", "p", "q", "lam"):
        if getattr(params, name) is not None and name not in entry.params:
            raise CatalogError(f"{entry.display} takes no parameter {name!r}")
    for name in entry.params:
        if getattr(params, name) is None:
            raise CatalogError(f"{entry.display} needs parameter {name!r} ({entry.constraint})")
    lam = None
    if "lam" in entry.params:
        try:
            lam = _scalar(field, params.lam)
        except (FieldError, ZeroDivisionError) as exc:
            raise CatalogError(f"λ = {params.lam!r} is not an element of {field}: {exc}") from exc
        _require(not field.is_zero(lam), f"λ must be nonzero: {entry.constraint_quote}")
        if entry.constraint == "λ ∉ {0, 1}":
            _require(lam != field.one, f"λ must differ from 1: {entry.constraint_quote}")
    if family == "A_pq":
        _require(1 <= params.p <= params.q, f"need 1 ≤ p ≤ q: {PQ_ORDER}")
        _require(params.p + params.q >= 3, f"need p+q ≥ 3: {PQ_SUM}")
    if family == "Lambda_n":
        _require(params.n >= 2, f"need n ≥ 2: {N_GE_2}")
    if family in ("Gamma_n", "Omega_n"):
        _require(params.n >= 1, f"need n ≥ 1: {N_GE_1}")
    return _BUILDERS[family](field, params, lam)


def smallest_params(family: str, field: FieldSpec) -> ParamSet:
    entry = ENTRIES[family]
    kw = dict(entry.smallest)
    if kw.get("lam") == "smallest":
        kw["lam"] = smallest_lambda(field)
    elif kw.get("lam") == "nonzero":
        kw["lam"] = smallest_lambda(field, exclude_one=False)
    return ParamSet(**kw)

"""Exact base fields: GF(p), GF(p^k) and the rationals.

Field elements are plain Python values so that matrices and structure
constants stay cheap to store and hash:

* GF(p): ``int`` in ``range(p)``
* GF(p^k): ``int`` encoding ``sum(c_i * p**i)``, i.e. the coefficient
  vector of a polynomial in the generator ``t`` written in base ``p``
* rationals: ``fractions.Fraction`` (always in lowest terms)

All arithmetic goes through the :class:`FieldSpec` that owns the element.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

# Fields up to this size get full addition/multiplication tables.
TABLE_LIMIT = 1024
# Fields up to this size get exp/log tables for multiplication.
LOG_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over GF(p), coefficient lists low -> high ------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or test: ``f`` of degree k is irreducible iff
    gcd(x^(p^i) - x, f) = 1 for every i <= k // 2."""
    f = _trim([c % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    xp = [0, 1]
    for _ in range(k // 2):
        xp = _poly_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree k over GF(p), in
    base-p counting order of its lower coefficients."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue
        cand = tuple(coeffs) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    degree: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        p, k = self.characteristic, self.degree
        if p != 0 and not is_prime(p):
            raise FieldError(f"characteristic {p} is neither 0 nor prime")
        if k < 1:
            raise FieldError("degree must be positive")
        if p == 0 and k != 1:
            raise FieldError("the rationals have degree 1")
        if k > 1:
            if self.modulus is None or len(self.modulus) != k + 1:
                raise FieldError(f"GF({p}^{k}) needs a modulus with {k + 1} coefficients")
            mod = tuple(c % p for c in self.modulus)
            if mod[-1] != 1:
                raise FieldError("modulus must be monic")
            if not is_irreducible(mod, p):
                raise FieldError(f"modulus {list(self.modulus)} is reducible over GF({p})")
            object.__setattr__(self, "modulus", mod)
        elif self.modulus is not None:
            if len(self.modulus) != 2 and p != 0:
                raise FieldError("modulus given for a prime field must be linear")
            object.__setattr__(self, "modulus", None)

    # -- constructors -------------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def gf(cls, p: int, k: int = 1, modulus: Sequence[int] | None = None) -> "FieldSpec":
        if k == 1:
            return cls(p)
        if modulus is None:
            modulus = find_irreducible(p, k)
        return cls(p, k, tuple(modulus))

    # -- basic properties ---------------------------------------------------

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0 and self.degree == 1

    @property
    def order(self) -> int | None:
        if self.characteristic == 0:
            return None
        return self.characteristic**self.degree

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "QQ"
        if self.degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.degree})"

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    @property
    def generator(self):
        """The class of ``t`` in GF(p)[t]/(modulus); 1 for other fields."""
        if self.degree > 1:
            return self.characteristic
        return self.one

    # -- extension field internals -----------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.characteristic
        out = []
        for _ in range(self.degree):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, digits: Sequence[int]) -> int:
        p = self.characteristic
        a = 0
        for c in reversed(list(digits)[: self.degree]):
            a = a * p + c % p
        return a

    def _poly_mul_raw(self, a: int, b: int) -> int:
        p = self.characteristic
        prod = _poly_mul(self._digits(a), self._digits(b), p)
        return self._undigits(_poly_mod(prod, list(self.modulus), p) + [0] * self.degree)

    def _add_raw(self, a: int, b: int) -> int:
        p = self.characteristic
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _neg_raw(self, a: int) -> int:
        p = self.characteristic
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            out += ((-a) % p) * scale
            a //= p
            scale *= p
        return out

    @cached_property
    def _tables(self):
        """exp/log tables (and small add tables) for GF(p^k)."""
        q = self.order
        if q > LOG_LIMIT:
            return None
        # find a primitive element by brute force
        factors = [f for f in range(2, q) if (q - 1) % f == 0 and is_prime(f)]
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // f) != 1 for f in factors):
                break
        else:
            g = 1  # q == 2 cannot happen for degree > 1
        exp = [0] * (2 * q)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._poly_mul_raw(x, g)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        add = None
        if q <= TABLE_LIMIT and self.characteristic != 2:
            add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        return exp, log, add

    def _pow_slow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul_raw(result, base)
            base = self._poly_mul_raw(base, base)
            e >>= 1
        return result

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        p = self.characteristic
        if self.degree == 1:
            return a + b if p == 0 else (a + b) % p
        if p == 2:
            return a ^ b
        t = self._tables
        if t is not None and t[2] is not None:
            return t[2][a][b]
        return self._add_raw(a, b)

    def neg(self, a):
        p = self.characteristic
        if self.degree == 1:
            return -a if p == 0 else (-a) % p
        return self._neg_raw(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        p = self.characteristic
        if self.degree == 1:
            return a * b if p == 0 else a * b % p
        if a == 0 or b == 0:
            return 0
        t = self._tables
        if t is not None:
            exp, log, _ = t
            return exp[log[a] + log[b]]
        return self._poly_mul_raw(a, b)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p == 0:
            return 1 / Fraction(a)
        if self.degree == 1:
            return pow(a, p - 2, p)
        t = self._tables
        if t is not None:
            exp, log, _ = t
            q = self.order
            return exp[(q - 1 - log[a]) % (q - 1)]
        return self._pow_slow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        p = self.characteristic
        if p == 0:
            return Fraction(a) ** e
        if self.degree == 1:
            return pow(a, e, p)
        if a == 0:
            return 0 if e else 1
        t = self._tables
        if t is not None:
            exp, log, _ = t
            return exp[(log[a] * e) % (self.order - 1)]
        return self._pow_slow(a, e)

    def frob(self, a, times: int = 1):
        """a -> a^(p^times); identity on prime fields."""
        if self.degree == 1 or times == 0:
            return a
        return self.pow(a, self.characteristic ** (times % self.degree))

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        p = self.characteristic
        if p == 0:
            return Fraction(n)
        return n % p

    def coerce(self, a):
        """Accept an int/Fraction (or an element already in this field)."""
        if self.characteristic == 0:
            return Fraction(a)
        if isinstance(a, Fraction):
            if a.denominator % self.characteristic == 0:
                raise FieldError(f"{a} is not defined in {self}")
            return self.div(self.from_int(a.numerator), self.from_int(a.denominator))
        if self.degree > 1:
            if not 0 <= a < self.order:
                raise FieldError(f"{a} does not encode an element of {self}")
            return a
        return a % self.characteristic

    def from_coeffs(self, coeffs: Sequence[int]):
        """Element sum(coeffs[i] * t**i); for prime fields only coeffs[0]."""
        if self.degree == 1:
            if any(coeffs[1:]):
                raise FieldError(f"{self} has no generator t")
            return self.from_int(coeffs[0] if coeffs else 0)
        p = self.characteristic
        reduced = _poly_mod([c % p for c in coeffs], list(self.modulus), p)
        return self._undigits(reduced + [0] * self.degree)

    def elements(self) -> Iterator:
        if self.characteristic == 0:
            raise FieldError("the rationals are infinite")
        return iter(range(self.order))

    def random_element(self, rng: random.Random, bound: int = 1 << 20):
        if self.characteristic == 0:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.order)

    def prime_subfield_coords(self, a) -> list[int]:
        """Coordinates over GF(p) in the basis 1, t, ..., t^(k-1)."""
        if self.degree == 1:
            return [a]
        return self._digits(a)

    def from_prime_coords(self, coords: Sequence[int]):
        if self.degree == 1:
            return coords[0] % self.characteristic
        return self._undigits(coords)

    # -- text ---------------------------------------------------------------

    def format(self, a) -> str:
        if self.characteristic == 0:
            a = Fraction(a)
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if self.degree == 1:
            return str(a)
        digits = self._digits(a)
        terms = []
        for i in reversed(range(self.degree)):
            c = digits[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str):
        """Parse an integer, a fraction ``a/b``, or a polynomial in ``t``
        such as ``t^2+2*t+1`` (optionally parenthesised)."""
        s = text.replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if not s:
            raise FieldError("empty scalar")
        if "t" not in s:
            if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
                raise FieldError(f"cannot parse scalar {text!r}")
            value = Fraction(s)
            try:
                return self.coerce(value)
            except (FieldError, ZeroDivisionError) as exc:
                raise FieldError(f"scalar {text!r} is not in {self}") from exc
        if self.degree == 1:
            raise FieldError(f"scalar {text!r} uses t but {self} is a prime field")
        coeffs: dict[int, int] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?t(?:\^(\d+))?|(\d+)", body)
            if not m:
                raise FieldError(f"cannot parse scalar {text!r}")
            if m.group(3) is not None:
                c, e = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                e = int(m.group(2)) if m.group(2) else 1
            if sign == "-":
                c = -c
            coeffs[e] = coeffs.get(e, 0) + c
        top = max(coeffs)
        return self.from_coeffs([coeffs.get(i, 0) for i in range(top + 1)])

    def to_json(self, a):
        if self.characteristic == 0:
            a = Fraction(a)
            return a.numerator if a.denominator == 1 else self.format(a)
        if self.degree == 1:
            return a
        return self.format(a)

    def from_json(self, value):
        if isinstance(value, int):
            return self.coerce(value)
        return self.parse(str(value))

    def describe(self) -> dict:
        out = {"char": self.characteristic, "degree": self.degree}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out

    @classmethod
    def from_description(cls, d: dict) -> "FieldSpec":
        mod = d.get("modulus")
        return cls(d["char"], d.get("degree", 1), tuple(mod) if mod else None)


QQ = FieldSpec.rationals()


def extension_of(field: FieldSpec, min_order: int) -> tuple[FieldSpec, callable]:
    """A finite extension L of ``field`` with |L| >= min_order, plus the
    embedding field -> L."""
    p = field.characteristic
    if p == 0:
        raise FieldError("no finite extension of the rationals")
    k = field.degree
    m = 1
    while field.order**m < min_order:
        m += 1
    if m == 1:
        return field, lambda a: a
    big = FieldSpec.gf(p, k * m)
    if k == 1:
        return big, lambda a: a
    # image of t: a root of the base modulus inside the big field
    mod = field.modulus
    root = None
    for x in big.elements():
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, x), big.from_int(c))
        if acc == 0:
            root = x
            break
    if root is None:  # pragma: no cover - degree k divides k*m
        raise FieldError("embedding not found")
    powers = [big.pow(root, i) for i in range(k)]

    def embed(a):
        acc = 0
        for c, r in zip(field.prime_subfield_coords(a), powers):
            if c:
                acc = big.add(acc, big.mul(big.from_int(c), r))
        return acc

    return big, embed

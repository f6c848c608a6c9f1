"""Search for symmetrizing (and Frobenius) forms, and the orthogonal
quotients Z(A)/T_n(A)^perp that they give access to.

A linear functional f on A defines the associative bilinear form
(x, y) -> f(xy). It is symmetric exactly when f vanishes on [A,A], and
nondegenerate exactly when its Gram matrix is invertible. The set of good
functionals is the complement of a determinant hypersurface, so random
points find one with high probability whenever it is nonempty; a miss is
reported as :class:`NotFound` with a Schwartz-Zippel failure bound.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FDAlgebra
from .fields import FieldSpec, extension_of
from .invariants import (
    commutator_space,
    center,
    kulshammer_tower,
    orthogonal_space,
    right_socle,
)
from .linalg import Matrix, Subspace, annihilator, rank

# Random draws come from a field with at least this many elements.
MIN_SAMPLE_FIELD = 16
# Enumerate all base-field functionals when there are at most this many.
EXHAUSTIVE_LIMIT = 4096


@dataclass(frozen=True)
class BilinearFormData:
    functional: tuple
    gram: Matrix
    symmetric: bool
    nondegenerate: bool

    def __bool__(self) -> bool:
        return True

    def value(self, x) -> object:
        F = self.gram.field
        acc = F.zero
        for f, c in zip(self.functional, x):
            if f and c:
                acc = F.add(acc, F.mul(f, c))
        return acc


@dataclass(frozen=True)
class NotFound:
    """No nondegenerate form was met. If one existed over the algebraic
    closure, each draw would have missed with probability at most
    ``dim A / |sample field|``; ``failure_bound`` is that to the power
    ``samples``."""

    samples: int
    sample_field: str
    failure_bound: float
    exists_over_extension: bool = False

    def __bool__(self) -> bool:
        return False

    @property
    def confidence(self) -> float:
        return 1.0 - self.failure_bound


def gram_matrix(a: FDAlgebra, functional, field: FieldSpec | None = None, embed=None) -> Matrix:
    """gram[i][j] = f(b_i b_j); ``field``/``embed`` evaluate over an
    extension when the functional has coordinates there."""
    F = field or a.field
    emb = embed or (lambda x: x)
    d = a.dim
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = F.zero
            for k, c in a.table[i][j]:
                fk = functional[k]
                if not F.is_zero(fk):
                    acc = F.add(acc, F.mul(fk, emb(c)))
            row.append(acc)
        rows.append(row)
    return Matrix(F, d, d, tuple(x for r in rows for x in r))


def _is_nondegenerate(gram: Matrix) -> bool:
    return rank(gram.field, gram.row_list(), gram.cols) == gram.rows


def _make(a: FDAlgebra, functional, comm: Subspace | None) -> BilinearFormData | None:
    g = gram_matrix(a, functional)
    if not _is_nondegenerate(g):
        return None
    F = a.field
    sym = all(
        F.is_zero(sum_products(F, functional, c)) for c in (comm.basis if comm is not None else commutator_space(a).basis)
    )
    return BilinearFormData(tuple(functional), g, sym, True)


def sum_products(F: FieldSpec, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def _socle_functional(a: FDAlgebra, space: Subspace):
    """Sum of the coordinate functionals of basis words lying in the socle,
    projected to ``space`` (it is kept only if it already lies there)."""
    soc = right_socle(a)
    F = a.field
    f = [F.zero] * a.dim
    for i in range(a.dim):
        if soc.contains(a.basis_vector(i)):
            f[i] = F.one
    return f if any(f) and space.contains(f) else None


def _combine(F: FieldSpec, space: Subspace, coeffs, embed) -> list:
    out = [F.zero] * space.ambient
    for c, b in zip(coeffs, space.basis):
        if F.is_zero(c):
            continue
        for k, x in enumerate(b):
            if x:
                out[k] = F.add(out[k], F.mul(c, embed(x)))
    return out


def _search(a: FDAlgebra, space: Subspace, seed: int, samples: int, comm: Subspace | None):
    F = a.field
    if space.dim == 0:
        return NotFound(0, str(F), 0.0)
    cand = _socle_functional(a, space)
    if cand is not None:
        form = _make(a, cand, comm)
        if form is not None:
            return form
    rng = random.Random(seed)
    d = a.dim
    if F.characteristic == 0 or F.order >= max(MIN_SAMPLE_FIELD, 2 * d):
        L, embed = F, (lambda x: x)
    else:
        L, embed = extension_of(F, max(MIN_SAMPLE_FIELD, 2 * d))
    hit_outside = False
    for _ in range(samples):
        coeffs = [L.random_element(rng) for _ in range(space.dim)]
        f = _combine(L, space, coeffs, embed)
        g = gram_matrix(a, f, L, embed)
        if not _is_nondegenerate(g):
            continue
        if L is F:
            return _make(a, f, comm)
        hit_outside = True
        break
    if hit_outside:
        form = _base_field_search(a, space, rng, samples, comm)
        if form is not None:
            return form
        return NotFound(samples, str(F), 0.0, exists_over_extension=True)
    order = L.order if L.characteristic else Fraction(2 * (1 << 20) + 1)
    bound = float(min(1, Fraction(d, 1) / order) ** samples)
    return NotFound(samples, str(L), bound)


def _base_field_search(a, space, rng, samples, comm):
    F = a.field
    r = space.dim
    ident = lambda x: x  # noqa: E731
    if F.order**r <= EXHAUSTIVE_LIMIT:
        pool = itertools.product(range(F.order), repeat=r)
    else:
        pool = ([F.random_element(rng) for _ in range(r)] for _ in range(16 * samples))
    for coeffs in pool:
        f = _combine(F, space, coeffs, ident)
        if any(f):
            form = _make(a, f, comm)
            if form is not None:
                return form
    return None


def find_symmetrizing_form(
    a: FDAlgebra, seed: int = 0, samples: int = 64, commutators: Subspace | None = None
) -> BilinearFormData | NotFound:
    """A nondegenerate functional vanishing on [A,A], or NotFound."""
    comm = commutators if commutators is not None else commutator_space(a)
    space = annihilator(a.field, a.dim, list(comm.basis))
    return _search(a, space, seed, samples, comm)


def find_frobenius_form(a: FDAlgebra, seed: int = 0, samples: int = 64) -> BilinearFormData | NotFound:
    """A nondegenerate associative form (any functional), or NotFound."""
    return _search(a, Subspace.full(a.field, a.dim), seed, samples, None)


class FormError(ValueError):
    pass


def orthogonal_quotient_dims(a: FDAlgebra, form: BilinearFormData, n_max: int, tower=None) -> list[int]:
    """dim Z(A) - dim T_n(A)^perp for n = 1..n_max."""
    if not form or not form.symmetric or not form.nondegenerate:
        raise FormError("orthogonal quotients need a symmetric nondegenerate form")
    if not _is_nondegenerate(form.gram):
        raise FormError("form is degenerate")
    comm = commutator_space(a)
    F = a.field
    if any(not F.is_zero(sum_products(F, form.functional, c)) for c in comm.basis):
        raise FormError("form is not symmetric")
    tower = tower or kulshammer_tower(a, n_max, comm)
    z = center(a)
    out = []
    for n in range(1, n_max + 1):
        perp = orthogonal_space(a, form.gram, tower.spaces[n - 1])
        if not perp.issubspace(z):
            raise AssertionError(f"T_{n}^perp is not central")
        out.append(z.dim - perp.dim)
    return out

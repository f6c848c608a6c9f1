"""Cartan data, commutators, centre, Kuelshammer spaces, radical and socle
structure, and structural predicates of an :class:`FDAlgebra`."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import FDAlgebra
from .linalg import Matrix, Subspace, annihilator, rank_kernel, semilinear_kernel
from .smith import IntMatrix, determinant, smith_normal_form


@dataclass(frozen=True)
class CartanData:
    matrix: IntMatrix
    determinant: int
    elementary_divisors: tuple[int, ...]


def cartan(a: FDAlgebra) -> CartanData:
    """C[i][j] = dim e_i A e_j, counted on the path basis."""
    n = a.num_vertices
    c = [[0] * n for _ in range(n)]
    for b in a.basis:
        c[b.source][b.target] += 1
    m = IntMatrix.from_rows(c)
    return CartanData(m, determinant(m), tuple(smith_normal_form(m)))


def _basis_commutator(a: FDAlgebra, i: int, j: int) -> list:
    F = a.field
    v = a.zero()
    for k, c in a.basis_product(i, j):
        v[k] = F.add(v[k], c)
    for k, c in a.basis_product(j, i):
        v[k] = F.sub(v[k], c)
    return v


def commutator_space(a: FDAlgebra) -> Subspace:
    vecs = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            v = _basis_commutator(a, i, j)
            if any(v):
                vecs.append(v)
    return Subspace.span(a.field, a.dim, vecs)


def generators(a: FDAlgebra) -> list[int]:
    """Basis indices of the idempotents and of the arrows that survive as
    basis words; together they generate the algebra."""
    gens = list(a.idempotents)
    for i, b in enumerate(a.basis):
        if len(b) == 1:
            gens.append(i)
    return gens


def _left_right_maps(a: FDAlgebra, g: int):
    """Columns of x -> x g - g x for basis x."""
    cols = []
    for j in range(a.dim):
        cols.append(_basis_commutator(a, j, g))
    return cols


def center(a: FDAlgebra) -> Subspace:
    rows = []
    for g in generators(a):
        cols = _left_right_maps(a, g)
        rows.extend([cols[j][k] for j in range(a.dim)] for k in range(a.dim))
    if not rows:
        return Subspace.full(a.field, a.dim)
    return rank_kernel(Matrix.from_rows(a.field, rows, a.dim))[1]


@dataclass(frozen=True)
class KulshammerTower:
    characteristic: int
    dims: tuple[int, ...]  # dims[n - 1] = dim T_n(A)/[A,A]
    commutator_dim: int
    spaces: tuple[Subspace, ...] = dc_field(default=(), compare=False, repr=False)

    def dim(self, n: int) -> int:
        return self.dims[n - 1]


class NotApplicable(ValueError):
    pass


def kulshammer_tower(a: FDAlgebra, n_max: int, commutators: Subspace | None = None) -> KulshammerTower:
    """T_n(A) = {x : x^(p^n) in [A,A]} for n = 1..n_max.

    x -> x^(p^n) is Frobenius-semilinear modulo [A,A], so T_n/[A,A] is the
    kernel of a semilinear map on A/[A,A]."""
    F = a.field
    p = F.characteristic
    if p == 0:
        raise NotApplicable("T_n defined only in positive characteristic")
    C = commutators if commutators is not None else commutator_space(a)
    comp = C.complement_indices()
    r = len(comp)
    dims, spaces = [], []
    for n in range(1, n_max + 1):
        cols = []
        for j in comp:
            img = C.reduce(a.power(a.basis_vector(j), p**n))
            cols.append([img[k] for k in comp])
        m = Matrix.from_rows(F, [[cols[j][i] for j in range(r)] for i in range(r)], r)
        ker = semilinear_kernel(m, n)
        dims.append(ker.dim)
        lifts = []
        for v in ker.basis:
            x = a.zero()
            for j, c in zip(comp, v):
                x[j] = c
            lifts.append(x)
        spaces.append(Subspace.span(F, a.dim, list(C.basis) + lifts))
    return KulshammerTower(p, tuple(dims), C.dim, tuple(spaces))


# -- radical and socle --------------------------------------------------------

@dataclass(frozen=True)
class RadicalSocle:
    radical_powers: tuple[Subspace, ...]  # J^1, J^2, ..., last one nonzero
    socle: Subspace
    loewy_length: int
    socle_profile: tuple[tuple[int, ...], ...]  # [i][j] = dim soc(e_i A) e_j


def radical(a: FDAlgebra) -> Subspace:
    F = a.field
    vecs = [a.basis_vector(i) for i in range(a.num_vertices, a.dim)]
    return Subspace.span(F, a.dim, vecs)


def radical_socle(a: FDAlgebra) -> RadicalSocle:
    F = a.field
    J = radical(a)
    powers = []
    cur = J
    words = range(a.num_vertices, a.dim)
    while cur.dim:
        powers.append(cur)
        prods = []
        for x in cur.basis:
            for w in words:
                prods.append(a.multiply(x, a.basis_vector(w)))
        cur = Subspace.span(F, a.dim, prods)
    loewy = len(powers) + 1 if a.dim else 0
    soc = right_socle(a)
    n = a.num_vertices
    profile = [[0] * n for _ in range(n)]
    for row, piv in zip(soc.basis, soc.pivots):
        b = a.basis[piv]
        profile[b.source][b.target] += 1
    return RadicalSocle(tuple(powers), soc, loewy, tuple(tuple(r) for r in profile))


def right_socle(a: FDAlgebra) -> Subspace:
    """{x : x J = 0}, the socle of A as a right module."""
    arrows = [i for i in range(a.num_vertices, a.dim)]
    rows = []
    for g in arrows:
        cols = [a.multiply(a.basis_vector(j), a.basis_vector(g)) for j in range(a.dim)]
        rows.extend([cols[j][k] for j in range(a.dim)] for k in range(a.dim))
    if not rows:
        return Subspace.full(a.field, a.dim)
    return rank_kernel(Matrix.from_rows(a.field, rows, a.dim))[1]


def reynolds_ideal(a: FDAlgebra, z: Subspace | None = None, soc: Subspace | None = None) -> Subspace:
    z = z if z is not None else center(a)
    soc = soc if soc is not None else right_socle(a)
    return z.intersection(soc)


def radical_of_center(a: FDAlgebra, z: Subspace | None = None) -> Subspace:
    z = z if z is not None else center(a)
    return z.intersection(radical(a))


# -- structural predicates ----------------------------------------------------

def _arrow_elements(a: FDAlgebra) -> list[list]:
    assert a.rewriting is not None
    return [a.element({(i,): 1}) for i in range(len(a.quiver.arrows))]


def is_special_biserial(a: FDAlgebra) -> bool:
    """At most two arrows start and end at each vertex, and each arrow has at
    most one nonzero continuation on either side."""
    Q = a.quiver
    outdeg = [0] * Q.num_vertices
    indeg = [0] * Q.num_vertices
    for arr in Q.arrows:
        outdeg[arr.source] += 1
        indeg[arr.target] += 1
    if max(outdeg, default=0) > 2 or max(indeg, default=0) > 2:
        return False
    elts = _arrow_elements(a)
    for i in range(len(Q.arrows)):
        after = sum(1 for j in range(len(Q.arrows)) if any(a.multiply(elts[i], elts[j])))
        before = sum(1 for j in range(len(Q.arrows)) if any(a.multiply(elts[j], elts[i])))
        if after > 1 or before > 1:
            return False
    return True


def _layer_dims(a: FDAlgebra, powers, side: str) -> list[list[int]]:
    """dims[i][k] = dim of e_i J^k / e_i J^(k+1) (side "right") or of
    J^k e_i / J^(k+1) e_i (side "left"), k = 0.."""
    n = a.num_vertices
    def count(sub: Subspace, i: int) -> int:
        # radical powers are vertex-homogeneous, so their echelon rows are too
        key = (lambda b: b.source) if side == "right" else (lambda b: b.target)
        return sum(1 for piv in sub.pivots if key(a.basis[piv]) == i)
    full = [sum(1 for b in a.basis if ((b.source if side == "right" else b.target) == i)) for i in range(n)]
    out = []
    for i in range(n):
        seq = [full[i]] + [count(P, i) for P in powers] + [0]
        out.append([seq[k] - seq[k + 1] for k in range(len(seq) - 1)])
    return out


def is_nakayama(a: FDAlgebra, rs: RadicalSocle | None = None) -> bool:
    rs = rs or radical_socle(a)
    for side in ("right", "left"):
        for layers in _layer_dims(a, rs.radical_powers, side):
            if any(x > 1 for x in layers):
                return False
    return True


@dataclass(frozen=True)
class StructuralFlags:
    local: bool
    commutative: bool
    special_biserial: bool
    nakayama: bool
    weakly_symmetric_socle: bool
    frobenius_certificate: bool
    frobenius_confidence: str  # "exact" or "probabilistic(<samples>)"
    symmetric_form: bool


def structural_flags(a: FDAlgebra, seed: int = 0, samples: int = 64) -> StructuralFlags:
    from .forms import find_frobenius_form, find_symmetrizing_form

    rs = radical_socle(a)
    comm = commutator_space(a)
    prof = rs.socle_profile
    wss = all(sum(prof[i]) == 1 and prof[i][i] == 1 for i in range(a.num_vertices))
    frob = find_frobenius_form(a, seed=seed, samples=samples)
    sym = find_symmetrizing_form(a, seed=seed, samples=samples, commutators=comm)
    return StructuralFlags(
        local=a.num_vertices == 1,
        commutative=comm.dim == 0,
        special_biserial=is_special_biserial(a),
        nakayama=is_nakayama(a, rs),
        weakly_symmetric_socle=wss,
        frobenius_certificate=bool(frob),
        frobenius_confidence="exact" if frob else f"probabilistic({samples})",
        symmetric_form=bool(sym),
    )


def orthogonal_space(a: FDAlgebra, gram: Matrix, sub: Subspace) -> Subspace:
    """{y : f(y t) = 0 for all t in sub}, with gram[i][j] = f(b_i b_j)."""
    F = a.field
    vecs = []
    for t in sub.basis:
        vecs.append(gram.apply(t))
    return annihilator(F, a.dim, vecs)

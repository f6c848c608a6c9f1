"""Independent reference computations used only by the tests.

Nothing here calls the package's linear algebra or rewriting code; field
arithmetic goes through ``FieldSpec`` (tested on its own) and elimination
is a plain textbook loop.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


# -- elimination ----------------------------------------------------------------

def echelon(F, vectors):
    """Row echelon basis of the span, as {pivot: row} (rows are dicts)."""
    pivots = {}
    for v in vectors:
        row = {j: x for j, x in v.items() if not F.is_zero(x)}
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = F.inv(row[lead])
                pivots[lead] = {j: F.mul(x, inv) for j, x in row.items()}
                break
            f = row[lead]
            for j, x in pivots[lead].items():
                y = F.sub(row.get(j, F.zero), F.mul(f, x))
                if F.is_zero(y):
                    row.pop(j, None)
                else:
                    row[j] = y
    return pivots


def span_dim(F, vectors) -> int:
    return len(echelon(F, vectors))


# -- degreewise quotient dimension -------------------------------------------

def _paths_up_to(quiver, n):
    out = [()]
    level = [(i,) for i in range(len(quiver.arrows))]
    for _ in range(n):
        out.extend(level)
        level = [w + (a,) for w in level for a in range(len(quiver.arrows))
                 if quiver.arrows[w[-1]].target == quiver.arrows[a].source]
    return out


def truncated_quotient_dim(pres, n: int) -> int:
    """dim KQ/(I + paths longer than n).

    The image of I in KQ/KQ_{>n} is spanned by truncations of u r v; it is
    computed as the closure of the truncated relations under left and right
    multiplication by arrows."""
    F, Q = pres.field, pres.quiver
    words = [w for w in _paths_up_to(Q, n) if w]
    index = {w: i for i, w in enumerate(words)}
    trivial = Q.num_vertices

    def trunc(poly):
        return {index[w]: c for w, c in poly.items() if len(w) <= n and not F.is_zero(c)}

    gens = [trunc(r) for r in pres.relations]
    piv = echelon(F, [g for g in gens if g])
    while True:
        new = []
        for row in piv.values():
            for a in range(len(Q.arrows)):
                left, right = {}, {}
                for j, c in row.items():
                    w = words[j]
                    if Q.arrows[a].target == Q.arrows[w[0]].source and len(w) < n:
                        left[index[(a,) + w]] = c
                    if Q.arrows[w[-1]].target == Q.arrows[a].source and len(w) < n:
                        right[index[w + (a,)]] = c
                new.extend(x for x in (left, right) if x)
        grown = echelon(F, list(piv.values()) + new)
        if len(grown) == len(piv):
            return trivial + len(words) - len(piv)
        piv = grown


def quotient_dim(pres, max_n: int = 40) -> int:
    """dim KQ/I by increasing the truncation degree until it stabilises
    (A/J^(n+1) = A/J^(n+2) forces J^(n+1) = 0)."""
    prev = truncated_quotient_dim(pres, 1)
    for n in range(2, max_n + 1):
        cur = truncated_quotient_dim(pres, n)
        if cur == prev:
            return cur
        prev = cur
    raise AssertionError("quotient did not stabilise")


# -- brute force over small finite fields ---------------------------------------

def all_elements(a):
    F = a.field
    return itertools.product(range(F.order), repeat=a.dim)


def brute_center_dim(a) -> int:
    """Count central elements by enumeration; returns log_q of the count."""
    F = a.field
    gens = [a.basis_vector(i) for i in range(a.dim)]
    count = 0
    for x in all_elements(a):
        x = list(x)
        if all(a.multiply(x, g) == a.multiply(g, x) for g in gens):
            count += 1
    return _log(count, F.order)


def brute_kulshammer_dim(a, commutator_vectors, n: int = 1) -> int:
    """dim T_n/[A,A] from the count of x with x^(p^n) in [A,A]."""
    F = a.field
    piv = echelon(F, [{j: x for j, x in enumerate(v) if x} for v in commutator_vectors])
    count = 0
    for x in all_elements(a):
        y = a.power(list(x), F.p**n)
        row = {j: c for j, c in enumerate(y) if c}
        while row:
            lead = min(row)
            if lead not in piv:
                break
            f = row[lead]
            for j, c in piv[lead].items():
                v = F.sub(row.get(j, F.zero), F.mul(f, c))
                if F.is_zero(v):
                    row.pop(j, None)
                else:
                    row[j] = v
        if not row:
            count += 1
    return _log(count, F.order) - len(piv)


def _log(count, q):
    k = 0
    while q**k < count:
        k += 1
    assert q**k == count, "set is not a subspace"
    return k


def brute_commutator_dim(a) -> int:
    F = a.field
    vecs = []
    for i in range(a.dim):
        for j in range(a.dim):
            x, y = a.basis_vector(i), a.basis_vector(j)
            d = a.sub(a.multiply(x, y), a.multiply(y, x))
            vecs.append({k: c for k, c in enumerate(d) if not F.is_zero(c)})
    return span_dim(F, vecs)


# -- first Hochschild cohomology via derivations ---------------------------------

def hh1_by_derivations(pres, a) -> int:
    """dim HH^1 = dim Der_E(A) - dim(inner derivations), where Der_E are the
    derivations killing the idempotents: they are determined by the images of
    the arrows, D(arrow) in e_s A e_t, subject to D(relation) = 0."""
    F, Q = a.field, a.quiver
    # unknowns: (arrow, basis index) with matching endpoints
    unknowns = [(arr, k) for arr, A_ in enumerate(Q.arrows) for k, b in enumerate(a.basis)
                if b.source == A_.source and b.target == A_.target]
    col = {u: i for i, u in enumerate(unknowns)}

    def word_elt(w):
        v = a.one()
        for x in w:
            v = a.multiply(v, a.element({(x,): 1}))
        return v

    equations: list[dict] = []
    for rel in pres.relations:
        # D(rel) as a linear map of the unknowns: one equation per output coordinate
        eq = [dict() for _ in range(a.dim)]
        for w, c in rel.items():
            for i, x in enumerate(w):
                left, right = word_elt(w[:i]), word_elt(w[i + 1:])
                for (arr, k), ci in col.items():
                    if arr != x:
                        continue
                    prod = a.multiply(a.multiply(left, a.basis_vector(k)), right)
                    for o, val in enumerate(prod):
                        if not F.is_zero(val):
                            eq[o][ci] = F.add(eq[o].get(ci, F.zero), F.mul(c, val))
        equations.extend(e for e in eq if e)
    der_e = len(unknowns) - span_dim(F, equations)
    diag = sum(1 for b in a.basis if b.source == b.target)
    center = brute_free_center_dim(a)
    return der_e - (diag - center)


def brute_free_center_dim(a) -> int:
    """dim Z(A) from the linear conditions x b = b x for all basis b,
    solved with the local elimination routine."""
    F = a.field
    eqs = []
    for j in range(a.dim):
        rows = [dict() for _ in range(a.dim)]
        for i in range(a.dim):
            for k, c in a.table[i][j]:
                rows[k][i] = F.add(rows[k].get(i, F.zero), c)
            for k, c in a.table[j][i]:
                rows[k][i] = F.sub(rows[k].get(i, F.zero), c)
        eqs.extend(r for r in rows if any(not F.is_zero(v) for v in r.values()))
    return a.dim - span_dim(F, eqs)


# -- integers --------------------------------------------------------------------

def leibniz_det(m) -> int:
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def minors_divisors(m) -> list[int]:
    """Elementary divisors from determinantal divisors: d_k = D_k / D_(k-1)
    with D_k the gcd of all k x k minors."""
    n = len(m)
    D = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, leibniz_det([[m[r][c] for c in cols] for r in rows]))
        D.append(g)
    out = []
    for k in range(1, n + 1):
        out.append(0 if D[k] == 0 else D[k] // D[k - 1])
    return out


def frac_rank(rows) -> int:
    """Rank over the rationals with plain Fraction elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank

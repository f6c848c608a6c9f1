"""Dimensions of Hochschild cohomology HH^i(A), i <= 3.

Two cochain complexes are available; both compute HH^*(A) over the base
field.

``method="unit"``
    The normalized bar complex Hom_K(Abar^{(x)n}, A) with Abar = A/K.1.
    Cochain dimensions are (d-1)^n d.

``method="radical"``
    The bar complex relative to the semisimple subalgebra E spanned by the
    vertex idempotents: Hom_{E-E}(J^{(x)_E n}, A), with J spanned by the
    nontrivial basis words. Since E is separable this computes the same
    groups, and the cochains only involve composable chains of arrows, which
    is far smaller on algebras with several vertices.

``method="auto"`` picks whichever model has the smaller estimated
differentials (ties go to the unit model). Both models agree on every
catalog algebra where both were run.

Differentials are assembled column by column (one column per cochain basis
element) and ranked by sparse elimination, bit-packed over GF(2).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import FDAlgebra
from .linalg import gf2_rank, sparse_rank

# Refuse a differential with more stored entries than this.
SIZE_GUARD = 2 * 10**8
MAX_DEGREE = 3


class SizeGuardError(RuntimeError):
    """A differential would be too large to store."""


@dataclass(frozen=True)
class HHDims:
    dims: tuple[int, ...]
    cochain_dims: tuple[int, ...]
    ranks: tuple[int, ...]  # ranks[n] = rank of the differential C^n -> C^(n+1)
    method: str

    def __getitem__(self, i: int) -> int:
        return self.dims[i]


class _Complex:
    """Cochain bases and differential columns for one of the two models."""

    def __init__(self, a: FDAlgebra, method: str):
        self.a = a
        F = a.field
        self.F = F
        s, d = a.num_vertices, a.dim
        self.method = method
        if method == "radical":
            self.letters = list(range(s, d))
            # outputs allowed for a chain from vertex u to vertex v
            self.outs = {}
            for k, b in enumerate(a.basis):
                self.outs.setdefault((b.source, b.target), []).append(k)
            self.pos = {k: i for lst in self.outs.values() for i, k in enumerate(lst)}
            # J-letter products as {(x, y): [(letter, coeff)]}; split table
            # {z: [(x, y, coeff)]} for the inner faces
            self.split: dict[int, list] = {z: [] for z in self.letters}
            for x in self.letters:
                for y in self.letters:
                    for z, c in a.table[x][y]:
                        self.split[z].append((x, y, c))
        elif method == "unit":
            # Abar has basis b_1..b_(d-1); e_0 = 1 - (e_1 + ... + e_(s-1))
            self.letters = list(range(1, d))
            self.split = {z: [] for z in self.letters}
            for x in self.letters:
                for y in self.letters:
                    conv: dict[int, object] = {}
                    for z, c in a.table[x][y]:
                        if z == 0:
                            # e_0 = 1 - sum of the other idempotents; 1 dies in Abar
                            for v in range(1, s):
                                conv[v] = F.sub(conv.get(v, F.zero), c)
                        else:
                            conv[z] = F.add(conv.get(z, F.zero), c)
                    for z, c in conv.items():
                        if not F.is_zero(c):
                            self.split[z].append((x, y, c))
        else:
            raise ValueError(f"unknown method {method!r}")
        self._chains: dict[int, list] = {}
        self._chain_index: dict[int, dict] = {}
        self._offsets: dict[int, list] = {}

    # -- cochain bases ------------------------------------------------------

    def chains(self, n: int) -> list[tuple]:
        """Degree-n argument tuples. In the radical model a chain is
        (source vertex, target vertex, letters)."""
        if n in self._chains:
            return self._chains[n]
        a = self.a
        if self.method == "unit":
            out = list(product(self.letters, repeat=n))
        elif n == 0:
            out = [(v, v, ()) for v in range(a.num_vertices)]
        elif n == 1:
            out = [(a.basis[x].source, a.basis[x].target, (x,)) for x in self.letters]
        else:
            out = []
            for c in self.chains(n - 1):
                for x in self.letters:
                    b = a.basis[x]
                    if c[1] == b.source:
                        out.append((c[0], b.target, c[2] + (x,)))
        self._chains[n] = out
        self._chain_index[n] = {c: i for i, c in enumerate(out)}
        offs, tot = [], 0
        for c in out:
            offs.append(tot)
            tot += self.n_outs(c)
        offs.append(tot)
        self._offsets[n] = offs
        return out

    def n_outs(self, chain) -> int:
        if self.method == "unit":
            return self.a.dim
        return len(self.outs.get((chain[0], chain[1]), ()))

    def cochain_dim(self, n: int) -> int:
        self.chains(n)
        return self._offsets[n][-1]

    def column(self, n: int, chain, out_index: int):
        """Coordinates of delta(phi) for phi sending ``chain`` to basis
        word ``out_index`` (and every other chain to 0)."""
        a, F = self.a, self.F
        nxt = self.chains(n + 1)
        idx, offs = self._chain_index[n + 1], self._offsets[n + 1]
        col: dict[int, object] = {}

        def put(ch, k, c):
            i = idx.get(ch)
            if i is None:
                return
            pos = k if self.method == "unit" else self.pos[k]
            j = offs[i] + pos
            v = F.add(col.get(j, F.zero), c)
            if F.is_zero(v):
                col.pop(j, None)
            else:
                col[j] = v

        if self.method == "unit":
            word = chain
            letters = self.letters
            # a_1 . phi(a_2..)
            for x in letters:
                for k, c in a.table[x][out_index]:
                    put((x,) + word, k, c)
            # inner faces
            for i, z in enumerate(word):
                sign = F.one if (i + 1) % 2 == 0 else F.neg(F.one)
                for x, y, c in self.split[z]:
                    put(word[:i] + (x, y) + word[i + 1:], out_index, F.mul(sign, c))
            sign = F.one if (n + 1) % 2 == 0 else F.neg(F.one)
            for x in letters:
                for k, c in a.table[out_index][x]:
                    put(word + (x,), k, F.mul(sign, c))
            return col

        u, v, word = chain
        for x in self.letters:
            bx = a.basis[x]
            if bx.target != u:
                continue
            for k, c in a.table[x][out_index]:
                put((bx.source, v, (x,) + word), k, c)
        for i, z in enumerate(word):
            sign = F.one if (i + 1) % 2 == 0 else F.neg(F.one)
            for x, y, c in self.split[z]:
                put((u, v, word[:i] + (x, y) + word[i + 1:]), out_index, F.mul(sign, c))
        sign = F.one if (n + 1) % 2 == 0 else F.neg(F.one)
        for x in self.letters:
            bx = a.basis[x]
            if bx.source != v:
                continue
            for k, c in a.table[out_index][x]:
                put((u, bx.target, word + (x,)), k, F.mul(sign, c))
        return col

    def outputs(self, chain) -> list[int]:
        if self.method == "unit":
            return list(range(self.a.dim))
        return self.outs.get((chain[0], chain[1]), [])

    def estimate_entries(self, n: int) -> int:
        """Upper bound on stored entries of the degree-n differential."""
        a = self.a
        t = max((len(e) for row in a.table for e in row), default=1) or 1
        width = max((len(v) for v in self.split.values()), default=0)
        per_col = 2 * len(self.letters) * t + n * width
        return self.cochain_dim(n) * per_col

    def rank(self, n: int) -> int:
        F = self.F
        cols = []
        for ch in self.chains(n):
            for k in self.outputs(ch):
                col = self.column(n, ch, k)
                if col:
                    cols.append(col)
        if F.is_prime_field and F.p == 2:
            packed = []
            for col in cols:
                x = 0
                for j in col:
                    x |= 1 << j
                packed.append(x)
            return gf2_rank(packed)
        return sparse_rank(F, cols)


def hochschild_dims(
    a: FDAlgebra, i_max: int = 2, method: str = "auto", guard: int = SIZE_GUARD
) -> HHDims:
    """dim HH^i(A) for i = 0..i_max."""
    if not 0 <= i_max <= MAX_DEGREE:
        raise ValueError(f"i_max must lie in 0..{MAX_DEGREE}")
    if method == "auto":
        unit, rad = _Complex(a, "unit"), _Complex(a, "radical")

        def cost(cx):
            return sum(cx.estimate_entries(n) for n in range(i_max + 1))

        cx = rad if cost(rad) < cost(unit) else unit
    else:
        cx = _Complex(a, method)
    # cheap size check before any elimination
    for n in range(i_max + 1):
        est = cx.estimate_entries(n)
        if est > guard:
            raise SizeGuardError(
                f"differential C^{n} -> C^{n + 1} is {cx.cochain_dim(n + 1)} x {cx.cochain_dim(n)} "
                f"with up to {est} stored entries (guard {guard})"
            )
    dims_c = [cx.cochain_dim(n) for n in range(i_max + 1)]
    ranks = [cx.rank(n) for n in range(i_max + 1)]
    hh = []
    for n in range(i_max + 1):
        prev = ranks[n - 1] if n else 0
        hh.append(dims_c[n] - ranks[n] - prev)
    return HHDims(tuple(hh), tuple(dims_c), tuple(ranks), cx.method)

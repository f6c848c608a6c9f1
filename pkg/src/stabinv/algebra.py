"""Finite-dimensional quotients of path algebras with explicit structure
constants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .fields import FieldSpec
from .presentation import Arrow, Quiver
from .rewriting import RewritingSystem, order_key


class Path(NamedTuple):
    source: int
    target: int
    arrows: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:  # noqa: D105 - path length, not tuple length
        return len(self.arrows)


@dataclass(frozen=True, eq=False)
class FDAlgebra:
    field: FieldSpec
    quiver: Quiver
    basis: tuple[Path, ...]
    table: tuple[tuple[tuple[tuple[int, object], ...], ...], ...]
    rewriting: RewritingSystem | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    @property
    def idempotents(self) -> list[int]:
        return list(range(self.num_vertices))

    def index(self, arrows: Sequence[int], vertex: int | None = None) -> int:
        arrows = tuple(arrows)
        if not arrows:
            return vertex
        for i, b in enumerate(self.basis):
            if b.arrows == arrows:
                return i
        raise KeyError(arrows)

    def word_name(self, i: int) -> str:
        b = self.basis[i]
        if b.is_trivial:
            return f"e{self.quiver.vertices[b.source]}"
        return self.quiver.word_name(b.arrows)

    # -- elements -----------------------------------------------------------

    def zero(self) -> list:
        return [self.field.zero] * self.dim

    def one(self) -> list:
        v = self.zero()
        for i in self.idempotents:
            v[i] = self.field.one
        return v

    def basis_vector(self, i: int) -> list:
        v = self.zero()
        v[i] = self.field.one
        return v

    def element(self, terms: dict) -> list:
        """Element from ``{path name or arrow-index tuple: scalar}``; names
        like ``"alpha*beta"`` or ``"e1"`` are accepted."""
        v = self.zero()
        F = self.field
        names = {self.word_name(i): i for i in range(self.dim)}
        for key, c in terms.items():
            if isinstance(key, str):
                if key in names:
                    idx = names[key]
                    v[idx] = F.add(v[idx], F.coerce(c))
                    continue
                arrows = tuple(self.quiver.arrow_index(n) for n in key.split("*"))
            else:
                arrows = tuple(key)
            if not self.quiver.is_path(arrows):
                raise ValueError(f"{key!r} is not a composable path")
            assert self.rewriting is not None, "need the rewriting system for reducible words"
            nf = self.rewriting.normal_form({arrows: F.coerce(c)})
            for w, x in nf.items():
                idx = self.index(w)
                v[idx] = F.add(v[idx], x)
        return v

    def basis_product(self, i: int, j: int) -> tuple[tuple[int, object], ...]:
        return self.table[i][j]

    def multiply(self, x: Sequence, y: Sequence) -> list:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"elements must have length {self.dim}")
        F = self.field
        out = self.zero()
        ynz = [(j, b) for j, b in enumerate(y) if not F.is_zero(b)]
        if F.is_prime_field:
            p = F.p
            for i, a in enumerate(x):
                if not a:
                    continue
                row = self.table[i]
                for j, b in ynz:
                    ab = a * b
                    for k, c in row[j]:
                        out[k] = (out[k] + ab * c) % p
            return out
        for i, a in enumerate(x):
            if F.is_zero(a):
                continue
            row = self.table[i]
            for j, b in ynz:
                ab = F.mul(a, b)
                for k, c in row[j]:
                    out[k] = F.add(out[k], F.mul(ab, c))
        return out

    def power(self, x: Sequence, n: int) -> list:
        result = self.one()
        base = list(x)
        while n:
            if n & 1:
                result = self.multiply(result, base)
            n >>= 1
            if n:
                base = self.multiply(base, base)
        return result

    def add(self, x: Sequence, y: Sequence) -> list:
        return [self.field.add(a, b) for a, b in zip(x, y)]

    def scale(self, c, x: Sequence) -> list:
        return [self.field.mul(c, a) for a in x]

    def sub(self, x: Sequence, y: Sequence) -> list:
        return [self.field.sub(a, b) for a, b in zip(x, y)]

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        F, Q = self.field, self.quiver
        basis = [
            {"source": Q.vertices[b.source], "target": Q.vertices[b.target],
             "word": [Q.arrows[a].name for a in b.arrows]}
            for b in self.basis
        ]
        consts = [
            [i, j, [[k, F.to_json(c)] for k, c in self.table[i][j]]]
            for i in range(self.dim) for j in range(self.dim) if self.table[i][j]
        ]
        return {
            "field": F.describe(),
            "vertices": list(Q.vertices),
            "arrows": [[a.name, Q.vertices[a.source], Q.vertices[a.target]] for a in Q.arrows],
            "basis": basis,
            "structure_constants": consts,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict) -> "FDAlgebra":
        F = FieldSpec.from_description(doc["field"])
        verts = tuple(doc["vertices"])
        arrows = tuple(Arrow(n, verts.index(s), verts.index(t)) for n, s, t in doc["arrows"])
        Q = Quiver(verts, arrows)
        basis = tuple(
            Path(verts.index(b["source"]), verts.index(b["target"]),
                 tuple(Q.arrow_index(n) for n in b["word"]))
            for b in doc["basis"]
        )
        d = len(basis)
        table = [[() for _ in range(d)] for _ in range(d)]
        for i, j, terms in doc["structure_constants"]:
            table[i][j] = tuple((k, F.from_json(c)) for k, c in terms)
        return cls(F, Q, basis, tuple(tuple(r) for r in table))


class AlgebraError(ValueError):
    pass


def construct_algebra(rs: RewritingSystem) -> FDAlgebra:
    if not rs.complete:
        raise AlgebraError("rewriting system is incomplete; the quotient may be infinite-dimensional")
    F, Q = rs.field, rs.quiver
    words = sorted(rs.irreducible_words(), key=order_key)
    basis = [Path(v, v, ()) for v in range(Q.num_vertices)]
    basis += [Path(Q.source(w), Q.target(w), w) for w in words]
    index = {b.arrows: i for i, b in enumerate(basis) if b.arrows}
    d = len(basis)
    one = F.one
    table = []
    for i, bi in enumerate(basis):
        row = []
        for j, bj in enumerate(basis):
            if bi.target != bj.source:
                row.append(())
            elif bi.is_trivial:
                row.append(((j, one),))
            elif bj.is_trivial:
                row.append(((i, one),))
            else:
                nf = rs.normal_form({bi.arrows + bj.arrows: one})
                row.append(tuple(sorted((index[w], c) for w, c in nf.items())))
        table.append(tuple(row))
    return FDAlgebra(F, Q, tuple(basis), tuple(table), rs)


def algebra_from_presentation(pres, degree_bound: int | None = None) -> FDAlgebra:
    from .rewriting import DEFAULT_DEGREE_BOUND, complete_rewriting

    rs = complete_rewriting(pres, degree_bound or DEFAULT_DEGREE_BOUND)
    return construct_algebra(rs)

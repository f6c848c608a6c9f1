"""Quivers, relations and the line-based presentation file format.

Paths compose left to right: ``a*b`` is "a then b", so the target of ``a``
must be the source of ``b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .fields import FieldError, FieldSpec


class PresentationError(ValueError):
    """Malformed or inconsistent presentation. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise PresentationError(f"duplicate arrow name {dup!r}")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise PresentationError(f"arrow {a.name!r} has an endpoint out of range")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def is_path(self, word: tuple[int, ...]) -> bool:
        return all(self.arrows[a].target == self.arrows[b].source for a, b in zip(word, word[1:]))

    def source(self, word: tuple[int, ...]) -> int:
        return self.arrows[word[0]].source

    def target(self, word: tuple[int, ...]) -> int:
        return self.arrows[word[-1]].target

    def word_name(self, word: tuple[int, ...]) -> str:
        return "*".join(self.arrows[a].name for a in word)


Relation = dict  # {word (tuple of arrow indices): nonzero scalar}


@dataclass
class Presentation:
    field: FieldSpec
    quiver: Quiver
    relations: list[Relation] = dc_field(default_factory=list)

    def __post_init__(self):
        for k, rel in enumerate(self.relations):
            check_relation(self.quiver, rel)

    def relation_text(self, rel: Relation) -> str:
        F = self.field
        parts = []
        for word in sorted(rel, key=lambda w: (-len(w), w)):
            c = rel[word]
            neg = False
            if F.characteristic == 0 and c < 0:
                c, neg = -c, True
            s = F.format(c)
            if F.degree > 1 and not re.fullmatch(r"\d+|t(\^\d+)?", s):
                s = f"({s})"
            term = self.quiver.word_name(word) if c == F.one else f"{s}*{self.quiver.word_name(word)}"
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        return " ".join(parts)


def check_relation(quiver: Quiver, rel: Relation, line: int | None = None) -> None:
    if not rel:
        raise PresentationError("relation is zero", line)
    ends = set()
    for word in rel:
        if len(word) == 0:
            raise PresentationError("relation involves trivial path", line)
        if not quiver.is_path(word):
            raise PresentationError(f"path {quiver.word_name(word)!r} is not composable", line)
        ends.add((quiver.source(word), quiver.target(word)))
    if len(ends) > 1:
        raise PresentationError("relation is not homogeneous in source and target", line)




def _split_terms(expr: str) -> list[tuple[str, str]]:
    """Split at top-level + and - (not inside parentheses)."""
    out, depth, start, sign = [], 0, 0, "+"
    s = expr.strip()
    if s and s[0] in "+-":
        sign, s = s[0], s[1:]
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            out.append((sign, s[start:i].strip()))
            sign, start = ch, i + 1
    out.append((sign, s[start:].strip()))
    return out


def _parse_side(text: str, field: FieldSpec, quiver: Quiver, lineno: int) -> Relation:
    names = {a.name: i for i, a in enumerate(quiver.arrows)}
    trivial = set(quiver.vertices) | {f"e{v}" for v in quiver.vertices} | {f"e_{v}" for v in quiver.vertices}
    rel: Relation = {}
    for sign, term in _split_terms(text):
        if not term:
            raise PresentationError("empty term in relation", lineno)
        factors = [f.strip() for f in term.split("*")]
        coeff = field.one
        word: list[int] = []
        for tok in factors:
            if tok in names:
                word.append(names[tok])
                continue
            m = re.fullmatch(r"(\w+)\^(\d+)", tok)
            if m and m.group(1) in names:
                word.extend([names[m.group(1)]] * int(m.group(2)))
                continue
            if tok in trivial:
                raise PresentationError("relation involves trivial path", lineno)
            if word:
                raise PresentationError(f"unknown arrow {tok!r}", lineno)
            try:
                coeff = field.mul(coeff, field.parse(tok))
            except FieldError as exc:
                if re.fullmatch(r"[A-Za-z_]\w*", tok) and tok != "t":
                    raise PresentationError(f"unknown arrow {tok!r}", lineno) from exc
                raise PresentationError(str(exc), lineno) from exc
        if not word:
            raise PresentationError("relation involves trivial path", lineno)
        if sign == "-":
            coeff = field.neg(coeff)
        w = tuple(word)
        if not quiver.is_path(w):
            raise PresentationError(f"path {term!r} is not composable", lineno)
        c = field.add(rel.get(w, field.zero), coeff)
        if field.is_zero(c):
            rel.pop(w, None)
        else:
            rel[w] = c
    return rel


def parse_presentation(text: str) -> Presentation:
    field: FieldSpec | None = None
    vertices: list[str] = []
    arrows: list[Arrow] = []
    raw_rels: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if field is None and head != "field":
            raise PresentationError("first statement must be 'field char=<p> ...'", lineno)
        if head == "field":
            if field is not None:
                raise PresentationError("field declared twice", lineno)
            opts = dict(tok.split("=", 1) for tok in rest.split() if "=" in tok)
            if "char" not in opts or len(opts) != len(rest.split()):
                raise PresentationError(f"cannot parse field line {line!r}", lineno)
            try:
                p = int(opts["char"])
                k = int(opts.get("degree", 1))
                mod = tuple(int(c) for c in opts["modulus"].split(",")) if "modulus" in opts else None
                field = FieldSpec(p, k, mod)
            except (ValueError, FieldError) as exc:
                raise PresentationError(str(exc), lineno) from exc
        elif head == "vertex":
            if not re.fullmatch(r"\w+", rest):
                raise PresentationError(f"bad vertex name {rest!r}", lineno)
            if rest in vertices:
                raise PresentationError(f"duplicate vertex {rest!r}", lineno)
            vertices.append(rest)
        elif head == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise PresentationError("expected 'arrow <name> <source> <target>'", lineno)
            name, s, t = parts
            if any(a.name == name for a in arrows):
                raise PresentationError(f"duplicate arrow name {name!r}", lineno)
            if name in vertices:
                raise PresentationError(f"arrow name {name!r} clashes with a vertex", lineno)
            for v in (s, t):
                if v not in vertices:
                    raise PresentationError(f"unknown vertex {v!r}", lineno)
            arrows.append(Arrow(name, vertices.index(s), vertices.index(t)))
        elif head == "rel":
            raw_rels.append((lineno, rest))
        else:
            raise PresentationError(f"unknown statement {head!r}", lineno)
    if field is None:
        raise PresentationError("missing field line")
    if not vertices:
        raise PresentationError("presentation has no vertices")
    quiver = Quiver(tuple(vertices), tuple(arrows))
    relations = []
    for lineno, body in raw_rels:
        if "=" in body:
            lhs, _, rhs = body.partition("=")
            if "=" in rhs:
                raise PresentationError("more than one '=' in relation", lineno)
            left = _parse_side(lhs, field, quiver, lineno)
            right = _parse_side(rhs, field, quiver, lineno)
            for w, c in right.items():
                v = field.sub(left.get(w, field.zero), c)
                if field.is_zero(v):
                    left.pop(w, None)
                else:
                    left[w] = v
            rel = left
        else:
            rel = _parse_side(body, field, quiver, lineno)
        check_relation(quiver, rel, lineno)
        relations.append(rel)
    return Presentation(field, quiver, relations)


def format_presentation(pres: Presentation, comment: str | None = None) -> str:
    F = pres.field
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    head = f"field char={F.characteristic}"
    if F.degree > 1:
        head += f" degree={F.degree} modulus={','.join(str(c) for c in F.modulus)}"
    lines.append(head)
    for v in pres.quiver.vertices:
        lines.append(f"vertex {v}")
    for a in pres.quiver.arrows:
        lines.append(f"arrow {a.name} {pres.quiver.vertices[a.source]} {pres.quiver.vertices[a.target]}")
    for rel in pres.relations:
        lines.append(f"rel {pres.relation_text(rel)}")
    return "\n".join(lines) + "\n"

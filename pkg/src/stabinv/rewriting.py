"""Noncommutative Groebner bases in path algebras (Knuth-Bendix style
completion) under the length-lexicographic order.

A rule ``lead -> tail`` says that ``lead - tail`` lies in the ideal; every
word in ``tail`` is smaller than ``lead``. Words are tuples of arrow
indices; arrows compare by declaration order.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .fields import FieldSpec
from .presentation import Presentation, Quiver

DEFAULT_DEGREE_BOUND = 30
# Give up on enumerating irreducible words beyond this many.
WORD_LIMIT = 200_000


class CompletionError(ValueError):
    pass


def order_key(word: tuple[int, ...]):
    return (len(word), word)


@dataclass(frozen=True)
class RewritingSystem:
    field: FieldSpec
    quiver: Quiver
    rules: dict  # lead word -> {word: coeff}
    degree_bound: int
    complete: bool
    order: str = "deglex"

    @property
    def leads(self) -> list[tuple[int, ...]]:
        return sorted(self.rules, key=order_key)

    def find_lead(self, word: tuple[int, ...]):
        return _find_lead(self.rules, _lead_lengths(self.rules), word)

    def is_irreducible(self, word: tuple[int, ...]) -> bool:
        return self.find_lead(word) is None

    def normal_form(self, poly: dict) -> dict:
        """Reduce a sum of nontrivial paths; the result is supported on
        irreducible words only."""
        for w in poly:
            if not w or not self.quiver.is_path(w):
                raise ValueError(f"word {w} is not a composable path")
        return _reduce(self.field, self.rules, _lead_lengths(self.rules), poly)

    def irreducible_words(self, limit: int = WORD_LIMIT) -> list[tuple[int, ...]]:
        """All irreducible nontrivial paths of length < degree_bound."""
        words, _ = _enumerate_irreducible(self.quiver, self.rules, self.degree_bound, limit)
        return words

    def rule_list(self) -> list[tuple[tuple[int, ...], dict]]:
        return [(lead, dict(self.rules[lead])) for lead in self.leads]


def _lead_lengths(rules) -> list[int]:
    return sorted({len(l) for l in rules})


def _find_lead(rules, lengths, word):
    n = len(word)
    for L in lengths:
        if L > n:
            break
        for i in range(n - L + 1):
            if word[i:i + L] in rules:
                return i, word[i:i + L]
    return None


def _reduce(F: FieldSpec, rules, lengths, poly: dict) -> dict:
    work = {w: c for w, c in poly.items() if not F.is_zero(c)}
    heap = [(-len(w), tuple(-a for a in w), w) for w in work]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, _, w = heapq.heappop(heap)
        c = work.pop(w, None)
        if c is None or F.is_zero(c):
            continue
        hit = _find_lead(rules, lengths, w)
        if hit is None:
            result[w] = c
            continue
        i, lead = hit
        pre, suf = w[:i], w[i + len(lead):]
        for tw, tc in rules[lead].items():
            nw = pre + tw + suf
            old = work.get(nw)
            if old is None:
                work[nw] = F.mul(c, tc)
                heapq.heappush(heap, (-len(nw), tuple(-a for a in nw), nw))
            else:
                work[nw] = F.add(old, F.mul(c, tc))
    return result


def _overlaps(a: tuple, b: tuple):
    """Words ``u v w`` with a = u v and b = v w, v nonempty proper."""
    out = []
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k:] == b[:k]:
            out.append((a + b[k:], len(a) - k))
    return out


def _enumerate_irreducible(quiver: Quiver, rules, bound: int, limit: int):
    """Irreducible paths by length; returns (words of length < bound,
    whether some irreducible word of length ``bound`` exists)."""
    lengths = _lead_lengths(rules)
    out_arrows = [[] for _ in range(quiver.num_vertices)]
    for i, a in enumerate(quiver.arrows):
        out_arrows[a.source].append(i)
    level = [(i,) for i in range(len(quiver.arrows)) if (i,) not in rules]
    words: list[tuple[int, ...]] = []
    L = 1
    while level:
        if L >= bound:
            return words, True
        words.extend(level)
        if len(words) > limit:
            return words, True
        nxt = []
        for w in level:
            for a in out_arrows[quiver.arrows[w[-1]].target]:
                nw = w + (a,)
                # only suffixes can newly contain a lead word
                if not any(nw[len(nw) - l:] in rules for l in lengths if l <= len(nw)):
                    nxt.append(nw)
        level = nxt
        L += 1
    return words, False


class _Completion:
    def __init__(self, pres: Presentation, bound: int):
        self.F = pres.field
        self.quiver = pres.quiver
        self.bound = bound
        self.rules: dict = {}
        self.lengths: list[int] = []
        self.queue: list = []
        self.deferred: list = []
        self.pending: list[dict] = [dict(r) for r in pres.relations]

    def reduce(self, poly):
        return _reduce(self.F, self.rules, self.lengths, poly)

    def add(self, poly: dict) -> None:
        F = self.F
        poly = self.reduce(poly)
        if not poly:
            return
        lead = max(poly, key=order_key)
        inv = F.inv(poly[lead])
        tail = {w: F.neg(F.mul(c, inv)) for w, c in poly.items() if w != lead}
        # drop rules made redundant by the new lead and re-queue them
        for old in [l for l in self.rules if len(l) >= len(lead) and _contains(l, lead)]:
            old_tail = self.rules.pop(old)
            back = {old: F.one}
            for w, c in old_tail.items():
                back[w] = F.neg(c)
            self.pending.append(back)
        self.rules[lead] = tail
        self.lengths = _lead_lengths(self.rules)
        for other in list(self.rules):
            pairs = [(lead, other)] if other == lead else [(lead, other), (other, lead)]
            for a, b in pairs:
                for word, pos in _overlaps(a, b):
                    item = (len(word), word, a, b, pos)
                    if len(word) <= self.bound:
                        heapq.heappush(self.queue, item)
                    else:
                        self.deferred.append(item)

    def spoly(self, item):
        _, word, a, b, pos = item
        if a not in self.rules or b not in self.rules:
            return None
        F = self.F
        # word = a + suffix = prefix + b, with prefix = word[:pos]
        suffix = word[len(a):]
        prefix = word[:pos]
        s: dict = {}
        for w, c in self.rules[a].items():
            nw = w + suffix
            s[nw] = F.add(s.get(nw, F.zero), c)
        for w, c in self.rules[b].items():
            nw = prefix + w
            s[nw] = F.sub(s.get(nw, F.zero), c)
        return self.reduce(s)

    def drain(self) -> None:
        while self.pending or self.queue:
            while self.pending:
                self.add(self.pending.pop())
            if self.queue:
                s = self.spoly(heapq.heappop(self.queue))
                if s:
                    self.pending.append(s)

    def interreduce_tails(self) -> None:
        changed = True
        while changed:
            changed = False
            for lead in list(self.rules):
                tail = self.rules[lead]
                red = self.reduce(tail)
                if red != tail:
                    self.rules[lead] = red
                    changed = True


def _contains(word, sub) -> bool:
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))


def complete_rewriting(
    pres: Presentation, degree_bound: int = DEFAULT_DEGREE_BOUND, strict: bool = True
) -> RewritingSystem:
    """Complete the relations of ``pres`` into a confluent rewriting system.

    Overlaps up to length ``degree_bound`` are resolved first. If every path
    of that length is then reducible, the quotient is finite-dimensional and
    the remaining (longer) overlaps are resolved as well, which gives a full
    Groebner basis. Otherwise the quotient is not bounded at this degree:
    ``CompletionError`` is raised, or with ``strict=False`` an incomplete
    system is returned.
    """
    max_rel = max((len(w) for r in pres.relations for w in r), default=0)
    if degree_bound < max_rel:
        raise CompletionError(f"degree_bound {degree_bound} is below the relation length {max_rel}")
    comp = _Completion(pres, degree_bound)
    while True:
        comp.drain()
        _, unbounded = _enumerate_irreducible(comp.quiver, comp.rules, degree_bound, WORD_LIMIT)
        if unbounded:
            if strict:
                raise CompletionError(f"dimension not bounded at degree {degree_bound}")
            comp.interreduce_tails()
            return RewritingSystem(comp.F, comp.quiver, dict(comp.rules), degree_bound, False)
        deferred, comp.deferred = comp.deferred, []
        for item in deferred:
            s = comp.spoly(item)
            if s:
                comp.pending.append(s)
        if not comp.pending and not comp.queue:
            break
        # anything new has a lead shorter than degree_bound, so its
        # overlaps are now processed without truncation
        comp.bound = max(comp.bound, 2 * degree_bound)
    comp.interreduce_tails()
    return RewritingSystem(comp.F, comp.quiver, dict(comp.rules), degree_bound, True)

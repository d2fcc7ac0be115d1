"""
Noncommutative Groebner bases: ambiguities, compositions, verification by
the diamond lemma, bounded completion, leading homogeneous parts and
homogenization with a new lowest letter ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .freealg import (
    ONE,
    Field,
    MonomialOrder,
    Poly,
    Word,
    divides,
    leading_monomial,
    leading_word,
    monic,
    normal_form,
    occurrences,
)

OVERLAP = "overlap"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """Two ways of rewriting ``superword``.

    overlap:   superword == LM(left) + right_cofactor == left_cofactor + LM(right)
    inclusion: superword == LM(left) == left_cofactor + LM(right) + right_cofactor
    """

    left: int
    right: int
    kind: str
    superword: Word
    left_cofactor: Word
    right_cofactor: Word

    def multipliers(self) -> tuple[tuple[Word, Word], tuple[Word, Word]]:
        """``((a, c), (a', c'))`` with superword == a*LM(left)*c == a'*LM(right)*c'."""
        if self.kind == OVERLAP:
            return (ONE, self.right_cofactor), (self.left_cofactor, ONE)
        return (ONE, ONE), (self.left_cofactor, self.right_cofactor)


@dataclass
class GBVerdict:
    is_groebner: bool
    failures: list[tuple[Ambiguity, Poly]] = field(default_factory=list)

    def __bool__(self):
        return self.is_groebner


def _leads(G: Sequence[Poly], order: MonomialOrder) -> list[Word]:
    out = []
    for g in G:
        if not g:
            raise ValueError("zero polynomial in generating set")
        out.append(leading_word(g, order))
    return out


def ambiguities(G: Sequence[Poly], order: MonomialOrder) -> list[Ambiguity]:
    """All overlap and inclusion ambiguities among the leading words of G.

    Overlaps come first, ordered by (left, right, width); inclusions follow,
    ordered by (outer, inner, offset).  Two generators sharing a leading
    word give one inclusion, listed under the earlier generator.
    """
    leads = _leads(G, order)
    out: list[Ambiguity] = []
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            for width in range(1, min(len(a), len(b))):
                if a[len(a) - width:] == b[:width]:
                    out.append(Ambiguity(i, j, OVERLAP, a + b[width:],
                                         a[:len(a) - width], b[width:]))
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i == j or len(b) > len(a) or (a == b and j < i):
                continue
            for k in occurrences(b, a):
                out.append(Ambiguity(i, j, INCLUSION, a, a[:k], a[k + len(b):]))
    return out


def composition(g1: Poly, g2: Poly, amb: Ambiguity, order: MonomialOrder) -> Poly:
    """The difference of the two rewritings of the ambiguity's superword."""
    (a1, c1), (a2, c2) = amb.multipliers()
    lc1, lm1 = leading_monomial(g1, order)
    lc2, lm2 = leading_monomial(g2, order)
    if a1 + lm1 + c1 != amb.superword or a2 + lm2 + c2 != amb.superword:
        raise ValueError("ambiguity does not match the given generators")
    result = g1.sandwich(a1, c1, 1 / lc1) - g2.sandwich(a2, c2, 1 / lc2)
    assert not result or order.key(leading_word(result, order)) < order.key(amb.superword)
    return result


def is_groebner(G: Sequence[Poly], order: MonomialOrder) -> GBVerdict:
    """Exact check: every composition of every ambiguity reduces to zero."""
    G = [monic(g, order) for g in G]
    failures = []
    for amb in ambiguities(G, order):
        s = composition(G[amb.left], G[amb.right], amb, order)
        r = normal_form(s, G, order)
        if r:
            failures.append((amb, r))
    return GBVerdict(not failures, failures)


############################################################################
# completion
############################################################################
def interreduce(G: Sequence[Poly], order: MonomialOrder) -> list[Poly]:
    """Monic, pairwise irreducible generators sorted by leading word."""
    basis = [monic(g, order) for g in G if g]
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            lm = leading_word(g, order)
            if any(divides(leading_word(h, order), lm) is not None for h in others):
                r = normal_form(g, others, order)
                basis = others + ([monic(r, order)] if r else [])
                changed = True
                break
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        lc, lm = leading_monomial(g, order)
        tail = normal_form(g - Poly.monomial(lm, lc), others, order)
        reduced.append(tail + Poly.monomial(lm, lc))
    reduced.sort(key=lambda g: order.key(leading_word(g, order)))
    return reduced


COMPLETE = "complete"
TRUNCATED = "truncated"


def complete(G: Sequence[Poly], order: MonomialOrder, max_degree: int) -> tuple[list[Poly], str]:
    """Ambiguity completion, skipping compositions whose superword has
    degree above ``max_degree``.

    Returns the interreduced basis and ``"complete"`` when nothing was
    skipped, else ``"truncated"``.
    """
    basis = interreduce(G, order)
    while True:
        skipped = False
        grew = False
        ambs = sorted(ambiguities(basis, order), key=lambda a: order.key(a.superword))
        for amb in ambs:
            if order.degree(amb.superword) > max_degree:
                skipped = True
                continue
            s = composition(basis[amb.left], basis[amb.right], amb, order)
            r = normal_form(s, basis, order)
            if r:
                basis = interreduce(basis + [r], order)
                grew = True
                break
        if not grew:
            return basis, TRUNCATED if skipped else COMPLETE


############################################################################
# hypotheses on leading words
############################################################################
@dataclass
class LeadCheck:
    """Why LM(G) fails to be a reduced subset of words of length >= 2."""

    dividing_pairs: list[tuple[Word, Word]] = field(default_factory=list)
    letters: list[Word] = field(default_factory=list)
    has_unit: bool = False

    @property
    def reduced(self) -> bool:
        return not self.dividing_pairs and not self.has_unit

    @property
    def disjoint_from_letters(self) -> bool:
        return not self.letters

    @property
    def ok(self) -> bool:
        return self.reduced and self.disjoint_from_letters


def lead_words(G: Sequence[Poly], order: MonomialOrder) -> list[Word]:
    """Distinct leading words of G, smallest first."""
    return sorted(set(_leads(G, order)), key=order.key)


def is_reduced_lm(G: Sequence[Poly], order: MonomialOrder) -> LeadCheck:
    leads = lead_words(G, order)
    check = LeadCheck()
    for u in leads:
        if len(u) == 0:
            check.has_unit = True
        elif len(u) == 1:
            check.letters.append(u)
    for v in leads:
        for u in leads:
            if u != v and divides(v, u) is not None:
                check.dividing_pairs.append((v, u))
    return check


############################################################################
# leading homogeneous parts and homogenization
############################################################################
def leading_homogeneous(f: Poly, alphabet) -> Poly:
    """Component of ``f`` of maximal weighted degree."""
    if not f:
        raise ValueError("zero polynomial has no leading homogeneous part")
    top = max(alphabet.degree(w) for w in f.words())
    return Poly({w: c for w, c in f.items() if alphabet.degree(w) == top})


def homogenize(f: Poly, order: MonomialOrder, tvar: str = "T") -> tuple[Poly, MonomialOrder]:
    """Pad lower-degree terms with powers of a new letter ``T`` of weight 1.

    Returns the homogeneous polynomial and the extended ordering, in which
    ``T`` has the lowest precedence.
    """
    if not order.is_graded:
        raise ValueError("homogenization requires graded ordering")
    if not f:
        raise ValueError("cannot homogenize the zero polynomial")
    ext = order.extend_with(tvar, 1)
    t = len(order.alphabet)
    alphabet = order.alphabet
    p = alphabet.degree(leading_word(f, order))
    terms = []
    for w, c in f.items():
        gap = p - alphabet.degree(w)
        if gap < 0:
            raise ValueError("term above the leading degree; ordering is not graded")
        terms.append(((t,) * gap + w, c))
    return Poly(terms), ext


def commutators(order: MonomialOrder, field: Field = Field(), tvar: str = "T") -> list[Poly]:
    """``X_i*T - T*X_i`` for every letter, in alphabet order."""
    t = len(order.alphabet)
    one = field.one
    return [Poly({(i, t): one, (t, i): -one}) for i in range(len(order.alphabet))]


def homogenized_system(G: Sequence[Poly], order: MonomialOrder, field: Field = Field(),
                       tvar: str = "T") -> tuple[list[Poly], MonomialOrder]:
    if not order.is_graded:
        raise ValueError("homogenization requires graded ordering")
    ext = order.extend_with(tvar, 1)
    out = [homogenize(g, order, tvar)[0] for g in G]
    return out + commutators(order, field, tvar), ext


def dehomogenize(f: Poly, tletter: int) -> Poly:
    """Substitute T := 1."""
    return f.map_words(lambda w: tuple(i for i in w if i != tletter))

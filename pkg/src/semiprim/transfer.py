"""
Semiprimitivity transfer from the monomial algebra K<X>/<LM(G)> to A, its
associated graded algebra G(A) and its Rees algebra.

The theorems used are sufficient conditions only, so a verdict is either
``semiprimitive`` (with the theorem that justifies it) or ``unknown`` (with
the hypothesis that failed).  Nothing here ever claims a nonzero radical
for A, G(A) or the Rees algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .freealg import Field, MonomialOrder, Poly, Word, leading_word, monic, normal_form
from .groebner import (
    homogenized_system,
    is_groebner,
    is_reduced_lm,
    lead_words,
    leading_homogeneous,
)
from .monomial import (
    ObstructionSet,
    RadicalReport,
    build_graph,
    cyclic_witness,
    is_cyclic_word,
    normal_words,
    radical_report,
)

SEMIPRIMITIVE = "semiprimitive"
UNKNOWN = "unknown"

THM_GRADED = "Theorem 3.2"
THM_ASSOCIATED = "Theorem 3.3"
THM_REES = "Theorem 3.5"

OPEN_QUESTION = ("open question: for a non-homogeneous Groebner basis it is not known "
                 "whether a semi-prime monomial algebra forces A to be semiprimitive")

FILTRATION_NOTES = {
    "filtration": "F_pA = (F_p K<X> + I)/I, F_p K<X> spanned by words of weighted degree <= p",
    "associated_graded": "G(A) = sum_p F_pA/F_{p-1}A, presented by the leading homogeneous parts LH(G)",
    "rees": "Rees(A) = sum_p F_pA, presented over X and T by ~G with commutators X_i*T - T*X_i",
}


@dataclass(frozen=True)
class Presentation:
    order: MonomialOrder
    relations: tuple[Poly, ...] = ()
    field: Field = Field()

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        n = len(self.alphabet)
        for f in rels:
            if not f:
                raise ValueError("relations must be nonzero")
            for w in f.words():
                if any(not 0 <= i < n for i in w):
                    raise ValueError(f"relation word {w} is not over the alphabet")

    @property
    def alphabet(self):
        return self.order.alphabet

    def fmt(self, f: Poly) -> str:
        return f.format(self.order)

    def fmt_word(self, w: Word) -> str:
        return self.alphabet.format_word(w)


@dataclass
class Hypothesis:
    name: str
    passed: bool
    witness: str | None = None

    def to_dict(self):
        return {"passed": self.passed, "witness": self.witness}


@dataclass
class Verdict:
    status: str
    theorem: str | None = None
    reason: str | None = None

    def to_dict(self):
        return {"status": self.status, "theorem": self.theorem, "reason": self.reason}

    def render(self) -> str:
        if self.status == SEMIPRIMITIVE:
            extra = f", {self.reason}" if self.reason else ""
            return f"semiprimitive ({self.theorem}{extra})"
        return f"unknown — {self.reason}"


@dataclass
class AnalysisReport:
    presentation: Presentation
    hypotheses: dict[str, Hypothesis]
    obstructions: list[Word] | None
    monomial: RadicalReport | None
    verdict_A: Verdict
    verdict_GA: Verdict
    verdict_Rees: Verdict
    leading_homogeneous: list[Poly]
    homogenized: tuple[list[Poly], MonomialOrder] | None
    theorem_gate: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        p = self.presentation
        fmt_word = p.fmt_word
        mono = None
        if self.monomial is not None:
            mono = {
                "obstructions": [fmt_word(w) for w in self.obstructions],
                "ell": self.monomial.ell,
                "semiprime": self.monomial.semiprime,
                "semiprimitive": self.monomial.semiprime,
                "noncyclic_witnesses": [fmt_word(w) for w in self.monomial.noncyclic_witnesses],
            }
        homog = None
        if self.homogenized is not None:
            polys, ext = self.homogenized
            homog = {
                "letters": list(ext.alphabet.letters),
                "weights": list(ext.alphabet.weights),
                "order": ext.describe(),
                "relations": [f.format(ext) for f in polys],
            }
        return {
            "presentation": presentation_dict(p),
            "hypotheses": {k: h.to_dict() for k, h in self.hypotheses.items()},
            "theorem_gate": list(self.theorem_gate),
            "monomial_algebra": mono,
            "verdicts": {
                "A": self.verdict_A.to_dict(),
                "G(A)": self.verdict_GA.to_dict(),
                "Rees": self.verdict_Rees.to_dict(),
            },
            "derived": {
                "leading_homogeneous": [p.fmt(f) for f in self.leading_homogeneous],
                "homogenized": homog,
            },
            "notes": dict(FILTRATION_NOTES),
        }

    def render(self) -> str:
        d = self.to_dict()
        pres = d["presentation"]
        lines = ["Presentation",
                 f"  letters: {', '.join(pres['letters'])}",
                 f"  weights: {', '.join(map(str, pres['weights']))}",
                 f"  order: {pres['order']}",
                 f"  field: {pres['field']}",
                 "  relations:"]
        lines += [f"    {r}" for r in pres["relations"]] or ["    (none)"]
        lines.append("Hypotheses")
        for name, h in self.hypotheses.items():
            tail = f" ({h.witness})" if h.witness else ""
            lines.append(f"  {name}: {'pass' if h.passed else 'FAIL'}{tail}")
        lines.append(f"  theorem gate: {', '.join(self.theorem_gate) or '(none)'}")
        lines.append("Monomial algebra K<X>/<LM(G)>")
        mono = d["monomial_algebra"]
        if mono is None:
            lines.append("  not analysed: leading words do not form a reduced set of non-letters")
        else:
            lines.append(f"  obstructions: {', '.join(mono['obstructions']) or '(none)'}")
            lines.append(f"  ell: {mono['ell'] if mono['ell'] is not None else '-'}")
            lines.append(f"  semi-prime: {'yes' if mono['semiprime'] else 'no'}")
            lines.append(f"  noncyclic witnesses: {', '.join(mono['noncyclic_witnesses']) or '(none)'}")
        lines.append("Verdicts")
        lines.append(f"  A: {self.verdict_A.render()}")
        lines.append(f"  G(A): {self.verdict_GA.render()}")
        lines.append(f"  Rees: {self.verdict_Rees.render()}")
        lines.append("Derived presentations")
        lh = d["derived"]["leading_homogeneous"]
        lines.append(f"  LH(G): {'; '.join(lh) or '(none)'}")
        homog = d["derived"]["homogenized"]
        if homog is None:
            lines.append("  ~G: not formed (ordering not graded)")
        else:
            lines.append(f"  ~G over {', '.join(homog['letters'])} with {homog['order']}: "
                         f"{'; '.join(homog['relations'])}")
        return "\n".join(lines) + "\n"


def presentation_dict(p: Presentation) -> dict:
    return {
        "letters": list(p.alphabet.letters),
        "weights": list(p.alphabet.weights),
        "order": p.order.describe(),
        "field": p.field.name,
        "relations": [p.fmt(f) for f in p.relations],
    }


def _witnesses(p: Presentation, words: Sequence[Word]) -> str:
    label = "witness" if len(words) == 1 else "witnesses"
    return f"{label} {', '.join(p.fmt_word(w) for w in words)}"


def analyze(p: Presentation) -> AnalysisReport:
    order = p.order
    G = [monic(g, order) for g in p.relations]

    gb = is_groebner(G, order)
    gb_h = Hypothesis("gb_verified", gb.is_groebner,
                      None if gb.is_groebner else
                      f"composition remainder {p.fmt(gb.failures[0][1])}")

    leads = is_reduced_lm(G, order)
    red_w = None
    if leads.has_unit:
        red_w = "1 is a leading word"
    elif leads.dividing_pairs:
        v, u = leads.dividing_pairs[0]
        red_w = f"{p.fmt_word(v)} divides {p.fmt_word(u)}"
    red_h = Hypothesis("lm_reduced", leads.reduced, red_w)
    dis_h = Hypothesis("lm_disjoint_from_X", leads.disjoint_from_letters,
                       None if leads.disjoint_from_letters else
                       "letter leading words " + ", ".join(p.fmt_word(w) for w in leads.letters))

    inhomog = [g for g in p.relations if not g.is_homogeneous(p.alphabet)]
    hom_h = Hypothesis("homogeneous", not inhomog,
                       f"{p.fmt(inhomog[0])} is not homogeneous" if inhomog else None)
    grd_h = Hypothesis("order_graded", order.is_graded,
                       None if order.is_graded else "deglex by length with non-unit weights")
    hyps = {h.name: h for h in (gb_h, red_h, dis_h, hom_h, grd_h)}

    omega = None
    mono = None
    if leads.ok:
        omega = lead_words(G, order)
        mono = radical_report(ObstructionSet(tuple(omega), p.alphabet))

    failure = None
    for h in (gb_h, red_h, dis_h):
        if not h.passed:
            failure = f"hypothesis {h.name} failed; {h.witness}"
            break
    if failure is None and not mono.semiprime:
        failure = f"monomial algebra not semi-prime; {_witnesses(p, mono.noncyclic_witnesses)}"

    if failure is not None:
        vA = vGA = vR = Verdict(UNKNOWN, reason=failure)
    else:
        if order.is_graded:
            vR = Verdict(SEMIPRIMITIVE, THM_REES)
        else:
            vR = Verdict(UNKNOWN, reason=f"hypothesis order_graded failed; {grd_h.witness}")
        if hom_h.passed:
            vA = Verdict(SEMIPRIMITIVE, THM_GRADED)
            vGA = Verdict(SEMIPRIMITIVE, THM_GRADED, "G(A) ≅ A for a graded ideal")
        elif order.is_graded:
            vA = Verdict(UNKNOWN, reason=OPEN_QUESTION)
            vGA = Verdict(SEMIPRIMITIVE, THM_ASSOCIATED)
        else:
            reason = (f"G is not homogeneous ({hom_h.witness}) and hypothesis order_graded "
                      f"failed; {grd_h.witness}")
            vA = vGA = Verdict(UNKNOWN, reason=reason)

    # which theorems the homogeneity and grading flags route the analysis to
    if hom_h.passed:
        gate = [THM_GRADED] + ([THM_REES] if order.is_graded else [])
    else:
        gate = [THM_ASSOCIATED, THM_REES] if order.is_graded else []

    lh = [leading_homogeneous(g, p.alphabet) for g in p.relations]
    homog = homogenized_system(p.relations, order, p.field) if order.is_graded else None
    return AnalysisReport(p, hyps, omega, mono, vA, vGA, vR, lh, homog, gate)


############################################################################
# cross-checks of the homogenization and the leading-word arguments
############################################################################
@dataclass
class Prop34Check:
    gb_original: bool
    gb_homogenized: bool
    normal_words_match: bool
    degree_bound: int
    counted: int = 0
    missing: list[Word] = field(default_factory=list)
    extra: list[Word] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.gb_original == self.gb_homogenized and self.normal_words_match


def words_up_to_degree(alphabet, bound: int, accept=lambda w: True) -> list[Word]:
    """Words of weighted degree <= bound passing ``accept``; ``accept`` must
    be closed under taking prefixes (it prunes the search)."""
    out = []
    stack = [((), 0)]
    while stack:
        w, d = stack.pop()
        out.append(w)
        for k, wt in enumerate(alphabet.weights):
            if d + wt <= bound and accept(w + (k,)):
                stack.append((w + (k,), d + wt))
    return sorted(out, key=lambda w: (alphabet.degree(w), w))


def verify_prop34(p: Presentation, degree_bound: int = 6) -> Prop34Check:
    """G is a Groebner basis iff ~G is one (checked exactly), and the normal
    words of <~G> are T^r*u with u normal for G (checked up to the bound)."""
    order = p.order
    if not order.is_graded:
        raise ValueError("homogenization requires graded ordering")
    G = list(p.relations)
    tG, ext = homogenized_system(G, order, p.field)
    gb1 = is_groebner(G, order).is_groebner
    gb2 = is_groebner(tG, ext).is_groebner

    leads_t = lead_words(tG, ext)
    leads = lead_words(G, order) if G else []
    t = len(p.alphabet)

    def normal_t(w):
        return not any(_has_factor(w, u) for u in leads_t)

    def normal_x(w):
        return not any(_has_factor(w, u) for u in leads)

    found = set(words_up_to_degree(ext.alphabet, degree_bound, normal_t))
    expected = set()
    for u in words_up_to_degree(p.alphabet, degree_bound, normal_x):
        d = p.alphabet.degree(u)
        for r in range(degree_bound - d + 1):
            expected.add((t,) * r + u)
    key = lambda w: (ext.alphabet.degree(w), w)
    return Prop34Check(gb1, gb2, found == expected, degree_bound, len(found),
                       sorted(expected - found, key=key), sorted(found - expected, key=key))


def _has_factor(w: Word, u: Word) -> bool:
    n = len(u)
    return any(w[k:k + n] == u for k in range(len(w) - n + 1))


@dataclass
class StabilityCheck:
    trials: int
    checked: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_lm_stability(p: Presentation, trials: int, seed: int = 0, max_power: int = 4,
                       extra_terms: int = 3) -> StabilityCheck:
    """For random homogeneous normal-form ``h`` whose leading word ``u`` is
    cyclic, with ``v`` read off the graph, check that the normal form of
    ``(h*v)^q`` is nonzero with leading word ``(u*v)^q`` for q <= max_power.
    Draws with a noncyclic leading word are skipped."""
    result = StabilityCheck(trials)
    if trials == 0:
        return result
    order = p.order
    G = [monic(g, order) for g in p.relations]
    omega = lead_words(G, order) if G else []
    om = ObstructionSet(tuple(omega), p.alphabet)
    graph = build_graph(om) if omega else None
    span = graph.ell if graph else 3
    pool = [w for w in normal_words(om, span) if w]
    by_degree: dict[int, list[Word]] = {}
    for w in pool:
        by_degree.setdefault(p.alphabet.degree(w), []).append(w)

    rng = random.Random(seed)
    one = p.field.one
    for _ in range(trials):
        u = rng.choice(pool)
        if graph is None:
            v: Word | None = ()
        elif not is_cyclic_word(u, graph):
            result.skipped += 1
            continue
        else:
            v = cyclic_witness(u, graph)
        lower = [w for w in by_degree[p.alphabet.degree(u)] if order.key(w) < order.key(u)]
        terms = {u: one}
        for w in rng.sample(lower, min(extra_terms, len(lower))):
            terms[w] = p.field(rng.choice([-3, -2, -1, 1, 2, 5]))
        hv = Poly(terms).sandwich((), v)
        power = hv
        for q in range(1, max_power + 1):
            target = (u + v) * q
            if leading_word(power, order) != target:
                result.failures.append(f"LM((h*v)^{q}) != (u*v)^{q} for u={p.fmt_word(u)}")
                break
            nf = normal_form(power, G, order)
            if not nf or leading_word(nf, order) != target:
                result.failures.append(
                    f"normal form of (h*v)^{q} lost its leading word for u={p.fmt_word(u)}")
                break
            power = power * hv
        result.checked += 1
    return result


def report_schema() -> dict:
    """The JSON schema that :meth:`AnalysisReport.to_dict` output follows."""
    import json
    from importlib.resources import files

    return json.loads(files("semiprim").joinpath("schema/report.schema.json").read_text("utf-8"))

"""Acceptance suite.

Each test is one criterion.  Results are collected in ``RESULTS`` and printed
as one PASS/FAIL line per criterion at the end of the pytest run (see the
terminal summary hook in conftest.py), or directly when this file is run as
a script.
"""
import functools
import random
import time
from itertools import combinations, product

from conftest import GOLDEN, PRESENTATIONS, XY, W, omega, poly
from semiprim.cli import main
from semiprim.freealg import Alphabet, MonomialOrder, Poly, leading_word, reconstruct, reduce
from semiprim.groebner import (
    COMPLETE,
    complete,
    homogenize,
    homogenized_system,
    is_groebner,
    lead_words,
    leading_homogeneous,
)
from semiprim.monomial import ObstructionSet, build_graph, is_cyclic_word, normal_words, oracle_cyclic, radical_report
from semiprim.textio import parse_presentation
from semiprim.transfer import THM_ASSOCIATED, THM_GRADED, THM_REES, UNKNOWN, analyze

RESULTS: list[str] = []


def criterion(number, title, budget=None):
    """Record PASS/FAIL for the wrapped test; ``budget`` is a wall-clock limit in seconds."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - start
                if budget is not None:
                    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                RESULTS.append(f"FAIL  [{number}] {title} ({elapsed:.2f}s): {exc}")
                raise
            note = f"; {detail}" if detail else ""
            RESULTS.append(f"PASS  [{number}] {title} ({elapsed:.2f}s{note})")
        return run
    return wrap


def has_factor(w, u):
    return any(w[k:k + len(u)] == u for k in range(len(w) - len(u) + 1))


def yx():
    return MonomialOrder(XY, (1, 0))


@criterion(1, "diamond lemma exactness", budget=1.0)
def test_c1_diamond_lemma():
    o = yx()
    two = [poly("x^2 - y^2", o), poly("x*y^2 - y^2*x", o)]
    assert is_groebner(two, o).is_groebner
    verdict = is_groebner(two[:1], o)
    assert not verdict.is_groebner
    assert [r for _, r in verdict.failures] == [two[1]]
    assert [r.format(o) for _, r in verdict.failures] == ["x*y^2 - y^2*x"]
    basis, status = complete(two[:1], o, 6)
    assert status == COMPLETE and len(basis) == 2 and set(basis) == set(two)


def reduced_sets():
    # obstructions are never single letters
    pool = [w for n in (2, 3) for w in product((0, 1), repeat=n)]
    for size in (1, 2, 3):
        for combo in combinations(pool, size):
            if any(has_factor(b, a) for a in combo for b in combo if a != b):
                continue
            yield ObstructionSet(combo, XY)


@criterion(2, "cyclicity oracle equivalence", budget=60.0)
def test_c2_oracle_equivalence():
    sets = words = 0
    for om in reduced_sets():
        sets += 1
        g = build_graph(om)
        for u in normal_words(om, g.ell):
            if u:
                words += 1
                assert is_cyclic_word(u, g) == oracle_cyclic(u, om), (om.words, u)
    return f"{sets} obstruction sets, {words} words"


@criterion(3, "monomial semi-primeness witnesses")
def test_c3_witnesses():
    x_only = Alphabet(("x",))
    assert radical_report(omega("xx")).semiprime
    assert radical_report(omega("xx")).noncyclic_witnesses == []
    cases = [
        (omega("xx", alphabet=x_only), {W("x", x_only)}),
        (omega("yx"), {W("xy")}),
        (omega("xx", "xyy"), {W("yyx")}),
    ]
    for om, expected in cases:
        r = radical_report(om)
        assert not r.semiprime and set(r.noncyclic_witnesses) == expected


def enumerate_normal(alphabet, leads, bound):
    out = set()
    for n in range(bound // min(alphabet.weights) + 1):
        for w in product(range(len(alphabet)), repeat=n):
            if alphabet.degree(w) <= bound and not any(has_factor(w, u) for u in leads):
                out.add(w)
    return out


@criterion(4, "homogenized normal words up to degree 6", budget=10.0)
def test_c4_homogenized_normal_words():
    o = yx()
    for rels in (["x^2 - x"], [], ["y*x - x*y"]):
        G = [poly(t, o) for t in rels]
        tG, ext = homogenized_system(G, o)
        assert is_groebner(G, o).is_groebner and is_groebner(tG, ext).is_groebner
        found = enumerate_normal(ext.alphabet, lead_words(tG, ext), 6)
        base = enumerate_normal(XY, lead_words(G, o) if G else [], 6)
        t = len(XY)
        expected = {(t,) * r + u for u in base for r in range(7 - XY.degree(u))}
        assert found == expected, rels


def random_poly(rng, letters):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        w = tuple(rng.randrange(letters) for _ in range(rng.randint(0, 6)))
        terms[w] = terms.get(w, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return Poly(terms)


def brute_leading_word(f, alphabet, precedence):
    """Largest word by (weighted degree, letter ranks), ranks from the precedence list."""
    rank = {letter: r for r, letter in enumerate(precedence)}
    return max(f.words(), key=lambda w: (alphabet.degree(w), [rank[a] for a in w]))


@criterion(5, "LM preserved by homogenization and LH")
def test_c5_lm_preservation():
    rng = random.Random(2024)
    orders = [
        MonomialOrder(XY, (1, 0)),
        MonomialOrder(XY, (0, 1)),
        MonomialOrder(Alphabet(("x", "y"), (1, 2)), (0, 1), "weighted-deglex"),
        MonomialOrder(Alphabet(("x", "y", "z")), (2, 0, 1)),
        MonomialOrder(Alphabet(("x", "y", "z"), (2, 1, 3)), (0, 2, 1), "weighted-deglex"),
    ]
    done = 0
    while done < 1000:
        order = orders[done % len(orders)]
        f = random_poly(rng, len(order.alphabet))
        if not f:
            continue
        done += 1
        lm = leading_word(f, order)
        assert lm == brute_leading_word(f, order.alphabet, order.precedence)
        hf, ext = homogenize(f, order)
        assert leading_word(hf, ext) == lm
        assert leading_word(leading_homogeneous(f, order.alphabet), order) == lm
    return f"{done} polynomials"


@criterion(6, "golden pipeline reports")
def test_c6_golden_reports(capsys, tmp_path):
    expected_lines = {
        "squares": ["A: semiprimitive (Theorem 3.2)"],
        "idempotent": ["A: unknown", "open question",
                       "G(A): semiprimitive (Theorem 3.3)", "Rees: semiprimitive (Theorem 3.5)"],
        "two_relations": ["A: unknown — monomial algebra not semi-prime; witness y^2*x",
                          "G(A): unknown", "Rees: unknown"],
    }
    for name, fragments in expected_lines.items():
        out_json = tmp_path / f"{name}.json"
        assert main(["analyze", str(PRESENTATIONS / f"{name}.pres"), "--json", str(out_json)]) == 0
        text = capsys.readouterr().out
        assert text == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")
        assert out_json.read_bytes() == (GOLDEN / f"{name}.json").read_bytes()
        for frag in fragments:
            assert frag in text, (name, frag)
    r = analyze(parse_presentation((PRESENTATIONS / "two_relations.pres").read_text()))
    assert {r.verdict_A.status, r.verdict_GA.status, r.verdict_Rees.status} == {UNKNOWN}


@criterion(7, "division contract")
def test_c7_division_contract():
    rng = random.Random(7)
    orders = [MonomialOrder(XY, (1, 0)), MonomialOrder(XY, (0, 1)),
              MonomialOrder(Alphabet(("x", "y", "z"), (1, 2, 1)), (1, 2, 0), "weighted-deglex")]
    for trial in range(1000):
        order = orders[trial % len(orders)]
        n = len(order.alphabet)
        G = [g for g in (random_poly(rng, n) for _ in range(rng.randint(1, 3))) if g]
        f = random_poly(rng, n)
        nf, trace = reduce(f, G, order)
        assert reconstruct(trace, G, nf) == f
        leads = [leading_word(g, order) for g in G]
        assert not any(has_factor(w, u) for w in nf.words() for u in leads)
        again, steps = reduce(nf, G, order)
        assert again == nf and steps == []
    return "1000 pairs"


@criterion(8, "weight sensitivity of the theorem gate")
def test_c8_weight_sensitivity():
    head = "letters = x, y\n{weights}order = wdeglex(y < x)\nrelations:\nx^2 - y\n"
    flat = analyze(parse_presentation(head.format(weights="")))
    heavy = analyze(parse_presentation(head.format(weights="weights = 1, 2\n")))
    assert flat.presentation.alphabet.weights == (1, 1)
    assert not flat.hypotheses["homogeneous"].passed
    assert heavy.hypotheses["homogeneous"].passed
    assert flat.theorem_gate == [THM_ASSOCIATED, THM_REES]
    assert heavy.theorem_gate == [THM_GRADED, THM_REES]


if __name__ == "__main__":
    import sys

    import pytest

    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import XY, W, poly
from semiprim.freealg import (
    Alphabet,
    Field,
    ModInt,
    MonomialOrder,
    Poly,
    compare,
    divides,
    is_irreducible,
    leading_monomial,
    leading_word,
    reconstruct,
    reduce,
    word_degree,
    word_length,
)

XYZ = Alphabet(("x", "y", "z"), (1, 2, 1))

word_st = st.lists(st.integers(0, 1), max_size=6).map(tuple)
word3_st = st.lists(st.integers(0, 2), max_size=5).map(tuple)
coeff_st = st.integers(-5, 5).filter(bool)
poly_st = st.dictionaries(word_st, coeff_st, min_size=1, max_size=5).map(Poly)

orders = [
    MonomialOrder(XY, (1, 0)),
    MonomialOrder(XY, (0, 1)),
    MonomialOrder(XYZ, (2, 0, 1), "weighted-deglex"),
    MonomialOrder(XYZ, (0, 1, 2), "deglex"),
]


class TestAlphabet:
    def test_defaults_to_unit_weights(self):
        assert XY.weights == (1, 1)

    @pytest.mark.parametrize("letters, weights", [
        ((), ()),
        (("x", "x"), ()),
        (("x", ""), ()),
        (("x", "y"), (1, 0)),
        (("x", "y"), (1,)),
    ])
    def test_rejects_bad_alphabets(self, letters, weights):
        with pytest.raises(ValueError):
            Alphabet(letters, weights)

    def test_format_word(self):
        assert XY.format_word(()) == "1"
        assert XY.format_word(W("xyyx")) == "x*y^2*x"
        ab = Alphabet(("ab", "c"))
        assert ab.format_word((0, 0, 1)) == "ab^2*c"


class TestWords:
    def test_length(self):
        assert word_length(()) == 0
        assert word_length(W("xyy")) == 3
        assert word_length(Alphabet(("x",)).word("x", "x", "x")) == 3

    def test_degree(self):
        a = Alphabet(("x", "y"), (1, 2))
        assert word_degree(W("xy"), a) == 3
        assert word_degree((), a) == 0

    @given(word_st)
    def test_degree_is_length_for_unit_weights(self, w):
        assert word_degree(w, XY) == word_length(w)

    def test_divides(self):
        assert divides(W("xx"), W("yxxy")) == (W("y"), W("y"))
        assert divides(W("xy"), W("yx")) is None
        assert divides((), W("xy")) == ((), W("xy"))

    def test_divides_is_leftmost(self):
        assert divides(W("x"), W("yxyx")) == (W("y"), W("yx"))

    @given(word_st, word_st)
    def test_divides_agrees_with_string_search(self, v, u):
        sv = "".join("ab"[i] for i in v)
        su = "".join("ab"[i] for i in u)
        got = divides(v, u)
        if sv in su:
            k = su.index(sv)
            assert got == (u[:k], u[k + len(v):])
        else:
            assert got is None


class TestOrdering:
    def test_examples(self, yx_order):
        assert compare(yx_order, W("yx"), W("xx")) == -1
        assert compare(MonomialOrder(Alphabet(("x", "y"), (1, 3)), kind="weighted-deglex"),
                       W("xx"), W("y")) == -1
        assert compare(yx_order, W("xy"), W("xy")) == 0

    def test_graded_flag(self):
        assert MonomialOrder(XY).is_graded
        assert MonomialOrder(XYZ, kind="weighted-deglex").is_graded
        assert not MonomialOrder(XYZ, kind="deglex").is_graded

    def test_rejects_bad_precedence(self):
        with pytest.raises(ValueError):
            MonomialOrder(XY, (0, 0))
        with pytest.raises(ValueError):
            MonomialOrder(XY, (0, 1), "lex")

    @pytest.mark.parametrize("order", orders)
    @given(data=st.data())
    def test_strict_total_order(self, order, data):
        a, b, c = (data.draw(word3_st if len(order.alphabet) == 3 else word_st) for _ in range(3))
        ab, ba = compare(order, a, b), compare(order, b, a)
        assert ab == -ba
        assert (ab == 0) == (a == b)
        if compare(order, a, b) < 0 and compare(order, b, c) < 0:
            assert compare(order, a, c) < 0

    @pytest.mark.parametrize("order", orders)
    @given(data=st.data())
    def test_multiplicative(self, order, data):
        ws = word3_st if len(order.alphabet) == 3 else word_st
        u, v, l, r = (data.draw(ws) for _ in range(4))
        if compare(order, u, v) < 0:
            assert compare(order, l + u + r, l + v + r) < 0

    @pytest.mark.parametrize("order", orders)
    @given(data=st.data())
    def test_factor_dominance(self, order, data):
        ws = word3_st if len(order.alphabet) == 3 else word_st
        u, l, r = (data.draw(ws) for _ in range(3))
        if l or r:
            assert compare(order, u, l + u + r) < 0

    def test_extension_puts_new_letter_lowest(self, yx_order):
        ext = yx_order.extend_with("T")
        assert ext.alphabet.letters == ("x", "y", "T")
        assert ext.precedence == (2, 1, 0)
        assert compare(ext, (2,), W("y")) == -1


class TestFields:
    def test_prime_field_arithmetic(self):
        F = Field(7)
        a = F(3)
        assert a * F(5) == 1
        assert F(Fraction(1, 3)) == 5
        assert -a == 4
        assert 1 / a == 5
        assert not F(14)

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            Field(9)

    def test_denominator_divisible_by_p(self):
        with pytest.raises(ZeroDivisionError):
            Field(5)(Fraction(1, 5))

    def test_mixing_moduli_fails(self):
        with pytest.raises(ValueError):
            ModInt(1, 5) + ModInt(1, 7)


class TestPoly:
    def test_zero_coefficients_dropped(self):
        p = Poly({W("x"): 1, W("y"): 0})
        assert dict(p.terms) == {W("x"): 1}
        assert Poly({W("x"): 1}) - Poly({W("x"): 1}) == Poly()

    def test_product_is_noncommutative(self, yx_order):
        x, y = Poly.monomial(W("x")), Poly.monomial(W("y"))
        assert x * y != y * x
        assert (x * y - y * x).format(yx_order) == "x*y - y*x"

    def test_format_coefficients(self, yx_order):
        f = Poly({W("xx"): Fraction(-2, 3), W("y"): 1, (): -4})
        assert f.format(yx_order) == "-2/3*x^2 + y - 4"


class TestLeadingMonomial:
    def test_examples(self, yx_order):
        f = poly("x^2 - y^2", yx_order)
        # exhaustive: only two terms, x^2 beats y^2 because y < x
        assert compare(yx_order, W("yy"), W("xx")) == -1
        assert leading_monomial(f, yx_order) == (1, W("xx"))
        assert leading_monomial(poly("3*x", yx_order), yx_order) == (3, W("x"))

    def test_zero_raises(self, yx_order):
        with pytest.raises(ValueError, match="no leading monomial"):
            leading_monomial(Poly(), yx_order)

    @pytest.mark.parametrize("order", orders[:2])
    @given(f=poly_st, g=poly_st)
    def test_lm_is_multiplicative(self, order, f, g):
        assert leading_word(f * g, order) == leading_word(f, order) + leading_word(g, order)


class TestReduce:
    def test_one_step_example(self, yx_order):
        g = poly("x^2 - y^2", yx_order)
        nf, trace = reduce(poly("x^2*y", yx_order), [g], yx_order)
        assert nf == poly("y^3", yx_order)
        assert len(trace) == 1
        assert (trace[0].left, trace[0].generator, trace[0].right) == ((), 0, W("y"))

    def test_self_reduction(self, yx_order):
        g = poly("x^2 - y^2", yx_order)
        assert reduce(g, [g], yx_order)[0] == Poly()

    def test_irreducible_input(self, yx_order):
        g = poly("x^2 - y^2", yx_order)
        f = poly("y^3", yx_order)
        assert reduce(f, [g], yx_order) == (f, [])

    def test_picks_first_generator(self, yx_order):
        g1, g2 = poly("x*y - y", yx_order), poly("x*y - x", yx_order)
        nf, trace = reduce(poly("x*y", yx_order), [g1, g2], yx_order)
        assert trace[0].generator == 0
        assert nf == poly("y", yx_order)

    def test_prime_field(self):
        F = Field(3)
        order = MonomialOrder(XY, (1, 0))
        from semiprim.textio import parse_polynomial
        g = parse_polynomial("x^2 - 2*y", XY, F)
        nf, trace = reduce(parse_polynomial("x^3", XY, F), [g], order)
        assert nf == parse_polynomial("2*y*x", XY, F)
        assert reconstruct(trace, [g], nf) == parse_polynomial("x^3", XY, F)

    @pytest.mark.parametrize("order", orders[:2])
    @settings(max_examples=150)
    @given(f=poly_st, G=st.lists(poly_st, min_size=1, max_size=3))
    def test_division_contract(self, order, f, G):
        nf, trace = reduce(f, G, order)
        assert reconstruct(trace, G, nf) == f
        assert is_irreducible(nf, [leading_word(g, order) for g in G])
        assert reduce(nf, G, order)[0] == nf

    @settings(max_examples=150)
    @given(data=st.data())
    def test_homogeneity_preserved(self, data):
        order = MonomialOrder(XYZ, (0, 2, 1), "weighted-deglex")
        deg = data.draw(st.integers(1, 5))
        pool = [w for n in range(deg + 1) for w in product(range(3), repeat=n)
                if XYZ.degree(w) == deg]
        hom = st.dictionaries(st.sampled_from(pool), coeff_st, min_size=1, max_size=4).map(Poly)
        f = data.draw(hom)
        G = []
        for _ in range(data.draw(st.integers(1, 2))):
            d = data.draw(st.integers(2, 3))
            gpool = [w for n in range(d + 1) for w in product(range(3), repeat=n)
                     if XYZ.degree(w) == d]
            G.append(data.draw(st.dictionaries(st.sampled_from(gpool), coeff_st,
                                               min_size=1, max_size=3).map(Poly)))
        nf = reduce(f, G, order)[0]
        assert not nf or {XYZ.degree(w) for w in nf.words()} == {deg}

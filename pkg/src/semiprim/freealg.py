"""
Exact arithmetic in the free algebra K<X_1, ..., X_n>.

Words are plain tuples of letter indices; the empty tuple is the monomial 1.
Polynomials map words to nonzero exact coefficients (``Fraction`` for the
rationals, :class:`ModInt` for prime fields).  Orderings are degree-first
lexicographic orderings, optionally using the weights of the alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple  # tuple[int, ...]

ONE: Word = ()

__all__ = [
    "Alphabet",
    "Field",
    "ModInt",
    "MonomialOrder",
    "ONE",
    "Poly",
    "Word",
    "compare",
    "divides",
    "leading_monomial",
    "occurrences",
    "reduce",
    "word_degree",
    "word_length",
]


############################################################################
# coefficients
############################################################################
class ModInt:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError(f"cannot mix F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return ModInt(other, self.p)
        if isinstance(other, Fraction):
            return ModInt(other.numerator, self.p) / ModInt(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModInt(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ModInt(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModInt(self.value * pow(other.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"ModInt({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The coefficient field: ``Field()`` is Q, ``Field(7)`` is F_7."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.modulus is None else f"Fp({self.modulus})"

    def __call__(self, value):
        if self.modulus is None:
            if isinstance(value, ModInt):
                raise TypeError("F_p element used over Q")
            return Fraction(value)
        if isinstance(value, ModInt):
            if value.p != self.modulus:
                raise ValueError(f"cannot coerce F_{value.p} element into {self.name}")
            return value
        value = Fraction(value)
        if value.denominator % self.modulus == 0:
            raise ZeroDivisionError(f"{value} has no image in {self.name}")
        return ModInt(value.numerator, self.modulus) / value.denominator

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


############################################################################
# alphabet and words
############################################################################
@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        weights = tuple(self.weights) if self.weights else (1,) * len(letters)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "weights", weights)
        if not letters:
            raise ValueError("alphabet needs at least one letter")
        if any(not name for name in letters):
            raise ValueError("letter names must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError("letter names must be distinct")
        if len(weights) != len(letters):
            raise ValueError("one weight per letter is required")
        for name, w in zip(letters, weights):
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {name!r} must be a positive integer, got {w!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise KeyError(f"unknown letter {name!r}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.index(name) for name in names)

    def degree(self, w: Word) -> int:
        return sum(self.weights[i] for i in w)

    @property
    def uniform(self) -> bool:
        return all(w == 1 for w in self.weights)

    def extend(self, name: str, weight: int = 1) -> "Alphabet":
        return Alphabet(self.letters + (name,), self.weights + (weight,))

    def format_word(self, w: Word) -> str:
        """``x*y^2`` style text; ``1`` for the empty word."""
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.letters[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


def word_length(w: Word) -> int:
    return len(w)


def word_degree(w: Word, alphabet: Alphabet) -> int:
    return alphabet.degree(w)


def occurrences(v: Word, u: Word) -> Iterator[int]:
    """Start offsets of ``v`` as a factor of ``u``, left to right."""
    n, m = len(u), len(v)
    for k in range(n - m + 1):
        if u[k:k + m] == v:
            yield k


def divides(v: Word, u: Word) -> tuple[Word, Word] | None:
    """Leftmost ``(w, s)`` with ``u == w + v + s``, or ``None``."""
    for k in occurrences(v, u):
        return u[:k], u[k + len(v):]
    return None


############################################################################
# orderings
############################################################################
ORDER_KINDS = ("deglex", "weighted-deglex")


@dataclass(frozen=True)
class MonomialOrder:
    """A degree-lexicographic ordering bound to an alphabet.

    ``precedence`` lists letter indices smallest first.  For ``deglex`` the
    degree is the word length; for ``weighted-deglex`` it is the weighted
    degree of the alphabet.
    """

    alphabet: Alphabet
    precedence: tuple[int, ...] = ()
    kind: str = "deglex"

    def __post_init__(self):
        prec = tuple(self.precedence) if self.precedence else tuple(range(len(self.alphabet)))
        object.__setattr__(self, "precedence", prec)
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}")
        if sorted(prec) != list(range(len(self.alphabet))):
            raise ValueError("precedence must be a permutation of the letter indices")
        rank = [0] * len(prec)
        for r, i in enumerate(prec):
            rank[i] = r
        object.__setattr__(self, "_rank", tuple(rank))

    def degree(self, w: Word) -> int:
        if self.kind == "deglex":
            return len(w)
        return self.alphabet.degree(w)

    def key(self, w: Word) -> tuple:
        rank = self._rank
        return (self.degree(w), tuple(rank[i] for i in w))

    @property
    def is_graded(self) -> bool:
        """Whether the ordering compares weighted degree first."""
        return self.kind == "weighted-deglex" or self.alphabet.uniform

    def extend_with(self, name: str = "T", weight: int = 1) -> "MonomialOrder":
        """Append a new letter to the alphabet with the lowest precedence."""
        alphabet = self.alphabet.extend(name, weight)
        new = len(self.alphabet)
        return MonomialOrder(alphabet, (new,) + self.precedence, self.kind)

    def describe(self) -> str:
        names = " < ".join(self.alphabet.letters[i] for i in self.precedence)
        head = "deglex" if self.kind == "deglex" else "wdeglex"
        return f"{head}({names})"


def compare(order: MonomialOrder, u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is smaller than, equal to or greater than ``v``."""
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


############################################################################
# polynomials
############################################################################
class Poly:
    """Immutable noncommutative polynomial: a finite map word -> coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, object] = {}
        for w, c in items:
            w = tuple(w)
            if type(c) is int:
                c = Fraction(c)
            if w in acc:
                acc[w] = acc[w] + c
            else:
                acc[w] = c
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, w: Word, coeff=1) -> "Poly":
        return cls({tuple(w): coeff})

    @property
    def terms(self) -> Mapping[Word, object]:
        return self._terms

    def words(self):
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def coeff(self, w: Word):
        return self._terms.get(tuple(w), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self._terms!r})"

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return Poly(terms)

    def __neg__(self) -> "Poly":
        return Poly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] - c if w in terms else -c
        return Poly(terms)

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        terms: dict[Word, object] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                terms[w] = terms[w] + a * b if w in terms else a * b
        return Poly(terms)

    def __rmul__(self, scalar) -> "Poly":
        return self.scale(scalar)

    def __pow__(self, q: int) -> "Poly":
        if q < 0:
            raise ValueError("negative power")
        result = None
        for _ in range(q):
            result = self if result is None else result * self
        if result is None:
            raise ValueError("zeroth power needs a field; multiply out explicitly")
        return result

    def scale(self, scalar) -> "Poly":
        return Poly({w: c * scalar for w, c in self._terms.items()})

    def sandwich(self, left: Word = ONE, right: Word = ONE, scalar=1) -> "Poly":
        """``scalar * left * self * right`` for words ``left`` and ``right``."""
        left, right = tuple(left), tuple(right)
        return Poly({left + w + right: c * scalar for w, c in self._terms.items()})

    def map_words(self, fn) -> "Poly":
        return Poly([(fn(w), c) for w, c in self._terms.items()])

    def is_homogeneous(self, alphabet: Alphabet) -> bool:
        return len({alphabet.degree(w) for w in self._terms}) <= 1

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Word, object]]:
        """Terms from the greatest word down."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def format(self, order: MonomialOrder) -> str:
        if not self._terms:
            return "0"
        out = []
        for n, (w, c) in enumerate(self.sorted_terms(order)):
            negative = _is_negative(c)
            mag = -c if negative else c
            word = order.alphabet.format_word(w)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = word
            else:
                body = f"{mag}*{word}"
            if n == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)


def _is_negative(c) -> bool:
    # F_p elements print as their least nonnegative representative
    return isinstance(c, Fraction) and c < 0 or isinstance(c, int) and c < 0


def leading_monomial(f: Poly, order: MonomialOrder):
    """``(LC(f), LM(f))``."""
    if not f:
        raise ValueError("zero polynomial has no leading monomial")
    w = max(f.words(), key=order.key)
    return f.coeff(w), w


def leading_word(f: Poly, order: MonomialOrder) -> Word:
    return leading_monomial(f, order)[1]


def monic(f: Poly, order: MonomialOrder) -> Poly:
    lc, _ = leading_monomial(f, order)
    return f if lc == 1 else f.scale(1 / lc)


############################################################################
# division
############################################################################
@dataclass(frozen=True)
class TraceStep:
    coeff: object
    left: Word
    generator: int
    right: Word


def reduce(f: Poly, G: Sequence[Poly], order: MonomialOrder) -> tuple[Poly, list[TraceStep]]:
    """Full division of ``f`` by ``G``.

    Always rewrites the greatest reducible term, using the first generator
    (in list order) whose leading word divides it, at its leftmost
    occurrence.  Returns the normal form and the steps, so that
    ``f == sum(c * l*G[i]*r) + nf``.
    """
    leads = []
    for g in G:
        if not g:
            raise ValueError("cannot divide by the zero polynomial")
        leads.append(leading_monomial(g, order))

    work = dict(f.terms)
    done: dict[Word, object] = {}
    trace: list[TraceStep] = []
    key = order.key
    while work:
        w = max(work, key=key)
        c = work[w]
        for gi, (lc, lm) in enumerate(leads):
            split = divides(lm, w)
            if split is None:
                continue
            left, right = split
            q = c / lc
            trace.append(TraceStep(q, left, gi, right))
            for v, a in G[gi].items():
                t = left + v + right
                val = work.get(t, 0) - q * a
                if val == 0:
                    work.pop(t, None)
                else:
                    work[t] = val
            break
        else:
            done[w] = work.pop(w)
    return Poly(done), trace


def normal_form(f: Poly, G: Sequence[Poly], order: MonomialOrder) -> Poly:
    return reduce(f, G, order)[0]


def reconstruct(trace: Sequence[TraceStep], G: Sequence[Poly], nf: Poly) -> Poly:
    """Rebuild the dividend from a division trace."""
    total = nf
    for step in trace:
        total = total + G[step.generator].sandwich(step.left, step.right, step.coeff)
    return total


def is_irreducible(f: Poly, leads: Iterable[Word]) -> bool:
    leads = list(leads)
    return all(divides(lm, w) is None for w in f.words() for lm in leads)

"""
Presentation files.

A presentation file is line oriented::

    # comment
    letters = x, y
    weights = 1, 1            # optional, default all 1
    order = deglex(y < x)     # or wdeglex(...) to compare weighted degree
    field = Q                 # or Fp(7); optional, default Q
    relations:
    x^2 - y^2
    x*y^2 - y^2*x

Each relation is a sum of terms ``c*w`` where ``c`` is an optional integer
or ``a/b`` rational and ``w`` a ``*``-separated product of letters with
optional ``^k`` powers.  Juxtaposition (``x y``, ``2x``) is an error since
the letters do not commute.  ``T`` is reserved for homogenization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .freealg import Alphabet, Field, MonomialOrder, Poly, is_prime
from .transfer import Presentation

RESERVED = "T"

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"malformed token {text[start]!r}", line, col0 + start + 1)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), col0 + m.start(kind) + 1))
        pos = m.end()
    return toks


class _PolyParser:
    def __init__(self, toks, line, end_col, alphabet: Alphabet, field: Field):
        self.toks = toks
        self.i = 0
        self.line = line
        self.end_col = end_col
        self.alphabet = alphabet
        self.field = field

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, msg, tok=None):
        col = tok.col if tok is not None else self.end_col
        raise ParseError(msg, self.line, col)

    def take(self, kind=None, text=None):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of line")
        if (kind and tok.kind != kind) or (text and tok.text != text):
            self.error(f"unexpected {tok.text!r}", tok)
        self.i += 1
        return tok

    def parse(self) -> Poly:
        terms = []
        sign = 1
        tok = self.peek()
        if tok is None:
            self.error("empty relation")
        if tok.kind == "op" and tok.text in "+-":
            sign = -1 if tok.text == "-" else 1
            self.i += 1
        terms.append(self.term(sign))
        while self.peek() is not None:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.i += 1
                terms.append(self.term(-1 if tok.text == "-" else 1))
            else:
                self.error(f"expected '+' or '-' before {tok.text!r} (juxtaposition is not a product)", tok)
        return Poly(terms)

    def term(self, sign):
        coeff = Fraction(sign)
        word = ()
        tok = self.peek()
        if tok is None:
            self.error("missing term")
        if tok.kind == "num":
            self.i += 1
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "/":
                self.i += 1
                den = self.take("num")
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value /= int(den.text)
            coeff *= value
            nxt = self.peek()
            if nxt is None or (nxt.kind == "op" and nxt.text in "+-"):
                return self._make(coeff, word, tok)
            if nxt.kind == "op" and nxt.text == "*":
                self.i += 1
            else:
                self.error(f"expected '*' after coefficient, got {nxt.text!r}", nxt)
        word += self.factor()
        while True:
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "*":
                self.i += 1
                word += self.factor()
            else:
                break
        return self._make(coeff, word, tok)

    def _make(self, coeff, word, tok):
        try:
            return word, self.field(coeff)
        except ZeroDivisionError as exc:
            self.error(str(exc), tok)

    def factor(self):
        tok = self.peek()
        if tok is None:
            self.error("expected a letter")
        if tok.kind == "num" and tok.text == "1":
            self.i += 1
            return ()
        if tok.kind != "name":
            self.error(f"expected a letter, got {tok.text!r}", tok)
        self.i += 1
        if tok.text not in self.alphabet.letters:
            self.error(f"unknown letter {tok.text!r}", tok)
        letter = self.alphabet.index(tok.text)
        nxt = self.peek()
        power = 1
        if nxt is not None and nxt.kind == "op" and nxt.text == "^":
            self.i += 1
            num = self.take("num")
            power = int(num.text)
        return (letter,) * power


def parse_polynomial(text: str, alphabet: Alphabet, field: Field = Field(),
                     line: int = 1, column: int = 0) -> Poly:
    toks = _tokenize(text, line, column)
    return _PolyParser(toks, line, column + len(text.rstrip()) + 1, alphabet, field).parse()


def _split_list(value: str, line: int, col: int) -> list[tuple[str, int]]:
    out = []
    offset = 0
    for part in value.split(","):
        stripped = part.strip()
        start = col + offset + (len(part) - len(part.lstrip())) + 1
        if not stripped:
            raise ParseError("empty list entry", line, start)
        out.append((stripped, start))
        offset += len(part) + 1
    return out


_ORDER = re.compile(r"^(deglex|wdeglex)\s*\((.*)\)\s*$")
_FIELD = re.compile(r"^(?:Q|Fp\s*\(\s*(\d+)\s*\))$")


def parse_presentation(text: str) -> Presentation:
    letters = weights = order_spec = None
    field = Field()
    relations: list[tuple[str, int, int]] = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if in_relations:
            col = len(body) - len(body.lstrip())
            relations.append((body.strip(), lineno, col))
            continue
        stripped = body.strip()
        indent = len(body) - len(body.lstrip())
        if stripped == "relations:":
            in_relations = True
            continue
        if "=" not in stripped:
            raise ParseError(f"expected 'key = value' or 'relations:', got {stripped!r}", lineno, indent + 1)
        key, value = stripped.split("=", 1)
        key = key.strip()
        vcol = indent + stripped.index("=") + 1 + (len(value) - len(value.lstrip()))
        value = value.strip()
        if key == "letters":
            names = _split_list(value, lineno, vcol)
            for name, col in names:
                if not _NAME.fullmatch(name):
                    raise ParseError(f"bad letter name {name!r}", lineno, col)
                if name == RESERVED:
                    raise ParseError(f"letter name {RESERVED!r} is reserved for homogenization", lineno, col)
            if len({n for n, _ in names}) != len(names):
                raise ParseError("duplicate letter name", lineno, vcol + 1)
            letters = names
        elif key == "weights":
            weights = []
            for item, col in _split_list(value, lineno, vcol):
                if not item.isdigit():
                    raise ParseError(f"weight must be a positive integer, got {item!r}", lineno, col)
                if int(item) == 0:
                    raise ParseError("zero weight", lineno, col)
                weights.append(int(item))
        elif key == "order":
            m = _ORDER.match(value)
            if m is None:
                raise ParseError("order must look like deglex(y < x) or wdeglex(y < x)", lineno, vcol + 1)
            inner_col = vcol + m.start(2)
            chain = []
            offset = 0
            for part in m.group(2).split("<"):
                chain.append((part.strip(), inner_col + offset + (len(part) - len(part.lstrip())) + 1))
                offset += len(part) + 1
            order_spec = (m.group(1), chain, lineno, vcol + 1)
        elif key == "field":
            m = _FIELD.match(value)
            if m is None:
                raise ParseError("field must be Q or Fp(p)", lineno, vcol + 1)
            if m.group(1) is not None:
                p = int(m.group(1))
                if not is_prime(p):
                    raise ParseError(f"modulus {p} is not prime", lineno, vcol + 1)
                field = Field(p)
            else:
                field = Field()
        else:
            raise ParseError(f"unknown key {key!r}", lineno, indent + 1)

    if letters is None:
        raise ParseError("missing 'letters = ...' line", 1, 1)
    names = tuple(n for n, _ in letters)
    if weights is not None and len(weights) != len(names):
        raise ParseError(f"{len(weights)} weights for {len(names)} letters", 1, 1)
    alphabet = Alphabet(names, tuple(weights) if weights else ())
    if order_spec is None:
        raise ParseError("missing 'order = deglex(...)' line", 1, 1)
    kind, chain, oline, ocol = order_spec
    prec = []
    for name, col in chain:
        if name not in names:
            raise ParseError(f"unknown letter {name!r} in order", oline, col)
        prec.append(names.index(name))
    if sorted(prec) != list(range(len(names))):
        raise ParseError("order must list every letter exactly once", oline, ocol)
    order = MonomialOrder(alphabet, tuple(prec), "deglex" if kind == "deglex" else "weighted-deglex")

    polys = []
    for rel, lineno, col in relations:
        f = parse_polynomial(rel, alphabet, field, lineno, col)
        if not f:
            raise ParseError("empty relation (it simplifies to 0)", lineno, col + 1)
        polys.append(f)
    return Presentation(order, tuple(polys), field)


def format_presentation(p: Presentation) -> str:
    a = p.alphabet
    head = "deglex" if p.order.kind == "deglex" else "wdeglex"
    chain = " < ".join(a.letters[i] for i in p.order.precedence)
    lines = [
        f"letters = {', '.join(a.letters)}",
        f"weights = {', '.join(map(str, a.weights))}",
        f"order = {head}({chain})",
        f"field = {p.field.name}",
        "relations:",
    ]
    lines += [p.fmt(f) for f in p.relations]
    return "\n".join(lines) + "\n"


def read_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())

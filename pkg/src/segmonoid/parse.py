"""Element literals and product/power/transpose expressions.

Grammar (whitespace is ignored everywhere)::

    expr := term (('*' | <juxtaposition>) term)*
    term := atom ('^' integer | 'T')*
    atom := '0' | '(' rat ',' rat ',' rat ')' | '(' expr ')'
    rat  := ['-'] integer ['/' positive-integer]

Products are left-associative and postfix operators bind tighter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Union

from .algebra import Element, check_ambient, inverse, make_element, multiply, power


class ParseError(ValueError):
    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"at position {position}: {message}{detail}")


class Token(NamedTuple):
    kind: str  # 'int', a punctuation character, or 'end'
    text: str
    pos: int


_PUNCT = set("()*,/^-T")


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
        elif c in _PUNCT:
            tokens.append(Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class Literal:
    value: Element

    def evaluate(self) -> Element:
        return self.value


@dataclass(frozen=True)
class Product:
    left: "Expression"
    right: "Expression"

    def evaluate(self) -> Element:
        return multiply(self.left.evaluate(), self.right.evaluate())


@dataclass(frozen=True)
class Power:
    base: "Expression"
    exponent: int

    def evaluate(self) -> Element:
        return power(self.base.evaluate(), self.exponent)


@dataclass(frozen=True)
class Transpose:
    operand: "Expression"

    def evaluate(self) -> Element:
        return inverse(self.operand.evaluate())


Expression = Union[Literal, Product, Power, Transpose]

_ATOM_START = frozenset({"0", "("})


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = tokenize(text)
        self.i = 0
        self.n = n

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError(f"unexpected {self.describe()}", self.tok.pos, {kind})
        return self.advance()

    def describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def starts_atom(self) -> bool:
        t = self.tok
        return t.kind == "(" or (t.kind == "int" and t.text.startswith("0"))

    def parse(self) -> Expression:
        expr = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.describe()}", self.tok.pos, {"*", "^", "T", "(", "0", "end of input"})
        return expr

    def expr(self) -> Expression:
        left = self.term()
        while True:
            if self.tok.kind == "*":
                self.advance()
                left = Product(left, self.term())
            elif self.starts_atom():
                left = Product(left, self.term())
            else:
                return left

    def term(self) -> Expression:
        node = self.atom()
        while True:
            if self.tok.kind == "^":
                self.advance()
                t = self.tok
                if t.kind != "int" or int(t.text) < 1:
                    raise ParseError(f"unexpected {self.describe()}", t.pos, {"positive integer"})
                self.advance()
                node = Power(node, int(t.text))
            elif self.tok.kind == "T":
                self.advance()
                node = Transpose(node)
            else:
                return node

    def atom(self) -> Expression:
        t = self.tok
        if t.kind == "int" and t.text.startswith("0"):
            # a zero atom is one character, so '00' is two juxtaposed zeros
            if len(t.text) == 1:
                self.advance()
            else:
                self.tokens[self.i] = Token("int", t.text[1:], t.pos + 1)
            return Literal(Element(self.n))
        if t.kind != "(":
            raise ParseError(f"unexpected {self.describe()}", t.pos, _ATOM_START)
        self.advance()
        t = self.tok
        if t.kind == "-" or (t.kind == "int" and t.text != "0"):
            return self.triplet_rest(self.rat())
        if t.kind == "int":
            # '(0' opens either a triplet or a parenthesised expression
            save = self.i
            first = self.rat()
            if self.tok.kind == ",":
                return self.triplet_rest(first)
            self.i = save
        inner = self.expr()
        self.expect(")")
        return inner

    def triplet_rest(self, k: Fraction) -> Literal:
        self.expect(",")
        d = self.rat()
        self.expect(",")
        m = self.rat()
        self.expect(")")
        return Literal(make_element(self.n, k, d, m))

    def rat(self) -> Fraction:
        sign = 1
        if self.tok.kind == "-":
            self.advance()
            sign = -1
        num = self.expect("int")
        value = Fraction(int(num.text))
        if self.tok.kind == "/":
            self.advance()
            den = self.expect("int")
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.pos, {"positive integer"})
            value /= int(den.text)
        return sign * value


def parse_expression(text: str, n: int) -> Expression:
    """Parse ``text`` into an expression tree over the monoid of size ``n``.

    Literals are validated as they are read, so an out-of-range triplet
    raises :class:`~segmonoid.algebra.ValidationError`.
    """
    check_ambient(n)
    return _Parser(text, n).parse()


def evaluate(text: str, n: int) -> Element:
    return parse_expression(text, n).evaluate()


def parse_element(text: str, n: int) -> Element:
    """Parse a single literal, ``0`` or ``(k,d,m)``."""
    expr = parse_expression(text, n)
    if not isinstance(expr, Literal):
        raise ParseError("expected a single element literal", 0, {"0", "(k,d,m)"})
    return expr.value


def parse_rational(text: str) -> Fraction:
    p = _Parser(text, 2)
    value = p.rat()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.describe()}", p.tok.pos, {"end of input"})
    return value

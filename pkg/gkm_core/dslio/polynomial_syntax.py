"""Text syntax for polynomials in t1..tk.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" unary) | ("/" integer))*
    unary  := ("+" | "-")* power
    power  := atom ("^" integer)?
    atom   := integer | "t" index | "(" expr ")"

so `3/2*t1^2*t2 - t3`, `t2*(t2-t1)` and `-(t1+t2)^2` are all accepted. Errors
carry the line and column of the offending token.

Degrees, exponents, parenthesis nesting and integer literals are bounded by
the limits below; input beyond them is a parse error.
"""

from __future__ import annotations

import dataclasses
import fractions
import re
import typing

from gkm_core.exceptions import GKMParseError
from gkm_core.polyring import LinearForm, Polynomial

TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<variable>t\d+)
  | (?P<operator>[-+*/^()])
    """,
    re.VERBOSE,
)

MAX_DEGREE = 64
MAX_NESTING = 64
MAX_DIGITS = 100


@dataclasses.dataclass(frozen=True)
class Token:
    kind: typing.Literal["number", "variable", "operator", "end"]
    text: str
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN.match(text, position)
        if match is None:
            raise GKMParseError(
                f"unexpected character {text[position]!r}", line, column + position
            )
        if match.lastgroup != "space":
            tokens.append(Token(match.lastgroup, match.group(), column + position))
        position = match.end()
    tokens.append(Token("end", "", column + len(text)))
    return tokens


class PolynomialParser:
    def __init__(self, text: str, k: int, line: int = 1, column: int = 1):
        self.k = k
        self.line = line
        self.tokens = tokenize(text, line, column)
        self.position = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def error(self, message: str, token: Token | None = None) -> GKMParseError:
        token = token or self.current
        return GKMParseError(message, self.line, token.column)

    def advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def accept(self, *operators: str) -> Token | None:
        if self.current.kind == "operator" and self.current.text in operators:
            return self.advance()
        return None

    def integer(self, token: Token) -> int:
        if len(token.text) > MAX_DIGITS:
            raise self.error(f"integers above {MAX_DIGITS} digits are not supported", token)
        return int(token.text)

    def expect_integer(self) -> int:
        if self.current.kind != "number":
            found = self.current.text or "end of input"
            raise self.error(f"expected an integer, found {found!r}")
        return self.integer(self.advance())

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise self.error("empty polynomial")
        result = self.expr()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while operator := self.accept("+", "-"):
            right = self.term()
            result = result + right if operator.text == "+" else result - right
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            if star := self.accept("*"):
                right = self.unary()
                if not result.is_zero and not right.is_zero:
                    if result.degree + right.degree > MAX_DEGREE:
                        raise self.error(
                            f"polynomials above degree {MAX_DEGREE} are not supported", star
                        )
                result = result * right
            elif slash := self.accept("/"):
                divisor = self.expect_integer()
                if divisor == 0:
                    raise self.error("division by zero", slash)
                result = result * fractions.Fraction(1, divisor)
            else:
                return result

    def unary(self) -> Polynomial:
        negative = False
        while sign := self.accept("-", "+"):
            negative ^= sign.text == "-"
        result = self.power()
        return -result if negative else result

    def power(self) -> Polynomial:
        base = self.atom()
        if caret := self.accept("^"):
            exponent = self.expect_integer()
            if exponent > MAX_DEGREE or (not base.is_zero and base.degree * exponent > MAX_DEGREE):
                raise self.error(f"powers above degree {MAX_DEGREE} are not supported", caret)
            return base**exponent
        return base

    def atom(self) -> Polynomial:
        token = self.current
        match token.kind:
            case "number":
                self.advance()
                return Polynomial.constant(self.k, self.integer(token))
            case "variable":
                self.advance()
                if len(token.text) > MAX_DIGITS or not 1 <= int(token.text[1:]) <= self.k:
                    raise self.error(
                        f"variable {token.text} outside t1..t{self.k}", token
                    )
                return Polynomial.variable(self.k, int(token.text[1:]))
            case "operator" if token.text == "(":
                if self.depth >= MAX_NESTING:
                    raise self.error(
                        f"parentheses nested deeper than {MAX_NESTING} are not supported", token
                    )
                self.advance()
                self.depth += 1
                inner = self.expr()
                self.depth -= 1
                if not self.accept(")"):
                    raise self.error("expected ')'")
                return inner
            case "end":
                raise self.error("unexpected end of input")
            case _:
                raise self.error(f"unexpected {token.text!r}")


def parse_polynomial(text: str, k: int, line: int = 1, column: int = 1) -> Polynomial:
    return PolynomialParser(text, k, line, column).parse()


def parse_linear_form(text: str, k: int, line: int = 1, column: int = 1) -> LinearForm:
    p = parse_polynomial(text, k, line, column)
    if p.is_zero or not p.is_homogeneous(1):
        raise GKMParseError(f"'{text.strip()}' is not a nonzero linear form", line, column)
    return LinearForm.from_polynomial(p)


def format_polynomial(p: Polynomial, factored: bool = False) -> str:
    """Compact text that `parse_polynomial` reads back to the same polynomial."""
    return p.factored() if factored else p.to_text(compact=True)

"""Text form of polynomials.

Grammar (whitespace is insignificant, juxtaposition is not multiplication)::

    expr     := term (("+" | "-") term)*
    term     := ["-"] factor ("*" factor)*
    factor   := base ("^" nat)?
    base     := var | rational | "(" expr ")"
    var      := ("x" | "u" | "a") nat
    rational := nat ("/" nat)?

The letters ``x``, ``u`` and ``a`` name the same indexed variables; one
expression may use only one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Polynomial
from .errors import ParseError

ALPHABETS = ("x", "u", "a")
MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Token:
    kind: str  # "var", "num", "op", "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        start_col = col
        if ch in "+-*^/()":
            tokens.append(Token("op", ch, line, start_col))
            i, col = i + 1, col + 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("num", text[i:j], line, start_col))
            col += j - i
            i = j
        elif ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            word = text[i:j]
            if ch not in ALPHABETS:
                raise ParseError(f"unknown variable letter {ch!r}", line, start_col)
            if len(word) == 1:
                raise ParseError(f"variable {ch!r} needs an index", line, start_col)
            tokens.append(Token("var", word, line, start_col))
            col += j - i
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = tokenize(text)
        self.pos = 0
        self.nvars = nvars
        self.alphabet = None

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def take(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.at_op("+", "-"):
            op = self.take().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        negate = False
        if self.at_op("-"):
            self.take()
            negate = True
        result = self.factor()
        while self.at_op("*"):
            self.take()
            result = result * self.factor()
        return -result if negate else result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.at_op("^"):
            self.take()
            tok = self.tok
            if tok.kind != "num":
                raise self.error("exponent must be a non-negative integer")
            self.take()
            e = int(tok.text)
            if e > MAX_EXPONENT:
                raise self.error(f"exponent {e} exceeds {MAX_EXPONENT}", tok)
            if self.at_op("^"):
                raise self.error("chained exponents need parentheses")
            return base**e
        return base

    def base(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "var":
            self.take()
            letter, index = tok.text[0], int(tok.text[1:])
            if self.alphabet is None:
                self.alphabet = letter
            elif letter != self.alphabet:
                raise self.error(f"mixed variable alphabets {self.alphabet!r} and {letter!r}", tok)
            if not 1 <= index <= self.nvars:
                raise self.error(f"variable index {index} out of range 1..{self.nvars}", tok)
            return Polynomial.variable(self.nvars, index)
        if tok.kind == "num":
            self.take()
            value = Fraction(int(tok.text))
            if self.at_op("/"):
                self.take()
                den = self.tok
                if den.kind != "num":
                    raise self.error("expected denominator")
                self.take()
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                value /= int(den.text)
            return Polynomial.constant(self.nvars, value)
        if self.at_op("("):
            self.take()
            inner = self.expr()
            if not self.at_op(")"):
                raise self.error("expected ')'")
            self.take()
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def parse(text: str, nvars: int) -> Polynomial:
    """Parse ``text`` into a polynomial in ``nvars`` variables."""
    return _Parser(text, nvars).parse()


def parse_with_alphabet(text: str, nvars: int) -> tuple[Polynomial, str]:
    """Like :func:`parse`, also returning the letter used (``"x"`` if none)."""
    p = _Parser(text, nvars)
    result = p.parse()
    return result, p.alphabet or "x"


def _format_monomial(mono, alphabet):
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"{alphabet}{i}")
        elif e:
            parts.append(f"{alphabet}{i}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, alphabet: str = "x") -> str:
    if alphabet not in ALPHABETS:
        raise ValueError(f"alphabet must be one of {ALPHABETS}")
    if p.is_zero():
        return "0"
    out = []
    for mono, c in p.terms():
        mag = abs(c)
        body = _format_monomial(mono, alphabet)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append("-" + text if c < 0 else text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)

"""Tokenizer and parser for linear combinations of products of atoms.

Every text format in the package (Lie elements, polynomials, PBW vectors,
scalars) is a signed sum of terms ``coeff * atom^k * atom * ...``.  The
domain modules supply an ``atom`` callback that turns ``NAME(args)`` or
``NAME[args]`` into a domain object; this module handles the rest.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .scalar import ONE, I_UNIT, Scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text):
    text = text.replace("−", "-").replace("·", "*")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(Token("num", m.group(1), start))
        elif m.group(2) is not None:
            out.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(Token("op", ch, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, atom):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.atom = atom

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.tok
        if t.kind != "op" or t.text != text:
            found = t.text or "end of input"
            raise ParseError(f"unexpected {found!r}", t.pos, repr(text))
        return self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0, "a term")
        terms = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos, "'+', '-', '*' or end of input")
        return terms

    def expr(self):
        terms = []
        sign = ONE
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = -ONE if self.advance().text == "-" else ONE
        while True:
            coeff, atoms = self.term()
            terms.append((sign * coeff, atoms))
            if self.tok.kind == "op" and self.tok.text in "+-":
                sign = -ONE if self.advance().text == "-" else ONE
            else:
                return terms

    def term(self):
        coeff, atoms = self.factor()
        atoms = list(atoms)
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance()
            c, a = self.factor()
            if op.text == "/":
                if a:
                    raise ParseError("division by a non-scalar", op.pos, "a scalar divisor")
                if not c:
                    raise ParseError("division by zero", op.pos)
                coeff = coeff / c
            else:
                coeff = coeff * c
                atoms.extend(a)
        return coeff, atoms

    def factor(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Scalar(int(t.text)), []
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            if any(a for _, a in inner):
                raise ParseError("parenthesised sums may contain scalars only", t.pos)
            total = Scalar(0)
            for c, _ in inner:
                total = total + c
            return total, []
        if t.kind == "op" and t.text == "-":
            # "2*-3" style unary minus inside a product
            self.advance()
            c, a = self.factor()
            return -c, a
        if t.kind == "name":
            self.advance()
            if t.text == "i" and not (self.tok.kind == "op" and self.tok.text in "(["):
                return I_UNIT, []
            args = None
            bracket = None
            if self.tok.kind == "op" and self.tok.text in "([":
                bracket = self.advance().text
                args = self.args(")" if bracket == "(" else "]")
            power = 1
            if self.tok.kind == "op" and self.tok.text == "^":
                self.advance()
                n = self.tok
                if n.kind != "num":
                    raise ParseError("bad exponent", n.pos, "a non-negative integer")
                self.advance()
                power = int(n.text)
            atom = self.atom(t.text, args, bracket, t.pos)
            if power == 0:
                return ONE, []
            return ONE, [(atom, power)]
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos, "a number, '(' or a symbol")

    def args(self, close):
        vals = []
        while True:
            vals.append(self.rational())
            if self.tok.kind == "op" and self.tok.text == ",":
                self.advance()
                continue
            self.expect(close)
            return tuple(vals)

    def rational(self):
        sign = 1
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self.advance().text == "-":
                sign = -sign
        t = self.tok
        if t.kind != "num":
            raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos, "an integer")
        self.advance()
        value = Fraction(int(t.text))
        if self.tok.kind == "op" and self.tok.text == "/":
            self.advance()
            d = self.tok
            if d.kind != "num":
                raise ParseError("bad denominator", d.pos, "an integer")
            self.advance()
            if int(d.text) == 0:
                raise ParseError("zero denominator", d.pos)
            value /= int(d.text)
        # allow "m+i/p" mode notation such as N(1,0+1/3)
        while self.tok.kind == "op" and self.tok.text in "+-":
            sgn = 1 if self.advance().text == "+" else -1
            value = sign * value
            sign = 1
            value += sgn * self.rational()
        return sign * value


def parse_terms(text, atom):
    """Parse ``text`` into ``[(Scalar, [(atom, power), ...]), ...]``."""
    if not isinstance(text, str):
        raise ParseError(f"expected text, got {type(text).__name__}")
    return _Parser(text, atom).parse()


def _no_atoms(name, args, bracket, pos):
    raise ParseError(f"unexpected symbol {name!r} in a scalar", pos, "a number or 'i'")


def parse_scalar(text):
    total = Scalar(0)
    for c, _ in parse_terms(text, _no_atoms):
        total = total + c
    return total


def format_term(coeff, body):
    """Render ``coeff*body``; ``body`` is '' for a pure scalar term."""
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    text = str(coeff)
    if coeff.needs_parens():
        text = f"({text})"
    return f"{text}*{body}"


def join_terms(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out

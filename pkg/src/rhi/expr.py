"""Parser for algebra-element expressions.

Grammar: rational literals ("a/b" or integers), generator/basis names, "+",
"-", "*", "^" and parentheses.  "*" is algebra multiplication evaluated
left-to-right (the order matters for signs); "^" repeats multiplication with
a non-negative integer exponent.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\s*/\s*\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> list[tuple[str, object]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos} in {text!r}")
        if m.group("num"):
            lit = m.group("num").replace(" ", "")
            if "/" in lit:
                num, den = lit.split("/")
                if int(den) == 0:
                    raise ParseError(f"zero denominator in literal {lit!r}")
                tokens.append(("num", Fraction(int(num), int(den))))
            else:
                tokens.append(("num", Fraction(int(lit))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value = self.peek()
        shown = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {expected}, found {shown} in {self.text!r}")

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("end of expression")
        return node

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.next()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "*"):
            self.next()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        if self.peek() == ("op", "-"):
            self.next()
            return ("neg", self.factor())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == ("op", "^"):
            self.next()
            kind, value = self.peek()
            if kind != "num" or value.denominator != 1 or value < 0:
                self.fail("a non-negative integer exponent after '^'")
            self.next()
            node = ("pow", node, int(value))
        return node

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.next()
            return ("num", value)
        if kind == "name":
            self.next()
            return ("sym", value)
        if (kind, value) == ("op", "("):
            self.next()
            node = self.expr()
            if self.peek() != ("op", ")"):
                self.fail("')'")
            self.next()
            return node
        self.fail("a literal, name or '('")


def parse(text: str):
    """Parse an expression into an AST of nested tuples."""
    return _Parser(tokenize(text), text).parse()


def evaluate(node, scalar, symbol):
    """Evaluate an AST.

    `scalar(Fraction)` embeds a literal, `symbol(name)` resolves a name; the
    returned values must support +, -, unary - and * (in that order of use).
    """
    kind = node[0]
    if kind == "num":
        return scalar(node[1])
    if kind == "sym":
        return symbol(node[1])
    if kind == "add":
        return evaluate(node[1], scalar, symbol) + evaluate(node[2], scalar, symbol)
    if kind == "sub":
        return evaluate(node[1], scalar, symbol) - evaluate(node[2], scalar, symbol)
    if kind == "neg":
        return -evaluate(node[1], scalar, symbol)
    if kind == "mul":
        return evaluate(node[1], scalar, symbol) * evaluate(node[2], scalar, symbol)
    if kind == "pow":
        base = evaluate(node[1], scalar, symbol)
        out = scalar(Fraction(1))
        for _ in range(node[2]):
            out = out * base
        return out
    raise AssertionError(f"unknown node {node!r}")


def parse_eval(text: str, scalar, symbol):
    return evaluate(parse(text), scalar, symbol)

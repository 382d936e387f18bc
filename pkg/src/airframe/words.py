"""Parsing group words.

Grammar (LL(1)):

    word    := factor factor*          juxtaposition = composition,
                                       rightmost factor applied first
    factor  := primary postfix*
    postfix := "'" | "^" integer | "^" primary
    primary := name | "(" word ")" | "[" word "," word "]"

x^y is conjugation y^-1 x y; [x, y] is the commutator x y x' y'.
Postfixes bind tighter than juxtaposition and apply left to right.
"""

import re


class WordSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at offset %d)" % (message, pos))
        self.pos = pos


LONG_NAMES = {"alpha": "a", "beta": "b", "gamma": "g",
              "delta": "d", "epsilon": "e"}

_TOKEN = re.compile(r"\s*([a-z][a-z0-9]*|-?\d+|[()\[\],'^])")


def tokenize(src):
    out = []
    i = 0
    while i < len(src):
        while i < len(src) and src[i].isspace():
            i += 1
        if i == len(src):
            break
        m = _TOKEN.match(src, i)
        if not m:
            raise WordSyntaxError("unexpected character %r" % src[i],
                                  i)
        out.append((m.group(1), m.start(1)))
        i = m.end()
    return out


class Parser:
    def __init__(self, src):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) \
            else len(self.src)

    def take(self, expected=None):
        if self.i >= len(self.toks):
            raise WordSyntaxError("unexpected end of word", len(self.src))
        tok, pos = self.toks[self.i]
        if expected is not None and tok != expected:
            raise WordSyntaxError("expected %r, found %r" % (expected, tok),
                                  pos)
        self.i += 1
        return tok, pos

    def parse(self):
        expr = self.word()
        if self.i < len(self.toks):
            raise WordSyntaxError("trailing input %r" % self.peek(),
                                  self.pos())
        return expr

    def word(self):
        parts = [self.factor()]
        while self.peek() not in (None, ")", "]", ","):
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else ("seq", parts)

    def factor(self):
        expr = self.primary()
        while self.peek() in ("'", "^"):
            tok, pos = self.take()
            if tok == "'":
                expr = ("inv", expr)
            else:
                nxt = self.peek()
                if nxt is not None and re.fullmatch(r"-?\d+", nxt):
                    k, _ = self.take()
                    expr = ("pow", expr, int(k))
                else:
                    expr = ("conj", expr, self.primary())
        return expr

    def primary(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            expr = self.word()
            self.take(")")
            return expr
        if tok == "[":
            self.take()
            x = self.word()
            self.take(",")
            y = self.word()
            self.take("]")
            return ("comm", x, y)
        tok, pos = self.take()
        if re.fullmatch(r"-?\d+", tok):
            raise WordSyntaxError("number %r is not a generator" % tok, pos)
        return ("atom", LONG_NAMES.get(tok, tok))


def parse_word(src):
    return Parser(src).parse()


def pretty(expr):
    kind = expr[0]
    if kind == "atom":
        return expr[1]
    if kind == "seq":
        return " ".join(_wrap(p) for p in expr[1])
    if kind == "inv":
        return _wrap(expr[1]) + "'"
    if kind == "pow":
        return "%s^%d" % (_wrap(expr[1]), expr[2])
    if kind == "conj":
        return "%s^%s" % (_wrap(expr[1]), _wrap(expr[2]))
    if kind == "comm":
        return "[%s, %s]" % (pretty(expr[1]), pretty(expr[2]))
    raise ValueError("bad node %r" % (expr,))


def _wrap(expr):
    return pretty(expr) if expr[0] in ("atom", "inv", "pow", "conj",
                                       "comm") else "(%s)" % pretty(expr)


def flatten(expr):
    """WordExpression -> list of (name, exponent) in written order."""
    kind = expr[0]
    if kind == "atom":
        return [(expr[1], 1)]
    if kind == "seq":
        out = []
        for p in expr[1]:
            out.extend(flatten(p))
        return out
    if kind == "inv":
        return invert(flatten(expr[1]))
    if kind == "pow":
        base = flatten(expr[1]) if expr[2] >= 0 else invert(flatten(expr[1]))
        return base * abs(expr[2])
    if kind == "conj":
        x, y = flatten(expr[1]), flatten(expr[2])
        return invert(y) + x + y
    if kind == "comm":
        x, y = flatten(expr[1]), flatten(expr[2])
        return x + y + invert(x) + invert(y)
    raise ValueError("bad node %r" % (expr,))


def invert(word):
    return [(n, -e) for n, e in reversed(word)]

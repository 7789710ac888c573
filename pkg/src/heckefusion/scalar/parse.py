"""Parser for the canonical ASCII scalar format (``"q^2+1+q^-2"``, ``"(q^2-1)/(q^2+1)"``)."""
import re

from ..errors import ParseError
from .qrat import QRat, Q as QVAR
from .urat import URat

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot tokenize {text!r} at {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} in {text!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.var = None

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if tok[0] is None or (op is not None and tok != ("op", op)):
            raise ParseError(f"malformed scalar {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty scalar")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if not w:
                    raise ParseError(f"division by zero in {self.text!r}")
                v = v / w
        return v

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        if self.peek() == ("op", "+"):
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, k = self.take()
            if kind != "int":
                raise ParseError(f"bad exponent in {self.text!r}")
            if sign < 0 and not v:
                raise ParseError(f"division by zero in {self.text!r}")
            v = v ** (sign * k)
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return QRat.from_int(val)
        if kind == "name":
            if val == "q":
                return QVAR
            if self.var is not None and self.var != val:
                raise ParseError(f"two auxiliary variables in {self.text!r}")
            self.var = val
            return URat.variable(val)
        if val == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_scalar(text):
    """Parse a scalar string into a QRat, or a URat if an auxiliary variable occurs."""
    return _Parser(text).parse()

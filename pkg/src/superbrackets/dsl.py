"""
Session files (``.gb``) and canonical printing.

Grammar::

    file     := manifold binding*
    manifold := "manifold" "{" vardecl ("," vardecl)* "}"
    vardecl  := ("even" | "odd") IDENT
    binding  := "let" IDENT "=" expr
    expr     := ["-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" NAT)*
    atom     := RATIONAL | IDENT | "s(" IDENT ")" | "d(" IDENT ")" | "(" expr ")"

``#`` starts a line comment.  A leading minus is accepted so that printed
negative polynomials parse back.

Printing: terms are sorted by total degree then by the global variable
order; a coefficient of -1 is written as a bare leading minus, e.g.
``-s(x)*s(y)``.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .grading import GradedPolynomial, Kind, ONE, Parity
from .phase import Manifold


class DSLError(Exception):
    def __init__(self, message, line=None, col=None):
        self.line, self.col = line, col
        if line is not None:
            message = "%d:%d: %s" % (line, col, message)
        super().__init__(message)


class DSLSyntaxError(DSLError):
    pass


class UndeclaredIdentifier(DSLError):
    pass


class OddExponent(DSLError):
    pass


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<num>\d+) | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[{}(),=+\-*/^])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(source):
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if not m:
            raise DSLSyntaxError("unexpected character %r" % source[pos],
                                 line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    toks.append(Token("eof", "", line, pos - line_start + 1))
    return toks


@dataclass
class Session:
    manifold: Manifold
    bindings: dict = field(default_factory=dict)
    source: str = ""

    @property
    def structure_poly(self):
        return self.bindings.get("P")


class _Parser:

    def __init__(self, source, session=None):
        self.toks = tokenize(source)
        self.i = 0
        self.session = session

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, expected):
        t = self.tok
        got = repr(t.text) if t.kind != "eof" else "end of input"
        raise DSLSyntaxError("expected %s, got %s" % (expected, got), t.line, t.col)

    def accept(self, text):
        if self.tok.kind in ("op", "ident") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.error(repr(text))

    def ident(self):
        t = self.tok
        if t.kind != "ident":
            self.error("identifier")
        self.i += 1
        return t

    def nat(self):
        t = self.tok
        if t.kind != "num":
            self.error("integer")
        self.i += 1
        return int(t.text)

    # file level

    def file(self, source):
        self.expect("manifold")
        self.expect("{")
        coords = [self.vardecl()]
        while self.accept(","):
            coords.append(self.vardecl())
        self.expect("}")
        names = [n for n, _, _ in coords]
        for n, _, t in coords:
            if names.count(n) > 1:
                raise DSLSyntaxError("duplicate coordinate %r" % n, t.line, t.col)
        self.session = Session(Manifold([(n, p) for n, p, _ in coords]), {}, source)
        while self.tok.kind != "eof":
            if not self.accept("let"):
                self.error("'let' or end of input")
            name = self.ident().text
            self.expect("=")
            self.session.bindings[name] = self.expr()
        return self.session

    def vardecl(self):
        if self.accept("even"):
            p = Parity.EVEN
        elif self.accept("odd"):
            p = Parity.ODD
        else:
            self.error("'even' or 'odd'")
        t = self.ident()
        if t.text in ("s", "d", "let", "manifold", "even", "odd"):
            raise DSLSyntaxError("reserved name %r" % t.text, t.line, t.col)
        return t.text, p, t

    # expressions

    def expr(self):
        neg = self.accept("-")
        out = self.term()
        if neg:
            out = -out
        while True:
            if self.accept("+"):
                out = out + self.term()
            elif self.accept("-"):
                out = out - self.term()
            else:
                return out

    def term(self):
        out = self.factor()
        while self.accept("*"):
            out = out * self.factor()
        return out

    def factor(self):
        t = self.tok
        out = self.atom()
        while self.accept("^"):
            n = self.nat()
            if n >= 2 and out and out.is_homogeneous() and out.parity == Parity.ODD:
                raise OddExponent("odd quantity raised to power %d" % n, t.line, t.col)
            out = out ** n
        return out

    def atom(self):
        t = self.tok
        M = self.session.manifold
        if t.kind == "num":
            self.i += 1
            num = int(t.text)
            if self.accept("/"):
                den = self.nat()
                if den == 0:
                    raise DSLSyntaxError("zero denominator", t.line, t.col)
                return GradedPolynomial.const(Fraction(num, den))
            return GradedPolynomial.const(num)
        if self.accept("("):
            out = self.expr()
            self.expect(")")
            return out
        if t.kind == "ident":
            nxt = self.toks[self.i + 1]
            if t.text in ("s", "d") and nxt.text == "(":
                self.i += 2
                b = self.ident()
                self.expect(")")
                if b.text not in M.names():
                    raise UndeclaredIdentifier("undeclared coordinate %r" % b.text,
                                               b.line, b.col)
                v = M.s(b.text) if t.text == "s" else M.d(b.text)
                return GradedPolynomial.var(v)
            self.i += 1
            if t.text in M.names():
                return GradedPolynomial.var(M.x(t.text))
            if t.text in self.session.bindings:
                return self.session.bindings[t.text]
            raise UndeclaredIdentifier("undeclared identifier %r" % t.text,
                                       t.line, t.col)
        self.error("number, identifier or '('")


def parse(source):
    """Parse a session file into a :class:`Session`."""
    return _Parser(source).file(source)


def parse_expr(text, session):
    """Parse a single expression in the context of an existing session."""
    p = _Parser(text, session)
    out = p.expr()
    if p.tok.kind != "eof":
        p.error("end of expression")
    return out


# -- printing ----------------------------------------------------------------

def _sort_key(key):
    return (sum(e for _, e in key), [(v.order, -e) for v, e in key])


def _format_mono(key):
    parts = []
    for v, e in key:
        parts.append(v.name if e == 1 else "%s^%d" % (v.name, e))
    return "*".join(parts)


def _format_terms(items):
    """items: list of (coef, body) with body possibly empty."""
    if not items:
        return "0"
    out = []
    for i, (c, body) in enumerate(items):
        neg = c < 0
        a = -c if neg else c
        if body:
            s = body if a == 1 else "%s*%s" % (a, body)
        else:
            s = str(a)
        if i == 0:
            out.append("-" + s if neg else s)
        else:
            out.append(("- " if neg else "+ ") + s)
    return " ".join(out)


def format_poly(p):
    keys = sorted(p.terms, key=_sort_key)
    return _format_terms([(p.terms[k], _format_mono(k)) for k in keys])


def format_operator(A):
    def body(a, D):
        ds = []
        for v, e in D:
            ds.extend(["D[%s]" % v.name] * e)
        return "*".join([_format_mono(a)] * bool(a) + ds)
    keys = sorted(A.terms, key=lambda k: (_sort_key(k[1]), _sort_key(k[0])))
    return _format_terms([(A.terms[k], body(*k)) for k in keys])

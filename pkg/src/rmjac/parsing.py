"""Parser for polynomial expressions like "x^6 + (6-4T)x^3 + 2Tx + 1".

Grammar with implicit multiplication (adjacency), '^' or '**' powers, and
integer/fraction constants; at most two variables (the outer x-like one and
the coefficient one, usually T).  Parsing produces a dict
{(x_degree, t_degree): Fraction} which the helpers below convert into
elements of a concrete coefficient domain.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadReduction, DivisionByZero
from .ffield import PolyRing, RationalField

# variables are single letters so that adjacency like "2Tx^3" tokenizes
_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]|\*\*|[()+\-*/^])")


def _tokenize(s):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError("bad character %r in %r" % (s[pos], s))
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, xvar, tvar):
        self.toks = tokens
        self.i = 0
        self.xvar = xvar
        self.tvar = tvar

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ValueError("trailing tokens at %r" % (self.toks[self.i :],))
        return {k: q for k, q in v.items() if q}

    def expr(self):
        if self.peek() == "-":
            self.next()
            acc = _neg(self.term())
        else:
            if self.peek() == "+":
                self.next()
            acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            acc = _add(acc, _neg(rhs) if op == "-" else rhs)
        return acc

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                acc = _mul(acc, self.factor())
            elif tok == "/":
                self.next()
                acc = _div(acc, self.factor())
            elif tok is not None and (tok.isdigit() or tok.isidentifier() or tok == "("):
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        if self.peek() == "-":
            self.next()
            return _neg(self.factor())
        base = self.atom()
        if self.peek() == "^":
            self.next()
            e = self.next()
            if e is None or not e.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return _pow(base, int(e))
        return base

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok.isdigit():
            return {(0, 0): Fraction(int(tok))}
        if tok == "(":
            v = self.expr()
            if self.next() != ")":
                raise ValueError("missing closing parenthesis")
            return v
        if tok.isidentifier():
            if tok == self.xvar:
                return {(1, 0): Fraction(1)}
            if tok == self.tvar:
                return {(0, 1): Fraction(1)}
            raise ValueError("unknown variable %r" % tok)
        raise ValueError("unexpected token %r" % tok)


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, Fraction(0)) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _neg(a):
    return {k: -v for k, v in a.items()}


def _mul(a, b):
    out = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            w = out.get(key, Fraction(0)) + u * v
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def _div(a, b):
    if list(b.keys()) not in ([(0, 0)], []):
        raise ValueError("division only by constants")
    if not b:
        raise DivisionByZero("division by zero in expression")
    c = b[(0, 0)]
    return {k: v / c for k, v in a.items()}


def _pow(a, e):
    out = {(0, 0): Fraction(1)}
    for _ in range(e):
        out = _mul(out, a)
    return out


def parse_bivariate(s, xvar=None, tvar=None):
    """Parse s into {(x_degree, t_degree): Fraction}."""
    return _Parser(_tokenize(s), xvar, tvar).parse()


def frac_to_coeff(dom, q):
    """Convert an exact Fraction into dom, inverting the denominator there."""
    if isinstance(dom, RationalField):
        return q
    num = dom.from_int(q.numerator)
    if q.denominator == 1:
        return num
    den = dom.from_int(q.denominator)
    if dom.is_zero(den):
        raise BadReduction("denominator %d vanishes in %r" % (q.denominator, dom))
    return dom.div(num, den)


def parse_element(s, dom):
    """Parse a parameter expression into dom (a field or a PolyRing in T)."""
    if isinstance(dom, PolyRing):
        tab = parse_bivariate(s, None, dom.var)
        if not tab:
            return dom.zero
        deg = max(j for (_, j) in tab)
        out = [dom.dom.zero] * (deg + 1)
        for (_, j), q in tab.items():
            out[j] = frac_to_coeff(dom.dom, q)
        return dom.normalize(out)
    tab = parse_bivariate(s, None, None)
    if not tab:
        return dom.zero
    return frac_to_coeff(dom, tab[(0, 0)])


def parse_poly(s, ring):
    """Parse a polynomial in ring.var whose coefficients live in ring.dom."""
    dom = ring.dom
    if isinstance(dom, PolyRing):
        tab = parse_bivariate(s, ring.var, dom.var)
        if not tab:
            return ring.zero
        degx = max(i for (i, _) in tab)
        cols = [{} for _ in range(degx + 1)]
        for (i, j), q in tab.items():
            cols[i][j] = q
        out = []
        for col in cols:
            if not col:
                out.append(dom.zero)
                continue
            degt = max(col)
            cs = [dom.dom.zero] * (degt + 1)
            for j, q in col.items():
                cs[j] = frac_to_coeff(dom.dom, q)
            out.append(dom.normalize(cs))
        return ring.normalize(out)
    tab = parse_bivariate(s, ring.var, None)
    if not tab:
        return ring.zero
    degx = max(i for (i, _) in tab)
    out = [dom.zero] * (degx + 1)
    for (i, _), q in tab.items():
        out[i] = frac_to_coeff(dom, q)
    return ring.normalize(out)

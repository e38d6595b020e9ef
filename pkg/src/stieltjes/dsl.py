"""The ``.stj`` language: lexer, LL(1) recursive-descent parser, printer and evaluator.

A program is a sequence of ``let`` bindings and queries::

    let H = heaviside(c=1, at=0);
    integrate H dH on [-1,1];

Expressions denote functions of ``x`` with no fixed domain (except
``piecewise`` literals); each query evaluates them on its own interval.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import DegreeError
from .numerics import Poly, format_rational, parse_rational
from .pwfn import Dirichlet, PiecewiseFn, heaviside

KEYWORDS = frozenset(
    "let x heaviside dirichlet piecewise on at d integrate compare parts decompose check sums".split()
)
QUERY_KINDS = ("integrate", "compare", "parts", "decompose", "check", "sums")
PROBES = ("mrs", "rps", "rrs")


# -- diagnostics and tokens -------------------------------------------------


class Diagnostic(Exception):
    """A positioned parse or validation error."""

    def __init__(self, line: int, column: int, message: str, expected=()):
        self.line, self.column, self.message = line, column, message
        self.expected = frozenset(expected)
        super().__init__(str(self))

    def __str__(self) -> str:
        text = f"{self.line}:{self.column}: {self.message}"
        if self.expected:
            text += " (expected " + " or ".join(sorted(self.expected)) + ")"
        return text


@dataclass(frozen=True)
class Pos:
    line: int
    col: int


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, RAT, DEC, EOF, a keyword, or a punctuation character
    text: str
    pos: Pos

    def show(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<RAT>\d+[ \t]*/[ \t]*\d+)
  | (?P<DEC>\d+\.\d+)
  | (?P<INT>\d+)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[;=+\-*^()\[\]{},:])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, line_start, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        col = i - line_start + 1
        if not m:
            raise Diagnostic(line, col, f"unexpected character {text[i]!r}")
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "NAME":
            toks.append(Token(s if s in KEYWORDS else "NAME", s, Pos(line, col)))
        elif kind == "punct":
            toks.append(Token(s, s, Pos(line, col)))
        elif kind in ("RAT", "DEC", "INT"):
            toks.append(Token(kind, s, Pos(line, col)))
        i = m.end()
    toks.append(Token("EOF", "", Pos(line, len(text) - line_start + 1)))
    return toks


# -- AST --------------------------------------------------------------------


def _pos():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    closed: bool
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class X:
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Heaviside:
    c: Fraction
    at: Fraction
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class DirichletExpr:
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Ref:
    name: str
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class IntervalPiece:
    interval: Interval
    expr: "Expr"
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class PointPiece:
    at: Fraction
    value: Fraction
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Piecewise:
    domain: Interval
    pieces: tuple
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Scaled:
    coef: Fraction
    expr: "Expr"
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, expr), ...), sign in {+1, -1}; never nested
    pos: Optional[Pos] = _pos()


Expr = Union[Num, X, Heaviside, DirichletExpr, Ref, Piecewise, Pow, Scaled, Sum]


@dataclass(frozen=True)
class Binding:
    name: str
    expr: Expr
    pos: Optional[Pos] = _pos()


@dataclass(frozen=True)
class Query:
    kind: str
    names: tuple  # integrand/integrator names in source order
    interval: Interval
    probe: Optional[str] = None
    args: Optional[tuple] = None
    pos: Optional[Pos] = _pos()
    name_pos: tuple = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class Program:
    statements: tuple

    @property
    def bindings(self) -> tuple:
        return tuple(s for s in self.statements if isinstance(s, Binding))

    @property
    def queries(self) -> tuple:
        return tuple(s for s in self.statements if isinstance(s, Query))


# -- parser -----------------------------------------------------------------


def _q(kind: str) -> str:
    return {"NAME": "name", "INT": "integer", "EOF": "end of input"}.get(kind, f'"{kind}"')


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, expected, message=None, tok=None):
        tok = tok or self.tok
        raise Diagnostic(tok.pos.line, tok.pos.col, message or f"unexpected {tok.show()}",
                         {_q(k) for k in expected})

    def at(self, *kinds) -> bool:
        return self.tok.kind in kinds

    def take(self, *kinds) -> Token:
        if self.tok.kind not in kinds:
            self.error(kinds)
        t = self.tok
        self.i += 1
        return t

    # program ----------------------------------------------------------------

    def program(self) -> Program:
        stmts = []
        while not self.at("EOF"):
            if self.at("let"):
                stmts.append(self.binding())
            elif self.at(*QUERY_KINDS):
                stmts.append(self.query())
            else:
                self.error(("let",) + QUERY_KINDS)
        return Program(tuple(stmts))

    def binding(self) -> Binding:
        self.take("let")
        name = self.take("NAME")
        self.take("=")
        e = self.expr()
        self.take(";")
        return Binding(name.text, e, name.pos)

    def _name_then_d(self):
        name = self.take("NAME")
        tok = self.tok
        if tok.kind == "NAME" and tok.text.startswith("d") and len(tok.text) > 1:
            # "dH" reads as the keyword d followed by the name H
            self.toks[self.i : self.i + 1] = [
                Token("d", "d", tok.pos),
                Token("NAME", tok.text[1:], Pos(tok.pos.line, tok.pos.col + 1)),
            ]
        self.take("d")
        alpha = self.take("NAME")
        return (name, alpha)

    def query(self) -> Query:
        start = self.take(*QUERY_KINDS)
        kind = start.text
        probe = args = None
        if kind == "sums":
            tok = self.take("NAME")
            if tok.text not in PROBES:
                self.error(PROBES, f"unknown probe {tok.text!r}", tok)
            probe = tok.text
        if kind in ("integrate", "compare", "check", "sums"):
            names = self._name_then_d()
        elif kind == "parts":
            names = (self.take("NAME"), self.take("NAME"))
        else:
            names = (self.take("NAME"),)
        if kind == "sums" and self.at("("):
            args = self.probe_args(probe)
        if not self.at("on"):
            self.error(("on", "(") if kind == "sums" and args is None else ("on",))
        self.take("on")
        iv = self.interval()
        self.take(";")
        return Query(kind, tuple(t.text for t in names), iv, probe, args, start.pos,
                     tuple(t.pos for t in names))

    def probe_args(self, probe: str) -> tuple:
        self.take("(")
        if probe == "rps":
            tok = self.take("INT")
            self.take(")")
            return (Fraction(int(tok.text)),)
        vals = []
        while True:
            tok = self.tok
            v = self.scalar()
            if v <= 0:
                self.error((), "probe targets must be positive", tok)
            vals.append(v)
            if not self.at(","):
                break
            self.take(",")
        self.take(")")
        return tuple(vals)

    # pieces -----------------------------------------------------------------

    def scalar(self) -> Fraction:
        neg = False
        if self.at("-"):
            self.take("-")
            neg = True
        tok = self.take("INT", "RAT", "DEC")
        try:
            v = parse_rational(tok.text.replace(" ", "").replace("\t", ""))
        except ValueError:
            self.error((), f"invalid number {tok.text!r}", tok)
        return -v if neg else v

    def interval(self) -> Interval:
        start = self.take("[", "(")
        lo = self.scalar()
        self.take(",")
        hi = self.scalar()
        self.take("]" if start.kind == "[" else ")")
        return Interval(lo, hi, start.kind == "[", start.pos)

    def expr(self):
        start = self.tok.pos
        terms = []
        sign = 1
        if self.at("-"):
            self.take("-")
            sign = -1
        terms.append((sign, self.term()))
        while self.at("+", "-"):
            sign = 1 if self.take("+", "-").kind == "+" else -1
            terms.append((sign, self.term()))
        flat = []
        for s, t in terms:
            if isinstance(t, Sum):
                flat.extend((s * s2, t2) for s2, t2 in t.terms)
            else:
                flat.append((s, t))
        if len(flat) == 1 and flat[0][0] == 1:
            return flat[0][1]
        return Sum(tuple(flat), start)

    def term(self):
        if self.at("INT", "RAT", "DEC"):
            tok = self.tok
            c = self.scalar()
            if self.at("*"):
                self.take("*")
                return Scaled(c, self.atom(), tok.pos)
            return self.postfix(Num(c, tok.pos))
        return self.atom()

    def atom(self):
        tok = self.tok
        if self.at("x"):
            self.take("x")
            node = X(tok.pos)
        elif self.at("INT", "RAT", "DEC"):
            node = Num(self.scalar(), tok.pos)
        elif self.at("heaviside"):
            node = self.heaviside()
        elif self.at("dirichlet"):
            self.take("dirichlet")
            node = DirichletExpr(tok.pos)
        elif self.at("NAME"):
            self.take("NAME")
            node = Ref(tok.text, tok.pos)
        elif self.at("piecewise"):
            node = self.piecewise()
        elif self.at("("):
            self.take("(")
            node = self.expr()
            self.take(")")
        else:
            self.error(("x", "INT", "heaviside", "dirichlet", "NAME", "piecewise", "("))
        return self.postfix(node)

    def postfix(self, node):
        while self.at("^"):
            op = self.take("^")
            node = Pow(node, int(self.take("INT").text), op.pos)
        return node

    def heaviside(self) -> Heaviside:
        start = self.take("heaviside")
        self.take("(")
        tok = self.take("NAME")
        if tok.text != "c":
            self.error(("c",), f"expected c=, found {tok.text!r}", tok)
        self.take("=")
        c = self.scalar()
        at = Fraction(0)
        if self.at(","):
            self.take(",")
            self.take("at")
            self.take("=")
            at = self.scalar()
        elif not self.at(")"):
            self.error((",", ")"))
        self.take(")")
        return Heaviside(c, at, start.pos)

    def piecewise(self) -> Piecewise:
        start = self.take("piecewise")
        self.take("on")
        dom = self.interval()
        self.take("{")
        pieces = [self.piece()]
        while self.at(";"):
            self.take(";")
            if self.at("}"):
                break  # tolerate a trailing separator
            pieces.append(self.piece())
        self.take("}")
        return Piecewise(dom, tuple(pieces), start.pos)

    def piece(self):
        tok = self.tok
        if self.at("at"):
            self.take("at")
            where = self.scalar()
            self.take(":")
            return PointPiece(where, self.scalar(), tok.pos)
        if self.at("[", "("):
            iv = self.interval()
            self.take(":")
            return IntervalPiece(iv, self.expr(), tok.pos)
        self.error(("at", "[", "("))


# -- printer ----------------------------------------------------------------


def _fmt(q: Fraction) -> str:
    return format_rational(q)


def _iv(iv: Interval) -> str:
    o, c = ("[", "]") if iv.closed else ("(", ")")
    return f"{o}{_fmt(iv.lo)},{_fmt(iv.hi)}{c}"


def print_expr(e) -> str:
    if isinstance(e, Num):
        return _fmt(e.value)
    if isinstance(e, X):
        return "x"
    if isinstance(e, Heaviside):
        return f"heaviside(c={_fmt(e.c)}, at={_fmt(e.at)})"
    if isinstance(e, DirichletExpr):
        return "dirichlet"
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Piecewise):
        parts = []
        for p in e.pieces:
            if isinstance(p, PointPiece):
                parts.append(f"at {_fmt(p.at)}: {_fmt(p.value)}")
            else:
                parts.append(f"{_iv(p.interval)}: {print_expr(p.expr)}")
        return f"piecewise on {_iv(e.domain)} {{ " + "; ".join(parts) + " }"
    if isinstance(e, Pow):
        base = print_expr(e.base)
        if isinstance(e.base, (Sum, Scaled)):
            base = f"({base})"
        return f"{base}^{e.exp}"
    if isinstance(e, Scaled):
        inner = print_expr(e.expr)
        if isinstance(e.expr, (Sum, Scaled)):
            inner = f"({inner})"
        return f"{_fmt(e.coef)}*{inner}"
    if isinstance(e, Sum):
        out = ""
        for k, (s, t) in enumerate(e.terms):
            body = print_expr(t)
            if k == 0:
                out = ("-" if s < 0 else "") + body
            else:
                out += (" - " if s < 0 else " + ") + body
        return out
    raise TypeError(f"not an expression: {e!r}")


def print_statement(s) -> str:
    if isinstance(s, Binding):
        return f"let {s.name} = {print_expr(s.expr)};"
    n = s.names
    if s.kind in ("integrate", "compare", "check"):
        head = f"{s.kind} {n[0]} d{n[1]}"
    elif s.kind == "sums":
        head = f"sums {s.probe} {n[0]} d{n[1]}"
        if s.args is not None:
            head += " (" + ", ".join(_fmt(v) for v in s.args) + ")"
    else:
        head = f"{s.kind} " + " ".join(n)
    return f"{head} on {_iv(s.interval)};"


def print_program(p: Program) -> str:
    return "".join(print_statement(s) + "\n" for s in p.statements)


# -- compilation of piecewise literals and validation -----------------------


def _diag(pos: Optional[Pos], message: str) -> Diagnostic:
    pos = pos or Pos(1, 1)
    return Diagnostic(pos.line, pos.col, message)


def expr_to_poly(e) -> Poly:
    """Polynomial denoted by an expression built from x, numbers, +, -, * and ^."""
    try:
        if isinstance(e, Num):
            return Poly.const(e.value)
        if isinstance(e, X):
            return Poly.identity()
        if isinstance(e, Pow):
            return expr_to_poly(e.base) ** e.exp
        if isinstance(e, Scaled):
            return expr_to_poly(e.expr) * e.coef
        if isinstance(e, Sum):
            acc = Poly()
            for s, t in e.terms:
                acc = acc + expr_to_poly(t) * s
            return acc
    except DegreeError as exc:
        raise _diag(e.pos, str(exc)) from exc
    raise _diag(getattr(e, "pos", None), "piece bodies must be polynomials in x")


def _check_interval(iv: Interval, what: str):
    if iv.lo >= iv.hi:
        raise _diag(iv.pos, f"bad {what} {_iv(iv)}: left end must be below right end")


def compile_piecewise(e: Piecewise) -> PiecewiseFn:
    dom = e.domain
    _check_interval(dom, "domain")
    if not dom.closed:
        raise _diag(dom.pos, f"domain {_iv(dom)} must be a closed interval")
    spans, points = [], {}
    for p in e.pieces:
        if isinstance(p, PointPiece):
            if not dom.lo <= p.at <= dom.hi:
                raise _diag(p.pos, f"point {_fmt(p.at)} outside the domain {_iv(dom)}")
            if p.at in points:
                raise _diag(p.pos, f"duplicate value at {_fmt(p.at)}")
            points[p.at] = (p.value, p.pos)
            continue
        iv = p.interval
        _check_interval(iv, "interval")
        if iv.lo < dom.lo or iv.hi > dom.hi:
            raise _diag(iv.pos, f"piece {_iv(iv)} leaves the domain {_iv(dom)}")
        spans.append((iv.lo, iv.hi, p, expr_to_poly(p.expr)))
    if not spans:
        raise _diag(e.pos, "a piecewise function needs at least one interval piece")
    spans.sort(key=lambda s: s[0])
    if spans[0][0] != dom.lo:
        raise _diag(spans[0][2].pos, f"pieces leave ({_fmt(dom.lo)},{_fmt(spans[0][0])}) uncovered")
    for (lo1, hi1, p1, _), (lo2, hi2, p2, _) in zip(spans, spans[1:]):
        if lo2 < hi1:
            raise _diag(p2.pos, f"piece {_iv(p2.interval)} overlaps {_iv(p1.interval)}")
        if lo2 > hi1:
            raise _diag(p2.pos, f"pieces leave ({_fmt(hi1)},{_fmt(lo2)}) uncovered")
    if spans[-1][1] != dom.hi:
        raise _diag(spans[-1][2].pos, f"pieces leave ({_fmt(spans[-1][1])},{_fmt(dom.hi)}) uncovered")
    for x, (_, pos) in points.items():
        for lo, hi, p, _ in spans:
            if lo < x < hi or (p.interval.closed and x in (lo, hi)):
                raise _diag(pos, f"point {_fmt(x)} is already covered by the piece {_iv(p.interval)}")
    bps = [dom.lo] + [s[1] for s in spans]
    vals = []
    for k, x in enumerate(bps):
        left = spans[k - 1] if k > 0 else None
        right = spans[k] if k < len(spans) else None
        closed_vals = []
        if left and left[2].interval.closed:
            closed_vals.append(left[3](x))
        if right and right[2].interval.closed:
            closed_vals.append(right[3](x))
        if x in points:
            vals.append(points[x][0])
            continue
        if len(set(closed_vals)) > 1:
            raise _diag(e.pos, f"closed pieces disagree at {_fmt(x)}; add an explicit 'at {_fmt(x)}:' value")
        if closed_vals:
            vals.append(closed_vals[0])
            continue
        limits = {s[3](x) for s in (left, right) if s}
        if len(limits) > 1:
            raise _diag(e.pos, f"no value at {_fmt(x)} and the one-sided limits differ")
        vals.append(limits.pop())
    return PiecewiseFn(tuple(bps), tuple(s[3] for s in spans), tuple(vals))


def _walk(e):
    yield e
    if isinstance(e, Pow):
        yield from _walk(e.base)
    elif isinstance(e, Scaled):
        yield from _walk(e.expr)
    elif isinstance(e, Sum):
        for _, t in e.terms:
            yield from _walk(t)


class Validator:
    """Static checks: names, intervals, piecewise literals, domains and saltus reduction."""

    def __init__(self, program: Program):
        self.program = program
        self.env: dict[str, Binding] = {}
        self.domains: dict[str, Optional[tuple]] = {}
        self.compiled: dict[int, PiecewiseFn] = {}

    def run(self):
        for s in self.program.statements:
            if isinstance(s, Binding):
                if s.name in self.env:
                    raise _diag(s.pos, f"duplicate binding {s.name!r}")
                self.domains[s.name] = self.expr_domain(s.expr)
                self.env[s.name] = s
            else:
                self.query(s)

    def expr_domain(self, e) -> Optional[tuple]:
        """Intersection of the piecewise domains inside ``e`` (None when unrestricted)."""
        dom = None
        for node in _walk(e):
            d = None
            if isinstance(node, Ref):
                if node.name not in self.env:
                    raise _diag(node.pos, f"unknown name {node.name!r} (bind it with let before use)")
                d = self.domains[node.name]
            elif isinstance(node, Piecewise):
                self.compiled[id(node)] = compile_piecewise(node)
                d = (node.domain.lo, node.domain.hi)
            elif isinstance(node, DirichletExpr) and node is not e:
                raise _diag(node.pos, "dirichlet cannot be combined with other terms")
            if d is not None:
                dom = d if dom is None else (max(dom[0], d[0]), min(dom[1], d[1]))
                if dom[0] >= dom[1]:
                    raise _diag(node.pos, "piecewise domains in this expression do not overlap")
        if not isinstance(e, Ref):
            for node in _walk(e):
                if isinstance(node, Ref) and self.is_dirichlet(node.name):
                    raise _diag(node.pos, "dirichlet cannot be combined with other terms")
        return dom

    def is_dirichlet(self, name: str) -> bool:
        e = self.env[name].expr
        return isinstance(e, DirichletExpr) or (isinstance(e, Ref) and self.is_dirichlet(e.name))

    def heavisides(self, e):
        for node in _walk(e):
            if isinstance(node, Heaviside):
                yield node
            elif isinstance(node, Ref):
                yield from self.heavisides(self.env[node.name].expr)

    def query(self, q: Query):
        iv = q.interval
        if not iv.closed:
            raise _diag(iv.pos, f"query interval {_iv(iv)} must be closed")
        _check_interval(iv, "interval")
        for name, pos in zip(q.names, q.name_pos or [q.pos] * len(q.names)):
            if name not in self.env:
                raise _diag(pos, f"unknown name {name!r}")
            dom = self.domains[name]
            if dom is not None and not (dom[0] <= iv.lo and iv.hi <= dom[1]):
                raise _diag(iv.pos, f"{name} is only defined on [{_fmt(dom[0])},{_fmt(dom[1])}]")
        if q.kind in ("integrate", "compare", "check", "sums"):
            integrators = [1]
        elif q.kind == "parts":
            integrators = [0, 1]
        else:
            integrators = [0]
        for k in integrators:
            name = q.names[k]
            pos = q.name_pos[k] if q.name_pos else q.pos
            if self.is_dirichlet(name):
                raise _diag(pos, f"{name} is the Dirichlet function, which is not of bounded variation")
            for h in self.heavisides(self.env[name].expr):
                if (h.c == 1 and h.at == iv.lo) or (h.c == 0 and h.at == iv.hi):
                    raise _diag(h.pos, f"non-reduced saltus term heaviside(c={_fmt(h.c)}, at={_fmt(h.at)}) "
                                       f"on {_iv(iv)}: the jump falls outside the interval")
        if q.kind in ("compare", "sums") and self.is_dirichlet(q.names[0]):
            pos = q.name_pos[0] if q.name_pos else q.pos
            raise _diag(pos, f"{q.kind} does not support the Dirichlet function")


def parse(text: Union[str, bytes], validate: bool = True) -> Program:
    """Parse (and by default validate) a program. Raises :class:`Diagnostic`."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise Diagnostic(1, 1, f"input is not UTF-8: {exc.reason}") from exc
    prog = Parser(text).program()
    if validate:
        Validator(prog).run()
    return prog


# -- evaluation -------------------------------------------------------------


class Evaluator:
    """Turns bound names into functions on a query interval."""

    def __init__(self, program: Program):
        self.env = {b.name: b.expr for b in program.bindings}

    def function(self, name: str, a: Fraction, b: Fraction):
        return self.eval(self.env[name], a, b)

    def eval(self, e, a: Fraction, b: Fraction):
        if isinstance(e, Num):
            return PiecewiseFn.const(e.value, a, b)
        if isinstance(e, X):
            return PiecewiseFn.identity(a, b)
        if isinstance(e, Heaviside):
            if e.at < a:
                return PiecewiseFn.const(1, a, b)
            if e.at > b:
                return PiecewiseFn.const(0, a, b)
            return heaviside(e.c, e.at, a, b)
        if isinstance(e, DirichletExpr):
            return Dirichlet(a, b)
        if isinstance(e, Ref):
            return self.function(e.name, a, b)
        if isinstance(e, Piecewise):
            return compile_piecewise(e).restrict(a, b)
        if isinstance(e, Pow):
            return self.eval(e.base, a, b) ** e.exp
        if isinstance(e, Scaled):
            return self.eval(e.expr, a, b).scale(e.coef)
        if isinstance(e, Sum):
            acc = None
            for s, t in e.terms:
                f = self.eval(t, a, b)
                f = f if s > 0 else -f
                acc = f if acc is None else acc + f
            return acc
        raise TypeError(f"not an expression: {e!r}")


__all__ = [
    "Diagnostic", "Program", "Binding", "Query", "Interval", "Num", "X", "Heaviside",
    "DirichletExpr", "Ref", "Piecewise", "IntervalPiece", "PointPiece", "Pow", "Scaled", "Sum",
    "tokenize", "parse", "print_program", "print_expr", "Evaluator", "compile_piecewise",
    "expr_to_poly",
]

"""Exact rational scalars and low-degree polynomials with rational coefficients.

Everything here is exact: scalars are :class:`fractions.Fraction` and the only
approximation anywhere is the explicit slack passed to :func:`poly_range`.
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence, Union

from .errors import DegreeError, IrrationalRoot

Rational = Fraction
Coeffs = tuple  # ascending tuple of Fraction, no trailing zeros

MAX_DEGREE = int(os.environ.get("STJ_MAX_DEGREE", "6"))


@contextmanager
def degree_cap(n: int) -> Iterator[None]:
    """Temporarily raise (or lower) the polynomial degree cap."""
    global MAX_DEGREE
    old, MAX_DEGREE = MAX_DEGREE, int(n)
    try:
        yield
    finally:
        MAX_DEGREE = old


def as_rational(v: Union[int, str, Fraction]) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"refusing inexact scalar {v!r}; pass int, str or Fraction")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"cannot convert {type(v).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a decimal literal. Decimals convert exactly."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``p/q`` with ``q`` omitted when it is 1."""
    return str(Fraction(q))


# -- coefficient-tuple kernels (no degree cap; used internally) -------------


def _trim(cs: Sequence[Fraction]) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _eval(cs: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _add(p: Coeffs, q: Coeffs) -> Coeffs:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _scale(p: Coeffs, r: Fraction) -> Coeffs:
    return _trim([c * r for c in p])


def _mul(p: Coeffs, q: Coeffs) -> Coeffs:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _deriv(p: Coeffs) -> Coeffs:
    return _trim([i * p[i] for i in range(1, len(p))])


def _antideriv(p: Coeffs) -> Coeffs:
    return _trim([Fraction(0)] + [p[i] / (i + 1) for i in range(len(p))])


def _divmod(num: Coeffs, den: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(rem) >= len(den) and rem:
        k = len(rem) - len(den)
        c = rem[-1] / lead
        quot[k] = c
        for i, d in enumerate(den):
            rem[k + i] -= c * d
        rem = list(_trim(rem))
    return _trim(quot), _trim(rem)


def _monic(p: Coeffs) -> Coeffs:
    return _scale(p, 1 / p[-1]) if p else p


def _gcd(p: Coeffs, q: Coeffs) -> Coeffs:
    while q:
        p, q = q, _divmod(p, q)[1]
    return _monic(p)


def _squarefree(p: Coeffs) -> Coeffs:
    g = _gcd(p, _deriv(p))
    return _monic(_divmod(p, g)[0]) if len(g) > 1 else _monic(p)


def _taylor_shift(p: Coeffs, m: Fraction) -> list[Fraction]:
    """Coefficients of p(m + t) in powers of t."""
    cs = list(p)
    n = len(cs)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            cs[j] += m * cs[j + 1]
    return cs


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


class _Sturm:
    """Sturm chain of a squarefree polynomial, for exact root counting."""

    def __init__(self, g: Coeffs):
        self.g = g
        chain = [g, _deriv(g)]
        while chain[-1]:
            r = _divmod(chain[-2], chain[-1])[1]
            if not r:
                break
            chain.append(_scale(r, Fraction(-1)))
        self.chain = [c for c in chain if c]

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (_sign(_eval(c, x)) for c in self.chain) if s]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count_open(self, c: Fraction, e: Fraction) -> int:
        """Distinct roots strictly inside (c, e)."""
        n = self.variations(c) - self.variations(e)
        return n - (1 if _eval(self.g, e) == 0 else 0)


def _isolate(p: Coeffs, lo: Fraction, hi: Fraction) -> list:
    """Distinct real roots of ``p`` in the open interval (lo, hi).

    Returns, in increasing order, exact roots (Fraction) and isolating pairs
    ``(c, e)`` with exactly one root strictly inside and no root at c or e.
    """
    if len(p) <= 1 or lo >= hi:
        return []
    g = _squarefree(p)
    st = _Sturm(g)
    found: list = []
    stack = [(lo, hi)]
    while stack:
        c, e = stack.pop()
        n = st.count_open(c, e)
        if n == 0:
            continue
        if n == 1 and _eval(g, c) != 0 and _eval(g, e) != 0:
            found.append((c, e))
            continue
        m = (c + e) / 2
        if _eval(g, m) == 0:
            found.append(m)
        stack.append((m, e))
        stack.append((c, m))
    return sorted(found, key=lambda r: r if isinstance(r, Fraction) else r[0])


def _narrow(g: Coeffs, c: Fraction, e: Fraction, width: Fraction):
    """Bisect an isolating interval of a simple root of ``g`` below ``width``."""
    sc = _sign(_eval(g, c))
    while e - c > width:
        m = (c + e) / 2
        sm = _sign(_eval(g, m))
        if sm == 0:
            return m
        if sm == sc:
            c = m
        else:
            e = m
    return (c, e)


def _rational_root(p: Coeffs, c: Fraction, e: Fraction):
    """The root of ``p`` isolated in (c, e) if it is rational, else None."""
    g = _squarefree(p)
    den = 1
    for q in g:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in g]
    lead = abs(ints[-1])
    # rationals with denominator <= lead are spaced >= 1/lead**2 apart
    r = _narrow(g, c, e, Fraction(1, 2 * lead * lead))
    if isinstance(r, Fraction):
        return r
    cand = ((r[0] + r[1]) / 2).limit_denominator(lead)
    if r[0] < cand < r[1] and _eval(g, cand) == 0:
        return cand
    return None


def _multiplicity(p: Coeffs, r: Fraction) -> int:
    k = 0
    lin = (-r, Fraction(1))
    while p and _eval(p, r) == 0:
        p = _divmod(p, lin)[0]
        k += 1
    return k


def sign_change_points(p: "Poly | Coeffs", lo: Fraction, hi: Fraction) -> list[Fraction]:
    """Points in (lo, hi) where ``p`` changes sign, all rational.

    Raises :class:`IrrationalRoot` if some sign change happens at an
    irrational point.
    """
    cs = p.coeffs if isinstance(p, Poly) else p
    lo, hi = as_rational(lo), as_rational(hi)
    out = []
    for r in _isolate(cs, lo, hi):
        if isinstance(r, Fraction):
            if _multiplicity(cs, r) % 2:
                out.append(r)
            continue
        c, e = r
        if _sign(_eval(cs, c)) == _sign(_eval(cs, e)):
            continue  # even multiplicity: touches zero without crossing
        q = _rational_root(cs, c, e)
        if q is None:
            raise IrrationalRoot(f"sign change in ({c}, {e}) is irrational")
        out.append(q)
    return out


def integrate_product(p: "Poly", q: "Poly", lo: Fraction, hi: Fraction) -> Fraction:
    """Exact integral of p*q over [lo, hi]; the product may exceed the degree cap."""
    prim = _antideriv(_mul(p.coeffs, q.coeffs))
    return _eval(prim, hi) - _eval(prim, lo)


# -- the capped polynomial value type ---------------------------------------


@dataclass(frozen=True)
class Poly:
    """Polynomial with rational coefficients in ascending degree order."""

    coeffs: Coeffs = ()

    def __post_init__(self):
        cs = _trim([as_rational(c) for c in self.coeffs])
        if len(cs) - 1 > MAX_DEGREE:
            raise DegreeError(f"degree {len(cs) - 1} exceeds cap {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((as_rational(c),))

    @classmethod
    def identity(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        return _eval(self.coeffs, as_rational(x))

    def deriv(self) -> "Poly":
        return Poly(_deriv(self.coeffs))

    def antiderivative(self) -> "Poly":
        return Poly(_antideriv(self.coeffs))

    def __add__(self, other):
        if isinstance(other, Poly):
            return Poly(_add(self.coeffs, other.coeffs))
        return Poly(_add(self.coeffs, (as_rational(other),)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(_scale(self.coeffs, Fraction(-1)))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(_mul(self.coeffs, other.coeffs))
        return Poly(_scale(self.coeffs, as_rational(other)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(p: Poly, x) -> Fraction:
    return p(x)


def poly_antiderivative(p: Poly) -> Poly:
    return p.antiderivative()


def poly_range(p: Poly, lo, hi, width) -> tuple[Fraction, Fraction]:
    """Outer bounds ``(m, M)`` for the range of ``p`` on ``[lo, hi]``.

    ``m <= min p`` and ``M >= max p`` with total overshoot at most ``width``.
    Critical points are located by exact bisection on the derivative's sign;
    rational critical points that are hit exactly give exact extrema. With
    ``width == 0`` every critical point must be rational.
    """
    lo, hi, width = as_rational(lo), as_rational(hi), as_rational(width)
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if width < 0:
        raise ValueError("width must be non-negative")
    cs = p.coeffs
    vals = [_eval(cs, lo), _eval(cs, hi)]
    m, M = min(vals), max(vals)
    if lo == hi or len(cs) <= 2:
        return m, M
    d = _deriv(cs)
    g = _squarefree(d)
    half = width / 2
    for r in _isolate(d, lo, hi):
        if isinstance(r, tuple) and width == 0:
            q = _rational_root(d, *r)
            if q is None:
                raise IrrationalRoot("irrational critical point; use width > 0")
            r = q
        if isinstance(r, Fraction):
            v = _eval(cs, r)
            m, M = min(m, v), max(M, v)
            continue
        c, e = r
        while True:
            mid, h = (c + e) / 2, (e - c) / 2
            shifted = _taylor_shift(d, mid)
            lip = sum(abs(t) * h**k for k, t in enumerate(shifted))
            if lip * h <= half:
                break
            nr = _narrow(g, c, e, (e - c) / 2)
            if isinstance(nr, Fraction):
                c = e = nr
                break
            c, e = nr
        if c == e:
            v = _eval(cs, c)
            m, M = min(m, v), max(M, v)
            continue
        v = _eval(cs, mid)
        m, M = min(m, v - lip * h), max(M, v + lip * h)
    return m, M

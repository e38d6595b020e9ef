"""Piecewise-polynomial functions with explicit point values.

A :class:`PiecewiseFn` on ``[a, b]`` stores a breakpoint list
``a = x_0 < ... < x_n = b``, one polynomial per open interval
``(x_{i-1}, x_i)`` and one value per breakpoint. Point values are independent
of the neighbouring pieces; that independence is what lets a step function
carry a value at a jump that differs from both one-sided limits.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DomainMismatch, OutOfDomain, Unsupported
from .numerics import (
    Poly,
    as_rational,
    format_rational,
    poly_range,
    sign_change_points,
)


@dataclass(frozen=True)
class Partition:
    """Strictly increasing points from ``a`` to ``b``."""

    points: tuple

    def __post_init__(self):
        pts = tuple(as_rational(p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a partition needs at least two points")
        if any(p >= q for p, q in zip(pts, pts[1:])):
            raise ValueError("partition points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    @classmethod
    def uniform(cls, a, b, n: int) -> "Partition":
        a, b = as_rational(a), as_rational(b)
        if n < 1:
            raise ValueError("need at least one interval")
        return cls(tuple(a + (b - a) * k / n for k in range(n + 1)))

    @property
    def a(self) -> Fraction:
        return self.points[0]

    @property
    def b(self) -> Fraction:
        return self.points[-1]

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.points, self.points[1:]))

    def mesh(self) -> Fraction:
        return max(q - p for p, q in self.intervals())

    def refine(self, extra: Iterable) -> "Partition":
        pts = set(self.points)
        for p in extra:
            p = as_rational(p)
            if not self.a <= p <= self.b:
                raise OutOfDomain(f"{p} outside [{self.a}, {self.b}]")
            pts.add(p)
        return Partition(tuple(sorted(pts)))

    def bisect(self) -> "Partition":
        return self.refine((p + q) / 2 for p, q in self.intervals())

    def __len__(self) -> int:
        return len(self.points) - 1


def common_refinement(p: Partition, q: Partition) -> Partition:
    if (p.a, p.b) != (q.a, q.b):
        raise DomainMismatch(f"[{p.a}, {p.b}] vs [{q.a}, {q.b}]")
    return p.refine(q.points)


@dataclass(frozen=True)
class PiecewiseFn:
    breakpoints: tuple
    pieces: tuple
    values: tuple

    def __post_init__(self):
        bps = tuple(as_rational(x) for x in self.breakpoints)
        pieces = tuple(p if isinstance(p, Poly) else Poly.const(p) for p in self.pieces)
        vals = tuple(as_rational(v) for v in self.values)
        if len(bps) < 2:
            raise ValueError("need at least the two domain endpoints")
        if any(p >= q for p, q in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(pieces) != len(bps) - 1 or len(vals) != len(bps):
            raise ValueError("need one piece per interval and one value per breakpoint")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "values", vals)

    # constructors -----------------------------------------------------------

    @classmethod
    def from_poly(cls, p: Poly, a, b) -> "PiecewiseFn":
        """The polynomial ``p`` on ``[a, b]`` with matching point values."""
        a, b = as_rational(a), as_rational(b)
        return cls((a, b), (p,), (p(a), p(b)))

    @classmethod
    def const(cls, c, a, b) -> "PiecewiseFn":
        return cls.from_poly(Poly.const(c), a, b)

    @classmethod
    def identity(cls, a, b) -> "PiecewiseFn":
        return cls.from_poly(Poly.identity(), a, b)

    # basic structure --------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def b(self) -> Fraction:
        return self.breakpoints[-1]

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def partition(self) -> Partition:
        return Partition(self.breakpoints)

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.breakpoints, self.breakpoints[1:]))

    def is_step(self) -> bool:
        return all(p.is_constant() for p in self.pieces)

    def _check(self, x) -> Fraction:
        x = as_rational(x)
        if not self.a <= x <= self.b:
            raise OutOfDomain(f"{format_rational(x)} outside [{self.a}, {self.b}]")
        return x

    def eval(self, x) -> Fraction:
        x = self._check(x)
        k = bisect_left(self.breakpoints, x)
        if self.breakpoints[k] == x:
            return self.values[k]
        return self.pieces[k - 1](x)

    __call__ = eval

    def limit_left(self, x) -> Fraction:
        x = self._check(x)
        if x == self.a:
            return self.values[0]
        k = bisect_left(self.breakpoints, x)
        return self.pieces[k - 1](x)

    def limit_right(self, x) -> Fraction:
        x = self._check(x)
        if x == self.b:
            return self.values[-1]
        k = bisect_right(self.breakpoints, x)
        return self.pieces[k - 1](x)

    def discontinuities(self) -> list[tuple[Fraction, Fraction, Fraction]]:
        """``(x, f(x) - f(x-), f(x+) - f(x))`` at every breakpoint where f jumps."""
        out = []
        for x, v in zip(self.breakpoints, self.values):
            lg, rg = v - self.limit_left(x), self.limit_right(x) - v
            if lg or rg:
                out.append((x, lg, rg))
        return out

    def is_continuous(self) -> bool:
        return not self.discontinuities()

    # restructuring ----------------------------------------------------------

    def refine(self, points: Iterable) -> "PiecewiseFn":
        """Same function with extra breakpoints."""
        extra = sorted({self._check(p) for p in points} - set(self.breakpoints))
        if not extra:
            return self
        bps = sorted(set(self.breakpoints) | set(extra))
        pieces = []
        for lo, hi in zip(bps, bps[1:]):
            k = bisect_right(self.breakpoints, lo)
            pieces.append(self.pieces[k - 1])
        return PiecewiseFn(tuple(bps), tuple(pieces), tuple(self.eval(x) for x in bps))

    def simplify(self) -> "PiecewiseFn":
        """Drop interior breakpoints where nothing changes."""
        bps, pieces, vals = [self.a], [], [self.values[0]]
        for i, p in enumerate(self.pieces):
            x, v = self.breakpoints[i + 1], self.values[i + 1]
            if pieces and pieces[-1] == p and vals[-1] == p(bps[-1]):
                bps[-1], vals[-1] = x, v
            else:
                pieces.append(p)
                bps.append(x)
                vals.append(v)
        return PiecewiseFn(tuple(bps), tuple(pieces), tuple(vals))

    def restrict(self, c, d) -> "PiecewiseFn":
        """The function on ``[c, d]``; limits re-anchor at the new endpoints."""
        c, d = self._check(c), self._check(d)
        if c >= d:
            raise ValueError(f"empty restriction [{c}, {d}]")
        g = self.refine((c, d))
        i, j = g.breakpoints.index(c), g.breakpoints.index(d)
        return PiecewiseFn(g.breakpoints[i : j + 1], g.pieces[i:j], g.values[i : j + 1])

    # algebra ----------------------------------------------------------------

    def _combine(self, other: "PiecewiseFn", op: Callable) -> "PiecewiseFn":
        if not isinstance(other, PiecewiseFn):
            raise TypeError("expected a PiecewiseFn")
        if self.domain != other.domain:
            raise DomainMismatch(f"[{self.a}, {self.b}] vs [{other.a}, {other.b}]")
        f, g = self.refine(other.breakpoints), other.refine(self.breakpoints)
        pieces = tuple(op(p, q) for p, q in zip(f.pieces, g.pieces))
        vals = tuple(op(u, v) for u, v in zip(f.values, g.values))
        return PiecewiseFn(f.breakpoints, pieces, vals).simplify()

    def __add__(self, other):
        if isinstance(other, PiecewiseFn):
            return self._combine(other, lambda p, q: p + q)
        r = as_rational(other)
        return PiecewiseFn(self.breakpoints, tuple(p + r for p in self.pieces), tuple(v + r for v in self.values))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PiecewiseFn) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r) -> "PiecewiseFn":
        r = as_rational(r)
        return PiecewiseFn(self.breakpoints, tuple(p * r for p in self.pieces), tuple(v * r for v in self.values))

    def __mul__(self, other):
        if isinstance(other, PiecewiseFn):
            return self._combine(other, lambda p, q: p * q)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PiecewiseFn":
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        return PiecewiseFn(self.breakpoints, tuple(p**n for p in self.pieces), tuple(v**n for v in self.values))

    def sup_abs(self, width=Fraction(1, 2**20)) -> Fraction:
        """A rational upper bound on ``sup |f|`` (exact when every extremum is rational)."""
        best = max(abs(v) for v in self.values)
        for (lo, hi), p in zip(self.intervals(), self.pieces):
            m, M = poly_range(p, lo, hi, width)
            best = max(best, abs(m), abs(M))
        return best

    def __str__(self) -> str:
        parts = []
        for (lo, hi), p in zip(self.intervals(), self.pieces):
            parts.append(f"({format_rational(lo)},{format_rational(hi)}): {p}")
        for x, v in zip(self.breakpoints, self.values):
            parts.append(f"at {format_rational(x)}: {format_rational(v)}")
        return f"piecewise on [{format_rational(self.a)},{format_rational(self.b)}] {{ " + "; ".join(parts) + " }"


@dataclass(frozen=True)
class Dirichlet:
    """Indicator of the rationals on ``[a, b]``. Every exact input is rational, so it evaluates to 1."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a >= self.b:
            raise ValueError("empty domain")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def eval(self, x) -> Fraction:
        x = as_rational(x)
        if not self.a <= x <= self.b:
            raise OutOfDomain(f"{x} outside [{self.a}, {self.b}]")
        return Fraction(1)

    __call__ = eval

    def limit_left(self, x):
        raise Unsupported("the Dirichlet function has no one-sided limits")

    limit_right = limit_left

    def restrict(self, c, d) -> "Dirichlet":
        c, d = as_rational(c), as_rational(d)
        if not self.a <= c < d <= self.b:
            raise OutOfDomain(f"[{c}, {d}] not inside [{self.a}, {self.b}]")
        return Dirichlet(c, d)

    def __str__(self) -> str:
        return f"dirichlet on [{format_rational(self.a)},{format_rational(self.b)}]"


# -- helpers and free functions --------------------------------------------


def step(points: Sequence, consts: Sequence, values: Sequence | None = None) -> PiecewiseFn:
    """Step function with interval constants ``consts``.

    ``values`` defaults to the right-hand constant at each interior point
    (and the adjacent constant at the endpoints).
    """
    consts = [as_rational(c) for c in consts]
    if values is None:
        values = [consts[0]] + consts[1:] + [consts[-1]]
    return PiecewiseFn(tuple(points), tuple(Poly.const(c) for c in consts), tuple(values))


def heaviside(c, at, a, b) -> PiecewiseFn:
    """``H_c(x - at)`` on ``[a, b]``: 0 left of ``at``, ``c`` at it, 1 right of it."""
    c, t, a, b = (as_rational(v) for v in (c, at, a, b))
    if not a <= t <= b or a >= b:
        raise OutOfDomain(f"jump {t} outside [{a}, {b}]")
    if t == a:
        return PiecewiseFn((a, b), (Poly.const(1),), (c, 1))
    if t == b:
        return PiecewiseFn((a, b), (Poly.const(0),), (0, c))
    return PiecewiseFn((a, t, b), (Poly.const(0), Poly.const(1)), (0, c, 1))


def eval_fn(f, x) -> Fraction:
    return f.eval(x)


def pw_add(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    return f + g


def pw_scale(r, f: PiecewiseFn) -> PiecewiseFn:
    return f.scale(r)


def pw_restrict(f: PiecewiseFn, c, d) -> PiecewiseFn:
    return f.restrict(c, d)


def pos_part(f: PiecewiseFn) -> PiecewiseFn:
    """``max(f, 0)``, splitting pieces at their (rational) sign changes.

    Raises :class:`~stieltjes.errors.IrrationalRoot` when a piece changes sign
    at an irrational point.
    """
    cuts = []
    for (lo, hi), p in zip(f.intervals(), f.pieces):
        cuts.extend(sign_change_points(p, lo, hi))
    g = f.refine(cuts)
    zero = Poly()
    pieces = []
    for (lo, hi), p in zip(g.intervals(), g.pieces):
        pieces.append(p if p((lo + hi) / 2) > 0 else zero)
    vals = tuple(max(v, Fraction(0)) for v in g.values)
    return PiecewiseFn(g.breakpoints, tuple(pieces), vals).simplify()


def neg_part(f: PiecewiseFn) -> PiecewiseFn:
    """``max(-f, 0)``, so that ``f = pos_part(f) - neg_part(f)``."""
    return pos_part(-f)


def abs_fn(f: PiecewiseFn) -> PiecewiseFn:
    return pos_part(f) + neg_part(f)


def open_range(f: PiecewiseFn, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Outer bounds for f on the open interval ``(lo, hi)``."""
    i = bisect_right(f.breakpoints, lo) - 1
    m = M = None
    while i < len(f.pieces) and f.breakpoints[i] < hi:
        plo, phi = max(lo, f.breakpoints[i]), min(hi, f.breakpoints[i + 1])
        pm, pM = poly_range(f.pieces[i], plo, phi, width)
        m = pm if m is None else min(m, pm)
        M = pM if M is None else max(M, pM)
        if lo < f.breakpoints[i + 1] < hi:
            v = f.values[i + 1]
            m, M = min(m, v), max(M, v)
        i += 1
    return m, M


def best_fit_steps(f, P: Partition, width=Fraction(0)) -> tuple[PiecewiseFn, PiecewiseFn]:
    """Tightest bracketing steps ``(u_hat, v_hat)`` on ``P``.

    On each open interval the steps take outer bounds for the sup and inf of
    ``f`` there; at partition points they take ``f``'s own values.
    """
    if isinstance(f, Dirichlet):
        raise Unsupported("best-fit steps are not defined for the Dirichlet function")
    width = as_rational(width)
    if P.a < f.a or P.b > f.b:
        raise OutOfDomain("partition leaves the function's domain")
    ups, los = [], []
    for lo, hi in P.intervals():
        m, M = open_range(f, lo, hi, width)
        ups.append(M)
        los.append(m)
    vals = [f(x) for x in P.points]
    return step(P.points, ups, vals), step(P.points, los, vals)

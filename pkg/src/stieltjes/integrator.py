"""Bounded-variation integrators in reduced saltus form.

An :class:`Integrator` is ``alpha = G + S_L + S_R`` where ``G`` is a continuous
piecewise polynomial whose pieces are monotone, ``S_L`` is a finite sum of
``w * H_0(x - l)`` (left-continuous jumps) and ``S_R`` a finite sum of
``w * H_1(x - l)`` (right-continuous jumps). Truncated infinite series carry
an l1 tail bound on the omitted weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .errors import (
    DomainMismatch,
    EndpointDiscontinuity,
    IrrationalRoot,
    NonMonotonePiece,
    NotIncreasing,
    OutOfDomain,
    Unsupported,
)
from .numerics import as_rational, format_rational, sign_change_points
from .pwfn import Dirichlet, Partition, PiecewiseFn

LEFT: Literal["left"] = "left"
RIGHT: Literal["right"] = "right"


@dataclass(frozen=True)
class SaltusPart:
    """Jump terms of one chirality, sorted by location with nonzero weights."""

    chirality: str
    terms: tuple = ()
    tail_bound: Fraction = Fraction(0)

    def __post_init__(self):
        if self.chirality not in (LEFT, RIGHT):
            raise ValueError(f"chirality must be {LEFT!r} or {RIGHT!r}")
        merged: dict[Fraction, Fraction] = {}
        for loc, w in self.terms:
            loc, w = as_rational(loc), as_rational(w)
            merged[loc] = merged.get(loc, Fraction(0)) + w
        terms = tuple((l, w) for l, w in sorted(merged.items()) if w != 0)
        tail = as_rational(self.tail_bound)
        if tail < 0:
            raise ValueError("tail bound must be non-negative")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "tail_bound", tail)

    @property
    def locations(self) -> tuple:
        return tuple(l for l, _ in self.terms)

    @property
    def mass(self) -> Fraction:
        return sum((abs(w) for _, w in self.terms), Fraction(0))

    def map_weights(self, fn, tail=None) -> "SaltusPart":
        return SaltusPart(self.chirality, tuple((l, fn(w)) for l, w in self.terms),
                          self.tail_bound if tail is None else tail)


def _monotone_split(g: PiecewiseFn) -> PiecewiseFn:
    cuts = []
    for (lo, hi), p in zip(g.intervals(), g.pieces):
        try:
            cuts.extend(sign_change_points(p.deriv(), lo, hi))
        except IrrationalRoot as exc:
            raise NonMonotonePiece(
                f"piece {p} on ({format_rational(lo)}, {format_rational(hi)}) turns at an irrational point"
            ) from exc
    return g.refine(cuts)


@dataclass(frozen=True)
class Integrator:
    """``G + S_L + S_R`` on ``[a, b]``; see the module docstring."""

    continuous: PiecewiseFn
    left: SaltusPart = field(default_factory=lambda: SaltusPart(LEFT))
    right: SaltusPart = field(default_factory=lambda: SaltusPart(RIGHT))

    def __post_init__(self):
        g = self.continuous
        if isinstance(g, Dirichlet) or not isinstance(g, PiecewiseFn):
            raise Unsupported("the continuous part must be a piecewise polynomial")
        gaps = g.discontinuities()
        if gaps:
            x = format_rational(gaps[0][0])
            raise ValueError(f"continuous part jumps at {x}")
        g = _monotone_split(g.simplify())
        object.__setattr__(self, "continuous", g)
        if self.left.chirality != LEFT or self.right.chirality != RIGHT:
            raise ValueError("saltus parts have the wrong chirality")
        for loc in self.left.locations + self.right.locations:
            if not g.a <= loc <= g.b:
                raise OutOfDomain(f"jump at {format_rational(loc)} outside [{g.a}, {g.b}]")
        if g.b in self.left.locations:
            raise ValueError("a left-continuous jump term at b is not reduced")
        if g.a in self.right.locations:
            raise ValueError("a right-continuous jump term at a is not reduced")

    # construction -----------------------------------------------------------

    @classmethod
    def build(cls, continuous: PiecewiseFn, left: Iterable = (), right: Iterable = (),
              left_tail=0, right_tail=0) -> "Integrator":
        return cls(continuous, SaltusPart(LEFT, tuple(left), left_tail), SaltusPart(RIGHT, tuple(right), right_tail))

    @classmethod
    def pure_saltus(cls, a, b, left: Iterable = (), right: Iterable = (), base=0,
                    left_tail=0, right_tail=0) -> "Integrator":
        return cls.build(PiecewiseFn.const(base, a, b), left, right, left_tail, right_tail)

    @classmethod
    def from_piecewise(cls, pw: PiecewiseFn) -> "Integrator":
        """Reduced saltus decomposition of a piecewise polynomial."""
        if isinstance(pw, Dirichlet):
            raise Unsupported("the Dirichlet function is not of bounded variation")
        left, right = [], []
        for x in pw.breakpoints:
            v = pw(x)
            if x != pw.b and pw.limit_right(x) != v:
                left.append((x, pw.limit_right(x) - v))
            if x != pw.a and v != pw.limit_left(x):
                right.append((x, v - pw.limit_left(x)))
        pieces, vals = [], []
        for (lo, hi), p in zip(pw.intervals(), pw.pieces):
            shift = sum((w for l, w in left + right if l <= lo), Fraction(0))
            pieces.append(p - shift)
        for x, v in zip(pw.breakpoints, pw.values):
            shift = sum((w for l, w in left if x > l), Fraction(0)) + sum((w for l, w in right if x >= l), Fraction(0))
            vals.append(v - shift)
        return cls.build(PiecewiseFn(pw.breakpoints, tuple(pieces), tuple(vals)), left, right)

    @classmethod
    def coerce(cls, obj) -> "Integrator":
        return obj if isinstance(obj, Integrator) else cls.from_piecewise(obj)

    # evaluation -------------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return self.continuous.a

    @property
    def b(self) -> Fraction:
        return self.continuous.b

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.continuous.domain

    @property
    def tail_bound(self) -> Fraction:
        return self.left.tail_bound + self.right.tail_bound

    def jump_locations(self) -> list[Fraction]:
        return sorted(set(self.left.locations) | set(self.right.locations))

    def _check(self, x) -> Fraction:
        x = as_rational(x)
        if not self.a <= x <= self.b:
            raise OutOfDomain(f"{format_rational(x)} outside [{self.a}, {self.b}]")
        return x

    def eval(self, x) -> Fraction:
        x = self._check(x)
        s = sum((w for l, w in self.left.terms if x > l), Fraction(0))
        s += sum((w for l, w in self.right.terms if x >= l), Fraction(0))
        return self.continuous(x) + s

    __call__ = eval

    def limit_left(self, x) -> Fraction:
        # reduction (no right term at a) makes alpha(a-) = alpha(a) automatic
        x = self._check(x)
        s = sum((w for l, w in self.left.terms + self.right.terms if x > l), Fraction(0))
        return self.continuous(x) + s

    def limit_right(self, x) -> Fraction:
        x = self._check(x)
        s = sum((w for l, w in self.left.terms + self.right.terms if x >= l), Fraction(0))
        return self.continuous(x) + s

    def to_piecewise(self) -> PiecewiseFn:
        g = self.continuous.refine(self.jump_locations())
        pieces = []
        for lo, p in zip(g.breakpoints, g.pieces):
            pieces.append(p + (self.limit_right(lo) - self.continuous(lo)))
        return PiecewiseFn(g.breakpoints, tuple(pieces), tuple(self.eval(x) for x in g.breakpoints)).simplify()

    # alpha-lengths ------------------------------------------------------------

    def mu(self, c, d=None, kind: str = "()") -> Fraction:
        """alpha-length of an interval (``kind`` in ``() [] (] [)``) or, with ``d`` omitted, of ``{c}``."""
        c = self._check(c)
        if d is None:
            return self.limit_right(c) - self.limit_left(c)
        d = self._check(d)
        if c > d or (c == d and kind != "[]"):
            raise ValueError(f"empty interval {kind[0]}{c}, {d}{kind[1]}")
        if kind not in ("()", "[]", "(]", "[)"):
            raise ValueError(f"unknown interval kind {kind!r}")
        lo = self.limit_left(c) if kind[0] == "[" else self.limit_right(c)
        hi = self.limit_right(d) if kind[1] == "]" else self.limit_left(d)
        return hi - lo

    def mu_classical(self, c, d) -> Fraction:
        return self.eval(d) - self.eval(c)

    # algebra ----------------------------------------------------------------

    def _same_domain(self, other: "Integrator"):
        if self.domain != other.domain:
            raise DomainMismatch(f"[{self.a}, {self.b}] vs [{other.a}, {other.b}]")

    def __add__(self, other):
        if not isinstance(other, Integrator):
            return Integrator(self.continuous + as_rational(other), self.left, self.right)
        self._same_domain(other)
        return Integrator(
            self.continuous + other.continuous,
            SaltusPart(LEFT, self.left.terms + other.left.terms, self.left.tail_bound + other.left.tail_bound),
            SaltusPart(RIGHT, self.right.terms + other.right.terms, self.right.tail_bound + other.right.tail_bound),
        )

    __radd__ = __add__

    def scale(self, r) -> "Integrator":
        r = as_rational(r)
        return Integrator(
            self.continuous.scale(r),
            self.left.map_weights(lambda w: w * r, self.left.tail_bound * abs(r)),
            self.right.map_weights(lambda w: w * r, self.right.tail_bound * abs(r)),
        )

    def __mul__(self, r):
        return self.scale(r)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Integrator) else -as_rational(other))

    def restrict(self, c, d) -> "Integrator":
        """alpha on ``[c, d]``, with jumps outside the window folded into the constant."""
        c, d = self._check(c), self._check(d)
        g = self.continuous.restrict(c, d)
        const = sum((w for l, w in self.left.terms if l < c), Fraction(0))
        const += sum((w for l, w in self.right.terms if l <= c), Fraction(0))
        left = [(l, w) for l, w in self.left.terms if c <= l < d]
        right = [(l, w) for l, w in self.right.terms if c < l <= d]
        return Integrator.build(g + const, left, right, self.left.tail_bound, self.right.tail_bound)

    # variation and decompositions -------------------------------------------

    def _piece_increments(self) -> list[Fraction]:
        g = self.continuous
        return [g(hi) - g(lo) for lo, hi in g.intervals()]

    def _continuous_variation(self) -> PiecewiseFn:
        g = self.continuous
        acc = Fraction(0)
        pieces, vals = [], [Fraction(0)]
        for (lo, hi), p, inc in zip(g.intervals(), g.pieces, self._piece_increments()):
            sgn = 1 if inc >= 0 else -1
            pieces.append((p - p(lo)) * sgn + acc)
            acc += abs(inc)
            vals.append(acc)
        return PiecewiseFn(g.breakpoints, tuple(pieces), tuple(vals))

    def variation(self) -> "Integrator":
        """Running total variation ``V(x) = V(alpha, [a, x])``."""
        return Integrator(
            self._continuous_variation(),
            self.left.map_weights(abs),
            self.right.map_weights(abs),
        )

    def total_variation(self) -> Fraction:
        return sum((abs(i) for i in self._piece_increments()), Fraction(0)) + self.left.mass + self.right.mass

    def jordan(self) -> tuple["Integrator", "Integrator"]:
        """``(P, N)``, both increasing, with ``alpha = P - N + alpha(a)``."""
        vg = self._continuous_variation()
        g0 = self.continuous - self.continuous(self.a)
        half = Fraction(1, 2)
        pos = Integrator(
            (vg + g0).scale(half),
            self.left.map_weights(lambda w: (abs(w) + w) / 2),
            self.right.map_weights(lambda w: (abs(w) + w) / 2),
        )
        neg = Integrator(
            (vg - g0).scale(half),
            self.left.map_weights(lambda w: (abs(w) - w) / 2),
            self.right.map_weights(lambda w: (abs(w) - w) / 2),
        )
        return pos, neg

    def is_increasing(self) -> bool:
        """Increasing on the represented terms (omitted tail terms are not inspected)."""
        return all(i >= 0 for i in self._piece_increments()) and all(
            w > 0 for _, w in self.left.terms + self.right.terms
        )

    def is_continuous(self) -> bool:
        return not self.left.terms and not self.right.terms

    def sup_abs(self) -> Fraction:
        """Exact ``sup |alpha|`` of the represented terms."""
        pts = sorted(set(self.continuous.breakpoints) | set(self.jump_locations()))
        best = Fraction(0)
        for x in pts:
            best = max(best, abs(self.eval(x)), abs(self.limit_left(x)), abs(self.limit_right(x)))
        return best

    def bv_norm(self) -> Fraction:
        """``sup |alpha| + V(alpha, [a, b])``; with a nonzero tail this is an upper bound."""
        return self.sup_abs() + self.total_variation() + 2 * self.tail_bound

    def normalize_left(self) -> "Integrator":
        """Left-continuous version with the same one-sided limits."""
        if self.b in self.right.locations:
            raise EndpointDiscontinuity("alpha must be continuous at b to normalize from the left")
        left = SaltusPart(LEFT, self.left.terms + self.right.terms, self.tail_bound)
        return Integrator(self.continuous, left, SaltusPart(RIGHT))

    def normalize_right(self) -> "Integrator":
        """Right-continuous version with the same one-sided limits."""
        if self.a in self.left.locations:
            raise EndpointDiscontinuity("alpha must be continuous at a to normalize from the right")
        right = SaltusPart(RIGHT, self.left.terms + self.right.terms, self.tail_bound)
        return Integrator(self.continuous, SaltusPart(LEFT), right)

    def alpha_mesh(self, P: Partition) -> Fraction:
        """Largest alpha-length of an open partition interval."""
        if not self.is_increasing():
            raise NotIncreasing("the alpha-mesh needs an increasing integrator")
        return max(self.mu(lo, hi) for lo, hi in P.intervals())

    def __str__(self) -> str:
        def fmt(part):
            return "{" + ", ".join(f"({format_rational(l)}, {format_rational(w)})" for l, w in part.terms) + "}"

        text = f"G = {self.continuous}; left = {fmt(self.left)}; right = {fmt(self.right)}"
        if self.tail_bound:
            text += f"; tail <= {format_rational(self.tail_bound)}"
        return text


def from_piecewise(pw: PiecewiseFn) -> Integrator:
    return Integrator.from_piecewise(pw)


def bv_norm(alpha: Integrator) -> Fraction:
    return alpha.bv_norm()


def bv_distance(alpha: Integrator, beta: Integrator) -> Fraction:
    return (alpha - beta).bv_norm()


def variation(alpha: Integrator) -> Integrator:
    return alpha.variation()


def jordan(alpha: Integrator) -> tuple[Integrator, Integrator]:
    return alpha.jordan()

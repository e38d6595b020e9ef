"""RDS and classical DS integrals, bracketing sums and the identities around them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DirichletUnsupported,
    DomainMismatch,
    NotIncreasing,
    Unsupported,
)
from .integrator import Integrator
from .numerics import as_rational, format_rational, integrate_product
from .pwfn import Dirichlet, Partition, PiecewiseFn, best_fit_steps, open_range

DEFAULT_TOL = Fraction(1, 10**6)
DEFAULT_MAX_REFINE = 60


@dataclass(frozen=True)
class IntegralResult:
    """Exact value or certified enclosure, plus the saltus-truncation error term.

    The true integral lies in ``guarantee()``: ``[lo - tail_error*bound,
    hi + tail_error*bound]`` where ``bound`` is an upper bound on ``sup |f|``.
    """

    kind: str  # "exact" | "enclosure"
    lo: Fraction
    hi: Fraction
    tail_error: Fraction = Fraction(0)
    bound: Fraction = Fraction(0)
    refinements: int = 0
    converged: bool = True

    @classmethod
    def exact(cls, value, tail_error=0, bound=0) -> "IntegralResult":
        v = as_rational(value)
        return cls("exact", v, v, as_rational(tail_error), as_rational(bound))

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("an enclosure has no single value; use lo/hi")
        return self.lo

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def guarantee(self) -> tuple[Fraction, Fraction]:
        slack = self.tail_error * self.bound
        return self.lo - slack, self.hi + slack

    def contains(self, v) -> bool:
        lo, hi = self.guarantee()
        return lo <= as_rational(v) <= hi

    def __str__(self) -> str:
        if self.is_exact:
            text = format_rational(self.lo)
        else:
            text = f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"
        if self.tail_error:
            text += f" (tail <= {format_rational(self.tail_error)})"
        return text


def _same_domain(f, alpha: Integrator):
    if tuple(f.domain) != tuple(alpha.domain):
        raise DomainMismatch(
            f"integrand on [{format_rational(f.domain[0])}, {format_rational(f.domain[1])}], "
            f"integrator on [{format_rational(alpha.a)}, {format_rational(alpha.b)}]"
        )


def _require_step(s: PiecewiseFn):
    if not isinstance(s, PiecewiseFn) or not s.is_step():
        raise TypeError("expected a step function")


# -- step integrals ---------------------------------------------------------


def rds_step_integral(s: PiecewiseFn, alpha) -> Fraction:
    """Point values against singleton masses plus constants against open-interval masses."""
    alpha = Integrator.coerce(alpha)
    _require_step(s)
    _same_domain(s, alpha)
    total = sum((v * alpha.mu(x) for x, v in zip(s.breakpoints, s.values)), Fraction(0))
    for (lo, hi), p in zip(s.intervals(), s.pieces):
        total += p.constant_value() * alpha.mu(lo, hi)
    return total


def ds_step_integral(s: PiecewiseFn, alpha) -> Fraction:
    """Classical step sum with point-value lengths ``alpha(x_i) - alpha(x_{i-1})``."""
    alpha = Integrator.coerce(alpha)
    _require_step(s)
    _same_domain(s, alpha)
    return sum(
        (p.constant_value() * alpha.mu_classical(lo, hi) for (lo, hi), p in zip(s.intervals(), s.pieces)),
        Fraction(0),
    )


def ross_sums(f: PiecewiseFn, alpha, P: Partition, width=0) -> tuple[Fraction, Fraction]:
    """Upper and lower sums ``(U, L)`` from the best-fit steps on ``P``."""
    alpha = Integrator.coerce(alpha)
    if not alpha.is_increasing():
        raise NotIncreasing("upper and lower sums need an increasing integrator")
    u, v = best_fit_steps(f, P, width)
    return rds_step_integral(u, alpha), rds_step_integral(v, alpha)


# -- integrals --------------------------------------------------------------


def _continuous_integral(f: PiecewiseFn, alpha: Integrator) -> Fraction:
    """Integral of f against the continuous part: sum of the integrals of f * G' over pieces."""
    g = alpha.continuous
    ff = f.refine(g.breakpoints)
    gg = g.refine(f.breakpoints)
    total = Fraction(0)
    for (lo, hi), p, q in zip(ff.intervals(), ff.pieces, gg.pieces):
        total += integrate_product(p, q.deriv(), lo, hi)
    return total


def _dirichlet_integral(f: Dirichlet, alpha: Integrator) -> IntegralResult:
    ok, reason = is_rds_integrable(f, alpha)
    if not ok:
        raise DirichletUnsupported(reason)
    mass = sum((w for _, w in alpha.left.terms + alpha.right.terms), Fraction(0))
    return IntegralResult.exact(mass, alpha.tail_bound, 1)


def _prepare(f, alpha):
    alpha = Integrator.coerce(alpha)
    _same_domain(f, alpha)
    return alpha


def rds_integrate(f, alpha, tol=DEFAULT_TOL, max_refine: int = DEFAULT_MAX_REFINE,
                  method: str = "auto") -> IntegralResult:
    """The RDS integral of ``f`` against ``alpha``.

    ``method="exact"`` (the default for piecewise polynomials) integrates the
    saltus part as ``sum w * f(location)`` and the continuous part through
    antiderivatives. ``method="enclosure"`` brackets with best-fit steps and
    refines until the bracket is narrower than ``tol``.
    """
    alpha = _prepare(f, alpha)
    if isinstance(f, Dirichlet):
        return _dirichlet_integral(f, alpha)
    if method not in ("auto", "exact", "enclosure"):
        raise ValueError(f"unknown method {method!r}")
    bound = f.sup_abs()
    if method == "enclosure":
        return _enclose(f, alpha, as_rational(tol), max_refine, bound, classical=False)
    value = _continuous_integral(f, alpha)
    value += sum((w * f(l) for l, w in alpha.left.terms + alpha.right.terms), Fraction(0))
    return IntegralResult.exact(value, alpha.tail_bound, bound)


def ds_integrate(f, alpha, tol=DEFAULT_TOL, max_refine: int = DEFAULT_MAX_REFINE,
                 method: str = "auto") -> IntegralResult:
    """The classical (interior) Darboux-Stieltjes integral.

    Each jump contributes its weight times the limit of ``f`` from the side
    the jump comes from: ``f(x+)`` for left-continuous terms, ``f(y-)`` for
    right-continuous ones.
    """
    alpha = _prepare(f, alpha)
    if isinstance(f, Dirichlet):
        raise Unsupported("the classical integral of the Dirichlet function is not supported")
    if method not in ("auto", "exact", "enclosure"):
        raise ValueError(f"unknown method {method!r}")
    bound = f.sup_abs()
    if method == "enclosure":
        return _enclose(f, alpha, as_rational(tol), max_refine, bound, classical=True)
    value = _continuous_integral(f, alpha)
    value += sum((w * f.limit_right(l) for l, w in alpha.left.terms), Fraction(0))
    value += sum((w * f.limit_left(l) for l, w in alpha.right.terms), Fraction(0))
    return IntegralResult.exact(value, alpha.tail_bound, bound)


def _enclose(f: PiecewiseFn, alpha: Integrator, tol: Fraction, max_refine: int,
             bound: Fraction, classical: bool) -> IntegralResult:
    """Bracket the integral with best-fit steps and refine the worst intervals.

    With ``alpha = P - N + alpha(a)`` the upper bound on an interval is
    ``M*mu_P - m*mu_N`` and the lower bound ``m*mu_P - M*mu_N``.
    """
    pos, neg = alpha.jordan()
    mass = pos.total_variation() + neg.total_variation()
    slack = tol / (4 * (1 + mass))
    pts = set(f.breakpoints) | set(alpha.continuous.breakpoints) | set(alpha.jump_locations())
    pts = sorted(pts)

    if classical:
        def weights(lo, hi):
            return pos.mu_classical(lo, hi), neg.mu_classical(lo, hi)
        fixed = Fraction(0)
    else:
        def weights(lo, hi):
            return pos.mu(lo, hi), neg.mu(lo, hi)
        fixed = sum((f(x) * alpha.mu(x) for x in pts), Fraction(0))

    def cell(lo, hi):
        m, M = open_range(f, lo, hi, slack)
        mp, mn = weights(lo, hi)
        return (lo, hi, M * mp - m * mn, m * mp - M * mn)

    cells = [cell(lo, hi) for lo, hi in zip(pts, pts[1:])]
    rounds = 0
    while True:
        hi_sum = fixed + sum(c[2] for c in cells)
        lo_sum = fixed + sum(c[3] for c in cells)
        if hi_sum - lo_sum <= tol or rounds >= max_refine:
            break
        rounds += 1
        gaps = [c[2] - c[3] for c in cells]
        if rounds % 8 == 0:
            chosen = set(range(len(cells)))
        else:
            mean = sum(gaps) / len(gaps)
            chosen = {i for i, g in enumerate(gaps) if g > 0 and g >= mean}
        new = []
        for i, c in enumerate(cells):
            if i in chosen:
                mid = (c[0] + c[1]) / 2
                if not classical:
                    fixed += f(mid) * alpha.mu(mid)
                new.append(cell(c[0], mid))
                new.append(cell(mid, c[1]))
            else:
                new.append(c)
        cells = new
    return IntegralResult("enclosure", lo_sum, hi_sum, alpha.tail_bound, bound, rounds,
                          hi_sum - lo_sum <= tol)


def discrepancy(f: PiecewiseFn, alpha) -> Fraction:
    """RDS minus DS: each jump weight times the gap between f and its one-sided limit."""
    alpha = _prepare(f, alpha)
    if isinstance(f, Dirichlet):
        raise Unsupported("the Dirichlet function has no one-sided limits")
    total = sum((w * (f(l) - f.limit_right(l)) for l, w in alpha.left.terms), Fraction(0))
    total += sum((w * (f(l) - f.limit_left(l)) for l, w in alpha.right.terms), Fraction(0))
    return total


def parts_correction(alpha, beta, t) -> Fraction:
    """Jump-interaction term restoring the product rule at ``t``."""
    alpha, beta = Integrator.coerce(alpha), Integrator.coerce(beta)
    t = as_rational(t)
    ma = alpha(t) - (alpha.limit_right(t) + alpha.limit_left(t)) / 2
    mb = beta(t) - (beta.limit_right(t) + beta.limit_left(t)) / 2
    return ma * beta.mu(t) + mb * alpha.mu(t)


@dataclass(frozen=True)
class PartsCheck:
    lhs: Fraction
    rhs: Fraction
    corrections: tuple  # (t, A(t)) for each common discontinuity

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def parts_check(alpha, beta) -> PartsCheck:
    """Both sides of integration by parts with jump corrections."""
    alpha, beta = Integrator.coerce(alpha), Integrator.coerce(beta)
    if alpha.domain != beta.domain:
        raise DomainMismatch("integration by parts needs a common domain")
    if alpha.tail_bound or beta.tail_bound:
        raise Unsupported("integration by parts is checked only for finite saltus parts")
    lhs = rds_integrate(alpha.to_piecewise(), beta).value + rds_integrate(beta.to_piecewise(), alpha).value
    a, b = alpha.a, alpha.b
    common = sorted(set(alpha.jump_locations()) & set(beta.jump_locations()))
    corr = tuple((t, parts_correction(alpha, beta, t)) for t in common)
    rhs = alpha(b) * beta(b) - alpha(a) * beta(a) + sum((c for _, c in corr), Fraction(0))
    return PartsCheck(lhs, rhs, corr)


def is_rds_integrable(f, alpha) -> tuple[bool, str]:
    """Integrability via the measure of f's discontinuity set under the continuous parts of P and N."""
    alpha = Integrator.coerce(alpha)
    if isinstance(f, PiecewiseFn):
        return True, "finitely many discontinuities, each of continuous-part measure 0"
    if isinstance(f, Dirichlet):
        pos, neg = alpha.jordan()
        m = (pos.continuous(alpha.b) - pos.continuous(alpha.a)) + (neg.continuous(alpha.b) - neg.continuous(alpha.a))
        where = f"[{format_rational(alpha.a)},{format_rational(alpha.b)}]"
        if m == 0:
            return True, f"G-measure of {where} is 0"
        return False, f"G-measure of {where} is {format_rational(m)}"
    raise TypeError(f"cannot judge integrability of {type(f).__name__}")


def convergence_table(fs: Sequence, alpha, tol=DEFAULT_TOL) -> list[IntegralResult]:
    return [rds_integrate(f, alpha, tol) for f in fs]


@dataclass(frozen=True)
class SequenceRow:
    result: IntegralResult
    distance: Optional[Fraction]


def integrator_sequence_table(f, alphas: Sequence, tol=DEFAULT_TOL, limit=None) -> list[SequenceRow]:
    """Integrate ``f`` against each integrator, with BV distance to ``limit`` when given."""
    rows = []
    for alpha in alphas:
        alpha = Integrator.coerce(alpha)
        dist = None if limit is None else (alpha - Integrator.coerce(limit)).bv_norm()
        rows.append(SequenceRow(rds_integrate(f, alpha, tol), dist))
    return rows

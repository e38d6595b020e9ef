"""Tagged partitions, Riemann step functions and probes for Riemann-type integrals.

The probes return evidence tables. A gap that shrinks is consistent with
integrability; a gap that stays put on the adversarial family is a witness
against it. Neither is a proof.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .errors import MeshUnachievable, NotIncreasing, Unsupported
from .integrator import Integrator
from .numerics import as_rational
from .pwfn import Dirichlet, Partition, PiecewiseFn, open_range, step

DEFAULT_MESHES = (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000))
DEFAULT_DELTAS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
DEFAULT_ROUNDS = 8


@dataclass(frozen=True)
class TaggedPartition:
    partition: Partition
    samples: tuple

    def __post_init__(self):
        samples = tuple(as_rational(s) for s in self.samples)
        ivs = self.partition.intervals()
        if len(samples) != len(ivs):
            raise ValueError("need exactly one sample per interval")
        for (lo, hi), s in zip(ivs, samples):
            if not lo <= s <= hi:
                raise ValueError(f"sample {s} outside [{lo}, {hi}]")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def midpoints(cls, P: Partition) -> "TaggedPartition":
        return cls(P, tuple((lo + hi) / 2 for lo, hi in P.intervals()))


def _needs_piecewise(f):
    if isinstance(f, Dirichlet):
        raise Unsupported("Riemann-type sums are not supported for the Dirichlet function")


def _increasing(alpha) -> Integrator:
    alpha = Integrator.coerce(alpha)
    if not alpha.is_increasing():
        raise NotIncreasing("Riemann-type probes need an increasing integrator")
    return alpha


def riemann_step(f: PiecewiseFn, tp: TaggedPartition) -> PiecewiseFn:
    """``f(sample_i)`` on each open interval, ``f`` itself at partition points."""
    _needs_piecewise(f)
    P = tp.partition
    return step(P.points, [f(s) for s in tp.samples], [f(x) for x in P.points])


def sample_extremes(f: PiecewiseFn, alpha, P: Partition, width=Fraction(1, 2**30)) -> tuple[Fraction, Fraction]:
    """Outer bounds on the Riemann-Stieltjes sums of f over every tagging of P."""
    _needs_piecewise(f)
    alpha = _increasing(alpha)
    width = as_rational(width)
    fixed = sum((f(x) * alpha.mu(x) for x in P.points), Fraction(0))
    lo_sum = hi_sum = fixed
    for lo, hi in P.intervals():
        mass = alpha.mu(lo, hi)
        if mass == 0:
            continue
        m, M = open_range(f, lo, hi, width)
        m, M = min(m, f(lo), f(hi)), max(M, f(lo), f(hi))
        lo_sum += m * mass
        hi_sum += M * mass
    return lo_sum, hi_sum


@dataclass(frozen=True)
class ProbeRow:
    """One row of a probe table. ``target`` is the mesh, alpha-mesh or round asked for."""

    target: Fraction
    mesh: Fraction
    gap: Fraction
    lo: Fraction
    hi: Fraction
    intervals: int


def _row(f, alpha, P, target, mesh) -> ProbeRow:
    lo, hi = sample_extremes(f, alpha, P)
    return ProbeRow(as_rational(target), mesh, hi - lo, lo, hi, len(P))


def adversarial_partition(alpha: Integrator, delta: Fraction) -> Partition:
    """Uniform partition with mesh below ``delta`` that steps around the jumps.

    Uses ``n = ceil(4(b-a)/(3 delta))`` equal intervals of width ``h``; any
    interior point landing on a jump moves right by ``h/3``, which keeps the
    mesh at most ``4h/3 <= delta``.
    """
    a, b = alpha.a, alpha.b
    n = max(1, ceil(4 * (b - a) / (3 * delta)))
    h = (b - a) / n
    jumps = set(alpha.jump_locations())
    pts = [a]
    for k in range(1, n):
        p = a + k * h
        if p in jumps:
            p += h / 3
        pts.append(p)
    pts.append(b)
    return Partition(tuple(pts))


def mrs_probe(f, alpha, meshes: Sequence = DEFAULT_MESHES) -> list[ProbeRow]:
    """Sum spread over taggings of partitions with shrinking ordinary mesh."""
    _needs_piecewise(f)
    alpha = _increasing(alpha)
    rows = []
    for delta in meshes:
        delta = as_rational(delta)
        if delta <= 0:
            raise ValueError("mesh targets must be positive")
        P = adversarial_partition(alpha, delta)
        rows.append(_row(f, alpha, P, delta, P.mesh()))
    return rows


def rps_probe(f, alpha, base: Optional[Partition] = None, rounds: int = DEFAULT_ROUNDS) -> list[ProbeRow]:
    """Sum spread along repeated bisection of ``base`` (default: endpoints plus jumps)."""
    _needs_piecewise(f)
    alpha = _increasing(alpha)
    if base is None:
        base = Partition((alpha.a, alpha.b)).refine(alpha.jump_locations())
    P = base
    rows = [_row(f, alpha, P, 0, P.mesh())]
    for r in range(1, rounds + 1):
        P = P.bisect()
        rows.append(_row(f, alpha, P, r, P.mesh()))
    return rows


def alpha_mesh_partition(alpha: Integrator, delta: Fraction, max_depth: int = 200) -> Partition:
    """A partition whose alpha-mesh is at most ``delta``.

    Jumps of weight at least ``delta`` become partition points; intervals
    still heavier than ``delta`` are bisected.
    """
    alpha = _increasing(alpha)
    heavy = [x for x in alpha.jump_locations() if alpha.mu(x) >= delta]
    pts = list(Partition((alpha.a, alpha.b)).refine(heavy).points)
    out = [pts[0]]
    stack = [(lo, hi, 0) for lo, hi in reversed(list(zip(pts, pts[1:])))]
    while stack:
        lo, hi, depth = stack.pop()
        if alpha.mu(lo, hi) <= delta:
            out.append(hi)
            continue
        if depth >= max_depth:
            raise MeshUnachievable(f"alpha-mesh {delta} not reached after {max_depth} bisections")
        mid = (lo + hi) / 2
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return Partition(tuple(out))


def rrs_probe(f, alpha, deltas: Sequence = DEFAULT_DELTAS) -> list[ProbeRow]:
    """Sum spread over partitions with shrinking alpha-mesh."""
    _needs_piecewise(f)
    alpha = _increasing(alpha)
    rows = []
    for delta in deltas:
        delta = as_rational(delta)
        if delta <= 0:
            raise ValueError("alpha-mesh targets must be positive")
        P = alpha_mesh_partition(alpha, delta)
        rows.append(_row(f, alpha, P, delta, alpha.alpha_mesh(P)))
    return rows

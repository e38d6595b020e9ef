from fractions import Fraction as F
import random

import pytest

import randgen as g
from stieltjes.engine import rds_integrate, rds_step_integral
from stieltjes.errors import MeshUnachievable, NotIncreasing, Unsupported
from stieltjes.integrator import Integrator
from stieltjes.numerics import Poly
from stieltjes.pwfn import Dirichlet, Partition, PiecewiseFn, heaviside
from stieltjes.riemann import (
    TaggedPartition,
    adversarial_partition,
    alpha_mesh_partition,
    mrs_probe,
    riemann_step,
    rps_probe,
    rrs_probe,
    sample_extremes,
)

H1 = heaviside(1, 0, -1, 1)
X01 = PiecewiseFn.identity(0, 1)


def test_tagged_partition_validation():
    P = Partition((0, F(1, 2), 1))
    assert TaggedPartition.midpoints(P).samples == (F(1, 4), F(3, 4))
    with pytest.raises(ValueError):
        TaggedPartition(P, (F(3, 4), F(3, 4)))
    with pytest.raises(ValueError):
        TaggedPartition(P, (0,))


def test_riemann_step_example():
    sq = PiecewiseFn.from_poly(Poly((0, 0, 1)), 0, 1)
    s = riemann_step(sq, TaggedPartition.midpoints(Partition((0, F(1, 2), 1))))
    assert [p.constant_value() for p in s.pieces] == [F(1, 16), F(9, 16)]
    assert s.values == (0, F(1, 4), 1)
    assert rds_step_integral(s, X01) == F(5, 16)


def test_sample_extremes_enclose_every_tagging():
    rng = random.Random(41)
    for _ in range(40):
        a, b = g.domain(rng)
        f, al = g.rand_bv(rng, a, b), g.rand_integrator(rng, a, b, increasing=True)
        P = Partition((a, b)).refine(g.interior_points(rng, a, b, 5))
        lo, hi = sample_extremes(f, al, P)
        assert lo <= rds_integrate(f, al).value <= hi
        for _ in range(10):
            tags = [lo_ + (hi_ - lo_) * F(rng.randint(0, 8), 8) for lo_, hi_ in P.intervals()]
            v = rds_step_integral(riemann_step(f, TaggedPartition(P, tags)), al)
            assert lo <= v <= hi


def test_heaviside_probes():
    rows = mrs_probe(H1, H1)
    assert [r.gap for r in rows] == [1, 1, 1]
    assert all(r.mesh <= r.target for r in rows)
    rows = rps_probe(H1, H1, Partition((-1, 0, 1)), rounds=3)
    assert all(r.gap == 0 for r in rows) and rows[0].target == 0
    (row,) = rrs_probe(H1, H1, [F(1, 2)])
    assert row.gap == 0 and row.mesh <= F(1, 2)


def test_adversarial_partition_avoids_jumps():
    al = Integrator.from_piecewise(H1)
    for d in (F(1, 2), F(1, 3), F(1, 10)):
        P = adversarial_partition(al, d)
        assert 0 not in P.points and P.mesh() <= d


def test_probes_on_continuous_integrand_shrink():
    rows = rps_probe(X01, X01, rounds=10)
    assert rows[-1].gap == F(1, 1024)
    assert all(r1.gap <= r0.gap for r0, r1 in zip(rows, rows[1:]))
    (row,) = rrs_probe(X01, X01, [F(1, 4)])
    assert row.intervals == 4 and row.gap == F(1, 4)


def test_alpha_mesh_partition():
    rng = random.Random(42)
    for _ in range(30):
        a, b = g.domain(rng)
        al = g.rand_integrator(rng, a, b, increasing=True)
        d = F(1, rng.randint(1, 8))
        P = alpha_mesh_partition(al, d)
        assert al.alpha_mesh(P) <= d


def test_probe_errors():
    dec = PiecewiseFn.from_poly(Poly((0, -1)), 0, 1)
    with pytest.raises(NotIncreasing):
        mrs_probe(X01, dec)
    with pytest.raises(Unsupported):
        rps_probe(Dirichlet(0, 1), X01)
    with pytest.raises(ValueError):
        mrs_probe(X01, X01, [0])
    with pytest.raises(MeshUnachievable):
        alpha_mesh_partition(Integrator.from_piecewise(X01), F(1, 2**300), max_depth=10)

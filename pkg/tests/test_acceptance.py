"""Acceptance criteria 1-12, each at its stated tolerance (exact unless noted).

Run with pytest (a PASS/FAIL line per criterion appears in the summary) or
directly: ``python tests/test_acceptance.py``.
"""
from fractions import Fraction as F
import random
import sys
import time

import pytest

import randgen as g
from dsl_fixtures import INVALID, VALID
from stieltjes import dsl
from stieltjes.engine import (
    convergence_table,
    discrepancy,
    ds_integrate,
    is_rds_integrable,
    parts_check,
    rds_integrate,
    rds_step_integral,
)
from stieltjes.integrator import Integrator
from stieltjes.numerics import Poly, degree_cap, parse_rational
from stieltjes.pwfn import Dirichlet, Partition, PiecewiseFn, heaviside, pw_restrict, step
from stieltjes.riemann import alpha_mesh_partition, mrs_probe, rps_probe, rrs_probe

CRITERIA = {}
RESULTS = {}


def criterion(num, title):
    def wrap(fn):
        CRITERIA[num] = (title, fn)
        return fn
    return wrap


def small_integrator(rng, a, b, increasing=False, jumps=4):
    """PL plus step with at most 8 breakpoints in total."""
    pl = g.rand_pl(rng, a, b, k=2, increasing=increasing)
    return Integrator.from_piecewise(pl + _step_part(rng, a, b, jumps, increasing))


def _step_part(rng, a, b, jumps, increasing):
    pts = [a] + g.interior_points(rng, a, b, rng.randint(0, jumps)) + [b]
    if not increasing:
        return step(pts, [g.rat(rng) for _ in pts[1:]], [g.rat(rng) for _ in pts])
    consts, level = [], F(0)
    for _ in pts[1:]:
        level += g.rat(rng, 0, 2)
        consts.append(level)
    vals = [consts[0] - g.rat(rng, 0, 1)]
    vals += [lo + (hi - lo) * F(rng.randint(0, 4), 4) for lo, hi in zip(consts, consts[1:])]
    vals.append(consts[-1] + g.rat(rng, 0, 1))
    return step(pts, consts, vals)


@criterion(1, "Heaviside point mass")
def c1():
    rng = random.Random(101)
    for _ in range(200):
        lo, hi = g.domain(rng)
        t = g.interior_points(rng, lo, hi, 1)[0]
        a, b = g.rat(rng), g.rat(rng)
        f, al = heaviside(a, t, lo, hi), heaviside(b, t, lo, hi)
        assert rds_integrate(f, al).value == a
        assert ds_integrate(f, al).value == 1 - b
        # endpoint variants: the whole unit mass sits on t
        h = g.rand_poly_pw(rng, lo, hi)
        for end, c in ((lo, 0), (hi, 1)):
            mass = heaviside(c, end, lo, hi)
            assert rds_integrate(h, mass).value == h(end)
            assert rds_integrate(heaviside(a, end, lo, hi), mass).value == heaviside(a, end, lo, hi)(end)


@criterion(2, "Step-integral algebra")
def c2():
    rng = random.Random(102)
    for _ in range(500):
        a, b = g.domain(rng)
        s1, s2 = g.rand_step(rng, a, b), g.rand_step(rng, a, b)
        al, be = small_integrator(rng, a, b), small_integrator(rng, a, b)
        r = g.rat(rng)
        I = rds_step_integral
        assert I(s1.scale(r) + s2, al) == r * I(s1, al) + I(s2, al)
        assert I(s1, al.scale(r) + be) == r * I(s1, al) + I(s1, be)
        jumps = [x for x in al.jump_locations() if a < x < b]
        c = rng.choice(jumps) if jumps and rng.random() < 0.5 else g.interior_points(rng, a, b, 1)[0]
        assert I(s1, al) == I(pw_restrict(s1, a, c), al.restrict(a, c)) + I(pw_restrict(s1, c, b), al.restrict(c, b))
        assert I(s1.refine(g.interior_points(rng, a, b, 4)), al) == I(s1, al)
        inc = small_integrator(rng, a, b, increasing=True)
        bigger = s1 + g.rand_nonneg_step(rng, a, b)
        assert I(s1, inc) <= I(bigger, inc)


@criterion(3, "Bracket soundness and the x^2 example")
def c3():
    rng = random.Random(103)
    for _ in range(10):
        a, b = g.domain(rng)
        f, al = g.rand_poly_pw(rng, a, b, max_deg=2), g.rand_integrator(rng, a, b)
        for integrate in (rds_integrate, ds_integrate):
            enc = integrate(f, al, F(1, 20), method="enclosure")
            assert enc.lo <= enc.hi
            assert enc.lo <= integrate(f, al).value <= enc.hi
    sq = PiecewiseFn.from_poly(Poly((0, 0, 1)), 0, 1)
    al = PiecewiseFn.identity(0, 1) + heaviside(1, F(1, 3), 0, 1)
    assert rds_integrate(sq, al).value == F(4, 9)
    enc = rds_integrate(sq, al, F(1, 10**4), max_refine=30, method="enclosure")
    assert enc.lo <= F(4, 9) <= enc.hi
    assert enc.width <= F(1, 10**4) and enc.converged and enc.refinements <= 30


@criterion(4, "Decompositions")
def c4():
    rng = random.Random(104)
    for _ in range(200):
        a, b = g.domain(rng)
        pw = g.rand_bv(rng, a, b)
        al = Integrator.from_piecewise(pw)
        P, N = al.jordan()
        for _ in range(50):
            x = g.rand_x(rng, a, b)
            assert al(x) == P(x) - N(x) + al(a)
            assert al(x) == pw(x)
        assert al.to_piecewise() == pw.simplify()
        f = g.rand_poly_pw(rng, a, b, max_deg=2)
        assert rds_integrate(f, al).value == rds_integrate(f, P).value - rds_integrate(f, N).value


@criterion(5, "Integration by parts")
def c5():
    rng = random.Random(105)
    for _ in range(200):
        a, b = g.domain(rng)
        al = Integrator.from_piecewise(g.rand_bv(rng, a, b, jumps=3))
        be = Integrator.from_piecewise(g.rand_bv(rng, a, b, jumps=3))
        assert len(al.jump_locations()) <= 5 and len(be.jump_locations()) <= 5
        pc = parts_check(al, be)
        assert pc.lhs == pc.rhs
    c, d = F(2, 7), F(5, 9)
    pc = parts_check(heaviside(c, 0, -1, 1), heaviside(d, 0, -1, 1))
    assert pc.lhs == c + d and pc.rhs == 1 + (c + d - 1)


@criterion(6, "RDS-DS discrepancy")
def c6():
    rng = random.Random(106)
    for _ in range(200):
        a, b = g.domain(rng)
        f, al = g.rand_step(rng, a, b), g.rand_saltus(rng, a, b)
        assert rds_integrate(f, al).value - ds_integrate(f, al).value == discrepancy(f, al)
        # saltus placed only where f is continuous
        free = [x for x in g.interior_points(rng, a, b, 6, den=35) if x not in f.breakpoints]
        al2 = Integrator.pure_saltus(a, b, left=[(x, g.rat(rng)) for x in free],
                                     right=[(x, g.rat(rng)) for x in free[::2]])
        assert discrepancy(f, al2) == 0
        assert rds_integrate(f, al2).value == ds_integrate(f, al2).value


@criterion(7, "Saltus series with tails")
def c7():
    one = PiecewiseFn.const(1, 0, 1)
    for K in (4, 8, 16):
        tail = F(1, 2**K)
        al = Integrator.pure_saltus(0, 1, right=[(1 - F(1, 2**i), F(1, 2**i)) for i in range(1, K + 1)],
                                    right_tail=tail)
        r = rds_integrate(one, al)
        assert r.is_exact and r.value == 1 - tail and r.tail_error == tail
        assert r.contains(1)


@criterion(8, "Bounded convergence demo")
def c8():
    al = PiecewiseFn.identity(0, 1) + heaviside(1, F(1, 2), 0, 1)
    with degree_cap(30):
        fs = [PiecewiseFn.from_poly(Poly((0,) * n + (1,)), 0, 1) for n in range(31)]
        vals = [r.value for r in convergence_table(fs, al)]
    assert vals == [F(1, n + 1) + F(1, 2**n) for n in range(31)]
    assert all(v1 < v0 for v0, v1 in zip(vals, vals[1:]))
    assert rds_integrate(PiecewiseFn.const(0, 0, 1), al).value == 0


@criterion(9, "mRS counterexample")
def c9():
    H = heaviside(1, 0, -1, 1)
    assert [r.gap for r in mrs_probe(H, H, [F(1, 10), F(1, 100), F(1, 1000)])] == [1, 1, 1]
    assert rps_probe(H, H, Partition((-1, 0, 1)), rounds=0)[0].gap == 0
    (row,) = rrs_probe(H, H, [F(1, 2)])
    assert row.gap == 0
    assert 0 in alpha_mesh_partition(Integrator.from_piecewise(H), F(1, 2)).points


@criterion(10, "Dirichlet")
def c10():
    rng = random.Random(110)
    for _ in range(50):
        a, b = g.domain(rng)
        al = g.rand_saltus(rng, a, b)
        total = sum(w for _, w in al.left.terms + al.right.terms)
        assert rds_integrate(Dirichlet(a, b), al).value == total
    ok, _ = is_rds_integrable(Dirichlet(0, 1), PiecewiseFn.identity(0, 1))
    assert ok is False


@criterion(11, "Parser")
def c11():
    assert len(VALID) == 50 and len(INVALID) == 20
    for text in VALID:
        p = dsl.parse(text)
        printed = dsl.print_program(p)
        assert dsl.parse(printed) == p and dsl.print_program(dsl.parse(printed)) == printed
    for text, line, col in INVALID:
        try:
            dsl.parse(text)
        except dsl.Diagnostic as d:
            assert (d.line, d.column) == (line, col), (text, str(d))
        else:
            raise AssertionError(f"accepted: {text}")
    assert parse_rational("0.1") == F(1, 10)
    assert dsl.parse("let f = 0.1;").bindings[0].expr.value == F(1, 10)


@criterion(12, "Normalization invariance")
def c12():
    rng = random.Random(112)
    done = 0
    while done < 100:
        a, b = g.domain(rng)
        al = g.rand_integrator(rng, a, b)
        if b in al.right.locations:
            continue
        beta = al.normalize_left()
        for _ in range(3):
            s = g.rand_step(rng, a, b)
            assert rds_integrate(s, al).value == rds_integrate(s, beta).value
        done += 1


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    title, fn = CRITERIA[num]
    start = time.perf_counter()
    try:
        fn()
    except BaseException:
        RESULTS[num] = ("FAIL", title, time.perf_counter() - start)
        raise
    RESULTS[num] = ("PASS", title, time.perf_counter() - start)


def summary_lines():
    return [f"criterion {n:>2}: {RESULTS[n][0]}  {RESULTS[n][1]} ({RESULTS[n][2]:.2f}s)" for n in sorted(RESULTS)]


if __name__ == "__main__":
    for num in sorted(CRITERIA):
        try:
            test_criterion(num)
        except Exception as exc:  # keep going; report every criterion
            print(f"criterion {num}: {type(exc).__name__}: {exc}", file=sys.stderr)
    print("\n".join(summary_lines()))
    sys.exit(0 if all(r[0] == "PASS" for r in RESULTS.values()) else 1)

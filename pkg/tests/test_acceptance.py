"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s`.  The three N = 24 table
rows walk ~8 * 10^10 states each and are marked `long`; select them with
`-m long` (they are excluded by default).
"""

import math
import random
import time
from decimal import Decimal, getcontext

import pytest

import guesswork as gw
from guesswork.combinatorics import GrayCursor, PermutationCursor

from conftest import (
    max_scalar,
    random_box_ensemble,
    random_ensemble,
    random_spanning_ensemble,
    scalar_value,
)

getcontext().prec = 130


def _report(criterion, detail):
    print(f"\nACCEPTANCE {criterion}: PASS ({detail})")


TABLE_INTEGER = {
    # name -> (raw, scale, gmin to 4 decimals, states of the auto search)
    "tetrahedron": (80, 3, "1.8545", math.factorial(3)),
    "octahedron": (140, 1, "2.5140", 2**2 * math.factorial(2)),
    "cube": (1344, 3, "3.1771", 2**3 * math.factorial(3)),
    "truncated tetrahedron": (25168, 11, "4.5070", math.factorial(11)),
    "cuboctahedron": (4560, 2, "4.5104", 2**5 * math.factorial(5)),
}

TABLE_QUADRATIC = {
    "icosahedron": ((16544, 7392), (10, 2), "4.5081", 2**5 * math.factorial(5)),
    "dodecahedron": ((106272, 47456), (12, 0), "7.1741", 2**9 * math.factorial(9)),
}


def _check_row(name, raw, scale, gmin, states, budget_s):
    e = gw.solid(name)
    k = e.ring.k
    want_raw = gw.integer(raw) if k is None else gw.quadratic(k, *raw)
    want_scale = gw.integer(scale) if k is None else gw.quadratic(k, *scale)
    t0 = time.perf_counter()
    r = gw.compute_guesswork(e, "auto")
    elapsed = time.perf_counter() - t0
    assert r.raw == want_raw, f"{name}: raw {r.raw} != {want_raw}"
    assert r.scale == want_scale
    assert r.gmin_decimal(4) == gmin
    assert r.states_examined == states
    assert elapsed < budget_s, f"{name} took {elapsed:.1f}s (budget {budget_s}s)"
    return elapsed


def test_criterion_1_table_integer_rows():
    timings = []
    for name, (raw, scale, gmin, states) in TABLE_INTEGER.items():
        timings.append(f"{name} {_check_row(name, raw, scale, gmin, states, 60):.1f}s")
    _report(1, "; ".join(timings))


def test_criterion_2_table_quadratic_rows():
    t_ico = _check_row("icosahedron", *TABLE_QUADRATIC["icosahedron"], budget_s=10)
    t_dod = _check_row("dodecahedron", *TABLE_QUADRATIC["dodecahedron"], budget_s=600)
    _report(2, f"icosahedron {t_ico:.1f}s; dodecahedron {t_dod:.1f}s")


LONG_ROWS = {
    "truncated octahedron": (
        183440, 5, "8.5096", None, 2**11 * math.factorial(11),
    ),
    "truncated cube": (
        (47040, 23168), (5, -2), "8.5062", 2, 2**11 * math.factorial(11),
    ),
    "rhombicuboctahedron": (
        (146128, 100128), (5, 2), "8.5059", 2, 2**11 * math.factorial(11),
    ),
}


@pytest.mark.long
@pytest.mark.parametrize("name", sorted(LONG_ROWS))
def test_long_table_rows(name):
    raw, scale, gmin, k, states = LONG_ROWS[name]
    e = gw.solid(name)
    want_raw = gw.integer(raw) if k is None else gw.quadratic(k, *raw)
    want_scale = gw.integer(scale) if k is None else gw.quadratic(k, *scale)
    t0 = time.perf_counter()
    r = gw.compute_guesswork(e, "auto")
    elapsed = time.perf_counter() - t0
    assert r.raw == want_raw
    assert r.scale == want_scale
    assert r.gmin_decimal(4) == gmin
    assert r.states_examined == states
    _report("long row", f"{name} {elapsed:.0f}s, g = {r.g_string()}")


def test_criterion_3_algorithm_equivalence():
    rng = random.Random(303)
    checked = 0
    for name in ["octahedron", "cube"]:
        e = gw.solid(name)
        a = gw.guesswork_exhaustive(e, engine="python")
        b = gw.guesswork_symmetric(e, engine="python")
        assert a.raw == b.raw
        checked += 1
    random_checked = 0
    while random_checked < 25:
        e = random_box_ensemble(rng, k=rng.choice([None, None, 2, 5]))
        if e.n > 8:
            continue
        a = gw.guesswork_exhaustive(e, engine="python")
        b = gw.guesswork_symmetric(e, assume_symmetric=True, engine="python")
        assert a.raw == b.raw, f"mismatch on {e.vectors}"
        random_checked += 1
        checked += 1
    _report(3, f"{checked} ensembles, exact ring equality")


def _walk_checking_invariant(e, mode):
    st = gw.search_state(e, mode)
    cursor = PermutationCursor(len(st.order))
    steps = 0
    assert st.wsum == gw.weighted_sum(e, st.full_order())
    while True:
        if st.plan.signed:
            for k in GrayCursor(len(st.order)):
                gw.apply_flip(st, k)
                steps += 1
                assert st.wsum == gw.weighted_sum(e, st.full_order())
        step = cursor.next_swap()
        if step is None:
            return steps
        gw.apply_swap(st, *step)
        steps += 1
        assert st.wsum == gw.weighted_sum(e, st.full_order())


def test_criterion_4_incremental_equals_direct():
    rng = random.Random(404)
    sizes = [2, 3, 4, 5, 6] * 11 + [7] * 3 + [8] * 2  # 60 plain ensembles
    total_steps = 0
    count = 0
    for n in sizes:
        e = random_ensemble(rng, n, k=rng.choice([None, 2, 3, 5]))
        total_steps += _walk_checking_invariant(e, "exhaustive")
        count += 1
    for _ in range(40):  # centrally symmetric ensembles drive the paired walks
        e = random_box_ensemble(rng, k=rng.choice([None, 2, 3, 5]))
        total_steps += _walk_checking_invariant(e, "central")
        if e.n % 2 == 0:
            total_steps += _walk_checking_invariant(e, "symmetric")
        count += 1
    assert count == 100
    _report(4, f"100 ensembles, {total_steps} generator steps, zero tolerance")


def test_criterion_5_symmetry_equivalence():
    rng = random.Random(505)
    square = gw.make_ensemble([[1, 0], [-1, 0], [0, 1], [0, -1]], 1)
    orders = {}
    for label, e, want in [
        ("square", square, 8),
        ("tetrahedron", gw.solid("tetrahedron"), 24),
        ("octahedron", gw.solid("octahedron"), 48),
        ("cube", gw.solid("cube"), 48),
    ]:
        t0 = time.perf_counter()
        fast = gw.symmetries_fast(e)
        fast_s = time.perf_counter() - t0
        ex = gw.symmetries_exhaustive(e)
        assert fast.permutations == ex.permutations
        assert fast.order == want
        assert fast_s < 1.0, f"{label} fast run took {fast_s:.2f}s"
        orders[label] = fast.order
    for _ in range(100):
        d = rng.randint(1, 3)
        n = rng.randint(d, 7) if d < 3 else rng.randint(3, 7)
        e = random_spanning_ensemble(rng, n, d, k=rng.choice([None, None, 2, 5]))
        fast = gw.symmetries_fast(e)
        ex = gw.symmetries_exhaustive(e)
        assert fast.permutations == ex.permutations
    _report(5, f"orders {orders}; 100 random spanning sets, set equality")


def test_criterion_6_ring_property_suite():
    rng = random.Random(606)
    failures = 0
    for i in range(10_000):
        k = rng.choice([None, 2, 3, 5])
        span = 10**6 if i % 10 else 10**40
        if k is None:
            a = gw.integer(rng.randint(-span, span))
            b = gw.integer(rng.randint(-span, span))
            c = gw.integer(rng.randint(-span, span))
        else:
            a = gw.quadratic(k, rng.randint(-span, span), rng.randint(-span, span))
            b = gw.quadratic(k, rng.randint(-span, span), rng.randint(-span, span))
            c = gw.quadratic(k, rng.randint(-span, span), rng.randint(-span, span))
        kk = k or 0
        sq = a * a
        ok = (
            a + b == b + a
            and a * b == b * a
            and (a + b) + c == a + (b + c)
            and a * (b + c) == a * b + a * c
            and (sq.z0, sq.z1) == (a.z0 * a.z0 + kk * a.z1 * a.z1, 2 * a.z0 * a.z1)
            and gw.is_nonneg(sq)
        )
        va, vb = scalar_value(a), scalar_value(b)
        ok = ok and gw.is_nonneg(a) == (va >= 0)
        ok = ok and gw.compare(a, b) == ((va > vb) - (va < vb))
        if not ok:
            failures += 1
    assert failures == 0
    _report(6, "10000 randomized checks, zero failures")


def test_criterion_7_generator_suite():
    # permutations: n! distinct orderings for every n <= 8
    for n in range(9):
        cur = list(range(n))
        seen = {tuple(cur)}
        cursor = PermutationCursor(n)
        while (step := cursor.next_swap()) is not None:
            i, j = step
            cur[i - 1], cur[j - 1] = cur[j - 1], cur[i - 1]
            seen.add(tuple(cur))
        assert len(seen) == math.factorial(n)
    # sign patterns: 2^m distinct for m = 16
    m = 16
    cur = [1] * m
    seen = {tuple(cur)}
    gray = GrayCursor(m)
    while (k := gray.next_flip()) is not None:
        cur[k - 1] = -cur[k - 1]
        seen.add(tuple(cur))
    assert len(seen) == 2**m
    # combinations: C(n, d) distinct subsets, single exchanges only
    pairs = [(10, 5), (14, 7), (16, 5), (20, 3), (12, 6), (16, 2), (9, 4)]
    for n, d in pairs:
        assert math.comb(n, d) <= 10_000
        cursor = gw.CombinationCursor(n, d)
        cur = set(cursor.selection)
        seen = {frozenset(cur)}
        while (step := cursor.next_combination()) is not None:
            out, ins = step
            assert out in cur and ins not in cur
            cur.remove(out)
            cur.add(ins)
            seen.add(frozenset(cur))
        assert len(seen) == math.comb(n, d)
    _report(7, f"n <= 8 permutations, m = 16 signs, {len(pairs)} combination spaces")


def test_gmin_bounds_on_random_inputs():
    # supporting invariant: 1 <= G_min <= (N + 1)/2 on arbitrary ensembles
    rng = random.Random(707)
    for _ in range(20):
        e = random_ensemble(rng, rng.randint(1, 6), k=rng.choice([None, 2]))
        r = gw.guesswork_exhaustive(e, engine="python")
        val = Decimal(r.gmin_decimal(6))
        assert Decimal(1) <= val <= Decimal(e.n + 1) / 2

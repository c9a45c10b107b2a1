"""Exit criteria. Each test logs one PASS/FAIL line, shown in the pytest summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from polarize.curve import (closed_form_polar_curve, polar_value_curve, sigma_table_curve)
from polarize.oracle import (decasteljau_curve, decasteljau_rect, decasteljau_tri,
                             naive_polar_curve, naive_polar_rect, naive_polar_tri,
                             naive_terms_curve, naive_terms_rect, naive_terms_tri)
from polarize.poly import RationalMap
from polarize.rational import drop_coordinates, lift_and_polarize
from polarize.rect import closed_form_rect, polar_value_rect, rect_cell_count, sigma_table_rect
from polarize.scalar import binomial, multinomial3
from polarize.tri import closed_form_tri, polar_value_tri, sigma_table_tri

from conftest import (enneper_map, load_listing, proj_map, rand_poly1, rand_poly2_bideg,
                      rand_poly2_total, rand_ratio, rose_map)

RESULTS = []


@contextmanager
def criterion(label):
    note = []
    try:
        yield note
    except BaseException:
        RESULTS.append(f"FAIL  {label}")
        raise
    RESULTS.append(f"PASS  {label}" + (f"  [{'; '.join(note)}]" if note else ""))


def _rand_pts(rng, n):
    return [(rand_ratio(rng), rand_ratio(rng)) for _ in range(n)]


def test_c1_golden_rose():
    with criterion("C1 golden rose: 11 weighted points equal rcpoly, < 1 s") as note:
        start = time.perf_counter()
        net = lift_and_polarize(rose_map(), 10, (0, 1))
        elapsed = time.perf_counter() - start
        note.append(f"{elapsed:.3f} s")
        assert net.display() == load_listing("rcpoly")
        assert elapsed < 1.0


def test_c2_golden_projective_plane():
    with criterion("C2 golden projective plane: 45 points equal proj8net, < 5 s") as note:
        start = time.perf_counter()
        net = lift_and_polarize(proj_map(), 8, ((1, 0), (0, 1), (0, 0)))
        elapsed = time.perf_counter() - start
        note.append(f"{elapsed:.3f} s")
        assert len(net) == 45
        assert net.display() == load_listing("proj8net")
        assert elapsed < 5.0


def test_c3_golden_cross_cap():
    with criterion("C3 golden cross-cap: dropping z from proj8net gives projnet4"):
        net = lift_and_polarize(proj_map(), 8, ((1, 0), (0, 1), (0, 0)))
        assert drop_coordinates(net, [2]).display() == load_listing("projnet4")


def test_c4_oracle_equivalence():
    rng = random.Random(4)
    with criterion("C4 oracle equivalence: 100 random cases per kind, exact") as note:
        checked = 0
        for _ in range(100):
            m = rng.randint(0, 8)
            args = [rand_ratio(rng) for _ in range(m)]
            row = sigma_table_curve(args).final()
            for k in range(m + 1):
                assert row[k] / binomial(m, k) == naive_polar_curve(k, args)
                checked += 1
        for _ in range(100):
            p, q = rng.randint(0, 4), rng.randint(0, 4)
            u = [rand_ratio(rng) for _ in range(p)]
            v = [rand_ratio(rng) for _ in range(q)]
            top = sigma_table_rect(u, v).final()
            for h in range(p + 1):
                for k in range(q + 1):
                    assert (top[(h, k)] / (binomial(p, h) * binomial(q, k))
                            == naive_polar_rect(h, k, u, v))
                    checked += 1
        for _ in range(100):
            m = rng.randint(0, 6)
            pts = _rand_pts(rng, m)
            top = sigma_table_tri(pts).final()
            for h in range(m + 1):
                for k in range(m - h + 1):
                    assert top[(h, k)] / multinomial3(m, h, k) == naive_polar_tri(h, k, pts)
                    checked += 1
        note.append(f"{checked} polar values")


def test_c5_round_trip():
    rng = random.Random(5)
    with criterion("C5 round trip: de Casteljau on nets equals the map, 20 params each"):
        rose = rose_map()
        net = lift_and_polarize(rose, 10, (0, 1))
        for _ in range(20):
            t = rand_ratio(rng)
            assert decasteljau_curve(net, t) == rose(t)

        enneper = enneper_map()
        net = lift_and_polarize(enneper, 3, ((1, 0), (0, 1), (0, 0)))
        for _ in range(20):
            uv = (rand_ratio(rng), rand_ratio(rng))
            assert decasteljau_tri(net, uv) == enneper(*uv)

        bip = RationalMap([rand_poly2_bideg(rng, 3, 2, terms=6) for _ in range(3)])
        net = lift_and_polarize(bip, (3, 2), ((Fraction(-1, 2), 2), (1, 3)), kind="rect")
        for _ in range(20):
            u, v = rand_ratio(rng), rand_ratio(rng)
            assert decasteljau_rect(net, u, v) == bip(u, v)


def test_c6_closed_form_sweeps():
    rng = random.Random(6)
    with criterion("C6 closed forms equal recurrences over exhaustive sweeps") as note:
        n = 0
        for m in range(11):
            r, s = rand_ratio(rng), rand_ratio(rng)
            for cs in range(m + 1):
                row = sigma_table_curve([r] * (m - cs) + [s] * cs).final()
                for k in range(m + 1):
                    assert closed_form_polar_curve(m - cs, cs, r, s, k) == row[k] / binomial(m, k)
                    n += 1
        for p in range(6):
            for q in range(6):
                for zu in range(p + 1):
                    for zv in range(q + 1):
                        top = sigma_table_rect([0] * zu + [1] * (p - zu),
                                               [0] * zv + [1] * (q - zv)).final()
                        for h in range(p + 1):
                            for k in range(q + 1):
                                expect = top[(h, k)] / (binomial(p, h) * binomial(q, k))
                                assert closed_form_rect(p, q, zu, zv, h, k) == expect
                                n += 1
        for m in range(9):
            for cr in range(m + 1):
                for cs in range(m - cr + 1):
                    ct = m - cr - cs
                    top = sigma_table_tri([(1, 0)] * cr + [(0, 1)] * cs + [(0, 0)] * ct).final()
                    for h in range(m + 1):
                        for k in range(m - h + 1):
                            expect = top[(h, k)] / multinomial3(m, h, k)
                            assert closed_form_tri(m, cr, cs, ct, h, k) == expect
                            n += 1
        note.append(f"{n} values")


def test_c7_complexity_counts():
    with criterion("C7 cell and naive-term counts match the closed forms"):
        for m in range(13):
            assert sigma_table_curve([1] * m).updates == m * (m + 1) // 2
        for p in range(7):
            for q in range(7):
                assert sigma_table_rect([1] * p, [1] * q).cell_count == rect_cell_count(p, q)
                brute = sum(1 for i in range(p + 1) for j in range(q + 1)
                            for h in range(i + 1) for k in range(j + 1))
                assert rect_cell_count(p, q) == brute
        for m in range(10):
            assert sigma_table_tri([(1, 1)] * m).cell_count == sum(
                (i + 1) * (i + 2) // 2 for i in range(m + 1))
        for m in range(9):
            assert naive_terms_curve([1] * m) == 2 ** (m + 1) - 1
        for p in range(5):
            for q in range(5):
                assert naive_terms_rect([1] * p, [1] * q) == 2 ** (p + q + 1) - 1
        for m in range(7):
            assert naive_terms_tri([(1, 1)] * m) == (3 ** (m + 1) - 1) // 2


def test_c8_direct_recurrence_parity():
    rng = random.Random(8)
    timings = {"sigma": 0.0, "direct": 0.0}

    def both(fn, *args):
        out = []
        for method in ("sigma", "direct"):
            start = time.perf_counter()
            out.append(fn(*args, method=method))
            timings[method] += time.perf_counter() - start
        return out

    with criterion("C8 sigma-then-divide equals direct f-recurrence, 50 inputs per kind") as note:
        for _ in range(50):
            m = rng.randint(0, 10)
            a, b = both(polar_value_curve, rand_poly1(rng, m), [rand_ratio(rng) for _ in range(m)])
            assert a == b
        for _ in range(50):
            p, q = rng.randint(0, 5), rng.randint(0, 5)
            a, b = both(polar_value_rect, rand_poly2_bideg(rng, p, q),
                        [rand_ratio(rng) for _ in range(p)], [rand_ratio(rng) for _ in range(q)])
            assert a == b
        for _ in range(50):
            m = rng.randint(0, 8)
            a, b = both(polar_value_tri, rand_poly2_total(rng, m), _rand_pts(rng, m))
            assert a == b
        note.append(f"sigma {timings['sigma'] * 1e3:.1f} ms, direct {timings['direct'] * 1e3:.1f} ms")

from fractions import Fraction

import pytest

from polarize.curve import sigma_table_curve
from polarize.errors import DegreeError
from polarize.oracle import naive_polar_rect
from polarize.poly import Poly2, RationalMap, eval2
from polarize.rect import (closed_form_rect, f_table_rect, polar_value_rect, rect_cell_count,
                           rect_control_net, sigma_table_rect)
from polarize.scalar import binomial

from conftest import rand_poly2_bideg, rand_ratio


def test_sigma_examples():
    table = sigma_table_rect([1, 1], [1, 1])
    for h in range(3):
        for k in range(3):
            assert table[(2, 2, h, k)] == binomial(2, h) * binomial(2, k)
    # Frozen from double-subset enumeration: only I={2}, J={2} contributes.
    assert sigma_table_rect([0, 1], [0, 1])[(2, 2, 1, 1)] == 1


def test_degenerate_dimensions_reduce_to_curve():
    args = [Fraction(2), Fraction(-1, 3), Fraction(5)]
    curve = sigma_table_curve(args).final()
    only_v = sigma_table_rect([], args).final()
    only_u = sigma_table_rect(args, []).final()
    assert [only_v[(0, k)] for k in range(4)] == curve
    assert [only_u[(h, 0)] for h in range(4)] == curve


def test_polar_value_examples():
    uv = Poly2({(1, 1): 1})
    assert polar_value_rect(uv, [0, 1], [0, 1]) == Fraction(1, 4)
    assert polar_value_rect(Poly2.constant(1), [3, 9], [Fraction(1, 2)]) == 1
    assert polar_value_rect(Poly2.var_u(), [1, 2, 6], [7, 7]) == 3
    with pytest.raises(DegreeError):
        polar_value_rect(Poly2({(0, 3): 1}), [1], [1, 2])


def test_net_examples():
    f01 = ((0, 1), (0, 1))
    net = rect_control_net(RationalMap([Poly2({(1, 1): 1})]), (1, 1), f01)
    assert [[p.affine[0] for p in row] for row in net.grid()] == [[0, 0], [0, 1]]
    net = rect_control_net(RationalMap([Poly2({(1, 0): 1, (0, 1): 1})]), (1, 1), f01)
    assert [[p.affine[0] for p in row] for row in net.grid()] == [[0, 1], [1, 2]]
    net = rect_control_net(RationalMap([Poly2({(2, 1): 1})]), (2, 1), f01)
    # Frozen from brute-force polarization at each corner tuple.
    assert [[p.affine[0] for p in row] for row in net.grid()] == [[0, 0], [0, 0], [0, 1]]
    assert net.indices() == [(i, j) for i in range(3) for j in range(2)]


def test_closed_form_examples():
    assert closed_form_rect(2, 2, 1, 1, 1, 1) == Fraction(1, 4)
    assert closed_form_rect(3, 2, 0, 0, 2, 1) == 1
    assert closed_form_rect(3, 2, 2, 0, 2, 1) == 0


def test_oracle_equivalence(rng):
    for p in range(5):
        for q in range(5):
            u = [rand_ratio(rng) for _ in range(p)]
            v = [rand_ratio(rng) for _ in range(q)]
            top = sigma_table_rect(u, v).final()
            for h in range(p + 1):
                for k in range(q + 1):
                    assert top[(h, k)] / (binomial(p, h) * binomial(q, k)) == naive_polar_rect(h, k, u, v)


def test_separate_symmetry(rng):
    u = [rand_ratio(rng) for _ in range(4)]
    v = [rand_ratio(rng) for _ in range(3)]
    base = sigma_table_rect(u, v).final()
    for _ in range(5):
        rng.shuffle(u)
        assert sigma_table_rect(u, v).final() == base
        rng.shuffle(v)
        assert sigma_table_rect(u, v).final() == base


def test_diagonal(rng):
    for _ in range(10):
        poly = rand_poly2_bideg(rng, 3, 2)
        u, v = rand_ratio(rng), rand_ratio(rng)
        assert polar_value_rect(poly, [u] * 3, [v] * 4) == eval2(poly, u, v)


def test_tensor_factorization(rng):
    for p in range(5):
        for q in range(5):
            u = [rand_ratio(rng) for _ in range(p)]
            v = [rand_ratio(rng) for _ in range(q)]
            top = sigma_table_rect(u, v).final()
            su, sv = sigma_table_curve(u).final(), sigma_table_curve(v).final()
            for h in range(p + 1):
                for k in range(q + 1):
                    assert top[(h, k)] == su[h] * sv[k]


def test_direct_recurrence_matches_sigma(rng):
    u = [rand_ratio(rng) for _ in range(4)]
    v = [rand_ratio(rng) for _ in range(3)]
    sigma = sigma_table_rect(u, v)
    f = f_table_rect(u, v)
    for (i, j), layer in f.items():
        for (h, k), val in layer.items():
            assert val == sigma[(i, j, h, k)] / (binomial(i, h) * binomial(j, k))


def test_corner_interpolation(rng):
    for _ in range(5):
        polys = [rand_poly2_bideg(rng, 3, 2) for _ in range(3)]
        r1, s1, r2, s2 = (rand_ratio(rng) for _ in range(4))
        if r1 == s1 or r2 == s2:
            continue
        net = rect_control_net(RationalMap(polys), (3, 2), ((r1, s1), (r2, s2)))
        assert net[(0, 0)].affine == tuple(eval2(p, r1, r2) for p in polys)
        assert net[(3, 2)].affine == tuple(eval2(p, s1, s2) for p in polys)


def test_cell_count():
    for p in range(6):
        for q in range(6):
            table = sigma_table_rect([1] * p, [1] * q)
            brute = sum(1 for i in range(p + 1) for j in range(q + 1)
                        for h in range(i + 1) for k in range(j + 1))
            assert table.cell_count == rect_cell_count(p, q) == brute
            assert table.updates == brute - (p + 1) * (q + 1)

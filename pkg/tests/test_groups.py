import cmath
import itertools

import pytest

from pachner.groups import FinAbGroup, parse_group
from pachner.scalars import approx_equal


def small_groups(max_size=12):
    """All order tuples with entries >= 2 and product <= max_size."""
    found = []
    def rec(prefix, budget):
        if prefix:
            found.append(tuple(prefix))
        for n in range(2, budget + 1):
            rec(prefix + [n], budget // n)
    rec([], max_size)
    return [FinAbGroup(o) for o in found]


def chi_numeric(group, x, y):
    val = 1 + 0j
    for xi, yi, n in zip(x, y, group.orders):
        val *= cmath.exp(2j * cmath.pi * (n + 1) * xi * yi / n)
    return val


def g_numeric(group, x):
    val = 1 + 0j
    for xi, n in zip(x, group.orders):
        val *= cmath.exp(-1j * cmath.pi * (n + 1) * xi * xi / n)
    return val


def test_chi_oracle_values():
    z3 = FinAbGroup([3])
    # numeric first: exp(2 pi i * 4 / 3) is the primitive cube root
    assert approx_equal(chi_numeric(z3, (1,), (1,)), cmath.exp(2j * cmath.pi / 3), 1e-12)
    assert z3.chi((1,), (1,)) == z3.ring.root(2)

    z2 = FinAbGroup([2])
    assert approx_equal(chi_numeric(z2, (1,), (1,)), -1, 1e-12)
    assert z2.chi((1,), (1,)) == z2.ring.integer(-1)


def test_chi_at_identity():
    for group in small_groups(8):
        for x in group.elements():
            assert group.chi(group.zero, x) == group.ring.one


def test_chi_matches_numeric_everywhere():
    for group in small_groups(10):
        for x, y in itertools.product(group.elements(), repeat=2):
            assert approx_equal(
                group.chi(x, y).to_complex(), chi_numeric(group, x, y), 1e-10
            )


def test_chi_bicharacter_and_symmetric():
    for group in small_groups(10):
        elems = list(group.elements())
        for x, y in itertools.product(elems, repeat=2):
            assert group.chi(x, y) == group.chi(y, x)
        for x, xp, y in itertools.product(elems, repeat=3):
            lhs = group.chi(group.add(x, xp), y)
            assert lhs == group.chi(x, y) * group.chi(xp, y)


def test_gauss_oracle_values():
    z3 = FinAbGroup([3])
    assert approx_equal(g_numeric(z3, (1,)), cmath.exp(2j * cmath.pi / 3), 1e-12)
    assert z3.gauss_g((1,)) == z3.ring.root(2)

    z2 = FinAbGroup([2])
    assert approx_equal(g_numeric(z2, (1,)), 1j, 1e-12)
    assert z2.gauss_g((1,)) == z2.ring.root(1)
    # g(1)^2 / g(0) reproduces chi(1,1) = -1
    assert z2.gauss_g((1,)) * z2.gauss_g((1,)) == z2.chi((1,), (1,))


def test_gauss_at_identity():
    for group in small_groups(8):
        assert group.gauss_g(group.zero) == group.ring.one


def test_gauss_trivializes_cocycle():
    for group in small_groups(12):
        for x, y in itertools.product(group.elements(), repeat=2):
            lhs = group.gauss_g(x) * group.gauss_g(y)
            rhs = group.chi(x, y) * group.gauss_g(group.add(x, y))
            assert lhs == rhs


def test_gauss_even():
    for group in small_groups(12):
        for x in group.elements():
            assert group.gauss_g(x) == group.gauss_g(group.neg(x))


def test_chi_nondegenerate():
    for group in small_groups(12):
        elems = list(group.elements())
        for x in elems:
            if all(group.chi(x, y) == group.ring.one for y in elems):
                assert x == group.zero


def test_delta_normalization():
    z2 = FinAbGroup([2])
    assert z2.delta((0,)) == z2.ring.radical()
    assert z2.delta((1,)).is_zero()
    # integrating delta gives 1
    for group in small_groups(8):
        assert group.integrate(group.delta) == group.ring.one


def test_character_sum_vanishes():
    z3 = FinAbGroup([3])
    # numeric oracle: 1 + omega^4 + omega^8 over the cube roots sums to 0
    numeric = sum(chi_numeric(z3, (1,), (y,)) for y in range(3))
    assert abs(numeric) < 1e-12
    val = z3.integrate(lambda y: z3.chi((1,), y))
    assert val.is_zero()


def test_fourier_normalization():
    for group in small_groups(12):
        for x in group.elements():
            val = group.integrate(lambda y: group.chi(x, y))
            assert val == group.delta(x)


def test_integrate_constant():
    z4 = FinAbGroup([4])
    val = z4.integrate(lambda x: z4.ring.one)
    assert val == z4.ring.radical()


def test_group_arithmetic():
    g = FinAbGroup([2, 3])
    assert g.size == 6
    assert g.lcm_order == 6
    assert g.add((1, 2), (1, 2)) == (0, 1)
    assert g.neg((1, 1)) == (1, 2)
    assert g.sub((0, 0), (1, 1)) == (1, 2)
    with pytest.raises(ValueError):
        g.check_element((2, 0))


def test_parse_group_literals():
    assert parse_group("Z2").orders == (2,)
    assert parse_group("Z2xZ2").orders == (2, 2)
    assert parse_group("Z4xZ3").orders == (4, 3)
    assert parse_group("Z4xZ3").literal == "Z4xZ3"
    with pytest.raises(ValueError):
        parse_group("Q8")
    with pytest.raises(ValueError):
        parse_group("Z1")

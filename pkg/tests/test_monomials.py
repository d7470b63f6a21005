import random
from itertools import combinations_with_replacement

import pytest

from newtondual.core.monomials import (
    colex_compare,
    colon_ideal,
    divides,
    fold_lcm,
    format_monomial,
    ideal_from_exponents,
    minimalize,
    monomial,
    monomial_div,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
    product_ideal,
    support_stats,
    unit,
)
from newtondual.exceptions import AmbientMismatchException, TrivialIdealException
from newtondual.helpers.sampling import random_ideal, random_monomial


def test_format_monomial():
    assert format_monomial(monomial((2, 0, 1))) == "x1^2*x3"
    assert format_monomial(monomial((1, 3)), ["x", "y"]) == "x*y^3"
    assert format_monomial(unit(3)) == "1"


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        monomial((1, -1))


def test_lcm_gcd_and_division():
    a = monomial((2, 0, 1))
    b = monomial((1, 3, 0))
    assert monomial_lcm(a, b) == monomial((2, 3, 1))
    assert monomial_gcd(a, b) == monomial((1, 0, 0))
    assert monomial_div(a, monomial((1, 0, 1))) == monomial((1, 0, 0))
    with pytest.raises(ValueError):
        monomial_div(a, b)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchException):
        divides(monomial((1, 0)), monomial((1, 0, 0)))


def test_minimalize_drops_multiples():
    ideal = minimalize([monomial((2, 0)), monomial((1, 0)), monomial((0, 1)), monomial((1, 1))])
    assert ideal.generators == (monomial((1, 0)), monomial((0, 1)))


def test_ideals_compare_by_generators():
    first = ideal_from_exponents([(3, 0), (2, 2), (0, 4)])
    second = ideal_from_exponents([(0, 4), (3, 0), (2, 2), (3, 3)])
    assert first == second
    assert first.is_equigenerated is False


def test_empty_generators_need_ambient():
    assert minimalize([], 3).is_zero
    with pytest.raises(ValueError):
        minimalize([])


def test_colex_compare():
    assert colex_compare(monomial((2, 0)), monomial((1, 1))) == -1
    assert colex_compare(monomial((0, 1, 1)), monomial((2, 0, 0))) == 1
    assert colex_compare(monomial((1, 1)), monomial((1, 1))) == 0
    with pytest.raises(ValueError):
        colex_compare(monomial((1, 0)), monomial((1, 1)))


def test_colon_ideal():
    ideal = ideal_from_exponents([(2, 0), (1, 1)])
    assert colon_ideal(ideal, monomial((1, 0))) == ideal_from_exponents([(1, 0), (0, 1)])


def test_product_ideal():
    first = ideal_from_exponents([(1, 0), (0, 1)])
    assert product_ideal(first, first) == ideal_from_exponents([(2, 0), (1, 1), (0, 2)])


def test_support_stats():
    stats = support_stats(monomial((1, 0, 2)))
    assert stats.supp == frozenset({1, 3})
    assert stats.supp_1 == frozenset({3})
    assert stats.max == 3
    with pytest.raises(TrivialIdealException):
        support_stats(unit(2))


def test_fold_lcm():
    assert fold_lcm([monomial((1, 0)), monomial((0, 2))]) == monomial((1, 2))
    with pytest.raises(ValueError):
        fold_lcm([])


def _monomials_of_degree(n: int, d: int) -> list:
    return [monomial([c.count(i) for i in range(n)]) for c in combinations_with_replacement(range(n), d)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_colex_is_a_total_order(n, d):
    mons = _monomials_of_degree(n, d)
    for a in mons:
        for b in mons:
            assert colex_compare(a, b) == -colex_compare(b, a)
            assert (colex_compare(a, b) == 0) == (a == b)
            for c in mons:
                if colex_compare(a, b) < 0 and colex_compare(b, c) < 0:
                    assert colex_compare(a, c) < 0


def test_minimalize_is_idempotent_and_order_free():
    rng = random.Random(11)
    for _ in range(200):
        ideal = random_ideal(rng, rng.randint(1, 5), 8, 4)
        assert minimalize(ideal.generators, ideal.n) == ideal
        shuffled = list(ideal.generators) + [monomial_mul(g, g) for g in ideal.generators]
        rng.shuffle(shuffled)
        assert minimalize(shuffled, ideal.n) == ideal
        assert minimalize(reversed(ideal.generators), ideal.n).generators == ideal.generators


def test_colon_ideal_contains_the_ideal():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 5)
        ideal = random_ideal(rng, n, 6, 4)
        colon = colon_ideal(ideal, random_monomial(rng, n, rng.randint(0, 3)))
        assert all(g in colon for g in ideal.generators)


def test_product_is_commutative_and_associative():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 4)
        first, second, third = (random_ideal(rng, n, 4, 3) for _ in range(3))
        assert product_ideal(first, second) == product_ideal(second, first)
        assert product_ideal(product_ideal(first, second), third) == product_ideal(first, product_ideal(second, third))

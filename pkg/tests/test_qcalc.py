import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlift.exactnum import as_cyclotomic, zeta
from qlift.qcalc import (
    NuParams,
    gqb_expand,
    nu_b0,
    nu_closed_roots,
    nu_q1,
    nu_recursive,
    nu_roots,
    q_binomial,
    q_binomial_table,
    q_factorial,
    q_int,
)

QS = [zeta(3), zeta(5), zeta(12), as_cyclotomic(2), zeta(7, 3)]


def test_q_integers():
    q = as_cyclotomic(2)
    assert q_int(0, q) == 0
    assert q_int(3, q) == 7
    assert q_int(-2, q) == -q_int(2, q) * q**-2
    assert q_int(5, zeta(5)) == 0


def test_q_binomial_small():
    q = as_cyclotomic(2)
    assert q_binomial(4, 2, q) == 35
    assert q_binomial(3, 5, q) == 0
    assert q_binomial(3, -1, q) == 0


def test_q_binomial_matches_factorials_away_from_roots():
    q = as_cyclotomic(3)
    for n in range(8):
        for k in range(n + 1):
            assert q_binomial(n, k, q) * q_factorial(k, q) * q_factorial(n - k, q) == q_factorial(n, q)


def test_q_binomial_vanishes_at_roots_of_unity():
    for n in (3, 5, 7):
        q = zeta(n)
        assert all(q_binomial(n, k, q) == 0 for k in range(1, n))


@pytest.mark.parametrize("q", QS, ids=str)
def test_q_pascal(q):
    t = q_binomial_table(12, q)
    for n in range(1, 12):
        for k in range(1, n + 1):
            assert t[n + 1][k] == q**k * t[n][k] + t[n][k - 1]
            assert t[n + 1][k] == t[n][k] + q ** (n + 1 - k) * t[n][k - 1]


@given(st.integers(0, 10), st.sampled_from(QS))
def test_nu_b0_odd_vanishing(n, q):
    p = NuParams.of(0, 3, q)
    assert nu_recursive(2 * n + 1, p) == 0


@given(st.integers(0, 8), st.sampled_from(QS), st.integers(-3, 3))
def test_nu_b0_even_product(n, q, lam):
    p = NuParams.of(0, lam, q)
    prod = as_cyclotomic(lam) ** n
    for k in range(1, 2 * n, 2):
        prod = prod * q_int(k, q)
    assert nu_recursive(2 * n, p) == prod
    assert nu_b0(2 * n, lam, q) == prod


@given(st.sampled_from(QS[:3] + [zeta(7)]), st.integers(-3, 3), st.integers(-3, 3))
def test_closed_form_equals_recursion(q, a, b):
    alpha, beta = as_cyclotomic(a), as_cyclotomic(b)
    p = NuParams.of(alpha + beta, (q - 1) * alpha * beta, q)
    for n in range(21):
        assert nu_closed_roots(n, alpha, beta, q) == nu_recursive(n, p)


def test_q1_formula_matches_recursion():
    for b, lam in [(1, 1), (2, -3), (0, 5), (-1, 2)]:
        p = NuParams.of(b, lam, 1)
        for n in range(21):
            assert nu_q1(n, b, lam) == nu_recursive(n, p)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_nu_at_root_of_unity_is_power_sum(n):
    q = zeta(n)
    alpha, beta = q - 1, 1 - q**-1
    p = NuParams.of(alpha + beta, (q - 1) * alpha * beta, q)
    assert nu_recursive(n, p) == alpha**n + beta**n
    assert nu_recursive(n, p) == 2 * (q - 1) ** n


def test_nu_roots_finds_candidates():
    q = zeta(5)
    alpha, beta = as_cyclotomic(2), q
    a, b = nu_roots(alpha + beta, (q - 1) * alpha * beta, q, [alpha, beta, as_cyclotomic(1)])
    assert {a, b} == {alpha, beta}


def test_nu_roots_refuses_to_extend_field():
    with pytest.raises(ValueError):
        nu_roots(as_cyclotomic(0), as_cyclotomic(1), as_cyclotomic(2), [as_cyclotomic(1)])


def test_gqb_expand_degree_two():
    q, b, lam = zeta(5), as_cyclotomic(3), as_cyclotomic(2)
    t = gqb_expand(2, NuParams(b, lam, q))
    assert t[(0, 0)] == 1  # x^2
    assert t[(1, 0)] == b * (1 + q)  # z x
    assert t[(2, 0)] == b * b + lam  # z^2
    assert t[(2, 2)] == 1  # t^2


def test_gqb_seeded_random_triples_are_consistent():
    rng = random.Random(3)
    for _ in range(3):
        q = zeta(rng.choice([3, 5, 9]), 1)
        p = NuParams.of(rng.randint(-4, 4), rng.randint(-4, 4), q)
        assert gqb_expand(4, p)[(4, 2)] == q_binomial(4, 4, q) * q_binomial(4, 2, q) * nu_recursive(2, p)

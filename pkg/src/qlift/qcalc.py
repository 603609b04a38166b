"""q-integers, q-binomials and the coefficient function nu of the
generalized q-binomial expansion of (x + b z + t)^n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .exactnum import Cyclotomic, Scalar, as_cyclotomic

__all__ = [
    "NuParams",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_table",
    "nu_recursive",
    "nu_sequence",
    "nu_closed_roots",
    "nu_q1",
    "nu_b0",
    "nu_roots",
    "gqb_expand",
]

ONE = Cyclotomic.from_rational(1)
ZERO = Cyclotomic.from_rational(0)


@dataclass(frozen=True)
class NuParams:
    b: Cyclotomic
    lam: Cyclotomic
    q: Cyclotomic

    @classmethod
    def of(cls, b: Scalar, lam: Scalar, q: Scalar) -> "NuParams":
        return cls(as_cyclotomic(b), as_cyclotomic(lam), as_cyclotomic(q))


def q_int(n: int, q: Scalar) -> Cyclotomic:
    """(n)_q = 1 + q + ... + q^(n-1); (0)_q = 0 and (-m)_q = -q^(-m) (m)_q."""
    q = as_cyclotomic(q)
    if n < 0:
        return -(q ** n) * q_int(-n, q)
    total = ZERO
    power = ONE
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(n: int, q: Scalar) -> Cyclotomic:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k, q)
    return out


def q_binomial_table(nmax: int, q: Scalar) -> list[list[Cyclotomic]]:
    """Rows 0..nmax of Gaussian binomials at q, built with the q-Pascal rule.

    Factorial quotients are never formed, so the table is valid at roots of unity.
    """
    q = as_cyclotomic(q)
    qpow = [ONE]
    for _ in range(nmax):
        qpow.append(qpow[-1] * q)
    rows = [[ONE]]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        row = [ONE]
        for k in range(1, n):
            row.append(prev[k - 1] + qpow[k] * prev[k])
        row.append(ONE)
        rows.append(row)
    return rows


def q_binomial(n: int, i: int, q: Scalar) -> Cyclotomic:
    if n < 0 or i < 0 or n - i < 0:
        return ZERO
    return q_binomial_table(n, q)[n][i]


def nu_sequence(nmax: int, p: NuParams) -> list[Cyclotomic]:
    """nu(0), ..., nu(nmax) from nu(n) = b nu(n-1) + lam (n-1)_q nu(n-2)."""
    out = [ONE, p.b]
    for n in range(2, nmax + 1):
        out.append(p.b * out[n - 1] + p.lam * q_int(n - 1, p.q) * out[n - 2])
    return out[: nmax + 1]


def nu_recursive(n: int, p: NuParams) -> Cyclotomic:
    if n < 0:
        raise ValueError("nu is defined on nonnegative integers")
    return nu_sequence(n, p)[n]


def nu_closed_roots(n: int, alpha: Scalar, beta: Scalar, q: Scalar) -> Cyclotomic:
    """sum_i [n choose i]_q beta^i alpha^(n-i); alpha, beta are the roots of
    Y^2 - b Y + lam/(q-1), so b = alpha + beta and lam = (q-1) alpha beta."""
    q = as_cyclotomic(q)
    if q == 1:
        raise ValueError("the root form needs q != 1; use nu_q1")
    alpha, beta = as_cyclotomic(alpha), as_cyclotomic(beta)
    row = q_binomial_table(n, q)[n]
    return sum((row[i] * beta**i * alpha ** (n - i) for i in range(n + 1)), ZERO)


def nu_b0(n: int, lam: Scalar, q: Scalar) -> Cyclotomic:
    """nu at b = 0: zero in odd degree, lam^m (2m-1)_q (2m-3)_q ... (1)_q in degree 2m."""
    if n % 2:
        return ZERO
    lam = as_cyclotomic(lam)
    out = lam ** (n // 2)
    for k in range(1, n, 2):
        out = out * q_int(k, q)
    return out


def nu_q1(n: int, b: Scalar, lam: Scalar) -> Cyclotomic:
    """Closed form at q = 1: sum_i C(n, 2i) (2i)!/(2^i i!) b^(n-2i) lam^i.

    b = 0 is routed to the even/odd product form.
    """
    b, lam = as_cyclotomic(b), as_cyclotomic(lam)
    if b.is_zero():
        return nu_b0(n, lam, 1)
    total = ZERO
    for i in range(n // 2 + 1):
        c = Fraction(comb(n, 2 * i) * factorial(2 * i), 2**i * factorial(i))
        total = total + c * b ** (n - 2 * i) * lam**i
    return total


def nu_roots(b: Scalar, lam: Scalar, q: Scalar, candidates: Iterable[Scalar]) -> tuple[Cyclotomic, Cyclotomic]:
    """Find (alpha, beta) with alpha + beta = b, alpha*beta = lam/(q-1) among
    the supplied candidates for alpha. Never extends the field."""
    b, lam, q = as_cyclotomic(b), as_cyclotomic(lam), as_cyclotomic(q)
    if q == 1:
        raise ValueError("q = 1 has no root form")
    const = lam / (q - 1)
    for a in candidates:
        a = as_cyclotomic(a)
        if a * a - b * a + const == 0:
            return a, b - a
    raise ValueError("no candidate is a root of Y^2 - bY + lam/(q-1)")


def gqb_expand(n: int, p: NuParams) -> dict[tuple[int, int], Cyclotomic]:
    """Coefficient of t^j z^(i-j) x^(n-i) in (x + b z + t)^n, for 0 <= j <= i <= n."""
    rows = q_binomial_table(n, p.q)
    nu = nu_sequence(n, p)
    return {
        (i, j): rows[n][i] * rows[i][j] * nu[i - j]
        for i in range(n + 1)
        for j in range(i + 1)
    }

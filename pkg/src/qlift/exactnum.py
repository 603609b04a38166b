"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as integer numerators over one positive common
denominator, in the power basis 1, z, ..., z^(phi(N)-1) with z = zeta_N,
reduced modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclotomic",
    "CyclotomicZeroDivision",
    "cyclo_new",
    "cyclotomic_polynomial",
    "zeta",
    "root_order",
    "as_cyclotomic",
    "parse_cyclotomic",
]

Scalar = Union["Cyclotomic", int, Fraction]


class CyclotomicZeroDivision(ZeroDivisionError):
    pass


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # den monic, coefficients low -> high
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as integer coefficients, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is z^k expressed in the power basis, for 0 <= k < n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce by the monic Phi_n
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for j in range(deg):
                nxt[j] -= top * phi[j]
        cur = nxt
    return tuple(rows)


def _mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def _totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # normalised trace of z^k for k < phi(n); independent of the ambient conductor
    out = []
    for k in range(_totient(n)):
        m = n // math.gcd(k, n)
        out.append(Fraction(_mobius(m), _totient(m)))
    return tuple(out)


def _reduce_ints(n: int, coeffs: Sequence[int]) -> list[int]:
    """Reduce an integer polynomial in z = zeta_n to the power basis."""
    table = _reduction_table(n)
    deg = len(table[0])
    out = [0] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % n]
            if k % n < deg:
                out[k % n] += c
            else:
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
    return out


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, nums: Sequence[int], den: int = 1, _canonical: bool = False):
        if not _canonical:
            if n < 1:
                raise ValueError("conductor must be positive")
            if den == 0:
                raise CyclotomicZeroDivision("zero denominator")
            nums = _reduce_ints(n, nums)
            if den < 0:
                den, nums = -den, [-c for c in nums]
            g = den
            for c in nums:
                g = math.gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                den //= g
                nums = [c // g for c in nums]
            if not any(nums):
                den = 1
        self.n = n
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def from_rational(cls, r: Union[int, Fraction], n: int = 1) -> "Cyclotomic":
        r = Fraction(r)
        nums = [r.numerator] + [0] * (_totient(n) - 1)
        return cls(n, nums, r.denominator, _canonical=True) if r.numerator else cls(n, [0] * _totient(n), 1, _canonical=True)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def embed(self, m: int) -> "Cyclotomic":
        """Image in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot embed conductor {self.n} into {m}")
        k = m // self.n
        poly = [0] * (k * (len(self.nums) - 1) + 1)
        for i, c in enumerate(self.nums):
            poly[i * k] = c
        return Cyclotomic(m, poly, self.den)

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _pair(a: "Cyclotomic", b: Scalar) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(b, Cyclotomic):
            if isinstance(b, (int, Fraction)):
                return a, Cyclotomic.from_rational(b, a.n)
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        if a.n == b.n:
            return a, b
        if b.is_rational():
            return a, Cyclotomic.from_rational(Fraction(b.nums[0], b.den), a.n)
        if a.is_rational():
            return Cyclotomic.from_rational(Fraction(a.nums[0], a.den), b.n), b
        m = a.n * b.n // math.gcd(a.n, b.n)
        return a.embed(m), b.embed(m)

    def __add__(self, other: Scalar) -> "Cyclotomic":
        a, b = self._pair(self, other)
        if a is NotImplemented:
            return NotImplemented
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return Cyclotomic(a.n, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, tuple(-c for c in self.nums), self.den, _canonical=True)

    def __pos__(self) -> "Cyclotomic":
        return self

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        if isinstance(other, int):
            return Cyclotomic(self.n, [c * other for c in self.nums], self.den)
        a, b = self._pair(self, other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_rational():
            a, b = b, a
        if a.is_rational():
            c = a.nums[0]
            return Cyclotomic(b.n, [c * x for x in b.nums], a.den * b.den)
        return Cyclotomic(a.n, _poly_mul(a.nums, b.nums), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise CyclotomicZeroDivision("inverse of zero")
        if self.is_rational():
            return Cyclotomic.from_rational(Fraction(self.den, self.nums[0]), self.n)
        # extended Euclid in Q[x] against Phi_n
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = [Fraction(c, self.den) for c in self.nums]
        s = _qpoly_inverse_mod(a, phi)
        common = 1
        for c in s:
            common = common * c.denominator // math.gcd(common, c.denominator)
        return Cyclotomic(self.n, [int(c * common) for c in s], common)

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CyclotomicZeroDivision("division by zero")
            return self * Cyclotomic.from_rational(1 / Fraction(other), self.n)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        return self.inverse() * other

    def __pow__(self, e: int) -> "Cyclotomic":
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = Cyclotomic.from_rational(1, self.n)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.n == other.n:
            return self.den == other.den and self.nums == other.nums
        a, b = self._pair(self, other)
        return a.den == b.den and a.nums == b.nums

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                w = _trace_weights(self.n)
                tr = sum((c * t for c, t in zip(self.nums, w) if c), Fraction(0)) / self.den
                self._hash = hash((tr, "cyclo"))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # rendering ------------------------------------------------------------
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.nums):
            if not c:
                continue
            r = Fraction(c, self.den)
            mag = abs(r)
            if k == 0:
                body = str(mag)
            else:
                z = f"zeta({self.n})" + (f"^{k}" if k > 1 else "")
                body = z if mag == 1 else f"{mag}*{z}"
            parts.append(("-" if r < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"


def _qpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _qpoly_trim(q), _qpoly_trim(a[: len(b) - 1] or [Fraction(0)])


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _qpoly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qpoly_trim(out)


def _qpoly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    r0, r1 = list(m), _qpoly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while not (len(r1) == 1 and r1[0] == 0):
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    if len(r0) != 1:
        raise CyclotomicZeroDivision("element not invertible")
    inv = [c / r0[0] for c in s0]
    deg = len(m) - 1
    _, rem = _qpoly_divmod(inv, m) if len(inv) > deg else (None, inv)
    return rem + [Fraction(0)] * (deg - len(rem))


# public operations ---------------------------------------------------------

def cyclo_new(n: int, coeffs: Iterable[Union[int, Fraction]]) -> Cyclotomic:
    """The element sum_k coeffs[k] * zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("conductor must be positive")
    fr = [Fraction(c) for c in coeffs] or [Fraction(0)]
    common = 1
    for c in fr:
        common = common * c.denominator // math.gcd(common, c.denominator)
    return Cyclotomic(n, [int(c * common) for c in fr], common)


@lru_cache(maxsize=None)
def zeta(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k."""
    k %= n
    return Cyclotomic(n, [0] * k + [1])


def as_cyclotomic(x: Scalar) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, str):
        return parse_cyclotomic(x)
    return Cyclotomic.from_rational(x)


def root_order(a: Scalar) -> int | None:
    """Multiplicative order of a if it is a root of unity, else None.

    Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    """
    a = as_cyclotomic(a)
    if a.is_zero():
        return None
    bound = a.n if a.n % 2 == 0 else 2 * a.n
    for m in _divisors(bound):
        if a**m == 1:
            return m
    return None


# parsing -------------------------------------------------------------------

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse expressions like ``"1 - 2/3*zeta(12)^5"`` or ``"(zeta(7)-1)**2"``."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _eval_node(tree.body)


def _eval_node(node: ast.AST) -> Cyclotomic:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Cyclotomic.from_rational(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        left = _eval_node(node.left)
        if isinstance(node.op, ast.Pow):
            exp = _eval_node(node.right)
            if not exp.is_rational() or exp.to_fraction().denominator != 1:
                raise ValueError("exponent must be an integer")
            return left ** int(exp.to_fraction())
        right = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        return left / right
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "zeta"
        and len(node.args) in (1, 2)
        and all(isinstance(a, ast.Constant) and isinstance(a.value, int) for a in node.args)
    ):
        return zeta(*(a.value for a in node.args))  # type: ignore[attr-defined]
    raise ValueError(f"unsupported syntax in cyclotomic expression: {ast.dump(node)}")

"""Finite abelian groups, characters, Yetter-Drinfeld data of rank two and the
admissibility predicates that gate lifting parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from .exactnum import Cyclotomic, Scalar, as_cyclotomic, root_order, zeta

__all__ = [
    "AbelianGroup",
    "Character",
    "YDDatum",
    "LiftingSpec",
    "char_eval",
    "cartan_type",
    "admissible",
    "datum_search",
    "GroupMismatch",
]

Elem = tuple[int, ...]


class GroupMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d1 x ... x Z/dr with d1 | d2 | ... | dr, elements as exponent tuples."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", d)
        if any(x < 2 for x in d):
            raise ValueError(f"invariant factors must be >= 2, got {d}")
        for a, b in zip(d, d[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisibility chain, got {d}")

    @classmethod
    def from_relations(cls, n_generators: int, relations: Sequence[Sequence[int]]) -> tuple["AbelianGroup", list[Elem]]:
        """Normalize <e_1..e_m | relations> to invariant factors.

        Returns the group and the images of the generators e_i.
        """
        from sympy import Matrix
        from sympy.matrices.normalforms import smith_normal_decomp

        m = n_generators
        rows = [list(r) for r in relations if any(r)]
        if len(rows) < m:
            raise ValueError("relations do not define a finite group")
        A = Matrix(rows)
        S, _, V = smith_normal_decomp(A)
        diag = [abs(int(S[k, k])) for k in range(m)]
        if any(x == 0 for x in diag):
            raise ValueError("relations do not define a finite group")
        keep = [k for k in range(m) if diag[k] > 1]
        group = cls(tuple(diag[k] for k in keep))
        images = [tuple(int(V[i, k]) % diag[k] for k in keep) for i in range(m)]
        return group, images

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @cached_property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    @cached_property
    def exponent(self) -> int:
        return reduce(lcm, self.invariant_factors, 1)

    @property
    def identity(self) -> Elem:
        return (0,) * self.rank

    def element(self, e: Iterable[int]) -> Elem:
        e = tuple(e)
        if len(e) != self.rank:
            raise GroupMismatch(f"expected {self.rank} exponents, got {len(e)}")
        return tuple(x % d for x, d in zip(e, self.invariant_factors))

    def mul(self, g: Elem, h: Elem) -> Elem:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.invariant_factors))

    def inv(self, g: Elem) -> Elem:
        return tuple(-a % d for a, d in zip(g, self.invariant_factors))

    def pow(self, g: Elem, k: int) -> Elem:
        return tuple(a * k % d for a, d in zip(g, self.invariant_factors))

    def prod(self, *gs: Elem) -> Elem:
        return reduce(self.mul, gs, self.identity)

    def elements(self) -> Iterator[Elem]:
        return product(*(range(d) for d in self.invariant_factors))

    def elem_order(self, g: Elem) -> int:
        return reduce(lcm, (d // gcd(a, d) for a, d in zip(g, self.invariant_factors)), 1)

    def pairing(self, c: Elem, e: Elem) -> int:
        """Exponent of zeta_L in the value of character c at element e."""
        L = self.exponent
        return sum(ck * ek * (L // d) for ck, ek, d in zip(c, e, self.invariant_factors)) % L

    def __str__(self) -> str:
        return " x ".join(f"Z{d}" for d in self.invariant_factors) or "1"


@dataclass(frozen=True)
class Character:
    group: AbelianGroup
    exponents: Elem

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", self.group.element(self.exponents))

    @classmethod
    def trivial(cls, group: AbelianGroup) -> "Character":
        return cls(group, group.identity)

    def exponent_at(self, g: Elem) -> int:
        return self.group.pairing(self.exponents, g)

    def __call__(self, g: Elem) -> Cyclotomic:
        return char_eval(self, g)

    def __mul__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise GroupMismatch("characters on different groups")
        return Character(self.group, self.group.mul(self.exponents, other.exponents))

    def __pow__(self, k: int) -> "Character":
        return Character(self.group, self.group.pow(self.exponents, k))

    def inverse(self) -> "Character":
        return self ** -1

    def is_trivial(self) -> bool:
        return not any(self.exponents)


def char_eval(chi: Character, g: Sequence[int]) -> Cyclotomic:
    """chi(g) as an element of Q(zeta_L), L the group exponent."""
    g = chi.group.element(g)
    L = chi.group.exponent
    if L == 1:
        return Cyclotomic.from_rational(1)
    return zeta(L, chi.exponent_at(g))


@dataclass(frozen=True)
class YDDatum:
    """Rank-two diagonal braiding: x_i has degree g_i and weight chi_i."""

    group: AbelianGroup
    g1: Elem
    g2: Elem
    chi1: Character
    chi2: Character

    def __post_init__(self) -> None:
        object.__setattr__(self, "g1", self.group.element(self.g1))
        object.__setattr__(self, "g2", self.group.element(self.g2))
        if self.chi1.group != self.group or self.chi2.group != self.group:
            raise GroupMismatch("characters must live on the datum's group")

    @classmethod
    def from_exponents(cls, invariant_factors, g1, g2, chi1, chi2) -> "YDDatum":
        G = AbelianGroup(tuple(invariant_factors))
        return cls(G, tuple(g1), tuple(g2), Character(G, tuple(chi1)), Character(G, tuple(chi2)))

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.group.invariant_factors),
            "g1": list(self.g1),
            "g2": list(self.g2),
            "chi1": list(self.chi1.exponents),
            "chi2": list(self.chi2.exponents),
        }

    @classmethod
    def from_json(cls, data: dict) -> "YDDatum":
        return cls.from_exponents(data["invariant_factors"], data["g1"], data["g2"], data["chi1"], data["chi2"])

    @property
    def gs(self) -> tuple[Elem, Elem]:
        return (self.g1, self.g2)

    @property
    def chis(self) -> tuple[Character, Character]:
        return (self.chi1, self.chi2)

    @cached_property
    def braiding(self) -> tuple[tuple[Cyclotomic, Cyclotomic], tuple[Cyclotomic, Cyclotomic]]:
        """b_ij = chi_j(g_i)."""
        return tuple(tuple(chi(g) for chi in self.chis) for g in self.gs)  # type: ignore[return-value]

    def b(self, i: int, j: int) -> Cyclotomic:
        return self.braiding[i - 1][j - 1]

    @property
    def q(self) -> Cyclotomic:
        return self.b(2, 2)

    @cached_property
    def n(self) -> int | None:
        return root_order(self.q)

    def key(self) -> tuple:
        return (self.g1, self.g2, self.chi1.exponents, self.chi2.exponents)


def cartan_type(datum: YDDatum) -> str:
    """'B2', 'A2' or 'other' from the braiding matrix; q = b22 must have odd order >= 3."""
    b11, b12 = datum.braiding[0]
    b21, b22 = datum.braiding[1]
    n = datum.n
    if n is None or n < 3 or n % 2 == 0:
        return "other"
    one = 1
    if b12 * b21 * b11 == one and b21 * b12 * b22**2 == one and b11 == b22**2:
        return "B2"
    if b12 * b21 * b11 == one and b21 * b12 * b22 == one and b11 == b22:
        return "A2"
    return "other"


@dataclass(frozen=True)
class LiftingSpec:
    """A datum plus deformation parameters.

    For B2 the parameters are (mu1, mu2, lam, gamma); for A2 they are
    (mu1, mu2, lam, gamma1, gamma2), the gammas only for n = 3.
    """

    datum: YDDatum
    type: str
    mu1: int = 0
    mu2: int = 0
    lam: Cyclotomic = field(default_factory=lambda: Cyclotomic.from_rational(0))
    gamma: Cyclotomic = field(default_factory=lambda: Cyclotomic.from_rational(0))
    gamma1: Cyclotomic = field(default_factory=lambda: Cyclotomic.from_rational(0))
    gamma2: Cyclotomic = field(default_factory=lambda: Cyclotomic.from_rational(0))

    def __post_init__(self) -> None:
        if self.type not in ("A2", "B2"):
            raise ValueError(f"type must be A2 or B2, got {self.type!r}")
        for name in ("lam", "gamma", "gamma1", "gamma2"):
            object.__setattr__(self, name, as_cyclotomic(getattr(self, name)))

    @property
    def n(self) -> int:
        return self.datum.n  # type: ignore[return-value]

    @property
    def q(self) -> Cyclotomic:
        return self.datum.q

    def replace(self, **changes) -> "LiftingSpec":
        from dataclasses import replace

        return replace(self, **changes)

    def params(self) -> dict[str, Scalar]:
        if self.type == "B2":
            return {"mu1": self.mu1, "mu2": self.mu2, "lambda": self.lam, "gamma": self.gamma}
        return {"mu1": self.mu1, "mu2": self.mu2, "lambda": self.lam, "gamma1": self.gamma1, "gamma2": self.gamma2}

    def to_json(self) -> dict:
        out = {"datum": self.datum.to_json(), "type": self.type}
        for k, v in self.params().items():
            out[k] = v if isinstance(v, int) else str(v)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "LiftingSpec":
        """Scalars may be ints or strings such as "zeta(9)^2 - 1"."""
        from .exactnum import parse_cyclotomic

        def scalar(key: str) -> Cyclotomic:
            v = data.get(key, 0)
            return parse_cyclotomic(v) if isinstance(v, str) else as_cyclotomic(v)

        return cls(
            YDDatum.from_json(data["datum"]),
            data["type"],
            int(data.get("mu1", 0)),
            int(data.get("mu2", 0)),
            scalar("lambda"),
            scalar("gamma"),
            scalar("gamma1"),
            scalar("gamma2"),
        )


def admissible(spec: LiftingSpec) -> list[str]:
    """Violated parameter constraints; the empty list means admissible."""
    d = spec.datum
    G = d.group
    out: list[str] = []
    kind = cartan_type(d)
    if kind != spec.type:
        return [f"datum has Cartan type {kind}, declared {spec.type}"]
    n = d.n
    assert n is not None
    if spec.type == "B2" and n == 5:
        out.append("B2 requires n != 5")

    def forced_zero(g: Elem, chi: Character) -> bool:
        return G.pow(g, n) == G.identity or not (chi**n).is_trivial()

    g1, g2, chi1, chi2 = d.g1, d.g2, d.chi1, d.chi2
    for i, (mu, g, chi) in enumerate(((spec.mu1, g1, chi1), (spec.mu2, g2, chi2)), start=1):
        if mu not in (0, 1):
            out.append(f"mu{i} must be 0 or 1")
        elif mu and forced_zero(g, chi):
            out.append(f"mu{i} must vanish: g{i}^n = 1 or chi{i}^n != eps")
    if not spec.lam.is_zero() and forced_zero(G.mul(g1, g2), chi1 * chi2):
        out.append("lambda must vanish: (g1 g2)^n = 1 or (chi1 chi2)^n != eps")
    if spec.type == "B2":
        if not spec.gamma.is_zero() and forced_zero(G.prod(g1, g2, g2), chi1 * chi2 * chi2):
            out.append("gamma must vanish: (g1 g2^2)^n = 1 or (chi1 chi2^2)^n != eps")
        if not (spec.gamma1.is_zero() and spec.gamma2.is_zero()):
            out.append("gamma1, gamma2 are A2 parameters")
    else:
        if not spec.gamma.is_zero():
            out.append("gamma is a B2 parameter")
        pairs = ((spec.gamma1, g1, g2, chi1, chi2, 1), (spec.gamma2, g2, g1, chi2, chi1, 2))
        for gam, gi, gj, chii, chij, i in pairs:
            if gam.is_zero():
                continue
            if n != 3:
                out.append(f"gamma{i} only exists for n = 3")
            elif G.prod(gi, gi, gj) == G.identity or not (chii * chii * chij).is_trivial():
                out.append(f"gamma{i} must vanish: g{i}^2 g{3 - i} = 1 or chi{i}^2 chi{3 - i} != eps")
    return out


def datum_search(group: AbelianGroup, kind: str, n: int) -> list[YDDatum]:
    """All (g1, g2, chi1, chi2) on the group of Cartan type kind with q of order n.

    Works on exponents of zeta_L: with a = log b22, B2 needs b11 = 2a and
    b12 + b21 = -2a, A2 needs b11 = a and b12 + b21 = -a (mod L).
    """
    if kind not in ("A2", "B2"):
        raise ValueError(f"unknown type {kind!r}")
    if n < 3 or n % 2 == 0:
        return []
    L = group.exponent
    if L % n:
        return []
    elements = list(group.elements())
    pair = group.pairing
    found: list[tuple] = []
    for g1 in elements:
        for g2 in elements:
            table: dict[tuple[int, int], list[Elem]] = {}
            values = []
            for c in elements:
                v = (pair(c, g1), pair(c, g2))
                values.append(v)
                table.setdefault(v, []).append(c)
            for c2, (b12, b22) in zip(elements, values):
                if L // gcd(b22, L) != n:
                    continue
                b11 = (2 * b22 if kind == "B2" else b22) % L
                b21 = (-b11 - b12) % L
                for c1 in table.get((b11, b21), ()):
                    found.append((g1, g2, c1, c2))
    found = sorted(set(found))
    return [YDDatum(group, g1, g2, Character(group, c1), Character(group, c2)) for g1, g2, c1, c2 in found]

"""Coproduct, counit and antipode on bosonized presentations, Hopf-ideal
checks by reduction in the quotient, and conjugation by algebra maps on
commutative Hopf subalgebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence, Union

from .abelian import Elem, LiftingSpec, YDDatum, cartan_type
from .builders import (
    IdealGenerator,
    build_biproduct,
    build_lifting_quotient,
    ideal_generators,
    v_coefficient,
)
from .exactnum import Cyclotomic, Scalar, as_cyclotomic
from .rewrite import Element, Mono, Presentation, RawTerm, element_to_raw, quotient_by, term

__all__ = [
    "TensorElement",
    "evaluate",
    "delta",
    "delta2",
    "counit",
    "antipode",
    "is_skew_primitive",
    "AlgebraMap",
    "SubalgebraMap",
    "conjugate_by",
    "left_action",
    "convolve",
    "hopf_ideal_check",
    "adjudicate_v_coefficient",
    "NotInSubalgebra",
]

ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)
Expr = Union[Element, Sequence[RawTerm]]


class NotInSubalgebra(ValueError):
    pass


class TensorElement:
    """Finite sum of pure tensors of normal monomials over fixed leg presentations."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs: Sequence[Presentation], terms: Mapping[tuple[Mono, ...], Cyclotomic]):
        self.legs = tuple(legs)
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @classmethod
    def pure(cls, *factors: Element) -> "TensorElement":
        legs = tuple(f.pres for f in factors)
        out: dict = {}
        for combo in product(*(f.terms.items() for f in factors)):
            c = ONE
            for _, v in combo:
                c = c * v
            key = tuple(m for m, _ in combo)
            out[key] = out[key] + c if key in out else c
        return cls(legs, out)

    def _same(self, other: "TensorElement") -> None:
        if other.legs != self.legs:
            raise ValueError("tensor elements over different legs")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TensorElement(self.legs, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.legs, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other) -> "TensorElement":
        if not isinstance(other, TensorElement):
            c = as_cyclotomic(other)
            return TensorElement(self.legs, {m: v * c for m, v in self.terms.items()})
        self._same(other)
        out: dict = {}
        legs = self.legs
        for ms1, c1 in self.terms.items():
            for ms2, c2 in other.terms.items():
                parts = [legs[i].mono_mul(ms1[i], ms2[i]) for i in range(len(legs))]
                c12 = c1 * c2
                for combo in product(*(p.items() for p in parts)):
                    c = c12
                    for _, v in combo:
                        c = c * v
                    key = tuple(m for m, _ in combo)
                    out[key] = out[key] + c if key in out else c
        return TensorElement(legs, out)

    def __rmul__(self, other) -> "TensorElement":
        return self * other

    def __pow__(self, k: int) -> "TensorElement":
        out = self.one_like()
        for _ in range(k):
            out = out * self
        return out

    def one_like(self) -> "TensorElement":
        return TensorElement.pure(*(P.one() for P in self.legs))

    def zero_like(self) -> "TensorElement":
        return TensorElement(self.legs, {})

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and other.legs == self.legs and other.terms == self.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leg_elements(self) -> list[tuple[Cyclotomic, tuple[Element, ...]]]:
        return [
            (c, tuple(Element(P, {m: ONE}) for P, m in zip(self.legs, ms)))
            for ms, c in self.terms.items()
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for ms, c in sorted(self.terms.items(), key=lambda t: str(t[0])):
            legs = " (x) ".join(P.render_mono(*m) for P, m in zip(self.legs, ms))
            parts.append(legs if c == 1 else f"({c}) {legs}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElement({self})"


def _as_raw(expr: Expr) -> list[RawTerm]:
    if isinstance(expr, Element):
        return element_to_raw(expr)
    return list(expr)


def evaluate(expr: Expr, letter_image: Callable[[int], object], group_image: Callable[[Elem], object], one, reverse: bool = False):
    """Substitute images for letters and group elements in a formal expression.

    reverse=True evaluates an anti-homomorphism (used for the antipode).
    """
    total = None
    for c, g, word in _as_raw(expr):
        factors = [] if g is None else [group_image(tuple(g))]
        factors += [letter_image(j) for j in word]
        if reverse:
            factors.reverse()
        v = one
        for f in factors:
            v = v * f
        v = v * c
        total = v if total is None else total + v
    return one * 0 if total is None else total


class _Images:
    """Images of letters under a multiplicative map; derived letters go through their definitions."""

    def __init__(self, pres: Presentation, primitive: Callable[[int, Elem], object], group_image, one, reverse=False):
        self.pres, self.primitive, self.group_image, self.one, self.reverse = pres, primitive, group_image, one, reverse
        self.cache: dict[int, object] = {}

    def __call__(self, j: int):
        hit = self.cache.get(j)
        if hit is None:
            P = self.pres
            if j in P.coalgebra:
                hit = self.primitive(j, P.coalgebra[j])
            elif j in P.definitions:
                hit = evaluate(P.definitions[j], self, self.group_image, self.one, self.reverse)
            else:
                raise ValueError(f"generator {P.names[j]} has no coproduct data")
            self.cache[j] = hit
        return hit


def _leg_map(source: Presentation, target: Presentation) -> Callable[[int], int]:
    if source.names == target.names:
        return lambda j: j
    idx = {n: i for i, n in enumerate(target.names)}
    return lambda j: idx[source.names[j]]


def delta_images(source: Presentation, legs: Sequence[Presentation]) -> tuple[_Images, Callable]:
    """Images of the iterated coproduct into the given legs (len(legs) >= 2)."""
    r = len(legs)
    maps = [_leg_map(source, L) for L in legs]
    one = TensorElement.pure(*(L.one() for L in legs))

    def group_image(g):
        return TensorElement.pure(*(L.grouplike(g) for L in legs))

    def primitive(j, g):
        # x -> sum_k  g^(x k) (x) x (x) 1^(x rest)
        total = None
        for k in range(r):
            factors = [legs[i].grouplike(g) for i in range(k)]
            factors.append(legs[k].gen(maps[k](j)))
            factors += [legs[i].one() for i in range(k + 1, r)]
            t = TensorElement.pure(*factors)
            total = t if total is None else total + t
        return total

    return _Images(source, primitive, group_image, one), group_image


def delta(pres: Presentation, a: Expr, target: Presentation | None = None) -> TensorElement:
    T = target or pres
    images, gimg = delta_images(pres, (T, T))
    return evaluate(a, images, gimg, images.one)


def delta2(pres: Presentation, a: Expr, target: Presentation | None = None) -> TensorElement:
    T = target or pres
    images, gimg = delta_images(pres, (T, T, T))
    return evaluate(a, images, gimg, images.one)


def counit(pres: Presentation, a: Expr) -> Cyclotomic:
    images = _Images(pres, lambda j, g: ZERO, lambda g: ONE, ONE)
    return evaluate(a, images, lambda g: ONE, ONE)


def antipode(pres: Presentation, a: Expr, target: Presentation | None = None) -> Element:
    T = target or pres
    m = _leg_map(pres, T)
    G = T.group

    def gimg(g):
        return T.grouplike(G.inv(g))

    images = _Images(pres, lambda j, g: -(gimg(g) * T.gen(m(j))), gimg, T.one(), reverse=True)
    return evaluate(a, images, gimg, T.one(), reverse=True)


def _as_element(pres: Presentation, a: Expr) -> Element:
    return a if isinstance(a, Element) else pres.raw(a)


def is_skew_primitive(pres: Presentation, a: Expr) -> tuple[Elem, Elem] | None:
    """(g, h) with Delta(a) = g (x) a + a (x) h, or None."""
    a = _as_element(pres, a)
    if a.is_zero():
        return None
    D = delta(pres, a)
    zero_e = (0,) * pres.k
    lefts = {ms[0][0] for ms in D.terms if ms[0][1] == zero_e}
    rights = {ms[1][0] for ms in D.terms if ms[1][1] == zero_e}
    for g in sorted(lefts):
        for h in sorted(rights):
            expect = TensorElement.pure(pres.grouplike(g), a) + TensorElement.pure(a, pres.grouplike(h))
            if expect == D:
                return g, h
    return None


# ---- algebra maps -------------------------------------------------------------


class AlgebraMap:
    """Scalar values on the generators of a presentation, grouplikes sent to group_value.

    Construction verifies that every swap rule, power rule and group passage
    is respected, so the map is a well-defined algebra map to k.
    """

    def __init__(self, pres: Presentation, values: Mapping[str, Scalar], group_value: Callable[[Elem], Cyclotomic] | None = None):
        self.pres = pres
        self.values = [as_cyclotomic(values.get(n, 0)) for n in pres.names]
        self.group_value = group_value or (lambda g: ONE)
        problems = self._violations()
        if problems:
            raise ValueError("not an algebra map: " + "; ".join(problems))

    def _word_value(self, g, word) -> Cyclotomic:
        v = ONE if g is None else self.group_value(tuple(g))
        for j in word:
            v = v * self.values[j]
        return v

    def _raw_value(self, raw) -> Cyclotomic:
        return sum((c * self._word_value(g, w) for c, g, w in raw), ZERO)

    def _violations(self) -> list[str]:
        P = self.pres
        out = []
        for (hi, lo), rhs in P.swap_rules.items():
            if self.values[hi] * self.values[lo] != self._raw_value(rhs):
                out.append(f"swap rule {P.word_str((hi, lo))}")
        for j, (N, rhs) in P.power_rules.items():
            if self.values[j] ** N != self._raw_value(rhs):
                out.append(f"power rule {P.names[j]}^{N}")
        gens = [tuple(1 if i == k else 0 for i in range(P.group.rank)) for k in range(P.group.rank)]
        for j in range(P.k):
            for h in gens:
                if not self.values[j].is_zero() and P.characters[j](h) != 1:
                    out.append(f"group passage {P.names[j]} g[{','.join(map(str, h))}]")
        return out

    def __call__(self, a: Expr) -> Cyclotomic:
        return self._raw_value(_as_raw(a))


class SubalgebraMap:
    """An algebra map K -> k on the subalgebra K generated by the group and the
    given elements, with psi(g) = 1 on grouplikes.

    K must be commutative and commute with the group; values on K are computed
    by subduction against the leading monomials of the generators.
    """

    def __init__(self, pres: Presentation, generators: Sequence[tuple[str, Element]], values: Sequence[Scalar], check: bool = True):
        self.pres = pres
        self.names = [n for n, _ in generators]
        self.gens = [e for _, e in generators]
        self.values = [as_cyclotomic(v) for v in values]
        if len(self.values) != len(self.gens):
            raise ValueError("one value per generator")
        self.leads = [self._lead(e) for e in self.gens]
        for (g, _), n in zip(self.leads, self.names):
            if g != pres.identity:
                raise ValueError(f"leading term of {n} carries a group element")
        self._power_cache: dict = {}
        self._mono_cache: dict = {}
        if check:
            problems = self.commutation_failures()
            if problems:
                raise ValueError("subalgebra is not commutative over the group: " + "; ".join(problems))

    def _lead(self, a: Element) -> Mono:
        P = self.pres
        if a.is_zero():
            raise ValueError("zero generator")
        return max(a.terms, key=lambda m: (P.order_key(P.letters(m[1])), m[0]))

    def commutation_failures(self) -> list[str]:
        P = self.pres
        out = []
        for i in range(len(self.gens)):
            for j in range(i + 1, len(self.gens)):
                if self.gens[i] * self.gens[j] != self.gens[j] * self.gens[i]:
                    out.append(f"{self.names[i]} {self.names[j]}")
        gens = [tuple(1 if i == k else 0 for i in range(P.group.rank)) for k in range(P.group.rank)]
        for h in gens:
            H = P.grouplike(h)
            for n, k in zip(self.names, self.gens):
                if H * k != k * H:
                    out.append(f"{n} g[{','.join(map(str, h))}]")
        return out

    def _monomial(self, powers: tuple[int, ...]) -> Element:
        hit = self._power_cache.get(powers)
        if hit is None:
            hit = self.pres.one()
            for k, a in zip(self.gens, powers):
                if a:
                    hit = hit * k**a
            self._power_cache[powers] = hit
        return hit

    def _decompose(self, e: tuple[int, ...]) -> tuple[int, ...] | None:
        leads = [l[1] for l in self.leads]
        m = len(leads)

        def rec(i: int, rest: tuple[int, ...]) -> tuple[int, ...] | None:
            if i == m:
                return () if not any(rest) else None
            li = leads[i]
            bound = min((r // x for r, x in zip(rest, li) if x), default=0)
            for a in range(bound, -1, -1):
                nxt = tuple(r - a * x for r, x in zip(rest, li))
                if any(v < 0 for v in nxt):
                    continue
                tail = rec(i + 1, nxt)
                if tail is not None:
                    return (a,) + tail
            return None

        return rec(0, tuple(e))

    def __call__(self, a: Expr) -> Cyclotomic:
        a = _as_element(self.pres, a)
        P = self.pres
        total = ZERO
        rest = a
        guard = 0
        while rest.terms:
            guard += 1
            if guard > 100000:
                raise RuntimeError("subduction did not terminate")
            g, e = max(rest.terms, key=lambda m: (P.order_key(P.letters(m[1])), m[0]))
            c = rest.terms[(g, e)]
            powers = self._decompose(e)
            if powers is None:
                raise NotInSubalgebra(f"{P.render_mono(g, e)} is not in the subalgebra")
            Q = P.grouplike(g) * self._monomial(powers)
            cq = Q.coefficient(g, e)
            if cq.is_zero():
                raise NotInSubalgebra(f"cannot subduce {P.render_mono(g, e)}")
            r = c / cq
            val = r
            for v, p in zip(self.values, powers):
                if p:
                    val = val * v**p
            total = total + val
            rest = rest - r * Q
        return total

    def on_monomial(self, m: Mono) -> Cyclotomic:
        hit = self._mono_cache.get(m)
        if hit is None:
            hit = self(Element(self.pres, {m: ONE}))
            self._mono_cache[m] = hit
        return hit

    def inverse_value(self, a: Expr) -> Cyclotomic:
        """psi^-1(a) = psi(S(a))."""
        return self(antipode(self.pres, a))


def left_action(psi: SubalgebraMap, a: Expr) -> Element:
    """psi -> a = sum a_(1) psi(a_(2))."""
    P = psi.pres
    D = delta(P, a)
    out = P.zero()
    for (m1, m2), c in D.terms.items():
        v = psi.on_monomial(m2)
        if not v.is_zero():
            out = out + Element(P, {m1: c * v})
    return out


def conjugate_by(psi: SubalgebraMap, a: Expr) -> Element:
    """(psi (x) id (x) psi^-1) Delta^2(a)."""
    P = psi.pres
    D = delta2(P, a)
    inv_cache: dict = {}
    out: dict = {}
    for (m1, m2, m3), c in D.terms.items():
        v1 = psi.on_monomial(m1)
        if v1.is_zero():
            continue
        v3 = inv_cache.get(m3)
        if v3 is None:
            v3 = psi.inverse_value(Element(P, {m3: ONE}))
            inv_cache[m3] = v3
        w = c * v1 * v3
        if not w.is_zero():
            out[m2] = out[m2] + w if m2 in out else w
    return Element(P, out)


def convolve(psi: SubalgebraMap, phi: SubalgebraMap) -> SubalgebraMap:
    """psi * phi on the same generators: a -> sum psi(a_(1)) phi(a_(2))."""
    if psi.pres is not phi.pres:
        raise ValueError("maps on different presentations")
    P = psi.pres
    values = []
    for k in psi.gens:
        D = delta(P, k)
        values.append(sum((c * psi.on_monomial(m1) * phi.on_monomial(m2) for (m1, m2), c in D.terms.items()), ZERO))
    return SubalgebraMap(P, list(zip(psi.names, psi.gens)), values, check=False)


# ---- Hopf ideals ----------------------------------------------------------------


@dataclass
class GeneratorCheck:
    name: str
    counit: bool
    coproduct: bool
    antipode: bool
    in_quotient: bool
    skew_primitive_type: list | None = None

    @property
    def ok(self) -> bool:
        return self.counit and self.coproduct and self.antipode and self.in_quotient

    def to_json(self) -> dict:
        return {
            "generator": self.name,
            "counit": self.counit,
            "coproduct": self.coproduct,
            "antipode": self.antipode,
            "vanishes_in_quotient": self.in_quotient,
            "ok": self.ok,
        }


def check_generators(A: Presentation, gens: Iterable[IdealGenerator]) -> list[GeneratorCheck]:
    """For each j: eps(j) = 0, Delta(j) = 0 in A (x) A, S(j) = 0 in A, j = 0 in A."""
    out = []
    for gen in gens:
        eps = counit(A, gen.raw)
        D = delta(A, gen.raw)
        S = antipode(A, gen.raw)
        out.append(GeneratorCheck(gen.name, eps.is_zero(), D.is_zero(), S.is_zero(), A.raw(gen.raw).is_zero()))
    return out


def hopf_ideal_check(spec: LiftingSpec, which: str | None = None) -> dict:
    """Check every generator of J against the quotient U/J (kernel method)."""
    adjudication = adjudicate_v_coefficient(spec.datum) if spec.type == "B2" else None
    if which is None:
        which = (adjudication or {}).get("adjudicated") or "q2"
    A = build_lifting_quotient(spec, which)
    checks = check_generators(A, ideal_generators(spec, which))
    return {
        "type": spec.type,
        "v_coefficient": which,
        "adjudication": adjudication,
        "generators": [c.to_json() for c in checks],
        "ok": all(c.ok for c in checks),
    }


_ADJ_CACHE: dict = {}


def adjudicate_v_coefficient(datum: YDDatum) -> dict:
    """Which coefficient c makes z^n + c x1^n ((g1 g2)^n, 1)-primitive in U/(x2^n - (g2^n - 1)).

    Needs mu2 = 1 to be admissible; otherwise the coefficient never enters.
    """
    key = datum.key() + (datum.group.invariant_factors,)
    if key in _ADJ_CACHE:
        return _ADJ_CACHE[key]
    n, q = datum.n, datum.q
    G = datum.group
    g2n = G.pow(datum.g2, n)
    if cartan_type(datum) != "B2" or g2n == G.identity or not (datum.chi2**n).is_trivial():
        res = {"applicable": False, "results": {}, "adjudicated": None}
        _ADJ_CACHE[key] = res
        return res
    U = build_biproduct(datum, "B2")
    x2, u, z, x1 = range(4)
    M = quotient_by(U, [(x2, n, [term(1, (), g2n), term(-1)])], label="b2-M(1)")
    g12n = G.pow(G.mul(datum.g1, datum.g2), n)
    results = {}
    for which in ("q2", "q1"):
        ups = M.word_element((z,) * n) + v_coefficient(q, n, which) * M.word_element((x1,) * n)
        D = delta(M, ups)
        expect = TensorElement.pure(M.grouplike(g12n), ups) + TensorElement.pure(ups, M.one())
        results[which] = D == expect
    good = [w for w, ok in results.items() if ok]
    res = {"applicable": True, "results": results, "adjudicated": good[0] if len(good) == 1 else None}
    _ADJ_CACHE[key] = res
    return res

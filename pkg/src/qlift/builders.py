"""Ready-made presentations: the q-binomial test algebras, U+ and U = U+ # kG
for types B2 and A2, their lifting quotients and the ambient algebras used by
the conjugation witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import AbelianGroup, Character, Elem, LiftingSpec, YDDatum, admissible, cartan_type
from .exactnum import Cyclotomic, Scalar, as_cyclotomic
from .rewrite import Presentation, RawTerm, confluence_check, term

__all__ = [
    "build_trinomial_algebra",
    "trinomial_expansion",
    "build_s_variant_algebra",
    "build_skew_lemma_algebra",
    "build_b2_uplus",
    "build_biproduct",
    "build_lifting_quotient",
    "build_corrupted_trinomial",
    "ideal_generators",
    "IdealGenerator",
    "v_coefficient",
    "InadmissibleSpec",
    "B2_ORDER",
    "A2_ORDER",
]

B2_ORDER = ("x2", "u", "z", "x1")
A2_ORDER = ("x1", "z", "x2")
_TRIVIAL = AbelianGroup(())


class InadmissibleSpec(ValueError):
    pass


def _trivial_chars(k: int) -> list[Character]:
    return [Character.trivial(_TRIVIAL)] * k


def build_trinomial_algebra(q: Scalar, b: Scalar = 0, lam: Scalar = 0) -> Presentation:
    """k<t, z, x> with xz = qzx, zt = qtz, xt = qtx + lam z^2; order t < z < x.

    b does not enter the relations; it is kept for the expansion of (x + bz + t)^n.
    """
    q, lam = as_cyclotomic(q), as_cyclotomic(lam)
    t, z, x = 0, 1, 2
    return Presentation(
        ("t", "z", "x"),
        _TRIVIAL,
        _trivial_chars(3),
        {
            (x, z): [term(q, (z, x))],
            (z, t): [term(q, (t, z))],
            (x, t): [term(q, (t, x)), term(lam, (z, z))],
        },
        label="trinomial",
        meta={"q": q, "b": as_cyclotomic(b), "lambda": lam},
    )


def trinomial_expansion(q: Scalar, b: Scalar, lam: Scalar, n: int) -> dict[tuple[int, int], Cyclotomic]:
    """(x + bz + t)^n in the trinomial algebra, keyed like gqb_expand:
    (i, j) is the coefficient of t^j z^(i-j) x^(n-i)."""
    A = build_trinomial_algebra(q, b, lam)
    base = A.gen("x") + as_cyclotomic(b) * A.gen("z") + A.gen("t")
    power = base**n
    out = {}
    for (_, (et, ez, ex)), c in power.terms.items():
        out[(et + ez, et)] = c
    return out


def build_corrupted_trinomial(q: Scalar, lam: Scalar = 1) -> Presentation:
    """The trinomial rules with zt = q^2 tz; the overlap x z t no longer resolves."""
    q, lam = as_cyclotomic(q), as_cyclotomic(lam)
    t, z, x = 0, 1, 2
    return Presentation(
        ("t", "z", "x"),
        _TRIVIAL,
        _trivial_chars(3),
        {
            (x, z): [term(q, (z, x))],
            (z, t): [term(q * q, (t, z))],
            (x, t): [term(q, (t, x)), term(lam, (z, z))],
        },
        label="corrupted-trinomial",
    )


def build_s_variant_algebra(q: Scalar, lam: Scalar = 1) -> Presentation:
    """k<t, s, x> with xs = q^2 sx, st = q^2 ts, xt = qtx + lam s."""
    q, lam = as_cyclotomic(q), as_cyclotomic(lam)
    t, s, x = 0, 1, 2
    return Presentation(
        ("t", "s", "x"),
        _TRIVIAL,
        _trivial_chars(3),
        {
            (x, s): [term(q * q, (s, x))],
            (s, t): [term(q * q, (t, s))],
            (x, t): [term(q, (t, x)), term(lam, (s,))],
        },
        weights=(1, 2, 1),
        label="s-variant",
    )


def build_skew_lemma_algebra(alpha: Scalar, beta: Scalar) -> Presentation:
    """k<X, Z, Y> with YX = alpha XY + Z, ZX = beta XZ and YZ = beta ZY."""
    a, b = as_cyclotomic(alpha), as_cyclotomic(beta)
    X, Z, Y = 0, 1, 2
    return Presentation(
        ("X", "Z", "Y"),
        _TRIVIAL,
        _trivial_chars(3),
        {
            (Y, X): [term(a, (X, Y)), term(1, (Z,))],
            (Z, X): [term(b, (X, Z))],
            (Y, Z): [term(b, (Z, Y))],
        },
        weights=(1, 2, 1),
        label="skew-lemma",
    )


def _b2_rules(d: YDDatum) -> dict:
    b11, b12, b21, b22 = d.b(1, 1), d.b(1, 2), d.b(2, 1), d.b(2, 2)
    x2, u, z, x1 = range(4)
    return {
        (x1, x2): [term(b21**-1, (x2, x1)), term(-(b21**-1), (z,))],
        (z, x2): [term((b21 * b22) ** -1, (x2, z)), term(-((b21 * b22) ** -1), (u,))],
        (x1, z): [term(b12, (z, x1))],
        (u, x2): [term((b21 * b22**2) ** -1, (x2, u))],
        (z, u): [term((b11 * b21) ** -1, (u, z))],
        (x1, u): [term(b21**-1 * b12, (u, x1)), term(b21**-1 * (b22**-1 - 1), (z, z))],
    }


def _b2_definitions(d: YDDatum) -> dict:
    b21, b22 = d.b(2, 1), d.b(2, 2)
    x2, u, z, x1 = range(4)
    return {
        z: [term(1, (x2, x1)), term(-b21, (x1, x2))],
        u: [term(1, (x2, z)), term(-b21 * b22, (z, x2))],
    }


def _a2_rules(d: YDDatum, gamma1: Scalar = 0, gamma2: Scalar = 0) -> dict:
    G = d.group
    b12, b21 = d.b(1, 2), d.b(2, 1)
    g1, g2 = d.g1, d.g2
    gamma1, gamma2 = as_cyclotomic(gamma1), as_cyclotomic(gamma2)
    x1, z, x2 = range(3)
    zx1 = [term(b21, (x1, z))]
    if not gamma1.is_zero():
        zx1 += [term(gamma1, (), G.prod(g1, g1, g2)), term(-gamma1)]
    x2z = [term(b21, (z, x2))]
    if not gamma2.is_zero():
        x2z += [term(-b21 * gamma2, (), G.prod(g1, g2, g2)), term(b21 * gamma2)]
    return {
        (x2, x1): [term(b12**-1, (x1, x2)), term(-(b12**-1), (z,))],
        (z, x1): zx1,
        (x2, z): x2z,
    }


def build_b2_uplus(datum: YDDatum) -> Presentation:
    """U+ alone: the six relations with z, u as generators, no group part."""
    return Presentation(
        B2_ORDER,
        _TRIVIAL,
        _trivial_chars(4),
        _b2_rules(datum),
        weights=(1, 3, 2, 1),
        definitions=_b2_definitions(datum),
        label="b2-uplus",
        datum=datum,
    )


def build_biproduct(datum: YDDatum, kind: str | None = None, gamma1: Scalar = 0, gamma2: Scalar = 0) -> Presentation:
    """U = U+ # kG for B2, or its A2 analogue (with the n = 3 gamma deformations)."""
    kind = kind or cartan_type(datum)
    G, g1, g2 = datum.group, datum.g1, datum.g2
    c1, c2 = datum.chi1, datum.chi2
    aliases = {"g1": g1, "g2": g2}
    if kind == "B2":
        return Presentation(
            B2_ORDER,
            G,
            [c2, c1 * c2 * c2, c1 * c2, c1],
            _b2_rules(datum),
            weights=(1, 3, 2, 1),
            definitions=_b2_definitions(datum),
            coalgebra={0: g2, 3: g1},
            group_aliases=aliases,
            datum=datum,
            label="b2-biproduct",
        )
    if kind == "A2":
        b12 = datum.b(1, 2)
        return Presentation(
            A2_ORDER,
            G,
            [c1, c1 * c2, c2],
            _a2_rules(datum, gamma1, gamma2),
            weights=(1, 2, 1),
            definitions={1: [term(1, (0, 2)), term(-b12, (2, 0))]},
            coalgebra={0: g1, 2: g2},
            group_aliases=aliases,
            datum=datum,
            label="a2-biproduct",
        )
    raise ValueError(f"datum is of type {kind}, expected A2 or B2")


def v_coefficient(q: Cyclotomic, n: int, which: str) -> Cyclotomic:
    """Coefficient of mu2 x1^n in v: 'q2' gives (q^2-1)^n, 'q1' gives (q-1)^n."""
    if which == "q2":
        return (q * q - 1) ** n
    if which == "q1":
        return (q - 1) ** n
    raise ValueError(f"unknown v-coefficient {which!r}")


@dataclass(frozen=True)
class IdealGenerator:
    """A named ideal generator as a formal expression, with its expected grouplike."""

    name: str
    raw: tuple[RawTerm, ...]
    grouplike: Elem


def ideal_generators(spec: LiftingSpec, which: str = "q2") -> list[IdealGenerator]:
    """Generators of J as formal expressions in the biproduct's letters."""
    d, n, q = spec.datum, spec.n, spec.q
    G, g1, g2 = d.group, d.g1, d.g2
    P = G.pow
    mu1, mu2, lam = spec.mu1, spec.mu2, spec.lam

    def deform(coef: Scalar, g: Elem) -> list[RawTerm]:
        coef = as_cyclotomic(coef)
        if coef.is_zero():
            return []
        return [term(-coef, (), g), term(coef)]

    g1n, g2n = P(g1, n), P(g2, n)
    g12n = G.mul(g1n, g2n)
    if spec.type == "B2":
        x2, u, z, x1 = range(4)
        c = v_coefficient(q, n, which)
        g122n = P(G.prod(g1, g2, g2), n)
        return [
            IdealGenerator("y1", (term(1, (x1,) * n), *deform(mu1, g1n)), g1n),
            IdealGenerator("y2", (term(1, (x2,) * n), *deform(mu2, g2n)), g2n),
            IdealGenerator("v", (term(1, (z,) * n), term(mu2 * c, (x1,) * n), *deform(lam, g12n)), g12n),
            IdealGenerator(
                "w",
                (
                    term(1, (u,) * n),
                    term(2 * (q - 1) ** n * mu2, (z,) * n),
                    term((q * q - 1) ** n * (q - 1) ** n * mu2 * mu2, (x1,) * n),
                    *deform(spec.gamma, g122n),
                ),
                g122n,
            ),
        ]
    x1, z, x2 = range(3)
    b21 = d.b(2, 1)
    out = [
        IdealGenerator("y1", (term(1, (x1,) * n), *deform(mu1, g1n)), g1n),
        IdealGenerator("y2", (term(1, (x2,) * n), *deform(mu2, g2n)), g2n),
    ]
    if n == 3:
        g112, g122 = G.prod(g1, g1, g2), G.prod(g1, g2, g2)
        out += [
            IdealGenerator("r1", (term(1, (z, x1)), term(-b21, (x1, z)), *deform(spec.gamma1, g112)), g112),
            IdealGenerator("r2", (term(1, (z, x2)), term(-(b21**-1), (x2, z)), *deform(spec.gamma2, g122)), g122),
        ]
    tail = []
    if not spec.gamma1.is_zero():
        tail = [term((1 - q) * spec.gamma1, (z, x2)), term(-(1 - q) * spec.gamma1 * b21**-1, (x2, z))]
    out.append(
        IdealGenerator(
            "v",
            (term(1, (z,) * n), term(mu1 * (q - 1) ** n, (x2,) * n), *tail, *deform(lam, g12n)),
            g12n,
        )
    )
    return out


def _check_spec(spec: LiftingSpec) -> None:
    problems = admissible(spec)
    if problems:
        raise InadmissibleSpec("; ".join(problems))


def build_lifting_quotient(spec: LiftingSpec, which: str = "q2", check: bool = True) -> Presentation:
    """U/J with power rules obtained by solving each generator of J for its leading power."""
    _check_spec(spec)
    d, n = spec.datum, spec.n
    U = build_biproduct(d, spec.type, spec.gamma1, spec.gamma2)
    rules = {}
    for gen in ideal_generators(spec, which):
        if gen.name in ("r1", "r2"):
            continue  # already swap rules of U
        lead, *rest = gen.raw
        j = lead[2][0]
        rules[j] = (n, [(-c, g, w) for c, g, w in rest])
    P = Presentation(
        U.names,
        U.group,
        U.characters,
        U.swap_rules,
        rules,
        weights=U.weights,
        definitions=U.definitions,
        coalgebra=U.coalgebra,
        group_aliases=U.group_aliases,
        datum=d,
        label=f"{spec.type}-lifting",
        meta={"spec": spec, "v_coefficient": which},
    )
    if check:
        report = confluence_check(P)
        if not report.confluent:
            raise ValueError(f"lifting presentation is not confluent: {report.failures[:3]}")
    return P

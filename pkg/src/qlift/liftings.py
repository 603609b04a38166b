"""Lifted Hopf algebras of types B2 and A2,
relation suites, dimensions, conjugation witnesses between liftings and the
isomorphism probe for the cyclic group of order 49."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .abelian import LiftingSpec, YDDatum, admissible, cartan_type
from .builders import (
    A2_ORDER,
    InadmissibleSpec,
    build_biproduct,
    build_lifting_quotient,
    ideal_generators,
)
from .exactnum import Cyclotomic, Scalar, as_cyclotomic, zeta
from .hopf import (
    NotInSubalgebra,
    SubalgebraMap,
    adjudicate_v_coefficient,
    antipode,
    check_generators,
    conjugate_by,
    delta,
    evaluate,
    is_skew_primitive,
    left_action,
)
from .rewrite import (
    Element,
    Presentation,
    confluence_check,
    enumerate_basis,
    quotient_by,
    term,
    transfer,
)

__all__ = [
    "VerificationReport",
    "WitnessStep",
    "QuasiIsoWitness",
    "HopfIdealFailure",
    "build_lifting",
    "verify_relations",
    "dimension",
    "expected_dimension",
    "quasi_iso_witness",
    "a2_isomorphism_probe",
    "v_coefficient_for",
]

ZERO = Cyclotomic.from_rational(0)


class HopfIdealFailure(RuntimeError):
    pass


def v_coefficient_for(datum: YDDatum) -> str:
    """The adjudicated coefficient when it matters, (q^2-1)^n otherwise."""
    adj = adjudicate_v_coefficient(datum)
    return adj.get("adjudicated") or "q2"


def build_lifting(spec: LiftingSpec) -> Presentation:
    """U/J, after checking admissibility, confluence and the Hopf-ideal property."""
    problems = admissible(spec)
    if problems:
        raise InadmissibleSpec("; ".join(problems))
    which = v_coefficient_for(spec.datum) if spec.type == "B2" else "q2"
    A = build_lifting_quotient(spec, which)
    bad = [c.name for c in check_generators(A, ideal_generators(spec, which)) if not c.ok]
    if bad:
        raise HopfIdealFailure(f"generators {bad} fail the Hopf-ideal check")
    return A


def expected_dimension(spec: LiftingSpec) -> int:
    n = spec.n
    return n ** (4 if spec.type == "B2" else 3) * spec.datum.group.order


def dimension(spec: LiftingSpec) -> int:
    A = build_lifting(spec)
    dim, monos = enumerate_basis(A)
    counted = sum(1 for _ in monos)
    if counted != dim:
        raise AssertionError("basis enumeration disagrees with the product of bounds")
    if dim != expected_dimension(spec):
        raise AssertionError(f"dimension {dim} differs from {expected_dimension(spec)}")
    return dim


# ---- relation suites -----------------------------------------------------------


@dataclass
class VerificationReport:
    spec: LiftingSpec
    checks: list[dict] = field(default_factory=list)
    dimension: int | None = None

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def add(self, name: str, anchor: str, residual: Element, where: str) -> None:
        self.checks.append(
            {
                "name": name,
                "anchor": anchor,
                "where": where,
                "status": "pass" if residual.is_zero() else "fail",
                "residual": str(residual),
            }
        )

    def to_json(self) -> dict:
        return {"type": self.spec.type, "ok": self.ok, "dimension": self.dimension, "checks": self.checks}


def _b2_relations(P: Presentation, d: YDDatum, n: int) -> list[tuple[str, str, Element]]:
    b11, b12, b21, b22 = d.b(1, 1), d.b(1, 2), d.b(2, 1), d.b(2, 2)
    q = d.q
    x1, x2, z, u = (P.gen(s) for s in ("x1", "x2", "z", "u"))
    p = lambda a, k: a**k
    rows = [
        ("defz", "z = x2 x1 - b21 x1 x2", z - (x2 * x1 - b21 * x1 * x2)),
        ("defu", "u = x2 z - b21 b22 z x2", u - (x2 * z - b21 * b22 * z * x2)),
        ("x1z", "x1 z = b12 z x1", x1 * z - b12 * z * x1),
        ("x2u", "x2 u = b21 b22^2 u x2", x2 * u - b21 * b22**2 * u * x2),
        ("uz", "u z = b11 b21 z u", u * z - b11 * b21 * z * u),
        ("x1u", "x1 u = b21^-1 b12 u x1 + b21^-1 (b22^-1 - 1) z^2", x1 * u - (b21**-1 * b12 * u * x1 + b21**-1 * (b22**-1 - 1) * z * z)),
        ("a1c", "a1 c - b12 c a1 = 0", x1 * z - b12 * z * x1),
        ("da2", "d a2 - b12 a2 d = 0", u * x2 - b12 * x2 * u),
        ("da1", "d a1 = (b21 b22)^2 a1 d + (b21 b22)(q - 1) c^2", u * x1 - ((b21 * b22) ** 2 * x1 * u + b21 * b22 * (q - 1) * z * z)),
        ("cd", "c d = b12 d c", z * u - b12 * u * z),
        ("x2x1n", "x2 x1^n = b21^n x1^n x2", x2 * p(x1, n) - b21**n * p(x1, n) * x2),
        ("zx1n", "z x1^n = b21^n x1^n z", z * p(x1, n) - b21**n * p(x1, n) * z),
        ("ux1n", "u x1^n = b21^2n x1^n u", u * p(x1, n) - b21 ** (2 * n) * p(x1, n) * u),
        ("zx2n", "z x2^n = b12^n x2^n z", z * p(x2, n) - b12**n * p(x2, n) * z),
        ("ux2n", "u x2^n = b12^n x2^n u", u * p(x2, n) - b12**n * p(x2, n) * u),
        ("x1zn", "x1 z^n = b12^n z^n x1", x1 * p(z, n) - b12**n * p(z, n) * x1),
        ("x2zn", "x2 z^n = b21^n z^n x2", x2 * p(z, n) - b21**n * p(z, n) * x2),
        ("uzn", "u z^n = b21^n z^n u", u * p(z, n) - b21**n * p(z, n) * u),
        ("x1un", "x1 u^n = b12^2n u^n x1", x1 * p(u, n) - b12 ** (2 * n) * p(u, n) * x1),
        ("x2un", "x2 u^n = b21^n u^n x2", x2 * p(u, n) - b21**n * p(u, n) * x2),
        ("zun", "z u^n = b12^n u^n z", z * p(u, n) - b12**n * p(u, n) * z),
        ("x1x2n", "x1 x2^n = b12^n x2^n x1", x1 * p(x2, n) - b12**n * p(x2, n) * x1),
        ("unit", "1 * 1 = 1", P.one() * P.one() - P.one()),
    ]
    return rows


def _a2_relations(P: Presentation, spec: LiftingSpec) -> list[tuple[str, str, Element]]:
    d = spec.datum
    b12, b21 = d.b(1, 2), d.b(2, 1)
    G, g1, g2 = d.group, d.g1, d.g2
    x1, x2, z = (P.gen(s) for s in ("x1", "x2", "z"))
    gam1 = spec.gamma1 * (P.grouplike(G.prod(g1, g1, g2)) - 1)
    gam2 = spec.gamma2 * (P.grouplike(G.prod(g1, g2, g2)) - 1)
    return [
        ("defz", "z = x1 x2 - b12 x2 x1", z - (x1 * x2 - b12 * x2 * x1)),
        ("zx1", "z x1 - b21 x1 z = gamma1 (g1^2 g2 - 1)", z * x1 - b21 * x1 * z - gam1),
        ("zx2", "z x2 - b21^-1 x2 z = gamma2 (g1 g2^2 - 1)", z * x2 - b21**-1 * x2 * z - gam2),
        ("unit", "1 * 1 = 1", P.one() * P.one() - P.one()),
    ]


def verify_relations(spec: LiftingSpec, include_ambient: bool = True) -> VerificationReport:
    """Reduce every listed relation (lhs - rhs) to zero in U/J and, optionally, in U."""
    A = build_lifting(spec)
    rep = VerificationReport(spec)
    targets = [("quotient", A)]
    if include_ambient:
        targets.append(("ambient", build_biproduct(spec.datum, spec.type, spec.gamma1, spec.gamma2)))
    for where, P in targets:
        rows = _b2_relations(P, spec.datum, spec.n) if spec.type == "B2" else _a2_relations(P, spec)
        for name, anchor, residual in rows:
            rep.add(name, anchor, residual, where)
    which = A.meta.get("v_coefficient", "q2")
    for gen in ideal_generators(spec, which):
        rep.add(f"J:{gen.name}", "ideal generator vanishes in U/J", A.raw(gen.raw), "quotient")
    rep.dimension = enumerate_basis(A)[0]
    return rep


# ---- conjugation witnesses -----------------------------------------------------------


@dataclass
class WitnessStep:
    """One application of conjugation inside an ambient Hopf algebra.

    The ideal generated by source_gens in K is conjugated by psi onto the
    ideal generated by target_gens.
    """

    ambient: str
    source: dict
    target: dict
    subalgebra: list[str]
    values: list[str]
    checks: dict
    reversed: bool = False

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "from": self.target if self.reversed else self.source,
            "to": self.source if self.reversed else self.target,
            "conjugation_direction": "target to source" if self.reversed else "source to target",
            "subalgebra": self.subalgebra,
            "psi": dict(zip(self.subalgebra, self.values)),
            "checks": self.checks,
            "ok": self.ok,
        }


@dataclass
class QuasiIsoWitness:
    source: LiftingSpec
    target: LiftingSpec
    steps: list[WitnessStep]
    note: str = ""

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)

    def to_json(self) -> dict:
        return {
            "source": _params(self.source),
            "target": _params(self.target),
            "length": len(self.steps),
            "ok": self.ok,
            "note": self.note,
            "steps": [s.to_json() for s in self.steps],
        }


def _params(spec: LiftingSpec) -> dict:
    return {k: str(v) for k, v in spec.params().items()}


def _ideal_equal(M: Presentation, gens_a: Sequence[Element], gens_b: Sequence[Element]) -> bool:
    """Two-sided ideals agree iff each generating set vanishes modulo the other."""
    try:
        Qa = quotient_by(M, list(gens_a))
        Qb = quotient_by(M, list(gens_b))
    except ValueError:
        return False
    if not (confluence_check(Qa).confluent and confluence_check(Qb).confluent):
        return False
    return all(transfer(b, Qa).is_zero() for b in gens_b) and all(transfer(a, Qb).is_zero() for a in gens_a)


def _verify_step(
    M: Presentation,
    K: Sequence[tuple[str, Element]],
    values: Sequence[Scalar],
    source_gens: Sequence[Element],
    target_gens: Sequence[Element],
    target_dim: int,
    mode: str,
) -> dict:
    checks: dict[str, bool] = {}
    checks["ambient_confluent"] = confluence_check(M).confluent
    try:
        psi = SubalgebraMap(M, K, values)
        checks["subalgebra_commutative"] = True
    except ValueError:
        checks["subalgebra_commutative"] = False
        return checks
    closed = True
    for _, k in K:
        try:
            for (m1, m2), _c in delta(M, k).terms.items():
                psi.on_monomial(m1)
                psi.on_monomial(m2)
            psi(antipode(M, k))
        except NotInSubalgebra:
            closed = False
    checks["subalgebra_is_hopf"] = closed
    if not closed:
        return checks
    conj = [conjugate_by(psi, a) for a in source_gens]
    if mode == "generators":
        checks["conjugates_match_target"] = all(c == t for c, t in zip(conj, target_gens))
    else:
        checks["conjugate_ideal_equals_target"] = _ideal_equal(M, conj, target_gens)
    twisted = [left_action(psi, a) for a in source_gens]
    try:
        T = quotient_by(M, twisted, label="twisted")
        checks["twisted_quotient_confluent"] = confluence_check(T).confluent
        checks["twisted_quotient_nonzero"] = not T.one().is_zero()
        checks["twisted_quotient_dimension"] = enumerate_basis(T)[0] == target_dim
    except ValueError:
        checks["twisted_quotient_confluent"] = False
    return checks


_STEP_CACHE: dict = {}


def _cache_key(kind: str, spec_a: LiftingSpec, spec_b: LiftingSpec) -> tuple:
    d = spec_a.datum
    return (kind, d.group.invariant_factors, d.key(), tuple(sorted(_params(spec_a).items())), tuple(sorted(_params(spec_b).items())))


def _b2_same_mu2(base: LiftingSpec, spec: LiftingSpec) -> WitnessStep:
    """A(0, mu2, 0, 0) ~ A(mu1, mu2, lam, gamma) inside U/(x2^n - mu2 (g2^n - 1))."""
    key = _cache_key("b2-same-mu2", base, spec)
    if key in _STEP_CACHE:
        return _STEP_CACHE[key]
    d, n = spec.datum, spec.n
    G = d.group
    which = v_coefficient_for(d)
    U = build_biproduct(d, "B2")
    x2, u, z, x1 = range(4)
    g2n = G.pow(d.g2, n)
    rhs = [term(spec.mu2, (), g2n), term(-spec.mu2)] if spec.mu2 else []
    M = quotient_by(U, [(x2, n, rhs)], label=f"M(mu2={spec.mu2})")
    src = {g.name: M.raw(g.raw) for g in ideal_generators(base, which)}
    tgt = {g.name: M.raw(g.raw) for g in ideal_generators(spec, which)}
    names = ["y1", "v", "w"]
    K = [("x1^n", src["y1"]), ("upsilon", src["v"]), ("omega", src["w"])]
    values = [spec.mu1, spec.lam, spec.gamma]
    checks = _verify_step(M, K, values, [src[k] for k in names], [tgt[k] for k in names], expected_dimension(spec), "generators")
    step = WitnessStep(M.label, _params(base), _params(spec), [k for k, _ in K], [str(as_cyclotomic(v)) for v in values], checks)
    _STEP_CACHE[key] = step
    return step


def _b2_mu2_change(zero: LiftingSpec, one: LiftingSpec) -> WitnessStep:
    """A(0, 0, 0, 0) ~ A(0, 1, 0, 0) inside U/(x1^n)."""
    key = _cache_key("b2-mu2", zero, one)
    if key in _STEP_CACHE:
        return _STEP_CACHE[key]
    d, n = zero.datum, zero.n
    which = v_coefficient_for(d)
    U = build_biproduct(d, "B2")
    x2, u, z, x1 = range(4)
    M = quotient_by(U, [(x1, n, [])], label="M=U/(x1^n)")
    src = {g.name: M.raw(g.raw) for g in ideal_generators(zero, which)}
    tgt = {g.name: M.raw(g.raw) for g in ideal_generators(one, which)}
    K = [("x2^n", M.word_element((x2,) * n)), ("z^n", M.word_element((z,) * n)), ("u^n", M.word_element((u,) * n))]
    values = [1, 0, 0]
    names = ["y2", "v", "w"]
    checks = _verify_step(M, K, values, [src[k] for k in names], [tgt[k] for k in names], expected_dimension(one), "ideal")
    step = WitnessStep(M.label, _params(zero), _params(one), [k for k, _ in K], [str(as_cyclotomic(v)) for v in values], checks)
    _STEP_CACHE[key] = step
    return step


def _reverse(step: WitnessStep) -> WitnessStep:
    return WitnessStep(step.ambient, step.source, step.target, step.subalgebra, step.values, step.checks, reversed=True)


def _b2_chain(source: LiftingSpec, target: LiftingSpec) -> list[WitnessStep]:
    base_s = source.replace(mu1=0, lam=0, gamma=0)
    base_t = target.replace(mu1=0, lam=0, gamma=0)
    steps = []
    if source != base_s:
        steps.append(_reverse(_b2_same_mu2(base_s, source)))
    if base_s.mu2 != base_t.mu2:
        zero = base_s.replace(mu2=0)
        one = base_s.replace(mu2=1)
        step = _b2_mu2_change(zero, one)
        steps.append(step if base_s.mu2 == 0 else _reverse(step))
    if target != base_t:
        steps.append(_b2_same_mu2(base_t, target))
    return steps


def _a2_ambient(spec: LiftingSpec, power: dict[str, list]) -> Presentation:
    U = build_biproduct(spec.datum, "A2", spec.gamma1, spec.gamma2)
    n = spec.n
    rules = [(U.index(name), n, rhs) for name, rhs in power.items()]
    return quotient_by(U, rules, label="A2 ambient " + ",".join(power))


def _a2_mu2_lambda(base: LiftingSpec, spec: LiftingSpec) -> WitnessStep:
    """A(mu1, 0, 0, g1, g2) ~ A(mu1, mu2, lam, g1, g2) inside M_mu1."""
    key = _cache_key("a2-mu2-lam", base, spec)
    if key in _STEP_CACHE:
        return _STEP_CACHE[key]
    d, n = spec.datum, spec.n
    G = d.group
    g1n = G.pow(d.g1, n)
    rhs = [term(spec.mu1, (), g1n), term(-spec.mu1)] if spec.mu1 else []
    M = _a2_ambient(spec, {"x1": rhs})
    src = {g.name: M.raw(g.raw) for g in ideal_generators(base)}
    tgt = {g.name: M.raw(g.raw) for g in ideal_generators(spec)}
    K = [("x2^n", src["y2"]), ("upsilon", src["v"])]
    values = [spec.mu2, spec.lam]
    checks = _verify_step(M, K, values, [src["y2"], src["v"]], [tgt["y2"], tgt["v"]], expected_dimension(spec), "generators")
    step = WitnessStep(f"M(mu1={spec.mu1})", _params(base), _params(spec), [k for k, _ in K], [str(as_cyclotomic(v)) for v in values], checks)
    _STEP_CACHE[key] = step
    return step


def _a2_mu1(zero: LiftingSpec, one: LiftingSpec) -> WitnessStep:
    """A(0, 0, 0, g1, g2) ~ A(1, 0, 0, g1, g2) inside U/(x2^n)."""
    key = _cache_key("a2-mu1", zero, one)
    if key in _STEP_CACHE:
        return _STEP_CACHE[key]
    M = _a2_ambient(zero, {"x2": []})
    src = {g.name: M.raw(g.raw) for g in ideal_generators(zero)}
    tgt = {g.name: M.raw(g.raw) for g in ideal_generators(one)}
    K = [("x1^n", src["y1"]), ("upsilon", src["v"])]
    values = [1, 0]
    checks = _verify_step(M, K, values, [src["y1"], src["v"]], [tgt["y1"], tgt["v"]], expected_dimension(one), "generators")
    step = WitnessStep("M=U/(x2^n)", _params(zero), _params(one), [k for k, _ in K], ["1", "0"], checks)
    _STEP_CACHE[key] = step
    return step


def _a2_same_gamma(source: LiftingSpec, target: LiftingSpec) -> list[WitnessStep]:
    base_s = source.replace(mu2=0, lam=ZERO)
    base_t = target.replace(mu2=0, lam=ZERO)
    steps = []
    if source != base_s:
        steps.append(_reverse(_a2_mu2_lambda(base_s, source)))
    if base_s.mu1 != base_t.mu1:
        zero, one = base_s.replace(mu1=0), base_s.replace(mu1=1)
        step = _a2_mu1(zero, one)
        steps.append(step if base_s.mu1 == 0 else _reverse(step))
    if target != base_t:
        steps.append(_a2_mu2_lambda(base_t, target))
    return steps


def _gamma_ambient(spec: LiftingSpec, which: int) -> tuple[Presentation, int]:
    """U/(x1^3, x2^3, z^3, one gamma relation) with the other commutator s adjoined.

    which = 2: s = z x2 - b21^-1 x2 z; which = 1: s = z x1 - b21 x1 z.
    s is central, which holds in every quotient where s lies in the group algebra.
    """
    d = spec.datum
    b12, b21 = d.b(1, 2), d.b(2, 1)
    G, g1, g2 = d.group, d.g1, d.g2
    c1, c2 = d.chi1, d.chi2
    if which == 2:
        names = ("x1", "z", "s", "x2")
        x1, z, s, x2 = range(4)
        chars = [c1, c1 * c2, c1 * c2 * c2, c2]
        swaps = {
            (x2, x1): [term(b12**-1, (x1, x2)), term(-(b12**-1), (z,))],
            (z, x1): [term(b21, (x1, z))],
            (x2, z): [term(b21, (z, x2)), term(-b21, (s,))],
            (s, x1): [term(1, (x1, s))],
            (s, z): [term(1, (z, s))],
            (x2, s): [term(1, (s, x2))],
        }
        defs = {z: [term(1, (x1, x2)), term(-b12, (x2, x1))], s: [term(1, (z, x2)), term(-(b21**-1), (x2, z))]}
    else:
        names = ("x1", "s", "z", "x2")
        x1, s, z, x2 = range(4)
        chars = [c1, c1 * c1 * c2, c1 * c2, c2]
        swaps = {
            (x2, x1): [term(b12**-1, (x1, x2)), term(-(b12**-1), (z,))],
            (z, x1): [term(b21, (x1, z)), term(1, (s,))],
            (x2, z): [term(b21, (z, x2))],
            (s, x1): [term(1, (x1, s))],
            (z, s): [term(1, (s, z))],
            (x2, s): [term(1, (s, x2))],
        }
        defs = {z: [term(1, (x1, x2)), term(-b12, (x2, x1))], s: [term(1, (z, x1)), term(-b21, (x1, z))]}
    P = Presentation(
        names,
        G,
        chars,
        swaps,
        {x1: (3, []), z: (3, []), x2: (3, [])},
        weights=(1, 2, 3, 1) if which == 2 else (1, 3, 2, 1),
        definitions=defs,
        coalgebra={x1: g1, x2: g2},
        group_aliases={"g1": g1, "g2": g2},
        datum=d,
        label=f"L(s{which})",
    )
    return P, names.index("s")


def _by_names(raw, source_names: Sequence[str], target: Presentation) -> Element:
    idx = {n: i for i, n in enumerate(target.names)}
    return target.raw([(c, g, tuple(idx[source_names[j]] for j in w)) for c, g, w in raw])


def _gamma_path(zero: LiftingSpec, spec: LiftingSpec, which: int) -> WitnessStep:
    """A(0,0,0,0,0) ~ A(0,0,0,gamma_i e_i) by conjugating s onto s - gamma_i (g - 1)."""
    key = _cache_key(f"a2-gamma{which}", zero, spec)
    if key in _STEP_CACHE:
        return _STEP_CACHE[key]
    d = spec.datum
    G = d.group
    gam = spec.gamma2 if which == 2 else spec.gamma1
    grp = G.prod(d.g1, d.g2, d.g2) if which == 2 else G.prod(d.g1, d.g1, d.g2)
    L, s = _gamma_ambient(spec, which)
    S = L.gen(s)
    target_gen = S - gam * (L.grouplike(grp) - 1)
    checks = _verify_step(L, [("s", S)], [gam], [S], [target_gen], expected_dimension(spec), "generators")
    checks["s_skew_primitive"] = is_skew_primitive(L, S) == (grp, G.identity)
    # the quotient by s - gamma (g - 1) is the target lifting: same dimension and J_target vanishes there
    Q = quotient_by(L, [target_gen])
    checks["target_quotient_matches"] = (
        confluence_check(Q).confluent
        and enumerate_basis(Q)[0] == expected_dimension(spec)
        and all(_by_names(g.raw, A2_ORDER, Q).is_zero() for g in ideal_generators(spec))
    )
    Q0 = quotient_by(L, [S])
    checks["source_quotient_matches"] = (
        confluence_check(Q0).confluent
        and enumerate_basis(Q0)[0] == expected_dimension(zero)
        and all(_by_names(g.raw, A2_ORDER, Q0).is_zero() for g in ideal_generators(zero))
    )
    step = WitnessStep(L.label, _params(zero), _params(spec), ["s"], [str(gam)], checks)
    _STEP_CACHE[key] = step
    return step


def _a2_chain(source: LiftingSpec, target: LiftingSpec) -> tuple[list[WitnessStep], str] | None:
    gs = (source.gamma1, source.gamma2)
    gt = (target.gamma1, target.gamma2)
    if gs == gt:
        return _a2_same_gamma(source, target), ""

    def to_gamma_zero(spec: LiftingSpec) -> list[WitnessStep] | None:
        """Steps from A(..., 0, 0) to spec; needs one vanishing gamma."""
        if spec.gamma1.is_zero() and spec.gamma2.is_zero():
            return []
        if not (spec.gamma1.is_zero() or spec.gamma2.is_zero()):
            return None
        which = 2 if spec.gamma1.is_zero() else 1
        plain = spec.replace(mu1=0, mu2=0, lam=ZERO)
        zero = plain.replace(gamma1=ZERO, gamma2=ZERO)
        return [_gamma_path(zero, plain, which)] + _a2_same_gamma(plain, spec)

    up_s, up_t = to_gamma_zero(source), to_gamma_zero(target)
    if up_s is None or up_t is None:
        return None
    down = [_reverse(s) for s in reversed(up_s)]
    zero_s = source.replace(mu1=0, mu2=0, lam=ZERO, gamma1=ZERO, gamma2=ZERO)
    return down + _a2_same_gamma(zero_s, zero_s) + up_t, ""


def quasi_iso_witness(source: LiftingSpec, target: LiftingSpec) -> QuasiIsoWitness | None:
    """A verified chain of conjugation steps from source to target, or None.

    Returns None when no chain is available (A2, n = 3, with both gammas
    nonzero on one side and different gammas on the other).
    """
    if source.datum != target.datum or source.type != target.type:
        raise ValueError("witnesses relate liftings of the same datum")
    for spec in (source, target):
        problems = admissible(spec)
        if problems:
            raise InadmissibleSpec("; ".join(problems))
    if source == target:
        return QuasiIsoWitness(source, target, [], note="identity witness (psi = counit)")
    if source.type == "B2":
        return QuasiIsoWitness(source, target, _b2_chain(source, target))
    chain = _a2_chain(source, target)
    if chain is None:
        return None
    return QuasiIsoWitness(source, target, chain[0], chain[1])


def absent_reason(source: LiftingSpec, target: LiftingSpec) -> str:
    return (
        "no conjugation chain: one side has both gamma1 and gamma2 nonzero and the gammas differ; "
        "whether such liftings are quasi-isomorphic to the undeformed one is left open here"
    )


# ---- isomorphism probe -------------------------------------------------------


def a2_isomorphism_probe(lambda1: Scalar, lambda2: Scalar, datum: YDDatum) -> bool:
    """Is there a Hopf map A(lambda1) -> A(lambda2) with x_i -> a_i y_i, g -> g^k?

    A(lambda) is the A2 lifting with mu1 = mu2 = 1 over the cyclic group of
    order 49 with g1 = g, g2 = g^4, chi1 = chi, chi2 = chi^2, chi(g) = zeta_7.
    Scalars a_i range over the 49th roots of unity and k over units mod 49
    preserving {g1, g2}.
    """
    G = datum.group
    if G.invariant_factors != (49,) or cartan_type(datum) != "A2" or datum.n != 7:
        raise ValueError("the probe is defined for the cyclic group of order 49 with n = 7")
    src_spec = LiftingSpec(datum, "A2", 1, 1, as_cyclotomic(lambda1))
    tgt_spec = LiftingSpec(datum, "A2", 1, 1, as_cyclotomic(lambda2))
    A = build_lifting(src_spec)
    B = build_lifting(tgt_spec)
    x1, z, x2 = range(3)
    units = [k for k in range(1, 49) if k % 7]
    relations = []
    for j, (N, rhs) in A.power_rules.items():
        relations.append([term(1, (j,) * N)] + [(-c, g, w) for c, g, w in rhs])
    for (hi, lo), rhs in A.swap_rules.items():
        relations.append([term(1, (hi, lo))] + [(-c, g, w) for c, g, w in rhs])
    gen_g = (1,)
    roots = [zeta(49, i) for i in range(49)]
    for k in units:
        # f(g) = g^k must carry {g1, g2} to itself; f(x_j) is a multiple of the matching y
        image_of = {G.pow(datum.g1, k): x1, G.pow(datum.g2, k): x2}
        if set(image_of) != {datum.g1, datum.g2}:
            continue
        perm = {x1: image_of[datum.g1], x2: image_of[datum.g2]}
        if any(B.characters[perm[j]](G.pow(gen_g, k)) != A.characters[j](gen_g) for j in (x1, x2)):
            continue

        def gimg(g, k=k):
            return B.grouplike(G.pow(g, k))

        for a, b in product(roots, roots):
            images = {x1: a * B.gen(perm[x1]), x2: b * B.gen(perm[x2])}
            images[z] = evaluate(A.definitions[z], lambda j: images[j], gimg, B.one())
            if all(evaluate(rel, lambda j: images[j], gimg, B.one()).is_zero() for rel in relations):
                return True
    return False

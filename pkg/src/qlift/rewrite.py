"""PBW rewriting over a group algebra.

A presentation fixes an ordered generator list, a finite abelian group whose
elements are swept to the left (x h = chi_x(h)^-1 h x), two-letter swap rules
y x -> ... for y > x, and optional power rules x^N -> ... . Normal monomials
are g x_0^e_0 x_1^e_1 ... with e_j < N_j when x_j has a power rule.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .abelian import AbelianGroup, Character, Elem, YDDatum
from .exactnum import Cyclotomic, Scalar, as_cyclotomic, parse_cyclotomic, zeta

__all__ = [
    "Presentation",
    "Element",
    "Raw",
    "term",
    "InfiniteDimensional",
    "UnknownSymbol",
    "OrderViolation",
    "ConfluenceReport",
    "normalize",
    "confluence_check",
    "enumerate_basis",
    "quotient_by",
    "power_rule_from",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

ONE = Cyclotomic.from_rational(1)
Mono = tuple[Elem, tuple[int, ...]]
# formal linear combination: (coefficient, group element or None, word of generator indices)
RawTerm = tuple[Cyclotomic, Union[Elem, None], tuple[int, ...]]
Raw = tuple[RawTerm, ...]


class InfiniteDimensional(ValueError):
    pass


class UnknownSymbol(ValueError):
    pass


class OrderViolation(ValueError):
    pass


def term(coef: Scalar, word: Sequence[int] = (), g: Elem | None = None) -> RawTerm:
    return (as_cyclotomic(coef), None if g is None else tuple(g), tuple(word))


class Element:
    """Finite linear combination of normal monomials of one presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: "Presentation", terms: Mapping[Mono, Cyclotomic]):
        self.pres = pres
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def _check(self, other: "Element") -> None:
        if other.pres is not self.pres:
            raise ValueError("elements of different presentations")

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.pres.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Element(self.pres, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return self.pres.mul(self, other)
        c = as_cyclotomic(other)
        return Element(self.pres, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other) -> "Element":
        c = as_cyclotomic(other)
        return Element(self.pres, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative powers of algebra elements")
        out = self.pres.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return other.pres is self.pres and self.terms == other.terms
        try:
            return self == self.pres.scalar(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, g: Elem, exps: Sequence[int]) -> Cyclotomic:
        return self.terms.get((tuple(g), tuple(exps)), Cyclotomic.from_rational(0))

    def group_part_only(self) -> bool:
        return all(not any(e) for _, e in self.terms)

    def __str__(self) -> str:
        return self.pres.render(self)

    def __repr__(self) -> str:
        return f"Element({self})"


@dataclass
class ConfluenceReport:
    confluent: bool
    checked: int
    failures: list[dict]

    def to_json(self) -> dict:
        return {"confluent": self.confluent, "checked": self.checked, "failures": self.failures}


class Presentation:
    """An algebra given by PBW generators, group passage, swap and power rules.

    names:        generator names in PBW order (position 0 is leftmost).
    characters:   per generator, the character governing h x = chi(h) x h.
    swap_rules:   {(hi, lo): Raw} for every pair hi > lo, rewriting x_hi x_lo.
    power_rules:  {j: (N, Raw)} rewriting x_j^N.
    weights:      degrees used by the termination order.
    definitions:  {j: Raw} expressing derived generators in earlier letters.
    coalgebra:    {j: g} for (g, 1)-skew-primitive generators.
    """

    def __init__(
        self,
        names: Sequence[str],
        group: AbelianGroup,
        characters: Sequence[Character],
        swap_rules: Mapping[tuple[int, int], Iterable[RawTerm]],
        power_rules: Mapping[int, tuple[int, Iterable[RawTerm]]] | None = None,
        *,
        weights: Sequence[int] | None = None,
        definitions: Mapping[int, Iterable[RawTerm]] | None = None,
        coalgebra: Mapping[int, Elem] | None = None,
        group_aliases: Mapping[str, Elem] | None = None,
        datum: YDDatum | None = None,
        label: str = "",
        meta: Mapping | None = None,
    ):
        self.names = tuple(names)
        self.k = len(self.names)
        self.group = group
        self.characters = tuple(characters)
        if len(self.characters) != self.k:
            raise ValueError("one character per generator")
        self.weights = tuple(weights) if weights is not None else (1,) * self.k
        self.swap_rules: dict[tuple[int, int], Raw] = {
            (int(a), int(b)): tuple(_fix_term(t) for t in rhs) for (a, b), rhs in swap_rules.items()
        }
        self.power_rules: dict[int, tuple[int, Raw]] = {
            int(j): (int(N), tuple(_fix_term(t) for t in rhs)) for j, (N, rhs) in (power_rules or {}).items()
        }
        self.definitions = {int(j): tuple(_fix_term(t) for t in rhs) for j, rhs in (definitions or {}).items()}
        self.coalgebra = {int(j): tuple(g) for j, g in (coalgebra or {}).items()}
        self.group_aliases = dict(group_aliases or {})
        self.datum = datum
        self.label = label
        self.meta = dict(meta or {})
        self.identity = group.identity
        self._L = group.exponent
        self._bound = tuple(self.power_rules[j][0] if j in self.power_rules else None for j in range(self.k))
        self._char_exps = tuple(ch.exponents for ch in self.characters)
        self._times_cache: dict[tuple[tuple[int, ...], int], dict] = {}
        self._mul_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], dict] = {}
        self._shift_cache: dict[tuple[tuple[int, ...], Elem], Cyclotomic] = {}
        self._validate()

    # ---- construction checks -------------------------------------------------

    def order_key(self, word: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        """Weighted degree, then lexicographic on PBW positions."""
        return (sum(self.weights[j] for j in word), tuple(word))

    def _validate(self) -> None:
        for hi in range(self.k):
            for lo in range(hi):
                if (hi, lo) not in self.swap_rules:
                    raise ValueError(f"missing swap rule for {self.names[hi]} {self.names[lo]}")
        for (hi, lo), rhs in self.swap_rules.items():
            if not hi > lo:
                raise ValueError(f"swap rule {self.names[hi]} {self.names[lo]} is not out of order")
            self._check_decreasing((hi, lo), rhs)
        for j, (N, rhs) in self.power_rules.items():
            if N < 1:
                raise ValueError("power-rule exponents must be positive")
            self._check_decreasing((j,) * N, rhs)

    def _check_decreasing(self, lhs: tuple[int, ...], rhs: Raw) -> None:
        key = self.order_key(lhs)
        for _, _, word in rhs:
            if not self.order_key(word) < key:
                raise OrderViolation(f"rule {self.word_str(lhs)} -> ... {self.word_str(word)} does not decrease the order")

    # ---- constructors of elements -----------------------------------------

    def element(self, terms: Mapping[Mono, Scalar]) -> Element:
        return Element(self, {(tuple(g), tuple(e)): as_cyclotomic(c) for (g, e), c in terms.items()})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(self.identity, (0,) * self.k): ONE})

    def scalar(self, c: Scalar) -> Element:
        return Element(self, {(self.identity, (0,) * self.k): as_cyclotomic(c)})

    def grouplike(self, g: Sequence[int]) -> Element:
        return Element(self, {(self.group.element(g), (0,) * self.k): ONE})

    def gen(self, name: str | int) -> Element:
        j = self.index(name) if isinstance(name, str) else name
        return self.word_element((j,))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownSymbol(f"unknown generator {name!r}") from None

    def word_element(self, word: Sequence[int], g: Elem | None = None, coef: Scalar = 1) -> Element:
        terms = self._mul_word((0,) * self.k, tuple(word))
        g = self.identity if g is None else self.group.element(g)
        c = as_cyclotomic(coef)
        return Element(self, {(self.group.mul(g, h), e): c * v for (h, e), v in terms.items()})

    def raw(self, raw: Iterable[RawTerm]) -> Element:
        out = self.zero()
        for c, g, word in raw:
            out = out + self.word_element(word, g, c)
        return out

    # ---- core multiplication ------------------------------------------------

    def _shift(self, e: tuple[int, ...], h: Elem) -> Cyclotomic:
        """Scalar s with x^e h = s h x^e."""
        key = (e, h)
        s = self._shift_cache.get(key)
        if s is None:
            pair = self.group.pairing
            total = sum(ek * pair(self._char_exps[k], h) for k, ek in enumerate(e) if ek)
            s = zeta(self._L, -total) if self._L > 1 else ONE
            self._shift_cache[key] = s
        return s

    def _times_gen(self, e: tuple[int, ...], j: int) -> dict:
        key = (e, j)
        hit = self._times_cache.get(key)
        if hit is not None:
            return hit
        last = -1
        for k in range(self.k - 1, -1, -1):
            if e[k]:
                last = k
                break
        ne = list(e)
        if last <= j:
            ne[j] += 1
            bound = self._bound[j]
            if bound is not None and ne[j] >= bound:
                ne[j] -= bound
                res = self._mul_raw(tuple(ne), self.power_rules[j][1])
            else:
                res = {(self.identity, tuple(ne)): ONE}
        else:
            ne[last] -= 1
            res = self._mul_raw(tuple(ne), self.swap_rules[(last, j)])
        self._times_cache[key] = res
        return res

    def _mul_raw(self, prefix: tuple[int, ...], raw: Raw) -> dict:
        """x^prefix times a formal combination, fully reduced."""
        out: dict = {}
        G = self.group
        for c, h, word in raw:
            if h is None or h == self.identity:
                scale, hh = c, self.identity
            else:
                scale, hh = c * self._shift(prefix, h), h
            for (g, e), v in self._mul_word(prefix, word).items():
                m = (G.mul(hh, g), e)
                w = scale * v
                out[m] = out[m] + w if m in out else w
        return {m: v for m, v in out.items() if not v.is_zero()}

    def _mul_word(self, e: tuple[int, ...], word: tuple[int, ...]) -> dict:
        cur: dict = {(self.identity, e): ONE}
        G = self.group
        for j in word:
            nxt: dict = {}
            for (g, ee), c in cur.items():
                for (h, f), v in self._times_gen(ee, j).items():
                    m = (G.mul(g, h), f)
                    w = c * v
                    nxt[m] = nxt[m] + w if m in nxt else w
            cur = {m: v for m, v in nxt.items() if not v.is_zero()}
        return cur

    def _mul_exps(self, e1: tuple[int, ...], e2: tuple[int, ...]) -> dict:
        key = (e1, e2)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = self._mul_word(e1, self.letters(e2))
            self._mul_cache[key] = hit
        return hit

    def mono_mul(self, m1: Mono, m2: Mono) -> dict:
        """Normal form of the product of two normal monomials, as a term dict."""
        g1, e1 = m1
        g2, e2 = m2
        G = self.group
        s = self._shift(e1, g2) if g2 != self.identity and any(e1) else ONE
        g12 = G.mul(g1, g2)
        return {(G.mul(g12, h), f): s * v for (h, f), v in self._mul_exps(e1, e2).items()}

    def letters(self, e: Sequence[int]) -> tuple[int, ...]:
        return tuple(j for j, k in enumerate(e) for _ in range(k))

    def mul(self, a: Element, b: Element) -> Element:
        out: dict = {}
        G = self.group
        for (g1, e1), c1 in a.terms.items():
            for (g2, e2), c2 in b.terms.items():
                s = c1 * c2
                if g2 != self.identity and any(e1):
                    s = s * self._shift(e1, g2)
                g12 = G.mul(g1, g2)
                for (h, f), v in self._mul_exps(e1, e2).items():
                    m = (G.mul(g12, h), f)
                    w = s * v
                    out[m] = out[m] + w if m in out else w
        return Element(self, out)

    # ---- words ---------------------------------------------------------------

    _TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(\[[-0-9, ]*\])?(?:\^(-?\d+))?$")

    def parse_word(self, text: str | Sequence[str]) -> Element:
        """Product of tokens like 'x1', 'z^3', 'g1', 'g2^-1', 'g[1,0]'."""
        tokens = text.replace("*", " ").split() if isinstance(text, str) else list(text)
        out = self.one()
        for tok in tokens:
            m = self._TOKEN.match(tok)
            if not m:
                raise UnknownSymbol(f"cannot parse token {tok!r}")
            name, bracket, power = m.group(1), m.group(2), m.group(3)
            k = int(power) if power is not None else 1
            if bracket is not None:
                if name != "g":
                    raise UnknownSymbol(f"unknown group token {tok!r}")
                exps = [int(x) for x in bracket.strip("[]").split(",") if x.strip()]
                out = out * self.grouplike(self.group.pow(self.group.element(exps), k))
            elif name in self.names:
                if k < 0:
                    raise UnknownSymbol(f"negative power of generator in {tok!r}")
                out = out * self.gen(name) ** k
            elif name in self.group_aliases:
                out = out * self.grouplike(self.group.pow(self.group_aliases[name], k))
            else:
                raise UnknownSymbol(f"unknown symbol {name!r}")
        return out

    def parse_element(self, text: str) -> Element:
        """Sums of 'coef * word' terms; coefficients in parentheses or plain integers."""
        out = self.zero()
        for sign, body in _split_terms(text):
            coef, word = _split_coef(body)
            c = parse_cyclotomic(coef) if coef else ONE
            out = out + (c if sign > 0 else -c) * (self.parse_word(word) if word.strip() else self.one())
        return out

    def word_str(self, word: Sequence[int]) -> str:
        return " ".join(self.names[j] for j in word) or "1"

    def render_mono(self, g: Elem, e: Sequence[int]) -> str:
        parts = []
        if g != self.identity:
            alias = {v: k for k, v in self.group_aliases.items()}
            parts.append(alias.get(g, "g[" + ",".join(map(str, g)) + "]"))
        for j, k in enumerate(e):
            if k:
                parts.append(self.names[j] + (f"^{k}" if k > 1 else ""))
        return "*".join(parts) or "1"

    def render(self, a: Element) -> str:
        if not a.terms:
            return "0"
        out = ""
        for (g, e), c in sorted(a.terms.items(), key=lambda t: (self.order_key(self.letters(t[0][1])), t[0][0])):
            mono = self.render_mono(g, e)
            sign = " + " if out else ""
            if c == -1 or (c.is_rational() and c.to_fraction() < 0):
                sign, c = (" - " if out else "-"), -c
            if c == 1:
                body = mono
            else:
                cs = str(c.to_fraction()) if c.is_rational() else f"({c})"
                body = cs + ("" if mono == "1" else "*" + mono)
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"Presentation({self.label or ','.join(self.names)})"

    # ---- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def raw_json(raw: Raw) -> list:
            return [[str(c), None if g is None else list(g), [self.names[j] for j in w]] for c, g, w in raw]

        return {
            "label": self.label,
            "generators": list(self.names),
            "weights": list(self.weights),
            "group": list(self.group.invariant_factors),
            "characters": [list(ch.exponents) for ch in self.characters],
            "swap_rules": [[self.names[a], self.names[b], raw_json(r)] for (a, b), r in sorted(self.swap_rules.items())],
            "power_rules": [[self.names[j], N, raw_json(r)] for j, (N, r) in sorted(self.power_rules.items())],
            "definitions": [[self.names[j], raw_json(r)] for j, r in sorted(self.definitions.items())],
            "coalgebra": [[self.names[j], list(g)] for j, g in sorted(self.coalgebra.items())],
            "group_aliases": {k: list(v) for k, v in self.group_aliases.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Presentation":
        names = list(data["generators"])
        idx = {n: i for i, n in enumerate(names)}
        G = AbelianGroup(tuple(data.get("group", [])))
        chars = data.get("characters") or [[0] * G.rank for _ in names]

        def raw(r) -> list[RawTerm]:
            out = []
            for c, g, w in r:
                try:
                    word = tuple(idx[x] for x in w)
                except KeyError as exc:
                    raise UnknownSymbol(f"unknown generator {exc.args[0]!r}") from None
                out.append(term(parse_cyclotomic(str(c)), word, None if g is None else G.element(g)))
            return out

        return cls(
            names,
            G,
            [Character(G, tuple(c)) for c in chars],
            {(idx[a], idx[b]): raw(r) for a, b, r in data.get("swap_rules", [])},
            {idx[x]: (int(N), raw(r)) for x, N, r in data.get("power_rules", [])},
            weights=data.get("weights"),
            definitions={idx[x]: raw(r) for x, r in data.get("definitions", [])},
            coalgebra={idx[x]: G.element(g) for x, g in data.get("coalgebra", [])},
            group_aliases={k: G.element(v) for k, v in data.get("group_aliases", {}).items()},
            label=data.get("label", ""),
        )


def _fix_term(t) -> RawTerm:
    c, g, w = t
    return (as_cyclotomic(c), None if g is None else tuple(g), tuple(w))


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at top-level + and - signs."""
    out, depth, cur, sign = [], 0, [], 1
    s = text.strip()
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and (i == 0 or s[i - 1] not in "^*([,"):
            body = "".join(cur).strip()
            if body:
                out.append((sign, body))
            sign = 1 if ch == "+" else -1
            cur = []
        else:
            cur.append(ch)
        i += 1
    body = "".join(cur).strip()
    if body:
        out.append((sign, body))
    return out


def _split_coef(body: str) -> tuple[str, str]:
    body = body.strip()
    if body.startswith("("):
        depth = 0
        for i, ch in enumerate(body):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                return body[1:i], body[i + 1 :].lstrip("* ")
    m = re.match(r"^(\d+(?:/\d+)?)\s*\*?\s*(.*)$", body)
    if m:
        return m.group(1), m.group(2)
    return "", body


def normalize(pres: Presentation, word: str | Sequence[str]) -> Element:
    return pres.parse_word(word)


# ---- confluence ----------------------------------------------------------


def _group_generators(G: AbelianGroup) -> list[Elem]:
    out = []
    for k in range(G.rank):
        e = [0] * G.rank
        e[k] = 1
        out.append(tuple(e))
    return out


def confluence_check(pres: Presentation) -> ConfluenceReport:
    """Resolve every critical pair of the rewriting system (Diamond lemma)."""
    failures: list[dict] = []
    checked = 0
    P = pres

    def word(ws: Sequence[int]) -> Element:
        out = P.one()
        for j in ws:
            out = out * _free_letter(P, j)
        return out

    def record(name: str, a: Element, b: Element) -> None:
        nonlocal checked
        checked += 1
        if a != b:
            failures.append({"overlap": name, "difference": str(a - b)})

    swaps = P.swap_rules
    for c in range(P.k):
        for b in range(c):
            for a in range(b):
                lhs = P.raw(swaps[(c, b)]) * _free_letter(P, a)
                rhs = _free_letter(P, c) * P.raw(swaps[(b, a)])
                record(P.word_str((c, b, a)), lhs, rhs)
    for x, (N, R) in P.power_rules.items():
        Rx = P.raw(R)
        for k in range(1, N):
            record(P.word_str((x,) * (N + k)), Rx * word((x,) * k), word((x,) * k) * Rx)
        for y in range(x + 1, P.k):
            lhs = P.raw(swaps[(y, x)]) * word((x,) * (N - 1))
            rhs = _free_letter(P, y) * Rx
            record(P.word_str((y,) + (x,) * N), lhs, rhs)
        for w in range(x):
            lhs = Rx * _free_letter(P, w)
            rhs = word((x,) * (N - 1)) * P.raw(swaps[(x, w)])
            record(P.word_str((x,) * N + (w,)), lhs, rhs)
    for h in _group_generators(P.group):
        H = P.grouplike(h)
        for (y, x), R in swaps.items():
            e = [0] * P.k
            e[y] += 1
            e[x] += 1
            s = P._shift(tuple(e), h)
            record(P.word_str((y, x)) + f" g[{','.join(map(str, h))}]", P.raw(R) * H, s * (H * P.raw(R)))
        for x, (N, R) in P.power_rules.items():
            e = [0] * P.k
            e[x] = N
            s = P._shift(tuple(e), h)
            record(P.word_str((x,) * N) + f" g[{','.join(map(str, h))}]", P.raw(R) * H, s * (H * P.raw(R)))
    return ConfluenceReport(not failures, checked, failures)


def _free_letter(P: Presentation, j: int) -> Element:
    return P.word_element((j,))


# ---- bases and quotients -------------------------------------------------


def enumerate_basis(pres: Presentation) -> tuple[int, Iterator[Mono]]:
    """Dimension and an iterator over the normal monomials."""
    missing = [pres.names[j] for j in range(pres.k) if pres._bound[j] is None]
    if missing:
        raise InfiniteDimensional(f"infinite-dimensional: no power rule for {', '.join(missing)}")
    bounds = pres._bound
    dim = pres.group.order * prod(bounds)  # type: ignore[arg-type]

    def it() -> Iterator[Mono]:
        for g in pres.group.elements():
            for e in product(*(range(b) for b in bounds)):  # type: ignore[arg-type]
                yield (tuple(g), tuple(e))

    return dim, it()


def element_to_raw(a: Element) -> list[RawTerm]:
    P = a.pres
    return [(c, g, P.letters(e)) for (g, e), c in a.terms.items()]


def power_rule_from(a: Element) -> tuple[int, int, list[RawTerm]]:
    """Orient a relation a = 0 whose leading term is a pure power x_j^N."""
    P = a.pres
    if a.is_zero():
        raise ValueError("cannot orient the zero relation")
    lead = max(a.terms, key=lambda m: (P.order_key(P.letters(m[1])), m[0]))
    g, e = lead
    support = [j for j, k in enumerate(e) if k]
    if g != P.identity or len(support) != 1:
        raise ValueError(f"leading term {P.render_mono(g, e)} is not a pure generator power")
    j = support[0]
    c = a.terms[lead]
    rhs = [(-v / c, h, P.letters(f)) for (h, f), v in a.terms.items() if (h, f) != lead]
    return j, e[j], rhs


def quotient_by(pres: Presentation, relations: Iterable[Element | tuple[int, int, Iterable[RawTerm]]], label: str = "") -> Presentation:
    """Add power rules; each relation is an Element (oriented by its leading
    pure power) or an explicit (generator, exponent, rhs) triple."""
    rules = dict(pres.power_rules)
    for rel in relations:
        j, N, rhs = power_rule_from(rel) if isinstance(rel, Element) else rel
        if j in rules:
            raise ValueError(f"generator {pres.names[j]} already has a power rule")
        rules[j] = (N, list(rhs))
    return Presentation(
        pres.names,
        pres.group,
        pres.characters,
        pres.swap_rules,
        rules,
        weights=pres.weights,
        definitions=pres.definitions,
        coalgebra=pres.coalgebra,
        group_aliases=pres.group_aliases,
        datum=pres.datum,
        label=label or pres.label,
        meta=pres.meta,
    )


def transfer(a: Element, target: Presentation) -> Element:
    """Re-reduce an element in a presentation with the same generator names."""
    if target.names != a.pres.names:
        raise ValueError("presentations have different generators")
    return target.raw(element_to_raw(a))

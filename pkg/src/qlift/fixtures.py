"""Canonical data files, each selected from a datum_search result."""

from __future__ import annotations

import json
from pathlib import Path

from .abelian import AbelianGroup, LiftingSpec, YDDatum, datum_search
from .builders import build_trinomial_algebra, build_biproduct, build_corrupted_trinomial
from .exactnum import zeta

# (file, group, type, n, (g1, g2, chi1, chi2), parameters)
CANONICAL = [
    ("b2_n3_z3z3.json", (3, 3), "B2", 3, ((1, 0), (0, 1), (2, 0), (1, 1)), {}),
    ("b2_n3_z9z9.json", (9, 9), "B2", 3, ((1, 0), (0, 1), (6, 0), (3, 3)), {"mu1": 1, "mu2": 1, "lambda": 1, "gamma": 1}),
    ("a2_n7_z49.json", (49,), "A2", 7, ((1,), (4,), (7,), (14,)), {"mu1": 1, "mu2": 1, "lambda": 1}),
    ("a2_n3_z3z3.json", (3, 3), "A2", 3, ((1, 0), (0, 1), (1, 1), (1, 1)), {"gamma1": 1}),
]


def select_datum(group: tuple[int, ...], kind: str, n: int, exponents) -> YDDatum:
    target = YDDatum.from_exponents(group, *exponents)
    for d in datum_search(AbelianGroup(group), kind, n):
        if d == target:
            return d
    raise LookupError(f"{exponents} is not among the {kind} data on {group}")


def spec_files() -> dict[str, dict]:
    out = {}
    for name, group, kind, n, exps, params in CANONICAL:
        datum = select_datum(group, kind, n, exps)
        out[name] = {"datum": datum.to_json(), "type": kind, **params}
    return out


def presentation_files(specs: dict[str, dict] | None = None) -> dict[str, dict]:
    specs = specs or spec_files()
    z3z3 = LiftingSpec.from_json(specs["b2_n3_z3z3.json"]).datum
    return {
        "trinomial_q5.json": build_trinomial_algebra(zeta(5), 0, 1).to_json(),
        "corrupted_trinomial.json": build_corrupted_trinomial(zeta(5)).to_json(),
        "b2_biproduct_z3z3.json": build_biproduct(z3z3, "B2").to_json(),
    }


def all_files() -> dict[str, str]:
    specs = spec_files()
    files = {**specs, **presentation_files(specs)}
    return {name: json.dumps(data, indent=2, sort_keys=True) + "\n" for name, data in files.items()}


def write_fixtures(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in all_files().items():
        path = directory / name
        path.write_text(text)
        written.append(path)
    return written

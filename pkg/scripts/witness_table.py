"""Verify conjugation witnesses between every pair of admissible B2 liftings on Z9 x Z9."""

import itertools
import json
from pathlib import Path

from qlift.abelian import LiftingSpec, admissible
from qlift.liftings import quasi_iso_witness

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "b2_n3_z9z9.json"

if __name__ == "__main__":
    datum = LiftingSpec.from_json(json.loads(FIXTURE.read_text())).datum
    specs = [LiftingSpec(datum, "B2", *p) for p in itertools.product([0, 1], repeat=4)]
    specs = [s for s in specs if not admissible(s)]
    lengths = {}
    for a, b in itertools.product(specs, repeat=2):
        w = quasi_iso_witness(a, b)
        if not w.ok:
            raise SystemExit(f"witness failed: {a.params()} -> {b.params()}")
        lengths[len(w.steps)] = lengths.get(len(w.steps), 0) + 1
    print(f"{len(specs) ** 2} pairs verified; chain lengths {dict(sorted(lengths.items()))}")

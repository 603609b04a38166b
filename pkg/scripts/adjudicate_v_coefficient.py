"""Report which v-coefficient makes the B2 generator v skew-primitive on the Z9 x Z9 fixture."""

import json
from pathlib import Path

from qlift.abelian import LiftingSpec
from qlift.hopf import adjudicate_v_coefficient, hopf_ideal_check

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "b2_n3_z9z9.json"

if __name__ == "__main__":
    spec = LiftingSpec.from_json(json.loads(FIXTURE.read_text()))
    adj = adjudicate_v_coefficient(spec.datum)
    print(json.dumps({k: v for k, v in adj.items()}, indent=2))
    for which in ("q2", "q1"):
        rep = hopf_ideal_check(spec, which)
        failing = [g["generator"] for g in rep["generators"] if not g["ok"]]
        print(f"{which}: ok={rep['ok']} failing={failing}")

"""Command-line front end: ``qlift <group> <command> [flags]``.

Every command builds a JSON report; ``--format text`` renders that report.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 inadmissible spec.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .abelian import AbelianGroup, LiftingSpec, admissible, datum_search
from .builders import InadmissibleSpec, trinomial_expansion
from .exactnum import as_cyclotomic, parse_cyclotomic, zeta
from .hopf import delta, hopf_ideal_check
from .liftings import (
    HopfIdealFailure,
    absent_reason,
    build_lifting,
    dimension,
    quasi_iso_witness,
    verify_relations,
)
from .qcalc import NuParams, gqb_expand, nu_sequence
from .rewrite import Presentation, confluence_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INADMISSIBLE = 0, 1, 2, 3

GQB_ANCHOR = "(x + bz + t)^n = sum_{i,j} C(n,i)_q C(i,j)_q nu(i-j) t^j z^(i-j) x^(n-i)"


@dataclass
class RunConfig:
    group: str
    command: str
    args: dict = field(default_factory=dict)
    out: str | None = None
    fmt: str = "json"
    jobs: int = 1
    seed: int = 0


class UsageError(Exception):
    pass


# ---- commands -----------------------------------------------------------------


def _gqb_triples(seed: int) -> list[tuple]:
    rng = random.Random(seed)
    fixed = [zeta(3), zeta(5), zeta(12), as_cyclotomic(2)]
    extra = zeta(7, rng.randrange(1, 7))
    qs = fixed + [extra]
    return [(q, as_cyclotomic(rng.randint(-5, 5)), as_cyclotomic(rng.randint(-5, 5))) for q in qs]


def _gqb_one(job: tuple) -> dict:
    q, b, lam, n = job
    engine = trinomial_expansion(q, b, lam, n)
    formula = gqb_expand(n, NuParams(b, lam, q))
    keys = set(engine) | set(formula)
    zero = as_cyclotomic(0)
    ok = all(engine.get(k, zero) == formula.get(k, zero) for k in keys)
    return {"check": f"gqb n={n} q={q} b={b} lambda={lam}", "anchor": GQB_ANCHOR, "status": "pass" if ok else "fail"}


def cmd_qbinom_verify(cfg: RunConfig) -> dict:
    n_max = cfg.args["n_max"]
    jobs = [(q, b, lam, n) for q, b, lam in _gqb_triples(cfg.seed) for n in range(n_max + 1)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            checks = list(pool.map(_gqb_one, jobs))
    else:
        checks = [_gqb_one(j) for j in jobs]
    return {"checks": checks, "ok": all(c["status"] == "pass" for c in checks)}


def cmd_nu_table(cfg: RunConfig) -> dict:
    a = cfg.args
    p = NuParams(parse_cyclotomic(a["b"]), parse_cyclotomic(a["lam"]), parse_cyclotomic(a["q"]))
    nus = nu_sequence(a["n"], p)
    table = {n: {f"{i},{j}": str(c) for (i, j), c in gqb_expand(n, p).items()} for n in range(a["n"] + 1)}
    return {"nu": [str(v) for v in nus], "gqb": table, "ok": True}


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_pres(path: str) -> Presentation:
    return Presentation.from_json(_load_json(path))


def _load_spec(path: str) -> LiftingSpec:
    spec = LiftingSpec.from_json(_load_json(path))
    problems = admissible(spec)
    if problems:
        raise InadmissibleSpec("; ".join(problems))
    return spec


def cmd_alg_normalize(cfg: RunConfig) -> dict:
    P = _load_pres(cfg.args["pres"])
    nf = P.parse_element(cfg.args["word"])
    return {"input": cfg.args["word"], "normal_form": str(nf), "ok": True}


def cmd_alg_confluence(cfg: RunConfig) -> dict:
    rep = confluence_check(_load_pres(cfg.args["pres"]))
    return {**rep.to_json(), "anchor": "every critical pair resolves", "ok": rep.confluent}


def cmd_hopf_delta(cfg: RunConfig) -> dict:
    P = _load_pres(cfg.args["pres"])
    return {"element": cfg.args["elt"], "delta": str(delta(P, P.parse_element(cfg.args["elt"]))), "ok": True}


def cmd_hopf_ideal_check(cfg: RunConfig) -> dict:
    rep = hopf_ideal_check(_load_spec(cfg.args["spec"]))
    for g in rep["generators"]:
        g["anchor"] = "eps(j) = 0, Delta(j) in J(x)U + U(x)J, S(j) in J"
    return rep


def cmd_datum_search(cfg: RunConfig) -> dict:
    try:
        factors = [int(x) for x in cfg.args["factors"].split(",") if x]
    except ValueError as exc:
        raise UsageError(f"bad --group {cfg.args['factors']!r}") from exc
    found = datum_search(AbelianGroup(tuple(factors)), cfg.args["type"], cfg.args["n"])
    return {"data": [d.to_json() for d in found], "count": len(found), "ok": bool(found)}


def cmd_lift_build(cfg: RunConfig) -> dict:
    spec = _load_spec(cfg.args["spec"])
    try:
        A = build_lifting(spec)
    except HopfIdealFailure as exc:
        return {"ok": False, "error": str(exc)}
    return {"presentation": A.to_json(), "ok": True}


def cmd_lift_verify(cfg: RunConfig) -> dict:
    return verify_relations(_load_spec(cfg.args["spec"])).to_json()


def cmd_lift_dim(cfg: RunConfig) -> dict:
    spec = _load_spec(cfg.args["spec"])
    dim = dimension(spec)
    anchor = "dimension n^4|Gamma|" if spec.type == "B2" else "dimension n^3|Gamma|"
    return {"dimension": dim, "anchor": anchor, "ok": True}


def cmd_lift_quasi(cfg: RunConfig) -> dict:
    source = _load_spec(cfg.args["spec"])
    if cfg.args.get("target"):
        target = _load_spec(cfg.args["target"])
    else:
        target = source.replace(mu1=0, mu2=0, lam=as_cyclotomic(0), gamma=as_cyclotomic(0),
                                gamma1=as_cyclotomic(0), gamma2=as_cyclotomic(0))
    w = quasi_iso_witness(source, target)
    if w is None:
        return {"witness": None, "note": absent_reason(source, target), "ok": True}
    return {"witness": w.to_json(), "ok": w.ok}


COMMANDS = {
    ("qbinom", "verify"): cmd_qbinom_verify,
    ("nu", "table"): cmd_nu_table,
    ("alg", "normalize"): cmd_alg_normalize,
    ("alg", "confluence"): cmd_alg_confluence,
    ("hopf", "delta"): cmd_hopf_delta,
    ("hopf", "ideal-check"): cmd_hopf_ideal_check,
    ("datum", "search"): cmd_datum_search,
    ("lift", "build"): cmd_lift_build,
    ("lift", "verify"): cmd_lift_verify,
    ("lift", "dim"): cmd_lift_dim,
    ("lift", "quasi"): cmd_lift_quasi,
}


# ---- parsing and output -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", help="write the report here as well as to stdout")
    common.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")

    parser = argparse.ArgumentParser(prog="qlift", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group: str, commands: dict) -> None:
        gp = groups.add_parser(group).add_subparsers(dest="command", required=True)
        for name, opts in commands.items():
            p = gp.add_parser(name, parents=[common])
            for flag, kw in opts:
                p.add_argument(flag, **kw)

    spec = ("--spec", {"required": True})
    pres = ("--pres", {"required": True})
    sub("qbinom", {"verify": [("--n-max", {"type": int, "default": 8, "dest": "n_max"})]})
    sub("nu", {"table": [("--n", {"type": int, "required": True}), ("--q", {"required": True}),
                         ("--b", {"default": "0"}), ("--lambda", {"default": "0", "dest": "lam"})]})
    sub("alg", {"normalize": [pres, ("--word", {"required": True})], "confluence": [pres]})
    sub("hopf", {"delta": [pres, ("--elt", {"required": True})], "ideal-check": [spec]})
    sub("datum", {"search": [("--group", {"required": True, "dest": "factors"}), ("--type", {"choices": ("A2", "B2"), "required": True}),
                             ("--n", {"type": int, "required": True})]})
    sub("lift", {"build": [spec], "verify": [spec], "dim": [spec], "quasi": [spec, ("--target", {})]})
    return parser


def render_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(report, dict):
        lines = []
        for k, v in report.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(report, list):
        return "\n".join(
            render_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in report
        )
    return f"{pad}{report}"


def run(cfg: RunConfig) -> int:
    handler = COMMANDS.get((cfg.group, cfg.command))
    if handler is None:
        print(f"unknown command {cfg.group} {cfg.command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = handler(cfg)
        code = EXIT_OK if report.get("ok", True) else EXIT_FAIL
    except InadmissibleSpec as exc:
        report, code = {"ok": False, "error": f"inadmissible: {exc}"}, EXIT_INADMISSIBLE
    except (UsageError, ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(report, indent=2, sort_keys=True) if cfg.fmt == "json" else render_text(report)
    if cfg.group == "lift" and cfg.command == "dim" and cfg.fmt == "text":
        text = str(report.get("dimension", text))
    print(text)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(ns).items() if k not in ("group", "command", "out", "fmt", "jobs", "seed")}
    cfg = RunConfig(ns.group, ns.command, opts, ns.out, ns.fmt, ns.jobs, ns.seed)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

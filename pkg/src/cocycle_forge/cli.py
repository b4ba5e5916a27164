"""cocycle-forge: cohomology dimensions, extension artifacts and verification reports.

Exit codes: 0 success, 1 a verification failed, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import fplin
from .cohom import h1, h2, shapiro_dim_route
from .extgrp import SAMPLED_PAIRS, SAMPLED_TRIPLES, aut_structure_check, full_pipeline, uniqueness_check
from .modrep import brauer_char_check, decompose_P, permutation_module, trivial_module
from .pgroup import point_stabilizer, psl2, validate_qp

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXHAUSTIVE_E_ORDER = 10**4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    q: int
    p: int
    out: str | None = None
    route: str | None = None
    seed: int = 0
    probes: int | None = None
    max_columns: int = fplin.SPARSE_COLUMN_CAP
    what: str = "all"
    sampled: bool = False

    def validate(self):
        try:
            validate_qp(self.q, self.p)
        except ValueError as exc:
            raise UsageError(f"invalid (q, p) = ({self.q}, {self.p}): {exc}") from None
        if self.probes is not None and self.probes < 1:
            raise UsageError("--probes must be positive")

    @property
    def triples(self):
        return self.probes or SAMPLED_TRIPLES

    @property
    def pairs(self):
        return self.probes or SAMPLED_PAIRS

    def to_json(self):
        return {"q": self.q, "p": self.p, "seed": self.seed, "probes": self.probes, "max_columns": self.max_columns}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _write(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def _line(ok, name, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  {detail}" if detail else ""))


# -- commands --

def cmd_cohomology(cfg: RunConfig) -> int:
    spec = validate_qp(cfg.q, cfg.p)
    L = psl2(spec, p=cfg.p)
    H = point_stabilizer(L)
    dec = decompose_P(permutation_module(L, cfg.p))
    V, IL, IH = dec.V, dec.I, trivial_module(H, cfg.p)
    direct_cols = (len(L) - 1) ** 2 * V.dim
    route = cfg.route or ("direct" if direct_cols <= cfg.max_columns else "borel")
    if route == "direct" and direct_cols > cfg.max_columns:
        raise UsageError(
            f"direct H^2(L, V) needs {direct_cols} columns (cap {cfg.max_columns}); rerun with --route borel"
        )
    dims = {
        "H1(L,V)": h1(L, V).h_dim,
        "H1(L,I_L)": h1(L, IL).h_dim,
        "H1(H,I_H)": h1(H, IH).h_dim,
    }
    if route == "direct":
        dims["H2(L,V)"] = h2(L, V, max_columns=cfg.max_columns).h_dim
        dims["H2(L,I_L)"] = h2(L, IL, max_columns=cfg.max_columns).h_dim
        dims["H2(H,I_H)"] = h2(H, IH, max_columns=cfg.max_columns).h_dim
    else:
        chain = shapiro_dim_route(L, H, cfg.p, max_columns=cfg.max_columns)
        dims.update({k: chain[k] for k in ("H2(L,V)", "H2(L,I_L)", "H2(H,I_H)")})
    expected = {"H1(L,V)": 1, "H2(L,V)": 1, "H1(L,I_L)": 0, "H2(L,I_L)": 0, "H1(H,I_H)": 1, "H2(H,I_H)": 1}
    checks = []
    for key in sorted(expected):
        ok = dims[key] == expected[key]
        checks.append({"name": key, "value": dims[key], "expected": expected[key], "pass": ok})
    additive = dims["H2(L,I_L)"] + dims["H2(L,V)"] == dims["H2(H,I_H)"]
    checks.append({"name": "additivity H2(L,I_L)+H2(L,V)=H2(H,I_H)", "pass": additive})
    print(f"q={cfg.q} p={cfg.p} route={route}")
    for c in checks:
        _line(c["pass"], c["name"], f"= {c['value']}" if "value" in c else "")
    report = {"config": cfg.to_json(), "route": route, "dims": dims, "checks": checks}
    if cfg.out:
        _write(cfg.out, report)
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


def cmd_build(cfg: RunConfig) -> int:
    try:
        res = full_pipeline(cfg.q, cfg.p, samples=cfg.triples, seed=cfg.seed)
    except RuntimeError as exc:
        print(f"build aborted: {exc}", file=sys.stderr)
        return EXIT_FAIL
    E = res.E
    artifact = {"config": cfg.to_json(), "extension": E.to_json(), "provenance": res.provenance}
    for r in res.provenance:
        _line(r["result"], f"{r['stage']}: {r['check']}")
    print(f"|V| = {cfg.p}^{E.dim} = {cfg.p ** E.dim}, |E| = {E.order}")
    if cfg.out:
        _write(cfg.out, artifact)
    else:
        sys.stdout.write(dumps(artifact))
    return EXIT_OK if all(r["result"] for r in res.provenance) else EXIT_FAIL


def _verify_character(cfg):
    spec = validate_qp(cfg.q, cfg.p)
    L = psl2(spec, p=cfg.p)
    V = decompose_P(permutation_module(L, cfg.p)).V
    rows = brauer_char_check(V, L)
    return [
        {"name": f"character:{r['class']}", "pass": r["pass"], "detail": r} for r in rows
    ]


def _verify_uniqueness(cfg, res):
    rep = uniqueness_check(cfg.q, cfg.p, route=cfg.route, pipeline=res, samples=cfg.pairs)
    return [{"name": "uniqueness", "pass": rep["pass"], "detail": rep}]


def _verify_aut(cfg, res):
    rep = aut_structure_check(res, exhaustive=not cfg.sampled, samples=cfg.pairs, seed=cfg.seed)
    out = [
        {"name": "aut:W_elementary_abelian", "pass": rep["W_elementary_abelian"] and rep["W_order"] == rep["W_order_expected"]},
        {"name": "aut:lifts", "pass": all(x["verified"] for x in rep["lifts"])},
        {"name": "aut:lifts_normalize_W", "pass": rep["lifts_normalize_W"]},
        {"name": "aut:induced_group_order", "pass": rep["induced_group_order"] == rep["PGammaL2_order"]},
        {"name": "aut:kernel_is_W", "pass": rep["kernel_is_W"]},
    ]
    out[0]["detail"] = rep
    return out


def cmd_verify(cfg: RunConfig) -> int:
    whats = ["character", "uniqueness", "aut"] if cfg.what == "all" else [cfg.what]
    res = None
    if "uniqueness" in whats or "aut" in whats:
        res = full_pipeline(cfg.q, cfg.p, samples=cfg.triples, seed=cfg.seed)
        if "aut" in whats and res.E.order > EXHAUSTIVE_E_ORDER and not cfg.sampled:
            raise UsageError(f"|E| = {res.E.order} is too large for exhaustive aut checks; pass --sampled")
    checks = []
    for w in whats:
        if w == "character":
            checks += _verify_character(cfg)
        elif w == "uniqueness":
            checks += _verify_uniqueness(cfg, res)
        else:
            checks += _verify_aut(cfg, res)
    checks.sort(key=lambda c: c["name"])
    for c in checks:
        _line(c["pass"], c["name"])
    if cfg.out:
        _write(cfg.out, {"config": cfg.to_json(), "checks": checks})
    return EXIT_OK if all(c["pass"] for c in checks) else EXIT_FAIL


COMMANDS = {"cohomology": cmd_cohomology, "build": cmd_build, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cocycle-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("cohomology", "dimensions of H^1 and H^2 for (L,V), (L,I_L), (H,I_H)"),
        ("build", "run the pipeline and write the extension artifact"),
        ("verify", "character, uniqueness and automorphism checks"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--out", default=None, help="JSON output path")
        sp.add_argument("--route", choices=["direct", "borel"], default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument(
            "--probes", type=int, default=None, help=f"random probes (default {SAMPLED_TRIPLES} triples, {SAMPLED_PAIRS} pairs)"
        )
        sp.add_argument("--max-columns", type=int, default=fplin.SPARSE_COLUMN_CAP)
        if name == "verify":
            sp.add_argument("--what", choices=["all", "character", "uniqueness", "aut"], default="all")
            sp.add_argument("--sampled", action="store_true", help="allow sampled mode for large extensions")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        q=args.q,
        p=args.p,
        out=args.out,
        route=args.route,
        seed=args.seed,
        probes=args.probes,
        max_columns=args.max_columns,
        what=getattr(args, "what", "all"),
        sampled=getattr(args, "sampled", False),
    )
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

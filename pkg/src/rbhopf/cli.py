"""Command-line entry point.

Exit status: 0 when every check passes, 1 on a failed check, 2 on input
that does not parse or validate, 3 when the enumeration budget is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import io
from .acceptance import run_all
from .algebra import basis_vector
from .descendent import PostLieExtension, build_descendent, check_b_homomorphism, grouplike_group, post_lie_dot
from .errors import AxiomViolation, BudgetExceeded, FactorizationError, RBHopfError, SpecError
from .groups import (DEFAULT_CAP, check_rb_group, descendent_group, enumerate_rb_group, s3_factorization,
                     tilde_group)
from .hopf import EnvelopingAlgebra, GroupAlgebra
from .lie import check_lie_axioms, check_rb_weight, companion, descendent_bracket, post_lie_product
from .operators import (antipode_rb, check_closure, check_coalgebra_map, check_rb_hopf,
                        extend_group_rb, extend_lie_rb, restrict_to_grouplikes, restrict_to_primitives,
                        split_rb_hopf, tilde_hopf)
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3

SUBCOMMANDS = ("verify-lie", "verify-rb-lie", "verify-group", "enumerate-group-rb", "extend-lie",
               "extend-group", "verify-rb-hopf", "tilde", "split", "descendent", "post-lie", "selftest")


@dataclass
class RunConfig:
    subcommand: str
    group: str | None = None
    algebra: str | None = None
    operator: str | None = None
    max_degree: int = 3
    cap: int = DEFAULT_CAP
    format: str = "json"
    out: str | None = None
    eval: str | None = None
    weight: str = "1"
    left: str | None = None
    right: str | None = None
    seed: int = 0

    def __post_init__(self):
        if self.max_degree < 1:
            raise SpecError("--max-degree must be at least 1")


class Outcome:
    """Collects reports and payload for one run."""

    def __init__(self):
        self.payload = {}
        self.reports: dict[str, Report] = {}
        self.raw = False  # payload printed as-is, no report wrapper

    def add(self, name: str, report: Report):
        self.reports[name] = report

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports.values())

    def to_json(self) -> dict:
        out = dict(self.payload)
        out["checks"] = {k: r.to_json() for k, r in self.reports.items()}
        out["ok"] = self.ok
        return out

    def to_text(self) -> str:
        lines = []
        for k, v in sorted(self.payload.items()):
            if isinstance(v, (dict, list)):
                lines.append(f"{k}:")
                lines.append("  " + io.dumps(v).strip().replace("\n", "\n  "))
            else:
                lines.append(f"{k}: {v}")
        for k, r in self.reports.items():
            lines.append(f"== {k}")
            lines.append(r.to_text())
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines) + "\n"


# helpers

def _sample(H, cfg: RunConfig):
    return H.basis() if isinstance(H, GroupAlgebra) else H.basis(cfg.max_degree)


def _default_lie_operator(cfg: RunConfig, name: str) -> str:
    if cfg.operator:
        return cfg.operator
    if name == "sl2":
        return "builtin:example1"
    raise SpecError("--operator is required for this algebra")


def _resolve_operator(cfg: RunConfig) -> tuple:
    """``(H, B, context)`` from --group/--algebra and --operator."""
    H, name, G, L = io.make_carrier(cfg.group, cfg.algebra)
    ref = cfg.operator
    ctx = {"carrier": H.name, "name": name, "group": G, "lie": L}
    if ref == "builtin:antipode":
        return H, antipode_rb(H), ctx
    if G is not None:
        if ref is None:
            raise SpecError("--operator is required with --group")
        if io.is_hopf_operator_file(ref):
            return H, io.hopf_operator_from_json(io.read_json(ref), H), ctx
        Bg = io.load_group_map(ref, G, name)
        ctx["group_map"] = Bg
        return H, extend_group_rb(G, Bg, H), ctx
    ref = _default_lie_operator(cfg, name)
    R = io.load_lie_operator(ref, L)
    ctx["lie_operator"] = R
    return H, extend_lie_rb(L, R, H), ctx


def _table(H, B, labels) -> dict:
    return {H.label_str(a): io.lincomb_to_json(H, B.on_basis(a)) for a in labels}


# subcommands

def cmd_verify_lie(cfg, out):
    name, L = io.load_lie_algebra(cfg.algebra or "builtin:sl2", check=False)
    out.payload.update(algebra=name, dimension=L.dim, basis=list(L.basis_names))
    out.add("lie_axioms", check_lie_axioms(L))


def cmd_verify_rb_lie(cfg, out):
    name, L = io.load_lie_algebra(cfg.algebra or "builtin:sl2")
    R = io.load_lie_operator(_default_lie_operator(cfg, name), L)
    lam = io._rational(cfg.weight)
    out.payload.update(algebra=name, weight=str(lam), operator=io.lie_operator_to_json(R))
    report = check_rb_weight(L, R, lam)
    out.add("rota_baxter", report)
    if lam == 1 and report.ok:
        out.add("companion_rota_baxter", check_rb_weight(L, companion(R), 1))


def cmd_verify_group(cfg, out):
    name, G = io.load_group(cfg.group or "builtin:S3")
    out.payload.update(group=name, order=G.order, abelian=G.is_abelian(), names=list(G.names))
    if cfg.operator:
        B = io.load_group_map(cfg.operator, G, name)
        out.payload["operator"] = io.group_map_to_json(B)
        report = check_rb_group(G, B)
        out.add("rota_baxter", report)
        if report.ok:
            out.payload["tilde"] = io.group_map_to_json(tilde_group(G, B))
            out.add("tilde_rota_baxter", check_rb_group(G, tilde_group(G, B)))
            out.payload["descendent_group"] = io.group_to_json(descendent_group(G, B))


def cmd_enumerate(cfg, out):
    name, G = io.load_group(cfg.group or "builtin:S3")
    ops = enumerate_rb_group(G, cap=cfg.cap)
    out.payload.update(group=name, order=G.order, **io.enumeration_to_json(ops, G))


def cmd_extend_lie(cfg, out):
    name, L = io.load_lie_algebra(cfg.algebra or "builtin:sl2")
    R = io.load_lie_operator(_default_lie_operator(cfg, name), L)
    U = EnvelopingAlgebra(L, name)
    B = extend_lie_rb(L, R, U)
    if cfg.eval is not None:
        try:
            exps = [int(v) for v in cfg.eval.split(",")]
            m = U.monomial(exps)
        except ValueError:
            raise SpecError(f"--eval expects {L.dim} comma-separated non-negative integers") from None
        out.payload = io.lincomb_to_json(U, B.on_basis(m))
        out.raw = True
        return
    sample = U.basis(cfg.max_degree)
    out.payload.update(algebra=name, operator=io.lie_operator_to_json(R), max_degree=cfg.max_degree,
                       action=_table(U, B, sample))
    out.add("rota_baxter", check_rb_hopf(B, sample))
    out.add("coalgebra_map", check_coalgebra_map(B, U.basis(cfg.max_degree + 1)))


def cmd_extend_group(cfg, out):
    name, G = io.load_group(cfg.group or "builtin:S3")
    if not cfg.operator:
        raise SpecError("--operator (a group map) is required")
    Bg = io.load_group_map(cfg.operator, G, name)
    H = GroupAlgebra(G, name)
    B = extend_group_rb(G, Bg, H)
    out.payload.update(group=name, operator=io.hopf_operator_to_json(B))
    out.add("rota_baxter", check_rb_hopf(B, H.basis()))
    out.add("coalgebra_map", check_coalgebra_map(B, H.basis()))


def cmd_verify_rb_hopf(cfg, out):
    H, B, ctx = _resolve_operator(cfg)
    sample = _sample(H, cfg)
    out.payload.update(carrier=ctx["carrier"], provenance=B.provenance, sample_size=len(sample))
    out.add("rota_baxter", check_rb_hopf(B, sample))
    out.add("coalgebra_map", check_coalgebra_map(B, sample))
    out.add("closure", check_closure(B, sample))


def cmd_tilde(cfg, out):
    H, B, ctx = _resolve_operator(cfg)
    T = tilde_hopf(B)
    sample = _sample(H, cfg)
    out.payload.update(carrier=ctx["carrier"], action=_table(H, T, sample))
    out.add("rota_baxter", check_rb_hopf(T, sample))
    out.add("coalgebra_map", check_coalgebra_map(T, sample))
    inv = Report(label_format=H.label_str)
    chk = inv.check("tilde(tilde(B)) = B")
    TT = tilde_hopf(T)
    for a in sample:
        chk.record((a,), TT.on_basis(a), B.on_basis(a))
    out.add("involution", inv)
    if isinstance(H, EnvelopingAlgebra):
        R = restrict_to_primitives(B)
        out.payload["restriction"] = io.lie_operator_to_json(restrict_to_primitives(T))
        out.payload["companion"] = io.lie_operator_to_json(companion(R))
    else:
        out.payload["restriction"] = io.group_map_to_json(restrict_to_grouplikes(T))
        out.payload["tilde_group"] = io.group_map_to_json(tilde_group(H.group, restrict_to_grouplikes(B)))
    if out.payload.get("restriction") != out.payload.get("companion", out.payload.get("tilde_group")):
        rep = Report()
        rep.check("restriction of tilde matches the group/Lie construction").record((), False, True)
        out.add("restriction", rep)


def _split_arg(s: str | None) -> list[str] | None:
    return None if s is None else [p.strip() for p in s.split(",") if p.strip()]


def cmd_split(cfg, out):
    group = cfg.group if cfg.group or cfg.algebra else "builtin:S3"
    H, name, G, L = io.make_carrier(group, cfg.algebra)
    left, right = _split_arg(cfg.left), _split_arg(cfg.right)
    if left is None or right is None:
        if G is not None and name == "S3":
            left, right = s3_factorization(G)
        elif L is not None and name == "sl2":
            left, right = ["x", "h"], ["y"]
        else:
            raise SpecError("--left and --right are required for this carrier")
    B = split_rb_hopf(H, left, right)
    sample = _sample(H, cfg)
    out.payload.update(carrier=H.name, action=_table(H, B, sample))
    out.add("rota_baxter", check_rb_hopf(B, sample))
    out.add("coalgebra_map", check_coalgebra_map(B, sample))


def cmd_descendent(cfg, out):
    H, B, ctx = _resolve_operator(cfg)
    sample = _sample(H, cfg)
    D = build_descendent(H, B, sample, check=False)
    out.payload.update(
        carrier=ctx["carrier"],
        star={f"{H.label_str(a)} * {H.label_str(b)}": io.lincomb_to_json(H, D.mul_basis(a, b))
              for a in sample for b in sample},
        s_b={H.label_str(a): io.lincomb_to_json(H, D.antipode_basis(a)) for a in sample},
    )
    out.add("hopf_axioms", D.hopf_report)
    out.add("descendent_identities", D.identity_report)
    out.add("b_homomorphism", check_b_homomorphism(B, sample, D=D))
    if isinstance(H, GroupAlgebra):
        out.payload["descendent_group"] = io.group_to_json(grouplike_group(D))


def cmd_post_lie(cfg, out):
    name, L = io.load_lie_algebra(cfg.algebra or "builtin:sl2")
    R = io.load_lie_operator(_default_lie_operator(cfg, name), L)
    table = post_lie_product(L, R)
    D = descendent_bracket(L, R)
    out.payload.update(
        algebra=name,
        post_lie_product={f"{L.basis_names[i]}.{L.basis_names[j]}": {L.basis_names[k]: str(c) for k, c in v.items()}
                          for (i, j), v in sorted(table.items())},
        descendent_algebra=io.lie_algebra_to_json(D),
    )
    U = EnvelopingAlgebra(L, name)
    B = extend_lie_rb(L, R, U)
    ext = PostLieExtension(U, R)
    rep = Report(label_format=U.label_str)
    chk = rep.check("B(f(1)) g S(B(f(2))) equals the recursive post-Lie extension")
    sample = U.basis(cfg.max_degree)
    for a in sample:
        for b in sample:
            chk.record((a, b), post_lie_dot(B, basis_vector(a), basis_vector(b)), ext.dot_basis(a, b))
    out.add("post_lie_extension", rep)
    out.add("descendent_jacobi", check_lie_axioms(D))


def cmd_selftest(cfg, out):
    results = run_all()
    out.payload["criteria"] = [
        {"criterion": r.number, "title": r.title, "ok": r.ok, "details": r.details} for r in results
    ]
    rep = Report()
    for r in results:
        rep.check(f"criterion {r.number}: {r.title}").record((), r.ok, True)
    out.add("acceptance", rep)


COMMANDS = {
    "verify-lie": cmd_verify_lie,
    "verify-rb-lie": cmd_verify_rb_lie,
    "verify-group": cmd_verify_group,
    "enumerate-group-rb": cmd_enumerate,
    "extend-lie": cmd_extend_lie,
    "extend-group": cmd_extend_group,
    "verify-rb-hopf": cmd_verify_rb_hopf,
    "tilde": cmd_tilde,
    "split": cmd_split,
    "descendent": cmd_descendent,
    "post-lie": cmd_post_lie,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbhopf", description="Rota-Baxter operators on cocommutative Hopf algebras")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="builtin:<name> or a group JSON file")
    common.add_argument("--algebra", help="builtin:<name> or a Lie algebra JSON file")
    common.add_argument("--operator", help="operator JSON file or builtin:<name>")
    common.add_argument("--max-degree", type=int, default=3, help="PBW degree cutoff for U(g) samples")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest group order to enumerate")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--eval", help="comma-separated PBW exponents, e.g. 0,1,1")
    common.add_argument("--weight", default="1", help="weight for verify-rb-lie")
    common.add_argument("--left", help="first factor for split (element or generator names, comma-separated)")
    common.add_argument("--right", help="second factor for split")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(cfg: RunConfig) -> tuple[int, str]:
    out = Outcome()
    try:
        COMMANDS[cfg.subcommand](cfg, out)
    except BudgetExceeded as exc:
        return EXIT_BUDGET, io.dumps({"error": "budget exceeded", "message": str(exc)})
    except (SpecError, FactorizationError) as exc:
        return EXIT_PARSE, io.dumps({"error": "invalid input", "message": str(exc)})
    except (AxiomViolation, RBHopfError) as exc:
        return EXIT_FAIL, io.dumps({"error": "check failed", "message": str(exc)})
    if out.raw:
        return EXIT_OK, io.dumps(out.payload)
    text = io.dumps(out.to_json()) if cfg.format == "json" else out.to_text()
    return (EXIT_OK if out.ok else EXIT_FAIL), text


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
    except SpecError as exc:
        sys.stderr.write(f"rbhopf: {exc}\n")
        return EXIT_PARSE
    status, text = run(cfg)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

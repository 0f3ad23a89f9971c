"""Command-line front end.

Every command builds one JSON-ready document with the shape

    {meta: {p, algebra, module, tool_version},
     degrees: [{n, dim, weights: [{weight, dim_C, dim_Z, dim_B, dim_H}],
                decompositions, verdict}], ...}

plus command-specific keys, and renders it as text, JSON or CSV.  Exit codes:
0 when nothing disagrees, 1 when some verdict is ``mismatch``, 2 on invalid
input.  ``paper-inconsistent`` verdicts do not change the exit code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .analysis import (
    INCONSISTENT,
    MATCH,
    MISMATCH,
    NOT_STATED,
    SESSpec,
    claims_report,
    cohomology_report,
    les_feasibility,
    peculiar_scan,
    verify_center_quotient,
    worst,
)
from .complex import CochainComplex, ComplexError
from .lie import LieAlgebra, Weight, build_sl3, center, load_algebra, quotient_by_center, verify_structure
from .linalg import is_prime
from .modules import (
    GModule,
    adjoint_module,
    check_module,
    dual_module,
    load_module,
    quotient_module_center,
    simple_module,
    trivial_module,
)
from .selftest import run_selftest

COMMANDS = ("cohomology", "ledger", "scan", "verify", "les", "lemma3", "center-quotient", "selftest")
EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class InvalidInput(ValueError):
    """Bad flag values or unreadable custom files; mapped to exit code 2."""


@dataclass
class RunConfig:
    command: str
    p: int = 3
    algebra: str = "sl3"
    module: str = "trivial"
    degree: int | None = None
    weight: Weight | None = None
    format: str = "text"
    output: str | None = None
    verify: bool = False
    sequence: tuple[str, str, str] = ("trivial", "adjoint", "quotient-center")


@dataclass
class Document:
    title: str
    doc: dict
    columns: list[str]
    rows: list[list]
    csv_columns: list[str] | None = None
    csv_rows: list[list] | None = None
    verdicts: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if MISMATCH in self.verdicts else EXIT_OK


# ------------------------------------------------------------------ parsing


def parse_weight(text: str) -> Weight:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"weight must look like a,b with integers, got {text!r}") from None
    return Weight(a, b)


def resolve_algebra(spec: str, p: int) -> LieAlgebra:
    if not is_prime(p) or not 2 <= p <= 13:
        raise InvalidInput(f"p must be a prime between 2 and 13, got {p}")
    if spec == "sl3":
        return build_sl3(p)
    if spec == "sl3-quotient":
        L = build_sl3(p)
        if not center(L):
            raise InvalidInput(f"sl3 has trivial center at p = {p}; no proper quotient")
        return quotient_by_center(L, strict=True)
    if spec.startswith("custom:"):
        try:
            L = load_algebra(spec[len("custom:") :])
        except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
            raise InvalidInput(f"cannot load algebra from {spec}: {exc}") from None
        if L.p != p:
            raise InvalidInput(f"custom algebra is over GF({L.p}) but --p is {p}")
        report = verify_structure(L)
        if not report.ok:
            raise InvalidInput("custom algebra is not a restricted Lie algebra: " + "; ".join(report.failures()))
        return L
    raise InvalidInput(f"unknown algebra {spec!r}; expected sl3, sl3-quotient or custom:<path>")


def resolve_module(spec: str, L: LieAlgebra) -> GModule:
    if spec == "trivial":
        return trivial_module(L)
    if spec == "adjoint":
        return adjoint_module(L)
    if spec == "quotient-center":
        if not center(L):
            raise InvalidInput(f"{L.name} has trivial center; quotient-center is undefined")
        return quotient_module_center(L)
    if spec.startswith("simple:"):
        w = parse_weight(spec[len("simple:") :])
        if not (0 <= w.a < L.p and 0 <= w.b < L.p):
            raise InvalidInput(f"simple:r,s needs 0 <= r,s < {L.p}, got {w.a},{w.b}")
        if not L.is_sl3_basis():
            raise InvalidInput("simple modules need the standard sl3 basis")
        return simple_module(L, w.a, w.b)
    if spec.startswith("dual-of:"):
        return dual_module(resolve_module(spec[len("dual-of:") :], L))
    if spec.startswith("custom:"):
        try:
            M = load_module(L, spec[len("custom:") :])
        except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
            raise InvalidInput(f"cannot load module from {spec}: {exc}") from None
        report = check_module(M)
        if not report.ok:
            raise InvalidInput(f"custom module fails the module axioms: {report}")
        return M
    raise InvalidInput(
        f"unknown module {spec!r}; expected trivial, adjoint, quotient-center, "
        "simple:r,s, dual-of:<spec> or custom:<path>"
    )


def claim_key(cfg: RunConfig) -> str | None:
    """Name of the registered claim set that applies to this configuration."""
    if cfg.p != 3 or cfg.algebra != "sl3":
        return None
    return {
        "trivial": "trivial",
        "simple:0,0": "trivial",
        "adjoint": "adjoint",
        "quotient-center": "L(1,1)",
        "simple:1,1": "L(1,1)",
    }.get(cfg.module)


def _meta(cfg: RunConfig, module: str | None = None) -> dict:
    return {"p": cfg.p, "algebra": cfg.algebra, "module": module if module is not None else cfg.module,
            "tool_version": __version__}


def _weight_row(e) -> dict:
    return {"weight": [e.weight.a, e.weight.b], "dim_C": e.dim_C, "dim_Z": e.dim_Z, "dim_B": e.dim_B,
            "dim_H": e.dim_H}


def _check_degree(cfg: RunConfig, top: int) -> None:
    if cfg.degree is not None and not 0 <= cfg.degree <= top:
        raise InvalidInput(f"degree must lie in 0..{top}, got {cfg.degree}")


def _check_weight(cfg: RunConfig) -> None:
    if cfg.weight is not None and not cfg.weight.divisible_by(cfg.p):
        raise InvalidInput(f"weight {tuple(cfg.weight)} is not divisible by p = {cfg.p}; only restricted weights carry cohomology")


# ------------------------------------------------------------------ commands


def cmd_cohomology(cfg: RunConfig) -> Document:
    L = resolve_algebra(cfg.algebra, cfg.p)
    M = resolve_module(cfg.module, L)
    _check_weight(cfg)
    cx = CochainComplex(M)
    _check_degree(cfg, cx.top)
    try:
        result = cx.cohomology(verify=cfg.verify)
    except ComplexError as exc:
        raise InvalidInput(f"complex failed its consistency checks: {exc}") from None
    report = cohomology_report(result, claim_key(cfg))
    degrees = [d for d in report.degrees if cfg.degree is None or d.n == cfg.degree]

    def keep(e):
        return cfg.weight is None or e.weight == cfg.weight

    out = []
    for d in degrees:
        out.append(
            {
                "n": d.n,
                "dim": d.dim,
                "weights": [_weight_row(e) for e in d.weights if keep(e)],
                "decompositions": [list(x) for x in d.decompositions],
                "verdict": d.verdict,
            }
        )
    cols_w = sorted({e.weight for d in degrees for e in d.weights if e.dim_H and keep(e)})
    if cfg.weight is not None:
        cols_w = [cfg.weight]
    rows = []
    for d in degrees:
        by_w = {e.weight: e.dim_H for e in d.weights}
        dec = " | ".join(" + ".join(x) or "0" for x in d.decompositions) or "-"
        rows.append([d.n, d.dim] + [by_w.get(w, 0) for w in cols_w] + [d.verdict, dec])
    csv_rows = []
    for o in out:
        for w in o["weights"] or [None]:
            wa = w["weight"] if w else ["", ""]
            vals = [w[k] for k in ("dim_C", "dim_Z", "dim_B", "dim_H")] if w else ["", "", "", ""]
            csv_rows.append([o["n"], o["dim"], *wa, *vals, o["verdict"]])
    doc = {"meta": _meta(cfg), "degrees": out}
    if report.notes:
        doc["notes"] = report.notes
    return Document(
        f"H^n({L.name}, {M.name}) over GF({cfg.p}); columns give dim H at each restricted weight",
        doc,
        ["n", "dim"] + [f"({w.a},{w.b})" for w in cols_w] + ["verdict", "decomposition"],
        rows,
        ["n", "dim", "weight_a", "weight_b", "dim_C", "dim_Z", "dim_B", "dim_H", "verdict"],
        csv_rows,
        [d.verdict for d in degrees],
    )


def cmd_ledger(cfg: RunConfig) -> Document:
    if cfg.weight is None:
        raise InvalidInput("ledger needs --weight a,b")
    _check_weight(cfg)
    L = resolve_algebra(cfg.algebra, cfg.p)
    M = resolve_module(cfg.module, L)
    cx = CochainComplex(M)
    _check_degree(cfg, cx.top)
    ledger = cx.weight_ledger(cfg.weight)
    key = claim_key(cfg)
    claimed: dict[int, list] = {}
    if key is not None:
        for r in claims_report(cfg.p).rows:
            c = r.claim
            if c.kind == "ledger" and c.module == key and c.weight == cfg.weight:
                claimed.setdefault(c.n, []).append(r)
    degrees, rows = [], []
    for e in ledger:
        if cfg.degree is not None and e.n != cfg.degree:
            continue
        verdict = worst([r.verdict for r in claimed.get(e.n, [])] or [NOT_STATED])
        expected = {r.claim.quantity: r.claim.expected[0] for r in claimed.get(e.n, [])}
        degrees.append({"n": e.n, "dim": e.dim_H, "weights": [_weight_row(e)], "decompositions": [],
                        "verdict": verdict, "expected": dict(sorted(expected.items()))})
        shown = ", ".join(f"{q}={v}" for q, v in sorted(expected.items())) or "-"
        rows.append([e.n, e.dim_C, e.dim_Z, e.dim_B, e.dim_H, shown, verdict])
    csv_rows = [[r[0], cfg.weight.a, cfg.weight.b, *r[1:5], r[6]] for r in rows]
    return Document(
        f"weight ({cfg.weight.a},{cfg.weight.b}) subcomplex of C^*({L.name}, {M.name}) over GF({cfg.p})",
        {"meta": _meta(cfg), "degrees": degrees},
        ["n", "C", "Z", "B", "H", "claimed", "verdict"],
        rows,
        ["n", "weight_a", "weight_b", "dim_C", "dim_Z", "dim_B", "dim_H", "verdict"],
        csv_rows,
        [d["verdict"] for d in degrees],
    )


def cmd_scan(cfg: RunConfig) -> Document:
    resolve_algebra("sl3", cfg.p)
    scan = peculiar_scan(cfg.p)
    peculiar = sorted(r.weight for r in scan if r.peculiar)
    verdict = NOT_STATED
    if cfg.p == 3:
        verdict = claims_report(3).by_id("peculiar.3").verdict
    rows, entries = [], []
    for r in scan:
        rows.append([f"({r.weight.a},{r.weight.b})", r.module_dim, " ".join(map(str, r.dims)), r.total,
                     "yes" if r.peculiar else "no"])
        entries.append({"weight": [r.weight.a, r.weight.b], "dim": r.module_dim, "dims": list(r.dims),
                        "total": r.total, "peculiar": r.peculiar})
    doc = {"meta": _meta(cfg, "simple:*"), "degrees": [], "scan": entries,
           "peculiar": [[w.a, w.b] for w in peculiar], "verdict": verdict}
    return Document(
        f"restricted simple modules L(r,s) of sl3 over GF({cfg.p}); peculiar = nonzero cohomology",
        doc, ["L(r,s)", "dim", "dim H^0..H^8", "total", "peculiar"], rows, verdicts=[verdict],
    )


def _plain(v):
    if isinstance(v, Weight):
        return [v.a, v.b]
    if isinstance(v, (frozenset, set)):
        return sorted((_plain(x) for x in v), key=json.dumps)
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if hasattr(v, "item"):
        return v.item()
    return v


def cmd_verify(cfg: RunConfig) -> Document:
    if cfg.p != 3:
        raise InvalidInput("registered claims exist for p = 3 only")
    rep = claims_report(3)
    claims, rows = [], []
    for r in rep.rows:
        c = r.claim
        if cfg.degree is not None and c.n is not None and c.n != cfg.degree:
            continue
        claims.append({"id": c.id, "kind": c.kind, "module": c.module, "statement": c.statement,
                       "expected": _plain(list(c.expected)), "computed": _plain(r.computed),
                       "verdict": r.verdict, "note": c.note})
        if r.verdict != MATCH:
            rows.append([c.id, _short(c.expected[0]), _short(r.computed), r.verdict])
    findings = [{"kind": f.kind, "module": f.module, "weight": _plain(f.weight), "detail": f.detail,
                 "implicated": f.implicated} for f in rep.findings]
    counts = {k: sum(1 for c in claims if c["verdict"] == k) for k in (MATCH, INCONSISTENT, MISMATCH)}
    doc = {"meta": _meta(cfg, "*"), "degrees": [], "claims": claims, "findings": findings, "counts": counts}
    title = (f"{len(claims)} claims: {counts[MATCH]} match, {counts[INCONSISTENT]} paper-inconsistent, "
             f"{counts[MISMATCH]} mismatch; {len(findings)} internal findings.  Non-matching rows:")
    return Document(title, doc, ["claim", "expected", "computed", "verdict"], rows,
                    verdicts=[c["verdict"] for c in claims])


def _short(v) -> str:
    text = json.dumps(_plain(v))
    return text if len(text) <= 40 else text[:37] + "..."


def cmd_les(cfg: RunConfig) -> Document:
    L = resolve_algebra(cfg.algebra, cfg.p)
    mods = [resolve_module(s, L) for s in cfg.sequence]
    results = [CochainComplex(M).cohomology() for M in mods]
    try:
        spec = SESSpec(tuple(cfg.sequence), tuple(M.dim for M in mods), *(r.dims for r in results))
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    res = les_feasibility(spec)
    rows = [[name, dim, rank] for (name, dim), rank in zip(res.terms, res.ranks + [""] * len(res.terms))]
    verdict = MATCH if res.feasible else MISMATCH
    doc = {
        "meta": _meta(cfg, " -> ".join(cfg.sequence)),
        "degrees": [],
        "les": {"feasible": res.feasible, "failure": res.failure,
                "terms": [{"term": t, "dim": d} for t, d in res.terms], "ranks": list(res.ranks)},
        "verdict": verdict,
    }
    title = f"long exact sequence for 0 -> {' -> '.join(cfg.sequence)} -> 0: " + (
        "feasible" if res.feasible else f"infeasible ({res.failure})")
    return Document(title, doc, ["term", "dim", "rank of outgoing map"], rows, verdicts=[verdict])


def cmd_center_quotient(cfg: RunConfig) -> Document:
    resolve_algebra("sl3-quotient", cfg.p)
    rep = verify_center_quotient(cfg.p)
    rows, degrees = [], []
    for n, a, b, eq in rep.rows:
        if cfg.degree is not None and n != cfg.degree:
            continue
        verdict = NOT_STATED if n == 0 else (MATCH if eq else MISMATCH)
        rows.append([n, a, b, "yes" if eq else "no", verdict])
        degrees.append({"n": n, "dim": a, "dim_restricted": b, "weights": [], "decompositions": [],
                        "verdict": verdict})
    return Document(
        f"H^n(gbar, gbar) against H^n(g, gbar) over GF({cfg.p}), gbar = g / center",
        {"meta": _meta(cfg, "quotient-center"), "degrees": degrees},
        ["n", "H(gbar,gbar)", "H(g,gbar)", "equal", "verdict"], rows,
        verdicts=[d["verdict"] for d in degrees],
    )


def cmd_selftest(cfg: RunConfig) -> Document:
    algebra = None if cfg.algebra == "sl3" else resolve_algebra(cfg.algebra, cfg.p)
    if algebra is None:
        resolve_algebra("sl3", cfg.p)
    rep = run_selftest(cfg.p, algebra)
    rows = [[c.name, "pass" if c.ok else "FAIL", c.detail] for c in rep.checks]
    verdicts = [MATCH if c.ok else MISMATCH for c in rep.checks]
    doc = {"meta": _meta(cfg, "*"), "degrees": [],
           "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in rep.checks], "ok": rep.ok}
    n_fail = sum(not c.ok for c in rep.checks)
    return Document(f"selftest: {len(rep.checks) - n_fail} passed, {n_fail} failed", doc,
                    ["check", "result", "detail"], rows, verdicts=verdicts)


HANDLERS = {
    "cohomology": cmd_cohomology,
    "ledger": cmd_ledger,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "les": cmd_les,
    "lemma3": cmd_center_quotient,
    "center-quotient": cmd_center_quotient,
    "selftest": cmd_selftest,
}


# ------------------------------------------------------------------ output


def render(document: Document, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document.doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(document.csv_columns or document.columns)
        w.writerows(document.csv_rows if document.csv_rows is not None else document.rows)
        return buf.getvalue()
    numeric = [all(isinstance(r[i], int) for r in document.rows) for i in range(len(document.columns))]
    table = [document.columns] + [[str(x) for x in r] for r in document.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(document.columns))]
    lines = [document.title, ""]
    for k, r in enumerate(table):
        cells = [x.rjust(w) if num else x.ljust(w) for x, w, num in zip(r, widths, numeric)]
        lines.append("  ".join(cells).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute ``cfg``; write the document; return the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        if cfg.command not in HANDLERS:
            raise InvalidInput(f"unknown command {cfg.command!r}")
        document = HANDLERS[cfg.command](cfg)
    except InvalidInput as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    text = render(document, cfg.format)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return document.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="field characteristic (prime, 2..13)")
    common.add_argument("--algebra", default="sl3", help="sl3 | sl3-quotient | custom:<path>")
    common.add_argument("--module", default="trivial",
                        help="trivial | adjoint | quotient-center | simple:r,s | dual-of:<spec> | custom:<path>")
    common.add_argument("--degree", type=int, help="restrict output to one degree")
    common.add_argument("--weight", help="restricted weight a,b (fundamental-weight coordinates)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", help="write the document here instead of stdout")

    parser = argparse.ArgumentParser(prog="sl3coh", description="Restricted Lie algebra cohomology of sl3")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "cohomology": "dim H^n(g, M) per degree and weight, with decompositions",
        "ledger": "dim C, Z, B, H of one weight subcomplex",
        "scan": "cohomology of all restricted simple modules",
        "verify": "compare every registered claim with computation",
        "les": "feasibility of the long exact sequence of a short exact sequence",
        "lemma3": "compare H(gbar, gbar) with H(g, gbar)",
        "selftest": "run the invariant suite",
    }
    for name, text in helps.items():
        aliases = ["center-quotient"] if name == "lemma3" else []
        sp = sub.add_parser(name, parents=[common], help=text, aliases=aliases)
        if name == "cohomology":
            sp.add_argument("--verify", action="store_true", help="cross-check against full-complex ranks")
        if name == "les":
            sp.add_argument("--sequence", nargs=3, metavar=("SUB", "MID", "QUOT"),
                            default=["trivial", "adjoint", "quotient-center"],
                            help="module specs of the short exact sequence")
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    command = "lemma3" if ns.command == "center-quotient" else ns.command
    return RunConfig(
        command=command,
        p=ns.p,
        algebra=ns.algebra,
        module=ns.module,
        degree=ns.degree,
        weight=parse_weight(ns.weight) if ns.weight is not None else None,
        format=ns.format,
        output=ns.output,
        verify=getattr(ns, "verify", False),
        sequence=tuple(getattr(ns, "sequence", ("trivial", "adjoint", "quotient-center"))),
    )


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # argparse usage errors exit with 2 already
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

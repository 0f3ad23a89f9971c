"""Invariant suite over the built-in algebras and modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .complex import CochainComplex, ComplexError, duality_check, euler_audit
from .lie import LieAlgebra, build_sl3, center, quotient_by_center, verify_structure
from .modules import (
    GModule,
    adjoint_module,
    check_module,
    dual_module,
    quotient_module_center,
    simple_module,
    trivial_module,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SelftestReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


def builtin_modules(L: LieAlgebra) -> list[GModule]:
    mods = [trivial_module(L), adjoint_module(L)]
    if center(L):
        mods.append(quotient_module_center(L))
    if L.is_sl3_basis():
        mods += [simple_module(L, r, s) for r, s in product(range(L.p), repeat=2)]
    return mods


def run_selftest(p: int = 3, algebra: LieAlgebra | None = None, modules=None) -> SelftestReport:
    """Structure, module laws, d^2 = 0, weight blocks, Euler audit, duality."""
    rep = SelftestReport()
    L = algebra if algebra is not None else build_sl3(p)
    s = verify_structure(L)
    rep.add(f"structure {L.name}", s.ok, "; ".join(s.failures()))
    if not s.ok:
        return rep
    algebras = [L]
    if algebra is None and center(L):
        Q = quotient_by_center(L, strict=True)
        sq = verify_structure(Q)
        rep.add(f"structure {Q.name}", sq.ok, "; ".join(sq.failures()))
        algebras.append(Q)

    mods = list(modules) if modules is not None else builtin_modules(L)
    if algebra is None and len(algebras) > 1:
        mods.append(adjoint_module(algebras[1]))
    for M in mods:
        tag = f"{M.algebra.name}/{M.name}"
        mr = check_module(M)
        rep.add(f"module laws {tag}", mr.ok, str(mr) if not mr.ok else "")
        cx = CochainComplex(M)
        bad = cx.check_d_squared()
        rep.add(f"d^2 = 0 {tag}", not bad, f"fails after degrees {bad}" if bad else "")
        if bad:
            continue
        blocks = cx.check_weight_blocks()
        rep.add(f"weight blocks {tag}", not blocks, f"degrees {blocks}" if blocks else "")
        try:
            euler_audit(cx)
            cx.cohomology(verify=M.dim <= 8)
            rep.add(f"euler + rank-nullity {tag}", True)
        except ComplexError as exc:
            rep.add(f"euler + rank-nullity {tag}", False, str(exc))

    if modules is None:
        for M in mods[:3]:
            try:
                rows = duality_check(CochainComplex(M))
            except ComplexError as exc:
                rep.add(f"duality {M.name}", False, str(exc))
            else:
                bad = [r.n for r in rows if not r.equal]
                rep.add(f"duality {M.name}", not bad, f"degrees {bad}" if bad else "")
            back = dual_module(dual_module(M))
            rep.add(f"double dual {M.name}", back.character() == M.character())
    return rep

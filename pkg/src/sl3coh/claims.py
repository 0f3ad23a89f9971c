"""Published dimension claims for sl_3 in characteristic 3, as data.

Each claim is one checkable number, set, decomposition or relation system.
Computation code never reads this table; :func:`sl3coh.analysis.claims_report`
compares it against computed values.  Where a published statement is printed
with an obvious label slip (a C written for a Z, a duplicated subscript), the
claim records the evident intent and says so in ``note``.

Module keys:
    trivial   the one-dimensional trivial module k
    L(1,1)    the 7-dimensional simple module g / center
    adjoint   g acting on itself
    gbar      the quotient algebra g / center acting on itself
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lie import Weight

TABLE_VERSION = "1"

L10, L01, L11, H0, K = "L(1,0)^(1)", "L(0,1)^(1)", "L(1,1)^(1)", "H0(1,1)^(1)", "k"


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # total | vanishing | ledger | decomposition | support | relations | representative | peculiar | equal
    module: str
    statement: str
    expected: tuple  # alternatives; a match against any one counts
    n: int | None = None
    weight: Weight | None = None
    quantity: str | None = None  # C, Z or H for ledger claims
    data: dict = field(default_factory=dict, compare=False)
    note: str = ""


def _totals(module: str, values, alternatives=None, note="") -> list[Claim]:
    alternatives = alternatives or {}
    out = []
    for n, v in enumerate(values):
        alt = tuple(alternatives.get(n, ()))
        out.append(
            Claim(
                f"total.{module}.{n}",
                "total",
                module,
                f"dim H^{n}(g, {module}) = {v}",
                (v,) + alt,
                n=n,
                note=note if alt else "",
            )
        )
    return out


def _decomps(module: str, table: dict, alternatives=None, note="") -> list[Claim]:
    alternatives = alternatives or {}
    out = []
    for n, names in sorted(table.items()):
        names = tuple(sorted(names))
        alt = tuple(tuple(sorted(a)) for a in alternatives.get(n, ()))
        shown = " + ".join(names) or "0"
        out.append(
            Claim(
                f"decomp.{module}.{n}",
                "decomposition",
                module,
                f"H^{n}(g, {module}) = {shown}",
                (names,) + alt,
                n=n,
                note=note if alt else "",
            )
        )
    return out


def _ledger(module: str, weight, quantity: str, values: dict, notes=None) -> list[Claim]:
    w = Weight(*weight)
    notes = notes or {}
    return [
        Claim(
            f"ledger.{module}.{w}.{quantity}.{n}",
            "ledger",
            module,
            f"dim {quantity}^{n}_{w}({module}) = {v}",
            (v,),
            n=n,
            weight=w,
            quantity=quantity,
            note=notes.get(n, ""),
        )
        for n, v in sorted(values.items())
    ]


def _full(values) -> dict:
    return dict(enumerate(values))


# Nonzero p-divisible weights of the small cochain spaces.
_SEVEN = frozenset(Weight(*w) for w in [(0, 0), (3, 0), (-3, 0), (3, -3), (-3, 3), (0, 3), (0, -3)])
_THIRTEEN = _SEVEN | frozenset(Weight(*w) for w in [(3, 3), (-3, -3), (6, -3), (-6, 3), (-3, 6), (3, -6)])


def _support(module: str, n: int, weights: frozenset) -> Claim:
    return Claim(
        f"support.{module}.{n}",
        "support",
        module,
        f"p-divisible weights of C^{n}({module}) = {sorted(weights)}",
        (weights,),
        n=n,
    )


CLAIMS: list[Claim] = []

# ---------------------------------------------------------------- trivial k
CLAIMS += _totals("trivial", (1, 0, 6, 7, 0, 7, 6, 0, 1))
CLAIMS += _decomps(
    "trivial",
    {0: [K], 1: [], 2: [L10, L01], 3: [L10, L01, K], 4: [], 5: [L10, L01, K], 6: [L10, L01], 7: [], 8: [K]},
)
CLAIMS += [_support("trivial", n, _SEVEN) for n in (2, 3, 4)]
CLAIMS += _ledger("trivial", (0, 0), "C", {1: 2, 2: 4, 3: 8, 4: 10})
CLAIMS += _ledger("trivial", (0, 0), "Z", {1: 0, 2: 2, 3: 3, 4: 5})
CLAIMS += _ledger("trivial", (0, 0), "H", {2: 0, 3: 1, 4: 0})
CLAIMS += _ledger("trivial", (3, 0), "C", {1: 0, 2: 1, 3: 2})
CLAIMS += _ledger("trivial", (3, 0), "Z", {2: 1, 3: 1, 4: 1}, notes={4: "printed with the same weight twice"})
CLAIMS += _ledger("trivial", (3, 0), "H", {2: 1, 4: 0})
CLAIMS += _ledger("trivial", (0, 3), "C", {3: 2})
CLAIMS += _ledger("trivial", (0, 3), "Z", {3: 1, 4: 1}, notes={4: "printed with the same weight twice"})
CLAIMS += _ledger("trivial", (0, 3), "H", {4: 0})
CLAIMS += [
    Claim(
        "relations.trivial.2",
        "relations",
        "trivial",
        "weight-0 2-cocycles a1 h1^h2 + a2 e1^f1 + a3 e2^f2 + a4 e3^f3: a1 = 0, a4 = a2 + a3",
        (True,),
        n=2,
        weight=Weight(0, 0),
        data={
            "basis": ["h1 h2", "e1 f1", "e2 f2", "e3 f3"],
            "relations": [[1, 0, 0, 0], [0, 1, 1, -1]],
        },
    ),
    Claim(
        "relations.trivial.3",
        "relations",
        "trivial",
        "weight-0 3-cocycles: five linear relations on b1..b8",
        (True,),
        n=3,
        weight=Weight(0, 0),
        data={
            "basis": ["h1 e1 f1", "h2 e1 f1", "h1 e2 f2", "h2 e2 f2", "h1 e3 f3", "h2 e3 f3", "e3 f1 f2", "e1 e2 f3"],
            "relations": [
                [1, 1, 0, 0, 1, 0, 1, -1],
                [0, 1, 1, 0, 0, 0, -1, 1],
                [0, 0, 1, 1, 0, 1, 1, -1],
                [0, 0, 0, 2, 0, 0, 2, -2],
                [0, 0, 0, 0, 2, 2, 2, -2],
            ],
        },
    ),
    Claim(
        "relations.trivial.4",
        "relations",
        "trivial",
        "weight-0 4-cocycles: b1 = b2 = b3 = 0, b4 = b6, b5 = b7",
        (True,),
        n=4,
        weight=Weight(0, 0),
        data={
            "basis": [
                "h1 h2 e1 f1", "h1 h2 e2 f2", "h1 h2 e3 f3", "h1 e1 e2 f3", "h2 e1 e2 f3",
                "h1 e3 f1 f2", "h2 e3 f1 f2", "e1 e2 f1 f2", "e1 e3 f1 f3", "e2 e3 f2 f3",
            ],
            "relations": [
                [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                [0, 0, 0, 1, 0, -1, 0, 0, 0, 0],
                [0, 0, 0, 0, 1, 0, -1, 0, 0, 0],
            ],
        },
    ),
    Claim(
        "representative.trivial.2.(3,0)",
        "representative",
        "trivial",
        "Z^2 at weight (3,0) is spanned by f1*^f3*",
        (frozenset({"f1*^f3*"}),),
        n=2,
        weight=Weight(3, 0),
        note="the same passage also names f1*^f2*, whose weight is (1,1); read as f1*^f3*",
    ),
]

# ------------------------------------------------------------------ L(1,1)
_H4_SINGLE = "a later derivation of the adjoint case states H^4 = H0(1,1)^(1) once"
CLAIMS += _totals("L(1,1)", (0, 7, 0, 8, 16, 8, 0, 7, 0), alternatives={4: (8,)}, note=_H4_SINGLE)
CLAIMS += _decomps(
    "L(1,1)",
    {0: [], 1: [L10, L01, K], 2: [], 3: [H0], 4: [H0, H0], 5: [H0], 6: [], 7: [L10, L01, K], 8: []},
    alternatives={4: ([H0],)},
    note=_H4_SINGLE,
)
CLAIMS += [_support("L(1,1)", n, frozenset({Weight(0, 0)})) for n in (0, 8)]
CLAIMS += [_support("L(1,1)", n, _SEVEN) for n in (1, 2, 6, 7)]
CLAIMS += [_support("L(1,1)", n, _THIRTEEN) for n in (3, 4)]

CLAIMS += _ledger("L(1,1)", (0, 0), "C", _full((1, 8, 22, 38, 44, 38, 22, 8, 1)))
CLAIMS += _ledger(
    "L(1,1)", (0, 0), "Z", _full((0, 2, 6, 18, 24, 18, 6, 2, 0)), notes={8: "printed as dim C^8_0 = 0"}
)
CLAIMS += _ledger("L(1,1)", (0, 0), "H", _full((0, 1, 0, 2, 4, 2, 0, 1, 0)))
for _w in ((3, 0), (0, 3)):
    CLAIMS += _ledger("L(1,1)", _w, "C", _full((0, 2, 7, 14, 18, 14, 7, 2, 0)))
    CLAIMS += _ledger(
        "L(1,1)",
        _w,
        "Z",
        _full((0, 1, 1, 6, 8, 6, 1, 1, 0)),
        notes={3: "printed as dim C^3", 4: "printed as dim C^4", 5: "printed as dim C^5"},
    )
    CLAIMS += _ledger("L(1,1)", _w, "H", _full((0, 1, 0, 0, 0, 0, 0, 1, 0)))
CLAIMS += _ledger("L(1,1)", (3, 3), "C", _full((0, 0, 0, 1, 2, 1, 0, 0, 0)))
CLAIMS += _ledger("L(1,1)", (3, 3), "Z", _full((0, 0, 0, 1, 2, 1, 0, 0, 0)))
CLAIMS += _ledger("L(1,1)", (3, 3), "H", _full((0, 0, 0, 1, 2, 1, 0, 0, 0)))

# ------------------------------------------------------------------ adjoint
CLAIMS += _totals("adjoint", (1, 1, 0, 15, 16, 15, 6, 7, 1), alternatives={4: (8,)}, note=_H4_SINGLE)
CLAIMS += _decomps(
    "adjoint",
    {
        0: [K], 1: [K], 2: [], 3: [L10, L01, H0, K], 4: [H0, H0],
        5: [L10, L01, H0, K], 6: [L10, L01], 7: [L10, L01, K], 8: [K],
    },
    alternatives={4: ([H0],)},
    note=_H4_SINGLE,
)
CLAIMS.append(
    Claim("adjoint.H2.imported", "vanishing", "adjoint", "H^2(g, g) = 0 (imported fact)", (0,), n=2)
)

# ------------------------------------------------- quotient algebra / scan
CLAIMS += [
    Claim(
        f"equal.gbar.{n}",
        "equal",
        "gbar",
        f"H^{n}(gbar, gbar) = H^{n}(g, gbar)",
        (True,),
        n=n,
    )
    for n in range(1, 8)
]
CLAIMS.append(
    Claim(
        "peculiar.3",
        "peculiar",
        "simple",
        "the restricted simple modules with nonzero cohomology are exactly L(0,0) and L(1,1)",
        (frozenset({Weight(0, 0), Weight(1, 1)}),),
    )
)

def claims_for(module: str, kind: str | None = None) -> list[Claim]:
    return [c for c in CLAIMS if c.module == module and (kind is None or c.kind == kind)]

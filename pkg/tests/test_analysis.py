from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl3coh import claims
from sl3coh.analysis import (
    INCONSISTENT,
    MATCH,
    MISMATCH,
    NOT_STATED,
    SESSpec,
    character_decompositions,
    claims_report,
    internal_findings,
    les_brute_force,
    les_feasibility,
    peculiar_scan,
    standard_result,
    verify_adjoint_cohomology,
    verify_center_quotient,
    worst,
)
from sl3coh.lie import Weight
from sl3coh.modules import reference_characters

REF = reference_characters(3)


def test_worst():
    assert worst([]) == NOT_STATED
    assert worst([MATCH, INCONSISTENT]) == INCONSISTENT
    assert worst([MATCH, MISMATCH, INCONSISTENT]) == MISMATCH


def test_decompositions():
    triple = REF["L(1,0)^(1)"] + REF["L(0,1)^(1)"] + REF["k"]
    assert character_decompositions(triple) == [("L(0,1)^(1)", "L(1,0)^(1)", "k")]
    assert character_decompositions(Counter()) == [()]
    assert character_decompositions({Weight(3, 0): 1}) == []
    # H0(1,1) and L(1,1) + k share a character
    assert character_decompositions(REF["H0(1,1)^(1)"]) == [("H0(1,1)^(1)",), ("L(1,1)^(1)", "k")]


def test_decompositions_custom_candidates():
    cands = {"a": Counter({Weight(0, 0): 1}), "b": Counter({Weight(0, 0): 2})}
    assert character_decompositions({Weight(0, 0): 2}, cands) == [("b",), ("a", "a")]


def test_peculiar_scan():
    rows = peculiar_scan(3)
    assert len(rows) == 9
    assert {r.weight for r in rows if r.peculiar} == {Weight(0, 0), Weight(1, 1)}
    assert {r.weight: r.module_dim for r in rows}[Weight(2, 2)] == 27


@pytest.mark.parametrize(
    "dims,ok",
    [
        ((1, 1, 0), True),
        ((1, 2, 1), True),
        ((1, 0, 0), False),
        ((0, 2, 1), False),
        ((2, 3, 1, 0), True),
    ],
)
def test_les_examples(dims, ok):
    assert les_brute_force(dims) is ok
    if len(dims) % 3 == 0:
        spec = SESSpec(("a", "b", "c"), (1, 2, 1), dims[0::3], dims[1::3], dims[2::3])
        assert les_feasibility(spec).feasible is ok


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.lists(st.integers(0, 3), min_size=3 * k, max_size=3 * k)))
def test_les_feasibility_matches_brute_force(dims):
    spec = SESSpec(("a", "b", "c"), (1, 2, 1), dims[0::3], dims[1::3], dims[2::3])
    res = les_feasibility(spec)
    assert res.feasible == les_brute_force(dims)
    if res.feasible:
        assert len(res.ranks) == len(dims)


def test_ses_validation():
    with pytest.raises(ValueError):
        SESSpec(("a", "b", "c"), (1, 3, 1), (0,), (0,), (0,))


def test_adjoint():
    rep = verify_adjoint_cohomology(3)
    assert rep.report.dims == (1, 1, 0, 15, 23, 8, 6, 6, 0)
    assert rep.h2_vanishes
    assert rep.les.feasible


def test_center_quotient():
    rep = verify_center_quotient(3)
    assert rep.quotient_dims == (0, 7, 0, 15, 15, 0, 7, 0)
    assert rep.restricted_dims == (0, 7, 0, 8, 30, 8, 0, 7, 0)
    assert not rep.all_equal
    assert [n for n, _, _, eq in rep.rows if not eq] == [3, 4, 5, 6, 7]


def test_standard_results():
    assert standard_result("trivial").dims == (1, 0, 6, 7, 0, 7, 6, 0, 1)
    assert standard_result("L(1,1)").dims == (0, 7, 0, 8, 30, 8, 0, 7, 0)
    with pytest.raises(KeyError):
        standard_result("nope")


def test_claim_table_shape():
    ids = [c.id for c in claims.CLAIMS]
    assert len(ids) == len(set(ids))
    assert all(c.expected for c in claims.CLAIMS)


def test_internal_findings_flag_published_tables():
    found = internal_findings()
    euler = {(f.module, f.weight) for f in found if f.kind == "euler"}
    assert ("L(1,1)", None) in euler
    assert ("L(1,1)", Weight(3, 0)) in euler and ("L(1,1)", Weight(0, 3)) in euler
    assert ("trivial", None) not in euler


def test_internal_findings_on_consistent_table():
    table = claims._totals("trivial", (1, 0, 6, 7, 0, 7, 6, 0, 1))
    assert internal_findings(table) == []
    bad = claims._totals("trivial", (1, 0, 6, 7, 0, 7, 6, 0, 2))
    assert [f.kind for f in internal_findings(bad)] == ["euler"]


def test_claims_report_verdicts():
    rep = claims_report(3)
    assert rep.by_id("total.trivial.3").verdict == MATCH
    assert rep.by_id("relations.trivial.3").verdict == MATCH
    assert rep.by_id("representative.trivial.2.(3,0)").verdict == MATCH
    assert rep.by_id("peculiar.3").verdict == MATCH
    assert rep.by_id("adjoint.H2.imported").verdict == MATCH
    assert rep.by_id("total.L(1,1).4").verdict == INCONSISTENT
    assert rep.by_id("total.L(1,1).4").computed == 30
    assert rep.by_id("ledger.L(1,1).(0,0).C.4").computed == 46
    assert rep.by_id("ledger.L(1,1).(0,0).H.4").verdict == MISMATCH
    assert rep.by_id("equal.gbar.3").verdict == MISMATCH
    assert rep.by_id("equal.gbar.1").verdict == MATCH
    assert sum(rep.counts().values()) == len(claims.CLAIMS)
    with pytest.raises(ValueError):
        claims_report(5)

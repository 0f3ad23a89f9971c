"""Compare every registered published number with computation."""

from collections import Counter

from sl3coh.analysis import claims_report, cohomology_report, standard_result

rep = claims_report(3)
print(Counter(r.verdict for r in rep.rows))

# %% Published numbers that fail identities on their own terms
for f in rep.findings:
    print(f"[{f.kind}] {f.module} {f.weight or ''}: {f.detail}")

# %% Disagreements not explained by such a finding
for r in rep.rows:
    if r.verdict == "mismatch":
        print(r.claim.id, "expected", r.claim.expected[0], "computed", r.computed)

# %% The seven-dimensional module g / center
report = cohomology_report(standard_result("L(1,1)"), "L(1,1)")
for d in report.degrees:
    print(d.n, d.dim, d.verdict, d.decompositions)

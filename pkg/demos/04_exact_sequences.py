"""The sequence 0 -> k -> g -> g/center -> 0 and the center quotient comparison."""

from sl3coh.analysis import verify_adjoint_cohomology, verify_center_quotient

rep = verify_adjoint_cohomology(3)
print("H^n(g, g):", rep.report.dims, " H^2 vanishes:", rep.h2_vanishes)

# %% Exactness forces every connecting rank; feasibility means none goes negative.
print("long exact sequence feasible:", rep.les.feasible)
for (name, dim), rank in zip(rep.les.terms, rep.les.ranks):
    print(f"  {name:14s} dim {dim:2d}  rank out {rank}")

# %% H(gbar, gbar) against H(g, gbar)
cq = verify_center_quotient(3)
for n, a, b, eq in cq.rows:
    print(f"n={n}  H(gbar,gbar)={a:2d}  H(g,gbar)={b:2d}  {'equal' if eq else 'differ'}")

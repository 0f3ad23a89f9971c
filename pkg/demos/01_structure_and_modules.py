"""Build sl3 over GF(3), check it, and construct its restricted simple modules."""

import numpy as np

from sl3coh.lie import build_sl3, center, quotient_by_center, verify_structure
from sl3coh.modules import baby_verma, check_module, is_simple, simple_module

# %% The algebra
# Brackets come from commutators of the derivations x_i d/dx_j; weights are in
# fundamental-weight coordinates, so e1 has weight (2,-1).
L = build_sl3(3)
print(L.labels)
print("weights:", [tuple(w) for w in L.weights])
print("structure checks:", "clean" if verify_structure(L).ok else verify_structure(L).failures())

# %% The center
# In characteristic 3 the element h1 - h2 commutes with everything.
(z,) = center(L)
print("center spanned by", dict(zip(L.labels, z.tolist())))
gbar = quotient_by_center(L, strict=True)
print("g / center has basis", gbar.labels)

# %% Baby Verma modules and their simple quotients
# Z(lambda) has dimension p^3 = 27 for every lambda; its simple quotient is L(lambda).
Z = baby_verma(L, (1, 1))
print("dim Z(1,1) =", Z.dim, " simple:", is_simple(Z, bound=8))
for r in range(3):
    row = []
    for s in range(3):
        M = simple_module(L, r, s)
        assert check_module(M).ok
        row.append(f"L({r},{s})={M.dim:2d}")
    print("  ".join(row))

# %% A look at one action matrix
L11 = simple_module(L, 1, 1)
print("e1 on L(1,1):")
print(np.asarray(L11.action[L.index("e1")]))

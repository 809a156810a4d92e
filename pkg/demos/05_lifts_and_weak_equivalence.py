# %% [markdown]
# Orthogonal maps downstairs lift to symplectic maps upstairs (with the
# C block set to zero), and kernel-preserving symplectic maps project back:
# one projection for even g, two for odd g.

# %%
from spincover import FormSpace, SpecialCovering, enumerate_isometries, lift_to_symp, project_to_orth
from spincover.liftweak import thm_an_crosscheck, weak_class, weak_witness

for g in (1, 2, 3, 4):
    counts = {len(project_to_orth(lift_to_symp(F))) for F in enumerate_isometries(FormSpace.dot(g + 1))}
    print(f"g={g}: projections per lift {counts}")

# %% [markdown]
# Weak equivalence is decided on homology: a realizable automorphism fixes
# h, is orthogonal on the base and has an even fiber part.

# %%
a = SpecialCovering.on_n(3, "1100")
b = SpecialCovering.on_n(3, "0000")
w = weak_witness(a, b)
print("classes", weak_class(a), weak_class(b))
print(w.mat)

# %%
for g in range(1, 5):
    rep = thm_an_crosscheck(g)
    print(g, rep.passed, rep.details["pairs"], "pairs")

# %% [markdown]
# Special coverings of the trivial circle bundle over N_{g+1}.
# A covering is a linear form on H_1(P; Z_2) that takes the value 1 on the
# fiber class h, so it is fixed by its values on vbar_0..vbar_g.

# %%
from spincover import SpecialCovering, TotalN, epi_set, presentation, specials

g = 2
covs = specials(TotalN(g))
print(f"g={g}: {len(covs)} special coverings")
for psi in covs:
    print(" ", psi, presentation(psi))

# %% [markdown]
# The exponent of k in the last relator is the parity of the values, so two
# isomorphism types of kernel appear.

# %%
by_eps = {}
for psi in covs:
    by_eps.setdefault(presentation(psi).epsilon, []).append(str(psi))
print(by_eps)

# %% [markdown]
# Pulling back through the orientation cover lands in E_pi, which has 2^g
# members; each comes from exactly two psi whose values differ by all-ones.

# %%
for m in epi_set(g):
    print(f"phi={m.phi}  <-  {m.psis[0]}, {m.psis[1]}")

# %%
p = presentation(SpecialCovering.on_n(1, "10"))
print(p.to_dict())

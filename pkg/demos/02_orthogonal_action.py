# %% [markdown]
# Orthogonal maps of H_1(N_{g+1}; Z_2) act on coverings through the linear
# section sigma(v_i) = vbar_i + rho_i h.  The orbits do not depend on rho.

# %%
from spincover import SectionParams, classify_A1, expected_A1_sizes, stabilizer_check

for g in range(1, 6):
    sizes = {tuple(sorted(classify_A1(g, SectionParams.make(g, rho=rho)).sizes))
             for rho in ("0" * (g + 1), "1" * (g + 1), "1" + "0" * g)}
    print(g, sizes, "expected", expected_A1_sizes(g))

# %% [markdown]
# Orbit labels: psi0/psi1 are the two fixed points, sum0/sum1 the parity of
# psi(vbar_i) + rho_i.

# %%
rep = classify_A1(3, SectionParams.make(3, rho="1010"))
for o in rep.orbits:
    print(f"{o.label:5s} size {o.size}: {' '.join(map(str, o.members))}")

# %% [markdown]
# Isotropy subgroups of the two representative forms, compared with the
# generator lists.  The transvection generator appears once the dimension
# allows a weight-4 isotropic vector outside the obvious factors.

# %%
for g in range(1, 6):
    for which in (1, 0):
        if which == 0 and g > 4:
            continue
        d = stabilizer_check(g, which).details
        print(f"g={g} alpha{which}: order {d['stabilizer_order']}, "
              f"closure {d['closure_order']}, transvections {d['transvection_generators']}")

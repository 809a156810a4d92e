# %% [markdown]
# On the orientable double cover the acting group is symplectic, lifted
# through a quadratic section s with s(c_i) = cbar_i + r_i h.  Orbits on
# E_pi are the Arf level sets, except when t = sum beta_i e_i vanishes.

# %%
from spincover import SectionParams, arf_closed_form, classify_epi, epi_set

g = 2
for r in ("0000", "1000", "1100", "1010", "0110"):
    p = SectionParams.make(g, r=r)
    rep = classify_epi(g, p, "both")
    tag = "t = 0" if p.is_exceptional() else f"t = {p.t}"
    print(f"r={r} ({tag}): sizes {rep.sizes}, labels {[o.label for o in rep.orbits]}")

# %% [markdown]
# The Arf invariant of phi o s against the closed form r_const + phi(bar t).

# %%
p = SectionParams.make(3, r="100111")
for m in epi_set(3):
    arf, closed = arf_closed_form(m.phi, p)
    print(m.phi, arf, closed)

# %% [markdown]
# Symplectic maps whose displacement is orthogonal to a subspace V factor
# into transvections T_Y with Y orthogonal to V.  Here V = ker pi_* + Z_2 t.

# %%
import random

from spincover import Isometry, OSurface, SectionParams, factorize_transvections, replay, transvection
from spincover.action_symp import kt_subspace
from spincover.gf2core import GF2Vec, all_vectors
from spincover.grouptool import pair

rng = random.Random(7)
g = 4
space = OSurface(g).space
p = SectionParams.make(g, r="10010011")
V = kt_subspace(g, p)
admissible = [y for y in all_vectors(2 * g) if y and all(not pair(space, y, v) for v in V)]
print(len(admissible), "admissible directions")

# %%
f = Isometry.identity(space)
for _ in range(6):
    f = f @ transvection(space, rng.choice(admissible))
ys = factorize_transvections(f, V)
print("factors:", [str(y) for y in ys])
print("replay matches:", replay(space, ys) == f.mat)

# %% [markdown]
# With V = 0 any symplectic matrix factors; the step bound is 2 * dim.

# %%
f = transvection(space, GF2Vec.from_str("11000000")) @ transvection(space, GF2Vec.from_str("01100000"))
print([str(y) for y in factorize_transvections(f, [])])

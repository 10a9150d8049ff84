# %% [markdown]
# # Moebius transform and the efficient multichoice values
#
# Hsiao-Raghavan and Peters-Zank values distribute the Moebius mass of every
# unanimity game among the (attribute, level) pairs it involves. Both split
# v(k_N) exactly among the players.

# %%
import numpy as np

from karyx import (
    KAryGame,
    LatticeShape,
    WeightScheme,
    hsiao_raghavan,
    moebius,
    peters_zank,
    unanimity,
    zeta,
)

shape = LatticeShape(3, 2)
u = unanimity(shape, (2, 1, 0))
print("Moebius mass sits at:", [x for x in shape.points() if moebius(u)(x) != 0])

# %% [markdown]
# Rows are attributes, columns are levels 1 and 2.

# %%
print("Hsiao-Raghavan, w = (1, 2)\n", hsiao_raghavan(u, WeightScheme((1, 2))))
print("Peters-Zank\n", peters_zank(u))

# %% [markdown]
# On a random, non-monotone game, both tables still add up to v(k_N).

# %%
rng = np.random.default_rng(0)
vals = rng.uniform(-1, 1, shape.dims)
vals[0, 0, 0] = 0
v = KAryGame(shape, vals)
print("v(k_N)        ", v(shape.top))
print("HR total      ", hsiao_raghavan(v).sum())
print("PZ total      ", peters_zank(v).sum())
print("zeta(moebius) error", np.abs(zeta(moebius(v)).values - v.values).max())

# %% [markdown]
# # Thermal comfort: a single-peaked GAI model
#
# Comfort depends on air temperature, humidity and air speed, each discretized
# on five levels (0..4). None of them is monotone: every attribute has a
# preferred middle value, and wind is only welcome when it is warm.
#
# The model is written as a sum of local terms (a GAI model), expanded into a
# dense 3-attribute game, and then explained attribute by attribute.

# %%
import numpy as np

from karyx import GaiModel, GaiTerm, from_gai, grabisch_lange, importance, importance_by_cells

levels = np.arange(5)
temperature = -0.6 * (levels - 3.0) ** 2          # best at level 3 (about 23 C)
humidity = -0.3 * (levels - 2.0) ** 2             # best in the middle
# wind x temperature interaction: some wind helps when warm, too much never does
wind = np.array([[0.25 * w * t - 0.35 * w ** 2 * (t < 3) - 0.2 * max(w - 2, 0) ** 2
                  for w in levels] for t in levels])

model = GaiModel(tops=(4, 4, 4), terms=[
    GaiTerm((0,), temperature),
    GaiTerm((1,), humidity),
    GaiTerm((0, 2), wind.reshape(-1)),
])
comfort = from_gai(model)
print(comfort, "monotone:", comfort.is_monotone())

# %% [markdown]
# Importance is the accumulated effect of raising an attribute by one level,
# over all situations. A negative value means that going up mostly hurts.

# %%
names = ["temperature", "humidity", "air speed"]
phi = importance(comfort)
for name, value in zip(names, phi):
    print(f"{name:<12} {value:9.3f}")

# %% [markdown]
# Humidity gets exactly 0: its peak is centred, so the gains below the peak are
# cancelled by the losses above it. Its effect is real but has no net direction.
#
# The same numbers come out of a completely different computation: the classical
# Shapley value of every unit cell of the grid, summed.

# %%
print(np.max(np.abs(phi - importance_by_cells(comfort))))

# %% [markdown]
# An efficient value only sees the eight corners of the cube, which for a
# single-peaked model are all poor alternatives.

# %%
for name, value in zip(names, grabisch_lange(comfort)):
    print(f"{name:<12} {value:9.3f}")

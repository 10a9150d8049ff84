# %% [markdown]
# # Why efficiency does not fit non-monotone models
#
# A Dirac game is 1 at a single alternative and 0 everywhere else. Take three
# attributes with levels 0, 1, 2 and put the peak at (2, 1, 1).
#
# Raising attribute 1 can only help (its peak is at the top level). Attributes 2
# and 3 first help, then hurt, so on balance they should get no importance.

# %%
import numpy as np

from karyx import LatticeShape, dirac, grabisch_lange, importance, sum_identity_rhs

shape = LatticeShape(n=3, k=2)
peak = dirac(shape, (2, 1, 1))

print("importance      ", importance(peak))
print("Grabisch-Lange  ", grabisch_lange(peak))

# %% [markdown]
# The efficient value reports nothing at all: it only looks at the corners of the
# lattice, and v(2, 2, 2) - v(0, 0, 0) = 0. The importance index sums to the
# total change along the diagonal x -> x + 1 instead:

# %%
print("sum of importances  ", importance(peak).sum())
print("diagonal variation  ", sum_identity_rhs(peak))
print("v(k_N)              ", peak(shape.top))

# %% [markdown]
# The sign of that sum depends only on where the peak sits.

# %%
for y in [(2, 1, 1), (1, 1, 0), (2, 0, 1), (1, 1, 1)]:
    print(y, importance(dirac(shape, y)).round(6), "sum", round(importance(dirac(shape, y)).sum(), 12))

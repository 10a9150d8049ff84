"""Attribute importance for k-ary games and three efficient multichoice values.

The central index is

    phi_i(v) = sum_{x_{-i} in L_{-i}} c(s, h) * (v(x_{-i}, k_i) - v(x_{-i}, 0_i)),
    c(s, h) = (n - s - 1)! h! / (n + h - s)!

with s and h the number of positive and of top-level coordinates of x_{-i}.
It is not efficient: its sum over attributes is the total diagonal variation
``sum_identity_rhs(v)`` rather than v(k_N).

Vector-valued results are numpy arrays of length n. The bi-indexed values
(Hsiao-Raghavan, Peters-Zank) are arrays of shape (n, k) whose column j - 1
holds level j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence

import numpy as np

from karyx.errors import PreconditionError
from karyx.game import KAryGame, moebius
from karyx.lattice import count_grids


@lru_cache(maxsize=None)
def _importance_weights(n: int, k: int) -> np.ndarray:
    """Coefficient of every x_{-i} in L_{-i}, as an array of shape (k+1,)*(n-1)."""
    s, h = count_grids(n - 1, k)
    exact = {
        (a, b): Fraction(factorial(n - a - 1) * factorial(b), factorial(n + b - a))
        for a in range(n) for b in range(a + 1)
    }
    table = np.vectorize(lambda a, b: float(exact[a, b]), otypes=[float])(s, h)
    table.flags.writeable = False
    return table


def importance_coefficients(n: int, k: int) -> np.ndarray:
    """Weights c(s(x_{-i}), k(x_{-i})) laid out over L_{-i}; identical for every i."""
    return _importance_weights(n, k)


def _full_range_differences(values: np.ndarray, i: int, k: int) -> np.ndarray:
    return np.take(values, k, axis=i) - np.take(values, 0, axis=i)


def importance(v: KAryGame) -> np.ndarray:
    """Importance index of every attribute of ``v``."""
    n, k = v.shape.n, v.shape.k
    weights = _importance_weights(n, k)
    return np.array([
        float(np.sum(weights * _full_range_differences(v.values, i, k)))
        for i in range(n)
    ])


@lru_cache(maxsize=None)
def _shapley_weights(n: int) -> np.ndarray:
    s, _ = count_grids(n - 1, 1)
    table = np.vectorize(
        lambda a: float(Fraction(factorial(n - a - 1) * factorial(a), factorial(n))),
        otypes=[float],
    )(s)
    table.flags.writeable = False
    return table


def _shapley_table(mu: np.ndarray) -> np.ndarray:
    # mu: array of shape (2,)*n indexed by characteristic vectors
    n = mu.ndim
    weights = _shapley_weights(n)
    return np.array([
        float(np.sum(weights * (np.take(mu, 1, axis=i) - np.take(mu, 0, axis=i))))
        for i in range(n)
    ])


def shapley_classical(mu: KAryGame) -> np.ndarray:
    """Shapley value of a classical game, i.e. a k-ary game with k = 1."""
    if mu.shape.k != 1:
        raise PreconditionError(f"the classical Shapley value needs k = 1, got k = {mu.shape.k}")
    return _shapley_table(mu.values)


def cell_game(v: KAryGame, x: Sequence[int]) -> np.ndarray:
    """mu_x(S) = v((x+1)_S, x_{-S}) - v(x) on the unit cell at x, as a (2,)*n array."""
    x = tuple(x)
    cube = v.values[tuple(slice(c, c + 2) for c in x)]
    return cube - v.values[x]


def importance_by_cells(v: KAryGame) -> np.ndarray:
    """Sum of the classical Shapley values of all unit-cell games of ``v``.

    Computed independently of :func:`importance`, to which it is equal.
    """
    total = np.zeros(v.shape.n)
    for x in product(range(v.shape.k), repeat=v.shape.n):
        total += _shapley_table(cell_game(v, x))
    return total


def sum_identity_rhs(v: KAryGame) -> float:
    """sum over x with all x_j < k of v(x + 1) - v(x)."""
    upper = v.values[(slice(1, None),) * v.shape.n]
    lower = v.values[(slice(None, -1),) * v.shape.n]
    return float(np.sum(upper - lower))


def grabisch_lange(v: KAryGame) -> np.ndarray:
    """Grabisch-Lange value: full-range differences over vertex slices only."""
    n, k = v.shape.n, v.shape.k
    corners = np.ix_(*([[0, k]] * (n - 1)))
    _, h = count_grids(n - 1, 1)
    weights = np.vectorize(
        lambda b: float(Fraction(factorial(n - b - 1) * factorial(b), factorial(n))),
        otypes=[float],
    )(h)
    out = np.empty(n)
    for i in range(n):
        diff = _full_range_differences(v.values, i, k)
        out[i] = float(np.sum(weights * diff[corners])) if n > 1 else float(weights * diff)
    return out


@dataclass(frozen=True)
class WeightScheme:
    """Positive, strictly increasing action weights w_1 < ... < w_k."""

    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if not w:
            raise ValueError("at least one weight is required")
        if not all(np.isfinite(w)) or min(w) <= 0:
            raise ValueError(f"weights must be finite and positive, got {w}")
        if any(b <= a for a, b in zip(w, w[1:])):
            raise ValueError(f"weights must be strictly increasing, got {w}")

    @classmethod
    def linear(cls, k: int) -> "WeightScheme":
        return cls(tuple(range(1, k + 1)))

    @property
    def k(self) -> int:
        return len(self.weights)


def hsiao_raghavan(v: KAryGame, weights: WeightScheme | Sequence[float] | None = None,
                   zero_level: str = "zero") -> np.ndarray:
    """Hsiao-Raghavan value as an (n, k) table.

    Every unanimity game u_x shares its unit among the attributes in the
    support of x, in proportion to the weight of their level. Level 0 gets
    weight 0 under ``zero_level="zero"``; ``zero_level="error"`` instead
    rejects games whose Moebius transform charges a point with a zero
    coordinate.
    """
    n, k = v.shape.n, v.shape.k
    if weights is None:
        weights = WeightScheme.linear(k)
    elif not isinstance(weights, WeightScheme):
        weights = WeightScheme(tuple(weights))
    if weights.k != k:
        raise ValueError(f"need {k} weights, got {weights.k}")
    if zero_level not in ("zero", "error"):
        raise ValueError(f"zero_level must be 'zero' or 'error', got {zero_level!r}")

    m = moebius(v).coeffs
    levels = np.indices(v.shape.dims)
    if zero_level == "error" and np.any((m != 0) & np.any(levels == 0, axis=0)):
        raise PreconditionError("Moebius mass on a point with a zero coordinate; "
                                "weight of level 0 is undefined")
    w = np.concatenate(([0.0], weights.weights))
    lw = w[levels]
    denom = lw.sum(axis=0)
    share = np.divide(m, denom, out=np.zeros_like(m), where=denom > 0)
    out = np.zeros((n, k))
    for i in range(n):
        contrib = share * lw[i]
        for j in range(1, k + 1):
            out[i, j - 1] = float(np.sum(np.take(contrib, j, axis=i)))
    return out


def peters_zank(v: KAryGame) -> np.ndarray:
    """Peters-Zank value: phi_ij = sum over x with x_i = j of m(x) / s(x)."""
    n, k = v.shape.n, v.shape.k
    m = moebius(v).coeffs
    s, _ = count_grids(n, k)
    share = np.divide(m, s, out=np.zeros_like(m), where=s > 0)
    out = np.zeros((n, k))
    for i in range(n):
        for j in range(1, k + 1):
            out[i, j - 1] = float(np.sum(np.take(share, j, axis=i)))
    return out

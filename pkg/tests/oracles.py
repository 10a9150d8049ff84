"""Slow, independent reference implementations used only by the tests."""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

import numpy as np


def moebius_closed_form(values: np.ndarray, k: int) -> np.ndarray:
    """m(x) = sum over y <= x with x - y in {0,1}^n of (-1)^{|x - y|} v(y)."""
    n = values.ndim
    out = np.zeros_like(values)
    for x in product(range(k + 1), repeat=n):
        total = 0
        for d in product((0, 1), repeat=n):
            y = tuple(a - b for a, b in zip(x, d))
            if min(y) < 0:
                continue
            total += (-1) ** sum(d) * values[y]
        out[x] = total
    return out


def moebius_linear_solve(values: np.ndarray, k: int) -> np.ndarray:
    """Solve v(x) = sum_{y <= x} m(y) as a dense linear system."""
    n = values.ndim
    pts = list(product(range(k + 1), repeat=n))
    a = np.array([[float(all(yi <= xi for yi, xi in zip(y, x))) for y in pts] for x in pts])
    return np.linalg.solve(a, values.reshape(-1)).reshape(values.shape)


def shapley_by_orderings(mu: np.ndarray) -> np.ndarray:
    """Average marginal contribution over all n! arrival orders; mu indexed by {0,1}^n."""
    n = mu.ndim
    out = np.zeros(n)
    for order in permutations(range(n)):
        coalition = [0] * n
        for i in order:
            before = mu[tuple(coalition)]
            coalition[i] = 1
            out[i] += mu[tuple(coalition)] - before
    return out / factorial(n)


def importance_exact(values, k: int) -> list:
    """Main index by explicit enumeration of L_{-i}, in exact rationals."""
    values = np.asarray(values, dtype=object)
    n = values.ndim
    out = []
    for i in range(n):
        total = Fraction(0)
        for rest in product(range(k + 1), repeat=n - 1):
            s = sum(1 for c in rest if c > 0)
            h = sum(1 for c in rest if c == k)
            coef = Fraction(factorial(n - s - 1) * factorial(h), factorial(n + h - s))
            hi = rest[:i] + (k,) + rest[i:]
            lo = rest[:i] + (0,) + rest[i:]
            total += coef * (Fraction(values[hi]) - Fraction(values[lo]))
        out.append(total)
    return out


def cells_by_orderings(values: np.ndarray, k: int) -> np.ndarray:
    """Sum of ordering-based Shapley values of every unit cell game."""
    n = values.ndim
    total = np.zeros(n)
    for x in product(range(k), repeat=n):
        mu = np.zeros((2,) * n)
        for d in product((0, 1), repeat=n):
            mu[d] = values[tuple(a + b for a, b in zip(x, d))] - values[x]
        total += shapley_by_orderings(mu)
    return total

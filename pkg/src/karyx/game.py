"""Dense k-ary games, basis games, Moebius/zeta transforms and GAI models."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from karyx.lattice import LatticeShape, Point


def _frozen_table(shape: LatticeShape, values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.size != shape.size:
        raise ValueError(f"table has {arr.size} entries, expected (k+1)^n = {shape.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("table contains non-finite entries")
    arr = arr.reshape(shape.dims)
    arr.flags.writeable = False
    return arr


class _Table:
    """Read-only real table over L with elementwise arithmetic."""

    __slots__ = ("shape", "values")

    def __init__(self, shape: LatticeShape, values: np.ndarray):
        self.shape = shape
        self.values = values

    @property
    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    def __call__(self, x: Sequence[int]) -> float:
        return float(self.values[self.shape.check_point(x)])

    def __getitem__(self, x) -> float:
        return self(x)

    def _combine(self, other, op):
        if not isinstance(other, type(self)) or other.shape != self.shape:
            return NotImplemented
        return type(self)(self.shape, op(self.values, other.values))

    def __add__(self, other):
        return self._combine(other, np.add)

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __mul__(self, alpha):
        if isinstance(alpha, _Table):
            return NotImplemented
        return type(self)(self.shape, self.values * float(alpha))

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(self.shape, -self.values)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(n={self.shape.n}, k={self.shape.k})"


class KAryGame(_Table):
    """A real function v on L with v(0_N) = 0.

    ``values`` is a read-only array of shape ``(k + 1,) * n``; ``flat`` gives
    the same data in flat-index order.
    """

    def __init__(self, shape: LatticeShape, values):
        arr = _frozen_table(shape, values)
        if arr[shape.bottom] != 0.0:
            raise ValueError(f"v(0_N) must be 0, got {arr[shape.bottom]!r}")
        super().__init__(shape, arr)

    def permute(self, sigma: Sequence[int]) -> "KAryGame":
        """sigma o v, defined by (sigma o v)(sigma(x)) = v(x).

        ``sigma[i]`` is the image of attribute ``i``.
        """
        sigma = list(sigma)
        if sorted(sigma) != list(range(self.shape.n)):
            raise ValueError(f"{sigma} is not a permutation of 0..{self.shape.n - 1}")
        return KAryGame(self.shape, np.moveaxis(self.values, list(range(self.shape.n)), sigma))

    def is_monotone(self) -> bool:
        return all(np.all(np.diff(self.values, axis=a) >= 0) for a in range(self.shape.n))


class MoebiusTable(_Table):
    """Coefficients m with v(x) = sum_{y <= x} m(y)."""

    def __init__(self, shape: LatticeShape, coeffs):
        super().__init__(shape, _frozen_table(shape, coeffs))

    @property
    def coeffs(self) -> np.ndarray:
        return self.values


def new_game(shape: LatticeShape, values, normalize: bool = False) -> KAryGame:
    """Validate a table as a game.

    With ``normalize=True`` a nonzero origin is shifted away; otherwise it is
    an error.
    """
    arr = np.array(values, dtype=float)
    if normalize and arr.size == shape.size and np.all(np.isfinite(arr)):
        arr = arr - arr.reshape(-1)[0]
    return KAryGame(shape, arr)


def zero_game(shape: LatticeShape) -> KAryGame:
    return KAryGame(shape, np.zeros(shape.dims))


def _nonzero_point(shape: LatticeShape, x: Sequence[int]) -> Point:
    x = shape.check_point(x)
    if not any(x):
        raise ValueError("basis games are only defined for x != 0_N")
    return x


def unanimity(shape: LatticeShape, x: Sequence[int]) -> KAryGame:
    """u_x: 1 on every y >= x, 0 elsewhere."""
    x = _nonzero_point(shape, x)
    arr = np.zeros(shape.dims)
    arr[tuple(slice(c, None) for c in x)] = 1.0
    return KAryGame(shape, arr)


def dirac(shape: LatticeShape, x: Sequence[int]) -> KAryGame:
    """delta_x: 1 at x only."""
    x = _nonzero_point(shape, x)
    arr = np.zeros(shape.dims)
    arr[x] = 1.0
    return KAryGame(shape, arr)


def moebius(v: KAryGame) -> MoebiusTable:
    """Moebius transform by one backward-difference pass per attribute."""
    m = v.values
    for axis in range(v.shape.n):
        m = np.diff(m, axis=axis, prepend=0.0)
    return MoebiusTable(v.shape, m)


def zeta(m: MoebiusTable) -> KAryGame:
    """Inverse of :func:`moebius`: prefix sums along every attribute."""
    v = m.coeffs
    for axis in range(m.shape.n):
        v = np.cumsum(v, axis=axis)
    return KAryGame(m.shape, v)


@dataclass
class GaiTerm:
    attrs: tuple[int, ...]
    table: np.ndarray


@dataclass
class GaiModel:
    """v(x) = sum over terms of table_S(x_S).

    ``tops`` holds the top level of every attribute; term tables are indexed
    by the levels of their own attributes (in the order given by ``attrs``).
    """

    tops: tuple[int, ...]
    terms: list[GaiTerm] = field(default_factory=list)

    def __post_init__(self):
        self.tops = tuple(int(t) for t in self.tops)
        if not self.tops or min(self.tops) < 1:
            raise ValueError(f"top levels must be >= 1, got {self.tops}")
        n = len(self.tops)
        checked = []
        for term in self.terms:
            attrs = tuple(int(a) for a in term.attrs)
            if not attrs:
                raise ValueError("GAI term with an empty attribute set")
            if len(set(attrs)) != len(attrs) or not all(0 <= a < n for a in attrs):
                raise ValueError(f"GAI term attributes {attrs} invalid for n={n}")
            dims = tuple(self.tops[a] + 1 for a in attrs)
            table = np.asarray(term.table, dtype=float)
            if table.size != int(np.prod(dims)):
                raise ValueError(f"GAI term on {attrs} needs {int(np.prod(dims))} entries, got {table.size}")
            checked.append(GaiTerm(attrs, table.reshape(dims)))
        self.terms = checked

    @property
    def n(self) -> int:
        return len(self.tops)

    def evaluate(self) -> np.ndarray:
        """Dense table over the product of the attributes' own ranges (no shift)."""
        dims = tuple(t + 1 for t in self.tops)
        total = np.zeros(dims)
        for term in self.terms:
            order = np.argsort(term.attrs)
            sub = np.transpose(term.table, order)
            bshape = [1] * self.n
            for a in term.attrs:
                bshape[a] = dims[a]
            total = total + sub.reshape(bshape)
        return total


def from_gai(model: GaiModel) -> KAryGame:
    """Dense game of a GAI model, padded to the common top and shifted to v(0_N) = 0."""
    return pad_to_common_k(model.tops, model.evaluate(), normalize=True)


def pad_to_common_k(tops: Sequence[int], values, normalize: bool = False) -> KAryGame:
    """Embed a game on prod_i {0..k_i} into {0..max k_i}^n.

    Levels above an attribute's own top repeat the value at that top.
    """
    tops = tuple(int(t) for t in tops)
    if not tops or min(tops) < 1:
        raise ValueError(f"top levels must be >= 1, got {tops}")
    arr = np.asarray(values, dtype=float)
    dims = tuple(t + 1 for t in tops)
    if arr.size != int(np.prod(dims)):
        raise ValueError(f"table has {arr.size} entries, expected {int(np.prod(dims))}")
    arr = arr.reshape(dims)
    k = max(tops)
    for axis, t in enumerate(tops):
        arr = np.take(arr, np.minimum(np.arange(k + 1), t), axis=axis)
    return new_game(LatticeShape(len(tops), k), arr, normalize=normalize)

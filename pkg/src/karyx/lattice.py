"""Points of the finite lattice L = {0, ..., k}^n.

Attribute indices are 0-based throughout the library; the I/O layer is the
only place where they are shifted to the 1-based numbering users see.

Points are plain tuples of ints. Tables over L are numpy arrays of shape
``(k + 1,) * n`` in C order, so the flat index of a point is its mixed-radix
value with attribute 0 as the most significant digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

import numpy as np

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticeShape:
    """Number of attributes ``n`` and common top level ``k``."""

    n: int
    k: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.k + 1,) * self.n

    @property
    def size(self) -> int:
        return (self.k + 1) ** self.n

    @property
    def bottom(self) -> Point:
        return (0,) * self.n

    @property
    def top(self) -> Point:
        return (self.k,) * self.n

    def points(self) -> Iterator[Point]:
        """All points in flat-index order."""
        return product(range(self.k + 1), repeat=self.n)

    def check_point(self, x: Sequence[int]) -> Point:
        x = tuple(int(c) for c in x)
        if len(x) != self.n:
            raise ValueError(f"point {x} has {len(x)} coordinates, expected {self.n}")
        for c in x:
            if not 0 <= c <= self.k:
                raise ValueError(f"coordinate {c} of {x} outside 0..{self.k}")
        return x

    def check_attribute(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"attribute index {i} outside 0..{self.n - 1}")
        return i


def flat_index(x: Sequence[int], shape: LatticeShape) -> int:
    idx = 0
    for c in shape.check_point(x):
        idx = idx * (shape.k + 1) + c
    return idx


def point_from_index(idx: int, shape: LatticeShape) -> Point:
    if not 0 <= idx < shape.size:
        raise ValueError(f"index {idx} outside 0..{shape.size - 1}")
    coords = []
    for _ in range(shape.n):
        idx, c = divmod(idx, shape.k + 1)
        coords.append(c)
    return tuple(reversed(coords))


def support(x: Sequence[int]) -> frozenset[int]:
    """S(x): attributes at a positive level."""
    return frozenset(i for i, c in enumerate(x) if c > 0)


def support_size(x: Sequence[int]) -> int:
    return sum(1 for c in x if c > 0)


def kernel(x: Sequence[int], shape: LatticeShape) -> frozenset[int]:
    """K(x): attributes at the top level ``k``."""
    return frozenset(i for i, c in enumerate(x) if c == shape.k)


def kernel_size(x: Sequence[int], shape: LatticeShape) -> int:
    return sum(1 for c in x if c == shape.k)


def vertices(shape: LatticeShape) -> Iterator[Point]:
    """The 2^n points with every coordinate in {0, k}."""
    return product((0, shape.k), repeat=shape.n)


def vertices_minus_i(shape: LatticeShape, i: int) -> Iterator[Point]:
    """Vertices of L_{-i}, as (n - 1)-coordinate points."""
    shape.check_attribute(i)
    return product((0, shape.k), repeat=shape.n - 1)


def bump(x: Sequence[int], i: int, shape: LatticeShape) -> Point:
    """x + 1_i. Raises if x_i is already at the top."""
    x = shape.check_point(x)
    shape.check_attribute(i)
    if x[i] == shape.k:
        raise ValueError(f"no successor along attribute {i}: {x} is at the top level")
    return x[:i] + (x[i] + 1,) + x[i + 1:]


def bump_all(x: Sequence[int], shape: LatticeShape) -> Point:
    """x + (1, ..., 1); requires every coordinate below the top."""
    x = shape.check_point(x)
    if any(c == shape.k for c in x):
        raise ValueError(f"{x} has a coordinate at the top level, x + 1 is not in L")
    return tuple(c + 1 for c in x)


def with_coord(x: Sequence[int], i: int, level: int) -> Point:
    """(x_{-i}, level_i)."""
    x = tuple(x)
    return x[:i] + (level,) + x[i + 1:]


def insert_coord(rest: Sequence[int], i: int, level: int) -> Point:
    """Rebuild a full point from x_{-i} and a level for attribute i."""
    rest = tuple(rest)
    return rest[:i] + (level,) + rest[i:]


class SlicePoint(NamedTuple):
    coords: Point
    s: int
    k: int


def enumerate_slice(shape: LatticeShape, i: int) -> Iterator[SlicePoint]:
    """Every x_{-i} in L_{-i}, tagged with s(x_{-i}) and k(x_{-i})."""
    shape.check_attribute(i)
    for rest in product(range(shape.k + 1), repeat=shape.n - 1):
        yield SlicePoint(rest, support_size(rest), sum(1 for c in rest if c == shape.k))


def count_grids(m: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Support and kernel sizes of every point of {0..k}^m as arrays of shape (k+1,)*m."""
    if m == 0:
        return np.zeros((), dtype=int), np.zeros((), dtype=int)
    levels = np.indices((k + 1,) * m)
    return (levels > 0).sum(axis=0), (levels == k).sum(axis=0)

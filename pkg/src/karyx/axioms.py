"""Randomized checks of the axioms characterizing the importance index.

Every checker takes an index functional (any callable mapping a
:class:`~karyx.game.KAryGame` to a length-n array), runs seeded trials and
returns an :class:`AxiomReport`. Failures are reported, never raised.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from karyx import indices
from karyx.game import KAryGame, dirac
from karyx.lattice import LatticeShape, kernel_size, support_size

IndexFunctional = Callable[[KAryGame], np.ndarray]

DEFAULT_TOL = 1e-9


@dataclass
class AxiomReport:
    axiom: str
    passed: bool
    violation: float
    tolerance: float
    seed: int | None = None
    trials: int = 0
    witness: dict | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.axiom:<14} max violation {self.violation:.3e} (tol {self.tolerance:.0e})"
        return f"{line}  {self.note}" if self.note else line


def _game_json(v: KAryGame) -> dict:
    return {"n": v.shape.n, "k": v.shape.k, "values": {"dense": v.flat.tolist()}}


@dataclass
class _Worst:
    tol: float
    violation: float = 0.0
    witness: dict | None = field(default=None)

    def update(self, err: float, witness):
        # NaN counts as a violation
        if not err <= self.violation:
            self.violation = err
            if not err <= self.tol:
                self.witness = witness() if callable(witness) else witness

    def report(self, axiom, seed, trials, note="") -> AxiomReport:
        return AxiomReport(axiom, self.violation <= self.tol, float(self.violation), self.tol,
                           seed, trials, self.witness, note)


def random_game(shape: LatticeShape, rng: np.random.Generator) -> KAryGame:
    """Uniform values in [-1, 1] at every non-origin point; origin pinned to 0."""
    vals = rng.uniform(-1.0, 1.0, shape.dims)
    vals[shape.bottom] = 0.0
    return KAryGame(shape, vals)


def null_game(v: KAryGame, i: int) -> KAryGame:
    """Make attribute i null: v'(x_{-i}, x_i) = v(x_{-i}, 0_i)."""
    base = np.take(v.values, [0], axis=i)
    return KAryGame(v.shape, np.broadcast_to(base, v.shape.dims))


def _check_trials(trials: int):
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")


def check_linearity(phi: IndexFunctional, shape: LatticeShape, trials: int = 200,
                    seed: int = 0, tol: float = DEFAULT_TOL) -> AxiomReport:
    _check_trials(trials)
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        v, w = random_game(shape, rng), random_game(shape, rng)
        alpha = rng.uniform(-2.0, 2.0)
        lhs = np.asarray(phi(v + alpha * w))
        rhs = np.asarray(phi(v)) + alpha * np.asarray(phi(w))
        worst.update(float(np.max(np.abs(lhs - rhs))),
                     lambda: {"v": _game_json(v), "w": _game_json(w), "alpha": alpha})
    return worst.report("linearity", seed, trials)


def check_null(phi: IndexFunctional, shape: LatticeShape, trials: int = 200,
               seed: int = 0, tol: float = DEFAULT_TOL) -> AxiomReport:
    _check_trials(trials)
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        i = int(rng.integers(shape.n))
        v = null_game(random_game(shape, rng), i)
        worst.update(abs(float(np.asarray(phi(v))[i])),
                     lambda: {"v": _game_json(v), "attribute": i + 1})
    return worst.report("null", seed, trials)


def check_symmetry(phi: IndexFunctional, shape: LatticeShape, trials: int = 200,
                   seed: int = 0, tol: float = DEFAULT_TOL) -> AxiomReport:
    _check_trials(trials)
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        v = random_game(shape, rng)
        sigma = rng.permutation(shape.n)
        before = np.asarray(phi(v))
        after = np.asarray(phi(v.permute(sigma)))
        worst.update(float(np.max(np.abs(after[sigma] - before))),
                     lambda: {"v": _game_json(v), "sigma": [int(s) + 1 for s in sigma]})
    return worst.report("symmetry", seed, trials)


def invariance_partner(v: KAryGame, i: int) -> KAryGame:
    """Game w whose increments along i are those of v shifted by one level.

    For 1 <= l < k, w(x_{-i}, l) - w(x_{-i}, l - 1) = v(x_{-i}, l + 1) - v(x_{-i}, l),
    the last increment of w is the first one of v, and w(x_{-i}, 0) = 0.
    """
    k = v.shape.k
    if k < 2:
        raise ValueError("the invariance premise needs k >= 2")
    v.shape.check_attribute(i)
    steps = np.diff(v.values, axis=i)
    shifted = np.roll(steps, -1, axis=i)
    zero = np.zeros_like(np.take(v.values, [0], axis=i))
    return KAryGame(v.shape, np.concatenate([zero, np.cumsum(shifted, axis=i)], axis=i))


def check_invariance(phi: IndexFunctional, shape: LatticeShape, trials: int = 200,
                     seed: int = 0, tol: float = DEFAULT_TOL) -> AxiomReport:
    _check_trials(trials)
    if shape.k < 2:
        return AxiomReport("invariance", True, 0.0, tol, seed, 0, None,
                           "skipped: no interior levels when k = 1")
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        v = random_game(shape, rng)
        i = int(rng.integers(shape.n))
        w = invariance_partner(v, i)
        err = abs(float(np.asarray(phi(v))[i]) - float(np.asarray(phi(w))[i]))
        worst.update(err, lambda: {"v": _game_json(v), "w": _game_json(w), "attribute": i + 1})
    return worst.report("invariance", seed, trials)


def dirac_efficiency_target(y, shape: LatticeShape) -> int:
    """+1 if y has a top coordinate and no zero, -1 if y has a zero and no top, else 0."""
    s, h = support_size(y), kernel_size(y, shape)
    if h != 0 and s == shape.n:
        return 1
    if h == 0 and s < shape.n:
        return -1
    return 0


def check_efficiency_dirac(phi: IndexFunctional, shape: LatticeShape,
                           tol: float = DEFAULT_TOL) -> AxiomReport:
    worst = _Worst(tol)
    count = 0
    for y in shape.points():
        if not any(y):
            continue
        count += 1
        total = float(np.sum(np.asarray(phi(dirac(shape, y)))))
        target = dirac_efficiency_target(y, shape)
        worst.update(abs(total - target),
                     {"y": list(y), "sum": total, "expected": target})
    return worst.report("efficiency", None, count)


def check_cells_oracle(phi: IndexFunctional, shape: LatticeShape, trials: int = 200,
                       seed: int = 0, tol: float = DEFAULT_TOL) -> AxiomReport:
    """Compare ``phi`` with the unit-cell Shapley decomposition on random games."""
    _check_trials(trials)
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        v = random_game(shape, rng)
        err = float(np.max(np.abs(np.asarray(phi(v)) - indices.importance_by_cells(v))))
        worst.update(err, lambda: {"v": _game_json(v)})
    return worst.report("cells-oracle", seed, trials)


MAX_ORACLE_SIZE = 27


def dirac_coefficients(shape: LatticeShape, phi: IndexFunctional = indices.importance) -> np.ndarray:
    """Table A of shape (n, (k+1)^n) with A[:, idx] = phi(delta_y), y at flat index idx.

    By linearity phi(v) = A @ v.flat; the origin column is zero.
    """
    if shape.size > MAX_ORACLE_SIZE:
        raise ValueError(f"oracle limited to (k+1)^n <= {MAX_ORACLE_SIZE}, got {shape.size}")
    table = np.zeros((shape.n, shape.size))
    for idx, y in enumerate(shape.points()):
        if any(y):
            table[:, idx] = phi(dirac(shape, y))
    return table


def brute_force_index_from_axioms(shape: LatticeShape, trials: int = 50, seed: int = 0,
                                  tol: float = 1e-10) -> tuple[np.ndarray, AxiomReport]:
    """Rebuild phi(v) from its values on the Dirac basis and compare with direct evaluation."""
    table = dirac_coefficients(shape)
    rng = np.random.default_rng(seed)
    worst = _Worst(tol)
    for _ in range(trials):
        v = random_game(shape, rng)
        err = float(np.max(np.abs(table @ v.flat - indices.importance(v))))
        worst.update(err, lambda: {"v": _game_json(v)})
    return table, worst.report("dirac-basis", seed, trials)


def run_suite(phi: IndexFunctional, shape: LatticeShape, trials: int = 200, seed: int = 0,
              tol: float = DEFAULT_TOL) -> list[AxiomReport]:
    return [
        check_linearity(phi, shape, trials, seed, tol),
        check_null(phi, shape, trials, seed, tol),
        check_symmetry(phi, shape, trials, seed, tol),
        check_invariance(phi, shape, trials, seed, tol),
        check_efficiency_dirac(phi, shape, tol),
        check_cells_oracle(phi, shape, trials, seed, tol),
    ]

import numpy as np
import pytest

from conftest import make_random_game
from controls import NEGATIVE_CONTROLS, first_step_at_origin, squared_top
from karyx import axioms
from karyx.axioms import (
    brute_force_index_from_axioms,
    check_efficiency_dirac,
    check_invariance,
    check_linearity,
    check_null,
    check_symmetry,
    dirac_coefficients,
    dirac_efficiency_target,
    invariance_partner,
    null_game,
    run_suite,
)
from karyx.game import KAryGame, dirac, unanimity, zero_game
from karyx.indices import grabisch_lange, importance, importance_by_cells
from karyx.lattice import LatticeShape

S32 = LatticeShape(3, 2)


def test_linearity_passes_and_control_fails():
    report = check_linearity(importance, S32, trials=100, seed=1)
    assert report.passed and report.violation < 1e-10
    bad = check_linearity(squared_top, S32, trials=5, seed=1)
    assert not bad.passed and bad.witness is not None and "alpha" in bad.witness


def test_null_game_construction(rng):
    v = null_game(make_random_game(S32, rng), 1)
    for x in S32.points():
        assert v(x) == v((x[0], 0, x[2]))
    assert importance(v)[1] == 0.0
    assert grabisch_lange(v)[1] == 0.0
    everything_null = null_game(null_game(null_game(v, 0), 1), 2)
    assert everything_null == zero_game(S32)
    assert not importance(everything_null).any()


def test_symmetry_examples():
    sym = np.zeros(S32.dims)
    for x in S32.points():
        sym[x] = np.sin(sum(c * c for c in x))
    phi = importance(KAryGame(S32, sym))
    assert np.allclose(phi, phi[0], atol=1e-14)
    d = dirac(S32, (2, 1, 1))
    assert importance(d.permute([1, 0, 2])).tolist() == [0.0, 1.0, 0.0]
    assert importance(d.permute([0, 1, 2])).tolist() == importance(d).tolist()


def test_invariance_partner_premise_exact(rng):
    shape = LatticeShape(3, 3)
    # dyadic values keep every difference exact
    vals = rng.integers(-64, 64, shape.dims) / 16.0
    vals[0, 0, 0] = 0
    v = KAryGame(shape, vals)
    k = shape.k
    for i in range(shape.n):
        w = invariance_partner(v, i)
        assert w(shape.bottom) == 0
        assert not np.take(w.values, 0, axis=i).any()
        for x in shape.points():
            if 0 < x[i] < k:
                up = list(x); up[i] += 1
                down = list(x); down[i] -= 1
                assert v(tuple(up)) - v(x) == w(x) - w(tuple(down))
        for x in shape.points():
            if x[i] == 0:
                one, top, below = list(x), list(x), list(x)
                one[i], top[i], below[i] = 1, k, k - 1
                assert v(tuple(one)) - v(x) == w(tuple(top)) - w(tuple(below))


def test_invariance_partner_two_level_swap():
    shape = LatticeShape(2, 2)
    vals = np.zeros(shape.dims)
    vals[:, 1] = [0.0, 0.5, 0.25]  # along attribute 0 at x_1 = 1: increments 0.5, -0.25
    vals[:, 1] += 1.0
    v = KAryGame(shape, np.where(np.indices(shape.dims).sum(0) == 0, 0, vals))
    w = invariance_partner(v, 0)
    assert np.diff(w.values[:, 1]).tolist() == [-0.25, 0.5]
    assert invariance_partner(zero_game(shape), 1) == zero_game(shape)
    with pytest.raises(ValueError):
        invariance_partner(zero_game(LatticeShape(2, 1)), 0)


def test_invariance_check_and_control():
    assert check_invariance(importance, LatticeShape(3, 3), trials=100, seed=3).passed
    assert not check_invariance(first_step_at_origin, LatticeShape(3, 3), trials=20, seed=3).passed
    skipped = check_invariance(importance, LatticeShape(3, 1), trials=5)
    assert skipped.passed and "skipped" in skipped.note


def test_partner_offset_is_a_null_game(rng):
    # pinning w(x_{-i}, 0) to anything else adds a game in which i is null
    v = make_random_game(S32, rng)
    for i in range(S32.n):
        w = invariance_partner(v, i)
        offset = null_game(make_random_game(S32, rng), i)
        assert importance(w + offset)[i] == pytest.approx(importance(w)[i], abs=1e-12)
        assert importance(w)[i] == pytest.approx(importance(v)[i], abs=1e-12)


@pytest.mark.parametrize("y, target", [((2, 1, 1), 1), ((1, 1, 0), -1), ((2, 0, 1), 0)])
def test_efficiency_targets(y, target):
    assert dirac_efficiency_target(y, S32) == target
    assert importance(dirac(S32, y)).sum() == target


def test_efficiency_partition_covers_every_dirac():
    shape = LatticeShape(3, 3)
    targets = [dirac_efficiency_target(y, shape) for y in shape.points() if any(y)]
    assert len(targets) == shape.size - 1
    assert set(targets) <= {-1, 0, 1}
    report = check_efficiency_dirac(importance, shape)
    assert report.passed and report.trials == shape.size - 1
    gl = check_efficiency_dirac(grabisch_lange, shape)
    assert not gl.passed and gl.violation == pytest.approx(1.0)


def test_dirac_basis_oracle():
    table, report = brute_force_index_from_axioms(S32, trials=50, seed=5)
    assert report.passed and report.violation <= 1e-10
    assert table.shape == (3, 27) and not table[:, 0].any()
    u = unanimity(S32, (1, 2, 1))
    np.testing.assert_allclose(table @ u.flat, importance(u), atol=1e-12)
    np.testing.assert_allclose(table @ u.flat, importance_by_cells(u), atol=1e-12)
    np.testing.assert_allclose(dirac_coefficients(S32) @ dirac(S32, (2, 1, 1)).flat, [1, 0, 0])
    with pytest.raises(ValueError):
        dirac_coefficients(LatticeShape(4, 2))


def test_checkers_reject_zero_trials():
    with pytest.raises(ValueError):
        check_null(importance, S32, trials=0)


@pytest.mark.parametrize("axiom", sorted(NEGATIVE_CONTROLS))
def test_negative_controls_fail(axiom):
    reports = {r.axiom: r for r in run_suite(NEGATIVE_CONTROLS[axiom], S32, trials=20, seed=11)}
    assert not reports[axiom].passed
    assert reports[axiom].witness is not None


def test_suite_deterministic_given_seed():
    a = [r.to_dict() for r in run_suite(importance, S32, trials=10, seed=4)]
    b = [r.to_dict() for r in run_suite(importance, S32, trials=10, seed=4)]
    assert a == b
    assert all(r["passed"] for r in a)
    assert "PASS" in axioms.AxiomReport("x", True, 0.0, 1e-9).summary()

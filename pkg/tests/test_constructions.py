"""Sum constructions, pseudo-inverse duals, lifting, and the generators."""

import numpy as np
import pytest

from gframes import (
    ContinuousFrameSpec,
    GenerationError,
    GFrameFamily,
    MeasureSpace,
    OperatorPair,
    PreconditionError,
    canonical_dual,
    classify,
    direct_sum_duals,
    disjoint_sum_family,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    lift_continuous_frame,
    pseudo_dual,
    pseudo_inverse,
    random_gframe,
    random_strongly_disjoint_parseval_pair,
    strongly_disjoint_sum,
)


def test_pseudo_inverse_wide_matrix(tol):
    t = np.array([[1.0, 0.0]])
    dagger = pseudo_inverse(t, tol)
    assert np.allclose(dagger, [[1.0], [0.0]])
    assert np.allclose(t @ dagger, [[1.0]])


def test_pseudo_inverse_identity(tol):
    assert np.allclose(pseudo_inverse(np.eye(3), tol), np.eye(3))


def test_pseudo_inverse_scalar(tol):
    assert np.allclose(pseudo_inverse(np.array([[2.0]]), tol), [[0.5]])


def test_disjoint_sum_identity_operators(lam_family, theta_family, tol):
    pair = OperatorPair(np.eye(1), np.eye(1))
    result = disjoint_sum_family(lam_family, theta_family, pair, tol)
    assert np.allclose(result.family.blocks[0], [[2.0]])
    assert np.allclose(result.family.blocks[1], [[1.0]])
    assert np.allclose(frame_operator(result.family), [[5.0]])
    assert result.report.is_frame
    assert result.certificate_ok


def test_disjoint_sum_degenerate_second_operator(lam_family, ortho_family, tol):
    pair = OperatorPair(np.eye(1), np.zeros((1, 1)))
    result = disjoint_sum_family(lam_family, ortho_family, pair, tol)
    for block, original in zip(result.family.blocks, lam_family.blocks):
        assert np.allclose(block, original)
    assert result.report.is_frame and result.certificate_ok


def test_disjoint_sum_rectangular_surjection(tol):
    space = MeasureSpace([1.0, 1.0, 1.0, 1.0])
    lam = GFrameFamily(
        space=space,
        domain_dim=2,
        blocks=([[1.0, 0.0]], [[0.0, 1.0]], [[0.0, 0.0]], [[0.0, 0.0]]),
    )
    theta = GFrameFamily(
        space=space,
        domain_dim=2,
        blocks=([[0.0, 0.0]], [[0.0, 0.0]], [[1.0, 0.0]], [[0.0, 1.0]]),
    )
    pair = OperatorPair(np.array([[1.0, 0.0]]), np.array([[0.3, 0.7]]))
    result = disjoint_sum_family(lam, theta, pair, tol)
    assert result.family.domain_dim == 1
    assert result.report.is_frame and result.certificate_ok


def test_disjoint_sum_rejects_overlapping_pair(theta_family, tol):
    pair = OperatorPair(np.eye(1), np.eye(1))
    with pytest.raises(PreconditionError):
        disjoint_sum_family(theta_family, theta_family, pair, tol)


def test_disjoint_sum_rejects_two_singular_operators(lam_family, ortho_family, tol):
    pair = OperatorPair(np.zeros((1, 1)), np.zeros((1, 1)))
    with pytest.raises(PreconditionError):
        disjoint_sum_family(lam_family, ortho_family, pair, tol)


def test_strong_sum_scalar_three_four(lam_family, ortho_family, tol):
    pair = OperatorPair(3.0 * np.eye(1), 4.0 * np.eye(1))
    result = strongly_disjoint_sum(lam_family, ortho_family, pair, tol)
    assert result.scale == pytest.approx(25.0)
    assert np.allclose(result.family.blocks[0], [[3.0]])
    assert np.allclose(result.family.blocks[1], [[4.0]])
    assert result.report.is_tight
    assert result.report.upper_bound == pytest.approx(25.0, rel=1e-9)


def test_strong_sum_unit_circle_gives_parseval(lam_family, ortho_family, tol):
    scale = 1.0 / np.sqrt(2.0)
    pair = OperatorPair(scale * np.eye(1), scale * np.eye(1))
    result = strongly_disjoint_sum(lam_family, ortho_family, pair, tol)
    assert result.scale == pytest.approx(1.0)
    assert result.report.is_parseval


def test_strong_sum_degenerate_second_operator(lam_family, ortho_family, tol):
    pair = OperatorPair(np.eye(1), np.zeros((1, 1)))
    result = strongly_disjoint_sum(lam_family, ortho_family, pair, tol)
    assert result.scale == pytest.approx(1.0)
    for block, original in zip(result.family.blocks, lam_family.blocks):
        assert np.allclose(block, original)


def test_strong_sum_rejects_bad_gram(tol):
    # diag(2, 5) is not a multiple of the identity
    a, b = random_strongly_disjoint_parseval_pair(11, (1, 1, 2), 2, 2)
    bad = OperatorPair(np.diag([1.0, 2.0]).astype(complex), np.eye(2))
    with pytest.raises(PreconditionError):
        strongly_disjoint_sum(a, b, bad, tol)


def test_strong_sum_rejects_non_strong_pair(lam_family, theta_family, tol):
    pair = OperatorPair(np.eye(1), np.eye(1))
    with pytest.raises(PreconditionError):
        strongly_disjoint_sum(lam_family, theta_family, pair, tol)


def test_direct_sum_duals_requires_strong_disjointness(identity_family, tol):
    with pytest.raises(PreconditionError):
        direct_sum_duals(
            identity_family, identity_family, identity_family, identity_family, tol
        )


def test_direct_sum_duals_on_orthogonal_split(tol):
    lam, psi = random_strongly_disjoint_parseval_pair(21, (1, 1, 1, 2), 2, 2)
    theta, phi = canonical_dual(lam, tol), canonical_dual(psi, tol)
    result = direct_sum_duals(lam, theta, psi, phi, tol)
    assert result.dual_verified
    assert result.gamma.domain_dim == lam.domain_dim + psi.domain_dim


def test_pseudo_dual_identity_operators(lam_family, ortho_family, tol):
    pair = OperatorPair(np.eye(1), np.eye(1))
    result = pseudo_dual(lam_family, ortho_family, pair, tol)
    dual = canonical_dual(lam_family, tol)
    for a, b in zip(result.dual_candidate.blocks, dual.blocks):
        assert np.allclose(a, b)
    assert result.dual_of_sum and result.dual_of_single


def test_pseudo_dual_scaled_operator(lam_family, ortho_family, tol):
    pair = OperatorPair(2.0 * np.eye(1), np.eye(1))
    result = pseudo_dual(lam_family, ortho_family, pair, tol)
    dual = canonical_dual(lam_family, tol)
    for a, b in zip(result.dual_candidate.blocks, dual.blocks):
        assert np.allclose(a, 0.5 * b)
    assert result.dual_of_sum and result.dual_of_single


def test_pseudo_dual_rejects_singular_first_operator(lam_family, ortho_family, tol):
    pair = OperatorPair(np.zeros((1, 1)), np.eye(1))
    with pytest.raises(PreconditionError):
        pseudo_dual(lam_family, ortho_family, pair, tol)


def test_lift_standard_basis(tol):
    space = MeasureSpace([1.0, 1.0])
    basis = (np.array([1.0, 0.0]), np.array([0.0, 1.0]))
    f_spec = ContinuousFrameSpec(space=space, dim=2, vectors=basis)
    g_spec = ContinuousFrameSpec(space=space, dim=2, vectors=basis)
    lifted = lift_continuous_frame(f_spec, g_spec, tol)
    assert all(d == 2 for d in lifted.lam.block_dims)
    assert is_dual_pair(lifted.theta, lifted.lam, tol)
    assert is_dual_pair(lifted.psi, lifted.phi, tol)
    assert classify(lifted.lam, lifted.phi, tol).strongly_disjoint
    assert classify(lifted.theta, lifted.psi, tol).strongly_disjoint
    assert direct_sum_duals(lifted.lam, lifted.theta, lifted.psi, lifted.phi, tol).dual_verified


def test_lift_scalar_frame_halves_dual_coefficients(tol):
    space = MeasureSpace([1.0, 1.0])
    f_spec = ContinuousFrameSpec(space=space, dim=1, vectors=([1.0], [1.0]))
    g_spec = ContinuousFrameSpec(space=space, dim=1, vectors=([1.0], [0.0]))
    lifted = lift_continuous_frame(f_spec, g_spec, tol)
    assert np.allclose(lifted.theta.blocks[0], [[0.5], [0.0]])
    assert is_dual_pair(lifted.theta, lifted.lam, tol)


def test_lift_rejects_degenerate_spec(tol):
    space = MeasureSpace([1.0, 1.0])
    f_spec = ContinuousFrameSpec(space=space, dim=1, vectors=([0.0], [0.0]))
    g_spec = ContinuousFrameSpec(space=space, dim=1, vectors=([1.0], [0.0]))
    with pytest.raises(PreconditionError):
        lift_continuous_frame(f_spec, g_spec, tol)


def test_random_gframe_is_deterministic():
    first = random_gframe(1, (1, 1), 2)
    second = random_gframe(1, (1, 1), 2)
    assert first == second
    assert frame_bounds(first).is_frame


def test_random_gframe_rejects_impossible_frame_request():
    with pytest.raises(GenerationError):
        random_gframe(1, (1, 1), 3)


def test_random_gframe_undersized_without_enforcement():
    fam = random_gframe(1, (1, 1), 3, ensure_frame=False)
    assert not frame_bounds(fam).is_frame


def test_random_pair_split_full_is_strongly_complementary(tol):
    first, second = random_strongly_disjoint_parseval_pair(3, (1, 1, 2), 2, 2)
    report = classify(first, second, tol)
    assert report.strongly_disjoint and report.strongly_complementary_pair
    assert frame_bounds(first, tol).is_parseval
    assert frame_bounds(second, tol).is_parseval


def test_random_pair_partial_split_not_complementary(tol):
    first, second = random_strongly_disjoint_parseval_pair(4, (1, 1, 2), 1, 2)
    report = classify(first, second, tol)
    assert report.strongly_disjoint and not report.complementary_pair


def test_random_pair_replay_is_identical():
    a = random_strongly_disjoint_parseval_pair(9, (2, 1), 1, 2)
    b = random_strongly_disjoint_parseval_pair(9, (2, 1), 1, 2)
    assert a[0] == b[0] and a[1] == b[1]


def test_random_pair_rejects_infeasible_split():
    with pytest.raises(GenerationError):
        random_strongly_disjoint_parseval_pair(1, (1, 1), 2, 1)

"""Riesz-type detection and the surjectivity / perturbation results built on it.

A frame is Riesz-type exactly when its analysis operator fills the whole
weighted direct-sum target, i.e. the embedded analysis matrix has full row
rank.  Three equivalent certificates are computed through genuinely separate
routes (analysis rank, two-sided synthesis bound, synthesis kernel) so the
equivalence itself can be verified numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._linalg import (
    matrices_close,
    operator_norm,
    rank_cutoff,
    singular_values,
    smallest_gain,
    svd_rank,
)
from .analysis import cross_operator, frame_bounds, frame_operator
from .errors import PreconditionError, ShapeError
from .model import (
    DEFAULT_TOL,
    GFrameFamily,
    KHatVector,
    TolerancePolicy,
    analysis_matrix,
    apply_synthesis,
    khat_norm,
    require_same_khat,
    require_valid,
)


@dataclass(frozen=True)
class RieszReport:
    """Riesz-type verdict with the ranks and synthesis bounds behind it."""

    is_riesz_type: bool
    analysis_rank: int
    khat_dim: int
    synthesis_lower_bound: float
    synthesis_upper_bound: float


def synthesis_matrix(fam: GFrameFamily) -> np.ndarray:
    """Matrix of the synthesis operator in embedded coordinates (d x N).

    Built directly from the blocks (columns sqrt(w_i) * block_i^H side by
    side) rather than by transposing the analysis matrix, so the two can be
    compared as independent computations.
    """
    require_valid(fam)
    cols = [np.sqrt(w) * block.conj().T for w, block in zip(fam.space.weights, fam.blocks)]
    return np.hstack(cols)


def riesz_check(fam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL) -> RieszReport:
    """Riesz-type verdict for a frame, from the rank of its analysis matrix.

    ``synthesis_lower_bound`` is the square of the smallest gain of the
    synthesis operator over the whole target space (zero when the kernel is
    nontrivial); ``synthesis_upper_bound`` is the square of its largest
    singular value, which equals the upper frame bound.
    """
    if not frame_bounds(fam, tol).is_frame:
        raise PreconditionError("family is not a frame")
    a = analysis_matrix(fam)
    khat_dim = a.shape[0]
    rank = svd_rank(a, tol)
    synth = synthesis_matrix(fam)
    svals = singular_values(synth)
    upper = float(svals[0] ** 2) if svals.size else 0.0
    lower = smallest_gain(synth) ** 2
    return RieszReport(
        is_riesz_type=rank == khat_dim,
        analysis_rank=int(rank),
        khat_dim=int(khat_dim),
        synthesis_lower_bound=lower,
        synthesis_upper_bound=upper,
    )


def synthesis_kernel_test(
    fam: GFrameFamily, phi: KHatVector, tol: TolerancePolicy = DEFAULT_TOL
) -> bool:
    """True when the synthesis image of ``phi`` vanishes at tolerance.

    A True verdict for a nonzero ``phi`` certifies that the family is not
    Riesz-type.
    """
    if phi.block_dims != fam.block_dims:
        raise ShapeError(
            f"vector block dims {phi.block_dims} != family block dims {fam.block_dims}"
        )
    image = apply_synthesis(fam, phi)
    bessel = float(np.linalg.eigvalsh(frame_operator(fam))[-1])
    scale = np.sqrt(max(bessel, 0.0)) * khat_norm(phi, fam.space)
    return float(np.linalg.norm(image)) <= tol.rel_eps * scale


def riesz_criteria(
    fam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL
) -> tuple[bool, bool, bool]:
    """The three equivalent Riesz-type certificates, each computed on its own.

    (range test, two-sided synthesis bound test, synthesis kernel test);
    all three must agree on every frame.
    """
    report = riesz_check(fam, tol)
    synth = synthesis_matrix(fam)
    svals = singular_values(synth)
    cutoff = rank_cutoff(synth.shape, float(svals[0]) if svals.size else 0.0, tol)
    bounded_below = smallest_gain(synth) > cutoff
    kernel_dim = synth.shape[1] - svd_rank(synth, tol)
    return report.is_riesz_type, bounded_below, kernel_dim == 0


@dataclass(frozen=True)
class MixedConstruction:
    """Result of combining a dual-like pair through two operators summing to a frame.

    ``adjoint_combination_surjective`` and ``synthesis_combination_lower_bound``
    re-derive the Riesz-type verdict through the combined analysis and
    synthesis operators; ``criteria_agree`` records that all three routes
    concur.  ``sandwich_ok`` flags whether the constructed family's bounds sit
    inside the guaranteed window [2, upper_certificate].
    """

    family: GFrameFamily
    riesz_report: RieszReport
    adjoint_combination_surjective: bool
    synthesis_combination_lower_bound: float
    criteria_agree: bool
    lower_bound: float
    upper_bound: float
    upper_certificate: float
    sandwich_ok: bool


def mixed_construction(
    lam: GFrameFamily,
    theta: GFrameFamily,
    l1: np.ndarray,
    l2: np.ndarray,
    tol: TolerancePolicy = DEFAULT_TOL,
) -> MixedConstruction:
    """Build the family with blocks lam_i @ L1 + theta_i @ L2 and certify it.

    Requires the mixed cross operator of the pair to be the identity and
    L1^H L2 = I.  The result is always a frame with lower bound >= 2 and
    upper bound <= B_lam ||L1||^2 + 2 + B_theta ||L2||^2.
    """
    require_same_khat(lam, theta)
    if lam.domain_dim != theta.domain_dim:
        raise ShapeError("both families must share the same domain")
    d = lam.domain_dim
    l1 = np.asarray(l1, dtype=complex)
    l2 = np.asarray(l2, dtype=complex)
    if l1.shape != (d, d) or l2.shape != (d, d):
        raise ShapeError(f"L1 and L2 must be {d} x {d}")
    eye = np.eye(d)
    if not matrices_close(cross_operator(lam, theta), eye, tol.rel_eps):
        raise PreconditionError("cross operator of the pair is not the identity")
    if not matrices_close(l1.conj().T @ l2, eye, tol.rel_eps):
        raise PreconditionError("L1^H L2 is not the identity")

    blocks = tuple(
        lb @ l1 + tb @ l2 for lb, tb in zip(lam.blocks, theta.blocks)
    )
    combined = GFrameFamily(space=lam.space, domain_dim=d, blocks=blocks)
    report = frame_bounds(combined, tol)
    b_lam = frame_bounds(lam, tol).upper_bound
    b_theta = frame_bounds(theta, tol).upper_bound
    upper_cert = b_lam * operator_norm(l1) ** 2 + 2.0 + b_theta * operator_norm(l2) ** 2
    sandwich_ok = (
        report.lower_bound >= 2.0 * (1.0 - tol.rel_eps)
        and report.upper_bound <= upper_cert * (1.0 + tol.rel_eps)
    )

    riesz_report = riesz_check(combined, tol)

    # Independent route (ii): rank of the combined analysis operator.
    combined_analysis = analysis_matrix(lam) @ l1 + analysis_matrix(theta) @ l2
    surjective = svd_rank(combined_analysis, tol) == combined.codomain_dim

    # Independent route (iii): lower bound of the combined synthesis operator.
    combined_synthesis = l1.conj().T @ synthesis_matrix(lam) + l2.conj().T @ synthesis_matrix(theta)
    svals = singular_values(combined_synthesis)
    cutoff = rank_cutoff(
        combined_synthesis.shape, float(svals[0]) if svals.size else 0.0, tol
    )
    gain = smallest_gain(combined_synthesis)
    positive_lower = gain > cutoff

    return MixedConstruction(
        family=combined,
        riesz_report=riesz_report,
        adjoint_combination_surjective=surjective,
        synthesis_combination_lower_bound=float(gain**2),
        criteria_agree=(riesz_report.is_riesz_type == surjective == positive_lower),
        lower_bound=report.lower_bound,
        upper_bound=report.upper_bound,
        upper_certificate=float(upper_cert),
        sandwich_ok=sandwich_ok,
    )


def cross_surjectivity(
    lam: GFrameFamily, theta: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL
) -> tuple[bool, bool]:
    """(theta is a frame, mixed cross operator is surjective).

    ``lam`` must be a frame; ``theta`` only needs to be a well-formed family
    over the same target.  Surjectivity of the cross operator forces ``theta``
    to be a frame; conversely a Riesz-type ``lam`` and a frame ``theta`` force
    surjectivity.
    """
    require_same_khat(lam, theta)
    if not frame_bounds(lam, tol).is_frame:
        raise PreconditionError("first family is not a frame")
    cross = cross_operator(theta, lam)
    surjective = svd_rank(cross, tol) == theta.domain_dim
    theta_frame = frame_bounds(theta, tol).is_frame
    return theta_frame, surjective


@dataclass(frozen=True)
class PerturbationResult:
    lambda_gap: float
    criterion_met: bool
    equivalence_verified: bool


def perturbation_riesz_transfer(
    lam: GFrameFamily, theta: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL
) -> PerturbationResult:
    """Perturbation criterion: when the mixed cross operator stays within the
    lower frame bound of ``lam``, the two families share their Riesz-type verdict.

    ``lambda_gap`` is the operator norm of (cross operator - frame operator);
    the comparison requires both families to share the same domain dimension.
    ``equivalence_verified`` is only meaningful when ``criterion_met``.
    """
    require_same_khat(lam, theta)
    if theta.domain_dim != lam.domain_dim:
        raise ShapeError(
            f"domain dims differ: {theta.domain_dim} vs {lam.domain_dim}"
        )
    rep = frame_bounds(lam, tol)
    if not rep.is_frame:
        raise PreconditionError("first family is not a frame")
    gap = operator_norm(cross_operator(theta, lam) - frame_operator(lam))
    criterion_met = gap < rep.lower_bound * (1.0 - tol.rel_eps)
    if criterion_met:
        equivalence = (
            riesz_check(lam, tol).is_riesz_type == riesz_check(theta, tol).is_riesz_type
        )
    else:
        equivalence = False
    return PerturbationResult(
        lambda_gap=float(gap),
        criterion_met=criterion_met,
        equivalence_verified=equivalence,
    )

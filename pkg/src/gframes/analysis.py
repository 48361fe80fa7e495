"""Frame operator, optimal bounds, duals, and cross operators of g-frame families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._linalg import MACHINE_EPS, hermitian_power, hermitize, matrices_close
from .errors import ShapeError
from .model import (
    DEFAULT_TOL,
    GFrameFamily,
    TolerancePolicy,
    require_same_khat,
    require_valid,
    right_compose,
)


@dataclass(frozen=True)
class FrameReport:
    """Frame operator with its spectral bounds and classification flags.

    ``lower_bound`` and ``upper_bound`` are the extreme eigenvalues of the
    frame operator; they are the optimal constants in the defining
    inequality. ``is_frame`` holds when the lower bound clears the rank
    cutoff, ``is_tight`` when the bounds agree relatively, ``is_parseval``
    when additionally the common bound is 1.
    """

    frame_operator: np.ndarray
    lower_bound: float
    upper_bound: float
    is_frame: bool
    is_tight: bool
    is_parseval: bool


def frame_operator(fam: GFrameFamily) -> np.ndarray:
    """Hermitian positive semidefinite d x d matrix: sum of w_i * block_i^H block_i."""
    require_valid(fam)
    out = np.zeros((fam.domain_dim, fam.domain_dim), dtype=complex)
    for w, block in zip(fam.space.weights, fam.blocks):
        out += w * (block.conj().T @ block)
    return hermitize(out)


def frame_lower_cutoff(domain_dim: int, upper: float, tol: TolerancePolicy) -> float:
    """Eigenvalues at or below this value do not count as a positive lower bound."""
    return tol.rank_eps_factor * domain_dim * upper * MACHINE_EPS


def frame_bounds(fam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL) -> FrameReport:
    """Optimal frame bounds and flags from the spectrum of the frame operator."""
    op = frame_operator(fam)
    evals = np.linalg.eigvalsh(op)
    lower = float(evals[0])
    upper = float(evals[-1])
    is_frame = lower > frame_lower_cutoff(fam.domain_dim, upper, tol)
    is_tight = is_frame and (upper - lower) <= tol.rel_eps * upper
    is_parseval = (
        is_tight
        and abs(upper - 1.0) <= tol.rel_eps
        and abs(lower - 1.0) <= tol.rel_eps
    )
    return FrameReport(
        frame_operator=op,
        lower_bound=lower,
        upper_bound=upper,
        is_frame=is_frame,
        is_tight=is_tight,
        is_parseval=is_parseval,
    )


def canonical_dual(fam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL) -> GFrameFamily:
    """Family with blocks block_i @ S^{-1}; the unique dual built from the frame operator.

    Raises SingularOperatorError when the family is not a frame.
    """
    inverse = hermitian_power(frame_operator(fam), -1.0, tol)
    return right_compose(fam, inverse)


def parseval_normalize(fam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL) -> GFrameFamily:
    """Family with blocks block_i @ S^{-1/2}; always Parseval for a frame input."""
    inv_root = hermitian_power(frame_operator(fam), -0.5, tol)
    return right_compose(fam, inv_root)


def cross_operator(left: GFrameFamily, right: GFrameFamily) -> np.ndarray:
    """Mixed Gram-type operator: sum of w_i * left_i^H right_i.

    Maps the domain of ``right`` into the domain of ``left``; swapping the
    arguments yields the conjugate transpose.  With both arguments equal it
    reduces to :func:`frame_operator`.
    """
    require_same_khat(left, right)
    require_valid(left)
    require_valid(right)
    out = np.zeros((left.domain_dim, right.domain_dim), dtype=complex)
    for w, lb, rb in zip(left.space.weights, left.blocks, right.blocks):
        out += w * (lb.conj().T @ rb)
    return out


def is_dual_pair(
    theta: GFrameFamily, lam: GFrameFamily, tol: TolerancePolicy = DEFAULT_TOL
) -> bool:
    """True when ``theta`` is a dual of ``lam``: both are frames and the mixed
    pairing reproduces the identity.

    Both orderings of the cross operator are checked; they are conjugate
    transposes of each other, so the verdict is symmetric.
    """
    require_same_khat(theta, lam)
    if theta.domain_dim != lam.domain_dim:
        raise ShapeError(
            f"domain dims differ: {theta.domain_dim} vs {lam.domain_dim}"
        )
    if not frame_bounds(theta, tol).is_frame or not frame_bounds(lam, tol).is_frame:
        return False
    eye = np.eye(lam.domain_dim)
    return matrices_close(cross_operator(theta, lam), eye, tol.rel_eps) and matrices_close(
        cross_operator(lam, theta), eye, tol.rel_eps
    )

"""Finite-measure-space realization of g-frame families and their coordinate space.

Everything downstream works over a finite set of weighted atoms: a family of
operator blocks per atom plays the role of the g-frame, and the weighted
direct sum of the block codomains plays the role of the analysis target space.
The square-root-weight embedding defined here turns that weighted geometry
into plain Euclidean geometry, and every rank/orthogonality computation in the
package happens in those embedded coordinates.

Inner product convention: linear in the FIRST argument, conjugate-linear in
the second. All adjoints are conjugate transposes under this convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FamilyValidationError, ShapeError


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _as_block(values) -> np.ndarray:
    """Coerce to a read-only 2-D complex matrix; 1-D input is a single row."""
    arr = np.array(values, dtype=complex)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1)
    elif arr.ndim != 2:
        raise ShapeError(f"operator block must be 2-D, got ndim={arr.ndim}")
    return _freeze(arr)


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Standard inner product, linear in ``x`` and conjugate-linear in ``y``."""
    return complex(np.vdot(y, x))


@dataclass(frozen=True, eq=False)
class TolerancePolicy:
    """Numeric tolerances used by every comparison in the package.

    ``rel_eps`` controls relative equality of scalars and matrices;
    ``rank_eps_factor`` scales the SVD rank cutoff
    (singular values below factor * max(rows, cols) * sigma_max * machine_eps
    count as zero).
    """

    rel_eps: float = 1e-9
    rank_eps_factor: float = 10.0

    def __post_init__(self):
        if not self.rel_eps > 0:
            raise ValueError("rel_eps must be positive")
        if not self.rank_eps_factor >= 1:
            raise ValueError("rank_eps_factor must be >= 1")


DEFAULT_TOL = TolerancePolicy()


@dataclass(frozen=True, eq=False)
class MeasureSpace:
    """Finite set of atoms with strictly positive weights.

    Construction is permissive so that invalid data can be inspected;
    :func:`validate_family` reports weight violations as data.
    """

    weights: np.ndarray

    def __post_init__(self):
        arr = np.array(self.weights, dtype=float).reshape(-1)
        object.__setattr__(self, "weights", _freeze(arr))

    @property
    def atom_count(self) -> int:
        return int(self.weights.size)

    def violations(self) -> list[str]:
        found = []
        if self.atom_count < 1:
            found.append("atom_count must be >= 1")
        for i, w in enumerate(self.weights):
            if not (np.isfinite(w) and w > 0):
                found.append(f"weights[{i}] = {w} not > 0")
        return found

    def __eq__(self, other) -> bool:
        return isinstance(other, MeasureSpace) and np.array_equal(self.weights, other.weights)


@dataclass(frozen=True, eq=False)
class GFrameFamily:
    """A measure space plus one complex operator block per atom.

    ``blocks[i]`` maps the shared ``domain_dim``-dimensional domain into the
    atom's codomain of dimension ``block_dims[i]``. ``block_dims`` may be
    omitted, in which case it is read off the blocks; passing it explicitly
    lets :func:`validate_family` catch mismatches.
    """

    space: MeasureSpace
    domain_dim: int
    blocks: tuple[np.ndarray, ...]
    block_dims: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        blocks = tuple(_as_block(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.block_dims is None:
            object.__setattr__(self, "block_dims", tuple(b.shape[0] for b in blocks))
        else:
            object.__setattr__(self, "block_dims", tuple(int(d) for d in self.block_dims))

    @property
    def atom_count(self) -> int:
        return self.space.atom_count

    @property
    def codomain_dim(self) -> int:
        """Total dimension N of the weighted direct-sum target space."""
        return int(sum(self.block_dims))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFrameFamily)
            and self.space == other.space
            and self.domain_dim == other.domain_dim
            and self.block_dims == other.block_dims
            and len(self.blocks) == len(other.blocks)
            and all(np.array_equal(a, b) for a, b in zip(self.blocks, other.blocks))
        )


@dataclass(frozen=True, eq=False)
class KHatVector:
    """One complex vector per atom; an element of the weighted direct sum."""

    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        blocks = tuple(_freeze(np.array(b, dtype=complex).reshape(-1)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_dims(self) -> tuple[int, ...]:
        return tuple(b.size for b in self.blocks)

    @classmethod
    def zeros(cls, block_dims) -> "KHatVector":
        return cls(tuple(np.zeros(int(d), dtype=complex) for d in block_dims))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KHatVector)
            and self.block_dims == other.block_dims
            and all(np.array_equal(a, b) for a, b in zip(self.blocks, other.blocks))
        )


def validate_family(fam: GFrameFamily) -> list[str]:
    """Return every violated structural invariant; an empty list means valid."""
    found = fam.space.violations()
    if int(fam.domain_dim) < 1:
        found.append(f"domain_dim = {fam.domain_dim} not >= 1")
    n = fam.space.atom_count
    if len(fam.blocks) != n:
        found.append(f"blocks.length = {len(fam.blocks)} != atom_count = {n}")
    if len(fam.block_dims) != len(fam.blocks):
        found.append(
            f"block_dims.length = {len(fam.block_dims)} != blocks.length = {len(fam.blocks)}"
        )
    for i, block in enumerate(fam.blocks):
        if i < len(fam.block_dims) and block.shape[0] != fam.block_dims[i]:
            found.append(
                f"block {i} has {block.shape[0]} rows, expected block_dims[{i}] = {fam.block_dims[i]}"
            )
        if block.shape[1] != fam.domain_dim:
            found.append(
                f"block {i} has {block.shape[1]} columns, expected domain_dim = {fam.domain_dim}"
            )
        if not np.all(np.isfinite(block.view(float))):
            found.append(f"block {i} contains non-finite entries")
    if sum(fam.block_dims) < 1:
        found.append("total codomain dimension must be >= 1")
    return found


def require_valid(fam: GFrameFamily) -> None:
    violations = validate_family(fam)
    if violations:
        raise FamilyValidationError(violations)


def require_same_khat(first: GFrameFamily, second: GFrameFamily) -> None:
    """Both families must target the same weighted direct-sum space."""
    if first.space != second.space:
        raise ShapeError("families live over different measure spaces")
    if first.block_dims != second.block_dims:
        raise ShapeError(
            f"families have different block dimensions: {first.block_dims} vs {second.block_dims}"
        )


def khat_inner(f: KHatVector, g: KHatVector, space: MeasureSpace) -> complex:
    """Weighted inner product: sum over atoms of weight * <F_i, G_i>."""
    if f.block_dims != g.block_dims:
        raise ShapeError(f"block dims differ: {f.block_dims} vs {g.block_dims}")
    if len(f.blocks) != space.atom_count:
        raise ShapeError(
            f"vector has {len(f.blocks)} blocks but space has {space.atom_count} atoms"
        )
    return complex(
        sum(w * inner(fb, gb) for w, fb, gb in zip(space.weights, f.blocks, g.blocks))
    )


def khat_norm(f: KHatVector, space: MeasureSpace) -> float:
    return float(np.sqrt(max(khat_inner(f, f, space).real, 0.0)))


def embed(f: KHatVector, space: MeasureSpace) -> np.ndarray:
    """Stack sqrt(weight) * F_i in atom order; isometric onto standard coordinates."""
    if len(f.blocks) != space.atom_count:
        raise ShapeError(
            f"vector has {len(f.blocks)} blocks but space has {space.atom_count} atoms"
        )
    parts = [np.sqrt(w) * fb for w, fb in zip(space.weights, f.blocks)]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=complex)


def unembed(vector: np.ndarray, space: MeasureSpace, block_dims) -> KHatVector:
    """Inverse of :func:`embed`: split and undo the square-root weighting."""
    vector = np.asarray(vector, dtype=complex).reshape(-1)
    dims = tuple(int(d) for d in block_dims)
    if vector.size != sum(dims):
        raise ShapeError(f"vector length {vector.size} != total block dim {sum(dims)}")
    if len(dims) != space.atom_count:
        raise ShapeError("block_dims do not match the measure space")
    blocks, offset = [], 0
    for w, d in zip(space.weights, dims):
        blocks.append(vector[offset : offset + d] / np.sqrt(w))
        offset += d
    return KHatVector(tuple(blocks))


def analysis_matrix(fam: GFrameFamily) -> np.ndarray:
    """Matrix of the analysis operator in embedded coordinates (N x d).

    Rows are the blocks sqrt(weight_i) * block_i stacked in atom order, so that
    for any h the product equals the embedding of the blockwise application.
    The synthesis operator's matrix is the conjugate transpose.
    """
    require_valid(fam)
    rows = [np.sqrt(w) * block for w, block in zip(fam.space.weights, fam.blocks)]
    return np.vstack(rows)


def family_from_analysis_matrix(matrix: np.ndarray, space: MeasureSpace, block_dims) -> GFrameFamily:
    """Rebuild the family whose embedded analysis matrix is ``matrix``."""
    matrix = np.asarray(matrix, dtype=complex)
    dims = tuple(int(d) for d in block_dims)
    if matrix.ndim != 2 or matrix.shape[0] != sum(dims):
        raise ShapeError(
            f"matrix has {matrix.shape[0]} rows, expected total block dim {sum(dims)}"
        )
    if len(dims) != space.atom_count:
        raise ShapeError("block_dims do not match the measure space")
    blocks, offset = [], 0
    for w, d in zip(space.weights, dims):
        blocks.append(matrix[offset : offset + d, :] / np.sqrt(w))
        offset += d
    return GFrameFamily(space=space, domain_dim=matrix.shape[1], blocks=tuple(blocks))


def apply_analysis(fam: GFrameFamily, h: np.ndarray) -> KHatVector:
    """Blockwise application: atom i carries block_i @ h."""
    h = np.asarray(h, dtype=complex).reshape(-1)
    if h.size != fam.domain_dim:
        raise ShapeError(f"vector length {h.size} != domain_dim {fam.domain_dim}")
    return KHatVector(tuple(block @ h for block in fam.blocks))


def apply_synthesis(fam: GFrameFamily, phi: KHatVector) -> np.ndarray:
    """Adjoint of the analysis operator: sum of weight_i * block_i^H @ phi_i."""
    if phi.block_dims != fam.block_dims:
        raise ShapeError(
            f"vector block dims {phi.block_dims} != family block dims {fam.block_dims}"
        )
    out = np.zeros(fam.domain_dim, dtype=complex)
    for w, block, pb in zip(fam.space.weights, fam.blocks, phi.blocks):
        out += w * (block.conj().T @ pb)
    return out


def right_compose(fam: GFrameFamily, operator: np.ndarray) -> GFrameFamily:
    """Family with blocks block_i @ operator; the domain becomes operator's."""
    operator = np.asarray(operator, dtype=complex)
    if operator.ndim != 2 or operator.shape[0] != fam.domain_dim:
        raise ShapeError(
            f"operator shape {operator.shape} does not act on domain of dim {fam.domain_dim}"
        )
    return GFrameFamily(
        space=fam.space,
        domain_dim=operator.shape[1],
        blocks=tuple(block @ operator for block in fam.blocks),
    )

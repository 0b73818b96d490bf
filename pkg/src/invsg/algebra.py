"""The complex semigroup algebra of the enumerated inverse semigroup.

The basis is the enumerated semigroup itself; the product of two basis
elements is a single basis element, so the algebra is described by an
integer multiplication table plus an involution table.  This finite-
dimensional model is what the package means by the "partial group
algebra" of a finite group: its monomial basis multiplies exactly like
the spanning monomials (projection times group shift) of the partial
crossed product, and all block computations happen here.

The numerical block decomposition follows the classical route: find
the center, pick a random central element, cluster the spectrum of its
left-regular matrix, interpolate to get the central primitive
idempotents, and read each block size off a rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup
from .semigroup import (
    CapExceeded,
    SgElement,
    enumerate_semigroup,
    generator,
    multiplication_tables,
    order_formula,
    unit,
)

DEFAULT_DIM_CAP = 1000
CLUSTER_GAP = 1e-6
RANK_PIVOT_TOL = 1e-8


class EigenvalueClusterAmbiguous(RuntimeError):
    """Two spectral clusters sit dangerously close; retry with a new seed."""


class NonIntegerBlockDim(RuntimeError):
    """A block dimension failed its integrality check (non-semisimple
    input or a tolerance failure)."""


class RankThresholdBreach(RuntimeError):
    """A singular value fell inside the decision band of a rank cutoff."""


class StructureAlgebra:
    """Basis-indexed algebra: mult[i, j] is the basis index of b_i b_j.

    Built over the enumerated semigroup by :func:`build_algebra`; the
    same shape also carries the plain group algebra for contrast tests
    (see :func:`group_algebra`).  Instances are immutable in use and
    compare by identity.
    """

    def __init__(
        self,
        group: FiniteGroup,
        basis: tuple,
        mult: np.ndarray,
        star: np.ndarray,
        unit_index: int,
    ):
        self.group = group
        self.basis = basis
        self.mult = mult
        self.star = star
        self.unit_index = unit_index
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit_vector(self, dtype=np.float64) -> np.ndarray:
        v = np.zeros(self.dim, dtype=dtype)
        v[self.unit_index] = 1
        return v

    def basis_vector(self, i: int, dtype=np.float64) -> np.ndarray:
        v = np.zeros(self.dim, dtype=dtype)
        v[i] = 1
        return v


def build_algebra(group: FiniteGroup, cap: int = DEFAULT_DIM_CAP) -> StructureAlgebra:
    """Tables for the semigroup algebra; dimension 2^(p-2)(p+1)."""
    if group.order >= 2 and order_formula(group.order) > cap:
        raise CapExceeded(
            f"algebra dimension {order_formula(group.order)} exceeds cap {cap}"
        )
    elements = enumerate_semigroup(group, cap=group.order)
    mult, star, unit_idx = multiplication_tables(elements)
    return StructureAlgebra(group, tuple(elements), mult, star, unit_idx)


def group_algebra(group: FiniteGroup) -> StructureAlgebra:
    """The plain group algebra on the same chassis (basis = group indices)."""
    mult = np.array([list(row) for row in group.table], dtype=np.int64)
    star = np.array(group.inverses, dtype=np.int64)
    return StructureAlgebra(group, tuple(group.elements()), mult, star, group.identity)


def multiply_elements(a: StructureAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear extension of the basis product to coefficient vectors."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != (a.dim,) or y.shape != (a.dim,):
        raise ValueError("coefficient vectors have the wrong length")
    out = np.zeros(a.dim, dtype=np.result_type(x.dtype, y.dtype))
    prod = np.outer(x, y)
    np.add.at(out, a.mult.ravel(), prod.ravel())
    return out


def left_regular_matrix(a: StructureAlgebra, x: np.ndarray) -> np.ndarray:
    """Matrix of left multiplication by x in the monomial basis."""
    x = np.asarray(x)
    if x.shape != (a.dim,):
        raise ValueError("coefficient vector has the wrong length")
    n = a.dim
    out = np.zeros((n, n), dtype=np.result_type(x.dtype, np.float64))
    rows = a.mult.ravel()
    cols = np.tile(np.arange(n), n)
    vals = np.repeat(x, n)
    np.add.at(out, (rows, cols), vals)
    return out


def _nullspace(m: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis (columns) of the null space, with a guard band
    around the singular-value cutoff."""
    if m.size == 0:
        return np.eye(m.shape[1])
    _, svals, vt = np.linalg.svd(m)
    cutoff = tol * max(m.shape)
    in_band = (svals > cutoff / 10) & (svals < cutoff * 10)
    if np.any(in_band):
        raise RankThresholdBreach(
            f"singular value {svals[in_band][0]:.3e} inside the cutoff band around {cutoff:.3e}"
        )
    rank = int(np.sum(svals > cutoff))
    return vt[rank:].conj().T


def center(a: StructureAlgebra, tol: float = 1e-10) -> list[np.ndarray]:
    """Orthonormal basis of the center.

    Intersects the null spaces of the commutator maps z -> z b_i - b_i z
    one basis element at a time; the running basis stays orthonormal,
    so the result needs no further orthogonalization.
    """
    n = a.dim
    cols = np.arange(n)
    k = np.eye(n)
    for i in range(n):
        if i == a.unit_index:
            continue
        left = np.zeros((n, n))
        left[a.mult[i, :], cols] = 1.0          # b_i * z
        right = np.zeros((n, n))
        right[a.mult[:, i], cols] = 1.0         # z * b_i
        k = k @ _nullspace((right - left) @ k, tol)
        if k.shape[1] == 0:
            break
    return [k[:, j].copy() for j in range(k.shape[1])]


@dataclass
class BlockDecomposition:
    """Sorted matrix-block sizes with the central primitive idempotents."""

    blocks: tuple[int, ...]
    idempotents: list[np.ndarray]
    eigenvalues: tuple[complex, ...]
    residual: float

    @property
    def dimension(self) -> int:
        return int(sum(b * b for b in self.blocks))

    def describe(self) -> str:
        return (
            f"blocks {list(self.blocks)}; {len(self.blocks)} summands; "
            f"residual {self.residual:.3e}"
        )


def _cluster(values: np.ndarray, gap: float) -> list[np.ndarray]:
    """Chain-cluster complex values: points closer than ``gap`` join up."""
    order = np.lexsort((values.imag, values.real))
    vals = values[order]
    groups: list[list[complex]] = []
    for v in vals:
        placed = False
        for grp in groups:
            if any(abs(v - w) < gap for w in grp):
                grp.append(v)
                placed = True
                break
        if not placed:
            groups.append([v])
    # merge transitively-linked clusters until stable
    merged = True
    while merged:
        merged = False
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                if any(abs(v - w) < gap for v in groups[i] for w in groups[j]):
                    groups[i].extend(groups[j])
                    del groups[j]
                    merged = True
                    break
            if merged:
                break
    return [np.array(grp) for grp in groups]


def wedderburn(
    a: StructureAlgebra,
    seed: int = 0,
    tol: float = 1e-9,
    cluster_gap: float = CLUSTER_GAP,
) -> BlockDecomposition:
    """Numerical block decomposition of a (semisimple) structure algebra.

    Procedure: draw a random real combination of the center basis,
    cluster the eigenvalues of its left-regular matrix, interpolate the
    indicator polynomial of each cluster to obtain the central
    primitive idempotents, then read n_i off the rank of the corner
    z_i A z_i.  Raises EigenvalueClusterAmbiguous when two clusters sit
    within 10x the clustering gap (reseed), and NonIntegerBlockDim when
    a corner rank is not a perfect square.
    """
    zbasis = center(a)
    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(size=len(zbasis))
    z = np.zeros(a.dim)
    for c, v in zip(coeffs, zbasis):
        z = z + c * v

    lz = left_regular_matrix(a, z)
    eigs = np.linalg.eigvals(lz)
    clusters = _cluster(eigs, cluster_gap)
    centers = [complex(np.mean(grp)) for grp in clusters]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if abs(centers[i] - centers[j]) < 10 * cluster_gap:
                raise EigenvalueClusterAmbiguous(
                    f"clusters {centers[i]:.6f} and {centers[j]:.6f} are too close; reseed"
                )
    if len(centers) < len(zbasis):
        raise EigenvalueClusterAmbiguous(
            f"only {len(centers)} spectral clusters for a center of dimension "
            f"{len(zbasis)}; the random central element failed to separate blocks"
        )
    if len(centers) > len(zbasis):
        raise NonIntegerBlockDim(
            f"{len(centers)} spectral clusters for a center of dimension {len(zbasis)}"
        )

    unit_vec = a.unit_vector(dtype=np.complex128)
    z_c = z.astype(np.complex128)
    idempotents = []
    for i, lam in enumerate(centers):
        q = unit_vec.copy()
        for j, mu in enumerate(centers):
            if j == i:
                continue
            q = multiply_elements(a, q, (z_c - mu * unit_vec)) / (lam - mu)
        # sharpen away interpolation roundoff: q <- 3q^2 - 2q^3 converges
        # quadratically to the exact spectral idempotent
        for _ in range(3):
            q2 = multiply_elements(a, q, q)
            if float(np.max(np.abs(q2 - q))) <= 10 * np.finfo(float).eps:
                break
            q = 3 * q2 - 2 * multiply_elements(a, q2, q)
        idempotents.append(q)

    residual = 0.0
    total = np.zeros(a.dim, dtype=np.complex128)
    for i, zi in enumerate(idempotents):
        total = total + zi
        for j, zj in enumerate(idempotents):
            prod = multiply_elements(a, zi, zj)
            target = zi if i == j else 0.0
            residual = max(residual, float(np.max(np.abs(prod - target))))
    residual = max(residual, float(np.max(np.abs(total - unit_vec))))

    blocks = []
    for zi in idempotents:
        corner = np.empty((a.dim, a.dim), dtype=np.complex128)
        for j in range(a.dim):
            bj = np.zeros(a.dim, dtype=np.complex128)
            bj[j] = 1.0
            corner[j] = multiply_elements(a, multiply_elements(a, zi, bj), zi)
        rank = int(np.linalg.matrix_rank(corner, tol=RANK_PIVOT_TOL))
        root = round(rank**0.5)
        if root * root != rank:
            raise NonIntegerBlockDim(f"corner dimension {rank} is not a perfect square")
        blocks.append(root)

    blocks.sort()
    decomposition = BlockDecomposition(
        tuple(blocks), idempotents, tuple(centers), residual
    )
    if decomposition.dimension != a.dim:
        raise NonIntegerBlockDim(
            f"block dimensions sum to {decomposition.dimension}, expected {a.dim}"
        )
    return decomposition


def generator_vector(a: StructureAlgebra, t: int) -> np.ndarray:
    """Coefficient vector of the basis monomial ({e, t}, t).

    These satisfy the partial-representation identities exactly inside
    the structure constants (u_s u_t u_{t^-1} = u_{st} u_{t^-1},
    star(u_t) = u_{t^-1}, u_e = unit).
    """
    g = a.group
    return a.basis_vector(a.index[generator(g, t)])


def generator_index(a: StructureAlgebra, t: int) -> int:
    return a.index[generator(a.group, t)]


def unit_element(a: StructureAlgebra) -> SgElement:
    return unit(a.group)

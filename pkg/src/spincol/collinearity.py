"""Spin vector, 3x3 spin covariance matrix, and the optimal quantization axis.

The collinearity of a determinant along a unit direction u is measured by the
variance of the projected spin, col(u) = <(u.S)^2> - <u.S>^2.  Collecting the
variances and covariances of Sx, Sy, Sz gives a real symmetric 3x3 matrix A
with col(u) = u^T A u; its lowest eigenvalue is the best achievable value and
the corresponding eigenvector is the optimal quantization axis.

A has a closed form in the spinor overlap blocks.  With the Hermitian Ne x Ne
compressions T_mu[k, i] = <phi_k | S_mu phi_i>,

    A[mu, nu] = delta(mu, nu) * Ne / 4 - Re tr(T_mu T_nu),

where the <S_mu><S_nu> cross terms cancel exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .determinant import OverlapBlocks
from .errors import NotSymmetric, NotUnitVector
from .spin import expect_splus, expect_sz

UNIT_VECTOR_TOL = 1e-10
SYMMETRY_TOL = 1e-10
DEGENERACY_GAP = 1e-10
_JACOBI_SWEEPS = 50


@dataclass(frozen=True)
class SpinVector:
    """Cartesian spin expectation values (<Sx>, <Sy>, <Sz>)."""

    sx: float
    sy: float
    sz: float

    def as_array(self) -> np.ndarray:
        return np.array([self.sx, self.sy, self.sz])

    def norm_sq(self) -> float:
        return self.sx**2 + self.sy**2 + self.sz**2


@dataclass(frozen=True)
class CollinearityResult:
    """Eigen-analysis of the spin covariance matrix.

    ``eigenvalues`` ascend; ``eigenvectors[:, k]`` is the unit eigenvector of
    ``eigenvalues[k]``, sign-normalized so its largest-magnitude component is
    positive.  ``col`` is the lowest eigenvalue and ``optimal_axis`` its
    eigenvector; ``degenerate`` flags a lowest eigenvalue shared within
    1e-10, in which case the axis is picked deterministically by the ordering
    key (|z|, |x|, |y|).
    """

    a_matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    col: float
    optimal_axis: np.ndarray
    degenerate: bool

    def __post_init__(self):
        for name in ("a_matrix", "eigenvalues", "eigenvectors", "optimal_axis"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def spin_vector(blocks: OverlapBlocks) -> SpinVector:
    """<Sx>, <Sy>, <Sz> from the ladder and z expectations."""
    ladder = expect_splus(blocks)
    return SpinVector(sx=ladder.real, sy=ladder.imag, sz=expect_sz(blocks))


def pauli_compressions(blocks: OverlapBlocks) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hermitian Ne x Ne matrices T_mu[k, i] = <phi_k | S_mu phi_i>, mu = x, y, z."""
    t_x = 0.5 * (blocks.o_ab + blocks.o_ba)
    t_y = 0.5j * (blocks.o_ba - blocks.o_ab)
    t_z = 0.5 * (blocks.o_aa - blocks.o_bb)
    return t_x, t_y, t_z


def a_matrix(blocks: OverlapBlocks) -> np.ndarray:
    """Real symmetric 3x3 spin covariance matrix A with col(u) = u^T A u."""
    t = pauli_compressions(blocks)
    ne = blocks.n_electrons
    b = np.empty((3, 3))
    for mu in range(3):
        for nu in range(3):
            b[mu, nu] = (ne / 4.0 if mu == nu else 0.0) - np.trace(t[mu] @ t[nu]).real
    return 0.5 * (b + b.T)


def _check_unit(u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (3,):
        raise NotUnitVector(f"direction must be a 3-vector, got shape {u.shape}")
    norm = float(np.linalg.norm(u))
    if abs(norm - 1.0) > UNIT_VECTOR_TOL:
        raise NotUnitVector(f"direction has norm {norm!r}, expected 1 within 1e-10")
    return u


def col_along(blocks: OverlapBlocks, u) -> float:
    """Variance of the spin component along the unit direction u."""
    u = _check_unit(u)
    return float(u @ a_matrix(blocks) @ u)


def _jacobi_eigh_3x3(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a real symmetric 3x3 matrix.

    Returns (eigenvalues, eigenvector columns), unsorted.  Converges to
    machine precision in a handful of sweeps.
    """
    a = a.copy()
    v = np.eye(3)
    scale = max(1.0, float(np.max(np.abs(a))))
    for _ in range(_JACOBI_SWEEPS):
        off = max(abs(a[0, 1]), abs(a[0, 2]), abs(a[1, 2]))
        if off <= 1e-15 * scale:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p, q]
            if abs(apq) <= 1e-18 * scale:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
            if theta == 0.0:
                t = 1.0
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
    return np.diag(a).copy(), v


def _sign_normalize(vec: np.ndarray) -> np.ndarray:
    if vec[np.argmax(np.abs(vec))] < 0:
        return -vec
    return vec


def min_collinearity(a) -> CollinearityResult:
    """Diagonalize the spin covariance matrix and pick the optimal axis.

    The axis is the eigenvector of the lowest eigenvalue.  When that
    eigenvalue is degenerate within 1e-10 the candidate whose component
    ordering key (|z|, |x|, |y|) is lexicographically largest is returned so
    isotropic cases stay deterministic.

    Raises ``NotSymmetric`` if ``a`` deviates from symmetry beyond 1e-10.
    """
    a = np.asarray(a, dtype=float)
    if a.shape != (3, 3):
        raise NotSymmetric(f"expected a 3x3 matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-10")
    sym = 0.5 * (a + a.T)
    values, vectors = _jacobi_eigh_3x3(sym)
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = vectors[:, order]
    for k in range(3):
        vectors[:, k] = _sign_normalize(vectors[:, k])
    degenerate = bool(values[1] - values[0] < DEGENERACY_GAP)
    if degenerate:
        candidates = [k for k in range(3) if values[k] - values[0] < DEGENERACY_GAP]
        def ordering_key(k):
            v = vectors[:, k]
            return (abs(v[2]), abs(v[0]), abs(v[1]))
        best = max(candidates, key=ordering_key)
    else:
        best = 0
    return CollinearityResult(
        a_matrix=sym,
        eigenvalues=values,
        eigenvectors=vectors,
        col=float(values[0]),
        optimal_axis=vectors[:, best],
        degenerate=degenerate,
    )


def analyze_collinearity(blocks: OverlapBlocks) -> CollinearityResult:
    """Build the covariance matrix from overlap blocks and diagonalize it."""
    return min_collinearity(a_matrix(blocks))

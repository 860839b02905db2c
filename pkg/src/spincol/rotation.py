"""Global SU(2) spin-frame rotations and canonical determinant generators.

Rotating every spinor by the same 2x2 unitary tilts the spin quantization
axis without touching the spatial parts; expectation values transform by the
corresponding SO(3) rotation.  The generators build the standard determinant
classes used throughout the test suite: closed-shell (paired spins, shared
orbitals), restricted open-shell (paired plus extra pure-alpha), different
orbitals for different spins, and fully general random spinors drawn from the
Haar measure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .determinant import SpinorDeterminant, lowdin_orthonormalize
from .errors import DimensionMismatch, NotUnitVector

_AXIS_TOL = 1e-10
# Cosine window around +/- z where the cross-product axis construction degenerates.
_POLE_TOL = 1e-12

_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class SpinRotation:
    """Rotation of the spin frame by ``angle`` radians about unit ``axis``."""

    axis: np.ndarray
    angle: float

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,) or abs(np.linalg.norm(axis) - 1.0) > _AXIS_TOL:
            raise NotUnitVector("rotation axis must be a unit 3-vector")
        axis = axis.copy()
        axis.setflags(write=False)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "angle", float(self.angle))

    def su2(self) -> np.ndarray:
        """The 2x2 unitary cos(t/2) I - i sin(t/2) (n . sigma), det = 1."""
        half = 0.5 * self.angle
        n = self.axis
        n_dot_sigma = n[0] * _SIGMA_X + n[1] * _SIGMA_Y + n[2] * _SIGMA_Z
        return np.cos(half) * np.eye(2, dtype=complex) - 1.0j * np.sin(half) * n_dot_sigma

    def so3(self) -> np.ndarray:
        """The matching 3x3 rotation (Rodrigues form)."""
        n = self.axis
        c, s = np.cos(self.angle), np.sin(self.angle)
        cross = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
        return c * np.eye(3) + s * cross + (1.0 - c) * np.outer(n, n)


def su2_rotate(det: SpinorDeterminant, rot: SpinRotation) -> SpinorDeterminant:
    """Apply the same SU(2) matrix to the (alpha, beta) pair of every spinor."""
    u = rot.su2()
    return SpinorDeterminant(
        basis_dim=det.basis_dim,
        n_electrons=det.n_electrons,
        coeff_alpha=u[0, 0] * det.coeff_alpha + u[0, 1] * det.coeff_beta,
        coeff_beta=u[1, 0] * det.coeff_alpha + u[1, 1] * det.coeff_beta,
        ao_overlap=det.ao_overlap,
    )


def align_to_axis(det: SpinorDeterminant, u) -> SpinorDeterminant:
    """Rotate the spin frame so direction ``u`` becomes the new z axis.

    After alignment the z-noncollinearity of the result equals the original
    col(u).  The antipodal case u ~ -z rotates by pi about x to avoid the
    axis-construction singularity.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (3,) or abs(np.linalg.norm(u) - 1.0) > _AXIS_TOL:
        raise NotUnitVector("alignment direction must be a unit 3-vector")
    uz = u[2]
    if uz >= 1.0 - _POLE_TOL:
        return su2_rotate(det, SpinRotation(np.array([0.0, 0.0, 1.0]), 0.0))
    if uz <= -1.0 + _POLE_TOL:
        return su2_rotate(det, SpinRotation(np.array([1.0, 0.0, 0.0]), np.pi))
    z = np.array([0.0, 0.0, 1.0])
    axis = np.cross(u, z)
    axis /= np.linalg.norm(axis)
    angle = float(np.arccos(np.clip(uz, -1.0, 1.0)))
    return su2_rotate(det, SpinRotation(axis, angle))


def _orthonormal_columns(columns, what: str) -> np.ndarray:
    cols = np.array(columns, dtype=complex)
    if cols.ndim != 2:
        raise DimensionMismatch(f"{what} must be a 2-d matrix")
    if cols.shape[1] == 0:
        return cols
    return lowdin_orthonormalize(cols, cols.conj().T @ cols)


def gen_rhf(orbitals) -> SpinorDeterminant:
    """Closed-shell determinant: each orbital doubly occupied (alpha and beta)."""
    psi = _orthonormal_columns(orbitals, "orbitals")
    m, k = psi.shape
    if k < 1:
        raise DimensionMismatch("need at least one orbital")
    zero = np.zeros((m, k), dtype=complex)
    return SpinorDeterminant(
        basis_dim=m,
        n_electrons=2 * k,
        coeff_alpha=np.hstack([psi, zero]),
        coeff_beta=np.hstack([zero, psi]),
    )


def gen_rohf(closed, open_) -> SpinorDeterminant:
    """Spin-equivalence-restricted determinant.

    ``closed`` orbitals are occupied with both spins, ``open_`` ones with
    alpha only; the combined orbital set is orthonormalized jointly.
    """
    closed = np.array(closed, dtype=complex)
    open_ = np.array(open_, dtype=complex)
    if closed.ndim != 2 or open_.ndim != 2 or closed.shape[0] != open_.shape[0]:
        raise DimensionMismatch("closed and open orbital blocks must share the basis dimension")
    m = closed.shape[0]
    k, p = closed.shape[1], open_.shape[1]
    if k + p < 1:
        raise DimensionMismatch("need at least one orbital")
    psi = _orthonormal_columns(np.hstack([closed, open_]), "orbitals")
    psi_c, psi_o = psi[:, :k], psi[:, k:]
    za = np.zeros((m, k), dtype=complex)
    zb = np.zeros((m, k + p), dtype=complex)
    return SpinorDeterminant(
        basis_dim=m,
        n_electrons=2 * k + p,
        coeff_alpha=np.hstack([psi_c, psi_o, za]),
        coeff_beta=np.hstack([zb, psi_c]),
    )


def gen_dods(alpha_orbitals, beta_orbitals) -> SpinorDeterminant:
    """Different-orbitals-for-different-spins determinant.

    The alpha and beta orbital sets are orthonormalized independently; the
    two sets need not be orthogonal to each other.
    """
    psi_a = _orthonormal_columns(alpha_orbitals, "alpha_orbitals")
    psi_b = _orthonormal_columns(beta_orbitals, "beta_orbitals")
    if psi_a.shape[0] != psi_b.shape[0]:
        raise DimensionMismatch("alpha and beta orbital blocks must share the basis dimension")
    m = psi_a.shape[0]
    p, q = psi_a.shape[1], psi_b.shape[1]
    if p + q < 1:
        raise DimensionMismatch("need at least one orbital")
    return SpinorDeterminant(
        basis_dim=m,
        n_electrons=p + q,
        coeff_alpha=np.hstack([psi_a, np.zeros((m, q), dtype=complex)]),
        coeff_beta=np.hstack([np.zeros((m, p), dtype=complex), psi_b]),
    )


def gen_random_gchf(m: int, n_electrons: int, seed: int) -> SpinorDeterminant:
    """Random general determinant: columns of a Haar-distributed 2M x 2M unitary.

    Haar sampling follows the QR recipe: QR-factor a complex Gaussian matrix
    and absorb the phases of the R diagonal into Q.
    """
    if n_electrons > 2 * m:
        raise DimensionMismatch(f"{n_electrons} electrons do not fit in {2 * m} spin-orbitals")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((2 * m, 2 * m)) + 1j * rng.standard_normal((2 * m, 2 * m)))
    z /= np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    w = q[:, :n_electrons]
    return SpinorDeterminant(
        basis_dim=m, n_electrons=n_electrons, coeff_alpha=w[:m], coeff_beta=w[m:]
    )

"""Spinor determinant data model and the overlap blocks all spin formulas consume.

A determinant of ``n_electrons`` two-component spinors over an ``basis_dim``
dimensional spatial basis is stored as two complex coefficient matrices, one
per spin component.  Every spin quantity computed elsewhere in this package is
a function of the four spinor overlap blocks

    o_st[i, j] = <phi_i^s | phi_j^t>,   s, t in {alpha, beta},

where the bracket is the spatial inner product under the (optional) AO overlap
metric.  This module builds and validates those blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    LinearlyDependent,
    NonHermitianResult,
    NotOrthonormal,
    SpincolError,
)

# Input determinants may carry print rounding, hence the loose acceptance
# threshold; explicit orthonormalization restores the tight one.
ORTHONORMALITY_INPUT_TOL = 1e-8
ORTHONORMALITY_TIGHT_TOL = 1e-12
METRIC_HERMITICITY_TOL = 1e-12
METRIC_MIN_EIGENVALUE = 1e-10
GRAM_MIN_EIGENVALUE = 1e-12
BLOCK_HERMITICITY_TOL = 1e-12
TRACE_IMAG_TOL = 1e-12


def _frozen_complex(a) -> np.ndarray:
    arr = np.array(a, dtype=np.complex128)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpinorDeterminant:
    """Single determinant of two-component spinors.

    Column ``i`` of ``coeff_alpha`` / ``coeff_beta`` holds the spatial
    expansion of the alpha / beta component of spinor ``i``.  ``ao_overlap``
    is the Hermitian positive-definite metric of the spatial basis; ``None``
    means identity (orthonormal basis).

    Construction validates shapes and the metric.  Orthonormality of the
    spinors is checked where it is consumed (``build_overlap_blocks``) so
    that raw, not-yet-orthonormal coefficient sets can be represented and
    passed to :func:`orthonormalize`.
    """

    basis_dim: int
    n_electrons: int
    coeff_alpha: np.ndarray
    coeff_beta: np.ndarray
    ao_overlap: np.ndarray | None = None

    def __post_init__(self):
        m, ne = self.basis_dim, self.n_electrons
        if m < 1 or ne < 1:
            raise DimensionMismatch(f"need basis_dim >= 1 and n_electrons >= 1, got {m}, {ne}")
        if ne > 2 * m:
            raise DimensionMismatch(f"{ne} electrons do not fit in {2 * m} spin-orbitals")
        ca = _frozen_complex(self.coeff_alpha)
        cb = _frozen_complex(self.coeff_beta)
        if ca.shape != (m, ne) or cb.shape != (m, ne):
            raise DimensionMismatch(
                f"coefficient matrices must be {m}x{ne}, got {ca.shape} and {cb.shape}"
            )
        object.__setattr__(self, "coeff_alpha", ca)
        object.__setattr__(self, "coeff_beta", cb)
        if self.ao_overlap is not None:
            s = _frozen_complex(self.ao_overlap)
            if s.shape != (m, m):
                raise DimensionMismatch(f"ao_overlap must be {m}x{m}, got {s.shape}")
            if np.max(np.abs(s - s.conj().T)) > METRIC_HERMITICITY_TOL:
                raise SpincolError("ao_overlap is not Hermitian at 1e-12")
            if np.linalg.eigvalsh(s).min() <= METRIC_MIN_EIGENVALUE:
                raise SpincolError("ao_overlap is not positive definite (min eigenvalue <= 1e-10)")
            object.__setattr__(self, "ao_overlap", s)

    def stacked(self) -> np.ndarray:
        """Coefficients as one 2M x Ne matrix, alpha rows on top."""
        return np.vstack([self.coeff_alpha, self.coeff_beta])

    def metric_is_identity(self, tol: float = 1e-12) -> bool:
        if self.ao_overlap is None:
            return True
        return np.max(np.abs(self.ao_overlap - np.eye(self.basis_dim))) <= tol

    def spinor_gram(self) -> np.ndarray:
        """Gram matrix of the spinors under the metric (o_aa + o_bb)."""
        if self.ao_overlap is None:
            sa, sb = self.coeff_alpha, self.coeff_beta
        else:
            sa = self.ao_overlap @ self.coeff_alpha
            sb = self.ao_overlap @ self.coeff_beta
        return self.coeff_alpha.conj().T @ sa + self.coeff_beta.conj().T @ sb

    def orthonormality_residual(self) -> float:
        """Max absolute deviation of the spinor Gram matrix from identity."""
        return float(np.max(np.abs(self.spinor_gram() - np.eye(self.n_electrons))))


@dataclass(frozen=True)
class OverlapBlocks:
    """The four Ne x Ne spinor-component overlap matrices.

    ``o_aa`` and ``o_bb`` are Hermitian, ``o_ba`` is the conjugate transpose
    of ``o_ab``, and for an orthonormal determinant ``o_aa + o_bb`` is the
    identity.  Instances are plain containers; :func:`build_overlap_blocks`
    constructs and validates them.
    """

    o_aa: np.ndarray
    o_ab: np.ndarray
    o_ba: np.ndarray
    o_bb: np.ndarray

    def __post_init__(self):
        for name in ("o_aa", "o_ab", "o_ba", "o_bb"):
            object.__setattr__(self, name, _frozen_complex(getattr(self, name)))

    @property
    def n_electrons(self) -> int:
        return self.o_aa.shape[0]

    def validate(self, sum_tol: float = ORTHONORMALITY_INPUT_TOL) -> None:
        ne = self.n_electrons
        for name in ("o_aa", "o_ab", "o_ba", "o_bb"):
            if getattr(self, name).shape != (ne, ne):
                raise DimensionMismatch(f"{name} must be {ne}x{ne}")
        for name in ("o_aa", "o_bb"):
            block = getattr(self, name)
            if np.max(np.abs(block - block.conj().T)) > BLOCK_HERMITICITY_TOL:
                raise NonHermitianResult(f"{name} is not Hermitian at 1e-12")
        if np.max(np.abs(self.o_ba - self.o_ab.conj().T)) != 0.0:
            raise DimensionMismatch("o_ba must be the exact conjugate transpose of o_ab")
        if np.max(np.abs(self.o_aa + self.o_bb - np.eye(ne))) > sum_tol:
            raise NotOrthonormal("o_aa + o_bb deviates from identity beyond tolerance")


def build_overlap_blocks(det: SpinorDeterminant) -> OverlapBlocks:
    """Compute the four spinor overlap blocks of a determinant.

    Raises
    ------
    NotOrthonormal
        If the spinors deviate from orthonormality by more than 1e-8
        (run :func:`orthonormalize` first in that case).
    """
    residual = det.orthonormality_residual()
    if residual > ORTHONORMALITY_INPUT_TOL:
        raise NotOrthonormal(
            f"spinor orthonormality residual {residual:.3e} exceeds 1e-08; orthonormalize first"
        )
    ca, cb = det.coeff_alpha, det.coeff_beta
    if det.ao_overlap is None:
        sa, sb = ca, cb
    else:
        sa, sb = det.ao_overlap @ ca, det.ao_overlap @ cb
    o_aa = ca.conj().T @ sa
    o_ab = ca.conj().T @ sb
    o_bb = cb.conj().T @ sb
    blocks = OverlapBlocks(o_aa=o_aa, o_ab=o_ab, o_ba=o_ab.conj().T, o_bb=o_bb)
    blocks.validate()
    return blocks


def electron_counts(blocks: OverlapBlocks) -> tuple[float, float]:
    """Metric-weighted alpha and beta occupation numbers (trace of o_aa, o_bb).

    Both are generally non-integer for a spin-mixed determinant; their sum is
    the (integer) electron count.
    """
    counts = []
    for name in ("o_aa", "o_bb"):
        tr = complex(np.trace(getattr(blocks, name)))
        if abs(tr.imag) >= TRACE_IMAG_TOL:
            raise NonHermitianResult(f"trace of {name} has imaginary part {tr.imag:.3e}")
        counts.append(tr.real)
    return counts[0], counts[1]


def lowdin_orthonormalize(columns: np.ndarray, gram: np.ndarray) -> np.ndarray:
    """Symmetric orthonormalization of ``columns`` given their Gram matrix.

    Returns ``columns @ gram**(-1/2)``; the column span is preserved and the
    result is the orthonormal set closest to the input in least-squares sense.
    """
    w, v = np.linalg.eigh(gram)
    if w.min() <= GRAM_MIN_EIGENVALUE:
        raise LinearlyDependent(
            f"Gram matrix smallest eigenvalue {w.min():.3e} is at or below 1e-12"
        )
    inv_sqrt = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    return columns @ inv_sqrt


def orthonormalize(det: SpinorDeterminant) -> SpinorDeterminant:
    """Return a determinant with the same spinor span, orthonormal to 1e-12.

    Raises ``LinearlyDependent`` when the spinors do not span an
    ``n_electrons``-dimensional space at tolerance.
    """
    new_stacked = lowdin_orthonormalize(det.stacked(), det.spinor_gram())
    m = det.basis_dim
    return SpinorDeterminant(
        basis_dim=m,
        n_electrons=det.n_electrons,
        coeff_alpha=new_stacked[:m],
        coeff_beta=new_stacked[m:],
        ao_overlap=det.ao_overlap,
    )


def to_identity_metric(det: SpinorDeterminant) -> SpinorDeterminant:
    """Re-express the determinant over an orthonormal spatial basis.

    Multiplies the coefficients by the Hermitian square root of the metric,
    which leaves every overlap block (and hence every spin quantity)
    unchanged.  No-op when the metric already is the identity.
    """
    if det.metric_is_identity():
        if det.ao_overlap is None:
            return det
        return SpinorDeterminant(
            det.basis_dim, det.n_electrons, det.coeff_alpha, det.coeff_beta, None
        )
    w, v = np.linalg.eigh(det.ao_overlap)
    sqrt_s = (v * np.sqrt(w)) @ v.conj().T
    return SpinorDeterminant(
        basis_dim=det.basis_dim,
        n_electrons=det.n_electrons,
        coeff_alpha=sqrt_s @ det.coeff_alpha,
        coeff_beta=sqrt_s @ det.coeff_beta,
        ao_overlap=None,
    )

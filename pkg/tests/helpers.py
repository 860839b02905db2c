"""Shared construction helpers for the test suite."""

import numpy as np

from spincol import SpinorDeterminant, gen_dods, gen_rhf, gen_rohf, orthonormalize


def random_complex(rng, rows, cols):
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def random_unit_vector(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_pd_metric(rng, m):
    b = random_complex(rng, m, m)
    return b.conj().T @ b + 0.5 * np.eye(m)


def random_metric_determinant(m, ne, seed):
    """Random orthonormal determinant over a random non-identity metric."""
    rng = np.random.default_rng(seed)
    raw = SpinorDeterminant(
        basis_dim=m,
        n_electrons=ne,
        coeff_alpha=random_complex(rng, m, ne),
        coeff_beta=random_complex(rng, m, ne),
        ao_overlap=random_pd_metric(rng, m),
    )
    return orthonormalize(raw)


def random_dods(m, n_alpha, n_beta, seed):
    rng = np.random.default_rng(seed)
    return gen_dods(random_complex(rng, m, n_alpha), random_complex(rng, m, n_beta))


def random_rohf(m, n_closed, n_open, seed):
    rng = np.random.default_rng(seed)
    return gen_rohf(random_complex(rng, m, n_closed), random_complex(rng, m, n_open))


def random_rhf(m, n_pairs, seed):
    rng = np.random.default_rng(seed)
    return gen_rhf(random_complex(rng, m, n_pairs))


def pure_alpha_one_electron():
    return SpinorDeterminant(1, 1, [[1.0]], [[0.0]])


def pure_beta_one_electron():
    return SpinorDeterminant(1, 1, [[0.0]], [[1.0]])


def x_polarized_one_electron():
    r = 1.0 / np.sqrt(2.0)
    return SpinorDeterminant(1, 1, [[r]], [[r]])

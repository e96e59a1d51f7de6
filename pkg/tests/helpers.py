"""Shared randomized-input generators for the test suite."""

import numpy as np


def random_complex(rng, shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_unitary(rng, n):
    """Haar-ish unitary from the QR of a complex Gaussian matrix."""
    q, r = np.linalg.qr(random_complex(rng, (n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_state_vector(rng, dim):
    v = random_complex(rng, (dim,))
    return v / np.linalg.norm(v)


def random_bijection_table(rng, n):
    """Random reversible truth table on n bits."""
    perm = rng.permutation(2**n)
    fmt = f"0{n}b"
    return {format(i, fmt): format(int(perm[i]), fmt) for i in range(2**n)}

"""Shared test utilities: independent oracles and random-state generators."""

import itertools

import numpy as np


def flatten_index(multi, dims):
    """Row-major flattening of a multi-index (first index slowest)."""
    idx = 0
    for i, d in zip(multi, dims):
        idx = idx * d + i
    return idx


def brute_partial_trace(matrix, dims, keep):
    """Partial trace by explicit index summation; oracle for the einsum path."""
    n = len(dims)
    keep = sorted(keep)
    traced = [m for m in range(n) if m not in keep]
    kept_dims = [dims[m] for m in keep]
    k = int(np.prod(kept_dims))
    out = np.zeros((k, k), dtype=complex)
    kept_ranges = [range(d) for d in kept_dims]
    traced_ranges = [range(dims[m]) for m in traced]
    for bra_kept in itertools.product(*kept_ranges):
        for ket_kept in itertools.product(*kept_ranges):
            total = 0.0 + 0.0j
            for tr in itertools.product(*traced_ranges):
                bra = [0] * n
                ket = [0] * n
                for pos, m in enumerate(keep):
                    bra[m] = bra_kept[pos]
                    ket[m] = ket_kept[pos]
                for pos, m in enumerate(traced):
                    bra[m] = tr[pos]
                    ket[m] = tr[pos]
                total += matrix[flatten_index(bra, dims), flatten_index(ket, dims)]
            out[flatten_index(bra_kept, kept_dims), flatten_index(ket_kept, kept_dims)] = total
    return out


def random_density_matrix(d, rng, rank=None):
    """Random mixed state G G^dag / Tr(...) with i.i.d. complex Gaussian G."""
    rank = rank or d
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_pure_vector(d, rng):
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return z / np.linalg.norm(z)


def xlogx(p):
    """p ln p with the 0 ln 0 = 0 convention, for closed-form expectations."""
    return 0.0 if p <= 0.0 else p * np.log(p)

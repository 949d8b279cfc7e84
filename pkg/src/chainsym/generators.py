"""Seeded random instances over finite fields (tests, oracle harness, CLI)."""

from __future__ import annotations

import random

from .complexes import (ChainComplex, ChainMap, Homotopy, canonical_split_complex,
                        chain_map_space)
from .matrix import Matrix, is_invertible
from .modules import CoeffObject


def random_matrix(ring, rng: random.Random, nrows, ncols):
    p = ring.p
    return Matrix(ring, [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)],
                  nrows, ncols)


def random_invertible(ring, rng, n):
    while True:
        M = random_matrix(ring, rng, n, n)
        if is_invertible(M):
            return M


def random_split_dims(rng, length, max_dim):
    """Boundary and homology dimensions with every object of dimension <= max_dim."""
    lo, hi = 0, length - 1
    while True:
        b = {k: rng.randint(0, max_dim) for k in range(lo, hi)}
        h = {k: rng.randint(0, max_dim) for k in range(lo, hi + 1)}
        if all(b.get(k, 0) + h[k] + b.get(k - 1, 0) <= max_dim for k in range(lo, hi + 1)):
            return b, h


def random_split_complex(ring, rng, length=3, max_dim=3, dims=None, scramble=True):
    """A complex over a prime field, isomorphic to a random canonical split complex."""
    b, h = dims if dims is not None else random_split_dims(rng, length, max_dim)
    lo, hi = 0, length - 1
    S = canonical_split_complex(ring, lo, hi, {k: CoeffObject(ring, v) for k, v in b.items()},
                                {k: CoeffObject(ring, v) for k, v in h.items()})
    if not scramble:
        return S
    P = {k: random_invertible(ring, rng, S.obj(k).ngens) for k in S.degrees()}
    from .matrix import invert
    diffs = {k: P[k] @ S.d(k).matrix @ invert(P[k + 1]) for k in range(lo, hi)}
    return ChainComplex(ring, lo, hi, {k: S.obj(k) for k in S.degrees()}, diffs)


def random_complex(ring, rng, length=3, max_dim=3):
    """Random dimensions and differentials, subject only to d∘d = 0.

    Each d_{k-1} is a random combination of the rows of the left kernel of d_k.
    """
    from .matrix import kernel_basis
    lo, hi = 0, length - 1
    dims = {k: rng.randint(0, max_dim) for k in range(lo, hi + 1)}
    diffs = {}
    for k in range(hi - 1, lo - 1, -1):
        if k + 1 in diffs:
            left = kernel_basis(diffs[k + 1].T).T
        else:
            left = Matrix.identity(ring, dims[k + 1])
        diffs[k] = random_matrix(ring, rng, dims[k], left.nrows) @ left
    return ChainComplex(ring, lo, hi, {k: CoeffObject(ring, n) for k, n in dims.items()}, diffs)


def random_chain_map(A, B, rng) -> ChainMap:
    S, K = chain_map_space(A, B)
    p = A.ring.p
    coeffs = [rng.randrange(p) for _ in range(K.ncols)]
    x = tuple(sum(K[i, j] * c for j, c in enumerate(coeffs)) % p for i in range(K.nrows))
    ks = list(range(max(A.lo, B.lo), min(A.hi, B.hi) + 1))
    return ChainMap(A, B, dict(zip(ks, S.decode(x))))


def random_homotopy(A, B, rng, degree=1) -> Homotopy:
    comps = {}
    for k in Homotopy.zero(A, B, degree).degrees():
        comps[k] = random_matrix(A.ring, rng, B.obj(k + degree).ngens, A.obj(k).ngens)
    return Homotopy(A, B, degree, comps)

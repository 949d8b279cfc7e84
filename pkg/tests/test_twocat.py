import random

import pytest
from hypothesis import given, settings, strategies as st

from chainsym.arith import PrimeField
from chainsym.complexes import ComplexError, boundary
from chainsym.generators import random_chain_map, random_homotopy, random_split_complex
from chainsym.twocat import (TwoMorphism, hcompose, homotopy_class_eq, interchange_check,
                             vcompose)

rings = st.sampled_from([PrimeField(2), PrimeField(3)])
seeds = st.integers(0, 10 ** 6)


def cells(ring, seed):
    rng = random.Random(seed)
    A, B, C = (random_split_complex(ring, rng, 3, 3) for _ in range(3))
    a = TwoMorphism(random_chain_map(A, B, rng), random_homotopy(A, B, rng))
    b = TwoMorphism(a.codomain(), random_homotopy(A, B, rng))
    c = TwoMorphism(random_chain_map(B, C, rng), random_homotopy(B, C, rng))
    d = TwoMorphism(c.codomain(), random_homotopy(B, C, rng))
    return rng, (A, B, C), (a, b, c, d)


@settings(max_examples=25, deadline=None)
@given(rings, seeds)
def test_horizontal_variants_homotopic(ring, seed):
    rng, (A, B, C), (a, b, c, d) = cells(ring, seed)
    va, vb = hcompose(c, a, "A"), hcompose(c, a, "B")
    assert va.codomain() == vb.codomain() == c.codomain() @ a.codomain()
    ok, h2 = homotopy_class_eq(va.h, vb.h)
    assert ok and va.h + boundary(h2) == vb.h


@settings(max_examples=25, deadline=None)
@given(rings, seeds, st.sampled_from(["A", "B"]))
def test_interchange(ring, seed, variant):
    _, _, (a, b, c, d) = cells(ring, seed)
    assert interchange_check(a, b, c, d, variant)


@settings(max_examples=25, deadline=None)
@given(rings, seeds)
def test_vertical_inverse_and_identity(ring, seed):
    _, _, (a, b, c, d) = cells(ring, seed)
    inv = a.inverse()
    assert vcompose(inv, a) == TwoMorphism.identity(a.f)
    assert vcompose(a, inv) == TwoMorphism.identity(a.codomain())


@settings(max_examples=20, deadline=None)
@given(rings, seeds)
def test_horizontal_identity_cells(ring, seed):
    _, (A, B, C), (a, b, c, d) = cells(ring, seed)
    from chainsym.complexes import ChainMap
    idA = TwoMorphism.identity(ChainMap.identity(A))
    idB = TwoMorphism.identity(ChainMap.identity(B))
    assert hcompose(a, idA) == a
    assert hcompose(idB, a) == a


@settings(max_examples=20, deadline=None)
@given(rings, seeds)
def test_class_equality_ignores_boundaries(ring, seed):
    rng, (A, B, C), (a, b, c, d) = cells(ring, seed)
    h2 = random_homotopy(A, B, rng, degree=2)
    moved = TwoMorphism(a.f, a.h + boundary(h2))
    assert moved == a


def test_noncomposable_rejected():
    rng, (A, B, C), (a, b, c, d) = cells(PrimeField(2), 3)
    with pytest.raises(ComplexError):
        vcompose(a, c)
    with pytest.raises(ValueError):
        hcompose(c, a, "C")

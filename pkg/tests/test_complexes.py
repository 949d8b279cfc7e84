import random

import pytest
from hypothesis import given, settings, strategies as st

from chainsym.arith import QQ, ZZ, PrimeField
from chainsym.complexes import (ChainComplex, ChainMap, ComplexError, NotSplit,
                                boundary, find_splitting, hom_complex, homology, homology_all,
                                is_null_homotopic, split_normal_form, translate, zero_complex)
from chainsym.generators import random_chain_map, random_complex, random_homotopy
from chainsym.matrix import Matrix, rank
from chainsym.modules import CoeffObject

rings = st.sampled_from([PrimeField(2), PrimeField(3), PrimeField(5)])


def ex1(k):
    return ChainComplex(ZZ, 0, 2, {2: CoeffObject(ZZ, 1), 1: CoeffObject(ZZ, 1),
                                   0: CoeffObject(ZZ, 0, (2,))}, {1: [[2 * k]], 0: [[1]]})


def test_dd_zero_enforced():
    with pytest.raises(ComplexError, match="d_0"):
        ChainComplex(ZZ, 0, 2, {k: CoeffObject(ZZ, 1) for k in range(3)},
                     {1: [[1]], 0: [[1]]})


@pytest.mark.parametrize("k,torsion", [(1, ()), (2, (2,)), (3, (3,))])
def test_ex1_homology(k, torsion):
    A = ex1(k)
    H = homology_all(A)
    assert H[1].H.torsion == torsion and H[1].H.rank == 0
    assert H[0].H.is_zero() and H[2].H.is_zero()


def test_ex1_is_not_split():
    res = find_splitting(ex1(2))
    assert not res and res.failed_degree == 0
    with pytest.raises(NotSplit):
        split_normal_form(ex1(2))


@settings(max_examples=40, deadline=None)
@given(rings, st.integers(0, 10 ** 6))
def test_homology_dimension_formula(ring, seed):
    A = random_complex(ring, random.Random(seed), length=4, max_dim=4)
    for k in A.degrees():
        r_in = rank(A.d(k).matrix) if k < A.hi else 0
        r_out = rank(A.d(k - 1).matrix) if k > A.lo else 0
        assert homology(A, k).H.ngens == A.obj(k).ngens - r_in - r_out


@settings(max_examples=40, deadline=None)
@given(rings, st.integers(0, 10 ** 6))
def test_split_normal_form_is_an_isomorphism(ring, seed):
    A = random_complex(ring, random.Random(seed), length=4, max_dim=3)
    data = split_normal_form(A)
    S = data.complex
    assert data.iso.domain == A and data.iso.codomain == S
    assert data.inverse @ data.iso == ChainMap.identity(A)
    assert data.iso @ data.inverse == ChainMap.identity(S)
    for k in A.degrees():
        assert S.h(k) == homology(A, k).H.ngens


def test_split_normal_form_over_zz_torsion_free():
    A = ChainComplex(ZZ, 0, 1, {0: CoeffObject(ZZ, 2), 1: CoeffObject(ZZ, 1)}, {0: [[1], [3]]})
    data = split_normal_form(A)
    assert data.inverse @ data.iso == ChainMap.identity(A)
    assert data.complex.h(0) == 1 and data.complex.b(0) == 1


@settings(max_examples=30, deadline=None)
@given(rings, st.integers(0, 10 ** 6))
def test_hom_complex_squares_to_zero(ring, seed):
    rng = random.Random(seed)
    A = random_complex(ring, rng, 3, 2)
    B = random_complex(ring, rng, 3, 2)
    h2 = random_homotopy(A, B, rng, degree=2)
    assert boundary(boundary(h2)).is_zero()
    h1 = random_homotopy(A, B, rng, degree=1)
    f = boundary(h1)
    assert isinstance(f, ChainMap)  # a boundary of degree 1 is a chain map
    w = is_null_homotopic(f)
    assert w is not None and boundary(w) == f


@settings(max_examples=30, deadline=None)
@given(rings, st.integers(0, 10 ** 6))
def test_composition_of_chain_maps(ring, seed):
    rng = random.Random(seed)
    A, B, C = (random_complex(ring, rng, 3, 2) for _ in range(3))
    f = random_chain_map(A, B, rng)
    g = random_chain_map(B, C, rng)
    ChainMap(A, C, (g @ f).components)  # commuting squares re-checked


def test_identity_of_exact_complex_is_null_homotopic():
    F2 = PrimeField(2)
    A = ChainComplex(F2, 0, 1, {0: CoeffObject(F2, 1), 1: CoeffObject(F2, 1)}, {0: [[1]]})
    assert is_null_homotopic(ChainMap.identity(A)) is not None
    B = ChainComplex(F2, 0, 1, {0: CoeffObject(F2, 1), 1: CoeffObject(F2, 1)}, {0: [[0]]})
    assert is_null_homotopic(ChainMap.identity(B)) is None


def test_hom_complex_h0_over_zz():
    # End of Z/4 in degree 0 is Z/4; homotopies vanish
    A = ChainComplex(ZZ, 0, 0, {0: CoeffObject(ZZ, 0, (4,))})
    assert hom_complex(A, A).homology_object(0).torsion == (4,)
    assert hom_complex(ex1(2), ex1(2)).homology_object(0).torsion == (4,)


def test_translate_and_zero():
    A = ex1(1)
    T = translate(A, 1)
    assert T.window == (A.lo - 1, A.hi - 1) or T.window == (A.lo + 1, A.hi + 1)
    Z = zero_complex(QQ)
    assert Z.is_zero()
    assert homology_all(Z) == {} or all(h.H.is_zero() for h in homology_all(Z).values())


def test_chain_map_square_check():
    F2 = PrimeField(2)
    A = ChainComplex(F2, 0, 1, {0: CoeffObject(F2, 1), 1: CoeffObject(F2, 1)}, {0: [[1]]})
    with pytest.raises(ComplexError):
        ChainMap(A, A, {0: Matrix(F2, [[1]]), 1: Matrix(F2, [[0]])})

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from chainsym.arith import QQ, ZZ, PrimeField
from chainsym.modules import (CoeffObject, ModuleMap, TorsionError, automorphism_count,
                              hom_coordinates, hom_group, normalize_orders)

small_orders = st.lists(st.sampled_from([2, 3, 4, 6]), max_size=2)


def brute_aut(orders):
    """|Aut| of a finite product of cyclic groups by listing all endomorphisms."""
    elems = list(itertools.product(*[range(n) for n in orders]))
    gens = []
    for n in orders:
        gens.append([e for e in elems if all((n * x) % q == 0 for x, q in zip(e, orders))])
    count = 0
    for imgs in itertools.product(*gens):
        image = {tuple(sum(c * g[i] for c, g in zip(e, imgs)) % q for i, q in enumerate(orders))
                 for e in elems}
        count += len(image) == len(elems)
    return count


def test_invariant_factor_normalization():
    obj, P, L = CoeffObject.from_orders(ZZ, [6, 4, 0])
    assert obj.torsion == (2, 12) and obj.rank == 1
    assert normalize_orders([6, 4])[0] == (2, 12)


def test_torsion_chain_validated():
    with pytest.raises(ValueError):
        CoeffObject(ZZ, 0, (3, 4))
    with pytest.raises(ValueError):
        CoeffObject(PrimeField(2), 1, (2,))


@settings(max_examples=25, deadline=None)
@given(small_orders)
def test_automorphism_count_matches_brute_force(orders):
    obj, _, _ = CoeffObject.from_orders(ZZ, orders)
    assert automorphism_count(obj) == brute_aut(list(obj.torsion))


@pytest.mark.parametrize("rank,torsion,expected", [
    (0, (2,), 1), (0, (4,), 2), (0, (2, 4), 8), (0, (3, 3), 48), (1, (2,), 4), (1, (), 2),
    (2, (), None)])
def test_automorphism_count_examples(rank, torsion, expected):
    assert automorphism_count(CoeffObject(ZZ, rank, torsion)) == expected


def test_automorphism_count_fields():
    assert automorphism_count(CoeffObject(PrimeField(2), 3)) == 168
    assert automorphism_count(CoeffObject(QQ, 0)) == 1
    assert automorphism_count(CoeffObject(QQ, 1)) is None


@settings(max_examples=30, deadline=None)
@given(small_orders, small_orders, st.integers(0, 1), st.integers(0, 1))
def test_hom_group_orders(t1, t2, r1, r2):
    M, _, _ = CoeffObject.from_orders(ZZ, t1 + [0] * r1)
    N, _, _ = CoeffObject.from_orders(ZZ, t2 + [0] * r2)
    H, gens = hom_group(M, N)
    # Hom(Z/a, Z/b) = Z/gcd, Hom(Z, N) = N, Hom(Z/a, Z) = 0, Hom(Z, Z) = Z
    expected_finite = math.prod(math.gcd(a, b) for a in M.torsion for b in N.torsion)
    expected_finite *= math.prod(N.torsion) ** M.rank
    assert H.rank == M.rank * N.rank
    assert math.prod(H.torsion) == expected_finite
    for i, g in enumerate(gens):
        assert hom_coordinates(M, N, g) == H.reduce([int(j == i) for j in range(H.ngens)])


def test_module_map_well_defined():
    Z2 = CoeffObject(ZZ, 0, (2,))
    Z4 = CoeffObject(ZZ, 0, (4,))
    ModuleMap(Z2, Z4, [[2]])
    with pytest.raises(TorsionError):
        ModuleMap(Z2, Z4, [[1]])
    with pytest.raises(TorsionError):
        ModuleMap(Z2, CoeffObject(ZZ, 1), [[1]])


def test_enumerate_elements():
    obj = CoeffObject(ZZ, 0, (2, 4))
    assert len(list(obj.enumerate_elements())) == 8 == obj.order()
    V = CoeffObject(PrimeField(3), 2)
    assert len(list(V.enumerate_elements())) == 9

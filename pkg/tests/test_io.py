import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from chainsym.arith import PrimeField
from chainsym.generators import random_chain_map, random_complex, random_homotopy
from chainsym.io import (ParseError, chain_map_from_json, chain_map_to_json, complex_from_json,
                         complex_to_json, dumps, load_complex, two_morphism_from_json,
                         two_morphism_to_json)
from chainsym.twocat import TwoMorphism

from conftest import FIXTURES

rings = st.sampled_from([PrimeField(2), PrimeField(3), PrimeField(5)])


@pytest.mark.parametrize("path", sorted(p.name for p in FIXTURES.glob("*.json")
                                        if p.name != "bad_dd.json"))
def test_fixture_round_trip(path):
    A = load_complex(FIXTURES / path)
    text = dumps(complex_to_json(A))
    B = complex_from_json(json.loads(text))
    assert B == A
    assert dumps(complex_to_json(B)) == text


@settings(max_examples=30, deadline=None)
@given(rings, st.integers(0, 10 ** 6))
def test_random_round_trip(ring, seed):
    A = random_complex(ring, random.Random(seed), 4, 3)
    assert complex_from_json(json.loads(dumps(complex_to_json(A)))) == A


def test_bad_dd_names_degree():
    with pytest.raises(ParseError, match="d_0"):
        load_complex(FIXTURES / "bad_dd.json")


def test_empty_window():
    A = load_complex(FIXTURES / "empty.json")
    assert A.is_zero() and list(A.degrees()) == []


def test_torsion_normalised_on_parse():
    obj = {"coefficients": {"kind": "integers"}, "window": [0, 1],
           "objects": {"1": {"rank": 1}, "0": {"torsion": [6, 4]}},
           "differentials": {"0": [["2"], ["3"]]}}
    A = complex_from_json(obj)
    assert A.obj(0).torsion == (2, 12)
    # Z -> Z/6 + Z/4 with 1 -> (2, 3) has order lcm(3, 4) = 12 in the image
    from chainsym.complexes import homology
    assert homology(A, 0).H.order() == 2


@pytest.mark.parametrize("obj,msg", [
    ({"coefficients": {"kind": "integers"}, "extra": 1}, "unknown"),
    ({"window": [0, 0]}, "coefficients"),
    ({"coefficients": {"kind": "prime-field", "p": 4}}, "prime"),
    ({"coefficients": {"kind": "integers"}, "window": [0, 0], "objects": {"3": {"rank": 1}}},
     "outside"),
    ({"coefficients": {"kind": "integers"}, "window": [0, 1],
      "objects": {"0": {"rank": 1}, "1": {"rank": 1}}, "differentials": {"0": [["1", "2"]]}},
     "columns"),
])
def test_malformed_files_rejected(obj, msg):
    with pytest.raises(ParseError, match=msg):
        complex_from_json(obj)


def test_map_and_cell_round_trip():
    rng = random.Random(3)
    F3 = PrimeField(3)
    A, B = random_complex(F3, rng, 3, 2), random_complex(F3, rng, 3, 2)
    f = random_chain_map(A, B, rng)
    assert chain_map_from_json(json.loads(dumps(chain_map_to_json(f))), A, B) == f
    t = TwoMorphism(f, random_homotopy(A, B, rng))
    u = two_morphism_from_json(json.loads(dumps(two_morphism_to_json(t))), A, B)
    assert u.f == t.f and u.h == t.h
    with pytest.raises(ParseError):
        chain_map_from_json({"components": {"0": [["1", "1"], ["1", "1"], ["1", "1"]]}}, A, B)

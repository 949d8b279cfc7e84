"""Exact computation of the symmetry 2-groups of chain complexes."""

from .arith import QQ, ZZ, PrimeField
from .complexes import (ChainComplex, ChainMap, ComplexError, Homotopy, NotSplit, boundary,
                        find_splitting, hom_complex, homology, split_normal_form, translate)
from .matrix import Matrix, hermite_normal_form, rref, smith_normal_form, solve
from .modules import CoeffObject, ModuleMap, automorphism_count
from .skeletal import (FiniteAbelianGroup, FiniteGroup, SkeletalTwoGroup, cocycle_check,
                       cohomologous_check, coboundary_of, sinh_extract, verify_equivalence)
from .symmetry import pi0, pi1, split_symmetry, theorem_verify
from .twocat import TwoMorphism, hcompose, vcompose

__version__ = "0.1.0"

__all__ = [
    "QQ", "ZZ", "PrimeField", "ChainComplex", "ChainMap", "ComplexError", "Homotopy",
    "NotSplit", "boundary", "find_splitting", "hom_complex", "homology", "split_normal_form",
    "translate", "Matrix", "hermite_normal_form", "rref", "smith_normal_form", "solve",
    "CoeffObject", "ModuleMap", "automorphism_count", "FiniteAbelianGroup", "FiniteGroup",
    "SkeletalTwoGroup", "cocycle_check", "cohomologous_check", "coboundary_of", "sinh_extract",
    "verify_equivalence", "pi0", "pi1", "split_symmetry", "theorem_verify", "TwoMorphism",
    "hcompose", "vcompose",
]

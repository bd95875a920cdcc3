"""Exact computations with the atomic length statistic on Weyl groups."""

from .rootdata import RootSystem, TypeLabel, Weight, parse_type, root_system
from .weyl import (
    ReflectionSubgroup,
    WeylElement,
    a_decomposition,
    evaluate,
    inversion_set_from_word,
    longest_element,
    simple_reflection,
    standard_parabolic,
)
from .atomiclen import (
    ImageReport,
    atomic_length,
    atomic_length_w0,
    image_set,
    is_ideal,
    lambda_atomic_length,
    lambda_inversion_set,
    minuscule_weights,
)
from .susanfe import (
    restricted_atomic_length,
    special_reflection,
    surjectivity_susanfe_induction,
    susanfe_check,
    susanfe_decomposition_check,
)
from .affine import (
    AffineElement,
    AffineWeight,
    affine_atomic_length,
    affine_from_word,
    affine_image_probe,
    affine_weight,
    basic_weight,
    level_one_atomic_length,
    shi_vector,
)
from .cores import core_count_vs_lattice, is_core, orbit_cores, residue_reflect
from .perms import cosine, entropy, invsum, ninvsum, to_weyl

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "AffineWeight",
    "ImageReport",
    "ReflectionSubgroup",
    "RootSystem",
    "TypeLabel",
    "Weight",
    "WeylElement",
    "a_decomposition",
    "affine_atomic_length",
    "affine_from_word",
    "affine_image_probe",
    "affine_weight",
    "atomic_length",
    "atomic_length_w0",
    "basic_weight",
    "core_count_vs_lattice",
    "cosine",
    "entropy",
    "evaluate",
    "image_set",
    "inversion_set_from_word",
    "invsum",
    "is_core",
    "is_ideal",
    "lambda_atomic_length",
    "lambda_inversion_set",
    "level_one_atomic_length",
    "longest_element",
    "minuscule_weights",
    "ninvsum",
    "orbit_cores",
    "parse_type",
    "residue_reflect",
    "restricted_atomic_length",
    "root_system",
    "shi_vector",
    "simple_reflection",
    "special_reflection",
    "standard_parabolic",
    "surjectivity_susanfe_induction",
    "susanfe_check",
    "susanfe_decomposition_check",
    "to_weyl",
]

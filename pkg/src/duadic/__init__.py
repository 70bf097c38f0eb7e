"""Binary duadic codes of length 2^m - 1 from base-2 weight classes."""

from .bounds import amplified_bch_bound, bch_bound, lemma_suite, square_root_bound, theorem_bound
from .cosets import DefiningSet, cyclotomic_coset, duadic_scan, weight_defining_set
from .cyclic import CyclicCode, dual, even_weight_subcode, extend, from_defining_set, weight_class_code
from .distance import DistanceCertificate, brouwer_zimmermann, exhaustive_min_weight, min_odd_weight
from .gf2poly import BinaryPolynomial, FieldContext, default_primitive_poly

__version__ = "0.1.0"

__all__ = [
    "BinaryPolynomial", "FieldContext", "default_primitive_poly",
    "DefiningSet", "cyclotomic_coset", "weight_defining_set", "duadic_scan",
    "CyclicCode", "from_defining_set", "weight_class_code", "dual", "even_weight_subcode", "extend",
    "bch_bound", "amplified_bch_bound", "square_root_bound", "theorem_bound", "lemma_suite",
    "DistanceCertificate", "exhaustive_min_weight", "brouwer_zimmermann", "min_odd_weight",
]

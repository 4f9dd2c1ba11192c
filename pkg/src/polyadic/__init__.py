"""Abelian and consta-Abelian polyadic codes over chain-ring affine algebras.

The library builds serial alphabets R[X_1..X_s]/(t_1..t_s) over finite
chain rings, their primitive idempotents, group-algebra ambients with
defining-set code algebra, splittings and multipliers, the polyadic code
families they cut out, and counting formulas; everything is cross-checked
against brute-force oracles at desk scale.
"""

from .chainring import (ChainRing, FF, RingElement, frobenius, get_field,
                        make_extension, make_ring, parse_ring_spec)
from .polyring import (MPoly, Poly, QuotientRing, factor_degrees,
                       hensel_lift_factor, hensel_lift_factorization,
                       lift_idempotent, poly_divmod, poly_gcd, residue_poly,
                       roots_in_extension, squarefree_check)
from .alphabet import CyclotomicClass, SerialAlphabet, build_alphabet, trivial_alphabet
from .ambient import (AbelianAmbient, DefiningSetCode, build_ambient,
                      standard_form_cardinality, standard_form_generator,
                      standard_form_single_generator)
from .splitting import (Multiplier, Splitting, brute_force_splittings,
                        enumerate_splittings, is_splitting, multiplier_fixes,
                        parse_splitting)
from .families import (ChainPolyadicFamily, SerialCode, SerialPolyadicFamily,
                       VerifyReport, build_chain_family, build_serial_family,
                       count_inequivalent, default_partition, repetition_code,
                       verify_family)
from . import oracle

__all__ = [
    "ChainRing", "FF", "RingElement", "frobenius", "get_field",
    "make_extension", "make_ring", "parse_ring_spec",
    "MPoly", "Poly", "QuotientRing", "factor_degrees", "hensel_lift_factor",
    "hensel_lift_factorization", "lift_idempotent", "poly_divmod", "poly_gcd",
    "residue_poly", "roots_in_extension", "squarefree_check",
    "CyclotomicClass", "SerialAlphabet", "build_alphabet", "trivial_alphabet",
    "AbelianAmbient", "DefiningSetCode", "build_ambient",
    "standard_form_cardinality", "standard_form_generator",
    "standard_form_single_generator",
    "Multiplier", "Splitting", "brute_force_splittings", "enumerate_splittings",
    "is_splitting", "multiplier_fixes", "parse_splitting",
    "ChainPolyadicFamily", "SerialCode", "SerialPolyadicFamily", "VerifyReport",
    "build_chain_family", "build_serial_family", "count_inequivalent",
    "default_partition", "repetition_code", "verify_family",
    "oracle",
]

"""Construct, enumerate and count (k+1)-potent elements (A^(k+1) = A) of upper
triangular matrix groups and poset incidence algebras over finite fields."""

__version__ = "0.1.0"

from .field import (FieldElem, FieldSpec, char_divisibility_guard, field_new, parse_field,
                    potent_scalars, primitive_kth_root)
from .qpoly import QPolynomial, compositions, delta, monomial, multinomial, qp_eval
from .poset import (Poset, parse_poset, poset_chain, poset_from_shorthand, poset_rhombus,
                    poset_star, poset_y)
from .incmat import UpperMatrix, is_potent, lemma21_power_blocks, mat_mul, mat_pow
from .potent import (DiagonalAssignment, FreeEntrySlots, complete_potent, count_by_construction,
                     enumerate_potents, forced_entry_closed_form, free_slot_polynomial, free_slots)
from .bruteforce import brute_force_count, brute_force_potents
from .counting import (count_triangular, num_scalars, rhombus_count, slowik_count,
                       slowik_equiv_check, star_count, star_P, y_count)

__all__ = [
    "FieldElem", "FieldSpec", "char_divisibility_guard", "field_new", "parse_field",
    "potent_scalars", "primitive_kth_root",
    "QPolynomial", "compositions", "delta", "monomial", "multinomial", "qp_eval",
    "Poset", "parse_poset", "poset_chain", "poset_from_shorthand", "poset_rhombus",
    "poset_star", "poset_y",
    "UpperMatrix", "is_potent", "lemma21_power_blocks", "mat_mul", "mat_pow",
    "DiagonalAssignment", "FreeEntrySlots", "complete_potent", "count_by_construction",
    "enumerate_potents", "forced_entry_closed_form", "free_slot_polynomial", "free_slots",
    "brute_force_count", "brute_force_potents",
    "count_triangular", "num_scalars", "rhombus_count", "slowik_count", "slowik_equiv_check",
    "star_count", "star_P", "y_count",
]

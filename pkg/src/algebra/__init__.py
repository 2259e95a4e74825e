from .galois_field import (
    FieldSpec, FieldElement, build_field, smallest_irreducible, is_irreducible,
    mu_subgroup, enumerate_elements, parse_element, parse_modulus, format_modulus
)
from .polynomial import (
    Poly, degree, reduce_mod_qx, pow_mod, evaluate, evaluate_all, format_poly, parse_poly
)
from .dickson import (
    DicksonParams, dickson_poly, dickson_eval, dickson_recurrence, result1_closed_form
)

__all__ = [
    'FieldSpec', 'FieldElement', 'build_field', 'smallest_irreducible', 'is_irreducible',
    'mu_subgroup', 'enumerate_elements', 'parse_element', 'parse_modulus', 'format_modulus',
    'Poly', 'degree', 'reduce_mod_qx', 'pow_mod', 'evaluate', 'evaluate_all',
    'format_poly', 'parse_poly',
    'DicksonParams', 'dickson_poly', 'dickson_eval', 'dickson_recurrence', 'result1_closed_form'
]

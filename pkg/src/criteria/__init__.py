from .permutation_tests import (
    Witness, Verdict, MultiplicativeForm, brute_force_check, hermite_check,
    zieve_check, decompose_multiplicative, check_permutation, validate_witness
)

__all__ = [
    'Witness', 'Verdict', 'MultiplicativeForm', 'brute_force_check', 'hermite_check',
    'zieve_check', 'decompose_multiplicative', 'check_permutation', 'validate_witness'
]

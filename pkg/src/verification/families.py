"""
Polynomial families classified by the reversed Dickson results, and the
closed-form predictors for when they permute F_q.

    trinomial      (4-k) x^((p^l+1)/2) + k x^((p^l-1)/2) + (2-k) x     p > 3, k not in {0, 2, 4}
    binomial_p3    x^((3^l-1)/2) + x                                    p = 3
    binomial_k4    x^((p^l-1)/2) - x/2                                  p > 3, k = 4
    dickson_n_pl2  D_{p^l+2,k}(1, x)

All constructors return polynomials already reduced mod x^q - x, so l may be
large without ever building a dense array of degree p^l.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from src.algebra.dickson import DEFAULT_EXACT_LIMIT, DicksonParams, dickson_poly
from src.algebra.galois_field import FieldElement, FieldSpec
from src.algebra.polynomial import Poly, evaluate
from src.utils.errors import DomainError, FieldMismatchError

TRINOMIAL_EXCLUDED_K = (0, 2, 4)


@dataclass(frozen=True)
class FamilyParams:
    p: int
    e: int
    l: int
    k: int

    def __post_init__(self):
        if self.e < 1:
            raise DomainError(f"extension degree e={self.e} must be positive")
        if self.l < 0:
            raise DomainError(f"l={self.l} must be non-negative")
        if not 0 <= self.k <= self.p - 1:
            raise DomainError(f"k={self.k} outside [0, {self.p - 1}]")

    @property
    def q(self) -> int:
        return self.p ** self.e

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.p, self.e, self.l, self.k)


def _check_field(params: FamilyParams, field: FieldSpec) -> None:
    if (field.p, field.e) != (params.p, params.e):
        raise FieldMismatchError(f"parameters for GF({params.p}^{params.e}) used over {field}")


def _check_trinomial(params: FamilyParams) -> None:
    if params.p <= 3:
        raise DomainError(f"the trinomial family needs p > 3, got p={params.p}")
    if params.k in TRINOMIAL_EXCLUDED_K:
        raise DomainError(f"the trinomial family excludes k in {TRINOMIAL_EXCLUDED_K}, got k={params.k}")


def _half_exponents(p: int, l: int) -> Tuple[int, int]:
    pl = p ** l
    return (pl + 1) // 2, (pl - 1) // 2


def _sum_terms(field: FieldSpec, *pairs: Tuple[int, int]) -> Poly:
    terms: Dict[int, int] = {}
    for m, c in pairs:
        terms[m] = (terms.get(m, 0) + c) % field.p
    return Poly.from_terms(field, terms)


def trinomial(params: FamilyParams, field: FieldSpec) -> Poly:
    _check_trinomial(params)
    _check_field(params, field)
    k = params.k
    up, down = _half_exponents(params.p, params.l)
    return _sum_terms(field, (up, 4 - k), (down, k), (1, 2 - k))


def binomial_p3(l: int, field: FieldSpec) -> Poly:
    if field.p != 3:
        raise DomainError(f"the binomial x^((3^l-1)/2) + x is defined for p = 3, got p={field.p}")
    if l < 0:
        raise DomainError(f"l={l} must be non-negative")
    _, down = _half_exponents(3, l)
    return _sum_terms(field, (down, 1), (1, 1))


def binomial_k4(params: FamilyParams, field: FieldSpec) -> Poly:
    if params.p <= 3:
        raise DomainError(f"the binomial x^((p^l-1)/2) - x/2 needs p > 3, got p={params.p}")
    if params.k != 4:
        raise DomainError(f"the binomial x^((p^l-1)/2) - x/2 belongs to k = 4, got k={params.k}")
    _check_field(params, field)
    _, down = _half_exponents(params.p, params.l)
    half = (params.p + 1) // 2
    return _sum_terms(field, (down, 1), (1, -half))


def dickson_n_pl2(params: FamilyParams, field: FieldSpec,
                  exact_limit: int = DEFAULT_EXACT_LIMIT) -> Poly:
    """D_{p^l+2,k}(1, x), reduced mod x^q - x."""
    _check_field(params, field)
    n = params.p ** params.l + 2
    return dickson_poly(DicksonParams(n, params.k), field, reduce=True, exact_limit=exact_limit)


# ---------------------------------------------------------------------------
# Predictors
# ---------------------------------------------------------------------------

def predict_trinomial_pp(params: FamilyParams) -> bool:
    _check_trinomial(params)
    return params.l == 0 and params.k != 3


def predict_binomial_pp_p3(e: int, l: int) -> bool:
    """l = 0, or l = m e + 1 with m a non-negative even integer."""
    if l == 0:
        return True
    return (l - 1) % e == 0 and ((l - 1) // e) % 2 == 0


def predict_result1_pp(field: FieldSpec) -> bool:
    return field.q % 3 == 1


def trinomial_case2_witness(p: int, l: int, field: FieldSpec) -> Dict[str, FieldElement]:
    """
    Values of the k = 3 trinomial at 1, 4 and -1.

    4 is a square of the prime field, so 4^((p^l-1)/2) = 1 and f(4) = f(1) = 3
    whenever p > 3 and l >= 1; (1, 4) is then a collision. f(-1) is -1 when
    (p^l+1)/2 is even and 3 when it is odd, so the odd case also collides at (1, p-1).
    """
    params = FamilyParams(p, field.e, l, 3)
    f = trinomial(params, field)
    return {
        "f(1)": evaluate(f, field.scalar(1)),
        "f(4)": evaluate(f, field.scalar(4)),
        "f(-1)": evaluate(f, field.scalar(-1)),
    }

"""
Reversed Dickson Polynomials of the (k+1)-th Kind

    D_{n,k}(a, x) = sum_{i=0}^{floor(n/2)} (n - k i)/(n - i) * C(n - i, i) * (-x)^i * a^(n - 2i)
    D_{0,k}(a, x) = 2 - k

The fractional coefficient can have a denominator divisible by p, so it is
computed through the integer identity

    (n - k i) / (n - i) * C(n - i, i) = C(n - i, i) - (k - 1) * C(n - i - 1, i - 1)

exactly over Z and only then reduced mod p. For n above the configured
exact limit the binomials are reduced with Lucas' theorem instead, which
yields the same residues without materializing huge integers.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Tuple

import numpy as np

from src.algebra.galois_field import FieldElement, FieldSpec, inv
from src.algebra.polynomial import Poly, evaluate, pow_mod, reduce_mod_qx, scale
from src.utils.errors import DomainError, FieldMismatchError

logger = logging.getLogger(__name__)

DEFAULT_EXACT_LIMIT = 4096


@dataclass(frozen=True)
class DicksonParams:
    n: int
    k: int
    a: Optional[FieldElement] = None    # None stands for a = 1

    def resolve_a(self, field: FieldSpec) -> FieldElement:
        if self.a is None:
            return field.one
        if self.a.field != field:
            raise FieldMismatchError(f"a from {self.a.field} used over {field}")
        return self.a


def integer_coefficient(n: int, k: int, i: int) -> int:
    """C(n-i, i) - (k-1) * C(n-i-1, i-1), with C(m, -1) = 0."""
    second = comb(n - i - 1, i - 1) if i >= 1 and n - i - 1 >= 0 else 0
    return comb(n - i, i) - (k - 1) * second


@lru_cache(maxsize=None)
def _pascal_mod_p(p: int) -> np.ndarray:
    table = np.zeros((p, p), dtype=np.int64)
    for a in range(p):
        table[a, 0] = 1
        for b in range(1, a + 1):
            table[a, b] = (table[a - 1, b - 1] + table[a - 1, b]) % p
    table.setflags(write=False)
    return table


def binomial_mod_p(m: np.ndarray, j: np.ndarray, p: int) -> np.ndarray:
    """C(m, j) mod p elementwise by Lucas' theorem; 0 outside 0 <= j <= m."""
    m = np.asarray(m, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    valid = (j >= 0) & (j <= m)
    mm = np.where(valid, m, 0)
    jj = np.where(valid, j, 0)
    small = _pascal_mod_p(p)
    result = np.ones_like(mm)
    while np.any(mm) or np.any(jj):
        result = result * small[mm % p, jj % p] % p
        mm //= p
        jj //= p
    return np.where(valid, result, 0)


@lru_cache(maxsize=256)
def _binomial_rows(n: int, p: int, exact_limit: int) -> Tuple[np.ndarray, np.ndarray]:
    """C(n-i, i) and C(n-i-1, i-1) mod p for i = 0 .. floor(n/2); shared by every k."""
    i = np.arange(n // 2 + 1, dtype=np.int64)
    if n <= exact_limit:
        first = np.array([comb(n - t, t) % p for t in range(n // 2 + 1)], dtype=np.int64)
        second = np.array([comb(n - t - 1, t - 1) % p if t >= 1 and n - t - 1 >= 0 else 0
                           for t in range(n // 2 + 1)], dtype=np.int64)
    else:
        first = binomial_mod_p(n - i, i, p)
        second = binomial_mod_p(n - i - 1, i - 1, p)
    first.setflags(write=False)
    second.setflags(write=False)
    return first, second


def coefficients_mod_p(n: int, k: int, p: int, exact_limit: int = DEFAULT_EXACT_LIMIT) -> np.ndarray:
    """Residues of the integer coefficients c_0 .. c_{floor(n/2)} mod p."""
    first, second = _binomial_rows(n, p, exact_limit)
    return (first - (k - 1) * second) % p


def _check_k(k: int, p: int) -> None:
    if not 0 <= k <= p - 1:
        raise DomainError(f"kind parameter k={k} outside [0, {p - 1}]")


def dickson_poly(params: DicksonParams, field: FieldSpec, reduce: bool = False,
                 exact_limit: int = DEFAULT_EXACT_LIMIT) -> Poly:
    """
    D_{n,k}(a, x) over the given field.

    reduce=True folds the result mod x^q - x, which is what every
    permutation test needs; the unreduced form has degree floor(n/2).
    """
    n, k = params.n, params.k
    if n < 0:
        raise DomainError(f"index n={n} must be non-negative")
    _check_k(k, field.p)
    a = params.resolve_a(field)
    if n == 0:
        return Poly.constant(field, 2 - k)

    p, q = field.p, field.q
    i = np.arange(n // 2 + 1, dtype=np.int64)
    c = coefficients_mod_p(n, k, p, exact_limit)
    c = np.where(i % 2 == 1, (-c) % p, c)

    exps = n - 2 * i
    if a.code == 1:
        a_pow = np.ones_like(exps)
    elif a.code == 0:
        a_pow = np.where(exps == 0, 1, 0)
    else:
        cycle = _powers_of(field, a, q - 1)
        a_pow = cycle[exps % (q - 1)]

    codes = field.tables.mul[c, a_pow]
    f = Poly(field, codes)
    logger.debug("D_{%d,%d} over GF(%d): %d terms", n, k, q, int(np.count_nonzero(codes)))
    return reduce_mod_qx(f) if reduce else f


def _powers_of(field: FieldSpec, a: FieldElement, count: int) -> np.ndarray:
    mul_t = field.tables.mul
    out = np.empty(count, dtype=np.int64)
    acc = 1
    for j in range(count):
        out[j] = acc
        acc = int(mul_t[acc, a.code])
    return out


def dickson_eval(params: DicksonParams, field: FieldSpec, x: FieldElement,
                 exact_limit: int = DEFAULT_EXACT_LIMIT) -> FieldElement:
    return evaluate(dickson_poly(params, field, reduce=True, exact_limit=exact_limit), x)


def dickson_recurrence(n: int, k: int, field: FieldSpec, a: Optional[FieldElement] = None) -> Poly:
    """D_n = a D_{n-1} - x D_{n-2}, D_0 = 2 - k, D_1 = a; an independent construction."""
    _check_k(k, field.p)
    a = a if a is not None else field.one
    prev = Poly.constant(field, 2 - k)
    if n == 0:
        return prev
    cur = Poly.constant(field, a)
    x = Poly.x(field)
    for _ in range(2, n + 1):
        prev, cur = cur, scale(a, cur) - x * prev
    return cur


def result1_closed_form(field: FieldSpec) -> Poly:
    """(1/2)(1 - 4x)^((q+1)/2) - x + 1/2, reduced mod x^q - x."""
    half = inv(field.scalar(2))
    base = Poly(field, [1, (-4) % field.p])
    power_part = pow_mod(base, (field.q + 1) // 2)
    return reduce_mod_qx(scale(half, power_part) - Poly.x(field) + Poly.constant(field, half))

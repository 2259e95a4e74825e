"""
Finite Field Arithmetic over GF(p^e)

This module implements exact arithmetic in prime fields F_p and extension
fields F_{p^e}:
- FieldSpec: a concrete field F_p[t] / (m(t)) for a monic irreducible m
- FieldElement: an element as a vector of residues mod p over the basis
  1, t, ..., t^(e-1), with canonical integer code sum(c_i * p^i)
- Precomputed numpy addition / multiplication / inverse tables per field,
  so exhaustive scans over all q elements run as table lookups

Mathematical Properties:
- Addition is componentwise mod p (F_{p^e} is an e-dimensional F_p space)
- Multiplication is the polynomial product reduced mod m(t) and mod p
- Every nonzero element x satisfies x^(q-1) = 1; every x satisfies x^q = x

Characteristic 2 is out of scope; p must be an odd prime.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import isprime

from src.utils.errors import (
    DomainError, FieldConstructionError, FieldMismatchError, ParseError,
    ZeroDivisionFieldError,
)
from src.utils.helpers import format_int_list, parse_int_list

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldSpec:
    """
    A concrete field GF(q), q = p^e.

    modulus holds the ascending coefficients of the defining polynomial,
    leading 1 included (x^2 + 1 over F_3 is (1, 0, 1)). For e = 1 it is x
    and never used by the arithmetic.
    """
    p: int
    e: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def tables(self) -> "ArithmeticTables":
        return _tables(self)

    def element(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        return FieldElement(self, int(value))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.e:
            raise DomainError(f"{len(coeffs)} coordinates given for a degree-{self.e} extension")
        code = 0
        for i, c in enumerate(coeffs):
            code += (int(c) % self.p) * self.p ** i
        return FieldElement(self, code)

    def scalar(self, n: int) -> "FieldElement":
        """Image of the integer n in the prime subfield."""
        return FieldElement(self, int(n) % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __str__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}) mod [{format_modulus(self)}]"


@dataclass(frozen=True, eq=False)
class ArithmeticTables:
    p: int
    digits: np.ndarray     # q x e, coordinate vectors of every code
    weights: np.ndarray    # p^i, maps digit vectors back to codes
    add: np.ndarray        # q x q
    neg: np.ndarray        # q
    mul: np.ndarray        # q x q
    inv: np.ndarray        # q, inv[0] is meaningless

    def encode(self, digit_rows: np.ndarray) -> np.ndarray:
        """Map rows of (possibly unreduced) coordinates back to codes."""
        return (np.asarray(digit_rows, dtype=np.int64) % self.p) @ self.weights


@lru_cache(maxsize=64)
def _tables(field: FieldSpec) -> ArithmeticTables:
    p, e, q = field.p, field.e, field.q
    codes = np.arange(q, dtype=np.int64)
    weights = p ** np.arange(e, dtype=np.int64)
    digits = (codes[:, None] // weights[None, :]) % p

    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg = ((-digits) % p) @ weights

    # Row by row keeps memory at O(q * e) per step.
    prod_len = 2 * e - 1
    mod_low = np.array(field.modulus[:e], dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        da = digits[a]
        prod = np.zeros((q, prod_len), dtype=np.int64)
        for i in range(e):
            if da[i]:
                prod[:, i:i + e] += da[i] * digits
        # t^e = -(m_0 + m_1 t + ... + m_{e-1} t^{e-1})
        for deg in range(prod_len - 1, e - 1, -1):
            c = prod[:, deg] % p
            prod[:, deg - e:deg] -= c[:, None] * mod_low[None, :]
        mul[a] = (prod[:, :e] % p) @ weights

    inv = np.argmax(mul == 1, axis=1).astype(np.int64)
    inv[0] = 0
    logger.debug("built arithmetic tables for %s", field)
    return ArithmeticTables(p=p, digits=digits, weights=weights, add=add, neg=neg, mul=mul, inv=inv)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise DomainError(f"element code {self.code} outside [0, {self.field.q - 1}]")

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coordinates over 1, t, ..., t^(e-1)."""
        return tuple(int(c) for c in self.field.tables.digits[self.code])

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            _check_same_field(self, other)
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.scalar(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __pow__(self, m: int):
        return power(self, m)

    def inverse(self) -> "FieldElement":
        return inv(self)

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __str__(self) -> str:
        return str(self.code)

    def __repr__(self) -> str:
        return f"FieldElement({self.code} in GF({self.field.q}))"


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine elements of {a.field} and {b.field}")


# ---------------------------------------------------------------------------
# Irreducibility and field construction
# ---------------------------------------------------------------------------

def _poly_rem_mod_p(num: List[int], den: Sequence[int], p: int) -> List[int]:
    """Remainder of num by the monic den over F_p (ascending lists)."""
    rem = [c % p for c in num]
    d = len(den) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c:
            shift = top - d
            for i, dc in enumerate(den):
                rem[shift + i] = (rem[shift + i] - c * dc) % p
    rem = rem[:d]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def is_irreducible(c: Sequence[int], p: int) -> bool:
    """
    Trial division by every monic polynomial of degree 1..deg/2 over F_p.

    Deterministic and fast enough for the degrees used here (<= ~6).
    """
    coeffs = [int(x) % p for x in c]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise DomainError(f"irreducibility needs degree >= 1, got {list(c)}")
    if coeffs[-1] != 1:
        raise DomainError(f"polynomial {list(c)} is not monic over F_{p}")
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    if coeffs[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_rem_mod_p(coeffs, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically smallest (c_0, ..., c_{e-1}) with x^e + ... irreducible."""
    for low in itertools.product(range(p), repeat=e):
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldConstructionError(f"no irreducible polynomial of degree {e} over F_{p}")


def build_field(p: int, e: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """
    Construct GF(p^e).

    With modulus omitted and e >= 2 the lexicographically smallest monic
    irreducible of degree e is chosen, so repeated calls agree.
    """
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise FieldConstructionError(f"characteristic p={p} is not prime")
    if p == 2:
        raise FieldConstructionError("characteristic 2 is not supported (p must be odd)")
    if not isinstance(e, (int, np.integer)) or e < 1:
        raise FieldConstructionError(f"extension degree e={e} must be a positive integer")
    return _build_field(int(p), int(e), None if modulus is None else tuple(int(c) for c in modulus))


@lru_cache(maxsize=128)
def _build_field(p: int, e: int, modulus: Optional[Tuple[int, ...]]) -> FieldSpec:
    if modulus is None:
        modulus = (0, 1) if e == 1 else smallest_irreducible(p, e)
        return FieldSpec(p, e, modulus)
    if len(modulus) != e + 1:
        raise FieldConstructionError(
            f"modulus {format_int_list(modulus)} has degree {len(modulus) - 1}, expected {e}"
        )
    if any(not 0 <= c < p for c in modulus):
        raise FieldConstructionError(f"modulus coefficients must lie in [0, {p - 1}]")
    if modulus[-1] != 1:
        raise FieldConstructionError(f"modulus {format_int_list(modulus)} is not monic")
    if not is_irreducible(modulus, p):
        raise FieldConstructionError(f"modulus {format_int_list(modulus)} is reducible over F_{p}")
    return FieldSpec(p, e, modulus)


# ---------------------------------------------------------------------------
# Element arithmetic
# ---------------------------------------------------------------------------

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return FieldElement(a.field, int(a.field.tables.add[a.code, b.code]))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, int(a.field.tables.neg[a.code]))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    t = a.field.tables
    return FieldElement(a.field, int(t.add[a.code, t.neg[b.code]]))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_field(a, b)
    return FieldElement(a.field, int(a.field.tables.mul[a.code, b.code]))


def inv(a: FieldElement) -> FieldElement:
    if a.code == 0:
        raise ZeroDivisionFieldError(f"zero has no inverse in GF({a.field.q})")
    return FieldElement(a.field, int(a.field.tables.inv[a.code]))


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    return mul(a, inv(b))


def power_codes(field: FieldSpec, codes: np.ndarray, m: int) -> np.ndarray:
    """Vectorized square-and-multiply; 0^0 = 1."""
    if m < 0:
        raise DomainError(f"negative exponent {m}")
    mul_t = field.tables.mul
    result = np.ones_like(np.asarray(codes, dtype=np.int64))
    base = np.asarray(codes, dtype=np.int64).copy()
    while m:
        if m & 1:
            result = mul_t[result, base]
        base = mul_t[base, base]
        m >>= 1
    return result


def power(a: FieldElement, m: int) -> FieldElement:
    if m < 0:
        return power(inv(a), -m)
    mul_t = a.field.tables.mul
    result, base = 1, a.code
    while m:
        if m & 1:
            result = int(mul_t[result, base])
        base = int(mul_t[base, base])
        m >>= 1
    return FieldElement(a.field, result)


def frobenius(a: FieldElement) -> FieldElement:
    return power(a, a.field.p)


def in_prime_subfield(a: FieldElement) -> bool:
    return a.code < a.field.p


def enumerate_elements(field: FieldSpec) -> List[FieldElement]:
    """All q elements in ascending canonical code."""
    return [FieldElement(field, code) for code in range(field.q)]


def mu_subgroup(field: FieldSpec, d: int) -> FrozenSet[FieldElement]:
    """
    The d-th roots of unity mu_d = {x : x^d = 1}; requires d | q - 1.

    F_q^* is cyclic of order q - 1, so |mu_d| = d exactly.
    """
    if d < 1 or (field.q - 1) % d:
        raise DomainError(f"d={d} does not divide q-1={field.q - 1}")
    codes = np.arange(1, field.q, dtype=np.int64)
    roots = codes[power_codes(field, codes, d) == 1]
    return frozenset(FieldElement(field, int(c)) for c in roots)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def format_modulus(field: FieldSpec) -> str:
    return format_int_list(field.modulus)


def parse_modulus(text: str) -> Tuple[int, ...]:
    coeffs = parse_int_list(text, "modulus coefficient")
    if len(coeffs) < 2:
        raise ParseError(f"modulus {text!r} must have degree >= 1")
    return tuple(coeffs)


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    try:
        code = int(text.strip())
    except ValueError:
        raise ParseError(f"malformed element code {text!r}") from None
    if not 0 <= code < field.q:
        raise ParseError(f"element code {code} outside [0, {field.q - 1}]")
    return FieldElement(field, code)

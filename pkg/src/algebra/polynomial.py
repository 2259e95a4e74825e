"""
Dense Univariate Polynomials over GF(q)

Coefficients are stored as a read-only numpy array of canonical element codes,
ascending degree, trailing zeros stripped (the zero polynomial is empty).

Mathematical Properties:
- Every function F_q -> F_q is induced by a unique polynomial of degree <= q-1
- x^q = x on F_q, so any exponent m >= 1 may be folded to ((m-1) mod (q-1)) + 1
  without changing the induced mapping ("reduction mod x^q - x")
- Field addition is coordinatewise over F_p, which lets sums of many
  coefficients be collected with a single bincount per coordinate
"""

from typing import Iterable, List, Mapping, Optional, Union

import numpy as np

from src.algebra.galois_field import FieldElement, FieldSpec, power_codes
from src.utils.errors import DomainError, FieldMismatchError, ParseError
from src.utils.helpers import format_int_list, parse_int_list

Scalar = Union[int, FieldElement]


class Poly:
    __slots__ = ("field", "_codes")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        items = list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs
        if len(items) and isinstance(items[0], FieldElement):
            for c in items:
                if c.field != field:
                    raise FieldMismatchError(f"coefficient from {c.field} in a polynomial over {field}")
            items = [c.code for c in items]
        arr = np.array(items, dtype=np.int64).ravel()
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise DomainError(f"coefficient codes must lie in [0, {field.q - 1}]")
        nz = np.flatnonzero(arr)
        arr = arr[: nz[-1] + 1] if nz.size else arr[:0]
        arr.setflags(write=False)
        self._codes = arr

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def constant(cls, field: FieldSpec, c: Scalar) -> "Poly":
        return cls(field, [_scalar_code(field, c)])

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldSpec, m: int, c: Scalar = 1) -> "Poly":
        if m < 0:
            raise DomainError(f"negative exponent {m}")
        coeffs = np.zeros(m + 1, dtype=np.int64)
        coeffs[m] = _scalar_code(field, c)
        return cls(field, coeffs)

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Mapping[int, Scalar], reduce: bool = True) -> "Poly":
        """
        Sum of c * x^m over the given terms.

        With reduce=True every exponent is folded first, so terms like
        x^((p^l + 1) / 2) for large l never materialize a dense array.
        """
        if not terms:
            return cls.zero(field)
        exps = [int(m) for m in terms]
        if min(exps) < 0:
            raise DomainError("negative exponent in polynomial terms")
        codes = np.array([_scalar_code(field, c) for c in terms.values()], dtype=np.int64)
        targets = np.array([fold_exponent(m, field.q) if reduce else m for m in exps], dtype=np.int64)
        length = int(targets.max()) + 1
        return cls(field, _collect(field, targets, codes, length))

    # -- views --------------------------------------------------------------

    @property
    def codes(self) -> np.ndarray:
        return self._codes

    @property
    def coeffs(self) -> tuple:
        return tuple(int(c) for c in self._codes)

    @property
    def elements(self) -> List[FieldElement]:
        return [FieldElement(self.field, int(c)) for c in self._codes]

    @property
    def degree(self) -> Optional[int]:
        return degree(self)

    @property
    def is_zero(self) -> bool:
        return self._codes.size == 0

    def coefficient(self, m: int) -> FieldElement:
        code = int(self._codes[m]) if 0 <= m < self._codes.size else 0
        return FieldElement(self.field, code)

    def terms(self) -> dict:
        """Nonzero coefficients keyed by exponent."""
        return {int(m): int(self._codes[m]) for m in np.flatnonzero(self._codes)}

    # -- operators ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._codes, other._codes)

    def __hash__(self) -> int:
        return hash((self.field, self._codes.tobytes()))

    def __add__(self, other):
        return add(self, _as_poly(self.field, other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _as_poly(self.field, other))

    def __rsub__(self, other):
        return sub(_as_poly(self.field, other), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, np.integer)):
            return scale(other, self)
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> FieldElement:
        return evaluate(self, x)

    def __repr__(self) -> str:
        return f"Poly(GF({self.field.q}), [{format_poly(self)}])"


def _scalar_code(field: FieldSpec, c: Scalar) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatchError(f"scalar from {c.field} used over {field}")
        return c.code
    return int(c) % field.p


def _as_poly(field: FieldSpec, other) -> Poly:
    if isinstance(other, Poly):
        return other
    return Poly.constant(field, other)


def _check_same_field(f: Poly, g: Poly) -> None:
    if f.field != g.field:
        raise FieldMismatchError(f"polynomials over {f.field} and {g.field} cannot be combined")


def _collect(field: FieldSpec, targets: np.ndarray, codes: np.ndarray, length: int) -> np.ndarray:
    """Field-sum codes[j] into slot targets[j]; returns `length` codes."""
    if field.e == 1:
        sums = np.bincount(targets, weights=codes, minlength=length)
        return np.rint(sums).astype(np.int64) % field.p
    digits = field.tables.digits[codes]
    acc = np.empty((length, field.e), dtype=np.int64)
    for j in range(field.e):
        acc[:, j] = np.rint(np.bincount(targets, weights=digits[:, j], minlength=length)).astype(np.int64)
    return field.tables.encode(acc)


def fold_exponent(m: int, q: int) -> int:
    if m == 0:
        return 0
    return (m - 1) % (q - 1) + 1


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------

def degree(f: Poly) -> Optional[int]:
    """None for the zero polynomial."""
    return f.codes.size - 1 if f.codes.size else None


def degree_at_most(f: Poly, bound: int) -> bool:
    d = degree(f)
    return d is None or d <= bound


def add(f: Poly, g: Poly) -> Poly:
    _check_same_field(f, g)
    n = max(f.codes.size, g.codes.size)
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: f.codes.size] = f.codes
    b[: g.codes.size] = g.codes
    return Poly(f.field, f.field.tables.add[a, b])


def neg(f: Poly) -> Poly:
    return Poly(f.field, f.field.tables.neg[f.codes])


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(c: Scalar, f: Poly) -> Poly:
    code = _scalar_code(f.field, c)
    return Poly(f.field, f.field.tables.mul[code, f.codes])


def mul(f: Poly, g: Poly) -> Poly:
    _check_same_field(f, g)
    if f.is_zero or g.is_zero:
        return Poly.zero(f.field)
    fi = np.flatnonzero(f.codes)
    gi = np.flatnonzero(g.codes)
    products = f.field.tables.mul[f.codes[fi][:, None], g.codes[gi][None, :]].ravel()
    targets = (fi[:, None] + gi[None, :]).ravel()
    length = f.codes.size + g.codes.size - 1
    return Poly(f.field, _collect(f.field, targets, products, length))


def reduce_mod_qx(f: Poly) -> Poly:
    """Fold exponents m >= q to ((m - 1) mod (q - 1)) + 1; constants stay put."""
    q = f.field.q
    if f.codes.size <= q:
        return f
    nz = np.flatnonzero(f.codes)
    targets = np.where(nz == 0, 0, (nz - 1) % (q - 1) + 1)
    return Poly(f.field, _collect(f.field, targets, f.codes[nz], q))


def pow_mod(f: Poly, s: int) -> Poly:
    """f^s mod (x^q - x), reducing after every multiplication."""
    if s < 0:
        raise DomainError(f"negative exponent {s}")
    result = Poly.constant(f.field, 1)
    base = reduce_mod_qx(f)
    while s:
        if s & 1:
            result = reduce_mod_qx(mul(result, base))
        s >>= 1
        if s:
            base = reduce_mod_qx(mul(base, base))
    return result


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate(f: Poly, x: Scalar) -> FieldElement:
    """Horner evaluation at a single point."""
    if isinstance(x, FieldElement) and x.field != f.field:
        raise FieldMismatchError(f"point from {x.field} for a polynomial over {f.field}")
    xc = _scalar_code(f.field, x) if not isinstance(x, FieldElement) else x.code
    g = reduce_mod_qx(f)
    t = f.field.tables
    acc = 0
    for c in g.codes[::-1]:
        acc = int(t.add[t.mul[acc, xc], c])
    return FieldElement(f.field, acc)


def evaluate_all(f: Poly) -> np.ndarray:
    """Values at every element, indexed by canonical code."""
    g = reduce_mod_qx(f)
    t = f.field.tables
    xs = np.arange(f.field.q, dtype=np.int64)
    acc = np.zeros(f.field.q, dtype=np.int64)
    for c in g.codes[::-1]:
        acc = t.add[t.mul[acc, xs], c]
    return acc


def evaluate_monomials(field: FieldSpec, m: int) -> np.ndarray:
    """x^m at every element (0^0 = 1)."""
    return power_codes(field, np.arange(field.q, dtype=np.int64), m)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Comma-separated ascending codes; the zero polynomial prints as "0"."""
    return format_int_list(f.codes) if not f.is_zero else "0"


def parse_poly(field: FieldSpec, text: str) -> Poly:
    codes = parse_int_list(text, "coefficient")
    if any(c >= field.q for c in codes):
        raise ParseError(f"coefficient code out of range for GF({field.q}) in {text!r}")
    return Poly(field, codes)

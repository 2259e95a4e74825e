"""
Permutation Polynomial Testers

Three independent ways to decide whether f permutes F_q:
- brute_force_check: evaluate f everywhere and look for a collision
- hermite_check: Hermite's criterion on the reduced powers f^s mod (x^q - x)
    (i)  f^(q-1) has degree q - 1
    (ii) f^s has degree <= q - 2 for every 1 <= s <= q - 2
- zieve_check: for f(x) = x^r h(x^((q-1)/d)) with d | q - 1,
    f permutes F_q  <=>  gcd(r, (q-1)/d) = 1 and y -> y^r h(y)^((q-1)/d) permutes mu_d

Every negative Verdict carries a Witness that validate_witness can re-check.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Optional, Tuple

from sympy import divisors

from src.algebra.galois_field import FieldElement, FieldSpec, mu_subgroup, power
from src.algebra.polynomial import (
    Poly, degree, degree_at_most, evaluate, evaluate_all, mul, pow_mod, reduce_mod_qx,
)
from src.utils.errors import (
    CapExceededError, DomainError, FieldMismatchError, OracleDisagreementError,
)

logger = logging.getLogger(__name__)

DEFAULT_HERMITE_CAP = 343

WITNESS_KINDS = ("collision", "hermite_i", "hermite_ii", "gcd", "mu_escape", "mu_collision")


@dataclass(frozen=True)
class Witness:
    """
    kind / data:
      collision     (x1, x2)       x1 < x2 with f(x1) = f(x2)
      hermite_i     (q - 1,)       f^(q-1) reduced has degree below q - 1
      hermite_ii    (s,)           f^s reduced has degree q - 1
      gcd           (r, (q-1)/d)   gcd is not 1
      mu_escape     (y, z)         y in mu_d maps to z outside mu_d
      mu_collision  (y1, y2)       two elements of mu_d share an image
    """
    kind: str
    data: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "data": [int(v) for v in self.data]}


@dataclass(frozen=True)
class Verdict:
    is_permutation: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        if not self.is_permutation and self.witness is None:
            raise DomainError("a negative verdict needs a witness")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_permutation": self.is_permutation,
            "witness": self.witness.to_dict() if self.witness else None,
        }


PERMUTATION = Verdict(True)


@dataclass(frozen=True)
class MultiplicativeForm:
    """f(x) = x^r h(x^((q-1)/d))."""
    r: int
    d: int
    h: Poly

    def validate(self, field: FieldSpec) -> None:
        if self.r < 1:
            raise DomainError(f"exponent r={self.r} must be positive")
        if self.d < 1 or (field.q - 1) % self.d:
            raise DomainError(f"d={self.d} does not divide q-1={field.q - 1}")
        if self.h.field != field:
            raise FieldMismatchError(f"h is over {self.h.field}, expected {field}")

    def expand(self, field: FieldSpec) -> Poly:
        self.validate(field)
        step = (field.q - 1) // self.d
        terms = {self.r + j * step: FieldElement(field, c) for j, c in self.h.terms().items()}
        return Poly.from_terms(field, terms)


# ---------------------------------------------------------------------------
# Testers
# ---------------------------------------------------------------------------

def brute_force_check(f: Poly, field: FieldSpec) -> Verdict:
    """Evaluate at all q elements; the first repeated image gives the witness."""
    _check_field(f, field)
    values = evaluate_all(f)
    seen: Dict[int, int] = {}
    for x, y in enumerate(values.tolist()):
        if y in seen:
            return Verdict(False, Witness("collision", (seen[y], x)))
        seen[y] = x
    return PERMUTATION


def hermite_check(f: Poly, field: FieldSpec, q_cap: int = DEFAULT_HERMITE_CAP) -> Verdict:
    _check_field(f, field)
    q = field.q
    if q > q_cap:
        raise CapExceededError(q, q_cap, "Hermite field order")
    base = reduce_mod_qx(f)
    power_s = Poly.constant(field, 1)
    for s in range(1, q - 1):
        power_s = reduce_mod_qx(mul(power_s, base))
        if not degree_at_most(power_s, q - 2):
            return Verdict(False, Witness("hermite_ii", (s,)))
    last = reduce_mod_qx(mul(power_s, base))
    if degree(last) != q - 1:
        return Verdict(False, Witness("hermite_i", (q - 1,)))
    return PERMUTATION


def _mu_image(form: MultiplicativeForm, field: FieldSpec, y: FieldElement) -> FieldElement:
    step = (field.q - 1) // form.d
    return power(y, form.r) * power(evaluate(form.h, y), step)


def zieve_check(form: MultiplicativeForm, field: FieldSpec) -> Verdict:
    form.validate(field)
    step = (field.q - 1) // form.d
    if gcd(form.r, step) != 1:
        return Verdict(False, Witness("gcd", (form.r, step)))
    mu = mu_subgroup(field, form.d)
    preimage: Dict[FieldElement, FieldElement] = {}
    for y in sorted(mu, key=lambda el: el.code):
        z = _mu_image(form, field, y)
        if z not in mu:
            return Verdict(False, Witness("mu_escape", (y.code, z.code)))
        if z in preimage:
            return Verdict(False, Witness("mu_collision", (preimage[z].code, y.code)))
        preimage[z] = y
    return PERMUTATION


def decompose_multiplicative(f: Poly, d: int, field: FieldSpec) -> Optional[MultiplicativeForm]:
    """
    Write f = x^r h(x^((q-1)/d)) with the smallest r >= 1, or return None
    when the exponents of f are not all congruent mod (q-1)/d.
    """
    _check_field(f, field)
    if d < 1 or (field.q - 1) % d:
        raise DomainError(f"d={d} does not divide q-1={field.q - 1}")
    step = (field.q - 1) // d
    terms = f.terms()
    if not terms:
        return MultiplicativeForm(1, d, Poly.zero(field))
    if 0 in terms:
        return None
    residues = {(m - 1) % step + 1 for m in terms}
    if len(residues) != 1:
        return None
    r = residues.pop()
    h = Poly.from_terms(field, {(m - r) // step: FieldElement(field, c) for m, c in terms.items()},
                        reduce=False)
    return MultiplicativeForm(r, d, h)


# ---------------------------------------------------------------------------
# Dispatch and witness re-validation
# ---------------------------------------------------------------------------

METHODS = ("brute", "hermite", "zieve", "all")


def check_permutation(f: Poly, field: FieldSpec, method: str = "brute",
                      hermite_cap: int = DEFAULT_HERMITE_CAP) -> Verdict:
    """
    "zieve" tries every divisor d of q - 1 (largest step first) and falls back
    to brute force when f has no multiplicative form. "all" runs every
    applicable tester and insists they agree.
    """
    if method == "brute":
        return brute_force_check(f, field)
    if method == "hermite":
        return hermite_check(f, field, hermite_cap)
    if method == "zieve":
        form = _first_form(f, field)
        return zieve_check(form, field) if form is not None else brute_force_check(f, field)
    if method == "all":
        brute = brute_force_check(f, field)
        others = []
        if field.q <= hermite_cap:
            others.append(("hermite", hermite_check(f, field, hermite_cap)))
        form = _first_form(f, field)
        if form is not None:
            others.append(("zieve", zieve_check(form, field)))
        for name, verdict in others:
            if verdict.is_permutation != brute.is_permutation:
                raise OracleDisagreementError(f"{name} disagrees with brute force on {f!r}")
        return brute
    raise DomainError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def _first_form(f: Poly, field: FieldSpec) -> Optional[MultiplicativeForm]:
    for d in divisors(field.q - 1):
        form = decompose_multiplicative(reduce_mod_qx(f), int(d), field)
        if form is not None:
            return form
    return None


def validate_witness(f: Poly, field: FieldSpec, verdict: Verdict,
                     form: Optional[MultiplicativeForm] = None) -> bool:
    """Re-derive a negative verdict's failure independently of the tester."""
    if verdict.is_permutation:
        return True
    w = verdict.witness
    if w.kind == "collision":
        x1, x2 = (FieldElement(field, c) for c in w.data)
        return x1 != x2 and evaluate(f, x1) == evaluate(f, x2)
    if w.kind == "hermite_ii":
        return degree(pow_mod(f, w.data[0])) == field.q - 1
    if w.kind == "hermite_i":
        return degree(pow_mod(f, field.q - 1)) != field.q - 1
    if form is None:
        raise DomainError(f"witness kind {w.kind!r} needs the multiplicative form")
    if w.kind == "gcd":
        return gcd(form.r, (field.q - 1) // form.d) != 1
    mu = mu_subgroup(field, form.d)
    if w.kind == "mu_escape":
        y = FieldElement(field, w.data[0])
        return y in mu and _mu_image(form, field, y) not in mu
    if w.kind == "mu_collision":
        y1, y2 = (FieldElement(field, c) for c in w.data)
        return y1 != y2 and {y1, y2} <= mu and _mu_image(form, field, y1) == _mu_image(form, field, y2)
    raise DomainError(f"unknown witness kind {w.kind!r}")


def _check_field(f: Poly, field: FieldSpec) -> None:
    if f.field != field:
        raise FieldMismatchError(f"polynomial over {f.field} checked against {field}")


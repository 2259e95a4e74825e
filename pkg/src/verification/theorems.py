"""
Theorem Verification

Each cell of a parameter grid constructs a family member, predicts whether
it permutes F_q, and compares the prediction against a permutation oracle
(brute force by default). Named claims:

    thm3.1   trinomial, p > 3            predicted PP iff l = 0 and k != 3
    thm4.1   binomial_p3, p = 3          predicted PP iff l = 0 or l = m e + 1, m even
    result1  D_{q+2,0}(1, x)             predicted PP iff q = 1 mod 3, plus the closed form
    result2  D_{p^l+2,2}(1, x)           predicted PP iff l = 0
    result3  binomial_k4 vs D_{p^l+2,4}  identical verdicts
    result4  D_{p^l+2,k}(1, x) vs trinomial (binomial_p3 for p = 3)  identical verdicts
"""

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from src.algebra.dickson import DEFAULT_EXACT_LIMIT, DicksonParams, dickson_poly, result1_closed_form
from src.algebra.galois_field import FieldSpec, build_field
from src.algebra.polynomial import Poly, evaluate_all
from src.criteria.permutation_tests import DEFAULT_HERMITE_CAP, Verdict, check_permutation
from src.utils.errors import CapExceededError, DomainError
from src.verification.families import (
    TRINOMIAL_EXCLUDED_K, FamilyParams, binomial_k4, binomial_p3, dickson_n_pl2,
    predict_binomial_pp_p3, predict_result1_pp, predict_trinomial_pp, trinomial,
)

logger = logging.getLogger(__name__)

DEFAULT_Q_CAP = 343

FAMILIES = ("trinomial", "binomial_p3", "binomial_k4", "dickson_n_pl2", "result1")

THEOREMS: Dict[str, Dict[str, Any]] = {
    "thm3.1": {"family": "trinomial", "p_list": [5, 7, 11, 13], "e_max": 2},
    "thm4.1": {"family": "binomial_p3", "p_list": [3], "e_max": 4},
    "result1": {"family": "result1", "p_list": [5, 7, 11, 13], "e_max": 2},
    "result2": {"family": "dickson_n_pl2", "p_list": [5, 7, 11, 13], "e_max": 2, "k_list": [2]},
    "result3": {"family": "binomial_k4", "p_list": [5, 7, 11, 13], "e_max": 2},
    "result4": {"family": "dickson_n_pl2", "p_list": [5, 7, 11, 13], "e_max": 2, "k_exclude": [2, 4]},
}


@dataclass(frozen=True)
class TheoremReport:
    params: FamilyParams
    family: str
    predicted: bool
    observed: bool
    agree: bool
    witness: Optional[Dict[str, Any]] = None
    identity_ok: Optional[bool] = None     # result1 only: closed form == D_{q+2,0} pointwise

    @property
    def passed(self) -> bool:
        return self.agree and self.identity_ok is not False

    def to_row(self) -> Dict[str, Any]:
        p, e, l, k = self.params.as_tuple()
        return {
            "p": p, "e": e, "l": l, "k": k,
            "family": self.family,
            "predicted": self.predicted,
            "observed": self.observed,
            "agree": self.agree,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class CellOptions:
    oracle: str = "brute"
    q_cap: int = DEFAULT_Q_CAP
    hermite_cap: int = DEFAULT_HERMITE_CAP
    exact_limit: int = DEFAULT_EXACT_LIMIT


@dataclass
class Grid:
    p_list: Sequence[int]
    e_list: Sequence[int]
    l_list: Optional[Sequence[int]] = None     # None: family default range
    k_list: Optional[Sequence[int]] = None     # None: every k the family admits
    k_exclude: Sequence[int] = dc_field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Single cells
# ---------------------------------------------------------------------------

def _field_for(params: FamilyParams, options: CellOptions) -> FieldSpec:
    if params.q > options.q_cap:
        raise CapExceededError(params.q, options.q_cap)
    # "all" skips Hermite above its cap on its own
    if options.oracle == "hermite" and params.q > options.hermite_cap:
        raise CapExceededError(params.q, options.hermite_cap, "Hermite field order")
    return build_field(params.p, params.e)


def _oracle(f: Poly, F: FieldSpec, options: CellOptions) -> Verdict:
    return check_permutation(f, F, options.oracle, options.hermite_cap)


def _report(params: FamilyParams, family: str, predicted: bool, verdict: Verdict,
            identity_ok: Optional[bool] = None) -> TheoremReport:
    report = TheoremReport(
        params=params,
        family=family,
        predicted=bool(predicted),
        observed=verdict.is_permutation,
        agree=bool(predicted) == verdict.is_permutation,
        witness=verdict.witness.to_dict() if verdict.witness else None,
        identity_ok=identity_ok,
    )
    logger.debug("%s %s: predicted=%s observed=%s", family, params.as_tuple(),
                 report.predicted, report.observed)
    return report


def verify_cell(params: FamilyParams, family: str, options: Optional[CellOptions] = None) -> TheoremReport:
    """
    Compare prediction and oracle for one grid cell.

    For binomial_k4 and dickson_n_pl2 (except k = 2) the prediction is the
    oracle's verdict on the paired polynomial, so agreement means the two
    polynomials permute F_q together.
    """
    options = options or CellOptions()
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    F = _field_for(params, options)

    if family == "trinomial":
        return _report(params, family, predict_trinomial_pp(params),
                       _oracle(trinomial(params, F), F, options))

    if family == "binomial_p3":
        if params.k != 1:
            raise DomainError(f"p = 3 forces k = 1, got k={params.k}")
        return _report(params, family, predict_binomial_pp_p3(params.e, params.l),
                       _oracle(binomial_p3(params.l, F), F, options))

    if family == "binomial_k4":
        paired = _oracle(dickson_n_pl2(params, F, options.exact_limit), F, options)
        return _report(params, family, paired.is_permutation,
                       _oracle(binomial_k4(params, F), F, options))

    if family == "dickson_n_pl2":
        observed = _oracle(dickson_n_pl2(params, F, options.exact_limit), F, options)
        return _report(params, family, _dickson_prediction(params, F, options), observed)

    # result1
    if params.k != 0 or params.l != params.e:
        raise DomainError(f"result1 cells fix l = e and k = 0, got l={params.l}, k={params.k}")
    dickson = dickson_poly(DicksonParams(F.q + 2, 0), F, reduce=True, exact_limit=options.exact_limit)
    closed = result1_closed_form(F)
    identity_ok = bool(np.array_equal(evaluate_all(dickson), evaluate_all(closed)))
    if not identity_ok:
        logger.warning("closed form differs from D_{q+2,0} over %s", F)
    return _report(params, family, predict_result1_pp(F), _oracle(dickson, F, options), identity_ok)


def _dickson_prediction(params: FamilyParams, F: FieldSpec, options: CellOptions) -> bool:
    if params.p == 3:
        if params.k != 1:
            raise DomainError(f"D_{{3^l+2,k}} is classified for k = 1 only, got k={params.k}")
        return _oracle(binomial_p3(params.l, F), F, options).is_permutation
    if params.k == 0:
        raise DomainError("D_{p^l+2,0} is classified only for l = e; use the result1 family")
    if params.k == 2:
        return params.l == 0
    if params.k == 4:
        return _oracle(binomial_k4(params, F), F, options).is_permutation
    return _oracle(trinomial(params, F), F, options).is_permutation


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

def default_l_range(family: str, e: int) -> List[int]:
    """Two full folding periods for binomial_p3, one for everything else."""
    if family == "result1":
        return [e]
    top = 4 * e + 1 if family == "binomial_p3" else 2 * e + 1
    return list(range(top + 1))


def family_k_values(family: str, p: int) -> List[int]:
    if family == "trinomial":
        return [k for k in range(p) if k not in TRINOMIAL_EXCLUDED_K]
    if family == "binomial_p3":
        return [1]
    if family == "binomial_k4":
        return [4]
    if family == "result1":
        return [0]
    return [1] if p == 3 else list(range(1, p))


def grid_cells(grid: Grid, family: str) -> List[FamilyParams]:
    """Cells in lexicographic (p, e, l, k) order."""
    cells = []
    for p in sorted(set(grid.p_list)):
        allowed = family_k_values(family, p)
        ks = allowed if grid.k_list is None else [k for k in sorted(set(grid.k_list)) if k in allowed]
        ks = [k for k in ks if k not in grid.k_exclude]
        for e in sorted(set(grid.e_list)):
            if family == "result1":
                ls = [e]
            elif grid.l_list is None:
                ls = default_l_range(family, e)
            else:
                ls = sorted(set(grid.l_list))
            for l in ls:
                for k in ks:
                    cells.append(FamilyParams(p, e, l, k))
    return cells


def _progress_enabled(progress: Optional[bool]) -> bool:
    if progress is None:
        return sys.stderr.isatty()
    return progress


def scan(grid: Grid, family: str, options: Optional[CellOptions] = None,
         workers: int = 1, progress: Optional[bool] = None) -> List[TheoremReport]:
    """
    Verify every cell of the grid. The cap is checked for the whole grid
    before any work starts; reports come back in cell order even when
    workers > 1.
    """
    options = options or CellOptions()
    cells = grid_cells(grid, family)
    for cell in cells:
        if cell.q > options.q_cap:
            raise CapExceededError(cell.q, options.q_cap)

    logger.info("scanning %d %s cells with %d worker(s)", len(cells), family, workers)
    start = time.time()
    run = partial(verify_cell, family=family, options=options)
    bar = dict(total=len(cells), desc=f"{family} cells", disable=not _progress_enabled(progress),
               file=sys.stderr, leave=False)
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(tqdm(pool.map(run, cells, chunksize=4), **bar))
    else:
        reports = [run(cell) for cell in tqdm(cells, **bar)]

    failed = [r for r in reports if not r.passed]
    for r in failed:
        logger.warning("disagreement in %s cell %s: predicted=%s observed=%s",
                       family, r.params.as_tuple(), r.predicted, r.observed)
    logger.info("%s: %d/%d cells agree in %.2fs", family, len(reports) - len(failed),
                len(reports), time.time() - start)
    return reports


def check_periodicity(reports: Sequence[TheoremReport]) -> List[Tuple[TheoremReport, TheoremReport]]:
    """
    Pairs of reports whose observed verdicts differ between l and l + 2e
    (l >= 1, same family, p, e and k). An empty list means the folding period
    holds on every pair the reports cover.
    """
    by_key = {(r.family, r.params.p, r.params.e, r.params.l, r.params.k): r for r in reports}
    mismatches = []
    for (family, p, e, l, k), report in by_key.items():
        if l < 1:
            continue
        partner = by_key.get((family, p, e, l + 2 * e, k))
        if partner is not None and partner.observed != report.observed:
            mismatches.append((report, partner))
    return mismatches


def theorem_grid(name: str, p_list: Optional[Sequence[int]] = None, e_max: Optional[int] = None,
                 l_max: Optional[int] = None) -> Tuple[str, Grid]:
    if name not in THEOREMS:
        raise DomainError(f"unknown theorem {name!r}; expected one of {', '.join(THEOREMS)}")
    entry = THEOREMS[name]
    e_max = e_max if e_max is not None else entry["e_max"]
    if e_max < 1:
        raise DomainError(f"e_max={e_max} must be at least 1")
    grid = Grid(
        p_list=list(p_list) if p_list else list(entry["p_list"]),
        e_list=list(range(1, e_max + 1)),
        l_list=None if l_max is None else list(range(l_max + 1)),
        k_list=entry.get("k_list"),
        k_exclude=tuple(entry.get("k_exclude", ())),
    )
    return entry["family"], grid


def verify_theorem(name: str, p_list: Optional[Sequence[int]] = None, e_max: Optional[int] = None,
                   l_max: Optional[int] = None, options: Optional[CellOptions] = None,
                   workers: int = 1, progress: Optional[bool] = None) -> List[TheoremReport]:
    family, grid = theorem_grid(name, p_list, e_max, l_max)
    return scan(grid, family, options, workers, progress)

#!/usr/bin/env python3
"""
Complete Verification Suite for the Reversed Dickson Workbench

This script runs every classification and oracle cross-check end to end:
1. Coefficient identity (exact integer arithmetic)
2. Oracle agreement (Hermite and multiplicative criteria vs brute force)
3. Named classifications over their default grids, with witness re-validation
4. Folding periodicity in l

Exits non-zero if any check fails.
"""

import itertools
import sys
import time
from math import comb
from pathlib import Path

import numpy as np
from colorama import Fore, Style, init
from sympy import divisors

# Initialize colorama
init()

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.algebra.dickson import DicksonParams, dickson_poly, integer_coefficient
from src.algebra.galois_field import build_field
from src.algebra.polynomial import Poly
from src.criteria.permutation_tests import (
    MultiplicativeForm, Verdict, Witness, brute_force_check, hermite_check, validate_witness,
    zieve_check,
)
from src.utils.config import load_config
from src.utils.logging_utils import setup_logging
from src.verification.families import binomial_k4, binomial_p3, dickson_n_pl2, trinomial
from src.verification.scan_runner import ScanRunner
from src.verification.theorems import THEOREMS, check_periodicity


def print_header(title):
    print("\n" + "=" * 80)
    print(f"{Fore.CYAN}{Style.BRIGHT}{title}{Style.RESET_ALL}")
    print("=" * 80)


def print_test(test_name):
    print(f"\n{Fore.YELLOW}Testing: {test_name}{Style.RESET_ALL}")
    print("-" * 80)


def status(ok):
    return f"{Fore.GREEN}✓ PASS{Style.RESET_ALL}" if ok else f"{Fore.RED}✗ FAIL{Style.RESET_ALL}"


# ============================================================================
# PART 1: COEFFICIENT IDENTITY
# ============================================================================

def verify_coefficient_identity():
    """(n - k i) C(n-i, i) = (n - i) c_i for n <= 30, i <= n/2, k <= 12."""
    print_header("PART 1: COEFFICIENT IDENTITY")
    checked = 0
    for n in range(1, 31):
        for i in range(n // 2 + 1):
            for k in range(13):
                if (n - k * i) * comb(n - i, i) != (n - i) * integer_coefficient(n, k, i):
                    print(f"{Fore.RED}identity fails at n={n}, k={k}, i={i}{Style.RESET_ALL}")
                    return False
                checked += 1
    print(f"  {checked} (n, k, i) triples checked: {status(True)}")
    return True


# ============================================================================
# PART 2: ORACLE AGREEMENT
# ============================================================================

def verify_oracles(config):
    print_header("PART 2: ORACLE AGREEMENT")
    oracles = config["oracles"]
    rng = np.random.default_rng(oracles["seed"])
    results = {}

    print_test("Hermite vs brute force, all 625 polynomials of degree <= 3 over F_5")
    F5 = build_field(5, 1)
    ok = True
    for coeffs in itertools.product(range(5), repeat=4):
        f = Poly(F5, coeffs)
        h = hermite_check(f, F5)
        ok &= h.is_permutation == brute_force_check(f, F5).is_permutation and validate_witness(f, F5, h)
    print(f"  {status(ok)}")
    results["hermite F_5"] = ok

    for p, e in [(3, 2), (5, 2)]:
        F = build_field(p, e)
        print_test(f"Hermite vs brute force, {oracles['hermite_random_samples']} random polynomials over F_{F.q}")
        ok = True
        for _ in range(oracles["hermite_random_samples"]):
            f = Poly(F, rng.integers(0, F.q, size=int(rng.integers(1, F.q + 1))))
            h = hermite_check(f, F)
            ok &= h.is_permutation == brute_force_check(f, F).is_permutation and validate_witness(f, F, h)
        print(f"  {status(ok)}")
        results[f"hermite F_{F.q}"] = ok

    for p, e in [(3, 2), (5, 2), (3, 3), (7, 2)]:
        F = build_field(p, e)
        print_test(f"Multiplicative criterion vs brute force over F_{F.q}")
        ok = True
        configurations = 0
        for d in divisors(F.q - 1):
            for _ in range(oracles["zieve_samples"]):
                r = int(rng.integers(1, oracles["zieve_max_r"] + 1))
                h = Poly(F, rng.integers(0, F.q, size=int(rng.integers(1, int(d) + 2))))
                form = MultiplicativeForm(r, int(d), h)
                f = form.expand(F)
                z = zieve_check(form, F)
                ok &= z.is_permutation == brute_force_check(f, F).is_permutation
                ok &= validate_witness(f, F, z, form)
                configurations += 1
        print(f"  {configurations} configurations: {status(ok)}")
        results[f"zieve F_{F.q}"] = ok

    return results


# ============================================================================
# PART 3: NAMED CLASSIFICATIONS
# ============================================================================

def _observed_poly(report, F):
    params = report.params
    if report.family == "trinomial":
        return trinomial(params, F)
    if report.family == "binomial_p3":
        return binomial_p3(params.l, F)
    if report.family == "binomial_k4":
        return binomial_k4(params, F)
    if report.family == "result1":
        return dickson_poly(DicksonParams(F.q + 2, 0), F, reduce=True)
    return dickson_n_pl2(params, F)


def verify_classifications(runner):
    print_header("PART 3: NAMED CLASSIFICATIONS")
    results = {}
    for name in THEOREMS:
        print_test(name)
        start = time.time()
        reports = runner.run_theorem(name)
        agree = sum(r.passed for r in reports)

        invalid = 0
        for r in reports:
            if r.witness:
                F = build_field(r.params.p, r.params.e)
                verdict = Verdict(False, Witness(r.witness["kind"], tuple(r.witness["data"])))
                invalid += not validate_witness(_observed_poly(r, F), F, verdict)

        ok = agree == len(reports) and invalid == 0
        print(f"  cells agreeing:     {agree}/{len(reports)}")
        print(f"  invalid witnesses:  {invalid}")
        print(f"  time:               {time.time() - start:.2f}s")
        print(f"  {status(ok)}")
        for r in reports:
            if not r.passed:
                print(f"  {Fore.RED}disagreement at (p, e, l, k) = {r.params.as_tuple()}: "
                      f"predicted={r.predicted} observed={r.observed}{Style.RESET_ALL}")
        results[name] = ok
    return results


# ============================================================================
# PART 4: PERIODICITY
# ============================================================================

def verify_periodicity(runner):
    print_header("PART 4: FOLDING PERIODICITY")
    mismatches = check_periodicity(runner.collector.reports)
    for low, high in mismatches:
        print(f"  {Fore.RED}{low.family} {low.params.as_tuple()} vs l={high.params.l}{Style.RESET_ALL}")
    print(f"  verdict at l equals verdict at l + 2e: {status(not mismatches)}")
    return not mismatches


def main():
    """Run complete verification suite"""
    print("=" * 80)
    print(f"{Fore.CYAN}{Style.BRIGHT}COMPLETE VERIFICATION SUITE{Style.RESET_ALL}")
    print(f"{Fore.CYAN}Reversed Dickson Permutation Polynomials{Style.RESET_ALL}")
    print("=" * 80)

    setup_logging()
    config = load_config()
    config["scan"]["progress"] = False
    runner = ScanRunner(config=config)

    results = {"coefficient identity": verify_coefficient_identity()}
    results.update(verify_oracles(config))
    results.update(verify_classifications(runner))
    results["periodicity"] = verify_periodicity(runner)

    print_header("FINAL SUMMARY")
    for name, ok in results.items():
        print(f"  {name:24s}: {status(ok)}")
    passed = sum(results.values())
    print(f"\n  Passed: {passed}/{len(results)}")

    if passed == len(results):
        print(f"\n{Fore.GREEN}{Style.BRIGHT}ALL CHECKS PASSED{Style.RESET_ALL}")
        return 0
    print(f"\n{Fore.RED}{Style.BRIGHT}{len(results) - passed} check(s) failed{Style.RESET_ALL}")
    return 1


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (with the failing sub-checks) that is
printed in the pytest terminal summary; running this file directly prints
the same lines.
"""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from kappacalc.arithgrp import GroupSpec, franke_bound, oracle_unipotent_dim, unipotent_dim
from kappacalc.dualcoh import (
    is_invertible,
    kernel_orthogonality_check,
    matsushima_kernel_sp,
    sl_image,
    sp_dual_ring,
    vdg_basis,
)
from kappacalc.genera import atiyah_singer_l, l_polynomial, pontryagin_ring
from kappacalc.k3family import (
    KNOWN_A_VALUES,
    TOTAL_RING,
    ASolveError,
    FamilyModel,
    KappaResult,
    bott_obstruction,
    kappa,
    pull_back_to_fibers,
    solve_a_values,
)

TABLE = {
    1: KappaResult(8, 2),
    2: KappaResult(Fraction(8, 3), 4),
    3: KappaResult(Fraction(16, 45), 6),
    4: KappaResult(Fraction(8, 315), 8),
    5: KappaResult(Fraction(16, 14175), 10),
    6: KappaResult(Fraction(16, 467775), 12),
    7: KappaResult(Fraction(32, 42567525), 14),
    8: KappaResult(Fraction(8, 638512875), 16),
}

RESULTS: dict = {}


def record(n, title, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {n} [{status}] {title}"
    if failures:
        line += " -- " + "; ".join(failures)
    RESULTS[n] = line
    print(line)
    assert not failures, line


def test_criterion_1_table_reproduction():
    failures = []
    known_only = FamilyModel(KNOWN_A_VALUES)
    for i in (1, 2, 3):
        if known_only.kappa(l_polynomial(i + 1)) != TABLE[i]:
            failures.append(f"row {i} does not match with a_0..a_3 alone")
    # strict solve: the solved values must be integers
    try:
        strict = solve_a_values(KNOWN_A_VALUES, require_integer=True)
        a_values = strict.a_values
    except ASolveError as exc:
        failures.append(f"integrality: {exc}")
        a_values = solve_a_values(KNOWN_A_VALUES, require_integer=False).a_values
    rows = FamilyModel(a_values).kappa_table(8)
    for i, r in enumerate(rows, 1):
        if r != TABLE[i]:
            failures.append(f"row {i}: got {r}, want {TABLE[i]}")
    record(1, "kappa_table(8) equals the reference rows exactly; solved a_4..a_8 integral", failures)


def test_criterion_2_worked_example():
    failures = []
    t1, t2, _ = TOTAL_RING.gens()
    expected = (-3 * t1**8 + 24 * t1**6 * t2 - 50 * t1**4 * t2**2 + 8 * t1**2 * t2**3 + 21 * t2**4) / 14175
    if pull_back_to_fibers(l_polynomial(4)) != expected:
        failures.append("t-expansion of L_4 differs")
    if kappa(l_polynomial(4)) != KappaResult(Fraction(16, 45), 6):
        failures.append(f"kappa(L_4) = {kappa(l_polynomial(4))}")
    record(2, "L_4 in t1, t2 and kappa(L_4) = 16/45 l^6", failures)


def test_criterion_3_nonvanishing_witness():
    failures = []
    k2 = kappa(l_polynomial(2))
    if k2 != KappaResult(8, 2) or k2.is_zero():
        failures.append(f"kappa(L_2) = {k2}")
    rep = bott_obstruction(2)
    if (rep.class_degree, rep.bott_bound, rep.obstructs) != (12, 8, True):
        failures.append(f"degree report {rep.class_degree} vs {rep.bott_bound}, obstructs={rep.obstructs}")
    if rep.kappa != KappaResult(Fraction(8, 3), 4) or not rep.contradiction:
        failures.append(f"kappa(L_3) = {rep.kappa}")
    record(3, "kappa(L_2) = 8 l^2 != 0; degree 12 > 8 with kappa(L_3) = 8/3 l^4", failures)


def test_criterion_4_l_identities():
    failures = []
    P = pontryagin_ring(9)
    p1, p2 = P.gen("p1"), P.gen("p2")
    if l_polynomial(2) != (7 * p2 - p1**2) / 45:
        failures.append("L_2")
    if l_polynomial(1).evaluate({n: (-48 if n == "p1" else 0) for n in P.names}) != -16:
        failures.append("L_1(p1 = -48)")
    for i in range(0, 9):
        lhs = kappa(atiyah_singer_l(i + 1))
        rhs = kappa(l_polynomial(i + 1))
        if lhs.coefficient * 2 ** (i + 1) != rhs.coefficient or (not rhs.is_zero() and lhs.lambda_power != rhs.lambda_power):
            failures.append(f"modified identity at i={i}")
    record(4, "L_2 formula, signature -16, 2^(i+1) kappa(L~_(i+1)) = kappa(L_(i+1))", failures)


def test_criterion_5_franke_bounds():
    failures = []
    if franke_bound(GroupSpec.so(3, 19)).bound != 20:
        failures.append("so:3,19 bound")
    specs = [(GroupSpec.so(p, q), p + q - 2) for q in range(1, 8) for p in range(1, q + 1) if p + q <= 8]
    specs += [(GroupSpec.sp(n), 2 * n - 1) for n in range(1, 5)]
    # SL_1 has no proper parabolic subgroup, so the sweep starts at n = 2
    specs += [(GroupSpec.sl(n), n - 1) for n in range(2, 7)]
    for spec, closed in specs:
        b = franke_bound(spec)
        if (b.bound, b.argmin_k) != (closed, 1):
            failures.append(f"{spec}: bound {b.bound} at k={b.argmin_k}, closed form {closed} at k=1")
        for k in spec.k_range():
            if unipotent_dim(spec, k) != oracle_unipotent_dim(spec, k):
                failures.append(f"{spec} k={k}: formula/oracle mismatch")
    record(5, "Franke bounds, closed forms, argmin k = 1, formula = oracle", failures)


def test_criterion_6_dual_ring():
    failures = []
    for g in range(1, 7):
        R = sp_dual_ring(g)
        if R.total_dim != 2**g:
            failures.append(f"g={g}: total {R.total_dim}")
        if len(vdg_basis(R)) != 2 ** (g - 1):
            failures.append(f"g={g}: basis size")
        if matsushima_kernel_sp(R).dim != 2 ** (g - 1):
            failures.append(f"g={g}: kernel dim")
        for d in range(R.top_weight + 1):
            if not is_invertible(R.pairing_matrix(d)):
                failures.append(f"g={g}: pairing in weight {d} degenerate")
        if not kernel_orthogonality_check(R):
            failures.append(f"g={g}: kernel != (u_g)^perp")
    record(6, "dual ring dims, basis, kernel, Gorenstein pairing, orthogonality for g <= 6", failures)


def test_criterion_7_sl_image():
    failures = []
    for n in range(2, 13):
        s = sl_image(n)
        if s.has_generator_degree(5) != (n >= 5):
            failures.append(f"n={n}: degree 5")
        if s.has_generator_degree(9) != (n >= 7):
            failures.append(f"n={n}: degree 9")
        if (not s.product_class((3, 5)).is_zero()) != (n >= 7):
            failures.append(f"n={n}: degree-14 product")
    record(7, "SL image degrees 5, 9 and the degree-14 product", failures)


def test_criterion_8_property_suites():
    import test_cli
    import test_exactalg
    import test_genera
    import test_k3family

    checks = {
        "genus multiplicativity": [test_genera.test_whitney_multiplicativity_l, test_genera.test_whitney_multiplicativity_random],
        "Newton oracle": [test_genera.test_newton_oracle_l, test_genera.test_newton_oracle_random_series],
        "fiber integration contracts": [test_k3family.test_fiber_integration_linear, test_k3family.test_push_pull_and_degree],
        "span_reduce idempotence": [test_exactalg.test_span_reduce_idempotent],
        "CLI determinism": [test_cli.test_byte_identical_across_processes],
    }
    failures = []
    for name, fns in checks.items():
        for fn in fns:
            try:
                fn()
            except Exception as exc:  # report, do not stop
                failures.append(f"{name}: {type(exc).__name__}")
    record(8, "property suites", failures)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

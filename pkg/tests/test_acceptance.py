"""Acceptance criteria, one test and one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or print the lines only with
``pytest tests/test_acceptance.py -q -s``. Some criteria fail because the
mathematical statement they encode is false; those failures are real and
each printed line carries a counterexample.
"""

import time

import mpmath
import pytest

from gaussabund import analytic, verify

pytestmark = pytest.mark.acceptance


def report(capsys, number, title, ok, detail):
    with capsys.disabled():
        print("\nACCEPTANCE %2d %s  %s: %s" % (number, "PASS" if ok else "FAIL", title, detail))
    assert ok, detail


def _suite_detail(rep, *keys):
    parts = ["%d/%d" % (rep.passed, rep.total)]
    parts += ["%s=%s" % (k, rep.info[k]) for k in keys if k in rep.info]
    if rep.failures:
        parts.append("e.g. %s" % (rep.failures[0],))
    return "; ".join(parts)


def test_01_oracle_equivalence(capsys):
    start = time.perf_counter()
    rep = verify.oracle_sigma(max_norm=2000, ks=(1, 2, 3))
    elapsed = time.perf_counter() - start
    ok = rep.ok and elapsed < 120
    report(capsys, 1, "sigma_k product formula == divisor sum", ok,
           "%s; %.1fs" % (_suite_detail(rep), elapsed))


def test_02_multiplicativity(capsys):
    rep = verify.multiplicativity(pairs=10_000, max_norm=10_000)
    report(capsys, 2, "I_k weakly multiplicative", rep.ok, _suite_detail(rep))


def test_03_divisor_monotonicity(capsys):
    rep = verify.monotonicity(samples=1000, max_norm=10_000, ks=(1, 2, 3))
    report(capsys, 3, "divisor monotonicity of ||I_k||", rep.ok, _suite_detail(rep, "pass_fail_by_k"))


def test_04_prime_power_certification(capsys):
    rep = verify.prime_power_solitary_suite(max_norm=100, max_n=5, ks=(1, 2, 3))
    report(capsys, 4, "prime powers pass the gcd criterion", rep.ok, _suite_detail(rep))


def test_05_conjugate_pair_certification(capsys):
    rep = verify.conjugate_pair_solitary(max_norm=100, max_n=3, ks=(1, 2))
    report(capsys, 5, "pi^n1 conj(pi)^n2 pass the gcd criterion", rep.ok, _suite_detail(rep))


def test_06_prime_power_bounds(capsys):
    rep = verify.prime_power_bounds(max_norm=200, max_n=6, ks=(1, 2, 3))
    report(capsys, 6, "prime-power bounds on ||I_k(pi^n)||", rep.ok,
           _suite_detail(rep, "lower_failures", "upper_failures"))


def test_07_lemma_predicates(capsys):
    rep = verify.lemma_inequalities(samples=10_000)
    ok = rep.ok and rep.info["m0_equality_ok"]
    report(capsys, 7, "|z^n - 1| inequalities", ok,
           _suite_detail(rep, "failures_per_lemma", "m0_equality"))


def test_08_analytic_values(capsys):
    rep = verify.analytic_values(precision=50)
    detail = "%s; zeta(2)=%s; beta(2)=%s; zeta_qi(2)=%s" % (
        _suite_detail(rep), rep.info["zeta(2)"], rep.info["beta(2)"], rep.info["zeta_qi(2)"]
    )
    report(capsys, 8, "zeta(2), zeta(3), beta(2) and the bound chain", rep.ok, detail)


def test_09_euler_product(capsys):
    start = time.perf_counter()
    full = analytic.dedekind_zeta_qi(2)
    partial = analytic.dedekind_zeta_euler_product(2, 10**6)
    elapsed = time.perf_counter() - start
    with mpmath.workdps(70):
        close = abs(partial - full.value) < mpmath.mpf("0.01")
        below = partial <= full.upper
    ok = close and below and elapsed < 60
    report(capsys, 9, "Euler product to norm 1e6 vs zeta(2) beta(2)", ok,
           "partial=%s full=%s within_1e-2=%s never_exceeds=%s; %.1fs"
           % (mpmath.nstr(partial, 12), mpmath.nstr(full.value, 12), close, below, elapsed))


def test_10_k2_desk_realization(capsys):
    rep = verify.bound_k2(max_norm=10_000, k=2)
    report(capsys, 10, "k=2 search: no perfect hits, max ||I_2|| < zeta_Q(i)(2)", rep.ok,
           _suite_detail(rep, "max_norm", "max_norm_float", "argmax", "zeta_qi_upper_float",
                         "count_above_zeta_qi"))


def test_11_norm_perfect_witness(capsys):
    rep = verify.norm_perfect_witness()
    report(capsys, 11, "norm-perfect witness 2+i at k=1, t=2", rep.ok,
           "%s; hits=%s" % (_suite_detail(rep), rep.info["hits"]))


def test_12_determinism(capsys):
    rep = verify.determinism(max_norm=5000)
    report(capsys, 12, "interrupted+resumed search is byte-identical", rep.ok,
           "%s; records=%s" % (_suite_detail(rep), rep.info["records"]))

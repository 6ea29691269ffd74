"""Named invariant suites, runnable from the CLI (``gaussabund verify NAME``)
and from the acceptance tests.

Every suite returns a :class:`SuiteReport` with pass/fail counts and a few
failing cases. Random suites take a seed and are reproducible.
"""

from __future__ import annotations

import os
import random
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable

import mpmath

from gaussabund import analytic
from gaussabund.divfunc import abundancy, divisors, sigma_k, sigma_k_bruteforce
from gaussabund.gfactor import coprime
from gaussabund.gint import GaussianInt, GaussianRational, Unit, are_associates
from gaussabund.gprimes import primes_by_norm
from gaussabund.search import SearchTask, enumerate_canonical, records_to_jsonl, run_search, verify_record
from gaussabund.solitary import greening_check, prime_conjugate_pair_solitary

__all__ = ["SuiteReport", "SUITES", "run_suite"]

_MAX_EXAMPLES = 10


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.total > 0

    def check(self, condition: bool, case) -> None:
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < _MAX_EXAMPLES:
                self.failures.append(case)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "passed": self.passed,
            "failed": self.failed,
            "total": self.total,
            "failures": [str(f) for f in self.failures],
            "info": {k: str(v) if isinstance(v, Fraction) else v for k, v in self.info.items()},
        }

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return "%s %s: %d/%d passed" % (status, self.name, self.passed, self.total)


def _random_gaussian(rng: random.Random, max_norm: int) -> GaussianInt:
    r = isqrt(max_norm)
    while True:
        z = GaussianInt(rng.randint(-r, r), rng.randint(-r, r))
        if 0 < z.norm() <= max_norm:
            return z


def oracle_sigma(max_norm: int = 2000, ks=(1, 2, 3)) -> SuiteReport:
    rep = SuiteReport("oracle-sigma")
    for z in enumerate_canonical(1, max_norm):
        for k in ks:
            rep.check(sigma_k(z, k) == sigma_k_bruteforce(z, k), (str(z), k))
    return rep


def multiplicativity(pairs: int = 10_000, max_norm: int = 10_000, ks=(1, 2, 3), seed: int = 1) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("multiplicativity")
    while rep.total < pairs:
        a = _random_gaussian(rng, max_norm)
        b = _random_gaussian(rng, max_norm)
        if not coprime(a, b):
            continue
        k = rng.choice(ks)
        same = abundancy(a * b, k) == abundancy(a, k) * abundancy(b, k)
        same = same and sigma_k(a * b, k) == sigma_k(a, k) * sigma_k(b, k)
        rep.check(same, (str(a), str(b), k))
    return rep


def monotonicity(samples: int = 1000, max_norm: int = 10_000, ks=(1, 2, 3), seed: int = 2) -> SuiteReport:
    """beta | alpha implies ||I_k(beta)|| <= ||I_k(alpha)||, equality iff associates."""
    rng = random.Random(seed)
    rep = SuiteReport("monotonicity")
    per_k = {k: [0, 0] for k in ks}
    while rep.total < samples:
        alpha = _random_gaussian(rng, max_norm)
        beta = Unit(rng.randrange(4)) * rng.choice(divisors(alpha))
        k = rng.choice(ks)
        na = abundancy(alpha, k).norm()
        nb = abundancy(beta, k).norm()
        ok = nb == na if are_associates(alpha, beta) else nb < na
        rep.check(ok, (str(beta), str(alpha), k, str(nb), str(na)))
        per_k[k][0 if ok else 1] += 1
    rep.info["pass_fail_by_k"] = {str(k): v for k, v in per_k.items()}
    return rep


def _abs_bound_holds(x: Fraction, m: int) -> bool:
    """sqrt(x) < sqrt(m) / (sqrt(m) - 1), decided exactly for rational x and integer m > 1."""
    # (m + 1) x - m < 2 x sqrt(m)
    lhs = (m + 1) * x - m
    if lhs < 0:
        return True
    return lhs * lhs < 4 * x * x * m


def prime_power_bounds(max_norm: int = 200, max_n: int = 6, ks=(1, 2, 3)) -> SuiteReport:
    """|(p^k+1)/p^k| <= |I_k(p^n)| < |p|^k / (|p|^k - 1), both sides squared."""
    rep = SuiteReport("prime-power-bounds")
    lower_fail = upper_fail = 0
    for p in primes_by_norm(max_norm):
        for n in range(1, max_n + 1):
            for k in ks:
                value = abundancy(p**n, k).norm()
                lower = GaussianRational.quotient(p**k + 1, p**k).norm()
                lower_ok = lower <= value
                upper_ok = _abs_bound_holds(value, p.norm() ** k)
                lower_fail += not lower_ok
                upper_fail += not upper_ok
                rep.check(lower_ok and upper_ok, (str(p), n, k, "lower" if not lower_ok else "upper"))
    rep.info["lower_failures"] = lower_fail
    rep.info["upper_failures"] = upper_fail
    return rep


def lemma_inequalities(
    samples: int = 10_000, max_part: int = 30, max_n: int = 10, seed: int = 3
) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("lemma-inequalities")
    per_lemma = [0, 0, 0]
    while rep.total < samples:
        z = GaussianInt(rng.randint(1, max_part), rng.randint(-max_part, max_part))
        if z.norm() <= 1:
            continue
        n = rng.randint(1, max_n)
        m = rng.randint(0, n)
        result = tuple(analytic.lemma_inequality_check(z, n, m))
        for i, r in enumerate(result):
            per_lemma[i] += not r
        rep.check(all(result), (str(z), n, m, result))
    eq = SuiteReport("m0")
    for z in (GaussianInt(a, b) for a in range(1, 8) for b in range(-7, 8)):
        if z.norm() > 1:
            for n in range(1, 8):
                eq.check(analytic.lemma_inequality_check(z, n, 0).shift_by_m, (str(z), n))
    rep.info["failures_per_lemma"] = per_lemma
    rep.info["m0_equality"] = "%d/%d" % (eq.passed, eq.total)
    rep.info["m0_equality_ok"] = eq.ok
    return rep


def prime_power_solitary_suite(max_norm: int = 100, max_n: int = 5, ks=(1, 2, 3)) -> SuiteReport:
    rep = SuiteReport("prime-power-solitary")
    for p in primes_by_norm(max_norm):
        for n in range(1, max_n + 1):
            for k in ks:
                rep.check(greening_check(p**n, k).certified, (str(p), n, k))
    return rep


def conjugate_pair_solitary(max_norm: int = 100, max_n: int = 3, ks=(1, 2)) -> SuiteReport:
    rep = SuiteReport("conjugate-pair-solitary")
    for p in primes_by_norm(max_norm):
        if p.im == 0 or p.norm() == 2:
            continue
        for n1 in range(1, max_n + 1):
            for n2 in range(1, max_n + 1):
                for k in ks:
                    cert = prime_conjugate_pair_solitary(p, n1, n2, k)
                    rep.check(cert.certified, (str(p), n1, n2, k, "gcd=%s" % cert.gcd_value))
    return rep


def greening_soundness(max_norm: int = 300, search_norm: int = 3000, ks=(1, 2)) -> SuiteReport:
    """Certified eta of norm <= max_norm has no non-associate friend of norm <= search_norm."""
    rep = SuiteReport("greening-soundness")
    for k in ks:
        groups: dict = {}
        for z in enumerate_canonical(1, search_norm):
            groups.setdefault(abundancy(z, k), []).append(z)
        for z in enumerate_canonical(2, max_norm):
            if greening_check(z, k).certified:
                friends = [w for w in groups[abundancy(z, k)] if w != z]
                rep.check(not friends, (str(z), k, [str(w) for w in friends[:3]]))
    return rep


def analytic_values(precision: int = 50) -> SuiteReport:
    rep = SuiteReport("analytic-values")
    with mpmath.workdps(precision + 20):
        z2 = analytic.zeta(2, precision)
        z3 = analytic.zeta(3, precision)
        b2 = analytic.beta(2, precision)
        q2 = analytic.dedekind_zeta_qi(2, precision)
        rep.check(mpmath.nstr(z3.value, 6) == "1.20206", ("zeta(3)", mpmath.nstr(z3.value, 10)))
        rep.check(abs(z2.value - mpmath.pi**2 / 6) < mpmath.mpf(10) ** -10, "zeta(2) vs pi^2/6")
        rep.check(b2.upper < 1, "beta(2) < 1")
        rep.check(q2.upper < 2, "zeta(2) beta(2) < 2")
        sq = mpmath.fmul(z3.upper, z3.upper, exact=True)
        rep.check(sq < 2, "zeta(3)^2 < 2")
        rep.info["zeta(2)"] = str(z2)
        rep.info["zeta(3)"] = str(z3)
        rep.info["beta(2)"] = str(b2)
        rep.info["zeta_qi(2)"] = str(q2)
    return rep


def euler_product(norm_limit: int = 10**6, s: int = 2) -> SuiteReport:
    rep = SuiteReport("euler-product")
    full = analytic.dedekind_zeta_qi(s)
    partial = analytic.dedekind_zeta_euler_product(s, norm_limit)
    with mpmath.workdps(70):
        rep.check(abs(partial - full.value) < mpmath.mpf("0.01"), "within 1e-2")
        rep.check(partial <= full.upper, "never exceeds")
        previous = mpmath.mpf(0)
        for limit in (2, 10, 100, 1000, 10_000):
            value = analytic.dedekind_zeta_euler_product(s, limit)
            rep.check(value >= previous, ("monotone", limit))
            previous = value
        rep.info["partial"] = mpmath.nstr(partial, 15)
        rep.info["full"] = mpmath.nstr(full.value, 15)
    return rep


def bound_k2(max_norm: int = 10_000, k: int = 2) -> SuiteReport:
    """Zero tau-/norm-perfect hits at k and max ||I_k|| below zeta_{Q(i)}(k)."""
    rep = SuiteReport("bound-k2")
    upper = analytic.zeta_qi_upper(k)
    tau = run_search(SearchTask("tau_perfect", k, 1, max_norm))
    norm = run_search(SearchTask("norm_perfect", k, 1, max_norm))
    rep.check(not tau.records, ("tau_perfect hits", [r["eta"] for r in tau.records]))
    rep.check(not norm.records, ("norm_perfect hits", [r["eta"] for r in norm.records]))
    rep.check(norm.max_norm < upper, ("max norm", str(norm.argmax), float(norm.max_norm)))
    over = sum(1 for z in enumerate_canonical(1, max_norm) if not abundancy(z, k).norm() < upper)
    rep.info["max_norm"] = norm.max_norm
    rep.info["max_norm_float"] = float(norm.max_norm)
    rep.info["argmax"] = str(norm.argmax)
    rep.info["zeta_qi_upper_float"] = float(upper)
    rep.info["count_above_zeta_qi"] = over
    rep.info["scanned"] = norm.scanned
    return rep


def norm_perfect_witness() -> SuiteReport:
    rep = SuiteReport("norm-perfect-witness")
    result = run_search(SearchTask("norm_perfect", 1, 1, 10, t=2))
    etas = [r["eta"] for r in result.records]
    rep.check("2+i" in etas, ("hits", etas))
    rep.check(abundancy(GaussianInt(2, 1), 1).norm() == 2, "||I_1(2+i)|| == 2")
    rep.check(all(verify_record(r) for r in result.records), "records re-verify")
    rep.info["hits"] = etas
    return rep


def determinism(max_norm: int = 5000, kind: str = "norm_perfect", k: int = 1) -> SuiteReport:
    rep = SuiteReport("determinism")
    task = SearchTask(kind, k, 1, max_norm)
    straight = records_to_jsonl(run_search(task).records)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "state.jsonl")
        first = run_search(task, path, max_blocks=2)
        rep.check(not first.complete, "first leg interrupted")
        # a torn write in the middle of the next block
        with open(path, "a", encoding="utf-8") as fh:
            fh.write('{"type":"record","eta":"1+')
        resumed = run_search(task, path)
        rep.check(resumed.complete, "resumed run complete")
        rep.check(records_to_jsonl(resumed.records) == straight, "byte-identical records")
        again = records_to_jsonl(run_search(task, path).records)
        rep.check(again == straight, "reload of finished state identical")
    rep.info["records"] = straight.count(b"\n")
    return rep


SUITES: dict[str, Callable[[], SuiteReport]] = {
    "oracle-sigma": oracle_sigma,
    "multiplicativity": multiplicativity,
    "monotonicity": monotonicity,
    "prime-power-bounds": prime_power_bounds,
    "lemma-inequalities": lemma_inequalities,
    "prime-power-solitary": prime_power_solitary_suite,
    "conjugate-pair-solitary": conjugate_pair_solitary,
    "greening-soundness": greening_soundness,
    "analytic-values": analytic_values,
    "euler-product": euler_product,
    "bound-k2": bound_k2,
    "norm-perfect-witness": norm_perfect_witness,
    "determinism": determinism,
}


def run_suite(name: str) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError("unknown suite %r; choose from %s" % (name, ", ".join(SUITES))) from None
    return suite()

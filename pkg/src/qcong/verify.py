"""Executable checks for the congruence, divisibility, and identity claims,
plus numeric explorers for the two open conjectures.

Theorem checkers return structured reports and always test both directions
of an if-and-only-if: a report passes when the observed congruence agrees
with the predicted equivalence.  Conjecture explorers never assert; they
report holds/fails per instance with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import FactoredPoly, cyclotomic, factor_one_plus_qd
from .divisors import big_d, big_p, q_bar, q_hat, q_tilde
from .perms import alternating_gf, salie_perm_gf
from .poly import IntPoly, ONE, one_plus_q_power, q_power
from .qbinom import gauss
from .residues import inject, root_power
from .sequences import (
    euler,
    gen_euler,
    salie,
    salie_bar,
    salie_hat,
    salie_tilde,
    tangent,
)


class PreconditionViolation(ValueError):
    """Checker called outside its parameter domain."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionViolation(message)


def _v2(x: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    return (x & -x).bit_length() - 1


# reports ---------------------------------------------------------------------


@dataclass
class CongruenceReport:
    check: str
    params: dict
    expected_equivalence: bool
    observed_congruence: bool
    witness: IntPoly

    @property
    def passed(self) -> bool:
        return self.expected_equivalence == self.observed_congruence

    def describe(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "PASS" if self.passed else f"FAIL witness={self.witness}"
        return (
            f"{self.check} {ps}: expected "
            f"{'congruent' if self.expected_equivalence else 'incongruent'}, "
            f"observed "
            f"{'congruent' if self.observed_congruence else 'incongruent'} -> {verdict}"
        )


@dataclass
class DivisibilityReport:
    check: str
    family: str
    index: int
    divisor: FactoredPoly
    passed: bool
    witness: IntPoly  # quotient when passed, remainder otherwise
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{self.check} {self.family} n={self.index}"
        if extra:
            head = f"{head} {extra}"
        if self.passed:
            return f"{head} divisor={self.divisor}: PASS"
        return f"{head} divisor={self.divisor}: FAIL remainder={self.witness}"


@dataclass
class IdentityReport:
    check: str
    params: dict
    passed: bool
    witness: IntPoly  # the difference of the two sides

    def describe(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        if self.passed:
            return f"{self.check} {ps}: PASS"
        return f"{self.check} {ps}: FAIL difference={self.witness}"


@dataclass
class ConjectureReport:
    conjecture: str
    params: dict
    holds: bool
    witness: object  # int or IntPoly

    @property
    def passed(self) -> bool:
        return self.holds

    def describe(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "holds" if self.holds else f"fails witness={self.witness}"
        return f"{self.conjecture} {ps}: {status}"


def summarize(reports) -> tuple[int, int, int]:
    """(checked, passed, failed) over a list of reports."""
    checked = len(reports)
    passed = sum(1 for r in reports if r.passed)
    return checked, passed, checked - passed


# congruence checkers -----------------------------------------------------------


def check_theorem1(m: int, n: int, d: int) -> CongruenceReport:
    """E_{2m} = q^(m-n) E_{2n} mod (1 + q^d) holds iff m = n mod d."""
    _require(m > n >= 0 and 1 <= d <= m, "need m > n >= 0 and 1 <= d <= m")
    remainder = (euler(m) - q_power(m - n) * euler(n)).rem_monic(one_plus_q_power(d))
    return CongruenceReport(
        check="theorem1",
        params={"m": m, "n": n, "d": d},
        expected_equivalence=(m - n) % d == 0,
        observed_congruence=remainder.is_zero(),
        witness=remainder,
    )


def check_lemma31(m: int, n: int, d: int) -> CongruenceReport:
    """Same congruence as theorem1 but modulo the single factor Phi_{2d}."""
    _require(m > n >= 0 and 1 <= d <= m, "need m > n >= 0 and 1 <= d <= m")
    remainder = (euler(m) - q_power(m - n) * euler(n)).rem_monic(cyclotomic(2 * d))
    return CongruenceReport(
        check="lemma31",
        params={"m": m, "n": n, "d": d},
        expected_equivalence=(m - n) % d == 0,
        observed_congruence=remainder.is_zero(),
        witness=remainder,
    )


def check_desarmenien(k: int, m: int, n: int) -> CongruenceReport:
    """E_{2km+2n} = (-1)^m E_{2n} mod Phi_{2k}; always congruent."""
    _require(k >= 1 and m >= 0 and n >= 0, "need k >= 1 and m, n >= 0")
    remainder = (euler(k * m + n) - (-1) ** m * euler(n)).rem_monic(cyclotomic(2 * k))
    return CongruenceReport(
        check="desarmenien",
        params={"k": k, "m": m, "n": n},
        expected_equivalence=True,
        observed_congruence=remainder.is_zero(),
        witness=remainder,
    )


def check_corollary1(m: int, n: int) -> DivisibilityReport:
    """E_{2m} - q^(m-n) E_{2n} is divisible by prod_{i<s} (1 + q^(2^i r)),
    where 2m - 2n = 2^s r with r odd."""
    _require(m > n >= 0, "need m > n >= 0")
    total = 2 * (m - n)
    s = _v2(total)
    r = total >> s
    modulus = FactoredPoly()
    for i in range(s):
        modulus = modulus * factor_one_plus_qd((1 << i) * r)
    diff = euler(m) - q_power(m - n) * euler(n)
    ok, witness = modulus.divides(diff)
    return DivisibilityReport(
        check="corollary1",
        family="euler",
        index=m,
        divisor=modulus,
        passed=ok,
        witness=witness,
        params={"m": m, "n": n},
    )


def check_theorem51(k: int, m: int, n: int, d: int) -> CongruenceReport:
    """In Z[q]/Phi_{2kd}, with z the class of q (a primitive 2kd-th root):
    E^(k)_{km}(z^2) = z^(k(m-n)) E^(k)_{kn}(z^2) iff m = n mod d."""
    _require(
        k >= 1 and m > n >= 0 and 1 <= d <= m,
        "need k >= 1, m > n >= 0 and 1 <= d <= m",
    )
    ring = 2 * k * d
    lhs = inject(gen_euler(k, m).substitute_power(2), ring)
    rhs = root_power(ring, k * (m - n)) * inject(
        gen_euler(k, n).substitute_power(2), ring
    )
    diff = lhs - rhs
    return CongruenceReport(
        check="theorem51",
        params={"k": k, "m": m, "n": n, "d": d},
        expected_equivalence=(m - n) % d == 0,
        observed_congruence=diff.is_zero(),
        witness=diff.rep,
    )


def check_theorem52(k: int, m: int, n: int, d: int) -> CongruenceReport:
    """For the family E^(2^k): congruence mod 1 + q^(2^(k-1) d) iff m = n mod d."""
    _require(
        k >= 1 and m > n >= 0 and 1 <= d <= m,
        "need k >= 1, m > n >= 0 and 1 <= d <= m",
    )
    fam = 1 << k
    half = 1 << (k - 1)
    value = gen_euler(fam, m) - q_power(half * (m - n)) * gen_euler(fam, n)
    remainder = value.rem_monic(one_plus_q_power(half * d))
    return CongruenceReport(
        check="theorem52",
        params={"k": k, "m": m, "n": n, "d": d},
        expected_equivalence=(m - n) % d == 0,
        observed_congruence=remainder.is_zero(),
        witness=remainder,
    )


# divisibility checkers -----------------------------------------------------------


def check_theorem2(n: int) -> DivisibilityReport:
    """P_n divides the q-Salie number S_{2n}."""
    _require(n >= 1, "need n >= 1")
    divisor = big_p(n)
    ok, witness = divisor.divides(salie(n))
    return DivisibilityReport(
        check="theorem2",
        family="salie",
        index=n,
        divisor=divisor,
        passed=ok,
        witness=witness,
    )


def check_theorem2_power(n: int, r: int) -> DivisibilityReport:
    """(1 + q^(2r+1))^floor(n/(2r+1)) divides S_{2n}."""
    _require(n >= 1 and r >= 0 and 2 * r + 1 <= n, "need 2r+1 <= n")
    divisor = factor_one_plus_qd(2 * r + 1) ** (n // (2 * r + 1))
    ok, witness = divisor.divides(salie(n))
    return DivisibilityReport(
        check="theorem2-power",
        family="salie",
        index=n,
        divisor=divisor,
        passed=ok,
        witness=witness,
        params={"r": r},
    )


def check_foata(n: int) -> DivisibilityReport:
    """D_n divides the q-tangent number T_{2n+1}."""
    _require(n >= 1, "need n >= 1")
    divisor = big_d(n)
    ok, witness = divisor.divides(tangent(n))
    return DivisibilityReport(
        check="foata",
        family="tangent",
        index=n,
        divisor=divisor,
        passed=ok,
        witness=witness,
    )


def check_salie_unit_power(n: int) -> DivisibilityReport:
    """(1 + q)^n divides S_{2n}."""
    _require(n >= 1, "need n >= 1")
    divisor = FactoredPoly({2: n})
    ok, witness = divisor.divides(salie(n))
    return DivisibilityReport(
        check="salie-unit-power",
        family="salie",
        index=n,
        divisor=divisor,
        passed=ok,
        witness=witness,
    )


# identity checkers ------------------------------------------------------------


def check_lemma41(n: int) -> IdentityReport:
    """sum_k (-1)^k q^k [2n,2k] S_{2k} S_{2n-2k} = T_{2n-1} (1 - q^{2n})."""
    _require(n >= 1, "need n >= 1")
    lhs = IntPoly()
    for k in range(n + 1):
        term = gauss(2 * n, 2 * k) * salie(k) * salie(n - k)
        lhs = lhs + (-1) ** k * q_power(k) * term
    rhs = tangent(n - 1) * (ONE - q_power(2 * n))
    diff = lhs - rhs
    return IdentityReport("lemma41", {"n": n}, diff.is_zero(), diff)


def check_eq23(n: int) -> IdentityReport:
    """Sbar_{2n} = sum_k (-1)^k [2n,2k] E_{2k}."""
    _require(n >= 0, "need n >= 0")
    rhs = IntPoly()
    for k in range(n + 1):
        rhs = rhs + (-1) ** k * gauss(2 * n, 2 * k) * euler(k)
    diff = salie_bar(n) - rhs
    return IdentityReport("eq23", {"n": n}, diff.is_zero(), diff)


def check_eq24(n: int) -> IdentityReport:
    """sum_k (-1)^k q^{2k} [2n,2k] Shat_{2k} Shat_{2n-2k}
    = T_{2n-1} (1 + q)(1 - q^{2n}), valid for n >= 2."""
    _require(n >= 2, "need n >= 2")
    lhs = IntPoly()
    for k in range(n + 1):
        term = gauss(2 * n, 2 * k) * salie_hat(k) * salie_hat(n - k)
        lhs = lhs + (-1) ** k * q_power(2 * k) * term
    rhs = tangent(n - 1) * (ONE + q_power(1)) * (ONE - q_power(2 * n))
    diff = lhs - rhs
    return IdentityReport("eq24", {"n": n}, diff.is_zero(), diff)


def check_perm_euler(n: int) -> IdentityReport:
    """The alternating-permutation inversion gf equals (-1)^n E_{2n}."""
    diff = alternating_gf(n, max_n=6) - (-1) ** n * euler(n)
    return IdentityReport("perm-euler", {"n": n}, diff.is_zero(), diff)


def check_perm_salie(n: int) -> IdentityReport:
    """Twice the Salie-permutation inversion gf equals Sbar_{2n}."""
    diff = 2 * salie_perm_gf(n) - salie_bar(n)
    return IdentityReport("perm-salie", {"n": n}, diff.is_zero(), diff)


# integer congruences at q = 1 -----------------------------------------------------


def check_corollary52_and_stern(k: int, m: int, n: int) -> ConjectureReport:
    """At q = 1, the E^(2^k) family satisfies a - b = 0 mod 2^s with
    s = v2(m-n) + 1; for k = 1 the congruence is 2-adically exact (Stern)."""
    _require(k >= 1 and m > n >= 0, "need k >= 1 and m > n >= 0")
    fam = 1 << k
    a = gen_euler(fam, m).eval_int(1)
    b = gen_euler(fam, n).eval_int(1)
    s = _v2(m - n) + 1
    diff = a - b
    holds = diff % (1 << s) == 0
    if k == 1:
        holds = holds and diff % (1 << (s + 1)) != 0
    return ConjectureReport(
        "corollary52",
        {"k": k, "m": m, "n": n, "s": s},
        holds,
        witness=diff,
    )


def check_stern(m: int, n: int) -> ConjectureReport:
    """Both directions of Stern's congruence at q = 1:
    v2(E_{2m}(1) - E_{2n}(1)) equals v2(2m - 2n) exactly."""
    _require(m > n >= 0, "need m > n >= 0")
    a = euler(m).eval_int(1)
    b = euler(n).eval_int(1)
    target = _v2(2 * (m - n))
    actual = _v2(a - b) if a != b else -1
    return ConjectureReport(
        "stern",
        {"m": m, "n": n, "s": target},
        actual == target,
        witness=actual,
    )


# conjecture explorers -------------------------------------------------------------


def explore_conjecture51(k_max: int, m_max: int) -> list[ConjectureReport]:
    """E^(2^k)_{2^k m}(1) = E^(2^k)_{2^k n}(1) + 2^s mod 2^(s+1),
    s = v2(m-n) + 1; reported per instance, never asserted."""
    _require(k_max >= 1 and m_max >= 1, "bounds must be >= 1")
    reports = []
    for k in range(1, k_max + 1):
        fam = 1 << k
        values = [gen_euler(fam, i).eval_int(1) for i in range(m_max + 1)]
        for m in range(1, m_max + 1):
            for n in range(m):
                s = _v2(m - n) + 1
                diff = values[m] - values[n]
                holds = (diff - (1 << s)) % (1 << (s + 1)) == 0
                reports.append(
                    ConjectureReport(
                        "conj51",
                        {"k": k, "m": m, "n": n, "s": s},
                        holds,
                        witness=diff % (1 << (s + 1)),
                    )
                )
    return reports


_VARIANTS = (
    ("bar", q_bar, salie_bar),
    ("hat", q_hat, salie_hat),
    ("tilde", q_tilde, salie_tilde),
)


def explore_conjecture61(n_max: int) -> list[ConjectureReport]:
    """Qbar_n | Sbar_{2n}, Qhat_n | Shat_{2n}, Qtilde_n | Stil_{2n};
    reported per instance, never asserted."""
    _require(n_max >= 1, "bound must be >= 1")
    reports = []
    for n in range(1, n_max + 1):
        for name, divisor_fn, value_fn in _VARIANTS:
            ok, witness = divisor_fn(n).divides(value_fn(n))
            reports.append(
                ConjectureReport(
                    "conj61", {"variant": name, "n": n}, ok, witness=witness
                )
            )
    return reports


# sweeps ---------------------------------------------------------------------------


def _iter_mnd(m_max: int, d_max: int | None):
    for m in range(1, m_max + 1):
        top_d = m if d_max is None else min(m, d_max)
        for n in range(m):
            for d in range(1, top_d + 1):
                yield m, n, d


def sweep_theorem1(m_max: int = 12, d_max: int | None = None):
    return [check_theorem1(m, n, d) for m, n, d in _iter_mnd(m_max, d_max)]


def sweep_lemma31(m_max: int = 12, d_max: int | None = None):
    return [check_lemma31(m, n, d) for m, n, d in _iter_mnd(m_max, d_max)]


def sweep_corollary1(m_max: int = 10):
    return [
        check_corollary1(m, n) for m in range(1, m_max + 1) for n in range(m)
    ]


def sweep_desarmenien(k_max: int = 4, total_max: int = 10):
    reports = []
    for k in range(1, k_max + 1):
        for m in range(total_max // k + 1):
            for n in range(total_max - k * m + 1):
                reports.append(check_desarmenien(k, m, n))
    return reports


def sweep_theorem2(n_max: int = 15):
    reports = []
    for n in range(1, n_max + 1):
        reports.append(check_theorem2(n))
        for r in range((n + 1) // 2):
            reports.append(check_theorem2_power(n, r))
    return reports


def sweep_theorem51(k_max: int = 3, m_max: int = 6, d_max: int | None = None):
    return [
        check_theorem51(k, m, n, d)
        for k in range(1, k_max + 1)
        for m, n, d in _iter_mnd(m_max, d_max)
    ]


def sweep_theorem52(k_max: int = 2, m_max: int = 8, d_max: int | None = None):
    return [
        check_theorem52(k, m, n, d)
        for k in range(1, k_max + 1)
        for m, n, d in _iter_mnd(m_max, d_max)
    ]


def sweep_corollary52(k_max: int = 2, m_max: int = 8):
    return [
        check_corollary52_and_stern(k, m, n)
        for k in range(1, k_max + 1)
        for m in range(1, m_max + 1)
        for n in range(m)
    ]


def sweep_stern(m_max: int = 10):
    return [check_stern(m, n) for m in range(1, m_max + 1) for n in range(m)]


def sweep_lemma41(n_max: int = 15):
    return [check_lemma41(n) for n in range(1, n_max + 1)]


def sweep_eq23(n_max: int = 15):
    return [check_eq23(n) for n in range(n_max + 1)]


def sweep_eq24(n_max: int = 15):
    return [check_eq24(n) for n in range(2, n_max + 1)]


def sweep_foata(n_max: int = 15):
    reports = []
    for n in range(1, n_max + 1):
        reports.append(check_foata(n))
        reports.append(check_salie_unit_power(n))
    return reports


def sweep_perm_euler(n_max: int = 3):
    return [check_perm_euler(n) for n in range(1, n_max + 1)]


def sweep_perm_salie(n_max: int = 3):
    return [check_perm_salie(n) for n in range(1, n_max + 1)]

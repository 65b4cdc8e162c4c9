"""Theorem checkers: hand-verified instances, reduced sweeps, consistency
between independent code paths, and the pinned k=1 anomaly of the
root-of-unity congruence family."""

import pytest

from qcong import verify as v
from qcong.poly import IntPoly, ONE
from qcong.sequences import euler


def poly(*coeffs):
    return IntPoly(coeffs)


def all_pass(reports):
    bad = [r.describe() for r in reports if not r.passed]
    assert not bad, f"{len(bad)} failing: {bad[:4]}"


# theorem 1 -------------------------------------------------------------------


def test_theorem1_examples():
    r = v.check_theorem1(2, 0, 2)
    assert r.expected_equivalence and r.observed_congruence and r.passed
    assert r.witness.is_zero()
    # the raw congruence behind the (m, n, d) = (1, 0, 2) case, which sits
    # outside the checker's domain d <= m: E_2 - q E_0 = -1 - q mod 1 + q^2
    from qcong.poly import one_plus_q_power, q_power

    remainder = (euler(1) - q_power(1) * euler(0)).rem_monic(one_plus_q_power(2))
    assert remainder == poly(-1, -1)


def test_theorem1_incongruent_case():
    # m=2, n=1, d=2: m-n odd, remainder must be nonzero
    r = v.check_theorem1(2, 1, 2)
    assert not r.expected_equivalence
    assert not r.observed_congruence
    assert r.passed
    assert not r.witness.is_zero()


def test_theorem1_d_one_always_congruent():
    for m in range(1, 8):
        for n in range(m):
            r = v.check_theorem1(m, n, 1)
            assert r.expected_equivalence and r.observed_congruence


def test_theorem1_sweep():
    all_pass(v.sweep_theorem1(10))


def test_theorem1_preconditions():
    with pytest.raises(v.PreconditionViolation):
        v.check_theorem1(1, 1, 1)
    with pytest.raises(v.PreconditionViolation):
        v.check_theorem1(2, 0, 3)
    with pytest.raises(v.PreconditionViolation):
        v.check_theorem1(2, 0, 0)


# lemma 3.1 and Desarmenien ----------------------------------------------------


def test_lemma31_examples():
    assert v.check_lemma31(2, 0, 2).passed
    r = v.check_lemma31(1, 0, 1)
    assert r.expected_equivalence and r.observed_congruence
    assert v.check_lemma31(3, 1, 2).observed_congruence


def test_lemma31_sweep():
    all_pass(v.sweep_lemma31(10))


def test_desarmenien_examples():
    assert v.check_desarmenien(1, 1, 0).passed
    assert v.check_desarmenien(2, 1, 1).passed
    assert v.check_desarmenien(3, 2, 0).passed


def test_desarmenien_sweep():
    all_pass(v.sweep_desarmenien(4, 10))


# corollary 1.1 ----------------------------------------------------------------


def test_corollary1_modulus_structure():
    # m=3, n=1: 2m-2n = 4 = 2^2, modulus (1+q)(1+q^2)
    r = v.check_corollary1(3, 1)
    assert r.divisor.factors == {2: 1, 4: 1}
    assert r.passed
    r = v.check_corollary1(1, 0)
    assert r.divisor.factors == {2: 1}
    assert r.passed


def test_corollary1_sweep():
    all_pass(v.sweep_corollary1(9))


# theorem 1.2 -----------------------------------------------------------------


def test_theorem2_examples():
    r = v.check_theorem2(1)
    assert r.passed and r.witness == ONE
    r = v.check_theorem2(2)
    assert r.passed and r.witness == poly(0, 2, 0, 1)
    assert v.check_theorem2(4).passed


def test_theorem2_sweep():
    all_pass(v.sweep_theorem2(10))


def test_theorem2_power_preconditions():
    with pytest.raises(v.PreconditionViolation):
        v.check_theorem2_power(3, 2)


# identities -------------------------------------------------------------------


def test_lemma41_n1():
    r = v.check_lemma41(1)
    assert r.passed and r.witness.is_zero()


def test_identity_sweeps():
    all_pass(v.sweep_lemma41(10))
    all_pass(v.sweep_eq23(10))
    all_pass(v.sweep_eq24(10))


def test_eq24_excludes_n1():
    with pytest.raises(v.PreconditionViolation):
        v.check_eq24(1)
    # and indeed the identity genuinely fails at n=1: that is why the
    # correction term exists
    from qcong.poly import q_power
    from qcong.qbinom import gauss
    from qcong.sequences import salie_hat, tangent

    lhs = IntPoly()
    for k in range(2):
        lhs = lhs + (-1) ** k * q_power(2 * k) * gauss(2, 2 * k) * salie_hat(
            k
        ) * salie_hat(1 - k)
    rhs = tangent(0) * poly(1, 1) * (ONE - q_power(2))
    assert lhs != rhs


def test_foata_sweep():
    all_pass(v.sweep_foata(10))


def test_perm_sweeps():
    all_pass(v.sweep_perm_euler(3))
    all_pass(v.sweep_perm_salie(3))


# root-of-unity congruences (theorem 5.1) ----------------------------------------


def test_theorem51_spec_examples():
    assert v.check_theorem51(1, 2, 1, 1).passed  # d=1: always congruent
    assert v.check_theorem51(3, 2, 0, 2).passed
    assert v.check_theorem51(3, 2, 0, 2).observed_congruence


def test_theorem51_k2_k3_sweep():
    reports = [r for r in v.sweep_theorem51(3, 6) if r.params["k"] >= 2]
    all_pass(reports)


def test_theorem51_k2_matches_lemma31():
    for m in range(1, 7):
        for n in range(m):
            for d in range(1, m + 1):
                a = v.check_theorem51(2, m, n, d)
                b = v.check_lemma31(m, n, d)
                assert a.observed_congruence == b.observed_congruence


def test_theorem51_k1_sufficiency_holds():
    for m in range(1, 9):
        for n in range(m):
            for d in range(1, m + 1):
                r = v.check_theorem51(1, m, n, d)
                if r.expected_equivalence:
                    assert r.observed_congruence


def test_theorem51_k1_known_anomaly():
    # For k=1 the family degenerates to E_n = (-1)^n q^(n(n-1)/2), and the
    # root-of-unity equality holds iff (m-n)(m+n+d-2) = 0 mod 2d, which is
    # weaker than d | m-n.  The printed iff therefore fails; pin both the
    # smallest counterexample and the exact law.
    r = v.check_theorem51(1, 3, 2, 3)
    assert r.observed_congruence and not r.expected_equivalence and not r.passed
    for m in range(1, 9):
        for n in range(m):
            for d in range(1, m + 1):
                law = (m - n) * (m + n + d - 2) % (2 * d) == 0
                assert v.check_theorem51(1, m, n, d).observed_congruence == law


# theorem 5.2 and the q=1 corollaries ----------------------------------------------


def test_theorem52_examples():
    assert v.check_theorem52(2, 2, 0, 2).passed
    r = v.check_theorem52(2, 2, 1, 2)
    assert not r.expected_equivalence and not r.observed_congruence and r.passed
    assert not r.witness.is_zero()


def test_theorem52_k1_matches_theorem1():
    for m in range(1, 9):
        for n in range(m):
            for d in range(1, m + 1):
                a = v.check_theorem52(1, m, n, d)
                b = v.check_theorem1(m, n, d)
                assert a.observed_congruence == b.observed_congruence
                assert a.passed and b.passed


def test_theorem52_sweep():
    all_pass(v.sweep_theorem52(2, 6))


def test_corollary52_examples():
    assert v.check_corollary52_and_stern(1, 1, 0).holds
    r = v.check_corollary52_and_stern(1, 3, 1)
    assert r.holds and r.params["s"] == 2 and r.witness == -60
    assert v.check_corollary52_and_stern(2, 2, 1).holds


def test_corollary52_sweep():
    all_pass(v.sweep_corollary52(2, 7))


def test_stern_sweep():
    all_pass(v.sweep_stern(9))
    r = v.check_stern(3, 1)
    assert r.holds and r.params["s"] == 2


# conjecture explorers ----------------------------------------------------------


def test_conjecture51_small():
    reports = v.explore_conjecture51(2, 6)
    assert all(r.holds for r in reports)
    k1 = [r for r in reports if r.params["k"] == 1]
    assert k1 and all(r.holds for r in k1)


def test_conjecture51_first_instance():
    r = v.explore_conjecture51(1, 1)[0]
    assert r.params == {"k": 1, "m": 1, "n": 0, "s": 1}
    assert r.holds  # E_2 - E_0 = -2 = 2 mod 4


def test_conjecture61_small():
    reports = v.explore_conjecture61(8)
    assert all(r.holds for r in reports)
    variants = {r.params["variant"] for r in reports}
    assert variants == {"bar", "hat", "tilde"}


def test_explorer_reports_do_not_raise():
    # explorers report rather than assert: holds is a plain field
    r = v.explore_conjecture61(2)[0]
    assert isinstance(r.holds, bool)
    assert r.passed == r.holds


# report plumbing ----------------------------------------------------------------


def test_congruence_report_pass_logic():
    r = v.CongruenceReport("x", {"m": 1}, True, False, ONE)
    assert not r.passed
    assert "FAIL" in r.describe()
    r = v.CongruenceReport("x", {"m": 1}, False, False, poly(1, 1))
    assert r.passed


def test_summarize():
    reports = v.sweep_theorem1(4)
    checked, passed, failed = v.summarize(reports)
    assert checked == len(reports) and passed == checked and failed == 0


def test_describe_strings():
    assert "PASS" in v.check_theorem1(2, 0, 2).describe()
    assert "holds" in v.explore_conjecture61(1)[0].describe()
    assert "PASS" in v.check_theorem2(1).describe()
    assert "PASS" in v.check_lemma41(1).describe()


def test_v2():
    assert v._v2(8) == 3
    assert v._v2(12) == 2
    assert v._v2(-4) == 2
    with pytest.raises(ValueError):
        v._v2(0)


def test_euler_memo_shared_with_checkers():
    # the checker and the raw sequence must agree on the same cache
    r = v.check_theorem1(3, 1, 2)
    assert r.observed_congruence == (
        (euler(3) - poly(0, 0, 1) * euler(1))
        .rem_monic(poly(1, 0, 1))
        .is_zero()
    )

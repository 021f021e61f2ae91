"""Error formulas, their oracle agreement, and the bound chains."""

import math
import warnings

import numpy as np
import pytest

from latticeqmc.errors import DomainError, GuardError
from latticeqmc.kernels import KernelSpec
from latticeqmc.lattice import LatticeRule, dual_projected, rank1_points, symmetrize, tent_transform
from latticeqmc.weights import WeightScheme
from latticeqmc.worst_case_error import (
    C_PRIME,
    ErrorReport,
    corollary_bound,
    sym_modified_weights,
    tent_modified_weights,
    wce_sq_korobov_lattice,
    wce_sq_quadratic_form,
    wce_sym_bound,
    wce_sym_exact,
    wce_sym_middle_term,
    wce_tent_bound,
    wce_tent_middle_term,
)


def random_rule(rng, N, s) -> LatticeRule:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return LatticeRule(N=N, z=tuple(int(v) for v in rng.integers(1, N, size=s)))


GOLDEN = math.pi**2 / 12.0  # N=2, z=(1), alpha=1, gamma=1


def test_golden_value_both_paths():
    rule = LatticeRule(N=2, z=(1,))
    w = WeightScheme.product([1.0])
    closed = wce_sq_korobov_lattice(1, w, rule)
    assert closed.value == pytest.approx(GOLDEN, abs=1e-13)
    quad = wce_sq_quadratic_form(KernelSpec(family="korobov", alpha=1, weights=w),
                                 rank1_points(rule))
    assert quad.value == pytest.approx(GOLDEN, abs=1e-13)


def test_zero_weights_give_zero_everywhere():
    rule = LatticeRule(N=5, z=(1, 2))
    w0 = WeightScheme.product([0.0, 0.0])
    assert wce_sq_korobov_lattice(1, w0, rule).value == 0.0
    assert wce_tent_bound(w0, rule).value == 0.0
    assert wce_sym_bound(2, w0, rule).value == 0.0
    assert wce_sym_exact(2, w0, rule).value == 0.0
    mid = wce_tent_middle_term(w0, rule, kmax=100)
    assert mid.value == 0.0 and mid.tail_estimate == 0.0
    assert corollary_bound("tent", w0, 5, 1.0).value == 0.0


def test_korobov_vs_quadratic_form_sweep():
    rng = np.random.default_rng(101)
    for N in (2, 3, 5, 7, 13):
        for s in (1, 2, 3):
            for _ in range(3):
                rule = random_rule(rng, N, s)
                w = WeightScheme.product(rng.random(s))
                for alpha in (1, 2, 3):
                    a = wce_sq_korobov_lattice(alpha, w, rule).value
                    spec = KernelSpec(family="korobov", alpha=alpha, weights=w)
                    b = wce_sq_quadratic_form(spec, rank1_points(rule)).value
                    assert abs(a - b) <= 1e-11 * (1.0 + a)


def test_quadratic_form_refuses_series_kernels_and_large_sets():
    w = WeightScheme.product([1.0])
    with pytest.raises(DomainError):
        wce_sq_quadratic_form(KernelSpec(family="cosine", alpha=1.0, weights=w),
                              rank1_points(LatticeRule(N=4, z=(1,))))
    with pytest.raises(DomainError):
        wce_sq_quadratic_form(KernelSpec(family="korobov", alpha=1.5, weights=w),
                              rank1_points(LatticeRule(N=4, z=(1,))))


def test_modified_weight_values():
    w = WeightScheme.product([1.0])
    wp = tent_modified_weights(w)
    assert wp.gamma[0] == pytest.approx(58.0 / (12.0 * math.pi**4), rel=1e-15)
    w2 = WeightScheme.general(2, {frozenset({1, 2}): 1.0, frozenset({1}): 0.0})
    wp2 = tent_modified_weights(w2)
    assert wp2.weight_of([1, 2]) == pytest.approx((58.0 / (12.0 * math.pi**4)) ** 2, rel=1e-14)
    assert wp2.weight_of([1]) == 0.0
    ws = sym_modified_weights(2, w)
    assert ws.gamma[0] == pytest.approx(3.0 / (2**5 * math.pi**4), rel=1e-15)
    ws4 = sym_modified_weights(4, w)
    assert ws4.gamma[0] == pytest.approx(3.0 / (2**9 * math.pi**8), rel=1e-15)
    with pytest.raises(DomainError):
        sym_modified_weights(3, w)


def test_tent_bound_composition():
    rule = LatticeRule(N=2, z=(1,))
    w = WeightScheme.product([1.0])
    bound = wce_tent_bound(w, rule)
    gamma_p = 58.0 / (12.0 * math.pi**4)
    assert bound.value == pytest.approx((math.sqrt(gamma_p) * GOLDEN) ** 2, rel=1e-13)
    assert bound.kind == "theorem_bound"


def test_sym_bound_composition():
    rule = LatticeRule(N=2, z=(1,))
    w = WeightScheme.product([1.0])
    bound = wce_sym_bound(2, w, rule)
    gamma_pp = 3.0 / (2**5 * math.pi**4)
    assert bound.value == pytest.approx((math.sqrt(gamma_pp) * GOLDEN) ** 2, rel=1e-13)


def test_middle_term_closed_form_case():
    """s=1, N=2: the inner dual sum is zeta(2)/2 and the term gamma' (zeta(2)/2)^2."""
    rule = LatticeRule(N=2, z=(1,))
    w = WeightScheme.product([1.0])
    mid = wce_tent_middle_term(w, rule, kmax=10_000)
    gamma_p = 58.0 / (12.0 * math.pi**4)
    exact_inner = math.pi**2 / 12.0
    assert mid.value + mid.tail_estimate == pytest.approx(gamma_p * exact_inner**2, rel=1e-12)
    assert mid.value == pytest.approx(gamma_p * exact_inner**2, rel=1e-3)
    assert mid.value <= gamma_p * exact_inner**2
    assert mid.kind == "dual_series_truncated" and mid.truncation_kmax == 10_000


def test_middle_term_matches_brute_force_dual_enumeration():
    """Character-sum evaluation == explicit truncated dual scan (small kmax)."""
    rng = np.random.default_rng(33)
    for _ in range(5):
        s = int(rng.integers(1, 3))
        N = int(rng.integers(2, 12))
        rule = random_rule(rng, N, s)
        w = WeightScheme.product(rng.random(s))
        kmax = 24
        mid = wce_tent_middle_term(w, rule, kmax=kmax)
        gamma_p = tent_modified_weights(w)
        total = 0.0
        for mask in range(1, 1 << s):
            u = [j + 1 for j in range(s) if mask >> j & 1]
            inner = sum(
                np.prod([1.0 / kj**2 for kj in k]) for k in dual_projected(rule, u, kmax)
            )
            total += gamma_p.weight_of(u) * inner**2
        assert mid.value == pytest.approx(total, rel=1e-10, abs=1e-15)


def test_tent_error_bound_chain():
    rng = np.random.default_rng(55)
    for _ in range(15):
        s = int(rng.integers(1, 4))
        N = int(rng.integers(2, 65))
        rule = random_rule(rng, N, s)
        w = WeightScheme.product(rng.random(s))
        spec = KernelSpec(family="sobolev", alpha=2, weights=w)
        exact = wce_sq_quadratic_form(spec, tent_transform(rank1_points(rule))).value
        mid = wce_tent_middle_term(w, rule, kmax=2_000)
        bound = wce_tent_bound(w, rule).value
        middle = mid.value + mid.tail_estimate
        assert exact <= middle * (1 + 1e-11) + 1e-14
        assert middle <= bound * (1 + 1e-11) + 1e-14


def test_sym_error_bound_chain():
    rng = np.random.default_rng(66)
    for _ in range(10):
        s = int(rng.integers(1, 4))
        N = int(rng.integers(2, 65))
        rule = random_rule(rng, N, s)
        w = WeightScheme.product(rng.random(s))
        for alpha in (2, 4):
            exact = wce_sym_exact(alpha, w, rule).value
            mid = wce_sym_middle_term(alpha, w, rule, kmax=2_000)
            bound = wce_sym_bound(alpha, w, rule).value
            middle = mid.value + mid.tail_estimate
            assert exact <= middle * (1 + 1e-11) + 1e-14
            assert middle <= bound * (1 + 1e-11) + 1e-14


def test_sym_exact_equals_quadratic_form_on_multiset_at_alpha2():
    rng = np.random.default_rng(77)
    for _ in range(8):
        s = int(rng.integers(1, 3))
        N = int(rng.integers(2, 40))
        rule = random_rule(rng, N, s)
        w = WeightScheme.product(rng.random(s))
        via_reflections = wce_sym_exact(2, w, rule).value
        spec = KernelSpec(family="sobolev", alpha=2, weights=w)
        via_multiset = wce_sq_quadratic_form(spec, symmetrize(rank1_points(rule))).value
        assert abs(via_reflections - via_multiset) <= 1e-11 * (1.0 + via_multiset)


def test_corollary_bound_values_and_domains():
    w = WeightScheme.product([1.0])
    b = corollary_bound("tent", w, 5, 1.0)
    assert b.value == pytest.approx(math.sqrt(C_PRIME) / 24.0, rel=1e-13)
    assert b.lam == 1.0 and b.kind == "corollary_bound"
    bs = corollary_bound("sym", w, 5, 1.0, alpha=2)
    factor = math.sqrt(3.0) * (math.pi**2 / 6.0) / (2.0**1.5 * math.pi**2)
    assert bs.value == pytest.approx(factor / 4.0, rel=1e-13)
    with pytest.raises(DomainError):
        corollary_bound("tent", w, 6, 1.0)  # composite N
    with pytest.raises(DomainError):
        corollary_bound("tent", w, 5, 0.5)
    with pytest.raises(DomainError):
        corollary_bound("sym", w, 5, 0.4, alpha=2)
    with pytest.raises(DomainError):
        corollary_bound("sym", w, 5, 1.0, alpha=3)


def test_monotonicity_in_weights():
    rng = np.random.default_rng(88)
    rule = random_rule(rng, 17, 3)
    base = {frozenset({1}): 0.4, frozenset({2, 3}): 0.2, frozenset({1, 2, 3}): 0.1}
    w_lo = WeightScheme.general(3, base)
    bumped = dict(base)
    bumped[frozenset({2, 3})] = 0.5
    w_hi = WeightScheme.general(3, bumped)
    assert wce_sq_korobov_lattice(2, w_lo, rule).value <= wce_sq_korobov_lattice(2, w_hi, rule).value
    assert wce_tent_bound(w_lo, rule).value <= wce_tent_bound(w_hi, rule).value
    assert corollary_bound("tent", w_lo, 17, 0.8).value <= corollary_bound("tent", w_hi, 17, 0.8).value


def test_scale_equivariance_closed_form_path():
    """Scaling every general-form weight by a power of two scales the value
    bit-exactly; arbitrary positive factors scale it to rounding."""
    rng = np.random.default_rng(99)
    rule = random_rule(rng, 13, 2)
    subsets = {frozenset({1}): 0.3, frozenset({2}): 0.7, frozenset({1, 2}): 0.25}
    w = WeightScheme.general(2, subsets)
    base = wce_sq_korobov_lattice(1, w, rule).value
    w4 = WeightScheme.general(2, {u: 4.0 * g for u, g in subsets.items()})
    assert wce_sq_korobov_lattice(1, w4, rule).value == 4.0 * base
    c = 1.7
    wc = WeightScheme.general(2, {u: c * g for u, g in subsets.items()})
    assert wce_sq_korobov_lattice(1, wc, rule).value == pytest.approx(c * base, rel=1e-14)


def test_error_report_validation_and_json():
    with pytest.raises(DomainError):
        ErrorReport(value=-1.0, kind="theorem_bound")
    with pytest.raises(DomainError):
        ErrorReport(value=1.0, kind="theorem_bound", tail_estimate=0.1)
    rep = ErrorReport(value=0.25, kind="corollary_bound", lam=0.75)
    data = rep.to_dict()
    assert data["lambda"] == 0.75 and rep.root == 0.5
    rule = LatticeRule(N=3, z=(1,))
    rep = wce_tent_middle_term(WeightScheme.product([1.0]), rule, kmax=50)
    assert rep.to_dict()["tail_estimate"] is not None


def test_quadratic_form_guard():
    w = WeightScheme.product([1.0])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        big = LatticeRule(N=30_000, z=(7,))
    with pytest.raises(GuardError):
        wce_sq_quadratic_form(KernelSpec(family="korobov", alpha=1, weights=w),
                              rank1_points(big))

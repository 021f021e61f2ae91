"""Point-set generation, transforms, dual-lattice checks, character sums."""

import json

import numpy as np
import pytest

from latticeqmc.errors import DomainError, GuardError
from latticeqmc.lattice import (
    LatticeRule,
    character_sum,
    distinct_count,
    dual_projected,
    fibonacci_rule,
    is_dual,
    rank1_points,
    symmetrize,
    tent,
    tent_transform,
)


def random_rule(rng, N, s) -> LatticeRule:
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # random z may share factors with N
        return LatticeRule(N=N, z=tuple(int(v) for v in rng.integers(1, N, size=s)))


def random_unit_rule(rng, N, s) -> LatticeRule:
    """Generator entries coprime to N: the closed-form distinct counts of
    symmetrized sets presume every coordinate projection has N distinct values."""
    from math import gcd

    z = []
    while len(z) < s:
        c = int(rng.integers(1, N))
        if gcd(c, N) == 1:
            z.append(c)
    return LatticeRule(N=N, z=tuple(z))


def test_rank1_small_sets():
    ps = rank1_points(LatticeRule(N=2, z=(1,)))
    np.testing.assert_array_equal(ps.points.ravel(), [0.0, 0.5])
    ps = rank1_points(LatticeRule(N=5, z=(1, 2)))
    expected = [(0.0, 0.0), (0.2, 0.4), (0.4, 0.8), (0.6, 0.2), (0.8, 0.6)]
    np.testing.assert_allclose(ps.points, expected, atol=1e-16)


def test_rank1_modular_enumeration():
    rule = LatticeRule(N=13, z=(1, 8))
    ps = rank1_points(rule)
    assert len(ps) == 13
    for n in range(13):
        assert ps.numerators[n, 0] == n
        assert ps.numerators[n, 1] == n * 8 % 13
    # coordinates are exactly i/N: the float view times N is integral
    np.testing.assert_array_equal(ps.points * 13, ps.numerators)


def test_generator_range_validation():
    with pytest.raises(DomainError):
        LatticeRule(N=5, z=(0,))
    with pytest.raises(DomainError):
        LatticeRule(N=5, z=(5,))
    with pytest.warns(UserWarning):
        LatticeRule(N=6, z=(1, 2))  # shared factor: warned, not rejected


def test_tent_values():
    assert tent(0.25) == 0.5
    assert tent(0.5) == 1.0
    assert tent(0.75) == 0.5
    x = np.linspace(0, 1, 33)
    np.testing.assert_allclose(tent(x), tent(1.0 - x), atol=0.0)


def test_tent_transform_keeps_duplicates():
    ps = tent_transform(rank1_points(LatticeRule(N=2, z=(1,))))
    np.testing.assert_array_equal(ps.points.ravel(), [0.0, 1.0])
    ps3 = tent_transform(rank1_points(LatticeRule(N=3, z=(1,))))
    np.testing.assert_allclose(sorted(ps3.points.ravel()), [0.0, 2.0 / 3.0, 2.0 / 3.0])
    assert len(ps3) == 3
    ps52 = tent_transform(rank1_points(LatticeRule(N=5, z=(1, 2))))
    base = rank1_points(LatticeRule(N=5, z=(1, 2))).points
    np.testing.assert_allclose(ps52.points, tent(base))
    np.testing.assert_allclose(tent(1.0 - base), tent(base), atol=0.0)  # reflection identity
    with pytest.raises(DomainError):
        tent_transform(ps52)


def test_symmetrize_multiset():
    ps = symmetrize(rank1_points(LatticeRule(N=2, z=(1,))))
    assert len(ps) == 4
    assert sorted(ps.points.ravel()) == [0.0, 0.5, 0.5, 1.0]
    ps2 = symmetrize(rank1_points(LatticeRule(N=5, z=(1, 2))))
    assert len(ps2) == 20
    assert distinct_count(ps2) == 12  # 2^(s-1) (N+1) for odd N


def test_distinct_count_closed_forms():
    import warnings

    assert distinct_count(symmetrize(rank1_points(LatticeRule(N=2, z=(1,))))) == 3
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ps = symmetrize(rank1_points(LatticeRule(N=4, z=(1, 3))))
    assert distinct_count(ps) == 2 * 4 + 1  # 2^(s-1) N + 1 for even N
    rng = np.random.default_rng(11)
    for _ in range(25):
        s = int(rng.integers(1, 5))
        N = int(rng.integers(2, 65))
        rule = random_unit_rule(rng, N, s)
        ps = symmetrize(rank1_points(rule))
        assert len(ps) == (1 << s) * N
        expected = (1 << (s - 1)) * (N + 1) if N % 2 else (1 << (s - 1)) * N + 1
        assert distinct_count(ps) == expected


def test_distinct_count_needs_unit_generators():
    """With gcd(z, N) > 1 the coordinate projection collapses and the closed
    form overcounts; the formula applies to unit generators only."""
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ps = symmetrize(rank1_points(LatticeRule(N=10, z=(8,))))
    assert distinct_count(ps) == 6 != 2 * 10 // 2 + 1


def test_symmetrize_dimension_guard():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rule = LatticeRule(N=3, z=(1,) * 21)
    with pytest.raises(GuardError):
        symmetrize(rank1_points(rule))


def test_is_dual():
    rule = LatticeRule(N=5, z=(1, 2))
    assert is_dual((2, -1), rule)
    assert not is_dual((1, 0), rule)
    assert is_dual((0, 0), rule)


def test_dual_projected_examples():
    assert dual_projected(LatticeRule(N=2, z=(1,)), [1], 5) == [(-4,), (-2,), (2,), (4,)]
    got = dual_projected(LatticeRule(N=5, z=(1, 2)), [1, 2], 2)
    assert got == [(-2, 1), (-1, -2), (1, 2), (2, -1)]
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rule = LatticeRule(N=7, z=(3,))
    assert dual_projected(rule, [1], 15) == [(-14,), (-7,), (7,), (14,)]


def test_dual_projected_negation_closure_and_guard():
    rng = np.random.default_rng(5)
    for _ in range(10):
        rule = random_rule(rng, int(rng.integers(2, 20)), 2)
        out = set(dual_projected(rule, [1, 2], 6))
        assert {tuple(-v for v in k) for k in out} == out
    with pytest.raises(GuardError):
        dual_projected(LatticeRule(N=5, z=(1, 2, 3, 4)), [1, 2, 3, 4], 1000)


def test_character_sum_exact_vs_float():
    assert character_sum(LatticeRule(N=5, z=(1, 2)), (2, -1)) == 1.0
    assert character_sum(LatticeRule(N=5, z=(1, 2)), (1, 0)) == 0.0
    rng = np.random.default_rng(17)
    for _ in range(100):
        s = int(rng.integers(1, 4))
        rule = random_rule(rng, int(rng.integers(2, 50)), s)
        k = tuple(int(v) for v in rng.integers(-30, 31, size=s))
        exact = character_sum(rule, k)
        approx = character_sum(rule, k, method="float")
        assert abs(exact - approx) <= 1e-12


def test_fibonacci_rules():
    assert fibonacci_rule(7) == LatticeRule(N=13, z=(1, 8))
    assert fibonacci_rule(10) == LatticeRule(N=55, z=(1, 34))
    assert fibonacci_rule(20) == LatticeRule(N=6765, z=(1, 4181))
    with pytest.raises(DomainError):
        fibonacci_rule(2)
    with pytest.raises(GuardError):
        fibonacci_rule(47)


def test_export_round_trips(tmp_path):
    ps = rank1_points(LatticeRule(N=5, z=(1, 2)))
    path = tmp_path / "points.csv"
    ps.to_csv(path)
    again = np.loadtxt(path, delimiter=",")
    np.testing.assert_array_equal(again, ps.points)  # 17 digits: round trip exact
    data = json.loads(ps.to_json())
    assert data["n"] == 5 and data["s"] == 2 and data["kind"] == "plain"
    np.testing.assert_array_equal(np.array(data["points"]), ps.points)

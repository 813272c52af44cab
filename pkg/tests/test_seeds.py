import random

import pytest

from torfold import (
    FoldabilityViolationError,
    IceQuiver,
    InputError,
    LaurentPoly,
    MUT,
    RootInterval,
    VarKey,
    build_AQ,
    build_gamma_infinity,
    build_window_seed,
    denominator_vector,
    find_cluster_variable,
    fold_orbit_seed,
    initial_orbit_seed,
    initial_seed,
    is_orbit_cluster_root,
    mutate_seed,
    orbit_mutate_seed,
)
from torfold.errors import FrozenVertexError


def a2_seed():
    return initial_seed(IceQuiver({0: False, 1: False}, {(0, 1): 1}))


class TestSeedMutation:
    def test_exchange_relation(self):
        s = mutate_seed(a2_seed(), 0)
        x0 = LaurentPoly.var(VarKey(0, 0, MUT))
        x1 = LaurentPoly.var(VarKey(1, 0, MUT))
        assert s.cluster[0] * x0 == x1 + LaurentPoly.one()

    def test_involution_on_cluster(self):
        s = a2_seed()
        assert mutate_seed(mutate_seed(s, 0), 0) == s

    def test_a2_pentagon_periodicity(self):
        # alternating mutations on the A2 quiver return to the initial seed
        # after ten steps
        s = a2_seed()
        for k in range(10):
            s = mutate_seed(s, k % 2)
        assert s == a2_seed()

    def test_frozen_rejected(self):
        s = initial_seed(IceQuiver({0: False, 1: True}, {(0, 1): 1}))
        with pytest.raises(FrozenVertexError):
            mutate_seed(s, 1)


class TestOrbitSeedMutation:
    def test_involution(self):
        os_ = initial_orbit_seed(build_gamma_infinity(2))
        assert orbit_mutate_seed(orbit_mutate_seed(os_, 0), 0) == os_

    def test_violation_carries_witness(self):
        q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1, (2, 0): 1})
        os_ = initial_orbit_seed(build_AQ(q))
        with pytest.raises(FoldabilityViolationError) as exc:
            orbit_mutate_seed(os_, 0)
        assert exc.value.witness == [0]
        assert exc.value.violations

    def test_inadmissible_initial_rejected(self):
        q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1, (2, 0): 1})
        from torfold import orbit_mutate

        bad = orbit_mutate(build_AQ(q), 0)
        with pytest.raises(InputError):
            initial_orbit_seed(bad)


class TestFoldCommutation:
    @pytest.mark.parametrize("n", [1, 2])
    def test_random_sequences(self, n):
        rng = random.Random(7)
        base = initial_orbit_seed(build_gamma_infinity(n))
        folded = fold_orbit_seed(base)
        for _ in range(10):
            os_, fs = base, folded
            last = None
            for _ in range(4):
                site = rng.randrange(2 * n)
                if site == last:
                    continue
                last = site
                os_ = orbit_mutate_seed(os_, site)
                fs = mutate_seed(fs, site)
                assert fold_orbit_seed(os_) == fs


class TestWindowSeed:
    def test_structure(self):
        s = build_window_seed(0, 3)
        q = s.quiver
        assert sorted(q.mutable_ids()) == [0, 1, 2, 3]
        assert q.mult(0, 1) == 1 and q.mult(2, 1) == 1 and q.mult(2, 3) == 1
        assert q.mult(("f", 0), 0) == 1 and q.mult(1, ("f", 1)) == 1

    def test_empty_window_rejected(self):
        with pytest.raises(InputError):
            build_window_seed(3, 1)


class TestRoots:
    def test_classification(self):
        n = 3
        assert is_orbit_cluster_root(RootInterval.negative_simple(2), n)
        assert is_orbit_cluster_root(RootInterval.positive(0, 2), n)  # odd length
        assert is_orbit_cluster_root(RootInterval.positive(0, 3), n)  # even, < 2n
        assert not is_orbit_cluster_root(RootInterval.positive(0, 5), n)  # even = 2n
        assert is_orbit_cluster_root(RootInterval.positive(0, 6), n)  # odd again

    def test_find_negative_simple(self):
        s = build_window_seed(0, 3)
        v = find_cluster_variable(s, RootInterval.negative_simple(1))
        assert v == s.cluster[1]

    @pytest.mark.parametrize("root", [(0, 0), (1, 2), (0, 2), (1, 3), (0, 3)])
    def test_find_interval_roots(self, root):
        i, j = root
        s = build_window_seed(-1, 4)
        v = find_cluster_variable(s, RootInterval.positive(i, j))
        keys = [VarKey(m, 0, MUT) for m in s.quiver.mutable_ids()]
        dv = denominator_vector(v, keys)
        assert all(dv[k] == (1 if i <= k.site <= j else 0) for k in keys)

import pytest

from torfold import (
    FoldingUndefinedError,
    IceQuiver,
    InputError,
    PeriodicQuiver,
    admissibility_check,
    build_AQ,
    build_gamma_infinity,
    fold,
    foldability_search,
    orbit_mutate,
    periodic_from_json,
    periodic_to_json,
)
from torfold.errors import FrozenVertexError


def cyclic3_AQ():
    q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1, (2, 0): 1})
    return build_AQ(q)


def noncyclic3_AQ():
    q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (2, 1): 1, (2, 0): 1})
    return build_AQ(q)


class TestConstruction:
    def test_stored_loop_reported(self):
        # construction is lenient: violations are diagnosed, not rejected,
        # because orbit-mutation must be able to exhibit violating quivers
        pq = PeriodicQuiver(2, {0: False}, {(0, 0, 1): 1})
        report = admissibility_check(pq)
        assert not report["admissible"]
        assert report["violations"][0]["condition"] == "no-virtual-loop"

    def test_nonpositive_period_rejected(self):
        with pytest.raises(InputError):
            PeriodicQuiver(0, {0: False}, {})

    def test_frozen_frozen_arrow_reported(self):
        pq = PeriodicQuiver(1, {0: True, 1: True}, {(0, 1, 0): 1})
        report = admissibility_check(pq)
        assert not report["admissible"]
        assert report["violations"][0]["condition"] == "frozen-frozen-arrow"


class TestBuildAQ:
    def test_cyclic3_structure(self):
        pq = cyclic3_AQ()
        assert pq.period == 3
        # one arrow per cycle edge; the wrap edge carries the unit shift
        assert dict(pq.arrows) == {(0, 1, 0): 1, (1, 2, 0): 1, (2, 0, 1): 1}

    def test_positional_relabeling(self):
        q = IceQuiver(
            {1: False, 2: False, 3: False}, {(1, 2): 1, (2, 3): 1, (3, 1): 1}
        )
        assert build_AQ(q) == cyclic3_AQ()

    def test_fold_inverts_build(self):
        q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (2, 1): 1, (2, 0): 1})
        assert fold(build_AQ(q)) == q

    def test_rejects_non_degree_two(self):
        q = IceQuiver({0: False, 1: False}, {(0, 1): 2})
        with pytest.raises(InputError):
            build_AQ(q)


class TestOrbitMutation:
    def test_cyclic3_creates_virtual_2cycle(self):
        pq = orbit_mutate(cyclic3_AQ(), 0)
        report = admissibility_check(pq)
        assert not report["admissible"]
        assert {"pair": [1, 2], "condition": "no-virtual-2-cycle"} in report["violations"]

    def test_involution(self):
        pq = noncyclic3_AQ()
        assert orbit_mutate(orbit_mutate(pq, 1), 1) == pq

    def test_frozen_rejected(self):
        pq = build_gamma_infinity(2)
        with pytest.raises(FrozenVertexError):
            orbit_mutate(pq, 4)

    def test_inadmissible_input_rejected(self):
        pq = orbit_mutate(cyclic3_AQ(), 0)
        with pytest.raises(InputError):
            orbit_mutate(pq, 1)

    def test_shift_convolution(self):
        # mutation at 1 composes the wrap arrow with shift bookkeeping
        pq = orbit_mutate(noncyclic3_AQ(), 1)
        assert admissibility_check(pq)["admissible"]
        assert orbit_mutate(pq, 1) == noncyclic3_AQ()


class TestFold:
    def test_fold_merges_shifts(self):
        pq = PeriodicQuiver(2, {0: False, 1: False}, {(0, 1, 0): 1, (0, 1, 1): 1})
        folded = fold(pq)
        assert folded.arrows == {(0, 1): 2}

    def test_fold_undefined_reports_violations(self):
        pq = orbit_mutate(cyclic3_AQ(), 0)
        with pytest.raises(FoldingUndefinedError) as exc:
            fold(pq)
        assert exc.value.violations


class TestGammaInfinity:
    def test_sites_and_freezing(self):
        for n in (1, 2, 3):
            pq = build_gamma_infinity(n)
            assert pq.period == 2 * n
            assert sorted(pq.mutable_sites()) == list(range(2 * n))
            assert sorted(pq.frozen_sites()) == list(range(2 * n, 4 * n))

    def test_n1_folds_to_double_arrow_with_frozen_partners(self):
        folded = fold(build_gamma_infinity(1))
        assert folded.arrows == {(0, 1): 2, (2, 0): 1, (1, 3): 1}

    def test_admissible(self):
        for n in (1, 2, 3):
            assert admissibility_check(build_gamma_infinity(n))["admissible"]


class TestFoldabilitySearch:
    def test_cyclic3_witness_at_depth_1(self):
        outcome = foldability_search(cyclic3_AQ(), 3)
        assert outcome["verdict"] == "violation-found"
        assert outcome["witness"] == [0]

    def test_noncyclic3_clean(self):
        outcome = foldability_search(noncyclic3_AQ(), 4)
        assert outcome["verdict"] == "foldable-up-to-depth"

    def test_gamma_infinity_clean(self):
        outcome = foldability_search(build_gamma_infinity(1), 5)
        assert outcome["verdict"] == "foldable-up-to-depth"


def test_json_roundtrip():
    for pq in (cyclic3_AQ(), noncyclic3_AQ(), build_gamma_infinity(2)):
        assert periodic_from_json(periodic_to_json(pq)) == pq

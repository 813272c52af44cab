import pytest
from hypothesis import given, settings, strategies as st

from torfold import (
    IceQuiver,
    InputError,
    arr_count,
    mutate,
    quiver_from_json,
    quiver_to_json,
)
from torfold.errors import FrozenVertexError


def cyclic3():
    return IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1, (2, 0): 1})


class TestValidation:
    def test_loop_rejected(self):
        with pytest.raises(InputError):
            IceQuiver({0: False}, {(0, 0): 1})

    def test_two_cycle_rejected(self):
        with pytest.raises(InputError):
            IceQuiver({0: False, 1: False}, {(0, 1): 1, (1, 0): 1})

    def test_frozen_frozen_rejected(self):
        with pytest.raises(InputError):
            IceQuiver({0: True, 1: True}, {(0, 1): 1})

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(InputError):
            IceQuiver({0: False}, {(0, 1): 1})

    def test_mutating_frozen_rejected(self):
        q = IceQuiver({0: False, 1: True}, {(0, 1): 1})
        with pytest.raises(FrozenVertexError):
            mutate(q, 1)


class TestMutation:
    def test_cyclic3_mutation(self):
        # mutating the 3-cycle at 0 reverses its incident arrows and
        # cancels the composite against the remaining arrow
        q = mutate(cyclic3(), 0)
        assert q.arrows == {(1, 0): 1, (0, 2): 1}

    def test_path_mutation_creates_arrow(self):
        q = IceQuiver({0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1})
        m = mutate(q, 1)
        assert m.arrows == {(1, 0): 1, (2, 1): 1, (0, 2): 1}

    def test_involution_example(self):
        q = cyclic3()
        assert mutate(mutate(q, 1), 1) == q

    def test_arr_count(self):
        q = cyclic3()
        assert arr_count(q, [0], [1]) == 1
        assert arr_count(q, [0, 1], [1, 2]) == 2
        assert arr_count(q, [1], [0]) == 0


def quivers(max_vertices=8, max_mult=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_vertices))
        frozen = draw(
            st.lists(st.booleans(), min_size=n, max_size=n).filter(
                lambda f: not all(f)
            )
        )
        arrows = {}
        for u in range(n):
            for v in range(u + 1, n):
                if frozen[u] and frozen[v]:
                    continue
                m = draw(st.integers(0, max_mult))
                if m:
                    key = (u, v) if draw(st.booleans()) else (v, u)
                    arrows[key] = m
        return IceQuiver({i: frozen[i] for i in range(n)}, arrows)

    return build()


@given(quivers(), st.data())
@settings(max_examples=200, deadline=None)
def test_mutation_is_involution(q, data):
    z = data.draw(st.sampled_from(q.mutable_ids()))
    assert mutate(mutate(q, z), z) == q


@given(quivers(), st.data())
@settings(max_examples=200, deadline=None)
def test_disconnected_mutations_commute(q, data):
    pairs = [
        (a, b)
        for a in q.mutable_ids()
        for b in q.mutable_ids()
        if a < b and not q.mult(a, b) and not q.mult(b, a)
    ]
    if not pairs:
        return
    a, b = data.draw(st.sampled_from(pairs))
    assert mutate(mutate(q, a), b) == mutate(mutate(q, b), a)


@given(quivers(), st.data())
@settings(max_examples=200, deadline=None)
def test_mutation_preserves_invariants(q, data):
    z = data.draw(st.sampled_from(q.mutable_ids()))
    mutate(q, z)._validate()  # raises InputError on loop/2-cycle/frozen pair


@given(quivers())
@settings(max_examples=100, deadline=None)
def test_json_roundtrip(q):
    assert quiver_from_json(quiver_to_json(q)) == q

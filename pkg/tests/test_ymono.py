import random

import pytest
from hypothesis import given, settings, strategies as st

from torfold import (
    DomainError,
    InputError,
    RootInterval,
    YMonomial,
    a_monomial,
    d_grade,
    is_mu_dominated,
    kr_monomial,
    m_alpha,
    m_alpha_simple,
    nakajima_leq,
    phi_fold,
    xi,
    y_var,
    ymono_from_json,
    ymono_to_json,
)


class TestMonoidStructure:
    def test_merge_and_cancel(self):
        m = y_var(0, 1) * y_var(0, 1) * y_var(0, 1, exp=-1)
        assert m == y_var(0, 1)
        assert (m * m.inverse()).is_trivial()

    def test_modulus_normalizes_sites(self):
        assert y_var(5, 0, modulus=4) == y_var(1, 0, modulus=4)

    def test_families_do_not_mix(self):
        with pytest.raises(InputError):
            y_var(0, 0) * y_var(0, 0, modulus=4)


class TestAMonomial:
    def test_integer_line(self):
        a = a_monomial(1, 2)
        assert a == YMonomial({(1, 1): 1, (1, 3): 1, (0, 2): -1, (2, 2): -1})

    def test_modulus_2_merges_neighbors(self):
        a = a_monomial(0, 0, modulus=2)
        assert a == YMonomial({(0, -1): 1, (0, 1): 1, (1, 0): -2}, 2)


class TestPhiFold:
    def test_site_reduction(self):
        assert phi_fold(y_var(7, 3), 2) == y_var(3, 3, modulus=4)

    def test_merges_colliding_sites(self):
        m = y_var(0, 5) * y_var(4, 5)
        assert phi_fold(m, 2) == y_var(0, 5, modulus=4, exp=2)

    def test_a_compatibility_sample(self):
        for n in (1, 2, 3):
            for i in (-8, -1, 0, 3, 8):
                for k in (-8, 0, 5):
                    assert phi_fold(a_monomial(i, k), n) == a_monomial(
                        i, k, modulus=2 * n
                    )

    def test_rejects_toroidal_input(self):
        with pytest.raises(InputError):
            phi_fold(y_var(0, 0, modulus=4), 2)


def ymonomials(modulus=None):
    return st.dictionaries(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
        st.integers(-2, 2),
        max_size=4,
    ).map(lambda d: YMonomial(d, modulus))


@given(ymonomials(), ymonomials(), st.integers(1, 3))
@settings(max_examples=150, deadline=None)
def test_phi_is_homomorphism(m1, m2, n):
    assert phi_fold(m1 * m2, n) == phi_fold(m1, n) * phi_fold(m2, n)


class TestNakajimaOrder:
    def test_worked_certificate(self):
        m2 = YMonomial({(1, 1): 1, (1, 3): 1})
        m1 = m2 * a_monomial(1, 2).inverse()
        assert m1 == YMonomial({(0, 2): 1, (2, 2): 1})
        assert nakajima_leq(m1, m2) == (True, {(1, 2): 1})

    def test_incomparable(self):
        ok, cert = nakajima_leq(y_var(0, 0), y_var(5, 5))
        assert not ok and cert is None

    def test_strict_direction(self):
        m2 = YMonomial({(1, 1): 1, (1, 3): 1})
        m1 = m2 * a_monomial(1, 2).inverse()
        assert not nakajima_leq(m2, m1)[0]

    def test_toroidal_certificate(self):
        m2 = kr_monomial(1, 1, 2, modulus=4)
        m1 = m2 * a_monomial(1, 2, modulus=4).inverse()
        ok, cert = nakajima_leq(m1, m2)
        assert ok and cert == {(1, 2): 1}


@given(ymonomials())
@settings(max_examples=100, deadline=None)
def test_nakajima_reflexive(m):
    assert nakajima_leq(m, m) == (True, {})


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_nakajima_transitive_composition(data):
    # certificates compose: m*A^{-c} <= m with the sum certificate
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    m = YMonomial({(rng.randint(-4, 4), rng.randint(-4, 4)): 1 for _ in range(2)})
    c1 = {(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(0, 2) for _ in range(2)}
    mid = m
    for (i, k), c in c1.items():
        mid = mid * a_monomial(i, k).inverse() ** c
    assert nakajima_leq(mid, m)[0]


class TestRootMonomials:
    def test_simple_examples(self):
        assert m_alpha_simple(1, positive=True) == y_var(1, 3)
        assert m_alpha_simple(2, positive=False) == y_var(2, 2)

    def test_interval_is_product_of_simples(self):
        root = RootInterval.positive(0, 2)
        assert m_alpha(root) == y_var(0, 0) * y_var(1, 3) * y_var(2, 0)

    def test_negative_simple(self):
        assert m_alpha(RootInterval.negative_simple(3)) == y_var(3, 1)


class TestKRMonomial:
    def test_string_of_variables(self):
        assert kr_monomial(2, 1, 3) == YMonomial({(2, 1): 1, (2, 3): 1, (2, 5): 1})

    def test_k_zero_is_trivial(self):
        assert kr_monomial(0, 0, 0).is_trivial()

    def test_negative_k_rejected(self):
        with pytest.raises(InputError):
            kr_monomial(0, 0, -1)


class TestDGrading:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_partner_pairs_grade_zero(self, n):
        p = 2 * n
        for i in range(p):
            pair = YMonomial({(i, xi(i)): 1, (i, xi(i) + 2): 1}, p)
            assert d_grade(pair) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_a_inverse_drops_two(self, n):
        p = 2 * n
        for i in range(p):
            m = y_var(i, xi(i), modulus=p) * y_var((i + 1) % p, xi(i + 1), modulus=p)
            assert d_grade(m * a_monomial(i, xi(i) + 1, modulus=p).inverse()) == d_grade(m) - 2

    def test_outside_subgroup_rejected(self):
        with pytest.raises(DomainError):
            d_grade(y_var(0, 5, modulus=4))

    def test_integer_line_rejected(self):
        with pytest.raises(DomainError):
            d_grade(y_var(0, 0))


class TestMuDominance:
    def test_single_dominant_monomial(self):
        m = kr_monomial(1, 1, 1, modulus=4)
        ok, top = is_mu_dominated([(m, 1)])
        assert ok and top == m

    def test_monomial_with_shed_pair_fails(self):
        i = 0
        pair = YMonomial({(i, xi(i)): 1, (i, xi(i) + 2): 1}, 4)
        m = kr_monomial(1, 1, 1, modulus=4) * pair
        ok, reason = is_mu_dominated([(m, 1)])
        assert not ok and "shedding" in reason

    def test_requires_coefficient_one(self):
        m = kr_monomial(1, 1, 1, modulus=4)
        ok, reason = is_mu_dominated([(m, 2)])
        assert not ok

    def test_pair_itself_is_not_dominated(self):
        # the frozen pair sheds to the trivial monomial, which is dominant
        pair = kr_monomial(1, 1, 2, modulus=4)
        ok, reason = is_mu_dominated([(pair, 1)])
        assert not ok and "shedding" in reason

    def test_two_term_sum(self):
        m = y_var(0, 0, modulus=4) * y_var(1, 3, modulus=4)
        lower = m * a_monomial(0, 1, modulus=4).inverse()
        ok, top = is_mu_dominated([(m, 1), (lower, 3)])
        assert ok and top == m


@given(ymonomials(), st.sampled_from([None, 2, 4, 6]))
@settings(max_examples=100, deadline=None)
def test_json_roundtrip(m, modulus):
    m = YMonomial(dict(m.exps), modulus)
    assert ymono_from_json(ymono_to_json(m)) == m

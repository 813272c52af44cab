import pytest

from torfold import (
    InputError,
    LaurentPoly,
    discover_frozen_monomials,
    verify_folded_identity,
    verify_identity,
)
from torfold.laurent import FROZEN, MUT, VarKey


def var(site, layer=MUT):
    return LaurentPoly.var(VarKey(site, 0, layer))


class TestFrozenDiscovery:
    def test_exact_decomposition(self):
        f = var("c", FROZEN)
        s1, s2 = var("a") + LaurentPoly.one(), var("b")
        lhs = s1 * f + s2
        assert discover_frozen_monomials(lhs, [s1, s2]) == [f, LaurentPoly.one()]

    def test_no_decomposition(self):
        assert discover_frozen_monomials(var("a"), [var("b")]) is None

    def test_mutable_quotient_rejected(self):
        # the correction factor must be frozen-only
        lhs = var("a") * var("b")
        assert discover_frozen_monomials(lhs, [var("b")]) is None


@pytest.mark.parametrize("name", ["exc1", "exc2", "exc3", "exc4"])
def test_identities_minimal_instance(name):
    report = verify_identity(name, 1, 3)
    assert report["status"] == "verified"
    assert len(report["discovered_frozen_monomials"]) == 2


def test_gap_requirement():
    with pytest.raises(InputError):
        verify_identity("exc1", 1, 2)


def test_unknown_identity():
    with pytest.raises(InputError):
        verify_identity("exc9", 1, 3)


def test_folded_identity_n3():
    report = verify_folded_identity(3)
    assert report["status"] == "verified"
    assert len(report["discovered_frozen_monomials"]) == 3


def test_folded_identity_needs_n3():
    with pytest.raises(InputError):
        verify_folded_identity(2)

import pytest

from core_lattice.errors import NotASemigroupError
from core_lattice.numset import (
    NumericalSemigroup,
    NumericalSet,
    atom_monoid,
    contains,
    dual,
    effective_generators,
    format_generators,
    is_closed,
    is_pseudosymmetric,
    is_symmetric,
    minimal_generators,
    missing_pairs,
    semigroup_from_generators,
)

T = NumericalSet.parse("0,1,4,5,7,→")
NAT = NumericalSet()


def gens(*g):
    return semigroup_from_generators(g)


def test_parse_and_fields():
    assert T.gaps == (2, 3, 6)
    assert T.frobenius == 6
    assert T.genus == 3
    assert str(T) == "0,1,4,5,7,→"
    assert NumericalSet.parse("{0,1,4,5,7,->}") == T
    assert NAT.frobenius == -1 and NAT.genus == 0
    assert str(NAT) == "0,→"


@pytest.mark.parametrize("bad", ["0,1,4", "1,2,→", "0,3,2,→", "0,x,→", "0,-1,→"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        NumericalSet.parse(bad)


def test_invalid_gaps():
    with pytest.raises(ValueError):
        NumericalSet([0, 2])
    with pytest.raises(ValueError):
        NumericalSet([3, 2])


def test_contains():
    assert contains(T, 4)
    assert not contains(T, 6)
    assert contains(NAT, 0)
    assert contains(T, 1000)
    with pytest.raises(ValueError):
        contains(T, -1)


def test_atom_monoid():
    # 5 is not in A(T) since 5 + 1 = 6 is a gap; the hook set of (4,2,2) is {1,2,3,5,6}
    assert atom_monoid(T) == NumericalSet.parse("0,4,7,→")
    assert atom_monoid(NAT) == NAT
    # 3 drops out because 3+3=6 is a gap
    assert atom_monoid(NumericalSet.parse("0,3,4,7,→")) == NumericalSet.parse("0,4,7,→")


def test_atom_monoid_of_semigroup_is_itself():
    S = gens(3, 5, 7)
    assert atom_monoid(S) == S


def test_dual():
    assert dual(T) == NumericalSet.parse("0,3,4,7,→")
    S = gens(2, 3)
    assert dual(S) == S
    assert dual(NAT) == NAT
    assert dual(dual(T)) == T
    assert atom_monoid(dual(T)) == atom_monoid(T)


def test_missing_pairs():
    assert missing_pairs(NumericalSemigroup.of(NumericalSet.parse("0,3,6,→"))) == {1, 4}
    assert missing_pairs(gens(3, 4, 5)) == {1}
    assert len(missing_pairs(gens(4, 5, 6, 7))) == 2
    assert missing_pairs(gens(2, 5)) == set()


def test_symmetry():
    assert is_symmetric(gens(2, 5))
    assert not is_symmetric(T)
    assert not is_symmetric(gens(3, 4, 5))
    assert is_symmetric(NAT)
    assert is_pseudosymmetric(gens(3, 4, 5))
    assert not is_pseudosymmetric(gens(2, 3))
    assert not is_pseudosymmetric(gens(4, 5, 6, 7))


def test_semigroup_from_generators():
    S = gens(3, 8)
    assert S.gaps == (1, 2, 4, 5, 7, 10, 13)
    assert S.frobenius == 13 and S.genus == 7
    assert gens(2, 3).gaps == (1,)
    assert gens(1, 7) == NAT
    with pytest.raises(ValueError, match="infinite complement"):
        gens(4, 6)
    with pytest.raises(ValueError):
        gens(0, 3)


def test_generators():
    assert minimal_generators(gens(4, 5, 6, 7)) == [4, 5, 6, 7]
    assert minimal_generators(NAT) == [1]
    assert minimal_generators(gens(2, 5)) == [2, 5]
    assert minimal_generators(gens(3, 5, 7, 9, 10)) == [3, 5, 7]
    assert effective_generators(gens(3, 4, 5)) == [3, 4, 5]
    assert effective_generators(gens(3, 5)) == []
    assert format_generators([4, 5, 6, 7]) == "<4,5,6,7>"


def test_semigroup_validation():
    with pytest.raises(NotASemigroupError, match="not closed: 1\\+1=2 missing"):
        NumericalSemigroup.of(NumericalSet.parse("0,1,3,→"))
    assert not is_closed(T)
    assert is_closed(gens(3, 8))
    assert gens(3, 8).multiplicity == 3
    assert T <= NAT and not NAT <= T
    assert gens(3, 8) <= gens(3, 4)
    assert not gens(3, 4) <= gens(3, 8)


def test_from_mask_and_json():
    assert NumericalSet.from_mask(T.mask, T.frobenius) == T
    assert T.to_json() == {"gaps": [2, 3, 6]}
    assert NumericalSet.from_elements([0, 1, 4, 5, 7]) == T
    assert len({T, NumericalSet([2, 3, 6])}) == 1

from fractions import Fraction
from itertools import product

import pytest

from core_lattice import oracles
from core_lattice.apery import AperyTuple, set_from_apery
from core_lattice.numset import is_symmetric
from core_lattice.polytope import (
    RATIO_LIMITS,
    Constraint,
    SizeStats,
    anderson_count,
    armstrong_mean,
    coordinate_bounds,
    core_points,
    core_polytope,
    core_stats,
    count_oversemigroups,
    count_oversemigroups_by_genus,
    count_symmetric_oversemigroups,
    enumerate_lattice_points,
    genus_stratum_formula,
    olsson_stanton_max,
    oversemigroup_closed_form,
    oversemigroup_points,
    oversemigroup_polytope,
    semigroup_core_ratio,
    stats_of_points,
    stratify_oversemigroups,
    symmetric_overs3_formula,
)


def rows(system):
    return sorted(str(c) for c in system.constraints)


def test_core_polytope_examples():
    assert rows(core_polytope(3, [8])) == ["x1 - x2 <= 3", "x2 <= 2"]
    assert rows(core_polytope(3, [4])) == ["-x1 + x2 <= 1", "x1 <= 1"]
    assert rows(core_polytope(2, [7])) == ["x1 <= 3"]


@pytest.mark.parametrize("bad,msg", [((3, [6]), "b divisible by a"), ((4, [6]), "unbounded cone")])
def test_core_polytope_errors(bad, msg):
    with pytest.raises(ValueError, match=msg):
        core_polytope(*bad)


def test_constraint_holds():
    c = Constraint((1, -1), 3)
    assert c.holds((5, 2)) and not c.holds((6, 2))


def test_coordinate_bounds_are_sound():
    for a, bs in [(3, [8]), (2, [5]), (3, [4, 5]), (4, [7, 9]), (5, [7])]:
        hi = coordinate_bounds(a, bs)
        system = core_polytope(a, bs)
        # every point of a generous box that satisfies the system lies inside the bounds
        for x in product(range(3 * max(hi) + 3), repeat=a - 1):
            if system.contains(x):
                assert all(v <= h for v, h in zip(x, hi)), (a, bs, x)
    assert coordinate_bounds(3, [8]) == (6, 3)
    assert coordinate_bounds(2, [5]) == (3,)


def test_enumeration():
    pts = list(enumerate_lattice_points(core_polytope(3, [8]), coordinate_bounds(3, [8])))
    assert len(pts) == 15
    assert pts == sorted(pts)
    assert [t.x for t in core_points(2, [3])] == [(0,), (1,)]
    assert (0, 0, 0) in [t.x for t in core_points(4, [5])]


def test_enumeration_matches_box_filter():
    for a, bs in [(3, [8]), (4, [5, 7]), (5, [8])]:
        system = core_polytope(a, bs)
        hi = coordinate_bounds(a, bs)
        box = [x for x in product(*(range(h + 1) for h in hi)) if system.contains(x)]
        assert [t.x for t in core_points(a, bs)] == box


def test_core_stats_examples():
    st = core_stats(3, [8])
    assert (st.count, st.max_size, st.mean) == (15, 21, 7)
    assert st.argmax == AperyTuple(3, (5, 2)) and st.unique_argmax
    st = core_stats(2, [3])
    assert (st.count, st.max_size, st.mean) == (2, 1, Fraction(1, 2))


def test_multicore_against_partitions():
    st = core_stats(3, [4, 5])
    cores = oracles.partitions_avoiding_hooks({3, 4, 5}, 20)
    assert st.count == len(cores)
    assert st.max_size == max(lam.size for lam in cores)


def test_parallel_matches_serial():
    assert core_stats(5, [7], jobs=3) == core_stats(5, [7])
    assert core_stats(4, [9], jobs=2) == core_stats(4, [9])


def test_size_stats_merge_is_associative():
    pts = core_points(4, [7])
    parts = [stats_of_points(pts[i::3]) for i in range(3)]
    left = parts[0].merge(parts[1]).merge(parts[2])
    right = parts[0].merge(parts[1].merge(parts[2]))
    assert left == right
    whole = stats_of_points(pts)
    assert (left.count, left.max_size, left.mean, left.argmax) == (whole.count, whole.max_size, whole.mean, whole.argmax)
    assert SizeStats().merge(whole) == whole


def test_closed_forms():
    assert anderson_count(3, 8) == 15
    assert olsson_stanton_max(3, 8) == 21
    assert armstrong_mean(3, 8) == 7


def test_oversemigroup_polytope():
    assert rows(oversemigroup_polytope(3, 8)) == ["-2x1 + x2 <= 0", "x1 - 2x2 <= 1", "x1 <= 5", "x2 <= 2"]
    assert rows(oversemigroup_polytope(2, 9)) == ["x1 <= 4"]


def test_oversemigroup_counts():
    assert count_oversemigroups(3, 8) == 10
    assert count_oversemigroups(4, 13) == 66
    assert count_oversemigroups(2, 7) == 4
    assert count_oversemigroups(3, 4) == 4


def test_oversemigroups_against_subset_search():
    for a, b in [(3, 8), (3, 7), (4, 7), (5, 6), (4, 9)]:
        via_polytope = {set_from_apery(t) for t in oversemigroup_points(a, b)}
        assert via_polytope == set(oracles.oversemigroups_by_subset_search(a, b))


def test_closed_form_dispatch():
    assert oversemigroup_closed_form(3, 8) == 10
    assert oversemigroup_closed_form(2, 9) == 5
    with pytest.raises(ValueError):
        oversemigroup_closed_form(5, 7)


def test_genus_strata():
    assert count_oversemigroups_by_genus(3, 8)[0] == 1
    strata = stratify_oversemigroups(3, 8)
    assert sum(strata.values()) == 10
    for n in range(8):
        assert strata.get(n, 0) == genus_stratum_formula(1, 2, n)
    with pytest.raises(ValueError):
        count_oversemigroups_by_genus(5, 7)


def test_symmetric_oversemigroups():
    assert count_symmetric_oversemigroups(3, 8) == symmetric_overs3_formula(1, 2)
    by_search = [S for S in oracles.oversemigroups_by_subset_search(3, 8) if is_symmetric(S)]
    assert len(by_search) == count_symmetric_oversemigroups(3, 8)


def test_ratio_table():
    table = semigroup_core_ratio(3, 20)
    assert [r.b for r in table][:3] == [4, 5, 7]
    assert all(r.ratio == Fraction(r.oversemigroups, r.cores) for r in table)
    assert RATIO_LIMITS[3] == Fraction(1, 2)
    # the ratio drifts towards its limit from above
    assert table[-1].ratio - RATIO_LIMITS[3] < table[0].ratio - RATIO_LIMITS[3]
    with pytest.raises(ValueError):
        semigroup_core_ratio(5, 20)

"""Brute-force reference computations.

Nothing here goes through Apéry coordinates or polytopes: partitions are
handled through their Young diagrams, sets through explicit membership, and
semigroups through pairwise closure checks.  These are the independent side
of every cross-check run by :mod:`core_lattice.verify` and the test-suite.
"""

from __future__ import annotations

from itertools import combinations, product

from .numset import NumericalSet, semigroup_from_generators
from .partition import Partition


def partitions_up_to(n):
    """Every partition of size <= n (including the empty one)."""

    def rec(remaining, cap, prefix):
        yield Partition(tuple(prefix))
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def young_hook_set(parts):
    """Hook set straight from the diagram: arm + leg + 1 for every cell."""
    out = set()
    for i, row in enumerate(parts):
        for j in range(row):
            leg = sum(1 for r in parts[i + 1:] if r > j)
            out.add(row - j - 1 + leg + 1)
    return out


def partitions_avoiding_hooks(excluded, max_size):
    """All partitions of size <= max_size with no hook length in ``excluded``.

    Deleting the top row leaves every other hook unchanged, so the property
    is inherited by the partition below the top row.  Partitions are grown by
    adding a new top row and only the new row's hooks are examined; the
    result is exactly the filtered set of all partitions of size <= max_size.
    """
    excluded = frozenset(excluded)
    found = []

    def grow(rows, heights, size):
        found.append(Partition(tuple(reversed(rows))))
        start = rows[-1] if rows else 1
        for length in range(start, max_size - size + 1):
            # cell j of the new row: arm = length - j, leg = heights[j-1]
            if any(length - j + (heights[j - 1] if j <= len(heights) else 0) + 1 in excluded
                   for j in range(1, length + 1)):
                continue
            new_heights = [h + 1 for h in heights] + [1] * (length - len(heights))
            rows.append(length)
            grow(rows, new_heights, size + length)
            rows.pop()

    grow([], [], 0)
    return found


def numerical_sets_up_to(max_frobenius):
    """N followed by every numerical set with 1 <= F <= max_frobenius."""
    yield NumericalSet()
    for F in range(1, max_frobenius + 1):
        for bits in range(1 << (F - 1)):
            yield NumericalSet([g for g in range(1, F) if not (bits >> (g - 1)) & 1] + [F])


def is_closed_bruteforce(T):
    elems = T.elements(T.frobenius)
    return all((s + t) in T for s in elems for t in elems)


def atom_monoid_bruteforce(T):
    """{n : n + t in T for every t in T}, tested on t <= F + 1 (larger t add nothing new)."""
    F = T.frobenius
    elems = T.elements(F + 1)
    members = [n for n in range(F + 2) if all((n + t) in T for t in elems)]
    return NumericalSet.from_elements(members)


def oversemigroups_by_subset_search(a, b):
    """Semigroups containing <a, b>: every subset of its gaps added back, closure checked."""
    S = semigroup_from_generators([a, b])
    found = []
    for r in range(len(S.gaps) + 1):
        for added in combinations(S.gaps, r):
            T = NumericalSet(sorted(set(S.gaps) - set(added)))
            if is_closed_bruteforce(T):
                found.append(T)
    return found


def semigroups_of_genus(g):
    """All numerical semigroups of genus g; their Frobenius number is at most 2g - 1."""
    if g == 0:
        return [NumericalSet()]
    found = []
    for gaps in combinations(range(1, 2 * g), g):
        T = NumericalSet(gaps)
        if is_closed_bruteforce(T):
            found.append(T)
    return found


def tuples_in_box(dim, hi):
    return product(range(hi + 1), repeat=dim)


def apery_bruteforce(T, a):
    """Least element of T in each nonzero residue class, as (element - i) / a."""
    return tuple((min(n for n in range(i, T.frobenius + a + 1, a) if n in T) - i) // a for i in range(1, a))

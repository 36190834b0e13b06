"""Numerical sets and numerical semigroups.

A numerical set is a subset of the natural numbers that contains 0 and has
finite complement.  It is stored by its sorted gap list, together with a
bitmask of its elements in ``[0, F]`` where ``F`` is the Frobenius number
(largest gap).  ``F = -1`` for the full set of naturals.

Text form follows the usual convention: the elements up to ``F + 1`` and an
arrow, e.g. ``"0,1,4,5,7,→"``.  ``"->"`` is accepted on input.
"""

from __future__ import annotations

import heapq
from math import gcd
from functools import reduce

import numpy as np

from .errors import NotASemigroupError

ARROW = "→"


class NumericalSet:
    """Cofinite subset of N containing 0, identified by its gaps."""

    __slots__ = ("gaps", "frobenius", "genus", "mask", "_gapset")

    def __init__(self, gaps=()):
        gaps = tuple(int(g) for g in gaps)
        for prev, cur in zip(gaps, gaps[1:]):
            if cur <= prev:
                raise ValueError(f"gaps must be strictly increasing: {gaps}")
        if gaps and gaps[0] <= 0:
            raise ValueError("0 belongs to every numerical set; gaps must be positive")
        self.gaps = gaps
        self.frobenius = gaps[-1] if gaps else -1
        self.genus = len(gaps)
        full = (1 << (self.frobenius + 1)) - 1
        gap_mask = 0
        for g in gaps:
            gap_mask |= 1 << g
        # bit n set iff n in T, for 0 <= n <= F
        self.mask = full & ~gap_mask
        self._gapset = frozenset(gaps)

    @classmethod
    def from_mask(cls, mask, frobenius):
        """Build from a bitmask of elements in ``[0, frobenius]``.

        Bits above ``frobenius`` are ignored; every integer above it is an
        element.  ``frobenius`` need not be a gap of the result (the true
        Frobenius number is recomputed).
        """
        return cls(g for g in range(1, frobenius + 1) if not (mask >> g) & 1)

    @classmethod
    def from_elements(cls, elements):
        """Numerical set whose elements are ``elements`` plus every integer above their maximum."""
        elems = set(int(e) for e in elements)
        if 0 not in elems:
            raise ValueError("a numerical set must contain 0")
        top = max(elems)
        return cls(n for n in range(1, top) if n not in elems)

    @classmethod
    def parse(cls, text):
        """Parse ``"0,1,4,5,7,→"`` (braces and ``->`` allowed)."""
        body = text.strip().strip("{}").replace("->", ARROW)
        items = [s.strip() for s in body.split(",") if s.strip()]
        if not items or items[-1] != ARROW:
            raise ValueError(f"numerical set must end with '{ARROW}' or '->': {text!r}")
        try:
            elements = [int(s) for s in items[:-1]]
        except ValueError:
            raise ValueError(f"malformed numerical set: {text!r}") from None
        if any(e < 0 for e in elements):
            raise ValueError(f"negative element in {text!r}")
        if sorted(set(elements)) != elements:
            raise ValueError(f"elements must be strictly increasing: {text!r}")
        return cls.from_elements(elements)

    def __contains__(self, n):
        if n < 0:
            raise ValueError(f"membership is defined for n >= 0, got {n}")
        return n not in self._gapset

    def elements(self, upto=None):
        """Elements in ``[0, upto]``; ``upto`` defaults to ``F + 1``."""
        if upto is None:
            upto = self.frobenius + 1
        return [n for n in range(upto + 1) if n not in self._gapset]

    def __eq__(self, other):
        if not isinstance(other, NumericalSet):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __le__(self, other):
        """Set inclusion."""
        return other._gapset <= self._gapset

    def __str__(self):
        return ",".join(str(e) for e in self.elements()) + "," + ARROW

    def __repr__(self):
        return f"{type(self).__name__}({{{self}}})"

    def to_json(self):
        return {"gaps": list(self.gaps)}


def _first_violation(T):
    """Smallest pair (s, t), s <= t, of elements with s + t a gap, else None."""
    elems = T.elements(T.frobenius)
    for s in elems[1:]:
        for t in elems:
            if t < s:
                continue
            if s + t > T.frobenius:
                break
            if (s + t) not in T:
                return s, t
    return None


class NumericalSemigroup(NumericalSet):
    """Numerical set closed under addition."""

    __slots__ = ()

    def __init__(self, gaps=()):
        super().__init__(gaps)
        bad = _first_violation(self)
        if bad is not None:
            s, t = bad
            raise NotASemigroupError(f"not closed: {s}+{t}={s + t} missing")

    @classmethod
    def of(cls, T):
        """Reinterpret a numerical set as a semigroup (validated)."""
        return T if isinstance(T, cls) else cls(T.gaps)

    @property
    def multiplicity(self):
        return 1 if not self.gaps else next(n for n in range(1, self.frobenius + 2) if n in self)


def contains(T, n):
    return n in T


def is_closed(T):
    return _first_violation(T) is None


def atom_mask(mask, frobenius):
    """Bitmask over ``[0, F]`` of the atom monoid of the set with element mask ``mask``.

    n belongs to A(T) iff n in T and (n + T) misses every gap of T.  Only gaps
    below ``F + 1`` exist, so shifting the element mask is enough.
    """
    full = (1 << (frobenius + 1)) - 1
    elems = mask & full
    holes = full & ~elems
    out = 0
    for n in range(frobenius + 1):
        if (elems >> n) & 1 and not ((elems << n) & holes):
            out |= 1 << n
    return out


def atom_masks(masks, frobenius):
    """Vectorised :func:`atom_mask` over a uint64 array of element masks (F <= 62)."""
    if frobenius > 62:
        raise ValueError("vectorised atom monoid supports F <= 62")
    masks = np.asarray(masks, dtype=np.uint64)
    full = np.uint64((1 << (frobenius + 1)) - 1)
    elems = masks & full
    holes = full & ~elems
    out = np.zeros_like(elems)
    one = np.uint64(1)
    for n in range(frobenius + 1):
        sh = np.uint64(n)
        keep = (((elems >> sh) & one) == one) & (((elems << sh) & holes) == 0)
        out |= keep.astype(np.uint64) << sh
    return out


def atom_monoid(T):
    """A(T) = {n : n + T ⊆ T}, always a numerical semigroup."""
    return NumericalSemigroup.from_mask(atom_mask(T.mask, T.frobenius), T.frobenius)


def dual(T):
    """T* = {F - u : u not in T}.  The dual of N is N."""
    F = T.frobenius
    if F < 0:
        return NumericalSet()
    members = {F - g for g in T.gaps}
    return NumericalSet(n for n in range(1, F + 1) if n not in members)


def missing_pairs(S):
    """M(S): n in [0, F] with neither n nor F - n in S."""
    F = S.frobenius
    return frozenset(n for n in range(F + 1) if n not in S and (F - n) not in S)


def is_symmetric(T):
    """Exactly one of i, F - i lies in T for every i in [0, F].  True for N."""
    F = T.frobenius
    return all((i in T) != ((F - i) in T) for i in range(F + 1))


def is_pseudosymmetric(S):
    F = S.frobenius
    if F < 0 or F % 2:
        return False
    return all((i in S) != ((F - i) in S) for i in range(F // 2))


def semigroup_from_generators(gens):
    """<n_1, ..., n_t> via shortest paths over residues mod the smallest generator."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise ValueError(f"gcd{tuple(gens)} != 1: infinite complement")
    m = gens[0]
    if m == 1:
        return NumericalSemigroup()
    # apery[r] = least element congruent to r mod m
    apery = [None] * m
    apery[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w > apery[r]:
            continue
        for g in gens[1:]:
            nw, nr = w + g, (r + g) % m
            if apery[nr] is None or nw < apery[nr]:
                apery[nr] = nw
                heapq.heappush(heap, (nw, nr))
    gaps = sorted(n for r in range(1, m) for n in range(r, apery[r], m))
    return NumericalSemigroup(gaps)


def minimal_generators(S):
    """Positive elements of S that are not a sum of two positive elements."""
    if S.frobenius < 0:
        return [1]
    m = S.multiplicity
    gens = []
    for s in range(m, S.frobenius + m + 1):
        if s not in S:
            continue
        if not any(t in S and (s - t) in S for t in range(m, s - m + 1)):
            gens.append(s)
    return gens


def effective_generators(S):
    """Minimal generators greater than the Frobenius number."""
    return [g for g in minimal_generators(S) if g > S.frobenius]


def format_generators(gens):
    return "<" + ",".join(str(g) for g in gens) + ">"

"""Counting numerical sets with a prescribed atom monoid.

P(S) is the number of numerical sets T with A(T) = S, equivalently the
number of partitions whose hook set is N \\ S.  Any such T lies between S
and its dual S* = S ∪ M(S), so only the 2^|M(S)| sets S ∪ U with U ⊆ M(S)
need to be examined.  The scans are vectorised with numpy and processed in
chunks so memory stays bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import check_budget
from .numset import (
    NumericalSemigroup,
    NumericalSet,
    atom_masks,
    is_pseudosymmetric,
    is_symmetric,
    missing_pairs,
)

CHUNK_BITS = 18


def _chunks(nbits):
    total = 1 << nbits
    step = 1 << min(nbits, CHUNK_BITS)
    for start in range(0, total, step):
        yield np.arange(start, min(start + step, total), dtype=np.uint64)


def _spread(idx, positions):
    """Map bit j of each index to bit positions[j] of the result."""
    out = np.zeros_like(idx)
    one = np.uint64(1)
    for j, pos in enumerate(positions):
        out |= ((idx >> np.uint64(j)) & one) << np.uint64(pos)
    return out


def _scan(S, keep_masks):
    """Element masks (bits 0..F) of the sets S ∪ U, U ⊆ M(S), whose atom monoid is S.

    Returns (count, list of masks or None).
    """
    F = S.frobenius
    if F < 0:
        return 1, [0] if keep_masks else None
    M = sorted(missing_pairs(S))
    check_budget(len(M), f"P(S) for S with |M(S)| = {len(M)}")
    base = np.uint64(S.mask)
    count = 0
    kept = [] if keep_masks else None
    for idx in _chunks(len(M)):
        masks = base | _spread(idx, M)
        hit = atom_masks(masks, F) == base
        count += int(hit.sum())
        if keep_masks:
            kept.extend(int(m) for m in masks[hit])
    return count, kept


@dataclass
class AntiAtomReport:
    semigroup: NumericalSemigroup
    p_value: int
    m_size: int
    witnesses: list = field(default_factory=list)

    def to_json(self, with_witnesses=True):
        out = {"semigroup": str(self.semigroup), "P": self.p_value, "M": self.m_size}
        if with_witnesses:
            out["witnesses"] = [str(w) for w in self.witnesses]
        return out


def anti_atom(S, witnesses=True):
    """P(S) together with every numerical set whose atom monoid is S.

    Witnesses are sorted lexicographically by gap list.
    """
    S = NumericalSemigroup.of(S)
    count, masks = _scan(S, witnesses)
    found = []
    if witnesses:
        found = sorted((NumericalSet.from_mask(m, S.frobenius) for m in masks), key=lambda T: T.gaps)
    return AntiAtomReport(S, count, len(missing_pairs(S)), found)


def p_value(S):
    return _scan(NumericalSemigroup.of(S), False)[0]


@dataclass(frozen=True)
class SmallMClass:
    label: str  # "symmetric", "pseudosymmetric", "two_missing" or "other"
    m_size: int
    p_value: int


class ClassificationError(AssertionError):
    """A proven constraint linking |M(S)| and P(S) failed."""


def classify_small_m(S):
    """Classify S by |M(S)| and check the implied value of P(S).

    |M| = 0 (symmetric) forces P = 1, |M| = 1 (pseudosymmetric) forces P = 2,
    and |M| = 2 forces P in {2, 3}.
    """
    S = NumericalSemigroup.of(S)
    m = len(missing_pairs(S))
    p = p_value(S)
    if m == 0:
        label, ok = "symmetric", p == 1 and is_symmetric(S)
    elif m == 1:
        label, ok = "pseudosymmetric", p == 2 and is_pseudosymmetric(S)
    elif m == 2:
        label, ok = "two_missing", p in (2, 3)
    else:
        label, ok = "other", 1 <= p <= 2 ** m
    if not ok:
        raise ClassificationError(f"{S}: |M| = {m} but P = {p}")
    return SmallMClass(label, m, p)


def family_R(N):
    """R_N = {0, (N+1)/2} ∪ {even e : (N+1)/2 < e < N-1} ∪ [N+1, ∞), N odd >= 11."""
    if N % 2 == 0 or N < 11:
        raise ValueError(f"R_N needs odd N >= 11, got {N}")
    h = (N + 1) // 2
    elems = {0, h} | {e for e in range(h + 1, N - 1) if e % 2 == 0}
    return NumericalSemigroup(n for n in range(1, N + 1) if n not in elems)


def family_R_missing_size(N):
    """2 * ceil((N - 1) / 4)."""
    return 2 * (-(-(N - 1) // 4))


def family_S(N):
    """S_N = {0, N+1, N+2, ...}: the semigroup whose gaps are 1..N."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return NumericalSemigroup(range(1, N + 1))


def gamma(N):
    """P(S_N) / 2^(N-1), the share of numerical sets with Frobenius number N whose atom monoid is S_N."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    check_budget(N - 1, f"gamma({N})")
    return Fraction(p_value(family_S(N)), 2 ** (N - 1))


def _frobenius_masks(N):
    """Element masks of all 2^(N-1) numerical sets with Frobenius number N, in chunks."""
    one = np.uint64(1)
    for idx in _chunks(N - 1):
        # bit 0 (zero) always set, bits 1..N-1 free, bit N (the Frobenius gap) clear
        yield (idx << one) | one


def semigroups_with_frobenius(N):
    """All numerical semigroups with Frobenius number N, by exhaustive subset scan."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    check_budget(N - 1, f"semigroups with Frobenius number {N}")
    out = []
    for masks in _frobenius_masks(N):
        closed = atom_masks(masks, N) == masks
        out.extend(NumericalSemigroup.from_mask(int(m), N) for m in masks[closed])
    return sorted(out, key=lambda S: S.gaps)


def count_semigroups_by_frobenius(N):
    """S(N): number of numerical semigroups with Frobenius number N."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    check_budget(N - 1, f"semigroups with Frobenius number {N}")
    return sum(int((atom_masks(m, N) == m).sum()) for m in _frobenius_masks(N))


def backelin_bound(N):
    """Upper bound 4 * 2^floor((N-1)/2) on S(N)."""
    return 4 * 2 ** ((N - 1) // 2)


def semigroup_share(N):
    """S(N) / 2^(N-1)."""
    return Fraction(count_semigroups_by_frobenius(N), 2 ** (N - 1))


"""Integer partitions, hook lengths, and the profile-walk bijection with numerical sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .numset import NumericalSet


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; row 1 is the top (longest) row."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(b > a for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @classmethod
    def parse(cls, text):
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"partition must be parenthesised, e.g. (4,2,2): {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls(())
        try:
            return cls(tuple(int(s) for s in inner.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    def to_json(self):
        return {"parts": list(self.parts)}


@dataclass(frozen=True)
class HookData:
    hook_set: frozenset
    hook_multiset: Counter
    grid: tuple  # grid[i][j] = hook length of cell (i+1, j+1)


def conjugate(lam):
    """Transpose: part j of the result counts parts of ``lam`` that are >= j."""
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def hooks(lam):
    cols = conjugate(lam).parts
    grid = tuple(
        tuple(row - j + cols[j] - i - 1 for j in range(row))
        for i, row in enumerate(lam.parts)
    )
    multiset = Counter(h for row in grid for h in row)
    return HookData(frozenset(multiset), multiset, grid)


def is_a_core(lam, a):
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    return a not in hooks(lam).hook_set


def phi(T):
    """Partition whose profile, read from the bottom-left, is the walk of T.

    Walking n = 0, 1, ..., F(T): step right when n is in T, up when it is a gap.
    Each up-step closes a row whose length is the number of right-steps so far.
    """
    rows = []
    right = 0
    for n in range(T.frobenius + 1):
        if n in T:
            right += 1
        else:
            rows.append(right)
    return Partition(tuple(reversed(rows)))


def phi_inverse(lam):
    """Numerical set whose gaps label the vertical steps of the profile of ``lam``."""
    gaps = []
    label = 0
    prev = 0
    for row in reversed(lam.parts):
        label += row - prev
        gaps.append(label)
        label += 1
        prev = row
    return NumericalSet(gaps)


def render(lam, show_hooks=True):
    """ASCII Young diagram; cells carry their hook length when ``show_hooks``."""
    if not lam.parts:
        return "(empty partition)"
    grid = hooks(lam).grid
    width = max(len(str(h)) for row in grid for h in row) if show_hooks else 1
    lines = []
    for row in grid:
        cells = [str(h).rjust(width) if show_hooks else "#" for h in row]
        lines.append("[" + "][".join(cells) + "]")
    return "\n".join(lines)

"""Apéry-tuple coordinates for a-cores.

For a numerical set T with a in A(T), ``x_i`` is defined by ``a*x_i + i``
being the least element of T congruent to i mod a.  This identifies the
a-cores with N^(a-1); genus, Frobenius number and partition size all have
simple expressions in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .numset import NumericalSet, atom_mask


@dataclass(frozen=True)
class AperyTuple:
    a: int
    x: tuple

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        if self.a < 2:
            raise ValueError(f"modulus must be >= 2, got {self.a}")
        if len(x) != self.a - 1:
            raise ValueError(f"expected {self.a - 1} coordinates, got {len(x)}")
        if any(v < 0 for v in x):
            raise ValueError(f"coordinates must be nonnegative: {x}")
        object.__setattr__(self, "x", x)

    def __getitem__(self, i):
        """1-based coordinate access, ``t[i] == x_i``."""
        if not 1 <= i <= self.a - 1:
            raise IndexError(i)
        return self.x[i - 1]

    def is_origin(self):
        return not any(self.x)

    def __str__(self):
        return f"a={self.a};[" + ",".join(str(v) for v in self.x) + "]"

    @classmethod
    def parse(cls, text):
        head, _, body = text.partition(";")
        head = head.strip()
        if not head.startswith("a=") or not body.strip().startswith("["):
            raise ValueError(f"expected 'a=4;[0,2,1]', got {text!r}")
        a = int(head[2:])
        inner = body.strip()[1:-1].strip()
        return cls(a, tuple(int(s) for s in inner.split(",")) if inner else ())

    def to_json(self):
        return {"a": self.a, "x": list(self.x)}


def apery_of(T, a):
    if a < 2:
        raise ValueError(f"modulus must be >= 2, got {a}")
    if a <= T.frobenius and not (atom_mask(T.mask, T.frobenius) >> a) & 1:
        raise ValueError(f"{a} is not in A({T}): not an a-core coordinate system")
    x = []
    for i in range(1, a):
        n = i
        while n not in T:
            n += a
        x.append((n - i) // a)
    return AperyTuple(a, tuple(x))


def set_from_apery(t):
    a = t.a
    return NumericalSet(sorted(a * m + i for i in range(1, a) for m in range(t[i])))


def genus_of(t):
    return sum(t.x)


def frobenius_of(t):
    if t.is_origin():
        raise ValueError("the origin corresponds to N, which has no Frobenius number")
    return max(t.a * xi + i - t.a for i, xi in enumerate(t.x, start=1))


def size_of(t):
    """Number of boxes of phi(T) as a quadratic function of the Apéry tuple."""
    a = t.a
    g = sum(t.x)
    twice = a * sum(v * (v - 1) for v in t.x) + 2 * sum(i * v for i, v in enumerate(t.x, 1)) - g * (g - 1)
    return twice // 2


def size_of_expanded(t):
    """Second closed form of the size function; kept as an independent cross-check."""
    a = t.a
    x = t.x
    half = Fraction(a - 1, 2)
    total = half * sum(v * v for v in x)
    total += sum((i - half) * v for i, v in enumerate(x, 1))
    total -= sum(x[i] * x[j] for i in range(len(x)) for j in range(i + 1, len(x)))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral size {total} for {t}")
    return int(total)


def conjugate_apery(t):
    """Apéry tuple of the dual set, i.e. of the conjugate partition."""
    if t.is_origin():
        return t
    a = t.a
    ell = frobenius_of(t) % a
    xl = t[ell]
    out = []
    for i in range(1, a):
        if i < ell:
            out.append(xl - t[ell - i])
        elif i == ell:
            out.append(xl)
        else:
            out.append(xl - t[a + ell - i] - 1)
    return AperyTuple(a, tuple(out))


def is_semigroup_tuple(t):
    """Closure of set_from_apery(t) under addition, as linear inequalities on x.

    Sums i + j == a land on multiples of a, which are always present.
    """
    a = t.a
    for i in range(1, a):
        for j in range(i, a):
            s = i + j
            if s < a and t[i] + t[j] < t[s]:
                return False
            if s > a and t[i] + t[j] + 1 < t[s - a]:
                return False
    return True


def count_acores_by_max_hook(a, k, l):
    """a-cores whose largest hook is a*k + l."""
    if not 1 <= l <= a - 1:
        raise ValueError(f"l must lie in [1, {a - 1}], got {l}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return (k + 2) ** (l - 1) * (k + 1) ** (a - l - 1)


def count_acores_max_hook_below(a, k):
    """a-cores whose largest hook is less than a*k."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return (k + 1) ** (a - 1)


def count_acores_by_parts(a, g, at_most=False):
    # a = 1 is allowed for at_most: the empty partition is the only 1-core
    if g < 0 or a < (1 if at_most else 2):
        raise ValueError(f"invalid arguments a={a}, g={g}, at_most={at_most}")
    if at_most:
        return comb(g + a - 1, a - 1)
    return comb(g + a - 2, a - 2)

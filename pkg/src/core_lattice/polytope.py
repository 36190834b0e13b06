"""Core polytopes and oversemigroup polytopes in Apéry coordinates.

Simultaneous (a, b_1, ..., b_m)-cores are the integer points of a rational
polytope in R^(a-1); numerical semigroups containing <a, b> are the integer
points of a smaller polytope inside it.  Both are represented as
:class:`InequalitySystem` objects and enumerated exactly.
"""

from __future__ import annotations

import heapq
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import comb, gcd

from .apery import AperyTuple, apery_of, genus_of, set_from_apery, size_of
from .numset import is_symmetric, semigroup_from_generators


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x <= bound``."""

    coeffs: tuple
    bound: int

    def holds(self, x):
        return sum(c * v for c, v in zip(self.coeffs, x)) <= self.bound

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs, 1):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}x{i}")
        lhs = " ".join(terms).lstrip("+ ") if terms else "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} <= {self.bound}"


@dataclass(frozen=True)
class InequalitySystem:
    """Constraints ``coeffs . x <= bound`` plus the implicit ``x >= 0``."""

    dim: int
    constraints: tuple = field(default=())

    def __post_init__(self):
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError(f"constraint {c} has length {len(c.coeffs)}, expected {self.dim}")

    def contains(self, x):
        return len(x) == self.dim and all(v >= 0 for v in x) and all(c.holds(x) for c in self.constraints)

    def __str__(self):
        return "\n".join(str(c) for c in self.constraints)


def _unit(dim, i, scale=1):
    v = [0] * dim
    v[i - 1] += scale
    return v


def _system(dim, rows):
    seen = []
    for coeffs, bound in rows:
        c = Constraint(tuple(coeffs), bound)
        if c not in seen:
            seen.append(c)
    return InequalitySystem(dim, tuple(seen))


def _check_core_args(a, bs):
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if not bs:
        raise ValueError("at least one b is required")
    for b in bs:
        if b < 1:
            raise ValueError(f"b must be positive, got {b}")
        if b % a == 0:
            raise ValueError(f"b divisible by a: {a} | {b}")
    if reduce(gcd, bs, a) != 1:
        raise ValueError(f"gcd{(a, *bs)} != 1: unbounded cone")


def core_polytope(a, bs):
    """Inequalities whose integer points are the (a, b_1, ..., b_m)-cores."""
    bs = list(bs)
    _check_core_args(a, bs)
    dim = a - 1
    rows = []
    for b in bs:
        k, ell = divmod(b, a)
        rows.append((_unit(dim, ell), k))
        for i in range(1, a):
            if i + ell < a:
                v = _unit(dim, i + ell)
                v[i - 1] -= 1
                rows.append((v, k))
            elif i + ell > a:
                v = _unit(dim, i + ell - a)
                v[i - 1] -= 1
                rows.append((v, k + 1))
    return _system(dim, rows)


def coordinate_bounds(a, bs):
    """Componentwise upper bounds for integer points of the core polytope.

    x_i is at most the cheapest way to write i = sum y_j l_j (mod a), paying
    k_j + 1 per use of l_j.  Computed by Dijkstra on Z/a.
    """
    bs = list(bs)
    _check_core_args(a, bs)
    steps = [(b % a, b // a + 1) for b in bs]
    dist = [None] * a
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for ell, w in steps:
            nr = (r + ell) % a
            if dist[nr] is None or d + w < dist[nr]:
                dist[nr] = d + w
                heapq.heappush(heap, (d + w, nr))
    return tuple(dist[1:])


def _plan(system):
    """Group constraints by their last variable so each is checked once it is fully determined."""
    plan = [[] for _ in range(system.dim)]
    for c in system.constraints:
        nz = [i for i, v in enumerate(c.coeffs) if v]
        if not nz:
            if c.bound < 0:
                return None
            continue
        d = nz[-1]
        plan[d].append((c.coeffs[d], tuple((i, c.coeffs[i]) for i in nz[:-1]), c.bound))
    return plan


def enumerate_lattice_points(system, bounds, first=None):
    """Integer points of ``system`` inside the box ``[0, bounds]``, in lexicographic order.

    Depth-first over x_1, x_2, ...; at depth d every constraint whose last
    variable is x_d is turned into an interval for x_d, so dead prefixes are
    cut immediately.  ``first`` optionally restricts x_1 to an iterable of values.
    """
    plan = _plan(system)
    dim = system.dim
    if plan is None or dim == 0:
        return
    if len(bounds) != dim:
        raise ValueError(f"need {dim} bounds, got {len(bounds)}")
    x = [0] * dim
    allowed_first = None if first is None else set(first)

    def rec(d):
        lo, hi = 0, bounds[d]
        for cd, rest, b in plan[d]:
            r = b - sum(v * x[i] for i, v in rest)
            if cd > 0:
                hi = min(hi, r // cd)
            else:
                lo = max(lo, -(-r // cd))
        for v in range(lo, hi + 1):
            if d == 0 and allowed_first is not None and v not in allowed_first:
                continue
            x[d] = v
            if d == dim - 1:
                yield tuple(x)
            else:
                yield from rec(d + 1)

    yield from rec(0)


@dataclass
class SizeStats:
    """Exact size statistics of a finite set of partitions given by Apéry tuples."""

    count: int = 0
    max_size: int = -1
    argmax: AperyTuple | None = None
    argmax_count: int = 0
    sum_size: int = 0
    sum_sq: int = 0

    def add(self, t, size=None):
        if size is None:
            size = size_of(t)
        self.count += 1
        self.sum_size += size
        self.sum_sq += size * size
        if size > self.max_size:
            self.max_size, self.argmax, self.argmax_count = size, t, 1
        elif size == self.max_size:
            self.argmax_count += 1
            if t.x < self.argmax.x:
                self.argmax = t

    def merge(self, other):
        out = SizeStats(
            self.count + other.count,
            self.max_size,
            self.argmax,
            self.argmax_count,
            self.sum_size + other.sum_size,
            self.sum_sq + other.sum_sq,
        )
        if other.max_size > self.max_size:
            out.max_size, out.argmax, out.argmax_count = other.max_size, other.argmax, other.argmax_count
        elif other.max_size == self.max_size and other.argmax is not None:
            out.argmax_count += other.argmax_count
            if out.argmax is None or other.argmax.x < out.argmax.x:
                out.argmax = other.argmax
        return out

    @property
    def mean(self):
        return Fraction(self.sum_size, self.count)

    @property
    def variance(self):
        return Fraction(self.sum_sq, self.count) - self.mean ** 2

    @property
    def unique_argmax(self):
        return self.argmax_count == 1


def stats_of_points(points):
    st = SizeStats()
    for t in points:
        st.add(t)
    return st


def _core_stats_slice(args):
    a, bs, first = args
    system = core_polytope(a, bs)
    bounds = coordinate_bounds(a, bs)
    return stats_of_points(AperyTuple(a, x) for x in enumerate_lattice_points(system, bounds, first))


def core_points(a, bs):
    system = core_polytope(a, bs)
    return [AperyTuple(a, x) for x in enumerate_lattice_points(system, coordinate_bounds(a, bs))]


def core_stats(a, bs, jobs=1):
    """Count, largest size (with argmax) and exact mean of the (a, b_1, ...)-cores.

    With ``jobs > 1`` the range of x_1 is split across worker processes; the
    fold is associative so the result is identical to the serial one.
    """
    bs = list(bs)
    if jobs <= 1 or a == 2:
        return _core_stats_slice((a, bs, None))
    top = coordinate_bounds(a, bs)[0]
    slices = [(a, bs, range(j, top + 1, jobs)) for j in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_core_stats_slice, slices))
    return reduce(SizeStats.merge, parts, SizeStats())


def anderson_count(a, b):
    """Number of (a, b)-cores for coprime a, b: C(a+b, a) / (a+b)."""
    n, r = divmod(comb(a + b, a), a + b)
    assert r == 0
    return n


def olsson_stanton_max(a, b):
    """Size of the largest (a, b)-core: (a^2-1)(b^2-1)/24."""
    n, r = divmod((a * a - 1) * (b * b - 1), 24)
    assert r == 0
    return n


def armstrong_mean(a, b):
    """Average size of an (a, b)-core: (a+b+1)(a-1)(b-1)/24."""
    return Fraction((a + b + 1) * (a - 1) * (b - 1), 24)


# --- oversemigroups -------------------------------------------------------


def _check_pair(a, b):
    if a < 2 or b < 1:
        raise ValueError(f"need a >= 2 and b >= 1, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1: unbounded cone")
    if b % a == 0:
        raise ValueError(f"b divisible by a: {a} | {b}")


def oversemigroup_polytope(a, b):
    """Apéry tuples (w.r.t. a) of numerical semigroups containing <a, b>.

    Closure under addition gives x_{i+j} <= x_i + x_j (i+j < a) and
    x_{i+j-a} <= x_i + x_j + 1 (i+j > a); containing <a, b> means lying
    below the Apéry tuple of <a, b> componentwise.
    """
    _check_pair(a, b)
    dim = a - 1
    rows = []
    for i in range(1, a):
        for j in range(i, a):
            s = i + j
            if s == a:
                continue
            v = _unit(dim, s if s < a else s - a)
            v[i - 1] -= 1
            v[j - 1] -= 1
            rows.append((v, 0 if s < a else 1))
    cap = apery_of(semigroup_from_generators([a, b]), a)
    for i in range(1, a):
        rows.append((_unit(dim, i), cap[i]))
    return _system(dim, rows)


def oversemigroup_points(a, b):
    system = oversemigroup_polytope(a, b)
    cap = apery_of(semigroup_from_generators([a, b]), a)
    return [AperyTuple(a, x) for x in enumerate_lattice_points(system, cap.x)]


def count_oversemigroups(a, b):
    """O(<a, b>): number of numerical semigroups containing a and b."""
    return len(oversemigroup_points(a, b))


def oversemigroup_closed_form(a, b):
    """Closed form for O(<a, b>) when a is 2, 3 or 4."""
    _check_pair(a, b)
    if a == 2:
        return (b - 1) // 2 + 1
    if a == 3:
        k, ell = divmod(b, 6)
        return (3 * k + ell) * (k + 1)
    if a == 4:
        k, ell = divmod(b, 12)
        quad, lin, const = OVERS4_CHART[ell]
        return 24 * k ** 3 + quad * k ** 2 + lin * k + const
    raise ValueError(f"no closed form for a = {a}")


# l -> (k^2, k, 1) coefficients; the k^3 coefficient is 24 throughout
OVERS4_CHART = {
    1: (30, 11, 1),
    3: (42, 23, 4),
    5: (54, 39, 9),
    7: (66, 59, 17),
    9: (78, 83, 29),
    11: (90, 111, 45),
}


def stratify_oversemigroups(a, b, key="genus"):
    """Histogram of oversemigroups of <a, b> by genus or by an Apéry coordinate.

    ``key`` is ``"genus"`` or an integer i selecting x_i.
    """
    pts = oversemigroup_points(a, b)
    if key == "genus":
        return dict(sorted(Counter(genus_of(t) for t in pts).items()))
    return dict(sorted(Counter(t[key] for t in pts).items()))


def count_oversemigroups_by_genus(a, b):
    """Stratified oversemigroup counts with known closed forms.

    a = 3: by genus n.  a = 4: by the middle Apéry coordinate x_2.
    """
    if a == 3:
        return stratify_oversemigroups(a, b, "genus")
    if a == 4:
        return stratify_oversemigroups(a, b, 2)
    raise ValueError(f"stratified closed forms exist only for a in {{3, 4}}, got {a}; "
                     "use stratify_oversemigroups for raw counts")


def genus_stratum_formula(k, ell, n):
    """Oversemigroups of <3, 6k+l> with genus n."""
    if not 0 <= n <= 6 * k + ell - 1:
        return 0
    # n <= 3k + l/2 - 1, compared exactly
    if 2 * n <= 6 * k + ell - 2:
        return n // 3 + 1
    return (6 * k + ell - 1 - n) // 3 + 1


def middle_stratum_formula(k, n):
    """Oversemigroups of <4, 12k+1> whose Apéry tuple has middle entry n."""
    if not 0 <= n <= 6 * k:
        return 0
    if n <= 2 * k:
        val = (n + 1) * (6 * k - Fraction(3 * n, 2) + 1)
    else:
        ceil_half = -(-n // 2)
        r = 3 * k - n // 2
        val = (n + 1) * (3 * k - ceil_half + 1) + Fraction(r * (r + 1), 2)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral stratum count {val}")
    return int(val)


def count_symmetric_oversemigroups(a, b):
    return sum(1 for t in oversemigroup_points(a, b) if is_symmetric(set_from_apery(t)))


def symmetric_overs3_formula(k, ell):
    """Symmetric semigroups containing <3, 6k+l>: 3k + 3l/2 - l^2/6 - 1/3."""
    val = 3 * k + Fraction(3 * ell, 2) - Fraction(ell * ell, 6) - Fraction(1, 3)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral count {val}")
    return int(val)


RATIO_LIMITS = {2: Fraction(1), 3: Fraction(1, 2), 4: Fraction(1, 3)}


@dataclass(frozen=True)
class RatioRow:
    b: int
    oversemigroups: int
    cores: int

    @property
    def ratio(self):
        return Fraction(self.oversemigroups, self.cores)


def semigroup_core_ratio(a, b_limit):
    """O(<a, b>) / C(a, b) for every b in (a, b_limit] coprime to a."""
    if a not in RATIO_LIMITS:
        raise ValueError(f"ratio table is defined for a in {sorted(RATIO_LIMITS)}, got {a}")
    return [
        RatioRow(b, count_oversemigroups(a, b), anderson_count(a, b))
        for b in range(a + 1, b_limit + 1)
        if gcd(a, b) == 1
    ]

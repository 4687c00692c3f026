"""Slanted Dyck paths avoiding a forbidden set, and the inverse construction.

Paths run from (0, 0) to (k, n) in the sheared frame with right steps (0, 1)
and up-right steps (1, 1), staying weakly above the line of slope k/n; the
shear (a, b) -> (a, a + b) identifies them with up/right paths above the
diagonal of the k x (n-k) rectangle.  Lattice points ON the slanted diagonal
are admitted by the dynamic program: for every genuine inversion set the
interior diagonal points are forbidden anyway, and for arbitrary user sets
the weak rule is the documented behaviour.  Forbidden points below the
diagonal are accepted and never reached.

The inverse direction goes through concave profiles: height sequences
H_0..H_n with increments in (0, 1), weakly decreasing, and pairwise distinct
fractional parts.  Ranking the fractional parts yields a repetition-free
permutation whose inversion set is exactly the profile's forbidden region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .affine import BoundedAffinePerm
from .errors import (
    InvalidProfile,
    NotCentrallySymmetric,
    NotConvex,
    PosicatError,
    SynthesisFailed,
    TooManyPaths,
)
from .invsets import (
    Point,
    inversion_multiset,
    is_convex_points,
    rect_to_sheared,
)

# ---------------------------------------------------------------------------
# path counting
# ---------------------------------------------------------------------------

def _admissible(a: int, b: int, k: int, n: int, forbidden: frozenset[Point]) -> bool:
    if b == 0 or b == n:
        return (a == 0) if b == 0 else (a == k)
    return a * n >= k * b and (a, b) not in forbidden


def count_avoiding_paths(k: int, n: int, forbidden: Iterable[Point]) -> int:
    """Number of slanted Dyck paths from (0,0) to (k,n) avoiding `forbidden`
    (sheared-frame points).  Column-major dynamic program, O(k) state."""
    fset = frozenset((int(a), int(b)) for a, b in forbidden)
    ways = {0: 1}
    for b in range(1, n + 1):
        nxt: dict[int, int] = {}
        for a in range(0, k + 1):
            total = ways.get(a, 0) + ways.get(a - 1, 0)
            if total and _admissible(a, b, k, n, fset):
                nxt[a] = total
        ways = nxt
    return ways.get(k, 0)


def enumerate_avoiding_paths(
    k: int, n: int, forbidden: Iterable[Point], cap: int = 10000
) -> list[list[Point]]:
    """Explicit point sequences of all avoiding paths; raises TooManyPaths
    when the count exceeds `cap`."""
    total = count_avoiding_paths(k, n, forbidden)
    if total > cap:
        raise TooManyPaths(f"{total} paths exceed the cap of {cap}")
    fset = frozenset((int(a), int(b)) for a, b in forbidden)
    out: list[list[Point]] = []
    path: list[Point] = [(0, 0)]

    def walk(a: int, b: int) -> None:
        if b == n:
            if a == k:
                out.append(list(path))
            return
        for step in (0, 1):
            na, nb = a + step, b + 1
            if na > k or not _admissible(na, nb, k, n, fset):
                continue
            path.append((na, nb))
            walk(na, nb)
            path.pop()

    walk(0, 0)
    assert len(out) == total
    return out


# ---------------------------------------------------------------------------
# concave profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConcaveProfile:
    """Exact-rational heights H_0 = 0, ..., H_n = k satisfying the three
    profile conditions; `validate_profile` reports violations."""

    heights: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.heights) - 1

    @property
    def k(self) -> int:
        return int(self.heights[-1])

    def fractional_parts(self) -> list[Fraction]:
        return [h - math.floor(h) for h in self.heights[:-1]]

    def as_json(self) -> list[list[int]]:
        return [[h.numerator, h.denominator] for h in self.heights]


def validate_profile(
    heights: Sequence[Fraction | int], k: int, n: int
) -> tuple[bool, list[str]]:
    """Check the three profile conditions exactly; returns (ok, violations)."""
    H = [Fraction(h) for h in heights]
    problems: list[str] = []
    if len(H) != n + 1:
        return False, [f"expected {n + 1} heights, got {len(H)}"]
    if H[0] != 0:
        problems.append(f"H_0 = {H[0]} != 0")
    if H[n] != k:
        problems.append(f"H_n = {H[n]} != {k}")
    increments = [H[i + 1] - H[i] for i in range(n)]
    for i, d in enumerate(increments):
        if not 0 < d < 1:
            problems.append(f"increment H_{i + 1} - H_{i} = {d} outside (0, 1)")
    for i in range(n - 1):
        if increments[i] < increments[i + 1]:
            problems.append(
                f"increment rises at {i + 1}: {increments[i]} < {increments[i + 1]}"
            )
    fracs = [h - math.floor(h) for h in H[:n]]
    if len(set(fracs)) != n:
        problems.append("fractional parts collide")
    return not problems, problems


def profile_forbidden_set(profile: ConcaveProfile) -> set[Point]:
    """Sheared points (a, b) with k - H_{n-b} <= a <= H_b."""
    H = profile.heights
    k, n = profile.k, profile.n
    out = set()
    for b in range(1, n):
        for a in range(1, k):
            if k - H[n - b] <= a <= H[b]:
                out.add((a, b))
    return out


def profile_to_perm(profile: ConcaveProfile | Sequence[Fraction]) -> BoundedAffinePerm:
    """The permutation whose orbit of 0 is order-isomorphic to the profile's
    fractional parts: rank h_r to obtain the r-th orbit value modulo n."""
    if not isinstance(profile, ConcaveProfile):
        profile = ConcaveProfile(tuple(Fraction(h) for h in profile))
    n, k = profile.n, profile.k
    ok, problems = validate_profile(profile.heights, k, n)
    if not ok:
        raise InvalidProfile("; ".join(problems))
    fracs = profile.fractional_parts()
    order = sorted(range(n), key=lambda r: fracs[r])
    rank = [0] * n
    for position, r in enumerate(order):
        rank[r] = position
    # the orbit of 0 visits residue rank[r] at time r, which is exactly the
    # cycle notation (0, j_1, ..., j_{n-1})
    return BoundedAffinePerm.from_cycle(rank)


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------

def _upper_hull_heights(points: set[Point], k: int, n: int) -> list[Fraction]:
    """Exact heights of the upper hull of points + {(0,0), (k,n)} at each
    integer abscissa b = 0..n (points are sheared (a, b); x = b, y = a)."""
    xy = sorted({(b, a) for a, b in points} | {(0, 0), (n, k)})
    hull: list[tuple[int, int]] = []
    for p in xy:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    heights = []
    seg = 0
    for b in range(n + 1):
        while seg + 1 < len(hull) - 1 and hull[seg + 1][0] <= b:
            seg += 1
        (x1, y1), (x2, y2) = hull[seg], hull[seg + 1]
        heights.append(Fraction(y1 * (x2 - b) + y2 * (b - x1), x2 - x1))
    return heights


def _require_cs_convex(points: set[Point], k: int, n: int) -> None:
    """Validate a sheared forbidden set: centrally symmetric and convex."""
    delta = (k, n)
    for a, b in points:
        if not (1 <= a <= k - 1 and 1 <= b <= n - 1):
            raise PosicatError(f"point {(a, b)} outside [1,{k - 1}]x[1,{n - 1}]")
        if (delta[0] - a, delta[1] - b) not in points:
            raise NotCentrallySymmetric(f"missing mirror of {(a, b)}")
    rect = {(a, b - a) for a, b in points}
    if not is_convex_points(rect, k, n - k):
        raise NotConvex(f"{sorted(points)} misses lattice points of its hull")


def synthesize_profile(
    forbidden_sheared: Iterable[Point], k: int, n: int
) -> ConcaveProfile:
    """A concave profile whose forbidden region is exactly the given set.

    The heights are the hull heights of the set plus a strictly concave
    positive perturbation eps_b = c * b(n-b) * (s*8n^2 + b) / (8n^2 * s) with
    c = 2^-m; the b-dependent factor breaks the symmetric fractional-part
    ties a centrally symmetric hull would otherwise force.  Candidates over
    the deterministic (m, s) schedule are validated exactly and the first
    success wins; existence is guaranteed for small enough perturbations, so
    exhausting the schedule signals a bug.
    """
    points = {(int(a), int(b)) for a, b in forbidden_sheared}
    _require_cs_convex(points, k, n)
    hull = _upper_hull_heights(points, k, n)
    denom = 8 * n * n
    for m in range(2, 64):
        c = Fraction(1, 2 ** m)
        for s in (1, 2, 3):
            eps = [
                c * b * (n - b) * Fraction(s * denom + b, denom * s)
                for b in range(n + 1)
            ]
            heights = tuple(hull[b] + eps[b] for b in range(n + 1))
            ok, _ = validate_profile(heights, k, n)
            if not ok:
                continue
            profile = ConcaveProfile(heights)
            if profile_forbidden_set(profile) == points:
                return profile
    raise SynthesisFailed(f"schedule exhausted for {sorted(points)} in ({k}, {n})")


def synthesize_perm(
    forbidden_rect: Iterable[Point], k: int, n: int
) -> BoundedAffinePerm:
    """A repetition-free permutation with the given rectangular-frame
    inversion set; the set must be centrally symmetric and convex.

    Postconditions are asserted: the result is repetition-free, its
    inversion set equals the input, and its orbit floors match the profile
    floors.
    """
    rect = {(int(a), int(b)) for a, b in forbidden_rect}
    sheared = {rect_to_sheared(p) for p in rect}
    profile = synthesize_profile(sheared, k, n)
    perm = profile_to_perm(profile)
    ms = inversion_multiset(perm)
    assert ms.is_set(), "synthesized permutation has repeated inversion types"
    assert set(ms.points()) == rect, (
        f"synthesized set {ms.points()} differs from requested {sorted(rect)}"
    )
    orbit_value = 0
    for r in range(n + 1):
        assert orbit_value // n == math.floor(profile.heights[r]), (
            f"orbit floor mismatch at r={r}"
        )
        if r < n:
            orbit_value = perm(orbit_value)
    return perm

"""Inversion multisets, their symmetry and convexity, and derived statistics.

The multiset of a single-cycle bounded permutation records, for every
inversion, the type (k_1, n_1 - k_1) of the first resolution factor.  Two
coordinate frames are used: RECT keeps (k_1, n_1 - k_1) inside the open
rectangle [1, k-1] x [1, n-k-1], SHEARED applies (a, b) -> (a, a + b) and
lives in [1, k-1] x [1, n-1].  The shear is unimodular, so convexity and
lattice-point counts agree between frames.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .affine import BoundedAffinePerm
from .errors import NotRepetitionFree, PosicatError, PreconditionViolated

Point = tuple[int, int]

RECT = "rect"
SHEARED = "sheared"


def rect_to_sheared(p: Point) -> Point:
    return (p[0], p[0] + p[1])


def sheared_to_rect(p: Point) -> Point:
    return (p[0], p[1] - p[0])


@dataclass
class LatticeMultiset:
    """Multiset of lattice points in a frame with its central-symmetry vector.

    `delta` is (k, n-k) in the RECT frame and (k, n) in the SHEARED frame;
    entries map points to positive multiplicities.
    """

    frame: str
    delta: Point
    entries: dict[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.frame not in (RECT, SHEARED):
            raise PosicatError(f"unknown frame {self.frame!r}")
        self.entries = {tuple(p): int(m) for p, m in self.entries.items() if m}
        if any(m < 0 for m in self.entries.values()):
            raise PosicatError("negative multiplicity")

    @classmethod
    def from_points(
        cls, points: Iterable[Point], frame: str, k: int, n: int
    ) -> "LatticeMultiset":
        delta = (k, n - k) if frame == RECT else (k, n)
        entries: dict[Point, int] = {}
        for p in points:
            p = (int(p[0]), int(p[1]))
            entries[p] = entries.get(p, 0) + 1
        return cls(frame, delta, entries)

    # -- views ----------------------------------------------------------------

    def multiplicity(self, p: Point) -> int:
        return self.entries.get(tuple(p), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def points(self) -> list[Point]:
        return sorted(self.entries)

    def is_set(self) -> bool:
        return all(m == 1 for m in self.entries.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticeMultiset)
            and self.frame == other.frame
            and self.delta == other.delta
            and self.entries == other.entries
        )

    # -- frame conversion --------------------------------------------------------

    def converted(self, frame: str) -> "LatticeMultiset":
        if frame == self.frame:
            return LatticeMultiset(self.frame, self.delta, dict(self.entries))
        conv = rect_to_sheared if frame == SHEARED else sheared_to_rect
        k, second = self.delta
        delta = (k, k + second) if frame == SHEARED else (k, second - k)
        return LatticeMultiset(frame, delta, {conv(p): m for p, m in self.entries.items()})

    def to_rect(self) -> "LatticeMultiset":
        return self.converted(RECT)

    def to_sheared(self) -> "LatticeMultiset":
        return self.converted(SHEARED)

    # -- text and JSON -------------------------------------------------------------

    def text(self) -> str:
        """`1,1;2,3` with entries repeated by multiplicity, sorted."""
        items: list[Point] = []
        for p in self.points():
            items.extend([p] * self.entries[p])
        return ";".join(f"{a},{b}" for a, b in items)

    def as_json(self) -> str:
        k, second = self.delta
        points: list[list[int]] = []
        for p in self.points():
            points.extend([list(p)] * self.entries[p])
        m = second if self.frame == RECT else second - k
        return json.dumps({"frame": self.frame, "k": k, "m": m, "points": points})


def parse_forbidden(text: str) -> list[Point]:
    """Parse the `1,1;2,3` point-list format; empty string means no points."""
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise PosicatError(f"bad point {chunk!r} in forbidden set")
        out.append((int(parts[0]), int(parts[1])))
    return out


# ---------------------------------------------------------------------------
# the inversion multiset and its properties
# ---------------------------------------------------------------------------

def inversion_multiset(perm: BoundedAffinePerm, frame: str = RECT) -> LatticeMultiset:
    """Resolve every crossing and collect the first factor's type."""
    perm.require_theta()
    entries: dict[Point, int] = {}
    for inv in perm.inversions():
        _, _, gammas = perm.resolve_crossing(inv)
        p = gammas.gamma1
        entries[p] = entries.get(p, 0) + 1
    ms = LatticeMultiset(RECT, (perm.k, perm.n - perm.k), entries)
    return ms.converted(frame)


def is_repetition_free(perm: BoundedAffinePerm) -> bool:
    """True iff all multiplicities are 1, i.e. the multiset has length(f)
    distinct points."""
    return inversion_multiset(perm).is_set()


def is_centrally_symmetric(ms: LatticeMultiset) -> bool:
    """multiplicity(p) == multiplicity(delta - p) for every point."""
    dk, dn = ms.delta
    return all(
        ms.multiplicity((dk - p[0], dn - p[1])) == m for p, m in ms.entries.items()
    )


# -- exact integer convex hulls ------------------------------------------------

def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Counterclockwise hull via the monotone chain, integer arithmetic only.

    Collinear boundary points are dropped; a degenerate hull (all points on
    one segment) comes back with fewer than three vertices.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    # all collinear: the hull degenerates to the extreme segment
    return hull if len(hull) >= 3 else [pts[0], pts[-1]]


def hull_lattice_points(points: Iterable[Point]) -> set[Point]:
    """All lattice points inside or on the convex hull of `points`."""
    pts = set(points)
    if not pts:
        return set()
    hull = convex_hull(pts)
    if len(hull) <= 2:
        if len(hull) == 1:
            return pts
        (x1, y1), (x2, y2) = hull
        g = math.gcd(abs(x2 - x1), abs(y2 - y1))
        return {
            (x1 + t * (x2 - x1) // g, y1 + t * (y2 - y1) // g) for t in range(g + 1)
        }
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            q = (x, y)
            if all(
                _cross(hull[i], hull[(i + 1) % len(hull)], q) >= 0
                for i in range(len(hull))
            ):
                out.add(q)
    return out


def is_convex_points(points: Iterable[Point], k: int, m: int) -> bool:
    """Lattice convexity of a RECT-frame set inside [1, k-1] x [1, m-1].

    The set is augmented with the frame corners (0, 0) and (k, m); it is
    convex when the augmented set contains every lattice point of its hull.
    """
    aug = set(points) | {(0, 0), (k, m)}
    return hull_lattice_points(aug) <= aug


def is_convex(ms: LatticeMultiset) -> bool:
    """Lattice convexity of a multiset with multiplicities all equal to 1.

    Either frame is accepted; the shear is unimodular so the answer matches
    the RECT-frame definition.
    """
    if not ms.is_set():
        return False
    rect = ms.to_rect()
    k, m = rect.delta
    return is_convex_points(rect.points(), k, m)


# -- extremal sets ----------------------------------------------------------------

def f_min(k: int, n: int) -> set[Point]:
    """Sheared-frame points with the same slope as (k, n); empty iff gcd = 1."""
    return {(a, b) for a in range(1, k) for b in range(1, n) if a * n == k * b}


def f_max(k: int, n: int) -> set[Point]:
    """Sheared image of the full open rectangle [1, k-1] x [1, n-k-1]."""
    return {
        rect_to_sheared((a, b)) for a in range(1, k) for b in range(1, n - k)
    }


# -- the split identity at a double crossing ------------------------------------------

def split_identity_check(perm: BoundedAffinePerm, i: int) -> bool:
    """Verify that resolving (i, i+1) splits the sheared multiset by slope.

    Writing delta_1 and delta_2 for the factor frames, the points of slope
    at most slope(delta_1), with delta_1 removed, determine the first
    factor's multiset via reflection closure, and dually for the second.
    Requires a repetition-free permutation with a double crossing at i.
    """
    perm.require_theta()
    i = i % perm.n
    if not perm.has_double_crossing_at(i):
        raise PreconditionViolated(f"no double crossing at {i}")
    ms = inversion_multiset(perm, SHEARED)
    if not ms.is_set():
        raise PreconditionViolated("permutation is not repetition-free")
    f1, f2, _ = perm.resolve_crossing((i, i + 1))
    d1 = (f1.k, f1.n)
    d2 = (f2.k, f2.n)
    fset = set(ms.points())

    def slope_le(p: Point, q: Point) -> bool:
        return p[0] * q[1] <= q[0] * p[1]

    g1p = {p for p in fset - {d1} if slope_le(p, d1)}
    g2p = {p for p in fset - {d2} if slope_le(d2, p)}
    g1 = g1p | {(d1[0] - a, d1[1] - b) for a, b in g1p}
    g2 = g2p | {(d2[0] - a, d2[1] - b) for a, b in g2p}
    return (
        set(inversion_multiset(f1, SHEARED).points()) == g1
        and set(inversion_multiset(f2, SHEARED).points()) == g2
    )


# -- partition export ----------------------------------------------------------------

def lambda_partition(perm: BoundedAffinePerm) -> tuple[int, ...]:
    """Row lengths of the boxes above the diagonal and strictly above the
    forbidden points, in the k x (n-k) rectangle.

    Box convention: row i (from the top) and column j span vertical
    [k-i, k-i+1] and horizontal [j-1, j].  The box counts when its southeast
    corner (j, k-i) satisfies (k-i)(n-k) >= kj (corner touches with the bare
    diagonal are allowed) and every multiset point (a, b) with b in
    {j-1, j} lies strictly below the box, a < k-i (corner touches with a
    point disqualify).  The result is asserted weakly decreasing.
    """
    ms = inversion_multiset(perm)
    if not ms.is_set():
        raise NotRepetitionFree(f"{perm!r} has repeated inversion types")
    k = perm.k
    m = perm.n - perm.k
    pts = ms.points()
    rows = []
    for i in range(1, k + 1):
        cnt = 0
        for j in range(1, m + 1):
            if (k - i) * m < k * j:
                continue
            if any(b in (j - 1, j) and a >= k - i for a, b in pts):
                continue
            cnt += 1
        rows.append(cnt)
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise PosicatError(f"row counts {rows} are not weakly decreasing")
    return tuple(rows)


def a_sequence(perm: BoundedAffinePerm) -> tuple[int, ...]:
    """First differences (lambda_{i-1} - lambda_i) for i = 2..k; entries may
    fail to be weakly decreasing even though each row count is."""
    lam = lambda_partition(perm)
    return tuple(lam[i - 1] - lam[i] for i in range(1, len(lam)))

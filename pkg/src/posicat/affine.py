"""Bounded affine permutations with period n.

A bounded affine permutation is a bijection f: Z -> Z with f(i + n) = f(i) + n
and i <= f(i) <= i + n for all i.  It is stored by its window, the tuple
(f(0), ..., f(n-1)), using 0-based positions throughout.  The integer
k = (sum of displacements) / n classifies f into the family B(k, n); when the
reduction modulo n is a single n-cycle and the bounds are strict, f lies in
the distinguished subfamily Theta(k, n).

Module-level functions prefixed with an underscore operate on raw window
tuples; they are the hot path shared with the recurrence engine.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    DegeneratePeriod,
    LimitExceeded,
    NotAnInversion,
    NotBijective,
    NotBounded,
    NotNCycle,
    NotTheta,
    NonIntegralK,
    PosicatError,
)

Window = tuple[int, ...]


class Inversion(NamedTuple):
    """A crossing of f: positions i < j < i + n with f(i) > f(j), i in [0, n)."""

    i: int
    j: int


class GammaPair(NamedTuple):
    """Types (k_t, n_t - k_t) of the two factors of a crossing resolution."""

    gamma1: tuple[int, int]
    gamma2: tuple[int, int]


class MulResult(NamedTuple):
    """Outcome of multiplying by a simple transposition.

    The raw window is always present; `perm` is populated only when the
    result stays bounded, since recurrences must branch on unboundedness
    rather than treat it as an error.
    """

    window: Window
    bounded: bool
    length_delta: int
    perm: Optional["BoundedAffinePerm"]


# ---------------------------------------------------------------------------
# raw window helpers
# ---------------------------------------------------------------------------

def _value_at(w: Window, x: int) -> int:
    """f(x) for any integer x, via periodicity."""
    n = len(w)
    r = x % n
    return w[r] + (x - r)


def _inverse_at(w: Window, y: int, pos: Sequence[int]) -> int:
    """f^{-1}(y) given pos[r] = window index whose value is congruent to r."""
    n = len(w)
    i = pos[y % n]
    return i + (y - w[i])


def _residue_positions(w: Window) -> list[int]:
    n = len(w)
    pos = [-1] * n
    for i, v in enumerate(w):
        pos[v % n] = i
    return pos


def _k_of(w: Window) -> int:
    n = len(w)
    return sum(w[i] - i for i in range(n)) // n


def _is_bounded(w: Window) -> bool:
    n = len(w)
    return all(i <= w[i] <= i + n for i in range(n))


def _is_strictly_bounded(w: Window) -> bool:
    n = len(w)
    return all(i < w[i] < i + n for i in range(n))


def _cycles(w: Window) -> list[list[int]]:
    """Cycles of the reduction modulo n, each starting at its smallest residue."""
    n = len(w)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = w[x] % n
        out.append(cyc)
    return out


def _length(w: Window) -> int:
    n = len(w)
    total = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, i + n):
            if wi > _value_at(w, j):
                total += 1
    return total


def _left_s(w: Window, i: int) -> Window:
    """Window of s_i o f: the transposition acts on values."""
    n = len(w)
    i0 = i % n
    i1 = (i + 1) % n
    out = []
    for v in w:
        r = v % n
        if r == i0:
            out.append(v + 1)
        elif r == i1:
            out.append(v - 1)
        else:
            out.append(v)
    return tuple(out)


def _right_s(w: Window, i: int) -> Window:
    """Window of f o s_i: the transposition acts on positions."""
    n = len(w)
    i0 = i % n
    out = list(w)
    if i0 == n - 1:
        out[n - 1] = w[0] + n
        out[0] = w[n - 1] - n
    else:
        out[i0], out[i0 + 1] = w[i0 + 1], w[i0]
    return tuple(out)


def _conj_s(w: Window, i: int) -> Window:
    return _left_s(_right_s(w, i), i)


def _left_delta(w: Window, i: int, pos: Sequence[int]) -> int:
    """Length change of s_i o f: +1 iff the values i, i+1 sit in order."""
    n = len(w)
    a = _inverse_at(w, i, pos)
    b = _inverse_at(w, i + 1, pos)
    return 1 if a < b else -1


def _right_delta(w: Window, i: int) -> int:
    """Length change of f o s_i: +1 iff f(i) < f(i+1)."""
    return 1 if _value_at(w, i) < _value_at(w, i + 1) else -1


def _conj_delta(w: Window, i: int) -> int:
    """Length change of s_i f s_i, in {-2, 0, +2}."""
    g = _right_s(w, i)
    return _right_delta(w, i) + _left_delta(g, i, _residue_positions(g))


def _sigma(w: Window) -> Window:
    """(sigma f)(i) = f(i - 1) + 1."""
    n = len(w)
    return tuple(_value_at(w, i - 1) + 1 for i in range(n))


def _canonical_key(w: Window) -> Window:
    """Lexicographically minimal cyclic rotation of the displacement word.

    The displacement word of sigma^t(f) is a rotation of that of f, so equal
    keys characterise equal sigma-orbits.
    """
    n = len(w)
    disp = [w[i] - i for i in range(n)]
    best = tuple(disp)
    for t in range(1, n):
        cand = tuple(disp[(i + t) % n] for i in range(n))
        if cand < best:
            best = cand
    return best


def _relabel_restriction(w: Window, residues: Iterable[int]) -> Window:
    """Restrict f to the residue classes in `residues`, relabeled onto [0, m).

    The order-preserving bijection between the support and Z commutes with
    the period shift, so weak and strict bounds are both preserved.
    """
    surv = sorted(residues)
    n = len(w)
    m = len(surv)
    index = {r: idx for idx, r in enumerate(surv)}
    out = []
    for s in surv:
        v = w[s]
        r = v % n
        out.append(index[r] + m * ((v - r) // n))
    return tuple(out)


def _remove_fixed(w: Window) -> tuple[Window, bool]:
    """Drop all residues with f(i) = i or f(i) = i + n.

    Returns (window, emptied).  When every residue is fixed the canonical
    period-1 identity is returned with emptied = True, so that recurrences
    bottom out at the n = 1 base case.
    """
    n = len(w)
    surv = [i for i in range(n) if w[i] != i and w[i] != i + n]
    if len(surv) == n:
        return w, False
    if not surv:
        return (0,), True
    return _relabel_restriction(w, surv), False


def _has_double_crossing(w: Window, i: int, pos: Sequence[int]) -> bool:
    """Nested pattern a < b < i < i+1 < c < d around positions i, i+1."""
    a = _inverse_at(w, i + 1, pos)
    b = _inverse_at(w, i, pos)
    if not a < b < i:
        return False
    c = _value_at(w, i + 1)
    d = _value_at(w, i)
    return i + 1 < c < d


def _window_from_cycle(cycle: Sequence[int]) -> Window:
    """Strictly bounded lift of the n-cycle given as (0, j_1, ..., j_{n-1})."""
    n = len(cycle)
    img = [0] * n
    for idx, x in enumerate(cycle):
        img[x] = cycle[(idx + 1) % n]
    out = []
    for i in range(n):
        v = img[i]
        while v <= i:
            v += n
        out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

class CyclePerm:
    """A finite permutation of {0, ..., n-1}, the reduction of f modulo n."""

    __slots__ = ("n", "image")

    def __init__(self, image: Sequence[int]):
        image = tuple(image)
        n = len(image)
        if n == 0 or sorted(image) != list(range(n)):
            raise NotBijective(f"not a permutation of 0..{n - 1}: {image!r}")
        self.n = n
        self.image = image

    def __call__(self, i: int) -> int:
        return self.image[i % self.n]

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclePerm) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"CyclePerm({list(self.image)})"

    def cycles(self) -> list[list[int]]:
        return _cycles(self.image)

    def is_n_cycle(self) -> bool:
        return len(self.cycles()) == 1

    @property
    def k(self) -> int:
        """Number of positions mapped below themselves."""
        return sum(1 for i, v in enumerate(self.image) if v < i)

    def to_bounded(self) -> "BoundedAffinePerm":
        """The unique strictly bounded lift; requires a single n-cycle."""
        if not self.is_n_cycle():
            raise NotNCycle(f"{self!r} is not an n-cycle")
        if self.n == 1:
            raise DegeneratePeriod("period 1 admits no strictly bounded lift")
        out = []
        for i, v in enumerate(self.image):
            while v <= i:
                v += self.n
            out.append(v)
        return BoundedAffinePerm.from_window(out)


class BoundedAffinePerm:
    """Immutable bounded affine permutation, identified by its window."""

    __slots__ = ("n", "window", "k", "_pos", "_length")

    def __init__(self, window: Sequence[int], _validated: bool = False):
        w = tuple(int(v) for v in window)
        if not w:
            raise PosicatError("empty window")
        n = len(w)
        if not _validated:
            if not all(i <= w[i] <= i + n for i in range(n)):
                raise NotBounded(f"window violates i <= f(i) <= i+n: {list(w)}")
            if len({v % n for v in w}) != n:
                raise NotBijective(f"window residues collide: {list(w)}")
            if sum(w[i] - i for i in range(n)) % n != 0:
                raise NonIntegralK(f"displacement sum not divisible by n: {list(w)}")
        self.window = w
        self.n = n
        self.k = sum(w[i] - i for i in range(n)) // n
        self._pos = _residue_positions(w)
        self._length: Optional[int] = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_window(cls, values: Sequence[int]) -> "BoundedAffinePerm":
        return cls(values)

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> "BoundedAffinePerm":
        """The unique f in Theta(k, n) whose reduction is the given n-cycle.

        The cycle must list each of 0..n-1 exactly once; any rotation is
        accepted and normalised to start at 0.
        """
        cycle = [int(x) for x in cycle]
        n = len(cycle)
        if n == 1:
            raise DegeneratePeriod("period 1 admits no strictly bounded n-cycle")
        if sorted(cycle) != list(range(n)):
            raise NotNCycle(f"not a cycle through 0..{n - 1}: {cycle}")
        z = cycle.index(0)
        cycle = cycle[z:] + cycle[:z]
        return cls(_window_from_cycle(cycle), _validated=True)

    @classmethod
    def translation(cls, k: int, n: int) -> "BoundedAffinePerm":
        """The length-0 element i -> i + k, with 0 <= k <= n."""
        if not 0 <= k <= n:
            raise NotBounded(f"translation by {k} is unbounded for period {n}")
        return cls(tuple(i + k for i in range(n)), _validated=True)

    @classmethod
    def from_json(cls, text: str) -> "BoundedAffinePerm":
        obj = json.loads(text)
        perm = cls.from_window(obj["window"])
        for field in ("n", "k"):
            if field in obj and obj[field] != getattr(perm, field):
                raise PosicatError(f"JSON field {field}={obj[field]} disagrees with window")
        return perm

    # -- basics --------------------------------------------------------------

    def __call__(self, x: int) -> int:
        return _value_at(self.window, x)

    def inverse_at(self, y: int) -> int:
        return _inverse_at(self.window, y, self._pos)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundedAffinePerm) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"BoundedAffinePerm({list(self.window)})"

    @property
    def displacements(self) -> Window:
        return tuple(self.window[i] - i for i in range(self.n))

    @property
    def gamma(self) -> tuple[int, int]:
        return (self.k, self.n - self.k)

    def cycles(self) -> list[list[int]]:
        return _cycles(self.window)

    def cycle_count(self) -> int:
        return len(self.cycles())

    @property
    def is_theta(self) -> bool:
        """Strict bounds and a single n-cycle reduction."""
        return _is_strictly_bounded(self.window) and self.cycle_count() == 1

    def require_theta(self) -> None:
        if not self.is_theta:
            raise NotTheta(f"{self!r} is not a single-cycle strictly bounded permutation")

    def to_cycle(self) -> tuple[int, ...]:
        """Cycle notation of the reduction, starting at 0 (single cycle only)."""
        self.require_theta()
        cyc = [0]
        x = self.window[0] % self.n
        while x != 0:
            cyc.append(x)
            x = self.window[x] % self.n
        return tuple(cyc)

    def reduction(self) -> CyclePerm:
        return CyclePerm(tuple(v % self.n for v in self.window))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "k": self.k, "window": list(self.window)})

    # -- inversions ----------------------------------------------------------

    def inversions(self) -> list[Inversion]:
        """All pairs (i, j) with i in [0, n), i < j < i + n, f(i) > f(j)."""
        w = self.window
        n = self.n
        out = []
        for i in range(n):
            wi = w[i]
            for j in range(i + 1, i + n):
                if wi > _value_at(w, j):
                    out.append(Inversion(i, j))
        return out

    def length(self) -> int:
        if self._length is None:
            self._length = _length(self.window)
        return self._length

    # -- simple transpositions -----------------------------------------------

    def _mul_result(self, w: Window, delta: int) -> MulResult:
        bounded = _is_bounded(w)
        perm = BoundedAffinePerm(w, _validated=True) if bounded else None
        return MulResult(w, bounded, delta, perm)

    def left_mul_s(self, i: int) -> MulResult:
        return self._mul_result(
            _left_s(self.window, i), _left_delta(self.window, i, self._pos)
        )

    def right_mul_s(self, i: int) -> MulResult:
        return self._mul_result(_right_s(self.window, i), _right_delta(self.window, i))

    def conjugate_s(self, i: int) -> MulResult:
        return self._mul_result(_conj_s(self.window, i), _conj_delta(self.window, i))

    def cyclic_shift(self) -> "BoundedAffinePerm":
        """sigma(f), with (sigma f)(i) = f(i - 1) + 1; preserves k, n, length."""
        return BoundedAffinePerm(_sigma(self.window), _validated=True)

    def rotate_180(self) -> "BoundedAffinePerm":
        """The half-turn g(j) = -f^{-1}(-j); an involution on Theta(k, n).

        The small path of g is the pointwise reflection delta - P of the small
        path P of f.
        """
        self.require_theta()
        w = tuple(-self.inverse_at(-j) for j in range(self.n))
        return BoundedAffinePerm(w, _validated=True)

    # -- crossings -----------------------------------------------------------

    def has_double_crossing_at(self, i: int) -> bool:
        i = i % self.n
        return _has_double_crossing(self.window, i, self._pos)

    def is_inversion(self, i: int, j: int) -> bool:
        n = self.n
        return 0 <= i < n and i < j < i + n and self(i) > self(j)

    def resolve_crossing(
        self, inv: tuple[int, int]
    ) -> tuple["BoundedAffinePerm", "BoundedAffinePerm", GammaPair]:
        """Swap the values at an inversion and split into the two cycles.

        The factor containing the residue of i comes first.  Both factors are
        strictly bounded single cycles of their respective periods, and the
        gamma types add up to (k, n - k).
        """
        self.require_theta()
        i, j = inv
        if not self.is_inversion(i, j):
            raise NotAnInversion(f"({i}, {j}) is not an inversion of {self!r}")
        w = self.window
        n = self.n
        rj = j % n
        t = (j - rj) // n
        g = list(w)
        g[i] = w[rj] + n * t
        g[rj] = w[i] - n * t
        gw = tuple(g)
        cycs = _cycles(gw)
        cyc1 = next(c for c in cycs if i in c)
        cyc2 = next(c for c in cycs if rj in c)
        f1 = BoundedAffinePerm(_relabel_restriction(gw, cyc1), _validated=True)
        f2 = BoundedAffinePerm(_relabel_restriction(gw, cyc2), _validated=True)
        return f1, f2, GammaPair(f1.gamma, f2.gamma)

    # -- reductions ----------------------------------------------------------

    def remove_fixed_points(self) -> tuple["BoundedAffinePerm", bool]:
        """Delete every residue with f(i) = i or f(i) = i + n.

        Returns (permutation, emptied).  If all residues are fixed the
        canonical period-1 identity is returned and emptied is True.
        Idempotent on permutations without fixed residues.
        """
        w, emptied = _remove_fixed(self.window)
        return BoundedAffinePerm(w, _validated=True), emptied

    def restrict_to_cycle(self, residue: int) -> "BoundedAffinePerm":
        """Restriction to the cycle of the reduction containing `residue`."""
        residue = residue % self.n
        cyc = next(c for c in self.cycles() if residue in c)
        return BoundedAffinePerm(_relabel_restriction(self.window, cyc), _validated=True)

    # -- sigma orbits and conjugation classes ---------------------------------

    def canonical_key(self) -> Window:
        """Lex-min rotation of the displacement word; constant on sigma-orbits."""
        return _canonical_key(self.window)

    def c_equivalence_class(self, limit: Optional[int] = None) -> set["BoundedAffinePerm"]:
        """Closure under length-preserving bounded simple conjugations.

        Members are deduplicated by exact window (not by sigma-orbit).  An
        optional node limit aborts long searches with LimitExceeded.
        """
        members = [
            BoundedAffinePerm(w, _validated=True)
            for w in _c_class_windows(self.window, limit=limit)
        ]
        return set(members)


def _c_class_windows(w: Window, limit: Optional[int] = None) -> list[Window]:
    """Raw-window BFS over length-preserving bounded simple conjugations."""
    n = len(w)
    seen = {w}
    queue = [w]
    qi = 0
    while qi < len(queue):
        cur = queue[qi]
        qi += 1
        for i in range(n):
            if _conj_delta(cur, i) != 0:
                continue
            g = _conj_s(cur, i)
            if g in seen or not _is_bounded(g):
                continue
            seen.add(g)
            queue.append(g)
            if limit is not None and len(seen) > limit:
                raise LimitExceeded(f"conjugation class exceeds {limit} members")
    return queue


def min_length_witness(k: int, n: int) -> BoundedAffinePerm:
    """A minimal-length element of Theta(k, n): the translation times
    s_1 s_2 ... s_{d-1} where d = gcd(k, n); its length is d - 1."""
    if not 1 <= k <= n - 1:
        raise PosicatError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    import math

    w = BoundedAffinePerm.translation(k, n).window
    for i in range(1, math.gcd(k, n)):
        w = _right_s(w, i)
    return BoundedAffinePerm(w, _validated=True)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def parse_perm(text: str, one_based: bool = False) -> BoundedAffinePerm:
    """Parse `window:3,6,4`, `cycle:(0,3,2)`, or a JSON object string.

    With one_based=True, cycle entries are read on the alphabet 1..n (n plays
    the role of 0); windows are read as (f(1), ..., f(n)).  Either way the
    same affine permutation results, expressed in 0-based form.
    """
    text = text.strip()
    if text.startswith("{"):
        return BoundedAffinePerm.from_json(text)
    if text.startswith("window:"):
        values = [int(t) for t in text[len("window:"):].split(",") if t.strip()]
        if one_based:
            # (f(1), ..., f(n)) determines f(0) = f(n) - n
            values = [values[-1] - len(values)] + values[:-1]
        return BoundedAffinePerm.from_window(values)
    if text.startswith("cycle:"):
        body = text[len("cycle:"):].strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        entries = [int(t) for t in body.split(",") if t.strip()]
        if one_based:
            entries = [e % len(entries) for e in entries]
        return BoundedAffinePerm.from_cycle(entries)
    raise PosicatError(f"unrecognised permutation format: {text!r}")


def format_window(perm: BoundedAffinePerm) -> str:
    return "window:" + ",".join(str(v) for v in perm.window)

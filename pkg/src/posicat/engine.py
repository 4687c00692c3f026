"""Memoized recurrences for the point-count polynomial R and its q = 1 value.

Both quantities obey the same reduction order on a window w:

  1. period 1: R = 1, C = 1;
  2. the reduction has fixed residues: drop them all and recurse;
  3. some i has f(i) = i + 1 or f(i+1) = i + n: recurse on s_i f, which
     acquires a fixed residue (R picks up a factor q - 1, C is unchanged);
  4. some i makes g = s_i f s_i bounded with a double crossing at i (then g
     is two steps longer): R(f) = (q-1) R(f s_i) + q R(g), while
     C(f) = C(f s_i) + C(g) when i, i+1 share a cycle of the reduction of g
     and C(f) = C(g) otherwise;
  5. otherwise search the conjugation class of f breadth-first for a member
     where a step applies; both quantities are constant on the class.

Steps scan i = 0..n-1 and take the first applicable index, so traces are
reproducible.  Each recursion reduces the period or increases the length at
fixed period, and length is bounded by k(n-k), so the recursion terminates;
a class with no applicable member would contradict the constructive
reduction, hence IrreducibleElement signals a bug.

Values are cached per sigma-orbit: both R and C are invariant under the
cyclic shift, and the lex-min rotation of the displacement word identifies
the orbit.  For a class-search hit, every visited member shares the value
and is cached as well.
"""

from __future__ import annotations

import sys
from typing import Callable, Optional

from .affine import (
    BoundedAffinePerm,
    _canonical_key,
    _conj_delta,
    _conj_s,
    _cycles,
    _has_double_crossing,
    _is_bounded,
    _left_s,
    _remove_fixed,
    _residue_positions,
    _right_s,
    _value_at,
    Window,
)
from .errors import IrreducibleElement, PreconditionViolated
from .polynomial import IntPoly, ONE, Q, Q_MINUS_1

TraceHook = Callable[[dict], None]


class Engine:
    """Holds the memo tables; computations are pure given the cache state."""

    def __init__(self, trace_hook: Optional[TraceHook] = None):
        self._r_cache: dict[Window, IntPoly] = {}
        self._c_cache: dict[Window, int] = {}
        self.r_hits = self.r_misses = 0
        self.c_hits = self.c_misses = 0
        self._trace = trace_hook
        # reductions may nest across n levels and up to k(n-k) lengths
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)

    # -- public API -------------------------------------------------------------

    def compute_R(self, perm: BoundedAffinePerm) -> IntPoly:
        """Point-count polynomial R_f(q)."""
        return self._r(perm.window)

    def compute_Rtilde(self, perm: BoundedAffinePerm) -> IntPoly:
        """R_f(q) / (q - 1)^(n - c) where c counts cycles of the reduction;
        the division is exact and a remainder signals an engine bug."""
        r = self._r(perm.window)
        exponent = perm.n - perm.cycle_count()
        return r.exact_div(Q_MINUS_1 ** exponent)

    def compute_C(self, perm: BoundedAffinePerm) -> int:
        """The integer invariant; equals compute_Rtilde(f) at q = 1."""
        value = self._c(perm.window)
        assert value >= 1, f"nonpositive C for {perm!r}: recurrence bug"
        return value

    def compute_C_decoupled(self, perm: BoundedAffinePerm) -> int:
        """Product of compute_C over the restrictions to each cycle."""
        product = 1
        for cyc in perm.cycles():
            product *= self.compute_C(perm.restrict_to_cycle(cyc[0]))
        return product

    def double_crossing_recurrence_check(self, perm: BoundedAffinePerm, i: int) -> bool:
        """At a double crossing of f at i, the conjugate's value splits as
        C(s_i f s_i) = C(f1) C(f2) + C(f) over the resolution of (i, i+1)."""
        perm.require_theta()
        i = i % perm.n
        if not perm.has_double_crossing_at(i):
            raise PreconditionViolated(f"no double crossing at {i}")
        f1, f2, _ = perm.resolve_crossing((i, i + 1))
        conj = perm.conjugate_s(i)
        assert conj.bounded and conj.perm is not None
        lhs = self.compute_C(conj.perm)
        return lhs == self.compute_C(f1) * self.compute_C(f2) + self.compute_C(perm)

    @property
    def stats(self) -> dict[str, int]:
        return {
            "r_hits": self.r_hits,
            "r_misses": self.r_misses,
            "c_hits": self.c_hits,
            "c_misses": self.c_misses,
            "r_entries": len(self._r_cache),
            "c_entries": len(self._c_cache),
        }

    # -- shared reduction ---------------------------------------------------------

    def _emit(self, rule: str, w: Window, **extra) -> None:
        if self._trace is not None:
            record = {"rule": rule, "n": len(w), "window": list(w)}
            record.update(extra)
            self._trace(record)

    def _r(self, w: Window) -> IntPoly:
        key = _canonical_key(w)
        cached = self._r_cache.get(key)
        if cached is not None:
            self.r_hits += 1
            return cached
        self.r_misses += 1
        value = self._reduce(w, self._r_step)
        self._r_cache[key] = value
        return value

    def _c(self, w: Window) -> int:
        key = _canonical_key(w)
        cached = self._c_cache.get(key)
        if cached is not None:
            self.c_hits += 1
            return cached
        self.c_misses += 1
        value = self._reduce(w, self._c_step)
        self._c_cache[key] = value
        return value

    def _r_step(self, w: Window):
        n = len(w)
        if n == 1:
            self._emit("base", w)
            return ONE
        reduced, _ = _remove_fixed(w)
        if reduced != w:
            self._emit("remove_fixed_points", w)
            return self._r(reduced)
        for i in range(n):
            if w[i] == i + 1 or _value_at(w, i + 1) == i + n:
                self._emit("simple_factor", w, i=i)
                return Q_MINUS_1 * self._r(_left_s(w, i))
        for i in range(n):
            g = _conj_s(w, i)
            if _is_bounded(g) and _has_double_crossing(g, i, _residue_positions(g)):
                self._emit("double_move", w, i=i)
                return Q_MINUS_1 * self._r(_right_s(w, i)) + Q * self._r(g)
        return None

    def _c_step(self, w: Window):
        n = len(w)
        if n == 1:
            self._emit("base", w)
            return 1
        reduced, _ = _remove_fixed(w)
        if reduced != w:
            self._emit("remove_fixed_points", w)
            return self._c(reduced)
        for i in range(n):
            if w[i] == i + 1 or _value_at(w, i + 1) == i + n:
                self._emit("simple_factor", w, i=i)
                return self._c(_left_s(w, i))
        for i in range(n):
            g = _conj_s(w, i)
            if _is_bounded(g) and _has_double_crossing(g, i, _residue_positions(g)):
                cycle_of_i = next(c for c in _cycles(g) if i in c)
                same_cycle = (i + 1) % n in cycle_of_i
                self._emit("double_move", w, i=i, same_cycle=same_cycle)
                if same_cycle:
                    return self._c(_right_s(w, i)) + self._c(g)
                return self._c(g)
        return None

    def _reduce(self, w: Window, step):
        value = step(w)
        if value is not None:
            return value
        # class search: the quantity is constant on the conjugation class, so
        # the first member admitting a step determines the value.  Members are
        # discovered breadth-first with conjugation indices in increasing
        # order and tried on discovery; all members seen so far share the
        # value and are cached with it.
        self._emit("class_search", w)
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
                value = step(g)
                if value is not None:
                    cache = self._r_cache if isinstance(value, IntPoly) else self._c_cache
                    for member in seen:
                        cache.setdefault(_canonical_key(member), value)
                    return value
        raise IrreducibleElement(
            f"no reduction applies anywhere in the class of {list(w)}"
        )


_default_engine: Optional[Engine] = None


def default_engine() -> Engine:
    """Process-wide shared engine; suites parallelise across processes, so
    per-process sharing is safe and maximises cache reuse."""
    global _default_engine
    if _default_engine is None:
        _default_engine = Engine()
    return _default_engine


def compute_R(perm: BoundedAffinePerm, engine: Optional[Engine] = None) -> IntPoly:
    return (engine or default_engine()).compute_R(perm)


def compute_Rtilde(perm: BoundedAffinePerm, engine: Optional[Engine] = None) -> IntPoly:
    return (engine or default_engine()).compute_Rtilde(perm)


def compute_C(perm: BoundedAffinePerm, engine: Optional[Engine] = None) -> int:
    return (engine or default_engine()).compute_C(perm)


def compute_C_decoupled(perm: BoundedAffinePerm, engine: Optional[Engine] = None) -> int:
    return (engine or default_engine()).compute_C_decoupled(perm)


def double_crossing_recurrence_check(
    perm: BoundedAffinePerm, i: int, engine: Optional[Engine] = None
) -> bool:
    return (engine or default_engine()).double_crossing_recurrence_check(perm, i)

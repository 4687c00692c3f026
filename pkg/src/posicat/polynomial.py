"""Dense univariate integer polynomials in the variable q.

Coefficients are arbitrary-precision Python ints stored in ascending degree
with no trailing zeros; the zero polynomial is the empty tuple.  The only
non-ring operation is exact_div, which the point-count normalisation
R / (q-1)^(n-c) relies on: a nonzero remainder there signals a recurrence bug
rather than a user error.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import InexactDivision, PosicatError


class IntPoly:
    """Immutable integer polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls(json.loads(text))

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the usual convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * x for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise PosicatError("negative polynomial power")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_at(self, x: int) -> int:
        """Horner evaluation at an integer point."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient self / divisor in Z[q]; the remainder must vanish."""
        if divisor.is_zero:
            raise InexactDivision("division by the zero polynomial")
        if self.is_zero:
            return IntPoly()
        rem = list(self.coeffs)
        div = divisor.coeffs
        if len(rem) < len(div):
            raise InexactDivision(f"degree {self.degree()} < degree {divisor.degree()}")
        out = [0] * (len(rem) - len(div) + 1)
        lead = div[-1]
        for d in range(len(out) - 1, -1, -1):
            top = rem[d + len(div) - 1]
            q, r = divmod(top, lead)
            if r != 0:
                raise InexactDivision(f"leading coefficient {top} not divisible by {lead}")
            out[d] = q
            for i, x in enumerate(div):
                rem[d + i] -= q * x
        if any(rem):
            raise InexactDivision(f"nonzero remainder {rem}")
        return IntPoly(out)

    # -- rendering ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        """Human form in descending degree, e.g. 'q^2 + 1' or '-q + 3'."""
        if self.is_zero:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}q" if d == 1 else f"{mag}q^{d}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def as_json(self) -> str:
        """Coefficient array in ascending degree."""
        return json.dumps(list(self.coeffs))


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))
Q_MINUS_1 = IntPoly((-1, 1))

"""Arithmetic for four-component numbers over the basis (1, i, mu, i*mu).

The two units commute, with i*i = -1 and mu*mu = mu.  Because mu is
idempotent, mu and 1 - mu split the ring into two complex projections:
p1 is the value with mu set to 1, p2 the value with mu set to 0.  The
split is a ring isomorphism onto a pair of complex planes, which is how
inversion and square roots are computed and how multiplication is
cross-checked in the test-suite.

Elements with a vanishing projection (mu itself, or 1 - mu) are zero
divisors and cannot be inverted; no extended "division by zero"
arithmetic is provided.

All values are immutable and every operation is pure.
"""

from __future__ import annotations

import cmath
import math
import numbers
from dataclasses import dataclass

from .errors import ZeroDivisorError

#: Default absolute floor on projection magnitude below which an element
#: is treated as a zero divisor by :meth:`AlphaNumber.invert`.
DEFAULT_SINGULARITY_TOL = 1e-12


@dataclass(frozen=True)
class AlphaNumber:
    """A number a + b*i + c*mu + d*i*mu with real components.

    Components are double-precision floats and must be finite; an
    operation whose result overflows raises :class:`OverflowError`
    instead of storing an infinity.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise OverflowError(f"component {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "AlphaNumber") -> "AlphaNumber":
        if not isinstance(other, AlphaNumber):
            return NotImplemented
        return AlphaNumber(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    def __sub__(self, other: "AlphaNumber") -> "AlphaNumber":
        if not isinstance(other, AlphaNumber):
            return NotImplemented
        return AlphaNumber(self.a - other.a, self.b - other.b,
                           self.c - other.c, self.d - other.d)

    def __neg__(self) -> "AlphaNumber":
        return AlphaNumber(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, AlphaNumber):
            a, b, c, d = self.a, self.b, self.c, self.d
            e, f, g, h = other.a, other.b, other.c, other.d
            # Product table generated by i*i = -1, mu*mu = mu under
            # commutativity; equivalently (z2 + w*mu)(z2' + w'*mu) with
            # z2 = a + b*i, w = c + d*i.
            return AlphaNumber(
                a * e - b * f,
                a * f + b * e,
                a * g + c * e + c * g - b * h - d * f - d * h,
                a * h + b * g + c * f + c * h + d * e + d * g,
            )
        if isinstance(other, numbers.Real):
            s = float(other)
            return AlphaNumber(self.a * s, self.b * s, self.c * s, self.d * s)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self.__mul__(other)
        return NotImplemented

    # -- idempotent decomposition ----------------------------------------

    def split(self) -> "ComplexPair":
        """Project onto the two complex planes (mu -> 1, mu -> 0)."""
        return ComplexPair(complex(self.a + self.c, self.b + self.d),
                           complex(self.a, self.b))

    def invert(self, tol: float = DEFAULT_SINGULARITY_TOL) -> "AlphaNumber":
        """Multiplicative inverse, computed projection-wise.

        Raises :class:`ZeroDivisorError` when either projection magnitude
        is at most ``tol``.
        """
        pair = self.split()
        smallest = min(abs(pair.p1), abs(pair.p2))
        if smallest <= tol:
            raise ZeroDivisorError(
                f"projection magnitude {smallest:g} <= {tol:g}; "
                f"{self} is a zero divisor or too close to one")
        return ComplexPair(1.0 / pair.p1, 1.0 / pair.p2).reconstruct()

    def sqrt(self) -> "AlphaNumber":
        """Principal square root, taken per projection."""
        pair = self.split()
        return ComplexPair(cmath.sqrt(pair.p1), cmath.sqrt(pair.p2)).reconstruct()

    def collapse(self) -> float:
        """Value of the expression with every basis element replaced by 1."""
        return self.a + self.b + self.c + self.d

    # -- comparison and rendering ----------------------------------------

    def isclose(self, other: "AlphaNumber", tol: float) -> bool:
        """Component-wise comparison with an absolute tolerance."""
        return (abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol
                and abs(self.c - other.c) <= tol and abs(self.d - other.d) <= tol)

    def __str__(self) -> str:
        return f"{self.a!r} + {self.b!r}*i + {self.c!r}*mu + {self.d!r}*i*mu"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True)
class ComplexPair:
    """The two complex projections of an :class:`AlphaNumber`.

    ``p1`` is the value at mu -> 1, ``p2`` the value at mu -> 0.
    ``reconstruct`` is the exact inverse of :meth:`AlphaNumber.split`.
    """

    p1: complex
    p2: complex

    def reconstruct(self) -> AlphaNumber:
        return AlphaNumber(self.p2.real, self.p2.imag,
                           self.p1.real - self.p2.real,
                           self.p1.imag - self.p2.imag)


ZERO = AlphaNumber(0.0, 0.0, 0.0, 0.0)
ONE = AlphaNumber(1.0, 0.0, 0.0, 0.0)
I = AlphaNumber(0.0, 1.0, 0.0, 0.0)
MU = AlphaNumber(0.0, 0.0, 1.0, 0.0)
IMU = AlphaNumber(0.0, 0.0, 0.0, 1.0)

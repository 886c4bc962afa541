"""Exact arithmetic in the four-dimensional real algebra of the Euclidean plane.

Generators e1, e2 square to +1 and anticommute; the basis blades are indexed
0..3 as {1, e1, e2, e12} with e12 = e1*e2.  Bit 0 of a blade index flags an e1
factor and bit 1 an e2 factor, so the blade index of a product is the XOR of
the operand indices and only the sign needs a lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

BLADE_NAMES = ("1", "e1", "e2", "e12")

# grade = popcount of the blade index
GRADES = (0, 1, 1, 2)

# sign of blade product a*b: -1 exactly when a contains e2 and b contains e1
# (one transposition e2 e1 -> -e1 e2; the squares contribute nothing)
SIGN_TABLE = (
    (1, 1, 1, 1),
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, -1, 1, -1),
)


class SignedBlade(NamedTuple):
    sign: int
    blade: int


def blade_mul(a: int, b: int) -> SignedBlade:
    """Product of two basis blades as a signed blade."""
    if not (0 <= a <= 3 and 0 <= b <= 3):
        raise ValueError(f"blade index out of range: {a}, {b}")
    return SignedBlade(SIGN_TABLE[a][b], a ^ b)


@dataclass(frozen=True, eq=False)
class Multivector2:
    """General element c[0]*1 + c[1]*e1 + c[2]*e2 + c[3]*e12."""

    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=np.float64)
        if c.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "c", c)

    @classmethod
    def zero(cls) -> "Multivector2":
        return cls(np.zeros(4))

    @classmethod
    def scalar(cls, value: float) -> "Multivector2":
        return cls((value, 0.0, 0.0, 0.0))

    @classmethod
    def blade(cls, code: int, coeff: float = 1.0) -> "Multivector2":
        c = np.zeros(4)
        c[code] = coeff
        return cls(c)

    def __add__(self, other: "Multivector2") -> "Multivector2":
        return Multivector2(self.c + other.c)

    def __sub__(self, other: "Multivector2") -> "Multivector2":
        return Multivector2(self.c - other.c)

    def __neg__(self) -> "Multivector2":
        return Multivector2(-self.c)

    def __mul__(self, other):
        if isinstance(other, Multivector2):
            return gp(self, other)
        return Multivector2(self.c * float(other))

    def __rmul__(self, other) -> "Multivector2":
        return Multivector2(self.c * float(other))

    def __eq__(self, other) -> bool:
        return isinstance(other, Multivector2) and np.array_equal(self.c, other.c)

    def __hash__(self):
        return hash(self.c.tobytes())

    def __repr__(self) -> str:
        terms = [
            f"{coef:+g}*{name}" if name != "1" else f"{coef:+g}"
            for coef, name in zip(self.c, BLADE_NAMES)
            if coef != 0.0
        ]
        return "Multivector2(" + (" ".join(terms) or "0") + ")"


ONE = Multivector2.blade(0)
E1 = Multivector2.blade(1)
E2 = Multivector2.blade(2)
E12 = Multivector2.blade(3)
J = E12


def gp(x: Multivector2, y: Multivector2) -> Multivector2:
    """Geometric product, the bilinear extension of the blade table."""
    out = np.zeros(4)
    for a in range(4):
        xa = x.c[a]
        if xa == 0.0:
            continue
        for b in range(4):
            out[a ^ b] += SIGN_TABLE[a][b] * xa * y.c[b]
    return Multivector2(out)


def grade(x: Multivector2, k: int) -> Multivector2:
    """Projection onto the grade-k part."""
    if k not in (0, 1, 2):
        raise ValueError(f"grade must be 0, 1 or 2, got {k}")
    out = np.where([g == k for g in GRADES], x.c, 0.0)
    return Multivector2(out)


def reverse(x: Multivector2) -> Multivector2:
    """Reversion: fixes grades 0 and 1, negates the bivector part."""
    return Multivector2(x.c * np.array([1.0, 1.0, 1.0, -1.0]))


def wedge(x: Multivector2, y: Multivector2) -> Multivector2:
    """Outer product: grade-(r+s) part of the product of grade components."""
    out = Multivector2.zero()
    for r in range(3):
        xr = grade(x, r)
        if not xr.c.any():
            continue
        for s in range(3 - r):
            out = out + grade(gp(xr, grade(y, s)), r + s)
    return out


def inner(x: Multivector2, y: Multivector2) -> Multivector2:
    """Inner product: grade-|r-s| part of the product of grade components."""
    out = Multivector2.zero()
    for r in range(3):
        xr = grade(x, r)
        if not xr.c.any():
            continue
        for s in range(3):
            out = out + grade(gp(xr, grade(y, s)), abs(r - s))
    return out


def idempotent_p() -> Multivector2:
    """The primitive idempotent (1 + e1)/2; squares to itself."""
    return Multivector2((0.5, 0.5, 0.0, 0.0))

"""Triangular fuzzy number algebra, distances, comparison and defuzzification.

A triangular fuzzy number (TFN) is a triplet (a1, a2, a3) with a1 <= a2 <= a3:
a2 is the most promising value, a1 and a3 the smallest and largest possible
values.  A degenerate TFN (a1 == a2 == a3) represents a crisp number.

Subtraction and division are the widening variants
    (a1-b3, a2-b2, a3-b1)   and   (a1/b3, a2/b2, a3/b1),
not the inverses of addition/multiplication.  Multiplication, division and
exponentiation are restricted to the nonnegative operand domains in which the
fuzzy ranking methods operate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError

# Tolerance for the a1 <= a2 <= a3 ordering check; absorbs float noise only.
_ORDER_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Tfn:
    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        if not (math.isfinite(self.a1) and math.isfinite(self.a2) and math.isfinite(self.a3)):
            raise ValidationError(f"TFN components must be finite, got {(self.a1, self.a2, self.a3)}")
        if self.a1 - self.a2 > _ORDER_TOL or self.a2 - self.a3 > _ORDER_TOL:
            raise ValidationError(f"TFN components must satisfy a1 <= a2 <= a3, got {(self.a1, self.a2, self.a3)}")

    @property
    def is_crisp(self) -> bool:
        return self.a1 == self.a2 == self.a3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)

    def __add__(self, other: "Tfn") -> "Tfn":
        return add(self, other)

    def __sub__(self, other: "Tfn") -> "Tfn":
        return sub(self, other)

    def __mul__(self, other: "Tfn") -> "Tfn":
        return mul(self, other)


def crisp(value: float) -> Tfn:
    """Lift a crisp number to a degenerate TFN."""
    return Tfn(value, value, value)


def add(x: Tfn, y: Tfn) -> Tfn:
    return Tfn(x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3)


def sub(x: Tfn, y: Tfn) -> Tfn:
    """Widening subtraction: (x1-y3, x2-y2, x3-y1)."""
    return Tfn(x.a1 - y.a3, x.a2 - y.a2, x.a3 - y.a1)


def mul(x: Tfn, y: Tfn) -> Tfn:
    if x.a1 < 0 or y.a1 < 0:
        raise DomainError(f"TFN multiplication requires nonnegative operands, got {x} * {y}")
    return Tfn(x.a1 * y.a1, x.a2 * y.a2, x.a3 * y.a3)


def div(x: Tfn, y: Tfn) -> Tfn:
    """Widening division: (x1/y3, x2/y2, x3/y1); divisor must be strictly positive."""
    if y.a1 <= 0:
        raise DomainError(f"TFN division requires a strictly positive divisor, got divisor {y}")
    if x.a1 < 0:
        raise DomainError(f"TFN division requires a nonnegative dividend, got {x}")
    return Tfn(x.a1 / y.a3, x.a2 / y.a2, x.a3 / y.a1)


def scale(c: float, x: Tfn) -> Tfn:
    if c < 0:
        raise DomainError(f"scale factor must be nonnegative, got {c}")
    return Tfn(c * x.a1, c * x.a2, c * x.a3)


def scale_signed(c: float, x: Tfn) -> Tfn:
    """Scale by any real factor, reversing component order when c < 0."""
    if c >= 0:
        return Tfn(c * x.a1, c * x.a2, c * x.a3)
    return Tfn(c * x.a3, c * x.a2, c * x.a1)


def pow(v: Tfn, w: Tfn) -> Tfn:  # noqa: A001 - canonical operation name
    """Fuzzy exponentiation (v1^w3, v2^w2, v3^w1) for v in (0,1], w in [0,1]."""
    if not (0 < v.a1 and v.a3 <= 1):
        raise DomainError(f"TFN power base must lie in (0, 1] componentwise, got {v}")
    if not (0 <= w.a1 and w.a3 <= 1):
        raise DomainError(f"TFN power exponent must lie in [0, 1] componentwise, got {w}")
    return Tfn(v.a1 ** w.a3, v.a2 ** w.a2, v.a3 ** w.a1)


def distance(x: Tfn, y: Tfn) -> float:
    """Vertex-method distance sqrt(((a1-b1)^2 + (a2-b2)^2 + (a3-b3)^2) / 3)."""
    return math.sqrt(((x.a1 - y.a1) ** 2 + (x.a2 - y.a2) ** 2 + (x.a3 - y.a3) ** 2) / 3.0)


def defuzz_weighted_mean2(x: Tfn) -> float:
    """Second weighted mean (a1 + 2*a2 + a3) / 4."""
    return (x.a1 + 2.0 * x.a2 + x.a3) / 4.0


def defuzz_bnp(x: Tfn) -> float:
    """Best nonfuzzy performance ((a3-a1) + (a2-a1)) / 3 + a1."""
    return ((x.a3 - x.a1) + (x.a2 - x.a1)) / 3.0 + x.a1


def defuzz_centroid(x: Tfn) -> float:
    """Centroid (a1 + a2 + a3) / 3."""
    return (x.a1 + x.a2 + x.a3) / 3.0


def chen_utilities(xs: list[Tfn] | tuple[Tfn, ...]) -> list[float]:
    """Total utilities of the maximizing-set / minimizing-set comparison.

    Set bounds are the min/max support over the compared group; the linear
    (symmetric) membership is used for both sets.  All utilities are 0.5 when
    every input shares a single support point.
    """
    if not xs:
        raise DomainError("chen comparison requires at least one TFN")
    x_min = min(t.a1 for t in xs)
    x_max = max(t.a3 for t in xs)
    span = x_max - x_min
    if span <= 0:
        return [0.5] * len(xs)
    utilities = []
    for t in xs:
        u_right = (t.a3 - x_min) / (span + (t.a3 - t.a2))
        u_left = (x_max - t.a1) / (span + (t.a2 - t.a1))
        utilities.append((u_right + 1.0 - u_left) / 2.0)
    return utilities


def chen_compare(xs: list[Tfn] | tuple[Tfn, ...]) -> list[int]:
    """Indices of ``xs`` ordered best-first by Chen total utility.

    Utilities within 1e-9 relative (1e-12 absolute) tie; ties keep the input
    order.
    """
    utilities = chen_utilities(xs)
    order = sorted(range(len(xs)), key=lambda i: (-utilities[i], i))
    groups: list[list[int]] = []
    leader = None
    for i in order:
        if leader is None or abs(utilities[i] - leader) > max(
                1e-9 * max(abs(utilities[i]), abs(leader)), 1e-12):
            groups.append([i])
            leader = utilities[i]
        else:
            groups[-1].append(i)
    return [i for g in groups for i in sorted(g)]

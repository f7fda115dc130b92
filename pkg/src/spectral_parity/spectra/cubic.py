"""Monic cubics and their real roots.

The largest root comes from Newton iteration started at the Cauchy bound
1 + |c2| + |c1| + |c0|, where the cubic is positive and convex, so the
iterates decrease monotonically onto the root. The other two roots come
from deflation to a quadratic, polished by Newton on the full cubic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from spectral_parity.exceptions import ComplexRootsError

Number = int | float | Fraction

NEWTON_MAX_STEPS = 500
POLISH_STEPS = 8


@dataclass(frozen=True)
class CubicPoly:
    """
    x^3 + c2*x^2 + c1*x + c0.

    Coefficients stay exact (int or Fraction) when built from exact data, so
    evaluate() at an integer point is exact as well.
    """

    c2: Number
    c1: Number
    c0: Number

    def __post_init__(self) -> None:
        for name in ("c2", "c1", "c0"):
            value = getattr(self, name)
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"Cubic coefficient {name} must be finite, got {value}")

    @property
    def coefficients(self) -> tuple[Number, Number, Number]:
        return (self.c2, self.c1, self.c0)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, int | Fraction) for c in self.coefficients)

    def evaluate(self, x: Number) -> Number:
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x: Number) -> Number:
        """p'(x) = 3x^2 + 2*c2*x + c1."""
        return (3 * x + 2 * self.c2) * x + self.c1

    def discriminant(self) -> Number:
        b, c, d = self.coefficients
        return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d

    def as_list(self) -> list[Number]:
        """[c2, c1, c0] with integral values as int (CLI and report output)."""
        out: list[Number] = []
        for c in self.coefficients:
            if isinstance(c, Fraction) and c.denominator == 1:
                out.append(int(c))
            else:
                out.append(c)
        return out


def _check_real_spectrum(p: CubicPoly) -> None:
    b, c, d = p.coefficients if p.is_exact else tuple(float(v) for v in p.coefficients)
    terms = [18 * b * c * d, -4 * b**3 * d, b * b * c * c, -4 * c**3, -27 * d * d]
    discriminant = sum(terms)
    if discriminant >= 0:
        return
    scale = max(abs(t) for t in terms)
    if p.is_exact or -discriminant > 1e-9 * scale:
        raise ComplexRootsError(tuple(p.as_list()), float(discriminant))


def _newton_from_right(p: CubicPoly) -> float:
    c2, c1, c0 = (float(v) for v in p.coefficients)
    x = max(1.0, 1.0 + abs(c2) + abs(c1) + abs(c0))
    for _ in range(NEWTON_MAX_STEPS):
        fx = ((x + c2) * x + c1) * x + c0
        dfx = (3 * x + 2 * c2) * x + c1
        if fx <= 0 or dfx <= 0:
            break
        step = fx / dfx
        x -= step
        if step <= 1e-15 * max(1.0, abs(x)):
            break
    return x


def _polish(p: CubicPoly, x: float) -> float:
    c2, c1, c0 = (float(v) for v in p.coefficients)
    best, best_abs = x, abs(((x + c2) * x + c1) * x + c0)
    for _ in range(POLISH_STEPS):
        dfx = (3 * x + 2 * c2) * x + c1
        if dfx == 0:
            break
        x -= (((x + c2) * x + c1) * x + c0) / dfx
        fx_abs = abs(((x + c2) * x + c1) * x + c0)
        if fx_abs < best_abs:
            best, best_abs = x, fx_abs
    return best


def largest_root(p: CubicPoly) -> float:
    """
    Largest real root of p.

    Raises:
        ComplexRootsError: If the discriminant shows a complex root pair
    """
    _check_real_spectrum(p)
    return _newton_from_right(p)


def cubic_roots(p: CubicPoly) -> tuple[float, float, float]:
    """
    All three real roots of p, sorted descending.

    Each root r satisfies |p(r)| <= 1e-8 * max(1, |r|^3).

    Raises:
        ComplexRootsError: If the discriminant shows a complex root pair

    Example:
        >>> [round(r, 9) for r in cubic_roots(CubicPoly(-6, 11, -6))]
        [3.0, 2.0, 1.0]
    """
    theta1 = largest_root(p)
    b = float(p.c2) + theta1
    c = float(p.c1) + theta1 * b
    disc = max(b * b - 4 * c, 0.0)
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        theta2 = theta3 = 0.0
    else:
        theta2, theta3 = q, c / q
    roots = sorted((theta1, _polish(p, theta2), _polish(p, theta3)), reverse=True)
    return (roots[0], roots[1], roots[2])

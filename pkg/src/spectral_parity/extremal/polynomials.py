"""Closed-form quotient matrices, characteristic cubics and auxiliary functions.

Everything here is exact: integer parameters give integer coefficients and
Fraction-valued bounds, so the closed forms can be compared with determinant
expansions and with each other at zero tolerance. Python ints do not
overflow, so coefficient growth (about delta^6 + delta^3 n) needs no guard.

Notation:
    x0        = n - delta(delta-2) - 2, the comparison point left of eta*
    phi_Bstar = characteristic cubic of G*, eta* its largest root
    phi_B2    = Case-1 cubic (s >= delta+1; s = delta reproduces phi_Bstar)
    phi_B3    = Case-3 cubic (1 <= s <= delta-1)
    g, h      = quotients (phi_B2 - phi_Bstar)/(s - delta), (phi_B3 - phi_Bstar)/(delta - s)
"""

from __future__ import annotations

from fractions import Fraction

from spectral_parity.extremal.families import (
    ensure_case1,
    ensure_case3,
    ensure_delta,
    ensure_extremal,
)
from spectral_parity.spectra.cubic import CubicPoly, Number

IntMatrix = list[list[int]]


def comparison_point(delta: int, n: int) -> int:
    """x0 = n - delta(delta-2) - 2 = rho(K_{n-delta(delta-2)-1})."""
    return n - delta * (delta - 2) - 2


# --- quotient matrices ------------------------------------------------------


def b2_matrix(s: int, delta: int, n: int) -> IntMatrix:
    """Quotient of G_2 over [K_s, K_{n-(delta-1)s-1}, ((delta-2)s+1)K_1]."""
    ensure_case1(s, delta, n)
    big = n - (delta - 1) * s - 1
    small = (delta - 2) * s + 1
    return [[s - 1, big, small], [s, big - 1, 0], [s, 0, 0]]


def bstar_matrix(delta: int, n: int) -> IntMatrix:
    """B_* = B_2 with s = delta."""
    ensure_extremal(delta, n)
    return b2_matrix(delta, delta, n)


def b3_matrix(s: int, delta: int, n: int) -> IntMatrix:
    """Quotient of G_3 over [K_s, large clique, ((delta-2)s+1)K_{delta+1-s}]."""
    ensure_case3(s, delta, n)
    rest = ((delta - 2) * s + 1) * (delta + 1 - s)
    big = n - s - rest
    return [[s - 1, big, rest], [s, big - 1, 0], [s, 0, delta - s]]


# --- characteristic cubics --------------------------------------------------


def _b2_coefficients(s: int, d: int, n: int) -> tuple[int, int, int]:
    c2 = -n + (d - 2) * s + 3
    c1 = -n - (d - 2) * s**2 + (d - 3) * s + 2
    c0 = (d - 2) * s**2 * n + s * n - (d - 1) * (d - 2) * s**3 - (3 * d - 5) * s**2 - 2 * s
    return c2, c1, c0


def phi_Bstar(delta: int, n: int) -> CubicPoly:
    """
    Characteristic cubic of B_*.

    Example:
        >>> phi_Bstar(3, 18).as_list()
        [-12, -25, 120]
    """
    ensure_extremal(delta, n)
    d = delta
    c2 = -n + d * (d - 2) + 3
    c1 = -n - d * d * (d - 2) + d * (d - 3) + 2
    c0 = (d - 2) * d * d * n + d * n - d**3 * (d - 1) * (d - 2) - d * d * (3 * d - 5) - 2 * d
    return CubicPoly(c2, c1, c0)


def phi_B2(s: int, delta: int, n: int) -> CubicPoly:
    """
    Characteristic cubic of B_2; phi_B2(delta, delta, n) == phi_Bstar(delta, n).

    Example:
        >>> phi_B2(4, 3, 18).as_list()
        [-11, -32, 160]
    """
    ensure_case1(s, delta, n)
    return CubicPoly(*_b2_coefficients(s, delta, n))


def phi_B3(s: int, delta: int, n: int) -> CubicPoly:
    """
    Characteristic cubic of B_3.

    Example:
        >>> phi_B3(1, 3, 18).as_list()
        [-12, 3, 82]
    """
    ensure_case3(s, delta, n)
    d = delta
    c2 = (-d + 2) * s**2 + (d * d - d - 2) * s - n + 3
    c1 = (
        (d * d - 3 * d + 2) * s**2
        - (n + d**3 - 2 * d * d - 2 * d + 1) * s
        + d * n
        - n
        - d * d
        - 2 * d
        + 2
    )
    c0 = (
        ((2 - d) * s**3 + (d * d - d - 3) * s**2 + d * s + d) * n
        - (d - 2) ** 2 * s**5
        + (2 * d**3 - 6 * d * d - d + 10) * s**4
        - (d**4 - 2 * d**3 - 6 * d * d + 7 * d + 10) * s**3
        - (2 * d**3 - d * d - 5 * d - 5) * s**2
        - (d**3 - d) * s
        - d * d
        - 2 * d
    )
    return CubicPoly(c2, c1, c0)


# --- auxiliary functions ----------------------------------------------------


def eval_g(s: int, delta: int, n: int, x: Number) -> Number:
    """
    g(x) with phi_B2(x) - phi_Bstar(x) = (s - delta) g(x).

    Example:
        >>> [eval_g(4, 3, 18, x) for x in (0, 1)]
        [40, 34]
    """
    ensure_case1(s, delta, n)
    d = delta
    return (
        (d - 2) * x * x
        + (-(d - 2) * s - d * d + 3 * d - 3) * x
        + (d - 2) * (s + d) * n
        + n
        - (d - 1) * (d - 2) * (s * s + d * s + d * d)
        - (3 * d - 5) * (s + d)
        - 2
    )


def eval_h(s: int, delta: int, n: int, x: Number) -> Number:
    """
    h(x) with phi_B3(x) - phi_Bstar(x) = (delta - s) h(x).

    Example:
        >>> [eval_h(1, 3, 18, x) for x in (0, 1)]
        [-19, -5]
    """
    ensure_case3(s, delta, n)
    d = delta
    return (
        (d - 2) * (s - 1) * x * x
        + (n - d * d * s + 3 * d * s - 2 * s + d * d - 4 * d + 1) * x
        + (d * d - 4 * d + 4) * s**4
        - (d**3 - 2 * d * d - 5 * d + 10) * s**3
        + (d * n - 2 * n - d * d - 3 * d + 10) * s**2
        + (-d * n + 3 * n + d**3 - 4 * d * d + 5 * d - 5) * s
        - d * d * n
        + 2 * d * n
        + d**4
        - 3 * d**3
        + 5 * d * d
        - 6 * d
    )


def eval_phiB3_prime(s: int, delta: int, n: int, x: Number) -> Number:
    """
    phi_B3'(x) in its displayed expanded form.

    Example:
        >>> eval_phiB3_prime(1, 3, 18, 13)
        198
    """
    ensure_case3(s, delta, n)
    d = delta
    return (
        3 * x * x
        + 2 * ((-d + 2) * s**2 + (d * d - d - 2) * s - n + 3) * x
        + (d * d - 3 * d + 2) * s**2
        - (n + d**3 - 2 * d * d - 2 * d + 1) * s
        + d * n
        - n
        - d * d
        - 2 * d
        + 2
    )


# --- vertices of the quadratics ----------------------------------------------


def g_axis(s: int, delta: int) -> Fraction:
    """Vertex of g: ((delta-2)s + delta^2 - 3delta + 3) / (2(delta-2))."""
    ensure_delta(delta)
    return Fraction((delta - 2) * s + delta * delta - 3 * delta + 3, 2 * (delta - 2))


def h_axis(s: int, delta: int, n: int) -> Fraction | None:
    """Vertex of h; None for s = 1, where h is linear."""
    ensure_case3(s, delta, n)
    if s == 1:
        return None
    d = delta
    return Fraction(-(n - d * d * s + 3 * d * s - 2 * s + d * d - 4 * d + 1), 2 * (d - 2) * (s - 1))


def phiB3_prime_axis(s: int, delta: int, n: int) -> Fraction:
    """Vertex of phi_B3': -c2/3."""
    return Fraction(-phi_B3(s, delta, n).c2, 3)


def h_closed_n_axis(s: int, delta: int) -> Fraction:
    """Vertex in n of the closed form h(x0): (2delta^2 - 3delta + 3 - s) / 2."""
    ensure_delta(delta)
    return Fraction(2 * delta * delta - 3 * delta + 3 - s, 2)


# --- closed forms at x0 -------------------------------------------------------


def g_at_x0_closed(s: Number, delta: int, n: Number) -> Number:
    """Expanded g(x0); polynomial in s and n so Fraction s is accepted."""
    d = delta
    return (
        (d - 2) * n * n
        + (d - 2) * (-2 * d * d + 4 * d - 3) * n
        - (d - 1) * (d - 2) * s * s
        + (-d * d + d + 1) * s
        + d**5
        - 6 * d**4
        + 14 * d**3
        - 18 * d * d
        + 13 * d
        - 4
    )


def g_at_smax(delta: int, n: int) -> Fraction:
    """g(x0) with s replaced by its Case-1 maximum (n-2)/(delta-1)."""
    ensure_delta(delta)
    return Fraction(g_at_x0_closed(Fraction(n - 2, delta - 1), delta, n))


def g_at_smax_closed(delta: int, n: int) -> Fraction:
    """The same value in its expanded form over delta - 1."""
    ensure_delta(delta)
    d = delta
    numerator = (
        (d - 2) ** 2 * n * n
        + (-2 * d**4 + 10 * d**3 - 20 * d * d + 22 * d - 13) * n
        + d**6
        - 7 * d**5
        + 20 * d**4
        - 32 * d**3
        + 33 * d * d
        - 23 * d
        + 10
    )
    return Fraction(numerator, d - 1)


def g_final_bound(delta: int) -> Fraction:
    """(delta^6 - 3delta^5 - 4delta^4 + 12delta^3 + 7delta^2 - 23delta + 10) / (delta - 1)."""
    ensure_delta(delta)
    d = delta
    return Fraction(d**6 - 3 * d**5 - 4 * d**4 + 12 * d**3 + 7 * d * d - 23 * d + 10, d - 1)


def h_at_x0_closed(s: int, delta: int, n: int) -> int:
    d = delta
    return (
        ((d - 2) * s - d + 3) * n * n
        + ((d - 2) * s * s - (2 * d**3 - 7 * d * d + 10 * d - 9) * s + 2 * d**3 - 9 * d * d + 12 * d - 9)
        * n
        + (d * d - 4 * d + 4) * s**4
        - (d**3 - 2 * d * d - 5 * d + 10) * s**3
        - (d * d + 3 * d - 10) * s**2
        + (d**5 - 5 * d**4 + 12 * d**3 - 18 * d * d + 15 * d - 9) * s
        - d**5
        + 6 * d**4
        - 13 * d**3
        + 18 * d * d
        - 16 * d
        + 6
    )


def h_final_bound(s: int, delta: int) -> int:
    """delta^3(4s^2 - 8s + 10) + s^6 + 5s^4 - 16s^3 + 17s^2 - 10s - 10."""
    return delta**3 * (4 * s * s - 8 * s + 10) + s**6 + 5 * s**4 - 16 * s**3 + 17 * s * s - 10 * s - 10


def phiB3_prime_at_x0_closed(s: int, delta: int, n: int) -> int:
    d = delta
    return (
        n * n
        + ((-2 * d + 4) * s * s + (2 * d * d - 2 * d - 5) * s - 4 * d * d + 9 * d - 3) * n
        + (2 * d**3 - 7 * d * d + 9 * d - 6) * s * s
        + (-2 * d**4 + 5 * d**3 - 2 * d * d - 2 * d + 7) * s
        + 3 * d**4
        - 12 * d**3
        + 17 * d * d
        - 14 * d
        + 2
    )


def phiB3_prime_final_bound(s: int) -> int:
    """3s^4 + 10s^3 + 10s^2 + 18s + 4."""
    return 3 * s**4 + 10 * s**3 + 10 * s * s + 18 * s + 4

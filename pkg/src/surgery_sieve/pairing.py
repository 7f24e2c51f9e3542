"""Heegaard Floer ranks of ``p/q`` surgery by counting intersections on the cylinder.

A lift of the surgery line with index ``j`` crosses the meridian column at the
heights ``h_n = n/q + 1/2 + eps`` for ``n = j (mod p)``.  Each crossing at
level ``i`` meets the ``n_i`` vertical segments there, and each wrap of the
line (from ``h_n`` at ``x = 0`` to ``h_{n+p}`` at ``x = 1``) meets the
diagonal at most once, decided by a sign test.
"""

from __future__ import annotations

from fractions import Fraction

from .curvemodel import PulledTightCurve
from .errors import DomainError, PreconditionError
from .exactnum import HALF, EpsRat, Slope, level_of

__all__ = [
    "Slope",
    "total_rank",
    "spinc_ranks",
    "lift_rank",
    "lemma_pos_holds",
    "lemma_neg_holds",
]


def _slope(slope) -> Slope:
    if isinstance(slope, Slope):
        return slope
    p, q = slope
    return Slope(p, q)


def total_rank(curve: PulledTightCurve, slope) -> int:
    """``|p - q(2 tau - eps)| + |q| V``."""
    s = _slope(slope)
    if s.p == 0 and curve.eps == 0:
        raise DomainError("slope 0 with a horizontal distinguished curve: the count formula is off by two")
    return abs(s.p - s.q * curve.diagonal_slope) + abs(s.q) * curve.V


def _height(n: int, q: int) -> EpsRat:
    return EpsRat(Fraction(n, q) + HALF, 1)


def _crosses_diagonal(y0: EpsRat, rise: Fraction, c: Fraction) -> bool:
    # line minus segment from (0, -c) to (1, c): f(0) = y0 + c, f(1) = y0 + rise - c
    return (y0 + c).sign() * (y0 + rise - c).sign() < 0


def _check(curve: PulledTightCurve, s: Slope) -> None:
    if s.p == 0:
        raise DomainError("slope 0 has no finite set of Spin^c lifts")


def spinc_ranks(curve: PulledTightCurve, slope) -> list[int]:
    """Rank in each Spin^c structure, as a list indexed by lift ``j = 0 .. p-1``."""
    s = _slope(slope)
    _check(curve, s)
    p, q = s.p, s.q
    if q == 0:
        return [1]
    ranks = [0] * p
    aq = abs(q)
    g = curve.genus
    for n in range(-aq * (g + 1), aq * (g + 1) + 1):
        lvl = level_of(_height(n, q))
        c = curve.n(lvl)
        if c:
            ranks[n % p] += c
    c = curve.diagonal_half_height()
    rise = Fraction(p, q)
    bound = aq * (int(abs(c)) + 2) + p + 1
    for n in range(-bound, bound + 1):
        if _crosses_diagonal(_height(n, q), rise, c):
            ranks[n % p] += 1
    return ranks


def lift_rank(curve: PulledTightCurve, slope, j: int) -> int:
    """Intersection count for one lift, walking ``h = (j + k p)/q + 1/2 + eps`` over ``k``.

    Any integer ``j`` is accepted; ``j`` and ``j + p`` name the same lift.
    """
    s = _slope(slope)
    _check(curve, s)
    p, q = s.p, s.q
    if q == 0:
        return 1
    rise = Fraction(p, q)
    c = curve.diagonal_half_height()
    reach = curve.genus + abs(c) + abs(rise) + 2
    # |h| <= reach  <=>  |j + k p| <= |q| reach
    lim = int(abs(q) * reach) + abs(j) + p
    total = 0
    for k in range(-(lim // p) - 1, lim // p + 2):
        h = _height(j + k * p, q)
        if abs(h.value) > reach:
            continue
        total += curve.n(level_of(h))
        if _crosses_diagonal(h, rise, c):
            total += 1
    return total


def lemma_pos_holds(curve: PulledTightCurve, slope) -> bool:
    """For ``tau = g > 0`` and slope ``> 2g - 1``: every Spin^c rank is at most ``max n_i``."""
    s = _slope(slope)
    g = curve.genus
    if not (curve.tau == g and g > 0):
        raise PreconditionError("needs tau = g > 0")
    if s.q <= 0 or s.value() <= 2 * g - 1:
        raise PreconditionError(f"needs slope > 2g - 1 = {2 * g - 1}, got {s}")
    return max(spinc_ranks(curve, s)) <= curve.max_n


def lemma_neg_holds(curve: PulledTightCurve, slope) -> bool:
    """For ``tau > 0`` and a negative slope: some Spin^c rank is at least ``max n_i + 1``."""
    s = _slope(slope)
    if curve.tau <= 0:
        raise PreconditionError("needs tau > 0")
    if s.q >= 0 or s.p == 0:
        raise PreconditionError(f"needs a negative slope, got {s}")
    return max(spinc_ranks(curve, s)) >= curve.max_n + 1

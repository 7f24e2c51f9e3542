"""Relative gradings for surgeries on L-space knots, and the opposite-sign obstruction.

The genus ``g`` L-space curve is drawn in the plane (the universal cover of
the punctured torus) as a sawtooth: a vertical ``V_a`` on each integer column
``x = a`` spanning heights ``[-g + 1/2, g - 1/2]``, and a diagonal ``D_a`` of
slope ``2g - 1`` from ``(a, -g + 1/2)`` to ``(a + 1, g - 1/2)``.

Two puncture families sit on it.  Bullets ``(a, b + 1/2)`` lie on the
verticals; stars ``(a + (b + g)/(2g - 1), b + 1/2)`` lie on the diagonals.
The corners carry one of each.  The curve weaves past each bullet on a fixed
side, encoded by ``side(h)`` for each height ``h`` in ``H = {-g + 1/2, ..., g - 1/2}``:
``-1`` when the bullet is left of the strand, ``+1`` when it is right.  The
top corner is always ``-1`` and the bottom ``+1``, and rotational symmetry
forces ``side(-h) = -side(h)``.  The shear ``(x, y) -> (x - y/(2g-1), -y)``
carries the curve to a translate of itself and swaps the two families, so
the star at height ``h`` lies left (above) the diagonal iff ``side(-h) = -1``.

A lift ``j`` of the surgery line is ``y = j/q + 1/2 + eps + (p/q) x``.  For
``0 < p/q < 2g - 1`` it meets the sawtooth as ``V, D, V, ..., V``.  The bigon
over gap ``t`` lies below the line for odd ``t`` and above it for even ``t``.
With ``y_t`` the height of the ``t``-th intersection, its bullet and star
counts are:

* ``V_a -> D_a``: ``k = #{h < y_t : side(h) = +1}``, ``k' = #{h < y_{t+1} : side(-h) = -1}``
* ``D_a -> V_{a+1}``: ``k = #{h > y_{t+1} : side(h) = -1}``, ``k' = #{h > y_t : side(-h) = +1}``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DomainError, NotApplicable, PreconditionError
from .exactnum import HALF, EpsRat
from .verdict import Inconclusive, Obstructed, Verdict


# -- zig-zag sequences -----------------------------------------------------

def is_zigzag(seq: Sequence[int]) -> tuple[bool, int | None]:
    """Whether ``seq`` is in ``Z_n``, and ``n`` when it is.

    Positions are 1-based: ``m_{i+1} - m_i`` is odd and positive for odd
    ``i``; ``m_i - m_{i+1}`` is odd and positive for even ``i``.
    """
    m = list(seq)
    if len(m) % 2 == 0:
        return False, None
    for i in range(1, len(m)):
        d = m[i] - m[i - 1] if i % 2 == 1 else m[i - 1] - m[i]
        if d <= 0 or d % 2 == 0:
            return False, None
    return True, (len(m) - 1) // 2


@dataclass(frozen=True)
class ZigZagSet:
    """A relatively graded set in ``Z_n``, stored by one representative."""

    gradings: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gradings", tuple(int(x) for x in self.gradings))
        ok, _ = is_zigzag(self.gradings)
        if not ok:
            raise DomainError(f"{self.gradings} is not a zig-zag sequence")

    @property
    def n(self) -> int:
        return (len(self.gradings) - 1) // 2

    def canonical(self) -> tuple[int, ...]:
        lo = min(self.gradings)
        return tuple(sorted(m - lo for m in self.gradings))

    def equivalent(self, other: "ZigZagSet") -> bool:
        return self.canonical() == other.canonical()

    def negated(self) -> tuple[int, ...]:
        return tuple(-m for m in self.gradings)

    def delta_avg(self) -> Fraction:
        return delta_avg(self.gradings)

    def __len__(self) -> int:
        return len(self.gradings)


def equivalent(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a ~ b``: equal after a common shift and a permutation."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    return sorted(x - min(a) for x in a) == sorted(x - min(b) for x in b)


def shift_S(i: int, seq: Sequence[int]) -> tuple[int, ...]:
    """``S_i``: keep ``m_1..m_i``, move the rest by ``-2`` (``i`` even) or ``+2`` (``i`` odd)."""
    m = list(seq)
    if not 1 <= i <= len(m) - 1:
        raise DomainError(f"S_{i} needs 1 <= i <= {len(m) - 1}")
    d = -2 if i % 2 == 0 else 2
    return tuple(m[:i] + [x + d for x in m[i:]])


def delta_avg(seq: Sequence[int]) -> Fraction:
    """Mean of the even-position entries minus the mean of the odd-position ones.

    A single entry has no even positions; its value is taken to be 0.
    """
    m = list(seq)
    if len(m) % 2 == 0:
        raise DomainError("delta_avg needs an odd number of entries")
    n = (len(m) - 1) // 2
    if n == 0:
        return Fraction(0)
    evens = sum(m[1::2])
    odds = sum(m[0::2])
    return Fraction(evens, n) - Fraction(odds, n + 1)


def delta_avg_gain(i: int, n: int) -> Fraction:
    """Exact increase of ``delta_avg`` under ``S_i`` on a sequence of length ``2n + 1``."""
    k = i if i % 2 == 0 else 2 * n + 1 - i
    return Fraction(k, n * (n + 1))


# -- bigons ----------------------------------------------------------------

@dataclass(frozen=True)
class BigonCounts:
    """Per-gap ``(k_t, k'_t)``: bullets and stars covered by the ``t``-th bigon."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(k), int(kk)) for k, kk in self.pairs)
        for k, kk in pairs:
            if k < 1 or kk < 1:
                raise DomainError("every bigon covers at least one puncture of each kind")
        object.__setattr__(self, "pairs", pairs)

    @property
    def bullets(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.pairs)

    @property
    def stars(self) -> tuple[int, ...]:
        return tuple(kk for _, kk in self.pairs)

    def excess(self) -> tuple[int, ...]:
        return tuple(kk - k for k, kk in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def zigzag_from_counts(counts: Sequence[int]) -> tuple[int, ...]:
    """Gradings with ``m_1 = 0`` whose gap ``t`` has size ``2 k_t - 1``, even positions on top."""
    m = [0]
    for t, k in enumerate(counts, start=1):
        step = 2 * k - 1
        m.append(m[-1] + step if t % 2 == 1 else m[-1] - step)
    return tuple(m)


@dataclass(frozen=True)
class Intersection:
    kind: str  # "V" or "D"
    column: int
    x: EpsRat
    y: EpsRat


def heights(g: int) -> list[Fraction]:
    """``H``, the puncture heights met by the curve, from top to bottom."""
    return [Fraction(2 * g - 1, 2) - t for t in range(2 * g)]


class Weave:
    """Which side of the vertical strand each bullet height sits on."""

    def __init__(self, g: int, sides: Sequence[int] | None = None):
        if g < 1:
            raise DomainError("genus must be positive")
        hs = heights(g)
        if sides is None:
            sides = [(-1) ** (t + 1) for t in range(2 * g)]
        sides = [int(s) for s in sides]
        if len(sides) != 2 * g or any(s not in (-1, 1) for s in sides):
            raise DomainError(f"a weave is {2 * g} signs, top to bottom")
        if sides[0] != -1 or sides[-1] != 1:
            raise DomainError("the curve turns around the corner punctures: top must be -1, bottom +1")
        if any(sides[t] != -sides[2 * g - 1 - t] for t in range(2 * g)):
            raise DomainError("weave must satisfy side(-h) = -side(h)")
        self.g = g
        self._side = dict(zip(hs, sides))
        self.heights = hs

    def side(self, h: Fraction) -> int:
        return self._side[h]

    def star_side(self, h: Fraction) -> int:
        return self._side[-h]


def lift_intersections(g: int, p: int, q: int, j: int) -> list[Intersection]:
    """Intersections of lift ``j`` with the sawtooth, left to right."""
    if p <= 0 or q <= 0:
        raise DomainError("gradings are only assembled for positive slopes")
    r = Fraction(p, q)
    lo, hi = Fraction(-(2 * g - 1), 2), Fraction(2 * g - 1, 2)
    steep = 2 * g - 1 - r  # line minus diagonal loses this much per unit x

    def y(a: int) -> EpsRat:
        return EpsRat(Fraction(j + p * a, q) + HALF, 1)

    # columns where the line can be inside the band
    a_lo = int((lo - Fraction(j, q) - HALF) / r) - 2
    a_hi = int((hi - Fraction(j, q) - HALF) / r) + 2
    out: list[Intersection] = []
    for a in range(a_lo, a_hi + 1):
        ya = y(a)
        if lo < ya < hi:
            out.append(Intersection("V", a, EpsRat(a), ya))
        f0 = ya - lo
        f1 = y(a + 1) - hi
        if f0.sign() * f1.sign() < 0:
            t = f0 / steep
            out.append(Intersection("D", a, t + a, ya + t * r))
    return out


def graded_spinc(g: int, p: int, q: int, j: int,
                 weave: Sequence[int] | Weave | None = None) -> tuple[ZigZagSet, BigonCounts]:
    """Zig-zag gradings and bigon counts for the Spin^c structure of lift ``j``."""
    if g < 1:
        raise DomainError("genus must be positive")
    if p <= 0:
        raise DomainError("p must be positive")
    if q <= 0:
        raise DomainError("gradings are only assembled for positive slopes")
    w = weave if isinstance(weave, Weave) else Weave(g, weave)
    pts = lift_intersections(g, p, q, j)
    kinds = "".join(pt.kind for pt in pts)
    expected = "V" + "DV" * ((len(pts) - 1) // 2)
    if not (len(pts) % 2 == 1 and (kinds == expected or (len(pts) == 1 and kinds == "D"))):
        raise AssertionError(f"unexpected intersection pattern {kinds!r} for g={g}, {p}/{q}, j={j}")
    hs = w.heights
    pairs = []
    for t in range(1, len(pts)):
        a, b = pts[t - 1], pts[t]
        if t % 2 == 1:  # V_a -> D_a, bigon below the line
            k = sum(1 for h in hs if h < a.y and w.side(h) == 1)
            kk = sum(1 for h in hs if h < b.y and w.star_side(h) == -1)
        else:  # D_a -> V_{a+1}, bigon above the line
            k = sum(1 for h in hs if h > b.y and w.side(h) == -1)
            kk = sum(1 for h in hs if h > a.y and w.star_side(h) == 1)
        assert 1 <= k <= kk, (g, p, q, j, t, k, kk)
        pairs.append((k, kk))
    counts = BigonCounts(tuple(pairs))
    return ZigZagSet(zigzag_from_counts(counts.bullets)), counts


def shifted_gradings(zz: ZigZagSet | Sequence[int], counts: BigonCounts) -> ZigZagSet:
    """Apply ``S_t`` exactly ``k'_t - k_t`` times per gap: the predicted ``-M(y)`` gradings."""
    m = tuple(zz.gradings if isinstance(zz, ZigZagSet) else zz)
    if len(counts) != len(m) - 1:
        raise DomainError(f"{len(counts)} gaps for {len(m)} generators")
    for t, extra in enumerate(counts.excess(), start=1):
        if extra < 0:
            raise DomainError("star count below bullet count")
        for _ in range(extra):
            m = shift_S(t, m)
    return ZigZagSet(m)


# -- the paired slope ------------------------------------------------------

def psi_slope(g: int, p: int, q: int) -> tuple[int, int]:
    """``(p, q')`` with ``q' = -q + p/(2g - 1)``."""
    if g < 1 or p <= 0 or q <= 0:
        raise PreconditionError("needs g >= 1 and p, q > 0")
    d = 2 * g - 1
    if p % d:
        raise NotApplicable(f"{d} does not divide p = {p}")
    qq = -q + p // d
    if qq == 0:
        raise NotApplicable("paired slope would be p/0")
    if gcd(p, qq) != 1:
        raise NotApplicable(f"p/q' = {p}/{qq} is not reduced, so it names a different slope")
    return p, qq


def thm_lspace_verify(g: int, p: int, q: int, weave: Sequence[int] | None = None) -> Verdict:
    """Rule out ``S^3_K(p/q) = -S^3_K(p/q')`` for a genus ``g >= 2`` L-space knot.

    Looks for a Spin^c lift with a bigon covering more stars than bullets.
    There ``delta_avg`` strictly increases from ``M(x)`` to ``-M(y)``, while an
    orientation-reversing homeomorphism would make them equal.
    """
    if g < 2:
        raise PreconditionError("genus one L-space knots are trefoils; handled by citation")
    if q <= 0 or p <= 0:
        raise PreconditionError("needs p, q > 0")
    if gcd(p, q) != 1:
        raise PreconditionError(f"{p}/{q} is not reduced")
    if Fraction(p, q) >= 2 * g - 1:
        raise PreconditionError(f"no opposite-sign partner unless p/q < {2 * g - 1}")
    _, qq = psi_slope(g, p, q)
    w = Weave(g, weave)
    singletons = True
    for j in range(p):
        zz, counts = graded_spinc(g, p, q, j, w)
        if len(zz) > 1:
            singletons = False
        for t, (k, kk) in enumerate(counts.pairs, start=1):
            if kk > k:
                after = shifted_gradings(zz, counts)
                return Verdict(
                    Obstructed,
                    "lspace_gradings",
                    f"lift {j} has a bigon covering {kk} stars but only {k} bullets, "
                    f"so delta_avg rises from {zz.delta_avg()} to {after.delta_avg()}",
                    {
                        "lift": j,
                        "gap": t,
                        "bullets": k,
                        "stars": kk,
                        "delta_avg_before": zz.delta_avg(),
                        "delta_avg_after": after.delta_avg(),
                        "q_prime": qq,
                        "gradings": list(zz.gradings),
                        "shifted": list(after.gradings),
                    },
                )
    reason = "every lift is a single generator" if singletons else "no bigon covers more stars than bullets"
    return Verdict(Inconclusive, "lspace_gradings", reason, {"q_prime": qq})


def admissible_pairs(g: int, p_max: int, q_max: int | None = None) -> list[tuple[int, int, int]]:
    """Opposite-sign candidates ``(p, q, q')`` left by the slope constraint for L-space knots."""
    if q_max is None:
        q_max = p_max
    d = 2 * g - 1
    out = []
    for p in range(d, p_max + 1, d):
        for q in range(p // d + 1, q_max + 1):
            try:
                _, qq = psi_slope(g, p, q)
            except NotApplicable:
                continue
            if gcd(p, q) == 1 and -qq <= q_max:
                out.append((p, q, qq))
    return out


__all__ = [
    "ZigZagSet",
    "BigonCounts",
    "Weave",
    "Intersection",
    "is_zigzag",
    "equivalent",
    "shift_S",
    "delta_avg",
    "delta_avg_gain",
    "zigzag_from_counts",
    "heights",
    "lift_intersections",
    "graded_spinc",
    "shifted_gradings",
    "psi_slope",
    "thm_lspace_verify",
    "admissible_pairs",
]

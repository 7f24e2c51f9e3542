"""Pulled-tight immersed curve data for a knot, lifted to the punctured cylinder.

A curve is recorded by ``(genus, tau, eps, n_i)``: the vertical segment count
``n_i`` at each level, and the single non-vertical segment of slope
``2*tau - eps`` that wraps the cylinder once.  Connectivity of the vertical
pieces is deliberately not stored; every rank count below needs only these
numbers.

All curves are stored with ``tau >= 0``.  A mirror flag lives with the caller
(see :mod:`surgery_sieve.cli`), which negates slopes before pairing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import DomainError
from .exactnum import HALF


@dataclass(frozen=True)
class PulledTightCurve:
    genus: int
    tau: int
    eps: int
    vertical_counts: tuple[tuple[int, int], ...] = field(default=())

    def __init__(self, genus: int, tau: int, eps: int, vertical_counts: Mapping[int, int] | None = None):
        counts = {int(k): int(v) for k, v in (vertical_counts or {}).items() if v}
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "tau", int(tau))
        object.__setattr__(self, "eps", int(eps))
        object.__setattr__(self, "vertical_counts", tuple(sorted(counts.items())))
        self._validate()

    def _validate(self) -> None:
        g, tau, eps = self.genus, self.tau, self.eps
        if g < 0:
            raise DomainError("genus must be nonnegative")
        if eps not in (-1, 0, 1):
            raise DomainError("eps must be -1, 0 or 1")
        if eps == 0 and tau != 0:
            raise DomainError("eps = 0 forces tau = 0")
        if eps != 0 and abs(self.diagonal_half_height()) > g - HALF:
            raise DomainError(f"diagonal of slope {2 * tau - eps} does not fit in genus {g}")
        n = self.n
        for i, c in self.vertical_counts:
            if c < 0:
                raise DomainError("vertical counts must be nonnegative")
            if abs(i) >= g:
                raise DomainError(f"vertical segment at level {i} outside the genus {g} support")
            if n(-i) != c:
                raise DomainError(f"n_{i} = {c} but n_{-i} = {n(-i)}: curve is not symmetric")
        if tau > 0 and n(0) < 1:
            raise DomainError("tau > 0 requires at least one vertical segment at level 0")

    def n(self, level: int) -> int:
        for i, c in self.vertical_counts:
            if i == level:
                return c
        return 0

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.vertical_counts)

    @property
    def V(self) -> int:
        return sum(c for _, c in self.vertical_counts)

    @property
    def max_n(self) -> int:
        return max((c for _, c in self.vertical_counts), default=0)

    @property
    def diagonal_slope(self) -> int:
        return 2 * self.tau - self.eps

    def diagonal_half_height(self) -> Fraction:
        """Height ``c`` of the diagonal's right endpoint; it runs from ``(0, -c)`` to ``(1, c)``."""
        return self.tau - Fraction(self.eps, 2)

    def diagonal(self) -> "DiagonalSpec":
        c = self.diagonal_half_height()
        return DiagonalSpec(self.diagonal_slope, (Fraction(0), -c), (Fraction(1), c))


@dataclass(frozen=True)
class DiagonalSpec:
    slope_s: int
    start: tuple[Fraction, Fraction]
    end: tuple[Fraction, Fraction]


def _symmetric_layout(layout: Mapping[int, int] | None) -> dict[int, int]:
    if layout is None:
        return {}
    out = {int(k): int(v) for k, v in layout.items() if v}
    for k, v in out.items():
        if v < 0:
            raise DomainError("figure-eight counts must be nonnegative")
        if out.get(-k, 0) != v:
            raise DomainError("figure-eight layout must be symmetric under level -> -level")
    return out


def _assemble(genus: int, tau: int, n_fig8: int, layout: Mapping[int, int] | None) -> PulledTightCurve:
    counts: dict[int, int] = {}
    for i in range(-(tau - 1), tau):
        counts[i] = 1
    fig = _symmetric_layout(layout) if layout is not None else {0: n_fig8}
    if sum(fig.values()) != n_fig8:
        raise DomainError(f"layout places {sum(fig.values())} figure-eights, expected {n_fig8}")
    for lvl, f in fig.items():
        counts[lvl] = counts.get(lvl, 0) + 2 * f
    need = max(tau, max((abs(l) + 1 for l, f in fig.items() if f), default=0))
    if genus is None:
        genus = need
    elif genus < need:
        raise DomainError(f"genus {genus} too small for this layout (needs {need})")
    eps = 1 if tau > 0 else 0
    return PulledTightCurve(genus, tau, eps, counts)


def thin_vertical_count(det: int, tau: int) -> int:
    """Vertical segment total of a thin knot from its determinant and ``|tau|``."""
    t = abs(tau)
    if t == 0:
        return (det - 1) // 2
    return (det + 2 * t - 3) // 2


def curve_from_thin(det: int, tau: int, layout: Mapping[int, int] | None = None,
                    genus: int | None = None) -> PulledTightCurve:
    """Curve of a homologically thin knot: one staircase of height ``|tau|`` plus figure-eights.

    ``layout`` maps level -> number of height-one figure-eight components at
    that level (it must be symmetric); by default every figure-eight sits at
    level 0.  ``genus`` defaults to the smallest genus the layout fits in.
    """
    if det <= 0 or det % 2 == 0:
        raise DomainError("a knot determinant is a positive odd integer")
    t = abs(tau)
    V = thin_vertical_count(det, t)
    staircase = 2 * t - 1 if t else 0
    rest = V - staircase
    if rest < 0:
        raise DomainError(f"det {det} is too small for a staircase with |tau| = {t}")
    if rest % 2:
        raise DomainError(f"det {det} leaves an odd number of vertical segments beside the staircase")
    return _assemble(genus, t, rest // 2, layout)


def curve_lspace(g: int) -> PulledTightCurve:
    """The single embedded staircase of a genus ``g`` L-space knot (``tau = g``)."""
    if g < 1:
        raise DomainError("an L-space knot model needs genus >= 1")
    return PulledTightCurve(g, g, 1, {i: 1 for i in range(-(g - 1), g)})


def curve_from_pretzel(ks, layout: Mapping[int, int] | None = None) -> PulledTightCurve:
    """Curve of the odd alternating pretzel knot ``K(k_1, ..., k_{2g+1})``."""
    from .polyalg import det_pretzel, pretzel_genus

    g = pretzel_genus(ks)
    det = det_pretzel(ks)
    V = g - Fraction(3, 2) + Fraction(det, 2)
    fig8 = (V - (2 * g - 1)) / 2
    assert fig8.denominator == 1 and fig8 >= 0
    return _assemble(g, g, int(fig8), layout)


@dataclass(frozen=True)
class VerticalSegment:
    x: Fraction
    level: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class PLRealization:
    verticals: tuple[VerticalSegment, ...]
    diagonal: DiagonalSpec | None
    horizontal_height: Fraction | None


def realize_pl(curve: PulledTightCurve, clearance) -> PLRealization:
    """Explicit coordinates on the cylinder ``[0, 1) x R`` for the pulled-tight curve.

    Vertical segments stack just left of the meridian line ``x = 1 ~ 0`` at
    spacing ``clearance`` and stop ``clearance`` short of the punctures.
    """
    eta = Fraction(clearance)
    if eta <= 0:
        raise DomainError("clearance must be positive")
    if eta * curve.max_n >= Fraction(1, 4) or eta >= HALF:
        raise DomainError("clearance too large for the vertical stacks to fit in (3/4, 1)")
    segs = []
    for level, c in curve.vertical_counts:
        for t in range(1, c + 1):
            segs.append(VerticalSegment(1 - t * eta, level, level - HALF + eta, level + HALF - eta))
    if curve.eps == 0:
        return PLRealization(tuple(segs), None, Fraction(0))
    return PLRealization(tuple(segs), curve.diagonal(), None)

"""Closed-form invariant packages for pretzel, double twist and Whitehead double knots.

``v3`` is normalized so that the right-handed trefoil has ``v3 = 1``.  Ito's
surgery identity is usually quoted with the normalization ``v3(trefoil) = 1/4``;
every formula in this package already uses the trefoil-equals-one convention,
so no rescaling happens anywhere downstream.

Unknown fields are ``None``, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError
from .polyalg import (
    conway_double_twist,
    conway_from_seifert,
    det_pretzel,
    elem_sym_all,
    pretzel_genus,
    seifert_pretzel,
)


@dataclass(frozen=True)
class InvariantPackage:
    genus: int
    tau: int | None
    eps: int | None
    V: int | None
    a2: int | None
    a4: int | None
    v3: Fraction | None
    det: int | None
    lspace_knot: bool | None
    conway_degree: int | None = None
    signature: int | None = None

    @property
    def tau_equals_genus(self) -> bool:
        return self.tau is not None and self.tau == self.genus and self.genus > 0

    def lmo_quantity(self) -> int | None:
        """``7 a2^2 - a2 - 10 a4``, the right side of the finite type surgery identity."""
        if self.a2 is None or self.a4 is None:
            return None
        return 7 * self.a2 ** 2 - self.a2 - 10 * self.a4


def _pretzel_v3(g: int, s1: int, s2: int, s3: int) -> Fraction:
    return Fraction(
        Fraction(g * (g + 1) * (2 * g + 1), 3)
        + g * (2 * g + 1) * s1 + g * s1 ** 2 + 2 * g * s2 + s1 * s2 + s3,
        2,
    )


def pretzel_package(ks: Sequence[int]) -> InvariantPackage:
    g = pretzel_genus(ks)
    s = elem_sym_all(ks) + [0, 0, 0]
    s1, s2, s3 = s[1], s[2], s[3]
    a2 = Fraction(g * (g + 1), 2) + g * s1 + s2
    v3 = _pretzel_v3(g, s1, s2, s3)
    det = det_pretzel(ks)
    V = g - Fraction(3, 2) + Fraction(det, 2)
    conway = conway_from_seifert(seifert_pretzel(ks))
    assert conway[2] == a2, (conway[2], a2)
    return InvariantPackage(
        genus=g,
        tau=g,
        eps=1,
        V=int(V),
        a2=int(a2),
        a4=conway[4],
        v3=v3,
        det=det,
        lspace_knot=all(k == 0 for k in ks),
        conway_degree=conway.degree,
        signature=-2 * g,
    )


def double_twist_package(k: int, g: int) -> InvariantPackage:
    """``J(-(2k+1), 2g) = K(k, 0, ..., 0)`` from its closed forms in ``k`` and ``g``."""
    if k < 0 or g < 1:
        raise DomainError("double twist knots here need k >= 0 and g >= 1")
    a2 = Fraction(g * (g + 1), 2) + k * g
    v3 = Fraction(Fraction(g * (g + 1) * (2 * g + 1), 3) + g * (2 * g + 1) * k + g * k * k, 2)
    V = 2 * g - 1 + 2 * g * k
    a4 = comb(g + 2, 4) + k * comb(g + 1, 3)
    pkg = InvariantPackage(
        genus=g,
        tau=g,
        eps=1,
        V=V,
        a2=int(a2),
        a4=a4,
        v3=v3,
        det=2 * g + 1 + 4 * g * k,
        lspace_knot=(k == 0),
        conway_degree=conway_double_twist(k, g).degree,
        signature=-2 * g,
    )
    ref = pretzel_package([k] + [0] * (2 * g))
    if ref != pkg:
        raise AssertionError(f"double twist closed form disagrees with pretzel package: {pkg} vs {ref}")
    return pkg


def whitehead_tau(tau_companion: int, n: int) -> int:
    return 1 if n < 2 * tau_companion else 0


def whitehead_package(a2_companion: int, tau_companion: int, n: int) -> InvariantPackage:
    """``D_+(K, n)`` from the companion's ``a2`` and ``tau``.

    The Conway polynomial is ``1 - n z^2``, so ``a2 = -n``, ``a4 = 0`` and
    ``det = |1 + 4n|``.  ``V`` depends on more than these inputs and stays unknown.
    """
    tau = whitehead_tau(tau_companion, n)
    return InvariantPackage(
        genus=1,
        tau=tau,
        eps=1 if tau == 1 else None,
        V=None,
        a2=-n,
        a4=0,
        v3=Fraction(-2 * a2_companion) + Fraction(n * n - n, 2),
        det=abs(1 + 4 * n),
        lspace_knot=None,
        conway_degree=2 if n != 0 else 0,
        signature=None,
    )


def thin_package(det: int, tau: int, genus: int | None = None) -> InvariantPackage:
    """A thin knot with the given determinant and ``tau``; negative ``tau`` is the mirror."""
    from .curvemodel import curve_from_thin

    curve = curve_from_thin(det, tau, genus=genus)
    return InvariantPackage(
        genus=curve.genus,
        tau=tau,
        eps=(tau > 0) - (tau < 0),
        V=curve.V,
        a2=None,
        a4=None,
        v3=None,
        det=det,
        lspace_knot=None,
    )


def lspace_package(g: int) -> InvariantPackage:
    """A positive genus ``g`` L-space knot.  In genus one that is the right-handed trefoil."""
    if g < 1:
        raise DomainError("an L-space knot model needs genus >= 1")
    if g == 1:
        return pretzel_package([0, 0, 0])
    return InvariantPackage(
        genus=g, tau=g, eps=1, V=2 * g - 1, a2=None, a4=None, v3=None, det=None, lspace_knot=True
    )

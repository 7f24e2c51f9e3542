"""Obstructions to chirally cosmetic surgery pairs, and the family classifiers.

Every check evaluates its identity or inequality exactly at the given
numbers.  The identities are homogeneous in ``(p, q, q')``, so slopes are not
required to be reduced here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .invariants import pretzel_package, whitehead_package, whitehead_tau
from .polyalg import pretzel_genus
from .verdict import (
    ByCitation,
    ConsistentWith,
    Inconclusive,
    Obstructed,
    Status,
    Verdict,
    jsonable,
)

__all__ = [
    "Status",
    "Verdict",
    "Obstructed",
    "ConsistentWith",
    "Inconclusive",
    "ByCitation",
    "jsonable",
    "lmo_quantity",
    "thm_main_check",
    "thm_ft_check",
    "cor_combo_check",
    "lemma_ft2_check",
    "lspace_gate",
    "classify_pretzel",
    "classify_whitehead",
    "enumerate_main_pairs",
    "pretzel_certificate",
    "double_twist_k_polynomial",
]

CITE_IIS_TORUS = "Ichihara-Ito-Saito, Corollary A.2: classification of chirally cosmetic surgeries on (2, 2g+1) torus knots"
CITE_IIS_GENUS1 = "Ichihara-Ito-Saito, Theorem 6.4: genus one alternating knots"
CITE_CCP = "[CCP], Theorem 1.1: genus two and three alternating odd pretzel knots"
CITE_OSZ = "Ozsvath-Szabo, Knot Floer homology and rational surgeries, Theorem 9.8: same-sign cosmetic pairs force an L-space surgery"


def lmo_quantity(a2: int, a4: int) -> int:
    """``7 a2^2 - a2 - 10 a4``."""
    return 7 * a2 * a2 - a2 - 10 * a4


def thm_main_check(g: int, tau: int, V: int, p: int, q: int, qq: int) -> Verdict:
    """Slope constraint for ``tau = g > 0`` and ``p, q > 0 > q'``.

    A cosmetic pair needs ``p/q <= 2g - 1`` and ``2p = (V + 2g - 1)(q + q')``.
    """
    if not (tau == g and g > 0):
        return Verdict(Inconclusive, "main", f"needs tau = g > 0 (tau = {tau}, g = {g})")
    if not (p > 0 and q > 0 and qq < 0):
        return Verdict(Inconclusive, "main", "needs p, q > 0 and q' < 0")
    bound = 2 * g - 1
    w = {"p": p, "q": q, "q_prime": qq, "slope": Fraction(p, q), "bound": bound}
    if Fraction(p, q) > bound:
        return Verdict(Obstructed, "main", f"p/q = {Fraction(p, q)} exceeds 2g - 1 = {bound}", w)
    lhs, rhs = 2 * p, (V + 2 * g - 1) * (q + qq)
    w.update(lhs=lhs, rhs=rhs)
    if lhs != rhs:
        return Verdict(Obstructed, "main", f"2p = {lhs} but (V + 2g - 1)(q + q') = {rhs}", w)
    return Verdict(ConsistentWith, "main", "slope bound and rank identity both hold", w)


def thm_ft_check(a2: int, a4: int, v3, p: int, q: int, qq: int) -> Verdict:
    """``2 p v3 = (7 a2^2 - a2 - 10 a4)(q + q')`` for any cosmetic pair with ``q != q'``."""
    if q == qq:
        return Verdict(Inconclusive, "finite_type", "the two slopes coincide")
    v3 = Fraction(v3)
    lhs = 2 * p * v3
    rhs = lmo_quantity(a2, a4) * (q + qq)
    w = {"lhs": lhs, "rhs": rhs, "p": p, "q": q, "q_prime": qq}
    if lhs != rhs:
        return Verdict(Obstructed, "finite_type", f"2 p v3 = {lhs} but (7a2^2 - a2 - 10a4)(q + q') = {rhs}", w)
    return Verdict(ConsistentWith, "finite_type", "finite type identity holds", w)


def cor_combo_check(g: int, V: int, a2: int, a4: int, v3) -> Verdict:
    """Slope-free form for ``tau = g``: ``v3 (V + 2g - 1) = 7 a2^2 - a2 - 10 a4``.

    The caller is responsible for ``tau = g``; it rules out opposite-sign pairs only.
    """
    v3 = Fraction(v3)
    if v3 == 0:
        return Verdict(Inconclusive, "combo", "v3 = 0: the slopes cannot be eliminated")
    lhs = v3 * (V + 2 * g - 1)
    rhs = lmo_quantity(a2, a4)
    w = {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs}
    if lhs != rhs:
        return Verdict(Obstructed, "combo", f"v3 (V + 2g - 1) = {lhs} but 7a2^2 - a2 - 10a4 = {rhs}", w)
    return Verdict(ConsistentWith, "combo", "identity holds", w)


def lemma_ft2_check(a2: int, a4: int, v3, d: int) -> Verdict:
    """Casson-type bound ``4|a2| <= d |(7 a2^2 - a2 - 10 a4) / (2 v3)|`` for pairs with ``q + q' != 0``."""
    v3 = Fraction(v3)
    if v3 == 0:
        return Verdict(Inconclusive, "casson", "v3 = 0")
    lhs = 4 * abs(a2)
    rhs = d * abs(Fraction(lmo_quantity(a2, a4)) / (2 * v3))
    w = {"lhs": lhs, "rhs": rhs, "conway_degree": d}
    if lhs > rhs:
        return Verdict(Obstructed, "casson", f"4|a2| = {lhs} exceeds d |(7a2^2 - a2 - 10a4)/(2 v3)| = {rhs}", w)
    return Verdict(ConsistentWith, "casson", "bound holds", w)


def lspace_gate(lspace_knot: bool | None) -> Verdict:
    """Same-sign cosmetic pairs only exist on L-space knots."""
    if lspace_knot is None:
        return Verdict(Inconclusive, "lspace_gate", "unknown whether the knot is an L-space knot")
    if lspace_knot:
        return Verdict(ConsistentWith, "lspace_gate", "L-space knot: same-sign pairs are not excluded")
    return Verdict(Obstructed, "lspace_gate", "not an L-space knot, so no same-sign pair", citation=CITE_OSZ)


def double_twist_k_polynomial(g: int, k: int) -> Fraction:
    """``v3 (V + 2g - 1) - 7 a2^2 + a2 + 10 a4`` for ``J(-(2k+1), 2g)``, expanded in ``k``."""
    g = Fraction(g)
    return (
        g * (g + 1) * (-Fraction(4, 3) * g - Fraction(2, 3))
        + g * (Fraction(2, 3) * g ** 3 - Fraction(1, 3) * g ** 2 - Fraction(20, 3) * g - Fraction(5, 3)) * k
        + g * (2 * g * g - 4 * g - 1) * k * k
        + g * g * k ** 3
    )


def pretzel_certificate(ks: Sequence[int]) -> dict:
    """Exact values behind the opposite-sign obstruction for ``K(ks)``."""
    pkg = pretzel_package(ks)
    g = pkg.genus
    lhs = pkg.v3 * (pkg.V + 2 * g - 1)
    quantity = lhs - pkg.lmo_quantity()
    out = {
        "g": g,
        "v3": pkg.v3,
        "V": pkg.V,
        "a2": pkg.a2,
        "a4": pkg.a4,
        "quantity": quantity,
        "gap_over_7a2sq": lhs - 7 * pkg.a2 ** 2,
    }
    nonzero = [k for k in ks if k]
    if len(nonzero) == 1:
        out["k"] = nonzero[0]
        out["k_polynomial"] = double_twist_k_polynomial(g, nonzero[0])
    return out


def classify_pretzel(ks: Sequence[int]) -> Verdict:
    g = pretzel_genus(ks)
    nonzero = sum(1 for k in ks if k)
    if nonzero == 0:
        return Verdict(
            ByCitation,
            "pretzel",
            f"K(0,...,0) is the torus knot T(2,{2 * g + 1}), which does admit chirally cosmetic surgeries",
            {"g": g},
            citation=CITE_IIS_TORUS,
        )
    if g == 1:
        return Verdict(ByCitation, "pretzel", "genus one: no chirally cosmetic surgeries", {"g": g},
                       citation=CITE_IIS_GENUS1)
    if g in (2, 3):
        return Verdict(ByCitation, "pretzel", "genus two or three: no chirally cosmetic surgeries", {"g": g},
                       citation=CITE_CCP)
    cert = pretzel_certificate(ks)
    q = cert["quantity"]
    if q == 0:
        # would contradict the classification; surface it rather than hide it
        return Verdict(Inconclusive, "pretzel", "combination identity unexpectedly holds", cert)
    if nonzero >= 2 and not cert["gap_over_7a2sq"] > 0:
        return Verdict(Inconclusive, "pretzel", "expected v3 (V + 2g - 1) > 7 a2^2", cert)
    if nonzero == 1 and cert["k_polynomial"] != q:
        raise AssertionError(f"k-polynomial {cert['k_polynomial']} disagrees with package arithmetic {q}")
    gate = lspace_gate(False)
    cert["same_sign"] = gate.reason
    return Verdict(
        Obstructed,
        "pretzel",
        f"opposite signs: v3 (V + 2g - 1) - (7a2^2 - a2 - 10a4) = {q} != 0; "
        f"same sign: not an L-space knot",
        cert,
        citation=CITE_OSZ,
    )


def classify_whitehead(a2_companion: int, tau_companion: int, n: int) -> Verdict:
    pkg = whitehead_package(a2_companion, tau_companion, n)
    w = {"n": n, "a2": pkg.a2, "a4": pkg.a4, "v3": pkg.v3, "tau": pkg.tau}
    if n == 0:
        if a2_companion != 0:
            # a2 = a4 = 0 and v3 != 0 make 2 p v3 = 0 force p = 0
            return Verdict(Obstructed, "whitehead",
                           f"zero framing: v3 = {pkg.v3} != 0 while a2 = a4 = 0, forcing p = 0", w)
        return Verdict(Inconclusive, "whitehead", "zero framing with a2 of the companion equal to 0", w)
    if a2_companion != 0:
        return Verdict(Inconclusive, "whitehead", "companion a2 != 0 and nonzero framing", w)
    if abs(n) >= 5:
        # q + q' = 0 is excluded by the finite type identity since v3 != 0
        ft2 = lemma_ft2_check(pkg.a2, pkg.a4, pkg.v3, pkg.conway_degree)
        assert ft2.obstructed
        w.update(ft2.witness)
        return Verdict(Obstructed, "whitehead",
                       "v3 != 0 rules out q + q' = 0, and then " + ft2.reason, w)
    if n in (-4, -2, 1, 4) and 2 * tau_companion > n:
        assert whitehead_tau(tau_companion, n) == 1
        same = "not an L-space knot (a genus one L-space knot is a trefoil, with a2 = 1)"
        w["same_sign"] = same
        if n == 1:
            # v3 = 0: the identity v3 (V + 1) = 7 a2^2 - a2 - 10 a4 reads 0 = 8
            w.update(lhs=0, rhs=lmo_quantity(pkg.a2, pkg.a4))
            return Verdict(Obstructed, "whitehead", "opposite signs: identity reads 0 = 8; same sign: " + same, w)
        target = 7 + Fraction(8, n - 1)
        w["half_V_plus_1"] = target
        assert target.denominator != 1
        return Verdict(
            Obstructed,
            "whitehead",
            f"opposite signs: (V + 1)/2 would equal {target}, not an integer though V is odd; same sign: {same}",
            w,
        )
    return Verdict(Inconclusive, "whitehead", "outside the framings covered", w)


def enumerate_main_pairs(g: int, V: int, p_max: int, q_max: int | None = None) -> list[tuple[int, int, int]]:
    """Reduced ``(p, q, q')`` with ``q > 0 > q'``, ``p/q <= 2g - 1`` and ``2p = (V + 2g - 1)(q + q')``.

    For fixed ``p`` the equation leaves infinitely many ``q``, so ``q`` and ``|q'|``
    are capped by ``q_max`` (default ``p_max``).
    """
    if q_max is None:
        q_max = p_max
    c = V + 2 * g - 1
    out = []
    for p in range(1, p_max + 1):
        if (2 * p) % c:
            continue
        s = 2 * p // c
        for q in range(max(1, s + 1), q_max + 1):
            qq = s - q
            if qq >= 0 or -qq > q_max:
                continue
            if Fraction(p, q) > 2 * g - 1:
                continue
            if gcd(p, q) == 1 and gcd(p, qq) == 1:
                out.append((p, q, qq))
    return out

"""``surgery-sieve``: invariant reports, ranks, obstruction runs and scans.

Knot specs::

    pretzel:k1,k2,...,k(2g+1)   odd alternating pretzel K(k1, ..., k(2g+1))
    doubletwist:k,g             J(-(2k+1), 2g)
    whitehead:a2,tau,n          D+(K, n) from the companion's a2 and tau
    thin:det,tau                a thin knot (figure-eights placed at level 0)
    lspace:g                    a positive genus g L-space knot

Exit codes: 0 success, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import lspace, obstruct, pairing
from .curvemodel import PulledTightCurve, curve_from_pretzel, curve_from_thin, curve_lspace
from .errors import DomainError, NotApplicable, ParseError, PreconditionError, SurgerySieveError
from .exactnum import Slope
from .invariants import (
    InvariantPackage,
    double_twist_package,
    lspace_package,
    pretzel_package,
    thin_package,
    whitehead_package,
)
from .verdict import ByCitation, ConsistentWith, Inconclusive, Obstructed, Verdict, jsonable

SCHEMA = "surgery-sieve/1"

ARITY = {"pretzel": None, "doubletwist": 2, "whitehead": 3, "thin": 2, "lspace": 1}


# -- parsing ---------------------------------------------------------------

@dataclass(frozen=True)
class FamilyKnot:
    family: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"

    def package(self) -> InvariantPackage:
        f, a = self.family, self.params
        if f == "pretzel":
            return pretzel_package(a)
        if f == "doubletwist":
            return double_twist_package(*a)
        if f == "whitehead":
            return whitehead_package(*a)
        if f == "thin":
            return thin_package(*a)
        return lspace_package(*a)

    def curve(self) -> tuple[PulledTightCurve, bool]:
        """The stored curve and whether slopes must be negated to use it (mirror)."""
        f, a = self.family, self.params
        if f == "pretzel":
            return curve_from_pretzel(a), False
        if f == "doubletwist":
            k, g = a
            if k < 0 or g < 1:
                raise DomainError("double twist knots here need k >= 0 and g >= 1")
            return curve_from_pretzel([k] + [0] * (2 * g)), False
        if f == "thin":
            det, tau = a
            return curve_from_thin(det, tau), tau < 0
        if f == "lspace":
            return curve_lspace(a[0]), False
        raise DomainError("Whitehead doubles have no curve model here: V is not determined by the inputs")


_INT = re.compile(r"[+-]?\d+")


def parse_knot_spec(text: str) -> FamilyKnot:
    colon = text.find(":")
    if colon < 0:
        raise ParseError(text, len(text), "':' after a family name")
    family = text[:colon]
    if family not in ARITY:
        raise ParseError(text, 0, "one of " + ", ".join(ARITY))
    pos = colon + 1
    params = []
    while True:
        m = _INT.match(text, pos)
        if not m:
            raise ParseError(text, pos, "an integer")
        params.append(int(m.group()))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise ParseError(text, pos, "',' or end of input")
        pos += 1
    want = ARITY[family]
    if family == "pretzel":
        if len(params) < 3 or len(params) % 2 == 0:
            raise ParseError(text, len(text), f"an odd number (>= 3) of parameters, got {len(params)}")
    elif len(params) != want:
        raise ParseError(text, len(text), f"{want} parameter{'s' if want > 1 else ''}, got {len(params)}")
    return FamilyKnot(family, tuple(params))


_SLOPE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*")


def parse_slope(text: str) -> Slope:
    if text.strip().lower() in ("inf", "infinity", "1/0"):
        return Slope(1, 0)
    m = _SLOPE.fullmatch(text)
    if not m:
        bad = next((i for i, c in enumerate(text) if not (c.isdigit() or c in "+-/ ")), len(text))
        raise ParseError(text, bad, "a slope 'p/q' or 'inf'")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if p == 0 and q == 0:
        raise ParseError(text, 0, "a slope other than 0/0")
    return Slope(p, q)


def _protect_negative_slopes(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/3" as an option; "1/-3" is the same slope
    out = []
    for tok in argv:
        m = re.fullmatch(r"-(\d+)/(\d+)", tok)
        out.append(f"{m.group(1)}/-{m.group(2)}" if m else tok)
    return out


# -- reports ---------------------------------------------------------------

def _report(body: dict) -> dict:
    out = {"schema": SCHEMA}
    out.update({k: jsonable(v) for k, v in body.items() if v is not None})
    return out


def cmd_invariants(spec: str) -> dict:
    knot = parse_knot_spec(spec)
    pkg = knot.package()
    return _report({
        "spec": str(knot),
        "family": knot.family,
        "g": pkg.genus,
        "tau": pkg.tau,
        "eps": pkg.eps,
        "V": pkg.V,
        "a2": pkg.a2,
        "a4": pkg.a4,
        "v3": pkg.v3,
        "det": pkg.det,
        "lspace_knot": pkg.lspace_knot,
    })


def _oriented(curve_slope: Slope, mirror: bool) -> Slope:
    return Slope(curve_slope.p, -curve_slope.q) if mirror else curve_slope


def cmd_rank(spec: str, slope: str, spinc: bool = False) -> dict:
    knot = parse_knot_spec(spec)
    s = parse_slope(slope)
    curve, mirror = knot.curve()
    t = _oriented(s, mirror)
    total = pairing.total_rank(curve, t)
    body: dict[str, Any] = {"spec": str(knot), "slope": str(s), "total": total}
    if t.p != 0:
        per = pairing.spinc_ranks(curve, t)
        if sum(per) != total:
            raise AssertionError(f"per-Spin^c ranks {per} do not sum to {total}")
        if spinc:
            body["per_spinc"] = per
    elif spinc:
        raise DomainError("slope 0 has no finite Spin^c decomposition")
    return _report(body)


def _classifier(knot: FamilyKnot) -> Verdict | None:
    if knot.family == "pretzel":
        return obstruct.classify_pretzel(knot.params)
    if knot.family == "doubletwist":
        k, g = knot.params
        if k < 0 or g < 1:
            raise DomainError("double twist knots here need k >= 0 and g >= 1")
        return obstruct.classify_pretzel([k] + [0] * (2 * g))
    if knot.family == "whitehead":
        return obstruct.classify_whitehead(*knot.params)
    return None


class _Battery:
    """Everything about a knot that the per-pair checks reuse."""

    def __init__(self, knot: FamilyKnot):
        self.knot = knot
        self.pkg = knot.package()
        try:
            self.curve, self.mirror = knot.curve()
        except DomainError:
            self.curve, self.mirror = None, False
        self.classified = _classifier(knot)

    def run(self, s1: Slope, s2: Slope) -> tuple[list[Verdict], str]:
        if s1.is_infinite or s2.is_infinite:
            raise DomainError("the slope at infinity gives S^3 and is never half of a cosmetic pair")
        if s1 == s2:
            raise DomainError("the two slopes coincide")
        if s1.p != s2.p:
            raise DomainError(
                f"|H_1| differs ({s1.p} vs {s2.p}): surgeries with different numerators are never homeomorphic"
            )
        p = s1.p
        if p == 0:
            raise DomainError("slope 0 cannot be part of a cosmetic pair with a distinct slope")
        pkg = self.pkg
        out: list[Verdict] = []
        if self.classified is not None and self.classified.status in (Obstructed, ByCitation):
            out.append(self.classified)
        if self.curve is not None:
            r1 = pairing.total_rank(self.curve, _oriented(s1, self.mirror))
            r2 = pairing.total_rank(self.curve, _oriented(s2, self.mirror))
            w = {"rank_1": r1, "rank_2": r2}
            if r1 != r2:
                out.append(Verdict(Obstructed, "total_rank", f"HF ranks differ: {r1} vs {r2}", w))
            else:
                out.append(Verdict(ConsistentWith, "total_rank", "HF ranks agree", w))
        if None not in (pkg.a2, pkg.a4, pkg.v3):
            out.append(obstruct.thm_ft_check(pkg.a2, pkg.a4, pkg.v3, p, s1.q, s2.q))
        opposite = s1.sign() * s2.sign() < 0
        if opposite:
            q, qq = (s1.q, s2.q) if s1.q > 0 else (s2.q, s1.q)
            if pkg.tau is not None and pkg.V is not None:
                if pkg.tau < 0:
                    # the mirror has tau = |tau| and sees the slopes negated
                    out.append(obstruct.thm_main_check(pkg.genus, -pkg.tau, pkg.V, p, -qq, -q))
                else:
                    out.append(obstruct.thm_main_check(pkg.genus, pkg.tau, pkg.V, p, q, qq))
            if pkg.tau_equals_genus and None not in (pkg.V, pkg.a2, pkg.a4, pkg.v3):
                out.append(obstruct.cor_combo_check(pkg.genus, pkg.V, pkg.a2, pkg.a4, pkg.v3))
            if pkg.lspace_knot and pkg.genus >= 2:
                try:
                    out.append(lspace.thm_lspace_verify(pkg.genus, p, q))
                except (PreconditionError, NotApplicable) as e:
                    out.append(Verdict(Inconclusive, "lspace_gradings", f"not applicable: {e}"))
        if s1.q + s2.q != 0 and None not in (pkg.a2, pkg.a4, pkg.v3, pkg.conway_degree) and pkg.v3 != 0:
            out.append(obstruct.lemma_ft2_check(pkg.a2, pkg.a4, pkg.v3, pkg.conway_degree))
        if not opposite:
            out.append(obstruct.lspace_gate(pkg.lspace_knot))
        return out, summarize(out)


def summarize(verdicts: Sequence[Verdict]) -> str:
    if any(v.status is Obstructed for v in verdicts):
        return "obstructed"
    if any(v.status is ConsistentWith for v in verdicts):
        return "consistent"
    return "inconclusive"


def cmd_obstruct(spec: str, slope1: str, slope2: str) -> dict:
    knot = parse_knot_spec(spec)
    s1, s2 = parse_slope(slope1), parse_slope(slope2)
    verdicts, summary = _Battery(knot).run(s1, s2)
    return _report({
        "spec": str(knot),
        "slopes": [str(s1), str(s2)],
        "verdicts": [v.to_json() for v in verdicts],
        "summary": summary,
    })


def cmd_classify(spec: str) -> dict:
    knot = parse_knot_spec(spec)
    v = _classifier(knot)
    if v is None:
        raise DomainError(f"no classifier for the {knot.family} family; use 'obstruct' or 'scan'")
    body = {"spec": str(knot)}
    body.update(v.to_json())
    return _report(body)


def cmd_scan(spec: str, p_max: int, q_max: int | None = None) -> dict:
    """Opposite-sign candidates left by the slope constraint, then the full battery on each."""
    knot = parse_knot_spec(spec)
    if p_max < 0:
        raise DomainError("--p-max must be nonnegative")
    bat = _Battery(knot)
    pkg = bat.pkg
    q_max = p_max if q_max is None else q_max
    body: dict[str, Any] = {"spec": str(knot), "p_max": p_max, "q_max": q_max}
    if bat.classified is not None and bat.classified.status is Obstructed and pkg.V is None:
        body.update(candidates=0, survivors=[], classified=bat.classified.to_json())
        return _report(body)
    if pkg.tau is None or pkg.V is None or abs(pkg.tau) != pkg.genus or pkg.genus == 0:
        raise DomainError("scan needs |tau| = g > 0 and a known V")
    cands = obstruct.enumerate_main_pairs(pkg.genus, pkg.V, p_max, q_max)
    survivors = []
    for p, q, qq in cands:
        if pkg.tau < 0:
            # candidates live on the mirror; p/q, p/q' there is p/(-q'), p/(-q) here
            q, qq = -qq, -q
        _, summary = bat.run(Slope(p, q), Slope(p, qq))
        if summary != "obstructed":
            survivors.append({"p": p, "q": q, "q_prime": qq, "summary": summary})
    body.update(candidates=len(cands), survivors=survivors)
    return _report(body)


# -- entry point -----------------------------------------------------------

def _emit(report: dict, text: bool) -> None:
    if not text:
        print(json.dumps(report, sort_keys=True))
        return
    for k in sorted(report):
        v = report[k]
        print(f"{k}: {v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True)}")


def _format_flags(top: bool) -> argparse.ArgumentParser:
    # subcommands must not reset a flag given before the subcommand name
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    d = {} if top else {"default": argparse.SUPPRESS}
    g.add_argument("--json", dest="text", action="store_false", help="JSON output (default)", **d)
    g.add_argument("--text", dest="text", action="store_true", help="one 'key: value' line per field", **d)
    if top:
        fmt.set_defaults(text=False)
    return fmt


def build_parser() -> argparse.ArgumentParser:
    fmt = _format_flags(top=False)
    ap = argparse.ArgumentParser(prog="surgery-sieve", description=__doc__.split("\n")[0],
                                 parents=[_format_flags(top=True)])
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("invariants", parents=[fmt], help="invariant package of a knot")
    p.add_argument("spec")
    p = sub.add_parser("rank", parents=[fmt], help="rank of HF-hat of a surgery")
    p.add_argument("spec")
    p.add_argument("slope")
    p.add_argument("--spinc", action="store_true", help="also list the rank in each Spin^c structure")
    p = sub.add_parser("obstruct", parents=[fmt], help="run every applicable obstruction on a slope pair")
    p.add_argument("spec")
    p.add_argument("slope1")
    p.add_argument("slope2")
    p = sub.add_parser("classify", parents=[fmt], help="family-level verdict")
    p.add_argument("spec")
    p = sub.add_parser("scan", parents=[fmt], help="surviving opposite-sign candidate pairs")
    p.add_argument("spec")
    p.add_argument("--p-max", type=int, default=100)
    p.add_argument("--q-max", type=int, default=None, help="cap on q and |q'| (default: p-max)")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    argv = _protect_negative_slopes(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "invariants":
            rep = cmd_invariants(args.spec)
        elif args.cmd == "rank":
            rep = cmd_rank(args.spec, args.slope, args.spinc)
        elif args.cmd == "obstruct":
            rep = cmd_obstruct(args.spec, args.slope1, args.slope2)
        elif args.cmd == "classify":
            rep = cmd_classify(args.spec)
        else:
            rep = cmd_scan(args.spec, args.p_max, args.q_max)
    except ParseError as e:
        print(f"surgery-sieve: parse error {e}", file=sys.stderr)
        return 2
    except SurgerySieveError as e:
        print(f"surgery-sieve: {e}", file=sys.stderr)
        return 3
    _emit(rep, args.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

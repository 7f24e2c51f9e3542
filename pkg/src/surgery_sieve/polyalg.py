"""Integer polynomials, elementary symmetric functions, Seifert matrices.

Conway polynomials of the pretzel / double-twist / torus-link families are
assembled two ways: from closed binomial formulas and the Conway skein
relation, and from a Seifert matrix.  The second route is the independent
check on the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[d]`` is the coefficient of ``z**d``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


Z = IntPolynomial([0, 1])
ONE = IntPolynomial([1])


# -- elementary symmetric polynomials -------------------------------------

def elem_sym_all(ks: Sequence[int]) -> list[int]:
    """``[s_0, s_1, ..., s_m]`` of ``ks`` via ``s_{n,m+1} = s_{n,m} + k_{m+1} s_{n-1,m}``."""
    s = [1]
    for k in ks:
        s.append(0)
        for n in range(len(s) - 1, 0, -1):
            s[n] += k * s[n - 1]
    return s


def elem_sym(n: int, ks: Sequence[int]) -> int:
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if n > len(ks):
        return 0
    return elem_sym_all(ks)[n]


# -- torus links, double twist knots ---------------------------------------

def conway_torus_link(n: int) -> IntPolynomial:
    """Conway polynomial of the ``(2, n)`` torus link, all orders, from its binomial closed form."""
    if n < 1:
        raise DomainError("need n >= 1")
    g, odd = divmod(n, 2)
    coeffs = [0] * (n + 1)
    if odd:
        for j in range(0, g + 1):
            coeffs[2 * j] = comb(g + j, 2 * j)
    else:
        for j in range(1, g + 1):
            coeffs[2 * j - 1] = comb(g + j - 1, 2 * j - 1)
    return IntPolynomial(coeffs)


def conway_torus_link_skein(n: int) -> IntPolynomial:
    """Same polynomial by resolving one crossing at a time: ``T(2,n) = T(2,n-2) + z T(2,n-1)``."""
    if n < 1:
        raise DomainError("need n >= 1")
    prev, cur = IntPolynomial(), ONE  # T(2,0) two-component unlink, T(2,1) unknot
    for _ in range(1, n):
        prev, cur = cur, prev + Z * cur
    return cur


def conway_double_twist(k: int, g: int) -> IntPolynomial:
    """``J(-(2k+1), 2g)``: crossing changes in the odd twist region peel off ``z * T(2, 2g)``."""
    if k < 0 or g < 0:
        raise DomainError("k and g must be nonnegative")
    base = conway_torus_link(2 * g + 1)
    if g == 0:
        return base
    return base + Z * conway_torus_link(2 * g) * k


# -- matrices --------------------------------------------------------------

def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("matrix is not square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def transpose(m: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*m)] if m else []


def pretzel_genus(ks: Sequence[int]) -> int:
    if len(ks) < 3 or len(ks) % 2 == 0:
        raise DomainError(f"an odd pretzel needs an odd number >= 3 of parameters, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise DomainError("pretzel parameters must be nonnegative")
    return (len(ks) - 1) // 2


def pretzel_template(ks: Sequence[int]) -> list[list[int]]:
    """The ``2g x 2g`` tridiagonal matrix ``A`` whose negative is a Seifert matrix for ``K(ks)``."""
    g = pretzel_genus(ks)
    n = 2 * g
    a = [[0] * n for _ in range(n)]
    # 0-based: k[i] here is k_{i+1}
    for i in range(n):
        a[i][i] = ks[i] + ks[i + 1] + 1
        if i + 1 < n:
            a[i][i + 1] = ks[i + 1]
            a[i + 1][i] = ks[i + 1] + 1
    return a


def seifert_pretzel(ks: Sequence[int]) -> list[list[int]]:
    return [[-x for x in row] for row in pretzel_template(ks)]


def det_oracle(m: Sequence[Sequence[int]]) -> int:
    """``|det(M + M^T)|``."""
    mt = transpose(m)
    return abs(bareiss_det([[a + b for a, b in zip(r, rt)] for r, rt in zip(m, mt)]))


def det_pretzel(ks: Sequence[int]) -> int:
    """Closed form ``sum_m 2^m (2g+1-m) s_m`` for the determinant of ``K(ks)``."""
    g = pretzel_genus(ks)
    s = elem_sym_all(ks)
    return sum(2 ** m * (2 * g + 1 - m) * s[m] for m in range(2 * g + 1))


def tridiagonal_det(diag: Sequence[int], off: Sequence[int]) -> int:
    """Symmetric tridiagonal determinant by the three-term continuant recurrence."""
    d_prev, d = 1, 1
    for i, a in enumerate(diag):
        b2 = off[i - 1] ** 2 if i > 0 else 0
        d_prev, d = d, a * d - b2 * d_prev
    return d


def det_claim_Q(ps: Sequence[int]) -> int:
    """``det Q_n`` for ``Q_n = A_n + A_n^T`` written in ``p_i = 2k_i + 1``; equals ``s_{n,n+1}(ps)``."""
    n = len(ps) - 1
    if n < 0:
        raise DomainError("need at least one entry")
    diag = [ps[i] + ps[i + 1] for i in range(n)]
    off = [ps[i + 1] for i in range(n - 1)]
    lhs = tridiagonal_det(diag, off)
    rhs = elem_sym(n, ps)
    assert lhs == rhs, f"det(Q_{n}) = {lhs} but s_{n},{n + 1} = {rhs}"
    return lhs


# -- Seifert matrix -> Conway polynomial ------------------------------------

def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (low to high) of the unique polynomial of degree < len(xs) through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xs[j] * basis[d + 1]
            denom *= xs[i] - xs[j]
        for d in range(n):
            coeffs[d] += ys[i] * basis[d] / denom
    return coeffs


def alexander_from_seifert(m: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(t A - A^T)`` in ``t``, low degree first."""
    n = len(m)
    mt = transpose(m)
    xs = list(range(n + 1))
    ys = [bareiss_det([[t * a - b for a, b in zip(r, rt)] for r, rt in zip(m, mt)]) for t in xs]
    cs = _interpolate(xs, ys)
    assert all(c.denominator == 1 for c in cs)
    return [int(c) for c in cs]


def conway_from_alexander(sym: Sequence[int]) -> IntPolynomial:
    """Conway polynomial from a palindromic Laurent polynomial given as ``[c_0, c_1, ..., c_g]``.

    ``sym`` encodes ``c_0 + sum_k c_k (t^k + t^-k)``; with ``u = z^2 + 2`` the
    power sums ``t^k + t^-k`` obey ``T_{k+1} = u T_k - T_{k-1}``.
    """
    u = IntPolynomial([2, 0, 1])
    t_prev, t_cur = IntPolynomial([2]), u
    out = IntPolynomial([sym[0]]) if sym else IntPolynomial()
    for k in range(1, len(sym)):
        out = out + t_cur * sym[k]
        t_prev, t_cur = t_cur, u * t_cur - t_prev
    return out


def conway_from_seifert(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(t^{1/2} A - t^{-1/2} A^T)`` rewritten in ``z = t^{1/2} - t^{-1/2}``."""
    n = len(m)
    if n % 2:
        raise DomainError("a knot Seifert matrix has even dimension")
    alex = alexander_from_seifert(m)
    g = n // 2
    alex += [0] * (n + 1 - len(alex))
    # t^{-g} det(tA - A^T) is palindromic; c_k sits at index g + k
    centered = alex[g:]
    if alex[:g][::-1] != centered[1:]:
        raise DomainError("matrix does not give a symmetric Alexander polynomial")
    conway = conway_from_alexander(centered)
    if conway[0] not in (1, -1):
        raise DomainError(f"constant term {conway[0]} is not +-1: not a knot Seifert matrix")
    return conway * conway[0]


def conway_determinant(conway: IntPolynomial) -> int:
    """``|Delta(-1)|``: at ``t = -1`` one has ``z^2 = -4``."""
    if any(conway[d] for d in range(1, conway.degree + 1, 2)):
        raise DomainError("odd-degree terms: not a knot Conway polynomial")
    return abs(sum(conway[2 * j] * (-4) ** j for j in range(conway.degree // 2 + 1)))

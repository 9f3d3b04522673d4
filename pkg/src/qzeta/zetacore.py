"""Motivic zeta functions of monomial pairs on abelian quotients.

The central objects: for a small diagonal action G on C^n and a monomial
divisor pair with multiplicities ``N`` and log-discrepancy data ``nu``,
the local zeta function at the image of the origin is

    L^-n * S_G(N, nu) * prod_i Fac(N_i; nu_i),

where S_G collects one Laurent monomial per group element (its nu-age
against L and its N-age against T).  The same shape summed over the
strata of an embedded resolution gives the stratified zeta function;
equality of the two routes is the main cross-check this package exists
to exercise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import math
from typing import Iterable, Sequence

from .groups import GroupAction, NotSmall, is_small, small_reduce
from .symring import MotPoly, Rat, StdFactor, ZetaExpr, fac

JET_BUDGET = 10**8

__all__ = [
    "TInCoefficient",
    "DimensionMismatch",
    "BudgetExceeded",
    "Stratum",
    "Stratification",
    "infer_gindex",
    "s_g_sum",
    "local_monomial_zeta",
    "affine_monomial_zeta",
    "stratified_zeta",
    "gor_measure_origin",
    "orb_measure_origin",
    "veys_det_713",
    "jet_count_oracle",
]


class TInCoefficient(Exception):
    """A stratum class polynomial carries a T power."""


class DimensionMismatch(Exception):
    """Vector or group dimension disagrees with the ambient dimension."""


class BudgetExceeded(Exception):
    """The brute-force jet count would exceed the tuple budget."""


# ---------------------------------------------------------------------------
# group sums and local zetas


def s_g_sum(g: GroupAction, Nvec: Sequence[Rat], nuvec: Sequence[Rat]) -> MotPoly:
    """sum over gamma in G of  L^age_nu(gamma) * T^(-age_N(gamma)).

    With T = L^(-s) this is sum L^(age_N(gamma) s + age_nu(gamma)); ages
    of distinct elements can coincide, in which case terms merge.
    """
    Nvec = tuple(Fraction(x) for x in Nvec)
    nuvec = tuple(Fraction(x) for x in nuvec)
    if len(Nvec) != g.n or len(nuvec) != g.n:
        raise DimensionMismatch(
            "group acts on %d coordinates, data has %d/%d"
            % (g.n, len(Nvec), len(nuvec))
        )
    acc: dict = {}
    for gamma in g.elements():
        key = (-gamma.age(Nvec), gamma.age(nuvec), ())
        acc[key] = acc.get(key, 0) + 1
    return MotPoly(acc)


def _factors(Nvec, nuvec) -> tuple[StdFactor, ...]:
    return tuple(fac(N, nu) for N, nu in zip(Nvec, nuvec, strict=True))


def local_monomial_zeta(
    g: GroupAction,
    Nvec: Sequence[Rat],
    nuvec: Sequence[Rat],
    allow_nonsmall: bool = False,
) -> ZetaExpr:
    """Zeta function of the monomial pair at the origin of C^n / G."""
    if not allow_nonsmall and not is_small(g):
        raise NotSmall(
            "action %r has quasi-reflexions; reduce it or pass allow_nonsmall"
            % (g,)
        )
    coeff = s_g_sum(g, Nvec, nuvec) * MotPoly.L(-g.n)
    return ZetaExpr.of(coeff, _factors(Nvec, nuvec))


def affine_monomial_zeta(Nvec: Sequence[Rat], nuvec: Sequence[Rat]) -> ZetaExpr:
    """Zeta function of the monomial over *all* arcs of affine space.

    Per coordinate the arc space splits into units (measure 1 - L^-1,
    order 0) and the rest (measure L^-1 of the origin-centred cone), so
    the whole thing is the product of two-term expressions.
    """
    z = ZetaExpr.one()
    unit = MotPoly.one() - MotPoly.L(-1)
    for N, nu in zip(Nvec, nuvec, strict=True):
        z = z * ZetaExpr([(unit, ()), (MotPoly.L(-1), (fac(N, nu),))])
    return z


# ---------------------------------------------------------------------------
# strata


@dataclass(frozen=True)
class Stratum:
    """One stratum of an embedded resolution: class polynomial, the
    multiplicities / discrepancies of the divisors through it, and the
    small group acting transversally."""

    klass: MotPoly
    Nvec: tuple[Fraction, ...]
    nuvec: tuple[Fraction, ...]
    group: GroupAction

    def __post_init__(self):
        object.__setattr__(self, "Nvec", tuple(Fraction(x) for x in self.Nvec))
        object.__setattr__(self, "nuvec", tuple(Fraction(x) for x in self.nuvec))
        if self.klass.has_T():
            raise TInCoefficient(
                "stratum class %s carries a T power" % (self.klass,)
            )
        if not (len(self.Nvec) == len(self.nuvec) == self.group.n):
            raise DimensionMismatch(
                "stratum data lengths %d/%d vs group dimension %d"
                % (len(self.Nvec), len(self.nuvec), self.group.n)
            )
        if any(N < 0 for N in self.Nvec):
            raise ValueError("stratum N entries must be >= 0")
        if any(nu <= 0 for nu in self.nuvec):
            raise ValueError("stratum nu entries must be > 0")


@dataclass(frozen=True)
class Stratification:
    """A full stratification of the fibre over the singular point."""

    n: int
    r: int
    strata: tuple[Stratum, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        if self.n <= 0 or self.r <= 0:
            raise ValueError("dimension and index must be positive")
        for st in self.strata:
            if st.group.n != self.n:
                raise DimensionMismatch(
                    "stratum group dimension %d != ambient %d" % (st.group.n, self.n)
                )
            for x in st.Nvec + st.nuvec:
                if self.r % x.denominator != 0:
                    raise ValueError(
                        "denominator of %s does not divide the index %d" % (x, self.r)
                    )
            # group exponents must only involve primes of r
            e = st.group.d_exp
            for p in _prime_factors(e):
                if self.r % p != 0:
                    raise ValueError(
                        "group exponent %d has a prime %d foreign to index %d"
                        % (e, p, self.r)
                    )


def _prime_factors(n: int) -> set[int]:
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def infer_gindex(strata: Iterable[Stratum]) -> int:
    """Smallest convenient index: lcm over strata of the group exponent
    times the lcm of the entry denominators (ages can mix the two)."""
    r = 1
    for st in strata:
        dens = [x.denominator for x in st.Nvec + st.nuvec]
        r = math.lcm(r, st.group.d_exp * reduce(math.lcm, dens, 1))
    return r


def stratified_zeta(strat: Stratification, allow_nonsmall: bool = False) -> ZetaExpr:
    """L^-n * sum over strata of  class * S_G(N, nu) * prod Fac(N_i; nu_i).

    Terms are emitted in the stratification's own order, which builders
    choose so that the rational-function fold telescopes.
    """
    Ln = MotPoly.L(-strat.n)
    terms = []
    for st in strat.strata:
        if not allow_nonsmall and not is_small(st.group):
            raise NotSmall("stratum group %r has quasi-reflexions" % (st.group,))
        coeff = st.klass * s_g_sum(st.group, st.Nvec, st.nuvec) * Ln
        terms.append((coeff, _factors(st.Nvec, st.nuvec)))
    return ZetaExpr(terms)


# ---------------------------------------------------------------------------
# motivic measures of the origin


def gor_measure_origin(g: GroupAction) -> MotPoly:
    """Gorenstein measure of the origin: sum L^(age(gamma) - n) over the
    smallified action."""
    reduced, _m = small_reduce(g)
    ones = (Fraction(1),) * g.n
    acc: dict = {}
    for gamma in reduced.elements():
        key = (Fraction(0), gamma.age(ones) - g.n, ())
        acc[key] = acc.get(key, 0) + 1
    return MotPoly(acc)


def orb_measure_origin(g: GroupAction) -> MotPoly:
    """Orbifold measure of the origin: sum L^(-w(gamma)) over the given
    action, where w counts zero exponents at full weight."""
    ones = (Fraction(1),) * g.n
    acc: dict = {}
    for gamma in g.elements():
        key = (Fraction(0), -gamma.weight(ones), ())
        acc[key] = acc.get(key, 0) + 1
    return MotPoly(acc)


# ---------------------------------------------------------------------------
# determinant cross-check instance (the 1/7(1,3) plane)


def _det3(m: list[list[MotPoly]]) -> MotPoly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def veys_det_713(N1, N2, nu1, nu2) -> MotPoly:
    """Determinantal form of S_G for the 1/7(1,3) action.

    Rows/columns follow the dual graph of the minimal resolution; the
    bracket <c> is the monomial L^((c . N) s / 7 + (c . nu) / 7) for the
    lattice coefficient pair c.
    """
    N1, N2, nu1, nu2 = (Fraction(x) for x in (N1, N2, nu1, nu2))

    def brack(cx: int, cy: int) -> MotPoly:
        Ns = (cx * N1 + cy * N2) / 7
        vs = (cx * nu1 + cy * nu2) / 7
        return MotPoly.monomial(1, ell=vs, tau=-Ns)

    m1 = brack(1, 3)
    m2 = brack(3, 2)
    m3 = brack(5, 1)
    m0 = brack(0, 7)  # N2 s + nu2
    m4 = brack(7, 0)  # N1 s + nu1
    one = MotPoly.one()
    zero = MotPoly.zero()
    K1 = one + m1 + m1 * m1
    K2 = one + m2
    K3 = one + m3
    matrix = [
        [K1, -m3, m2 - one],
        [-m0, K2, -m1],
        [zero, -m4, K3],
    ]
    return _det3(matrix)


# ---------------------------------------------------------------------------
# jet-counting oracle


def jet_count_oracle(Nvec: Sequence[int], p: int, j: int) -> Fraction:
    """Fraction of degree-<=j coefficient tuples over F_p whose monomial
    order is exactly j, i.e. the T^j mass of the all-arcs zeta at L = p.

    Brute force over all p^((j+1) n) jets; refuses over the budget.
    """
    Nvec = [int(N) for N in Nvec]
    if any(N < 1 for N in Nvec):
        raise ValueError("oracle multiplicities must be positive integers")
    if p < 2:
        raise ValueError("p must be at least 2")
    j = int(j)
    if j < 0:
        raise ValueError("jet order must be >= 0")
    n = len(Nvec)
    m = j
    total = p ** ((m + 1) * n)
    if total > JET_BUDGET:
        raise BudgetExceeded("%d jets exceed the budget" % total)
    width = m + 1
    count = 0
    for flat in itertools.product(range(p), repeat=width * n):
        v = 0
        ok = True
        for i in range(n):
            block = flat[i * width : (i + 1) * width]
            order = width
            for k, c in enumerate(block):
                if c:
                    order = k
                    break
            v += Nvec[i] * order
            if v > j:
                ok = False
                break
        if ok and v == j:
            count += 1
    return Fraction(count, total)

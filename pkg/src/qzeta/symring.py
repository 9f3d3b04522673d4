"""Exact symbolic arithmetic for motivic zeta functions.

Everything lives in a Laurent-monomial world built from two commuting
variables with rational exponents -- ``L`` (the class of the affine line)
and ``T = L^(-s)`` -- plus free commuting symbols standing for opaque
variety classes such as ``[C0]``.  A monomial ``L^(a*s + b)`` is stored
with T-exponent ``-a`` and L-exponent ``b``.

On top of the plain polynomials (:class:`MotPoly`) sit the standard
one-coordinate factors

    Fac(N; nu) = (L - 1) * L^-(N*s + nu) / (1 - L^-(N*s + nu))

and finite sums  ``sum_k  c_k * prod_i Fac(N_i; nu_i)``
(:class:`ZetaExpr`).  All coefficients are integers and all exponents
exact :class:`fractions.Fraction` values; nothing is approximated, and
equality of zeta expressions is decided by exact cross-multiplication.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Rat = Fraction

__all__ = [
    "Rat",
    "ClassSymbol",
    "MotPoly",
    "StdFactor",
    "ZetaExpr",
    "RatFunc",
    "TopZeta",
    "MissingChi",
    "FractionalPowerUnevaluable",
    "mp_add",
    "mp_mul",
    "ze_add",
    "ze_mul",
    "ze_to_ratfunc",
    "ze_equal",
    "euler_specialize",
    "series_expand",
    "eval_L",
    "candidate_poles",
]


class MissingChi(Exception):
    """A class symbol has no Euler characteristic assigned."""


class FractionalPowerUnevaluable(Exception):
    """A rational exponent has no exact rational value at the given base."""


@dataclass(frozen=True)
class ClassSymbol:
    """A named stand-in for the class of a variety, e.g. ``[C0]``.

    ``chi`` is the symbol's Euler characteristic, if declared.
    """

    name: str
    chi: int | None = None


# A symbol monomial: sorted ((name, exponent), ...) with exponents > 0.
SymMono = tuple[tuple[str, int], ...]
# Monomial key: (T-exponent, L-exponent, symbol monomial).
MonoKey = tuple[Fraction, Fraction, SymMono]


def _norm_syms(syms) -> SymMono:
    if not syms:
        return ()
    if isinstance(syms, dict):
        items = syms.items()
    else:
        items = syms
    acc: dict[str, int] = {}
    for name, e in items:
        if e:
            acc[name] = acc.get(name, 0) + int(e)
    return tuple(sorted((n, e) for n, e in acc.items() if e))


def _mul_syms(a: SymMono, b: SymMono) -> SymMono:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


class MotPoly:
    """Sparse exact polynomial in L^(1/r), T^(1/r) and class symbols.

    Keys are ``(tau, ell, symmono)`` with ``tau`` the T-exponent and
    ``ell`` the L-exponent, both Fractions of either sign; values are
    nonzero ints.  The zero polynomial has no terms.
    """

    __slots__ = ("_terms", "_hashed")

    def __init__(self, terms: Mapping[MonoKey, int] | None = None):
        clean: dict[MonoKey, int] = {}
        if terms:
            for (tau, ell, syms), c in terms.items():
                if c == 0:
                    continue
                if not isinstance(c, int):
                    raise TypeError("MotPoly coefficients must be int, got %r" % (c,))
                key = (Fraction(tau), Fraction(ell), _norm_syms(syms))
                clean[key] = clean.get(key, 0) + c
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        self._hashed = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "MotPoly":
        return cls()

    @classmethod
    def one(cls) -> "MotPoly":
        return cls.const(1)

    @classmethod
    def const(cls, c: int) -> "MotPoly":
        return cls({(Fraction(0), Fraction(0), ()): int(c)})

    @classmethod
    def L(cls, exp=1) -> "MotPoly":
        return cls({(Fraction(0), Fraction(exp), ()): 1})

    @classmethod
    def T(cls, exp=1) -> "MotPoly":
        return cls({(Fraction(exp), Fraction(0), ()): 1})

    @classmethod
    def sym(cls, name: str, exp: int = 1) -> "MotPoly":
        return cls({(Fraction(0), Fraction(0), ((name, exp),)): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, ell=0, tau=0, syms=()) -> "MotPoly":
        return cls({(Fraction(tau), Fraction(ell), _norm_syms(syms)): int(coeff)})

    # -- basics ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[MonoKey, int]]:
        """Terms in canonical order: lexicographic by (tau, ell, symbols)."""
        return sorted(self._terms.items())

    def items(self):
        return self._terms.items()

    @staticmethod
    def _coerce(x):
        if isinstance(x, MotPoly):
            return x
        if isinstance(x, int):
            return MotPoly.const(x)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hashed is None:
            self._hashed = hash(frozenset(self._terms.items()))
        return self._hashed

    def __neg__(self) -> "MotPoly":
        return MotPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        out = MotPoly.__new__(MotPoly)
        out._terms = acc
        out._hashed = None
        return out

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return MotPoly.zero()
        acc: dict[MonoKey, int] = {}
        for (t1, l1, s1), c1 in self._terms.items():
            for (t2, l2, s2), c2 in other._terms.items():
                k = (t1 + t2, l1 + l2, _mul_syms(s1, s2))
                v = acc.get(k, 0) + c1 * c2
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        out = MotPoly.__new__(MotPoly)
        out._terms = acc
        out._hashed = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MotPoly":
        if n < 0:
            raise ValueError("MotPoly powers must be nonnegative")
        out = MotPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure queries ----------------------------------------------

    def min_tau(self) -> Fraction | None:
        if not self._terms:
            return None
        return min(k[0] for k in self._terms)

    def max_tau(self) -> Fraction | None:
        if not self._terms:
            return None
        return max(k[0] for k in self._terms)

    def has_T(self) -> bool:
        return any(k[0] != 0 for k in self._terms)

    def truncate_tau(self, bound) -> "MotPoly":
        """Drop monomials whose T-exponent exceeds ``bound``."""
        bound = Fraction(bound)
        return MotPoly({k: c for k, c in self._terms.items() if k[0] <= bound})

    def coeff_of_T(self, j) -> "MotPoly":
        """The coefficient of T^j, as a polynomial with no T part."""
        j = Fraction(j)
        return MotPoly(
            {(Fraction(0), k[1], k[2]): c for k, c in self._terms.items() if k[0] == j}
        )

    def exponent_denominators(self) -> set[int]:
        out = set()
        for tau, ell, _ in self._terms:
            out.add(tau.denominator)
            out.add(ell.denominator)
        return out or {1}

    # -- specializations -------------------------------------------------

    def chi(self, chi_env: Mapping[str, int] | None = None) -> int:
        """Euler specialization of the coefficient ring: L -> 1, T -> 1,
        each class symbol to its Euler characteristic."""
        total = 0
        for (_tau, _ell, syms), c in self._terms.items():
            v = c
            for name, e in syms:
                if not chi_env or name not in chi_env:
                    raise MissingChi(name)
                v *= chi_env[name] ** e
            total += v
        return total

    def eval_L(self, p, sym_env: Mapping[str, Rat] | None = None) -> Fraction:
        """Exact value with L = p (T powers are not evaluable here)."""
        p = Fraction(p)
        total = Fraction(0)
        for (tau, ell, syms), c in self._terms.items():
            if tau != 0:
                raise ValueError("monomial carries a T power; cannot evaluate at L only")
            v = Fraction(c) * _rat_pow(p, ell)
            for name, e in syms:
                if not sym_env or name not in sym_env:
                    raise MissingChi(name)
                v *= Fraction(sym_env[name]) ** e
            total += v
        return total

    # -- exact division ---------------------------------------------------

    def divide_one_minus(self, ell_x, tau_x) -> "MotPoly | None":
        """Exact quotient by ``1 - L^ell_x * T^tau_x``, or None.

        Terms are grouped into translation classes along the direction
        ``x = (tau_x, ell_x)``; within a class the division is the usual
        one-variable cumulative-sum quotient, exact iff the class
        coefficients sum to zero.
        """
        tau_x = Fraction(tau_x)
        ell_x = Fraction(ell_x)
        if tau_x == 0 and ell_x == 0:
            raise ValueError("division by 1 - 1 is undefined")
        if not self._terms:
            return MotPoly.zero()
        use_tau = tau_x != 0
        classes: dict[MonoKey, dict[int, int]] = {}
        for (tau, ell, syms), c in self._terms.items():
            j = math.floor(tau / tau_x) if use_tau else math.floor(ell / ell_x)
            rep = (tau - j * tau_x, ell - j * ell_x, syms)
            classes.setdefault(rep, {})[j] = c
        out: dict[MonoKey, int] = {}
        for rep, col in classes.items():
            js = sorted(col)
            run = 0
            for j in range(js[0], js[-1] + 1):
                run += col.get(j, 0)
                if j == js[-1]:
                    if run != 0:
                        return None
                elif run:
                    out[(rep[0] + j * tau_x, rep[1] + j * ell_x, rep[2])] = run
        return MotPoly(out)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return "MotPoly(%s)" % render_poly(self)

    def latex(self) -> str:
        return latex_poly(self)

    def json_obj(self):
        return [
            {
                "c": c,
                "L": {"num": ell.numerator, "den": ell.denominator},
                "T": {"num": tau.numerator, "den": tau.denominator},
                "syms": {n: e for n, e in syms},
            }
            for (tau, ell, syms), c in self.terms()
        ]


def mp_add(a: MotPoly, b: MotPoly) -> MotPoly:
    return a + b


def mp_mul(a: MotPoly, b: MotPoly) -> MotPoly:
    return a * b


# ---------------------------------------------------------------------------
# exact rational powers


def _int_nth_root(a: int, n: int) -> int | None:
    if n == 1:
        return a
    if a < 0:
        if n % 2 == 0:
            return None
        r = _int_nth_root(-a, n)
        return None if r is None else -r
    if a in (0, 1):
        return a
    x = max(1, int(round(a ** (1.0 / n))))
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    for cand in (x - 1, x, x + 1, x + 2):
        if cand >= 0 and cand**n == a:
            return cand
    return None


def _rat_pow(p: Fraction, e: Fraction) -> Fraction:
    """p**e exactly, raising FractionalPowerUnevaluable when impossible."""
    if e.denominator == 1:
        if p == 0 and e < 0:
            raise ZeroDivisionError("0 to a negative power")
        return p ** e.numerator
    rn = _int_nth_root(p.numerator, e.denominator)
    rd = _int_nth_root(p.denominator, e.denominator)
    if rn is None or rd is None:
        raise FractionalPowerUnevaluable(
            "%s has no exact rational %d-th root" % (p, e.denominator)
        )
    return Fraction(rn, rd) ** e.numerator


def eval_L(x: MotPoly, p, sym_env: Mapping[str, Rat] | None = None) -> Fraction:
    return x.eval_L(p, sym_env)


# ---------------------------------------------------------------------------
# standard factors and zeta expressions


@dataclass(frozen=True, order=True)
class StdFactor:
    """The factor (L-1) L^-(N s + nu) / (1 - L^-(N s + nu))."""

    N: Fraction
    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "N", Fraction(self.N))
        object.__setattr__(self, "nu", Fraction(self.nu))
        if self.N < 0:
            raise ValueError("factor needs N >= 0, got %s" % (self.N,))
        if self.nu <= 0:
            raise ValueError("factor needs nu > 0, got %s" % (self.nu,))

    @property
    def is_trivial(self) -> bool:
        # Fac(0; 1) = (L-1) L^-1 / (1 - L^-1) = 1.
        return self.N == 0 and self.nu == 1

    def numer_poly(self) -> MotPoly:
        """(L - 1) * L^-nu * T^N, the numerator over 1 - L^-nu T^N."""
        return (MotPoly.L() - 1) * MotPoly.monomial(1, ell=-self.nu, tau=self.N)

    def binom_poly(self) -> MotPoly:
        """1 - L^-nu T^N."""
        return MotPoly.one() - MotPoly.monomial(1, ell=-self.nu, tau=self.N)

    def __str__(self) -> str:
        return "Fac(%s; %s)" % (self.N, self.nu)


def fac(N, nu) -> StdFactor:
    return StdFactor(Fraction(N), Fraction(nu))


FacTuple = tuple[StdFactor, ...]


class ZetaExpr:
    """Finite sum of  coeff * prod of standard factors.

    Terms with identical factor multisets are merged; trivial factors
    Fac(0; 1) are dropped on construction.  Internal term order is the
    order of first insertion (rendering always sorts canonically); the
    rational-function fold walks terms in insertion order, which builders
    exploit so that telescoping cancellations happen early.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[MotPoly, Iterable[StdFactor]]] = ()):
        acc: dict[FacTuple, MotPoly] = {}
        for coeff, factors in terms:
            if not isinstance(coeff, MotPoly):
                coeff = MotPoly.const(coeff)
            key = tuple(sorted(f for f in factors if not f.is_trivial))
            if key in acc:
                acc[key] = acc[key] + coeff
            else:
                acc[key] = coeff
        self._terms = {k: v for k, v in acc.items() if not v.is_zero}

    @classmethod
    def zero(cls) -> "ZetaExpr":
        return cls()

    @classmethod
    def one(cls) -> "ZetaExpr":
        return cls([(MotPoly.one(), ())])

    @classmethod
    def of(cls, coeff: MotPoly, factors: Iterable[StdFactor] = ()) -> "ZetaExpr":
        return cls([(coeff, factors)])

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[FacTuple, MotPoly]]:
        """Canonically sorted (factors, coefficient) pairs."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def iter_terms(self):
        """(factors, coefficient) pairs in internal (insertion) order."""
        return self._terms.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted((k, hash(v)) for k, v in self._terms.items())))

    def __add__(self, other) -> "ZetaExpr":
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        out = ZetaExpr.__new__(ZetaExpr)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            s = acc.get(k)
            s = v if s is None else s + v
            if s.is_zero:
                acc.pop(k, None)
            else:
                acc[k] = s
        out._terms = acc
        return out

    def __neg__(self) -> "ZetaExpr":
        out = ZetaExpr.__new__(ZetaExpr)
        out._terms = {k: -v for k, v in self._terms.items()}
        return out

    def __sub__(self, other) -> "ZetaExpr":
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "ZetaExpr":
        if isinstance(other, (int, MotPoly)):
            return self.scale(other)
        if not isinstance(other, ZetaExpr):
            return NotImplemented
        out: dict[FacTuple, MotPoly] = {}
        for f1, c1 in self._terms.items():
            for f2, c2 in other._terms.items():
                key = tuple(sorted(f1 + f2))
                c = c1 * c2
                if key in out:
                    s = out[key] + c
                    if s.is_zero:
                        del out[key]
                    else:
                        out[key] = s
                else:
                    out[key] = c
        z = ZetaExpr.__new__(ZetaExpr)
        z._terms = out
        return z

    __rmul__ = __mul__

    def scale(self, c) -> "ZetaExpr":
        if isinstance(c, int):
            c = MotPoly.const(c)
        out: dict[FacTuple, MotPoly] = {}
        for k, v in self._terms.items():
            s = v * c
            if not s.is_zero:
                out[k] = s
        z = ZetaExpr.__new__(ZetaExpr)
        z._terms = out
        return z

    def all_factors(self) -> Counter:
        """Multiset union (per-term max multiplicity) of all factors."""
        acc: Counter = Counter()
        for facs in self._terms:
            cnt = Counter(facs)
            for f, m in cnt.items():
                if m > acc[f]:
                    acc[f] = m
        return acc

    def __str__(self) -> str:
        return render_zeta(self)

    def __repr__(self) -> str:
        return "ZetaExpr(%s)" % render_zeta(self)

    def latex(self) -> str:
        return latex_zeta(self)

    def json_obj(self):
        out = []
        for facs, coeff in self.terms():
            cnt = Counter(facs)
            out.append(
                {
                    "coeff": coeff.json_obj(),
                    "factors": [
                        {
                            "N": {"num": f.N.numerator, "den": f.N.denominator},
                            "nu": {"num": f.nu.numerator, "den": f.nu.denominator},
                            "mult": m,
                        }
                        for f, m in sorted(cnt.items())
                    ],
                }
            )
        return {"kind": "zeta", "terms": out}


def ze_add(a: ZetaExpr, b: ZetaExpr) -> ZetaExpr:
    return a + b


def ze_mul(a: ZetaExpr, b: ZetaExpr) -> ZetaExpr:
    return a * b


# ---------------------------------------------------------------------------
# rational-function form


@dataclass(frozen=True)
class RatFunc:
    """numer / prod (1 - L^-nu T^N)^mult, with an exact-division reduction."""

    numer: MotPoly
    denom: tuple[tuple[StdFactor, int], ...]  # sorted, multiplicities >= 1

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(MotPoly.zero(), ())

    @classmethod
    def make(cls, numer: MotPoly, denom: Counter) -> "RatFunc":
        numer, denom = cls._cancel(numer, Counter(denom))
        return cls(numer, tuple(sorted(denom.items())))

    @staticmethod
    def _cancel(numer: MotPoly, denom: Counter):
        if numer.is_zero:
            return numer, Counter()
        for f in sorted(denom):
            while denom[f] > 0:
                q = numer.divide_one_minus(-f.nu, f.N)
                if q is None:
                    break
                numer = q
                denom[f] -= 1
        return numer, Counter({f: m for f, m in denom.items() if m > 0})

    @classmethod
    def from_term(cls, coeff: MotPoly, factors: FacTuple) -> "RatFunc":
        numer = coeff
        for f in factors:
            numer = numer * f.numer_poly()
        return cls.make(numer, Counter(factors))

    def add(self, other: "RatFunc") -> "RatFunc":
        da, db = Counter(dict(self.denom)), Counter(dict(other.denom))
        dmax = Counter()
        for f in set(da) | set(db):
            dmax[f] = max(da[f], db[f])
        na = self.numer
        for f in dmax:
            for _ in range(dmax[f] - da[f]):
                na = na * f.binom_poly()
        nb = other.numer
        for f in dmax:
            for _ in range(dmax[f] - db[f]):
                nb = nb * f.binom_poly()
        return RatFunc.make(na + nb, dmax)

    def equivalent(self, other: "RatFunc") -> bool:
        da, db = Counter(dict(self.denom)), Counter(dict(other.denom))
        na, nb = self.numer, other.numer
        for f in set(da) | set(db):
            for _ in range(max(da[f], db[f]) - da[f]):
                na = na * f.binom_poly()
            for _ in range(max(da[f], db[f]) - db[f]):
                nb = nb * f.binom_poly()
        return na == nb

    def __str__(self) -> str:
        if self.numer.is_zero:
            return "0"
        num = render_poly_factored(self.numer)
        if not self.denom:
            return num
        den = " * ".join(
            "(1 - %s)%s"
            % (
                " * ".join(
                    ([_pow_str("L", -f.nu)] if f.nu else [])
                    + ([_pow_str("T", f.N)] if f.N else [])
                )
                or "1",
                "" if m == 1 else "^%d" % m,
            )
            for f, m in self.denom
        )
        return "(%s) / (%s)" % (num, den)


def ze_to_ratfunc(z: ZetaExpr) -> RatFunc:
    """Fold a zeta expression into a single reduced rational function.

    Terms are folded in insertion order with a cancellation pass after
    each addition; builders order their terms so that the telescoping
    divisions fire as early as possible.
    """
    rf = RatFunc.zero()
    for factors, coeff in z.iter_terms():
        rf = rf.add(RatFunc.from_term(coeff, factors))
    return rf


def ze_equal(a: ZetaExpr, b: ZetaExpr) -> bool:
    """Exact equality as rational functions.

    Sound because the ambient ring (Laurent monomials with bounded-
    denominator exponents over free symbols) is an integral domain, so
    cross-multiplied numerators agree iff the quotients do.
    """
    return ze_to_ratfunc(a).equivalent(ze_to_ratfunc(b))


def candidate_poles(z: ZetaExpr) -> set[Fraction]:
    """All -nu/N over factors with N > 0 anywhere in the expression."""
    out = set()
    for facs in z._terms:
        for f in facs:
            if f.N > 0:
                out.add(Fraction(-f.nu, 1) / f.N)
    return out


def series_expand(z: ZetaExpr, M) -> MotPoly:
    """Power-series expansion around T = 0, truncated to T-exponents <= M.

    Each factor expands as (L-1) * sum_{j>=1} L^(-j nu) T^(j N); a factor
    with N = 0 (and nu != 1, since Fac(0;1) never survives construction)
    has no such expansion and is rejected.
    """
    M = Fraction(M)
    if M < 0:
        raise ValueError("truncation order must be >= 0")
    total = MotPoly.zero()
    for factors, coeff in z.iter_terms():
        cur = coeff.truncate_tau(M)
        for f in sorted(factors):
            if cur.is_zero:
                break
            if f.N == 0:
                raise ValueError(
                    "factor %s has no Laurent expansion in T" % (f,)
                )
            lo = cur.min_tau()
            jmax = math.floor((M - lo) / f.N)
            if jmax < 1:
                cur = MotPoly.zero()
                break
            geo = MotPoly(
                {(j * f.N, -j * f.nu, ()): 1 for j in range(1, jmax + 1)}
            )
            cur = (cur * ((MotPoly.L() - 1) * geo)).truncate_tau(M)
        total = total + cur
    return total


# ---------------------------------------------------------------------------
# topological (Euler) specialization


LinFactor = tuple[Fraction, Fraction]  # (N, nu) meaning N*s + nu, N > 0


def _pnorm(p: list[Fraction]) -> tuple[Fraction, ...]:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pnorm(out)


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return _pnorm(out)


def _pscale(a, c: Fraction):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _pdiv_linear(p, N: Fraction, nu: Fraction):
    """Exact quotient of p by (N*s + nu) with N != 0, or None."""
    if not p:
        return ()
    if N == 0:
        raise ValueError("linear factor must have N != 0")
    # p_k = N q_{k-1} + nu q_k, solved from the constant term up.
    q = []
    prev = Fraction(0)
    for k in range(len(p) - 1):
        prev = (p[k] - N * prev) / nu
        q.append(prev)
    if p[-1] - N * prev != 0:
        return None
    return _pnorm(q)


def _poly_of(denom: Iterable[tuple[LinFactor, int]]):
    out = (Fraction(1),)
    for (N, nu), m in denom:
        for _ in range(m):
            out = _pmul(out, (nu, N))
    return out


class TopZeta:
    """A univariate rational function of s assembled from Euler-specialized
    zeta terms: a structured sum  sum c / prod (N s + nu)^m  plus the fully
    reduced single quotient."""

    __slots__ = ("terms", "numer", "denom", "numer_red", "denom_red")

    def __init__(self, terms: Iterable[tuple[Fraction, Mapping[LinFactor, int]]]):
        merged: dict[tuple, Fraction] = {}
        for c, lins in terms:
            key = tuple(sorted(Counter(lins).items()))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(c)
        self.terms = tuple(
            (c, key) for key, c in sorted(merged.items()) if c != 0
        )
        denom: Counter = Counter()
        for _c, key in self.terms:
            for f, m in key:
                if m > denom[f]:
                    denom[f] = m
        self.denom = tuple(sorted(denom.items()))
        numer = ()
        for c, key in self.terms:
            own = Counter(dict(key))
            part = (Fraction(c),)
            for f, m in self.denom:
                pw = m - own.get(f, 0)
                for _ in range(pw):
                    part = _pmul(part, (f[1], f[0]))
            numer = _padd(numer, part)
        self.numer = numer
        # reduce
        nred = numer
        dred = Counter(denom)
        if not nred:
            dred = Counter()
        else:
            for f in sorted(dred):
                while dred[f] > 0:
                    q = _pdiv_linear(nred, f[0], f[1])
                    if q is None:
                        break
                    nred = q
                    dred[f] -= 1
        self.numer_red = nred
        self.denom_red = tuple(sorted((f, m) for f, m in dred.items() if m > 0))

    @classmethod
    def from_quotient(cls, numer_coeffs, denom: Mapping[LinFactor, int]) -> "TopZeta":
        """Build directly from a quotient (linear factors need N > 0)."""
        dd = tuple(sorted(Counter(denom).items()))
        tz = cls.__new__(cls)
        tz.terms = ()
        tz.numer = _pnorm([Fraction(x) for x in numer_coeffs])
        tz.denom = dd
        nred = tz.numer
        dred = Counter(denom)
        if not nred:
            dred = Counter()
        else:
            for f in sorted(dred):
                while dred[f] > 0:
                    q = _pdiv_linear(nred, f[0], f[1])
                    if q is None:
                        break
                    nred = q
                    dred[f] -= 1
        tz.numer_red = nred
        tz.denom_red = tuple(sorted((f, m) for f, m in dred.items() if m > 0))
        return tz

    def __eq__(self, other) -> bool:
        if not isinstance(other, TopZeta):
            return NotImplemented
        lhs = _pmul(self.numer_red, _poly_of(other.denom_red))
        rhs = _pmul(other.numer_red, _poly_of(self.denom_red))
        return lhs == rhs

    def __hash__(self):
        return hash((self.numer_red, self.denom_red))  # coarse but consistent enough

    def eval_at(self, s0) -> Fraction:
        s0 = Fraction(s0)
        num = sum((c * s0**k for k, c in enumerate(self.numer_red)), Fraction(0))
        den = Fraction(1)
        for (N, nu), m in self.denom_red:
            den *= (N * s0 + nu) ** m
        return num / den

    def poles(self) -> set[Fraction]:
        return {Fraction(-nu, 1) / N for (N, nu), _m in self.denom_red if N != 0}

    def __str__(self) -> str:
        if not self.numer_red:
            return "0"
        num = _spoly_str(self.numer_red)
        if not self.denom_red:
            return num
        den = " * ".join(
            "(%s)%s" % (_lin_str(f), "" if m == 1 else "^%d" % m)
            for f, m in self.denom_red
        )
        return "(%s) / (%s)" % (num, den)

    def __repr__(self):
        return "TopZeta(%s)" % str(self)

    def json_obj(self):
        return {
            "kind": "topzeta",
            "numer": [
                {"num": c.numerator, "den": c.denominator} for c in self.numer_red
            ],
            "denom": [
                {
                    "N": {"num": f[0].numerator, "den": f[0].denominator},
                    "nu": {"num": f[1].numerator, "den": f[1].denominator},
                    "mult": m,
                }
                for f, m in self.denom_red
            ],
        }

    def latex(self) -> str:
        if not self.numer_red:
            return "0"
        num = _spoly_latex(self.numer_red)
        if not self.denom_red:
            return num
        den = "".join(
            "\\left(%s\\right)%s"
            % (_lin_latex(f), "" if m == 1 else "^{%d}" % m)
            for f, m in self.denom_red
        )
        return "\\frac{%s}{%s}" % (num, den)


def euler_specialize(z: ZetaExpr, chi_env: Mapping[str, int] | None = None) -> TopZeta:
    """Topological specialization: L -> 1.

    Each factor Fac(N; nu) contributes 1/(N s + nu); a factor with N = 0
    folds into the coefficient as the scalar 1/nu.  Coefficients go to
    their Euler characteristics (L -> 1, T = L^(-s) -> 1, symbols to
    their chi values; :class:`MissingChi` if one has none).
    """
    terms = []
    for factors, coeff in z.terms():
        c = Fraction(coeff.chi(chi_env))
        lins: Counter = Counter()
        for f in factors:
            if f.N == 0:
                c /= f.nu
            else:
                lins[(f.N, f.nu)] += 1
        if c != 0:
            terms.append((c, lins))
    return TopZeta(terms)


# ---------------------------------------------------------------------------
# rendering helpers


def _exp_str(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return "(%s)" % e


def _pow_str(base: str, e: Fraction) -> str:
    if e == 1:
        return base
    return "%s^%s" % (base, _exp_str(e))


def _mono_str(key: MonoKey, c: int, lead: bool) -> str:
    tau, ell, syms = key
    parts = []
    if ell != 0:
        parts.append(_pow_str("L", ell))
    if tau != 0:
        parts.append(_pow_str("T", tau))
    for name, e in syms:
        parts.append(_pow_str("[%s]" % name, Fraction(e)))
    mag = abs(c)
    if not parts or mag != 1:
        parts.insert(0, str(mag))
    body = " * ".join(parts)
    if lead:
        return ("-" if c < 0 else "") + body
    return ("- " if c < 0 else "+ ") + body


def render_poly(p: MotPoly) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for i, (key, c) in enumerate(terms):
        out.append(_mono_str(key, c, lead=(i == 0)))
    return " ".join(out)


def _gcd_monomial(p: MotPoly) -> MonoKey:
    """Componentwise-minimal monomial across all terms (coefficient 1)."""
    tau = min(k[0] for k in p._terms)
    ell = min(k[1] for k in p._terms)
    names: dict[str, int] = {}
    first = True
    for _tau, _ell, syms in p._terms:
        d = dict(syms)
        if first:
            names = d
            first = False
        else:
            names = {n: min(e, d.get(n, 0)) for n, e in names.items() if n in d}
    sym = tuple(sorted((n, e) for n, e in names.items() if e))
    return (tau, ell, sym)


def render_poly_factored(p: MotPoly) -> str:
    """Render with the common monomial pulled out front: ``L^-2 * (1 + L)``."""
    if p.is_zero:
        return "0"
    if len(p) == 1:
        return render_poly(p)
    g = _gcd_monomial(p)
    if g == (0, 0, ()):
        return "(%s)" % render_poly(p)
    ginv = MotPoly.monomial(1, ell=-g[1], tau=-g[0], syms=[(n, -e) for n, e in g[2]])
    rest = p * ginv
    return "%s * (%s)" % (_mono_str(g, 1, lead=True), render_poly(rest))


def render_zeta(z: ZetaExpr) -> str:
    terms = z.terms()
    if not terms:
        return "0"
    chunks = []
    for facs, coeff in terms:
        cnt = Counter(facs)
        fparts = []
        for f, m in sorted(cnt.items()):
            fparts.append(str(f) if m == 1 else "%s^%d" % (f, m))
        if fparts and coeff == MotPoly.one():
            chunks.append(" * ".join(fparts))
        else:
            body = render_poly_factored(coeff)
            chunks.append(" * ".join([body] + fparts))
    return " + ".join(chunks)


def _frac_latex(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return "%s\\tfrac{%d}{%d}" % (sign, abs(x.numerator), x.denominator)


def _exp_latex(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return ("-" if e < 0 else "") + "%d/%d" % (abs(e.numerator), e.denominator)


def latex_poly(p: MotPoly) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for i, ((tau, ell, syms), c) in enumerate(terms):
        parts = []
        if ell != 0:
            parts.append("\\mathbb{L}^{%s}" % _exp_latex(ell))
        if tau != 0:
            parts.append("T^{%s}" % _exp_latex(tau))
        for name, e in syms:
            body = "[%s]" % name
            parts.append(body if e == 1 else "%s^{%d}" % (body, e))
        mag = abs(c)
        if not parts or mag != 1:
            parts.insert(0, str(mag))
        body = "".join(parts)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


def _lin_exp_latex(f: StdFactor) -> str:
    if f.N == 0:
        return _frac_latex(f.nu)
    np = "s" if f.N == 1 else "%ss" % _frac_latex(f.N)
    return "%s+%s" % (np, _frac_latex(f.nu))


def latex_zeta(z: ZetaExpr) -> str:
    terms = z.terms()
    if not terms:
        return "0"
    chunks = []
    for facs, coeff in terms:
        cnt = Counter(facs)
        fparts = []
        for f, m in sorted(cnt.items()):
            e = _lin_exp_latex(f)
            frac = (
                "\\frac{(\\mathbb{L}-1)\\mathbb{L}^{-(%s)}}{1-\\mathbb{L}^{-(%s)}}"
                % (e, e)
            )
            fparts.append(frac if m == 1 else "\\left(%s\\right)^{%d}" % (frac, m))
        cpart = latex_poly(coeff)
        if "+" in cpart[1:] or "-" in cpart[1:]:
            cpart = "\\left(%s\\right)" % cpart
        if fparts and coeff == MotPoly.one():
            chunks.append("".join(fparts))
        else:
            chunks.append("".join([cpart] + fparts))
    return " + ".join(chunks)


def _spoly_str(p) -> str:
    # descending powers of s
    out = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            spow = "s" if k == 1 else "s^%d" % k
            body = spow if mag == 1 else "%s*%s" % (mag, spow)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


def _spoly_latex(p) -> str:
    out = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        if k == 0:
            body = _frac_latex(abs(c))
        else:
            mag = abs(c)
            spow = "s" if k == 1 else "s^{%d}" % k
            body = spow if mag == 1 else "%s%s" % (_frac_latex(mag), spow)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out) if out else "0"


def _lin_str(f: LinFactor) -> str:
    N, nu = f
    if N == 0:
        return str(nu)
    if N == 1:
        sp = "s"
    else:
        sp = "%s*s" % N
    return "%s + %s" % (sp, nu)


def _lin_latex(f: LinFactor) -> str:
    N, nu = f
    sp = "s" if N == 1 else "%ss" % _frac_latex(N)
    return "%s+%s" % (sp, _frac_latex(nu))


def json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))

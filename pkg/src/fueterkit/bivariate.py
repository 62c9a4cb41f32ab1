"""Scalar Laurent calculus in the two radii (r, rho).

BivariateRadial is a sparse sum c_{ab} r^a rho^b with integer exponents
of either sign.  The radial operators (x^{-1} d/dx)^n and (d/dx x^{-1})^n
act by monomial rules, which are exact and total on this class, so no
domain bookkeeping is needed.  The same representation doubles for
functions of (X0, R) in the single-axis constructions, since the operator
rules are plain power rules in each slot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]

_R = "r"
_RHO = "rho"


@dataclass(frozen=True)
class BiaxialParams:
    """Homogeneity degrees (k, l) and group dimensions (p, q)."""

    k: int
    l: int
    p: int
    q: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("degrees k, l must be >= 0")
        if self.p < 1 or self.q < 1:
            raise ValueError("group dimensions p, q must be >= 1")


class BivariateRadial:
    """Sparse exact Laurent expression in (r, rho); pure scalar."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | Iterable[tuple[tuple[int, int], Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), coeff in items:
            c = acc.get((a, b), 0) + Fraction(coeff)
            if c:
                acc[(a, b)] = c
            elif (a, b) in acc:
                del acc[(a, b)]
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("BivariateRadial is immutable")

    @classmethod
    def zero(cls) -> "BivariateRadial":
        return cls()

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Rational = 1) -> "BivariateRadial":
        return cls({(a, b): Fraction(coeff)})

    @classmethod
    def constant(cls, value: Rational) -> "BivariateRadial":
        return cls({(0, 0): Fraction(value)})

    @property
    def terms(self) -> Mapping[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariateRadial.constant(other)
        if not isinstance(other, BivariateRadial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "BivariateRadial":
        return BivariateRadial({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariateRadial.constant(other)
        if not isinstance(other, BivariateRadial):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            elif k in acc:
                del acc[k]
        return BivariateRadial(acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariateRadial.constant(other)
        if not isinstance(other, BivariateRadial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return BivariateRadial({k: v * c for k, v in self._terms.items()}) if c else BivariateRadial()
        if not isinstance(other, BivariateRadial):
            return NotImplemented
        acc: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                v = acc.get(k, 0) + c1 * c2
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        return BivariateRadial(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def shift(self, da: int, db: int) -> "BivariateRadial":
        """Multiply by r^da rho^db."""
        return BivariateRadial({(a + da, b + db): c for (a, b), c in self._terms.items()})

    def derivative(self, var: str) -> "BivariateRadial":
        """Plain partial derivative in r or rho."""
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self._terms.items():
            if var == _R:
                if a:
                    acc[(a - 1, b)] = acc.get((a - 1, b), 0) + a * c
            elif var == _RHO:
                if b:
                    acc[(a, b - 1)] = acc.get((a, b - 1), 0) + b * c
            else:
                raise ValueError(f"unknown variable {var!r}")
        return BivariateRadial(acc)

    def __repr__(self) -> str:
        if not self._terms:
            return "BivariateRadial(0)"
        bits = [f"{c}*r^{a}*rho^{b}" for (a, b), c in self.items()]
        return "BivariateRadial(" + " + ".join(bits) + ")"


def _check_var(var: str) -> int:
    if var == _R:
        return 0
    if var == _RHO:
        return 1
    raise ValueError(f"variable must be 'r' or 'rho', got {var!r}")


def apply_xinv_dx(f: BivariateRadial, n: int, var: str = _R) -> BivariateRadial:
    """n-fold (x^{-1} d/dx) in the chosen radius; monomial rule a -> a*x^{a-2}."""
    slot = _check_var(var)
    if n < 0:
        raise ValueError("operator power must be >= 0")
    cur = f
    for _ in range(n):
        acc: dict[tuple[int, int], Fraction] = {}
        for key, c in cur._terms.items():
            e = key[slot]
            if e:
                nk = (key[0] - 2, key[1]) if slot == 0 else (key[0], key[1] - 2)
                v = acc.get(nk, 0) + e * c
                if v:
                    acc[nk] = v
                elif nk in acc:
                    del acc[nk]
        cur = BivariateRadial(acc)
    return cur


def apply_dx_xinv(f: BivariateRadial, n: int, var: str = _R) -> BivariateRadial:
    """n-fold (d/dx x^{-1}); monomial rule a -> (a-1)*x^{a-2}."""
    slot = _check_var(var)
    if n < 0:
        raise ValueError("operator power must be >= 0")
    cur = f
    for _ in range(n):
        acc: dict[tuple[int, int], Fraction] = {}
        for key, c in cur._terms.items():
            e = key[slot] - 1
            if e:
                nk = (key[0] - 2, key[1]) if slot == 0 else (key[0], key[1] - 2)
                v = acc.get(nk, 0) + e * c
                if v:
                    acc[nk] = v
                elif nk in acc:
                    del acc[nk]
        cur = BivariateRadial(acc)
    return cur


def delta2_power(f: BivariateRadial, n: int) -> BivariateRadial:
    """n-fold planar Laplacian d^2/dr^2 + d^2/drho^2."""
    if n < 0:
        raise ValueError("operator power must be >= 0")
    cur = f
    for _ in range(n):
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in cur._terms.items():
            ca = a * (a - 1)
            if ca:
                k = (a - 2, b)
                v = acc.get(k, 0) + ca * c
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
            cb = b * (b - 1)
            if cb:
                k = (a, b - 2)
                v = acc.get(k, 0) + cb * c
                if v:
                    acc[k] = v
                elif k in acc:
                    del acc[k]
        cur = BivariateRadial(acc)
    return cur


def expansion_coefficient(j1: int, j2: int, params: BiaxialParams) -> int:
    """Integer weight attached to the (j1, j2) operator term.

    Defined multiplicatively from the one-sided products
    prod_{s=1..j}(2k + p - (2s - 1)) and its (l, q) twin; vanishes once a
    factor hits zero, which truncates the expansion for odd p, q.
    """
    if j1 < 0 or j2 < 0:
        raise ValueError("indices must be >= 0")
    d1 = 1
    for s in range(1, j1 + 1):
        d1 *= 2 * params.k + params.p - (2 * s - 1)
    d2 = 1
    for s in range(1, j2 + 1):
        d2 *= 2 * params.l + params.q - (2 * s - 1)
    return d1 * d2


def multinomial(n: int, j1: int, j2: int) -> int:
    """n! / (j1! j2! (n - j1 - j2)!)."""
    if j1 < 0 or j2 < 0 or j1 + j2 > n:
        raise ValueError(f"multinomial indices out of range: n={n}, j1={j1}, j2={j2}")
    return math.comb(n, j1) * math.comb(n - j1, j2)


def operator_term(h: BivariateRadial, n: int, j1: int, j2: int, s1: int, s2: int) -> BivariateRadial:
    """Mixed operator string applied to h.

    Applies Delta_2^{n-j1-j2} first, then j1 copies of the r-operator
    ((r^{-1} d_r) for s1 = 0, (d_r r^{-1}) for s1 = 1), then j2 copies of
    the rho-operator selected by s2.
    """
    if j1 < 0 or j2 < 0 or j1 + j2 > n:
        raise ValueError(f"operator indices out of range: n={n}, j1={j1}, j2={j2}")
    if s1 not in (0, 1) or s2 not in (0, 1):
        raise ValueError("s1, s2 must be 0 or 1")
    out = delta2_power(h, n - j1 - j2)
    out = apply_xinv_dx(out, j1, _R) if s1 == 0 else apply_dx_xinv(out, j1, _R)
    out = apply_xinv_dx(out, j2, _RHO) if s2 == 0 else apply_dx_xinv(out, j2, _RHO)
    return out


def laplacian_expansion(h: BivariateRadial, n: int, s1: int, s2: int, params: BiaxialParams) -> BivariateRadial:
    """Scalar factor of Delta_X^n (h omega^s1 nu^s2 Pk Pl) as an operator sum.

    Sum over j1 + j2 <= n of multinomial(n; j1, j2) * expansion weight *
    the mixed operator term; multiplying the result back by
    omega^s1 nu^s2 Pk Pl reproduces the n-fold Laplacian exactly.
    """
    if n < 1:
        raise ValueError("expansion order n must be >= 1")
    total = BivariateRadial.zero()
    for j1 in range(n + 1):
        for j2 in range(n - j1 + 1):
            weight = expansion_coefficient(j1, j2, params)
            if weight == 0:
                continue
            coeff = multinomial(n, j1, j2) * weight
            total = total + operator_term(h, n, j1, j2, s1, s2) * coeff
    return total


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)...; empty-product convention (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial defined for n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out

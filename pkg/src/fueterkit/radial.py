"""Clifford-valued Laurent-radial expressions over a biaxial frame.

A RadialExpr is a finite sum of terms

    (coordinate monomial) * (Multivector coefficient) * r^a * rho^b

with integer exponents a, b of either sign.  The class {polynomial * r^a
rho^b} is the smallest one containing every integrand the Fueter
constructions need and it is closed under partial differentiation, which
is why it is the universal function class of this engine.

Canonical form and the zero test
--------------------------------
Terms with different exponent parity can never cancel (r is not a
polynomial in the coordinates), so the parity sectors ((a mod 2),
(b mod 2)) are independent.  Within a sector, every term is folded down
to the sector-minimal exponents by rewriting r^2 -> sum x_j^2 (and the
rho analogue); after merging like monomial * blade keys, linear
independence of coordinate monomials makes emptiness equivalent to being
the zero function on {r > 0, rho > 0}.  Equality is always decided by
folding the difference; the displayed canonical form additionally
normalizes exponents into the {0, 1} window (lifting by exact division
where possible), which gives a unique normal form for printing.

Internally the terms dictionary is only merged by exact key; folding is
deferred to the points where a zero test, an equality, or a display form
is actually needed.  This keeps long operator pipelines fast without
affecting any observable behaviour.
"""

from __future__ import annotations

from fractions import Fraction
from math import sqrt
from typing import Iterable, Mapping, Union

from .bivariate import BivariateRadial
from .clifford import Blade, Multivector, SCALAR_BLADE, blade_product, vector_embed
from .errors import PreconditionError
from .frame import AxisFrame

Rational = Union[int, Fraction]
Mono = tuple[int, ...]
TermKey = tuple[Mono, Blade, int, int]

SCOPE_FIRST = "first-group"
SCOPE_SECOND = "second-group"
SCOPE_FULL = "full"
SCOPE_CR = "cauchy-riemann"

_SCOPES = (SCOPE_FIRST, SCOPE_SECOND, SCOPE_FULL, SCOPE_CR)

_square_power_cache: dict[tuple[tuple[int, ...], int, int], dict[Mono, int]] = {}


def _group_square_power(indices: tuple[int, ...], ncoords: int, t: int) -> dict[Mono, int]:
    """Expansion of (sum of squared coordinates)^t as monomial -> int."""
    key = (indices, ncoords, t)
    hit = _square_power_cache.get(key)
    if hit is not None:
        return hit
    zero = (0,) * ncoords
    out: dict[Mono, int] = {zero: 1}
    for _ in range(t):
        nxt: dict[Mono, int] = {}
        for mono, c in out.items():
            for i in indices:
                m = list(mono)
                m[i] += 2
                m2 = tuple(m)
                nxt[m2] = nxt.get(m2, 0) + c
        out = nxt
    _square_power_cache[key] = out
    return out


def _mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


class RadialExpr:
    """Immutable Clifford-valued Laurent-radial expression."""

    __slots__ = ("frame", "_terms", "_canonical_cache")

    def __init__(self, frame: AxisFrame,
                 terms: Mapping[TermKey, Rational] | Iterable[tuple[TermKey, Rational]] = (),
                 *, _merged: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        if _merged and isinstance(terms, dict):
            acc = terms
        else:
            acc = {}
            n = frame.ncoords
            for (mono, blade, a, b), coeff in items:
                mono = tuple(mono)
                blade = tuple(blade)
                if len(mono) != n:
                    raise ValueError(f"monomial length {len(mono)} does not match frame coordinates {n}")
                if any(e < 0 for e in mono):
                    raise ValueError("monomial exponents must be >= 0")
                if frame.q == 0 and b != 0:
                    raise ValueError("rho exponent must be 0 in a single-axis frame")
                key = (mono, blade, a, b)
                c = acc.get(key, 0) + Fraction(coeff)
                if c:
                    acc[key] = c
                elif key in acc:
                    del acc[key]
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "_terms", acc)
        object.__setattr__(self, "_canonical_cache", None)

    def __setattr__(self, name, value):
        raise AttributeError("RadialExpr is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, frame: AxisFrame) -> "RadialExpr":
        return cls(frame)

    @classmethod
    def scalar(cls, frame: AxisFrame, value: Rational) -> "RadialExpr":
        value = Fraction(value)
        if not value:
            return cls(frame)
        mono = (0,) * frame.ncoords
        return cls(frame, {(mono, SCALAR_BLADE, 0, 0): value}, _merged=True)

    @classmethod
    def constant(cls, frame: AxisFrame, mv: Multivector) -> "RadialExpr":
        if mv.dim != frame.m:
            raise ValueError(f"multivector dimension {mv.dim} does not match frame m={frame.m}")
        mono = (0,) * frame.ncoords
        return cls(frame, {(mono, blade, 0, 0): c for blade, c in mv.terms.items()}, _merged=True)

    @classmethod
    def coordinate(cls, frame: AxisFrame, name: str) -> "RadialExpr":
        idx = frame.coord_index(name)
        mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
        return cls(frame, {(mono, SCALAR_BLADE, 0, 0): Fraction(1)}, _merged=True)

    @classmethod
    def monomial(cls, frame: AxisFrame, exponents: Mapping[str, int],
                 coeff: Multivector | Rational = 1, a: int = 0, b: int = 0) -> "RadialExpr":
        mono = [0] * frame.ncoords
        for name, e in exponents.items():
            if e < 0:
                raise ValueError("monomial exponents must be >= 0")
            mono[frame.coord_index(name)] += e
        if not isinstance(coeff, Multivector):
            coeff = Multivector.scalar(coeff, frame.m)
        key_mono = tuple(mono)
        return cls(frame, {(key_mono, blade, a, b): c for blade, c in coeff.terms.items()})

    @classmethod
    def radial(cls, frame: AxisFrame, a: int = 0, b: int = 0, coeff: Rational = 1) -> "RadialExpr":
        """The scalar term coeff * r^a * rho^b."""
        coeff = Fraction(coeff)
        if not coeff:
            return cls(frame)
        if frame.q == 0 and b != 0:
            raise ValueError("rho exponent must be 0 in a single-axis frame")
        mono = (0,) * frame.ncoords
        return cls(frame, {(mono, SCALAR_BLADE, a, b): coeff}, _merged=True)

    @classmethod
    def from_bivariate(cls, frame: AxisFrame, h: BivariateRadial) -> "RadialExpr":
        """Embed a scalar Laurent function of (r, rho)."""
        mono = (0,) * frame.ncoords
        acc: dict[TermKey, Fraction] = {}
        for (a, b), c in h.terms.items():
            if frame.q == 0 and b != 0:
                raise ValueError("rho exponent must be 0 in a single-axis frame")
            acc[(mono, SCALAR_BLADE, a, b)] = c
        return cls(frame, acc, _merged=True)

    @classmethod
    def from_bivariate_classical(cls, frame: AxisFrame, h: BivariateRadial) -> "RadialExpr":
        """Embed a function of (X0, R): slot 1 is the X0 power, slot 2 the r power."""
        if not frame.scalar_axis:
            raise PreconditionError("classical embedding needs a frame with the scalar axis X0")
        acc: dict[TermKey, Fraction] = {}
        for (i, j), c in h.terms.items():
            if i < 0:
                raise ValueError("X0 powers must be >= 0")
            mono = tuple(i if k == 0 else 0 for k in range(frame.ncoords))
            acc[(mono, SCALAR_BLADE, j, 0)] = c
        return cls(frame, acc, _merged=True)

    # -- basic structure ----------------------------------------------

    @property
    def raw_terms(self) -> Mapping[TermKey, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._minfold())

    def is_zero(self) -> bool:
        return not self._minfold()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadialExpr.scalar(self.frame, other)
        if not isinstance(other, RadialExpr):
            return NotImplemented
        if self.frame != other.frame:
            return False
        return (self - other).is_zero()

    __hash__ = None  # equality is functional, not structural

    # -- arithmetic ----------------------------------------------------

    def _check_frame(self, other: "RadialExpr") -> None:
        if self.frame != other.frame:
            raise ValueError(f"frame mismatch: {self.frame} vs {other.frame}")

    def __neg__(self) -> "RadialExpr":
        return RadialExpr(self.frame, {k: -c for k, c in self._terms.items()}, _merged=True)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialExpr.scalar(self.frame, other)
        if isinstance(other, Multivector):
            other = RadialExpr.constant(self.frame, other)
        if not isinstance(other, RadialExpr):
            return NotImplemented
        self._check_frame(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            elif k in acc:
                del acc[k]
        return RadialExpr(self.frame, acc, _merged=True)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadialExpr.scalar(self.frame, other)
        if isinstance(other, Multivector):
            other = RadialExpr.constant(self.frame, other)
        if not isinstance(other, RadialExpr):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return RadialExpr(self.frame)
            return RadialExpr(self.frame, {k: v * c for k, v in self._terms.items()}, _merged=True)
        if isinstance(other, Multivector):
            other = RadialExpr.constant(self.frame, other)
        if not isinstance(other, RadialExpr):
            return NotImplemented
        return re_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, Multivector):
            return re_mul(RadialExpr.constant(self.frame, other), self)
        return NotImplemented

    def __pow__(self, n: int) -> "RadialExpr":
        if n < 0:
            raise ValueError("expression power must be >= 0")
        out = RadialExpr.scalar(self.frame, 1)
        for _ in range(n):
            out = out * self
        return out

    # -- folding and canonical form ------------------------------------

    def _minfold(self) -> dict[TermKey, Fraction]:
        """Sector-minimal folded and merged form; empty iff zero."""
        return _minfold_terms(self.frame, self._terms)

    def canonical_terms(self) -> dict[TermKey, Fraction]:
        """Unique display normal form (window-normalized exponents)."""
        cached = self._canonical_cache
        if cached is None:
            cached = _canonical_terms(self.frame, self._terms)
            object.__setattr__(self, "_canonical_cache", cached)
        return dict(cached)

    def canonicalized(self) -> "RadialExpr":
        return RadialExpr(self.frame, self.canonical_terms(), _merged=True)

    # -- views ----------------------------------------------------------

    def grouped_terms(self) -> list["RadialTerm"]:
        """Canonical terms grouped as (monomial, Multivector, a, b)."""
        groups: dict[tuple[Mono, int, int], dict[Blade, Fraction]] = {}
        for (mono, blade, a, b), c in self.canonical_terms().items():
            groups.setdefault((mono, a, b), {})[blade] = c
        out = []
        for (mono, a, b) in sorted(groups):
            mv = Multivector(self.frame.m, groups[(mono, a, b)])
            out.append(RadialTerm(mono, mv, a, b))
        return out

    def x_degree_range(self) -> tuple[int, int] | None:
        fold = self._minfold()
        if not fold:
            return None
        xs = self.frame.x_indices
        degs = [sum(mono[i] for i in xs) + a for (mono, _blade, a, _b) in fold]
        return min(degs), max(degs)

    def homogeneity_degree(self) -> int | None:
        """Common total degree (monomial + a + b), or None when mixed."""
        fold = self._minfold()
        if not fold:
            return None
        degs = {sum(mono) + a + b for (mono, _blade, a, b) in fold}
        if len(degs) == 1:
            return degs.pop()
        return None

    def blade_parity_split(self) -> tuple["RadialExpr", "RadialExpr"]:
        """Split by coefficient blade cardinality into even/odd valued parts."""
        even: dict[TermKey, Fraction] = {}
        odd: dict[TermKey, Fraction] = {}
        for key, c in self._terms.items():
            (even if len(key[1]) % 2 == 0 else odd)[key] = c
        return (RadialExpr(self.frame, even, _merged=True),
                RadialExpr(self.frame, odd, _merged=True))

    def negate_group(self, group: str) -> "RadialExpr":
        """Substitute x -> -x (or y -> -y) coordinatewise; radii are unchanged."""
        idxs = self.frame.x_indices if group == "x" else self.frame.y_indices
        acc: dict[TermKey, Fraction] = {}
        for (mono, blade, a, b), c in self._terms.items():
            if sum(mono[i] for i in idxs) % 2 == 1:
                c = -c
            acc[(mono, blade, a, b)] = c
        return RadialExpr(self.frame, acc, _merged=True)

    def __repr__(self) -> str:
        from .formatting import format_expression

        return f"RadialExpr({format_expression(self)})"


class RadialTerm:
    """One canonical group: monomial * Multivector * r^a rho^b."""

    __slots__ = ("mono", "coeff", "a", "b")

    def __init__(self, mono: Mono, coeff: Multivector, a: int, b: int):
        self.mono = mono
        self.coeff = coeff
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"RadialTerm(mono={self.mono}, coeff={self.coeff!r}, a={self.a}, b={self.b})"


# -- canonicalization internals ----------------------------------------


def _sector_key(frame: AxisFrame, a: int, b: int) -> tuple[int, int]:
    return (a % 2, b % 2 if frame.q else 0)


def _fold_items(frame: AxisFrame, items, amin: int, bmin: int) -> dict[tuple[Mono, Blade], Fraction]:
    """Fold every (mono, blade, a, b, c) down to the common (amin, bmin)."""
    xs = tuple(frame.x_indices)
    ys = tuple(frame.y_indices)
    n = frame.ncoords
    merged: dict[tuple[Mono, Blade], Fraction] = {}
    for (mono, blade, a, b), c in items:
        tx = (a - amin) // 2
        ty = (b - bmin) // 2
        if tx == 0 and ty == 0:
            key = (mono, blade)
            v = merged.get(key, 0) + c
            if v:
                merged[key] = v
            elif key in merged:
                del merged[key]
            continue
        px = _group_square_power(xs, n, tx)
        py = _group_square_power(ys, n, ty) if ty else {(0,) * n: 1}
        for mx, cx in px.items():
            base = _mono_mul(mono, mx)
            for my, cy in py.items():
                key = (_mono_mul(base, my), blade)
                v = merged.get(key, 0) + c * cx * cy
                if v:
                    merged[key] = v
                elif key in merged:
                    del merged[key]
    return merged


def _minfold_terms(frame: AxisFrame, terms: Mapping[TermKey, Fraction]) -> dict[TermKey, Fraction]:
    sectors: dict[tuple[int, int], list] = {}
    for key, c in terms.items():
        sectors.setdefault(_sector_key(frame, key[2], key[3]), []).append((key, c))
    out: dict[TermKey, Fraction] = {}
    for sector in sorted(sectors):
        items = sectors[sector]
        amin = min(k[2] for k, _ in items)
        bmin = min(k[3] for k, _ in items) if frame.q else 0
        merged = _fold_items(frame, items, amin, bmin)
        for (mono, blade) in sorted(merged):
            out[(mono, blade, amin, bmin)] = merged[(mono, blade)]
    return out


def _divide_by_group_square(frame: AxisFrame, group: str,
                            poly: dict[tuple[Mono, Blade], Fraction]) -> dict[tuple[Mono, Blade], Fraction] | None:
    """Exact division of a polynomial by sum of squared group coordinates.

    Returns the quotient, or None when the division leaves a remainder.
    Works blade by blade with lex reduction against the group's first
    coordinate squared.
    """
    idxs = tuple(frame.x_indices if group == "x" else frame.y_indices)
    if not idxs:
        return None
    lead = idxs[0]
    by_blade: dict[Blade, dict[Mono, Fraction]] = {}
    for (mono, blade), c in poly.items():
        by_blade.setdefault(blade, {})[mono] = c
    quotient: dict[tuple[Mono, Blade], Fraction] = {}
    for blade, rem in by_blade.items():
        rem = dict(rem)
        while rem:
            mono = max(rem)
            c = rem.pop(mono)
            if mono[lead] < 2:
                return None
            qm = list(mono)
            qm[lead] -= 2
            qm_t = tuple(qm)
            quotient[(qm_t, blade)] = quotient.get((qm_t, blade), 0) + c
            for i in idxs[1:]:
                m2 = list(qm_t)
                m2[i] += 2
                m2_t = tuple(m2)
                v = rem.get(m2_t, 0) - c
                if v:
                    rem[m2_t] = v
                elif m2_t in rem:
                    del rem[m2_t]
    return quotient


def _canonical_terms(frame: AxisFrame, terms: Mapping[TermKey, Fraction]) -> dict[TermKey, Fraction]:
    sectors: dict[tuple[int, int], list] = {}
    for key, c in terms.items():
        sectors.setdefault(_sector_key(frame, key[2], key[3]), []).append((key, c))
    out: dict[TermKey, Fraction] = {}
    for sector in sorted(sectors):
        items = sectors[sector]
        amin = min(k[2] for k, _ in items)
        bmin = min(k[3] for k, _ in items) if frame.q else 0
        merged = _fold_items(frame, items, amin, bmin)
        if not merged:
            continue
        target_a = amin % 2
        target_b = (bmin % 2) if frame.q else 0
        if amin > target_a:
            merged = _fold_items(frame, (((mono, blade, amin, 0), c) for (mono, blade), c in merged.items()),
                                 target_a, 0)
            amin = target_a
        else:
            while amin < target_a:
                quot = _divide_by_group_square(frame, "x", merged)
                if quot is None:
                    break
                merged = quot
                amin += 2
        if bmin > target_b:
            merged = _fold_items(frame, (((mono, blade, 0, bmin), c) for (mono, blade), c in merged.items()),
                                 0, target_b)
            bmin = target_b
        else:
            while bmin < target_b:
                quot = _divide_by_group_square(frame, "y", merged)
                if quot is None:
                    break
                merged = quot
                bmin += 2
        for (mono, blade) in sorted(merged):
            out[(mono, blade, amin, bmin)] = merged[(mono, blade)]
    return out


def canonicalize(frame: AxisFrame, raw_terms: Iterable[tuple[Mono, Blade, int, int, Rational]]) -> RadialExpr:
    """Build a RadialExpr in canonical form from raw (mono, blade, a, b, coeff) terms."""
    acc: dict[TermKey, Fraction] = {}
    n = frame.ncoords
    for (mono, blade, a, b, coeff) in raw_terms:
        mono = tuple(mono)
        blade = tuple(blade)
        if len(mono) != n:
            raise ValueError(f"monomial length {len(mono)} does not match frame coordinates {n}")
        if frame.q == 0 and b != 0:
            raise ValueError("rho exponent must be 0 in a single-axis frame")
        key = (mono, blade, a, b)
        c = acc.get(key, 0) + Fraction(coeff)
        if c:
            acc[key] = c
        elif key in acc:
            del acc[key]
    return RadialExpr(frame, _canonical_terms(frame, acc), _merged=True)


# -- products ------------------------------------------------------------


def re_mul(f: RadialExpr, g: RadialExpr) -> RadialExpr:
    """Termwise product; coefficients multiply by the geometric product in
    the given order (left factor's coefficient on the left)."""
    if f.frame != g.frame:
        raise ValueError(f"frame mismatch: {f.frame} vs {g.frame}")
    acc: dict[TermKey, Fraction] = {}
    for (m1, b1, a1, r1), c1 in f._terms.items():
        for (m2, b2, a2, r2), c2 in g._terms.items():
            sign, blade = blade_product(b1, b2)
            key = (_mono_mul(m1, m2), blade, a1 + a2, r1 + r2)
            v = acc.get(key, 0) + sign * c1 * c2
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
    return RadialExpr(f.frame, acc, _merged=True)


# -- differential operators ----------------------------------------------


def partial_derivative(f: RadialExpr, coord: str | int) -> RadialExpr:
    """Exact partial derivative in one frame coordinate.

    Term rule for an x-coordinate: d(mu c r^a rho^b) = (d mu) c r^a rho^b
    + a x_j mu c r^{a-2} rho^b, with the rho analogue for y-coordinates
    and the plain power rule for X0.
    """
    frame = f.frame
    idx = frame.coord_index(coord) if isinstance(coord, str) else coord
    if not 0 <= idx < frame.ncoords:
        raise ValueError(f"coordinate index {idx} out of range")
    in_x = idx in frame.x_indices
    in_y = idx in frame.y_indices
    acc: dict[TermKey, Fraction] = {}
    for (mono, blade, a, b), c in f._terms.items():
        e = mono[idx]
        if e:
            m = list(mono)
            m[idx] -= 1
            key = (tuple(m), blade, a, b)
            v = acc.get(key, 0) + e * c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
        if in_x and a:
            m = list(mono)
            m[idx] += 1
            key = (tuple(m), blade, a - 2, b)
            v = acc.get(key, 0) + a * c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
        elif in_y and b:
            m = list(mono)
            m[idx] += 1
            key = (tuple(m), blade, a, b - 2)
            v = acc.get(key, 0) + b * c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
    return RadialExpr(frame, acc, _merged=True)


def _scope_vector_coords(frame: AxisFrame, scope: str) -> list[int]:
    if scope not in _SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {_SCOPES}")
    if scope == SCOPE_FIRST:
        return list(frame.x_indices)
    if scope == SCOPE_SECOND:
        return list(frame.y_indices)
    return list(frame.x_indices) + list(frame.y_indices)


def dirac(f: RadialExpr, scope: str = SCOPE_FULL) -> RadialExpr:
    """Left Dirac operator sum_j e_j d_j over the scope's vector coordinates.

    The cauchy-riemann scope adds d/dX0 with unit coefficient and needs a
    frame with the scalar axis.
    """
    frame = f.frame
    if scope == SCOPE_CR and not frame.scalar_axis:
        raise PreconditionError("cauchy-riemann scope needs a frame with the scalar axis X0")
    coords = _scope_vector_coords(frame, scope)
    acc: dict[TermKey, Fraction] = {}
    for idx in coords:
        gen = (frame.generator_of(idx),)
        part = partial_derivative(f, idx)
        for (mono, blade, a, b), c in part._terms.items():
            sign, nb = blade_product(gen, blade)
            key = (mono, nb, a, b)
            v = acc.get(key, 0) + sign * c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
    if scope == SCOPE_CR:
        part = partial_derivative(f, 0)
        for key, c in part._terms.items():
            v = acc.get(key, 0) + c
            if v:
                acc[key] = v
            elif key in acc:
                del acc[key]
    return RadialExpr(frame, acc, _merged=True)


def laplacian(f: RadialExpr, scope: str = SCOPE_FULL) -> RadialExpr:
    """One application of sum_j d_j^2 over the scope's coordinates.

    Closed per-term rule: for a monomial mu of x-degree d and a term
    mu c r^a rho^b, the x-part contributes (Delta_x mu) r^a plus
    a (p + 2d + a - 2) mu r^{a-2}; likewise in y, plus d^2/dX0^2 in the
    cauchy-riemann scope.  Equivalent to composing partial derivatives,
    just without the intermediate blowup.
    """
    frame = f.frame
    if scope == SCOPE_CR and not frame.scalar_axis:
        raise PreconditionError("cauchy-riemann scope needs a frame with the scalar axis X0")
    xs = tuple(frame.x_indices)
    ys = tuple(frame.y_indices)
    do_x = scope in (SCOPE_FIRST, SCOPE_FULL, SCOPE_CR)
    do_y = scope in (SCOPE_SECOND, SCOPE_FULL, SCOPE_CR) and frame.q > 0
    do_x0 = scope == SCOPE_CR
    p, q = frame.p, frame.q
    acc: dict[TermKey, Fraction] = {}

    def bump(key: TermKey, delta) -> None:
        v = acc.get(key, 0) + delta
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]

    for (mono, blade, a, b), c in f._terms.items():
        if do_x:
            dx = 0
            for i in xs:
                e = mono[i]
                if e:
                    dx += e
                    if e > 1:
                        m = list(mono)
                        m[i] -= 2
                        bump((tuple(m), blade, a, b), e * (e - 1) * c)
            if a:
                coeff = a * (p + 2 * dx + a - 2)
                if coeff:
                    bump((mono, blade, a - 2, b), coeff * c)
        if do_y:
            dy = 0
            for i in ys:
                e = mono[i]
                if e:
                    dy += e
                    if e > 1:
                        m = list(mono)
                        m[i] -= 2
                        bump((tuple(m), blade, a, b), e * (e - 1) * c)
            if b:
                coeff = b * (q + 2 * dy + b - 2)
                if coeff:
                    bump((mono, blade, a, b - 2), coeff * c)
        if do_x0:
            e = mono[0]
            if e > 1:
                m = list(mono)
                m[0] -= 2
                bump((tuple(m), blade, a, b), e * (e - 1) * c)
    return RadialExpr(frame, acc, _merged=True)


def laplacian_power(f: RadialExpr, n: int, scope: str = SCOPE_FULL) -> RadialExpr:
    if n < 0:
        raise ValueError("Laplacian power must be >= 0")
    cur = f
    for _ in range(n):
        cur = laplacian(cur, scope)
    return cur


def is_monogenic(f: RadialExpr, scope: str = SCOPE_FULL) -> bool:
    return dirac(f, scope).is_zero()


def homogeneity_degree(f: RadialExpr) -> int | None:
    return f.homogeneity_degree()


# -- frame-level builders --------------------------------------------------


def vector_x(frame: AxisFrame) -> RadialExpr:
    """The vector x = sum_j x_j e_j of the first group."""
    acc: dict[TermKey, Fraction] = {}
    for idx in frame.x_indices:
        mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
        acc[(mono, (frame.generator_of(idx),), 0, 0)] = Fraction(1)
    return RadialExpr(frame, acc, _merged=True)


def vector_y(frame: AxisFrame) -> RadialExpr:
    acc: dict[TermKey, Fraction] = {}
    for idx in frame.y_indices:
        mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
        acc[(mono, (frame.generator_of(idx),), 0, 0)] = Fraction(1)
    return RadialExpr(frame, acc, _merged=True)


def omega(frame: AxisFrame) -> RadialExpr:
    """Unit vector x / r as the Laurent expression x * r^{-1}."""
    acc: dict[TermKey, Fraction] = {}
    for idx in frame.x_indices:
        mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
        acc[(mono, (frame.generator_of(idx),), -1, 0)] = Fraction(1)
    return RadialExpr(frame, acc, _merged=True)


def nu(frame: AxisFrame) -> RadialExpr:
    """Unit vector y / rho as the Laurent expression y * rho^{-1}."""
    if frame.q == 0:
        raise PreconditionError("nu needs a second axial group (q >= 1)")
    acc: dict[TermKey, Fraction] = {}
    for idx in frame.y_indices:
        mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
        acc[(mono, (frame.generator_of(idx),), 0, -1)] = Fraction(1)
    return RadialExpr(frame, acc, _merged=True)


def inner_x(frame: AxisFrame, t: Iterable[Rational]) -> RadialExpr:
    """Scalar inner product <x, t> for a fixed rational vector t."""
    ts = [Fraction(c) for c in t]
    if len(ts) != frame.p:
        raise ValueError(f"vector length {len(ts)} does not match p={frame.p}")
    acc: dict[TermKey, Fraction] = {}
    for j, idx in enumerate(frame.x_indices):
        if ts[j]:
            mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
            acc[(mono, SCALAR_BLADE, 0, 0)] = ts[j]
    return RadialExpr(frame, acc, _merged=True)


def inner_y(frame: AxisFrame, s: Iterable[Rational]) -> RadialExpr:
    ss = [Fraction(c) for c in s]
    if len(ss) != frame.q:
        raise ValueError(f"vector length {len(ss)} does not match q={frame.q}")
    acc: dict[TermKey, Fraction] = {}
    for j, idx in enumerate(frame.y_indices):
        if ss[j]:
            mono = tuple(1 if i == idx else 0 for i in range(frame.ncoords))
            acc[(mono, SCALAR_BLADE, 0, 0)] = ss[j]
    return RadialExpr(frame, acc, _merged=True)


def constant_vector_x(frame: AxisFrame, t: Iterable[Rational]) -> RadialExpr:
    """Constant Clifford vector sum t_j e_j over the first group."""
    return RadialExpr.constant(frame, vector_embed(t, dim=frame.m))


def constant_vector_y(frame: AxisFrame, s: Iterable[Rational]) -> RadialExpr:
    """Constant Clifford vector sum s_j e_{p+j} over the second group."""
    return RadialExpr.constant(frame, vector_embed(s, dim=frame.m, offset=frame.p))


# -- numeric smoke evaluation ----------------------------------------------


def evaluate_terms(frame: AxisFrame, terms: Iterable[tuple[TermKey, Rational]],
                   point: Mapping[str, Rational]) -> dict[Blade, float]:
    """Float evaluation of a term list at a rational sample point.

    r and rho are computed as floating square roots, so this is only a
    smoke-test companion to the exact zero test, never part of it.
    """
    coords = [float(Fraction(point[name])) for name in frame.coord_names()]
    r2 = sum(coords[i] ** 2 for i in frame.x_indices)
    rho2 = sum(coords[i] ** 2 for i in frame.y_indices)
    r = sqrt(r2)
    rho = sqrt(rho2) if frame.q else 1.0
    out: dict[Blade, float] = {}
    for (mono, blade, a, b), c in terms:
        val = float(Fraction(c))
        for i, e in enumerate(mono):
            if e:
                val *= coords[i] ** e
        if a:
            val *= r ** a
        if b:
            val *= rho ** b
        out[blade] = out.get(blade, 0.0) + val
    return out


def evaluate_numeric(f: RadialExpr, point: Mapping[str, Rational]) -> dict[Blade, float]:
    return evaluate_terms(f.frame, f._terms.items(), point)

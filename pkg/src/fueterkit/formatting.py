"""Deterministic pretty printers: plain text, JSON, LaTeX.

Terms are emitted sorted by (parity sector, radial exponents, monomial,
blade), so identical expressions always print identically.  The plain
form reparses to an equal expression.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bivariate import BivariateRadial
from .clifford import Multivector, blade_text
from .frame import AxisFrame
from .radial import RadialExpr

STYLES = ("plain", "json", "latex")


def _sorted_canonical(f: RadialExpr):
    items = f.canonical_terms().items()
    return sorted(items, key=lambda kv: ((kv[0][2] % 2, kv[0][3] % 2), kv[0][2], kv[0][3], kv[0][0], kv[0][1]))


def _coeff_plain(c: Fraction) -> str:
    return str(c)


def _plain_term(frame: AxisFrame, mono, blade, a: int, b: int, c: Fraction) -> str:
    pieces: list[str] = []
    mag = abs(c)
    for i, e in enumerate(mono):
        if e:
            name = frame.coord_name(i)
            pieces.append(name if e == 1 else f"{name}^{e}")
    if blade:
        pieces.append(blade_text(blade, frame.m))
    if a:
        pieces.append("r" if a == 1 else f"r^{a}")
    if b:
        pieces.append("rho" if b == 1 else f"rho^{b}")
    if mag != 1 or not pieces:
        pieces.insert(0, _coeff_plain(mag))
    return "*".join(pieces)


def _join_signed(parts: list[tuple[int, str]]) -> str:
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def _latex_frac(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_coord(name: str) -> str:
    if name == "X0":
        return "X_{0}"
    return f"{name[0]}_{{{name[1:]}}}"


def _latex_term(frame: AxisFrame, mono, blade, a: int, b: int, c: Fraction) -> str:
    pieces: list[str] = []
    mag = abs(c)
    if mag != 1:
        pieces.append(_latex_frac(mag))
    for i, e in enumerate(mono):
        if e:
            base = _latex_coord(frame.coord_name(i))
            pieces.append(base if e == 1 else f"{base}^{{{e}}}")
    if blade:
        pieces.append(rf"e_{{{','.join(str(j) for j in blade) if frame.m > 9 else ''.join(str(j) for j in blade)}}}")
    if a:
        pieces.append("r" if a == 1 else f"r^{{{a}}}")
    if b:
        pieces.append(r"\rho" if b == 1 else rf"\rho^{{{b}}}")
    if not pieces:
        pieces.append(_latex_frac(mag))
    return r"\,".join(pieces)


def _json_terms(f: RadialExpr, radial_keys: tuple[str, str]) -> list[dict]:
    frame = f.frame
    ka, kb = radial_keys
    out = []
    for (mono, blade, a, b), c in _sorted_canonical(f):
        entry = {
            "mono": {frame.coord_name(i): e for i, e in enumerate(mono) if e},
            "blade": list(blade),
            "coeff": {"num": c.numerator, "den": c.denominator},
            ka: a,
            kb: b,
        }
        out.append(entry)
    return out


def format_expression(f: RadialExpr, style: str = "plain") -> str:
    """Render an expression; the plain style round-trips through the parser."""
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    items = _sorted_canonical(f)
    if style == "json":
        return json.dumps(_json_terms(f, ("a", "b")), separators=(",", ":"))
    if not items:
        return "0"
    frame = f.frame
    if style == "plain":
        parts = [(1 if c > 0 else -1, _plain_term(frame, mono, blade, a, b, c))
                 for (mono, blade, a, b), c in items]
        return _join_signed(parts)
    parts = [(1 if c > 0 else -1, _latex_term(frame, mono, blade, a, b, c))
             for (mono, blade, a, b), c in items]
    return _join_signed(parts)


def expression_json_object(f: RadialExpr) -> dict:
    """CLI wire form: frame header plus terms with r/rho exponent keys."""
    frame = f.frame
    return {
        "frame": {"p": frame.p, "q": frame.q, "scalar_axis": frame.scalar_axis},
        "terms": _json_terms(f, ("r", "rho")),
    }


def format_bivariate(h: BivariateRadial, style: str = "plain") -> str:
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    items = h.items()
    if style == "json":
        return json.dumps(
            [{"coeff": {"num": c.numerator, "den": c.denominator}, "r": a, "rho": b}
             for (a, b), c in items],
            separators=(",", ":"))
    if not items:
        return "0"
    parts: list[tuple[int, str]] = []
    for (a, b), c in items:
        mag = abs(c)
        if style == "plain":
            pieces = []
            if a:
                pieces.append("r" if a == 1 else f"r^{a}")
            if b:
                pieces.append("rho" if b == 1 else f"rho^{b}")
            if mag != 1 or not pieces:
                pieces.insert(0, str(mag))
            parts.append((1 if c > 0 else -1, "*".join(pieces)))
        else:
            pieces = []
            if mag != 1:
                pieces.append(_latex_frac(mag))
            if a:
                pieces.append("r" if a == 1 else f"r^{{{a}}}")
            if b:
                pieces.append(r"\rho" if b == 1 else rf"\rho^{{{b}}}")
            if not pieces:
                pieces.append(_latex_frac(mag))
            parts.append((1 if c > 0 else -1, r"\,".join(pieces)))
    return _join_signed(parts)


def format_multivector(mv: Multivector, style: str = "plain") -> str:
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    items = sorted(mv.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    if style == "json":
        return json.dumps(
            [{"blade": list(b), "coeff": {"num": c.numerator, "den": c.denominator}} for b, c in items],
            separators=(",", ":"))
    if not items:
        return "0"
    parts: list[tuple[int, str]] = []
    for blade, c in items:
        mag = abs(c)
        if style == "plain":
            body = blade_text(blade, mv.dim) if blade else ""
            if mag != 1 or not body:
                body = f"{mag}*{body}" if body else str(mag)
            parts.append((1 if c > 0 else -1, body))
        else:
            bits = []
            if mag != 1 or not blade:
                bits.append(_latex_frac(mag))
            if blade:
                joined = ",".join(str(j) for j in blade) if mv.dim > 9 else "".join(str(j) for j in blade)
                bits.append(rf"e_{{{joined}}}")
            parts.append((1 if c > 0 else -1, r"\,".join(bits)))
    return _join_signed(parts)


def format_components(comp, style: str = "plain") -> str:
    """Factored biaxial form with the unit vectors written explicitly."""
    first = format_bivariate(comp.first, style)
    second = format_bivariate(comp.second, style)
    if style == "latex":
        if comp.kind == "plus":
            return (rf"\bigl({first} + \underline{{\omega}}\,\underline{{\nu}}\,({second})\bigr)"
                    r"P_k(\underline{x})P_\ell(\underline{y})")
        return (rf"\bigl(\underline{{\omega}}\,({first}) + \underline{{\nu}}\,({second})\bigr)"
                r"P_k(\underline{x})P_\ell(\underline{y})")
    if comp.kind == "plus":
        return f"(({first}) + omega*nu*({second}))*Pk*Pl"
    return f"(omega*({first}) + nu*({second}))*Pk*Pl"

"""Command-line surface.

Exit codes: 0 success, 1 precondition violation (parity, monogenicity,
seed order), 2 parse error, 3 internal verification failure.  Random
vector draws are seeded from the FUETER_SEED environment variable when
set; the seed actually used is announced on stderr so runs can be
reproduced.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .bivariate import BiaxialParams, laplacian_expansion
from .catalog import REFERENCE_CASES, run_case
from .errors import ParseError, PreconditionError, VerificationError
from .formatting import expression_json_object, format_bivariate, format_expression
from .frame import AxisFrame
from .fueter import apply_map, fischer_decompose
from .parsing import parse_bivariate, parse_expression, parse_seed, parse_vector
from .radial import SCOPE_CR, SCOPE_FIRST, SCOPE_FULL, SCOPE_SECOND, dirac
from .seeds import SeedFunction
from .selfcheck import run_all

_SCOPE_ALIASES = {
    "first-group": SCOPE_FIRST,
    "second-group": SCOPE_SECOND,
    "full": SCOPE_FULL,
    "cauchy-riemann": SCOPE_CR,
}


def _rng(args_seed: int | None = None) -> random.Random:
    env = os.environ.get("FUETER_SEED")
    if args_seed is not None:
        seed = args_seed
    elif env is not None:
        seed = int(env)
    else:
        seed = random.SystemRandom().randint(0, 2**31 - 1)
    print(f"# rng-seed: {seed}", file=sys.stderr)
    return random.Random(seed)


def _draw_vector(rng: random.Random, length: int) -> list[Fraction]:
    while True:
        vec = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(length)]
        if any(vec):
            return vec


def _vector(text: str | None, length: int, rng_box: list, what: str) -> list[Fraction] | None:
    if text is None:
        return None
    if text == "random":
        if not rng_box:
            rng_box.append(_rng())
        vec = _draw_vector(rng_box[0], length)
        print(f"# {what} = {','.join(str(c) for c in vec)}", file=sys.stderr)
        return vec
    vec = parse_vector(text)
    if len(vec) != length:
        raise ParseError(f"vector {what} must have {length} components, got {len(vec)}")
    return vec


def _print_expression(expr, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(expression_json_object(expr), separators=(",", ":")))
    else:
        print(format_expression(expr, fmt))


def _cmd_apply(args) -> int:
    frame = AxisFrame(args.p, args.q)
    rng_box: list = []
    vectors = {}
    t = _vector(args.t, frame.p, rng_box, "t")
    s = _vector(args.s, frame.q, rng_box, "s")
    if t is not None:
        vectors["t"] = t
    if s is not None:
        vectors["s"] = s
    seed = SeedFunction.create(parse_seed(args.seed))
    hk = parse_expression(args.Hk, frame, vectors)
    hl = parse_expression(args.Hl, frame, vectors)
    mu = None if args.mu == "auto" else int(args.mu)
    out = apply_map(seed, hk, hl, frame, args.variant, mu=mu)
    _print_expression(out, args.format)
    return 0


def _cmd_check_monogenic(args) -> int:
    frame = AxisFrame(args.p, args.q, scalar_axis=args.scalar_axis)
    rng_box: list = []
    vectors = {}
    t = _vector(args.t, frame.p, rng_box, "t")
    s = _vector(args.s, frame.q, rng_box, "s")
    if t is not None:
        vectors["t"] = t
    if s is not None:
        vectors["s"] = s
    expr = parse_expression(args.expr, frame, vectors)
    scope = _SCOPE_ALIASES[args.scope]
    print("true" if dirac(expr, scope).is_zero() else "false")
    return 0


def _cmd_fischer(args) -> int:
    frame = AxisFrame(args.p, 0)
    rng_box: list = []
    vectors = {}
    t = _vector(args.t, frame.p, rng_box, "t")
    if t is not None:
        vectors["t"] = t
    h = parse_expression(args.H, frame, vectors)
    layers = fischer_decompose(h, "x")
    for layer in layers:
        print(f"n={layer.n}: {format_expression(layer.component, args.format)}")
    return 0


def _cmd_lemma5(args) -> int:
    h = parse_bivariate(args.h)
    params = BiaxialParams(args.k, args.l, args.p, args.q)
    out = laplacian_expansion(h, args.n, args.s1, args.s2, params)
    print(format_bivariate(out, args.format))
    return 0


def _cmd_examples(args) -> int:
    rng_box: list = []
    fixed_t = _vector(args.t, 3, rng_box, "t")
    fixed_s = _vector(args.s, 3, rng_box, "s")
    if not rng_box:
        rng_box.append(_rng())
    rng = rng_box[0]
    passed = 0
    for case in REFERENCE_CASES:
        ok = True
        scale = None
        last = None
        detail = None
        for _ in range(args.trials):
            t = fixed_t or _draw_vector(rng, 3)
            s = fixed_s or _draw_vector(rng, 3)
            try:
                result = run_case(case, t, s)
            except Exception as exc:
                ok = False
                detail = str(exc)
                break
            last = result
            scale = result.scale_found
            if not result.passed:
                ok = False
                break
        if ok:
            passed += 1
            print(f"example {case.index} {case.name}: PASS (engine = {scale} * formula)")
        else:
            print(f"example {case.index} {case.name}: FAIL "
                  f"({detail or f'proportionality {scale}, expected {case.scale}'})")
            if last is not None:
                print(f"  engine:  {format_expression(last.engine_output)}")
                print(f"  formula: {format_expression(last.reference_output)}")
    print(f"{passed}/{len(REFERENCE_CASES)} PASS")
    return 0 if passed == len(REFERENCE_CASES) else 3


def _cmd_selftest(args) -> int:
    results = run_all(args.seed)
    ok = True
    for name, passed, detail in results:
        print(f"{'PASS' if passed else 'FAIL'} {name} ({detail})")
        ok = ok and passed
    print(f"{sum(1 for _, p, _ in results if p)}/{len(results)} suites passed")
    return 0 if ok else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fueterkit",
        description="Exact construction and verification of monogenic functions over biaxial frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="compute a Fueter map value")
    p_apply.add_argument("--p", type=int, required=True)
    p_apply.add_argument("--q", type=int, required=True)
    p_apply.add_argument("--variant", choices=["plus", "minus"], required=True)
    p_apply.add_argument("--mu", default="auto", help="annihilation order: auto or a nonnegative integer")
    p_apply.add_argument("--seed", required=True, help="seed polynomial, e.g. 'zbar^8' or '3/2*zbar^5 - i*zbar^3'")
    p_apply.add_argument("--Hk", required=True, help="first-group homogeneous factor expression")
    p_apply.add_argument("--Hl", required=True, help="second-group homogeneous factor expression")
    p_apply.add_argument("--t", help="comma-separated rationals or 'random'")
    p_apply.add_argument("--s", help="comma-separated rationals or 'random'")
    p_apply.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p_apply.set_defaults(fn=_cmd_apply)

    p_check = sub.add_parser("check-monogenic", help="test an expression for monogenicity")
    p_check.add_argument("--p", type=int, required=True)
    p_check.add_argument("--q", type=int, required=True)
    p_check.add_argument("--expr", required=True)
    p_check.add_argument("--scope", choices=list(_SCOPE_ALIASES), default="full")
    p_check.add_argument("--scalar-axis", action="store_true")
    p_check.add_argument("--t")
    p_check.add_argument("--s")
    p_check.set_defaults(fn=_cmd_check_monogenic)

    p_fischer = sub.add_parser("fischer", help="decompose a homogeneous polynomial into monogenic layers")
    p_fischer.add_argument("--p", type=int, required=True)
    p_fischer.add_argument("--H", required=True)
    p_fischer.add_argument("--t")
    p_fischer.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p_fischer.set_defaults(fn=_cmd_fischer)

    p_exp = sub.add_parser("lemma5", help="expand a Laplacian power into radial operator terms")
    p_exp.add_argument("--h", required=True, help="scalar Laurent expression in r and rho")
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--s1", type=int, choices=[0, 1], required=True)
    p_exp.add_argument("--s2", type=int, choices=[0, 1], required=True)
    p_exp.add_argument("--k", type=int, required=True)
    p_exp.add_argument("--l", type=int, required=True)
    p_exp.add_argument("--p", type=int, default=3)
    p_exp.add_argument("--q", type=int, default=3)
    p_exp.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p_exp.set_defaults(fn=_cmd_lemma5)

    p_examples = sub.add_parser("examples", help="run the built-in reference catalog")
    p_examples.add_argument("--trials", type=int, default=1)
    p_examples.add_argument("--t", help="fixed t vector instead of random draws")
    p_examples.add_argument("--s", help="fixed s vector instead of random draws")
    p_examples.set_defaults(fn=_cmd_examples)

    p_self = sub.add_parser("selftest", help="run the randomized invariant suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

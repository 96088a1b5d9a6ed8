"""Command-line front end.

Subcommands: expand | roots | verify | limit | classic | annulus.

Exit codes: 0 success, 2 precondition or argument failure, 3 solver
non-convergence, 4 theorem-verdict violation or oracle mismatch.  The
--explore flag runs the unproven complex-root regime without pass/fail
semantics and therefore never exits 4.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .classic import (
    chebyshev_u,
    cube_term_zero_check,
    fibonacci,
    square_term_sequence,
    square_term_zeros,
    szego_demo,
)
from .errors import OracleMismatch, SolverNonConvergence, ZlocusError
from .figures import RootPanel, render_panels
from .limitset import convergence_report, hausdorff_to_circle, limit_circle, radial_spread
from .rootfind import RootSet, SolverConfig, find_roots, kakeya_annulus, kakeya_signed
from .seqcore import (
    ArithmeticMode,
    QuadraticGF,
    ZPolynomial,
    expand_closed_form,
    expand_recurrence,
)
from .theorems import TheoremCase, classify_case, predicted_radius, verify_disk
from .util import batch_map, coeffs_close, fmt17

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_NONCONVERGENCE = 3
EXIT_VIOLATION = 4


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation options shared by the subcommands."""

    quad: tuple[Fraction, Fraction, Fraction] | None
    m: int | None
    m_list: tuple[int, ...] | None
    m_max: int | None
    fmt: str
    out: str | None
    solver: SolverConfig
    explore: bool
    check: bool

    @property
    def ladder(self) -> list[int]:
        if self.m is not None:
            return [self.m]
        if self.m_list is not None:
            return list(self.m_list)
        return list(range(self.m_max + 1))


def _parse_quad(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--quad expects a,b,c")
    try:
        return tuple(Fraction(p.strip()) for p in parts)  # type: ignore[return-value]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad quadratic coefficients: {exc}")


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list: {exc}")


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number list: {exc}")


def _run_config(args: argparse.Namespace, svg_ok: bool) -> RunConfig:
    chosen = [
        name
        for name, val in (("--m", getattr(args, "m", None)),
                          ("--ms", getattr(args, "ms", None)),
                          ("--m-max", getattr(args, "m_max", None)))
        if val is not None
    ]
    if len(chosen) != 1:
        raise ZlocusError("exactly one of --m / --ms / --m-max is required")
    fmt = getattr(args, "format", "json")
    if fmt == "svg" and not svg_ok:
        raise ZlocusError("svg output only applies to root and limit commands")
    return RunConfig(
        quad=getattr(args, "quad", None),
        m=getattr(args, "m", None),
        m_list=getattr(args, "ms", None),
        m_max=getattr(args, "m_max", None),
        fmt=fmt,
        out=getattr(args, "out", None),
        solver=SolverConfig(
            tol=getattr(args, "tol", 1e-12),
            max_iter=getattr(args, "max_iter", 200),
            seed=getattr(args, "seed", 0),
        ),
        explore=getattr(args, "explore", False),
        check=getattr(args, "check", False),
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _coeff_pairs(poly: ZPolynomial) -> list:
    if poly.mode is ArithmeticMode.EXACT:
        return [[c.numerator, c.denominator] for c in poly.coeffs]
    return [[complex(c).real, complex(c).imag] for c in poly.coeffs]


def _root_csv(solved: list[tuple[int, RootSet]]) -> str:
    lines = ["m,re,im,residual"]
    for m, rs in solved:
        for z, res in zip(rs.roots, rs.residuals):
            lines.append(f"{m},{fmt17(z.real)},{fmt17(z.imag)},{fmt17(res)}")
    return "\n".join(lines) + "\n"


def _solve_ladder(cfg: RunConfig) -> list[tuple[int, RootSet]]:
    q = QuadraticGF.from_coeffs(*cfg.quad)
    top = max(cfg.ladder)
    polys = expand_closed_form(q, top)
    pairs = [(m, polys[m].to_floating()) for m in cfg.ladder if polys[m].degree >= 1]
    solved = batch_map(lambda mp: (mp[0], find_roots(mp[1], cfg.solver)), pairs)
    for m, rs in solved:
        if not rs.converged:
            raise SolverNonConvergence(f"root solve did not converge at m={m}")
    return solved


def cmd_expand(args: argparse.Namespace) -> int:
    cfg = _run_config(args, svg_ok=False)
    q = QuadraticGF.from_coeffs(*cfg.quad)
    top = max(cfg.ladder)
    polys = expand_recurrence(q, top)
    if cfg.check:
        closed = expand_closed_form(q, top)
        for rec, cf in zip(polys, closed):
            if cf.mode is ArithmeticMode.EXACT:
                if rec.coeffs != cf.coeffs:
                    raise OracleMismatch(f"expansions disagree at m={rec.m}")
            elif not coeffs_close(rec.coeffs, cf.coeffs, 1e-10):
                raise OracleMismatch(f"expansions disagree at m={rec.m}")
    # expand always lists the whole ladder 0..top
    doc = [{"m": p.m, "mode": p.mode.value, "coeffs": _coeff_pairs(p)} for p in polys]
    _emit(_json_dump(doc), cfg.out)
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    cfg = _run_config(args, svg_ok=True)
    solved = _solve_ladder(cfg)
    if cfg.fmt == "csv":
        _emit(_root_csv(solved), cfg.out)
    elif cfg.fmt == "json":
        doc = [
            {
                "m": m,
                "roots": [[z.real, z.imag] for z in rs.roots],
                "residuals": list(rs.residuals),
                "iterations": rs.iterations,
                "converged": rs.converged,
            }
            for m, rs in solved
        ]
        _emit(_json_dump(doc), cfg.out)
    else:
        q = QuadraticGF.from_coeffs(*cfg.quad)
        radius = predicted_radius(q) if q.a != 0 else None
        panels = [
            RootPanel(label=f"m={m}", points=rs.roots, circle_radius=radius)
            for m, rs in solved
        ]
        _emit(render_panels(panels), cfg.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _run_config(args, svg_ok=False)
    if cfg.m_max is None:
        raise ZlocusError("verify expects --m-max")
    q = QuadraticGF.from_coeffs(*cfg.quad)
    case = classify_case(q)
    if case in (TheoremCase.INSIDE_CLOSED_DISK, TheoremCase.OUTSIDE_CLOSED_DISK):
        verdicts = verify_disk(q, cfg.m_max, cfg.solver)
        doc = [
            {
                "m": v.m,
                "radius": v.predicted_radius,
                "min_modulus": v.min_modulus,
                "max_modulus": v.max_modulus,
                "satisfied": v.satisfied,
                "margin": v.margin,
            }
            for v in verdicts
        ]
        _emit(_json_dump({"case": case.value, "verdicts": doc}), cfg.out)
        if not all(v.satisfied for v in verdicts):
            print("theorem verdict violated", file=sys.stderr)
            return EXIT_VIOLATION
        return EXIT_OK
    if not cfg.explore:
        raise ZlocusError(
            f"case {case.value} carries no proven verdict; rerun with --explore"
        )
    solved = _solve_ladder(cfg)
    radius = predicted_radius(q)
    doc = [
        {
            "m": m,
            "radius": radius,
            "min_modulus": min(rs.moduli),
            "max_modulus": max(rs.moduli),
        }
        for m, rs in solved
    ]
    _emit(_json_dump({"case": case.value, "explore": doc}), cfg.out)
    return EXIT_OK


def cmd_limit(args: argparse.Namespace) -> int:
    cfg = _run_config(args, svg_ok=True)
    q = QuadraticGF.from_coeffs(*cfg.quad)
    ladder = [m for m in cfg.ladder if m >= 1]  # index 0 is a constant
    explored = False
    try:
        radius = limit_circle(q)
    except ZlocusError:
        if not cfg.explore:
            raise
        radius = predicted_radius(q)
        explored = True
    if cfg.fmt == "svg":
        solved = _solve_ladder(cfg)
        panels = [
            RootPanel(label=f"m={m}", points=rs.roots, circle_radius=radius)
            for m, rs in solved
        ]
        _emit(render_panels(panels), cfg.out)
        return EXIT_OK
    if explored or cfg.explore:
        solved = _solve_ladder(cfg)
        entries = [
            {
                "m": m,
                "hausdorff": hausdorff_to_circle(rs, radius),
                "radial_spread": radial_spread(rs, radius),
            }
            for m, rs in solved
        ]
    else:
        report = convergence_report(q, ladder, cfg.solver)
        entries = [
            {"m": m, "hausdorff": h, "radial_spread": s}
            for m, h, s in zip(report.ms, report.hausdorff, report.radial_spread)
        ]
    _emit(_json_dump({"radius": radius, "entries": entries}), cfg.out)
    return EXIT_OK


def cmd_classic(args: argparse.Namespace) -> int:
    solver = SolverConfig(tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    which = args.which
    if which == "szego":
        if args.n is None:
            raise ZlocusError("classic szego expects --n")
        figures = [szego_demo(n, solver) for n in args.n]
        if args.format == "svg":
            panels = [
                RootPanel(label=f"n={fig.n}", points=fig.roots.roots)
                for fig in figures
            ]
            _emit(render_panels(panels), args.out)
        elif args.format == "csv":
            _emit(_root_csv([(fig.n, fig.roots) for fig in figures]), args.out)
        else:
            doc = [
                {
                    "n": fig.n,
                    "annulus": [fig.annulus.r_min, fig.annulus.r_max],
                    "roots": [[z.real, z.imag] for z in fig.roots.roots],
                }
                for fig in figures
            ]
            _emit(_json_dump(doc), args.out)
        return EXIT_OK
    if args.m_max is None:
        raise ZlocusError(f"classic {which} expects --m-max")
    if which == "chebyshev":
        seq = chebyshev_u(args.m_max)
        doc = [{"m": p.m, "coeffs": _coeff_pairs(p)} for p in seq.polys]
        _emit(_json_dump(doc), args.out)
        return EXIT_OK
    if which == "fibonacci":
        _emit(_json_dump(fibonacci(args.m_max)), args.out)
        return EXIT_OK
    if which == "cube":
        checks = cube_term_zero_check(args.m_max, solver)
        _emit(_json_dump([{"m": m, "bound_ok": ok} for m, ok in enumerate(checks)]), args.out)
        if not all(checks):
            print("zero bound violated", file=sys.stderr)
            return EXIT_VIOLATION
        return EXIT_OK
    # which == "square"
    seq = square_term_sequence(args.m_max)
    doc = []
    for p in seq.polys:
        entry = {"m": p.m, "coeffs": _coeff_pairs(p)}
        if p.degree >= 1:
            entry["zeros"] = square_term_zeros(p.m)
        doc.append(entry)
    _emit(_json_dump(doc), args.out)
    return EXIT_OK


def cmd_annulus(args: argparse.Namespace) -> int:
    coeffs = tuple(complex(v) for v in args.coeffs)
    poly = ZPolynomial(coeffs=coeffs, m=len(coeffs) - 1, mode=ArithmeticMode.FLOATING)
    ann = kakeya_signed(poly) if args.signed else kakeya_annulus(poly)
    _emit(_json_dump({"r_min": ann.r_min, "r_max": ann.r_max}), args.out)
    return EXIT_OK


def _add_solver_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--tol", type=float, default=1e-12, help="solver step tolerance")
    sp.add_argument("--max-iter", type=int, default=200, dest="max_iter")
    sp.add_argument("--seed", type=int, default=0, help="deterministic initial placement")
    sp.add_argument("--out", help="output path (default: stdout)")


def _add_ladder_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--m", type=int, default=None, help="single sequence index")
    sp.add_argument("--ms", type=_parse_int_list, default=None, help="comma-separated indices")
    sp.add_argument("--m-max", type=int, default=None, dest="m_max", help="ladder 0..N")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zlocus",
        description="Expand quadratic-denominator generating functions, solve the"
        " zeros of the generated polynomials, and verify their disk and"
        " limit-circle behaviour.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("expand", help="coefficient listing up to an index")
    sp.add_argument("--quad", type=_parse_quad, required=True)
    _add_ladder_flags(sp)
    sp.add_argument("--check", action="store_true", help="cross-check both expansions")
    sp.add_argument("--format", choices=["json"], default="json")
    _add_solver_flags(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("roots", help="solve zeros of expanded members")
    sp.add_argument("--quad", type=_parse_quad, required=True)
    _add_ladder_flags(sp)
    sp.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    sp.add_argument("--explore", action="store_true")
    _add_solver_flags(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("verify", help="disk-containment verdicts")
    sp.add_argument("--quad", type=_parse_quad, required=True)
    _add_ladder_flags(sp)
    sp.add_argument("--format", choices=["json"], default="json")
    sp.add_argument("--explore", action="store_true")
    _add_solver_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("limit", help="convergence ladder toward the limit circle")
    sp.add_argument("--quad", type=_parse_quad, required=True)
    _add_ladder_flags(sp)
    sp.add_argument("--format", choices=["json", "svg"], default="json")
    sp.add_argument("--explore", action="store_true")
    _add_solver_flags(sp)
    sp.set_defaults(func=cmd_limit)

    sp = sub.add_parser("classic", help="classical sequences and figures")
    sp.add_argument("which", choices=["szego", "chebyshev", "fibonacci", "square", "cube"])
    sp.add_argument("--n", type=_parse_int_list, default=None, help="section degrees")
    sp.add_argument("--m-max", type=int, default=None, dest="m_max")
    sp.add_argument("--format", choices=["csv", "json", "svg"], default="json")
    _add_solver_flags(sp)
    sp.set_defaults(func=cmd_classic)

    sp = sub.add_parser("annulus", help="positive/alternating coefficient root bound")
    sp.add_argument("--coeffs", type=_parse_float_list, required=True)
    sp.add_argument("--signed", action="store_true", help="allow sign normalization")
    sp.add_argument("--out", help="output path (default: stdout)")
    sp.set_defaults(func=cmd_annulus)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SolverNonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except OracleMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ZlocusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

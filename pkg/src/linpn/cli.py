"""Command-line front end.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 the input could
not be parsed, 3 the input violates a precondition of the command.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import DegenerateError, DimensionError, PreconditionError, StructureError
from .exactmath import Mat, format_rational, parse_rational
from .gln import (
    GlnSemidirectConfig,
    EXAMPLE_BASIS_LABELS,
    build_gln,
    example_config,
    example_targets,
    to_example_coordinates,
)
from .hamiltonians import (
    DEFAULT_SEED,
    certify_algebra,
    hamiltonians,
    independence_rank,
    involution_certificate,
)
from .io import (
    ParseError,
    algebra_from_json,
    constants_to_json,
    dumps,
    lie_from_json,
    load_json,
    symplectic_from_json,
    symplectic_to_json,
)
from .lsa import AlgebraSpec, derived_lie, jacobi_violations, left_symmetry_violations
from .report import Report, render_text
from .symplectic import Cocycle2, SymplecticLieAlgebra, cocycle_defect, is_unimodular

COMMANDS = ("check-lsa", "check-lie", "derive-lsa", "hamiltonians", "certify", "independence", "example")
DEFAULT_MAX_N = {"independence": 3}
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


@dataclass
class CommandConfig:
    command: str
    input: str | None = None
    output: str | None = None
    max_n: int | None = None
    seed: int = DEFAULT_SEED
    format: str = "json"
    paper_n2: bool = False
    a: Fraction = Fraction(1)
    l: Fraction = Fraction(0)
    n: int | None = None
    M: Any = None
    g: Any = None
    attempts: int = 10

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.max_n is None:
            self.max_n = DEFAULT_MAX_N.get(self.command, 4)
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.format not in ("json", "text"):
            raise ValueError("format must be json or text")


class _Precondition(Exception):
    pass


def _error(kind: str, message: str, code: int) -> tuple[int, dict]:
    return code, {"error": {"kind": kind, "message": message, "exit_code": code}}


# -- input resolution -------------------------------------------------------


def _gln_config(cfg: CommandConfig) -> GlnSemidirectConfig:
    if cfg.paper_n2:
        return example_config(cfg.a, cfg.l)
    if cfg.n is None or cfg.M is None or cfg.g is None:
        raise ParseError("gln-semidirect needs --paper-n2 or all of --n, --M, --g")
    M = json.loads(cfg.M) if isinstance(cfg.M, str) else cfg.M
    g = json.loads(cfg.g) if isinstance(cfg.g, str) else cfg.g
    try:
        return GlnSemidirectConfig(
            cfg.n, Mat.from_rows([[parse_rational(v) for v in r] for r in M]), [parse_rational(v) for v in g]
        )
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad gln-semidirect parameters: {exc}") from None


def _load(cfg: CommandConfig) -> tuple[str, Any]:
    """Returns ``("algebra", AlgebraSpec)``, ``("lie", LieAlgebraSpec)`` or ``("symplectic", (lie, omega))``."""
    if cfg.paper_n2:
        lie, omega = build_gln(example_config(cfg.a, cfg.l))
        return "symplectic", (lie, omega.omega)
    if cfg.input is None:
        raise ParseError("no --input given")
    doc = load_json(cfg.input)
    if isinstance(doc, dict) and "lie" in doc:
        return "symplectic", symplectic_from_json(doc)
    return "algebra", doc


def _symplectic(lie, omega: Mat) -> SymplecticLieAlgebra:
    try:
        return SymplecticLieAlgebra(lie, Cocycle2(omega))
    except (DegenerateError, PreconditionError, StructureError, DimensionError) as exc:
        raise _Precondition(str(exc)) from None


def _algebra_for(cfg: CommandConfig) -> tuple[AlgebraSpec, SymplecticLieAlgebra | None]:
    kind, data = _load(cfg)
    if kind == "symplectic":
        S = _symplectic(*data)
        return S.lsa, S
    return algebra_from_json(data), None


def _example_coords(cfg: CommandConfig, polys):
    return [to_example_coordinates(h, cfg.a) for h in polys] if cfg.paper_n2 else list(polys)


# -- commands ----------------------------------------------------------------


def _check_lsa(cfg: CommandConfig) -> Report:
    kind, data = _load(cfg)
    if kind != "algebra":
        raise ParseError("check-lsa expects an algebra document")
    A = algebra_from_json(data)
    report = Report()
    bad = left_symmetry_violations(A)
    detail = "; ".join(
        f"(i,j,k)=({i},{j},{k})" for (i, j, k), _ in bad[:10]
    ) + (" ..." if len(bad) > 10 else "")
    report.add(
        "left_symmetry",
        max((abs(c) for _, d in bad for c in d), default=Fraction(0)),
        detail,
    )
    jb = jacobi_violations(derived_lie(A))
    report.add(
        "jacobi(derived)",
        max((abs(c) for _, s in jb for c in s), default=Fraction(0)),
        "; ".join(f"(i,j,k)=({i},{j},{k})" for (i, j, k), _ in jb[:10]),
    )
    report.extra["offending_triples"] = [list(t) for t, _ in bad]
    return report


def _check_lie(cfg: CommandConfig) -> Report:
    kind, data = _load(cfg)
    report = Report()
    if kind == "symplectic":
        lie, omega = data
    else:
        lie, omega = lie_from_json(data), None
    jb = jacobi_violations(lie)
    report.add(
        "jacobi",
        max((abs(c) for _, s in jb for c in s), default=Fraction(0)),
        "; ".join(f"(i,j,k)=({i},{j},{k})" for (i, j, k), _ in jb[:10]),
    )
    if omega is not None:
        try:
            report.add("cocycle", cocycle_defect(lie, omega))
        except StructureError as exc:
            raise _Precondition(str(exc)) from None
        try:
            Cocycle2(omega)
            report.add("nondegenerate", 0)
        except DegenerateError as exc:
            report.add("nondegenerate", 1, str(exc))
    report.extra["unimodular"] = is_unimodular(lie)
    return report


def _derive_lsa(cfg: CommandConfig) -> dict:
    kind, data = _load(cfg)
    if kind != "symplectic":
        raise ParseError('derive-lsa expects a symplectic document {"lie", "omega"}')
    return constants_to_json(_symplectic(*data).lsa)


def _hamiltonians(cfg: CommandConfig) -> Report:
    A, _ = _algebra_for(cfg)
    report = Report()
    report.hamiltonians = _example_coords(cfg, hamiltonians(A, cfg.max_n))
    if cfg.paper_n2:
        report.extra["coordinates"] = "example"
    return report


def _certify(cfg: CommandConfig) -> Report:
    A, S = _algebra_for(cfg)
    if S is None:
        report = certify_algebra(A, cfg.max_n)
    else:
        if cfg.max_n < 2:
            raise _Precondition("certify needs --max-n >= 2")
        report = involution_certificate(S, cfg.max_n)
        report.extra["unimodular"] = is_unimodular(S.lie)
    if cfg.paper_n2:
        report.hamiltonians = _example_coords(cfg, report.hamiltonians)
        report.extra["coordinates"] = "example"
        report.extra["basis"] = list(EXAMPLE_BASIS_LABELS)
        for n, (h, t) in enumerate(zip(report.hamiltonians, example_targets(cfg.a)), start=1):
            report.add(f"example_H{n}", (h - t).max_abs_coeff(), "matches reference polynomial" if h == t else "")
        k = min(3, len(report.hamiltonians))
        rank, witness = independence_rank(report.hamiltonians[:k], cfg.seed, cfg.attempts)
        report.add(f"independence(H1..H{k})", k - rank, f"rank {rank}")
        if witness is not None:
            report.witness_points = [list(witness)]
    return report


def _independence(cfg: CommandConfig) -> Report:
    A, _ = _algebra_for(cfg)
    polys = _example_coords(cfg, hamiltonians(A, cfg.max_n))
    rank, witness = independence_rank(polys, cfg.seed, cfg.attempts)
    report = Report()
    report.add(f"independence(H1..H{cfg.max_n})", len(polys) - rank, f"rank {rank}")
    report.hamiltonians = polys
    if witness is not None:
        report.witness_points = [list(witness)]
    report.extra["rank"] = rank
    report.extra["seed"] = cfg.seed
    return report


def _example(cfg: CommandConfig) -> dict:
    gc = _gln_config(cfg)
    try:
        lie, omega = build_gln(gc)
    except DegenerateError as exc:
        raise _Precondition(str(exc)) from None
    doc = symplectic_to_json(lie, omega.omega)
    doc["generator"] = {
        "name": "gln-semidirect",
        "n": gc.n,
        "M": [[format_rational(v) for v in gc.M.row(i)] for i in range(gc.n)],
        "g": [format_rational(v) for v in gc.g],
    }
    return doc


_HANDLERS = {
    "check-lsa": _check_lsa,
    "check-lie": _check_lie,
    "derive-lsa": _derive_lsa,
    "hamiltonians": _hamiltonians,
    "certify": _certify,
    "independence": _independence,
    "example": _example,
}


def run(cfg: CommandConfig) -> tuple[int, dict]:
    """Execute one command; returns ``(exit status, JSON document)``."""
    try:
        result = _HANDLERS[cfg.command](cfg)
    except (ParseError, json.JSONDecodeError, OSError) as exc:
        return _error("parse", str(exc), EXIT_PARSE)
    except StructureError as exc:
        return _error("parse", str(exc), EXIT_PARSE)
    except (_Precondition, PreconditionError, DegenerateError) as exc:
        return _error("precondition", str(exc), EXIT_PRECONDITION)
    if isinstance(result, Report):
        return (EXIT_OK if result.passed else EXIT_FAIL), result.to_json()
    return EXIT_OK, result


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="linpn",
        description="Linear Poisson-Nijenhuis structures on left-symmetric and symplectic Lie algebras.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", help="algebra or symplectic JSON document")
    p.add_argument("--output", help="write the result here instead of stdout")
    p.add_argument("--max-n", "--maxN", type=int, dest="max_n", help="highest trace polynomial H_n")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p.add_argument("--attempts", type=int, default=10, help="random points for rank checks")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--paper-n2", action="store_true", help="use the gl(2) x| R^2 example")
    p.add_argument("--a", type=parse_rational, default=Fraction(1))
    p.add_argument("--l", type=parse_rational, default=Fraction(0))
    p.add_argument("--n", type=int, help="gln-semidirect matrix size")
    p.add_argument("--M", help='gln-semidirect matrix as JSON, e.g. [["0","1"],["0","0"]]')
    p.add_argument("--g", help='gln-semidirect covector as JSON, e.g. ["1","0"]')
    p.add_argument("--generator", default="gln-semidirect", choices=("gln-semidirect",))
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = CommandConfig(
            command=args.command,
            input=args.input,
            output=args.output,
            max_n=args.max_n,
            seed=args.seed,
            format=args.format,
            paper_n2=args.paper_n2,
            a=args.a,
            l=args.l,
            n=args.n,
            M=args.M,
            g=args.g,
            attempts=args.attempts,
        )
    except ValueError as exc:
        code, doc = _error("parse", str(exc), EXIT_PARSE)
    else:
        code, doc = run(cfg)
    if "error" in doc:
        print(f"linpn: {doc['error']['message']}", file=sys.stderr)
    text = render_text(doc) if args.format == "text" and "checks" in doc else dumps(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

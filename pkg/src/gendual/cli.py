"""Command-line front end.

Subcommands: conjugate, to-lagrangian, to-rockafellian, check-couple,
weak-duality, fuzz.  Exit codes: 0 success (check-couple: the pair is a
couple), 1 check-couple verdict "not a couple" or fuzz failures, 2 parse or
argument errors, 3 domain/label mismatches, 4 required table missing from
the problem file, 5 internal consistency alarm (equivalent audit items
disagreed, which indicates a bug in this package, not in the input).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import (
    DomainMismatchError,
    MissingTableError,
    ProblemFormatError,
    UnknownLabelError,
)
from .extreal import DEFAULT_TOL, ExtReal, parse_extreal, render_extreal
from .spaces import SetFunction
from .conjugacy import conjugate, reverse_conjugate
from .duality import lagrangian_of, rockafellian_of, weak_duality_report
from .couple import DEFAULT_DELTAS, audit
from .problems import (
    Problem,
    extreal_to_jsonable,
    load_problem,
    save_problem,
)
from .fuzz import DEFAULT_GRID, DEFAULT_INF_PROB, run_fuzz

EXIT_OK = 0
EXIT_NOT_COUPLE = 1
EXIT_FORMAT = 2
EXIT_DOMAIN = 3
EXIT_MISSING_TABLE = 4
EXIT_INTERNAL_ALARM = 5

FORMATS = ("text", "csv", "structured")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _grid(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO:HI, e.g. -10:10") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("grid low end exceeds high end")
    return lo, hi


def _deltas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated numbers") from None
    if not values or any(d <= 0.0 for d in values):
        raise argparse.ArgumentTypeError("deltas must be positive")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gendual",
        description=(
            "Generalized conjugate duality on finite sets: conjugates, "
            "Lagrangian/Rockafellian transforms, couple audits, weak duality."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=False):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="tolerance for finite comparisons (default 1e-9)")
        p.add_argument("--format", choices=FORMATS, default="text",
                       help="output rendering (default text)")
        if output:
            p.add_argument("--output", help="also write the result as a problem file")

    p = sub.add_parser("conjugate", help="conjugate a function through the coupling")
    p.add_argument("problem", help="problem file providing the sets and coupling")
    p.add_argument("--side", choices=("primal", "dual"), default="primal",
                   help="primal: f over X -> f^c over Y; dual: g over Y -> g^c' over X")
    p.add_argument("--function", required=True,
                   help="comma-separated values (inf/-inf allowed) or a JSON array file")
    common(p)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("to-lagrangian", help="Lagrangian of the file's Rockafellian")
    p.add_argument("problem")
    common(p, output=True)
    p.set_defaults(func=cmd_to_lagrangian)

    p = sub.add_parser("to-rockafellian", help="Rockafellian of the file's Lagrangian")
    p.add_argument("problem")
    common(p, output=True)
    p.set_defaults(func=cmd_to_rockafellian)

    p = sub.add_parser("check-couple",
                       help="audit a (Lagrangian, Rockafellian) pair")
    p.add_argument("problem_r", help="file with the Rockafellian (or both tables)")
    p.add_argument("problem_l", nargs="?",
                   help="file with the Lagrangian; omit if the first file has both")
    p.add_argument("--deltas", type=_deltas,
                   default=tuple(DEFAULT_DELTAS),
                   help="probe decrements/increments (default 0.001,1.0)")
    common(p)
    p.set_defaults(func=cmd_check_couple)

    p = sub.add_parser("weak-duality", help="primal vs dual value at a base point")
    p.add_argument("problem")
    p.add_argument("--base-point",
                   help="label in X (default: the file's base_point, else the first label)")
    common(p)
    p.set_defaults(func=cmd_weak_duality)

    p = sub.add_parser("fuzz", help="run the randomized invariant suite")
    p.add_argument("--count", type=_positive_int, default=1000)
    p.add_argument("--max-set-size", type=_positive_int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--grid", type=_grid, default=DEFAULT_GRID,
                   help="integer value grid LO:HI (default -10:10)")
    p.add_argument("--inf-prob", type=float, default=DEFAULT_INF_PROB,
                   help="probability of each infinity per entry (default 0.1)")
    p.add_argument("--output", default=".",
                   help="directory for reproduction files (default .)")
    common(p)
    p.set_defaults(func=cmd_fuzz)

    return parser


# ---------------------------------------------------------------------------
# rendering helpers

def _render_function(labels, values, fmt: str) -> str:
    rendered = [render_extreal(v) for v in values]
    if fmt == "csv":
        lines = ["label,value"]
        lines += [f"{lab},{val}" for lab, val in zip(labels, rendered)]
        return "\n".join(lines) + "\n"
    if fmt == "structured":
        payload = {"labels": list(labels), "values": [extreal_to_jsonable(v) for v in values]}
        return json.dumps(payload, indent=2) + "\n"
    w_lab = max(len(lab) for lab in labels)
    w_val = max(len(v) for v in rendered)
    return "".join(
        f"{lab:<{w_lab}}  {val:>{w_val}}\n" for lab, val in zip(labels, rendered)
    )


def _render_matrix(row_labels, col_labels, rows, fmt: str) -> str:
    rendered = [[render_extreal(v) for v in row] for row in rows]
    if fmt == "csv":
        lines = ["," + ",".join(col_labels)]
        lines += [
            f"{lab}," + ",".join(row) for lab, row in zip(row_labels, rendered)
        ]
        return "\n".join(lines) + "\n"
    if fmt == "structured":
        payload = {
            "row_labels": list(row_labels),
            "col_labels": list(col_labels),
            "entries": [[extreal_to_jsonable(v) for v in row] for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    w_lab = max(len(lab) for lab in row_labels)
    widths = [
        max(len(col_labels[j]), max(len(row[j]) for row in rendered))
        for j in range(len(col_labels))
    ]
    out = [" " * w_lab + "".join(f"  {c:>{w}}" for c, w in zip(col_labels, widths))]
    for lab, row in zip(row_labels, rendered):
        out.append(f"{lab:<{w_lab}}" + "".join(f"  {v:>{w}}" for v, w in zip(row, widths)))
    return "\n".join(out) + "\n"


def _render_pairs(pairs, fmt: str) -> str:
    """pairs: (clean key, display text, machine value) triples."""
    if fmt == "csv":
        return "\n".join(f"{k},{v}" for k, v, _ in pairs) + "\n"
    if fmt == "structured":
        return json.dumps({k: raw for k, _, raw in pairs}, indent=2) + "\n"
    width = max(len(k) for k, _, _ in pairs) + 1
    return "".join(f"{k + ':':<{width}}  {v}\n" for k, v, _ in pairs)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# commands

def _load_function(spec: str, domain, what: str) -> SetFunction:
    path = Path(spec)
    if path.is_file():
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ProblemFormatError(
                f"{spec}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
        if not isinstance(raw, list):
            raise ProblemFormatError(f"{spec}: expected a JSON array of entries")
        values = []
        for i, item in enumerate(raw):
            if isinstance(item, str):
                try:
                    values.append(parse_extreal(item))
                except ValueError as exc:
                    raise ProblemFormatError(f"{what} entry {i}: {exc}") from None
            elif isinstance(item, bool) or not isinstance(item, (int, float)):
                raise ProblemFormatError(
                    f"{what} entry {i}: expected a number or 'inf'/'-inf'"
                )
            else:
                values.append(ExtReal(float(item)))
    else:
        values = []
        for i, tok in enumerate(t.strip() for t in spec.split(",")):
            try:
                values.append(parse_extreal(tok))
            except ValueError as exc:
                raise ProblemFormatError(f"{what} entry {i}: {exc}") from None
    if len(values) != len(domain):
        raise DomainMismatchError(
            f"{what} has {len(values)} entries but the set has {len(domain)} labels"
        )
    return SetFunction(domain, values)


def cmd_conjugate(args) -> int:
    problem = load_problem(args.problem, allow_both=True)
    c = problem.coupling
    if args.side == "primal":
        f = _load_function(args.function, c.primal, "function")
        result = conjugate(f, c)
    else:
        g = _load_function(args.function, c.dual, "function")
        result = reverse_conjugate(g, c)
    sys.stdout.write(
        _render_function(result.domain.labels, result.values, args.format)
    )
    return EXIT_OK


def cmd_to_lagrangian(args) -> int:
    problem = load_problem(args.problem)
    r = problem.require_rockafellian()
    lag = lagrangian_of(r, problem.coupling)
    sys.stdout.write(
        _render_matrix(lag.decisions.labels, lag.dual.labels, lag.rows, args.format)
    )
    if args.output:
        save_problem(_derived_problem(problem, lagrangian=lag), args.output)
    return EXIT_OK


def cmd_to_rockafellian(args) -> int:
    problem = load_problem(args.problem)
    lag = problem.require_lagrangian()
    r = rockafellian_of(lag, problem.coupling)
    sys.stdout.write(
        _render_matrix(r.decisions.labels, r.primal.labels, r.rows, args.format)
    )
    if args.output:
        save_problem(_derived_problem(problem, rockafellian=r), args.output)
    return EXIT_OK


def _derived_problem(problem: Problem, rockafellian=None, lagrangian=None) -> Problem:
    return Problem(
        decisions=problem.decisions,
        primal=problem.primal,
        dual=problem.dual,
        coupling=problem.coupling,
        rockafellian=rockafellian,
        lagrangian=lagrangian,
        base_point=problem.base_point,
        comment=problem.comment,
        embedding=problem.embedding,
    )


def cmd_check_couple(args) -> int:
    if args.problem_l is None:
        combined = load_problem(args.problem_r, allow_both=True)
        r = combined.require_rockafellian()
        lag = combined.require_lagrangian()
        c = combined.coupling
    else:
        problem_r = load_problem(args.problem_r, allow_both=True)
        problem_l = load_problem(args.problem_l, allow_both=True)
        r = problem_r.require_rockafellian()
        lag = problem_l.require_lagrangian()
        c = problem_r.coupling
        if (
            problem_l.decisions != problem_r.decisions
            or problem_l.primal != problem_r.primal
            or problem_l.dual != problem_r.dual
        ):
            raise DomainMismatchError("the two problem files index different sets")
        if not problem_l.coupling.isclose(c, args.tol):
            raise DomainMismatchError("the two problem files carry different couplings")

    result = audit(lag, r, c, deltas=args.deltas, tol=args.tol)
    verdict = "couple" if result.is_couple else "not a couple"
    pairs = [
        ("inequality (-L upper-add R >= c)", _yesno(result.item_i_inequality),
         result.item_i_inequality),
        ("minimality probe", _yesno(result.item_i_minimality_probe),
         result.item_i_minimality_probe),
        ("item (ii) transform equations", _yesno(result.item_ii), result.item_ii),
        ("item (iii) conjugate dual pair", _yesno(result.item_iii), result.item_iii),
        ("item (iv) rows of R c-convex", _yesno(result.item_iv), result.item_iv),
        ("item (v) rows of -L c'-convex", _yesno(result.item_v), result.item_v),
        ("items (ii)-(v) agree", _yesno(result.items_agree), result.items_agree),
        ("verdict", verdict, verdict),
    ]
    if args.format == "structured":
        payload = {
            "item_i_inequality": result.item_i_inequality,
            "item_i_minimality_probe": result.item_i_minimality_probe,
            "item_ii": result.item_ii,
            "item_iii": result.item_iii,
            "item_iv": result.item_iv,
            "item_v": result.item_v,
            "items_agree": result.items_agree,
            "is_couple": result.is_couple,
            "witnesses": [
                {"item": w.item, "u": w.u, "x": w.x, "y": w.y,
                 "description": w.description}
                for w in result.witnesses
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(_render_pairs(pairs, args.format))
        for w in result.witnesses:
            sys.stdout.write(f"witness [{w.item}] {w.description}\n")
    if not result.items_agree:
        return EXIT_INTERNAL_ALARM
    return EXIT_OK if result.is_couple else EXIT_NOT_COUPLE


def cmd_weak_duality(args) -> int:
    problem = load_problem(args.problem)
    r = problem.require_rockafellian()
    base = args.base_point or problem.base_point or problem.primal.labels[0]
    report = weak_duality_report(r, problem.coupling, base, tol=args.tol)
    pairs = [
        ("base point", report.base_point, report.base_point),
        ("primal value", render_extreal(report.primal_value),
         extreal_to_jsonable(report.primal_value)),
        ("dual value", render_extreal(report.dual_value),
         extreal_to_jsonable(report.dual_value)),
        ("tight", _yesno(report.tight), report.tight),
        ("gap",
         render_extreal(report.gap) if report.gap is not None else "n/a",
         extreal_to_jsonable(report.gap) if report.gap is not None else None),
    ]
    if args.format == "structured":
        keys = ("base_point", "primal_value", "dual_value", "tight", "gap")
        payload = {k: raw for k, (_, _, raw) in zip(keys, pairs)}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(_render_pairs(pairs, args.format))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if not 0.0 <= args.inf_prob <= 0.4:
        raise ProblemFormatError("--inf-prob must lie in [0, 0.4]")
    started = time.perf_counter()
    report = run_fuzz(
        count=args.count,
        max_set_size=args.max_set_size,
        seed=args.seed,
        grid=args.grid,
        inf_prob=args.inf_prob,
        tol=args.tol,
    )
    elapsed = time.perf_counter() - started
    repro_path = None
    if report.first_failure is not None:
        out_dir = Path(args.output)
        out_dir.mkdir(parents=True, exist_ok=True)
        repro_path = out_dir / f"fuzz-repro-seed{report.seed}.json"
        save_problem(report.first_failure, repro_path)

    if args.format == "structured":
        payload = {
            "count": report.count,
            "max_set_size": report.max_set_size,
            "seed": report.seed,
            "grid": list(report.grid),
            "inf_prob": report.inf_prob,
            "tol": report.tol,
            "failures_by_check": report.failures_by_check,
            "failures": [
                {"instance": i, "check": name, "detail": detail}
                for i, name, detail in report.failures
            ],
            "strict_inequality_instances": report.strict_inequality_instances,
            "passed": report.passed,
            "reproduction_file": str(repro_path) if repro_path else None,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"fuzz count={report.count} max-set-size={report.max_set_size} "
            f"seed={report.seed} grid={report.grid[0]}:{report.grid[1]} "
            f"inf-prob={report.inf_prob} tol={report.tol}"
        ]
        width = max(len(n) for n in report.failures_by_check)
        for name, bad in report.failures_by_check.items():
            lines.append(f"{name:<{width}}  failures={bad}")
        lines.append(
            "instances with a strict transform inequality: "
            f"{report.strict_inequality_instances}"
        )
        for i, name, detail in report.failures[:20]:
            lines.append(f"FAIL instance {i} [{name}]: {detail}")
        if repro_path is not None:
            lines.append(f"seed {report.seed}; reproduction file: {repro_path}")
        lines.append(
            "result: PASS" if report.passed
            else f"result: FAIL ({len(report.failures)} failures)"
        )
        sys.stdout.write("\n".join(lines) + "\n")
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_NOT_COUPLE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (DomainMismatchError, UnknownLabelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except MissingTableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_TABLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

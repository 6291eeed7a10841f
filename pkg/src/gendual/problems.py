"""Problem files: the JSON format consumed and produced by the CLI.

A problem file carries the three label sets, a coupling (either an explicit
table over X x Y or a bilinear embedding of the labels into real vectors),
exactly one of a Rockafellian or a Lagrangian table, and optionally a base
point and a free-text comment.  Infinities are spelled as the strings "inf"
and "-inf"; every other entry must be a plain JSON number.  Serialization is
canonical (fixed key order, two-space indent, floats everywhere), so files
written by this module round-trip byte-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import MissingTableError, ProblemFormatError
from .extreal import NEG_INF, POS_INF, ExtReal, render_extreal
from .spaces import Coupling, FiniteSet, Lagrangian, Rockafellian, bilinear_coupling

__all__ = [
    "Problem",
    "extreal_to_jsonable",
    "load_problem",
    "parse_problem",
    "save_problem",
    "serialize_problem",
]

_TOP_KEYS = (
    "comment",
    "sets",
    "embedding",
    "coupling",
    "rockafellian",
    "lagrangian",
    "base_point",
)


@dataclass(frozen=True)
class Problem:
    """In-memory image of a problem file.

    ``embedding`` preserves the coordinate form when the file used one (the
    coupling is still materialized); exactly one of ``rockafellian`` and
    ``lagrangian`` is set unless the file was loaded as a combined couple
    file.
    """

    decisions: FiniteSet
    primal: FiniteSet
    dual: FiniteSet
    coupling: Coupling
    rockafellian: Rockafellian | None = None
    lagrangian: Lagrangian | None = None
    base_point: str | None = None
    comment: str | None = None
    embedding: dict | None = None

    def require_rockafellian(self) -> Rockafellian:
        if self.rockafellian is None:
            raise MissingTableError("this problem carries no Rockafellian table")
        return self.rockafellian

    def require_lagrangian(self) -> Lagrangian:
        if self.lagrangian is None:
            raise MissingTableError("this problem carries no Lagrangian table")
        return self.lagrangian


def _reject_constant(token: str):
    raise ProblemFormatError(
        f"JSON token {token!r} is not allowed; spell infinities as the "
        "strings \"inf\" / \"-inf\""
    )


def _entry(raw, where: str) -> ExtReal:
    if isinstance(raw, str):
        if raw == "inf":
            return POS_INF
        if raw == "-inf":
            return NEG_INF
        raise ProblemFormatError(
            f"{where}: invalid entry {raw!r} (only numbers or \"inf\"/\"-inf\")"
        )
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ProblemFormatError(
            f"{where}: invalid entry {raw!r} (only numbers or \"inf\"/\"-inf\")"
        )
    try:
        return ExtReal(float(raw))
    except OverflowError:
        raise ProblemFormatError(f"{where}: entry {raw!r} exceeds double range") from None


def _table(raw, name: str, n_rows: int, n_cols: int) -> list[list[ExtReal]]:
    if not isinstance(raw, list) or len(raw) != n_rows:
        raise ProblemFormatError(f"{name}: expected {n_rows} rows")
    rows = []
    for i, raw_row in enumerate(raw):
        if not isinstance(raw_row, list) or len(raw_row) != n_cols:
            raise ProblemFormatError(
                f"{name} row {i}: expected {n_cols} entries"
            )
        rows.append(
            [_entry(v, f"{name} row {i} column {j}") for j, v in enumerate(raw_row)]
        )
    return rows


def _labels(raw, name: str) -> FiniteSet:
    if (
        not isinstance(raw, list)
        or not raw
        or not all(isinstance(s, str) for s in raw)
    ):
        raise ProblemFormatError(f"sets.{name}: expected a nonempty list of strings")
    try:
        return FiniteSet(raw)
    except ValueError as exc:
        raise ProblemFormatError(f"sets.{name}: {exc}") from None


def _points(raw, name: str, expected: int) -> list[tuple[float, ...]]:
    if not isinstance(raw, list) or len(raw) != expected:
        raise ProblemFormatError(
            f"embedding.{name}: expected {expected} points (one per label)"
        )
    points = []
    for i, p in enumerate(raw):
        coords = p if isinstance(p, list) else [p]
        out = []
        for coord in coords:
            if isinstance(coord, bool) or not isinstance(coord, (int, float)):
                raise ProblemFormatError(
                    f"embedding.{name} point {i}: coordinates must be numbers"
                )
            out.append(float(coord))
        if not out:
            raise ProblemFormatError(f"embedding.{name} point {i}: empty point")
        points.append(tuple(out))
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise ProblemFormatError(f"embedding.{name}: mixed point dimensions")
    return points


def parse_problem(
    text: str, source: str = "<string>", allow_both: bool = False
) -> Problem:
    """Parse problem-file text; ``allow_both`` admits combined couple files
    that carry a Rockafellian and a Lagrangian at once."""
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(
            f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise ProblemFormatError(f"{source}: top level must be an object")
    unknown = set(raw) - set(_TOP_KEYS)
    if unknown:
        raise ProblemFormatError(f"{source}: unknown keys {sorted(unknown)}")

    sets = raw.get("sets")
    if not isinstance(sets, dict) or set(sets) != {"U", "X", "Y"}:
        raise ProblemFormatError(f"{source}: 'sets' must hold exactly U, X and Y")
    decisions = _labels(sets["U"], "U")
    primal = _labels(sets["X"], "X")
    dual = _labels(sets["Y"], "Y")

    has_coupling = "coupling" in raw
    has_embedding = "embedding" in raw
    if has_coupling == has_embedding:
        raise ProblemFormatError(
            f"{source}: exactly one of 'coupling' or 'embedding' is required"
        )
    embedding = None
    if has_embedding:
        emb = raw["embedding"]
        if not isinstance(emb, dict) or set(emb) != {"X", "Y"}:
            raise ProblemFormatError(
                f"{source}: 'embedding' must hold exactly X and Y"
            )
        xs = _points(emb["X"], "X", len(primal))
        ys = _points(emb["Y"], "Y", len(dual))
        if len(xs[0]) != len(ys[0]):
            raise ProblemFormatError(
                f"{source}: embedding X and Y point dimensions differ"
            )
        coupling = bilinear_coupling(xs, ys, primal.labels, dual.labels)
        embedding = {"X": [list(p) for p in xs], "Y": [list(p) for p in ys]}
    else:
        coupling = Coupling(
            primal, dual, _table(raw["coupling"], "coupling", len(primal), len(dual))
        )

    has_r = "rockafellian" in raw
    has_l = "lagrangian" in raw
    if not has_r and not has_l:
        raise ProblemFormatError(
            f"{source}: one of 'rockafellian' or 'lagrangian' is required"
        )
    if has_r and has_l and not allow_both:
        raise ProblemFormatError(
            f"{source}: 'rockafellian' and 'lagrangian' are mutually exclusive here"
        )
    rockafellian = None
    lagrangian = None
    if has_r:
        rockafellian = Rockafellian(
            decisions,
            primal,
            _table(raw["rockafellian"], "rockafellian", len(decisions), len(primal)),
        )
    if has_l:
        lagrangian = Lagrangian(
            decisions,
            dual,
            _table(raw["lagrangian"], "lagrangian", len(decisions), len(dual)),
        )

    base_point = raw.get("base_point")
    if base_point is not None:
        if not isinstance(base_point, str) or base_point not in primal:
            raise ProblemFormatError(
                f"{source}: base_point {base_point!r} is not a label of X"
            )
    comment = raw.get("comment")
    if comment is not None and not isinstance(comment, str):
        raise ProblemFormatError(f"{source}: comment must be a string")

    return Problem(
        decisions=decisions,
        primal=primal,
        dual=dual,
        coupling=coupling,
        rockafellian=rockafellian,
        lagrangian=lagrangian,
        base_point=base_point,
        comment=comment,
        embedding=embedding,
    )


def load_problem(path, allow_both: bool = False) -> Problem:
    text = Path(path).read_text(encoding="utf-8")
    return parse_problem(text, source=str(path), allow_both=allow_both)


def extreal_to_jsonable(v: ExtReal):
    """JSON image of one entry: a float, or the strings "inf"/"-inf"."""
    return v.value if v.is_finite else render_extreal(v)


def _table_to_jsonable(table) -> list[list]:
    return [[extreal_to_jsonable(v) for v in row] for row in table.rows]


def problem_to_jsonable(problem: Problem) -> dict:
    out: dict = {}
    if problem.comment is not None:
        out["comment"] = problem.comment
    out["sets"] = {
        "U": list(problem.decisions.labels),
        "X": list(problem.primal.labels),
        "Y": list(problem.dual.labels),
    }
    if problem.embedding is not None:
        out["embedding"] = {
            "X": [list(p) for p in problem.embedding["X"]],
            "Y": [list(p) for p in problem.embedding["Y"]],
        }
    else:
        out["coupling"] = _table_to_jsonable(problem.coupling)
    if problem.rockafellian is not None:
        out["rockafellian"] = _table_to_jsonable(problem.rockafellian)
    if problem.lagrangian is not None:
        out["lagrangian"] = _table_to_jsonable(problem.lagrangian)
    if problem.base_point is not None:
        out["base_point"] = problem.base_point
    return out


def serialize_problem(problem: Problem) -> str:
    """Canonical text form; stable under parse -> serialize round trips."""
    return json.dumps(problem_to_jsonable(problem), indent=2) + "\n"


def save_problem(problem: Problem, path) -> None:
    Path(path).write_text(serialize_problem(problem), encoding="utf-8")

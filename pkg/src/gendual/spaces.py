"""Finite index sets and the function tables built over them.

Everything downstream works on four table shapes: univariate functions on a
finite set (used for both primal- and dual-side functions), couplings over
primal x dual, Rockafellians over decisions x primal, and Lagrangians over
decisions x dual.  Tables are total and immutable after construction, and
domains are compared by label sequence, never coerced.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainMismatchError, UnknownLabelError
from .extreal import DEFAULT_TOL, ExtReal, approx_eq, as_extreal, neg

__all__ = [
    "Coupling",
    "DualFunction",
    "FiniteSet",
    "Lagrangian",
    "PrimalFunction",
    "Rockafellian",
    "SetFunction",
    "bilinear_coupling",
    "partial_lagrangian",
    "partial_rockafellian",
    "pointwise_max",
    "pointwise_min",
    "reverse_coupling",
]


class FiniteSet:
    """Nonempty ordered collection of distinct string labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValueError("a finite set needs at least one label")
        index = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str):
                raise TypeError(f"labels must be strings, got {lab!r}")
            if lab in index:
                raise ValueError(f"duplicate label {lab!r}")
            index[lab] = i
        self.labels = labels
        self._index = index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(
                f"label {label!r} not in set {list(self.labels)}"
            ) from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.labels == other.labels

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"FiniteSet({list(self.labels)!r})"


def _as_set(obj) -> FiniteSet:
    return obj if isinstance(obj, FiniteSet) else FiniteSet(obj)


class SetFunction:
    """Total map from a finite set to extended reals, stored in domain order."""

    __slots__ = ("domain", "values")

    def __init__(self, domain, values: Sequence):
        domain = _as_set(domain)
        values = tuple(as_extreal(v) for v in values)
        if len(values) != len(domain):
            raise ValueError(
                f"expected {len(domain)} values for domain "
                f"{list(domain.labels)}, got {len(values)}"
            )
        self.domain = domain
        self.values = values

    def __call__(self, label: str) -> ExtReal:
        return self.values[self.domain.index(label)]

    def items(self):
        return zip(self.domain.labels, self.values)

    def negated(self) -> "SetFunction":
        """Pointwise negation, same domain."""
        return SetFunction(self.domain, [neg(v) for v in self.values])

    def isclose(self, other: "SetFunction", tol: float = DEFAULT_TOL) -> bool:
        """Same domain, infinities matching exactly, finite entries within tol."""
        if self.domain != other.domain:
            return False
        return all(
            approx_eq(a, b, tol) for a, b in zip(self.values, other.values)
        )

    def __eq__(self, other):
        if not isinstance(other, SetFunction):
            return NotImplemented
        return self.domain == other.domain and self.values == other.values

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.domain, self.values))

    def __repr__(self):
        body = ", ".join(f"{lab}: {v}" for lab, v in self.items())
        return f"{type(self).__name__}({{{body}}})"


# The primal/dual distinction is bookkeeping, not structure; both sides use
# the same table type.
PrimalFunction = SetFunction
DualFunction = SetFunction


def pointwise_min(f: SetFunction, g: SetFunction) -> SetFunction:
    """Entrywise minimum of two functions on the same domain."""
    if f.domain != g.domain:
        raise DomainMismatchError("pointwise_min: domains differ")
    return SetFunction(f.domain, [a if a < b else b for a, b in zip(f.values, g.values)])


def pointwise_max(f: SetFunction, g: SetFunction) -> SetFunction:
    """Entrywise maximum of two functions on the same domain."""
    if f.domain != g.domain:
        raise DomainMismatchError("pointwise_max: domains differ")
    return SetFunction(f.domain, [a if a > b else b for a, b in zip(f.values, g.values)])


class _Table:
    """Shared machinery for the three bivariate tables."""

    __slots__ = ("row_set", "col_set", "rows")

    def __init__(self, row_set, col_set, entries: Sequence[Sequence]):
        row_set = _as_set(row_set)
        col_set = _as_set(col_set)
        rows = tuple(tuple(as_extreal(v) for v in row) for row in entries)
        if len(rows) != len(row_set):
            raise ValueError(
                f"expected {len(row_set)} rows, got {len(rows)}"
            )
        for i, row in enumerate(rows):
            if len(row) != len(col_set):
                raise ValueError(
                    f"row {i} has {len(row)} entries, expected {len(col_set)}"
                )
        self.row_set = row_set
        self.col_set = col_set
        self.rows = rows

    def __call__(self, row_label: str, col_label: str) -> ExtReal:
        return self.rows[self.row_set.index(row_label)][self.col_set.index(col_label)]

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        if type(self) is not type(other):
            return False
        if self.row_set != other.row_set or self.col_set != other.col_set:
            return False
        return all(
            approx_eq(a, b, tol)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (
            self.row_set == other.row_set
            and self.col_set == other.col_set
            and self.rows == other.rows
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((type(self).__name__, self.row_set, self.col_set, self.rows))

    def __repr__(self):
        return (
            f"{type(self).__name__}(rows={list(self.row_set.labels)!r}, "
            f"cols={list(self.col_set.labels)!r})"
        )


class Coupling(_Table):
    """Pairing table c over primal x dual; entries may be +/-inf."""

    def __init__(self, primal, dual, entries):
        super().__init__(primal, dual, entries)

    @property
    def primal(self) -> FiniteSet:
        return self.row_set

    @property
    def dual(self) -> FiniteSet:
        return self.col_set


class Rockafellian(_Table):
    """Bivariate table over decisions x primal: the perturbed objective family."""

    def __init__(self, decisions, primal, entries):
        super().__init__(decisions, primal, entries)

    @property
    def decisions(self) -> FiniteSet:
        return self.row_set

    @property
    def primal(self) -> FiniteSet:
        return self.col_set


class Lagrangian(_Table):
    """Bivariate table over decisions x dual."""

    def __init__(self, decisions, dual, entries):
        super().__init__(decisions, dual, entries)

    @property
    def decisions(self) -> FiniteSet:
        return self.row_set

    @property
    def dual(self) -> FiniteSet:
        return self.col_set


def reverse_coupling(c: Coupling) -> Coupling:
    """Swap the two arguments: c'(y, x) = c(x, y).  Involutive."""
    transposed = list(zip(*c.rows))
    return Coupling(c.dual, c.primal, transposed)


def bilinear_coupling(
    primal_points: Sequence,
    dual_points: Sequence,
    primal_labels: Sequence[str] | None = None,
    dual_labels: Sequence[str] | None = None,
) -> Coupling:
    """Coupling given by dot products of embedded real vectors.

    Points may be scalars (treated as 1-D) or same-length vectors; all
    entries are finite.  Labels default to the rendered coordinates.
    """
    xs = [_as_vector(p) for p in primal_points]
    ys = [_as_vector(p) for p in dual_points]
    if not xs or not ys:
        raise ValueError("bilinear_coupling: point sequences must be nonempty")
    dim = len(xs[0])
    if dim == 0:
        raise ValueError("bilinear_coupling: points must have at least one coordinate")
    for p in xs + ys:
        if len(p) != dim:
            raise DomainMismatchError(
                f"bilinear_coupling: mixed dimensions {len(p)} and {dim}"
            )
    if primal_labels is None:
        primal_labels = [_point_label(p) for p in xs]
    if dual_labels is None:
        dual_labels = [_point_label(p) for p in ys]
    entries = [[sum(a * b for a, b in zip(x, y)) for y in ys] for x in xs]
    return Coupling(FiniteSet(primal_labels), FiniteSet(dual_labels), entries)


def _as_vector(point) -> tuple[float, ...]:
    if isinstance(point, (int, float)) and not isinstance(point, bool):
        return (float(point),)
    return tuple(float(x) for x in point)


def _point_label(point: tuple[float, ...]) -> str:
    return ",".join(repr(x) for x in point)


def partial_rockafellian(r: Rockafellian, decision: str) -> SetFunction:
    """Row of the Rockafellian at a frozen decision: x -> R(u, x)."""
    iu = r.decisions.index(decision)
    return SetFunction(r.primal, r.rows[iu])


def partial_lagrangian(lag: Lagrangian, decision: str) -> SetFunction:
    """Row of the Lagrangian at a frozen decision: y -> L(u, y)."""
    iu = lag.decisions.index(decision)
    return SetFunction(lag.dual, lag.rows[iu])

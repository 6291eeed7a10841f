"""Transforms between Rockafellians and Lagrangians, and weak duality.

A Rockafellian R over decisions x primal embeds a minimization problem into
a perturbed family; its Lagrangian over decisions x dual is

    L(u, y) = inf_x [ R(u, x) upper-add -c(x, y) ]

which row-wise says -L_u = (R_u)^c.  The converse transform rebuilds a
Rockafellian from a Lagrangian,

    R(u, x) = sup_y [ L(u, y) lower-add c(x, y) ]

i.e. R_u = (-L_u)^{c'}.  The perturbation function phi(x) = inf_u R(u, x)
and the dual function psi(y) = inf_u L(u, y) tie the two levels together:
going from R to L one has the exact identity -psi = phi^c, while going from
L to R only the inequality phi >= (-psi)^{c'} survives, because a conjugacy
turns an infimum into a supremum but not vice versa.

The weak-duality report evaluates, at a chosen perturbation point, the primal
value phi(x) against the dual value sup_y [c(x, y) lower-add psi(y)]; the
dual value never exceeds the primal one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatchError
from .extreal import (
    DEFAULT_TOL,
    NEG_INF,
    POS_INF,
    ExtReal,
    approx_eq,
    approx_le,
    low_add,
    neg,
    upp_add,
)
from .spaces import Coupling, Lagrangian, Rockafellian, SetFunction

__all__ = [
    "WeakDualityReport",
    "dual_function",
    "lagrangian_of",
    "perturbation_function",
    "rockafellian_of",
    "weak_duality_report",
]

_NEG, _POS = -1, 1


def lagrangian_of(r: Rockafellian, c: Coupling) -> Lagrangian:
    """Lagrangian of a Rockafellian: L(u,y) = inf_x [R(u,x) upper-add -c(x,y)]."""
    if r.primal != c.primal:
        raise DomainMismatchError(
            "lagrangian_of: Rockafellian primal set differs from the coupling's"
        )
    neg_c = [[neg(v) for v in row] for row in c.rows]
    ny = len(c.dual)
    out_rows = []
    for r_row in r.rows:
        row = []
        for iy in range(ny):
            best = POS_INF
            for ix, rv in enumerate(r_row):
                cand = upp_add(rv, neg_c[ix][iy])
                if cand < best:
                    best = cand
                    if best.kind == _NEG:
                        break
            row.append(best)
        out_rows.append(row)
    return Lagrangian(r.decisions, c.dual, out_rows)


def rockafellian_of(lag: Lagrangian, c: Coupling) -> Rockafellian:
    """Rockafellian of a Lagrangian: R(u,x) = sup_y [L(u,y) lower-add c(x,y)]."""
    if lag.dual != c.dual:
        raise DomainMismatchError(
            "rockafellian_of: Lagrangian dual set differs from the coupling's"
        )
    out_rows = []
    for l_row in lag.rows:
        row = []
        for c_row in c.rows:
            best = NEG_INF
            for iy, lv in enumerate(l_row):
                cand = low_add(lv, c_row[iy])
                if best < cand:
                    best = cand
                    if best.kind == _POS:
                        break
            row.append(best)
        out_rows.append(row)
    return Rockafellian(lag.decisions, c.primal, out_rows)


def perturbation_function(r: Rockafellian) -> SetFunction:
    """phi(x) = inf over decisions of R(u, x)."""
    return _column_minima(r.rows, r.primal)


def dual_function(lag: Lagrangian) -> SetFunction:
    """psi(y) = inf over decisions of L(u, y)."""
    return _column_minima(lag.rows, lag.dual)


def _column_minima(rows, col_set) -> SetFunction:
    out = list(rows[0])
    for row in rows[1:]:
        for j, v in enumerate(row):
            if v < out[j]:
                out[j] = v
    return SetFunction(col_set, out)


@dataclass(frozen=True)
class WeakDualityReport:
    """Primal vs dual value of a Rockafellian at one perturbation point.

    ``gap`` is present only when both values are finite, in which case it is
    their nonnegative difference; with an infinite value on either side the
    two values and the tightness flag carry all the information.
    """

    base_point: str
    primal_value: ExtReal
    dual_value: ExtReal
    tight: bool
    gap: ExtReal | None


def weak_duality_report(
    r: Rockafellian,
    c: Coupling,
    base_point: str,
    tol: float = DEFAULT_TOL,
) -> WeakDualityReport:
    """Evaluate weak duality at ``base_point``.

    primal = phi(base_point); dual = sup_y [c(base_point, y) lower-add psi(y)].
    The dual value can never exceed the primal one; a violation would mean a
    broken arithmetic kernel and raises instead of reporting.
    """
    if r.primal != c.primal:
        raise DomainMismatchError(
            "weak_duality_report: Rockafellian primal set differs from the coupling's"
        )
    ix = c.primal.index(base_point)
    phi = perturbation_function(r)
    psi = dual_function(lagrangian_of(r, c))
    c_row = c.rows[ix]
    dual = NEG_INF
    for iy, pv in enumerate(psi.values):
        cand = low_add(c_row[iy], pv)
        if dual < cand:
            dual = cand
    primal = phi.values[ix]
    if not approx_le(dual, primal, tol):
        raise ArithmeticError(
            f"weak duality violated at {base_point!r}: dual {dual} > primal {primal}"
        )
    tight = approx_eq(dual, primal, tol)
    gap = None
    if primal.is_finite and dual.is_finite:
        gap = ExtReal(max(primal.value - dual.value, 0.0))
    return WeakDualityReport(
        base_point=base_point,
        primal_value=primal,
        dual_value=dual,
        tight=tight,
        gap=gap,
    )

"""Fenchel-Moreau conjugates for an arbitrary coupling, by enumeration.

For a coupling c over X x Y, the conjugate of f: X -> [-inf,+inf] is

    f^c(y) = sup over x of  c(x,y) (lower-add) -f(x)

and the reverse conjugate of g: Y -> [-inf,+inf] swaps the roles of the two
sides through the reversed coupling.  Biconjugation composes the two and
yields the largest c-convex function below the input; a function equal to
its biconjugate is called c-convex (respectively c'-convex on the dual
side).  All suprema are direct enumerations over the finite sets.
"""

from __future__ import annotations

from .errors import DomainMismatchError
from .extreal import DEFAULT_TOL, NEG_INF, low_add, neg, upp_add
from .spaces import Coupling, SetFunction

__all__ = [
    "biconjugate",
    "conjugate",
    "is_c_convex",
    "is_cprime_convex",
    "reverse_biconjugate",
    "reverse_conjugate",
    "young_check",
]

_POS = 1


def conjugate(f: SetFunction, c: Coupling) -> SetFunction:
    """f^c(y) = sup_x [c(x,y) lower-add -f(x)], a function on the dual set."""
    if f.domain != c.primal:
        raise DomainMismatchError(
            "conjugate: function domain differs from the coupling's primal set"
        )
    neg_f = [neg(v) for v in f.values]
    rows = c.rows
    out = []
    for iy in range(len(c.dual)):
        best = NEG_INF
        for ix, nf in enumerate(neg_f):
            cand = low_add(rows[ix][iy], nf)
            if best < cand:
                best = cand
                if best.kind == _POS:
                    break
        out.append(best)
    return SetFunction(c.dual, out)


def reverse_conjugate(g: SetFunction, c: Coupling) -> SetFunction:
    """g^{c'}(x) = sup_y [c(x,y) lower-add -g(y)], a function on the primal set."""
    if g.domain != c.dual:
        raise DomainMismatchError(
            "reverse_conjugate: function domain differs from the coupling's dual set"
        )
    neg_g = [neg(v) for v in g.values]
    out = []
    for row in c.rows:
        best = NEG_INF
        for iy, ng in enumerate(neg_g):
            cand = low_add(row[iy], ng)
            if best < cand:
                best = cand
                if best.kind == _POS:
                    break
        out.append(best)
    return SetFunction(c.primal, out)


def biconjugate(f: SetFunction, c: Coupling) -> SetFunction:
    """f^{cc'} = (f^c)^{c'}; never exceeds f anywhere."""
    return reverse_conjugate(conjugate(f, c), c)


def reverse_biconjugate(g: SetFunction, c: Coupling) -> SetFunction:
    """g^{c'c} = (g^{c'})^c; never exceeds g anywhere."""
    return conjugate(reverse_conjugate(g, c), c)


def is_c_convex(f: SetFunction, c: Coupling, tol: float = DEFAULT_TOL) -> bool:
    """True iff f equals its biconjugate (infinities exact, finites within tol)."""
    return biconjugate(f, c).isclose(f, tol)


def is_cprime_convex(g: SetFunction, c: Coupling, tol: float = DEFAULT_TOL) -> bool:
    """Dual-side convexity test: g equals its reverse biconjugate."""
    return reverse_biconjugate(g, c).isclose(g, tol)


def young_check(f: SetFunction, c: Coupling) -> bool:
    """Generalized Young inequality: f(x) upper-add f^c(y) >= c(x,y) for all
    pairs.  Holds for every input; exposed as a self-test of the sign and
    infinity conventions."""
    fc = conjugate(f, c)
    for ix, fx in enumerate(f.values):
        row = c.rows[ix]
        for iy, gy in enumerate(fc.values):
            if upp_add(fx, gy) < row[iy]:
                return False
    return True

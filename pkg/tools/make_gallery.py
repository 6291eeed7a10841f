#!/usr/bin/env python3
"""Regenerate the problem-file gallery under problems/ in canonical form."""

import math
from pathlib import Path

from gendual import Coupling, FiniteSet, Lagrangian, Rockafellian, bilinear_coupling
from gendual.problems import Problem, save_problem

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "problems"


def main() -> None:
    OUT.mkdir(exist_ok=True)

    decisions = FiniteSet(["u0", "u1"])
    primal = FiniteSet(["x0", "x1"])
    dual = FiniteSet(["y0", "y1"])
    coupling = Coupling(primal, dual, [[0.0, 0.0], [1.0, 2.0]])

    save_problem(
        Problem(
            decisions=decisions, primal=primal, dual=dual, coupling=coupling,
            rockafellian=Rockafellian(
                decisions, primal, [[5.0, 3.0], [0.0, math.inf]]
            ),
            base_point="x0",
            comment="E1: 2x2x2 instance with one +inf entry; not row-convex at u0",
        ),
        OUT / "e1.json",
    )

    lagrangian = Lagrangian(decisions, dual, [[2.0, 1.0], [0.0, 0.0]])
    save_problem(
        Problem(
            decisions=decisions, primal=primal, dual=dual, coupling=coupling,
            lagrangian=lagrangian,
            comment="E1 Lagrangian: the inf-transform of e1.json",
        ),
        OUT / "e1_lagrangian.json",
    )

    save_problem(
        Problem(
            decisions=decisions, primal=primal, dual=dual, coupling=coupling,
            rockafellian=Rockafellian(decisions, primal, [[2.0, 3.0], [0.0, 2.0]]),
            lagrangian=lagrangian,
            comment="E1 couple: the canonical couple built from e1.json",
        ),
        OUT / "e1_couple.json",
    )

    grid = [float(k) for k in range(-3, 4)]
    labels = [str(k) for k in range(-3, 4)]
    fen_primal = FiniteSet(labels)
    fen_dual = FiniteSet(labels)
    save_problem(
        Problem(
            decisions=FiniteSet(["u0"]),
            primal=fen_primal,
            dual=fen_dual,
            coupling=bilinear_coupling(grid, grid, labels, labels),
            rockafellian=Rockafellian(
                FiniteSet(["u0"]), fen_primal, [[k * k / 2.0 for k in grid]]
            ),
            base_point="0",
            comment="bilinear pairing on the integer grid -3..3 with f(x) = x^2/2",
            embedding={"X": [[k] for k in grid], "Y": [[k] for k in grid]},
        ),
        OUT / "fenchel_quadratic.json",
    )

    spike_primal = FiniteSet(["0", "1", "2"])
    spike_dual = FiniteSet(["-1", "0", "1"])
    save_problem(
        Problem(
            decisions=FiniteSet(["u0"]),
            primal=spike_primal,
            dual=spike_dual,
            coupling=bilinear_coupling(
                [0.0, 1.0, 2.0], [-1.0, 0.0, 1.0],
                spike_primal.labels, spike_dual.labels,
            ),
            rockafellian=Rockafellian(
                FiniteSet(["u0"]), spike_primal, [[0.0, 10.0, 0.0]]
            ),
            comment="spike instance {0, 10, 0}: biconjugation flattens the middle",
            embedding={"X": [[0.0], [1.0], [2.0]], "Y": [[-1.0], [0.0], [1.0]]},
        ),
        OUT / "spike.json",
    )


if __name__ == "__main__":
    main()

"""Randomized exercise of every identity the library is built on.

Instances draw small label sets and tables whose entries come from an
integer grid plus both infinities; small integers make sup/inf ties common
and keep every comparison exact, so any reported failure is a genuine bug
rather than float noise.  Each instance runs the conjugacy laws, both
transform propositions, weak duality at every base point, and the couple
theorem (a constructed couple must pass all items; a single-entry
perturbation of it must keep items (ii) through (v) in agreement).

The transform modules are referenced through their module objects so a test
can swap a deliberately broken operation in and watch the harness catch it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import conjugacy, couple, duality
from .extreal import DEFAULT_TOL, NEG_INF, POS_INF, ExtReal, approx_eq, approx_le
from .problems import Problem
from .spaces import (
    Coupling,
    FiniteSet,
    Lagrangian,
    Rockafellian,
    SetFunction,
    partial_lagrangian,
    partial_rockafellian,
    pointwise_max,
    pointwise_min,
)

__all__ = [
    "CHECK_NAMES",
    "DEFAULT_GRID",
    "DEFAULT_INF_PROB",
    "FuzzInstance",
    "FuzzReport",
    "check_conjugacy_laws",
    "check_couple_theorem",
    "check_roundtrips",
    "check_transform_identity",
    "check_transform_inequality",
    "check_weak_duality",
    "random_extreal",
    "random_instance",
    "run_fuzz",
]

DEFAULT_GRID = (-10, 10)
DEFAULT_INF_PROB = 0.1

CHECK_NAMES = (
    "conjugacy",
    "transform_identity",
    "transform_inequality",
    "roundtrips",
    "weak_duality",
    "couple_theorem",
)


@dataclass(frozen=True)
class FuzzInstance:
    """One random instance: coupling, tables, and two spare functions."""

    index: int
    coupling: Coupling
    rockafellian: Rockafellian
    lagrangian: Lagrangian
    extra_primal: SetFunction
    extra_dual: SetFunction


def random_extreal(
    rng: random.Random,
    grid: tuple[int, int] = DEFAULT_GRID,
    inf_prob: float = DEFAULT_INF_PROB,
) -> ExtReal:
    roll = rng.random()
    if roll < inf_prob:
        return NEG_INF
    if roll < 2.0 * inf_prob:
        return POS_INF
    return ExtReal(float(rng.randint(grid[0], grid[1])))


def _random_rows(rng, n, m, grid, inf_prob):
    return [
        [random_extreal(rng, grid, inf_prob) for _ in range(m)] for _ in range(n)
    ]


def random_instance(
    rng: random.Random,
    index: int = 0,
    max_set_size: int = 5,
    grid: tuple[int, int] = DEFAULT_GRID,
    inf_prob: float = DEFAULT_INF_PROB,
) -> FuzzInstance:
    nu = rng.randint(1, max_set_size)
    nx = rng.randint(1, max_set_size)
    ny = rng.randint(1, max_set_size)
    decisions = FiniteSet([f"u{i}" for i in range(nu)])
    primal = FiniteSet([f"x{i}" for i in range(nx)])
    dual = FiniteSet([f"y{i}" for i in range(ny)])
    return FuzzInstance(
        index=index,
        coupling=Coupling(primal, dual, _random_rows(rng, nx, ny, grid, inf_prob)),
        rockafellian=Rockafellian(
            decisions, primal, _random_rows(rng, nu, nx, grid, inf_prob)
        ),
        lagrangian=Lagrangian(
            decisions, dual, _random_rows(rng, nu, ny, grid, inf_prob)
        ),
        extra_primal=SetFunction(
            primal, [random_extreal(rng, grid, inf_prob) for _ in range(nx)]
        ),
        extra_dual=SetFunction(
            dual, [random_extreal(rng, grid, inf_prob) for _ in range(ny)]
        ),
    )


def _le_all(f: SetFunction, g: SetFunction, tol: float) -> bool:
    return all(approx_le(a, b, tol) for a, b in zip(f.values, g.values))


def check_conjugacy_laws(inst: FuzzInstance, tol: float = DEFAULT_TOL) -> list[str]:
    """Antitonicity, biconjugate bounds, triple-conjugate identity,
    idempotence, the inf-to-sup law, and the Young inequality."""
    fails = []
    c = inst.coupling
    f = inst.extra_primal
    row0 = partial_rockafellian(inst.rockafellian, inst.rockafellian.decisions.labels[0])

    f_c = conjugacy.conjugate(f, c)
    m = pointwise_min(f, row0)
    m_c = conjugacy.conjugate(m, c)
    if not _le_all(f_c, m_c, tol):
        fails.append("antitonicity: min(f, r) <= f but its conjugate is not >= f^c")

    bi = conjugacy.biconjugate(f, c)
    if not _le_all(bi, f, tol):
        fails.append("biconjugate exceeds the function somewhere")
    if not conjugacy.conjugate(bi, c).isclose(f_c, tol):
        fails.append("triple-conjugate identity broken: (f^{cc'})^c != f^c")
    if not conjugacy.biconjugate(bi, c).isclose(bi, tol):
        fails.append("biconjugation is not idempotent")

    if not m_c.isclose(pointwise_max(f_c, conjugacy.conjugate(row0, c)), tol):
        fails.append("conjugate of a pointwise inf is not the sup of conjugates")

    g = inst.extra_dual
    if not _le_all(conjugacy.reverse_biconjugate(g, c), g, tol):
        fails.append("reverse biconjugate exceeds the function somewhere")

    if not conjugacy.young_check(f, c):
        fails.append("generalized Young inequality fails")
    return fails


def check_transform_identity(
    inst: FuzzInstance, tol: float = DEFAULT_TOL
) -> list[str]:
    """Building L from R: -psi = phi^c exactly, the row-wise conjugate
    formula agrees with the inf formula, and -L_u is c'-convex."""
    fails = []
    r, c = inst.rockafellian, inst.coupling
    lag = duality.lagrangian_of(r, c)
    psi = duality.dual_function(lag)
    phi = duality.perturbation_function(r)
    if not psi.negated().isclose(conjugacy.conjugate(phi, c), tol):
        fails.append("-psi differs from the conjugate of the perturbation function")
    for u in r.decisions.labels:
        via_conjugate = conjugacy.conjugate(partial_rockafellian(r, u), c).negated()
        if not via_conjugate.isclose(partial_lagrangian(lag, u), tol):
            fails.append(f"row {u}: inf formula and conjugate formula disagree")
            break
    for u in r.decisions.labels:
        if not conjugacy.is_cprime_convex(
            partial_lagrangian(lag, u).negated(), c, tol
        ):
            fails.append(f"row {u}: -L_u is not c'-convex")
            break
    return fails


def check_transform_inequality(
    inst: FuzzInstance, tol: float = DEFAULT_TOL
) -> tuple[list[str], bool]:
    """Building R from L: phi >= (-psi)^{c'} pointwise, rows of R are
    c-convex, and the sup formula matches the row-wise reverse conjugate.
    Also reports whether the inequality is strict somewhere."""
    fails = []
    lag, c = inst.lagrangian, inst.coupling
    r = duality.rockafellian_of(lag, c)
    phi = duality.perturbation_function(r)
    psi = duality.dual_function(lag)
    lower = conjugacy.reverse_conjugate(psi.negated(), c)
    if not _le_all(lower, phi, tol):
        fails.append("perturbation function dips below (-psi)^{c'}")
    strict = any(
        lo < hi and not approx_eq(lo, hi, tol)
        for lo, hi in zip(lower.values, phi.values)
    )
    for u in lag.decisions.labels:
        r_u = partial_rockafellian(r, u)
        via_conjugate = conjugacy.reverse_conjugate(
            partial_lagrangian(lag, u).negated(), c
        )
        if not via_conjugate.isclose(r_u, tol):
            fails.append(f"row {u}: sup formula and reverse conjugate disagree")
            break
        if not conjugacy.is_c_convex(r_u, c, tol):
            fails.append(f"row {u}: R_u is not c-convex")
            break
    return fails, strict


def check_roundtrips(inst: FuzzInstance, tol: float = DEFAULT_TOL) -> list[str]:
    """R -> L -> R' contracts (equality iff rows were c-convex), the second
    trip is stable, and R' is the row-wise biconjugate of R."""
    fails = []
    r, c = inst.rockafellian, inst.coupling
    lag = duality.lagrangian_of(r, c)
    r2 = duality.rockafellian_of(lag, c)
    if not all(
        approx_le(a, b, tol)
        for ra, rb in zip(r2.rows, r.rows)
        for a, b in zip(ra, rb)
    ):
        fails.append("round trip exceeds the original Rockafellian somewhere")
    equal = r2.isclose(r, tol)
    convex = all(
        conjugacy.is_c_convex(partial_rockafellian(r, u), c, tol)
        for u in r.decisions.labels
    )
    if equal != convex:
        fails.append("round-trip equality disagrees with row c-convexity")
    if not duality.lagrangian_of(r2, c).isclose(lag, tol):
        fails.append("second round trip changed the Lagrangian")
    for u in r.decisions.labels:
        want = conjugacy.biconjugate(partial_rockafellian(r, u), c)
        if not partial_rockafellian(r2, u).isclose(want, tol):
            fails.append(f"row {u}: round trip differs from the biconjugate")
            break
    return fails


def check_weak_duality(inst: FuzzInstance, tol: float = DEFAULT_TOL) -> list[str]:
    fails = []
    r, c = inst.rockafellian, inst.coupling
    for x in c.primal.labels:
        try:
            rep = duality.weak_duality_report(r, c, x, tol)
        except ArithmeticError as exc:
            fails.append(str(exc))
            continue
        if rep.tight != approx_eq(rep.dual_value, rep.primal_value, tol):
            fails.append(f"tightness flag inconsistent at {x}")
        both_finite = rep.primal_value.is_finite and rep.dual_value.is_finite
        if (rep.gap is not None) != both_finite:
            fails.append(f"gap presence inconsistent at {x}")
        elif rep.gap is not None and rep.gap < ExtReal(0.0):
            fails.append(f"negative gap at {x}")
    return fails


def _replace_entry(table_rows, iu, j, value):
    rows = [list(row) for row in table_rows]
    rows[iu][j] = value
    return rows


def check_couple_theorem(
    inst: FuzzInstance, rng: random.Random, tol: float = DEFAULT_TOL,
    grid: tuple[int, int] = DEFAULT_GRID, inf_prob: float = DEFAULT_INF_PROB,
) -> list[str]:
    """A constructed couple audits true on every item; a single-entry
    perturbation and an unrelated random pair keep items (ii)-(v) in
    agreement and consistent with the inequality-plus-probe reading."""
    fails = []
    r, c = inst.rockafellian, inst.coupling
    lag1, r1 = couple.make_couple(r, c)
    a = couple.audit(lag1, r1, c, tol=tol)
    if not (
        a.item_i_inequality
        and a.item_i_minimality_probe
        and a.item_ii
        and a.item_iii
        and a.item_iv
        and a.item_v
        and a.items_agree
    ):
        fails.append("constructed couple does not audit true on every item")

    # single-entry perturbation of the couple
    decisions = lag1.decisions
    iu = rng.randrange(len(decisions))
    if rng.random() < 0.5:
        ix = rng.randrange(len(c.primal))
        rows = _replace_entry(r1.rows, iu, ix, random_extreal(rng, grid, inf_prob))
        lag2, r2 = lag1, Rockafellian(decisions, c.primal, rows)
    else:
        iy = rng.randrange(len(c.dual))
        rows = _replace_entry(lag1.rows, iu, iy, random_extreal(rng, grid, inf_prob))
        lag2, r2 = Lagrangian(decisions, c.dual, rows), r1

    for label, lg, rk in (
        ("perturbed couple", lag2, r2),
        ("random pair", inst.lagrangian, inst.rockafellian),
    ):
        a2 = couple.audit(lg, rk, c, tol=tol)
        if not a2.items_agree:
            fails.append(f"{label}: items (ii)-(v) disagree")
        if a2.item_iii:
            if not (a2.item_i_inequality and a2.item_i_minimality_probe):
                fails.append(f"{label}: couple without inequality+minimality")
        elif a2.item_i_inequality and a2.item_i_minimality_probe:
            fails.append(f"{label}: minimal in the inequality yet not a couple")
    return fails


@dataclass
class FuzzReport:
    """Aggregate outcome of one fuzz run; printable deterministically."""

    count: int
    max_set_size: int
    seed: int
    grid: tuple[int, int]
    inf_prob: float
    tol: float
    failures_by_check: dict[str, int]
    failures: list[tuple[int, str, str]]
    strict_inequality_instances: int
    first_failure: Problem | None

    @property
    def passed(self) -> bool:
        return not self.failures


def run_fuzz(
    count: int,
    max_set_size: int,
    seed: int,
    grid: tuple[int, int] = DEFAULT_GRID,
    inf_prob: float = DEFAULT_INF_PROB,
    tol: float = DEFAULT_TOL,
    on_instance: Callable[[int], None] | None = None,
) -> FuzzReport:
    """Generate ``count`` instances and run the whole invariant suite."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if max_set_size < 1:
        raise ValueError("max_set_size must be at least 1")
    if grid[0] > grid[1]:
        raise ValueError("grid low end exceeds high end")
    if not 0.0 <= inf_prob <= 0.4:
        raise ValueError("inf_prob must lie in [0, 0.4]")

    rng = random.Random(seed)
    failures_by_check = {name: 0 for name in CHECK_NAMES}
    failures: list[tuple[int, str, str]] = []
    strict_instances = 0
    first_failure: Problem | None = None

    for i in range(count):
        inst = random_instance(rng, i, max_set_size, grid, inf_prob)
        ineq_fails, strict = check_transform_inequality(inst, tol)
        if strict:
            strict_instances += 1
        outcomes = [
            ("conjugacy", check_conjugacy_laws(inst, tol)),
            ("transform_identity", check_transform_identity(inst, tol)),
            ("transform_inequality", ineq_fails),
            ("roundtrips", check_roundtrips(inst, tol)),
            ("weak_duality", check_weak_duality(inst, tol)),
            ("couple_theorem", check_couple_theorem(inst, rng, tol, grid, inf_prob)),
        ]
        for name, details in outcomes:
            if details:
                failures_by_check[name] += 1
                for detail in details:
                    failures.append((i, name, detail))
                if first_failure is None:
                    first_failure = Problem(
                        decisions=inst.rockafellian.decisions,
                        primal=inst.coupling.primal,
                        dual=inst.coupling.dual,
                        coupling=inst.coupling,
                        rockafellian=inst.rockafellian,
                        lagrangian=inst.lagrangian,
                        comment=(
                            f"fuzz reproduction: seed={seed} instance={i} "
                            f"check={name}"
                        ),
                    )
        if on_instance is not None:
            on_instance(i)

    return FuzzReport(
        count=count,
        max_set_size=max_set_size,
        seed=seed,
        grid=grid,
        inf_prob=inf_prob,
        tol=tol,
        failures_by_check=failures_by_check,
        failures=failures,
        strict_inequality_instances=strict_instances,
        first_failure=first_failure,
    )

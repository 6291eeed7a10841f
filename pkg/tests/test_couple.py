import math
import random

import pytest

from gendual import (
    Coupling,
    DomainMismatchError,
    FiniteSet,
    Lagrangian,
    Rockafellian,
    audit,
    check_item_ii,
    check_item_iii,
    check_item_iv,
    check_item_v,
    inequality_holds,
    lagrangian_of,
    make_couple,
    minimality_probe,
    rockafellian_of,
)
from gendual.couple import DEFAULT_DELTAS, _probe_magnitude

INF = math.inf


def replace(table_cls, table, row_set, col_set, iu, j, value):
    rows = [list(r) for r in table.rows]
    rows[iu][j] = value
    return table_cls(row_set, col_set, rows)


# --- inequality ---------------------------------------------------------------

def test_inequality_e1_couple(e1):
    assert inequality_holds(e1["L"], e1["R2"], e1["c"])


def test_inequality_e1_original_r(e1):
    # the original R dominates the rebuilt one, so the inequality still holds
    assert inequality_holds(e1["L"], e1["R"], e1["c"])


def test_inequality_broken_by_raising_l(e1):
    bumped = replace(Lagrangian, e1["L"], e1["U"], e1["Y"], 0, 0, 3.0)
    assert not inequality_holds(bumped, e1["R2"], e1["c"])


def test_inequality_domain_mismatch(e1):
    bad = Lagrangian(FiniteSet(["w0"]), e1["Y"], [[0.0, 0.0]])
    with pytest.raises(DomainMismatchError):
        inequality_holds(bad, e1["R2"], e1["c"])


# --- items (ii) through (v) ----------------------------------------------------

def test_item_ii(e1):
    assert check_item_ii(e1["L"], e1["R2"], e1["c"])
    assert not check_item_ii(e1["L"], e1["R"], e1["c"])


def test_item_ii_degenerate_minus_inf():
    c = Coupling(["x"], ["y"], [[0.0]])
    lag = Lagrangian(["u"], ["y"], [[-INF]])
    r = Rockafellian(["u"], ["x"], [[-INF]])
    assert check_item_ii(lag, r, c)
    assert check_item_iii(lag, r, c)
    assert check_item_iv(lag, r, c)
    assert check_item_v(lag, r, c)


def test_item_iii(e1):
    assert check_item_iii(e1["L"], e1["R2"], e1["c"])
    assert not check_item_iii(e1["L"], e1["R"], e1["c"])


def test_item_iii_trivial_zero():
    c = Coupling(["x"], ["y"], [[0.0]])
    lag = Lagrangian(["u"], ["y"], [[0.0]])
    r = Rockafellian(["u"], ["x"], [[0.0]])
    assert check_item_iii(lag, r, c)


@pytest.mark.parametrize("checker", [check_item_iv, check_item_v])
def test_items_iv_v_match_iii_on_e1(e1, checker):
    assert checker(e1["L"], e1["R2"], e1["c"])
    assert not checker(e1["L"], e1["R"], e1["c"])


# --- minimality probe ----------------------------------------------------------

def test_probe_true_on_couple(e1):
    assert minimality_probe(e1["L"], e1["R2"], e1["c"], deltas=(0.5,))
    assert minimality_probe(e1["L"], e1["R2"], e1["c"])


def test_probe_false_on_dominating_r(e1):
    # R(u0,x0) = 5 can drop to 4.5 with the inequality intact
    assert not minimality_probe(e1["L"], e1["R"], e1["c"], deltas=(0.5,))


def test_probe_false_when_inequality_fails(e1):
    bumped = replace(Lagrangian, e1["L"], e1["U"], e1["Y"], 0, 0, 3.0)
    assert not minimality_probe(bumped, e1["R2"], e1["c"])


def test_probe_saturated_instance():
    # -inf entries admit no decrease; the probe holds vacuously there
    c = Coupling(["x"], ["y"], [[0.0]])
    lag = Lagrangian(["u"], ["y"], [[-INF]])
    r = Rockafellian(["u"], ["x"], [[-INF]])
    assert minimality_probe(lag, r, c)


def test_probe_rejects_nonpositive_deltas(e1):
    with pytest.raises(ValueError):
        minimality_probe(e1["L"], e1["R2"], e1["c"], deltas=(0.0,))


def _literal_probe(lag, r, c, deltas, tol=1e-9):
    """Reference probe: rebuild the whole table per candidate and re-run the
    full inequality check, no slice shortcut."""
    from gendual.couple import _lower_candidates, _raise_candidates

    if not inequality_holds(lag, r, c, tol):
        return False
    big = _probe_magnitude(lag, r, c)
    for iu in range(len(r.decisions)):
        for ix in range(len(r.primal)):
            for cand in _lower_candidates(r.rows[iu][ix], deltas, big):
                r_mod = replace(Rockafellian, r, r.decisions, r.primal, iu, ix, cand)
                if inequality_holds(lag, r_mod, c, tol):
                    return False
    for iu in range(len(lag.decisions)):
        for iy in range(len(lag.dual)):
            for cand in _raise_candidates(lag.rows[iu][iy], deltas, big):
                l_mod = replace(Lagrangian, lag, lag.decisions, lag.dual, iu, iy, cand)
                if inequality_holds(l_mod, r, c, tol):
                    return False
    return True


def test_probe_agrees_with_literal_reference():
    rng = random.Random(99)
    pick = lambda: rng.choice([-INF, INF] + [float(k) for k in range(-5, 6)])
    for _ in range(60):
        nu, nx, ny = (rng.randint(1, 3) for _ in range(3))
        U = FiniteSet([f"u{i}" for i in range(nu)])
        X = FiniteSet([f"x{i}" for i in range(nx)])
        Y = FiniteSet([f"y{i}" for i in range(ny)])
        c = Coupling(X, Y, [[pick() for _ in range(ny)] for _ in range(nx)])
        r = Rockafellian(U, X, [[pick() for _ in range(nx)] for _ in range(nu)])
        lag, r2 = make_couple(r, c)
        for pair in ((lag, r2), (lag, r)):
            got = minimality_probe(pair[0], pair[1], c, DEFAULT_DELTAS)
            want = _literal_probe(pair[0], pair[1], c, DEFAULT_DELTAS)
            assert got == want


# --- audit and make_couple ------------------------------------------------------

def test_audit_e1_couple(e1):
    a = audit(e1["L"], e1["R2"], e1["c"])
    assert a.item_i_inequality and a.item_i_minimality_probe
    assert a.item_ii and a.item_iii and a.item_iv and a.item_v
    assert a.items_agree and a.is_couple
    assert a.witnesses == ()


def test_couple_rows_are_generalized_convex(e1):
    # consequence of being a couple: R rows c-convex, -L rows c'-convex
    from gendual import is_c_convex, is_cprime_convex, partial_lagrangian, partial_rockafellian

    for u in e1["U"]:
        assert is_c_convex(partial_rockafellian(e1["R2"], u), e1["c"])
        assert is_cprime_convex(partial_lagrangian(e1["L"], u).negated(), e1["c"])


def test_audit_e1_original_r(e1):
    a = audit(e1["L"], e1["R"], e1["c"])
    assert a.item_i_inequality
    assert not a.item_i_minimality_probe
    assert not (a.item_ii or a.item_iii or a.item_iv or a.item_v)
    assert a.items_agree and not a.is_couple
    items = {w.item for w in a.witnesses}
    assert items == {"i-minimality", "ii", "iii", "iv", "v"}


def test_audit_witness_points_at_first_violation(e1):
    bumped = replace(Lagrangian, e1["L"], e1["U"], e1["Y"], 0, 0, 3.0)
    a = audit(bumped, e1["R2"], e1["c"])
    w = next(w for w in a.witnesses if w.item == "i-inequality")
    assert (w.u, w.x, w.y) == ("u0", "x0", "y0")


def test_audit_random_round_trip_always_couple(e1):
    rng = random.Random(5)
    pick = lambda: rng.choice([-INF, INF] + [float(k) for k in range(-6, 7)])
    for _ in range(40):
        nu, nx, ny = (rng.randint(1, 4) for _ in range(3))
        U = FiniteSet([f"u{i}" for i in range(nu)])
        X = FiniteSet([f"x{i}" for i in range(nx)])
        Y = FiniteSet([f"y{i}" for i in range(ny)])
        c = Coupling(X, Y, [[pick() for _ in range(ny)] for _ in range(nx)])
        r = Rockafellian(U, X, [[pick() for _ in range(nx)] for _ in range(nu)])
        lag = lagrangian_of(r, c)
        r2 = rockafellian_of(lag, c)
        a = audit(lag, r2, c)
        assert a.is_couple and a.items_agree
        assert a.item_i_inequality and a.item_i_minimality_probe


def test_make_couple_e1(e1):
    lag, r2 = make_couple(e1["R"], e1["c"])
    assert lag.isclose(e1["L"]) and r2.isclose(e1["R2"])
    a = audit(lag, r2, e1["c"])
    assert a.is_couple


def test_make_couple_fixed_point_on_convex_rows(e1):
    lag, r2 = make_couple(e1["R2"], e1["c"])
    assert r2.isclose(e1["R2"])  # rows already c-convex
    lag2, r3 = make_couple(r2, e1["c"])
    assert lag2.isclose(lag) and r3.isclose(r2)


def test_make_couple_bottom(e1):
    r = Rockafellian(e1["U"], e1["X"], [[-INF, -INF], [-INF, -INF]])
    lag, r2 = make_couple(r, e1["c"])
    assert all(v.kind == -1 for row in lag.rows for v in row)
    assert all(v.kind == -1 for row in r2.rows for v in row)

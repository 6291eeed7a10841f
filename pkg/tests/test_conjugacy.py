import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import bruteforce as bf
from gendual import (
    Coupling,
    DomainMismatchError,
    FiniteSet,
    SetFunction,
    approx_le,
    biconjugate,
    bilinear_coupling,
    conjugate,
    is_c_convex,
    is_cprime_convex,
    pointwise_min,
    pointwise_max,
    reverse_biconjugate,
    reverse_conjugate,
    reverse_coupling,
    young_check,
)

INF = math.inf


def as_floats(fn):
    return [v.to_float() for v in fn.values]


# --- worked examples --------------------------------------------------------

def test_conjugate_of_plus_inf_is_minus_inf(e1):
    f = SetFunction(e1["X"], [INF, INF])
    assert as_floats(conjugate(f, e1["c"])) == [-INF, -INF]


def test_conjugate_bilinear_zero_function():
    c = bilinear_coupling([-1, 0, 1], [-1, 0, 1])
    f = SetFunction(c.primal, [0.0, 0.0, 0.0])
    # oracle: max over x of x*y
    want = bf.conjugate([[x * y for y in (-1, 0, 1)] for x in (-1, 0, 1)], [0.0] * 3)
    assert as_floats(conjugate(f, c)) == want == [1.0, 0.0, 1.0]


def test_conjugate_bilinear_square():
    c = bilinear_coupling([-1, 0, 1], [-1, 0, 1])
    f = SetFunction(c.primal, [1.0, 0.0, 1.0])  # x^2 on the grid
    want = bf.conjugate(
        [[x * y for y in (-1, 0, 1)] for x in (-1, 0, 1)], [1.0, 0.0, 1.0]
    )
    assert as_floats(conjugate(f, c)) == want == [0.0, 0.0, 0.0]


def test_reverse_conjugate_of_plus_inf(e1):
    g = SetFunction(e1["Y"], [INF, INF])
    assert as_floats(reverse_conjugate(g, e1["c"])) == [-INF, -INF]


def test_reverse_conjugate_matches_reversed_coupling(e1):
    g = SetFunction(e1["Y"], [-2.0, -1.0])
    direct = reverse_conjugate(g, e1["c"])
    via_reverse = conjugate(g, reverse_coupling(e1["c"]))
    assert as_floats(direct) == as_floats(via_reverse) == [2.0, 3.0]


def test_biconjugate_spike():
    c = bilinear_coupling([0, 1, 2], [-1, 0, 1])
    f = SetFunction(c.primal, [0.0, 10.0, 0.0])
    want = bf.biconjugate(
        [[x * y for y in (-1, 0, 1)] for x in (0, 1, 2)], [0.0, 10.0, 0.0]
    )
    assert as_floats(biconjugate(f, c)) == want == [0.0, 0.0, 0.0]
    assert not is_c_convex(f, c)


def test_biconjugate_of_minus_inf(e1):
    f = SetFunction(e1["X"], [-INF, -INF])
    assert as_floats(biconjugate(f, e1["c"])) == [-INF, -INF]
    assert is_c_convex(f, e1["c"])


def test_biconjugate_e1_row(e1):
    f = SetFunction(e1["X"], [5.0, 3.0])
    want = bf.biconjugate([[0.0, 0.0], [1.0, 2.0]], [5.0, 3.0])
    assert as_floats(biconjugate(f, e1["c"])) == want == [2.0, 3.0]


def test_reverse_biconjugate(e1):
    g = SetFunction(e1["Y"], [-INF, -INF])
    assert as_floats(reverse_biconjugate(g, e1["c"])) == [-INF, -INF]
    # a conjugate is a fixed point
    g2 = conjugate(SetFunction(e1["X"], [5.0, 3.0]), e1["c"])
    assert reverse_biconjugate(g2, e1["c"]).isclose(g2)
    g3 = SetFunction(e1["Y"], [0.0, 0.0])
    assert as_floats(reverse_biconjugate(g3, e1["c"])) == [0.0, 0.0]


def test_cprime_convexity(e1):
    g = conjugate(SetFunction(e1["X"], [5.0, 3.0]), e1["c"])
    assert is_cprime_convex(g, e1["c"])
    assert is_cprime_convex(SetFunction(e1["Y"], [-INF, -INF]), e1["c"])
    # +inf equals (-inf)^c when the coupling is finite-valued, so it is a
    # conjugate and hence c'-convex
    top = SetFunction(e1["Y"], [INF, INF])
    assert reverse_biconjugate(top, e1["c"]).isclose(top)
    assert is_cprime_convex(top, e1["c"])
    assert conjugate(SetFunction(e1["X"], [-INF, -INF]), e1["c"]).isclose(top)


def test_c_convex_from_reverse_conjugate(e1):
    f = reverse_conjugate(SetFunction(e1["Y"], [-2.0, -1.0]), e1["c"])
    assert is_c_convex(f, e1["c"])


def test_young_check(e1):
    assert young_check(SetFunction(e1["X"], [5.0, 3.0]), e1["c"])
    assert young_check(SetFunction(e1["X"], [INF, INF]), e1["c"])
    assert young_check(SetFunction(e1["X"], [-INF, -INF]), e1["c"])


def test_domain_mismatch_raises(e1):
    f = SetFunction(FiniteSet(["a", "b"]), [0.0, 0.0])
    with pytest.raises(DomainMismatchError):
        conjugate(f, e1["c"])
    with pytest.raises(DomainMismatchError):
        reverse_conjugate(f, e1["c"])


# --- randomized properties, cross-checked against the oracle ----------------

entry = st.one_of(
    st.just(-INF),
    st.just(INF),
    st.integers(min_value=-10, max_value=10).map(float),
)


@st.composite
def coupling_and_functions(draw):
    nx = draw(st.integers(min_value=1, max_value=4))
    ny = draw(st.integers(min_value=1, max_value=4))
    c_rows = draw(
        st.lists(
            st.lists(entry, min_size=ny, max_size=ny), min_size=nx, max_size=nx
        )
    )
    f_vals = draw(st.lists(entry, min_size=nx, max_size=nx))
    g_vals = draw(st.lists(entry, min_size=nx, max_size=nx))
    return c_rows, f_vals, g_vals


@given(coupling_and_functions())
@settings(max_examples=150)
def test_conjugate_matches_oracle(data):
    c_rows, f_vals, _ = data
    X = FiniteSet([f"x{i}" for i in range(len(c_rows))])
    Y = FiniteSet([f"y{j}" for j in range(len(c_rows[0]))])
    c = Coupling(X, Y, c_rows)
    f = SetFunction(X, f_vals)
    assert as_floats(conjugate(f, c)) == bf.conjugate(c_rows, f_vals)
    assert as_floats(biconjugate(f, c)) == bf.biconjugate(c_rows, f_vals)


@given(coupling_and_functions())
@settings(max_examples=150)
def test_conjugacy_laws(data):
    c_rows, f_vals, g_vals = data
    X = FiniteSet([f"x{i}" for i in range(len(c_rows))])
    Y = FiniteSet([f"y{j}" for j in range(len(c_rows[0]))])
    c = Coupling(X, Y, c_rows)
    f = SetFunction(X, f_vals)
    g = SetFunction(X, g_vals)

    # antitonicity through a dominated function
    m = pointwise_min(f, g)
    assert all(
        approx_le(a, b)
        for a, b in zip(conjugate(f, c).values, conjugate(m, c).values)
    )
    # biconjugate below, triple conjugate exact, idempotence
    bi = biconjugate(f, c)
    assert all(approx_le(a, b) for a, b in zip(bi.values, f.values))
    assert conjugate(bi, c).isclose(conjugate(f, c))
    assert biconjugate(bi, c).isclose(bi)
    # inf of a family maps to sup of conjugates
    assert conjugate(m, c).isclose(
        pointwise_max(conjugate(f, c), conjugate(g, c))
    )
    # anything of the form g^{c'} is c-convex
    assert is_c_convex(reverse_conjugate(conjugate(f, c), c), c)
    # Young holds always
    assert young_check(f, c)


def test_infinity_exactness_in_identities():
    # identities must match infinities exactly, not just within tolerance
    rng = random.Random(7)
    for _ in range(50):
        nx, ny = rng.randint(1, 4), rng.randint(1, 4)
        pick = lambda: rng.choice([-INF, INF] + [float(k) for k in range(-5, 6)])
        c_rows = [[pick() for _ in range(ny)] for _ in range(nx)]
        f_vals = [pick() for _ in range(nx)]
        X = FiniteSet([f"x{i}" for i in range(nx)])
        Y = FiniteSet([f"y{j}" for j in range(ny)])
        c = Coupling(X, Y, c_rows)
        f = SetFunction(X, f_vals)
        lhs = conjugate(biconjugate(f, c), c)
        rhs = conjugate(f, c)
        assert [v.kind for v in lhs.values] == [v.kind for v in rhs.values]
        assert as_floats(lhs) == as_floats(rhs)

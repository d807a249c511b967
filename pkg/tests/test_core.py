import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from runge_lab.core import (
    Barycentric,
    Basis,
    BasisPoly,
    Interval,
    NodeSet,
    Piecewise,
    SampleSet,
    Tolerances,
    barycentric_weights,
    evaluate,
    get_target,
    runge,
)


def test_runge_values():
    assert runge(0.0) == 1.0
    assert runge(1.0) == pytest.approx(1 / 26)
    assert runge(-0.2) == pytest.approx(0.5)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(1.0, 1.0)
    with pytest.raises(ValueError):
        Interval(2.0, -2.0)
    assert Interval().width == 2.0


def test_interval_maps_roundtrip():
    iv = Interval(0.0, 4.0)
    x = np.array([0.0, 1.0, 4.0])
    assert np.allclose(iv.from_unit(iv.to_unit(x)), x)
    assert np.allclose(iv.to_unit(x), [-1.0, -0.5, 1.0])


def test_nodeset_validation():
    iv = Interval()
    with pytest.raises(ValueError):
        NodeSet(iv, [0.0, 0.0])
    with pytest.raises(ValueError):
        NodeSet(iv, [0.5, -0.5])
    with pytest.raises(ValueError):
        NodeSet(iv, [-2.0, 0.0])


def test_sampleset_validation():
    ns = NodeSet(Interval(), [-1.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        SampleSet(ns, [1.0, 2.0])
    with pytest.raises(ValueError):
        SampleSet(ns, [1.0, np.inf, 2.0])


def test_tolerances_positive():
    with pytest.raises(ValueError):
        Tolerances(node_match=0.0)


def test_constant_basis_poly():
    p = BasisPoly(Basis.MONOMIAL, [1.0])
    assert np.all(evaluate(p, [-1.0, 0.3, 1.0]) == 1.0)


def test_chebyshev_t1_at_half():
    p = BasisPoly(Basis.CHEBYSHEV_T, [0.0, 1.0])
    assert evaluate(p, [0.5])[0] == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("n", [1, 3, 7, 12, 20])
def test_chebyshev_extrema_values(n):
    # T_n at its extrema cos(k pi / n) alternates +-1
    coeffs = np.zeros(n + 1)
    coeffs[-1] = 1.0
    p = BasisPoly(Basis.CHEBYSHEV_T, coeffs)
    for k in range(n + 1):
        x = np.cos(k * np.pi / n)
        assert evaluate(p, [x])[0] == pytest.approx((-1.0) ** k, abs=1e-12)


def test_legendre_at_one():
    p = BasisPoly(Basis.LEGENDRE, [0.0, 0.0, 0.0, 1.0])
    assert evaluate(p, [1.0])[0] == pytest.approx(1.0, abs=1e-14)


def test_barycentric_node_hit_exact():
    ns = NodeSet(Interval(), [-1.0, 0.0, 1.0])
    b = Barycentric.fit(SampleSet(ns, [0.3, -2.0, 7.5]))
    out = evaluate(b, [0.0])
    assert out[0] == -2.0  # bit-exact node hit


@given(
    ys=st.lists(st.floats(-10, 10, allow_nan=False), min_size=4, max_size=12),
)
@settings(max_examples=50, deadline=None)
def test_barycentric_reproduces_all_ordinates_bit_exactly(ys):
    xs = np.linspace(-1, 1, len(ys))
    b = Barycentric.fit(SampleSet(NodeSet(Interval(), xs), ys))
    out = evaluate(b, xs)
    assert np.array_equal(out, np.asarray(ys, dtype=float))


def test_barycentric_weight_invariants():
    xs = np.linspace(-1, 1, 21)
    w = barycentric_weights(xs)
    assert np.all(w != 0)
    # equispaced weights alternate in sign
    assert np.all(np.sign(w[1:]) == -np.sign(w[:-1]))


def test_piecewise_dispatch_and_domain_error():
    left = BasisPoly(Basis.MONOMIAL, [0.0, 1.0])   # x
    right = BasisPoly(Basis.MONOMIAL, [1.0])       # 1
    pw = Piecewise(np.array([-1.0, 0.0, 1.0]), (left, right))
    out = evaluate(pw, [-0.5, 0.0, 1.0])
    assert out == pytest.approx([-0.5, 1.0, 1.0])  # 0.0 belongs to the right piece
    with pytest.raises(ValueError):
        evaluate(pw, [1.5])


def test_piecewise_validation():
    p = BasisPoly(Basis.MONOMIAL, [1.0])
    with pytest.raises(ValueError):
        Piecewise(np.array([0.0, 0.0]), (p,))
    with pytest.raises(ValueError):
        Piecewise(np.array([0.0, 1.0, 2.0]), (p,))


def test_target_registry():
    assert get_target("runge")(0.0) == 1.0
    with pytest.raises(KeyError):
        get_target("nope")

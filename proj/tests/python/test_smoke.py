import cmath
import math

import pytest

import spinor_epr as se


def test_coupling_j_value():
    j = se.coupling_j(1.0, 1.0, 1.0 / 137.035999)
    assert j == pytest.approx(-1.82433814343923e-3, abs=1e-12)
    assert se.coupling_j(2.0) == pytest.approx(j / 8.0)


def test_maximal_entanglement_time():
    j = se.coupling_j(1.0)
    t = se.maximal_entanglement_time(j)
    assert 2.0 * abs(j) * t == pytest.approx(math.pi / 4.0, abs=1e-14)


def test_evolution_reaches_epr():
    amps = se.evolve_spin_amplitudes(math.pi / 4.0)
    target = se.epr_spin_amplitudes()
    assert len(amps) == 4
    for a, b in zip(amps, target):
        assert cmath.isclose(a, b, abs_tol=1e-12)
    assert amps[2] == pytest.approx(1.0 / math.sqrt(2.0))
    assert amps[1] == pytest.approx(-1j / math.sqrt(2.0))


def test_epr_report():
    rep = se.epr_report()
    assert rep["entropy_bits"] == pytest.approx(1.0, abs=1e-10)
    assert rep["concurrence"] == pytest.approx(1.0, abs=1e-10)
    assert rep["schmidt_spectrum"][0] == pytest.approx(0.5, abs=1e-10)
    assert rep["schmidt_spectrum"][1] == pytest.approx(0.5, abs=1e-10)


def test_boost_preserves_entanglement():
    rep = se.boost_epr("z", 2.0)
    assert rep["entropy_bits"] == pytest.approx(1.0, abs=1e-9)
    assert rep["p1"][0] == pytest.approx(math.cosh(2.0))
    assert rep["p1"][3] == pytest.approx(math.sinh(2.0))


def test_invariance_scan_grid():
    rows = se.invariance_scan()
    assert len(rows) == 24
    for row in rows:
        assert row["entropy_bits"] == pytest.approx(1.0, abs=1e-9)
        assert row["spectrum_deviation"] <= 1e-9


def test_tree_amplitude_structure():
    amp = se.tree_amplitude(0.5, math.pi / 3.0)
    assert amp["total"] == pytest.approx(amp["direct"] - amp["exchange"])
    with pytest.raises(se.PhysicsError):
        se.tree_amplitude(0.5, 0.0)  # forward-scattering pole


def test_reduction_deviations_shrink():
    assert se.extraction_deviation(0.02) <= 0.05
    assert se.extraction_deviation(0.01) <= 0.025
    assert se.gordon_deviation(0.05) < se.gordon_deviation(0.1)

import math

import numpy as np
import pytest

import adistab


def test_bounds():
    assert round(adistab.theorem1_lower_bound(adistab.Scheme.MCS, 2, 0.9).theta_min, 3) == 0.317
    assert adistab.theorem1_lower_bound(adistab.Scheme.Do, 3, 1.0).theta_min == 2.0 / 3.0
    b = adistab.theorem2_lower_bound(adistab.Scheme.HV, 4, 0.5)
    assert b.necessary_only
    assert b.source == "theorem2"
    assert abs(adistab.solve_ak(2) - (1 - math.sqrt(2) / 2)) < 1e-14
    assert "0.278" in adistab.bounds_table(2, 0.9)
    with pytest.raises(ValueError):
        adistab.theorem1_lower_bound(adistab.Scheme.Do, 4, 0.5)


def test_matrices():
    d = adistab.template_matrix("2d-gamma", 0.9)
    assert d.shape == (2, 2)
    assert adistab.validate_psd(d)
    assert not adistab.validate_psd(np.array([[1.0, 2.0], [2.0, 1.0]]))
    assert adistab.gamma_min(d) == pytest.approx(0.9)


def test_symbol_and_sweep():
    d = adistab.template_matrix("2d-gamma", 0.9)
    z0, z = adistab.scaled_eigenvalues(d, [10.0, 10.0], [math.pi / 2, math.pi / 2])
    assert all(v <= 0 for v in z)
    m = adistab.amplification(adistab.Scheme.HV, 0.3, z0, z)
    assert abs(m) <= 1.0
    stable = adistab.stability_sweep(adistab.Scheme.Do, 0.5, "2d-gamma", 0.9, nphi=16, rcount=9)
    assert stable["stable"]
    unstable = adistab.stability_sweep(adistab.Scheme.Do, 0.3, "2d-gamma", 0.9, nphi=16, rcount=9)
    assert not unstable["stable"]
    assert unstable["max_abs_m"] > 1.0


def test_time_stepping_against_exact():
    p = adistab.Problem.template("2d-gamma", 0.9)
    op = adistab.SplitOperator(p, 12)
    u0 = op.initial()
    assert u0.shape == (144,)
    ref = op.exact(u0, 1.0)
    theta = adistab.theorem1_lower_bound(adistab.Scheme.CS, 2, 0.9).theta_min
    errs = [
        adistab.global_error(ref, op.integrate(adistab.Scheme.CS, theta, u0, 1.0, n), 2, 12)
        for n in (10, 20)
    ]
    assert 3.0 < errs[0] / errs[1] < 5.0
    one = op.step(adistab.Scheme.MCS, 0.4, u0, 0.1)
    assert np.all(np.isfinite(one))
    assert np.allclose(op.apply_full(np.ones(144)), 0.0)


def test_converge():
    rows = adistab.converge("2d-gamma", 0.9, [8], ["Do"], t_final=1.0, steps=[2, 4])
    assert [r[0] for r in rows] == ["Do", "Do"]
    assert rows[0][3] == 0.5
    assert rows[1][4] < rows[0][4]

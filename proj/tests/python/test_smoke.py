"""Smoke tests for the python bindings: every main operation is reachable and
returns values consistent with the C++ test suite's pinned constants."""

import math

import pytest

import monopole_spectra as ms


@pytest.fixture
def flat_params():
    return ms.make_params(alpha=1.0, A=0.5, D=1.0)


def test_series_flat_space_limit():
    s = ms.monopole_series_S(1.0, 1e-12)
    assert s.value == 0.0
    assert s.error_bound <= 1e-12
    assert s.terms_used >= 1


def test_series_regression_constant():
    s = ms.monopole_series_S(0.5, 1e-12)
    assert abs(s.value - 1.0909391332379950) < 1e-10


def test_series_invalid_alpha():
    with pytest.raises(ms.InvalidParameterError):
        ms.monopole_series_S(1.5, 1e-10)


def test_derive_couplings(flat_params):
    c = ms.derive_couplings(flat_params, 1)
    assert c.zeta == pytest.approx(-1.0, abs=1e-14)
    assert c.ell == pytest.approx((1 + math.sqrt(11)) / 2, abs=1e-14)
    assert c.ell == pytest.approx(c.d, abs=1e-12)
    assert c.eta_sq is None


def test_energies(flat_params):
    assert ms.energy_kratzer(flat_params, 0, 1) == pytest.approx(-0.10733500838578401, abs=1e-13)
    screened = ms.make_params(alpha=1.0, A=0.5, D=1.0, delta=1e-3)
    assert ms.energy_screened(screened, 0, 1) == pytest.approx(-0.10644419938411948, abs=1e-13)
    assert ms.max_radial_quantum_number(screened, 1) == 29
    with pytest.raises(ms.InadmissibleStateError):
        ms.energy_screened(screened, 30, 1)
    with pytest.raises(ms.NoBoundStateError):
        ms.energy_kratzer(ms.make_params(alpha=0.3, A=0.5, D=1.0), 0, 1)


def test_hypergeometric_kernels():
    assert ms.hyp1f1_terminating(2, 3.0, 1.0) == pytest.approx(5.0 / 12.0, abs=1e-14)
    assert ms.hyp2f1_terminating(3, 0.8, 0.8, 0.25) == pytest.approx(0.75**3, abs=1e-14)


def test_potentials_and_minimum():
    p = ms.make_params(alpha=0.5, A=2.0, D=4.0, delta=0.1)
    v = ms.effective_potential_screened(1.0, p, 2)
    assert v == pytest.approx(2.1158546349490841, abs=1e-10)
    m = ms.potential_minimum(p, 2, ms.PotentialKind.screened)
    assert m.v_star < 0 < m.r_star


def test_wavefunction_sampling(flat_params):
    psi = ms.RadialWavefunction.kratzer(flat_params, 1, 1)
    rs = [i * 40.0 / 800 for i in range(801)]
    vals = psi.sample(rs)
    assert vals[0] == 0.0
    sign_changes = sum(1 for a, b in zip(vals, vals[1:]) if a * b < 0)
    assert sign_changes == 1
    norm = sum(v * v for v in vals) * (40.0 / 800)
    assert norm == pytest.approx(1.0, rel=1e-3)


def test_spectrum_table(flat_params):
    table = ms.build_spectrum_table(flat_params, ms.PotentialKind.kratzer, 2, 2)
    assert len(table.rows) == 9
    assert all(row.energy < 0 for row in table.rows)


def test_oracle_quick(flat_params):
    grid = ms.RadialGrid(1e-6, 60.0, 3000)
    res = ms.solve_radial(lambda r: -1.0 / r, flat_params, grid, 1)
    assert res.energies[0] == pytest.approx(-0.5, abs=5e-3)
    assert ms.count_states_below(lambda r: -1.0 / r, flat_params, grid, 0.0) >= 1


def test_greene_aldrich():
    e = ms.greene_aldrich_error(0.1, 1.0)
    assert e.err_r2 == pytest.approx(0.2**2 / 12, rel=0.2)
    assert ms.greene_aldrich_error(0.0, 1.0).err_r1 == 0.0


def test_validation_report():
    p = ms.make_params(alpha=0.8, A=0.5, D=1.0)
    report = ms.validate_spectrum(p, [1], [0], ms.PotentialKind.kratzer, 1e-4)
    assert report.all_pass()
    assert report.rows[0].rel_err < 1e-4

"""Smoke tests for the Python bindings."""

import pytest

import fermatjac as fj


def test_triple():
    t = fj.Triple(2, 2, 1, 5)
    assert (t.r, t.s, t.t, t.p) == (2, 2, 1, 5)
    assert t.reduced() == fj.Triple(1, 1, 3, 5)
    with pytest.raises(ValueError):
        fj.Triple(1, 1, 1, 5)


def test_root_number_pins():
    rep = fj.root_number(fj.Triple(1, 1, 3, 5), 3)
    assert rep.global_sign == -1
    assert rep.eps_inf == 1
    assert rep.u_X == 1 and rep.d == 1
    assert fj.root_number(fj.Triple(1, 1, 3, 5), 2).global_sign == 1


def test_epsilon_p3():
    assert fj.epsilon_p3(8) == -1   # 8 = -1 mod 9
    assert fj.epsilon_p3(2) == 1
    assert fj.epsilon_p3(3) == -1   # ord_3 = 1


def test_selmer_methods_agree():
    closed = fj.selmer(1, 3, 5)
    both = fj.selmer(1, 3, 5, method="both")
    assert closed.dimension == both.dimension == 2
    assert closed.S == 1
    assert closed.B == 1 and closed.b_symbol == 1
    assert len(closed.generators) == 2
    with pytest.raises(fj.HypothesisError):
        fj.selmer(1, 11, 5)  # 11 splits in Q(zeta_5)


def test_parity():
    res = fj.parity_check(fj.Triple(1, 1, 3, 5), 2)
    assert res.holds and res.S == 0 and res.eps == 1
    scan = fj.parity_scan(5, 60)
    assert scan.n_checked > 30
    assert scan.n_holds == scan.n_checked
    assert not scan.failures


def test_density():
    rep = fj.density(3, fj.Triple(1, 1, 1, 3), 2000, keep_rows=True)
    assert abs(rep.fraction - 0.5) < 0.1
    assert rep.alpha_constant_per_class
    assert rep.n_total == len(rep.rows)
    row = rep.rows[0]
    assert row.eps == (1 if (row.alpha + row.tau) % 2 == 0 else -1)


def test_local_images():
    im = fj.local_image_at_p(1, 2, 5)
    assert im.dimension == 3 and len(im.I) == 3
    off = fj.local_image_off_p(2, 2, 5)
    assert off.dimension == 1


def test_finite_field_operations():
    assert fj.jacobi_sum(5, 2) == [-4, 0, 0, 0]  # inert: -ell^((p-1)/2)
    assert fj.count_points(3, 2, 2, 1, 1, 1) == 8
    zn = fj.zeta_numerator(2, 3, 1, 1, 1)
    assert zn[0] == 1 and zn[-1] == 2


def test_arithmetic_helpers():
    assert fj.legendre(2, 5) == -1
    assert fj.regular(7) == (True, 0)
    assert fj.regular(37) == (False, 1)
    assert fj.b_value(1, 3, 5) == 1
    bk = fj.bernoulli_mod_p(7)
    assert set(bk) == {2, 4}
    assert fj.selmer_upper_bound(3, 5) >= fj.selmer(1, 3, 5).dimension
    assert fj.alpha_tau(fj.Triple(1, 1, 3, 5), 6)[1] == 2

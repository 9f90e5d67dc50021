import cmath

import thetalift as tl


def test_e1_parity_and_zero():
    tau = 0.3 + 1.1j
    z = 0.23 + 0.41j
    assert abs(tl.e1(tau, z) + tl.e1(tau, -z)) < 1e-8
    assert tl.e1(tau, "1/2,0") == 0 or abs(tl.e1(tau, "1/2,0")) < 1e-9
    assert abs(tl.e2(tau, z) - tl.e2(tau, -z)) < 1e-8


def test_weyl_theta_is_e1e1():
    v = tl.theta("0,1;1,0", "1/5,0;0,1/5", "i")
    e1a = tl.e1(1j, "1/5,0")
    e1b = tl.e1(1j, "0,1/5")
    assert abs(v - e1a * e1b) < 1e-10


def test_diagonal_acts_trivially():
    assert tl.theta("2,0;0,3", "1/5,0;0,1/5", "i") == 0


def test_bruhat_roundtrip():
    facs = tl.bruhat("1,2;3,4")
    assert [f[0] for f in facs] == ["unipotent", "diagonal", "weyl", "unipotent", "diagonal"]
    assert facs[0][1] == "1/3"


def test_telescoped_matches_closed_form():
    out = tl.theta("1,1;1,2", "1/5,0;0,1/5", "0.2+1.1i", telescoped=True)
    assert out["difference"] < 1e-6


def test_kronecker_overlap():
    v_direct, _ = tl.kronecker(0, 3.5, 1j, 0.3 + 0.1j, direct=True)
    v_cont, _ = tl.kronecker(0, 3.5, 1j, 0.3 + 0.1j)
    assert abs(v_direct - v_cont) < 1e-8


def test_verify_suite():
    rep = tl.verify("parity", seed=7)
    assert rep["failures"] == 0


def test_delta_p_count():
    assert len(tl.delta_p(2)) == 9


def test_periodic_bernoulli():
    assert tl.periodic_bernoulli(2, "0") == "1/6"
    assert tl.periodic_bernoulli(1, "1/4") == "-1/4"

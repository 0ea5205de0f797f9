import math
import subprocess
import sys

import pytest

import stablekernel as sk


def test_density_matches_cauchy():
    p = sk.StableParams(1, 1.0, 1.0)
    assert sk.eval_density(p, 1.0, [0.0], [0.0]) == pytest.approx(1.0 / math.pi, rel=1e-12)
    p2 = sk.StableParams(1, 1.0, 2.0)
    assert sk.eval_density(p2, 3.0, [4.0], [0.0]) == pytest.approx(6.0 / (52.0 * math.pi), rel=1e-9)


def test_kappa_inputs():
    assert str(sk.KappaOrder(6, 4)) == "3/2"
    assert sk.KappaOrder.parse("1/2") == sk.KappaOrder(1, 2)
    assert sk.eval_D(1, 1.0, "0/1", 1.0).value == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-9)
    assert sk.eval_D(1, 1.0, 0, 1.0).value == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-9)
    with pytest.raises(TypeError):
        sk.eval_D(1, 1.0, 0.5, 1.0)
    with pytest.raises(sk.DomainError):
        sk.KappaOrder.parse("0.5")


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        sk.StableParams(1, 2.0, 1.0)
    with pytest.raises(sk.ParityError):
        sk.const_D(1, 1.0, 0)
    assert issubclass(sk.ParityError, sk.DomainError)
    assert issubclass(sk.NoConvergenceError, RuntimeError)


def test_constants_and_tails():
    assert sk.const_D_even(1, 1.0, 2).value == pytest.approx(-6.0 / math.pi, rel=1e-14)
    assert sk.const_N_odd(1, 1.0, 1).value == pytest.approx(-2.0 / math.pi, rel=1e-14)
    assert sk.lemma1_limit(1.0, -0.5) == pytest.approx(-0.5, rel=1e-14)
    c = sk.tail_constant_D(1, 1.0, 0)
    assert str(c.branch) in ("Branch.even_D", "even_D")
    assert sk.tail_D(1, 1.0, 0, 100.0) == pytest.approx(1.0 / (math.pi * 1e4), rel=1e-14)


def test_gradient_and_laplacian():
    p = sk.StableParams(1, 1.0, 1.0)
    g = sk.frac_gradient_g(p, 1, 1.0, [1.0], [0.0])
    assert g[0].real == 0.0
    assert g[0].imag == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-9)
    assert sk.frac_laplacian_g(p, 2, 1.0, [0.0], [0.0]) == pytest.approx(2.0 / math.pi, rel=1e-12)


def test_quadrature_strategies():
    i = sk.radial_integrand(3, 1.0, 1.5, 50.0)
    assert str(sk.choose_strategy(i)).endswith("contour")
    direct = sk.eval_I_direct(i, 1e-10).value
    contour = sk.eval_I_contour(i, tol=1e-10).value
    assert contour == pytest.approx(direct, rel=1e-9)


def test_threshold_report():
    rep = sk.threshold_finder(1, 1.0, 0, [0.1])
    assert rep.passed
    (eps, radius), = rep.thresholds
    assert eps == 0.1
    assert radius == pytest.approx(math.sqrt(10.0), rel=1e-12)
    assert rep.to_csv().startswith("d,alpha,c,kappa,t,radius,quantity,value,reference,ratio\n")


def test_cli_entry_points():
    code, out, err = sk.run_cli(["eval", "--radius", "0"])
    assert code == 0
    assert out.splitlines()[0].startswith("d,alpha,c,kappa,t,radius,g,")
    assert sk.run_cli(["eval", "--alpha", "2"])[0] == 2
    proc = subprocess.run([sys.executable, "-m", "stablekernel", "constants", "--kappa", "1/2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "generic_D" in proc.stdout

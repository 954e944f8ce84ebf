import cmath
import json
import math
import os
import subprocess

import numpy as np
import pytest

import nctorus as nc

GOLDEN = (math.sqrt(5.0) - 1.0) / 4.0


def test_weyl_relation():
    a = nc.WeylElement.generator(GOLDEN, 1, 0)
    b = nc.WeylElement.generator(GOLDEN, 0, 1)
    ab = a * b
    ba = b * a
    phase = cmath.exp(4j * math.pi * GOLDEN)
    assert abs(ab[1, 1] - phase * ba[1, 1]) < 1e-14


def test_involution_and_trace():
    f = nc.WeylElement(GOLDEN, 1, 1)
    f[0, 0] = 2.0
    f[1, -1] = 1 + 1j
    g = nc.involution(nc.involution(f))
    assert np.allclose(g.table, f.table, atol=1e-15)
    assert abs(nc.trace(f) - 2.0) < 1e-15
    assert nc.trace(nc.star_product(nc.involution(f), f)).real > 0


def test_growth_sequence_rotation_is_flat():
    gamma = nc.growth_sequence(nc.DiffeoSpec.rotation(GOLDEN), 8, 512)
    assert np.allclose(gamma, 1.0)


def test_growth_sequence_benchmark_first_term():
    d = nc.DiffeoSpec.benchmark()
    gamma = nc.growth_sequence(d, 4, 4096)
    u = np.linspace(0.0, 1.0, 200000, endpoint=False)
    hp = lambda x: 1.0 + 0.3 * np.cos(2 * np.pi * x)
    brute = max((hp(u + 2 * GOLDEN) / hp(u)).max(), (hp(u - 2 * GOLDEN) / hp(u)).max())
    assert abs(gamma[1] - brute) < 1e-6


def test_represent_respects_involution():
    d = nc.DiffeoSpec.benchmark()
    box = nc.TruncationBox(2, 3, 64)
    f = nc.WeylElement(d.alpha, 1, 1)
    f[1, 0] = 1.0
    f[0, 1] = 0.5j
    f[-1, 1] = 0.25
    a = nc.represent(f, d, box)
    assert a.shape == (box.dim, box.dim)
    assert np.allclose(nc.represent(nc.involution(f), d, box), a.conj().T, atol=1e-10)


def test_hat_table_shape_and_tomita():
    d = nc.DiffeoSpec.benchmark()
    box = nc.TruncationBox(3, 3, 64)
    a = nc.WeylElement.generator(d.alpha, 1, 0)
    table = nc.hat_functional(a, d, box)
    assert table.shape == (7, 7)
    assert nc.tomita_check(a, d, box) < 1e-7


def test_fejer_errors_decrease():
    d = nc.DiffeoSpec.rotation(GOLDEN)
    box = nc.TruncationBox(8, 8, 128)
    a = nc.WeylElement(GOLDEN, 2, 2)
    for m in range(-2, 3):
        for n in range(-2, 3):
            a[m, n] = 1.0 / (1 + m * m + n * n)
    errs = [nc.fejer_mean(a, d, box, N)["l2_error"] for N in (1, 2, 4, 8)]
    assert all(x > y for x, y in zip(errs, errs[1:]))


def test_dirac_rotation_closed_form():
    ctx = nc.DiracContext(nc.DiffeoSpec.rotation(GOLDEN), nc.TruncationBox(3, 3, 32))
    for k, l, r, s in [(1, 0, 1, 0), (2, 1, 1, 1), (-1, 2, -1, 2)]:
        closed = nc.matrix_element_closed_form(0.5, k, l, r, s, ctx)
        oracle = nc.matrix_element_oracle(0.5, k, l, r, s, ctx)
        assert abs(closed - oracle) < 1e-12


def test_config_errors_are_raised():
    with pytest.raises(nc.ConfigError):
        nc.ExperimentConfig.from_dict({"diffeo": {"alpha": 0.7}})


def test_verify_rotation_config():
    configs = os.environ.get("NCTORUS_CONFIGS", os.path.join(os.path.dirname(__file__), "../../configs"))
    cfg = nc.load_config(os.path.join(configs, "rotation.json"))
    report = nc.run_verify(cfg)
    assert report["passed"], [s for s in report["suites"] if not s["passed"]]


@pytest.mark.skipif("NCTORUS_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_growth(tmp_path):
    out = tmp_path / "growth"
    subprocess.run([os.environ["NCTORUS_CLI"], "growth", "--out", str(out)], check=True)
    lines = (out / "growth.csv").read_text().splitlines()
    assert lines[0] == "n,Gamma,a,a_neg"
    meta = json.loads((out / "metadata.json").read_text())
    assert meta["command"] == "growth"

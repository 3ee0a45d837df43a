import numpy as np
import pytest

from dqqpft.cli import main
from dqqpft.io import read_qcsv, write_qcsv
from dqqpft.params import preset_qft
from dqqpft.signal import QSignal2D, rel_deviation
from dqqpft.transform import make_config
from oracles import rand_params, rand_signal


@pytest.fixture
def example_qcsv(tmp_path):
    p1, p2 = preset_qft()
    cfg = make_config(p1, p2, 2, 2)
    path = tmp_path / "example2x2.qcsv"
    write_qcsv(path, QSignal2D.from_real([[35.0, 30.0], [25.0, 20.0]]), cfg)
    return path


@pytest.mark.parametrize("method", ["fast", "direct"])
def test_forward_worked_example(example_qcsv, tmp_path, method):
    out = tmp_path / "spec.qcsv"
    rc = main(["forward", "--preset", "qft", "--in", str(example_qcsv),
               "--out", str(out), "--method", method])
    assert rc == 0
    spec, _ = read_qcsv(out)
    np.testing.assert_allclose(spec.w, [[55.0, 5.0], [10.0, 0.0]], atol=1e-12)


def test_forward_then_inverse_reproduces_input(tmp_path):
    rng = np.random.default_rng(0)
    p1, p2 = rand_params(rng), rand_params(rng)
    cfg = make_config(p1, p2, 5, 6, 0.7, 1.3)
    sig = rand_signal(rng, 5, 6)
    src = tmp_path / "src.qcsv"
    write_qcsv(src, sig, cfg)
    spec = tmp_path / "spec.qcsv"
    back = tmp_path / "back.qcsv"
    assert main(["forward", "--in", str(src), "--out", str(spec)]) == 0
    assert main(["inverse", "--in", str(spec), "--out", str(back)]) == 0
    got, got_cfg = read_qcsv(back)
    assert rel_deviation(got, sig) < 1e-8
    assert got_cfg.p1 == cfg.p1  # params travel through the pipeline


def test_explicit_params_flag(tmp_path, example_qcsv):
    out = tmp_path / "spec.qcsv"
    rc = main(["forward", "--params", "0,1,0,0,0:0,1,0,0,0",
               "--in", str(example_qcsv), "--out", str(out)])
    assert rc == 0
    spec, _ = read_qcsv(out)
    np.testing.assert_allclose(spec.w, [[55.0, 5.0], [10.0, 0.0]], atol=1e-12)


def test_ppm_forward_and_inverse(tmp_path):
    from dqqpft.io import read_image_ppm, write_image_ppm
    rng = np.random.default_rng(1)
    rgb = rng.integers(0, 256, size=(4, 4, 3))
    img = QSignal2D.from_components(np.zeros((4, 4)), rgb[..., 0], rgb[..., 1], rgb[..., 2])
    src = tmp_path / "img.ppm"
    write_image_ppm(src, img, "pure")
    spec = tmp_path / "spec.qcsv"
    back = tmp_path / "back.ppm"
    assert main(["forward", "--preset", "qft", "--in", str(src), "--out", str(spec)]) == 0
    assert main(["inverse", "--in", str(spec), "--out", str(back)]) == 0
    got = read_image_ppm(back, "pure")
    np.testing.assert_array_equal(got.comps, img.comps)


def test_usage_errors_exit_2(tmp_path, example_qcsv, capsys):
    assert main(["forward", "--in", str(example_qcsv)]) == 2  # missing --out
    out = tmp_path / "o.qcsv"
    # conflicting parameter sources
    assert main(["forward", "--preset", "qft", "--params", "0,1,0,0,0:0,1,0,0,0",
                 "--in", str(example_qcsv), "--out", str(out)]) == 2
    # image input without parameters
    img = tmp_path / "img.ppm"
    img.write_bytes(b"P6\n1 1\n255\n" + bytes(3))
    assert main(["forward", "--in", str(img), "--out", str(out)]) == 2
    # b = 0 in the flag value is a usage problem
    assert main(["forward", "--params", "0,0,0,0,0:0,1,0,0,0",
                 "--in", str(example_qcsv), "--out", str(out)]) == 2
    # spectra must go to qcsv
    assert main(["forward", "--preset", "qft", "--in", str(example_qcsv),
                 "--out", str(tmp_path / "spec.ppm")]) == 2
    capsys.readouterr()


def test_io_errors_exit_3(tmp_path, capsys):
    out = tmp_path / "o.qcsv"
    assert main(["forward", "--preset", "qft", "--in", str(tmp_path / "nope.qcsv"),
                 "--out", str(out)]) == 3
    bad = tmp_path / "bad.qcsv"
    bad.write_text("2,2\n1,1\n0,0,0,0,0:0,1,0,0,0\n" + "1,0,0,0\n" * 4)
    assert main(["forward", "--in", str(bad), "--out", str(out)]) == 3
    capsys.readouterr()


def test_conv_with_check_report(tmp_path, example_qcsv, capsys):
    out = tmp_path / "conv.qcsv"
    rc = main(["conv", "--in", str(example_qcsv), "--in2", str(example_qcsv),
               "--out", str(out), "--check"])
    assert rc == 0
    captured = capsys.readouterr()
    assert "max_abs_deviation" in captured.out
    got, _ = read_qcsv(out)
    assert got.shape == (2, 2)


def test_conv_shape_mismatch_is_usage_error(tmp_path, example_qcsv):
    p1, p2 = preset_qft()
    other = tmp_path / "other.qcsv"
    write_qcsv(other, QSignal2D.zeros(3, 3), make_config(p1, p2, 3, 3))
    rc = main(["conv", "--in", str(example_qcsv), "--in2", str(other),
               "--out", str(tmp_path / "o.qcsv")])
    assert rc == 2


def test_bench_prints_speedup_table(capsys):
    assert main(["bench", "--repeats", "1"]) == 0
    out = capsys.readouterr().out
    assert "speedup" in out
    for size in ("16x16", "32x32", "64x64"):
        assert size in out


def test_verify_deterministic_and_green(capsys):
    assert main(["verify", "--seed", "42"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--seed", "42"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "RESULT PASS" in first
    assert "PROPERTY" in first and "DIAGNOSTIC" in first
    assert " FAIL " not in first

import json
import subprocess
import sys

import pytest

from skein import cli
from skein.cli import Config, main, parse_dims
from skein.cobordism import Morphism, parse_word, sucob_context
from skein.gram import GramReport
from skein.scalar import parse_poly
from skein.sequences import geometric_triple


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gram_latex_t2(capsys):
    code, out, _ = run(capsys, "gram", "--family", "T", "--m", "2", "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{bmatrix}")
    assert out.count("\\\\") == 12


def test_gram_s3_det(capsys):
    code, out, _ = run(capsys, "gram", "--family", "S", "--m", "3", "--det")
    obj = json.loads(out)
    assert code == 0
    assert obj["factored"] == "lambda^6 * (a0)^11 * (lambda * a0 - 2)^7 * (lambda * a0 - 4)"
    rep = GramReport.from_json(obj)
    assert rep.det == parse_poly("lambda^6 * a0^11 * (lambda * a0 - 2)^7 * (lambda * a0 - 4)")


def test_gram_xi(capsys):
    code, out, _ = run(capsys, "gram", "--family", "Xi", "--m", "2")
    obj = json.loads(out)
    assert obj["matrix"] == [["lambda * a0", "g0"], ["g0", "lambda * a0"]]
    code, out, _ = run(capsys, "gram", "--family", "Xi", "--m", "2", "--genus", "1", "--format", "csv")
    assert out.splitlines() == ["lambda^3 * a0,lambda^2 * g0", "lambda^2 * g0,lambda^3 * a0"]


def test_gram_sampled_reproducible(capsys):
    argv = ["gram", "--family", "T", "--m", "2", "--mode", "sampled", "--samples", "3", "--seed", "11"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    rep = GramReport.from_json(json.loads(first))
    assert rep.nonzero_samples() == 3 and len(rep.order_estimates) == 10
    _, other, _ = run(capsys, *argv[:-1], "12")
    assert other != first


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--max", "5")
    rows = parse_dims(out)
    assert rows[5]["stirling_sum"] == 257 and len(rows) == 6
    _, out, _ = run(capsys, "dims", "--max", "0")
    assert len(parse_dims(out)) == 1
    _, out, _ = run(capsys, "dims", "--max", "5", "--format", "csv")
    rows = parse_dims(out, "csv")
    assert len(rows) == 6 and rows[3]["t_size"] == 69
    _, out, _ = run(capsys, "dims", "--max", "2", "--format", "latex")
    assert "3 & 13" in out


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "relations")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(lines) == 1 and lines[0]["passed"]
    assert "seconds" not in lines[0]


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "2")
    names = [json.loads(l)["check"] for l in out.splitlines()]
    assert code == 0 and names == ["interpolation", "dimensions", "ranks"]


def test_evaluate(capsys):
    _, out, _ = run(capsys, "evaluate", "--target", "plus", "--n", "1")
    assert json.loads(out)["beta"] == "s * t"
    _, out, _ = run(capsys, "evaluate", "--target", "minus", "--n", "0")
    assert json.loads(out)["beta"] == "(-s * t) / lambda"
    _, out, _ = run(capsys, "evaluate", "--target", "wreath", "--n", "2")
    assert json.loads(out)["alpha"] == "2 * lambda * t"
    _, out, _ = run(capsys, "evaluate", "--target", "cobordism", "--word", "eps . phi . m . delta . u")
    assert json.loads(out) == {"value": "lambda * a0"}


def test_evaluate_roundtrip(capsys, tmp_path):
    _, out, _ = run(capsys, "evaluate", "--target", "cobordism", "--word", "m . (phi | theta)")
    obj = json.loads(out)
    f = Morphism.from_json(obj["terms"])
    assert f == parse_word("m . (phi | theta)", sucob_context())
    path = tmp_path / "d.json"
    path.write_text(json.dumps(obj["terms"]))
    _, again, _ = run(capsys, "evaluate", "--target", "cobordism", "--diagram", str(path))
    assert again == out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    q = ["1", "-1", "-1"]
    seqs = {"alpha": {"kind": "gf", "p": ["1", "1"], "q": q}, "beta": {"kind": "gf", "p": ["2"], "q": q},
            "gamma": {"kind": "gf", "p": ["1", "-3"], "q": q}}
    cfg.write_text(json.dumps({"seqs": seqs, "seed": 5}))
    code, out, _ = run(capsys, "gram", "--family", "Xi", "--m", "2", "--config", str(cfg), "--det")
    assert code == 0
    # alpha_1 = 2 and gamma_0 = 1 for these generating functions
    assert json.loads(out)["det"] == "3"
    c = Config.from_json(Config(seqs=geometric_triple(), seed=3).to_json())
    assert c.seed == 3 and c.seqs == geometric_triple()


def test_exit_codes(capsys, tmp_path, monkeypatch):
    assert run(capsys, "gram", "--family", "T", "--m", "1", "--config", str(tmp_path / "none"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "gram", "--family", "T", "--m", "1", "--config", str(bad))[0] == 2
    assert run(capsys, "gram", "--family", "T", "--m", "1", "--seed", str(2 ** 64))[0] == 2
    assert run(capsys, "evaluate", "--target", "cobordism", "--word", "m m")[0] == 2
    assert run(capsys, "evaluate", "--target", "plus")[0] == 2
    assert run(capsys, "verify", "--only", "nothing")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["gram", "--family", "Q", "--m", "1"])
    assert exc.value.code == 2

    def boom(*a, **k):
        raise ArithmeticError("forced")
    monkeypatch.setattr(cli, "gram_report", boom)
    code, _, err = run(capsys, "gram", "--family", "T", "--m", "1")
    assert code == 3 and "forced" in err


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "skein", "gram", "--family", "T", "--m", "1", "--det",
            "--mode", "sampled", "--samples", "2", "--seed", "4"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a

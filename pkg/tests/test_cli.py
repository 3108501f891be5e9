import io
import json
import subprocess
import sys

import numpy as np
import pytest
from scipy import stats

from gammatilt.cli import (EXIT_NUMERIC, EXIT_OK, EXIT_SPEC, EXIT_UNSUPPORTED, EXIT_VERIFY,
                           SpecError, build_dist, format_value, main, parse_grid, parse_params,
                           resolve_seed)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestTables:
    def test_occupation_density(self):
        code, text = run("pdf", "--family", "lamperti_occ", "--param", "alpha=0.5",
                         "--param", "p=0.5", "--at", "0.5")
        assert code == EXIT_OK
        header, row = text.splitlines()
        assert header == "x,pdf"
        assert float(row.split(",")[1]) == pytest.approx(2 / np.pi, rel=1e-14)

    def test_uniform_mean_density(self):
        code, text = run("pdf", "--family", "dpuni", "--at", "0.5", "--no-header")
        assert code == EXIT_OK
        assert float(text.split(",")[1]) == pytest.approx(2 * np.e / np.pi, rel=1e-14)

    def test_quantile_median(self):
        code, text = run("quantile", "--family", "lamperti_x", "--param", "alpha=0.5",
                         "--at", "0.5", "--no-header")
        assert code == EXIT_OK
        assert text == "0.500000000000000,1.00000000000000\n"

    def test_grid_and_repeated_points(self):
        code, text = run("cdf", "--family", "lamperti_x", "--param", "alpha=0.3",
                         "--at", "1", "--grid", "0.5:2:4", "--no-header")
        assert code == EXIT_OK
        xs = [float(line.split(",")[0]) for line in text.splitlines()]
        assert xs == [1.0, 0.5, 1.0, 1.5, 2.0]
        assert text.endswith("\n")

    def test_fixed_precision(self):
        assert format_value(1.0) == "1.00000000000000"
        assert format_value(0.1) == "0.100000000000000"
        assert format_value(1234567.0) == "1234567.00000000"
        assert len(format_value(np.pi).replace(".", "")) == 15

    def test_spec_file_and_override(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"family": "lamperti_occ", "params": {"alpha": 0.5, "p": 0.9}}))
        code, text = run("pdf", "--spec-file", str(path), "--param", "p=0.5", "--at", "0.5",
                         "--no-header")
        assert code == EXIT_OK
        assert float(text.split(",")[1]) == pytest.approx(2 / np.pi)

    def test_base_parameters(self):
        code, text = run("pdf", "--family", "mean", "--param", "theta=1",
                         "--param", "base=arcsine", "--at", "0.5", "--no-header")
        assert code == EXIT_OK
        assert float(text.split(",")[1]) == pytest.approx(stats.beta(1.5, 1.5).pdf(0.5), rel=1e-9)
        code, _ = run("pdf", "--family", "prop513", "--param", "alpha=0.5", "--param",
                      "H=rho_alpha", "--param", "H.alpha=0.5", "--at", "0.5")
        assert code == EXIT_OK


class TestSampling:
    def test_reproducible(self):
        a = run("sample", "--family", "linnik", "--param", "alpha=0.5", "--param", "theta=1",
                "--n", "3", "--seed", "7")
        b = run("sample", "--family", "linnik", "--param", "alpha=0.5", "--param", "theta=1",
                "--n", "3", "--seed", "7")
        assert a == b
        assert a[0] == EXIT_OK and len(a[1].splitlines()) == 3

    def test_seed_precedence(self, monkeypatch):
        assert resolve_seed(5, {"GGC_SEED": "9"}) == 5
        assert resolve_seed(None, {"GGC_SEED": "9"}) == 9
        assert resolve_seed(None, {}) == 0
        with pytest.raises(SpecError):
            resolve_seed(None, {"GGC_SEED": "x"})
        monkeypatch.setenv("GGC_SEED", "7")
        env_run = run("sample", "--family", "stable", "--param", "alpha=0.5", "--n", "2")
        flag_run = run("sample", "--family", "stable", "--param", "alpha=0.5", "--n", "2",
                       "--seed", "7")
        assert env_run == flag_run

    def test_arcsine_mean_is_semicircle(self):
        code, text = run("sample", "--family", "mean", "--param", "base=arcsine",
                         "--param", "theta=1", "--n", "100000")
        assert code == EXIT_OK
        draws = np.array(text.split(), dtype=float)
        assert draws.size == 100000
        assert stats.kstest(draws, stats.beta(1.5, 1.5).cdf).statistic <= 0.006


class TestExitCodes:
    def test_unknown_family(self):
        assert run("sample", "--family", "nope")[0] == EXIT_UNSUPPORTED
        assert run("pdf", "--family", "nope", "--at", "1")[0] == EXIT_UNSUPPORTED

    def test_missing_operation(self):
        assert run("pdf", "--family", "linnik", "--param", "alpha=0.5", "--param", "theta=1",
                   "--at", "1")[0] == EXIT_UNSUPPORTED

    @pytest.mark.parametrize("argv", [
        ("pdf", "--family", "lamperti_x", "--param", "alpha=1.5", "--at", "1"),
        ("pdf", "--family", "lamperti_x", "--param", "alpha=0.5", "--param", "bogus=1", "--at", "1"),
        ("pdf", "--family", "lamperti_x", "--param", "alpha=0.5"),
        ("pdf", "--family", "lamperti_x", "--param", "alpha", "--at", "1"),
        ("cdf", "--family", "lamperti_x", "--param", "alpha=0.5", "--grid", "1:2"),
        ("sample", "--family", "stable", "--param", "alpha=0.5", "--n", "0"),
        ("verify", "--filter", "no_such_case"),
        ("frobnicate",),
    ])
    def test_spec_errors(self, argv, capsys):
        assert run(*argv)[0] == EXIT_SPEC
        assert capsys.readouterr().err

    def test_numeric_failure(self):
        # uniform Y cannot be untilted at theta >= 1 and similar model errors map to 3
        code, _ = run("pdf", "--family", "mden", "--param", "alpha=0.5", "--param", "theta=1",
                      "--at", "nan")
        assert code in (EXIT_SPEC, EXIT_NUMERIC)

    def test_bad_spec_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run("pdf", "--spec-file", str(path), "--at", "1")[0] == EXIT_SPEC


class TestVerifyCommand:
    def test_linnik_cases(self, capsys):
        code, text = run("verify", "--filter", "thm41_*")
        lines = text.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 4
        recs = [json.loads(line) for line in lines]
        assert [r["id"] for r in recs] == sorted(r["id"] for r in recs)
        assert all(r["pass"] for r in recs)
        assert "4/4 cases passed" in capsys.readouterr().err

    def test_failure_exit_code(self, monkeypatch):
        from gammatilt.verify import suite
        from gammatilt.verify.suite import VerifyReport

        def fake(*args, **kwargs):
            return [VerifyReport("x", "a", "ks_vs_cdf", 10, 1.0, 0.5, False, 0.0, 0)]
        monkeypatch.setattr(suite, "run_identity_suite", fake)
        import gammatilt.verify as verify_pkg
        monkeypatch.setattr(verify_pkg, "run_identity_suite", fake)
        assert run("verify", "--filter", "prop33")[0] == EXIT_VERIFY


class TestHelpers:
    def test_parse_grid(self):
        np.testing.assert_allclose(parse_grid("0:1:3"), [0, 0.5, 1])
        with pytest.raises(SpecError):
            parse_grid("0:1:0")

    def test_parse_params(self):
        assert parse_params(["a=1", "H=uniform"]) == {"a": 1.0, "H": "uniform"}

    def test_build_dist_requires_family(self):
        with pytest.raises(SpecError):
            build_dist(None, {})

    def test_console_module(self):
        proc = subprocess.run([sys.executable, "-m", "gammatilt", "quantile", "--family",
                               "lamperti_x", "--param", "alpha=0.5", "--at", "0.5"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert proc.stdout == "u,quantile\n0.500000000000000,1.00000000000000\n"

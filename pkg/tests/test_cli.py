"""Command-line surface: configs, reports, determinism, exit codes."""

import contextlib
import io
import json

import pytest

from edslab.cli import (
    Report,
    format_config,
    load_config,
    load_config_bytes,
    main,
    run_command,
)

QCURVE = """\
[field]
kind = Q

[curve]
a4 = 1
a6 = 1

[point]
x = 0
y = 1

[params]
n_max = 10
"""

QTWIST = """\
[field]
kind = QT

[twist]
a = 1
b = 1
delta = T^3 + T + 1

[params]
n_max = 8
m_max = 4
"""

CROSS = """\
[field]
kind = QT

[twist]
a = 1
b = 1
delta = T^3 + T + 1

[twist2]
a = 2
b = 3
delta = T^3 + 2*T + 3

[params]
n_max = 6
"""

GM = """\
[field]
kind = QT

[params]
a = T
b = T + 1
n_max = 12
"""

FF = """\
[field]
kind = FpT
p = 5

[twist]
a = 1
b = 1
delta = T^3 + T + 1

[params]
N = 1
base_n = 3
i = 1
"""


@pytest.fixture(scope="module")
def configs(tmp_path_factory):
    root = tmp_path_factory.mktemp("configs")
    paths = {}
    for name, text in (
        ("qcurve", QCURVE),
        ("qtwist", QTWIST),
        ("cross", CROSS),
        ("gm", GM),
        ("ff", FF),
    ):
        p = root / f"{name}.ini"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestCommands:
    def test_curve_info(self, configs):
        code, out, _ = run(["curve-info", "--config", configs["qtwist"]])
        assert code == 0
        assert out.startswith("# command=curve-info\n# config=")
        assert "j_constant,true" in out

    def test_eds_seq(self, configs):
        code, out, _ = run(["eds-seq", "--config", configs["qcurve"], "--n-max", "6"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[3] == "n,deg_D,deg_over_n2,D"
        assert len(lines) == 3 + 1 + 6
        assert any(l.startswith("2,1,0.25,2") for l in lines)

    def test_gcd_table(self, configs):
        code, out, _ = run(["gcd-table", "--config", configs["cross"], "--n-max", "4"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[3] == "n1,n2,deg_gcd,gcd"
        assert len(lines) == 4 + 16
        assert all(l.split(",")[2] == "0" for l in lines[4:])

    def test_stability(self, configs):
        code, out, _ = run(["stability", "--config", configs["cross"], "--n-max", "6"])
        assert code == 0
        assert "modulus_estimate,1" in out
        assert "exceptional,\n" in out or out.rstrip().endswith("exceptional,")

    def test_lemma1(self, configs):
        code, out, _ = run(["lemma1", "--config", configs["qtwist"]])
        assert code == 0
        assert "all_ok,true" in out and "base_index,3" in out

    def test_divisibility(self, configs):
        code, out, _ = run(["divisibility", "--config", configs["qcurve"]])
        assert code == 0
        assert "all_ok,true" in out

    def test_divpoly_check(self, configs):
        code, out, _ = run(["divpoly-check", "--config", configs["qcurve"]])
        assert code == 0
        assert "all_ok,true" in out

    def test_gm_gcd(self, configs):
        code, out, _ = run(["gm-gcd", "--config", configs["gm"]])
        assert code == 0
        lines = out.strip().splitlines()
        table = [l for l in lines if l[0].isdigit()]
        nonzero = [
            l.split(",")[0]
            for l in table
            if len(l.split(",")) == 3 and l.split(",")[1] != "0"
        ]
        assert nonzero == ["6", "12"]
        assert "T^2 + T + 1" in out
        assert "order_all_ok,true" in out

    def test_ff_classify(self, configs):
        code, out, _ = run(["ff-classify", "--config", configs["ff"]])
        assert code == 0
        assert "n_plus,4" in out and "n_minus,1" in out and "n_excluded,0" in out
        assert "T + 4,1,minus," in out

    def test_ff_lowerbound(self, configs):
        code, out, _ = run(["ff-lowerbound", "--config", configs["ff"]])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[3] == "N,sign,n,pi,deg_pi,legendre,n_pi,annihilates_P,annihilates_Q"
        assert "1,1,9,T,1,1,9,true,true" in lines
        assert "1,-1,3,T + 4,1,-1,3,true,true" in lines
        assert "sum_deg,n,half_n,half_qN" in lines
        assert "4,9,4.5,2.5" in lines and "1,3,1.5,2.5" in lines
        assert "q_dependent,true" in out

    def test_ff_ppower(self, configs):
        code, out, _ = run(["ff-ppower", "--config", configs["ff"]])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[3] == "base_n,i,deg_base,deg_lifted,bound,holds,vacuous"
        assert lines[4] == "3,1,4,110,20,true,false"

    def test_count_points(self, configs):
        code, out, _ = run(["count-points", "--config", configs["ff"]])
        assert code == 0
        assert "count,a1" in out and "9,-3" in out


class TestOutput:
    def test_csv_deterministic(self, configs):
        runs = [run(["gcd-table", "--config", configs["cross"]]) for _ in range(2)]
        assert runs[0] == runs[1] and runs[0][0] == 0

    def test_jsonl_deterministic_and_typed(self, configs):
        code, out, _ = run(
            ["ff-lowerbound", "--config", configs["ff"], "--format", "jsonl"]
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith('{"record":"header","command":"ff-lowerbound"')
        recs = [json.loads(l) for l in lines]
        assert any(
            r.get("n_pi") == 9 and r.get("annihilates_P") is True for r in recs
        )
        again = run(["ff-lowerbound", "--config", configs["ff"], "--format", "jsonl"])
        assert again[1] == out

    def test_out_file(self, configs, tmp_path):
        dest = tmp_path / "out.csv"
        code, out, _ = run(
            ["count-points", "--config", configs["ff"], "--out", str(dest)]
        )
        assert code == 0 and out == ""
        assert dest.read_text().startswith("# command=count-points")


class TestExitCodes:
    def write(self, tmp_path, text):
        p = tmp_path / "cfg.ini"
        p.write_text(text)
        return str(p)

    def test_small_characteristic(self, tmp_path):
        path = self.write(tmp_path, FF.replace("p = 5", "p = 3"))
        code, _, err = run(["count-points", "--config", path])
        assert code == 1 and "at least 5" in err

    def test_constant_delta(self, tmp_path):
        path = self.write(tmp_path, FF.replace("delta = T^3 + T + 1", "delta = 1"))
        code, _, err = run(["ff-classify", "--config", path])
        assert code == 1 and "vacuous" in err

    def test_unknown_key(self, tmp_path):
        path = self.write(tmp_path, QCURVE.replace("n_max = 10", "n_maxx = 10"))
        code, _, err = run(["eds-seq", "--config", path])
        assert code == 1 and "unknown key" in err

    def test_sectionless_file(self, tmp_path):
        path = self.write(tmp_path, "kind = Q\n")
        assert run(["eds-seq", "--config", path])[0] == 1

    def test_unknown_command(self, configs):
        assert run(["frobnicate", "--config", configs["qcurve"]])[0] == 1

    def test_missing_file(self, tmp_path):
        assert run(["eds-seq", "--config", str(tmp_path / "missing.ini")])[0] == 1

    def test_missing_config_flag(self):
        assert run(["eds-seq"])[0] == 1

    def test_doctored_point(self, tmp_path):
        path = self.write(tmp_path, QCURVE.replace("x = 0", "x = 1"))
        code, _, err = run(["eds-seq", "--config", path])
        assert code == 2

    def test_torsion_point(self, tmp_path):
        path = self.write(
            tmp_path,
            "[field]\nkind = Q\n\n[curve]\na6 = 1\n\n[point]\nx = 2\ny = 3\n\n"
            "[params]\nn_max = 8\n",
        )
        code, _, err = run(["eds-seq", "--config", path])
        assert code == 2 and "finite order" in err

    def test_kind_mismatches(self, configs):
        code, _, err = run(["gm-gcd", "--config", configs["ff"]])
        assert code == 1 and "QT" in err
        code, _, err = run(["ff-classify", "--config", configs["qtwist"]])
        assert code == 1 and "FpT" in err

    def test_twist_without_canonical_point(self, tmp_path):
        path = self.write(
            tmp_path, "[field]\nkind = QT\n\n[twist]\na = 1\nb = 2\ndelta = T^2 + 1\n"
        )
        code, _, err = run(["eds-seq", "--config", path])
        assert code == 1 and "canonical" in err


class TestConfigApi:
    def test_round_trip(self, configs):
        cfg = load_config(configs["cross"])
        printed = format_config(cfg)
        cfg2 = load_config_bytes(printed.encode())
        assert cfg2 == cfg
        assert cfg.digest and cfg2.digest

    def test_run_command_programmatic(self, configs):
        cfg = load_config(configs["qcurve"])
        rep = run_command(cfg, "eds-seq", n_max=4)
        assert isinstance(rep, Report)
        assert len(rep.sections[0].rows) == 4

    def test_override_validation(self, configs):
        cfg = load_config(configs["qcurve"])
        from edslab.errors import ValidationError

        with pytest.raises(ValidationError):
            run_command(cfg, "eds-seq", n_max=0)

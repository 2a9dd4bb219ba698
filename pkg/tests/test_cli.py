import io
import json
import subprocess
import sys

import pytest

from expected_tables import expected_dims
from gf2bundle import acceptance
from gf2bundle.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_coh_table_json():
    code, out, _ = call("coh-table", "--amin", "-5", "--amax", "4", "--bmin", "-5", "--bmax", "3")
    assert code == EXIT_OK
    data = json.loads(out)
    for i, a in enumerate(data["a"]):
        for j, b in enumerate(data["b"]):
            assert tuple(data[f"h{k}"][i][j] for k in range(5)) == expected_dims(a, b)


def test_coh_table_text_layout():
    code, out, _ = call("coh-table", "--format", "text", "--amin=-1", "--amax=0", "--bmin=-1", "--bmax=0")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("h^0 E(a,b)")
    # the zero at (-1,-1) is left blank, so 3 sits in the b = 0 column
    assert lines[3].split() == ["-1", "|", "3"]
    assert lines[4].split() == ["0", "|", "3", "19"]
    assert len(lines[3]) == len(lines[4])


def test_chern():
    code, out, _ = call("chern", "--format", "text")
    assert code == EXIT_OK
    assert "c(E0) = 1+L+h+2L^2+Lh+2h^2" in out
    assert "c2(E(0,0)) = 4L^2+5Lh+4h^2" in out
    code, out, _ = call("chern", "--twist=-1,0")
    assert json.loads(out)["c2"] == {"L^2": 2, "Lh": 2, "h^2": 4}


def test_chi_and_betti():
    code, out, _ = call("chi", "--twist=-1,-1")
    assert code == EXIT_OK and json.loads(out)["chi_monad"] == -1
    code, out, _ = call("betti-hf")
    assert code == EXIT_OK and json.loads(out)["mismatches"] == []


def test_jumping():
    code, out, _ = call("jumping", "--point", "1:1:1")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["jumping_line"] == "a+b+c"
    assert sorted(map(tuple, data["splitting_types"].values())) == [(2, 1)] * 6 + [(3, 0)]


def test_surface_example():
    code, out, _ = call("surface", "--w", "b+c,b+c,x+z,a+c,z,y,1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["classification"] == "F-singular"
    assert data["D_L"] == "a^2*b+b^3+a^2*c+a*b*c+b^2*c+a*c^2+c^3"
    assert data["D_h"] == "y^3+x^2*z+x*y*z+x*z^2+z^3"


def test_reducible_and_minimal():
    code, out, _ = call("reducible")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["cycle_class_Y1"] == [1, 2, 4] and data["cycle_class_Y2"] == [3, 3, 0]
    code, out, _ = call("minimal", "--c", "0,1,1")
    data = json.loads(out)
    assert data["cycle_class"] == [2, 2, 4] and data["smooth"] is False


def test_output_is_byte_stable():
    runs = [call("surface", "--random", "--seed", "12", "--no-half-fibers") for _ in range(2)]
    assert runs[0] == runs[1]
    assert runs[0][0] == EXIT_OK
    other = call("surface", "--random", "--seed", "13", "--no-half-fibers")
    assert json.loads(other[1])["w"] != json.loads(runs[0][1])["w"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["surface"],
        ["surface", "--w", "a,b"],
        ["surface", "--w", "a^,0,0,0,0,0,0"],
        ["surface", "--w", "0,0,0,0,0,0,0"],
        ["jumping", "--point", "0:0:0"],
        ["jumping", "--point", "1:x:0"],
        ["minimal", "--c", "0,0,0"],
        ["coh-table", "--amin", "3", "--amax", "1"],
        ["chern", "--twist", "1"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert json.loads(err)["error"] == "usage"


def test_selftest_subset():
    code, out, _ = call("selftest", "--only", "5", "11", "--format", "text")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("[PASS]  5")
    assert len(out.splitlines()) == 2


def test_selftest_reports_failures(monkeypatch):
    broken = ((5, "always fails", lambda seed: (False, "forced")),)
    monkeypatch.setattr(acceptance, "CHECKS", broken)
    code, out, err = call("selftest", "--only", "5")
    assert code == EXIT_FAILED
    assert json.loads(out)["passed"] is False
    assert json.loads(err)["error"] == "verification"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gf2bundle", "chi"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chi_closed"] == 19

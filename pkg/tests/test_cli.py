import json
import os
import subprocess
import sys

import pytest

from lamphoro.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist(capsys):
    assert run(capsys, "dist", "{-2,1,3};-1", "{};0") == (0, "11 (A=-2 B=4 C=1)\n", "")


def test_spec_examples(capsys):
    assert run(capsys, "horo-eval", "spine:0", "{};2")[1] == "-2\n"
    assert run(capsys, "classify", '{"family":"spine","l":3}')[1] == "Spine(3)\n"


def test_words_are_accepted(capsys):
    assert run(capsys, "dist", "at t^-1", "{0};0")[1].startswith("0 ")
    code, out, _ = run(capsys, "geodesic", "{};0", "{0};0")
    assert out == "2: at t^-1\n"


def test_json_mode_fields(capsys):
    code, out, _ = run(capsys, "dist", "{-2,1,3};-1", "{};0", "--json")
    rec = json.loads(out)
    assert rec["schema_version"] == 1 and rec["distance"] == 11
    assert (rec["A"], rec["B"], rec["C"]) == (-2, 4, 1)
    code, out, _ = run(capsys, "classify", '{"family":"ray","direction":"-","lit":[2]}', "--json")
    assert json.loads(out)["horofunction"] == "bus-:{2}"


def test_parse_errors_exit_2(capsys):
    code, out, err = run(capsys, "dist", "{1,};0", "{};0")
    assert code == 2 and out == "" and "position 3" in err
    assert run(capsys, "classify", '{"family":"bogus"}')[0] == 2
    assert run(capsys, "act", "t", "rib+:{3};1")[0] == 2


def test_caps_exit_3(capsys, monkeypatch):
    assert run(capsys, "ball", "--radius", "13")[0] == 3
    assert run(capsys, "classify", '{"family":"spine","l":1}', "--horizon", "65")[0] == 3
    assert run(capsys, "orbit", "t", "H+", "--budget", "65")[0] == 3
    assert run(capsys, "ball", "--radius", "3", "--radius-cap", "2")[0] == 3


def test_env_cap_override():
    env = dict(os.environ, LAMPHORO_RADIUS_CAP="2")
    proc = subprocess.run(
        [sys.executable, "-m", "lamphoro", "growth", "--radius", "3"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["ball", "--radius", "2"],
        ["growth", "--radius", "4"],
        ["export-dot", "--radius", "1"],
        ["horo-limit", '{"family":"rib+","f":"{-1};1"}', "--radius", "2"],
        ["horo-limit", '{"family":"explicit","elements":["{};0","{};1"],"tail":"cycle"}', "--radius", "1"],
        ["classify", '{"family":"custom","rules":[{"growing":[[-1,0]]},{"growing":[[1,0]]}]}'],
        ["act", "{0};1", "bus-:{-1}"],
        ["orbit", "t^-1", "spine:2", "--budget", "3"],
        ["dynamics", "t^-1", "bus+:{0}"],
        ["topology-limit", '{"family":"spine","l":[1,0]}', "H+", "--radius", "2"],
        ["topology-limit", '{"family":"spine","l":[-1,0]}', "H+", "--points", "{};1", "--budget", "4"],
        ["rib-enum", "1", "-2"],
        ["rib-enum", "0", "tip", "--direction", "minus"],
    ],
)
def test_every_verb_text_and_json(capsys, argv):
    code, text, _ = run(capsys, *argv)
    assert code == 0 and text
    code, js, _ = run(capsys, *argv, "--json")
    assert code == 0
    for line in js.splitlines():
        assert json.loads(line)["schema_version"] == 1


def test_out_file(tmp_path, capsys):
    path = tmp_path / "g.csv"
    assert run(capsys, "growth", "--radius", "3", "--out", str(path))[1] == ""
    assert path.read_text().splitlines()[0] == "radius,sphere_size,ball_size"


def test_specific_outputs(capsys):
    assert run(capsys, "topology-limit", '{"family":"spine","l":[1,0]}', "H+", "--radius", "3")[1] == "ConvergedBy(3)\n"
    out = run(capsys, "rib-enum", "1", "-2")[1].splitlines()
    assert out == ["count 4", "rib+:{-2};1", "rib+:{-2,-1};1", "rib+:{-2,0};1", "rib+:{-2,-1,0};1"]
    assert run(capsys, "dynamics", "t", "H+")[1].splitlines()[-1] == "reached H+ at n=0"

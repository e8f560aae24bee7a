import json

import pytest

from coring_lab.cli import main
from coring_lab.fixtures import BUILDERS, build, load_shipped, shipped_path
from coring_lab.io import FixtureError, dumps, loads


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_shipped_json_matches_builder(name):
    assert shipped_path(name).read_text(encoding="utf-8") == dumps(build(name))


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_round_trip(name):
    fx = build(name)
    again = loads(dumps(fx))
    assert dumps(again) == dumps(fx)
    F = fx.field
    for key, c in fx.corings.items():
        assert F.equal(c.delta, again.corings[key].delta)
        assert F.equal(c.eps, again.corings[key].eps)
    for key, m in fx.comodules.items():
        assert F.equal(m.rho, again.comodules[key].rho)


def test_rational_scalars_survive_serialization():
    fx = load_shipped("FIX-TRIV")
    data = json.loads(dumps(fx))
    data["algebras"]["k"]["unit"] = ["3/3"]
    assert loads(json.dumps(data)).algebras["k"].unit[0] == 1


def test_malformed_fixtures():
    with pytest.raises(FixtureError, match="line 1, column"):
        loads("{not json")
    data = json.loads(dumps(build("FIX-GF4")))
    data["schema"] = "other"
    with pytest.raises(FixtureError):
        loads(json.dumps(data))
    data = json.loads(dumps(build("FIX-GF4")))
    data["corings"]["C"]["bimodule"] = "missing"
    with pytest.raises(FixtureError):
        loads(json.dumps(data))
    data = json.loads(dumps(build("FIX-GF4")))
    data["bimodules"]["Sigma"]["ract"] = [[["1"]]]
    with pytest.raises(FixtureError, match="shape"):
        loads(json.dumps(data))


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["comatrix", "FIX-TRIV"], 0),
        (["comatrix", "FIX-GF4"], 0),
        (["sweedler", "FIX-SW"], 0),
        (["dual-coring", "FIX-XPROD"], 0),
        (["grouplike", "FIX-XPROD"], 0),
        (["can", "FIX-XPROD", "--galois"], 0),
        (["can", "FIX-NONGALOIS", "--galois"], 1),
        (["descent", "FIX-SW"], 0),
        (["generator-report", "FIX-NONFLAT"], 0),
        (["cosemisimple", "FIX-MAT"], 0),
        (["cosemisimple", "FIX-DUALNUM"], 1),
        (["coend-crosscheck", "FIX-SW"], 0),
        (["coend-crosscheck", "FIX-XPROD"], 0),
        (["check-algebra", "MUT-ALGEBRA"], 1),
        (["check-coring", "MUT-CORING"], 1),
        (["check-coring", "MUT-COMODULE"], 1),
        (["check-coring", "MUT-CORING-HOM"], 1),
        (["check-coring", "FIX-SW"], 0),
        (["grouplike", "FIX-TRIV"], 3),
        (["comatrix", "no-such-fixture.json"], 2),
        (["descent", "FIX-SW", "--test-modules", "nope"], 2),
    ],
)
def test_cli_exit_codes(capsys, argv, expected):
    code, _ = _run(capsys, *argv)
    assert code == expected


def test_cli_galois_text(capsys):
    code, out = _run(capsys, "can", "FIX-XPROD", "--galois")
    assert code == 0
    assert "PASS  Galois" in out.out and "rank 4/4" in out.out
    assert out.out.strip().endswith("result: PASS")


def test_cli_failure_has_witness(capsys):
    code, out = _run(capsys, "check-coring", "MUT-CORING")
    assert code == 1
    assert "witness=" in out.out


def test_cli_json_output(capsys):
    code, out = _run(capsys, "comatrix", "FIX-TRIV", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["ok"] is True
    assert data["facts"]["dim_coring"] == 1


def test_cli_reads_files(capsys, tmp_path):
    path = tmp_path / "gf4.json"
    path.write_text(dumps(build("FIX-GF4")), encoding="utf-8")
    code, out = _run(capsys, "comatrix", str(path))
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    code, out = _run(capsys, "comatrix", str(bad))
    assert code == 2 and "input error" in out.err


@pytest.mark.parametrize("argv", [["cosemisimple", "FIX-MAT", "--seed", "4"], ["descent", "FIX-SW", "--json"], ["grouplike", "FIX-SW"]])
def test_cli_output_is_byte_identical(capsys, argv):
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv)
    assert first.out == second.out


def test_cli_rejects_negative_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cosemisimple", "FIX-MAT", "--seed", "-1"])
    assert exc.value.code == 2

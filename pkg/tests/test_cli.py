"""Test the command line interface end to end."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import json
from argparse import Namespace
from pathlib import Path

from pyarrow import parquet
from pytest import CaptureFixture, MonkeyPatch

import reslat.subcommands
from reslat import FinAlgebra, document
from reslat.base import CheckReport
from reslat.chains import compile_code, parse_code
from reslat.cli import COMMANDS, run
from reslat.constructions import abs_chain, c4, sugihara_chain
from reslat.core import complete_residuals
from reslat.exceptions import InvariantBreach
from reslat.subcommands import construct, enumerate_class

ALGEBRAS = Path("tests/test_data/algebras")

TRIVIAL = FinAlgebra(n=1, unit=0, prod=[[0]])
TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])
GODEL_3 = compile_code(parse_code("n")).algebra


def _write(directory: Path, name: str, algebra: FinAlgebra) -> str:
    path = directory / f"{name}.json"
    document.dump(algebra, path)
    return str(path)


def test_construct_c4(capsys: CaptureFixture) -> None:
    assert run(["construct", "--c4"]) == 0
    assert document.loads(capsys.readouterr().out) == c4()


def test_construct_output(tmp_path: Path) -> None:
    path = tmp_path / "c.json"
    assert run(["construct", "--code", "C", "--output", str(path)]) == 0
    assert document.load(path) == c4()


def test_construct_sugihara(capsys: CaptureFixture) -> None:
    assert run(["construct", "--sugihara", "2"]) == 0
    assert document.loads(capsys.readouterr().out) == sugihara_chain(2)


def test_construct_tensor(tmp_path: Path, capsys: CaptureFixture) -> None:
    skeleton = _write(tmp_path, "s3", sugihara_chain(1))
    assert run(["construct", "--tensor", skeleton, "1,3,1"]) == 0
    algebra = document.loads(capsys.readouterr().out)
    assert algebra.n == 5
    assert algebra.unit == 3


def test_construct_catalan_sum(tmp_path: Path, capsys: CaptureFixture) -> None:
    trivial = _write(tmp_path, "trivial", TRIVIAL)
    assert run(["construct", "--catalan-sum", trivial, trivial]) == 0
    assert document.loads(capsys.readouterr().out) == complete_residuals(TWO_CHAIN)


def test_construct_requires_one_choice() -> None:
    assert run(["construct"]) == 2
    assert run(["construct", "--c4", "--abs", "2"]) == 2


def test_check(capsys: CaptureFixture) -> None:
    assert run(["check", str(ALGEBRAS / "c4.json")]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_check_broken(capsys: CaptureFixture) -> None:
    assert run(["check", str(ALGEBRAS / "broken.json")]) == 1
    assert "identity" in capsys.readouterr().out


def test_check_json(capsys: CaptureFixture) -> None:
    assert run(["--json", "check", str(ALGEBRAS / "broken.json")]) == 1
    assert json.loads(capsys.readouterr().out)


def test_check_missing_file(capsys: CaptureFixture) -> None:
    assert run(["check", "does-not-exist.json"]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_props(capsys: CaptureFixture) -> None:
    assert run(["props", str(ALGEBRAS / "c4.json")]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "idempotent",
        "conservative",
        "totally_ordered",
    ]


def test_props_congruences(capsys: CaptureFixture) -> None:
    assert run(["props", "--congruences", str(ALGEBRAS / "c4.json")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[3:] == ["congruences=2", "simple", "subdirectly-irreducible"]


def test_props_json(tmp_path: Path, capsys: CaptureFixture) -> None:
    path = _write(tmp_path, "godel", GODEL_3)
    assert run(["--json", "props", "--congruences", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["commutative"]
    assert not data["odd_sugihara"]
    assert data["congruences"] == 3
    assert not data["simple"]
    assert data["subdirectly-irreducible"]


def test_props_invalid() -> None:
    assert run(["props", str(ALGEBRAS / "broken.json")]) == 1


def test_enumerate(capsys: CaptureFixture) -> None:
    assert run(["enumerate", "--class", "ic", "--size", "4"]) == 0
    assert capsys.readouterr().out.splitlines() == ["nn", "np", "pn", "pp", "C", "I"]


def test_enumerate_emit(tmp_path: Path, capsys: CaptureFixture) -> None:
    directory = tmp_path / "catalan"
    assert run(["enumerate", "--class", "catalan", "--size", "4", "--emit", str(directory)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5
    assert len(list(directory.glob("*.json"))) == 5


def test_count(capsys: CaptureFixture) -> None:
    assert run(["count", "--class", "cic", "--size", "10", "--methods", "formula,enumerate"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].split() == ["10", "256", "256"]


def test_count_bruteforce(capsys: CaptureFixture) -> None:
    argv = ["--json", "count", "--class", "catalan", "--from", "1", "--size", "4"]
    assert run(argv + ["--methods", "formula,enumerate,bruteforce"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"]
    assert [row["bruteforce"] for row in data["rows"]] == [1, 1, 2, 5]


def test_count_output(tmp_path: Path) -> None:
    path = tmp_path / "census.parquet"
    assert run(["count", "--class", "ic", "--from", "2", "--size", "6", "--output", str(path)]) == 0
    assert parquet.read_table(path).column("formula").to_pylist() == [1, 2, 6, 16, 44]


def test_count_unknown_method(capsys: CaptureFixture) -> None:
    assert run(["count", "--class", "ic", "--size", "4", "--methods", "guess"]) == 2
    assert "guess" in capsys.readouterr().err


def test_bruteforce(capsys: CaptureFixture) -> None:
    assert run(["bruteforce", "--size", "3", "--constraints", "conservative,commutative"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "2 models"


def test_bruteforce_too_large(capsys: CaptureFixture) -> None:
    assert run(["bruteforce", "--size", "7"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bruteforce_environment_bound(monkeypatch: MonkeyPatch) -> None:
    monkeypatch.setenv("RESLAT_MAX_BRUTE", "2")
    assert run(["bruteforce", "--size", "3"]) == 1


def test_decompose_code(capsys: CaptureFixture) -> None:
    assert run(["decompose", "--mode", "code", str(ALGEBRAS / "c4.json")]) == 0
    assert json.loads(capsys.readouterr().out) == {"code": "C"}


def test_decompose_skeleton(tmp_path: Path, capsys: CaptureFixture) -> None:
    path = _write(tmp_path, "godel", GODEL_3)
    assert run(["decompose", "--mode", "skeleton", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["elements"] == [2]
    assert data["fibers"] == [[0, 1, 2]]


def test_decompose_catalan(tmp_path: Path, capsys: CaptureFixture) -> None:
    path = _write(tmp_path, "two", complete_residuals(TWO_CHAIN))
    assert run(["decompose", "--mode", "catalan", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["label"] == "(oo)"
    assert data["first"]["n"] == 1
    assert data["second"]["n"] == 1


def test_decompose_wrong_class() -> None:
    assert run(["decompose", "--mode", "code", str(ALGEBRAS / "square.json")]) == 1


def test_amalgamate(tmp_path: Path, capsys: CaptureFixture) -> None:
    trivial = _write(tmp_path, "trivial", TRIVIAL)
    s3 = _write(tmp_path, "s3", sugihara_chain(1))
    argv = ["amalgamate", "--mode", "osm", trivial, s3, s3, "--map1", "1", "--map2", "1"]
    assert run(argv) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["d"]["n"] == 5
    assert data["j1"] == [0, 2, 4]
    assert data["j2"] == [1, 2, 3]


def test_amalgamate_incompatible(tmp_path: Path) -> None:
    two = _write(tmp_path, "two", TWO_CHAIN)
    positive = _write(tmp_path, "positive", compile_code(parse_code("p")).algebra)
    assert run(["amalgamate", two, two, positive, "--map1", "0,1", "--map2", "0,1"]) == 1


def test_fep(tmp_path: Path, capsys: CaptureFixture) -> None:
    path = _write(tmp_path, "abs", abs_chain(2))
    assert run(["fep", path, "--subset", "2,3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["carrier"] == [0, 1, 2, 3]
    assert data["algebra"]["n"] == 4


def test_export(capsys: CaptureFixture) -> None:
    assert run(["export", "--dot", str(ALGEBRAS / "c4.json")]) == 0
    out = capsys.readouterr().out
    assert "digraph order" in out
    assert "digraph preorder" in out


def test_export_output(tmp_path: Path) -> None:
    path = tmp_path / "c4.dot"
    assert run(["export", "--dot", str(ALGEBRAS / "c4.json"), "--both", "--output", str(path)]) == 0
    assert path.read_text(encoding="utf-8").count("digraph") == 1


def test_invariant_breach(monkeypatch: MonkeyPatch, capsys: CaptureFixture) -> None:
    def broken_build(_args: Namespace) -> FinAlgebra:
        raise InvariantBreach("construct", CheckReport([("identity", (0,))]))

    monkeypatch.setattr(construct, "build", broken_build)
    assert run(["construct", "--c4"]) == 3
    err = capsys.readouterr().err
    assert "invariant breach" in err
    assert "identity: [0]" in err


def test_missing_config_file() -> None:
    assert run(["--config-file", "does-not-exist.toml", "construct", "--c4"]) == 2


def test_config_file(tmp_path: Path) -> None:
    path = tmp_path / "reslat.toml"
    path.write_text("[oracle]\nmax_size = 2\n", encoding="utf-8")
    assert run(["--config-file", str(path), "bruteforce", "--size", "3"]) == 1


def test_no_arguments() -> None:
    assert run([]) == 2


def test_subcommand_modules_keep_builtin_names() -> None:
    assert COMMANDS["enumerate"][0] is enumerate_class
    assert "enumerate" not in vars(reslat.subcommands)

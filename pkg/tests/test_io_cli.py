"""Scalar literal grammar, file formats, CLI behavior, and report round-trips."""

import json

import pytest

from holo import io as hio
from holo.cli import run
from holo.errors import ParseError
from holo.scalars import alpha, i_unit, kth_roots, one, rational, sqrt2
from holo.signatures import DenseSignature, SymmetricSignature, Transform


def test_parse_scalar_basics():
    assert hio.parse_scalar("3/4") == rational(3) / 4
    assert hio.parse_scalar("i") == i_unit()
    assert hio.parse_scalar("a^2") == i_unit()
    assert hio.parse_scalar("a - a^3") == sqrt2()
    assert hio.parse_scalar("w8") == alpha()
    assert hio.parse_scalar("w24^3") == alpha()
    assert hio.parse_scalar("(1+i)*(1-i)") == rational(2)
    assert hio.parse_scalar("2^-1") == rational(1) / 2
    assert hio.parse_scalar("-3 + 2*i") == rational(-3) + i_unit() * 2


def test_parse_scalar_errors():
    with pytest.raises(ParseError):
        hio.parse_scalar("3 +")
    with pytest.raises(ParseError):
        hio.parse_scalar("q")
    with pytest.raises(ParseError):
        hio.parse_scalar("y")  # radical atom without a declaration


def test_format_parse_round_trip():
    values = [
        rational(0),
        rational(-7) / 3,
        i_unit() * 5 - alpha() * 2 + rational(1) / 4,
        sqrt2(),
        alpha() ** 3,
    ]
    for v in values:
        assert hio.parse_scalar(hio.format_scalar(v)) == v


def test_radical_round_trip():
    y = kth_roots((rational(1) + i_unit()).cyclotomic_part(), 2)[0]
    value = y * 3 + rational(1) / 2
    decl = hio.radical_declaration(value)
    assert decl is not None
    text = hio.format_scalar(value)
    atom = hio.parse_radical_declaration(decl)
    assert hio.parse_scalar(text, atom) == value


def test_signature_files(tmp_path):
    sig = {"kind": "dense", "arity": 2, "entries": ["1", "0", "0", "i"]}
    f = hio.signature_from_json(sig)
    assert isinstance(f, DenseSignature) and f[3] == i_unit()
    assert hio.signature_from_json(hio.signature_to_json(f)) == f

    sym = {"kind": "symmetric", "arity": 3, "values": ["3", "1", "3", "1"]}
    g = hio.signature_from_json(sym)
    assert isinstance(g, SymmetricSignature)
    assert hio.signature_from_json(hio.signature_to_json(g)) == g

    with pytest.raises(ParseError):
        hio.signature_from_json({"kind": "dense", "arity": 0, "entries": ["1"]})


def test_set_file():
    data = {
        "signatures": [
            {"name": "eq", "sig": {"kind": "symmetric", "arity": 2, "values": ["1", "0", "1"]}},
            {"kind": "dense", "arity": 1, "entries": ["1", "0"]},
        ]
    }
    sigs = hio.set_from_json(data)
    names = [nm for nm, _ in sigs]
    assert names == ["eq", "sig1"]
    with pytest.raises(ParseError):
        hio.set_from_json({"signatures": []})


def test_grid_file_round_trip():
    data = {
        "edges": 2,
        "signatures": [{"kind": "symmetric", "arity": 2, "values": ["1", "0", "1"]}],
        "vertices": [
            {"sig": 0, "incident": [0, 1]},
            {"sig": 0, "incident": [0, 1]},
        ],
    }
    grid = hio.grid_from_json(data)
    out = hio.grid_to_json(grid)
    again = hio.grid_from_json(out)
    assert again.edge_count == 2


def test_cli_classify(capsys):
    code = run(["classify", "[3,1,3,1]"])
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    assert code == 0
    assert report["label"] == "P1"
    assert report["theta"] == "0"
    assert report["witness"]["params"]["beta"] == "1/2"


def test_cli_check_affine(capsys):
    assert run(["check-affine", "(1,0,0,1)"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["decision"] == "yes"

    assert run(["check-affine", "(1,1,1,2)"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["decision"] == "no"


def test_cli_decide_and_witness_round_trip(tmp_path, capsys):
    set_file = tmp_path / "set.json"
    set_file.write_text(
        json.dumps(
            {
                "signatures": [
                    {
                        "kind": "dense",
                        "arity": 4,
                        "entries": "0 0 0 1 0 0 1 0 0 1 0 0 1 0 0 0".split(),
                    }
                ]
            }
        )
    )
    code = run(["decide", "P", str(set_file)])
    report = json.loads(capsys.readouterr().out)
    assert code == 0 and report["decision"] == "yes"
    # round-trip: parse the witness back and re-verify membership
    t = hio.transform_from_json(report["witness"])
    from holo.product import in_transformed_product

    g = hio.signature_from_json(
        {
            "kind": "dense",
            "arity": 4,
            "entries": "0 0 0 1 0 0 1 0 0 1 0 0 1 0 0 0".split(),
        }
    )
    assert in_transformed_product(g, t)


def test_cli_eval(tmp_path, capsys):
    grid_file = tmp_path / "grid.json"
    grid_file.write_text(
        json.dumps(
            {
                "edges": 2,
                "signatures": [
                    {"kind": "symmetric", "arity": 2, "values": ["1", "0", "1"]}
                ],
                "vertices": [
                    {"sig": 0, "incident": [0, 1]},
                    {"sig": 0, "incident": [0, 1]},
                ],
            }
        )
    )
    assert run(["eval", str(grid_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == "2"


def test_cli_transform(tmp_path, capsys):
    grid_file = tmp_path / "grid.json"
    grid_file.write_text(
        json.dumps(
            {
                "edges": 2,
                "signatures": [
                    {"kind": "symmetric", "arity": 2, "values": ["1", "0", "1"]}
                ],
                "vertices": [
                    {"sig": 0, "incident": [0, 1]},
                    {"sig": 0, "incident": [0, 1]},
                ],
            }
        )
    )
    # rational rotation: (3/5, 4/5)
    assert run(["transform", "--grid", str(grid_file),
                "--matrix", "3/5,4/5,-4/5,3/5"]) == 0
    report = json.loads(capsys.readouterr().out)
    grid = hio.grid_from_json(report["grid"])
    from holo.holant import eval_holant

    assert eval_holant(grid) == rational(2)


def test_cli_exit_codes(tmp_path, capsys):
    # parse error
    assert run(["classify", "[3,1,"]) == 1
    capsys.readouterr()
    # missing file
    assert run(["eval", str(tmp_path / "missing.json")]) == 1
    capsys.readouterr()
    # cap exceeded surfaces exit code 2
    set_file = tmp_path / "set5.json"
    set_file.write_text(
        json.dumps(
            {
                "signatures": [
                    {
                        "kind": "dense",
                        "arity": 3,
                        "entries": ["1", "1", "1", "1", "1", "1", "1", "3"],
                    }
                ]
            }
        )
    )
    code = run(["decide", "A", str(set_file), "--cap", "5"])
    report = json.loads(capsys.readouterr().out)
    assert code == 2 and report["decision"] == "cap_exceeded"


def test_cli_byte_determinism(capsys):
    run(["classify", "[1,0,-1,0]"])
    first = capsys.readouterr().out
    run(["classify", "[1,0,-1,0]"])
    second = capsys.readouterr().out
    assert first == second


def test_cli_symmetric_decide(tmp_path, capsys):
    set_file = tmp_path / "sym.json"
    set_file.write_text(
        json.dumps(
            {
                "signatures": [
                    {"kind": "symmetric", "arity": 3, "values": ["1", "0", "-1", "0"]},
                    {"kind": "symmetric", "arity": 2, "values": ["1", "0", "1"]},
                ]
            }
        )
    )
    assert run(["decide", "--symmetric", "P", str(set_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["decision"] == "yes"

import io
import json

import pytest

from chromatic_semigroups import parse_instance
from chromatic_semigroups.cli import main
from chromatic_semigroups.errors import (
    InstanceParseError,
    InstanceValidationError,
)

TWO_COLOR = {
    "dimension": 1,
    "colors": [{"name": "red", "generators": [[3]]},
               {"name": "blue", "generators": [[5]]}],
}

EXAMPLE_ONE_DOC = {
    "dimension": 1,
    "colors": [{"name": "c1", "generators": [[9], [16]]},
               {"name": "c2", "generators": [[11], [14]]},
               {"name": "c3", "generators": [[12], [13]]}],
    "targets": [[70]],
}


@pytest.fixture
def two_color_path(tmp_path):
    p = tmp_path / "inst.json"
    p.write_text(json.dumps(TWO_COLOR))
    return str(p)


@pytest.fixture
def example_one_path(tmp_path):
    p = tmp_path / "ex1.json"
    p.write_text(json.dumps(EXAMPLE_ONE_DOC))
    return str(p)


def test_parse_two_color(two_color_path):
    doc = parse_instance(two_color_path)
    assert doc.dimension == 1
    assert doc.colors == (("red", ((3,),)), ("blue", ((5,),)))
    s = doc.to_numerical()
    assert s.classes == ((3,), (5,))


def test_parse_example_one_document():
    doc = parse_instance(io.StringIO(json.dumps(EXAMPLE_ONE_DOC)))
    colored = doc.to_colored_semigroup()
    assert len(colored.columns) == 6
    assert colored.n_colors == 3
    assert doc.targets == ((70,),)


def test_parse_rejects_wrong_vector_length():
    bad = {"dimension": 3,
           "colors": [{"name": "a", "generators": [[1, 2]]}]}
    with pytest.raises(InstanceValidationError) as err:
        parse_instance(io.StringIO(json.dumps(bad)))
    assert "colors[0].generators[0]" in str(err.value)


def test_parse_rejects_duplicate_color_names():
    bad = {"dimension": 1,
           "colors": [{"name": "a", "generators": [[1]]},
                      {"name": "a", "generators": [[2]]}]}
    with pytest.raises(InstanceValidationError):
        parse_instance(io.StringIO(json.dumps(bad)))


def test_parse_rejects_non_integer_entries():
    bad = {"dimension": 1,
           "colors": [{"name": "a", "generators": [[1.5]]}]}
    with pytest.raises(InstanceValidationError):
        parse_instance(io.StringIO(json.dumps(bad)))
    bad["colors"][0]["generators"] = [[True]]
    with pytest.raises(InstanceValidationError):
        parse_instance(io.StringIO(json.dumps(bad)))


def test_parse_rejects_unknown_keys():
    bad = dict(TWO_COLOR)
    bad["extra"] = 1
    with pytest.raises(InstanceValidationError):
        parse_instance(io.StringIO(json.dumps(bad)))


def test_parse_reports_syntax_location():
    with pytest.raises(InstanceParseError) as err:
        parse_instance(io.StringIO("{broken"))
    assert "line 1" in str(err.value)


# ---------------------------------------------------------------------------
# CLI behaviour


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_member_exit_codes(two_color_path, capsys):
    code, out, _ = run_cli(capsys, "member", "--target", "8", two_color_path)
    assert code == 0 and "member: true" in out
    code, out, _ = run_cli(capsys, "member", "--target", "7", two_color_path)
    assert code == 1 and "member: false" in out


def test_usage_errors_exit_2(two_color_path, capsys):
    code, _, err = run_cli(capsys, "member", "--target", "x", two_color_path)
    assert code == 2 and "error" in err
    code, _, _ = run_cli(capsys, "definitely-not-a-subcommand")
    assert code == 2
    code, _, err = run_cli(capsys, "member", "--target", "5", "/nonexistent.json")
    assert code == 2


def test_chromatic_frobenius_text_and_json_agree(two_color_path, capsys):
    code, text, _ = run_cli(capsys, "chromatic-frobenius", "--k", "2",
                            two_color_path)
    assert code == 0
    assert "value: 15" in text
    assert "bounds: [7, 15]" in text
    code, out, _ = run_cli(capsys, "chromatic-frobenius", "--k", "2",
                           "--json", two_color_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 15
    assert payload["bounds"] == [7, 15]
    assert payload["gap_set"][-1] == 15
    # identical numeric content in both renderings
    assert f"value: {payload['value']}" in text
    assert f"gap_set: {payload['gap_set']}".replace("'", "") in text


def test_classify_cli(example_one_path, capsys):
    code, out, _ = run_cli(capsys, "classify", "--solution", "3,1,0,1,0,1",
                           "--target", "70", example_one_path)
    assert code == 0
    assert "chromatic: true" in out
    assert "colorful: false" in out
    code, _, err = run_cli(capsys, "classify", "--solution", "1,0,0,0,0,0",
                           "--target", "70", example_one_path)
    assert code == 2  # solution does not reach the target


def test_solve_cli(example_one_path, capsys):
    code, out, _ = run_cli(capsys, "solve", example_one_path)
    assert code == 0
    assert "solution_count: 32" in out


def test_cteg_verify_cli(capsys):
    code, out, _ = run_cli(capsys, "cteg", "--n", "6", "--verify")
    assert code == 0
    assert "expression_count: 6" in out
    assert "all_monochromatic: true" in out
    assert "[0, 63, 64]" in out  # sixth row of the n=6 family


def test_intersect_and_caratheodory_cli(two_color_path, capsys):
    code, out, _ = run_cli(capsys, "intersect", two_color_path)
    assert code == 0 and "generators: [[15]]" in out
    code, out, _ = run_cli(capsys, "caratheodory", two_color_path)
    assert code == 0 and "target: [15]" in out


def test_numerical_subcommands_cli(two_color_path, capsys):
    code, out, _ = run_cli(capsys, "frobenius", two_color_path)
    assert code == 0 and "frobenius: 7" in out
    code, out, _ = run_cli(capsys, "gaps", two_color_path)
    assert code == 0 and "gaps: [1, 2, 4, 7]" in out
    code, out, _ = run_cli(capsys, "count", "--target", "23", "--k", "2",
                           two_color_path)
    assert code == 0 and "count: 2" in out
    code, out, _ = run_cli(capsys, "quasipoly", "--k", "2", "--json",
                           two_color_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["period"] == 15
    assert payload["constituents"][8] == ["7/15", "1/15"]


def test_reduce_cli(two_color_path, capsys):
    code, out, _ = run_cli(capsys, "reduce", "--k", "2", "--mode", "b",
                           two_color_path)
    assert code == 0
    assert "predicted: 31" in out and "computed: 31" in out


def test_helly_and_tverberg_cli(example_one_path, capsys):
    code, out, _ = run_cli(capsys, "helly-audit", "--case", "noncover",
                           example_one_path)
    assert code == 0
    assert "premise_holds: true" in out
    assert "conclusion_holds: true" in out
    code, out, _ = run_cli(capsys, "tverberg", "--r", "2", example_one_path)
    assert code == 0
    assert "hypothesis_met: true" in out


def test_hilbert_cli(tmp_path, capsys):
    doc = {"dimension": 1,
           "colors": [{"name": "a", "generators": [[2]]},
                      {"name": "b", "generators": [[3]]}]}
    p = tmp_path / "h.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "hilbert", str(p))
    assert code == 0 and "basis: []" in out


def test_stdin_instance(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(TWO_COLOR)))
    code, out, _ = run_cli(capsys, "member", "--target", "8", "-")
    assert code == 0 and "member: true" in out


def test_anomaly_exit_code(two_color_path, capsys, monkeypatch):
    from chromatic_semigroups.errors import TheoremContractError
    import chromatic_semigroups.cli as cli_mod

    def boom(args):
        raise TheoremContractError("forced for the exit-code contract")

    monkeypatch.setitem(cli_mod.build_parser.__globals__, "_run_member", boom)
    code = main(["member", "--target", "8", two_color_path])
    captured = capsys.readouterr()
    assert code == 3
    assert "anomaly" in captured.err


def test_json_reports_roundtrip(two_color_path, capsys):
    for argv in (["frobenius"], ["gaps"], ["chromatic-frobenius", "--k", "2"],
                 ["caratheodory"], ["intersect"]):
        code, out, _ = run_cli(capsys, *argv, "--json", two_color_path)
        assert code == 0
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload


def test_golden_exit_codes_every_subcommand(two_color_path, example_one_path,
                                            capsys):
    golden = [
        (["solve", example_one_path], 0),
        (["classify", "--solution", "3,1,0,1,0,1", example_one_path], 0),
        (["member", "--target", "8", two_color_path], 0),
        (["member", "--target", "7", two_color_path], 1),
        (["member", two_color_path], 2),  # missing --target
        (["intersect", two_color_path], 0),
        (["hilbert", two_color_path], 0),
        (["helly-audit", "--case", "noncover", two_color_path], 0),
        (["helly-audit", "--case", "bogus", two_color_path], 2),
        (["tverberg", "--r", "2", two_color_path], 0),
        (["tverberg", "--r", "3", two_color_path], 1),  # 2 gens, 3 blocks
        (["caratheodory", two_color_path], 0),
        (["frobenius", two_color_path], 0),
        (["gaps", two_color_path], 0),
        (["chromatic-frobenius", "--k", "2", two_color_path], 0),
        (["chromatic-frobenius", "--k", "5", two_color_path], 2),
        (["count", "--target", "23", "--k", "2", two_color_path], 0),
        (["quasipoly", "--k", "2", two_color_path], 0),
        (["quasipoly", "--k", "2", "--start", "0", two_color_path], 2),
        (["cteg", "--n", "3"], 0),
        (["cteg", "--n", "0"], 2),
        (["reduce", "--k", "2", "--mode", "b", two_color_path], 0),
        (["reduce", "--k", "1", "--mode", "b", two_color_path], 2),
    ]
    for argv, want in golden:
        code = main(list(argv))
        capsys.readouterr()
        assert code == want, (argv, code, want)

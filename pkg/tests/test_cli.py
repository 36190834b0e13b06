import json
from importlib import resources

import jsonschema
import pytest

from core_lattice.cli import json_safe


def schema(name):
    return json.loads(resources.files("core_lattice").joinpath("schemas", f"{name}.json").read_text())


def test_cores_stats(run_cli, json_lines):
    code, out, _ = run_cli("cores", "3", "8", "--stats")
    assert code == 0
    (rec,) = json_lines(out)
    jsonschema.validate(rec, schema("size_stats"))
    assert rec["count"] == 15 and rec["max"] == 21 and rec["mean"] == {"num": 7, "den": 1}
    assert rec["argmax"] == [5, 2]


def test_cores_from_semigroups(run_cli, json_lines):
    code, out, _ = run_cli("cores", "3", "8", "--from-semigroups", "--stats")
    assert code == 0 and json_lines(out)[0]["count"] == 10


def test_cores_jobs_deterministic(run_cli):
    assert run_cli("cores", "5", "8", "--jobs", "3")[1] == run_cli("cores", "5", "8")[1]


def test_cores_dump(run_cli):
    code, out, _ = run_cli("cores", "3", "8", "--dump")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x1,x2,size" and len(lines) == 16
    assert "5,2,21" in lines


@pytest.mark.parametrize("argv,needle", [
    (("cores", "4", "6"), "gcd"),
    (("cores", "3", "6"), "divisible"),
    (("cores", "3", "8", "--jobs", "0"), "--jobs"),
    (("cores", "3", "8", "9", "--from-semigroups"), "exactly one b"),
])
def test_cores_errors(run_cli, argv, needle):
    code, out, err = run_cli(*argv)
    assert code == 1 and out == "" and needle in err


def test_usage_error_exit_code(run_cli):
    with pytest.raises(SystemExit) as exc:
        run_cli("cores")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run_cli("nonsense")
    assert exc.value.code == 1


def test_partition_hooks(run_cli):
    code, out, _ = run_cli("partition", "0,1,4,5,7,→", "--hooks")
    assert code == 0
    assert "partition: (4,2,2)" in out
    assert "[6][5][2][1]\n[3][2]\n[2][1]" in out


def test_partition_conjugate_and_apery(run_cli, json_lines):
    _, out, _ = run_cli("partition", "(4,2,2)", "--conjugate")
    assert "conjugate: (3,3,1,1)" in out and "conjugate set: 0,3,4,7,→" in out
    _, out, _ = run_cli("partition", "(4,2,2)", "--apery", "4")
    assert "apery: a=4;[0,2,1]" in out
    _, out, _ = run_cli("partition", "0,1,4,5,7,->", "--apery", "4", "--json")
    assert json_lines(out)[0]["apery"] == "a=4;[0,2,1]"


def test_partition_errors(run_cli):
    assert run_cli("partition", "(2,3)")[0] == 1
    assert run_cli("partition", "0,1,2")[0] == 1
    code, _, err = run_cli("partition", "0,1,4,5,7,→", "--apery", "2")
    assert code == 1 and "not an a-core" in err


def test_antiatom(run_cli, json_lines):
    code, out, _ = run_cli("antiatom", "0,4,→")
    rec = json_lines(out)[0]
    jsonschema.validate(rec, schema("antiatom"))
    assert code == 0 and rec["P"] == 3
    _, out, _ = run_cli("antiatom", "gens", "4", "5", "6", "7", "--witnesses")
    rec = json_lines(out)[0]
    jsonschema.validate(rec, schema("antiatom"))
    assert (rec["P"], rec["M"], len(rec["witnesses"])) == (3, 2, 3)


def test_antiatom_errors(run_cli):
    code, _, err = run_cli("antiatom", "0,1,3,→")
    assert code == 1 and "not closed: 1+1=2 missing" in err
    assert run_cli("antiatom", "gens", "4", "6")[0] == 1
    assert run_cli("antiatom", "gens", "x")[0] == 1
    assert run_cli("antiatom", "0,4,→", "0,5,→")[0] == 1


def test_tree(run_cli, json_lines):
    code, out, _ = run_cli("tree", "5", "--annotate")
    recs = json_lines(out)
    assert code == 0 and len(recs) == 27
    for rec in recs:
        jsonschema.validate(rec, schema("tree_node"))
    assert recs[-1] == {"gens": [6, 7, 8, 9, 10, 11], "genus": 5, "M": 4, "P": 10, "parent": [5, 6, 7, 8, 9]}
    assert len(json_lines(run_cli("tree", "0")[1])) == 1
    census = [r["genus"] for r in json_lines(run_cli("tree", "8")[1])]
    assert [census.count(g) for g in range(9)] == [1, 1, 2, 4, 7, 12, 23, 39, 67]
    assert run_cli("tree", "2", "--dot")[1].startswith("digraph")


def test_gamma_and_ratio(run_cli, json_lines):
    recs = json_lines(run_cli("gamma", "4", "--semigroups")[1])
    assert [r["gamma"] for r in recs] == [{"num": 1, "den": 1}, {"num": 1, "den": 1},
                                          {"num": 3, "den": 4}, {"num": 3, "den": 4}]
    assert [r["S"] for r in recs] == [1, 1, 2, 2]
    recs = json_lines(run_cli("ratio", "3", "8")[1])
    assert recs[-1] == {"limit": {"num": 1, "den": 2}}
    assert recs[-2] == {"b": 8, "O": 10, "C": 15, "ratio": {"num": 2, "den": 3}}
    assert run_cli("ratio", "5", "8")[0] == 1


def test_verify(run_cli, json_lines):
    code, out, _ = run_cli("verify", "anderson", "tree")
    recs = json_lines(out)
    assert code == 0 and [r["suite"] for r in recs] == ["anderson", "tree"]
    for rec in recs:
        jsonschema.validate(rec, schema("verify"))
    assert recs[0]["checked"] == 34


def test_verify_failure_exit_code(run_cli, json_lines):
    code, out, _ = run_cli("verify", "figure2")
    rec = json_lines(out)[0]
    jsonschema.validate(rec, schema("verify"))
    assert code == 2 and not rec["passed"]


def test_verify_unknown_suite(run_cli):
    code, _, err = run_cli("verify", "bogus")
    assert code == 1 and "unknown suite" in err


def test_output_is_byte_deterministic(run_cli):
    for argv in (("tree", "4", "--annotate"), ("cores", "4", "9", "--dump"), ("verify", "symmetric")):
        assert run_cli(*argv)[1] == run_cli(*argv)[1]


def test_json_safe_big_ints():
    assert json_safe(2 ** 53) == 2 ** 53
    assert json_safe(2 ** 53 + 1) == str(2 ** 53 + 1)
    assert json_safe({"x": [-(2 ** 60)]}) == {"x": [str(-(2 ** 60))]}

import json

import pytest

from latticework import __version__
from latticework.cli import main
from latticework.constructions import disconnected_extremal, sharp_family
from latticework.core import SetFamily


def run_json(capsys, *argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def write_family(tmp_path, fam, name="fam.json"):
    path = tmp_path / name
    path.write_text(json.dumps(fam.to_jsonable()))
    return str(path)


def test_construct_bare_emits_family_format(capsys):
    code = main(["construct", "sharp", "--n", "4", "--k", "2"])
    out = capsys.readouterr().out
    assert code == 0
    fam = SetFamily.from_jsonable(json.loads(out))
    assert fam == sharp_family(4, 2)


def test_construct_out_writes_and_reports(capsys, tmp_path):
    path = tmp_path / "disc.json"
    code, report = run_json(
        capsys, "construct", "disconnected", "--n", "4", "--out", str(path)
    )
    assert code == 0
    assert report["command"] == "construct"
    assert report["results"]["size"] == 10
    assert report["results"]["written_to"] == str(path)
    on_disk = SetFamily.from_jsonable(json.loads(path.read_text()))
    assert on_disk == disconnected_extremal(4)


def test_construct_diamond(capsys):
    code = main(["construct", "diamond", "--n", "4", "--bottom", "1", "--top", "1,2,3"])
    out = capsys.readouterr().out
    assert code == 0
    fam = SetFamily.from_jsonable(json.loads(out))
    assert len(fam) == 4 and fam.n == 4


def test_analyze_report_fields(capsys, tmp_path):
    path = write_family(tmp_path, sharp_family(3, 1))
    code, report = run_json(capsys, "analyze", "--family", path)
    assert code == 0
    res = report["results"]
    assert res["size"] == 4
    assert res["height"] == 1
    assert res["component_orders"] == [2, 2]
    assert res["lubell"] == "4/3"
    assert res["two_chains"] == 2
    assert res["skips"] == 0
    for key in ("command", "params", "results", "seed", "version", "timing_seconds"):
        assert key in report
    assert report["version"] == __version__


def test_analyze_empty_family(capsys, tmp_path):
    path = write_family(tmp_path, SetFamily.from_masks(3, []))
    code, report = run_json(capsys, "analyze", "--family", path)
    assert code == 0
    res = report["results"]
    assert res["size"] == 0 and res["height"] is None and res["lubell"] == "0"


def test_normalize_trace_replays(capsys, tmp_path):
    fam = SetFamily.from_sets(3, [(), (1,), (1, 2, 3)])
    path = write_family(tmp_path, fam)
    code, report = run_json(capsys, "normalize", "--family", path, "--t", "3", "--trace")
    assert code == 0
    res = report["results"]
    assert res["skips_after"] == 0
    assert res["size"] == 3
    current = fam
    for added, removed in res["trace"]:
        current = current.add(added).remove(removed)
    assert current == SetFamily.from_jsonable(res["family"])


def test_boundary_on_extremal_split(capsys, tmp_path):
    path = write_family(tmp_path, disconnected_extremal(4))
    split = tmp_path / "split.json"
    split.write_text(json.dumps({"a": [0], "b": [1]}))
    code, report = run_json(
        capsys, "boundary", "--family", path, "--split-file", str(split)
    )
    assert code == 0
    res = report["results"]
    assert res["excluded_count"] == 6
    assert res["family_size"] == 10
    assert res["bound_holds"]


def test_boundary_rejects_bad_split(capsys, tmp_path):
    path = write_family(tmp_path, disconnected_extremal(3))
    split = tmp_path / "split.json"
    split.write_text(json.dumps({"a": [0, 1], "b": []}))
    assert main(["boundary", "--family", path, "--split-file", str(split)]) == 2
    assert "nonempty" in capsys.readouterr().err


def test_verify_pass_and_fail_exit_codes(capsys, tmp_path):
    assert main(["verify", "technical", "--nmax", "3", "--kmax", "1"]) == 0
    capsys.readouterr()
    chained = write_family(tmp_path, SetFamily.from_sets(3, [(1,), (1, 2)]))
    assert main(["verify", "blym", "--family", chained]) == 1


def test_verify_json_report(capsys):
    code, report = run_json(capsys, "verify", "kk", "--n", "3", "--k", "1", "--samples", "20")
    assert code == 0
    assert report["results"]["passed"]
    assert report["params"]["suite"] == "kk"


def test_search_exit_codes(capsys):
    code, report = run_json(capsys, "search", "la", "--n", "3", "--t", "2")
    assert code == 0
    res = report["results"]
    assert res["value"] == 4
    assert res["proven_optimal"]
    wit = SetFamily.from_jsonable(res["witness"])
    assert len(wit) == 4


def test_search_budget_exit(capsys):
    code, report = run_json(
        capsys, "--budget-nodes", "3", "search", "la", "--n", "4", "--t", "4"
    )
    assert code == 3
    assert not report["results"]["proven_optimal"]
    assert report["results"]["value"] <= 8


def test_search_rational_values_as_strings(capsys):
    code, report = run_json(capsys, "search", "madstar", "--t", "3")
    assert code == 0
    assert report["results"]["value"] == "4/3"
    wit = report["results"]["witness"]
    assert wit["vertices"] == 3 and len(wit["edges"]) == 2


def test_search_missing_flag_is_usage_error(capsys):
    assert main(["search", "xi-star", "--n", "4"]) == 2
    assert "--m is required" in capsys.readouterr().err


def test_reproduce_and_list(capsys):
    code, report = run_json(capsys, "reproduce", "sperner-n4")
    assert code == 0
    assert report["results"]["passed"]
    assert report["results"]["expected"] == "6"
    code, report = run_json(capsys, "reproduce", "--list")
    assert code == 0
    names = {entry["name"] for entry in report["results"]["registry"]}
    assert {"sperner-n3", "madstar-t4", "sharp-size-n12-k3"} <= names


def test_reproduce_requires_name_or_list(capsys):
    assert main(["reproduce"]) == 2


def test_bad_family_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"n": 3, "sets": [[1,')
    assert main(["analyze", "--family", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line" in err
    assert main(["analyze", "--family", str(tmp_path / "missing.json")]) == 2


def test_domain_error_is_usage_error(capsys):
    # sharp needs 0 <= k <= n
    assert main(["construct", "sharp", "--n", "3", "--k", "9"]) == 2


def test_text_format_flattens(capsys):
    code = main(["--format", "text", "search", "min2chains", "--n", "3", "--m", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "results.value: 2" in out

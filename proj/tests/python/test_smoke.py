# SPDX-License-Identifier: Apache-2.0
import json
import os
from pathlib import Path

import pytest

import oasforge

TESTS = Path(__file__).resolve().parents[1]
FIXTURES = Path(os.environ.get("OASFORGE_FIXTURES_DIR", TESTS / "fixtures"))
DATA = Path(os.environ.get("OASFORGE_DATA_DIR", TESTS / "data"))
PROJECTS = sorted(p.name for p in (FIXTURES / "projects").iterdir() if p.is_dir())


def golden(name: str) -> str:
    return (FIXTURES / "golden" / f"{name}.openapi.json").read_text()


def test_generate_matches_golden_bytes():
    result = oasforge.generate(FIXTURES / "projects" / "path_regex")
    assert result["project"] == "path_regex"
    assert list(result["documents"]) == ["default"]
    assert result["documents"]["default"] == golden("path_regex-default")
    assert result["merged"] is None


def test_profiles_and_merge_conflict():
    docs = oasforge.generate_documents(FIXTURES / "projects" / "profile_split")
    assert sorted(docs) == ["default", "external", "internal"]
    assert docs["external"]["info"]["title"] == "profile_split (external)"
    with pytest.raises(oasforge.MergeConflict):
        oasforge.merge([docs["external"], docs["internal"]])
    with pytest.raises(oasforge.MergeConflict):
        oasforge.generate(FIXTURES / "projects" / "profile_split", merge=True)
    merged = json.loads(oasforge.merge([docs["default"], docs["external"]]))
    assert merged["x-profile"] == "default+external"
    assert len(merged["paths"]) == 3


def test_merge_is_idempotent():
    doc = oasforge.generate_documents(FIXTURES / "projects" / "default_responses")["default"]
    assert json.loads(oasforge.merge([doc, doc])) == doc


def test_evaluate_with_handwritten_ground_truth():
    doc = oasforge.generate(FIXTURES / "projects" / "profile_split")["documents"]["external"]
    gt = (FIXTURES / "gt" / "profile_split-external.json").read_text()
    report = oasforge.evaluate(doc, gt, label="external")
    overall = report["overall"]
    for category, n in (("methods", 3), ("parameters", 5), ("responses", 3)):
        assert overall[category]["tp"] == n
        assert overall[category]["precision"] == 1.0
        assert overall[category]["recall"] == 1.0


def test_self_evaluation_is_perfect_on_every_fixture():
    for project in PROJECTS:
        for text in oasforge.generate(FIXTURES / "projects" / project)["documents"].values():
            report = oasforge.evaluate(text, oasforge.flatten(text))["overall"]
            for category in ("methods", "responses"):
                assert report[category]["precision"] == 1.0, project
                assert report[category]["recall"] == 1.0, project


def test_bad_ground_truth_reports_line():
    doc = oasforge.generate(FIXTURES / "projects" / "path_regex")["documents"]["default"]
    with pytest.raises(oasforge.GroundTruthError, match=":3"):
        oasforge.evaluate(doc, '{"methods": [\n{"path": "/a", "verb": "GET"},\n{"path": "/a", "verb": "GET"}]}')


def test_missing_input_raises():
    with pytest.raises(OSError):
        oasforge.generate("/definitely/not/here")


def test_path_helpers():
    assert oasforge.split_path_pattern("{year:\\d{4}}") == ("{year}", "year", "\\d{4}", True)
    assert oasforge.split_path_pattern("items") == ("items", None, None, True)
    assert oasforge.split_path_pattern("{oops")[3] is False
    assert oasforge.normalize_path("api//users/{id:[0-9]+}/") == "/api/users/{id}"


def test_yaml_round_trip():
    yaml = pytest.importorskip("yaml")
    result = oasforge.generate(FIXTURES / "projects" / "allof_inheritance", format="yaml")
    text = result["documents"]["default"]
    assert yaml.safe_load(text) == json.loads(golden("allof_inheritance-default"))
    assert oasforge.serialize(text, "json") == golden("allof_inheritance-default")


def test_outputs_validate_against_the_oas_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((DATA / "oas-3.0-schema.json").read_text())
    validator = jsonschema.Draft4Validator(schema)
    for project in PROJECTS:
        for text in oasforge.generate(FIXTURES / "projects" / project)["documents"].values():
            errors = sorted(validator.iter_errors(json.loads(text)), key=str)
            assert not errors, f"{project}: {errors[0].message if errors else ''}"

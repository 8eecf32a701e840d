import json

import pytest

from toricgeom.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_construct_then_linear_relations(capsys, tmp_path):
    payload = run_json(capsys, "construct", "--name", "del_pezzo_surface",
                       "--k", "1")
    fan = payload["fan"]
    assert fan["names"] == ["x1", "x2", "x3", "e1"]
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": fan}))
    rel = run_json(capsys, "linear-relations", "--input", str(doc))
    assert rel["generators"] == ["x1 - x3 + e1", "x2 - x3 + e1"]


def test_properties_rays_only_fan(capsys, tmp_path):
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": {
        "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[1], [2], [3]]}}))
    payload = run_json(capsys, "properties", "--input", str(doc))
    assert payload["complete"] is False
    assert payload["simplicial"] is True


def test_cohomology_trivial_class_on_p1xp1(capsys, tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({"construct": {
        "name": "product",
        "factors": [{"name": "projective_space", "n": 1},
                    {"name": "projective_space", "n": 1}]}}))
    payload = run_json(capsys, "cohomology", "--input", str(doc),
                       "--class", "[0,0]", "--i", "0")
    assert payload["dim"] == 1


def test_print_constraints_byte_exact(capsys, tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({"construct": {
        "name": "product",
        "factors": [{"name": "projective_space", "n": 1},
                    {"name": "projective_space", "n": 1}]}}))
    code, out, err = run_cli(capsys, "print-constraints", "--input", str(doc),
                             "--i", "0", "--format", "text")
    assert code == 0
    assert out == "-x1 <= 0\n-x2 <= 0\n"
    code, out, err = run_cli(capsys, "print-constraints", "--input", str(doc),
                             "--i", "2", "--format", "text")
    assert code == 0
    assert out == "x1 <= -2\nx2 <= -2\n"


def test_print_constraints_polyhedron_document(capsys, tmp_path):
    doc = tmp_path / "poly.json"
    doc.write_text(json.dumps({"polyhedron": {"inequalities": [
        {"normal": [1, 0], "offset": 0}]}}))
    code, out, _ = run_cli(capsys, "print-constraints", "--input", str(doc),
                           "--format", "text")
    assert code == 0
    assert out == "x1 <= 0\n"


def test_hilbert_basis_command(capsys, tmp_path):
    doc = tmp_path / "cone.json"
    doc.write_text(json.dumps({"cone": {"rays": [[-1, 1], [0, 1], [1, 1]]}}))
    payload = run_json(capsys, "hilbert-basis", "--input", str(doc))
    assert payload["hilbert_basis"] == [[-1, 1], [0, 1], [1, 1]]
    code, out, _ = run_cli(capsys, "hilbert-basis", "--input", str(doc),
                           "--format", "text")
    assert out == "[-1, 1]\n[0, 1]\n[1, 1]\n"


def test_toric_ideal_text(capsys, tmp_path):
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": {
        "rank": 2, "rays": [[-1, 1], [1, 1]], "max_cones": [[1, 2]]}}))
    code, out, _ = run_cli(capsys, "toric-ideal", "--input", str(doc),
                           "--format", "text")
    assert code == 0
    assert out == "ideal(x1*x2 - x3^2)\n"


def test_intersection_form_dp1(capsys):
    payload = run_json(capsys, "intersection-form", "--name",
                       "del_pezzo_surface", "--k", "1")
    assert payload["intersection_form"] == {
        "x1*x3": "1", "e1^2": "-1", "x2*x3": "1", "x3^2": "1", "x1*x2": "0",
        "x3*e1": "0", "x2^2": "0", "x1*e1": "1", "x2*e1": "1", "x1^2": "0",
    }


def test_degree_text_phrases(capsys):
    code, out, _ = run_cli(capsys, "degree", "--name", "del_pezzo_surface",
                           "--k", "1", "--poly", "x1*e1 + e1^2", "--format",
                           "text")
    assert code == 0
    assert out.startswith("Trivial rational equivalence class on a normal "
                          "toric variety")
    code, out, _ = run_cli(capsys, "degree", "--name", "del_pezzo_surface",
                           "--k", "1", "--poly", "e1^2", "--format", "text")
    assert "Rational equivalence class on a normal toric variety represented by" in out
    assert out.strip().endswith("degree: -1")


def test_vanishing_sets_command(capsys, tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({"construct": {
        "name": "product",
        "factors": [{"name": "projective_space", "n": 1},
                    {"name": "projective_space", "n": 1}]}}))
    payload = run_json(capsys, "vanishing-sets", "--input", str(doc))
    sets = payload["vanishing_sets"]
    assert [s["i"] for s in sets] == [0, 1, 2]
    assert sets[0]["polyhedra"][0]["apex"] == [0, 0]
    assert sets[2]["polyhedra"][0]["constraints"] == ["x1 <= -2", "x2 <= -2"]


def test_triangulate_square(capsys, tmp_path):
    doc = tmp_path / "pts.json"
    doc.write_text(json.dumps(
        {"points": [[1, 1], [-1, 1], [1, -1], [-1, -1]]}))
    payload = run_json(capsys, "triangulate", "--input", str(doc))
    assert len(payload["triangulations"]) == 1
    assert payload["origin_index"] == 5
    (fan,) = payload["varieties"]
    doc2 = tmp_path / "fan.json"
    doc2.write_text(json.dumps({"fan": fan}))
    sr = run_json(capsys, "sr-ideal", "--input", str(doc2))
    assert sr["generators"] == ["x1*x4", "x2*x3"]
    irr = run_json(capsys, "irrelevant-ideal", "--input", str(doc2))
    assert irr["generators"] == ["x3*x4", "x2*x4", "x1*x3", "x1*x2"]


def test_chow_ring_command(capsys, tmp_path):
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": {
        "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[1], [2], [3]]}}))
    payload = run_json(capsys, "chow-ring", "--input", str(doc))
    assert payload["generators"] == ["x1 - x3", "x2 - x3", "x1*x2",
                                     "x1*x3", "x2*x3"]


def test_exit_code_validation_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "properties", "--input", str(bad))
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "validation"

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"fan": {
        "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[1], [2], [3]]}, "bogus": 1}))
    code, _, err = run_cli(capsys, "properties", "--input", str(unknown))
    assert code == 2

    code, _, err = run_cli(capsys, "degree", "--name", "del_pezzo_surface",
                           "--k", "1")  # missing --poly
    assert code == 2


def test_exit_code_unsupported(capsys, tmp_path):
    # chow ring of a non-simplicial fan
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": {
        "rank": 3,
        "rays": [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]],
        "max_cones": [[1, 2, 3, 4]]}}))
    code, _, err = run_cli(capsys, "chow-ring", "--input", str(doc))
    assert code == 3
    assert json.loads(err)["error"]["kind"] == "unsupported"

    rays_only = tmp_path / "v.json"
    rays_only.write_text(json.dumps({"fan": {
        "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
        "max_cones": [[1], [2], [3]]}}))
    code, _, _ = run_cli(capsys, "cohomology", "--input", str(rays_only),
                         "--class", "[0]", "--i", "0")
    assert code == 3


def test_deterministic_output(capsys):
    a = run_cli(capsys, "construct", "--name", "hirzebruch_surface", "--r", "2")
    b = run_cli(capsys, "construct", "--name", "hirzebruch_surface", "--r", "2")
    assert a == b


def test_fan_roundtrip_identical(capsys, tmp_path):
    payload = run_json(capsys, "construct", "--name", "del_pezzo_surface",
                       "--k", "2")
    doc = tmp_path / "fan.json"
    doc.write_text(json.dumps({"fan": payload["fan"]}))
    payload2 = run_json(capsys, "construct", "--input", str(doc))
    assert payload2["fan"] == payload["fan"]

"""JSON round trips, schema validation, manifests, CSV."""

import json

import pytest

import cremona_orbits as co
from cremona_orbits import serialize
from helpers import special_coplanar_config


def test_config_roundtrip(tmp_path):
    cfg = co.random_config(7, 50)
    path = tmp_path / "cfg.json"
    serialize.dump_config(path, cfg)
    assert serialize.load_config(path) == cfg
    obj = json.loads(path.read_text())
    assert obj["k"] == 8
    assert all(isinstance(v, str) for row in obj["points"] for v in row)


def test_reader_accepts_plain_ints(tmp_path):
    path = tmp_path / "cfg.json"
    cfg = co.random_config(8, 9)
    obj = {"k": 8, "points": [[int(v) for v in p.coords] for p in cfg.points]}
    path.write_text(json.dumps(obj))
    assert serialize.load_config(path) == cfg


def test_reader_recanonicalizes(tmp_path):
    cfg = co.random_config(9, 9)
    obj = serialize.config_to_obj(cfg)
    obj["points"][0] = [str(-3 * int(v)) for v in obj["points"][0]]  # rescale a point
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(obj))
    assert serialize.load_config(path) == cfg


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.pop("points"),
        lambda o: o.__setitem__("k", 9),
        lambda o: o["points"][2].pop(),
        lambda o: o["points"][1].__setitem__(0, "x"),
        lambda o: o["points"].__setitem__(0, list(o["points"][1])),
    ],
)
def test_reader_rejects_bad_documents(tmp_path, mutate):
    obj = serialize.config_to_obj(co.random_config(10, 9))
    mutate(obj)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    with pytest.raises(co.FormatError):
        serialize.load_config(path)


def test_reader_rejects_non_json(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("not json {")
    with pytest.raises(co.FormatError):
        serialize.load_config(path)


def test_dump_is_deterministic(tmp_path):
    cfg = co.random_config(11, 30)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    serialize.dump_config(a, cfg)
    serialize.dump_config(b, cfg)
    assert a.read_bytes() == b.read_bytes()


def test_divisor_roundtrip():
    c = co.DivisorClass(3, (2, 2, 2, 1, 1, 1, 1, 2))
    assert serialize.divisor_from_obj(serialize.divisor_to_obj(c)) == c


def test_report_object_shape():
    report = co.coxeter_iterate(special_coplanar_config(0), 1)
    obj = serialize.report_to_obj(report)
    assert obj["steps_completed"] == 1
    assert obj["degrees"] == [1, 3]
    assert obj["coplanar_tuples"] == [[[5, 6, 7, 8]], []]
    assert obj["tracked"][0] == {"d": 1, "m": [0, 0, 0, 0, 1, 1, 1, 1]}
    assert len(obj["configurations"]) == 2
    json.dumps(obj)  # must be serializable as-is


def test_orbit_object_shape():
    cfg = co.random_config(12, 6)
    graph = co.orbit_bfs(cfg, 0, 10)
    obj = serialize.orbit_to_obj(graph)
    assert len(obj["nodes"]) == 1
    assert obj["nodes"][0]["depth"] == 0
    assert obj["nodes"][0]["parent"] is None
    assert obj["edges"] == []
    json.dumps(obj)


def test_jordan_and_distinctness_objects():
    jc = serialize.jordan_to_obj(co.jordan_certificate(co.coxeter_element(8)))
    assert jc["multiplicity_of_one"] == 3
    assert jc["ranks"] == [8, 7, 6, 6]
    assert jc["eigenvalue_one_block_sizes"] == [3]
    dc = serialize.distinctness_to_obj(
        co.distinctness_certificate(co.plane_through_last_four(8), 20)
    )
    assert dc["all_distinct"] is True
    assert dc["degrees"][:4] == [1, 3, 2, 3]
    json.dumps(jc)
    json.dumps(dc)


def test_manifest_and_degree_csv(tmp_path):
    out = tmp_path / "out.json"
    serialize.write_manifest(out, "gen", {"seed": 1}, [out])
    manifest = json.loads((tmp_path / "out.json.manifest.json").read_text())
    assert manifest["command"] == "gen"
    assert manifest["parameters"] == {"seed": 1}
    assert manifest["tool_version"] == co.__version__
    assert "generated_at" in manifest

    csv_path = tmp_path / "deg.csv"
    serialize.write_degree_csv(csv_path, (1, 3, 2))
    assert csv_path.read_text().splitlines() == ["step,degree", "0,1", "1,3", "2,2"]

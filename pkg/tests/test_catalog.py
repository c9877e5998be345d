import os

import pytest

from torideg.catalog import (
    dataset_catalog,
    dataset_lineality,
    dataset_path,
    load_dataset,
    load_matrix,
    parse_rays,
    ray_vector,
    read_matrix_file,
)


def vneg(pairs, n):
    v = [0] * n
    for i, x in pairs:
        v[i] = -x
    return v


def test_dataset_catalog_listing():
    listing = dataset_catalog()
    by_name = {entry["name"]: entry for entry in listing}
    assert set(by_name) == {"curve", "gr36", "gr36-cluster", "plabic"}
    assert by_name["curve"]["generators"] == 1
    assert by_name["gr36"]["generators"] == 35
    assert by_name["gr36-cluster"]["generators"] == 37
    assert by_name["plabic"]["rows"] == 9
    assert by_name["plabic"]["columns"] == 20
    for entry in listing:
        assert len(entry["sha256"]) == 64
        assert entry["note"]


def test_load_dataset_rings():
    ring, gens = load_dataset("curve")
    assert ring.variables == ("x", "y", "z")
    ring2, gens2 = load_dataset("gr36-cluster")
    assert ring2.n == 22
    assert len(gens2) == 37
    with pytest.raises(ValueError):
        load_dataset("nonsense")


def test_plabic_matrix_prepends_grading():
    rows = load_matrix("plabic")
    assert len(rows) == 10
    assert rows[0] == (1,) * 20
    raw = read_matrix_file(dataset_path("plabic"))
    assert rows[1:] == list(raw)


def test_ray_vector_basis():
    assert ray_vector("e123", 20) == vneg([(0, 1)], 20)
    assert ray_vector("e356", 20) == vneg([(18, 1)], 20)
    assert ray_vector("f56", 20) == vneg([(9, 1), (15, 1), (18, 1), (19, 1)], 20)
    assert ray_vector("g123456", 20) == vneg(
        [(9, 1), (15, 1), (16, 1), (17, 1), (18, 1), (19, 1)], 20
    )


def test_ray_vector_tripartition_order():
    v = ray_vector("g456123", 20)
    want = [a + b + c for a, b, c in zip(
        ray_vector("f23", 20), ray_vector("e126", 20), ray_vector("e136", 20)
    )]
    assert v == want
    v2 = ray_vector("g321654", 20)
    want2 = [a + b + c for a, b, c in zip(
        ray_vector("f45", 20), ray_vector("e156", 20), ray_vector("e146", 20)
    )]
    assert v2 == want2


def test_ray_vector_extended_columns():
    v = ray_vector("f23+ex", 22)
    assert v[20] == -1 and v[21] == 0
    assert v[:20] == ray_vector("f23", 20)
    e1 = ray_vector("E1", 22)
    assert e1[20] == -1 and e1[21] == -1
    assert sum(e1) == -12
    with pytest.raises(ValueError):
        ray_vector("ex", 20)
    with pytest.raises(ValueError):
        ray_vector("E1", 20)


def test_ray_vector_errors():
    for bad in ["q123", "e12", "e127", "f11", "g123455", "B7", "e123,e145", ""]:
        with pytest.raises(ValueError):
            ray_vector(bad, 20)
    with pytest.raises(ValueError):
        ray_vector("e123", 7)


def test_parse_rays_modes(tmp_path):
    assert parse_rays("2,3,0;1,0,1", 3) == [[2, 3, 0], [1, 0, 1]]
    assert parse_rays("e123,e145", 20) == [ray_vector("e123", 20), ray_vector("e145", 20)]
    path = tmp_path / "rows.matrix"
    path.write_text("# comment\ncolumns a b c\n2 3 0\n1 0 1\n")
    assert parse_rays(str(path), 3) == [[2, 3, 0], [1, 0, 1]]
    with pytest.raises(ValueError):
        parse_rays(str(path), 4)
    with pytest.raises(ValueError):
        parse_rays("1,2", 3)


def test_dataset_lineality_rows():
    ring, _ = load_dataset("curve")
    assert dataset_lineality("curve", ring) == [[1, 1, 1]]
    ring36, _ = load_dataset("gr36")
    rows = dataset_lineality("gr36", ring36)
    assert len(rows) == 6
    assert all(sum(r) == 10 for r in rows)
    assert [sum(col) for col in zip(*rows)] == [3] * 20
    ringc, _ = load_dataset("gr36-cluster")
    erows = dataset_lineality("gr36-cluster", ringc)
    assert len(erows) == 6
    assert all(r[20] == 1 and r[21] == 1 for r in erows)


def test_data_dir_override(tmp_path, monkeypatch):
    src = dataset_path("curve")
    with open(src) as fh:
        body = fh.read()
    (tmp_path / "curve.ideal").write_text(body)
    monkeypatch.setenv("TORIDEG_DATA", str(tmp_path))
    ring, gens = load_dataset("curve")
    assert ring.variables == ("x", "y", "z")
    with pytest.raises(FileNotFoundError):
        load_dataset("gr36")

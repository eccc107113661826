import json
from pathlib import Path

import pytest

from weaklaws.cli import main

from conftest import DATA as _DATA

DATA = Path(_DATA)


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out = capsys.readouterr()
    return status, out.out, out.err


def test_check_law_trivial_is_strict(capsys):
    status, out, _ = run(capsys, "check-law", DATA / "trivial.json")
    doc = json.loads(out)
    assert status == 0 and doc["valid"] and doc["strict"]


def test_check_law_weak_is_not_strict(capsys):
    status, out, _ = run(capsys, "check-law", DATA / "weak.json")
    doc = json.loads(out)
    assert status == 0 and doc["valid"] and not doc["strict"]


@pytest.mark.parametrize("name,strict", [("scalar-f2-strict.json", True), ("scalar-f2-weak.json", False)])
def test_check_law_linear(capsys, name, strict):
    status, out, _ = run(capsys, "check-law", DATA / "linear" / name)
    doc = json.loads(out)
    assert status == 0 and doc["valid"] and doc["strict"] == strict


def test_malformed_json_is_status_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    status, out, err = run(capsys, "check-law", bad)
    assert status == 2 and out == "" and err.startswith("error:")


def test_wrong_kind_is_status_2(capsys):
    status, _, _ = run(capsys, "mixed-em", DATA / "category-idempotent.json")
    assert status == 2


def test_bad_prime_is_status_2(capsys):
    status, _, err = run(capsys, "search", "--groupoid", 1, "--prime", 4)
    assert status == 2 and "not prime" in err


def test_oversized_search_is_status_3(capsys):
    status, _, err = run(capsys, "search", "--groupoid", 3, "--prime", 3)
    assert status == 3 and "bound" in err


def test_bound_flag_caps_search(capsys):
    status, _, _ = run(capsys, "search", DATA / "linear" / "groupoid2.json", "--bound", 100)
    assert status == 3


def test_check_morphism(capsys):
    status, out, _ = run(capsys, "check-morphism", DATA / "identity-morphism.json")
    doc = json.loads(out)
    assert status == 0 and doc["pass"]


@pytest.mark.parametrize("side", ["monad", "comonad"])
def test_em(capsys, side):
    status, out, _ = run(capsys, "em", DATA / "weak.json", "--side", side)
    assert status == 0 and json.loads(out)["objects"]


def test_mixed_em(capsys):
    status, out, _ = run(capsys, "mixed-em", DATA / "weak.json")
    assert status == 0 and json.loads(out)["objects"]


def test_embed_dot(capsys):
    status, out, _ = run(capsys, "embed", DATA / "trivial.json", "--format", "dot")
    assert status == 0 and out.startswith("digraph")


def test_split_trivial_is_identity(capsys):
    status, out, _ = run(capsys, "split", DATA / "trivial.json")
    doc = json.loads(out)
    assert status == 0 and doc["identity"] and all(doc["diagrams"].values())


def test_split_weak_is_not_identity(capsys):
    status, out, _ = run(capsys, "split", DATA / "weak.json")
    assert status == 0 and not json.loads(out)["identity"]


def test_split_linear(capsys):
    status, out, _ = run(capsys, "split", DATA / "linear" / "groupoid2-weak.json")
    doc = json.loads(out)
    assert status == 0 and not doc["identity"] and doc["rank"] == 2


def test_lift(capsys):
    status, out, _ = run(capsys, "lift", DATA / "weak.json")
    assert status == 0 and json.loads(out)["isomorphic_to_mixed"]


def test_mates(capsys):
    status, out, _ = run(capsys, "mates", DATA / "weak.json")
    doc = json.loads(out)
    assert status == 0 and doc["pi_invertible"] is False


def test_mates_non_split(capsys):
    status, out, _ = run(capsys, "mates", "--builtin", "non-split")
    doc = json.loads(out)
    assert status == 1 and doc["section"] is None and doc["witness"] == "1"


def test_reconstruct_round_trip(capsys):
    status, out, _ = run(capsys, "reconstruct", DATA / "weak.json")
    assert status == 0 and json.loads(out)["round_trip"]


def test_classify_law_square(capsys):
    status, out, _ = run(capsys, "classify", DATA / "weak.json")
    doc = json.loads(out)
    assert status == 0 and doc["in_image"] and not doc["strict"]


@pytest.mark.parametrize("name", ["non-split", "non-monadic"])
def test_classify_builtin_outside_image(capsys, name):
    status, out, _ = run(capsys, "classify", "--builtin", name)
    doc = json.loads(out)
    assert status == 1 and not doc["in_image"] and doc["witness"]


def test_search_csv_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"census{k}.csv"
        assert run(capsys, "search", DATA / "linear" / "scalar-f2.json", "--format", "csv", "--out", path)[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].decode().splitlines()[1:] == ["0,1,1,1,1,0,0", "1,1,1,1,1,1,1"]


def test_search_triple(capsys):
    status, out, _ = run(capsys, "search", DATA / "triple-zero-identity.json")
    doc = json.loads(out)
    assert status == 0 and (doc["total"], doc["valid"], doc["strict"]) == (3, 3, 1)


def test_karoubi(capsys):
    status, out, _ = run(capsys, "karoubi", DATA / "category-idempotent.json")
    assert status == 0 and len(json.loads(out)["objects"]) == 2

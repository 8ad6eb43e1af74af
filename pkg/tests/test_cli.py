"""Command line behaviour: verbs, output shapes, exit codes."""

import json
import shutil
import subprocess

from eulerkit import (
    EulerDatum,
    bicat_to_datum,
    bicat_to_json,
    cat_as_bicat,
    catalog,
    category_from_json,
    category_to_json,
    datum_to_json,
    horn,
    nerve,
    sset_from_json,
    sset_to_json,
)
from eulerkit.cli import main


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_validate_and_exit_codes(tmp_path, capsys):
    good = _write(tmp_path, "z3.json", category_to_json(catalog.cyclic_group(3)))
    assert main(["validate", good]) == 0
    assert capsys.readouterr().out.strip() == "valid"

    doc = category_to_json(catalog.cyclic_group(3))
    doc["composition"][0]["equals"] = "g1"
    bad = _write(tmp_path, "bad.json", doc)
    assert main(["validate", bad]) == 1
    out = capsys.readouterr().out
    assert out.startswith("invalid:") and "violation(s)" in out
    assert "  - " in out


def test_chi_and_matrix_output(tmp_path, capsys):
    arrow = _write(tmp_path, "arrow.json", category_to_json(catalog.arrow()))
    assert main(["chi", arrow, "--matrix"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1 1 / 0 1"
    assert out[1] == "chi = 1"

    z3 = _write(tmp_path, "z3.json", category_to_json(catalog.cyclic_group(3)))
    assert main(["chi", z3]) == 0
    assert capsys.readouterr().out.strip() == "chi = 1/3"

    assert main(["chi", z3, "--witness"]) == 0
    out = capsys.readouterr().out
    assert "weighting = [1/3]" in out and "coweighting = [1/3]" in out


def test_weighting_output_shape(tmp_path, capsys):
    three = _write(tmp_path, "three.json", category_to_json(catalog.thick_arrow()))
    assert main(["weighting", three]) == 0
    assert capsys.readouterr().out.strip() == "particular = [0, 0, 1]; nullspace dim = 1"
    assert main(["coweighting", three]) == 0
    assert capsys.readouterr().out.strip() == "particular = [1, 0, 0]; nullspace dim = 1"


def test_characteristic_free_category_exits_2(tmp_path, capsys):
    nw = _write(tmp_path, "nw.json", category_to_json(catalog.no_weighting_category()))
    assert main(["chi", nw, "--matrix"]) == 2
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "2 1 / 4 2"
    assert out[1] == "chi undefined: no weighting or coweighting exists"
    assert main(["weighting", nw]) == 2
    assert capsys.readouterr().out.strip() == "no weighting exists"
    assert main(["coweighting", nw]) == 2
    assert capsys.readouterr().out.strip() == "no coweighting exists"


def test_construction_verbs_write_json(tmp_path, capsys):
    arrow = _write(tmp_path, "arrow.json", category_to_json(catalog.arrow()))
    out_path = tmp_path / "op.json"
    assert main(["opposite", arrow, "-o", str(out_path)]) == 0
    op = category_from_json(json.loads(out_path.read_text()))
    assert op.hom_count(1, 0) == 1 and op.hom_count(0, 1) == 0

    thick = _write(tmp_path, "thick.json", category_to_json(catalog.thick_arrow()))
    assert main(["skeleton", thick]) == 0
    sk = category_from_json(json.loads(capsys.readouterr().out))
    assert len(sk.objects) == 2

    z2 = _write(tmp_path, "z2.json", category_to_json(catalog.cyclic_group(2)))
    assert main(["product", arrow, z2]) == 0
    prod = category_from_json(json.loads(capsys.readouterr().out))
    assert len(prod.morphisms) == 6
    assert main(["coproduct", arrow, z2]) == 0
    cop = category_from_json(json.loads(capsys.readouterr().out))
    assert len(cop.objects) == 3


def test_equivalent_verb(tmp_path, capsys):
    thick = _write(tmp_path, "thick.json", category_to_json(catalog.thick_arrow()))
    arrow = _write(tmp_path, "arrow.json", category_to_json(catalog.arrow()))
    pp = _write(tmp_path, "pp.json", category_to_json(catalog.parallel_pair()))
    assert main(["equivalent", thick, arrow]) == 0
    assert capsys.readouterr().out.strip() == "equivalent = true"
    assert main(["equivalent", arrow, pp]) == 0
    assert capsys.readouterr().out.strip() == "equivalent = false"


def test_chi_bicat(tmp_path, capsys):
    tri = _write(tmp_path, "tri.json", bicat_to_json(catalog.upper_triangular_bicat()))
    assert main(["chi-bicat", tri, "--matrix"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1 2 / 0 1/2"
    assert out[1] == "chi = -1"

    nw = _write(tmp_path, "nw.json", bicat_to_json(catalog.no_weighting_bicat()))
    assert main(["chi-bicat", nw]) == 2
    assert "chi undefined" in capsys.readouterr().out

    # a hom without a characteristic fails before any matrix is printed
    uh = _write(tmp_path, "uh.json", bicat_to_json(catalog.undefined_hom_bicat()))
    assert main(["chi-bicat", uh, "--matrix"]) == 2
    assert capsys.readouterr().out.strip() == "hom-EC undefined at depth 1, pair (x,y)"


def test_chi_verbs_agree_across_representations(tmp_path, capsys):
    # same category as a category file, a bicategory file, a datum file
    # and a nerve file: every chi verb prints the same value
    cat = catalog.cyclic_group(3)
    as_cat = _write(tmp_path, "c.json", category_to_json(cat))
    as_bicat = _write(tmp_path, "b.json", bicat_to_json(cat_as_bicat(cat)))
    as_datum = _write(
        tmp_path, "d.json", datum_to_json(bicat_to_datum(cat_as_bicat(cat)))
    )
    as_nerve = _write(tmp_path, "n.json", sset_to_json(nerve(cat, 4)))
    lines = []
    for verb, path in (
        ("chi", as_cat),
        ("chi-bicat", as_bicat),
        ("chi-n", as_datum),
        ("chi-sset", as_nerve),
    ):
        assert main([verb, path]) == 0
        lines.append(capsys.readouterr().out.splitlines()[-1])
    assert lines == ["chi = 1/3"] * 4


def test_chi_n_and_towers(tmp_path, capsys):
    arrow2 = bicat_to_datum(cat_as_bicat(catalog.arrow()))
    tower = EulerDatum(
        3,
        cells=("a", "b"),
        hom={
            (0, 0): arrow2,
            (0, 1): arrow2,
            (1, 0): EulerDatum(2, cells=(), hom={}),
            (1, 1): arrow2,
        },
    )
    path = _write(tmp_path, "tower.json", datum_to_json(tower))
    assert main(["chi-n", path]) == 0
    assert capsys.readouterr().out.strip() == "chi = 1"

    broken = EulerDatum(
        3,
        cells=("a", "b"),
        hom={
            (0, 0): bicat_to_datum(catalog.no_weighting_bicat()),
            (0, 1): arrow2,
            (1, 0): arrow2,
            (1, 1): arrow2,
        },
    )
    path = _write(tmp_path, "broken.json", datum_to_json(broken))
    assert main(["chi-n", path]) == 2
    assert "depth 1" in capsys.readouterr().out


def test_internal_classes(tmp_path, capsys):
    doc = bicat_to_json(cat_as_bicat(catalog.thick_arrow()))
    path = _write(tmp_path, "ta.json", doc)
    assert main(["internal-classes", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "classes = 2"
    assert lines[1] == "class 0: x y"
    assert lines[2] == "class 1: z"


def test_sset_verbs(tmp_path, capsys):
    arrow = _write(tmp_path, "arrow.json", category_to_json(catalog.arrow()))
    nerve_path = tmp_path / "nerve.json"
    assert main(["nerve", arrow, "--dim", "2", "-o", str(nerve_path)]) == 0
    doc = json.loads(nerve_path.read_text())
    assert sset_from_json(doc) == nerve(catalog.arrow(), 2)

    assert main(["validate-sset", str(nerve_path)]) == 0
    assert capsys.readouterr().out.strip() == "valid"

    assert main(["horncheck", str(nerve_path), "--unique"]) == 0
    out = capsys.readouterr().out
    assert "horn (2,1): 4 instances, 0 unfilled, 0 with multiple fillers" in out
    assert "quasi = true" in out and "unique fillers = true" in out

    lam = _write(tmp_path, "horn.json", sset_to_json(horn(2, 1, 2)))
    assert main(["horncheck", lam]) == 2
    assert "quasi = false" in capsys.readouterr().out

    z3 = _write(tmp_path, "z3.json", category_to_json(catalog.cyclic_group(3)))
    z3_nerve = tmp_path / "z3_nerve.json"
    assert main(["nerve", z3, "--dim", "2", "-o", str(z3_nerve)]) == 0
    capsys.readouterr()
    assert main(["chi-sset", str(z3_nerve)]) == 0
    out = capsys.readouterr().out
    assert "kind = nerve" in out and "chi = 1/3" in out

    assert main(["chi-sset", lam]) == 2
    out = capsys.readouterr().out
    assert "kind = other" in out
    assert "chi undefined: structure is not the nerve of a category" in out


def test_usage_and_io_errors(tmp_path, capsys):
    assert main(["no-such-verb"]) == 3
    assert main(["chi", str(tmp_path / "absent.json")]) == 3
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["chi", str(garbled)]) == 3
    err = capsys.readouterr().err
    assert "malformed JSON at line" in err


def test_budget_env_is_checked(tmp_path, capsys, monkeypatch):
    thick = _write(tmp_path, "thick.json", category_to_json(catalog.thick_arrow()))
    arrow = _write(tmp_path, "arrow.json", category_to_json(catalog.arrow()))
    monkeypatch.setenv("EULERKIT_BUDGET", "-5")
    assert main(["equivalent", thick, arrow]) == 3
    assert "EULERKIT_BUDGET" in capsys.readouterr().err
    monkeypatch.setenv("EULERKIT_BUDGET", "1")
    assert main(["equivalent", thick, arrow]) == 3


def test_installed_entry_point(tmp_path):
    exe = shutil.which("eulerkit")
    assert exe, "console script should be on PATH after install"
    z3 = _write(tmp_path, "z3.json", category_to_json(catalog.cyclic_group(3)))
    proc = subprocess.run([exe, "chi", z3], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "chi = 1/3"

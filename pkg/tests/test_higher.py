"""Bicategories, recursive characteristic data, internal equivalence."""

from fractions import Fraction

import pytest

from eulerkit import (
    BudgetExceededError,
    EulerDatum,
    FormatError,
    HomChiUndefinedError,
    ValidationError,
    bicat_adjacency,
    bicat_euler_char,
    bicat_from_json,
    bicat_from_parts,
    bicat_to_datum,
    bicat_to_json,
    bicat_violations,
    cat_as_bicat,
    catalog,
    chi_n,
    datum_from_json,
    datum_of_category,
    datum_to_json,
    equivalent,
    euler_char,
    internal_equiv_classes,
    internally_equivalent,
)
from oracles import oracle_chi

POOL = [
    catalog.arrow(),
    catalog.thick_arrow(),
    catalog.parallel_pair(),
    catalog.cyclic_group(2),
    catalog.codiscrete(3),
    catalog.chain(3),
    catalog.discrete(2),
]


def test_category_seen_as_bicategory_keeps_chi():
    for cat in POOL:
        bicat = cat_as_bicat(cat)
        want = euler_char(cat)
        got = bicat_euler_char(bicat)
        assert got.exists == want.exists and got.value == want.value


def test_adjacency_of_derived_bicategory_counts_homs():
    rows = bicat_adjacency(cat_as_bicat(catalog.thick_arrow())).to_rows()
    assert [list(r) for r in rows] == [[1, 1, 1], [1, 1, 1], [0, 0, 1]]


def test_stock_bicategories():
    # hom-characteristics all 1/2: the suspension doubles the point
    susp = catalog.suspension_z2()
    rows = [list(r) for r in bicat_adjacency(susp).to_rows()]
    assert rows == [[Fraction(1, 2)] * 2] * 2
    assert oracle_chi(rows) == (True, Fraction(2))
    assert bicat_euler_char(susp).value == Fraction(2)

    tri = catalog.upper_triangular_bicat()
    rows = [list(r) for r in bicat_adjacency(tri).to_rows()]
    assert rows == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1, 2)]]
    ok, val = oracle_chi(rows)
    assert ok and val == Fraction(-1)
    assert bicat_euler_char(tri).value == Fraction(-1)

    nw = catalog.no_weighting_bicat()
    rows = [list(r) for r in bicat_adjacency(nw).to_rows()]
    assert rows == [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(2)]]
    assert oracle_chi(rows) == (False, None)
    res = bicat_euler_char(nw)
    assert not res.exists and res.value is None


def test_adjacency_refuses_characteristic_free_hom():
    # hom(x, y) has no characteristic, so no matrix entry can be written
    bad = catalog.undefined_hom_bicat()
    with pytest.raises(HomChiUndefinedError) as exc:
        bicat_adjacency(bad)
    assert tuple(exc.value.pair) == ("x", "y")
    assert exc.value.depth == 1


def test_from_parts_requires_units_and_unique_names():
    with pytest.raises(FormatError):
        bicat_from_parts(["x"], {(0, 0): catalog.discrete(1)}, {(0, 0, 0): {(0, 0): 0}})
    with pytest.raises(FormatError):
        bicat_from_parts(
            ["x", "x"],
            {(0, 0): catalog.discrete(1)},
            {(0, 0, 0): {(0, 0): 0}},
            units=[0, 0],
        )


def _one_object_idempotent_parts():
    """One 0-cell, one 1-cell, 2-cells {1, e} with e e = e."""
    hom = catalog.idempotent_monoid()
    homcat = {(0, 0): hom}
    hcomp_one = {(0, 0, 0): {(0, 0): 0}}
    one = hom.morphism_index("1")
    e = hom.morphism_index("e")
    mult = {
        (one, one): one,
        (one, e): e,
        (e, one): e,
        (e, e): e,
    }
    hcomp_two = {(0, 0, 0): mult}
    return homcat, hcomp_one, hcomp_two, e


def test_one_object_bicat_with_idempotent_two_cell():
    homcat, h1, h2, _ = _one_object_idempotent_parts()
    b = bicat_from_parts(["*"], homcat, h1, hcomp_two=h2, units=[0])
    # single hom of characteristic 1/2, so the weight doubles
    assert oracle_chi([[Fraction(1, 2)]]) == (True, Fraction(2))
    assert bicat_euler_char(b).value == Fraction(2)


def test_violations_flag_noninvertible_unitor():
    homcat, h1, h2, e = _one_object_idempotent_parts()
    with pytest.raises(ValidationError) as exc:
        bicat_from_parts(
            ["*"], homcat, h1, hcomp_two=h2, units=[0],
            left_unitor={(0, 0, 0): e},
        )
    assert any("invertible" in v for v in exc.value.violations)


def test_violations_flag_broken_tables():
    susp = catalog.suspension_z2()
    bad_one = {k: dict(v) for k, v in susp.hcomp_one.items()}
    bad_one[(0, 0, 0)][(0, 0)] = 7  # out of range
    v = bicat_violations(
        susp.zero_cells, susp.homcat, bad_one, susp.hcomp_two,
        susp.unit_one_cell, susp.associator, susp.left_unitor, susp.right_unitor,
    )
    assert v

    bad_two = {k: dict(v) for k, v in susp.hcomp_two.items()}
    key = next(iter(bad_two[(0, 0, 0)]))
    bad_two[(0, 0, 0)][key] = 1 - bad_two[(0, 0, 0)][key]
    v = bicat_violations(
        susp.zero_cells, susp.homcat, susp.hcomp_one, bad_two,
        susp.unit_one_cell, susp.associator, susp.left_unitor, susp.right_unitor,
    )
    assert v

    missing = {k: dict(v) for k, v in susp.hcomp_one.items()}
    del missing[(0, 1, 1)][(0, 0)]
    v = bicat_violations(
        susp.zero_cells, susp.homcat, missing, susp.hcomp_two,
        susp.unit_one_cell, susp.associator, susp.left_unitor, susp.right_unitor,
    )
    assert any("missing" in msg for msg in v)


def test_datum_construction_errors():
    with pytest.raises(FormatError):
        EulerDatum(0, size=-1)
    with pytest.raises(FormatError):
        EulerDatum(0, size=2, cells=("a",))
    with pytest.raises(FormatError):
        EulerDatum(1, cells=("a",), hom={})
    with pytest.raises(FormatError):
        EulerDatum(1, cells=("a",), hom={(0, 1): EulerDatum(0, size=1)})
    with pytest.raises(FormatError):
        EulerDatum(
            1,
            cells=("a",),
            hom={(0, 0): EulerDatum(1, cells=(), hom={})},
        )


def test_chi_levels_agree():
    assert chi_n(EulerDatum(0, size=5)).value == 5
    for cat in POOL:
        assert chi_n(datum_of_category(cat)).value == euler_char(cat).value
    for bicat in (
        catalog.suspension_z2(),
        catalog.upper_triangular_bicat(),
        cat_as_bicat(catalog.thick_arrow()),
    ):
        assert chi_n(bicat_to_datum(bicat)).value == bicat_euler_char(bicat).value
    nw = bicat_to_datum(catalog.no_weighting_bicat())
    res = chi_n(nw)
    assert not res.exists


def _tower_level3():
    """Two cells over [[1,1],[0,1]] with arrow-shaped hom towers."""
    arrow2 = bicat_to_datum(cat_as_bicat(catalog.arrow()))
    empty2 = EulerDatum(2, cells=(), hom={})
    return EulerDatum(
        3,
        cells=("a", "b"),
        hom={(0, 0): arrow2, (0, 1): arrow2, (1, 0): empty2, (1, 1): arrow2},
    )


def test_level_three_tower():
    # each hom tower has characteristic 1, so the top matrix is [[1,1],[0,1]]
    assert oracle_chi([[1, 1], [0, 1]]) == (True, Fraction(1))
    res = chi_n(_tower_level3())
    assert res.exists and res.value == Fraction(1)


def test_undefined_hom_characteristic_carries_path():
    nw2 = bicat_to_datum(catalog.no_weighting_bicat())
    ok2 = bicat_to_datum(cat_as_bicat(catalog.arrow()))
    datum = EulerDatum(
        3,
        cells=("a", "b"),
        hom={(0, 0): nw2, (0, 1): ok2, (1, 0): ok2, (1, 1): ok2},
    )
    with pytest.raises(HomChiUndefinedError) as exc:
        chi_n(datum)
    assert exc.value.depth == 1
    assert ("a", "a") in (tuple(exc.value.pair),)
    assert "depth 1" in str(exc.value)


def test_internal_equivalence_classes():
    ta = cat_as_bicat(catalog.thick_arrow())
    part = internal_equiv_classes(ta)
    assert sorted(map(sorted, part.classes())) == [[0, 1], [2]]

    assert internal_equiv_classes(catalog.suspension_z2()).classes() == [[0, 1]]
    assert internal_equiv_classes(catalog.upper_triangular_bicat()).classes() == [
        [0],
        [1],
    ]
    assert internal_equiv_classes(cat_as_bicat(catalog.codiscrete(3))).classes() == [
        [0, 1, 2]
    ]


def test_internal_equivalence_basics():
    susp = catalog.suspension_z2()
    assert internally_equivalent(susp, 0, 0)
    assert internally_equivalent(susp, 0, 1)
    with pytest.raises(BudgetExceededError):
        internally_equivalent(susp, 0, 1, budget=0)


def test_equivalent_zero_cells_have_equivalent_homs():
    ta = cat_as_bicat(catalog.thick_arrow())
    part = internal_equiv_classes(ta)
    for cls in part.classes():
        for x in cls:
            for y in cls:
                for z in range(len(ta.zero_cells)):
                    assert equivalent(ta.hom(x, z), ta.hom(y, z))
                    assert equivalent(ta.hom(z, x), ta.hom(z, y))


def test_bicat_json_roundtrip():
    for bicat in (
        catalog.suspension_z2(),
        catalog.upper_triangular_bicat(),
        catalog.no_weighting_bicat(),
        cat_as_bicat(catalog.thick_arrow()),
    ):
        assert bicat_from_json(bicat_to_json(bicat)) == bicat


def test_bicat_json_rejects_bad_documents():
    doc = bicat_to_json(catalog.suspension_z2())
    doc["extra"] = 1
    with pytest.raises(FormatError):
        bicat_from_json(doc)
    doc = bicat_to_json(catalog.suspension_z2())
    doc["zero_cells"] = ["a|b", "c"]
    with pytest.raises(FormatError):
        bicat_from_json(doc)
    doc = bicat_to_json(catalog.suspension_z2())
    doc["units"] = {"x": "e0"}
    with pytest.raises(FormatError):
        bicat_from_json(doc)


def test_datum_json_roundtrip():
    data = [
        EulerDatum(0, size=3),
        datum_of_category(catalog.thick_arrow()),
        bicat_to_datum(catalog.upper_triangular_bicat()),
        _tower_level3(),
    ]
    for datum in data:
        assert datum_from_json(datum_to_json(datum)) == datum
    with pytest.raises(FormatError):
        datum_from_json({"level": 1, "cells": ["a"], "hom": {}, "junk": 0})

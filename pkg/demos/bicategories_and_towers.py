#!/usr/bin/env python3
"""Bicategories and recursive hom-data towers.

The adjacency matrix of a bicategory holds hom-category characteristics
instead of hom-set sizes.  This demo compares the two readings on the
same data, visits stock bicategories whose characteristics are negative
or missing, groups zero-cells by internal equivalence, and evaluates
characteristic towers up to level 3.
"""

from eulerkit import (
    EulerDatum,
    HomChiUndefinedError,
    bicat_adjacency,
    bicat_euler_char,
    bicat_to_datum,
    cat_as_bicat,
    catalog,
    chi_n,
    datum_of_category,
    euler_char,
    internal_equiv_classes,
)
from eulerkit.qlinalg import format_rational


def matrix_text(m):
    return " / ".join(" ".join(format_rational(e) for e in row) for row in m.to_rows())


print("== a category is a bicategory with discrete homs ==")
for name, cat in (("thick arrow", catalog.thick_arrow()),
                  ("Z3", catalog.cyclic_group(3)),
                  ("diamond", catalog.diamond())):
    direct = euler_char(cat).value
    lifted = bicat_euler_char(cat_as_bicat(cat)).value
    print(f"{name:12s} chi as category = {format_rational(direct)}, "
          f"as bicategory = {format_rational(lifted)}")
print()

print("== stock bicategories ==")
susp = catalog.suspension_z2()
print("suspension of Z2:   matrix", matrix_text(bicat_adjacency(susp)),
      " chi =", format_rational(bicat_euler_char(susp).value))
tri = catalog.upper_triangular_bicat()
print("triangular example: matrix", matrix_text(bicat_adjacency(tri)),
      " chi =", format_rational(bicat_euler_char(tri).value))
print("  every hom characteristic is nonnegative, the total is not.")
nw = catalog.no_weighting_bicat()
print("no-weighting case:  matrix", matrix_text(bicat_adjacency(nw)),
      " chi exists =", bicat_euler_char(nw).exists)
print()

print("== when the matrix itself cannot be written ==")
uh = catalog.undefined_hom_bicat()
try:
    bicat_adjacency(uh)
except HomChiUndefinedError as e:
    print("bicat_adjacency raised:", e)
print("hom(x, y) here is the two-object category with counts [[2,1],[4,2]],")
print("which has no characteristic of its own.")
print()

print("== internal equivalence ==")
for name, bic in (("suspension of Z2", susp),
                  ("thick arrow as bicategory", cat_as_bicat(catalog.thick_arrow()))):
    part = internal_equiv_classes(bic)
    classes = [[bic.zero_cells[x] for x in cls] for cls in part.classes()]
    print(f"{name}: classes = {classes}")
print()

print("== towers: the same number at every level ==")
z3 = catalog.cyclic_group(3)
level1 = datum_of_category(z3)
level2 = bicat_to_datum(cat_as_bicat(z3))
print("level 0:", format_rational(chi_n(EulerDatum(0, size=3)).value),
      " (a 3-element set)")
print("level 1:", format_rational(chi_n(level1).value), " (Z3 as hom sizes)")
print("level 2:", format_rational(chi_n(level2).value), " (Z3 as hom characteristics)")

arrow2 = bicat_to_datum(cat_as_bicat(catalog.arrow()))
tower = EulerDatum(
    3,
    cells=("a", "b"),
    hom={(0, 0): arrow2, (0, 1): arrow2,
         (1, 0): EulerDatum(2, cells=(), hom={}), (1, 1): arrow2},
)
print("level 3:", format_rational(chi_n(tower).value),
      " (two cells over arrow-shaped hom towers)")

bad = EulerDatum(
    3,
    cells=("a", "b"),
    hom={(0, 0): bicat_to_datum(catalog.no_weighting_bicat()),
         (0, 1): arrow2, (1, 0): arrow2, (1, 1): arrow2},
)
try:
    chi_n(bad)
except HomChiUndefinedError as e:
    print("a tower with a characteristic-free hom reports where it failed:")
    print(" ", e)

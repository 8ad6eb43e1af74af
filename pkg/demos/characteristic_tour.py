#!/usr/bin/env python3
"""Tour of Euler characteristics of finite categories.

Walks the basic examples (sets, monoids, posets), shows the weighting and
coweighting witnesses behind each value, visits a category where the
characteristic does not exist, and finishes with the sum/product rules
and invariance under equivalence.
"""

from fractions import Fraction

from eulerkit import (
    adjacency,
    catalog,
    constant_weighting,
    coproduct,
    coweighting,
    equivalence_witness,
    euler_char,
    product,
    skeleton,
    transport_weighting,
    weighting,
)
from eulerkit.qlinalg import format_rational


def show(name, cat):
    rows = adjacency(cat).matrix.to_rows()
    res = euler_char(cat)
    value = format_rational(res.value) if res.exists else "undefined"
    print(f"{name:24s} objects={len(cat.objects)} morphisms={len(cat.morphisms)}"
          f"  chi = {value}")
    return res


def vec(values):
    return "[" + ", ".join(format_rational(v) for v in values) + "]"


print("== cardinality, groups, posets ==")
for n in (0, 1, 2, 3):
    show(f"discrete({n})", catalog.discrete(n))
for m in (2, 3, 4, 6):
    show(f"cyclic group Z{m}", catalog.cyclic_group(m))
show("klein four group", catalog.klein_four())
show("chain(4)", catalog.chain(4))
show("diamond poset", catalog.diamond())
print()
print("a discrete category counts its objects, a one-object category")
print("inverts its morphism count, and any poset with a top or bottom")
print("element lands on 1.")
print()

print("== the witnesses behind the numbers ==")
two = catalog.arrow()
print("two objects, one arrow x -> y; hom counts [[1,1],[0,1]]")
print("  weighting  ", vec(weighting(two).values))
print("  coweighting", vec(coweighting(two).values))
three = catalog.thick_arrow()
print("isomorphic pair x ~ y under a third object z")
print("  weighting  ", vec(weighting(three).values))
print("  coweighting", vec(coweighting(three).values))
print("  (this system is underdetermined; the solver pins free variables")
print("   to zero, and any nullspace shift keeps the same sum)")
print()

print("== a category with no characteristic at all ==")
nw = catalog.no_weighting_category()
rows = adjacency(nw).matrix.to_rows()
print("hom counts", [[str(e) for e in r] for r in rows])
print("row 2 is twice row 1, so M v = 1 wants 1 = 2: no weighting.")
print("column 1 is twice column 2, so the coweighting fails the same way.")
res = euler_char(nw)
print("euler_char ->", "exists" if res.exists else "does not exist")
print()

print("== disjoint unions add, products multiply ==")
a, b = catalog.cyclic_group(2), catalog.chain(3)
ca, cb = euler_char(a).value, euler_char(b).value
print(f"chi(Z2) = {format_rational(ca)}, chi(chain(3)) = {format_rational(cb)}")
print(f"chi(Z2 + chain(3)) = {format_rational(euler_char(coproduct(a, b)).value)}")
print(f"chi(Z2 x chain(3)) = {format_rational(euler_char(product(a, b)).value)}")
print()

print("== equivalence invariance ==")
thick = catalog.thick_arrow()
sk = skeleton(thick)
print(f"thick arrow has {len(thick.objects)} objects, skeleton has {len(sk.objects)}")
print(f"chi before = {format_rational(euler_char(thick).value)}, "
      f"after = {format_rational(euler_char(sk).value)}")
wit = equivalence_witness(thick, sk)
moved = transport_weighting(thick, sk, wit, constant_weighting(sk))
print("weighting transported back across the equivalence:", vec(moved.values))
print("its sum is chi again:", format_rational(sum(moved.values, Fraction(0))))

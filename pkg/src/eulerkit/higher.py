"""Finite bicategories and recursive Euler data.

A bicategory is stored as zero-cells, one hom-category per ordered pair,
horizontal-composition tables (on 1-cells and on 2-cells), unit 1-cells,
and associator/unitor 2-cells.  Validation checks endpoints, functoriality
of horizontal composition, and invertibility of every coherence cell; it
deliberately does not check the pentagon or triangle diagrams.  Omitted
coherence cells default to identities, so a bare structure is read as
strict and validation then enforces that the tables really are strictly
associative and unital.

Euler data generalise the adjacency-matrix picture to any level: a
level-0 datum is a finite set recorded by its size, and a level-n datum
is a cell list with a level-(n-1) datum per ordered pair of cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    FormatError,
    HomChiUndefinedError,
    ValidationError,
)
from .fincat import (
    FinCat,
    Morphism,
    category_from_json,
    category_to_json,
    category_violations,
    objects_isomorphic,
    search_budget,
    validate_category,
)
from .magnitude import EulerResult, Weighting, euler_char, euler_of_matrix
from .qlinalg import QMatrix


@dataclass(frozen=True)
class FinBicat:
    zero_cells: tuple[str, ...]
    homcat: dict[tuple[int, int], FinCat]
    hcomp_one: dict[tuple[int, int, int], dict[tuple[int, int], int]]
    hcomp_two: dict[tuple[int, int, int], dict[tuple[int, int], int]]
    unit_one_cell: tuple[int, ...]
    associator: dict[tuple, int]  # (x,y,z,w,h,g,f) -> 2-cell in homcat(x,w)
    left_unitor: dict[tuple[int, int, int], int]  # (x,y,f) -> 2-cell in homcat(x,y)
    right_unitor: dict[tuple[int, int, int], int]

    def hom(self, x: int, y: int) -> FinCat:
        return self.homcat[(x, y)]


_EMPTY_CAT = FinCat((), (), (), {})


def _fill_strict_defaults(zero_cells, homcat, hcomp_one, hcomp_two, units,
                          associator, left_unitor, right_unitor):
    """Complete omitted parts with their strict (identity) readings."""
    n = len(zero_cells)
    homcat = dict(homcat)
    for x in range(n):
        for y in range(n):
            homcat.setdefault((x, y), _EMPTY_CAT)
    hcomp_one = {k: dict(v) for k, v in hcomp_one.items()}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                hcomp_one.setdefault((x, y, z), {})
    hcomp_two = {k: dict(v) for k, v in (hcomp_two or {}).items()}
    for key in hcomp_one:
        hcomp_two.setdefault(key, {})
    # Identity 2-cell pairs compose to the identity of the composite 1-cell.
    for (x, y, z), table in hcomp_one.items():
        two = hcomp_two[(x, y, z)]
        hyz, hxy = homcat[(y, z)], homcat[(x, y)]
        for (g, f), gf in table.items():
            pair = (hyz.identity[g], hxy.identity[f])
            if pair not in two:
                two[pair] = homcat[(x, z)].identity[gf]
    associator = dict(associator or {})
    for (y, z, w), outer in hcomp_one.items():
        for x in range(n):
            inner = hcomp_one[(x, y, z)]
            for (h, g) in outer:
                for f in range(len(homcat[(x, y)].objects)):
                    key = (x, y, z, w, h, g, f)
                    if key in associator:
                        continue
                    gf = inner.get((g, f))
                    if gf is None:
                        continue
                    hg = outer.get((h, g))
                    if hg is None:
                        continue
                    src = hcomp_one[(x, y, w)].get((hg, f))
                    if src is None:
                        continue
                    associator[key] = homcat[(x, w)].identity[src]
    left_unitor = dict(left_unitor or {})
    right_unitor = dict(right_unitor or {})
    for x in range(n):
        for y in range(n):
            hxy = homcat[(x, y)]
            for f in range(len(hxy.objects)):
                if (x, y, f) not in left_unitor:
                    comp = hcomp_one[(x, y, y)].get((units[y], f))
                    if comp is not None:
                        left_unitor[(x, y, f)] = hxy.identity[comp]
                if (x, y, f) not in right_unitor:
                    comp = hcomp_one[(x, x, y)].get((f, units[x]))
                    if comp is not None:
                        right_unitor[(x, y, f)] = hxy.identity[comp]
    return homcat, hcomp_one, hcomp_two, associator, left_unitor, right_unitor


def _is_invertible(cat: FinCat, m: int) -> bool:
    src, tgt = cat.morphisms[m].src, cat.morphisms[m].tgt
    for inv in cat.hom(tgt, src):
        if (
            cat.comp.get((inv, m)) == cat.identity[src]
            and cat.comp.get((m, inv)) == cat.identity[tgt]
        ):
            return True
    return False


def bicat_violations(zero_cells, homcat, hcomp_one, hcomp_two, units,
                     associator, left_unitor, right_unitor) -> list[str]:
    """All structural violations; inputs must already carry strict defaults."""
    v: list[str] = []
    n = len(zero_cells)

    for (x, y), cat in sorted(homcat.items()):
        if not (0 <= x < n and 0 <= y < n):
            raise FormatError(f"hom-category key ({x},{y}) out of range")
        inner = category_violations(cat.objects, cat.morphisms, cat.identity, cat.comp)
        v.extend(f"hom({zero_cells[x]},{zero_cells[y]}): {msg}" for msg in inner)

    if len(units) != n:
        raise FormatError("unit list length != zero-cell count")
    for x in range(n):
        if not (0 <= units[x] < len(homcat[(x, x)].objects)):
            v.append(f"unit 1-cell of {zero_cells[x]} is out of range")

    for (x, y, z), table in sorted(hcomp_one.items()):
        hyz, hxy, hxz = homcat[(y, z)], homcat[(x, y)], homcat[(x, z)]
        dom = {(g, f) for g in range(len(hyz.objects)) for f in range(len(hxy.objects))}
        where = f"hcomp({zero_cells[x]},{zero_cells[y]},{zero_cells[z]})"
        for pair in sorted(dom - table.keys()):
            v.append(f"{where}: missing 1-cell composite for {pair}")
        for pair in sorted(table.keys() - dom):
            v.append(f"{where}: 1-cell composite on out-of-range pair {pair}")
        for pair, res in sorted(table.items()):
            if pair in dom and not (0 <= res < len(hxz.objects)):
                v.append(f"{where}: 1-cell composite {pair} -> {res} out of range")

        two = hcomp_two[(x, y, z)]
        dom2 = {
            (b, a)
            for b in range(len(hyz.morphisms))
            for a in range(len(hxy.morphisms))
        }
        for pair in sorted(dom2 - two.keys()):
            v.append(f"{where}: missing 2-cell composite for {pair}")
        for pair in sorted(two.keys() - dom2):
            v.append(f"{where}: 2-cell composite on out-of-range pair {pair}")
        ok_endpoints = True
        for (b, a), res in sorted(two.items()):
            if (b, a) not in dom2:
                continue
            if not (0 <= res < len(hxz.morphisms)):
                v.append(f"{where}: 2-cell composite {(b, a)} -> {res} out of range")
                ok_endpoints = False
                continue
            beta, alpha = hyz.morphisms[b], hxy.morphisms[a]
            want_src = table.get((beta.src, alpha.src))
            want_tgt = table.get((beta.tgt, alpha.tgt))
            got = hxz.morphisms[res]
            if want_src is not None and got.src != want_src:
                v.append(f"{where}: 2-cell composite {(b, a)} has source {got.src}, expected {want_src}")
                ok_endpoints = False
            if want_tgt is not None and got.tgt != want_tgt:
                v.append(f"{where}: 2-cell composite {(b, a)} has target {got.tgt}, expected {want_tgt}")
                ok_endpoints = False
        # Functoriality of horizontal composition.
        if not two.keys() - dom2 and not dom2 - two.keys() and ok_endpoints:
            for (g, f), gf in sorted(table.items()):
                if (g, f) in dom:
                    idp = (hyz.identity[g], hxy.identity[f])
                    if two[idp] != hxz.identity[gf]:
                        v.append(f"{where}: identity 2-cells at {(g, f)} do not compose to an identity")
            for (b1, a1), r1 in sorted(two.items()):
                beta1, alpha1 = hyz.morphisms[b1], hxy.morphisms[a1]
                for b2 in range(len(hyz.morphisms)):
                    if hyz.morphisms[b2].src != beta1.tgt:
                        continue
                    for a2 in range(len(hxy.morphisms)):
                        if hxy.morphisms[a2].src != alpha1.tgt:
                            continue
                        vert = (hyz.comp[(b2, b1)], hxy.comp[(a2, a1)])
                        want = hxz.comp.get((two[(b2, a2)], r1))
                        if two[vert] != want:
                            v.append(
                                f"{where}: horizontal composition is not functorial at "
                                f"(({b2},{a2}) . ({b1},{a1}))"
                            )

    # Associator cells: total over composable 1-cell triples, endpoints, invertibility.
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    hxy, hyz, hzw = homcat[(x, y)], homcat[(y, z)], homcat[(z, w)]
                    hxw = homcat[(x, w)]
                    for h in range(len(hzw.objects)):
                        for g in range(len(hyz.objects)):
                            for f in range(len(hxy.objects)):
                                key = (x, y, z, w, h, g, f)
                                name = (
                                    f"associator({zero_cells[x]},{zero_cells[y]},"
                                    f"{zero_cells[z]},{zero_cells[w]}; h={h},g={g},f={f})"
                                )
                                cell = associator.get(key)
                                if cell is None:
                                    v.append(f"{name}: missing")
                                    continue
                                hg = hcomp_one[(y, z, w)].get((h, g))
                                gf = hcomp_one[(x, y, z)].get((g, f))
                                if hg is None or gf is None:
                                    continue  # already reported as hcomp gaps
                                src = hcomp_one[(x, y, w)].get((hg, f))
                                tgt = hcomp_one[(x, z, w)].get((h, gf))
                                if src is None or tgt is None:
                                    continue
                                if not (0 <= cell < len(hxw.morphisms)):
                                    v.append(f"{name}: cell index out of range")
                                    continue
                                mor = hxw.morphisms[cell]
                                if mor.src != src or mor.tgt != tgt:
                                    v.append(
                                        f"{name}: endpoints {mor.src}->{mor.tgt}, "
                                        f"expected {src}->{tgt}"
                                    )
                                elif not _is_invertible(hxw, cell):
                                    v.append(f"{name}: not invertible")

    for side, table in (("left unitor", left_unitor), ("right unitor", right_unitor)):
        for x in range(n):
            for y in range(n):
                hxy = homcat[(x, y)]
                for f in range(len(hxy.objects)):
                    name = f"{side}({zero_cells[x]},{zero_cells[y]}; f={f})"
                    cell = table.get((x, y, f))
                    if cell is None:
                        v.append(f"{name}: missing")
                        continue
                    if side == "left unitor":
                        src = hcomp_one[(x, y, y)].get((units[y], f))
                    else:
                        src = hcomp_one[(x, x, y)].get((f, units[x]))
                    if src is None:
                        continue
                    if not (0 <= cell < len(hxy.morphisms)):
                        v.append(f"{name}: cell index out of range")
                        continue
                    mor = hxy.morphisms[cell]
                    if mor.src != src or mor.tgt != f:
                        v.append(f"{name}: endpoints {mor.src}->{mor.tgt}, expected {src}->{f}")
                    elif not _is_invertible(hxy, cell):
                        v.append(f"{name}: not invertible")
    return v


def bicat_from_parts(zero_cells, homcat, hcomp_one, hcomp_two=None, units=None,
                     associator=None, left_unitor=None, right_unitor=None) -> FinBicat:
    """Validated bicategory; omitted coherence data is read as strict."""
    if units is None:
        raise FormatError("unit 1-cells are required")
    zero_cells = tuple(str(z) for z in zero_cells)
    if len(set(zero_cells)) != len(zero_cells):
        raise FormatError("zero-cell names are not unique")
    units = tuple(int(u) for u in units)
    homcat, hcomp_one, hcomp_two, associator, left_unitor, right_unitor = (
        _fill_strict_defaults(zero_cells, homcat, hcomp_one, hcomp_two, units,
                              associator, left_unitor, right_unitor)
    )
    violations = bicat_violations(zero_cells, homcat, hcomp_one, hcomp_two, units,
                                  associator, left_unitor, right_unitor)
    if violations:
        raise ValidationError(violations)
    return FinBicat(zero_cells, homcat, hcomp_one, hcomp_two, units,
                    associator, left_unitor, right_unitor)


def discrete_category(names) -> FinCat:
    """Category with the given objects and only identity morphisms."""
    names = tuple(str(o) for o in names)
    morphisms = tuple(Morphism(f"1{o}", i, i) for i, o in enumerate(names))
    return validate_category(
        names, morphisms, tuple(range(len(names))), {(i, i): i for i in range(len(names))}
    )


def cat_as_bicat(cat: FinCat) -> FinBicat:
    """View a category as a strict bicategory with discrete hom-categories."""
    n = len(cat.objects)
    hom_lists = {(x, y): cat.hom(x, y) for x in range(n) for y in range(n)}
    local = {}
    for pair, mors in hom_lists.items():
        local.update({(pair, m): i for i, m in enumerate(mors)})
    homcat = {
        pair: discrete_category([cat.morphisms[m].name for m in mors])
        for pair, mors in hom_lists.items()
    }
    hcomp_one = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                table = {}
                for jg, g in enumerate(hom_lists[(y, z)]):
                    for jf, f in enumerate(hom_lists[(x, y)]):
                        table[(jg, jf)] = local[((x, z), cat.comp[(g, f)])]
                hcomp_one[(x, y, z)] = table
    units = tuple(local[((x, x), cat.identity[x])] for x in range(n))
    return bicat_from_parts(cat.objects, homcat, hcomp_one, units=units)


def bicat_adjacency(bicat: FinBicat) -> QMatrix:
    """Matrix of hom-category Euler characteristics in zero-cell order."""
    n = len(bicat.zero_cells)
    entries = []
    for i in range(n):
        for j in range(n):
            res = euler_char(bicat.homcat[(i, j)])
            if not res.exists:
                raise HomChiUndefinedError(
                    (bicat.zero_cells[i], bicat.zero_cells[j])
                )
            entries.append(res.value)
    return QMatrix(n, n, tuple(entries))


def bicat_euler_char(bicat: FinBicat) -> EulerResult:
    return euler_of_matrix(bicat_adjacency(bicat))


# --- Euler data ---------------------------------------------------------------


@dataclass(frozen=True)
class EulerDatum:
    """Recursive hom-size data: level 0 is a set size, level n >= 1 is a
    cell list with a level-(n-1) datum per ordered pair of cells."""

    level: int
    size: int | None = None
    cells: tuple[str, ...] | None = None
    hom: dict[tuple[int, int], "EulerDatum"] | None = None

    def __post_init__(self):
        if self.level < 0:
            raise FormatError("negative level")
        if self.level == 0:
            if self.size is None or self.size < 0:
                raise FormatError("level-0 datum needs a nonnegative size")
            if self.cells is not None or self.hom is not None:
                raise FormatError("level-0 datum carries only a size")
            return
        if self.size is not None:
            raise FormatError("positive-level datum must not carry a size")
        if self.cells is None or self.hom is None:
            raise FormatError("positive-level datum needs cells and hom data")
        object.__setattr__(self, "cells", tuple(str(c) for c in self.cells))
        n = len(self.cells)
        for key in self.hom:
            i, j = key
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(f"hom datum pair {key} out of range")
        for i in range(n):
            for j in range(n):
                sub = self.hom.get((i, j))
                if sub is None:
                    raise FormatError(f"missing hom datum for pair ({i},{j})")
                if sub.level != self.level - 1:
                    raise FormatError(
                        f"hom datum at ({i},{j}) has level {sub.level}, "
                        f"expected {self.level - 1}"
                    )


def datum_of_category(cat: FinCat) -> EulerDatum:
    """Level-1 datum recording the hom-set sizes of a category."""
    n = len(cat.objects)
    hom = {
        (i, j): EulerDatum(0, size=cat.hom_count(i, j))
        for i in range(n)
        for j in range(n)
    }
    return EulerDatum(1, cells=cat.objects, hom=hom)


def bicat_to_datum(bicat: FinBicat) -> EulerDatum:
    """Level-2 datum: zero-cells, then each hom-category's level-1 datum."""
    n = len(bicat.zero_cells)
    hom = {
        (i, j): datum_of_category(bicat.homcat[(i, j)])
        for i in range(n)
        for j in range(n)
    }
    return EulerDatum(2, cells=bicat.zero_cells, hom=hom)


def chi_n(datum: EulerDatum, _path: tuple = ()) -> EulerResult:
    """Euler characteristic of a datum at any level.

    Level 0 is the set size.  At level n the adjacency matrix collects the
    recursive characteristics of the hom data; if one of those does not
    exist the computation cannot proceed and HomChiUndefinedError reports
    the pair, its depth, and the descent path.  Non-existence at the top
    level itself is an ordinary EulerResult(exists=False).
    """
    if datum.level == 0:
        ones = tuple(Fraction(1) for _ in range(datum.size))
        return EulerResult(
            True,
            Fraction(datum.size),
            Weighting(ones, "weighting"),
            Weighting(ones, "coweighting"),
        )
    n = len(datum.cells)
    entries = []
    for i in range(n):
        for j in range(n):
            pair = (datum.cells[i], datum.cells[j])
            path = _path + (pair,)
            sub = chi_n(datum.hom[(i, j)], path)
            if not sub.exists:
                raise HomChiUndefinedError(pair, depth=len(path), path=path)
            entries.append(sub.value)
    return euler_of_matrix(QMatrix(n, n, tuple(entries)))


# --- internal equivalence ------------------------------------------------------


@dataclass(frozen=True)
class InternalEquivPartition:
    """Zero-cells grouped by internal equivalence, numbered by least member."""

    class_of: tuple[int, ...]
    representatives: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.representatives]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out


def internally_equivalent(bicat: FinBicat, x: int, y: int,
                          budget: int | None = None) -> bool:
    """1-cells f: x->y, g: y->x with both round trips isomorphic to units."""
    if x == y:
        return True
    limit = search_budget(budget)
    nodes = 0
    hom_xy = bicat.homcat[(x, y)]
    hom_yx = bicat.homcat[(y, x)]
    gf_table = bicat.hcomp_one[(x, y, x)]
    fg_table = bicat.hcomp_one[(y, x, y)]
    for f in range(len(hom_xy.objects)):
        for g in range(len(hom_yx.objects)):
            nodes += 1
            if nodes > limit:
                raise BudgetExceededError(limit)
            if objects_isomorphic(
                bicat.homcat[(x, x)], gf_table[(g, f)], bicat.unit_one_cell[x]
            ) and objects_isomorphic(
                bicat.homcat[(y, y)], fg_table[(f, g)], bicat.unit_one_cell[y]
            ):
                return True
    return False


def internal_equiv_classes(bicat: FinBicat, budget: int | None = None) -> InternalEquivPartition:
    n = len(bicat.zero_cells)
    rep = list(range(n))

    def find(a):
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    for x in range(n):
        for y in range(x + 1, n):
            if internally_equivalent(bicat, x, y, budget=budget):
                rx, ry = find(x), find(y)
                if rx != ry:
                    rep[max(rx, ry)] = min(rx, ry)
    roots = sorted({find(x) for x in range(n)})
    ids = {r: i for i, r in enumerate(roots)}
    return InternalEquivPartition(
        tuple(ids[find(x)] for x in range(n)), tuple(roots)
    )


# --- JSON interchange ----------------------------------------------------------


def _split_key(key: str, parts: int, where: str, names: dict[str, int]) -> tuple[int, ...]:
    bits = key.split("|")
    if len(bits) != parts:
        raise FormatError(f"{where}: key {key!r} must have {parts} |-separated cells")
    out = []
    for b in bits:
        if b not in names:
            raise FormatError(f"{where}: unknown zero-cell {b!r} in key {key!r}")
        out.append(names[b])
    return tuple(out)


def bicat_from_json(data: dict) -> FinBicat:
    _check = {"zero_cells", "hom", "hcomp", "units", "associators", "unitors"}
    unknown = set(data) - _check
    if unknown:
        raise FormatError(f"bicategory: unknown keys {sorted(unknown)}")
    for key in ("zero_cells", "hom", "hcomp", "units"):
        if key not in data:
            raise FormatError(f"bicategory: missing key {key!r}")
    zero_cells = data["zero_cells"]
    if not isinstance(zero_cells, list) or not all(isinstance(z, str) for z in zero_cells):
        raise FormatError("bicategory: zero_cells must be a list of strings")
    if any("|" in z for z in zero_cells):
        raise FormatError("bicategory: zero-cell names may not contain '|'")
    if len(set(zero_cells)) != len(zero_cells):
        raise FormatError("bicategory: zero-cell names are not unique")
    names = {z: i for i, z in enumerate(zero_cells)}

    homcat = {}
    for key, sub in data["hom"].items():
        pair = _split_key(key, 2, "hom", names)
        homcat[pair] = category_from_json(sub)
    n = len(zero_cells)
    for x in range(n):
        for y in range(n):
            homcat.setdefault((x, y), _EMPTY_CAT)

    def obj_index(cat: FinCat, name, where):
        try:
            return cat.objects.index(name)
        except ValueError:
            raise FormatError(f"{where}: unknown 1-cell {name!r}") from None

    def mor_index(cat: FinCat, name, where):
        for i, m in enumerate(cat.morphisms):
            if m.name == name:
                return i
        raise FormatError(f"{where}: unknown 2-cell {name!r}")

    hcomp_one: dict = {}
    hcomp_two: dict = {}
    for key, tables in data["hcomp"].items():
        x, y, z = _split_key(key, 3, "hcomp", names)
        allowed = {"one_cells", "two_cells"}
        unknown = set(tables) - allowed
        if unknown:
            raise FormatError(f"hcomp {key!r}: unknown keys {sorted(unknown)}")
        one = {}
        for k, entry in enumerate(tables.get("one_cells", [])):
            where = f"hcomp {key!r} one_cells #{k}"
            if set(entry) != {"g", "f", "equals"}:
                raise FormatError(f"{where}: keys must be g, f, equals")
            one[(obj_index(homcat[(y, z)], entry["g"], where),
                 obj_index(homcat[(x, y)], entry["f"], where))] = obj_index(
                homcat[(x, z)], entry["equals"], where)
        two = {}
        for k, entry in enumerate(tables.get("two_cells", [])):
            where = f"hcomp {key!r} two_cells #{k}"
            if set(entry) != {"beta", "alpha", "equals"}:
                raise FormatError(f"{where}: keys must be beta, alpha, equals")
            two[(mor_index(homcat[(y, z)], entry["beta"], where),
                 mor_index(homcat[(x, y)], entry["alpha"], where))] = mor_index(
                homcat[(x, z)], entry["equals"], where)
        hcomp_one[(x, y, z)] = one
        hcomp_two[(x, y, z)] = two

    units_raw = data["units"]
    if set(units_raw) != set(zero_cells):
        raise FormatError("units: must name exactly the zero-cells")
    units = tuple(
        obj_index(homcat[(names[z], names[z])], units_raw[z], f"units[{z!r}]")
        for z in zero_cells
    )

    associator = {}
    for k, entry in enumerate(data.get("associators", [])):
        where = f"associators #{k}"
        if set(entry) != {"path", "h", "g", "f", "equals"}:
            raise FormatError(f"{where}: keys must be path, h, g, f, equals")
        x, y, z, w = _split_key(entry["path"], 4, where, names)
        associator[(x, y, z, w,
                    obj_index(homcat[(z, w)], entry["h"], where),
                    obj_index(homcat[(y, z)], entry["g"], where),
                    obj_index(homcat[(x, y)], entry["f"], where))] = mor_index(
            homcat[(x, w)], entry["equals"], where)

    left_unitor: dict = {}
    right_unitor: dict = {}
    unitors = data.get("unitors", {})
    unknown = set(unitors) - {"left", "right"}
    if unknown:
        raise FormatError(f"unitors: unknown keys {sorted(unknown)}")
    for side, store in (("left", left_unitor), ("right", right_unitor)):
        for k, entry in enumerate(unitors.get(side, [])):
            where = f"unitors.{side} #{k}"
            if set(entry) != {"path", "f", "equals"}:
                raise FormatError(f"{where}: keys must be path, f, equals")
            x, y = _split_key(entry["path"], 2, where, names)
            store[(x, y, obj_index(homcat[(x, y)], entry["f"], where))] = mor_index(
                homcat[(x, y)], entry["equals"], where)

    return bicat_from_parts(zero_cells, homcat, hcomp_one, hcomp_two, units,
                            associator, left_unitor, right_unitor)


def bicat_to_json(bicat: FinBicat) -> dict:
    """Inverse of bicat_from_json; inferable strict data is left implicit."""
    zc = bicat.zero_cells
    hom = {}
    for (x, y), cat in sorted(bicat.homcat.items()):
        if cat.objects:
            hom[f"{zc[x]}|{zc[y]}"] = category_to_json(cat)
    hcomp = {}
    for (x, y, z), table in sorted(bicat.hcomp_one.items()):
        if not table:
            continue
        hyz, hxy, hxz = bicat.homcat[(y, z)], bicat.homcat[(x, y)], bicat.homcat[(x, z)]
        one = [
            {"g": hyz.objects[g], "f": hxy.objects[f], "equals": hxz.objects[r]}
            for (g, f), r in sorted(table.items())
        ]
        two = []
        for (b, a), r in sorted(bicat.hcomp_two[(x, y, z)].items()):
            beta, alpha = hyz.morphisms[b], hxy.morphisms[a]
            if b == hyz.identity[beta.src] and a == hxy.identity[alpha.src]:
                continue  # inferable identity pair
            two.append({"beta": beta.name, "alpha": alpha.name, "equals": hxz.morphisms[r].name})
        entry: dict = {"one_cells": one}
        if two:
            entry["two_cells"] = two
        hcomp[f"{zc[x]}|{zc[y]}|{zc[z]}"] = entry
    units = {
        zc[x]: bicat.homcat[(x, x)].objects[u]
        for x, u in enumerate(bicat.unit_one_cell)
    }
    out = {"zero_cells": list(zc), "hom": hom, "hcomp": hcomp, "units": units}
    associators = []
    for (x, y, z, w, h, g, f), cell in sorted(bicat.associator.items()):
        hxw = bicat.homcat[(x, w)]
        src = bicat.hcomp_one[(x, y, w)][(bicat.hcomp_one[(y, z, w)][(h, g)], f)]
        if cell == hxw.identity[src]:
            continue
        associators.append({
            "path": f"{zc[x]}|{zc[y]}|{zc[z]}|{zc[w]}",
            "h": bicat.homcat[(z, w)].objects[h],
            "g": bicat.homcat[(y, z)].objects[g],
            "f": bicat.homcat[(x, y)].objects[f],
            "equals": hxw.morphisms[cell].name,
        })
    if associators:
        out["associators"] = associators
    unitors: dict = {}
    for side, table in (("left", bicat.left_unitor), ("right", bicat.right_unitor)):
        rows = []
        for (x, y, f), cell in sorted(table.items()):
            hxy = bicat.homcat[(x, y)]
            if side == "left":
                src = bicat.hcomp_one[(x, y, y)][(bicat.unit_one_cell[y], f)]
            else:
                src = bicat.hcomp_one[(x, x, y)][(f, bicat.unit_one_cell[x])]
            if cell == hxy.identity[src]:
                continue
            rows.append({"path": f"{zc[x]}|{zc[y]}", "f": hxy.objects[f],
                         "equals": hxy.morphisms[cell].name})
        if rows:
            unitors[side] = rows
    if unitors:
        out["unitors"] = unitors
    return out


def datum_from_json(data: dict) -> EulerDatum:
    if not isinstance(data, dict):
        raise FormatError("datum: expected an object")
    if "level" not in data:
        raise FormatError("datum: missing key 'level'")
    level = data["level"]
    if not isinstance(level, int) or level < 0:
        raise FormatError("datum: level must be a nonnegative integer")
    if level == 0:
        unknown = set(data) - {"level", "size"}
        if unknown:
            raise FormatError(f"datum: unknown keys {sorted(unknown)}")
        if "size" not in data or not isinstance(data["size"], int) or data["size"] < 0:
            raise FormatError("datum: level 0 needs a nonnegative integer size")
        return EulerDatum(0, size=data["size"])
    unknown = set(data) - {"level", "cells", "hom"}
    if unknown:
        raise FormatError(f"datum: unknown keys {sorted(unknown)}")
    for key in ("cells", "hom"):
        if key not in data:
            raise FormatError(f"datum: missing key {key!r}")
    cells = data["cells"]
    if not isinstance(cells, list) or not all(isinstance(c, str) for c in cells):
        raise FormatError("datum: cells must be a list of strings")
    if any("|" in c for c in cells):
        raise FormatError("datum: cell names may not contain '|'")
    if len(set(cells)) != len(cells):
        raise FormatError("datum: cell names are not unique")
    names = {c: i for i, c in enumerate(cells)}
    hom = {}
    for key, sub in data["hom"].items():
        pair = _split_key(key, 2, "datum hom", names)
        hom[pair] = datum_from_json(sub)
    return EulerDatum(level, cells=tuple(cells), hom=hom)


def datum_to_json(datum: EulerDatum) -> dict:
    if datum.level == 0:
        return {"level": 0, "size": datum.size}
    return {
        "level": datum.level,
        "cells": list(datum.cells),
        "hom": {
            f"{datum.cells[i]}|{datum.cells[j]}": datum_to_json(sub)
            for (i, j), sub in sorted(datum.hom.items())
        },
    }

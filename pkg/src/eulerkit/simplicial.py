"""Truncated simplicial sets, horns, nerves, and reconstruction.

Everything lives below a truncation dimension (default 4): a structure
stores simplex ids per level together with face and degeneracy tables,
and validation checks totality plus the five simplicial identities as
far as the truncation allows.  Horn instances in an ambient structure
are compatible families of faces; counting their fillers distinguishes
nerve-like structures (unique inner fillers) from merely quasi ones.
Nerve-like structures can be folded back into a category.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import FormatError, NotNerveShapedError, ValidationError
from .fincat import FinCat, Morphism, category_violations, validate_category
from .magnitude import EulerResult, euler_char

DEFAULT_DIM = 4


@dataclass(frozen=True)
class TruncatedSSet:
    """Simplicial set truncated at a dimension.

    simplices[n] lists the ids at level n; face[(n, i)] and
    degeneracy[(n, i)] are the i-th structure maps out of level n.
    """

    dim: int
    simplices: tuple[tuple[str, ...], ...]
    face: dict[tuple[int, int], dict[str, str]]
    degeneracy: dict[tuple[int, int], dict[str, str]]

    def level(self, n: int) -> tuple[str, ...]:
        return self.simplices[n] if 0 <= n <= self.dim else ()

    def counts(self) -> list[int]:
        return [len(lvl) for lvl in self.simplices]


def _required_keys(dim: int):
    faces = [(n, i) for n in range(1, dim + 1) for i in range(n + 1)]
    degs = [(n, i) for n in range(dim) for i in range(n + 1)]
    return faces, degs


def sset_violations(dim, simplices, face, degeneracy) -> list[str]:
    """Totality, level correctness, and the five simplicial identities.

    Shape problems (bad dimensions, duplicate ids, out-of-range table
    keys) raise FormatError; everything else is reported as violations.
    """
    if dim < 0:
        raise FormatError("truncation dimension must be nonnegative")
    if len(simplices) != dim + 1:
        raise FormatError(f"expected {dim + 1} simplex levels, got {len(simplices)}")
    for n, level in enumerate(simplices):
        if not all(isinstance(s, str) for s in level):
            raise FormatError(f"level {n}: simplex ids must be strings")
        if len(set(level)) != len(level):
            raise FormatError(f"level {n}: simplex ids are not unique")
    face_keys, deg_keys = _required_keys(dim)
    for key in face:
        if key not in face_keys:
            raise FormatError(f"face table key {key} out of range")
    for key in degeneracy:
        if key not in deg_keys:
            raise FormatError(f"degeneracy table key {key} out of range")

    v: list[str] = []
    level_sets = [set(level) for level in simplices]

    def check_tables(keys, tables, kind, target_shift):
        for (n, i) in keys:
            table = tables.get((n, i), {})
            for s in simplices[n]:
                if s not in table:
                    v.append(f"{kind}({n},{i}) missing for simplex {s!r}")
                elif table[s] not in level_sets[n + target_shift]:
                    v.append(
                        f"{kind}({n},{i}) sends {s!r} to {table[s]!r}, "
                        f"not a level-{n + target_shift} simplex"
                    )
            for s in table:
                if s not in level_sets[n]:
                    v.append(f"{kind}({n},{i}) defined on unknown simplex {s!r}")

    check_tables(face_keys, face, "face", -1)
    check_tables(deg_keys, degeneracy, "degeneracy", +1)

    def fv(n, i, s):
        return face.get((n, i), {}).get(s)

    def dv(n, i, s):
        return degeneracy.get((n, i), {}).get(s)

    def defined(x):
        return x is not None

    # 1. face-face: d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, dim + 1):
        for j in range(1, n + 1):
            for i in range(j):
                for s in simplices[n]:
                    a, b = fv(n, j, s), fv(n, i, s)
                    if defined(a) and defined(b):
                        lhs, rhs = fv(n - 1, i, a), fv(n - 1, j - 1, b)
                        if defined(lhs) and defined(rhs) and lhs != rhs:
                            v.append(
                                f"identity 1 fails at level {n}, (i,j)=({i},{j}), "
                                f"simplex {s!r}"
                            )
    # 5. degeneracy-degeneracy: s_i s_j = s_{j+1} s_i for i <= j
    for n in range(0, dim - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for s in simplices[n]:
                    a, b = dv(n, j, s), dv(n, i, s)
                    if defined(a) and defined(b):
                        lhs, rhs = dv(n + 1, i, a), dv(n + 1, j + 1, b)
                        if defined(lhs) and defined(rhs) and lhs != rhs:
                            v.append(
                                f"identity 5 fails at level {n}, (i,j)=({i},{j}), "
                                f"simplex {s!r}"
                            )
    # 2. mixed, i < j: d_i s_j = s_{j-1} d_i
    for n in range(1, dim):
        for j in range(1, n + 1):
            for i in range(j):
                for s in simplices[n]:
                    a, b = dv(n, j, s), fv(n, i, s)
                    if defined(a) and defined(b):
                        lhs, rhs = fv(n + 1, i, a), dv(n - 1, j - 1, b)
                        if defined(lhs) and defined(rhs) and lhs != rhs:
                            v.append(
                                f"identity 2 fails at level {n}, (i,j)=({i},{j}), "
                                f"simplex {s!r}"
                            )
    # 3. mixed, i = j and i = j+1: d_j s_j = id = d_{j+1} s_j
    for n in range(0, dim):
        for j in range(n + 1):
            for s in simplices[n]:
                a = dv(n, j, s)
                if defined(a):
                    for i in (j, j + 1):
                        got = fv(n + 1, i, a)
                        if defined(got) and got != s:
                            v.append(
                                f"identity 3 fails at level {n}, (i,j)=({i},{j}), "
                                f"simplex {s!r}"
                            )
    # 4. mixed, i > j+1: d_i s_j = s_j d_{i-1}
    for n in range(1, dim):
        for j in range(n + 1):
            for i in range(j + 2, n + 2):
                for s in simplices[n]:
                    a, b = dv(n, j, s), fv(n, i - 1, s)
                    if defined(a) and defined(b):
                        lhs, rhs = fv(n + 1, i, a), dv(n - 1, j, b)
                        if defined(lhs) and defined(rhs) and lhs != rhs:
                            v.append(
                                f"identity 4 fails at level {n}, (i,j)=({i},{j}), "
                                f"simplex {s!r}"
                            )
    return v


def validate_sset(dim, simplices, face, degeneracy) -> TruncatedSSet:
    simplices = tuple(tuple(level) for level in simplices)
    face = {key: dict(tbl) for key, tbl in face.items()}
    degeneracy = {key: dict(tbl) for key, tbl in degeneracy.items()}
    violations = sset_violations(dim, simplices, face, degeneracy)
    if violations:
        raise ValidationError(violations)
    return TruncatedSSet(dim, simplices, face, degeneracy)


# --- stock structures -----------------------------------------------------------


def _tuple_id(t) -> str:
    return "|".join(str(x) for x in t)


def standard_simplex(n: int, dim: int = DEFAULT_DIM) -> TruncatedSSet:
    """Level m holds the monotone (m+1)-tuples over {0..n}."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    levels = [
        list(itertools.combinations_with_replacement(range(n + 1), m + 1))
        for m in range(dim + 1)
    ]
    simplices = tuple(tuple(_tuple_id(t) for t in lvl) for lvl in levels)
    face = {}
    for m in range(1, dim + 1):
        for i in range(m + 1):
            face[(m, i)] = {_tuple_id(t): _tuple_id(t[:i] + t[i + 1:]) for t in levels[m]}
    degeneracy = {}
    for m in range(dim):
        for i in range(m + 1):
            degeneracy[(m, i)] = {
                _tuple_id(t): _tuple_id(t[: i + 1] + t[i:]) for t in levels[m]
            }
    return validate_sset(dim, simplices, face, degeneracy)


def horn(n: int, k: int, dim: int = DEFAULT_DIM) -> TruncatedSSet:
    """Part of the standard n-simplex away from the face opposite vertex k.

    A monotone tuple survives exactly when its image together with {k}
    is not all of {0..n}.
    """
    if n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= k <= n:
        raise ValueError("horn index out of range")
    if dim < n - 1:
        raise ValueError("truncation must keep at least the walls, dim >= n - 1")
    full = set(range(n + 1))

    def keep(t) -> bool:
        return set(t) | {k} != full

    levels = [
        [t for t in itertools.combinations_with_replacement(range(n + 1), m + 1) if keep(t)]
        for m in range(dim + 1)
    ]
    simplices = tuple(tuple(_tuple_id(t) for t in lvl) for lvl in levels)
    face = {}
    for m in range(1, dim + 1):
        for i in range(m + 1):
            face[(m, i)] = {_tuple_id(t): _tuple_id(t[:i] + t[i + 1:]) for t in levels[m]}
    degeneracy = {}
    for m in range(dim):
        for i in range(m + 1):
            degeneracy[(m, i)] = {
                _tuple_id(t): _tuple_id(t[: i + 1] + t[i:]) for t in levels[m]
            }
    return validate_sset(dim, simplices, face, degeneracy)


def nerve(cat: FinCat, dim: int = DEFAULT_DIM) -> TruncatedSSet:
    """Level m holds the composable m-paths; inner faces compose, outer
    faces drop an end, degeneracies insert an identity."""
    if dim < 0:
        raise ValueError("truncation dimension must be nonnegative")
    if any("|" in o for o in cat.objects) or any(
        "|" in m.name for m in cat.morphisms
    ):
        raise FormatError("nerve ids join names with '|'; names may not contain it")

    paths: list[list[tuple[int, ...]]] = [[]]
    paths[0] = [(x,) for x in range(len(cat.objects))]  # placeholder: vertex = object
    for m in range(1, dim + 1):
        level: list[tuple[int, ...]] = []
        if m == 1:
            level = [(f,) for f in range(len(cat.morphisms))]
        else:
            for p in paths[m - 1]:
                tail = cat.morphisms[p[-1]].tgt
                for f in range(len(cat.morphisms)):
                    if cat.morphisms[f].src == tail:
                        level.append(p + (f,))
        paths.append(level)

    def path_id(m, p) -> str:
        if m == 0:
            return cat.objects[p[0]]
        return "|".join(cat.morphisms[f].name for f in p)

    def vertex(m, p, i) -> int:
        if m == 0:
            return p[0]
        return cat.morphisms[p[0]].src if i == 0 else cat.morphisms[p[i - 1]].tgt

    simplices = tuple(
        tuple(path_id(m, p) for p in paths[m]) for m in range(dim + 1)
    )
    face: dict = {}
    for m in range(1, dim + 1):
        for i in range(m + 1):
            table = {}
            for p in paths[m]:
                if m == 1:
                    q_id = cat.objects[vertex(1, p, 1 - i)]
                elif i == 0:
                    q_id = path_id(m - 1, p[1:])
                elif i == m:
                    q_id = path_id(m - 1, p[:-1])
                else:
                    c = cat.comp[(p[i], p[i - 1])]
                    q_id = path_id(m - 1, p[: i - 1] + (c,) + p[i + 1:])
                table[path_id(m, p)] = q_id
            face[(m, i)] = table
    degeneracy: dict = {}
    for m in range(dim):
        for i in range(m + 1):
            table = {}
            for p in paths[m]:
                ident = cat.identity[vertex(m, p, i)]
                if m == 0:
                    q = (ident,)
                else:
                    q = p[:i] + (ident,) + p[i:]
                table[path_id(m, p)] = path_id(m + 1, q)
            degeneracy[(m, i)] = table
    return validate_sset(dim, simplices, face, degeneracy)


# --- horns inside a structure ---------------------------------------------------


@dataclass(frozen=True)
class HornInstance:
    """A compatible family of faces, one per position other than k."""

    n: int
    k: int
    faces: dict[int, str]


def enumerate_inner_horns(sset: TruncatedSSet, n: int, k: int) -> list[HornInstance]:
    """All (n, k)-horn instances in the structure, inner positions only."""
    if not 2 <= n <= sset.dim:
        raise ValueError("horn level must satisfy 2 <= n <= dim")
    if not 0 < k < n:
        raise ValueError("inner horns need 0 < k < n")
    positions = [i for i in range(n + 1) if i != k]
    candidates = sset.level(n - 1)
    out: list[HornInstance] = []

    def compatible(faces, j, s) -> bool:
        for i in faces:
            if i < j:
                if sset.face[(n - 1, i)][s] != sset.face[(n - 1, j - 1)][faces[i]]:
                    return False
            else:
                if sset.face[(n - 1, j)][faces[i]] != sset.face[(n - 1, i - 1)][s]:
                    return False
        return True

    def extend(idx, faces):
        if idx == len(positions):
            out.append(HornInstance(n, k, dict(faces)))
            return
        j = positions[idx]
        for s in candidates:
            if compatible(faces, j, s):
                faces[j] = s
                extend(idx + 1, faces)
                del faces[j]

    extend(0, {})
    return out


def fillers(sset: TruncatedSSet, instance: HornInstance) -> list[str]:
    return [
        s
        for s in sset.level(instance.n)
        if all(
            sset.face[(instance.n, i)][s] == want
            for i, want in instance.faces.items()
        )
    ]


@dataclass(frozen=True)
class HornStats:
    instances: int
    unfilled: int
    multiple: int


@dataclass(frozen=True)
class FillerReport:
    """Inner-horn filler counts for levels 2..dim.

    quasi means every instance has a filler, nerve_shaped means every
    instance has exactly one.  Both verdicts are relative to the
    truncation: level dim+1 horns are invisible here.
    """

    dim: int
    per_horn: dict[tuple[int, int], HornStats]
    quasi: bool
    nerve_shaped: bool


def filler_report(sset: TruncatedSSet) -> FillerReport:
    per: dict[tuple[int, int], HornStats] = {}
    quasi = True
    unique = True
    for n in range(2, sset.dim + 1):
        for k in range(1, n):
            instances = enumerate_inner_horns(sset, n, k)
            # count fillers by their non-k face tuple instead of rescanning level n
            positions = [i for i in range(n + 1) if i != k]
            by_walls: dict[tuple[str, ...], int] = {}
            for s in sset.level(n):
                key = tuple(sset.face[(n, i)][s] for i in positions)
                by_walls[key] = by_walls.get(key, 0) + 1
            unfilled = 0
            multiple = 0
            for inst in instances:
                count = by_walls.get(tuple(inst.faces[i] for i in positions), 0)
                if count == 0:
                    unfilled += 1
                elif count > 1:
                    multiple += 1
            per[(n, k)] = HornStats(len(instances), unfilled, multiple)
            if unfilled:
                quasi = False
            if unfilled or multiple:
                unique = False
    return FillerReport(sset.dim, per, quasi, quasi and unique)


# --- reconstruction -------------------------------------------------------------


def category_from_nerve(sset: TruncatedSSet) -> FinCat:
    """Fold a structure with unique inner fillers back into a category.

    Objects are the 0-simplices, arrows the 1-simplices, and each binary
    composite is read off the unique (2,1)-horn filler.  Raises
    NotNerveShapedError when a filler is missing or ambiguous, or when
    the extracted tables fail the category axioms.
    """
    if sset.dim < 2:
        raise ValueError("reconstruction needs truncation dimension >= 2")
    objects = sset.level(0)
    obj_index = {o: i for i, o in enumerate(objects)}
    one = sset.level(1)
    mor_index = {s: i for i, s in enumerate(one)}
    morphisms = tuple(
        Morphism(s, obj_index[sset.face[(1, 1)][s]], obj_index[sset.face[(1, 0)][s]])
        for s in one
    )
    identity = tuple(mor_index[sset.degeneracy[(0, 0)][o]] for o in objects)
    comp: dict[tuple[int, int], int] = {}
    for g, gm in enumerate(morphisms):
        for f, fm in enumerate(morphisms):
            if fm.tgt != gm.src:
                continue
            inst = HornInstance(2, 1, {0: one[g], 2: one[f]})
            found = fillers(sset, inst)
            if len(found) != 1:
                raise NotNerveShapedError(
                    f"{len(found)} fillers for the inner horn on "
                    f"({one[g]!r}, {one[f]!r}), expected exactly 1"
                )
            comp[(g, f)] = mor_index[sset.face[(2, 1)][found[0]]]
    violations = category_violations(objects, morphisms, identity, comp)
    if violations:
        raise NotNerveShapedError(
            "extracted tables violate the category axioms: " + "; ".join(violations[:3])
        )
    return FinCat(objects, morphisms, identity, comp)


# --- combinations ---------------------------------------------------------------


def sset_coproduct(a: TruncatedSSet, b: TruncatedSSet) -> TruncatedSSet:
    if a.dim != b.dim:
        raise ValueError("coproduct needs equal truncation dimensions")
    simplices = tuple(
        tuple(f"0:{s}" for s in a.level(n)) + tuple(f"1:{s}" for s in b.level(n))
        for n in range(a.dim + 1)
    )

    def join(tables_a, tables_b, key):
        out = {f"0:{s}": f"0:{t}" for s, t in tables_a.get(key, {}).items()}
        out.update({f"1:{s}": f"1:{t}" for s, t in tables_b.get(key, {}).items()})
        return out

    face = {key: join(a.face, b.face, key) for key in _required_keys(a.dim)[0]}
    degeneracy = {
        key: join(a.degeneracy, b.degeneracy, key) for key in _required_keys(a.dim)[1]
    }
    return validate_sset(a.dim, simplices, face, degeneracy)


def sset_product(a: TruncatedSSet, b: TruncatedSSet) -> TruncatedSSet:
    """Levelwise pairs with componentwise structure maps."""
    if a.dim != b.dim:
        raise ValueError("product needs equal truncation dimensions")
    simplices = tuple(
        tuple(f"({s},{t})" for s in a.level(n) for t in b.level(n))
        for n in range(a.dim + 1)
    )
    face = {}
    degeneracy = {}
    for key in _required_keys(a.dim)[0]:
        n = key[0]
        face[key] = {
            f"({s},{t})": f"({a.face[key][s]},{b.face[key][t]})"
            for s in a.level(n)
            for t in b.level(n)
        }
    for key in _required_keys(a.dim)[1]:
        n = key[0]
        degeneracy[key] = {
            f"({s},{t})": f"({a.degeneracy[key][s]},{b.degeneracy[key][t]})"
            for s in a.level(n)
            for t in b.level(n)
        }
    return validate_sset(a.dim, simplices, face, degeneracy)


# --- Euler characteristic by reconstruction --------------------------------------


def classify_sset(sset: TruncatedSSet) -> str:
    """One of 'empty', 'point', 'nerve', 'other'."""
    if sset.dim < 2:
        raise ValueError("classification needs truncation dimension >= 2")
    counts = sset.counts()
    if counts[0] == 0:
        return "empty"
    if all(c == 1 for c in counts):
        return "point"
    if filler_report(sset).nerve_shaped:
        try:
            category_from_nerve(sset)
        except NotNerveShapedError:
            return "other"
        return "nerve"
    return "other"


def chi_sset(sset: TruncatedSSet) -> EulerResult:
    """Euler characteristic via reconstruction when the structure is a
    nerve (empty and one-point structures included); otherwise the
    characteristic is not defined by this route."""
    kind = classify_sset(sset)
    if kind == "other":
        return EulerResult(False, None, None, None)
    return euler_char(category_from_nerve(sset))


# --- JSON interchange -----------------------------------------------------------


def sset_from_json(data: dict) -> TruncatedSSet:
    allowed = {"dim", "simplices", "faces", "degeneracies"}
    unknown = set(data) - allowed
    if unknown:
        raise FormatError(f"simplicial structure: unknown keys {sorted(unknown)}")
    if "dim" not in data or not isinstance(data["dim"], int) or data["dim"] < 0:
        raise FormatError("simplicial structure: dim must be a nonnegative integer")
    dim = data["dim"]
    raw_levels = data.get("simplices", {})
    if not isinstance(raw_levels, dict):
        raise FormatError("simplices must map level numbers to id lists")
    simplices = []
    for n in range(dim + 1):
        level = raw_levels.get(str(n), [])
        if not isinstance(level, list):
            raise FormatError(f"simplices[{n!r}] must be a list")
        simplices.append(tuple(level))
    extra = set(raw_levels) - {str(n) for n in range(dim + 1)}
    if extra:
        raise FormatError(f"simplices: unexpected levels {sorted(extra)}")

    def parse_tables(raw, what):
        if not isinstance(raw, dict):
            raise FormatError(f"{what} must map 'n,i' keys to tables")
        out = {}
        for key, table in raw.items():
            parts = key.split(",")
            if len(parts) != 2:
                raise FormatError(f"{what} key {key!r} must look like 'n,i'")
            try:
                n, i = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"{what} key {key!r} must look like 'n,i'") from None
            if not isinstance(table, dict):
                raise FormatError(f"{what}[{key!r}] must be an object")
            out[(n, i)] = dict(table)
        return out

    face = parse_tables(data.get("faces", {}), "faces")
    degeneracy = parse_tables(data.get("degeneracies", {}), "degeneracies")
    return validate_sset(dim, simplices, face, degeneracy)


def sset_to_json(sset: TruncatedSSet) -> dict:
    return {
        "dim": sset.dim,
        "simplices": {str(n): list(sset.level(n)) for n in range(sset.dim + 1)},
        "faces": {
            f"{n},{i}": dict(sorted(table.items()))
            for (n, i), table in sorted(sset.face.items())
        },
        "degeneracies": {
            f"{n},{i}": dict(sorted(table.items()))
            for (n, i), table in sorted(sset.degeneracy.items())
        },
    }

"""Command-line front end.

Exit codes: 0 for computed results and valid inputs, 1 for inputs that
parse but violate the axioms, 2 for quantities that are well-formed to
ask about but do not exist (no weighting, undefined hom characteristic,
structure not nerve-shaped), 3 for usage, format, IO, and budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    FormatError,
    HomChiUndefinedError,
    NotNerveShapedError,
    ValidationError,
)
from .fincat import (
    category_from_json,
    category_to_json,
    coproduct,
    equivalent,
    opposite,
    product,
    skeleton,
)
from .higher import (
    bicat_adjacency,
    bicat_from_json,
    chi_n,
    datum_from_json,
    internal_equiv_classes,
)
from .magnitude import adjacency, euler_char, euler_of_matrix
from .qlinalg import QMatrix, format_rational, solve_affine, transpose
from .simplicial import (
    DEFAULT_DIM,
    classify_sset,
    filler_report,
    category_from_nerve,
    chi_sset,
    nerve,
    sset_from_json,
    sset_to_json,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; we reserve 3
        raise FormatError(f"{self.prog}: {message}")


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as e:
            raise FormatError(
                f"{path}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}"
            ) from None


def _vector(values) -> str:
    return "[" + ", ".join(format_rational(x) for x in values) + "]"


def _matrix_text(m: QMatrix) -> str:
    return " / ".join(
        " ".join(format_rational(e) for e in row) for row in m.to_rows()
    )


def _emit_json(doc, args) -> None:
    text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _chi_report(res, show_witness: bool) -> int:
    if not res.exists:
        missing = []
        if res.witness_weighting is None:
            missing.append("weighting")
        if res.witness_coweighting is None:
            missing.append("coweighting")
        print("chi undefined: no " + " or ".join(missing) + " exists")
        return 2
    print(f"chi = {format_rational(res.value)}")
    if show_witness:
        print(f"weighting = {_vector(res.witness_weighting.values)}")
        print(f"coweighting = {_vector(res.witness_coweighting.values)}")
    return 0


def _cmd_validate(args) -> int:
    category_from_json(_load_json(args.path))
    print("valid")
    return 0


def _cmd_chi(args) -> int:
    m = adjacency(category_from_json(_load_json(args.path))).matrix
    if args.matrix:
        print(_matrix_text(m))
    return _chi_report(euler_of_matrix(m), args.witness)


def _cmd_side(args, transposed: bool) -> int:
    m = adjacency(category_from_json(_load_json(args.path))).matrix
    name = "coweighting" if transposed else "weighting"
    sol = solve_affine(transpose(m) if transposed else m, tuple([Fraction(1)] * m.rows))
    if not sol.consistent:
        print(f"no {name} exists")
        return 2
    print(f"particular = {_vector(sol.particular)}; nullspace dim = {len(sol.nullspace_basis)}")
    return 0


def _cmd_opposite(args) -> int:
    _emit_json(category_to_json(opposite(category_from_json(_load_json(args.path)))), args)
    return 0


def _cmd_skeleton(args) -> int:
    _emit_json(category_to_json(skeleton(category_from_json(_load_json(args.path)))), args)
    return 0


def _cmd_product(args) -> int:
    a = category_from_json(_load_json(args.path_a))
    b = category_from_json(_load_json(args.path_b))
    _emit_json(category_to_json(product(a, b)), args)
    return 0


def _cmd_coproduct(args) -> int:
    a = category_from_json(_load_json(args.path_a))
    b = category_from_json(_load_json(args.path_b))
    _emit_json(category_to_json(coproduct(a, b)), args)
    return 0


def _cmd_equivalent(args) -> int:
    a = category_from_json(_load_json(args.path_a))
    b = category_from_json(_load_json(args.path_b))
    print(f"equivalent = {'true' if equivalent(a, b) else 'false'}")
    return 0


def _cmd_chi_bicat(args) -> int:
    bicat = bicat_from_json(_load_json(args.path))
    m = bicat_adjacency(bicat)
    if args.matrix:
        print(_matrix_text(m))
    return _chi_report(euler_of_matrix(m), args.witness)


def _cmd_chi_n(args) -> int:
    return _chi_report(chi_n(datum_from_json(_load_json(args.path))), args.witness)


def _cmd_internal_classes(args) -> int:
    bicat = bicat_from_json(_load_json(args.path))
    part = internal_equiv_classes(bicat)
    classes = part.classes()
    print(f"classes = {len(classes)}")
    for c, members in enumerate(classes):
        print(f"class {c}: " + " ".join(bicat.zero_cells[x] for x in members))
    return 0


def _cmd_nerve(args) -> int:
    cat = category_from_json(_load_json(args.path))
    _emit_json(sset_to_json(nerve(cat, args.dim)), args)
    return 0


def _cmd_validate_sset(args) -> int:
    sset_from_json(_load_json(args.path))
    print("valid")
    return 0


def _cmd_horncheck(args) -> int:
    sset = sset_from_json(_load_json(args.path))
    report = filler_report(sset)
    for (n, k), stats in sorted(report.per_horn.items()):
        print(
            f"horn ({n},{k}): {stats.instances} instances, "
            f"{stats.unfilled} unfilled, {stats.multiple} with multiple fillers"
        )
    print(f"quasi = {'true' if report.quasi else 'false'}")
    ok = report.quasi
    if args.unique:
        print(f"unique fillers = {'true' if report.nerve_shaped else 'false'}")
        ok = report.nerve_shaped
    return 0 if ok else 2


def _cmd_chi_sset(args) -> int:
    sset = sset_from_json(_load_json(args.path))
    kind = classify_sset(sset)
    print(f"kind = {kind}")
    if kind == "other":
        print("chi undefined: structure is not the nerve of a category")
        return 2
    return _chi_report(euler_char(category_from_nerve(sset)), args.witness)


def build_parser() -> _Parser:
    parser = _Parser(prog="eulerkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("validate", _cmd_validate, "check a category file against the axioms")
    p.add_argument("path")

    p = add("chi", _cmd_chi, "Euler characteristic of a category")
    p.add_argument("path", help="category JSON file")
    p.add_argument("--matrix", action="store_true",
                   help="also print the hom-count matrix, rows joined by ' / '")
    p.add_argument("--witness", action="store_true", help="print witness vectors")

    p = add("weighting", lambda a: _cmd_side(a, False), "solve M v = 1")
    p.add_argument("path")

    p = add("coweighting", lambda a: _cmd_side(a, True), "solve u^T M = 1^T")
    p.add_argument("path")

    for name, func, help_text in (
        ("opposite", _cmd_opposite, "reverse all arrows"),
        ("skeleton", _cmd_skeleton, "one object per isomorphism class"),
    ):
        p = add(name, func, help_text)
        p.add_argument("path")
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")

    for name, func, help_text in (
        ("product", _cmd_product, "product category of two files"),
        ("coproduct", _cmd_coproduct, "disjoint union of two files"),
    ):
        p = add(name, func, help_text)
        p.add_argument("path_a")
        p.add_argument("path_b")
        p.add_argument("-o", "--output")

    p = add("equivalent", _cmd_equivalent, "test two categories for equivalence")
    p.add_argument("path_a")
    p.add_argument("path_b")

    p = add("chi-bicat", _cmd_chi_bicat, "Euler characteristic of a bicategory file")
    p.add_argument("path")
    p.add_argument("--matrix", action="store_true",
                   help="also print the matrix of hom-category characteristics")
    p.add_argument("--witness", action="store_true")

    p = add("chi-n", _cmd_chi_n, "Euler characteristic of a recursive datum file")
    p.add_argument("path")
    p.add_argument("--witness", action="store_true")

    p = add("internal-classes", _cmd_internal_classes,
            "group zero-cells by internal equivalence")
    p.add_argument("path")

    p = add("nerve", _cmd_nerve, "nerve of a category as a truncated structure")
    p.add_argument("path")
    p.add_argument("--dim", type=int, default=DEFAULT_DIM)
    p.add_argument("-o", "--output")

    p = add("validate-sset", _cmd_validate_sset,
            "check a simplicial file against the identities")
    p.add_argument("path")

    p = add("horncheck", _cmd_horncheck, "count inner-horn fillers")
    p.add_argument("path")
    p.add_argument("--unique", action="store_true",
                   help="also require unique fillers for exit 0")

    p = add("chi-sset", _cmd_chi_sset,
            "Euler characteristic via nerve reconstruction")
    p.add_argument("path")
    p.add_argument("--witness", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except FormatError as e:
        print(str(e), file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"invalid: {len(e.violations)} violation(s)")
        for item in e.violations:
            print(f"  - {item}")
        return 1
    except (HomChiUndefinedError, NotNerveShapedError) as e:
        print(str(e))
        return 2
    except (FormatError, BudgetExceededError, OSError, ValueError) as e:
        print(str(e), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""JSON documents and the command-line surface.

The on-disk format is a single JSON object:

    {
      "dim": 3,
      "c_entries": [[1, 2, 3, "1"], ...],      # c^k_ij with i < j
      "omega_entries": [[1, 2, "-1/2"], ...]   # omega_ij with i < j
    }

Rationals travel as strings ("p" or "p/q", lowest terms on output) so no
binary float ever enters the exact pipeline; bare JSON integers are also
accepted on input.  Only the i < j orientation is stored, the parser
materializes both.  An optional "meta" object is accepted and ignored.

Subcommands: validate, decompose, classify, generate, tables,
orbit-sample, deformability.  Exit codes: 0 success/valid, 1 well-formed
input that is not an omega-deformed Lie algebra, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra_core import AlgebraSpec, residual
from .classify3d import (FIRST_TABLE_ORDER, PARAMETRIC_LABELS,
                         SECOND_TABLE_ORDER, NotAnAlgebraError, classify,
                         generate, orbit_sample, table_row)
from .decomp3d import NabTriple, decompose, forced_b, reconstruct, t_vector
from .decomp_nd import check_deformability

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


class DocumentError(ValueError):
    """The document text is not a well-formed algebra document."""


class ExactnessError(TypeError):
    """Serialization was asked to emit non-rational (float) entries."""


# ---------------------------------------------------------------------------
# parse / serialize


def _as_rational(value, where):
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise DocumentError(f"{where}: malformed rational {value!r}; write 'p' or 'p/q'")
        return Fraction(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise DocumentError(f"{where}: values must be rational strings, got {value!r}")


def parse_object(obj) -> AlgebraSpec:
    """Build an exact spec from an already-decoded document object."""
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(obj) - {"dim", "c_entries", "omega_entries", "meta"}
    if unknown:
        raise DocumentError(f"unknown document keys: {', '.join(sorted(unknown))}")
    missing = [k for k in ("dim", "c_entries", "omega_entries") if k not in obj]
    if missing:
        raise DocumentError(f"missing document keys: {', '.join(missing)}")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"dim must be a positive integer, got {dim!r}")

    def read_entries(key, width):
        raw = obj[key]
        if not isinstance(raw, list):
            raise DocumentError(f"{key} must be a list")
        shape = "[i, j, k, value]" if width == 4 else "[i, j, value]"
        out = []
        for pos, entry in enumerate(raw):
            where = f"{key}[{pos}]"
            if not isinstance(entry, list) or len(entry) != width:
                raise DocumentError(f"{where}: expected {shape}")
            idx = entry[:-1]
            for v in idx:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise DocumentError(f"{where}: indices must be integers, got {v!r}")
                if not 1 <= v <= dim:
                    raise DocumentError(f"{where}: index {v} out of range 1..{dim}")
            if not idx[0] < idx[1]:
                raise DocumentError(f"{where}: requires i < j, got i={idx[0]}, j={idx[1]}")
            out.append((*idx, _as_rational(entry[-1], where)))
        return out

    c_entries = read_entries("c_entries", 4)
    omega_entries = read_entries("omega_entries", 3)
    try:
        return AlgebraSpec.from_entries(dim, c_entries, omega_entries)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse(text: str) -> AlgebraSpec:
    """Parse document text into an exact spec.

    Raises DocumentError with a position report on syntax errors, bad
    indices, duplicates, or malformed rationals.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_object(obj)


def _exact(value, where):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise ExactnessError(f"cannot serialize non-rational entry {value!r} at {where}")


def document_object(spec: AlgebraSpec) -> dict:
    """The canonical document object for a rational spec: sparse i < j
    entries, lexicographic (i, j) then k ordering, lowest-terms values."""
    c_entries = []
    for i in range(1, spec.dim + 1):
        for j in range(i + 1, spec.dim + 1):
            for k in range(1, spec.dim + 1):
                v = _exact(spec.c_at(k, i, j), f"c^{k}_{i}{j}")
                if v != 0:
                    c_entries.append([i, j, k, str(v)])
    omega_entries = []
    for i in range(1, spec.dim + 1):
        for j in range(i + 1, spec.dim + 1):
            v = _exact(spec.omega_at(i, j), f"omega_{i}{j}")
            if v != 0:
                omega_entries.append([i, j, str(v)])
    return {"dim": spec.dim, "c_entries": c_entries, "omega_entries": omega_entries}


def serialize(spec: AlgebraSpec) -> str:
    """Canonical, byte-stable document text; parse(serialize(s)) == s."""
    return json.dumps(document_object(spec), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# report helpers


class _Failure(Exception):
    # exit 1: well-formed input that is not an omega-deformed Lie algebra
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class _Usage(Exception):
    # exit 2: domain/usage errors discovered after argument parsing
    pass


def _rat_str(x):
    return str(Fraction(x))


def _vec(v):
    return [_rat_str(x) for x in v]


def _mat(m):
    return [[_rat_str(x) for x in row] for row in m.rows]


def _float_mat(m):
    return [[float(x) for x in row] for row in m.rows]


def _emit(args, report, human_lines):
    if args.json:
        report["schema"] = SCHEMA_VERSION
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_spec(args) -> AlgebraSpec:
    spec = parse(_read_text(args.file))
    if getattr(args, "force_omega", False):
        spec = _force_omega(spec)
    return spec


def _force_omega(spec: AlgebraSpec) -> AlgebraSpec:
    if spec.dim < 3:
        raise _Usage("--force-omega requires dim >= 3; in dim 2 every omega "
                     "is compatible, so no forced form exists")
    if spec.dim == 3:
        trip = decompose(spec)
        return reconstruct(NabTriple(trip.n, trip.a, forced_b(trip.n, trip.a)))
    result = check_deformability(spec.c)
    if not result.compatible:
        raise _Failure("no compatible omega exists for this bracket; the trace "
                       "candidate leaves a nonzero defect",
                       {"valid": False, "deformable": False})
    return AlgebraSpec(spec.dim, spec.c, result.candidate)


def _residual_report(res, limit=20):
    comps = list(res.nonzero_components())
    lines = [f"  residual[m={m} l={l} j={j} k={k}] = {v}"
             for (m, l, j, k), v in comps[:limit]]
    if len(comps) > limit:
        lines.append(f"  ... and {len(comps) - limit} more")
    data = [{"indices": [m, l, j, k], "value": _rat_str(v)}
            for (m, l, j, k), v in comps]
    return lines, data


def _canonical_row(label):
    # (n diagonal, a pattern, b pattern) of the table row, at parameter 1
    nd, apat, _ = table_row(label)
    return nd, apat, tuple(-2 * nd[i] * apat[i] for i in range(3))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args):
    spec = _load_spec(args)
    res = residual(spec)
    report = {"command": "validate", "dim": spec.dim, "valid": res.is_zero}
    lines = []
    if spec.dim == 3:
        t = t_vector(decompose(spec))
        report["t"] = _vec(t)
        lines.append(f"t = ({', '.join(_vec(t))})")
    if res.is_zero:
        lines.insert(0, "valid: the deformed Jacobi identity holds (residual = 0)")
        _emit(args, report, lines)
        return 0
    comp_lines, comp_data = _residual_report(res)
    report["nonzero_residual_components"] = comp_data
    lines.insert(0, "invalid: nonzero residual components")
    lines.extend(comp_lines)
    _emit(args, report, lines)
    return 1


def _cmd_decompose(args):
    spec = _load_spec(args)
    if spec.dim != 3:
        raise _Usage(f"decompose requires dim 3, got dim {spec.dim}")
    trip = decompose(spec)
    fb = forced_b(trip.n, trip.a)
    t = t_vector(trip)
    matches = trip.b == fb
    report = {
        "command": "decompose",
        "n": _mat(trip.n), "a": _vec(trip.a), "b": _vec(trip.b),
        "forced_b": _vec(fb), "b_is_forced": matches, "t": _vec(t),
    }
    lines = [
        "n = " + "; ".join("(" + ", ".join(r) + ")" for r in _mat(trip.n)),
        f"a = ({', '.join(_vec(trip.a))})",
        f"b = ({', '.join(_vec(trip.b))})",
        f"forced b = -2 n a = ({', '.join(_vec(fb))})"
        + ("  [matches]" if matches else "  [differs: not an algebra]"),
        f"t = 4 n a + 2 b = ({', '.join(_vec(t))})",
    ]
    _emit(args, report, lines)
    return 0


def _cmd_classify(args):
    spec = _load_spec(args)
    if spec.dim != 3:
        raise _Usage(f"classify requires dim 3, got dim {spec.dim}")
    try:
        nf = classify(spec, float_tol=args.float_tol)
    except NotAnAlgebraError as exc:
        raise _Failure(f"not an omega-deformed Lie algebra: {exc}",
                       {"command": "classify", "valid": False,
                        "t": [str(x) for x in exc.t]}) from None
    trip = decompose(spec)
    nd, apat, brow = _canonical_row(nf.label.name)
    certs = nf.certificates
    p = nf.parameter
    report = {
        "command": "classify",
        "valid": True,
        "label": nf.label.name,
        "parameter": p,
        "certificates": {
            "n_inertia": list(certs.n_inertia.as_tuple()),
            "a_is_zero": certs.a_is_zero,
            "causal": certs.causal,
        },
        "decomposition": {"n": _mat(trip.n), "a": _vec(trip.a), "b": _vec(trip.b),
                          "b_is_forced": True},
        "canonical_row": {
            "n_diagonal": list(nd),
            "a": [x * (p if p is not None else 1) for x in apat],
            "b": [x * (p if p is not None else 1) for x in brow],
            "b_rule": "b = -2 n a",
        },
        "transform": _float_mat(nf.transform),
        "transform_error": nf.transform_error,
        "notes": list(nf.notes),
    }
    scaled = (lambda xs: "(" + ", ".join(f"{x * (p if p is not None else 1):g}" for x in xs) + ")")
    lines = [
        f"label: {nf.label}",
        "certificates: inertia {}; a {}; causal {}".format(
            certs.n_inertia.as_tuple(), "zero" if certs.a_is_zero else "nonzero", certs.causal),
        f"canonical row: n = diag{tuple(nd)}, a = {scaled(apat)}, b = {scaled(brow)}"
        "   [b = -2 n a]",
        f"transform error: {nf.transform_error:.3e} (tolerance {args.float_tol:g})",
    ]
    lines.extend(f"note: {note}" for note in nf.notes)
    _emit(args, report, lines)
    return 0


def _parse_param(args):
    if args.param is None:
        return None
    try:
        return Fraction(args.param)
    except (ValueError, ZeroDivisionError):
        raise _Usage(f"--param must be a rational like 1/2, got {args.param!r}") from None


def _cmd_generate(args):
    try:
        spec = generate(args.label, _parse_param(args))
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if args.json:
        report = {"command": "generate", "label": args.label,
                  "parameter": args.param, "document": document_object(spec)}
        _emit(args, report, [])
    else:
        sys.stdout.write(serialize(spec))
    return 0


def _cmd_orbit_sample(args):
    try:
        spec = orbit_sample(args.label, _parse_param(args), seed=args.seed)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if args.json:
        report = {"command": "orbit-sample", "label": args.label,
                  "parameter": args.param, "seed": args.seed,
                  "document": document_object(spec)}
        _emit(args, report, [])
    else:
        sys.stdout.write(serialize(spec))
    return 0


def _cmd_tables(args):
    def rows(order, table_no):
        out = []
        for label in order:
            parametric = label in PARAMETRIC_LABELS
            spec = generate(label, 1 if parametric else None)
            nd, apat, brow = _canonical_row(label)
            row = {"label": label, "table": table_no,
                   "n_diagonal": list(nd), "a": _vec(apat), "b": _vec(brow),
                   "parametric": parametric,
                   "document": document_object(spec)}
            if parametric:
                row["parameter_note"] = "parametric family, emitted at parameter 1"
            out.append(row)
        return out

    first, second = rows(FIRST_TABLE_ORDER, 1), rows(SECOND_TABLE_ORDER, 2)
    if args.json:
        _emit(args, {"command": "tables", "first_table": first, "second_table": second}, [])
        return 0

    def grid(rows_):
        fmt = "  {:<8} {:<12} {:<14} {:<14} {}"
        yield fmt.format("label", "n diagonal", "a", "b", "")
        for r in rows_:
            mark = "parametric (at 1)" if r["parametric"] else ""
            yield fmt.format(r["label"], "(" + ", ".join(map(str, r["n_diagonal"])) + ")",
                             "(" + ", ".join(r["a"]) + ")", "(" + ", ".join(r["b"]) + ")", mark)

    print("table 1 (a = 0):")
    for line in grid(first):
        print(line)
    print()
    print("table 2 (a != 0, b = -2 n a):")
    for line in grid(second):
        print(line)
    for r in first + second:
        print()
        print(f"--- {r['label']} ---")
        sys.stdout.write(json.dumps(r["document"], indent=2, sort_keys=True) + "\n")
    return 0


def _cmd_deformability(args):
    spec = _load_spec(args)
    if spec.dim < 3:
        raise _Usage(f"deformability requires dim >= 3, got dim {spec.dim}")
    result = check_deformability(spec.c)
    report = {"command": "deformability", "dim": spec.dim,
              "deformable": result.compatible}
    if result.compatible:
        probe = AlgebraSpec(spec.dim, spec.c, result.candidate)
        report["candidate_omega"] = document_object(probe)["omega_entries"]
        report["matches_document_omega"] = result.candidate == spec.omega
        lines = ["deformable: the trace candidate omega closes the deformed Jacobi identity"]
        entries = report["candidate_omega"]
        lines.append("candidate omega entries (i, j, value): "
                     + (", ".join(f"({i}, {j}, {v})" for i, j, v in entries) if entries else "none (omega = 0)"))
        lines.append("matches the omega stored in the document"
                     if report["matches_document_omega"]
                     else "differs from the omega stored in the document")
        _emit(args, report, lines)
        return 0
    comp_lines, comp_data = _residual_report(result.defect)
    report["defect_components"] = comp_data
    lines = ["not deformable: no omega closes the deformed Jacobi identity",
             "defect of the unique trace candidate:"]
    lines.extend(comp_lines)
    _emit(args, report, lines)
    return 1


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="omegalie",
        description="Exact tools for omega-deformed Lie algebras: validation, "
                    "(n, a, b) decomposition, Bianchi-style classification, "
                    "normal-form tables, and orbit sampling.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON report (schema-versioned)")
    common.add_argument("--float-tol", type=float, default=1e-9, metavar="T",
                        help="tolerance for the canonical transform check (default 1e-9)")
    common.add_argument("--force-omega", action="store_true",
                        help="replace the supplied omega by the forced one before the operation")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, handler, help_, with_file=False, with_label=False):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        if with_file:
            p.add_argument("file", nargs="?", default="-", metavar="FILE",
                           help="document path, or - for standard input (default)")
        if with_label:
            p.add_argument("label", metavar="LABEL", help="table row name, e.g. IX_a")
            p.add_argument("--param", metavar="P", default=None,
                           help="positive rational parameter for parametric rows")
        p.set_defaults(handler=handler)
        return p

    add("validate", _cmd_validate,
        "check the deformed Jacobi identity (prints t for dim 3)", with_file=True)
    add("decompose", _cmd_decompose,
        "decompose a dim-3 spec into (n, a, b)", with_file=True)
    add("classify", _cmd_classify,
        "classify a dim-3 spec onto its normal-form table row", with_file=True)
    add("generate", _cmd_generate,
        "print the canonical document of a table row", with_label=True)
    p = add("orbit-sample", _cmd_orbit_sample,
            "print a seeded random transport of a table row", with_label=True)
    p.add_argument("--seed", type=int, required=True, metavar="N",
                   help="seed for the deterministic sampler")
    add("tables", _cmd_tables,
        "re-emit both normal-form tables as a grid plus documents")
    add("deformability", _cmd_deformability,
        "check whether a bracket (dim >= 3) admits a compatible omega", with_file=True)
    return parser


def run(argv=None) -> int:
    """Entry point returning the exit code (0 ok, 1 not an algebra, 2 usage)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _Failure as exc:
        if args.json:
            report = dict(exc.report)
            report["schema"] = SCHEMA_VERSION
            report["error"] = str(exc)
            print(json.dumps(report, indent=2, sort_keys=True))
        else:
            print(f"invalid: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

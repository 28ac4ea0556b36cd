"""Command-line surface.

Exit codes: 0 all selected checks pass, 1 at least one check failed,
2 the input was rejected before any check ran.

The --json output has a deterministic "canonical" section (byte-identical
across runs for identical inputs) and a separate "meta" section carrying
wall-clock duration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import algfile, catalog
from .algebra import AlgebraMap, extend_from_generators, is_ideal, quotient
from .axial import axial_dimension, identity_suite
from .errors import AxialError
from .fields import parse_scalar, render
from .linalg import Subspace


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit_report(canonical, duration, as_json, out=None):
    out = out if out is not None else sys.stdout
    if as_json:
        out.write(
            json.dumps(
                {"canonical": canonical, "meta": {"duration_seconds": duration}},
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
        return
    for check in canonical.get("checks", []):
        status = check["status"].upper()
        line = f"[{status:>7}] {check['name']}"
        if check.get("detail"):
            line += f"  ({check['detail']})"
        out.write(line + "\n")
    relation = canonical.get("relation")
    if relation:
        out.write(
            f"adim={relation['adim']} case={relation['case']} "
            f"parity={relation['parity']} coefficients={relation['coefficients']}\n"
        )
    scalars = canonical.get("scalars")
    if scalars:
        out.write(
            "scalars: "
            + ", ".join(f"{k}={v}" for k, v in sorted(scalars.items()))
            + "\n"
        )
    out.write(f"duration: {duration:.3f}s\n")


def _resolve_checks(text):
    if not text or text == "all":
        return catalog.ALL_CHECKS
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    for name in names:
        if name not in catalog.ALL_CHECKS:
            raise AxialError(f"unknown check {name!r}")
    return names


def _load_source(source, field_spec, eta_literal, window):
    """Resolve a catalog name or file path to (name, alg, dd)."""
    try:
        entry = catalog.get_entry(source)
    except AxialError:
        entry = None
    if entry is not None:
        alg, dd = catalog.instantiate(source, field_spec, eta_literal, window)
        return entry.name, alg, dd
    if not os.path.exists(source):
        raise AxialError(f"{source!r} is neither a catalog entry nor a file")
    alg, dd, _constraints = algfile.load_path(source)
    if eta_literal is not None and dd is not None:
        eta = parse_scalar(eta_literal, alg.field)
        dd = type(dd).build(
            alg,
            {i: dd.axis(i) for i in range(max(dd.lo, -1), min(dd.hi, alg.dim) + 1)},
            dd.shift,
            dd.flip,
            eta,
            window=window,
        )
    return os.path.basename(source), alg, dd


def _verify_file_source(name, alg, dd, checks):
    """File verification report, mirroring the catalog report layout."""
    from .axial import check_dihedral, check_fusion, split_eigenspace
    from .catalog import CheckResult, EntryReport

    report = EntryReport(entry=name, field_repr=repr(alg.field), eta_repr=render(dd.eta))
    report.dimensions["ambient"] = alg.dim
    if "fusion" in checks:
        try:
            dec = split_eigenspace(alg, dd.axis(0), dd.eta, dd.flip)
            report.dimensions["parts"] = list(dec.dims())
            violations = check_fusion(alg, dec)
            report.checks.append(
                CheckResult("fusion", "pass" if not violations else "fail")
            )
        except AxialError as exc:
            report.checks.append(CheckResult("fusion", "fail", str(exc)))
    if "dihedral" in checks:
        violations = check_dihedral(alg, dd)
        report.checks.append(
            CheckResult(
                "dihedral",
                "pass" if not violations else "fail",
                "; ".join(f"{v.condition}@{v.index}: {v.detail}" for v in violations[:6]),
            )
        )
    if "relations" in checks:
        try:
            witness = axial_dimension(alg, dd)
        except AxialError as exc:
            report.checks.append(CheckResult("relation", "fail", str(exc)))
        else:
            report.relation = {
                "adim": witness.adim,
                "case": witness.case,
                "parity": witness.parity,
                "coefficients": [render(c) for c in witness.coefficients],
            }
            report.checks.append(CheckResult("relation", "pass", witness.describe()))
    if "identities" in checks:
        try:
            ident = identity_suite(alg, dd)
        except AxialError as exc:
            report.checks.append(CheckResult("identities", "fail", str(exc)))
        else:
            for c in ident.checks:
                report.checks.append(CheckResult(f"identity:{c.name}", c.status, c.detail))
            for key, value in ident.scalars.items():
                report.scalars[key] = render(value)
    return report


def cmd_verify(args) -> int:
    start = time.monotonic()
    try:
        checks = _resolve_checks(args.check)
        if catalog._entries().get(args.source.lower()) is not None:
            report = catalog.verify_entry(
                args.source, args.field, args.eta, args.window, checks
            )
        else:
            name, alg, dd = _load_source(args.source, args.field, args.eta, args.window)
            if dd is None:
                raise AxialError("source has no dihedral block; nothing to verify")
            report = _verify_file_source(name, alg, dd, checks)
    except AxialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_report(report.canonical(), time.monotonic() - start, args.json)
    return 0 if report.passed else 1


def cmd_catalog(args) -> int:
    start = time.monotonic()
    if args.action == "list":
        for entry in catalog.list_entries():
            constraints = []
            if entry.fixed_eta:
                constraints.append(f"eta={entry.fixed_eta}")
            if entry.required_char:
                constraints.append(f"char={entry.required_char}")
            if entry.requires_eta_minpoly:
                constraints.append(
                    "minpoly=" + ",".join(str(c) for c in entry.requires_eta_minpoly)
                )
            if entry.forbidden_eta:
                constraints.append("eta not in {" + ",".join(entry.forbidden_eta) + "}")
            suffix = f"  [{'; '.join(constraints)}]" if constraints else ""
            print(
                f"{entry.name:<12} dim {entry.dim}  adim {entry.expected_adim} "
                f"case {entry.expected_case}  field {entry.default_field}{suffix}"
            )
        for stub in catalog.list_stubs():
            print(f"{stub.name:<12} (stub: {stub.parameters}) -- {stub.note}")
        return 0
    if args.action == "emit":
        if not args.name:
            print("error: emit needs an entry name", file=sys.stderr)
            return 2
        try:
            entry = catalog.get_entry(args.name)
            alg, dd = catalog.instantiate(args.name, args.field, args.eta)
        except AxialError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        constraints = {}
        if entry.nonzero:
            constraints["nonzero"] = list(entry.nonzero)
        if entry.required_char is not None:
            constraints["characteristic"] = entry.required_char
        exclude = () if entry.fixed_eta else catalog.GLOBAL_EXCLUDED_ETA + entry.forbidden_eta
        if exclude:
            constraints["exclude_eta"] = list(exclude)
        print(algfile.dumps(alg, dd, constraints or None))
        return 0
    if args.action == "claims":
        try:
            reports = catalog.check_claims()
        except AxialError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        canonical = {
            "claims": [
                {
                    "name": r.name,
                    "kind": r.kind,
                    "subject": r.subject,
                    "status": r.status,
                    "detail": r.detail,
                }
                for r in reports
            ]
        }
        duration = time.monotonic() - start
        if args.json:
            print(
                json.dumps(
                    {"canonical": canonical, "meta": {"duration_seconds": duration}},
                    sort_keys=True,
                    indent=2,
                )
            )
        else:
            for r in reports:
                print(f"[{r.status.upper():>5}] {r.name}  ({r.detail})")
        return 0 if all(r.status == "pass" for r in reports) else 1
    print(f"error: unknown catalog action {args.action!r}", file=sys.stderr)
    return 2


def _parse_correspondence(text, source_alg, target_alg, eta):
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise AxialError(f"correspondence item {chunk!r} is not label=expression")
        left, right = chunk.split("=", 1)
        left = left.strip()
        if left not in source_alg.labels:
            raise AxialError(f"unknown source label {left!r}")
        src = source_alg.basis_vector(source_alg.label_index(left))
        img = algfile.parse_vector(right.strip(), target_alg, eta)
        pairs.append((src, img))
    if not pairs:
        raise AxialError("empty generator correspondence")
    return pairs


def cmd_isom(args) -> int:
    try:
        _, alg_a, dd_a = _load_source(args.source_a, args.field, args.eta, None)
        _, alg_b, dd_b = _load_source(args.source_b, args.field_b or args.field, args.eta_b or args.eta, None)
        if alg_a.field != alg_b.field:
            raise AxialError(
                f"sources live over different fields ({alg_a.field!r} vs {alg_b.field!r})"
            )
        eta_b = dd_b.eta if dd_b is not None else None
        pairs = _parse_correspondence(args.map, alg_a, alg_b, eta_b)
    except AxialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if alg_a.dim != alg_b.dim:
        print("no isomorphism: dimensions differ")
        return 1
    result = extend_from_generators(alg_a, pairs, alg_b)
    if isinstance(result, AlgebraMap) and result.is_bijective():
        print("isomorphism found")
        return 0
    print(f"no isomorphism: {result}")
    return 1


def cmd_quotient(args) -> int:
    try:
        _, alg, dd = _load_source(args.source, args.field, args.eta, None)
        eta = dd.eta if dd is not None else None
        vectors = [
            algfile.parse_vector(chunk.strip(), alg, eta)
            for chunk in args.ideal.split(";")
            if chunk.strip()
        ]
        if not vectors:
            raise AxialError("empty ideal specification")
        span = Subspace.from_vectors(alg.field, alg.dim, vectors)
    except AxialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not is_ideal(alg, span):
        print("not an ideal", file=sys.stderr)
        return 1
    qalg, proj = quotient(alg, span)
    qdd = None
    if dd is not None:
        from .algebra import induce_on_quotient
        from .axial import DihedralData

        qshift = induce_on_quotient(dd.shift, span, qalg, proj)
        qflip = induce_on_quotient(dd.flip, span, qalg, proj)
        if qshift is not None and qflip is not None:
            lo, hi = max(dd.lo, -1), min(dd.hi, alg.dim)
            seed = {i: proj.apply(dd.axis(i)) for i in range(lo, hi + 1)}
            qdd = DihedralData.build(qalg, seed, qshift, qflip, dd.eta)
    text = algfile.dumps(qalg, qdd)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="axialcheck",
        description="Exact verification of dihedral axial decomposition algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify a catalog entry or algebra file")
    p_verify.add_argument("source", help="catalog entry name or algebra file path")
    p_verify.add_argument("--field", default=None, help="q | gf:<p> | qeta | nf:<c0,c1,...>")
    p_verify.add_argument("--eta", default=None, help="scalar literal for the parameter")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--check", default="all",
                          help="comma list of fusion,dihedral,relations,identities (default all)")
    p_verify.add_argument("--window", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_cat = sub.add_parser("catalog", help="list entries, emit a file, or run claims")
    p_cat.add_argument("action", choices=("list", "emit", "claims"))
    p_cat.add_argument("name", nargs="?", default=None)
    p_cat.add_argument("--field", default=None)
    p_cat.add_argument("--eta", default=None)
    p_cat.add_argument("--json", action="store_true")
    p_cat.set_defaults(func=cmd_catalog)

    p_isom = sub.add_parser("isom", help="test a generator correspondence for isomorphism")
    p_isom.add_argument("source_a")
    p_isom.add_argument("source_b")
    p_isom.add_argument("--map", required=True,
                        help="comma list of label=expression generator images")
    p_isom.add_argument("--field", default=None)
    p_isom.add_argument("--eta", default=None)
    p_isom.add_argument("--field-b", dest="field_b", default=None)
    p_isom.add_argument("--eta-b", dest="eta_b", default=None)
    p_isom.set_defaults(func=cmd_isom)

    p_quot = sub.add_parser("quotient", help="quotient by an ideal and emit the file")
    p_quot.add_argument("source")
    p_quot.add_argument("--ideal", required=True,
                        help="semicolon-separated vector literals spanning the ideal")
    p_quot.add_argument("--field", default=None)
    p_quot.add_argument("--eta", default=None)
    p_quot.add_argument("--output", "-o", default=None)
    p_quot.set_defaults(func=cmd_quotient)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

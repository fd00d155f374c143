"""Batch command-line interface over the text formats.

Every verb is deterministic: identical inputs produce byte-identical
output.  Exit codes: 0 success, 1 domain error (for example a map that is
not strong), 2 parse or validation failure.  ``--json`` switches every
report to a stable machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .core import (
    STAR,
    catalog,
    check_circuit_axioms,
    check_closure_axioms,
    closure_table,
    make_matroid,
)
from .errors import MatroidError, ParseError
from .fileformats import (
    NamedMatroid,
    emit_map,
    emit_matroid,
    parse_map_file,
    parse_matroid_file,
)
from .finitary import (
    OMEGA,
    CoUniform,
    Explicit,
    Free,
    SymbolicMatroid,
    Uniform,
    cocone_from_map,
    colimit_check,
    descriptor_str,
    finitize,
    is_over_omega,
    restrict_window,
)
from .grothendieck import derive_collapse, k0_class
from .lattices import flats
from .minors import minor
from .protoexact import (
    cartesian_report,
    check_proto_exact_axioms,
    cocartesian_report,
    complete_square_from_cospan,
    complete_square_from_span,
)
from .strongmaps import is_strong, strong_map, transport_circuits


class _InputFailure(Exception):
    """Anything wrong with the inputs themselves; exit code 2."""


def _load(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (MatroidError, ValueError, OSError) as err:
        raise _InputFailure(str(err)) from None


def _named_set(nm: NamedMatroid, raw: str) -> frozenset[int]:
    names = [token for token in raw.split(",") if token.strip()]
    return frozenset(nm.id_of(token.strip()) for token in names)


def _sub_named(nm: NamedMatroid, result) -> NamedMatroid:
    """Re-id a matroid living on a subset of nm's ground, canonically."""
    keep = sorted(nm.name_of(e) for e in result.ground - {STAR})
    relabel = {STAR: STAR}
    for new_id, name in enumerate(keep, start=1):
        relabel[nm.id_of(name)] = new_id
    circuits = transport_circuits(
        frozenset(C for C in result.circuits if C != frozenset({STAR})), relabel
    )
    return NamedMatroid(make_matroid(range(1, len(keep) + 1), circuits), tuple(keep))


_DESCRIPTOR = re.compile(r"^(uniform|couniform|free)\((.*)\)$")


def _parse_descriptor(text: str) -> tuple[SymbolicMatroid, NamedMatroid | None]:
    text = text.strip()
    if text.startswith("file:"):
        nm = _load(parse_matroid_file, text[len("file:") :])
        return Explicit(nm.matroid), nm
    match = _DESCRIPTOR.match(text)
    if not match:
        raise _InputFailure(
            f"bad descriptor {text!r}; expected uniform(r, n|omega), "
            "couniform(r, n|omega), free(n|omega) or file:<path>"
        )
    kind, body = match.groups()
    parts = [p.strip() for p in body.split(",")]

    def ground_of(token: str):
        if token == "omega":
            return OMEGA
        if token.isdigit():
            return frozenset(range(1, int(token) + 1))
        raise _InputFailure(f"bad ground {token!r} in descriptor")

    if kind == "free":
        if len(parts) != 1:
            raise _InputFailure("free takes one argument")
        return Free(ground_of(parts[0])), None
    if len(parts) != 2 or not parts[0].isdigit():
        raise _InputFailure(f"{kind} takes a number and a ground")
    number, ground = int(parts[0]), ground_of(parts[1])
    make = Uniform if kind == "uniform" else CoUniform
    return _load(make, number, ground), None


# ---------------------------------------------------------------------------
# Verb handlers: each returns (exit_code, text_lines, json_payload)


def _cmd_validate(args):
    nm = _load(parse_matroid_file, args.file)
    circuit_report = check_circuit_axioms(nm.matroid.circuits)
    closure_report = check_closure_axioms(closure_table(nm.matroid))
    ok = circuit_report.all_passed and closure_report.all_passed
    lines = circuit_report.lines() + closure_report.lines()
    lines.append("canonical form:")
    lines.extend(emit_matroid(nm).rstrip("\n").splitlines())
    payload = {
        "circuit_axioms": circuit_report.to_json(),
        "closure_axioms": closure_report.to_json(),
        "canonical": emit_matroid(nm),
    }
    return (0 if ok else 2), lines, payload


def _cmd_closure(args):
    nm = _load(parse_matroid_file, args.file)
    X = _load(_named_set, nm, args.set)
    closed = nm.matroid.closure(X)
    return 0, [nm.render(closed)], {"closure": nm.render(closed).split()}


def _cmd_flats(args):
    nm = _load(parse_matroid_file, args.file)
    lattice = flats(nm.matroid)
    if args.dot:
        names = {e: nm.name_of(e) for e in nm.matroid.ground if e != STAR}
        dot = lattice.hasse_dot(names)
        return 0, dot.rstrip("\n").splitlines(), {"dot": dot}
    rows = [nm.render(F) for F in lattice]
    atom_rows = sorted(nm.render(A) for A in lattice.atoms)
    lines = ["flats:"] + ["  " + r for r in rows]
    lines.append("atoms:")
    lines.extend("  " + r for r in atom_rows)
    payload = {
        "flats": [r.split() for r in rows],
        "atoms": [r.split() for r in atom_rows],
        "bottom": nm.render(lattice.bottom).split(),
    }
    return 0, lines, payload


def _cmd_minor(args):
    nm = _load(parse_matroid_file, args.file)
    contract_by = _load(_named_set, nm, args.contract)
    if args.restrict is None:
        keep = nm.matroid.ground - contract_by - {STAR}
    else:
        keep = _load(_named_set, nm, args.restrict)
    result = minor(nm.matroid, keep, contract_by)
    out = emit_matroid(_sub_named(nm, result))
    return 0, out.rstrip("\n").splitlines(), {"matroid": out}


def _cmd_map_check(args):
    source = _load(parse_matroid_file, args.source)
    target = _load(parse_matroid_file, args.target)
    f = _load(parse_map_file, args.map, source, target)
    conditions = [1, 2, 3] if args.condition == "all" else [int(args.condition)]
    verdicts = {
        c: is_strong(f, source.matroid, target.matroid, condition=c)
        for c in conditions
    }
    ok = all(verdicts.values())
    lines = [f"condition {c}: {str(v).lower()}" for c, v in verdicts.items()]
    lines.append(f"strong: {str(ok).lower()}")
    payload = {
        "strong": ok,
        "conditions": {str(c): v for c, v in verdicts.items()},
    }
    return (0 if ok else 1), lines, payload


def _cmd_square_complete(args):
    first = _load(parse_matroid_file, args.first)
    second = _load(parse_matroid_file, args.second)
    third = _load(parse_matroid_file, args.third)
    if args.span:
        # first = shared source M, second = epi target M', third = mono target N
        j_map = _load(parse_map_file, args.map_one, first, second)
        i_map = _load(parse_map_file, args.map_two, first, third)
        j = strong_map(j_map, first.matroid, second.matroid)
        i = strong_map(i_map, first.matroid, third.matroid)
        square = complete_square_from_span(j, i)
        corner = _sub_named(third, square.nprime)
        # corner element ids live in the mono-target's id space, so its
        # name table covers both map emissions
        new_maps = [
            ("jprime (mono-target -> corner)", emit_map(square.jprime.map, third, third)),
            ("iprime (epi-target -> corner)", emit_map(square.iprime.map, second, third)),
        ]
    else:
        # first = mono source M', second = epi source N, third = shared target N'
        i_map = _load(parse_map_file, args.map_one, first, third)
        j_map = _load(parse_map_file, args.map_two, second, third)
        iprime = strong_map(i_map, first.matroid, third.matroid)
        jprime = strong_map(j_map, second.matroid, third.matroid)
        square = complete_square_from_cospan(iprime, jprime)
        corner = _sub_named(second, square.m)
        # corner element ids live in the epi-source's id space
        new_maps = [
            ("i (corner -> epi-source)", emit_map(square.i.map, second, second)),
            ("j (corner -> mono-source)", emit_map(square.j.map, second, first)),
        ]
    corner_text = emit_matroid(corner)
    lines = ["corner:"] + ["  " + l for l in corner_text.rstrip("\n").splitlines()]
    payload = {"corner": corner_text, "maps": {}}
    for title, text in new_maps:
        lines.append(f"map {title}:")
        lines.extend("  " + l for l in text.rstrip("\n").splitlines())
        payload["maps"][title] = text
    if args.verify:
        probes = catalog(args.probe_max)
        cart = cartesian_report(square, probes)
        cocart = cocartesian_report(square, probes)
        lines.append(
            f"verify: cartesian={str(cart.ok).lower()} "
            f"cocartesian={str(cocart.ok).lower()} probes={len(probes)}"
        )
        payload["verify"] = {
            "cartesian": cart.ok,
            "cocartesian": cocart.ok,
            "probes": len(probes),
        }
        if not (cart.ok and cocart.ok):
            return 1, lines, payload
    return 0, lines, payload


def _cmd_fin(args):
    symbolic, nm = _parse_descriptor(args.descriptor)
    result = finitize(symbolic)
    if isinstance(result, Explicit):
        out = emit_matroid(nm)
        return 0, out.rstrip("\n").splitlines(), {"matroid": out}
    text = descriptor_str(result)
    return 0, [text], {"descriptor": text}


def _cmd_colimit_check(args):
    base, _ = _parse_descriptor(args.descriptor)
    if not is_over_omega(base):
        raise _InputFailure("colimit-check needs a descriptor over omega")
    target = _load(parse_matroid_file, args.target)
    window = _load(restrict_window, base, args.window)
    window_nm = NamedMatroid(window, tuple(str(i) for i in range(1, args.window + 1)))
    alpha = _load(parse_map_file, args.map, window_nm, target)
    cocone = cocone_from_map(base, target.matroid, alpha, args.window)
    report = colimit_check(base, cocone, args.window)
    payload = {
        "ok": report.ok,
        "compatible": report.compatible,
        "exists": report.exists,
        "unique": report.unique,
        "window": report.window,
    }
    return (0 if report.ok else 1), report.lines(), payload


def _cmd_k0(args):
    nm = _load(parse_matroid_file, args.file)
    cls = k0_class(nm.matroid)
    return 0, [str(cls)], {"rank": cls.rank, "corank": cls.corank}


def _cmd_tg_derive(args):
    derivation = derive_collapse(args.rank, cancellation=not args.semiring)
    verified = derivation.verify()
    lines = derivation.transcript().rstrip("\n").splitlines()
    payload = {
        "transcript": lines,
        "collapsed": derivation.collapsed,
        "verified": verified,
    }
    return (0 if verified else 1), lines, payload


def _cmd_axioms(args):
    universe = _load(catalog, args.catalog_max)
    probes = universe if args.probe_max is None else _load(catalog, args.probe_max)
    report = check_proto_exact_axioms(universe, probes=probes)
    return (0 if report.all_passed else 1), report.lines(), report.to_json()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matcat",
        description="pointed matroids: validation, minors, flats, strong maps, "
        "proto-exact squares, finitization, and class derivations",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a matroid file and print its canonical form")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("closure", help="closure of a comma-separated element set")
    p.add_argument("file")
    p.add_argument("--set", default="", help="comma-separated element names")
    p.set_defaults(handler=_cmd_closure)

    p = sub.add_parser("flats", help="list the flats, or emit the Hasse diagram")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a list")
    p.set_defaults(handler=_cmd_flats)

    p = sub.add_parser("minor", help="restrict and contract in one step")
    p.add_argument("file")
    p.add_argument("--restrict", default=None, help="names to keep (default: everything uncontracted)")
    p.add_argument("--contract", default="", help="names to contract")
    p.set_defaults(handler=_cmd_minor)

    p = sub.add_parser("map-check", help="test a ground map for strongness")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.add_argument("--condition", choices=["all", "1", "2", "3"], default="all")
    p.set_defaults(handler=_cmd_map_check)

    p = sub.add_parser(
        "square-complete",
        help="complete a cospan (default) or a span (--span) to a bi-Cartesian square",
    )
    p.add_argument("first", help="cospan: mono source; span: shared source")
    p.add_argument("second", help="cospan: epi source; span: epi target")
    p.add_argument("third", help="cospan: shared target; span: mono target")
    p.add_argument("map_one", help="cospan: mono map; span: epi map")
    p.add_argument("map_two", help="cospan: epi map; span: mono map")
    p.add_argument("--span", action="store_true")
    p.add_argument("--verify", action="store_true", help="probe-check both universal properties")
    p.add_argument("--probe-max", type=int, choices=[0, 1, 2, 3], default=2,
                   help="catalog size bound for the probe universe")
    p.set_defaults(handler=_cmd_square_complete)

    p = sub.add_parser("fin", help="finitize a symbolic descriptor")
    p.add_argument("descriptor")
    p.set_defaults(handler=_cmd_fin)

    p = sub.add_parser("colimit-check", help="verify the window-colimit universal property")
    p.add_argument("descriptor")
    p.add_argument("target")
    p.add_argument("map", help="map file from window elements 1..n to target names")
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(handler=_cmd_colimit_check)

    p = sub.add_parser("k0", help="print the (rank, corank) class")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_k0)

    p = sub.add_parser("tg-derive", help="derive the collapse of a countable uniform class")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--semiring", action="store_true",
                   help="disable cancellation and show where the derivation blocks")
    p.set_defaults(handler=_cmd_tg_derive)

    p = sub.add_parser("axioms", help="run the proto-exact axiom suite on the catalog")
    p.add_argument("--catalog-max", type=int, choices=[0, 1, 2, 3], default=2)
    p.add_argument("--probe-max", type=int, choices=[0, 1, 2, 3], default=None,
                   help="probe universe bound (default: same as the catalog)")
    p.set_defaults(handler=_cmd_axioms)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code, lines, payload = args.handler(args)
    except _InputFailure as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except MatroidError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

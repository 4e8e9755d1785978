"""``coxlat`` command-line driver.

Exit status: 0 on success, 1 on a domain error (reported as ``Case: message``),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .cache import Cache, atomic_write
from .checks import DEFAULT_SYSTEMS, SUITES, run_checks
from .congruence import (
    build_facial_congruence,
    fan_cones,
    nonsublattice_witness,
    parse_coxeter_element,
    quotient,
)
from .coxeter import CoxeterMatrix, CoxeterSystem, build_system
from .errors import CoxlatError
from .facial import CoxeterComplex, facial_join, facial_meet, format_coset, mobius, parse_coset
from .serialize import (
    SCHEMA,
    PosetDocument,
    complex_document,
    congruence_document,
    export_dot,
    export_fan_json,
    export_fan_text,
    export_json,
    import_json,
    lattice_document,
    quotient_document,
)

KINDS = ("trivial", "descent", "cambrian", "one-class")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    system: Optional[str] = None
    matrix: Optional[str] = None
    names: Optional[list[str]] = None
    kind: Optional[str] = None
    coxeter_element: Optional[str] = None
    fmt: str = "text"
    output: Optional[str] = None
    cache_dir: Optional[str] = None
    use_cache: bool = True
    level: str = "exhaustive"

    def __post_init__(self):
        if self.kind == "cambrian" and not self.coxeter_element:
            raise UsageError("--kind cambrian requires --c, e.g. --c s,r,t")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        get = lambda key, default=None: getattr(args, key, default)  # noqa: E731
        return cls(
            command=args.command,
            system=get("system") if isinstance(get("system"), str) else None,
            matrix=get("matrix"),
            names=get("names").split(",") if get("names") else None,
            kind=get("kind"),
            coxeter_element=get("coxeter_element"),
            fmt=get("fmt", "text"),
            output=get("output"),
            cache_dir=get("cache_dir"),
            use_cache=get("use_cache", False),
            level=get("level", "exhaustive"),
        )


# --------------------------------------------------------------------------
# argument parsing


def _add_system(p: argparse.ArgumentParser, required: bool = True, default: Optional[str] = None) -> None:
    g = p.add_mutually_exclusive_group(required=required and default is None)
    g.add_argument("--type", dest="system", default=default, help='type descriptor, e.g. "A3", "B3", "I2:5"')
    g.add_argument("--matrix", help="Coxeter matrix file: rank on line 1, then the rows")
    p.add_argument("--names", help="comma-separated generator names")


def _add_output(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--format", dest="fmt", choices=formats, default=formats[0])
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def _add_cache(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache-dir", help="cache directory (default: $COXLAT_CACHE or ~/.cache/coxlat)")
    p.add_argument("--no-cache", dest="use_cache", action="store_false")


def _add_congruence(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--c", dest="coxeter_element", help='Coxeter element as generator names, e.g. "s,r,t"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxlat", description="Facial weak order and its lattice congruences.")
    parser.add_argument("--version", action="version", version=f"coxlat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", help="enumerate the Coxeter complex")
    _add_system(p)
    _add_output(p, ("text", "json"))
    _add_cache(p)

    p = sub.add_parser("lattice", help="build and export the facial weak order")
    _add_system(p)
    _add_output(p, ("text", "json", "dot"))
    _add_cache(p)

    for name in ("meet", "join"):
        p = sub.add_parser(name, help=f"facial {name} of two cosets")
        _add_system(p)
        p.add_argument("--a", required=True, help='coset such as "t,s,r:{s,t}"')
        p.add_argument("--b", required=True)
        p.add_argument("--style", choices=("cli", "math"), default="cli")

    p = sub.add_parser("mobius", help="Moebius function mu(bottom, coset)")
    _add_system(p)
    p.add_argument("--coset", help="a single coset; all cosets when omitted")

    for name, formats, text in (
        ("congruence", ("text", "json"), "build a facial congruence and list its classes"),
        ("quotient", ("text", "json", "dot"), "export the quotient lattice"),
        ("fan", ("text", "json"), "emit class cones as generator matrices"),
    ):
        p = sub.add_parser(name, help=text)
        _add_system(p)
        _add_congruence(p)
        _add_output(p, formats)
        if name != "fan":
            _add_cache(p)

    p = sub.add_parser("check", help="run the invariant suites")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--type", dest="systems", action="append", help="system to check (repeatable)")
    g.add_argument("--matrix")
    p.add_argument("--names")
    p.add_argument("--level", choices=("fast", "exhaustive"), default="exhaustive")
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="restrict to these suites")
    p.add_argument("--quiet", "-q", action="store_true", help="print failures and the summary only")

    p = sub.add_parser("witness-nonsublattice", help="the facial Cambrian non-sublattice example")
    _add_system(p, default="A3")
    p.add_argument("--c", dest="coxeter_element", default="s,r,t")
    return parser


# --------------------------------------------------------------------------
# helpers


def _system(args) -> CoxeterSystem:
    names = [n.strip() for n in args.names.split(",")] if getattr(args, "names", None) else None
    if getattr(args, "matrix", None):
        try:
            text = Path(args.matrix).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read matrix file: {exc}") from None
        return CoxeterSystem(CoxeterMatrix.from_text(text), names, label=Path(args.matrix).stem)
    return build_system(args.system, names)


def _cache_inputs(S: CoxeterSystem, structure: str, args) -> dict:
    inputs = {"schema": SCHEMA, "matrix": S.matrix.to_text(), "names": list(S.names), "structure": structure}
    kind = getattr(args, "kind", None)
    if kind:
        inputs["kind"] = kind
        if kind == "cambrian":
            inputs["c"] = list(parse_coxeter_element(S, args.coxeter_element))
    return inputs


def _document(S: CoxeterSystem, structure: str, args, build) -> PosetDocument:
    if not getattr(args, "use_cache", False):
        return build()
    cache = Cache(args.cache_dir)
    text = cache.get_or_compute(_cache_inputs(S, structure, args), lambda: export_json(build()))
    return import_json(text)


def _emit(text: str, args, out) -> None:
    path = getattr(args, "output", None)
    if path:
        atomic_write(Path(path), text)
    else:
        out.write(text)


def _render(doc, args, summary: list[str]) -> str:
    if args.fmt == "json":
        return export_json(doc)
    if args.fmt == "dot":
        return export_dot(doc)
    return "\n".join(summary) + "\n"


def _congruence(S: CoxeterSystem, args):
    kind = args.kind
    return build_facial_congruence(S, kind, args.coxeter_element if kind == "cambrian" else None)


# --------------------------------------------------------------------------
# commands


def cmd_complex(args, out) -> int:
    S = _system(args)
    doc = _document(S, "complex", args, lambda: complex_document(CoxeterComplex.of(S)))
    by_rank: dict[int, int] = {}
    for n in doc.nodes:
        size = n.payload["I"].count(",") + (n.payload["I"] != "{}")
        by_rank[size] = by_rank.get(size, 0) + 1
    summary = [f"system: {S.label}", f"group order: {S.order}", f"cosets: {len(doc.nodes)}"]
    summary += [f"cosets with |I| = {k}: {by_rank[k]}" for k in sorted(by_rank)]
    _emit(_render(doc, args, summary), args, out)
    return 0


def cmd_lattice(args, out) -> int:
    S = _system(args)
    doc = _document(S, "lattice", args, lambda: lattice_document(CoxeterComplex.of(S).lattice))
    summary = [f"system: {S.label}", f"cosets: {len(doc.nodes)}", f"covers: {len(doc.edges)}"]
    _emit(_render(doc, args, summary), args, out)
    return 0


def cmd_meet_join(args, out) -> int:
    S = _system(args)
    a, b = parse_coset(S, args.a), parse_coset(S, args.b)
    res = facial_meet(a, b) if args.command == "meet" else facial_join(a, b)
    out.write(format_coset(res, style=args.style) + "\n")
    return 0


def cmd_mobius(args, out) -> int:
    S = _system(args)
    if args.coset:
        out.write(f"{mobius(parse_coset(S, args.coset))}\n")
        return 0
    for c in CoxeterComplex.of(S):
        out.write(f"{format_coset(c, style='cli')}\t{mobius(c)}\n")
    return 0


def cmd_congruence(args, out) -> int:
    S = _system(args)
    doc = _document(S, "congruence", args, lambda: congruence_document(_congruence(S, args)))
    m = doc.metadata
    summary = [
        f"system: {S.label}",
        f"congruence: {m['congruence']}",
        f"classes: {m['classes']}",
        f"element classes: {m['base_classes']}",
        f"singletons: {m['singletons']}",
    ]
    summary += [f"{n.id}: {n.label}" for n in doc.nodes]
    _emit(_render(doc, args, summary), args, out)
    return 0


def cmd_quotient(args, out) -> int:
    S = _system(args)
    doc = _document(S, "quotient", args, lambda: quotient_document(quotient(_congruence(S, args))))
    summary = [
        f"system: {S.label}",
        f"congruence: {doc.metadata['congruence']}",
        f"classes: {len(doc.nodes)}",
        f"covers: {len(doc.edges)}",
    ]
    summary += [f"{e.source} < {e.target}" for e in doc.edges]
    _emit(_render(doc, args, summary), args, out)
    return 0


def cmd_fan(args, out) -> int:
    S = _system(args)
    fc = _congruence(S, args)
    cones = fan_cones(fc)
    text = export_fan_json(fc, cones) if args.fmt == "json" else export_fan_text(fc, cones)
    _emit(text, args, out)
    return 0


def cmd_check(args, out) -> int:
    if args.matrix:
        systems = [_system(args)]
    elif args.systems:
        names = [n.strip() for n in args.names.split(",")] if args.names else None
        systems = [build_system(s, names) for s in args.systems]
    else:
        systems = list(DEFAULT_SYSTEMS)
    t0 = time.perf_counter()
    passed = failed = 0
    for res in run_checks(systems, args.level, args.suite):
        if res.ok:
            passed += 1
        else:
            failed += 1
        if not args.quiet or not res.ok:
            out.write(res.line() + "\n")
            out.flush()
    out.write(f"{passed} passed, {failed} failed in {time.perf_counter() - t0:.1f}s\n")
    return 1 if failed else 0


def cmd_witness(args, out) -> int:
    S = _system(args)
    report = nonsublattice_witness(S, args.coxeter_element)
    out.write("\n".join(report.lines()) + "\n")
    return 0 if report.confirmed else 1


COMMANDS = {
    "complex": cmd_complex,
    "lattice": cmd_lattice,
    "meet": cmd_meet_join,
    "join": cmd_meet_join,
    "mobius": cmd_mobius,
    "congruence": cmd_congruence,
    "quotient": cmd_quotient,
    "fan": cmd_fan,
    "check": cmd_check,
    "witness-nonsublattice": cmd_witness,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        RunConfig.from_args(args)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except CoxlatError as exc:
        err.write(f"{exc.case}: {exc}\n")
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

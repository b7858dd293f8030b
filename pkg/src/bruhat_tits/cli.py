"""Command-line front end.

Every command prints a result table (JSON by default, TSV on request).
Exit status: 0 on success, 1 on invalid input, 2 when a checked invariant
is falsified or an internal consistency check fails.  Errors go to stderr
as one JSON line ``{"error": code, "message": ...}``.
"""
from __future__ import annotations

import argparse
import importlib.resources
import json
import shlex
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import moduli, parahoric
from .apartment import (
    ApartmentPoint,
    Facet,
    alcove_walk,
    apply_word,
    enumerate_facets,
    facet_of_point,
    make_facet,
)
from .errors import BruhatTitsError, InternalError, ValidationError
from .rationals import format_rational, format_vector, parse_vector
from .rootsys import DynkinType, RootSystem, build_root_system
from .verify import SWEEPS, all_types, run_sweeps

SCHEMA_VERSION = 1
COMMANDS = ("facets", "parahoric", "quotient", "parabolic", "walk", "dimension", "codim", "verify")
FORMATS = ("json", "tsv")
DEFAULT_MAX_RANK = 4


class UsageError(ValidationError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which would read as a falsification
    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------------ requests


def _parse_facet(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "none", "{}"):
        return ()
    try:
        nodes = tuple(sorted({int(part) for part in text.strip("{}").split(",")}))
    except ValueError:
        raise ValidationError(f"malformed facet {text!r}; expected node indices like 0,2") from None
    return nodes


def _parse_ram(text: str) -> tuple[tuple[int, tuple[Fraction, ...]], ...]:
    out = []
    for item in filter(None, (part.strip() for part in text.split(";"))):
        order, sep, coords = item.partition(":")
        if not sep:
            raise ValidationError(f"malformed ramification datum {item!r}; expected n:coords")
        try:
            n = int(order)
        except ValueError:
            raise ValidationError(f"malformed ramification order {order!r}") from None
        out.append((n, parse_vector(coords)))
    return tuple(out)


def _format_ram(ram) -> str:
    return ";".join(f"{n}:{format_vector(coords)}" for n, coords in ram)


def _option(flag: str, value: str) -> str:
    # a single token, so values starting with "-" are not read as options
    return f"{flag}={value}"


@dataclass(frozen=True)
class CommandRequest:
    command: str
    type_spec: str | None = None
    facet_spec: tuple[tuple[int, ...], ...] = ()
    point_spec: tuple[Fraction, ...] | None = None
    genus: int | None = None
    ram_spec: tuple[tuple[int, tuple[Fraction, ...]], ...] | None = None
    output_format: str = "json"
    max_rank: int | None = None
    all_types: bool = False
    checks: tuple[str, ...] = ()
    out: str | None = None

    @classmethod
    def from_argv(cls, argv: Sequence[str]) -> CommandRequest:
        ns = build_parser().parse_args(list(argv))
        positional, flag = ns.type, ns.type_flag
        if positional and flag and positional != flag:
            raise UsageError(f"conflicting types {positional!r} and {flag!r}")
        type_spec = positional or flag
        if type_spec is not None:
            type_spec = str(DynkinType.parse(type_spec))
        return cls(
            command=ns.command,
            type_spec=type_spec,
            facet_spec=tuple(_parse_facet(f) for f in ns.facet or ()),
            point_spec=parse_vector(ns.point) if ns.point is not None else None,
            genus=ns.genus,
            ram_spec=_parse_ram(ns.ram) if ns.ram is not None else None,
            output_format=ns.format,
            max_rank=ns.max_rank,
            all_types=ns.all,
            checks=tuple(ns.check or ()),
            out=ns.out,
        )

    @classmethod
    def parse(cls, text: str) -> CommandRequest:
        return cls.from_argv(shlex.split(text))

    def argv(self) -> list[str]:
        args = [self.command]
        if self.type_spec is not None:
            args.append(self.type_spec)
        if self.all_types:
            args.append("--all")
        for f in self.facet_spec:
            args.append(_option("--facet", ",".join(map(str, f)) if f else "none"))
        if self.point_spec is not None:
            args.append(_option("--point", format_vector(self.point_spec)))
        if self.genus is not None:
            args += ["--genus", str(self.genus)]
        if self.ram_spec is not None:
            args.append(_option("--ram", _format_ram(self.ram_spec)))
        if self.max_rank is not None:
            args += ["--max-rank", str(self.max_rank)]
        for c in self.checks:
            args += ["--check", c]
        if self.output_format != "json":
            args += ["--format", self.output_format]
        if self.out is not None:
            args += ["--out", self.out]
        return args

    def format(self) -> str:
        return shlex.join(self.argv())

    def echo(self) -> dict[str, Any]:
        """The request as it appears in the output (``--out`` omitted)."""
        return {
            "command": self.command,
            "type": self.type_spec,
            "all": self.all_types,
            "facets": [list(f) for f in self.facet_spec],
            "point": None if self.point_spec is None else [format_rational(c) for c in self.point_spec],
            "genus": self.genus,
            "ram": None if self.ram_spec is None else [
                {"order": n, "theta": [format_rational(c) for c in coords]} for n, coords in self.ram_spec
            ],
            "max_rank": self.max_rank,
            "checks": list(self.checks),
            "format": self.output_format,
        }


def canonical(text: str) -> str:
    return CommandRequest.parse(text).format()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bruhat-tits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("type", nargs="?", help="Dynkin type such as A2 or G2")
        p.add_argument("--type", dest="type_flag")
        p.add_argument("--facet", action="append", help="vanishing simple affine roots, e.g. 0,2")
        p.add_argument("--point", help="coweight coordinates, e.g. 1/2,0")
        p.add_argument("--genus", type=int)
        p.add_argument("--ram", help='ramification data "n:coords;n:coords"')
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--max-rank", type=int)
        p.add_argument("--all", action="store_true", help="verify: every admissible type")
        p.add_argument("--check", action="append", choices=sorted(SWEEPS), help="verify: restrict sweeps")
        p.add_argument("--out", help="write the table here instead of stdout")
    return parser


# -------------------------------------------------------------------- tables


def load_schema() -> dict[str, Any]:
    """The published JSON schema of :class:`ResultTable` output."""
    text = importlib.resources.files("bruhat_tits").joinpath("schema/result_table.schema.json").read_text()
    return json.loads(text)


@dataclass
class ResultTable:
    command: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    falsifications: list[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def exit_code(self) -> int:
        return 2 if self.falsifications else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "rows": self.rows,
            "falsifications": self.falsifications,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_tsv(self) -> str:
        columns: list[str] = []
        for row in self.rows:
            columns += [k for k in row if k not in columns]

        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return str(v).lower()
            if isinstance(v, list):
                return ",".join(cell(x) for x in v)
            return str(v)

        lines = ["\t".join(columns)]
        lines += ["\t".join(cell(row.get(c)) for c in columns) for row in self.rows]
        lines += [f"#falsification\t{msg}" for msg in self.falsifications]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_tsv() if fmt == "tsv" else self.to_json()


# ------------------------------------------------------------------ commands


def _root_system(req: CommandRequest) -> RootSystem:
    if req.type_spec is None:
        raise UsageError(f"{req.command} needs a Dynkin type")
    return build_root_system(req.type_spec)


def _point(req: CommandRequest, rs: RootSystem) -> ApartmentPoint:
    if req.point_spec is None:
        raise UsageError(f"{req.command} needs --point")
    if len(req.point_spec) != rs.rank:
        raise ValidationError(f"--point has {len(req.point_spec)} coordinates, rank of {rs.type} is {rs.rank}")
    return ApartmentPoint(req.point_spec)


def _locus(req: CommandRequest, rs: RootSystem) -> Facet | ApartmentPoint:
    if len(req.facet_spec) + (req.point_spec is not None) != 1:
        raise UsageError(f"{req.command} needs exactly one of --facet or --point")
    if req.facet_spec:
        return make_facet(rs, req.facet_spec[0])
    return _point(req, rs)


def _locus_label(locus) -> str:
    return locus.label() if isinstance(locus, Facet) else str(locus)


def _moduli_input(req: CommandRequest, rs: RootSystem) -> moduli.ModuliInput:
    if req.genus is None:
        raise UsageError(f"{req.command} needs --genus")
    points = req.ram_spec or ()
    facets = None
    if req.facet_spec:
        facets = tuple(make_facet(rs, f) for f in req.facet_spec)
    for n, coords in points:
        if len(coords) != rs.rank:
            raise ValidationError(f"isotropy {format_vector(coords)} has {len(coords)} coordinates, rank is {rs.rank}")
    inp = moduli.ModuliInput.from_points(rs.type, req.genus, points)
    if facets is not None:
        inp = moduli.ModuliInput(type=inp.type, genus=inp.genus, ram=inp.ram, facets=facets)
    return inp


def cmd_facets(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    for f in enumerate_facets(rs):
        table.rows.append({
            "facet": f.label(),
            "J": sorted(f.vanishing),
            "dimension": f.dimension,
            "representative": [format_rational(c) for c in f.representative.coords],
            "quotient": parahoric.reductive_quotient(rs, f).subsystem.label(),
        })


def cmd_parahoric(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    data = parahoric.parahoric_exponents(rs, _locus(req, rs), audit=True)
    for r in rs.roots:
        table.rows.append({
            "root": str(r),
            "m": data.exponents[r],
            "m_u": data.prounipotent_exponents[r],
        })


def cmd_quotient(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    locus = _locus(req, rs)
    q = parahoric.reductive_quotient(rs, locus)
    table.rows.append({
        "locus": _locus_label(locus),
        "type": q.subsystem.label(),
        "torus_rank": q.torus_rank,
        "group_dim": q.group_dim,
        "semisimple_dim": q.semisimple_dim,
        "positive_roots": q.positive_count,
        "vanishing": [str(a) for a in q.vanishing],
    })
    if isinstance(locus, Facet) and q.components != parahoric.diagram_type(rs, locus):
        table.falsifications.append(
            f"facet {locus.label()}: quotient {q.subsystem.label()} differs from the affine sub-diagram"
        )


def cmd_parabolic(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    if len(req.facet_spec) != 2 or req.point_spec is not None:
        raise UsageError("parabolic needs --facet s --facet b")
    s, b = (make_facet(rs, f) for f in req.facet_spec)
    ps = parahoric.parabolic_set(rs, s, b)
    levi = set(ps.levi_part)
    for a in ps.roots:
        table.rows.append({
            "root": str(a.vector_part),
            "level": a.level,
            "part": "levi" if a in levi else "unipotent",
        })
    table.falsifications += parahoric.parabolic_violations(rs, ps)
    table.falsifications += parahoric.verify_floor_ceiling_lemma(rs, s, b).falsifications
    table.falsifications += parahoric.filtration_chain_violations(rs, s, b)


def cmd_walk(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    walk = alcove_walk(rs, _point(req, rs))
    table.rows.append({
        "target": [format_rational(c) for c in walk.target.coords],
        "word": list(walk.word),
        "length": len(walk),
        "folded": [format_rational(c) for c in walk.folded.coords],
        "facet": facet_of_point(rs, walk.folded).label(),
    })
    if apply_word(rs, walk.word, walk.folded) != walk.target:
        table.falsifications.append(f"word {walk.word} does not carry {walk.folded} back to {walk.target}")


def cmd_dimension(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    inp = _moduli_input(req, rs)
    report = moduli.fuchsian_check(inp)
    table.rows.append({
        "dim": moduli.moduli_dimension(inp),
        "genus": inp.genus,
        "m": inp.m,
        "e_G": [moduli.e_G(rs, d.isotropy) for d in inp.ram],
        "facets": [f.label() for f in inp.local_facets],
        "hecke_fiber_dim": moduli.hecke_fiber_dimension(inp),
        "generators": report.generators,
        "euler_characteristic": format_rational(report.euler_characteristic),
    })


def cmd_codim(req: CommandRequest, table: ResultTable) -> None:
    rs = _root_system(req)
    inp = _moduli_input(req, rs)
    if req.point_spec is not None:
        g = moduli.torsion_element(rs, _point(req, rs))
        z = moduli.centralizer(rs, g)
        bound = moduli.rs_codim_bound(inp, g)
        table.rows.append({
            "kind": "regularly_stable",
            "k": bound.k,
            "bound": format_rational(bound.value),
            "at_least_four": bound.at_least_four,
            "e_G": moduli.e_G(rs, g),
            "dim_zg": z.dim_zg,
            "dim_zg_a": z.dim_zg_a,
            "dim_zg_s": z.dim_zg_s,
        })
        table.falsifications += list(z.falsifications)
    else:
        for k in range(1, rs.rank + 1):
            value = moduli.codim_lower_bound(k, inp.genus, inp.m)
            table.rows.append({
                "kind": "regularly_stable",
                "k": k,
                "bound": format_rational(value),
                "at_least_four": value >= 4,
            })
    unstable = moduli.unstable_codim_bound(inp)
    table.rows.append({"kind": "unstable", "bound": str(unstable), "at_least_two": unstable >= 2})


def cmd_verify(req: CommandRequest, table: ResultTable) -> None:
    if req.all_types:
        if req.type_spec is not None:
            raise UsageError("verify takes a type or --all, not both")
        types = all_types(req.max_rank if req.max_rank is not None else DEFAULT_MAX_RANK)
    elif req.type_spec is not None:
        types = [DynkinType.parse(req.type_spec)]
    else:
        raise UsageError("verify needs a type or --all")
    for res in run_sweeps(types, list(req.checks) or None):
        table.rows.append({
            "check": res.check,
            "type": str(res.type),
            "cases": res.cases,
            "falsified": len(res.falsifications),
        })
        table.falsifications += [f"{res.check} {res.type}: {msg}" for msg in res.falsifications]


DISPATCH: dict[str, Callable[[CommandRequest, ResultTable], None]] = {
    "facets": cmd_facets,
    "parahoric": cmd_parahoric,
    "quotient": cmd_quotient,
    "parabolic": cmd_parabolic,
    "walk": cmd_walk,
    "dimension": cmd_dimension,
    "codim": cmd_codim,
    "verify": cmd_verify,
}


def run(request: CommandRequest) -> ResultTable:
    table = ResultTable(command=request.echo())
    DISPATCH[request.command](request, table)
    return table


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        request = CommandRequest.from_argv(argv)
        table = run(request)
    except BruhatTitsError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        # an internal error means a checked invariant failed
        return 2 if isinstance(exc, InternalError) else 1
    text = table.render(request.output_format)
    if request.out:
        Path(request.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return table.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: ``opencat {compose,coproduct,restrict,check,dot}``.

Exit codes: 0 success, 2 boundary or type error in the input, 3 a structural
hypothesis failed (a check suite reported a failing law, or a comparison that
must be invertible is not), 4 unsupported operation, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .errors import BoundaryError, OpenCatError, UnsupportedError

EXIT_OK, EXIT_BOUNDARY, EXIT_STRUCTURE, EXIT_UNSUPPORTED, EXIT_USAGE = 0, 2, 3, 4, 64


class UsageError(Exception):
    pass


class Workspace:
    """Named bindings loaded from a JSON object ``{name: value, ...}``.

    Values are open graphs (or decorated cospans in decorated mode) in the
    usual JSON form; names must be unique within the file.
    """

    def __init__(self, bindings: dict | None = None):
        self.bindings = dict(bindings or {})

    @classmethod
    def load(cls, path: str) -> "Workspace":
        def unique(pairs):
            seen = {}
            for k, v in pairs:
                if k in seen:
                    raise UsageError(f"workspace binds {k!r} twice")
                seen[k] = v
            return seen
        try:
            data = json.loads(Path(path).read_text(), object_pairs_hook=unique)
        except OSError as exc:
            raise UsageError(f"cannot read workspace {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise BoundaryError(f"workspace is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise BoundaryError("workspace must be a JSON object of bindings")
        return cls(data)

    def resolve(self, ref: str):
        if ref in self.bindings:
            return self.bindings[ref]
        return _read(ref)


class FootMismatch(BoundaryError):
    def __init__(self, index: int, right, left):
        super().__init__(f"input {index} ends at a foot of size {right} but input "
                         f"{index + 1} starts at a foot of size {left}")
        self.detail = {"position": index, "footR": right, "footL": left}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read(path_or_json: str):
    if path_or_json.lstrip().startswith(("{", "[")):
        return jsonio.loads(path_or_json)
    try:
        text = Path(path_or_json).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path_or_json}: {exc}") from exc
    return jsonio.loads(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _loader(mode):
    if mode == "decorated":
        return jsonio.decorated_from_json, jsonio.decorated_to_json
    return jsonio.open_graph_from_json, jsonio.open_graph_to_json


def _double(mode, structure="discrete"):
    if mode == "decorated":
        from .decorated import dcsp, graph_decoration
        return dcsp(graph_decoration(max_edges=10 ** 6))
    from .structured import POINTED, SCSP_DISCRETE, scsp
    return SCSP_DISCRETE if structure == "discrete" else scsp(POINTED)


def _is_identity(x, mode) -> bool:
    m = x.base if mode == "decorated" else x
    return (m.foot_l == m.foot_r and m.leg_l == m.leg_r and m.leg_l.is_iso()
            and (mode != "decorated" or not x.dec.edge_list))


def _meta(**fields) -> None:
    print(json.dumps(fields, sort_keys=True), file=sys.stderr)


# ---------------------------------------------------------------------------
# commands


def _inputs(args):
    ws = Workspace.load(args.workspace) if getattr(args, "workspace", None) else Workspace()
    load, _ = _loader(args.mode)
    return [load(ws.resolve(p)) for p in args.inputs]


def _base(x, mode):
    return x.base if mode == "decorated" else x


def cmd_compose(args) -> int:
    _, dump = _loader(args.mode)
    items = _inputs(args)
    D = _double(args.mode)
    if args.mode == "decorated":
        items = [D.pro(x.base, x.dec) for x in items]
    for i, (x, y) in enumerate(zip(items, items[1:]), start=1):
        bx, by = _base(x, args.mode), _base(y, args.mode)
        if bx.foot_r != by.foot_l:
            raise FootMismatch(i, bx.foot_r.size, by.foot_l.size)
    result = items[0]
    for x in items[1:]:
        result = D.pro_compose(result, x)
    _emit(jsonio.dumps(dump(result)), args.out)
    if args.dot:
        from .decorated import to_structured
        Path(args.dot).write_text(jsonio.to_dot(
            to_structured(result) if args.mode == "decorated" else result))
    if len(items) > 1 and any(_is_identity(x, args.mode) for x in items):
        _meta(command="compose", up_to_unitor=True)
    return EXIT_OK


def cmd_coproduct(args) -> int:
    if args.mode == "decorated":
        raise UnsupportedError("coproducts of decorated cospans are not implemented "
                               "(the monoidal product of decorated cospans is out of scope)")
    D = _double(args.mode, args.structure)
    items = _inputs(args)
    if args.structure == "pointed":
        from .structured import POINTED
        items = [D.cospan(m.foot_l, m.apex, m.foot_r, *_repoint(m, POINTED)) for m in items]
    result = items[0]
    for x in items[1:]:
        result = D.pro_coproduct(result, x)[0]
    if args.structure == "pointed":
        from .fincolim import FinFunction, FinSet, GraphHom, discrete
        result = D.cospan(result.foot_l, result.apex, result.foot_r, *(
            GraphHom(discrete(foot), result.apex,
                     FinFunction(foot, result.apex.vertices, leg.vmap.table[:foot.size]),
                     FinFunction(FinSet(0), result.apex.edges, ()))
            for foot, leg in ((result.foot_l, result.leg_l), (result.foot_r, result.leg_r))))
    _emit(jsonio.dumps(jsonio.open_graph_to_json(result)), args.out)
    if any(m.apex.vertices.size == 0 and m.foot_l.size == 0 and m.foot_r.size == 0
           for m in items):
        _meta(command="coproduct", up_to_unitor=True)
    return EXIT_OK


def _repoint(m, L):
    """Legs of an open graph reinterpreted out of ``L(foot)``, sending the base point to 0."""
    from .fincolim import FinFunction, FinSet, GraphHom
    if m.apex.vertices.size == 0:
        raise BoundaryError("a pointed foot needs a nonempty apex")
    legs = []
    for foot, leg in ((m.foot_l, m.leg_l), (m.foot_r, m.leg_r)):
        src = L.on_ob(foot)
        legs.append(GraphHom(src, m.apex, FinFunction(src.vertices, m.apex.vertices,
                                                      leg.vmap.table + (0,)),
                             FinFunction(FinSet(0), m.apex.edges, ())))
    return legs


def cmd_restrict(args) -> int:
    _, dump = _loader(args.mode)
    args.inputs = [args.input]
    x = _inputs(args)[0]
    f = jsonio.function_from_json(_read(args.left))
    g = jsonio.function_from_json(_read(args.right))
    if args.mode == "decorated":
        from .decorated import CSP
        from .grothendieck import GrothPro
        res, _ = CSP.restrict(f, g, x.base)
        out = GrothPro(res, x.dec)
    else:
        from .structured import SCSP_DISCRETE
        out, _ = SCSP_DISCRETE.restrict(f, g, x)
    _emit(jsonio.dumps(dump(out)), args.out)
    return EXIT_OK


def cmd_dot(args) -> int:
    args.inputs = [args.input]
    x = _inputs(args)[0]
    if args.mode == "decorated":
        from .decorated import to_structured
        x = to_structured(x)
    _emit(jsonio.to_dot(x), args.out)
    return EXIT_OK


SUITE_NAMES = ("pseudocat", "equipment", "cocartesian", "laxfunctor", "groth", "equivalence")


def _suite_kwargs(name, args) -> dict:
    kw = {}
    if name in ("pseudocat", "equipment") and args.max_apex is not None:
        kw["max_apex"] = args.max_apex
    if name in ("pseudocat", "equipment", "cocartesian", "laxfunctor") and args.max_foot is not None:
        kw["max_foot"] = args.max_foot
    if name == "equivalence" and args.max_foot is not None:
        kw["max_foot"] = args.max_foot
    if name in ("pseudocat", "equipment", "cocartesian", "laxfunctor", "equivalence"):
        if args.max_vertices is not None:
            kw["max_vertices"] = args.max_vertices
        if args.max_edges is not None:
            kw["max_edges"] = args.max_edges
    if name == "groth":
        if args.max_foot is not None:
            kw["max_foot"] = args.max_foot
        if args.max_apex is not None:
            kw["max_apex"] = args.max_apex
        if args.max_edges is not None:
            kw["max_edges"] = args.max_edges
    kw["seed"] = args.seed
    return kw


def cmd_check(args) -> int:
    from . import suites
    from .dblcore import Report

    if args.mutant:
        from .mutants import MUTANTS
        known = [m.name for m in MUTANTS]
        if args.mutant not in known:
            raise UsageError(f"unknown mutant {args.mutant!r}; choose from {', '.join(known)}")
        if args.suites:
            raise UsageError("--mutant runs a fixture on its own; do not also name suites")
        from .mutants import get_mutant
        m = get_mutant(args.mutant)
        detected, detail = m.run()
        report = Report(f"mutant {m.name}")
        # the mutant is built to break a law: report it as that law failing
        report.record(f"{m.name} passes (expected: {m.expect})", not detected, detail)
        report.notes.append(m.description)
        report.notes.append(detail)
    else:
        names = list(dict.fromkeys(args.suites))
        unknown = [n for n in names if n not in SUITE_NAMES + ("all",)]
        if unknown:
            raise UsageError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITE_NAMES)}")
        if "all" in names:
            names = list(SUITE_NAMES)
        if not names:
            raise UsageError(f"no suite selected; choose from {', '.join(SUITE_NAMES)} or all")
        report = Report("check " + " ".join(names))
        for name in names:
            report.merge(suites.SUITES[name](**_suite_kwargs(name, args)), f"{name}: ")
    text = report.dumps() + "\n"
    _emit(text, args.out)
    if args.out:
        print(str(report), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_STRUCTURE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="opencat", description="Compose and check open graphs and cospans.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--mode", choices=("structured", "decorated"), default="structured",
                        help="input format: open graphs or graph-decorated cospans")
        sp.add_argument("--out", help="write the result here instead of stdout")
        sp.add_argument("--workspace", help="JSON file of named bindings usable as inputs")

    c = sub.add_parser("compose", help="compose two or more proarrows left to right")
    c.add_argument("inputs", nargs="+")
    c.add_argument("--dot", help="also write the composite as DOT to this file")
    common(c)
    c.set_defaults(fn=cmd_compose)

    c = sub.add_parser("coproduct", help="disjoint union of two proarrows")
    c.add_argument("inputs", nargs=2)
    c.add_argument("--structure", choices=("discrete", "pointed"), default="discrete",
                   help="feet functor; pointed does not preserve coproducts")
    common(c)
    c.set_defaults(fn=cmd_coproduct)

    c = sub.add_parser("restrict", help="restrict a proarrow along maps into its feet")
    c.add_argument("input")
    c.add_argument("--left", required=True, help="function JSON (file or literal) into footL")
    c.add_argument("--right", required=True, help="function JSON (file or literal) into footR")
    common(c)
    c.set_defaults(fn=cmd_restrict)

    c = sub.add_parser("check", help="run verification suites and emit a JSON report")
    c.add_argument("suites", nargs="*", metavar="SUITE",
                   help=f"one or more of {', '.join(SUITE_NAMES)}, or all")
    c.add_argument("--mutant", help="run one mutation fixture instead of the suites")
    c.add_argument("--max-foot", type=int)
    c.add_argument("--max-apex", type=int)
    c.add_argument("--max-vertices", type=int)
    c.add_argument("--max-edges", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_check)

    c = sub.add_parser("dot", help="render a proarrow as Graphviz DOT")
    c.add_argument("input")
    common(c)
    c.set_defaults(fn=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "fn", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as exc:
        _diagnose("usage", exc)
        return EXIT_USAGE
    except BoundaryError as exc:
        _diagnose("boundary", exc)
        return EXIT_BOUNDARY
    except UnsupportedError as exc:
        _diagnose("unsupported", exc)
        return EXIT_UNSUPPORTED
    except OpenCatError as exc:
        _diagnose("structure", exc)
        return EXIT_STRUCTURE


def _diagnose(kind: str, exc: Exception) -> None:
    """One JSON object on stderr describing the failure."""
    out = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    out.update(getattr(exc, "detail", {}))
    print(json.dumps(out, sort_keys=True), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

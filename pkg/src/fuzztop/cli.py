"""Command-line front end: ``fuzztop basis|check|map|equal|verify``.

Every subcommand emits one document, as JSON (default) or TSV.  Exit codes:
0 success, 1 malformed input, 2 precondition violated, 3 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Any, Sequence

from . import constructions as cons
from .constructions import EndoFunction
from .errors import ConsistencyError, FuzzTopError, InputError, PreconditionError
from .fuzzcore import Carrier
from .maps import map_report
from .oracle import sweep
from .properties import property_report, topologies_equal

SPACE_CHOICES = ("tau1", "tau1c", "tau2", "tau3")
CHAIN_NAMES = {"tau1": "A", "tau1c": "A^c", "tau2": "K"}

WINDOW_HELP = (
    "number of chain members to materialize (default: carrier size + 2). "
    "Chain decisions are made exactly from the closed-form grade laws; the "
    "window only cross-checks them against a finite family, and size + 2 "
    "already separates every pair of distinct laws on the carrier"
)

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_CONSISTENCY = 0, 1, 2, 3


@dataclass(frozen=True)
class InstanceFile:
    f: EndoFunction
    window: int | None = None
    x0: int | None = None
    k: int | None = None

    @property
    def labels(self) -> list[str]:
        return [self.f.carrier.label(x) for x in self.f.carrier]


def _int(value: Any, what: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{what} must be an integer >= {minimum}, got {value!r}")
    return value


def parse_instance(doc: Any) -> InstanceFile:
    """Validate a decoded instance document."""
    if not isinstance(doc, dict):
        raise InputError("instance file must hold a JSON object")
    unknown = set(doc) - {"carrier", "f", "window", "tau3"}
    if unknown:
        raise InputError(f"unknown instance fields: {sorted(unknown)}")
    if "carrier" not in doc or "f" not in doc:
        raise InputError("instance file needs both 'carrier' and 'f'")
    spec = doc["carrier"]
    if isinstance(spec, list):
        if not spec or not all(isinstance(s, str) for s in spec):
            raise InputError("carrier labels must be a non-empty array of strings")
        carrier = Carrier(len(spec), tuple(spec))
    else:
        carrier = Carrier(_int(spec, "carrier size", 1))
    mapping = doc["f"]
    if not isinstance(mapping, list):
        raise InputError("f must be an array of element indices")
    for y in mapping:
        _int(y, "every entry of f", 0)
    f = EndoFunction(carrier, tuple(mapping))
    window = doc.get("window")
    if window is not None:
        window = _int(window, "window", 1)
    x0 = k = None
    if "tau3" in doc:
        t3 = doc["tau3"]
        if not isinstance(t3, dict) or set(t3) != {"x0", "k"}:
            raise InputError("tau3 must be an object with exactly the fields x0 and k")
        x0 = carrier.check_index(_int(t3["x0"], "tau3.x0", 0))
        k = _int(t3["k"], "tau3.k", 1)
        if not f.is_injective():
            raise PreconditionError(
                "tau3 needs a one-to-one f (the orbit of x0 must be a cycle); this f is not injective"
            )
    return InstanceFile(f, window, x0, k)


def load_instance(path: str) -> InstanceFile:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read instance file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"instance file {path} is not valid JSON: {exc}") from exc
    return parse_instance(doc)


def build_space(inst: InstanceFile, space: str):
    if space == "tau1":
        return cons.tau1_basis(inst.f)
    if space == "tau1c":
        return cons.tau1_complement_basis(inst.f)
    if space == "tau2":
        return cons.tau2_basis(inst.f)
    if space == "tau3":
        if inst.x0 is None:
            raise InputError("space tau3 needs a 'tau3': {'x0', 'k'} entry in the instance file")
        return cons.tau3_topology(cons.orbit_data(inst.f, inst.x0, inst.k))
    raise InputError(f"unknown space {space!r}")


def _window(args, inst: InstanceFile) -> int:
    if args.window is not None:
        return args.window
    if inst.window is not None:
        return inst.window
    return cons.default_window(inst.f.carrier)


# ---------------------------------------------------------------- commands


def cmd_basis(args, inst: InstanceFile) -> dict:
    w = _window(args, inst)
    if args.space == "tau3":
        if inst.x0 is None:
            raise InputError("space tau3 needs a 'tau3': {'x0', 'k'} entry in the instance file")
        c, cn = cons.tau3_basis(cons.orbit_data(inst.f, inst.x0, inst.k))
        rows = [("C", c)] + [(f"C_{n}", s) for n, s in enumerate(cn)]
        laws = None
    else:
        chain = build_space(inst, args.space)
        name = CHAIN_NAMES[args.space]
        rows = [(f"{name}_{n}", chain.member(n)) for n in range(1, w + 1)]
        laws = [str(law) for law in chain.laws]
    doc = {
        "space": args.space,
        "window": w,
        "carrier": inst.labels,
        "rows": [{"name": name, "grades": s.to_strings()} for name, s in rows],
    }
    if laws is not None:
        doc["laws"] = laws
    return doc


def cmd_check(args, inst: InstanceFile) -> dict:
    w = _window(args, inst)
    report = property_report(build_space(inst, args.space), w)
    return {"space": args.space, "window": w, **report.to_json()}


def cmd_map(args, inst: InstanceFile) -> dict:
    w = _window(args, inst)
    report = map_report(inst.f, build_space(inst, args.space), w)
    return {"space": args.space, "window": w, **report.to_json()}


def cmd_equal(args, inst: InstanceFile) -> dict:
    w = _window(args, inst)
    v = topologies_equal(build_space(inst, args.left), build_space(inst, args.right), w)
    return {"left": args.left, "right": args.right, "window": w, "equal": v.value, "witness": v.witness}


def _k_values(text: str) -> list[int]:
    try:
        ks = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"--k must be a comma-separated list of integers, got {text!r}") from exc
    if not ks:
        raise InputError("--k needs at least one value")
    return ks


def cmd_verify(args) -> dict:
    return sweep(args.max_size, _k_values(args.k), args.window)


# ---------------------------------------------------------------- output


def flatten(doc: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Leaves of a JSON document as ``(dotted.path, text)`` pairs."""
    if isinstance(doc, dict):
        if not doc:
            return [(prefix, "{}")]
        out = []
        for key, value in doc.items():
            out += flatten(value, f"{prefix}.{key}" if prefix else str(key))
        return out
    if isinstance(doc, list):
        if not doc:
            return [(prefix, "[]")]
        out = []
        for i, value in enumerate(doc):
            out += flatten(value, f"{prefix}.{i}" if prefix else str(i))
        return out
    if isinstance(doc, str):
        return [(prefix, doc)]
    return [(prefix, json.dumps(doc))]


def _tsv_cell(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def to_tsv(command: str, doc: dict) -> str:
    if command == "basis":
        lines = ["\t".join(["set"] + [_tsv_cell(s) for s in doc["carrier"]])]
        lines += ["\t".join([row["name"]] + row["grades"]) for row in doc["rows"]]
    else:
        lines = ["path\tvalue"] + [f"{_tsv_cell(p)}\t{_tsv_cell(v)}" for p, v in flatten(doc)]
    return "\n".join(lines) + "\n"


def render(command: str, doc: dict, fmt: str) -> str:
    if fmt == "tsv":
        return to_tsv(command, doc)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".fuzztop-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    # usage errors are malformed input (exit 1), not argparse's default 2
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json", help="output format")
    common.add_argument("--output", "-o", help="write the document to this file (atomically) instead of stdout")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument(
        "instance",
        help='instance JSON file ("-" for stdin): {"carrier": size or labels, "f": [...], '
        '"window": optional, "tau3": optional {"x0", "k"}}',
    )
    instance.add_argument("--window", type=int, help=WINDOW_HELP)

    parser = _Parser(
        prog="fuzztop",
        description="Fuzzy topologies induced by a self-map of a finite set.",
        epilog="exit codes: 0 ok, 1 malformed input, 2 precondition violated, 3 internal consistency failure",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("basis", parents=[common, instance], help="grade table of the basis sets")
    p.add_argument("--space", choices=SPACE_CHOICES, required=True)

    p = sub.add_parser("check", parents=[common, instance], help="topological property report")
    p.add_argument("--space", choices=SPACE_CHOICES, required=True)

    p = sub.add_parser("map", parents=[common, instance], help="open-map and continuity report for f")
    p.add_argument("--space", choices=SPACE_CHOICES, required=True)

    p = sub.add_parser("equal", parents=[common, instance], help="whether two topologies coincide")
    p.add_argument("--left", choices=SPACE_CHOICES, required=True)
    p.add_argument("--right", choices=SPACE_CHOICES, required=True)

    p = sub.add_parser("verify", parents=[common], help="sweep every claim over all small instances")
    p.add_argument("--max-size", type=int, required=True, help="largest carrier size (at most 6)")
    p.add_argument("--k", default="1,2,3", help="comma-separated k values for tau3 (default 1,2,3)")
    p.add_argument("--window", type=int, help="chain window (default: max size + 2, also the minimum)")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, str | None, str | None]:
    """Execute one invocation; returns (exit code, emitted document, error message)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            doc = cmd_verify(args)
        else:
            inst = load_instance(args.instance)
            doc = {"basis": cmd_basis, "check": cmd_check, "map": cmd_map, "equal": cmd_equal}[
                args.command
            ](args, inst)
        text = render(args.command, doc, args.format)
        if args.output:
            write_atomic(args.output, text)
            return EXIT_OK, None, None
        return EXIT_OK, text, None
    except InputError as exc:
        return EXIT_INPUT, None, f"malformed input: {exc}"
    except PreconditionError as exc:
        return EXIT_PRECONDITION, None, f"precondition violated: {exc}"
    except ConsistencyError as exc:
        return EXIT_CONSISTENCY, None, f"internal consistency failure: {exc}"
    except FuzzTopError as exc:  # pragma: no cover
        return EXIT_INPUT, None, str(exc)


def main(argv: Sequence[str] | None = None) -> int:
    code, text, err = run(argv)
    if text is not None:
        sys.stdout.write(text)
    if err is not None:
        print(f"fuzztop: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

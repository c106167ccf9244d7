"""Command-line interface: ``softalg <command> ...``.

Exit codes: 0 on success, 2 on usage or validation errors, 3 when the
axiom suite reports a violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import axioms, compact, lattice
from .document import dumps, emit_softset_doc, load_documents, softset_to_obj
from .errors import SoftAlgebraError, UnknownParameter
from .setrep import SubsetRep
from .softset import SoftSet, combine_all, leq, project

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_AXIOMS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(paths: Sequence[str]) -> list[SoftSet]:
    texts = []
    for p in paths:
        try:
            texts.append(Path(p).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read {p}: {exc.strerror}") from None
    return load_documents(texts, list(paths))


def _param_list(text: str) -> list[str]:
    return [p for p in (t.strip() for t in text.split(",")) if p]


def format_value(v: SubsetRep) -> str:
    """Listing used by ``query``: members one per line, or an exclusion list."""
    if v.is_cofinite:
        return "\n".join(["all except:", *v.atoms]) + "\n"
    return "".join(f"{a}\n" for a in v.atoms)


def query(softsets: Sequence[SoftSet], param: str) -> SubsetRep:
    kb = combine_all(softsets)
    if param not in kb.domain:
        raise UnknownParameter(f"{param!r} is in no document's domain")
    return project(kb, [param])[param]


def cmd_combine(args) -> str:
    return emit_softset_doc(combine_all(_load(args.files)))


def cmd_project(args) -> str:
    (phi,) = _load([args.file])
    return emit_softset_doc(project(phi, _param_list(args.onto)))


def cmd_sup(args) -> str:
    return emit_softset_doc(lattice.sup(_load(args.files)))


def cmd_leq(args) -> str:
    phi, psi = _load([args.left, args.right])
    return "true\n" if leq(phi, psi) else "false\n"


def cmd_finite(args) -> str:
    (phi,) = _load([args.file])
    return "true\n" if compact.is_finite_element(phi) else "false\n"


def cmd_decompose(args) -> str:
    (phi,) = _load([args.file])
    if args.param is not None and args.param not in phi.domain:
        raise UnknownParameter(f"{args.param!r} is not in the domain {list(phi.domain)}")
    rows = []
    for a in compact.density_decomposition(phi).approximants():
        if len(rows) >= args.limit:
            break
        if args.param is not None and a.param not in (None, args.param):
            continue
        rows.append({"param": a.param, "excluded": list(a.excluded), "softset": softset_to_obj(a.value)})
    return dumps({"complete": compact.is_finite_element(phi), "approximants": rows})


def cmd_query(args) -> str:
    return format_value(query(_load(args.files), args.param))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="softalg", description="Soft set information algebra tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("combine", cmd_combine, "combine soft sets (extended intersection)")
    p.add_argument("files", nargs="+")
    p = add("project", cmd_project, "restrict a soft set to a subdomain")
    p.add_argument("file")
    p.add_argument("--onto", required=True, help="comma-separated parameters ('' for the empty domain)")
    p = add("sup", cmd_sup, "supremum of a family of soft sets")
    p.add_argument("files", nargs="+")
    p = add("leq", cmd_leq, "test LEFT <= RIGHT in the information order")
    p.add_argument("left")
    p.add_argument("right")
    p = add("finite", cmd_finite, "test whether a soft set is a finite element")
    p.add_argument("file")
    p = add("decompose", cmd_decompose, "list finite approximants of a soft set")
    p.add_argument("file")
    p.add_argument("--param", help="only approximants built on this parameter")
    p.add_argument("--limit", type=int, default=20)
    p = add("axioms", None, "run the randomized conformance suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--mode", choices=["finite", "countable"], default="finite")
    p.add_argument("--max-universe", type=int, default=5)
    p.add_argument("--max-params", type=int, default=4)
    p.add_argument("--atom-pool", type=int, default=10)
    p.add_argument("--max-set-size", type=int, default=4)
    p.add_argument("--mutant", choices=sorted(axioms.MUTANTS), help=argparse.SUPPRESS)
    p = add("query", cmd_query, "ε-approximate elements of a parameter over a knowledge base")
    p.add_argument("files", nargs="+")
    p.add_argument("--param", required=True)
    return parser


def _run_axioms(args) -> tuple[int, str]:
    try:
        cfg = axioms.GenConfig(
            seed=args.seed, trials=args.trials, mode=args.mode,
            max_universe=args.max_universe, atom_pool=args.atom_pool,
            max_params=args.max_params, max_set_size=args.max_set_size,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ops = axioms.MUTANTS[args.mutant] if args.mutant else axioms.DEFAULT_OPS
    report = axioms.run_suite(cfg, ops)
    return (EXIT_OK if report.passed else EXIT_AXIOMS), report.to_json()


def run_command(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text).

    With ``-o FILE`` the result goes to FILE and stdout text is empty.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command == "axioms":
            code, out = _run_axioms(args)
        else:
            code, out = EXIT_OK, args.func(args)
        if args.output:
            Path(args.output).write_text(out, encoding="utf-8")
            out = ""
        return code, out, ""
    except UsageError as exc:
        return EXIT_USAGE, "", f"usage error: {exc}\n"
    except SoftAlgebraError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

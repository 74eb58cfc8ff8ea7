"""Command-line interface: ``secmod <command> ...``.

Exit status: 0 success, 1 violations or witnesses found, 2 usage or parse
error, 3 enumeration bound exceeded.  Reports go to stdout as JSON (or DOT);
errors go to stderr as JSON.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from .classify import CLASSES, FLAG_NAMES, classify_all
from .errors import BoundExceededError, ParseError, SecmodError
from .harness import (
    DEFAULT_SEED,
    THEOREM_IDS,
    CorpusSpec,
    UnknownIdError,
    check_corpus,
    corpus_generate,
    search_counterexample,
)
from .lattice import enumerate_submodules, second_radical
from .modules import FinModule, Submodule, make_module, span

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>over)|(?P<sym>[Z+^]))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", len(text)


def parse_module_expr(text: str, ring: int | None = None) -> FinModule:
    """Parse ``"Z6 + Z10"``, ``"Z2^3"``, ``"Z2 + Z4 over Z8"`` into a module.

    Z1 atoms contribute nothing; ``ring`` overrides the ring modulus.
    """
    toks = list(_tokens(text))
    i = 0

    def take(kind, value=None, what=""):
        nonlocal i
        k, v, p = toks[i]
        if k != kind or (value is not None and v != value):
            found = "end of input" if k == "end" else repr(v)
            raise ParseError(f"expected {what or value or kind}, found {found}", p)
        i += 1
        return v, p

    def cyclic_order():
        take("sym", "Z")
        v, p = take("int", what="a cyclic order")
        if int(v) == 0:
            raise ParseError("Z0 is not a finite cyclic group", p)
        return int(v)

    factors = []
    while True:
        d = cyclic_order()
        e = 1
        if toks[i][:2] == ("sym", "^"):
            i += 1
            v, p = take("int", what="an exponent")
            e = int(v)
            if e < 1:
                raise ParseError("exponent must be at least 1", p)
        factors += [d] * e
        if toks[i][:2] != ("sym", "+"):
            break
        i += 1
    over, over_pos = None, 0
    if toks[i][0] == "word":
        over_pos = toks[i][2]
        i += 1
        over = cyclic_order()
    take("end", what="'+', '^', 'over' or end of input")
    if ring is not None and over is not None and ring != over:
        raise ParseError(f"--ring {ring} contradicts 'over Z{over}'", over_pos)
    try:
        return make_module(ring if ring is not None else over,
                           [d for d in factors if d != 1])
    except ValueError as exc:
        raise ParseError(str(exc), over_pos) from None


def format_module(M: FinModule) -> str:
    """Canonical text that ``parse_module_expr`` maps back to M."""
    return str(M)


def parse_gens(text: str) -> list[list[int]]:
    """``"1,3;0,6"`` -> ``[[1, 3], [0, 6]]``."""
    rows = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            rows.append([int(x) for x in part.split(",")])
        except ValueError:
            raise ParseError(f"bad generator {part!r}", text.find(part)) from None
    return rows


# -- serialization ---------------------------------------------------------

def module_json(M: FinModule) -> dict:
    return {"ring": M.modulus, "invariant_factors": list(M.factors), "order": M.order}


def submodule_json(N: Submodule) -> dict:
    return {"gens": [list(g) for g in N.gens], "order": N.order}


def lattice_json(M: FinModule, max_nodes=None) -> dict:
    L = enumerate_submodules(M, max_nodes)
    return {
        "schema_version": SCHEMA_VERSION,
        "module": module_json(M),
        "nodes": [{"id": i, **submodule_json(N)} for i, N in enumerate(L)],
        "covers": [list(e) for e in L.cover_edges()],
    }


def _gens_label(N: Submodule) -> str:
    if N.is_zero:
        return "<0>"
    return "<" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in N.gens) + ">"


def lattice_dot(M: FinModule, max_nodes=None, workers: int = 1) -> str:
    """Hasse diagram: one node per submodule, cover edges only, flags as attributes."""
    L = enumerate_submodules(M, max_nodes)
    rows = classify_all(M, workers=workers, max_nodes=max_nodes).rows
    lines = [f'digraph "{format_module(M)}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, (N, row) in enumerate(zip(L, rows)):
        attrs = [f'label="{_gens_label(N)}\\norder {N.order}"']
        attrs += [f'{name}="{str(row[name]).lower()}"' for name in FLAG_NAMES.values()]
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j in L.cover_edges():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _error(kind: str, message: str, status: int, **extra) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message, **extra}) + "\n")
    return status


# -- commands --------------------------------------------------------------

def _module_arg(args) -> FinModule:
    return parse_module_expr(args.expr, args.ring)


def cmd_enumerate(args) -> int:
    M = _module_arg(args)
    if args.dot:
        sys.stdout.write(lattice_dot(M, args.max_nodes, args.workers))
    else:
        _emit(lattice_json(M, args.max_nodes))
    return EXIT_OK


def cmd_classify(args) -> int:
    M = _module_arg(args)
    _emit(classify_all(M, workers=args.workers, max_nodes=args.max_nodes).to_dict())
    return EXIT_OK


def cmd_sec(args) -> int:
    M = _module_arg(args)
    N = span(M, parse_gens(args.submodule)) if args.submodule else M.whole()
    _emit({
        "schema_version": SCHEMA_VERSION,
        "module": module_json(M),
        "submodule": submodule_json(N),
        "second_radical": submodule_json(second_radical(N)),
    })
    return EXIT_OK


def _corpus(args) -> CorpusSpec:
    return CorpusSpec(args.corpus, args.kind)


def cmd_check(args) -> int:
    if (args.expr is None) == (args.corpus is None):
        raise _Usage("give exactly one of a module expression or --corpus")
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise UnknownIdError(f"unknown theorem id {args.theorem!r}")
    modules = [_module_arg(args)] if args.expr else corpus_generate(_corpus(args))
    reports = check_corpus(ids, modules, workers=args.workers, samples=args.samples,
                           seed=args.seed, max_nodes=args.max_nodes)
    for r in reports:
        if r.vacuous_instances:
            logging.getLogger("secmod").info(
                "%s on %s: %d of %d instances vacuous%s", r.theorem_id, r.module,
                r.vacuous_instances, r.instances_checked,
                "".join(f"; part {k}: {v['vacuous']} of {v['instances']}"
                        for k, v in sorted(r.parts.items())))
    violations = sum(len(r.violations) for r in reports)
    _emit({
        "schema_version": SCHEMA_VERSION,
        "theorems": list(ids),
        "modules": [format_module(M) for M in modules],
        "reports": [r.to_dict() for r in reports],
        "summary": {
            "instances_checked": sum(r.instances_checked for r in reports),
            "vacuous_instances": sum(r.vacuous_instances for r in reports),
            "violations": violations,
        },
    })
    return EXIT_FOUND if violations else EXIT_OK


def cmd_search(args) -> int:
    witnesses = search_counterexample(args.antecedent, args.consequent, _corpus(args))
    _emit({
        "schema_version": SCHEMA_VERSION,
        "antecedent": args.antecedent,
        "consequent": args.consequent,
        "corpus": {"max_order": args.corpus, "kind": args.kind},
        "witnesses": witnesses,
        "result": "witnesses found" if witnesses else "none up to bound",
    })
    return EXIT_FOUND if witnesses else EXIT_OK


def cmd_corpus(args) -> int:
    mods = corpus_generate(CorpusSpec(args.bound, args.kind))
    _emit({
        "schema_version": SCHEMA_VERSION,
        "max_order": args.bound,
        "kind": args.kind,
        "modules": [{"expr": format_module(M), **module_json(M)} for M in mods],
    })
    return EXIT_OK


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ring", type=_positive, help="ring modulus n, for Z/nZ")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--max-nodes", type=_positive, default=None,
                        help="lattice size bound (default: SECMOD_MAX_LATTICE)")
    kinds = ("all", "cyclic", "p-groups")

    p = _Parser(prog="secmod", description="Submodule lattices and 2-absorbing secondary submodules "
                                           "of finite Z/nZ-modules.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", parents=[common], help="submodule lattice as JSON or DOT")
    s.add_argument("expr")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[common], help="every class flag for every submodule")
    s.add_argument("expr")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("sec", parents=[common], help="second radical of a submodule")
    s.add_argument("expr")
    s.add_argument("--submodule", help='generators, e.g. "1,3;0,6" (default: whole module)')
    s.set_defaults(func=cmd_sec)

    s = sub.add_parser("check", parents=[common], help="verify theorems on instances")
    s.add_argument("theorem", help="theorem id or 'all'")
    s.add_argument("expr", nargs="?")
    s.add_argument("--corpus", type=_positive, help="check every group of order <= N")
    s.add_argument("--kind", choices=kinds, default="all")
    s.add_argument("--samples", type=int, default=100, help="random injective homs per target")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the hom sample")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("search", parents=[common], help="antecedent-but-not-consequent witnesses")
    s.add_argument("antecedent", choices=sorted(CLASSES))
    s.add_argument("consequent", choices=sorted(CLASSES))
    s.add_argument("--corpus", type=_positive, required=True)
    s.add_argument("--kind", choices=kinds, default="all")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("corpus", help="list the groups of order <= bound")
    s.add_argument("bound", type=_positive)
    s.add_argument("--kind", choices=kinds, default="all")
    s.set_defaults(func=cmd_corpus)
    return p


def _configure_logging(verbose: bool) -> None:
    log = logging.getLogger("secmod")
    for h in [h for h in log.handlers if getattr(h, "secmod_cli", False)]:
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.secmod_cli = True
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if verbose else logging.WARNING)
    log.propagate = False


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except ParseError as exc:
        return _error("parse", str(exc), EXIT_USAGE, position=exc.position)
    except _Usage as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except BoundExceededError as exc:
        return _error("bound-exceeded", str(exc), EXIT_BOUND, partial_count=exc.partial_count)
    except (UnknownIdError, SecmodError, ValueError) as exc:
        return _error(type(exc).__name__, str(exc.args[0] if exc.args else exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())

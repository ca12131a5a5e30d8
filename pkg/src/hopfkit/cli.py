"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction

from . import hopf, transforms
from .compositions import enumerate_set_compositions
from .config import check_cap, max_n
from .errors import HopfkitError, StructureError
from .series import GFSeries
from .species import ordinary_gf, parse_species, set_partitions, type_gf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(HopfkitError):
    pass


def _read_seq(arg: str):
    """Returns ``(terms, was_json)``; ``-`` reads stdin."""
    text = sys.stdin.read() if arg == "-" else arg
    return transforms.parse_seq(text), text.strip().startswith("[")


def _fmt(args, was_json=False, default="plain") -> str:
    if args.format:
        return args.format
    return "json" if was_json else default


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _parse_q(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad --q value {text!r}; use an integer or a rational like 1/2") from None


# -- structure expressions for `verify` -----------------------------------------------

def _split_args(body: str) -> list:
    depth, start, out = 0, 0, []
    for i, c in enumerate(body):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == "," and depth == 0:
            out.append(body[start:i])
            start = i + 1
    out.append(body[start:])
    return [s.strip() for s in out]


def parse_structure(text: str, q: Fraction) -> hopf.HopfStructure:
    """``L``, ``E``, ``mock-even``, ``L-corrupt``, ``free(<species>)``, ``hadamard(<s>,<s>)``.

    Any structure may carry its own parameter as a suffix, e.g. ``L@1/2``;
    otherwise ``q`` is used.
    """
    text = text.strip()
    if text.startswith("hadamard(") and text.endswith(")"):
        parts = _split_args(text[len("hadamard("):-1])
        if len(parts) != 2:
            raise UsageError("hadamard(...) takes two structures")
        return hopf.hadamard_hopf(parse_structure(parts[0], q), parse_structure(parts[1], q))
    if "@" in text and not text.endswith(")"):
        text, _, qtext = text.rpartition("@")
        q = _parse_q(qtext)
    if text == "L":
        return hopf.linear_orders_hopf(q)
    if text == "E":
        if q != 1:
            raise StructureError("E is a bimonoid only at q = 1")
        return hopf.exponential_hopf()
    if text == "mock-even":
        return hopf.MockEven(q)
    if text == "L-corrupt":
        return hopf.corrupted_linear_orders(q)
    if text.startswith("free(") and text.endswith(")"):
        return hopf.free_hopf(q, parse_species(text[len("free("):-1]))
    raise UsageError(f"unknown structure {text!r}")


# -- commands ---------------------------------------------------------------

def cmd_transform(args) -> int:
    seq, was_json = _read_seq(args.sequence)
    _emit(transforms.render_seq(transforms.boolean_transform(seq), _fmt(args, was_json)))
    return EXIT_OK


def cmd_inverse(args) -> int:
    seq, was_json = _read_seq(args.sequence)
    _emit(transforms.render_seq(transforms.inverse_boolean(seq), _fmt(args, was_json)))
    return EXIT_OK


def cmd_hadamard_transform(args) -> int:
    p, pj = _read_seq(args.p)
    q, qj = _read_seq(args.q_seq)
    if args.method == "both":
        r1 = transforms.hadamard_boolean(p, q, "enumerate")
        r2 = transforms.hadamard_boolean(p, q, "transform")
        if r1 != r2:
            sys.stderr.write("enumeration and transform routes disagree\n")
            return EXIT_FAIL
        r = r1
    else:
        r = transforms.hadamard_boolean(p, q, args.method)
    _emit(transforms.render_seq(r, _fmt(args, pj or qj)))
    return EXIT_OK


def cmd_feasibility(args) -> int:
    seq, _ = _read_seq(args.sequence)
    report = transforms.feasibility(seq)
    fmt = _fmt(args, default="json")
    if fmt == "json":
        _emit(report.dumps())
    elif fmt == "csv":
        lines = ["condition,pass,witness"]
        for name, v in report.verdicts.items():
            witness = json.dumps(v.witness).replace('"', "'") if v.witness is not None else ""
            lines.append(f'{name},{str(v.passed).lower()},"{witness}"')
        _emit("\n".join(lines))
    else:
        lines = []
        for name, v in report.verdicts.items():
            tail = "" if v.witness is None else " " + json.dumps(v.witness)
            lines.append(f"{name}: {'pass' if v.passed else 'FAIL'}{tail}")
        lines.append(report.to_json()["note"])
        _emit("\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_min_next(args) -> int:
    seq, was_json = _read_seq(args.sequence)
    value = transforms.min_next_term(seq)
    fmt = _fmt(args, was_json)
    _emit(json.dumps({"min_next": str(value)}) if fmt == "json" else str(value))
    return EXIT_OK


def _series_out(series: GFSeries, fmt: str) -> str:
    if fmt == "json":
        return series.dumps()
    if fmt == "csv":
        return "\n".join(["n,value"] + [f"{n},{c}" for n, c in enumerate(series.coeffs)])
    return str(series)


def cmd_dims(args) -> int:
    check_cap(args.n, "--n")
    _emit(_series_out(ordinary_gf(parse_species(args.species), args.n), _fmt(args)))
    return EXIT_OK


def cmd_typegf(args) -> int:
    check_cap(args.n, "--n")
    _emit(_series_out(type_gf(parse_species(args.species), args.n, args.method), _fmt(args)))
    return EXIT_OK


def cmd_basis(args) -> int:
    check_cap(args.n, "--n")
    labels = [b.render() for b in parse_species(args.species).basis_n(args.n)]
    fmt = _fmt(args)
    if fmt == "json":
        _emit(json.dumps(labels))
    elif fmt == "csv":
        _emit("\n".join(["index,label"] + [f'{i},"{s}"' for i, s in enumerate(labels)]))
    else:
        _emit("\n".join(labels) if labels else "")
    return EXIT_OK


_CHECKERS = {
    "monoid": hopf.check_monoid,
    "comonoid": hopf.check_comonoid,
    "compat": hopf.check_compat,
    "natural": hopf.check_naturality,
}


def cmd_verify(args) -> int:
    check_cap(args.n, "--n")
    h = parse_structure(args.structure, _parse_q(args.q))
    names = [s.strip() for s in args.axioms.split(",")] if args.axioms else list(_CHECKERS)
    unknown = [s for s in names if s not in _CHECKERS]
    if unknown:
        raise UsageError(f"unknown axiom groups: {', '.join(unknown)}")
    report = None
    for name in names:
        r = _CHECKERS[name](h, args.n)
        report = r if report is None else report.merge(r)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(json.dumps(report.to_json()))
    elif fmt == "csv":
        lines = ["axiom,I,S,T,witness"]
        for f in sorted(report.failures):
            lines.append(f'{f.axiom},"{list(f.I)}","{list(f.S)}","{list(f.T)}","{f.witness}"')
        _emit("\n".join(lines))
    else:
        lines = [f"structure {report.structure} q={report.q} n<={report.n_max}"]
        failed = report.axioms_failed()
        for axiom, count in sorted(report.checked.items()):
            lines.append(f"{axiom}: {'FAIL' if axiom in failed else 'pass'} ({count} identities)")
        for f in sorted(report.failures):
            lines.append("failure " + json.dumps(f.to_json()))
        _emit("\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def _bell(n: int) -> int:
    return len(set_partitions(tuple(range(1, n + 1))))


def cmd_oracle(args) -> int:
    check_cap(args.n, "--n")
    n = args.n
    if args.which == "atomic":
        values = [transforms.atomic_partitions(k) for k in range(1, n + 1)]
    elif args.which == "indecomposable":
        values = transforms.indecomposable_transform(parse_species(args.species or "X"), n)
    elif args.which == "bell":
        values = [_bell(k) for k in range(1, n + 1)]
    elif args.which == "ordered-bell":
        values = [len(enumerate_set_compositions(range(1, k + 1))) for k in range(1, n + 1)]
    else:
        raise UsageError(f"unknown oracle {args.which!r}")
    _emit(transforms.render_seq(values, _fmt(args)))
    return EXIT_OK


# -- parser -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default=None)
    common.add_argument("--max-n", type=int, default=None, help="enumeration cap (hard ceiling 12)")

    parser = _Parser(prog="hopfkit", description="Hopf monoids in species and Boolean transforms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    seq_help = "comma-separated terms, a JSON array, or - for stdin"
    add("transform", cmd_transform, "Boolean transform").add_argument("sequence", help=seq_help)
    add("inverse", cmd_inverse, "inverse Boolean transform").add_argument("sequence", help=seq_help)
    p = add("hadamard-transform", cmd_hadamard_transform, "transform of a termwise product from the factors' transforms")
    p.add_argument("p", help=seq_help)
    p.add_argument("q_seq", metavar="q", help=seq_help)
    p.add_argument("--method", choices=["enumerate", "transform", "both"], default="both")
    add("feasibility", cmd_feasibility, "necessary conditions for a connected Hopf monoid").add_argument(
        "sequence", help=seq_help)
    add("min-next", cmd_min_next, "least next term keeping the transform nonnegative").add_argument(
        "sequence", help=seq_help)
    for name, fn, text in (("dims", cmd_dims, "dimension sequence"), ("basis", cmd_basis, "basis labels on [n]")):
        p = add(name, fn, text)
        p.add_argument("--species", required=True)
        p.add_argument("--n", type=int, required=True)
    p = add("typegf", cmd_typegf, "orbit counts (type generating function)")
    p.add_argument("--species", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["orbits", "burnside"], default="orbits")
    p = add("verify", cmd_verify, "check the q-Hopf monoid axioms")
    p.add_argument("--structure", required=True)
    p.add_argument("--q", default="1")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--axioms", default=None, help="subset of monoid,comonoid,compat,natural")
    p = add("oracle", cmd_oracle, "brute-force counting oracles")
    p.add_argument("which", choices=["atomic", "indecomposable", "bell", "ordered-bell"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--species", default=None)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 0) < 0:
            raise UsageError("--n must be nonnegative")
        cap = max_n(args.max_n) if args.max_n is not None else contextlib.nullcontext()
        with cap:
            return args.func(args)
    except HopfkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

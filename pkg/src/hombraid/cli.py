"""Command-line front end.

Every invocation prints exactly one JSON document on stdout and exits with
0 (all checks pass), 1 (some check or precondition failed) or 2 (bad input,
cap exceeded, missing inverses).  A one-line summary goes to stderr.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import bialgebra as bi
from . import homalg
from .braid import (BraidWord, DimensionCapError, MissingInverseError, build_braid_generators,
                    check_braid_relations, evaluate_braid_word, specialize_rep)
from .fixtures import write_corpus
from .hybe import check_hybe, tau_alpha
from .linalg import ShapeError, matrix_to_json
from .report import InvariantError, Report
from .serialize import (SchemaError, algebra_from_json, bialgebra_from_json, candidate_from_json,
                        candidate_to_json, dumps, hom_module_from_json, module_from_json, read_json,
                        write_json)

CHECK_TARGETS = ("hom-lie", "hom-assoc", "bialgebra", "qt", "dual-qt", "module", "comodule",
                 "hybe", "qybe", "braid")
BUILD_TARGETS = ("b-alpha", "b-alpha-inv", "b-r", "b-dual-r", "tau-alpha")


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    code: int
    payload: dict = field(default_factory=dict)
    summary: str = ""


class JsonArgumentParser(argparse.ArgumentParser):
    """Usage errors become exit 2 with a JSON body instead of argparse's text."""

    def error(self, message):
        raise UsageError(message)

    def print_help(self, file=None):
        super().print_help(sys.stderr)

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise _Exit(status)


class _Exit(Exception):
    def __init__(self, status):
        self.status = status


def _from_report(report: Report, extra: dict | None = None) -> Outcome:
    payload = report.to_json()
    payload.update(extra or {})
    return Outcome(0 if report.passed else 1, payload, report.summary())


def _need_bialgebra(obj: dict, what: str):
    H, qt, dual = bialgebra_from_json(obj)
    if what == "qt" and qt is None:
        raise SchemaError("bialgebra has no qt_R")
    if what == "dual" and dual is None:
        raise SchemaError("bialgebra has no dual_R")
    return H, qt, dual


def _need_module(obj: dict, kind: str):
    if obj.get("kind") != kind:
        raise SchemaError(f"expected kind {kind}, got {obj.get('kind')!r}")
    M, embedded = module_from_json(obj)
    if embedded is None:
        raise SchemaError(f"{kind} JSON needs an embedded 'bialgebra'")
    return M, embedded


def _algebra(obj: dict, kind: str):
    if obj.get("kind") != kind:
        raise SchemaError(f"expected kind {kind}, got {obj.get('kind')!r}")
    return algebra_from_json(obj)


# -- check -----------------------------------------------------------------------

def cmd_check(target: str, path: str, n: int = 3, cap: int | None = None) -> Outcome:
    obj = read_json(path)
    if target == "hom-lie":
        return _from_report(homalg.check_hom_lie(_algebra(obj, "hom-lie")))
    if target == "hom-assoc":
        return _from_report(homalg.check_hom_assoc(_algebra(obj, "hom-assoc")))
    if target == "bialgebra":
        return _from_report(bi.check_bialgebra(_need_bialgebra(obj, "")[0]))
    if target == "qt":
        H, qt, _ = _need_bialgebra(obj, "qt")
        return _from_report(bi.check_bialgebra(H).extend(bi.check_qt(H, qt)))
    if target == "qybe":
        H, qt, _ = _need_bialgebra(obj, "qt")
        return _from_report(bi.check_qybe(H, qt.R))
    if target == "dual-qt":
        H, _, dual = _need_bialgebra(obj, "dual")
        return _from_report(bi.check_bialgebra(H).extend(bi.check_dual_qt(H, dual)))
    if target == "module":
        M, (H, _, _) = _need_module(obj, "module")
        report = bi.check_module(H, M)
        if M.alpha is not None:
            report.extend(bi.check_module_morphism(H, M))
        return _from_report(report)
    if target == "comodule":
        C, (H, _, _) = _need_module(obj, "comodule")
        report = bi.check_comodule(H, C)
        if C.alpha is not None:
            report.extend(bi.check_comodule_morphism(H, C))
        return _from_report(report)
    if target == "hybe":
        return _from_report(check_hybe(candidate_from_json(obj)))
    if target == "braid":
        rep = build_braid_generators(candidate_from_json(obj), n, cap=cap)
        return _from_report(check_braid_relations(rep), {"n": n})
    raise UsageError(f"unknown check target {target!r}")


# -- build -----------------------------------------------------------------------

def _build(target: str, obj: dict):
    if target == "b-alpha":
        return homalg.build_B_alpha(_algebra(obj, "hom-lie"))
    if target == "b-alpha-inv":
        return homalg.invert_B_alpha(_algebra(obj, "hom-lie"))
    if target == "b-r":
        M, (H, qt, _) = _need_module(obj, "module")
        if qt is None:
            raise SchemaError("embedded bialgebra has no qt_R")
        return bi.build_B_R(H, qt, M)
    if target == "b-dual-r":
        C, (H, _, dual) = _need_module(obj, "comodule")
        if dual is None:
            raise SchemaError("embedded bialgebra has no dual_R")
        return bi.build_B_dual_R(H, dual, C)
    if target == "tau-alpha":
        return tau_alpha(hom_module_from_json(obj))
    raise UsageError(f"unknown build target {target!r}")


def cmd_build(target: str, path: str, out: str | None = None) -> Outcome:
    candidate = _build(target, read_json(path))
    encoded = candidate_to_json(candidate)
    extra = {"dim": candidate.dim}
    if out:
        write_json(out, encoded)
        extra["out"] = out
    else:
        extra["candidate"] = encoded
    return _from_report(check_hybe(candidate), extra)


# -- braid -----------------------------------------------------------------------

def cmd_braid(path: str, n: int = 3, word: str | None = None, value: str | None = None,
              cap: int | None = None) -> Outcome:
    candidate = candidate_from_json(read_json(path))
    parsed = BraidWord.parse(n, word) if word is not None else None
    if value is not None:
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"--lambda expects a rational, got {value!r}") from None
    rep = build_braid_generators(candidate, n, cap=cap)
    if value is not None:
        rep = specialize_rep(rep, value)
    extra = {"n": n}
    if value is not None:
        extra["lambda"] = str(value)
    if parsed is not None:
        extra["word"] = list(parsed.letters)
        extra["matrix"] = matrix_to_json(evaluate_braid_word(rep, parsed))
    return _from_report(check_braid_relations(rep), extra)


def cmd_fixtures(out: str) -> Outcome:
    try:
        paths = write_corpus(out)
    except OSError as exc:
        raise SchemaError(f"cannot write fixtures to {out}: {exc.strerror}") from None
    return Outcome(0, {"pass": True, "checks": [], "written": [p.name for p in paths]},
                   f"wrote {len(paths)} fixtures to {out}")


# -- entry point -----------------------------------------------------------------

def build_parser() -> JsonArgumentParser:
    p = JsonArgumentParser(prog="hombraid", description="Construct and verify HYBE solutions.")
    p.add_argument("--format", choices=["json"], default="json")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=JsonArgumentParser)

    c = sub.add_parser("check", help="run a named verification")
    c.add_argument("target", choices=CHECK_TARGETS)
    c.add_argument("input")
    c.add_argument("--n", type=int, default=3, help="strands for 'check braid'")
    c.add_argument("--cap", type=int, default=None)

    b = sub.add_parser("build", help="construct a HYBE candidate")
    b.add_argument("target", choices=BUILD_TARGETS)
    b.add_argument("input")
    b.add_argument("--out", default=None)

    r = sub.add_parser("braid", help="braid group representation from a candidate")
    r.add_argument("input")
    r.add_argument("--n", type=int, default=3)
    r.add_argument("--word", default=None, help='signed generator indices, e.g. "1 2 -1"')
    r.add_argument("--lambda", dest="value", default=None, help="specialize l to this rational")
    r.add_argument("--cap", type=int, default=None, help="max dim M^n (env HOMBRAID_CAP)")

    f = sub.add_parser("fixtures", help="write the built-in fixture corpus")
    f.add_argument("--out", required=True)
    for sp in (c, b, r, f):
        sp.add_argument("--format", choices=["json"], default="json")
    return p


def run(argv=None) -> Outcome:
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "check":
            return cmd_check(args.target, args.input, args.n, args.cap)
        if args.verb == "build":
            return cmd_build(args.target, args.input, args.out)
        if args.verb == "braid":
            return cmd_braid(args.input, args.n, args.word, args.value, args.cap)
        return cmd_fixtures(args.out)
    except InvariantError as exc:
        payload = exc.report.to_json() if exc.report is not None else {"pass": False, "checks": []}
        payload["error"] = str(exc)
        return Outcome(1, payload, str(exc))
    except _Exit as exc:
        return Outcome(2 if exc.status else 0, {"pass": not exc.status, "checks": []})
    except (UsageError, SchemaError, DimensionCapError, MissingInverseError, ShapeError,
            ValueError, ArithmeticError) as exc:
        return Outcome(2, {"pass": False, "checks": [], "error": str(exc)}, f"error: {exc}")
    except Exception as exc:  # keep the exit-code contract total
        return Outcome(2, {"pass": False, "checks": [], "error": f"internal error: {exc!r}"},
                       f"internal error: {exc!r}")


def main(argv=None) -> int:
    outcome = run(argv)
    sys.stdout.write(dumps(outcome.payload))
    if outcome.summary:
        print(outcome.summary, file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())

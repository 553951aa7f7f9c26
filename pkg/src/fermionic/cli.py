"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 level restriction violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import characters as chars
from .kostka import build_kostka_matrix, invert_unitriangular, kostka_poly
from .verify import SUITES, run_suite
from .weights import RankedWeight, RectangularSequence, parse_int_list

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_LEVEL = 0, 1, 2, 3


class InputError(Exception):
    pass


class LevelError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(message)


def _vector(text: str, r: int, what: str) -> tuple[int, ...]:
    try:
        v = parse_int_list(text)
    except ValueError as exc:
        raise InputError(f"--{what}: {exc}") from None
    if len(v) != r:
        raise InputError(f"--{what} has {len(v)} entries, expected rank {r}")
    if any(x < 0 for x in v):
        raise InputError(f"--{what} entries must be nonnegative")
    return v


def _nonneg(value: int, name: str, minimum: int = 0) -> int:
    if value < minimum:
        raise InputError(f"--{name} must be >= {minimum}")
    return value


def _emit(data, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=False)
    return text


def cmd_kostka(args) -> str:
    r = _nonneg(args.rank, "rank", 1)
    lam = RankedWeight(_vector(args.lam, r, "lambda"))
    n = RectangularSequence(_vector(args.n, r, "n"))
    poly = kostka_poly(r, lam, n)
    data = {"rank": r, "lambda": list(lam.coords), "n": list(n.counts), "poly": poly.to_json()}
    return _emit(data, str(poly), args.format)


def cmd_kostka_matrix(args) -> str:
    r = _nonneg(args.rank, "rank", 1)
    width = _nonneg(args.width, "width")
    size = _nonneg(args.size_max, "size-max")
    residue = args.residue
    if not 0 <= residue <= r:
        raise InputError(f"--residue must lie in 0..{r}")
    K = build_kostka_matrix(r, width, size, residue)
    if args.inverse:
        K = invert_unitriangular(K)
    return _emit(K.to_json(), K.render(), args.format)


def _check_level(r: int, k: int, v: Sequence[int], what: str) -> None:
    if sum(v) > k:
        raise LevelError(f"--{what} {','.join(map(str, v))} has total {sum(v)} > level {k}: not level-restricted")


def _strings_output(ch, fmt: str) -> str:
    sf = chars.string_functions(ch)
    if fmt == "json":
        data = {
            "rank": ch.rank, "level": ch.level, "lambda": list(ch.label[1]), "max_degree": ch.max_degree,
            "strings": [
                {"weight": list(w.coords), "offset": str(sf[w].offset), "series": sf[w].series.to_json()}
                for w in sorted(sf)
            ],
        }
        return json.dumps(data, indent=2)
    return "\n".join(f"{w}: {sf[w]}" for w in sorted(sf))


def cmd_char(args) -> str:
    r = _nonneg(args.rank, "rank", 1)
    k = _nonneg(args.level, "level")
    D = _nonneg(args.max_degree, "max-degree")
    lam = RankedWeight(_vector(args.lam, r, "lambda"))
    _check_level(r, k, lam.coords, "lambda")
    rect = lam.rectangle()
    formula = args.formula
    if formula == "rect" and rect is None:
        raise InputError(f"{lam} is not rectangular; use --formula general")
    if formula == "rect" or (formula == "auto" and rect is not None):
        l, beta = rect
        ch = chars.char_V_rect(r, k, l, beta, D)
    else:
        ch = chars.char_V_general(r, k, lam, D)
    if args.strings:
        if k == 0:
            raise InputError("--strings needs level >= 1")
        return _strings_output(ch, args.format)
    return _emit(ch.to_json(), ch.render(), args.format)


def cmd_fusion_char(args) -> str:
    r = _nonneg(args.rank, "rank", 1)
    k = _nonneg(args.level, "level")
    D = _nonneg(args.max_degree, "max-degree")
    n = _vector(args.n, r, "n")
    _check_level(r, k, n, "n")
    ch = chars.char_fusion_W(r, k, n, D) if args.principal else chars.char_fusion_V(r, k, n, D)
    return _emit(ch.to_json(), ch.render(), args.format)


def cmd_verify(args) -> tuple[str, bool]:
    size = None if args.max_size is None else _nonneg(args.max_size, "max-size")
    degree = None if args.max_degree is None else _nonneg(args.max_degree, "max-degree")
    reports = run_suite(args.suite, size, degree)
    ok = all(rep.ok for rep in reports)
    if args.format == "json":
        return json.dumps({"ok": ok, "suites": [rep.to_json() for rep in reports]}, indent=2), ok
    text = "\n".join(rep.render() for rep in reports)
    return text + f"\nresult: {'PASS' if ok else 'FAIL'}", ok


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fermionic", description="Kostka polynomials and affine sl(r+1) characters.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("kostka", help="one generalized Kostka polynomial")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True, metavar="L1,...,Lr")
    sp.add_argument("--n", required=True, metavar="N1,...,Nr")
    common(sp)
    sp.set_defaults(func=cmd_kostka)

    sp = sub.add_parser("kostka-matrix", help="Kostka matrix on a partition index set")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--width", type=int, required=True)
    sp.add_argument("--size-max", type=int, required=True)
    sp.add_argument("--residue", type=int, required=True)
    sp.add_argument("--inverse", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_kostka_matrix)

    sp = sub.add_parser("char", help="character of an integrable module")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True, metavar="L1,...,Lr")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--formula", choices=["auto", "rect", "general"], default="auto")
    sp.add_argument("--strings", action="store_true", help="print string functions instead")
    common(sp)
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("fusion-char", help="character of a fusion product of rectangles")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--n", required=True, metavar="N1,...,Nr")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--principal", action="store_true", help="principal subspaces instead of integrable modules")
    common(sp)
    sp.set_defaults(func=cmd_fusion_char)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES + ["all"], required=True)
    sp.add_argument("--max-size", type=int)
    sp.add_argument("--max-degree", type=int)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.func is cmd_verify:
            out, ok = cmd_verify(args)
            print(out)
            return EXIT_OK if ok else EXIT_VERIFY
        out = args.func(args)
    except InputError as exc:
        print(f"fermionic: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (LevelError, chars.LevelRestrictionError) as exc:
        print(f"fermionic: error: {exc}", file=sys.stderr)
        return EXIT_LEVEL
    except ValueError as exc:
        print(f"fermionic: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

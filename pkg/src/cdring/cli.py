"""Command-line front end.

Usage::

    cdring --ring d=-5,f=1 check-cdr --norm-bound 10 --structured
    cdring --ring d=-3,f=2 divide --I "2" --J "2, w"
    cdring --ring d=-5,f=1 factor --I "6"

Ideals are written as generator lists in ``w`` (standing for theta), e.g.
``2, 1+w``; a rendered HNF such as ``[2, 1+w]`` parses back to itself.

Exit status: 0 success, 1 domain error (and ``not_cdr`` verdicts), 2 usage
or parse error.
"""

import argparse
import json
import re
import sys

from . import cdr_check, factor, oracle
from .errors import CdrError, ParseError, ZeroIdeal
from .ideal import (
    Ideal,
    contains,
    divide_exact,
    enumerate_up_to,
    from_generators,
    mul,
)
from .quadratic import Element, RingSpec, parse_ring_spec

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(w)|([-+*,\[\]]))")


def _tokenize(s: str):
    pos = 0
    toks = []
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(s, pos)
        if m is None:
            raise ParseError(f"unexpected character {s[pos]!r}", s, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("w", None, start))
        else:
            toks.append((m.group(3), None, start))
        pos = m.end()
    toks.append(("end", None, len(s)))
    return toks


class _LiteralParser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.i += 1
        return tok

    def fail(self, msg):
        kind, _, pos = self.toks[self.i]
        got = "end of input" if kind == "end" else repr(self.text[pos])
        raise ParseError(f"{msg}, got {got}", self.text, pos)

    def literal(self):
        bracketed = self.peek() == "["
        if bracketed:
            self.take()
        gens = [self.gen()]
        while self.peek() == ",":
            self.take()
            gens.append(self.gen())
        if bracketed:
            self.take("]")
        self.take("end")
        return gens

    def gen(self):
        x = y = 0
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            dx, dy = self.term()
            x += sign * dx
            y += sign * dy
            if self.peek() in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
            else:
                return Element(x, y)

    def term(self):
        kind = self.peek()
        if kind == "int":
            k = self.take()[1]
            if self.peek() == "*":
                self.take()
                self.take("w")
                return 0, k
            if self.peek() == "w":
                self.take()
                return 0, k
            return k, 0
        if kind == "w":
            self.take()
            if self.peek() == "*":
                self.take()
                return 0, self.take("int")[1]
            return 0, 1
        self.fail("expected an integer or 'w'")


def parse_elements(s: str) -> list[Element]:
    return _LiteralParser(s).literal()


def parse_ideal_literal(R: RingSpec, s: str) -> Ideal:
    I = from_generators(R, parse_elements(s))
    if I is None:
        raise ZeroIdeal(f"{s!r} generates the zero ideal")
    return I


def render(I: Ideal) -> str:
    return str(I)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def build_parser():
    parser = _ArgumentParser(prog="cdring", description=__doc__.split("\n")[0])
    parser.add_argument("--ring", required=True, help="ring spec, e.g. d=-5,f=1")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name, *flags, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for flag in flags:
            if flag == "I":
                p.add_argument("--I", dest="I", required=True, help="ideal literal")
            elif flag == "Imany":
                p.add_argument("--I", dest="I", action="append", required=True,
                               help="ideal literal; repeat to give an explicit chain")
            elif flag == "J":
                p.add_argument("--J", dest="J", required=True, help="ideal literal")
            elif flag == "bound":
                p.add_argument("--norm-bound", type=int, default=None)
            elif flag == "steps":
                p.add_argument("--max-steps", type=int, default=None)
            elif flag == "cap":
                p.add_argument("--cap", type=int, default=None)
        return p

    add("ring-info", help="show theta's minimal polynomial and discriminant")
    add("hnf", "I", help="canonical HNF of an ideal")
    add("mul", "I", "J", help="ideal product I*J")
    add("contains", "I", "J", help="is I contained in J")
    add("divide", "I", "J", help="H with I = H*J, if any")
    add("factor", "I", "steps", help="divisor-chain prime factorization")
    add("chain", "Imany", "steps", help="divisor chain condition on a chain of ideals")
    add("check-cdr", "bound", help="bounded containment-division check")
    add("classify", "bound", help="compare CDR verdict with maximality")
    add("enumerate", "bound", help="list all ideals up to a norm bound")
    add("oracle-divide", "I", "J", "cap", help="brute-force witness search")
    return parser


def _triple(I):
    return list(I.triple)


def _chain_dict(chain):
    return {
        "start": _triple(chain.start),
        "steps": [{"prime": _triple(P), "quotient": _triple(Q)} for P, Q in chain.steps],
    }


def _chain_text(chain):
    lines = [f"  I0 = {chain.start}"]
    for k, (P, Q) in enumerate(chain.steps, 1):
        lines.append(f"  I{k} = {Q}    (I{k - 1} = I{k} * {P})")
    return lines


def _signed(k, var):
    if k == 0:
        return ""
    mag = str(abs(k)) if abs(k) != 1 or not var else ""
    sep = "*" if mag and var else ""
    return f" {'-' if k < 0 else '+'} {mag}{sep}{var}"


def _run(args, R: RingSpec, out: dict, text: list):
    """Dispatch one subcommand; fills ``out`` / ``text`` and returns the exit code."""
    cmd = args.command
    lit = lambda s: parse_ideal_literal(R, s)  # noqa: E731

    if cmd == "ring-info":
        poly = "x^2" + _signed(-R.T, "x") + _signed(R.Nc, "")
        out["result"] = {"maximal": R.is_maximal, "min_poly": poly}
        text.append(f"ring {R}: w is a root of {poly}, disc = {R.disc}")
        text.append("maximal order (Dedekind)" if R.is_maximal else f"non-maximal order, conductor {R.f}")
        return EXIT_OK

    if cmd in ("hnf", "factor"):
        I = lit(args.I)
        out["inputs"] = {"I": _triple(I)}
        if cmd == "hnf":
            out["result"] = _triple(I)
            text.append(f"{I}    norm {I.norm}")
            return EXIT_OK
        try:
            factors, chain = factor.factor_ideal(I, args.max_steps)
        except (factor.NotDivisible, factor.NoContainingPrime, factor.ChainExceeded) as e:
            if e.chain is not None:
                out["chain"] = _chain_dict(e.chain)
            raise
        rebuilt = factor.reconstruct(factors, R)
        out["result"] = {"factors": [_triple(P) for P in factors], "reconstructs": rebuilt == I}
        out["chain"] = _chain_dict(chain)
        text.append(f"{I} = " + (" * ".join(str(P) for P in factors) or "(1)"))
        text.append(f"{len(factors)} prime factor(s); product reconstructs input: {rebuilt == I}")
        text.extend(_chain_text(chain))
        return EXIT_OK

    if cmd == "chain":
        ideals = [lit(s) for s in args.I]
        out["inputs"] = {"I": [_triple(I) for I in ideals]}
        if len(ideals) == 1:
            _, chain = factor.factor_ideal(ideals[0], args.max_steps)
            out["chain"] = _chain_dict(chain)
            ideals = chain.ideals
        is_div, stat = factor.check_dicc_chain(ideals)
        out["result"] = {"is_divisor_chain": is_div, "stationary_at": stat,
                         "chain": [_triple(I) for I in ideals]}
        text.append(" <= ".join(str(I) for I in ideals))
        text.append(f"divisor chain: {is_div}")
        text.append(f"stationary at index {stat}" if stat is not None else "not (yet) stationary")
        return EXIT_OK

    if cmd in ("mul", "contains", "divide", "oracle-divide"):
        I, J = lit(args.I), lit(args.J)
        out["inputs"] = {"I": _triple(I), "J": _triple(J)}
        if cmd == "mul":
            P = mul(I, J)
            out["result"] = _triple(P)
            text.append(str(P))
            return EXIT_OK
        if cmd == "contains":
            inside = contains(J, I)
            out["result"] = inside
            text.append(f"{I} {'is' if inside else 'is not'} contained in {J}")
            return EXIT_OK
        if cmd == "divide":
            H = divide_exact(I, J)
        else:
            H = oracle.brute_divide(I, J, args.cap)
        if H is None:
            if contains(J, I):
                msg = (f"{J} contains {I} but does not divide it: "
                       "containment-division violation")
            else:
                msg = f"{J} does not divide {I} ({I} is not contained in {J})"
            raise factor.NotDivisible(msg, dividend=I, divisor=J)
        out["result"] = _triple(H)
        text.append(f"{I} = {H} * {J}")
        return EXIT_OK

    if cmd == "enumerate":
        bound = args.norm_bound or cdr_check.default_norm_bound(R)
        ideals = enumerate_up_to(R, bound)
        out["inputs"] = {"norm_bound": bound}
        out["result"] = [_triple(I) for I in ideals]
        for I in ideals:
            text.append(f"norm {I.norm:>4}  {I}")
        text.append(f"{len(ideals)} ideal(s) of norm <= {bound}")
        return EXIT_OK

    if cmd in ("check-cdr", "classify"):
        if cmd == "classify":
            cl = cdr_check.classify_ring(R, args.norm_bound)
            report = cl.report
        else:
            report = cdr_check.check_cdr(R, args.norm_bound)
        rd = report.as_dict()
        out["inputs"] = {"norm_bound": report.norm_bound}
        out["result"] = {k: rd[k] for k in
                         ("verdict", "universe_size", "pairs_checked", "dedekind_expected")}
        out["violations"] = rd["violations"]
        text.append(f"ring {R}: {report.universe_size} ideals of norm <= {report.norm_bound}, "
                    f"{report.pairs_checked} ordered pairs")
        text.append(f"verdict: {report.verdict} ({len(report.violations)} violation(s))")
        for I, J in report.violations[:10]:
            text.append(f"  {I} is contained in {J} but not divisible by it")
        if len(report.violations) > 10:
            text.append(f"  ... {len(report.violations) - 10} more")
        if cmd == "classify":
            out["result"].update(dedekind=cl.dedekind, consistent=cl.consistent)
            text.append(f"dedekind: {cl.dedekind}, consistent with verdict: {cl.consistent}")
            if cl.note:
                text.append(cl.note)
            return EXIT_OK if cl.consistent else EXIT_DOMAIN
        return EXIT_OK if report.verdict == cdr_check.CDR_UP_TO_BOUND else EXIT_DOMAIN

    raise _UsageError(f"unknown command {cmd}")  # pragma: no cover


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        print(str(e), file=stderr)
        return EXIT_USAGE
    structured = args.structured
    out: dict = {"command": args.command}
    text: list = []
    try:
        R = parse_ring_spec(args.ring)
        out["ring"] = R.as_dict()
        status = _run(args, R, out, text)
    except ParseError as e:
        out["error"] = {"code": e.code, "message": str(e)}
        status = EXIT_USAGE
    except CdrError as e:
        out["error"] = {"code": e.code, "message": str(e)}
        status = EXIT_DOMAIN
    except ValueError as e:
        out["error"] = {"code": "UsageError", "message": str(e)}
        status = EXIT_USAGE

    if structured:
        print(json.dumps(out, sort_keys=True), file=stdout)
    else:
        for line in text:
            print(line, file=stdout)
        if "error" in out:
            print(f"error [{out['error']['code']}]: {out['error']['message']}", file=stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

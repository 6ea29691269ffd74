"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 domain error, 3 resource bound,
4 internal inconsistency (e.g. a perfect-number hit at k >= 2).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from fractions import Fraction

from gaussabund import __version__, analytic
from gaussabund.divfunc import abundancy_result, are_friendly, sigma_k, sigma_k_bruteforce
from gaussabund.errors import CheckpointError, DomainError, InconsistencyError, ResourceError
from gaussabund.gfactor import factor
from gaussabund.gint import parse_gaussian
from gaussabund.search import SearchTask, run_search
from gaussabund.solitary import greening_check
from gaussabund.verify import SUITES, run_suite

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3
EXIT_INCONSISTENT = 4

STATE_DIR_ENV = "GAUSSABUND_STATE_DIR"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _gaussian(text):
    try:
        return parse_gaussian(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _real(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a real number: %r" % text)


def _emit(args, command, inputs, result, text, exact=True, error_bound=None):
    if args.json:
        env = {"command": command, "inputs": inputs, "result": result, "exact": exact}
        if not exact:
            env["error_bound"] = error_bound
        print(json.dumps(env, sort_keys=True))
    else:
        print(text)


def cmd_factor(args):
    f = factor(args.eta)
    _emit(args, "factor", {"eta": str(args.eta)}, f.to_json(), "%s = %s" % (args.eta, f))


def cmd_sigma(args):
    fn = sigma_k_bruteforce if args.bruteforce else sigma_k
    s = fn(args.eta, args.k)
    _emit(
        args,
        "sigma",
        {"eta": str(args.eta), "k": args.k, "bruteforce": args.bruteforce},
        str(s),
        "sigma_%d(%s) = %s" % (args.k, args.eta, s),
    )


def cmd_abundancy(args):
    r = abundancy_result(args.eta, args.k)
    n = r.index.norm()
    _emit(
        args,
        "abundancy",
        {"eta": str(args.eta), "k": args.k},
        r.to_json(),
        "I_%d(%s) = %s\n||I_%d|| = %s" % (args.k, args.eta, r.index, args.k, n),
    )


def cmd_solitary(args):
    cert = greening_check(args.eta, args.k)
    if cert.certified:
        text = "%s is %d-powerful solitary (gcd = %s)" % (args.eta, args.k, cert.gcd_value)
    else:
        text = "not certified: gcd(eta^k, sigma_k) = %s (criterion inconclusive)" % cert.gcd_value
    _emit(args, "solitary", {"eta": str(args.eta), "k": args.k}, cert.to_json(), text)


def cmd_friendly(args):
    r = are_friendly(args.eta1, args.eta2, args.k)
    result = {
        "friendly": r.friendly,
        "associates": r.associates,
        "index1": r.index1.to_json(),
        "index2": r.index2.to_json(),
    }
    verdict = "friendly" if r.friendly else "not friendly"
    if r.friendly and r.associates:
        verdict += " (associates)"
    text = "%s\nI_%d(%s) = %s\nI_%d(%s) = %s" % (
        verdict, args.k, args.eta1, r.index1, args.k, args.eta2, r.index2,
    )
    _emit(args, "friendly", {"eta1": str(args.eta1), "eta2": str(args.eta2), "k": args.k}, result, text)


def _zeta_like(args, name, fn):
    v = fn(args.s, args.precision)
    _emit(
        args,
        name,
        {"s": str(args.s), "precision": args.precision},
        v.to_json(args.precision),
        "%s(%s) = %s" % (name, args.s, v),
        exact=False,
        error_bound=v.to_json()["abs_error_bound"],
    )


def cmd_zeta(args):
    _zeta_like(args, "zeta", analytic.zeta)


def cmd_beta(args):
    _zeta_like(args, "beta", analytic.beta)


def cmd_zeta_qi(args):
    if not args.euler_product:
        return _zeta_like(args, "zeta-qi", analytic.dedekind_zeta_qi)
    import mpmath

    v = analytic.dedekind_zeta_euler_product(args.s, args.norm_limit, args.precision)
    _emit(
        args,
        "zeta-qi",
        {"s": str(args.s), "euler_product": True, "norm_limit": args.norm_limit},
        {"value": mpmath.nstr(v, args.precision)},
        "partial Euler product over norms <= %d: %s" % (args.norm_limit, mpmath.nstr(v, 30)),
        exact=False,
        error_bound=None,
    )


_KIND = {"tau-perfect": "tau_perfect", "norm-perfect": "norm_perfect", "friendly": "friendly"}


def cmd_search(args):
    task = SearchTask(
        _KIND[args.kind], args.k, args.norm_lo, args.norm_hi, tau=args.tau, t=args.t
    ).validate()
    state = args.state
    if state is None and os.environ.get(STATE_DIR_ENV):
        state = os.path.join(os.environ[STATE_DIR_ENV], "%s.jsonl" % task.fingerprint())
    result = run_search(task, state, workers=args.workers)
    for rec in result.records:
        sys.stdout.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
    summary = result.summary()
    if args.json:
        sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
    else:
        line = "scanned %d canonical values, %d records" % (summary["scanned"], summary["records"])
        if "max_norm" in summary:
            line += ", max ||I_%d|| = %s (%.6f) at %s" % (
                args.k, summary["max_norm"], summary["max_norm_float"], summary["argmax"],
            )
        sys.stderr.write(line + "\n")
    if result.inconsistent:
        raise InconsistencyError("%d perfect hits at k=%d" % (len(result.records), args.k))


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        rep = run_suite(name)
        failed |= not rep.ok
        if args.json:
            print(json.dumps(rep.to_json(), sort_keys=True))
        else:
            print(rep.line())
            for f in rep.failures:
                print("    e.g. %s" % (f,))
    return EXIT_INCONSISTENT if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    precision = argparse.ArgumentParser(add_help=False)
    precision.add_argument("--precision", type=int, default=analytic.DEFAULT_PRECISION,
                           help="target decimal digits (default %(default)s)")

    p = _Parser(prog="gaussabund", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("factor", parents=[common], help="factor a Gaussian integer")
    s.add_argument("eta", type=_gaussian)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("sigma", parents=[common], help="divisor-power sum sigma_k")
    s.add_argument("eta", type=_gaussian)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--bruteforce", action="store_true", help="sum over enumerated divisors")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("abundancy", parents=[common], help="abundancy index I_k")
    s.add_argument("eta", type=_gaussian)
    s.add_argument("--k", type=int, default=1)
    s.set_defaults(func=cmd_abundancy)

    s = sub.add_parser("solitary", parents=[common], help="Greening's criterion")
    s.add_argument("eta", type=_gaussian)
    s.add_argument("--k", type=int, default=1)
    s.set_defaults(func=cmd_solitary)

    s = sub.add_parser("friendly", parents=[common], help="compare two abundancy indices")
    s.add_argument("eta1", type=_gaussian)
    s.add_argument("eta2", type=_gaussian)
    s.add_argument("--k", type=int, default=1)
    s.set_defaults(func=cmd_friendly)

    for name, func, helptext in (
        ("zeta", cmd_zeta, "Riemann zeta"),
        ("beta", cmd_beta, "Dirichlet beta"),
        ("zeta-qi", cmd_zeta_qi, "Dedekind zeta of Q(i)"),
    ):
        s = sub.add_parser(name, parents=[common, precision], help=helptext)
        s.add_argument("s", type=_real)
        if name == "zeta-qi":
            s.add_argument("--euler-product", action="store_true")
            s.add_argument("--norm-limit", type=int, default=10**4)
        s.set_defaults(func=func)

    s = sub.add_parser("search", parents=[common], help="exhaustive search over a norm range")
    s.add_argument("kind", choices=sorted(_KIND))
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--norm-lo", type=int, default=1)
    s.add_argument("--norm-hi", type=int, required=True)
    group = s.add_mutually_exclusive_group()
    group.add_argument("--tau", type=_gaussian)
    group.add_argument("--t", type=int)
    s.add_argument("--state", help="JSON-lines checkpoint file (default: $%s/<fingerprint>.jsonl)" % STATE_DIR_ENV)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.set_defaults(func=cmd_verify)
    return p


_NEGATIVE_LITERAL = re.compile(r"-\s*\d*\s*i?(\s*[+-]\s*\d*\s*i)?")


def _protect_negative_literals(argv):
    # argparse reads "-1+i" or "-i" as an option; a leading space hides it
    return [" " + a if _NEGATIVE_LITERAL.fullmatch(a) and a not in ("-v",) else a for a in argv]


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_protect_negative_literals(argv))
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code or 0
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args) or 0
    except (DomainError, CheckpointError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except InconsistencyError as exc:
        print("inconsistency: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())

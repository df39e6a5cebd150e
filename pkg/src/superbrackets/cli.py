"""
Command line front end.

    superbrackets check-master FILE
    superbrackets bracket FILE --kind {poisson,ks,schouten} --args EXPR[,EXPR...]
    superbrackets jacobiator FILE --kind K --order N [--trials T] [--seed S]
    superbrackets verify FILE [--seed S]
    superbrackets symbol FILE

Exit codes: 0 pass, 1 usage or parse error, 2 identity failure,
3 invalid structure (odd P, or [[P,P]] != 0).
"""

import argparse
import hashlib
import json
import sys

from . import __version__
from .grading import GradedAlgebraError, MixedCoordinateSystems, Parity
from .phase import (
    HigherPoissonStructure, InvalidStructure, WrongBundle, schouten,
    hamiltonian_vector_field, linear_hamiltonian, r_pullback,
)
from .operators import (
    check_lie_morphism, check_naturality, check_nilpotent,
    check_symbol_squares_to_zero, structure_symbol,
)
from .brackets import (
    Hierarchy, NotABaseFunction, ArityMismatch, bracket, jacobiator,
    check_d_derivation_rule, check_lemma_poisson, check_prop3,
    check_theorem_symbol_form, check_strict_leibniz, check_kp_hamiltonian,
)
from .dsl import DSLError, parse, parse_expr, format_poly
from .report import BracketReport
from . import sampling

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 means identity failure here
    def error(self, message):
        raise UsageError(message)


def _flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit a machine-readable report document")
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                   help="print nothing but errors")
    return p


def build_parser():
    flags = _flags()
    ap = _Parser(prog="superbrackets", parents=[flags],
                 description="Bracket hierarchies of higher Poisson structures.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check-master", parents=[flags], help="check [[P,P]] = 0")
    p.add_argument("file")

    p = sub.add_parser("bracket", parents=[flags], help="evaluate one bracket")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[h.value for h in Hierarchy])
    p.add_argument("--args", default="", help="comma separated expressions")

    p = sub.add_parser("jacobiator", parents=[flags], help="randomized Jacobiator suite")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[h.value for h in Hierarchy])
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", parents=[flags], help="full identity suite")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("symbol", parents=[flags], help="total symbol and Hamiltonian")
    p.add_argument("file")
    return ap


# -- loading -----------------------------------------------------------------

def load(path):
    """Read and parse a session file; returns (session, sha256 hex)."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror))
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError("%s is not UTF-8" % path)
    session = parse(text)
    if session.structure_poly is None:
        raise UsageError("%s: no binding named P" % path)
    return session, hashlib.sha256(raw).hexdigest()


def structure_of(session, check=True):
    M = session.manifold
    P = session.structure_poly
    try:
        return HigherPoissonStructure(P, M, check=check)
    except MixedCoordinateSystems as e:
        raise InvalidStructure("structure must be a multivector field: %s" % e)


def split_args(text):
    """Split on commas at parenthesis depth zero."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip() or out:
        out.append(cur)
    return out


# -- commands ----------------------------------------------------------------

def cmd_check_master(session):
    S = structure_of(session, check=False)
    P = S.P
    if not P.is_homogeneous() or P.parity != Parity.EVEN:
        raise InvalidStructure("structure must be even: %s" % P)
    PP = schouten(P, P, S.manifold)
    if PP:
        raise InvalidStructure("master equation fails: [[P,P]] = %s" % PP)
    return [BracketReport("master_equation", [P], PP)], None


def cmd_bracket(session, kind, argtext):
    S = structure_of(session)
    args = [parse_expr(a, session) for a in split_args(argtext)]
    value = bracket(S, kind, args)
    return [], value


def random_args(r, S, kind, n):
    M = S.manifold
    if Hierarchy(kind) is Hierarchy.HIGHER_POISSON:
        return [sampling.random_function(r, M) for _ in range(n)]
    return [sampling.random_form(r, M) for _ in range(n)]


def cmd_jacobiator(session, kind, order, trials, seed):
    S = structure_of(session)
    if order < 0 or trials < 0:
        raise UsageError("order and trials must be non-negative")
    r = sampling.rng(seed)
    reports = []
    for t in range(trials):
        rep = jacobiator(S, kind, random_args(r, S, kind, order))
        rep.identity_name += "#%03d" % t
        rep.seed = seed
        reports.append(rep)
    return reports, None


def verify_reports(S, seed):
    """Every identity of the suite on P and on seeded random arguments."""
    M = S.manifold
    P = S.P
    r = sampling.rng(seed)
    deg = S.degree
    reps = []

    def add(rep, tag=None):
        if tag is not None:
            rep.identity_name += "#%s" % tag
        rep.seed = seed
        reps.append(rep)

    add(BracketReport("master_equation", [P], schouten(P, P, M)))
    add(check_nilpotent(S))
    add(check_symbol_squares_to_zero(S))
    add(check_lie_morphism(P, P, M))
    add(check_naturality(P, M))
    for i in range(3):
        add(check_naturality(sampling.random_multivector(r, M), M), "%02d" % i)
    for n in range(4):
        for i in range(2):
            forms = [sampling.random_form(r, M) for _ in range(n)]
            add(check_d_derivation_rule(S, forms), "%d.%d" % (n, i))
    for n in range(1, deg + 2):
        for i in range(2):
            fs = [sampling.random_function(r, M) for _ in range(n)]
            add(check_lemma_poisson(S, fs), "%d.%d" % (n, i))
    for n in range(0, deg + 2):
        for i in range(2):
            fs = [sampling.random_function(r, M) for _ in range(n)]
            add(check_prop3(S, fs), "%d.%d" % (n, i))
    for n in range(1, deg + 2):
        for i in range(2):
            forms = [sampling.random_form(r, M) for _ in range(n)]
            add(check_theorem_symbol_form(S, forms), "%d.%d" % (n, i))
    for n in range(1, deg + 1):
        for i in range(2):
            forms = [sampling.random_form(r, M) for _ in range(n)]
            add(check_strict_leibniz(S, forms, sampling.random_form(r, M)),
                "%d.%d" % (n, i))
    add(check_kp_hamiltonian(S))
    reps.sort(key=lambda rep: rep.identity_name)
    return reps


def cmd_verify(session, seed):
    return verify_reports(structure_of(session), seed), None


def cmd_symbol(session):
    S = structure_of(session)
    M = S.manifold
    K = structure_symbol(S)
    RK = r_pullback(K, M)
    H = linear_hamiltonian(hamiltonian_vector_field(S))
    rep = BracketReport("kp_hamiltonian", [S.P], RK - H)
    return [rep], {"K_P": K, "R*K_P": RK, "H_Q": H}


# -- output ------------------------------------------------------------------

def document(reports, digest, seed, result=None):
    doc = {
        "version": __version__,
        "input_sha256": digest,
        "seed": seed,
        "checks": [rep.to_dict() for rep in reports],
        "passed": all(rep.passed for rep in reports),
    }
    if result is not None:
        if isinstance(result, dict):
            doc["result"] = {k: format_poly(v) for k, v in result.items()}
        else:
            doc["result"] = format_poly(result)
    return doc


def render_text(reports, result, out):
    if result is not None:
        if isinstance(result, dict):
            for k, v in result.items():
                print("%s = %s" % (k, format_poly(v)), file=out)
        else:
            print(format_poly(result), file=out)
    for rep in reports:
        print(rep.line(), file=out)
        if not rep.passed:
            for d in rep.details:
                if not d.passed:
                    print("      %s" % d.line(), file=out)
            print("      residual: %s" % rep.residual, file=out)
    if reports:
        n = sum(rep.passed for rep in reports)
        print("%d/%d checks passed" % (n, len(reports)), file=out)


def run_command(argv, out=None, err=None):
    """Run one CLI invocation; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as e:
        print("usage error: %s" % e, file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return EXIT_OK if not e.code else EXIT_USAGE
    as_json = getattr(ns, "json", False)
    quiet = getattr(ns, "quiet", False)
    seed = getattr(ns, "seed", None)
    try:
        session, digest = load(ns.file)
        if ns.command == "check-master":
            reports, result = cmd_check_master(session)
        elif ns.command == "bracket":
            reports, result = cmd_bracket(session, ns.kind, ns.args)
        elif ns.command == "jacobiator":
            reports, result = cmd_jacobiator(session, ns.kind, ns.order,
                                             ns.trials, ns.seed)
        elif ns.command == "verify":
            reports, result = cmd_verify(session, ns.seed)
        else:
            reports, result = cmd_symbol(session)
    except (UsageError, DSLError, NotABaseFunction, ArityMismatch) as e:
        print("error: %s" % e, file=err)
        return EXIT_USAGE
    except InvalidStructure as e:
        print("invalid structure: %s" % e, file=err)
        return EXIT_INVALID
    except (WrongBundle, GradedAlgebraError) as e:
        print("error: %s" % e, file=err)
        return EXIT_USAGE

    passed = all(rep.passed for rep in reports)
    if as_json:
        doc = document(reports, digest, seed, result)
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    elif not quiet:
        render_text(reports, result, out)
    return EXIT_OK if passed else EXIT_FAIL


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()

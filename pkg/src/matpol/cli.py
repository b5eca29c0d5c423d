"""Command-line front end: build, inspect, and verify from JSON files.

Verbs: matroid, poly, flag, feynman, jets, fsing, verify.  Every command
prints a JSON report on standard output and exits with
    0  the requested check passed (or the object was built),
    1  a checked identity or predicate came back false,
    2  malformed input or arguments,
    3  a resource limit was hit.
Rationals appear in JSON as strings "a/b".  `verify all --fixtures dir/`
runs every recognized fixture file and prints a pass/fail table.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .constructions import (
    SingletonData,
    configuration_poly,
    handle_split,
    is_matroidal,
    maximal_rank_poly,
    msp_build,
    singular_identity_check,
    tutte_identities,
    tutte_poly,
)
from .errors import InputError, PreconditionError, ResourceError, StructureError
from .feynman import (
    diagram_from_json,
    diagram_integrand,
    euler_identity_check,
    feynman_handle_check,
    kinematics_check,
    support_quotient_check,
    symanzik_F,
    symanzik_U,
)
from .flags import flag_from_json, flag_handle_split, flag_poly
from .fsing import fpure_check, frobenius_membership, split_witness, strong_freg_certificate
from .jets import (
    count_points,
    dimension_probe,
    gamma_restriction_check,
    gamma_restriction_check_flag,
    jet_generators,
    product_cover_check,
)
from .matroid import Matroid, mask_to_edges, matroid_from_json, matroid_to_json
from .polyring import FIELD_Q, poly_from_json, poly_to_json, reduce_mod


# -- small I/O helpers ---------------------------------------------------------

def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def _emit(report, out=None):
    text = json.dumps(report, indent=2, default=_json_default)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    print(text)


def _field_arg(s):
    if s is None or s == "Q":
        return FIELD_Q
    return int(s)


def _budget_arg(s):
    return None if s is None else int(float(s))


def _handle_arg(s):
    try:
        return tuple(int(t) for t in str(s).split(","))
    except ValueError:
        raise InputError(f"bad handle spec {s!r}; expected comma-separated edge indices")


def _coeffs_arg(spec):
    """--coeffs is either the keyword 'ones' or a path to a JSON object
    mapping comma-separated basis indices to rationals."""
    if spec is None or spec == "ones":
        return None
    obj = _load(spec)
    out = {}
    for key, val in obj.items():
        basis = tuple(int(t) for t in key.split(","))
        out[basis] = Fraction(str(val))
    return out


def _sigma_arg(spec):
    return SingletonData.standard() if spec is None else SingletonData.from_json(_load(spec))


# -- matroid verb ----------------------------------------------------------------

def _cmd_matroid_info(args):
    M = matroid_from_json(_load(args.file))
    return 0, {
        "rank": M.full_rank(),
        "connected": M.is_connected(),
        "circuits": [list(mask_to_edges(c)) for c in M.circuits()],
    }


def _cmd_matroid_dual(args):
    M = matroid_from_json(_load(args.file))
    return 0, matroid_to_json(M.dual())


def _cmd_matroid_handles(args):
    M = matroid_from_json(_load(args.file))
    filt = M.handle_decomposition()
    top = filt[-1] if len(filt) == 1 else sorted(set(filt[-1]) - set(filt[-2]))
    return 0, {"filtration": [list(step) for step in filt], "top_handle": list(top)}


# -- poly verb ---------------------------------------------------------------------

def _cmd_poly_info(args):
    f = poly_from_json(_load(args.poly))
    js = poly_to_json(f)
    return 0, {
        "field": js["field"],
        "vars": js["vars"],
        "terms": len(f.terms),
        "degree": f.total_degree(),
    }


_POLY_KINDS = ("basis", "maxrank", "tutte", "config")


def _cmd_poly_build(args):
    field = _field_arg(args.field)
    if args.kind == "config":
        if not args.matrix:
            raise InputError("kind 'config' needs --matrix")
        rows = [[Fraction(str(v)) for v in row] for row in _load(args.matrix)]
        f = configuration_poly(rows, field=field)
    else:
        if not args.matroid:
            raise InputError(f"kind {args.kind!r} needs --matroid")
        M = matroid_from_json(_load(args.matroid))
        if args.kind == "basis":
            f = msp_build(M, _coeffs_arg(args.coeffs), field)
        elif args.kind == "maxrank":
            f = maximal_rank_poly(M, field)
        else:
            f = tutte_poly(M, field)
    return 0, poly_to_json(f)


# -- flag verb ---------------------------------------------------------------------

def _cmd_flag_info(args):
    F = flag_from_json(_load(args.flag))
    return 0, {
        "levels": F.k,
        "ranks": [M.full_rank() for M in F.chain],
        "labels": list(F.labels),
    }


def _cmd_flag_poly(args):
    F = flag_from_json(_load(args.flag))
    return 0, poly_to_json(flag_poly(F, field=_field_arg(args.field)))


# -- feynman verb ------------------------------------------------------------------

def _cmd_feynman_symanzik(args):
    D = diagram_from_json(_load(args.graph))
    field = _field_arg(args.field)
    U = symanzik_U(D.num_vertices, D.edges, field)
    F = symanzik_F(D, field)
    return 0, {"U": poly_to_json(U), "F": poly_to_json(F)}


def _cmd_feynman_kinematics(args):
    D = diagram_from_json(_load(args.graph))
    report = kinematics_check(D)
    return (0 if report["pass"] else 1), report


def _cmd_feynman_integrand(args):
    D = diagram_from_json(_load(args.graph))
    witness = diagram_integrand(D)
    if witness is None:
        return 1, {"integrand": None, "kinematics": kinematics_check(D)}
    return 0, {
        "zeta": poly_to_json(witness.zeta_N),
        "delta": poly_to_json(witness.delta),
        "xi": None if witness.xi_M is None else poly_to_json(witness.xi_M),
        "N": matroid_to_json(witness.N),
        "M": None if witness.M is None else matroid_to_json(witness.M),
    }


# -- jets verb ---------------------------------------------------------------------

def _cmd_jets_count(args):
    f = poly_from_json(_load(args.poly))
    system = jet_generators(f, args.m)
    n = count_points(system, p=args.p, budget=_budget_arg(args.budget))
    return 0, {"count": n}


def _cmd_jets_probe(args):
    f = poly_from_json(_load(args.poly))
    primes = tuple(int(t) for t in args.primes.split(","))
    report = dimension_probe(f, args.m, primes, budget=_budget_arg(args.budget),
                             bound=args.bound)
    return (0 if report["consistent"] else 1), report


def _cmd_jets_cover(args):
    f = poly_from_json(_load(args.poly))
    g = poly_from_json(_load(args.other))
    ok = product_cover_check(f, g, args.m, args.p, budget=_budget_arg(args.budget))
    return (0 if ok else 1), {"pass": ok}


# -- fsing verb --------------------------------------------------------------------

def _cmd_fsing_certify(args):
    M = matroid_from_json(_load(args.matroid))
    cert = strong_freg_certificate(M, _coeffs_arg(args.coeffs), args.p)
    return 0, cert.to_json()


def _cmd_fsing_fpure(args):
    f = poly_from_json(_load(args.poly))
    report = fpure_check(f)
    return (0 if report["fpure"] else 1), report


def _cmd_fsing_split(args):
    f = poly_from_json(_load(args.poly))
    c = None if args.multiplier is None else poly_from_json(_load(args.multiplier))
    report = split_witness(f, c)
    return (0 if report["splits"] else 1), report


def _cmd_fsing_membership(args):
    f = poly_from_json(_load(args.poly))
    member = frobenius_membership(f, args.e)
    return (0 if member else 1), {"member": member}


# -- verify verb -------------------------------------------------------------------

def _cmd_verify_handle(args):
    zeta = poly_from_json(_load(args.poly))
    M = matroid_from_json(_load(args.matroid))
    sigma = _sigma_arg(args.sigma)
    H = _handle_arg(args.handle)
    split = handle_split(zeta, M, sigma, H)     # raises StructureError on failure
    singular_ok = singular_identity_check(zeta, M, sigma, H)
    passed = bool(singular_ok)
    return (0 if passed else 1), {
        "pass": passed,
        "handle": list(split.handle),
        "labels": list(split.labels),
        "singular_ok": singular_ok,
    }


def _cmd_verify_matroidal(args):
    zeta = poly_from_json(_load(args.poly))
    M = matroid_from_json(_load(args.matroid))
    ok = is_matroidal(zeta, M, _sigma_arg(args.sigma))
    return (0 if ok else 1), {"pass": ok}


def _cmd_verify_tutte(args):
    M = matroid_from_json(_load(args.matroid))
    rows = []
    for e in range(M.n):
        r = tutte_identities(M, e)
        rows.append({"edge": e, "case": r["case"], "pass": r["pass"]})
    ok = all(r["pass"] for r in rows)
    return (0 if ok else 1), {"pass": ok, "edges": rows}


def _cmd_verify_flag_handle(args):
    zeta = poly_from_json(_load(args.poly))
    F = flag_from_json(_load(args.flag))
    rep = flag_handle_split(zeta, F, _handle_arg(args.handle))
    return (0 if rep.ok else 1), {
        "pass": rep.ok,
        "reassembly_ok": rep.reassembly_ok,
        "singular_per_edge_ok": rep.singular_per_edge_ok,
        "singular_combined_ok": rep.singular_combined_ok,
        "coloop_level": rep.r,
    }


def _cmd_verify_feynman_handle(args):
    D = diagram_from_json(_load(args.graph))
    witness = diagram_integrand(D)
    if witness is None:
        raise InputError("diagram admits no integrand (kinematics gate or rank)")
    ok = feynman_handle_check(witness, _handle_arg(args.handle))
    return (0 if ok else 1), {"pass": ok}


def _cmd_verify_euler(args):
    D = diagram_from_json(_load(args.graph))
    witness = diagram_integrand(D)
    if witness is None:
        raise InputError("diagram admits no integrand (kinematics gate or rank)")
    ok = euler_identity_check(witness)
    return (0 if ok else 1), {"pass": ok}


def _cmd_verify_quotient(args):
    D = diagram_from_json(_load(args.graph))
    report = support_quotient_check(D)
    return (0 if report["pass"] else 1), report


def _cmd_verify_gamma(args):
    zeta = poly_from_json(_load(args.poly))
    M = matroid_from_json(_load(args.matroid))
    ok = gamma_restriction_check(zeta, M, _sigma_arg(args.sigma), args.edge, args.m)
    return (0 if ok else 1), {"pass": ok}


# -- the fixture runner --------------------------------------------------------

def _fixture_matroid(obj):
    M = matroid_from_json(obj)
    yield "dual-involution", M.dual().dual() == M
    yield "tutte-identities", all(tutte_identities(M, e)["pass"] for e in range(M.n))
    psi = msp_build(M)
    yield "support-poly-matroidal", is_matroidal(psi, M)
    filt = M.handle_decomposition()
    if len(filt) >= 2:
        H = tuple(sorted(set(filt[-1]) - set(filt[-2])))
        split = handle_split(psi, M, None, H)
        yield "handle-reassembly", bool(split)
        yield "handle-singular-identity", singular_identity_check(psi, M, None, H)
    if M.is_connected() and M.full_rank() >= 1:
        yield "fpure-mod-2", fpure_check(reduce_mod(psi, 2))["fpure"]


def _flag_singleton_handle(F):
    bottom, top = F.bottom(), F.top()
    for e in range(bottom.n):
        if (bottom.is_handle((e,)) and bottom.is_independent((e,))
                and top.full_rank() - top.rank((e,)) >= 1):
            return e
    return None


def _fixture_flag(obj):
    F = flag_from_json(obj)
    yield "chain-valid", True            # constructor validates every quotient link
    zeta = flag_poly(F)
    e = _flag_singleton_handle(F)
    if e is not None:
        yield "handle-reassembly", flag_handle_split(zeta, F, (e,)).ok
        bottom = F.bottom()
        if not bottom.is_loop(e) and not bottom.is_coloop(e):
            yield "jet-restriction", gamma_restriction_check_flag(zeta, F, e, 1)


def _fixture_graph(obj):
    D = diagram_from_json(obj)
    symanzik_U(D.num_vertices, D.edges)   # internal dual-support crosscheck
    symanzik_F(D)                         # internal two-sided sum crosscheck
    yield "symanzik-structure", True
    report = kinematics_check(D)
    yield "kinematics-gate", report["pass"]
    witness = diagram_integrand(D)
    if witness is not None:
        yield "euler-identity", euler_identity_check(witness)
        if len(D.edges) >= 2:
            yield "support-quotient", support_quotient_check(D)["pass"]


def _fixture_jets(obj):
    f = poly_from_json(obj["poly"])
    system = jet_generators(f, int(obj["m"]))
    n = count_points(system, p=int(obj["p"]))
    yield "jet-count", n == int(obj["count"])


def _fixture_fsing(obj):
    M = matroid_from_json(obj["matroid"])
    coeffs = None
    if "coeffs" in obj and obj["coeffs"] is not None:
        coeffs = {tuple(int(t) for t in key.split(",")): Fraction(str(val))
                  for key, val in obj["coeffs"].items()}
    cert = strong_freg_certificate(M, coeffs, int(obj["p"]))
    yield "freg-trace-terminates", cert.trace[-1]["kind"] == "base-case"
    yield "freg-witnesses-predicted", all(
        w["predicted_present"] for w in cert.witnesses.values())


_FIXTURE_RUNNERS = (
    (".matroid.json", _fixture_matroid),
    (".flag.json", _fixture_flag),
    (".graph.json", _fixture_graph),
    (".jets.json", _fixture_jets),
    (".fsing.json", _fixture_fsing),
)


def _cmd_verify_all(args):
    root = Path(args.fixtures)
    if not root.is_dir():
        raise InputError(f"fixture directory not found: {root}")
    results = []
    for path in sorted(root.iterdir()):
        runner = next((fn for suffix, fn in _FIXTURE_RUNNERS
                       if path.name.endswith(suffix)), None)
        if runner is None:
            continue
        try:
            for check, ok in runner(_load(path)):
                results.append({"fixture": path.name, "check": check, "pass": bool(ok)})
        except Exception as exc:                          # noqa: BLE001
            results.append({"fixture": path.name, "check": "load",
                            "pass": False, "error": str(exc)})
    if not results:
        raise InputError(f"no fixture files recognized under {root}")
    failed = sum(1 for r in results if not r["pass"])
    report = {
        "results": results,
        "passed": len(results) - failed,
        "failed": failed,
        "pass": failed == 0,
    }
    return (0 if failed == 0 else 1), report


# -- argument parsing ------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="matpol",
        description="Matroid polynomials: construction and identity verification.")
    verbs = top.add_subparsers(dest="verb", required=True)

    def sub(verbs_, name, fn, **kw):
        p = verbs_.add_parser(name, **kw)
        p.set_defaults(func=fn)
        return p

    # matroid
    matroid = verbs.add_parser("matroid", help="inspect matroids").add_subparsers(
        dest="subverb", required=True)
    p = sub(matroid, "info", _cmd_matroid_info, help="rank, connectivity, circuits")
    p.add_argument("file")
    p = sub(matroid, "dual", _cmd_matroid_dual, help="emit the dual matroid")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p = sub(matroid, "handles", _cmd_matroid_handles, help="handle decomposition")
    p.add_argument("file")

    # poly
    poly = verbs.add_parser("poly", help="build and inspect polynomials").add_subparsers(
        dest="subverb", required=True)
    p = sub(poly, "info", _cmd_poly_info, help="field, variables, size, degree")
    p.add_argument("--poly", required=True)
    p = sub(poly, "build", _cmd_poly_build, help="construct a polynomial from a matroid")
    p.add_argument("--kind", choices=_POLY_KINDS, required=True)
    p.add_argument("--matroid")
    p.add_argument("--matrix", help="JSON matrix of rationals (kind 'config')")
    p.add_argument("--coeffs", help="'ones' or a JSON file of basis coefficients")
    p.add_argument("--field", help="'Q' (default) or a prime")
    p.add_argument("-o", "--out")

    # flag
    flag = verbs.add_parser("flag", help="quotient chains").add_subparsers(
        dest="subverb", required=True)
    p = sub(flag, "info", _cmd_flag_info, help="levels and ranks of a chain")
    p.add_argument("--flag", required=True)
    p = sub(flag, "poly", _cmd_flag_poly, help="sum of per-level basis polynomials")
    p.add_argument("--flag", required=True)
    p.add_argument("--field")
    p.add_argument("-o", "--out")

    # feynman
    feyn = verbs.add_parser("feynman", help="graph polynomials").add_subparsers(
        dest="subverb", required=True)
    p = sub(feyn, "symanzik", _cmd_feynman_symanzik, help="first and second graph polynomials")
    p.add_argument("--graph", required=True)
    p.add_argument("--field")
    p = sub(feyn, "kinematics", _cmd_feynman_kinematics,
            help="momentum-subsum and collision gate")
    p.add_argument("--graph", required=True)
    p = sub(feyn, "integrand", _cmd_feynman_integrand,
            help="quotient-pair integrand witness, if the gate passes")
    p.add_argument("--graph", required=True)
    p.add_argument("-o", "--out")

    # jets
    jets = verbs.add_parser("jets", help="jet systems over finite fields").add_subparsers(
        dest="subverb", required=True)
    p = sub(jets, "count", _cmd_jets_count, help="count points of the order-m jet system")
    p.add_argument("--poly", required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--budget", help="point-enumeration ceiling, e.g. 1e9")
    p = sub(jets, "probe", _cmd_jets_probe, help="jet-count dimension probe across primes")
    p.add_argument("--poly", required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--primes", required=True, help="comma-separated, e.g. 3,5,7")
    p.add_argument("--budget")
    p.add_argument("--bound", type=int, default=8)
    p = sub(jets, "cover", _cmd_jets_cover, help="product jet cover check")
    p.add_argument("--poly", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--budget")

    # fsing
    fsing = verbs.add_parser("fsing", help="positive-characteristic certificates"
                             ).add_subparsers(dest="subverb", required=True)
    p = sub(fsing, "certify", _cmd_fsing_certify,
            help="strong F-regularity reduction trace")
    p.add_argument("--matroid", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--coeffs", default="ones")
    p.add_argument("-o", "--out")
    p = sub(fsing, "fpure", _cmd_fsing_fpure, help="Frobenius-splitting check")
    p.add_argument("--poly", required=True)
    p = sub(fsing, "split", _cmd_fsing_split, help="split witness with a multiplier")
    p.add_argument("--poly", required=True)
    p.add_argument("--multiplier", help="JSON polynomial file")
    p = sub(fsing, "membership", _cmd_fsing_membership,
            help="Frobenius-power ideal membership")
    p.add_argument("--poly", required=True)
    p.add_argument("-e", type=int, default=1)

    # verify
    verify = verbs.add_parser("verify", help="identity checks").add_subparsers(
        dest="subverb", required=True)
    p = sub(verify, "handle", _cmd_verify_handle, help="handle split reassembly")
    p.add_argument("--poly", required=True)
    p.add_argument("--matroid", required=True)
    p.add_argument("--handle", required=True)
    p.add_argument("--sigma")
    p = sub(verify, "matroidal", _cmd_verify_matroidal,
            help="recursive deletion-contraction axiom")
    p.add_argument("--poly", required=True)
    p.add_argument("--matroid", required=True)
    p.add_argument("--sigma")
    p = sub(verify, "tutte", _cmd_verify_tutte,
            help="deletion-contraction and rank-zero specialization")
    p.add_argument("--matroid", required=True)
    p = sub(verify, "flag-handle", _cmd_verify_flag_handle,
            help="flag handle split reassembly")
    p.add_argument("--poly", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--handle", required=True)
    p = sub(verify, "feynman-handle", _cmd_verify_feynman_handle,
            help="integrand handle split with mass correction")
    p.add_argument("--graph", required=True)
    p.add_argument("--handle", required=True)
    p = sub(verify, "euler", _cmd_verify_euler, help="degree-weighted Euler identity")
    p.add_argument("--graph", required=True)
    p = sub(verify, "quotient", _cmd_verify_quotient,
            help="second-polynomial support is a corank-one quotient")
    p.add_argument("--graph", required=True)
    p = sub(verify, "gamma", _cmd_verify_gamma,
            help="jet restriction along a singleton edge")
    p.add_argument("--poly", required=True)
    p.add_argument("--matroid", required=True)
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--sigma")
    p = sub(verify, "all", _cmd_verify_all, help="run every fixture in a directory")
    p.add_argument("--fixtures", required=True)

    return top


def run(argv):
    """Dispatch one command line; prints a JSON report and returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:                 # argparse error or --help
        return 0 if not exc.code else 2
    try:
        code, report = args.func(args)
    except (InputError, PreconditionError) as exc:
        _emit({"error": str(exc)})
        return 2
    except ResourceError as exc:
        report = {"error": str(exc)}
        if getattr(exc, "required", None) is not None:
            report["required"] = exc.required
        _emit(report)
        return 3
    except StructureError as exc:
        _emit({"error": str(exc)})
        return 1
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"})
        return 2
    _emit(report, getattr(args, "out", None))
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line front end.

Every command prints one JSON document (sorted keys) on standard output,
or DOT with ``--dot``.  Exit codes: 0 success, 1 input error, 2 usage
error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import antichains, basis, coloring, order
from .analysis import n0_bound, truncate, vertex_name
from .presentation import (
    InvalidPresentation,
    ParseError,
    dumps,
    from_document,
    make_n_sigma,
    make_odd_cycle,
    make_sigma_p,
    make_x1,
    parse_ptuple,
    to_document,
)

EXIT_INPUT, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class InputError(Exception):
    pass


class BudgetExhausted(Exception):
    def __init__(self, doc: dict):
        super().__init__("search budget exhausted")
        self.doc = doc


def _read(path: str) -> object:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


def _presentation(path: str):
    return from_document(_read(path))


def _element(path: str):
    """(basis element, None) for an element document, else (None, presentation)."""
    doc = _read(path)
    if isinstance(doc, dict) and "tag" in doc:
        try:
            return basis.BasisElement.from_dict(doc), None
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{path}: bad basis element: {exc}") from None
    return None, from_document(doc)


# ------------------------------------------------------------- commands


def cmd_construct(args):
    what, rest = args.what, args.params
    try:
        if what == "odd-cycle":
            S = make_odd_cycle(int(rest[0]))
        elif what == "x1":
            S = make_x1()
        elif what == "n-sigma":
            S = make_n_sigma(int(rest[0]))
        else:
            S = make_sigma_p(parse_ptuple(rest[0]))
    except IndexError:
        raise argparse.ArgumentError(None, f"construct {what}: missing parameter") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return to_document(S)


def _check_decision(S, d) -> bool:
    if d.colorable:
        return coloring.verify_witness(S, d.witness, n0_bound(S))
    ok = coloring.verify_obstruction(S, d.obstruction)
    if d.kappa == 2 and ok:
        ok = not coloring.constrained_truncation_colorable(S, n0_bound(S))
    return ok


def cmd_color(args):
    S = _presentation(args.input)
    try:
        kappa = coloring.parse_kappa(args.k)
    except ValueError as exc:
        raise argparse.ArgumentError(None, str(exc)) from None
    d = coloring.decide_continuous_coloring(S, kappa)
    doc = d.to_dict()
    if args.verify:
        doc["verified"] = _check_decision(S, d)
        if not doc["verified"]:
            raise InputError("verification failed")
    return doc


def cmd_basis(args):
    S = _presentation(args.input)
    try:
        e = basis.basis_below(S, args.mode, args.jobs)
    except (basis.ColorableInput, basis.NoFixedWitness) as exc:
        raise InputError(str(exc)) from None
    return e.to_dict()


def cmd_canon(args):
    try:
        p = parse_ptuple(args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    members = basis.enumerate_Fp(p, jobs=args.jobs)
    return {"p": str(p), "canonical": str(members[0]), "class": [str(q) for q in members]}


def _window_evidence(a, b, N, budget):
    fwd = order.truncation_refutes(a, b, N, budget)
    bwd = order.truncation_refutes(b, a, N, budget)
    doc = {"depth": N, "forward": fwd.to_dict(vertex_name), "backward": bwd.to_dict(vertex_name)}
    if "unknown" in (fwd.status, bwd.status):
        raise BudgetExhausted({"answer": "Unknown", **doc})
    return doc


def cmd_compare(args):
    ea, Sa = _element(args.a)
    eb, Sb = _element(args.b)
    if ea is None or eb is None:
        # arbitrary presentations: only finite-window evidence is available
        Sa = Sa if Sa is not None else basis.make(ea)
        Sb = Sb if Sb is not None else basis.make(eb)
        return {"windows": _window_evidence(Sa, Sb, args.depth or 6, args.budget)}
    v = order.compare_canonical(ea, eb)
    doc = {"a": ea.to_dict(), "b": eb.to_dict(), **v.to_dict()}
    if args.depth:
        doc["windows"] = _window_evidence(basis.make(ea), basis.make(eb), args.depth, args.budget)
    if args.verify:
        doc["verified"] = order.verify_verdict(ea, eb, v, args.depth or 6)
        if not doc["verified"]:
            raise InputError("verification failed")
    return doc


def cmd_truncate(args):
    S = _presentation(args.input)
    if args.N < 1:
        raise argparse.ArgumentError(None, "-N must be positive")
    G = truncate(S, args.N)
    if args.dot:
        return G.to_dot("truncation", vertex_name)
    return G.to_document(vertex_name)


def _subset(v) -> str:
    return "{" + ",".join(map(str, v)) + "}"


def cmd_kneser(args):
    try:
        G = antichains.kneser_graph(args.n, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = {"n": args.n, "k": args.k, "vertices": len(G), "edges": len(G.edges)}
    if args.chi:
        r = antichains.chromatic_number(G, len(G), args.budget)
        if r.status == "unknown":
            raise BudgetExhausted({"answer": "Unknown", **doc})
        doc["chi"] = r.value
    if args.hom:
        n2, k2 = args.hom
        H = antichains.kneser_graph(n2, k2)
        res = order.homomorphism_search(G, H, injective=False, budget=args.budget)
        hom = {"target": [n2, k2], "nodes": res.nodes}
        if res.status == order.UNKNOWN:
            raise BudgetExhausted({"answer": "Unknown", **doc, "hom": hom})
        hom["exists"] = res.status == order.FOUND
        if res.mapping is not None:
            hom["mapping"] = {_subset(u): _subset(w) for u, w in sorted(res.mapping.items())}
        doc["hom"] = hom
    if args.dot:
        return G.to_dot(f"K_{args.n}_{args.k}", _subset)
    return doc


def _seq(pre: str, period: str):
    try:
        return antichains.EventuallyPeriodicSeq(antichains.parse_list(pre), antichains.parse_list(period))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_xnu(args):
    nu = _seq(args.pre, args.period)
    try:
        s = antichains.make_x_nu(args.kappa, nu, args.depth)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return s.to_dot() if args.dot else s.to_dict()


def cmd_et(args):
    try:
        a = antichains.EventuallyPeriodicSeq.parse(args.nu1)
        b = antichains.EventuallyPeriodicSeq.parse(args.nu2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bound = args.bound or 4 * (len(a.period) + len(b.period)) + len(a.preperiod) + len(b.preperiod)
    return {
        "nu1": a.to_dict(),
        "nu2": b.to_dict(),
        "et_equivalent": antichains.et_equivalent(a, b),
        "forced": antichains.x_nu_forced_compare(args.kappa, a, b, bound).to_dict(),
    }


# --------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="contcolor", description="Continuous colorings of countable compact systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="emit a canonical presentation")
    c.add_argument("what", choices=["odd-cycle", "x1", "n-sigma", "sigma-p"])
    c.add_argument("params", nargs="*")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("color", help="decide a continuous coloring")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("-k", required=True, help="0|1|2|3|inf")
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("basis", help="canonical minimal system below the input")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--mode", choices=["homeo", "subshift"], required=True)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_basis)

    c = sub.add_parser("canon", help="least equivalent p")
    c.add_argument("--p", required=True)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_canon)

    c = sub.add_parser("compare", help="compare two systems")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--depth", type=int, default=None)
    c.add_argument("--budget", type=int, default=order.DEFAULT_BUDGET)
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("truncate", help="finite window of the graph")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("-N", type=int, required=True)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_truncate)

    c = sub.add_parser("kneser", help="Kneser graph facts")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--chi", action="store_true")
    c.add_argument("--hom", type=int, nargs=2, metavar=("N2", "K2"))
    c.add_argument("--budget", type=int, default=order.DEFAULT_BUDGET)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_kneser)

    c = sub.add_parser("xnu", help="finite sample of X_nu")
    c.add_argument("--kappa", type=int, required=True)
    c.add_argument("--pre", default="")
    c.add_argument("--period", required=True)
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_xnu)

    c = sub.add_parser("et", help="tail equivalence and forced comparison")
    c.add_argument("--nu1", required=True, help="PRE;PERIOD")
    c.add_argument("--nu2", required=True, help="PRE;PERIOD")
    c.add_argument("--kappa", type=int, default=2)
    c.add_argument("--bound", type=int, default=None)
    c.set_defaults(func=cmd_et)
    return p


def _emit(out):
    sys.stdout.write(out if isinstance(out, str) else dumps(out))


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _emit(args.func(args))
    except argparse.ArgumentError as exc:
        parser.error(exc.message)
    except BudgetExhausted as exc:
        _emit(exc.doc)
        print("contcolor: search budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ParseError, InvalidPresentation) as exc:
        print(f"contcolor: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


def main() -> None:
    sys.exit(run())

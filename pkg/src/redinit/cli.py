"""Command-line front end.

Exit status: 0 when the computation succeeded (and any check held), 1 when
a check failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import exterior as ext
from . import gin as ginmod
from .corpus import CorpusSpec, random_ideal, write_corpus
from .examples import reproduce_all, resolve
from .field import DEFAULT_CHARACTERISTIC
from .grobner import buchberger, initial_ideal, initial_ideal_weight
from .monomial_ideals import (MonomialIdeal, hilbert_function, is_strongly_stable, krull_dimension,
                              minimal_generator_counts, polarize)
from .orders import DegRevLex, Lex, TermOrder, WeightOrder, parse_order
from .parser import ParseError, format_ideal, load_ideal
from .poly import format_polynomial

log = logging.getLogger("redinit")

OK, FAILED, USAGE = 0, 1, 2
DEFAULT_BOUND = 8
VERIFY_SUITES = ("thm11", "lemma12", "lemma13", "lemma14", "lemma15", "cor16", "prop21", "paper-examples")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: Any = None
    timings: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    passed: bool | None = None

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> RunReport:
        return cls(**data)

    @property
    def exit_code(self) -> int:
        return FAILED if self.passed is False else OK


# -- helpers ------------------------------------------------------------------

def _load(args):
    path = resolve(args.ideal)
    if not path.exists():
        raise UsageError(f"no such ideal file: {args.ideal}")
    ring, gens = load_ideal(path, args.char)
    return ring, gens


def _order(text: str | None, ring, default: TermOrder) -> TermOrder:
    if text is None:
        return default
    order = parse_order(text, ring.names)
    order.check_ring(ring.n)
    return order


def _polys(gens) -> list[str]:
    return [format_polynomial(g) for g in gens]


def _monomial_ideal(ring, gens) -> MonomialIdeal:
    if not all(g.is_monomial() for g in gens):
        raise UsageError("input must be generated by monomials")
    return MonomialIdeal(ring, [next(iter(g.terms)) for g in gens])


def _hf_bound(args, default: int = DEFAULT_BOUND) -> int:
    return args.max_degree if args.max_degree is not None else default


def _corpus_spec(args, characteristic=None) -> CorpusSpec:
    char = args.char if args.char is not None else DEFAULT_CHARACTERISTIC
    if characteristic is not None and args.char is None:
        char = characteristic
    return CorpusSpec(count=args.count, seed=args.seed, n_vars=args.n_vars, max_gens=args.max_gens,
                      max_degree=args.gen_degree, max_terms=args.max_terms, characteristic=char)


# -- single-ideal commands ------------------------------------------------------

def cmd_gb(args):
    ring, gens = _load(args)
    order = _order(args.order, ring, DegRevLex())
    gb = buchberger(gens, order, args.max_degree)
    lead = [ring.monomial(m) for m in gb.leading_monomials()]
    return {"order": str(order), "basis": _polys(gb.generators), "leading": _polys(lead)}, None


def cmd_inideal(args):
    ring, gens = _load(args)
    order = _order(args.order, ring, DegRevLex())
    inn = initial_ideal(gens, order, args.max_degree)
    return {"order": str(order), "generators": _polys(inn.to_polynomials())}, None


def cmd_inweight(args):
    ring, gens = _load(args)
    if args.weights:
        weights = tuple(int(w) for w in args.weights.split(","))
    else:
        order = _order(args.order, ring, DegRevLex())
        if not isinstance(order, WeightOrder):
            raise UsageError("inweight needs --weights or --order weight:...")
        weights = order.weights
    WeightOrder(weights).check_ring(ring.n)
    return {"weights": list(weights), "generators": _polys(initial_ideal_weight(gens, weights, args.max_degree))}, None


def cmd_gin(args):
    ring, gens = _load(args)
    order = _order(args.order, ring, DegRevLex())
    res = ginmod.gin(gens, order, args.trials, args.seed, args.max_degree)
    return {"order": str(order), "generators": _polys(res.ideal.to_polynomials()),
            "stable": res.stable, "trial_seeds": list(res.seeds)}, None


def cmd_hilbert(args):
    ring, gens = _load(args)
    inn = initial_ideal(gens, DegRevLex())
    hf = hilbert_function(inn, _hf_bound(args, inn.max_degree() + ring.n))
    return {"hilbert": list(hf.values)}, None


def cmd_dim(args):
    ring, gens = _load(args)
    return {"dim": ginmod.krull_dim(gens)}, None


def cmd_reduction_number(args):
    ring, gens = _load(args)
    return {"reduction_number": ginmod.reduction_number(gens, args.max_degree, args.seed, args.trials)}, None


def cmd_lex_segment(args):
    ring, gens = _load(args)
    r, L = ginmod.lex_reduction_number(gens, args.max_degree)
    return {"generators": _polys(L.to_polynomials()), "reduction_number": r}, None


def cmd_polarize(args):
    ring, gens = _load(args)
    I = _monomial_ideal(ring, gens)
    which = args.vars.split(",") if args.vars else None
    P, provenance = polarize(I, which)
    return {"ring": list(P.ring.names), "generators": _polys(P.to_polynomials()),
            "provenance": {P.ring.names[k]: list(v) for k, v in provenance.items()}}, None


def cmd_gens_by_degree(args):
    ring, gens = _load(args)
    bound = _hf_bound(args, max(g.degree() for g in gens) + 1)
    return {"counts": minimal_generator_counts(gens, bound)}, None


def cmd_section_hf(args):
    ring, gens = _load(args)
    bound = _hf_bound(args)
    if args.direct:
        hf = ginmod.direct_section_hilbert(gens, args.p, args.seed, bound)
    else:
        hf = ginmod.generic_section_hilbert(gens, args.p, bound, args.seed, args.trials)
    return {"p": args.p, "method": "direct" if args.direct else "gin", "hilbert": list(hf.values)}, None


def cmd_check_thm11(args):
    ring, gens = _load(args)
    tau = _order(args.tau, ring, Lex())
    ps = [args.p] if args.p is not None else list(range(ring.n + 1))
    reports = [ginmod.check_theorem_1_1(gens, tau, p, _hf_bound(args), args.seed, args.trials) for p in ps]
    holds = all(r.holds for r in reports)
    return {"tau": str(tau), "holds": holds, "reports": [r.to_json() for r in reports]}, holds


def cmd_vasconcelos(args):
    ring, gens = _load(args)
    tau = _order(args.tau, ring, Lex())
    res = ginmod.vasconcelos_check(gens, tau, args.max_degree, args.seed, args.trials)
    return {"tau": str(tau), "r": res.r_ideal, "r_initial": res.r_other, "holds": res.holds}, res.holds


def cmd_lex_check(args):
    ring, gens = _load(args)
    res = ginmod.lex_reduction_check(gens, args.max_degree, args.seed, args.trials)
    out = {"r": res.r_ideal, "r_lex": res.r_other, "holds": res.holds}
    if ring.characteristic:
        out["caveat"] = "inequality only established in characteristic 0; reported, not asserted"
        return out, None
    return out, res.holds


def cmd_analytic_spread(args):
    ring, gens = _load(args)
    return {"analytic_spread": ginmod.analytic_spread(gens)}, None


def _wedge_json(w: ext.WedgeElement) -> dict:
    def key(e):
        return " ^ ".join(format_polynomial(w.ring.monomial(m)) for m in e)

    F = w.ring.field
    items = sorted(w.coefficients.items(), key=lambda kv: ext._exterior_key(w.order, kv[0]))
    return {"initial": key(w.initial()), "terms": [[key(e), str(F.symmetric(c))] for e, c in items]}


def cmd_wedge(args):
    ring, gens = _load(args)
    sigma = _order(args.order, ring, DegRevLex())
    tau = _order(args.tau, ring, Lex())
    try:
        V = ext.GradedSubspace(gens)
    except ValueError as exc:
        raise UsageError(f"generators do not span a graded subspace: {exc}") from None
    if args.lemma is None:
        return _wedge_json(ext.wedge_of_subspace(V, sigma)), None
    if args.lemma == "13":
        cases, failures = ext.exhaustive_lemma_1_3(ring.n, V.degree, V.dim, sigma)
        return {"cases": cases, "failures": failures}, failures == 0
    ok = {
        "14": lambda: ext.check_lemma_1_4(V, sigma),
        "15": lambda: ext.check_lemma_1_5(V, sigma, tau, args.seed),
        "16": lambda: ext.check_cor_1_6(V, sigma, tau, args.seed),
    }[args.lemma]()
    return {"lemma": args.lemma, "holds": ok}, ok


def cmd_corpus(args):
    spec = _corpus_spec(args)
    paths = write_corpus(spec, args.out)
    return {"spec": asdict(spec), "files": [str(p) for p in paths]}, None


# -- verification suites ----------------------------------------------------------

def _failure(index, ring, gens, **extra) -> dict:
    return {"index": index, "ideal": format_ideal(ring, gens), **extra}


def random_weights(n: int, seed: int, index: int) -> tuple[int, ...]:
    rng = random.Random(f"weight:{seed}:{index}")
    return tuple(rng.randint(1, 9) for _ in range(n))


def verify_thm11(spec: CorpusSpec, bound: int, trials: int) -> dict:
    checks, failures = 0, []
    for i in range(spec.count):
        ring, gens = random_ideal(spec, i)
        for tau in (Lex(), DegRevLex(), WeightOrder(random_weights(ring.n, spec.seed, i))):
            for p in range(ring.n + 1):
                checks += 1
                rep = ginmod.check_theorem_1_1(gens, tau, p, bound, spec.seed, trials)
                if not rep.holds:
                    failures.append(_failure(i, ring, gens, tau=str(tau), report=rep.to_json()))
    return {"checks": checks, "failures": failures}


def verify_lemma12(spec: CorpusSpec, bound: int, trials: int) -> dict:
    checks, failures = 0, []
    for i in range(spec.count):
        ring, gens = random_ideal(spec, i)
        for p in range(ring.n + 1):
            for s in (spec.seed, spec.seed + 1):
                checks += 1
                a = ginmod.generic_section_hilbert(gens, p, bound, s, trials)
                b = ginmod.direct_section_hilbert(gens, p, s, bound)
                if a.values != b.values:
                    failures.append(_failure(i, ring, gens, p=p, seed=s, gin=list(a.values), direct=list(b.values)))
    return {"checks": checks, "failures": failures}


def verify_lemma13() -> dict:
    checks, failures = 0, []
    for order in (Lex(), DegRevLex()):
        cases, bad = ext.exhaustive_lemma_1_3(3, 2, 2, order)
        checks += cases
        if bad:
            failures.append({"order": str(order), "failures": bad})
    return {"checks": checks, "failures": failures}


def verify_exterior(which: str, count: int, seed: int, characteristic: int) -> dict:
    rng = random.Random(f"exterior:{seed}")
    failures = []
    for i in range(count):
        inst = ext.random_instance(rng, characteristic=characteristic)
        if which == "lemma14":
            ok = ext.check_lemma_1_4(inst.V, inst.sigma)
        elif which == "lemma15":
            ok = ext.check_lemma_1_5(inst.V, inst.sigma, inst.tau, inst.seed)
        else:
            ok = ext.check_cor_1_6(inst.V, inst.sigma, inst.tau, inst.seed)
        if not ok:
            failures.append({"index": i, "basis": _polys(inst.V.basis), "sigma": str(inst.sigma),
                             "tau": str(inst.tau), "seed": inst.seed})
    return {"checks": count, "failures": failures}


def verify_prop21(spec: CorpusSpec, trials: int) -> dict:
    checks, failures, skipped = 0, [], []
    for i in range(spec.count):
        ring, gens = random_ideal(spec, i)
        if krull_dimension(initial_ideal(gens, DegRevLex())) < 0:
            continue
        try:
            res = ginmod.lex_reduction_check(gens, None, spec.seed, trials)
        except (ginmod.GinError, ValueError) as exc:
            # small prime fields may have no generic coordinates at all
            skipped.append(_failure(i, ring, gens, reason=str(exc)))
            continue
        checks += 1
        if not res.holds:
            failures.append(_failure(i, ring, gens, r=res.r_ideal, r_lex=res.r_other))
    return {"checks": checks, "failures": failures, "skipped": skipped}


def cmd_verify(args):
    which = args.suite
    bound = _hf_bound(args)
    if which == "thm11":
        out = verify_thm11(_corpus_spec(args), bound, args.trials)
    elif which == "lemma12":
        out = verify_lemma12(_corpus_spec(args), bound, args.trials)
    elif which == "lemma13":
        out = verify_lemma13()
    elif which in ("lemma14", "lemma15", "cor16"):
        char = args.char if args.char is not None else DEFAULT_CHARACTERISTIC
        out = verify_exterior(which, args.count, args.seed, char)
    elif which == "prop21":
        spec = _corpus_spec(args, characteristic=0)
        out = verify_prop21(spec, args.trials)
        if spec.characteristic:
            out["caveat"] = "finite characteristic: inequality not established, report only"
            out["passed_checks"] = out["checks"] - len(out["failures"])
            return out, None
    else:
        rows = reproduce_all(args.seed, args.char if args.char is not None else DEFAULT_CHARACTERISTIC)
        out = {"checks": len(rows), "rows": rows, "failures": [r for r in rows if not r["ok"]]}
    out["passed_checks"] = out["checks"] - len(out["failures"])
    return out, not out["failures"]


COMMANDS = {
    "gb": cmd_gb,
    "inideal": cmd_inideal,
    "inweight": cmd_inweight,
    "gin": cmd_gin,
    "hilbert": cmd_hilbert,
    "dim": cmd_dim,
    "reduction-number": cmd_reduction_number,
    "lex-segment": cmd_lex_segment,
    "polarize": cmd_polarize,
    "gens-by-degree": cmd_gens_by_degree,
    "section-hf": cmd_section_hf,
    "check-thm11": cmd_check_thm11,
    "vasconcelos": cmd_vasconcelos,
    "lex-check": cmd_lex_check,
    "analytic-spread": cmd_analytic_spread,
    "wedge": cmd_wedge,
    "corpus": cmd_corpus,
    "verify": cmd_verify,
}


# -- argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--order", default=d(None), help="lex | degrevlex | weight:w1,... | perm:[base:]v1,...")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--max-degree", type=int, default=d(None), help="degree bound for truncated computations")
    p.add_argument("--char", type=int, default=d(None), help="override the file's characteristic")
    p.add_argument("--json", default=d(None), metavar="PATH", help="write the run report as JSON")
    p.add_argument("--trials", type=int, default=d(ginmod.DEFAULT_TRIALS))
    p.add_argument("-v", "--verbose", action="store_true", default=d(False))


def _corpus_flags(p: argparse.ArgumentParser, count: int) -> None:
    p.add_argument("--count", type=int, default=count)
    p.add_argument("--n-vars", type=int, default=5)
    p.add_argument("--max-gens", type=int, default=5)
    p.add_argument("--gen-degree", type=int, default=4, help="largest generator degree")
    p.add_argument("--max-terms", type=int, default=4)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="redinit", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_text, ideal=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if ideal:
            p.add_argument("ideal", help="ideal file, or the name of a bundled example")
        return p

    cmd("gb", "reduced Groebner basis under --order")
    cmd("inideal", "initial ideal under --order")
    cmd("inweight", "weight initial ideal").add_argument("--weights", help="comma separated positive weights")
    cmd("gin", "generic initial ideal under --order (default degrevlex)")
    cmd("hilbert", "Hilbert function of R/I")
    cmd("dim", "Krull dimension of R/I")
    cmd("reduction-number", "reduction number r(R/I)")
    cmd("lex-segment", "lex-segment ideal with the same Hilbert function")
    cmd("polarize", "polarization of a monomial ideal").add_argument("--vars", help="comma separated variables")
    cmd("gens-by-degree", "minimal generators per degree")
    p = cmd("section-hf", "Hilbert function modulo p generic linear forms")
    p.add_argument("--p", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--direct", action="store_true", help="Groebner basis of I plus seeded linear forms")
    g.add_argument("--gin", action="store_true", help="generic initial ideal route (default)")
    p = cmd("check-thm11", "HF(R/I+J) <= HF(R/in(I)+J) for generic linear J")
    p.add_argument("--tau", default=None)
    p.add_argument("--p", type=int, default=None, help="number of linear forms (default: all)")
    cmd("vasconcelos", "r(R/I) <= r(R/in_tau(I))").add_argument("--tau", default=None)
    cmd("lex-check", "r(R/I) <= r(R/I^Lex)")
    cmd("analytic-spread", "analytic spread of a homogeneous ideal")
    p = cmd("wedge", "top wedge of the span of the generators; lemma checks")
    p.add_argument("--lemma", choices=["13", "14", "15", "16"])
    p.add_argument("--tau", default=None)
    p = cmd("corpus", "write a seeded random corpus", ideal=False)
    _corpus_flags(p, 100)
    p.add_argument("--out", required=True)
    p = cmd("verify", "run a verification suite", ideal=False)
    p.add_argument("suite", choices=VERIFY_SUITES)
    _corpus_flags(p, 100)
    return parser


def run_command(argv: list[str]) -> tuple[RunReport | None, int]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"redinit: error: {exc}", file=sys.stderr)
        return None, USAGE
    except SystemExit as exc:  # --help
        return None, int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "json", "verbose")}
    report = RunReport(args.command, inputs, seeds={"seed": args.seed, "trials": args.trials})
    start = time.perf_counter()
    try:
        report.results, report.passed = COMMANDS[args.command](args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"redinit: error: {exc}", file=sys.stderr)
        return None, USAGE
    except ValueError as exc:
        print(f"redinit: {args.command}: {exc}", file=sys.stderr)
        return None, USAGE
    except ginmod.GinError as exc:
        print(f"redinit: {args.command}: {exc}", file=sys.stderr)
        return None, FAILED
    report.timings["seconds"] = round(time.perf_counter() - start, 6)
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_json(), indent=2) + "\n", encoding="utf-8")
    return report, report.exit_code


def _print(report: RunReport) -> None:
    res = report.results
    if isinstance(res, dict):
        for k, v in res.items():
            if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
                print(f"{k}:")
                for x in v:
                    print(f"  {x}")
            elif isinstance(v, (list, dict)):
                print(f"{k}: {json.dumps(v)}")
            else:
                print(f"{k}: {v}")
    if report.passed is not None:
        print("PASS" if report.passed else "FAIL")


def main(argv: list[str] | None = None) -> int:
    report, code = run_command(sys.argv[1:] if argv is None else argv)
    if report is not None:
        _print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())

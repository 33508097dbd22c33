"""Command line front end.

Every subcommand prints a single JSON document on stdout (inputs echoed,
results, tolerances) and a short human summary on stderr unless
--json-only is given.  Exit codes: 0 success, 1 computation error (with a
machine-readable error object on stdout), 2 usage error.

Inputs can be given inline or as @path to read a file.  Values that start
with a minus sign need the --flag=value form (--poly="-1,-1,1").  The
environment variable LEHMERLAB_TOL overrides the default tolerance.
"""

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from ._blockword import BudgetError
from .braid import (
    BraidWord,
    det_burau_minus_identity,
    entropy_estimate,
    format_braid,
    lehmer_gap,
    parse_braid,
    reduced_alexander,
    reduced_burau,
)
from .dynamics import (
    char_poly,
    cyclotomic_padding,
    lefschetz_seq,
    net_traces,
    parse_matrix,
    perron_check,
    primitivity,
)
from .freegroup import (
    DEFAULT_BUDGET,
    Word,
    abelianization,
    endo_from_matrix,
    format_endo,
    format_word,
    growth_report_sum,
    iterate_lengths,
    nielsen_verify_basis,
    parse_endo,
    parse_word,
    positive_f2_aut,
)
from .freegroup import growth_report as endo_growth_report
from .polynomial import (
    DEFAULT_TOL,
    IntPoly,
    LaurentPoly,
    PrecisionError,
    format_poly,
    irreducibility_certificate,
    is_cyclotomic_product,
    is_reciprocal,
    mahler_measure,
    parse_poly,
    power_substitution_order,
)
from .sequence import (
    DEFAULT_WINDOW,
    GrowthReport,
    NoRecurrenceFound,
    Recurrence,
    fit_min_poly,
    growth_report,
    hankel_det,
    hankel_values,
    parse_seq,
)


# ---------------------------------------------------------------------------
# Input and output plumbing


def _read_arg(value: str) -> str:
    """Inline value, or the contents of a file when given as @path."""
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _env_tol() -> float:
    raw = os.environ.get("LEHMERLAB_TOL", "").strip()
    if not raw:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_TOL


def _num(x):
    """JSON-safe exact numbers: integral Fractions as int, others as string."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    return x


def _poly_obj(f: IntPoly) -> dict:
    return {"coeffs": list(f.coeffs), "display": format_poly(f)}


def _laurent_obj(f: LaurentPoly) -> dict:
    return {"coeffs": list(f.coeffs), "min_deg": f.min_deg, "display": str(f)}


def _rec_obj(rec: Recurrence) -> dict:
    return {
        "char": [_num(c) for c in rec.char],
        "char_display": format_poly(rec.char_int()) if rec.char_is_integral() else None,
        "degree": rec.degree,
        "init": [_num(c) for c in rec.init],
        "start_index": rec.start_index,
    }


def _growth_obj(rep: GrowthReport) -> dict:
    return {
        "entries": [
            {
                "k": e.k,
                "estimate": e.estimate,
                "spread": e.spread,
                "exact": e.exact,
                "window": e.window,
            }
            for e in rep.entries
        ],
        "min_poly": None if rep.min_poly is None else _rec_obj(rep.min_poly),
        "max_exact": rep.max_exact(),
    }


def _emit(args, payload: dict, summary) -> int:
    print(json.dumps(payload, indent=2, sort_keys=True))
    if not args.json_only:
        for line in summary:
            print(line, file=sys.stderr)
    return 0


def _braid_arg(args) -> BraidWord:
    return parse_braid(_read_arg(args.braid), args.n)


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_mahler(args) -> int:
    f = parse_poly(_read_arg(args.poly))
    r = mahler_measure(f, tol=args.tol)
    payload = {
        "command": "mahler",
        "inputs": {"poly": _poly_obj(f), "tol": args.tol},
        "result": {
            "mahler": r.value,
            "lower": r.lower,
            "upper": r.upper,
            "exact": r.exact,
        },
    }
    return _emit(args, payload, [f"M({format_poly(f)}) = {r.value:.12f}"])


def _cmd_poly_check(args) -> int:
    f = parse_poly(_read_arg(args.poly))
    cert = irreducibility_certificate(f)
    result = {
        "degree": f.degree,
        "monic": f.is_monic,
        "reciprocal": is_reciprocal(f),
        "cyclotomic_product": is_cyclotomic_product(f),
        "power_substitution_order": power_substitution_order(f),
        "irreducibility": {
            "status": cert.status,
            "witness_prime": cert.witness_prime,
            "factor": None if cert.factor is None else _poly_obj(cert.factor),
        },
    }
    payload = {
        "command": "poly-check",
        "inputs": {"poly": _poly_obj(f)},
        "result": result,
    }
    summary = [
        f"degree {f.degree}, reciprocal: {result['reciprocal']}, "
        f"cyclotomic product: {result['cyclotomic_product']}",
        f"power substitution order: {result['power_substitution_order']}, "
        f"irreducibility: {cert.status}",
    ]
    return _emit(args, payload, summary)


def _cmd_hankel(args) -> int:
    a = parse_seq(_read_arg(args.seq))
    inputs = {"seq": [_num(v) for v in a.terms], "k": args.k, "n": args.n}
    if args.n is not None:
        value = hankel_det(a, args.n, args.k)
        result = {"value": _num(value)}
        summary = [f"H_{{{args.n},{args.k}}} = {value}"]
    else:
        pairs = hankel_values(a, args.k)
        result = {"first_n": 1, "values": [_num(v) for _, v in pairs]}
        summary = [f"H_{{n,{args.k}}} for n = 1..{len(pairs)}"]
    payload = {"command": "hankel", "inputs": inputs, "result": result}
    return _emit(args, payload, summary)


def _cmd_growth(args) -> int:
    a = parse_seq(_read_arg(args.seq))
    rep = growth_report(
        a, args.k_max, window=args.window, d_max=args.d_max, tol=args.tol
    )
    payload = {
        "command": "growth",
        "inputs": {
            "seq": [_num(v) for v in a.terms],
            "k_max": args.k_max,
            "window": args.window,
            "d_max": args.d_max,
            "tol": args.tol,
        },
        "result": _growth_obj(rep),
    }
    summary = []
    for e in rep.entries:
        est = "n/a" if e.estimate is None else f"{e.estimate:.6f}"
        exa = "n/a" if e.exact is None else f"{e.exact:.6f}"
        summary.append(f"GR^({e.k}): estimate {est}, exact {exa}")
    return _emit(args, payload, summary)


def _cmd_fit_recurrence(args) -> int:
    a = parse_seq(_read_arg(args.seq))
    d_max = args.d_max if args.d_max is not None else max(1, a.n_terms // 3)
    rec = fit_min_poly(a, d_max)
    payload = {
        "command": "fit-recurrence",
        "inputs": {"seq": [_num(v) for v in a.terms], "d_max": d_max},
        "result": _rec_obj(rec),
    }
    disp = format_poly(rec.char_int()) if rec.char_is_integral() else str(rec.char)
    return _emit(args, payload, [f"minimal polynomial: {disp}"])


def _cmd_lefschetz(args) -> int:
    a = parse_matrix(_read_arg(args.matrix))
    seq = lefschetz_seq(a, args.boundary, args.iters)
    char = char_poly(a)
    m = mahler_measure(char, tol=args.tol)
    payload = {
        "command": "lefschetz",
        "inputs": {
            "matrix": [list(row) for row in a.rows],
            "has_boundary": args.boundary,
            "n_terms": args.iters,
            "tol": args.tol,
        },
        "result": {
            "lefschetz": [_num(v) for v in seq.terms],
            "char": _poly_obj(char),
            "mahler_char": m.value,
        },
    }
    summary = [
        f"L_n for n = 1..{args.iters}; char poly {format_poly(char)}, "
        f"M = {m.value:.6f}"
    ]
    return _emit(args, payload, summary)


def _cmd_net_trace(args) -> int:
    f = parse_poly(_read_arg(args.poly))
    nets = net_traces(f, args.iters)
    first_bad = next((i + 1 for i, v in enumerate(nets) if v < 0), None)
    payload = {
        "command": "net-trace",
        "inputs": {"poly": _poly_obj(f), "n_terms": args.iters},
        "result": {"net_traces": [_num(v) for v in nets], "first_negative_n": first_bad},
    }
    tail = "all nonnegative" if first_bad is None else f"first negative at n = {first_bad}"
    return _emit(args, payload, [f"net traces for n = 1..{args.iters}: {tail}"])


def _cmd_perron(args) -> int:
    f = parse_poly(_read_arg(args.poly))
    chk = perron_check(f, n_net=args.n_net, tol=args.tol)
    payload = {
        "command": "perron",
        "inputs": {"poly": _poly_obj(f), "n_net": args.n_net, "tol": args.tol},
        "result": {
            "integer_coeffs": chk.integer_coeffs,
            "dominant_real": chk.dominant_real,
            "net_traces_ok_up_to_n": chk.net_traces_ok_up_to_n,
            "net_traces_checked": chk.net_traces_checked,
            "first_negative_net": chk.first_negative_net,
            "perron_candidate": chk.is_perron_candidate,
        },
    }
    verdict = "passes" if chk.is_perron_candidate else "fails"
    return _emit(args, payload, [f"{format_poly(f)} {verdict} the Perron conditions"])


def _cmd_padding(args) -> int:
    f = parse_poly(_read_arg(args.poly))
    pad = cyclotomic_padding(
        f,
        n_net=args.n_net,
        search_bound=args.search_bound,
        max_degree=args.max_degree,
        max_mult=args.max_mult,
        tol=args.tol,
    )
    result = {"found": pad is not None}
    if pad is not None:
        result.update(
            {
                "phi": _poly_obj(pad.phi),
                "indices": list(pad.indices),
                "net": [_num(v) for v in pad.net],
            }
        )
    payload = {
        "command": "padding",
        "inputs": {
            "poly": _poly_obj(f),
            "n_net": args.n_net,
            "search_bound": args.search_bound,
            "max_degree": args.max_degree,
            "max_mult": args.max_mult,
            "tol": args.tol,
        },
        "result": result,
    }
    if pad is None:
        summary = ["no cyclotomic padding found within the search bounds"]
    elif not pad.indices:
        summary = ["net traces already nonnegative; no padding needed"]
    else:
        summary = [f"padding found: indices {list(pad.indices)}, phi = {format_poly(pad.phi)}"]
    return _emit(args, payload, summary)


def _cmd_primitivity(args) -> int:
    a = parse_matrix(_read_arg(args.matrix))
    prim = primitivity(a)
    payload = {
        "command": "primitivity",
        "inputs": {"matrix": [list(row) for row in a.rows]},
        "result": {"primitive": prim},
    }
    return _emit(args, payload, [f"primitive: {prim}"])


def _cmd_fg_iterate(args) -> int:
    phi = parse_endo(_read_arg(args.endo))
    inputs = {
        "endo": format_endo(phi),
        "word": args.word,
        "n_terms": args.iters,
        "budget": args.budget,
    }
    if args.word is not None:
        w = parse_word(_read_arg(args.word), rank=phi.rank)
        seq = iterate_lengths(phi, w, args.iters, budget=args.budget)
        result = {"word": format_word(w), "lengths": [_num(v) for v in seq.terms]}
        summary = [f"|phi^n({format_word(w)})| for n = 1..{args.iters}"]
    else:
        per = {}
        for g in range(1, phi.rank + 1):
            name = format_word(Word.gen(phi.rank, g))
            seq = iterate_lengths(phi, g, args.iters, budget=args.budget)
            per[name] = [_num(v) for v in seq.terms]
        result = {"per_generator": per}
        summary = [f"|phi^n(g)| for each generator, n = 1..{args.iters}"]
    payload = {"command": "fg-iterate", "inputs": inputs, "result": result}
    return _emit(args, payload, summary)


def _cmd_fg_growth(args) -> int:
    phi = parse_endo(_read_arg(args.endo))
    inputs = {
        "endo": format_endo(phi),
        "k_max": args.k_max,
        "n_terms": args.iters,
        "window": args.window,
        "d_max": args.d_max,
        "budget": args.budget,
        "sum": args.sum,
    }
    if args.sum:
        rep = growth_report_sum(
            phi,
            args.k_max,
            args.iters,
            window=args.window,
            d_max=args.d_max,
            budget=args.budget,
        )
        result = {"sum_report": _growth_obj(rep)}
        best = rep.max_exact()
    else:
        rep = endo_growth_report(
            phi,
            args.k_max,
            args.iters,
            window=args.window,
            d_max=args.d_max,
            budget=args.budget,
        )
        result = {
            "per_generator": [_growth_obj(r) for r in rep.per_generator],
            "maxima": [_num(v) for v in rep.maxima],
        }
        best = max((v for v in rep.maxima if v is not None), default=None)
    payload = {"command": "fg-growth", "inputs": inputs, "result": result}
    shown = "n/a" if best is None else f"{best:.6f}"
    return _emit(args, payload, [f"largest growth rate: {shown}"])


def _cmd_fg_from_matrix(args) -> int:
    a = parse_matrix(_read_arg(args.matrix))
    phi = endo_from_matrix(a)
    ab = abelianization(phi)
    payload = {
        "command": "fg-from-matrix",
        "inputs": {"matrix": [list(row) for row in a.rows]},
        "result": {
            "endo": format_endo(phi),
            "images": [format_word(w) for w in phi.images],
            "abelianization": [list(row) for row in ab.rows],
        },
    }
    return _emit(args, payload, [format_endo(phi)])


def _cmd_f2_positive_aut(args) -> int:
    a = parse_matrix(_read_arg(args.matrix))
    descent = positive_f2_aut(a)
    phi = descent.endo
    ab = abelianization(phi)
    u, v = phi.images
    payload = {
        "command": "f2-positive-aut",
        "inputs": {"matrix": [list(row) for row in a.rows]},
        "result": {
            "endo": format_endo(phi),
            "images": [format_word(u), format_word(v)],
            "swapped": descent.swapped,
            "ds": list(descent.ds),
            "abelianization": [list(row) for row in ab.rows],
            "matches_input": ab == a,
            "positive_words": u.is_positive() and v.is_positive(),
            "nielsen_basis": nielsen_verify_basis(u, v),
        },
    }
    return _emit(args, payload, [format_endo(phi)])


def _cmd_burau(args) -> int:
    beta = _braid_arg(args)
    mat = reduced_burau(beta)
    payload = {
        "command": "burau",
        "inputs": {"braid": format_braid(beta), "n": beta.n},
        "result": {
            "size": mat.size,
            "matrix": [[_laurent_obj(e) for e in row] for row in mat.entries],
        },
    }
    return _emit(args, payload, [f"reduced Burau matrix, size {mat.size}"])


def _cmd_alexander(args) -> int:
    beta = _braid_arg(args)
    det = det_burau_minus_identity(beta)
    alex = reduced_alexander(beta)
    payload = {
        "command": "alexander",
        "inputs": {"braid": format_braid(beta), "n": beta.n},
        "result": {"alexander": _laurent_obj(alex), "det": _laurent_obj(det)},
    }
    return _emit(args, payload, [f"reduced Alexander polynomial: {alex}"])


def _cmd_lehmer_gap(args) -> int:
    beta = _braid_arg(args)
    gap = lehmer_gap(beta, tol=args.tol)
    alex = reduced_alexander(beta)
    payload = {
        "command": "lehmer-gap",
        "inputs": {"braid": format_braid(beta), "n": beta.n, "tol": args.tol},
        "result": {"gap": gap, "alexander": _laurent_obj(alex)},
    }
    return _emit(args, payload, [f"Mahler measure of det(Burau - I): {gap:.12f}"])


def _cmd_entropy(args) -> int:
    beta = _braid_arg(args)
    est = entropy_estimate(
        beta, n_terms=args.iters, accel=not args.no_accel, budget=args.budget
    )
    payload = {
        "command": "entropy",
        "inputs": {
            "braid": format_braid(beta),
            "n": beta.n,
            "n_terms": args.iters,
            "accel": not args.no_accel,
            "budget": args.budget,
        },
        "result": {
            "gr1": est.gr1,
            "log_gr1": est.log_gr1,
            "accelerated": est.accelerated,
            "per_generator": [
                {
                    "generator": g.generator,
                    "estimate": g.estimate,
                    "spread": g.spread,
                    "last_ratios": list(g.last_ratios),
                }
                for g in est.per_generator
            ],
        },
    }
    summary = [f"growth rate {est.gr1:.6f}, entropy {est.log_gr1:.6f}"]
    return _emit(args, payload, summary)


# ---------------------------------------------------------------------------
# Parser assembly


def build_parser() -> argparse.ArgumentParser:
    tol_default = _env_tol()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json-only",
        action="store_true",
        help="suppress the human summary on stderr",
    )

    parser = argparse.ArgumentParser(
        prog="lehmerlab",
        description="Exact tools for Mahler measures, growth rates and braid invariants.",
        epilog="Values starting with '-' need the --flag=value form, "
        'e.g. --poly="-1,-1,1".  @path reads any value from a file.',
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_text):
        q = sub.add_parser(name, parents=[common], help=help_text)
        q.set_defaults(func=func)
        return q

    def poly_flag(q):
        q.add_argument(
            "--poly",
            required=True,
            help="coefficients 'c0,c1,...' (ascending) or an expression like "
            "'t^10 + t^9 - t^7 - ... + 1'; @path reads a file",
        )

    def seq_flag(q):
        q.add_argument(
            "--seq", required=True, help="comma-separated terms, a_1 first; @path reads a file"
        )

    def matrix_flag(q):
        q.add_argument(
            "--matrix", required=True, help="JSON rows, e.g. '[[2,1],[1,1]]'; @path reads a file"
        )

    def braid_flags(q):
        q.add_argument(
            "--braid",
            required=True,
            help="braid word like 's1 s2^-1 T^2' (T = full twist); @path reads a file",
        )
        q.add_argument("--n", type=int, required=True, help="number of strands")

    def tol_flag(q):
        q.add_argument(
            "--tol",
            type=float,
            default=tol_default,
            help="root-isolation tolerance (default %(default)g, or LEHMERLAB_TOL)",
        )

    def budget_flag(q):
        q.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help="work cap for free-group rewriting (default %(default)d)",
        )

    q = add("mahler", _cmd_mahler, "Mahler measure of an integer polynomial")
    poly_flag(q)
    tol_flag(q)

    q = add(
        "poly-check",
        _cmd_poly_check,
        "reciprocality, cyclotomic-product, power-substitution and irreducibility checks",
    )
    poly_flag(q)

    q = add("hankel", _cmd_hankel, "Hankel determinants H_{n,k} of a sequence")
    seq_flag(q)
    q.add_argument("--k", type=int, required=True, help="determinant size")
    q.add_argument("--n", type=int, default=None, help="starting index (omit for all n)")

    q = add("growth", _cmd_growth, "generalized growth rates GR^(k) of a sequence")
    seq_flag(q)
    q.add_argument("--k-max", type=int, default=3, help="largest k (default %(default)d)")
    q.add_argument(
        "--window", type=int, default=DEFAULT_WINDOW, help="estimator window (default %(default)d)"
    )
    q.add_argument("--d-max", type=int, default=None, help="recurrence degree cap (default: terms/3)")
    tol_flag(q)

    q = add("fit-recurrence", _cmd_fit_recurrence, "minimal linear recurrence of a sequence")
    seq_flag(q)
    q.add_argument("--d-max", type=int, default=None, help="degree cap (default: terms/3)")

    q = add("lefschetz", _cmd_lefschetz, "Lefschetz numbers of an integer matrix action")
    matrix_flag(q)
    q.add_argument("--iters", type=int, default=16, help="number of terms (default %(default)d)")
    q.add_argument(
        "--boundary",
        action="store_true",
        help="surface with boundary: L_n = 1 - tr A^n (default 2 - tr A^n)",
    )
    tol_flag(q)

    q = add("net-trace", _cmd_net_trace, "Moebius-inverted power sums of a polynomial's roots")
    poly_flag(q)
    q.add_argument("--iters", type=int, default=20, help="number of terms (default %(default)d)")

    q = add("perron", _cmd_perron, "Perron conditions: integrality, dominant real root, net traces")
    poly_flag(q)
    q.add_argument("--n-net", type=int, default=50, help="net traces checked (default %(default)d)")
    tol_flag(q)

    q = add("padding", _cmd_padding, "cyclotomic factor making all net traces nonnegative")
    poly_flag(q)
    q.add_argument("--n-net", type=int, default=50, help="net traces checked (default %(default)d)")
    q.add_argument("--search-bound", type=int, default=24, help="largest cyclotomic index tried")
    q.add_argument("--max-degree", type=int, default=12, help="largest total padding degree")
    q.add_argument("--max-mult", type=int, default=3, help="largest multiplicity per index")
    tol_flag(q)

    q = add("primitivity", _cmd_primitivity, "primitivity of a nonnegative integer matrix")
    matrix_flag(q)

    q = add("fg-iterate", _cmd_fg_iterate, "exact word lengths |phi^n(w)| under an endomorphism")
    q.add_argument(
        "--endo", required=True, help="images like 'a -> a b a; b -> a b'; @path reads a file"
    )
    q.add_argument("--word", default=None, help="word to iterate (default: every generator)")
    q.add_argument("--iters", type=int, default=10, help="number of iterates (default %(default)d)")
    budget_flag(q)

    q = add("fg-growth", _cmd_fg_growth, "generalized growth rates of an endomorphism")
    q.add_argument(
        "--endo", required=True, help="images like 'a -> a b a; b -> a b'; @path reads a file"
    )
    q.add_argument("--k-max", type=int, default=3, help="largest k (default %(default)d)")
    q.add_argument("--iters", type=int, default=16, help="length terms used (default %(default)d)")
    q.add_argument(
        "--window", type=int, default=DEFAULT_WINDOW, help="estimator window (default %(default)d)"
    )
    q.add_argument("--d-max", type=int, default=None, help="recurrence degree cap (default: terms/3)")
    q.add_argument(
        "--sum",
        action="store_true",
        help="analyze the summed length sequence instead of per-generator maxima",
    )
    budget_flag(q)

    q = add("fg-from-matrix", _cmd_fg_from_matrix, "positive endomorphism read off a nonnegative matrix")
    matrix_flag(q)

    q = add(
        "f2-positive-aut",
        _cmd_f2_positive_aut,
        "positive automorphism of the rank-2 free group with a given abelianization",
    )
    matrix_flag(q)

    q = add("burau", _cmd_burau, "reduced Burau matrix of a braid word")
    braid_flags(q)

    q = add("alexander", _cmd_alexander, "reduced Alexander polynomial of a braid closure")
    braid_flags(q)

    q = add("lehmer-gap", _cmd_lehmer_gap, "Mahler measure of det(Burau - I)")
    braid_flags(q)
    tol_flag(q)

    q = add("entropy", _cmd_entropy, "entropy estimate from the disk action's word growth")
    braid_flags(q)
    q.add_argument("--iters", type=int, default=12, help="length terms used (default %(default)d)")
    q.add_argument("--no-accel", action="store_true", help="disable Aitken acceleration")
    budget_flag(q)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        ValueError,
        ArithmeticError,
        NoRecurrenceFound,
        BudgetError,
        PrecisionError,
        OSError,
    ) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error, indent=2, sort_keys=True))
        return 1


if __name__ == "__main__":
    sys.exit(main())

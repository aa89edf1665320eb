"""Command-line front end: ``hessex <subcommand> [flags]``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import __version__
from .gens import f_poly, g_poly, generator_list
from .hessfn import Corner, HessError, all_hessenberg, diagram, dimension, full, p_of_h, validate
from .pairing import PairingError, beta, hess_schubert_flag, pairing_data, young_subgroup
from .polycore import PolyError, format_poly, parse_poly
from .quotient import (BasisError, ZeroRingError, filtration_check, hilbert_closed, hilbert_oracle,
                       is_regular_sequence, iso_check, monomial_basis, poincare_inductive,
                       poincare_product, quotient_ring, series_text, _ranges, _trim)
from .schubert import (Permutation, alt_decomposition, derive_relations, kernel_basis,
                       kernel_factor, kernel_monomials, monk_expand, question71_check,
                       question71_set, schubert_poly)
from .verify import SUITES, verify_all


class UsageError(Exception):
    pass


DOMAIN_ERRORS = (HessError, ZeroRingError, PairingError, PolyError, BasisError, ValueError)


def _q(c) -> str:
    return str(Fraction(c))


def _exps_text(e) -> str:
    parts = [f"x{k}" if v == 1 else f"x{k}^{v}" for k, v in enumerate(e, start=1) if v]
    return "*".join(parts) if parts else "1"


def _factored(tops) -> str:
    """``(1+t)^3 (1+t+t^2)`` style text for a product of geometric series."""
    cnt = Counter(t for t in tops if t > 0)
    if not cnt:
        return "1"
    out = []
    for top in sorted(cnt):
        body = "1+t" + "".join(f"+t^{k}" for k in range(2, top + 1))
        out.append(f"({body})" + (f"^{cnt[top]}" if cnt[top] > 1 else ""))
    return "".join(out)


def _get_h(args):
    if args.h is None:
        raise UsageError("--h is required")
    return validate(args.h)


def _perm(text):
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise HessError(str(exc)) from exc


# -- handlers: each returns (text, json_object) ---------------------------------------

def cmd_gen(args):
    if args.n is None or args.i is None or args.j is None:
        raise UsageError("gen needs --n, --i and --j")
    fn = f_poly if args.kind == "f" else g_poly
    p = fn(args.n, args.i, args.j)
    return format_poly(p), {"kind": args.kind, "i": args.i, "j": args.j, "poly": p.to_json()}


def cmd_poincare(args):
    h = _get_h(args)
    methods = ["closed", "inductive", "oracle"] if args.method == "all" else [args.method]
    results, lines = {}, []
    closed = poincare_product(h)
    for m in methods:
        if m == "closed":
            results[m] = closed
            lines.append(f"closed: {_factored([h(k) - k for k in range(1, h.n + 1)])} = {series_text(closed)}")
        elif m == "inductive":
            total, terms = poincare_inductive(h)
            results[m] = total
            pieces = []
            for t in terms:
                body = _factored(_ranges(t.shrunk, t.r)) if t.shrunk.n else "1"
                shift = "" if t.s == 1 else ("t" if t.s == 2 else f"t^{t.s - 1}")
                pieces.append(f"{shift}*{body}" if shift else body)
            lines.append(f"inductive: {' + '.join(pieces)} = {series_text(total)}")
            for t in terms:
                lines.append(f"  s={t.s}: r_s={t.r}, h^(s)=({t.shrunk}), "
                             f"t^{t.s - 1}*F = {series_text(t.shifted)}")
            if "summands" not in results:
                results["summands"] = [
                    {"s": t.s, "r": t.r, "shrunk": list(t.shrunk.values), "series": t.shifted}
                    for t in terms
                ]
        elif m == "oracle":
            gens = list(generator_list(h, 1).polys)
            top = dimension(h) + 1
            obs = hilbert_oracle(gens, top, h.n) if h.n else [1]
            results[m] = _trim(obs)
            lines.append(f"oracle: {series_text(results[m])}")
    series = [results[m] for m in methods]
    agree = all(s == series[0] for s in series)
    head = f"{_factored([h(k) - k for k in range(1, h.n + 1)])} = {series_text(series[0])}"
    if not agree:
        head = "METHODS DISAGREE"
    text = "\n".join([head] + lines)
    obj = {"h": list(h.values), "agree": agree, **results}
    return text, obj


def cmd_basis(args):
    h = _get_h(args)
    basis = monomial_basis(h, args.s)
    text = "\n".join(_exps_text(e) for e in basis)
    return text, {"h": list(h.values), "s": args.s, "count": len(basis), "basis": [list(e) for e in basis]}


def cmd_hilbert(args):
    h = _get_h(args)
    closed = hilbert_closed(h, args.s)
    if args.s > p_of_h(h):
        oracle = []
    else:
        oracle = quotient_ring(h, args.s).series()
    text = f"closed: {series_text(closed)}\noracle: {series_text(oracle)}"
    return text, {"h": list(h.values), "s": args.s, "closed": closed, "oracle": oracle, "agree": closed == oracle}


def cmd_nf(args):
    h = _get_h(args)
    if args.poly is None:
        raise UsageError("nf needs --poly")
    ring = quotient_ring(h, args.s)
    p = parse_poly(args.poly, h.n)
    c = ring.normal_form(p)
    lifted = c.lift()
    return format_poly(lifted), {"h": list(h.values), "s": args.s, "input": p.to_json(), "nf": lifted.to_json()}


def cmd_check_regular(args):
    h = _get_h(args)
    gl = generator_list(h, args.s)
    rep = is_regular_sequence(list(gl.polys))
    text = (f"{'regular' if rep.regular else 'NOT regular'}: expected {series_text(rep.expected)}, "
            f"observed {rep.observed}")
    return text, {"h": list(h.values), "s": args.s, "regular": rep.regular,
                  "expected": rep.expected, "observed": rep.observed}


def cmd_filtration(args):
    h = _get_h(args)
    rep = filtration_check(h)
    lines, rows = [], []
    for st in rep.steps:
        lines.append(f"s={st.s}: dim A_s={st.dim_s} = {st.dim_next} + {st.dim_quotient}, "
                     f"x_s injective={st.injective} {'ok' if st.ok else 'FAIL'}")
        rows.append({"s": st.s, "dim_s": st.dim_s, "dim_next": st.dim_next,
                     "dim_quotient": st.dim_quotient, "injective": st.injective, "ok": st.ok})
    return "\n".join(lines), {"h": list(h.values), "ok": rep.ok, "steps": rows}


def cmd_iso_check(args):
    h = _get_h(args)
    rep = iso_check(h, args.s)
    lines = [f"source {series_text(rep.source_series)}, target {series_text(rep.target_series)}"]
    rows = []
    for label, img, exact, zero in rep.generators:
        lines.append(f"  {label} -> {img}  exact={exact} in_ideal={zero}")
        rows.append({"label": label, "image": img, "exact": exact, "in_ideal": zero})
    lines.append("ok" if rep.ok else "FAIL")
    return "\n".join(lines), {"h": list(h.values), "s": args.s, "ok": rep.ok,
                              "source": rep.source_series, "target": rep.target_series,
                              "generators": rows}


def _corner(text):
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--corner expects i,j, got {text!r}") from exc
    return Corner(i, j)


def cmd_kernel(args):
    h = _get_h(args)
    if args.corner is None:
        raise UsageError("kernel needs --corner i,j")
    c = _corner(args.corner)
    mons = kernel_monomials(h, c, args.s)
    factor = "g" if c.j + 1 <= args.s else "f"
    label = f"{factor}_{{{c.i - 1},{c.j}}}"
    polys = kernel_basis(h, c, args.s)
    text = "\n".join(f"{label} * {_exps_text(e)}" for e in mons)
    return text, {"h": list(h.values), "corner": [c.i, c.j], "s": args.s, "factor": label,
                  "factor_poly": kernel_factor(h, c, args.s).to_json(),
                  "monomials": [list(e) for e in mons], "polys": [p.to_json() for p in polys]}


def cmd_relations(args):
    h = _get_h(args)
    rs = derive_relations(h)
    text = "\n".join(rs.lines()) if rs.solved_form else "(no relations)"
    return text, rs.to_json()


def cmd_schubert(args):
    if args.w is None:
        raise UsageError("schubert needs --w")
    w = _perm(args.w)
    p = schubert_poly(w)
    return format_poly(p), {"w": str(w), "length": w.length(), "poly": p.to_json()}


def cmd_alt_decomp(args):
    if args.n is None or args.i is None or args.j is None:
        raise UsageError("alt-decomp needs --i, --j and --n")
    e = alt_decomposition(args.i, args.j, args.n)
    ok = e.to_poly(args.n) == f_poly(args.n, args.i - 1, args.j)
    text = f"f_{{{args.i - 1},{args.j}}} = {e}\nidentity {'verified' if ok else 'FAILED'}"
    return text, {"i": args.i, "j": args.j, "n": args.n, "terms": e.to_json(), "verified": ok}


def cmd_monk(args):
    if args.r is None or args.w is None:
        raise UsageError("monk needs --r and --w")
    w = _perm(args.w)
    e = monk_expand(args.r, w)
    return f"x{args.r} * S[{w}] = {e}", {"r": args.r, "w": str(w), "terms": e.to_json()}


def cmd_beta(args):
    h = _get_h(args)
    b = beta(h)
    pd = pairing_data(h)
    ys = young_subgroup(h)
    nf = pd.beta.lift()
    text = f"beta = {format_poly(b)}\nNF = {format_poly(nf)}\n|S_h| = {ys.order}"
    return text, {"h": list(h.values), "beta": b.to_json(), "nf": nf.to_json(),
                  "young_order": ys.order, "breakpoints": list(ys.breakpoints)}


def cmd_pair(args):
    h = _get_h(args)
    if args.d is None:
        raise UsageError("pair needs --d")
    pd = pairing_data(h)
    M = pd.matrix(args.d)
    rows = pd.ring.basis_of_degree(args.d)
    cols = pd.ring.basis_of_degree(dimension(h) - args.d)
    lines = ["rows: " + ", ".join(_exps_text(e) for e in rows),
             "cols: " + ", ".join(_exps_text(e) for e in cols)]
    lines += ["[" + " ".join(_q(v) for v in r) + "]" for r in M]
    ns = pd.nonsingular(args.d)
    lines.append(f"nonsingular: {ns}")
    return "\n".join(lines), {"h": list(h.values), "d": args.d, "rows": [list(e) for e in rows],
                              "cols": [list(e) for e in cols],
                              "matrix": [[_q(v) for v in r] for r in M], "nonsingular": ns}


def cmd_hess_schubert(args):
    if args.w is None:
        raise UsageError("hess-schubert needs --w")
    w = _perm(args.w)
    if args.n is not None and args.n != w.n:
        raise HessError(f"--n {args.n} does not match permutation {w} of size {w.n}")
    h = validate(args.h) if args.h else full(w.n)
    p = hess_schubert_flag(w, h)
    return format_poly(p), {"w": str(w), "h": list(h.values), "poly": p.to_json(),
                            "equals_schubert": p == schubert_poly(w)}


def cmd_question71(args):
    if args.n is None and args.h is None:
        raise UsageError("question71 needs --n or --h")
    hs = [validate(args.h)] if args.h else all_hessenberg(args.n)
    rows, lines = [], []
    for h in hs:
        ok = question71_check(h)
        count = len(question71_set(h))
        rows.append({"h": list(h.values), "count": count, "dim": quotient_ring(h, 1).dim, "basis": ok})
        lines.append(f"{str(h):<12} {count:>4} {quotient_ring(h, 1).dim:>4}  {ok}")
    header = f"{'h':<12} {'#w':>4} {'dim':>4}  basis"
    all_ok = all(r["basis"] for r in rows)
    return "\n".join([header] + lines), {"results": rows, "all": all_ok}


def cmd_verify(args):
    rep = verify_all(args.max_n, seed=args.seed, only=args.suite or None)
    text = "\n".join(rep.lines() + [f"overall: {'PASS' if rep.ok else 'FAIL'}"])
    obj = {"max_n": args.max_n, "ok": rep.ok,
           "suites": [{"name": s.name, "passed": s.passed, "failed": s.failed,
                       "failures": s.failures, "seconds": round(s.seconds, 3)} for s in rep.suites]}
    return text, obj, (0 if rep.ok else 1)


def cmd_diagram(args):
    h = _get_h(args)
    return diagram(h), {"h": list(h.values), "diagram": diagram(h).split("\n")}


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("--out", default=argparse.SUPPRESS,
                        help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="hessex", parents=[common],
                                     description="Exact computations in Hessenberg cohomology rings.")
    parser.add_argument("--version", action="version", version=f"hessex {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, fn, help_, *flags):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag in flags:
            flag(p)
        p.set_defaults(func=fn)
        return p

    h_ = lambda p: p.add_argument("--h", help="Hessenberg function, e.g. 2,4,4,4")
    s_ = lambda p: p.add_argument("--s", type=int, default=1)
    n_ = lambda p: p.add_argument("--n", type=int)
    i_ = lambda p: p.add_argument("--i", type=int)
    j_ = lambda p: p.add_argument("--j", type=int)
    w_ = lambda p: p.add_argument("--w", help="permutation in one-line notation, e.g. 4123")

    add("gen", cmd_gen, "print f_{i,j} or g_{i,j}", n_, i_, j_,
        lambda p: p.add_argument("--kind", choices=["f", "g"], default="f"))
    add("poincare", cmd_poincare, "Poincare polynomial of A_1^h", h_,
        lambda p: p.add_argument("--method", choices=["closed", "inductive", "oracle", "all"], default="all"))
    add("basis", cmd_basis, "monomial basis of A_s^h", h_, s_)
    add("hilbert", cmd_hilbert, "Hilbert series of A_s^h", h_, s_)
    add("nf", cmd_nf, "normal form of a polynomial in A_s^h", h_, s_,
        lambda p: p.add_argument("--poly", help='polynomial text, e.g. "x1^2 - x1*x2"'))
    add("check-regular", cmd_check_regular, "regular-sequence test for the generators of A_s^h", h_, s_)
    add("filtration", cmd_filtration, "check the filtration A_1 > A_2 > ... of h", h_)
    add("iso-check", cmd_iso_check, "check A_s^h/<x_s> against the shrunk ring", h_, s_)
    add("kernel", cmd_kernel, "kernel basis of A_s^h -> A_s^{h'}", h_, s_,
        lambda p: p.add_argument("--corner", help="corner i,j to remove"))
    add("relations", cmd_relations, "linear relations among Schubert classes in A_1^h", h_)
    add("schubert", cmd_schubert, "Schubert polynomial of w", w_)
    add("alt-decomp", cmd_alt_decomp, "Schubert expansion of f_{i-1,j}", i_, j_, n_)
    add("monk", cmd_monk, "Monk expansion of x_r * S_w", w_,
        lambda p: p.add_argument("--r", type=int))
    add("beta", cmd_beta, "top-degree class beta_h", h_)
    add("pair", cmd_pair, "Poincare pairing matrix in degree d", h_,
        lambda p: p.add_argument("--d", type=int))
    add("hess-schubert", cmd_hess_schubert, "Hessenberg Schubert polynomial (flag case)", n_, w_, h_)
    add("question71", cmd_question71, "test whether S_w with w(m) <= h(m) form a basis", n_, h_)
    add("diagram", cmd_diagram, "draw the diagram of h", h_)
    add("verify", cmd_verify, "run the property suites", lambda p: p.add_argument("--max-n", type=int, default=3),
        lambda p: p.add_argument("--seed", type=int, default=0),
        lambda p: p.add_argument("--suite", action="append", choices=[name for name, _ in SUITES]))
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    args.json = getattr(args, "json", False)
    args.out = getattr(args, "out", None)
    try:
        res = args.func(args)
    except UsageError as exc:
        print(f"hessex: usage error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        if args.json:
            _emit(json.dumps({"error": type(exc).__name__, "message": str(exc)}), args.out)
        print(f"hessex: error: {exc}", file=sys.stderr)
        return 1
    code = 0
    if len(res) == 3:
        text, obj, code = res
    else:
        text, obj = res
    _emit(json.dumps(obj, indent=2) if args.json else text, args.out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end: ``wcq <verb> ...``.

Exit status is 0 on success or a passing check, 1 on a failing check and 2
on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import hopf, oracle, projection, rota_baxter as rb
from .compositions import (
    CompositionSyntaxError,
    enumerate_compositions,
    format_composition,
    parse_composition,
    sort_key,
)
from .lincomb import LinComb
from .monoid import format_entry

GRAMMAR = """\
literals:
  composition  ()  |  ( entry (, entry)* )     entry := e | positive decimal | e^n
               e.g. "(e,1,e,2)", "(e^3,2)", "()"
  weak comp.   [ n (, n)* ]                    nonnegative decimals, e.g. [0,2,0]
  pure tensor  x^a0 | w1 | ... | wk            e.g. "x^2|0|3" = x^2 (x) 1 (x) x^3; unit is 1
"""


class UsageError(Exception):
    pass


# -- rendering ----------------------------------------------------------------

def _term_body(key, basis: str, pairs: bool) -> str:
    if basis == "T":
        if pairs:
            return f"[{rb.format_tensor(key[0])}] ⊗ [{rb.format_tensor(key[1])}]"
        return f"[{rb.format_tensor(key)}]"
    if pairs:
        return f"{basis}{format_composition(key[0])} ⊗ {basis}{format_composition(key[1])}"
    return f"{basis}{format_composition(key)}"


def _order(basis: str):
    return rb.tensor_sort_key if basis == "T" else sort_key


def format_lincomb(u: LinComb, pairs: bool = False) -> str:
    """Render as ``M(1,2) + 2M(3)``; tensor pairs get an explicit ``2*`` prefix."""
    basis = u.basis or "M"
    if not u:
        return "0"
    out = []
    for key, c in u.sorted_items(_order(basis)):
        mag = abs(c)
        prefix = "" if mag == 1 else (f"{mag}*" if pairs else str(mag))
        out.append(("-" if c < 0 else "+", prefix + _term_body(key, basis, pairs)))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def key_json(key):
    if isinstance(key, rb.PureTensor):
        return {"head": key.head, "tail": list(key.tail)}
    if isinstance(key, tuple) and key and all(isinstance(k, tuple) for k in key):
        return [key_json(k) for k in key]
    return [format_entry(a) for a in key]


def lincomb_json(u: LinComb) -> dict:
    basis = u.basis or "M"
    return {
        "basis": basis,
        "terms": [{"coeff": str(c), "key": key_json(k)} for k, c in u.sorted_items(_order(basis))],
    }


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


# -- argument helpers ---------------------------------------------------------

def _comp(text: str):
    return parse_composition(text)


def _tensor(text: str):
    return rb.parse_tensor(text)


def _emit_lincomb(args, u: LinComb, pairs: bool = False) -> int:
    print(_dump(lincomb_json(u)) if args.json else format_lincomb(u, pairs))
    return 0


# -- verbs --------------------------------------------------------------------

def cmd_mul(args) -> int:
    acc = hopf.one()
    for lit in args.compositions:
        acc = hopf.product(acc, hopf.M(_comp(lit)))
    return _emit_lincomb(args, acc)


def cmd_coprod(args) -> int:
    return _emit_lincomb(args, hopf.coproduct(hopf.M(_comp(args.composition))), pairs=True)


def cmd_counit(args) -> int:
    c = hopf.counit(hopf.M(_comp(args.composition)))
    print(_dump({"coeff": str(c)}) if args.json else c)
    return 0


def cmd_antipode(args) -> int:
    return _emit_lincomb(args, hopf.antipode(hopf.M(_comp(args.composition))))


def cmd_m2f(args) -> int:
    return _emit_lincomb(args, hopf.m_to_f(hopf.M(_comp(args.composition))))


def cmd_f2m(args) -> int:
    return _emit_lincomb(args, hopf.f_to_m(hopf.F(_comp(args.composition))))


def cmd_phi(args) -> int:
    return _emit_lincomb(args, projection.phi(hopf.M(_comp(args.composition))))


def cmd_kernel_check(args) -> int:
    report = projection.verify_kernel_truncation(args.max_len, args.max_entry)
    if args.json:
        print(_dump(report.as_dict()))
    else:
        print(f"span dim        {report.span_dim}")
        print(f"rank of phi     {report.rank}")
        print(f"kernel dim      {report.kernel_dim}")
        print(f"basis count     {report.basis_count}")
        print(f"all annihilated {report.all_annihilated}")
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_sha(args) -> int:
    op = args.sha_op
    if op == "mul":
        acc = rb.basis(rb.UNIT)
        for lit in args.tensors:
            acc = rb.diamond(acc, rb.basis(_tensor(lit)))
        return _emit_lincomb(args, acc)
    t = rb.basis(_tensor(args.tensor))
    if op == "coprod":
        return _emit_lincomb(args, rb.sha_coproduct(t), pairs=True)
    if op == "antipode":
        return _emit_lincomb(args, rb.sha_antipode(t))
    if op == "P":
        return _emit_lincomb(args, rb.rb_operator(t))
    if op == "counit":
        c = rb.sha_counit(t)
        print(_dump({"coeff": str(c)}) if args.json else c)
        return 0
    raise UsageError(f"unknown sha operation {op!r}")


def cmd_rb_check(args) -> int:
    passed, failures = rb.rb_check(args.trials, args.seed, args.max_head, args.max_len, args.max_entry)
    ok = not failures
    if args.json:
        print(_dump({"trials": args.trials, "seed": args.seed, "passed": passed, "ok": ok}))
    else:
        print(f"{passed}/{args.trials} random pairs satisfy the Rota-Baxter identity (seed {args.seed})")
        for u, v in failures[:5]:
            print(f"  failure: u = {format_lincomb(u)}, v = {format_lincomb(v)}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_expand(args) -> int:
    alpha = _comp(args.composition)
    series = oracle.expand_f(alpha, args.vars) if args.basis == "F" else oracle.expand_m(alpha, args.vars)
    if args.json:
        terms = [
            {"coeff": str(c), "exponents": [format_entry(a) for a in vec]}
            for vec, c in sorted(series.terms.items(), key=lambda kv: sort_key(kv[0]))
        ]
        print(_dump({"vars": args.vars, "terms": terms}))
    else:
        print(oracle.format_series(series))
    return 0


def cmd_oracle_check(args) -> int:
    comps = enumerate_compositions(args.max_len, args.max_entry)
    product_fail = []
    for a in comps:
        for b in comps:
            n = args.vars if args.vars is not None else len(a) + len(b)
            if not oracle.oracle_product_check(a, b, n):
                product_fail.append((a, b))
    fund_fail = []
    for a in comps:
        for n in ((args.vars,) if args.vars is not None else (len(a), len(a) + 2)):
            if oracle.expand_f(a, n) != oracle.expand(hopf.f_to_m(hopf.F(a)), n):
                fund_fail.append((a, n))
    ok = not product_fail and not fund_fail
    if args.json:
        print(_dump({
            "pairs": len(comps) ** 2,
            "product_failures": [[format_composition(a), format_composition(b)] for a, b in product_fail],
            "fundamental_failures": [[format_composition(a), n] for a, n in fund_fail],
            "ok": ok,
        }))
    else:
        print(f"products checked    {len(comps) ** 2}, failures {len(product_fail)}")
        print(f"F-expansions checked {len(comps)}, failures {len(fund_fail)}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_waring(args) -> int:
    ok = oracle.waring_check(args.vars, args.order)
    if args.json:
        print(_dump({"vars": args.vars, "order": args.order, "ok": ok}))
    else:
        print(f"Waring identity in {args.vars} variables mod t^{args.order + 1}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--json", action="store_true", help="machine-readable output")
    # verbs accept --json too; SUPPRESS keeps a leading `wcq --json verb` intact
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="wcq",
        description="Weak composition quasi-symmetric functions and the free Rota-Baxter algebra on x.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[top],
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, fn, help_text, **kw):
        p = sub.add_parser(name, help=help_text, parents=[common], epilog=GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter, **kw)
        p.set_defaults(func=fn)
        return p

    p = verb("mul", cmd_mul, "product of monomial basis elements")
    p.add_argument("compositions", nargs="+", metavar="COMP")
    for name, fn, text in [
        ("coprod", cmd_coprod, "coproduct of M_alpha"),
        ("counit", cmd_counit, "counit of M_alpha"),
        ("antipode", cmd_antipode, "antipode of M_alpha"),
        ("m2f", cmd_m2f, "expand M_alpha in the fundamental basis"),
        ("f2m", cmd_f2m, "expand F_alpha in the monomial basis"),
        ("phi", cmd_phi, "project M_alpha onto QSym"),
    ]:
        verb(name, fn, text).add_argument("composition", metavar="COMP")

    p = verb("kernel-check", cmd_kernel_check, "verify the kernel basis of phi at a truncation")
    p.add_argument("--max-len", type=_nonneg_int, default=3)
    p.add_argument("--max-entry", type=_nonneg_int, default=2)

    p = verb("sha", cmd_sha, "operations in the free Rota-Baxter algebra")
    sha_sub = p.add_subparsers(dest="sha_op", required=True, metavar="op")
    q = sha_sub.add_parser("mul", help="augmented mixable shuffle product", parents=[common])
    q.add_argument("tensors", nargs="+", metavar="TENSOR")
    for name, text in [("coprod", "coproduct"), ("antipode", "antipode"),
                       ("P", "Rota-Baxter operator"), ("counit", "counit")]:
        sha_sub.add_parser(name, help=text, parents=[common]).add_argument("tensor", metavar="TENSOR")

    p = verb("rb-check", cmd_rb_check, "random trials of the Rota-Baxter identity")
    p.add_argument("--trials", type=_nonneg_int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-head", type=_nonneg_int, default=3)
    p.add_argument("--max-len", type=_nonneg_int, default=2)
    p.add_argument("--max-entry", type=_nonneg_int, default=3)

    p = verb("expand", cmd_expand, "expand M_alpha or F_alpha in finitely many variables")
    p.add_argument("--vars", type=_nonneg_int, required=True)
    p.add_argument("--basis", choices=["M", "F"], default="M")
    p.add_argument("composition", metavar="COMP")

    p = verb("oracle-check", cmd_oracle_check, "compare the algebra with brute-force expansions")
    p.add_argument("--max-len", type=_nonneg_int, default=2)
    p.add_argument("--max-entry", type=_nonneg_int, default=2)
    p.add_argument("--vars", type=_nonneg_int, default=None,
                   help="variable count (default: total length of the inputs)")

    p = verb("waring", cmd_waring, "check Waring's identity to a given order")
    p.add_argument("--vars", type=_nonneg_int, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CompositionSyntaxError, rb.TensorSyntaxError, UsageError) as exc:
        print(f"wcq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

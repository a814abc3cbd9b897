"""Command line surface.  Weights are given as comma-separated coordinates
(lambda_1,...,lambda_n); pass --rho-shifted to give ball positions instead.
Windows are lo..hi (inclusive).  Values starting with a minus need the
'=' form (--window=-8..8, --weight=-1,-1) so they are not read as flags.
PKIT_WINDOW overrides the default window [-4n, 4n].

Exit codes: 0 success, 1 verification failure (counterexamples printed as
JSON), 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import weights as W
from . import arrows as A
from . import grothendieck as G
from . import translation as T
from . import structure as S
from . import blocks as B
from .verify import run_suite, report_failures


def parse_window(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("window must look like -8..8")
    if lo >= hi:
        raise argparse.ArgumentTypeError("window needs lo < hi")
    return (lo, hi)


def default_window(n):
    env = os.environ.get("PKIT_WINDOW")
    if env:
        return parse_window(env)
    return (-4 * n, 4 * n)


def parse_weight(args, text=None) -> W.Weight:
    text = text if text is not None else args.weight
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit2("weight must be comma-separated integers: %r" % text)
    try:
        if args.rho_shifted:
            return W.Weight.from_balls(args.n, parts)
        return W.Weight(args.n, parts)
    except ValueError as e:
        raise SystemExit2(str(e))


class SystemExit2(Exception):
    pass


def vector_ascii(v: G.GVector) -> str:
    if not v.terms:
        return "0"
    bits = []
    for l, c in v.sorted_terms():
        pre = "" if c == 1 else "%d*" % c
        pi = "Pi." if l.parity else ""
        bits.append("%s%s%s(%s)" % (pre, pi, l.family,
                                    ",".join(map(str, l.weight.coords))))
    return " + ".join(bits)


def emit(args, ascii_text, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    else:
        print(ascii_text)


def cmd_diagram(args):
    w = parse_weight(args)
    d = W.weight_to_diagram(w)
    win = args.window or default_window(args.n)
    emit(args, W.render_ascii(d, win), w.to_json())


def cmd_arrows(args):
    w = parse_weight(args)
    ad = A.build_arrows(W.weight_to_diagram(w))
    win = args.window or default_window(args.n)
    emit(args, A.render_arrows_ascii(ad, win), ad.to_json())


def cmd_proj(args):
    w = parse_weight(args)
    d = W.weight_to_diagram(w)
    pd = G.proj_to_delta(w)
    pn = G.proj_to_nabla(w)
    ups = A.up_set(d)
    downs = A.down_set(d)
    text = "\n".join([
        "up:    {%s}" % ", ".join("(%s)" % ",".join(map(str, u.coords)) for u in ups),
        "down:  {%s}" % ", ".join("(%s)" % ",".join(map(str, u.coords)) for u in downs),
        "[P] in Delta basis: %s" % vector_ascii(pd),
        "[P] in Nabla basis: %s" % vector_ascii(pn),
    ])
    emit(args, text, {"up": [u.to_json() for u in ups],
                      "down": [u.to_json() for u in downs],
                      "delta_filtration": pd.to_json(),
                      "nabla_filtration": pn.to_json()})


def cmd_decomp(args):
    w = parse_weight(args)
    fn = G.delta_to_simple if args.family == "delta" else G.nabla_to_simple
    v = fn(w, args.window)
    emit(args, vector_ascii(v), v.to_json())


def cmd_hom(args):
    w = parse_weight(args)
    other = parse_weight(args, args.other)
    d = G.hom_dim(w, other)
    emit(args, str(d), {"hom_dim": d})


def cmd_translate(args):
    w = parse_weight(args)
    k = args.k
    if k is None:
        raise SystemExit2("translate needs --k")
    if args.basis == "delta":
        v = T.theta_delta(k, w, args.parity)
        emit(args, vector_ascii(v), v.to_json())
    elif args.basis == "nabla":
        v = T.theta_nabla(k, w, args.parity)
        emit(args, vector_ascii(v), v.to_json())
    elif args.basis == "proj":
        res = T.theta_proj(k, w)
        if res is None:
            emit(args, "0", {"result": None})
        else:
            mu, p = res
            emit(args, "%sProj(%s)" % ("Pi." if p else "",
                                       ",".join(map(str, mu.coords))),
                 {"weight": mu.to_json(), "parity": p})
    else:
        v = T.theta_simple(k, w, args.window)
        emit(args, vector_ascii(v), v.to_json())


def cmd_dual(args):
    w = parse_weight(args)
    dag = S.dagger(w)
    shp, m = S.sharp(w)
    out = {"dagger": dag.to_json(), "sharp": shp.to_json(), "m": m,
           "delta_dual": S.dual_kac("Delta", w).to_json(),
           "nabla_dual": S.dual_kac("Nabla", w).to_json()}
    text = "\n".join([
        "dagger: (%s)" % ",".join(map(str, dag.coords)),
        "sharp:  (%s)   m=%d" % (",".join(map(str, shp.coords)), m),
        "Delta dual: (%s)" % ",".join(map(str, out["delta_dual"]["coords"])),
        "Nabla dual: (%s)" % ",".join(map(str, out["nabla_dual"]["coords"])),
    ])
    emit(args, text, out)


def cmd_socle(args):
    w = parse_weight(args)
    tau = S.cosocle_nabla(w)
    tau2 = S.socle_delta(w)
    emit(args,
         "cosocle of Nabla: L(%s)\nsocle of Delta:   L(%s)"
         % (",".join(map(str, tau.coords)), ",".join(map(str, tau2.coords))),
         {"cosocle_nabla": tau.to_json(), "socle_delta": tau2.to_json()})


def cmd_block(args):
    w = parse_weight(args)
    label = B.block_of(w, args.parity)
    emit(args, "(%d, %s)  kappa=%d q=%d" % (label.p, label.sign,
                                            W.kappa(w), W.q_parity(w)),
         {"p": label.p, "sign": label.sign, "kappa": W.kappa(w),
          "q": W.q_parity(w)})


def cmd_dims(args):
    w = parse_weight(args)
    thin, thick = W.kac_dims(w)
    emit(args, "gl dim %d, thin Kac %d, thick Kac %d" % (W.gl_dim(w), thin, thick),
         {"gl": W.gl_dim(w), "thin": thin, "thick": thick})


def cmd_verify(args):
    win = args.window or default_window(args.n)
    reports = run_suite(args.suite, args.n, win)
    fails = report_failures(reports)
    if args.format == "json" or fails:
        print(json.dumps({"reports": reports, "failures": fails},
                         indent=2, sort_keys=True, default=_json_default))
    else:
        for rep in reports:
            for check in rep["checks"]:
                print("ok %s/%s (%d checked)" % (rep["suite"],
                                                 check["relation"],
                                                 check["checked"]))
    return 1 if fails else 0


def _json_default(obj):
    if isinstance(obj, W.Weight):
        return obj.to_json()
    if hasattr(obj, "_asdict"):
        return obj._asdict()
    raise TypeError("not JSON serializable: %r" % (obj,))


def build_parser():
    p = argparse.ArgumentParser(prog="pkit", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, weight=True, other=False, k=False, family=False,
               basis=False, parity=False, suite=False):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--window", type=parse_window, default=None)
        sp.add_argument("--format", choices=("ascii", "json"), default="ascii")
        sp.add_argument("--rho-shifted", action="store_true",
                        help="interpret weights as ball positions")
        if weight:
            sp.add_argument("--weight", required=True)
        if other:
            sp.add_argument("--other", required=True)
        if k:
            sp.add_argument("--k", type=int, default=None)
        if family:
            sp.add_argument("--family", choices=("delta", "nabla"),
                            default="delta")
        if basis:
            sp.add_argument("--basis",
                            choices=("delta", "nabla", "proj", "simple"),
                            default="delta")
        if parity:
            sp.add_argument("--parity", type=int, choices=(0, 1), default=0)
        if suite:
            sp.add_argument("--suite", default="all",
                            choices=("arrows", "bgg", "tl", "proj", "duality",
                                     "socle", "blocks", "all"))

    handlers = {}

    sp = sub.add_parser("diagram"); common(sp); handlers["diagram"] = cmd_diagram
    sp = sub.add_parser("arrows"); common(sp); handlers["arrows"] = cmd_arrows
    sp = sub.add_parser("proj"); common(sp); handlers["proj"] = cmd_proj
    sp = sub.add_parser("decomp"); common(sp, family=True); handlers["decomp"] = cmd_decomp
    sp = sub.add_parser("hom"); common(sp, other=True); handlers["hom"] = cmd_hom
    sp = sub.add_parser("translate"); common(sp, k=True, basis=True, parity=True)
    handlers["translate"] = cmd_translate
    sp = sub.add_parser("dual"); common(sp); handlers["dual"] = cmd_dual
    sp = sub.add_parser("socle"); common(sp); handlers["socle"] = cmd_socle
    sp = sub.add_parser("block"); common(sp, parity=True); handlers["block"] = cmd_block
    sp = sub.add_parser("dims"); common(sp); handlers["dims"] = cmd_dims
    sp = sub.add_parser("verify"); common(sp, weight=False, suite=True)
    handlers["verify"] = cmd_verify

    return p, handlers


def main(argv=None) -> int:
    parser, handlers = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = handlers[args.cmd](args)
    except SystemExit2 as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())

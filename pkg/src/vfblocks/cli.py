"""Command-line front end.  TSV on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 domain or input error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import curve, factorize, fusion, grading, qgrass
from .polarize import covering, smith
from .weights import Weight


class InputError(ValueError):
    pass


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def load_graph(spec: str, r: int) -> curve.DualGraph:
    builtin = curve.builtin_graphs()
    if spec in builtin:
        return builtin[spec]
    path = Path(spec)
    if not path.exists():
        raise InputError(f"{spec}: not a file or builtin graph ({', '.join(sorted(builtin))})")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: line {exc.lineno}: {exc.msg}") from None
    return graph_from_json(doc, r, spec)


def _weight_from_json(w, r: int) -> Weight:
    """A weight given as a JSON list of ints or as a comma-separated string."""
    if isinstance(w, list):
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in w):
            raise ValueError(f"expected integer parts, got {w}")
        w = ",".join(map(str, w))
    return Weight.parse(str(w), r)


def graph_from_json(doc, r: int, source: str = "<graph>") -> curve.DualGraph:
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object")
    verts = []
    for i, v in enumerate(doc.get("vertices", [])):
        if not isinstance(v, dict) or "id" not in v or "genus" not in v:
            raise InputError(f"{source}: vertices[{i}]: need fields 'id' and 'genus'")
        if not isinstance(v["genus"], int):
            raise InputError(f"{source}: vertices[{i}].genus: expected an integer")
        verts.append((str(v["id"]), v["genus"]))
    edges = []
    for i, e in enumerate(doc.get("edges", [])):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"{source}: edges[{i}]: expected a pair of vertex ids")
        edges.append((str(e[0]), str(e[1])))
    legs = []
    for i, leg in enumerate(doc.get("legs", [])):
        if not isinstance(leg, dict) or "vertex" not in leg or "weight" not in leg:
            raise InputError(f"{source}: legs[{i}]: need fields 'vertex' and 'weight'")
        try:
            w = _weight_from_json(leg["weight"], r)
        except ValueError as exc:
            raise InputError(f"{source}: legs[{i}].weight: {exc}") from None
        legs.append((str(leg["vertex"]), w))
    try:
        return curve.DualGraph(tuple(verts), tuple(edges), tuple(legs), doc.get("name", source))
    except curve.GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def _labeling_str(lab: curve.EdgeLabeling) -> str:
    return ";".join(str(w) for w in lab.labels) or "-"


def cmd_fusion(args, out) -> None:
    lam = Weight.parse(args.lhs, args.r)
    mu = Weight.parse(args.rhs, args.r)
    fn = fusion.fusion_rim_hook if args.algorithm == "rim-hook" else fusion.fusion_affine_fold
    for w, c in fn(args.r, args.level, lam, mu).items():
        print(f"{w}\t{c}", file=out)


def _table(args, out, root_lattice: bool) -> None:
    g = load_graph(args.graph, args.r)
    rows = factorize.decomposition_table(g, args.r, args.level, root_lattice=root_lattice)
    for row in rows:
        print(f"{_labeling_str(row.labeling)}\t{row.contribution}", file=out)
    print(f"total\t{sum(r.contribution for r in rows)}", file=out)


def cmd_cb_rank(args, out) -> None:
    if args.table:
        _table(args, out, root_lattice=False)
        return
    g = load_graph(args.graph, args.r)
    print(factorize.rank_nodal(g, args.r, args.level), file=out)


def cmd_cb_table(args, out) -> None:
    _table(args, out, root_lattice=args.root_lattice)


def cmd_hilbert(args, out) -> None:
    g = load_graph(args.graph, args.r)
    for k, v in enumerate(grading.hilbert_function(g, args.r, args.l0, args.max)):
        print(f"{k}\t{v}", file=out)


def _read_values(path: str) -> list[Fraction]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    vals = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for tok in line.split("#", 1)[0].replace(",", " ").split():
            try:
                vals.append(Fraction(tok))
            except ValueError:
                raise InputError(f"{path}: line {lineno}: bad value {tok!r}") from None
    return vals


def cmd_qp_fit(args, out) -> None:
    q = grading.qp_fit(_read_values(args.input), args.max_period, args.max_degree)
    print(f"period\t{q.period}", file=out)
    print(f"degree\t{q.degree}", file=out)
    for i in range(q.period):
        print(f"p{i}\t{q.constituent_str(i)}", file=out)


def _load_labeling(path: str, r: int) -> curve.EdgeLabeling:
    # inline JSON is accepted as well as a file path
    try:
        text = path if path.lstrip()[:1] in "[{" else Path(path).read_text()
        doc = json.loads(text)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if isinstance(doc, dict):
        doc = doc.get("labels")
    if not isinstance(doc, list):
        raise InputError(f"{path}: expected a list of weights, one per edge")
    labels = []
    for i, w in enumerate(doc):
        try:
            labels.append(_weight_from_json(w, r))
        except ValueError as exc:
            raise InputError(f"{path}: labels[{i}]: {exc}") from None
    return curve.EdgeLabeling(tuple(labels))


def cmd_cover_pair(args, out) -> None:
    g = load_graph(args.graph, args.r)
    lab = _load_labeling(args.labeling, args.r)
    choice = "midpoint" if args.midpoint else args.choice
    cp = covering.build_covering_pair(g, args.level, lab, choice)
    for (i, side), e in sorted(cp.epsilons.items()):
        print(f"eps\t{i}{side}\t{fmt(e)}", file=out)
    for v in g.vertex_ids:
        flag = "integral" if cp.integral[v] else "fractional"
        print(f"component\t{v}\t{fmt(cp.degrees[v])}\t{fmt(cp.a_weights[v])}\t{flag}", file=out)
    if cp.trace is not None:
        print("trace\t" + ",".join(map(str, cp.trace)), file=out)


def cmd_pole_check(args, out) -> None:
    mu = Weight.parse(args.mu)
    alpha, beta = _int_list(args.alpha), _int_list(args.beta)
    print(f"bound\t{fmt(covering.openeye_bound(mu.rank_r, mu, alpha, beta, args.m))}", file=out)
    if args.level is None:
        return
    eps = Fraction(args.epsilon) if args.epsilon is not None else None
    if eps is None:
        from .weights import epsilon_pair

        pair = epsilon_pair(mu, args.level)
        eps = pair.high if args.m >= 0 else pair.low
    row = covering.node_ledger(
        mu.rank_r, args.level, mu, eps, max(args.m, 0), max(-args.m, 0), alpha, beta
    )
    print(f"type1\t{fmt(row.type1)}", file=out)
    print(f"type2\t{fmt(row.type2)}", file=out)
    print(f"type3\t{fmt(row.type3)}", file=out)
    print(f"total\t{fmt(row.total)}", file=out)
    print(f"certified\t{'yes' if row.total <= 0 else 'no'}", file=out)


def cmd_qh(args, out) -> None:
    if args.cls is None:
        base = qgrass.sigma_I(args.k, args.n)
    else:
        base = qgrass.QClass.schubert(args.k, args.n, _int_list(args.cls))
    res = qgrass.power_with_qdegrees(args.k, args.n, base, args.power)
    for (p, c), v in res.terms.items():
        print(f"{','.join(map(str, p))}\tq^{c}\t{v}", file=out)


def cmd_hilbert_basis(args, out) -> None:
    cone = grading.ConeSpec(args.components, args.genus, Fraction(args.r0))
    hb = grading.hilbert_basis(cone, args.bound)
    for (d, l), a in zip(hb.generators, hb.a_weights):
        print(",".join(map(str, d + (l,))) + "\t" + ",".join(fmt(x) for x in a), file=out)


def cmd_snf(args, out) -> None:
    try:
        text = Path(args.matrix).read_text()
    except OSError as exc:
        raise InputError(f"{args.matrix}: {exc.strerror}") from None
    M = smith.parse_matrix(text)
    res = smith.smith_normal_form(M)
    for d in res.diagonal:
        print(f"diag\t{d}", file=out)
    alpha, beta = smith.pole_exponents(M, args.shift)
    print("alpha\t" + ",".join(map(str, alpha)), file=out)
    print("beta\t" + ",".join(map(str, beta)), file=out)


def cmd_chern_sl2(args, out) -> None:
    a, b = grading.chern_sl2_coefficients(args.m)
    print(f"alpha\t{fmt(a)}", file=out)
    print(f"beta\t{fmt(b)}", file=out)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _rank(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"rank must be >= 2, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vfblocks", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fusion", help="fusion product of two weights")
    s.add_argument("--r", type=_rank, required=True)
    s.add_argument("--level", type=_nonneg, required=True)
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--algorithm", choices=["affine-fold", "rim-hook"], default="affine-fold")
    s.set_defaults(func=cmd_fusion)

    for name, func, helptext in (
        ("cb-rank", cmd_cb_rank, "conformal-block rank on a dual graph"),
        ("cb-table", cmd_cb_table, "per-labeling decomposition table"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--graph", required=True, help="JSON file or builtin name")
        s.add_argument("--r", type=_rank, required=True)
        s.add_argument("--level", type=_nonneg, required=True)
        if name == "cb-rank":
            s.add_argument("--table", action="store_true")
        else:
            s.add_argument("--root-lattice", action="store_true", help="drop filtered labelings")
        s.set_defaults(func=func)

    s = sub.add_parser("hilbert", help="ranks at levels k*l0")
    s.add_argument("--graph", required=True)
    s.add_argument("--r", type=_rank, required=True)
    s.add_argument("--l0", type=_nonneg, required=True)
    s.add_argument("--max", type=_nonneg, required=True)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("qp-fit", help="fit a quasi-polynomial to a sequence")
    s.add_argument("--input", required=True, help="file of values, or - for stdin")
    s.add_argument("--max-period", type=int, default=4)
    s.add_argument("--max-degree", type=int, default=6)
    s.set_defaults(func=cmd_qp_fit)

    s = sub.add_parser("cover-pair", help="covering-pair polarization for a labeling")
    s.add_argument("--graph", required=True)
    s.add_argument("--r", type=_rank, required=True)
    s.add_argument("--level", type=_nonneg, required=True)
    s.add_argument("--labeling", required=True, help="JSON list of weights, inline or as a file")
    s.add_argument("--midpoint", action="store_true")
    s.add_argument("--choice", choices=["low", "high"], default="low")
    s.set_defaults(func=cmd_cover_pair)

    s = sub.add_parser("pole-check", help="pole-order bound at one node")
    s.add_argument("--mu", required=True)
    s.add_argument("--alpha", default="")
    s.add_argument("--beta", default="")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--level", type=_nonneg)
    s.add_argument("--epsilon")
    s.set_defaults(func=cmd_pole_check)

    s = sub.add_parser("qh", help="quantum power in QH*(Gr(k,n))")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--power", type=_nonneg, required=True)
    s.add_argument("--class", dest="cls", help="partition, default the row (n-k)")
    s.set_defaults(func=cmd_qh)

    s = sub.add_parser("hilbert-basis", help="semigroup generators of the polarization cone")
    s.add_argument("--components", type=int, required=True)
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--r0", default="0")
    s.add_argument("--bound", type=_nonneg, required=True)
    s.set_defaults(func=cmd_hilbert_basis)

    s = sub.add_parser("snf", help="Smith normal form over Q[t]")
    s.add_argument("--matrix", required=True)
    s.add_argument("--shift", type=int, default=0)
    s.set_defaults(func=cmd_snf)

    s = sub.add_parser("chern-sl2", help="evaluate the sl2 first-Chern-class coefficients")
    s.add_argument("--m", type=_nonneg, required=True)
    s.set_defaults(func=cmd_chern_sl2)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ValueError, ArithmeticError) as exc:
        print(f"vfblocks {args.command}: {exc}", file=err)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every subcommand prints an aligned text report, or with ``--json`` a single
JSON object ``{schema_version, command, inputs, status, payload}``.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import billey_kumar as bk
from . import hessenberg as hs
from . import paving_matrices as pm
from . import schubert_intersect as si
from .adjoint_oracle import check_dimension_formula, dimension_identity_holds
from .config import SCHEMA_VERSION, OracleConfig
from .rootsys import InvalidLieType, InvalidRoot, LieType, RootSystem, format_root, root_system
from .weyl import (EnumerationTooLarge, WeylElement, all_reduced_words, bruhat_leq,
                   enumerate_weyl, from_word, longest_element)


class DomainError(Exception):
    pass


Report = tuple[dict[str, Any], list[str]]  # JSON payload, text lines


# -- argument helpers ---------------------------------------------------------


def _lie_type(args) -> LieType:
    return LieType.parse(args.type, args.rank)


def _rs(args) -> RootSystem:
    return root_system(_lie_type(args))


def _word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise DomainError(f"{text!r} is not a comma-separated word") from None


def _element(rs: RootSystem, text: str | None) -> WeylElement:
    if text is None or text.strip() == "w0":
        return longest_element(rs)
    word = _word(text)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise DomainError(f"letter {i} is not in 1..{rs.rank}")
    return from_word(rs, word)


def _subset(rs: RootSystem, text: str | None) -> frozenset[int]:
    if text is None:
        return frozenset(range(1, rs.rank + 1))
    try:
        J = si.parse_subset(text)
    except ValueError:
        raise DomainError(f"{text!r} is not a comma-separated subset") from None
    if any(not 1 <= j <= rs.rank for j in J):
        raise DomainError(f"subset {text!r} leaves 1..{rs.rank}")
    return J


def _hessenberg(rs: RootSystem, args) -> hs.HessenbergSpace:
    if getattr(args, "hessenberg_file", None):
        return hs.load(rs, args.hessenberg_file)
    if getattr(args, "full_flag", False):
        return hs.full_flag(rs)
    return hs.peterson(rs)


def _words(ws: Sequence[WeylElement]) -> list[str]:
    return [",".join(map(str, w.normal_word())) or "e" for w in ws]


def _table(rows: Sequence[Sequence[Any]], header: Sequence[str]) -> list[str]:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    return ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in cells]


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


# -- subcommands --------------------------------------------------------------


def cmd_roots(args) -> Report:
    rs = _rs(args)
    groups = {h: [format_root(rs.roots[k]) for k in rs.by_height[h]] for h in range(1, rs.max_height + 1)}
    payload = {"type": rs.name, "n_positive": rs.n_positive, "max_height": rs.max_height,
               "by_height": {str(h): g for h, g in groups.items()}}
    if args.by_height:
        lines = [f"{rs.name}: {rs.n_positive} positive roots in {rs.max_height} height groups"]
        lines += [f"  height {h:>2}: {' '.join(g)}" for h, g in groups.items()]
    else:
        lines = [format_root(r) for r in rs.positive]
    return payload, lines


def cmd_weyl(args) -> Report:
    rs = _rs(args)
    w = _element(rs, args.word)
    payload: dict[str, Any] = {"word": list(w.normal_word()), "length": w.length(),
                               "inverse": list(w.inverse().normal_word()),
                               "inversions": [format_root(rs.roots[k]) for k in w.inversion_set()]}
    lines = [f"normal word : {_words([w])[0]}", f"length      : {w.length()}",
             f"inverse     : {_words([w.inverse()])[0]}"]
    if args.compare is not None:
        u = _element(rs, args.compare)
        below, above = bruhat_leq(u, w), bruhat_leq(w, u)
        payload["bruhat"] = {"other_below": below, "other_above": above}
        lines.append(f"other <= w  : {below}")
        lines.append(f"w <= other  : {above}")
    if args.all_words:
        words = all_reduced_words(w, cap=args.cap)
        payload["reduced_words"] = [list(x) for x in words]
        lines.append(f"reduced words ({len(words)}):")
        lines += ["  " + ",".join(map(str, x)) for x in words]
    return payload, lines


def cmd_billey(args) -> Report:
    rs = _rs(args)
    v, w = _element(rs, args.v), _element(rs, args.w)
    word = _word(args.word) if args.word else None
    p = bk.billey_naive(rs, v, word or w.normal_word()) if args.naive else bk.billey(rs, v, w, word)
    payload = {"v": list(v.normal_word()), "w": list(w.normal_word()),
               "degree": p.degree(), "polynomial": p.serialize()}
    return payload, [f"p_v(w) = {p.pretty()}"]


def cmd_kumar(args) -> Report:
    rs = _rs(args)
    if args.J is not None:
        J = _subset(rs, args.J)
        sub, v, w = bk.parabolic_pair(rs, J, increasing=args.increasing)
    else:
        sub, v, w = rs, _element(rs, args.v), _element(rs, args.w)
    if not bruhat_leq(v, w):
        raise DomainError("v is not below w")
    roots = bk.kumar_roots(sub, v, w)
    smooth = bk.kumar_smooth(sub, v, w)
    lhs = bk.billey(sub, v, w)
    factors = [format_root(sub.roots[k]) for k in roots]
    payload = {"smooth": smooth, "v": list(v.normal_word()), "w_length": w.length(),
               "billey": lhs.serialize(), "kumar_factors": factors}
    if args.J is not None:
        payload["prediction"] = bk.peterson_smooth(rs, J)
    lines = ["smooth" if smooth else "singular",
             f"  billey  : {lhs.pretty()}",
             f"  kumar   : product of {len(factors)} roots: {' '.join(factors)}"]
    if "prediction" in payload:
        lines.append(f"  blocks  : {'smooth' if payload['prediction'] else 'singular'} by shape")
    return payload, lines


def cmd_blocks(args) -> Report:
    rs = _rs(args)
    J = _subset(rs, args.J)
    rows, out = [], []
    for b in bk.blocks(rs, J):
        emb = bk.classically_embeddable(b)
        verts = si.format_subset(b.vertices)
        rows.append((verts, "yes" if emb else "no"))
        out.append({"vertices": sorted(b.vertices), "classically_embeddable": emb})
    pred = bk.peterson_smooth(rs, J)
    lines = _table(rows, ("block", "classical")) + [f"prediction: {'smooth' if pred else 'singular'}"]
    return {"blocks": out, "smooth_prediction": pred}, lines


def cmd_cells(args) -> Report:
    rs = _rs(args)
    H = _hessenberg(rs, args)
    if args.w is not None:
        w = _element(rs, args.w)
        ne = hs.cell_nonempty(H, w)
        dim = hs.cell_dimension(H, w) if ne else None
        return ({"w": list(w.normal_word()), "nonempty": ne, "dimension": dim},
                [f"nonempty  : {ne}", f"dimension : {dim}"])
    pts = hs.fixed_points(H)
    rows = [(_words([w])[0], hs.cell_dimension(H, w)) for w in pts]
    betti = hs.betti_numbers(H)
    payload = {"cells": [{"w": r[0], "dimension": r[1]} for r in rows], "betti": betti}
    return payload, _table(rows, ("w", "dim")) + [f"betti: {betti}"]


def cmd_peterson(args) -> Report:
    rs = _rs(args)
    H = hs.peterson(rs)
    fps = hs.peterson_fixed_points(rs)
    rows, data = [], []
    for J in sorted(fps, key=lambda s: (len(s), sorted(s))):
        w = fps[J]
        entry = {"J": si.format_subset(J), "w_J": _words([w])[0], "dimension": hs.cell_dimension(H, w)}
        row = [entry["J"] or "-", entry["w_J"], entry["dimension"]]
        if args.smooth:
            entry["smooth_prediction"] = bk.peterson_smooth(rs, J)
            if args.kumar:
                entry["kumar_smooth"] = bk.parabolic_kumar_smooth(rs, J)
            row += [entry["smooth_prediction"]] + ([entry["kumar_smooth"]] if args.kumar else [])
        rows.append(row)
        data.append(entry)
    header = ["J", "w_J", "dim"] + (["shape"] if args.smooth else []) + (["kumar"] if args.smooth and args.kumar else [])
    betti = hs.betti_numbers(H)
    return {"fixed_points": data, "betti": betti}, _table(rows, header) + [f"betti: {betti}"]


def cmd_oracle(args) -> Report:
    rs = _rs(args)
    H = _hessenberg(rs, args)
    cfg = OracleConfig(seed=args.seed)
    W = enumerate_weyl(rs, bound=args.bound)
    bad, identity_ok, nonempty = [], 0, 0
    for n, w in enumerate(W, 1):
        chk = check_dimension_formula(H, w, seed=cfg.seed)
        if not chk.agrees:
            bad.append(_words([w])[0])
        nonempty += chk.nonempty_formula
        identity_ok += dimension_identity_holds(H, w) == chk.nonempty_formula
        if n % 500 == 0:
            _progress(f"oracle: {n}/{len(W)}")
    payload = {"elements": len(W), "nonempty": nonempty, "disagreements": bad,
               "identity_matches_nonempty": identity_ok}
    lines = [f"elements checked : {len(W)}", f"nonempty cells   : {nonempty}",
             f"disagreements    : {len(bad)}",
             f"identity <=> nonempty on {identity_ok}/{len(W)}"]
    return payload, lines


def cmd_appendix(args) -> Report:
    lt = _lie_type(args)
    rs = root_system(lt)
    if lt.is_classical:
        reports = pm.verify_classical(lt)
    else:
        reports = pm.verify_exceptional(lt)
    rows, data = [], []
    for r in reports:
        ok = r.full_rank and (r.det != 0 if lt.is_classical else True)
        data.append({"height": r.height, "shape": list(r.shape), "rank": r.rank, "det": r.det,
                     "triangular": r.triangular, "pass": ok})
        rows.append((r.height, f"{r.shape[0]}x{r.shape[1]}", r.rank, r.det, "pass" if ok else "FAIL"))
    lines = _table(rows, ("level", "shape", "rank", "det", "status"))
    payload: dict[str, Any] = {"type": rs.name, "levels": data}
    if args.verify:
        spots = [c for c in pm.SPOT_CHECKS if c.lie_type == rs.name]
        results = [pm.run_spot_check(c) for c in spots]
        payload["spot_checks"] = [{"height": r.check.height, "abs_det": abs(r.det), "pass": r.passed}
                                  for r in results]
        lines.append(f"tabulated spot checks: {sum(r.passed for r in results)}/{len(results)} pass")
        if not all(d["pass"] for d in data) or not all(r.passed for r in results):
            raise DomainError("appendix verification failed:\n" + "\n".join(lines))
    return payload, lines


def cmd_intersect(args) -> Report:
    rs = _rs(args)
    if args.diagonal is not None:
        rep = si.diagonal_matrix_structure(rs, args.diagonal)
        labels = [si.format_subset(J) or "-" for J in rep.subsets]
        rows = [[lab] + row for lab, row in zip(labels, rep.matrix)]
        payload = {"k": rep.k, "subsets": labels, "matrix": rep.matrix, "identity": rep.is_identity,
                   "fixed_points": {f"{j}|{k}": v for (j, k), v in sorted(rep.fixed_points.items())}}
        return payload, _table(rows, ["J\\K"] + labels) + [f"identity: {rep.is_identity}"]
    J, K = _subset(rs, args.J), _subset(rs, args.K)
    fp = si.peterson_intersection_fixed_points(rs, J, K)
    payload = {"J": si.format_subset(J), "K": si.format_subset(K), "fixed_points": fp.words()}
    return payload, [f"{len(fp)} fixed point(s)"] + ["  " + w for w in _words(list(fp))]


COMMANDS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "roots": cmd_roots, "weyl": cmd_weyl, "billey": cmd_billey, "kumar": cmd_kumar,
    "blocks": cmd_blocks, "cells": cmd_cells, "peterson": cmd_peterson, "oracle": cmd_oracle,
    "appendix": cmd_appendix, "intersect": cmd_intersect,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="family letter or full name, e.g. A or E6")
    common.add_argument("--rank", type=int, default=None)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    hess = argparse.ArgumentParser(add_help=False)
    group = hess.add_mutually_exclusive_group()
    group.add_argument("--hessenberg-file", help="negative roots of M_H, one signed string per line")
    group.add_argument("--peterson", action="store_true", help="Peterson space (default)")
    group.add_argument("--full-flag", action="store_true")

    p = argparse.ArgumentParser(prog="peterson-paving", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("roots", parents=[common], help="positive roots")
    s.add_argument("--by-height", action="store_true")
    s = sub.add_parser("weyl", parents=[common], help="length, Bruhat comparison, reduced words")
    s.add_argument("--word", default="e", help="comma-separated word, or w0")
    s.add_argument("--compare", default=None)
    s.add_argument("--all-words", action="store_true")
    s.add_argument("--cap", type=int, default=1000)
    s = sub.add_parser("billey", parents=[common], help="p_v(w)")
    s.add_argument("--v", required=True)
    s.add_argument("--w", default=None, help="defaults to w0")
    s.add_argument("--word", default=None, help="reduced word for w to sum along")
    s.add_argument("--naive", action="store_true", help="subset enumeration instead of the DP")
    s = sub.add_parser("kumar", parents=[common], help="smoothness test")
    s.add_argument("--J", default=None, help="parabolic pair (v_J, w_J) for this subset")
    s.add_argument("--increasing", action="store_true", help="use u_J instead of v_J")
    s.add_argument("--v", default="e")
    s.add_argument("--w", default=None)
    s = sub.add_parser("blocks", parents=[common], help="blocks of J and their shapes")
    s.add_argument("--J", default=None)
    s = sub.add_parser("cells", parents=[common, hess], help="Hessenberg cells")
    s.add_argument("--w", default=None)
    s = sub.add_parser("peterson", parents=[common], help="Peterson fixed points and Betti numbers")
    s.add_argument("--smooth", action="store_true", help="add the smoothness prediction per J")
    s.add_argument("--kumar", action="store_true", help="with --smooth, also run Kumar's test")
    s = sub.add_parser("oracle", parents=[common, hess], help="adjoint elimination sweep")
    s.add_argument("--seed", type=int, default=OracleConfig().seed)
    s.add_argument("--bound", type=int, default=None)
    s = sub.add_parser("appendix", parents=[common], help="paving matrix ranks and determinants")
    s.add_argument("--verify", action="store_true", help="also check tabulated determinants")
    s = sub.add_parser("intersect", parents=[common], help="fixed points of Peterson/Schubert intersections")
    s.add_argument("--J", default=None)
    s.add_argument("--K", default=None)
    s.add_argument("--diagonal", type=int, default=None, metavar="K")
    return p


def _inputs(args: argparse.Namespace) -> dict[str, Any]:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("json", "command")}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    envelope: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": args.command,
                                "inputs": _inputs(args)}
    try:
        payload, lines = COMMANDS[args.command](args)
    except (DomainError, InvalidLieType, InvalidRoot, hs.InvalidHessenbergSpace,
            EnumerationTooLarge, bk.NotBelow, bk.WordTooLong, pm.RibbonDataError,
            ValueError, OSError) as exc:
        if args.json:
            envelope.update(status="error", message=str(exc), payload=None)
            print(json.dumps(envelope, sort_keys=True))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope.update(status="ok", payload=payload)
        print(json.dumps(envelope, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line front end.

Every command emits deterministic output: tables are tab-separated with
a header row, JSON is sorted and indented, SVG and presentation text are
byte-stable.  Exit codes: 0 success, 1 verification or consistency
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .chains import all_cells, build_complex, complex_to_json
from .geometry import count_top_simplices, picture_stats, render_picture_svg
from .homology import (
    InvalidComplexError,
    betti_fast_table,
    euler_characteristic,
    homology_of,
)
from .presentation import (
    export_gap,
    g0_presentation,
    h1_data,
    u_presentation,
)
from .quiver import (
    ConsistencyError,
    Root,
    SignVector,
    all_positive_roots,
    projective_root,
)
from .ring import dual_block_basis, ring_rank, ring_to_json
from .verify import all_passed, verify_orientation
from .weights import (
    cut_set_cell,
    degree,
    enumerate_admissible_weights,
    enumerate_basic_weights,
    generic_decomposition,
    is_basic,
    parse_weight,
    resolution_set,
)

MAX_N = 12
_SWEEP_COMMANDS = ("homology", "cells", "clusters", "verify")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _table_text(rows: Sequence[Sequence]) -> str:
    return "\n".join("\t".join(str(c) for c in row) for row in rows) + "\n"


def _resolve_eps(args, parser) -> SignVector:
    n = getattr(args, "n", None)
    text = getattr(args, "eps", None)
    try:
        if text:
            eps = SignVector.parse(text, n=n)
        elif n is not None:
            eps = SignVector.straight(n)
        else:
            parser.error("one of --n or --eps is required")
        if not 1 <= eps.n <= MAX_N:
            parser.error(f"n={eps.n} out of range 1..{MAX_N}")
        return eps
    except ValueError as exc:
        parser.error(str(exc))


def _require_n(args, parser) -> int:
    if args.n is None:
        parser.error("--n is required")
    if not 1 <= args.n <= MAX_N:
        parser.error(f"n={args.n} out of range 1..{MAX_N}")
    return args.n


def _worker_count(jobs: int, requested: int | None) -> int:
    cap = os.environ.get("QUIVERPIC_THREADS")
    limit = jobs
    if requested:
        limit = min(limit, requested)
    if cap:
        try:
            limit = min(limit, int(cap))
        except ValueError:
            pass
    return max(1, min(limit, os.cpu_count() or 1))


def cmd_roots(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    n = eps.n
    projectives = {projective_root(eps, i): i for i in range(1, n + 1)}
    if args.output == "json":
        data = {
            "n": n,
            "eps": str(eps),
            "roots": [
                {
                    "root": [r.i, r.j],
                    "coords": list(r.coords(n)),
                    "projective": projectives.get(r),
                }
                for r in all_positive_roots(n)
            ],
        }
        sys.stdout.write(_json_text(data))
    else:
        rows = [("root", "coords", "projective")]
        for r in all_positive_roots(n):
            p = projectives.get(r)
            rows.append(
                (
                    str(r),
                    ",".join(map(str, r.coords(n))),
                    f"p_{p}" if p else "",
                )
            )
        sys.stdout.write(_table_text(rows))
    return 0


def _cell_counts(eps: SignVector) -> list[int]:
    cells = all_cells(eps)
    return [len(cells.get(k, ())) for k in range(eps.n + 1)]


def cmd_cells(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    counts = _cell_counts(eps)
    if args.output == "json":
        data = {
            "n": eps.n,
            "eps": str(eps),
            "counts": counts,
            "total": sum(counts),
            "euler": euler_characteristic(eps),
        }
        sys.stdout.write(_json_text(data))
    else:
        rows = [("dim", "cells")]
        rows.extend((k, c) for k, c in enumerate(counts))
        rows.append(("total", sum(counts)))
        sys.stdout.write(_table_text(rows))
    return 0


def _homology_payload(eps: SignVector, method: str) -> dict:
    n = eps.n
    counts = _cell_counts(eps)
    data: dict = {
        "n": n,
        "eps": str(eps),
        "method": method,
        "cells": counts,
        "euler": sum((-1) ** k * c for k, c in enumerate(counts)),
    }
    if method == "snf":
        summary = homology_of(build_complex(eps))
        data["betti"] = list(summary.betti)
        data["torsion"] = [list(t) for t in summary.torsion]
    else:
        data["betti"] = betti_fast_table(n)
    return data


def cmd_homology(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    data = _homology_payload(eps, args.method)
    if args.plot:
        from .report import save_betti_plot

        save_betti_plot(
            args.plot,
            {str(eps) or "n=1": data["betti"]},
            f"A_{eps.n} homology ranks",
        )
    if args.output == "json":
        sys.stdout.write(_json_text(data))
    else:
        rows = [("degree", "betti")]
        rows.extend((k, b) for k, b in enumerate(data["betti"]))
        sys.stdout.write(_table_text(rows))
    return 0


def cmd_weights(args, parser) -> int:
    n = _require_n(args, parser)
    if args.admissible:
        found = enumerate_admissible_weights(n)
    else:
        degrees = range(n + 1) if args.degree is None else [args.degree]
        found = [w for k in degrees for w in enumerate_basic_weights(n, k)]
    if args.degree is not None:
        found = [w for w in found if degree(w) == args.degree]
    if args.output == "json":
        data = {
            "n": n,
            "admissible_only": bool(args.admissible),
            "weights": [
                {
                    "weight": list(w),
                    "degree": degree(w),
                    "basic": is_basic(w),
                    "resolution_set": list(resolution_set(w)),
                }
                for w in found
            ],
        }
        sys.stdout.write(_json_text(data))
    else:
        rows = [("weight", "degree", "basic", "resolution_set")]
        for w in found:
            rows.append(
                (
                    ",".join(map(str, w)),
                    degree(w),
                    "yes" if is_basic(w) else "no",
                    ",".join(map(str, resolution_set(w))) or "-",
                )
            )
        sys.stdout.write(_table_text(rows))
    return 0


def _format_summands(pairs: list[tuple[Root, int]]) -> str:
    parts = []
    for root, mult in pairs:
        parts.append(str(root) if mult == 1 else f"{mult}*{root}")
    return " + ".join(parts) if parts else "0"


def cmd_decompose(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    try:
        w = parse_weight(args.weight)
    except ValueError as exc:
        parser.error(str(exc))
    if len(w) != eps.n:
        parser.error(f"weight length {len(w)} != n={eps.n}")
    cuts = None
    if args.cuts is not None:
        try:
            cuts = tuple(int(t) for t in args.cuts.replace(",", " ").split())
        except ValueError:
            parser.error(f"bad cut list {args.cuts!r}")
    try:
        if cuts is None:
            counter = generic_decomposition(eps, w)
            pairs = sorted(counter.items())
        else:
            pairs = [(r, 1) for r in cut_set_cell(eps, w, cuts)]
    except ValueError as exc:
        parser.error(str(exc))
    if args.output == "json":
        data = {
            "eps": str(eps),
            "weight": list(w),
            "cuts": list(cuts) if cuts is not None else None,
            "summands": [
                {"root": [r.i, r.j], "multiplicity": m} for r, m in pairs
            ],
        }
        sys.stdout.write(_json_text(data))
    else:
        sys.stdout.write(_format_summands(pairs) + "\n")
    return 0


def cmd_presentation(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    pres = g0_presentation(eps) if args.group == "g0" else u_presentation(eps)
    if args.output == "json":
        rank, torsion = h1_data(pres)
        data = {
            "n": eps.n,
            "eps": str(eps),
            "group": args.group,
            "generators": [[g.i, g.j] for g in pres.generators],
            "relators": [
                [[r.i, r.j, e] for r, e in rel.letters] for rel in pres.relators
            ],
            "h1": {"rank": rank, "torsion": list(torsion)},
        }
        sys.stdout.write(_json_text(data))
    else:
        sys.stdout.write(export_gap(pres, n=eps.n, eps=eps))
    return 0


def cmd_ring(args, parser) -> int:
    n = _require_n(args, parser)
    if args.output == "json":
        data = ring_to_json(n)
        if args.degree is not None:
            k = args.degree
            data = {
                "n": n,
                "degree": k,
                "rank": ring_rank(n, k),
                "basis": data["basis"].get(str(k), []),
            }
        sys.stdout.write(_json_text(data))
    else:
        max_k = (n + 1) // 2
        degrees = range(max_k + 1) if args.degree is None else [args.degree]
        rows = [("degree", "rank", "basis")]
        for k in degrees:
            basis = dual_block_basis(n, k) if k <= max_k else ()
            rows.append(
                (k, ring_rank(n, k), " , ".join(str(b) for b in basis) or "-")
            )
        sys.stdout.write(_table_text(rows))
    return 0


def cmd_complex(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    gc = build_complex(eps)
    if args.output == "json":
        sys.stdout.write(_json_text(complex_to_json(gc)))
    else:
        rows = [("degree", "cells", "boundary_entries")]
        for k in gc.dims():
            rows.append((k, gc.cell_count(k), len(gc.matrices.get(k, {}))))
        sys.stdout.write(_table_text(rows))
    return 0


def cmd_picture(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    if eps.n not in (2, 3):
        parser.error(f"picture requires n in (2, 3), got n={eps.n}")
    if args.output == "svg":
        sys.stdout.write(render_picture_svg(eps))
    elif args.output == "json":
        sys.stdout.write(_json_text(picture_stats(eps)))
    else:
        stats = picture_stats(eps)
        rows = [("quantity", "value")]
        rows.extend((key, stats[key]) for key in sorted(stats))
        sys.stdout.write(_table_text(rows))
    return 0


def _verify_rows(eps: SignVector, snf_limit: int, enum_limit: int):
    return verify_orientation(eps, snf_limit=snf_limit, enum_limit=enum_limit)


def cmd_verify(args, parser) -> int:
    eps = _resolve_eps(args, parser)
    results = _verify_rows(eps, args.snf_limit, args.enum_limit)
    ok = all_passed(results)
    if args.output == "json":
        data = {
            "n": eps.n,
            "eps": str(eps),
            "passed": ok,
            "results": [
                {"check": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        sys.stdout.write(_json_text(data))
    else:
        rows = [("check", "status", "detail")]
        for r in results:
            rows.append((r.name, "ok" if r.passed else "FAIL", r.detail))
        rows.append(("overall", "ok" if ok else "FAIL", ""))
        sys.stdout.write(_table_text(rows))
    return 0 if ok else 1


def cmd_sweep(args, parser) -> int:
    n = _require_n(args, parser)
    if n > 8 and args.command in ("homology", "verify"):
        parser.error(f"sweep {args.command} is limited to n <= 8")
    orientations = list(SignVector.all_orientations(n))
    workers = _worker_count(len(orientations), args.threads)

    def run_one(eps: SignVector) -> dict:
        if args.command == "homology":
            data = _homology_payload(eps, args.method)
            return {"eps": str(eps), "betti": data["betti"],
                    "torsion": data.get("torsion")}
        if args.command == "cells":
            return {"eps": str(eps), "counts": _cell_counts(eps)}
        if args.command == "clusters":
            return {"eps": str(eps), "top_simplices": count_top_simplices(eps)}
        results = _verify_rows(eps, args.snf_limit, args.enum_limit)
        return {
            "eps": str(eps),
            "passed": all_passed(results),
            "results": [
                {"check": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }

    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(run_one, orientations))

    invariant_key = {
        "homology": "betti",
        "cells": "counts",
        "clusters": "top_simplices",
        "verify": "passed",
    }[args.command]
    values = [rep[invariant_key] for rep in reports]
    if args.command == "verify":
        ok = all(values)
    else:
        ok = all(v == values[0] for v in values)

    if args.plot and args.command == "homology":
        from .report import save_betti_plot

        save_betti_plot(
            args.plot,
            {rep["eps"] or "n=1": rep["betti"] for rep in reports},
            f"A_{n} homology ranks by orientation",
        )

    if args.output == "json":
        data = {
            "n": n,
            "command": args.command,
            "orientations": reports,
            "invariant": ok,
        }
        sys.stdout.write(_json_text(data))
    else:
        if args.command == "verify":
            names = [r["check"] for r in reports[0]["results"]]
            rows = [("eps", *names)]
            for rep in reports:
                rows.append(
                    (
                        rep["eps"] or "-",
                        *(
                            "ok" if r["passed"] else "FAIL"
                            for r in rep["results"]
                        ),
                    )
                )
            sys.stdout.write(_table_text(rows))
            for rep in reports:
                for r in rep["results"]:
                    if not r["passed"]:
                        sys.stdout.write(
                            f"# {rep['eps']} {r['check']}: {r['detail']}\n"
                        )
        else:
            rows = [("eps", invariant_key)]
            for rep in reports:
                value = rep[invariant_key]
                text = (
                    ",".join(map(str, value))
                    if isinstance(value, list)
                    else str(value)
                )
                rows.append((rep["eps"] or "-", text))
            sys.stdout.write(_table_text(rows))
        if not ok and args.command != "verify":
            sys.stdout.write("# invariance FAILED across orientations\n")
        elif args.command != "verify":
            sys.stdout.write(
                f"# invariant across {len(orientations)} orientations\n"
            )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverpic",
        description=(
            "Exact homological and group-theoretic invariants of A_n "
            "quiver orientations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, outputs, default, help_text, eps=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, help="number of vertices")
        if eps:
            p.add_argument(
                "--eps",
                help="orientation sign string, e.g. '+-+' or 'LRL'",
            )
        p.add_argument("--output", choices=outputs, default=default)
        p.set_defaults(func=func)
        return p

    add("roots", cmd_roots, ("table", "json"), "table", "positive roots")
    add("cells", cmd_cells, ("table", "json"), "table", "cell counts")

    p = add("homology", cmd_homology, ("table", "json"), "json",
            "integer homology ranks")
    p.add_argument("--method", choices=("snf", "fast"), default="snf")
    p.add_argument("--plot", metavar="PATH", help="save a rank figure")

    p = add("weights", cmd_weights, ("table", "json"), "table",
            "basic or admissible weights", eps=False)
    p.add_argument("--degree", type=int)
    p.add_argument("--admissible", action="store_true",
                   help="list all admissible weights")

    p = add("decompose", cmd_decompose, ("table", "json"), "table",
            "generic decomposition of a weight")
    p.add_argument("--weight", required=True, help="comma-separated weight")
    p.add_argument("--cuts", help="comma-separated cut set")

    p = add("presentation", cmd_presentation, ("gap", "json"), "gap",
            "picture or unipotent group presentation")
    p.add_argument("--group", choices=("g0", "u"), default="g0")

    p = add("ring", cmd_ring, ("table", "json"), "table",
            "cohomology ring basis and ranks", eps=False)
    p.add_argument("--degree", type=int)

    add("complex", cmd_complex, ("json", "table"), "json",
        "cells and boundary matrices")
    add("picture", cmd_picture, ("svg", "json", "table"), "svg",
        "semi-invariant picture (n = 2 or 3)")

    p = add("verify", cmd_verify, ("table", "json"), "table",
            "run the consistency suite")
    p.add_argument("--snf-limit", type=int, default=6)
    p.add_argument("--enum-limit", type=int, default=9)

    p = add("sweep", cmd_sweep, ("table", "json"), "table",
            "run a command across all orientations", eps=False)
    p.add_argument("--command", required=True, choices=_SWEEP_COMMANDS)
    p.add_argument("--method", choices=("snf", "fast"), default="snf")
    p.add_argument("--threads", type=int)
    p.add_argument("--plot", metavar="PATH", help="save a rank figure")
    p.add_argument("--snf-limit", type=int, default=6)
    p.add_argument("--enum-limit", type=int, default=9)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ConsistencyError, InvalidComplexError) as exc:
        sys.stderr.write(f"consistency failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

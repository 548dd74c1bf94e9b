"""Batch experiment driver.

Subcommands: enumerate, incidences, construct {erdos2d|bichromatic|thetamk|
purdy}, verify-purdy, fit, envelope-sweep, beck3, conjecture-search.
Exit codes: 0 success / all-match, 1 verification mismatch, 2 input error.

Every table row carries the full parameter tuple and seed, and identical
config + seed produces byte-identical output whatever --jobs is set to:
rows are computed independently and merged in parameter order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .constructions import (
    ConstructionError,
    bichromatic_lower_construction,
    erdos_grid_2d,
    purdy_counterexample,
    theta_mk_construction,
)
from .formulas import FormulaDomainError, purdy_counts
from .incidence import BiArrangement, bound_envelope, count_bichromatic
from .kernel import GeometryError, Point
from .spans import (
    max_cover_plane_or_two_lines,
    max_degenerate_subset,
    is_r_degenerate,
    read_point_file,
    spanned_flats,
    write_point_file,
)

SCHEMA_TABLE = "spanflats-table/1"


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float
    points_used: int


def fit_loglog(pairs: Sequence[tuple[float, float]]) -> FitResult:
    """Ordinary least squares of log(count) against log(x)."""
    if len(pairs) < 2:
        raise GeometryError("need at least 2 pairs")
    if any(x <= 0 or y <= 0 for x, y in pairs):
        raise GeometryError("fit requires positive values")
    xs = [math.log(x) for x, _ in pairs]
    ys = [math.log(y) for _, y in pairs]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0:
        raise GeometryError("fit requires at least 2 distinct x values")
    slope = sxy / sxx
    r_squared = 1.0 if syy == 0 else (sxy * sxy) / (sxx * syy)
    return FitResult(slope, my - slope * mx, r_squared, len(pairs))


def _format_cell(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def emit_table(
    args, command: str, params: dict, columns: Sequence[str], rows: Sequence[dict]
) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(row.get(c, "")) for c in columns])
        text = buf.getvalue()
    else:
        doc = {
            "schema": SCHEMA_TABLE,
            "command": command,
            "params": params,
            "columns": list(columns),
            "rows": [{c: row.get(c) for c in columns} for row in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    _write_output(args, text)


def _write_output(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, fanned out over processes when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    except (OSError, PermissionError):
        return [fn(item) for item in items]


def _parse_range(text: str) -> list[int]:
    """"4" -> [4]; "2:5" -> [2, 3, 4, 5]."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values:
        raise GeometryError(f"empty range {text!r}")
    return values


def _parse_int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


# ---------------------------------------------------------------- enumerate


def cmd_enumerate(args) -> int:
    with open(args.points) as fh:
        points = read_point_file(fh)
    if not points:
        print("error: empty hull", file=sys.stderr)
        return 2
    result = spanned_flats(points, args.f)
    print(result.count)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(result.to_json() + "\n")
    elif args.emit_json:
        sys.stdout.write(result.to_json() + "\n")
    return 0


# ---------------------------------------------------------------- incidences


def cmd_incidences(args) -> int:
    with open(args.arrangement) as fh:
        arrangement = BiArrangement.from_json_dict(json.load(fh))
    report = count_bichromatic(arrangement)
    doc = report.to_json_dict()
    if args.envelope:
        m = max(arrangement.m, 1)
        doc["envelope"] = bound_envelope(
            m, arrangement.k, arrangement.n, arrangement.d
        ).to_json_dict()
    print(report.red_incidences)
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


# ---------------------------------------------------------------- construct


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "purdy":
        points = purdy_counterexample(args.d, args.k, args.seed)
        header = [
            "spanflats construct purdy",
            f"d={args.d} k={args.k} seed={args.seed} n={len(points)}",
        ]
        _write_output(args, write_point_file(points, header))
        return 0
    if kind == "erdos2d":
        grid = erdos_grid_2d(args.r, args.s)
        doc = {
            "schema": "spanflats-erdos2d/1",
            "provenance": {"command": "construct erdos2d", "r": args.r, "s": args.s},
            "lines": [line.serialize_rows() for line in grid.lines],
            "vertices": [p.serialize() for p in grid.vertices],
            "incidences": grid.incidences,
        }
        _write_output(args, json.dumps(doc, indent=2) + "\n")
        return 0
    if kind == "bichromatic":
        built = bichromatic_lower_construction(
            args.d, args.n, args.k, args.m, c0=Fraction(args.c0)
        )
        provenance = {
            "command": "construct bichromatic",
            "d": args.d,
            "n": args.n,
            "k": args.k,
            "m": args.m,
            "c0": str(args.c0),
        }
        doc = {
            "schema": "spanflats-biarrangement/1",
            "provenance": provenance,
            **built.arrangement.to_json_dict(),
            "predicted_red_incidences": built.red_incidences,
        }
        _write_output(args, json.dumps(doc, indent=2) + "\n")
        return 0
    if kind == "thetamk":
        built = theta_mk_construction(args.d, args.n, args.k, args.m)
        provenance = {
            "command": "construct thetamk",
            "d": args.d,
            "n": args.n,
            "k": args.k,
            "m": args.m,
        }
        doc = {
            "schema": "spanflats-biarrangement/1",
            "provenance": provenance,
            **built.arrangement.to_json_dict(),
            "predicted_red_incidences": built.red_incidences,
        }
        _write_output(args, json.dumps(doc, indent=2) + "\n")
        return 0
    raise GeometryError(f"unknown construction {kind!r}")


# ---------------------------------------------------------------- verify-purdy

_PURDY_COLUMNS = (
    "d",
    "k",
    "n",
    "seed",
    "h_formula",
    "h_enumerated",
    "g_formula",
    "g_enumerated",
    "h_match",
    "g_match",
    "g_gt_h",
    "status",
)


def _verify_purdy_cell(params: tuple[int, int, int]) -> dict:
    d, k, seed = params
    row = {"d": d, "k": k, "n": k * (d - 1), "seed": seed}
    counts = purdy_counts(d, k)
    try:
        points = purdy_counterexample(d, k, seed)
        h_enum = spanned_flats(points, d - 1).count
        g_enum = spanned_flats(points, d - 2).count
    except ConstructionError as exc:
        row.update(
            h_formula=counts.h_total,
            g_formula=counts.g_total,
            h_enumerated=-1,
            g_enumerated=-1,
            h_match=False,
            g_match=False,
            g_gt_h=counts.g_total > counts.h_total,
            status=f"error: {exc}",
        )
        return row
    row.update(
        h_formula=counts.h_total,
        h_enumerated=h_enum,
        g_formula=counts.g_total,
        g_enumerated=g_enum,
        h_match=h_enum == counts.h_total,
        g_match=g_enum == counts.g_total,
        g_gt_h=counts.g_total > counts.h_total,
        status="ok",
    )
    return row


def cmd_verify_purdy(args) -> int:
    d_values = _parse_range(args.d_range)
    k_values = _parse_range(args.k_range)
    if min(d_values) < 4:
        print("error: d >= 4 required", file=sys.stderr)
        return 2
    if min(k_values) < 2:
        print("error: k >= 2 required", file=sys.stderr)
        return 2
    cells = [(d, k, args.seed) for d in d_values for k in k_values]
    rows = pmap(_verify_purdy_cell, cells, args.jobs)
    emit_table(
        args,
        "verify-purdy",
        {"d_range": args.d_range, "k_range": args.k_range, "seed": args.seed},
        _PURDY_COLUMNS,
        rows,
    )
    ok = all(r["status"] == "ok" and r["h_match"] and r["g_match"] for r in rows)
    return 0 if ok else 1


# ---------------------------------------------------------------- fit


def _read_series(path: str) -> list[tuple[float, float]]:
    pairs = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise GeometryError(f"line {lineno}: expected two values, got {line!r}")
            try:
                pairs.append((float(parts[0]), float(parts[1])))
            except ValueError as exc:
                raise GeometryError(f"line {lineno}: {exc}") from exc
    return pairs


def cmd_fit(args) -> int:
    pairs = _read_series(args.series)
    result = fit_loglog(pairs)
    row = {
        "slope": result.slope,
        "intercept": result.intercept,
        "r_squared": result.r_squared,
        "points_used": result.points_used,
    }
    emit_table(args, "fit", {"series": args.series}, tuple(row), [row])
    return 0


# ---------------------------------------------------------------- envelope-sweep

_SWEEP_COLUMNS = (
    "step",
    "construction",
    "d",
    "n_requested",
    "k_frac",
    "p",
    "n",
    "k",
    "m",
    "red_measured",
    "term_mixed",
    "term_kn",
    "term_m",
    "envelope",
    "ratio",
    "dominant",
    "seed",
    "status",
)


def _envelope_row(params: tuple) -> dict:
    construction, d, step, n_req, k_frac, p, seed = params
    row = {
        "step": step,
        "construction": construction,
        "d": d,
        "n_requested": n_req,
        "k_frac": k_frac,
        "p": p,
        "seed": seed,
        "status": "ok",
    }
    k = max(2, int(n_req * k_frac))
    try:
        if construction == "bichromatic":
            built = bichromatic_lower_construction(d, n_req, k, m=p * n_req ** (d - 2))
            arrangement = built.arrangement
        else:
            built = theta_mk_construction(d, n_req, k, m=p ** (d - 2))
            arrangement = built.arrangement
        report = count_bichromatic(arrangement)
        env = bound_envelope(arrangement.m, arrangement.k, arrangement.n, d)
    except (ConstructionError, GeometryError) as exc:
        row.update(
            n=-1, k=k, m=-1, red_measured=-1, term_mixed=0.0, term_kn=0,
            term_m=0, envelope=0.0, ratio=0.0, dominant="", status=f"skipped: {exc}",
        )
        return row
    row.update(
        n=arrangement.n,
        k=arrangement.k,
        m=arrangement.m,
        red_measured=report.red_incidences,
        term_mixed=env.term_mixed,
        term_kn=env.term_kn,
        term_m=env.term_m,
        envelope=env.total,
        ratio=report.red_incidences / env.total,
        dominant=env.dominant,
    )
    return row


def cmd_envelope_sweep(args) -> int:
    steps = [
        (args.construction, args.d, i, args.n0 * 2**i, args.k_frac, args.p, args.seed)
        for i in range(args.doublings + 1)
    ]
    rows = pmap(_envelope_row, steps, args.jobs)
    emit_table(
        args,
        "envelope-sweep",
        {
            "construction": args.construction,
            "d": args.d,
            "n0": args.n0,
            "doublings": args.doublings,
            "k_frac": args.k_frac,
            "p": args.p,
            "seed": args.seed,
        },
        _SWEEP_COLUMNS,
        rows,
    )
    ratios = [r["ratio"] for r in rows if r["status"] == "ok"]
    if ratios:
        print(f"max ratio {max(ratios):.6g} over {len(ratios)} steps")
    return 0


# ---------------------------------------------------------------- beck3


def beck3_instance(
    n: int, k: int, seed: int, plant: str, max_attempts: int = 32
) -> list[Point]:
    """n points in E^3 with exactly n-k on the planted plane (or pair of
    skew lines) and no plane or skew line pair covering more; verified via
    the cover detector and regenerated on failure."""
    if k < 1 or k >= n:
        raise ConstructionError(f"k = {k} outside 1..{n - 1}")
    planted = n - k
    if plant == "plane" and planted < 3:
        raise ConstructionError("plane plant needs n-k >= 3")
    if plant == "skew" and planted < 4:
        raise ConstructionError("skew plant needs n-k >= 4")
    from .kernel import affine_rank

    for attempt in range(max_attempts):
        rng = random.Random(f"beck3:{plant}:{n}:{k}:{seed}:{attempt}")
        points: list[Point] = []
        if plant == "plane":
            base = [rng.randint(-20, 20) for _ in range(3)]
            u = [rng.randint(-9, 9) for _ in range(3)]
            v = [rng.randint(-9, 9) for _ in range(3)]
            coeffs = set()
            while len(coeffs) < planted:
                coeffs.add((rng.randint(-60, 60), rng.randint(-60, 60)))
            for alpha, beta in sorted(coeffs):
                points.append(
                    Point(b + alpha * uu + beta * vv for b, uu, vv in zip(base, u, v))
                )
            if affine_rank(points) != 3:  # plant degenerated to a line
                continue
        else:
            sizes = (planted - planted // 2, planted // 2)
            for which in range(2):
                base = [rng.randint(-40, 40) for _ in range(3)]
                direction = [rng.randint(-9, 9) for _ in range(3)]
                ts = set()
                while len(ts) < sizes[which]:
                    ts.add(rng.randint(-60, 60))
                for t in sorted(ts):
                    points.append(
                        Point(b + t * dd for b, dd in zip(base, direction))
                    )
            first = points[: sizes[0]]
            second = points[sizes[0] :]
            if affine_rank(first[:2] + second[:2]) != 4:  # lines not skew
                continue
        while len(points) < n:
            candidate = Point(rng.randint(-999, 999) for _ in range(3))
            if candidate not in points:
                points.append(candidate)
        if len(set(points)) != n:
            continue
        cover = max_cover_plane_or_two_lines(points)
        if cover.size == planted:
            return points
    raise ConstructionError(
        f"no admissible instance after {max_attempts} attempts (n={n}, k={k}, plant={plant})"
    )


_BECK3_COLUMNS = (
    "n",
    "k",
    "seed",
    "plant",
    "hypothesis_ok",
    "max_cover",
    "planes",
    "ratio",
    "status",
)


def _beck3_row(params: tuple) -> dict:
    n, k, seed, plant = params
    row = {"n": n, "k": k, "seed": seed, "plant": plant}
    try:
        points = beck3_instance(n, k, seed, plant)
    except ConstructionError as exc:
        row.update(
            hypothesis_ok=False, max_cover=-1, planes=-1, ratio=0.0,
            status=f"error: {exc}",
        )
        return row
    planes = spanned_flats(points, 2)
    lines = spanned_flats(points, 1)
    cover = max_cover_plane_or_two_lines(points, planes=planes, lines=lines)
    row.update(
        hypothesis_ok=cover.size == n - k,
        max_cover=cover.size,
        planes=planes.count,
        ratio=planes.count / (n * k * k),
        status="ok",
    )
    return row


def cmd_beck3(args) -> int:
    n_values = _parse_int_list(args.n_list)
    k_values = _parse_int_list(args.k_list)
    if any(k < 1 for k in k_values):
        print("error: k >= 1 required", file=sys.stderr)
        return 2
    cells = [
        (n, k, seed, args.plant if args.plant != "mix" else ("plane" if seed % 2 == 0 else "skew"))
        for n in n_values
        for k in k_values
        for seed in range(args.seed, args.seed + args.seeds)
    ]
    rows = pmap(_beck3_row, cells, args.jobs)
    emit_table(
        args,
        "beck3",
        {
            "n_list": args.n_list,
            "k_list": args.k_list,
            "seeds": args.seeds,
            "seed": args.seed,
            "plant": args.plant,
        },
        _BECK3_COLUMNS,
        rows,
    )
    good = [r for r in rows if r["status"] == "ok"]
    ratios = [r["ratio"] for r in good]
    if ratios:
        print(
            f"min ratio {min(ratios):.6g}, median {statistics.median(ratios):.6g}"
            f" over {len(ratios)} instances"
        )
    all_ok = bool(good) and len(good) == len(rows) and all(r["hypothesis_ok"] for r in good)
    return 0 if all_ok else 1


# ---------------------------------------------------------------- conjecture-search

_CONJ_COLUMNS = (
    "sample",
    "d",
    "n",
    "r",
    "seed",
    "floor",
    "degenerate",
    "k",
    "hyperplanes",
    "codim2_flats",
    "max_point_degree",
    "incidence_ratio",
    "span_ratio",
    "flagged",
)


def _conjecture_stats(
    points: list[Point], r: int, floor_value: float, keep_degenerate: bool = False
) -> dict:
    d = points[0].dim
    n = len(points)
    degenerate, _ = is_r_degenerate(points, r)
    if degenerate and not keep_degenerate:
        return dict(
            degenerate=True, k=0, hyperplanes=0, codim2_flats=0,
            max_point_degree=0, incidence_ratio=0.0, span_ratio=0.0, flagged=False,
        )
    hyps = spanned_flats(points, d - 1)
    codim2 = spanned_flats(points, d - 2)
    degree = [0] * n
    for idxs in hyps.per_flat_points:
        for i in idxs:
            degree[i] += 1
    max_degree = max(degree)
    k = n - max_degenerate_subset(points, r - 1)
    incidence_ratio = max_degree / codim2.count if codim2.count else 0.0
    span_ratio = hyps.count / (n * k ** (d - 1)) if k else 0.0
    return dict(
        degenerate=degenerate,
        k=k,
        hyperplanes=hyps.count,
        codim2_flats=codim2.count,
        max_point_degree=max_degree,
        incidence_ratio=incidence_ratio,
        span_ratio=span_ratio,
        flagged=0.0 < span_ratio < floor_value or 0.0 < incidence_ratio < floor_value,
    )


def _conjecture_row(params: tuple) -> dict:
    sample, d, n, r, seed, floor_value = params
    rng = random.Random(f"conjecture:{d}:{n}:{seed}:{sample}")
    points: list[Point] = []
    while len(points) < n:
        candidate = Point(rng.randint(-99, 99) for _ in range(d))
        if candidate not in points:
            points.append(candidate)
    row = {"sample": sample, "d": d, "n": n, "r": r, "seed": seed, "floor": floor_value}
    row.update(_conjecture_stats(points, r, floor_value))
    return row


def cmd_conjecture_search(args) -> int:
    if args.d < 3:
        print("error: d >= 3 required", file=sys.stderr)
        return 2
    r = args.r if args.r is not None else args.d
    if args.points:
        with open(args.points) as fh:
            points = read_point_file(fh)
        if not points:
            print("error: empty hull", file=sys.stderr)
            return 2
        if points[0].dim != args.d:
            print(
                f"error: point file is E^{points[0].dim}, --d is {args.d}",
                file=sys.stderr,
            )
            return 2
        row = {
            "sample": 0, "d": args.d, "n": len(points), "r": r,
            "seed": args.seed, "floor": args.floor,
        }
        row.update(_conjecture_stats(points, r, args.floor, keep_degenerate=True))
        rows = [row]
    else:
        cells = [
            (sample, args.d, args.n, r, args.seed, args.floor)
            for sample in range(args.samples)
        ]
        rows = pmap(_conjecture_row, cells, args.jobs)
    emit_table(
        args,
        "conjecture-search",
        {
            "d": args.d,
            "n": args.n,
            "r": r,
            "samples": args.samples,
            "seed": args.seed,
            "floor": args.floor,
        },
        _CONJ_COLUMNS,
        rows,
    )
    kept = [r_ for r_ in rows if not r_["degenerate"]]
    if kept:
        for name in ("incidence_ratio", "span_ratio"):
            values = [r_[name] for r_ in kept]
            print(
                f"{name}: min {min(values):.6g}, median {statistics.median(values):.6g}"
                f" over {len(values)} samples"
            )
        flagged = sum(1 for r_ in kept if r_["flagged"])
        print(f"flagged {flagged} of {len(kept)} samples (floor {args.floor})")
    else:
        print("all samples degenerate; nothing to report")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spanflats",
        description="Exact enumeration of spanned flats, bichromatic incidence "
        "counting, extremal constructions, and growth checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="spanned f-flats of a point file")
    p.add_argument("--points", required=True, help="point-set file, one point per line")
    p.add_argument("--f", type=int, required=True, help="flat dimension to enumerate")
    p.add_argument("--emit-json", action="store_true", help="print the JSON export to stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("incidences", parents=[common], help="count red incidences of an arrangement file")
    p.add_argument("--arrangement", required=True, help="BiArrangement JSON file")
    p.add_argument("--envelope", action="store_true", help="include the bound envelope terms")
    p.set_defaults(func=cmd_incidences)

    p = sub.add_parser("construct", parents=[common], help="generate a construction")
    kinds = p.add_subparsers(dest="kind", required=True)
    g = kinds.add_parser("erdos2d", parents=[common])
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--s", type=int, required=True)
    g.set_defaults(func=cmd_construct, kind="erdos2d")
    g = kinds.add_parser("bichromatic", parents=[common])
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--c0", default="1", help="scale knob linking p to m (rational)")
    g.set_defaults(func=cmd_construct, kind="bichromatic")
    g = kinds.add_parser("thetamk", parents=[common])
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.set_defaults(func=cmd_construct, kind="thetamk")
    g = kinds.add_parser("purdy", parents=[common])
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.set_defaults(func=cmd_construct, kind="purdy")

    p = sub.add_parser("verify-purdy", parents=[common], help="formula vs enumeration table")
    p.add_argument("--d-range", required=True, help='e.g. "4" or "4:5"')
    p.add_argument("--k-range", required=True, help='e.g. "2:4"')
    p.set_defaults(func=cmd_verify_purdy)

    p = sub.add_parser("fit", parents=[common], help="log-log least-squares slope of a series file")
    p.add_argument("--series", required=True, help="file of x,count pairs")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("envelope-sweep", parents=[common], help="measured red incidences vs envelope")
    p.add_argument("--construction", choices=("bichromatic", "thetamk"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n0", type=int, required=True, help="first rung of the doubling ladder")
    p.add_argument("--doublings", type=int, default=3)
    p.add_argument("--k-frac", type=float, default=0.5, help="k as a fraction of n")
    p.add_argument("--p", type=int, default=4, help="grid scale: p vertices per 2-D copy / pencil side")
    p.set_defaults(func=cmd_envelope_sweep)

    p = sub.add_parser("beck3", parents=[common], help="planted spanned-plane growth experiment")
    p.add_argument("--n-list", required=True, help='e.g. "20,30,40"')
    p.add_argument("--k-list", required=True, help='e.g. "3,5,7"')
    p.add_argument("--seeds", type=int, default=5, help="seeds per (n, k) cell")
    p.add_argument("--plant", choices=("plane", "skew", "mix"), default="plane")
    p.set_defaults(func=cmd_beck3)

    p = sub.add_parser(
        "conjecture-search",
        parents=[common],
        help="ratio statistics over random non-degenerate sets "
        "(uniform integer coordinates; one sampler among many)",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--r", type=int, default=None, help="degeneracy threshold (default d)")
    p.add_argument("--floor", type=float, default=0.0, help="flag samples whose ratio falls below")
    p.add_argument("--points", default=None, help="evaluate one point-set file instead of sampling")
    p.set_defaults(func=cmd_conjecture_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, ConstructionError, FormulaDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

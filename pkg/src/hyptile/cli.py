"""Command-line front door.

Subcommands map one-to-one onto the library modules: basis and point
queries, exact verification suites, symmetry listings, torus instances,
the uniqueness scan, and figure rendering.  Every invocation emits either
terse human-readable lines or one versioned JSON document
(``--format structured``).

Exit codes: 0 success, 1 a verification subcommand found a violation,
2 usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import _backend, reports, symmetry, tiling, torus
from .errors import CoverViolationError, HyptileError
from .render import (
    Viewport,
    export_mesh_3d,
    render_slices_3d,
    render_tiling_2d,
    render_torus_map,
)

DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 20260801
MAX_SAMPLES = 1_000_000
MAX_CELL_BUDGET = 100_000_000
MAX_CANDIDATE_BUDGET = 1_000_000


def bounded_int(maximum: int):
    """argparse type for positive ints with a hard sanity cap."""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if not 1 <= value <= maximum:
            raise argparse.ArgumentTypeError(
                f"must be between 1 and {maximum}, got {value}"
            )
        return value

    return parse


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} ({exc})")


def parse_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a vector: {text!r} ({exc})")


def parse_box(text: str) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    try:
        lo_text, hi_text = text.split("..")
        lo = tuple(Fraction(part) for part in lo_text.split(","))
        hi = tuple(Fraction(part) for part in hi_text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"not a box (expected lo..hi like 0,0..10,10): {text!r} ({exc})"
        )
    return lo, hi


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(Fraction(e)) for e in v) + ")"


def _vec_strings(v) -> list[str]:
    return [str(Fraction(e)) for e in v]


def _mat_strings(m) -> list[list[str]]:
    return [_vec_strings(row) for row in m]


def _tiling_params(args) -> tiling.TilingParams:
    return tiling.TilingParams(n=args.n, p=args.p, q=args.q)


def _torus_params(args) -> torus.TorusParams:
    p, q = Fraction(args.p), Fraction(args.q)
    if p.denominator != 1 or q.denominator != 1:
        raise ValueError("torus commands require integer side lengths")
    return torus.TorusParams(n=args.n, p=int(p), q=int(q))


def _emit(args, command: str, payload: dict, human: str) -> None:
    if args.format == "structured":
        text = reports.dumps(reports.wrap(command, payload))
    else:
        text = human if human.endswith("\n") else human + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_basis(args) -> int:
    params = _tiling_params(args)
    basis = tiling.build_basis(params)
    reduction = tiling.build_reduction_basis(params)
    payload = {
        "n": params.n,
        "p": str(params.p),
        "q": str(params.q),
        "basis": _mat_strings(basis.matrix),
        "det": str(basis.det),
        "reduction_basis": _mat_strings(reduction),
    }
    lines = ["A ="]
    for row in basis.matrix:
        lines.append("  " + "  ".join(str(e).rjust(6) for e in row))
    lines.append(f"det(A) = {basis.det}")
    lines.append("reduction columns B =")
    for row in reduction:
        lines.append("  " + "  ".join(str(e).rjust(6) for e in row))
    _emit(args, "basis", payload, "\n".join(lines))
    return 0


def cmd_locate(args) -> int:
    params = _tiling_params(args)
    ref = tiling.locate(args.point, params)
    cp = tiling.canonicalize(args.point, params)
    payload = {
        "point": _vec_strings(args.point),
        "kind": ref.kind.value,
        "anchor": list(ref.anchor),
        "representative": _vec_strings(cp.rep),
    }
    human = f"{ref.kind.value.title()} k={_fmt_vec(ref.anchor)}"
    _emit(args, "locate", payload, human)
    return 0


def cmd_member(args) -> int:
    params = _tiling_params(args)
    basis = tiling.build_basis(params)
    coords = basis.coords(args.vector)
    member = all(c.denominator == 1 for c in coords)
    payload = {
        "vector": _vec_strings(args.vector),
        "member": member,
        "coords": _vec_strings(coords),
    }
    if member:
        human = f"member: v = A@{_fmt_vec(coords)}"
    else:
        human = f"not a member: A^-1 v = {_fmt_vec(coords)}"
    _emit(args, "member", payload, human)
    return 0 if member else 1


def cmd_period(args) -> int:
    params = _torus_params(args)
    periods = [torus.minimal_axis_period(params, i) for i in range(params.n)]
    consistent = len(set(periods)) == 1
    payload = {
        "m": params.m,
        "period": periods[0],
        "periods": periods,
        "axes_consistent": consistent,
        "adjugate_entry_check": torus.adjugate_entry_check(params),
    }
    _emit(args, "period", payload, str(periods[0]))
    return 0 if consistent else 1


def cmd_symmetries(args) -> int:
    params = _tiling_params(args)
    closed = symmetry.stabilizer_closed_form(params.n)
    payload = {
        "n": params.n,
        "order": len(closed),
        "elements": [s.serialize() for s in closed],
    }
    lines = [f"stabilizer order {len(closed)}"]
    lines.extend(s.serialize() for s in closed)
    ok = True
    if args.brute_force:
        basis = tiling.build_basis(params)
        brute = symmetry.stabilizer_brute_force(params.n, basis)
        match = sorted((s.perm, s.signs) for s in brute) == sorted(
            (s.perm, s.signs) for s in closed
        )
        payload["brute_force_order"] = len(brute)
        payload["brute_force_matches"] = match
        lines.append(
            f"brute force over {symmetry.group_order(params.n)} candidates: "
            f"{len(brute)} elements, {'match' if match else 'MISMATCH'}"
        )
        ok = match
    _emit(args, "symmetries", payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_torus(args) -> int:
    params = _torus_params(args)
    t = torus.build_torus_tiling(params, cell_budget=args.cell_budget)
    doc = torus.torus_report(t)
    ok = doc["exact_cover"] and doc["unilateral"]
    lines = [
        f"torus (Z/{doc['m']})^{doc['n']}: {doc['m'] ** doc['n']} cells",
        f"residues: {doc['residue_count']}  big: {doc['big_count']}  small: {doc['small_count']}",
        f"exact cover: {doc['exact_cover']}",
        f"unilateral: {doc['unilateral']}",
        f"min period: {doc['min_period']}",
    ]
    _emit(args, "torus", doc, "\n".join(lines))
    return 0 if ok else 1


def cmd_scan(args) -> int:
    params = _torus_params(args)
    doc = torus.scan_candidate_lattices(
        params, candidate_budget=args.candidate_budget
    )
    lines = [
        f"index-{doc['m']} sublattices of Z^{doc['n']}: {doc['candidates']}",
        f"survivors (tile the torus): {doc['survivor_count']}",
        f"contains the constructed lattice: {doc['contains_base_lattice']}",
        f"all survivors equivalent to it: {doc['all_survivors_equivalent']}",
    ]
    _emit(args, "scan", doc, "\n".join(lines))
    ok = doc["contains_base_lattice"] and doc["all_survivors_equivalent"]
    return 0 if ok else 1


def _random_point(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(
        Fraction(rng.randint(-60, 60), rng.randint(1, 10)) for _ in range(n)
    )


def _frac_below(rng: random.Random, hi: Fraction) -> Fraction:
    """Uniform-ish rational in [0, hi) with a bounded denominator."""
    den = rng.randint(1, 12) * hi.denominator
    num_hi = int(hi * den) - 1
    return Fraction(rng.randint(0, max(num_hi, 0)), den)


def _random_domain_point(rng: random.Random, params) -> tuple[Fraction, ...]:
    p, q, n = params.p, params.q, params.n
    if rng.random() < 0.5:
        return tuple(_frac_below(rng, q) for _ in range(n))
    head = tuple(_frac_below(rng, p) for _ in range(n - 1))
    return head + (q + _frac_below(rng, p),)


def cmd_verify(args) -> int:
    params = _tiling_params(args)
    basis = tiling.build_basis(params)
    rng = random.Random(args.seed)
    checks = []

    samples = args.samples
    failure = None
    for _ in range(samples):
        x = _random_point(rng, params.n)
        cp = tiling.canonicalize(x, params)
        back = tuple(
            r + a for r, a in zip(cp.rep, basis.apply(cp.k), strict=True)
        )
        if back != x or not tiling.in_domain(cp.rep, params):
            failure = x
            break
        again = tiling.canonicalize(cp.rep, params)
        if again.rep != cp.rep or any(again.k):
            failure = x
            break
    checks.append(
        {
            "name": "round-trip+idempotence",
            "passed": failure is None,
            "samples": samples,
            "counterexample": _vec_strings(failure) if failure else None,
        }
    )

    failure = None
    for _ in range(samples):
        a = _random_domain_point(rng, params)
        b = _random_domain_point(rng, params)
        if a == b:
            continue
        diff = tuple(x - y for x, y in zip(a, b))
        if basis.contains(diff):
            failure = diff
            break
    checks.append(
        {
            "name": "representative-uniqueness",
            "passed": failure is None,
            "samples": samples,
            "counterexample": _vec_strings(failure) if failure else None,
        }
    )

    violations = tiling.unilateral_violations(params)
    checks.append(
        {
            "name": "unilateral",
            "passed": not violations,
            "counterexample": _vec_strings(violations[0]) if violations else None,
        }
    )

    if symmetry.group_order(params.n) <= 46080:
        closed = symmetry.stabilizer_closed_form(params.n)
        brute = symmetry.stabilizer_brute_force(params.n, basis)
        match = sorted((s.perm, s.signs) for s in brute) == sorted(
            (s.perm, s.signs) for s in closed
        )
        checks.append(
            {
                "name": "stabilizer-cross-check",
                "passed": match,
                "order": len(brute),
                "counterexample": None,
            }
        )

    passed = all(c["passed"] for c in checks)
    payload = {"params": {"n": params.n, "p": str(params.p), "q": str(params.q)},
               "checks": checks, "passed": passed}
    lines = []
    for c in checks:
        status = "ok" if c["passed"] else "FAIL"
        extra = f" ({c['samples']} samples)" if "samples" in c else ""
        if c.get("counterexample"):
            extra += f" counterexample={','.join(c['counterexample'])}"
        lines.append(f"{c['name']}: {status}{extra}")
    lines.append("verify: " + ("ok" if passed else "FAIL"))
    _emit(args, "verify", payload, "\n".join(lines))
    return 0 if passed else 1


def cmd_render(args) -> int:
    if args.kind == "tiling2d":
        params = _tiling_params(args)
        lo, hi = args.box if args.box else ((Fraction(0),) * 2, (Fraction(10),) * 2)
        vp = Viewport(lo=lo, hi=hi, scale=args.scale)
        doc = render_tiling_2d(params, vp)
        _write_output(args.out, doc)
    elif args.kind == "slices3d":
        params = _tiling_params(args)
        lo, hi = args.box if args.box else ((Fraction(0),) * 3, (Fraction(8),) * 3)
        vp = Viewport(lo=lo, hi=hi, scale=args.scale)
        z_values = args.z or (Fraction(1, 2),)
        docs = render_slices_3d(params, z_values, vp)
        if not args.out:
            raise ValueError("slices3d requires --out (one file per slice)")
        stem = Path(args.out)
        for i, doc in enumerate(docs):
            path = stem.with_name(f"{stem.stem}_{i:03d}{stem.suffix or '.svg'}")
            path.write_text(doc)
            print(path)
    elif args.kind == "torusmap":
        params = _torus_params(args)
        t = torus.build_torus_tiling(params, cell_budget=args.cell_budget)
        doc = render_torus_map(t)
        _write_output(args.out, doc)
    elif args.kind == "mesh3d":
        params = _tiling_params(args)
        lo, hi = args.box if args.box else ((Fraction(0),) * 3, (Fraction(6),) * 3)
        doc = export_mesh_3d(params, lo, hi)
        _write_output(args.out, doc)
    return 0


def _write_output(out, text: str) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_param_flags(sub, integral_sides=False):
    kind = int if integral_sides else parse_fraction
    sub.add_argument("--n", type=int, required=True, help="dimension (>= 2)")
    sub.add_argument("--p", type=kind, required=True, help="small side length")
    sub.add_argument("--q", type=kind, required=True, help="big side length")
    sub.add_argument(
        "--format",
        choices=("human", "structured"),
        default="human",
        help="human lines or one versioned JSON document",
    )
    sub.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyptile",
        description=(
            "Exact construction, querying and verification of the "
            "two-size hypercube lattice tiling "
            f"(kernel backend: {_backend.BACKEND})"
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("basis", help="print the lattice basis and its determinant")
    _add_param_flags(s)
    s.set_defaults(func=cmd_basis)

    s = subs.add_parser("locate", help="which tile contains a point")
    _add_param_flags(s)
    s.add_argument("--point", type=parse_vector, required=True)
    s.set_defaults(func=cmd_locate)

    s = subs.add_parser("member", help="test lattice membership of a vector")
    _add_param_flags(s)
    s.add_argument("--vector", type=parse_vector, required=True)
    s.set_defaults(func=cmd_member)

    s = subs.add_parser("verify", help="run the exact property suite")
    _add_param_flags(s)
    s.add_argument("--samples", type=bounded_int(MAX_SAMPLES), default=DEFAULT_SAMPLES)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("symmetries", help="list the stabilizer (2n elements)")
    _add_param_flags(s)
    s.add_argument(
        "--brute-force",
        action="store_true",
        help="cross-check against exhaustive search over all signed permutations",
    )
    s.set_defaults(func=cmd_symmetries)

    s = subs.add_parser("period", help="minimal axis period of the integer tiling")
    _add_param_flags(s, integral_sides=True)
    s.set_defaults(func=cmd_period)

    s = subs.add_parser("torus", help="build and verify the discrete torus tiling")
    _add_param_flags(s, integral_sides=True)
    s.add_argument("--cell-budget", type=bounded_int(MAX_CELL_BUDGET), default=torus.DEFAULT_CELL_BUDGET)
    s.set_defaults(func=cmd_torus)

    s = subs.add_parser("scan", help="uniqueness scan over index-m sublattices")
    _add_param_flags(s, integral_sides=True)
    s.add_argument(
        "--candidate-budget",
        type=bounded_int(MAX_CANDIDATE_BUDGET),
        default=torus.DEFAULT_CANDIDATE_BUDGET,
    )
    s.set_defaults(func=cmd_scan)

    s = subs.add_parser("render", help="emit SVG figures / OBJ meshes")
    _add_param_flags(s)
    s.add_argument(
        "--kind",
        choices=("tiling2d", "slices3d", "torusmap", "mesh3d"),
        default="tiling2d",
    )
    s.add_argument("--box", type=parse_box, help="viewport like 0,0..10,10")
    s.add_argument("--scale", type=bounded_int(10_000), default=40, help="pixels per unit")
    s.add_argument("--z", type=parse_vector, help="slice heights for slices3d")
    s.add_argument("--cell-budget", type=bounded_int(MAX_CELL_BUDGET), default=torus.DEFAULT_CELL_BUDGET)
    s.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CoverViolationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (HyptileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

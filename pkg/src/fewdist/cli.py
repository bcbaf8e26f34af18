"""Command line interface: ``fewdist {gen,certify,dims,verify,search}``.

Exit codes: 0 when every check passes, 1 when checks ran and one failed,
2 when the input is invalid.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from fewdist import __version__
from fewdist.clp import certify_bbs, check_inertia_bound, check_rank_bound, key_observation_check
from fewdist.errors import FewDistError
from fewdist.formats import (
    dump_certificate,
    dump_pointset,
    human_certificate,
    parse_pointset,
    parse_polynomial,
    rational_text,
)
from fewdist.generators import FAMILIES
from fewdist.geometry import bbs_bound
from fewdist.polyspace import dim_s, omega_basis
from fewdist.search import max_s_distance_subset

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class UsageError(FewDistError):
    pass


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _read_text(path: str) -> tuple[str, bytes]:
    data = _read_bytes(path)
    try:
        return data.decode("utf-8"), data
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not UTF-8 text") from None


def _kv(pairs) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def _timestamp(args) -> str | None:
    if args.no_timestamp:
        return None
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def cmd_gen(args) -> tuple[int, str]:
    func, params = FAMILIES[args.family]
    values = {}
    for name in params:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"family {args.family!r} needs --{name}")
        values[name] = v
    try:
        points = func(**values)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK, dump_pointset(points)


def _certify_one(path: str, fmt: str, timestamp: str | None) -> tuple[int, str]:
    text, raw = _read_text(path)
    points = parse_pointset(text)
    cert = certify_bbs(points)
    if fmt == "human":
        out = human_certificate(cert, path)
    else:
        out = dump_certificate(
            cert,
            version=__version__,
            input_digest=hashlib.sha256(raw).hexdigest(),
            timestamp=timestamp,
        )
    return (EXIT_OK if cert.passed and cert.scalar_matrix else EXIT_FAIL), out


def _certify_job(job):
    path, fmt, ts = job
    try:
        return _certify_one(path, fmt, ts)
    except (FewDistError, OSError) as e:
        return EXIT_INVALID, f"error: {path}: {e}\n"


def cmd_certify(args) -> tuple[int, str]:
    inputs = args.input or ["-"]
    ts = _timestamp(args)
    jobs = [(p, args.format, ts) for p in inputs]
    if len(jobs) == 1:
        return _certify_one(*jobs[0])
    if args.jobs > 1 and "-" not in inputs:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_certify_job, jobs))
    else:
        results = [_certify_job(j) for j in jobs]
    code = max(c for c, _ in results)
    return code, "---\n".join(out for _, out in results)


def _single_input(args) -> str:
    if args.input and len(args.input) > 1:
        raise UsageError("this command takes a single --input")
    return args.input[0] if args.input else "-"


def _require_s(args) -> int:
    if args.s is None:
        raise UsageError("-s is required")
    if args.s < 0:
        raise UsageError("-s must be nonnegative")
    return args.s


def cmd_dims(args) -> tuple[int, str]:
    s = _require_s(args)
    points = parse_pointset(_read_text(_single_input(args))[0])
    dim = dim_s(points, s)
    omega = len(omega_basis(points, s))
    return EXIT_OK, _kv(
        [
            ("set_size", len(points)),
            ("dimension", points.dimension),
            ("s", s),
            ("dim_s", dim),
            ("bound", bbs_bound(points.dimension, s)),
            ("omega", omega),
        ]
    )


def cmd_verify(args) -> tuple[int, str]:
    s = _require_s(args)
    if not args.poly:
        raise UsageError("--poly is required")
    points = parse_pointset(_read_text(_single_input(args))[0])
    p = parse_polynomial(_read_text(args.poly)[0])
    rb = check_rank_bound(p, points, s)
    ib = check_inertia_bound(p, points, s, symmetrize=True)
    key = key_observation_check(p, points, s)
    ok = rb.passed and ib.passed and key
    inr = ib.inertia
    return (EXIT_OK if ok else EXIT_FAIL), _kv(
        [
            ("set_size", len(points)),
            ("s", s),
            ("degree_bound", p.declared_degree_bound),
            ("dim_s", ib.bound),
            ("clp_rank", rb.clp_rank),
            ("rank_bound", f"{rb.clp_rank} <= {rb.bound} {'pass' if rb.passed else 'fail'}"),
            ("symmetrized", "true" if ib.symmetrized else "false"),
            ("inertia", f"{inr.positive} {inr.negative} {inr.zero}"),
            (
                "inertia_bound",
                f"{max(inr.positive, inr.negative)} <= {ib.bound} {'pass' if ib.passed else 'fail'}",
            ),
            ("key_observation", "pass" if key else "fail"),
            ("result", "pass" if ok else "fail"),
        ]
    )


def cmd_search(args) -> tuple[int, str]:
    s = _require_s(args)
    if s < 1:
        raise UsageError("search needs -s >= 1")
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be positive")
    points = parse_pointset(_read_text(_single_input(args))[0])
    res = max_s_distance_subset(points, s, budget=args.budget)
    witness = [
        ("witness." + str(i), " ".join(rational_text(x) for x in points[i]))
        for i in res.best_indices
    ]
    return EXIT_OK, _kv(
        [
            ("ground_size", len(points)),
            ("dimension", points.dimension),
            ("s", s),
            ("bbs_bound", bbs_bound(points.dimension, s)),
            ("best_size", res.best_size),
            ("best_indices", " ".join(map(str, res.best_indices))),
            *witness,
            ("nodes_explored", res.nodes_explored),
            ("pruned_by_bound", res.pruned_by_bound),
            ("reached_bbs_bound", "true" if res.reached_bbs_bound else "false"),
            ("exhaustive", "true" if res.exhaustive else "false"),
        ]
    )


COMMANDS = {
    "gen": cmd_gen,
    "certify": cmd_certify,
    "dims": cmd_dims,
    "verify": cmd_verify,
    "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", metavar="PATH", help="input file ('-' for stdin)")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("-s", type=int, help="degree / number of distances")
    common.add_argument("--format", choices=("human", "machine"), default="machine")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    parser = argparse.ArgumentParser(
        prog="fewdist",
        description="Exact certificates for the few-distance bound |A| <= C(d+s, s).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a classical configuration")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--d", type=int)

    c = sub.add_parser("certify", parents=[common], help="certify the BBS bound on a point set")
    c.add_argument("--jobs", type=int, default=1, help="worker processes for several inputs")

    sub.add_parser("dims", parents=[common], help="report dim_s(A), C(d+s,s) and |Omega|")

    v = sub.add_parser("verify", parents=[common], help="check rank/inertia bounds for a polynomial")
    v.add_argument("--poly", metavar="PATH", help="sparse pair polynomial file")

    se = sub.add_parser("search", parents=[common], help="largest subset with at most s distances")
    se.add_argument("--budget", type=int, help="maximum number of search nodes")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = COMMANDS[args.command](args)
    except (FewDistError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

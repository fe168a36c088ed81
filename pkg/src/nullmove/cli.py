"""Command-line front end: solve, perft, bench, compare and match."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from .board import ZOBRIST_SEED, FenError, START_FEN, divide, parse_fen, perft
from .epd import filter_suite, read_suite
from .evaluation import PstFormatError, build_table, load_pst
from .harness import DEFAULT_TT_BYTES, compare_policies, single_policy_report
from .match import MatchError, play_match
from .san import line_to_san, move_to_san
from .search import (
    MAX_PLY,
    NoLegalMoves,
    PruningPolicy,
    SearchLimits,
    Searcher,
    is_mate_score,
    mate_distance,
)

EXIT_OK, EXIT_INPUT, EXIT_EMPTY, EXIT_INTERNAL = 0, 2, 3, 4

POLICY_NAMES = ("nonull", "std", "verified", "var-nocut2", "var-reduce1", "var-reduce12")
SHIPPED_SUITES = ("tactical", "mates", "zugzwang")


class InputError(Exception):
    pass


class EmptyWork(Exception):
    pass


@dataclass
class Config:
    policy: str = "verified"
    R: int | None = None
    depth: str = "8"
    nodes: int | None = None
    time: float | None = None
    tt_bytes: int = DEFAULT_TT_BYTES
    suite: str = "tactical"
    policies: str = "std2,std3,vrfd3"
    baseline: str | None = None
    format: str = "text"
    jobs: int = 1
    killers: bool = False
    check_ext: bool = True
    pst: str | None = None
    out: str | None = None
    nodes_only: bool = False
    opponent: str = "std2"
    games: int = 2
    max_plies: int = 300

    def validate(self) -> None:
        if self.format not in ("text", "csv", "both"):
            raise InputError(f"--format must be text, csv or both, not {self.format!r}")
        if self.R is not None and self.R < 1:
            raise InputError("--R must be at least 1")
        if self.tt_bytes < 0:
            raise InputError("--tt-bytes cannot be negative")
        if self.jobs < 1:
            raise InputError("--jobs must be at least 1")
        if self.nodes is not None and self.nodes <= 0:
            raise InputError("--nodes must be positive")
        if self.time is not None and self.time <= 0:
            raise InputError("--time must be positive")
        self.depths()

    def depths(self) -> list[int]:
        """``8``, ``7,8`` or ``6-8``."""
        text = str(self.depth)
        try:
            if "-" in text:
                lo, hi = (int(x) for x in text.split("-", 1))
                out = list(range(lo, hi + 1))
            else:
                out = [int(x) for x in text.split(",") if x.strip()]
        except ValueError:
            raise InputError(f"cannot read depth {text!r}; use 8, 7,8 or 6-8") from None
        if not out or any(d < 1 or d >= MAX_PLY for d in out):
            raise InputError(f"depths must lie in 1..{MAX_PLY - 1}")
        return out

    def main_policy(self) -> PruningPolicy:
        return _policy(self.policy, self.R)


def _policy(text: str, R: int | None = None) -> PruningPolicy:
    try:
        return PruningPolicy.parse(text, R)
    except ValueError as exc:
        raise InputError(f"{exc}; choose from {', '.join(POLICY_NAMES)} or a label such as std2, vrfd3") from None


def _suite_path(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    if name in SHIPPED_SUITES:
        return Path(str(resources.files("nullmove.data") / f"{name}.epd"))
    raise InputError(f"suite {name!r} not found (shipped suites: {', '.join(SHIPPED_SUITES)})")


def _load_records(cfg: Config):
    path = _suite_path(cfg.suite)
    try:
        records, errors = read_suite(path)
    except OSError as exc:
        raise InputError(f"cannot read suite {path}: {exc}") from exc
    for err in errors:
        print(f"skipping record: {err}", file=sys.stderr)
    kept, dropped = filter_suite(records)
    if dropped:
        print(f"dropped {dropped} king-and-pawn record(s)", file=sys.stderr)
    if not kept:
        raise EmptyWork(f"suite {path} has no searchable records after filtering")
    return path, kept


def _check_pst(cfg: Config) -> None:
    if cfg.pst is None:
        return
    try:
        load_pst(cfg.pst)
    except (OSError, PstFormatError) as exc:
        raise InputError(f"bad piece-square file {cfg.pst}: {exc}") from exc


def _header(cfg: Config, extra: str) -> str:
    return (
        f"# zobrist seed {ZOBRIST_SEED}; tt {cfg.tt_bytes} bytes; killers {'on' if cfg.killers else 'off'}; "
        f"check extension {'on' if cfg.check_ext else 'off'}; {extra}\n"
    )


def _emit(cfg: Config, report, header: str) -> None:
    text = header + "\n" + report.to_text()
    data = report.to_csv()
    if cfg.out:
        base = Path(cfg.out)
        base.parent.mkdir(parents=True, exist_ok=True)
        if cfg.format in ("text", "both"):
            base.with_suffix(".txt").write_text(text)
        if cfg.format in ("csv", "both"):
            base.with_suffix(".csv").write_text(data)
        return
    if cfg.format == "text":
        sys.stdout.write(text)
    elif cfg.format == "csv":
        sys.stdout.write(data)
    else:
        sys.stdout.write(text + "\n" + data)


def cmd_solve(fen: str, cfg: Config) -> int:
    try:
        p = parse_fen(fen)
    except FenError as exc:
        raise InputError(f"bad FEN: {exc}") from exc
    _check_pst(cfg)
    depths = cfg.depths()
    if len(depths) != 1:
        raise InputError("solve takes a single depth")
    table = build_table(load_pst(cfg.pst)) if cfg.pst else None
    searcher = Searcher(cfg.main_policy(), cfg.tt_bytes, cfg.killers, cfg.check_ext, table)
    try:
        result = searcher.run(p, SearchLimits(depth=depths[0], nodes=cfg.nodes, time_seconds=cfg.time))
    except NoLegalMoves as exc:
        raise InputError(str(exc)) from exc
    if is_mate_score(result.value):
        plies = mate_distance(result.value)
        value = f"mate {(plies + 1) // 2}" if result.value > 0 else f"mated in {plies // 2}"
    else:
        value = f"{result.value} cp"
    s = result.stats
    print(f"policy      {searcher.policy.label}")
    print(f"depth       {result.depth}{'' if result.completed else ' (limit reached)'}")
    print(f"best move   {move_to_san(p, result.best_move)}")
    print(f"value       {value} ({result.value})")
    print(f"pv          {' '.join(line_to_san(p, result.pv))}")
    print(f"nodes       {s.total_nodes} ({s.nodes} full, {s.qnodes} quiescence)")
    print(f"null moves  {s.null_tried} tried, {s.null_fail_highs} failed high, {s.researches} re-searches")
    return EXIT_OK


def cmd_perft(fen: str, depth: int) -> int:
    try:
        p = parse_fen(fen)
    except FenError as exc:
        raise InputError(f"bad FEN: {exc}") from exc
    if depth < 0:
        raise InputError("perft depth cannot be negative")
    if depth == 0:
        print(f"total {perft(p, 0)}")
        return EXIT_OK
    total = 0
    for move, count in divide(p, depth):
        print(f"{move.uci()} {count}")
        total += count
    print(f"total {total}")
    return EXIT_OK


def cmd_bench(cfg: Config) -> int:
    _check_pst(cfg)
    path, records = _load_records(cfg)
    policy = cfg.main_policy()
    report = single_policy_report(
        records, policy, cfg.depths(), cfg.tt_bytes, suite_name=path.name, nodes_only=cfg.nodes_only,
        jobs=cfg.jobs, killers=cfg.killers, check_extension=cfg.check_ext, node_limit=cfg.nodes,
        pst_path=cfg.pst,
    )
    _emit(cfg, report, _header(cfg, f"policy {policy.label}"))
    return EXIT_OK


def cmd_compare(cfg: Config) -> int:
    _check_pst(cfg)
    policies = [_policy(name) for name in cfg.policies.split(",") if name.strip()]
    if len(policies) < 2:
        raise InputError("compare needs at least two policies in --policies")
    if len(set(policies)) != len(policies):
        raise InputError("--policies lists the same policy twice")
    baseline = _policy(cfg.baseline) if cfg.baseline else None
    if baseline is not None and baseline not in policies:
        raise InputError(f"baseline {baseline.label} is not among --policies")
    path, records = _load_records(cfg)
    report = compare_policies(
        records, policies, cfg.depths(), cfg.tt_bytes, baseline=baseline, suite_name=path.name,
        jobs=cfg.jobs, killers=cfg.killers, check_extension=cfg.check_ext, node_limit=cfg.nodes,
        pst_path=cfg.pst, nodes_only=cfg.nodes_only,
    )
    _emit(cfg, report, _header(cfg, f"policies {','.join(p.label for p in policies)}"))
    return EXIT_OK


def cmd_match(cfg: Config) -> int:
    depths = cfg.depths()
    if len(depths) != 1:
        raise InputError("match takes a single depth")
    if cfg.games <= 0 or cfg.games % 2:
        raise InputError("--games must be a positive even number")
    openings = None
    if cfg.suite != Config.suite:
        _, records = _load_records(cfg)
        openings = [r.position.fen() for r in records]
    try:
        result = play_match(
            cfg.main_policy(), _policy(cfg.opponent), openings, depths[0], cfg.games, cfg.tt_bytes, cfg.max_plies,
        )
    except MatchError as exc:
        print(f"match aborted: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(result.summary())
    for i, g in enumerate(result.games):
        print(f"{i + 1:>3} {g.white} - {g.black} {g.result} ({g.reason}, {len(g.moves)} plies)")
    return EXIT_OK


def _perft_depth(text: str | None) -> int:
    if text is None:
        return 3
    try:
        return int(text)
    except ValueError:
        raise InputError(f"perft depth must be an integer, not {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # every default is None so config files can sit between flags and defaults
    common.add_argument("--config", help="JSON file of option values; flags override it")
    common.add_argument("--policy", help=f"pruning policy: {', '.join(POLICY_NAMES)} (default verified)")
    common.add_argument("--R", type=int, help="null-move depth reduction (default 3, std defaults to 2)")
    common.add_argument("--depth", help="search depth; compare and bench also take 7,8 or 6-8 (default 8)")
    common.add_argument("--nodes", type=int, help="node limit per search")
    common.add_argument("--time", type=float, help="time limit per search in seconds")
    common.add_argument("--tt-bytes", type=int, help=f"transposition table size (default {DEFAULT_TT_BYTES})")
    common.add_argument("--killers", action=argparse.BooleanOptionalAction, default=None,
                        help="killer-move ordering (default off)")
    common.add_argument("--check-ext", action=argparse.BooleanOptionalAction, default=None,
                        help="one-ply check extension at the horizon (default on)")
    common.add_argument("--pst", help="piece-square table file replacing the built-in one")

    suite = argparse.ArgumentParser(add_help=False)
    suite.add_argument("--suite", help=f"EPD file or shipped suite name ({', '.join(SHIPPED_SUITES)})")
    suite.add_argument("--format", choices=("text", "csv", "both"), help="report format (default text)")
    suite.add_argument("--out", help="write PATH.txt / PATH.csv instead of printing")
    suite.add_argument("--jobs", type=int, help="worker processes (default 1)")
    suite.add_argument("--nodes-only", action="store_true", default=None,
                       help="skip solved-position counting (for suites with unreliable bm)")

    parser = argparse.ArgumentParser(prog="nullmove", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("solve", parents=[common], help="search one position and print the result")
    p.add_argument("fen", help="position in FEN (quote it)")
    p = sub.add_parser("perft", parents=[common], help="count leaf nodes per root move")
    p.add_argument("fen", nargs="?", default=START_FEN, help="position in FEN (default: initial position)")
    sub.add_parser("bench", parents=[common, suite], help="run one policy over a suite")
    p = sub.add_parser("compare", parents=[common, suite], help="compare policies over a suite")
    p.add_argument("--policies", help="comma-separated policy labels (default std2,std3,vrfd3)")
    p.add_argument("--baseline", help="policy the deltas are taken against (default the verified one)")
    p = sub.add_parser("match", parents=[common], help="fixed-depth games between two policies")
    p.add_argument("--opponent", help="second policy label (default std2)")
    p.add_argument("--games", type=int, help="even number of games (default 2)")
    p.add_argument("--max-plies", type=int, help="adjudicate a draw after this many plies (default 300)")
    p.add_argument("--suite", help="EPD file whose positions serve as openings")
    return parser


def resolve_config(args: argparse.Namespace) -> Config:
    """Flags beat the config file, which beats the defaults."""
    values: dict = {}
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise InputError("config file must hold a JSON object")
        known = {f.name for f in fields(Config)}
        unknown = sorted(k for k in loaded if k.replace("-", "_") not in known)
        if unknown:
            raise InputError(f"unknown config keys: {', '.join(unknown)}")
        values.update({k.replace("-", "_"): v for k, v in loaded.items()})
    for f in fields(Config):
        flag = getattr(args, f.name, None)
        if flag is not None:
            values[f.name] = flag
    try:
        cfg = Config(**values)
    except TypeError as exc:
        raise InputError(str(exc)) from exc
    if args.command in ("solve", "match") and "depth" not in values:
        cfg.depth = "6"
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "perft":
            return cmd_perft(args.fen, _perft_depth(args.depth))
        cfg = resolve_config(args)
        if args.command == "solve":
            return cmd_solve(args.fen, cfg)
        if args.command == "bench":
            return cmd_bench(cfg)
        if args.command == "compare":
            return cmd_compare(cfg)
        return cmd_match(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EmptyWork as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Suite runner and policy-comparison reports."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .board import Move, parse_fen
from .epd import EpdRecord
from .evaluation import load_pst, build_table
from .san import move_to_san
from .search import PolicyKind, PruningPolicy, Searcher, SearchLimits

DEFAULT_TT_BYTES = 16 << 20
CSV_COLUMNS = ("id", "policy", "depth", "nodes", "qnodes", "value", "best_move", "solved", "zugzwang_researches")


def percent_delta(other_nodes: int, baseline_nodes: int) -> str:
    """Signed relative size of ``other_nodes`` against the baseline, two
    decimals truncated toward zero: (1652668804, 449744588) -> '+267.46%'."""
    if baseline_nodes <= 0:
        raise ValueError("baseline node count must be positive")
    diff = other_nodes - baseline_nodes
    hundredths = abs(diff) * 10000 // baseline_nodes
    sign = "-" if diff < 0 and hundredths else "+"
    return f"{sign}{hundredths // 100}.{hundredths % 100:02d}%"


@dataclass
class PositionRow:
    id: str
    policy: str
    depth: int
    nodes: int
    qnodes: int
    value: int
    best_move: str
    solved: bool | None
    zugzwang_researches: int
    error: str | None = None

    def csv_values(self) -> list[str]:
        solved = "-" if self.solved is None else str(int(self.solved))
        return [
            self.id, self.policy, str(self.depth), str(self.nodes), str(self.qnodes),
            str(self.value), self.best_move, solved, str(self.zugzwang_researches),
        ]


@dataclass(frozen=True)
class _Job:
    fen: str
    best: tuple[int, ...]
    avoid: tuple[int, ...]
    id: str
    policy: PruningPolicy
    depth: int
    tt_bytes: int
    killers: bool
    check_extension: bool
    node_limit: int | None
    pst_path: str | None
    check_solved: bool


_tables: dict[str | None, object] = {}


def _table_for(pst_path):
    if pst_path not in _tables:
        _tables[pst_path] = build_table(load_pst(pst_path))
    return _tables[pst_path]


def _run_job(job: _Job) -> PositionRow:
    p = parse_fen(job.fen)
    searcher = Searcher(
        job.policy, job.tt_bytes, killers=job.killers,
        check_extension=job.check_extension, table=_table_for(job.pst_path),
    )
    result = searcher.run(p, SearchLimits(depth=job.depth, nodes=job.node_limit))
    rec = EpdRecord(p, tuple(Move(m) for m in job.best), tuple(Move(m) for m in job.avoid), job.id)
    solved = rec.is_solved_by(result.best_move) if job.check_solved else None
    error = None
    if not result.completed:
        error = f"limit reached at depth {result.depth}"
        if solved is not None:
            solved = False
    return PositionRow(
        id=job.id,
        policy=job.policy.label,
        depth=job.depth,
        nodes=result.stats.total_nodes,
        qnodes=result.stats.qnodes,
        value=result.value,
        best_move=move_to_san(p, result.best_move),
        solved=solved,
        zugzwang_researches=result.stats.researches,
        error=error,
    )


def run_suite(
    records: list[EpdRecord],
    policy: PruningPolicy,
    depth: int,
    tt_bytes: int = DEFAULT_TT_BYTES,
    *,
    jobs: int = 1,
    killers: bool = False,
    check_extension: bool = True,
    node_limit: int | None = None,
    pst_path: str | None = None,
    check_solved: bool = True,
) -> list[PositionRow]:
    """Search every record with a fresh TT and history; rows come back in
    input order whatever the worker count."""
    if not records:
        raise ValueError("no records to run")
    work = [
        _Job(
            r.position.fen(), tuple(int(m) for m in r.best_moves), tuple(int(m) for m in r.avoid_moves),
            r.id, policy, depth, tt_bytes, killers, check_extension, node_limit, pst_path, check_solved,
        )
        for r in records
    ]
    return _map(work, jobs)


def _map(work, jobs):
    if jobs <= 1 or len(work) == 1:
        return [_run_job(j) for j in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_job, work))


@dataclass
class SuiteReport:
    suite: str
    policies: list[str]
    depths: list[int]
    baseline: str | None
    rows: list[PositionRow]
    positions: int
    nodes_only: bool = False

    def rows_for(self, policy: str, depth: int) -> list[PositionRow]:
        return [r for r in self.rows if r.policy == policy and r.depth == depth]

    def total_nodes(self, policy: str, depth: int) -> int:
        return sum(r.nodes for r in self.rows_for(policy, depth))

    def solved_count(self, policy: str, depth: int) -> int:
        return sum(1 for r in self.rows_for(policy, depth) if r.solved)

    def delta(self, policy: str, depth: int) -> str:
        return percent_delta(self.total_nodes(policy, depth), self.total_nodes(self.baseline, depth))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(row.csv_values())
        return buf.getvalue()

    def _ordered_policies(self) -> list[str]:
        others = [p for p in self.policies if p != self.baseline]
        return others + ([self.baseline] if self.baseline else [])

    def _table(self, title: str, cell, delta_row: bool) -> list[str]:
        cols = self._ordered_policies()
        width = max(15, *(len(c) + 2 for c in cols))
        def line(first, cells):
            text = f"{first:>5} "
            for i, c in enumerate(cells):
                # the baseline column sits last, behind a double bar
                bar = "||" if self.baseline and i == len(cells) - 1 else "|"
                text += f"{bar}{c:>{width}} "
            return text.rstrip()
        out = [title, line("Depth", cols)]
        out.append("-" * len(out[-1]))
        for depth in self.depths:
            out.append(line(str(depth), [cell(p, depth) for p in cols]))
            if delta_row and self.baseline:
                deltas = [f"({self.delta(p, depth)})" for p in cols[:-1]] + ["-"]
                out.append(line("", deltas))
        return out

    def to_text(self) -> str:
        lines = [f"Suite: {self.suite} ({self.positions} positions)"]
        if self.baseline:
            lines.append(f"Baseline: {self.baseline}")
        lines.append("")
        lines += self._table("Total node count", lambda p, d: f"{self.total_nodes(p, d):,}", True)
        if not self.nodes_only:
            lines.append("")
            lines += self._table("Solved positions", lambda p, d: str(self.solved_count(p, d)), False)
        errors = [r for r in self.rows if r.error]
        if errors:
            lines.append("")
            lines.append("Incomplete searches:")
            lines += [f"  {r.id} {r.policy} depth {r.depth}: {r.error}" for r in errors]
        return "\n".join(lines) + "\n"


def default_baseline(policies: list[PruningPolicy]) -> PruningPolicy:
    for p in policies:
        if p.kind == PolicyKind.VERIFIED:
            return p
    return policies[-1]


def compare_policies(
    records: list[EpdRecord],
    policies: list[PruningPolicy],
    depths: list[int],
    tt_bytes: int = DEFAULT_TT_BYTES,
    *,
    baseline: PruningPolicy | None = None,
    suite_name: str = "suite",
    jobs: int = 1,
    killers: bool = False,
    check_extension: bool = True,
    node_limit: int | None = None,
    pst_path: str | None = None,
    nodes_only: bool = False,
) -> SuiteReport:
    if len(policies) < 2:
        raise ValueError("comparing policies needs at least two of them")
    if len(set(policies)) != len(policies):
        raise ValueError("duplicate policies")
    baseline = baseline or default_baseline(policies)
    if baseline not in policies:
        raise ValueError(f"baseline {baseline.label} is not among the compared policies")
    if not records:
        raise ValueError("no records to run")
    work = [
        _Job(
            r.position.fen(), tuple(int(m) for m in r.best_moves), tuple(int(m) for m in r.avoid_moves),
            r.id, policy, depth, tt_bytes, killers, check_extension, node_limit, pst_path, not nodes_only,
        )
        for policy in policies
        for depth in depths
        for r in records
    ]
    rows = _map(work, jobs)
    return SuiteReport(
        suite=suite_name,
        policies=[p.label for p in policies],
        depths=list(depths),
        baseline=baseline.label,
        rows=rows,
        positions=len(records),
        nodes_only=nodes_only,
    )


def single_policy_report(
    records: list[EpdRecord],
    policy: PruningPolicy,
    depths: list[int],
    tt_bytes: int = DEFAULT_TT_BYTES,
    *,
    suite_name: str = "suite",
    nodes_only: bool = False,
    **kwargs,
) -> SuiteReport:
    rows = []
    for depth in depths:
        rows += run_suite(records, policy, depth, tt_bytes, check_solved=not nodes_only, **kwargs)
    return SuiteReport(suite_name, [policy.label], list(depths), None, rows, len(records), nodes_only)

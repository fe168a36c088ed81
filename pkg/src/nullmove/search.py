"""NegaScout/PVS search with the null-move pruning policies.

The recursive routines are compiled with numba and share their working
memory through a handful of preallocated arrays owned by :class:`Searcher`.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np
from numba import njit, objmode

from .board import (
    EMPTY,
    HALFMOVE,
    HASH,
    MAX_MOVES,
    NSTATE,
    NULLS,
    QUEEN,
    SIDE,
    WKING,
    Move,
    Position,
    attacked,
    generate_moves,
    generate_pseudo,
    in_check,
    is_legal_after,
    king_and_pawns_only,
    make_move,
    make_move_kernel,
    make_null_kernel,
    unmake_move_kernel,
)
from .evaluation import INF, MATE, MATE_THRESHOLD, MAX_PLY, default_table, evaluate_kernel


class PolicyKind(enum.IntEnum):
    NO_NULL = 0
    STANDARD = 1
    VERIFIED = 2
    VARIANT_NO_CUTOFF_REDUCE2 = 3
    VARIANT_REDUCE_ONE_EVERYWHERE = 4
    VARIANT_REDUCE_ONE_THEN_TWO = 5


_LABELS = {
    PolicyKind.NO_NULL: "nonull",
    PolicyKind.STANDARD: "std",
    PolicyKind.VERIFIED: "verified",
    PolicyKind.VARIANT_NO_CUTOFF_REDUCE2: "var-nocut2",
    PolicyKind.VARIANT_REDUCE_ONE_EVERYWHERE: "var-reduce1",
    PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO: "var-reduce12",
}
_SHORT = {
    PolicyKind.NO_NULL: "nonull",
    PolicyKind.STANDARD: "std",
    PolicyKind.VERIFIED: "vrfd",
    PolicyKind.VARIANT_NO_CUTOFF_REDUCE2: "nocut2",
    PolicyKind.VARIANT_REDUCE_ONE_EVERYWHERE: "reduce1",
    PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO: "reduce12",
}


@dataclass(frozen=True)
class PruningPolicy:
    """Which null-move scheme governs the search, and its reduction R."""

    kind: PolicyKind
    R: int = 3

    def __post_init__(self):
        object.__setattr__(self, "kind", PolicyKind(self.kind))
        if self.kind == PolicyKind.NO_NULL:
            object.__setattr__(self, "R", 0)
        elif self.R < 1:
            raise ValueError(f"depth reduction R must be >= 1, got {self.R}")

    @classmethod
    def no_null(cls) -> "PruningPolicy":
        return cls(PolicyKind.NO_NULL)

    @classmethod
    def standard(cls, R: int = 2) -> "PruningPolicy":
        return cls(PolicyKind.STANDARD, R)

    @classmethod
    def verified(cls, R: int = 3) -> "PruningPolicy":
        return cls(PolicyKind.VERIFIED, R)

    @property
    def label(self) -> str:
        """Compact name used in reports: nonull, std2, vrfd3, reduce1-3, ..."""
        short = _SHORT[self.kind]
        if self.kind == PolicyKind.NO_NULL:
            return short
        if self.kind in (PolicyKind.STANDARD, PolicyKind.VERIFIED):
            return f"{short}{self.R}"
        return f"{short}-{self.R}"

    @classmethod
    def parse(cls, text: str, R: int | None = None) -> "PruningPolicy":
        """Accepts CLI names (``std``, ``verified``, ``var-reduce1`` ...) with an
        explicit R, or report labels such as ``std2`` and ``vrfd3``."""
        text = text.strip().lower()
        for kind, name in _LABELS.items():
            if text == name:
                if kind == PolicyKind.STANDARD and R is None:
                    R = 2
                return cls(kind, 3 if R is None else R)
        for kind, short in _SHORT.items():
            if text == short:
                return cls(kind, 3 if R is None else R)
            rest = text[len(short):].lstrip("-")
            if text.startswith(short) and rest.isdigit():
                if R is not None and int(rest) != R:
                    raise ValueError(f"conflicting R in {text!r} and R={R}")
                return cls(kind, int(rest))
        raise ValueError(f"unknown policy {text!r}")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SearchLimits:
    depth: int | None = None
    nodes: int | None = None
    time_seconds: float | None = None

    def __post_init__(self):
        if self.depth is None and self.nodes is None and self.time_seconds is None:
            raise ValueError("at least one search limit must be set")
        if self.depth is not None and not 1 <= self.depth <= MAX_PLY:
            raise ValueError(f"depth must be in 1..{MAX_PLY} (at least one iteration)")
        if self.nodes is not None and self.nodes < 1:
            raise ValueError("node limit must be positive")
        if self.time_seconds is not None and self.time_seconds <= 0:
            raise ValueError("time limit must be positive")


# cfg slots
C_POLICY, C_R, C_KILLERS, C_CHECK_EXT, C_TT, C_NODE_LIMIT, C_DEADLINE, C_GEN = range(8)
NCFG = 8

# stats slots
(
    S_NODES,
    S_QNODES,
    S_NULL_TRIED,
    S_NULL_FAIL_HIGH,
    S_RESEARCHES,
    S_TT_PROBES,
    S_TT_HITS,
    S_CALLS,
    S_DELEGATED,
    S_STOPPED,
) = range(10)
NSTATS = 10

# TT slot layout: key, move, value, meta (draft | bound << 8 | generation << 10 | valid bit)
T_KEY, T_MOVE, T_VALUE, T_META = range(4)
BOUND_EXACT, BOUND_LOWER, BOUND_UPPER = 0, 1, 2
_VALID = 1 << 40
TT_ENTRY_BYTES = 32

HISTORY_MAX = 500_000
_TT_MOVE_SCORE = 3_000_000
_CAPTURE_SCORE = 2_000_000
_KILLER_SCORE = (1_000_000, 900_000)

_NO_NULL = int(PolicyKind.NO_NULL)
_STANDARD = int(PolicyKind.STANDARD)
_VERIFIED = int(PolicyKind.VERIFIED)
_NOCUT2 = int(PolicyKind.VARIANT_NO_CUTOFF_REDUCE2)
_REDUCE1 = int(PolicyKind.VARIANT_REDUCE_ONE_EVERYWHERE)
_REDUCE12 = int(PolicyKind.VARIANT_REDUCE_ONE_THEN_TWO)

_STACK = MAX_PLY + 8


# ---------------------------------------------------------------------------
# compiled kernel


@njit(cache=True)
def _now_us():
    with objmode(t="int64"):
        t = int(time.time() * 1e6)
    return t


@njit(cache=True)
def _check_limits(stats, cfg):
    if cfg[C_NODE_LIMIT] > 0 and stats[S_NODES] + stats[S_QNODES] >= cfg[C_NODE_LIMIT]:
        stats[S_STOPPED] = 1
    elif cfg[C_DEADLINE] > 0 and _now_us() >= cfg[C_DEADLINE]:
        stats[S_STOPPED] = 1


@njit(cache=True)
def _tick(stats, cfg):
    if (stats[S_NODES] + stats[S_QNODES]) & 1023 == 0:
        _check_limits(stats, cfg)


@njit(cache=True)
def fail_high_reduction(policy, verify):
    """Plies removed from the remaining depth when the null-move search fails
    high; 0 means cut off immediately instead."""
    if policy == _STANDARD:
        return 0
    if policy == _VERIFIED:
        return 1 if verify else 0
    if policy == _NOCUT2:
        return 2
    if policy == _REDUCE1:
        return 1
    if policy == _REDUCE12:
        return 1 if verify else 2
    return 0


@njit(cache=True)
def null_allowed_kernel(board, state, depth, verify, policy):
    if policy == _NO_NULL:
        return False
    side = state[SIDE]
    if attacked(board, state[WKING + side], side ^ 1):
        return False
    if state[NULLS] != 0:
        return False
    if king_and_pawns_only(board, side):
        return False
    # after a non-cutting fail-high the reduced search must keep at least one ply
    return depth > fail_high_reduction(policy, verify)


@njit(cache=True)
def _tt_probe(tt, key):
    base = (key & (tt.shape[0] // 2 - 1)) * 2
    for i in range(base, base + 2):
        if tt[i, T_META] & _VALID and tt[i, T_KEY] == key:
            return i
    return -1


@njit(cache=True)
def _tt_store(tt, key, move, value, depth, bound, gen, ply):
    if value > MATE_THRESHOLD:
        value += ply
    elif value < -MATE_THRESHOLD:
        value -= ply
    meta = _VALID | depth | (bound << 8) | (gen << 10)
    base = (key & (tt.shape[0] // 2 - 1)) * 2
    slot = base + 1
    old = tt[base, T_META]
    if not (old & _VALID) or tt[base, T_KEY] == key:
        slot = base
    elif ((old >> 10) & 0x3FFFFFFF) != gen or depth >= (old & 0xFF):
        # depth-preferred slot taken over; the displaced entry moves to overflow
        tt[base + 1, :] = tt[base, :]
        slot = base
    if move == 0 and tt[slot, T_KEY] == key and tt[slot, T_META] & _VALID:
        move = tt[slot, T_MOVE]
    tt[slot, T_KEY] = key
    tt[slot, T_MOVE] = move
    tt[slot, T_VALUE] = value
    tt[slot, T_META] = meta


@njit(cache=True)
def _score_moves(moves, scores, ply, n, side, tt_move, hist, killers, use_killers):
    for i in range(n):
        m = moves[ply, i]
        captured = (m >> 18) & 15
        promo = (m >> 22) & 15
        if m == tt_move:
            scores[ply, i] = _TT_MOVE_SCORE
        elif captured != EMPTY or (promo & 7) == QUEEN:
            # MVV/LVA
            s = _CAPTURE_SCORE + 10 * (captured & 7) - ((m >> 14) & 7)
            if (promo & 7) == QUEEN:
                s += 50
            scores[ply, i] = s
        elif use_killers and m == killers[ply, 0]:
            scores[ply, i] = _KILLER_SCORE[0]
        elif use_killers and m == killers[ply, 1]:
            scores[ply, i] = _KILLER_SCORE[1]
        else:
            scores[ply, i] = hist[side, m & 127, (m >> 7) & 127]


@njit(cache=True)
def _pick(moves, scores, ply, i, n):
    best = i
    for j in range(i + 1, n):
        if scores[ply, j] > scores[ply, best]:
            best = j
    if best != i:
        m = moves[ply, i]
        moves[ply, i] = moves[ply, best]
        moves[ply, best] = m
        s = scores[ply, i]
        scores[ply, i] = scores[ply, best]
        scores[ply, best] = s
    return moves[ply, i]


@njit(cache=True)
def quiescence_kernel(board, state, alpha, beta, ply, stack, moves, scores, pvlen, stats, cfg, table):
    stats[S_CALLS] += 1
    stats[S_QNODES] += 1
    pvlen[ply] = 0
    _tick(stats, cfg)
    if stats[S_STOPPED]:
        return 0
    stand = evaluate_kernel(board, state, table)
    if stand >= beta or ply >= MAX_PLY:
        return stand
    best = stand
    if stand > alpha:
        alpha = stand
    n = generate_pseudo(board, state, moves[ply], True)
    for i in range(n):
        m = moves[ply, i]
        promo = (m >> 22) & 15
        s = 10 * ((m >> 18) & 7) - ((m >> 14) & 7)
        if (promo & 7) == QUEEN:
            s += 50
        scores[ply, i] = s
    stack[ply, :] = state
    for i in range(n):
        m = _pick(moves, scores, ply, i, n)
        make_move_kernel(board, state, m)
        if not is_legal_after(board, state):
            unmake_move_kernel(board, state, m, stack[ply])
            continue
        v = -quiescence_kernel(board, state, -beta, -alpha, ply + 1, stack, moves, scores, pvlen, stats, cfg, table)
        unmake_move_kernel(board, state, m, stack[ply])
        if stats[S_STOPPED]:
            return 0
        if v > best:
            best = v
            if v > alpha:
                alpha = v
                if v >= beta:
                    break
    return best


@njit(cache=True)
def search_kernel(
    board, state, alpha, beta, depth, verify, ply,
    stack, path, moves, scores, tt, hist, killers, pv, pvlen, stats, cfg, table,
):
    stats[S_CALLS] += 1
    side = state[SIDE]
    checked = attacked(board, state[WKING + side], side ^ 1)
    if depth <= 0:
        if checked and cfg[C_CHECK_EXT] != 0:
            depth = 1
        else:
            stats[S_DELEGATED] += 1
            return quiescence_kernel(board, state, alpha, beta, ply, stack, moves, scores, pvlen, stats, cfg, table)

    stats[S_NODES] += 1
    pvlen[ply] = 0
    _tick(stats, cfg)
    if stats[S_STOPPED]:
        return 0

    key = state[HASH]
    path[ply] = key
    if ply > 0:
        if state[HALFMOVE] >= 100:
            return 0
        lo = ply - state[HALFMOVE]
        i = ply - 2
        while i >= 0 and i >= lo:
            if path[i] == key:
                return 0
            i -= 2
        if ply >= MAX_PLY:
            return evaluate_kernel(board, state, table)

    pv_node = beta - alpha > 1
    tt_move = 0
    if cfg[C_TT] != 0:
        stats[S_TT_PROBES] += 1
        slot = _tt_probe(tt, key)
        if slot >= 0:
            stats[S_TT_HITS] += 1
            tt_move = tt[slot, T_MOVE]
            meta = tt[slot, T_META]
            if ply > 0 and not pv_node and (meta & 0xFF) >= depth:
                v = tt[slot, T_VALUE]
                if v > MATE_THRESHOLD:
                    v -= ply
                elif v < -MATE_THRESHOLD:
                    v += ply
                bound = (meta >> 8) & 3
                if bound == BOUND_EXACT or (bound == BOUND_LOWER and v >= beta) or (bound == BOUND_UPPER and v <= alpha):
                    return v

    policy = cfg[C_POLICY]
    fail_high = False
    reduced = 0
    if ply > 0 and null_allowed_kernel(board, state, depth, verify, policy):
        stats[S_NULL_TRIED] += 1
        stack[ply, :] = state
        make_null_kernel(board, state)
        v = -search_kernel(
            board, state, -beta, -beta + 1, depth - cfg[C_R] - 1, verify, ply + 1,
            stack, path, moves, scores, tt, hist, killers, pv, pvlen, stats, cfg, table,
        )
        state[:] = stack[ply]
        if stats[S_STOPPED]:
            return 0
        if v >= beta:
            stats[S_NULL_FAIL_HIGH] += 1
            reduced = fail_high_reduction(policy, verify)
            if reduced == 0:
                return v
            depth -= reduced
            fail_high = True
            if policy == _VERIFIED or policy == _REDUCE12:
                verify = False

    use_killers = cfg[C_KILLERS] != 0
    best = -INF
    best_move = 0
    while True:
        n = generate_pseudo(board, state, moves[ply], False)
        _score_moves(moves, scores, ply, n, side, tt_move, hist, killers, use_killers)
        stack[ply, :] = state
        best = -INF
        best_move = 0
        legal = 0
        a = alpha
        for i in range(n):
            m = _pick(moves, scores, ply, i, n)
            make_move_kernel(board, state, m)
            if not is_legal_after(board, state):
                unmake_move_kernel(board, state, m, stack[ply])
                continue
            legal += 1
            if legal == 1:
                v = -search_kernel(
                    board, state, -beta, -a, depth - 1, verify, ply + 1,
                    stack, path, moves, scores, tt, hist, killers, pv, pvlen, stats, cfg, table,
                )
            else:
                v = -search_kernel(
                    board, state, -a - 1, -a, depth - 1, verify, ply + 1,
                    stack, path, moves, scores, tt, hist, killers, pv, pvlen, stats, cfg, table,
                )
                if a < v < beta:
                    v = -search_kernel(
                        board, state, -beta, -a, depth - 1, verify, ply + 1,
                        stack, path, moves, scores, tt, hist, killers, pv, pvlen, stats, cfg, table,
                    )
            unmake_move_kernel(board, state, m, stack[ply])
            if stats[S_STOPPED]:
                return 0
            if v > best:
                best = v
                best_move = m
                if v > a:
                    a = v
                    pv[ply, 0] = m
                    k = pvlen[ply + 1]
                    pv[ply, 1 : k + 1] = pv[ply + 1, :k]
                    pvlen[ply] = k + 1
                    if v >= beta:
                        if ((m >> 18) & 15) == EMPTY and ((m >> 22) & 7) != QUEEN:
                            fr = m & 127
                            to = (m >> 7) & 127
                            h = hist[side, fr, to] + depth * depth
                            hist[side, fr, to] = h if h < HISTORY_MAX else HISTORY_MAX
                            if use_killers and killers[ply, 0] != m:
                                killers[ply, 1] = killers[ply, 0]
                                killers[ply, 0] = m
                        break
        if legal == 0:
            return -MATE + ply if checked else 0
        if fail_high and best < beta:
            # the null move looked better than every real move: zugzwang,
            # search again at the original depth with verification back on
            depth += reduced
            fail_high = False
            verify = True
            stats[S_RESEARCHES] += 1
            continue
        break

    if cfg[C_TT] != 0:
        if best >= beta:
            bound = BOUND_LOWER
        elif best > alpha:
            bound = BOUND_EXACT
        else:
            bound = BOUND_UPPER
        _tt_store(tt, key, best_move, best, depth, bound, cfg[C_GEN], ply)
    return best


# ---------------------------------------------------------------------------
# Python layer


@dataclass
class SearchStats:
    nodes: int = 0
    qnodes: int = 0
    null_tried: int = 0
    null_fail_highs: int = 0
    researches: int = 0
    tt_probes: int = 0
    tt_hits: int = 0
    calls: int = 0
    delegated: int = 0
    iteration_nodes: list[int] = field(default_factory=list)

    @property
    def total_nodes(self) -> int:
        return self.nodes + self.qnodes

    @classmethod
    def from_array(cls, stats: np.ndarray, iteration_nodes=()) -> "SearchStats":
        return cls(
            nodes=int(stats[S_NODES]),
            qnodes=int(stats[S_QNODES]),
            null_tried=int(stats[S_NULL_TRIED]),
            null_fail_highs=int(stats[S_NULL_FAIL_HIGH]),
            researches=int(stats[S_RESEARCHES]),
            tt_probes=int(stats[S_TT_PROBES]),
            tt_hits=int(stats[S_TT_HITS]),
            calls=int(stats[S_CALLS]),
            delegated=int(stats[S_DELEGATED]),
            iteration_nodes=list(iteration_nodes),
        )


@dataclass
class SearchResult:
    best_move: Move
    value: int
    pv: list[Move]
    stats: SearchStats
    depth: int
    zugzwang_researched: bool
    completed: bool = True


class NoLegalMoves(ValueError):
    def __init__(self, checkmate: bool):
        self.checkmate = checkmate
        super().__init__("no legal moves: " + ("checkmate" if checkmate else "stalemate"))


def is_mate_score(value: int) -> bool:
    return abs(value) > MATE_THRESHOLD


def mate_distance(value: int) -> int:
    """Plies to mate encoded in a mate score (positive: side to move mates)."""
    if not is_mate_score(value):
        raise ValueError(f"{value} is not a mate score")
    return MATE - abs(value)


def _tt_slots(tt_bytes: int) -> int:
    buckets = max(1, tt_bytes // (2 * TT_ENTRY_BYTES))
    return 2 * (1 << (buckets.bit_length() - 1))


class Searcher:
    """One single-threaded search instance: TT, history, killers and stats."""

    def __init__(
        self,
        policy: PruningPolicy,
        tt_bytes: int = 16 << 20,
        killers: bool = False,
        check_extension: bool = True,
        table: np.ndarray | None = None,
    ):
        self.policy = policy
        self.use_tt = tt_bytes > 0
        self.tt = np.zeros((_tt_slots(tt_bytes) if self.use_tt else 2, 4), dtype=np.int64)
        self.hist = np.zeros((2, 120, 120), dtype=np.int64)
        self.killers = np.zeros((_STACK, 2), dtype=np.int64)
        self.stack = np.zeros((_STACK, NSTATE), dtype=np.int64)
        self.path = np.zeros(_STACK, dtype=np.int64)
        self.moves = np.zeros((_STACK, MAX_MOVES), dtype=np.int64)
        self.scores = np.zeros((_STACK, MAX_MOVES), dtype=np.int64)
        self.pv = np.zeros((_STACK, _STACK), dtype=np.int64)
        self.pvlen = np.zeros(_STACK, dtype=np.int64)
        self.stats = np.zeros(NSTATS, dtype=np.int64)
        self.cfg = np.zeros(NCFG, dtype=np.int64)
        self.cfg[C_POLICY] = int(policy.kind)
        self.cfg[C_R] = policy.R
        self.cfg[C_KILLERS] = int(killers)
        self.cfg[C_CHECK_EXT] = int(check_extension)
        self.cfg[C_TT] = int(self.use_tt)
        self.table = default_table() if table is None else table

    def clear(self) -> None:
        """Forget everything learned: TT, history, killers and stats."""
        self.tt[:] = 0
        self.hist[:] = 0
        self.killers[:] = 0
        self.stats[:] = 0
        self.cfg[C_GEN] = 0

    @property
    def search_stats(self) -> SearchStats:
        return SearchStats.from_array(self.stats)

    def search(self, p: Position, alpha: int, beta: int, depth: int, verify: bool = True) -> int:
        """One call of the recursive routine with ``p`` as the root (ply 0)."""
        if alpha >= beta:
            raise ValueError("alpha must be below beta")
        board, state = p.board.copy(), p.state.copy()
        return int(
            search_kernel(
                board, state, alpha, beta, depth, verify, 0,
                self.stack, self.path, self.moves, self.scores, self.tt, self.hist,
                self.killers, self.pv, self.pvlen, self.stats, self.cfg, self.table,
            )
        )

    def quiescence(self, p: Position, alpha: int, beta: int) -> int:
        if alpha >= beta:
            raise ValueError("alpha must be below beta")
        board, state = p.board.copy(), p.state.copy()
        return int(
            quiescence_kernel(
                board, state, alpha, beta, 0, self.stack, self.moves, self.scores,
                self.pvlen, self.stats, self.cfg, self.table,
            )
        )

    def run(self, p: Position, limits: SearchLimits) -> SearchResult:
        """Iterative deepening from depth 1; verification starts switched on."""
        root_moves = generate_moves(p)
        if not root_moves:
            raise NoLegalMoves(in_check(p))
        self.cfg[C_GEN] = (self.cfg[C_GEN] + 1) & 0x3FFFFFFF
        self.cfg[C_NODE_LIMIT] = limits.nodes or 0
        self.cfg[C_DEADLINE] = int((time.time() + limits.time_seconds) * 1e6) if limits.time_seconds else 0
        self.stats[:] = 0
        max_depth = limits.depth or MAX_PLY - 1

        board, state = p.board.copy(), p.state.copy()
        result = None
        iteration_nodes = []
        before = 0
        for depth in range(1, max_depth + 1):
            value = int(
                search_kernel(
                    board, state, -INF, INF, depth, True, 0,
                    self.stack, self.path, self.moves, self.scores, self.tt, self.hist,
                    self.killers, self.pv, self.pvlen, self.stats, self.cfg, self.table,
                )
            )
            total = int(self.stats[S_NODES] + self.stats[S_QNODES])
            iteration_nodes.append(total - before)
            before = total
            if self.stats[S_STOPPED]:
                # the interrupted iteration is discarded
                board, state = p.board.copy(), p.state.copy()
                break
            line = self._legal_pv(p, [Move(int(m)) for m in self.pv[0, : self.pvlen[0]]])
            result = SearchResult(
                best_move=line[0],
                value=value,
                pv=line,
                stats=SearchStats(),
                depth=depth,
                zugzwang_researched=False,
            )
        stats = SearchStats.from_array(self.stats, iteration_nodes)
        if result is None:
            # not even depth 1 finished; fall back to the first legal move
            result = SearchResult(root_moves[0], 0, [root_moves[0]], stats, 0, False, completed=False)
        result.stats = stats
        result.zugzwang_researched = stats.researches > 0
        result.completed = not self.stats[S_STOPPED]
        return result

    @staticmethod
    def _legal_pv(p: Position, line: list[Move]) -> list[Move]:
        q = p.copy()
        out = []
        for m in line:
            if m not in generate_moves(q):
                break
            make_move(q, m)
            out.append(m)
        return out


def search_root(
    p: Position,
    policy: PruningPolicy,
    limits: SearchLimits,
    tt_bytes: int = 16 << 20,
    killers: bool = False,
    check_extension: bool = True,
    table: np.ndarray | None = None,
) -> SearchResult:
    """Search ``p`` from scratch with a fresh TT and history."""
    searcher = Searcher(policy, tt_bytes, killers=killers, check_extension=check_extension, table=table)
    return searcher.run(p, limits)


def null_move_allowed(p: Position, depth: int, verify: bool, policy: PruningPolicy | None = None) -> bool:
    """Whether a node at ``depth`` may try a null move (the node is assumed to
    be below the root)."""
    policy = policy or PruningPolicy.verified()
    return bool(null_allowed_kernel(p.board, p.state, depth, verify, int(policy.kind)))


def quiescence(p: Position, alpha: int = -INF, beta: int = INF) -> int:
    return Searcher(PruningPolicy.no_null(), tt_bytes=0).quiescence(p, alpha, beta)

"""Fixed-depth self-play between two pruning policies."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .board import (
    BISHOP,
    KING,
    KNIGHT,
    WHITE,
    START_FEN,
    FenError,
    Position,
    generate_moves,
    in_check,
    make_move,
    parse_fen,
)
from .san import parse_san
from .search import PruningPolicy, Searcher, SearchLimits

DEFAULT_MAX_PLIES = 300

# short book lines so that repeated pairs of games differ
OPENING_LINES = (
    "e4 e5 Nf3 Nc6 Bb5 a6",
    "e4 c5 Nf3 d6 d4 cxd4 Nxd4 Nf6",
    "e4 e6 d4 d5 Nc3 Bb4",
    "e4 c6 d4 d5 Nc3 dxe4 Nxe4 Bf5",
    "d4 d5 c4 e6 Nc3 Nf6 Bg5 Be7",
    "d4 Nf6 c4 g6 Nc3 Bg7 e4 d6",
    "d4 Nf6 c4 e6 Nc3 Bb4",
    "c4 e5 Nc3 Nf6 g3 d5",
    "Nf3 d5 g3 Nf6 Bg2 c6",
    "e4 e5 Nf3 Nc6 Bc4 Bc5 c3 Nf6",
)


def opening_fens() -> list[str]:
    fens = []
    for line in OPENING_LINES:
        p = parse_fen(START_FEN)
        for san in line.split():
            make_move(p, parse_san(p, san))
        fens.append(p.fen())
    return fens


class MatchError(RuntimeError):
    def __init__(self, game: int, message: str):
        super().__init__(f"game {game}: {message}")
        self.game = game


@dataclass
class GameRecord:
    opening: str
    white: str
    black: str
    moves: list[str]
    result: str  # "1-0", "0-1" or "1/2-1/2"
    reason: str


@dataclass
class MatchResult:
    policy_a: str
    policy_b: str
    games: list[GameRecord] = field(default_factory=list)
    score_a: float = 0.0
    score_b: float = 0.0

    @property
    def reasons(self) -> Counter:
        return Counter(g.reason for g in self.games)

    def summary(self) -> str:
        lines = [f"{self.policy_a} vs {self.policy_b}: {self.score_a:g} : {self.score_b:g} ({len(self.games)} games)"]
        for reason, n in sorted(self.reasons.items()):
            lines.append(f"  {reason}: {n}")
        return "\n".join(lines)


def insufficient_material(p: Position) -> bool:
    """Bare kings, or a single knight or bishop against a bare king."""
    minors = 0
    for sq in range(64):
        piece = p.piece_at(sq)
        if piece is None or piece[0] == KING:
            continue
        if piece[0] not in (KNIGHT, BISHOP):
            return False
        minors += 1
    return minors <= 1


def _adjudicate(p: Position, seen: Counter, legal) -> tuple[str, str] | None:
    if not legal:
        if in_check(p):
            return ("0-1" if p.side_to_move == WHITE else "1-0"), "checkmate"
        return "1/2-1/2", "stalemate"
    if seen[p.zobrist] >= 3:
        return "1/2-1/2", "threefold repetition"
    if p.halfmove_clock >= 100:
        return "1/2-1/2", "fifty-move rule"
    if insufficient_material(p):
        return "1/2-1/2", "insufficient material"
    return None


def play_game(white: Searcher, black: Searcher, opening: str, depth: int, max_plies: int) -> GameRecord:
    p = parse_fen(opening)
    seen = Counter([p.zobrist])
    moves: list[str] = []
    white.clear()
    black.clear()
    while True:
        legal = generate_moves(p)
        verdict = _adjudicate(p, seen, legal)
        if verdict is None and len(moves) >= max_plies:
            verdict = ("1/2-1/2", "move limit")
        if verdict is not None:
            return GameRecord(opening, white.policy.label, black.policy.label, moves, *verdict)
        engine = white if p.side_to_move == WHITE else black
        result = engine.run(p, SearchLimits(depth=depth))
        if result.best_move not in legal:
            raise RuntimeError(f"engine returned illegal move {result.best_move.uci()}")
        moves.append(result.best_move.uci())
        make_move(p, result.best_move)
        seen[p.zobrist] += 1


def play_match(
    policy_a: PruningPolicy,
    policy_b: PruningPolicy,
    openings: list[str] | None = None,
    depth: int = 4,
    games: int = 2,
    tt_bytes: int = 4 << 20,
    max_plies: int = DEFAULT_MAX_PLIES,
) -> MatchResult:
    """Play ``games`` games; each opening is played twice with colours swapped,
    cycling through the openings (the built-in book by default)."""
    if games <= 0 or games % 2:
        raise ValueError("the game count must be a positive even number")
    openings = openings or opening_fens()
    for fen in openings:
        try:
            parse_fen(fen)
        except FenError as exc:
            raise ValueError(f"bad opening {fen!r}: {exc}") from exc
    engine_a = Searcher(policy_a, tt_bytes)
    engine_b = Searcher(policy_b, tt_bytes)
    out = MatchResult(policy_a.label, policy_b.label)
    for index in range(games):
        opening = openings[(index // 2) % len(openings)]
        a_is_white = index % 2 == 0
        white, black = (engine_a, engine_b) if a_is_white else (engine_b, engine_a)
        try:
            record = play_game(white, black, opening, depth, max_plies)
        except Exception as exc:
            raise MatchError(index, str(exc)) from exc
        out.games.append(record)
        white_score = {"1-0": 1.0, "0-1": 0.0}.get(record.result, 0.5)
        a_score = white_score if a_is_white else 1.0 - white_score
        out.score_a += a_score
        out.score_b += 1.0 - a_score
    return out

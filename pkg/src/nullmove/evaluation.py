"""Static evaluation: material plus piece-square tables, side-to-move relative."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from numba import njit

from .board import BLACK_BIT, EMPTY, QUEEN, SIDE, SQ120, Move, Position

MATE = 32000
MAX_PLY = 128
# scores beyond this are mate scores; static evaluation stays strictly inside
MATE_THRESHOLD = MATE - 2 * MAX_PLY
INF = MATE + 1

PIECE_VALUES = (0, 100, 320, 330, 500, 900, 0)
SECTIONS = ("pawn", "knight", "bishop", "rook", "queen", "king")


class PstFormatError(ValueError):
    pass


def parse_pst(text: str) -> np.ndarray:
    """Parse the table file format into a (7, 64) array indexed by kind and
    square (a1 = 0) from White's point of view."""
    tables: dict[str, list[list[int]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            current = line.strip("[]").strip().lower()
            if current not in SECTIONS:
                raise PstFormatError(f"line {lineno}: unknown section {current!r}")
            if current in tables:
                raise PstFormatError(f"line {lineno}: duplicate section {current!r}")
            tables[current] = []
            continue
        if current is None:
            raise PstFormatError(f"line {lineno}: values before any section")
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise PstFormatError(f"line {lineno}: non-integer value") from None
        if len(row) != 8:
            raise PstFormatError(f"line {lineno}: expected 8 values, got {len(row)}")
        tables[current].append(row)

    pst = np.zeros((7, 64), dtype=np.int64)
    for kind, name in enumerate(SECTIONS, 1):
        rows = tables.get(name)
        if rows is None or len(rows) != 8:
            raise PstFormatError(f"section {name!r} must have 8 rows")
        for i, row in enumerate(rows):
            rank = 7 - i
            pst[kind, rank * 8 : rank * 8 + 8] = row
    if np.abs(pst).max() >= 1000:
        raise PstFormatError("piece-square values must stay below 1000 in magnitude")
    return pst


def load_pst(path: str | Path | None = None) -> np.ndarray:
    if path is None:
        text = resources.files("nullmove.data").joinpath("pst.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_pst(text)


def build_table(pst: np.ndarray) -> np.ndarray:
    """Fold material and piece-square values into one (16, 120) lookup keyed
    by piece code and mailbox square, signed from White's side."""
    table = np.zeros((16, 120), dtype=np.int64)
    for kind in range(1, 7):
        for s in range(64):
            table[kind, SQ120[s]] = PIECE_VALUES[kind] + pst[kind, s]
            table[kind | BLACK_BIT, SQ120[s]] = -(PIECE_VALUES[kind] + pst[kind, s ^ 56])
    return table


@lru_cache(maxsize=None)
def default_table() -> np.ndarray:
    return build_table(load_pst())


@njit(cache=True)
def evaluate_kernel(board, state, table):
    score = 0
    for s in range(64):
        sq = SQ120[s]
        p = board[sq]
        if p != EMPTY:
            score += table[p, sq]
    # keep static scores out of the mate band
    limit = MATE_THRESHOLD - 1
    if score > limit:
        score = limit
    elif score < -limit:
        score = -limit
    return score if state[SIDE] == 0 else -score


def evaluate(p: Position, table: np.ndarray | None = None) -> int:
    if table is None:
        table = default_table()
    return int(evaluate_kernel(p.board, p.state, table))


@njit(cache=True)
def is_tactical_code(m):
    captured = (m >> 18) & 15
    promo = (m >> 22) & 15
    return captured != EMPTY or (promo & 7) == QUEEN


def is_tactical(m: Move) -> bool:
    """Captures (en passant included), any capturing promotion, and queen
    promotions without capture."""
    return bool(is_tactical_code(int(m)))

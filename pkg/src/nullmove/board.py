"""Chess rules kernel.

The position lives in two int64 arrays so the compiled search can work on it
directly: ``board`` is a 10x12 mailbox (``OFF`` marks the border) and ``state``
holds the scalar game state.  :class:`Position` wraps both for Python callers.

Squares in the public API are 0..63 with a1 = 0, h8 = 63.  Internally every
square is a mailbox index (a1 = 21, h8 = 98).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

EMPTY = 0
PAWN, KNIGHT, BISHOP, ROOK, QUEEN, KING = 1, 2, 3, 4, 5, 6
WHITE, BLACK = 0, 1
BLACK_BIT = 8
OFF = 32

# state slots
SIDE, CASTLING, EP, HALFMOVE, PLY, HASH, NULLS, WKING, BKING = range(9)
NSTATE = 9

CASTLE_WK, CASTLE_WQ, CASTLE_BK, CASTLE_BQ = 1, 2, 4, 8

FLAG_CASTLE, FLAG_EP, FLAG_DOUBLE, FLAG_NULL = 1, 2, 4, 8
NULL_MOVE = FLAG_NULL << 26

MAX_MOVES = 256

# Zobrist keys come from a fixed seed so hashes (and with them TT behaviour and
# node counts) are identical on every run.
ZOBRIST_SEED = 20020906
_rng = np.random.default_rng(ZOBRIST_SEED)
Z_PIECE = _rng.integers(-(2**63), 2**63 - 1, size=(16, 120), dtype=np.int64)
Z_CASTLE = _rng.integers(-(2**63), 2**63 - 1, size=16, dtype=np.int64)
Z_EP = _rng.integers(-(2**63), 2**63 - 1, size=120, dtype=np.int64)
Z_SIDE = np.int64(_rng.integers(-(2**63), 2**63 - 1, dtype=np.int64))
del _rng

SQ120 = np.array([21 + (s % 8) + 10 * (s // 8) for s in range(64)], dtype=np.int64)
SQ64 = np.full(120, -1, dtype=np.int64)
SQ64[SQ120] = np.arange(64)

KNIGHT_STEPS = np.array([-21, -19, -12, -8, 8, 12, 19, 21], dtype=np.int64)
KING_STEPS = np.array([-11, -10, -9, -1, 1, 9, 10, 11], dtype=np.int64)
DIAGONALS = np.array([-11, -9, 9, 11], dtype=np.int64)
ORTHOGONALS = np.array([-10, -1, 1, 10], dtype=np.int64)

CASTLE_MASK = np.full(120, 15, dtype=np.int64)
CASTLE_MASK[21] = 15 & ~CASTLE_WQ
CASTLE_MASK[25] = 15 & ~(CASTLE_WK | CASTLE_WQ)
CASTLE_MASK[28] = 15 & ~CASTLE_WK
CASTLE_MASK[91] = 15 & ~CASTLE_BQ
CASTLE_MASK[95] = 15 & ~(CASTLE_BK | CASTLE_BQ)
CASTLE_MASK[98] = 15 & ~CASTLE_BK

PIECE_CHARS = ".PNBRQK"
FILES = "abcdefgh"


class FenError(ValueError):
    """Raised for malformed or illegal FEN input; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# ---------------------------------------------------------------------------
# compiled kernel


@njit(cache=True)
def encode_move(fr, to, piece, captured, promo, flags):
    return fr | (to << 7) | (piece << 14) | (captured << 18) | (promo << 22) | (flags << 26)


@njit(cache=True)
def attacked(board, sq, by):
    """True if square ``sq`` is attacked by side ``by``."""
    colour = by * BLACK_BIT
    if by == WHITE:
        if board[sq - 9] == PAWN or board[sq - 11] == PAWN:
            return True
    else:
        if board[sq + 9] == PAWN + BLACK_BIT or board[sq + 11] == PAWN + BLACK_BIT:
            return True
    for d in KNIGHT_STEPS:
        if board[sq + d] == KNIGHT + colour:
            return True
    for d in KING_STEPS:
        if board[sq + d] == KING + colour:
            return True
    for d in DIAGONALS:
        t = sq + d
        while board[t] == EMPTY:
            t += d
        p = board[t]
        if p == BISHOP + colour or p == QUEEN + colour:
            return True
    for d in ORTHOGONALS:
        t = sq + d
        while board[t] == EMPTY:
            t += d
        p = board[t]
        if p == ROOK + colour or p == QUEEN + colour:
            return True
    return False


@njit(cache=True)
def side_in_check(board, state, side):
    return attacked(board, state[WKING + side], side ^ 1)


@njit(cache=True)
def _add_pawn_move(out, n, fr, to, piece, captured, flags, promo_rank, tactical_only):
    if promo_rank:
        colour = piece & BLACK_BIT
        out[n] = encode_move(fr, to, piece, captured, QUEEN + colour, flags)
        n += 1
        if captured != EMPTY or not tactical_only:
            for kind in (ROOK, BISHOP, KNIGHT):
                out[n] = encode_move(fr, to, piece, captured, kind + colour, flags)
                n += 1
    else:
        out[n] = encode_move(fr, to, piece, captured, 0, flags)
        n += 1
    return n


@njit(cache=True)
def generate_pseudo(board, state, out, tactical_only):
    """Fill ``out`` with pseudo-legal moves; returns the count.

    With ``tactical_only`` only captures (en passant included) and promotions
    to a queen, plus capturing under-promotions, are produced.
    """
    side = state[SIDE]
    n = 0
    colour = side * BLACK_BIT
    fwd = 10 if side == WHITE else -10
    for s in range(64):
        fr = SQ120[s]
        p = board[fr]
        if p == EMPTY or (p & BLACK_BIT) != colour:
            continue
        kind = p & 7
        if kind == PAWN:
            to = fr + fwd
            rank = s >> 3
            promo = (side == WHITE and rank == 6) or (side == BLACK and rank == 1)
            if board[to] == EMPTY:
                if promo or not tactical_only:
                    n = _add_pawn_move(out, n, fr, to, p, EMPTY, 0, promo, tactical_only)
                start = (side == WHITE and rank == 1) or (side == BLACK and rank == 6)
                if start and not tactical_only and board[to + fwd] == EMPTY:
                    out[n] = encode_move(fr, to + fwd, p, EMPTY, 0, FLAG_DOUBLE)
                    n += 1
            for d in (fwd - 1, fwd + 1):
                to = fr + d
                q = board[to]
                if q != EMPTY and q != OFF and (q & BLACK_BIT) != colour:
                    n = _add_pawn_move(out, n, fr, to, p, q, 0, promo, tactical_only)
                elif to == state[EP] and q == EMPTY:
                    out[n] = encode_move(fr, to, p, PAWN + (colour ^ BLACK_BIT), 0, FLAG_EP)
                    n += 1
        elif kind == KNIGHT or kind == KING:
            steps = KNIGHT_STEPS if kind == KNIGHT else KING_STEPS
            for d in steps:
                to = fr + d
                q = board[to]
                if q == EMPTY:
                    if not tactical_only:
                        out[n] = encode_move(fr, to, p, EMPTY, 0, 0)
                        n += 1
                elif q != OFF and (q & BLACK_BIT) != colour:
                    out[n] = encode_move(fr, to, p, q, 0, 0)
                    n += 1
        else:
            for di in range(8):
                if di < 4:
                    if kind == ROOK:
                        continue
                    d = DIAGONALS[di]
                else:
                    if kind == BISHOP:
                        continue
                    d = ORTHOGONALS[di - 4]
                to = fr + d
                while True:
                    q = board[to]
                    if q == EMPTY:
                        if not tactical_only:
                            out[n] = encode_move(fr, to, p, EMPTY, 0, 0)
                            n += 1
                    else:
                        if q != OFF and (q & BLACK_BIT) != colour:
                            out[n] = encode_move(fr, to, p, q, 0, 0)
                            n += 1
                        break
                    to += d
    if not tactical_only:
        rights = state[CASTLING]
        enemy = side ^ 1
        if side == WHITE:
            if (rights & CASTLE_WK) and board[26] == EMPTY and board[27] == EMPTY:
                if not attacked(board, 25, enemy) and not attacked(board, 26, enemy) and not attacked(board, 27, enemy):
                    out[n] = encode_move(25, 27, KING, EMPTY, 0, FLAG_CASTLE)
                    n += 1
            if (rights & CASTLE_WQ) and board[24] == EMPTY and board[23] == EMPTY and board[22] == EMPTY:
                if not attacked(board, 25, enemy) and not attacked(board, 24, enemy) and not attacked(board, 23, enemy):
                    out[n] = encode_move(25, 23, KING, EMPTY, 0, FLAG_CASTLE)
                    n += 1
        else:
            bk = KING + BLACK_BIT
            if (rights & CASTLE_BK) and board[96] == EMPTY and board[97] == EMPTY:
                if not attacked(board, 95, enemy) and not attacked(board, 96, enemy) and not attacked(board, 97, enemy):
                    out[n] = encode_move(95, 97, bk, EMPTY, 0, FLAG_CASTLE)
                    n += 1
            if (rights & CASTLE_BQ) and board[94] == EMPTY and board[93] == EMPTY and board[92] == EMPTY:
                if not attacked(board, 95, enemy) and not attacked(board, 94, enemy) and not attacked(board, 93, enemy):
                    out[n] = encode_move(95, 93, bk, EMPTY, 0, FLAG_CASTLE)
                    n += 1
    return n


@njit(cache=True)
def _rook_castle_squares(to):
    if to == 27:
        return 28, 26
    if to == 23:
        return 21, 24
    if to == 97:
        return 98, 96
    return 91, 94


@njit(cache=True)
def make_move_kernel(board, state, m):
    fr = m & 127
    to = (m >> 7) & 127
    piece = (m >> 14) & 15
    captured = (m >> 18) & 15
    promo = (m >> 22) & 15
    flags = (m >> 26) & 15
    side = state[SIDE]
    h = state[HASH] ^ Z_PIECE[piece, fr]
    board[fr] = EMPTY
    if flags & FLAG_EP:
        capsq = to - 10 if side == WHITE else to + 10
        board[capsq] = EMPTY
        h ^= Z_PIECE[captured, capsq]
    elif captured != EMPTY:
        h ^= Z_PIECE[captured, to]
    placed = promo if promo != 0 else piece
    board[to] = placed
    h ^= Z_PIECE[placed, to]
    if flags & FLAG_CASTLE:
        rf, rt = _rook_castle_squares(to)
        rook = board[rf]
        board[rf] = EMPTY
        board[rt] = rook
        h ^= Z_PIECE[rook, rf] ^ Z_PIECE[rook, rt]
    if (piece & 7) == KING:
        state[WKING + side] = to
    rights = state[CASTLING]
    new_rights = rights & CASTLE_MASK[fr] & CASTLE_MASK[to]
    if new_rights != rights:
        h ^= Z_CASTLE[rights] ^ Z_CASTLE[new_rights]
        state[CASTLING] = new_rights
    ep = state[EP]
    if ep != 0:
        h ^= Z_EP[ep]
    ep = 0
    if flags & FLAG_DOUBLE:
        ep = (fr + to) >> 1
        h ^= Z_EP[ep]
    state[EP] = ep
    if (piece & 7) == PAWN or captured != EMPTY:
        state[HALFMOVE] = 0
    else:
        state[HALFMOVE] += 1
    state[PLY] += 1
    state[SIDE] = side ^ 1
    state[NULLS] = 0
    state[HASH] = h ^ Z_SIDE


@njit(cache=True)
def unmake_move_kernel(board, state, m, saved):
    fr = m & 127
    to = (m >> 7) & 127
    piece = (m >> 14) & 15
    captured = (m >> 18) & 15
    flags = (m >> 26) & 15
    board[fr] = piece
    if flags & FLAG_EP:
        board[to] = EMPTY
        if piece == PAWN:
            board[to - 10] = captured
        else:
            board[to + 10] = captured
    else:
        board[to] = captured
    if flags & FLAG_CASTLE:
        rf, rt = _rook_castle_squares(to)
        board[rf] = board[rt]
        board[rt] = EMPTY
    state[:] = saved


@njit(cache=True)
def make_null_kernel(board, state):
    h = state[HASH] ^ Z_SIDE
    if state[EP] != 0:
        h ^= Z_EP[state[EP]]
        state[EP] = 0
    state[HASH] = h
    state[SIDE] ^= 1
    state[PLY] += 1
    state[NULLS] += 1


@njit(cache=True)
def hash_from_scratch(board, state):
    h = np.int64(0)
    for s in range(64):
        sq = SQ120[s]
        p = board[sq]
        if p != EMPTY:
            h ^= Z_PIECE[p, sq]
    h ^= Z_CASTLE[state[CASTLING]]
    if state[EP] != 0:
        h ^= Z_EP[state[EP]]
    if state[SIDE] == BLACK:
        h ^= Z_SIDE
    return h


@njit(cache=True)
def king_and_pawns_only(board, side):
    colour = side * BLACK_BIT
    for s in range(64):
        p = board[SQ120[s]]
        if p != EMPTY and (p & BLACK_BIT) == colour:
            kind = p & 7
            if kind != PAWN and kind != KING:
                return False
    return True


@njit(cache=True)
def is_legal_after(board, state):
    """After a make, check the mover's king is not left attacked."""
    mover = state[SIDE] ^ 1
    return not attacked(board, state[WKING + mover], state[SIDE])


@njit(cache=True)
def legal_moves_kernel(board, state, out):
    buf = np.empty(MAX_MOVES, dtype=np.int64)
    n = generate_pseudo(board, state, buf, False)
    saved = state.copy()
    k = 0
    for i in range(n):
        m = buf[i]
        make_move_kernel(board, state, m)
        if is_legal_after(board, state):
            out[k] = m
            k += 1
        unmake_move_kernel(board, state, m, saved)
    return k


@njit(cache=True)
def _perft(board, state, depth, moves, stack, ply):
    if depth == 0:
        return 1
    n = generate_pseudo(board, state, moves[ply], False)
    stack[ply, :] = state
    total = 0
    for i in range(n):
        m = moves[ply, i]
        make_move_kernel(board, state, m)
        if is_legal_after(board, state):
            total += _perft(board, state, depth - 1, moves, stack, ply + 1)
        unmake_move_kernel(board, state, m, stack[ply])
    return total


# ---------------------------------------------------------------------------
# Python layer


def square_name(sq64: int) -> str:
    return FILES[sq64 % 8] + str(sq64 // 8 + 1)


def parse_square(name: str) -> int:
    if len(name) != 2 or name[0] not in FILES or name[1] not in "12345678":
        raise ValueError(f"bad square {name!r}")
    return FILES.index(name[0]) + 8 * (int(name[1]) - 1)


class Move(int):
    """A move packed into an int: from, to, piece, captured, promotion, flags."""

    __slots__ = ()

    @property
    def from_square(self) -> int:
        return int(SQ64[self & 127])

    @property
    def to_square(self) -> int:
        return int(SQ64[(self >> 7) & 127])

    @property
    def piece(self) -> int:
        return (self >> 14) & 15

    @property
    def captured(self) -> int:
        return (self >> 18) & 15

    @property
    def promotion(self) -> int:
        return (self >> 22) & 15

    @property
    def flags(self) -> int:
        return (self >> 26) & 15

    @property
    def is_null(self) -> bool:
        return bool(self.flags & FLAG_NULL)

    def uci(self) -> str:
        if self.is_null:
            return "0000"
        s = square_name(self.from_square) + square_name(self.to_square)
        if self.promotion:
            s += PIECE_CHARS[self.promotion & 7].lower()
        return s

    def __repr__(self) -> str:
        return f"Move({self.uci()})"

    __str__ = uci


Move.NULL = Move(NULL_MOVE)


@dataclass(frozen=True)
class UndoInfo:
    """Snapshot of the scalar state taken before a move; the move itself
    carries the captured piece."""

    move: Move
    saved_state: np.ndarray

    @property
    def castling(self) -> int:
        return int(self.saved_state[CASTLING])

    @property
    def ep_square(self) -> int:
        return int(self.saved_state[EP])

    @property
    def halfmove_clock(self) -> int:
        return int(self.saved_state[HALFMOVE])

    @property
    def hash(self) -> int:
        return int(self.saved_state[HASH]) & 0xFFFFFFFFFFFFFFFF

    @property
    def null_count(self) -> int:
        return int(self.saved_state[NULLS])


class Position:
    """Mutable game state backed by the kernel arrays."""

    __slots__ = ("board", "state")

    def __init__(self, board: np.ndarray, state: np.ndarray):
        self.board = board
        self.state = state

    @classmethod
    def from_fen(cls, fen: str) -> "Position":
        return parse_fen(fen)

    @classmethod
    def initial(cls) -> "Position":
        return parse_fen(START_FEN)

    def copy(self) -> "Position":
        return Position(self.board.copy(), self.state.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Position):
            return NotImplemented
        return bool(np.array_equal(self.board, other.board) and np.array_equal(self.state, other.state))

    def __hash__(self):
        return hash(self.zobrist)

    def __repr__(self) -> str:
        return f"Position({self.fen()!r})"

    @property
    def side_to_move(self) -> int:
        return int(self.state[SIDE])

    @property
    def castling(self) -> int:
        return int(self.state[CASTLING])

    @property
    def ep_square(self) -> int | None:
        ep = int(self.state[EP])
        return int(SQ64[ep]) if ep else None

    @property
    def halfmove_clock(self) -> int:
        return int(self.state[HALFMOVE])

    @property
    def ply(self) -> int:
        return int(self.state[PLY])

    @property
    def fullmove_number(self) -> int:
        return self.ply // 2 + 1

    @property
    def zobrist(self) -> int:
        """64-bit hash as an unsigned int."""
        return int(self.state[HASH]) & 0xFFFFFFFFFFFFFFFF

    @property
    def null_count(self) -> int:
        return int(self.state[NULLS])

    def piece_at(self, sq64: int) -> tuple[int, int] | None:
        """(kind, colour) on a square, or None."""
        p = int(self.board[SQ120[sq64]])
        if p == EMPTY:
            return None
        return p & 7, p >> 3

    def king_square(self, side: int) -> int:
        return int(SQ64[self.state[WKING + side]])

    def piece_count(self) -> int:
        return int(np.count_nonzero((self.board != EMPTY) & (self.board != OFF)))

    def recomputed_hash(self) -> int:
        return int(hash_from_scratch(self.board, self.state)) & 0xFFFFFFFFFFFFFFFF

    def mirror(self) -> "Position":
        """Vertical mirror with colours and side to move swapped."""
        board = np.full(120, OFF, dtype=np.int64)
        for s in range(64):
            p = int(self.board[SQ120[s]])
            board[SQ120[s ^ 56]] = p ^ BLACK_BIT if p != EMPTY else EMPTY
        rights = self.castling
        mirrored_rights = ((rights & 3) << 2) | ((rights >> 2) & 3)
        state = np.zeros(NSTATE, dtype=np.int64)
        state[SIDE] = self.side_to_move ^ 1
        state[CASTLING] = mirrored_rights
        ep = self.ep_square
        state[EP] = SQ120[ep ^ 56] if ep is not None else 0
        state[HALFMOVE] = self.halfmove_clock
        state[PLY] = self.ply
        state[NULLS] = self.null_count
        state[WKING] = SQ120[self.king_square(BLACK) ^ 56]
        state[BKING] = SQ120[self.king_square(WHITE) ^ 56]
        state[HASH] = hash_from_scratch(board, state)
        return Position(board, state)

    def fen(self) -> str:
        rows = []
        for rank in range(7, -1, -1):
            row, empties = "", 0
            for file in range(8):
                p = int(self.board[SQ120[rank * 8 + file]])
                if p == EMPTY:
                    empties += 1
                    continue
                if empties:
                    row += str(empties)
                    empties = 0
                ch = PIECE_CHARS[p & 7]
                row += ch.lower() if p & BLACK_BIT else ch
            if empties:
                row += str(empties)
            rows.append(row)
        rights = "".join(c for bit, c in zip((1, 2, 4, 8), "KQkq") if self.castling & bit) or "-"
        ep = square_name(self.ep_square) if self.ep_square is not None else "-"
        side = "w" if self.side_to_move == WHITE else "b"
        return f"{'/'.join(rows)} {side} {rights} {ep} {self.halfmove_clock} {self.fullmove_number}"

    def epd_fields(self) -> str:
        return " ".join(self.fen().split()[:4])


START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1"


def parse_fen(text: str) -> Position:
    fields = text.split()
    if not 4 <= len(fields) <= 6:
        raise FenError("fields", f"expected 4 to 6 fields, got {len(fields)}")
    placement, side, rights, ep = fields[:4]

    board = np.full(120, OFF, dtype=np.int64)
    board[SQ120] = EMPTY
    ranks = placement.split("/")
    if len(ranks) != 8:
        raise FenError("placement", f"expected 8 ranks, got {len(ranks)}")
    kings = {WHITE: [], BLACK: []}
    for i, row in enumerate(ranks):
        rank = 7 - i
        file = 0
        for ch in row:
            if ch.isdigit() and ch != "0":
                file += int(ch)
                continue
            kind = PIECE_CHARS.find(ch.upper())
            if kind <= 0 or file > 7:
                raise FenError("placement", f"bad rank {row!r}")
            colour = WHITE if ch.isupper() else BLACK
            if kind == PAWN and rank in (0, 7):
                raise FenError("placement", f"pawn on back rank in {row!r}")
            board[SQ120[rank * 8 + file]] = kind + colour * BLACK_BIT
            if kind == KING:
                kings[colour].append(SQ120[rank * 8 + file])
            file += 1
        if file != 8:
            raise FenError("placement", f"rank {row!r} does not describe 8 squares")
    for colour, name in ((WHITE, "white"), (BLACK, "black")):
        if len(kings[colour]) != 1:
            raise FenError("placement", f"expected exactly one {name} king, found {len(kings[colour])}")

    if side not in ("w", "b"):
        raise FenError("side", f"expected 'w' or 'b', got {side!r}")
    state = np.zeros(NSTATE, dtype=np.int64)
    state[SIDE] = WHITE if side == "w" else BLACK
    state[WKING] = kings[WHITE][0]
    state[BKING] = kings[BLACK][0]

    if rights != "-" and (not rights or any(c not in "KQkq" for c in rights)):
        raise FenError("castling", f"bad castling field {rights!r}")
    mask = 0
    for bit, ch, king_sq, rook_sq, colour in (
        (CASTLE_WK, "K", 25, 28, 0),
        (CASTLE_WQ, "Q", 25, 21, 0),
        (CASTLE_BK, "k", 95, 98, BLACK_BIT),
        (CASTLE_BQ, "q", 95, 91, BLACK_BIT),
    ):
        # rights that the placement cannot support are dropped
        if ch in rights and board[king_sq] == KING + colour and board[rook_sq] == ROOK + colour:
            mask |= bit
    state[CASTLING] = mask

    if ep != "-":
        try:
            ep_sq = parse_square(ep)
        except ValueError:
            raise FenError("en_passant", f"bad square {ep!r}") from None
        expected_rank = 5 if state[SIDE] == WHITE else 2
        if ep_sq // 8 != expected_rank or board[SQ120[ep_sq]] != EMPTY:
            raise FenError("en_passant", f"{ep} is not a valid en-passant target")
        state[EP] = SQ120[ep_sq]

    try:
        half = int(fields[4]) if len(fields) > 4 else 0
        full = int(fields[5]) if len(fields) > 5 else 1
    except ValueError:
        raise FenError("clocks", "move counters must be integers") from None
    if half < 0 or full < 1:
        raise FenError("clocks", "move counters out of range")
    state[HALFMOVE] = half
    state[PLY] = 2 * (full - 1) + state[SIDE]

    if side_in_check(board, state, state[SIDE] ^ 1):
        raise FenError("placement", "illegal position: side not to move is in check")
    state[HASH] = hash_from_scratch(board, state)
    return Position(board, state)


def generate_moves(p: Position) -> list[Move]:
    """Legal moves ordered by from-square, then to-square, then promotion."""
    buf = np.empty(MAX_MOVES, dtype=np.int64)
    n = legal_moves_kernel(p.board, p.state, buf)
    moves = [Move(int(m)) for m in buf[:n]]
    moves.sort(key=lambda m: (m.from_square, m.to_square, -m.promotion))
    return moves


def make_move(p: Position, m: Move) -> UndoInfo:
    undo = UndoInfo(m, p.state.copy())
    make_move_kernel(p.board, p.state, int(m))
    return undo


def unmake_move(p: Position, m: Move, undo: UndoInfo) -> None:
    unmake_move_kernel(p.board, p.state, int(m), undo.saved_state)


def make_null_move(p: Position) -> UndoInfo:
    if in_check(p):
        raise ValueError("null move while in check")
    if p.null_count:
        raise ValueError("two null moves in a row")
    undo = UndoInfo(Move.NULL, p.state.copy())
    make_null_kernel(p.board, p.state)
    return undo


def unmake_null_move(p: Position, undo: UndoInfo) -> None:
    p.state[:] = undo.saved_state


def in_check(p: Position) -> bool:
    return bool(side_in_check(p.board, p.state, p.state[SIDE]))


def only_king_and_pawns(p: Position, side: int) -> bool:
    return bool(king_and_pawns_only(p.board, side))


def perft(p: Position, depth: int) -> int:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    moves = np.empty((depth + 1, MAX_MOVES), dtype=np.int64)
    stack = np.empty((depth + 1, NSTATE), dtype=np.int64)
    return int(_perft(p.board, p.state, depth, moves, stack, 0))


def divide(p: Position, depth: int) -> list[tuple[Move, int]]:
    """Per-root-move perft breakdown."""
    if depth < 1:
        raise ValueError("divide needs depth >= 1")
    rows = []
    for m in generate_moves(p):
        undo = make_move(p, m)
        rows.append((m, perft(p, depth - 1)))
        unmake_move(p, m, undo)
    return rows
